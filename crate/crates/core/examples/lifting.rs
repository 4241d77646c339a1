//! Lifting a map through a covering exists exactly when characteristic
//! groups are nested; between two covers it gives a map of covers.

use opgroupoid::groupoid::{coset_cover, cover_between_covers, lift_morphism, FinGroupoid};

fn main() -> opgroupoid::Result<()> {
    let g = FinGroupoid::one_object(4, 0, |a, b| (a + b) % 4)?;
    let universal = coset_cover(&g, 0, &[0])?;
    let half = coset_cover(&g, 0, &[0, 2])?;

    let up = lift_morphism(&half.projection, &universal.projection, universal.base, half.base)?;
    println!("{{0}} ⊆ {{0,2}}: lifted, object map {:?}", up.object_map);

    match lift_morphism(&universal.projection, &half.projection, half.base, universal.base) {
        Ok(_) => println!("unexpected lift"),
        Err(e) => println!("{{0,2}} ⊄ {{0}}: {e}"),
    }

    let r = cover_between_covers(&universal.projection, universal.base, &half.projection, half.base)?;
    let agrees = r.then(&half.projection)? == universal.projection;
    println!("r: {} objects onto {}, q∘r = p: {agrees}", r.source.n_objects(), r.target.n_objects());
    Ok(())
}
