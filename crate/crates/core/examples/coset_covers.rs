//! The coset cover of a groupoid for every subgroup of an object group,
//! with its characteristic group.

use opgroupoid::corpus::s3;
use opgroupoid::groupoid::{characteristic_group, coset_cover, is_universal_cover, subgroups, FinGroupoid};

fn main() -> opgroupoid::Result<()> {
    let a = s3();
    let g = FinGroupoid::one_object(a.size(), a.zero(), |x, y| a.add(x, y))?;
    for c in subgroups(&g, 0)? {
        let cc = coset_cover(&g, 0, &c)?;
        let p = &cc.projection;
        println!(
            "C = {:?}: {} objects, {} arrows, characteristic group {:?}, universal {}",
            c,
            p.source.n_objects(),
            p.source.n_arrows(),
            characteristic_group(p, cc.base)?,
            is_universal_cover(p)?
        );
    }
    Ok(())
}
