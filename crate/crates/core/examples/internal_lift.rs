//! Lifting the group structure of the one-object groupoid on Z4 to its
//! coset covers, and what happens for R4, whose one-object groupoid
//! breaks the interchange law.

use opgroupoid::algebra::OpAlgebra;
use opgroupoid::corpus::zn_ring;
use opgroupoid::internal::{lift_candidates, lift_internal_structure, validate_internal, InternalGroupoid};

fn main() -> opgroupoid::Result<()> {
    let g = InternalGroupoid::one_object(&OpAlgebra::cyclic(4));
    for c in lift_candidates(&g)? {
        let l = lift_internal_structure(&g, &c)?;
        println!(
            "Z4, C = {c:?}: cover with {} objects and {} arrows, internal: {}",
            l.cover.gpd.n_objects(),
            l.cover.gpd.n_arrows(),
            validate_internal(&l.cover)?
        );
    }

    let r4 = InternalGroupoid::one_object(&zn_ring(4));
    println!("R4 one-object groupoid: {}", validate_internal(&r4)?.violations()[0]);
    if let Err(e) = lift_internal_structure(&r4, &[0, 2]) {
        println!("R4, C = [0, 2]: {e}");
    }
    Ok(())
}
