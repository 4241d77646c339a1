//! Derived actions: the negation action of Z2 on Z4 is derived, the
//! doubling "action" is not, and the failure shows up as a broken axiom of
//! the semidirect product.

use opgroupoid::algebra::{check_derived_action, is_derived_action, semidirect_product, DerivedActionData, OpAlgebra};

fn main() -> opgroupoid::Result<()> {
    let (z2, z4) = (OpAlgebra::cyclic(2), OpAlgebra::cyclic(4));

    let negate = vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]];
    let act = DerivedActionData::new(z2.clone(), z4.clone(), negate, Vec::new())?;
    let d8 = semidirect_product(&act);
    println!("Z2 acting on Z4 by -1: derived = {}", is_derived_action(&act));
    println!("  B ⋉ A has {} elements, abelian = {}", d8.size(), d8.is_abelian());

    let doubling = vec![vec![0, 1, 2, 3], vec![0, 2, 0, 2]];
    let act = DerivedActionData::new(z2, z4, doubling, Vec::new())?;
    println!("Z2 acting on Z4 by doubling: derived = {}", is_derived_action(&act));
    for v in check_derived_action(&act).violations().iter().take(3) {
        println!("  {v}");
    }
    Ok(())
}
