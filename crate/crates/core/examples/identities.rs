//! Checking equations such as associativity of a ring multiplication.

use opgroupoid::algebra::{check_identity, Identity};
use opgroupoid::corpus::{row_ring, zn_ring};

fn main() -> opgroupoid::Result<()> {
    let assoc = Identity::parse("x*(y*z) = (x*y)*z")?;
    let comm = Identity::parse("x*y = y*x")?;
    for (name, ring) in [("Z/4", zn_ring(4)), ("row matrices over Z/2", row_ring())] {
        for id in [&assoc, &comm] {
            let r = check_identity(&ring, id)?;
            println!("{name}: {} -> {}", id.text(), if r.is_ok() { "holds".to_string() } else { r.to_string() });
        }
    }
    // declared identities are part of validation
    let declared = zn_ring(4).with_identity("x*y = y*x")?;
    println!("Z/4 with commutativity declared: {}", opgroupoid::algebra::validate_algebra(&declared));
    Ok(())
}
