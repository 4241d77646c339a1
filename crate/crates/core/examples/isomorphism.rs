//! The isomorphism search: a shuffled copy of S3 is found isomorphic to the
//! original, Z6 is not.

use opgroupoid::algebra::OpAlgebra;
use opgroupoid::corpus::s3;
use opgroupoid::oracle::{find_algebra_iso, IsoWitness};

fn main() -> opgroupoid::Result<()> {
    let a = s3();
    let shuffled = a.relabel(&[3, 5, 0, 1, 4, 2])?;
    match find_algebra_iso(&a, &shuffled)? {
        IsoWitness::Found(maps) => println!("S3 ≅ shuffled S3 via {:?}", maps[0]),
        IsoWitness::None { explored } => println!("no isomorphism after {explored} nodes"),
    }
    match find_algebra_iso(&a, &OpAlgebra::cyclic(6))? {
        IsoWitness::Found(_) => println!("unexpected isomorphism"),
        IsoWitness::None { explored } => println!("S3 ≇ Z6 ({explored} search nodes)"),
    }
    Ok(())
}
