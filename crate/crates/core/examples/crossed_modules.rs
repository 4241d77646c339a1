//! Crossed modules and internal groupoids, back and forth, and the
//! crossed-module side of an internal covering.

use opgroupoid::corpus::{rotations_in_s3, z4_mod2};
use opgroupoid::internal::{lift_internal_structure, InternalGroupoid};
use opgroupoid::oracle::find_xmod_iso;
use opgroupoid::xmod::{cover_correspondence, internal_to_xmod, is_xmod_cover, validate_xmod, xmod_to_internal};

fn main() -> opgroupoid::Result<()> {
    let x = rotations_in_s3();
    println!("rotations in S3: {}", validate_xmod(&x)?);
    let g = xmod_to_internal(&x)?;
    println!("internal groupoid: {} objects, {} arrows", g.gpd.n_objects(), g.gpd.n_arrows());
    let y = internal_to_xmod(&g)?;
    println!("round trip isomorphic: {}", find_xmod_iso(&x, &y)?.is_found());

    let z4 = InternalGroupoid::one_object(&opgroupoid::algebra::OpAlgebra::cyclic(4));
    let cover = lift_internal_structure(&z4, &[0, 2])?.projection;
    println!("internal cover -> xmod cover: {}", is_xmod_cover(&cover_correspondence(&cover)?)?);
    println!("reduction mod 2 -> xmod cover: {}", is_xmod_cover(&cover_correspondence(&z4_mod2())?)?);
    Ok(())
}
