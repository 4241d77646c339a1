//! Small named structures, shipped as documents under `corpus/`.
//!
//! Everything returned by [`corpus`] is valid; [`invalid_examples`] holds
//! documents that are well formed but fail an axiom.

use crate::algebra::{OpAlgebra, Table};
use crate::groupoid::{coset_cover, FinGroupoid, GpdAction};
use crate::internal::{lift_internal_structure, InternalAction, InternalGroupoid, InternalMorphism};
use crate::io::{Document, Structure};
use crate::xmod::{cover_correspondence, internal_to_xmod, CrossedModule, XModMorphism};

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Table {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

/// `Z/n` with multiplication mod `n`.
pub fn zn_ring(n: usize) -> OpAlgebra {
    OpAlgebra::cyclic(n)
        .with_self_opposite("*", table(n, |a, b| a * b % n))
        .expect("well shaped")
}

/// `Z/n` with zero multiplication.
pub fn zero_ring(n: usize) -> OpAlgebra {
    OpAlgebra::cyclic(n)
        .with_self_opposite("*", table(n, |_, _| 0))
        .expect("well shaped")
}

pub fn klein() -> OpAlgebra {
    OpAlgebra::from_add_table(table(4, |a, b| a ^ b)).expect("well shaped")
}

/// Rotations `r` and flips `f` at index `r + 3f`, composed as
/// `(r, f) + (r', f') = (r ± r', f + f')`.
pub fn s3() -> OpAlgebra {
    OpAlgebra::from_add_table(table(6, |a, b| {
        let (r1, f1, r2, f2) = (a % 3, a / 3, b % 3, b / 3);
        let r = if f1 == 0 { (r1 + r2) % 3 } else { (r1 + 3 - r2) % 3 };
        r + 3 * (f1 ^ f2)
    }))
    .expect("well shaped")
}

/// Matrices `[[a, b], [0, 0]]` over `Z/2` at index `a + 2b`: a ring
/// whose multiplication is not commutative.
pub fn row_ring() -> OpAlgebra {
    let mul = table(4, |x, y| {
        let (a, c, d) = (x & 1, y & 1, y >> 1);
        (a * c) | ((a * d) << 1)
    });
    OpAlgebra::from_add_table(table(4, |a, b| a ^ b))
        .and_then(|a| a.with_binary("*", mul))
        .expect("well shaped")
}

/// The normal subgroup of rotations included in `S3`, acting by
/// conjugation.
pub fn rotations_in_s3() -> CrossedModule {
    let b = s3();
    let (a, old) = b.restrict(&[0, 1, 2]).expect("rotations form a subgroup");
    let dot = b
        .elements()
        .map(|x| {
            old.iter()
                .map(|&k| old.binary_search(&b.conj(x, k)).expect("normal"))
                .collect()
        })
        .collect();
    CrossedModule::new(a, b, old.clone(), dot, Vec::new()).expect("well shaped")
}

/// `id: A → A` with `A` acting on itself by conjugation and by its
/// operations.
pub fn identity_xmod(a: &OpAlgebra) -> CrossedModule {
    let dot = a
        .elements()
        .map(|b| a.elements().map(|x| a.conj(b, x)).collect())
        .collect();
    let stars = a
        .binary_ops()
        .iter()
        .map(|op| (op.name.clone(), op.table.clone()))
        .collect();
    CrossedModule::new(a.clone(), a.clone(), a.elements().collect(), dot, stars).expect("well shaped")
}

/// Reduction mod 2 from the one-object `Z/4` to the one-object `Z/2`:
/// surjective, but not a covering.
pub fn z4_mod2() -> InternalMorphism {
    let s = InternalGroupoid::one_object(&OpAlgebra::cyclic(4));
    let t = InternalGroupoid::one_object(&OpAlgebra::cyclic(2));
    InternalMorphism::new(s, t, vec![0, 1, 0, 1], vec![0]).expect("well shaped")
}

fn doc(name: &str, comment: &str, s: Structure) -> Document {
    Document::new(s).named(name).with_comment(comment)
}

/// File stems and documents, in a fixed order.
pub fn corpus() -> Vec<(String, Document)> {
    use Structure::{Action, Algebra, Groupoid, Internal, Morphism, XMod};
    let z4 = OpAlgebra::cyclic(4);
    let z4_gpd = FinGroupoid::one_object(4, 0, |a, b| (a + b) % 4).expect("well shaped");
    let z4_int = InternalGroupoid::one_object(&z4);
    let zr_int = InternalGroupoid::one_object(&zero_ring(4));
    let cc = coset_cover(&z4_gpd, 0, &[0, 2]).expect("subgroup");
    let universal = coset_cover(&z4_gpd, 0, &[0]).expect("subgroup");
    let lift = lift_internal_structure(&z4_int, &[0, 2]).expect("subobject");
    let zr_lift = lift_internal_structure(&zr_int, &[0, 2]).expect("subobject");
    let lift_action = InternalAction::new(
        z4_int.clone(),
        lift.cosets.action.clone(),
        lift.cover.object_alg.clone(),
    )
    .expect("shaped");
    let corr = cover_correspondence(&lift.projection).expect("valid cover");
    let mod2_corr = cover_correspondence(&z4_mod2()).expect("valid morphism");
    let pair_r4 = InternalGroupoid::indiscrete(&zn_ring(4));
    let mut items = vec![
        ("z4", "cyclic group of order 4", Algebra(z4.clone())),
        ("klein", "Klein four-group", Algebra(klein())),
        ("s3", "symmetric group on three letters", Algebra(s3())),
        ("r4", "integers mod 4 with multiplication", Algebra(zn_ring(4))),
        ("zero-ring4", "Z/4 with zero multiplication", Algebra(zero_ring(4))),
        (
            "r4-commutative",
            "integers mod 4 with a declared identity",
            Algebra(zn_ring(4).with_identity("x*y = y*x").expect("known ops")),
        ),
        (
            "row-ring",
            "2x2 matrices over Z/2 with zero second row",
            Algebra(row_ring()),
        ),
        (
            "z4-negation",
            "Z/4 with negation as a unary operation",
            Algebra(z4.clone().with_unary("w", vec![0, 3, 2, 1]).expect("shaped")),
        ),
        ("z4-group", "Z/4 as a one-object groupoid", Groupoid(z4_gpd.clone())),
        (
            "discrete2",
            "two objects, identities only",
            Groupoid(FinGroupoid::discrete(2)),
        ),
        (
            "z4-cover-groupoid",
            "the cover of Z/4 at {0,2}",
            Groupoid(cc.groupoid.clone()),
        ),
        (
            "z4-internal",
            "Z/4 as a one-object internal groupoid",
            Internal(z4_int.clone()),
        ),
        (
            "klein-internal",
            "one-object internal groupoid on the Klein group",
            Internal(InternalGroupoid::one_object(&klein())),
        ),
        (
            "zero-ring4-internal",
            "one-object internal groupoid on the zero ring",
            Internal(zr_int.clone()),
        ),
        (
            "r4-discrete",
            "discrete internal groupoid on Z/4 with multiplication",
            Internal(InternalGroupoid::discrete(&zn_ring(4))),
        ),
        (
            "r4-indiscrete",
            "pairs of elements of Z/4 with multiplication",
            Internal(pair_r4.clone()),
        ),
        (
            "z4-lift",
            "internal cover of Z/4 at {0,2}",
            Internal(lift.cover.clone()),
        ),
        (
            "zero-ring4-lift",
            "internal cover of the zero ring at {0,2}",
            Internal(zr_lift.cover.clone()),
        ),
        (
            "s3-internal",
            "internal groupoid of the rotations in S3",
            Internal(crate::xmod::xmod_to_internal(&rotations_in_s3()).expect("valid")),
        ),
        ("xmod-rotations", "rotations included in S3", XMod(rotations_in_s3())),
        ("xmod-id-z4", "identity crossed module on Z/4", XMod(identity_xmod(&z4))),
        (
            "xmod-id-zero-ring",
            "identity crossed module on the zero ring",
            XMod(identity_xmod(&zero_ring(4))),
        ),
        (
            "xmod-id-r4",
            "identity crossed module on Z/4 with multiplication",
            XMod(identity_xmod(&zn_ring(4))),
        ),
        (
            "xmod-trivial-z3",
            "zero group mapped into Z/3",
            XMod(
                CrossedModule::with_trivial_action(OpAlgebra::cyclic(1), OpAlgebra::cyclic(3), vec![0])
                    .expect("shaped"),
            ),
        ),
        (
            "xmod-z4-lift",
            "crossed module of the internal cover at {0,2}",
            XMod(internal_to_xmod(&lift.cover).expect("valid")),
        ),
        (
            "xmod-r4-indiscrete",
            "crossed module of the pair groupoid on R4",
            XMod(internal_to_xmod(&pair_r4).expect("valid")),
        ),
        (
            "action-z4-canonical",
            "Z/4 acting on its one object",
            Action(GpdAction::canonical(&z4_gpd)),
        ),
        (
            "action-z4-cosets",
            "Z/4 acting on the cosets of {0,2}",
            Action(cc.action.clone()),
        ),
        (
            "action-z4-internal-cosets",
            "internal action on the cosets of {0,2}",
            Structure::InternalAction(lift_action),
        ),
        (
            "cover-z4-half",
            "cover of Z/4 with characteristic group {0,2}",
            Morphism {
                map: cc.projection.clone(),
                basepoint: Some(cc.base),
                covering: Some(true),
            },
        ),
        (
            "cover-z4-universal",
            "universal cover of Z/4",
            Morphism {
                map: universal.projection.clone(),
                basepoint: Some(universal.base),
                covering: Some(true),
            },
        ),
        (
            "cover-z4-internal",
            "internal cover of Z/4 at {0,2}",
            Structure::InternalMorphism {
                map: lift.projection.clone(),
                basepoint: Some(lift.base),
                covering: Some(true),
            },
        ),
        (
            "cover-zero-ring4-internal",
            "internal cover of the zero ring at {0,2}",
            Structure::InternalMorphism {
                map: zr_lift.projection.clone(),
                basepoint: Some(zr_lift.base),
                covering: Some(true),
            },
        ),
        (
            "morphism-z4-mod2",
            "reduction mod 2, surjective but not a covering",
            Structure::InternalMorphism {
                map: z4_mod2(),
                basepoint: None,
                covering: Some(false),
            },
        ),
        (
            "xmor-z4-lift",
            "crossed-module morphism of the internal cover at {0,2}",
            Structure::XModMorphism {
                map: corr,
                cover: Some(true),
            },
        ),
        (
            "xmor-z4-mod2",
            "crossed-module morphism of reduction mod 2",
            Structure::XModMorphism {
                map: mod2_corr,
                cover: Some(false),
            },
        ),
        (
            "xmor-id-s3",
            "identity on the rotations in S3",
            Structure::XModMorphism {
                map: XModMorphism::identity(&rotations_in_s3()),
                cover: Some(true),
            },
        ),
    ];
    items
        .drain(..)
        .map(|(stem, comment, s)| (stem.to_string(), doc(stem, comment, s)))
        .collect()
}

/// Well-formed documents that fail an axiom.
pub fn invalid_examples() -> Vec<(String, Document)> {
    vec![
        (
            "r4-one-object".to_string(),
            doc(
                "r4-one-object",
                "Z/4 with multiplication as a one-object groupoid: interchange fails for *",
                Structure::Internal(InternalGroupoid::one_object(&zn_ring(4))),
            ),
        ),
        (
            "row-ring-one-object".to_string(),
            doc(
                "row-ring-one-object",
                "interchange fails for a noncommutative multiplication",
                Structure::Internal(InternalGroupoid::one_object(&row_ring())),
            ),
        ),
    ]
}
