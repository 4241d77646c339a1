//! Crossed modules of groups with operations, their morphisms and covers,
//! and the translation to and from internal groupoids.
//!
//! The internal groupoid of a crossed module `α: A → B` has objects `B` and
//! arrows the semidirect product `B ⋉ A`, with
//!
//! ```text
//! d₀(b, a) = b        d₁(b, a) = b + α(a)        ε(b) = (b, 0)
//! (b, a) ∘ (b + α(a), a') = (b, a + a')
//! ```
//!
//! In the other direction `A = Ker d₀`, `α = d₁|A`, `b·a = ε(b) + a − ε(b)`
//! and `b⋆a = ε(b) ⋆ a`.

use crate::algebra::{
    check_derived_action, check_homomorphism, is_bijection, semidirect_product, validate_algebra, DerivedActionData,
    OpAlgebra, Table,
};
use crate::error::{Error, Result};
use crate::groupoid::FinGroupoid;
use crate::internal::{require_internal, InternalGroupoid, InternalMorphism};
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub alpha: Vec<usize>,
    pub action: DerivedActionData,
}

impl CrossedModule {
    pub fn new(a: OpAlgebra, b: OpAlgebra, alpha: Vec<usize>, dot: Table, stars: Vec<(String, Table)>) -> Result<Self> {
        crate::algebra::check_map_shape("alpha", &alpha, a.size(), b.size())?;
        let action = DerivedActionData::new(b, a, dot, stars)?;
        Ok(CrossedModule { alpha, action })
    }

    /// `α: A → B` with `B` acting trivially.
    pub fn with_trivial_action(a: OpAlgebra, b: OpAlgebra, alpha: Vec<usize>) -> Result<Self> {
        crate::algebra::check_map_shape("alpha", &alpha, a.size(), b.size())?;
        Ok(CrossedModule {
            alpha,
            action: DerivedActionData::trivial(b, a)?,
        })
    }

    pub fn a(&self) -> &OpAlgebra {
        self.action.acted()
    }

    pub fn b(&self) -> &OpAlgebra {
        self.action.actor()
    }
}

fn require_component(alg: &OpAlgebra, name: &str) -> Result<()> {
    let r = validate_algebra(alg);
    if r.is_ok() {
        Ok(())
    } else {
        Err(Error::component(name, r))
    }
}

/// Derived-action validity (scoped `semidirect`), `α` a homomorphism and
/// CM1–CM4. Invalid `A` or `B` is an error.
pub fn validate_xmod(x: &CrossedModule) -> Result<ValidationReport> {
    let (a, b, act) = (x.a(), x.b(), &x.action);
    require_component(a, "A")?;
    require_component(b, "B")?;
    let mut r = check_homomorphism(a, b, &x.alpha, "alpha")?;
    r.merge(check_derived_action(act));
    let al = &x.alpha;
    for bb in b.elements() {
        for aa in a.elements() {
            if al[act.dot(bb, aa)] != b.conj(bb, al[aa]) {
                r.fail("xmod.cm1", &[], &[bb, aa], "α(b·a) != b + α(a) − b");
            }
        }
    }
    for a1 in a.elements() {
        for a2 in a.elements() {
            if act.dot(al[a1], a2) != a.conj(a1, a2) {
                r.fail("xmod.cm2", &[], &[a1, a2], "α(a)·a' != a + a' − a");
            }
        }
    }
    for (k, op) in a.binary_ops().iter().enumerate() {
        let op_b = &b.binary_ops()[k];
        let labels = [op.name.as_str()];
        for a1 in a.elements() {
            for a2 in a.elements() {
                if act.star(k, al[a1], a2) != op.apply(a1, a2) {
                    r.fail("xmod.cm3", &labels, &[a1, a2], "α(a)⋆a' != a⋆a'");
                }
            }
        }
        for bb in b.elements() {
            for aa in a.elements() {
                if al[act.star(k, bb, aa)] != op_b.apply(bb, al[aa]) {
                    r.fail("xmod.cm4_left", &labels, &[bb, aa], "α(b⋆a) != b⋆α(a)");
                }
                if al[act.star_right(k, aa, bb)] != op_b.apply(al[aa], bb) {
                    r.fail("xmod.cm4_right", &labels, &[aa, bb], "α(a⋆b) != α(a)⋆b");
                }
            }
        }
    }
    Ok(r)
}

pub(crate) fn require_xmod(x: &CrossedModule, component: &str) -> Result<()> {
    match validate_xmod(x) {
        Ok(r) if r.is_ok() => Ok(()),
        Ok(r) | Err(Error::ComponentInvalid { report: r, .. }) => Err(Error::component(component, r)),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModMorphism {
    pub source: CrossedModule,
    pub target: CrossedModule,
    pub f1: Vec<usize>,
    pub f2: Vec<usize>,
}

impl XModMorphism {
    pub fn new(source: CrossedModule, target: CrossedModule, f1: Vec<usize>, f2: Vec<usize>) -> Result<Self> {
        source.a().same_signature(target.a())?;
        crate::algebra::check_map_shape("f1", &f1, source.a().size(), target.a().size())?;
        crate::algebra::check_map_shape("f2", &f2, source.b().size(), target.b().size())?;
        Ok(XModMorphism { source, target, f1, f2 })
    }

    pub fn identity(x: &CrossedModule) -> Self {
        XModMorphism {
            source: x.clone(),
            target: x.clone(),
            f1: x.a().elements().collect(),
            f2: x.b().elements().collect(),
        }
    }
}

/// `f₁`, `f₂` homomorphisms, `f₂α = α'f₁`, `f₁(b·a) = f₂(b)·f₁(a)` and
/// `f₁(b⋆a) = f₂(b)⋆f₁(a)`. Invalid source or target is an error.
pub fn check_xmod_morphism(m: &XModMorphism) -> Result<ValidationReport> {
    require_xmod(&m.source, "source")?;
    require_xmod(&m.target, "target")?;
    let (s, t) = (&m.source, &m.target);
    let mut r = check_homomorphism(s.a(), t.a(), &m.f1, "f1")?;
    r.merge(check_homomorphism(s.b(), t.b(), &m.f2, "f2")?);
    for a in s.a().elements() {
        if m.f2[s.alpha[a]] != t.alpha[m.f1[a]] {
            r.fail("xmod_morphism.alpha", &[], &[a], "f₂α(a) != α'f₁(a)");
        }
    }
    for b in s.b().elements() {
        for a in s.a().elements() {
            if m.f1[s.action.dot(b, a)] != t.action.dot(m.f2[b], m.f1[a]) {
                r.fail("xmod_morphism.dot", &[], &[b, a], "f₁(b·a) != f₂(b)·f₁(a)");
            }
            for (k, op) in s.a().binary_ops().iter().enumerate() {
                if m.f1[s.action.star(k, b, a)] != t.action.star(k, m.f2[b], m.f1[a]) {
                    r.fail("xmod_morphism.star", &[&op.name], &[b, a], "f₁(b⋆a) != f₂(b)⋆f₁(a)");
                }
            }
        }
    }
    Ok(r)
}

pub fn is_xmod_morphism(m: &XModMorphism) -> Result<bool> {
    Ok(check_xmod_morphism(m)?.is_ok())
}

/// A morphism whose `f₁` is an isomorphism.
pub fn is_xmod_cover(m: &XModMorphism) -> Result<bool> {
    let r = check_xmod_morphism(m)?;
    if !r.is_ok() {
        return Err(Error::InvalidMorphism(r));
    }
    Ok(is_bijection(&m.f1, m.target.a().size()))
}

pub fn internal_to_xmod(g: &InternalGroupoid) -> Result<CrossedModule> {
    require_internal(g, "internal")?;
    let (gp, ar) = (&g.gpd, &g.arrow_alg);
    let kernel = g.kernel_d0();
    let (a, old) = ar.restrict(&kernel)?;
    let b = g.object_alg.clone();
    let new_of = |arrow: usize| old.binary_search(&arrow).expect("stays in Ker d₀");
    let alpha = old.iter().map(|&k| gp.tgt(k)).collect();
    let eps = |x: usize| gp.identity(x);
    let dot = b
        .elements()
        .map(|x| old.iter().map(|&k| new_of(ar.conj(eps(x), k))).collect())
        .collect();
    let stars = ar
        .binary_ops()
        .iter()
        .map(|op| {
            let t = b
                .elements()
                .map(|x| old.iter().map(|&k| new_of(op.apply(eps(x), k))).collect())
                .collect();
            (op.name.clone(), t)
        })
        .collect();
    let x = CrossedModule::new(a, b, alpha, dot, stars)?;
    require_xmod(&x, "xmod")?;
    Ok(x)
}

pub fn xmod_to_internal(x: &CrossedModule) -> Result<InternalGroupoid> {
    require_xmod(x, "xmod")?;
    let (a, b, act) = (x.a(), x.b(), &x.action);
    let arrows = semidirect_product(act);
    let n = arrows.size();
    let d0: Vec<usize> = (0..n).map(|i| act.unpair(i).0).collect();
    let d1: Vec<usize> = (0..n)
        .map(|i| {
            let (bb, aa) = act.unpair(i);
            b.add(bb, x.alpha[aa])
        })
        .collect();
    let eps = b.elements().map(|bb| act.pair(bb, a.zero())).collect();
    let gpd = FinGroupoid::from_fn(b.size(), d0, d1, eps, |i, j| {
        let ((bb, a1), (_, a2)) = (act.unpair(i), act.unpair(j));
        act.pair(bb, a.add(a1, a2))
    })?;
    let g = InternalGroupoid::new(gpd, arrows, b.clone())?;
    require_internal(&g, "internal")?;
    Ok(g)
}

/// `f₁ = p|Ker d₀` and `f₂ = p` on objects.
pub fn cover_correspondence(p: &InternalMorphism) -> Result<XModMorphism> {
    let source = internal_to_xmod(&p.source).map_err(|e| rescope(e, "source"))?;
    let target = internal_to_xmod(&p.target).map_err(|e| rescope(e, "target"))?;
    let (ks, kt) = (p.source.kernel_d0(), p.target.kernel_d0());
    let f1 = ks
        .iter()
        .map(|&a| {
            kt.binary_search(&p.arrow_map[a])
                .map_err(|_| Error::malformed("arrow_map", format!("arrow {a} of Ker d₀ leaves Ker d₀")))
        })
        .collect::<Result<Vec<_>>>()?;
    XModMorphism::new(source, target, f1, p.object_map.clone())
}

fn rescope(e: Error, prefix: &str) -> Error {
    match e {
        Error::ComponentInvalid { component, report } => Error::ComponentInvalid {
            component: format!("{prefix}.{component}"),
            report: report.scoped(prefix),
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::internal::{is_internal_covering, lift_internal_structure, validate_internal};

    fn zero_map(a: usize, b: usize) -> CrossedModule {
        CrossedModule::with_trivial_action(OpAlgebra::cyclic(a), OpAlgebra::cyclic(b), vec![0; a]).unwrap()
    }

    #[test]
    fn small_crossed_modules() {
        assert!(validate_xmod(&zero_map(2, 2)).unwrap().is_ok());
        let id3 =
            CrossedModule::with_trivial_action(OpAlgebra::cyclic(3), OpAlgebra::cyclic(3), vec![0, 1, 2]).unwrap();
        assert!(validate_xmod(&id3).unwrap().is_ok());
        // α: Z3 → Z2 sending 1 to 1 is not additive
        let bad =
            CrossedModule::with_trivial_action(OpAlgebra::cyclic(3), OpAlgebra::cyclic(2), vec![0, 1, 0]).unwrap();
        let r = validate_xmod(&bad).unwrap();
        assert!(r.violations().iter().any(|v| v.labels == ["alpha"]));
        let ring = OpAlgebra::cyclic(2)
            .with_self_opposite("*", vec![vec![0, 0], vec![0, 1]])
            .unwrap();
        let mixed = CrossedModule::with_trivial_action(OpAlgebra::cyclic(2), ring, vec![0, 0]);
        assert!(matches!(mixed, Err(Error::SignatureMismatch(_))));
    }

    #[test]
    fn to_internal() {
        let g = xmod_to_internal(&zero_map(2, 2)).unwrap();
        assert_eq!((g.gpd.n_arrows(), g.gpd.n_objects()), (4, 2));
        assert_eq!(g.gpd.object_group(0).unwrap().len(), 2);
        let id2 = CrossedModule::with_trivial_action(OpAlgebra::cyclic(2), OpAlgebra::cyclic(2), vec![0, 1]).unwrap();
        let g = xmod_to_internal(&id2).unwrap();
        assert!(g.gpd.is_transitive());
        assert!(g.gpd.objects().all(|x| g.gpd.object_group(x).unwrap().len() == 1));
        let trivial_a =
            CrossedModule::with_trivial_action(OpAlgebra::cyclic(1), OpAlgebra::cyclic(3), vec![0]).unwrap();
        let g = xmod_to_internal(&trivial_a).unwrap();
        assert_eq!(g.gpd, FinGroupoid::discrete(3));
    }

    #[test]
    fn round_trip_is_exact() {
        for x in [zero_map(2, 2), zero_map(4, 2), zero_map(1, 3)] {
            assert_eq!(internal_to_xmod(&xmod_to_internal(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn from_internal() {
        let x = internal_to_xmod(&InternalGroupoid::one_object(&OpAlgebra::cyclic(4))).unwrap();
        assert_eq!((x.a().size(), x.b().size()), (4, 1));
        assert_eq!(x.alpha, vec![0; 4]);
        let x = internal_to_xmod(&InternalGroupoid::discrete(&OpAlgebra::cyclic(2))).unwrap();
        assert_eq!((x.a().size(), x.b().size(), x.alpha.clone()), (1, 2, vec![0]));
    }

    #[test]
    fn morphisms() {
        let x = zero_map(4, 4);
        assert!(is_xmod_morphism(&XModMorphism::identity(&x)).unwrap());
        assert!(is_xmod_cover(&XModMorphism::identity(&x)).unwrap());
        let dbl = XModMorphism::new(x.clone(), x.clone(), vec![0, 2, 0, 2], vec![0, 1, 2, 3]).unwrap();
        assert!(is_xmod_morphism(&dbl).unwrap());
        assert!(!is_xmod_cover(&dbl).unwrap());
        let id = CrossedModule::with_trivial_action(OpAlgebra::cyclic(2), OpAlgebra::cyclic(2), vec![0, 1]).unwrap();
        let broken = XModMorphism::new(id.clone(), id, vec![0, 1], vec![0, 0]).unwrap();
        let r = check_xmod_morphism(&broken).unwrap();
        assert!(r.failed_checks().contains(&"xmod_morphism.alpha".to_string()));
    }

    #[test]
    fn cover_correspondence_on_lifts() {
        let g = InternalGroupoid::one_object(&OpAlgebra::cyclic(4));
        let lift = lift_internal_structure(&g, &[0, 2]).unwrap();
        assert!(validate_internal(&lift.cover).unwrap().is_ok());
        let m = cover_correspondence(&lift.projection).unwrap();
        assert!(is_xmod_cover(&m).unwrap());
        assert!(is_internal_covering(&lift.projection).unwrap());
        let id = cover_correspondence(&InternalMorphism::identity(&g)).unwrap();
        assert_eq!(id, XModMorphism::identity(&internal_to_xmod(&g).unwrap()));
    }
}
