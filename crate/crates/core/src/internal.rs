//! Groupoids internal to groups with operations: the arrow and object sets
//! carry algebras of one signature, and source, target, identities and
//! composition are morphisms of such algebras.

use std::collections::BTreeMap;

use crate::algebra::{check_homomorphism, check_subobject, validate_algebra, OpAlgebra, SubSet};
use crate::error::{Error, Result};
use crate::groupoid::{
    self, action_arrows, check_morphism, coset_cover, validate_action, validate_groupoid, CosetCover, FinGroupoid,
    GpdAction, GpdMorphism,
};
use crate::oracle;
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalGroupoid {
    pub gpd: FinGroupoid,
    pub arrow_alg: OpAlgebra,
    pub object_alg: OpAlgebra,
}

impl InternalGroupoid {
    pub fn new(gpd: FinGroupoid, arrow_alg: OpAlgebra, object_alg: OpAlgebra) -> Result<Self> {
        arrow_alg.same_signature(&object_alg)?;
        if arrow_alg.size() != gpd.n_arrows() {
            return Err(Error::malformed(
                "arrow_alg",
                format!(
                    "carrier has {} elements but the groupoid has {} arrows",
                    arrow_alg.size(),
                    gpd.n_arrows()
                ),
            ));
        }
        if object_alg.size() != gpd.n_objects() {
            return Err(Error::malformed(
                "object_alg",
                format!(
                    "carrier has {} elements but the groupoid has {} objects",
                    object_alg.size(),
                    gpd.n_objects()
                ),
            ));
        }
        Ok(InternalGroupoid {
            gpd,
            arrow_alg,
            object_alg,
        })
    }

    /// One object, composition `+`.
    pub fn one_object(alg: &OpAlgebra) -> Self {
        let gpd = FinGroupoid::one_object(alg.size(), alg.zero(), |a, b| alg.add(a, b)).expect("well shaped");
        InternalGroupoid::new(gpd, alg.clone(), alg.trivial_like()).expect("sizes match")
    }

    /// Identity arrows only, on objects `alg`.
    pub fn discrete(alg: &OpAlgebra) -> Self {
        InternalGroupoid::new(FinGroupoid::discrete(alg.size()), alg.clone(), alg.clone()).expect("sizes match")
    }

    /// One arrow `(x, y)` from `x` to `y` for every pair of objects, at
    /// index `x·n + y`, with componentwise operations.
    pub fn indiscrete(alg: &OpAlgebra) -> Self {
        let n = alg.size();
        let (fst, snd) = (|i: usize| i / n, |i: usize| i % n);
        let gpd = FinGroupoid::from_fn(
            n,
            (0..n * n).map(fst).collect(),
            (0..n * n).map(snd).collect(),
            (0..n).map(|x| x * n + x).collect(),
            |a, b| fst(a) * n + snd(b),
        )
        .expect("well shaped");
        let pair = |x: usize, y: usize| x * n + y;
        let arrows = OpAlgebra::with_tables_from(
            alg,
            n * n,
            pair(alg.zero(), alg.zero()),
            |a, b| pair(alg.add(fst(a), fst(b)), alg.add(snd(a), snd(b))),
            |a| pair(alg.neg(fst(a)), alg.neg(snd(a))),
            |k, a, b| {
                let op = &alg.binary_ops()[k];
                pair(op.apply(fst(a), fst(b)), op.apply(snd(a), snd(b)))
            },
            |k, a| {
                let w = &alg.unary_ops()[k];
                pair(w.apply(fst(a)), w.apply(snd(a)))
            },
        )
        .expect("well shaped");
        InternalGroupoid::new(gpd, arrows, alg.clone()).expect("sizes match")
    }

    /// The zero object.
    pub fn base(&self) -> usize {
        self.object_alg.zero()
    }

    /// Ker d₀, ascending.
    pub fn kernel_d0(&self) -> Vec<usize> {
        self.gpd.star(self.base()).expect("zero is an object")
    }
}

fn component_reports(g: &InternalGroupoid) -> ValidationReport {
    let mut r = ValidationReport::new();
    r.merge(validate_algebra(&g.arrow_alg).scoped("arrow_alg"));
    r.merge(validate_algebra(&g.object_alg).scoped("object_alg"));
    r.merge(validate_groupoid(&g.gpd).scoped("groupoid"));
    r
}

/// Homomorphism conditions on d₀, d₁ and ε, the interchange law for `+`
/// and every binary operation, compatibility of composition with every
/// unary operation, and `a⁻¹ = ε d₁(a) − a + ε d₀(a)`.
///
/// Failing algebra or groupoid components are returned as
/// [`Error::ComponentInvalid`].
pub fn validate_internal(g: &InternalGroupoid) -> Result<ValidationReport> {
    let comp = component_reports(g);
    if !comp.is_ok() {
        return Err(Error::ComponentInvalid {
            component: "internal".into(),
            report: comp,
        });
    }
    let (gp, ar, ob) = (&g.gpd, &g.arrow_alg, &g.object_alg);
    let mut r = ValidationReport::new();
    r.merge(check_homomorphism(ar, ob, gp.src_map(), "d0")?);
    r.merge(check_homomorphism(ar, ob, gp.tgt_map(), "d1")?);
    r.merge(check_homomorphism(ob, ar, gp.identity_map(), "epsilon")?);

    let pairs: Vec<(usize, usize, usize)> = gp.comp_table().iter().map(|(&(a, c), &ac)| (a, c, ac)).collect();
    let mut ops: Vec<(&str, Box<dyn Fn(usize, usize) -> usize + '_>)> = vec![("+", Box::new(|x, y| ar.add(x, y)))];
    for op in ar.binary_ops() {
        ops.push((op.name.as_str(), Box::new(move |x, y| op.apply(x, y))));
    }
    for (name, op) in &ops {
        let labels = [*name];
        'quad: for &(a, c, ac) in &pairs {
            for &(b, d, bd) in &pairs {
                let rhs = op(ac, bd);
                match gp.compose(op(a, b), op(c, d)) {
                    Some(lhs) if lhs == rhs => {}
                    Some(_) => r.fail(
                        "internal.interchange",
                        &labels,
                        &[a, b, c, d],
                        "(a*b)∘(c*d) != (a∘c)*(b∘d)",
                    ),
                    None => r.fail(
                        "internal.interchange",
                        &labels,
                        &[a, b, c, d],
                        "(a∘c)*(b∘d) is defined but (a*b)∘(c*d) is not",
                    ),
                }
                if r.saturated("internal.interchange", &labels) {
                    break 'quad;
                }
            }
        }
    }
    for w in ar.unary_ops() {
        for &(a, c, ac) in &pairs {
            if gp.compose(w.apply(a), w.apply(c)) != Some(w.apply(ac)) {
                r.fail("internal.unary_functor", &[&w.name], &[a, c], "w(a∘c) != w(a)∘w(c)");
            }
        }
    }
    for a in gp.arrows() {
        let formula = ar.add(ar.sub(gp.identity(gp.tgt(a)), a), gp.identity(gp.src(a)));
        if gp.inverse(a) != Some(formula) {
            r.fail("internal.inverse_formula", &[], &[a], "a⁻¹ != ε d₁(a) − a + ε d₀(a)");
        }
    }
    Ok(r)
}

/// Any failure, including failing components, as a `ComponentInvalid`
/// scoped under `component`.
pub(crate) fn require_internal(g: &InternalGroupoid, component: &str) -> Result<()> {
    match validate_internal(g) {
        Ok(r) if r.is_ok() => Ok(()),
        Ok(r) | Err(Error::ComponentInvalid { report: r, .. }) => Err(Error::component(component, r)),
        Err(e) => Err(e),
    }
}

/// Ker d₀ as a subset of the arrow algebra.
pub fn ker_d0_component(g: &InternalGroupoid) -> SubSet<'_> {
    SubSet::new(&g.arrow_alg, g.kernel_d0()).expect("arrows are in range")
}

/// The full subgroupoid on the objects reachable from zero, with the
/// restricted algebra structure.
pub fn transitivity_component(g: &InternalGroupoid) -> Result<InternalGroupoid> {
    let gp = &g.gpd;
    let mut objects: Vec<usize> = g.kernel_d0().iter().map(|&a| gp.tgt(a)).collect();
    objects.sort_unstable();
    objects.dedup();
    let arrows: Vec<usize> = gp
        .arrows()
        .filter(|&a| objects.binary_search(&gp.src(a)).is_ok())
        .collect();
    let (arrow_alg, _) = g.arrow_alg.restrict(&arrows)?;
    let (object_alg, _) = g.object_alg.restrict(&objects)?;
    let na = |a: usize| arrows.binary_search(&a).expect("closed");
    let no = |x: usize| objects.binary_search(&x).expect("closed");
    let comp = gp
        .comp_table()
        .iter()
        .filter(|(&(a, _), _)| arrows.binary_search(&a).is_ok())
        .map(|(&(a, b), &c)| (na(a), na(b), na(c)));
    let sub = FinGroupoid::new(
        objects.len(),
        arrows.iter().map(|&a| no(gp.src(a))).collect(),
        arrows.iter().map(|&a| no(gp.tgt(a))).collect(),
        objects.iter().map(|&x| na(gp.identity(x))).collect(),
        comp,
    )?;
    InternalGroupoid::new(sub, arrow_alg, object_alg)
}

impl InternalGroupoid {
    /// Renames objects and arrows along permutations.
    pub fn relabel(&self, objects: &[usize], arrows: &[usize]) -> Result<InternalGroupoid> {
        InternalGroupoid::new(
            self.gpd.relabel(objects, arrows)?,
            self.arrow_alg.relabel(arrows)?,
            self.object_alg.relabel(objects)?,
        )
    }
}

/// A morphism of internal groupoids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalMorphism {
    pub source: InternalGroupoid,
    pub target: InternalGroupoid,
    pub arrow_map: Vec<usize>,
    pub object_map: Vec<usize>,
}

impl InternalMorphism {
    pub fn new(
        source: InternalGroupoid,
        target: InternalGroupoid,
        arrow_map: Vec<usize>,
        object_map: Vec<usize>,
    ) -> Result<Self> {
        source.arrow_alg.same_signature(&target.arrow_alg)?;
        let m = InternalMorphism {
            source,
            target,
            arrow_map,
            object_map,
        };
        m.underlying()?;
        Ok(m)
    }

    pub fn identity(g: &InternalGroupoid) -> Self {
        InternalMorphism {
            source: g.clone(),
            target: g.clone(),
            arrow_map: g.gpd.arrows().collect(),
            object_map: g.gpd.objects().collect(),
        }
    }

    pub fn underlying(&self) -> Result<GpdMorphism> {
        GpdMorphism::new(
            self.source.gpd.clone(),
            self.target.gpd.clone(),
            self.arrow_map.clone(),
            self.object_map.clone(),
        )
    }
}

pub fn check_internal_morphism(p: &InternalMorphism) -> Result<ValidationReport> {
    let mut r = check_morphism(&p.underlying()?);
    r.merge(check_homomorphism(
        &p.source.arrow_alg,
        &p.target.arrow_alg,
        &p.arrow_map,
        "arrow_map",
    )?);
    r.merge(check_homomorphism(
        &p.source.object_alg,
        &p.target.object_alg,
        &p.object_map,
        "object_map",
    )?);
    Ok(r)
}

fn require_internal_morphism(p: &InternalMorphism) -> Result<()> {
    let r = check_internal_morphism(p)?;
    if r.is_ok() {
        Ok(())
    } else {
        Err(Error::InvalidMorphism(r))
    }
}

pub fn is_internal_covering(p: &InternalMorphism) -> Result<bool> {
    require_internal_morphism(p)?;
    groupoid::is_covering(&p.underlying()?)
}

/// Whether `p` restricted to `St 0 → St 0` is a bijection, hence an
/// isomorphism of algebras.
pub fn star_restriction_is_iso(p: &InternalMorphism) -> Result<bool> {
    require_internal_morphism(p)?;
    let up = p.source.kernel_d0();
    let down = p.target.kernel_d0();
    let mut image: Vec<usize> = up.iter().map(|&a| p.arrow_map[a]).collect();
    image.sort_unstable();
    image.dedup();
    Ok(image.len() == up.len() && image == down)
}

impl InternalMorphism {
    /// Renames the source along permutations, keeping the target.
    pub fn relabel_source(&self, objects: &[usize], arrows: &[usize]) -> Result<InternalMorphism> {
        let under = self.underlying()?.relabel_source(objects, arrows)?;
        InternalMorphism::new(
            self.source.relabel(objects, arrows)?,
            self.target.clone(),
            under.arrow_map,
            under.object_map,
        )
    }
}

/// An action of an internal groupoid on an algebra `X` with `θ` a
/// homomorphism and `(x⋆y)(a⋆b) = (xa)⋆(yb)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalAction {
    pub internal: InternalGroupoid,
    pub action: GpdAction,
    pub set_alg: OpAlgebra,
}

impl InternalAction {
    pub fn new(internal: InternalGroupoid, action: GpdAction, set_alg: OpAlgebra) -> Result<Self> {
        if action.groupoid != internal.gpd {
            return Err(Error::malformed("action", "acts on a different groupoid"));
        }
        if set_alg.size() != action.set_size {
            return Err(Error::malformed(
                "set_alg",
                format!(
                    "carrier has {} elements but the action set has {}",
                    set_alg.size(),
                    action.set_size
                ),
            ));
        }
        set_alg.same_signature(&internal.arrow_alg)?;
        Ok(InternalAction {
            internal,
            action,
            set_alg,
        })
    }

    /// `G` acting on its object algebra by `xa = tgt(a)`.
    pub fn canonical(g: &InternalGroupoid) -> Self {
        InternalAction {
            internal: g.clone(),
            action: GpdAction::canonical(&g.gpd),
            set_alg: g.object_alg.clone(),
        }
    }

    /// Renames element `x` of the set to `perm[x]`.
    pub fn relabel_set(&self, perm: &[usize]) -> Result<InternalAction> {
        InternalAction::new(
            self.internal.clone(),
            self.action.relabel_set(perm)?,
            self.set_alg.relabel(perm)?,
        )
    }
}

/// Subgroups of the object group at the zero object that are subobjects
/// of the arrow algebra: the characteristic groups internal covers can
/// have.
pub fn lift_candidates(g: &InternalGroupoid) -> Result<Vec<Vec<usize>>> {
    Ok(groupoid::subgroups(&g.gpd, g.base())?
        .into_iter()
        .filter(|c| SubSet::new(&g.arrow_alg, c.iter().copied()).is_ok_and(|s| check_subobject(&s).is_ok()))
        .collect())
}

/// Axioms of the underlying action (scoped `action`), of the algebra on
/// the set (scoped `set_alg`), `θ` a homomorphism, and compatibility of
/// `φ` with every operation wherever both sides are defined. An invalid
/// internal groupoid is an error.
pub fn validate_internal_action(act: &InternalAction) -> Result<ValidationReport> {
    require_internal(&act.internal, "internal")?;
    let mut r = validate_action(&act.action).scoped("action");
    r.merge(validate_algebra(&act.set_alg).scoped("set_alg"));
    let (ar, xs) = (&act.internal.arrow_alg, &act.set_alg);
    r.merge(check_homomorphism(
        xs,
        &act.internal.object_alg,
        &act.action.theta,
        "theta",
    )?);
    let defined: Vec<(usize, usize, usize)> = act.action.phi.iter().map(|(&(x, a), &y)| (x, a, y)).collect();

    let mut ops: Vec<(
        &str,
        Box<dyn Fn(usize, usize) -> usize + '_>,
        Box<dyn Fn(usize, usize) -> usize + '_>,
    )> = vec![("+", Box::new(|x, y| xs.add(x, y)), Box::new(|a, b| ar.add(a, b)))];
    for op in xs.binary_ops() {
        let arrow_op = ar.binary(&op.name).expect("signatures match");
        ops.push((
            op.name.as_str(),
            Box::new(move |x, y| op.apply(x, y)),
            Box::new(move |a, b| arrow_op.apply(a, b)),
        ));
    }
    for (name, on_x, on_a) in &ops {
        let labels = [*name];
        'quad: for &(x, a, xa) in &defined {
            for &(y, b, yb) in &defined {
                let rhs = on_x(xa, yb);
                match act.action.act(on_x(x, y), on_a(a, b)) {
                    Some(lhs) if lhs == rhs => {}
                    None if act.action.theta[on_x(x, y)] != act.internal.gpd.src(on_a(a, b)) => r.fail(
                        "internal_action.compat",
                        &labels,
                        &[x, y, a, b],
                        "(xa)*(yb) is defined but (x*y)(a*b) is not",
                    ),
                    _ => r.fail(
                        "internal_action.compat",
                        &labels,
                        &[x, y, a, b],
                        "(x*y)(a*b) != (xa)*(yb)",
                    ),
                }
                if r.saturated("internal_action.compat", &labels) {
                    break 'quad;
                }
            }
        }
    }
    for w in xs.unary_ops() {
        let wa = ar.unary(&w.name).expect("signatures match");
        for &(x, a, xa) in &defined {
            if act.action.act(w.apply(x), wa.apply(a)) != Some(w.apply(xa)) {
                r.fail("internal_action.unary", &[&w.name], &[x, a], "w(x)w(a) != w(xa)");
            }
        }
    }
    Ok(r)
}

/// The algebra on the cosets `C∘a`, `a ∈ St 0`, given by
/// `(C∘a) ⋆ (C∘b) = C∘(a⋆b)` and `ω(C∘a) = C∘ω(a)`, together with the
/// coset cover it lives on. Independence of representatives is checked
/// for every pair of representatives.
pub fn lifted_coset_algebra(g: &InternalGroupoid, c: &[usize]) -> Result<(OpAlgebra, CosetCover)> {
    g.gpd.require_transitive("lifted coset algebra")?;
    let sub = SubSet::new(&g.arrow_alg, c.iter().copied())?;
    let rep = check_subobject(&sub);
    if !rep.is_ok() {
        return Err(Error::NotASubobject(rep));
    }
    let cc = coset_cover(&g.gpd, g.base(), sub.members())?;
    let ar = &g.arrow_alg;
    let coset = |a: usize| cc.coset_of(a);

    let mut r = ValidationReport::new();
    let mut check_bin = |name: &str, f: &dyn Fn(usize, usize) -> usize| {
        for (i, ci) in cc.cosets.iter().enumerate() {
            for (j, cj) in cc.cosets.iter().enumerate() {
                let want = coset(f(ci[0], cj[0]));
                for &a in ci {
                    for &b in cj {
                        let got = coset(f(a, b));
                        if got.is_none() || got != want {
                            r.fail(
                                "coset.well_defined",
                                &[name],
                                &[a, b],
                                format!("cosets {i},{j}: C∘(a*b) depends on representatives"),
                            );
                        }
                    }
                }
            }
        }
    };
    check_bin("+", &|a, b| ar.add(a, b));
    for op in ar.binary_ops() {
        check_bin(&op.name, &|a, b| op.apply(a, b));
    }
    let mut check_un = |name: &str, f: &dyn Fn(usize) -> usize| {
        for (i, ci) in cc.cosets.iter().enumerate() {
            let want = coset(f(ci[0]));
            for &a in ci {
                let got = coset(f(a));
                if got.is_none() || got != want {
                    r.fail(
                        "coset.well_defined",
                        &[name],
                        &[a],
                        format!("coset {i}: C∘w(a) depends on representatives"),
                    );
                }
            }
        }
    };
    check_un("-", &|a| ar.neg(a));
    for op in ar.unary_ops() {
        check_un(&op.name, &|a| op.apply(a));
    }
    let zero = coset(ar.zero());
    if zero.is_none() {
        r.fail(
            "coset.zero",
            &[],
            &[ar.zero()],
            "the zero arrow does not start at the zero object",
        );
    }
    if !r.is_ok() {
        return Err(Error::component("coset_algebra", r));
    }
    let rep_of = |i: usize| cc.cosets[i][0];
    let c_of = |a: usize| coset(a).expect("checked above");
    let alg = OpAlgebra::with_tables_from(
        ar,
        cc.cosets.len(),
        zero.expect("checked above"),
        |i, j| c_of(ar.add(rep_of(i), rep_of(j))),
        |i| c_of(ar.neg(rep_of(i))),
        |k, i, j| c_of(ar.binary_ops()[k].apply(rep_of(i), rep_of(j))),
        |k, i| c_of(ar.unary_ops()[k].apply(rep_of(i))),
    )?;
    let v = validate_algebra(&alg);
    if !v.is_ok() {
        return Err(Error::component("coset_algebra", v));
    }
    Ok((alg, cc))
}

/// `G ⋉ X` with `(a,x) ⋆ (b,y) = (a⋆b, x⋆y)` and `ω(a,x) = (ωa, ωx)`,
/// together with its projection.
pub fn internal_action_groupoid(act: &InternalAction) -> Result<(InternalGroupoid, InternalMorphism)> {
    let r = validate_internal_action(act)?;
    if !r.is_ok() {
        return Err(Error::InvalidAction(r));
    }
    let (gpd, proj) = groupoid::action_groupoid(&act.action)?;
    let arrows = action_arrows(&act.action);
    let index: BTreeMap<(usize, usize), usize> = arrows.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let (ar, xs) = (&act.internal.arrow_alg, &act.set_alg);
    let at = |a: usize, x: usize| index[&(a, x)];
    let arrow_alg = OpAlgebra::with_tables_from(
        ar,
        arrows.len(),
        at(ar.zero(), xs.zero()),
        |i, j| {
            let ((a, x), (b, y)) = (arrows[i], arrows[j]);
            at(ar.add(a, b), xs.add(x, y))
        },
        |i| {
            let (a, x) = arrows[i];
            at(ar.neg(a), xs.neg(x))
        },
        |k, i, j| {
            let ((a, x), (b, y)) = (arrows[i], arrows[j]);
            at(ar.binary_ops()[k].apply(a, b), xs.binary_ops()[k].apply(x, y))
        },
        |k, i| {
            let (a, x) = arrows[i];
            at(ar.unary_ops()[k].apply(a), xs.unary_ops()[k].apply(x))
        },
    )?;
    let big = InternalGroupoid::new(gpd, arrow_alg, xs.clone())?;
    require_internal(&big, "action_groupoid")?;
    let proj = InternalMorphism::new(big.clone(), act.internal.clone(), proj.arrow_map, proj.object_map)?;
    Ok((big, proj))
}

/// A cover produced by lifting internal structure along a coset cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalCover {
    pub cover: InternalGroupoid,
    pub projection: InternalMorphism,
    /// The coset `C`, an object of the cover and its zero.
    pub base: usize,
    pub cosets: CosetCover,
}

/// The internal cover of `G` with characteristic group `C` at the zero
/// object.
pub fn lift_internal_structure(g: &InternalGroupoid, c: &[usize]) -> Result<InternalCover> {
    require_internal(g, "internal")?;
    g.gpd.require_transitive("internal lift")?;
    let (alg, cc) = lifted_coset_algebra(g, c)?;
    let act = InternalAction::new(g.clone(), cc.action.clone(), alg)?;
    let (cover, projection) = internal_action_groupoid(&act)?;
    Ok(InternalCover {
        base: cc.base,
        cover,
        projection,
        cosets: cc,
    })
}

/// Φ for internal coverings.
pub fn covering_to_action(p: &InternalMorphism) -> Result<InternalAction> {
    if !is_internal_covering(p)? {
        return Err(Error::NotACovering(groupoid::check_covering(&p.underlying()?)?));
    }
    let action = groupoid::covering_to_action(&p.underlying()?)?;
    InternalAction::new(p.target.clone(), action, p.source.object_alg.clone())
}

/// Γ for internal actions.
pub fn action_to_covering(act: &InternalAction) -> Result<InternalMorphism> {
    Ok(internal_action_groupoid(act)?.1)
}

fn note_failure(r: &mut ValidationReport, check: &str, i: usize, e: &Error) {
    r.fail(check, &[], &[i], format!("{}: {e}", e.kind()));
}

/// For each action, `Φ(Γ(act)) ≅ act`; for each cover, `Γ(Φ(p)) ≅ p` over
/// `G`. Isomorphisms are searched for by the oracle; every instance without
/// a witness becomes a report entry.
pub fn check_act_cov_equivalence(
    g: &InternalGroupoid,
    actions: &[InternalAction],
    covers: &[InternalMorphism],
) -> ValidationReport {
    let mut r = ValidationReport::new();
    for (i, act) in actions.iter().enumerate() {
        if act.internal != *g {
            r.fail(
                "equiv.base",
                &["action"],
                &[i],
                "action is over a different internal groupoid",
            );
            continue;
        }
        let back = action_to_covering(act).and_then(|p| covering_to_action(&p));
        match back.and_then(|b| oracle::find_internal_action_iso(act, &b)) {
            Ok(w) if w.is_found() => {}
            Ok(_) => r.fail("equiv.action", &[], &[i], "Φ(Γ(act)) is not isomorphic to act"),
            Err(e) => note_failure(&mut r, "equiv.action", i, &e),
        }
    }
    for (i, p) in covers.iter().enumerate() {
        if p.target != *g {
            r.fail(
                "equiv.base",
                &["cover"],
                &[i],
                "cover is over a different internal groupoid",
            );
            continue;
        }
        let back = covering_to_action(p).and_then(|a| action_to_covering(&a));
        match back.and_then(|q| oracle::find_internal_cover_iso_over(p, &q)) {
            Ok(w) if w.is_found() => {}
            Ok(_) => r.fail("equiv.cover", &[], &[i], "Γ(Φ(p)) is not isomorphic to p over G"),
            Err(e) => note_failure(&mut r, "equiv.cover", i, &e),
        }
    }
    r
}

/// The same equivalence check for plain groupoids.
pub fn check_act_cov_equivalence_plain(
    g: &FinGroupoid,
    actions: &[GpdAction],
    covers: &[GpdMorphism],
) -> ValidationReport {
    let mut r = ValidationReport::new();
    for (i, act) in actions.iter().enumerate() {
        if act.groupoid != *g {
            r.fail("equiv.base", &["action"], &[i], "action is over a different groupoid");
            continue;
        }
        let back = groupoid::action_to_covering(act).and_then(|p| groupoid::covering_to_action(&p));
        match back.and_then(|b| oracle::find_action_iso(act, &b)) {
            Ok(w) if w.is_found() => {}
            Ok(_) => r.fail("equiv.action", &[], &[i], "Φ(Γ(act)) is not isomorphic to act"),
            Err(e) => note_failure(&mut r, "equiv.action", i, &e),
        }
    }
    for (i, p) in covers.iter().enumerate() {
        if p.target != *g {
            r.fail("equiv.base", &["cover"], &[i], "cover is over a different groupoid");
            continue;
        }
        let back = groupoid::covering_to_action(p).and_then(|a| groupoid::action_to_covering(&a));
        match back.and_then(|q| oracle::find_cover_iso_over(p, &q)) {
            Ok(w) if w.is_found() => {}
            Ok(_) => r.fail("equiv.cover", &[], &[i], "Γ(Φ(p)) is not isomorphic to p over G"),
            Err(e) => note_failure(&mut r, "equiv.cover", i, &e),
        }
    }
    r
}
