//! Re-verification of reported counterexamples.

use super::brute::{hom_add, hom_binary, hom_unary, RawAct, RawAlg, RawGpd, RawIAct, RawInt, RawMor, RawXMod, RawXMor};
use super::brute_check_covering;
use crate::algebra::OpAlgebra;
use crate::groupoid::{FinGroupoid, GpdAction, GpdMorphism};
use crate::internal::{InternalAction, InternalGroupoid, InternalMorphism};
use crate::report::Violation;
use crate::xmod::{CrossedModule, XModMorphism};

/// The structure a report was produced for. Claims are the optional
/// covering assertions carried by morphism documents.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Algebra(&'a OpAlgebra),
    Groupoid(&'a FinGroupoid),
    Internal(&'a InternalGroupoid),
    Action(&'a GpdAction),
    InternalAction(&'a InternalAction),
    Morphism(&'a GpdMorphism, Option<bool>),
    InternalMorphism(&'a InternalMorphism, Option<bool>),
    XMod(&'a CrossedModule),
    XModMorphism(&'a XModMorphism, Option<bool>),
    /// A subset of an algebra, for `subobject.*` and `ideal.*`.
    Subset(&'a OpAlgebra, &'a [usize]),
    /// A subset of the object group at an object, for `subgroup.*`.
    Subgroup(&'a FinGroupoid, usize, &'a [usize]),
}

enum Leaf<'a> {
    Alg(RawAlg),
    S(Subject<'a>),
}

fn descend<'a>(s: Subject<'a>, seg: &str) -> Option<Leaf<'a>> {
    use Subject::*;
    Some(match (s, seg) {
        (Internal(g), "arrow_alg") => Leaf::Alg(RawAlg::from(&g.arrow_alg)),
        (Internal(g), "object_alg") => Leaf::Alg(RawAlg::from(&g.object_alg)),
        (Internal(g), "groupoid") => Leaf::S(Groupoid(&g.gpd)),
        (Action(a), "groupoid") => Leaf::S(Groupoid(&a.groupoid)),
        (InternalAction(a), "internal") => Leaf::S(Internal(&a.internal)),
        (InternalAction(a), "action") => Leaf::S(Action(&a.action)),
        (InternalAction(a), "set_alg") => Leaf::Alg(RawAlg::from(&a.set_alg)),
        (Morphism(m, _), "source") => Leaf::S(Groupoid(&m.source)),
        (Morphism(m, _), "target") => Leaf::S(Groupoid(&m.target)),
        (InternalMorphism(m, _), "source") => Leaf::S(Internal(&m.source)),
        (InternalMorphism(m, _), "target") => Leaf::S(Internal(&m.target)),
        (XMod(x), "A") => Leaf::Alg(RawAlg::from(x.a())),
        (XMod(x), "B") => Leaf::Alg(RawAlg::from(x.b())),
        (XMod(x), "semidirect") => Leaf::Alg(RawXMod::new(x).semidirect()?),
        (XModMorphism(m, _), "source") => Leaf::S(XMod(&m.source)),
        (XModMorphism(m, _), "target") => Leaf::S(XMod(&m.target)),
        _ => return None,
    })
}

/// Whether `v` is a genuine failure of its named axiom in `subject`:
/// the scope is followed to the component, the witness is range-checked
/// and the axiom is evaluated at the witness from raw tables.
pub fn recheck(subject: Subject<'_>, v: &Violation) -> bool {
    let mut leaf = Leaf::S(subject);
    if !v.scope.is_empty() {
        for seg in v.scope.split('.') {
            leaf = match leaf {
                Leaf::S(s) => match descend(s, seg) {
                    Some(l) => l,
                    None => return false,
                },
                Leaf::Alg(_) => return false,
            };
        }
    }
    match leaf {
        Leaf::Alg(a) => algebra(&a, v),
        Leaf::S(s) => structure(s, v),
    }
}

fn label(v: &Violation, i: usize) -> &str {
    v.labels.get(i).map_or("", String::as_str)
}

/// The witness, if it has exactly `bounds.len()` entries each below its
/// bound.
fn wit<const N: usize>(v: &Violation, bounds: [usize; N]) -> Option<[usize; N]> {
    if v.witness.len() != N {
        return None;
    }
    let mut out = [0; N];
    for i in 0..N {
        if v.witness[i] >= bounds[i] {
            return None;
        }
        out[i] = v.witness[i];
    }
    Some(out)
}

fn algebra(a: &RawAlg, v: &Violation) -> bool {
    let n = a.n;
    match v.check.as_str() {
        "add.assoc" => wit(v, [n; 3]).is_some_and(|[x, y, z]| !a.assoc(x, y, z)),
        "add.identity" => wit(v, [n]).is_some_and(|[x]| !a.unit(x)),
        "add.inverse" => wit(v, [n]).is_some_and(|[x]| !a.inverse(x)),
        "binary.distrib" => wit(v, [n; 3]).is_some_and(|[x, y, z]| !a.distrib(label(v, 0), x, y, z)),
        "binary.opposite" => wit(v, [n; 2]).is_some_and(|[x, y]| !a.opposite(label(v, 0), label(v, 1), x, y)),
        "unary.additive" => wit(v, [n; 2]).is_some_and(|[x, y]| !a.unary_additive(label(v, 0), x, y)),
        "unary.star" => wit(v, [n; 2]).is_some_and(|[x, y]| !a.unary_star(label(v, 0), label(v, 1), x, y)),
        "identity" => a
            .identities
            .iter()
            .position(|id| id.0 == label(v, 0))
            .is_some_and(|k| v.witness.iter().all(|&x| x < n) && !a.identity_at(k, &v.witness)),
        _ => false,
    }
}

/// `hom.*` violations against the map named by the first label.
fn hom(src: &RawAlg, tgt: &RawAlg, f: &[usize], v: &Violation) -> bool {
    if f.len() != src.n || f.iter().any(|&y| y >= tgt.n) {
        return false;
    }
    let n = src.n;
    match v.check.as_str() {
        "hom.add" => wit(v, [n; 2]).is_some_and(|[x, y]| !hom_add(src, tgt, f, x, y)),
        "hom.binary" => wit(v, [n; 2]).is_some_and(|[x, y]| !hom_binary(src, tgt, f, label(v, 1), x, y)),
        "hom.unary" => wit(v, [n]).is_some_and(|[x]| !hom_unary(src, tgt, f, label(v, 1), x)),
        _ => false,
    }
}

fn groupoid(g: &FinGroupoid, v: &Violation) -> bool {
    let (no, na) = (g.n_objects(), g.n_arrows());
    let r = RawGpd(g);
    match v.check.as_str() {
        "groupoid.identity_endpoints" => wit(v, [no]).is_some_and(|[x]| !r.identity_endpoints(x)),
        "groupoid.comp_domain" => wit(v, [na; 2]).is_some_and(|[a, b]| !r.comp_domain(a, b)),
        "groupoid.comp_endpoints" => wit(v, [na; 2]).is_some_and(|[a, b]| !r.comp_endpoints(a, b)),
        "groupoid.unit_left" => wit(v, [na]).is_some_and(|[a]| !r.unit_left(a)),
        "groupoid.unit_right" => wit(v, [na]).is_some_and(|[a]| !r.unit_right(a)),
        "groupoid.assoc" => wit(v, [na; 3]).is_some_and(|[a, b, c]| !r.assoc(a, b, c)),
        "groupoid.inverse" => wit(v, [na]).is_some_and(|[a]| r.inverse_of(a).is_none()),
        _ => false,
    }
}

fn morphism(s: &FinGroupoid, t: &FinGroupoid, am: &[usize], om: &[usize], v: &Violation) -> bool {
    let (no, na) = (s.n_objects(), s.n_arrows());
    let r = RawMor(s, t, am, om);
    match v.check.as_str() {
        "morphism.src" => wit(v, [na]).is_some_and(|[a]| !r.src(a)),
        "morphism.tgt" => wit(v, [na]).is_some_and(|[a]| !r.tgt(a)),
        "morphism.identity" => wit(v, [no]).is_some_and(|[x]| !r.identity(x)),
        "morphism.comp" => wit(v, [na; 2]).is_some_and(|[a, b]| !r.comp(a, b)),
        _ => false,
    }
}

/// A `morphism.covering` entry: with a witness, the star at that object
/// is not mapped bijectively; without one, the claim disagrees with the
/// covering test.
fn covering_claim(p: &GpdMorphism, claim: Option<bool>, v: &Violation) -> bool {
    let Some(claim) = claim else { return false };
    if v.witness.is_empty() {
        return brute_check_covering(p) != claim;
    }
    let Some([x]) = wit(v, [p.source.n_objects()]) else {
        return false;
    };
    let one = GpdMorphism {
        source: p.source.clone(),
        target: p.target.clone(),
        arrow_map: p.arrow_map.clone(),
        object_map: p.object_map.clone(),
    };
    // restrict the test to the star at x by checking the pairing directly
    let (s_src, t_src) = (one.source.src_map(), one.target.src_map());
    let y = one.object_map[x];
    let up: Vec<usize> = (0..s_src.len()).filter(|&a| s_src[a] == x).collect();
    let down: Vec<usize> = (0..t_src.len()).filter(|&b| t_src[b] == y).collect();
    let paired = up.len() == down.len()
        && down
            .iter()
            .all(|&b| up.iter().filter(|&&a| one.arrow_map[a] == b).count() == 1);
    claim && !paired
}

fn structure(s: Subject<'_>, v: &Violation) -> bool {
    use Subject::*;
    match s {
        Algebra(a) => algebra(&RawAlg::from(a), v),
        Groupoid(g) => groupoid(g, v),
        Internal(g) => {
            let r = RawInt::new(g);
            let (gp, na) = (&g.gpd, g.gpd.n_arrows());
            match v.check.as_str() {
                c if c.starts_with("hom.") => match label(v, 0) {
                    "d0" => hom(&r.ar, &r.ob, gp.src_map(), v),
                    "d1" => hom(&r.ar, &r.ob, gp.tgt_map(), v),
                    "epsilon" => hom(&r.ob, &r.ar, gp.identity_map(), v),
                    _ => false,
                },
                "internal.interchange" => wit(v, [na; 4]).is_some_and(|[a, b, c, d]| {
                    gp.compose(a, c).is_some() && gp.compose(b, d).is_some() && !r.interchange(label(v, 0), a, b, c, d)
                }),
                "internal.unary_functor" => wit(v, [na; 2]).is_some_and(|[a, c]| !r.unary_functor(label(v, 0), a, c)),
                "internal.inverse_formula" => wit(v, [na]).is_some_and(|[a]| !r.inverse_formula(a)),
                _ => false,
            }
        }
        Action(a) => {
            let (n, na) = (a.set_size, a.groupoid.n_arrows());
            let r = RawAct(a);
            match v.check.as_str() {
                "action.domain" => wit(v, [n, na]).is_some_and(|[x, p]| !r.domain(x, p)),
                "action.theta" => wit(v, [n, na]).is_some_and(|[x, p]| !r.theta(x, p)),
                "action.unit" => wit(v, [n]).is_some_and(|[x]| !r.unit(x)),
                "action.assoc" => wit(v, [n, na, na]).is_some_and(|[x, p, q]| !r.assoc(x, p, q)),
                _ => false,
            }
        }
        InternalAction(a) => {
            let r = RawIAct::new(a);
            let (n, na) = (a.set_alg.size(), a.internal.gpd.n_arrows());
            match v.check.as_str() {
                c if c.starts_with("hom.") && label(v, 0) == "theta" => {
                    hom(&r.xs, &RawAlg::from(&a.internal.object_alg), &a.action.theta, v)
                }
                "internal_action.compat" => wit(v, [n, n, na, na]).is_some_and(|[x, y, p, q]| {
                    a.action.act(x, p).is_some() && a.action.act(y, q).is_some() && !r.compat(label(v, 0), x, y, p, q)
                }),
                "internal_action.unary" => wit(v, [n, na]).is_some_and(|[x, p]| !r.unary(label(v, 0), x, p)),
                _ => false,
            }
        }
        Morphism(p, claim) => match v.check.as_str() {
            "morphism.covering" => covering_claim(p, claim, v),
            _ => morphism(&p.source, &p.target, &p.arrow_map, &p.object_map, v),
        },
        InternalMorphism(p, claim) => match v.check.as_str() {
            "morphism.covering" => {
                let under = GpdMorphism {
                    source: p.source.gpd.clone(),
                    target: p.target.gpd.clone(),
                    arrow_map: p.arrow_map.clone(),
                    object_map: p.object_map.clone(),
                };
                covering_claim(&under, claim, v)
            }
            c if c.starts_with("hom.") => {
                let (s, t) = (RawInt::new(&p.source), RawInt::new(&p.target));
                match label(v, 0) {
                    "arrow_map" => hom(&s.ar, &t.ar, &p.arrow_map, v),
                    "object_map" => hom(&s.ob, &t.ob, &p.object_map, v),
                    _ => false,
                }
            }
            _ => morphism(&p.source.gpd, &p.target.gpd, &p.arrow_map, &p.object_map, v),
        },
        XMod(x) => {
            let r = RawXMod::new(x);
            let (na, nb) = (r.a.n, r.b.n);
            match v.check.as_str() {
                c if c.starts_with("hom.") && label(v, 0) == "alpha" => hom(&r.a, &r.b, &r.alpha, v),
                "xmod.cm1" => wit(v, [nb, na]).is_some_and(|[b, a]| !r.cm1(b, a)),
                "xmod.cm2" => wit(v, [na, na]).is_some_and(|[a, c]| !r.cm2(a, c)),
                "xmod.cm3" => wit(v, [na, na]).is_some_and(|[a, c]| !r.cm3(label(v, 0), a, c)),
                "xmod.cm4_left" => wit(v, [nb, na]).is_some_and(|[b, a]| !r.cm4_left(label(v, 0), b, a)),
                "xmod.cm4_right" => wit(v, [na, nb]).is_some_and(|[a, b]| !r.cm4_right(label(v, 0), a, b)),
                _ => false,
            }
        }
        XModMorphism(m, claim) => {
            let r = RawXMor::new(m);
            let (na, nb) = (r.s.a.n, r.s.b.n);
            match v.check.as_str() {
                c if c.starts_with("hom.") => match label(v, 0) {
                    "f1" => hom(&r.s.a, &r.t.a, r.f1, v),
                    "f2" => hom(&r.s.b, &r.t.b, r.f2, v),
                    _ => false,
                },
                "xmod_morphism.alpha" => wit(v, [na]).is_some_and(|[a]| !r.alpha(a)),
                "xmod_morphism.dot" => wit(v, [nb, na]).is_some_and(|[b, a]| !r.dot(b, a)),
                "xmod_morphism.star" => wit(v, [nb, na]).is_some_and(|[b, a]| !r.star(label(v, 0), b, a)),
                "xmod_morphism.cover" => claim.is_some_and(|c| {
                    let mut seen = vec![false; r.t.a.n];
                    let bij = r.f1.len() == r.t.a.n && r.f1.iter().all(|&y| !std::mem::replace(&mut seen[y], true));
                    bij != c
                }),
                _ => false,
            }
        }
        Subset(a, members) => subset(&RawAlg::from(a), members, v),
        Subgroup(g, x, members) => subgroup(g, x, members, v),
    }
}

fn subset(a: &RawAlg, m: &[usize], v: &Violation) -> bool {
    let has = |x: usize| m.contains(&x);
    let n = a.n;
    let out = |x: usize| !has(x);
    let bin = |op: &str, x: usize, y: usize| a.bin(op).map(|t| t[x][y]);
    let in_pair = |x: usize, y: usize| has(x) && has(y);
    match v.check.as_str() {
        "subobject.zero" | "ideal.zero" => out(a.zero),
        "subobject.neg" | "ideal.neg" => wit(v, [n]).is_some_and(|[x]| has(x) && out(a.neg[x])),
        "subobject.add" | "ideal.add" => wit(v, [n; 2]).is_some_and(|[x, y]| in_pair(x, y) && out(a.add[x][y])),
        "subobject.binary" => {
            wit(v, [n; 2]).is_some_and(|[x, y]| in_pair(x, y) && bin(label(v, 0), x, y).is_some_and(out))
        }
        "subobject.unary" => wit(v, [n]).is_some_and(|[x]| has(x) && a.un(label(v, 0)).is_some_and(|w| out(w[x]))),
        "ideal.normal" => wit(v, [n; 2]).is_some_and(|[g, x]| has(x) && out(a.add[a.add[g][x]][a.neg[g]])),
        "ideal.absorb_left" => wit(v, [n; 2]).is_some_and(|[x, g]| has(x) && bin(label(v, 0), x, g).is_some_and(out)),
        "ideal.absorb_right" => wit(v, [n; 2]).is_some_and(|[x, g]| has(x) && bin(label(v, 0), g, x).is_some_and(out)),
        _ => false,
    }
}

fn subgroup(g: &FinGroupoid, x: usize, m: &[usize], v: &Violation) -> bool {
    let na = g.n_arrows();
    let has = |a: usize| m.contains(&a);
    let comp = |a: usize, b: usize| g.comp_table().get(&(a, b)).copied();
    match v.check.as_str() {
        "subgroup.member" => wit(v, [na]).is_some_and(|[a]| has(a) && !(g.src_map()[a] == x && g.tgt_map()[a] == x)),
        "subgroup.identity" => x < g.n_objects() && !has(g.identity_map()[x]),
        "subgroup.comp" => {
            wit(v, [na; 2]).is_some_and(|[a, b]| has(a) && has(b) && comp(a, b).is_some_and(|c| !has(c)))
        }
        "subgroup.inverse" => {
            wit(v, [na]).is_some_and(|[a]| has(a) && RawGpd(g).inverse_of(a).is_some_and(|i| !has(i)))
        }
        _ => false,
    }
}
