//! Brute-force validity predicates written against raw tables.
//!
//! Every axiom is an instance-level function returning whether it holds at
//! one witness; the `brute_*_ok` predicates quantify over all witnesses and
//! [`super::recheck`] evaluates a single reported one.

use crate::algebra::{OpAlgebra, Term};
use crate::groupoid::{FinGroupoid, GpdAction, GpdMorphism};
use crate::internal::{InternalAction, InternalGroupoid, InternalMorphism};
use crate::xmod::{CrossedModule, XModMorphism};

/// Owned tables of a group with operations.
#[derive(Clone, Debug)]
pub struct RawAlg {
    pub n: usize,
    pub zero: usize,
    pub add: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    /// `(name, opposite, table)`.
    pub binary: Vec<(String, String, Vec<Vec<usize>>)>,
    pub unary: Vec<(String, Vec<usize>)>,
    /// `(text, lhs, rhs, variable count)`.
    pub identities: Vec<(String, Term, Term, usize)>,
}

impl From<&OpAlgebra> for RawAlg {
    fn from(a: &OpAlgebra) -> Self {
        RawAlg {
            n: a.size(),
            zero: a.zero(),
            add: a.add_table().clone(),
            neg: a.neg_map().to_vec(),
            binary: a
                .binary_ops()
                .iter()
                .map(|o| (o.name.clone(), o.opposite.clone(), o.table.clone()))
                .collect(),
            unary: a.unary_ops().iter().map(|o| (o.name.clone(), o.map.clone())).collect(),
            identities: a
                .identities()
                .iter()
                .map(|i| {
                    (
                        i.text().to_string(),
                        i.lhs().clone(),
                        i.rhs().clone(),
                        i.variables().len(),
                    )
                })
                .collect(),
        }
    }
}

impl RawAlg {
    pub(super) fn bin(&self, name: &str) -> Option<&Vec<Vec<usize>>> {
        self.binary.iter().find(|b| b.0 == name).map(|b| &b.2)
    }

    pub(super) fn un(&self, name: &str) -> Option<&Vec<usize>> {
        self.unary.iter().find(|u| u.0 == name).map(|u| &u.1)
    }

    pub(super) fn assoc(&self, x: usize, y: usize, z: usize) -> bool {
        self.add[self.add[x][y]][z] == self.add[x][self.add[y][z]]
    }

    pub(super) fn unit(&self, x: usize) -> bool {
        self.add[self.zero][x] == x && self.add[x][self.zero] == x
    }

    pub(super) fn inverse(&self, x: usize) -> bool {
        self.add[x][self.neg[x]] == self.zero && self.add[self.neg[x]][x] == self.zero
    }

    pub(super) fn distrib(&self, op: &str, x: usize, y: usize, z: usize) -> bool {
        self.bin(op)
            .is_some_and(|t| t[x][self.add[y][z]] == self.add[t[x][y]][t[x][z]])
    }

    pub(super) fn opposite(&self, op: &str, opp: &str, x: usize, y: usize) -> bool {
        match (self.bin(op), self.bin(opp)) {
            (Some(t), Some(o)) => o[x][y] == t[y][x],
            _ => false,
        }
    }

    pub(super) fn opposite_pairing(&self) -> bool {
        self.binary
            .iter()
            .all(|(name, opp, _)| self.binary.iter().any(|(n2, o2, _)| n2 == opp && o2 == name))
    }

    pub(super) fn unary_additive(&self, w: &str, x: usize, y: usize) -> bool {
        self.un(w).is_some_and(|m| m[self.add[x][y]] == self.add[m[x]][m[y]])
    }

    pub(super) fn unary_star(&self, w: &str, op: &str, x: usize, y: usize) -> bool {
        match (self.un(w), self.bin(op)) {
            (Some(m), Some(t)) => t[m[x]][y] == m[t[x][y]],
            _ => false,
        }
    }

    fn eval(&self, t: &Term, v: &[usize]) -> Option<usize> {
        Some(match t {
            Term::Var(i) => *v.get(*i)?,
            Term::Zero => self.zero,
            Term::Neg(x) => self.neg[self.eval(x, v)?],
            Term::Add(l, r) => self.add[self.eval(l, v)?][self.eval(r, v)?],
            Term::Binary(name, l, r) => self.bin(name)?[self.eval(l, v)?][self.eval(r, v)?],
            Term::Unary(name, x) => self.un(name)?[self.eval(x, v)?],
        })
    }

    /// Whether identity `k` holds under the assignment `v`.
    pub(super) fn identity_at(&self, k: usize, v: &[usize]) -> bool {
        let (_, l, r, vars) = &self.identities[k];
        if v.len() != *vars || v.iter().any(|&x| x >= self.n) {
            return false;
        }
        match (self.eval(l, v), self.eval(r, v)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    pub fn is_ok(&self) -> bool {
        let e = 0..self.n;
        let pairs = || e.clone().flat_map(|x| e.clone().map(move |y| (x, y)));
        let triples = || pairs().flat_map(|(x, y)| e.clone().map(move |z| (x, y, z)));
        if !triples().all(|(x, y, z)| self.assoc(x, y, z)) {
            return false;
        }
        if !e.clone().all(|x| self.unit(x) && self.inverse(x)) || !self.opposite_pairing() {
            return false;
        }
        for (name, opp, _) in &self.binary {
            if !triples().all(|(x, y, z)| self.distrib(name, x, y, z)) {
                return false;
            }
            if !pairs().all(|(x, y)| self.opposite(name, opp, x, y)) {
                return false;
            }
        }
        for (w, _) in &self.unary {
            if !pairs().all(|(x, y)| self.unary_additive(w, x, y)) {
                return false;
            }
            for (op, _, _) in &self.binary {
                if !pairs().all(|(x, y)| self.unary_star(w, op, x, y)) {
                    return false;
                }
            }
        }
        (0..self.identities.len()).all(|k| {
            let vars = self.identities[k].3;
            let total = self.n.pow(vars as u32);
            (0..total).all(|mut code| {
                let v: Vec<usize> = (0..vars)
                    .map(|_| {
                        let d = code % self.n;
                        code /= self.n;
                        d
                    })
                    .collect();
                self.identity_at(k, &v)
            })
        })
    }

    pub(super) fn same_names(&self, other: &RawAlg) -> bool {
        let names = |r: &RawAlg| {
            let mut b: Vec<&String> = r.binary.iter().map(|x| &x.0).collect();
            let mut u: Vec<&String> = r.unary.iter().map(|x| &x.0).collect();
            b.sort();
            u.sort();
            (
                b.into_iter().cloned().collect::<Vec<_>>(),
                u.into_iter().cloned().collect::<Vec<_>>(),
            )
        };
        names(self) == names(other)
    }
}

pub fn brute_algebra_ok(a: &OpAlgebra) -> bool {
    RawAlg::from(a).is_ok()
}

/// Instance-level homomorphism conditions for `f: s → t`.
pub(super) fn hom_add(s: &RawAlg, t: &RawAlg, f: &[usize], x: usize, y: usize) -> bool {
    f[s.add[x][y]] == t.add[f[x]][f[y]]
}

pub(super) fn hom_binary(s: &RawAlg, t: &RawAlg, f: &[usize], op: &str, x: usize, y: usize) -> bool {
    match (s.bin(op), t.bin(op)) {
        (Some(a), Some(b)) => f[a[x][y]] == b[f[x]][f[y]],
        _ => false,
    }
}

pub(super) fn hom_unary(s: &RawAlg, t: &RawAlg, f: &[usize], w: &str, x: usize) -> bool {
    match (s.un(w), t.un(w)) {
        (Some(a), Some(b)) => f[a[x]] == b[f[x]],
        _ => false,
    }
}

pub(super) fn hom_ok(s: &RawAlg, t: &RawAlg, f: &[usize]) -> bool {
    if !s.same_names(t) {
        return false;
    }
    let e = 0..s.n;
    e.clone().all(|x| e.clone().all(|y| hom_add(s, t, f, x, y)))
        && s.binary
            .iter()
            .all(|(op, _, _)| e.clone().all(|x| e.clone().all(|y| hom_binary(s, t, f, op, x, y))))
        && s.unary.iter().all(|(w, _)| e.clone().all(|x| hom_unary(s, t, f, w, x)))
}

/// Groupoid axioms at single witnesses.
pub(super) struct RawGpd<'a>(pub &'a FinGroupoid);

impl RawGpd<'_> {
    fn comp(&self, a: usize, b: usize) -> Option<usize> {
        self.0.comp_table().get(&(a, b)).copied()
    }

    pub fn identity_endpoints(&self, x: usize) -> bool {
        let e = self.0.identity_map()[x];
        self.0.src_map()[e] == x && self.0.tgt_map()[e] == x
    }

    pub fn comp_domain(&self, a: usize, b: usize) -> bool {
        (self.0.tgt_map()[a] == self.0.src_map()[b]) == self.comp(a, b).is_some()
    }

    pub fn comp_endpoints(&self, a: usize, b: usize) -> bool {
        let (s, t) = (self.0.src_map(), self.0.tgt_map());
        self.comp(a, b).is_none_or(|c| s[c] == s[a] && t[c] == t[b])
    }

    pub fn unit_left(&self, a: usize) -> bool {
        self.comp(self.0.identity_map()[self.0.src_map()[a]], a) == Some(a)
    }

    pub fn unit_right(&self, a: usize) -> bool {
        self.comp(a, self.0.identity_map()[self.0.tgt_map()[a]]) == Some(a)
    }

    pub fn assoc(&self, a: usize, b: usize, c: usize) -> bool {
        let l = self.comp(a, b).and_then(|ab| self.comp(ab, c));
        let r = self.comp(b, c).and_then(|bc| self.comp(a, bc));
        match (l, r) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        }
    }

    pub fn inverse_of(&self, a: usize) -> Option<usize> {
        let ids = self.0.identity_map();
        let (s, t) = (self.0.src_map()[a], self.0.tgt_map()[a]);
        (0..self.0.n_arrows()).find(|&b| self.comp(a, b) == Some(ids[s]) && self.comp(b, a) == Some(ids[t]))
    }

    pub fn is_ok(&self) -> bool {
        let (no, na) = (self.0.n_objects(), self.0.n_arrows());
        (0..no).all(|x| self.identity_endpoints(x))
            && (0..na).all(|a| (0..na).all(|b| self.comp_domain(a, b) && self.comp_endpoints(a, b)))
            && (0..na).all(|a| self.unit_left(a) && self.unit_right(a) && self.inverse_of(a).is_some())
            && (0..na).all(|a| (0..na).all(|b| (0..na).all(|c| self.assoc(a, b, c))))
    }
}

pub fn brute_groupoid_ok(g: &FinGroupoid) -> bool {
    RawGpd(g).is_ok()
}

/// Functor conditions at single witnesses.
pub(super) struct RawMor<'a>(
    pub &'a FinGroupoid,
    pub &'a FinGroupoid,
    pub &'a [usize],
    pub &'a [usize],
);

impl RawMor<'_> {
    pub fn src(&self, a: usize) -> bool {
        self.1.src_map()[self.2[a]] == self.3[self.0.src_map()[a]]
    }

    pub fn tgt(&self, a: usize) -> bool {
        self.1.tgt_map()[self.2[a]] == self.3[self.0.tgt_map()[a]]
    }

    pub fn identity(&self, x: usize) -> bool {
        self.2[self.0.identity_map()[x]] == self.1.identity_map()[self.3[x]]
    }

    pub fn comp(&self, a: usize, b: usize) -> bool {
        match self.0.comp_table().get(&(a, b)) {
            Some(&c) => self.1.comp_table().get(&(self.2[a], self.2[b])) == Some(&self.2[c]),
            None => true,
        }
    }

    pub fn is_ok(&self) -> bool {
        let (no, na) = (self.0.n_objects(), self.0.n_arrows());
        (0..na).all(|a| self.src(a) && self.tgt(a))
            && (0..no).all(|x| self.identity(x))
            && (0..na).all(|a| (0..na).all(|b| self.comp(a, b)))
    }
}

/// Source and target are groupoids and the maps form a functor.
pub fn brute_morphism_ok(f: &GpdMorphism) -> bool {
    brute_groupoid_ok(&f.source)
        && brute_groupoid_ok(&f.target)
        && RawMor(&f.source, &f.target, &f.arrow_map, &f.object_map).is_ok()
}

/// Action axioms at single witnesses.
pub(super) struct RawAct<'a>(pub &'a GpdAction);

impl RawAct<'_> {
    fn act(&self, x: usize, a: usize) -> Option<usize> {
        self.0.phi.get(&(x, a)).copied()
    }

    pub fn domain(&self, x: usize, a: usize) -> bool {
        (self.0.theta[x] == self.0.groupoid.src_map()[a]) == self.act(x, a).is_some()
    }

    pub fn theta(&self, x: usize, a: usize) -> bool {
        self.act(x, a)
            .is_none_or(|y| self.0.theta[y] == self.0.groupoid.tgt_map()[a])
    }

    pub fn unit(&self, x: usize) -> bool {
        self.act(x, self.0.groupoid.identity_map()[self.0.theta[x]]) == Some(x)
    }

    pub fn assoc(&self, x: usize, a: usize, b: usize) -> bool {
        let ab = self.0.groupoid.comp_table().get(&(a, b)).copied();
        let l = ab.and_then(|ab| self.act(x, ab));
        let r = self.act(x, a).and_then(|xa| self.act(xa, b));
        match (l, r) {
            (Some(p), Some(q)) => p == q,
            _ => true,
        }
    }

    pub fn is_ok(&self) -> bool {
        let (n, na) = (self.0.set_size, self.0.groupoid.n_arrows());
        (0..n).all(|x| self.unit(x) && (0..na).all(|a| self.domain(x, a) && self.theta(x, a)))
            && (0..n).all(|x| (0..na).all(|a| (0..na).all(|b| self.assoc(x, a, b))))
    }
}

pub fn brute_action_ok(act: &GpdAction) -> bool {
    brute_groupoid_ok(&act.groupoid) && RawAct(act).is_ok()
}

/// Internal-groupoid axioms at single witnesses.
pub(super) struct RawInt<'a> {
    pub g: &'a FinGroupoid,
    pub ar: RawAlg,
    pub ob: RawAlg,
}

impl<'a> RawInt<'a> {
    pub fn new(g: &'a InternalGroupoid) -> Self {
        RawInt {
            g: &g.gpd,
            ar: RawAlg::from(&g.arrow_alg),
            ob: RawAlg::from(&g.object_alg),
        }
    }

    fn comp(&self, a: usize, b: usize) -> Option<usize> {
        self.g.comp_table().get(&(a, b)).copied()
    }

    /// `(a⋆b)∘(c⋆d) = (a∘c)⋆(b∘d)` whenever the right side is defined;
    /// `op` is `+` or a binary operation name.
    pub fn interchange(&self, op: &str, a: usize, b: usize, c: usize, d: usize) -> bool {
        let f = |x: usize, y: usize| -> Option<usize> {
            if op == "+" {
                Some(self.ar.add[x][y])
            } else {
                self.ar.bin(op).map(|t| t[x][y])
            }
        };
        let (Some(ac), Some(bd)) = (self.comp(a, c), self.comp(b, d)) else {
            return true;
        };
        match (f(a, b), f(c, d), f(ac, bd)) {
            (Some(ab), Some(cd), Some(rhs)) => self.comp(ab, cd) == Some(rhs),
            _ => false,
        }
    }

    pub fn unary_functor(&self, w: &str, a: usize, c: usize) -> bool {
        let Some(m) = self.ar.un(w) else { return false };
        match self.comp(a, c) {
            Some(ac) => self.comp(m[a], m[c]) == Some(m[ac]),
            None => true,
        }
    }

    pub fn inverse_formula(&self, a: usize) -> bool {
        let (ids, src, tgt) = (self.g.identity_map(), self.g.src_map(), self.g.tgt_map());
        let ar = &self.ar;
        let formula = ar.add[ar.add[ids[tgt[a]]][ar.neg[a]]][ids[src[a]]];
        RawGpd(self.g).inverse_of(a) == Some(formula)
    }

    pub fn is_ok(&self) -> bool {
        if !self.ar.is_ok() || !self.ob.is_ok() || !RawGpd(self.g).is_ok() || !self.ar.same_names(&self.ob) {
            return false;
        }
        if !hom_ok(&self.ar, &self.ob, self.g.src_map())
            || !hom_ok(&self.ar, &self.ob, self.g.tgt_map())
            || !hom_ok(&self.ob, &self.ar, self.g.identity_map())
        {
            return false;
        }
        let na = self.g.n_arrows();
        let mut ops = vec!["+".to_string()];
        ops.extend(self.ar.binary.iter().map(|b| b.0.clone()));
        let composable: Vec<(usize, usize)> = (0..na)
            .flat_map(|a| (0..na).map(move |c| (a, c)))
            .filter(|&(a, c)| self.g.tgt_map()[a] == self.g.src_map()[c])
            .collect();
        for op in &ops {
            for &(a, c) in &composable {
                for &(b, d) in &composable {
                    if !self.interchange(op, a, b, c, d) {
                        return false;
                    }
                }
            }
        }
        self.ar
            .unary
            .iter()
            .all(|(w, _)| composable.iter().all(|&(a, c)| self.unary_functor(w, a, c)))
            && (0..na).all(|a| self.inverse_formula(a))
    }
}

pub fn brute_internal_ok(g: &InternalGroupoid) -> bool {
    RawInt::new(g).is_ok()
}

pub fn brute_internal_morphism_ok(p: &InternalMorphism) -> bool {
    let (s, t) = (RawInt::new(&p.source), RawInt::new(&p.target));
    s.is_ok()
        && t.is_ok()
        && RawMor(&p.source.gpd, &p.target.gpd, &p.arrow_map, &p.object_map).is_ok()
        && hom_ok(&s.ar, &t.ar, &p.arrow_map)
        && hom_ok(&s.ob, &t.ob, &p.object_map)
}

/// Compatibility of an internal action with the operations.
pub(super) struct RawIAct<'a> {
    pub act: &'a GpdAction,
    pub ar: RawAlg,
    pub xs: RawAlg,
}

impl<'a> RawIAct<'a> {
    pub fn new(a: &'a InternalAction) -> Self {
        RawIAct {
            act: &a.action,
            ar: RawAlg::from(&a.internal.arrow_alg),
            xs: RawAlg::from(&a.set_alg),
        }
    }

    /// `(x⋆y)(a⋆b) = (xa)⋆(yb)` whenever the right side is defined.
    pub fn compat(&self, op: &str, x: usize, y: usize, a: usize, b: usize) -> bool {
        let phi = |x: usize, a: usize| self.act.phi.get(&(x, a)).copied();
        let (Some(xa), Some(yb)) = (phi(x, a), phi(y, b)) else {
            return true;
        };
        let (on_x, on_a, rhs) = if op == "+" {
            (self.xs.add[x][y], self.ar.add[a][b], self.xs.add[xa][yb])
        } else {
            match (self.xs.bin(op), self.ar.bin(op)) {
                (Some(tx), Some(ta)) => (tx[x][y], ta[a][b], tx[xa][yb]),
                _ => return false,
            }
        };
        phi(on_x, on_a) == Some(rhs)
    }

    pub fn unary(&self, w: &str, x: usize, a: usize) -> bool {
        let phi = |x: usize, a: usize| self.act.phi.get(&(x, a)).copied();
        let (Some(mx), Some(ma)) = (self.xs.un(w), self.ar.un(w)) else {
            return false;
        };
        match phi(x, a) {
            Some(xa) => phi(mx[x], ma[a]) == Some(mx[xa]),
            None => true,
        }
    }
}

pub fn brute_internal_action_ok(a: &InternalAction) -> bool {
    if !brute_internal_ok(&a.internal) || !RawAct(&a.action).is_ok() {
        return false;
    }
    let r = RawIAct::new(a);
    if !r.xs.is_ok() || !hom_ok(&r.xs, &RawAlg::from(&a.internal.object_alg), &a.action.theta) {
        return false;
    }
    let defined: Vec<(usize, usize)> = a.action.phi.keys().copied().collect();
    let mut ops = vec!["+".to_string()];
    ops.extend(r.xs.binary.iter().map(|b| b.0.clone()));
    ops.iter().all(|op| {
        defined
            .iter()
            .all(|&(x, p)| defined.iter().all(|&(y, q)| r.compat(op, x, y, p, q)))
    }) && r
        .xs
        .unary
        .iter()
        .all(|(w, _)| defined.iter().all(|&(x, p)| r.unary(w, x, p)))
}

/// Crossed-module axioms at single witnesses, with the semidirect product
/// rebuilt from the raw action tables.
pub(super) struct RawXMod {
    pub a: RawAlg,
    pub b: RawAlg,
    pub alpha: Vec<usize>,
    pub dot: Vec<Vec<usize>>,
    pub stars: Vec<(String, Vec<Vec<usize>>)>,
}

impl RawXMod {
    pub fn new(x: &CrossedModule) -> Self {
        RawXMod {
            a: RawAlg::from(x.a()),
            b: RawAlg::from(x.b()),
            alpha: x.alpha.clone(),
            dot: x.action.dot_table().clone(),
            stars: x.action.star_tables().to_vec(),
        }
    }

    pub fn star(&self, op: &str) -> Option<&Vec<Vec<usize>>> {
        self.stars.iter().find(|s| s.0 == op).map(|s| &s.1)
    }

    /// `B ⋉ A` on pairs `b·|A| + a`.
    pub fn semidirect(&self) -> Option<RawAlg> {
        let (a, b) = (&self.a, &self.b);
        let na = a.n;
        let n = a.n * b.n;
        let split = |i: usize| (i / na, i % na);
        let pair = |bb: usize, aa: usize| bb * na + aa;
        let add = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let ((b1, a1), (b2, a2)) = (split(i), split(j));
                        pair(b.add[b1][b2], a.add[self.dot[b.neg[b2]][a1]][a2])
                    })
                    .collect()
            })
            .collect();
        let neg = (0..n)
            .map(|i| {
                let (bb, aa) = split(i);
                pair(b.neg[bb], a.neg[self.dot[bb][aa]])
            })
            .collect();
        let mut binary = Vec::new();
        for (name, opp, ta) in &a.binary {
            let (tb, s, so) = (b.bin(name)?, self.star(name)?, self.star(opp)?);
            let t = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let ((b1, a1), (b2, a2)) = (split(i), split(j));
                            pair(tb[b1][b2], a.add[a.add[s[b1][a2]][so[b2][a1]]][ta[a1][a2]])
                        })
                        .collect()
                })
                .collect();
            binary.push((name.clone(), opp.clone(), t));
        }
        let mut unary = Vec::new();
        for (name, ma) in &a.unary {
            let mb = b.un(name)?;
            unary.push((name.clone(), (0..n).map(|i| pair(mb[i / na], ma[i % na])).collect()));
        }
        let mut identities = a.identities.clone();
        for id in &b.identities {
            if !identities.iter().any(|x| x.0 == id.0) {
                identities.push(id.clone());
            }
        }
        Some(RawAlg {
            n,
            zero: pair(b.zero, a.zero),
            add,
            neg,
            binary,
            unary,
            identities,
        })
    }

    pub fn cm1(&self, bb: usize, aa: usize) -> bool {
        let b = &self.b;
        self.alpha[self.dot[bb][aa]] == b.add[b.add[bb][self.alpha[aa]]][b.neg[bb]]
    }

    pub fn cm2(&self, a1: usize, a2: usize) -> bool {
        let a = &self.a;
        self.dot[self.alpha[a1]][a2] == a.add[a.add[a1][a2]][a.neg[a1]]
    }

    pub fn cm3(&self, op: &str, a1: usize, a2: usize) -> bool {
        match (self.star(op), self.a.bin(op)) {
            (Some(s), Some(t)) => s[self.alpha[a1]][a2] == t[a1][a2],
            _ => false,
        }
    }

    pub fn cm4_left(&self, op: &str, bb: usize, aa: usize) -> bool {
        match (self.star(op), self.b.bin(op)) {
            (Some(s), Some(t)) => self.alpha[s[bb][aa]] == t[bb][self.alpha[aa]],
            _ => false,
        }
    }

    /// `α(a⋆b) = α(a)⋆b` with `a⋆b` read as `b⋆°a`.
    pub fn cm4_right(&self, op: &str, aa: usize, bb: usize) -> bool {
        let Some(opp) = self.a.binary.iter().find(|x| x.0 == op).map(|x| x.1.clone()) else {
            return false;
        };
        match (self.star(&opp), self.b.bin(op)) {
            (Some(so), Some(t)) => self.alpha[so[bb][aa]] == t[self.alpha[aa]][bb],
            _ => false,
        }
    }

    pub fn is_ok(&self) -> bool {
        let (a, b) = (&self.a, &self.b);
        if !a.is_ok() || !b.is_ok() || !a.same_names(b) || !hom_ok(a, b, &self.alpha) {
            return false;
        }
        if !self.semidirect().is_some_and(|s| s.is_ok()) {
            return false;
        }
        let (ea, eb) = (0..a.n, 0..b.n);
        let ba = || eb.clone().flat_map(|x| ea.clone().map(move |y| (x, y)));
        let aa = || ea.clone().flat_map(|x| ea.clone().map(move |y| (x, y)));
        ba().all(|(x, y)| self.cm1(x, y))
            && aa().all(|(x, y)| self.cm2(x, y))
            && a.binary.iter().all(|(op, _, _)| {
                aa().all(|(x, y)| self.cm3(op, x, y))
                    && ba().all(|(x, y)| self.cm4_left(op, x, y) && self.cm4_right(op, y, x))
            })
    }
}

pub fn brute_xmod_ok(x: &CrossedModule) -> bool {
    RawXMod::new(x).is_ok()
}

/// Crossed-module morphism conditions at single witnesses.
pub(super) struct RawXMor<'a> {
    pub s: RawXMod,
    pub t: RawXMod,
    pub f1: &'a [usize],
    pub f2: &'a [usize],
}

impl<'a> RawXMor<'a> {
    pub fn new(m: &'a XModMorphism) -> Self {
        RawXMor {
            s: RawXMod::new(&m.source),
            t: RawXMod::new(&m.target),
            f1: &m.f1,
            f2: &m.f2,
        }
    }

    pub fn alpha(&self, a: usize) -> bool {
        self.f2[self.s.alpha[a]] == self.t.alpha[self.f1[a]]
    }

    pub fn dot(&self, b: usize, a: usize) -> bool {
        self.f1[self.s.dot[b][a]] == self.t.dot[self.f2[b]][self.f1[a]]
    }

    pub fn star(&self, op: &str, b: usize, a: usize) -> bool {
        match (self.s.star(op), self.t.star(op)) {
            (Some(x), Some(y)) => self.f1[x[b][a]] == y[self.f2[b]][self.f1[a]],
            _ => false,
        }
    }

    pub fn is_ok(&self) -> bool {
        if !self.s.is_ok() || !self.t.is_ok() {
            return false;
        }
        if !hom_ok(&self.s.a, &self.t.a, self.f1) || !hom_ok(&self.s.b, &self.t.b, self.f2) {
            return false;
        }
        let (na, nb) = (self.s.a.n, self.s.b.n);
        (0..na).all(|a| self.alpha(a))
            && (0..nb).all(|b| {
                (0..na).all(|a| self.dot(b, a) && self.s.a.binary.iter().all(|(op, _, _)| self.star(op, b, a)))
            })
    }
}

pub fn brute_xmod_morphism_ok(m: &XModMorphism) -> bool {
    RawXMor::new(m).is_ok()
}
