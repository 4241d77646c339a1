//! Finite groupoids, morphisms, covering morphisms and lifting, actions on
//! sets, action groupoids and coset covers.
//!
//! Composition is written `a∘b` and means "`a` then `b`": it is defined when
//! `tgt(a) = src(b)`, and `src(a∘b) = src(a)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// A finite groupoid with objects `0..n_objects` and arrows `0..n_arrows`.
/// Composition is stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroupoid {
    n_objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    comp: BTreeMap<(usize, usize), usize>,
}

impl FinGroupoid {
    /// Checks shapes and ranges only; use [`validate_groupoid`] for axioms.
    pub fn new(
        n_objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        identity: Vec<usize>,
        comp: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let n = src.len();
        if tgt.len() != n {
            return Err(Error::malformed(
                "tgt",
                format!("expected length {n}, found {}", tgt.len()),
            ));
        }
        if identity.len() != n_objects {
            return Err(Error::malformed(
                "identity",
                format!("expected length {n_objects}, found {}", identity.len()),
            ));
        }
        for (what, m, range) in [
            ("src", &src, n_objects),
            ("tgt", &tgt, n_objects),
            ("identity", &identity, n),
        ] {
            if let Some(&bad) = m.iter().find(|&&v| v >= range) {
                return Err(Error::malformed(
                    what,
                    format!("entry {bad} is out of range 0..{range}"),
                ));
            }
        }
        let mut table = BTreeMap::new();
        for (a, b, c) in comp {
            if a >= n || b >= n || c >= n {
                return Err(Error::malformed(
                    "comp",
                    format!("entry ({a},{b},{c}) is out of range 0..{n}"),
                ));
            }
            if table.insert((a, b), c).is_some() {
                return Err(Error::malformed("comp", format!("pair ({a},{b}) listed twice")));
            }
        }
        Ok(FinGroupoid {
            n_objects,
            src,
            tgt,
            identity,
            comp: table,
        })
    }

    /// Fills in `a∘b = f(a, b)` for every composable pair.
    pub fn from_fn(
        n_objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        identity: Vec<usize>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = src.len();
        let mut comp = Vec::new();
        if tgt.len() == n {
            for a in 0..n {
                for b in 0..n {
                    if tgt[a] == src[b] {
                        comp.push((a, b, f(a, b)));
                    }
                }
            }
        }
        FinGroupoid::new(n_objects, src, tgt, identity, comp)
    }

    /// One object, arrows `0..n`, composition `add`.
    pub fn one_object(n: usize, zero: usize, add: impl Fn(usize, usize) -> usize) -> Result<Self> {
        FinGroupoid::from_fn(1, vec![0; n], vec![0; n], vec![zero], add)
    }

    /// Identity arrows only.
    pub fn discrete(n_objects: usize) -> Self {
        let ids: Vec<usize> = (0..n_objects).collect();
        FinGroupoid::from_fn(n_objects, ids.clone(), ids.clone(), ids, |a, _| a).expect("well shaped")
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_arrows(&self) -> usize {
        self.src.len()
    }

    pub fn objects(&self) -> std::ops::Range<usize> {
        0..self.n_objects
    }

    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.src.len()
    }

    #[inline]
    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    #[inline]
    pub fn tgt(&self, a: usize) -> usize {
        self.tgt[a]
    }

    #[inline]
    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn src_map(&self) -> &[usize] {
        &self.src
    }

    pub fn tgt_map(&self) -> &[usize] {
        &self.tgt
    }

    pub fn identity_map(&self) -> &[usize] {
        &self.identity
    }

    pub fn comp_table(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.comp
    }

    /// `a∘b`, if stored.
    #[inline]
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.comp.get(&(a, b)).copied()
    }

    /// The two-sided inverse of `a`, if one exists.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        let (x, y) = (self.src(a), self.tgt(a));
        self.arrows()
            .find(|&b| self.compose(a, b) == Some(self.identity(x)) && self.compose(b, a) == Some(self.identity(y)))
    }

    fn object(&self, x: usize) -> Result<usize> {
        if x < self.n_objects {
            Ok(x)
        } else {
            Err(Error::UnknownObject(x))
        }
    }

    /// Arrows with source `x`, ascending.
    pub fn star(&self, x: usize) -> Result<Vec<usize>> {
        self.object(x)?;
        Ok(self.arrows().filter(|&a| self.src(a) == x).collect())
    }

    /// Arrows from `x` to `x`, ascending.
    pub fn object_group(&self, x: usize) -> Result<Vec<usize>> {
        self.object(x)?;
        Ok(self.hom(x, x))
    }

    /// Arrows from `x` to `y`, ascending.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.arrows()
            .filter(|&a| self.src(a) == x && self.tgt(a) == y)
            .collect()
    }

    pub fn is_transitive(&self) -> bool {
        let mut reach = vec![vec![false; self.n_objects]; self.n_objects];
        for a in self.arrows() {
            reach[self.src(a)][self.tgt(a)] = true;
        }
        reach.iter().all(|row| row.iter().all(|&r| r))
    }

    pub(crate) fn require_transitive(&self, what: &str) -> Result<()> {
        if self.is_transitive() {
            return Ok(());
        }
        let (x, y) = self
            .objects()
            .flat_map(|x| self.objects().map(move |y| (x, y)))
            .find(|&(x, y)| self.hom(x, y).is_empty())
            .expect("some hom-set is empty");
        Err(Error::NotTransitive(format!(
            "{what}: no arrow from object {x} to object {y}"
        )))
    }
}

/// Exhaustive check of the groupoid axioms.
pub fn validate_groupoid(g: &FinGroupoid) -> ValidationReport {
    let mut r = ValidationReport::new();
    for x in g.objects() {
        let e = g.identity(x);
        if g.src(e) != x || g.tgt(e) != x {
            r.fail(
                "groupoid.identity_endpoints",
                &[],
                &[x],
                "identity arrow does not run from x to x",
            );
        }
    }
    for a in g.arrows() {
        for b in g.arrows() {
            let composable = g.tgt(a) == g.src(b);
            match (composable, g.compose(a, b)) {
                (true, None) => r.fail("groupoid.comp_domain", &[], &[a, b], "composable pair has no composite"),
                (false, Some(_)) => r.fail(
                    "groupoid.comp_domain",
                    &[],
                    &[a, b],
                    "composite given for a non-composable pair",
                ),
                (true, Some(c)) => {
                    if g.src(c) != g.src(a) || g.tgt(c) != g.tgt(b) {
                        r.fail(
                            "groupoid.comp_endpoints",
                            &[],
                            &[a, b],
                            "a∘b does not run from src(a) to tgt(b)",
                        );
                    }
                }
                (false, None) => {}
            }
        }
    }
    for a in g.arrows() {
        if g.compose(g.identity(g.src(a)), a) != Some(a) {
            r.fail("groupoid.unit_left", &[], &[a], "ε(src a)∘a != a");
        }
        if g.compose(a, g.identity(g.tgt(a))) != Some(a) {
            r.fail("groupoid.unit_right", &[], &[a], "a∘ε(tgt a) != a");
        }
    }
    'assoc: for (&(a, b), &ab) in g.comp_table() {
        for c in g.arrows().filter(|&c| g.src(c) == g.tgt(b)) {
            let lhs = g.compose(ab, c);
            let rhs = g.compose(b, c).and_then(|bc| g.compose(a, bc));
            if let (Some(l), Some(rr)) = (lhs, rhs) {
                if l != rr {
                    r.fail("groupoid.assoc", &[], &[a, b, c], "(a∘b)∘c != a∘(b∘c)");
                    if r.saturated("groupoid.assoc", &[]) {
                        break 'assoc;
                    }
                }
            }
        }
    }
    for a in g.arrows() {
        if g.inverse(a).is_none() {
            r.fail("groupoid.inverse", &[], &[a], "no two-sided inverse");
        }
    }
    r
}

/// A map of groupoids given on arrows and objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpdMorphism {
    pub source: FinGroupoid,
    pub target: FinGroupoid,
    pub arrow_map: Vec<usize>,
    pub object_map: Vec<usize>,
}

impl GpdMorphism {
    pub fn new(
        source: FinGroupoid,
        target: FinGroupoid,
        arrow_map: Vec<usize>,
        object_map: Vec<usize>,
    ) -> Result<Self> {
        crate::algebra::check_map_shape("arrow_map", &arrow_map, source.n_arrows(), target.n_arrows())?;
        crate::algebra::check_map_shape("object_map", &object_map, source.n_objects(), target.n_objects())?;
        Ok(GpdMorphism {
            source,
            target,
            arrow_map,
            object_map,
        })
    }

    pub fn identity(g: &FinGroupoid) -> Self {
        GpdMorphism {
            source: g.clone(),
            target: g.clone(),
            arrow_map: g.arrows().collect(),
            object_map: g.objects().collect(),
        }
    }

    /// `self` followed by `next`; the target of `self` must be the source
    /// of `next`.
    pub fn then(&self, next: &GpdMorphism) -> Result<GpdMorphism> {
        if self.target != next.source {
            return Err(Error::malformed(
                "then",
                "target of the first map is not the source of the second",
            ));
        }
        Ok(GpdMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            arrow_map: self.arrow_map.iter().map(|&a| next.arrow_map[a]).collect(),
            object_map: self.object_map.iter().map(|&x| next.object_map[x]).collect(),
        })
    }
}

/// Compatibility with source, target, identities and composition.
pub fn check_morphism(f: &GpdMorphism) -> ValidationReport {
    let (s, t) = (&f.source, &f.target);
    let mut r = ValidationReport::new();
    for a in s.arrows() {
        let fa = f.arrow_map[a];
        if t.src(fa) != f.object_map[s.src(a)] {
            r.fail("morphism.src", &[], &[a], "src(f a) != f(src a)");
        }
        if t.tgt(fa) != f.object_map[s.tgt(a)] {
            r.fail("morphism.tgt", &[], &[a], "tgt(f a) != f(tgt a)");
        }
    }
    for x in s.objects() {
        if f.arrow_map[s.identity(x)] != t.identity(f.object_map[x]) {
            r.fail("morphism.identity", &[], &[x], "f(ε x) != ε(f x)");
        }
    }
    for (&(a, b), &c) in s.comp_table() {
        if t.compose(f.arrow_map[a], f.arrow_map[b]) != Some(f.arrow_map[c]) {
            r.fail("morphism.comp", &[], &[a, b], "f(a∘b) != f(a)∘f(b)");
        }
    }
    r
}

fn require_morphism(f: &GpdMorphism) -> Result<()> {
    let r = check_morphism(f);
    if r.is_ok() {
        Ok(())
    } else {
        Err(Error::InvalidMorphism(r))
    }
}

/// One `morphism.covering` violation per source object whose star does not
/// map bijectively.
pub fn check_covering(p: &GpdMorphism) -> Result<ValidationReport> {
    require_morphism(p)?;
    let mut r = ValidationReport::new();
    for x in p.source.objects() {
        let up = p.source.star(x)?;
        let down = p.target.star(p.object_map[x])?;
        let mut hit = vec![false; p.target.n_arrows()];
        let mut injective = true;
        for &a in &up {
            injective &= !std::mem::replace(&mut hit[p.arrow_map[a]], true);
        }
        let surjective = down.iter().all(|&b| hit[b]);
        if !injective || !surjective {
            r.fail(
                "morphism.covering",
                &[],
                &[x],
                format!(
                    "star of size {} does not map bijectively onto a star of size {}",
                    up.len(),
                    down.len()
                ),
            );
        }
    }
    Ok(r)
}

pub fn is_covering(p: &GpdMorphism) -> Result<bool> {
    Ok(check_covering(p)?.is_ok())
}

fn require_covering(p: &GpdMorphism) -> Result<()> {
    let r = check_covering(p)?;
    if r.is_ok() {
        Ok(())
    } else {
        Err(Error::NotACovering(r))
    }
}

/// Transitive source and target and every hom-set upstairs of size ≤ 1.
pub fn is_universal_cover(p: &GpdMorphism) -> Result<bool> {
    require_covering(p)?;
    let s = &p.source;
    let thin = s.objects().all(|x| s.objects().all(|y| s.hom(x, y).len() <= 1));
    Ok(thin && s.is_transitive() && p.target.is_transitive())
}

/// `p(G̃(x̃))`, ascending.
pub fn characteristic_group(p: &GpdMorphism, x: usize) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = p.source.object_group(x)?.into_iter().map(|a| p.arrow_map[a]).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// For every source object, the inverse of the star restriction of a
/// covering: `lift[x̃][a]` is the unique arrow over `a` with source `x̃`.
fn star_lifts(p: &GpdMorphism) -> Vec<Vec<Option<usize>>> {
    let mut lift = vec![vec![None; p.target.n_arrows()]; p.source.n_objects()];
    for a in p.source.arrows() {
        lift[p.source.src(a)][p.arrow_map[a]] = Some(a);
    }
    lift
}

/// The unique `f̃` with `p∘f̃ = f` and `f̃(z) = x̃`, for a covering
/// `p: (G̃, x̃) → (G, x)` and `f: (H, z) → (G, x)` with `H` transitive.
///
/// Each object `w` of `H` is reached by a fixed arrow `h_w ∈ H(z, w)` and
/// sent to the target of the lift of `f(h_w)` at `x̃`; each arrow is lifted
/// at the image of its source. When some lifted arrow ends at the wrong
/// object the characteristic group of `f` is not contained in that of `p`.
pub fn lift_morphism(p: &GpdMorphism, f: &GpdMorphism, z: usize, x_tilde: usize) -> Result<GpdMorphism> {
    require_covering(p)?;
    require_morphism(f)?;
    let h = &f.source;
    h.object(z)?;
    p.source.object(x_tilde)?;
    h.require_transitive("source of the map being lifted")?;
    if p.target != f.target {
        return Err(Error::malformed(
            "lift",
            "the map and the covering have different targets",
        ));
    }
    if p.object_map[x_tilde] != f.object_map[z] {
        return Err(Error::BasepointMismatch {
            cover: p.object_map[x_tilde],
            map: f.object_map[z],
        });
    }
    let lift = star_lifts(p);
    let lift_at = |x: usize, a: usize| lift[x][a].expect("covering stars are bijective");

    let mut object_map = vec![0; h.n_objects()];
    for w in h.objects() {
        let h_w = if w == z { h.identity(z) } else { h.hom(z, w)[0] };
        object_map[w] = p.source.tgt(lift_at(x_tilde, f.arrow_map[h_w]));
    }
    let mut arrow_map = vec![0; h.n_arrows()];
    let mut bad = ValidationReport::new();
    for a in h.arrows() {
        let la = lift_at(object_map[h.src(a)], f.arrow_map[a]);
        if p.source.tgt(la) != object_map[h.tgt(a)] {
            bad.fail("lift.endpoint", &[], &[a], "lift of f(a) ends over the wrong object");
        }
        arrow_map[a] = la;
    }
    if !bad.is_ok() {
        return Err(Error::CharacteristicGroupNotContained(bad));
    }
    let out = GpdMorphism::new(h.clone(), p.source.clone(), arrow_map, object_map)?;
    debug_assert!(check_morphism(&out).is_ok());
    Ok(out)
}

/// The unique covering `r` with `q∘r = p` sending `x̃` to `z̃`, for pointed
/// transitive covers `p: (G̃_p, x̃) → G` and `q: (G̃_q, z̃) → G`.
pub fn cover_between_covers(p: &GpdMorphism, x_tilde: usize, q: &GpdMorphism, z_tilde: usize) -> Result<GpdMorphism> {
    require_covering(p)?;
    lift_morphism(q, p, x_tilde, z_tilde)
}

/// An action of a groupoid on the set `0..set_size`, with `φ(x, a) = xa`
/// defined when `θ(x) = src(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpdAction {
    pub groupoid: FinGroupoid,
    pub set_size: usize,
    pub theta: Vec<usize>,
    pub phi: BTreeMap<(usize, usize), usize>,
}

impl GpdAction {
    pub fn new(
        groupoid: FinGroupoid,
        set_size: usize,
        theta: Vec<usize>,
        phi: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        crate::algebra::check_map_shape("theta", &theta, set_size, groupoid.n_objects())?;
        let mut table = BTreeMap::new();
        for (x, a, y) in phi {
            if x >= set_size || y >= set_size || a >= groupoid.n_arrows() {
                return Err(Error::malformed("phi", format!("entry ({x},{a},{y}) is out of range")));
            }
            if table.insert((x, a), y).is_some() {
                return Err(Error::malformed("phi", format!("pair ({x},{a}) listed twice")));
            }
        }
        Ok(GpdAction {
            groupoid,
            set_size,
            theta,
            phi: table,
        })
    }

    /// `G` acting on its objects by `θ = 1` and `xa = tgt(a)`.
    pub fn canonical(g: &FinGroupoid) -> Self {
        let phi = g.arrows().map(|a| (g.src(a), a, g.tgt(a)));
        GpdAction::new(g.clone(), g.n_objects(), g.objects().collect(), phi).expect("well shaped")
    }

    #[inline]
    pub fn act(&self, x: usize, a: usize) -> Option<usize> {
        self.phi.get(&(x, a)).copied()
    }
}

/// The three action axioms plus the domain of `φ`.
pub fn validate_action(act: &GpdAction) -> ValidationReport {
    let g = &act.groupoid;
    let mut r = ValidationReport::new();
    for x in 0..act.set_size {
        for a in g.arrows() {
            let defined = act.theta[x] == g.src(a);
            match (defined, act.act(x, a)) {
                (true, None) => r.fail("action.domain", &[], &[x, a], "θ(x) = src(a) but xa is undefined"),
                (false, Some(_)) => r.fail("action.domain", &[], &[x, a], "xa is given but θ(x) != src(a)"),
                (true, Some(y)) => {
                    if act.theta[y] != g.tgt(a) {
                        r.fail("action.theta", &[], &[x, a], "θ(xa) != tgt(a)");
                    }
                }
                (false, None) => {}
            }
        }
        if act.act(x, g.identity(act.theta[x])) != Some(x) {
            r.fail("action.unit", &[], &[x], "x ε(θ x) != x");
        }
    }
    for (&(a, b), &ab) in g.comp_table() {
        for x in (0..act.set_size).filter(|&x| act.theta[x] == g.src(a)) {
            let lhs = act.act(x, ab);
            let rhs = act.act(x, a).and_then(|xa| act.act(xa, b));
            if let (Some(l), Some(rr)) = (lhs, rhs) {
                if l != rr {
                    r.fail("action.assoc", &[], &[x, a, b], "x(a∘b) != (xa)b");
                }
            }
        }
    }
    r
}

fn require_action(act: &GpdAction) -> Result<()> {
    let r = validate_action(act);
    if r.is_ok() {
        Ok(())
    } else {
        Err(Error::InvalidAction(r))
    }
}

/// Arrows `(a, x)` of the action groupoid in index order: `x` ascending,
/// then `a` ascending within the star of `θ(x)`.
pub fn action_arrows(act: &GpdAction) -> Vec<(usize, usize)> {
    let g = &act.groupoid;
    (0..act.set_size)
        .flat_map(|x| {
            g.arrows()
                .filter(move |&a| g.src(a) == act.theta[x])
                .map(move |a| (a, x))
        })
        .collect()
}

/// `G ⋉ X` with `(a, x)∘(b, xa) = (a∘b, x)`, and its projection `(a, x) ↦ a`.
pub fn action_groupoid(act: &GpdAction) -> Result<(FinGroupoid, GpdMorphism)> {
    require_action(act)?;
    let g = &act.groupoid;
    let arrows = action_arrows(act);
    let index: BTreeMap<(usize, usize), usize> = arrows.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let xa = |(a, x): (usize, usize)| act.act(x, a).expect("defined on the star");
    let src = arrows.iter().map(|&(_, x)| x).collect();
    let tgt = arrows.iter().map(|&p| xa(p)).collect();
    let identity = (0..act.set_size)
        .map(|x| index[&(g.identity(act.theta[x]), x)])
        .collect();
    let mut comp = Vec::new();
    for (i, &(a, x)) in arrows.iter().enumerate() {
        let y = xa((a, x));
        for b in g.arrows().filter(|&b| g.src(b) == act.theta[y]) {
            let ab = g.compose(a, b).expect("validated groupoid");
            comp.push((i, index[&(b, y)], index[&(ab, x)]));
        }
    }
    let big = FinGroupoid::new(act.set_size, src, tgt, identity, comp)?;
    let proj = GpdMorphism::new(
        big.clone(),
        g.clone(),
        arrows.iter().map(|&(a, _)| a).collect(),
        act.theta.clone(),
    )?;
    Ok((big, proj))
}

fn require_permutation(what: &str, m: &[usize], n: usize) -> Result<()> {
    if m.len() == n && crate::algebra::is_bijection(m, n) {
        Ok(())
    } else {
        Err(Error::malformed(what, format!("not a permutation of 0..{n}")))
    }
}

impl FinGroupoid {
    /// The same groupoid with object `x` renamed `objects[x]` and arrow `a`
    /// renamed `arrows[a]`.
    pub fn relabel(&self, objects: &[usize], arrows: &[usize]) -> Result<FinGroupoid> {
        require_permutation("objects", objects, self.n_objects)?;
        require_permutation("arrows", arrows, self.n_arrows())?;
        let n = self.n_arrows();
        let (mut src, mut tgt, mut identity) = (vec![0; n], vec![0; n], vec![0; self.n_objects]);
        for a in self.arrows() {
            src[arrows[a]] = objects[self.src(a)];
            tgt[arrows[a]] = objects[self.tgt(a)];
        }
        for x in self.objects() {
            identity[objects[x]] = arrows[self.identity(x)];
        }
        let comp = self.comp.iter().map(|(&(a, b), &c)| (arrows[a], arrows[b], arrows[c]));
        FinGroupoid::new(self.n_objects, src, tgt, identity, comp)
    }
}

impl GpdMorphism {
    /// Renames the source along permutations, keeping the target.
    pub fn relabel_source(&self, objects: &[usize], arrows: &[usize]) -> Result<GpdMorphism> {
        let source = self.source.relabel(objects, arrows)?;
        let mut am = vec![0; self.arrow_map.len()];
        let mut om = vec![0; self.object_map.len()];
        for (a, &y) in self.arrow_map.iter().enumerate() {
            am[arrows[a]] = y;
        }
        for (x, &y) in self.object_map.iter().enumerate() {
            om[objects[x]] = y;
        }
        GpdMorphism::new(source, self.target.clone(), am, om)
    }
}

impl GpdAction {
    /// Renames element `x` of the set to `perm[x]`.
    pub fn relabel_set(&self, perm: &[usize]) -> Result<GpdAction> {
        require_permutation("set", perm, self.set_size)?;
        let mut theta = vec![0; self.set_size];
        for (x, &t) in self.theta.iter().enumerate() {
            theta[perm[x]] = t;
        }
        let phi = self.phi.iter().map(|(&(x, a), &y)| (perm[x], a, perm[y]));
        GpdAction::new(self.groupoid.clone(), self.set_size, theta, phi)
    }
}

/// Every subgroup of the object group at `x`, each ascending, ordered by
/// size and then lexicographically. Assumes `g` is a groupoid.
pub fn subgroups(g: &FinGroupoid, x: usize) -> Result<Vec<Vec<usize>>> {
    let group = g.object_group(x)?;
    // in a finite group, closure under composition gives a subgroup
    let close = |mut s: BTreeSet<usize>| loop {
        let items: Vec<usize> = s.iter().copied().collect();
        let before = s.len();
        for &a in &items {
            for &b in &items {
                if let Some(c) = g.compose(a, b) {
                    s.insert(c);
                }
            }
        }
        if s.len() == before {
            break s;
        }
    };
    let mut seen = BTreeSet::new();
    let mut todo = vec![close(BTreeSet::from([g.identity(x)]))];
    while let Some(s) = todo.pop() {
        if !seen.insert(s.iter().copied().collect::<Vec<_>>()) {
            continue;
        }
        for &a in group.iter().filter(|a| !s.contains(a)) {
            let mut t = s.clone();
            t.insert(a);
            todo.push(close(t));
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Closure of `c` as a subgroup of the object group at `x`.
pub fn check_subgroup(g: &FinGroupoid, x: usize, c: &[usize]) -> Result<ValidationReport> {
    let group = g.object_group(x)?;
    let mut r = ValidationReport::new();
    for &a in c {
        if !group.contains(&a) {
            r.fail("subgroup.member", &[], &[a], "not in the object group");
        }
    }
    if !c.contains(&g.identity(x)) {
        r.fail("subgroup.identity", &[], &[g.identity(x)], "identity is not a member");
    }
    for &a in c {
        for &b in c {
            if let Some(ab) = g.compose(a, b) {
                if !c.contains(&ab) {
                    r.fail("subgroup.comp", &[], &[a, b], "a∘b is not a member");
                }
            }
        }
        if let Some(inv) = g.inverse(a) {
            if !c.contains(&inv) {
                r.fail("subgroup.inverse", &[], &[a], "inverse is not a member");
            }
        }
    }
    Ok(r)
}

/// The cover of `G` with characteristic group `C` at `x`, built from the
/// action of `G` on the cosets `C∘a`, `a ∈ St x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetCover {
    /// Members of each coset, ascending; the first is its representative.
    pub cosets: Vec<Vec<usize>>,
    pub action: GpdAction,
    pub groupoid: FinGroupoid,
    pub projection: GpdMorphism,
    /// Index of the coset `C` itself.
    pub base: usize,
}

impl CosetCover {
    /// Index of the coset containing `a ∈ St x`.
    pub fn coset_of(&self, a: usize) -> Option<usize> {
        self.cosets.iter().position(|c| c.binary_search(&a).is_ok())
    }
}

pub fn coset_cover(g: &FinGroupoid, x: usize, c: &[usize]) -> Result<CosetCover> {
    g.object(x)?;
    let report = validate_groupoid(g);
    if !report.is_ok() {
        return Err(Error::component("groupoid", report));
    }
    g.require_transitive("coset cover")?;
    let sub = check_subgroup(g, x, c)?;
    if !sub.is_ok() {
        return Err(Error::NotASubgroup(sub));
    }
    let star = g.star(x)?;
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    let mut coset_of = vec![usize::MAX; g.n_arrows()];
    for &a in &star {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = c.iter().map(|&k| g.compose(k, a).expect("k ∈ G(x)")).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            coset_of[m] = cosets.len();
        }
        cosets.push(members);
    }
    // star is scanned in ascending order, so cosets are already ordered by
    // their least member
    let theta: Vec<usize> = cosets.iter().map(|m| g.tgt(m[0])).collect();
    let mut phi = Vec::new();
    for (i, m) in cosets.iter().enumerate() {
        for b in g.arrows().filter(|&b| g.src(b) == theta[i]) {
            phi.push((i, b, coset_of[g.compose(m[0], b).expect("composable")]));
        }
    }
    let action = GpdAction::new(g.clone(), cosets.len(), theta, phi)?;
    let (groupoid, projection) = action_groupoid(&action)?;
    let base = coset_of[g.identity(x)];
    Ok(CosetCover {
        cosets,
        action,
        groupoid,
        projection,
        base,
    })
}

/// Φ: the action of `G` on the objects of a covering, `x̃a` being the
/// target of the lift of `a` at `x̃`.
pub fn covering_to_action(p: &GpdMorphism) -> Result<GpdAction> {
    require_covering(p)?;
    let lift = star_lifts(p);
    let g = &p.target;
    let mut phi = Vec::new();
    for x in p.source.objects() {
        for a in g.arrows().filter(|&a| g.src(a) == p.object_map[x]) {
            let la = lift[x][a].expect("covering stars are bijective");
            phi.push((x, a, p.source.tgt(la)));
        }
    }
    GpdAction::new(g.clone(), p.source.n_objects(), p.object_map.clone(), phi)
}

/// Γ: the projection of the action groupoid.
pub fn action_to_covering(act: &GpdAction) -> Result<GpdMorphism> {
    Ok(action_groupoid(act)?.1)
}
