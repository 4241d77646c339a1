//! Independent checkers used to cross-examine the main code paths.
//!
//! Nothing here calls a validator or construction from the rest of the
//! crate: structures are read through their raw tables only. The module
//! provides isomorphism search for every structure kind, brute-force
//! validity predicates, a covering test that recomputes stars from scratch,
//! and re-verification of reported counterexamples.

mod brute;
mod recheck;
pub mod search;

use crate::algebra::OpAlgebra;
use crate::error::Result;
use crate::groupoid::{FinGroupoid, GpdAction, GpdMorphism};
use crate::internal::{InternalAction, InternalGroupoid, InternalMorphism};
use crate::xmod::CrossedModule;

pub use brute::{
    brute_action_ok, brute_algebra_ok, brute_groupoid_ok, brute_internal_action_ok, brute_internal_morphism_ok,
    brute_internal_ok, brute_morphism_ok, brute_xmod_morphism_ok, brute_xmod_ok, RawAlg,
};
pub use recheck::{recheck, Subject};
pub use search::{find_iso, verify, IsoWitness, OpTable, SearchLimits, Sorted};

fn additive_order(alg: &OpAlgebra, x: usize) -> u64 {
    let mut k = 1;
    let mut y = x;
    while y != alg.zero() {
        y = alg.add_table()[y][x];
        k += 1;
        if k > alg.size() as u64 + 1 {
            break;
        }
    }
    k
}

fn sorted_binary(alg: &OpAlgebra) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..alg.binary_ops().len()).collect();
    idx.sort_by(|&i, &j| alg.binary_ops()[i].name.cmp(&alg.binary_ops()[j].name));
    idx
}

fn sorted_unary(alg: &OpAlgebra) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..alg.unary_ops().len()).collect();
    idx.sort_by(|&i, &j| alg.unary_ops()[i].name.cmp(&alg.unary_ops()[j].name));
    idx
}

/// Adds the operations of `alg` on `sort`, plus colours, to `s`.
fn encode_algebra(s: &mut Sorted, sort: usize, alg: &OpAlgebra, tag: &str) {
    let n = alg.size();
    let z = alg.zero();
    let mut zero = OpTable::new(format!("{tag}zero"), &[], sort);
    zero.set(&[], z);
    let mut add = OpTable::new(format!("{tag}add"), &[sort, sort], sort);
    let mut neg = OpTable::new(format!("{tag}neg"), &[sort], sort);
    for x in 0..n {
        neg.set(&[x], alg.neg_map()[x]);
        for y in 0..n {
            add.set(&[x, y], alg.add_table()[x][y]);
        }
    }
    s.ops.extend([zero, add, neg]);
    for x in 0..n {
        s.colour(sort, x, additive_order(alg, x));
    }
    for k in sorted_binary(alg) {
        let op = &alg.binary_ops()[k];
        let mut t = OpTable::new(format!("{tag}bin:{}", op.name), &[sort, sort], sort);
        for x in 0..n {
            for y in 0..n {
                t.set(&[x, y], op.table[x][y]);
            }
            let sq = op.table[x][x];
            s.colour(sort, x, u64::from(sq == x) | u64::from(sq == z) << 1);
            s.colour(sort, x, (0..n).filter(|&y| op.table[x][y] == z).count() as u64);
        }
        s.ops.push(t);
    }
    for k in sorted_unary(alg) {
        let op = &alg.unary_ops()[k];
        let mut t = OpTable::new(format!("{tag}un:{}", op.name), &[sort], sort);
        for x in 0..n {
            t.set(&[x], op.map[x]);
            s.colour(sort, x, u64::from(op.map[x] == x) | u64::from(op.map[x] == z) << 1);
        }
        s.ops.push(t);
    }
}

const OBJ: usize = 0;
const ARR: usize = 1;

fn encode_groupoid(s: &mut Sorted, g: &FinGroupoid) {
    let (src, tgt, ids) = (g.src_map(), g.tgt_map(), g.identity_map());
    let mut os = OpTable::new("src", &[ARR], OBJ);
    let mut ot = OpTable::new("tgt", &[ARR], OBJ);
    let mut oi = OpTable::new("identity", &[OBJ], ARR);
    let mut oc = OpTable::new("comp", &[ARR, ARR], ARR);
    for a in 0..src.len() {
        os.set(&[a], src[a]);
        ot.set(&[a], tgt[a]);
        let loops = (0..src.len()).filter(|&b| src[b] == src[a] && tgt[b] == src[a]).count();
        s.colour(ARR, a, u64::from(src[a] == tgt[a]) | u64::from(ids.contains(&a)) << 1);
        s.colour(ARR, a, loops as u64);
    }
    for (x, &e) in ids.iter().enumerate() {
        oi.set(&[x], e);
        s.colour(OBJ, x, src.iter().filter(|&&y| y == x).count() as u64);
        s.colour(
            OBJ,
            x,
            (0..src.len()).filter(|&a| src[a] == x && tgt[a] == x).count() as u64,
        );
    }
    for (&(a, b), &c) in g.comp_table() {
        oc.set(&[a, b], c);
    }
    s.ops.extend([os, ot, oi, oc]);
}

fn signatures_agree(a: &OpAlgebra, b: &OpAlgebra) -> bool {
    let names = |x: &OpAlgebra| {
        (
            sorted_binary(x)
                .iter()
                .map(|&k| x.binary_ops()[k].name.clone())
                .collect::<Vec<_>>(),
            sorted_unary(x)
                .iter()
                .map(|&k| x.unary_ops()[k].name.clone())
                .collect::<Vec<_>>(),
        )
    };
    names(a) == names(b)
}

fn none() -> Result<IsoWitness> {
    Ok(IsoWitness::None { explored: 0 })
}

pub fn find_algebra_iso(a: &OpAlgebra, b: &OpAlgebra) -> Result<IsoWitness> {
    find_algebra_iso_with(a, b, SearchLimits::default())
}

pub fn find_algebra_iso_with(a: &OpAlgebra, b: &OpAlgebra, limits: SearchLimits) -> Result<IsoWitness> {
    if !signatures_agree(a, b) {
        return none();
    }
    let enc = |x: &OpAlgebra| {
        let mut s = Sorted::new(&[x.size()]);
        encode_algebra(&mut s, 0, x, "");
        s
    };
    find_iso(&enc(a), &enc(b), limits)
}

/// Maps are `[objects, arrows]`.
pub fn find_groupoid_iso(g: &FinGroupoid, h: &FinGroupoid) -> Result<IsoWitness> {
    let enc = |x: &FinGroupoid| {
        let mut s = Sorted::new(&[x.n_objects(), x.n_arrows()]);
        encode_groupoid(&mut s, x);
        s
    };
    find_iso(&enc(g), &enc(h), SearchLimits::default())
}

fn encode_internal(g: &InternalGroupoid) -> Sorted {
    let mut s = Sorted::new(&[g.gpd.n_objects(), g.gpd.n_arrows()]);
    encode_groupoid(&mut s, &g.gpd);
    encode_algebra(&mut s, OBJ, &g.object_alg, "obj:");
    encode_algebra(&mut s, ARR, &g.arrow_alg, "arr:");
    s
}

/// Maps are `[objects, arrows]`.
pub fn find_internal_iso(g: &InternalGroupoid, h: &InternalGroupoid) -> Result<IsoWitness> {
    if !signatures_agree(&g.arrow_alg, &h.arrow_alg) {
        return none();
    }
    find_iso(&encode_internal(g), &encode_internal(h), SearchLimits::default())
}

fn encode_xmod(x: &CrossedModule) -> Sorted {
    const A: usize = 0;
    const B: usize = 1;
    let (a, b, act) = (x.a(), x.b(), &x.action);
    let mut s = Sorted::new(&[a.size(), b.size()]);
    encode_algebra(&mut s, A, a, "A:");
    encode_algebra(&mut s, B, b, "B:");
    let mut alpha = OpTable::new("alpha", &[A], B);
    for (i, &v) in x.alpha.iter().enumerate() {
        alpha.set(&[i], v);
    }
    let mut dot = OpTable::new("dot", &[B, A], A);
    for bb in 0..b.size() {
        for aa in 0..a.size() {
            dot.set(&[bb, aa], act.dot_table()[bb][aa]);
        }
    }
    s.ops.extend([alpha, dot]);
    let mut stars: Vec<&(String, Vec<Vec<usize>>)> = act.star_tables().iter().collect();
    stars.sort_by(|p, q| p.0.cmp(&q.0));
    for (name, t) in stars {
        let mut o = OpTable::new(format!("star:{name}"), &[B, A], A);
        for bb in 0..b.size() {
            for aa in 0..a.size() {
                o.set(&[bb, aa], t[bb][aa]);
            }
        }
        s.ops.push(o);
    }
    s
}

/// Maps are `[A, B]`.
pub fn find_xmod_iso(x: &CrossedModule, y: &CrossedModule) -> Result<IsoWitness> {
    if !signatures_agree(x.a(), y.a()) {
        return none();
    }
    find_iso(&encode_xmod(x), &encode_xmod(y), SearchLimits::default())
}

fn encode_action(act: &GpdAction) -> Sorted {
    let mut s = Sorted::new(&[act.set_size]);
    for x in 0..act.set_size {
        s.colour(0, x, act.theta[x] as u64);
    }
    let g = &act.groupoid;
    let mut tables: Vec<OpTable> = (0..g.n_arrows())
        .map(|a| OpTable::new(format!("phi:{a}"), &[0], 0))
        .collect();
    for (&(x, a), &y) in &act.phi {
        tables[a].set(&[x], y);
    }
    s.ops.extend(tables);
    s
}

/// An invertible map of sets over the identity of `G` commuting with `θ`
/// and `φ`. Maps are `[X]`.
pub fn find_action_iso(a: &GpdAction, b: &GpdAction) -> Result<IsoWitness> {
    if a.groupoid != b.groupoid {
        return none();
    }
    find_iso(&encode_action(a), &encode_action(b), SearchLimits::default())
}

/// As [`find_action_iso`], also preserving the algebra on `X`.
pub fn find_internal_action_iso(a: &InternalAction, b: &InternalAction) -> Result<IsoWitness> {
    if a.internal != b.internal || !signatures_agree(&a.set_alg, &b.set_alg) {
        return none();
    }
    let enc = |x: &InternalAction| {
        let mut s = encode_action(&x.action);
        encode_algebra(&mut s, 0, &x.set_alg, "");
        s
    };
    find_iso(&enc(a), &enc(b), SearchLimits::default())
}

fn colour_by_projection(s: &mut Sorted, p_objects: &[usize], p_arrows: &[usize]) {
    for (x, &v) in p_objects.iter().enumerate() {
        s.colour(OBJ, x, v as u64);
    }
    for (a, &v) in p_arrows.iter().enumerate() {
        s.colour(ARR, a, v as u64);
    }
}

/// An isomorphism `r` of source groupoids with `q∘r = p`. Maps are
/// `[objects, arrows]`.
pub fn find_cover_iso_over(p: &GpdMorphism, q: &GpdMorphism) -> Result<IsoWitness> {
    if p.target != q.target {
        return none();
    }
    let enc = |m: &GpdMorphism| {
        let mut s = Sorted::new(&[m.source.n_objects(), m.source.n_arrows()]);
        encode_groupoid(&mut s, &m.source);
        colour_by_projection(&mut s, &m.object_map, &m.arrow_map);
        s
    };
    find_iso(&enc(p), &enc(q), SearchLimits::default())
}

/// As [`find_cover_iso_over`], also preserving both algebras.
pub fn find_internal_cover_iso_over(p: &InternalMorphism, q: &InternalMorphism) -> Result<IsoWitness> {
    if p.target != q.target || !signatures_agree(&p.source.arrow_alg, &q.source.arrow_alg) {
        return none();
    }
    let enc = |m: &InternalMorphism| {
        let mut s = encode_internal(&m.source);
        colour_by_projection(&mut s, &m.object_map, &m.arrow_map);
        s
    };
    find_iso(&enc(p), &enc(q), SearchLimits::default())
}

/// Covering test from raw arrays: for every source object, the arrows
/// leaving it are paired one-to-one with the arrows leaving its image.
pub fn brute_check_covering(p: &GpdMorphism) -> bool {
    let (s, t) = (&p.source, &p.target);
    let (s_src, t_src) = (s.src_map(), t.src_map());
    (0..s.n_objects()).all(|x| {
        let y = p.object_map[x];
        let up: Vec<usize> = (0..s_src.len()).filter(|&a| s_src[a] == x).collect();
        let down: Vec<usize> = (0..t_src.len()).filter(|&b| t_src[b] == y).collect();
        up.len() == down.len()
            && down
                .iter()
                .all(|&b| up.iter().filter(|&&a| p.arrow_map[a] == b).count() == 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> OpAlgebra {
        OpAlgebra::from_add_table((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()).unwrap()
    }

    #[test]
    fn algebra_isos() {
        let z4 = OpAlgebra::cyclic(4);
        let w = find_algebra_iso(&z4, &z4).unwrap();
        assert!(w.is_found());
        assert!(!find_algebra_iso(&z4, &klein()).unwrap().is_found());
    }

    #[test]
    fn nonabelian_order_six() {
        // S3 as permutations of {0,1,2}, listed in an arbitrary order
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let add = (0..6)
            .map(|i| (0..6).map(|j| idx([0, 1, 2].map(|k| perms[j][perms[i][k]]))).collect())
            .collect();
        let s3 = OpAlgebra::from_add_table(add).unwrap();
        let act = crate::algebra::DerivedActionData::new(
            OpAlgebra::cyclic(2),
            OpAlgebra::cyclic(3),
            vec![vec![0, 1, 2], vec![0, 2, 1]],
            vec![],
        )
        .unwrap();
        let sd = crate::algebra::semidirect_product(&act);
        assert!(find_algebra_iso(&sd, &s3).unwrap().is_found());
        assert!(!find_algebra_iso(&OpAlgebra::cyclic(6), &s3).unwrap().is_found());
    }

    #[test]
    fn groupoid_isos() {
        let d2 = FinGroupoid::discrete(2);
        assert!(find_groupoid_iso(&d2, &d2).unwrap().is_found());
        let z2 = FinGroupoid::one_object(2, 0, |a, b| a ^ b).unwrap();
        assert!(!find_groupoid_iso(&d2, &z2).unwrap().is_found());
    }
}
