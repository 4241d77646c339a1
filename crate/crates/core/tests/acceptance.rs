//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so lines print in order. The process
//! exits non-zero when any criterion fails, with one exception: the R4 leg
//! of criterion 4 cannot pass (see `internal_lifts`), and that criterion is
//! instead required to fail in exactly the analysed way.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{corpus_files, mutate, oracle_valid, run_text, unverified};
use opgroupoid::algebra::{
    is_derived_action, is_ideal, semidirect_product, validate_algebra, DerivedActionData, OpAlgebra, Table,
};
use opgroupoid::corpus::{klein, s3, zero_ring, zn_ring};
use opgroupoid::groupoid::{
    self, coset_cover, cover_between_covers, is_universal_cover, lift_morphism, CosetCover, FinGroupoid, GpdAction,
    GpdMorphism,
};
use opgroupoid::internal::{
    self, check_act_cov_equivalence, check_act_cov_equivalence_plain, ker_d0_component, lift_internal_structure,
    validate_internal, InternalAction, InternalGroupoid, InternalMorphism,
};
use opgroupoid::io::{self, Structure};
use opgroupoid::oracle::{self, RawAlg, Subject};
use opgroupoid::xmod::{cover_correspondence, internal_to_xmod, is_xmod_cover, xmod_to_internal, CrossedModule};
use opgroupoid::{Error, Violation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Verdict {
    Pass(String),
    Fail(String),
    /// Fails, but in the way the analysis predicts.
    Expected(String),
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(start: Instant, limit: f64) -> std::result::Result<String, String> {
    let s = start.elapsed().as_secs_f64();
    ensure(s < limit, || format!("took {s:.2} s, limit {limit} s"))?;
    Ok(format!("{s:.2} s < {limit} s"))
}

fn table(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> usize) -> Table {
    (0..n).map(|a| (0..m).map(|b| f(a, b)).collect()).collect()
}

fn bijective(m: &[usize], n: usize) -> bool {
    m.len() == n && m.iter().copied().collect::<BTreeSet<_>>().len() == n && m.iter().all(|&y| y < n)
}

// ---------------------------------------------------------------- 1

struct Case {
    label: String,
    act: DerivedActionData,
    /// Built from a genuine split extension.
    from_extension: bool,
}

fn case(label: impl Into<String>, b: &OpAlgebra, a: &OpAlgebra, dot: Table, star: Option<Table>) -> Case {
    let stars = star.map(|t| vec![("*".to_string(), t)]).unwrap_or_default();
    Case {
        label: label.into(),
        act: DerivedActionData::new(b.clone(), a.clone(), dot, stars).unwrap(),
        from_extension: false,
    }
}

/// `b·a = σ^b(a)` for `B = Z/m`.
fn powers(a: &OpAlgebra, m: usize, sigma: &[usize]) -> Table {
    let mut rows = vec![a.elements().collect::<Vec<_>>()];
    for _ in 1..m {
        let last = rows.last().unwrap();
        rows.push(last.iter().map(|&x| sigma[x]).collect());
    }
    rows
}

/// Actions read off a split extension `A ⊴ E`, `B ≤ E` complementary:
/// `b·a = b + a - b` and `b⋆a` computed in `E`.
fn from_extension(label: &str, e: &OpAlgebra, a_set: &[usize], b_set: &[usize]) -> Case {
    let (a, ai) = e.restrict(a_set).unwrap();
    let (b, bi) = e.restrict(b_set).unwrap();
    let back = |x: usize| ai.iter().position(|&y| y == x).expect("lands in A");
    let dot = table(b.size(), a.size(), |i, j| back(e.conj(bi[i], ai[j])));
    let stars = e
        .binary_ops()
        .iter()
        .map(|op| {
            (
                op.name.clone(),
                table(b.size(), a.size(), |i, j| back(op.apply(bi[i], ai[j]))),
            )
        })
        .collect();
    Case {
        label: label.to_string(),
        act: DerivedActionData::new(b, a, dot, stars).unwrap(),
        from_extension: true,
    }
}

fn derived_battery() -> Vec<Case> {
    let z = OpAlgebra::cyclic;
    let groups = [("Z2", z(2)), ("Z3", z(3)), ("Z4", z(4)), ("V4", klein()), ("S3", s3())];
    let mut out = Vec::new();
    for (na, a) in &groups {
        for (nb, b) in [("Z2", z(2)), ("Z3", z(3)), ("Z4", z(4))] {
            let dot = table(b.size(), a.size(), |_, x| x);
            out.push(case(format!("trivial {nb} on {na}"), &b, a, dot, None));
        }
    }
    let neg = |n: usize| (0..n).map(|x| (n - x) % n).collect::<Vec<_>>();
    let times = |n: usize, k: usize| (0..n).map(|x| x * k % n).collect::<Vec<_>>();
    let rot = vec![0, 2, 3, 1];
    let flip = (0..6).map(|x| s3().conj(3, x)).collect::<Vec<_>>();
    let autos: Vec<(&str, OpAlgebra, usize, Vec<usize>)> = vec![
        ("Z2 by -1 on Z3", z(3), 2, neg(3)),
        ("Z2 by -1 on Z4", z(4), 2, neg(4)),
        ("Z2 by -1 on Z5", z(5), 2, neg(5)),
        ("Z2 by -1 on Z6", z(6), 2, neg(6)),
        ("Z6 by -1 on Z3", z(3), 6, neg(3)),
        ("Z4 by 2 on Z5", z(5), 4, times(5, 2)),
        ("Z3 rotating V4", klein(), 3, rot.clone()),
        ("Z2 by a flip on S3", s3(), 2, flip),
        ("Z3 by -1 on Z3", z(3), 3, neg(3)),
        ("Z3 by -1 on Z4", z(4), 3, neg(4)),
        ("Z3 by 2 on Z5", z(5), 3, times(5, 2)),
        ("Z2 rotating V4", klein(), 2, rot),
        ("Z2 by 2 on Z5", z(5), 2, times(5, 2)),
        ("Z2 by doubling on Z4", z(4), 2, times(4, 2)),
        ("Z2 by inversion on S3", s3(), 2, (0..6).map(|x| s3().neg(x)).collect()),
        ("Z2 swapping 1,2 in Z4", z(4), 2, vec![0, 2, 1, 3]),
    ];
    for (label, a, m, sigma) in autos {
        let dot = powers(&a, m, &sigma);
        out.push(case(label, &z(m), &a, dot, None));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..8 {
        let (_, a) = groups.choose(&mut rng).unwrap();
        let (_, b) = groups.choose(&mut rng).unwrap();
        let mut dot = vec![a.elements().collect::<Vec<_>>()];
        for _ in 1..b.size() {
            let mut row: Vec<usize> = (1..a.size()).collect();
            row.shuffle(&mut rng);
            row.insert(0, 0);
            dot.push(row);
        }
        out.push(case(format!("random group action #{i}"), b, a, dot, None));
    }

    // zero-multiplication rings
    for m in 2..=4 {
        for n in 2..=4 {
            let (a, b) = (zero_ring(n), zero_ring(m));
            let dot = table(m, n, |_, x| x);
            out.push(case(
                format!("trivial zr{m} on zr{n}"),
                &b,
                &a,
                dot,
                Some(table(m, n, |_, _| 0)),
            ));
        }
    }
    for n in [2, 3, 4, 6] {
        let a = zero_ring(n);
        out.push(case(
            format!("zr{n} by b*a on itself"),
            &a,
            &a,
            table(n, n, |_, x| x),
            Some(table(n, n, |b, x| b * x % n)),
        ));
    }
    let (zr2, zr3, zr4) = (zero_ring(2), zero_ring(3), zero_ring(4));
    out.push(case(
        "zr2 by 2ba on zr4",
        &zr2,
        &zr4,
        table(2, 4, |_, x| x),
        Some(table(2, 4, |b, x| 2 * b * x % 4)),
    ));
    out.push(case(
        "zr2 by -1 on zr3",
        &zr2,
        &zr3,
        powers(&zr3, 2, &neg(3)),
        Some(table(2, 3, |_, _| 0)),
    ));
    out.push(case(
        "zr2 by -1 and 2ba on zr4",
        &zr2,
        &zr4,
        powers(&zr4, 2, &neg(4)),
        Some(table(2, 4, |b, x| 2 * b * x % 4)),
    ));
    out.push(case(
        "zr3 by a diagonal indicator",
        &zr3,
        &zr3,
        table(3, 3, |_, x| x),
        Some(table(3, 3, |b, x| usize::from(b == x && x != 0))),
    ));
    out.push(case(
        "zr2 by b⋆a = a",
        &zr2,
        &zr3,
        table(2, 3, |_, x| x),
        Some(table(2, 3, |b, x| if b == 0 { 0 } else { x })),
    ));
    out.push(case(
        "zr2 by -1 and ba on zr3",
        &zr2,
        &zr3,
        powers(&zr3, 2, &neg(3)),
        Some(table(2, 3, |b, x| b * x % 3)),
    ));
    for i in 0..6 {
        let (m, n) = (rng.gen_range(2..=4), rng.gen_range(2..=4));
        let star = table(m, n, |b, _| if b == 0 { 0 } else { rng.gen_range(0..n) });
        let (a, b) = (zero_ring(n), zero_ring(m));
        out.push(case(
            format!("random zero-ring action #{i}"),
            &b,
            &a,
            table(m, n, |_, x| x),
            Some(star),
        ));
    }

    out.push(from_extension("Z6 = Z3 ⋊ Z2", &z(6), &[0, 2, 4], &[0, 3]));
    out.push(from_extension("S3 = rotations ⋊ flip", &s3(), &[0, 1, 2], &[0, 3]));
    out.push(from_extension("V4 = Z2 × Z2", &klein(), &[0, 1], &[0, 2]));
    out.push(from_extension("zr6 = zr3 × zr2", &zero_ring(6), &[0, 2, 4], &[0, 3]));
    out
}

/// The semidirect product written out independently from raw tables,
/// pairs `(b, a)` at `b·|A| + a`:
///
/// ```text
/// (b', a') + (b, a) = (b' + b, a'·b + a)      with a'·b = (-b)·a'
/// (b', a') ⋆ (b, a) = (b' ⋆ b, b' ⋆ a + a' ⋆ b + a' ⋆ a)
/// ```
///
/// Returns `None` when the addition has no inverses.
fn product_by_hand(act: &DerivedActionData) -> Option<RawAlg> {
    let (b, a) = (RawAlg::from(act.actor()), RawAlg::from(act.acted()));
    let (nb, na) = (b.n, a.n);
    let n = nb * na;
    let split = |i: usize| (i / na, i % na);
    let join = |bb: usize, aa: usize| bb * na + aa;
    let dot = act.dot_table();
    let add: Table = table(n, n, |x, y| {
        let ((b1, a1), (b2, a2)) = (split(x), split(y));
        join(b.add[b1][b2], a.add[dot[b.neg[b2]][a1]][a2])
    });
    let zero = join(b.zero, a.zero);
    let neg = (0..n)
        .map(|x| (0..n).find(|&y| add[x][y] == zero && add[y][x] == zero))
        .collect::<Option<Vec<_>>>()?;
    let star_of = |name: &str| &act.star_tables().iter().find(|s| s.0 == name).unwrap().1;
    let binary = a
        .binary
        .iter()
        .zip(&b.binary)
        .map(|((name, opp, ta), (_, _, tb))| {
            let (left, right) = (star_of(name), star_of(opp));
            let t = table(n, n, |x, y| {
                let ((b1, a1), (b2, a2)) = (split(x), split(y));
                let second = a.add[a.add[left[b1][a2]][right[b2][a1]]][ta[a1][a2]];
                join(tb[b1][b2], second)
            });
            (name.clone(), opp.clone(), t)
        })
        .collect();
    Some(RawAlg {
        n,
        zero,
        add,
        neg,
        binary,
        unary: Vec::new(),
        identities: Vec::new(),
    })
}

/// The actions are recovered from the split extension `A → B ⋉ A ⇄ B`.
fn recovered(act: &DerivedActionData, e: &RawAlg) -> bool {
    let na = act.acted().size();
    let (bz, az) = (act.actor().zero(), act.acted().zero());
    let s = |b: usize| b * na + az;
    let i = |a: usize| bz * na + a;
    act.actor().elements().all(|b| {
        act.acted().elements().all(|a| {
            let conj = e.add[e.add[s(b)][i(a)]][e.neg[s(b)]];
            conj == i(act.dot(b, a))
                && e.binary
                    .iter()
                    .enumerate()
                    .all(|(k, (_, _, t))| t[s(b)][i(a)] == i(act.star(k, b, a)))
        })
    })
}

fn derived_actions() -> Check {
    let start = Instant::now();
    let cases = derived_battery();
    let (mut yes, mut no) = (0, 0);
    for c in &cases {
        let main = is_derived_action(&c.act);
        let literal = validate_algebra(&semidirect_product(&c.act)).is_ok();
        ensure(main == literal, || {
            format!("{}: is_derived_action {main}, validator {literal}", c.label)
        })?;
        let by_hand = product_by_hand(&c.act);
        let independent = by_hand.as_ref().is_some_and(|e| e.is_ok());
        ensure(main == independent, || {
            format!("{}: main {main}, independent product {independent}", c.label)
        })?;
        if main {
            ensure(recovered(&c.act, by_hand.as_ref().unwrap()), || {
                format!("{}: actions not recovered from B ⋉ A", c.label)
            })?;
            yes += 1;
        } else {
            no += 1;
        }
        ensure(!c.from_extension || main, || {
            format!("{}: actions of a split extension rejected", c.label)
        })?;
    }
    ensure(cases.len() >= 50 && yes >= 5 && no >= 5, || {
        format!("battery too thin: {} cases, {yes} true, {no} false", cases.len())
    })?;
    Ok(format!(
        "{} instances ({yes} derived, {no} not), {}",
        cases.len(),
        timed(start, 5.0)?
    ))
}

// ---------------------------------------------------------------- 2

fn one_object(a: &OpAlgebra) -> FinGroupoid {
    FinGroupoid::one_object(a.size(), a.zero(), |x, y| a.add(x, y)).unwrap()
}

/// Pair groupoid on `n` objects times the group `a`: arrows `(i, j, g)`.
fn pair_times(n: usize, a: &OpAlgebra) -> FinGroupoid {
    let m = a.size();
    let idx = |i: usize, j: usize, g: usize| (i * n + j) * m + g;
    let count = n * n * m;
    let part = |k: usize| (k / m / n, k / m % n, k % m);
    let src = (0..count).map(|k| part(k).0).collect();
    let tgt = (0..count).map(|k| part(k).1).collect();
    let ids = (0..n).map(|i| idx(i, i, a.zero())).collect();
    FinGroupoid::from_fn(n, src, tgt, ids, |x, y| {
        let ((i, _, g), (_, k, h)) = (part(x), part(y));
        idx(i, k, a.add(g, h))
    })
    .unwrap()
}

fn test_groupoids() -> Vec<(String, FinGroupoid)> {
    let mut out: Vec<(String, FinGroupoid)> = (1..=8)
        .map(|n| (format!("Z{n}"), one_object(&OpAlgebra::cyclic(n))))
        .collect();
    out.push(("V4".into(), one_object(&klein())));
    out.push(("S3".into(), one_object(&s3())));
    out.push(("pair(2)×Z4".into(), pair_times(2, &OpAlgebra::cyclic(4))));
    out.push(("pair(2)×V4".into(), pair_times(2, &klein())));
    out.push(("pair(2)×Z3".into(), pair_times(2, &OpAlgebra::cyclic(3))));
    out.push(("pair(3)".into(), pair_times(3, &OpAlgebra::cyclic(1))));
    out.push(("pair(4)".into(), pair_times(4, &OpAlgebra::cyclic(1))));
    assert!(out.iter().all(|(_, g)| g.n_arrows() <= 16));
    out
}

/// Subgroups of the object group at `x`, by filtering every subset.
fn subgroups_by_hand(g: &FinGroupoid, x: usize) -> Vec<Vec<usize>> {
    let group: Vec<usize> = (0..g.n_arrows())
        .filter(|&a| g.src_map()[a] == x && g.tgt_map()[a] == x)
        .collect();
    let comp = g.comp_table();
    let mut out = Vec::new();
    for mask in 0u32..1 << group.len() {
        let s: Vec<usize> = (0..group.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| group[i])
            .collect();
        let set: BTreeSet<usize> = s.iter().copied().collect();
        if set.contains(&g.identity_map()[x]) && s.iter().all(|&a| s.iter().all(|&b| set.contains(&comp[&(a, b)]))) {
            out.push(s);
        }
    }
    out
}

/// Image of the object group at `x̃` under `p`, from raw arrays.
fn char_group_by_hand(p: &GpdMorphism, x_tilde: usize) -> Vec<usize> {
    let s = &p.source;
    let img: BTreeSet<usize> = (0..s.n_arrows())
        .filter(|&a| s.src_map()[a] == x_tilde && s.tgt_map()[a] == x_tilde)
        .map(|a| p.arrow_map[a])
        .collect();
    img.into_iter().collect()
}

fn max_hom_set(g: &FinGroupoid) -> usize {
    let mut counts = std::collections::BTreeMap::new();
    for a in 0..g.n_arrows() {
        *counts.entry((g.src_map()[a], g.tgt_map()[a])).or_insert(0) += 1;
    }
    counts.into_values().max().unwrap_or(0)
}

fn is_isomorphism(p: &GpdMorphism) -> bool {
    oracle::brute_morphism_ok(p)
        && bijective(&p.arrow_map, p.target.n_arrows())
        && bijective(&p.object_map, p.target.n_objects())
}

struct CoverFamily {
    name: String,
    g: FinGroupoid,
    covers: Vec<(Vec<usize>, CosetCover)>,
}

fn coset_families() -> std::result::Result<Vec<CoverFamily>, String> {
    let mut out = Vec::new();
    for (name, g) in test_groupoids() {
        let mut covers = Vec::new();
        for c in subgroups_by_hand(&g, 0) {
            let cc = coset_cover(&g, 0, &c).map_err(|e| format!("{name} C={c:?}: {e}"))?;
            covers.push((c, cc));
        }
        out.push(CoverFamily { name, g, covers });
    }
    Ok(out)
}

fn coset_covers() -> Check {
    let start = Instant::now();
    let families = coset_families()?;
    let mut n = 0;
    for f in &families {
        let full = f.covers.iter().map(|(c, _)| c.len()).max().unwrap();
        for (c, cc) in &f.covers {
            let p = &cc.projection;
            let label = format!("{} C={c:?}", f.name);
            ensure(oracle::brute_check_covering(p), || format!("{label}: not a covering"))?;
            let got = char_group_by_hand(p, cc.base);
            ensure(got == *c, || format!("{label}: characteristic group {got:?}"))?;
            let main = groupoid::characteristic_group(p, cc.base).map_err(|e| e.to_string())?;
            ensure(main == *c, || {
                format!("{label}: characteristic_group returned {main:?}")
            })?;
            if c.len() == 1 {
                ensure(max_hom_set(&p.source) <= 1, || {
                    format!("{label}: a hom-set upstairs has several arrows")
                })?;
                ensure(is_universal_cover(p).unwrap(), || {
                    format!("{label}: not judged universal")
                })?;
            }
            if c.len() == full {
                ensure(is_isomorphism(p), || {
                    format!("{label}: projection is not an isomorphism")
                })?;
                ensure(oracle::find_groupoid_iso(&p.source, &f.g).unwrap().is_found(), || {
                    format!("{label}: no isomorphism found")
                })?;
            }
            n += 1;
        }
    }
    Ok(format!(
        "{n} subgroups over {} groupoids, {}",
        families.len(),
        timed(start, 2.0)?
    ))
}

// ---------------------------------------------------------------- 3

fn permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn lifting() -> Check {
    let families = coset_families()?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut lifted, mut refused, mut isos) = (0, 0, 0);
    for f in &families {
        for (c, pc) in &f.covers {
            for (d, qd) in &f.covers {
                let label = format!("{}: C={c:?}, D={d:?}", f.name);
                let contained = d.iter().all(|x| c.contains(x));
                let (p, x_tilde) = (&pc.projection, pc.base);
                match lift_morphism(p, &qd.projection, qd.base, x_tilde) {
                    Ok(l) => {
                        ensure(contained, || format!("{label}: lifted without containment"))?;
                        ensure(oracle::brute_morphism_ok(&l), || {
                            format!("{label}: lift is not a functor")
                        })?;
                        ensure(l.object_map[qd.base] == x_tilde, || {
                            format!("{label}: lift misses the basepoint")
                        })?;
                        let commutes =
                            (0..l.source.n_arrows()).all(|a| p.arrow_map[l.arrow_map[a]] == qd.projection.arrow_map[a]);
                        ensure(commutes, || format!("{label}: p∘lift differs from the map"))?;
                        lifted += 1;
                    }
                    Err(Error::CharacteristicGroupNotContained(_)) => {
                        ensure(!contained, || format!("{label}: refused despite containment"))?;
                        refused += 1;
                    }
                    Err(e) => return Err(format!("{label}: {e}")),
                }
                if !contained {
                    continue;
                }
                // r: cover of D over cover of C with p_C∘r = q_D
                let r =
                    cover_between_covers(&qd.projection, qd.base, p, x_tilde).map_err(|e| format!("{label}: {e}"))?;
                let agree = (0..r.source.n_arrows()).all(|a| p.arrow_map[r.arrow_map[a]] == qd.projection.arrow_map[a]);
                ensure(agree, || {
                    format!("{label}: composite differs from the cover arrow-by-arrow")
                })?;
                if c == d {
                    let s = &pc.projection.source;
                    let (po, pa) = (
                        permutation(s.n_objects(), &mut rng),
                        permutation(s.n_arrows(), &mut rng),
                    );
                    let q = pc.projection.relabel_source(&po, &pa).unwrap();
                    let r = cover_between_covers(p, x_tilde, &q, po[x_tilde]).map_err(|e| format!("{label}: {e}"))?;
                    ensure(is_isomorphism(&r), || format!("{label}: r is not an isomorphism"))?;
                    let w = oracle::find_cover_iso_over(p, &q).unwrap();
                    ensure(w.is_found(), || format!("{label}: oracle finds no isomorphism over G"))?;
                    isos += 1;
                }
            }
        }
    }
    ensure(lifted > 0 && refused > 0, || {
        format!("battery lacks an outcome: {lifted} lifted, {refused} refused")
    })?;
    Ok(format!("{lifted} lifts, {refused} refusals, {isos} isomorphic pairs"))
}

// ---------------------------------------------------------------- 4

/// Subsets containing zero and closed under every operation.
fn subobjects_by_hand(a: &OpAlgebra) -> Vec<Vec<usize>> {
    let n = a.size();
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let set: BTreeSet<usize> = s.iter().copied().collect();
        let closed = set.contains(&a.zero())
            && s.iter()
                .all(|&x| set.contains(&a.neg(x)) && s.iter().all(|&y| set.contains(&a.add(x, y))))
            && a.binary_ops()
                .iter()
                .all(|op| s.iter().all(|&x| s.iter().all(|&y| set.contains(&op.apply(x, y)))));
        if closed {
            out.push(s);
        }
    }
    out
}

/// `C∘(a⋆b)` is the same coset for every choice of representatives.
fn representatives_agree(g: &InternalGroupoid, cc: &CosetCover) -> bool {
    let ar = &g.arrow_alg;
    let coset = |x: usize| cc.cosets.iter().position(|m| m.contains(&x));
    let mut ops: Vec<Box<dyn Fn(usize, usize) -> usize>> = vec![Box::new(|x, y| ar.add(x, y))];
    for op in ar.binary_ops() {
        ops.push(Box::new(move |x, y| op.apply(x, y)));
    }
    ops.iter().all(|f| {
        cc.cosets.iter().all(|ci| {
            cc.cosets.iter().all(|cj| {
                let want = coset(f(ci[0], cj[0]));
                want.is_some() && ci.iter().all(|&x| cj.iter().all(|&y| coset(f(x, y)) == want))
            })
        })
    })
}

struct LiftLeg {
    g: InternalGroupoid,
    lifts: Vec<internal::InternalCover>,
    failures: Vec<String>,
    /// Every failure is the input violating interchange, re-verified.
    only_interchange: bool,
}

fn interchange_defect(g: &InternalGroupoid, e: &Error) -> bool {
    let (Error::ComponentInvalid { component, report }, true) = (e, true) else {
        return false;
    };
    component == "internal"
        && report.violations().iter().any(|v| v.check == "internal.interchange")
        && report.violations().iter().all(|v| {
            let inner = Violation {
                scope: v
                    .scope
                    .strip_prefix("internal")
                    .unwrap_or(&v.scope)
                    .trim_start_matches('.')
                    .to_string(),
                ..v.clone()
            };
            oracle::recheck(Subject::Internal(g), &inner)
        })
}

fn lift_leg(name: &'static str, alg: &OpAlgebra) -> LiftLeg {
    let g = InternalGroupoid::one_object(alg);
    let mut leg = LiftLeg {
        g: g.clone(),
        lifts: Vec::new(),
        failures: Vec::new(),
        only_interchange: true,
    };
    for c in subobjects_by_hand(alg) {
        let res = lift_internal_structure(&g, &c).map_err(|e| {
            leg.only_interchange &= interchange_defect(&g, &e);
            format!("{name} C={c:?}: {} ({e})", e.kind())
        });
        let checked = res.and_then(|l| {
            let label = format!("{name} C={c:?}");
            ensure(validate_internal(&l.cover).map_err(|e| e.to_string())?.is_ok(), || {
                format!("{label}: cover fails validate_internal")
            })?;
            ensure(oracle::brute_internal_ok(&l.cover), || {
                format!("{label}: oracle rejects the cover")
            })?;
            let got = char_group_by_hand(&l.projection.underlying().unwrap(), l.base);
            ensure(got == c, || format!("{label}: characteristic group {got:?}"))?;
            ensure(representatives_agree(&g, &l.cosets), || {
                format!("{label}: coset operations depend on representatives")
            })?;
            Ok(l)
        });
        match checked {
            Ok(l) => leg.lifts.push(l),
            Err(msg) => {
                if !msg.contains("ComponentInvalid") {
                    leg.only_interchange = false;
                }
                leg.failures.push(msg);
            }
        }
    }
    leg
}

fn internal_lift_legs() -> (LiftLeg, LiftLeg) {
    (lift_leg("Z4", &OpAlgebra::cyclic(4)), lift_leg("R4", &zn_ring(4)))
}

fn internal_lifts() -> Verdict {
    let start = Instant::now();
    let (z4, r4) = internal_lift_legs();
    let time = match timed(start, 2.0) {
        Ok(t) => t,
        Err(e) => return Verdict::Fail(e),
    };
    if !z4.failures.is_empty() {
        return Verdict::Fail(z4.failures.join("; "));
    }
    let summary = format!("Z4: {} subobjects lifted; {time}", z4.lifts.len());
    if r4.failures.is_empty() {
        return Verdict::Pass(format!("{summary}; R4: {} lifted", r4.lifts.len()));
    }
    // With one object, interchange for ⋆ and ∘ = + forces
    // (a⋆b) + (c⋆d) = (a+c)⋆(b+d), false in R4 at a=b=c=d=1. There is no
    // one-object internal groupoid on R4 to lift.
    let detail = format!(
        "{summary}; R4: {} of {} subobjects refused, the one-object groupoid on R4 violates interchange",
        r4.failures.len(),
        r4.failures.len() + r4.lifts.len()
    );
    if r4.only_interchange && r4.lifts.is_empty() {
        Verdict::Expected(detail)
    } else {
        Verdict::Fail(format!("{detail}: {}", r4.failures.join("; ")))
    }
}

// ---------------------------------------------------------------- 5

fn cover_iso_ok(p: &GpdMorphism, q: &GpdMorphism, maps: &[Vec<usize>]) -> bool {
    let (mo, ma) = (&maps[0], &maps[1]);
    let r = GpdMorphism::new(p.source.clone(), q.source.clone(), ma.clone(), mo.clone());
    r.is_ok_and(|r| is_isomorphism(&r)) && (0..p.source.n_arrows()).all(|a| q.arrow_map[ma[a]] == p.arrow_map[a])
}

fn equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut n_act, mut n_cov) = (0, 0);
    for f in coset_families()? {
        let mut actions: Vec<GpdAction> = vec![GpdAction::canonical(&f.g)];
        let mut covers: Vec<GpdMorphism> = vec![GpdMorphism::identity(&f.g)];
        for (_, cc) in &f.covers {
            let p = &cc.projection;
            actions.push(cc.action.clone());
            actions.push(
                cc.action
                    .relabel_set(&permutation(cc.action.set_size, &mut rng))
                    .unwrap(),
            );
            covers.push(p.clone());
            let s = &p.source;
            covers.push(
                p.relabel_source(
                    &permutation(s.n_objects(), &mut rng),
                    &permutation(s.n_arrows(), &mut rng),
                )
                .unwrap(),
            );
        }
        let r = check_act_cov_equivalence_plain(&f.g, &actions, &covers);
        ensure(r.is_ok(), || format!("{}: {:?}", f.name, r.violations()))?;
        for (i, act) in actions.iter().enumerate() {
            let back = groupoid::covering_to_action(&groupoid::action_to_covering(act).unwrap()).unwrap();
            ensure(back == *act, || format!("{} action {i}: Φ(Γ(act)) differs", f.name))?;
        }
        for (i, p) in covers.iter().enumerate() {
            let q = groupoid::action_to_covering(&groupoid::covering_to_action(p).unwrap()).unwrap();
            let w = oracle::find_cover_iso_over(p, &q).map_err(|e| e.to_string())?;
            ensure(w.maps().is_some_and(|m| cover_iso_ok(p, &q, m)), || {
                format!("{} cover {i}: no verified witness", f.name)
            })?;
        }
        n_act += actions.len();
        n_cov += covers.len();
    }

    let (z4, _) = internal_lift_legs();
    let g = &z4.g;
    let mut actions = vec![InternalAction::canonical(g)];
    let mut covers = vec![InternalMorphism::identity(g)];
    for l in &z4.lifts {
        let act = internal::covering_to_action(&l.projection).map_err(|e| e.to_string())?;
        actions.push(act.relabel_set(&permutation(act.action.set_size, &mut rng)).unwrap());
        actions.push(act);
        covers.push(l.projection.clone());
        let s = &l.projection.source.gpd;
        covers.push(
            l.projection
                .relabel_source(
                    &permutation(s.n_objects(), &mut rng),
                    &permutation(s.n_arrows(), &mut rng),
                )
                .unwrap(),
        );
    }
    let r = check_act_cov_equivalence(g, &actions, &covers);
    ensure(r.is_ok(), || format!("internal Z4: {:?}", r.violations()))?;
    for (i, act) in actions.iter().enumerate() {
        let back = internal::covering_to_action(&internal::action_to_covering(act).unwrap()).unwrap();
        ensure(back == *act, || format!("internal Z4 action {i}: Φ(Γ(act)) differs"))?;
    }
    for (i, p) in covers.iter().enumerate() {
        let q = internal::action_to_covering(&internal::covering_to_action(p).unwrap()).unwrap();
        let w = oracle::find_internal_cover_iso_over(p, &q).map_err(|e| e.to_string())?;
        let ok = w
            .maps()
            .is_some_and(|m| cover_iso_ok(&p.underlying().unwrap(), &q.underlying().unwrap(), m));
        ensure(ok, || format!("internal Z4 cover {i}: no verified witness"))?;
    }
    Ok(format!(
        "{} actions, {} covers",
        n_act + actions.len(),
        n_cov + covers.len()
    ))
}

// ---------------------------------------------------------------- 6

/// `maps = [A, B]` is a bijection of crossed modules.
fn xmod_iso_ok(x: &CrossedModule, y: &CrossedModule, maps: &[Vec<usize>]) -> bool {
    let (ma, mb) = (&maps[0], &maps[1]);
    let (a, b) = (x.a(), x.b());
    bijective(ma, y.a().size())
        && bijective(mb, y.b().size())
        && a.elements().all(|i| y.alpha[ma[i]] == mb[x.alpha[i]])
        && a.elements()
            .all(|i| a.elements().all(|j| ma[a.add(i, j)] == y.a().add(ma[i], ma[j])))
        && b.elements()
            .all(|i| b.elements().all(|j| mb[b.add(i, j)] == y.b().add(mb[i], mb[j])))
        && b.elements().all(|k| {
            a.elements()
                .all(|i| ma[x.action.dot(k, i)] == y.action.dot(mb[k], ma[i]))
        })
}

fn surjective(m: &[usize], n: usize) -> bool {
    m.iter().copied().collect::<BTreeSet<_>>().len() == n
}

fn crossed_modules() -> Check {
    let start = Instant::now();
    let docs = corpus_files();
    let mut round_trips = 0;
    let mut ring_zero_mult = false;
    for (stem, d) in &docs {
        let Structure::XMod(x) = &d.structure else { continue };
        if x.a().size() > 8 || x.b().size() > 8 {
            continue;
        }
        let y = internal_to_xmod(&xmod_to_internal(x).map_err(|e| format!("{stem}: {e}"))?)
            .map_err(|e| format!("{stem}: {e}"))?;
        let w = oracle::find_xmod_iso(x, &y).map_err(|e| e.to_string())?;
        ensure(w.maps().is_some_and(|m| xmod_iso_ok(x, &y, m)), || {
            format!("{stem}: round trip not isomorphic")
        })?;
        round_trips += 1;
        ring_zero_mult |= x
            .a()
            .binary_ops()
            .iter()
            .any(|op| op.table.iter().flatten().all(|&v| v == x.a().zero()))
            && !x.a().binary_ops().is_empty();
    }
    ensure(round_trips >= 5 && ring_zero_mult, || {
        format!("{round_trips} round trips, zero-multiplication ring present: {ring_zero_mult}")
    })?;

    let (mut covers, mut non_covers) = (0, 0);
    for (stem, d) in &docs {
        let Structure::InternalMorphism { map: p, .. } = &d.structure else {
            continue;
        };
        let under = p.underlying().unwrap();
        let covering = oracle::brute_check_covering(&under);
        let onto =
            surjective(&p.arrow_map, p.target.gpd.n_arrows()) && surjective(&p.object_map, p.target.gpd.n_objects());
        let m = cover_correspondence(p).map_err(|e| format!("{stem}: {e}"))?;
        let f1_iso = bijective(&m.f1, m.target.a().size());
        ensure(is_xmod_cover(&m).unwrap() == f1_iso, || {
            format!("{stem}: is_xmod_cover disagrees with f1")
        })?;
        if covering {
            ensure(f1_iso, || format!("{stem}: covering sent to a non-cover"))?;
            covers += 1;
        } else if onto {
            ensure(!f1_iso, || format!("{stem}: surjective non-covering sent to a cover"))?;
            non_covers += 1;
        }
    }
    ensure(covers > 0 && non_covers > 0, || {
        format!("{covers} coverings, {non_covers} surjective non-coverings")
    })?;
    Ok(format!(
        "{round_trips} round trips, {covers} covers and {non_covers} non-covers mapped, {}",
        timed(start, 5.0)?
    ))
}

// ---------------------------------------------------------------- 7

fn internals_of(s: &Structure) -> Vec<&InternalGroupoid> {
    match s {
        Structure::Internal(g) => vec![g],
        Structure::InternalAction(a) => vec![&a.internal],
        Structure::InternalMorphism { map, .. } => vec![&map.source, &map.target],
        _ => Vec::new(),
    }
}

/// Normal, closed, and absorbing `g⋆k`, `k⋆g` for every operation.
fn ideal_by_hand(a: &OpAlgebra, k: &[usize]) -> bool {
    let set: BTreeSet<usize> = k.iter().copied().collect();
    set.contains(&a.zero())
        && k.iter()
            .all(|&x| set.contains(&a.neg(x)) && k.iter().all(|&y| set.contains(&a.add(x, y))))
        && a.elements().all(|g| k.iter().all(|&x| set.contains(&a.conj(g, x))))
        && a.binary_ops().iter().all(|op| {
            a.elements().all(|g| {
                k.iter()
                    .all(|&x| set.contains(&op.apply(g, x)) && set.contains(&op.apply(x, g)))
            })
        })
}

fn kernel_ideals() -> Check {
    let mut n = 0;
    for (stem, d) in corpus_files() {
        for g in internals_of(&d.structure) {
            ensure(oracle::brute_internal_ok(g), || {
                format!("{stem}: invalid internal groupoid in the corpus")
            })?;
            let zero = g.object_alg.zero();
            let k: Vec<usize> = (0..g.gpd.n_arrows()).filter(|&a| g.gpd.src_map()[a] == zero).collect();
            let sub = ker_d0_component(g);
            ensure(sub.members() == k.as_slice(), || {
                format!("{stem}: Ker d0 is {:?}, expected {k:?}", sub.members())
            })?;
            ensure(is_ideal(&sub), || format!("{stem}: Ker d0 is not an ideal"))?;
            ensure(ideal_by_hand(&g.arrow_alg, &k), || {
                format!("{stem}: independent ideal check fails")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} internal groupoids"))
}

// ---------------------------------------------------------------- 8

fn schema_field(message: &str) -> Option<&str> {
    message.split('`').nth(1)
}

fn mutation_robustness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let corpus = corpus_files();
    let (mut judged, mut neutral, mut exit1, mut exit2) = (0, 0, 0, 0);
    'rounds: for round in 0.. {
        for (stem, doc) in &corpus {
            if judged == 200 {
                break 'rounds;
            }
            let (text, what) = mutate(doc, &mut rng);
            let label = format!("{stem} round {round} ({what})");
            let r = run_text(&text, &["check"]);
            let parsed = io::parse(&text);
            if parsed.as_ref().is_ok_and(|m| oracle_valid(&m.structure)) {
                ensure(r.exit_code == 0, || format!("{label}: neutral mutant rejected"))?;
                neutral += 1;
                continue;
            }
            ensure(r.exit_code != 0, || format!("{label}: corruption accepted"))?;
            match r.exit_code {
                1 => {
                    let m = parsed.map_err(|e| format!("{label}: exit 1 on unparseable text: {e}"))?;
                    let n: usize = r.checks.iter().map(|c| c.counterexamples.len()).sum();
                    ensure(n > 0, || format!("{label}: exit 1 without a counterexample"))?;
                    let bad = unverified(&m.structure, &r);
                    ensure(bad.is_empty(), || {
                        format!("{label}: counterexamples do not re-verify: {bad:?}")
                    })?;
                    exit1 += 1;
                }
                2 => {
                    let err = r
                        .error
                        .as_ref()
                        .ok_or_else(|| format!("{label}: exit 2 without an error"))?;
                    ensure(err.kind == "SchemaError", || {
                        format!("{label}: unexpected {}", err.kind)
                    })?;
                    let field = schema_field(&err.message).unwrap_or("");
                    let last = field.rsplit('.').next().unwrap_or("");
                    let path = what.split(':').next().unwrap();
                    ensure(path.split('.').any(|k| k == last), || {
                        format!("{label}: error names `{field}`")
                    })?;
                    exit2 += 1;
                }
                c => return Err(format!("{label}: exit {c}")),
            }
            judged += 1;
        }
    }
    Ok(format!("{judged} corruptions: {exit1} exit 1 with re-verified counterexamples, {exit2} exit 2 naming the corrupted field; {neutral} neutral mutants skipped"))
}

// ----------------------------------------------------------------

fn run(f: fn() -> Check) -> Verdict {
    match f() {
        Ok(s) => Verdict::Pass(s),
        Err(s) => Verdict::Fail(s),
    }
}

fn main() {
    let criteria: [(&str, Box<dyn Fn() -> Verdict>); 8] = [
        (
            "derived actions iff the semidirect product is valid",
            Box::new(|| run(derived_actions)),
        ),
        (
            "coset covers have the prescribed characteristic group",
            Box::new(|| run(coset_covers)),
        ),
        ("lifting along covers", Box::new(|| run(lifting))),
        ("internal structure lifts to coset covers", Box::new(internal_lifts)),
        ("actions and covers are equivalent", Box::new(|| run(equivalence))),
        (
            "crossed modules and internal groupoids",
            Box::new(|| run(crossed_modules)),
        ),
        ("Ker d0 is an ideal", Box::new(|| run(kernel_ideals))),
        (
            "corrupted documents are rejected",
            Box::new(|| run(mutation_robustness)),
        ),
    ];
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Verdict::Fail(format!("panicked: {msg}"))
        });
        match v {
            Verdict::Pass(d) => println!("PASS {} {name}: {d}", i + 1),
            Verdict::Fail(d) => {
                unexpected += 1;
                println!("FAIL {} {name}: {d}", i + 1);
            }
            Verdict::Expected(d) => println!("FAIL {} {name}: {d} (expected)", i + 1),
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
