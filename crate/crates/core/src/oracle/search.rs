//! Backtracking isomorphism search over finite many-sorted structures with
//! partial operations.
//!
//! A bijection per sort is built one element at a time. Whenever every
//! input of an operation entry is mapped, the image of its output is
//! forced, so after a few free choices most of the map follows by
//! propagation. The next free element is one with the fewest remaining
//! candidates of its colour.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A partial operation `inputs → output` given by its defined entries.
#[derive(Clone, Debug, Default)]
pub struct OpTable {
    pub name: String,
    pub inputs: Vec<usize>,
    pub output: usize,
    pub entries: HashMap<Vec<usize>, usize>,
}

impl OpTable {
    pub fn new(name: impl Into<String>, inputs: &[usize], output: usize) -> Self {
        OpTable {
            name: name.into(),
            inputs: inputs.to_vec(),
            output,
            entries: HashMap::new(),
        }
    }

    pub fn set(&mut self, args: &[usize], out: usize) {
        self.entries.insert(args.to_vec(), out);
    }
}

/// Elements `0..sizes[s]` of each sort `s`, an isomorphism-invariant colour
/// per element, and partial operations.
#[derive(Clone, Debug, Default)]
pub struct Sorted {
    pub sizes: Vec<usize>,
    pub colours: Vec<Vec<Vec<u64>>>,
    pub ops: Vec<OpTable>,
}

impl Sorted {
    pub fn new(sizes: &[usize]) -> Self {
        Sorted {
            sizes: sizes.to_vec(),
            colours: sizes.iter().map(|&n| vec![Vec::new(); n]).collect(),
            ops: Vec::new(),
        }
    }

    pub fn colour(&mut self, sort: usize, elem: usize, c: u64) {
        self.colours[sort][elem].push(c);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_per_sort: usize,
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_per_sort: 64,
            max_nodes: 2_000_000,
        }
    }
}

/// Either one bijection per sort, or the number of search nodes explored
/// before concluding that none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoWitness {
    Found(Vec<Vec<usize>>),
    None { explored: u64 },
}

impl IsoWitness {
    pub fn is_found(&self) -> bool {
        matches!(self, IsoWitness::Found(_))
    }

    pub fn maps(&self) -> Option<&[Vec<usize>]> {
        match self {
            IsoWitness::Found(m) => Some(m),
            IsoWitness::None { .. } => None,
        }
    }
}

fn same_shape(a: &Sorted, b: &Sorted) -> bool {
    a.sizes == b.sizes
        && a.ops.len() == b.ops.len()
        && a.ops.iter().zip(&b.ops).all(|(x, y)| {
            x.name == y.name && x.inputs == y.inputs && x.output == y.output && x.entries.len() == y.entries.len()
        })
}

/// Checks that `maps` is a bijection per sort preserving colours and every
/// operation entry in both directions.
pub fn verify(a: &Sorted, b: &Sorted, maps: &[Vec<usize>]) -> bool {
    if !same_shape(a, b) || maps.len() != a.sizes.len() {
        return false;
    }
    for (s, m) in maps.iter().enumerate() {
        if m.len() != a.sizes[s] {
            return false;
        }
        let mut seen = vec![false; b.sizes[s]];
        for (e, &v) in m.iter().enumerate() {
            if v >= b.sizes[s] || seen[v] || a.colours[s][e] != b.colours[s][v] {
                return false;
            }
            seen[v] = true;
        }
    }
    a.ops.iter().zip(&b.ops).all(|(x, y)| {
        x.entries.iter().all(|(args, &out)| {
            let img: Vec<usize> = args.iter().zip(&x.inputs).map(|(&e, &s)| maps[s][e]).collect();
            y.entries.get(&img) == Some(&maps[x.output][out])
        })
    })
}

struct Entry {
    op: usize,
    args: Vec<usize>,
    out: usize,
}

struct State<'a> {
    a: &'a Sorted,
    b: &'a Sorted,
    entries: Vec<Entry>,
    watch: Vec<Vec<Vec<usize>>>,
    class_a: Vec<Vec<usize>>,
    class_b: Vec<Vec<usize>>,
    remaining: Vec<Vec<usize>>,
    f: Vec<Vec<usize>>,
    used: Vec<Vec<bool>>,
    trail: Vec<(usize, usize)>,
    nodes: u64,
    limit: u64,
}

const FREE: usize = usize::MAX;

impl<'a> State<'a> {
    fn assign(&mut self, s: usize, e: usize, v: usize, queue: &mut Vec<(usize, usize)>) -> bool {
        if self.f[s][e] != FREE {
            return self.f[s][e] == v;
        }
        if self.used[s][v] || self.class_a[s][e] != self.class_b[s][v] {
            return false;
        }
        self.f[s][e] = v;
        self.used[s][v] = true;
        self.remaining[s][self.class_b[s][v]] -= 1;
        self.trail.push((s, e));
        queue.push((s, e));
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (s, e) = self.trail.pop().expect("non-empty");
            let v = std::mem::replace(&mut self.f[s][e], FREE);
            self.used[s][v] = false;
            self.remaining[s][self.class_b[s][v]] += 1;
        }
    }

    fn fire(&mut self, idx: usize, queue: &mut Vec<(usize, usize)>) -> bool {
        let en = &self.entries[idx];
        let op = &self.a.ops[en.op];
        let mut img = Vec::with_capacity(en.args.len());
        for (&e, &s) in en.args.iter().zip(&op.inputs) {
            let v = self.f[s][e];
            if v == FREE {
                return true;
            }
            img.push(v);
        }
        let (out_sort, out) = (op.output, en.out);
        match self.b.ops[en.op].entries.get(&img) {
            Some(&v) => self.assign(out_sort, out, v, queue),
            None => false,
        }
    }

    fn propagate(&mut self, mut queue: Vec<(usize, usize)>) -> bool {
        while let Some((s, e)) = queue.pop() {
            for k in 0..self.watch[s][e].len() {
                let idx = self.watch[s][e][k];
                if !self.fire(idx, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn pick(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for (s, fs) in self.f.iter().enumerate() {
            for (e, &v) in fs.iter().enumerate() {
                if v != FREE {
                    continue;
                }
                let n = self.remaining[s][self.class_a[s][e]];
                if best.is_none_or(|(_, _, m)| n < m) {
                    best = Some((s, e, n));
                }
            }
        }
        best.map(|(s, e, _)| (s, e))
    }

    fn solve(&mut self) -> Result<bool> {
        let Some((s, e)) = self.pick() else {
            return Ok(true);
        };
        let class = self.class_a[s][e];
        for v in 0..self.b.sizes[s] {
            if self.used[s][v] || self.class_b[s][v] != class {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::SearchBudgetExceeded(format!(
                    "more than {} search nodes",
                    self.limit
                )));
            }
            let mark = self.trail.len();
            let mut queue = Vec::new();
            if self.assign(s, e, v, &mut queue) && self.propagate(queue) && self.solve()? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

/// Complete search for an isomorphism `a → b`.
pub fn find_iso(a: &Sorted, b: &Sorted, limits: SearchLimits) -> Result<IsoWitness> {
    if let Some(&n) = a.sizes.iter().chain(&b.sizes).find(|&&n| n > limits.max_per_sort) {
        return Err(Error::SearchBudgetExceeded(format!(
            "a sort has {n} elements, the cap is {}",
            limits.max_per_sort
        )));
    }
    if !same_shape(a, b) {
        return Ok(IsoWitness::None { explored: 0 });
    }
    // colour classes shared by both sides; differing multisets rule out
    // any isomorphism
    let mut class_a = Vec::new();
    let mut class_b = Vec::new();
    let mut remaining = Vec::new();
    for s in 0..a.sizes.len() {
        let mut ids: HashMap<&Vec<u64>, usize> = HashMap::new();
        let mut count_a: Vec<usize> = Vec::new();
        let ca: Vec<usize> = a.colours[s]
            .iter()
            .map(|c| {
                let next = ids.len();
                let id = *ids.entry(c).or_insert(next);
                if id == count_a.len() {
                    count_a.push(0);
                }
                count_a[id] += 1;
                id
            })
            .collect();
        let mut count_b = vec![0; count_a.len()];
        let mut cb = Vec::with_capacity(b.sizes[s]);
        for c in &b.colours[s] {
            match ids.get(c) {
                Some(&id) => {
                    count_b[id] += 1;
                    cb.push(id);
                }
                None => return Ok(IsoWitness::None { explored: 0 }),
            }
        }
        if count_a != count_b {
            return Ok(IsoWitness::None { explored: 0 });
        }
        class_a.push(ca);
        class_b.push(cb);
        remaining.push(count_b);
    }

    let mut entries = Vec::new();
    let mut watch: Vec<Vec<Vec<usize>>> = a.sizes.iter().map(|&n| vec![Vec::new(); n]).collect();
    let mut constants = Vec::new();
    for (k, op) in a.ops.iter().enumerate() {
        for (args, &out) in &op.entries {
            let idx = entries.len();
            if args.is_empty() {
                constants.push(idx);
            }
            for (&e, &s) in args.iter().zip(&op.inputs) {
                if watch[s][e].last() != Some(&idx) {
                    watch[s][e].push(idx);
                }
            }
            entries.push(Entry {
                op: k,
                args: args.clone(),
                out,
            });
        }
    }
    let mut st = State {
        a,
        b,
        entries,
        watch,
        class_a,
        class_b,
        remaining,
        f: a.sizes.iter().map(|&n| vec![FREE; n]).collect(),
        used: b.sizes.iter().map(|&n| vec![false; n]).collect(),
        trail: Vec::new(),
        nodes: 0,
        limit: limits.max_nodes,
    };
    let mut queue = Vec::new();
    for idx in constants {
        if !st.fire(idx, &mut queue) {
            return Ok(IsoWitness::None { explored: 0 });
        }
    }
    if !st.propagate(queue) {
        return Ok(IsoWitness::None { explored: 0 });
    }
    if st.solve()? {
        let maps = st.f.clone();
        debug_assert!(verify(a, b, &maps));
        Ok(IsoWitness::Found(maps))
    } else {
        Ok(IsoWitness::None { explored: st.nodes })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize, shift: usize) -> Sorted {
        // Z/n with elements relabelled by x ↦ x + shift
        let lab = |x: usize| (x + shift) % n;
        let mut s = Sorted::new(&[n]);
        let mut add = OpTable::new("add", &[0, 0], 0);
        for x in 0..n {
            for y in 0..n {
                add.set(&[lab(x), lab(y)], lab((x + y) % n));
            }
        }
        s.ops.push(add);
        s
    }

    #[test]
    fn relabelled_cycles_are_isomorphic() {
        let (a, b) = (cyclic(6, 0), cyclic(6, 4));
        let w = find_iso(&a, &b, SearchLimits::default()).unwrap();
        assert!(verify(&a, &b, w.maps().unwrap()));
    }

    #[test]
    fn different_sizes_are_not() {
        let w = find_iso(&cyclic(4, 0), &cyclic(5, 0), SearchLimits::default()).unwrap();
        assert_eq!(w, IsoWitness::None { explored: 0 });
    }

    #[test]
    fn cap_is_enforced() {
        let limits = SearchLimits {
            max_per_sort: 3,
            ..SearchLimits::default()
        };
        assert!(matches!(
            find_iso(&cyclic(4, 0), &cyclic(4, 0), limits),
            Err(Error::SearchBudgetExceeded(_))
        ));
    }
}
