//! Finite groups with operations.
//!
//! An [`OpAlgebra`] is a finite group, written additively, carrying named
//! binary operations `⋆` and unary operations `ω`. Every binary operation
//! is paired with its opposite `a ⋆° b = b ⋆ a`, which is itself part of the
//! signature (possibly `⋆` again when `⋆` is commutative). The axioms
//! checked by [`validate_algebra`] are the group laws, left distributivity
//! of each `⋆` over `+`, additivity of each `ω`, `ω(a) ⋆ b = ω(a ⋆ b)`, the
//! opposite pairing, and any user-declared extra identities.
//!
//! Elements are indices `0..n`. Constructions in this crate always place
//! the zero at index 0.

mod term;

use std::collections::BTreeSet;

pub use term::{check_identity, Identity, Term, MAX_VARIABLES};

use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// Row-major `rows × cols` table of element indices.
pub type Table = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryOp {
    pub name: String,
    /// Name of the opposite operation; equal to `name` for self-opposite ops.
    pub opposite: String,
    pub table: Table,
}

impl BinaryOp {
    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryOp {
    pub name: String,
    pub map: Vec<usize>,
}

impl UnaryOp {
    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }
}

/// Names of the non-group operations. Homomorphisms and all paired
/// structures require equal signatures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub binary: BTreeSet<String>,
    pub unary: BTreeSet<String>,
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "binary {:?}, unary {:?}", self.binary, self.unary)
    }
}

/// A finite group with operations given by total tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpAlgebra {
    size: usize,
    zero: usize,
    add: Table,
    neg: Vec<usize>,
    binary: Vec<BinaryOp>,
    unary: Vec<UnaryOp>,
    identities: Vec<Identity>,
}

/// Suffix given to auto-generated opposite operations.
pub const OPPOSITE_SUFFIX: &str = "°";

fn check_table(what: &str, t: &Table, rows: usize, cols: usize, range: usize) -> Result<()> {
    if t.len() != rows {
        return Err(Error::malformed(
            what,
            format!("expected {rows} rows, found {}", t.len()),
        ));
    }
    for (i, row) in t.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::malformed(
                what,
                format!("row {i} has length {}, expected {cols}", row.len()),
            ));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= range) {
            return Err(Error::malformed(
                what,
                format!("entry {bad} in row {i} is out of range 0..{range}"),
            ));
        }
    }
    Ok(())
}

fn check_map(what: &str, m: &[usize], len: usize, range: usize) -> Result<()> {
    if m.len() != len {
        return Err(Error::malformed(
            what,
            format!("expected length {len}, found {}", m.len()),
        ));
    }
    if let Some(&bad) = m.iter().find(|&&v| v >= range) {
        return Err(Error::malformed(
            what,
            format!("entry {bad} is out of range 0..{range}"),
        ));
    }
    Ok(())
}

pub(crate) fn check_map_shape(what: &str, m: &[usize], len: usize, range: usize) -> Result<()> {
    check_map(what, m, len, range)
}

impl OpAlgebra {
    /// A bare group given by its addition table, negation and zero.
    pub fn new(size: usize, zero: usize, add: Table, neg: Vec<usize>) -> Result<Self> {
        Self::from_parts(size, zero, add, neg, Vec::new(), Vec::new(), Vec::new())
    }

    /// Assembles an algebra and checks that every table is well shaped and
    /// every opposite reference resolves. Axioms are not checked here.
    pub fn from_parts(
        size: usize,
        zero: usize,
        add: Table,
        neg: Vec<usize>,
        binary: Vec<BinaryOp>,
        unary: Vec<UnaryOp>,
        identities: Vec<Identity>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::malformed("size", "carrier must be non-empty"));
        }
        if zero >= size {
            return Err(Error::malformed("zero", format!("{zero} is out of range 0..{size}")));
        }
        check_table("add", &add, size, size, size)?;
        check_map("neg", &neg, size, size)?;
        let mut names = BTreeSet::new();
        for op in &binary {
            check_table(&op.name, &op.table, size, size, size)?;
            if !names.insert(op.name.clone()) {
                return Err(Error::malformed(&op.name, "duplicate operation name"));
            }
        }
        for op in &unary {
            check_map(&op.name, &op.map, size, size)?;
            if !names.insert(op.name.clone()) {
                return Err(Error::malformed(&op.name, "duplicate operation name"));
            }
        }
        for op in &binary {
            match binary.iter().find(|o| o.name == op.opposite) {
                Some(o) if o.opposite == op.name => {}
                Some(_) => {
                    return Err(Error::malformed(
                        &op.name,
                        format!("opposite `{}` does not point back", op.opposite),
                    ))
                }
                None => {
                    return Err(Error::malformed(
                        &op.name,
                        format!("opposite `{}` is not a binary operation", op.opposite),
                    ))
                }
            }
        }
        let alg = OpAlgebra {
            size,
            zero,
            add,
            neg,
            binary,
            unary,
            identities: Vec::new(),
        };
        identities.into_iter().try_fold(alg, |a, id| a.push_identity(id))
    }

    /// The cyclic group `Z/n` with no extra operations.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let neg = (0..n).map(|a| (n - a) % n).collect();
        OpAlgebra::new(n, 0, add, neg).expect("cyclic tables are well shaped")
    }

    /// A group from its addition table alone; zero and negation are found
    /// by search.
    pub fn from_add_table(add: Table) -> Result<Self> {
        let n = add.len();
        check_table("add", &add, n, n, n.max(1))?;
        let zero = (0..n)
            .find(|&e| (0..n).all(|x| add[e][x] == x && add[x][e] == x))
            .ok_or_else(|| Error::malformed("add", "no two-sided identity element"))?;
        let neg = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| add[a][b] == zero && add[b][a] == zero)
                    .ok_or_else(|| Error::malformed("add", format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        OpAlgebra::new(n, zero, add, neg)
    }

    /// The one-element algebra with the same signature and identities.
    pub fn trivial_like(&self) -> Self {
        OpAlgebra {
            size: 1,
            zero: 0,
            add: vec![vec![0]],
            neg: vec![0],
            binary: self
                .binary
                .iter()
                .map(|op| BinaryOp {
                    name: op.name.clone(),
                    opposite: op.opposite.clone(),
                    table: vec![vec![0]],
                })
                .collect(),
            unary: self
                .unary
                .iter()
                .map(|op| UnaryOp {
                    name: op.name.clone(),
                    map: vec![0],
                })
                .collect(),
            identities: self.identities.clone(),
        }
    }

    /// Adds `⋆` together with a generated opposite named `⋆°`.
    pub fn with_binary(mut self, name: &str, table: Table) -> Result<Self> {
        let opp_name = format!("{name}{OPPOSITE_SUFFIX}");
        check_table(name, &table, self.size, self.size, self.size)?;
        let opp = transpose(&table);
        self.insert_binary(BinaryOp {
            name: name.to_string(),
            opposite: opp_name.clone(),
            table,
        })?;
        self.insert_binary(BinaryOp {
            name: opp_name,
            opposite: name.to_string(),
            table: opp,
        })?;
        Ok(self)
    }

    /// Adds a commutative `⋆` that is declared to be its own opposite.
    pub fn with_self_opposite(mut self, name: &str, table: Table) -> Result<Self> {
        check_table(name, &table, self.size, self.size, self.size)?;
        self.insert_binary(BinaryOp {
            name: name.to_string(),
            opposite: name.to_string(),
            table,
        })?;
        Ok(self)
    }

    pub fn with_unary(mut self, name: &str, map: Vec<usize>) -> Result<Self> {
        check_map(name, &map, self.size, self.size)?;
        if self.has_op(name) {
            return Err(Error::malformed(name, "duplicate operation name"));
        }
        self.unary.push(UnaryOp {
            name: name.to_string(),
            map,
        });
        Ok(self)
    }

    pub fn with_identity(self, text: &str) -> Result<Self> {
        self.push_identity(Identity::parse(text)?)
    }

    fn push_identity(mut self, id: Identity) -> Result<Self> {
        let (b, u) = id.operation_names();
        for name in b {
            if self.binary_index(&name).is_none() {
                return Err(Error::UnknownOperationName(name));
            }
        }
        for name in u {
            if self.unary_index(&name).is_none() {
                return Err(Error::UnknownOperationName(name));
            }
        }
        if !self.identities.contains(&id) {
            self.identities.push(id);
        }
        Ok(self)
    }

    fn has_op(&self, name: &str) -> bool {
        self.binary_index(name).is_some() || self.unary_index(name).is_some()
    }

    fn insert_binary(&mut self, op: BinaryOp) -> Result<()> {
        if self.has_op(&op.name) {
            return Err(Error::malformed(&op.name, "duplicate operation name"));
        }
        self.binary.push(op);
        Ok(())
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// `a - b`, i.e. `a + (-b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `b + a - b`.
    #[inline]
    pub fn conj(&self, b: usize, a: usize) -> usize {
        self.sub(self.add(b, a), b)
    }

    pub fn add_table(&self) -> &Table {
        &self.add
    }

    pub fn neg_map(&self) -> &[usize] {
        &self.neg
    }

    pub fn binary_ops(&self) -> &[BinaryOp] {
        &self.binary
    }

    pub fn unary_ops(&self) -> &[UnaryOp] {
        &self.unary
    }

    pub fn identities(&self) -> &[Identity] {
        &self.identities
    }

    pub fn binary_index(&self, name: &str) -> Option<usize> {
        self.binary.iter().position(|op| op.name == name)
    }

    pub fn unary_index(&self, name: &str) -> Option<usize> {
        self.unary.iter().position(|op| op.name == name)
    }

    pub fn binary(&self, name: &str) -> Option<&BinaryOp> {
        self.binary.iter().find(|op| op.name == name)
    }

    pub fn unary(&self, name: &str) -> Option<&UnaryOp> {
        self.unary.iter().find(|op| op.name == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn signature(&self) -> Signature {
        Signature {
            binary: self.binary.iter().map(|op| op.name.clone()).collect(),
            unary: self.unary.iter().map(|op| op.name.clone()).collect(),
        }
    }

    pub fn same_signature(&self, other: &OpAlgebra) -> Result<()> {
        let (a, b) = (self.signature(), other.signature());
        if a != b {
            return Err(Error::SignatureMismatch(format!("{a} vs {b}")));
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.add(a, b) == self.add(b, a)))
    }

    /// Replaces the binary and unary tables with the ones computed by
    /// `binary(op_index, a, b)` / `unary(op_index, a)`, keeping names.
    pub(crate) fn with_tables_from(
        template: &OpAlgebra,
        size: usize,
        zero: usize,
        add: impl Fn(usize, usize) -> usize,
        neg: impl Fn(usize) -> usize,
        binary: impl Fn(usize, usize, usize) -> usize,
        unary: impl Fn(usize, usize) -> usize,
    ) -> Result<OpAlgebra> {
        let add_t = (0..size).map(|a| (0..size).map(|b| add(a, b)).collect()).collect();
        let neg_m = (0..size).map(&neg).collect();
        let bin = template
            .binary
            .iter()
            .enumerate()
            .map(|(k, op)| BinaryOp {
                name: op.name.clone(),
                opposite: op.opposite.clone(),
                table: (0..size)
                    .map(|a| (0..size).map(|b| binary(k, a, b)).collect())
                    .collect(),
            })
            .collect();
        let un = template
            .unary
            .iter()
            .enumerate()
            .map(|(k, op)| UnaryOp {
                name: op.name.clone(),
                map: (0..size).map(|a| unary(k, a)).collect(),
            })
            .collect();
        OpAlgebra::from_parts(size, zero, add_t, neg_m, bin, un, template.identities.clone())
    }

    /// The same algebra with element `a` renamed `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<OpAlgebra> {
        if perm.len() != self.size || !is_bijection(perm, self.size) {
            return Err(Error::malformed(
                "perm",
                format!("not a permutation of 0..{}", self.size),
            ));
        }
        let mut inv = vec![0; self.size];
        for (a, &p) in perm.iter().enumerate() {
            inv[p] = a;
        }
        OpAlgebra::with_tables_from(
            self,
            self.size,
            perm[self.zero],
            |a, b| perm[self.add(inv[a], inv[b])],
            |a| perm[self.neg(inv[a])],
            |k, a, b| perm[self.binary[k].apply(inv[a], inv[b])],
            |k, a| perm[self.unary[k].apply(inv[a])],
        )
    }

    /// The subalgebra on `members`, re-indexed in ascending order. Returns
    /// the algebra and the map from new indices to old ones.
    pub fn restrict(&self, members: &[usize]) -> Result<(OpAlgebra, Vec<usize>)> {
        let s = SubSet::new(self, members.iter().copied())?;
        let report = check_subobject(&s);
        if !report.is_ok() {
            return Err(Error::NotASubobject(report));
        }
        let old: Vec<usize> = s.members().to_vec();
        let mut new_of = vec![usize::MAX; self.size];
        for (i, &o) in old.iter().enumerate() {
            new_of[o] = i;
        }
        let alg = OpAlgebra::with_tables_from(
            self,
            old.len(),
            new_of[self.zero],
            |a, b| new_of[self.add(old[a], old[b])],
            |a| new_of[self.neg(old[a])],
            |k, a, b| new_of[self.binary[k].apply(old[a], old[b])],
            |k, a| new_of[self.unary[k].apply(old[a])],
        )?;
        Ok((alg, old))
    }
}

pub(crate) fn transpose(t: &Table) -> Table {
    let n = t.len();
    let m = t.first().map_or(0, |r| r.len());
    (0..m).map(|j| (0..n).map(|i| t[i][j]).collect()).collect()
}

/// Exhaustively checks every axiom of a group with operations.
pub fn validate_algebra(a: &OpAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new();
    let n = a.size();
    let z = a.zero();

    'assoc: for x in 0..n {
        for y in 0..n {
            let xy = a.add(x, y);
            for w in 0..n {
                if a.add(xy, w) != a.add(x, a.add(y, w)) {
                    r.fail("add.assoc", &[], &[x, y, w], "(x+y)+z != x+(y+z)");
                    if r.saturated("add.assoc", &[]) {
                        break 'assoc;
                    }
                }
            }
        }
    }
    for x in 0..n {
        if a.add(z, x) != x || a.add(x, z) != x {
            r.fail("add.identity", &[], &[x], "0 is not a two-sided identity for x");
        }
        if a.add(x, a.neg(x)) != z || a.add(a.neg(x), x) != z {
            r.fail("add.inverse", &[], &[x], "-x is not a two-sided inverse of x");
        }
    }

    for op in a.binary_ops() {
        let labels = [op.name.as_str()];
        'dist: for x in 0..n {
            for y in 0..n {
                for w in 0..n {
                    if op.apply(x, a.add(y, w)) != a.add(op.apply(x, y), op.apply(x, w)) {
                        r.fail("binary.distrib", &labels, &[x, y, w], "x*(y+z) != x*y + x*z");
                        if r.saturated("binary.distrib", &labels) {
                            break 'dist;
                        }
                    }
                }
            }
        }
        let opp = a.binary(&op.opposite).expect("opposite resolved at construction");
        let labels = [op.name.as_str(), opp.name.as_str()];
        for x in 0..n {
            for y in 0..n {
                if opp.apply(x, y) != op.apply(y, x) {
                    r.fail("binary.opposite", &labels, &[x, y], "x *° y != y * x");
                }
            }
        }
    }

    for w in a.unary_ops() {
        let labels = [w.name.as_str()];
        for x in 0..n {
            for y in 0..n {
                if w.apply(a.add(x, y)) != a.add(w.apply(x), w.apply(y)) {
                    r.fail("unary.additive", &labels, &[x, y], "w(x+y) != w(x)+w(y)");
                }
            }
        }
        for op in a.binary_ops() {
            let labels = [w.name.as_str(), op.name.as_str()];
            for x in 0..n {
                for y in 0..n {
                    if op.apply(w.apply(x), y) != w.apply(op.apply(x, y)) {
                        r.fail("unary.star", &labels, &[x, y], "w(x)*y != w(x*y)");
                    }
                }
            }
        }
    }

    for id in a.identities() {
        match check_identity(a, id) {
            Ok(rep) => r.merge(rep),
            Err(e) => r.fail("identity", &[id.text()], &[], e.to_string()),
        }
    }
    r
}

/// A homomorphism candidate between two algebras of the same signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    pub source: OpAlgebra,
    pub target: OpAlgebra,
    pub map: Vec<usize>,
}

impl AlgebraHom {
    pub fn new(source: OpAlgebra, target: OpAlgebra, map: Vec<usize>) -> Result<Self> {
        source.same_signature(&target)?;
        check_map("map", &map, source.size(), target.size())?;
        Ok(AlgebraHom { source, target, map })
    }

    pub fn identity(a: &OpAlgebra) -> Self {
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            map: a.elements().collect(),
        }
    }

    /// Preimage of zero.
    pub fn kernel(&self) -> Vec<usize> {
        self.source
            .elements()
            .filter(|&a| self.map[a] == self.target.zero())
            .collect()
    }

    pub fn is_bijective(&self) -> bool {
        is_bijection(&self.map, self.target.size())
    }
}

pub(crate) fn is_bijection(map: &[usize], target_size: usize) -> bool {
    if map.len() != target_size {
        return false;
    }
    let mut seen = vec![false; target_size];
    map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

/// Counterexamples to `map: source -> target` preserving `+`, every `⋆`
/// and every `ω`. `label` names the map in the report.
pub fn check_homomorphism(
    source: &OpAlgebra,
    target: &OpAlgebra,
    map: &[usize],
    label: &str,
) -> Result<ValidationReport> {
    source.same_signature(target)?;
    check_map(label, map, source.size(), target.size())?;
    let mut r = ValidationReport::new();
    let n = source.size();
    for a in 0..n {
        for b in 0..n {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                r.fail("hom.add", &[label], &[a, b], "f(a+b) != f(a)+f(b)");
            }
        }
    }
    for op in source.binary_ops() {
        let t = target.binary(&op.name).expect("signatures match");
        for a in 0..n {
            for b in 0..n {
                if map[op.apply(a, b)] != t.apply(map[a], map[b]) {
                    r.fail("hom.binary", &[label, &op.name], &[a, b], "f(a*b) != f(a)*f(b)");
                }
            }
        }
    }
    for op in source.unary_ops() {
        let t = target.unary(&op.name).expect("signatures match");
        for a in 0..n {
            if map[op.apply(a)] != t.apply(map[a]) {
                r.fail("hom.unary", &[label, &op.name], &[a], "f(w a) != w f(a)");
            }
        }
    }
    Ok(r)
}

pub fn is_homomorphism(f: &AlgebraHom) -> Result<bool> {
    Ok(check_homomorphism(&f.source, &f.target, &f.map, "f")?.is_ok())
}

/// A subset of an algebra's carrier, kept sorted and duplicate-free.
#[derive(Clone, Debug)]
pub struct SubSet<'a> {
    parent: &'a OpAlgebra,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl<'a> SubSet<'a> {
    pub fn new(parent: &'a OpAlgebra, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; parent.size()];
        for m in members {
            if m >= parent.size() {
                return Err(Error::malformed(
                    "subset",
                    format!("{m} is out of range 0..{}", parent.size()),
                ));
            }
            mask[m] = true;
        }
        let members = (0..parent.size()).filter(|&i| mask[i]).collect();
        Ok(SubSet { parent, members, mask })
    }

    pub fn whole(parent: &'a OpAlgebra) -> Self {
        SubSet::new(parent, parent.elements()).expect("in range")
    }

    pub fn parent(&self) -> &'a OpAlgebra {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.mask[a]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Closure of `s` under the full signature, with counterexamples.
pub fn check_subobject(s: &SubSet) -> ValidationReport {
    let a = s.parent();
    let mut r = ValidationReport::new();
    if !s.contains(a.zero()) {
        r.fail("subobject.zero", &[], &[a.zero()], "0 is not a member");
    }
    for &x in s.members() {
        if !s.contains(a.neg(x)) {
            r.fail("subobject.neg", &[], &[x], "-x is not a member");
        }
        for &y in s.members() {
            if !s.contains(a.add(x, y)) {
                r.fail("subobject.add", &[], &[x, y], "x+y is not a member");
            }
        }
    }
    for op in a.binary_ops() {
        for &x in s.members() {
            for &y in s.members() {
                if !s.contains(op.apply(x, y)) {
                    r.fail("subobject.binary", &[&op.name], &[x, y], "x*y is not a member");
                }
            }
        }
    }
    for op in a.unary_ops() {
        for &x in s.members() {
            if !s.contains(op.apply(x)) {
                r.fail("subobject.unary", &[&op.name], &[x], "w(x) is not a member");
            }
        }
    }
    r
}

pub fn is_subobject(s: &SubSet) -> bool {
    check_subobject(s).is_ok()
}

/// Normal additive subgroup absorbing every binary operation on both sides.
pub fn check_ideal(s: &SubSet) -> ValidationReport {
    let a = s.parent();
    let mut r = ValidationReport::new();
    if !s.contains(a.zero()) {
        r.fail("ideal.zero", &[], &[a.zero()], "0 is not a member");
    }
    for &x in s.members() {
        if !s.contains(a.neg(x)) {
            r.fail("ideal.neg", &[], &[x], "-x is not a member");
        }
        for &y in s.members() {
            if !s.contains(a.add(x, y)) {
                r.fail("ideal.add", &[], &[x, y], "x+y is not a member");
            }
        }
    }
    for g in a.elements() {
        for &x in s.members() {
            if !s.contains(a.conj(g, x)) {
                r.fail("ideal.normal", &[], &[g, x], "g+x-g is not a member");
            }
        }
    }
    for op in a.binary_ops() {
        for &x in s.members() {
            for g in a.elements() {
                if !s.contains(op.apply(x, g)) {
                    r.fail("ideal.absorb_left", &[&op.name], &[x, g], "x*g is not a member");
                }
                if !s.contains(op.apply(g, x)) {
                    r.fail("ideal.absorb_right", &[&op.name], &[x, g], "g*x is not a member");
                }
            }
        }
    }
    r
}

pub fn is_ideal(s: &SubSet) -> bool {
    check_ideal(s).is_ok()
}

/// Candidate derived actions of `actor` (B) on `acted` (A): the conjugation
/// action `b·a` and, for every binary operation of the shared signature,
/// the action `b⋆a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedActionData {
    actor: OpAlgebra,
    acted: OpAlgebra,
    dot: Table,
    star_actions: Vec<(String, Table)>,
}

impl DerivedActionData {
    /// `star_actions` must name every binary operation of the signature
    /// exactly once; tables are stored in the signature's order.
    pub fn new(actor: OpAlgebra, acted: OpAlgebra, dot: Table, star_actions: Vec<(String, Table)>) -> Result<Self> {
        actor.same_signature(&acted)?;
        check_table("dot", &dot, actor.size(), acted.size(), acted.size())?;
        let mut ordered = Vec::with_capacity(acted.binary_ops().len());
        for op in acted.binary_ops() {
            let mut found = star_actions.iter().filter(|(n, _)| *n == op.name);
            let (_, t) = found
                .next()
                .ok_or_else(|| Error::malformed("star_actions", format!("missing action table for `{}`", op.name)))?;
            if found.next().is_some() {
                return Err(Error::malformed(
                    "star_actions",
                    format!("duplicate action table for `{}`", op.name),
                ));
            }
            check_table(&op.name, t, actor.size(), acted.size(), acted.size())?;
            ordered.push((op.name.clone(), t.clone()));
        }
        if star_actions.len() != ordered.len() {
            let extra = star_actions
                .iter()
                .find(|(n, _)| acted.binary_index(n).is_none())
                .map(|(n, _)| n.clone())
                .unwrap_or_default();
            return Err(Error::UnknownOperationName(extra));
        }
        Ok(DerivedActionData {
            actor,
            acted,
            dot,
            star_actions: ordered,
        })
    }

    /// `b·a = a` and `b⋆a = 0`.
    pub fn trivial(actor: OpAlgebra, acted: OpAlgebra) -> Result<Self> {
        let dot = (0..actor.size()).map(|_| acted.elements().collect()).collect();
        let stars = acted
            .binary_ops()
            .iter()
            .map(|op| (op.name.clone(), vec![vec![acted.zero(); acted.size()]; actor.size()]))
            .collect();
        DerivedActionData::new(actor, acted, dot, stars)
    }

    pub fn actor(&self) -> &OpAlgebra {
        &self.actor
    }

    pub fn acted(&self) -> &OpAlgebra {
        &self.acted
    }

    pub fn dot_table(&self) -> &Table {
        &self.dot
    }

    pub fn star_tables(&self) -> &[(String, Table)] {
        &self.star_actions
    }

    /// `b·a`.
    #[inline]
    pub fn dot(&self, b: usize, a: usize) -> usize {
        self.dot[b][a]
    }

    /// `b⋆a` for the binary operation at signature index `k`.
    #[inline]
    pub fn star(&self, k: usize, b: usize, a: usize) -> usize {
        self.star_actions[k].1[b][a]
    }

    /// Right-hand form `a⋆b`, read through the opposite operation:
    /// `a⋆b = b⋆°a`.
    #[inline]
    pub fn star_right(&self, k: usize, a: usize, b: usize) -> usize {
        let opp = &self.acted.binary_ops()[k].opposite;
        let ko = self.acted.binary_index(opp).expect("opposite resolved");
        self.star(ko, b, a)
    }

    /// Index of the pair `(b, a)` in the semidirect product.
    #[inline]
    pub fn pair(&self, b: usize, a: usize) -> usize {
        b * self.acted.size() + a
    }

    #[inline]
    pub fn unpair(&self, i: usize) -> (usize, usize) {
        (i / self.acted.size(), i % self.acted.size())
    }
}

/// The semidirect product `B ⋉ A` on pairs `(b, a)`, encoded as
/// `b·|A| + a`, with
///
/// ```text
/// (b', a') + (b, a) = (b' + b, (-b)·a' + a)
/// (b', a') ⋆ (b, a) = (b' ⋆ b, b' ⋆ a + a' ⋆ b + a' ⋆ a)
/// ω(b, a)           = (ω b, ω a)
/// ```
///
/// where `a' ⋆ b` is read as `b ⋆° a'`. The pair `(b, a)` stands for
/// `s(b) + a` in the split extension, so the right action `a'·b` in the
/// addition rule is conjugation by `-b`. No validity judgement is made.
pub fn semidirect_product(act: &DerivedActionData) -> OpAlgebra {
    let (bb, aa) = (act.actor(), act.acted());
    let size = bb.size() * aa.size();
    let build = || {
        OpAlgebra::with_tables_from(
            aa,
            size,
            act.pair(bb.zero(), aa.zero()),
            |x, y| {
                let ((b1, a1), (b2, a2)) = (act.unpair(x), act.unpair(y));
                act.pair(bb.add(b1, b2), aa.add(act.dot(bb.neg(b2), a1), a2))
            },
            |x| {
                let (b, a) = act.unpair(x);
                act.pair(bb.neg(b), aa.neg(act.dot(b, a)))
            },
            |k, x, y| {
                let ((b1, a1), (b2, a2)) = (act.unpair(x), act.unpair(y));
                let op_a = &aa.binary_ops()[k];
                let op_b = &bb.binary_ops()[k];
                let second = aa.add(
                    aa.add(act.star(k, b1, a2), act.star_right(k, a1, b2)),
                    op_a.apply(a1, a2),
                );
                act.pair(op_b.apply(b1, b2), second)
            },
            |k, x| {
                let (b, a) = act.unpair(x);
                let wb = bb.unary_ops()[k].apply(b);
                let wa = aa.unary_ops()[k].apply(a);
                act.pair(wb, wa)
            },
        )
    };
    let mut out = build().expect("semidirect tables are well shaped");
    for id in bb.identities() {
        if !out.identities.contains(id) {
            out.identities.push(id.clone());
        }
    }
    out
}

/// Counterexamples from validating the semidirect product, scoped
/// `semidirect`.
pub fn check_derived_action(act: &DerivedActionData) -> ValidationReport {
    validate_algebra(&semidirect_product(act)).scoped("semidirect")
}

/// The actions are derived actions iff the semidirect product is a group
/// with operations.
pub fn is_derived_action(act: &DerivedActionData) -> bool {
    validate_algebra(&semidirect_product(act)).is_ok()
}
