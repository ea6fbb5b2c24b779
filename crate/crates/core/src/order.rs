//! Finite posets, forests, and binary relations over a shared carrier.
//!
//! Carriers are contiguous integers `0..n`. Orders are stored as full
//! reflexive relations, not cover lists, so order-theoretic checks are plain
//! bit operations. A *forest* is a poset in which every principal downset is
//! a chain; its Hasse diagram is a disjoint union of trees growing upward
//! from minimal roots.

use crate::error::{Error, Result};
use crate::sets::{Mask, NodeSet};

pub type Node = usize;

/// Binary relation on `0..n`, one bitmask row per source node:
/// bit `j` of `rows[i]` holds iff `(i, j)` is in the relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rel {
    n: usize,
    rows: Vec<u64>,
}

impl Rel {
    pub fn empty(n: usize) -> Rel {
        Rel { n, rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Rel {
        Rel {
            n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    pub fn full(n: usize) -> Rel {
        Rel {
            n,
            rows: vec![Mask::full(n).bits(); n],
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(Node, Node)]) -> Result<Rel> {
        if n > 64 {
            return Err(Error::TooLarge { what: "carrier", limit: 64, actual: n });
        }
        let mut r = Rel::empty(n);
        for &(a, b) in pairs {
            let bad = if a >= n { Some(a) } else if b >= n { Some(b) } else { None };
            if let Some(node) = bad {
                return Err(Error::NodeOutOfRange { node, n });
            }
            r.rows[a] |= 1 << b;
        }
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: Node, b: Node) -> bool {
        a < self.n && b < self.n && self.rows[a] >> b & 1 == 1
    }

    pub fn insert(&mut self, a: Node, b: Node) {
        debug_assert!(a < self.n && b < self.n);
        self.rows[a] |= 1 << b;
    }

    /// Successor set of `a` as a mask.
    pub fn row(&self, a: Node) -> Mask {
        Mask::from_bits(self.rows[a])
    }

    /// Predecessor set of `b` (the column) as a mask.
    pub fn column(&self, b: Node) -> Mask {
        let mut m = Mask::EMPTY;
        for a in 0..self.n {
            if self.contains(a, b) {
                m = m.with(a);
            }
        }
        m
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(Node, Node)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in Mask::from_bits(self.rows[a]).iter() {
                out.push((a, b));
            }
        }
        out
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Left-to-right composition: `(a, c)` holds iff there is `b` with
    /// `a self b` and `b other c`.
    pub fn compose(&self, other: &Rel) -> Result<Rel> {
        if self.n != other.n {
            return Err(Error::CarrierMismatch { left: self.n, right: other.n });
        }
        Ok(self.compose_same(other))
    }

    pub(crate) fn compose_same(&self, other: &Rel) -> Rel {
        debug_assert_eq!(self.n, other.n);
        let mut rows = vec![0u64; self.n];
        for (slot, &row) in rows.iter_mut().zip(&self.rows) {
            let mut acc = 0u64;
            let mut mids = row;
            while mids != 0 {
                let b = mids.trailing_zeros() as usize;
                mids &= mids - 1;
                acc |= other.rows[b];
            }
            *slot = acc;
        }
        Rel { n: self.n, rows }
    }

    pub fn union(&self, other: &Rel) -> Result<Rel> {
        if self.n != other.n {
            return Err(Error::CarrierMismatch { left: self.n, right: other.n });
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a | b).collect();
        Ok(Rel { n: self.n, rows })
    }

    pub fn inter(&self, other: &Rel) -> Result<Rel> {
        if self.n != other.n {
            return Err(Error::CarrierMismatch { left: self.n, right: other.n });
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a & b).collect();
        Ok(Rel { n: self.n, rows })
    }

    pub(crate) fn inter_same(&self, other: &Rel) -> Rel {
        self.inter(other).expect("same carrier")
    }

    pub fn is_subset(&self, other: &Rel) -> bool {
        self.n == other.n
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Lexicographically first pair of `self` missing from `other`, if any.
    pub fn first_pair_not_in(&self, other: &Rel) -> Option<(Node, Node)> {
        for a in 0..self.n {
            let diff = self.rows[a] & !other.rows[a];
            if diff != 0 {
                return Some((a, diff.trailing_zeros() as usize));
            }
        }
        None
    }

    pub fn transpose(&self) -> Rel {
        let mut rows = vec![0u64; self.n];
        for a in 0..self.n {
            let mut bs = self.rows[a];
            while bs != 0 {
                let b = bs.trailing_zeros() as usize;
                bs &= bs - 1;
                rows[b] |= 1 << a;
            }
        }
        Rel { n: self.n, rows }
    }

    /// Stable total order on same-carrier relations, used for canonical
    /// enumeration order.
    pub fn sort_key(&self) -> Vec<u64> {
        self.rows.clone()
    }
}

impl std::fmt::Debug for Rel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rel{:?}", self.pairs())
    }
}

/// A finite poset: carrier `0..n` with a validated reflexive partial order.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: Rel,
    geq: Rel,
}

impl Poset {
    /// Build from the full `<=` relation given as pairs. Reflexivity,
    /// antisymmetry and transitivity are checked.
    pub fn from_pairs(n: usize, pairs: &[(Node, Node)]) -> Result<Poset> {
        let leq = Rel::from_pairs(n, pairs)?;
        Poset::from_rel(leq)
    }

    /// Build from Hasse covers `(lower, upper)`; the order is the
    /// reflexive-transitive closure. Cycles surface as antisymmetry failures.
    pub fn from_covers(n: usize, covers: &[(Node, Node)]) -> Result<Poset> {
        let mut leq = Rel::from_pairs(n, covers)?;
        for i in 0..n {
            leq.insert(i, i);
        }
        // Floyd-Warshall style closure.
        for k in 0..n {
            let via = leq.rows[k];
            for i in 0..n {
                if leq.contains(i, k) {
                    leq.rows[i] |= via;
                }
            }
        }
        Poset::from_rel(leq)
    }

    fn from_rel(leq: Rel) -> Result<Poset> {
        let n = leq.n;
        for i in 0..n {
            if !leq.contains(i, i) {
                return Err(Error::NotAPoset { why: format!("missing {i} <= {i}") });
            }
        }
        for a in 0..n {
            for b in Mask::from_bits(leq.rows[a]).iter() {
                if a != b && leq.contains(b, a) {
                    return Err(Error::NotAPoset {
                        why: format!("antisymmetry fails on {a} and {b}"),
                    });
                }
            }
        }
        let closed = leq.compose_same(&leq);
        if let Some((a, c)) = closed.first_pair_not_in(&leq) {
            return Err(Error::NotAPoset {
                why: format!("transitivity fails: ({a}, {c}) is forced but absent"),
            });
        }
        let geq = leq.transpose();
        Ok(Poset { n, leq, geq })
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_rel(Rel::identity(n)).expect("identity is a poset")
    }

    pub fn chain(n: usize) -> Poset {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i..n {
                pairs.push((i, j));
            }
        }
        Poset::from_pairs(n, &pairs).expect("chain is a poset")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: Node, b: Node) -> bool {
        self.leq.contains(a, b)
    }

    /// The `<=` relation (reflexive).
    pub fn leq_rel(&self) -> &Rel {
        &self.leq
    }

    /// The `>=` relation (transpose of `<=`).
    pub fn geq_rel(&self) -> &Rel {
        &self.geq
    }

    /// Hasse covers `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> Vec<(Node, Node)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.leq(a, b) {
                    let strictly_between = (0..self.n)
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                    if !strictly_between {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    pub fn down_of(&self, x: Node) -> Mask {
        self.leq.column(x)
    }

    pub fn up_of(&self, x: Node) -> Mask {
        self.leq.row(x)
    }

    /// Downward closure of a node set.
    pub fn down_closure(&self, s: Mask) -> Mask {
        let mut out = Mask::EMPTY;
        for x in s.iter() {
            out = out.union(self.down_of(x));
        }
        out
    }

    /// Upward closure of a node set.
    pub fn up_closure(&self, s: Mask) -> Mask {
        let mut out = Mask::EMPTY;
        for x in s.iter() {
            out = out.union(self.up_of(x));
        }
        out
    }

    pub fn is_downset(&self, s: Mask) -> bool {
        self.down_closure(s) == s
    }

    /// True iff every principal downset is totally ordered.
    pub fn is_forest(&self) -> bool {
        self.forest_defect().is_none()
    }

    fn forest_defect(&self) -> Option<Node> {
        for x in 0..self.n {
            let down = self.down_of(x);
            for y in down.iter() {
                for z in down.iter() {
                    if !self.leq(y, z) && !self.leq(z, y) {
                        return Some(x);
                    }
                }
            }
        }
        None
    }

    /// Permutations `p` with `a <= b` iff `p[a] <= p[b]`, in lexicographic
    /// order. Exponential; carriers here are tiny.
    pub fn automorphisms(&self) -> Vec<Vec<Node>> {
        let mut out = Vec::new();
        let mut perm: Vec<Node> = Vec::with_capacity(self.n);
        let mut used = vec![false; self.n];
        self.automorphism_search(&mut perm, &mut used, &mut out);
        out
    }

    fn automorphism_search(
        &self,
        perm: &mut Vec<Node>,
        used: &mut [bool],
        out: &mut Vec<Vec<Node>>,
    ) {
        let k = perm.len();
        if k == self.n {
            out.push(perm.clone());
            return;
        }
        for cand in 0..self.n {
            if used[cand] {
                continue;
            }
            let ok = (0..k).all(|i| {
                self.leq(i, k) == self.leq(perm[i], cand)
                    && self.leq(k, i) == self.leq(cand, perm[i])
            });
            if ok {
                used[cand] = true;
                perm.push(cand);
                self.automorphism_search(perm, used, out);
                perm.pop();
                used[cand] = false;
            }
        }
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers())
    }
}

/// A poset whose principal downsets are chains. The empty forest is legal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Forest(Poset);

impl Forest {
    pub fn new(poset: Poset) -> Result<Forest> {
        match poset.forest_defect() {
            Some(node) => Err(Error::NotAForest { node }),
            None => Ok(Forest(poset)),
        }
    }

    pub fn from_covers(n: usize, covers: &[(Node, Node)]) -> Result<Forest> {
        Forest::new(Poset::from_covers(n, covers)?)
    }

    pub fn empty() -> Forest {
        Forest(Poset::antichain(0))
    }

    pub fn poset(&self) -> &Poset {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn leq(&self, a: Node, b: Node) -> bool {
        self.0.leq(a, b)
    }

    pub fn leq_rel(&self) -> &Rel {
        self.0.leq_rel()
    }

    pub fn geq_rel(&self) -> &Rel {
        self.0.geq_rel()
    }

    pub fn covers(&self) -> Vec<(Node, Node)> {
        self.0.covers()
    }

    pub fn is_downset(&self, s: Mask) -> bool {
        self.0.is_downset(s)
    }

    /// All downsets in canonical order: by cardinality, then
    /// lexicographically by sorted node list.
    pub fn downsets(&self) -> Vec<NodeSet> {
        let n = self.n();
        debug_assert!(n <= 24, "downset enumeration iterates all 2^n subsets");
        let mut out: Vec<NodeSet> = (0..1u64 << n)
            .map(Mask::from_bits)
            .filter(|&m| self.is_downset(m))
            .collect();
        out.sort_by_key(|m| m.canonical_key());
        out
    }

    /// Principal upset of a node.
    pub fn principal_up(&self, x: Node) -> Result<NodeSet> {
        if x >= self.n() {
            return Err(Error::NodeOutOfRange { node: x, n: self.n() });
        }
        Ok(self.0.up_of(x))
    }

    /// Principal downset of a node; always a chain here.
    pub fn principal_down(&self, x: Node) -> Result<NodeSet> {
        if x >= self.n() {
            return Err(Error::NodeOutOfRange { node: x, n: self.n() });
        }
        Ok(self.0.down_of(x))
    }

    /// Maximal nodes, one per tree top; a node set is a union of maximal
    /// trees iff it is a union of full principal-downset closures of these.
    pub fn maximal_nodes(&self) -> Vec<Node> {
        (0..self.n())
            .filter(|&x| (0..self.n()).all(|y| !self.leq(x, y) || x == y))
            .collect()
    }

    /// Roots (minimal nodes).
    pub fn roots(&self) -> Vec<Node> {
        (0..self.n())
            .filter(|&x| (0..self.n()).all(|y| !self.leq(y, x) || x == y))
            .collect()
    }

    /// The tree of a root: all nodes whose principal downset meets it.
    pub fn tree_of_root(&self, root: Node) -> NodeSet {
        let mut m = Mask::EMPTY;
        for x in 0..self.n() {
            if self.leq(root, x) {
                m = m.with(x);
            }
        }
        m
    }

    pub fn automorphisms(&self) -> Vec<Vec<Node>> {
        self.0.automorphisms()
    }
}
