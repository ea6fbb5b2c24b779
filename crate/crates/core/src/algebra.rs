//! Finite Gödel algebras given by operation tables.
//!
//! A Gödel algebra here is a prelinear Heyting algebra: a bounded
//! distributive lattice with a residuum for meet satisfying
//! `(a -> b) v (b -> a) = T`. The lattice order is derived from meet
//! (`a <= b` iff `a ^ b = a`); bounds are derived from the tables during
//! validation rather than trusted from the caller.

use crate::error::{Error, Result};
use crate::order::Poset;
use crate::sets::{ElemSet, Mask};
use std::fmt;

pub type Elem = usize;

/// Which law failed first, in the fixed check order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    Lattice,
    Bounds,
    Distributivity,
    Residuation,
    Prelinearity,
    BoxTop,
    BoxMeet,
    DiamondBot,
    DiamondJoin,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::Lattice => "lattice",
            ViolationKind::Bounds => "bounds",
            ViolationKind::Distributivity => "distributivity",
            ViolationKind::Residuation => "residuation",
            ViolationKind::Prelinearity => "prelinearity",
            ViolationKind::BoxTop => "box-top",
            ViolationKind::BoxMeet => "box-meet",
            ViolationKind::DiamondBot => "diamond-bot",
            ViolationKind::DiamondJoin => "diamond-join",
        }
    }
}

/// First law violation found during validation, with the witness elements
/// that break it (empty for global failures such as a missing bottom).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    pub kind: ViolationKind,
    pub witness: Vec<Elem>,
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} law fails", self.kind.name())?;
        if !self.witness.is_empty() {
            write!(f, " at {:?}", self.witness)?;
        }
        Ok(())
    }
}

fn violation(kind: ViolationKind, witness: &[Elem]) -> Error {
    Error::Algebra(ViolationReport { kind, witness: witness.to_vec() })
}

/// A validated finite Gödel algebra. Tables are row-major `n * n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GodelAlgebra {
    n: usize,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    imp: Vec<Elem>,
    bot: Elem,
    top: Elem,
}

impl GodelAlgebra {
    /// Validate tables and derive the bounds. Checks run in a fixed order
    /// (lattice, bounds, distributivity, residuation, prelinearity) and the
    /// first violation is reported. The one-element algebra is accepted.
    pub fn new(n: usize, meet: Vec<Elem>, join: Vec<Elem>, imp: Vec<Elem>) -> Result<GodelAlgebra> {
        if n == 0 {
            return Err(Error::MalformedTable {
                table: "meet",
                why: "empty carrier".into(),
            });
        }
        if n > 64 {
            return Err(Error::TooLarge { what: "algebra carrier", limit: 64, actual: n });
        }
        for (name, t) in [("meet", &meet), ("join", &join), ("imp", &imp)] {
            if t.len() != n * n {
                return Err(Error::MalformedTable {
                    table: match name {
                        "meet" => "meet",
                        "join" => "join",
                        _ => "imp",
                    },
                    why: format!("expected {} entries, got {}", n * n, t.len()),
                });
            }
            if let Some(&bad) = t.iter().find(|&&e| e >= n) {
                return Err(Error::MalformedTable {
                    table: match name {
                        "meet" => "meet",
                        "join" => "join",
                        _ => "imp",
                    },
                    why: format!("entry {bad} out of range for carrier {n}"),
                });
            }
        }
        let alg = GodelAlgebra { n, meet, join, imp, bot: 0, top: 0 };
        alg.validated()
    }

    fn validated(mut self) -> Result<GodelAlgebra> {
        let n = self.n;
        let m = |a: Elem, b: Elem| self.meet[a * n + b];
        let j = |a: Elem, b: Elem| self.join[a * n + b];

        // Lattice laws: idempotent, commutative, associative, absorption.
        for a in 0..n {
            if m(a, a) != a || j(a, a) != a {
                return Err(violation(ViolationKind::Lattice, &[a]));
            }
            for b in 0..n {
                if m(a, b) != m(b, a) || j(a, b) != j(b, a) {
                    return Err(violation(ViolationKind::Lattice, &[a, b]));
                }
                if m(a, j(a, b)) != a || j(a, m(a, b)) != a {
                    return Err(violation(ViolationKind::Lattice, &[a, b]));
                }
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) || j(j(a, b), c) != j(a, j(b, c)) {
                        return Err(violation(ViolationKind::Lattice, &[a, b, c]));
                    }
                }
            }
        }

        // Bounds: a unique least and greatest element must exist.
        let bot = (0..n).find(|&z| (0..n).all(|x| m(z, x) == z));
        let top = (0..n).find(|&t| (0..n).all(|x| m(t, x) == x));
        let (bot, top) = match (bot, top) {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(violation(ViolationKind::Bounds, &[])),
        };
        self.bot = bot;
        self.top = top;

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(a, j(b, c)) != j(m(a, b), m(a, c)) {
                        return Err(violation(ViolationKind::Distributivity, &[a, b, c]));
                    }
                }
            }
        }

        // Residuation: a ^ b <= c iff a <= (b -> c), with <= from meet.
        let leq = |a: Elem, b: Elem| m(a, b) == a;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = leq(m(a, b), c);
                    let rhs = leq(a, self.imp[b * n + c]);
                    if lhs != rhs {
                        return Err(violation(ViolationKind::Residuation, &[a, b, c]));
                    }
                }
            }
        }

        for a in 0..n {
            for b in 0..n {
                let i1 = self.imp[a * n + b];
                let i2 = self.imp[b * n + a];
                if j(i1, i2) != top {
                    return Err(violation(ViolationKind::Prelinearity, &[a, b]));
                }
            }
        }

        Ok(self)
    }

    /// The k-element chain; a Gödel algebra for every k >= 1.
    pub fn chain(k: usize) -> GodelAlgebra {
        assert!((1..=64).contains(&k));
        let mut meet = Vec::with_capacity(k * k);
        let mut join = Vec::with_capacity(k * k);
        let mut imp = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                meet.push(a.min(b));
                join.push(a.max(b));
                imp.push(if a <= b { k - 1 } else { b });
            }
        }
        GodelAlgebra::new(k, meet, join, imp).expect("chains are Godel algebras")
    }

    pub fn two() -> GodelAlgebra {
        GodelAlgebra::chain(2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bot(&self) -> Elem {
        self.bot
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.n + b]
    }

    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.n + b]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.imp(a, self.bot)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.meet(a, b) == a
    }

    pub fn meet_table(&self) -> &[Elem] {
        &self.meet
    }

    pub fn join_table(&self) -> &[Elem] {
        &self.join
    }

    pub fn imp_table(&self) -> &[Elem] {
        &self.imp
    }

    /// The lattice order as a poset on the element carrier.
    pub fn order(&self) -> Poset {
        let mut pairs = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.leq(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        Poset::from_pairs(self.n, &pairs).expect("lattice order is a poset")
    }

    pub fn upset_of(&self, a: Elem) -> ElemSet {
        let mut m = Mask::EMPTY;
        for b in 0..self.n {
            if self.leq(a, b) {
                m = m.with(b);
            }
        }
        m
    }

    pub fn downset_of(&self, a: Elem) -> ElemSet {
        let mut m = Mask::EMPTY;
        for b in 0..self.n {
            if self.leq(b, a) {
                m = m.with(b);
            }
        }
        m
    }

    /// Non-bottom elements that are not a join of two strictly smaller ones,
    /// in ascending element order.
    pub fn join_irreducibles(&self) -> Vec<Elem> {
        (0..self.n)
            .filter(|&x| {
                x != self.bot
                    && !(0..self.n).any(|y| {
                        (0..self.n).any(|z| self.join(y, z) == x && y != x && z != x)
                    })
            })
            .collect()
    }

    /// Prime filters, each the principal upset of a join-irreducible,
    /// in ascending generator order.
    pub fn prime_filters(&self) -> Vec<(Elem, ElemSet)> {
        self.join_irreducibles()
            .into_iter()
            .map(|j| (j, self.upset_of(j)))
            .collect()
    }

    /// Filter: contains top, closed under meet, upward closed.
    pub fn is_filter(&self, s: ElemSet) -> bool {
        debug_assert!(s.is_subset(Mask::full(self.n)));
        if !s.contains(self.top) {
            return false;
        }
        for a in s.iter() {
            for b in s.iter() {
                if !s.contains(self.meet(a, b)) {
                    return false;
                }
            }
            if !self.upset_of(a).is_subset(s) {
                return false;
            }
        }
        true
    }

    /// Prime filter: a proper filter such that `a v b` inside forces `a` or
    /// `b` inside.
    pub fn is_prime_filter(&self, s: ElemSet) -> bool {
        if !self.is_filter(s) || s == Mask::full(self.n) {
            return false;
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if s.contains(self.join(a, b)) && !s.contains(a) && !s.contains(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Co-filter: non-empty, upward closed, and `a v b` inside forces `a` or
    /// `b` inside.
    pub fn is_cofilter(&self, s: ElemSet) -> bool {
        debug_assert!(s.is_subset(Mask::full(self.n)));
        if s.is_empty() {
            return false;
        }
        for a in s.iter() {
            if !self.upset_of(a).is_subset(s) {
                return false;
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if s.contains(self.join(a, b)) && !s.contains(a) && !s.contains(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Ideal: non-empty, downward closed, closed under join.
    pub fn is_ideal(&self, s: ElemSet) -> bool {
        debug_assert!(s.is_subset(Mask::full(self.n)));
        if s.is_empty() {
            return false;
        }
        for a in s.iter() {
            if !self.downset_of(a).is_subset(s) {
                return false;
            }
            for b in s.iter() {
                if !s.contains(self.join(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest filter containing a non-empty set: here, the principal upset
    /// of the meet of all its members.
    pub fn filter_generated(&self, s: ElemSet) -> ElemSet {
        assert!(!s.is_empty(), "filter generation needs a non-empty seed");
        let m = s.iter().fold(self.top, |acc, x| self.meet(acc, x));
        self.upset_of(m)
    }

    /// Elements with a Boolean complement: `a v neg(a) = top`.
    pub fn boolean_elements(&self) -> ElemSet {
        let mut out = Mask::EMPTY;
        for a in 0..self.n {
            if self.join(a, self.neg(a)) == self.top {
                out = out.with(a);
            }
        }
        out
    }
}

impl fmt::Debug for GodelAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GodelAlgebra(n={}, bot={}, top={})", self.n, self.bot, self.top)
    }
}
