//! Box and diamond operators on Gödel algebras, the relations they induce
//! on the spectrum, and the representation checks tying the two together.

use crate::algebra::{Elem, GodelAlgebra, ViolationKind, ViolationReport};
use crate::duality::{self, DownsetAlgebra, Spectrum};
use crate::error::{Error, Result};
use crate::order::{Forest, Rel};
use crate::sets::{Mask, NodeSet};

/// A Gödel algebra with validated modal operators: box preserves top and
/// binary meets, diamond preserves bottom and binary joins.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gao {
    algebra: GodelAlgebra,
    box_table: Vec<Elem>,
    dia_table: Vec<Elem>,
}

impl Gao {
    /// Axioms are checked in a fixed order (box-top, box-meet, diamond-bot,
    /// diamond-join) and the first violation is reported, binary laws in
    /// row-major argument order.
    pub fn new(algebra: GodelAlgebra, box_table: Vec<Elem>, dia_table: Vec<Elem>) -> Result<Gao> {
        let n = algebra.n();
        for (name, t) in [("box", &box_table), ("diamond", &dia_table)] {
            if t.len() != n {
                return Err(Error::MalformedTable {
                    table: if name == "box" { "box" } else { "diamond" },
                    why: format!("expected {} entries, got {}", n, t.len()),
                });
            }
            if let Some(&bad) = t.iter().find(|&&e| e >= n) {
                return Err(Error::MalformedTable {
                    table: if name == "box" { "box" } else { "diamond" },
                    why: format!("entry {bad} out of range for carrier {n}"),
                });
            }
        }
        let g = Gao { algebra, box_table, dia_table };
        let a = &g.algebra;
        if g.box_table[a.top()] != a.top() {
            return Err(Error::Algebra(ViolationReport {
                kind: ViolationKind::BoxTop,
                witness: vec![],
            }));
        }
        for x in 0..n {
            for y in 0..n {
                if g.box_table[a.meet(x, y)] != a.meet(g.box_table[x], g.box_table[y]) {
                    return Err(Error::Algebra(ViolationReport {
                        kind: ViolationKind::BoxMeet,
                        witness: vec![x, y],
                    }));
                }
            }
        }
        if g.dia_table[a.bot()] != a.bot() {
            return Err(Error::Algebra(ViolationReport {
                kind: ViolationKind::DiamondBot,
                witness: vec![],
            }));
        }
        for x in 0..n {
            for y in 0..n {
                if g.dia_table[a.join(x, y)] != a.join(g.dia_table[x], g.dia_table[y]) {
                    return Err(Error::Algebra(ViolationReport {
                        kind: ViolationKind::DiamondJoin,
                        witness: vec![x, y],
                    }));
                }
            }
        }
        Ok(g)
    }

    /// Box and diamond both the identity; valid on every Gödel algebra.
    pub fn identity(algebra: GodelAlgebra) -> Gao {
        let id: Vec<Elem> = (0..algebra.n()).collect();
        Gao::new(algebra, id.clone(), id).expect("identity operators satisfy the axioms")
    }

    pub fn algebra(&self) -> &GodelAlgebra {
        &self.algebra
    }

    pub fn box_of(&self, a: Elem) -> Elem {
        self.box_table[a]
    }

    pub fn dia_of(&self, a: Elem) -> Elem {
        self.dia_table[a]
    }

    pub fn box_table(&self) -> &[Elem] {
        &self.box_table
    }

    pub fn dia_table(&self) -> &[Elem] {
        &self.dia_table
    }
}

/// The three accessibility relations a GAO induces on its spectrum.
#[derive(Debug, Clone)]
pub struct InducedRelations {
    pub spectrum: Spectrum,
    pub rbox: Rel,
    pub rdia: Rel,
    pub ra: Rel,
}

/// Node i1 is box-related to i2 when the box-preimage of the first prime
/// filter sits inside the second; diamond-related when the first generator
/// lies below diamond of the second (the diamond image of the second filter
/// then sits inside the first, by monotonicity of diamond). The box relation
/// must come out monotone in its first argument and the diamond relation
/// antitone; both facts are asserted, not assumed.
pub fn induced_relations(g: &Gao) -> Result<InducedRelations> {
    let a = g.algebra();
    let spec = duality::spectrum(a)?;
    let k = spec.forest.n();
    let mut rbox = Rel::empty(k);
    let mut rdia = Rel::empty(k);
    for i1 in 0..k {
        let j1 = spec.generators[i1];
        for i2 in 0..k {
            let j2 = spec.generators[i2];
            if (0..a.n()).all(|e| !a.leq(j1, g.box_of(e)) || a.leq(j2, e)) {
                rbox.insert(i1, i2);
            }
            if a.leq(j1, g.dia_of(j2)) {
                rdia.insert(i1, i2);
            }
        }
    }
    let geq = spec.forest.geq_rel();
    let leq = spec.forest.leq_rel();
    if let Some(w) = geq.compose_same(&rbox).first_pair_not_in(&rbox) {
        return Err(Error::TheoremViolation {
            theorem: "lemmaMA",
            detail: format!("induced box relation is not monotone at {w:?}"),
        });
    }
    if let Some(w) = leq.compose_same(&rdia).first_pair_not_in(&rdia) {
        return Err(Error::TheoremViolation {
            theorem: "lemmaMA",
            detail: format!("induced diamond relation is not antitone at {w:?}"),
        });
    }
    let ra = rbox.inter_same(&rdia);
    Ok(InducedRelations { spectrum: spec, rbox, rdia, ra })
}

pub(crate) fn beta_raw(r: &Rel, a: NodeSet) -> NodeSet {
    let mut out = Mask::EMPTY;
    for y in 0..r.n() {
        if r.row(y).is_subset(a) {
            out = out.with(y);
        }
    }
    out
}

pub(crate) fn delta_raw(r: &Rel, a: NodeSet) -> NodeSet {
    let mut out = Mask::EMPTY;
    for y in 0..r.n() {
        if !r.row(y).inter(a).is_empty() {
            out = out.with(y);
        }
    }
    out
}

fn downset_or_witness(forest: &Forest, s: NodeSet) -> Result<NodeSet> {
    let closed = forest.poset().down_closure(s);
    match closed.minus(s).iter().next() {
        None => Ok(s),
        Some(node) => Err(Error::NotADownset { node }),
    }
}

/// Nodes whose every successor along `r` lies in the downset `a`. The result
/// is checked to be a downset again; it always is when `r` is monotone in
/// its first argument, and the error names a missing node otherwise.
pub fn beta(forest: &Forest, r: &Rel, a: NodeSet) -> Result<NodeSet> {
    if r.n() != forest.n() {
        return Err(Error::CarrierMismatch { left: forest.n(), right: r.n() });
    }
    downset_or_witness(forest, a)?;
    downset_or_witness(forest, beta_raw(r, a))
}

/// Nodes with at least one successor along `r` inside the downset `a`.
/// Checked like `beta`; antitonicity of `r` is what guarantees closure.
pub fn delta(forest: &Forest, r: &Rel, a: NodeSet) -> Result<NodeSet> {
    if r.n() != forest.n() {
        return Err(Error::CarrierMismatch { left: forest.n(), right: r.n() });
    }
    downset_or_witness(forest, a)?;
    downset_or_witness(forest, delta_raw(r, a))
}

/// Box operation table over the carrier of a downset algebra.
pub fn beta_table(dual: &DownsetAlgebra, r: &Rel) -> Result<Vec<Elem>> {
    if r.n() != dual.forest.n() {
        return Err(Error::CarrierMismatch { left: dual.forest.n(), right: r.n() });
    }
    dual.downsets.iter().map(|&d| dual.element_of(beta_raw(r, d))).collect()
}

/// Diamond operation table over the carrier of a downset algebra.
pub fn delta_table(dual: &DownsetAlgebra, r: &Rel) -> Result<Vec<Elem>> {
    if r.n() != dual.forest.n() {
        return Err(Error::CarrierMismatch { left: dual.forest.n(), right: r.n() });
    }
    dual.downsets.iter().map(|&d| dual.element_of(delta_raw(r, d))).collect()
}

/// Outcome of checking one inequality or equation scheme, with the first
/// failing instance in row-major argument order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawCheck {
    Holds,
    Fails(LawWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawWitness {
    pub args: Vec<Elem>,
    pub lhs: Elem,
    pub rhs: Elem,
}

impl LawCheck {
    pub fn holds(&self) -> bool {
        matches!(self, LawCheck::Holds)
    }

    pub fn witness(&self) -> Option<&LawWitness> {
        match self {
            LawCheck::Holds => None,
            LawCheck::Fails(w) => Some(w),
        }
    }
}

/// Subvariety membership of a GAO: the two Dunn laws, the two Fischer Servi
/// laws, Boolean-valuedness of each operator, and full Booleanness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyFlags {
    pub d1: LawCheck,
    pub d2: LawCheck,
    pub fs1: LawCheck,
    pub fs2: LawCheck,
    pub bb: LawCheck,
    pub db: LawCheck,
    pub bao: LawCheck,
}

impl VarietyFlags {
    pub fn dgao(&self) -> bool {
        self.d1.holds() && self.d2.holds()
    }

    pub fn fsgao(&self) -> bool {
        self.fs1.holds() && self.fs2.holds()
    }

    pub fn fsdgao(&self) -> bool {
        self.dgao() && self.fsgao()
    }

    pub fn wgao(&self) -> bool {
        self.dgao() && self.bb.holds() && self.db.holds()
    }
}

fn check_binary(n: usize, law: impl Fn(Elem, Elem) -> (Elem, Elem, bool)) -> LawCheck {
    for x in 0..n {
        for y in 0..n {
            let (lhs, rhs, ok) = law(x, y);
            if !ok {
                return LawCheck::Fails(LawWitness { args: vec![x, y], lhs, rhs });
            }
        }
    }
    LawCheck::Holds
}

fn check_unary(n: usize, law: impl Fn(Elem) -> (Elem, Elem, bool)) -> LawCheck {
    for x in 0..n {
        let (lhs, rhs, ok) = law(x);
        if !ok {
            return LawCheck::Fails(LawWitness { args: vec![x], lhs, rhs });
        }
    }
    LawCheck::Holds
}

pub fn classify(g: &Gao) -> VarietyFlags {
    let a = g.algebra();
    let n = a.n();
    let d1 = check_binary(n, |x, y| {
        let lhs = g.box_of(a.join(x, y));
        let rhs = a.join(g.box_of(x), g.dia_of(y));
        (lhs, rhs, a.leq(lhs, rhs))
    });
    let d2 = check_binary(n, |x, y| {
        let lhs = a.meet(g.box_of(x), g.dia_of(y));
        let rhs = g.dia_of(a.meet(x, y));
        (lhs, rhs, a.leq(lhs, rhs))
    });
    let fs1 = check_binary(n, |x, y| {
        let lhs = g.dia_of(a.imp(x, y));
        let rhs = a.imp(g.box_of(x), g.dia_of(y));
        (lhs, rhs, a.leq(lhs, rhs))
    });
    let fs2 = check_binary(n, |x, y| {
        let lhs = a.imp(g.dia_of(x), g.box_of(y));
        let rhs = g.box_of(a.imp(x, y));
        (lhs, rhs, a.leq(lhs, rhs))
    });
    let bb = check_unary(n, |x| {
        let b = g.box_of(x);
        let lhs = a.join(b, a.neg(b));
        (lhs, a.top(), lhs == a.top())
    });
    let db = check_unary(n, |x| {
        let d = g.dia_of(x);
        let lhs = a.join(d, a.neg(d));
        (lhs, a.top(), lhs == a.top())
    });
    let bao = check_unary(n, |x| {
        let lhs = a.join(x, a.neg(x));
        (lhs, a.top(), lhs == a.top())
    });
    let flags = VarietyFlags { d1, d2, fs1, fs2, bb, db, bao };
    debug_assert_eq!(flags.d2.holds(), flags.fs1.holds(), "D2 and FS1 must agree");
    flags
}

/// First Boolean element that box or diamond throws out of the Boolean
/// skeleton, if any.
pub fn boolean_image_witness(g: &Gao) -> Option<(&'static str, Elem)> {
    let b = g.algebra().boolean_elements();
    for x in b.iter() {
        if !b.contains(g.box_of(x)) {
            return Some(("box", x));
        }
        if !b.contains(g.dia_of(x)) {
            return Some(("diamond", x));
        }
    }
    None
}

pub fn boolean_image_check(g: &Gao) -> bool {
    boolean_image_witness(g).is_none()
}

/// Result of `verify_representation`: which reconstruction routes ran and
/// passed. The base route always runs; the single-relation routes run when
/// the variety flags unlock them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport {
    pub elements: usize,
    pub routes: Vec<&'static str>,
}

fn rep_err(theorem: &'static str, detail: String) -> Error {
    Error::TheoremViolation { theorem, detail }
}

fn check_route(
    tag: &'static str,
    g: &Gao,
    r_index: &[Elem],
    bt: &[Elem],
    dt: &[Elem],
) -> Result<()> {
    for a in 0..g.algebra().n() {
        if r_index[g.box_of(a)] != bt[r_index[a]] {
            return Err(rep_err(tag, format!("box mismatch at element {a}")));
        }
        if r_index[g.dia_of(a)] != dt[r_index[a]] {
            return Err(rep_err(tag, format!("diamond mismatch at element {a}")));
        }
    }
    Ok(())
}

/// Rebuild the GAO from its spectrum and check the Stone map carries box to
/// beta and diamond to delta. For a Dunn GAO the intersection relation alone
/// must support the same reconstruction; for a Fischer Servi GAO, beta over
/// the order-composed intersection relation must.
pub fn verify_representation(g: &Gao) -> Result<RepresentationReport> {
    let corr = duality::stone(g.algebra())?;
    let ind = induced_relations(g)?;
    debug_assert_eq!(corr.spectrum.generators, ind.spectrum.generators);
    let dual = &corr.dual;

    let bt = beta_table(dual, &ind.rbox)
        .map_err(|e| rep_err("thm:isoBox", format!("beta over the box relation: {e}")))?;
    let dt = delta_table(dual, &ind.rdia)
        .map_err(|e| rep_err("thm:isoBox", format!("delta over the diamond relation: {e}")))?;
    check_route("thm:isoBox", g, &corr.r_index, &bt, &dt)?;
    let mut routes = vec!["thm:isoBox"];

    let flags = classify(g);
    if flags.dgao() {
        let bt = beta_table(dual, &ind.ra)
            .map_err(|e| rep_err("isoDUNN", format!("beta over the intersection: {e}")))?;
        let dt = delta_table(dual, &ind.ra)
            .map_err(|e| rep_err("isoDUNN", format!("delta over the intersection: {e}")))?;
        check_route("isoDUNN", g, &corr.r_index, &bt, &dt)?;
        routes.push("isoDUNN");
    }
    if flags.fsgao() {
        let geq_ra = ind.spectrum.forest.geq_rel().compose_same(&ind.ra);
        let bt = beta_table(dual, &geq_ra)
            .map_err(|e| rep_err("fsRep", format!("beta over the composed relation: {e}")))?;
        let dt = delta_table(dual, &ind.ra)
            .map_err(|e| rep_err("fsRep", format!("delta over the intersection: {e}")))?;
        check_route("fsRep", g, &corr.r_index, &bt, &dt)?;
        routes.push("fsRep");
    }
    Ok(RepresentationReport { elements: g.algebra().n(), routes })
}
