//! Exhaustive search over small forests, frames and operator tables.
//!
//! Everything here is deterministic: forests come out in a fixed canonical
//! order, relations are scanned by ascending bit index, and operator tables
//! are sorted before pairing. Reports from `verify_theorem` and
//! `find_counterexample` are therefore reproducible run to run.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;
use std::time::Instant;

use crate::algebra::{Elem, GodelAlgebra};
use crate::duality::{downset_algebra, frame_iso, DownsetAlgebra};
use crate::error::{Error, Result};
use crate::frames::{
    complex_gao, complex_one_rel, dual_one_rel_roundtrip, frame_side_axiom_check,
    one_rel_flags_parts, one_rel_transform, second_transform, two_rel_flags_parts, OneRelClass,
    OneRelFlags, OneRelFrame, TwoRelFrame,
};
use crate::modal::{
    beta_raw, beta_table, boolean_image_witness, classify, delta_raw, delta_table,
    induced_relations, verify_representation, Gao, VarietyFlags,
};
use crate::order::{Forest, Node, Rel};
use crate::sets::Mask;

/// Verdict a visitor hands back: keep sweeping or stop early.
pub type Sweep = Result<ControlFlow<()>>;

/// Node budgets for the enumerators plus an optional wall-clock deadline.
/// The defaults keep every search at desk scale; callers opt into larger
/// carriers explicitly.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub forest_nodes: usize,
    pub frame_nodes: usize,
    pub gao_nodes: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { forest_nodes: 5, frame_nodes: 4, gao_nodes: 3, deadline: None }
    }
}

impl Budget {
    /// A budget whose three node caps all equal `n`.
    pub fn with_nodes(n: usize) -> Budget {
        Budget { forest_nodes: n, frame_nodes: n, gao_nodes: n, deadline: None }
    }

    fn admit(&self, requested: usize, max: usize) -> Result<()> {
        if requested > max {
            return Err(Error::Budget { requested, max });
        }
        Ok(())
    }
}

/// Amortized deadline poller; the clock is read once per 1024 ticks, plus
/// once on the first tick so an expired deadline fails fast.
struct Ticker {
    deadline: Option<Instant>,
    count: u32,
}

impl Ticker {
    fn new(budget: &Budget) -> Ticker {
        Ticker { deadline: budget.deadline, count: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        if let Some(d) = self.deadline {
            self.count = self.count.wrapping_add(1);
            if (self.count == 1 || self.count & 0x3ff == 0) && Instant::now() >= d {
                return Err(Error::Deadline);
            }
        }
        Ok(())
    }
}

/// Constraint a two-relation frame must satisfy to be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoRelConstraint {
    Forest,
    Or,
    P,
}

impl TwoRelConstraint {
    pub fn name(self) -> &'static str {
        match self {
            TwoRelConstraint::Forest => "forest",
            TwoRelConstraint::Or => "OR",
            TwoRelConstraint::P => "P",
        }
    }

    pub fn parse(s: &str) -> Result<TwoRelConstraint> {
        match s.to_ascii_lowercase().as_str() {
            "forest" => Ok(TwoRelConstraint::Forest),
            "or" => Ok(TwoRelConstraint::Or),
            "p" => Ok(TwoRelConstraint::P),
            _ => Err(Error::UnknownProperty { name: s.to_string() }),
        }
    }
}

/// Deduplication policy for frame enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameDedup {
    None,
    Tables,
    Iso,
}

impl FrameDedup {
    pub fn name(self) -> &'static str {
        match self {
            FrameDedup::None => "none",
            FrameDedup::Tables => "tables",
            FrameDedup::Iso => "frame-iso",
        }
    }

    pub fn parse(s: &str) -> Result<FrameDedup> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(FrameDedup::None),
            "tables" => Ok(FrameDedup::Tables),
            "frame-iso" | "iso" => Ok(FrameDedup::Iso),
            _ => Err(Error::UnknownProperty { name: s.to_string() }),
        }
    }
}

/// Rooted tree shape; children are kept sorted so equal shapes have equal
/// representations and multisets can be enumerated as non-increasing runs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Tree {
    size: usize,
    children: Vec<Tree>,
}

fn tree_table(n: usize) -> Vec<Vec<Tree>> {
    let mut table: Vec<Vec<Tree>> = vec![Vec::new(); n + 1];
    for k in 1..=n {
        let mut shapes: Vec<Tree> = tree_multisets(k - 1, None, &table)
            .into_iter()
            .map(|children| Tree { size: k, children })
            .collect();
        shapes.sort();
        table[k] = shapes;
    }
    table
}

/// Non-increasing sequences of trees with the given total size, each entry
/// bounded by `bound` when present.
fn tree_multisets(total: usize, bound: Option<&Tree>, table: &[Vec<Tree>]) -> Vec<Vec<Tree>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (1..=total).rev() {
        for t in &table[k] {
            if let Some(b) = bound {
                if t > b {
                    continue;
                }
            }
            for rest in tree_multisets(total - k, Some(t), table) {
                let mut seq = Vec::with_capacity(rest.len() + 1);
                seq.push(t.clone());
                seq.extend(rest);
                out.push(seq);
            }
        }
    }
    out
}

fn forest_from_trees(trees: &[Tree]) -> Result<Forest> {
    let n: usize = trees.iter().map(|t| t.size).sum();
    let mut covers = Vec::new();
    let mut next = 0;
    for t in trees {
        label_tree(t, None, &mut next, &mut covers);
    }
    Forest::from_covers(n, &covers)
}

fn label_tree(t: &Tree, parent: Option<Node>, next: &mut Node, covers: &mut Vec<(Node, Node)>) {
    let me = *next;
    *next += 1;
    if let Some(p) = parent {
        covers.push((p, me));
    }
    for c in &t.children {
        label_tree(c, Some(me), next, covers);
    }
}

/// All forests with exactly `n` nodes, one per isomorphism class, in a fixed
/// order with canonical labels (roots first in generation order, children
/// preorder).
pub fn enum_forests(n: usize, budget: &Budget) -> Result<Vec<Forest>> {
    budget.admit(n, budget.forest_nodes)?;
    if n == 0 {
        return Ok(vec![Forest::empty()]);
    }
    let table = tree_table(n);
    tree_multisets(n, None, &table).iter().map(|ts| forest_from_trees(ts)).collect()
}

/// Number of relations on an `n`-node carrier, guarded so the bit index fits
/// one word.
fn rel_space(n: usize) -> Result<u64> {
    if n * n >= 64 {
        return Err(Error::TooLarge { what: "relation enumeration", limit: 7, actual: n });
    }
    Ok(1u64 << (n * n))
}

fn rel_from_index(n: usize, idx: u64) -> Rel {
    let mut r = Rel::empty(n);
    for a in 0..n {
        for b in 0..n {
            if idx >> (a * n + b) & 1 == 1 {
                r.insert(a, b);
            }
        }
    }
    r
}

/// Box-side candidates for the constraint. Every condition on a
/// two-relation frame splits into one condition per relation, so the frames
/// are exactly the pairs from the two filtered streams.
fn box_candidates(f: &Forest, constraint: TwoRelConstraint, ticker: &mut Ticker) -> Result<Vec<Rel>> {
    let geq = f.geq_rel();
    let mut out = Vec::new();
    for idx in 0..rel_space(f.n())? {
        ticker.tick()?;
        let r = rel_from_index(f.n(), idx);
        let gr = geq.compose_same(&r);
        let keep = match constraint {
            TwoRelConstraint::Forest => gr.is_subset(&r),
            TwoRelConstraint::Or => gr.compose_same(geq).is_subset(&r),
            TwoRelConstraint::P => gr.is_subset(&r.compose_same(geq)),
        };
        if keep {
            out.push(r);
        }
    }
    Ok(out)
}

fn dia_candidates(f: &Forest, constraint: TwoRelConstraint, ticker: &mut Ticker) -> Result<Vec<Rel>> {
    let leq = f.leq_rel();
    let mut out = Vec::new();
    for idx in 0..rel_space(f.n())? {
        ticker.tick()?;
        let r = rel_from_index(f.n(), idx);
        let lr = leq.compose_same(&r);
        let keep = match constraint {
            TwoRelConstraint::Forest => lr.is_subset(&r),
            TwoRelConstraint::Or => lr.compose_same(leq).is_subset(&r),
            TwoRelConstraint::P => lr.is_subset(&r.compose_same(leq)),
        };
        if keep {
            out.push(r);
        }
    }
    Ok(out)
}

/// Visit every two-relation frame in the constraint class over all forests
/// with 1 to `n_max` nodes. The visitor can stop the stream early by
/// returning `Break`.
pub fn for_each_two_rel_frame(
    n_max: usize,
    constraint: TwoRelConstraint,
    budget: &Budget,
    visit: &mut dyn FnMut(&Forest, &Rel, &Rel) -> Sweep,
) -> Result<()> {
    budget.admit(n_max, budget.frame_nodes)?;
    let mut ticker = Ticker::new(budget);
    for n in 1..=n_max {
        for f in enum_forests(n, budget)? {
            let boxes = box_candidates(&f, constraint, &mut ticker)?;
            let dias = dia_candidates(&f, constraint, &mut ticker)?;
            for b in &boxes {
                for d in &dias {
                    ticker.tick()?;
                    if let ControlFlow::Break(()) = visit(&f, b, d)? {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Visit every relation on every forest with 1 to `n_max` nodes, restricted
/// to a frame class when one is given.
pub fn for_each_one_rel_frame(
    n_max: usize,
    class: Option<OneRelClass>,
    budget: &Budget,
    visit: &mut dyn FnMut(&Forest, &Rel, &OneRelFlags) -> Sweep,
) -> Result<()> {
    budget.admit(n_max, budget.frame_nodes)?;
    let mut ticker = Ticker::new(budget);
    for n in 1..=n_max {
        for f in enum_forests(n, budget)? {
            for idx in 0..rel_space(f.n())? {
                ticker.tick()?;
                let r = rel_from_index(f.n(), idx);
                let flags = one_rel_flags_parts(&f, &r);
                if class.is_none_or(|c| c.holds(&flags)) {
                    if let ControlFlow::Break(()) = visit(&f, &r, &flags)? {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Box tables of the downset algebra, one per box relation with up-closed
/// columns and down-closed rows. Such relations are in bijection with the
/// meet-preserving top-fixing operators, so the sorted table list has no
/// duplicates to begin with; sorting still pins the order.
fn stable_box_tables(f: &Forest, dual: &DownsetAlgebra, ticker: &mut Ticker) -> Result<Vec<Vec<Elem>>> {
    let geq = f.geq_rel();
    let mut out = Vec::new();
    for idx in 0..rel_space(f.n())? {
        ticker.tick()?;
        let r = rel_from_index(f.n(), idx);
        if geq.compose_same(&r).is_subset(&r) && r.compose_same(geq) == r {
            out.push(beta_table(dual, &r)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn stable_dia_tables(f: &Forest, dual: &DownsetAlgebra, ticker: &mut Ticker) -> Result<Vec<Vec<Elem>>> {
    let leq = f.leq_rel();
    let mut out = Vec::new();
    for idx in 0..rel_space(f.n())? {
        ticker.tick()?;
        let r = rel_from_index(f.n(), idx);
        if leq.compose_same(&r).is_subset(&r) && r.compose_same(leq) == r {
            out.push(delta_table(dual, &r)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Element permutations of the downset algebra induced by the forest
/// automorphisms.
fn element_perms(f: &Forest, dual: &DownsetAlgebra) -> Result<Vec<Vec<Elem>>> {
    let mut out = Vec::new();
    for sigma in f.automorphisms() {
        let mut pi = vec![0; dual.downsets.len()];
        for (e, m) in dual.downsets.iter().enumerate() {
            let image = Mask::from_slice(&m.iter().map(|x| sigma[x]).collect::<Vec<_>>());
            pi[e] = dual.element_of(image)?;
        }
        out.push(pi);
    }
    Ok(out)
}

fn apply_perm(t: &[Elem], pi: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0; t.len()];
    for (e, &v) in t.iter().enumerate() {
        out[pi[e]] = pi[v];
    }
    out
}

/// Keep only the lexicographically least table pair in each automorphism
/// orbit.
fn canonical_pair(bt: &[Elem], dt: &[Elem], perms: &[Vec<Elem>]) -> bool {
    for pi in perms {
        let tb = apply_perm(bt, pi);
        if tb.as_slice() > bt {
            continue;
        }
        let td = apply_perm(dt, pi);
        if (tb.as_slice(), td.as_slice()) < (bt, dt) {
            return false;
        }
    }
    true
}

/// Visit one representative per isomorphism class of GAO carried by a
/// downset algebra over forests with 1 to `n_max` nodes. Distinct forests
/// give non-isomorphic algebras, so deduplication only needs the table
/// orbits under each forest's own automorphisms.
pub fn for_each_gao(
    n_max: usize,
    budget: &Budget,
    visit: &mut dyn FnMut(&Forest, &DownsetAlgebra, &Gao) -> Sweep,
) -> Result<()> {
    budget.admit(n_max, budget.gao_nodes)?;
    let mut ticker = Ticker::new(budget);
    for n in 1..=n_max {
        for f in enum_forests(n, budget)? {
            let dual = downset_algebra(&f)?;
            let boxes = stable_box_tables(&f, &dual, &mut ticker)?;
            let dias = stable_dia_tables(&f, &dual, &mut ticker)?;
            let perms = element_perms(&f, &dual)?;
            for bt in &boxes {
                for dt in &dias {
                    ticker.tick()?;
                    if !canonical_pair(bt, dt, &perms) {
                        continue;
                    }
                    let g = Gao::new(dual.algebra.clone(), bt.clone(), dt.clone())?;
                    if let ControlFlow::Break(()) = visit(&f, &dual, &g)? {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Materialized frame enumeration over a single forest.
pub fn enum_two_rel_frames(
    f: &Forest,
    constraint: TwoRelConstraint,
    dedup: FrameDedup,
    budget: &Budget,
) -> Result<Vec<TwoRelFrame>> {
    budget.admit(f.n(), budget.frame_nodes)?;
    let mut ticker = Ticker::new(budget);
    let boxes = box_candidates(f, constraint, &mut ticker)?;
    let dias = dia_candidates(f, constraint, &mut ticker)?;
    let downsets = f.downsets();
    let mut kept: Vec<TwoRelFrame> = Vec::new();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for b in &boxes {
        for d in &dias {
            ticker.tick()?;
            match dedup {
                FrameDedup::None => {
                    kept.push(TwoRelFrame::new(f.clone(), b.clone(), d.clone())?);
                }
                FrameDedup::Tables => {
                    if seen.insert(operator_key(f, &downsets, constraint, b, d)) {
                        kept.push(TwoRelFrame::new(f.clone(), b.clone(), d.clone())?);
                    }
                }
                FrameDedup::Iso => {
                    let bucket = buckets.entry(iso_invariant(f.n(), b, d)).or_default();
                    let fresh = bucket.iter().all(|&i| {
                        frame_iso(
                            f,
                            &[b, d],
                            f,
                            &[kept[i].rbox(), kept[i].rdia()],
                        )
                        .is_none()
                    });
                    if fresh {
                        kept.push(TwoRelFrame::new(f.clone(), b.clone(), d.clone())?);
                        bucket.push(kept.len() - 1);
                    }
                }
            }
        }
    }
    Ok(kept)
}

/// Mask tables of the operators a frame denotes on downsets. P-frames act
/// through the second transform; forest and OR frames act directly.
fn operator_key(
    f: &Forest,
    downsets: &[Mask],
    constraint: TwoRelConstraint,
    b: &Rel,
    d: &Rel,
) -> Vec<u64> {
    let (kb, kd) = match constraint {
        TwoRelConstraint::P => {
            (f.geq_rel().compose_same(b), f.leq_rel().compose_same(d))
        }
        _ => (b.clone(), d.clone()),
    };
    let mut key = Vec::with_capacity(2 * downsets.len());
    for &m in downsets {
        key.push(beta_raw(&kb, m).bits());
    }
    for &m in downsets {
        key.push(delta_raw(&kd, m).bits());
    }
    key
}

/// Cheap isomorphism invariant used to bucket frames before the exact
/// search.
fn iso_invariant(n: usize, b: &Rel, d: &Rel) -> Vec<usize> {
    let mut inv = vec![b.pair_count(), d.pair_count()];
    for r in [b, d] {
        let mut rows: Vec<usize> = (0..n).map(|a| r.row(a).card()).collect();
        rows.sort_unstable();
        inv.extend(rows);
        let mut cols: Vec<usize> = (0..n).map(|a| r.column(a).card()).collect();
        cols.sort_unstable();
        inv.extend(cols);
    }
    inv
}

/// Materialized one-relation frame enumeration over a single forest; `None`
/// enumerates every relation.
pub fn enum_one_rel_frames(
    f: &Forest,
    class: Option<OneRelClass>,
    budget: &Budget,
) -> Result<Vec<OneRelFrame>> {
    budget.admit(f.n(), budget.frame_nodes)?;
    let mut ticker = Ticker::new(budget);
    let mut out = Vec::new();
    for idx in 0..rel_space(f.n())? {
        ticker.tick()?;
        let r = rel_from_index(f.n(), idx);
        let flags = one_rel_flags_parts(f, &r);
        if class.is_none_or(|c| c.holds(&flags)) {
            out.push(OneRelFrame::new(f.clone(), r)?);
        }
    }
    Ok(out)
}

/// Materialized GAO enumeration up to `n_max` forest nodes.
pub fn enum_gaos(n_max: usize, budget: &Budget) -> Result<Vec<(Forest, Gao)>> {
    let mut out = Vec::new();
    for_each_gao(n_max, budget, &mut |f, _, g| {
        out.push((f.clone(), g.clone()));
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(out)
}

fn fmt_forest(f: &Forest) -> String {
    format!("forest on {} nodes with covers {:?}", f.n(), f.covers())
}

fn fmt_gao(f: &Forest, g: &Gao) -> String {
    format!("{} with box {:?} and diamond {:?}", fmt_forest(f), g.box_table(), g.dia_table())
}

fn fmt_frame2(f: &Forest, b: &Rel, d: &Rel) -> String {
    format!(
        "{} with box relation {:?} and diamond relation {:?}",
        fmt_forest(f),
        b.pairs(),
        d.pairs()
    )
}

fn fmt_frame1(f: &Forest, r: &Rel) -> String {
    format!("{} with relation {:?}", fmt_forest(f), r.pairs())
}

/// Outcome of checking one registered statement over every instance within
/// the size bound. A pass means no instance violated it; `instances` says
/// how many were checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub instances: usize,
    pub counterexample: Option<String>,
}

impl TheoremReport {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn gao_theorem(
    tag: &'static str,
    n_max: usize,
    budget: &Budget,
    mut relevant: impl FnMut(&VarietyFlags) -> bool,
    mut check: impl FnMut(&Forest, &DownsetAlgebra, &Gao, &VarietyFlags) -> Option<String>,
) -> Result<TheoremReport> {
    let mut instances = 0;
    let mut cex = None;
    for_each_gao(n_max, budget, &mut |f, dual, g| {
        let flags = classify(g);
        if !relevant(&flags) {
            return Ok(ControlFlow::Continue(()));
        }
        instances += 1;
        if let Some(msg) = check(f, dual, g, &flags) {
            cex = Some(msg);
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(TheoremReport { theorem: tag, instances, counterexample: cex })
}

fn frame_theorem(
    tag: &'static str,
    n_max: usize,
    budget: &Budget,
    constraint: TwoRelConstraint,
    mut check: impl FnMut(&Forest, &Rel, &Rel) -> Option<String>,
) -> Result<TheoremReport> {
    let mut instances = 0;
    let mut cex = None;
    for_each_two_rel_frame(n_max, constraint, budget, &mut |f, b, d| {
        instances += 1;
        if let Some(msg) = check(f, b, d) {
            cex = Some(msg);
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(TheoremReport { theorem: tag, instances, counterexample: cex })
}

fn one_rel_theorem(
    tag: &'static str,
    n_max: usize,
    budget: &Budget,
    class: Option<OneRelClass>,
    mut check: impl FnMut(&Forest, &Rel, &OneRelFlags) -> Option<String>,
) -> Result<TheoremReport> {
    let mut instances = 0;
    let mut cex = None;
    for_each_one_rel_frame(n_max, class, budget, &mut |f, r, flags| {
        instances += 1;
        if let Some(msg) = check(f, r, flags) {
            cex = Some(msg);
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(TheoremReport { theorem: tag, instances, counterexample: cex })
}

fn run_iso_box(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    gao_theorem("thm:isoBox", n_max, budget, |_| true, |f, _, g, _| {
        verify_representation(g).err().map(|e| format!("{}: {e}", fmt_gao(f, g)))
    })
}

fn run_iso_dunn(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    gao_theorem("isoDUNN", n_max, budget, VarietyFlags::dgao, |f, _, g, _| {
        match verify_representation(g) {
            Ok(rep) if rep.routes.contains(&"isoDUNN") => None,
            Ok(_) => Some(format!("{}: the shared-relation route did not run", fmt_gao(f, g))),
            Err(e) => Some(format!("{}: {e}", fmt_gao(f, g))),
        }
    })
}

fn run_fs_rep(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    gao_theorem("fsRep", n_max, budget, VarietyFlags::fsgao, |f, _, g, _| {
        match verify_representation(g) {
            Ok(rep) if rep.routes.contains(&"fsRep") => None,
            Ok(_) => Some(format!("{}: the FS route did not run", fmt_gao(f, g))),
            Err(e) => Some(format!("{}: {e}", fmt_gao(f, g))),
        }
    })
}

fn run_cjteo(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    gao_theorem("CJteo", n_max, budget, |_| true, |f, _, g, flags| {
        let ind = match induced_relations(g) {
            Ok(ind) => ind,
            Err(e) => return Some(format!("{}: {e}", fmt_gao(f, g))),
        };
        let sleq = ind.spectrum.forest.leq_rel();
        let sgeq = ind.spectrum.forest.geq_rel();
        let sides = [
            ("(D1)", flags.d1.holds(), ind.rbox == ind.ra.compose_same(sgeq)),
            ("(D2)", flags.d2.holds(), ind.rdia == ind.ra.compose_same(sleq)),
            ("(FS2)", flags.fs2.holds(), ind.rbox == sgeq.compose_same(&ind.ra)),
        ];
        for (name, algebra, relation) in sides {
            if algebra != relation {
                return Some(format!(
                    "{}: {name} is {algebra} on the algebra but its relation identity is {relation}",
                    fmt_gao(f, g)
                ));
            }
        }
        None
    })
}

fn run_keyd1(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    frame_theorem("keyD1", n_max, budget, TwoRelConstraint::Forest, |f, b, d| {
        let fr = match TwoRelFrame::new(f.clone(), b.clone(), d.clone()) {
            Ok(fr) => fr,
            Err(e) => return Some(e.to_string()),
        };
        frame_side_axiom_check(&fr).err().map(|e| format!("{}: {e}", fmt_frame2(f, b, d)))
    })
}

fn run_d2_fs2(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    gao_theorem("prop:D2-FS2", n_max, budget, |_| true, |f, _, g, flags| {
        if flags.d2.holds() != flags.fs1.holds() {
            return Some(format!(
                "{}: (D2) is {} but (FS1) is {}",
                fmt_gao(f, g),
                flags.d2.holds(),
                flags.fs1.holds()
            ));
        }
        None
    })
}

fn run_diamond(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    frame_theorem("lemma:diamond", n_max, budget, TwoRelConstraint::Forest, |f, b, d| {
        let bp = b.compose_same(f.geq_rel());
        let dp = d.compose_same(f.leq_rel());
        for m in f.downsets() {
            if beta_raw(&bp, m) != beta_raw(b, m) {
                return Some(format!("{}: box moves on downset {m}", fmt_frame2(f, b, d)));
            }
            if delta_raw(&dp, m) != delta_raw(d, m) {
                return Some(format!("{}: diamond moves on downset {m}", fmt_frame2(f, b, d)));
            }
        }
        None
    })
}

fn run_basic(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    gao_theorem("prop:basic", n_max, budget, |_| true, |f, _, g, _| {
        let alg = g.algebra();
        for (_, fset) in alg.prime_filters() {
            let mut boxpre = Mask::EMPTY;
            let mut diapre = Mask::EMPTY;
            for e in 0..alg.n() {
                if fset.contains(g.box_of(e)) {
                    boxpre = boxpre.with(e);
                }
                if fset.contains(g.dia_of(e)) {
                    diapre = diapre.with(e);
                }
            }
            if !alg.is_filter(boxpre) {
                return Some(format!(
                    "{}: box preimage {boxpre} of prime filter {fset} is not a filter",
                    fmt_gao(f, g)
                ));
            }
            if !diapre.is_empty() && !alg.is_cofilter(diapre) {
                return Some(format!(
                    "{}: diamond preimage {diapre} of prime filter {fset} is neither empty nor a co-filter",
                    fmt_gao(f, g)
                ));
            }
        }
        None
    })
}

fn run_fsp1(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    one_rel_theorem("FSP1", n_max, budget, Some(OneRelClass::Fs), |f, r, _| {
        let fr = match OneRelFrame::new(f.clone(), r.clone()) {
            Ok(fr) => fr,
            Err(e) => return Some(e.to_string()),
        };
        dual_one_rel_roundtrip(&fr, OneRelClass::Fs)
            .err()
            .map(|e| format!("{}: {e}", fmt_frame1(f, r)))
    })
}

fn run_fsp2(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    one_rel_theorem("FSP2", n_max, budget, Some(OneRelClass::Fs), |f, r, _| {
        let fr = match OneRelFrame::new(f.clone(), r.clone()) {
            Ok(fr) => fr,
            Err(e) => return Some(e.to_string()),
        };
        let out = match one_rel_transform(&fr, OneRelClass::Fs) {
            Ok(out) => out,
            Err(e) => return Some(format!("{}: {e}", fmt_frame1(f, r))),
        };
        let geq = f.geq_rel();
        let gr = geq.compose_same(r);
        let grp = geq.compose_same(out.r());
        for m in f.downsets() {
            if beta_raw(&grp, m) != beta_raw(&gr, m) {
                return Some(format!("{}: box moves on downset {m}", fmt_frame1(f, r)));
            }
            if delta_raw(out.r(), m) != delta_raw(r, m) {
                return Some(format!("{}: diamond moves on downset {m}", fmt_frame1(f, r)));
            }
        }
        None
    })
}

fn run_cjp1(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    one_rel_theorem("CJP1", n_max, budget, Some(OneRelClass::Cj), |f, r, _| {
        let fr = match OneRelFrame::new(f.clone(), r.clone()) {
            Ok(fr) => fr,
            Err(e) => return Some(e.to_string()),
        };
        dual_one_rel_roundtrip(&fr, OneRelClass::Cj)
            .err()
            .map(|e| format!("{}: {e}", fmt_frame1(f, r)))
    })
}

fn run_cjp2(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    one_rel_theorem("CJP2", n_max, budget, Some(OneRelClass::Cj), |f, r, _| {
        let fr = match OneRelFrame::new(f.clone(), r.clone()) {
            Ok(fr) => fr,
            Err(e) => return Some(e.to_string()),
        };
        let out = match one_rel_transform(&fr, OneRelClass::Cj) {
            Ok(out) => out,
            Err(e) => return Some(format!("{}: {e}", fmt_frame1(f, r))),
        };
        for m in f.downsets() {
            if beta_raw(out.r(), m) != beta_raw(r, m) {
                return Some(format!("{}: box moves on downset {m}", fmt_frame1(f, r)));
            }
            if delta_raw(out.r(), m) != delta_raw(r, m) {
                return Some(format!("{}: diamond moves on downset {m}", fmt_frame1(f, r)));
            }
        }
        None
    })
}

fn run_fsd(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    one_rel_theorem("thm:FSD", n_max, budget, Some(OneRelClass::Fsd), |f, r, _| {
        let fr = match OneRelFrame::new(f.clone(), r.clone()) {
            Ok(fr) => fr,
            Err(e) => return Some(e.to_string()),
        };
        if let Err(e) = dual_one_rel_roundtrip(&fr, OneRelClass::Fsd) {
            return Some(format!("{}: {e}", fmt_frame1(f, r)));
        }
        let out = match one_rel_transform(&fr, OneRelClass::Fsd) {
            Ok(out) => out,
            Err(e) => return Some(format!("{}: {e}", fmt_frame1(f, r))),
        };
        let geq = f.geq_rel();
        let gr = geq.compose_same(r);
        let grp = geq.compose_same(out.r());
        for m in f.downsets() {
            let lifted = beta_raw(&grp, m);
            if lifted != beta_raw(&gr, m) || lifted != beta_raw(r, m) {
                return Some(format!("{}: box moves on downset {m}", fmt_frame1(f, r)));
            }
            if delta_raw(out.r(), m) != delta_raw(r, m) {
                return Some(format!("{}: diamond moves on downset {m}", fmt_frame1(f, r)));
            }
        }
        None
    })
}

fn run_w(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    let mut instances = 0;
    let mut cex: Option<String> = None;
    for_each_one_rel_frame(n_max, Some(OneRelClass::W), budget, &mut |f, r, _| {
        instances += 1;
        let fr = OneRelFrame::new(f.clone(), r.clone())?;
        match complex_one_rel(&fr, OneRelClass::W) {
            Ok((dual, g)) => {
                let bools = dual.algebra.boolean_elements();
                for e in 0..dual.algebra.n() {
                    if !bools.contains(g.box_of(e)) || !bools.contains(g.dia_of(e)) {
                        cex = Some(format!(
                            "{}: complex operators leave the Boolean skeleton at element {e}",
                            fmt_frame1(f, r)
                        ));
                        return Ok(ControlFlow::Break(()));
                    }
                }
                Ok(ControlFlow::Continue(()))
            }
            Err(e) => {
                cex = Some(format!("{}: {e}", fmt_frame1(f, r)));
                Ok(ControlFlow::Break(()))
            }
        }
    })?;
    if cex.is_none() {
        for_each_gao(n_max, budget, &mut |f, _, g| {
            if !classify(g).wgao() {
                return Ok(ControlFlow::Continue(()));
            }
            instances += 1;
            let ind = match induced_relations(g) {
                Ok(ind) => ind,
                Err(e) => {
                    cex = Some(format!("{}: {e}", fmt_gao(f, g)));
                    return Ok(ControlFlow::Break(()));
                }
            };
            if !one_rel_flags_parts(&ind.spectrum.forest, &ind.ra).w() {
                cex = Some(format!("{}: the induced shared relation is not W", fmt_gao(f, g)));
                return Ok(ControlFlow::Break(()));
            }
            Ok(ControlFlow::Continue(()))
        })?;
    }
    Ok(TheoremReport { theorem: "thm:W", instances, counterexample: cex })
}

fn run_lemma_ma(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    gao_theorem("lemmaMA", n_max, budget, |_| true, |f, _, g, _| {
        let ind = match induced_relations(g) {
            Ok(ind) => ind,
            Err(e) => return Some(format!("{}: {e}", fmt_gao(f, g))),
        };
        let tf = two_rel_flags_parts(&ind.spectrum.forest, &ind.rbox, &ind.rdia);
        if let Some(w) = tf.m.witness() {
            return Some(format!("{}: induced box relation breaks (M) at {w:?}", fmt_gao(f, g)));
        }
        if let Some(w) = tf.a.witness() {
            return Some(format!(
                "{}: induced diamond relation breaks (A) at {w:?}",
                fmt_gao(f, g)
            ));
        }
        None
    })
}

fn run_rsecond(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    frame_theorem("prop:Rsecond", n_max, budget, TwoRelConstraint::P, |f, b, d| {
        let fr = match TwoRelFrame::new(f.clone(), b.clone(), d.clone()) {
            Ok(fr) => fr,
            Err(e) => return Some(e.to_string()),
        };
        let out = match second_transform(&fr) {
            Ok(out) => out,
            Err(e) => return Some(format!("{}: {e}", fmt_frame2(f, b, d))),
        };
        for m in f.downsets() {
            if beta_raw(out.rbox(), m) != beta_raw(b, m) {
                return Some(format!("{}: box moves on downset {m}", fmt_frame2(f, b, d)));
            }
            if delta_raw(out.rdia(), m) != delta_raw(d, m) {
                return Some(format!("{}: diamond moves on downset {m}", fmt_frame2(f, b, d)));
            }
        }
        None
    })
}

fn run_newxx(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    one_rel_theorem("newxx", n_max, budget, None, |f, r, flags| {
        let leq = f.leq_rel();
        let geq = f.geq_rel();
        let rl = r.compose_same(leq);
        let gr = geq.compose_same(r);
        let fs1_identity = leq.compose_same(&rl) == rl;
        let fs2_identity = gr.compose_same(geq) == gr;
        if flags.fs1f.holds() != fs1_identity {
            return Some(format!(
                "{}: (FS1) is {} but its composition identity is {}",
                fmt_frame1(f, r),
                flags.fs1f.holds(),
                fs1_identity
            ));
        }
        if flags.fs2f.holds() != fs2_identity {
            return Some(format!(
                "{}: (FS2) is {} but its composition identity is {}",
                fmt_frame1(f, r),
                flags.fs2f.holds(),
                fs2_identity
            ));
        }
        None
    })
}

fn run_cjcond(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    one_rel_theorem("CJcond", n_max, budget, None, |f, r, flags| {
        let leq = f.leq_rel();
        let geq = f.geq_rel();
        let rl = r.compose_same(leq);
        let rg = r.compose_same(geq);
        let cj1_identity = leq.compose_same(&rl) == rl;
        let cj2_identity = geq.compose_same(&rg) == rg;
        if flags.cj1.holds() != cj1_identity {
            return Some(format!(
                "{}: (CJ1) is {} but its composition identity is {}",
                fmt_frame1(f, r),
                flags.cj1.holds(),
                cj1_identity
            ));
        }
        if flags.cj2.holds() != cj2_identity {
            return Some(format!(
                "{}: (CJ2) is {} but its composition identity is {}",
                fmt_frame1(f, r),
                flags.cj2.holds(),
                cj2_identity
            ));
        }
        None
    })
}

fn run_prop_final(_n_max: usize, _budget: &Budget) -> Result<TheoremReport> {
    let mut cex: Option<String> = None;
    let tree = Forest::from_covers(4, &[(0, 1), (1, 2), (1, 3)])?;

    // (i) a CJ complex that is Dunn but not W, with box fixing the downset
    // {0,1}.
    let cj = OneRelFrame::new(tree.clone(), Rel::from_pairs(4, &[(0, 1), (1, 1), (2, 3), (3, 2)])?)?;
    match complex_one_rel(&cj, OneRelClass::Cj) {
        Ok((_, g)) => {
            let fl = classify(&g);
            if !(fl.dgao() && !fl.wgao() && g.box_of(2) == 2) {
                cex = Some("part (i): the CJ witness complex misclassifies".into());
            }
        }
        Err(e) => cex = Some(format!("part (i): {e}")),
    }

    // (ii) Boolean algebras with classical operator pairs land in the
    // intersection of the W and FSD classes: witnessed by the identity pair
    // and the atom-swap pair on the four-element Boolean algebra.
    if cex.is_none() {
        let square = downset_algebra(&Forest::from_covers(2, &[])?)?;
        let swap = Gao::new(square.algebra.clone(), vec![0, 2, 1, 3], vec![0, 2, 1, 3])?;
        for (name, g) in [("identity", Gao::identity(square.algebra)), ("atom-swap", swap)] {
            let fl = classify(&g);
            if !(fl.bao.holds() && fl.wgao() && fl.fsdgao()) {
                cex = Some(format!("part (ii): the Boolean {name} operators misclassify"));
                break;
            }
        }
    }

    // (iii) an FSD complex that is not W, with box collapsing {0,1} to {0}.
    if cex.is_none() {
        let pairs: &[(Node, Node)] = &[
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 0),
            (2, 1),
            (2, 2),
            (3, 0),
            (3, 1),
            (3, 2),
        ];
        let fsd = OneRelFrame::new(tree, Rel::from_pairs(4, pairs)?)?;
        match complex_one_rel(&fsd, OneRelClass::Fsd) {
            Ok((_, g)) => {
                let fl = classify(&g);
                if !(fl.fsdgao() && !fl.wgao() && g.box_of(2) == 1) {
                    cex = Some("part (iii): the FSD witness complex misclassifies".into());
                }
            }
            Err(e) => cex = Some(format!("part (iii): {e}")),
        }
    }

    // (iv) a W GAO outside FS.
    if cex.is_none() {
        let dual = downset_algebra(&Forest::from_covers(3, &[(0, 1)])?)?;
        let g = Gao::new(dual.algebra.clone(), vec![3, 3, 3, 3, 3, 5], vec![0, 0, 2, 2, 2, 2])?;
        let fl = classify(&g);
        if !(fl.wgao() && !fl.fsgao()) {
            cex = Some("part (iv): the W-not-FS witness misclassifies".into());
        }
    }

    // (v) a GAO that is W and FS but not Boolean-carried.
    if cex.is_none() {
        let g = Gao::new(GodelAlgebra::chain(3), vec![0, 0, 2], vec![0, 2, 2])?;
        let fl = classify(&g);
        if !(fl.wgao() && fl.fsgao() && !fl.bao.holds()) {
            cex = Some("part (v): the chain witness misclassifies".into());
        }
    }

    Ok(TheoremReport { theorem: "propFinal", instances: 5, counterexample: cex })
}

fn run_bool(n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    gao_theorem("prop:bool", n_max, budget, VarietyFlags::dgao, |f, _, g, _| {
        boolean_image_witness(g).map(|(op, x)| {
            format!("{}: {op} of Boolean element {x} leaves the Boolean skeleton", fmt_gao(f, g))
        })
    })
}

struct TheoremEntry {
    tag: &'static str,
    aliases: &'static [&'static str],
    about: &'static str,
    run: fn(usize, &Budget) -> Result<TheoremReport>,
}

static THEOREMS: &[TheoremEntry] = &[
    TheoremEntry {
        tag: "thm:isoBox",
        aliases: &["isoBox"],
        about: "every GAO is isomorphic to the complex algebra of its induced frame",
        run: run_iso_box,
    },
    TheoremEntry {
        tag: "isoDUNN",
        aliases: &["thm:isoDUNN"],
        about: "Dunn GAOs are reconstructed from the shared relation alone",
        run: run_iso_dunn,
    },
    TheoremEntry {
        tag: "fsRep",
        aliases: &["thm:fsRep"],
        about: "FS GAOs are reconstructed with box over the lower extension of the shared relation",
        run: run_fs_rep,
    },
    TheoremEntry {
        tag: "CJteo",
        aliases: &["thm:CJteo"],
        about: "(D1), (D2) and (FS2) match composition identities of the induced relations",
        run: run_cjteo,
    },
    TheoremEntry {
        tag: "keyD1",
        aliases: &["thm:keyD1"],
        about: "algebra axioms transfer to identities of the primed induced relations",
        run: run_keyd1,
    },
    TheoremEntry {
        tag: "prop:D2-FS2",
        aliases: &["D2-FS2"],
        about: "(D2) and (FS1) hold together",
        run: run_d2_fs2,
    },
    TheoremEntry {
        tag: "lemma:diamond",
        aliases: &["diamond"],
        about: "the prime transform keeps box and diamond pointwise",
        run: run_diamond,
    },
    TheoremEntry {
        tag: "prop:basic",
        aliases: &["basic"],
        about: "box preimages of prime filters are filters, diamond preimages are co-filters or empty",
        run: run_basic,
    },
    TheoremEntry {
        tag: "FSP1",
        aliases: &["prop:FSP1"],
        about: "FS frames are isomorphic to the induced frames of their complex algebras",
        run: run_fsp1,
    },
    TheoremEntry {
        tag: "FSP2",
        aliases: &["prop:FSP2"],
        about: "the FS transform stays FS and keeps both operators",
        run: run_fsp2,
    },
    TheoremEntry {
        tag: "CJP1",
        aliases: &["prop:CJP1"],
        about: "CJ frames transform onto the induced frames of their complex algebras",
        run: run_cjp1,
    },
    TheoremEntry {
        tag: "CJP2",
        aliases: &["prop:CJP2"],
        about: "the CJ transform extends the relation, keeps both operators and yields a basic frame",
        run: run_cjp2,
    },
    TheoremEntry {
        tag: "thm:FSD",
        aliases: &["FSD"],
        about: "the FS and CJ transforms agree on FSD frames, which are dual to their complexes",
        run: run_fsd,
    },
    TheoremEntry {
        tag: "thm:W",
        aliases: &["W"],
        about: "complexes of W frames are W GAOs and W GAOs induce W frames",
        run: run_w,
    },
    TheoremEntry {
        tag: "lemmaMA",
        aliases: &["lemma:MA"],
        about: "induced box relations satisfy (M) and induced diamond relations satisfy (A)",
        run: run_lemma_ma,
    },
    TheoremEntry {
        tag: "prop:Rsecond",
        aliases: &["Rsecond"],
        about: "the second transform of a P-frame is a forest frame with the same operators",
        run: run_rsecond,
    },
    TheoremEntry {
        tag: "newxx",
        aliases: &["lemma:newxx"],
        about: "(FS1) and (FS2) for an arbitrary relation reduce to composition identities",
        run: run_newxx,
    },
    TheoremEntry {
        tag: "CJcond",
        aliases: &["lemma:CJcond"],
        about: "(CJ1) and (CJ2) for an arbitrary relation reduce to composition identities",
        run: run_cjcond,
    },
    TheoremEntry {
        tag: "propFinal",
        aliases: &["prop:propFinal"],
        about: "the inclusions between the Boolean-carried, W, FSD, Dunn and FS classes are proper",
        run: run_prop_final,
    },
    TheoremEntry {
        tag: "prop:bool",
        aliases: &["bool"],
        about: "box and diamond preserve Boolean elements in every Dunn GAO",
        run: run_bool,
    },
];

/// Canonical tags with one-line summaries, in registry order.
pub fn theorem_catalog() -> Vec<(&'static str, &'static str)> {
    THEOREMS.iter().map(|e| (e.tag, e.about)).collect()
}

/// Check one registered statement against every instance with at most
/// `n_max` forest nodes. Tags match the canonical name or an alias, exactly
/// first and then case-insensitively.
pub fn verify_theorem(tag: &str, n_max: usize, budget: &Budget) -> Result<TheoremReport> {
    for e in THEOREMS {
        if e.tag == tag || e.aliases.contains(&tag) {
            return (e.run)(n_max, budget);
        }
    }
    for e in THEOREMS {
        if e.tag.eq_ignore_ascii_case(tag) || e.aliases.iter().any(|a| a.eq_ignore_ascii_case(tag)) {
            return (e.run)(n_max, budget);
        }
    }
    Err(Error::UnknownTheorem { tag: tag.to_string() })
}

/// Outcome of a counterexample hunt: how many instances were scanned and the
/// first witness falsifying the property, if one exists within the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntReport {
    pub property: &'static str,
    pub searched: usize,
    pub witness: Option<String>,
}

impl HuntReport {
    pub fn exhausted(&self) -> bool {
        self.witness.is_none()
    }
}

fn gao_hunt(
    name: &'static str,
    n_max: usize,
    budget: &Budget,
    mut refutes: impl FnMut(&VarietyFlags) -> bool,
) -> Result<HuntReport> {
    let mut searched = 0;
    let mut witness = None;
    for_each_gao(n_max, budget, &mut |f, _, g| {
        searched += 1;
        if refutes(&classify(g)) {
            witness = Some(fmt_gao(f, g));
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(HuntReport { property: name, searched, witness })
}

fn hunt_dgao_fsgao(n_max: usize, budget: &Budget) -> Result<HuntReport> {
    gao_hunt("dgao-implies-fsgao", n_max, budget, |fl| fl.dgao() && !fl.fsgao())
}

fn hunt_fsgao_dgao(n_max: usize, budget: &Budget) -> Result<HuntReport> {
    gao_hunt("fsgao-implies-dgao", n_max, budget, |fl| fl.fsgao() && !fl.dgao())
}

fn hunt_fsdgao_wgao(n_max: usize, budget: &Budget) -> Result<HuntReport> {
    gao_hunt("fsdgao-implies-wgao", n_max, budget, |fl| fl.fsdgao() && !fl.wgao())
}

fn hunt_forest_or(n_max: usize, budget: &Budget) -> Result<HuntReport> {
    let mut searched = 0;
    let mut witness = None;
    for_each_two_rel_frame(n_max, TwoRelConstraint::Forest, budget, &mut |f, b, d| {
        searched += 1;
        if !two_rel_flags_parts(f, b, d).or_frame() {
            witness = Some(fmt_frame2(f, b, d));
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(HuntReport { property: "forest-implies-or", searched, witness })
}

fn hunt_p_forest(n_max: usize, budget: &Budget) -> Result<HuntReport> {
    let mut searched = 0;
    let mut witness = None;
    for_each_two_rel_frame(n_max, TwoRelConstraint::P, budget, &mut |f, b, d| {
        searched += 1;
        if !two_rel_flags_parts(f, b, d).forest_frame() {
            witness = Some(fmt_frame2(f, b, d));
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(HuntReport { property: "p-implies-forest", searched, witness })
}

fn hunt_complex_axioms(n_max: usize, budget: &Budget) -> Result<HuntReport> {
    let mut searched = 0;
    let mut witness = None;
    for_each_two_rel_frame(n_max, TwoRelConstraint::Forest, budget, &mut |f, b, d| {
        searched += 1;
        let fr = TwoRelFrame::new(f.clone(), b.clone(), d.clone())?;
        if let Err(e) = complex_gao(&fr) {
            witness = Some(format!("{}: {e}", fmt_frame2(f, b, d)));
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(HuntReport { property: "gao-axioms-complex", searched, witness })
}

struct PropertyEntry {
    name: &'static str,
    about: &'static str,
    run: fn(usize, &Budget) -> Result<HuntReport>,
}

static PROPERTIES: &[PropertyEntry] = &[
    PropertyEntry {
        name: "dgao-implies-fsgao",
        about: "every Dunn GAO satisfies the FS axioms",
        run: hunt_dgao_fsgao,
    },
    PropertyEntry {
        name: "fsgao-implies-dgao",
        about: "every FS GAO satisfies the Dunn axioms",
        run: hunt_fsgao_dgao,
    },
    PropertyEntry {
        name: "forest-implies-or",
        about: "every forest frame satisfies (OR1) and (OR2)",
        run: hunt_forest_or,
    },
    PropertyEntry {
        name: "p-implies-forest",
        about: "every P-frame satisfies (M) and (A)",
        run: hunt_p_forest,
    },
    PropertyEntry {
        name: "fsdgao-implies-wgao",
        about: "every FSD GAO is a W GAO",
        run: hunt_fsdgao_wgao,
    },
    PropertyEntry {
        name: "gao-axioms-complex",
        about: "complex operators of forest frames always satisfy the GAO laws",
        run: hunt_complex_axioms,
    },
];

/// Property names with one-line summaries, in registry order.
pub fn property_catalog() -> Vec<(&'static str, &'static str)> {
    PROPERTIES.iter().map(|e| (e.name, e.about)).collect()
}

/// Scan for the first instance within `n_max` forest nodes that falsifies
/// the named property.
pub fn find_counterexample(property: &str, n_max: usize, budget: &Budget) -> Result<HuntReport> {
    for e in PROPERTIES {
        if e.name == property || e.name.eq_ignore_ascii_case(property) {
            return (e.run)(n_max, budget);
        }
    }
    Err(Error::UnknownProperty { name: property.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::order_isos;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn forest_counts_match_the_known_table() {
        let counts: Vec<usize> =
            (1..=5).map(|n| enum_forests(n, &budget()).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 20]);
    }

    #[test]
    fn forests_are_pairwise_non_isomorphic_and_deterministic() {
        let once = enum_forests(4, &budget()).unwrap();
        let twice = enum_forests(4, &budget()).unwrap();
        let covers: Vec<_> = once.iter().map(|f| f.covers()).collect();
        let covers_again: Vec<_> = twice.iter().map(|f| f.covers()).collect();
        assert_eq!(covers, covers_again);
        for i in 0..once.len() {
            for j in 0..i {
                assert!(
                    order_isos(once[i].poset(), once[j].poset()).is_empty(),
                    "forests {i} and {j} are isomorphic"
                );
            }
        }
    }

    #[test]
    fn forest_budget_is_enforced() {
        let err = enum_forests(6, &budget()).unwrap_err();
        assert_eq!(err, Error::Budget { requested: 6, max: 5 });
    }

    #[test]
    fn deadline_stops_the_search() {
        let b = Budget { deadline: Some(Instant::now()), ..Budget::default() };
        let err = verify_theorem("thm:isoBox", 2, &b).unwrap_err();
        assert_eq!(err, Error::Deadline);
    }

    #[test]
    fn one_node_gaos_are_the_four_operator_tables() {
        let gaos = enum_gaos(1, &budget()).unwrap();
        let tables: Vec<(Vec<Elem>, Vec<Elem>)> = gaos
            .iter()
            .map(|(_, g)| (g.box_table().to_vec(), g.dia_table().to_vec()))
            .collect();
        assert_eq!(
            tables,
            vec![
                (vec![0, 1], vec![0, 0]),
                (vec![0, 1], vec![0, 1]),
                (vec![1, 1], vec![0, 0]),
                (vec![1, 1], vec![0, 1]),
            ]
        );
    }

    /// Brute-force oracle: every pair of valid operator tables on the
    /// downset algebra, canonicalized by the forest automorphisms, must
    /// agree with the enumerated list.
    #[test]
    fn gao_enumeration_matches_raw_tables_up_to_two_nodes() {
        for n in 1..=2 {
            for f in enum_forests(n, &budget()).unwrap() {
                let dual = downset_algebra(&f).unwrap();
                let k = dual.algebra.n();
                let identity: Vec<Elem> = (0..k).collect();
                let mut all_tables: Vec<Vec<Elem>> = vec![Vec::new()];
                for _ in 0..k {
                    let mut next = Vec::new();
                    for t in &all_tables {
                        for v in 0..k {
                            let mut t2 = t.clone();
                            t2.push(v);
                            next.push(t2);
                        }
                    }
                    all_tables = next;
                }
                let boxes: Vec<Vec<Elem>> = all_tables
                    .iter()
                    .filter(|bt| {
                        Gao::new(dual.algebra.clone(), (*bt).clone(), identity.clone()).is_ok()
                    })
                    .cloned()
                    .collect();
                let dias: Vec<Vec<Elem>> = all_tables
                    .iter()
                    .filter(|dt| {
                        Gao::new(dual.algebra.clone(), identity.clone(), (*dt).clone()).is_ok()
                    })
                    .cloned()
                    .collect();
                let perms = element_perms(&f, &dual).unwrap();
                let mut raw: HashSet<(Vec<Elem>, Vec<Elem>)> = HashSet::new();
                for bt in &boxes {
                    for dt in &dias {
                        let canon = perms
                            .iter()
                            .map(|pi| (apply_perm(bt, pi), apply_perm(dt, pi)))
                            .min()
                            .unwrap();
                        raw.insert(canon);
                    }
                }
                let mut enumerated: HashSet<(Vec<Elem>, Vec<Elem>)> = HashSet::new();
                for_each_gao(n, &budget(), &mut |ff, _, g| {
                    if ff.covers() == f.covers() && ff.n() == f.n() {
                        enumerated.insert((g.box_table().to_vec(), g.dia_table().to_vec()));
                    }
                    Ok(ControlFlow::Continue(()))
                })
                .unwrap();
                // for_each_gao covers smaller forests too; restrict to this one.
                let raw_here = raw;
                assert_eq!(
                    enumerated, raw_here,
                    "operator table enumeration differs on {}",
                    fmt_forest(&f)
                );
            }
        }
    }

    #[test]
    fn gao_enumeration_is_deterministic() {
        let a = enum_gaos(2, &budget()).unwrap();
        let b = enum_gaos(2, &budget()).unwrap();
        let ta: Vec<_> = a.iter().map(|(_, g)| g.box_table().to_vec()).collect();
        let tb: Vec<_> = b.iter().map(|(_, g)| g.box_table().to_vec()).collect();
        assert_eq!(ta, tb);
        assert_eq!(a.len(), b.len());
    }

    #[test]
    fn gao_budget_is_enforced() {
        let err = enum_gaos(4, &budget()).unwrap_err();
        assert_eq!(err, Error::Budget { requested: 4, max: 3 });
    }

    #[test]
    fn the_whole_theorem_registry_passes_at_two_nodes() {
        for (tag, _) in theorem_catalog() {
            let report = verify_theorem(tag, 2, &budget()).unwrap();
            assert!(
                report.pass(),
                "{tag} failed: {}",
                report.counterexample.unwrap_or_default()
            );
            assert!(report.instances > 0, "{tag} checked no instances");
        }
    }

    #[test]
    fn representation_passes_at_three_nodes() {
        let report = verify_theorem("thm:isoBox", 3, &budget()).unwrap();
        assert!(report.pass(), "{:?}", report.counterexample);
        assert!(report.instances > 400);
    }

    #[test]
    fn aliases_reach_the_same_checkers() {
        for (alias, canonical) in [
            ("diamond", "lemma:diamond"),
            ("lemma:MA", "lemmaMA"),
            ("thm:isoDUNN", "isoDUNN"),
            ("prop:propFinal", "propFinal"),
            ("FSD", "thm:FSD"),
        ] {
            let report = verify_theorem(alias, 1, &budget()).unwrap();
            assert_eq!(report.theorem, canonical);
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert_eq!(
            verify_theorem("thm:unheard", 1, &budget()).unwrap_err(),
            Error::UnknownTheorem { tag: "thm:unheard".into() }
        );
        assert_eq!(
            find_counterexample("sure-thing", 1, &budget()).unwrap_err(),
            Error::UnknownProperty { name: "sure-thing".into() }
        );
    }

    #[test]
    fn hunts_find_witnesses_inside_the_documented_bounds() {
        for (property, bound) in [
            ("dgao-implies-fsgao", 3),
            ("fsgao-implies-dgao", 3),
            ("forest-implies-or", 3),
            ("p-implies-forest", 4),
            ("fsdgao-implies-wgao", 4),
        ] {
            let b = Budget::with_nodes(bound);
            let report = find_counterexample(property, bound, &b).unwrap();
            assert!(report.witness.is_some(), "{property} found no witness");
            assert!(report.searched > 0);
        }
    }

    #[test]
    fn complex_axioms_hunt_exhausts() {
        let report = find_counterexample("gao-axioms-complex", 2, &budget()).unwrap();
        assert!(report.exhausted(), "{:?}", report.witness);
        assert!(report.searched > 300);
    }

    #[test]
    fn known_one_rel_witnesses_are_enumerated() {
        let tree = Forest::from_covers(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let cj_rel = Rel::from_pairs(4, &[(0, 1), (1, 1), (2, 3), (3, 2)]).unwrap();
        let cj_frames = enum_one_rel_frames(&tree, Some(OneRelClass::Cj), &budget()).unwrap();
        assert!(cj_frames.iter().any(|fr| *fr.r() == cj_rel));
        let fsd_rel = Rel::from_pairs(
            4,
            &[
                (0, 0),
                (0, 1),
                (1, 0),
                (1, 1),
                (1, 2),
                (2, 0),
                (2, 1),
                (2, 2),
                (3, 0),
                (3, 1),
                (3, 2),
            ],
        )
        .unwrap();
        let fsd_frames = enum_one_rel_frames(&tree, Some(OneRelClass::Fsd), &budget()).unwrap();
        assert!(fsd_frames.iter().any(|fr| *fr.r() == fsd_rel));
        for fr in &fsd_frames {
            let flags = one_rel_flags_parts(fr.forest(), fr.r());
            assert!(flags.fsd());
        }
    }

    /// The stream must contain a copy of the known forest frame that breaks
    /// (OR1); its labels differ from the canonical ones, so the check is up
    /// to isomorphism.
    #[test]
    fn frame_enumeration_contains_the_or_violating_example() {
        let f = Forest::from_covers(3, &[(0, 2)]).unwrap();
        let rbox = Rel::from_pairs(3, &[(0, 0), (1, 1), (1, 2), (2, 0), (2, 2)]).unwrap();
        let rdia = Rel::from_pairs(3, &[(0, 1), (0, 2), (1, 0), (1, 1), (2, 2)]).unwrap();
        let mut found = false;
        for_each_two_rel_frame(3, TwoRelConstraint::Forest, &budget(), &mut |ff, b, d| {
            if ff.n() == 3 && frame_iso(&f, &[&rbox, &rdia], ff, &[b, d]).is_some() {
                found = true;
                return Ok(ControlFlow::Break(()));
            }
            Ok(ControlFlow::Continue(()))
        })
        .unwrap();
        assert!(found);
    }

    #[test]
    fn dedup_modes_shrink_the_stream_soundly() {
        let f = Forest::from_covers(2, &[]).unwrap();
        let all =
            enum_two_rel_frames(&f, TwoRelConstraint::Forest, FrameDedup::None, &budget()).unwrap();
        let tables =
            enum_two_rel_frames(&f, TwoRelConstraint::Forest, FrameDedup::Tables, &budget())
                .unwrap();
        let iso =
            enum_two_rel_frames(&f, TwoRelConstraint::Forest, FrameDedup::Iso, &budget()).unwrap();
        assert_eq!(all.len(), 256);
        // On an antichain both relations range over every subset product, so
        // tables deduplicate nothing, while the node swap halves the stream
        // up to the fixed frames.
        assert_eq!(tables.len(), 256);
        assert_eq!(iso.len(), 136);
        let downsets = f.downsets();
        let keys: HashSet<Vec<u64>> = all
            .iter()
            .map(|fr| {
                operator_key(&f, &downsets, TwoRelConstraint::Forest, fr.rbox(), fr.rdia())
            })
            .collect();
        assert_eq!(keys.len(), tables.len());
        for fr in &all {
            assert!(
                iso.iter().any(|kept| frame_iso(
                    &f,
                    &[fr.rbox(), fr.rdia()],
                    &f,
                    &[kept.rbox(), kept.rdia()],
                )
                .is_some()),
                "a frame lost its isomorphism representative"
            );
        }
    }

    #[test]
    fn tables_dedup_collapses_chains() {
        let f = Forest::from_covers(2, &[(0, 1)]).unwrap();
        let all =
            enum_two_rel_frames(&f, TwoRelConstraint::Forest, FrameDedup::None, &budget()).unwrap();
        let tables =
            enum_two_rel_frames(&f, TwoRelConstraint::Forest, FrameDedup::Tables, &budget())
                .unwrap();
        assert_eq!(all.len(), 81);
        assert!(tables.len() < all.len());
        // Distinct kept frames denote distinct operators.
        let downsets = f.downsets();
        let keys: HashSet<Vec<u64>> = tables
            .iter()
            .map(|fr| {
                operator_key(&f, &downsets, TwoRelConstraint::Forest, fr.rbox(), fr.rdia())
            })
            .collect();
        assert_eq!(keys.len(), tables.len());
    }

    #[test]
    fn prop_final_holds() {
        let report = verify_theorem("propFinal", 2, &budget()).unwrap();
        assert!(report.pass(), "{:?}", report.counterexample);
        assert_eq!(report.instances, 5);
    }
}
