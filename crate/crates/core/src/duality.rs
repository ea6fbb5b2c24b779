//! The finite duality between Gödel algebras and forests.
//!
//! One direction sends an algebra to its spectrum: the poset of prime
//! filters under reverse inclusion. Every prime filter of a finite Gödel
//! algebra is the principal upset of a join-irreducible element, and
//! reverse inclusion of upsets is the algebra order on the generators, so
//! the spectrum is computed as the order restricted to the join
//! irreducibles. It is always a forest. The other direction sends a forest
//! to its algebra of downsets under intersection, union and the residuum
//! `x -> y = F \ up(x \ y)`.

use crate::algebra::{Elem, GodelAlgebra};
use crate::error::{Error, Result};
use crate::order::{Forest, Node, Poset, Rel};
use crate::sets::{ElemSet, Mask, NodeSet};

/// Dual forest of an algebra. Node `i` stands for the prime filter generated
/// by `generators[i]`; generators are listed in ascending element order.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub forest: Forest,
    pub generators: Vec<Elem>,
}

pub fn spectrum(algebra: &GodelAlgebra) -> Result<Spectrum> {
    let jis = algebra.join_irreducibles();
    let mut pairs = Vec::new();
    for (i1, &j1) in jis.iter().enumerate() {
        for (i2, &j2) in jis.iter().enumerate() {
            if algebra.leq(j1, j2) {
                pairs.push((i1, i2));
            }
        }
    }
    let poset = Poset::from_pairs(jis.len(), &pairs)?;
    let forest = Forest::new(poset)?;
    Ok(Spectrum { forest, generators: jis })
}

/// Downset algebra of a forest, with the carrier in canonical downset order
/// (by cardinality, then lexicographically on the sorted node lists).
#[derive(Debug, Clone)]
pub struct DownsetAlgebra {
    pub forest: Forest,
    pub algebra: GodelAlgebra,
    pub downsets: Vec<NodeSet>,
}

pub fn downset_algebra(forest: &Forest) -> Result<DownsetAlgebra> {
    let n = forest.n();
    if n > 20 {
        return Err(Error::TooLarge { what: "forest for a downset algebra", limit: 20, actual: n });
    }
    let downsets = forest.downsets();
    let k = downsets.len();
    if k > 64 {
        return Err(Error::TooLarge { what: "downset algebra carrier", limit: 64, actual: k });
    }
    let index_of = |m: Mask| -> Elem {
        downsets.iter().position(|&d| d == m).expect("downsets are closed under the operations")
    };
    let full = Mask::full(n);
    let mut meet = Vec::with_capacity(k * k);
    let mut join = Vec::with_capacity(k * k);
    let mut imp = Vec::with_capacity(k * k);
    for &x in &downsets {
        for &y in &downsets {
            meet.push(index_of(x.inter(y)));
            join.push(index_of(x.union(y)));
            imp.push(index_of(full.minus(forest.poset().up_closure(x.minus(y)))));
        }
    }
    let algebra = GodelAlgebra::new(k, meet, join, imp)?;
    Ok(DownsetAlgebra { forest: forest.clone(), algebra, downsets })
}

impl DownsetAlgebra {
    /// Index of a node set among the carrier downsets. Fails when the set is
    /// not downward closed, naming a least node whose absence breaks closure.
    pub fn element_of(&self, m: NodeSet) -> Result<Elem> {
        if let Some(i) = self.downsets.iter().position(|&d| d == m) {
            return Ok(i);
        }
        let closed = self.forest.poset().down_closure(m);
        let missing = closed.minus(m).iter().next().expect("every downset is in the carrier");
        Err(Error::NotADownset { node: missing })
    }
}

/// Stone map `r(a)` = the spectrum nodes whose generator lies below `a`.
/// One node set per element, in element order.
pub fn stone_map(algebra: &GodelAlgebra, spectrum: &Spectrum) -> Vec<NodeSet> {
    (0..algebra.n())
        .map(|a| {
            let mut m = Mask::EMPTY;
            for (i, &j) in spectrum.generators.iter().enumerate() {
                if algebra.leq(j, a) {
                    m = m.with(i);
                }
            }
            m
        })
        .collect()
}

/// Point map `k(x)` = elements of the downset algebra whose downset contains
/// `x`: the prime filter generated by the principal downset of `x`.
pub fn point_map(dual: &DownsetAlgebra) -> Vec<ElemSet> {
    (0..dual.forest.n())
        .map(|x| {
            let mut m = Mask::EMPTY;
            for (i, &d) in dual.downsets.iter().enumerate() {
                if d.contains(x) {
                    m = m.with(i);
                }
            }
            m
        })
        .collect()
}

/// For each forest node `x`, the element of the downset algebra that
/// generates the point filter `k(x)`: the principal downset of `x`.
pub fn point_generators(dual: &DownsetAlgebra) -> Vec<Elem> {
    (0..dual.forest.n())
        .map(|x| {
            let d = dual.forest.principal_down(x).expect("node is in range");
            dual.element_of(d).expect("principal downsets are downsets")
        })
        .collect()
}

/// Both halves of the representation: the spectrum together with its downset
/// algebra and the Stone map, resolved to element indices.
#[derive(Debug, Clone)]
pub struct StoneCorrespondence {
    pub spectrum: Spectrum,
    pub dual: DownsetAlgebra,
    pub r: Vec<NodeSet>,
    pub r_index: Vec<Elem>,
}

/// Build the dual of the dual and verify that the Stone map is an
/// isomorphism onto it. For a validated algebra every check passes; a
/// failure is reported as a theorem violation rather than silently ignored.
pub fn stone(algebra: &GodelAlgebra) -> Result<StoneCorrespondence> {
    let spec = spectrum(algebra)?;
    let dual = downset_algebra(&spec.forest)?;
    let r = stone_map(algebra, &spec);
    let n = algebra.n();
    if dual.algebra.n() != n {
        return Err(Error::TheoremViolation {
            theorem: "stone",
            detail: format!("{} elements but {} downsets", n, dual.algebra.n()),
        });
    }
    let mut r_index = Vec::with_capacity(n);
    let mut seen = Mask::EMPTY;
    for (a, &m) in r.iter().enumerate() {
        let i = dual.element_of(m).map_err(|_| Error::TheoremViolation {
            theorem: "stone",
            detail: format!("r({a}) = {m} is not a downset of the spectrum"),
        })?;
        if seen.contains(i) {
            return Err(Error::TheoremViolation {
                theorem: "stone",
                detail: format!("r is not injective at element {a}"),
            });
        }
        seen = seen.with(i);
        r_index.push(i);
    }
    for a in 0..n {
        for b in 0..n {
            let ops = [
                ("meet", algebra.meet(a, b), dual.algebra.meet(r_index[a], r_index[b])),
                ("join", algebra.join(a, b), dual.algebra.join(r_index[a], r_index[b])),
                ("imp", algebra.imp(a, b), dual.algebra.imp(r_index[a], r_index[b])),
            ];
            for (name, lhs, rhs) in ops {
                if r_index[lhs] != rhs {
                    return Err(Error::TheoremViolation {
                        theorem: "stone",
                        detail: format!("r does not preserve {name} at ({a}, {b})"),
                    });
                }
            }
        }
    }
    Ok(StoneCorrespondence { spectrum: spec, dual, r, r_index })
}

/// Order isomorphisms from `p` onto `q`, as image vectors in lexicographic
/// order. Backtracking; carriers here are tiny.
pub fn order_isos(p: &Poset, q: &Poset) -> Vec<Vec<Node>> {
    if p.n() != q.n() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut perm: Vec<Node> = Vec::with_capacity(p.n());
    let mut used = vec![false; p.n()];
    iso_search(p, q, &mut perm, &mut used, &mut out);
    out
}

fn iso_search(
    p: &Poset,
    q: &Poset,
    perm: &mut Vec<Node>,
    used: &mut [bool],
    out: &mut Vec<Vec<Node>>,
) {
    let k = perm.len();
    if k == p.n() {
        out.push(perm.clone());
        return;
    }
    for cand in 0..q.n() {
        if used[cand] {
            continue;
        }
        if p.down_of(k).card() != q.down_of(cand).card()
            || p.up_of(k).card() != q.up_of(cand).card()
        {
            continue;
        }
        let ok = (0..k).all(|i| {
            p.leq(i, k) == q.leq(perm[i], cand) && p.leq(k, i) == q.leq(cand, perm[i])
        });
        if ok {
            used[cand] = true;
            perm.push(cand);
            iso_search(p, q, perm, used, out);
            perm.pop();
            used[cand] = false;
        }
    }
}

/// All isomorphisms from one algebra onto another, as element image vectors
/// in the lexicographic order of the underlying spectrum isomorphisms. Each
/// candidate comes from an order isomorphism of the spectra, extended to the
/// whole carrier by joins of generators, then checked on all three tables.
pub fn algebra_isos(a: &GodelAlgebra, b: &GodelAlgebra) -> Vec<Vec<Elem>> {
    if a.n() != b.n() {
        return Vec::new();
    }
    let (sa, sb) = match (spectrum(a), spectrum(b)) {
        (Ok(sa), Ok(sb)) => (sa, sb),
        _ => return Vec::new(),
    };
    let mut out = Vec::new();
    for sigma in order_isos(sa.forest.poset(), sb.forest.poset()) {
        let mut map = Vec::with_capacity(a.n());
        for x in 0..a.n() {
            let mut image = b.bot();
            for (i, &j) in sa.generators.iter().enumerate() {
                if a.leq(j, x) {
                    image = b.join(image, sb.generators[sigma[i]]);
                }
            }
            map.push(image);
        }
        let mut hit = Mask::EMPTY;
        let bijective = map.iter().all(|&y| {
            let fresh = !hit.contains(y);
            hit = hit.with(y);
            fresh
        });
        if !bijective {
            continue;
        }
        let preserves = (0..a.n()).all(|x| {
            (0..a.n()).all(|y| {
                map[a.meet(x, y)] == b.meet(map[x], map[y])
                    && map[a.join(x, y)] == b.join(map[x], map[y])
                    && map[a.imp(x, y)] == b.imp(map[x], map[y])
            })
        });
        if preserves {
            out.push(map);
        }
    }
    out
}

/// First algebra isomorphism if one exists.
pub fn algebra_iso(a: &GodelAlgebra, b: &GodelAlgebra) -> Option<Vec<Elem>> {
    algebra_isos(a, b).into_iter().next()
}

/// First order isomorphism of the forests carrying each listed relation onto
/// its counterpart. `rels_a` and `rels_b` pair up by position.
pub fn frame_iso(
    fa: &Forest,
    rels_a: &[&Rel],
    fb: &Forest,
    rels_b: &[&Rel],
) -> Option<Vec<Node>> {
    assert_eq!(rels_a.len(), rels_b.len());
    for sigma in order_isos(fa.poset(), fb.poset()) {
        let carries = rels_a.iter().zip(rels_b).all(|(ra, rb)| {
            ra.pair_count() == rb.pair_count()
                && ra.pairs().into_iter().all(|(x, y)| rb.contains(sigma[x], sigma[y]))
        });
        if carries {
            return Some(sigma);
        }
    }
    None
}
