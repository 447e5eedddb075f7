//! Ideals generated by products of linear forms `d_Y`, the Hilbert
//! functions of their quotients, and a degreewise check of the
//! intersection formula for admissible sets of rational subspaces.

use std::collections::BTreeMap;

use crate::algebra::{graded_ideal_dims, monomials_of_degree, GradedDims, MultiPoly};
use crate::algebra::graded::ideal_degree_span;
use crate::arrangement::{cocircuits, rational_subspaces, tutte, RationalSubspace, VectorList};
use crate::error::{Error, Result};

/// `d_Y = Π_{i∈Y} ⟨a_i, ·⟩`; the empty product is 1.
pub fn d_poly(x: &VectorList, indices: &[usize]) -> Result<MultiPoly> {
    let mut p = MultiPoly::one(x.dim());
    for &i in indices {
        if i >= x.len() {
            return Err(Error::InvalidIndex { index: i, len: x.len() });
        }
        p = &p * &MultiPoly::linear_form(x.vector(i));
    }
    Ok(p)
}

/// Which ideal of `S[𝔤*]` to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSpec {
    /// `I_X`, generated by `d_Y` over all cocircuits `Y`.
    CocircuitFull,
    /// `I_k`, generated by `d_{X∖r}` over rational `r` of dimension `k`.
    LevelK(usize),
    /// `I_Q` for an explicit set `Q` of rational subspaces.
    SubspaceSet(Vec<RationalSubspace>),
}

/// Checks that `r` is a rational subspace of `x` as built by
/// `rational_subspaces` (closed index set, consistent dimension).
pub fn validate_subspace(x: &VectorList, r: &RationalSubspace) -> Result<()> {
    if r.index_set.iter().any(|&i| i >= x.len()) {
        return Err(Error::InvalidSpec(format!("index set {:?} out of range", r.index_set)));
    }
    let closed = x.closure(&r.index_set);
    let rank = x.rank_of(&r.index_set)?;
    if closed != r.index_set || rank != r.dim {
        return Err(Error::InvalidSpec(format!("{:?} is not a rational subspace", r.index_set)));
    }
    Ok(())
}

/// The rational subspace spanned by the given indices.
pub fn subspace_from_indices(x: &VectorList, indices: &[usize]) -> Result<RationalSubspace> {
    x.rank_of(indices)?;
    let closed = x.closure(indices);
    Ok(rational_subspaces(x)
        .into_iter()
        .flatten()
        .find(|r| r.index_set == closed)
        .expect("closure of a sublist is a flat"))
}

fn complement_products(x: &VectorList, q: &[RationalSubspace]) -> Result<Vec<MultiPoly>> {
    q.iter().map(|r| d_poly(x, &r.complement(x.len()))).collect()
}

pub fn generators(x: &VectorList, spec: &IdealSpec) -> Result<Vec<MultiPoly>> {
    x.require_spanning()?;
    match spec {
        IdealSpec::CocircuitFull => cocircuits(x)?
            .iter()
            .map(|c| d_poly(x, &c.complement_indices))
            .collect(),
        IdealSpec::LevelK(k) => {
            if *k >= x.dim() {
                return Err(Error::InvalidSpec(format!("level {} outside 0..{}", k, x.dim())));
            }
            let level = rational_subspaces(x).swap_remove(*k);
            complement_products(x, &level)
        }
        IdealSpec::SubspaceSet(q) => {
            for r in q {
                validate_subspace(x, r)?;
            }
            complement_products(x, q)
        }
    }
}

/// Hilbert function of `S[𝔤*] / I` up to `max_degree` (default `m`).
pub fn hilbert(x: &VectorList, spec: &IdealSpec, max_degree: Option<usize>) -> Result<GradedDims> {
    let gens = generators(x, spec)?;
    Ok(graded_ideal_dims(x.dim(), &gens, max_degree.unwrap_or(x.len())))
}

/// Graded dimensions indexed by cohomological degree `h`; polynomial
/// degree `d` sits in `h = 2d` and odd degrees vanish.
/// Hilbert function of `S/I_X` predicted by external activity: degree `d`
/// counts the bases `B` with `e(B) = m − s − d`.
pub fn activity_hilbert(x: &VectorList) -> Result<GradedDims> {
    x.require_spanning()?;
    let top = x.len() - x.dim();
    let counts = tutte(x)?.external_activity_counts();
    Ok(GradedDims::finite((0..=top).map(|d| counts.get(top - d).copied().unwrap_or(0)).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<usize, usize>,
    pub truncated: bool,
}

impl BettiTable {
    pub fn from_graded(g: &GradedDims) -> Self {
        let top = 2 * g.len();
        let entries = (0..top.max(1))
            .map(|h| (h, if h % 2 == 0 { g.get(h / 2) } else { 0 }))
            .collect();
        BettiTable { entries, truncated: g.truncated }
    }

    pub fn get(&self, h: usize) -> usize {
        self.entries.get(&h).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }
}

/// Betti table of the open set `M_X ∖ ∪_{r∈Q} M_{X∩r}`, i.e. of
/// `S[𝔤*]/I_Q`.
pub fn betti_open_stratum(x: &VectorList, q: &[RationalSubspace], max_degree: Option<usize>) -> Result<BettiTable> {
    let g = hilbert(x, &IdealSpec::SubspaceSet(q.to_vec()), max_degree)?;
    Ok(BettiTable::from_graded(&g))
}

/// Betti table of `M_{X,≥k}`, the points whose orbits have dimension at
/// least `k` (`Q = S_X(k-1)`; `k = 0` is all of `M_X`).
pub fn betti_geq(x: &VectorList, k: usize, max_degree: Option<usize>) -> Result<BettiTable> {
    x.require_spanning()?;
    if k > x.dim() {
        return Err(Error::InvalidSpec(format!("stratum {} exceeds dimension {}", k, x.dim())));
    }
    let q = if k == 0 { Vec::new() } else { rational_subspaces(x).swap_remove(k - 1) };
    betti_open_stratum(x, &q, max_degree)
}

/// `Q` contains every rational subspace below each of its members.
pub fn is_admissible(x: &VectorList, q: &[RationalSubspace]) -> bool {
    rational_subspaces(x).iter().flatten().all(|t| {
        !q.iter().any(|s| t.is_subspace_of(s)) || q.contains(t)
    })
}

/// Smallest admissible set containing `q`, ordered by dimension and then
/// index set.
pub fn close_downward(x: &VectorList, q: &[RationalSubspace]) -> Vec<RationalSubspace> {
    rational_subspaces(x)
        .into_iter()
        .flatten()
        .filter(|t| q.iter().any(|s| t.is_subspace_of(s)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LamainDegree {
    pub degree: usize,
    /// `dim (I_s ∩ I_{Q∖s})_d` by inclusion–exclusion.
    pub intersection: usize,
    /// `dim (Σ_{t⊂s, dim t = k-1} I_t)_d`.
    pub facet_sum: usize,
    /// Whether the facet sum lies in both `I_s` and `I_{Q∖s}` in degree `d`.
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LamainReport {
    pub holds: bool,
    pub per_degree: Vec<LamainDegree>,
}

/// Checks `I_s ∩ I_{Q∖{s}} = Σ_{t⊂s, t∈S_X(k-1)} I_t` in every degree up
/// to `max_degree` (default `m`), for admissible `Q` and `s ∈ Q` of
/// maximal dimension `k`.
///
/// The right side is contained in the left, so equal graded dimensions
/// certify equality; containment is checked too.
pub fn verify_lamain(
    x: &VectorList,
    q: &[RationalSubspace],
    s: &RationalSubspace,
    max_degree: Option<usize>,
) -> Result<LamainReport> {
    x.require_spanning()?;
    for r in q.iter().chain(std::iter::once(s)) {
        validate_subspace(x, r)?;
    }
    if !is_admissible(x, q) {
        return Err(Error::NotAdmissible("Q is not closed under taking rational subspaces".into()));
    }
    if !q.contains(s) {
        return Err(Error::NotAdmissible("s is not a member of Q".into()));
    }
    if q.iter().any(|r| r.dim > s.dim) {
        return Err(Error::NotMaximal);
    }
    let n = x.dim();
    let g_s = complement_products(x, std::slice::from_ref(s))?;
    let rest: Vec<RationalSubspace> = q.iter().filter(|r| *r != s).cloned().collect();
    let g_rest = complement_products(x, &rest)?;
    let facets: Vec<RationalSubspace> = match s.dim {
        0 => Vec::new(),
        k => rational_subspaces(x)
            .swap_remove(k - 1)
            .into_iter()
            .filter(|t| t.is_subspace_of(s))
            .collect(),
    };
    let g_facets = complement_products(x, &facets)?;
    let both: Vec<MultiPoly> = g_s.iter().chain(&g_rest).cloned().collect();

    let per_degree: Vec<LamainDegree> = (0..=max_degree.unwrap_or(x.len()))
        .map(|d| {
            let d32 = d as u32;
            let span_s = ideal_degree_span(n, &g_s, d32);
            let span_rest = ideal_degree_span(n, &g_rest, d32);
            let span_both = ideal_degree_span(n, &both, d32);
            let span_facets = ideal_degree_span(n, &g_facets, d32);
            let contained = span_facets
                .rows()
                .all(|r| span_s.contains(r.to_vec()) && span_rest.contains(r.to_vec()));
            debug_assert!(span_both.rank() <= monomials_of_degree(n, d32).len());
            LamainDegree {
                degree: d,
                intersection: span_s.rank() + span_rest.rank() - span_both.rank(),
                facet_sum: span_facets.rank(),
                contained,
            }
        })
        .collect();
    let holds = per_degree.iter().all(|p| p.contained && p.intersection == p.facet_sum);
    Ok(LamainReport { holds, per_degree })
}
