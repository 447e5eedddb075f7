//! Dimension bookkeeping for the filtration `G(X) = G(X)_0 ⊇ G(X)_1 ⊇ … ⊇
//! G(X)_s = D(X)` and for the graded modules attached to the strata
//! `M_{X,≥i}`.
//!
//! Every dimension comes from `D`-space solves for the lists `X ∩ r`
//! written in intrinsic coordinates of `r`; the zero subspace contributes
//! the constants.

use std::collections::BTreeMap;

use num_integer::binomial;

use crate::arrangement::{independent_sublists, rational_subspaces, tutte, RationalSubspace, VectorList};
use crate::dmspace::{dspace_dims, dspace_dims_in};
use crate::error::{Error, Result};
use crate::GradedDims;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceTerm {
    pub subspace: RationalSubspace,
    pub dspace: GradedDims,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationLevel {
    pub level: usize,
    /// `dim G(X)_level`.
    pub dim: usize,
    /// One entry per rational subspace of dimension `level`.
    pub terms: Vec<SubspaceTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub levels: Vec<FiltrationLevel>,
    pub total: usize,
}

impl FiltrationReport {
    pub fn dim_at(&self, level: usize) -> usize {
        self.levels.get(level).map_or(0, |l| l.dim)
    }
}

fn subspace_terms(x: &VectorList) -> Result<Vec<Vec<SubspaceTerm>>> {
    rational_subspaces(x)
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .map(|r| Ok(SubspaceTerm { dspace: dspace_dims_in(x, &r)?, subspace: r }))
                .collect()
        })
        .collect()
}

pub fn filtration_report(x: &VectorList) -> Result<FiltrationReport> {
    x.require_spanning()?;
    let terms = subspace_terms(x)?;
    let mut levels: Vec<FiltrationLevel> = Vec::with_capacity(terms.len());
    let mut running = 0;
    for (level, ts) in terms.into_iter().enumerate().rev() {
        running += ts.iter().map(|t| t.dspace.total()).sum::<usize>();
        levels.push(FiltrationLevel { level, dim: running, terms: ts });
    }
    levels.reverse();
    let total = levels[0].dim;
    let expected = tutte(x)?.poly.eval(2, 1);
    if total as i128 != expected {
        return Err(Error::Invariant(format!("dim G(X) = {total} but T(2, 1) = {expected}")));
    }
    let d = dspace_dims(x)?.total();
    if levels[x.dim()].dim != d {
        return Err(Error::Invariant(format!("dim G(X)_s = {} but d(X) = {d}", levels[x.dim()].dim)));
    }
    Ok(FiltrationReport { levels, total })
}

/// `dim G(X)_i` by counting independent sublists of size at least `i`.
pub fn filtration_dim_by_sublists(x: &VectorList, level: usize) -> usize {
    independent_sublists(x).iter().filter(|s| s.len() >= level).count()
}

/// Checks `dim G_i = dim G_{i+1} + Σ_{r ∈ S_X(i)} dim D(X ∩ r)` with both
/// filtration dimensions from sublist counting and the sum from `D`-space
/// solves.
pub fn exact_sequence_check(x: &VectorList, level: usize) -> Result<bool> {
    x.require_spanning()?;
    if level >= x.dim() {
        return Err(Error::InvalidSpec(format!("level {level} must be below {}", x.dim())));
    }
    let quotient: usize = rational_subspaces(x)[level]
        .iter()
        .map(|r| dspace_dims_in(x, r).map(|g| g.total()))
        .sum::<Result<usize>>()?;
    Ok(filtration_dim_by_sublists(x, level) == filtration_dim_by_sublists(x, level + 1) + quotient)
}

/// Placement of one subspace term in cohomological degree: the class of
/// `D`-degree `d` times a polynomial of degree `e` sits at
/// `top − 2d + 2e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOffset {
    pub index_set: Vec<usize>,
    pub dim: usize,
    pub top: usize,
    pub free_variables: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactSupportTable {
    pub level: usize,
    /// Nonzero entries only; absent degrees are zero.
    pub entries: BTreeMap<usize, usize>,
    pub max_degree: usize,
    /// Whether entries beyond `max_degree` were cut off.
    pub truncated: bool,
    pub offsets: Vec<TermOffset>,
    pub convention: &'static str,
}

impl CompactSupportTable {
    pub fn get(&self, h: usize) -> usize {
        self.entries.get(&h).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }
}

pub const GRADING_CONVENTION: &str = "term r places D(X∩r) degree d times a degree-e polynomial in s-dim(r) \
variables at h = 2|X\\r| + 4|X∩r| - 2dim(r) - 2d + 2e; for r the whole space this is h = 4m - 2s - 2d";

fn polynomial_ring_dim(vars: usize, degree: usize) -> usize {
    if vars == 0 {
        usize::from(degree == 0)
    } else {
        binomial(degree + vars - 1, vars - 1)
    }
}

fn accumulate(
    x: &VectorList,
    r: &RationalSubspace,
    dspace: &GradedDims,
    max_degree: usize,
    entries: &mut BTreeMap<usize, usize>,
) -> (TermOffset, bool) {
    let inside = r.index_set.len();
    let top = 2 * (x.len() - inside) + 4 * inside - 2 * r.dim;
    let free = x.dim() - r.dim;
    let mut truncated = false;
    for d in 0..dspace.len() {
        let n = dspace.get(d);
        if n == 0 {
            continue;
        }
        let base = top - 2 * d;
        if base > max_degree {
            truncated = true;
            continue;
        }
        let mut e = 0;
        while base + 2 * e <= max_degree {
            let k = polynomial_ring_dim(free, e);
            if k == 0 {
                break;
            }
            *entries.entry(base + 2 * e).or_default() += n * k;
            e += 1;
        }
        if free > 0 {
            truncated = true;
        }
    }
    (TermOffset { index_set: r.index_set.clone(), dim: r.dim, top, free_variables: free }, truncated)
}

/// Compactly supported equivariant Betti numbers of the finite stratum:
/// `D(X)` regraded by `d ↦ 4m − 2s − 2d`.
pub fn compact_support_betti_fin(x: &VectorList, max_degree: usize) -> Result<CompactSupportTable> {
    x.require_spanning()?;
    let s = x.dim();
    let whole = rational_subspaces(x).pop().expect("a spanning list has a top level").remove(0);
    let dspace = dspace_dims(x)?;
    let mut entries = BTreeMap::new();
    let (offset, truncated) = accumulate(x, &whole, &dspace, max_degree, &mut entries);
    Ok(CompactSupportTable {
        level: s,
        entries,
        max_degree,
        truncated,
        offsets: vec![offset],
        convention: GRADING_CONVENTION,
    })
}

/// Graded dimensions of the module attached to `M_{X,≥i}`: a sum over
/// rational subspaces of dimension at least `i` of `D(X ∩ r)` tensored
/// with a polynomial ring in `s − dim r` variables of degree 2.
pub fn stratum_betti_series(x: &VectorList, level: usize, max_degree: usize) -> Result<CompactSupportTable> {
    x.require_spanning()?;
    if level > x.dim() {
        return Err(Error::InvalidSpec(format!("stratum level {level} exceeds {}", x.dim())));
    }
    let mut entries = BTreeMap::new();
    let mut offsets = Vec::new();
    let mut truncated = false;
    for ts in subspace_terms(x)?.into_iter().skip(level) {
        for t in ts {
            let (offset, cut) = accumulate(x, &t.subspace, &t.dspace, max_degree, &mut entries);
            offsets.push(offset);
            truncated |= cut;
        }
    }
    Ok(CompactSupportTable { level, entries, max_degree, truncated, offsets, convention: GRADING_CONVENTION })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(dim: usize, v: &[&[i64]]) -> VectorList {
        VectorList::new(dim, v.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn ones(k: usize) -> VectorList {
        VectorList::new(1, vec![vec![1]; k + 1]).unwrap()
    }

    #[test]
    fn filtration_examples() {
        for k in 0..5 {
            let r = filtration_report(&ones(k)).unwrap();
            assert_eq!((r.total, r.dim_at(1)), (k + 2, k + 1));
        }
        let r = filtration_report(&list(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(r.levels.iter().map(|l| l.dim).collect::<Vec<_>>(), vec![4, 3, 1]);
        let r = filtration_report(&list(2, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(r.levels.iter().map(|l| l.dim).collect::<Vec<_>>(), vec![7, 6, 3]);
        assert_eq!(r.levels[1].terms.len(), 3);
    }

    #[test]
    fn exact_sequence_examples() {
        for k in 0..4 {
            assert!(exact_sequence_check(&ones(k), 0).unwrap());
        }
        let x = list(2, &[&[1, 0], &[0, 1]]);
        assert!(exact_sequence_check(&x, 1).unwrap());
        assert!(exact_sequence_check(&x, 0).unwrap());
        assert!(exact_sequence_check(&x, 2).is_err());
    }

    #[test]
    fn finite_stratum_examples() {
        let t = compact_support_betti_fin(&list(2, &[&[1, 0], &[0, 1], &[1, 1]]), 20).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(6, 2), (8, 1)]));
        assert!(!t.truncated);
        let t = compact_support_betti_fin(&list(2, &[&[1, 0], &[0, 1]]), 20).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(4, 1)]));
        let t = compact_support_betti_fin(&list(2, &[&[1, 0], &[0, 1], &[1, 1]]), 7).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(6, 2)]));
        assert!(t.truncated);
    }

    #[test]
    fn stratum_series_examples() {
        let x = list(2, &[&[1, 0], &[0, 1]]);
        let t = stratum_betti_series(&x, 1, 10).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(4, 3), (6, 2), (8, 2), (10, 2)]));
        assert!(t.truncated);
        let top = stratum_betti_series(&x, 2, 10).unwrap();
        assert_eq!(top.entries, compact_support_betti_fin(&x, 10).unwrap().entries);
        for k in 0..4 {
            let t = stratum_betti_series(&ones(k), 0, 6 * k + 6).unwrap();
            let fin = compact_support_betti_fin(&ones(k), 6 * k + 6).unwrap();
            // the zero subspace adds one class in each degree from 2m upwards
            let m = k + 1;
            for h in (0..=6 * k + 6).step_by(2) {
                assert_eq!(t.get(h), fin.get(h) + usize::from(h >= 2 * m), "k={k} h={h}");
            }
        }
        assert!(stratum_betti_series(&x, 3, 10).is_err());
    }
}
