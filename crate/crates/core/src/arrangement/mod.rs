//! Combinatorics of the vector list `X`: matroid rank, bases, rational
//! subspaces (flats), cocircuits, the Tutte polynomial with activity
//! statistics, and chambers of the dual hyperplane arrangement.

mod chambers;
mod tutte;

pub use chambers::{chambers, face_split, hyperplane_chambers, Cell, RegularFace};

pub use tutte::{tutte, BasisActivity, TuttePoly, TutteReport};

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{to_rationals, Rational, RowEchelon};
use crate::error::{Error, Result};

/// Ordered list of nonzero integer vectors in a lattice of rank `dim`.
/// Duplicates and parallel vectors are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorList {
    dim: usize,
    vectors: Vec<Vec<i64>>,
}

impl VectorList {
    pub fn new(dim: usize, vectors: Vec<Vec<i64>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::EmptyList);
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
            if v.iter().all(|&x| x == 0) {
                return Err(Error::ZeroVector { index: i });
            }
        }
        Ok(VectorList { dim, vectors })
    }

    /// Ambient dimension `s`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Length `m` of the list.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[i64] {
        &self.vectors[i]
    }

    pub fn all_indices(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn check_indices(&self, subset: &[usize]) -> Result<()> {
        match subset.iter().find(|&&i| i >= self.len()) {
            Some(&index) => Err(Error::InvalidIndex { index, len: self.len() }),
            None => Ok(()),
        }
    }

    fn span(&self, subset: &[usize]) -> RowEchelon {
        RowEchelon::from_rows(self.dim, subset.iter().map(|&i| to_rationals(&self.vectors[i])))
    }

    /// Rank over ℚ of the selected vectors.
    pub fn rank_of(&self, subset: &[usize]) -> Result<usize> {
        self.check_indices(subset)?;
        Ok(self.span(subset).rank())
    }

    pub fn rank(&self) -> usize {
        self.span(&self.all_indices()).rank()
    }

    pub fn spans(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn require_spanning(&self) -> Result<()> {
        let rank = self.rank();
        if rank == self.dim {
            Ok(())
        } else {
            Err(Error::NotSpanning { rank, dim: self.dim })
        }
    }

    pub fn is_independent(&self, subset: &[usize]) -> bool {
        self.span(subset).rank() == subset.len()
    }

    /// The sublist with the given indices, in the given order.
    pub fn sublist(&self, subset: &[usize]) -> Result<VectorList> {
        self.check_indices(subset)?;
        VectorList::new(self.dim, subset.iter().map(|&i| self.vectors[i].clone()).collect())
    }

    /// `X` with the vector at `index` removed.
    pub fn without(&self, index: usize) -> Result<VectorList> {
        self.check_indices(&[index])?;
        let rest: Vec<usize> = (0..self.len()).filter(|&i| i != index).collect();
        self.sublist(&rest)
    }

    /// Indices of all vectors lying in the span of `subset`.
    pub fn closure(&self, subset: &[usize]) -> Vec<usize> {
        let span = self.span(subset);
        (0..self.len())
            .filter(|&i| span.contains(to_rationals(&self.vectors[i])))
            .collect()
    }
}

/// A subspace spanned by the vectors of `X` it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSubspace {
    /// Every index `i` with `a_i` in the subspace, sorted.
    pub index_set: Vec<usize>,
    pub dim: usize,
    /// Reduced row echelon basis with each row scaled to a primitive
    /// integer vector.
    pub basis_matrix: Vec<Vec<i64>>,
    /// Pivot columns of the echelon basis.
    pub pivots: Vec<usize>,
}

impl RationalSubspace {
    fn from_index_set(x: &VectorList, index_set: Vec<usize>) -> Self {
        let span = x.span(&index_set);
        let pivots: Vec<usize> = span.pivots().collect();
        let basis_matrix = span.rows().map(primitive_row).collect();
        RationalSubspace { dim: pivots.len(), index_set, basis_matrix, pivots }
    }

    /// Subspace containment, read off the (closed) index sets.
    pub fn is_subspace_of(&self, other: &RationalSubspace) -> bool {
        self.index_set.iter().all(|i| other.index_set.binary_search(i).is_ok())
    }

    /// `X ∩ r` expressed in coordinates of `r`: the coordinates of a vector
    /// in the reduced echelon basis are its entries at the pivot columns.
    /// Returns `None` for the zero subspace.
    pub fn intrinsic_list(&self, x: &VectorList) -> Option<VectorList> {
        if self.dim == 0 {
            return None;
        }
        let vs = self
            .index_set
            .iter()
            .map(|&i| self.pivots.iter().map(|&p| x.vector(i)[p]).collect())
            .collect();
        Some(VectorList::new(self.dim, vs).expect("nonzero vectors have nonzero coordinates"))
    }

    /// Indices of `X` outside the subspace.
    pub fn complement(&self, m: usize) -> Vec<usize> {
        (0..m).filter(|i| self.index_set.binary_search(i).is_err()).collect()
    }
}

fn primitive_row(row: &[Rational]) -> Vec<i64> {
    let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = row.iter().map(|r| (r * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    ints.iter()
        .map(|v| (v / &g).to_i64().expect("basis entries fit in i64"))
        .collect()
}

/// Primitive integer normal of a hyperplane given by `dim - 1` spanning
/// rows, oriented so that its first nonzero entry is positive.
pub fn hyperplane_normal(dim: usize, rows: &[Vec<i64>]) -> Vec<i64> {
    let rows: Vec<Vec<Rational>> = rows.iter().map(|r| to_rationals(r)).collect();
    let ker = crate::algebra::nullspace(&rows, dim);
    debug_assert_eq!(ker.len(), 1);
    let mut n = primitive_row(&ker[0]);
    if n.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0) {
        n.iter_mut().for_each(|v| *v = -*v);
    }
    n
}

/// All `s`-subsets of indices whose vectors form a basis, in
/// lexicographic order.
pub fn enumerate_bases(x: &VectorList) -> Result<Vec<Vec<usize>>> {
    x.require_spanning()?;
    Ok((0..x.len())
        .combinations(x.dim())
        .filter(|b| x.is_independent(b))
        .collect())
}

/// Number of bases `d(X)`.
pub fn count_bases(x: &VectorList) -> Result<usize> {
    enumerate_bases(x).map(|b| b.len())
}

/// All linearly independent sublists (including the empty one), by size
/// and then lexicographically. Brute force over all subsets.
pub fn independent_sublists(x: &VectorList) -> Vec<Vec<usize>> {
    (0..=x.dim().min(x.len()))
        .flat_map(|k| (0..x.len()).combinations(k))
        .filter(|s| x.is_independent(s))
        .collect()
}

/// Rational subspaces grouped by dimension `k = 0..=rank(X)`, each level
/// sorted by index set.
///
/// Every `(k+1)`-dimensional flat is the closure of a `k`-dimensional flat
/// plus one more vector, so levels are built by extension.
pub fn rational_subspaces(x: &VectorList) -> Vec<Vec<RationalSubspace>> {
    let mut levels: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::from([Vec::new()])];
    loop {
        let next: BTreeSet<Vec<usize>> = levels
            .last()
            .unwrap()
            .iter()
            .flat_map(|flat| {
                (0..x.len())
                    .filter(|i| flat.binary_search(i).is_err())
                    .map(|i| {
                        let mut s = flat.clone();
                        s.push(i);
                        x.closure(&s)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
        .into_iter()
        .map(|lvl| lvl.into_iter().map(|s| RationalSubspace::from_index_set(x, s)).collect())
        .collect()
}

/// Rational subspaces of one dimension.
pub fn subspaces_of_dim(x: &VectorList, k: usize) -> Vec<RationalSubspace> {
    rational_subspaces(x).into_iter().nth(k).unwrap_or_default()
}

/// A sublist `X \ H` for a rational hyperplane `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocircuit {
    pub hyperplane: RationalSubspace,
    pub complement_indices: Vec<usize>,
}

/// One cocircuit per rational hyperplane, in the order of
/// `rational_subspaces`.
pub fn cocircuits(x: &VectorList) -> Result<Vec<Cocircuit>> {
    x.require_spanning()?;
    let s = x.dim();
    let hyperplanes = if s == 0 { Vec::new() } else { subspaces_of_dim(x, s - 1) };
    Ok(hyperplanes
        .into_iter()
        .map(|h| {
            let complement_indices = h.complement(x.len());
            Cocircuit { hyperplane: h, complement_indices }
        })
        .collect())
}

/// Sign of `⟨φ, a⟩` for an integer vector `a` and rational `φ`.
pub(crate) fn pairing_sign(phi: &[Rational], a: &[i64]) -> i8 {
    let v = crate::algebra::dot_int(a, phi);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn three_lines() -> VectorList {
        VectorList::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn ones(k: usize) -> VectorList {
        VectorList::new(1, vec![vec![1]; k + 1]).unwrap()
    }

    #[test]
    fn rejects_malformed_lists() {
        assert_eq!(VectorList::new(2, vec![vec![0, 0]]), Err(Error::ZeroVector { index: 0 }));
        assert!(matches!(VectorList::new(2, vec![vec![1]]), Err(Error::DimensionMismatch { .. })));
        assert_eq!(VectorList::new(2, vec![]), Err(Error::EmptyList));
    }

    #[test]
    fn rank_examples() {
        let x = three_lines();
        assert_eq!(x.rank_of(&[0, 1]).unwrap(), 2);
        assert_eq!(x.rank_of(&[]).unwrap(), 0);
        assert_eq!(x.rank_of(&[5]), Err(Error::InvalidIndex { index: 5, len: 3 }));
        let u = ones(3);
        for s in [vec![0], vec![1, 2], vec![0, 1, 2, 3]] {
            assert_eq!(u.rank_of(&s).unwrap(), 1);
        }
    }

    #[test]
    fn bases_examples() {
        assert_eq!(enumerate_bases(&three_lines()).unwrap(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(enumerate_bases(&ones(3)).unwrap(), vec![vec![0], vec![1], vec![2], vec![3]]);
        let x = VectorList::new(2, vec![vec![1, 0], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(enumerate_bases(&x).unwrap(), vec![vec![0, 2], vec![1, 2]]);
        let flat = VectorList::new(2, vec![vec![1, 0], vec![2, 0]]).unwrap();
        assert_eq!(enumerate_bases(&flat), Err(Error::NotSpanning { rank: 1, dim: 2 }));
    }

    #[test]
    fn subspaces_examples() {
        let levels = rational_subspaces(&three_lines());
        let sets: Vec<Vec<Vec<usize>>> =
            levels.iter().map(|l| l.iter().map(|r| r.index_set.clone()).collect()).collect();
        assert_eq!(sets, vec![vec![vec![]], vec![vec![0], vec![1], vec![2]], vec![vec![0, 1, 2]]]);
        assert_eq!(levels[1][2].basis_matrix, vec![vec![1, 1]]);

        let u = rational_subspaces(&ones(4));
        assert_eq!(u.len(), 2);
        assert_eq!(u[1][0].index_set, vec![0, 1, 2, 3, 4]);

        let x = VectorList::new(2, vec![vec![1, 0], vec![2, 0], vec![0, 1]]).unwrap();
        let lines: Vec<_> = subspaces_of_dim(&x, 1).into_iter().map(|r| r.index_set).collect();
        assert_eq!(lines, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn subspace_basis_matrices_are_distinct() {
        let x = VectorList::new(3, vec![vec![1, 0, 1], vec![0, 2, 0], vec![1, 2, 1], vec![2, 0, 2], vec![0, 0, 1]])
            .unwrap();
        let all: Vec<RationalSubspace> = rational_subspaces(&x).into_iter().flatten().collect();
        let keys: BTreeSet<_> = all.iter().map(|r| r.basis_matrix.clone()).collect();
        assert_eq!(keys.len(), all.len());
    }

    #[test]
    fn intrinsic_coordinates_preserve_the_matroid() {
        let x = VectorList::new(3, vec![vec![1, 1, 0], vec![2, 2, 0], vec![1, -1, 0], vec![0, 0, 1]]).unwrap();
        let plane = subspaces_of_dim(&x, 2).into_iter().find(|r| r.index_set == vec![0, 1, 2]).unwrap();
        let y = plane.intrinsic_list(&x).unwrap();
        assert_eq!(y.dim(), 2);
        assert_eq!(count_bases(&y).unwrap(), 2);
    }

    #[test]
    fn cocircuit_examples() {
        let cs: Vec<_> = cocircuits(&three_lines()).unwrap().into_iter().map(|c| c.complement_indices).collect();
        assert_eq!(cs, vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        let u: Vec<_> = cocircuits(&ones(3)).unwrap().into_iter().map(|c| c.complement_indices).collect();
        assert_eq!(u, vec![vec![0, 1, 2, 3]]);
        let e: Vec<_> = cocircuits(&VectorList::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap())
            .unwrap()
            .into_iter()
            .map(|c| c.complement_indices)
            .collect();
        assert_eq!(e, vec![vec![1], vec![0]]);
    }

    #[test]
    fn removing_a_cocircuit_drops_rank() {
        let x = VectorList::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1], vec![1, -1, 0]])
            .unwrap();
        for c in cocircuits(&x).unwrap() {
            assert_eq!(x.rank_of(&c.hyperplane.index_set).unwrap(), 2);
        }
    }

    #[test]
    fn independent_sublists_of_three_lines() {
        assert_eq!(independent_sublists(&three_lines()).len(), 7);
    }
}
