//! The Dahmen–Micchelli space `D(X)`: polynomials killed by `∂_Y` for
//! every cocircuit `Y`, its graded dimensions, its apolar pairing with
//! `S[𝔤*]/I_X`, and annihilator checks.

use crate::algebra::graded::ideal_degree_span;
use crate::algebra::{kernel_of_operators, monomials_of_degree, GradedDims, MultiPoly, Rational, RowEchelon};
use crate::arrangement::{count_bases, rational_subspaces, RationalSubspace, VectorList};
use crate::error::{Error, Result};
use crate::ideals::{d_poly, generators, IdealSpec};

/// Homogeneous basis of `D(X)`, one reduced echelon block per degree
/// `0..=m-s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSpaceBasis {
    pub by_degree: Vec<Vec<MultiPoly>>,
}

impl DSpaceBasis {
    pub fn dims(&self) -> GradedDims {
        GradedDims::finite(self.by_degree.iter().map(Vec::len).collect())
    }

    pub fn total(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MultiPoly> {
        self.by_degree.iter().flatten()
    }
}

pub fn dspace_basis(x: &VectorList) -> Result<DSpaceBasis> {
    let ops = generators(x, &IdealSpec::CocircuitFull)?;
    let top = (x.len() - x.dim()) as u32;
    let by_degree: Vec<Vec<MultiPoly>> =
        (0..=top).map(|d| kernel_of_operators(x.dim(), &ops, d)).collect();
    let above = kernel_of_operators(x.dim(), &ops, top + 1);
    if !above.is_empty() {
        return Err(Error::Invariant(format!(
            "D(X) has {} elements in degree {} > m - s",
            above.len(),
            top + 1
        )));
    }
    let basis = DSpaceBasis { by_degree };
    let bases = count_bases(x)?;
    if basis.total() != bases {
        return Err(Error::Invariant(format!(
            "dim D(X) = {} but X has {} bases",
            basis.total(),
            bases
        )));
    }
    Ok(basis)
}

pub fn dspace_dims(x: &VectorList) -> Result<GradedDims> {
    dspace_basis(x).map(|b| b.dims())
}

/// Graded dimensions of `D(X ∩ r)` computed in coordinates of `r`; the
/// zero subspace contributes the constants.
pub fn dspace_dims_in(x: &VectorList, r: &RationalSubspace) -> Result<GradedDims> {
    match r.intrinsic_list(x) {
        None => Ok(GradedDims::finite(vec![1])),
        Some(y) => dspace_dims(&y),
    }
}

/// Monomials of degree `d` whose classes form a basis of `(S/I_X)_d`:
/// the non-pivot columns of the echelonized ideal piece.
pub fn standard_monomials(x: &VectorList, d: u32) -> Result<Vec<Vec<u32>>> {
    let gens = generators(x, &IdealSpec::CocircuitFull)?;
    let span = ideal_degree_span(x.dim(), &gens, d);
    let mut pivot = vec![false; span.ncols()];
    for p in span.pivots() {
        pivot[p] = true;
    }
    Ok(monomials_of_degree(x.dim(), d)
        .into_iter()
        .zip(pivot)
        .filter(|(_, p)| !p)
        .map(|(m, _)| m)
        .collect())
}

/// Matrix of `⟨p, f⟩ = (p(∂) f)(0)` between standard monomials of
/// `(S/I_X)_d` (rows) and the degree-`d` basis of `D(X)` (columns).
pub fn duality_pairing_matrix(x: &VectorList, d: usize) -> Result<Vec<Vec<Rational>>> {
    x.require_spanning()?;
    let top = x.len() - x.dim();
    if d > top {
        return Err(Error::DegreeOutOfRange { degree: d, max: top });
    }
    let basis = dspace_basis(x)?;
    let rows = standard_monomials(x, d as u32)?;
    Ok(rows
        .into_iter()
        .map(|m| {
            let p = MultiPoly::monomial(m, Rational::from_integer(1.into()));
            basis.by_degree[d].iter().map(|f| p.apolar_pairing(f)).collect()
        })
        .collect())
}

pub fn is_nonsingular(matrix: &[Vec<Rational>]) -> bool {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return false;
    }
    RowEchelon::from_rows(n, matrix.iter().cloned()).rank() == n
}

/// For every rational `t` with `dim t < k` and every basis element `f` of
/// `D(X)`, checks `∂_{X∖t} f = 0`.
pub fn annihilator_check(x: &VectorList, k: usize) -> Result<bool> {
    if k > x.dim() {
        return Err(Error::InvalidSpec(format!("level {} exceeds dimension {}", k, x.dim())));
    }
    let basis = dspace_basis(x)?;
    for t in rational_subspaces(x).iter().take(k).flatten() {
        let op = d_poly(x, &t.complement(x.len()))?;
        if basis.iter().any(|f| !op.apply_as_operator(f).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `∂_a` maps `D(X)` onto `D(X ∖ a)`: the image lies in `D(X ∖ a)` and has
/// full rank there. Requires `X ∖ a` to span.
pub fn deletion_maps_onto(x: &VectorList, index: usize) -> Result<bool> {
    let smaller = x.without(index)?;
    smaller.require_spanning()?;
    let big = dspace_basis(x)?;
    let small = dspace_basis(&smaller)?;
    let a = x.vector(index);
    for (d, target) in small.by_degree.iter().enumerate() {
        let cols = monomials_of_degree(x.dim(), d as u32);
        let target_span = RowEchelon::from_rows(cols.len(), target.iter().map(|f| f.coefficient_row(&cols)));
        let source = big.by_degree.get(d + 1).map(Vec::as_slice).unwrap_or(&[]);
        let mut image = RowEchelon::new(cols.len());
        for f in source {
            let g = f.directional_derivative(a)?;
            let row = g.coefficient_row(&cols);
            if !target_span.contains(row.clone()) {
                return Ok(false);
            }
            image.insert(row);
        }
        if image.rank() != target.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
