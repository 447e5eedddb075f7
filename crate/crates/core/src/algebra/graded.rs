use std::collections::HashMap;

use num_traits::Zero;

use super::linalg::{nullspace, RowEchelon};
use super::poly::{monomials_of_degree, Monomial, MultiPoly};
use super::Rational;

/// Dimensions of the graded pieces of a graded vector space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedDims {
    pub dims: Vec<usize>,
    /// Set when the sequence was cut at a degree bound with a nonzero last
    /// entry, so higher degrees are unknown rather than zero.
    pub truncated: bool,
}

impl GradedDims {
    /// Finite sequence; trailing zeros are dropped.
    pub fn finite(mut dims: Vec<usize>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        GradedDims { dims, truncated: false }
    }

    /// Sequence computed up to (and including) a degree bound.
    pub fn bounded(dims: Vec<usize>) -> Self {
        if dims.last().is_some_and(|&d| d != 0) {
            GradedDims { dims, truncated: true }
        } else {
            Self::finite(dims)
        }
    }

    pub fn get(&self, d: usize) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }
}

/// Index of each monomial of degree `d` in grlex-descending order.
fn column_index(basis: &[Monomial]) -> HashMap<&Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Basis of the joint kernel of linear operators restricted to homogeneous
/// polynomials of degree exactly `degree`.
///
/// Operators must map polynomials to polynomials linearly. The result is in
/// reduced echelon form with respect to the descending grlex order, so it
/// is canonical for the kernel.
pub fn graded_kernel<F>(nvars: usize, operators: &[F], degree: u32) -> Vec<MultiPoly>
where
    F: Fn(&MultiPoly) -> MultiPoly,
{
    let basis = monomials_of_degree(nvars, degree);
    let n = basis.len();
    // Row (operator k, output monomial μ) collects the μ-coefficient of
    // op_k applied to each input monomial.
    let mut rows: HashMap<(usize, Monomial), Vec<Rational>> = HashMap::new();
    let mut order: Vec<(usize, Monomial)> = Vec::new();
    for (j, m) in basis.iter().enumerate() {
        let input = MultiPoly::monomial(m.clone(), Rational::from_integer(1.into()));
        for (k, op) in operators.iter().enumerate() {
            for (mu, c) in op(&input).terms() {
                let key = (k, mu.clone());
                let row = rows.entry(key.clone()).or_insert_with(|| {
                    order.push(key);
                    vec![Rational::zero(); n]
                });
                row[j] = c.clone();
            }
        }
    }
    let matrix: Vec<Vec<Rational>> = order.into_iter().map(|k| rows.remove(&k).unwrap()).collect();
    nullspace(&matrix, n)
        .into_iter()
        .map(|v| MultiPoly::from_coefficient_row(&basis, &v, nvars))
        .collect()
}

/// `graded_kernel` for polynomials acting as constant-coefficient
/// differential operators `p(∂)`.
pub fn kernel_of_operators(nvars: usize, operators: &[MultiPoly], degree: u32) -> Vec<MultiPoly> {
    let ops: Vec<_> = operators.iter().map(|p| move |f: &MultiPoly| p.apply_as_operator(f)).collect();
    graded_kernel(nvars, &ops, degree)
}

/// Echelon form of the degree-`d` piece of the ideal generated by
/// homogeneous `generators`, over the grlex-descending monomial basis.
pub(crate) fn ideal_degree_span(nvars: usize, generators: &[MultiPoly], d: u32) -> RowEchelon {
    let basis = monomials_of_degree(nvars, d);
    let index = column_index(&basis);
    let mut ech = RowEchelon::new(basis.len());
    for g in generators {
        if g.is_zero() {
            continue;
        }
        for gd in (0..=d).filter(|&k| !g.component(k).is_zero()) {
            let part = g.component(gd);
            for mult in monomials_of_degree(nvars, d - gd) {
                let mut row = vec![Rational::zero(); basis.len()];
                for (e, c) in part.terms() {
                    let m: Monomial = e.iter().zip(&mult).map(|(a, b)| a + b).collect();
                    row[index[&m]] = c.clone();
                }
                ech.insert(row);
                if ech.is_full() {
                    return ech;
                }
            }
        }
    }
    ech
}

/// Hilbert function of `S / ⟨generators⟩` for homogeneous generators, up to
/// `max_degree` inclusive.
pub fn graded_ideal_dims(nvars: usize, generators: &[MultiPoly], max_degree: usize) -> GradedDims {
    let dims = (0..=max_degree as u32)
        .map(|d| {
            let total = monomials_of_degree(nvars, d).len();
            total - ideal_degree_span(nvars, generators, d).rank()
        })
        .collect();
    GradedDims::bounded(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn x() -> MultiPoly {
        MultiPoly::var(2, 0)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(2, 1)
    }

    #[test]
    fn kernel_of_all_partials_is_constants() {
        let ops = [MultiPoly::var(2, 0), MultiPoly::var(2, 1)];
        let k0 = kernel_of_operators(2, &ops, 0);
        assert_eq!(k0, vec![MultiPoly::one(2)]);
        assert!(kernel_of_operators(2, &ops, 1).is_empty());
    }

    #[test]
    fn kernel_of_d_dx_in_degree_one_is_y() {
        let ops = [MultiPoly::var(2, 0)];
        assert_eq!(kernel_of_operators(2, &ops, 1), vec![y()]);
    }

    #[test]
    fn cocircuit_operators_of_three_lines_kill_all_linear_forms() {
        // X = (e1, e2, e1+e2): cocircuit products y(x+y), x(x+y), xy.
        let s = &x() + &y();
        let ops = [&y() * &s, &x() * &s, &x() * &y()];
        assert_eq!(kernel_of_operators(2, &ops, 1), vec![x(), y()]);
        assert!(kernel_of_operators(2, &ops, 2).is_empty());
    }

    #[test]
    fn closure_operators_are_accepted() {
        let shift = |f: &MultiPoly| f.partial(0);
        let k = graded_kernel(2, &[shift], 2);
        assert_eq!(k, vec![&y() * &y()]);
    }

    #[test]
    fn quotient_by_variables_is_constants() {
        let g = graded_ideal_dims(2, &[x(), y()], 4);
        assert_eq!(g, GradedDims { dims: vec![1], truncated: false });
    }

    #[test]
    fn quotient_by_three_quadrics() {
        let s = &x() + &y();
        let gens = [&x() * &y(), &x() * &s, &y() * &s];
        let g = graded_ideal_dims(2, &gens, 3);
        assert_eq!(g.dims, vec![1, 2]);
        assert!(!g.truncated);
    }

    #[test]
    fn quotient_by_power_of_single_variable() {
        for k in 0..5u32 {
            let g = MultiPoly::monomial(vec![k + 1], int(1));
            let dims = graded_ideal_dims(1, &[g], (k + 1) as usize);
            assert_eq!(dims.dims, vec![1; k as usize + 1]);
            assert!(!dims.truncated);
        }
    }

    #[test]
    fn infinite_quotient_is_flagged_truncated() {
        let g = graded_ideal_dims(2, &[y()], 3);
        assert_eq!(g.dims, vec![1, 1, 1, 1]);
        assert!(g.truncated);
    }
}
