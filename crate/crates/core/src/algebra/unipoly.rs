use num_traits::{One, Zero};

use super::{format_rational, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Lagrange interpolation through `(t, v)` samples with distinct nodes.
    pub fn interpolate(samples: &[(Rational, Rational)]) -> Result<Self> {
        for (i, (a, _)) in samples.iter().enumerate() {
            if samples[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::DuplicateNodes(format_rational(a)));
            }
        }
        let n = samples.len();
        let mut acc = vec![Rational::zero(); n];
        for (i, (ti, vi)) in samples.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            // basis numerator Π_{j≠i} (t - t_j)
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (tj, _)) in samples.iter().enumerate() {
                if j == i {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * tj;
                }
                basis = next;
                denom *= ti - tj;
            }
            let f = vi / denom;
            for (a, b) in acc.iter_mut().zip(basis) {
                *a += &f * b;
            }
        }
        Ok(UniPoly::new(acc))
    }

    pub fn antiderivative(&self) -> Self {
        let mut c = vec![Rational::zero()];
        for (k, a) in self.coeffs.iter().enumerate() {
            c.push(a / Rational::from_integer((k as i64 + 1).into()));
        }
        UniPoly::new(c)
    }

    pub fn integrate(&self, t0: &Rational, t1: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(t1) - anti.eval(t0)
    }
}

/// `∫_{t0}^{t1} q(t) dt` for the unique `q` of degree `<= degree_bound`
/// through the samples.
pub fn interpolate_and_integrate(
    samples: &[(Rational, Rational)],
    degree_bound: usize,
    interval: (&Rational, &Rational),
) -> Result<Rational> {
    if samples.len() != degree_bound + 1 {
        return Err(Error::SampleCount { expected: degree_bound + 1, got: samples.len() });
    }
    let q = UniPoly::interpolate(samples)?;
    Ok(q.integrate(interval.0, interval.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn integrates_simple_polynomials() {
        let s = [(int(0), int(0)), (int(1), int(1))];
        assert_eq!(interpolate_and_integrate(&s, 1, (&int(0), &int(1))).unwrap(), ratio(1, 2));
        let s = [(int(0), int(7))];
        assert_eq!(interpolate_and_integrate(&s, 0, (&int(2), &int(5))).unwrap(), int(21));
        let s = [(int(0), int(0)), (int(1), int(1)), (int(2), int(4))];
        assert_eq!(interpolate_and_integrate(&s, 2, (&int(0), &int(1))).unwrap(), ratio(1, 3));
    }

    #[test]
    fn rejects_bad_samples() {
        let s = [(int(1), int(0)), (int(1), int(1))];
        assert!(matches!(
            interpolate_and_integrate(&s, 1, (&int(0), &int(1))),
            Err(Error::DuplicateNodes(_))
        ));
        let s = [(int(1), int(0))];
        assert_eq!(
            interpolate_and_integrate(&s, 2, (&int(0), &int(1))),
            Err(Error::SampleCount { expected: 3, got: 1 })
        );
    }

    proptest! {
        #[test]
        fn reproduces_exact_integrals(coeffs in prop::collection::vec((-9i64..10, 1i64..5), 1..7),
                                      a in -5i64..5, len in 1i64..6) {
            let p = UniPoly::new(coeffs.iter().map(|&(n, d)| ratio(n, d)).collect());
            let deg = coeffs.len() - 1;
            let samples: Vec<_> = (0..=deg as i64)
                .map(|k| { let t = ratio(2 * k - 3, 3); (t.clone(), p.eval(&t)) })
                .collect();
            let (t0, t1) = (int(a), int(a + len));
            let got = interpolate_and_integrate(&samples, deg, (&t0, &t1)).unwrap();
            prop_assert_eq!(got, p.integrate(&t0, &t1));
        }
    }
}
