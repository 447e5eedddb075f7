use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{factorial, Rational};
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// All monomials of total degree `degree` in `nvars` variables, listed in
/// descending graded-lexicographic order (`x0^d` first).
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn fill(rest: u32, pos: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = rest;
            out.push(cur.clone());
            return;
        }
        for e in (0..=rest).rev() {
            cur[pos] = e;
            fill(rest - e, pos + 1, cur, out);
        }
    }
    if nvars == 0 {
        return if degree == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    fill(degree, 0, &mut vec![0; nvars], &mut out);
    out
}

/// Sparse polynomial in `nvars` variables with rational coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial has an empty
/// term map and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exponents: Monomial, coefficient: Rational) -> Self {
        let mut p = MultiPoly::zero(exponents.len());
        if !coefficient.is_zero() {
            p.terms.insert(exponents, coefficient);
        }
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    /// The linear form `Σ a_i x_i`.
    pub fn linear_form(a: &[i64]) -> Self {
        let n = a.len();
        let mut p = MultiPoly::zero(n);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, Rational::from_integer(BigInt::from(c)));
            }
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximal total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Divides by the leading coefficient in grlex order (the zero
    /// polynomial is returned unchanged).
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Largest term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut f = e.clone();
                f[var] -= 1;
                out.add_term(f, c * BigInt::from(e[var]));
            }
        }
        out
    }

    /// `∂_a p = Σ a_i ∂p/∂x_i`.
    pub fn directional_derivative(&self, a: &[i64]) -> Result<Self> {
        if a.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: a.len() });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            for (i, &ai) in a.iter().enumerate() {
                if ai != 0 && e[i] > 0 {
                    let mut f = e.clone();
                    f[i] -= 1;
                    out.add_term(f, c * BigInt::from(ai as i128 * e[i] as i128));
                }
            }
        }
        Ok(out)
    }

    /// `∂_Y p = Π_{a∈Y} ∂_a p`.
    pub fn product_operator(&self, ys: &[Vec<i64>]) -> Result<Self> {
        let mut out = self.clone();
        for a in ys {
            if out.is_zero() {
                if a.len() != self.nvars {
                    return Err(Error::DimensionMismatch { expected: self.nvars, got: a.len() });
                }
                continue;
            }
            out = out.directional_derivative(a)?;
        }
        Ok(out)
    }

    /// Applies `self` as a constant-coefficient differential operator
    /// `self(∂)` to `f`.
    pub fn apply_as_operator(&self, f: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, f.nvars);
        let mut out = MultiPoly::zero(f.nvars);
        for (d, c) in &self.terms {
            for (e, v) in &f.terms {
                if d.iter().zip(e).all(|(a, b)| a <= b) {
                    // ∂^d x^e = e!/(e-d)! x^(e-d)
                    let mut coef = c * v;
                    let mut g = e.clone();
                    for i in 0..e.len() {
                        for k in 0..d[i] {
                            coef *= BigInt::from(e[i] - k);
                        }
                        g[i] -= d[i];
                    }
                    out.add_term(g, coef);
                }
            }
        }
        out
    }

    /// The apolar pairing `(self(∂) f)(0)`.
    pub fn apolar_pairing(&self, f: &MultiPoly) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            if let Some(v) = f.terms.get(e) {
                let w: BigInt = e.iter().map(|&k| factorial(k)).product();
                acc += c * v * w;
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Dense coefficient row against an ordered monomial basis. Terms not in
    /// the basis are dropped; callers pass a basis containing the support.
    pub fn coefficient_row(&self, basis: &[Monomial]) -> Vec<Rational> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn from_coefficient_row(basis: &[Monomial], row: &[Rational], nvars: usize) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in basis.iter().zip(row) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    fn combine(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), if negate { -c } else { c.clone() });
        }
        out
    }
}

/// Graded lexicographic comparison of exponent vectors.
pub(crate) fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                let g: Monomial = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, c * d);
            }
        }
        out
    }
}

const NAMES: [&str; 3] = ["x", "y", "z"];

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| grlex_cmp(b.0, a.0));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            if is_const || !mag.is_one() {
                write!(f, "{}", mag)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if self.nvars <= 3 {
                    write!(f, "{}", NAMES[i])?;
                } else {
                    write!(f, "x{}", i)?;
                }
                if p > 1 {
                    write!(f, "^{}", p)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}
