//! Exact pointwise evaluation of the multivariate truncated power `T_X`
//! and its face variants `T_X^F`, and recovery of the polynomial piece of
//! `T_X` on a chamber.
//!
//! `T_X` is the pushforward of Lebesgue measure on the positive orthant
//! under `t ↦ Σ t_i a_i`. Peeling one vector `a` gives
//! `T_X(x) = ∫_0^∞ T_{X∖a}(x − t a) dt`. Between consecutive crossings of
//! walls of `X ∖ a` the integrand is one polynomial piece of `T_{X∖a}`, so
//! each interval is integrated exactly from interpolation samples. Pieces
//! are recovered by interpolating pointwise values on the chamber and are
//! cached per sublist and chamber, which keeps the recursion polynomial in
//! the number of chambers. A list of exactly `s` vectors is the base
//! case: `1/|det|` on the open cone, `0` off it.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    dot, dot_int, format_point, interpolate_and_integrate, monomials_of_degree, solve_square, to_rationals,
    Monomial, MultiPoly, Rational, RowEchelon,
};
use crate::arrangement::{
    chambers, face_split, hyperplane_chambers, hyperplane_normal, subspaces_of_dim, RegularFace, VectorList,
};
use crate::error::{Error, Result};

/// Primitive integer normals of the hyperplanes spanned by rank-`(s−1)`
/// sublists of `X`, in the order of the rational hyperplanes.
pub fn wall_hyperplanes(x: &VectorList) -> Result<Vec<Vec<i64>>> {
    x.require_spanning()?;
    let s = x.dim();
    Ok(subspaces_of_dim(x, s - 1)
        .into_iter()
        .map(|h| hyperplane_normal(s, &h.basis_matrix))
        .collect())
}

/// A functional positive on every vector of `X`, if the cone is acute.
pub fn positive_functional(x: &VectorList) -> Result<Vec<Rational>> {
    chambers(x)
        .into_iter()
        .find(|f| f.signs.iter().all(|&s| s > 0))
        .map(|f| f.witness)
        .ok_or(Error::NonAcute)
}

fn on_some_wall(walls: &[Vec<i64>], p: &[Rational]) -> bool {
    walls.iter().any(|n| dot_int(n, p).is_zero())
}

fn sign_pattern(walls: &[Vec<i64>], p: &[Rational]) -> Vec<bool> {
    walls.iter().map(|n| dot_int(n, p).is_positive()).collect()
}

fn check_point(x: &VectorList, p: &[Rational]) -> Result<()> {
    if p.len() != x.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), got: p.len() });
    }
    if on_some_wall(&wall_hyperplanes(x)?, p) {
        return Err(Error::NonGenericPoint { point: format_point(p) });
    }
    Ok(())
}

/// Deterministic perturbation directions for schedule `k`: small integer
/// vectors from a fixed linear congruential sequence.
fn perturbations(k: usize, count: usize, dim: usize) -> Vec<Vec<i64>> {
    let mut state: u64 = 0x9E37_79B9 ^ (k as u64).wrapping_mul(0x2545_F491);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) % 15) as i64 - 7
                })
                .collect()
        })
        .collect()
}

const SCHEDULES: usize = 8;

fn full_mask(m: usize) -> u64 {
    (1u64 << m) - 1
}

fn determinant(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot = m[c].clone();
        for row in &mut m[c + 1..] {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (v, p) in row.iter_mut().zip(&pivot).skip(c) {
                *v -= &f * p;
            }
        }
    }
    det
}

/// Recursion state for one acute list; sublists are bitmasks over its
/// indices and pieces are keyed by sublist and wall sign pattern.
struct Evaluator {
    vectors: Vec<Vec<i64>>,
    dim: usize,
    phi: Vec<Rational>,
    walls: HashMap<u64, Vec<Vec<i64>>>,
    peel: HashMap<u64, usize>,
    pieces: HashMap<(u64, Vec<bool>), MultiPoly>,
    monomials: HashMap<u32, Vec<Monomial>>,
}

impl Evaluator {
    fn new(x: &VectorList, phi: Vec<Rational>) -> Self {
        assert!(x.len() < 64, "lists longer than 63 vectors are out of range");
        Evaluator {
            vectors: x.vectors().to_vec(),
            dim: x.dim(),
            phi,
            walls: HashMap::new(),
            peel: HashMap::new(),
            pieces: HashMap::new(),
            monomials: HashMap::new(),
        }
    }

    fn members(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.vectors.len()).filter(move |i| mask >> i & 1 == 1)
    }

    fn list(&self, mask: u64) -> VectorList {
        let vs = self.members(mask).map(|i| self.vectors[i].clone()).collect();
        VectorList::new(self.dim, vs).expect("sublists of a valid list are valid")
    }

    fn walls_of(&mut self, mask: u64) -> &[Vec<i64>] {
        if !self.walls.contains_key(&mask) {
            let w = wall_hyperplanes(&self.list(mask)).expect("sublists in the recursion span");
            self.walls.insert(mask, w);
        }
        &self.walls[&mask]
    }

    /// The last vector whose removal keeps the sublist spanning.
    fn peel_index(&mut self, mask: u64) -> usize {
        if let Some(&i) = self.peel.get(&mask) {
            return i;
        }
        let members: Vec<usize> = self.members(mask).collect();
        let i = members
            .into_iter()
            .rev()
            .find(|&i| self.list(mask & !(1 << i)).spans())
            .expect("a list longer than its rank has a removable vector");
        self.peel.insert(mask, i);
        i
    }

    fn base_case(&self, mask: u64, p: &[Rational]) -> Rational {
        let cols: Vec<&Vec<i64>> = self.members(mask).map(|i| &self.vectors[i]).collect();
        let a: Vec<Vec<Rational>> = (0..self.dim)
            .map(|r| cols.iter().map(|c| Rational::from_integer(BigInt::from(c[r]))).collect())
            .collect();
        let coords = solve_square(&a, p).expect("a basis has an invertible matrix");
        if coords.iter().any(|c| !c.is_positive()) {
            return Rational::zero();
        }
        determinant(&a).abs().recip()
    }

    /// `T` of the sublist at a point off its walls.
    fn eval(&mut self, mask: u64, p: &[Rational]) -> Result<Rational> {
        let m = mask.count_ones() as usize;
        if m == self.dim {
            return Ok(self.base_case(mask, p));
        }
        let height = dot(&self.phi, p);
        if !height.is_positive() {
            return Ok(Rational::zero());
        }
        let j = self.peel_index(mask);
        let a = to_rationals(&self.vectors[j]);
        let rest = mask & !(1 << j);
        let t_max = height / dot(&self.phi, &a);

        let mut cuts: Vec<Rational> = self
            .walls_of(rest)
            .iter()
            .filter_map(|n| {
                let den = dot_int(n, &a);
                if den.is_zero() {
                    return None;
                }
                let t = dot_int(n, p) / den;
                (t.is_positive() && t < t_max).then_some(t)
            })
            .collect();
        cuts.sort();
        cuts.dedup();
        cuts.insert(0, Rational::zero());
        cuts.push(t_max);

        let along = |t: &Rational| -> Vec<Rational> { p.iter().zip(&a).map(|(pi, ai)| pi - t * ai).collect() };
        // the integrand has degree m − 1 − s on each interval
        let nodes = m - self.dim;
        let mut total = Rational::zero();
        for win in cuts.windows(2) {
            let (lo, hi) = (&win[0], &win[1]);
            let mid = (lo + hi) / Rational::from_integer(BigInt::from(2));
            let piece = self.piece(rest, &along(&mid))?;
            if piece.is_zero() {
                continue;
            }
            let step = (hi - lo) / Rational::from_integer(BigInt::from(nodes + 1));
            let samples = (1..=nodes)
                .map(|k| {
                    let t = lo + &step * Rational::from_integer(BigInt::from(k));
                    let v = piece.evaluate(&along(&t))?;
                    Ok((t, v))
                })
                .collect::<Result<Vec<_>>>()?;
            total += interpolate_and_integrate(&samples, nodes - 1, (lo, hi))?;
        }
        Ok(total)
    }

    /// Polynomial of `T` of the sublist on the chamber of its walls that
    /// contains `w`.
    fn piece(&mut self, mask: u64, w: &[Rational]) -> Result<MultiPoly> {
        let walls = self.walls_of(mask).to_vec();
        let key = (mask, sign_pattern(&walls, w));
        if let Some(p) = self.pieces.get(&key) {
            return Ok(p.clone());
        }
        let m = mask.count_ones() as usize;
        let poly = if m == self.dim {
            MultiPoly::constant(self.dim, self.base_case(mask, w))
        } else if !dot(&self.phi, w).is_positive() {
            MultiPoly::zero(self.dim)
        } else {
            self.interpolate(mask, w, &walls, &key.1)?
        };
        self.pieces.insert(key, poly.clone());
        Ok(poly)
    }

    fn interpolate(&mut self, mask: u64, w: &[Rational], walls: &[Vec<i64>], pattern: &[bool]) -> Result<MultiPoly> {
        let s = self.dim;
        let degree = (mask.count_ones() as usize - s) as u32;
        let basis = self
            .monomials
            .entry(degree)
            .or_insert_with(|| monomials_of_degree(s, degree))
            .clone();
        let n = basis.len();
        let scale = w.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::one);
        for k in 0..SCHEDULES {
            let dirs = perturbations(k, n + 1, s);
            let mut eps = Rational::new(BigInt::one(), BigInt::from(16)) * &scale;
            let points: Vec<Vec<Rational>> = loop {
                let pts: Vec<Vec<Rational>> = dirs
                    .iter()
                    .map(|d| w.iter().zip(d).map(|(wi, &dk)| wi + &eps * BigInt::from(dk)).collect())
                    .collect();
                if pts.iter().all(|q| !on_some_wall(walls, q) && sign_pattern(walls, q) == pattern) {
                    break pts;
                }
                eps /= Rational::from_integer(BigInt::from(4));
            };
            let rows: Vec<Vec<Rational>> = points[..n]
                .iter()
                .map(|q| {
                    basis
                        .iter()
                        .map(|mono| MultiPoly::monomial(mono.clone(), Rational::one()).evaluate(q))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?;
            if RowEchelon::from_rows(n, rows.iter().cloned()).rank() < n {
                continue;
            }
            let values = points[..n].iter().map(|q| self.eval(mask, q)).collect::<Result<Vec<_>>>()?;
            let coeffs = solve_square(&rows, &values).expect("rank checked");
            let poly = MultiPoly::from_coefficient_row(&basis, &coeffs, s);
            let holdout = &points[n];
            if poly.evaluate(holdout)? != self.eval(mask, holdout)? {
                return Err(Error::HoldoutMismatch(format_point(holdout)));
            }
            return Ok(poly);
        }
        Err(Error::SingularInterpolation)
    }
}

/// Density of `T_X` at a generic point, for `X` spanning an acute cone.
pub fn eval_t(x: &VectorList, point: &[Rational]) -> Result<Rational> {
    x.require_spanning()?;
    let phi = positive_functional(x)?;
    check_point(x, point)?;
    Evaluator::new(x, phi).eval(full_mask(x.len()), point)
}

/// `(A, −B)` for the face, as a list in the original order with the
/// vectors of `B` negated.
pub fn flipped_list(x: &VectorList, face: &RegularFace) -> Result<VectorList> {
    let (_, b) = face_split(x, face)?;
    let vs = x
        .vectors()
        .iter()
        .enumerate()
        .map(|(i, v)| if b.contains(&i) { v.iter().map(|c| -c).collect() } else { v.clone() })
        .collect();
    VectorList::new(x.dim(), vs)
}

/// `T_X^F = (−1)^{|B|} T_{(A,−B)}` at a generic point.
pub fn eval_tf(x: &VectorList, face: &RegularFace, point: &[Rational]) -> Result<Rational> {
    x.require_spanning()?;
    let (_, b) = face_split(x, face)?;
    let z = flipped_list(x, face)?;
    check_point(&z, point)?;
    let v = Evaluator::new(&z, face.witness.clone()).eval(full_mask(z.len()), point)?;
    Ok(if b.len() % 2 == 1 { -v } else { v })
}

/// Exact polynomial of `T_X` on one chamber of its wall arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplinePiece {
    pub chamber_witness: Vec<Rational>,
    pub polynomial: MultiPoly,
}

/// Interpolates the homogeneous polynomial of degree `m − s` that `T_X`
/// restricts to on the chamber containing `witness`, validated against a
/// holdout evaluation.
pub fn local_piece(x: &VectorList, witness: &[Rational]) -> Result<SplinePiece> {
    x.require_spanning()?;
    let phi = positive_functional(x)?;
    check_point(x, witness)?;
    let polynomial = Evaluator::new(x, phi).piece(full_mask(x.len()), witness)?;
    Ok(SplinePiece { chamber_witness: witness.to_vec(), polynomial })
}

/// Interior points, one per chamber of the arrangement of wall
/// hyperplanes of `X` (including chambers outside the cone).
pub fn fan_chambers(x: &VectorList) -> Result<Vec<Vec<Rational>>> {
    let walls: Vec<Vec<Rational>> = wall_hyperplanes(x)?.iter().map(|n| to_rationals(n)).collect();
    Ok(hyperplane_chambers(x.dim(), &walls).into_iter().map(|c| c.witness).collect())
}

/// The pieces of `T_X` on every chamber of its wall arrangement.
pub fn local_pieces(x: &VectorList) -> Result<Vec<SplinePiece>> {
    x.require_spanning()?;
    let mut ev = Evaluator::new(x, positive_functional(x)?);
    let full = full_mask(x.len());
    fan_chambers(x)?
        .into_iter()
        .map(|w| Ok(SplinePiece { polynomial: ev.piece(full, &w)?, chamber_witness: w }))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeletionOutcome {
    /// `X ∖ a` does not span.
    Skipped,
    Checked { holds: bool, chambers: usize },
}

/// Checks `∂_a T_X = T_{X∖a}` piecewise on every chamber of the wall
/// arrangement of `X`, for every `a` in `X`.
pub fn verify_deletions(x: &VectorList) -> Result<Vec<DeletionOutcome>> {
    x.require_spanning()?;
    let mut ev = Evaluator::new(x, positive_functional(x)?);
    let full = full_mask(x.len());
    let witnesses = fan_chambers(x)?;
    let big = witnesses.iter().map(|w| ev.piece(full, w)).collect::<Result<Vec<_>>>()?;
    (0..x.len())
        .map(|i| {
            let rest = full & !(1 << i);
            if x.len() == x.dim() || !x.without(i)?.spans() {
                return Ok(DeletionOutcome::Skipped);
            }
            let mut holds = true;
            for (w, p) in witnesses.iter().zip(&big) {
                if p.directional_derivative(x.vector(i))? != ev.piece(rest, w)? {
                    holds = false;
                    break;
                }
            }
            Ok(DeletionOutcome::Checked { holds, chambers: witnesses.len() })
        })
        .collect()
}

/// [`verify_deletions`] for a single index.
pub fn verify_deletion(x: &VectorList, index: usize) -> Result<DeletionOutcome> {
    x.require_spanning()?;
    if index >= x.len() {
        return Err(Error::InvalidIndex { index, len: x.len() });
    }
    Ok(verify_deletions(x)?.swap_remove(index))
}
