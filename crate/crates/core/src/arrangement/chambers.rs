use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{pairing_sign, VectorList};
use crate::algebra::{dot, format_point, nullspace, sign, to_rationals, Rational};
use crate::error::{Error, Result};

/// A chamber of the arrangement `{a^⊥ : a ∈ X}` in the dual space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegularFace {
    /// `sign ⟨φ, a_i⟩ ∈ {+1, -1}` per vector.
    pub signs: Vec<i8>,
    /// A rational functional in the chamber.
    pub witness: Vec<Rational>,
}

impl RegularFace {
    /// The face containing `phi`; fails when `phi` lies on some `a^⊥`.
    pub fn from_witness(x: &VectorList, phi: Vec<Rational>) -> Result<Self> {
        if phi.len() != x.dim() {
            return Err(Error::DimensionMismatch { expected: x.dim(), got: phi.len() });
        }
        let signs: Vec<i8> = x.vectors().iter().map(|a| pairing_sign(&phi, a)).collect();
        if signs.contains(&0) {
            return Err(Error::InvalidFace(format!("{} is orthogonal to a vector of X", format_point(&phi))));
        }
        Ok(RegularFace { signs, witness: phi })
    }

    /// Whether the witness is consistent with the sign vector for `x`.
    pub fn validate(&self, x: &VectorList) -> Result<()> {
        if self.signs.len() != x.len() {
            return Err(Error::InvalidFace(format!(
                "{} signs for a list of length {}",
                self.signs.len(),
                x.len()
            )));
        }
        let got = RegularFace::from_witness(x, self.witness.clone())?;
        if got.signs != self.signs {
            return Err(Error::InvalidFace("witness does not realize the sign vector".into()));
        }
        Ok(())
    }
}

/// A cell of a central arrangement: strict sign vector plus interior point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub signs: Vec<i8>,
    pub witness: Vec<Rational>,
}

/// Chambers of the central arrangement with the given normals in `dim`
/// dimensions, by incremental insertion.
///
/// When a hyperplane `a^⊥` is inserted, the cells it splits are exactly the
/// ones meeting `a^⊥`, i.e. the chambers of the arrangement restricted to
/// `a^⊥`. Those are found recursively one dimension lower; each one yields
/// a point `p` on `a^⊥` inside the split cell, and `p ± t·a` for small `t`
/// are witnesses of the two halves.
pub fn hyperplane_chambers(dim: usize, normals: &[Vec<Rational>]) -> Vec<Cell> {
    if normals.iter().any(|n| n.iter().all(Zero::is_zero)) {
        return Vec::new();
    }
    let mut cells = vec![Cell { signs: Vec::new(), witness: vec![Rational::zero(); dim] }];
    for (i, a) in normals.iter().enumerate() {
        let earlier = &normals[..i];
        let perp = nullspace(std::slice::from_ref(a), dim);
        let restricted: Vec<Vec<Rational>> =
            earlier.iter().map(|c| perp.iter().map(|b| dot(c, b)).collect()).collect();
        let crossing: HashMap<Vec<i8>, Vec<Rational>> = hyperplane_chambers(dim - 1, &restricted)
            .into_iter()
            .map(|cell| {
                let mut p = vec![Rational::zero(); dim];
                for (q, b) in cell.witness.iter().zip(&perp) {
                    for (pk, bk) in p.iter_mut().zip(b) {
                        *pk += q * bk;
                    }
                }
                (cell.signs, p)
            })
            .collect();
        let mut next = Vec::with_capacity(cells.len() * 2);
        for cell in cells {
            match crossing.get(&cell.signs) {
                Some(p) => {
                    for dir in [1, -1] {
                        let w = push_off(p, a, dir, earlier, &cell.signs);
                        let mut signs = cell.signs.clone();
                        signs.push(dir);
                        next.push(Cell { signs, witness: w });
                    }
                }
                None => {
                    let s = sign(&dot(&cell.witness, a));
                    debug_assert!(s != 0, "unsplit cell witness lies on the new hyperplane");
                    let mut signs = cell.signs;
                    signs.push(s);
                    next.push(Cell { signs, witness: cell.witness });
                }
            }
        }
        cells = next;
    }
    cells
}

/// `p + dir·t·a` with `t = 2^{-k}` small enough to keep every earlier
/// strict sign.
fn push_off(p: &[Rational], a: &[Rational], dir: i8, earlier: &[Vec<Rational>], signs: &[i8]) -> Vec<Rational> {
    let mut t = Rational::from_integer(BigInt::from(dir));
    loop {
        let w: Vec<Rational> = p.iter().zip(a).map(|(pk, ak)| pk + &t * ak).collect();
        if earlier.iter().zip(signs).all(|(c, &s)| sign(&dot(c, &w)) == s) {
            return w;
        }
        t /= Rational::from_integer(BigInt::from(2));
    }
}

/// Scales a rational vector by a positive factor to a primitive integer
/// vector, preserving every sign of every pairing.
fn normalize_witness(w: &[Rational]) -> Vec<Rational> {
    let lcm = w.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = w.iter().map(|r| (r * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return w.to_vec();
    }
    ints.into_iter().map(|v| Rational::from_integer(v / &g)).collect()
}

/// All regular faces of `X`, in the deterministic insertion order.
pub fn chambers(x: &VectorList) -> Vec<RegularFace> {
    let normals: Vec<Vec<Rational>> = x.vectors().iter().map(|v| to_rationals(v)).collect();
    hyperplane_chambers(x.dim(), &normals)
        .into_iter()
        .map(|c| RegularFace { signs: c.signs, witness: normalize_witness(&c.witness) })
        .collect()
}

/// `X = A ∪ B` with `A` the vectors positive on the face.
pub fn face_split(x: &VectorList, face: &RegularFace) -> Result<(Vec<usize>, Vec<usize>)> {
    face.validate(x)?;
    let a = (0..x.len()).filter(|&i| face.signs[i] > 0).collect();
    let b = (0..x.len()).filter(|&i| face.signs[i] < 0).collect();
    Ok((a, b))
}
