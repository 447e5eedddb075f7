use num_traits::{One, Zero};

use super::Rational;

/// Incrementally maintained reduced row echelon form over the rationals.
///
/// Rows are kept sorted by pivot column with unit pivots, and every pivot
/// column is zero in all other rows. Column order is the caller's basis
/// order, so pivots land on the earliest (largest) basis elements.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    ncols: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon { ncols, rows: Vec::new() }
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut e = RowEchelon::new(ncols);
        for r in rows {
            e.insert(r);
            if e.is_full() {
                break;
            }
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Reduces `row` against the current basis; the remainder is zero iff
    /// `row` lies in the row space.
    pub fn reduce(&self, mut row: Vec<Rational>) -> Vec<Rational> {
        debug_assert_eq!(row.len(), self.ncols);
        for (p, r) in &self.rows {
            if row[*p].is_zero() {
                continue;
            }
            let f = row[*p].clone();
            for (x, y) in row.iter_mut().zip(r).skip(*p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        row
    }

    pub fn contains(&self, row: Vec<Rational>) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }

    /// Adds `row` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<Rational>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut row = self.reduce(row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].recip();
        if !inv.is_one() {
            for x in row.iter_mut().skip(p) {
                *x *= &inv;
            }
        }
        for (_, r) in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, row));
        true
    }
}

/// Basis of `{v : A v = 0}` for the matrix with the given rows, returned in
/// reduced row echelon form with respect to the column order.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let ech = RowEchelon::from_rows(ncols, rows.iter().cloned());
    let pivots: Vec<usize> = ech.pivots().collect();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kernel = (0..ncols).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = vec![Rational::zero(); ncols];
        v[f] = Rational::one();
        for (p, r) in ech.rows.iter() {
            v[*p] = -r[f].clone();
        }
        v
    });
    let basis = RowEchelon::from_rows(ncols, kernel);
    basis.rows.into_iter().map(|(_, r)| r).collect()
}

/// Solves `A x = b` for square nonsingular `A`; `None` when singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let aug = a.iter().zip(b).map(|(r, v)| {
        let mut row = r.clone();
        row.push(v.clone());
        row
    });
    let ech = RowEchelon::from_rows(n + 1, aug);
    if ech.rank() != n || ech.pivots().any(|p| p == n) {
        return None;
    }
    Some(ech.rows().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = RowEchelon::new(3);
        assert!(e.insert(row(&[1, 2, 3])));
        assert!(e.insert(row(&[2, 4, 7])));
        assert!(!e.insert(row(&[3, 6, 10])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(&[0, 0, 5])));
        assert!(!e.contains(row(&[0, 1, 0])));
    }

    #[test]
    fn rref_rows_are_reduced() {
        let e = RowEchelon::from_rows(3, vec![row(&[0, 2, 4]), row(&[1, 1, 1])]);
        let rows: Vec<Vec<Rational>> = e.rows().map(|r| r.to_vec()).collect();
        assert_eq!(rows, vec![row(&[1, 0, -1]), row(&[0, 1, 2])]);
    }

    #[test]
    fn nullspace_annihilates() {
        let a = vec![row(&[1, 1, 0, 0]), row(&[0, 0, 1, 1])];
        let k = nullspace(&a, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in &a {
                let s: Rational = r.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(s.is_zero());
            }
        }
        assert_eq!(k[0], row(&[1, -1, 0, 0]));
    }

    #[test]
    fn solves_square_systems() {
        let a = vec![row(&[2, 1]), row(&[1, 3])];
        let x = solve_square(&a, &row(&[5, 10])).unwrap();
        assert_eq!(x, row(&[1, 3]));
        let singular = vec![row(&[1, 2]), row(&[2, 4])];
        assert!(solve_square(&singular, &row(&[1, 2])).is_none());
    }

    #[test]
    fn nullspace_of_empty_matrix_is_everything() {
        assert_eq!(nullspace(&[], 2), vec![row(&[1, 0]), row(&[0, 1])]);
    }
}
