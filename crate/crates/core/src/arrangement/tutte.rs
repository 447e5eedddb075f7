use std::collections::BTreeMap;

use super::{enumerate_bases, VectorList};
use crate::error::Result;

/// Tutte polynomial `Σ c_ij x^i y^j` with nonnegative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TuttePoly {
    pub coeffs: BTreeMap<(u32, u32), u64>,
}

impl TuttePoly {
    pub fn eval(&self, x: i128, y: i128) -> i128 {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| c as i128 * x.pow(i) * y.pow(j))
            .sum()
    }
}

/// Activity statistics of one basis under the list order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisActivity {
    pub basis: Vec<usize>,
    pub internal: u32,
    pub external: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteReport {
    pub poly: TuttePoly,
    pub activities: Vec<BasisActivity>,
}

impl TutteReport {
    /// Number of bases with each external activity, indexed by activity.
    pub fn external_activity_counts(&self) -> Vec<usize> {
        let max = self.activities.iter().map(|a| a.external).max().unwrap_or(0) as usize;
        let mut out = vec![0; max + 1];
        for a in &self.activities {
            out[a.external as usize] += 1;
        }
        out
    }
}

/// Tutte polynomial by the activity expansion `Σ_B x^{i(B)} y^{e(B)}`.
///
/// An element `e ∉ B` is externally active when it is the smallest element
/// of its fundamental circuit in `B ∪ {e}`; `b ∈ B` is internally active
/// when it is the smallest element of its fundamental cocircuit.
pub fn tutte(x: &VectorList) -> Result<TutteReport> {
    let bases = enumerate_bases(x)?;
    let m = x.len();
    let swap_is_basis = |b: &[usize], out: usize, inn: usize| {
        let mut c: Vec<usize> = b.iter().copied().filter(|&i| i != out).collect();
        c.push(inn);
        x.is_independent(&c)
    };
    let mut poly = TuttePoly::default();
    let mut activities = Vec::with_capacity(bases.len());
    for b in bases {
        let in_b = |i: usize| b.binary_search(&i).is_ok();
        let mut external = 0;
        for e in (0..m).filter(|&e| !in_b(e)) {
            // fundamental circuit: e together with every b whose exchange with e is a basis
            let min = b
                .iter()
                .copied()
                .filter(|&bi| swap_is_basis(&b, bi, e))
                .chain(std::iter::once(e))
                .min()
                .unwrap();
            if min == e {
                external += 1;
            }
        }
        let mut internal = 0;
        for &bi in &b {
            let min = (0..m)
                .filter(|&e| e == bi || (!in_b(e) && swap_is_basis(&b, bi, e)))
                .min()
                .unwrap();
            if min == bi {
                internal += 1;
            }
        }
        *poly.coeffs.entry((internal, external)).or_default() += 1;
        activities.push(BasisActivity { basis: b, internal, external });
    }
    Ok(TutteReport { poly, activities })
}
