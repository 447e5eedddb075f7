//! Named verification suites over a single list `X`, each a flat list of
//! exact checks.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::arrangement::{chambers, count_bases, rational_subspaces, tutte, RationalSubspace, VectorList};
use crate::dmspace::{annihilator_check, deletion_maps_onto, dspace_dims, duality_pairing_matrix, is_nonsingular};
use crate::error::{Error, Result};
use crate::gspaces::{
    compact_support_betti_fin, exact_sequence_check, filtration_dim_by_sublists, filtration_report,
    stratum_betti_series,
};
use crate::ideals::{activity_hilbert, close_downward, hilbert, verify_lamain, IdealSpec};
use crate::splines::{flipped_list, positive_functional, verify_deletions, DeletionOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Lamain,
    Duality,
    ExactSeq,
    Tutte,
    Spline,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Lamain, Suite::Duality, Suite::ExactSeq, Suite::Tutte, Suite::Spline];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lamain => "lamain",
            Suite::Duality => "duality",
            Suite::ExactSeq => "exactseq",
            Suite::Tutte => "tutte",
            Suite::Spline => "spline",
        }
    }

    /// `"all"` expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.parse().map(|suite| vec![suite])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool) {
        self.0.push(Check { name: name.into(), passed });
    }
}

fn index_set(r: &RationalSubspace) -> String {
    format!("{{{}}}", r.index_set.iter().join(","))
}

/// Admissible sets of rational subspaces. For `s ≤ 2` these are all of
/// them (closures of antichains); above that a deterministic sample:
/// closures of single subspaces, of whole levels, and of neighbouring
/// pairs within a level.
pub fn admissible_sets(x: &VectorList) -> Vec<Vec<RationalSubspace>> {
    let levels = rational_subspaces(x);
    let mut out: Vec<Vec<RationalSubspace>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut add = |q: Vec<RationalSubspace>| {
        let key: Vec<Vec<usize>> = q.iter().map(|r| r.index_set.clone()).collect();
        if seen.insert(key) {
            out.push(q);
        }
    };
    if x.dim() <= 2 {
        let all: Vec<&RationalSubspace> = levels.iter().flatten().collect();
        let mut chain = Vec::new();
        antichains(&all, 0, &mut chain, &mut |a| add(close_downward(x, a)));
    } else {
        add(Vec::new());
        for level in &levels {
            for r in level {
                add(close_downward(x, std::slice::from_ref(r)));
            }
            add(close_downward(x, level));
            for pair in level.windows(2) {
                add(close_downward(x, pair));
            }
        }
    }
    out
}

fn antichains<'a>(
    all: &[&'a RationalSubspace],
    from: usize,
    chosen: &mut Vec<RationalSubspace>,
    visit: &mut dyn FnMut(&[RationalSubspace]),
) {
    visit(chosen);
    for i in from..all.len() {
        let r = all[i];
        if chosen.iter().any(|c| c.is_subspace_of(r) || r.is_subspace_of(c)) {
            continue;
        }
        chosen.push(r.clone());
        antichains(all, i + 1, chosen, visit);
        chosen.pop();
    }
}

fn lamain(x: &VectorList, out: &mut Checks) -> Result<()> {
    for q in admissible_sets(x) {
        let Some(top) = q.iter().map(|r| r.dim).max() else {
            continue;
        };
        let label = q.iter().map(index_set).join(" ");
        for s in q.iter().filter(|r| r.dim == top) {
            let report = verify_lamain(x, &q, s, None)?;
            out.push(format!("Q = [{label}], s = {}", index_set(s)), report.holds);
        }
    }
    Ok(())
}

fn duality(x: &VectorList, out: &mut Checks) -> Result<()> {
    let m = x.len();
    let top = m - x.dim();
    let d = dspace_dims(x)?;
    let h = hilbert(x, &IdealSpec::CocircuitFull, Some(m))?;
    for k in 0..=m {
        out.push(format!("degree {k}: dim D = dim S/I_X"), d.get(k) == h.get(k));
    }
    for k in 0..=top {
        out.push(format!("degree {k}: pairing nonsingular"), is_nonsingular(&duality_pairing_matrix(x, k)?));
    }
    for k in 0..=x.dim() {
        out.push(format!("level {k}: small subspaces annihilate D"), annihilator_check(x, k)?);
    }
    for i in 0..m {
        if x.without(i).is_ok_and(|y| y.spans()) {
            out.push(format!("index {i}: derivative maps D onto D of the deletion"), deletion_maps_onto(x, i)?);
        }
    }
    Ok(())
}

fn exactseq(x: &VectorList, out: &mut Checks) -> Result<()> {
    let (m, s) = (x.len(), x.dim());
    let report = filtration_report(x)?;
    for i in 0..s {
        out.push(format!("level {i}: exact"), exact_sequence_check(x, i)?);
    }
    for i in 0..=s {
        out.push(
            format!("level {i}: dim G_i by sublists"),
            report.dim_at(i) == filtration_dim_by_sublists(x, i),
        );
    }
    out.push("dim G = T(2, 1)", report.total as i128 == tutte(x)?.poly.eval(2, 1));
    let max = 4 * m;
    let fin = compact_support_betti_fin(x, max)?;
    let d = dspace_dims(x)?.total();
    out.push("compact support total = d(X)", fin.total() == d);
    out.push(
        "compact support in even degrees of [2m, 4m-2s]",
        fin.entries.keys().all(|&h| h % 2 == 0 && 2 * m <= h && h <= 4 * m - 2 * s),
    );
    out.push("top stratum series = compact support", stratum_betti_series(x, s, max)?.entries == fin.entries);
    Ok(())
}

fn tutte_suite(x: &VectorList, out: &mut Checks) -> Result<()> {
    let h = hilbert(x, &IdealSpec::CocircuitFull, None)?;
    let t = tutte(x)?;
    let bases = count_bases(x)?;
    out.push("dim S/I_X = T(1, 1)", h.total() as i128 == t.poly.eval(1, 1));
    out.push("T(1, 1) = number of bases", t.poly.eval(1, 1) == bases as i128);
    let predicted = activity_hilbert(x)?;
    for d in 0..=x.len() - x.dim() {
        out.push(format!("degree {d}: external activity count"), h.get(d) == predicted.get(d));
    }
    Ok(())
}

/// Deletion identities for `T_X` when the cone is acute; otherwise for
/// `T_X^F` on every regular face `F`, through the flipped lists `(A, −B)`.
fn spline(x: &VectorList, out: &mut Checks) -> Result<()> {
    let lists: Vec<(String, VectorList)> = if positive_functional(x).is_ok() {
        vec![("T_X".to_string(), x.clone())]
    } else {
        chambers(x)
            .iter()
            .map(|f| {
                let signs: String = f.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
                Ok((format!("face {signs}"), flipped_list(x, f)?))
            })
            .collect::<Result<_>>()?
    };
    for (label, z) in lists {
        for (i, outcome) in verify_deletions(&z)?.into_iter().enumerate() {
            if let DeletionOutcome::Checked { holds, chambers } = outcome {
                out.push(format!("{label}: deletion of {i} on {chambers} chambers"), holds);
            }
        }
    }
    Ok(())
}

pub fn run_suite(x: &VectorList, suite: Suite) -> Result<SuiteReport> {
    x.require_spanning()?;
    let mut out = Checks(Vec::new());
    match suite {
        Suite::Lamain => lamain(x, &mut out)?,
        Suite::Duality => duality(x, &mut out)?,
        Suite::ExactSeq => exactseq(x, &mut out)?,
        Suite::Tutte => tutte_suite(x, &mut out)?,
        Suite::Spline => spline(x, &mut out)?,
    }
    Ok(SuiteReport { suite, checks: out.0 })
}
