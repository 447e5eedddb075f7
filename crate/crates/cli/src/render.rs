//! JSON encodings of engine values.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use serde_json::{json, Value};
use zonotopal::algebra::format_rational;
use zonotopal::{GradedDims, MultiPoly, Rational, RationalSubspace};

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn point(p: &[Rational]) -> Value {
    Value::Array(p.iter().map(rational).collect())
}

/// Terms in descending graded lexicographic order, plus a readable form.
pub fn polynomial(f: &MultiPoly) -> Value {
    let mut terms: Vec<_> = f.terms().collect();
    terms.sort_by_key(|(e, _)| Reverse((e.iter().sum::<u32>(), (*e).clone())));
    json!({
        "terms": terms
            .into_iter()
            .map(|(e, c)| json!({ "exponents": e, "coefficient": rational(c) }))
            .collect::<Vec<_>>(),
        "text": f.to_string(),
    })
}

pub fn graded(g: &GradedDims) -> Value {
    json!({
        "dims": (0..g.len())
            .map(|d| json!({ "degree": d, "cohomological_degree": 2 * d, "dim": g.get(d) }))
            .collect::<Vec<_>>(),
        "total": g.total(),
        "truncated": g.truncated,
    })
}

/// Polynomial degree `h / 2` next to each cohomological degree `h`.
pub fn cohomological(entries: &BTreeMap<usize, usize>) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|(&h, &n)| {
                let degree = if h % 2 == 0 { json!(h / 2) } else { Value::Null };
                json!({ "cohomological_degree": h, "degree": degree, "dim": n })
            })
            .collect(),
    )
}

pub fn subspace(r: &RationalSubspace) -> Value {
    json!({ "indices": r.index_set, "dim": r.dim, "basis": r.basis_matrix })
}

pub fn signs(s: &[i8]) -> String {
    s.iter().map(|&v| if v > 0 { '+' } else { '-' }).collect()
}

/// Compact-support entries with the degree of the `D(X)` class each one
/// comes from, `(top − h) / 2`, when a single term is present.
pub fn compact_support(entries: &BTreeMap<usize, usize>, top: Option<usize>) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|(&h, &n)| {
                let mut e = json!({ "cohomological_degree": h, "dim": n });
                if let Some(t) = top {
                    e["dspace_degree"] = json!((t - h) / 2);
                }
                e
            })
            .collect(),
    )
}
