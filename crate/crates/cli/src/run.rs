//! Command dispatch: one JSON result per command, or a classified failure.

use serde_json::{json, Value};
use zonotopal::algebra::parse_rational;
use zonotopal::arrangement::{cocircuits, count_bases, enumerate_bases, rational_subspaces, tutte, chambers};
use zonotopal::dmspace::{dspace_basis, dspace_dims};
use zonotopal::gspaces::{compact_support_betti_fin, filtration_report, stratum_betti_series, GRADING_CONVENTION};
use zonotopal::ideals::{betti_geq, betti_open_stratum, hilbert, subspace_from_indices, IdealSpec};
use zonotopal::splines::{eval_t, eval_tf, local_piece};
use zonotopal::verify::{run_suite, Suite};
use zonotopal::{Error, Rational, RationalSubspace, VectorList};

use crate::cli::{Command, SplineAction};
use crate::input::InputSpec;
use crate::render;

#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Precondition(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Parse(m) => format!("parse error: {m}"),
            Failure::Precondition(m) => format!("precondition violated: {m}"),
            Failure::Internal(m) => format!("internal error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Precondition(e.to_string())
        }
    }
}

pub struct Outcome {
    pub command: String,
    pub args: Value,
    pub result: Value,
    pub conventions: Value,
}

const ACTIVITY_CONVENTION: &str = "degree d of S/I_X counts bases B with external activity e(B) = m - s - d";

fn parse_point(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',')
        .map(|c| parse_rational(c.trim()).ok_or_else(|| Failure::Parse(format!("{c:?} is not a rational number"))))
        .collect()
}

fn parse_subspaces(x: &VectorList, s: &str) -> Result<Vec<RationalSubspace>, Failure> {
    let sets: Vec<Vec<usize>> = serde_json::from_str(s)
        .map_err(|_| Failure::Parse(format!("{s:?} is not a JSON list of index lists")))?;
    Ok(sets.iter().map(|ix| subspace_from_indices(x, ix)).collect::<Result<_, _>>()?)
}

fn parse_level(s: &str) -> Result<usize, Failure> {
    s.parse().map_err(|_| Failure::Parse(format!("{s:?} is not a level")))
}

pub fn execute(command: &Command, spec: &InputSpec) -> Result<Outcome, Failure> {
    let x = &spec.list;
    let (m, s) = (x.len(), x.dim());
    let mut conventions = json!({});
    let (name, args, result) = match command {
        Command::Matroid => {
            let bases = enumerate_bases(x)?;
            let cocs: Vec<Value> = cocircuits(x)?
                .iter()
                .map(|c| json!({ "hyperplane": c.hyperplane.index_set, "cocircuit": c.complement_indices }))
                .collect();
            ("matroid", json!({}), json!({ "rank": x.rank(), "bases": bases, "cocircuits": cocs }))
        }
        Command::Tutte => {
            let t = tutte(x)?;
            let coeffs: Vec<Value> =
                t.poly.coeffs.iter().map(|(&(i, j), &c)| json!({ "x": i, "y": j, "coefficient": c })).collect();
            let acts: Vec<Value> = t
                .activities
                .iter()
                .map(|a| json!({ "basis": a.basis, "internal": a.internal, "external": a.external }))
                .collect();
            conventions["external_activity"] = json!(ACTIVITY_CONVENTION);
            let result = json!({
                "coefficients": coeffs,
                "activities": acts,
                "T(1,1)": t.poly.eval(1, 1).to_string(),
                "T(2,1)": t.poly.eval(2, 1).to_string(),
            });
            ("tutte", json!({}), result)
        }
        Command::Subspaces => {
            let levels: Vec<Value> = rational_subspaces(x)
                .iter()
                .enumerate()
                .map(|(k, l)| json!({ "dim": k, "subspaces": l.iter().map(render::subspace).collect::<Vec<_>>() }))
                .collect();
            ("subspaces", json!({}), json!({ "levels": levels }))
        }
        Command::Chambers => {
            let faces: Vec<Value> = chambers(x)
                .iter()
                .map(|f| json!({ "signs": render::signs(&f.signs), "witness": render::point(&f.witness) }))
                .collect();
            conventions["signs"] = json!("character i of a sign string is the sign of <phi, a_i>");
            ("chambers", json!({}), json!({ "count": faces.len(), "faces": faces }))
        }
        Command::Hilbert { ideal, max_degree } => {
            let spec = match ideal.split_once('=') {
                None if ideal == "full" => IdealSpec::CocircuitFull,
                Some(("level", k)) => IdealSpec::LevelK(parse_level(k)?),
                Some(("subspaces", list)) => IdealSpec::SubspaceSet(parse_subspaces(x, list)?),
                _ => return Err(Failure::Parse(format!("unknown ideal {ideal:?}"))),
            };
            let g = hilbert(x, &spec, *max_degree)?;
            conventions["external_activity"] = json!(ACTIVITY_CONVENTION);
            ("hilbert", json!({ "ideal": ideal, "max_degree": max_degree }), render::graded(&g))
        }
        Command::Betti { stratum, max_degree } => {
            let table = match stratum.split_once('=') {
                Some(("geq", k)) => betti_geq(x, parse_level(k)?, *max_degree)?,
                Some(("open", list)) => betti_open_stratum(x, &parse_subspaces(x, list)?, *max_degree)?,
                _ => return Err(Failure::Parse(format!("unknown stratum {stratum:?}"))),
            };
            let result = json!({
                "entries": render::cohomological(&table.entries),
                "total": table.total(),
                "truncated": table.truncated,
            });
            ("betti", json!({ "stratum": stratum, "max_degree": max_degree }), result)
        }
        Command::Dspace { basis } => {
            let mut result = render::graded(&dspace_dims(x)?);
            if *basis {
                let b = dspace_basis(x)?;
                let per: Vec<Value> = b
                    .by_degree
                    .iter()
                    .enumerate()
                    .map(|(d, fs)| {
                        json!({ "degree": d, "polynomials": fs.iter().map(|f| render::polynomial(&f.monic())).collect::<Vec<_>>() })
                    })
                    .collect();
                result["basis"] = json!(per);
                conventions["basis"] = json!("reduced echelon basis of each degree, each element scaled to leading coefficient 1");
            }
            ("dspace", json!({ "basis": basis }), result)
        }
        Command::Gdims => {
            let r = filtration_report(x)?;
            let levels: Vec<Value> = r
                .levels
                .iter()
                .map(|l| {
                    let terms: Vec<Value> = l
                        .terms
                        .iter()
                        .map(|t| json!({ "indices": t.subspace.index_set, "dspace": render::graded(&t.dspace) }))
                        .collect();
                    json!({ "level": l.level, "dim": l.dim, "subspaces": terms })
                })
                .collect();
            let result = json!({ "levels": levels, "total": r.total, "bases": count_bases(x)? });
            ("gdims", json!({}), result)
        }
        Command::Csbetti { stratum, max_degree } => {
            let max = max_degree.unwrap_or(4 * m);
            let table = match stratum {
                None => compact_support_betti_fin(x, max)?,
                Some(i) => stratum_betti_series(x, *i, max)?,
            };
            let offsets: Vec<Value> = table
                .offsets
                .iter()
                .map(|o| {
                    json!({ "indices": o.index_set, "dim": o.dim, "top_degree": o.top, "free_variables": o.free_variables })
                })
                .collect();
            let top = match table.offsets.as_slice() {
                [only] if only.free_variables == 0 => Some(only.top),
                _ => None,
            };
            conventions["grading"] = json!(GRADING_CONVENTION);
            let result = json!({
                "stratum": table.level,
                "entries": render::compact_support(&table.entries, top),
                "total": table.total(),
                "max_degree": table.max_degree,
                "truncated": table.truncated,
                "offsets": offsets,
            });
            ("csbetti", json!({ "stratum": stratum, "max_degree": max }), result)
        }
        Command::Spline(sp) => match &sp.action {
            SplineAction::Eval { point, face } => {
                let p = parse_point(point)?;
                let value = match face {
                    None => eval_t(x, &p)?,
                    Some(signs) => {
                        let f = chambers(x)
                            .into_iter()
                            .find(|f| &render::signs(&f.signs) == signs)
                            .ok_or_else(|| Error::InvalidFace(format!("{signs:?} is not the sign vector of a regular face")))?;
                        eval_tf(x, &f, &p)?
                    }
                };
                conventions["face"] = json!("T_X^F = (-1)^|B| T_(A,-B) where B holds the vectors with sign -");
                let result = json!({ "point": render::point(&p), "value": render::rational(&value) });
                ("spline eval", json!({ "point": point, "face": face }), result)
            }
            SplineAction::Piece { witness } => {
                let w = parse_point(witness)?;
                let piece = local_piece(x, &w)?;
                let result = json!({
                    "witness": render::point(&piece.chamber_witness),
                    "degree": m - s,
                    "polynomial": render::polynomial(&piece.polynomial),
                });
                ("spline piece", json!({ "witness": witness }), result)
            }
        },
        Command::Verify { suite } => {
            let suites = Suite::parse_selection(suite).map_err(|e| Failure::Parse(e.to_string()))?;
            let reports = suites.into_iter().map(|s| run_suite(x, s)).collect::<Result<Vec<_>, _>>()?;
            let failed: Vec<String> = reports
                .iter()
                .flat_map(|r| r.checks.iter().filter(|c| !c.passed).map(move |c| format!("{}: {}", r.suite, c.name)))
                .collect();
            if !failed.is_empty() {
                return Err(Failure::Internal(format!("verification failed: {}", failed.join("; "))));
            }
            let out: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let checks: Vec<Value> =
                        r.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect();
                    json!({ "suite": r.suite.name(), "passed": r.passed(), "checks": checks })
                })
                .collect();
            ("verify", json!({ "suite": suite }), json!({ "passed": true, "suites": out }))
        }
    };
    conventions["indices"] = json!("vectors are numbered from 0 in input order");
    conventions["rationals"] = json!("exact, as p/q in lowest terms or an integer");
    conventions["degrees"] = json!("polynomial degree d sits in cohomological degree 2d");
    conventions["monomial_order"] = json!("terms listed by descending graded lexicographic order of exponents");
    Ok(Outcome { command: name.to_string(), args, result, conventions })
}
