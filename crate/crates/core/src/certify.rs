//! Runs the oracles against the closed formulas and collects the verdicts in
//! a serializable report.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{ceil_div, ReducedFraction};
use crate::clique::{reduced_ratio, verify_circular_clique};
use crate::coloring::{color, derive_proper_coloring, validate_circular};
use crate::compression::{independence_formula, verify_claims};
use crate::error::{Error, Result};
use crate::graph::{vertex_count_formula, InterlacingGraph};
use crate::oracles::{
    chromatic_number, circular_chromatic_number, max_independent_set, maximal_independent_sets,
    random_independent_set, vertex_independence_ratio, CircularValue, OracleConfig,
    DEFAULT_VERTEX_CAP, MAX_TARGET_ORDER,
};
use crate::polygon::{Parameters, Polygon};
use crate::Fraction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: Option<String>,
    pub observed: Option<String>,
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, status: Status) -> Self {
        Self {
            name: name.to_string(),
            status,
            expected: None,
            observed: None,
            detail: None,
        }
    }

    fn compare(name: &str, expected: impl ToString, observed: impl ToString) -> Self {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let status = if expected == observed {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            expected: Some(expected),
            observed: Some(observed),
            ..Self::new(name, status)
        }
    }

    fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub n: u32,
    pub k: u32,
    pub r: u32,
}

/// Machine-readable result of a CLI run. Field order is the key order of
/// the serialized JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub params: ParamsEcho,
    pub command: String,
    pub checks: Vec<Check>,
    pub witness_paths: Vec<String>,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn new(params: &Parameters, command: &str) -> Self {
        Self {
            params: ParamsEcho {
                n: params.n(),
                k: params.k(),
                r: params.r(),
            },
            command: command.to_string(),
            checks: Vec::new(),
            witness_paths: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// A certificate worth writing to disk, keyed by a file stem.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub name: String,
    pub document: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub alpha: bool,
    pub chi: bool,
    /// Sweep bound for the circular chromatic number; `Some(0)` means `|V|`.
    pub circular: Option<u32>,
    pub clique: bool,
    pub coloring: bool,
    pub claims: bool,
    pub seed: u64,
    pub random_sets: usize,
    /// Maximal independent sets are enumerated only up to this many.
    pub maximal_limit: usize,
    pub vertex_cap: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            alpha: false,
            chi: false,
            circular: None,
            clique: false,
            coloring: false,
            claims: false,
            seed: 0,
            random_sets: 100,
            maximal_limit: 20_000,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl CertifyOptions {
    pub fn all() -> Self {
        Self {
            alpha: true,
            chi: true,
            circular: Some(0),
            clique: true,
            coloring: true,
            claims: true,
            ..Self::default()
        }
    }
}

fn polygons(graph: &InterlacingGraph, set: &[usize]) -> Vec<Vec<u32>> {
    set.iter()
        .map(|&i| graph.vertex(i).points().to_vec())
        .collect()
}

fn refusal(name: &str, err: Error) -> Result<Check> {
    match err {
        Error::CapExceeded { .. } | Error::EnumerationLimit(_) | Error::TargetTooLarge { .. } => {
            Ok(Check::new(name, Status::Skipped).detail(err.to_string()))
        }
        other => Err(other),
    }
}

/// Runs the requested checks. The vertex count check always runs.
pub fn certify(params: &Parameters, options: &CertifyOptions) -> Result<(RunReport, Vec<Witness>)> {
    let start = Instant::now();
    let mut report = RunReport::new(params, "certify");
    let mut witnesses = Vec::new();
    let config = OracleConfig {
        vertex_cap: options.vertex_cap,
    };
    let graph = InterlacingGraph::build(params);
    let v = graph.vertex_count();
    let ratio = reduced_ratio(params);
    let chi_expected = ceil_div(params.n(), params.k());

    report.checks.push(Check::compare(
        "vertex-count",
        vertex_count_formula(params)?,
        v,
    ));

    let alpha_formula = independence_formula(params)?;
    let mut alpha = None;
    if options.alpha {
        let check = match max_independent_set(&graph, &config) {
            Ok(res) => {
                alpha = Some(res.value);
                witnesses.push(Witness {
                    name: "independent-set".into(),
                    document: json!({ "size": res.value, "vertices": polygons(&graph, &res.witness) }),
                });
                Check::compare("independence-number", alpha_formula, res.value)
                    .detail(format!("{} search nodes", res.explored))
            }
            Err(e) => {
                let mut c = refusal("independence-number", e)?;
                c.expected = Some(alpha_formula.to_string());
                c
            }
        };
        report.checks.push(check);
        if let Some(a) = alpha {
            let check = match vertex_independence_ratio(v, a) {
                Some(lb) => Check::compare("vertex-independence-ratio", ratio, lb),
                None => {
                    Check::new("vertex-independence-ratio", Status::Skipped).detail("empty graph")
                }
            };
            report.checks.push(check);
        }
    }

    let mut chi = None;
    if options.chi {
        let check = match chromatic_number(&graph, &config) {
            Ok(res) => {
                chi = Some(res.value);
                witnesses.push(Witness {
                    name: "proper-coloring".into(),
                    document: json!({ "classes": res.value, "colors": res.witness }),
                });
                Check::compare("chromatic-number", chi_expected, res.value)
                    .detail(format!("{} search nodes", res.explored))
            }
            Err(e) => refusal("chromatic-number", e)?,
        };
        report.checks.push(check);
    }

    let mut chi_c: Option<Fraction> = None;
    if let Some(requested) = options.circular {
        let bound = if requested == 0 {
            (v as u32).min(MAX_TARGET_ORDER)
        } else {
            requested
        };
        let check = match circular_chromatic_number(&graph, bound, &config) {
            Ok(res) => {
                if let Some((spec, map)) = &res.witness {
                    witnesses.push(Witness {
                        name: "circular-homomorphism".into(),
                        document: json!({ "order": spec.order, "gap": spec.gap, "labels": map }),
                    });
                }
                let nodes = format!("{} search nodes, max order {bound}", res.explored);
                match res.value {
                    CircularValue::Exact(x) => {
                        chi_c = Some(x);
                        Check::compare("circular-chromatic-number", ratio, x).detail(nodes)
                    }
                    // an upper bound meeting the |V|/alpha lower bound is exact
                    CircularValue::UpperBound(x)
                        if alpha.and_then(|a| vertex_independence_ratio(v, a)) == Some(x) =>
                    {
                        chi_c = Some(x);
                        Check::compare("circular-chromatic-number", ratio, x).detail(format!(
                            "{nodes}; sweep bound met the |V|/alpha lower bound"
                        ))
                    }
                    CircularValue::UpperBound(x) => {
                        let mut c = Check::new("circular-chromatic-number", Status::Skipped)
                            .detail(format!("{nodes}; only an upper bound, exactness needs max order >= |V| or --alpha-exact"));
                        c.expected = Some(ratio.to_string());
                        c.observed = Some(format!("<= {x}"));
                        c
                    }
                    CircularValue::Unknown => {
                        let mut c = Check::new("circular-chromatic-number", Status::Skipped)
                            .detail(format!("{nodes}; no candidate admitted a homomorphism"));
                        c.expected = Some(ratio.to_string());
                        c.observed = Some("unknown".into());
                        c
                    }
                }
            }
            Err(e) => refusal("circular-chromatic-number", e)?,
        };
        report.checks.push(check);
    }

    if options.clique {
        let rep = verify_circular_clique(&graph)?;
        let status = if rep.holds {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut c = Check::new("circular-clique", status).detail(format!(
            "{} members, {} mismatched pairs",
            rep.members.len(),
            rep.mismatches.len()
        ));
        c.expected = Some(format!("K_{{{ratio}}}"));
        c.observed = Some(format!("K_{{{}}}", rep.ratio));
        report.checks.push(c);
    }

    if options.coloring {
        report
            .checks
            .push(coloring_check(&graph, chi_expected, &mut witnesses)?);
    }

    if options.claims {
        report.checks.push(claims_check(&graph, options)?);
    }

    if let (Some(a), Some(c), Some(x)) = (alpha, chi, chi_c) {
        report.checks.push(sandwich(v, a, c, x, ratio));
    }

    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok((report, witnesses))
}

fn coloring_check(
    graph: &InterlacingGraph,
    chi_expected: u32,
    witnesses: &mut Vec<Witness>,
) -> Result<Check> {
    let coloring = color(graph)?;
    let report = validate_circular(graph, &coloring)?;
    let classes = if report.valid {
        let proper = derive_proper_coloring(graph, &coloring)?;
        let mut distinct = proper;
        distinct.sort_unstable();
        distinct.dedup();
        Some(distinct.len() as u32)
    } else {
        None
    };
    witnesses.push(Witness {
        name: "circular-coloring".into(),
        document: serde_json::to_value(crate::export::ColoringDocument::new(
            graph, &coloring, &report,
        ))
        .expect("serializable"),
    });
    let ok = report.valid && classes.is_some_and(|c| c <= chi_expected);
    let mut c = Check::new(
        "circular-coloring",
        if ok { Status::Pass } else { Status::Fail },
    );
    c.expected = Some(format!("0 violations, <= {chi_expected} classes"));
    c.observed = Some(format!(
        "{} violations, {} classes",
        report.violations.len(),
        classes.map_or("-".to_string(), |c| c.to_string())
    ));
    Ok(c)
}

fn claims_check(graph: &InterlacingGraph, options: &CertifyOptions) -> Result<Check> {
    let params = graph.params();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let maximal = if graph.vertex_count() <= options.vertex_cap {
        maximal_independent_sets(graph, options.maximal_limit).ok()
    } else {
        None
    };
    let maximal_count = maximal.as_ref().map(Vec::len);
    sets.extend(maximal.unwrap_or_default());
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    for _ in 0..options.random_sets {
        sets.push(random_independent_set(graph, &mut rng));
    }

    let mut failures = Vec::new();
    for set in &sets {
        let members: Vec<Polygon> = set.iter().map(|&i| graph.vertex(i).clone()).collect();
        for claim in verify_claims(&members, params)? {
            if !claim.holds {
                failures.push(format!(
                    "claim {} fails on {}",
                    claim.claim_id,
                    members
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
        }
    }
    let mut c = Check::new(
        "compression-claims",
        if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
    );
    c.expected = Some("0 failures".into());
    c.observed = Some(format!("{} failures", failures.len()));
    let scope = match maximal_count {
        Some(m) => format!("{m} maximal sets"),
        None => "maximal sets not enumerated".to_string(),
    };
    let mut detail = format!(
        "{scope}, {} random sets (seed {})",
        options.random_sets, options.seed
    );
    if let Some(first) = failures.first() {
        detail.push_str("; ");
        detail.push_str(first);
    }
    Ok(c.detail(detail))
}

/// `|V|/alpha <= chi_c <= chi`, with equality `|V|/alpha = chi_c = n/k`.
fn sandwich(v: usize, alpha: usize, chi: u32, chi_c: Fraction, ratio: Fraction) -> Check {
    let Some(lower) = vertex_independence_ratio(v, alpha) else {
        return Check::new("sandwich", Status::Skipped).detail("empty graph");
    };
    let chi = ReducedFraction::integer(chi as u64);
    let ok = lower <= chi_c && chi_c <= chi && lower == ratio && chi_c == ratio;
    let mut c = Check::new("sandwich", if ok { Status::Pass } else { Status::Fail });
    c.expected = Some(format!("{ratio} = {ratio} <= {chi}"));
    c.observed = Some(format!("{lower} = {chi_c} <= {chi}"));
    c.detail("|V|/alpha, circular chromatic number, chromatic number")
}
