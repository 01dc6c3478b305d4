//! Command dispatch and output assembly.
//!
//! Exit codes: 0 on success, 1 when the input is well-formed but the
//! requested computation does not apply to it (non-isolated singularity,
//! wrong parity, inconsistent weights), 2 for usage and parse errors.
//! Output is deterministic: JSON objects are emitted with sorted keys and
//! nothing in the payload depends on time or environment.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use eigenspec::{
    base_change, best_node_bound, boundary_local_spectrum, bp_eigenspectrum, eigenspace_ranks,
    eigenspectrum, hyperplane_cover_hodge, infer_weights, lmhs, mixed_spectrum,
    sign_multiplicity_total, CoverConfig, DiagonalAutomorphism, EigenSpectrum,
    EigenSpectrumEntry, LmhsDiamond, Polynomial, Rational, Stratum, SurfaceInvariants, UnitClass,
    Verdict, WeightInference, WeightVector, WeightedHypersurfaceConfig, RECORD_EXAMPLES,
};

use crate::text;

#[derive(ClapParser)]
#[command(
    name = "eigenspec",
    version,
    about = "Exact spectra of quasi-homogeneous singularities, node bounds, and limit Hodge tables"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
pub enum Command {
    /// Mixed spectrum (or eigenspectrum) of a quasi-homogeneous polynomial.
    Spectrum {
        /// Polynomial expression, e.g. "x^3 + y^2".
        #[arg(long)]
        poly: String,
        /// Ordered variable names, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Rational weights, e.g. "1/3,1/2"; inferred when omitted.
        #[arg(long)]
        weights: Option<String>,
        /// Automorphism twist vector, e.g. "1,0".
        #[arg(long = "aut-c")]
        aut_c: Option<String>,
        /// Automorphism order.
        #[arg(long = "aut-order")]
        aut_order: Option<u64>,
    },
    /// Closed-form eigenspectrum of a sum of pure powers.
    Bp {
        /// Exponents, comma separated, e.g. "3,3".
        #[arg(long)]
        lambdas: String,
        /// Twist vector, comma separated, e.g. "0,1".
        #[arg(long)]
        c: String,
        /// Automorphism order.
        #[arg(long)]
        l: u64,
    },
    /// Base change s -> s^k applied to a serialized eigenspectrum.
    Basechange {
        /// JSON file holding a spectrum list or a `spectrum` envelope.
        #[arg(long)]
        spectrum: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Node bounds for a degree-d hypersurface in weighted projective space.
    Bound {
        /// Ambient weights e_0,...,e_{n+1}, comma separated integers.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        degree: u64,
        /// Euler characteristic of the structure sheaf (surfaces only).
        #[arg(long)]
        chi: Option<i64>,
        /// Canonical self-intersection, rational (surfaces only).
        #[arg(long)]
        ksq: Option<String>,
    },
    /// Symmetric-orbit obstruction at odd dimension n.
    Symcheck {
        #[arg(long)]
        n: usize,
        /// Include the per-orbit table in the output.
        #[arg(long)]
        orbits: bool,
    },
    /// Limit mixed Hodge diamond along a boundary stratum.
    Hassett {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        j: u64,
        /// Stratum type, A or B.
        #[arg(long)]
        stratum: String,
    },
    /// Hodge numbers of the double cover branched along 2n+2 hyperplanes.
    HodgeCover {
        #[arg(long)]
        n: u64,
    },
    /// Known nodal hypersurfaces used as reference points.
    Registry,
}

/// Result of one invocation.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct CliError {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

impl From<eigenspec::Error> for CliError {
    fn from(e: eigenspec::Error) -> Self {
        CliError {
            code: if e.is_not_applicable() { 1 } else { 2 },
            message: e.to_string(),
        }
    }
}

impl From<text::ParseError> for CliError {
    fn from(e: text::ParseError) -> Self {
        usage(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name) without touching
/// the process environment.
pub fn run(args: impl IntoIterator<Item = String>) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match dispatch(cli.command, cli.format) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    }
}

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(i) => json!(i),
        None => json!(n.to_string()),
    }
}

fn parse_list<T: FromStr>(input: &str, what: &str) -> Result<Vec<T>, CliError> {
    input
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|_| usage(format!("invalid {what} entry {s:?}")))
        })
        .collect()
}

fn parse_rational(input: &str, what: &str) -> Result<Rational, CliError> {
    Rational::from_str(input.trim())
        .map_err(|_| usage(format!("invalid {what}: {input:?}")))
}

fn emit(format: Format, command: &str, payload: Value, table: String) -> String {
    match format {
        Format::Json => {
            let mut object = match payload {
                Value::Object(map) => map,
                other => {
                    let mut map = Map::new();
                    map.insert("result".to_string(), other);
                    map
                }
            };
            object.insert("schema".to_string(), json!(1));
            object.insert("command".to_string(), json!(command));
            let mut out = serde_json::to_string_pretty(&Value::Object(object)).unwrap();
            out.push('\n');
            out
        }
        Format::Table => table,
    }
}

fn aligned_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let render = |cells: &[String], widths: &[usize], out: &mut String| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    render(&header, &widths, &mut out);
    for row in rows {
        render(row, &widths, &mut out);
    }
    out
}

fn spectrum_rows(s: &EigenSpectrum, with_gamma: bool) -> Vec<Vec<String>> {
    s.entries()
        .map(|(e, m)| {
            let mut row = vec![e.alpha.to_string(), e.weight.to_string()];
            if with_gamma {
                row.push(e.gamma.to_string());
            }
            row.push(m.to_string());
            row
        })
        .collect()
}

fn dispatch(command: Command, format: Format) -> Result<String, CliError> {
    match command {
        Command::Spectrum { poly, vars, weights, aut_c, aut_order } => {
            cmd_spectrum(format, &poly, &vars, weights.as_deref(), aut_c.as_deref(), aut_order)
        }
        Command::Bp { lambdas, c, l } => cmd_bp(format, &lambdas, &c, l),
        Command::Basechange { spectrum, k } => cmd_basechange(format, &spectrum, k),
        Command::Bound { weights, degree, chi, ksq } => {
            cmd_bound(format, &weights, degree, chi, ksq.as_deref())
        }
        Command::Symcheck { n, orbits } => cmd_symcheck(format, n, orbits),
        Command::Hassett { m, j, stratum } => cmd_hassett(format, m, j, &stratum),
        Command::HodgeCover { n } => cmd_hodge_cover(format, n),
        Command::Registry => Ok(cmd_registry(format)),
    }
}

fn cmd_spectrum(
    format: Format,
    poly: &str,
    vars: &[String],
    weights: Option<&str>,
    aut_c: Option<&str>,
    aut_order: Option<u64>,
) -> Result<String, CliError> {
    if vars.is_empty() {
        return Err(usage("at least one variable is required"));
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(usage(format!("duplicate variable {v:?}")));
        }
    }
    let f: Polynomial = text::parse_polynomial(poly, vars)?;

    let (w, inferred) = match weights {
        Some(list) => {
            let parsed: Vec<Rational> = list
                .split(',')
                .map(|s| parse_rational(s, "weight"))
                .collect::<Result<_, _>>()?;
            if parsed.len() != vars.len() {
                return Err(usage(format!(
                    "expected {} weights, got {}",
                    vars.len(),
                    parsed.len()
                )));
            }
            (WeightVector::new(parsed)?, false)
        }
        None => match infer_weights(&f)? {
            WeightInference::Unique(w) => (w, true),
            WeightInference::Indeterminate => {
                return Err(CliError {
                    code: 1,
                    message: "weights are indeterminate for this support; pass --weights"
                        .to_string(),
                })
            }
            WeightInference::Inconsistent => {
                return Err(CliError {
                    code: 1,
                    message: "no positive weight vector fits this support".to_string(),
                })
            }
        },
    };

    let automorphism = match (aut_c, aut_order) {
        (Some(c), Some(order)) => {
            let twists: Vec<i64> = parse_list(c, "twist")?;
            if twists.len() != vars.len() {
                return Err(usage(format!(
                    "expected {} twist entries, got {}",
                    vars.len(),
                    twists.len()
                )));
            }
            Some(DiagonalAutomorphism::new(order, &twists)?)
        }
        (None, None) => None,
        _ => return Err(usage("--aut-c and --aut-order must be given together")),
    };

    let weight_strings: Vec<String> = w.weights().iter().map(|x| x.to_string()).collect();
    let mut payload = json!({
        "variables": vars,
        "weights": weight_strings,
        "weights_inferred": inferred,
        "ambient_dim_plus_one": vars.len(),
    });

    let table;
    match &automorphism {
        Some(g) => {
            let s = eigenspectrum(&f, &w, g)?;
            payload["automorphism"] = json!({
                "order": g.order(),
                "twists": g.twists(),
            });
            payload["milnor_number"] = int_value(&s.total());
            payload["spectrum"] = s.to_json();
            table = aligned_table(
                &["alpha", "weight", "gamma", "mult"],
                &spectrum_rows(&s, true),
            );
        }
        None => {
            let s = mixed_spectrum(&f, &w)?;
            payload["milnor_number"] = int_value(&s.total());
            payload["spectrum"] = s.to_json();
            let rows = s
                .entries()
                .map(|(e, m)| {
                    vec![e.alpha.to_string(), e.weight.to_string(), m.to_string()]
                })
                .collect::<Vec<_>>();
            table = aligned_table(&["alpha", "weight", "mult"], &rows);
        }
    }
    Ok(emit(format, "spectrum", payload, table))
}

fn cmd_bp(format: Format, lambdas: &str, c: &str, l: u64) -> Result<String, CliError> {
    let lambdas: Vec<u64> = parse_list(lambdas, "lambda")?;
    let twists: Vec<i64> = parse_list(c, "twist")?;
    if lambdas.is_empty() {
        return Err(usage("at least one exponent is required"));
    }
    if lambdas.len() != twists.len() {
        return Err(usage(format!(
            "expected {} twist entries, got {}",
            lambdas.len(),
            twists.len()
        )));
    }
    if lambdas.contains(&0) {
        return Err(usage("exponents must be positive"));
    }
    if l == 0 {
        return Err(usage("the order l must be positive"));
    }
    let s = bp_eigenspectrum(&lambdas, &twists, l);
    let payload = json!({
        "lambdas": lambdas,
        "c": twists,
        "l": l,
        "ambient_dim_plus_one": lambdas.len(),
        "milnor_number": int_value(&s.total()),
        "spectrum": s.to_json(),
    });
    let table = aligned_table(&["alpha", "weight", "gamma", "mult"], &spectrum_rows(&s, true));
    Ok(emit(format, "bp", payload, table))
}

/// Reads an eigenspectrum from a JSON value: either a bare entry list or
/// an envelope containing `spectrum` and optionally `ambient_dim_plus_one`.
/// Entries without a `gamma` field get the trivial eigenvalue.
fn spectrum_from_json(value: &Value) -> Result<EigenSpectrum, CliError> {
    let (list, ambient_hint) = match value {
        Value::Array(list) => (list, None),
        Value::Object(map) => {
            let list = map
                .get("spectrum")
                .and_then(Value::as_array)
                .ok_or_else(|| usage("missing \"spectrum\" array"))?;
            (list, map.get("ambient_dim_plus_one").and_then(Value::as_u64))
        }
        _ => return Err(usage("expected a spectrum list or envelope")),
    };
    let mut entries: Vec<(EigenSpectrumEntry, BigInt)> = Vec::new();
    for item in list {
        let alpha = item
            .get("alpha")
            .and_then(Value::as_str)
            .ok_or_else(|| usage("entry missing \"alpha\""))?;
        let alpha = parse_rational(alpha, "alpha")?;
        let weight = item
            .get("weight")
            .and_then(Value::as_u64)
            .ok_or_else(|| usage("entry missing \"weight\""))? as usize;
        let gamma = match item.get("gamma") {
            Some(Value::String(s)) => UnitClass::new(parse_rational(s, "gamma")?),
            None => UnitClass::zero(),
            _ => return Err(usage("\"gamma\" must be a string")),
        };
        let mult = match item.get("mult") {
            Some(Value::Number(n)) => {
                BigInt::from(n.as_i64().ok_or_else(|| usage("invalid \"mult\""))?)
            }
            Some(Value::String(s)) => s
                .parse::<BigInt>()
                .map_err(|_| usage(format!("invalid \"mult\": {s:?}")))?,
            _ => return Err(usage("entry missing \"mult\"")),
        };
        entries.push((EigenSpectrumEntry { alpha, weight, gamma }, mult));
    }
    let nvars = ambient_hint
        .map(|v| v as usize)
        .or_else(|| entries.iter().map(|(e, _)| e.weight).max())
        .unwrap_or(1)
        .max(1);
    Ok(EigenSpectrum::from_entries(nvars, entries))
}

fn cmd_basechange(format: Format, path: &PathBuf, k: u64) -> Result<String, CliError> {
    if k == 0 {
        return Err(usage("k must be positive"));
    }
    let raw = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&raw)
        .map_err(|e| usage(format!("invalid JSON in {}: {e}", path.display())))?;
    let s = spectrum_from_json(&value)?;
    let changed = base_change(&s, k);
    let payload = json!({
        "k": k,
        "ambient_dim_plus_one": changed.ambient_dim_plus_one(),
        "spectrum": changed.to_json(),
    });
    let table = aligned_table(
        &["alpha", "weight", "gamma", "mult"],
        &spectrum_rows(&changed, true),
    );
    Ok(emit(format, "basechange", payload, table))
}

fn cmd_bound(
    format: Format,
    weights: &str,
    degree: u64,
    chi: Option<i64>,
    ksq: Option<&str>,
) -> Result<String, CliError> {
    let ambient: Vec<u64> = parse_list(weights, "weight")?;
    let cfg = WeightedHypersurfaceConfig::new(ambient, degree)?;
    let surface = match (chi, ksq) {
        (Some(chi), Some(ksq)) => Some(SurfaceInvariants {
            chi,
            canonical_square: parse_rational(ksq, "ksq")?,
        }),
        (None, None) => None,
        _ => return Err(usage("--chi and --ksq must be given together")),
    };
    let report = best_node_bound(&cfg, surface.as_ref());

    let mut payload = report.to_json();
    payload["ambient_weights"] = json!(cfg.ambient_weights());
    payload["degree"] = json!(cfg.degree());
    payload["n"] = json!(cfg.dim());
    payload["cover_degrees"] = json!(cfg.cover_degrees());

    let fmt_opt = |v: &Option<BigInt>| match v {
        Some(x) => x.to_string(),
        None => "-".to_string(),
    };
    let rows = vec![
        vec!["naive".to_string(), fmt_opt(&report.naive), report.naive_note.clone()],
        vec![
            "spectral".to_string(),
            report.spectral.to_string(),
            report.spectral_note.clone(),
        ],
        vec!["miyaoka".to_string(), fmt_opt(&report.miyaoka), report.miyaoka_note.clone()],
        vec![
            "best".to_string(),
            report.best.to_string(),
            format!("from the {} bound", report.best_source),
        ],
    ];
    let mut table = aligned_table(&["bound", "value", "note"], &rows);
    for w in &report.warnings {
        table.push_str(&format!("warning: {w}\n"));
    }
    Ok(emit(format, "bound", payload, table))
}

fn cmd_symcheck(format: Format, n: usize, orbits: bool) -> Result<String, CliError> {
    let report = sign_multiplicity_total(n)?;
    let payload = report.to_json(orbits);
    let mut rows = vec![
        vec!["n".to_string(), report.n.to_string()],
        vec!["monomials".to_string(), report.monomial_count.to_string()],
        vec!["orbits".to_string(), report.orbit_count.to_string()],
        vec![
            "sign multiplicity".to_string(),
            report.total_sign_multiplicity.to_string(),
        ],
        vec!["verdict".to_string(), report.verdict.as_str().to_string()],
    ];
    if report.verdict == Verdict::Obstructed {
        rows.push(vec![
            "meaning".to_string(),
            "no node orbit of full size is possible".to_string(),
        ]);
    }
    let mut table = aligned_table(&["field", "value"], &rows);
    if orbits {
        let orbit_rows: Vec<Vec<String>> = report
            .orbits
            .iter()
            .map(|o| {
                vec![
                    format!("{:?}", o.representative.entries()),
                    o.size.to_string(),
                    o.sign_multiplicity.to_string(),
                ]
            })
            .collect();
        table.push('\n');
        table.push_str(&aligned_table(
            &["representative", "size", "sign multiplicity"],
            &orbit_rows,
        ));
    }
    Ok(emit(format, "symcheck", payload, table))
}

fn diamond_table(d: &LmhsDiamond) -> String {
    let mut out = String::new();
    out.push_str("        q=1  q=0\n");
    out.push_str(&format!("  p=1 [ {:>3}  {:>3} ]\n", d.h[1][1], d.h[1][0]));
    out.push_str(&format!("  p=0 [ {:>3}  {:>3} ]\n", d.h[0][1], d.h[0][0]));
    out.push_str(&format!("N rank: {}\n", d.n_rank));
    out.push_str(&format!("rank sum: {}\n", d.rank_sum()));
    for e in &d.eigenvalues {
        match e.hodge_type {
            Some((p, q)) => out.push_str(&format!(
                "eigenvalue e({}): dimension {} of type ({p},{q})\n",
                e.eigenvalue, e.dimension
            )),
            None => out.push_str(&format!(
                "eigenvalue e({}): dimension {}\n",
                e.eigenvalue, e.dimension
            )),
        }
    }
    if d.consistency_flag {
        out.push_str("consistency flag: rank sum disagrees with the generic rank\n");
    }
    out
}

fn cmd_hassett(format: Format, m: u64, j: u64, stratum: &str) -> Result<String, CliError> {
    let stratum: Stratum = stratum.parse().map_err(usage)?;
    let cfg = CoverConfig::new(m, j)?;
    let ranks = eigenspace_ranks(&cfg);
    let diamond = lmhs(&cfg, stratum);
    let local = boundary_local_spectrum(m, stratum);

    let mut payload = diamond.to_json();
    payload["m"] = json!(m);
    payload["j"] = json!(j);
    payload["stratum"] = json!(stratum.as_str());
    payload["generic_ranks"] = ranks.to_json();
    payload["local_spectrum"] = local.to_json();

    let mut table = format!("stratum {} at m = {m}, j = {j}\n", stratum.as_str());
    table.push_str(&diamond_table(&diamond));
    Ok(emit(format, "hassett", payload, table))
}

fn cmd_hodge_cover(format: Format, n: u64) -> Result<String, CliError> {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let row = hyperplane_cover_hodge(n);
    let total: BigInt = row.iter().sum();
    let payload = json!({
        "n": n,
        "hodge_numbers": row.iter().map(int_value).collect::<Vec<_>>(),
        "total": int_value(&total),
    });
    let rows: Vec<Vec<String>> = row
        .iter()
        .enumerate()
        .map(|(p, h)| vec![format!("h^({},{})", p, n as usize - p), h.to_string()])
        .collect();
    let mut table = aligned_table(&["piece", "dimension"], &rows);
    table.push_str(&format!("total: {total}\n"));
    Ok(emit(format, "hodge-cover", payload, table))
}

fn cmd_registry(format: Format) -> String {
    let payload = json!({
        "examples": RECORD_EXAMPLES.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
    });
    let rows: Vec<Vec<String>> = RECORD_EXAMPLES
        .iter()
        .map(|e| {
            vec![
                e.label.to_string(),
                format!("{:?}", e.ambient_weights),
                e.degree.to_string(),
                e.nodes.to_string(),
                e.source.to_string(),
            ]
        })
        .collect();
    let table = aligned_table(&["example", "weights", "degree", "nodes", "source"], &rows);
    emit(format, "registry", payload, table)
}
