//! Batch CLI over the homspace engines.
//!
//! Exit codes: 0 on success, 1 on a mathematical signal (`NotDivisible` and
//! friends, reported in the envelope's status field), 2 on usage or parse
//! errors.

mod render;

use clap::{Args, Parser, Subcommand};
use homspace::embeddings::{fixtures as efix, DivisibilityOutcome, OrbitPoset};
use homspace::fq_oracle::{
    self, ClassicalKind, MatrixGroupEquations, OracleBudget, OracleError,
};
use homspace::groupspec::parse_group_spec;
use homspace::homogeneous::{
    chain_check, CheckStatus, GroupSpec, HomogeneousError, HomogeneousPair, SubgroupSpec,
    VerificationReport,
};
use homspace::weylcore::{
    load_matrix_group, molien_series, weyl_enumerate, WeylError, DEFAULT_ENUMERATION_CAP,
};
use render::{
    coeff_strings, e_poly_json, e_poly_string, poly_json, poly_output, poly_string,
    ratfunc_json, ratfunc_string, render_envelope, CommandOutput, Format,
};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "homspace",
    version,
    about = "Exact Poincaré-type invariants of homogeneous spaces and their embeddings"
)]
struct Cli {
    /// Output format for the result envelope
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Cap on enumerated Weyl-group orders (overrides HOMSPACE_WEYL_CAP)
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// Ambient group spec, e.g. "SO(6)" or "A1xA1+U2"
    #[arg(long)]
    g: String,
    /// Connected subgroup spec (alternative: --h-weyl)
    #[arg(long, conflicts_with_all = ["h_weyl", "h_u"])]
    h: Option<String>,
    /// Generator file for the Weyl-like group of a disconnected subgroup
    #[arg(long, requires = "h_u")]
    h_weyl: Option<PathBuf>,
    /// Positive-root count of the identity component (with --h-weyl)
    #[arg(long)]
    h_u: Option<usize>,
    /// Extra unipotent dimension of the disconnected subgroup
    #[arg(long, default_value_t = 0)]
    h_unipotent: usize,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct EmbedSource {
    /// Name of a built-in fixture (see `homspace fixtures`)
    #[arg(long)]
    fixture: Option<String>,
    /// Orbit-poset file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Fundamental degrees and basic invariants of a group spec
    Degrees {
        #[arg(long)]
        g: String,
    },
    /// Hilbert series of the Weyl-invariant ring
    Fseries {
        #[arg(long)]
        g: String,
    },
    /// Half-Poincaré polynomial of the full flag variety
    Flagpoly {
        #[arg(long)]
        g: String,
    },
    /// Molien series of an enumerated Weyl group or a generator file
    Molien {
        #[arg(long, conflicts_with = "weyl")]
        g: Option<String>,
        #[arg(long)]
        weyl: Option<PathBuf>,
    },
    /// The factor Q of the homogeneous space G/H
    Qpoly {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Half-Poincaré polynomial of G/H
    Poincare {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// E-polynomial of G/H as monomials in s·t
    Epoly {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Predicted number of points of G/H over F_q
    Count {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        q: u64,
    },
    /// Poincaré polynomial of the finite-isotropy torus quotient of G/H
    Zpoly {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Structural verification report for G/H
    Verify1 {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Multiplicativity of Q along a chain K ⊆ H ⊆ G
    Chain {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        k: String,
    },
    /// Total half-Poincaré polynomial of an orbit poset
    EmbedTotal {
        #[command(flatten)]
        src: EmbedSource,
    },
    /// Quotient R = total / Q_open of an orbit poset
    EmbedR {
        #[command(flatten)]
        src: EmbedSource,
    },
    /// Per-orbit divisibility report, optionally with a group-completion check
    EmbedVerify {
        #[command(flatten)]
        src: EmbedSource,
        /// Check divisibility by the flag polynomial of this group
        #[arg(long)]
        completion_of: Option<String>,
    },
    /// Brute-force order of a classical matrix group over F_p
    OracleOrder {
        #[arg(long, value_enum)]
        kind: OracleKind,
        /// Matrix size
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Ambient kind for --kind torus
        #[arg(long, value_enum)]
        ambient: Option<OracleKind>,
        /// Block sizes for --kind levi, e.g. 2,1
        #[arg(long, value_delimiter = ',')]
        blocks: Option<Vec<usize>>,
        /// Search-node budget
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Brute-force point count of G/H over F_p by order quotient
    OracleCount {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// List the built-in orbit-poset fixtures
    Fixtures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum OracleKind {
    Gl,
    Sl,
    So,
    Sp,
    Torus,
    Levi,
}

struct CliError {
    code: String,
    message: String,
    usage: bool,
}

impl CliError {
    fn usage(code: &str, message: String) -> Self {
        CliError {
            code: code.into(),
            message,
            usage: true,
        }
    }

    fn math(code: &str, message: String) -> Self {
        CliError {
            code: code.into(),
            message,
            usage: false,
        }
    }
}

impl From<homspace::groupspec::SpecParseError> for CliError {
    fn from(e: homspace::groupspec::SpecParseError) -> Self {
        CliError::usage(e.code(), e.to_string())
    }
}

impl From<HomogeneousError> for CliError {
    fn from(e: HomogeneousError) -> Self {
        CliError::math(e.code(), e.to_string())
    }
}

impl From<homspace::exactalg::ExactAlgError> for CliError {
    fn from(e: homspace::exactalg::ExactAlgError) -> Self {
        CliError::math(e.code(), e.to_string())
    }
}

impl From<WeylError> for CliError {
    fn from(e: WeylError) -> Self {
        match &e {
            WeylError::GeneratorParse { .. }
            | WeylError::SingularGenerator { .. }
            | WeylError::InvalidRank { .. } => CliError::usage(e.code(), e.to_string()),
            _ => CliError::math(e.code(), e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match &e {
            OracleError::UnsupportedModulus { .. }
            | OracleError::UnsupportedSize { .. }
            | OracleError::InvalidEquations { .. } => CliError::usage(e.code(), e.to_string()),
            _ => CliError::math(e.code(), e.to_string()),
        }
    }
}

impl From<homspace::embeddings::EmbedError> for CliError {
    fn from(e: homspace::embeddings::EmbedError) -> Self {
        use homspace::embeddings::EmbedError as E;
        match &e {
            E::Parse { .. } | E::Spec(_) | E::InvalidPoset { .. } => {
                CliError::usage(e.code(), e.to_string())
            }
            E::Homogeneous(inner) => inner.clone().into(),
            E::Exact(inner) => inner.clone().into(),
            _ => CliError::math(e.code(), e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_echo = std::env::args().collect::<Vec<_>>().join(" ");
    match run(&cli) {
        Ok(output) => {
            print!(
                "{}",
                render_envelope(&command_echo, "ok", None, Some(&output), cli.format)
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!(
                "{}",
                render_envelope(&command_echo, &e.code, Some(&e.message), None, cli.format)
            );
            if e.usage {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn resolve_cap(cli: &Cli) -> usize {
    cli.cap
        .or_else(|| {
            std::env::var("HOMSPACE_WEYL_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| {
        CliError::usage("IoError", format!("cannot read {}: {e}", path.display()))
    })
}

fn parse_spec(text: &str) -> Result<GroupSpec, CliError> {
    Ok(parse_group_spec(text)?)
}

fn build_pair(args: &PairArgs, cap: usize) -> Result<HomogeneousPair, CliError> {
    let g = parse_spec(&args.g)?;
    let h = match (&args.h, &args.h_weyl) {
        (Some(h), None) => SubgroupSpec::Connected(parse_spec(h)?),
        (None, Some(path)) => {
            let text = read_file(path)?;
            let weyl = load_matrix_group(&text, cap)?;
            let u = args.h_u.expect("clap enforces --h-u with --h-weyl");
            SubgroupSpec::disconnected(weyl, u, args.h_unipotent)?
        }
        _ => {
            return Err(CliError::usage(
                "UsageError",
                "exactly one of --h or --h-weyl is required".into(),
            ))
        }
    };
    Ok(HomogeneousPair::new(g, h)?)
}

fn load_poset(src: &EmbedSource) -> Result<OrbitPoset, CliError> {
    match (&src.fixture, &src.file) {
        (Some(name), None) => efix::by_name(name).ok_or_else(|| {
            CliError::usage(
                "UnknownFixture",
                format!(
                    "no fixture `{name}`; available: {}",
                    efix::names().join(", ")
                ),
            )
        }),
        (None, Some(path)) => Ok(OrbitPoset::parse(&read_file(path)?)?),
        _ => unreachable!("clap enforces the source group"),
    }
}

fn run(cli: &Cli) -> Result<CommandOutput, CliError> {
    let cap = resolve_cap(cli);
    match &cli.command {
        Command::Degrees { g } => {
            let spec = parse_spec(g)?;
            let t = &spec.reductive;
            Ok(CommandOutput {
                json: json!({
                    "type": spec.to_string(),
                    "degrees": t.degrees(),
                    "rank": t.rank(),
                    "positive_roots": t.positive_roots(),
                    "weyl_order": t.weyl_order().to_string(),
                    "dim": spec.dim(),
                }),
                text: vec![
                    format!("type: {spec}"),
                    format!(
                        "degrees: {}",
                        t.degrees()
                            .iter()
                            .map(|d| d.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                    format!("rank: {}", t.rank()),
                    format!("positive roots: {}", t.positive_roots()),
                    format!("|W| = {}", t.weyl_order()),
                    format!("dim = {}", spec.dim()),
                ],
                latex: vec![format!(
                    "d_i = {}",
                    t.degrees()
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                )],
            })
        }
        Command::Fseries { g } => {
            let spec = parse_spec(g)?;
            let f = spec.reductive.f_series();
            Ok(CommandOutput {
                json: json!({ "f_series": ratfunc_json(&f) }),
                text: vec![format!("F(z) = {}", ratfunc_string(&f, false))],
                latex: vec![format!("F(z) = {}", ratfunc_string(&f, true))],
            })
        }
        Command::Flagpoly { g } => {
            let spec = parse_spec(g)?;
            Ok(poly_output("B", &spec.reductive.flag_poly()))
        }
        Command::Molien { g, weyl } => {
            let group = match (g, weyl) {
                (Some(g), None) => {
                    let spec = parse_spec(g)?;
                    weyl_enumerate(&spec.reductive, cap)?
                }
                (None, Some(path)) => load_matrix_group(&read_file(path)?, cap)?,
                _ => {
                    return Err(CliError::usage(
                        "UsageError",
                        "exactly one of --g or --weyl is required".into(),
                    ))
                }
            };
            let f = molien_series(&group);
            Ok(CommandOutput {
                json: json!({
                    "order": group.order(),
                    "dim": group.dim(),
                    "molien": ratfunc_json(&f),
                }),
                text: vec![
                    format!("|W| = {}", group.order()),
                    format!("F(z) = {}", ratfunc_string(&f, false)),
                ],
                latex: vec![format!("F(z) = {}", ratfunc_string(&f, true))],
            })
        }
        Command::Qpoly { pair } => {
            let q = build_pair(pair, cap)?.q_poly()?;
            Ok(poly_output("Q", &q))
        }
        Command::Poincare { pair } => {
            let p = build_pair(pair, cap)?.half_poincare()?;
            Ok(CommandOutput {
                json: json!({ "half_poincare": poly_json(&p) }),
                text: vec![
                    format!("p(z) = {}", poly_string(&p, "z", 1, false)),
                    format!("P(t) = {}", poly_string(&p, "t", 2, false)),
                ],
                latex: vec![format!("P(t) = {}", poly_string(&p, "t", 2, true))],
            })
        }
        Command::Epoly { pair } => {
            let monomials = build_pair(pair, cap)?.e_monomials()?;
            Ok(CommandOutput {
                json: json!({ "e_polynomial": e_poly_json(&monomials) }),
                text: vec![format!("E(s,t) = {}", e_poly_string(&monomials, false))],
                latex: vec![format!("E(s,t) = {}", e_poly_string(&monomials, true))],
            })
        }
        Command::Count { pair, q } => {
            let count = build_pair(pair, cap)?.point_count(*q)?;
            Ok(CommandOutput {
                json: json!({ "q": q, "count": count.to_string() }),
                text: vec![format!("points over F_{q}: {count}")],
                latex: vec![format!("{count}")],
            })
        }
        Command::Zpoly { pair } => {
            let p = build_pair(pair, cap)?.z_poincare()?;
            Ok(poly_output("base", &p))
        }
        Command::Verify1 { pair } => {
            let report = build_pair(pair, cap)?.verify();
            Ok(verification_output(&report))
        }
        Command::Chain { g, h, k } => {
            let (g, h, k) = (parse_spec(g)?, parse_spec(h)?, parse_spec(k)?);
            let holds = chain_check(&g, &h, &k)?;
            let q_gk = HomogeneousPair::connected(g.clone(), k.clone())?.q_poly()?;
            let q_gh = HomogeneousPair::connected(g.clone(), h.clone())?.q_poly()?;
            let q_hk = HomogeneousPair::connected(h.clone(), k.clone())?.q_poly()?;
            Ok(CommandOutput {
                json: json!({
                    "holds": holds,
                    "q_gk": poly_json(&q_gk),
                    "q_gh": poly_json(&q_gh),
                    "q_hk": poly_json(&q_hk),
                }),
                text: vec![
                    format!("Q(G/K) = {}", poly_string(&q_gk, "z", 1, false)),
                    format!("Q(G/H) = {}", poly_string(&q_gh, "z", 1, false)),
                    format!("Q(H/K) = {}", poly_string(&q_hk, "z", 1, false)),
                    format!("multiplicative: {holds}"),
                ],
                latex: vec![format!("\\text{{multiplicative: {holds}}}")],
            })
        }
        Command::EmbedTotal { src } => {
            let x = load_poset(src)?;
            let total = x.total_half_poincare();
            let orbits: Vec<Value> = x
                .orbits()
                .iter()
                .map(|o| {
                    let p = x.orbit_half_poincare(&o.label).expect("orbit exists");
                    json!({ "label": o.label, "half_poincare": poly_json(p) })
                })
                .collect();
            let mut text = vec![
                format!("total p(z) = {}", poly_string(&total, "z", 1, false)),
                format!("total P(t) = {}", poly_string(&total, "t", 2, false)),
            ];
            for o in x.orbits() {
                let p = x.orbit_half_poincare(&o.label).expect("orbit exists");
                text.push(format!(
                    "  orbit {}: {}",
                    o.label,
                    poly_string(p, "z", 1, false)
                ));
            }
            Ok(CommandOutput {
                json: json!({ "total": poly_json(&total), "orbits": orbits }),
                text,
                latex: vec![format!("P_X(t) = {}", poly_string(&total, "t", 2, true))],
            })
        }
        Command::EmbedR { src } => {
            let x = load_poset(src)?;
            let r = x.r_poly()?;
            let q = x.open_q()?;
            let total = x.total_half_poincare();
            Ok(CommandOutput {
                json: json!({
                    "r": poly_json(&r),
                    "q_open": poly_json(&q),
                    "total": poly_json(&total),
                }),
                text: vec![
                    format!("total(z) = {}", poly_string(&total, "z", 1, false)),
                    format!("Q_open(z) = {}", poly_string(&q, "z", 1, false)),
                    format!("R(z) = {}", poly_string(&r, "z", 1, false)),
                    format!("R in t (z = t^2): {}", poly_string(&r, "t", 2, false)),
                ],
                latex: vec![format!("R_X(t) = {}", poly_string(&r, "t", 2, true))],
            })
        }
        Command::EmbedVerify { src, completion_of } => {
            let x = load_poset(src)?;
            embed_verify_output(&x, completion_of.as_deref())
        }
        Command::OracleOrder {
            kind,
            n,
            p,
            ambient,
            blocks,
            max_nodes,
        } => {
            let eq = oracle_equations(*kind, *n, ambient.as_ref().copied(), blocks.as_deref())?;
            let budget = oracle_budget(*max_nodes);
            let order =
                fq_oracle::enumerate_order_with(&eq, *p, Default::default(), budget)?;
            Ok(CommandOutput {
                json: json!({ "p": p, "n": n, "order": order.to_string() }),
                text: vec![format!("order = {order}")],
                latex: vec![format!("{order}")],
            })
        }
        Command::OracleCount {
            g,
            h,
            p,
            max_nodes,
        } => {
            let pair = HomogeneousPair::connected(parse_spec(g)?, parse_spec(h)?)?;
            let budget = oracle_budget(*max_nodes);
            let count =
                fq_oracle::homogeneous_count_with(&pair, *p, Default::default(), budget)?;
            Ok(CommandOutput {
                json: json!({ "p": p, "count": count.to_string() }),
                text: vec![format!("points over F_{p} by enumeration: {count}")],
                latex: vec![format!("{count}")],
            })
        }
        Command::Fixtures => {
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for name in efix::names() {
                let x = efix::by_name(name).expect("catalog name");
                rows.push(json!({
                    "name": name,
                    "orbits": x.orbits().len(),
                    "open": x.open_orbit().label,
                    "complete": x.is_complete(),
                }));
                text.push(format!(
                    "{name}: {} orbits, open = {}, complete = {}",
                    x.orbits().len(),
                    x.open_orbit().label,
                    x.is_complete()
                ));
            }
            Ok(CommandOutput {
                json: json!({ "fixtures": rows }),
                latex: text.clone(),
                text,
            })
        }
    }
}

fn oracle_budget(max_nodes: Option<u64>) -> OracleBudget {
    match max_nodes {
        Some(max_nodes) => OracleBudget { max_nodes },
        None => OracleBudget::default(),
    }
}

fn oracle_equations(
    kind: OracleKind,
    n: usize,
    ambient: Option<OracleKind>,
    blocks: Option<&[usize]>,
) -> Result<MatrixGroupEquations, CliError> {
    let classical = |k: OracleKind| -> Result<ClassicalKind, CliError> {
        match k {
            OracleKind::Gl => Ok(ClassicalKind::GeneralLinear),
            OracleKind::Sl => Ok(ClassicalKind::SpecialLinear),
            OracleKind::So => Ok(ClassicalKind::SplitOrthogonal),
            OracleKind::Sp => Ok(ClassicalKind::Symplectic),
            _ => Err(CliError::usage(
                "UsageError",
                "--ambient must be one of gl, sl, so, sp".into(),
            )),
        }
    };
    Ok(match kind {
        OracleKind::Gl => MatrixGroupEquations::general_linear(n)?,
        OracleKind::Sl => MatrixGroupEquations::special_linear(n)?,
        OracleKind::So => MatrixGroupEquations::split_orthogonal(n)?,
        OracleKind::Sp => MatrixGroupEquations::symplectic(n)?,
        OracleKind::Torus => {
            let ambient = classical(ambient.ok_or_else(|| {
                CliError::usage("UsageError", "--kind torus requires --ambient".into())
            })?)?;
            MatrixGroupEquations::diagonal_torus(ambient, n)?
        }
        OracleKind::Levi => {
            let blocks = blocks.ok_or_else(|| {
                CliError::usage("UsageError", "--kind levi requires --blocks".into())
            })?;
            MatrixGroupEquations::levi_in_special_linear(n, blocks)?
        }
    })
}

fn verification_output(report: &VerificationReport) -> CommandOutput {
    let items: Vec<Value> = report
        .items
        .iter()
        .map(|i| {
            json!({
                "name": i.name,
                "status": status_str(i.status),
                "detail": i.detail,
            })
        })
        .collect();
    let mut text = vec![format!("pair: {}", report.pair)];
    for i in &report.items {
        text.push(format!("[{}] {} — {}", status_str(i.status), i.name, i.detail));
    }
    if report.all_passed() {
        text.push("all checks passed".into());
    }
    CommandOutput {
        json: json!({
            "pair": report.pair,
            "all_passed": report.all_passed(),
            "items": items,
        }),
        latex: text.clone(),
        text,
    }
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "skipped",
    }
}

fn embed_verify_output(
    x: &OrbitPoset,
    completion_of: Option<&str>,
) -> Result<CommandOutput, CliError> {
    let report = x.orbit_divisibility();
    let mut items = Vec::new();
    let mut text = vec![format!("open orbit: {}", report.open_label)];
    for e in &report.entries {
        let (status, detail) = match &e.outcome {
            DivisibilityOutcome::Divides { quotient } => (
                "pass",
                format!("quotient {}", poly_string(quotient, "z", 1, false)),
            ),
            DivisibilityOutcome::NegativeQuotient { quotient } => (
                "FAIL",
                format!("negative quotient {}", poly_string(quotient, "z", 1, false)),
            ),
            DivisibilityOutcome::NotDivisible { orbit_q } => (
                "FAIL",
                format!("Q = {} is not divisible", poly_string(orbit_q, "z", 1, false)),
            ),
            DivisibilityOutcome::Unavailable(reason) => ("skipped", reason.clone()),
        };
        items.push(json!({ "orbit": e.label, "status": status, "detail": detail }));
        text.push(format!("[{status}] {} — {detail}", e.label));
    }

    let r_outcome: Value;
    match x.r_poly() {
        Ok(r) => {
            r_outcome = json!({ "status": "ok", "r": poly_json(&r) });
            text.push(format!("R(z) = {}", poly_string(&r, "z", 1, false)));
        }
        Err(e) => {
            let ce: CliError = e.into();
            r_outcome = json!({ "status": ce.code, "error": ce.message });
            text.push(format!("R: {} ({})", ce.code, ce.message));
        }
    }

    let completion = match completion_of {
        Some(spec) => {
            let g = parse_spec(spec)?;
            let check = x.group_completion_check(&g.reductive);
            text.push(format!("completion of {spec}: {check}"));
            Some(json!({
                "group": spec,
                "divides": check.divides,
                "quotient": check.quotient.as_ref().map(coeff_strings),
            }))
        }
        None => None,
    };

    if report.all_passed() {
        text.push("all orbit checks passed".into());
    }
    Ok(CommandOutput {
        json: json!({
            "open": report.open_label,
            "all_passed": report.all_passed(),
            "orbits": items,
            "r_poly": r_outcome,
            "completion": completion,
        }),
        latex: text.clone(),
        text,
    })
}
