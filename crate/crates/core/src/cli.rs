//! Command-line front end behind the `khp` binary.
//!
//! Diagrams and graphs are read from files or named with `builtin:<name>`.
//! Caps can be lowered (or, where the library takes an explicit cap,
//! raised) with `KHP_MAX_CROSSINGS`, `KHP_MAX_EDGES` and `KHP_MAX_STATES`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::bracket::{jones, khovanov_bracket, BracketFlavor};
use crate::complex::Ring;
use crate::diagram::{LinkDiagram, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graphs::{dichromatic_dc, dichromatic_subgraph_sum, dichromatic_via_bracket, PlanarMultigraph, EDGE_CAP};
use crate::khovanov::{build_complex_with_cap, build_de_rham_complex, normalization_shift, HOMOLOGY_CAP};
use crate::potts::{
    partition_spin_sum, partition_via_dichromatic, potts_via_khovanov, rho_one_branches, Branch,
    PottsParameters, SPIN_STATE_CAP,
};
use crate::quantum::{bracket_amplitude, hadamard_test_sim, potts_quantum_check};
use crate::stosic::{build_stosic_complex, stosic_euler_identity};
use crate::verify::{run_all, Corpus, VerifyConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "khp", version, about = "Brackets, Khovanov homology and Potts partition functions")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Flavor {
    A,
    Q,
    Rho,
    Potts,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RingArg {
    Z,
    Gf2,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Z => Ring::Z,
            RingArg::Gf2 => Ring::Gf2,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DichromaticMethod {
    Dc,
    Sum,
    Bracket,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PottsMethod {
    Spin,
    Dichromatic,
    Khovanov,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// State-sum bracket polynomial.
    Bracket {
        #[arg(long, value_enum, default_value_t = Flavor::Q)]
        flavor: Flavor,
        #[arg(long)]
        pd: String,
    },
    /// Jones polynomial.
    Jones {
        #[arg(long)]
        pd: String,
    },
    /// Khovanov (or de Rham style) homology table.
    Khovanov {
        #[arg(long)]
        pd: String,
        #[arg(long, value_enum, default_value_t = RingArg::Z)]
        ring: RingArg,
        #[arg(long)]
        dr: bool,
        /// Apply the writhe shift that makes the table a link invariant.
        #[arg(long)]
        normalized: bool,
    },
    /// Dichromatic polynomial of a plane graph.
    Dichromatic {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = DichromaticMethod::Dc)]
        method: DichromaticMethod,
    },
    /// Potts partition function.
    Potts {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        q: u32,
        /// Coupling K as `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        coupling: String,
        #[arg(long, value_enum, default_value_t = PottsMethod::Spin)]
        method: PottsMethod,
    },
    /// Stosic homology of a graph and its Euler characteristic identity.
    Stosic {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum, default_value_t = RingArg::Z)]
        ring: RingArg,
    },
    /// Bracket as a diagonal-unitary amplitude, optionally with a simulated Hadamard test.
    Amplitude {
        #[arg(long)]
        pd: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long)]
        shots: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Potts amplitude against the Khovanov evaluation at imaginary coupling.
    PottsQuantum {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        q: u32,
    },
    /// Run every acceptance criterion.
    Verify {
        /// `builtin` or a directory holding `knots/*.pd` and `graphs/*.json`.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Caps read from the environment.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub crossings: usize,
    pub edges: usize,
    pub states: u64,
}

impl Caps {
    pub fn from_env() -> Result<Self> {
        fn var<T: std::str::FromStr>(name: &str) -> Result<Option<T>> {
            match std::env::var(name) {
                Ok(s) => s
                    .parse()
                    .map(Some)
                    .map_err(|_| Error::Domain(format!("{name}={s} is not a positive integer"))),
                Err(_) => Ok(None),
            }
        }
        let caps = Self {
            crossings: var("KHP_MAX_CROSSINGS")?.unwrap_or(DEFAULT_STATE_CAP),
            edges: var("KHP_MAX_EDGES")?.unwrap_or(EDGE_CAP),
            states: var("KHP_MAX_STATES")?.unwrap_or(SPIN_STATE_CAP),
        };
        if caps.crossings == 0 || caps.edges == 0 || caps.states == 0 {
            return Err(Error::Domain("caps must be positive".into()));
        }
        Ok(caps)
    }

    fn check_crossings(&self, d: &LinkDiagram) -> Result<()> {
        check("crossings", d.crossing_count() as u128, self.crossings as u128)
    }

    fn check_edges(&self, g: &PlanarMultigraph) -> Result<()> {
        check("edges", g.edge_count() as u128, self.edges as u128)
    }

    fn check_spins(&self, g: &PlanarMultigraph, states: u32) -> Result<()> {
        let required = (states as u128).checked_pow(g.node_count() as u32).unwrap_or(u128::MAX);
        check("spin configurations", required, self.states as u128)
    }
}

fn check(what: &'static str, required: u128, cap: u128) -> Result<()> {
    if required > cap {
        return Err(Error::TooLarge { what, required, cap });
    }
    Ok(())
}

fn read_input(input: &str) -> Result<String> {
    std::fs::read_to_string(input).map_err(|e| Error::Domain(format!("{input}: {e}")))
}

pub fn load_diagram(input: &str) -> Result<LinkDiagram> {
    match input.strip_prefix("builtin:") {
        Some(name) => fixtures::knot(name),
        None => read_input(input)?.parse(),
    }
}

pub fn load_graph(input: &str) -> Result<PlanarMultigraph> {
    match input.strip_prefix("builtin:") {
        Some(name) => fixtures::graph(name),
        None => PlanarMultigraph::from_json_str(&read_input(input)?),
    }
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let bad = || Error::Domain(format!("coupling `{s}` is not `re,im`"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    let re = re.trim().parse().map_err(|_| bad())?;
    let im = im.trim().parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

fn cjson(z: Complex64) -> Value {
    json!({"re": z.re, "im": z.im})
}

/// Result of one subcommand: JSON payload plus its text rendering.
struct Output {
    json: Value,
    text: String,
    /// Nonzero when `verify` finds a failing criterion.
    code: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, code: 0 }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Syntax { .. } => "syntax",
        Error::MalformedDiagram(..) => "malformed-diagram",
        Error::MalformedGraph(..) => "malformed-graph",
        Error::TooLarge { .. } => "too-large",
        Error::NotPlanar(..) => "not-planar",
        Error::Disconnected => "disconnected",
        Error::Domain(..) => "domain",
        _ => "computation",
    }
}

fn execute(cmd: &Command, caps: Caps) -> Result<Output> {
    match cmd {
        Command::Bracket { flavor, pd } => {
            let d = load_diagram(pd)?;
            let f = match flavor {
                Flavor::A => BracketFlavor::A,
                Flavor::Q => BracketFlavor::KhovanovQ,
                Flavor::Rho => BracketFlavor::Rho,
                Flavor::Potts => BracketFlavor::PottsQ,
            };
            let p = f.evaluate_with_cap(&d, caps.crossings)?;
            Ok(Output::ok(
                json!({"flavor": f.name(), "variables": f.variables(), "crossings": d.crossing_count(), "polynomial": p.to_string()}),
                p.to_string(),
            ))
        }
        Command::Jones { pd } => {
            let d = load_diagram(pd)?;
            caps.check_crossings(&d)?;
            let p = jones(&d)?;
            Ok(Output::ok(json!({"writhe": d.writhe(), "polynomial": p.to_string()}), p.to_string()))
        }
        Command::Khovanov { pd, ring, dr, normalized } => {
            let d = load_diagram(pd)?;
            let ring = Ring::from(*ring);
            let (mut h, complex) = if *dr {
                caps.check_crossings(&d)?;
                (build_de_rham_complex(&d, ring)?.homology(), "de-rham")
            } else {
                let cap = if std::env::var_os("KHP_MAX_CROSSINGS").is_some() { caps.crossings } else { HOMOLOGY_CAP };
                (build_complex_with_cap(&d, ring, cap)?.homology(), "khovanov")
            };
            let shift = normalization_shift(&d);
            if *normalized {
                h = h.shifted(shift.0, shift.1);
            }
            let chi = h.euler_characteristic("q");
            let mut text = h.to_string();
            text.push_str(&format!("chi = {chi}"));
            Ok(Output::ok(
                json!({
                    "complex": complex,
                    "normalized": normalized,
                    "shift": [shift.0, shift.1],
                    "homology": h.to_json(),
                    "euler_characteristic": chi.to_string(),
                }),
                text,
            ))
        }
        Command::Dichromatic { graph, method } => {
            let g = load_graph(graph)?;
            caps.check_edges(&g)?;
            let (p, name) = match method {
                DichromaticMethod::Dc => (dichromatic_dc(&g)?, "dc"),
                DichromaticMethod::Sum => (dichromatic_subgraph_sum(&g)?, "sum"),
                DichromaticMethod::Bracket => (dichromatic_via_bracket(&g)?, "bracket"),
            };
            Ok(Output::ok(json!({"method": name, "polynomial": p.to_string()}), p.to_string()))
        }
        Command::Potts { graph, q, coupling, method } => {
            let g = load_graph(graph)?;
            let k = parse_complex(coupling)?;
            let p = PottsParameters::new(*q, k);
            let (rows, name): (Vec<(Complex64, Option<Branch>)>, _) = match method {
                PottsMethod::Spin => {
                    caps.check_spins(&g, *q)?;
                    (vec![(partition_spin_sum(&g, p)?, None)], "spin")
                }
                PottsMethod::Dichromatic => {
                    caps.check_edges(&g)?;
                    (vec![(partition_via_dichromatic(&g, p)?, None)], "dichromatic")
                }
                PottsMethod::Khovanov => {
                    caps.check_edges(&g)?;
                    let target = p.boltzmann();
                    let mut rows = Vec::new();
                    for pt in rho_one_branches(*q)? {
                        if (pt.boltzmann - target).norm() <= 1e-9 * target.norm().max(1.0) {
                            rows.push((potts_via_khovanov(&g, *q, pt.branch)?.value, Some(pt.branch)));
                        }
                    }
                    if rows.is_empty() {
                        return Err(Error::Domain(format!(
                            "e^K = {target} is not a rho = 1 point for Q = {q}; the Khovanov form only applies there"
                        )));
                    }
                    (rows, "khovanov")
                }
            };
            let entries: Vec<Value> = rows
                .iter()
                .map(|(z, b)| json!({"value": cjson(*z), "method": name, "branch": b.map(|b| b.to_string())}))
                .collect();
            let text = rows
                .iter()
                .map(|(z, b)| match b {
                    Some(b) => format!("{z} [{b}]"),
                    None => z.to_string(),
                })
                .collect::<Vec<_>>()
                .join("\n");
            let json = if entries.len() == 1 { entries[0].clone() } else { json!({"results": entries}) };
            Ok(Output::ok(json, text))
        }
        Command::Stosic { graph, n, ring } => {
            let g = load_graph(graph)?;
            caps.check_edges(&g)?;
            let h = build_stosic_complex(&g, *n, Ring::from(*ring))?.homology();
            let id = stosic_euler_identity(&g, *n)?;
            let text = format!(
                "{h}chi = {}\nspecialized dichromatic = {}\nidentity {}",
                id.lhs,
                id.rhs,
                if id.equal { "holds" } else { "FAILS" }
            );
            Ok(Output::ok(
                json!({
                    "n": n,
                    "homology": h.to_json(),
                    "euler_characteristic": id.lhs.to_string(),
                    "specialized_dichromatic": id.rhs.to_string(),
                    "identity_holds": id.equal,
                }),
                text,
            ))
        }
        Command::Amplitude { pd, theta, shots, seed } => {
            let d = load_diagram(pd)?;
            caps.check_crossings(&d)?;
            let setup = bracket_amplitude(&d, *theta)?;
            let poly = khovanov_bracket(&d)?.evaluate(&[("q", Complex64::from_polar(1.0, *theta))])?;
            let mut json = json!({
                "theta": theta,
                "basis_size": setup.basis_size,
                "amplitude": cjson(setup.amplitude),
                "normalized": cjson(setup.normalized()),
                "bracket_value": cjson(poly),
            });
            let mut text = format!(
                "amplitude = {}\nnormalized = {}\nbracket at e^(i theta) = {poly}",
                setup.amplitude,
                setup.normalized()
            );
            if let Some(shots) = shots {
                let e = hadamard_test_sim(&setup, *shots, *seed)?;
                json["hadamard"] = serde_json::to_value(e).map_err(|e| Error::Domain(e.to_string()))?;
                text.push_str(&format!(
                    "\nhadamard ({} shots, seed {}): re = {:.6} ± {:.6}, im = {:.6} ± {:.6}",
                    e.shots, e.seed, e.re, e.re_stderr, e.im, e.im_stderr
                ));
            }
            Ok(Output::ok(json, text))
        }
        Command::PottsQuantum { graph, q } => {
            let g = load_graph(graph)?;
            caps.check_spins(&g, *q)?;
            let rows = potts_quantum_check(&g, *q, 1e-9)?;
            let branches = rho_one_branches(*q)?;
            let json = json!({
                "q": q,
                "branches": branches.iter().map(|b| json!({
                    "branch": b.branch.to_string(),
                    "sqrt_q": cjson(b.sqrt_q),
                    "q": cjson(b.q),
                    "boltzmann": cjson(b.boltzmann),
                })).collect::<Vec<_>>(),
                "rows": rows.iter().map(|r| json!({
                    "source": r.source,
                    "t": r.t,
                    "q": cjson(r.q),
                    "amplitude": cjson(r.amplitude),
                    "khovanov": cjson(r.khovanov),
                    "agrees": r.agrees,
                })).collect::<Vec<_>>(),
            });
            let text = rows
                .iter()
                .map(|r| {
                    format!(
                        "{:?} t = {:.6}: amplitude {:.6}, khovanov {:.6} -> {}",
                        r.source,
                        r.t,
                        r.amplitude,
                        r.khovanov,
                        if r.agrees { "agree" } else { "DISAGREE" }
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::ok(json, text))
        }
        Command::Verify { corpus, seed } => {
            let corpus = match corpus.as_str() {
                "builtin" => Corpus::builtin(),
                dir => Corpus::from_dir(&PathBuf::from(dir))?,
            };
            let mut cfg = VerifyConfig::default();
            if let Some(s) = seed {
                cfg.seed = *s;
            }
            let reports = run_all(&corpus, &cfg);
            let passed = reports.iter().all(|r| r.passed);
            let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            Ok(Output {
                json: json!({"passed": passed, "criteria": reports}),
                text,
                code: if passed { 0 } else { 1 },
            })
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Bracket { .. } => "bracket",
        Command::Jones { .. } => "jones",
        Command::Khovanov { .. } => "khovanov",
        Command::Dichromatic { .. } => "dichromatic",
        Command::Potts { .. } => "potts",
        Command::Stosic { .. } => "stosic",
        Command::Amplitude { .. } => "amplitude",
        Command::PottsQuantum { .. } => "potts-quantum",
        Command::Verify { .. } => "verify",
    }
}

/// Parses `argv` (including the program name), runs it and returns the
/// exit code: 0 success, 1 computation error or failed verification,
/// 2 usage error.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // a pool may already exist when run is called twice in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let name = command_name(&cli.command);
    let result = Caps::from_env().and_then(|caps| execute(&cli.command, caps));
    match result {
        Ok(o) => {
            let _ = match cli.format {
                Format::Text => writeln!(out, "{}", o.text),
                Format::Json => {
                    let mut v = json!({"schema_version": SCHEMA_VERSION, "command": name});
                    if let (Value::Object(dst), Value::Object(src)) = (&mut v, o.json) {
                        dst.extend(src);
                    }
                    writeln!(out, "{v}")
                }
            };
            o.code
        }
        Err(e) => {
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "error": {"kind": error_kind(&e), "message": e.to_string()},
            });
            let _ = writeln!(err, "{v}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("khp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn unknot_bracket() {
        let (code, out) = call(&["bracket", "--flavor", "q", "--pd", "builtin:unknot"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "q + q^-1");
    }

    #[test]
    fn hopf_json() {
        let (code, out) = call(&["--format", "json", "khovanov", "--pd", "builtin:hopf", "--ring", "z"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["euler_characteristic"], "q^4 + q^2 + 1 + q^-2");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["jones"]).0, 2);
        let (code, out) = call(&["jones", "--pd", "builtin:missing"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["kind"], "domain");
    }

    #[test]
    fn negative_coupling_parses() {
        let (code, out) = call(&["potts", "--graph", "builtin:single_edge", "--q", "2", "--coupling", "-1,0"]);
        assert_eq!(code, 0, "{out}");
        // Z = 2 e^K + 2 at K = -1
        let want = 2.0 * (-1f64).exp() + 2.0;
        let got: Complex64 = out.trim().parse().unwrap();
        assert!((got.re - want).abs() < 1e-12);
    }

    #[test]
    fn khovanov_method_needs_rho_one_point() {
        let args = ["potts", "--graph", "builtin:triangle", "--q", "4", "--coupling", "0,3.141592653589793", "--method", "khovanov"];
        assert_eq!(call(&args).0, 0);
        let (code, _) = call(&["potts", "--graph", "builtin:triangle", "--q", "4", "--coupling", "1,0", "--method", "khovanov"]);
        assert_eq!(code, 1);
    }
}
