//! Command-line front end: parsing, dispatch, file I/O, batch verification,
//! and the region-map emitter.
//!
//! Every mathematical input and output is an exact rational; float literals
//! anywhere are rejected with a usage error. Exit codes: 0 accepted or
//! succeeded, 1 mathematically rejected, 2 usage or format error, 3
//! internal invariant violation (an oracle mismatch or an exhausted
//! synthesis search - neither should ever fire).

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use mechsynth::exact::{CoefficientVector, Rat, RationalFunction};
use mechsynth::netmodel::{admittance_matrix, driving_point, MechNetwork};
use mechsynth::oneport::{
    classify_arbitrary_springs, classify_theorem5, classify_theorem6, fig2_topology,
    foster_synthesize, regenerate_fig2_catalog, synth_fig2, synth_fig3, Fig3Network,
    FosterError, ScaleMode, SpringBudget, SqrtMode, Theorem5Branch, Theorem5Error,
    Theorem6Error, Theorem6Outcome,
};
use mechsynth::paramount3::{is_paramount, parse_rows, sign_normalize, PortMatrix3, SignTarget};
use mechsynth::resistive3::{enumerate_small_networks, theorem1, Branch, SynthError};

pub const EXIT_ACCEPT: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser)]
#[command(
    name = "mechsynth",
    about = "Exact synthesis and verification of spring/damper/inerter networks",
    disable_help_subcommand = true
)]
struct Cli {
    /// Machine-readable line-delimited JSON instead of human tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    AsWritten,
    ScaleSearch,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SqrtModeArg {
    Exact,
    Quadratic,
}

#[derive(Subcommand)]
enum Command {
    /// Decide paramountcy of a symmetric 3x3 matrix.
    ParamountCheck {
        /// Row-major rational entries, e.g. "[[1,1,0],[1,2,-1],[0,-1,1]]".
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Decide and synthesize a three-port resistive network (at most three
    /// elements) for a symmetric 3x3 admittance matrix.
    Resistive3Synth {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Classify a one-port admittance given by its coefficient lists.
    OneportClassify {
        /// Numerator coefficients a3,a2,a1,a0.
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        /// Denominator coefficients b4,b3,b2,b1 with b4 either 1 or 0.
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        #[arg(long, value_enum, default_value_t = Mode::ScaleSearch)]
        mode: Mode,
    },
    /// Synthesize a one-port network for a classified admittance.
    OneportSynth {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        #[arg(long, value_enum, default_value_t = Mode::ScaleSearch)]
        mode: Mode,
        /// Spring values: demand exact rationals, or allow a + b*sqrt(d).
        #[arg(long, value_enum, default_value_t = SqrtModeArg::Exact)]
        sqrt_mode: SqrtModeArg,
        /// Write the synthesized netlist to this path as well.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a netlist file against a stated admittance, exactly.
    Verify {
        #[arg(long)]
        netlist: PathBuf,
        /// Driving-point admittance, e.g. "(s^3+2s^2+2s+3)/(s^3+s^2+2s)".
        #[arg(long, allow_hyphen_values = true)]
        admittance: Option<String>,
        /// Full admittance matrix of rational-function entries, row-major.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Emit the exact realizability classification of a rational lattice in
    /// the (G5, G6) plane as CSV.
    RegionMap {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        g1: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        g2: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        g3: String,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        g4: String,
        #[arg(long, default_value_t = 201)]
        grid: usize,
        /// Axis bounds "lo,hi" shared by G5 and G6.
        #[arg(long, default_value = "-1,1", allow_hyphen_values = true)]
        bounds: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the covering-configuration catalog from scratch and check
    /// it against the frozen copy (or write it out).
    RegenFig2Catalog {
        /// Write the regenerated netlists into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate isomorphism-class representatives of small three-port
    /// networks (the necessity-side test oracle), one netlist per line.
    EnumerateOracle {
        #[arg(long, default_value_t = 3)]
        max_elements: usize,
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        /// Print only the class count.
        #[arg(long, default_value_t = false)]
        count_only: bool,
    },
}

/// Run the CLI on an argument vector; returns the exit code and the full
/// output document. Deterministic for deterministic inputs.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful usage.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_ACCEPT,
                _ => EXIT_USAGE,
            };
            return (code, e.to_string());
        }
    };
    let format = cli.format;
    match dispatch(cli.command, format) {
        Ok((code, out)) => (code, out),
        Err(e) => e.render(format),
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }

    fn internal(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INTERNAL,
            message: msg.into(),
        }
    }

    fn render(&self, format: Format) -> (i32, String) {
        let out = match format {
            Format::Human => format!("error: {}\n", self.message),
            Format::Structured => format!(
                "{}\n",
                serde_json::json!({"status": "error", "message": self.message})
            ),
        };
        (self.code, out)
    }
}

fn parse_rat(text: &str, what: &str) -> Result<Rat, CliError> {
    text.trim()
        .parse()
        .map_err(|e| CliError::usage(format!("{what}: {e}")))
}

fn parse_matrix3(text: &str) -> Result<PortMatrix3, CliError> {
    PortMatrix3::from_text(text).map_err(|e| CliError::usage(e.to_string()))
}

fn parse_coeffs(num: &str, den: &str) -> Result<CoefficientVector, CliError> {
    let nums: Vec<Rat> = num
        .split(',')
        .map(|t| parse_rat(t, "numerator coefficient"))
        .collect::<Result<_, _>>()?;
    let dens: Vec<Rat> = den
        .split(',')
        .map(|t| parse_rat(t, "denominator coefficient"))
        .collect::<Result<_, _>>()?;
    if nums.len() != 4 {
        return Err(CliError::usage("--num needs exactly a3,a2,a1,a0"));
    }
    if dens.len() != 4 {
        return Err(CliError::usage("--den needs exactly b4,b3,b2,b1"));
    }
    let beta4 = if dens[0] == Rat::one() {
        1
    } else if dens[0] == Rat::zero() {
        0
    } else {
        return Err(CliError::usage("b4 must be exactly 1 or 0"));
    };
    let cv = CoefficientVector {
        alpha: [nums[0].clone(), nums[1].clone(), nums[2].clone(), nums[3].clone()],
        beta: [dens[1].clone(), dens[2].clone(), dens[3].clone()],
        beta4,
    };
    Ok(cv)
}

fn load_netlist(path: &PathBuf) -> Result<MechNetwork<Rat>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    MechNetwork::from_json(text.trim()).map_err(|e| CliError::usage(e.to_string()))
}

fn branch_description(branch: &Theorem5Branch) -> String {
    match branch {
        Theorem5Branch::Cond1(witnesses) => {
            let names: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
            format!("Condition 1, zero witnesses: {}", names.join(", "))
        }
        Theorem5Branch::Cond2(case) => format!("Condition 2, case {case}"),
    }
}

fn certificate_json(branch: &Branch) -> serde_json::Value {
    match branch {
        Branch::LTree(cert) => serde_json::json!({
            "kind": "l-tree",
            "pattern": cert.pattern.d,
            "off_diagonal": cert.off.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "slack": cert.slack.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "zero_count": cert.zero_count,
        }),
        Branch::PTree(cert) => serde_json::json!({
            "kind": "p-tree",
            "pattern": cert.pattern.d,
            "permutation": cert.permutation,
            "case": cert.case.to_string(),
            "slacks": cert.slacks.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "equality_count": cert.equality_count,
        }),
    }
}

fn map_synth_error(e: SynthError) -> CliError {
    match e {
        SynthError::OracleMismatch(m) => CliError::internal(format!("oracle mismatch: {m}")),
        SynthError::InvalidCertificate => CliError::internal("certificate invalidated"),
        SynthError::Net(n) => CliError::internal(format!("oracle failure: {n}")),
    }
}

fn dispatch(cmd: Command, format: Format) -> Result<(i32, String), CliError> {
    match cmd {
        Command::ParamountCheck { matrix } => {
            let m = parse_matrix3(&matrix)?;
            let paramount = is_paramount(&m);
            let nonpos = sign_normalize(&m, SignTarget::AllOffDiagNonPositive).ok();
            let mut out = String::new();
            let code = if paramount { EXIT_ACCEPT } else { EXIT_REJECT };
            match format {
                Format::Human => {
                    writeln!(out, "matrix: {m}").unwrap();
                    writeln!(out, "paramount: {}", if paramount { "yes" } else { "no" }).unwrap();
                    match &nonpos {
                        Some((p, _)) => {
                            writeln!(out, "off-diagonal sign normalization: pattern {p}").unwrap()
                        }
                        None => writeln!(
                            out,
                            "off-diagonal sign normalization: none (product of off-diagonals is positive)"
                        )
                        .unwrap(),
                    }
                }
                Format::Structured => {
                    writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "command": "paramount-check",
                            "matrix": m.to_string(),
                            "paramount": paramount,
                            "nonpositive_pattern": nonpos.map(|(p, _)| p.d),
                        })
                    )
                    .unwrap();
                }
            }
            Ok((code, out))
        }

        Command::Resistive3Synth { matrix } => {
            let m = parse_matrix3(&matrix)?;
            match theorem1(&m).map_err(map_synth_error)? {
                Ok(result) => {
                    let netlist = result.network.to_json();
                    let mut out = String::new();
                    match format {
                        Format::Human => {
                            writeln!(out, "accepted: {} branch", result.branch.name()).unwrap();
                            writeln!(out, "elements: {}", result.network.element_count()).unwrap();
                            writeln!(out, "netlist: {netlist}").unwrap();
                            writeln!(out, "verified: exact oracle match").unwrap();
                        }
                        Format::Structured => {
                            writeln!(
                                out,
                                "{}",
                                serde_json::json!({
                                    "command": "resistive3-synth",
                                    "status": "accepted",
                                    "branch": result.branch.name(),
                                    "certificate": certificate_json(&result.branch),
                                    "netlist": serde_json::from_str::<serde_json::Value>(&netlist).unwrap(),
                                    "verified": true,
                                })
                            )
                            .unwrap();
                        }
                    }
                    Ok((EXIT_ACCEPT, out))
                }
                Err(reject) => {
                    let mut out = String::new();
                    match format {
                        Format::Human => writeln!(out, "rejected: {reject}").unwrap(),
                        Format::Structured => writeln!(
                            out,
                            "{}",
                            serde_json::json!({
                                "command": "resistive3-synth",
                                "status": "rejected",
                                "reason": reject.to_string(),
                            })
                        )
                        .unwrap(),
                    }
                    Ok((EXIT_REJECT, out))
                }
            }
        }

        Command::OneportClassify { num, den, mode } => {
            let cv = parse_coeffs(&num, &den)?;
            classify_oneport(&cv, mode, format)
        }

        Command::OneportSynth {
            num,
            den,
            mode,
            sqrt_mode,
            out,
        } => {
            let cv = parse_coeffs(&num, &den)?;
            synth_oneport(&cv, mode, sqrt_mode, out, format)
        }

        Command::Verify {
            netlist,
            admittance,
            matrix,
        } => {
            let net = load_netlist(&netlist)?;
            match (admittance, matrix) {
                (Some(expr), None) => {
                    let expected: RationalFunction<Rat> = expr
                        .parse()
                        .map_err(|e| CliError::usage(format!("bad admittance: {e}")))?;
                    if net.port_count() != 1 {
                        return Err(CliError::usage(format!(
                            "driving-point verification needs exactly one port, netlist has {}",
                            net.port_count()
                        )));
                    }
                    let got = driving_point(&net)
                        .map_err(|e| CliError { code: EXIT_REJECT, message: e.to_string() })?;
                    render_verify(got == expected, &got.to_string(), &expected.to_string(), format)
                }
                (None, Some(matrix)) => {
                    let rows = parse_rows(&matrix).map_err(CliError::usage)?;
                    let n = net.port_count();
                    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                        return Err(CliError::usage(format!(
                            "matrix must be {n}x{n} to match the netlist ports"
                        )));
                    }
                    let got = admittance_matrix(&net)
                        .map_err(|e| CliError { code: EXIT_REJECT, message: e.to_string() })?;
                    let mut ok = true;
                    for i in 0..n {
                        for j in 0..n {
                            if got[i][j] != RationalFunction::constant(rows[i][j].clone()) {
                                ok = false;
                            }
                        }
                    }
                    let got_text = format!(
                        "[{}]",
                        got.iter()
                            .map(|r| format!(
                                "[{}]",
                                r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                            ))
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    render_verify(ok, &got_text, &matrix, format)
                }
                _ => Err(CliError::usage(
                    "verify needs exactly one of --admittance or --matrix",
                )),
            }
        }

        Command::RegionMap {
            g1,
            g2,
            g3,
            g4,
            grid,
            bounds,
            out,
        } => {
            if grid < 2 {
                return Err(CliError::usage("grid must be at least 2"));
            }
            let g1 = parse_rat(&g1, "--g1")?;
            let g2 = parse_rat(&g2, "--g2")?;
            let g3 = parse_rat(&g3, "--g3")?;
            let g4 = parse_rat(&g4, "--g4")?;
            let (lo, hi) = bounds
                .split_once(',')
                .ok_or_else(|| CliError::usage("--bounds must be lo,hi"))?;
            let lo = parse_rat(lo, "--bounds low")?;
            let hi = parse_rat(hi, "--bounds high")?;
            if lo >= hi {
                return Err(CliError::usage("--bounds must satisfy lo < hi"));
            }
            let rows = mechsynth::oneport::region_map_rows(&g1, &g2, &g3, &g4, grid, &lo, &hi);
            let mut csv = String::with_capacity(rows.len() * 24);
            csv.push_str("g5,g6,class,witness\n");
            for p in &rows {
                writeln!(csv, "{},{},{},{}", p.g5, p.g6, p.class.as_str(), p.witness).unwrap();
            }
            if let Some(path) = out {
                fs::write(&path, &csv)
                    .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
                Ok((EXIT_ACCEPT, format!("wrote {} rows to {}\n", rows.len(), path.display())))
            } else {
                Ok((EXIT_ACCEPT, csv))
            }
        }

        Command::RegenFig2Catalog { out } => {
            let regenerated = regenerate_fig2_catalog()
                .map_err(|e| CliError::internal(format!("catalog recovery failed: {e}")))?;
            let mut doc = String::new();
            let mut all_match = true;
            for (case, net) in &regenerated {
                let json = net.to_json();
                match fig2_topology(*case) {
                    Ok(frozen) if frozen.to_json() == json => {
                        writeln!(doc, "case {case}: matches frozen catalog").unwrap();
                    }
                    _ => {
                        all_match = false;
                        writeln!(doc, "case {case}: differs from frozen catalog").unwrap();
                    }
                }
                writeln!(doc, "  {json}").unwrap();
                if let Some(dir) = &out {
                    fs::create_dir_all(dir)
                        .map_err(|e| CliError::usage(format!("cannot create {}: {e}", dir.display())))?;
                    let path = dir.join(format!("fig2_{case}.netlist"));
                    fs::write(&path, format!("{json}\n"))
                        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
                }
            }
            writeln!(doc, "recovered {} topologies", regenerated.len()).unwrap();
            if all_match {
                Ok((EXIT_ACCEPT, doc))
            } else {
                Err(CliError::internal(format!(
                    "{doc}regenerated catalog differs from the frozen copy"
                )))
            }
        }

        Command::EnumerateOracle {
            max_elements,
            max_vertices,
            count_only,
        } => {
            if max_elements > 3 || !(4..=7).contains(&max_vertices) {
                return Err(CliError::usage(
                    "supported ranges: --max-elements 0..=3, --max-vertices 4..=7",
                ));
            }
            let nets = enumerate_small_networks(max_elements, max_vertices);
            let mut out = String::new();
            if count_only {
                writeln!(out, "{}", nets.len()).unwrap();
            } else {
                for net in &nets {
                    writeln!(out, "{}", net.to_json()).unwrap();
                }
                writeln!(out, "# {} isomorphism classes", nets.len()).unwrap();
            }
            Ok((EXIT_ACCEPT, out))
        }
    }
}

fn render_verify(
    ok: bool,
    got: &str,
    expected: &str,
    format: Format,
) -> Result<(i32, String), CliError> {
    let mut out = String::new();
    match format {
        Format::Human => {
            if ok {
                writeln!(out, "exact match").unwrap();
            } else {
                writeln!(out, "mismatch: netlist has {got}, expected {expected}").unwrap();
            }
        }
        Format::Structured => {
            writeln!(
                out,
                "{}",
                serde_json::json!({
                    "command": "verify",
                    "status": if ok { "exact-match" } else { "mismatch" },
                    "computed": got,
                    "expected": expected,
                })
            )
            .unwrap();
        }
    }
    Ok((if ok { EXIT_ACCEPT } else { EXIT_REJECT }, out))
}

fn classify_oneport(
    cv: &CoefficientVector,
    mode: Mode,
    format: Format,
) -> Result<(i32, String), CliError> {
    let mut out = String::new();
    if cv.beta4 == 1 {
        match classify_theorem5(cv) {
            Ok(Ok(branch)) => {
                let desc = branch_description(&branch);
                match format {
                    Format::Human => writeln!(out, "Theorem 5 {desc}").unwrap(),
                    Format::Structured => writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "command": "oneport-classify",
                            "status": "accepted",
                            "theorem": 5,
                            "branch": desc,
                        })
                    )
                    .unwrap(),
                }
                Ok((EXIT_ACCEPT, out))
            }
            Ok(Err(reject)) => {
                let budget = classify_arbitrary_springs(cv)
                    .map_err(|e| CliError::usage(e.to_string()))?;
                match budget {
                    SpringBudget::ArbitraryOnly(cond) => {
                        match format {
                            Format::Human => writeln!(
                                out,
                                "Theorem 5 rejected ({}); realizable with an arbitrary number of springs via condition {cond}",
                                reject.reason
                            )
                            .unwrap(),
                            Format::Structured => writeln!(
                                out,
                                "{}",
                                serde_json::json!({
                                    "command": "oneport-classify",
                                    "status": "arbitrary-springs-only",
                                    "condition": cond,
                                    "reason": reject.reason,
                                })
                            )
                            .unwrap(),
                        }
                        Ok((EXIT_ACCEPT, out))
                    }
                    _ => {
                        match format {
                            Format::Human => {
                                writeln!(out, "not realizable: {}", reject.reason).unwrap()
                            }
                            Format::Structured => writeln!(
                                out,
                                "{}",
                                serde_json::json!({
                                    "command": "oneport-classify",
                                    "status": "rejected",
                                    "reason": reject.reason,
                                })
                            )
                            .unwrap(),
                        }
                        Ok((EXIT_REJECT, out))
                    }
                }
            }
            Err(e) => Err(CliError::usage(e.to_string())),
        }
    } else {
        let scale_mode = match mode {
            Mode::AsWritten => ScaleMode::AsWritten,
            Mode::ScaleSearch => ScaleMode::ScaleSearch,
        };
        match classify_theorem6(cv, scale_mode) {
            Ok(Theorem6Outcome::Accepted { condition, lambda }) => {
                match format {
                    Format::Human => writeln!(
                        out,
                        "Theorem 6 Condition {condition}, lambda={lambda}"
                    )
                    .unwrap(),
                    Format::Structured => writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "command": "oneport-classify",
                            "status": "accepted",
                            "theorem": 6,
                            "condition": condition,
                            "lambda": lambda.to_string(),
                        })
                    )
                    .unwrap(),
                }
                Ok((EXIT_ACCEPT, out))
            }
            Ok(Theorem6Outcome::Rejected) => {
                match format {
                    Format::Human => writeln!(out, "not realizable: no Theorem 6 condition holds").unwrap(),
                    Format::Structured => writeln!(
                        out,
                        "{}",
                        serde_json::json!({
                            "command": "oneport-classify",
                            "status": "rejected",
                            "reason": "no Theorem 6 condition holds",
                        })
                    )
                    .unwrap(),
                }
                Ok((EXIT_REJECT, out))
            }
            Err(e) => Err(CliError::usage(e.to_string())),
        }
    }
}

fn synth_oneport(
    cv: &CoefficientVector,
    mode: Mode,
    sqrt_mode: SqrtModeArg,
    out_path: Option<PathBuf>,
    format: Format,
) -> Result<(i32, String), CliError> {
    let mut out = String::new();
    let mut write_result = |desc: String,
                            netlist_json: Option<String>,
                            quad_values: Option<Vec<String>>|
     -> Result<(i32, String), CliError> {
        match format {
            Format::Human => {
                writeln!(out, "{desc}").unwrap();
                if let Some(json) = &netlist_json {
                    writeln!(out, "netlist: {json}").unwrap();
                }
                if let Some(values) = &quad_values {
                    writeln!(out, "element values: {}", values.join(", ")).unwrap();
                }
                writeln!(out, "verified: exact oracle match").unwrap();
            }
            Format::Structured => {
                writeln!(
                    out,
                    "{}",
                    serde_json::json!({
                        "command": "oneport-synth",
                        "status": "accepted",
                        "branch": desc,
                        "netlist": netlist_json
                            .as_ref()
                            .map(|j| serde_json::from_str::<serde_json::Value>(j).unwrap()),
                        "quadratic_values": quad_values,
                        "verified": true,
                    })
                )
                .unwrap();
            }
        }
        if let Some(path) = &out_path {
            match &netlist_json {
                Some(json) => fs::write(path, format!("{json}\n")).map_err(|e| {
                    CliError::usage(format!("cannot write {}: {e}", path.display()))
                })?,
                None => {
                    return Err(CliError::usage(
                        "quadratic-valued netlists cannot be written to the rational netlist format",
                    ))
                }
            }
        }
        Ok((EXIT_ACCEPT, out.clone()))
    };

    if cv.beta4 == 1 {
        match classify_theorem5(cv) {
            Ok(Ok(Theorem5Branch::Cond1(witnesses))) => {
                let y = cv
                    .reassemble()
                    .map_err(|e| CliError::usage(e.to_string()))?;
                let net = foster_synthesize(&y).map_err(|e| match e {
                    FosterError::CensusExceeded => CliError::internal(
                        "preamble search exceeded the element census".to_string(),
                    ),
                    other => CliError::usage(other.to_string()),
                })?;
                let got = driving_point(&net)
                    .map_err(|e| CliError::internal(format!("oracle failure: {e}")))?;
                if got != y {
                    return Err(CliError::internal(format!(
                        "oracle mismatch: synthesized {got}, expected {y}"
                    )));
                }
                let names: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
                write_result(
                    format!(
                        "Theorem 5 Condition 1 (witnesses: {}), series-parallel synthesis",
                        names.join(", ")
                    ),
                    Some(net.to_json()),
                    None,
                )
            }
            Ok(Ok(Theorem5Branch::Cond2(case))) => {
                let net = synth_fig2(cv, case).map_err(|e| match e {
                    Theorem5Error::OracleMismatch(m) => CliError::internal(m),
                    Theorem5Error::TopologyUnavailable(c) => {
                        CliError::internal(format!("catalog entry missing for case {c}"))
                    }
                    other => CliError::usage(other.to_string()),
                })?;
                write_result(
                    format!("Theorem 5 Condition 2, case {case}"),
                    Some(net.to_json()),
                    None,
                )
            }
            Ok(Err(reject)) => {
                let msg = format!("not realizable with at most three springs: {}", reject.reason);
                match format {
                    Format::Human => Ok((EXIT_REJECT, format!("{msg}\n"))),
                    Format::Structured => Ok((
                        EXIT_REJECT,
                        format!(
                            "{}\n",
                            serde_json::json!({
                                "command": "oneport-synth",
                                "status": "rejected",
                                "reason": msg,
                            })
                        ),
                    )),
                }
            }
            Err(e) => Err(CliError::usage(e.to_string())),
        }
    } else {
        let scale_mode = match mode {
            Mode::AsWritten => ScaleMode::AsWritten,
            Mode::ScaleSearch => ScaleMode::ScaleSearch,
        };
        let outcome =
            classify_theorem6(cv, scale_mode).map_err(|e| CliError::usage(e.to_string()))?;
        let Theorem6Outcome::Accepted { condition, lambda } = outcome else {
            let msg = "not realizable: no Theorem 6 condition holds";
            return match format {
                Format::Human => Ok((EXIT_REJECT, format!("{msg}\n"))),
                Format::Structured => Ok((
                    EXIT_REJECT,
                    format!(
                        "{}\n",
                        serde_json::json!({
                            "command": "oneport-synth",
                            "status": "rejected",
                            "reason": msg,
                        })
                    ),
                )),
            };
        };
        let sqrt = match sqrt_mode {
            SqrtModeArg::Exact => SqrtMode::ExactOnly,
            SqrtModeArg::Quadratic => SqrtMode::AllowQuadratic,
        };
        match synth_fig3(cv, condition, &lambda, sqrt) {
            Ok(Fig3Network::Rational(net)) => write_result(
                format!("Theorem 6 Condition {condition}, lambda={lambda}"),
                Some(net.to_json()),
                None,
            ),
            Ok(Fig3Network::Quadratic(net)) => {
                let values: Vec<String> = net
                    .elements
                    .iter()
                    .map(|e| format!("{} {}-{}: {}", e.kind, e.a, e.b, e.value))
                    .collect();
                write_result(
                    format!(
                        "Theorem 6 Condition {condition}, lambda={lambda} (quadratic extension values)"
                    ),
                    None,
                    Some(values),
                )
            }
            Err(Theorem6Error::IrrationalElement) => {
                let msg =
                    "spring value is irrational at this scale; re-run with --sqrt-mode quadratic";
                match format {
                    Format::Human => Ok((EXIT_REJECT, format!("{msg}\n"))),
                    Format::Structured => Ok((
                        EXIT_REJECT,
                        format!(
                            "{}\n",
                            serde_json::json!({
                                "command": "oneport-synth",
                                "status": "rejected",
                                "reason": msg,
                            })
                        ),
                    )),
                }
            }
            Err(Theorem6Error::OracleMismatch(m)) => Err(CliError::internal(m)),
            Err(e) => Err(CliError::usage(e.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_vec(args: &[&str]) -> (i32, String) {
        run(std::iter::once("mechsynth").chain(args.iter().copied()))
    }

    #[test]
    fn usage_error_is_exit_2() {
        let (code, _) = run_vec(&["paramount-check", "--matrix", "[[1,0.5],[0.5,1]]"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = run_vec(&["no-such-command"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn float_rejection_everywhere() {
        let (code, _) = run_vec(&[
            "oneport-classify",
            "--num",
            "1,2,2,3.0",
            "--den",
            "0,1,1,2",
        ]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _) = run_vec(&["region-map", "--g4", "0.5", "--grid", "3"]);
        assert_eq!(code, EXIT_USAGE);
    }
}
