//! `bicyclic`: arithmetic, set membership, continuity witnesses and verification reports
//! for the extended bicyclic semigroup with an adjoined zero.
//!
//! Exit codes: 0 on success, 1 when a precondition fails, 2 when the input cannot be parsed.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use bicyclic_core::continuity::{translate, Side};
use bicyclic_core::element::{difference_hom, quotient_mod, to_bicyclic};
use bicyclic_core::oracle::{brute_membership, enumerate, SetKind, Window};
use bicyclic_core::topology::{compare_at_zero, corner_tail, distinctness_certificate};
use bicyclic_core::verify::agreement_suite;
use bicyclic_core::{
    shift_witness, ComparisonVerdict, DSet, Distinctness, Element, Pair, SequencePair, UpSet,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use input::{
    read_json, seqs_from_value, topology_from_value, topology_of_kind, Kind, NbhdArgs, SeqArgs,
    TopologyArgs,
};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
}

impl From<bicyclic_core::Error> for CliError {
    fn from(e: bicyclic_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "bicyclic",
    version,
    about = "Exact computations in the extended bicyclic semigroup with zero"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply two elements
    Mul { x: Element, y: Element },
    /// Invert an element
    Inv { x: Element },
    /// Decide the natural partial order x ≼ y
    Leq { x: Element, y: Element },
    /// Up-set membership, or the finite set ↑apex ∖ D when sequences are given
    Upset {
        apex: Pair,
        #[arg(long, allow_hyphen_values = true)]
        member: Option<Element>,
        #[command(flatten)]
        seqs: SeqArgs,
    },
    /// Membership in the removed set D
    Dmember {
        #[arg(value_name = "X", allow_hyphen_values = true)]
        point: Element,
        #[command(flatten)]
        seqs: SeqArgs,
    },
    /// Membership in a basic neighbourhood of zero
    Nbhd {
        #[arg(value_name = "X", allow_hyphen_values = true)]
        point: Element,
        #[command(flatten)]
        topology: TopologyArgs,
        #[command(flatten)]
        nbhd: NbhdArgs,
    },
    /// Build and verify a V with (elem)·V ⊆ U or V·(elem) ⊆ U
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        elem: Pair,
        #[arg(long)]
        side: Side,
        #[arg(long, default_value_t = 12)]
        window: i64,
        #[command(flatten)]
        topology: TopologyArgs,
        #[command(flatten)]
        nbhd: NbhdArgs,
    },
    /// Fit a basic set of the fine topology into a probe of the coarse one
    Compare {
        /// Coarse topology: a family name or a JSON file
        #[arg(long, value_name = "KIND|FILE")]
        coarse: String,
        /// Fine topology: a family name or a JSON file
        #[arg(long, value_name = "KIND|FILE")]
        fine: String,
        #[arg(long, default_value_t = 3)]
        window: i64,
        #[command(flatten)]
        seqs: SeqArgs,
        #[command(flatten)]
        probe: NbhdArgs,
    },
    /// Find a point where the D sets of two sequence pairs differ
    Distinct {
        #[arg(long, value_name = "FILE")]
        seqs: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        seqs2: Option<PathBuf>,
        #[arg(long, value_name = "SEQ")]
        x: Option<bicyclic_core::Sequence>,
        #[arg(long, value_name = "SEQ")]
        y: Option<bicyclic_core::Sequence>,
        #[arg(long, value_name = "SEQ")]
        x2: Option<bicyclic_core::Sequence>,
        #[arg(long, value_name = "SEQ")]
        y2: Option<bicyclic_core::Sequence>,
        #[arg(long, default_value_t = 10)]
        window: i64,
    },
    /// The bicyclic word of an element of C[n], or the part of U outside C[n]
    Corner {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        elem: Option<Element>,
        #[command(flatten)]
        topology: TopologyArgs,
        #[command(flatten)]
        nbhd: NbhdArgs,
    },
    /// The difference a - b, or its residue modulo m
    Quotient {
        x: Element,
        #[arg(long, short, allow_hyphen_values = true)]
        modulus: Option<i64>,
    },
    /// Run the oracle agreement suite
    Verify {
        #[arg(long, default_value_t = 6)]
        window: i64,
        #[command(flatten)]
        seqs: SeqArgs,
    },
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: impl Serialize) -> Self {
        Output {
            text: text.into(),
            json: serde_json::to_value(json).expect("serializable output"),
            ok: true,
        }
    }
}

fn pair_set(points: &[Pair]) -> String {
    let items: Vec<String> = points.iter().map(Pair::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn topology_arg(value: &str, seqs: &SeqArgs) -> Result<bicyclic_core::TopologySpec, CliError> {
    match Kind::from_name(value) {
        Some(kind) => topology_of_kind(kind, seqs),
        None => topology_from_value(read_json(&PathBuf::from(value))?),
    }
}

fn seqs_from(
    file: &Option<PathBuf>,
    x: &Option<bicyclic_core::Sequence>,
    y: &Option<bicyclic_core::Sequence>,
) -> Result<SequencePair, CliError> {
    SeqArgs {
        seqs: file.clone(),
        x: x.clone(),
        y: y.clone(),
    }
    .load()
}

fn run(command: Command) -> Result<Output, CliError> {
    Ok(match command {
        Command::Mul { x, y } => {
            let z = x * y;
            Output::new(z.to_string(), z)
        }
        Command::Inv { x } => Output::new(x.inverse().to_string(), x.inverse()),
        Command::Leq { x, y } => {
            let b = bicyclic_core::element::leq(x, y);
            Output::new(b.to_string(), b)
        }
        Command::Upset { apex, member, seqs } => {
            let up = UpSet::new(apex);
            match (member, seqs.load_optional()?) {
                (Some(x), _) => {
                    let b = up.contains(x);
                    Output::new(b.to_string(), b)
                }
                (None, Some(s)) => {
                    let rest = DSet::new(s).upset_minus(up);
                    Output::new(pair_set(&rest), rest)
                }
                (None, None) => {
                    return Err(CliError::Parse(
                        "upset needs --member X or sequences (--seqs/--x/--y)".into(),
                    ))
                }
            }
        }
        Command::Dmember { point, seqs } => {
            let b = DSet::new(seqs.load()?).contains(point);
            Output::new(b.to_string(), b)
        }
        Command::Nbhd {
            point,
            topology,
            nbhd,
        } => {
            let u = nbhd.load(|| topology.load())?;
            let b = u.contains(point);
            Output::new(b.to_string(), b)
        }
        Command::Witness {
            elem,
            side,
            window,
            topology,
            nbhd,
        } => {
            if window < 0 {
                return Err(CliError::Domain(format!(
                    "window must be non-negative, got {window}"
                )));
            }
            let u = nbhd.load(|| topology.load())?;
            let w = shift_witness(elem, side, &u)?;
            let w = w
                .verified(window)
                .map_err(|v| CliError::Domain(format!("witness fails at {v}")))?;
            // the same inclusion against the brute-force sets
            let v_win = Window::new(window);
            let reach = elem.a.abs().max(elem.b.abs());
            let u_bits = brute_membership(Window::new(2 * window + 2 * reach), SetKind::Nbhd(&u));
            let v_bits = brute_membership(v_win, SetKind::Nbhd(&w.v));
            if let Some(v) = enumerate(v_win)
                .into_iter()
                .find(|&v| v_bits.contains(v) && !u_bits.contains(translate(elem, v, side)))
            {
                return Err(CliError::Domain(format!(
                    "oracle rejects the witness at {v}"
                )));
            }
            let text = format!(
                "element {}\nside {}\nU = {}\ntrace = {}\nV = {}\nverified on window {}",
                w.element,
                match side {
                    Side::Left => "left",
                    Side::Right => "right",
                },
                w.u,
                pair_set(&w.trace),
                w.v,
                window
            );
            Output::new(text, &w)
        }
        Command::Compare {
            coarse,
            fine,
            window,
            seqs,
            probe,
        } => {
            let coarse = topology_arg(&coarse, &seqs)?;
            let fine = topology_arg(&fine, &seqs)?;
            let probe = probe.load(|| Ok(coarse.clone()))?;
            let verdict = compare_at_zero(&coarse, &fine, &probe, window)?;
            let text = match &verdict {
                ComparisonVerdict::ContainsWitness(n) => format!("contains witness {n}"),
                ComparisonVerdict::SeparatedBy(p) => format!("separated by {p}"),
                ComparisonVerdict::InconclusiveAtWindow(w) => format!("inconclusive at window {w}"),
            };
            Output::new(text, verdict)
        }
        Command::Distinct {
            seqs,
            seqs2,
            x,
            y,
            x2,
            y2,
            window,
        } => {
            let s1 = seqs_from(&seqs, &x, &y)?;
            let s2 = match &seqs2 {
                Some(path) => seqs_from_value(read_json(path)?)?,
                None => seqs_from(&None, &x2, &y2)?,
            };
            let d = distinctness_certificate(&s1, &s2, window)?;
            let text = match d {
                Distinctness::Separated(p) => format!("separated by {p}"),
                Distinctness::NotFound { window } => {
                    format!("no separating point in window {window}")
                }
            };
            Output::new(text, d)
        }
        Command::Corner {
            n,
            elem,
            topology,
            nbhd,
        } => match elem {
            Some(x) => {
                let w = to_bicyclic(n, x)?;
                Output::new(w.to_string(), w)
            }
            None => {
                let u = nbhd.load(|| topology.load())?;
                let tail = corner_tail(&u, n)?;
                Output::new(pair_set(&tail), tail)
            }
        },
        Command::Quotient { x, modulus } => {
            let r = match modulus {
                Some(m) => quotient_mod(m, x)?,
                None => difference_hom(x)?,
            };
            Output::new(r.to_string(), r)
        }
        Command::Verify { window, seqs } => {
            if window < 1 {
                return Err(CliError::Domain(format!(
                    "window must be positive, got {window}"
                )));
            }
            let mut pairs = vec![
                SequencePair::symmetric(vec![2], 2)?,
                SequencePair::new("[2]+2".parse()?, "[3]+2".parse()?)?,
                SequencePair::new("[3,6]+3".parse()?, "[2,5,9]+2".parse()?)?,
            ];
            pairs.extend(seqs.load_optional()?);
            let reports = agreement_suite(window, &pairs);
            let lines: Vec<String> = reports
                .iter()
                .map(|r| {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    match &r.counterexample {
                        Some(c) => format!("{status} {} ({} checks): {c}", r.name, r.checked),
                        None => format!("{status} {} ({} checks)", r.name, r.checked),
                    }
                })
                .collect();
            let mut out = Output::new(lines.join("\n"), &reports);
            out.ok = reports.iter().all(|r| r.passed);
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
