//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::curves::CurveModel;
use crate::numsg::NumericalSemigroup;
use crate::verify::{
    castelnuovo_bound, deduce_frobenius_dimension, render_text, theorem_report, ReportOptions,
    SemigroupFragment,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "maxcurves", version, about = "Exact checks on maximal curves over small finite fields")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Write output to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,

    /// Increase detail in text output.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    /// Add DELTA to the affine-split census count (testing only).
    #[arg(long, hide = true, global = true, default_value_t = 0, allow_negative_numbers = true)]
    pub inject_census_delta: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify a catalog curve end to end.
    Verify {
        #[command(subcommand)]
        curve: CurveArg,
    },
    /// Gaps, genus and conductor of a numerical semigroup.
    Semigroup {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        /// Also list the non-gaps up to B.
        #[arg(long, value_name = "B")]
        upto: Option<u64>,
    },
    /// Orders at a rational place with the given Weierstrass semigroup.
    Orders {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[arg(long)]
        q: u64,
    },
    /// Castelnuovo-type genus bound for Frobenius dimension R.
    Bound {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: u64,
    },
    /// Frobenius dimensions compatible with a maximal curve of genus G.
    DeduceDim {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CurveArg {
    /// Kummer cover of the Hermitian curve over F_{qbar^6}.
    Gk {
        #[arg(long)]
        qbar: u64,
    },
    /// The genus-7 curve over F_49.
    Gsx49,
    /// Cubic Kummer cover of the Fermat curve over F_{q^2}, q ≡ 2 mod 3.
    Fk {
        #[arg(long)]
        q: u64,
    },
}

struct Output {
    text: String,
    json: serde_json::Value,
    code: i32,
}

/// Parses `args` (including the program name) and runs one subcommand.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_USAGE,
                _ => EXIT_USAGE,
            };
        }
    };
    let out = match execute(&config) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let rendered = match config.format {
        Format::Text => out.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("serializable");
            s.push('\n');
            s
        }
    };
    let written = match &config.out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(rendered.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return EXIT_USAGE;
    }
    out.code
}

fn execute(config: &RunConfig) -> Result<Output, String> {
    let verbose = config.verbose > 0;
    match &config.command {
        Command::Verify { curve } => {
            let model = match curve {
                CurveArg::Gk { qbar } => CurveModel::gk(*qbar),
                CurveArg::Gsx49 => CurveModel::gsx49(),
                CurveArg::Fk { q } => CurveModel::fk(*q),
            }
            .map_err(|e| e.to_string())?;
            let report =
                theorem_report(&model, &ReportOptions { census_delta: config.inject_census_delta });
            Ok(Output {
                text: render_text(&report, verbose),
                json: to_json(&report),
                code: if report.passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            })
        }
        Command::Semigroup { gens, upto } => {
            let s = NumericalSemigroup::from_generators(gens).map_err(|e| e.to_string())?;
            let mut frag = SemigroupFragment::new(None, &s, None);
            if let Some(b) = upto {
                frag.nongaps_upto = Some((*b, s.nongaps_upto(*b)));
            }
            let mut text = format!(
                "generators <{}>\ngenus      {}\nconductor  {}\nfrobenius  {}\n",
                join(&frag.generators),
                frag.genus,
                frag.conductor,
                s.frobenius_number().map_or("none".to_string(), |f| f.to_string())
            );
            match &frag.gaps {
                Some(g) => text += &format!("gaps       {{{}}}\n", join(g)),
                None => text += &format!("gaps       ({} gaps, list elided)\n", frag.genus),
            }
            if let Some((b, ng)) = &frag.nongaps_upto {
                text += &format!("non-gaps <= {b}: {{{}}}\n", join(ng));
            }
            Ok(Output { text, json: to_json(&frag), code: EXIT_OK })
        }
        Command::Orders { gens, q } => {
            let s = NumericalSemigroup::from_generators(gens).map_err(|e| e.to_string())?;
            let orders = s.rational_point_orders(*q).map_err(|e| e.to_string())?;
            let frag = SemigroupFragment::new(None, &s, Some(*q));
            let text = format!(
                "generators <{}>\nr          {}\norders     ({})\n",
                join(&frag.generators),
                orders.len() - 1,
                join(orders.orders())
            );
            Ok(Output { text, json: to_json(&frag), code: EXIT_OK })
        }
        Command::Bound { q, r } => {
            let b = castelnuovo_bound(i128::from(*q), i128::from(*r)).map_err(|e| e.to_string())?;
            let display = format!("{}/{} = {}", b.numerator, b.denominator, b.value());
            let json = json!({
                "q": q,
                "r": r,
                "numerator": b.numerator.to_string(),
                "denominator": b.denominator.to_string(),
                "value": b.value().to_string(),
                "display": display,
            });
            Ok(Output { text: format!("{display}\n"), json, code: EXIT_OK })
        }
        Command::DeduceDim { q, g } => {
            if *q < 2 {
                return Err(format!("q = {q} must be at least 2"));
            }
            let dims: Vec<u64> = deduce_frobenius_dimension(*q, *g).into_iter().collect();
            let text = format!("r in {{{}}}\n", join(&dims));
            Ok(Output { text, json: json!({ "q": q, "g": g, "candidates": dims }), code: EXIT_OK })
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn join(v: &[u64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
