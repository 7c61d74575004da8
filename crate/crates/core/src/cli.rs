//! Command-line surface. Every subcommand renders to a string so the same
//! code paths are testable without a process boundary.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::census::{self, verify, Budget, ClassTag};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Symmetry};
use crate::series::partition_key_series;
use crate::sio::{self, LemmaBijection, SioBijection, SioWord, SubstitutionBijection};
use crate::xclass::{self, MVariant, XWord};

#[derive(Debug, Parser)]
#[command(
    name = "wilf-collapse",
    version,
    about = "Word models, greedy containment and Wilf censuses for the X-class and SIO"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The X-class Av(2143, 2413, 3142, 3412)
    #[command(subcommand)]
    Xclass(XCommand),
    /// Subpermutations of the increasing oscillation
    #[command(subcommand)]
    Sio(SioCommand),
    /// Run the oracle-equivalence and bijection suites
    Selfcheck(SelfcheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum MVariantArg {
    /// every word containing the monotone pattern (does not match enumeration)
    All,
    /// tails whose first letter has the sign of the pattern
    #[default]
    Restricted,
}

impl From<MVariantArg> for MVariant {
    fn from(v: MVariantArg) -> Self {
        match v {
            MVariantArg::All => MVariant::AllWords,
            MVariantArg::Restricted => MVariant::StartSignRestricted,
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the result here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Wall-clock limit; exceeding it exits with status 2
    #[arg(long)]
    pub budget_seconds: Option<f64>,
}

impl Output {
    fn budget(&self) -> Budget {
        self.budget_seconds
            .map_or_else(Budget::unlimited, Budget::seconds)
    }
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub pattern_size: usize,
    /// Horizon of the avoidance vectors (default 10 for X, 12 for SIO)
    #[arg(long)]
    pub max_n: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub max_n: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Subcommand)]
pub enum XCommand {
    /// Permutation to word
    Encode { perm: String },
    /// Word to permutation
    Decode { word: String },
    /// Greedy containment of one word in another
    Contains { pattern: String, text: String },
    /// Class sizes |X_n|
    Count {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long)]
        budget_seconds: Option<f64>,
    },
    /// Avoidance vectors of all patterns of one size, grouped
    Census(CensusArgs),
    /// Series of words containing a crossed pattern
    Invgf {
        word: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        m_variant: MVariantArg,
    },
    /// Distinct Wilf keys per size against the coloured-partition series
    Keys {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Class counts, keys and distinct behaviours per size
    Stats(StatsArgs),
}

#[derive(Debug, Subcommand)]
pub enum SioCommand {
    /// Permutation to word
    Encode { perm: String },
    /// Word to permutation
    Decode { word: String },
    /// Packing containment of one word in another
    Contains { pattern: String, text: String },
    /// Avoidance vectors of all patterns of one size, grouped
    Census(CensusArgs),
    /// Apply the symmetry-lemma bijection, optionally inside a context
    Bijection {
        /// Pattern X with defined Start and Finish
        pattern: String,
        /// Word to map
        word: String,
        /// Class symmetry: id, rc, i or rci
        #[arg(long, default_value = "rci")]
        symmetry: String,
        #[arg(long, default_value = "")]
        prefix: String,
        #[arg(long, default_value = "")]
        suffix: String,
    },
    /// Collapse table, disjoint-factor bounds and the w3 m4 experiment
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
pub struct SelfcheckArgs {
    /// Largest text size in the oracle suites (X uses one less)
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[command(flatten)]
    pub output: Output,
}

/// What a command produced, and where it should go.
#[derive(Debug)]
pub struct Rendered {
    pub text: String,
    pub out: Option<PathBuf>,
    /// Overall verdict for commands that check something.
    pub ok: bool,
}

impl Rendered {
    fn stdout(text: String) -> Self {
        Rendered {
            text,
            out: None,
            ok: true,
        }
    }

    fn to(text: String, output: &Output) -> Self {
        Rendered {
            text,
            out: output.out.clone(),
            ok: true,
        }
    }
}

fn perm(s: &str) -> Result<Permutation> {
    s.parse()
}

fn run_x(cmd: XCommand) -> Result<Rendered> {
    Ok(match cmd {
        XCommand::Encode { perm: p } => Rendered::stdout(XWord::encode(&perm(&p)?)?.to_string()),
        XCommand::Decode { word } => Rendered::stdout(word.parse::<XWord>()?.decode().to_string()),
        XCommand::Contains { pattern, text } => {
            let (p, t): (XWord, XWord) = (pattern.parse()?, text.parse()?);
            Rendered::stdout(xclass::greedy_contains(&p, &t).to_string())
        }
        XCommand::Count {
            max_n,
            budget_seconds,
        } => {
            let budget = budget_seconds.map_or_else(Budget::unlimited, Budget::seconds);
            let mut lines = Vec::new();
            for n in 1..=max_n {
                budget.check(n - 1)?;
                lines.push(format!("{n}\t{}", xclass::enumerate_words(n).len()));
            }
            Rendered::stdout(lines.join("\n"))
        }
        XCommand::Census(args) => {
            let horizon = args.max_n.unwrap_or(ClassTag::X.default_horizon());
            let r = census::census(
                ClassTag::X,
                args.pattern_size,
                horizon,
                &args.output.budget(),
            )?;
            let text = match args.output.format {
                Format::Json => r.to_json(),
                Format::Csv => r.to_csv(),
            };
            Rendered {
                ok: r.refinement_holds,
                ..Rendered::to(text, &args.output)
            }
        }
        XCommand::Invgf {
            word,
            max_n,
            m_variant,
        } => {
            let w: XWord = word.parse()?;
            Rendered::stdout(xclass::inv_gf(&w, max_n, m_variant.into())?.to_string())
        }
        XCommand::Keys { max_n } => {
            let series = partition_key_series(max_n);
            let mut lines = vec!["n\tkeys\tseries".to_string()];
            for n in 1..=max_n {
                let keys: std::collections::HashSet<_> = xclass::enumerate_words(n)
                    .iter()
                    .map(XWord::wilf_key)
                    .collect();
                lines.push(format!("{n}\t{}\t{}", keys.len(), series.coeff(n)));
            }
            Rendered::stdout(lines.join("\n"))
        }
        XCommand::Stats(args) => {
            let max_n = args.max_n.unwrap_or(ClassTag::X.default_horizon());
            let s = census::collapse_stats(ClassTag::X, max_n, max_n, &args.output.budget())?;
            let text = match args.output.format {
                Format::Json => s.to_json(),
                Format::Csv => s.to_csv(),
            };
            Rendered::to(text, &args.output)
        }
    })
}

fn run_sio(cmd: SioCommand) -> Result<Rendered> {
    Ok(match cmd {
        SioCommand::Encode { perm: p } => {
            Rendered::stdout(SioWord::from_perm(&perm(&p)?)?.to_string())
        }
        SioCommand::Decode { word } => {
            Rendered::stdout(word.parse::<SioWord>()?.to_perm().to_string())
        }
        SioCommand::Contains { pattern, text } => {
            let (p, t): (SioWord, SioWord) = (pattern.parse()?, text.parse()?);
            Rendered::stdout(sio::sio_contains(&p, &t).to_string())
        }
        SioCommand::Census(args) => {
            let horizon = args.max_n.unwrap_or(ClassTag::Sio.default_horizon());
            let r = census::census(
                ClassTag::Sio,
                args.pattern_size,
                horizon,
                &args.output.budget(),
            )?;
            let text = match args.output.format {
                Format::Json => r.to_json(),
                Format::Csv => r.to_csv(),
            };
            Rendered {
                ok: r.refinement_holds,
                ..Rendered::to(text, &args.output)
            }
        }
        SioCommand::Bijection {
            pattern,
            word,
            symmetry,
            prefix,
            suffix,
        } => {
            let x: SioWord = pattern.parse()?;
            let s: Symmetry = symmetry.parse()?;
            let w: SioWord = word.parse()?;
            let phi = LemmaBijection::new(&x, s)?;
            let psi = SubstitutionBijection::new(prefix.parse()?, suffix.parse()?, phi);
            Rendered::stdout(psi.apply(&w).to_string())
        }
        SioCommand::Stats(args) => {
            let max_n = args.max_n.unwrap_or(ClassTag::Sio.default_horizon());
            let budget = args.output.budget();
            let s = census::collapse_stats(ClassTag::Sio, max_n, max_n, &budget)?;
            let d = census::discrepancy_experiment(max_n, &budget)?;
            let text = match args.output.format {
                Format::Json => serde_json::to_string_pretty(&serde_json::json!({
                    "collapse": s,
                    "discrepancy": d,
                }))
                .expect("stats serialise"),
                Format::Csv => s.to_csv(),
            };
            Rendered::to(text, &args.output)
        }
    })
}

fn run_selfcheck(args: SelfcheckArgs) -> Result<Rendered> {
    let budget = args.output.budget();
    let n = args.max_n;
    let lemma = verify::lemma_instances(5);
    let steps: Vec<Box<dyn Fn() -> verify::Check>> = vec![
        Box::new(move || verify::x_greedy_oracle(5, n.saturating_sub(1))),
        Box::new(move || verify::sio_greedy_oracle(6, n)),
        Box::new({
            let lemma = lemma.clone();
            move || verify::lemma_check(&lemma, n.saturating_sub(1))
        }),
        Box::new(move || verify::substitution_check(&lemma, &verify::small_contexts(), n)),
        Box::new(|| verify::no_incompatible_pairs(5)),
    ];
    let mut checks = Vec::new();
    for (i, step) in steps.iter().enumerate() {
        budget.check(i)?;
        checks.push(step());
    }
    let ok = checks.iter().all(verify::Check::passed);
    let text = match args.output.format {
        Format::Json => serde_json::to_string_pretty(&checks).expect("checks serialise"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "checked", "failures"])
                .expect("in-memory write");
            for c in &checks {
                w.serialize((&c.name, c.checked, c.failures))
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
    };
    Ok(Rendered {
        ok,
        ..Rendered::to(text, &args.output)
    })
}

pub fn run(cli: Cli) -> Result<Rendered> {
    match cli.command {
        Command::Xclass(c) => run_x(c),
        Command::Sio(c) => run_sio(c),
        Command::Selfcheck(a) => run_selfcheck(a),
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(r) => {
            match &r.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &r.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => {
                    // a closed pipe (e.g. `| head`) is not an error
                    let _ = writeln!(std::io::stdout().lock(), "{}", r.text.trim_end());
                }
            }
            if r.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: a check failed");
                ExitCode::from(1)
            }
        }
        Err(e @ Error::BudgetExceeded { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Rendered> {
        let mut full = vec!["wilf-collapse"];
        full.extend_from_slice(args);
        run(Cli::try_parse_from(full).expect("arguments parse"))
    }

    #[test]
    fn word_round_trips() {
        assert_eq!(
            run_args(&["xclass", "encode", "132"]).unwrap().text,
            "(1,0)(-2)"
        );
        assert_eq!(
            run_args(&["xclass", "decode", "(2,0)(-2)"]).unwrap().text,
            "1243"
        );
        assert_eq!(run_args(&["sio", "encode", "2413"]).unwrap().text, "w4");
        assert_eq!(run_args(&["sio", "decode", "a b"]).unwrap().text, "132");
        assert_eq!(
            run_args(&["sio", "contains", "m3", "w3"]).unwrap().text,
            "false"
        );
    }

    #[test]
    fn bijection_command() {
        let r = run_args(&["sio", "bijection", "m3", "w7 a m5"]).unwrap();
        assert_eq!(r.text, "w6 a w6");
        assert!(matches!(
            run_args(&["sio", "bijection", "b", "a"]),
            Err(Error::TypeMismatch(_))
        ));
    }

    #[test]
    fn invalid_input_errors() {
        assert!(matches!(
            run_args(&["xclass", "encode", "2143"]),
            Err(Error::NotInClass(_))
        ));
        assert!(matches!(
            run_args(&["sio", "encode", "1432"]),
            Err(Error::NotInSio { .. })
        ));
        assert!(Cli::try_parse_from(["wilf-collapse", "xclass", "census"]).is_err());
    }

    #[test]
    fn budget_exhaustion() {
        let r = run_args(&[
            "sio",
            "census",
            "--pattern-size",
            "3",
            "--budget-seconds",
            "0",
        ]);
        assert!(matches!(r, Err(Error::BudgetExceeded { completed: 0 })));
    }

    #[test]
    fn counts_and_keys() {
        let r = run_args(&["xclass", "count", "--max-n", "4"]).unwrap();
        assert_eq!(r.text, "1\t1\n2\t2\n3\t6\n4\t20");
        let r = run_args(&["xclass", "keys", "--max-n", "4"]).unwrap();
        assert!(r.text.ends_with("4\t5\t5"));
        let r = run_args(&["xclass", "invgf", "(1,0)(-2)", "--max-n", "4"]).unwrap();
        assert_eq!(r.text, "0, 0, 0, 1, 7");
    }
}
