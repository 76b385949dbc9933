//! Command-line interface. Every subcommand writes deterministic text to the
//! supplied writer; `main` maps errors to exit status 1 (clap handles usage
//! errors with status 2).

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::codes::{self, Witness};
use crate::conjugacy;
use crate::error::Error;
use crate::family::Family;
use crate::lazard::{self, LazardConfig, Selector, Side};
use crate::nyldon;
use crate::oracle;
use crate::par::Exec;
use crate::word::{format_word, parse_word, Alphabet, Factorization, Permutation, Word};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Check(String),
}

#[derive(Debug, Parser)]
#[command(name = "nyldon", version, about = "Lyndon and Nyldon words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Lyndon,
    Nyldon,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Lyndon => Family::Lyndon,
            FamilyArg::Nyldon => Family::Nyldon,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Melancon,
    Bruteforce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SelectArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PermArg {
    Identity,
    Reverse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factorize a word into Lyndon or Nyldon factors.
    Factorize {
        word: String,
        #[arg(long, value_enum, default_value = "nyldon")]
        family: FamilyArg,
        /// Alphabet size (digit words for k <= 10, comma lists above).
        #[arg(short = 'k', default_value_t = 10)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Test membership of a word.
    Test {
        word: String,
        #[arg(long, value_enum, default_value = "nyldon")]
        family: FamilyArg,
        #[arg(short = 'k', default_value_t = 10)]
        k: usize,
    },
    /// List all words of a family up to a length.
    Enumerate {
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "nyldon")]
        family: FamilyArg,
    },
    /// Nyldon conjugate of a primitive word.
    Conjugate {
        word: String,
        #[arg(long, value_enum, default_value = "melancon")]
        method: Method,
        /// Run both methods and fail if they disagree.
        #[arg(long)]
        verify: bool,
        #[arg(short = 'k', default_value_t = 10)]
        k: usize,
    },
    /// Per-length counts of Lyndon and Nyldon words.
    Count {
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Compare against the necklace-counting formula.
        #[arg(long)]
        check_formula: bool,
    },
    /// Run a Lazard elimination.
    Lazard {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum)]
        select: SelectArg,
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum)]
        perm: Option<PermArg>,
        /// Print every step as `i | Y_i | u_i`.
        #[arg(long)]
        trace: bool,
    },
    /// Comma-free and circular code checks on the words of one length.
    Codes {
        #[command(subcommand)]
        check: CodesCommand,
    },
    /// Length-preserving bijection from non-Lyndon to non-Nyldon words.
    Bijection {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
    },
    /// Factorizations of the powers of a word.
    Powers {
        word: String,
        #[arg(long, default_value_t = 5)]
        max_exp: usize,
        #[arg(long, value_enum, default_value = "nyldon")]
        family: FamilyArg,
        #[arg(short = 'k', default_value_t = 10)]
        k: usize,
    },
    /// Standard factorization of a Nyldon word.
    Standard {
        word: String,
        #[arg(short = 'k', default_value_t = 10)]
        k: usize,
    },
    /// Whether no Nyldon word up to a length starts with a prefix.
    Forbidden {
        prefix: String,
        #[arg(long)]
        max_len: usize,
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CodesCommand {
    CommaFree {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value = "nyldon")]
        family: FamilyArg,
    },
    Circular {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        /// Bound on |uv|; defaults to 4n.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value = "nyldon")]
        family: FamilyArg,
    },
}

/// JSON form of `factorize --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizeJson {
    pub word: String,
    pub factors: Vec<String>,
    pub family: Family,
}

fn join_words(words: &[Word], alphabet: Alphabet, sep: &str) -> String {
    words
        .iter()
        .map(|x| format_word(x, alphabet))
        .collect::<Vec<_>>()
        .join(sep)
}

fn tuple(f: &Factorization, alphabet: Alphabet) -> String {
    format!("({})", join_words(f.factors(), alphabet, ","))
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Factorize {
            word,
            family,
            k,
            json,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let w = parse_word(word, alphabet)?;
            let family = Family::from(*family);
            let f = family.factorize(&w)?;
            if *json {
                let record = FactorizeJson {
                    word: format_word(&w, alphabet),
                    factors: f.factors().iter().map(|x| format_word(x, alphabet)).collect(),
                    family,
                };
                writeln!(out, "{}", serde_json::to_string(&record).expect("serializable"))?;
            } else {
                writeln!(out, "{}", f.format(alphabet))?;
            }
        }
        Command::Test { word, family, k } => {
            let alphabet = Alphabet::new(*k)?;
            let w = parse_word(word, alphabet)?;
            writeln!(out, "{}", Family::from(*family).contains(&w)?)?;
        }
        Command::Enumerate { k, max_len, family } => {
            let alphabet = Alphabet::new(*k)?;
            let words = Family::from(*family).enumerate(alphabet, *max_len, Exec::default());
            writeln!(out, "{}", join_words(&words, alphabet, " "))?;
        }
        Command::Conjugate {
            word,
            method,
            verify,
            k,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let w = parse_word(word, alphabet)?;
            let result = match method {
                Method::Melancon => conjugacy::melancon_nyldon_conjugate(&w)?,
                Method::Bruteforce => conjugacy::nyldon_conjugate_bruteforce(&w)?,
            };
            if *verify {
                let other = match method {
                    Method::Melancon => conjugacy::nyldon_conjugate_bruteforce(&w)?,
                    Method::Bruteforce => conjugacy::melancon_nyldon_conjugate(&w)?,
                };
                if other != result {
                    return Err(CliError::Check(format!(
                        "methods disagree: {} vs {}",
                        format_word(&result, alphabet),
                        format_word(&other, alphabet)
                    )));
                }
            }
            writeln!(out, "{}", format_word(&result, alphabet))?;
        }
        Command::Count {
            k,
            n,
            family,
            check_formula,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let families: Vec<Family> = match family {
                Some(f) => vec![(*f).into()],
                None => vec![Family::Lyndon, Family::Nyldon],
            };
            let columns: Vec<Vec<u64>> = families
                .iter()
                .map(|&f| oracle::count_by_length(f, alphabet, *n))
                .collect();
            let mut mismatch = None;
            for len in 1..=*n {
                let mut line = len.to_string();
                for col in &columns {
                    line.push_str(&format!(" {}", col[len - 1]));
                }
                if *check_formula {
                    let expected = oracle::necklace_count(*k as u64, len as u64);
                    line.push_str(&format!(" {expected}"));
                    if columns.iter().any(|c| c[len - 1] != expected) && mismatch.is_none() {
                        mismatch = Some(len);
                    }
                }
                writeln!(out, "{line}")?;
            }
            if let Some(len) = mismatch {
                return Err(CliError::Check(format!(
                    "count at length {len} disagrees with the necklace formula"
                )));
            }
        }
        Command::Lazard {
            side,
            select,
            k,
            n,
            perm,
            trace,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let selector = match select {
                SelectArg::Min => Selector::LexMin,
                SelectArg::Max => Selector::LexMax,
            };
            let mut config = LazardConfig::new(side, selector, alphabet, *n);
            match perm {
                Some(PermArg::Reverse) => config = config.with_permutation(Permutation::reverse(alphabet)),
                Some(PermArg::Identity) | None => {}
            }
            let run = lazard::lazard_run(&config)?;
            lazard::lazard_extract(&run)?;
            if *trace {
                write!(out, "{}", run.render(alphabet))?;
            } else {
                writeln!(out, "{}", join_words(&run.eliminated(), alphabet, " "))?;
            }
        }
        Command::Codes { check } => run_codes(check, out)?,
        Command::Bijection { n, k } => {
            let alphabet = Alphabet::new(*k)?;
            for row in oracle::counting_bijection(alphabet, *n)? {
                writeln!(
                    out,
                    "{} {} -> {} {}",
                    format_word(&row.source, alphabet),
                    tuple(&row.lyndon, alphabet),
                    format_word(&row.image, alphabet),
                    tuple(&row.nyldon, alphabet)
                )?;
            }
        }
        Command::Powers {
            word,
            max_exp,
            family,
            k,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let w = parse_word(word, alphabet)?;
            let family = Family::from(*family);
            for e in 1..=*max_exp {
                let f = family.factorize(&w.pow(e))?;
                writeln!(out, "{e} {}", f.format(alphabet))?;
            }
        }
        Command::Standard { word, k } => {
            let alphabet = Alphabet::new(*k)?;
            let w = parse_word(word, alphabet)?;
            let sf = nyldon::standard_factorization(&w)?;
            writeln!(
                out,
                "{}|{}",
                format_word(&sf.left, alphabet),
                format_word(&sf.right, alphabet)
            )?;
        }
        Command::Forbidden { prefix, max_len, k } => {
            let alphabet = Alphabet::new(*k)?;
            let p = parse_word(prefix, alphabet)?;
            writeln!(out, "{}", nyldon::is_forbidden_prefix_upto(&p, alphabet, *max_len)?)?;
        }
    }
    Ok(())
}

fn run_codes(check: &CodesCommand, out: &mut dyn Write) -> Result<(), CliError> {
    match check {
        CodesCommand::CommaFree { k, n, family } => {
            let alphabet = Alphabet::new(*k)?;
            let code = Family::from(*family).words_of_length(alphabet, *n, Exec::default());
            let verdict = codes::is_comma_free_uniform(&code)?;
            match &verdict.witness {
                None => writeln!(out, "comma-free: yes")?,
                Some(witness) => {
                    let Witness::CommaFree { u, x, v } = witness else {
                        unreachable!("comma-free check yields comma-free witnesses");
                    };
                    let message = Word::concat([u.letters(), x.letters(), v.letters()]);
                    let blocks: Vec<Word> = message.chunks(*n).map(Word::from).collect();
                    let blocks: Vec<String> = blocks
                        .iter()
                        .map(|b| format!("({})", format_word(b, alphabet)))
                        .collect();
                    writeln!(
                        out,
                        "comma-free: no {} = {}",
                        witness.render(alphabet),
                        blocks.concat()
                    )?;
                }
            }
        }
        CodesCommand::Circular {
            k,
            n,
            bound,
            family,
        } => {
            let alphabet = Alphabet::new(*k)?;
            let bound = bound.unwrap_or(4 * n);
            let code = Family::from(*family).words_of_length(alphabet, *n, Exec::default());
            let verdict = codes::is_circular_bounded(&code, bound)?;
            match &verdict.witness {
                None => writeln!(out, "circular (bounded, |uv| <= {bound}): no counterexample")?,
                Some(witness) => writeln!(
                    out,
                    "circular (bounded, |uv| <= {bound}): counterexample {}",
                    witness.render(alphabet)
                )?,
            }
        }
    }
    Ok(())
}

/// Parses `args` and runs the command, returning the process exit status.
pub fn run_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("nyldon").chain(args.iter().copied());
        let code = run_with_args(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(run(&["factorize", "10100", "--family", "nyldon"]).1, "10|100\n");
        assert_eq!(run(&["factorize", "1001", "--family", "lyndon"]).1, "1|001\n");
        let (code, _, err) = run(&["factorize", ""]);
        assert_eq!(code, 1);
        assert!(err.contains("empty word"));
        assert_eq!(run(&["factorize", "2,10,0", "-k", "11"]).1, "2|10,0\n");
    }

    #[test]
    fn json_round_trip() {
        let (code, out, _) = run(&["factorize", "1001010010", "--json"]);
        assert_eq!(code, 0);
        let record: FactorizeJson = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(record.family, Family::Nyldon);
        assert_eq!(record.factors, vec!["10010", "10010"]);
        let alphabet = Alphabet::new(10).unwrap();
        let parts: Vec<Word> = record
            .factors
            .iter()
            .map(|f| parse_word(f, alphabet).unwrap())
            .collect();
        assert_eq!(
            Word::concat(parts.iter().map(|p| p.letters())),
            parse_word(&record.word, alphabet).unwrap()
        );
    }

    #[test]
    fn enumerate_and_conjugate() {
        assert_eq!(
            run(&["enumerate", "-k", "2", "--max-len", "3", "--family", "nyldon"]).1,
            "0 1 10 100 101\n"
        );
        assert_eq!(run(&["conjugate", "01", "--method", "melancon"]).1, "10\n");
        assert_eq!(run(&["conjugate", "001", "--verify"]).1, "100\n");
        assert_eq!(run(&["conjugate", "0101"]).0, 1);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["factorize", "102", "-k", "2"]).0, 1);
        assert_eq!(run(&["factorize"]).0, 2);
        assert_eq!(run(&["nonsense"]).0, 2);
        assert_eq!(run(&["lazard", "--side", "up", "--select", "min", "-n", "3"]).0, 2);
        assert_eq!(run(&["test", "1010"]).1, "false\n");
        assert_eq!(run(&["test", "10110"]).1, "true\n");
    }

    #[test]
    fn count_with_formula() {
        let (code, out, _) = run(&["count", "-k", "2", "-n", "5", "--check-formula"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1 2 2 2\n2 1 1 1\n3 2 2 2\n4 3 3 3\n5 6 6 6\n");
    }

    #[test]
    fn lazard_and_codes() {
        let (_, out, _) = run(&["lazard", "--side", "right", "--select", "min", "-n", "5"]);
        assert_eq!(out, "0 1 10 100 1000 10000 10001 1001 10010 10011 101 1011 10110 10111\n");
        let (_, out, _) = run(&["lazard", "--side", "right", "--select", "min", "-n", "2", "--trace"]);
        assert_eq!(out, "1 | {0, 1} | 0\n2 | {1, 10} | 1\n3 | {10} | 10\n");
        let (_, out, _) = run(&["lazard", "--side", "left", "--select", "min", "-n", "5", "--perm", "reverse"]);
        assert_eq!(out, "1 11110 1110 11100 110 11010 1100 11000 10 10100 100 1000 10000 0\n");
        assert_eq!(run(&["codes", "comma-free", "-k", "4", "-n", "2"]).1, "comma-free: no 3(21)0 = (32)(10)\n");
        assert_eq!(run(&["codes", "comma-free", "-k", "2", "-n", "5"]).1, "comma-free: yes\n");
        assert_eq!(
            run(&["codes", "circular", "-k", "2", "-n", "5"]).1,
            "circular (bounded, |uv| <= 20): no counterexample\n"
        );
    }

    #[test]
    fn bijection_powers_standard_forbidden() {
        let (_, out, _) = run(&["bijection", "-n", "4"]);
        assert_eq!(out.lines().count(), 13);
        assert_eq!(out.lines().next().unwrap(), "1111 (1,1,1,1) -> 0000 (0,0,0,0)");
        assert!(out.contains("1001 (1,001) -> 0101 (0,101)\n"));
        let (_, out, _) = run(&["powers", "10", "--max-exp", "2"]);
        assert_eq!(out, "1 10\n2 10|10\n");
        assert_eq!(run(&["standard", "1011101"]).1, "1011|101\n");
        assert_eq!(run(&["standard", "1010"]).0, 1);
        assert_eq!(run(&["forbidden", "1010", "--max-len", "10"]).1, "true\n");
        assert_eq!(run(&["forbidden", "101101", "--max-len", "7"]).1, "false\n");
    }
}
