use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qbalance::analysis::{redundancy_table, render_csv};
use qbalance::{
    decode_with, encode, enumerate_encodings, render_table, Alphabet, DecodeOptions, DecodeTrace,
    Encoded, Error, ErrorClass, GrayCode, Params, Sequence,
};
use rayon::prelude::*;

/// Balanced q-ary codes with Gray-code prefixes.
#[derive(Parser)]
#[command(name = "qbalance", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode information words, one per line.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        io: WordIo,
        /// Append the free symbol, prefix rank and balancing index to each line.
        #[arg(long)]
        trace: bool,
        /// Print the free-symbol histogram of the batch to stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Decode codewords, one per line.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        io: WordIo,
        /// Reject codewords whose weight is not the balancing value.
        #[arg(long)]
        strict: bool,
        /// Append the intermediate values to each line.
        #[arg(long)]
        trace: bool,
    },
    /// Show the code parameters and the prefix subset.
    Subset {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Tabulate every balancing index for one word (TSV).
    Table {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
    },
    /// List a Gray code as rank, base-q digits and Gray word (TSV).
    Gray {
        #[arg(long)]
        q: u32,
        /// Prefix length r′.
        #[arg(long)]
        r: usize,
        /// Emit the weight walk as `z,weight` CSV instead.
        #[arg(long)]
        walk: bool,
    },
    /// Payload weight walk over all balancing indices (`z,weight` CSV).
    Walk {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
    },
    /// Largest information length per redundancy for each scheme (CSV).
    Compare {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        rmax: u32,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Alphabet size.
    #[arg(long)]
    q: u32,
    /// Information length.
    #[arg(long)]
    k: usize,
}

impl CodeArgs {
    fn params(&self) -> Result<Params, Failure> {
        Ok(Params::new(self.q, self.k)?)
    }
}

#[derive(Args)]
struct WordIo {
    /// A single word; otherwise words are read from --in or stdin.
    #[arg(long, conflicts_with = "input")]
    word: Option<String>,
    /// Read words from a file, one per line.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write results to a file instead of stdout.
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
}

enum Failure {
    Lib(Error),
    Line(usize, Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        let class = match self {
            Failure::Lib(e) | Failure::Line(_, e) => e.class(),
            Failure::Io(_) => return 2,
        };
        match class {
            ErrorClass::Parameter => 2,
            ErrorClass::Data => 3,
            ErrorClass::Internal => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Line(n, e) => write!(f, "line {n}: {e}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl WordIo {
    /// Non-blank input lines with their 1-based line numbers.
    fn lines(&self) -> Result<Vec<(usize, String)>, Failure> {
        let text = match (&self.word, &self.input) {
            (Some(w), _) => w.clone(),
            (None, Some(path)) => fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
            (None, None) => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            }
        };
        Ok(text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim().to_string()))
            .filter(|(_, l)| !l.is_empty())
            .collect())
    }

    fn sink(&self) -> Result<Box<dyn Write>, Failure> {
        Ok(match &self.output {
            Some(path) => Box::new(
                fs::File::create(path)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
            ),
            None => Box::new(io::stdout().lock()),
        })
    }
}

/// Maps every line in parallel, then writes results in input order up to the
/// first failing line.
fn batch<T: Send>(
    io: &WordIo,
    f: impl Fn(&str) -> Result<T, Error> + Sync,
    render: impl Fn(&T) -> String,
) -> Result<Vec<T>, Failure> {
    let lines = io.lines()?;
    let results: Vec<Result<T, Error>> = lines.par_iter().map(|(_, l)| f(l)).collect();
    let mut out = BufWriter::new(io.sink()?);
    let mut done = Vec::with_capacity(results.len());
    for ((n, _), r) in lines.iter().zip(results) {
        match r {
            Ok(v) => {
                writeln!(out, "{}", render(&v))?;
                done.push(v);
            }
            Err(e) => {
                out.flush()?;
                return Err(Failure::Line(*n, e));
            }
        }
    }
    out.flush()?;
    Ok(done)
}

fn encoded_line(e: &Encoded, trace: bool) -> String {
    let c = e.codeword.to_sequence();
    if !trace {
        return c.to_string();
    }
    format!(
        "{c}\tu={}\tg={}\tz_prime={}\tz={}\ts={}\tp={}",
        e.codeword.u,
        e.codeword.prefix.word,
        e.codeword.prefix.rank,
        e.index.z,
        e.index.s,
        e.index.p
    )
}

fn decoded_line(t: &DecodeTrace, trace: bool) -> String {
    if !trace {
        return t.message.to_string();
    }
    format!(
        "{}\tu={}\tg={}\td={}\tz_prime={}\tz={}\ts={}\tp={}\tb={}\ty={}\tweight={}",
        t.message,
        t.u,
        t.prefix.word,
        t.prefix.digits,
        t.prefix.rank,
        t.index.z,
        t.index.s,
        t.index.p,
        t.balancing,
        t.payload,
        t.weight
    )
}

fn print(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Encode {
            code,
            io,
            trace,
            stats,
        } => {
            let params = code.params()?;
            let a = params.alphabet();
            let done = batch(
                &io,
                |l| encode(&params, &Sequence::parse(a, l)?),
                |e| encoded_line(e, trace),
            )?;
            if stats {
                let mut counts = vec![0u64; params.q() as usize];
                for e in &done {
                    counts[e.codeword.u as usize] += 1;
                }
                let words: Vec<String> = counts
                    .iter()
                    .enumerate()
                    .map(|(u, c)| format!("u={u}:{c}"))
                    .collect();
                eprintln!("{}", words.join(" "));
            }
        }
        Command::Decode {
            code,
            io,
            strict,
            trace,
        } => {
            let params = code.params()?;
            let a = params.alphabet();
            let options = DecodeOptions { strict };
            batch(
                &io,
                |l| decode_with(&params, &Sequence::parse(a, l)?, options),
                |t| decoded_line(t, trace),
            )?;
        }
        Command::Subset { code } => {
            let p = code.params()?;
            let s = p.subset();
            print(&format!(
                "q,k,r_prime,n,beta_n,beta_prefix,z1,z2,mean_weight\n{},{},{},{},{},{},{},{},{}\n",
                p.q(),
                p.k(),
                p.prefix_len(),
                p.n(),
                p.beta_n(),
                p.beta_prefix(),
                s.z1,
                s.z2,
                s.mean_weight
            ))?;
        }
        Command::Table { code, word } => {
            let params = code.params()?;
            let x = Sequence::parse(params.alphabet(), &word)?;
            print(&render_table(&enumerate_encodings(&params, &x)?))?;
        }
        Command::Gray { q, r, walk } => {
            let code = GrayCode::new(Alphabet::new(q)?, r)?;
            if walk {
                print(&code.walk()?.to_csv())?;
            } else {
                // Same guard as the walk, the listing is materialised line by line.
                code.walk()?;
                let mut out = BufWriter::new(io::stdout().lock());
                writeln!(out, "z\td\tg")?;
                for g in code.iter() {
                    writeln!(out, "{}\t{}\t{}", g.rank, g.digits, g.word)?;
                }
                out.flush()?;
            }
        }
        Command::Walk { code, word } => {
            let params = code.params()?;
            let x = Sequence::parse(params.alphabet(), &word)?;
            print(&params.balancer().walk(&x)?.to_csv())?;
        }
        Command::Compare { q, rmax } => {
            print(&render_csv(&redundancy_table(Alphabet::new(q)?, rmax)?))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qbalance: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
