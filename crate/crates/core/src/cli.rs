//! Command-line front end. Exit codes: 0 success, 1 the queried property is
//! false, 2 bad input, 3 internal invariant failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::hall::{conjugating_element, extend_to_hall, find_hall, HallCertificate, HallError};
use crate::io::catalogue::parse_catalogue;
use crate::io::format::{parse_group, SchemeFile};
use crate::io::report::{report_files, to_json_lines};
use crate::primes::PrimeSet;
use crate::scheme::{AssociationScheme, SchemeClosedSubset, SchemeError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hallscheme", version, about = "Closed subsets, quotients, solvability and Hall subsets of association schemes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the scheme axioms
    Validate { input: String },
    /// List all closed subsets with valencies
    Closed { input: String },
    /// Print a solvable chain, or "not solvable"
    Solvable { input: String },
    /// Print a Hall π-subset certificate
    Hall {
        input: String,
        #[arg(long, value_name = "PRIMES")]
        pi: PrimeSet,
    },
    /// Find s with s*Ts = U for Hall π-subsets T and U
    Conjugate {
        input: String,
        #[arg(long, value_name = "IDS")]
        t: String,
        #[arg(long, value_name = "IDS")]
        u: String,
        /// Defaults to the primes dividing n_T
        #[arg(long, value_name = "PRIMES")]
        pi: Option<PrimeSet>,
    },
    /// Extend a closed π-subset to a Hall π-subset
    Extend {
        input: String,
        #[arg(long, value_name = "PRIMES")]
        pi: PrimeSet,
        #[arg(long, value_name = "IDS")]
        t: String,
    },
    /// Emit the quotient scheme S//T
    Quotient {
        input: String,
        #[arg(long, value_name = "IDS")]
        t: String,
    },
    /// Print the complex multiplication table
    Hypergroup { input: String },
    /// Analyse every scheme file in a directory
    Report {
        dir: PathBuf,
        #[arg(long)]
        json: bool,
        /// Prime sets to query; repeatable. Default: each prime dividing n_S
        #[arg(long, value_name = "PRIMES")]
        pi: Vec<PrimeSet>,
        /// Include per-scheme timings (output is then not reproducible)
        #[arg(long)]
        timings: bool,
    },
}

/// A failure with its exit code.
struct Exit(i32, String);

impl From<SchemeError> for Exit {
    fn from(e: SchemeError) -> Self {
        match e {
            SchemeError::InternalInconsistency(_) => Exit(EXIT_INTERNAL, e.to_string()),
            _ => Exit(EXIT_INPUT, e.to_string()),
        }
    }
}

impl From<HallError> for Exit {
    fn from(e: HallError) -> Self {
        let code = match &e {
            HallError::NotSolvable | HallError::NotSolvableGroup => EXIT_FALSE,
            HallError::NotPiValenced(_)
            | HallError::NotHall(..)
            | HallError::NotClosedPiSubset(..) => EXIT_INPUT,
            HallError::NoConjugatorFound(..) => EXIT_INTERNAL,
            HallError::Scheme(s) => return s.clone().into(),
        };
        Exit(code, e.to_string())
    }
}

fn input_error(msg: impl Into<String>) -> Exit {
    Exit(EXIT_INPUT, msg.into())
}

/// Loads `path` or `path#selector`, where the selector is a scheme name or a
/// 1-based position inside a multi-scheme file. Group files (`.grp`) are
/// turned into their thin schemes.
pub fn load_input(spec: &str) -> Result<(String, AssociationScheme), String> {
    load(spec).map_err(|e| e.1)
}

fn load(spec: &str) -> Result<(String, AssociationScheme), Exit> {
    let (path, selector) = match spec.rsplit_once('#') {
        Some((p, s)) => (p, Some(s)),
        None => (spec, None),
    };
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))?;
    if Path::new(path).extension().is_some_and(|e| e == "grp") {
        let g = parse_group(&text).map_err(|e| input_error(format!("{path}: {e}")))?;
        let table = g
            .to_group()
            .map_err(|e| input_error(format!("{path}: {e}")))?;
        return Ok((spec.to_string(), AssociationScheme::from_group(&table)));
    }
    let files = parse_catalogue(&text).map_err(|e| input_error(format!("{path}: {e}")))?;
    let file: &SchemeFile = match selector {
        None if files.len() == 1 => &files[0],
        None => {
            return Err(input_error(format!(
                "{path} holds {} schemes; select one with {path}#<name or position>",
                files.len()
            )))
        }
        Some(sel) => files
            .iter()
            .find(|f| f.name.as_deref() == Some(sel))
            .or_else(|| {
                sel.parse::<usize>()
                    .ok()
                    .and_then(|k| k.checked_sub(1))
                    .and_then(|k| files.get(k))
            })
            .ok_or_else(|| input_error(format!("no scheme {sel:?} in {path}")))?,
    };
    let scheme = file.to_scheme().map_err(|e| match e {
        SchemeError::InternalInconsistency(_) => Exit::from(e),
        other => Exit(EXIT_FALSE, format!("not an association scheme: {other}")),
    })?;
    Ok((spec.to_string(), scheme))
}

fn parse_ids(s: &AssociationScheme, ids: &str) -> Result<SchemeClosedSubset, Exit> {
    let rels: Vec<usize> = ids
        .split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| input_error(format!("bad relation id {t:?}"))))
        .collect::<Result<_, _>>()?;
    if let Some(&r) = rels.iter().find(|&&r| r >= s.rank()) {
        return Err(input_error(format!("relation {r} out of range 0..{}", s.rank())));
    }
    s.closed_from(rels.iter().copied())
        .map_err(|_| input_error(format!("{{{ids}}} is not a closed subset")))
}

fn fmt_set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn describe_certificate(out: &mut String, s: &AssociationScheme, c: &HallCertificate) {
    writeln!(out, "pi: {}", c.pi).unwrap();
    writeln!(out, "hall: {}", fmt_set(&c.hall.to_vec())).unwrap();
    writeln!(out, "n_T: {}", c.hall.valency()).unwrap();
    writeln!(out, "index: {}", c.index(s)).unwrap();
    writeln!(out, "o_pi: {} (n = {})", fmt_set(&c.o_pi.to_vec()), c.o_pi.valency()).unwrap();
    writeln!(
        out,
        "thin quotient: group of order {}, subgroup {}",
        c.thin_quotient_group.order(),
        fmt_set(&c.lifted_subgroup.to_vec())
    )
    .unwrap();
}

fn dispatch(cmd: Command, out: &mut String) -> Result<i32, Exit> {
    match cmd {
        Command::Validate { input } => {
            let (name, s) = load(&input)?;
            writeln!(
                out,
                "{name}: association scheme, {} points, rank {}, valencies {:?}",
                s.n_points(),
                s.rank(),
                s.valencies()
            )
            .unwrap();
            Ok(EXIT_OK)
        }
        Command::Closed { input } => {
            let (_, s) = load(&input)?;
            let whole = s.whole();
            let closed = s.closed_subsets();
            writeln!(out, "{} closed subsets", closed.len()).unwrap();
            for t in &closed {
                let sn = s.is_strongly_normal(t, &whole)?;
                writeln!(
                    out,
                    "n={:<4} {}{}",
                    t.valency(),
                    fmt_set(&t.to_vec()),
                    if sn { " strongly normal" } else { "" }
                )
                .unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Solvable { input } => {
            let (_, s) = load(&input)?;
            match s.solvable_chain() {
                Some(chain) => {
                    writeln!(out, "solvable").unwrap();
                    for (i, t) in chain.chain.iter().enumerate() {
                        let step = match i {
                            0 => String::new(),
                            _ => format!(" index {}", chain.indices[i - 1]),
                        };
                        writeln!(out, "  n={:<4} {}{step}", t.valency(), fmt_set(&t.to_vec())).unwrap();
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not solvable").unwrap();
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Hall { input, pi } => {
            let (_, s) = load(&input)?;
            let c = find_hall(&s, &pi)?;
            describe_certificate(out, &s, &c);
            Ok(EXIT_OK)
        }
        Command::Conjugate { input, t, u, pi } => {
            let (_, s) = load(&input)?;
            let t = parse_ids(&s, &t)?;
            let u = parse_ids(&s, &u)?;
            let pi = pi.unwrap_or_else(|| PrimeSet::of(t.valency()));
            for (label, x) in [("T", &t), ("U", &u)] {
                let p = s.pi_predicates(x, &pi);
                if !p.hall_pi_subset {
                    writeln!(
                        out,
                        "{label} = {} is not a Hall {pi}-subset: n = {}, index {}, {}-valenced: {}",
                        fmt_set(&x.to_vec()),
                        x.valency(),
                        s.total_valency() / x.valency(),
                        pi,
                        p.pi_valenced
                    )
                    .unwrap();
                    return Ok(EXIT_FALSE);
                }
            }
            let c = conjugating_element(&s, &pi, &t, &u)?;
            let chosen = c.lifted.unwrap_or(c.all[0]);
            writeln!(out, "conjugator: {chosen}").unwrap();
            writeln!(out, "all conjugators: {}", fmt_set(&c.all)).unwrap();
            Ok(EXIT_OK)
        }
        Command::Extend { input, pi, t } => {
            let (_, s) = load(&input)?;
            let t = parse_ids(&s, &t)?;
            let c = extend_to_hall(&s, &pi, &t)?;
            describe_certificate(out, &s, &c);
            Ok(EXIT_OK)
        }
        Command::Quotient { input, t } => {
            let (name, s) = load(&input)?;
            let t = parse_ids(&s, &t)?;
            let q = s.quotient_scheme(&t)?;
            let file = SchemeFile {
                name: Some(format!("{name}//{}", fmt_set(&t.to_vec()))),
                ..SchemeFile::from_scheme(q.scheme(), None)
            };
            out.push_str(&file.render());
            Ok(EXIT_OK)
        }
        Command::Hypergroup { input } => {
            let (_, s) = load(&input)?;
            write!(out, "{}", s.to_hypergroup()).unwrap();
            Ok(EXIT_OK)
        }
        Command::Report {
            dir,
            json,
            pi,
            timings,
        } => {
            let records = report_files(&dir, &pi, timings)
                .map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
            if json {
                out.push_str(&to_json_lines(&records));
            } else {
                for r in &records {
                    writeln!(
                        out,
                        "{}: valid={} solvable={} closed={} hall={}",
                        r.input,
                        r.valid,
                        r.solvable.map_or("-".into(), |b| b.to_string()),
                        r.closed_subsets.as_ref().map_or(0, |c| c.count),
                        r.hall.len()
                    )
                    .unwrap();
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs one command and returns `(exit code, stdout, stderr)`. Panics inside
/// the engine are reported as internal failures.
pub fn run(cli: Cli) -> (i32, String, String) {
    let result = std::panic::catch_unwind(|| {
        let mut out = String::new();
        let r = dispatch(cli.command, &mut out);
        (r, out)
    });
    match result {
        Ok((Ok(code), out)) => (code, out, String::new()),
        Ok((Err(Exit(code, msg)), out)) => (code, out, format!("{msg}\n")),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            (EXIT_INTERNAL, String::new(), format!("internal error: {msg}\n"))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                (EXIT_INPUT, String::new(), text)
            } else {
                (EXIT_OK, text, String::new())
            }
        }
    }
}

