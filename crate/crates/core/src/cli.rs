//! Command-line front end. [`run`] takes its streams as arguments so the
//! whole surface can be driven from tests.
//!
//! Exit codes: 0 success, 1 definitive negative, 2 usage or input error,
//! 3 unknown because the graph exceeds the search cap.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::families::{EdgeChoice, FamilyParams};
use crate::graph::{parse_graph, write_graph, Graph};
use crate::oracle::{brute_force_2cs, brute_force_kcs, census, OracleError, SearchConfig};
use crate::solve::{solve, Outcome};
use crate::verifier::{parse_partition, verify_partition, write_partition, Mode, Partition};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPPED: i32 = 3;

const ABOUT_SOLVE: &str = "\
Find a k-community structure. Forests use the matching-based algorithms and \
threshold graphs (k = 2) the clique/stable construction. For other graphs no \
efficient algorithm is known and the complexity of deciding existence is \
open, so solve falls back to exhaustive search on at most --cap vertices.";

#[derive(Parser, Debug)]
#[command(
    name = "community-kit",
    version,
    about = "Exact k-community structure tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a partition; prints violations to stderr.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Partition file, one line of community indices.
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    #[command(about = "Find a k-community structure", long_about = ABOUT_SOLVE)]
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Print a member of a graph family as an edge list.
    Generate(GenerateArgs),
    /// Exhaustive search regardless of graph class.
    Brute {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Count connected non-star graphs without a 2-community structure.
    Census {
        #[arg(long, default_value_t = 4)]
        nmin: usize,
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[command(flatten)]
        mode: ModeArgs,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Edge-list file, or `-` for stdin.
    #[arg(long)]
    graph: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeName {
    Strict,
    Generalized,
}

#[derive(Args, Debug)]
struct ModeArgs {
    #[arg(long, value_enum, default_value = "strict")]
    mode: ModeName,
    /// Also require every community to induce a connected subgraph.
    #[arg(long)]
    connected: bool,
}

impl ModeArgs {
    fn mode(&self) -> Mode {
        let m = match self.mode {
            ModeName::Strict => Mode::strict(),
            ModeName::Generalized => Mode::generalized(),
        };
        if self.connected {
            m.connected()
        } else {
            m
        }
    }
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Number of communities.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[command(flatten)]
    mode: ModeArgs,
    /// Largest graph handed to exhaustive search.
    #[arg(long, env = "COMMUNITY_KIT_CAP", default_value_t = 20)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    Star,
    Gabs,
    Gpl,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Leaves of the star.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Dotted edges present: v2v3, v3v4, both or neither.
    #[arg(long)]
    edge: Option<EdgeChoice>,
}

impl GenerateArgs {
    fn params(&self) -> Result<FamilyParams, String> {
        let need = |name: &str, v: Option<usize>| {
            v.ok_or_else(|| format!("--family {:?} needs --{name}", self.family).to_lowercase())
        };
        Ok(match self.family {
            FamilyName::Star => FamilyParams::Star {
                n: need("n", self.n)?,
            },
            FamilyName::Gabs => FamilyParams::Abs {
                a: need("a", self.a)?,
                b: need("b", self.b)?,
                s: need("s", self.s)?,
            },
            FamilyName::Gpl => FamilyParams::Pl {
                p: need("p", self.p)?,
                l: need("l", self.l)?,
                edge: self.edge.ok_or("--family gpl needs --edge")?,
            },
        })
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<Vec<u8>, Error> {
        if path == "-" {
            let mut buf = Vec::new();
            self.stdin.read_to_end(&mut buf)?;
            Ok(buf)
        } else {
            Ok(fs::read(path)?)
        }
    }

    fn graph(&mut self, input: &GraphInput) -> Result<Graph, Error> {
        let bytes = self.read(&input.graph)?;
        Ok(parse_graph(&bytes)?)
    }

    fn report_found(&mut self, p: &Partition, what: &str) -> Result<i32, Error> {
        writeln!(self.err, "{what}")?;
        self.out.write_all(write_partition(p).as_bytes())?;
        Ok(EXIT_OK)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, out, err };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, io: &mut Io) -> Result<i32, Error> {
    match command {
        Command::Verify {
            input,
            partition,
            mode,
        } => {
            let g = io.graph(&input)?;
            let p = parse_partition(&io.read(&partition)?)?;
            let report = verify_partition(&g, &p, mode.mode())?;
            if report.valid {
                writeln!(io.err, "valid")?;
                return Ok(EXIT_OK);
            }
            writeln!(io.err, "invalid")?;
            if !report.size_ok {
                writeln!(io.err, "  community below the size floor")?;
            }
            if !report.connectivity_ok {
                writeln!(io.err, "  community does not induce a connected subgraph")?;
            }
            for v in &report.violations {
                writeln!(
                    io.err,
                    "  vertex {} in community {} against {}: {} < {}",
                    v.vertex, v.community, v.other, v.lhs, v.rhs
                )?;
            }
            Ok(EXIT_NEGATIVE)
        }
        Command::Solve { input, search } => {
            let g = io.graph(&input)?;
            let sol = solve(&g, search.k, search.mode.mode(), search.cap)?;
            match sol.outcome {
                Outcome::Found(p) => io.report_found(&p, &format!("found ({})", sol.method)),
                Outcome::NoStructure(why) => {
                    writeln!(io.err, "no structure ({}): {why}", sol.method)?;
                    Ok(EXIT_NEGATIVE)
                }
                Outcome::UnknownCapped { n, cap } => {
                    writeln!(
                        io.err,
                        "unknown: {n} vertices exceed the search cap of {cap}"
                    )?;
                    Ok(EXIT_CAPPED)
                }
            }
        }
        Command::Generate(args) => {
            let params = match args.params() {
                Ok(p) => p,
                Err(msg) => {
                    writeln!(io.err, "error: {msg}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            io.out
                .write_all(write_graph(&params.generate()?).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Brute { input, search } => {
            let g = io.graph(&input)?;
            let cfg = SearchConfig::new(search.mode.mode()).with_cap(search.cap);
            let found = if search.k == 2 {
                brute_force_2cs(&g, &cfg)
            } else {
                brute_force_kcs(&g, search.k, &cfg)
            };
            match found {
                Ok(Some(p)) => io.report_found(&p, "found"),
                Ok(None) => {
                    writeln!(io.err, "no structure: exhaustive search")?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(e @ OracleError::CapExceeded { .. }) => {
                    writeln!(io.err, "unknown: {e}")?;
                    Ok(EXIT_CAPPED)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Census {
            nmin,
            nmax,
            workers,
            mode,
        } => {
            let report = census(nmin, nmax, mode.mode(), workers)?;
            io.out.write_all(report.to_text().as_bytes())?;
            let total = report.total_counterexamples();
            writeln!(io.err, "{total} counterexamples")?;
            Ok(if total == 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("community-kit").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn generate_and_solve_from_stdin() {
        let (code, star, _) = call(&["generate", "--family", "star", "--n", "3"], "");
        assert_eq!(code, 0);
        assert_eq!(star, "4 3\n0 1\n0 2\n0 3\n");
        let (code, out, err) = call(&["solve", "--graph", "-"], &star);
        assert_eq!((code, out.as_str()), (1, ""));
        assert!(err.contains("maximum matching has 1 edges"), "{err}");
        let (code, out, _) = call(&["solve", "--graph", "-", "--mode", "generalized"], &star);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[], "").0, 2);
        assert_eq!(call(&["solve"], "").0, 2);
        assert_eq!(call(&["generate", "--family", "gabs", "--a", "1"], "").0, 2);
        assert_eq!(call(&["solve", "--graph", "-"], "3 1\n0 5\n").0, 2);
        assert_eq!(
            call(
                &["generate", "--family", "gpl", "--p", "3", "--l", "2", "--edge", "x"],
                ""
            )
            .0,
            2
        );
        let (code, out, _) = call(&["solve", "--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("open"));
    }

    #[test]
    fn capped_and_brute() {
        let c5 = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
        assert_eq!(call(&["solve", "--graph", "-", "--cap", "4"], c5).0, 3);
        assert_eq!(call(&["brute", "--graph", "-", "--cap", "4"], c5).0, 3);
        let (code, out, _) = call(&["brute", "--graph", "-"], c5);
        assert_eq!((code, out.as_str()), (0, "0 0 0 1 1\n"));
        assert_eq!(call(&["brute", "--graph", "-", "--k", "3"], c5).0, 1);
    }

    #[test]
    fn census_exit_code() {
        let (code, out, _) = call(
            &["census", "--nmin", "4", "--nmax", "5", "--workers", "2"],
            "",
        );
        assert_eq!((code, out.as_str()), (0, "4 6 1 5 0\n5 21 1 20 0\n"));
        let (code, out, _) = call(&["census", "--nmin", "3", "--nmax", "3"], "");
        assert_eq!(code, 1);
        assert!(out.starts_with("3 2 1 0 1\n"));
        assert_eq!(call(&["census", "--nmin", "4", "--nmax", "12"], "").0, 2);
    }
}
