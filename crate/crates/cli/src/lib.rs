//! The `msnum` command-line tool.
//!
//! Exit status: 0 on success, 1 on malformed input or unsupported data,
//! 2 on usage errors, 3 when a verification finds a mismatch.

mod input;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use msnum::classify::{classify_graph6_lines, classify_stream, pivot_orbit};
use msnum::closedforms::{w_tree, FamilySpec};
use msnum::enumerate::{all_graphs, random_graph};
use msnum::graphstate::{
    amplitudes, is_bent, polynomial_signs, schmidt_rank_bipartite, wht_spectrum,
};
use msnum::quadform::{parse_certificate, render_certificate, BRUTE_FORCE_CAP};
use msnum::{
    brute_force_weight, reduce_to_readonce, verify_certificate, weight, Graph, QuadraticPolynomial,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use input::{infer_format, Format, InputArgs};
use input::{Form, NamedInputArgs};

/// Fixed default for `verify --seed`, so unseeded runs are reproducible.
pub const DEFAULT_SEED: u64 = 0x6d73_6e75_6d00;

/// Largest order accepted by `verify --exhaustive`.
pub const EXHAUSTIVE_CAP: usize = 7;

#[derive(Debug)]
pub enum CliError {
    Data(String),
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Data(_) => 1,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl From<msnum::Error> for CliError {
    fn from(e: msnum::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "msnum",
    version,
    about = "Exact MS-numbers of graph states and weights of quadratic Boolean forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputStyle {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the MS-number of a graph or the weight of a polynomial.
    Weight(InputArgs),
    /// Print the readonce form (kind, m, z) and optionally the certificate.
    Reduce {
        /// Print the full substitution certificate.
        #[arg(long, visible_alias = "dump-certificate")]
        emit_certificate: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check a certificate produced by `reduce --emit-certificate`.
    VerifyCert(InputArgs),
    /// Binary rank of the adjacency (or alternating) matrix.
    Rank(InputArgs),
    /// Sign pattern of the amplitudes, basis states in index order.
    Amplitudes(InputArgs),
    /// Walsh-Hadamard spectrum as exact fractions.
    Spectrum(InputArgs),
    /// Schmidt rank of a bipartite graph state.
    Schmidt(InputArgs),
    /// Binary rank and bent status.
    Bent(InputArgs),
    /// Pivot on the edge {U, V}; prints graph6.
    Pivot {
        u: usize,
        v: usize,
        #[command(flatten)]
        input: NamedInputArgs,
    },
    /// Local complementation at V; prints graph6.
    Lc {
        v: usize,
        #[command(flatten)]
        input: NamedInputArgs,
    },
    /// Closed-form MS-number of a graph family, e.g. `formula complete 3`.
    /// The `tree` family reads its tree from the input.
    Formula {
        family: String,
        params: Vec<usize>,
        #[command(flatten)]
        input: NamedInputArgs,
    },
    /// Group a graph6 stream by (order, MS-number).
    Classify {
        /// Representatives kept per class.
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = OutputStyle::Text)]
        output: OutputStyle,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare the polynomial-time weight with the brute-force count.
    ///
    /// With `--exhaustive` every labeled graph up to `--max-n` is checked;
    /// with `--samples` random graphs are drawn; otherwise the input stream
    /// is checked.
    Verify {
        #[arg(long, requires = "max_n", conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        input: InputArgs,
    },
    /// List the pivot orbit of a graph, one graph6 record per line.
    Orbit(InputArgs),
}

/// Runs one invocation and returns the process exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                return 2;
            }
            let _ = stdout.write_all(rendered.as_bytes());
            return 0;
        }
    };
    match execute(cli.command, stdin, stderr) {
        Ok(out) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err((partial, err)) => {
            let _ = stdout.write_all(partial.as_bytes());
            let msg = match &err {
                CliError::Data(m) => format!("error: {m}\n"),
                CliError::Mismatch(m) => format!("mismatch: {m}\n"),
            };
            let _ = stderr.write_all(msg.as_bytes());
            err.exit_code()
        }
    }
}

type Outcome = Result<String, (String, CliError)>;

fn fail(e: impl Into<CliError>) -> (String, CliError) {
    (String::new(), e.into())
}

fn execute(command: Command, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Outcome {
    match command {
        Command::Weight(input) => {
            let f = input.load_form(stdin).map_err(fail)?.polynomial();
            Ok(format!("{}\n", weight(&f)))
        }
        Command::Reduce {
            emit_certificate,
            input,
        } => {
            let f = input.load_form(stdin).map_err(fail)?.polynomial();
            let r = reduce_to_readonce(&f);
            if emit_certificate {
                Ok(render_certificate(&f, &r))
            } else {
                Ok(format!(
                    "kind {}\nm {}\nz {}\n",
                    r.form.kind(),
                    r.form.m(),
                    u8::from(r.form.z())
                ))
            }
        }
        Command::VerifyCert(input) => {
            let text = input.read_text(stdin).map_err(fail)?;
            let (f, r) = parse_certificate(&text).map_err(fail)?;
            if verify_certificate(&f, &r.form, &r.certificate).map_err(fail)? {
                Ok("ok\n".into())
            } else {
                Err(fail(CliError::Mismatch(
                    "certificate does not transform the polynomial into the stated form".into(),
                )))
            }
        }
        Command::Rank(input) => {
            let rank = match input.load_form(stdin).map_err(fail)? {
                Form::Graph(g) => g.adjacency().rank(),
                Form::Poly(f) => f.alternating_matrix().rank(),
            };
            Ok(format!("{rank}\n"))
        }
        Command::Amplitudes(input) => {
            let signs = match input.load_form(stdin).map_err(fail)? {
                Form::Graph(g) => amplitudes(&g),
                Form::Poly(f) => polynomial_signs(&f),
            }
            .map_err(fail)?;
            Ok(format!("{}\n", signs.render()))
        }
        Command::Spectrum(input) => {
            let f = input.load_form(stdin).map_err(fail)?.polynomial();
            Ok(wht_spectrum(&f).map_err(fail)?.render())
        }
        Command::Schmidt(input) => {
            let g = input.load_graph(stdin).map_err(fail)?;
            Ok(format!("{}\n", schmidt_rank_bipartite(&g).map_err(fail)?))
        }
        Command::Bent(input) => {
            let f = input.load_form(stdin).map_err(fail)?.polynomial();
            let rank = f.alternating_matrix().rank();
            let bent = is_bent(&f).map_err(fail)?;
            Ok(format!("rank {rank}\nbent {bent}\n"))
        }
        Command::Pivot { u, v, input } => {
            let g = InputArgs::from(input).load_graph(stdin).map_err(fail)?;
            Ok(format!("{}\n", g.pivot(u, v).map_err(fail)?.to_graph6()))
        }
        Command::Lc { v, input } => {
            let g = InputArgs::from(input).load_graph(stdin).map_err(fail)?;
            Ok(format!(
                "{}\n",
                g.local_complement(v).map_err(fail)?.to_graph6()
            ))
        }
        Command::Formula {
            family,
            params,
            input,
        } => {
            let w = if family == "tree" {
                if !params.is_empty() {
                    return Err(fail(CliError::Data(
                        "the tree family reads a graph from the input, not numbers".into(),
                    )));
                }
                let t = InputArgs::from(input).load_graph(stdin).map_err(fail)?;
                w_tree(&t).map_err(fail)?
            } else {
                FamilySpec::from_name(&family, &params)
                    .map_err(fail)?
                    .weight()
                    .map_err(fail)?
            };
            Ok(format!("{w}\n"))
        }
        Command::Classify {
            reps,
            output,
            input,
        } => classify(reps, output, &input, stdin, stderr),
        Command::Verify {
            exhaustive,
            max_n,
            samples,
            seed,
            input,
        } => verify(exhaustive, max_n, samples, seed, &input, stdin),
        Command::Orbit(input) => {
            let g = input.load_graph(stdin).map_err(fail)?;
            let orbit = pivot_orbit(&g).map_err(fail)?;
            Ok(orbit
                .iter()
                .map(|h| format!("{}\n", h.to_graph6()))
                .collect())
        }
    }
}

fn classify(
    reps: usize,
    output: OutputStyle,
    input: &InputArgs,
    stdin: &mut dyn Read,
    stderr: &mut dyn Write,
) -> Outcome {
    let text = input.read_text(stdin).map_err(fail)?;
    let report = match input.format_for(&text) {
        Format::Graph6 => classify_graph6_lines(&text, reps),
        Format::Edgelist => classify_stream([&Graph::parse_edge_list(&text).map_err(fail)?], reps),
        Format::Poly => {
            return Err(fail(CliError::Data(
                "classify needs graphs, not a polynomial".into(),
            )))
        }
    };
    for m in &report.malformed {
        let _ = writeln!(stderr, "line {}: {}", m.line, m.message);
    }
    let rendered = match output {
        OutputStyle::Text => report.render_tsv(),
        OutputStyle::Structured => report.render_structured(),
    };
    if report.malformed.is_empty() {
        Ok(rendered)
    } else {
        let n = report.malformed.len();
        Err((
            rendered,
            CliError::Data(format!("{n} malformed record(s) skipped")),
        ))
    }
}

fn verify(
    exhaustive: bool,
    max_n: Option<usize>,
    samples: Option<usize>,
    seed: u64,
    input: &InputArgs,
    stdin: &mut dyn Read,
) -> Outcome {
    let mut checker = Checker::default();
    if exhaustive {
        let max_n = max_n.unwrap_or(0);
        if max_n > EXHAUSTIVE_CAP {
            return Err(fail(CliError::Data(format!(
                "exhaustive verification limited to --max-n {EXHAUSTIVE_CAP}"
            ))));
        }
        for g in (0..=max_n).flat_map(all_graphs) {
            checker.graph(&g).map_err(fail)?;
        }
    } else if let Some(samples) = samples {
        let max_n = max_n.unwrap_or(16);
        if max_n == 0 || max_n > BRUTE_FORCE_CAP {
            return Err(fail(CliError::Data(format!(
                "--max-n must be in 1..={BRUTE_FORCE_CAP}"
            ))));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let n = rng.random_range(1..=max_n);
            let p = rng.random::<f64>();
            checker.graph(&random_graph(&mut rng, n, p)).map_err(fail)?;
        }
    } else {
        match input.load_form_or_stream(stdin).map_err(fail)? {
            Stream::Poly(f) => checker.poly(&f, || f.to_string()).map_err(fail)?,
            Stream::Graphs(gs) => {
                for g in &gs {
                    if max_n.is_some_and(|cap| g.order() > cap) {
                        continue;
                    }
                    checker.graph(g).map_err(fail)?;
                }
            }
        }
    }
    let summary = format!(
        "checked {} mismatches {}\n",
        checker.checked,
        checker.mismatches.len()
    );
    if checker.mismatches.is_empty() {
        Ok(summary)
    } else {
        let detail: String = checker
            .mismatches
            .iter()
            .map(|m| format!("{m}\n"))
            .collect();
        let n = checker.mismatches.len();
        Err((
            detail + &summary,
            CliError::Mismatch(format!("{n} input(s) disagree with the oracle")),
        ))
    }
}

#[derive(Default)]
struct Checker {
    checked: usize,
    mismatches: Vec<String>,
}

impl Checker {
    fn graph(&mut self, g: &Graph) -> Result<(), CliError> {
        self.poly(&QuadraticPolynomial::from_graph(g), || g.to_graph6())
    }

    fn poly(&mut self, f: &QuadraticPolynomial, name: impl Fn() -> String) -> Result<(), CliError> {
        let fast = weight(f);
        let oracle = brute_force_weight(f)?;
        let r = reduce_to_readonce(f);
        let cert_ok = verify_certificate(f, &r.form, &r.certificate)?;
        self.checked += 1;
        if fast != oracle {
            self.mismatches
                .push(format!("{}\tweight {fast}\toracle {oracle}", name()));
        } else if !cert_ok {
            self.mismatches
                .push(format!("{}\tcertificate rejected", name()));
        }
        Ok(())
    }
}

enum Stream {
    Poly(QuadraticPolynomial),
    Graphs(Vec<Graph>),
}

impl InputArgs {
    fn load_form_or_stream(&self, stdin: &mut dyn Read) -> Result<Stream, CliError> {
        let text = self.read_text(stdin)?;
        Ok(match self.format_for(&text) {
            Format::Poly => Stream::Poly(QuadraticPolynomial::parse(text.trim())?),
            Format::Edgelist => Stream::Graphs(vec![Graph::parse_edge_list(&text)?]),
            Format::Graph6 => Stream::Graphs(input::parse_records(&text)?),
        })
    }
}
