//! Input sources and format detection.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use msnum::graph::{parse_graph6, GRAPH6_HEADER};
use msnum::{Graph, QuadraticPolynomial};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
    Poly,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// Input file; standard input is read when neither a file nor `-e` is given.
    #[arg(value_name = "FILE", conflicts_with = "expr")]
    pub file: Option<PathBuf>,

    /// Inline input text.
    #[arg(short = 'e', long = "expr", value_name = "TEXT")]
    pub expr: Option<String>,

    #[command(flatten)]
    pub format: FormatArgs,
}

/// Same as [`InputArgs`] but the file is given with `--input`, for commands
/// whose positionals are taken.
#[derive(Args, Debug, Clone, Default)]
pub struct NamedInputArgs {
    #[arg(
        short = 'i',
        long = "input",
        value_name = "FILE",
        conflicts_with = "expr"
    )]
    pub file: Option<PathBuf>,

    #[arg(short = 'e', long = "expr", value_name = "TEXT")]
    pub expr: Option<String>,

    #[command(flatten)]
    pub format: FormatArgs,
}

impl From<NamedInputArgs> for InputArgs {
    fn from(a: NamedInputArgs) -> Self {
        InputArgs {
            file: a.file,
            expr: a.expr,
            format: a.format,
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
#[group(multiple = false)]
pub struct FormatArgs {
    /// Input format; inferred from the text when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    #[arg(long)]
    pub graph6: bool,

    #[arg(long)]
    pub edgelist: bool,

    #[arg(long)]
    pub poly: bool,
}

impl FormatArgs {
    fn explicit(&self) -> Option<Format> {
        if self.graph6 {
            Some(Format::Graph6)
        } else if self.edgelist {
            Some(Format::Edgelist)
        } else if self.poly {
            Some(Format::Poly)
        } else {
            self.format
        }
    }
}

/// A quadratic form given either as a graph or as an explicit polynomial.
pub enum Form {
    Graph(Graph),
    Poly(QuadraticPolynomial),
}

impl Form {
    pub fn polynomial(&self) -> QuadraticPolynomial {
        match self {
            Form::Graph(g) => QuadraticPolynomial::from_graph(g),
            Form::Poly(f) => f.clone(),
        }
    }
}

/// Guesses the format: a `;` means a polynomial, lines of integers mean an
/// edge list, anything else is graph6.
pub fn infer_format(text: &str) -> Format {
    if text.contains(';') {
        return Format::Poly;
    }
    let mut content = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .peekable();
    if content.peek().is_none() {
        return Format::Graph6;
    }
    if content.all(|l| l.split_whitespace().all(|t| t.parse::<usize>().is_ok())) {
        Format::Edgelist
    } else {
        Format::Graph6
    }
}

impl InputArgs {
    pub fn read_text(&self, stdin: &mut dyn Read) -> Result<String, CliError> {
        if let Some(e) = &self.expr {
            return Ok(e.clone());
        }
        match &self.file {
            Some(path) => fs::read_to_string(path)
                .map_err(|e| CliError::Data(format!("{}: {e}", path.display()))),
            None => {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Data(format!("standard input: {e}")))?;
                Ok(s)
            }
        }
    }

    pub fn format_for(&self, text: &str) -> Format {
        self.format.explicit().unwrap_or_else(|| infer_format(text))
    }

    pub fn load_form(&self, stdin: &mut dyn Read) -> Result<Form, CliError> {
        let text = self.read_text(stdin)?;
        match self.format_for(&text) {
            Format::Poly => Ok(Form::Poly(QuadraticPolynomial::parse(text.trim())?)),
            Format::Edgelist => Ok(Form::Graph(Graph::parse_edge_list(&text)?)),
            Format::Graph6 => Ok(Form::Graph(single(parse_records(&text)?)?)),
        }
    }

    pub fn load_graph(&self, stdin: &mut dyn Read) -> Result<Graph, CliError> {
        match self.load_form(stdin)? {
            Form::Graph(g) => Ok(g),
            Form::Poly(_) => Err(CliError::Data(
                "this command needs a graph, not a polynomial".into(),
            )),
        }
    }

    /// Every graph in the input: one per graph6 line, or a single edge list.
    pub fn load_graphs(&self, stdin: &mut dyn Read) -> Result<Vec<Graph>, CliError> {
        let text = self.read_text(stdin)?;
        match self.format_for(&text) {
            Format::Poly => Err(CliError::Data(
                "this command needs graphs, not a polynomial".into(),
            )),
            Format::Edgelist => Ok(vec![Graph::parse_edge_list(&text)?]),
            Format::Graph6 => parse_records(&text),
        }
    }
}

/// graph6 records, one per non-blank line, with headers skipped.
pub fn parse_records(text: &str) -> Result<Vec<Graph>, CliError> {
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let record = line.trim();
        if record.is_empty() || record == GRAPH6_HEADER {
            continue;
        }
        let g =
            parse_graph6(record).map_err(|e| CliError::Data(format!("line {}: {e}", idx + 1)))?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn single(mut graphs: Vec<Graph>) -> Result<Graph, CliError> {
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(CliError::Data("no graph in input".into())),
        k => Err(CliError::Data(format!(
            "expected one graph, found {k} records"
        ))),
    }
}
