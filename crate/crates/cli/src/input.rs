use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use starcrit::families::Family;
use starcrit::{edgelist, graph6, Graph};

use crate::CliError;

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph as a graph6 string
    #[arg(long, value_name = "STRING", conflicts_with_all = ["edgelist", "family"])]
    pub graph6: Option<String>,
    /// Edge-list file ("n m" header, then one "u v" pair per line; `-` for stdin)
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    pub edgelist: Option<PathBuf>,
    /// Named family: horn, double-horn, cone-c5, complete, path, cycle, star, independent
    #[arg(long, value_name = "NAME", requires = "n")]
    pub family: Option<String>,
    /// Order for --family
    #[arg(long, value_name = "K")]
    pub n: Option<usize>,
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| CliError::Input(format!("stdin: {e}")));
    }
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn parse_graph6(s: &str) -> Result<Graph, CliError> {
    graph6::decode_str(s).map_err(|e| match e.offset() {
        Some(offset) => CliError::Input(format!("malformed graph6 at byte offset {offset}: {e}")),
        None => CliError::Input(format!("malformed graph6: {e}")),
    })
}

impl GraphArgs {
    pub fn load(&self) -> Result<Graph, CliError> {
        if let Some(s) = &self.graph6 {
            return parse_graph6(s);
        }
        if let Some(path) = &self.edgelist {
            let text = read_text(path)?;
            return edgelist::parse(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())));
        }
        if let Some(name) = &self.family {
            let family: Family = name.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
            let n = self
                .n
                .ok_or_else(|| CliError::Usage("--family needs --n".into()))?;
            return family.build(n).map_err(|e| CliError::Usage(format!("{e}")));
        }
        Err(CliError::Usage(
            "no graph given: use --graph6, --edgelist or --family with --n".into(),
        ))
    }
}

/// One graph6 string per non-empty line; `#` starts a comment line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, CliError> {
    let text = read_text(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = graph6::decode_str(line).map_err(|e| {
            CliError::Input(format!(
                "{}:{}: malformed graph6 at byte offset {}: {e}",
                path.display(),
                i + 1,
                e.offset().unwrap_or(0)
            ))
        })?;
        out.push(g);
    }
    Ok(out)
}

pub fn parse_coloring(text: &str) -> Result<Vec<u32>, CliError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| CliError::Input(format!("bad color `{t}`")))
        })
        .collect()
}

pub fn coloring_text(inline: Option<&str>, file: Option<&Path>) -> Result<String, CliError> {
    match (inline, file) {
        (Some(s), None) => Ok(s.to_string()),
        (None, Some(p)) => read_text(p),
        _ => Err(CliError::Usage(
            "give exactly one of --coloring or --coloring-file".into(),
        )),
    }
}
