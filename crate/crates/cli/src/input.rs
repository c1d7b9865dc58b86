use crate::args::InputFormat;
use crate::error::CliError;
use quadsat::Graph;
use sha2::{Digest, Sha256};
use std::io::Read;
use std::path::Path;

pub struct Input {
    pub bytes: Vec<u8>,
}

impl Input {
    pub fn read(path: Option<&Path>) -> Result<Input, CliError> {
        let bytes = match path {
            Some(p) => std::fs::read(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
            None => {
                let mut buf = Vec::new();
                std::io::stdin()
                    .read_to_end(&mut buf)
                    .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
                buf
            }
        };
        Ok(Input { bytes })
    }

    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(&self.bytes))
    }

    fn text(&self) -> Result<&str, CliError> {
        std::str::from_utf8(&self.bytes).map_err(|_| CliError::Input("input is not UTF-8".into()))
    }

    pub fn graph(&self, format: InputFormat) -> Result<Graph, CliError> {
        let text = self.text()?;
        let format = match format {
            InputFormat::Auto => detect(text),
            f => f,
        };
        match format {
            InputFormat::Edges => {
                let parsed = Graph::parse_edge_list(text)?;
                if parsed.duplicates > 0 {
                    eprintln!("warning: {} duplicate edge(s) collapsed", parsed.duplicates);
                }
                Ok(parsed.graph)
            }
            _ => {
                let line = graph6_lines(text)
                    .next()
                    .ok_or_else(|| CliError::Input("no graph in input".into()))?;
                Ok(Graph::from_graph6(line)?)
            }
        }
    }

    /// One graph per non-empty line.
    pub fn graph6_stream(&self) -> Result<Vec<Graph>, CliError> {
        graph6_lines(self.text()?)
            .enumerate()
            .map(|(i, line)| Graph::from_graph6(line).map_err(|e| CliError::Input(format!("graph6 line {}: {e}", i + 1))))
            .collect()
    }
}

fn graph6_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty())
}

/// A leading `n m` line means an edge list; anything else is graph6.
fn detect(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) => {
            let fields: Vec<&str> = l.split_whitespace().collect();
            if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
                InputFormat::Edges
            } else {
                InputFormat::Graph6
            }
        }
        None => InputFormat::Graph6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_formats() {
        assert_eq!(detect("# c4\n4 4\n0 1\n"), InputFormat::Edges);
        assert_eq!(detect("C~\n"), InputFormat::Graph6);
        assert_eq!(detect(">>graph6<<C~"), InputFormat::Graph6);
        assert_eq!(detect("?"), InputFormat::Graph6);
    }
}
