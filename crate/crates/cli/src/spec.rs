use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use visipoly::graph::{complete, corona, cycle, path};
use visipoly::{parse_graph6, Graph};

/// Textual description of a graph given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Graph6(String),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// First line of a graph6 file.
    File(PathBuf),
    Corona(Box<GraphSpec>, Box<GraphSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError(pub String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SpecError {}

fn err<T>(msg: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError(msg.into()))
}

fn parse_order(kind: &str, text: &str) -> Result<usize, SpecError> {
    text.trim()
        .parse()
        .map_err(|_| SpecError(format!("{kind}: expected a vertex count, found {text:?}")))
}

/// Splits `a,b` at the single comma that is not nested in parentheses.
fn split_pair(inner: &str) -> Result<(&str, &str), SpecError> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                if split.is_some() {
                    return err(format!("corona takes two graphs, found {inner:?}"));
                }
                split = Some(i);
            }
            _ => {}
        }
        if depth < 0 {
            return err(format!("unbalanced parentheses in {inner:?}"));
        }
    }
    match split {
        Some(i) if depth == 0 => Ok((&inner[..i], &inner[i + 1..])),
        _ => err(format!("corona takes two graphs, found {inner:?}")),
    }
}

impl FromStr for GraphSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("corona(") {
            let Some(inner) = rest.strip_suffix(')') else {
                return err(format!("missing closing parenthesis in {s:?}"));
            };
            let (g, h) = split_pair(inner)?;
            return Ok(GraphSpec::Corona(Box::new(g.parse()?), Box::new(h.parse()?)));
        }
        let Some((kind, arg)) = s.split_once(':') else {
            return err(format!(
                "unrecognised graph {s:?}; use g6:, path:, cycle:, complete:, file: or corona(..,..)"
            ));
        };
        match kind {
            "g6" => Ok(GraphSpec::Graph6(arg.to_string())),
            "path" => Ok(GraphSpec::Path(parse_order(kind, arg)?)),
            "cycle" => Ok(GraphSpec::Cycle(parse_order(kind, arg)?)),
            "complete" => Ok(GraphSpec::Complete(parse_order(kind, arg)?)),
            "file" => Ok(GraphSpec::File(PathBuf::from(arg))),
            _ => err(format!("unknown graph kind {kind:?}")),
        }
    }
}

impl GraphSpec {
    pub fn resolve(&self) -> Result<Graph, SpecError> {
        let lib = |e: visipoly::Error| SpecError(e.to_string());
        match self {
            GraphSpec::Graph6(s) => parse_graph6(s).map_err(|e| SpecError(format!("g6:{s}: {e}"))),
            GraphSpec::Path(n) => path(*n).map_err(lib),
            GraphSpec::Cycle(n) => cycle(*n).map_err(lib),
            GraphSpec::Complete(n) => complete(*n).map_err(lib),
            GraphSpec::File(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| SpecError(format!("{}: {e}", p.display())))?;
                let line = text
                    .lines()
                    .find(|l| !l.trim().is_empty())
                    .ok_or_else(|| SpecError(format!("{}: no graph found", p.display())))?;
                parse_graph6(line).map_err(|e| SpecError(format!("{}: {e}", p.display())))
            }
            GraphSpec::Corona(g, h) => {
                let (g, h) = (g.resolve()?, h.resolve()?);
                corona(&g, &h).map(|(c, _)| c).map_err(lib)
            }
        }
    }
}
