//! Input sources, named constructors and eigenvalue specifications.

use std::io::Read;
use std::path::PathBuf;

use eigmatch_core::families::{c3aaa, caterpillar, cycle, double_star, fig2_graph, hub_join, path, star, y6};
use eigmatch_core::{parse_edge_list, parse_graph6, AlgebraicNumber, AlgebraError, Graph};

use crate::error::CliError;

/// Where the graph comes from. `Stdin` reads graph6 lines.
#[derive(Clone, Debug)]
pub enum Source {
    Graph6(String),
    Graph6File(PathBuf),
    EdgeList(PathBuf),
    Construct(String),
    Stdin,
}

fn read_path(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn graph6_lines(text: &str) -> Result<Vec<Graph>, CliError> {
    let graphs = text
        .lines()
        .map(|l| l.trim().trim_start_matches(">>graph6<<"))
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(CliError::Usage("no graph in input".into()));
    }
    Ok(graphs)
}

impl Source {
    /// Every graph the source provides; files and stdin may hold several.
    pub fn load(&self) -> Result<Vec<Graph>, CliError> {
        match self {
            Source::Graph6(s) => Ok(vec![parse_graph6(s)?]),
            Source::Graph6File(p) => graph6_lines(&read_path(p)?),
            Source::EdgeList(p) => Ok(vec![parse_edge_list(&read_path(p)?)?]),
            Source::Construct(spec) => Ok(vec![construct(spec)?]),
            Source::Stdin => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                if s.trim_start().starts_with(|c: char| c.is_ascii_digit() || c == '#') {
                    Ok(vec![parse_edge_list(&s)?])
                } else {
                    graph6_lines(&s)
                }
            }
        }
    }

    /// Exactly one graph.
    pub fn load_one(&self) -> Result<Graph, CliError> {
        let mut graphs = self.load()?;
        if graphs.len() != 1 {
            return Err(CliError::Usage(format!("expected one graph, found {}", graphs.len())));
        }
        Ok(graphs.remove(0))
    }
}

fn params(name: &str, args: &str, count: usize) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("`{name}` takes {count} comma-separated non-negative integer parameter(s)"));
    let values: Vec<usize> = if args.is_empty() { Vec::new() } else { args.split(',').map(|a| a.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()? };
    if count != usize::MAX && values.len() != count {
        return Err(bad());
    }
    Ok(values)
}

/// Builds a graph from `name:params`.
///
/// `path:n`, `cycle:n`, `star:n` (on `n` vertices), `c3aaa:a`,
/// `caterpillar:h1,h2,...`, `double-star:p,q`, `y6`, `fig2`, and
/// `star-hub:t,copies` (a hub joined to the centers of `copies` stars
/// `K_{1,t}`).
pub fn construct(spec: &str) -> Result<Graph, CliError> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let g = match name.trim() {
        "path" => path(params(name, args, 1)?[0])?,
        "cycle" => cycle(params(name, args, 1)?[0])?,
        "star" => star(params(name, args, 1)?[0])?,
        "c3aaa" => c3aaa(params(name, args, 1)?[0])?,
        "caterpillar" => caterpillar(&params(name, args, usize::MAX)?)?,
        "double-star" => {
            let p = params(name, args, 2)?;
            double_star(p[0], p[1])?
        }
        "y6" => {
            params(name, args, 0)?;
            y6()
        }
        "fig2" => {
            params(name, args, 0)?;
            fig2_graph()
        }
        "star-hub" => {
            let p = params(name, args, 2)?;
            let parts: Vec<(Graph, usize)> = (0..p[1]).map(|_| star(p[0] + 1).map(|s| (s, 0))).collect::<Result<_, _>>()?;
            hub_join(&parts, 0)?
        }
        other => return Err(CliError::Usage(format!("unknown constructor `{other}`"))),
    };
    Ok(g)
}

/// Exact eigenvalue input: `p/q`, an integer, or
/// `poly:c0,c1,...;interval:lo,hi`. Decimals are refused so that every
/// query is exact.
pub fn parse_lambda(s: &str) -> Result<AlgebraicNumber, CliError> {
    let t = s.trim();
    let rational_part = t.strip_prefix("poly:").map_or(t, |_| "");
    if rational_part.contains('.') {
        return Err(CliError::Usage(format!("decimal eigenvalue `{t}` is not accepted; give p/q or poly:c0,...;interval:lo,hi")));
    }
    t.parse::<AlgebraicNumber>().map_err(|e: AlgebraError| e.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_by_name() {
        assert_eq!(construct("c3aaa:2").unwrap().order(), 9);
        assert_eq!(construct("fig2").unwrap().order(), 51);
        assert_eq!(construct("caterpillar:1,0,2").unwrap().order(), 6);
        assert_eq!(construct("star-hub:2,3").unwrap().order(), 10);
        assert!(construct("cycle:2").is_err());
        assert!(construct("path").is_err());
        assert!(construct("widget:3").is_err());
    }

    #[test]
    fn lambda_specs() {
        assert_eq!(parse_lambda("-2").unwrap(), AlgebraicNumber::from_integer(-2));
        assert_eq!(parse_lambda("4/2").unwrap(), AlgebraicNumber::from_integer(2));
        assert!(parse_lambda("poly:-1,1,1;interval:0,1").is_ok());
        assert!(matches!(parse_lambda("1.5"), Err(CliError::Usage(_))));
        assert!(matches!(parse_lambda("poly:-2,0,1;interval:-2,2"), Err(CliError::Lambda(_))));
    }
}
