use super::{check_edge, Graph, GraphError};

/// Parses the edge-list text format.
///
/// One `u v` pair per line, 0-based. Blank lines and lines starting with
/// `#` are skipped. Two directives are recognized: `nodes=<k>` fixes the
/// node count (otherwise 1 + the largest endpoint) and
/// `directed=true|false` (default false).
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared_nodes = None;
    let mut directed = false;
    let mut pairs = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |reason: String| GraphError::MalformedLine { line: line_no, reason };

        if let Some((key, value)) = line.split_once('=') {
            match key.trim() {
                "nodes" => {
                    let k: usize = value
                        .trim()
                        .parse()
                        .map_err(|_| malformed(format!("bad node count {:?}", value.trim())))?;
                    declared_nodes = Some(k);
                }
                "directed" => {
                    directed = match value.trim() {
                        "true" => true,
                        "false" => false,
                        other => return Err(malformed(format!("directed must be true or false, got {other:?}"))),
                    };
                }
                other => return Err(malformed(format!("unknown directive {other:?}"))),
            }
            continue;
        }

        let mut tokens = line.split_whitespace();
        let mut endpoint = || -> Result<usize, GraphError> {
            let tok = tokens.next().ok_or_else(|| malformed("expected two endpoints".into()))?;
            tok.parse().map_err(|_| malformed(format!("{tok:?} is not a node index")))
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if tokens.next().is_some() {
            return Err(malformed("expected exactly two endpoints".into()));
        }
        if u == v {
            return Err(GraphError::SelfLoop { node: u, line: Some(line_no) });
        }
        pairs.push((u, v, line_no));
    }

    let k = match declared_nodes {
        Some(k) => k,
        None => pairs.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };
    if k == 0 {
        return Err(GraphError::EmptyInput);
    }
    for &(u, v, line) in &pairs {
        check_edge(u, v, k, Some(line))?;
    }
    Graph::new(k, pairs.into_iter().map(|(u, v, _)| (u, v)), directed)
}
