// Copyright 2026 The paritysynth Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

use std::fmt::Write;

use super::lexer::{lex, lines, Token};
use super::{ParseError, SourceSpan};
use crate::graph::CouplingGraph;

fn number(t: &Token, what: &str) -> Result<usize, ParseError> {
    t.text
        .parse::<usize>()
        .map_err(|_| ParseError::new(t.span, format!("expected {what}, found `{}`", t.text)))
}

/// Parses `n m` followed by `m` lines `u v`. A disconnected or otherwise
/// invalid graph is reported at the header.
pub fn parse_graph(text: &str) -> Result<CouplingGraph, ParseError> {
    let lines = lines(lex(text, "#")?);
    let Some(head) = lines.first() else {
        return Err(ParseError::new(SourceSpan::at(text, 0, 0), "empty input").expecting(&["n m"]));
    };
    if head.len() != 2 {
        let t = head.get(2).unwrap_or(&head[0]);
        return Err(ParseError::new(t.span, format!("expected `n m` header, found `{}`", t.text)));
    }
    let n = number(&head[0], "a vertex count")?;
    let m = number(&head[1], "an edge count")?;
    if lines.len() - 1 != m {
        let span = match lines.get(m + 1) {
            Some(extra) => extra[0].span,
            None => SourceSpan::at(text, text.len(), 0),
        };
        return Err(ParseError::new(span, format!("expected {m} edges, found {}", lines.len() - 1)));
    }
    let mut edges = Vec::with_capacity(m);
    for line in &lines[1..] {
        if line.len() != 2 {
            let t = line.get(2).unwrap_or(&line[0]);
            return Err(ParseError::new(t.span, format!("expected `u v`, found `{}`", t.text)));
        }
        let u = number(&line[0], "a vertex")?;
        let v = number(&line[1], "a vertex")?;
        for (x, t) in [(u, &line[0]), (v, &line[1])] {
            if x >= n {
                return Err(ParseError::new(t.span, format!("vertex `{x}` out of range for {n} vertices")));
            }
        }
        if u == v {
            return Err(ParseError::new(line[0].span, format!("self-loop on vertex `{u}`")));
        }
        edges.push((u, v));
    }
    CouplingGraph::new(n, edges).map_err(|e| ParseError::new(head[0].span, e.to_string()))
}

pub fn emit_graph(graph: &CouplingGraph) -> String {
    let mut s = format!("{} {}\n", graph.num_vertices(), graph.num_edges());
    for &(u, v) in graph.edges() {
        writeln!(s, "{u} {v}").expect("writing to a String");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_line() {
        let g = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g, CouplingGraph::line(3).unwrap());
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn invalid_graphs() {
        let e = parse_graph("4 2\n0 1\n2 3").unwrap_err();
        assert!(e.message.contains("disconnected"), "{e}");
        let e = parse_graph("3 2\n0 1\n1 5").unwrap_err();
        assert_eq!((e.span.line, e.span.column), (3, 3));
        assert!(parse_graph("3 2\n0 1").is_err());
        assert!(parse_graph("3 1\n0 0").is_err());
        assert!(parse_graph("3\n0 1").is_err());
    }
}
