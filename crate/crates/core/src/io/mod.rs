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

//! Text formats: an OpenQASM 2 subset, phase-polynomial files, coupling-graph
//! files, and benchmark records.

mod graphfile;
mod lexer;
mod polyfile;
mod qasm;
mod report;

use std::f64::consts::PI;
use std::fmt;

pub use graphfile::{emit_graph, parse_graph};
pub use lexer::{Token, TokenKind};
pub use polyfile::{emit_phase_poly, parse_phase_poly};
pub use qasm::{emit_qasm, parse_qasm};
pub use report::{emit_records, emit_table, parse_record, Record};

use crate::angle::Angle;

/// Position in the input; line and column are 1-based, `offset` is in bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub offset: usize,
    pub len: usize,
}

impl SourceSpan {
    /// Span of `len` bytes starting at byte `offset` of `text`.
    pub fn at(text: &str, offset: usize, len: usize) -> Self {
        let offset = offset.min(text.len());
        let before = &text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(offset, |nl| offset - nl - 1) + 1;
        Self {
            line,
            column,
            offset,
            len,
        }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {message}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn new(span: SourceSpan, message: impl Into<String>) -> Self {
        Self {
            span,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    pub fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }
}

/// Parses `[-] (number ["*" "pi"] | "pi") ["/" number]` from `tokens`,
/// which must be consumed entirely.
pub(crate) fn parse_angle(text: &str, tokens: &[Token]) -> Result<Angle, ParseError> {
    let bad = |t: &Token| ParseError::new(t.span, format!("malformed angle at `{}`", t.text));
    let Some(first) = tokens.first() else {
        let span = SourceSpan::at(text, text.len(), 0);
        return Err(ParseError::new(span, "missing angle"));
    };
    let mut i = 0;
    let mut sign = 1.0;
    if tokens[0].is_symbol('-') {
        sign = -1.0;
        i += 1;
    }
    let mut value = match tokens.get(i) {
        Some(t) if t.is_ident("pi") => PI,
        Some(t) if t.kind == TokenKind::Number => t.text.parse::<f64>().map_err(|_| bad(t))?,
        Some(t) => return Err(bad(t)),
        None => return Err(bad(first)),
    };
    let was_pi = tokens[i].is_ident("pi");
    i += 1;
    if !was_pi && tokens.get(i).is_some_and(|t| t.is_symbol('*')) {
        match tokens.get(i + 1) {
            Some(t) if t.is_ident("pi") => value *= PI,
            Some(t) => return Err(bad(t)),
            None => return Err(bad(&tokens[i])),
        }
        i += 2;
    }
    if tokens.get(i).is_some_and(|t| t.is_symbol('/')) {
        let d = match tokens.get(i + 1) {
            Some(t) if t.kind == TokenKind::Number => t.text.parse::<f64>().map_err(|_| bad(t))?,
            Some(t) => return Err(bad(t)),
            None => return Err(bad(&tokens[i])),
        };
        if d == 0.0 {
            return Err(bad(&tokens[i + 1]));
        }
        value /= d;
        i += 2;
    }
    if let Some(t) = tokens.get(i) {
        return Err(bad(t));
    }
    if !value.is_finite() {
        return Err(bad(first));
    }
    Ok(Angle::new(sign * value))
}

/// `k*pi/d` for small dyadic multiples of π, plain radians otherwise.
pub fn format_angle(angle: Angle) -> String {
    let r = angle.radians();
    if r == 0.0 {
        return "0".to_string();
    }
    for d in [1u32, 2, 4, 8, 16, 32, 64] {
        let k = r / PI * d as f64;
        if (k - k.round()).abs() < 1e-12 {
            let k = k.round() as u64;
            return match (k, d) {
                (1, 1) => "pi".to_string(),
                (1, d) => format!("pi/{d}"),
                (k, 1) => format!("{k}*pi"),
                (k, d) => format!("{k}*pi/{d}"),
            };
        }
    }
    format!("{r:?}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::lexer::lex;

    fn angle(s: &str) -> Result<Angle, ParseError> {
        let toks = lex(s, "//").unwrap();
        parse_angle(s, &toks)
    }

    #[test]
    fn angle_grammar() {
        assert_eq!(angle("pi/4").unwrap(), Angle::new(PI / 4.0));
        assert_eq!(angle("0.5*pi").unwrap(), Angle::new(PI / 2.0));
        assert_eq!(angle("-pi/2").unwrap(), Angle::new(-PI / 2.0));
        assert_eq!(angle("3*pi/4").unwrap(), Angle::new(3.0 * PI / 4.0));
        assert_eq!(angle("1.25").unwrap(), Angle::new(1.25));
        assert_eq!(angle("1e-3").unwrap(), Angle::new(1e-3));
        for bad in ["pi*2", "pi/", "2*", "x", "pi/0", "1 2", ""] {
            assert!(angle(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn angle_format_roundtrip() {
        for r in [0.0, PI, PI / 4.0, 7.0 * PI / 4.0, 0.3, 1.0e-5, 5.123456789] {
            let a = Angle::new(r);
            assert_eq!(angle(&format_angle(a)).unwrap(), a, "{r}");
        }
        assert_eq!(format_angle(Angle::new(PI / 4.0)), "pi/4");
        assert_eq!(format_angle(Angle::new(1.5 * PI)), "3*pi/2");
    }

    #[test]
    fn span_positions() {
        let s = SourceSpan::at("ab\ncd", 4, 1);
        assert_eq!((s.line, s.column), (2, 2));
        assert_eq!(SourceSpan::at("ab", 0, 1).column, 1);
    }
}
