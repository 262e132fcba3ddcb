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

use super::lexer::{lex, lines};
use super::{format_angle, parse_angle, ParseError, SourceSpan};
use crate::bits::BitVec;
use crate::poly::PhasePolynomial;

/// Parses `n <count>` followed by one `<bitstring> <angle>` line per term.
/// Repeated parities are merged; `#` starts a comment.
pub fn parse_phase_poly(text: &str) -> Result<PhasePolynomial, ParseError> {
    let lines = lines(lex(text, "#")?);
    let Some(head) = lines.first() else {
        return Err(ParseError::new(SourceSpan::at(text, 0, 0), "empty input").expecting(&["n"]));
    };
    if !head[0].is_ident("n") {
        return Err(ParseError::new(head[0].span, format!("expected `n`, found `{}`", head[0].text)).expecting(&["n"]));
    }
    let n = match head.get(1) {
        Some(t) => t
            .text
            .parse::<usize>()
            .map_err(|_| ParseError::new(t.span, format!("expected a qubit count, found `{}`", t.text)))?,
        None => return Err(ParseError::new(head[0].span, "missing qubit count after `n`")),
    };
    if let Some(t) = head.get(2) {
        return Err(ParseError::new(t.span, format!("unexpected `{}`", t.text)));
    }
    let mut terms = Vec::new();
    for line in &lines[1..] {
        let b = &line[0];
        if b.text.len() != n || !b.text.bytes().all(|c| c == b'0' || c == b'1') {
            return Err(ParseError::new(
                b.span,
                format!("expected a bitstring of length {n}, found `{}`", b.text),
            ));
        }
        let parity = BitVec::parse(&b.text).expect("checked above");
        if parity.is_zero() {
            return Err(ParseError::new(b.span, format!("all-zero parity `{}`", b.text)));
        }
        if line.len() == 1 {
            let end = b.span.offset + b.span.len;
            return Err(ParseError::new(SourceSpan::at(text, end, 0), "missing angle"));
        }
        terms.push((parity, parse_angle(text, &line[1..])?));
    }
    Ok(PhasePolynomial::new(n, terms).expect("lengths checked"))
}

pub fn emit_phase_poly(poly: &PhasePolynomial) -> String {
    let mut s = format!("n {}\n", poly.num_qubits());
    for t in poly.terms() {
        writeln!(s, "{} {}", t.parity, format_angle(t.angle)).expect("writing to a String");
    }
    s
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    #[test]
    fn parse_and_merge() {
        let p = parse_phase_poly("n 3\n110 pi/4\n011 pi/2").unwrap();
        assert_eq!(p.len(), 2);
        let p = parse_phase_poly("n 2\n11 pi/4\n# note\n11 pi/4\n").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.terms()[0].angle.radians(), PI / 2.0);
        assert_eq!(emit_phase_poly(&p), "n 2\n11 pi/2\n");
        assert_eq!(parse_phase_poly(&emit_phase_poly(&p)).unwrap(), p);
    }

    #[test]
    fn positioned_errors() {
        let e = parse_phase_poly("n 2\n00 pi").unwrap_err();
        assert!(e.message.contains("all-zero parity"));
        assert_eq!((e.span.line, e.span.column), (2, 1));
        let e = parse_phase_poly("n 3\n11 pi").unwrap_err();
        assert_eq!(e.span.line, 2);
        let e = parse_phase_poly("n 2\n11 pi*").unwrap_err();
        assert!(e.message.contains("malformed angle"));
        assert!(parse_phase_poly("").is_err());
        assert!(parse_phase_poly("m 2").is_err());
        assert!(parse_phase_poly("n 2\n11").is_err());
        assert!(parse_phase_poly("n x").is_err());
    }
}
