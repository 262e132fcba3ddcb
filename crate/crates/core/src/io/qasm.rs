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

use super::lexer::{lex, Token, TokenKind};
use super::{format_angle, parse_angle, ParseError, SourceSpan};
use crate::circuit::{Circuit, Gate};

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn eof_span(&self) -> SourceSpan {
        SourceSpan::at(self.text, self.text.len(), 0)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self, expected: &[&str]) -> Result<Token, ParseError> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(ParseError::new(self.eof_span(), "unexpected end of input").expecting(expected)),
        }
    }

    fn symbol(&mut self, c: char) -> Result<Token, ParseError> {
        let s = c.to_string();
        let t = self.next(&[&s])?;
        if !t.is_symbol(c) {
            return Err(ParseError::new(t.span, format!("expected `{c}`, found `{}`", t.text)).expecting(&[&s]));
        }
        Ok(t)
    }

    fn integer(&mut self) -> Result<(usize, Token), ParseError> {
        let t = self.next(&["integer"])?;
        match t.text.parse::<usize>() {
            Ok(v) if t.kind == TokenKind::Number => Ok((v, t)),
            _ => Err(ParseError::new(t.span, format!("expected an integer, found `{}`", t.text)).expecting(&["integer"])),
        }
    }

    fn operand(&mut self, reg: &str, n: usize) -> Result<usize, ParseError> {
        let name = self.next(&[reg])?;
        if name.kind != TokenKind::Ident || name.text != reg {
            return Err(ParseError::new(name.span, format!("unknown register `{}`", name.text)).expecting(&[reg]));
        }
        self.symbol('[')?;
        let (idx, t) = self.integer()?;
        if idx >= n {
            return Err(ParseError::new(t.span, format!("index `{idx}` out of range for {reg}[{n}]")));
        }
        self.symbol(']')?;
        Ok(idx)
    }
}

/// Parses the supported OpenQASM 2 subset: a header, optional includes, one
/// `qreg`, and `cx`, `rz(angle)`, `h` and `swap` gates.
pub fn parse_qasm(text: &str) -> Result<Circuit, ParseError> {
    let tokens = lex(text, "//")?.into_iter().filter(|t| t.kind != TokenKind::Newline).collect();
    let mut p = Parser { text, tokens, pos: 0 };

    let head = p.next(&["OPENQASM"])?;
    if !head.is_ident("OPENQASM") {
        return Err(ParseError::new(head.span, format!("expected `OPENQASM` header, found `{}`", head.text)).expecting(&["OPENQASM"]));
    }
    let version = p.next(&["2.0"])?;
    if version.text != "2.0" {
        return Err(ParseError::new(version.span, format!("unsupported version `{}`", version.text)).expecting(&["2.0"]));
    }
    p.symbol(';')?;

    let mut reg: Option<(String, usize)> = None;
    let mut circuit = Circuit::new(0);
    while let Some(t) = p.peek().cloned() {
        p.pos += 1;
        if t.kind != TokenKind::Ident {
            return Err(ParseError::new(t.span, format!("unexpected `{}`", t.text)));
        }
        match t.text.as_str() {
            "include" => {
                let s = p.next(&["file name"])?;
                if s.kind != TokenKind::Str {
                    return Err(ParseError::new(s.span, format!("expected a quoted file name, found `{}`", s.text)));
                }
                p.symbol(';')?;
            }
            "qreg" => {
                if reg.is_some() {
                    return Err(ParseError::new(t.span, "multiple `qreg` declarations"));
                }
                let name = p.next(&["register name"])?;
                if name.kind != TokenKind::Ident {
                    return Err(ParseError::new(name.span, format!("expected a register name, found `{}`", name.text)));
                }
                p.symbol('[')?;
                let (n, _) = p.integer()?;
                p.symbol(']')?;
                p.symbol(';')?;
                circuit = Circuit::new(n);
                reg = Some((name.text, n));
            }
            gate @ ("cx" | "rz" | "h" | "swap") => {
                let Some((name, n)) = reg.clone() else {
                    return Err(ParseError::new(t.span, format!("gate `{gate}` before `qreg`")));
                };
                let g = match gate {
                    "cx" | "swap" => {
                        let a = p.operand(&name, n)?;
                        p.symbol(',')?;
                        let b = p.operand(&name, n)?;
                        if a == b {
                            return Err(ParseError::new(t.span, format!("`{gate}` needs distinct qubits")));
                        }
                        if gate == "cx" {
                            Gate::cnot(a, b)
                        } else {
                            Gate::Swap(a, b)
                        }
                    }
                    "rz" => {
                        let open = p.symbol('(')?;
                        let start = p.pos;
                        let mut depth = 1;
                        while depth > 0 {
                            let t = p.next(&[")"])?;
                            if t.is_symbol('(') {
                                depth += 1;
                            } else if t.is_symbol(')') {
                                depth -= 1;
                            } else if t.is_symbol(';') {
                                return Err(ParseError::new(t.span, "unclosed `(` in angle").expecting(&[")"]));
                            }
                        }
                        let inner = &p.tokens[start..p.pos - 1];
                        if inner.is_empty() {
                            return Err(ParseError::new(open.span, "missing angle"));
                        }
                        let angle = parse_angle(text, inner)?;
                        let q = p.operand(&name, n)?;
                        Gate::Rz { angle, qubit: q }
                    }
                    _ => Gate::H(p.operand(&name, n)?),
                };
                p.symbol(';')?;
                circuit.push(g).expect("operands validated");
            }
            other => {
                let what = if p.peek().is_some_and(|n| n.kind == TokenKind::Ident || n.is_symbol('(')) {
                    "unknown gate"
                } else {
                    "unsupported statement"
                };
                return Err(ParseError::new(t.span, format!("{what} `{other}`")).expecting(&["cx", "rz", "h", "swap"]));
            }
        }
    }
    if reg.is_none() {
        return Err(ParseError::new(p.eof_span(), "missing `qreg` declaration").expecting(&["qreg"]));
    }
    Ok(circuit)
}

/// Canonical text: header, `qreg q[n];`, then one gate per line.
pub fn emit_qasm(circuit: &Circuit) -> String {
    let mut s = format!("OPENQASM 2.0;\nqreg q[{}];\n", circuit.num_qubits());
    for g in circuit.gates() {
        match *g {
            Gate::Cnot { control, target } => writeln!(s, "cx q[{control}],q[{target}];"),
            Gate::Rz { angle, qubit } => writeln!(s, "rz({}) q[{qubit}];", format_angle(angle)),
            Gate::H(q) => writeln!(s, "h q[{q}];"),
            Gate::Swap(a, b) => writeln!(s, "swap q[{a}],q[{b}];"),
        }
        .expect("writing to a String");
    }
    s
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    #[test]
    fn basic_programs() {
        let c = parse_qasm("OPENQASM 2.0; qreg q[2]; cx q[0],q[1];").unwrap();
        assert_eq!((c.num_qubits(), c.cnot_count()), (2, 1));
        let c = parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nrz(pi/4) q[0]; // t\n").unwrap();
        assert_eq!(c.gates(), &[Gate::rz(PI / 4.0, 0)]);
    }

    #[test]
    fn errors_are_positioned() {
        let src = "OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];\n";
        let e = parse_qasm(src).unwrap_err();
        assert!(e.message.contains("ccx"), "{e}");
        assert_eq!((e.span.line, e.span.column), (3, 1));
        let e = parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[2];").unwrap_err();
        assert_eq!((e.span.line, e.span.column), (3, 11));
        let e = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nqreg r[2];").unwrap_err();
        assert!(e.message.contains("multiple"));
        let e = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nrz(pi*) q[0];").unwrap_err();
        assert!(e.message.contains("malformed angle"));
        assert!(parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncreg c[2];").is_err());
        assert!(parse_qasm("qreg q[2];").is_err());
        assert!(parse_qasm("OPENQASM 2.0;").is_err());
    }

    #[test]
    fn emit_roundtrip() {
        assert_eq!(emit_qasm(&Circuit::new(3)), "OPENQASM 2.0;\nqreg q[3];\n");
        let c = Circuit::from_gates(
            3,
            [Gate::cnot(0, 2), Gate::rz(0.123, 1), Gate::H(2), Gate::Swap(1, 0), Gate::rz(PI, 0)],
        )
        .unwrap();
        let text = emit_qasm(&c);
        assert!(text.contains("swap q[1],q[0];"));
        assert_eq!(parse_qasm(&text).unwrap(), c);
    }
}
