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

use super::{ParseError, SourceSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Number,
    Str,
    Symbol,
    Newline,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub span: SourceSpan,
}

impl Token {
    pub fn is_symbol(&self, c: char) -> bool {
        self.kind == TokenKind::Symbol && self.text.len() == 1 && self.text.starts_with(c)
    }

    pub fn is_ident(&self, s: &str) -> bool {
        self.kind == TokenKind::Ident && self.text == s
    }
}

const SYMBOLS: &str = ";,[]()*/-+{}=<>.";

/// Splits `text` into tokens, keeping newlines and dropping comments that
/// start with `comment`.
pub(crate) fn lex(text: &str, comment: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let (mut line, mut line_start) = (1, 0);
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let kind = if text[i..].starts_with(comment) {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        } else if c == '\n' {
            i += 1;
            TokenKind::Newline
        } else if c.is_ascii_whitespace() {
            i += 1;
            continue;
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            TokenKind::Ident
        } else if c.is_ascii_digit() || (c == '.' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'-' || bytes[j] == b'+') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    i = j;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            TokenKind::Number
        } else if c == '"' {
            i += 1;
            while i < bytes.len() && bytes[i] != b'"' && bytes[i] != b'\n' {
                i += 1;
            }
            if i >= bytes.len() || bytes[i] != b'"' {
                return Err(ParseError::new(SourceSpan::at(text, start, i - start), "unterminated string"));
            }
            i += 1;
            TokenKind::Str
        } else if SYMBOLS.contains(c) {
            i += 1;
            TokenKind::Symbol
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(ParseError::new(
                SourceSpan::at(text, start, ch.len_utf8()),
                format!("unexpected character `{ch}`"),
            ));
        };
        out.push(Token {
            kind,
            text: text[start..i].to_string(),
            span: SourceSpan {
                line,
                column: start - line_start + 1,
                offset: start,
                len: i - start,
            },
        });
        if kind == TokenKind::Newline {
            line += 1;
            line_start = i;
        }
    }
    Ok(out)
}

/// Groups tokens into non-empty lines.
pub(crate) fn lines(tokens: Vec<Token>) -> Vec<Vec<Token>> {
    let mut out = vec![Vec::new()];
    for t in tokens {
        if t.kind == TokenKind::Newline {
            out.push(Vec::new());
        } else {
            out.last_mut().expect("non-empty").push(t);
        }
    }
    out.retain(|l| !l.is_empty());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_comments() {
        let t = lex("cx q[0],q[1]; // hi\nrz(0.5e-2*pi) q[1];", "//").unwrap();
        let texts: Vec<&str> = t.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(
            texts,
            ["cx", "q", "[", "0", "]", ",", "q", "[", "1", "]", ";", "\n", "rz", "(", "0.5e-2", "*", "pi", ")", "q", "[", "1", "]", ";"]
        );
        assert_eq!(t[12].span.line, 2);
        let e = lex("a $", "//").unwrap_err();
        assert_eq!((e.span.line, e.span.column), (1, 3));
    }

    #[test]
    fn spans_match_offsets() {
        let text = "OPENQASM 2.0;\n// note\n\nqreg q[3];\n  cx q[0], q[2];\nrz(pi/4) q[1];";
        for t in lex(text, "//").unwrap() {
            assert_eq!(t.span, SourceSpan::at(text, t.span.offset, t.span.len), "{t:?}");
            assert_eq!(&text[t.span.offset..t.span.offset + t.span.len], t.text);
        }
    }
}
