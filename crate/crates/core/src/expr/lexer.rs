use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::basis::BasisUnit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Comm,
    Assoc,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::Comm => "comm",
            Builtin::Assoc => "assoc",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Builtin::Comm => 2,
            Builtin::Assoc => 3,
        }
    }

    fn from_word(w: &str) -> Option<Self> {
        match w {
            "comm" => Some(Builtin::Comm),
            "assoc" => Some(Builtin::Assoc),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TokenKind {
    /// Real literal, or imaginary when written with an `I` suffix (`3I`).
    Number(Complex64),
    ImagUnit,
    Basis(BasisUnit),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Ident(Builtin),
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> &'static str {
        match self {
            TokenKind::Number(_) => "number",
            TokenKind::ImagUnit => "`I`",
            TokenKind::Basis(_) => "basis unit",
            TokenKind::Plus => "`+`",
            TokenKind::Minus => "`-`",
            TokenKind::Star => "`*`",
            TokenKind::LParen => "`(`",
            TokenKind::RParen => "`)`",
            TokenKind::LBracket => "`[`",
            TokenKind::RBracket => "`]`",
            TokenKind::Comma => "`,`",
            TokenKind::Ident(_) => "function name",
            TokenKind::Eof => "end of input",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte offset of the first character.
    pub position: usize,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TokenKind::Eof => f.write_str("end of input"),
            _ => write!(f, "`{}`", self.lexeme),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("unexpected character `{found}` at byte {position}")]
pub struct LexError {
    pub position: usize,
    pub found: char,
}

fn basis_word(w: &str) -> Option<BasisUnit> {
    let b = w.as_bytes();
    if b.len() != 2 || !b[1].is_ascii_digit() {
        return None;
    }
    let n = b[1] - b'0';
    match b[0] {
        b'i' => BasisUnit::im(n),
        b'e' => BasisUnit::eps(n),
        _ => None,
    }
}

/// Splits `text` into tokens, always ending with [`TokenKind::Eof`].
pub fn tokenize(text: &str) -> Result<Vec<Token>, LexError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    let bytes = text.as_bytes();

    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match ch {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            '[' => Some(TokenKind::LBracket),
            ']' => Some(TokenKind::RBracket),
            ',' => Some(TokenKind::Comma),
            _ => None,
        };
        if let Some(kind) = single {
            chars.next();
            out.push(Token {
                kind,
                lexeme: ch.to_string(),
                position: pos,
            });
            continue;
        }

        if ch.is_ascii_digit() {
            let mut end = pos;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end < bytes.len() && bytes[end] == b'.' {
                if !bytes.get(end + 1).is_some_and(u8::is_ascii_digit) {
                    return Err(LexError {
                        position: end,
                        found: '.',
                    });
                }
                end += 1;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
            }
            let value: f64 = text[pos..end].parse().expect("digits with optional fraction");
            let mut number = Complex64::new(value, 0.0);
            if end < bytes.len() && bytes[end] == b'I' {
                end += 1;
                number = Complex64::new(0.0, value);
            }
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
            out.push(Token {
                kind: TokenKind::Number(number),
                lexeme: text[pos..end].to_string(),
                position: pos,
            });
            continue;
        }

        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut end = pos;
            while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
                end += 1;
            }
            let word = &text[pos..end];
            let kind = if word == "I" {
                TokenKind::ImagUnit
            } else if let Some(u) = basis_word(word) {
                TokenKind::Basis(u)
            } else if let Some(b) = Builtin::from_word(word) {
                TokenKind::Ident(b)
            } else {
                return Err(LexError {
                    position: pos,
                    found: ch,
                });
            };
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
            out.push(Token {
                kind,
                lexeme: word.to_string(),
                position: pos,
            });
            continue;
        }

        return Err(LexError {
            position: pos,
            found: ch,
        });
    }

    out.push(Token {
        kind: TokenKind::Eof,
        lexeme: String::new(),
        position: text.len(),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> Vec<TokenKind> {
        tokenize(s).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn counts_and_kinds() {
        assert_eq!(tokenize("i4*(i5*i2)").unwrap().len(), 8);
        use TokenKind::*;
        assert_eq!(
            kinds("[i4, e5, i2]"),
            vec![
                LBracket,
                Basis(BasisUnit::I4),
                Comma,
                Basis(BasisUnit::E5),
                Comma,
                Basis(BasisUnit::I2),
                RBracket,
                Eof
            ]
        );
    }

    #[test]
    fn numbers() {
        let c = Complex64::new;
        assert_eq!(kinds("1"), vec![TokenKind::Number(c(1.0, 0.0)), TokenKind::Eof]);
        assert_eq!(kinds("2.5I"), vec![TokenKind::Number(c(0.0, 2.5)), TokenKind::Eof]);
        assert_eq!(kinds("I"), vec![TokenKind::ImagUnit, TokenKind::Eof]);
        let t = tokenize("  0.25 ").unwrap();
        assert_eq!((t[0].position, t[0].lexeme.as_str()), (2, "0.25"));
        assert_eq!(t[1].position, 7);
    }

    #[test]
    fn errors_carry_byte_offsets() {
        assert_eq!(tokenize("j2"), Err(LexError { position: 0, found: 'j' }));
        assert_eq!(tokenize("i1 + i8"), Err(LexError { position: 5, found: 'i' }));
        assert_eq!(tokenize("e0"), Err(LexError { position: 0, found: 'e' }));
        assert_eq!(tokenize("1."), Err(LexError { position: 1, found: '.' }));
        assert_eq!(tokenize("i1 ^ i2"), Err(LexError { position: 3, found: '^' }));
        // multi-byte characters shift later offsets
        assert_eq!(tokenize("ε1"), Err(LexError { position: 0, found: 'ε' }));
        assert_eq!(tokenize("i1+ε"), Err(LexError { position: 3, found: 'ε' }));
        assert_eq!(tokenize("cos(i1)"), Err(LexError { position: 0, found: 'c' }));
    }

    #[test]
    fn words() {
        assert_eq!(
            kinds("comm assoc e7 i0"),
            vec![
                TokenKind::Ident(Builtin::Comm),
                TokenKind::Ident(Builtin::Assoc),
                TokenKind::Basis(BasisUnit::E7),
                TokenKind::Basis(BasisUnit::I0),
                TokenKind::Eof
            ]
        );
    }
}
