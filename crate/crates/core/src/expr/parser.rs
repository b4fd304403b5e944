use thiserror::Error;

use super::lexer::{Token, TokenKind};
use super::Expr;

/// Maximum nesting of parentheses, brackets, calls and unary minus.
pub const MAX_DEPTH: usize = 256;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("at byte {position}: expected {}, found {found}", .expected.join(" or "))]
    Unexpected {
        position: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("at byte {position}: nesting deeper than {limit}")]
    TooDeep { position: usize, limit: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Unexpected { position, .. } | ParseError::TooDeep { position, .. } => {
                *position
            }
        }
    }
}

/// Non-fatal diagnostic attached to a successful parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Note {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Parsed {
    pub expr: Expr,
    pub notes: Vec<Note>,
}

const PRIMARY: &[&str] = &["number", "`I`", "basis unit", "`(`", "`[`", "`comm`", "`assoc`", "`-`"];

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    depth: usize,
    notes: Vec<Note>,
}

/// Parses a token stream produced by [`tokenize`](super::tokenize).
///
/// ```text
/// expr    := term (('+' | '-') term)*
/// term    := unary ('*' unary)*
/// unary   := '-' unary | primary
/// primary := NUMBER | 'I' | BASIS | '(' expr ')' | '[' expr ',' expr ',' expr ']'
///          | 'comm' '(' expr ',' expr ')' | 'assoc' '(' expr ',' expr ',' expr ')'
/// ```
pub fn parse(tokens: &[Token]) -> Result<Parsed, ParseError> {
    if tokens.last().map(|t| t.kind) != Some(TokenKind::Eof) {
        return Err(ParseError::Unexpected {
            position: tokens.last().map_or(0, |t| t.position + t.lexeme.len()),
            expected: vec!["end of input"],
            found: "unterminated token stream".into(),
        });
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        depth: 0,
        notes: Vec::new(),
    };
    let expr = p.expr()?;
    p.expect(TokenKind::Eof, &["`+`", "`-`", "`*`", "end of input"])?;
    Ok(Parsed {
        expr,
        notes: p.notes,
    })
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> &Token {
        let t = &self.tokens[self.pos];
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &[&'static str]) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError::Unexpected {
            position: t.position,
            expected: expected.to_vec(),
            found: t.to_string(),
        })
    }

    fn expect(&mut self, kind: TokenKind, expected: &[&'static str]) -> Result<(), ParseError> {
        if self.peek().kind == kind {
            self.bump();
            Ok(())
        } else {
            self.unexpected(expected)
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::TooDeep {
                position: self.peek().position,
                limit: MAX_DEPTH,
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                TokenKind::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        let mut stars = 0;
        while self.peek().kind == TokenKind::Star {
            let at = self.bump().position;
            stars += 1;
            if stars == 2 {
                self.notes.push(Note {
                    position: at,
                    message: "products group left to right, `a*b*c` is `(a*b)*c`; the algebra is \
                              not associative, add parentheses if you meant otherwise"
                        .into(),
                });
            }
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            Ok(Expr::Neg(Box::new(inner)))
        } else {
            self.primary()
        }
    }

    fn args(&mut self, n: usize, close: TokenKind, close_name: &'static str) -> Result<Vec<Expr>, ParseError> {
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.expr()?);
            if i + 1 < n {
                self.expect(TokenKind::Comma, &["`,`"])?;
            }
        }
        self.expect(close, &[close_name])?;
        Ok(out)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let kind = self.peek().kind;
        let e = match kind {
            TokenKind::Number(c) => {
                self.bump();
                return Ok(Expr::ScalarLit(c));
            }
            TokenKind::ImagUnit => {
                self.bump();
                return Ok(Expr::ScalarLit(num_complex::Complex64::new(0.0, 1.0)));
            }
            TokenKind::Basis(u) => {
                self.bump();
                return Ok(Expr::Basis(u));
            }
            TokenKind::LParen => {
                self.bump();
                self.enter()?;
                let e = self.expr()?;
                self.expect(TokenKind::RParen, &["`)`"])?;
                e
            }
            TokenKind::LBracket => {
                self.bump();
                self.enter()?;
                let mut a = self.args(3, TokenKind::RBracket, "`]`")?;
                let c = a.pop().unwrap();
                let b = a.pop().unwrap();
                let x = a.pop().unwrap();
                Expr::Bracket3(Box::new(x), Box::new(b), Box::new(c))
            }
            TokenKind::Ident(f) => {
                self.bump();
                self.expect(TokenKind::LParen, &["`(`"])?;
                self.enter()?;
                Expr::Call(f, self.args(f.arity(), TokenKind::RParen, "`)`")?)
            }
            _ => return self.unexpected(PRIMARY),
        };
        self.depth -= 1;
        Ok(e)
    }
}
