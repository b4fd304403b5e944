//! Expression language over the sedenion algebra.
//!
//! ```text
//! [i4,i5,i2]                 ternary bracket  a(bc) - (ca)b
//! comm(i1,e1)                commutator       xy - yx
//! assoc(i1,i2,i4)            associator       (xy)z - x(yz)
//! (i1*i2)*i4 - i1*(i2*i4)    products need an explicit `*`
//! 2*i3 + (0.5-3I)*e1         `I` is the scalar imaginary unit, `3I` an imaginary literal
//! ```
//!
//! Basis units are `i0`..`i7` and `e1`..`e7`; the identity is the number `1`.
//! `a*b*c` groups as `(a*b)*c` and produces a [`Note`].

mod lexer;
mod parser;

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::basis::BasisUnit;
use crate::brackets::{associator, commutator, na_bracket};
use crate::element::{CoeffFormat, Element};

pub use lexer::{tokenize, Builtin, LexError, Token, TokenKind};
pub use parser::{parse, Note, ParseError, Parsed, MAX_DEPTH};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    ScalarLit(Complex64),
    Basis(BasisUnit),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Bracket3(Box<Expr>, Box<Expr>, Box<Expr>),
    Call(Builtin, Vec<Expr>),
}

/// Fully parenthesized source text; parses back to the same tree up to
/// the sign of negative literals.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::ScalarLit(c) => {
                let text = match c.real_part_if_real() {
                    Some(r) => r,
                    None => c.complex_repr(),
                };
                if text.starts_with('-') {
                    write!(f, "({text})")
                } else {
                    f.write_str(&text)
                }
            }
            Expr::Basis(u) => f.write_str(u.token()),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Bracket3(a, b, c) => write!(f, "[{a}, {b}, {c}]"),
            Expr::Call(name, args) => {
                write!(f, "{}(", name.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum EvalError {
    #[error("coefficient overflow: result is not finite")]
    Overflow,
    #[error("`{}` takes {} arguments, got {found}", .name.name(), .name.arity())]
    Arity { name: Builtin, found: usize },
}

fn checked(x: Element) -> Result<Element, EvalError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(EvalError::Overflow)
    }
}

/// Evaluates `e` with complex double coefficients.
pub fn evaluate(e: &Expr) -> Result<Element, EvalError> {
    let v = match e {
        Expr::ScalarLit(c) => Element::scalar(*c),
        Expr::Basis(u) => Element::basis(*u),
        Expr::Neg(a) => -evaluate(a)?,
        Expr::Add(a, b) => evaluate(a)? + evaluate(b)?,
        Expr::Sub(a, b) => evaluate(a)? - evaluate(b)?,
        Expr::Mul(a, b) => evaluate(a)? * evaluate(b)?,
        Expr::Bracket3(a, b, c) => na_bracket(&evaluate(a)?, &evaluate(b)?, &evaluate(c)?),
        Expr::Call(name, args) => {
            if args.len() != name.arity() {
                return Err(EvalError::Arity {
                    name: *name,
                    found: args.len(),
                });
            }
            let v = args.iter().map(evaluate).collect::<Result<Vec<_>, _>>()?;
            match name {
                Builtin::Comm => commutator(&v[0], &v[1]),
                Builtin::Assoc => associator(&v[0], &v[1], &v[2]),
            }
        }
    };
    checked(v)
}

/// Canonical text of an element, e.g. `-2*i3`, `i1 + (0+1I)*e1`, `0`.
pub fn format_element<T: CoeffFormat>(x: &Element<T>) -> String {
    x.to_string()
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ExprError {
    #[error("lexical error: {0}")]
    Lex(#[from] LexError),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("evaluation error: {0}")]
    Eval(#[from] EvalError),
}

impl ExprError {
    /// Byte offset the error points at, if it has one.
    pub fn position(&self) -> Option<usize> {
        match self {
            ExprError::Lex(e) => Some(e.position),
            ExprError::Parse(e) => Some(e.position()),
            ExprError::Eval(_) => None,
        }
    }

    /// The source line with a caret under the offending position.
    pub fn caret(&self, source: &str) -> Option<String> {
        let pos = self.position()?.min(source.len());
        let col = source[..pos].chars().count();
        Some(format!("  {source}\n  {}^", " ".repeat(col)))
    }
}

pub fn parse_str(text: &str) -> Result<Parsed, ExprError> {
    Ok(parse(&tokenize(text)?)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Element,
    pub notes: Vec<Note>,
}

/// Tokenize, parse and evaluate.
pub fn eval_str(text: &str) -> Result<Evaluation, ExprError> {
    let Parsed { expr, notes } = parse_str(text)?;
    Ok(Evaluation {
        value: evaluate(&expr)?,
        notes,
    })
}
