//! Expression grammar shared by the command line and the reports.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*')? unary)*
//! unary   := '-' unary | primary
//! primary := number ('/' number)? | 'i' | 'q' ('^' '-'? number)?
//!          | atom | '(' sum ')'
//! ```
//!
//! Juxtaposition is a product, except that a bare `-` always starts a new
//! summand. Printing inserts the fewest parentheses that make the printed
//! text parse back to the same tree.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `a[i,j]`, 1 <= i, j <= 5.
    A(u8, u8),
    /// `D[i,j]` with i < j, or `D[5,5]`.
    D(u8, u8),
    /// `Dc[r1r2;c1c2]`.
    Dc((u8, u8), (u8, u8)),
    /// `t[i,j]`, i in {3, 4}, j in {1, 2}.
    T(u8, u8),
    /// `tau[5,j]`, j in {1, 2}.
    Tau(u8),
    D12Inv,
    /// `x0..x3`.
    X(u8),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::A(i, j) => write!(f, "a[{i},{j}]"),
            Atom::D(i, j) => write!(f, "D[{i},{j}]"),
            Atom::Dc((r1, r2), (c1, c2)) => write!(f, "Dc[{r1}{r2};{c1}{c2}]"),
            Atom::T(i, j) => write!(f, "t[{i},{j}]"),
            Atom::Tau(j) => write!(f, "tau[5,{j}]"),
            Atom::D12Inv => write!(f, "D12inv"),
            Atom::X(mu) => write!(f, "x{mu}"),
        }
    }
}

/// Expression tree. `Num` holds a nonnegative rational; negative literals
/// are `Neg(Num)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Num(BigRational),
    I,
    Q(i32),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        let e = Expr::Num(BigRational::from_integer(BigInt::from(n.unsigned_abs())));
        if n < 0 {
            Expr::Neg(Box::new(e))
        } else {
            e
        }
    }

    pub fn atom(a: Atom) -> Expr {
        Expr::Atom(a)
    }

    pub fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }

    pub fn add(self, o: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(o))
    }

    pub fn sub(self, o: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(o))
    }

    pub fn mul(self, o: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(o))
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Num(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Expr::Num(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Expr::I => write!(f, "i"),
            Expr::Q(1) => write!(f, "q"),
            Expr::Q(k) => write!(f, "q^{k}"),
            Expr::Atom(a) => write!(f, "{a}"),
            Expr::Neg(x) => {
                write!(f, "-")?;
                x.write_at(f, 3)
            }
            Expr::Add(a, b) => {
                a.write_at(f, 1)?;
                write!(f, " + ")?;
                b.write_at(f, 2)
            }
            Expr::Sub(a, b) => {
                a.write_at(f, 1)?;
                write!(f, " - ")?;
                b.write_at(f, 2)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, 2)?;
                write!(f, "*")?;
                b.write_at(f, 3)
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&ch) = chars.peek() {
        let pos = Pos { line, column };
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Num(s.parse().expect("digits")), pos));
            continue;
        }
        if ch.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        let tok = match ch {
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            other => {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        chars.next();
        column += 1;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let p = self.pos();
        Err(Error::Syntax {
            line: p.line,
            column: p.column,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.error("expected a number"),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(self.product()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(self.unary()?);
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = acc.mul(self.primary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr> {
        let start = self.pos();
        match self.bump() {
            Tok::Num(n) => {
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Num(BigRational::from_integer(n)));
                }
                self.bump();
                let d = self.number()?;
                if d.is_zero() {
                    return Err(Error::Syntax {
                        line: start.line,
                        column: start.column,
                        message: "zero denominator".into(),
                    });
                }
                Ok(Expr::Num(BigRational::new(n, d)))
            }
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(name, start),
            Tok::End => self.error("unexpected end of input"),
            other => Err(Error::Syntax {
                line: start.line,
                column: start.column,
                message: format!("unexpected token {other:?}"),
            }),
        }
    }

    fn named(&mut self, name: String, start: Pos) -> Result<Expr> {
        match name.as_str() {
            "i" => return Ok(Expr::I),
            "q" => {
                if *self.peek() != Tok::Caret {
                    return Ok(Expr::Q(1));
                }
                self.bump();
                let neg = *self.peek() == Tok::Minus;
                if neg {
                    self.bump();
                }
                let n = self.number()?;
                let k = if neg { -n } else { n };
                return match k.to_i32() {
                    Some(k) => Ok(Expr::Q(k)),
                    None => Err(Error::Syntax {
                        line: start.line,
                        column: start.column,
                        message: "exponent out of range".into(),
                    }),
                };
            }
            "D12inv" => return Ok(Expr::Atom(Atom::D12Inv)),
            _ => {}
        }
        let unknown = |text: String| Error::UnknownAtom {
            name: text,
            line: start.line,
            column: start.column,
        };
        if let Some(mu) = name.strip_prefix('x') {
            return match mu {
                "0" | "1" | "2" | "3" => Ok(Expr::Atom(Atom::X(mu.as_bytes()[0] - b'0'))),
                _ => Err(unknown(name)),
            };
        }
        if !matches!(name.as_str(), "a" | "D" | "Dc" | "t" | "tau") {
            return Err(unknown(name));
        }
        self.expect(Tok::LBrack, "'['")?;
        let first = self.number()?;
        let sep = if name == "Dc" { Tok::Semi } else { Tok::Comma };
        self.expect(sep, if name == "Dc" { "';'" } else { "','" })?;
        let second = self.number()?;
        self.expect(Tok::RBrack, "']'")?;
        let text = if name == "Dc" {
            format!("{name}[{first};{second}]")
        } else {
            format!("{name}[{first},{second}]")
        };
        let small = |n: &BigInt| n.to_u8().filter(|&v| (1..=5).contains(&v));
        let atom = if name == "Dc" {
            let pair = |n: &BigInt| -> Option<(u8, u8)> {
                let v = n.to_u8().filter(|v| (12..=45).contains(v))?;
                let (x, y) = (v / 10, v % 10);
                (1 <= x && x < y && y <= 5).then_some((x, y))
            };
            pair(&first)
                .zip(pair(&second))
                .map(|(r, c)| Atom::Dc(r, c))
        } else {
            small(&first).zip(small(&second)).and_then(|(i, j)| match name.as_str() {
                "a" => Some(Atom::A(i, j)),
                "D" if i < j || (i, j) == (5, 5) => Some(Atom::D(i, j)),
                "t" if (3..=4).contains(&i) && j <= 2 => Some(Atom::T(i, j)),
                "tau" if i == 5 && j <= 2 => Some(Atom::Tau(j)),
                _ => None,
            })
        };
        atom.map(Expr::Atom).ok_or_else(|| unknown(text))
    }
}

/// Parses a complete expression.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u8, j: u8) -> Expr {
        Expr::atom(Atom::A(i, j))
    }

    #[test]
    fn product_of_atoms() {
        assert_eq!(parse("a[1,2]*a[1,1]").unwrap(), a(1, 2).mul(a(1, 1)));
        assert_eq!(parse("a[1,2] a[1,1]").unwrap(), a(1, 2).mul(a(1, 1)));
    }

    #[test]
    fn product_binds_tighter_than_sum() {
        let e = parse("a[1,1] + a[1,2]*a[2,1] - q^-1").unwrap();
        assert_eq!(
            e,
            a(1, 1).add(a(1, 2).mul(a(2, 1))).sub(Expr::Q(-1))
        );
    }

    #[test]
    fn relation_text() {
        let text = "t[3,2]*t[4,1] - t[4,1]*t[3,2] - (q^-1 - q)*t[4,2]*t[3,1]";
        let e = parse(text).unwrap();
        assert_eq!(e.to_string(), text);
    }

    #[test]
    fn unknown_atoms() {
        for (text, col) in [("a[6,1]", 1), ("2*D[2,1]", 3), ("tau[4,1]", 1), ("x4", 1), ("foo", 1)] {
            match parse(text) {
                Err(Error::UnknownAtom { column, .. }) => assert_eq!(column, col, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("a[1,1] +\n  * a[1,2]") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("(a[1,1]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("a[1,1] $"), Err(Error::Syntax { column: 8, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn scalars_and_atoms() {
        let e = parse("3/6*i*q^2*Dc[13;12]*D12inv*x0*tau[5,2]").unwrap();
        assert_eq!(e.to_string(), "1/2*i*q^2*Dc[13;12]*D12inv*x0*tau[5,2]");
    }

    #[test]
    fn printing_keeps_grouping() {
        let e = a(1, 1).sub(a(1, 2).sub(a(1, 3)));
        assert_eq!(e.to_string(), "a[1,1] - (a[1,2] - a[1,3])");
        let e = a(1, 1).mul(a(1, 2).mul(a(1, 3))).neg();
        assert_eq!(e.to_string(), "-(a[1,1]*(a[1,2]*a[1,3]))");
        assert_eq!(parse(&e.to_string()).unwrap(), e);
    }
}
