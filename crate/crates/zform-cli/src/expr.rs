//! Surface syntax for algebra expressions: tokenizer, LL(1) parser and renderer.
//!
//! Precedence from tightest: postfix `^(k)` and `^k`, then `*`, then `+`/`-`.
//! Unary minus applies to a postfix term.

use num_traits::{Signed, Zero};
use zform::liealg::{AlgebraKind, Gen};
use zform::{fmt_q, Q};

use crate::CliError;

/// Abstract syntax of an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// A non-negative rational literal.
    Num(Q),
    Gen(Gen),
    U,
    V,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// `a^(k)`.
    DivPow(Box<Expr>, u32),
    /// `a^k`.
    Pow(Box<Expr>, u32),
    /// `C(z,k)`.
    Binom(Box<Expr>, u32),
    Exp(Box<Expr>),
    Ln(Box<Expr>),
    Inv(Box<Expr>),
    /// `root(s,m)`.
    Root(Box<Expr>, u32),
    /// `pow1p(s,a)` is `(1+s)^a`.
    Pow1p(Box<Expr>, Q),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Gen(Gen),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Gen(g) => format!("generator `{g}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(offset: usize, expected: &[&str], found: String) -> CliError {
    CliError::Syntax {
        offset,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found,
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(src[start..i].into())));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let word = &src[start..i];
            let indexed = |i: usize| b.get(i) == Some(&b'[');
            let signed = matches!(word, "x" | "X") && matches!(b.get(i), Some(b'+' | b'-')) && indexed(i + 1);
            if signed || (word == "h" && indexed(i)) {
                let sign = if signed { Some(b[i]) } else { None };
                let mut j = if signed { i + 2 } else { i + 1 };
                let num_start = j;
                if b.get(j) == Some(&b'-') {
                    j += 1;
                }
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                let idx: i32 = src[num_start..j]
                    .parse()
                    .map_err(|_| syntax(num_start, &["integer index"], found_at(src, num_start)))?;
                if b.get(j) != Some(&b']') {
                    return Err(syntax(j, &["`]`"], found_at(src, j)));
                }
                if word == "X" && idx.rem_euclid(2) == 0 {
                    return Err(CliError::Type {
                        offset: Some(start),
                        message: format!("{} has an even index; X generators exist only at odd indices", &src[start..=j]),
                    });
                }
                let g = match (word, sign) {
                    ("x", Some(b'+')) => Gen::xp(idx),
                    ("x", _) => Gen::xm(idx),
                    ("X", Some(b'+')) => Gen::xxp(idx),
                    ("X", _) => Gen::xxm(idx),
                    _ => Gen::h(idx),
                };
                out.push((start, Tok::Gen(g)));
                i = j + 1;
                continue;
            }
            out.push((start, Tok::Ident(word.into())));
            continue;
        }
        let t = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            _ => return Err(syntax(start, &["expression"], found_at(src, start))),
        };
        out.push((start, t));
        i += 1;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

fn found_at(src: &str, at: usize) -> String {
    match src[at..].chars().next() {
        Some(c) => format!("`{c}`"),
        None => "end of input".into(),
    }
}

const ATOM: &[&str] = &[
    "number", "generator", "`u`", "`v`", "`(`", "`-`", "`C(`", "`exp(`", "`ln(`", "`inv(`", "`root(`", "`pow1p(`",
];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> CliError {
        syntax(self.offset(), expected, self.peek().describe())
    }

    fn expect(&mut self, t: Tok, name: &str) -> Result<(), CliError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn int(&mut self) -> Result<u32, CliError> {
        match self.peek().clone() {
            Tok::Int(s) => {
                let at = self.offset();
                self.bump();
                s.parse().map_err(|_| syntax(at, &["integer below 2^32"], format!("`{s}`")))
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn rational(&mut self) -> Result<Q, CliError> {
        let at = self.offset();
        let n = match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                s.parse::<num_bigint::BigInt>().expect("digits")
            }
            _ => return Err(self.error(&["integer"])),
        };
        if *self.peek() == Tok::Slash {
            self.bump();
            let d = match self.peek().clone() {
                Tok::Int(s) => {
                    self.bump();
                    s.parse::<num_bigint::BigInt>().expect("digits")
                }
                _ => return Err(self.error(&["integer"])),
            };
            if d.is_zero() {
                return Err(syntax(at, &["nonzero denominator"], "`0`".into()));
            }
            return Ok(Q::new(n, d));
        }
        Ok(Q::from_integer(n))
    }

    fn sum(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            acc = match self.peek() {
                Tok::LParen => {
                    self.bump();
                    let k = self.int()?;
                    self.expect(Tok::RParen, "`)`")?;
                    Expr::DivPow(Box::new(acc), k)
                }
                Tok::Int(_) => Expr::Pow(Box::new(acc), self.int()?),
                _ => return Err(self.error(&["`(`", "integer"])),
            };
        }
        Ok(acc)
    }

    fn call_arg(&mut self) -> Result<Expr, CliError> {
        self.expect(Tok::LParen, "`(`")?;
        self.sum()
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(_) => Ok(Expr::Num(self.rational()?)),
            Tok::Gen(g) => {
                self.bump();
                Ok(Expr::Gen(g))
            }
            Tok::LParen => {
                self.bump();
                let e = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(w) => {
                self.bump();
                let simple = |e: Expr| Ok(e);
                match w.as_str() {
                    "u" => simple(Expr::U),
                    "v" => simple(Expr::V),
                    "e" => simple(Expr::Gen(Gen::e())),
                    "f" => simple(Expr::Gen(Gen::f())),
                    "h" => simple(Expr::Gen(Gen::hs())),
                    "c" => simple(Expr::Gen(Gen::c())),
                    "exp" | "ln" | "inv" => {
                        let a = Box::new(self.call_arg()?);
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(match w.as_str() {
                            "exp" => Expr::Exp(a),
                            "ln" => Expr::Ln(a),
                            _ => Expr::Inv(a),
                        })
                    }
                    "C" | "root" => {
                        let a = Box::new(self.call_arg()?);
                        self.expect(Tok::Comma, "`,`")?;
                        let k = self.int()?;
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(if w == "C" { Expr::Binom(a, k) } else { Expr::Root(a, k) })
                    }
                    "pow1p" => {
                        let a = Box::new(self.call_arg()?);
                        self.expect(Tok::Comma, "`,`")?;
                        let neg = *self.peek() == Tok::Minus;
                        if neg {
                            self.bump();
                        }
                        let q = self.rational()?;
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(Expr::Pow1p(a, if neg { -q } else { q }))
                    }
                    _ => Err(CliError::UnknownGenerator {
                        offset: Some(at),
                        name: w,
                        algebra: None,
                    }),
                }
            }
            _ => Err(self.error(ATOM)),
        }
    }
}

/// Parse an expression.
pub fn parse(src: &str) -> Result<Expr, CliError> {
    parse_in(src, None)
}

/// Parse an expression, rejecting generators outside `algebra`.
pub fn parse_in(src: &str, algebra: Option<AlgebraKind>) -> Result<Expr, CliError> {
    let toks = tokenize(src)?;
    if let Some(kind) = algebra {
        for (at, t) in &toks {
            let g = match t {
                Tok::Gen(g) => *g,
                Tok::Ident(w) => match w.as_str() {
                    "e" => Gen::e(),
                    "f" => Gen::f(),
                    "h" => Gen::hs(),
                    "c" => Gen::c(),
                    _ => continue,
                },
                _ => continue,
            };
            if !g.belongs_to(kind) {
                return Err(CliError::UnknownGenerator {
                    offset: Some(*at),
                    name: g.render(),
                    algebra: Some(kind),
                });
            }
        }
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["`+`", "`-`", "`*`", "`^`", "end of input"]));
    }
    Ok(e)
}

// Binding levels used by the renderer.
const SUM: u8 = 0;
const PRODUCT: u8 = 1;
const UNARY: u8 = 2;
const POSTFIX: u8 = 3;

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => SUM,
        Expr::Mul(..) => PRODUCT,
        Expr::Neg(..) => UNARY,
        // `a/b` is read as one literal, so it can take a postfix as is.
        _ => POSTFIX,
    }
}

fn wrap(e: &Expr, min: u8) -> String {
    let s = render(e);
    if level(e) < min {
        format!("({s})")
    } else {
        s
    }
}

fn rational(q: &Q) -> String {
    if q.is_negative() {
        format!("-{}", fmt_q(&-q))
    } else {
        fmt_q(q)
    }
}

/// Render with the fewest parentheses that parse back to the same tree.
pub fn render(e: &Expr) -> String {
    match e {
        Expr::Num(q) => rational(q),
        Expr::Gen(g) => g.render(),
        Expr::U => "u".into(),
        Expr::V => "v".into(),
        Expr::Neg(a) => format!("-{}", wrap(a, UNARY)),
        Expr::Add(a, b) => format!("{} + {}", wrap(a, SUM), wrap(b, PRODUCT)),
        Expr::Sub(a, b) => format!("{} - {}", wrap(a, SUM), wrap(b, PRODUCT)),
        Expr::Mul(a, b) => format!("{}*{}", wrap(a, PRODUCT), wrap(b, UNARY)),
        Expr::DivPow(a, k) => format!("{}^({k})", wrap(a, POSTFIX)),
        Expr::Pow(a, k) => format!("{}^{k}", wrap(a, POSTFIX)),
        Expr::Binom(a, k) => format!("C({}, {k})", render(a)),
        Expr::Exp(a) => format!("exp({})", render(a)),
        Expr::Ln(a) => format!("ln({})", render(a)),
        Expr::Inv(a) => format!("inv({})", render(a)),
        Expr::Root(a, m) => format!("root({}, {m})", render(a)),
        Expr::Pow1p(a, q) => format!("pow1p({}, {})", render(a), rational(q)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zform::{qf, qi};

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn precedence() {
        let e = parse("x+[0]^(2)*x-[1] + 3").unwrap();
        assert_eq!(
            e,
            Expr::Add(
                b(Expr::Mul(b(Expr::DivPow(b(Expr::Gen(Gen::xp(0))), 2)), b(Expr::Gen(Gen::xm(1))))),
                b(Expr::Num(qi(3)))
            )
        );
        let e = parse("a").unwrap_err();
        assert!(matches!(e, CliError::UnknownGenerator { offset: Some(0), .. }));
    }

    #[test]
    fn examples() {
        let e = parse("exp(x+[0]*u) * exp(x-[1]*v)").unwrap();
        assert!(matches!(e, Expr::Mul(ref a, ref b) if matches!(**a, Expr::Exp(_)) && matches!(**b, Expr::Exp(_))));
        assert!(matches!(parse("C(h[0]+c, 3)").unwrap(), Expr::Binom(_, 3)));
        let err = parse("x+[0]^(2) * X-[2]").unwrap_err();
        assert!(matches!(err, CliError::Type { offset: Some(12), .. }), "{err:?}");
        assert_eq!(parse("pow1p(u, -1/2)").unwrap(), Expr::Pow1p(b(Expr::U), qf(-1, 2)));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse("x+[0] * ").unwrap_err() {
            CliError::Syntax { offset, expected, .. } => {
                assert_eq!(offset, 8);
                assert!(expected.contains(&"generator".to_string()));
            }
            e => panic!("{e:?}"),
        }
        match parse("exp(u").unwrap_err() {
            CliError::Syntax { offset, expected, .. } => {
                assert_eq!(offset, 5);
                assert_eq!(expected, vec!["`)`".to_string()]);
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse("x+[0] $").unwrap_err(), CliError::Syntax { offset: 6, .. }));
        assert!(matches!(parse("x+[q]").unwrap_err(), CliError::Syntax { offset: 3, .. }));
    }

    #[test]
    fn render_examples() {
        for s in [
            "x-[1]*x+[0] + h[1]",
            "-(u + v)*e",
            "(u + v)^(2)",
            "1/2*h[0]^3",
            "exp(x+[0]*u)*exp(x-[1]*v)",
            "a - (b - c)",
        ] {
            if let Ok(e) = parse(s) {
                assert_eq!(parse(&render(&e)).unwrap(), e, "{s}");
            }
        }
        assert_eq!(render(&parse("u - (v - u)").unwrap()), "u - (v - u)");
        assert_eq!(render(&parse("(u*v)*u").unwrap()), "u*v*u");
    }
}
