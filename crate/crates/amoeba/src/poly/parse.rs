//! Text grammar for polynomials:
//!
//! ```text
//! poly     := ('+'|'-')? term (('+'|'-') term)* ;
//! term     := coeff ('*' monomial)? | monomial ;
//! coeff    := real-literal | '(' '-'? real-literal (('+'|'-') real-literal 'i')? ')' ;
//! monomial := factor ('*' factor)* ;
//! factor   := VAR uint ('^' uint)? ;
//! ```
//!
//! Whitespace is insignificant. Variables are 1-indexed: `Z1..Zn` for
//! complex polynomials, `X1..Xn, Y1..Yn` for realified ones. Real literals
//! are unsigned decimals (`4`, `0.5`, `1e-3`) or fractions (`3/4`).

use num_rational::BigRational;

use super::coeff::{Coeff, ComplexCoeff, FromLiteral, GaussRational};
use super::expt::Expt;
use super::mpoly::{ComplexPoly, GaussPoly, MPoly, RealPoly};
use super::PolyError;
use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Number(String),
    Var(char, u32),
    Imag,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
}

fn lex(text: &str) -> Result<Lexer, PolyError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            'i' => {
                toks.push((i, Tok::Imag));
                i += 1;
            }
            'X' | 'Y' | 'Z' => {
                let start = i;
                i += 1;
                let ds = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(PolyError::Parse {
                        pos: start,
                        msg: format!("variable letter `{c}` must be followed by an index"),
                    });
                }
                let index: u32 = text[ds..i].parse().map_err(|_| PolyError::Parse {
                    pos: ds,
                    msg: "variable index out of representable range".into(),
                })?;
                toks.push((start, Tok::Var(c, index)));
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_digit() || bytes[i] == b'.' || bytes[i] == b'/')
                {
                    i += 1;
                }
                // exponent part: e or E followed by optional sign and digits
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                toks.push((start, Tok::Number(text[start..i].to_string())));
            }
            _ => {
                return Err(PolyError::Parse {
                    pos: i,
                    msg: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(Lexer { toks })
}

/// Maps a variable letter + 1-based index to a 0-based slot, or rejects it.
trait VarMap {
    fn nvars(&self) -> usize;
    fn slot(&self, letter: char, index: u32) -> Option<usize>;
}

struct ComplexVars {
    n: usize,
}

impl VarMap for ComplexVars {
    fn nvars(&self) -> usize {
        self.n
    }
    fn slot(&self, letter: char, index: u32) -> Option<usize> {
        if letter != 'Z' || index == 0 || index as usize > self.n {
            return None;
        }
        Some(index as usize - 1)
    }
}

struct RealVars {
    n: usize,
}

impl VarMap for RealVars {
    fn nvars(&self) -> usize {
        2 * self.n
    }
    fn slot(&self, letter: char, index: u32) -> Option<usize> {
        if index == 0 || index as usize > self.n {
            return None;
        }
        match letter {
            'X' => Some(index as usize - 1),
            'Y' => Some(self.n + index as usize - 1),
            _ => None,
        }
    }
}

struct Parser<'a, C: Coeff, V: VarMap> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    vars: V,
    text_len: usize,
    _marker: std::marker::PhantomData<C>,
}

impl<'a, C, V> Parser<'a, C, V>
where
    C: ComplexCoeff,
    C::Real: FromLiteral,
    V: VarMap,
{
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.text_len)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), PolyError> {
        let pos = self.here();
        match self.bump() {
            Some(t) if *t == want => Ok(()),
            _ => Err(PolyError::Parse {
                pos,
                msg: format!("expected {what}"),
            }),
        }
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    fn parse(&mut self) -> Result<MPoly<C>, PolyError> {
        let n = self.vars.nvars();
        let mut acc = MPoly::<C>::zero(n);
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        loop {
            let term = self.term()?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    negate = true;
                }
                None => return Ok(acc),
                _ => return Err(self.err("expected `+`, `-` or end of input")),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly<C>, PolyError> {
        let n = self.vars.nvars();
        match self.peek() {
            Some(Tok::Number(_)) | Some(Tok::LParen) => {
                let coeff = self.coeff()?;
                if let Some(Tok::Star) = self.peek() {
                    self.bump();
                    let mono = self.monomial()?;
                    Ok(MPoly::monomial(n, mono, coeff))
                } else {
                    Ok(MPoly::constant(n, coeff))
                }
            }
            Some(Tok::Var(..)) => {
                let mono = self.monomial()?;
                Ok(MPoly::monomial(n, mono, C::one()))
            }
            _ => Err(self.err("expected a coefficient or a variable")),
        }
    }

    fn real_literal(&mut self) -> Result<C::Real, PolyError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Number(s)) => C::Real::from_decimal(s).ok_or(PolyError::Parse {
                pos,
                msg: format!("invalid numeric literal `{s}`"),
            }),
            _ => Err(PolyError::Parse {
                pos,
                msg: "expected a numeric literal".into(),
            }),
        }
    }

    fn coeff(&mut self) -> Result<C, PolyError> {
        match self.peek() {
            Some(Tok::Number(_)) => {
                let re = self.real_literal()?;
                Ok(C::from_real(re))
            }
            Some(Tok::LParen) => {
                self.bump();
                let mut re_neg = false;
                if let Some(Tok::Minus) = self.peek() {
                    self.bump();
                    re_neg = true;
                }
                let re = self.real_literal()?;
                let re = if re_neg { re.neg() } else { re };
                let im = match self.peek() {
                    Some(Tok::Plus) | Some(Tok::Minus) => {
                        let neg = matches!(self.peek(), Some(Tok::Minus));
                        self.bump();
                        let v = self.real_literal()?;
                        self.expect(Tok::Imag, "`i` after imaginary part")?;
                        if neg {
                            v.neg()
                        } else {
                            v
                        }
                    }
                    _ => <C::Real as Coeff>::zero(),
                };
                self.expect(Tok::RParen, "closing `)`")?;
                Ok(C::from_parts(re, im))
            }
            _ => Err(self.err("expected a coefficient")),
        }
    }

    fn monomial(&mut self) -> Result<Expt, PolyError> {
        let n = self.vars.nvars();
        let mut e = vec![0u32; n];
        loop {
            let pos = self.here();
            let (letter, index) = match self.bump() {
                Some(Tok::Var(l, i)) => (*l, *i),
                _ => {
                    return Err(PolyError::Parse {
                        pos,
                        msg: "expected a variable".into(),
                    })
                }
            };
            let slot = self
                .vars
                .slot(letter, index)
                .ok_or(PolyError::VarOutOfRange { pos, letter, index })?;
            let exp = if let Some(Tok::Caret) = self.peek() {
                self.bump();
                let pos = self.here();
                match self.bump() {
                    Some(Tok::Number(s)) if s.chars().all(|c| c.is_ascii_digit()) => {
                        s.parse::<u32>().map_err(|_| PolyError::Parse {
                            pos,
                            msg: "exponent too large".into(),
                        })?
                    }
                    _ => {
                        return Err(PolyError::Parse {
                            pos,
                            msg: "expected an integer exponent".into(),
                        })
                    }
                }
            } else {
                1
            };
            e[slot] += exp;
            match self.peek() {
                Some(Tok::Star) if matches!(self.toks.get(self.pos + 1), Some((_, Tok::Var(..)))) =>
                {
                    self.bump();
                }
                _ => return Ok(Expt::new(e)),
            }
        }
    }
}

fn parse_with<C, V>(text: &str, vars: V) -> Result<MPoly<C>, PolyError>
where
    C: ComplexCoeff,
    C::Real: FromLiteral,
    V: VarMap,
{
    let lexer = lex(text)?;
    let mut p = Parser::<C, V> {
        toks: &lexer.toks,
        pos: 0,
        vars,
        text_len: text.len(),
        _marker: std::marker::PhantomData,
    };
    if p.toks.is_empty() {
        return Err(PolyError::Parse {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    p.parse()
}

/// Parse a complex polynomial in variables `Z1..Zn`.
pub fn parse_poly(text: &str, n: usize) -> Result<ComplexPoly, PolyError> {
    parse_with::<Complex64, _>(text, ComplexVars { n })
}

/// Exact-mode variant of [`parse_poly`] with Gaussian rational coefficients.
pub fn parse_poly_exact(text: &str, n: usize) -> Result<GaussPoly, PolyError> {
    parse_with::<GaussRational, _>(text, ComplexVars { n })
}

/// Parse a realified polynomial in variables `X1..Xn, Y1..Yn`
/// (`n` is the complex variable count, the result has `2n` variables).
pub fn parse_real_poly(text: &str, n: usize) -> Result<RealPoly, PolyError> {
    let p = parse_with::<Complex64, _>(text, RealVars { n })?;
    let mut out = RealPoly::zero(2 * n);
    for (e, c) in p.terms() {
        if c.im != 0.0 {
            return Err(PolyError::Parse {
                pos: 0,
                msg: "complex coefficient in a real polynomial".into(),
            });
        }
        out = out.add(&RealPoly::monomial(2 * n, e.clone(), c.re));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

/// How a coefficient renders inside the term grammar.
pub trait PrintCoeff: Coeff {
    /// `(abs_text, negative)` for a real coefficient, or `None` if the
    /// imaginary part is nonzero.
    fn as_signed_real(&self) -> Option<(String, bool)>;
    /// Parenthesized complex form `(a+bi)`.
    fn as_complex_text(&self) -> String;
    fn is_one_abs(&self) -> bool;
}

fn f64_text(v: f64) -> String {
    format!("{v:?}")
}

impl PrintCoeff for f64 {
    fn as_signed_real(&self) -> Option<(String, bool)> {
        Some((f64_text(self.abs()), *self < 0.0))
    }
    fn as_complex_text(&self) -> String {
        format!("({})", f64_text(*self))
    }
    fn is_one_abs(&self) -> bool {
        self.abs() == 1.0
    }
}

impl PrintCoeff for Complex64 {
    fn as_signed_real(&self) -> Option<(String, bool)> {
        if self.im == 0.0 {
            Some((f64_text(self.re.abs()), self.re < 0.0))
        } else {
            None
        }
    }
    fn as_complex_text(&self) -> String {
        let sign = if self.im < 0.0 { '-' } else { '+' };
        format!("({}{}{}i)", f64_text(self.re), sign, f64_text(self.im.abs()))
    }
    fn is_one_abs(&self) -> bool {
        self.im == 0.0 && self.re.abs() == 1.0
    }
}

fn rational_text(v: &BigRational) -> String {
    use num_traits::One;
    if v.denom().is_one() {
        format!("{}", v.numer())
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

impl PrintCoeff for BigRational {
    fn as_signed_real(&self) -> Option<(String, bool)> {
        use num_traits::Signed;
        Some((rational_text(&self.abs()), self.is_negative()))
    }
    fn as_complex_text(&self) -> String {
        format!("({})", rational_text(self))
    }
    fn is_one_abs(&self) -> bool {
        use num_traits::{One, Signed};
        self.abs().is_one()
    }
}

impl PrintCoeff for GaussRational {
    fn as_signed_real(&self) -> Option<(String, bool)> {
        use num_traits::{Signed, Zero};
        if self.im.is_zero() {
            Some((rational_text(&self.re.abs()), self.re.is_negative()))
        } else {
            None
        }
    }
    fn as_complex_text(&self) -> String {
        use num_traits::Signed;
        let sign = if self.im.is_negative() { '-' } else { '+' };
        format!(
            "({}{}{}i)",
            rational_text(&self.re),
            sign,
            rational_text(&self.im.abs())
        )
    }
    fn is_one_abs(&self) -> bool {
        use num_traits::Zero;
        self.im.is_zero() && {
            use num_traits::{One, Signed};
            self.re.abs().is_one()
        }
    }
}

fn monomial_text(e: &Expt, namer: &dyn Fn(usize) -> String) -> String {
    let mut parts = Vec::new();
    for (k, &exp) in e.entries().iter().enumerate() {
        if exp == 0 {
            continue;
        }
        if exp == 1 {
            parts.push(namer(k));
        } else {
            parts.push(format!("{}^{}", namer(k), exp));
        }
    }
    parts.join("*")
}

fn poly_text<C: PrintCoeff>(p: &MPoly<C>, namer: &dyn Fn(usize) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // descending graded-lex, matching conventional display
    for (i, (e, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let mono = monomial_text(e, namer);
        match c.as_signed_real() {
            Some((abs, neg)) => {
                if i == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                if mono.is_empty() {
                    out.push_str(&abs);
                } else if c.is_one_abs() {
                    out.push_str(&mono);
                } else {
                    out.push_str(&abs);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
            None => {
                if i > 0 {
                    out.push_str(" + ");
                }
                out.push_str(&c.as_complex_text());
                if !mono.is_empty() {
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
    }
    out
}

impl std::fmt::Display for ComplexPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", poly_text(self, &|k| format!("Z{}", k + 1)))
    }
}

impl std::fmt::Display for GaussPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", poly_text(self, &|k| format!("Z{}", k + 1)))
    }
}

fn real_namer(nvars: usize) -> impl Fn(usize) -> String {
    let half = nvars / 2;
    move |k| {
        if k < half {
            format!("X{}", k + 1)
        } else {
            format!("Y{}", k - half + 1)
        }
    }
}

impl std::fmt::Display for RealPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        debug_assert!(self.nvars() % 2 == 0, "real polynomials print as X/Y pairs");
        write!(f, "{}", poly_text(self, &real_namer(self.nvars())))
    }
}

impl std::fmt::Display for super::mpoly::RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        debug_assert!(self.nvars() % 2 == 0, "real polynomials print as X/Y pairs");
        write!(f, "{}", poly_text(self, &real_namer(self.nvars())))
    }
}

impl std::fmt::Debug for ComplexPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Debug for RealPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn parses_paper_figure_polynomial() {
        let f = parse_poly("Z1^2*Z2 + Z1*Z2^2 - 4*Z1*Z2 + 1", 2).unwrap();
        assert_eq!(f.term_count(), 4);
        assert_eq!(
            f.coefficient(&Expt::new(vec![1, 1])),
            Complex64::new(-4.0, 0.0)
        );
        assert_eq!(
            f.coefficient(&Expt::new(vec![2, 1])),
            Complex64::new(1.0, 0.0)
        );
    }

    #[test]
    fn parses_linear_example() {
        let f = parse_poly("Z1 + 2*Z2 + 3", 2).unwrap();
        assert_eq!(f.term_count(), 3);
        assert_eq!(
            f.coefficient(&Expt::new(vec![0, 0])),
            Complex64::new(3.0, 0.0)
        );
    }

    #[test]
    fn parses_complex_coefficient() {
        let f = parse_poly("(2+3i)*Z1", 1).unwrap();
        assert_eq!(f.term_count(), 1);
        assert_eq!(
            f.coefficient(&Expt::new(vec![1])),
            Complex64::new(2.0, 3.0)
        );
    }

    #[test]
    fn rejects_out_of_range_variable() {
        let err = parse_poly("Z3 + 1", 2).unwrap_err();
        match err {
            PolyError::VarOutOfRange { pos, index, .. } => {
                assert_eq!(pos, 0);
                assert_eq!(index, 3);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn reports_syntax_error_position() {
        let err = parse_poly("Z1 + + 2", 2).unwrap_err();
        match err {
            PolyError::Parse { pos, .. } => assert_eq!(pos, 5),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn print_then_parse_is_identity() {
        let f = parse_poly("Z1^2*Z2 - (0.5-2i)*Z2^3 + 7", 2).unwrap();
        let g = parse_poly(&f.to_string(), 2).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn real_poly_display_uses_xy_names() {
        let f = parse_poly("Z1^2", 1).unwrap();
        let (re, _) = f.realify();
        assert_eq!(re.to_string(), "X1^2 - Y1^2");
    }

    #[test]
    fn exact_parse_keeps_rationals() {
        use num_traits::One;
        let f = parse_poly_exact("0.5*Z1 + 1/3", 1).unwrap();
        let half = f.coefficient(&Expt::new(vec![1]));
        assert_eq!(&half.re * 2, num_rational::BigRational::one());
    }

    #[test]
    fn real_poly_roundtrip() {
        let p = parse_real_poly("X1^2 + Y1^2 - 2*X1*Y2 + 0.25", 2).unwrap();
        let q = parse_real_poly(&p.to_string(), 2).unwrap();
        assert_eq!(p, q);
    }
}
