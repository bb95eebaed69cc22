//! Text grammars for Cartan elements and generator words.
//!
//! Two small languages connect the algebra to the command line:
//!
//! * **Element grammar** — arithmetic expressions over the Cartan
//!   subalgebra:
//!
//!   ```text
//!   expr   := term (('+' | '-') term)*
//!   term   := factor ('*' factor)*
//!   factor := '-' factor | atom
//!   atom   := '(' expr ')' | 'K[' int ';' uint ']' | 'K' | 'K^-1'
//!           | 'q' ('^' int)? | int
//!   ```
//!
//!   `K[c;t]` is the symbol `[K; c // t]` (normal-formed on sight when it is
//!   not already in the basis), `K` and `K^-1` are the group-likes, and `q`
//!   powers and integers are scalars.  Example: `(q + q^-1)*K[1;1] - K[0;1]`.
//!
//! * **Word grammar** — whitespace-separated generator factors
//!   `E(n)`, `F(n)`, `K`, `K^-1`, `K[c;t]`, consumed by the straightener.
//!
//! [`render_cartan`] and [`render_word`] emit canonical forms that parse
//! back to the same value (round-trip identity); [`render_algebra`] prints
//! PBW expansions as `F(a)*K[c;t]*E(b)` monomials with unit factors elided.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::{AlgebraElement, Generator, PBWMonomial, Word};
use crate::cartan::{expand, k_element, normal_form, CartanElement, KOracle, LusztigSymbol};
use crate::error::{Error, Result};
use crate::klaurent::KLaurent;
use crate::laurent::LaurentPoly;
use crate::ratfunc::RatFunc;

// ============================================================
// Tokenizer (shared by the element grammar).
// ============================================================

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Int(i64),
    /// `q` or `q^e`.
    QPower(i64),
    /// `K[c;t]`.
    Symbol(i64, u32),
    /// `K` (+1) or `K^-1` (-1).
    KGen(i8),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.bump() == Some(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    /// An unsigned decimal integer.
    fn uint(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        core::str::from_utf8(&self.input[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("integer out of range"))
    }

    /// An optionally negated decimal integer (no interior whitespace).
    fn int(&mut self) -> Result<i64> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            Ok(-self.uint()?)
        } else {
            self.uint()
        }
    }

    fn next_token(&mut self) -> Result<Option<Token>> {
        self.skip_ws();
        let Some(c) = self.peek() else {
            return Ok(None);
        };
        let token = match c {
            b'+' => {
                self.pos += 1;
                Token::Plus
            }
            b'-' => {
                self.pos += 1;
                Token::Minus
            }
            b'*' => {
                self.pos += 1;
                Token::Star
            }
            b'(' => {
                self.pos += 1;
                Token::LParen
            }
            b')' => {
                self.pos += 1;
                Token::RParen
            }
            b'0'..=b'9' => Token::Int(self.uint()?),
            b'q' => {
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    Token::QPower(self.int()?)
                } else {
                    Token::QPower(1)
                }
            }
            b'K' => {
                self.pos += 1;
                match self.peek() {
                    Some(b'[') => {
                        self.pos += 1;
                        let c = self.int()?;
                        self.expect(b';')?;
                        let t = self.uint()?;
                        self.expect(b']')?;
                        let t = u32::try_from(t).map_err(|_| self.error("height out of range"))?;
                        Token::Symbol(c, t)
                    }
                    Some(b'^') => {
                        self.pos += 1;
                        if self.int()? == -1 {
                            Token::KGen(-1)
                        } else {
                            return Err(self.error("only K^-1 is a generator"));
                        }
                    }
                    _ => Token::KGen(1),
                }
            }
            other => return Err(self.error(&format!("unexpected '{}'", other as char))),
        };
        Ok(Some(token))
    }

    fn tokenize(mut self) -> Result<Vec<Token>> {
        let mut out = Vec::new();
        while let Some(t) = self.next_token()? {
            out.push(t);
        }
        Ok(out)
    }
}

// ============================================================
// Element grammar: recursive-descent parser over the token stream.
// ============================================================

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<CartanElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CartanElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = acc.product(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CartanElement> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            Ok(self.factor()?.scale(&LaurentPoly::from_int(-1)))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<CartanElement> {
        match self.bump() {
            Some(Token::LParen) => {
                let inner = self.expr()?;
                if self.bump() == Some(Token::RParen) {
                    Ok(inner)
                } else {
                    Err(self.error("expected ')'"))
                }
            }
            Some(Token::Int(n)) => Ok(CartanElement::one().scale(&LaurentPoly::from_int(n))),
            Some(Token::QPower(e)) => {
                Ok(CartanElement::one().scale(&LaurentPoly::monomial(e, BigInt::from(1))))
            }
            Some(Token::Symbol(c, t)) => Ok(normal_form(LusztigSymbol::new(c, t))),
            Some(Token::KGen(s)) => Ok(k_element(s as i32)),
            _ => Err(self.error("expected an atom")),
        }
    }
}

/// Parses the element grammar into a (normal-formed) Cartan element.
pub fn parse_cartan(input: &str) -> Result<CartanElement> {
    let tokens = Lexer::new(input).tokenize()?;
    let mut parser = Parser { tokens, pos: 0 };
    let result = parser.expr()?;
    if parser.pos == parser.tokens.len() {
        Ok(result)
    } else {
        Err(parser.error("trailing input"))
    }
}

/// Twin of the element parser that evaluates directly in the K-Laurent
/// oracle, bypassing the basis representation entirely: symbols expand to
/// their defining products, `K^(+-1)` to bare monomials, and `*` to oracle
/// multiplication.  Comparing this against `parse_cartan(..).expand_oracle()`
/// re-derives a normal form's correctness by an independent route.
pub fn parse_cartan_oracle(input: &str) -> Result<KOracle> {
    struct OracleParser {
        tokens: Vec<Token>,
        pos: usize,
    }
    impl OracleParser {
        fn error(&self, msg: &str) -> Error {
            Error::Parse(format!("{msg} at token {}", self.pos))
        }
        fn expr(&mut self) -> Result<KLaurent> {
            let mut acc = self.term()?;
            loop {
                match self.tokens.get(self.pos) {
                    Some(Token::Plus) => {
                        self.pos += 1;
                        acc = &acc + &self.term()?;
                    }
                    Some(Token::Minus) => {
                        self.pos += 1;
                        acc = &acc - &self.term()?;
                    }
                    _ => return Ok(acc),
                }
            }
        }
        fn term(&mut self) -> Result<KLaurent> {
            let mut acc = self.factor()?;
            while self.tokens.get(self.pos) == Some(&Token::Star) {
                self.pos += 1;
                acc = &acc * &self.factor()?;
            }
            Ok(acc)
        }
        fn factor(&mut self) -> Result<KLaurent> {
            if self.tokens.get(self.pos) == Some(&Token::Minus) {
                self.pos += 1;
                Ok(-&self.factor()?)
            } else {
                self.atom()
            }
        }
        fn atom(&mut self) -> Result<KLaurent> {
            let token = self.tokens.get(self.pos).cloned();
            self.pos += 1;
            match token {
                Some(Token::LParen) => {
                    let inner = self.expr()?;
                    if self.tokens.get(self.pos) == Some(&Token::RParen) {
                        self.pos += 1;
                        Ok(inner)
                    } else {
                        Err(self.error("expected ')'"))
                    }
                }
                Some(Token::Int(n)) => Ok(KLaurent::scalar(RatFunc::from_int(n))),
                Some(Token::QPower(e)) => Ok(KLaurent::scalar(RatFunc::from_laurent(
                    &LaurentPoly::monomial(e, BigInt::from(1)),
                ))),
                Some(Token::Symbol(c, t)) => Ok(expand(LusztigSymbol::new(c, t)).value),
                Some(Token::KGen(s)) => Ok(KLaurent::monomial(s as i64, RatFunc::one())),
                _ => Err(self.error("expected an atom")),
            }
        }
    }
    let tokens = Lexer::new(input).tokenize()?;
    let mut parser = OracleParser { tokens, pos: 0 };
    let value = parser.expr()?;
    if parser.pos == parser.tokens.len() {
        Ok(KOracle { value })
    } else {
        Err(parser.error("trailing input"))
    }
}

// ============================================================
// Word grammar.
// ============================================================

/// Parses the word grammar: whitespace-separated factors `E(n)`, `F(n)`,
/// `K`, `K^-1`, `K[c;t]`.  The empty string is the unit word.
pub fn parse_word(input: &str) -> Result<Word> {
    let mut factors = Vec::new();
    for chunk in input.split_whitespace() {
        let mut lexer = Lexer::new(chunk);
        let factor = match lexer.peek() {
            Some(b'E') | Some(b'F') => {
                let is_e = lexer.bump() == Some(b'E');
                lexer.expect(b'(')?;
                let n = lexer.uint()?;
                lexer.expect(b')')?;
                let n = u32::try_from(n)
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad exponent in '{chunk}'")))?;
                if is_e {
                    Generator::DividedE(n)
                } else {
                    Generator::DividedF(n)
                }
            }
            Some(b'K') => match lexer.next_token()? {
                Some(Token::KGen(s)) => Generator::KPower(s),
                Some(Token::Symbol(c, t)) => Generator::Cartan(LusztigSymbol::new(c, t)),
                _ => return Err(Error::Parse(format!("bad factor '{chunk}'"))),
            },
            _ => return Err(Error::Parse(format!("bad factor '{chunk}'"))),
        };
        if lexer.pos != lexer.input.len() {
            return Err(Error::Parse(format!("trailing characters in '{chunk}'")));
        }
        factors.push(factor);
    }
    Word::new(factors)
}

// ============================================================
// Rendering.
// ============================================================

fn render_symbol(sym: &LusztigSymbol) -> String {
    format!("K[{};{}]", sym.c, sym.t)
}

fn render_generator(g: &Generator) -> String {
    match g {
        Generator::DividedE(n) => format!("E({n})"),
        Generator::DividedF(n) => format!("F({n})"),
        Generator::KPower(1) => "K".to_string(),
        Generator::KPower(_) => "K^-1".to_string(),
        Generator::Cartan(sym) => render_symbol(sym),
    }
}

/// Renders a word in the word grammar (factors joined by single spaces; the
/// unit word renders as the empty string).
pub fn render_word(w: &Word) -> String {
    let parts: Vec<String> = w.factors().iter().map(render_generator).collect();
    parts.join(" ")
}

/// True when the coefficient's highest-exponent term is positive — such
/// coefficients print without a leading minus.
fn leading_positive(coeff: &LaurentPoly) -> bool {
    coeff
        .iter()
        .last()
        .map(|(_, c)| c.sign() != num_bigint::Sign::Minus)
        .unwrap_or(true)
}

/// Appends `coeff * body` (or just the coefficient when `body` is empty) to
/// `out`, with `+1` coefficients elided and all others parenthesized.
fn push_term(out: &mut String, first: bool, coeff: &LaurentPoly, body: &str) {
    let positive = leading_positive(coeff);
    let magnitude = if positive {
        coeff.clone()
    } else {
        coeff.scale(&BigInt::from(-1))
    };
    if first {
        if !positive {
            out.push_str("- ");
        }
    } else if positive {
        out.push_str(" + ");
    } else {
        out.push_str(" - ");
    }
    let is_unit_coeff = magnitude == LaurentPoly::one();
    if body.is_empty() {
        // Scalar term: `1`, `(q + q^-1)`, ...
        if is_unit_coeff {
            out.push('1');
        } else {
            out.push('(');
            out.push_str(&magnitude.descending_string());
            out.push(')');
        }
    } else if is_unit_coeff {
        out.push_str(body);
    } else {
        out.push('(');
        out.push_str(&magnitude.descending_string());
        out.push_str(")*");
        out.push_str(body);
    }
}

/// Renders a Cartan element canonically: terms with positive leading
/// coefficient first, each group ordered by height then shift ascending;
/// coefficients in descending exponent order, `+-1` elided, all others
/// parenthesized.  Examples: `(q + q^-1)*K[1;1] - K[0;1]`, `0`.
pub fn render_cartan(x: &CartanElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&LusztigSymbol, &LaurentPoly)> = x.iter().collect();
    terms.sort_by_key(|(sym, coeff)| (!leading_positive(coeff), sym.t, sym.c));
    let mut out = String::new();
    for (i, (sym, coeff)) in terms.into_iter().enumerate() {
        let body = if sym.t == 0 {
            String::new()
        } else {
            render_symbol(sym)
        };
        push_term(&mut out, i == 0, coeff, &body);
    }
    out
}

fn render_monomial(mono: &PBWMonomial) -> String {
    let mut parts = Vec::new();
    if mono.a > 0 {
        parts.push(format!("F({})", mono.a));
    }
    if mono.sym.t > 0 {
        parts.push(render_symbol(&mono.sym));
    }
    if mono.b > 0 {
        parts.push(format!("E({})", mono.b));
    }
    parts.join("*")
}

/// Renders a PBW expansion: monomials `F(a)*K[c;t]*E(b)` with unit factors
/// elided (the unit monomial prints as `1`), positive-leading terms first,
/// then by F-exponent descending, E-exponent descending, height and shift
/// ascending.  Examples: `F(1)*E(1) + K[0;1]`, `(q + q^-1)*E(2)`.
pub fn render_algebra(x: &AlgebraElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&PBWMonomial, &LaurentPoly)> = x.iter().collect();
    terms.sort_by_key(|(m, coeff)| {
        (
            !leading_positive(coeff),
            core::cmp::Reverse(m.a),
            core::cmp::Reverse(m.b),
            m.sym.t,
            m.sym.c,
        )
    });
    let mut out = String::new();
    for (i, (mono, coeff)) in terms.into_iter().enumerate() {
        push_term(&mut out, i == 0, coeff, &render_monomial(mono));
    }
    out
}
