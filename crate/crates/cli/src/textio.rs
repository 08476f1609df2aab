//! The `.galg` presentation language.
//!
//! ```text
//! # quantum plane over GF(7)
//! field GF 7
//! gens x:1 y:1
//! skew q(x,y)=3
//! rel x*x*y - y*y*y
//! ```
//!
//! Statements are line based: `field Q` or `field GF p`; `gens name:deg ...`;
//! `skew q(a,b)=s` (a bare `skew` declares all parameters equal to 1);
//! `rel <poly>`; `tensor { ... } { ... }`, whose blocks inherit the field;
//! `adjoin t:count`. Comments start with `#`. Polynomials use `+`, `-`,
//! `*`, `^n`, parentheses, commutators `[f, g]` and literals such as `3`
//! or `3/2`.

use std::fmt;

use gradalg_core::freealg::{GeneratorSet, NcPoly};
use gradalg_core::presentation::{Presentation, SkewMatrix};
use gradalg_core::scalars::{FieldSpec, Scalar};
use gradalg_core::Error as CoreError;
use num_bigint::BigInt;

/// What went wrong while reading a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax { expected: Vec<String>, found: String },
    UnknownGenerator(String),
    Invalid(CoreError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => {
                write!(f, "expected one of {}, found {found}", expected.join(", "))
            }
            ParseErrorKind::UnknownGenerator(name) => write!(f, "unknown generator `{name}`"),
            ParseErrorKind::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Sym(char),
    Newline,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ratio(a, b) => format!("`{a}/{b}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (ln, text) in src.lines().enumerate() {
        let line = ln + 1;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if is_ident_start(c) {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line, column });
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = chars[start..i].iter().collect::<String>().parse().expect("digits");
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    let dstart = i + 1;
                    i = dstart;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let den: BigInt = chars[dstart..i].iter().collect::<String>().parse().expect("digits");
                    out.push(Token { tok: Tok::Ratio(num, den), line, column });
                } else {
                    out.push(Token { tok: Tok::Int(num), line, column });
                }
                continue;
            }
            if "+-*^()[],:={}".contains(c) {
                out.push(Token { tok: Tok::Sym(c), line, column });
                i += 1;
                continue;
            }
            return Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::Syntax { expected: vec!["a token".into()], found: format!("`{c}`") },
            });
        }
        out.push(Token { tok: Tok::Newline, line, column: chars.len() + 1 });
    }
    let line = src.lines().count() + 1;
    out.push(Token { tok: Tok::Eof, line, column: 1 });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

/// Declarations collected in one scope before the presentation exists.
struct Scope {
    field: FieldSpec,
    field_locked: bool,
    gens: Option<GeneratorSet>,
    skew: Option<Vec<(usize, usize, Scalar)>>,
    pres: Option<Presentation>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, t: &Token, kind: ParseErrorKind) -> ParseError {
        ParseError { line: t.line, column: t.column, kind }
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        self.error_at(t, ParseErrorKind::Syntax { expected: expected.iter().map(|s| s.to_string()).collect(), found: t.tok.describe() })
    }

    fn invalid(&self, t: &Token, e: CoreError) -> ParseError {
        self.error_at(t, ParseErrorKind::Invalid(e))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<Token, ParseError> {
        if self.peek().tok == Tok::Sym(c) {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&[&format!("`{c}`")]))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Token), ParseError> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => Ok((s, self.bump())),
            _ => Err(self.unexpected(&[what])),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(BigInt, Token), ParseError> {
        match self.peek().tok.clone() {
            Tok::Int(n) => Ok((n, self.bump())),
            _ => Err(self.unexpected(&[what])),
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek().tok == Tok::Newline {
            self.bump();
        }
    }

    fn end_statement(&mut self) -> Result<(), ParseError> {
        match self.peek().tok {
            Tok::Newline => {
                self.bump();
                Ok(())
            }
            Tok::Eof | Tok::Sym('}') => Ok(()),
            _ => Err(self.unexpected(&["end of line"])),
        }
    }

    fn small_int(&self, n: &BigInt, t: &Token) -> Result<u64, ParseError> {
        u64::try_from(n).map_err(|_| self.invalid(t, CoreError::InvalidScalar(n.to_string())))
    }

    /// Statements until end of input or a closing brace.
    fn statements(&mut self, field: FieldSpec, inherited: bool) -> Result<Presentation, ParseError> {
        let mut scope = Scope { field, field_locked: inherited, gens: None, skew: None, pres: None };
        loop {
            self.skip_newlines();
            let t = self.peek().clone();
            let keyword = match &t.tok {
                Tok::Eof | Tok::Sym('}') => break,
                Tok::Ident(k) => k.clone(),
                _ => return Err(self.unexpected(&["field", "gens", "skew", "rel", "tensor", "adjoin"])),
            };
            match keyword.as_str() {
                "field" => self.field_statement(&mut scope)?,
                "gens" => self.gens_statement(&mut scope)?,
                "skew" => self.skew_statement(&mut scope)?,
                "rel" => self.rel_statement(&mut scope)?,
                "tensor" => self.tensor_statement(&mut scope)?,
                "adjoin" => self.adjoin_statement(&mut scope)?,
                _ => return Err(self.unexpected(&["field", "gens", "skew", "rel", "tensor", "adjoin"])),
            }
            self.end_statement()?;
        }
        let at = self.peek().clone();
        self.materialize(&mut scope, &at)?;
        Ok(scope.pres.expect("materialized"))
    }

    fn field_statement(&mut self, scope: &mut Scope) -> Result<(), ParseError> {
        let kw = self.bump();
        if scope.field_locked || scope.gens.is_some() || scope.pres.is_some() {
            return Err(self
                .error_at(&kw, ParseErrorKind::Syntax { expected: vec!["field before any generators".into()], found: "`field`".into() }));
        }
        let (name, _) = self.expect_ident("`Q` or `GF`")?;
        scope.field = match name.as_str() {
            "Q" => FieldSpec::Rationals,
            "GF" => {
                let (p, pt) = self.expect_int("a prime modulus")?;
                let p = self.small_int(&p, &pt)?;
                FieldSpec::prime(p).map_err(|e| self.invalid(&pt, e))?
            }
            _ => {
                self.pos -= 1;
                return Err(self.unexpected(&["`Q`", "`GF`"]));
            }
        };
        scope.field_locked = true;
        Ok(())
    }

    fn gens_statement(&mut self, scope: &mut Scope) -> Result<(), ParseError> {
        let kw = self.bump();
        if scope.gens.is_some() || scope.pres.is_some() {
            return Err(self.error_at(
                &kw,
                ParseErrorKind::Syntax { expected: vec!["a single generator declaration".into()], found: "`gens`".into() },
            ));
        }
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        while let Tok::Ident(_) = self.peek().tok {
            let (name, _) = self.expect_ident("a generator name")?;
            self.expect_sym(':')?;
            let (d, dt) = self.expect_int("a degree")?;
            let d = u32::try_from(self.small_int(&d, &dt)?).map_err(|_| self.invalid(&dt, CoreError::InvalidScalar(d.to_string())))?;
            names.push(name);
            degrees.push(d);
        }
        if names.is_empty() && !matches!(self.peek().tok, Tok::Newline | Tok::Eof) {
            return Err(self.unexpected(&["a generator name"]));
        }
        scope.gens = Some(GeneratorSet::new(names, degrees).map_err(|e| self.invalid(&kw, e))?);
        scope.field_locked = true;
        Ok(())
    }

    fn skew_statement(&mut self, scope: &mut Scope) -> Result<(), ParseError> {
        let kw = self.bump();
        let Some(gens) = &scope.gens else {
            return Err(
                self.error_at(&kw, ParseErrorKind::Syntax { expected: vec!["`gens` before `skew`".into()], found: "`skew`".into() })
            );
        };
        if scope.pres.is_some() {
            return Err(self.error_at(
                &kw,
                ParseErrorKind::Syntax { expected: vec!["`skew` before `rel` and `adjoin`".into()], found: "`skew`".into() },
            ));
        }
        let gens = gens.clone();
        let entries = scope.skew.get_or_insert_with(Vec::new);
        if matches!(self.peek().tok, Tok::Newline | Tok::Eof) {
            return Ok(());
        }
        let (q, qt) = self.expect_ident("`q`")?;
        if q != "q" {
            return Err(self.error_at(&qt, ParseErrorKind::Syntax { expected: vec!["`q`".into()], found: format!("`{q}`") }));
        }
        self.expect_sym('(')?;
        let (a, at) = self.expect_ident("a generator name")?;
        self.expect_sym(',')?;
        let (b, bt) = self.expect_ident("a generator name")?;
        self.expect_sym(')')?;
        self.expect_sym('=')?;
        let vt = self.peek().clone();
        let value = self.scalar_literal(scope.field)?;
        let i = gens.index_of(&a).ok_or_else(|| self.error_at(&at, ParseErrorKind::UnknownGenerator(a.clone())))?;
        let j = gens.index_of(&b).ok_or_else(|| self.error_at(&bt, ParseErrorKind::UnknownGenerator(b.clone())))?;
        let (i, j, value) = if i < j { (i, j, value) } else { (j, i, value.inv().map_err(|e| self.invalid(&vt, e))?) };
        if i == j || value.is_zero() {
            return Err(self.invalid(&vt, CoreError::InvalidSkewMatrix(format!("bad entry q({a},{b})"))));
        }
        entries.retain(|(x, y, _)| (*x, *y) != (i, j));
        entries.push((i, j, value));
        Ok(())
    }

    fn scalar_literal(&mut self, field: FieldSpec) -> Result<Scalar, ParseError> {
        let neg = self.eat_sym('-');
        let t = self.peek().clone();
        let s = match t.tok.clone() {
            Tok::Int(n) => {
                self.bump();
                field.from_bigint(&n)
            }
            Tok::Ratio(a, b) => {
                self.bump();
                field.from_ratio(&a, &b).map_err(|e| self.invalid(&t, e))?
            }
            _ => return Err(self.unexpected(&["a scalar"])),
        };
        Ok(if neg { -s } else { s })
    }

    fn materialize(&mut self, scope: &mut Scope, at: &Token) -> Result<(), ParseError> {
        if scope.pres.is_some() {
            return Ok(());
        }
        let gens = scope.gens.clone().unwrap_or_else(GeneratorSet::empty);
        let pres = match &scope.skew {
            Some(entries) => {
                let p = SkewMatrix::from_upper(scope.field, gens.len(), entries).map_err(|e| self.invalid(at, e))?;
                Presentation::skew_ring(&p, gens).map_err(|e| self.invalid(at, e))?
            }
            None => Presentation::free(scope.field, gens),
        };
        scope.pres = Some(pres);
        scope.field_locked = true;
        Ok(())
    }

    fn rel_statement(&mut self, scope: &mut Scope) -> Result<(), ParseError> {
        let kw = self.bump();
        self.materialize(scope, &kw)?;
        let pres = scope.pres.as_ref().expect("materialized");
        let start = self.peek().clone();
        let r = self.poly(pres.gens(), scope.field)?;
        let next = pres.quotient(vec![r]).map_err(|e| self.invalid(&start, e))?;
        scope.pres = Some(next);
        Ok(())
    }

    fn tensor_statement(&mut self, scope: &mut Scope) -> Result<(), ParseError> {
        let kw = self.bump();
        if scope.gens.is_some() || scope.pres.is_some() {
            return Err(self.error_at(
                &kw,
                ParseErrorKind::Syntax { expected: vec!["`tensor` before other declarations".into()], found: "`tensor`".into() },
            ));
        }
        let mut factors = Vec::new();
        for _ in 0..2 {
            self.skip_newlines();
            self.expect_sym('{')?;
            factors.push(self.statements(scope.field, true)?);
            self.expect_sym('}')?;
        }
        let pres = factors[0].tensor(&factors[1]).map_err(|e| self.invalid(&kw, e))?;
        scope.gens = Some(pres.gens().clone());
        scope.pres = Some(pres);
        scope.field_locked = true;
        Ok(())
    }

    fn adjoin_statement(&mut self, scope: &mut Scope) -> Result<(), ParseError> {
        let kw = self.bump();
        let (prefix, _) = self.expect_ident("a name prefix")?;
        self.expect_sym(':')?;
        let (count, ct) = self.expect_int("a count")?;
        let count = self.small_int(&count, &ct)? as usize;
        self.materialize(scope, &kw)?;
        let pres = scope.pres.as_ref().expect("materialized");
        scope.pres = Some(pres.adjoin_central_named(&prefix, count).map_err(|e| self.invalid(&kw, e))?);
        Ok(())
    }

    // ---- polynomials ----

    fn poly(&mut self, gens: &GeneratorSet, field: FieldSpec) -> Result<NcPoly, ParseError> {
        let mut acc = self.term(gens, field)?;
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.term(gens, field)?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.term(gens, field)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, gens: &GeneratorSet, field: FieldSpec) -> Result<NcPoly, ParseError> {
        let neg = self.eat_sym('-');
        let mut acc = self.power(gens, field)?;
        while self.eat_sym('*') {
            acc = &acc * &self.power(gens, field)?;
        }
        Ok(if neg { -&acc } else { acc })
    }

    fn power(&mut self, gens: &GeneratorSet, field: FieldSpec) -> Result<NcPoly, ParseError> {
        let base = self.atom(gens, field)?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let (e, et) = self.expect_int("an exponent")?;
        let e = self.small_int(&e, &et)?;
        let mut acc = NcPoly::constant(field.one());
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self, gens: &GeneratorSet, field: FieldSpec) -> Result<NcPoly, ParseError> {
        let t = self.peek().clone();
        match t.tok.clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(NcPoly::constant(field.from_bigint(&n)))
            }
            Tok::Ratio(a, b) => {
                self.bump();
                Ok(NcPoly::constant(field.from_ratio(&a, &b).map_err(|e| self.invalid(&t, e))?))
            }
            Tok::Ident(name) => {
                self.bump();
                let i = gens.index_of(&name).ok_or_else(|| self.error_at(&t, ParseErrorKind::UnknownGenerator(name.clone())))?;
                Ok(gens.var(i, &field.one()))
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.poly(gens, field)?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            Tok::Sym('[') => {
                self.bump();
                let f = self.poly(gens, field)?;
                self.expect_sym(',')?;
                let g = self.poly(gens, field)?;
                self.expect_sym(']')?;
                Ok(f.commutator(&g))
            }
            _ => Err(self.unexpected(&["a generator", "a number", "`(`", "`[`"])),
        }
    }
}

/// Parses a complete presentation.
pub fn parse_presentation(src: &str) -> Result<Presentation, ParseError> {
    let mut p = Parser { tokens: lex(src)?, pos: 0 };
    let pres = p.statements(FieldSpec::Rationals, false)?;
    if p.peek().tok != Tok::Eof {
        return Err(p.unexpected(&["end of input"]));
    }
    Ok(pres)
}

/// Parses a polynomial over the generators of `pres`.
pub fn parse_poly(pres: &Presentation, src: &str) -> Result<NcPoly, ParseError> {
    let mut p = Parser { tokens: lex(src)?, pos: 0 };
    let f = p.poly(pres.gens(), pres.field())?;
    p.skip_newlines();
    if p.peek().tok != Tok::Eof {
        return Err(p.unexpected(&["an operator", "end of input"]));
    }
    Ok(f)
}

/// Text that [`parse_presentation`] turns back into an equal presentation.
pub fn print_presentation(pres: &Presentation) -> String {
    let mut out = String::new();
    match pres.field() {
        FieldSpec::Rationals => out.push_str("field Q\n"),
        f => out.push_str(&format!("field GF {}\n", f.characteristic())),
    }
    let gens = pres.gens();
    out.push_str("gens");
    for i in 0..gens.len() {
        out.push_str(&format!(" {}:{}", gens.name(i), gens.degree(i)));
    }
    out.push('\n');
    let relations = match pres.skew() {
        Some(p) => {
            let mut any = false;
            for i in 0..p.size() {
                for j in i + 1..p.size() {
                    if !p.get(i, j).is_one() {
                        out.push_str(&format!("skew q({},{})={}\n", gens.name(i), gens.name(j), p.get(i, j)));
                        any = true;
                    }
                }
            }
            if !any {
                out.push_str("skew\n");
            }
            pres.extra_relations()
        }
        None => pres.relations(),
    };
    for r in relations {
        out.push_str(&format!("rel {}\n", r.to_text(gens)));
    }
    out
}
