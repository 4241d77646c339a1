//! A small term language for equational identities over an [`OpAlgebra`].
//!
//! Surface syntax, loosest binding first:
//!
//! ```text
//! identity := expr '=' expr
//! expr     := term (('+' | '-') term)*
//! term     := factor (SYMBOL factor)*      SYMBOL is a one-char binary op name such as '*' or '⋆'
//! factor   := '-' factor | atom
//! atom     := '0' | NAME '(' expr ')' | NAME '(' expr ',' expr ')' | NAME | '(' expr ')'
//! ```
//!
//! A bare `NAME` is a variable; `NAME(..)` applies the unary or binary
//! operation of that name. At most four distinct variables are allowed,
//! since identities are checked by exhaustive evaluation.

use std::collections::BTreeSet;
use std::fmt;

use super::OpAlgebra;
use crate::error::{Error, Result};
use crate::report::ValidationReport;

pub const MAX_VARIABLES: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Zero,
    Neg(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Binary(String, Box<Term>, Box<Term>),
    Unary(String, Box<Term>),
}

impl Term {
    fn collect_ops(&self, binary: &mut BTreeSet<String>, unary: &mut BTreeSet<String>) {
        match self {
            Term::Var(_) | Term::Zero => {}
            Term::Neg(t) => t.collect_ops(binary, unary),
            Term::Add(l, r) => {
                l.collect_ops(binary, unary);
                r.collect_ops(binary, unary);
            }
            Term::Binary(name, l, r) => {
                binary.insert(name.clone());
                l.collect_ops(binary, unary);
                r.collect_ops(binary, unary);
            }
            Term::Unary(name, t) => {
                unary.insert(name.clone());
                t.collect_ops(binary, unary);
            }
        }
    }
}

/// An equation `lhs = rhs` between two terms.
#[derive(Clone, Debug)]
pub struct Identity {
    text: String,
    lhs: Term,
    rhs: Term,
    vars: Vec<String>,
}

impl PartialEq for Identity {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl Eq for Identity {}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl Identity {
    pub fn parse(text: &str) -> Result<Identity> {
        let tokens = tokenize(text).map_err(|detail| syntax(text, detail))?;
        let mut p = Parser {
            tokens,
            pos: 0,
            vars: Vec::new(),
        };
        let lhs = p.expr().map_err(|d| syntax(text, d))?;
        p.expect(&Tok::Eq).map_err(|d| syntax(text, d))?;
        let rhs = p.expr().map_err(|d| syntax(text, d))?;
        if p.pos != p.tokens.len() {
            return Err(syntax(text, format!("trailing input at token {}", p.pos)));
        }
        if p.vars.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables(p.vars.len()));
        }
        Ok(Identity {
            text: text.trim().to_string(),
            lhs,
            rhs,
            vars: p.vars,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    /// Binary and unary operation names the identity mentions.
    pub fn operation_names(&self) -> (BTreeSet<String>, BTreeSet<String>) {
        let mut b = BTreeSet::new();
        let mut u = BTreeSet::new();
        self.lhs.collect_ops(&mut b, &mut u);
        self.rhs.collect_ops(&mut b, &mut u);
        (b, u)
    }

    fn resolve(&self, alg: &OpAlgebra) -> Result<(Compiled, Compiled)> {
        Ok((compile(&self.lhs, alg)?, compile(&self.rhs, alg)?))
    }
}

fn syntax(text: &str, detail: impl Into<String>) -> Error {
    Error::IdentitySyntax {
        text: text.to_string(),
        detail: detail.into(),
    }
}

/// Exhaustively evaluates `id` on `alg`. The report is empty iff the
/// identity holds; otherwise it carries the first failing assignment.
pub fn check_identity(alg: &OpAlgebra, id: &Identity) -> Result<ValidationReport> {
    let (lhs, rhs) = id.resolve(alg)?;
    let n = alg.size();
    let k = id.vars.len();
    let mut report = ValidationReport::new();
    let mut assign = vec![0usize; k];
    let total = n.pow(k as u32);
    for mut code in 0..total {
        for slot in assign.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        let l = lhs.eval(alg, &assign);
        let r = rhs.eval(alg, &assign);
        if l != r {
            report.fail("identity", &[id.text()], &assign, format!("lhs = {l}, rhs = {r}"));
            break;
        }
    }
    Ok(report)
}

enum Compiled {
    Var(usize),
    Zero,
    Neg(Box<Compiled>),
    Add(Box<Compiled>, Box<Compiled>),
    Binary(usize, Box<Compiled>, Box<Compiled>),
    Unary(usize, Box<Compiled>),
}

fn compile(t: &Term, alg: &OpAlgebra) -> Result<Compiled> {
    Ok(match t {
        Term::Var(i) => Compiled::Var(*i),
        Term::Zero => Compiled::Zero,
        Term::Neg(x) => Compiled::Neg(Box::new(compile(x, alg)?)),
        Term::Add(l, r) => Compiled::Add(Box::new(compile(l, alg)?), Box::new(compile(r, alg)?)),
        Term::Binary(name, l, r) => {
            let idx = alg
                .binary_index(name)
                .ok_or_else(|| Error::UnknownOperationName(name.clone()))?;
            Compiled::Binary(idx, Box::new(compile(l, alg)?), Box::new(compile(r, alg)?))
        }
        Term::Unary(name, x) => {
            let idx = alg
                .unary_index(name)
                .ok_or_else(|| Error::UnknownOperationName(name.clone()))?;
            Compiled::Unary(idx, Box::new(compile(x, alg)?))
        }
    })
}

impl Compiled {
    fn eval(&self, alg: &OpAlgebra, assign: &[usize]) -> usize {
        match self {
            Compiled::Var(i) => assign[*i],
            Compiled::Zero => alg.zero(),
            Compiled::Neg(x) => alg.neg(x.eval(alg, assign)),
            Compiled::Add(l, r) => alg.add(l.eval(alg, assign), r.eval(alg, assign)),
            Compiled::Binary(op, l, r) => alg.binary_ops()[*op].apply(l.eval(alg, assign), r.eval(alg, assign)),
            Compiled::Unary(op, x) => alg.unary_ops()[*op].apply(x.eval(alg, assign)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Zero,
    Plus,
    Minus,
    LParen,
    RParen,
    Comma,
    Eq,
    Sym(String),
}

fn tokenize(text: &str) -> std::result::Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_alphanumeric() || d == '_' || d == '\'' {
                    name.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Tok::Name(name));
        } else if c == '0' {
            chars.next();
            if chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                return Err("only the constant 0 is allowed".into());
            }
            out.push(Tok::Zero);
        } else if c.is_ascii_digit() {
            return Err(format!("unexpected constant starting with `{c}`"));
        } else {
            chars.next();
            out.push(match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '=' => Tok::Eq,
                other => Tok::Sym(other.to_string()),
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
    vars: Vec<String>,
}

type PResult<T> = std::result::Result<T, String>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: &Tok) -> PResult<()> {
        match self.bump() {
            Some(ref got) if got == t => Ok(()),
            got => Err(format!("expected {t:?}, found {got:?}")),
        }
    }

    fn expr(&mut self) -> PResult<Term> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Term::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Term::Add(Box::new(acc), Box::new(Term::Neg(Box::new(rhs))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Term> {
        let mut acc = self.factor()?;
        while let Some(Tok::Sym(s)) = self.peek() {
            let name = s.clone();
            self.pos += 1;
            let rhs = self.factor()?;
            acc = Term::Binary(name, Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<Term> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Term::Neg(Box::new(self.factor()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> PResult<Term> {
        match self.bump() {
            Some(Tok::Zero) => Ok(Term::Zero),
            Some(Tok::LParen) => {
                let t = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(t)
            }
            Some(Tok::Name(name)) => {
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let first = self.expr()?;
                    if self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        let second = self.expr()?;
                        self.expect(&Tok::RParen)?;
                        Ok(Term::Binary(name, Box::new(first), Box::new(second)))
                    } else {
                        self.expect(&Tok::RParen)?;
                        Ok(Term::Unary(name, Box::new(first)))
                    }
                } else {
                    let idx = match self.vars.iter().position(|v| *v == name) {
                        Some(i) => i,
                        None => {
                            self.vars.push(name);
                            self.vars.len() - 1
                        }
                    };
                    Ok(Term::Var(idx))
                }
            }
            got => Err(format!("unexpected token {got:?}")),
        }
    }
}
