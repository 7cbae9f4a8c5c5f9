//! A small term language over the algebra signature.
//!
//! Surface syntax is ASCII: `&`, `|`, `->`, `<-`, `f(...)`, `g(...)`, `0`,
//! `1`, and identifiers for variables (`f` and `g` are reserved). Precedence
//! from tightest to loosest: application, `&`, `|`, then the two arrows at
//! equal precedence — `->` associates right, `<-` associates left, and a
//! chain mixing them without parentheses is rejected rather than resolved.
//! A top-level `=` splits the input into an identity.
//!
//! Terms evaluate against any validated algebra, and identities are checked
//! exhaustively over all assignments of carrier elements to free variables.

use crate::galois::GaloisPair;
use crate::lattice::LatticeError;
use crate::Signature;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Default cap on `|carrier| ^ #variables` during identity checking.
pub const DEFAULT_ASSIGNMENT_BOUND: u64 = 1_000_000;

/// Byte range of a node in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone)]
pub struct Term {
    pub kind: TermKind,
    pub span: Span,
}

/// Equality of terms is structural; source positions are ignored.
impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Term {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermKind {
    Var(String),
    Zero,
    One,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
    Coimp(Box<Term>, Box<Term>),
    F(Box<Term>),
    G(Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Term(Term),
    Identity(Identity),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {position}: expected {}", expected.join(", "))]
    SyntaxError { position: usize, expected: Vec<String> },
    #[error("'{0}' is reserved and cannot be used as a variable")]
    ReservedVariable(String),
    #[error("mixing '->' and '<-' without parentheses at {position}")]
    MixedAssociativity { position: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Amp,
    Pipe,
    Arrow,
    BackArrow,
    LParen,
    RParen,
    Eq,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Zero => write!(f, "0"),
            Tok::One => write!(f, "1"),
            Tok::Amp => write!(f, "&"),
            Tok::Pipe => write!(f, "|"),
            Tok::Arrow => write!(f, "->"),
            Tok::BackArrow => write!(f, "<-"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::Eq => write!(f, "="),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0' => toks.push((Tok::Zero, Span { start, end: i + 1 })),
            b'1' => toks.push((Tok::One, Span { start, end: i + 1 })),
            b'&' => toks.push((Tok::Amp, Span { start, end: i + 1 })),
            b'|' => toks.push((Tok::Pipe, Span { start, end: i + 1 })),
            b'(' => toks.push((Tok::LParen, Span { start, end: i + 1 })),
            b')' => toks.push((Tok::RParen, Span { start, end: i + 1 })),
            b'=' => toks.push((Tok::Eq, Span { start, end: i + 1 })),
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                toks.push((Tok::Arrow, Span { start, end: i + 2 }));
                i += 1;
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') => {
                toks.push((Tok::BackArrow, Span { start, end: i + 2 }));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i + 1;
                while j < bytes.len()
                    && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                {
                    j += 1;
                }
                let name = input[i..j].to_string();
                toks.push((Tok::Ident(name), Span { start, end: j }));
                i = j;
                continue;
            }
            _ => {
                return Err(ParseError::SyntaxError {
                    position: i,
                    expected: vec!["token".into()],
                })
            }
        }
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_span(&self) -> Span {
        self.toks
            .get(self.pos)
            .map(|&(_, s)| s)
            .unwrap_or(Span { start: self.len, end: self.len })
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<Span, ParseError> {
        match self.peek() {
            Some(t) if t == tok => Ok(self.bump().1),
            _ => Err(ParseError::SyntaxError {
                position: self.peek_span().start,
                expected: vec![what.to_string()],
            }),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let first = self.or_term()?;
        // Collect the arrow chain at this level; mixing the two arrows in
        // one chain is ambiguous and rejected.
        let mut ops: Vec<(Tok, Span)> = Vec::new();
        let mut items = vec![first];
        while matches!(self.peek(), Some(Tok::Arrow) | Some(Tok::BackArrow)) {
            let (op, span) = self.bump();
            if let Some((head, _)) = ops.first() {
                if *head != op {
                    return Err(ParseError::MixedAssociativity { position: span.start });
                }
            }
            ops.push((op, span));
            items.push(self.or_term()?);
        }
        match ops.first() {
            None => Ok(items.pop().unwrap()),
            Some((Tok::Arrow, _)) => {
                let mut acc = items.pop().unwrap();
                while let Some(lhs) = items.pop() {
                    let span = Span { start: lhs.span.start, end: acc.span.end };
                    acc = Term { kind: TermKind::Imp(Box::new(lhs), Box::new(acc)), span };
                }
                Ok(acc)
            }
            Some((Tok::BackArrow, _)) => {
                let mut iter = items.into_iter();
                let mut acc = iter.next().unwrap();
                for rhs in iter {
                    let span = Span { start: acc.span.start, end: rhs.span.end };
                    acc = Term { kind: TermKind::Coimp(Box::new(acc), Box::new(rhs)), span };
                }
                Ok(acc)
            }
            _ => unreachable!(),
        }
    }

    fn or_term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.and_term()?;
        while matches!(self.peek(), Some(Tok::Pipe)) {
            self.bump();
            let rhs = self.and_term()?;
            let span = Span { start: acc.span.start, end: rhs.span.end };
            acc = Term { kind: TermKind::Join(Box::new(acc), Box::new(rhs)), span };
        }
        Ok(acc)
    }

    fn and_term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.atom()?;
        while matches!(self.peek(), Some(Tok::Amp)) {
            self.bump();
            let rhs = self.atom()?;
            let span = Span { start: acc.span.start, end: rhs.span.end };
            acc = Term { kind: TermKind::Meet(Box::new(acc), Box::new(rhs)), span };
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(Tok::Zero) => {
                let (_, span) = self.bump();
                Ok(Term { kind: TermKind::Zero, span })
            }
            Some(Tok::One) => {
                let (_, span) = self.bump();
                Ok(Term { kind: TermKind::One, span })
            }
            Some(Tok::LParen) => {
                let (_, open) = self.bump();
                let inner = self.term()?;
                let close = self.expect(&Tok::RParen, ")")?;
                Ok(Term { kind: inner.kind, span: Span { start: open.start, end: close.end } })
            }
            Some(Tok::Ident(name)) if name == "f" || name == "g" => {
                let (tok, span) = self.bump();
                let name = match tok {
                    Tok::Ident(n) => n,
                    _ => unreachable!(),
                };
                if !matches!(self.peek(), Some(Tok::LParen)) {
                    return Err(ParseError::ReservedVariable(name));
                }
                self.bump();
                let inner = Box::new(self.term()?);
                let close = self.expect(&Tok::RParen, ")")?;
                let span = Span { start: span.start, end: close.end };
                let kind =
                    if name == "f" { TermKind::F(inner) } else { TermKind::G(inner) };
                Ok(Term { kind, span })
            }
            Some(Tok::Ident(_)) => {
                let (tok, span) = self.bump();
                match tok {
                    Tok::Ident(name) => Ok(Term { kind: TermKind::Var(name), span }),
                    _ => unreachable!(),
                }
            }
            _ => Err(ParseError::SyntaxError {
                position: self.peek_span().start,
                expected: vec![
                    "0".into(),
                    "1".into(),
                    "variable".into(),
                    "f(".into(),
                    "g(".into(),
                    "(".into(),
                ],
            }),
        }
    }
}

/// Parses a term, or an identity when a top-level `=` is present.
pub fn parse(input: &str) -> Result<Parsed, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0, len: input.len() };
    let lhs = p.term()?;
    match p.peek() {
        None => Ok(Parsed::Term(lhs)),
        Some(Tok::Eq) => {
            p.bump();
            let rhs = p.term()?;
            if p.peek().is_some() {
                return Err(ParseError::SyntaxError {
                    position: p.peek_span().start,
                    expected: vec!["end of input".into()],
                });
            }
            Ok(Parsed::Identity(Identity { lhs, rhs }))
        }
        Some(_) => Err(ParseError::SyntaxError {
            position: p.peek_span().start,
            expected: vec!["operator".into(), "=".into(), "end of input".into()],
        }),
    }
}

pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    match parse(input)? {
        Parsed::Term(t) => Ok(t),
        Parsed::Identity(_) => Err(ParseError::SyntaxError {
            position: input.find('=').unwrap_or(0),
            expected: vec!["a term without '='".into()],
        }),
    }
}

pub fn parse_identity(input: &str) -> Result<Identity, ParseError> {
    match parse(input)? {
        Parsed::Identity(id) => Ok(id),
        Parsed::Term(_) => Err(ParseError::SyntaxError {
            position: input.len(),
            expected: vec!["=".into()],
        }),
    }
}

// Precedence levels for printing: arrows lowest, atoms highest.
const LVL_ARROW: u8 = 1;
const LVL_OR: u8 = 2;
const LVL_AND: u8 = 3;

fn write_term(t: &Term, min_level: u8, out: &mut String) {
    let level = match &t.kind {
        TermKind::Imp(..) | TermKind::Coimp(..) => LVL_ARROW,
        TermKind::Join(..) => LVL_OR,
        TermKind::Meet(..) => LVL_AND,
        _ => 4,
    };
    let parens = level < min_level;
    if parens {
        out.push('(');
    }
    match &t.kind {
        TermKind::Var(name) => out.push_str(name),
        TermKind::Zero => out.push('0'),
        TermKind::One => out.push('1'),
        TermKind::F(inner) => {
            out.push_str("f(");
            write_term(inner, LVL_ARROW, out);
            out.push(')');
        }
        TermKind::G(inner) => {
            out.push_str("g(");
            write_term(inner, LVL_ARROW, out);
            out.push(')');
        }
        TermKind::Meet(a, b) => {
            write_term(a, LVL_AND, out);
            out.push_str(" & ");
            write_term(b, LVL_AND + 1, out);
        }
        TermKind::Join(a, b) => {
            write_term(a, LVL_OR, out);
            out.push_str(" | ");
            write_term(b, LVL_OR + 1, out);
        }
        TermKind::Imp(a, b) => {
            write_term(a, LVL_OR, out);
            out.push_str(" -> ");
            // Right-associative: a bare chain continues, a co-implication
            // must take parentheses to stay parseable.
            if matches!(b.kind, TermKind::Imp(..)) {
                write_term(b, LVL_ARROW, out);
            } else {
                write_term(b, LVL_OR, out);
            }
        }
        TermKind::Coimp(a, b) => {
            if matches!(a.kind, TermKind::Coimp(..)) {
                write_term(a, LVL_ARROW, out);
            } else {
                write_term(a, LVL_OR, out);
            }
            out.push_str(" <- ");
            write_term(b, LVL_OR, out);
        }
    }
    if parens {
        out.push(')');
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_term(self, 0, &mut out);
        write!(f, "{out}")
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("operation {op} needs signature {needs}, algebra has {signature}")]
    UnsupportedOperation { op: String, needs: Signature, signature: Signature },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Bottom-up evaluation of a term against an algebra instance.
pub fn evaluate(
    t: &Term,
    pair: &GaloisPair,
    signature: Signature,
    env: &BTreeMap<String, usize>,
) -> Result<usize, EvalError> {
    let l = pair.lattice();
    match &t.kind {
        TermKind::Var(name) => {
            env.get(name).copied().ok_or_else(|| EvalError::UnboundVariable(name.clone()))
        }
        TermKind::Zero => Ok(l.bottom()),
        TermKind::One => Ok(l.top()),
        TermKind::Meet(a, b) => {
            Ok(l.meet(evaluate(a, pair, signature, env)?, evaluate(b, pair, signature, env)?))
        }
        TermKind::Join(a, b) => {
            Ok(l.join(evaluate(a, pair, signature, env)?, evaluate(b, pair, signature, env)?))
        }
        TermKind::Imp(a, b) => {
            if !signature.has_implication() {
                return Err(EvalError::UnsupportedOperation {
                    op: "->".into(),
                    needs: Signature::Hgc,
                    signature,
                });
            }
            let a = evaluate(a, pair, signature, env)?;
            let b = evaluate(b, pair, signature, env)?;
            Ok(l.implication(a, b)?)
        }
        TermKind::Coimp(a, b) => {
            if !signature.has_coimplication() {
                return Err(EvalError::UnsupportedOperation {
                    op: "<-".into(),
                    needs: Signature::Hbgc,
                    signature,
                });
            }
            let a = evaluate(a, pair, signature, env)?;
            let b = evaluate(b, pair, signature, env)?;
            Ok(l.coimplication(a, b)?)
        }
        TermKind::F(inner) => Ok(pair.f_at(evaluate(inner, pair, signature, env)?)),
        TermKind::G(inner) => Ok(pair.g_at(evaluate(inner, pair, signature, env)?)),
    }
}

/// Free variables in first-occurrence order, left side first.
pub fn free_variables(id: &Identity) -> Vec<String> {
    let mut out = Vec::new();
    collect_vars(&id.lhs, &mut out);
    collect_vars(&id.rhs, &mut out);
    out
}

fn collect_vars(t: &Term, out: &mut Vec<String>) {
    match &t.kind {
        TermKind::Var(name) => {
            if !out.iter().any(|v| v == name) {
                out.push(name.clone());
            }
        }
        TermKind::Zero | TermKind::One => {}
        TermKind::Meet(a, b)
        | TermKind::Join(a, b)
        | TermKind::Imp(a, b)
        | TermKind::Coimp(a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
        TermKind::F(inner) | TermKind::G(inner) => collect_vars(inner, out),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Counterexample(Counterexample),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Variable name to carrier element name, in environment order.
    pub assignment: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binds: Vec<String> =
            self.assignment.iter().map(|(v, e)| format!("{v} := {e}")).collect();
        write!(f, "[{}] lhs = {}, rhs = {}", binds.join(", "), self.lhs, self.rhs)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("assignment space has {space} points, bound is {bound}")]
    AssignmentSpaceTooLarge { space: u128, bound: u64 },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Evaluates both sides under every assignment of carrier elements to the
/// free variables; stops at the first counterexample.
pub fn check_identity(
    id: &Identity,
    pair: &GaloisPair,
    signature: Signature,
) -> Result<Verdict, CheckError> {
    check_identity_bounded(id, pair, signature, DEFAULT_ASSIGNMENT_BOUND)
}

pub fn check_identity_bounded(
    id: &Identity,
    pair: &GaloisPair,
    signature: Signature,
    bound: u64,
) -> Result<Verdict, CheckError> {
    let l = pair.lattice();
    let vars = free_variables(id);
    let n = l.len() as u128;
    let space = n
        .checked_pow(vars.len() as u32)
        .unwrap_or(u128::MAX);
    if space > bound as u128 {
        return Err(CheckError::AssignmentSpaceTooLarge { space, bound });
    }

    let mut counters = vec![0usize; vars.len()];
    loop {
        let env: BTreeMap<String, usize> =
            vars.iter().cloned().zip(counters.iter().copied()).collect();
        let lhs = evaluate(&id.lhs, pair, signature, &env)?;
        let rhs = evaluate(&id.rhs, pair, signature, &env)?;
        if lhs != rhs {
            return Ok(Verdict::Counterexample(Counterexample {
                assignment: vars
                    .iter()
                    .zip(&counters)
                    .map(|(v, &e)| (v.clone(), l.name(e).to_string()))
                    .collect(),
                lhs: l.name(lhs).to_string(),
                rhs: l.name(rhs).to_string(),
            }));
        }
        // Mixed-radix increment over the assignment space.
        let mut i = 0;
        loop {
            if i == counters.len() {
                return Ok(Verdict::Valid);
            }
            counters[i] += 1;
            if counters[i] < l.len() {
                break;
            }
            counters[i] = 0;
            i += 1;
        }
    }
}
