//! Language signatures, terms, well-formed formulas, substitution, and the
//! concrete formula syntax.
//!
//! Grammar (ASCII):
//!
//! ```text
//! wff  := "forall" var "." wff | "exists" var "." wff
//!       | wff "&" wff | wff "|" wff | "~" wff
//!       | conn "(" wff ("," wff)* ")"
//!       | pred "(" term ("," term)* ")" | pred
//! term := var | fn "(" term* ")" | const
//! ```
//!
//! Precedence: `~` binds tighter than `&`, which binds tighter than `|`;
//! quantifier scope extends maximally to the right; parentheses override.
//! The infix tokens `&`, `|`, `~` are sugar for the first, second, and third
//! connectives of a type-(2,2,1) signature; other signatures are prefix-only.
//! `exists` is sugar for `~ forall ~` and needs a connective flagged as
//! negation. The printer always emits prefix form, so parse(print(w)) = w.

use std::collections::{BTreeMap, BTreeSet};

use crate::tvalgebra::{AlgType, AlgebraError};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("lex error at {pos}: {message}")]
    LexError { pos: usize, message: String },
    #[error("parse error at {pos}: {message}")]
    ParseError { pos: usize, message: String },
    #[error("unknown symbol `{name}` at {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("`{name}` at {pos} expects {expected} argument(s), got {got}")]
    ArityError {
        pos: usize,
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("name `{0}` collides with an existing symbol")]
    NameCollision(String),
    #[error("substitution target `{0}` is not a constant of the language")]
    NotAConstant(String),
    #[error("connective arities do not form a valid type: {0}")]
    BadConnectives(AlgebraError),
    #[error("negation connective `{0}` must be unary")]
    NegationNotUnary(String),
    #[error("`{0}` is not a declared connective")]
    NegationUnknown(String),
}

/// A first-order signature: predicates, functions, and an ordered connective
/// list aligned with an algebra type. The three name sets are disjoint. A
/// unary connective may be flagged as the negation used by the `exists`
/// sugar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Language {
    predicates: BTreeMap<String, usize>,
    functions: BTreeMap<String, usize>,
    connectives: Vec<(String, usize)>,
    negation: Option<usize>,
}

impl Language {
    pub fn new(
        predicates: &[(&str, usize)],
        functions: &[(&str, usize)],
        connectives: &[(&str, usize)],
        negation: Option<&str>,
    ) -> Result<Language, SyntaxError> {
        let mut seen = BTreeSet::new();
        let mut preds = BTreeMap::new();
        for &(name, arity) in predicates {
            if !seen.insert(name.to_string()) {
                return Err(SyntaxError::NameCollision(name.to_string()));
            }
            preds.insert(name.to_string(), arity);
        }
        let mut fns = BTreeMap::new();
        for &(name, arity) in functions {
            if !seen.insert(name.to_string()) {
                return Err(SyntaxError::NameCollision(name.to_string()));
            }
            fns.insert(name.to_string(), arity);
        }
        let mut conns = Vec::new();
        for &(name, arity) in connectives {
            if !seen.insert(name.to_string()) {
                return Err(SyntaxError::NameCollision(name.to_string()));
            }
            conns.push((name.to_string(), arity));
        }
        AlgType::new(conns.iter().map(|(_, a)| *a).collect())
            .map_err(SyntaxError::BadConnectives)?;
        let negation = match negation {
            None => None,
            Some(name) => {
                let idx = conns
                    .iter()
                    .position(|(n, _)| n == name)
                    .ok_or_else(|| SyntaxError::NegationUnknown(name.to_string()))?;
                if conns[idx].1 != 1 {
                    return Err(SyntaxError::NegationNotUnary(name.to_string()));
                }
                Some(idx)
            }
        };
        Ok(Language {
            predicates: preds,
            functions: fns,
            connectives: conns,
            negation,
        })
    }

    /// The classical-shape language: connectives and/or/not over the given
    /// predicates and functions, with `not` flagged as negation.
    pub fn with_standard_connectives(
        predicates: &[(&str, usize)],
        functions: &[(&str, usize)],
    ) -> Result<Language, SyntaxError> {
        Language::new(
            predicates,
            functions,
            &[("and", 2), ("or", 2), ("not", 1)],
            Some("not"),
        )
    }

    pub fn predicates(&self) -> &BTreeMap<String, usize> {
        &self.predicates
    }

    pub fn functions(&self) -> &BTreeMap<String, usize> {
        &self.functions
    }

    pub fn connectives(&self) -> &[(String, usize)] {
        &self.connectives
    }

    pub fn negation_index(&self) -> Option<usize> {
        self.negation
    }

    pub fn connective_index(&self, name: &str) -> Option<usize> {
        self.connectives.iter().position(|(n, _)| n == name)
    }

    pub fn alg_type(&self) -> AlgType {
        AlgType::new(self.connectives.iter().map(|(_, a)| *a).collect())
            .expect("validated at construction")
    }

    pub fn is_declared(&self, name: &str) -> bool {
        self.predicates.contains_key(name)
            || self.functions.contains_key(name)
            || self.connectives.iter().any(|(n, _)| n == name)
    }

    /// Adds each name as an arity-0 function; every formula of the base
    /// language stays well-formed in the extension.
    pub fn extend_with_constants(&self, names: &[&str]) -> Result<Language, SyntaxError> {
        let mut ext = self.clone();
        for &name in names {
            if ext.is_declared(name) {
                return Err(SyntaxError::NameCollision(name.to_string()));
            }
            ext.functions.insert(name.to_string(), 0);
        }
        Ok(ext)
    }

    /// Structural well-formedness of a formula against this language.
    pub fn check_wff(&self, wff: &Wff) -> Result<(), SyntaxError> {
        match wff {
            Wff::Atom(p, args) => {
                let arity = *self
                    .predicates
                    .get(p)
                    .ok_or_else(|| SyntaxError::UnknownSymbol {
                        pos: 0,
                        name: p.clone(),
                    })?;
                if args.len() != arity {
                    return Err(SyntaxError::ArityError {
                        pos: 0,
                        name: p.clone(),
                        expected: arity,
                        got: args.len(),
                    });
                }
                args.iter().try_for_each(|t| self.check_term(t))
            }
            Wff::Conn(c, args) => {
                let idx = self
                    .connective_index(c)
                    .ok_or_else(|| SyntaxError::UnknownSymbol {
                        pos: 0,
                        name: c.clone(),
                    })?;
                let arity = self.connectives[idx].1;
                if args.len() != arity {
                    return Err(SyntaxError::ArityError {
                        pos: 0,
                        name: c.clone(),
                        expected: arity,
                        got: args.len(),
                    });
                }
                args.iter().try_for_each(|w| self.check_wff(w))
            }
            Wff::Forall(v, body) => {
                if self.is_declared(v) {
                    return Err(SyntaxError::NameCollision(v.clone()));
                }
                self.check_wff(body)
            }
        }
    }

    pub fn check_term(&self, term: &Term) -> Result<(), SyntaxError> {
        match term {
            Term::Var(v) => {
                if self.is_declared(v) {
                    Err(SyntaxError::NameCollision(v.clone()))
                } else {
                    Ok(())
                }
            }
            Term::App(f, args) => {
                let arity = *self
                    .functions
                    .get(f)
                    .ok_or_else(|| SyntaxError::UnknownSymbol {
                        pos: 0,
                        name: f.clone(),
                    })?;
                if args.len() != arity {
                    return Err(SyntaxError::ArityError {
                        pos: 0,
                        name: f.clone(),
                        expected: arity,
                        got: args.len(),
                    });
                }
                args.iter().try_for_each(|t| self.check_term(t))
            }
        }
    }
}

/// A term: a variable or a function application (constants are arity-0
/// applications).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn constant(name: &str) -> Term {
        Term::App(name.to_string(), vec![])
    }

    fn vars_into(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|t| t.vars_into(out)),
        }
    }
}

/// A well-formed formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wff {
    Atom(String, Vec<Term>),
    Conn(String, Vec<Wff>),
    Forall(String, Box<Wff>),
}

impl Wff {
    pub fn atom(pred: &str, args: Vec<Term>) -> Wff {
        Wff::Atom(pred.to_string(), args)
    }

    pub fn conn(name: &str, args: Vec<Wff>) -> Wff {
        Wff::Conn(name.to_string(), args)
    }

    pub fn forall(var: &str, body: Wff) -> Wff {
        Wff::Forall(var.to_string(), Box::new(body))
    }
}

/// Exactly the variables with a free occurrence.
pub fn free_vars(wff: &Wff) -> BTreeSet<String> {
    fn go(wff: &Wff, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match wff {
            Wff::Atom(_, args) => {
                let mut vars = BTreeSet::new();
                for t in args {
                    t.vars_into(&mut vars);
                }
                for v in vars {
                    if !bound.contains(&v) {
                        out.insert(v);
                    }
                }
            }
            Wff::Conn(_, args) => args.iter().for_each(|w| go(w, bound, out)),
            Wff::Forall(v, body) => {
                bound.push(v.clone());
                go(body, bound, out);
                bound.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(wff, &mut Vec::new(), &mut out);
    out
}

pub fn is_sentence(wff: &Wff) -> bool {
    free_vars(wff).is_empty()
}

/// Replaces free occurrences of the bound variables with constants; bound
/// occurrences are untouched. Every binding target must be an arity-0
/// function of the (extended) language, so capture is impossible.
pub fn substitute(
    lang: &Language,
    wff: &Wff,
    bindings: &BTreeMap<String, String>,
) -> Result<Wff, SyntaxError> {
    for target in bindings.values() {
        if lang.functions.get(target) != Some(&0) {
            return Err(SyntaxError::NotAConstant(target.clone()));
        }
    }
    fn term(t: &Term, bindings: &BTreeMap<String, String>, shadowed: &[String]) -> Term {
        match t {
            Term::Var(v) => {
                if !shadowed.contains(v) {
                    if let Some(c) = bindings.get(v) {
                        return Term::constant(c);
                    }
                }
                t.clone()
            }
            Term::App(f, args) => Term::App(
                f.clone(),
                args.iter().map(|a| term(a, bindings, shadowed)).collect(),
            ),
        }
    }
    fn go(wff: &Wff, bindings: &BTreeMap<String, String>, shadowed: &mut Vec<String>) -> Wff {
        match wff {
            Wff::Atom(p, args) => Wff::Atom(
                p.clone(),
                args.iter().map(|t| term(t, bindings, shadowed)).collect(),
            ),
            Wff::Conn(c, args) => Wff::Conn(
                c.clone(),
                args.iter().map(|w| go(w, bindings, shadowed)).collect(),
            ),
            Wff::Forall(v, body) => {
                shadowed.push(v.clone());
                let inner = go(body, bindings, shadowed);
                shadowed.pop();
                Wff::Forall(v.clone(), Box::new(inner))
            }
        }
    }
    Ok(go(wff, bindings, &mut Vec::new()))
}

/// Structural equality modulo renaming of bound variables.
pub fn alpha_eq(a: &Wff, b: &Wff) -> bool {
    fn term_eq(a: &Term, b: &Term, stack: &[(String, String)]) -> bool {
        match (a, b) {
            (Term::Var(x), Term::Var(y)) => {
                for (l, r) in stack.iter().rev() {
                    if l == x || r == y {
                        return l == x && r == y;
                    }
                }
                x == y
            }
            (Term::App(f, xs), Term::App(g, ys)) => {
                f == g
                    && xs.len() == ys.len()
                    && xs.iter().zip(ys).all(|(x, y)| term_eq(x, y, stack))
            }
            _ => false,
        }
    }
    fn go(a: &Wff, b: &Wff, stack: &mut Vec<(String, String)>) -> bool {
        match (a, b) {
            (Wff::Atom(p, xs), Wff::Atom(q, ys)) => {
                p == q
                    && xs.len() == ys.len()
                    && xs.iter().zip(ys).all(|(x, y)| term_eq(x, y, stack))
            }
            (Wff::Conn(c, xs), Wff::Conn(d, ys)) => {
                c == d && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| go(x, y, stack))
            }
            (Wff::Forall(x, bx), Wff::Forall(y, by)) => {
                stack.push((x.clone(), y.clone()));
                let r = go(bx, by, stack);
                stack.pop();
                r
            }
            _ => false,
        }
    }
    go(a, b, &mut Vec::new())
}

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Amp,
    Pipe,
    Tilde,
    LParen,
    RParen,
    Comma,
    Dot,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '&' => {
                toks.push(Spanned {
                    tok: Tok::Amp,
                    pos: i,
                });
                i += 1;
            }
            '|' => {
                toks.push(Spanned {
                    tok: Tok::Pipe,
                    pos: i,
                });
                i += 1;
            }
            '~' => {
                toks.push(Spanned {
                    tok: Tok::Tilde,
                    pos: i,
                });
                i += 1;
            }
            '(' => {
                toks.push(Spanned {
                    tok: Tok::LParen,
                    pos: i,
                });
                i += 1;
            }
            ')' => {
                toks.push(Spanned {
                    tok: Tok::RParen,
                    pos: i,
                });
                i += 1;
            }
            ',' => {
                toks.push(Spanned {
                    tok: Tok::Comma,
                    pos: i,
                });
                i += 1;
            }
            '.' => {
                toks.push(Spanned {
                    tok: Tok::Dot,
                    pos: i,
                });
                i += 1;
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                toks.push(Spanned {
                    tok: Tok::Ident(text[start..i].to_string()),
                    pos: start,
                });
            }
            other => {
                return Err(SyntaxError::LexError {
                    pos: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    lang: &'a Language,
    toks: Vec<Spanned>,
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.at)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |s| s.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.at).cloned();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), SyntaxError> {
        match self.peek() {
            Some(s) if s.tok == tok => {
                self.at += 1;
                Ok(())
            }
            _ => Err(SyntaxError::ParseError {
                pos: self.pos(),
                message: format!("expected {what}"),
            }),
        }
    }

    fn infix_connective(
        &self,
        slot: usize,
        pos: usize,
        sugar: &str,
    ) -> Result<String, SyntaxError> {
        let arities: Vec<usize> = self.lang.connectives.iter().map(|(_, a)| *a).collect();
        if arities != [2, 2, 1] {
            return Err(SyntaxError::ParseError {
                pos,
                message: format!("infix `{sugar}` needs a (2,2,1) connective signature"),
            });
        }
        Ok(self.lang.connectives[slot].0.clone())
    }

    /// wff := quantified | disjunction
    fn wff(&mut self) -> Result<Wff, SyntaxError> {
        if let Some(Spanned {
            tok: Tok::Ident(kw),
            pos,
        }) = self.peek().cloned()
        {
            if kw == "forall" || kw == "exists" {
                self.at += 1;
                return self.quantified(&kw, pos);
            }
        }
        self.disjunction()
    }

    fn quantified(&mut self, kw: &str, kw_pos: usize) -> Result<Wff, SyntaxError> {
        let var = match self.bump() {
            Some(Spanned {
                tok: Tok::Ident(v),
                pos,
            }) => {
                if self.lang.is_declared(&v) || v == "forall" || v == "exists" {
                    return Err(SyntaxError::ParseError {
                        pos,
                        message: format!("`{v}` cannot be used as a bound variable"),
                    });
                }
                v
            }
            _ => {
                return Err(SyntaxError::ParseError {
                    pos: self.pos(),
                    message: "expected a variable after the quantifier".into(),
                })
            }
        };
        self.expect(Tok::Dot, "`.` after the quantified variable")?;
        let body = self.wff()?;
        if kw == "forall" {
            return Ok(Wff::forall(&var, body));
        }
        // exists x. phi  ==>  ~ forall x. ~ phi
        let neg = self
            .lang
            .negation
            .map(|i| self.lang.connectives[i].0.clone())
            .ok_or_else(|| SyntaxError::ParseError {
                pos: kw_pos,
                message: "`exists` needs a connective flagged as negation".into(),
            })?;
        let inner = Wff::conn(&neg, vec![body]);
        Ok(Wff::conn(&neg, vec![Wff::forall(&var, inner)]))
    }

    /// disjunction := conjunction ('|' conjunction)*
    fn disjunction(&mut self) -> Result<Wff, SyntaxError> {
        let mut acc = self.conjunction()?;
        while let Some(Spanned {
            tok: Tok::Pipe,
            pos,
        }) = self.peek().cloned()
        {
            self.at += 1;
            let name = self.infix_connective(1, pos, "|")?;
            let rhs = self.conjunction()?;
            acc = Wff::conn(&name, vec![acc, rhs]);
        }
        Ok(acc)
    }

    /// conjunction := negation ('&' negation)*
    fn conjunction(&mut self) -> Result<Wff, SyntaxError> {
        let mut acc = self.negation()?;
        while let Some(Spanned { tok: Tok::Amp, pos }) = self.peek().cloned() {
            self.at += 1;
            let name = self.infix_connective(0, pos, "&")?;
            let rhs = self.negation()?;
            acc = Wff::conn(&name, vec![acc, rhs]);
        }
        Ok(acc)
    }

    /// negation := '~' negation | primary; a quantifier may follow `~`
    fn negation(&mut self) -> Result<Wff, SyntaxError> {
        if let Some(Spanned {
            tok: Tok::Tilde,
            pos,
        }) = self.peek().cloned()
        {
            self.at += 1;
            let name = self.infix_connective(2, pos, "~")?;
            let arg = if matches!(self.peek(), Some(Spanned { tok: Tok::Ident(kw), .. }) if kw == "forall" || kw == "exists")
            {
                self.wff()?
            } else {
                self.negation()?
            };
            return Ok(Wff::conn(&name, vec![arg]));
        }
        self.primary()
    }

    /// primary := '(' wff ')' | name [ '(' ... ')' ]
    fn primary(&mut self) -> Result<Wff, SyntaxError> {
        match self.bump() {
            Some(Spanned {
                tok: Tok::LParen, ..
            }) => {
                let inner = self.wff()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Spanned {
                tok: Tok::Ident(name),
                pos,
            }) => {
                if name == "forall" || name == "exists" {
                    self.at -= 1;
                    return self.wff();
                }
                self.callable(name, pos)
            }
            _ => Err(SyntaxError::ParseError {
                pos: self.pos(),
                message: "expected a formula".into(),
            }),
        }
    }

    fn callable(&mut self, name: String, pos: usize) -> Result<Wff, SyntaxError> {
        let has_args = matches!(
            self.peek(),
            Some(Spanned {
                tok: Tok::LParen,
                ..
            })
        );
        if let Some(&arity) = self.lang.predicates.get(&name) {
            let args = if has_args {
                self.term_args()?
            } else {
                Vec::new()
            };
            if args.len() != arity {
                return Err(SyntaxError::ArityError {
                    pos,
                    name,
                    expected: arity,
                    got: args.len(),
                });
            }
            return Ok(Wff::Atom(name, args));
        }
        if let Some(idx) = self.lang.connective_index(&name) {
            let arity = self.lang.connectives[idx].1;
            let args = if has_args {
                self.wff_args()?
            } else {
                Vec::new()
            };
            if args.len() != arity {
                return Err(SyntaxError::ArityError {
                    pos,
                    name,
                    expected: arity,
                    got: args.len(),
                });
            }
            return Ok(Wff::Conn(name, args));
        }
        Err(SyntaxError::UnknownSymbol { pos, name })
    }

    fn wff_args(&mut self) -> Result<Vec<Wff>, SyntaxError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        if matches!(
            self.peek(),
            Some(Spanned {
                tok: Tok::RParen,
                ..
            })
        ) {
            self.at += 1;
            return Ok(args);
        }
        loop {
            args.push(self.wff()?);
            match self.bump() {
                Some(Spanned {
                    tok: Tok::Comma, ..
                }) => continue,
                Some(Spanned {
                    tok: Tok::RParen, ..
                }) => break,
                _ => {
                    return Err(SyntaxError::ParseError {
                        pos: self.pos(),
                        message: "expected `,` or `)`".into(),
                    })
                }
            }
        }
        Ok(args)
    }

    fn term_args(&mut self) -> Result<Vec<Term>, SyntaxError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        if matches!(
            self.peek(),
            Some(Spanned {
                tok: Tok::RParen,
                ..
            })
        ) {
            self.at += 1;
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            match self.bump() {
                Some(Spanned {
                    tok: Tok::Comma, ..
                }) => continue,
                Some(Spanned {
                    tok: Tok::RParen, ..
                }) => break,
                _ => {
                    return Err(SyntaxError::ParseError {
                        pos: self.pos(),
                        message: "expected `,` or `)`".into(),
                    })
                }
            }
        }
        Ok(args)
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        match self.bump() {
            Some(Spanned {
                tok: Tok::Ident(name),
                pos,
            }) => {
                let has_args = matches!(
                    self.peek(),
                    Some(Spanned {
                        tok: Tok::LParen,
                        ..
                    })
                );
                if let Some(&arity) = self.lang.functions.get(&name) {
                    let args = if has_args {
                        self.term_args()?
                    } else {
                        Vec::new()
                    };
                    if args.len() != arity {
                        return Err(SyntaxError::ArityError {
                            pos,
                            name,
                            expected: arity,
                            got: args.len(),
                        });
                    }
                    return Ok(Term::App(name, args));
                }
                if self.lang.is_declared(&name) {
                    return Err(SyntaxError::UnknownSymbol { pos, name });
                }
                if has_args {
                    return Err(SyntaxError::UnknownSymbol { pos, name });
                }
                Ok(Term::Var(name))
            }
            _ => Err(SyntaxError::ParseError {
                pos: self.pos(),
                message: "expected a term".into(),
            }),
        }
    }
}

/// Parses a formula against the language; see the module grammar.
pub fn parse_wff(lang: &Language, text: &str) -> Result<Wff, SyntaxError> {
    let toks = lex(text)?;
    let mut p = Parser {
        lang,
        toks,
        at: 0,
        end: text.len(),
    };
    let wff = p.wff()?;
    if p.at != p.toks.len() {
        return Err(SyntaxError::ParseError {
            pos: p.pos(),
            message: "trailing input after formula".into(),
        });
    }
    Ok(wff)
}

pub fn print_term(t: &Term) -> String {
    match t {
        Term::Var(v) => v.clone(),
        Term::App(f, args) if args.is_empty() => f.clone(),
        Term::App(f, args) => {
            let inner: Vec<String> = args.iter().map(print_term).collect();
            format!("{f}({})", inner.join(", "))
        }
    }
}

/// Canonical prefix form; `parse_wff(print_wff(w))` is structurally `w`.
pub fn print_wff(w: &Wff) -> String {
    match w {
        Wff::Atom(p, args) if args.is_empty() => p.clone(),
        Wff::Atom(p, args) => {
            let inner: Vec<String> = args.iter().map(print_term).collect();
            format!("{p}({})", inner.join(", "))
        }
        Wff::Conn(c, args) => {
            let inner: Vec<String> = args.iter().map(print_wff).collect();
            format!("{c}({})", inner.join(", "))
        }
        Wff::Forall(v, body) => format!("forall {v}. {}", print_wff(body)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lang() -> Language {
        Language::with_standard_connectives(&[("P", 1), ("Q", 1), ("R", 2)], &[("f", 1), ("c", 0)])
            .unwrap()
    }

    #[test]
    fn parses_quantifier() {
        let w = parse_wff(&lang(), "forall x. P(x)").unwrap();
        assert_eq!(
            w,
            Wff::forall("x", Wff::atom("P", vec![Term::Var("x".into())]))
        );
    }

    #[test]
    fn parses_infix_with_precedence() {
        let w = parse_wff(&lang(), "P(f(c)) & ~Q(c)").unwrap();
        assert_eq!(
            w,
            Wff::conn(
                "and",
                vec![
                    Wff::atom("P", vec![Term::App("f".into(), vec![Term::constant("c")])]),
                    Wff::conn("not", vec![Wff::atom("Q", vec![Term::constant("c")])]),
                ]
            )
        );
        // ~ > & > |
        let w = parse_wff(&lang(), "P(c) | Q(c) & ~P(c)").unwrap();
        assert_eq!(
            w,
            Wff::conn(
                "or",
                vec![
                    Wff::atom("P", vec![Term::constant("c")]),
                    Wff::conn(
                        "and",
                        vec![
                            Wff::atom("Q", vec![Term::constant("c")]),
                            Wff::conn("not", vec![Wff::atom("P", vec![Term::constant("c")])]),
                        ]
                    ),
                ]
            )
        );
    }

    #[test]
    fn quantifier_scope_extends_right() {
        let w = parse_wff(&lang(), "forall x. P(x) & Q(x)").unwrap();
        let Wff::Forall(_, body) = w else {
            panic!("expected forall")
        };
        assert!(matches!(*body, Wff::Conn(ref c, _) if c == "and"));
    }

    #[test]
    fn prefix_call_syntax() {
        let w = parse_wff(&lang(), "and(P(c), or(Q(c), P(c)))").unwrap();
        assert!(matches!(w, Wff::Conn(ref c, _) if c == "and"));
    }

    #[test]
    fn arity_and_unknown_errors() {
        assert!(matches!(
            parse_wff(&lang(), "P(x, y)"),
            Err(SyntaxError::ArityError { name, expected: 1, got: 2, .. }) if name == "P"
        ));
        assert!(matches!(
            parse_wff(&lang(), "S(x)"),
            Err(SyntaxError::UnknownSymbol { name, .. }) if name == "S"
        ));
        assert!(matches!(
            parse_wff(&lang(), "P(x) @"),
            Err(SyntaxError::LexError { .. })
        ));
    }

    #[test]
    fn exists_expands_through_negation() {
        let w = parse_wff(&lang(), "exists x. P(x)").unwrap();
        let expected = Wff::conn(
            "not",
            vec![Wff::forall(
                "x",
                Wff::conn("not", vec![Wff::atom("P", vec![Term::Var("x".into())])]),
            )],
        );
        assert_eq!(w, expected);

        let no_neg =
            Language::new(&[("P", 1)], &[], &[("and", 2), ("or", 2), ("not", 1)], None).unwrap();
        assert!(matches!(
            parse_wff(&no_neg, "exists x. P(x)"),
            Err(SyntaxError::ParseError { .. })
        ));
    }

    #[test]
    fn infix_requires_lattice_signature() {
        let other = Language::new(&[("P", 0)], &[], &[("box", 1)], None).unwrap();
        assert!(parse_wff(&other, "box(P)").is_ok());
        assert!(matches!(
            parse_wff(&other, "P & P"),
            Err(SyntaxError::ParseError { .. })
        ));
    }

    #[test]
    fn free_vars_examples() {
        let l = lang();
        assert!(free_vars(&parse_wff(&l, "forall x. P(x)").unwrap()).is_empty());
        let w = parse_wff(&l, "P(x) & forall x. Q(x)").unwrap();
        assert_eq!(free_vars(&w).into_iter().collect::<Vec<_>>(), vec!["x"]);
        let w = parse_wff(&l, "R(x, y)").unwrap();
        assert_eq!(
            free_vars(&w).into_iter().collect::<Vec<_>>(),
            vec!["x", "y"]
        );
    }

    #[test]
    fn substitute_examples() {
        let l = lang().extend_with_constants(&["m"]).unwrap();
        let bind = |v: &str, c: &str| BTreeMap::from([(v.to_string(), c.to_string())]);

        let w = parse_wff(&l, "P(x)").unwrap();
        assert_eq!(
            substitute(&l, &w, &bind("x", "m")).unwrap(),
            parse_wff(&l, "P(m)").unwrap()
        );

        let w = parse_wff(&l, "forall x. P(x)").unwrap();
        assert_eq!(substitute(&l, &w, &bind("x", "m")).unwrap(), w);

        let w = parse_wff(&l, "P(x) & forall x. Q(x)").unwrap();
        assert_eq!(
            substitute(&l, &w, &bind("x", "m")).unwrap(),
            parse_wff(&l, "P(m) & forall x. Q(x)").unwrap()
        );

        assert!(matches!(
            substitute(&l, &w, &bind("x", "f")),
            Err(SyntaxError::NotAConstant(_))
        ));

        // full bindings close the formula
        let w = parse_wff(&l, "R(x, y)").unwrap();
        let mut b = bind("x", "m");
        b.insert("y".into(), "m".into());
        assert!(is_sentence(&substitute(&l, &w, &b).unwrap()));
    }

    #[test]
    fn sentence_examples() {
        let l = lang();
        assert!(is_sentence(&parse_wff(&l, "forall x. P(x)").unwrap()));
        assert!(!is_sentence(&parse_wff(&l, "P(x)").unwrap()));
        assert!(is_sentence(&parse_wff(&l, "P(c)").unwrap()));
    }

    #[test]
    fn extension_examples() {
        let l = lang();
        let ext = l.extend_with_constants(&["m1", "m2"]).unwrap();
        assert!(parse_wff(&ext, "P(m1) & Q(m2)").is_ok());
        assert_eq!(l.extend_with_constants(&[]).unwrap(), l);
        assert!(matches!(
            l.extend_with_constants(&["P"]),
            Err(SyntaxError::NameCollision(_))
        ));
    }

    #[test]
    fn extension_is_monotone_for_parsing() {
        let l = lang();
        let ext = l.extend_with_constants(&["m1"]).unwrap();
        for text in ["forall x. P(x)", "P(c) | ~Q(c)", "R(x, f(c))"] {
            assert_eq!(parse_wff(&l, text).unwrap(), parse_wff(&ext, text).unwrap());
        }
    }

    #[test]
    fn alpha_equality() {
        let l = lang();
        let a = parse_wff(&l, "forall x. P(x)").unwrap();
        let b = parse_wff(&l, "forall y. P(y)").unwrap();
        assert!(alpha_eq(&a, &b));
        assert_ne!(a, b);
        let c = parse_wff(&l, "forall x. Q(x)").unwrap();
        assert!(!alpha_eq(&a, &c));
        // free variables must match on the nose
        let d = parse_wff(&l, "P(x)").unwrap();
        let e = parse_wff(&l, "P(y)").unwrap();
        assert!(!alpha_eq(&d, &e));
    }

    // random well-formed formulas over the test language
    fn arb_term() -> impl Strategy<Value = Term> {
        prop_oneof![
            Just(Term::Var("x".into())),
            Just(Term::Var("y".into())),
            Just(Term::constant("c")),
            Just(Term::App("f".into(), vec![Term::constant("c")])),
            Just(Term::App("f".into(), vec![Term::Var("x".into())])),
        ]
    }

    fn arb_wff() -> impl Strategy<Value = Wff> {
        let leaf = prop_oneof![
            arb_term().prop_map(|t| Wff::Atom("P".into(), vec![t])),
            arb_term().prop_map(|t| Wff::Atom("Q".into(), vec![t])),
            (arb_term(), arb_term()).prop_map(|(s, t)| Wff::Atom("R".into(), vec![s, t])),
        ];
        leaf.prop_recursive(4, 32, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Wff::conn("and", vec![a, b])),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Wff::conn("or", vec![a, b])),
                inner.clone().prop_map(|a| Wff::conn("not", vec![a])),
                inner.clone().prop_map(|a| Wff::forall("x", a)),
                inner.prop_map(|a| Wff::forall("y", a)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(w in arb_wff()) {
            let l = lang();
            let text = print_wff(&w);
            let back = parse_wff(&l, &text).unwrap();
            prop_assert_eq!(back, w);
        }

        #[test]
        fn full_substitution_closes(w in arb_wff()) {
            let l = lang().extend_with_constants(&["m"]).unwrap();
            let bindings: BTreeMap<String, String> =
                free_vars(&w).into_iter().map(|v| (v, "m".to_string())).collect();
            let closed = substitute(&l, &w, &bindings).unwrap();
            prop_assert!(free_vars(&closed).is_empty());
        }
    }
}
