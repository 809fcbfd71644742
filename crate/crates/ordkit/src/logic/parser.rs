//! Recursive-descent parser for the internal language.
//!
//! Parsing happens in two passes: a raw tree with source positions, then
//! elaboration against a signature and context. When no context is
//! given, variable sorts are inferred by propagating the concrete sorts
//! occurring in operation and predicate positions through comparison
//! atoms; variables enter the context in first-occurrence order.

use super::{Context, Formula, Sequent, Signature, Term};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Top,
    Bot,
    Exists,
    And,
    Or,
    Turnstile,
    Eq,
    Le,
    LParen,
    RParen,
    Dot,
    Colon,
    Comma,
    Eof,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Top => write!(f, "top"),
            Tok::Bot => write!(f, "bot"),
            Tok::Exists => write!(f, "exists"),
            Tok::And => write!(f, "/\\"),
            Tok::Or => write!(f, "\\/"),
            Tok::Turnstile => write!(f, "|-"),
            Tok::Eq => write!(f, "="),
            Tok::Le => write!(f, "<="),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::Dot => write!(f, "."),
            Tok::Colon => write!(f, ":"),
            Tok::Comma => write!(f, ","),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

fn syntax_error(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        col: pos.col,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let pos = Pos { line, col };
        let c = chars[i];
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i, &mut col),
            '(' => {
                out.push((Tok::LParen, pos));
                advance(1, &mut i, &mut col);
            }
            ')' => {
                out.push((Tok::RParen, pos));
                advance(1, &mut i, &mut col);
            }
            '.' => {
                out.push((Tok::Dot, pos));
                advance(1, &mut i, &mut col);
            }
            ':' => {
                out.push((Tok::Colon, pos));
                advance(1, &mut i, &mut col);
            }
            ',' => {
                out.push((Tok::Comma, pos));
                advance(1, &mut i, &mut col);
            }
            '=' => {
                out.push((Tok::Eq, pos));
                advance(1, &mut i, &mut col);
            }
            '<' if chars.get(i + 1) == Some(&'=') => {
                out.push((Tok::Le, pos));
                advance(2, &mut i, &mut col);
            }
            '/' if chars.get(i + 1) == Some(&'\\') => {
                out.push((Tok::And, pos));
                advance(2, &mut i, &mut col);
            }
            '\\' if chars.get(i + 1) == Some(&'/') => {
                out.push((Tok::Or, pos));
                advance(2, &mut i, &mut col);
            }
            '|' if chars.get(i + 1) == Some(&'-') => {
                out.push((Tok::Turnstile, pos));
                advance(2, &mut i, &mut col);
            }
            c if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                    col += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = match word.as_str() {
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    "exists" => Tok::Exists,
                    _ => Tok::Ident(word),
                };
                out.push((tok, pos));
            }
            other => return Err(syntax_error(pos, format!("unexpected character {other:?}"))),
        }
    }
    out.push((
        Tok::Eof,
        Pos {
            line,
            col,
        },
    ));
    Ok(out)
}

// ---------------------------------------------------------------------
// Raw trees
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
enum RawTerm {
    Name(String, Pos),
    App(String, Vec<RawTerm>, Pos),
}

impl RawTerm {
    fn pos(&self) -> Pos {
        match self {
            RawTerm::Name(_, p) | RawTerm::App(_, _, p) => *p,
        }
    }
}

#[derive(Debug, Clone)]
enum RawFormula {
    Top,
    Bot,
    And(Box<RawFormula>, Box<RawFormula>),
    Or(Box<RawFormula>, Box<RawFormula>),
    Eq(RawTerm, RawTerm),
    Le(RawTerm, RawTerm),
    Atom(RawTerm),
    Exists(String, String, Box<RawFormula>, Pos),
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

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos> {
        let (t, p) = self.next();
        if t != tok {
            return Err(syntax_error(p, format!("expected {tok}, found {t}")));
        }
        Ok(p)
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        let (t, p) = self.next();
        match t {
            Tok::Ident(s) => Ok((s, p)),
            other => Err(syntax_error(p, format!("expected an identifier, found {other}"))),
        }
    }

    fn formula(&mut self) -> Result<RawFormula> {
        let mut lhs = self.disjunct()?;
        while *self.peek() == Tok::Or {
            self.next();
            let rhs = self.disjunct()?;
            lhs = RawFormula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn disjunct(&mut self) -> Result<RawFormula> {
        let mut lhs = self.conjunct()?;
        while *self.peek() == Tok::And {
            self.next();
            let rhs = self.conjunct()?;
            lhs = RawFormula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn conjunct(&mut self) -> Result<RawFormula> {
        match self.peek().clone() {
            Tok::Top => {
                self.next();
                Ok(RawFormula::Top)
            }
            Tok::Bot => {
                self.next();
                Ok(RawFormula::Bot)
            }
            Tok::Exists => {
                let (_, pos) = self.next();
                let (var, _) = self.ident()?;
                self.expect(Tok::Colon)?;
                let (sort, _) = self.ident()?;
                self.expect(Tok::Dot)?;
                // The body extends as far right as possible.
                let body = self.formula()?;
                Ok(RawFormula::Exists(var, sort, Box::new(body), pos))
            }
            Tok::LParen => {
                self.next();
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => {
                let t1 = self.term()?;
                match self.peek() {
                    Tok::Eq => {
                        self.next();
                        let t2 = self.term()?;
                        Ok(RawFormula::Eq(t1, t2))
                    }
                    Tok::Le => {
                        self.next();
                        let t2 = self.term()?;
                        Ok(RawFormula::Le(t1, t2))
                    }
                    // A bare application is a predicate atom.
                    _ => Ok(RawFormula::Atom(t1)),
                }
            }
        }
    }

    fn term(&mut self) -> Result<RawTerm> {
        let (name, pos) = self.ident()?;
        if *self.peek() == Tok::LParen {
            self.next();
            let mut args = Vec::new();
            if *self.peek() != Tok::RParen {
                loop {
                    args.push(self.term()?);
                    if *self.peek() == Tok::Comma {
                        self.next();
                    } else {
                        break;
                    }
                }
            }
            self.expect(Tok::RParen)?;
            Ok(RawTerm::App(name, args, pos))
        } else {
            Ok(RawTerm::Name(name, pos))
        }
    }
}

// ---------------------------------------------------------------------
// Sort inference
// ---------------------------------------------------------------------

#[derive(Default)]
struct Inference {
    /// Free variables in first-occurrence order, with a union-find group.
    vars: Vec<(String, usize)>,
    /// Union-find parents over groups.
    parent: Vec<usize>,
    /// Concrete sort per group root, once known.
    sort: Vec<Option<usize>>,
}

impl Inference {
    fn group_of(&mut self, name: &str) -> usize {
        if let Some(k) = self.vars.iter().position(|(n, _)| n == name) {
            return self.vars[k].1;
        }
        let g = self.parent.len();
        self.parent.push(g);
        self.sort.push(None);
        self.vars.push((name.to_string(), g));
        g
    }

    fn root(&mut self, g: usize) -> usize {
        if self.parent[g] == g {
            g
        } else {
            let r = self.root(self.parent[g]);
            self.parent[g] = r;
            r
        }
    }

    fn assign(&mut self, g: usize, sort: usize, sig: &Signature) -> Result<()> {
        let r = self.root(g);
        match self.sort[r] {
            None => {
                self.sort[r] = Some(sort);
                Ok(())
            }
            Some(existing) if existing == sort => Ok(()),
            Some(existing) => Err(Error::SortMismatch(format!(
                "a variable is used both at sort {} and at sort {}",
                sig.sort_name(existing),
                sig.sort_name(sort)
            ))),
        }
    }

    fn union(&mut self, a: usize, b: usize, sig: &Signature) -> Result<()> {
        let (ra, rb) = (self.root(a), self.root(b));
        if ra == rb {
            return Ok(());
        }
        match (self.sort[ra], self.sort[rb]) {
            (Some(x), Some(y)) if x != y => {
                return Err(Error::SortMismatch(format!(
                    "comparison links sort {} with sort {}",
                    sig.sort_name(x),
                    sig.sort_name(y)
                )))
            }
            (Some(x), _) | (_, Some(x)) => {
                self.parent[rb] = ra;
                self.sort[ra] = Some(x);
            }
            (None, None) => self.parent[rb] = ra,
        }
        Ok(())
    }
}

/// Is this name a free variable occurrence (not a constant/operation)?
fn free_var<'a>(sig: &Signature, bound: &[(String, usize)], name: &'a str) -> Option<&'a str> {
    if bound.iter().any(|(n, _)| n == name) || sig.operation_index(name).is_some() {
        None
    } else {
        Some(name)
    }
}

fn term_sort_hint(
    sig: &Signature,
    bound: &[(String, usize)],
    term: &RawTerm,
    inf: &mut Inference,
) -> Result<Option<usize>> {
    match term {
        RawTerm::Name(name, _) => {
            if let Some((_, s)) = bound.iter().rev().find(|(n, _)| n == name) {
                return Ok(Some(*s));
            }
            if let Some(op) = sig.operation_index(name) {
                let decl = sig.operation(op);
                if decl.arg_sorts.is_empty() {
                    return Ok(Some(decl.result_sort));
                }
            }
            let _ = inf.group_of(name);
            Ok(None)
        }
        RawTerm::App(name, args, pos) => {
            let op = sig.operation_index(name).ok_or_else(|| Error::UnknownSymbol {
                name: name.clone(),
                line: pos.line,
                col: pos.col,
            })?;
            let decl = sig.operation(op);
            if decl.arg_sorts.len() != args.len() {
                return Err(Error::SortMismatch(format!(
                    "operation {name:?} expects {} arguments, got {}",
                    decl.arg_sorts.len(),
                    args.len()
                )));
            }
            let arg_sorts = decl.arg_sorts.clone();
            let result = decl.result_sort;
            for (arg, &sort) in args.iter().zip(&arg_sorts) {
                constrain_term(sig, bound, arg, sort, inf)?;
            }
            Ok(Some(result))
        }
    }
}

fn constrain_term(
    sig: &Signature,
    bound: &[(String, usize)],
    term: &RawTerm,
    sort: usize,
    inf: &mut Inference,
) -> Result<()> {
    if let RawTerm::Name(name, _) = term {
        if let Some(v) = free_var(sig, bound, name) {
            let g = inf.group_of(v);
            return inf.assign(g, sort, sig);
        }
    }
    // Applications and bound/constant names carry their own sort; the
    // hint pass checks consistency.
    let hinted = term_sort_hint(sig, bound, term, inf)?;
    if let Some(h) = hinted {
        if h != sort {
            return Err(Error::SortMismatch(format!(
                "expected sort {}, found {}",
                sig.sort_name(sort),
                sig.sort_name(h)
            )));
        }
    }
    Ok(())
}

fn collect_constraints(
    sig: &Signature,
    bound: &mut Vec<(String, usize)>,
    formula: &RawFormula,
    inf: &mut Inference,
) -> Result<()> {
    match formula {
        RawFormula::Top | RawFormula::Bot => Ok(()),
        RawFormula::And(a, b) | RawFormula::Or(a, b) => {
            collect_constraints(sig, bound, a, inf)?;
            collect_constraints(sig, bound, b, inf)
        }
        RawFormula::Eq(t1, t2) | RawFormula::Le(t1, t2) => {
            let h1 = term_sort_hint(sig, bound, t1, inf)?;
            let h2 = term_sort_hint(sig, bound, t2, inf)?;
            match (h1, h2) {
                (Some(s), _) => constrain_term(sig, bound, t2, s, inf)?,
                (None, Some(s)) => constrain_term(sig, bound, t1, s, inf)?,
                (None, None) => {
                    // Two free variables: same group.
                    let (n1, n2) = (raw_name(t1), raw_name(t2));
                    if let (Some(a), Some(b)) = (n1, n2) {
                        if let (Some(a), Some(b)) = (free_var(sig, bound, a), free_var(sig, bound, b)) {
                            let (ga, gb) = (inf.group_of(a), inf.group_of(b));
                            inf.union(ga, gb, sig)?;
                        }
                    }
                }
            }
            Ok(())
        }
        RawFormula::Atom(t) => {
            let (name, args, pos) = match t {
                RawTerm::App(n, a, p) => (n, a.clone(), *p),
                RawTerm::Name(n, p) => (n, vec![], *p),
            };
            let p = sig.predicate_index(name).ok_or_else(|| Error::UnknownSymbol {
                name: name.clone(),
                line: pos.line,
                col: pos.col,
            })?;
            let decl = sig.predicate(p);
            if decl.arg_sorts.len() != args.len() {
                return Err(Error::SortMismatch(format!(
                    "predicate {name:?} expects {} arguments, got {}",
                    decl.arg_sorts.len(),
                    args.len()
                )));
            }
            let arg_sorts = decl.arg_sorts.clone();
            for (arg, &sort) in args.iter().zip(&arg_sorts) {
                constrain_term(sig, bound, arg, sort, inf)?;
            }
            Ok(())
        }
        RawFormula::Exists(var, sort_name, body, pos) => {
            let sort = sig.sort_index(sort_name).map_err(|_| Error::UnknownSymbol {
                name: sort_name.clone(),
                line: pos.line,
                col: pos.col,
            })?;
            bound.push((var.clone(), sort));
            let r = collect_constraints(sig, bound, body, inf);
            bound.pop();
            r
        }
    }
}

fn raw_name(t: &RawTerm) -> Option<&str> {
    match t {
        RawTerm::Name(n, _) => Some(n),
        RawTerm::App(..) => None,
    }
}

fn infer_context(sig: &Signature, formulas: &[&RawFormula]) -> Result<Context> {
    let mut inf = Inference::default();
    let mut bound = Vec::new();
    for f in formulas {
        collect_constraints(sig, &mut bound, f, &mut inf)?;
    }
    let mut ctx = Context::new();
    let vars = inf.vars.clone();
    for (name, group) in vars {
        let root = inf.root(group);
        let sort = match inf.sort[root] {
            Some(s) => s,
            None if sig.sort_count() == 1 => 0,
            None => {
                return Err(Error::SortMismatch(format!(
                    "cannot infer the sort of variable {name:?}; pass an explicit context"
                )))
            }
        };
        ctx.push(name, sort);
    }
    Ok(ctx)
}

// ---------------------------------------------------------------------
// Elaboration
// ---------------------------------------------------------------------

fn elaborate_term(sig: &Signature, ctx: &Context, term: &RawTerm) -> Result<Term> {
    match term {
        RawTerm::Name(name, pos) => {
            if let Some(level) = ctx.resolve(name) {
                return Ok(Term::Var(level));
            }
            if let Some(op) = sig.operation_index(name) {
                if sig.operation(op).arg_sorts.is_empty() {
                    return Ok(Term::App(op, vec![]));
                }
            }
            Err(Error::UnknownSymbol {
                name: name.clone(),
                line: pos.line,
                col: pos.col,
            })
        }
        RawTerm::App(name, args, pos) => {
            let op = sig.operation_index(name).ok_or_else(|| Error::UnknownSymbol {
                name: name.clone(),
                line: pos.line,
                col: pos.col,
            })?;
            let decl = sig.operation(op);
            if decl.arg_sorts.len() != args.len() {
                return Err(Error::SortMismatch(format!(
                    "operation {name:?} expects {} arguments, got {}",
                    decl.arg_sorts.len(),
                    args.len()
                )));
            }
            let arg_sorts = decl.arg_sorts.clone();
            let mut elaborated = Vec::with_capacity(args.len());
            for (arg, &expected) in args.iter().zip(&arg_sorts) {
                let t = elaborate_term(sig, ctx, arg)?;
                let actual = t.sort(sig, ctx);
                if actual != expected {
                    return Err(Error::SortMismatch(format!(
                        "argument of {name:?} at {}:{} has sort {}, expected {}",
                        arg.pos().line,
                        arg.pos().col,
                        sig.sort_name(actual),
                        sig.sort_name(expected)
                    )));
                }
                elaborated.push(t);
            }
            Ok(Term::App(op, elaborated))
        }
    }
}

fn elaborate_formula(sig: &Signature, ctx: &Context, formula: &RawFormula) -> Result<Formula> {
    match formula {
        RawFormula::Top => Ok(Formula::Top),
        RawFormula::Bot => Ok(Formula::Bot),
        RawFormula::And(a, b) => Ok(Formula::And(
            Box::new(elaborate_formula(sig, ctx, a)?),
            Box::new(elaborate_formula(sig, ctx, b)?),
        )),
        RawFormula::Or(a, b) => Ok(Formula::Or(
            Box::new(elaborate_formula(sig, ctx, a)?),
            Box::new(elaborate_formula(sig, ctx, b)?),
        )),
        RawFormula::Eq(t1, t2) => {
            let (a, b) = elaborate_comparison(sig, ctx, t1, t2)?;
            Ok(Formula::Eq(a, b))
        }
        RawFormula::Le(t1, t2) => {
            let (a, b) = elaborate_comparison(sig, ctx, t1, t2)?;
            Ok(Formula::Le(a, b))
        }
        RawFormula::Atom(t) => {
            let (name, args, pos) = match t {
                RawTerm::App(n, a, p) => (n, a.clone(), *p),
                RawTerm::Name(n, p) => (n, vec![], *p),
            };
            let p = sig.predicate_index(name).ok_or_else(|| Error::UnknownSymbol {
                name: name.clone(),
                line: pos.line,
                col: pos.col,
            })?;
            let decl = sig.predicate(p);
            if decl.arg_sorts.len() != args.len() {
                return Err(Error::SortMismatch(format!(
                    "predicate {name:?} expects {} arguments, got {}",
                    decl.arg_sorts.len(),
                    args.len()
                )));
            }
            let arg_sorts = decl.arg_sorts.clone();
            let mut elaborated = Vec::with_capacity(args.len());
            for (arg, &expected) in args.iter().zip(&arg_sorts) {
                let t = elaborate_term(sig, ctx, arg)?;
                if t.sort(sig, ctx) != expected {
                    return Err(Error::SortMismatch(format!(
                        "argument of {name:?} has sort {}, expected {}",
                        sig.sort_name(t.sort(sig, ctx)),
                        sig.sort_name(expected)
                    )));
                }
                elaborated.push(t);
            }
            Ok(Formula::Pred(p, elaborated))
        }
        RawFormula::Exists(var, sort_name, body, pos) => {
            let sort = sig.sort_index(sort_name).map_err(|_| Error::UnknownSymbol {
                name: sort_name.clone(),
                line: pos.line,
                col: pos.col,
            })?;
            let inner = ctx.extended(var.clone(), sort);
            Ok(Formula::Exists {
                var: var.clone(),
                sort,
                body: Box::new(elaborate_formula(sig, &inner, body)?),
            })
        }
    }
}

fn elaborate_comparison(sig: &Signature, ctx: &Context, t1: &RawTerm, t2: &RawTerm) -> Result<(Term, Term)> {
    let a = elaborate_term(sig, ctx, t1)?;
    let b = elaborate_term(sig, ctx, t2)?;
    let (sa, sb) = (a.sort(sig, ctx), b.sort(sig, ctx));
    if sa != sb {
        return Err(Error::SortMismatch(format!(
            "comparison at {}:{} relates sort {} with sort {}",
            t1.pos().line,
            t1.pos().col,
            sig.sort_name(sa),
            sig.sort_name(sb)
        )));
    }
    Ok((a, b))
}

// ---------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------

/// Parses a formula; infers the context from variable usage when none
/// is given.
pub fn parse_formula(src: &str, sig: &Signature, ctx: Option<&Context>) -> Result<(Formula, Context)> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0 };
    let raw = p.formula()?;
    if *p.peek() != Tok::Eof {
        return Err(syntax_error(p.pos(), format!("unexpected {}", p.peek())));
    }
    let ctx = match ctx {
        Some(c) => c.clone(),
        None => infer_context(sig, &[&raw])?,
    };
    let formula = elaborate_formula(sig, &ctx, &raw)?;
    Ok((formula, ctx))
}

/// Parses `lhs |- rhs` (an omitted left side means `top`); both sides
/// share one context.
pub fn parse_sequent(src: &str, sig: &Signature, ctx: Option<&Context>) -> Result<Sequent> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0 };
    let lhs = if *p.peek() == Tok::Turnstile {
        RawFormula::Top
    } else {
        p.formula()?
    };
    p.expect(Tok::Turnstile)?;
    let rhs = p.formula()?;
    if *p.peek() != Tok::Eof {
        return Err(syntax_error(p.pos(), format!("unexpected {}", p.peek())));
    }
    let ctx = match ctx {
        Some(c) => c.clone(),
        None => infer_context(sig, &[&lhs, &rhs])?,
    };
    Ok(Sequent {
        lhs: elaborate_formula(sig, &ctx, &lhs)?,
        rhs: elaborate_formula(sig, &ctx, &rhs)?,
        context: ctx,
    })
}

/// Parses a term against an explicit context.
pub fn parse_term(src: &str, sig: &Signature, ctx: &Context) -> Result<Term> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0 };
    let raw = p.term()?;
    if *p.peek() != Tok::Eof {
        return Err(syntax_error(p.pos(), format!("unexpected {}", p.peek())));
    }
    elaborate_term(sig, ctx, &raw)
}

/// Parses a context declaration `x:SortA, y:SortB`.
pub fn parse_context(src: &str, sig: &Signature) -> Result<Context> {
    let mut ctx = Context::new();
    let trimmed = src.trim();
    if trimmed.is_empty() {
        return Ok(ctx);
    }
    for binding in trimmed.split(',') {
        let mut parts = binding.splitn(2, ':');
        let name = parts.next().unwrap_or("").trim();
        let sort = parts.next().unwrap_or("").trim();
        if name.is_empty() || sort.is_empty() {
            return Err(Error::SortMismatch(format!(
                "context bindings look like `x:Sort`, got {binding:?}"
            )));
        }
        ctx.push(name, sig.sort_index(sort)?);
    }
    Ok(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinPoset;

    fn sig() -> Signature {
        let mut sig = Signature::new();
        sig.add_sort("C2", FinPoset::chain(2)).unwrap();
        sig.add_sort("U", FinPoset::vee()).unwrap();
        sig.add_predicate("le", &["U", "C2"], [["x", "0"].as_slice()]).unwrap();
        sig
    }

    #[test]
    fn parses_antisymmetry_sequent() {
        // With one sort, unannotated variables default to it.
        let mut single = Signature::new();
        single.add_sort("C2", FinPoset::chain(2)).unwrap();
        let s = parse_sequent("x <= y /\\ y <= x |- x = y", &single, None).unwrap();
        assert_eq!(s.context.len(), 2);
        assert_eq!(s.context.var(0).0, "x");
        assert!(matches!(s.lhs, Formula::And(..)));
        assert!(matches!(s.rhs, Formula::Eq(..)));

        // With several sorts, an explicit context disambiguates.
        let ctx = parse_context("x:C2, y:C2", &sig()).unwrap();
        let s = parse_sequent("x <= y /\\ y <= x |- x = y", &sig(), Some(&ctx)).unwrap();
        assert_eq!(s.context.len(), 2);
    }

    #[test]
    fn parses_quantifier_with_predicate() {
        let (f, ctx) = parse_formula("exists u:U. le(u, x)", &sig(), None).unwrap();
        // x is inferred at sort C2 from the predicate's second slot.
        assert_eq!(ctx.len(), 1);
        assert_eq!(ctx.var(0), ("x", 0));
        match f {
            Formula::Exists { sort, body, .. } => {
                assert_eq!(sort, 1);
                assert!(matches!(*body, Formula::Pred(..)));
            }
            other => panic!("expected a quantifier, got {other:?}"),
        }
    }

    #[test]
    fn undeclared_symbols_are_reported_with_position() {
        let err = parse_formula("f(x) = y \\/ top", &sig(), None).unwrap_err();
        match err {
            Error::UnknownSymbol { name, line, col } => {
                assert_eq!(name, "f");
                assert_eq!((line, col), (1, 1));
            }
            other => panic!("expected UnknownSymbol, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_sequent("x <= |- top", &sig(), None).unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, col: 6, .. }));
    }

    #[test]
    fn precedence_and_parentheses() {
        // /\ binds tighter than \/.
        let (f, _) = parse_formula("top \\/ bot /\\ top", &sig(), Some(&Context::new())).unwrap();
        assert!(matches!(f, Formula::Or(..)));
        let (f, _) = parse_formula("(top \\/ bot) /\\ top", &sig(), Some(&Context::new())).unwrap();
        assert!(matches!(f, Formula::And(..)));
    }

    #[test]
    fn shadowing_resolves_innermost() {
        let s = sig();
        let ctx = parse_context("x:C2", &s).unwrap();
        let (f, _) = parse_formula("exists x:U. le(x, y)", &s, None).unwrap();
        // The bound x shadows nothing here; with an outer x of sort C2
        // the inner one still resolves to the binder.
        let (g, _) = parse_formula("exists x:U. le(x, x0)", &s, Some(&ctx.extended("x0", 0))).unwrap();
        assert!(matches!(f, Formula::Exists { .. }));
        assert!(matches!(g, Formula::Exists { .. }));
    }

    #[test]
    fn ambiguous_sorts_are_rejected() {
        let err = parse_sequent("x = y |- top", &sig(), None).unwrap_err();
        assert!(matches!(err, Error::SortMismatch(_)));
    }

    #[test]
    fn single_sort_signatures_default() {
        let mut s = Signature::new();
        s.add_sort("C2", FinPoset::chain(2)).unwrap();
        let seq = parse_sequent("x = y |- y = x", &s, None).unwrap();
        assert_eq!(seq.context.len(), 2);
    }
}
