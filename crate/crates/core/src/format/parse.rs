use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Definition, LinearCoeff, ParseError, ParseErrorKind, ProductDef, Term};
use crate::algebra::{default_even_labels, default_odd_labels};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(Rational),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Eq,
    Plus,
    Minus,
    Star,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    err(line, column, ParseErrorKind::Syntax(msg.into()))
}

fn tokenize(text: &str, line: usize) -> Result<(Vec<Token>, usize), ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
            let mut den = BigInt::from(1);
            if i < chars.len() && chars[i] == '/' {
                let ds = i + 1;
                let mut j = ds;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == ds {
                    return Err(syntax(line, i + 1, "expected a denominator after '/'"));
                }
                den = chars[ds..j].iter().collect::<String>().parse().unwrap();
                if den.is_zero() {
                    return Err(syntax(line, ds + 1, "zero denominator"));
                }
                i = j;
            }
            out.push(Token {
                tok: Tok::Number(Rational::new(num, den)),
                col,
            });
            continue;
        }
        let tok = match c {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            _ => return Err(syntax(line, col, format!("unexpected character '{c}'"))),
        };
        out.push(Token { tok, col });
        i += 1;
    }
    Ok((out, chars.len() + 1))
}

/// Declarations gathered in the first pass.
struct Header {
    dims: Option<(usize, usize, usize)>,
    even: Option<(Vec<String>, usize)>,
    odd: Option<(Vec<String>, usize)>,
    params: Vec<String>,
}

struct Scope<'a> {
    labels: &'a BTreeMap<String, bool>,
    params: &'a HashSet<String>,
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&'a Tok> {
        self.toks.get(self.pos + k).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn bump(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(syntax(self.line, self.col(), format!("expected {what}")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Ident(s)) => Ok((s.clone(), col)),
            _ => Err(syntax(self.line, col, format!("expected {what}"))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }
}

fn combine(acc: LinearCoeff, f: LinearCoeff, line: usize, col: usize) -> Result<LinearCoeff, ParseError> {
    acc.mul(&f)
        .ok_or_else(|| syntax(line, col, "coefficient is not linear in the parameters"))
}

/// A parenthesized linear form: signed monomials of numbers and parameters.
fn linear(c: &mut Cursor, scope: &Scope) -> Result<LinearCoeff, ParseError> {
    let mut total = LinearCoeff::default();
    let mut first = true;
    loop {
        let mut sign = Rational::from_integer(1.into());
        match c.peek() {
            Some(Tok::Plus) => {
                c.bump();
            }
            Some(Tok::Minus) => {
                c.bump();
                sign = -sign;
            }
            _ if !first => break,
            _ => {}
        }
        first = false;
        let mut mono = LinearCoeff::constant(sign);
        let mut any = false;
        loop {
            let col = c.col();
            let f = match c.peek() {
                Some(Tok::Number(r)) => LinearCoeff::constant(r.clone()),
                Some(Tok::Ident(s)) if scope.params.contains(s) => LinearCoeff::param(s),
                Some(Tok::Ident(s)) if scope.labels.contains_key(s) => {
                    return Err(syntax(c.line, col, format!("label {s} inside a coefficient")))
                }
                Some(Tok::Ident(s)) => {
                    return Err(err(c.line, col, ParseErrorKind::UndeclaredParameter(s.clone())))
                }
                Some(Tok::LParen) => {
                    c.bump();
                    let inner = linear(c, scope)?;
                    c.expect(Tok::RParen, "')'")?;
                    mono = combine(mono, inner, c.line, col)?;
                    any = true;
                    if c.peek() == Some(&Tok::Star) {
                        c.bump();
                    }
                    continue;
                }
                _ => break,
            };
            c.bump();
            mono = combine(mono, f, c.line, col)?;
            any = true;
            if c.peek() == Some(&Tok::Star) {
                c.bump();
            }
        }
        if !any {
            return Err(syntax(c.line, c.col(), "expected a number or parameter"));
        }
        total = total.add(&mono);
    }
    Ok(total)
}

/// Right-hand side of a product line.
fn rhs(c: &mut Cursor, scope: &Scope) -> Result<Vec<(LinearCoeff, String, usize)>, ParseError> {
    if matches!(c.peek(), Some(Tok::Number(r)) if r.is_zero()) && c.peek_at(1).is_none() {
        c.bump();
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut first = true;
    while !c.at_end() {
        let mut coeff = LinearCoeff::constant(Rational::from_integer(1.into()));
        match c.peek() {
            Some(Tok::Plus) => {
                c.bump();
            }
            Some(Tok::Minus) => {
                c.bump();
                coeff = coeff.scale(&Rational::from_integer((-1).into()));
            }
            _ if !first => return Err(syntax(c.line, c.col(), "expected '+' or '-'")),
            _ => {}
        }
        first = false;
        let label = loop {
            let col = c.col();
            match c.peek() {
                Some(Tok::Number(r)) => {
                    c.bump();
                    coeff = combine(coeff, LinearCoeff::constant(r.clone()), c.line, col)?;
                }
                Some(Tok::Ident(s)) if scope.labels.contains_key(s) => {
                    c.bump();
                    break (s.clone(), col);
                }
                Some(Tok::Ident(s)) if scope.params.contains(s) => {
                    c.bump();
                    coeff = combine(coeff, LinearCoeff::param(s), c.line, col)?;
                }
                Some(Tok::Ident(s)) => {
                    // an unknown name followed by more of the term is a coefficient
                    let coefficient_position = matches!(
                        c.peek_at(1),
                        Some(Tok::Ident(_) | Tok::Star | Tok::LParen | Tok::Number(_))
                    );
                    let kind = if coefficient_position {
                        ParseErrorKind::UndeclaredParameter(s.clone())
                    } else {
                        ParseErrorKind::UnknownLabel(s.clone())
                    };
                    return Err(err(c.line, col, kind));
                }
                Some(Tok::LParen) => {
                    c.bump();
                    let inner = linear(c, scope)?;
                    c.expect(Tok::RParen, "')'")?;
                    coeff = combine(coeff, inner, c.line, col)?;
                }
                _ => return Err(syntax(c.line, col, "expected a basis label")),
            }
            if c.peek() == Some(&Tok::Star) {
                c.bump();
            }
        };
        out.push((coeff, label.0, label.1));
    }
    if out.is_empty() {
        return Err(syntax(c.line, c.col(), "empty right-hand side"));
    }
    Ok(out)
}

fn label_list(c: &mut Cursor) -> Result<Vec<(String, usize)>, ParseError> {
    let mut out = Vec::new();
    while !c.at_end() {
        out.push(c.ident("a label")?);
        if c.peek() == Some(&Tok::Comma) {
            c.bump();
        }
    }
    Ok(out)
}

fn number(c: &mut Cursor) -> Result<usize, ParseError> {
    let col = c.col();
    match c.bump() {
        Some(Tok::Number(r)) if r.is_integer() => r
            .numer()
            .try_into()
            .map_err(|_| syntax(c.line, col, "dimension out of range")),
        _ => Err(syntax(c.line, col, "expected a nonnegative integer")),
    }
}

/// Parses `.lsa` source into a [`Definition`].
pub fn parse(text: &str) -> Result<Definition, ParseError> {
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let (toks, end_col) = tokenize(raw, k + 1)?;
        if !toks.is_empty() {
            lines.push((k + 1, toks, end_col));
        }
    }

    let mut header = Header {
        dims: None,
        even: None,
        odd: None,
        params: Vec::new(),
    };
    let mut product_lines = Vec::new();
    let mut seen_names: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for (line, toks, end_col) in &lines {
        let mut c = Cursor {
            toks,
            pos: 0,
            line: *line,
            end_col: *end_col,
        };
        match c.peek() {
            Some(Tok::LBracket) => {
                product_lines.push((*line, toks, *end_col));
                continue;
            }
            Some(Tok::Ident(kw)) => {
                let kw = kw.clone();
                let kw_col = c.col();
                c.bump();
                match kw.as_str() {
                    "dims" => {
                        if header.dims.is_some() {
                            return Err(err(*line, kw_col, ParseErrorKind::DuplicateDeclaration("dims".into())));
                        }
                        let n = number(&mut c)?;
                        let m = number(&mut c)?;
                        header.dims = Some((n, m, *line));
                    }
                    "even" | "odd" => {
                        let slot = if kw == "even" { &mut header.even } else { &mut header.odd };
                        if slot.is_some() {
                            return Err(err(*line, kw_col, ParseErrorKind::DuplicateDeclaration(kw.clone())));
                        }
                        let list = label_list(&mut c)?;
                        for (l, col) in &list {
                            if seen_names.insert(l.clone(), (*line, *col)).is_some() {
                                return Err(err(*line, *col, ParseErrorKind::DuplicateLabel(l.clone())));
                            }
                        }
                        *slot = Some((list.into_iter().map(|(l, _)| l).collect(), *line));
                    }
                    "param" => {
                        for (p, col) in label_list(&mut c)? {
                            if header.params.contains(&p) {
                                return Err(err(*line, col, ParseErrorKind::DuplicateDeclaration(p)));
                            }
                            if seen_names.contains_key(&p) {
                                return Err(err(*line, col, ParseErrorKind::DuplicateLabel(p)));
                            }
                            seen_names.insert(p.clone(), (*line, col));
                            header.params.push(p);
                        }
                    }
                    _ => return Err(syntax(*line, kw_col, format!("unknown directive '{kw}'"))),
                }
                if !c.at_end() {
                    return Err(syntax(*line, c.col(), "unexpected trailing input"));
                }
            }
            _ => return Err(syntax(*line, c.col(), "expected a directive or a product")),
        }
    }

    let (n, m) = match (&header.dims, &header.even, &header.odd) {
        (Some((n, m, line)), even, odd) => {
            let ne = even.as_ref().map_or(*n, |e| e.0.len());
            let no = odd.as_ref().map_or(*m, |o| o.0.len());
            if (ne, no) != (*n, *m) {
                return Err(err(
                    *line,
                    1,
                    ParseErrorKind::DimsMismatch {
                        n: *n,
                        m: *m,
                        even: ne,
                        odd: no,
                    },
                ));
            }
            (*n, *m)
        }
        (None, None, None) => return Err(syntax(1, 1, "missing dims declaration")),
        (None, even, odd) => (
            even.as_ref().map_or(0, |e| e.0.len()),
            odd.as_ref().map_or(0, |o| o.0.len()),
        ),
    };
    let even = header.even.map_or_else(|| default_even_labels(n), |e| e.0);
    let odd = header.odd.map_or_else(|| default_odd_labels(m), |o| o.0);
    let mut labels: BTreeMap<String, bool> = BTreeMap::new();
    for (l, odd_part) in even.iter().map(|l| (l, false)).chain(odd.iter().map(|l| (l, true))) {
        if labels.insert(l.clone(), odd_part).is_some() || header.params.contains(l) {
            let (line, col) = seen_names.get(l).copied().unwrap_or((1, 1));
            return Err(err(line, col, ParseErrorKind::DuplicateLabel(l.clone())));
        }
    }
    let params: HashSet<String> = header.params.iter().cloned().collect();
    let scope = Scope {
        labels: &labels,
        params: &params,
    };

    let mut products = Vec::new();
    let mut defined = HashSet::new();
    for (line, toks, end_col) in product_lines {
        let mut c = Cursor {
            toks,
            pos: 0,
            line,
            end_col,
        };
        c.expect(Tok::LBracket, "'['")?;
        let (left, lcol) = c.ident("a label")?;
        c.expect(Tok::Comma, "','")?;
        let (right, rcol) = c.ident("a label")?;
        c.expect(Tok::RBracket, "']'")?;
        c.expect(Tok::Eq, "'='")?;
        let lp = *labels
            .get(&left)
            .ok_or_else(|| err(line, lcol, ParseErrorKind::UnknownLabel(left.clone())))?;
        let rp = *labels
            .get(&right)
            .ok_or_else(|| err(line, rcol, ParseErrorKind::UnknownLabel(right.clone())))?;
        if !defined.insert((left.clone(), right.clone())) {
            return Err(err(line, 1, ParseErrorKind::DuplicateProduct(left, right)));
        }
        let raw = rhs(&mut c, &scope)?;
        let mut merged: Vec<Term> = Vec::new();
        for (coeff, label, col) in raw {
            if labels[&label] != (lp ^ rp) {
                return Err(err(
                    line,
                    col,
                    ParseErrorKind::GradingViolation {
                        left: left.clone(),
                        right: right.clone(),
                        target: label,
                    },
                ));
            }
            match merged.iter_mut().find(|t| t.label == label) {
                Some(t) => t.coeff = t.coeff.add(&coeff),
                None => merged.push(Term { coeff, label }),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        products.push(ProductDef {
            left,
            right,
            terms: merged,
            line,
        });
    }

    Ok(Definition {
        n,
        m,
        even,
        odd,
        params: header.params,
        products,
    })
}
