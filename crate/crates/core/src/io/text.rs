//! Structure-constant text format.
//!
//! ```text
//! document = { line } ;
//! line     = [ header | dline | gline ] [ comment ] newline ;
//! header   = "name" ident | "dim" integer | "source" text ;
//! dline    = "d" basis "=" ( "0" | terms(wedge) ) ;
//! gline    = "g" "=" terms(product) ;
//! terms(t) = [ sign ] term(t) { sign term(t) } ;
//! term(t)  = [ coef ] t ;
//! wedge    = basis "^" basis ;
//! product  = basis "*" basis ;
//! coef     = integer [ "/" integer ] ;
//! basis    = "e" integer ;
//! sign     = "+" | "-" ;
//! comment  = "#" text ;
//! ```
//!
//! A term `c ei^ej` in the line for `d ek` means `de^k` contains
//! `c e^i∧e^j`, so `[e_i, e_j]` has `e_k`-coefficient `-c`. A term
//! `c ei*ej` in the metric line with `i != j` sets `g(e_i,e_j) = g(e_j,e_i) = c`;
//! with `i == j` it sets `g(e_i,e_i) = c`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::metric::BilinearForm;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub source: Option<String>,
    /// `k -> [(i, j, c)]` with `i < j`, 0-based, zero terms dropped.
    pub differentials: BTreeMap<usize, Vec<(usize, usize, Rational)>>,
    /// Metric terms `(i, j, c)` with `i <= j`.
    pub metric: Option<Vec<(usize, usize, Rational)>>,
}

fn format_coef_term(out: &mut String, first: bool, c: &Rational, body: &str) {
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if !mag.is_one() {
        let _ = write!(out, "{mag} ");
    }
    out.push_str(body);
}

/// `1/2 e5 - e6` style rendering of a vector.
pub fn format_vector<F: Field>(v: &[F]) -> String {
    let mut out = String::new();
    let mut first = true;
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let s = x.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if first {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            let _ = write!(out, "{mag} ");
        }
        let _ = write!(out, "e{}", i + 1);
        first = false;
    }
    if first {
        out.push('0');
    }
    out
}

impl AlgebraDocument {
    pub fn from_algebra(name: &str, g: &LieAlgebra<Rational>, metric: Option<&BilinearForm<Rational>>) -> Self {
        let mut differentials: BTreeMap<usize, Vec<(usize, usize, Rational)>> = BTreeMap::new();
        for (i, j, terms) in g.nonzero_brackets() {
            for (k, c) in terms {
                differentials.entry(*k).or_default().push((i, j, -c.clone()));
            }
        }
        for v in differentials.values_mut() {
            v.sort_by_key(|a| (a.0, a.1));
        }
        AlgebraDocument {
            name: name.to_string(),
            dim: g.dim(),
            source: None,
            differentials,
            metric: metric.map(BilinearForm::terms),
        }
    }

    pub fn with_source(mut self, source: &str) -> Self {
        self.source = Some(source.to_string());
        self
    }

    pub fn to_algebra(&self, check_jacobi: bool) -> Result<LieAlgebra<Rational>> {
        let entries = self
            .differentials
            .iter()
            .flat_map(|(k, ts)| ts.iter().map(move |(i, j, c)| (*i, *j, *k, -c.clone())));
        if check_jacobi {
            LieAlgebra::from_brackets(self.dim, entries)
        } else {
            LieAlgebra::from_brackets_unchecked(self.dim, entries)
        }
    }

    pub fn to_metric(&self) -> Result<Option<BilinearForm<Rational>>> {
        match &self.metric {
            None => Ok(None),
            Some(ts) => BilinearForm::from_terms(self.dim, ts).map(Some),
        }
    }
}

pub fn emit_algebra(doc: &AlgebraDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name {}", doc.name);
    let _ = writeln!(out, "dim {}", doc.dim);
    if let Some(s) = &doc.source {
        let _ = writeln!(out, "source {s}");
    }
    for (k, terms) in &doc.differentials {
        if terms.is_empty() {
            continue;
        }
        let mut line = String::new();
        for (n, (i, j, c)) in terms.iter().enumerate() {
            format_coef_term(&mut line, n == 0, c, &format!("e{}^e{}", i + 1, j + 1));
        }
        let _ = writeln!(out, "d e{} = {line}", k + 1);
    }
    if let Some(m) = &doc.metric {
        let mut line = String::new();
        for (n, (i, j, c)) in m.iter().enumerate() {
            format_coef_term(&mut line, n == 0, c, &format!("e{}*e{}", i + 1, j + 1));
        }
        if m.is_empty() {
            line.push('0');
        }
        let _ = writeln!(out, "g = {line}");
    }
    out
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, col: self.pos + 1, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] == b' ' || self.s[self.pos] == b'\t') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(txt.parse().expect("digits parse"))
    }

    fn index(&mut self, dim: usize) -> Result<usize> {
        self.expect(b'e')?;
        let col = self.pos;
        let n = self.integer()?;
        let n: usize = n.try_into().map_err(|_| Error::Parse { line: self.line, col: col + 1, msg: "index too large".into() })?;
        if n == 0 || n > dim {
            return Err(Error::Parse { line: self.line, col: col + 1, msg: format!("index e{n} out of range 1..{dim}") });
        }
        Ok(n - 1)
    }

    fn coefficient(&mut self) -> Result<Option<Rational>> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
                if den.is_zero() {
                    return self.err("zero denominator");
                }
                Ok(Some(Rational::new(num, den)))
            }
            _ => Ok(None),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Signed sum of `coef? e_i SEP e_j` terms.
    fn terms(&mut self, dim: usize, sep: u8) -> Result<Vec<(usize, usize, Rational)>> {
        let mut out = Vec::new();
        let mut first = true;
        loop {
            let sign = if self.eat(b'-') {
                -Rational::one()
            } else if self.eat(b'+') || first {
                Rational::one()
            } else {
                return self.err("expected '+' or '-'");
            };
            let c = self.coefficient()?;
            if first && c.as_ref().is_some_and(Zero::is_zero) && self.at_end() {
                return Ok(out);
            }
            let i = self.index(dim)?;
            self.expect(sep)?;
            let j = self.index(dim)?;
            out.push((i, j, sign * c.unwrap_or_else(Rational::one)));
            first = false;
            if self.at_end() {
                return Ok(out);
            }
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(p) => &line[..p],
        None => line,
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraDocument> {
    let mut name = None;
    let mut dim: Option<usize> = None;
    let mut source = None;
    let mut diffs: BTreeMap<usize, BTreeMap<(usize, usize), Rational>> = BTreeMap::new();
    let mut metric: Option<BTreeMap<(usize, usize), Rational>> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let body = strip_comment(raw);
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (kw, rest) = match trimmed.find(char::is_whitespace) {
            Some(p) => (&trimmed[..p], trimmed[p..].trim()),
            None => (trimmed, ""),
        };
        let offset = body.len() - body.trim_start().len() + kw.len();
        let perr = |msg: String| Error::Parse { line: line_no, col: 1, msg };
        match kw {
            "name" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(perr("name must be a single token".into()));
                }
                name = Some(rest.to_string());
            }
            "dim" => {
                dim = Some(rest.parse().map_err(|_| perr(format!("bad dimension '{rest}'")))?);
            }
            "source" => source = Some(rest.to_string()),
            "d" | "g" => {
                let n = dim.ok_or_else(|| perr("dim must precede structure lines".into()))?;
                let mut cur = Cursor { s: body.as_bytes(), pos: offset.min(body.len()), line: line_no };
                if kw == "d" {
                    let k = cur.index(n)?;
                    cur.expect(b'=')?;
                    let ts = cur.terms(n, b'^')?;
                    let slot = diffs.entry(k).or_default();
                    for (i, j, c) in ts {
                        if i == j {
                            return cur.err("wedge of a basis element with itself");
                        }
                        let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
                        *slot.entry((a, b)).or_insert_with(Rational::zero) += c;
                    }
                } else {
                    cur.expect(b'=')?;
                    let ts = cur.terms(n, b'*')?;
                    let m = metric.get_or_insert_with(BTreeMap::new);
                    for (i, j, c) in ts {
                        let key = (i.min(j), i.max(j));
                        *m.entry(key).or_insert_with(Rational::zero) += c;
                    }
                }
            }
            other => {
                return Err(perr(format!("unknown keyword '{other}'")));
            }
        }
    }
    let name = name.ok_or_else(|| Error::Parse { line: 1, col: 1, msg: "missing name".into() })?;
    let dim = dim.ok_or_else(|| Error::Parse { line: 1, col: 1, msg: "missing dim".into() })?;
    let differentials = diffs
        .into_iter()
        .map(|(k, m)| (k, m.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect::<Vec<_>>()))
        .filter(|(_, v)| !v.is_empty())
        .collect();
    let metric = metric.map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect());
    Ok(AlgebraDocument { name, dim, source, differentials, metric })
}

/// Parse a vector such as `1/2 e5 - e6` in an ambient space of dimension `dim`.
pub fn parse_vector(text: &str, dim: usize) -> Result<Vec<Rational>> {
    let mut cur = Cursor { s: text.as_bytes(), pos: 0, line: 1 };
    let mut v = vec![Rational::zero(); dim];
    if text.trim() == "0" {
        return Ok(v);
    }
    let mut first = true;
    loop {
        let sign = if cur.eat(b'-') {
            -Rational::one()
        } else if cur.eat(b'+') || first {
            Rational::one()
        } else {
            return cur.err("expected '+' or '-'");
        };
        let c = cur.coefficient()?.unwrap_or_else(Rational::one);
        let i = cur.index(dim)?;
        v[i] += sign * c;
        first = false;
        if cur.at_end() {
            return Ok(v);
        }
    }
}
