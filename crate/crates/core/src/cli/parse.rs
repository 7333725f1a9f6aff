//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! kind: polynomial          # or matrix
//! time: discrete            # or continuous (default)
//! params: r, p              # default r, p
//! poly: s^6 + (r + i*p)*s^5 + 3/2
//! box: -4:3:-3.5:3.5        # optional plot window
//! grid: 256                 # optional plot resolution
//! ```
//!
//! Matrix problems give `A`, `B`, `C` and `K` as `[[a, b], [c, d]]` and are
//! closed as A + B·K·C. Expressions use literals (decimals with '.', and
//! `n/d` between two literals), `i`, the declared parameters, `s` (polynomial
//! problems only), `+ - * ^` with integer exponents and parentheses.

use crate::arith::{rat_from_decimal, rat_to_f64, Gauss, Rational};
use crate::error::{Error, Result};
use crate::family::{closed_loop, TimeDomain, OMEGA, S};
use crate::mpoly::MPoly;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Plot window in parameter coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlotBox {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl PlotBox {
    /// `XMIN:XMAX:YMIN:YMAX`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.trim().split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Argument(format!("box `{text}` is not XMIN:XMAX:YMIN:YMAX")));
        }
        let v: Vec<f64> = parts.iter().map(|t| rat_from_decimal(t).map(|x| rat_to_f64(&x))).collect::<Result<_>>()?;
        let b = PlotBox { xmin: v[0], xmax: v[1], ymin: v[2], ymax: v[3] };
        b.check()?;
        Ok(b)
    }

    pub fn check(&self) -> Result<()> {
        let finite = [self.xmin, self.xmax, self.ymin, self.ymax].iter().all(|x| x.is_finite());
        if !finite || self.xmin >= self.xmax || self.ymin >= self.ymax {
            return Err(Error::Argument(format!("degenerate box {self:?}")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    /// Polynomial in (s, params).
    Polynomial(MPoly),
    /// Matrices with entries in the params.
    Matrix { a: Vec<Vec<MPoly>>, b: Vec<Vec<MPoly>>, c: Vec<Vec<MPoly>>, k: Vec<Vec<MPoly>> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Problem {
    pub payload: Payload,
    pub time: TimeDomain,
    pub params: [String; 2],
    pub bbox: Option<PlotBox>,
    pub grid: Option<usize>,
}

impl Problem {
    pub fn params(&self) -> [&str; 2] {
        [self.params[0].as_str(), self.params[1].as_str()]
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    End,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

/// Tokens with 1-based columns.
fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            if s.matches('.').count() > 1 || s == "." {
                return Err(syntax(line, col, format!("malformed number `{s}`")));
            }
            out.push((Tok::Num(s), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()[],".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    out.push((Tok::End, col0 + chars.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    vars: &'a [&'a str],
    allowed: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        syntax(self.line, self.col(), msg)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn constant(&self, x: Rational) -> MPoly {
        MPoly::constant(self.vars, Gauss::real(x))
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Sym('/') => return Err(self.err("`/` is only allowed between two numeric literals")),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.primary()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        match self.bump() {
            Tok::Num(n) if !n.contains('.') => {
                let e: u32 = n.parse().map_err(|_| syntax(self.line, col, format!("exponent `{n}` is too large")))?;
                Ok(base.pow(e))
            }
            _ => Err(syntax(self.line, col, "exponent must be a nonnegative integer literal")),
        }
    }

    fn literal(&mut self, text: &str, col: usize) -> Result<Rational> {
        rat_from_decimal(text).map_err(|_| syntax(self.line, col, format!("malformed number `{text}`")))
    }

    fn primary(&mut self) -> Result<MPoly> {
        let col = self.col();
        match self.bump() {
            Tok::Num(n) => {
                let mut x = self.literal(&n, col)?;
                if *self.peek() == Tok::Sym('/') {
                    self.bump();
                    let dcol = self.col();
                    let Tok::Num(d) = self.bump() else {
                        return Err(syntax(self.line, dcol, "`/` is only allowed between two numeric literals"));
                    };
                    let d = self.literal(&d, dcol)?;
                    if d.is_zero() {
                        return Err(syntax(self.line, dcol, "division by zero"));
                    }
                    x /= d;
                }
                Ok(self.constant(x))
            }
            Tok::Ident(name) if name == "i" => Ok(MPoly::constant(self.vars, Gauss::i())),
            Tok::Ident(name) => {
                if !self.allowed.contains(&name.as_str()) {
                    return Err(syntax(self.line, col, format!("unknown variable `{name}`")));
                }
                MPoly::var(self.vars, &name)
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::End => Err(syntax(self.line, col, "unexpected end of expression")),
            t => Err(syntax(self.line, col, format!("unexpected {}", describe(&t)))),
        }
    }

    fn matrix(&mut self) -> Result<Vec<Vec<MPoly>>> {
        self.expect('[')?;
        let mut rows = Vec::new();
        loop {
            self.expect('[')?;
            let mut row = vec![self.expr()?];
            while *self.peek() == Tok::Sym(',') {
                self.bump();
                row.push(self.expr()?);
            }
            self.expect(']')?;
            rows.push(row);
            if *self.peek() != Tok::Sym(',') {
                break;
            }
            self.bump();
        }
        self.expect(']')?;
        Ok(rows)
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            Tok::Sym(',') if matches!(self.toks[self.pos - 1].0, Tok::Num(_)) => {
                Err(self.err("the decimal separator is '.'"))
            }
            t => Err(self.err(format!("unexpected {} after expression", describe(t)))),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(x) => format!("identifier `{x}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of line".into(),
    }
}

struct Entry {
    line: usize,
    col: usize,
    value: String,
}

const KEYS: [&str; 10] = ["kind", "time", "params", "poly", "A", "B", "C", "K", "box", "grid"];

fn entries(text: &str) -> Result<BTreeMap<String, Entry>> {
    let mut out = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = body.split_once(':') else {
            let col = raw.len() - raw.trim_start().len() + 1;
            return Err(syntax(line, col, "expected `key: value`"));
        };
        let k = key.trim();
        let kcol = key.len() - key.trim_start().len() + 1;
        if !KEYS.contains(&k) {
            return Err(syntax(line, kcol, format!("unknown key `{k}`")));
        }
        if out.contains_key(k) {
            return Err(syntax(line, kcol, format!("duplicate key `{k}`")));
        }
        let vcol = key.chars().count() + 2;
        out.insert(k.to_string(), Entry { line, col: vcol, value: value.to_string() });
    }
    Ok(out)
}

fn word(e: &Entry) -> (String, usize) {
    let lead = e.value.len() - e.value.trim_start().len();
    (e.value.trim().to_string(), e.col + lead)
}

fn parse_params(e: Option<&Entry>) -> Result<[String; 2]> {
    let Some(e) = e else {
        return Ok(["r".into(), "p".into()]);
    };
    let toks = lex(&e.value, e.line, e.col)?;
    let names: Vec<(String, usize)> = toks
        .iter()
        .filter_map(|(t, c)| match t {
            Tok::Ident(x) => Some((x.clone(), *c)),
            _ => None,
        })
        .collect();
    let shape_ok = toks.len() == 4 && toks[1].0 == Tok::Sym(',') && names.len() == 2;
    if !shape_ok {
        return Err(syntax(e.line, e.col, "params must name two identifiers, e.g. `params: r, p`"));
    }
    for (name, col) in &names {
        if [S, "i", OMEGA].contains(&name.as_str()) {
            return Err(syntax(e.line, *col, format!("`{name}` is reserved and cannot be a parameter")));
        }
    }
    if names[0].0 == names[1].0 {
        return Err(syntax(e.line, names[1].1, "the two parameters must differ"));
    }
    Ok([names[0].0.clone(), names[1].0.clone()])
}

fn parse_with<'a, T>(
    e: &Entry,
    vars: &'a [&'a str],
    allowed: &'a [&'a str],
    f: impl FnOnce(&mut Parser<'a>) -> Result<T>,
) -> Result<T> {
    let toks = lex(&e.value, e.line, e.col)?;
    let mut p = Parser { toks, pos: 0, line: e.line, vars, allowed };
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

/// Parses a problem file.
pub fn parse_input(text: &str) -> Result<Problem> {
    let map = entries(text)?;
    let params = parse_params(map.get("params"))?;
    let pr = [params[0].as_str(), params[1].as_str()];

    let time = match map.get("time") {
        None => TimeDomain::Continuous,
        Some(e) => match word(e) {
            (w, _) if w == "continuous" => TimeDomain::Continuous,
            (w, _) if w == "discrete" => TimeDomain::Discrete,
            (w, c) => return Err(syntax(e.line, c, format!("time must be continuous or discrete, got `{w}`"))),
        },
    };

    let has_poly = map.contains_key("poly");
    let matrix_keys: Vec<&str> = ["A", "B", "C", "K"].into_iter().filter(|k| map.contains_key(*k)).collect();
    let kind = match map.get("kind") {
        Some(e) => {
            let (w, c) = word(e);
            if w != "polynomial" && w != "matrix" {
                return Err(syntax(e.line, c, format!("kind must be polynomial or matrix, got `{w}`")));
            }
            w
        }
        None if has_poly => "polynomial".into(),
        None if !matrix_keys.is_empty() => "matrix".into(),
        None => return Err(syntax(1, 1, "missing `poly` or matrices `A`, `B`, `C`, `K`")),
    };

    let payload = if kind == "polynomial" {
        if let Some(k) = matrix_keys.first() {
            let e = &map[*k];
            return Err(syntax(e.line, 1, format!("`{k}` is not allowed in a polynomial problem")));
        }
        let e = map.get("poly").ok_or_else(|| syntax(1, 1, "missing `poly`"))?;
        let vars = [S, pr[0], pr[1]];
        Payload::Polynomial(parse_with(e, &vars, &vars, Parser::expr)?)
    } else {
        if let Some(e) = map.get("poly") {
            return Err(syntax(e.line, 1, "`poly` is not allowed in a matrix problem"));
        }
        let mut ms = Vec::new();
        for k in ["A", "B", "C", "K"] {
            let e = map.get(k).ok_or_else(|| syntax(1, 1, format!("missing matrix `{k}`")))?;
            ms.push(parse_with(e, &pr, &pr, Parser::matrix)?);
        }
        let [a, b, c, k]: [Vec<Vec<MPoly>>; 4] = ms.try_into().expect("four matrices");
        closed_loop(&a, &b, &c, &k, time, pr)?;
        Payload::Matrix { a, b, c, k }
    };

    let bbox = match map.get("box") {
        None => None,
        Some(e) => {
            let (w, c) = word(e);
            Some(PlotBox::parse(&w).map_err(|err| syntax(e.line, c, err.to_string()))?)
        }
    };
    let grid = match map.get("grid") {
        None => None,
        Some(e) => {
            let (w, c) = word(e);
            let n: usize = w.parse().map_err(|_| syntax(e.line, c, format!("grid must be an integer, got `{w}`")))?;
            Some(n)
        }
    };
    Ok(Problem { payload, time, params, bbox, grid })
}

fn render_matrix(m: &[Vec<MPoly>]) -> String {
    let rows: Vec<String> =
        m.iter().map(|row| format!("[{}]", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

/// Canonical text form; `parse_input(&render(p))` reproduces `p`.
pub fn render(p: &Problem) -> String {
    let mut out = String::new();
    let kind = match p.payload {
        Payload::Polynomial(_) => "polynomial",
        Payload::Matrix { .. } => "matrix",
    };
    let _ = writeln!(out, "kind: {kind}");
    let _ = writeln!(out, "time: {}", p.time);
    let _ = writeln!(out, "params: {}, {}", p.params[0], p.params[1]);
    match &p.payload {
        Payload::Polynomial(f) => {
            let _ = writeln!(out, "poly: {f}");
        }
        Payload::Matrix { a, b, c, k } => {
            for (name, m) in [("A", a), ("B", b), ("C", c), ("K", k)] {
                let _ = writeln!(out, "{name}: {}", render_matrix(m));
            }
        }
    }
    if let Some(b) = p.bbox {
        let _ = writeln!(out, "box: {}:{}:{}:{}", b.xmin, b.xmax, b.ymin, b.ymax);
    }
    if let Some(n) = p.grid {
        let _ = writeln!(out, "grid: {n}");
    }
    out
}
