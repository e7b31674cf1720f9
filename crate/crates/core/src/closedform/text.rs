//! Canonical text form, e.g. `-5/16*zeta(4) + 7/8*zeta(3)*ln2 + zsk(2;3,-1)`,
//! and the JSON term list `[{"coeff": "-5/16", "atoms": ["zeta(4)"]}]`.

use rug::{Integer, Rational};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ConstAtom, ConstExpr};
use crate::error::{Error, Result};
use crate::exact::parse_composition;
use crate::reductions::SeriesSpec;

pub(super) fn atom_text(atom: &ConstAtom) -> String {
    match atom {
        ConstAtom::Zeta(s) => format!("zeta({s})"),
        ConstAtom::LnTwo => "ln2".to_string(),
        ConstAtom::LiHalf(p) => format!("Li({p};1/2)"),
        ConstAtom::MhsStar { n, s } => format!("zsk({n};{s})"),
        ConstAtom::Ln(r) => format!("ln({r})"),
        ConstAtom::Li { p, x } => format!("Li({p};{x})"),
        ConstAtom::Series(spec) => format!("series({})", spec.to_json()),
    }
}

/// Atom product with repeated atoms folded into powers: `zeta(3)^3*ln2^2`.
fn product_text(atoms: &[ConstAtom]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < atoms.len() {
        let mut j = i + 1;
        while j < atoms.len() && atoms[j] == atoms[i] {
            j += 1;
        }
        let base = atom_text(&atoms[i]);
        if j - i == 1 {
            parts.push(base);
        } else {
            parts.push(format!("{base}^{}", j - i));
        }
        i = j;
    }
    parts.join("*")
}

pub(super) fn render(e: &ConstExpr) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (coeff, atoms)) in e.terms().enumerate() {
        let negative = *coeff < 0;
        let magnitude = Rational::from(coeff.abs_ref());
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if atoms.is_empty() {
            out.push_str(&magnitude.to_string());
        } else if magnitude == 1 {
            out.push_str(&product_text(atoms));
        } else {
            out.push_str(&format!("{magnitude}*{}", product_text(atoms)));
        }
    }
    out
}

/// Parses the canonical text form. Parentheses, `^` powers, `*`, and `/` by
/// a rational literal are accepted; positions in errors are byte offsets.
pub fn parse_expr(text: &str) -> Result<ConstExpr> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(Error::parse(0, "empty expression"));
    }
    let e = p.sum()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(Error::parse(p.pos, format!("unexpected `{}`", p.rest_preview())));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn rest_preview(&self) -> String {
        self.src[self.pos..].chars().take(12).collect()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{c}`")))
        }
    }

    fn sum(&mut self) -> Result<ConstExpr> {
        self.skip_ws();
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let first = self.product()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat('+') {
                acc = acc + self.product()?;
            } else if self.eat('-') {
                acc = acc - self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<ConstExpr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc * self.factor()?;
            } else if self.eat('/') {
                self.skip_ws();
                let at = self.pos;
                let d = self.unsigned()?;
                if d == 0 {
                    return Err(Error::parse(at, "division by zero"));
                }
                acc = acc.scale(&Rational::from((Integer::from(1), d)));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<ConstExpr> {
        self.skip_ws();
        let start = self.pos;
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(')')?;
                inner
            }
            Some(c) if c.is_ascii_digit() => ConstExpr::rational(self.unsigned()?),
            Some(c) if c.is_ascii_alphabetic() => self.atom()?,
            Some(_) => return Err(Error::parse(start, format!("unexpected `{}`", self.rest_preview()))),
            None => return Err(Error::parse(start, "unexpected end of expression")),
        };
        if self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            let e = self.unsigned()?;
            let e = e
                .to_u32()
                .filter(|&e| e <= 64)
                .ok_or_else(|| Error::parse(at, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn unsigned(&mut self) -> Result<Integer> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        Ok(self.src[start..self.pos].parse::<Integer>().expect("digits parse"))
    }

    fn small(&mut self) -> Result<u32> {
        self.skip_ws();
        let at = self.pos;
        self.unsigned()?
            .to_u32()
            .ok_or_else(|| Error::parse(at, "integer argument too large"))
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        self.skip_ws();
        let num = self.unsigned()?;
        let mut q = Rational::from(num);
        if self.eat('/') {
            self.skip_ws();
            let at = self.pos;
            let d = self.unsigned()?;
            if d == 0 {
                return Err(Error::parse(at, "zero denominator"));
            }
            q /= d;
        }
        Ok(if negative { -q } else { q })
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<ConstExpr> {
        let start = self.pos;
        let name = self.ident();
        let domain = |e: Error| match e {
            Error::Domain(msg) => Error::parse(start, msg),
            other => other,
        };
        match name {
            "ln2" => Ok(ConstExpr::ln2()),
            "zeta" => {
                self.expect('(')?;
                let at = self.pos;
                let s = self.small()?;
                self.expect(')')?;
                if s < 2 {
                    return Err(Error::parse(at, format!("zeta({s}) diverges")));
                }
                Ok(ConstExpr::zeta(s))
            }
            "ln" => {
                self.expect('(')?;
                let r = self.rational()?;
                self.expect(')')?;
                ConstExpr::ln(&r).map_err(domain)
            }
            "Li" => {
                self.expect('(')?;
                let p = self.small()?;
                self.expect(';')?;
                let x = self.rational()?;
                self.expect(')')?;
                ConstExpr::li(p, &x).map_err(domain)
            }
            "zsk" => {
                self.expect('(')?;
                let n = self.small()?;
                self.expect(';')?;
                let body_start = self.pos;
                let close = self.src[body_start..]
                    .find(')')
                    .ok_or_else(|| Error::parse(body_start, "unterminated zsk("))?;
                let body = &self.src[body_start..body_start + close];
                let s = parse_composition(body).map_err(|e| match e {
                    // Token index -> byte offset of that token in the body.
                    Error::Parse { position, message } => {
                        let offset = body.split(',').take(position).map(|t| t.len() + 1).sum::<usize>();
                        Error::parse(body_start + offset, message)
                    }
                    other => other,
                })?;
                self.pos = body_start + close + 1;
                if s.is_empty() {
                    return Err(Error::parse(body_start, "zsk needs a nonempty composition"));
                }
                Ok(ConstExpr::mhs(u64::from(n), s))
            }
            "series" => {
                self.expect('(')?;
                self.skip_ws();
                let body_start = self.pos;
                let end = json_object_end(self.src, body_start)?;
                let spec = SeriesSpec::from_json(&self.src[body_start..end])
                    .map_err(|e| Error::parse(body_start, format!("bad series spec: {e}")))?;
                self.pos = end;
                self.expect(')')?;
                Ok(ConstExpr::series(spec))
            }
            "" => Err(Error::parse(start, "expected an atom")),
            other => Err(Error::parse(start, format!("unknown atom `{other}`"))),
        }
    }
}

/// Byte offset just past the JSON object starting at `start`.
fn json_object_end(src: &str, start: usize) -> Result<usize> {
    let bytes = src.as_bytes();
    if bytes.get(start) != Some(&b'{') {
        return Err(Error::parse(start, "expected `{`"));
    }
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    for (i, &b) in bytes.iter().enumerate().skip(start) {
        if in_string {
            match (escaped, b) {
                (true, _) => escaped = false,
                (false, b'\\') => escaped = true,
                (false, b'"') => in_string = false,
                _ => {}
            }
            continue;
        }
        match b {
            b'"' => in_string = true,
            b'{' | b'[' => depth += 1,
            b'}' | b']' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i + 1);
                }
            }
            _ => {}
        }
    }
    Err(Error::parse(start, "unterminated JSON object"))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    atoms: Vec<String>,
}

impl Serialize for ConstExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (coeff, atoms) in self.terms() {
            seq.serialize_element(&TermJson {
                coeff: coeff.to_string(),
                atoms: atoms.iter().map(atom_text).collect(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ConstExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut out = ConstExpr::zero();
        for t in terms {
            let coeff: Rational = t.coeff.trim().parse().map_err(D::Error::custom)?;
            let mut term = ConstExpr::rational(coeff);
            for a in &t.atoms {
                term = term * parse_expr(a).map_err(D::Error::custom)?;
            }
            out = out + term;
        }
        Ok(out)
    }
}
