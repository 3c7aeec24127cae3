//! Exact formal linear combinations indexed by sentences.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sentence::{Alphabet, Composition, Sentence};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    QSym,
    NSym,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::QSym => "QSym",
            Side::NSym => "NSym",
        })
    }
}

/// DI is the dual immaculate basis, RSDI its row-strict analogue; IM and RSIM are
/// the immaculate and row-strict immaculate bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    M,
    F,
    DI,
    RSDI,
    H,
    E,
    R,
    IM,
    RSIM,
}

impl BasisTag {
    pub const ALL: [BasisTag; 9] =
        [BasisTag::M, BasisTag::F, BasisTag::DI, BasisTag::RSDI, BasisTag::H, BasisTag::E, BasisTag::R, BasisTag::IM, BasisTag::RSIM];

    pub fn side(self) -> Side {
        use BasisTag::*;
        match self {
            M | F | DI | RSDI => Side::QSym,
            H | E | R | IM | RSIM => Side::NSym,
        }
    }

    pub fn name(self) -> &'static str {
        use BasisTag::*;
        match self {
            M => "M",
            F => "F",
            DI => "DI",
            RSDI => "RSDI",
            H => "H",
            E => "E",
            R => "R",
            IM => "IM",
            RSIM => "RSIM",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        BasisTag::ALL.into_iter().find(|t| t.name() == name).ok_or_else(|| Error::UnknownTag(name.into()))
    }

    /// Image of the basis under psi.
    pub fn psi_partner(self) -> Self {
        use BasisTag::*;
        match self {
            DI => RSDI,
            RSDI => DI,
            H => E,
            E => H,
            IM => RSIM,
            RSIM => IM,
            other => other,
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Finite map key -> nonzero scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Scalar) -> Self {
        let mut l = Self::new();
        l.add_term(k, c);
        l
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn get(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Linear extension of `f`.
    pub fn flat_map<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<T: IntoIterator<Item = (K, Scalar)>>(iter: T) -> Self {
        let mut out = LinComb::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

pub type Terms = LinComb<Sentence>;

/// An element of QSym or NSym written in a single basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    tag: BasisTag,
    alphabet: Alphabet,
    terms: Terms,
}

impl Expr {
    pub fn zero(tag: BasisTag, alphabet: &Alphabet) -> Self {
        Expr { tag, alphabet: alphabet.clone(), terms: Terms::new() }
    }

    pub fn basis(tag: BasisTag, alphabet: &Alphabet, s: Sentence) -> Self {
        Expr { tag, alphabet: alphabet.clone(), terms: Terms::single(s, Scalar::one()) }
    }

    pub fn from_terms(tag: BasisTag, alphabet: &Alphabet, terms: Terms) -> Self {
        Expr { tag, alphabet: alphabet.clone(), terms }
    }

    pub fn tag(&self) -> BasisTag {
        self.tag
    }

    pub fn side(&self) -> Side {
        self.tag.side()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn coef(&self, s: &Sentence) -> Scalar {
        self.terms.get(s)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn compatible(&self, other: &Expr) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(self.alphabet.as_string(), other.alphabet.as_string()));
        }
        if self.tag != other.tag {
            return Err(Error::TagMismatch(self.tag.to_string(), other.tag.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Expr) -> Result<Expr> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        terms.add_scaled(&other.terms, &Scalar::one());
        Ok(Expr { terms, ..self.clone() })
    }

    pub fn sub(&self, other: &Expr) -> Result<Expr> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Expr {
        Expr { tag: self.tag, alphabet: self.alphabet.clone(), terms: self.terms.scaled(c) }
    }

    pub fn with_terms(&self, tag: BasisTag, terms: Terms) -> Expr {
        Expr { tag, alphabet: self.alphabet.clone(), terms }
    }

    /// Errors unless every coefficient is an integer.
    pub fn ensure_integral(self, context: &str) -> Result<Expr> {
        if let Some((_, c)) = self.terms.iter().find(|(_, c)| !c.is_integer()) {
            return Err(Error::NonIntegral { coef: c.to_string(), context: context.into() });
        }
        Ok(self)
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(s, c)| (format!("{}[{}]", self.tag, self.alphabet.render(s)), c)), "0")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(s, c)| JsonTerm { sentence: self.alphabet.render(s), coef: c.to_string() })
            .collect();
        serde_json::to_value(JsonExpr { tag: self.tag.to_string(), terms }).expect("plain data serializes")
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Expr> {
        Parser { src: text, pos: 0, alphabet }.expr()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize)]
struct JsonExpr {
    tag: String,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize)]
struct JsonTerm {
    sentence: String,
    coef: String,
}

fn render_coef(c: &Scalar) -> String {
    let a = c.abs();
    if a.is_one() {
        String::new()
    } else {
        format!("{a}*")
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>, zero: &str) -> String {
    let mut out = String::new();
    for (i, (body, c)) in terms.enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&render_coef(c));
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push_str(zero);
    }
    out
}

/// Coproduct output: a combination of pairs of basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorExpr {
    pub tags: (BasisTag, BasisTag),
    pub alphabet: Alphabet,
    pub terms: LinComb<(Sentence, Sentence)>,
}

impl TensorExpr {
    pub fn render(&self) -> String {
        let a = &self.alphabet;
        render_terms(
            self.terms.iter().map(|((l, r), c)| {
                (format!("{}[{}] @ {}[{}]", self.tags.0, a.render(l), self.tags.1, a.render(r)), c)
            }),
            "",
        )
    }

    pub fn coef(&self, l: &Sentence, r: &Sentence) -> Scalar {
        self.terms.get(&(l.clone(), r.clone()))
    }

    pub fn uncolor(&self) -> UncoloredTensor {
        UncoloredTensor {
            tags: self.tags,
            terms: self.terms.map_keys(|(l, r)| (l.word_lengths(), r.word_lengths())),
        }
    }
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Classical QSym/NSym element indexed by compositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncoloredExpr {
    pub tag: BasisTag,
    pub terms: LinComb<Composition>,
}

impl UncoloredExpr {
    pub fn new(tag: BasisTag, pairs: impl IntoIterator<Item = (Vec<usize>, i64)>) -> Self {
        UncoloredExpr { tag, terms: pairs.into_iter().map(|(c, n)| (Composition(c), int(n))).collect() }
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(c, k)| (format!("{}{}", self.tag, c), k)), "0")
    }
}

impl fmt::Display for UncoloredExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncoloredTensor {
    pub tags: (BasisTag, BasisTag),
    pub terms: LinComb<(Composition, Composition)>,
}

impl UncoloredTensor {
    pub fn render(&self) -> String {
        render_terms(
            self.terms.iter().map(|((l, r), c)| (format!("{}{} @ {}{}", self.tags.0, l, self.tags.1, r), c)),
            "",
        )
    }
}

/// Replace each index by its word lengths.
pub fn uncolor(e: &Expr) -> UncoloredExpr {
    UncoloredExpr { tag: e.tag(), terms: e.terms().map_keys(Sentence::word_lengths) }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut tag: Option<BasisTag> = None;
        let mut terms = Terms::new();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let mut sign = int(1);
        if self.eat('-') {
            sign = int(-1);
        } else {
            self.eat('+');
        }
        loop {
            self.skip_ws();
            let start = self.pos;
            let (t, s, c) = self.term()?;
            match tag {
                None => tag = Some(t),
                Some(prev) if prev != t => {
                    self.pos = start;
                    return Err(Error::TagMismatch(prev.to_string(), t.to_string()));
                }
                _ => {}
            }
            terms.add_term(s, c * &sign);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => sign = int(1),
                Some('-') => sign = int(-1),
                Some(ch) => return self.err(format!("expected '+' or '-', found {ch:?}")),
            }
            self.pos += 1;
        }
        Ok(Expr { tag: tag.expect("at least one term"), alphabet: self.alphabet.clone(), terms })
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            self.src[start..self.pos].parse().ok()
        }
    }

    fn term(&mut self) -> Result<(BasisTag, Sentence, Scalar)> {
        let mut coef = Scalar::one();
        if let Some(n) = self.number() {
            let mut c = Scalar::from_integer(n);
            if self.eat('/') {
                match self.number() {
                    Some(d) if !d.is_zero() => c /= Scalar::from_integer(d),
                    _ => return self.err("expected a non-zero denominator"),
                }
            }
            self.skip_ws();
            if !self.eat('*') {
                return self.err("expected '*' after coefficient");
            }
            self.skip_ws();
            coef = c;
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_uppercase()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a basis tag");
        }
        let tag = match BasisTag::parse(&self.src[start..self.pos]) {
            Ok(t) => t,
            Err(e) => {
                self.pos = start;
                return Err(e);
            }
        };
        if !self.eat('[') {
            return self.err("expected '['");
        }
        let body_start = self.pos;
        let Some(len) = self.src[self.pos..].find(']') else {
            return self.err("missing ']'");
        };
        let body = &self.src[body_start..body_start + len];
        self.pos = body_start + len + 1;
        let s = if body.trim().is_empty() {
            Sentence::empty()
        } else {
            self.alphabet.sentence(body).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: body_start + pos, msg },
                other => other,
            })?
        };
        Ok((tag, s, coef))
    }
}
