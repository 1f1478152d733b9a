//! Multivariate polynomials with integer coefficients and named variables.
//!
//! A [`Poly`] is always in normal reduced form: no two stored terms share a
//! monomial and no stored coefficient is zero. Terms additionally remember the
//! order in which their monomials first appeared (the *presentation order*).
//! Equality and hashing ignore that order; printing, [`Poly::terms`] and
//! everything built on top of them (reducts, exclusive variable sets,
//! reciprocals) follow it.
//!
//! Grammar accepted by [`Poly::parse`]:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := integer | integer '*' factor ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' posint)?
//! var    := [a-z][a-z0-9_]*
//! ```
//!
//! Whitespace between tokens is ignored. Implicit multiplication is rejected.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A product of variables with positive exponents. The empty product is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial::from_pairs([(name.to_string(), 1)])
    }

    /// Builds a monomial, adding repeated exponents and dropping zero ones.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (String, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    /// Variables with their exponents, alphabetically.
    pub fn powers(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(v, e)| (v.as_str(), *e))
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(|v| v.as_str())
    }

    pub fn contains(&self, var: &str) -> bool {
        self.0.contains_key(var)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (v, e) in &other.0 {
            *m.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(m)
    }

    /// Graded order: higher total degree first, then lexicographic on exponent
    /// vectors with variables taken alphabetically (larger exponent first).
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let vars: BTreeSet<&String> = self.0.keys().chain(other.0.keys()).collect();
            for v in vars {
                let (a, b) = (self.exponent(v), other.exponent(v));
                if a != b {
                    return b.cmp(&a);
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Integer polynomial in normal reduced form.
#[derive(Clone, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::from_terms([(Monomial::one(), c.into())])
    }

    pub fn var(name: &str) -> Self {
        Poly::from_terms([(Monomial::var(name), BigInt::one())])
    }

    /// Collects like terms, keeping the position where each monomial first
    /// appeared and dropping anything that cancels to zero.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut out: Vec<(Monomial, BigInt)> = Vec::new();
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        for (m, c) in terms {
            match index.get(&m) {
                Some(&i) => out[i].1 += c,
                None => {
                    index.insert(m.clone(), out.len());
                    out.push((m, c));
                }
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).parse()
    }

    /// Terms in presentation order, including the constant term if nonzero.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    /// Non-constant terms in presentation order.
    pub fn monomial_terms(&self) -> impl Iterator<Item = &(Monomial, BigInt)> {
        self.terms.iter().filter(|(m, _)| !m.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// Alphabetically sorted variable set.
    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.variables().map(str::to_string))
            .collect()
    }

    /// Variables in order of first appearance.
    pub fn variables_in_order(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (m, _) in &self.terms {
            for v in m.variables() {
                if seen.insert(v.to_string()) {
                    out.push(v.to_string());
                }
            }
        }
        out
    }

    /// Total degree; the zero polynomial has degree 0 here.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn partial_degree(&self, var: &str) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    pub fn max_partial_degree(&self) -> u32 {
        self.variables()
            .iter()
            .map(|v| self.partial_degree(v))
            .max()
            .unwrap_or(0)
    }

    /// All monomials (constant included) have the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree exactly 1, constant term allowed.
    pub fn is_linear(&self) -> bool {
        self.degree() == 1
    }

    /// Linear with zero constant term.
    pub fn is_homogeneous_linear(&self) -> bool {
        !self.is_zero() && self.terms.iter().all(|(m, _)| m.degree() == 1)
    }

    /// Terms sorted by [`Monomial::graded_cmp`]; the order-independent normal form.
    pub fn normal_form(&self) -> Vec<(Monomial, BigInt)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| a.0.graded_cmp(&b.0).then_with(|| a.0.cmp(&b.0)));
        t
    }

    /// Same polynomial with terms in graded order.
    pub fn sorted(&self) -> Poly {
        Poly { terms: self.normal_form() }
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c * k)))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces each variable present in `map` by the given polynomial.
    pub fn substitute(&self, map: &BTreeMap<String, Poly>) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (v, e) in m.powers() {
                let base = map.get(v).cloned().unwrap_or_else(|| Poly::var(v));
                t = &t * &base.pow(e);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Renames variables; names missing from `map` stay as they are.
    pub fn rename(&self, map: &BTreeMap<String, String>) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let m2 = Monomial::from_pairs(
                m.powers()
                    .map(|(v, e)| (map.get(v).cloned().unwrap_or_else(|| v.to_string()), e)),
            );
            (m2, c.clone())
        }))
    }

    pub fn eval(&self, assignment: &BTreeMap<String, BigInt>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                let x = assignment
                    .get(v)
                    .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len() && self.normal_form() == other.normal_form()
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normal_form().hash(state);
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Poly::parse(s)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::from_terms(self.terms.iter().chain(rhs.terms.iter()).cloned())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::from_terms(self.terms.iter().flat_map(|(m1, c1)| {
            rhs.terms.iter().map(move |(m2, c2)| (m1.mul(m2), c1 * c2))
        }))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly> {
        if self.peek().is_none() {
            return Err(Error::parse(0, "empty input"));
        }
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * sign));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(ch) => {
                    return Err(Error::parse(
                        self.pos,
                        format!("expected '+' or '-', found '{}'", ch as char),
                    ))
                }
            }
            self.pos += 1;
        }
        Ok(Poly::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut factors = Vec::new();
        match self.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                coeff = self.integer()?;
                if self.peek() != Some(b'*') {
                    return Ok((Monomial::one(), coeff));
                }
                self.pos += 1;
                factors.push(self.factor()?);
            }
            Some(ch) if ch.is_ascii_lowercase() => factors.push(self.factor()?),
            Some(ch) => {
                return Err(Error::parse(
                    self.pos,
                    format!("expected a term, found '{}'", ch as char),
                ))
            }
            None => return Err(Error::parse(self.pos, "expected a term, found end of input")),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok((Monomial::from_pairs(factors), coeff))
    }

    fn factor(&mut self) -> Result<(String, u32)> {
        let name = self.var()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.integer()?;
            if e.is_zero() {
                return Err(Error::parse(at, "exponent must be at least 1"));
            }
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::parse(at, "exponent too large"))?;
            Ok((name, e))
        } else {
            Ok((name, 1))
        }
    }

    fn var(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(ch) if ch.is_ascii_lowercase() => self.pos += 1,
            Some(ch) => {
                return Err(Error::parse(
                    start,
                    format!("expected a variable, found '{}'", *ch as char),
                ))
            }
            None => return Err(Error::parse(start, "expected a variable, found end of input")),
        }
        while let Some(&ch) = self.src.get(self.pos) {
            if ch.is_ascii_lowercase() || ch.is_ascii_digit() || ch == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        if let Some(&ch) = self.src.get(self.pos) {
            if ch.is_ascii_alphabetic() || ch == b'_' {
                return Err(Error::parse(
                    self.pos,
                    "implicit multiplication is not allowed; use '*'",
                ));
            }
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("digits are ascii");
        Ok(s.parse().expect("digits parse as an integer"))
    }
}
