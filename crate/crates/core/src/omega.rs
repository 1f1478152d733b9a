//! Terms built from infinite atoms, iterated stars `S_k`, `+` and `·`.
//!
//! Equality is decided through [`CanonicalForm`]: stars are pushed down to
//! the atoms (they fix naturals and commute with `+` and `·`), so a term
//! becomes an integer polynomial in the indeterminates `S_j(a)`. Atoms are
//! treated as free commuting indeterminates, which is the right notion for
//! identities that must hold for every choice of hypernaturals.
//!
//! The height of an atom is 1 and `S_k` adds `k`, so the height of a term is
//! one more than the deepest star level occurring in its canonical form, and
//! 0 for pure naturals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OmegaTerm {
    Nat(u64),
    Atom(String),
    /// `S_k(t)` with `k ≥ 1`.
    Star(Box<OmegaTerm>, u32),
    Sum(Box<OmegaTerm>, Box<OmegaTerm>),
    Prod(Box<OmegaTerm>, Box<OmegaTerm>),
}

impl OmegaTerm {
    pub fn nat(n: u64) -> Self {
        OmegaTerm::Nat(n)
    }

    pub fn atom(name: &str) -> Self {
        OmegaTerm::Atom(name.to_string())
    }

    /// `S_k(t)`: the identity for `k = 0`, and naturals are fixed.
    pub fn star(t: OmegaTerm, k: u32) -> Self {
        match t {
            _ if k == 0 => t,
            OmegaTerm::Nat(n) => OmegaTerm::Nat(n),
            OmegaTerm::Star(inner, j) => OmegaTerm::Star(inner, j + k),
            other => OmegaTerm::Star(Box::new(other), k),
        }
    }

    pub fn sum(a: OmegaTerm, b: OmegaTerm) -> Self {
        OmegaTerm::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: OmegaTerm, b: OmegaTerm) -> Self {
        OmegaTerm::Prod(Box::new(a), Box::new(b))
    }

    pub fn parse(text: &str) -> Result<Self> {
        TermParser { src: text.as_bytes(), pos: 0 }.parse()
    }

    pub fn canonical(&self) -> CanonicalForm {
        match self {
            OmegaTerm::Nat(n) => CanonicalForm::constant(BigInt::from(*n)),
            OmegaTerm::Atom(a) => CanonicalForm::indet(a, 0),
            OmegaTerm::Star(t, k) => t.canonical().shift(*k),
            OmegaTerm::Sum(a, b) => &a.canonical() + &b.canonical(),
            OmegaTerm::Prod(a, b) => &a.canonical() * &b.canonical(),
        }
    }

    /// Height read off the canonical form.
    pub fn height(&self) -> u32 {
        self.canonical().height()
    }

    /// Height computed on the syntax tree: naturals 0, atoms 1, stars add
    /// their index to non-natural arguments, sums and products take the max.
    /// Agrees with [`Self::height`] because terms have no subtraction.
    pub fn structural_height(&self) -> u32 {
        match self {
            OmegaTerm::Nat(_) => 0,
            OmegaTerm::Atom(_) => 1,
            OmegaTerm::Star(t, k) => match t.structural_height() {
                0 => 0,
                h => h + k,
            },
            OmegaTerm::Sum(a, b) | OmegaTerm::Prod(a, b) => a.structural_height().max(b.structural_height()),
        }
    }

    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            OmegaTerm::Nat(_) => {}
            OmegaTerm::Atom(a) => out.push(a.clone()),
            OmegaTerm::Star(t, _) => t.collect_atoms(out),
            OmegaTerm::Sum(a, b) | OmegaTerm::Prod(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }
}

impl fmt::Display for OmegaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaTerm::Nat(n) => write!(f, "{n}"),
            OmegaTerm::Atom(a) => write!(f, "{a}"),
            OmegaTerm::Star(t, k) => write!(f, "S{k}({t})"),
            OmegaTerm::Sum(a, b) => {
                write!(f, "{a} + ")?;
                match **b {
                    OmegaTerm::Sum(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
            OmegaTerm::Prod(a, b) => {
                match **a {
                    OmegaTerm::Sum(..) => write!(f, "({a})")?,
                    _ => write!(f, "{a}")?,
                }
                write!(f, "*")?;
                match **b {
                    OmegaTerm::Sum(..) | OmegaTerm::Prod(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
        }
    }
}

/// Indeterminate `S_depth(atom)`.
pub type Indet = (String, u32);

type Mono = BTreeMap<Indet, u32>;

/// Integer polynomial in the indeterminates `S_j(a)`; the empty monomial is the constant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    terms: BTreeMap<Mono, BigInt>,
}

impl CanonicalForm {
    pub fn zero() -> Self {
        CanonicalForm::default()
    }

    pub fn constant(n: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let n = n.into();
        if !n.is_zero() {
            terms.insert(Mono::new(), n);
        }
        CanonicalForm { terms }
    }

    pub fn indet(atom: &str, depth: u32) -> Self {
        let mut m = Mono::new();
        m.insert((atom.to_string(), depth), 1);
        CanonicalForm { terms: BTreeMap::from([(m, BigInt::one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// No indeterminates: a plain integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Mono::new()).cloned(),
            _ => None,
        }
    }

    pub fn constant_part(&self) -> BigInt {
        self.terms.get(&Mono::new()).cloned().unwrap_or_default()
    }

    /// Coefficient of one monomial, given as `(atom, depth, exponent)` factors.
    pub fn coefficient(&self, factors: &[(&str, u32, u32)]) -> BigInt {
        let m: Mono = factors.iter().map(|&(a, d, e)| ((a.to_string(), d), e)).collect();
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Coefficient of the single indeterminate `S_depth(atom)`.
    pub fn linear_coefficient(&self, atom: &str, depth: u32) -> BigInt {
        self.coefficient(&[(atom, depth, 1)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<(Indet, u32)>, &BigInt)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.iter().map(|(k, &e)| (k.clone(), e)).collect(), c))
    }

    /// Apply `S_k`: every depth grows by `k`, constants are fixed.
    pub fn shift(&self, k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        CanonicalForm {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let m2 = m.iter().map(|((a, d), &e)| ((a.clone(), d + k), e)).collect();
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    pub fn max_depth(&self) -> Option<u32> {
        self.terms.keys().flat_map(|m| m.keys().map(|(_, d)| *d)).max()
    }

    pub fn min_depth(&self) -> Option<u32> {
        self.terms.keys().flat_map(|m| m.keys().map(|(_, d)| *d)).min()
    }

    pub fn height(&self) -> u32 {
        self.max_depth().map_or(0, |d| d + 1)
    }

    /// Some coefficient is negative, so this is a formal difference rather
    /// than a value in the hypernaturals.
    pub fn has_negative(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// `α ♡ β` on canonical forms.
    pub fn heart(&self, other: &CanonicalForm) -> CanonicalForm {
        self + &other.shift(self.height())
    }

    /// `α ◊ β` on canonical forms.
    pub fn diamond(&self, other: &CanonicalForm) -> CanonicalForm {
        self * &other.shift(self.height())
    }

    fn insert(&mut self, m: Mono, c: BigInt) {
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

impl Add for &CanonicalForm {
    type Output = CanonicalForm;
    fn add(self, rhs: &CanonicalForm) -> CanonicalForm {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &CanonicalForm {
    type Output = CanonicalForm;
    fn neg(self) -> CanonicalForm {
        CanonicalForm { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &CanonicalForm {
    type Output = CanonicalForm;
    fn sub(self, rhs: &CanonicalForm) -> CanonicalForm {
        self + &(-rhs)
    }
}

impl Mul for &CanonicalForm {
    type Output = CanonicalForm;
    fn mul(self, rhs: &CanonicalForm) -> CanonicalForm {
        let mut out = CanonicalForm::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m = m1.clone();
                for (k, e) in m2 {
                    *m.entry(k.clone()).or_insert(0) += e;
                }
                out.insert(m, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Mono, &BigInt)> = self.terms.iter().collect();
        let degree = |m: &Mono| m.values().sum::<u32>();
        entries.sort_by(|a, b| degree(b.0).cmp(&degree(a.0)).then_with(|| a.0.cmp(b.0)));
        for (i, (m, c)) in entries.into_iter().enumerate() {
            let body: Vec<String> = m
                .iter()
                .map(|((a, d), e)| {
                    let base = if *d == 0 { a.clone() } else { format!("S{d}({a})") };
                    if *e == 1 { base } else { format!("{base}^{e}") }
                })
                .collect();
            let mag = c.abs();
            let text = if body.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                body.join("*")
            } else {
                format!("{mag}*{}", body.join("*"))
            };
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{text}")?,
                (0, true) => write!(f, "-{text}")?,
                (_, false) => write!(f, " + {text}")?,
                (_, true) => write!(f, " - {text}")?,
            }
        }
        Ok(())
    }
}

pub fn heart(a: &OmegaTerm, b: &OmegaTerm) -> OmegaTerm {
    OmegaTerm::sum(a.clone(), OmegaTerm::star(b.clone(), a.height()))
}

pub fn diamond(a: &OmegaTerm, b: &OmegaTerm) -> OmegaTerm {
    OmegaTerm::prod(a.clone(), OmegaTerm::star(b.clone(), a.height()))
}

pub fn term_eq(s: &OmegaTerm, t: &OmegaTerm) -> bool {
    s.canonical() == t.canonical()
}

/// `(S_{h₁}(α₁), …, S_{h_k}(α_k))` where `hᵢ` is the total height of the
/// terms before `αᵢ`.
pub fn tensorized(terms: &[OmegaTerm]) -> Result<Vec<OmegaTerm>> {
    if terms.len() < 2 {
        return Err(Error::pre("at least two terms are required"));
    }
    let mut shift = 0;
    Ok(terms
        .iter()
        .map(|t| {
            let out = OmegaTerm::star(t.clone(), shift);
            shift += t.height();
            out
        })
        .collect())
}

/// `β` is natural, or every star level in `β` reaches `h(α)`, so that
/// `β = S_{h(α)}(γ)` for some `γ`.
pub fn tensor_pair_r(a: &OmegaTerm, b: &OmegaTerm) -> bool {
    let cb = b.canonical();
    match cb.min_depth() {
        None => true,
        Some(d) => d >= a.height(),
    }
}

struct TermParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn parse(mut self) -> Result<OmegaTerm> {
        self.skip_ws();
        if self.pos == self.src.len() {
            return Err(Error::parse(0, "empty term"));
        }
        let t = self.expr()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(Error::parse(self.pos, format!("unexpected `{}`", self.src[self.pos] as char)));
        }
        Ok(t)
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<OmegaTerm> {
        let mut t = self.product()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            t = OmegaTerm::sum(t, self.product()?);
        }
        Ok(t)
    }

    fn product(&mut self) -> Result<OmegaTerm> {
        let mut t = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            t = OmegaTerm::prod(t, self.factor()?);
        }
        Ok(t)
    }

    fn digits(&mut self) -> Option<(usize, &str)> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")))
    }

    fn factor(&mut self) -> Result<OmegaTerm> {
        let next = self.peek();
        let start = self.pos;
        match next {
            None => Err(Error::parse(self.pos, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let t = self.expr()?;
                self.expect(b')')?;
                Ok(t)
            }
            Some(c) if c.is_ascii_digit() => {
                let (at, text) = self.digits().expect("digit present");
                text.parse::<u64>()
                    .map(OmegaTerm::Nat)
                    .map_err(|_| Error::parse(at, "natural number too large"))
            }
            Some(b'S') => {
                self.pos += 1;
                let here = self.pos;
                let (at, text) = self
                    .digits()
                    .ok_or_else(|| Error::parse(here, "expected the star index after `S`"))?;
                let k: u32 = text.parse().map_err(|_| Error::parse(at, "star index too large"))?;
                if k == 0 {
                    return Err(Error::parse(at, "star index must be at least 1"));
                }
                self.expect(b'(')?;
                let t = self.expr()?;
                self.expect(b')')?;
                Ok(OmegaTerm::star(t, k))
            }
            Some(c) if c.is_ascii_lowercase() => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_lowercase()
                        || self.src[self.pos].is_ascii_digit()
                        || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match name {
                    "heart" | "diamond" => {
                        self.expect(b'(')?;
                        let a = self.expr()?;
                        self.expect(b',')?;
                        let b = self.expr()?;
                        self.expect(b')')?;
                        Ok(if name == "heart" { heart(&a, &b) } else { diamond(&a, &b) })
                    }
                    _ => Ok(OmegaTerm::atom(name)),
                }
            }
            Some(c) => Err(Error::parse(self.pos, format!("unexpected `{}`", c as char))),
        }
    }
}

/// Row-by-column coefficients of the table built from `coeffs`: `3(ℓ−1)`
/// columns for `ℓ` coefficients, column `j = 3t + s` following the
/// three-case rule.
pub fn table(coeffs: &[u64]) -> Vec<Vec<u64>> {
    let l = coeffs.len();
    let cols = 3 * l.saturating_sub(1);
    let c = |i: usize| coeffs[i - 1];
    let mut rows = vec![vec![0u64; cols]; l];
    for j in 1..=cols {
        let t = (j - 1) / 3;
        let s = j - 3 * t;
        for (i0, row) in rows.iter_mut().enumerate() {
            let i = i0 + 1;
            row[j - 1] = match s {
                1 => c(t + 1),
                2 if i == t + 1 => c(t + 1) + c(t + 2),
                2 if i == t + 2 => 0,
                2 => c(t + 1),
                _ => c(t + 1) + c(t + 2),
            };
        }
    }
    rows
}

/// The companion vector of a table: `c_{t+1}` for `s = 1, 2` and
/// `c_{t+1} + c_{t+2}` for `s = 3`.
pub fn companion(coeffs: &[u64]) -> Vec<u64> {
    let cols = 3 * coeffs.len().saturating_sub(1);
    (1..=cols)
        .map(|j| {
            let t = (j - 1) / 3;
            match j - 3 * t {
                3 => coeffs[t] + coeffs[t + 1],
                _ => coeffs[t],
            }
        })
        .collect()
}

/// `Σ_k row[k]·S_k(a)` with column `k` (1-based) read as star level `k − 1`.
fn row_term(row: &[u64], atom: &str) -> OmegaTerm {
    row.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(k, &x)| {
            let s = OmegaTerm::star(OmegaTerm::atom(atom), k as u32);
            if x == 1 { s } else { OmegaTerm::prod(OmegaTerm::Nat(x), s) }
        })
        .reduce(OmegaTerm::sum)
        .unwrap_or(OmegaTerm::Nat(0))
}

/// One coefficient identity: `c_k = plus₁ + … − minus₁ − … = total`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerLine {
    pub k: usize,
    pub plus: Vec<BigInt>,
    pub minus: Vec<BigInt>,
    pub total: BigInt,
}

impl fmt::Display for LedgerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plus: Vec<String> = self.plus.iter().map(|x| x.to_string()).collect();
        write!(f, "c{} = {}", self.k, plus.join(" + "))?;
        for m in &self.minus {
            write!(f, " - {m}")?;
        }
        write!(f, " = {}", self.total)
    }
}

/// Symbolic check that `Σ cᵢξᵢ − Σ dⱼηⱼ = 0` for the tabular solution of
/// `Σ cᵢxᵢ = Σ dⱼyⱼ` and that the `ξᵢ, ηⱼ` are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableVerification {
    pub c: Vec<u64>,
    pub d: Vec<u64>,
    pub beta_rows: Vec<OmegaTerm>,
    pub gamma_rows: Vec<OmegaTerm>,
    pub beta: OmegaTerm,
    pub gamma: OmegaTerm,
    pub xi: Vec<OmegaTerm>,
    pub eta: Vec<OmegaTerm>,
    pub ledger: Vec<LedgerLine>,
    pub zero_check: bool,
    pub distinct_check: bool,
    /// One side has a single coefficient, so its table is empty.
    pub degenerate: bool,
}

pub const TABLE_ATOM: &str = "a";

pub fn verify_sum_zero_tables(c: &[u64], d: &[u64]) -> Result<TableVerification> {
    if c.is_empty() || d.is_empty() {
        return Err(Error::pre("both sides need at least one coefficient"));
    }
    if c.len() + d.len() < 3 {
        return Err(Error::pre("at least three variables are required"));
    }
    if c.iter().chain(d).any(|&x| x == 0) {
        return Err(Error::pre("coefficients must be positive"));
    }
    let (sc, sd): (u128, u128) = (c.iter().map(|&x| x as u128).sum(), d.iter().map(|&x| x as u128).sum());
    if sc != sd {
        return Err(Error::pre(format!("the coefficient sums differ ({sc} vs {sd})")));
    }
    let beta_rows: Vec<OmegaTerm> = table(c).iter().map(|r| row_term(r, TABLE_ATOM)).collect();
    let gamma_rows: Vec<OmegaTerm> = table(d).iter().map(|r| row_term(r, TABLE_ATOM)).collect();
    let beta = row_term(&companion(c), TABLE_ATOM);
    let gamma = row_term(&companion(d), TABLE_ATOM);
    let xi: Vec<OmegaTerm> = beta_rows.iter().map(|b| heart(b, &gamma)).collect();
    let eta: Vec<OmegaTerm> = gamma_rows.iter().map(|g| heart(&beta, g)).collect();
    let xi_cf: Vec<CanonicalForm> = xi.iter().map(OmegaTerm::canonical).collect();
    let eta_cf: Vec<CanonicalForm> = eta.iter().map(OmegaTerm::canonical).collect();

    let mut total = CanonicalForm::zero();
    for (ci, x) in c.iter().zip(&xi_cf) {
        total = &total + &(&CanonicalForm::constant(*ci) * x);
    }
    for (dj, y) in d.iter().zip(&eta_cf) {
        total = &total - &(&CanonicalForm::constant(*dj) * y);
    }

    let columns = 3 * (c.len() + d.len() - 2);
    let ledger = (1..=columns)
        .map(|k| {
            let depth = (k - 1) as u32;
            let plus: Vec<BigInt> = c
                .iter()
                .zip(&xi_cf)
                .map(|(&ci, x)| BigInt::from(ci) * x.linear_coefficient(TABLE_ATOM, depth))
                .collect();
            let minus: Vec<BigInt> = d
                .iter()
                .zip(&eta_cf)
                .map(|(&dj, y)| BigInt::from(dj) * y.linear_coefficient(TABLE_ATOM, depth))
                .collect();
            let total = plus.iter().sum::<BigInt>() - minus.iter().sum::<BigInt>();
            LedgerLine { k, plus, minus, total }
        })
        .collect();

    let all: Vec<&CanonicalForm> = xi_cf.iter().chain(&eta_cf).collect();
    let distinct_check = all
        .iter()
        .enumerate()
        .all(|(i, x)| all[i + 1..].iter().all(|y| x != y));

    Ok(TableVerification {
        c: c.to_vec(),
        d: d.to_vec(),
        beta_rows,
        gamma_rows,
        beta,
        gamma,
        xi,
        eta,
        ledger,
        zero_check: total.is_zero(),
        distinct_check,
        degenerate: c.len() == 1 || d.len() == 1,
    })
}

/// Items of the heart/diamond identity list that are term identities. Item 10
/// is an inequality and item 17 only holds up to ultrafilter equivalence.
pub const IDENTITY_ITEMS: [u32; 15] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16];

/// Inputs for one round of identity checks: four terms and a natural.
#[derive(Clone, Debug)]
pub struct IdentityInputs {
    pub alpha: OmegaTerm,
    pub beta: OmegaTerm,
    pub gamma: OmegaTerm,
    pub delta: OmegaTerm,
    pub n: u64,
}

/// Checks one identity item on the given inputs. `None` means the item's
/// side condition fails for these inputs, so there is nothing to check.
///
/// Items 8 and 9 require `h(α) ≥ 1`: for a natural `α` the star does not
/// raise the height and the identity fails. Items 15 and 16 use the
/// two-element index set with `α₁ = α`, `α₂ = β`, `β₁ = γ`, `β₂ = δ`.
pub fn check_identity(item: u32, x: &IdentityInputs) -> Option<bool> {
    let (a, b, g) = (&x.alpha, &x.beta, &x.gamma);
    let n = OmegaTerm::nat(x.n);
    let h = |t: &OmegaTerm| t.height();
    let sum = |s: &OmegaTerm, t: &OmegaTerm| OmegaTerm::sum(s.clone(), t.clone());
    let prod = |s: &OmegaTerm, t: &OmegaTerm| OmegaTerm::prod(s.clone(), t.clone());
    Some(match item {
        1 => term_eq(&heart(a, &n), &sum(a, &n)) && term_eq(&heart(&n, a), &sum(a, &n)),
        2 => term_eq(&diamond(a, &n), &prod(a, &n)) && term_eq(&diamond(&n, a), &prod(a, &n)),
        3 => term_eq(&heart(a, &heart(b, g)), &heart(&heart(a, b), g)),
        4 => term_eq(&diamond(a, &diamond(b, g)), &diamond(&diamond(a, b), g)),
        5 => term_eq(
            &diamond(&heart(a, b), g),
            &sum(&diamond(a, &OmegaTerm::star(g.clone(), h(b))), &OmegaTerm::star(diamond(b, g), h(a))),
        ),
        6 => term_eq(
            &diamond(g, &heart(a, b)),
            &sum(&diamond(g, a), &diamond(g, &OmegaTerm::star(b.clone(), h(a)))),
        ),
        7 => term_eq(&diamond(g, &sum(a, b)), &sum(&diamond(g, a), &diamond(g, b))),
        8 | 9 if h(a) == 0 => return None,
        8 => term_eq(&heart(&OmegaTerm::star(a.clone(), 1), b), &OmegaTerm::star(heart(a, b), 1)),
        9 => term_eq(&diamond(&OmegaTerm::star(a.clone(), 1), b), &OmegaTerm::star(diamond(a, b), 1)),
        11 => {
            let (ca, cb, cn) = (a.canonical(), b.canonical(), CanonicalForm::constant(x.n));
            let base = ca.heart(&cb);
            base == (&ca + &cn).heart(&(&cb - &cn)) && base == (&ca - &cn).heart(&(&cb + &cn))
        }
        12 => h(&heart(a, b)) == h(a) + h(b),
        13 => h(&diamond(a, b)) == h(a) + h(b),
        14 if !(h(a) == h(b) && h(b) == h(&sum(a, b))) => return None,
        14 => term_eq(&diamond(&sum(a, b), g), &sum(&diamond(a, g), &diamond(b, g))),
        15 | 16 if !(h(a) == h(b)) => return None,
        15 if h(&sum(a, b)) != h(a) => return None,
        15 => term_eq(&heart(&sum(a, b), &sum(g, &x.delta)), &sum(&heart(a, g), &heart(b, &x.delta))),
        16 if h(&prod(a, b)) != h(a) => return None,
        16 => term_eq(&diamond(&prod(a, b), &prod(g, &x.delta)), &prod(&diamond(a, g), &diamond(b, &x.delta))),
        _ => return None,
    })
}
