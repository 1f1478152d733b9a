//! Finite and eventually periodic sets of naturals (zero included).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Strictly increasing list of naturals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSet(Vec<u64>);

impl FiniteSet {
    pub fn new(items: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        FiniteSet(v)
    }

    /// Accepts `1,2,3`, `{1,2,3}` or whitespace separated values.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let items = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::invalid(format!("`{t}` is not a natural number")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteSet::new(items))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn smallest(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    /// `n + self`, or `None` on overflow.
    pub fn shifted(&self, n: u64) -> Option<FiniteSet> {
        self.0
            .iter()
            .map(|&x| x.checked_add(n))
            .collect::<Option<Vec<_>>>()
            .map(FiniteSet)
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromIterator<u64> for FiniteSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        FiniteSet::new(iter)
    }
}

/// Eventually periodic set: below `threshold` membership is read from
/// `prefix`, from `threshold` on it is `n mod period ∈ residues`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicSet {
    period: u64,
    residues: BTreeSet<u64>,
    threshold: u64,
    prefix: BTreeSet<u64>,
}

impl PeriodicSet {
    pub fn new(
        period: u64,
        residues: impl IntoIterator<Item = u64>,
        threshold: u64,
        prefix: impl IntoIterator<Item = u64>,
    ) -> Result<Self> {
        if period == 0 {
            return Err(Error::invalid("period must be at least 1"));
        }
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        let prefix: BTreeSet<u64> = prefix.into_iter().collect();
        if let Some(r) = residues.iter().find(|&&r| r >= period) {
            return Err(Error::invalid(format!("residue {r} is not below the period {period}")));
        }
        if let Some(x) = prefix.iter().find(|&&x| x >= threshold) {
            return Err(Error::invalid(format!(
                "prefix element {x} is not below the threshold {threshold}"
            )));
        }
        Ok(PeriodicSet { period, residues, threshold, prefix })
    }

    /// Purely periodic set `{n : n mod period ∈ residues}`.
    pub fn periodic(period: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        PeriodicSet::new(period, residues, 0, [])
    }

    pub fn naturals() -> Self {
        PeriodicSet::periodic(1, [0]).expect("valid")
    }

    pub fn from_finite(set: &FiniteSet) -> Self {
        let t = set.largest().map_or(0, |m| m + 1);
        PeriodicSet::new(1, [], t, set.iter()).expect("valid")
    }

    /// Reads `p=<int>; residues={..}; t=<int>; prefix={..}`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut period = None;
        let mut residues = None;
        let mut threshold = None;
        let mut prefix = None;
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("expected key=value, found `{part}`")))?;
            let value = value.trim();
            let num = |v: &str| {
                v.parse::<u64>()
                    .map_err(|_| Error::invalid(format!("`{v}` is not a natural number")))
            };
            match key.trim() {
                "p" => period = Some(num(value)?),
                "t" => threshold = Some(num(value)?),
                "residues" => residues = Some(FiniteSet::parse(value)?),
                "prefix" => prefix = Some(FiniteSet::parse(value)?),
                other => return Err(Error::invalid(format!("unknown key `{other}`"))),
            }
        }
        let period = period.ok_or_else(|| Error::invalid("missing `p=`"))?;
        PeriodicSet::new(
            period,
            residues.unwrap_or_default().iter(),
            threshold.unwrap_or(0),
            prefix.unwrap_or_default().iter(),
        )
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn prefix(&self) -> &BTreeSet<u64> {
        &self.prefix
    }

    pub fn contains(&self, n: u64) -> bool {
        if n < self.threshold {
            self.prefix.contains(&n)
        } else {
            self.residues.contains(&(n % self.period))
        }
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    /// Elements in `[lo, hi]`.
    pub fn window(&self, lo: u64, hi: u64) -> FiniteSet {
        FiniteSet((lo..=hi).filter(|&n| self.contains(n)).collect())
    }
}

impl fmt::Display for PeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<u64>| {
            s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "p={}; residues={{{}}}; t={}; prefix={{{}}}",
            self.period,
            join(&self.residues),
            self.threshold,
            join(&self.prefix)
        )
    }
}
