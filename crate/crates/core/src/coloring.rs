//! Finite colorings of integer intervals.

use std::fmt;

use crate::error::{Error, Result};

/// A total map from `[lo, lo + len - 1]` into `{1, ..., r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    lo: i64,
    colors: Vec<u32>,
    r: u32,
}

impl Coloring {
    /// `colors[i]` is the color of `lo + i`; every color must lie in `1..=r`.
    pub fn new(lo: i64, colors: Vec<u32>, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("a coloring needs at least one color"));
        }
        if colors.is_empty() {
            return Err(Error::invalid("a coloring needs a nonempty domain"));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > r) {
            return Err(Error::invalid(format!("color {c} outside 1..={r}")));
        }
        Ok(Coloring { lo, colors, r })
    }

    /// Like [`Coloring::new`] with `r` taken as the largest color used.
    pub fn from_colors(lo: i64, colors: Vec<u32>) -> Result<Self> {
        let r = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(lo, colors, r)
    }

    pub fn from_fn(lo: i64, hi: i64, r: u32, f: impl Fn(i64) -> u32) -> Result<Self> {
        Coloring::new(lo, (lo..=hi).map(f).collect(), r)
    }

    /// Reads the one-line file format: space separated 1-based colors, the
    /// first of which colors `lo`.
    pub fn parse(text: &str, lo: i64) -> Result<Self> {
        let colors = text
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::invalid(format!("`{t}` is not a color index")))
            })
            .collect::<Result<Vec<_>>>()?;
        Coloring::from_colors(lo, colors)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.colors.len() as i64 - 1
    }

    pub fn num_colors(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn covers(&self, n: i64) -> bool {
        n >= self.lo && n <= self.hi()
    }

    pub fn color(&self, n: i64) -> Option<u32> {
        if self.covers(n) {
            Some(self.colors[(n - self.lo) as usize])
        } else {
            None
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Points of each color class, in increasing order; index `c - 1` holds class `c`.
    pub fn classes(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new(); self.r as usize];
        for (i, &c) in self.colors.iter().enumerate() {
            out[(c - 1) as usize].push(self.lo + i as i64);
        }
        out
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_and_classes() {
        let c = Coloring::parse("1 2 2 1", 1).unwrap();
        assert_eq!(c.hi(), 4);
        assert_eq!(c.color(4), Some(1));
        assert_eq!(c.color(5), None);
        assert_eq!(c.classes(), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(c.to_string(), "1 2 2 1");
    }

    #[test]
    fn invalid_colors() {
        assert!(Coloring::parse("1 0 2", 1).is_err());
        assert!(Coloring::new(0, vec![3], 2).is_err());
        assert!(Coloring::parse("", 1).is_err());
    }
}
