//! Finite embeddability, function-family mappability and Banach density on
//! finite and eventually periodic sets of naturals.

use std::fmt;

use num_bigint::BigInt;

use crate::arith::{lcm_u64, Rational};
use crate::error::{Error, Result};
use crate::search::contains_ap;
use crate::sets::{FiniteSet, PeriodicSet};

/// Least `n ≥ 0` with `n + F ⊆ B`.
pub fn fe_shift(f: &FiniteSet, b: &FiniteSet) -> Result<Option<u64>> {
    let lo = f.smallest().ok_or_else(|| Error::pre("the set to embed is empty"))?;
    Ok(b.iter()
        .filter(|&x| x >= lo)
        .map(|x| x - lo)
        .find(|&n| f.iter().all(|y| b.contains(y + n))))
}

/// Decides `A ≤_fe B` exactly.
///
/// The shifts that embed `A ∩ [0, X]` shrink as `X` grows, and from the
/// threshold of `B` on they are a union of residue classes modulo the period
/// of `B`. A decreasing chain of such nonempty sets never becomes empty, so
/// `A ≤_fe B` holds iff one shift `n` carries all of `A` into `B`. Such an `n`
/// can be taken below `t_B + L` with `L = lcm(p_A, p_B)`, and `n + A ⊆ B`
/// only has to be checked below `t_A + t_B + L`, past which both sides repeat
/// with period `L`. Finite `A` is covered by the same test.
pub fn fe_periodic(a: &PeriodicSet, b: &PeriodicSet) -> bool {
    let l = lcm_u64(a.period(), b.period());
    let horizon = a.threshold() + b.threshold() + l;
    let members: Vec<u64> = (0..horizon).filter(|&x| a.contains(x)).collect();
    (0..b.threshold() + l).any(|n| members.iter().all(|&x| b.contains(x + n)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub thick: bool,
    pub syndetic: bool,
    pub piecewise_syndetic: bool,
    pub finite: bool,
}

pub fn classify(a: &PeriodicSet) -> Classification {
    let tail = a.residues().len() as u64;
    Classification {
        thick: tail == a.period(),
        syndetic: tail > 0,
        piecewise_syndetic: tail > 0,
        finite: tail == 0,
    }
}

/// Banach density of an eventually periodic set: its residue density.
pub fn bd(a: &PeriodicSet) -> Rational {
    Rational::new(BigInt::from(a.residues().len()), BigInt::from(a.period()))
}

/// Largest share of `A` in a window of `len` consecutive naturals.
pub fn bd_window(a: &FiniteSet, len: u64) -> Result<Rational> {
    if len == 0 {
        return Err(Error::pre("the window length must be at least 1"));
    }
    let xs = a.as_slice();
    let mut best = 0usize;
    let mut hi = 0usize;
    for (lo, &start) in xs.iter().enumerate() {
        while hi < xs.len() && xs[hi] - start < len {
            hi += 1;
        }
        best = best.max(hi - lo);
    }
    Ok(Rational::new(BigInt::from(best), BigInt::from(len)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `n + m`, `m ≥ 0`.
    Translation,
    /// `n + m`, `m ≥ 1`.
    ProperTranslation,
    /// `m·n`, `m ≥ 1`.
    Homothety,
    /// `n^m`, `m ≥ 1`.
    Power,
    /// `m^n`, `m ≥ 2`.
    Exponential,
    /// `a·n + b`, `a ≥ 1`, `b ≥ 0`.
    Affinity,
    /// `a₀ + a₁n + … + a_d·n^d`, `a_d ≥ 1`.
    Polynomial(u32),
}

impl Family {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "translation" | "translations" => Family::Translation,
            "proper-translation" | "proper-translations" => Family::ProperTranslation,
            "homothety" | "homotheties" => Family::Homothety,
            "power" | "powers" => Family::Power,
            "exponential" | "exponentials" => Family::Exponential,
            "affinity" | "affinities" => Family::Affinity,
            other => match other.strip_prefix("polynomial") {
                Some(d) => Family::Polynomial(
                    d.trim_start_matches(['-', ':'])
                        .parse()
                        .map_err(|_| Error::invalid(format!("bad polynomial degree in `{other}`")))?,
                ),
                None => return Err(Error::invalid(format!("unknown family `{other}`"))),
            },
        })
    }

    pub fn name(self) -> String {
        match self {
            Family::Translation => "translation".into(),
            Family::ProperTranslation => "proper-translation".into(),
            Family::Homothety => "homothety".into(),
            Family::Power => "power".into(),
            Family::Exponential => "exponential".into(),
            Family::Affinity => "affinity".into(),
            Family::Polynomial(d) => format!("polynomial{d}"),
        }
    }

    pub fn param_names(self) -> Vec<String> {
        match self {
            Family::Affinity => vec!["a".into(), "b".into()],
            Family::Polynomial(d) => (0..=d).map(|i| format!("a{i}")).collect(),
            _ => vec!["m".into()],
        }
    }

    /// Least admissible value of each parameter.
    pub fn param_minimums(self) -> Vec<u64> {
        match self {
            Family::Translation => vec![0],
            Family::ProperTranslation | Family::Homothety | Family::Power => vec![1],
            Family::Exponential => vec![2],
            Family::Affinity => vec![1, 0],
            Family::Polynomial(d) => (0..=d).map(|i| u64::from(i == d)).collect(),
        }
    }

    /// `f_params(n)`, or `None` when the value exceeds 64 bits.
    pub fn eval(self, params: &[u64], n: u64) -> Option<u64> {
        match self {
            Family::Translation | Family::ProperTranslation => n.checked_add(params[0]),
            Family::Homothety => n.checked_mul(params[0]),
            Family::Power => n.checked_pow(u32::try_from(params[0]).ok()?),
            Family::Exponential => params[0].checked_pow(u32::try_from(n).ok()?),
            Family::Affinity => params[0].checked_mul(n)?.checked_add(params[1]),
            Family::Polynomial(_) => params
                .iter()
                .rev()
                .try_fold(0u64, |acc, &a| acc.checked_mul(n)?.checked_add(a)),
        }
    }

    /// `f(F)`, or `None` on overflow.
    pub fn image(self, params: &[u64], f: &FiniteSet) -> Option<FiniteSet> {
        f.iter().map(|x| self.eval(params, x)).collect::<Option<Vec<_>>>().map(FiniteSet::new)
    }
}

/// A family together with inclusive search ranges for its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub bounds: Vec<(u64, u64)>,
}

pub const MAX_PARAMETER_TUPLES: u128 = 100_000_000;

impl FamilySpec {
    /// Every parameter ranges over `[minimum, hi]`.
    pub fn uniform(family: Family, hi: u64) -> Self {
        let bounds = family.param_minimums().into_iter().map(|lo| (lo, hi.max(lo))).collect();
        FamilySpec { family, bounds }
    }

    pub fn new(family: Family, bounds: Vec<(u64, u64)>) -> Result<Self> {
        let mins = family.param_minimums();
        if bounds.len() != mins.len() {
            return Err(Error::invalid(format!(
                "the {} family takes {} parameters",
                family.name(),
                mins.len()
            )));
        }
        let bounds = bounds.into_iter().zip(mins).map(|((lo, hi), m)| (lo.max(m), hi)).collect();
        Ok(FamilySpec { family, bounds })
    }

    /// Reads `name=lo..hi` items separated by commas, e.g. `a=1..10,b=0..20`;
    /// parameters left out range over `[minimum, default_hi]`.
    pub fn parse_bounds(family: Family, text: &str, default_hi: u64) -> Result<Self> {
        let names = family.param_names();
        let mut bounds: Vec<(u64, u64)> =
            family.param_minimums().into_iter().map(|lo| (lo, default_hi.max(lo))).collect();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, range) = item
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("expected name=lo..hi, found `{item}`")))?;
            let idx = names
                .iter()
                .position(|n| n == name.trim())
                .ok_or_else(|| Error::invalid(format!("unknown parameter `{}`", name.trim())))?;
            let (lo, hi) = range
                .split_once("..")
                .ok_or_else(|| Error::invalid(format!("expected lo..hi, found `{range}`")))?;
            let num = |s: &str| {
                s.trim().parse::<u64>().map_err(|_| Error::invalid(format!("`{s}` is not a natural")))
            };
            bounds[idx] = (num(lo)?, num(hi)?);
        }
        FamilySpec::new(family, bounds)
    }

    pub fn tuple_count(&self) -> u128 {
        self.bounds
            .iter()
            .map(|&(lo, hi)| if hi < lo { 0 } else { (hi - lo) as u128 + 1 })
            .product()
    }

    /// Calls `visit` on parameter tuples in lexicographic order until it returns true.
    pub fn find_params(&self, mut visit: impl FnMut(&[u64]) -> bool) -> Result<Option<Vec<u64>>> {
        let count = self.tuple_count();
        if count == 0 {
            return Ok(None);
        }
        if count > MAX_PARAMETER_TUPLES {
            return Err(Error::bound(format!("{count} parameter tuples exceed {MAX_PARAMETER_TUPLES}")));
        }
        let mut cur: Vec<u64> = self.bounds.iter().map(|b| b.0).collect();
        loop {
            if visit(&cur) {
                return Ok(Some(cur));
            }
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return Ok(None);
                }
                i -= 1;
                if cur[i] < self.bounds[i].1 {
                    cur[i] += 1;
                    break;
                }
                cur[i] = self.bounds[i].0;
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .family
            .param_names()
            .iter()
            .zip(&self.bounds)
            .map(|(n, (lo, hi))| format!("{n}={lo}..{hi}"))
            .collect();
        write!(f, "{} {}", self.family.name(), parts.join(","))
    }
}

/// Lexicographically least in-bounds parameters with `f(F) ⊆ B`; `None`
/// only means no witness exists inside the bounds.
pub fn fmap_witness(f: &FiniteSet, b: &FiniteSet, spec: &FamilySpec) -> Result<Option<Vec<u64>>> {
    spec.find_params(|p| f.iter().all(|x| spec.family.eval(p, x).is_some_and(|y| b.contains(y))))
}

/// `A` contains an arithmetic progression of length `len`.
pub fn a_maximal_probe(a: &FiniteSet, len: usize) -> Result<bool> {
    if len == 0 {
        return Err(Error::pre("the progression length must be at least 1"));
    }
    Ok(contains_ap(a, len).is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityCounterexample {
    pub f: Vec<u64>,
    pub g: Vec<u64>,
    pub set: FiniteSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    /// `f, g, F` such that no in-bounds `h` has `h(F) ⊆ g(f(F))`.
    pub transitivity: Option<TransitivityCounterexample>,
    /// A sample `F` with no in-bounds `f` satisfying `f(F) ⊆ F`.
    pub reflexivity: Option<FiniteSet>,
    /// Pairs `(f, g)` skipped because `g(f(F))` overflowed.
    pub skipped_overflow: u64,
    pub pairs_checked: u64,
}

/// Searches the samples for violations of the two closure conditions that
/// make the mappability relation a pre-order. The `h` (or reflexive `f`) is
/// sought with each parameter at most the largest element of the target set.
pub fn wellstructured_probe(spec: &FamilySpec, samples: &[FiniteSet]) -> Result<ProbeReport> {
    let fam = spec.family;
    let target_spec = |max: u64| FamilySpec::uniform(fam, max);
    let mut report = ProbeReport { transitivity: None, reflexivity: None, skipped_overflow: 0, pairs_checked: 0 };
    for set in samples.iter().filter(|s| !s.is_empty()) {
        if report.reflexivity.is_none() {
            let max = set.largest().expect("nonempty");
            let hit = fmap_witness(set, set, &target_spec(max))?;
            if hit.is_none() {
                report.reflexivity = Some(set.clone());
            }
        }
        if report.transitivity.is_some() {
            continue;
        }
        let mut fs: Vec<Vec<u64>> = Vec::new();
        spec.find_params(|p| {
            fs.push(p.to_vec());
            false
        })?;
        'pairs: for f in &fs {
            let Some(ff) = fam.image(f, set) else {
                report.skipped_overflow += fs.len() as u64;
                continue;
            };
            for g in &fs {
                let Some(gff) = fam.image(g, &ff) else {
                    report.skipped_overflow += 1;
                    continue;
                };
                report.pairs_checked += 1;
                let max = gff.largest().expect("nonempty");
                if fmap_witness(set, &gff, &target_spec(max))?.is_none() {
                    report.transitivity = Some(TransitivityCounterexample {
                        f: f.clone(),
                        g: g.clone(),
                        set: set.clone(),
                    });
                    break 'pairs;
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(xs: &[u64]) -> FiniteSet {
        FiniteSet::new(xs.iter().copied())
    }

    #[test]
    fn shifts() {
        assert_eq!(fe_shift(&fin(&[1, 3]), &fin(&[2, 5])).unwrap(), None);
        assert_eq!(fe_shift(&fin(&[2, 5]), &fin(&[1, 3])).unwrap(), None);
        assert_eq!(fe_shift(&fin(&[1, 2]), &fin(&[1, 2, 3])).unwrap(), Some(0));
        assert_eq!(fe_shift(&fin(&[1]), &fin(&[7])).unwrap(), Some(6));
        assert!(fe_shift(&fin(&[]), &fin(&[7])).is_err());
    }

    #[test]
    fn periodic_embeddings() {
        let odds = PeriodicSet::periodic(2, [1]).unwrap();
        let evens = PeriodicSet::periodic(2, [0]).unwrap();
        assert!(fe_periodic(&odds, &evens));
        assert!(fe_periodic(&evens, &odds));
        assert!(!fe_periodic(&PeriodicSet::naturals(), &odds));
        assert!(fe_periodic(&PeriodicSet::periodic(4, [0]).unwrap(), &evens));
        // A point before the threshold can spoil the embedding.
        let a = PeriodicSet::new(2, [0], 3, [1]).unwrap();
        assert!(!fe_periodic(&a, &evens));
    }

    #[test]
    fn classification_and_density() {
        let evens = PeriodicSet::periodic(2, [0]).unwrap();
        let c = classify(&evens);
        assert!(c.syndetic && c.piecewise_syndetic && !c.thick && !c.finite);
        assert!(classify(&PeriodicSet::naturals()).thick);
        let f = PeriodicSet::new(1, [], 4, [1, 2, 3]).unwrap();
        let c = classify(&f);
        assert!(c.finite && !c.thick && !c.syndetic && !c.piecewise_syndetic);
        assert_eq!(bd(&evens), Rational::new(1.into(), 2.into()));
        assert_eq!(bd(&PeriodicSet::periodic(5, [0, 1, 2]).unwrap()), Rational::new(3.into(), 5.into()));
        assert_eq!(bd(&f), Rational::new(0.into(), 1.into()));
        assert_eq!(bd_window(&fin(&[1, 2, 3, 10]), 3).unwrap(), Rational::new(1.into(), 1.into()));
        assert_eq!(bd_window(&fin(&[0, 2, 4, 6]), 4).unwrap(), Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn family_witnesses() {
        let spec = FamilySpec::parse_bounds(Family::Affinity, "a=1..10,b=0..20", 0).unwrap();
        assert_eq!(fmap_witness(&fin(&[1, 2, 3]), &fin(&[5, 7, 9, 11]), &spec).unwrap(), Some(vec![2, 3]));
        let tr = FamilySpec::uniform(Family::Translation, 20);
        assert_eq!(fmap_witness(&fin(&[1]), &fin(&[7]), &tr).unwrap(), Some(vec![6]));
        assert_eq!(Family::Polynomial(2).eval(&[1, 0, 3], 2), Some(13));
        assert_eq!(Family::Exponential.eval(&[2], 70), None);
        assert_eq!(Family::parse("polynomial3").unwrap(), Family::Polynomial(3));
    }

    #[test]
    fn ap_probe() {
        let powers = FiniteSet::new((0..10).map(|k| 1u64 << k));
        assert!(!a_maximal_probe(&powers, 3).unwrap());
        assert!(a_maximal_probe(&FiniteSet::new((0..40).map(|k| 2 * k)), 5).unwrap());
    }

    #[test]
    fn probes() {
        let samples = vec![fin(&[1, 2]), fin(&[1, 3, 4])];
        let aff = wellstructured_probe(&FamilySpec::uniform(Family::Affinity, 4), &samples).unwrap();
        assert_eq!((aff.transitivity.clone(), aff.reflexivity.clone()), (None, None));
        let tr = wellstructured_probe(&FamilySpec::uniform(Family::Translation, 5), &samples).unwrap();
        assert_eq!((tr.transitivity, tr.reflexivity), (None, None));
        let exp = wellstructured_probe(&FamilySpec::uniform(Family::Exponential, 3), &[fin(&[1, 2])]).unwrap();
        assert!(exp.transitivity.is_some());
        assert!(exp.reflexivity.is_some());
    }
}
