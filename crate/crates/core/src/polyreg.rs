//! Criteria and transforms for partition regularity of nonlinear polynomials.
//!
//! No complete decision procedure is known for nonlinear equations, so every
//! checker here is one-sided and answers [`PrStatus::Unknown`] whenever its
//! hypotheses fail. A definite status always carries a [`Justification`]
//! that [`check_verdict`] re-verifies from scratch.
//!
//! Monomials are taken in presentation order (the order in which they were
//! written), which is how the reduct `xy + 4yz − 2t + yw ↦ y1 + 4y2 − 2y3 + y4`
//! lines up. Partition regularity of the reduct depends only on its
//! coefficient multiset, so the order never changes a verdict.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::rado::{blocking_prime, linear_pr, zero_sum_subset, LinearVerdict};

pub const MAX_MONOMIALS: usize = 16;
const MAX_EXCLUSIVE_SETS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrStatus {
    IprCertified,
    PrCertified,
    NotPrCertified,
    Unknown,
}

impl PrStatus {
    pub fn name(self) -> &'static str {
        match self {
            PrStatus::IprCertified => "IPR_certified",
            PrStatus::PrCertified => "PR_certified",
            PrStatus::NotPrCertified => "not_PR_certified",
            PrStatus::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    /// No certificate; `reason` says which hypothesis failed.
    None { reason: String },
    /// Partial degree one, one exclusive variable per monomial, and a zero-sum
    /// subset of the reduct's coefficients (at least three monomials).
    ExclusiveReduct { exclusive: Vec<String>, reduct: Poly, subset: Vec<String> },
    /// Homogeneous and the reduct has no zero-sum subset; `prime` blocks it.
    HomogeneousReduct { reduct: Poly, prime: u64 },
    /// A single homogeneous linear equation with a zero-sum subset.
    LinearZeroSum { subset: Vec<String> },
    /// `Π xᵢ^nᵢ − Π yⱼ^mⱼ` with equal exponent sums and at least three variables.
    ExponentSums { left: Vec<u32>, right: Vec<u32> },
    /// `Σ aᵢxᵢ·Q_{Fᵢ}(y₁, …, y_n)` built from an injectively regular linear form.
    Construction { linear: Poly, subsets: Vec<Vec<usize>>, n: usize },
    /// Product of a certified polynomial with one in disjoint variables.
    DisjointProduct { factor: Poly, cofactor: Poly, factor_verdict: Box<PrVerdict> },
    /// Factorisation into polynomials whose verdicts settle the product.
    Factors { factors: Vec<Poly>, verdicts: Vec<PrVerdict> },
    /// Reciprocal of a certified homogeneous polynomial.
    Reciprocal { source: Poly, source_verdict: Box<PrVerdict> },
}

impl Justification {
    /// Short descriptive tag for reports.
    pub fn tag(&self) -> &'static str {
        match self {
            Justification::None { .. } => "none",
            Justification::ExclusiveReduct { .. } => "exclusive-variable-reduct",
            Justification::HomogeneousReduct { .. } => "homogeneous-reduct-necessity",
            Justification::LinearZeroSum { .. } => "rado-single-equation",
            Justification::ExponentSums { .. } => "monomial-difference-exponent-sums",
            Justification::Construction { .. } => "exclusive-monomial-construction",
            Justification::DisjointProduct { .. } => "disjoint-product",
            Justification::Factors { .. } => "factor-reduction",
            Justification::Reciprocal { .. } => "reciprocal-transfer",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrVerdict {
    pub status: PrStatus,
    pub justification: Justification,
}

impl PrVerdict {
    pub fn unknown(reason: impl Into<String>) -> Self {
        PrVerdict {
            status: PrStatus::Unknown,
            justification: Justification::None { reason: reason.into() },
        }
    }

    fn certified(status: PrStatus, justification: Justification) -> Self {
        PrVerdict { status, justification }
    }
}

fn require_no_constant(p: &Poly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::pre("the zero polynomial is not an equation"));
    }
    if !p.constant_term().is_zero() {
        return Err(Error::pre(format!("`{p}` has a nonzero constant term")));
    }
    Ok(())
}

fn y(i: usize) -> String {
    format!("y{i}")
}

/// `Σ aᵢyᵢ` over the monomials of `p` in presentation order.
pub fn reduct(p: &Poly) -> Result<Poly> {
    require_no_constant(p)?;
    Ok(Poly::from_terms(
        p.terms()
            .iter()
            .enumerate()
            .map(|(i, (_, c))| (Monomial::var(&y(i + 1)), c.clone())),
    ))
}

/// For each monomial, the variables occurring in no other monomial.
pub fn exclusive_candidates(p: &Poly) -> Vec<Vec<String>> {
    let monos: Vec<&Monomial> = p.monomial_terms().map(|(m, _)| m).collect();
    monos
        .iter()
        .enumerate()
        .map(|(i, m)| {
            m.variables()
                .filter(|v| monos.iter().enumerate().all(|(j, o)| j == i || !o.contains(v)))
                .map(str::to_string)
                .collect()
        })
        .collect()
}

/// Every choice of one exclusive variable per monomial, listed in monomial
/// order; empty when some monomial has no exclusive variable.
pub fn exclusive_sets(p: &Poly) -> Result<Vec<Vec<String>>> {
    require_no_constant(p)?;
    if p.terms().len() > MAX_MONOMIALS {
        return Err(Error::bound(format!("more than {MAX_MONOMIALS} monomials")));
    }
    let cands = exclusive_candidates(p);
    let total = cands.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    match total {
        Some(0) => return Ok(Vec::new()),
        Some(t) if t <= MAX_EXCLUSIVE_SETS => {}
        _ => return Err(Error::bound("too many exclusive variable sets")),
    }
    let mut out: Vec<Vec<String>> = vec![Vec::new()];
    for c in &cands {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    Ok(out)
}

fn reduct_zero_subset(red: &Poly) -> Result<Option<Vec<String>>> {
    let vars: Vec<String> = red.terms().iter().map(|(m, _)| m.to_string()).collect();
    let coeffs: Vec<BigInt> = red.terms().iter().map(|(_, c)| c.clone()).collect();
    Ok(zero_sum_subset(&coeffs)?.map(|idx| idx.into_iter().map(|i| vars[i].clone()).collect()))
}

/// Injective regularity from exclusive variables and a regular reduct.
pub fn sufficient_ipr(p: &Poly) -> Result<PrVerdict> {
    require_no_constant(p)?;
    if p.max_partial_degree() != 1 {
        return Ok(PrVerdict::unknown("partial degree exceeds one"));
    }
    let k = p.terms().len();
    if k < 3 {
        return Ok(PrVerdict::unknown("fewer than three monomials"));
    }
    if k > MAX_MONOMIALS {
        return Ok(PrVerdict::unknown(format!("more than {MAX_MONOMIALS} monomials")));
    }
    let sets = exclusive_sets(p)?;
    let Some(exclusive) = sets.into_iter().next() else {
        return Ok(PrVerdict::unknown("no set of exclusive variables"));
    };
    let red = reduct(p)?;
    match reduct_zero_subset(&red)? {
        Some(subset) => Ok(PrVerdict::certified(
            PrStatus::IprCertified,
            Justification::ExclusiveReduct { exclusive, reduct: red, subset },
        )),
        None => Ok(PrVerdict::unknown("the reduct has no zero-sum subset")),
    }
}

/// Non-regularity of homogeneous polynomials whose reduct is not regular.
pub fn necessary_check(p: &Poly) -> Result<PrVerdict> {
    require_no_constant(p)?;
    if !p.is_homogeneous() {
        return Ok(PrVerdict::unknown("not homogeneous"));
    }
    let red = reduct(p)?;
    if red.terms().len() < 2 {
        return Ok(PrVerdict::unknown("a single monomial has no positive zeros"));
    }
    match linear_pr(&red)? {
        LinearVerdict::NotPr { prime } => Ok(PrVerdict::certified(
            PrStatus::NotPrCertified,
            Justification::HomogeneousReduct { reduct: red, prime },
        )),
        LinearVerdict::Pr { .. } => Ok(PrVerdict::unknown("the reduct has a zero-sum subset")),
    }
}

/// Runs the sufficient and necessary checkers and, for homogeneous linear
/// input, the single-equation criterion.
pub fn check(p: &Poly) -> Result<PrVerdict> {
    let suff = sufficient_ipr(p)?;
    if suff.status != PrStatus::Unknown {
        return Ok(suff);
    }
    let nec = necessary_check(p)?;
    if nec.status != PrStatus::Unknown {
        return Ok(nec);
    }
    if p.is_homogeneous_linear() && p.terms().len() >= 2 {
        if let LinearVerdict::Pr { subset } = linear_pr(p)? {
            return Ok(PrVerdict::certified(PrStatus::PrCertified, Justification::LinearZeroSum { subset }));
        }
    }
    Ok(suff)
}

/// `R = Σ aᵢxᵢ·Q_{Fᵢ}(y₁, …, y_n)` with `Q_∅ = 1` and `Q_F = Π_{j∈F} y_j`.
pub fn construct_3513(linear: &Poly, subsets: &[Vec<usize>], n: usize) -> Result<(Poly, PrVerdict)> {
    let lin = crate::rado::linear_coefficients(linear)?;
    let k = lin.len();
    if k < 3 {
        return Err(Error::pre("the linear form needs at least three variables"));
    }
    if subsets.len() != k {
        return Err(Error::pre(format!("expected {k} subsets, got {}", subsets.len())));
    }
    if n == 0 {
        return Err(Error::pre("n must be positive"));
    }
    for f in subsets {
        if let Some(j) = f.iter().find(|&&j| j == 0 || j > n) {
            return Err(Error::pre(format!("index {j} lies outside 1..={n}")));
        }
    }
    for (v, _) in &lin {
        if (1..=n).any(|j| *v == y(j)) {
            return Err(Error::pre(format!("variable `{v}` clashes with the fresh variables y1..y{n}")));
        }
    }
    if !linear_pr(linear)?.is_pr() {
        return Err(Error::pre(format!("`{linear}` is not partition regular")));
    }
    let r = Poly::from_terms(lin.iter().zip(subsets).map(|((v, a), f)| {
        let ys: BTreeSet<usize> = f.iter().copied().collect();
        let m = Monomial::from_pairs(
            std::iter::once((v.clone(), 1)).chain(ys.into_iter().map(|j| (y(j), 1))),
        );
        (m, a.clone())
    }));
    let verdict = PrVerdict::certified(
        PrStatus::IprCertified,
        Justification::Construction { linear: linear.clone(), subsets: subsets.to_vec(), n },
    );
    Ok((r, verdict))
}

/// `P·Q` for variable-disjoint factors. The product is certified when either
/// factor is certified injectively regular by [`sufficient_ipr`].
pub fn multiply_disjoint(p: &Poly, q: &Poly) -> Result<(Poly, PrVerdict)> {
    let shared: Vec<String> = p.variables().intersection(&q.variables()).cloned().collect();
    if !shared.is_empty() {
        return Err(Error::pre(format!("shared variables: {}", shared.join(", "))));
    }
    let product = p * q;
    for (factor, cofactor) in [(p, q), (q, p)] {
        if factor.is_zero() || !factor.constant_term().is_zero() {
            continue;
        }
        let v = sufficient_ipr(factor)?;
        if v.status == PrStatus::IprCertified {
            let verdict = PrVerdict::certified(
                PrStatus::IprCertified,
                Justification::DisjointProduct {
                    factor: factor.clone(),
                    cofactor: cofactor.clone(),
                    factor_verdict: Box::new(v),
                },
            );
            return Ok((product, verdict));
        }
    }
    Ok((product, PrVerdict::unknown("no factor is certified")))
}

fn factor_verdict(f: &Poly) -> Result<PrVerdict> {
    if f.is_zero() {
        return Err(Error::pre("a factor is zero"));
    }
    if !f.constant_term().is_zero() {
        if f.degree() == 0 {
            return Ok(PrVerdict::certified(
                PrStatus::NotPrCertified,
                Justification::None { reason: "nonzero constant".into() },
            ));
        }
        return Ok(PrVerdict::unknown("nonzero constant term"));
    }
    if f.terms().len() == 1 {
        return Ok(PrVerdict::certified(
            PrStatus::NotPrCertified,
            Justification::None { reason: "a single monomial has no positive zeros".into() },
        ));
    }
    check(f)
}

/// Verifies a user-supplied factorisation and reads off the product's status:
/// injectively regular if some factor is, not regular if no factor is.
pub fn factor_reduce(p: &Poly, factors: &[Poly]) -> Result<(Vec<PrVerdict>, PrVerdict)> {
    if factors.is_empty() {
        return Err(Error::pre("no factors given"));
    }
    let product = factors.iter().skip(1).fold(factors[0].clone(), |acc, f| &acc * f);
    if product != *p {
        return Err(Error::pre(format!("the factors multiply to `{product}`, not `{p}`")));
    }
    let verdicts: Vec<PrVerdict> = factors.iter().map(factor_verdict).collect::<Result<_>>()?;
    let status = if verdicts.iter().any(|v| v.status == PrStatus::IprCertified) {
        PrStatus::IprCertified
    } else if verdicts.iter().all(|v| v.status == PrStatus::NotPrCertified) {
        PrStatus::NotPrCertified
    } else {
        PrStatus::Unknown
    };
    let overall = if status == PrStatus::Unknown {
        PrVerdict::unknown("no factor settles the product")
    } else {
        PrVerdict::certified(
            status,
            Justification::Factors { factors: factors.to_vec(), verdicts: verdicts.clone() },
        )
    };
    Ok((verdicts, overall))
}

/// `Π xᵢ^{dᵢ} · P(1/x₁, …, 1/x_n)` with `dᵢ` the partial degree of `xᵢ`.
///
/// This is `Π xᵢ^d · P(1/x)` (with `d` the total degree) divided by the
/// monomial `Π xᵢ^{d−dᵢ}`, which that product always contains. The two agree
/// whenever every variable reaches partial degree `d`, as in `x + y − z` and
/// `x² − y²`; dividing out the monomial makes the operation an involution on
/// polynomials not divisible by any variable.
pub fn reciprocal(p: &Poly) -> Result<(Poly, PrVerdict)> {
    if p.is_zero() {
        return Err(Error::pre("the zero polynomial has no reciprocal"));
    }
    if !p.is_homogeneous() {
        return Err(Error::pre(format!("`{p}` is not homogeneous")));
    }
    let vars = p.variables();
    let degs: BTreeMap<&str, u32> = vars.iter().map(|v| (v.as_str(), p.partial_degree(v))).collect();
    let q = Poly::from_terms(p.terms().iter().map(|(m, c)| {
        let m2 = Monomial::from_pairs(
            degs.iter()
                .map(|(v, &d)| (v.to_string(), d - m.exponent(v)))
                .filter(|(_, e)| *e > 0),
        );
        (m2, c.clone())
    }));
    let verdict = if p.constant_term().is_zero() {
        let v = sufficient_ipr(p)?;
        if v.status == PrStatus::IprCertified {
            PrVerdict::certified(
                PrStatus::IprCertified,
                Justification::Reciprocal { source: p.clone(), source_verdict: Box::new(v) },
            )
        } else {
            PrVerdict::unknown("the source polynomial is not certified")
        }
    } else {
        PrVerdict::unknown("the source polynomial is constant")
    };
    Ok((q, verdict))
}

/// `Π xᵢ^nᵢ − Π yⱼ^mⱼ` together with its verdict: certified when the exponent
/// sums agree and there are at least three variables (with only `x` and `y`
/// every zero has `x = y`).
pub fn exp_sum_ipr(left: &[u32], right: &[u32]) -> Result<(Poly, PrVerdict)> {
    if left.is_empty() || right.is_empty() {
        return Err(Error::pre("both sides need at least one exponent"));
    }
    if left.iter().chain(right).any(|&e| e == 0) {
        return Err(Error::pre("exponents must be positive"));
    }
    let side = |name: &str, exps: &[u32]| {
        Monomial::from_pairs(exps.iter().enumerate().map(|(i, &e)| (format!("{name}{}", i + 1), e)))
    };
    let p = Poly::from_terms([
        (side("x", left), BigInt::one()),
        (side("y", right), -BigInt::one()),
    ]);
    let (sl, sr): (u64, u64) = (left.iter().map(|&e| e as u64).sum(), right.iter().map(|&e| e as u64).sum());
    let verdict = if sl != sr {
        PrVerdict::unknown(format!("exponent sums differ ({sl} vs {sr})"))
    } else if left.len() + right.len() < 3 {
        PrVerdict::unknown("two variables only admit the diagonal zeros x = y")
    } else {
        PrVerdict::certified(
            PrStatus::IprCertified,
            Justification::ExponentSums { left: left.to_vec(), right: right.to_vec() },
        )
    };
    Ok((p, verdict))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    NegateVars,
    Power(u32),
}

/// Substituted polynomial plus the number domain on which regularity transfers.
pub fn transform(p: &Poly, kind: TransformKind) -> Result<(Poly, &'static str)> {
    let (map, domain): (BTreeMap<String, Poly>, _) = match kind {
        TransformKind::NegateVars => (
            p.variables().into_iter().map(|v| { let x = -Poly::var(&v); (v, x) }).collect(),
            "integers",
        ),
        TransformKind::Power(z) => {
            if z == 0 {
                return Err(Error::pre("the power must be at least 1"));
            }
            (
                p.variables().into_iter().map(|v| { let x = Poly::var(&v).pow(z); (v, x) }).collect(),
                "positive reals",
            )
        }
    };
    Ok((p.substitute(&map), domain))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvarianceFlags {
    pub translation_invariant: bool,
    pub dilation_invariant: bool,
    pub additive: bool,
    pub multiplicative: bool,
}

/// Identity-level invariance checks.
pub fn invariance(p: &Poly) -> Result<InvarianceFlags> {
    require_no_constant(p)?;
    let vars = p.variables();
    let t = (0..)
        .map(|i| if i == 0 { "t".to_string() } else { format!("t{i}") })
        .find(|name| !vars.contains(name))
        .expect("some fresh name");
    let shift: BTreeMap<String, Poly> = vars
        .iter()
        .map(|v| (v.clone(), &Poly::var(v) + &Poly::var(&t)))
        .collect();
    let translation_invariant = (&p.substitute(&shift) - p).is_zero();
    let terms = p.terms();
    let multiplicative = terms.len() == 2
        && terms[0].0.degree() == terms[1].0.degree()
        && (&terms[0].1 + &terms[1].1).is_zero()
        && (terms[0].1.is_one() || terms[1].1.is_one());
    Ok(InvarianceFlags {
        translation_invariant,
        dilation_invariant: p.is_homogeneous(),
        additive: p.is_homogeneous_linear(),
        multiplicative,
    })
}

/// Re-derives a verdict's certificate for `p` without trusting the producer.
pub fn check_verdict(p: &Poly, v: &PrVerdict) -> bool {
    check_justification(p, v).unwrap_or(false)
}

fn check_justification(p: &Poly, v: &PrVerdict) -> Result<bool> {
    Ok(match (&v.status, &v.justification) {
        (PrStatus::Unknown, _) => true,
        (_, Justification::None { reason }) => {
            // Only the two trivial non-regularity facts are accepted without data.
            v.status == PrStatus::NotPrCertified
                && ((reason == "nonzero constant" && p.degree() == 0 && !p.is_zero())
                    || (p.terms().len() == 1 && p.constant_term().is_zero()))
        }
        (PrStatus::IprCertified, Justification::ExclusiveReduct { exclusive, reduct: red, subset }) => {
            let monos: Vec<&Monomial> = p.terms().iter().map(|(m, _)| m).collect();
            p.constant_term().is_zero()
                && p.max_partial_degree() == 1
                && monos.len() >= 3
                && exclusive.len() == monos.len()
                && exclusive.iter().enumerate().all(|(i, x)| {
                    monos.iter().enumerate().all(|(j, m)| m.contains(x) == (i == j))
                })
                && reduct(p)? == *red
                && !subset.is_empty()
                && {
                    let mut seen = BTreeSet::new();
                    subset.iter().all(|s| seen.insert(s.clone()))
                        && subset
                            .iter()
                            .map(|s| red.coefficient(&Monomial::var(s)))
                            .try_fold(BigInt::zero(), |acc, c| (!c.is_zero()).then(|| acc + c))
                            .is_some_and(|s| s.is_zero())
                }
        }
        (PrStatus::NotPrCertified, Justification::HomogeneousReduct { reduct: red, prime }) => {
            let coeffs: Vec<BigInt> = red.terms().iter().map(|(_, c)| c.clone()).collect();
            p.is_homogeneous()
                && p.constant_term().is_zero()
                && reduct(p)? == *red
                && blocking_prime(&coeffs)? == Some(*prime)
        }
        (PrStatus::PrCertified, Justification::LinearZeroSum { subset }) => {
            p.is_homogeneous_linear()
                && !subset.is_empty()
                && subset.iter().collect::<BTreeSet<_>>().len() == subset.len()
                && subset
                    .iter()
                    .map(|s| p.coefficient(&Monomial::var(s)))
                    .try_fold(BigInt::zero(), |acc, c| (!c.is_zero()).then(|| acc + c))
                    .is_some_and(|s| s.is_zero())
        }
        (PrStatus::IprCertified, Justification::ExponentSums { left, right }) => {
            let (q, w) = exp_sum_ipr(left, right)?;
            q == *p && w.status == PrStatus::IprCertified
        }
        (PrStatus::IprCertified, Justification::Construction { linear, subsets, n }) => {
            let (r, _) = construct_3513(linear, subsets, *n)?;
            r == *p
        }
        (PrStatus::IprCertified, Justification::DisjointProduct { factor, cofactor, factor_verdict }) => {
            factor.variables().is_disjoint(&cofactor.variables())
                && &(factor * cofactor) == p
                && factor_verdict.status == PrStatus::IprCertified
                && check_justification(factor, factor_verdict)?
        }
        (status, Justification::Factors { factors, verdicts }) => {
            if factors.is_empty() || factors.len() != verdicts.len() {
                return Ok(false);
            }
            let product = factors.iter().skip(1).fold(factors[0].clone(), |acc, f| &acc * f);
            let each = factors
                .iter()
                .zip(verdicts)
                .map(|(f, v)| check_justification(f, v))
                .collect::<Result<Vec<bool>>>()?;
            product == *p
                && each.into_iter().all(|b| b)
                && match status {
                    PrStatus::IprCertified => verdicts.iter().any(|v| v.status == PrStatus::IprCertified),
                    PrStatus::NotPrCertified => verdicts.iter().all(|v| v.status == PrStatus::NotPrCertified),
                    _ => false,
                }
        }
        (PrStatus::IprCertified, Justification::Reciprocal { source, source_verdict }) => {
            let (q, _) = reciprocal(source)?;
            q == *p
                && source_verdict.status == PrStatus::IprCertified
                && check_justification(source, source_verdict)?
        }
        _ => false,
    })
}
