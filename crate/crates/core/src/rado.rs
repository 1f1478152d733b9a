//! Partition regularity of linear equations and systems.
//!
//! * [`columns_condition`] decides Rado's columns condition for an integer
//!   matrix and returns a certificate that [`verify_columns_certificate`]
//!   re-checks with exact rational arithmetic.
//! * [`linear_pr`] and [`blocking_prime`] handle a single homogeneous equation:
//!   it is partition regular exactly when some nonempty set of coefficients
//!   sums to zero, and otherwise a prime dividing no subset sum yields an
//!   `smod(p)` coloring without monochromatic solutions.
//! * [`affine_pr`] handles `Σ aᵢxᵢ + c = 0` with `c ≠ 0`.
//! * [`parametric_solution`] builds the two-parameter solution family
//!   `sᵢ = a + z·zᵢ·b` (`i ∈ J`), `sᵢ = m·b` (otherwise).
//!
//! # Columns condition search
//!
//! Call a nonempty set `B` of unused columns *admissible* when its column sum
//! lies in the span `V` of the columns already placed. Admissibility is
//! preserved when `V` grows, and if `B` is admissible and `B'` was admissible
//! before `B` was added, then `B' \ B` is admissible afterwards. Consequently,
//! starting from any zero-sum first block, greedily appending admissible
//! blocks reaches all columns whenever any valid ordering exists. The search
//! therefore only enumerates subsets for the first block and for each
//! subsequent step, working in the quotient by the current span.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{ext_gcd, is_prime, primes, rational_from_int, to_i128_bounded, Rational};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::Poly;

/// Largest column or coefficient count handled by the subset enumerations.
pub const MAX_SUBSET_ITEMS: usize = 20;

const INT_BITS: u64 = 96;

/// Ordered block partition of the columns witnessing the columns condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnsCertificate {
    /// Column indices (0-based) of each block, in order.
    pub blocks: Vec<Vec<usize>>,
    /// For block `t ≥ 1`, coefficients `(column, λ)` over columns of earlier
    /// blocks with `Σ λ·column = sum(block t)`. Entry 0 is empty.
    pub combinations: Vec<Vec<(usize, Rational)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnsVerdict {
    Satisfied(ColumnsCertificate),
    NotSatisfied,
}

impl ColumnsVerdict {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, ColumnsVerdict::Satisfied(_))
    }
}

/// Smallest (then lexicographically least) nonempty subset whose vectors sum
/// to zero, as a bit mask over `vecs`.
pub(crate) fn min_zero_subset(vecs: &[Vec<i128>]) -> Option<u32> {
    let n = vecs.len();
    assert!(n <= 24, "subset enumeration limited to 24 items");
    if n == 0 {
        return None;
    }
    let dim = vecs[0].len();
    let mut sum = vec![0i128; dim];
    let mut nonzero = 0usize;
    let mut mask = 0u32;
    let mut best: Option<u32> = None;
    for i in 1u64..(1u64 << n) {
        let bit = i.trailing_zeros() as usize;
        let adding = mask & (1 << bit) == 0;
        mask ^= 1 << bit;
        for (s, v) in sum.iter_mut().zip(&vecs[bit]) {
            if *v == 0 {
                continue;
            }
            let was = *s != 0;
            if adding {
                *s += v;
            } else {
                *s -= v;
            }
            match (was, *s != 0) {
                (false, true) => nonzero += 1,
                (true, false) => nonzero -= 1,
                _ => {}
            }
        }
        if nonzero == 0 && improves(mask, best) {
            best = Some(mask);
        }
    }
    best
}

fn improves(a: u32, best: Option<u32>) -> bool {
    match best {
        None => true,
        Some(b) => {
            let (pa, pb) = (a.count_ones(), b.count_ones());
            if pa != pb {
                return pa < pb;
            }
            let d = a ^ b;
            d != 0 && a & (d & d.wrapping_neg()) != 0
        }
    }
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

/// Reduced row echelon basis of a subspace of ℚ^m, used as a quotient map.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    fn insert(&mut self, v: &[Rational]) {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let lead = r[p].clone();
        for x in r.iter_mut() {
            *x /= &lead;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, r));
    }
}

/// Solves `Σ λⱼ·cols[j] = target` over ℚ, pivoting on columns in order and
/// setting free coefficients to zero.
pub(crate) fn span_solve(cols: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let m = target.len();
    let k = cols.len();
    let mut a: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..k {
        let Some(pr) = (r..m).find(|&i| !a[i][j].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let lead = a[r][j].clone();
        for x in a[r].iter_mut() {
            *x /= &lead;
        }
        for i in 0..m {
            if i != r && !a[i][j].is_zero() {
                let f = a[i][j].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(j);
        r += 1;
        if r == m {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut lambda = vec![Rational::zero(); k];
    for (i, &j) in pivots.iter().enumerate() {
        lambda[j] = a[i][k].clone();
    }
    Some(lambda)
}

fn int_columns(m: &IntMatrix) -> Result<Vec<Vec<i128>>> {
    (0..m.cols())
        .map(|j| {
            m.column(j)
                .iter()
                .map(|x| {
                    to_i128_bounded(x, INT_BITS)
                        .ok_or_else(|| Error::overflow("matrix entry too large for subset search"))
                })
                .collect()
        })
        .collect()
}

/// Decides the columns condition; at most [`MAX_SUBSET_ITEMS`] columns.
pub fn columns_condition(m: &IntMatrix) -> Result<ColumnsVerdict> {
    let n = m.cols();
    if n > MAX_SUBSET_ITEMS {
        return Err(Error::bound(format!(
            "{n} columns exceed the exhaustive search limit of {MAX_SUBSET_ITEMS}"
        )));
    }
    let ints = int_columns(m)?;
    let Some(first) = min_zero_subset(&ints) else {
        return Ok(ColumnsVerdict::NotSatisfied);
    };
    let cols_q: Vec<Vec<Rational>> = (0..n)
        .map(|j| m.column(j).iter().map(rational_from_int).collect())
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut used = first;
    let mut blocks = vec![mask_indices(first)];
    let mut basis = Echelon::default();
    for &c in &blocks[0] {
        basis.insert(&cols_q[c]);
    }
    while used != full {
        let rest: Vec<usize> = (0..n).filter(|c| used & (1 << c) == 0).collect();
        let residuals: Vec<Vec<Rational>> = rest.iter().map(|&c| basis.reduce(&cols_q[c])).collect();
        let in_span: Vec<usize> = rest
            .iter()
            .zip(&residuals)
            .filter(|(_, r)| r.iter().all(Zero::is_zero))
            .map(|(&c, _)| c)
            .collect();
        let block = if !in_span.is_empty() {
            in_span
        } else {
            let scaled = integer_scaled(&residuals)?;
            match min_zero_subset(&scaled) {
                None => return Ok(ColumnsVerdict::NotSatisfied),
                Some(mask) => mask_indices(mask).into_iter().map(|i| rest[i]).collect(),
            }
        };
        for &c in &block {
            used |= 1 << c;
            basis.insert(&cols_q[c]);
        }
        blocks.push(block);
    }
    let mut combinations = vec![Vec::new()];
    for t in 1..blocks.len() {
        let mut earlier: Vec<usize> = blocks[..t].iter().flatten().copied().collect();
        earlier.sort_unstable();
        let target = column_sum(&cols_q, &blocks[t]);
        let basis_cols: Vec<Vec<Rational>> = earlier.iter().map(|&c| cols_q[c].clone()).collect();
        let lambda = span_solve(&basis_cols, &target)
            .expect("block sum lies in the span by construction");
        combinations.push(
            earlier
                .into_iter()
                .zip(lambda)
                .filter(|(_, l)| !l.is_zero())
                .collect(),
        );
    }
    Ok(ColumnsVerdict::Satisfied(ColumnsCertificate { blocks, combinations }))
}

fn column_sum(cols: &[Vec<Rational>], block: &[usize]) -> Vec<Rational> {
    let dim = cols.first().map_or(0, Vec::len);
    let mut s = vec![Rational::zero(); dim];
    for &c in block {
        for (x, y) in s.iter_mut().zip(&cols[c]) {
            *x += y;
        }
    }
    s
}

fn integer_scaled(vs: &[Vec<Rational>]) -> Result<Vec<Vec<i128>>> {
    let mut l = BigInt::one();
    for x in vs.iter().flatten() {
        l = l.lcm(x.denom());
    }
    vs.iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    let y = x.numer() * (&l / x.denom());
                    to_i128_bounded(&y, INT_BITS)
                        .ok_or_else(|| Error::overflow("quotient coordinates too large"))
                })
                .collect()
        })
        .collect()
}

/// Independent re-check of a certificate with exact rational arithmetic.
pub fn verify_columns_certificate(m: &IntMatrix, cert: &ColumnsCertificate) -> bool {
    let n = m.cols();
    let mut seen = vec![false; n];
    for b in &cert.blocks {
        if b.is_empty() {
            return false;
        }
        for &c in b {
            if c >= n || seen[c] {
                return false;
            }
            seen[c] = true;
        }
    }
    if !seen.iter().all(|&s| s) || cert.combinations.len() != cert.blocks.len() {
        return false;
    }
    let sum_int = |b: &[usize]| -> Vec<BigInt> {
        (0..m.rows())
            .map(|i| b.iter().map(|&c| m.get(i, c).clone()).sum())
            .collect()
    };
    if sum_int(&cert.blocks[0]).iter().any(|x| !x.is_zero()) {
        return false;
    }
    for t in 1..cert.blocks.len() {
        let earlier: Vec<usize> = cert.blocks[..t].iter().flatten().copied().collect();
        let mut acc = vec![Rational::zero(); m.rows()];
        for (c, lambda) in &cert.combinations[t] {
            if !earlier.contains(c) {
                return false;
            }
            for (i, a) in acc.iter_mut().enumerate() {
                *a += lambda * rational_from_int(m.get(i, *c));
            }
        }
        let target: Vec<Rational> = sum_int(&cert.blocks[t]).iter().map(rational_from_int).collect();
        if acc != target {
            return false;
        }
    }
    true
}

/// Verdict for a homogeneous linear equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearVerdict {
    /// Partition regular; `subset` names variables whose coefficients sum to 0.
    Pr { subset: Vec<String> },
    /// Not partition regular; the `smod(prime)` coloring has no monochromatic solution.
    NotPr { prime: u64 },
}

impl LinearVerdict {
    pub fn is_pr(&self) -> bool {
        matches!(self, LinearVerdict::Pr { .. })
    }
}

/// Variables and coefficients of a homogeneous linear polynomial, in
/// presentation order.
pub fn linear_coefficients(p: &Poly) -> Result<Vec<(String, BigInt)>> {
    if p.is_zero() {
        return Err(Error::pre("the zero polynomial is not an equation"));
    }
    if !p.is_homogeneous_linear() {
        return Err(Error::pre(format!("`{p}` is not homogeneous linear")));
    }
    Ok(p.terms()
        .iter()
        .map(|(m, c)| (m.variables().next().expect("degree one").to_string(), c.clone()))
        .collect())
}

fn small_coeffs(cs: &[BigInt]) -> Result<Vec<i128>> {
    if cs.len() > MAX_SUBSET_ITEMS {
        return Err(Error::bound(format!(
            "{} coefficients exceed the subset enumeration limit of {MAX_SUBSET_ITEMS}",
            cs.len()
        )));
    }
    cs.iter()
        .map(|c| to_i128_bounded(c, INT_BITS).ok_or_else(|| Error::overflow("coefficient too large")))
        .collect()
}

/// Smallest (then lexicographically least) index set with zero coefficient sum.
pub fn zero_sum_subset(coeffs: &[BigInt]) -> Result<Option<Vec<usize>>> {
    let small = small_coeffs(coeffs)?;
    let vecs: Vec<Vec<i128>> = small.into_iter().map(|c| vec![c]).collect();
    Ok(min_zero_subset(&vecs).map(mask_indices))
}

pub fn linear_pr(p: &Poly) -> Result<LinearVerdict> {
    let lin = linear_coefficients(p)?;
    if lin.len() < 2 {
        return Err(Error::pre("at least two variables are required"));
    }
    let coeffs: Vec<BigInt> = lin.iter().map(|(_, c)| c.clone()).collect();
    match zero_sum_subset(&coeffs)? {
        Some(idx) => Ok(LinearVerdict::Pr {
            subset: idx.into_iter().map(|i| lin[i].0.clone()).collect(),
        }),
        None => {
            let prime = blocking_prime(&coeffs)?.expect("no zero-sum subset implies a prime");
            Ok(LinearVerdict::NotPr { prime })
        }
    }
}

/// Distinct sums of nonempty subsets.
pub fn subset_sums(coeffs: &[BigInt]) -> Result<Vec<i128>> {
    let small = small_coeffs(coeffs)?;
    let n = small.len();
    let mut out = Vec::with_capacity((1usize << n).saturating_sub(1));
    let mut s = 0i128;
    let mut mask = 0u32;
    for i in 1u64..(1u64 << n) {
        let bit = i.trailing_zeros() as usize;
        if mask & (1 << bit) == 0 {
            s += small[bit];
        } else {
            s -= small[bit];
        }
        mask ^= 1 << bit;
        out.push(s);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Smallest prime dividing no nonempty subset sum, or `None` when some subset
/// sums to zero.
pub fn blocking_prime(coeffs: &[BigInt]) -> Result<Option<u64>> {
    if coeffs.is_empty() {
        return Err(Error::pre("coefficient list is empty"));
    }
    if coeffs.iter().any(Zero::is_zero) {
        return Err(Error::pre("zero coefficient present"));
    }
    let sums = subset_sums(coeffs)?;
    if sums.contains(&0) {
        return Ok(None);
    }
    for p in primes() {
        let pp = p as i128;
        if sums.iter().all(|s| s % pp != 0) {
            return Ok(Some(p));
        }
    }
    unreachable!("the prime sequence is infinite")
}

/// The `smod(p)` color of `n`: strip every factor `p`, then reduce mod `p`.
pub fn smod(p: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::pre("smod is defined on positive integers"));
    }
    if !is_prime(p) {
        return Err(Error::pre(format!("{p} is not prime")));
    }
    let mut a = n;
    while a.is_multiple_of(p) {
        a /= p;
    }
    Ok(a % p)
}

/// Verdict for `Σ aᵢxᵢ + c = 0` with `c ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineVerdict {
    /// `xᵢ = k` for all `i` solves the equation, with `k ≥ 1`.
    ConstantSolution { k: BigInt },
    /// `(Σaᵢ)·z + c = 0` for this integer `z` and `subset` has zero coefficient sum.
    Parametric { z: BigInt, subset: Vec<String> },
    NotPr,
}

impl AffineVerdict {
    pub fn is_pr(&self) -> bool {
        !matches!(self, AffineVerdict::NotPr)
    }
}

pub fn affine_pr(p: &Poly) -> Result<AffineVerdict> {
    let c = p.constant_term();
    if c.is_zero() {
        return Err(Error::pre("constant term is zero; use the homogeneous criterion"));
    }
    if p.degree() != 1 {
        return Err(Error::pre(format!("`{p}` is not linear")));
    }
    let lin: Vec<(String, BigInt)> = p
        .monomial_terms()
        .map(|(m, a)| (m.variables().next().expect("degree one").to_string(), a.clone()))
        .collect();
    let s: BigInt = lin.iter().map(|(_, a)| a).sum();
    if s.is_zero() {
        return Ok(AffineVerdict::NotPr);
    }
    let neg_c = -&c;
    if neg_c.is_multiple_of(&s) {
        let k = &neg_c / &s;
        if k >= BigInt::one() {
            return Ok(AffineVerdict::ConstantSolution { k });
        }
        let coeffs: Vec<BigInt> = lin.iter().map(|(_, a)| a.clone()).collect();
        if let Some(idx) = zero_sum_subset(&coeffs)? {
            return Ok(AffineVerdict::Parametric {
                z: k,
                subset: idx.into_iter().map(|i| lin[i].0.clone()).collect(),
            });
        }
    }
    Ok(AffineVerdict::NotPr)
}

/// Two-parameter solution family of a homogeneous linear equation.
///
/// With `J` the first `k` variables, every `a, b` give the solution
/// `sᵢ = a + z·zᵢ·b` for `i < k` and `sᵢ = m·b` for `i ≥ k`. When `J` is every
/// variable the family degenerates to the constant solution `sᵢ = a`, reported
/// with `m = 1`, all `zᵢ = 0`, `d = 0` and `z = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricSolution {
    /// Variables of `J` first, in the requested order, then the others.
    pub variables: Vec<String>,
    pub coefficients: Vec<BigInt>,
    pub k: usize,
    /// Bézout coefficients: `Σ cᵢzᵢ = c` over `J` (all zero in the constant case).
    pub zs: Vec<BigInt>,
    pub m: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    /// Satisfies `c·z + d·m = 0`.
    pub z: BigInt,
    pub constant: bool,
}

impl ParametricSolution {
    /// The assigned values as polynomials in the parameters `a` and `b`.
    pub fn assignment(&self) -> Vec<Poly> {
        let a = Poly::var("a");
        let b = Poly::var("b");
        (0..self.variables.len())
            .map(|i| {
                if i < self.k {
                    &a + &b.scale(&(&self.z * &self.zs[i]))
                } else {
                    b.scale(&self.m)
                }
            })
            .collect()
    }

    /// `Σ cᵢsᵢ` expanded in `a, b`; the zero polynomial for a valid family.
    pub fn expansion(&self) -> Poly {
        self.assignment()
            .iter()
            .zip(&self.coefficients)
            .fold(Poly::zero(), |acc, (s, c)| &acc + &s.scale(c))
    }

    pub fn evaluate(&self, a: &BigInt, b: &BigInt) -> Vec<BigInt> {
        (0..self.variables.len())
            .map(|i| {
                if i < self.k {
                    a + &self.z * &self.zs[i] * b
                } else {
                    &self.m * b
                }
            })
            .collect()
    }
}

pub fn parametric_solution(p: &Poly, subset: &[String]) -> Result<ParametricSolution> {
    let lin = linear_coefficients(p)?;
    let coeff_of: BTreeMap<&str, &BigInt> = lin.iter().map(|(v, c)| (v.as_str(), c)).collect();
    if subset.is_empty() {
        return Err(Error::pre("the subset must be nonempty"));
    }
    let mut variables: Vec<String> = Vec::new();
    for v in subset {
        if !coeff_of.contains_key(v.as_str()) {
            return Err(Error::pre(format!("`{v}` is not a variable of `{p}`")));
        }
        if variables.contains(v) {
            return Err(Error::pre(format!("`{v}` listed twice")));
        }
        variables.push(v.clone());
    }
    let cj: Vec<BigInt> = variables.iter().map(|v| coeff_of[v.as_str()].clone()).collect();
    if !cj.iter().sum::<BigInt>().is_zero() {
        return Err(Error::pre("the chosen coefficients do not sum to zero"));
    }
    let k = variables.len();
    for (v, _) in &lin {
        if !variables.contains(v) {
            variables.push(v.clone());
        }
    }
    let coefficients: Vec<BigInt> = variables.iter().map(|v| coeff_of[v.as_str()].clone()).collect();
    let (g, zs) = bezout(&cj);
    let sol = if k == coefficients.len() {
        ParametricSolution {
            variables,
            coefficients,
            k,
            zs: vec![BigInt::zero(); k],
            m: BigInt::one(),
            c: g,
            d: BigInt::zero(),
            z: BigInt::zero(),
            constant: true,
        }
    } else {
        let d: BigInt = coefficients[k..].iter().sum();
        let m = &g / g.gcd(&d);
        let z = -(&d * &m) / &g;
        ParametricSolution {
            variables,
            coefficients,
            k,
            zs,
            m,
            c: g,
            d,
            z,
            constant: false,
        }
    };
    if !sol.expansion().is_zero() {
        return Err(Error::invalid("internal error: parametric identity failed"));
    }
    Ok(sol)
}

/// `gcd(cs)` with coefficients `zs` such that `Σ cᵢzᵢ = gcd`, reduced by a
/// greedy pass along kernel directions of adjacent pairs.
pub fn bezout(cs: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = cs[0].abs();
    let mut zs = vec![if cs[0].is_negative() { -BigInt::one() } else { BigInt::one() }];
    for c in &cs[1..] {
        let (g2, u, v) = ext_gcd(&g, c);
        for z in zs.iter_mut() {
            *z *= &u;
        }
        zs.push(v);
        g = g2;
    }
    for i in 1..cs.len() {
        shrink_pair(cs, &mut zs, 0, i);
    }
    (g, zs)
}

fn shrink_pair(cs: &[BigInt], zs: &mut [BigInt], i: usize, j: usize) {
    let g = cs[i].gcd(&cs[j]);
    let step_i = &cs[j] / &g;
    let step_j = -(&cs[i] / &g);
    let cost = |t: &BigInt| -> BigInt {
        let a = (&zs[i] + t * &step_i).abs();
        let b = (&zs[j] + t * &step_j).abs();
        a.max(b)
    };
    let near = |num: &BigInt, den: &BigInt| -> BigInt { -(num.div_floor(den)) };
    let mut candidates = vec![BigInt::zero()];
    for base in [near(&zs[i], &step_i), near(&zs[j], &step_j)] {
        for delta in -1..=1 {
            candidates.push(&base + BigInt::from(delta));
        }
    }
    let mut best = BigInt::zero();
    let mut best_cost = cost(&best);
    for t in candidates {
        let ct = cost(&t);
        if ct < best_cost || (ct == best_cost && t.abs() < best.abs()) {
            best_cost = ct;
            best = t;
        }
    }
    let ti = &best * &step_i;
    let tj = &best * &step_j;
    zs[i] += ti;
    zs[j] += tj;
}

/// `smod(p)` coloring of `[1, n]` with colors shifted to `1..=p-1`.
pub fn smod_coloring(p: u64, n: u64) -> Result<crate::coloring::Coloring> {
    let colors = (1..=n)
        .map(|x| smod(p, x).map(|c| c as u32))
        .collect::<Result<Vec<_>>>()?;
    crate::coloring::Coloring::new(1, colors, (p - 1).max(1) as u32)
}

/// Integer value of a rational known to be integral.
pub fn rational_to_i64(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}
