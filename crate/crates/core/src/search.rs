//! Exhaustive search over finite colorings.
//!
//! Solutions of a [`SolutionSystem`] inside `[1, n]` are materialised once by
//! [`enumerate_solutions`] and indexed by their largest value. The coloring
//! search then colors `1, 2, …, n` in order, trying colors in increasing order
//! and never opening more than one new color at a time, so the first complete
//! coloring found is the lexicographically least good coloring. A branch is
//! cut as soon as a solution whose values are all colored is monochromatic.
//!
//! Parallel runs split the tree into prefixes in lexicographic order and keep
//! the first prefix (in that order) that completes, so the coloring returned
//! does not depend on the number of workers.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::to_i128_bounded;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::Poly;
use crate::sets::FiniteSet;

pub const MAX_SOLUTIONS: usize = 10_000_000;
pub const DEFAULT_MAX_NODES: u64 = 100_000_000;
const MAX_ENUMERATION_STEPS: u64 = 2_000_000_000;
const MAX_POLY_VARS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// The single equation `P = 0`, variables in alphabetical order.
    Poly(Poly),
    /// The homogeneous system `A·x = 0`, one variable per column.
    Matrix(IntMatrix),
    /// `k`-term arithmetic progressions `x₁ < x₂ < …` with constant difference.
    Ap(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSystem {
    pub kind: SystemKind,
    /// Only count solutions with pairwise distinct values.
    pub injective: bool,
}

impl SolutionSystem {
    pub fn poly(p: Poly) -> Self {
        SolutionSystem { kind: SystemKind::Poly(p), injective: false }
    }

    pub fn matrix(m: IntMatrix) -> Self {
        SolutionSystem { kind: SystemKind::Matrix(m), injective: false }
    }

    pub fn ap(k: usize) -> Self {
        SolutionSystem { kind: SystemKind::Ap(k), injective: false }
    }

    pub fn injective(mut self, yes: bool) -> Self {
        self.injective = yes;
        self
    }

    pub fn variables(&self) -> Vec<String> {
        match &self.kind {
            SystemKind::Poly(p) => p.variables().into_iter().collect(),
            SystemKind::Matrix(m) => (1..=m.cols()).map(|j| format!("x{j}")).collect(),
            SystemKind::Ap(k) => (1..=*k).map(|j| format!("x{j}")).collect(),
        }
    }

    /// Direct check of one assignment, in the order of [`Self::variables`].
    pub fn is_solution(&self, values: &[u64]) -> bool {
        let vars = self.variables();
        if values.len() != vars.len() {
            return false;
        }
        if self.injective {
            let mut v = values.to_vec();
            v.sort_unstable();
            if v.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        match &self.kind {
            SystemKind::Poly(p) => {
                let a = vars
                    .into_iter()
                    .zip(values)
                    .map(|(v, &x)| (v, BigInt::from(x)))
                    .collect();
                p.eval(&a).map(|v| v.is_zero()).unwrap_or(false)
            }
            SystemKind::Matrix(m) => (0..m.rows()).all(|i| {
                let s: BigInt = m.row(i).iter().zip(values).map(|(a, &x)| a * x).sum();
                s.is_zero()
            }),
            SystemKind::Ap(_) => {
                if values.len() < 2 {
                    return true;
                }
                let d = values[1] as i128 - values[0] as i128;
                d >= 1
                    && values
                        .windows(2)
                        .all(|w| w[1] as i128 - w[0] as i128 == d)
            }
        }
    }

    /// Coefficients when the system is one homogeneous linear equation.
    pub fn linear_row(&self) -> Option<Vec<i128>> {
        let row: Vec<BigInt> = match &self.kind {
            SystemKind::Poly(p) if p.is_homogeneous_linear() => {
                let vars = self.variables();
                vars.iter()
                    .map(|v| p.coefficient(&crate::poly::Monomial::var(v)))
                    .collect()
            }
            SystemKind::Matrix(m) if m.rows() == 1 => m.row(0).to_vec(),
            _ => return None,
        };
        row.iter().map(|c| to_i128_bounded(c, 64)).collect()
    }
}

/// All solutions with values in `[1, n]`, sorted lexicographically.
pub fn enumerate_solutions(s: &SolutionSystem, n: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 {
        return Err(Error::pre("the bound n must be at least 1"));
    }
    let mut sols = match &s.kind {
        SystemKind::Poly(p) => enumerate_poly(p, n)?,
        SystemKind::Matrix(m) => enumerate_matrix(m, n, s.injective)?,
        SystemKind::Ap(k) => enumerate_ap(*k, n)?,
    };
    if s.injective {
        sols.retain(|v| {
            let mut w = v.clone();
            w.sort_unstable();
            w.windows(2).all(|p| p[0] != p[1])
        });
    }
    sols.sort();
    sols.dedup();
    Ok(sols)
}

fn push_solution(out: &mut Vec<Vec<u64>>, sol: Vec<u64>) -> Result<()> {
    if out.len() >= MAX_SOLUTIONS {
        return Err(Error::bound(format!("more than {MAX_SOLUTIONS} solutions")));
    }
    out.push(sol);
    Ok(())
}

struct CompiledTerm {
    coeff: i128,
    powers: Vec<(usize, u32)>,
    solve_exp: u32,
}

fn enumerate_poly(p: &Poly, n: u64) -> Result<Vec<Vec<u64>>> {
    let vars: Vec<String> = p.variables().into_iter().collect();
    let k = vars.len();
    if k == 0 {
        return Err(Error::pre("the equation has no variables"));
    }
    if k > MAX_POLY_VARS {
        return Err(Error::bound(format!("{k} variables exceed the limit of {MAX_POLY_VARS}")));
    }
    if p.max_partial_degree() > 2 {
        return Err(Error::bound("partial degree above 2 is not enumerated"));
    }
    let steps = (n as f64).powi(k as i32 - 1);
    if steps > MAX_ENUMERATION_STEPS as f64 {
        return Err(Error::bound(format!("{n}^{} assignments are too many", k - 1)));
    }
    // Solve for the variable of least partial degree; ties go to the last one.
    let solve = (0..k)
        .rev()
        .min_by_key(|&i| p.partial_degree(&vars[i]))
        .expect("k >= 1");
    let others: Vec<usize> = (0..k).filter(|&i| i != solve).collect();
    let terms: Vec<CompiledTerm> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let coeff = to_i128_bounded(c, 64).ok_or_else(|| Error::overflow("coefficient too large"))?;
            let powers = others
                .iter()
                .enumerate()
                .filter_map(|(slot, &vi)| {
                    let e = m.exponent(&vars[vi]);
                    (e > 0).then_some((slot, e))
                })
                .collect();
            Ok(CompiledTerm { coeff, powers, solve_exp: m.exponent(&vars[solve]) })
        })
        .collect::<Result<_>>()?;

    let overflow = || Error::overflow("intermediate value exceeds 128 bits");
    let mut out = Vec::new();
    let mut vals = vec![1u64; others.len()];
    loop {
        let mut abc = [0i128; 3];
        for t in &terms {
            let mut v = t.coeff;
            for &(slot, e) in &t.powers {
                for _ in 0..e {
                    v = v.checked_mul(vals[slot] as i128).ok_or_else(overflow)?;
                }
            }
            let idx = t.solve_exp as usize;
            abc[idx] = abc[idx].checked_add(v).ok_or_else(overflow)?;
        }
        let [c0, c1, c2] = abc;
        let mut roots: Vec<u64> = Vec::new();
        if c2 == 0 {
            if c1 == 0 {
                if c0 == 0 {
                    roots.extend(1..=n);
                }
            } else if c0 % c1 == 0 {
                let x = -c0 / c1;
                if x >= 1 && x <= n as i128 {
                    roots.push(x as u64);
                }
            }
        } else {
            let disc = c1
                .checked_mul(c1)
                .and_then(|b2| c2.checked_mul(c0).and_then(|ac| ac.checked_mul(4)).and_then(|ac4| b2.checked_sub(ac4)))
                .ok_or_else(overflow)?;
            if disc >= 0 {
                let r = disc.sqrt();
                if r * r == disc {
                    for num in [-c1 - r, -c1 + r] {
                        let den = 2 * c2;
                        if num % den == 0 {
                            let x = num / den;
                            if x >= 1 && x <= n as i128 && !roots.contains(&(x as u64)) {
                                roots.push(x as u64);
                            }
                        }
                    }
                }
            }
        }
        for x in roots {
            let mut sol = vec![0u64; k];
            for (slot, &vi) in others.iter().enumerate() {
                sol[vi] = vals[slot];
            }
            sol[solve] = x;
            push_solution(&mut out, sol)?;
        }
        // Advance the odometer over the other variables.
        let mut i = vals.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if vals[i] < n {
                vals[i] += 1;
                break;
            }
            vals[i] = 1;
        }
    }
}

fn enumerate_matrix(m: &IntMatrix, n: u64, injective: bool) -> Result<Vec<Vec<u64>>> {
    let rows = m.rows();
    let cols = m.cols();
    let a: Vec<Vec<i128>> = (0..rows)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| to_i128_bounded(x, 60).ok_or_else(|| Error::overflow("matrix entry too large")))
                .collect()
        })
        .collect::<Result<_>>()?;
    let mut ending: Vec<Vec<usize>> = vec![Vec::new(); cols];
    for (i, row) in a.iter().enumerate() {
        if let Some(j) = row.iter().rposition(|&x| x != 0) {
            ending[j].push(i);
        }
    }
    struct St<'a> {
        a: &'a [Vec<i128>],
        ending: &'a [Vec<usize>],
        n: u64,
        injective: bool,
        partial: Vec<i128>,
        vals: Vec<u64>,
        out: Vec<Vec<u64>>,
        steps: u64,
    }
    fn place(st: &mut St, j: usize, v: u64) {
        for (i, row) in st.a.iter().enumerate() {
            st.partial[i] += row[j] * v as i128;
        }
        st.vals.push(v);
    }
    fn unplace(st: &mut St, j: usize) {
        let v = st.vals.pop().expect("placed");
        for (i, row) in st.a.iter().enumerate() {
            st.partial[i] -= row[j] * v as i128;
        }
    }
    fn rec(st: &mut St, j: usize) -> Result<()> {
        st.steps += 1;
        if st.steps > MAX_ENUMERATION_STEPS {
            return Err(Error::bound("matrix enumeration exceeded its step budget"));
        }
        if j == st.a[0].len() {
            let sol = st.vals.clone();
            return push_solution(&mut st.out, sol);
        }
        let candidates: Vec<u64> = match st.ending[j].first() {
            None => (1..=st.n).collect(),
            Some(&r) => {
                let c = st.a[r][j];
                let rest = st.partial[r];
                if rest % c != 0 {
                    return Ok(());
                }
                let x = -rest / c;
                if x < 1 || x > st.n as i128 {
                    return Ok(());
                }
                vec![x as u64]
            }
        };
        for v in candidates {
            if st.injective && st.vals.contains(&v) {
                continue;
            }
            let ok = st.ending[j]
                .iter()
                .all(|&r| st.partial[r] + st.a[r][j] * v as i128 == 0);
            if !ok {
                continue;
            }
            place(st, j, v);
            rec(st, j + 1)?;
            unplace(st, j);
        }
        Ok(())
    }
    let mut st = St {
        a: &a,
        ending: &ending,
        n,
        injective,
        partial: vec![0; rows],
        vals: Vec::with_capacity(cols),
        out: Vec::new(),
        steps: 0,
    };
    rec(&mut st, 0)?;
    Ok(st.out)
}

fn enumerate_ap(k: usize, n: u64) -> Result<Vec<Vec<u64>>> {
    if k == 0 {
        return Err(Error::pre("progression length must be at least 1"));
    }
    let mut out = Vec::new();
    if k == 1 {
        for a in 1..=n {
            push_solution(&mut out, vec![a])?;
        }
        return Ok(out);
    }
    let span = (k - 1) as u64;
    for a in 1..=n {
        let mut d = 1u64;
        while a + span * d <= n {
            push_solution(&mut out, (0..k as u64).map(|i| a + i * d).collect())?;
            d += 1;
        }
    }
    Ok(out)
}

/// Solutions grouped by their largest value; each entry lists the other
/// distinct values of one solution.
#[derive(Clone, Debug)]
struct SolutionIndex {
    by_max: Vec<Vec<Vec<usize>>>,
}

impl SolutionIndex {
    fn new(sols: &[Vec<u64>], n: usize) -> Self {
        let mut by_max: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
        for s in sols {
            let mut v: Vec<usize> = s.iter().map(|&x| x as usize).collect();
            v.sort_unstable();
            v.dedup();
            let top = v.pop().expect("nonempty solution");
            if top <= n {
                by_max[top].push(v);
            }
        }
        for list in by_max.iter_mut() {
            list.sort();
            list.dedup();
        }
        SolutionIndex { by_max }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub threads: usize,
    pub max_nodes: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { threads: 1, max_nodes: DEFAULT_MAX_NODES }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Every coloring of `[1, n]` has a monochromatic solution.
    Forced { nodes: u64 },
    /// The lexicographically least coloring without monochromatic solutions.
    Good { coloring: Coloring, nodes: u64 },
}

impl SearchOutcome {
    pub fn is_forced(&self) -> bool {
        matches!(self, SearchOutcome::Forced { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Forced { nodes } | SearchOutcome::Good { nodes, .. } => *nodes,
        }
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            SearchOutcome::Good { coloring, .. } => Some(coloring),
            SearchOutcome::Forced { .. } => None,
        }
    }
}

struct Searcher<'a> {
    idx: &'a SolutionIndex,
    n: usize,
    r: u32,
    nodes: &'a AtomicU64,
    max_nodes: u64,
}

struct LimitHit;

impl Searcher<'_> {
    fn fits(&self, colors: &[u32], v: usize, c: u32) -> bool {
        self.idx.by_max[v]
            .iter()
            .all(|others| others.iter().any(|&u| colors[u] != c))
    }

    fn tick(&self, local: &mut u64) -> std::result::Result<(), LimitHit> {
        *local += 1;
        if *local >= (self.max_nodes / 16).clamp(1, 4096) {
            let total = self.nodes.fetch_add(*local, Ordering::Relaxed) + *local;
            *local = 0;
            if total > self.max_nodes {
                return Err(LimitHit);
            }
        }
        Ok(())
    }

    /// Extends `colors[1..v]` to a full good coloring if possible.
    fn dfs(&self, colors: &mut Vec<u32>, v: usize, used: u32, local: &mut u64) -> std::result::Result<bool, LimitHit> {
        if v > self.n {
            return Ok(true);
        }
        let top = self.r.min(used + 1);
        for c in 1..=top {
            self.tick(local)?;
            if self.fits(colors, v, c) {
                colors[v] = c;
                if self.dfs(colors, v + 1, used.max(c), local)? {
                    return Ok(true);
                }
            }
        }
        colors[v] = 0;
        Ok(false)
    }

    /// Good partial colorings of `[1, depth]`, in lexicographic order.
    fn prefixes(&self, target: usize) -> Vec<Vec<u32>> {
        let mut level: Vec<Vec<u32>> = vec![vec![0]];
        let mut depth = 0;
        while depth < self.n && level.len() < target {
            let v = depth + 1;
            let mut next = Vec::new();
            for pre in &level {
                let used = pre.iter().copied().max().unwrap_or(0);
                let mut colors = pre.clone();
                colors.resize(self.n + 1, 0);
                for c in 1..=self.r.min(used + 1) {
                    if self.fits(&colors, v, c) {
                        let mut p = pre.clone();
                        p.push(c);
                        next.push(p);
                    }
                }
            }
            self.nodes.fetch_add(next.len() as u64, Ordering::Relaxed);
            level = next;
            depth += 1;
            if level.is_empty() {
                break;
            }
        }
        level
    }

    fn complete(&self, prefix: &[u32]) -> std::result::Result<Option<Vec<u32>>, LimitHit> {
        let mut colors = prefix.to_vec();
        let v = colors.len();
        let used = colors.iter().copied().max().unwrap_or(0);
        colors.resize(self.n + 1, 0);
        let mut local = 0;
        let found = self.dfs(&mut colors, v, used, &mut local);
        self.nodes.fetch_add(local, Ordering::Relaxed);
        Ok(found?.then_some(colors))
    }
}

fn search_index(idx: &SolutionIndex, n: usize, r: u32, opts: SearchOptions) -> Result<SearchOutcome> {
    let nodes = AtomicU64::new(0);
    let s = Searcher { idx, n, r, nodes: &nodes, max_nodes: opts.max_nodes };
    let found: std::result::Result<Option<Vec<u32>>, LimitHit> = if opts.threads <= 1 {
        s.complete(&[0])
    } else {
        let prefixes = s.prefixes(16 * opts.threads);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
        pool.install(|| {
            prefixes
                .par_iter()
                .find_map_first(|p| match s.complete(p) {
                    Ok(None) => None,
                    other => Some(other),
                })
                .unwrap_or(Ok(None))
        })
    };
    let total = nodes.load(Ordering::Relaxed);
    match found {
        Err(LimitHit) => Err(Error::NodeLimit(opts.max_nodes)),
        _ if total > opts.max_nodes => Err(Error::NodeLimit(opts.max_nodes)),
        Ok(None) => Ok(SearchOutcome::Forced { nodes: total }),
        Ok(Some(colors)) => Ok(SearchOutcome::Good {
            coloring: Coloring::new(1, colors[1..].to_vec(), r)?,
            nodes: total,
        }),
    }
}

/// Decides whether `[1, n]` has an `r`-coloring with no monochromatic solution.
pub fn good_coloring(s: &SolutionSystem, n: u64, r: u32, opts: SearchOptions) -> Result<SearchOutcome> {
    if r == 0 {
        return Err(Error::pre("at least one color is required"));
    }
    let sols = enumerate_solutions(s, n)?;
    let idx = SolutionIndex::new(&sols, n as usize);
    search_index(&idx, n as usize, r, opts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingResult {
    /// Least `n ≤ n_max` at which every `r`-coloring has a monochromatic solution.
    pub n: Option<u64>,
    /// Lexicographically least good coloring of the largest unforced interval.
    pub last_good: Option<Coloring>,
    pub nodes: u64,
}

pub fn forcing_number(s: &SolutionSystem, r: u32, n_max: u64, opts: SearchOptions) -> Result<ForcingResult> {
    if r == 0 {
        return Err(Error::pre("at least one color is required"));
    }
    let sols = enumerate_solutions(s, n_max)?;
    let idx = SolutionIndex::new(&sols, n_max as usize);
    let mut last_good = None;
    let mut nodes = 0;
    for n in 1..=n_max {
        match search_index(&idx, n as usize, r, opts)? {
            SearchOutcome::Forced { nodes: k } => {
                return Ok(ForcingResult { n: Some(n), last_good, nodes: nodes + k });
            }
            SearchOutcome::Good { coloring, nodes: k } => {
                nodes += k;
                last_good = Some(coloring);
            }
        }
    }
    Ok(ForcingResult { n: None, last_good, nodes })
}

/// Lexicographically least monochromatic solution inside the coloring's
/// domain (which must start at or below 1).
pub fn mono_witness(c: &Coloring, s: &SolutionSystem) -> Result<Option<Vec<u64>>> {
    if c.lo() > 1 {
        return Err(Error::pre("the coloring must cover 1"));
    }
    if c.hi() < 1 {
        return Ok(None);
    }
    let n = c.hi() as u64;
    if !s.injective {
        if let Some(row) = s.linear_row() {
            let classes: Vec<Vec<u64>> = c
                .classes()
                .into_iter()
                .map(|cl| cl.into_iter().filter(|&x| x >= 1).map(|x| x as u64).collect())
                .collect();
            return Ok(linear_witness(&row, &classes));
        }
    }
    let sols = enumerate_solutions(s, n)?;
    Ok(sols.into_iter().find(|sol| {
        let first = c.color(sol[0] as i64);
        sol.iter().all(|&x| c.color(x as i64) == first)
    }))
}

/// Bitset over a contiguous integer range.
#[derive(Clone, Debug)]
struct Bits {
    lo: i128,
    words: Vec<u64>,
}

impl Bits {
    fn new(lo: i128, hi: i128) -> Self {
        let len = (hi - lo + 1) as usize;
        Bits { lo, words: vec![0; len.div_ceil(64)] }
    }

    fn set(&mut self, x: i128) {
        let i = (x - self.lo) as usize;
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, x: i128) -> bool {
        if x < self.lo {
            return false;
        }
        let i = (x - self.lo) as usize;
        i / 64 < self.words.len() && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self |= src + offset` where `offset` is a value shift.
    fn or_shifted(&mut self, src: &Bits, offset: i128) {
        let shift = (src.lo + offset - self.lo) as usize;
        let (wo, bo) = (shift / 64, shift % 64);
        for (i, &w) in src.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let t = i + wo;
            if t < self.words.len() {
                self.words[t] |= w << bo;
            }
            if bo > 0 && t + 1 < self.words.len() {
                self.words[t + 1] |= w >> (64 - bo);
            }
        }
    }
}

/// Lexicographically least solution of `Σ aᵢxᵢ = 0` with every `xᵢ` taken
/// from one class, over all classes. Uses reachable suffix sums per class.
fn linear_witness(a: &[i128], classes: &[Vec<u64>]) -> Option<Vec<u64>> {
    classes
        .iter()
        .filter(|c| !c.is_empty())
        .filter_map(|c| class_witness(a, c))
        .min()
}

fn class_witness(a: &[i128], class: &[u64]) -> Option<Vec<u64>> {
    let k = a.len();
    let (xmin, xmax) = (class[0] as i128, *class.last().expect("nonempty") as i128);
    let mut lo = vec![0i128; k + 1];
    let mut hi = vec![0i128; k + 1];
    for j in (0..k).rev() {
        let (p, q) = (a[j] * xmin, a[j] * xmax);
        lo[j] = lo[j + 1] + p.min(q);
        hi[j] = hi[j + 1] + p.max(q);
    }
    let mut reach: Vec<Bits> = Vec::with_capacity(k + 1);
    let mut last = Bits::new(0, 0);
    last.set(0);
    reach.push(last);
    for j in (0..k).rev() {
        let mut b = Bits::new(lo[j], hi[j]);
        let src = reach.last().expect("pushed");
        if a[j] == 0 {
            b.or_shifted(src, 0);
        } else {
            for &x in class {
                b.or_shifted(src, a[j] * x as i128);
            }
        }
        reach.push(b);
    }
    reach.reverse();
    if !reach[0].get(0) {
        return None;
    }
    let mut partial = 0i128;
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let x = class
            .iter()
            .copied()
            .find(|&x| reach[j + 1].get(-(partial + a[j] * x as i128)))?;
        partial += a[j] * x as i128;
        out.push(x);
    }
    Some(out)
}

/// Monochromatic 3-term progression in a 2-coloring of `[0, 324]`, found by
/// the block argument: split into 65 blocks of five, find two equally colored
/// blocks among the first 33, and finish inside them or in their mirror block.
pub fn vdw325_extract(c: &Coloring) -> Result<(u64, u64, u64)> {
    if c.lo() != 0 || c.hi() != 324 {
        return Err(Error::pre("the coloring must have domain [0, 324]"));
    }
    if c.used_colors() > 2 {
        return Err(Error::pre("at most two colors may be used"));
    }
    let col = |x: u64| c.color(x as i64).expect("inside the domain");
    let pattern = |i: u64| -> [u32; 5] {
        let base = 5 * (i - 1);
        [col(base), col(base + 1), col(base + 2), col(base + 3), col(base + 4)]
    };
    let mut seen: Vec<([u32; 5], u64)> = Vec::new();
    let mut pair = None;
    for j in 1..=33u64 {
        let p = pattern(j);
        if let Some(&(_, i)) = seen.iter().find(|(q, _)| *q == p) {
            pair = Some((i, j));
            break;
        }
        seen.push((p, j));
    }
    let (i, j) = pair.expect("33 blocks exceed the 32 two-color patterns");
    let base_i = 5 * (i - 1);
    let (a, b) = [(0u64, 1u64), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(a, b)| col(base_i + a) == col(base_i + b))
        .expect("two of three points share a color");
    let third = 2 * b - a;
    if col(base_i + third) == col(base_i + a) {
        return Ok((base_i + a, base_i + b, base_i + third));
    }
    let step = 5 * (j - i);
    let base_j = base_i + step;
    let base_l = base_j + step;
    let x = base_l + third;
    if col(x) == col(base_i + a) {
        Ok((base_i + a, base_j + b, x))
    } else {
        Ok((base_i + third, base_j + third, x))
    }
}

/// Some `(a, d)` with `d ≥ 1` and `a, a+d, …, a+(k-1)d ∈ A`, least in `(a, d)` order.
pub fn contains_ap(set: &FiniteSet, k: usize) -> Option<(u64, u64)> {
    let xs = set.as_slice();
    let &max = xs.last()?;
    if k <= 1 {
        return Some((xs[0], 1));
    }
    let span = (k - 1) as u64;
    for (idx, &a) in xs.iter().enumerate() {
        for &b in &xs[idx + 1..] {
            let d = b - a;
            match d.checked_mul(span).and_then(|s| s.checked_add(a)) {
                Some(end) if end <= max => {}
                _ => break,
            }
            if (2..k as u64).all(|t| set.contains(a + t * d)) {
                return Some((a, d));
            }
        }
    }
    None
}

/// Integer value used by the search when a polynomial coefficient is needed as `i64`.
pub fn small(x: &BigInt) -> Option<i64> {
    x.to_i64()
}
