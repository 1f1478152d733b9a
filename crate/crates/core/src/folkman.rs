//! Finite sums, weak monochromaticity and the Folkman matrix.

use num_bigint::BigInt;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::sets::FiniteSet;

pub const MAX_FS_SIZE: usize = 24;
pub const MAX_FOLKMAN_N: usize = 10;

/// Sums of all nonempty subsets, duplicates collapsed.
pub fn fs(s: &FiniteSet) -> Result<FiniteSet> {
    Ok(FiniteSet::new(subset_sums(s)?.into_iter().map(|(_, sum, _)| sum)))
}

/// `(mask, sum, largest element)` for every nonempty subset mask.
fn subset_sums(s: &FiniteSet) -> Result<Vec<(u32, u64, u64)>> {
    let k = s.len();
    if k > MAX_FS_SIZE {
        return Err(Error::bound(format!("{k} elements exceed the limit of {MAX_FS_SIZE}")));
    }
    let xs = s.as_slice();
    let mut sums = vec![0u64; 1 << k];
    let mut out = Vec::with_capacity((1 << k) - 1);
    for mask in 1u32..(1 << k) {
        let top = 31 - mask.leading_zeros() as usize;
        let sum = sums[(mask & !(1 << top)) as usize]
            .checked_add(xs[top])
            .ok_or_else(|| Error::overflow("finite sum exceeds 64 bits"))?;
        sums[mask as usize] = sum;
        out.push((mask, sum, xs[top]));
    }
    Ok(out)
}

/// Every finite sum has the color of its largest summand.
pub fn weakly_monochromatic(c: &Coloring, s: &FiniteSet) -> Result<bool> {
    let sums = subset_sums(s)?;
    let color = |x: u64| {
        i64::try_from(x)
            .ok()
            .and_then(|x| c.color(x))
            .ok_or_else(|| Error::pre(format!("the coloring does not cover {x}")))
    };
    for &(_, sum, _) in &sums {
        color(sum)?;
    }
    for (_, sum, top) in sums {
        if color(sum)? != color(top)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nonempty subsets of `{1, …, n}` by cardinality, then lexicographically.
pub fn ordered_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| (1..=n).filter(|&j| mask >> (j - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
}

/// The `(2ⁿ−1) × (n + 2ⁿ − 1)` matrix whose solutions are `x₁, …, x_n`
/// together with all their nonempty subset sums.
pub fn folkman_matrix(n: usize) -> Result<IntMatrix> {
    if n == 0 || n > MAX_FOLKMAN_N {
        return Err(Error::pre(format!("n must lie in 1..={MAX_FOLKMAN_N}")));
    }
    let subsets = ordered_subsets(n);
    let cols = n + subsets.len();
    let rows = subsets
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut row = vec![BigInt::from(0); cols];
            for &j in f {
                row[j - 1] = BigInt::from(1);
            }
            row[n + i] = BigInt::from(-1);
            row
        })
        .collect();
    IntMatrix::new(rows)
}
