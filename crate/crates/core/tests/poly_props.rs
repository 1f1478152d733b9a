use std::collections::BTreeMap;

use num_bigint::BigInt;
use prlab_core::{PeriodicSet, Poly};
use proptest::prelude::*;

const VARS: [&str; 4] = ["w", "x", "y", "z"];

/// A term as raw data: coefficient and `(variable index, exponent)` factors.
type RawTerm = (i64, Vec<(usize, u32)>);

fn raw_term() -> impl Strategy<Value = RawTerm> {
    (
        prop_oneof![-9i64..=-1, 1i64..=9],
        prop::collection::vec((0usize..VARS.len(), 1u32..=3), 0..=3),
    )
}

fn render(terms: &[RawTerm]) -> String {
    let mut out = String::new();
    for (i, (c, factors)) in terms.iter().enumerate() {
        let sign = if *c < 0 { "-" } else { "+" };
        if i > 0 || *c < 0 {
            out.push_str(sign);
        }
        let mut parts = vec![c.abs().to_string()];
        parts.extend(factors.iter().map(|&(v, e)| {
            if e == 1 { VARS[v].to_string() } else { format!("{}^{e}", VARS[v]) }
        }));
        out.push_str(&parts.join("*"));
    }
    out
}

/// Direct evaluation of the raw term list, without going through `Poly`.
fn eval_raw(terms: &[RawTerm], point: &[i64; 4]) -> BigInt {
    terms
        .iter()
        .map(|(c, factors)| {
            factors
                .iter()
                .fold(BigInt::from(*c), |acc, &(v, e)| acc * BigInt::from(point[v]).pow(e))
        })
        .sum()
}

fn point_map(point: &[i64; 4]) -> BTreeMap<String, BigInt> {
    VARS.iter().zip(point).map(|(v, &x)| (v.to_string(), BigInt::from(x))).collect()
}

/// Renames every variable of the raw terms into a disjoint alphabet.
fn disjoint(terms: &[RawTerm]) -> String {
    render(terms).replace('w', "a").replace('x', "b").replace('y', "c").replace('z', "d")
}

fn total_degree(terms: &[RawTerm]) -> Option<u32> {
    // Degree of the polynomial after collecting like terms, computed by brute force.
    let mut collected: BTreeMap<[u32; 4], i64> = BTreeMap::new();
    for (c, factors) in terms {
        let mut exps = [0u32; 4];
        for &(v, e) in factors {
            exps[v] += e;
        }
        *collected.entry(exps).or_default() += c;
    }
    collected.into_iter().filter(|(_, c)| *c != 0).map(|(e, _)| e.iter().sum()).max()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn print_parse_print_is_stable(terms in prop::collection::vec(raw_term(), 1..6)) {
        let p = Poly::parse(&render(&terms)).unwrap();
        let printed = p.to_string();
        let q = Poly::parse(&printed).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(q.to_string(), printed);
    }

    #[test]
    fn evaluation_matches_direct_arithmetic(
        terms in prop::collection::vec(raw_term(), 1..6),
        point in prop::array::uniform4(-5i64..=5),
    ) {
        let p = Poly::parse(&render(&terms)).unwrap();
        prop_assert_eq!(p.eval(&point_map(&point)).unwrap(), eval_raw(&terms, &point));
    }

    #[test]
    fn reordered_input_has_the_same_normal_form(
        terms in prop::collection::vec(raw_term(), 1..6),
        seed in any::<u64>(),
    ) {
        let mut shuffled = terms.clone();
        let n = shuffled.len();
        shuffled.rotate_left((seed as usize) % n);
        for (_, factors) in shuffled.iter_mut() {
            factors.reverse();
        }
        let p = Poly::parse(&render(&terms)).unwrap();
        let q = Poly::parse(&render(&shuffled)).unwrap();
        prop_assert_eq!(p.normal_form(), q.normal_form());
        prop_assert_eq!(p, q);
    }

    #[test]
    fn degree_is_additive_over_disjoint_products(
        a in prop::collection::vec(raw_term(), 1..5),
        b in prop::collection::vec(raw_term(), 1..5),
    ) {
        let p = Poly::parse(&render(&a)).unwrap();
        let q = Poly::parse(&disjoint(&b)).unwrap();
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!(Some(p.degree()), total_degree(&a));
        prop_assert_eq!((&p * &q).degree(), p.degree() + q.degree());
    }

    #[test]
    fn periodic_membership_follows_prefix_then_residues(
        period in 1u64..=8,
        residue_mask in any::<u8>(),
        threshold in 0u64..=8,
        prefix_mask in any::<u8>(),
        n in 0u64..100,
    ) {
        let residues: Vec<u64> = (0..period).filter(|r| residue_mask >> r & 1 == 1).collect();
        let prefix: Vec<u64> = (0..threshold).filter(|x| prefix_mask >> x & 1 == 1).collect();
        let s = PeriodicSet::new(period, residues.clone(), threshold, prefix.clone()).unwrap();
        let expected = if n < threshold { prefix.contains(&n) } else { residues.contains(&(n % period)) };
        prop_assert_eq!(s.contains(n), expected);
    }
}

#[test]
fn fixture_values() {
    let p = Poly::parse("3*x1+2*x2+4*x3-y1-8*y2").unwrap();
    let ones: BTreeMap<String, BigInt> =
        ["x1", "x2", "x3", "y1", "y2"].iter().map(|v| (v.to_string(), BigInt::from(1))).collect();
    assert_eq!(p.eval(&ones).unwrap(), BigInt::from(0));
    let q = Poly::parse("x+y-z^2").unwrap();
    assert_eq!(q.degree(), 2);
    assert!(!q.is_homogeneous());
    let r = Poly::parse("x*y + y*t - w").unwrap();
    assert_eq!(r.degree(), 2);
    for v in ["x", "y", "t", "w"] {
        assert_eq!(r.partial_degree(v), 1);
    }
    assert!(Poly::parse("x^0").is_err());
    assert!(Poly::parse("").is_err());
    let missing: BTreeMap<String, BigInt> = BTreeMap::new();
    assert!(Poly::parse("x").unwrap().eval(&missing).is_err());

    let odds = PeriodicSet::periodic(2, [1]).unwrap();
    assert!(odds.contains(7) && !odds.contains(8));
    let s = PeriodicSet::new(3, [0], 5, [1]).unwrap();
    assert!(s.contains(1) && !s.contains(3));
}
