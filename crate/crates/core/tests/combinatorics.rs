use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;

use polysym::arith::{divisors, factorial};
use polysym::series::{realize, Monomial, TruncatedSeries};
use polysym::stack::stack_partitions;
use polysym::{
    enumerate_partitions, enumerate_stack_partitions, m_product, BasisTag, PolyElement, Rational,
    StackPartition,
};

fn one_variable(cap: u32, e: u32, c: i64) -> TruncatedSeries {
    TruncatedSeries::monomial(
        cap,
        Monomial::new([((1, 1), e)], 0),
        Rational::from_integer(c.into()),
    )
}

#[test]
fn counts_match_the_infinite_product() {
    let cap = 12;
    let mut product = TruncatedSeries::one(cap);
    for w in 1..=cap {
        // One factor (1 - x^w)^{-1} for each stack d^m with d·m = w.
        for _ in divisors(w) {
            let factor = TruncatedSeries::one(cap).sub(&one_variable(cap, w, 1));
            product = product.mul(&factor.inverse().unwrap());
        }
    }
    for n in 0..=cap {
        let want = product.coeff(&Monomial::new([((1, 1), n)], 0));
        let got = enumerate_stack_partitions(n).len() as i64;
        assert_eq!(Rational::from_integer(got.into()), want, "n={n}");
    }
}

#[test]
fn enumeration_is_canonical_and_distinct() {
    for n in 0..=10 {
        let all = enumerate_stack_partitions(n);
        let unique: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(unique.len(), all.len());
        assert!(all.windows(2).all(|w| w[0] < w[1]), "n={n} is not sorted");
        for tau in &all {
            assert_eq!(tau.weight(), n);
            let again: StackPartition = tau.to_string().parse().unwrap();
            assert_eq!(&again, tau);
            assert_eq!(&StackPartition::from_pairs(&tau.to_pairs()).unwrap(), tau);
        }
    }
}

#[test]
fn global_order_at_four() {
    let rendered: Vec<String> = stack_partitions(4).iter().map(|t| t.to_string()).collect();
    assert_eq!(
        rendered,
        [
            "4", "3 1", "2 2", "2 1 1", "1 1 1 1", "2^2", "2 1^2", "1^2 1 1", "1^2 1^2", "1^3 1",
            "1^4"
        ]
    );
}

#[test]
fn sign_is_the_product_over_degrees() {
    for n in 0..=10 {
        for tau in stack_partitions(n).iter() {
            let by_degree: i32 = tau
                .degrees()
                .iter()
                .map(|&d| {
                    if tau.restrict(d).weight() % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                })
                .product();
            assert_eq!(tau.sign(), by_degree, "{tau}");
            assert_eq!(tau.sign(), if tau.area() % 2 == 0 { 1 } else { -1 });
        }
    }
}

#[test]
fn scaling_multiplicities() {
    for n in 0..=7 {
        for tau in stack_partitions(n).iter() {
            for r in 1..=3 {
                let scaled = tau.scale_multiplicities(r).unwrap();
                assert_eq!(scaled.weight(), r * tau.weight());
                assert_eq!(scaled.area(), r * tau.area());
                for d in tau.degrees() {
                    let parts: Vec<u32> = tau.restrict(d).parts().iter().map(|p| p * r).collect();
                    assert_eq!(scaled.restrict(d).parts(), &parts[..], "{tau} by {r}");
                }
            }
        }
    }
    assert!(StackPartition::empty().scale_multiplicities(0).is_err());
}

#[test]
fn z_divides_the_rearrangement_bound() {
    for n in 0..=10 {
        for lambda in enumerate_partitions(n) {
            let bound = lambda
                .multiplicities()
                .iter()
                .fold(factorial(lambda.len() as u64), |acc, (&i, &m)| {
                    acc * BigUint::from(i).pow(m as u32)
                });
            assert_eq!(bound % lambda.z_value(), BigUint::from(0u32), "{lambda}");
        }
    }
}

#[test]
fn stack_divisor_counts() {
    for n in 0..=8 {
        for tau in stack_partitions(n).iter() {
            let want: usize = tau
                .stacks()
                .iter()
                .map(|s| divisors(s.degree()).len())
                .product();
            assert_eq!(tau.stack_divisors().len(), want, "{tau}");
        }
    }
}

#[test]
fn realizations_of_monomials_are_disjoint_and_faithful() {
    for n in 0..=5 {
        let mut seen = HashSet::new();
        for tau in stack_partitions(n).iter() {
            let r = realize(&PolyElement::singleton(BasisTag::M, tau.clone()), n, n);
            assert!(r.faithful, "{tau}");
            assert!(!r.series.is_zero(), "{tau}");
            for (mono, c) in r.series.terms() {
                assert!(c.is_one());
                assert!(seen.insert(mono.clone()), "{tau} shares {mono}");
            }
        }
    }
    let short = realize(
        &PolyElement::singleton(BasisTag::M, "1 1 1".parse().unwrap()),
        2,
        3,
    );
    assert!(!short.faithful);
    assert!(short.series.is_zero());
}

#[test]
fn realization_is_multiplicative() {
    let cap = 5;
    for a in 1..=3 {
        for b in 1..=(cap - a) {
            for alpha in stack_partitions(a).iter() {
                for beta in stack_partitions(b).iter() {
                    let ra = realize(
                        &PolyElement::singleton(BasisTag::M, alpha.clone()),
                        cap,
                        cap,
                    )
                    .series;
                    let rb = realize(&PolyElement::singleton(BasisTag::M, beta.clone()), cap, cap)
                        .series;
                    let product = m_product(&[alpha.clone(), beta.clone()]);
                    assert_eq!(
                        realize(&product, cap, cap).series,
                        ra.mul(&rb),
                        "{alpha} * {beta}"
                    );
                }
            }
        }
    }
}

fn sample_series(cap: u32) -> TruncatedSeries {
    let mono = |f: Vec<((u32, u32), u32)>, t| Monomial::new(f, t);
    let mut s = TruncatedSeries::zero(cap);
    s.add_term(mono(vec![((1, 1), 1)], 1), Rational::from_integer(2.into()));
    s.add_term(
        mono(vec![((1, 2), 1), ((2, 1), 1)], 2),
        Rational::new(1.into(), 3.into()),
    );
    s.add_term(
        mono(vec![((2, 2), 2)], 3),
        Rational::from_integer((-1).into()),
    );
    s
}

#[test]
fn exp_and_log_are_inverse() {
    let f = sample_series(6);
    let back = f.exp().unwrap().log().unwrap();
    assert_eq!(back, f);
    let g = TruncatedSeries::one(6).add(&f);
    assert_eq!(g.log().unwrap().exp().unwrap(), g);
    assert_eq!(g.mul(&g.inverse().unwrap()), TruncatedSeries::one(6));
    assert!(g.exp().is_err());
    assert!(f.log().is_err());
}

#[test]
fn derivative_obeys_the_product_rule() {
    let f = sample_series(6);
    let g = TruncatedSeries::one(6).add(&sample_series(6).pow(2));
    let lhs = f.mul(&g).derivative_t();
    let rhs = f.derivative_t().mul(&g).add(&f.mul(&g.derivative_t()));
    assert_eq!(lhs, rhs);
}
