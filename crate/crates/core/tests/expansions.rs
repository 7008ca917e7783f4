use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use polysym::stack::stack_partitions;
use polysym::{
    convert, enumerate_partitions, expand_generator, expand_type, multiply, omega, to_m, BasisTag,
    PolyElement, Rational, StackPartition,
};

fn sp(text: &str) -> StackPartition {
    text.parse().unwrap()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

const GENERATED: [BasisTag; 5] = [
    BasisTag::H,
    BasisTag::E,
    BasisTag::EPlus,
    BasisTag::HPlus,
    BasisTag::P,
];

#[test]
fn expand_type_equals_product_of_generators() {
    for n in 0..=7 {
        for tau in stack_partitions(n).iter() {
            for tag in GENERATED {
                let product = tau
                    .stacks()
                    .iter()
                    .fold(PolyElement::one(BasisTag::M), |acc, s| {
                        multiply(
                            &acc,
                            &expand_generator(tag, s.degree(), s.multiplicity()).unwrap(),
                        )
                    });
                assert_eq!(expand_type(tag, tau), product, "{tag}[{tau}]");
            }
        }
    }
}

#[test]
fn expansion_coefficients_are_integers_with_expected_signs() {
    for n in 0..=7 {
        for tau in stack_partitions(n).iter() {
            for tag in GENERATED {
                let x = expand_type(tag, tau);
                assert!(x.has_integer_coefficients(), "{tag}[{tau}]");
                if matches!(tag, BasisTag::H | BasisTag::EPlus | BasisTag::P) {
                    assert!(x.terms().all(|(_, c)| c.is_positive()), "{tag}[{tau}]");
                }
            }
        }
    }
}

#[test]
fn generators_scale_through_multiplicities() {
    for tag in GENERATED {
        for d in 1..=5 {
            let base = expand_generator(tag, d, 1).unwrap();
            for m in 2..=3 {
                let want = PolyElement::from_terms(
                    BasisTag::M,
                    base.terms()
                        .map(|(t, c)| (t.scale_multiplicities(m).unwrap(), c.clone())),
                );
                assert_eq!(expand_generator(tag, d, m).unwrap(), want, "{tag} {d}^{m}");
            }
        }
    }
    assert!(expand_generator(BasisTag::H, 0, 1).is_err());
    assert!(expand_generator(BasisTag::H, 1, 0).is_err());
}

#[test]
fn small_generators() {
    assert_eq!(
        expand_generator(BasisTag::HPlus, 1, 1).unwrap().to_string(),
        "-1*M[1]"
    );
    assert_eq!(
        expand_generator(BasisTag::HPlus, 2, 1).unwrap().to_string(),
        "-1*M[2] + 1*M[1 1] + 1*M[1^2]"
    );
    assert_eq!(expand_type(BasisTag::E, &sp("1")).to_string(), "-1*M[1]");
    let m1 = PolyElement::singleton(BasisTag::M, sp("1"));
    assert_eq!(multiply(&m1, &m1).to_string(), "2*M[1 1] + 1*M[1^2]");
}

/// Applies `x ↦ x^r` to an M-expansion.
fn substitute_power(x: &PolyElement, r: u32) -> PolyElement {
    PolyElement::from_terms(
        BasisTag::M,
        x.terms()
            .map(|(t, c)| (t.scale_multiplicities(r).unwrap(), c.clone())),
    )
}

/// `P_d` from the recursion
/// `P_d = Σ_{i+j=d, i>0} Σ_{λ ⊢ j} (-1)^{ℓ(λ)} i (ℓ(λ); m(λ)) E⁺_{λ ∪ i} + [d even] 2 P_{(d/2)^2}`.
fn p_by_recursion(d: u32) -> PolyElement {
    let mut out = PolyElement::zero(BasisTag::M);
    for i in 1..=d {
        for lambda in enumerate_partitions(d - i) {
            let sign = if lambda.len() % 2 == 0 { 1 } else { -1 };
            let c = BigInt::from(sign) * BigInt::from(i) * BigInt::from(lambda.rearrangements());
            let mut parts = lambda.parts().to_vec();
            parts.push(i);
            let nu = StackPartition::from_partition(&polysym::Partition::new(parts));
            out.add_scaled(
                &expand_type(BasisTag::EPlus, &nu),
                &Rational::from_integer(c),
            )
            .unwrap();
        }
    }
    if d.is_multiple_of(2) {
        let half = substitute_power(&p_by_recursion(d / 2), 2);
        out.add_scaled(&half, &int(2)).unwrap();
    }
    out
}

#[test]
fn power_sums_match_the_piecewise_recursion() {
    for d in 1..=8 {
        assert_eq!(
            p_by_recursion(d),
            expand_generator(BasisTag::P, d, 1).unwrap(),
            "P_{d}"
        );
    }
}

#[test]
fn conversions_preserve_the_element() {
    let x = PolyElement::from_terms(
        BasisTag::H,
        [
            (sp("3 1"), int(2)),
            (sp("2^2"), Rational::new((-1).into(), 3.into())),
            (sp("1"), int(5)),
        ],
    );
    let m = to_m(&x);
    for tag in BasisTag::ALL {
        let y = convert(&x, tag).unwrap();
        assert_eq!(to_m(&y), m, "{tag}");
        assert_eq!(convert(&y, BasisTag::H).unwrap(), x, "{tag}");
    }
    assert_eq!(convert(&x, BasisTag::H).unwrap(), x);
}

#[test]
fn power_sum_in_h() {
    let p4 = PolyElement::singleton(BasisTag::P, sp("4"));
    assert_eq!(
        convert(&p4, BasisTag::H).unwrap().to_string(),
        "4*H[4] + -4*H[3 1] + -2*H[2 2] + 4*H[2 1 1] + -1*H[1 1 1 1]"
    );
}

#[test]
fn omega_exchanges_dual_bases() {
    for n in 0..=6 {
        for tau in stack_partitions(n).iter() {
            let h = PolyElement::singleton(BasisTag::H, tau.clone());
            let e = PolyElement::singleton(BasisTag::E, tau.clone());
            assert_eq!(to_m(&omega(&h).unwrap()), to_m(&e), "H[{tau}]");
            let ep = PolyElement::singleton(BasisTag::EPlus, tau.clone());
            let hp = PolyElement::singleton(BasisTag::HPlus, tau.clone());
            assert_eq!(to_m(&omega(&ep).unwrap()), to_m(&hp), "E+[{tau}]");
        }
    }
}

#[test]
fn unit_and_zero() {
    for tag in BasisTag::ALL {
        assert_eq!(to_m(&PolyElement::one(tag)), PolyElement::one(BasisTag::M));
        assert!(convert(&PolyElement::zero(tag), BasisTag::P)
            .unwrap()
            .is_zero());
    }
    assert!(PolyElement::one(BasisTag::H)
        .coeff(&StackPartition::empty())
        .is_one());
    assert!(PolyElement::one(BasisTag::H).coeff(&sp("1")).is_zero());
}
