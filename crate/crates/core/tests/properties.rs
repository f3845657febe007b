use num_bigint::BigInt;
use proptest::prelude::*;

use shapovalov::arith::{binomial, multinomial};
use shapovalov::barcore::{bar_core, bar_quotient, from_core_quotient, is_bar_core};
use shapovalov::fock::{chi_convert, r_apply_f, r_form, ChiDirection, RFockVector};
use shapovalov::symfunc::{mult_pieri_e, mult_pieri_h, mult_pieri_q, sym_inner, SymElement};
use num_traits::Zero;
use shapovalov::{GlobalParams, LaurentPoly, Multipartition, Partition, Rational};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..6, -5i64..5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn any_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn strict_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1..=max_part, 0..=max_len)
        .prop_map(|s| Partition::from_unsorted(s.into_iter().collect()))
}

/// A `p`-strict partition: parts not divisible by `p` are distinct.
fn p_strict_partition(p: u32) -> impl Strategy<Value = Partition> {
    (
        prop::collection::btree_set(1..=16u32, 0..=5),
        prop::collection::vec((1..=3u32, 1..=3u32), 0..=2),
    )
        .prop_map(move |(free, repeated)| {
            let mut parts: Vec<u32> = free.into_iter().filter(|x| x % p != 0).collect();
            for (k, m) in repeated {
                parts.extend(std::iter::repeat_n(k * p, m as usize));
            }
            Partition::from_unsorted(parts)
        })
}

fn params(ell: usize) -> GlobalParams {
    GlobalParams::new(ell).unwrap()
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).eval_q1(), a.eval_q1() * b.eval_q1());
        prop_assert_eq!((&a + &b).eval_q1(), a.eval_q1() + b.eval_q1());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in laurent(), b in laurent()) {
        let b = if b.is_zero() { LaurentPoly::one() } else { b };
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn multinomial_is_a_product_of_binomials(parts in prop::collection::vec(0u64..6, 0..5)) {
        let mut total = 0;
        let mut expect = BigInt::from(1);
        for &k in &parts {
            total += k;
            expect *= binomial(total, k);
        }
        prop_assert_eq!(multinomial(&parts), expect);
    }

    #[test]
    fn partition_text_round_trip(l in any_partition(20, 8)) {
        prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l.clone());
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn core_and_quotient_determine_the_partition((ell, l) in (1usize..=3).prop_flat_map(|ell| (Just(ell), p_strict_partition(2 * ell as u32 + 1)))) {
        let pr = params(ell);
        let core = bar_core(&l, &pr).unwrap();
        prop_assert!(is_bar_core(&core, &pr));
        let quot = bar_quotient(&l, &pr).unwrap();
        prop_assert_eq!(core.size() + pr.p * quot.size(), l.size());
        prop_assert_eq!(from_core_quotient(&core, &quot, &pr).unwrap(), l);
    }

    #[test]
    fn pieri_operators_commute(alpha in any_partition(4, 3), a in 0u32..3, b in 0u32..3) {
        let pr = params(1);
        let v = SymElement::basis(Multipartition::empty(&pr).with_component(1, alpha));
        let hh = |x, y| mult_pieri_h(&mult_pieri_h(&v, 1, x, &pr).unwrap(), 1, y, &pr).unwrap();
        prop_assert_eq!(hh(a, b), hh(b, a));
        let ee = |x, y| mult_pieri_e(&mult_pieri_e(&v, 1, x, &pr).unwrap(), 1, y, &pr).unwrap();
        prop_assert_eq!(ee(a, b), ee(b, a));
        let he = mult_pieri_e(&mult_pieri_h(&v, 1, a, &pr).unwrap(), 1, b, &pr).unwrap();
        let eh = mult_pieri_h(&mult_pieri_e(&v, 1, b, &pr).unwrap(), 1, a, &pr).unwrap();
        prop_assert_eq!(he, eh);
    }

    #[test]
    fn q_pieri_operators_commute(alpha in strict_partition(5, 3), a in 0u32..4, b in 0u32..4) {
        let pr = params(1);
        let v = SymElement::basis(Multipartition::empty(&pr).with_component(0, alpha));
        prop_assert_eq!(mult_pieri_q(&mult_pieri_q(&v, a), b), mult_pieri_q(&mult_pieri_q(&v, b), a));
    }

    #[test]
    fn sym_inner_is_symmetric(a in strict_partition(5, 3), b in strict_partition(5, 3), r in 0u32..4) {
        let pr = params(1);
        let x = mult_pieri_q(&SymElement::basis(Multipartition::empty(&pr).with_component(0, a)), r);
        let y = mult_pieri_q(&SymElement::basis(Multipartition::empty(&pr).with_component(0, b)), r);
        prop_assert_eq!(sym_inner(&x, &y), sym_inner(&y, &x));
        prop_assert!(sym_inner(&x, &x) >= Rational::from_integer(0.into()));
    }

    #[test]
    fn reduced_actions_stay_strict(ell in 1usize..=3, l in strict_partition(12, 5), word in prop::collection::vec(0usize..4, 0..5)) {
        let pr = params(ell);
        let mut v = RFockVector::basis(l);
        for i in word.into_iter().filter(|&i| i <= ell) {
            v = r_apply_f(i, &v, &pr);
        }
        prop_assert!(v.support().all(Partition::is_strict));
        prop_assert!(r_form(&v, &v, &pr) >= Rational::from_integer(0.into()));
        prop_assert_eq!(r_form(&v, &v, &pr).is_zero(), v.is_zero());
        let chi = chi_convert(&v, ChiDirection::ToChi, &pr).unwrap();
        prop_assert_eq!(chi_convert(&chi, ChiDirection::FromChi, &pr).unwrap(), v);
    }
}
