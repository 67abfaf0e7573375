use proptest::prelude::*;
use superschur::coxeter::{lambda_pm, star_even, star_super, CosetElement};
use superschur::repchar::SuperWeight;
use superschur::sab::{
    check_weyl_type, jacobi_trudi, sab_via_definition, sab_via_lr, weight_balanced, CosetCutoff, SabRequest,
};
use superschur::schur::{rational_schur_at_shift, variables, Letters};
use superschur::series::{binomial_product, expand_inverse_product};
use superschur::{GeneralizedPartition, GradedAlphabet, LaurentSeries, Parity, Partition, Side, Universe};

fn arb_lambda(max_d: usize, bound: i64) -> impl Strategy<Value = GeneralizedPartition> {
    prop::collection::vec(-bound..=bound, 1..=max_d).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        GeneralizedPartition::new(v).unwrap()
    })
}

fn arb_alphabet(side: Side, prefix: &'static str) -> impl Strategy<Value = GradedAlphabet> {
    prop::collection::vec(any::<bool>(), 1..=2).prop_map(move |odd| {
        GradedAlphabet::new(
            side,
            odd.iter()
                .enumerate()
                .map(|(i, &o)| (format!("{prefix}{}", i + 1), if o { Parity::Odd } else { Parity::Even })),
        )
    })
}

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| prop::sample::select(Partition::all_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn three_paths_agree_and_balance(
        lam in arb_lambda(3, 2),
        a in arb_alphabet(Side::Direct, "a"),
        b in arb_alphabet(Side::Inverse, "b"),
        n in 0..=4i64,
    ) {
        let req = SabRequest::new(lam.clone(), a, b, Some(n)).unwrap();
        let lr = sab_via_lr(&req).unwrap();
        prop_assert_eq!(&lr, &sab_via_definition(&req).unwrap());
        prop_assert_eq!(&lr, &jacobi_trudi(&req).unwrap());
        prop_assert!(weight_balanced(&lr, lam.sum()));
    }

    #[test]
    fn weyl_type_holds(
        lam in arb_lambda(2, 2),
        a in arb_alphabet(Side::Direct, "a"),
        b in arb_alphabet(Side::Inverse, "b"),
    ) {
        let req = SabRequest::new(lam, a, b, Some(3)).unwrap();
        let rep = check_weyl_type(&req, CosetCutoff::Auto).unwrap();
        prop_assert!(rep.passed(), "{}", rep.to_text());
    }

    #[test]
    fn geometric_expansion_inverts(
        exps in prop::collection::vec((prop::bool::ANY, 0..3i32, 1..3i32), 1..=3),
        n in 0..6i64,
    ) {
        let u = Universe::new([("a", Side::Direct), ("b", Side::Inverse)]).unwrap();
        let factors: Vec<(i32, Vec<i32>)> =
            exps.iter().map(|&(s, ea, eb)| (if s { 1 } else { -1 }, vec![ea, -eb])).collect();
        let inv = expand_inverse_product(&u, &factors, n).unwrap();
        let negated: Vec<(i32, Vec<i32>)> = factors.iter().map(|(s, m)| (-s, m.clone())).collect();
        let prod = (&inv * &binomial_product(&u, &negated)).truncate(n);
        prop_assert_eq!(prod, LaurentSeries::one(&u).truncate(n));
    }

    #[test]
    fn weight_balance_of_shifted_action(lam in arb_lambda(3, 3), mu in arb_partition(6)) {
        let (plus, minus) = lambda_pm(&CosetElement::new(mu), &lam);
        prop_assert_eq!(plus.weight() as i64 - minus.weight() as i64, lam.sum());
    }

    #[test]
    fn rational_schur_ignores_extra_shift(lam in arb_lambda(3, 2), extra in 1..=2i64) {
        let u = variables("t", 1..=lam.d() as i64, Side::Direct);
        let t = Letters::all(&u);
        let p = lam.min_shift();
        prop_assert_eq!(
            rational_schur_at_shift(&lam, &t, p).unwrap(),
            rational_schur_at_shift(&lam, &t, p + extra).unwrap()
        );
    }

    #[test]
    fn star_outputs_are_dominant_with_alternating_sign(mu in arb_partition(6), hook in arb_partition(5)) {
        let w = CosetElement::new(mu.clone());
        prop_assert_eq!(w.sign(), if mu.weight() % 2 == 0 { 1 } else { -1 });
        let dominant = |v: &[i64]| v.windows(2).all(|x| x[0] >= x[1]);
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            if hook.is_hook(m, n) {
                if let Ok((neg, pos)) = star_super(&w, &hook, m, n, hook.first().max(1)) {
                    prop_assert!(dominant(&neg) && dominant(&pos));
                }
            }
            for d in 1..=2 {
                if let Ok((neg, pos)) = star_even(&w, &GeneralizedPartition::zero(d), m, n) {
                    prop_assert!(dominant(&neg) && dominant(&pos));
                }
            }
        }
    }
}

#[test]
fn hook_weights_round_trip() {
    for m in 1..=3 {
        for n in 1..=3 {
            for lam in Partition::all_up_to(8).into_iter().filter(|l| l.is_hook(m, n)) {
                let w = SuperWeight::from_hook_partition(&lam, m, n).unwrap();
                assert!(w.is_hook_class(), "{w}");
                assert_eq!(w.hook_partition().unwrap(), lam);
            }
        }
    }
}

#[test]
fn empty_beta_vanishes_off_partitions() {
    // With one even and one odd letter a partition survives iff it is a (1|1) hook.
    let a = GradedAlphabet::parse("a1:0,a2:1", Side::Direct).unwrap();
    for lam in GeneralizedPartition::all_in_range(2, -2, 2) {
        let req = SabRequest::new(lam.clone(), a.clone(), GradedAlphabet::empty(Side::Inverse), None).unwrap();
        let expect_zero = !lam.is_partition() || lam.parts()[1] > 1;
        assert_eq!(sab_via_lr(&req).unwrap().is_zero(), expect_zero, "{lam}");
    }
}
