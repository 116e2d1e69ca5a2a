mod common;

use common::{content, nilpotent_in, small_rational};
use holanom::anomaly::content_report;
use holanom::charclasses::newton::{elementary_from_power_sums, power_sums_from_elementary};
use holanom::charclasses::{
    ch_content, ch_geom, ch_rep, newton_c_from_ch, newton_ch_from_c, pushforward_curve, todd,
    Atom, FieldContent, GaugeRep, Geom, Parity,
};
use holanom::exactring::{int, rat, GeneratorSet, GradedPoly, Rational};
use proptest::prelude::*;

fn line(n: u32, lambda: &Rational) -> FieldContent {
    FieldContent::single(
        n,
        1,
        Atom::new(Geom::kpow(lambda.clone()), GaugeRep::trivial(1), Parity::Even),
    )
}

/// `n` random nilpotent power sums in a shared context.
fn power_sums() -> impl Strategy<Value = (Vec<GradedPoly>, usize)> {
    (0..common::contexts().len(), 1usize..=3).prop_flat_map(|(i, n)| {
        let ctx = common::contexts()[i].clone();
        (prop::collection::vec(nilpotent_in(ctx, 4), n), Just(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ch_is_additive(a in content(2), b in content(2)) {
        let ctx = GeneratorSet::standard(2, true, true);
        let merged = a.merge(&b).unwrap();
        prop_assert_eq!(
            ch_content(&merged, &ctx).unwrap(),
            &ch_content(&a, &ctx).unwrap() + &ch_content(&b, &ctx).unwrap()
        );
    }

    #[test]
    fn ch_flips_sign_with_parity(a in content(2), k in 1i64..=5) {
        let ctx = GeneratorSet::standard(2, true, true);
        let ch = ch_content(&a, &ctx).unwrap();
        prop_assert_eq!(ch_content(&a.parity_flipped(), &ctx).unwrap(), -&ch);
        prop_assert_eq!(ch_content(&a.scaled(k), &ctx).unwrap(), ch.scale(&int(k)));
    }

    #[test]
    fn ch_is_multiplicative_on_lines(l1 in small_rational(), l2 in small_rational(), q1 in small_rational(), q2 in small_rational(), n in 1u32..=3) {
        let ctx = GeneratorSet::standard(n, false, true);
        let k = |l: &Rational| ch_geom(&Geom::kpow(l.clone()), n, &ctx).unwrap();
        prop_assert_eq!(&k(&l1) * &k(&l2), k(&(&l1 + &l2)));
        let u = |q: &Rational| ch_rep(&GaugeRep::trivial(1).with_charge(q.clone()), &ctx).unwrap();
        prop_assert_eq!(&u(&q1) * &u(&q2), u(&(&q1 + &q2)));
    }

    #[test]
    fn newton_identities_round_trip((p, n) in power_sums()) {
        let ctx = p[0].context().clone();
        let e = elementary_from_power_sums(&ctx, &p, n);
        prop_assert_eq!(power_sums_from_elementary(&ctx, &e, n), p);
    }

    #[test]
    fn kpow_closed_forms(lambda in small_rational()) {
        let r = content_report(&line(2, &lambda)).unwrap();
        let x = &lambda * int(2) - int(1);
        prop_assert_eq!(r.a_hol.unwrap(), &x / int(24));
        prop_assert_eq!(r.c_hol.unwrap(), -(&x * &x * &x) / int(48));
    }

    #[test]
    fn serre_duality_on_lines(lambda in small_rational(), n in 1u32..=3) {
        let dual = int(1) - &lambda;
        let a = content_report(&line(n, &lambda)).unwrap().full;
        let b = content_report(&line(n, &dual)).unwrap().full;
        let sign = if n % 2 == 0 { -1 } else { 1 };
        prop_assert_eq!(b, a.scale(&int(sign)));
    }

    #[test]
    fn curve_pushforward_of_todd(chi in small_rational()) {
        let ctx = GeneratorSet::gravitational(2);
        let td6 = todd(2, &ctx).unwrap().component(6);
        let pushed = pushforward_curve(&td6, 1, &chi).unwrap();
        let expected = GradedPoly::from_terms(pushed.context(), &[(&chi / int(12), "g1^2")]).unwrap();
        prop_assert_eq!(pushed, expected);
    }
}

#[test]
fn newton_round_trip_on_generators() {
    for n in 1..=3u32 {
        let ctx = GeneratorSet::gravitational(n);
        let chern = newton_c_from_ch(n, &ctx).unwrap();
        let ch = newton_ch_from_c(&chern, &ctx);
        for k in 1..=n {
            assert_eq!(
                ch[k as usize - 1],
                GradedPoly::generator(&ctx, &format!("g{k}")).unwrap()
            );
        }
    }
}

#[test]
fn todd_low_degrees() {
    for n in 1..=4u32 {
        let ctx = GeneratorSet::gravitational(n);
        let td = todd(n, &ctx).unwrap();
        assert_eq!(td.constant_term(), int(1));
        assert_eq!(td.component(2), GradedPoly::from_terms(&ctx, &[(rat(1, 2), "g1")]).unwrap());
    }
}

#[test]
fn todd_of_a_curve() {
    let ctx = GeneratorSet::gravitational(1);
    let expected = GradedPoly::from_terms(
        &ctx,
        &[(int(1), "1"), (rat(1, 2), "g1"), (rat(1, 12), "g1^2")],
    )
    .unwrap();
    assert_eq!(todd(1, &ctx).unwrap(), expected);
}

#[test]
fn todd_of_a_surface_in_degree_six() {
    let ctx = GeneratorSet::gravitational(2);
    let expected =
        GradedPoly::from_terms(&ctx, &[(rat(-1, 24), "g1*g2"), (rat(1, 48), "g1^3")]).unwrap();
    assert_eq!(todd(2, &ctx).unwrap().component(6), expected);
}
