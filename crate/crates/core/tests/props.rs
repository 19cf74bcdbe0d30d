use proptest::prelude::*;

use refsheaf::atlas::Atlas;
use refsheaf::chow::{chern_character, chern_triple_of, euler_char, twist, ChernTriple};
use refsheaf::cohomtable::{synthesize, Fact, TwistRange};
use refsheaf::curves::{curve_chi, extremal_sheaf_h1, omega_sections, serre_curve, CurveClass};
use refsheaf::expr::Poly;
use refsheaf::liaison::{h1_transfer, linked_curve, linked_family_dim, LinkSpec};
use refsheaf::spectrum::enumerate_spectra;

fn rank2() -> impl Strategy<Value = ChernTriple> {
    (-1i64..=0, -50i64..=50, -200i64..=200).prop_map(|(c1, c2, c3)| ChernTriple::rank2(c1, c2, c3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn twist_is_additive(t in rank2(), a in -20i64..=20, b in -20i64..=20) {
        prop_assert_eq!(twist(&twist(&t, a), b), twist(&t, a + b));
        prop_assert_eq!(twist(&t, 0), t);
    }

    #[test]
    fn rank_two_c3_is_twist_invariant(t in rank2(), n in -20i64..=20) {
        let u = twist(&t, n);
        prop_assert_eq!(u.c3, t.c3);
        prop_assert_eq!(u.c1, t.c1 + 2 * n);
        prop_assert_eq!(u.c2, t.c2 + t.c1 * n + n * n);
    }

    #[test]
    fn euler_commutes_with_twist(c1 in -1i64..=0, c2 in -50i64..=50, half in -100i64..=100, n in -10i64..=10, l in -10i64..=10) {
        // Integrality of chi needs c3 = c1 c2 mod 2.
        let t = ChernTriple::rank2(c1, c2, 2 * half + (c1 * c2).rem_euclid(2));
        let e = euler_char(&t, l + n);
        prop_assert!(e.is_ok());
        prop_assert_eq!(euler_char(&twist(&t, n), l), e);
    }

    #[test]
    fn chern_character_round_trips(rank in 0u32..5, c1 in -30i64..30, c2 in -30i64..30, c3 in -30i64..30) {
        let t = ChernTriple::new(rank, c1, c2, c3);
        prop_assert_eq!(chern_triple_of(&chern_character(&t)), Ok(t));
    }
}

proptest! {
    #[test]
    fn serre_degree_is_c2_of_twist(c1 in -1i64..=0, c3 in 0i64..=8, k in 1i64..=4) {
        let c3 = 2 * c3;
        let s = serre_curve(c1, 4, c3, k).unwrap();
        prop_assert_eq!(s.curve.degree, twist(&ChernTriple::rank2(c1, 4, c3), k).c2);
        prop_assert!(!s.extrapolated);
    }

    #[test]
    fn serre_genus_needs_even_c3(c1 in -1i64..=0, c3 in 0i64..=16, k in 1i64..=4) {
        prop_assert_eq!(serre_curve(c1, 4, c3, k).is_ok(), c3 % 2 == 0);
    }

    #[test]
    fn omega_plus_chi_vanishes(d in 1i64..30, g in -10i64..30, n in 1i64..10) {
        let c = CurveClass::new(d, g).unwrap();
        match omega_sections(c, n) {
            Ok(h) => prop_assert_eq!(h as i64 + curve_chi(c, -n), 0),
            Err(_) => prop_assert!(curve_chi(c, -n) > 0),
        }
    }

    #[test]
    fn linkage_is_an_involution(d in 1i64..20, g in -10i64..20, s in 1i64..7, t in 1i64..7) {
        let l = LinkSpec::new(CurveClass::new(d, g).unwrap(), s, t).unwrap();
        if let Ok(other) = linked_curve(&l) {
            let back = linked_curve(&LinkSpec::new(other, s, t).unwrap()).unwrap();
            prop_assert_eq!(back, l.curve);
        }
    }

    #[test]
    fn h1_transfer_is_an_involution(s in 1i64..7, t in 1i64..7, n in -10i64..10) {
        let l = LinkSpec::new(CurveClass::new(1, 0).unwrap(), s, t).unwrap();
        prop_assert_eq!(h1_transfer(&l, h1_transfer(&l, n)), n);
    }

    #[test]
    fn family_dimension_transfer_is_antisymmetric(dim in 0i64..60, a in 0u64..30, b in 0u64..30, c in 0u64..30, e in 0u64..30) {
        let linked = linked_family_dim(dim, a, b, c, e);
        prop_assert_eq!(linked_family_dim(linked, c, e, a, b), dim);
    }

    #[test]
    fn extremal_h1_support(c1 in -1i64..=0, d in 3i64..9, len_z in 1i64..6, t in -10i64..15) {
        let h = extremal_sheaf_h1(c1, d, len_z, t).unwrap();
        let (lo, hi) = if len_z >= 2 { (-2 - c1, d - 2 - c1) } else { (-1 - c1, d - 3 - c1) };
        prop_assert_eq!(h > 0, lo <= t && t <= hi);
        prop_assert!(h <= len_z as u64);
    }

    #[test]
    fn poly_display_round_trips(a in -20i64..20, b in -5i64..5, c in -5i64..5) {
        let p = Poly::constant(a) + Poly::var("l") * Poly::constant(b) + Poly::var("l") * Poly::var("m") * Poly::constant(c);
        prop_assert_eq!(Poly::parse(&p.to_string()), Ok(p));
    }

    #[test]
    fn fact_display_round_trips(row in 0usize..4, twist in -5i64..5, value in 0i64..50) {
        let f = Fact::Value { row, twist, value };
        prop_assert_eq!(Fact::parse(&f.to_string(), &Default::default()).unwrap(), f);
    }
}

#[test]
fn synthesized_tables_satisfy_euler_characteristic() {
    for c1 in [0, -1] {
        for c3 in 0..=16 {
            for v in enumerate_spectra(c1, 4, c3).unwrap() {
                let t = synthesize(c1, 4, c3, &v.spectrum, TwistRange::new(-4, 4), &[]).unwrap();
                assert_eq!(t.identity_violations().unwrap(), Vec::<i64>::new(), "{}", v.spectrum);
            }
        }
    }
}

#[test]
fn atlas_jsonl_round_trips() {
    let a = Atlas::builtin();
    assert_eq!(Atlas::from_jsonl(&a.to_jsonl()).unwrap(), a);
}
