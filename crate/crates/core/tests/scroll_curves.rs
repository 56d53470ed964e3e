use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

use apolar_kit::curvegen::{
    eval_in_algebra, expected_ideal_dims, fiber_point, genus_adjunction, ideal_pieces, points_needed, sample_points,
    tetragonal_curve, trigonal_curve, BaseValues, CurveSpec, SATURATION_MARGIN,
};
use apolar_kit::pipeline::splits;
use apolar_kit::scroll::{canonical_class, chow_product, embed_point, scroll_quadrics, DivisorClass, Scroll};

fn curves() -> Vec<CurveSpec> {
    let mut out: Vec<CurveSpec> = (5..=8).map(|g| trigonal_curve(g, 40 + u64::from(g)).unwrap()).collect();
    for g in 6..=8 {
        for (b1, b2) in splits(g) {
            out.push(tetragonal_curve(g, b1, b2, 50 + u64::from(g)).unwrap());
        }
    }
    out
}

#[test]
fn embedded_points_satisfy_the_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let k = rng.gen_range(1..=4);
        let ty: Vec<u32> = (0..k).map(|_| rng.gen_range(0..=4)).collect();
        let Ok(s) = Scroll::new(ty) else { continue };
        let mut r = || Rational::from((rng.gen_range(-9..=9), rng.gen_range(1..=4)));
        let base = [r(), r()];
        let fiber: Vec<Rational> = (0..k).map(|_| r()).collect();
        let Ok(p) = embed_point(&s, base, fiber) else { continue };
        for q in scroll_quadrics(&s) {
            assert_eq!(q.evaluate(&p.image), 0);
        }
    }
}

#[test]
fn curve_classes_have_the_right_numbers() {
    for g in 5..=12u32 {
        let s = Scroll::balanced(3, g - 3).unwrap();
        for (b1, b2) in splits(g) {
            let y1 = DivisorClass::new(2, -b1);
            let y2 = DivisorClass::new(2, -b2);
            // (2H−b1F)(2H−b2F) = 4H² + 2(5−g)HF, tested against H and F
            let h2 = chow_product(&s, &[DivisorClass::H; 3]).unwrap();
            let hf = chow_product(&s, &[DivisorClass::H, DivisorClass::H, DivisorClass::F]).unwrap();
            let lhs_h = chow_product(&s, &[y1, y2, DivisorClass::H]).unwrap();
            assert_eq!(lhs_h, 4 * h2 + 2 * (5 - i64::from(g)) * hf);
            assert_eq!(lhs_h, 2 * i64::from(g) - 2);
            assert_eq!(chow_product(&s, &[y1, y2, DivisorClass::F]).unwrap(), 4);
        }
    }
    for g in 5..=12u32 {
        let s = Scroll::balanced(2, g - 2).unwrap();
        let c = DivisorClass::new(3, 4 - i64::from(g));
        assert_eq!(genus_adjunction(&s, c).unwrap(), i64::from(g));
        let two_g_minus_2 = chow_product(&s, &[c, c + canonical_class(&s)]).unwrap();
        assert_eq!(two_g_minus_2, 2 * i64::from(g) - 2);
    }
}

#[test]
fn fibers_cut_the_pencil() {
    for curve in curves() {
        let mut seen = 0;
        for t in BaseValues::new(curve.seed).take(40) {
            if let Some(p) = fiber_point(&curve, &t) {
                assert_eq!(p.geometric_len() as u32, curve.gonality);
                seen += 1;
            }
            if curve.gonality == 3 {
                let e = curve.equations[0].at_base(&t);
                assert_eq!(e.degree(), 3);
                assert!(!e.is_zero());
            }
            if seen == 10 {
                break;
            }
        }
        assert_eq!(seen, 10, "genus {} gonality {}", curve.genus, curve.gonality);
    }
}

#[test]
fn ideals_have_expected_dimensions_and_vanish_exactly() {
    for curve in curves() {
        let count = points_needed(curve.genus) + SATURATION_MARGIN + curve.gonality as usize;
        let points = sample_points(&curve, count, 7).unwrap();
        let ideal = ideal_pieces(&curve, &points).unwrap();
        let (e2, e3) = expected_ideal_dims(curve.genus);
        assert_eq!((ideal.degree2.dim(), ideal.degree3.dim()), (e2, e3));
        let fresh = sample_points(&curve, 8, 99).unwrap();
        for p in points.iter().chain(&fresh) {
            for eq in &curve.equations {
                assert!(p
                    .algebra
                    .is_zero(&eval_in_algebra(&p.algebra, &eq.at_base(&p.t), &p.fiber)));
            }
            for gen in ideal.degree2.basis().iter().chain(ideal.degree3.basis()) {
                assert!(p.algebra.is_zero(&eval_in_algebra(&p.algebra, gen, &p.image)));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_is_top_power_of_h(ty in proptest::collection::vec(0u32..6, 1..5)) {
        prop_assume!(ty.iter().any(|&a| a > 0));
        let s = Scroll::new(ty.clone()).unwrap();
        let k = ty.len();
        let sum: i64 = ty.iter().map(|&a| i64::from(a)).sum();
        prop_assert_eq!(chow_product(&s, &vec![DivisorClass::H; k]).unwrap(), sum);
        prop_assert_eq!(sum, s.ambient_dim() - k as i64 + 1);
    }
}
