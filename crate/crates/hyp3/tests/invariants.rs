//! Property tests for invariants that hold for every input, not just the worked examples.

use hyp3::cli::parse_complex;
use hyp3::exact::{rat, GaussianRational, RootOfUnity};
use hyp3::roots::{relation_vanishes, solve_vanishing_sum, Relation};
use hyp3::shimura::{compare_families, fixed_part_lattice, GaussianParameter};
use hyp3::siegel::{automorphy_determinant, siegel_action, to_cmat_gaussian, SiegelPoint, SymplecticMatrix};
use hyp3::theta::{theta, theta_null, Characteristic, Parity};
use hyp3::z2z4::{exact_action, first_matrix, named_matrices};
use hyp3::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bits(g: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, g)
}

fn characteristic(g: usize) -> impl Strategy<Value = Characteristic> {
    (bits(g), bits(g)).prop_map(|(e, d)| Characteristic::new(e, d).unwrap())
}

fn point(g: usize) -> impl Strategy<Value = SiegelPoint> {
    any::<u64>().prop_map(move |s| SiegelPoint::random(&mut ChaCha8Rng::seed_from_u64(s), g, 0.8))
}

fn small_complex() -> impl Strategy<Value = Complex64> {
    (-0.5f64..0.5, -0.3f64..0.3).prop_map(|(a, b)| Complex64::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // θ[ε;δ](τ,−z) = (−1)^{ε·δ} θ[ε;δ](τ,z); in particular odd constants vanish.
    #[test]
    fn theta_parity(c in characteristic(2), tau in point(2), z in prop::collection::vec(small_complex(), 2)) {
        let minus: Vec<Complex64> = z.iter().map(|w| -w).collect();
        let a = theta(&c, &tau, &z, 1e-13).unwrap().value;
        let b = theta(&c, &tau, &minus, 1e-13).unwrap().value;
        let sign = if c.parity() == Parity::Even { 1.0 } else { -1.0 };
        prop_assert!((b - sign * a).norm() <= 1e-11 * (1.0 + a.norm()));
        if c.parity() == Parity::Odd {
            let zero = vec![Complex64::new(0.0, 0.0); 2];
            prop_assert!(theta(&c, &tau, &zero, 1e-13).unwrap().value.norm() < 1e-12);
        }
    }

    // |θ_null(γτ)| = |det(Cτ+D)|^18 |θ_null(τ)|.
    #[test]
    fn theta_null_modulus_is_weight_18(seed in any::<u64>(), len in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tau = SiegelPoint::random(&mut rng, 3, 1.0);
        let gamma = SymplecticMatrix::random_word(&mut rng, 3, len);
        let image = siegel_action(&gamma, &tau).unwrap();
        prop_assume!(image.min_imag_eigenvalue() > 0.05);
        let lhs = theta_null(&image, 1e-15).unwrap().value.norm().ln();
        let rhs = 18.0 * automorphy_determinant(&gamma, &tau).norm().ln() + theta_null(&tau, 1e-15).unwrap().value.norm().ln();
        prop_assert!((lhs - rhs).abs() < 1e-9, "{} vs {}", lhs, rhs);
    }

    // The action of a symplectic matrix and of its inverse undo each other.
    #[test]
    fn action_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tau = SiegelPoint::random(&mut rng, 3, 1.0);
        let gamma = SymplecticMatrix::random_word(&mut rng, 3, 3);
        let back = siegel_action(&gamma.inverse(), &siegel_action(&gamma, &tau).unwrap()).unwrap();
        prop_assert!((back.matrix() - tau.matrix()).norm() < 1e-9);
    }

    // Every tuple the solver produces really is a vanishing sum, whatever the rotations.
    #[test]
    fn mann_solutions_vanish(coeffs in prop::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2)], 2..5), k in 0i64..12, n in prop_oneof![Just(5i64), Just(7), Just(12)]) {
        let rel = Relation::from_ints(&coeffs).unwrap();
        let sol = solve_vanishing_sum(&rel).unwrap();
        for f in &sol.families {
            let rot = vec![RootOfUnity::from_fraction(k, n); f.free_rotations()];
            prop_assert!(relation_vanishes(rel.coefficients(), &f.with_rotations(&rot)).unwrap());
        }
    }

    // Π_u and the worked family differ by a shift of t plus an integral matrix, for every u.
    #[test]
    fn example_family_is_shifted_pi_u(p in 1i64..6, q in 2i64..9, r in 1i64..6, s in 2i64..9) {
        let u = GaussianParameter::new(rat(p, q), rat(r, s));
        prop_assume!(u.is_admissible());
        prop_assert!(compare_families(&u.a, &u.b).unwrap().difference_is_integral());
    }

    // The fixed-part degree only depends on u modulo Gaussian integers.
    #[test]
    fn fixed_part_degree_is_periodic(p in 1i64..5, q in 2i64..6, r in 1i64..5, s in 2i64..6, m in -2i64..3, n in -2i64..3) {
        let u = GaussianParameter::new(rat(p, q), rat(r, s));
        prop_assume!(u.is_admissible());
        let v = GaussianParameter::new(rat(p, q) + rat(m, 1), rat(r, s) + rat(n, 1));
        prop_assume!(v.is_admissible());
        prop_assert_eq!(fixed_part_lattice(&u).unwrap().degree, fixed_part_lattice(&v).unwrap().degree);
    }

    // The exact action of M agrees with floating point, and stays in Siegel space.
    #[test]
    fn exact_action_matches_float(a in -3i64..4, b in 1i64..5, d in 1i64..4) {
        let t = GaussianRational::new(rat(a, d), rat(b, 1) + rat(1, 2));
        let z = first_matrix(&t);
        let m = named_matrices().m;
        let exact = exact_action(&m, &z).unwrap();
        let sm = SymplecticMatrix::new(m).unwrap();
        let float = siegel_action(&sm, &SiegelPoint::new(to_cmat_gaussian(&z)).unwrap()).unwrap();
        prop_assert!((to_cmat_gaussian(&exact) - float.matrix()).norm() < 1e-10);
    }

    #[test]
    fn characteristic_display_round_trips(c in characteristic(3)) {
        let shown = c.to_string();
        let inner = shown.trim_start_matches('[').trim_end_matches(']');
        prop_assert_eq!(Characteristic::parse(inner).unwrap(), c);
    }

    #[test]
    fn complex_parse_round_trips(re in -1e3f64..1e3, im in -1e3f64..1e3) {
        let z = parse_complex(&format!("{re}{im:+}i")).unwrap();
        prop_assert_eq!(z, Complex64::new(re, im));
    }
}
