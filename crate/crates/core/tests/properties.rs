use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rank3_frobenius::cli::{ModulusExpr, ModulusValue};
use rank3_frobenius::exactnum::{
    fundamental_domain_reduce, rat, rational_recognize, ApproxComplex, BigInt, BigRational, Moebius, Point,
    QuadraticPoint,
};
use rank3_frobenius::frobenius::{are_isomorphic, sl2_act, FrobeniusPoint};
use rank3_frobenius::modform::{divisor_sum, ramanujan_tau};
use rank3_frobenius::wdvv::{extend_coefficients, ConstantSolutionParams};

fn quadratic_point() -> impl Strategy<Value = QuadraticPoint> {
    (-60i64..60, 1i64..12, 1i64..25, 1u64..60).prop_map(|(p, q, r, d)| QuadraticPoint::new(p, q, r, d).unwrap())
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-40i64..40, 1i64..30).prop_map(|(n, d)| rat(n, d))
}

fn sl2_word() -> impl Strategy<Value = Moebius> {
    proptest::collection::vec(0u8..3, 1..6).prop_map(|gens| {
        gens.into_iter().fold(Moebius::identity(), |m, g| {
            let x = match g {
                0 => Moebius::s(),
                1 => Moebius::t(),
                _ => Moebius::t_pow(-1),
            };
            &m * &x
        })
    })
}

fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

/// Truncated product of two power series given by their coefficient lists.
fn series_mul(a: &[BigRational], b: &[BigRational], len: usize) -> Vec<BigRational> {
    (0..len).map(|n| (0..=n).map(|k| &a[k] * &b[n - k]).fold(BigRational::zero(), |s, x| s + x)).collect()
}

fn series_deriv(a: &[BigRational]) -> Vec<BigRational> {
    a.iter().enumerate().skip(1).map(|(k, x)| x * rat(k as i64, 1)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_lands_in_the_fundamental_domain(tau in quadratic_point()) {
        let red = fundamental_domain_reduce(&Point::Exact(tau.clone())).unwrap();
        let q = red.point.as_exact().unwrap().clone();
        let half = rat(1, 2);
        prop_assert!(q.re() <= half && q.re() >= -half.clone());
        prop_assert!(q.norm() >= BigRational::one());
        prop_assert_eq!(red.matrix.apply_exact(&tau).unwrap(), q);
        let [a, b, c, d] = red.matrix.integer_entries().unwrap();
        prop_assert!((a * d - b * c).is_one());
    }

    #[test]
    fn exact_action_is_a_left_action(tau in quadratic_point(), a in sl2_word(), b in sl2_word()) {
        let lhs = a.apply_exact(&b.apply_exact(&tau).unwrap()).unwrap();
        prop_assert_eq!(lhs, (&a * &b).apply_exact(&tau).unwrap());
    }

    #[test]
    fn reduction_is_constant_on_orbits(tau in quadratic_point(), a in sl2_word()) {
        let r0 = fundamental_domain_reduce(&Point::Exact(tau.clone())).unwrap().point;
        let r1 = fundamental_domain_reduce(&Point::Exact(a.apply_exact(&tau).unwrap())).unwrap().point;
        prop_assert_eq!(r0, r1);
    }

    /// The recursion output solves `f‴ + 24 f f″ − 36 f′² = 0` as a truncated series.
    #[test]
    fn recursion_solves_the_ode(c0 in small_rational(), c1 in small_rational(), c2 in small_rational()) {
        let n = 10;
        let t = extend_coefficients(&c0, &c1, &c2, n).unwrap();
        let a: Vec<BigRational> = t.coeffs().iter().enumerate().map(|(k, c)| c / factorial(k)).collect();
        let d1 = series_deriv(&a);
        let d2 = series_deriv(&d1);
        let d3 = series_deriv(&d2);
        let len = n - 2;
        let ff2 = series_mul(&a, &d2, len);
        let f1f1 = series_mul(&d1, &d1, len);
        for k in 0..len {
            let r = &d3[k] + rat(24, 1) * &ff2[k] - rat(36, 1) * &f1f1[k];
            prop_assert!(r.is_zero(), "order {}: {}", k, r);
        }
    }

    #[test]
    fn recursion_prefixes_are_stable(c0 in small_rational(), c1 in small_rational(), c2 in small_rational()) {
        let short = extend_coefficients(&c0, &c1, &c2, 5).unwrap();
        let long = extend_coefficients(&c0, &c1, &c2, 9).unwrap();
        prop_assert_eq!(short.coeffs(), &long.coeffs()[..6]);
    }

    /// `α/(1+βt)² + β/(2(1+βt))` has `c_n = n! (α(n+1) + β/2) (−β)^n`.
    #[test]
    fn constant_solutions_match_their_expansion(alpha in small_rational(), beta in small_rational()) {
        let start = ConstantSolutionParams::taylor_start(&alpha, &beta);
        let t = extend_coefficients(&start[0], &start[1], &start[2], 9).unwrap();
        let mut pow = BigRational::one();
        for (k, c) in t.coeffs().iter().enumerate() {
            let want = factorial(k) * (&alpha * rat(k as i64 + 1, 1) + &beta / rat(2, 1)) * &pow;
            prop_assert_eq!(c, &want, "c{}", k);
            pow *= -beta.clone();
        }
    }

    #[test]
    fn small_rationals_are_recognized(n in -5000i64..5000, d in 1i64..2000) {
        let q = rat(n, d);
        let x = ApproxComplex::with_err(n as f64 / d as f64, 0.0, 1e-12);
        prop_assert_eq!(rational_recognize(&x, 2000), Some(q));
    }

    #[test]
    fn modulus_display_reparses(tau in quadratic_point()) {
        let m = ModulusExpr::parse(&tau.to_string()).unwrap();
        prop_assert_eq!(m.value, ModulusValue::Exact(tau));
    }

    #[test]
    fn points_on_one_orbit_are_isomorphic(re in -0.5f64..0.5, im in 0.9f64..1.8, a in sl2_word()) {
        let p = FrobeniusPoint::new(Point::approx(re, im), ApproxComplex::exact(0.9, 0.2)).unwrap();
        let q = sl2_act(&a, &p).unwrap();
        prop_assert!(are_isomorphic(&p, &q, 1e-8).unwrap().isomorphic);
    }

    #[test]
    fn divisor_sums_are_multiplicative(m in 1u64..300, n in 1u64..300, k in 1u32..6) {
        prop_assume!(m.gcd(&n) == 1);
        prop_assert_eq!(divisor_sum(k, m * n), divisor_sum(k, m) * divisor_sum(k, n));
        let naive: BigInt = (1..=m).filter(|d| m % d == 0).map(|d| BigInt::from(d).pow(k)).sum();
        prop_assert_eq!(divisor_sum(k, m), naive);
    }
}

#[test]
fn ramanujan_tau_hecke_relations() {
    let tau = |n| ramanujan_tau(n).unwrap();
    assert_eq!(tau(1), BigInt::one());
    for (n, v) in [(2, -24), (3, 252), (5, 4830), (7, -16744), (11, 534612)] {
        assert_eq!(tau(n), BigInt::from(v));
    }
    assert!(ramanujan_tau(0).is_none());
    for m in 1..20usize {
        for n in 1..20usize {
            if m.gcd(&n) == 1 && m * n <= 80 {
                assert_eq!(tau(m * n), tau(m) * tau(n), "tau({m}·{n})");
            }
        }
    }
    for p in [2usize, 3, 5, 7] {
        let pp = BigInt::from(p as u64).pow(11);
        assert_eq!(tau(p * p), tau(p) * tau(p) - pp, "tau({p}²)");
        assert!(tau(p).abs() <= BigInt::from(2) * BigInt::from(p as u64).pow(11).sqrt() + 1);
    }
}
