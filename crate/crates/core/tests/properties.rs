use proptest::prelude::*;

use qlehmer::catalog::{lookup, sample_domain, verify_at, VerifyOptions};
use qlehmer::dbhs::deformed_qexp;
use qlehmer::numerics::{rel_residual, Precision, Scalar};
use qlehmer::qcalc::{q_derivative, qbinomial, qpochhammer, qpochhammer_inf, TruncationPolicy};
use qlehmer::stfib::{fib_binet, fib_recurrence, STFamily};

fn prec() -> Precision {
    Precision::default()
}

fn c(re: f64, im: f64) -> Scalar {
    Scalar::from_f64_parts(prec(), re, im)
}

fn close(l: &Scalar, r: &Scalar, tol: f64) -> bool {
    rel_residual(l, r).to_f64() <= tol
}

fn unit() -> impl Strategy<Value = (f64, f64)> {
    (0.05f64..0.85, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| (r * t.cos(), r * t.sin()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pochhammer_split(a in unit(), q in unit(), n in 0usize..15, k in 0usize..15) {
        let (a, q) = (c(a.0, a.1), c(q.0, q.1));
        let rhs = qpochhammer(&a, &q, n) * qpochhammer(&(&a * &q.powi(n as i64).unwrap()), &q, k);
        prop_assert!(close(&qpochhammer(&a, &q, n + k), &rhs, 1e-60));
    }

    #[test]
    fn qbinomial_pascal(q in unit(), n in 1usize..20, k in 1usize..20) {
        prop_assume!(k < n);
        let q = c(q.0, q.1);
        let lhs = qbinomial(n, k, &q).unwrap();
        let rhs = qbinomial(n - 1, k - 1, &q).unwrap() + q.powi(k as i64).unwrap() * qbinomial(n - 1, k, &q).unwrap();
        prop_assert!(close(&lhs, &rhs, 1e-60));
        prop_assert!(close(&lhs, &qbinomial(n, n - k, &q).unwrap(), 1e-60));
    }

    #[test]
    fn euler_exponential_is_a_product(z in unit(), q in unit()) {
        let (z, q) = (c(z.0, z.1), c(q.0, q.1));
        let policy = TruncationPolicy::for_precision(prec());
        let series = deformed_qexp(&z, &q, &q, &policy).unwrap().checked().unwrap();
        prop_assert!(close(&series, &qpochhammer_inf(&-&z, &q, &policy).unwrap(), 1e-60));
    }

    #[test]
    fn q_derivative_of_monomial(x in unit(), q in unit(), n in 1i64..12) {
        let (x, q) = (c(x.0, x.1), c(q.0, q.1));
        let d = q_derivative(|t: &Scalar| t.powi(n), &x, &q).unwrap();
        let want = q.powi(n).unwrap().one_minus() * x.powi(n - 1).unwrap();
        prop_assert!(close(&d, &want, 1e-60));
    }

    #[test]
    fn binet_matches_recurrence(s in -3i64..=3, t in 1i64..=4, n in -20i64..=30) {
        // t > 0 keeps the roots real and distinct.
        let fam = STFamily::custom(&s.to_string(), &t.to_string());
        let p = fam.params(prec()).unwrap();
        let b = fib_binet(&Scalar::from_i64(prec(), n), &p).unwrap();
        prop_assert!(close(&b, &fib_recurrence(n, &p).unwrap(), 1e-50));
    }

    #[test]
    fn decimal_round_trip(re in -1e6f64..1e6, im in -1e6f64..1e6) {
        let v = c(re, im);
        let back = Scalar::parse(&v.to_decimal(prec().decimal_digits()), prec()).unwrap();
        prop_assert!(close(&v, &back, 1e-70));
    }

    #[test]
    fn sampling_is_seeded(seed in any::<u64>()) {
        let rec = lookup("thm5.8").unwrap();
        let a = sample_domain(rec, &STFamily::Pell, 3, seed, prec()).unwrap();
        let b = sample_domain(rec, &STFamily::Pell, 3, seed, prec()).unwrap();
        prop_assert_eq!(a, b);
    }
}

/// The two sides run on separate policies, so starving one leaves the other untouched.
#[test]
fn sides_are_evaluated_independently() {
    let rec = lookup("thm5.6").unwrap();
    let fam = STFamily::Mersenne;
    let full = verify_at(rec, &fam, &VerifyOptions::default()).unwrap();
    let mut opts = VerifyOptions::default();
    opts.lhs_policy = opts.lhs_policy.clone().with_max_terms(4);
    let starved = verify_at(rec, &fam, &opts).unwrap();
    assert!(!starved.pass);
    for (a, b) in full.points.iter().zip(&starved.points) {
        assert_eq!(a.rhs, b.rhs);
        assert_eq!(a.rhs_terms, b.rhs_terms);
        assert!(b.lhs_terms <= 4 && a.lhs_terms > 4);
    }
}
