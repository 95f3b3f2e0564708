//! q-Pochhammer symbols, Gaussian binomials and the Jackson calculus.
//!
//! Infinite products and q-integrals are truncated by [`TruncationPolicy`]:
//! a sum or product stops once `consecutive_small` successive terms fall
//! below `rel_eps` relative to the running value, but never before
//! `min_terms`. Reaching `max_terms` first is reported, not hidden.
//!
//! The derivative is the plain two-point quotient `(f(x) - f(qx)) / x`,
//! without the `1/(1-q)` normalisation; [`jackson_derivative`] is the
//! normalised one.

use rug::Float;

use crate::error::{Error, Result};
use crate::numerics::{Precision, Scalar};

/// Stopping rule for infinite sums and products.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncationPolicy {
    pub rel_eps: Float,
    pub consecutive_small: usize,
    pub max_terms: usize,
    pub min_terms: usize,
    /// Sum exactly this many terms and skip the convergence test. Used for
    /// identities that only hold as formal power series.
    pub fixed_terms: Option<usize>,
}

impl TruncationPolicy {
    pub fn for_precision(prec: Precision) -> Self {
        TruncationPolicy {
            rel_eps: prec.default_rel_eps(),
            consecutive_small: 3,
            max_terms: 10_000,
            min_terms: 8,
            fixed_terms: None,
        }
    }

    pub fn fixed(prec: Precision, terms: usize) -> Self {
        TruncationPolicy {
            fixed_terms: Some(terms),
            ..TruncationPolicy::for_precision(prec)
        }
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub(crate) fn stopper(&self) -> Stopper<'_> {
        Stopper { policy: self, run: 0 }
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy::for_precision(Precision::default())
    }
}

/// Tracks the run of small terms for one sum or product.
pub(crate) struct Stopper<'a> {
    policy: &'a TruncationPolicy,
    run: usize,
}

impl Stopper<'_> {
    /// Record the magnitude of term number `terms_seen` (1-based count) against
    /// the magnitude of the running value. Returns true when the loop may stop.
    pub(crate) fn observe(&mut self, terms_seen: usize, term: &Float, reference: &Float) -> bool {
        if let Some(n) = self.policy.fixed_terms {
            return terms_seen >= n;
        }
        let small = if term.is_zero() {
            true
        } else if reference.is_zero() {
            false
        } else {
            let r = Float::with_val(term.prec(), term / reference);
            r < self.policy.rel_eps
        };
        self.run = if small { self.run + 1 } else { 0 };
        terms_seen >= self.policy.min_terms && self.run >= self.policy.consecutive_small
    }

    /// Upper bound on the loop length.
    pub(crate) fn budget(&self) -> usize {
        self.policy.fixed_terms.unwrap_or(self.policy.max_terms)
    }

    pub(crate) fn is_fixed(&self) -> bool {
        self.policy.fixed_terms.is_some()
    }
}

fn require_unit_disk(q: &Scalar, what: &str) -> Result<()> {
    if q.abs() >= 1 {
        return Err(Error::Domain(format!("{what} needs |q| < 1")));
    }
    Ok(())
}

/// Fail if `|q^m - 1| < 2^(16-P)` for some `1 <= m <= order`.
pub fn root_of_unity_guard(q: &Scalar, order: u64) -> Result<()> {
    let guard = q.precision().root_guard();
    let mut qm = Scalar::one(q.precision());
    for m in 1..=order {
        qm *= q;
        if qm.one_minus().abs() < guard {
            return Err(Error::RootOfUnity { order: m });
        }
    }
    Ok(())
}

/// `(a; q)_n = prod_{k<n} (1 - a q^k)`.
pub fn qpochhammer(a: &Scalar, q: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::one(a.precision());
    let mut aqk = a.clone();
    for _ in 0..n {
        acc *= aqk.one_minus();
        aqk *= q;
    }
    acc
}

/// `(a_1, ..., a_r; q)_n`.
pub fn qpochhammer_multi(params: &[Scalar], q: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::one(q.precision());
    for a in params {
        acc *= qpochhammer(a, q, n);
    }
    acc
}

/// `(a; q)_inf` together with the number of factors used.
pub fn qpochhammer_inf_counted(a: &Scalar, q: &Scalar, policy: &TruncationPolicy) -> Result<(Scalar, usize)> {
    require_unit_disk(q, "an infinite q-Pochhammer symbol")?;
    let one = Float::with_val(a.prec_bits(), 1);
    let mut acc = Scalar::one(a.precision());
    let mut aqk = a.clone();
    let mut stop = policy.stopper();
    for k in 0..stop.budget() {
        acc *= aqk.one_minus();
        if acc.is_zero() {
            return Ok((acc, k + 1));
        }
        let mag = aqk.abs();
        if stop.observe(k + 1, &mag, &one) {
            return Ok((acc, k + 1));
        }
        aqk *= q;
    }
    if stop.is_fixed() {
        return Ok((acc, stop.budget()));
    }
    Err(Error::TruncationFailure {
        terms: policy.max_terms,
        partial: Box::new(acc),
    })
}

/// `(a; q)_inf`.
pub fn qpochhammer_inf(a: &Scalar, q: &Scalar, policy: &TruncationPolicy) -> Result<Scalar> {
    qpochhammer_inf_counted(a, q, policy).map(|(v, _)| v)
}

/// `(a_1, ..., a_r; q)_inf`.
pub fn qpochhammer_inf_multi(params: &[Scalar], q: &Scalar, policy: &TruncationPolicy) -> Result<Scalar> {
    let mut acc = Scalar::one(q.precision());
    for a in params {
        acc *= qpochhammer_inf(a, q, policy)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[n k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k})`; zero when `k > n`.
pub fn qbinomial(n: usize, k: usize, q: &Scalar) -> Result<Scalar> {
    if k > n {
        return Ok(Scalar::zero(q.precision()));
    }
    root_of_unity_guard(q, n as u64)?;
    let k = k.min(n - k);
    let mut num = Scalar::one(q.precision());
    let mut den = Scalar::one(q.precision());
    let mut qj = Scalar::one(q.precision());
    let top = q.powi((n - k) as i64)?;
    for _ in 0..k {
        qj *= q;
        num *= (&top * &qj).one_minus();
        den *= qj.one_minus();
    }
    Ok(num / den)
}

/// `(f(x) - f(qx)) / x`.
pub fn q_derivative<F>(f: F, x: &Scalar, q: &Scalar) -> Result<Scalar>
where
    F: Fn(&Scalar) -> Result<Scalar>,
{
    if x.is_zero() {
        return Err(Error::Domain("q-derivative at x = 0".into()));
    }
    if q.one_minus().abs() < q.precision().root_guard() {
        return Err(Error::Domain("q-derivative with q = 1".into()));
    }
    Ok((f(x)? - f(&(q * x))?) / x)
}

/// `(f(x) - f(qx)) / ((1 - q) x)`, which tends to `f'(x)` as `q -> 1`.
pub fn jackson_derivative<F>(f: F, x: &Scalar, q: &Scalar) -> Result<Scalar>
where
    F: Fn(&Scalar) -> Result<Scalar>,
{
    Ok(q_derivative(f, x, q)? / q.one_minus())
}

/// Jackson integral `int_0^a f d_q x = a (1 - q) sum_k f(a q^k) q^k`.
pub fn q_integral_0<F>(f: F, a: &Scalar, q: &Scalar, policy: &TruncationPolicy) -> Result<Scalar>
where
    F: Fn(&Scalar) -> Result<Scalar>,
{
    require_unit_disk(q, "the Jackson integral")?;
    if a.is_zero() {
        return Ok(Scalar::zero(q.precision()));
    }
    let mut sum = Scalar::zero(q.precision());
    let mut qk = Scalar::one(q.precision());
    let mut stop = policy.stopper();
    let mut done = false;
    for k in 0..stop.budget() {
        let term = f(&(a * &qk))? * &qk;
        sum += &term;
        if stop.observe(k + 1, &term.abs(), &sum.abs()) {
            done = true;
            break;
        }
        qk *= q;
    }
    if !done && !stop.is_fixed() {
        return Err(Error::TruncationFailure {
            terms: policy.max_terms,
            partial: Box::new(a * &q.one_minus() * &sum),
        });
    }
    Ok(a * &q.one_minus() * &sum)
}

/// `int_a^b f d_q x = int_0^b - int_0^a`.
pub fn q_integral<F>(f: F, a: &Scalar, b: &Scalar, q: &Scalar, policy: &TruncationPolicy) -> Result<Scalar>
where
    F: Fn(&Scalar) -> Result<Scalar>,
{
    Ok(q_integral_0(&f, b, q, policy)? - q_integral_0(&f, a, q, policy)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rel_residual;

    fn p() -> Precision {
        Precision::default()
    }

    fn s(v: &str) -> Scalar {
        Scalar::parse(v, p()).unwrap()
    }

    fn pol() -> TruncationPolicy {
        TruncationPolicy::for_precision(p())
    }

    fn close(a: &Scalar, b: &Scalar, tol: f64) -> bool {
        rel_residual(a, b).to_f64() <= tol
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(qpochhammer(&s("0.7"), &s("0.3"), 0), Scalar::one(p()));
    }

    #[test]
    fn finite_product_exact_value() {
        // 1/2 * 3/4 * 7/8 is exact in binary.
        assert_eq!(qpochhammer(&s("0.5"), &s("0.5"), 3), s("0.328125"));
    }

    #[test]
    fn euler_function_matches_pentagonal_series() {
        let q = s("0.5");
        let prod = qpochhammer_inf(&q, &q, &pol()).unwrap();
        // sum over k in Z of (-1)^k q^{k(3k-1)/2}
        let mut series = Scalar::zero(p());
        for k in -40i64..=40 {
            let term = q.powi(k * (3 * k - 1) / 2).unwrap();
            if k % 2 == 0 {
                series += term;
            } else {
                series -= term;
            }
        }
        assert!(close(&prod, &series, 1e-60));
        assert!(close(&prod, &s("0.288788095086602421278899721929230780088911904840685784"), 1e-53));
    }

    #[test]
    fn infinite_product_is_zero_at_negative_powers() {
        let q = s("0.5");
        let a = s("8"); // q^{-3}
        assert!(qpochhammer_inf(&a, &q, &pol()).unwrap().is_zero());
    }

    #[test]
    fn infinite_product_needs_unit_disk() {
        assert!(matches!(qpochhammer_inf(&s("0.1"), &s("1.2"), &pol()), Err(Error::Domain(_))));
    }

    #[test]
    fn truncation_failure_is_reported() {
        let tight = pol().with_max_terms(5);
        let err = qpochhammer_inf(&s("0.5"), &s("0.9"), &tight).unwrap_err();
        assert!(matches!(err, Error::TruncationFailure { terms: 5, .. }));
    }

    #[test]
    fn gaussian_binomial_polynomial() {
        let q = s("0.3+0.2i");
        let expect = Scalar::one(p()) + &q + q.powi(2).unwrap().mul_i64(2) + q.powi(3).unwrap() + q.powi(4).unwrap();
        assert!(close(&qbinomial(4, 2, &q).unwrap(), &expect, 1e-74));
        assert!(qbinomial(3, 5, &q).unwrap().is_zero());
        assert_eq!(qbinomial(6, 0, &q).unwrap(), Scalar::one(p()));
    }

    #[test]
    fn root_of_unity_is_rejected() {
        let minus_one = s("-1");
        assert!(matches!(qbinomial(4, 2, &minus_one), Err(Error::RootOfUnity { order: 2 })));
        let w3 = Scalar::new(Float::with_val(256, -0.5), Float::with_val(256, 3).sqrt() / 2u32);
        assert!(qbinomial(2, 1, &w3).is_ok(), "order larger than n is allowed");
        assert!(matches!(qbinomial(3, 1, &w3), Err(Error::RootOfUnity { order: 3 })));
    }

    #[test]
    fn q_derivative_two_point_quotient() {
        let q = s("0.5");
        let x = s("0.8");
        let d = q_derivative(|z| Ok(z.square()), &x, &q).unwrap();
        assert!(close(&d, &(x.mul_real(&Float::with_val(256, 0.75))), 1e-75), "(1 - q^2) x");
        let d1 = q_derivative(|z| Ok(z.clone()), &x, &q).unwrap();
        assert!(close(&d1, &s("0.5"), 1e-75), "1 - q");
        let j = jackson_derivative(|z| Ok(z.square()), &x, &q).unwrap();
        assert!(close(&j, &x.mul_real(&Float::with_val(256, 1.5)), 1e-75), "(1 + q) x");
        assert!(q_derivative(|z| Ok(z.clone()), &Scalar::zero(p()), &q).is_err());
    }

    #[test]
    fn q_integral_monomials() {
        let q = s("0.5");
        let one = q_integral_0(|_| Ok(Scalar::one(p())), &s("1.7"), &q, &pol()).unwrap();
        assert!(close(&one, &s("1.7"), 1e-60));
        let lin = q_integral_0(|z| Ok(z.clone()), &Scalar::one(p()), &q, &pol()).unwrap();
        assert!(close(&lin, &s("2/3"), 1e-60));
        let ab = q_integral(|z| Ok(z.clone()), &s("0.5"), &Scalar::one(p()), &q, &pol()).unwrap();
        assert!(close(&ab, &(s("2/3").mul_real(&Float::with_val(256, 0.75))), 1e-60));
    }

    #[test]
    fn fundamental_theorem_up_to_normalisation() {
        let q = s("0.3");
        let x = s("0.6-0.2i");
        let f = |z: &Scalar| -> Result<Scalar> { Ok((z.mul_i64(2)).exp()) };
        let big_f = |z: &Scalar| q_integral_0(f, z, &q, &pol());
        let back = jackson_derivative(big_f, &x, &q).unwrap();
        assert!(close(&back, &f(&x).unwrap(), 1e-60));
        let raw = q_derivative(big_f, &x, &q).unwrap();
        assert!(close(&raw, &(f(&x).unwrap() * q.one_minus()), 1e-60));
    }

    #[test]
    fn fixed_policy_sums_exact_count() {
        let q = s("0.5");
        let fixed = TruncationPolicy::fixed(p(), 3);
        let (v, used) = qpochhammer_inf_counted(&q, &q, &fixed).unwrap();
        assert_eq!(used, 3);
        assert_eq!(v, qpochhammer(&q, &q, 3));
    }
}
