//! (s,t)-Fibonacci numbers, fibotorials and fibonomials.
//!
//! Sequences satisfy `{n+1} = s{n} + t{n-1}` with `{0} = 0`, `{1} = 1`. With
//! `phi = (s + sqrt(s^2 + 4t)) / 2`, `phi' = s - phi` and `q = phi'/phi`
//! every quantity becomes a q-object scaled by powers of `phi`:
//!
//! - `{n} = phi^(n-1) (1 - q^n) / (1 - q)`
//! - `{n k} = phi^(k(n-k)) [n k]_q`
//! - `{2n n} = phi^(n^2) (sqrt q, -sqrt q, -q; q)_n / (q; q)_n`
//!
//! Real-order indices use principal powers, so families with `q < 0` are
//! branch-sensitive for half-integer orders.

use crate::error::{Error, Result};
use crate::numerics::{binom2, Precision, Scalar};
use crate::qcalc::{qbinomial, qpochhammer};

/// Roots and derived constants of `x^2 = s x + t`.
#[derive(Clone, Debug, PartialEq)]
pub struct STParams {
    pub s: Scalar,
    pub t: Scalar,
    pub phi: Scalar,
    pub phi_prime: Scalar,
    /// `phi'/phi`; exactly 1 in the degenerate case.
    pub q: Scalar,
    /// `s^2 + 4t` vanishes (to working precision): a double root.
    pub degenerate: bool,
}

impl STParams {
    pub fn new(s: Scalar, t: Scalar) -> Result<Self> {
        let prec = s.precision().bits().max(t.precision().bits());
        let prec = Precision::new(prec)?;
        let s = s.with_precision(prec);
        let t = t.with_precision(prec);
        if s.is_zero() && t.is_zero() {
            return Err(Error::InvalidInput("s and t cannot both vanish".into()));
        }
        let disc = s.square() + t.mul_i64(4);
        let scale = s.square().abs().max(&rug::Float::with_val(prec.bits(), 1));
        let guard = prec.root_guard() * scale;
        if disc.abs() < guard {
            let half = s.div_i64(2);
            return Ok(STParams {
                phi: half.clone(),
                phi_prime: half,
                q: Scalar::one(prec),
                degenerate: true,
                s,
                t,
            });
        }
        let root = disc.sqrt();
        let phi = (&s + &root).div_i64(2);
        let phi_prime = &s - &phi;
        if phi.is_zero() {
            return Err(Error::InvalidInput("phi vanishes for these (s, t)".into()));
        }
        let q = &phi_prime / &phi;
        Ok(STParams { s, t, phi, phi_prime, q, degenerate: false })
    }

    pub fn precision(&self) -> Precision {
        self.s.precision()
    }

    pub fn minus_t(&self) -> Scalar {
        -&self.t
    }

    pub fn sqrt_q(&self) -> Scalar {
        self.q.sqrt()
    }

    pub fn sqrt_phi(&self) -> Scalar {
        self.phi.sqrt()
    }

    pub fn sqrt_minus_t(&self) -> Scalar {
        self.minus_t().sqrt()
    }

    /// `K = sqrt(-t phi)`, the scale of the Lehmer-type arguments.
    pub fn k_scale(&self) -> Scalar {
        (self.minus_t() * &self.phi).sqrt()
    }

    fn require_nondegenerate(&self, what: &str) -> Result<()> {
        if self.degenerate {
            return Err(Error::UnsupportedDomain(format!("{what} needs s^2 + 4t != 0")));
        }
        Ok(())
    }
}

/// Named parameter families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum STFamily {
    Fibonacci,
    Pell,
    Jacobsthal,
    Mersenne,
    /// Literals parsed at the working precision, e.g. `("1", "-1/5")`.
    Custom { s: String, t: String },
}

impl STFamily {
    pub const NAMED: [STFamily; 4] = [
        STFamily::Fibonacci,
        STFamily::Pell,
        STFamily::Jacobsthal,
        STFamily::Mersenne,
    ];

    pub fn custom(s: &str, t: &str) -> Self {
        STFamily::Custom { s: s.to_string(), t: t.to_string() }
    }

    pub fn st_literals(&self) -> (&str, &str) {
        match self {
            STFamily::Fibonacci => ("1", "1"),
            STFamily::Pell => ("2", "1"),
            STFamily::Jacobsthal => ("1", "2"),
            STFamily::Mersenne => ("3", "-2"),
            STFamily::Custom { s, t } => (s, t),
        }
    }

    pub fn name(&self) -> String {
        match self {
            STFamily::Fibonacci => "fibonacci".into(),
            STFamily::Pell => "pell".into(),
            STFamily::Jacobsthal => "jacobsthal".into(),
            STFamily::Mersenne => "mersenne".into(),
            STFamily::Custom { s, t } => format!("custom({s},{t})"),
        }
    }

    /// Accepts a family name, `custom(s,t)`, or a bare `s,t` pair.
    pub fn parse(src: &str) -> Result<Self> {
        let src = src.trim();
        match src.to_ascii_lowercase().as_str() {
            "fibonacci" => return Ok(STFamily::Fibonacci),
            "pell" => return Ok(STFamily::Pell),
            "jacobsthal" => return Ok(STFamily::Jacobsthal),
            "mersenne" => return Ok(STFamily::Mersenne),
            _ => {}
        }
        let inner = src
            .strip_prefix("custom(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(src);
        let Some((s, t)) = inner.split_once(',') else {
            return Err(Error::InvalidInput(format!("unknown family {src:?}")));
        };
        let fam = STFamily::custom(s.trim(), t.trim());
        fam.params(Precision::default())?;
        Ok(fam)
    }

    pub fn params(&self, prec: Precision) -> Result<STParams> {
        let (s, t) = self.st_literals();
        STParams::new(Scalar::parse(s, prec)?, Scalar::parse(t, prec)?)
    }
}

/// `{n}` from the recurrence, run backwards for negative `n`.
pub fn fib_recurrence(n: i64, p: &STParams) -> Result<Scalar> {
    let prec = p.precision();
    let (mut prev, mut cur) = (Scalar::zero(prec), Scalar::one(prec));
    if n >= 0 {
        if n == 0 {
            return Ok(prev);
        }
        for _ in 1..n {
            let next = &p.s * &cur + &p.t * &prev;
            prev = cur;
            cur = next;
        }
        return Ok(cur);
    }
    if p.t.is_zero() {
        return Err(Error::Domain("negative index with t = 0".into()));
    }
    // Walk down: {k-1} = ({k+1} - s{k}) / t, starting from {1}, {0}.
    let (mut hi, mut lo) = (cur, prev);
    for _ in 0..(-n) {
        let below = (&hi - &p.s * &lo) / &p.t;
        hi = lo;
        lo = below;
    }
    Ok(lo)
}

/// `{alpha} = (phi^alpha - phi'^alpha) / (phi - phi')`, principal powers.
///
/// In the degenerate case only integer `n` is defined: `{n} = n (s/2)^(n-1)`.
pub fn fib_binet(alpha: &Scalar, p: &STParams) -> Result<Scalar> {
    if p.degenerate {
        let Some(n) = alpha.as_integer() else {
            return Err(Error::UnsupportedDomain(
                "real-order index on a degenerate family".into(),
            ));
        };
        return Ok(p.phi.powi(n - 1)?.mul_i64(n));
    }
    let a = p.phi.pow(alpha)?;
    let b = if p.phi_prime.is_zero() {
        if alpha.re().is_sign_positive() && !alpha.re().is_zero() {
            Scalar::zero(p.precision())
        } else {
            return Err(Error::Domain("phi' = 0 raised to a non-positive order".into()));
        }
    } else {
        p.phi_prime.pow(alpha)?
    };
    Ok((a - b) / (&p.phi - &p.phi_prime))
}

pub fn fib_int(n: i64, p: &STParams) -> Result<Scalar> {
    fib_binet(&Scalar::from_i64(p.precision(), n), p)
}

/// `{n}! = {1}{2}...{n}`.
pub fn fibotorial(n: usize, p: &STParams) -> Result<Scalar> {
    let prec = p.precision();
    let mut acc = Scalar::one(prec);
    let (mut prev, mut cur) = (Scalar::zero(prec), Scalar::one(prec));
    for k in 1..=n {
        if k > 1 {
            let next = &p.s * &cur + &p.t * &prev;
            prev = cur;
            cur = next;
        }
        acc *= &cur;
    }
    Ok(acc)
}

/// `{n}! / ({k}! {n-k}!)`.
pub fn fibonomial_ratio(n: usize, k: usize, p: &STParams) -> Result<Scalar> {
    if k > n {
        return Ok(Scalar::zero(p.precision()));
    }
    let den = fibotorial(k, p)? * fibotorial(n - k, p)?;
    if den.is_zero() {
        return Err(Error::Domain("a factor {j} vanishes in the fibotorial".into()));
    }
    Ok(fibotorial(n, p)? / den)
}

/// `{n k} = phi^(k(n-k)) [n k]_q`. Degenerate families use the fibotorial ratio.
pub fn fibonomial(n: usize, k: usize, p: &STParams) -> Result<Scalar> {
    if k > n {
        return Ok(Scalar::zero(p.precision()));
    }
    if p.degenerate {
        return fibonomial_ratio(n, k, p);
    }
    let e = (k * (n - k)) as i64;
    Ok(p.phi.powi(e)? * qbinomial(n, k, &p.q)?)
}

/// Real-order fibonomial through its q-Pochhammer closed form:
/// `(q^-alpha; q)_k / (q; q)_k * (-phi^(alpha-1) q^alpha)^k * (phi^2 q)^(-C(k,2))`.
pub fn fibonomial_general(alpha: &Scalar, k: usize, p: &STParams) -> Result<Scalar> {
    p.require_nondegenerate("a real-order fibonomial")?;
    if let Some(n) = alpha.as_integer() {
        if n >= k as i64 {
            return fibonomial(n as usize, k, p);
        }
    }
    let q = &p.q;
    let q_neg = q.pow(&-alpha)?;
    let head = qpochhammer(&q_neg, q, k) / qpochhammer(q, q, k);
    let one = Scalar::one(p.precision());
    let lin = -(p.phi.pow(&(alpha - &one))? * q.pow(alpha)?);
    let quad = (p.phi.square() * q).powi(-binom2(k as i64))?;
    Ok(head * lin.powi(k as i64)? * quad)
}

/// Real-order fibonomial as a falling product `{alpha}{alpha-1}...{alpha-k+1} / {k}!`.
pub fn fibonomial_general_falling(alpha: &Scalar, k: usize, p: &STParams) -> Result<Scalar> {
    let mut num = Scalar::one(p.precision());
    for j in 0..k {
        num *= fib_binet(&(alpha - &Scalar::from_i64(p.precision(), j as i64)), p)?;
    }
    Ok(num / fibotorial(k, p)?)
}

/// `{2n n}` through `phi^(n^2) (sqrt q; q)_n (-sqrt q; q)_n (-q; q)_n / (q; q)_n`.
pub fn central_fibonomial(n: usize, p: &STParams) -> Result<Scalar> {
    p.require_nondegenerate("the Pochhammer form of the central fibonomial")?;
    let q = &p.q;
    let sq = p.sqrt_q();
    let num = qpochhammer(&sq, q, n) * qpochhammer(&-&sq, q, n) * qpochhammer(&-q, q, n);
    let n2 = (n * n) as i64;
    Ok(p.phi.powi(n2)? * num / qpochhammer(q, q, n))
}

/// (s,t)-Catalan number `{2n n} / {n+1}`.
pub fn catalan_st(n: usize, p: &STParams) -> Result<Scalar> {
    let den = fib_recurrence(n as i64 + 1, p)?;
    if den.is_zero() {
        return Err(Error::Domain(format!("{{{}}} vanishes", n + 1)));
    }
    Ok(fibonomial(2 * n, n, p)? / den)
}

/// The same Catalan number as `[2n n]_q phi^(2 C(n,2)) (1 - q) / (1 - q^(n+1))`.
pub fn catalan_st_q_form(n: usize, p: &STParams) -> Result<Scalar> {
    p.require_nondegenerate("the q-form of the Catalan number")?;
    let q = &p.q;
    let c = qbinomial(2 * n, n, q)? * p.phi.powi(2 * binom2(n as i64))?;
    Ok(c * q.one_minus() / q.powi(n as i64 + 1)?.one_minus())
}

fn half_order_common(k: usize, p: &STParams) -> Result<(Scalar, Scalar, Scalar)> {
    p.require_nondegenerate("half-order fibonomials")?;
    let q = &p.q;
    let sq = p.sqrt_q();
    let denom = qpochhammer(&-q, q, k) * qpochhammer(&-&sq, q, k);
    Ok((qbinomial(2 * k, k, q)?, sq, denom))
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `{1/2 k}` in central q-binomial form:
///
/// `[2k k]_q sqrt(phi)^(2-3k) (-1)^(k+1) (-t)^(-(k-1)^2/2) (1 - sqrt q)
///  / ((-q; q)_k (-sqrt q; q)_k (1 - sqrt(q)^(2k-1)))`.
pub fn fibonomial_half_central(k: usize, p: &STParams) -> Result<Scalar> {
    half_central_with(k, p, 2, -sign(k))
}

/// The variant with `sqrt(phi)^(1-3k)` and `(-1)^k`. It differs from
/// [`fibonomial_half_central`] by the constant factor `-phi^(-1/2)` and is kept
/// so that the discrepancy stays checkable.
pub fn fibonomial_half_central_literal(k: usize, p: &STParams) -> Result<Scalar> {
    half_central_with(k, p, 1, sign(k))
}

fn half_central_with(k: usize, p: &STParams, phi_offset: i64, sgn: i64) -> Result<Scalar> {
    let (b, sq, denom) = half_order_common(k, p)?;
    let kk = k as i64;
    let phi_pow = p.sqrt_phi().powi(phi_offset - 3 * kk)?;
    let e = Scalar::ratio(p.precision(), -(kk - 1) * (kk - 1), 2);
    let t_pow = p.minus_t().pow(&e)?;
    let tail = sq.powi(2 * kk - 1)?.one_minus();
    Ok((b * phi_pow * t_pow * sq.one_minus() / (denom * tail)).mul_i64(sgn))
}

/// `{1/2 k} = (q^(-1/2); q)_k / (q; q)_k (-phi^(-1/2) sqrt q)^k (-t)^(-C(k,2))`.
pub fn fibonomial_half_pochhammer(k: usize, p: &STParams) -> Result<Scalar> {
    p.require_nondegenerate("half-order fibonomials")?;
    let q = &p.q;
    let sq = p.sqrt_q();
    let head = qpochhammer(&sq.recip(), q, k) / qpochhammer(q, q, k);
    let lin = -(p.sqrt_phi().recip() * &sq);
    let t_pow = p.minus_t().powi(-binom2(k as i64))?;
    Ok(head * lin.powi(k as i64)? * t_pow)
}

/// `{-1/2 k} = (-1)^k [2k k]_q phi^(-k/2) (-t)^(-k^2/2) / ((-sqrt q; q)_k (-q; q)_k)`.
pub fn fibonomial_neg_half_central(k: usize, p: &STParams) -> Result<Scalar> {
    let (b, _, denom) = half_order_common(k, p)?;
    let kk = k as i64;
    let phi_pow = p.sqrt_phi().powi(-kk)?;
    let t_pow = p.minus_t().pow(&Scalar::ratio(p.precision(), -kk * kk, 2))?;
    Ok((b * phi_pow * t_pow / denom).mul_i64(sign(k)))
}

/// `{-1/2 k} = (-1)^k (-t)^(-k^2/2) (sqrt q; q)_k / (q; q)_k phi^(-k/2)`.
pub fn fibonomial_neg_half_pochhammer(k: usize, p: &STParams) -> Result<Scalar> {
    p.require_nondegenerate("half-order fibonomials")?;
    let q = &p.q;
    let kk = k as i64;
    let head = qpochhammer(&p.sqrt_q(), q, k) / qpochhammer(q, q, k);
    let phi_pow = p.sqrt_phi().powi(-kk)?;
    let t_pow = p.minus_t().pow(&Scalar::ratio(p.precision(), -kk * kk, 2))?;
    Ok((head * phi_pow * t_pow).mul_i64(sign(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rel_residual;
    use num_bigint::BigInt;

    fn p() -> Precision {
        Precision::default()
    }

    fn fam(f: &STFamily) -> STParams {
        f.params(p()).unwrap()
    }

    fn close(a: &Scalar, b: &Scalar, tol: f64) -> bool {
        rel_residual(a, b).to_f64() <= tol
    }

    fn big_seq(s: i64, t: i64, n: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(0), BigInt::from(1)];
        while v.len() <= n {
            let k = v.len();
            let next = BigInt::from(s) * &v[k - 1] + BigInt::from(t) * &v[k - 2];
            v.push(next);
        }
        v
    }

    fn big_to_scalar(b: &BigInt) -> Scalar {
        Scalar::parse(&b.to_string(), p()).unwrap()
    }

    #[test]
    fn mersenne_roots() {
        let m = fam(&STFamily::Mersenne);
        assert_eq!(m.phi, Scalar::from_i64(p(), 2));
        assert_eq!(m.phi_prime, Scalar::one(p()));
        assert_eq!(m.q, Scalar::ratio(p(), 1, 2));
        assert!(!m.degenerate);
        assert_eq!(m.k_scale(), Scalar::from_i64(p(), 2));
    }

    #[test]
    fn binet_matches_exact_sequences() {
        for (f, s, t) in [
            (STFamily::Fibonacci, 1, 1),
            (STFamily::Pell, 2, 1),
            (STFamily::Jacobsthal, 1, 2),
            (STFamily::Mersenne, 3, -2),
        ] {
            let params = fam(&f);
            let exact = big_seq(s, t, 60);
            for (n, e) in exact.iter().enumerate().take(61) {
                let want = big_to_scalar(e);
                let rec = fib_recurrence(n as i64, &params).unwrap();
                assert_eq!(rec, want, "{} recurrence at {n}", f.name());
                let binet = fib_int(n as i64, &params).unwrap();
                assert!(close(&binet, &want, 1e-70), "{} Binet at {n}", f.name());
            }
        }
    }

    #[test]
    fn spec_style_values() {
        let m = fam(&STFamily::Mersenne);
        assert_eq!(fib_recurrence(4, &m).unwrap(), Scalar::from_i64(p(), 15));
        let f = fam(&STFamily::Fibonacci);
        assert_eq!(fib_recurrence(10, &f).unwrap(), Scalar::from_i64(p(), 55));
        assert_eq!(fib_recurrence(-3, &f).unwrap(), Scalar::from_i64(p(), 2));
        assert!(close(&fibonomial(4, 2, &m).unwrap(), &Scalar::from_i64(p(), 35), 1e-70));
    }

    #[test]
    fn degenerate_family_uses_double_root() {
        // s = 2, t = -1: x^2 = 2x - 1 has the double root 1, so {n} = n.
        let d = STFamily::custom("2", "-1").params(p()).unwrap();
        assert!(d.degenerate);
        for n in 0..12 {
            assert_eq!(fib_int(n, &d).unwrap(), Scalar::from_i64(p(), n), "n = {n}");
            assert_eq!(fib_recurrence(n, &d).unwrap(), Scalar::from_i64(p(), n));
        }
        // s = 2i, t = 1: double root i, {n} = n i^(n-1).
        let d = STParams::new(Scalar::parse("2i", p()).unwrap(), Scalar::one(p())).unwrap();
        assert!(d.degenerate);
        for n in 0..10 {
            assert!(close(&fib_int(n, &d).unwrap(), &fib_recurrence(n, &d).unwrap(), 1e-70));
        }
        assert!(fib_binet(&Scalar::ratio(p(), 1, 2), &d).is_err());
        assert_eq!(fibonomial(5, 2, &d).unwrap().as_integer(), Some(-10));
    }

    #[test]
    fn fibonomials_are_exact_integers() {
        for (f, s, t) in [(STFamily::Fibonacci, 1, 1), (STFamily::Pell, 2, 1), (STFamily::Mersenne, 3, -2)] {
            let params = fam(&f);
            let seq = big_seq(s, t, 24);
            let fact = |n: usize| seq[1..=n].iter().fold(BigInt::from(1), |a, b| a * b);
            for n in 0..=16 {
                for k in 0..=n {
                    let exact = fact(n) / (fact(k) * fact(n - k));
                    let got = fibonomial(n, k, &params).unwrap();
                    assert!(close(&got, &big_to_scalar(&exact), 1e-60), "{} {{{n} {k}}}", f.name());
                }
            }
        }
    }

    #[test]
    fn central_and_catalan_forms_agree() {
        for f in STFamily::NAMED.iter().chain([STFamily::custom("1", "-1/5")].iter()) {
            let params = fam(f);
            for n in 0..12 {
                let direct = fibonomial(2 * n, n, &params).unwrap();
                let central = central_fibonomial(n, &params).unwrap();
                assert!(close(&direct, &central, 1e-60), "{} central {n}", f.name());
                let c1 = catalan_st(n, &params).unwrap();
                let c2 = catalan_st_q_form(n, &params).unwrap();
                assert!(close(&c1, &c2, 1e-60), "{} catalan {n}", f.name());
            }
        }
    }

    #[test]
    fn ordinary_catalan_numbers() {
        // For s = 2, t = -1 the sequence is {n} = n and the Catalan numbers are classical.
        let d = STFamily::custom("2", "-1").params(p()).unwrap();
        let want = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(catalan_st(n, &d).unwrap().as_integer(), Some(*w));
        }
    }

    #[test]
    fn general_order_closed_form_matches_falling_product() {
        let m = fam(&STFamily::Mersenne);
        for alpha in ["1/2", "-1/2", "5/2", "-7/3", "0.3+0.4i"] {
            let a = Scalar::parse(alpha, p()).unwrap();
            for k in 0..10 {
                let closed = fibonomial_general(&a, k, &m).unwrap();
                let fall = fibonomial_general_falling(&a, k, &m).unwrap();
                assert!(close(&closed, &fall, 1e-60), "alpha {alpha} k {k}");
            }
        }
        let four = Scalar::from_i64(p(), 4);
        assert_eq!(fibonomial_general(&four, 2, &m).unwrap(), fibonomial(4, 2, &m).unwrap());
        let two = Scalar::from_i64(p(), 2);
        assert!(fibonomial_general(&two, 3, &m).unwrap().is_zero());
    }

    #[test]
    fn half_order_forms() {
        for f in STFamily::NAMED.iter() {
            let params = fam(f);
            let half = Scalar::ratio(p(), 1, 2);
            let neg = Scalar::ratio(p(), -1, 2);
            for k in 0..=10 {
                let g = fibonomial_general_falling(&half, k, &params).unwrap();
                let h = fibonomial_general_falling(&neg, k, &params).unwrap();
                let name = f.name();
                assert!(close(&fibonomial_half_central(k, &params).unwrap(), &g, 1e-60), "{name} +1/2 central {k}");
                assert!(close(&fibonomial_half_pochhammer(k, &params).unwrap(), &g, 1e-60), "{name} +1/2 pochhammer {k}");
                assert!(close(&fibonomial_neg_half_central(k, &params).unwrap(), &h, 1e-60), "{name} -1/2 central {k}");
                assert!(close(&fibonomial_neg_half_pochhammer(k, &params).unwrap(), &h, 1e-60), "{name} -1/2 pochhammer {k}");
                let lit = fibonomial_half_central_literal(k, &params).unwrap();
                let factor = -params.sqrt_phi().recip();
                assert!(close(&lit, &(g * factor), 1e-60), "{name} literal form ratio {k}");
            }
        }
    }

    #[test]
    fn negative_index_law() {
        for f in STFamily::NAMED.iter() {
            let params = fam(f);
            for alpha in ["1/2", "-1/2", "5/2", "4", "-3"] {
                let a = Scalar::parse(alpha, p()).unwrap();
                let lhs = fib_binet(&-&a, &params).unwrap();
                let rhs = -(params.minus_t().pow(&-&a).unwrap() * fib_binet(&a, &params).unwrap());
                assert!(close(&lhs, &rhs, 1e-60), "{} alpha {alpha}", f.name());
            }
        }
    }

    #[test]
    fn family_parsing() {
        assert_eq!(STFamily::parse("Mersenne").unwrap(), STFamily::Mersenne);
        assert_eq!(STFamily::parse("1/2,1/3").unwrap(), STFamily::custom("1/2", "1/3"));
        assert_eq!(STFamily::parse("custom(1,-1/5)").unwrap(), STFamily::custom("1", "-1/5"));
        assert!(STFamily::parse("lucas").is_err());
        assert!(STFamily::parse("0,0").is_err());
    }
}
