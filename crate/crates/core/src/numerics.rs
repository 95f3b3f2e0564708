//! Complex arbitrary-precision scalars.
//!
//! `Scalar` is a pair of MPFR floats carrying the working precision of
//! whichever operand had more bits. Every transcendental uses the principal
//! branch: `ln` has imaginary part in (-pi, pi], `sqrt` has argument in
//! (-pi/2, pi/2], and `pow` is `exp(alpha * ln z)` except for integer
//! exponents, which go through repeated squaring.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 256;
pub const MIN_PRECISION: u32 = 64;
pub const MAX_PRECISION: u32 = 1 << 16;

/// Working precision in bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Precision(u32);

impl Precision {
    pub fn new(bits: u32) -> Result<Self> {
        if bits < MIN_PRECISION {
            return Err(Error::InvalidInput(format!(
                "precision {bits} is below the minimum of {MIN_PRECISION} bits"
            )));
        }
        if bits > MAX_PRECISION {
            return Err(Error::InvalidInput(format!(
                "precision {bits} exceeds the maximum of {MAX_PRECISION} bits"
            )));
        }
        Ok(Precision(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Decimal digits carried by `bits` binary digits, rounded up.
    pub fn decimal_digits(self) -> usize {
        (self.0 as f64 * std::f64::consts::LOG10_2).ceil() as usize
    }

    /// `2^(16 - P)`: the distance below which `|q^m - 1|` counts as zero.
    pub fn root_guard(self) -> Float {
        Float::with_val(self.0, 1) >> (self.0 - 16)
    }

    /// `2^(32 - P)`: default relative cutoff for truncating series and products.
    pub fn default_rel_eps(self) -> Float {
        Float::with_val(self.0, 1) >> (self.0 - 32)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(DEFAULT_PRECISION)
    }
}

impl TryFrom<u32> for Precision {
    type Error = Error;
    fn try_from(bits: u32) -> Result<Self> {
        Precision::new(bits)
    }
}

impl From<Precision> for u32 {
    fn from(p: Precision) -> u32 {
        p.0
    }
}

/// `n(n-1)/2`, exact. Defined for negative `n` as well.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Complex number over MPFR floats.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar {
    re: Float,
    im: Float,
}

impl Scalar {
    pub fn new(re: Float, im: Float) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: Float) -> Self {
        let p = re.prec();
        Scalar { re, im: Float::new(p) }
    }

    pub fn zero(prec: Precision) -> Self {
        Scalar::real(Float::new(prec.bits()))
    }

    pub fn one(prec: Precision) -> Self {
        Scalar::from_i64(prec, 1)
    }

    pub fn i(prec: Precision) -> Self {
        Scalar::new(Float::new(prec.bits()), Float::with_val(prec.bits(), 1))
    }

    pub fn from_i64(prec: Precision, v: i64) -> Self {
        Scalar::real(Float::with_val(prec.bits(), v))
    }

    pub fn from_f64(prec: Precision, v: f64) -> Self {
        Scalar::real(Float::with_val(prec.bits(), v))
    }

    pub fn from_f64_parts(prec: Precision, re: f64, im: f64) -> Self {
        Scalar::new(
            Float::with_val(prec.bits(), re),
            Float::with_val(prec.bits(), im),
        )
    }

    /// Exact rational `num / den` rounded once to the working precision.
    pub fn ratio(prec: Precision, num: i64, den: i64) -> Self {
        let n = Float::with_val(prec.bits(), num);
        Scalar::real(Float::with_val(prec.bits(), n / den))
    }

    pub fn pi(prec: Precision) -> Self {
        Scalar::real(Float::with_val(prec.bits(), Constant::Pi))
    }

    /// Parse a literal: `0.25`, `-3`, `1/3`, `2.5e-3`, `0.3+0.2i`, `-i`, `1/2-1/3i`.
    pub fn parse(src: &str, prec: Precision) -> Result<Self> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::InvalidInput("empty numeric literal".into()));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar::real(parse_real(&s, prec)?));
        };
        // Split at the last sign that is neither leading nor part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                split = Some(k);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => Float::with_val(prec.bits(), 1),
            "-" => Float::with_val(prec.bits(), -1),
            other => parse_real(other, prec)?,
        };
        let re = if re_part.is_empty() {
            Float::new(prec.bits())
        } else {
            parse_real(re_part, prec)?
        };
        Ok(Scalar::new(re, im))
    }

    pub fn re(&self) -> &Float {
        &self.re
    }

    pub fn im(&self) -> &Float {
        &self.im
    }

    pub fn prec_bits(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn precision(&self) -> Precision {
        Precision(self.prec_bits().max(MIN_PRECISION))
    }

    /// Same value rounded to `prec`.
    pub fn with_precision(&self, prec: Precision) -> Self {
        Scalar::new(
            Float::with_val(prec.bits(), &self.re),
            Float::with_val(prec.bits(), &self.im),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Real with an integral value.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.is_real() || !self.re.is_integer() {
            return None;
        }
        let v = self.re.to_f64();
        if v.abs() >= 9_007_199_254_740_992.0 {
            return None;
        }
        Some(v as i64)
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec_bits();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        let p = self.prec_bits();
        if self.im.is_zero() {
            return Float::with_val(p, self.re.abs_ref());
        }
        Float::with_val(p, self.re.hypot_ref(&self.im))
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Float {
        let p = self.prec_bits();
        if self.im.is_zero() {
            // Treat -0 as +0 so negative reals land on +pi.
            return if self.re.is_sign_negative() && !self.re.is_zero() {
                Float::with_val(p, Constant::Pi)
            } else {
                Float::new(p)
            };
        }
        Float::with_val(p, self.im.atan2_ref(&self.re))
    }

    pub fn mul_real(&self, k: &Float) -> Self {
        let p = self.prec_bits().max(k.prec());
        Scalar::new(
            Float::with_val(p, &self.re * k),
            Float::with_val(p, &self.im * k),
        )
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        let p = self.prec_bits();
        Scalar::new(
            Float::with_val(p, &self.re * k),
            Float::with_val(p, &self.im * k),
        )
    }

    pub fn div_i64(&self, k: i64) -> Self {
        let p = self.prec_bits();
        Scalar::new(
            Float::with_val(p, &self.re / k),
            Float::with_val(p, &self.im / k),
        )
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// `1 / self`; infinite components when `self` is zero.
    pub fn recip(&self) -> Self {
        Scalar::one(self.precision()) / self
    }

    /// `1 - self`, the building block of every Pochhammer factor.
    pub fn one_minus(&self) -> Self {
        let p = self.prec_bits();
        Scalar::new(Float::with_val(p, 1 - &self.re), -self.im.clone())
    }

    /// Integer power by repeated squaring. `0^0 = 1`; `0^n` for `n < 0` is a domain error.
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n < 0 {
            if self.is_zero() {
                return Err(Error::Domain("zero raised to a negative power".into()));
            }
            return Ok(self.powi_unchecked(n.unsigned_abs()).recip());
        }
        Ok(self.powi_unchecked(n as u64))
    }

    fn powi_unchecked(&self, mut e: u64) -> Self {
        let mut acc = Scalar::one(self.precision());
        if self.is_real() {
            let p = self.prec_bits();
            let mut r = Float::with_val(p, 1);
            let mut b = self.re.clone();
            while e > 0 {
                if e & 1 == 1 {
                    r *= &b;
                }
                e >>= 1;
                if e > 0 {
                    b.square_mut();
                }
            }
            return Scalar::real(r);
        }
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn exp(&self) -> Self {
        let p = self.prec_bits();
        let m = Float::with_val(p, self.re.exp_ref());
        if self.im.is_zero() {
            return Scalar::real(m);
        }
        let c = Float::with_val(p, self.im.cos_ref());
        let s = Float::with_val(p, self.im.sin_ref());
        Scalar::new(m.clone() * c, m * s)
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("logarithm of zero".into()));
        }
        let p = self.prec_bits();
        let m = Float::with_val(p, self.abs().ln_ref());
        Ok(Scalar::new(m, self.arg()))
    }

    /// Principal square root, argument in (-pi/2, pi/2].
    pub fn sqrt(&self) -> Self {
        let p = self.prec_bits();
        if self.is_zero() {
            return Scalar::zero(self.precision());
        }
        if self.im.is_zero() {
            return if self.re.is_sign_negative() {
                Scalar::new(Float::new(p), Float::with_val(p, (-self.re.clone()).sqrt_ref()))
            } else {
                Scalar::real(Float::with_val(p, self.re.sqrt_ref()))
            };
        }
        let r = self.abs();
        if !self.re.is_sign_negative() {
            let a = Float::with_val(p, (r + &self.re) / 2u32).sqrt();
            let b = Float::with_val(p, &self.im / &a) / 2u32;
            Scalar::new(a, b)
        } else {
            let mut b = Float::with_val(p, (r - &self.re) / 2u32).sqrt();
            if self.im.is_sign_negative() {
                b = -b;
            }
            let a = Float::with_val(p, &self.im / &b) / 2u32;
            Scalar::new(a, b)
        }
    }

    /// Principal power `z^alpha`. Integer exponents bypass the logarithm.
    pub fn pow(&self, alpha: &Scalar) -> Result<Self> {
        if let Some(n) = alpha.as_integer() {
            return self.powi(n);
        }
        if self.is_zero() {
            return if alpha.re.is_sign_positive() && !alpha.re.is_zero() {
                Ok(Scalar::zero(self.precision()))
            } else {
                Err(Error::Domain("zero raised to a power with non-positive real part".into()))
            };
        }
        self.pow_via_log(alpha)
    }

    /// `exp(alpha * Log z)` with no integer shortcut.
    pub fn pow_via_log(&self, alpha: &Scalar) -> Result<Self> {
        Ok((alpha * &self.ln()?).exp())
    }

    /// Real-valued power of a real base where both sides are real.
    pub fn pow_f64(&self, alpha: f64) -> Result<Self> {
        self.pow(&Scalar::from_f64(self.precision(), alpha))
    }

    /// Decimal rendering with `digits` significant digits per component.
    pub fn to_decimal(&self, digits: usize) -> String {
        let re = self.re.to_string_radix(10, Some(digits));
        if self.im.is_zero() {
            return re;
        }
        let im_abs = Float::with_val(self.im.prec(), self.im.abs_ref());
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        format!("{re}{sign}{}i", im_abs.to_string_radix(10, Some(digits)))
    }

    /// Compact rendering: trailing zeros dropped, integers printed bare.
    pub fn to_display(&self, digits: usize) -> String {
        let re = trim_decimal(&self.re.to_string_radix(10, Some(digits)));
        if self.im.is_zero() {
            return re;
        }
        let im_abs = Float::with_val(self.im.prec(), self.im.abs_ref());
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        format!("{re}{sign}{}i", trim_decimal(&im_abs.to_string_radix(10, Some(digits))))
    }

    /// Lossy `f64` projection for diagnostics and sampling radii.
    pub fn to_f64_parts(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }
}

fn parse_real(s: &str, prec: Precision) -> Result<Float> {
    let bad = || Error::InvalidInput(format!("cannot parse numeric literal {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_real(n, prec)?;
        let d = parse_real(d, prec)?;
        if d.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        return Ok(Float::with_val(prec.bits(), n / d));
    }
    let lit = if let Some(rest) = s.strip_prefix('+') { rest } else { s };
    if lit.is_empty() || !lit.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '.') {
        return Err(bad());
    }
    let parsed = Float::parse(lit).map_err(|_| bad())?;
    let v = Float::with_val(prec.bits(), parsed);
    if !v.is_finite() {
        return Err(bad());
    }
    Ok(v)
}

fn trim_decimal(s: &str) -> String {
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(k) => (&s[..k], s[k + 1..].parse::<i64>().unwrap_or(0)),
        None => (s, 0),
    };
    let (sign, mant) = match mant.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mant),
    };
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    let digits = format!("{int_part}{frac_part}");
    let point = int_part.len() as i64 + exp;
    if !(-6..=24).contains(&point) {
        let frac = frac_part.trim_end_matches('0');
        let m = if frac.is_empty() { int_part.to_string() } else { format!("{int_part}.{frac}") };
        return format!("{sign}{m}e{exp}");
    }
    let (int_s, frac_s) = if point <= 0 {
        ("0".to_string(), format!("{}{}", "0".repeat((-point) as usize), digits))
    } else if point as usize >= digits.len() {
        (format!("{digits}{}", "0".repeat(point as usize - digits.len())), String::new())
    } else {
        (digits[..point as usize].to_string(), digits[point as usize..].to_string())
    };
    let int_s = match int_s.trim_start_matches('0') {
        "" => "0",
        t => t,
    };
    let frac_s = frac_s.trim_end_matches('0');
    if frac_s.is_empty() {
        format!("{sign}{int_s}")
    } else {
        format!("{sign}{int_s}.{frac_s}")
    }
}

/// `|l - r| / max(1, |l|, |r|)`: relative away from zero, absolute near it.
pub fn rel_residual(l: &Scalar, r: &Scalar) -> Float {
    let p = l.prec_bits().max(r.prec_bits());
    let diff = (l - r).abs();
    let mut scale = Float::with_val(p, 1);
    for m in [l.abs(), r.abs()] {
        if m > scale {
            scale = m;
        }
    }
    Float::with_val(p, diff / scale)
}

/// Order two floats, NaN last.
pub fn cmp_float(a: &Float, b: &Float) -> Ordering {
    a.partial_cmp(b).unwrap_or_else(|| {
        if a.is_nan() && b.is_nan() {
            Ordering::Equal
        } else if a.is_nan() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    })
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(self.precision().decimal_digits());
        f.write_str(&self.to_display(digits))
    }
}

fn add_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let p = a.prec_bits().max(b.prec_bits());
    Scalar::new(
        Float::with_val(p, &a.re + &b.re),
        Float::with_val(p, &a.im + &b.im),
    )
}

fn sub_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let p = a.prec_bits().max(b.prec_bits());
    Scalar::new(
        Float::with_val(p, &a.re - &b.re),
        Float::with_val(p, &a.im - &b.im),
    )
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let p = a.prec_bits().max(b.prec_bits());
    if a.im.is_zero() && b.im.is_zero() {
        return Scalar::real(Float::with_val(p, &a.re * &b.re));
    }
    let re = Float::with_val(p, &a.re * &b.re) - Float::with_val(p, &a.im * &b.im);
    let im = Float::with_val(p, &a.re * &b.im) + Float::with_val(p, &a.im * &b.re);
    Scalar::new(re, im)
}

fn div_impl(a: &Scalar, b: &Scalar) -> Scalar {
    let p = a.prec_bits().max(b.prec_bits());
    if b.im.is_zero() {
        return Scalar::new(
            Float::with_val(p, &a.re / &b.re),
            Float::with_val(p, &a.im / &b.re),
        );
    }
    let den = b.norm_sqr();
    let re = Float::with_val(p, &a.re * &b.re) + Float::with_val(p, &a.im * &b.im);
    let im = Float::with_val(p, &a.im * &b.re) - Float::with_val(p, &a.re * &b.im);
    Scalar::new(re / &den, im / &den)
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident, $atr:ident, $am:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $imp(self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $imp(self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $imp(&self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $imp(&self, &rhs)
            }
        }
        impl $atr<&Scalar> for Scalar {
            fn $am(&mut self, rhs: &Scalar) {
                *self = $imp(self, rhs);
            }
        }
        impl $atr<Scalar> for Scalar {
            fn $am(&mut self, rhs: Scalar) {
                *self = $imp(self, &rhs);
            }
        }
    };
}

binop!(Add, add, add_impl, AddAssign, add_assign);
binop!(Sub, sub, sub_impl, SubAssign, sub_assign);
binop!(Mul, mul, mul_impl, MulAssign, mul_assign);
binop!(Div, div, div_impl, DivAssign, div_assign);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    fn close(a: &Scalar, b: &Scalar, tol: f64) -> bool {
        rel_residual(a, b).to_f64() <= tol
    }

    #[test]
    fn precision_floor_and_digits() {
        assert!(Precision::new(63).is_err());
        assert_eq!(Precision::new(256).unwrap().decimal_digits(), 78);
        assert_eq!(Precision::new(64).unwrap().decimal_digits(), 20);
    }

    #[test]
    fn sqrt_of_minus_one_is_plus_i() {
        let r = Scalar::from_i64(p(), -1).sqrt();
        assert_eq!(r, Scalar::i(p()));
    }

    #[test]
    fn sqrt_branch_cut_sides() {
        let above = Scalar::parse("-4+0i", p()).unwrap().sqrt();
        assert_eq!(above, Scalar::parse("2i", p()).unwrap());
        let below = Scalar::new(Float::with_val(256, -4), -Float::with_val(256, 1e-30)).sqrt();
        assert!(below.im().is_sign_negative(), "just below the cut the root flips to the lower half plane");
    }

    #[test]
    fn sqrt_squares_back() {
        for lit in ["0.3+0.7i", "-2.5-0.1i", "-0.001+3i", "7", "1e-40-1e-40i"] {
            let z = Scalar::parse(lit, p()).unwrap();
            let r = z.sqrt();
            assert!(close(&r.square(), &z, 1e-70), "sqrt({lit})^2");
            assert!(!r.re().is_sign_negative(), "principal root of {lit} has Re >= 0");
        }
    }

    #[test]
    fn log_of_negative_real_is_i_pi() {
        let l = Scalar::from_i64(p(), -1).ln().unwrap();
        assert!(l.re().is_zero());
        assert!(close(&Scalar::real(l.im().clone()), &Scalar::pi(p()), 1e-75));
    }

    #[test]
    fn pow_integer_matches_log_route() {
        let z = Scalar::parse("0.7-0.4i", p()).unwrap();
        for n in [-7i64, -1, 0, 1, 2, 5, 13] {
            let direct = z.powi(n).unwrap();
            let via = z.pow_via_log(&Scalar::from_i64(p(), n)).unwrap();
            assert!(close(&direct, &via, 1e-72), "n = {n}");
        }
    }

    #[test]
    fn half_power_is_principal_sqrt() {
        let z = Scalar::parse("-3+0.5i", p()).unwrap();
        let h = z.pow(&Scalar::ratio(p(), 1, 2)).unwrap();
        assert!(close(&h, &z.sqrt(), 1e-72));
    }

    #[test]
    fn zero_power_rules() {
        let z = Scalar::zero(p());
        assert_eq!(z.powi(0).unwrap(), Scalar::one(p()));
        assert!(z.powi(-1).is_err());
        assert!(z.pow(&Scalar::ratio(p(), 1, 2)).unwrap().is_zero());
        assert!(z.pow(&Scalar::ratio(p(), -1, 2)).is_err());
    }

    #[test]
    fn binom2_values() {
        assert_eq!(binom2(0), 0);
        assert_eq!(binom2(1), 0);
        assert_eq!(binom2(5), 10);
        assert_eq!(binom2(-2), 3);
        assert_eq!(binom2(100_000), 4_999_950_000);
    }

    #[test]
    fn parse_forms() {
        let third = Scalar::parse("1/3", p()).unwrap();
        assert!(close(&(third.mul_i64(3)), &Scalar::one(p()), 1e-76));
        let z = Scalar::parse("1.5e-1-2i", p()).unwrap();
        assert_eq!(z.to_f64_parts(), (0.15, -2.0));
        assert_eq!(Scalar::parse("-i", p()).unwrap().to_f64_parts(), (0.0, -1.0));
        assert_eq!(Scalar::parse("2e+1", p()).unwrap().to_f64_parts(), (20.0, 0.0));
        assert!(Scalar::parse("abc", p()).is_err());
        assert!(Scalar::parse("1/0", p()).is_err());
    }

    #[test]
    fn decimal_round_trip() {
        let z = Scalar::parse("1/7-2/3i", p()).unwrap();
        let s = z.to_decimal(p().decimal_digits());
        let back = Scalar::parse(&s, p()).unwrap();
        assert!(close(&back, &z, 1e-76), "{s}");
    }

    #[test]
    fn display_trims() {
        assert_eq!(Scalar::from_i64(p(), 15).to_display(20), "15");
        assert_eq!(Scalar::ratio(p(), 1, 4).to_display(20), "0.25");
        assert_eq!(Scalar::ratio(p(), -1, 1000).to_display(20), "-0.001");
        assert_eq!(Scalar::from_i64(p(), 65535).to_display(30), "65535");
        assert_eq!(Scalar::parse("1e-30", p()).unwrap().to_display(10), "1e-30");
    }

    #[test]
    fn as_integer_detects_exact_values() {
        assert_eq!(Scalar::from_i64(p(), -12).as_integer(), Some(-12));
        assert_eq!(Scalar::ratio(p(), 1, 2).as_integer(), None);
        assert_eq!(Scalar::parse("3+1i", p()).unwrap().as_integer(), None);
    }
}
