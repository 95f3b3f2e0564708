//! Seeded parameter sampling.
//!
//! The generator is seeded from the run seed mixed with a hash of the record
//! id and family name, so each (record, family) pair gets its own stream and
//! reports do not depend on evaluation order.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Ctx, IdentityRecord, Point, Regime, WValue, XRule};
use crate::error::Result;
use crate::numerics::{Precision, Scalar};
use crate::qcalc::TruncationPolicy;
use crate::stfib::{STFamily, STParams};

const SAFE_MODULUS: f64 = 0.5;

fn fnv1a(parts: &[&str]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for part in parts {
        for b in part.bytes().chain(std::iter::once(0)) {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

fn rng_for(record: &IdentityRecord, family: &STFamily, seed: u64) -> ChaCha8Rng {
    let mixed = fnv1a(&[record.id, &family.name()]) ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    ChaCha8Rng::seed_from_u64(mixed)
}

pub(crate) fn fixed_w(ctx: &Ctx, w: WValue) -> Result<Scalar> {
    Ok(match w {
        WValue::One => ctx.one(),
        WValue::Q => ctx.q.clone(),
        WValue::QSquared => ctx.q.square(),
        WValue::SqrtQ => ctx.sq.clone(),
        WValue::PhiSquared => ctx.phi.square(),
    })
}

fn disk(rng: &mut ChaCha8Rng, prec: Precision, radius: f64) -> Scalar {
    let rho = radius * rng.gen_range(0.3..=1.0);
    let theta = rng.gen_range(0.0..TAU);
    Scalar::from_f64_parts(prec, rho * theta.cos(), rho * theta.sin())
}

/// Largest radius keeping every `|c x^k| <= 0.5`.
fn safe_radius(args: &[(Scalar, u32)]) -> f64 {
    args.iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, k)| (SAFE_MODULUS / c.abs_f64()).powf(1.0 / f64::from((*k).max(1))))
        .fold(1.0, f64::min)
}

fn draw(rec: &IdentityRecord, ctx: &Ctx, rng: &mut ChaCha8Rng) -> Result<Point> {
    let prec = ctx.prec;
    let s = &rec.sampler;
    let free: f64 = rng.gen_range(0.2..=0.9);
    let w = match s.regime {
        Regime::Direct | Regime::General => Scalar::from_f64(prec, free),
        Regime::Fixed(v) => fixed_w(ctx, v)?,
    };
    let u = match s.regime {
        Regime::Direct => w.clone(),
        _ => &ctx.mt * &w,
    };
    let a_draw = disk(rng, prec, s.a.unwrap_or(0.0));
    let alpha_unit: f64 = rng.gen_range(0.0..=1.0);
    let n_draw: usize = rng.gen_range(0..=s.n.unwrap_or(0));
    let k_draw: usize = rng.gen_range(0..=s.k.unwrap_or(0));
    let x_unit = disk(rng, prec, 1.0);

    let alpha = match s.alpha {
        Some((lo, hi)) => Scalar::from_f64(prec, lo + (hi - lo) * alpha_unit),
        None => Scalar::zero(prec),
    };
    let mut point = Point {
        x: Scalar::zero(prec),
        w,
        u,
        a: if s.a.is_some() { a_draw } else { Scalar::zero(prec) },
        alpha,
        n: n_draw,
        k: k_draw,
    };
    point.x = match s.x {
        XRule::None => Scalar::zero(prec),
        XRule::Disk(r) => x_unit.mul_real(&rug::Float::with_val(prec.bits(), r)),
        XRule::Args(f) => {
            let r = safe_radius(&f(ctx, &point)?);
            x_unit.mul_real(&rug::Float::with_val(prec.bits(), r))
        }
        XRule::Fixed(f) => f(ctx)?,
    };
    Ok(point)
}

pub(crate) fn sample_with(rec: &IdentityRecord, params: &STParams, n: usize, seed: u64, family: &STFamily) -> Result<Vec<Point>> {
    let ctx = Ctx::new(params, TruncationPolicy::for_precision(params.precision()), None);
    let mut rng = rng_for(rec, family, seed);
    let count = if matches!(rec.sampler.x, XRule::Fixed(_)) { n.min(1) } else { n };
    (0..count).map(|_| draw(rec, &ctx, &mut rng)).collect()
}

/// `n` parameter points for `record` on `family`, deterministic in `seed`.
pub fn sample_domain(record: &IdentityRecord, family: &STFamily, n: usize, seed: u64, prec: Precision) -> Result<Vec<Point>> {
    let params = family.params(prec)?;
    sample_with(record, &params, n, seed, family)
}

/// The first sampled point with `x` moved to the origin.
pub fn zero_point(record: &IdentityRecord, family: &STFamily, seed: u64, prec: Precision) -> Result<Point> {
    let params = family.params(prec)?;
    let mut rng = rng_for(record, family, seed);
    let ctx = Ctx::new(&params, TruncationPolicy::for_precision(prec), None);
    let mut p = draw(record, &ctx, &mut rng)?;
    p.x = Scalar::zero(prec);
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;

    #[test]
    fn theorem_56_radius() {
        let rec = lookup("thm5.6").unwrap();
        let prec = Precision::default();
        let pts = sample_domain(rec, &STFamily::Mersenne, 3, 7, prec).unwrap();
        assert_eq!(pts.len(), 3);
        for p in &pts {
            assert!(p.x.abs_f64() <= 0.25 + 1e-12, "{}", p.x);
        }
        assert!(sample_domain(rec, &STFamily::Mersenne, 0, 7, prec).unwrap().is_empty());
    }

    #[test]
    fn deterministic_and_distinct() {
        let rec = lookup("thm5.8").unwrap();
        let prec = Precision::default();
        let a = sample_domain(rec, &STFamily::Mersenne, 4, 1, prec).unwrap();
        let b = sample_domain(rec, &STFamily::Mersenne, 4, 1, prec).unwrap();
        let c = sample_domain(rec, &STFamily::Mersenne, 4, 2, prec).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn regime_fixes_u() {
        let prec = Precision::default();
        let rec = lookup("sec6.3-iden2").unwrap();
        let pts = sample_domain(rec, &STFamily::Mersenne, 2, 1, prec).unwrap();
        for p in pts {
            // -t q^2 = 2 / 4
            assert!((p.u.abs_f64() - 0.5).abs() < 1e-15);
        }
        let fixed = lookup("sec6.2-iden1").unwrap();
        assert_eq!(sample_domain(fixed, &STFamily::Mersenne, 5, 1, prec).unwrap().len(), 1);
    }
}
