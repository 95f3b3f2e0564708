//! Pieces shared by the Lehmer-type records.

use crate::catalog::ctx::{Central, Ctx, Stats};
use crate::catalog::Point;
use crate::error::Result;
use crate::numerics::{binom2, Scalar};

/// `w^C(n,2)`
pub fn wc(w: &Scalar, n: usize) -> Result<Scalar> {
    w.powi(binom2(n as i64))
}

pub fn qn(ctx: &Ctx, n: i64) -> Result<Scalar> {
    ctx.q.powi(n)
}

/// `1 - q^n`
pub fn om(ctx: &Ctx, n: i64) -> Result<Scalar> {
    Ok(qn(ctx, n)?.one_minus())
}

/// `sum_{n >= start} coef(n) z^n`, coefficients drawn from a fresh central table.
pub fn c_series<F>(ctx: &Ctx, st: &mut Stats, start: usize, step: u32, z: &Scalar, mut coef: F) -> Result<Scalar>
where
    F: FnMut(usize, &mut Central) -> Result<Scalar>,
{
    let mut cen = ctx.central();
    ctx.lsum(st, start, step, |n| Ok(coef(n, &mut cen)? * z.powi(n as i64)?))
}

/// `sqrt(-t) / ((1 - sqrt q) sqrt(phi))`, the displayed coefficient of the
/// half-order identities.
pub fn p0(ctx: &Ctx) -> Scalar {
    &ctx.smt / (ctx.sq.one_minus() * &ctx.sphi)
}

/// `-sqrt(-t) / ((1 - sqrt q) phi)`, the coefficient that makes them hold.
pub fn coef1(ctx: &Ctx) -> Scalar {
    -(&ctx.smt / (ctx.sq.one_minus() * &ctx.phi))
}

/// `(sqrt q; q)_2`
pub fn sq_poch2(ctx: &Ctx) -> Scalar {
    ctx.sq.one_minus() * (&ctx.sq * &ctx.q).one_minus()
}

/// `[2n n]_q (-1)^n / ((-q; q)_n (-sqrt q; q)_n (1 - sqrt(q)^(2n-1)))`,
/// the coefficient of the order-1/2 series.
pub fn half_coef(ctx: &Ctx, cen: &mut Central, n: usize) -> Result<Scalar> {
    let tail = ctx.sq.powi(2 * n as i64 - 1)?.one_minus();
    Ok(ctx.alt(n, cen.c(n) / tail))
}

pub fn args_lehmer(ctx: &Ctx, p: &Point) -> Result<Vec<(Scalar, u32)>> {
    let base = ctx.int(4) / &ctx.k;
    Ok(vec![
        (base.clone(), 1),
        (&base * &p.w, 1),
        (&base * &p.w.square(), 1),
    ])
}

pub fn args_lehmer_sq(ctx: &Ctx, p: &Point) -> Result<Vec<(Scalar, u32)>> {
    let base = ctx.int(4) / &ctx.k;
    Ok(vec![
        (base.clone(), 2),
        (&base * &p.w, 2),
        (ctx.int(4) / (&ctx.t * &ctx.sphi), 2),
    ])
}

pub fn args_half(ctx: &Ctx, _p: &Point) -> Result<Vec<(Scalar, u32)>> {
    Ok(vec![
        (ctx.x_big(&ctx.one())?, 1),
        (&ctx.sq / &ctx.sphi, 1),
        (ctx.one() / &ctx.sphi, 1),
    ])
}
