//! (s,t)-Catalan analogues: `w = phi^2`, coefficients `C_n = {2n n}/{n+1}`.
//!
//! With `w = phi^2` the deformed series diverge whenever `|phi| >= 1`, so on
//! such families these records are compared as power series in `x` truncated
//! at a fixed total degree. A family with `|phi| < 1` checks them as
//! convergent sums.

use super::common::{args_lehmer, args_lehmer_sq, om, sq_poch2};
use crate::catalog::ctx::{Ctx, Stats, D1, D2, SQ0, D0};
use crate::catalog::{ArgList, IdentityRecord as R, Point, Regime, Sampler, WValue, XRule};
use crate::error::Result;
use crate::numerics::Scalar;
use crate::stfib::{catalan_st, STFamily};

type S = Stats;
type Res = Result<Scalar>;

/// `sum_{n >= start} C_n f(n) z^n / ((-sqrt q;q)_n (-q;q)_n)`
fn cat_sum<F>(c: &Ctx, st: &mut S, start: usize, step: u32, z: &Scalar, f: F) -> Res
where
    F: Fn(usize) -> Res,
{
    let mut cen = c.central();
    c.lsum(st, start, step, |n| {
        Ok(catalan_st(n, &c.p)? / cen.denom(n) * f(n)? * z.powi(n as i64)?)
    })
}

fn w(c: &Ctx) -> Scalar {
    c.phi.square()
}
fn qsq(c: &Ctx) -> Scalar {
    &c.q * &c.sq
}
fn up3(c: &Ctx) -> Vec<Scalar> {
    vec![qsq(c), c.q.clone(), c.q.clone()]
}
/// `4 phi^2 x / K`, the displayed form of `w y`.
fn wy(c: &Ctx, p: &Point) -> Scalar {
    (w(c) * &p.x).mul_i64(4) / &c.k
}
/// `4 (1 - sqrt q) x / K`
fn lead(c: &Ctx, p: &Point) -> Scalar {
    (c.sq.one_minus() * &p.x).mul_i64(4) / &c.k
}

fn l3(c: &Ctx, p: &Point, st: &mut S) -> Res {
    cat_sum(c, st, 0, 1, &c.y(&p.x), |_| Ok(c.one()))
}
fn r3(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &[c.sq.clone(), c.q.clone()], &[c.q.square()], &w(c), &c.y(&p.x), D0)
}

fn l4(c: &Ctx, p: &Point, st: &mut S) -> Res {
    cat_sum(c, st, 1, 1, &c.y(&p.x), |n| Ok(om(c, n as i64 + 1)? / om(c, n as i64)?))
}
fn r4(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let v = c.big(st, &up3(c), &[c.q.square(), c.q.square()], &w(c), &wy(c, p), D1)?;
    Ok(lead(c, p) / c.q.one_minus() * v)
}

fn l5(c: &Ctx, p: &Point, st: &mut S) -> Res {
    cat_sum(c, st, 1, 1, &c.y(&p.x), |n| Ok(om(c, n as i64)?.recip()))
}
fn r5_series(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &up3(c), &[c.q.square(), c.q.powi(3)?], &w(c), &wy(c, p), D1)
}
fn r5_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let coef = lead(c, p) / (c.q.one_minus() * (&c.one() + &c.q));
    Ok(coef * r5_series(c, p, st)?)
}
fn r5(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let coef = c.sq.one_minus() * c.y(&p.x) / (c.q.one_minus() * om(c, 2)?);
    Ok(coef * r5_series(c, p, st)?)
}

fn l6(c: &Ctx, p: &Point, st: &mut S) -> Res {
    cat_sum(c, st, 1, 1, &c.y(&p.x), |n| Ok(om(c, n as i64)? * om(c, n as i64 + 1)?))
}
fn r6(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(c.q.one_minus() * lead(c, p) * c.big(st, &[qsq(c)], &[], &w(c), &wy(c, p), D1)?)
}

fn l7(c: &Ctx, p: &Point, st: &mut S) -> Res {
    cat_sum(c, st, 1, 1, &c.y(&p.x), |n| Ok(om(c, n as i64)?.square() * om(c, n as i64 + 1)?))
}
fn r7_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let one_q = c.q.one_minus();
    let a = &one_q * lead(c, p) * c.big(st, &[qsq(c)], &[], &w(c), &(&c.q * &wy(c, p)), D1)?;
    let coef = (&one_q * sq_poch2(c) * w(c) * p.x.square()).mul_i64(16) / (&c.t * &c.phi);
    let z = -((w(c).square() * &p.x).mul_i64(4) / &c.k);
    let b = coef * c.big(st, &[c.q.square() * &c.sq], &[], &w(c), &z, D2)?;
    Ok(a - b)
}
fn r7(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let y = c.y(&p.x);
    let one_q = c.q.one_minus();
    let a = &one_q * c.sq.one_minus() * &y * c.big(st, &[qsq(c)], &[], &w(c), &(&c.q * &w(c) * &y), D1)?;
    let b = sq_poch2(c) * w(c) * y.square() * c.big(st, &[c.q.square() * &c.sq], &[], &w(c), &(w(c).square() * &y), D2)?;
    Ok(one_q * (a + b))
}

fn l8_with(c: &Ctx, p: &Point, st: &mut S, start: usize) -> Res {
    cat_sum(c, st, start, 2, &c.y_sq(&p.x), |n| Ok(om(c, n as i64 + 1)? / om(c, 2 * n as i64 + 1)?))
}
fn l8_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    l8_with(c, p, st, 1)
}
fn l8(c: &Ctx, p: &Point, st: &mut S) -> Res {
    l8_with(c, p, st, 0)
}
fn r8_with(c: &Ctx, st: &mut S, z: &Scalar) -> Res {
    let qq = qsq(c);
    c.big(st, &[c.sq.clone(), c.sq.clone(), -&c.sq], &[qq.clone(), -qq], &w(c), z, SQ0)
}
fn r8_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = -(p.x.square().mul_i64(4) / (&c.t * &c.sphi));
    r8_with(c, st, &z)
}
fn r8(c: &Ctx, p: &Point, st: &mut S) -> Res {
    r8_with(c, st, &c.y_sq(&p.x))
}

fn sampler(args: ArgList) -> Sampler {
    Sampler::new(Regime::Fixed(WValue::PhiSquared), XRule::Args(args))
}

/// A family with `|phi| < 1`, where the Catalan series converge.
pub fn convergent_family() -> STFamily {
    STFamily::custom("1", "-1/5")
}

pub fn records() -> Vec<R> {
    let list = vec![
        R::new("catalan-6.5-iden3", "Catalan generating function", "Section 6.5, analogue of identity 3",
            "sum_n C_n y^n / ((-sqrt q;q)_n (-q;q)_n) = 2Phi1(sqrt q, q; q^2; q, phi^2, y)", sampler(args_lehmer))
            .printed(l3, r3),
        R::new("catalan-6.5-iden4", "Catalan series with (1-q^(n+1))/(1-q^n)", "Section 6.5, analogue of identity 4",
            "sum_(n>=1) C_n (1-q^(n+1)) y^n / ((1-q^n)(-sqrt q;q)_n (-q;q)_n) = 4(1-sqrt q)x/((1-q)K) 3Phi2(q sqrt q, q, q; q^2, q^2; q, phi^2, 4 phi^2 x/K)",
            sampler(args_lehmer))
            .printed(l4, r4),
        R::new("catalan-6.5-iden5", "Catalan series with 1/(1-q^n)", "Section 6.5, analogue of identity 5",
            "sum_(n>=1) C_n y^n / ((1-q^n)(-sqrt q;q)_n (-q;q)_n) = (1-sqrt q) y/((1-q)(1-q^2)) 3Phi2(q sqrt q, q, q; q^2, q^3; q, phi^2, 4 phi^2 x/K)",
            sampler(args_lehmer))
            .printed(l5, r5_printed)
            .corrected("coefficient (1-sqrt q) y/((1-q)(1-q^2))", l5, r5),
        R::new("catalan-6.5-iden6", "Catalan series with (1-q^n)(1-q^(n+1))", "Section 6.5, analogue of identity 6",
            "sum_(n>=1) C_n (1-q^n)(1-q^(n+1)) y^n / ((-sqrt q;q)_n (-q;q)_n) = 4(1-q)(1-sqrt q)x/K 1Phi0(q sqrt q; -; q, phi^2, 4 phi^2 x/K)",
            sampler(args_lehmer))
            .printed(l6, r6),
        R::new("catalan-6.5-iden7", "Catalan series with (1-q^n)^2 (1-q^(n+1))", "Section 6.5, analogue of identity 7",
            "sum_(n>=1) C_n (1-q^n)^2 (1-q^(n+1)) y^n / ((-sqrt q;q)_n (-q;q)_n) = (1-q)[(1-q)(1-sqrt q) y 1Phi0(q sqrt q; -; q, w, q w y) + (sqrt q;q)_2 w y^2 1Phi0(q^2 sqrt q; -; q, w, w^2 y)],  w = phi^2",
            sampler(args_lehmer))
            .printed(l7, r7_printed)
            .corrected("positive second term with argument w^2 y", l7, r7),
        R::new("catalan-6.5-iden8", "Catalan series in x^2", "Section 6.5, analogue of identity 8",
            "sum_(n>=0) C_n (1-q^(n+1)) Y^n / ((1-q^(2n+1))(-sqrt q;q)_n (-q;q)_n) = 3Phi2(sqrt q, sqrt q, -sqrt q; q sqrt q, -q sqrt q; q, phi^2, Y)",
            sampler(args_lehmer_sq))
            .printed(l8_printed, r8_printed)
            .corrected("sum from n = 0, argument Y", l8, r8),
    ];
    list.into_iter().map(|r| r.formal().also_on(convergent_family())).collect()
}
