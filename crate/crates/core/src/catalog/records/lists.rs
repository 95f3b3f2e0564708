//! The four lists of specializations: `w = 1`, `w = q`, `w = q^2` (with
//! `x -> q x`) and `w = sqrt q` (base `sqrt q` on the right).
//!
//! Left sides use the explicit weights of each list: `1`, `q^C(n,2)`,
//! `q^(n^2)` and `q^(C(n,2)/2)`. Right sides are classical series.

use super::common::{
    args_half, args_lehmer, args_lehmer_sq, c_series, coef1, half_coef, om, p0, qn, sq_poch2, wc,
};
use crate::catalog::ctx::{Ctx, Stats, D0};
use crate::catalog::{ArgList, Flag, IdentityRecord as R, Point, Regime, Sampler, WValue, XRule};
use crate::error::Result;
use crate::numerics::{binom2, Scalar};

type S = Stats;
type Res = Result<Scalar>;

/// Weight of term `n` in list `L`.
fn weight<const L: u8>(c: &Ctx, n: usize) -> Res {
    match L {
        1 => Ok(c.one()),
        2 => wc(&c.q, n),
        3 => c.q.powi((n * n) as i64),
        _ => wc(&c.sq, n),
    }
}

fn half_l<const L: u8>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let xb = c.x_big(&p.x)?;
    c_series(c, st, 0, 1, &xb, |n, cen| Ok(half_coef(c, cen, n)? * weight::<L>(c, n)?))
}
fn c_l<const L: u8>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 0, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * weight::<L>(c, n)?))
}
fn c57_l<const L: u8>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 0, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * weight::<L>(c, n)? / om(c, n as i64 + 1)?))
}
fn c58_l<const L: u8>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 1, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * weight::<L>(c, n)? / om(c, n as i64)?))
}
fn c59_l<const L: u8, const SHIFT: i64>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 1, 1, &c.y(&p.x), |n, cen| {
        let nn = n as i64;
        Ok(cen.c(n) * weight::<L>(c, n)? / (om(c, nn)? * om(c, nn + SHIFT)?))
    })
}
fn c510_l<const L: u8>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 1, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * om(c, n as i64)? * weight::<L>(c, n)?))
}
fn c511_l<const L: u8>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 1, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * om(c, n as i64)?.square() * weight::<L>(c, n)?))
}
fn c512_l<const L: u8, const START: usize>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, START, 2, &c.y_sq(&p.x), |n, cen| {
        Ok(cen.c(n) * weight::<L>(c, n)? / om(c, 2 * n as i64 + 1)?)
    })
}

// shared constants

fn qsq(c: &Ctx) -> Scalar {
    &c.q * &c.sq
}
fn q2sq(c: &Ctx) -> Scalar {
    c.q.square() * &c.sq
}
fn up3(c: &Ctx) -> Vec<Scalar> {
    vec![qsq(c), c.q.clone(), c.q.clone()]
}
fn up_half_sq(c: &Ctx) -> Vec<Scalar> {
    vec![c.sq.clone(), c.sq.clone(), -&c.sq]
}
fn lo_half_sq(c: &Ctx) -> Vec<Scalar> {
    vec![qsq(c), -qsq(c)]
}
fn with(mut v: Vec<Scalar>, extra: &[Scalar]) -> Vec<Scalar> {
    v.extend_from_slice(extra);
    v
}
/// `4 (1 - sqrt q) x / K`
fn lead(c: &Ctx, p: &Point) -> Scalar {
    (c.sq.one_minus() * &p.x).mul_i64(4) / &c.k
}
/// `-4 x^2 / (t sqrt phi)`
fn printed_sq_arg(c: &Ctx, p: &Point) -> Scalar {
    -(p.x.square().mul_i64(4) / (&c.t * &c.sphi))
}
/// `16 (sqrt q;q)_2 x^2 / (t phi)`
fn printed_sq_coef(c: &Ctx, p: &Point) -> Scalar {
    (sq_poch2(c) * p.x.square()).mul_i64(16) / (&c.t * &c.phi)
}

fn list(w: WValue, args: ArgList) -> Sampler {
    Sampler::new(Regime::Fixed(w), XRule::Args(args))
}

// ---- w = 1

fn e1_r1_series(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let a = -(&p.x / &c.sphi);
    let b = &a * &c.sq;
    Ok(c.prod(st, &a, &c.q)? / c.prod(st, &b, &c.q)?)
}
fn e1_r1_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(p0(c) * e1_r1_series(c, p, st)?)
}
fn e1_r1(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(coef1(c) * e1_r1_series(c, p, st)?)
}
fn e1_l2_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = -(&p.x / &c.k);
    c_series(c, st, 0, 1, &z, |n, cen| Ok(cen.c(n)))
}
fn e1_r2(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let root = (-(&c.q / (&c.t * &c.phi))).sqrt();
    let top = (root * &p.x).mul_i64(4);
    Ok(c.prod(st, &top, &c.q)? / c.prod(st, &c.y(&p.x), &c.q)?)
}
fn e1_r3(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(c.phi_q(st, &[c.sq.clone(), c.q.clone()], &[c.q.square()], &c.y(&p.x), D0)? / c.q.one_minus())
}
fn e1_r4(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = (&c.t * &p.x).mul_i64(4) / (&c.t * &c.k);
    let v = c.phi_q(st, &up3(c), &[c.q.square(), c.q.square()], &z, D0)?;
    Ok(lead(c, p) / c.q.one_minus().square() * v)
}
fn e1_r5_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let v = c.phi_q(st, &up3(c), &[c.q.square(), qn(c, 3)?], &c.y(&p.x), D0)?;
    Ok(lead(c, p) / (c.q.one_minus().square() * (&c.one() + &c.q)) * v)
}
fn e1_r5(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(e1_r5_printed(c, p, st)? / c.q.one_minus())
}
fn e1_r6(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(lead(c, p) * c.phi_q(st, &[qsq(c)], &[], &c.y(&p.x), D0)?)
}
fn e1_r7_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z1 = (&c.q * &p.x).mul_i64(4) / &c.k;
    let z2 = -(p.x.mul_i64(4) / &c.k);
    let a = lead(c, p) * c.phi_q(st, &[qsq(c)], &[], &z1, D0)?;
    let b = printed_sq_coef(c, p) * c.phi_q(st, &[q2sq(c)], &[], &z2, D0)?;
    Ok(a - b)
}
fn e1_r7(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let y = c.y(&p.x);
    let a = c.q.one_minus() * c.sq.one_minus() * &y * c.phi_q(st, &[qsq(c)], &[], &(&c.q * &y), D0)?;
    let b = sq_poch2(c) * y.square() * c.phi_q(st, &[q2sq(c)], &[], &y, D0)?;
    Ok(a + b)
}
fn e1_r8_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(c.phi_q(st, &up_half_sq(c), &lo_half_sq(c), &printed_sq_arg(c, p), D0)? / c.q.one_minus())
}
fn e1_r8(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(c.phi_q(st, &up_half_sq(c), &lo_half_sq(c), &c.y_sq(&p.x), D0)? / c.q.one_minus())
}

// ---- w = q

/// `x` with `phi^(-3/2) sqrt(-t) x = q`.
fn forced_half(c: &Ctx) -> Result<Scalar> {
    Ok(&c.q * &c.sphi.powi(3)? / &c.smt)
}
/// `x` with `4 x = sqrt(-t) q`.
fn forced_quarter(c: &Ctx) -> Result<Scalar> {
    Ok((&c.smt * &c.q).div_i64(4))
}

fn e2_r1_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let xb = c.x_big(&p.x)?;
    let a = c.sq.recip();
    let head = c.prod(st, &-&xb, &c.q)? * c.prod(st, &a, &c.q)?;
    let z = c.zero();
    let v = c.phi_q(st, &[z.clone(), z], &[-&xb], &a, D0)?;
    Ok(p0(c) * head * v)
}
fn e2_r1(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let xb = c.x_big(&p.x)?;
    Ok(coef1(c) * c.phi_q(st, &[c.sq.recip()], &[c.zero()], &xb, D0)?)
}
fn andrews_special_l_with(c: &Ctx, st: &mut S, signed: bool) -> Res {
    let mut cen = c.central();
    c.lsum(st, 0, 1, |n| {
        let v = half_coef(c, &mut cen, n)? * qn(c, binom2(n as i64 + 1))?;
        Ok(if signed { v } else { c.alt(n, v) })
    })
}
fn andrews_special_printed_l(c: &Ctx, _: &Point, st: &mut S) -> Res {
    andrews_special_l_with(c, st, true)
}
fn andrews_special_l(c: &Ctx, _: &Point, st: &mut S) -> Res {
    andrews_special_l_with(c, st, false)
}
fn andrews_special_printed_r(c: &Ctx, _: &Point, st: &mut S) -> Res {
    Ok(p0(c) * c.prod(st, &-&c.q, &c.q)? * c.prod(st, &-&c.sq, &c.q.square())?)
}
fn andrews_special_r(c: &Ctx, _: &Point, st: &mut S) -> Res {
    Ok(coef1(c) * c.prod(st, &-&c.q, &c.q)? * c.prod(st, &c.sq, &c.q.square())?)
}
fn e2_l2_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = -(&p.x / &c.k);
    c_series(c, st, 0, 1, &z, |n, cen| Ok(cen.c(n) * wc(&c.q, n)?))
}
fn e2_l2(c: &Ctx, _: &Point, st: &mut S) -> Res {
    let one = c.one();
    c_series(c, st, 0, 1, &one, |n, cen| Ok(cen.c(n) * qn(c, binom2(n as i64 + 1))?))
}
fn e2_r2(c: &Ctx, _: &Point, st: &mut S) -> Res {
    Ok(c.prod(st, &-&c.q, &c.q)? * c.prod(st, &qsq(c), &c.q.square())?)
}
fn e2_r3(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let v = c.phi_q(st, &[c.sq.clone(), c.q.clone()], &[c.q.square(), c.zero()], &-c.y(&p.x), D0)?;
    Ok(v / c.q.one_minus())
}
fn e2_r4(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = -(&c.q * &c.y(&p.x));
    let v = c.phi_q(st, &up3(c), &[c.q.square(), c.q.square(), c.zero()], &z, D0)?;
    Ok(lead(c, p) / c.q.one_minus().square() * v)
}
fn e2_r5_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    // the displayed argument names a variable theta; it is read as x
    let z = -(&c.q * &c.y(&p.x));
    let v = c.phi_q(st, &up3(c), &[c.q.square(), qn(c, 3)?, c.zero()], &z, D0)?;
    Ok(lead(c, p) / (c.q.one_minus().square() * (&c.one() + &c.q)) * v)
}
fn e2_r5(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(e2_r5_printed(c, p, st)? / c.q.one_minus())
}
fn e2_r6(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = -(&c.q * &c.y(&p.x));
    Ok(lead(c, p) * c.phi_q(st, &[qsq(c)], &[c.zero()], &z, D0)?)
}
fn e2_r7_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = -(c.q.square() * c.y(&p.x));
    let a = lead(c, p) * c.phi_q(st, &[qsq(c)], &[c.zero()], &z, D0)?;
    let b = printed_sq_coef(c, p) * &c.q * c.phi_q(st, &[q2sq(c)], &[], &z, D0)?;
    Ok(a - b)
}
fn e2_r7(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let y = c.y(&p.x);
    let z = -(c.q.square() * &y);
    let a = c.q.one_minus() * c.sq.one_minus() * &y * c.phi_q(st, &[qsq(c)], &[c.zero()], &z, D0)?;
    let b = sq_poch2(c) * &c.q * y.square() * c.phi_q(st, &[q2sq(c)], &[c.zero()], &z, D0)?;
    Ok(a + b)
}
fn e2_r8_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(lo_half_sq(c), &[c.zero()]);
    Ok(c.phi_q(st, &up_half_sq(c), &lo, &printed_sq_arg(c, p), D0)? / c.q.one_minus())
}
fn e2_r8(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(lo_half_sq(c), &[c.zero()]);
    Ok(c.phi_q(st, &up_half_sq(c), &lo, &-c.y_sq(&p.x), D0)? / c.q.one_minus())
}

// ---- w = q^2, x -> q x

fn zz(c: &Ctx) -> [Scalar; 2] {
    [c.zero(), c.zero()]
}
fn e3_r1_series(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = -(&qsq(c) / &c.sphi * &p.x);
    c.phi_q(st, &[c.sq.recip()], &zz(c), &z, D0)
}
fn e3_r1_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(p0(c) * e3_r1_series(c, p, st)?)
}
fn e3_r1(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(coef1(c) * e3_r1_series(c, p, st)?)
}
fn e3_r2(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.phi_q(st, std::slice::from_ref(&c.sq), &zz(c), &(&c.q * &c.y(&p.x)), D0)
}
fn e3_r3(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(vec![c.q.square()], &zz(c));
    let v = c.phi_q(st, &[c.sq.clone(), c.q.clone()], &lo, &(&c.q * &c.y(&p.x)), D0)?;
    Ok(v / c.q.one_minus())
}
/// `(1 - sqrt q) q y`
fn e3_lead(c: &Ctx, p: &Point) -> Scalar {
    c.sq.one_minus() * &c.q * c.y(&p.x)
}
fn e3_r4(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(vec![c.q.square(), c.q.square()], &zz(c));
    let v = c.phi_q(st, &up3(c), &lo, &(qn(c, 3)? * c.y(&p.x)), D0)?;
    Ok(e3_lead(c, p) / c.q.one_minus().square() * v)
}
fn e3_r5_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(vec![c.q.square(), qn(c, 3)?], &zz(c));
    let v = c.phi_q(st, &up3(c), &lo, &(qn(c, 3)? * c.y(&p.x)), D0)?;
    Ok(e3_lead(c, p) / (c.q.one_minus().square() * (&c.one() + &c.q)) * v)
}
fn e3_r5(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(e3_r5_printed(c, p, st)? / c.q.one_minus())
}
fn e3_r6(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(e3_lead(c, p) * c.phi_q(st, &[qsq(c)], &zz(c), &(qn(c, 3)? * c.y(&p.x)), D0)?)
}
fn e3_r7_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let y = c.y(&p.x);
    let a = e3_lead(c, p) * c.phi_q(st, &[qsq(c)], &zz(c), &(qn(c, 3)? * &y), D0)?;
    let b = printed_sq_coef(c, p) * qn(c, 4)? * c.phi_q(st, &[q2sq(c)], &zz(c), &(qn(c, 5)? * &y), D0)?;
    Ok(a - b)
}
fn e3_r7(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let y = c.y(&p.x);
    let a = c.q.one_minus() * e3_lead(c, p) * c.phi_q(st, &[qsq(c)], &zz(c), &(qn(c, 4)? * &y), D0)?;
    let b = sq_poch2(c) * qn(c, 4)? * y.square() * c.phi_q(st, &[q2sq(c)], &zz(c), &(qn(c, 5)? * &y), D0)?;
    Ok(a + b)
}
fn e3_l8_with(c: &Ctx, p: &Point, st: &mut S, start: usize, extra: i64) -> Res {
    c_series(c, st, start, 2, &c.y_sq(&p.x), |n, cen| {
        let nn = n as i64;
        Ok(cen.c(n) * qn(c, nn * nn + nn + extra)? / om(c, 2 * nn + 1)?)
    })
}
fn e3_l8_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e3_l8_with(c, p, st, 1, 1)
}
fn e3_l8(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e3_l8_with(c, p, st, 0, 0)
}
fn e3_r8_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(lo_half_sq(c), &zz(c));
    let z = c.q.square() * printed_sq_arg(c, p);
    Ok(c.phi_q(st, &up_half_sq(c), &lo, &z, D0)? / c.q.one_minus())
}
fn e3_r8(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(lo_half_sq(c), &zz(c));
    let z = c.q.square() * c.y_sq(&p.x);
    Ok(c.phi_q(st, &up_half_sq(c), &lo, &z, D0)? / c.q.one_minus())
}

// ---- w = sqrt q, base sqrt q

fn q4(c: &Ctx) -> Scalar {
    c.sq.sqrt()
}
fn pm(v: Scalar) -> [Scalar; 2] {
    [v.clone(), -v]
}
fn tail(c: &Ctx) -> [Scalar; 2] {
    [-&c.sq, c.zero()]
}
fn e4(c: &Ctx, st: &mut S, up: &[Scalar], lo: &[Scalar], z: &Scalar) -> Res {
    let lo = with(lo.to_vec(), &tail(c));
    c.phi_base(st, up, &lo, &c.sq, z, D0)
}
fn e4_r1_series(c: &Ctx, p: &Point, st: &mut S, sgn: i64) -> Res {
    let z = (&c.sq / &c.sphi * &p.x).mul_i64(sgn);
    e4(c, st, &pm(q4(c).recip()), &[], &z)
}
fn e4_r1_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(p0(c) * e4_r1_series(c, p, st, -1)?)
}
fn e4_r1(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(coef1(c) * e4_r1_series(c, p, st, 1)?)
}
fn e4_r2_with(c: &Ctx, p: &Point, st: &mut S, sgn: i64) -> Res {
    e4(c, st, &pm(q4(c)), &[], &c.y(&p.x).mul_i64(sgn))
}
fn e4_r2_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r2_with(c, p, st, 1)
}
fn e4_r2(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r2_with(c, p, st, -1)
}
fn e4_r3_with(c: &Ctx, p: &Point, st: &mut S, sgn: i64) -> Res {
    let up = with(pm(q4(c)).to_vec(), &pm(c.sq.clone()));
    let v = e4(c, st, &up, &pm(c.q.clone()), &c.y(&p.x).mul_i64(sgn))?;
    Ok(v / c.q.one_minus())
}
fn e4_r3_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r3_with(c, p, st, 1)
}
fn e4_r3(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r3_with(c, p, st, -1)
}
/// `(1 - sqrt q) y / (1 - q)^2`
fn e4_a(c: &Ctx, p: &Point) -> Scalar {
    c.sq.one_minus() * c.y(&p.x) / c.q.one_minus().square()
}
fn up6(c: &Ctx) -> Vec<Scalar> {
    let mut v = pm(q4(c).powi(3).expect("positive power")).to_vec();
    v.extend(pm(c.sq.clone()));
    v.extend(pm(c.sq.clone()));
    v
}
fn e4_r4_with(c: &Ctx, p: &Point, st: &mut S, sgn: i64) -> Res {
    let lo = with(pm(c.q.clone()).to_vec(), &pm(c.q.clone()));
    let z = (&c.sq * &c.y(&p.x)).mul_i64(sgn);
    Ok(e4_a(c, p) * e4(c, st, &up6(c), &lo, &z)?)
}
fn e4_r4_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r4_with(c, p, st, 1)
}
fn e4_r4(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r4_with(c, p, st, -1)
}
fn e4_r5_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(pm(c.q.clone()).to_vec(), &[qsq(c), qsq(c)]);
    let z = &c.sq * &c.y(&p.x);
    Ok(e4_a(c, p) / (&c.one() + &c.q) * e4(c, st, &up6(c), &lo, &z)?)
}
fn e4_r5(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let lo = with(pm(c.q.clone()).to_vec(), &pm(qsq(c)));
    let z = -(&c.sq * &c.y(&p.x));
    let v = e4(c, st, &up6(c), &lo, &z)?;
    Ok(e4_a(c, p) / ((&c.one() + &c.q) * c.q.one_minus()) * v)
}
fn e4_r6_with(c: &Ctx, p: &Point, st: &mut S, sgn: i64) -> Res {
    let y = c.y(&p.x);
    let z = (&c.sq * &y).mul_i64(sgn);
    Ok(c.sq.one_minus() * &y * e4(c, st, &pm(q4(c).powi(3)?), &[], &z)?)
}
fn e4_r6_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r6_with(c, p, st, 1)
}
fn e4_r6(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r6_with(c, p, st, -1)
}
fn e4_r7_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let y = c.y(&p.x);
    let a = c.sq.one_minus() * &y * e4(c, st, &pm(q4(c).powi(3)?), &[], &-(qsq(c) * &y))?;
    let b = printed_sq_coef(c, p) * &c.sq * e4(c, st, &pm(q4(c).powi(5)?), &[], &-(&c.q * &y))?;
    Ok(a - b)
}
fn e4_r7(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let y = c.y(&p.x);
    let a = c.q.one_minus() * c.sq.one_minus() * &y * e4(c, st, &pm(q4(c).powi(3)?), &[], &-(qsq(c) * &y))?;
    let b = sq_poch2(c) * &c.sq * y.square() * e4(c, st, &pm(q4(c).powi(5)?), &[], &-(&c.q * &y))?;
    Ok(a + b)
}
fn e4_r8_with(c: &Ctx, st: &mut S, z: &Scalar) -> Res {
    let i = Scalar::i(c.prec);
    let r = q4(c);
    let r3 = r.powi(3)?;
    let mut up = pm(r.clone()).to_vec();
    up.extend(pm(r.clone()));
    up.extend(pm(&i * &r));
    let mut lo = pm(r3.clone()).to_vec();
    lo.extend(pm(&i * &r3));
    Ok(e4(c, st, &up, &lo, z)? / c.q.one_minus())
}
fn e4_r8_printed(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r8_with(c, st, &printed_sq_arg(c, p))
}
fn e4_r8(c: &Ctx, p: &Point, st: &mut S) -> Res {
    e4_r8_with(c, st, &-c.y_sq(&p.x))
}

pub fn records() -> Vec<R> {
    use WValue::{One, QSquared, SqrtQ, Q};
    let forced = |f: fn(&Ctx) -> Result<Scalar>| Sampler::new(Regime::Fixed(Q), XRule::Fixed(f));
    vec![
        // w = 1
        R::new("sec6.1-iden1", "w = 1: order-1/2 series as a product quotient", "Section 6.1, identity 1",
            "sum_n [2n n]_q (-1)^n X^n / ((-q;q)_n (-sqrt q;q)_n (1-sqrt(q)^(2n-1))) = -sqrt(-t)/((1-sqrt q) phi) (-phi^(-1/2) x;q)_inf / (-phi^(-1/2) sqrt q x;q)_inf",
            list(One, args_half))
            .printed(half_l::<1>, e1_r1_printed)
            .corrected("coefficient -sqrt(-t)/((1-sqrt q) phi)", half_l::<1>, e1_r1),
        R::new("sec6.1-iden2", "w = 1: central generating function as a product quotient", "Section 6.1, identity 2",
            "sum_n c_n y^n = (4 x sqrt(-q/(t phi));q)_inf / (y;q)_inf", list(One, args_lehmer))
            .printed(e1_l2_printed, e1_r2)
            .corrected("series variable y = 4x/K", c_l::<1>, e1_r2)
            .flag(Flag::BranchCaveat)
            .note("sqrt(-q/(t phi)) and sqrt q / K agree only up to sign once q, t are complex"),
        R::new("sec6.1-iden3", "w = 1: 1/(1-q^(n+1)) series", "Section 6.1, identity 3",
            "sum_n c_n y^n/(1-q^(n+1)) = 1/(1-q) 2phi1(sqrt q, q; q^2; q, y)", list(One, args_lehmer))
            .printed(c57_l::<1>, e1_r3),
        R::new("sec6.1-iden4", "w = 1: 1/(1-q^n) series", "Section 6.1, identity 4",
            "sum_(n>=1) c_n y^n/(1-q^n) = 4(1-sqrt q)x/((1-q)^2 K) 3phi2(q sqrt q, q, q; q^2, q^2; q, 4tx/(tK))",
            list(One, args_lehmer))
            .printed(c58_l::<1>, e1_r4),
        R::new("sec6.1-iden5", "w = 1: 1/((1-q^n)(1-q^(n+1))) series", "Section 6.1, identity 5",
            "sum_(n>=1) c_n y^n/((1-q^n)(1-q^(n+1))) = 4(1-sqrt q)x/((1-q)^3 (1+q) K) 3phi2(q sqrt q, q, q; q^2, q^3; q, y)",
            list(One, args_lehmer))
            .printed(c59_l::<1, 2>, e1_r5_printed)
            .corrected("(1-q^(n+1)) with an extra 1/(1-q)", c59_l::<1, 1>, e1_r5),
        R::new("sec6.1-iden6", "w = 1: (1-q^n) series", "Section 6.1, identity 6",
            "sum_(n>=1) c_n (1-q^n) y^n = 4(1-sqrt q)x/K 1phi0(q sqrt q; -; q, y)", list(One, args_lehmer))
            .printed(c510_l::<1>, e1_r6),
        R::new("sec6.1-iden7", "w = 1: (1-q^n)^2 series", "Section 6.1, identity 7",
            "sum_(n>=1) c_n (1-q^n)^2 y^n = (1-q)(1-sqrt q) y 1phi0(q sqrt q; -; q, q y) + (sqrt q;q)_2 y^2 1phi0(q^2 sqrt q; -; q, y)",
            list(One, args_lehmer))
            .printed(c511_l::<1>, e1_r7_printed)
            .corrected("factor (1-q) on the first term, second argument y", c511_l::<1>, e1_r7),
        R::new("sec6.1-iden8", "w = 1: series in x^2", "Section 6.1, identity 8",
            "sum_(n>=0) c_n Y^n/(1-q^(2n+1)) = 1/(1-q) 3phi2(sqrt q, sqrt q, -sqrt q; q sqrt q, -q sqrt q; q, Y)",
            list(One, args_lehmer_sq))
            .printed(c512_l::<1, 1>, e1_r8_printed)
            .corrected("sum from n = 0, argument Y", c512_l::<1, 0>, e1_r8),
        // w = q
        R::new("sec6.2-iden1", "w = q: order-1/2 series at X = q", "Section 6.2, identity 1",
            "sum_n [2n n]_q (-1)^n q^C(n,2) X^n / ((-q;q)_n (-sqrt q;q)_n (1-sqrt(q)^(2n-1))) = -sqrt(-t)/((1-sqrt q) phi) 1phi1(q^(-1/2); 0; q, X),  X = q",
            forced(forced_half))
            .printed(half_l::<2>, e2_r1_printed)
            .corrected("coefficient -sqrt(-t)/((1-sqrt q) phi), convergent 1phi1 form", half_l::<2>, e2_r1)
            .flag(Flag::FixedArgument)
            .flag(Flag::DivergentAsPrinted)
            .note("the displayed 2phi1(0, 0; -X; q, q^(-1/2)) has argument of modulus > 1"),
        R::new("sec6.2-andrews-special", "w = q: Andrews-type evaluation of the order-1/2 series", "Section 6.2",
            "sum_n [2n n]_q q^C(n+1,2) / ((-q;q)_n (-sqrt q;q)_n (1-sqrt(q)^(2n-1))) = -sqrt(-t)/((1-sqrt q) phi) (-q;q)_inf (sqrt q;q^2)_inf",
            forced(forced_half))
            .printed(andrews_special_printed_l, andrews_special_printed_r)
            .corrected("no (-1)^n, coefficient -sqrt(-t)/((1-sqrt q) phi), product (sqrt q;q^2)_inf", andrews_special_l, andrews_special_r)
            .flag(Flag::FixedArgument),
        R::new("sec6.2-iden2", "w = q: central generating function at y = q", "Section 6.2, identity 2",
            "sum_n c_n q^C(n+1,2) = (-q;q)_inf (q sqrt q;q^2)_inf", forced(forced_quarter))
            .printed(e2_l2_printed, e2_r2)
            .corrected("weight q^C(n+1,2), i.e. y = q", e2_l2, e2_r2)
            .flag(Flag::FixedArgument),
        R::new("sec6.2-iden3", "w = q: 1/(1-q^(n+1)) series", "Section 6.2, identity 3",
            "sum_n c_n q^C(n,2) y^n/(1-q^(n+1)) = 1/(1-q) 2phi2(sqrt q, q; q^2, 0; q, -y)", list(Q, args_lehmer))
            .printed(c57_l::<2>, e2_r3),
        R::new("sec6.2-iden4", "w = q: 1/(1-q^n) series", "Section 6.2, identity 4",
            "sum_(n>=1) c_n q^C(n,2) y^n/(1-q^n) = 4(1-sqrt q)x/((1-q)^2 K) 3phi3(q sqrt q, q, q; q^2, q^2, 0; q, -q y)",
            list(Q, args_lehmer))
            .printed(c58_l::<2>, e2_r4),
        R::new("sec6.2-iden5", "w = q: 1/((1-q^n)(1-q^(n+1))) series", "Section 6.2, identity 5",
            "sum_(n>=1) c_n q^C(n,2) y^n/((1-q^n)(1-q^(n+1))) = 4(1-sqrt q)x/((1-q)^3 (1+q) K) 3phi3(q sqrt q, q, q; q^2, q^3, 0; q, -q y)",
            list(Q, args_lehmer))
            .printed(c59_l::<2, 2>, e2_r5_printed)
            .corrected("(1-q^(n+1)) with an extra 1/(1-q)", c59_l::<2, 1>, e2_r5),
        R::new("sec6.2-iden6", "w = q: (1-q^n) series", "Section 6.2, identity 6",
            "sum_(n>=1) c_n (1-q^n) q^C(n,2) y^n = 4(1-sqrt q)x/K 1phi1(q sqrt q; 0; q, -q y)", list(Q, args_lehmer))
            .printed(c510_l::<2>, e2_r6),
        R::new("sec6.2-iden7", "w = q: (1-q^n)^2 series", "Section 6.2, identity 7",
            "sum_(n>=1) c_n (1-q^n)^2 q^C(n,2) y^n = (1-q)(1-sqrt q) y 1phi1(q sqrt q; 0; q, -q^2 y) + (sqrt q;q)_2 q y^2 1phi1(q^2 sqrt q; 0; q, -q^2 y)",
            list(Q, args_lehmer))
            .printed(c511_l::<2>, e2_r7_printed)
            .corrected("factor (1-q) on the first term, 1phi1 with positive sign in the second", c511_l::<2>, e2_r7),
        R::new("sec6.2-iden8", "w = q: series in x^2", "Section 6.2, identity 8",
            "sum_(n>=0) c_n q^C(n,2) Y^n/(1-q^(2n+1)) = 1/(1-q) 3phi3(sqrt q, sqrt q, -sqrt q; q sqrt q, -q sqrt q, 0; q, -Y)",
            list(Q, args_lehmer_sq))
            .printed(c512_l::<2, 1>, e2_r8_printed)
            .corrected("sum from n = 0, argument -Y", c512_l::<2, 0>, e2_r8),
        // w = q^2
        R::new("sec6.3-iden1", "w = q^2: order-1/2 series", "Section 6.3, identity 1",
            "sum_n [2n n]_q (-1)^n q^(n^2) X^n / ((-q;q)_n (-sqrt q;q)_n (1-sqrt(q)^(2n-1))) = -sqrt(-t)/((1-sqrt q) phi) 1phi2(q^(-1/2); 0, 0; q, -phi^(-1/2) q sqrt q x)",
            list(QSquared, args_half).qx())
            .printed(half_l::<3>, e3_r1_printed)
            .corrected("coefficient -sqrt(-t)/((1-sqrt q) phi)", half_l::<3>, e3_r1),
        R::new("sec6.3-iden2", "w = q^2: central generating function", "Section 6.3, identity 2",
            "sum_n c_n q^(n^2) y^n = 1phi2(sqrt q; 0, 0; q, q y)", list(QSquared, args_lehmer).qx())
            .printed(c_l::<3>, e3_r2),
        R::new("sec6.3-iden3", "w = q^2: 1/(1-q^(n+1)) series", "Section 6.3, identity 3",
            "sum_n c_n q^(n^2) y^n/(1-q^(n+1)) = 1/(1-q) 2phi3(sqrt q, q; q^2, 0, 0; q, q y)",
            list(QSquared, args_lehmer).qx())
            .printed(c57_l::<3>, e3_r3),
        R::new("sec6.3-iden4", "w = q^2: 1/(1-q^n) series", "Section 6.3, identity 4",
            "sum_(n>=1) c_n q^(n^2) y^n/(1-q^n) = (1-sqrt q) q y/(1-q)^2 3phi4(q sqrt q, q, q; q^2, q^2, 0, 0; q, q^3 y)",
            list(QSquared, args_lehmer).qx())
            .printed(c58_l::<3>, e3_r4),
        R::new("sec6.3-iden5", "w = q^2: 1/((1-q^n)(1-q^(n+1))) series", "Section 6.3, identity 5",
            "sum_(n>=1) c_n q^(n^2) y^n/((1-q^n)(1-q^(n+1))) = (1-sqrt q) q y/((1-q)^3 (1+q)) 3phi4(q sqrt q, q, q; q^2, q^3, 0, 0; q, q^3 y)",
            list(QSquared, args_lehmer).qx())
            .printed(c59_l::<3, 2>, e3_r5_printed)
            .corrected("(1-q^(n+1)) with an extra 1/(1-q)", c59_l::<3, 1>, e3_r5),
        R::new("sec6.3-iden6", "w = q^2: (1-q^n) series", "Section 6.3, identity 6",
            "sum_(n>=1) c_n (1-q^n) q^(n^2) y^n = (1-sqrt q) q y 1phi2(q sqrt q; 0, 0; q, q^3 y)",
            list(QSquared, args_lehmer).qx())
            .printed(c510_l::<3>, e3_r6),
        R::new("sec6.3-iden7", "w = q^2: (1-q^n)^2 series", "Section 6.3, identity 7",
            "sum_(n>=1) c_n (1-q^n)^2 q^(n^2) y^n = (1-q)(1-sqrt q) q y 1phi2(q sqrt q; 0, 0; q, q^4 y) + (sqrt q;q)_2 q^4 y^2 1phi2(q^2 sqrt q; 0, 0; q, q^5 y)",
            list(QSquared, args_lehmer).qx())
            .printed(c511_l::<3>, e3_r7_printed)
            .corrected("factor (1-q) and argument q^4 y on the first term, positive second term", c511_l::<3>, e3_r7),
        R::new("sec6.3-iden8", "w = q^2: series in x^2", "Section 6.3, identity 8",
            "sum_(n>=0) c_n q^(n^2+n) Y^n/(1-q^(2n+1)) = 1/(1-q) 3phi4(sqrt q, sqrt q, -sqrt q; q sqrt q, -q sqrt q, 0, 0; q, q^2 Y)",
            list(QSquared, args_lehmer_sq).qx())
            .printed(e3_l8_printed, e3_r8_printed)
            .corrected("weight q^(n^2+n) from n = 0, argument q^2 Y", e3_l8, e3_r8),
        // w = sqrt q
        R::new("sec6.4-iden1", "w = sqrt q: order-1/2 series", "Section 6.4, identity 1",
            "sum_n [2n n]_q (-1)^n q^(C(n,2)/2) X^n / ((-q;q)_n (-sqrt q;q)_n (1-sqrt(q)^(2n-1))) = -sqrt(-t)/((1-sqrt q) phi) 2phi2(q^(-1/4), -q^(-1/4); -sqrt q, 0; sqrt q, phi^(-1/2) sqrt q x)",
            list(SqrtQ, args_half))
            .printed(half_l::<4>, e4_r1_printed)
            .corrected("coefficient -sqrt(-t)/((1-sqrt q) phi), argument sign +", half_l::<4>, e4_r1),
        R::new("sec6.4-iden2", "w = sqrt q: central generating function", "Section 6.4, identity 2",
            "sum_n c_n q^(C(n,2)/2) y^n = 2phi2(q^(1/4), -q^(1/4); -sqrt q, 0; sqrt q, -y)", list(SqrtQ, args_lehmer))
            .printed(c_l::<4>, e4_r2_printed)
            .corrected("argument -y", c_l::<4>, e4_r2),
        R::new("sec6.4-iden3", "w = sqrt q: 1/(1-q^(n+1)) series", "Section 6.4, identity 3",
            "sum_n c_n q^(C(n,2)/2) y^n/(1-q^(n+1)) = 1/(1-q) 4phi4(q^(1/4), -q^(1/4), sqrt q, -sqrt q; q, -q, -sqrt q, 0; sqrt q, -y)",
            list(SqrtQ, args_lehmer))
            .printed(c57_l::<4>, e4_r3_printed)
            .corrected("argument -y", c57_l::<4>, e4_r3),
        R::new("sec6.4-iden4", "w = sqrt q: 1/(1-q^n) series", "Section 6.4, identity 4",
            "sum_(n>=1) c_n q^(C(n,2)/2) y^n/(1-q^n) = (1-sqrt q) y/(1-q)^2 6phi6(+-q^(3/4), +-sqrt q, +-sqrt q; +-q, +-q, -sqrt q, 0; sqrt q, -sqrt q y)",
            list(SqrtQ, args_lehmer))
            .printed(c58_l::<4>, e4_r4_printed)
            .corrected("argument -sqrt q y", c58_l::<4>, e4_r4),
        R::new("sec6.4-iden5", "w = sqrt q: 1/((1-q^n)(1-q^(n+1))) series", "Section 6.4, identity 5",
            "sum_(n>=1) c_n q^(C(n,2)/2) y^n/((1-q^n)(1-q^(n+1))) = (1-sqrt q) y/((1-q)^3 (1+q)) 6phi6(+-q^(3/4), +-sqrt q, +-sqrt q; +-q, +-q sqrt q, -sqrt q, 0; sqrt q, -sqrt q y)",
            list(SqrtQ, args_lehmer))
            .printed(c59_l::<4, 2>, e4_r5_printed)
            .corrected("(1-q^(n+1)), extra 1/(1-q), lower parameters +-q^(3/2), argument -sqrt q y", c59_l::<4, 1>, e4_r5),
        R::new("sec6.4-iden6", "w = sqrt q: (1-q^n) series", "Section 6.4, identity 6",
            "sum_(n>=1) c_n (1-q^n) q^(C(n,2)/2) y^n = (1-sqrt q) y 2phi2(q^(3/4), -q^(3/4); -sqrt q, 0; sqrt q, -sqrt q y)",
            list(SqrtQ, args_lehmer))
            .printed(c510_l::<4>, e4_r6_printed)
            .corrected("argument -sqrt q y", c510_l::<4>, e4_r6),
        R::new("sec6.4-iden7", "w = sqrt q: (1-q^n)^2 series", "Section 6.4, identity 7",
            "sum_(n>=1) c_n (1-q^n)^2 q^(C(n,2)/2) y^n = (1-q)(1-sqrt q) y 2phi2(+-q^(3/4); -sqrt q, 0; sqrt q, -q sqrt q y) + (sqrt q;q)_2 sqrt q y^2 2phi2(+-q^(5/4); -sqrt q, 0; sqrt q, -q y)",
            list(SqrtQ, args_lehmer))
            .printed(c511_l::<4>, e4_r7_printed)
            .corrected("factor (1-q) on the first term, positive second term", c511_l::<4>, e4_r7),
        R::new("sec6.4-iden8", "w = sqrt q: series in x^2", "Section 6.4, identity 8",
            "sum_(n>=0) c_n q^(C(n,2)/2) Y^n/(1-q^(2n+1)) = 1/(1-q) 6phi6(+-q^(1/4), +-q^(1/4), +-i q^(1/4); +-q^(3/4), +-i q^(3/4), -sqrt q, 0; sqrt q, -Y)",
            list(SqrtQ, args_lehmer_sq))
            .printed(c512_l::<4, 1>, e4_r8_printed)
            .corrected("sum from n = 0, argument -Y", c512_l::<4, 0>, e4_r8),
    ]
}
