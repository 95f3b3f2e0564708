//! Deformed Lehmer-type identities with a free deformation `w = -u/t`.
//!
//! Notation: `K = sqrt(-t phi)`, `y = 4x/K`, `Y = 4x^2/K`,
//! `c_n = [2n n]_q / ((-sqrt q;q)_n (-q;q)_n)`.

use super::common::{args_half, args_lehmer, args_lehmer_sq, c_series, coef1, half_coef, om, p0, sq_poch2, wc};
use crate::catalog::ctx::{Ctx, Stats, D0, D1, SQ0};
use crate::catalog::{ArgList, IdentityRecord as R, Point, Regime, Sampler, XRule};
use crate::error::Result;
use crate::numerics::Scalar;

type S = Stats;
type Res = Result<Scalar>;

fn general(args: ArgList) -> Sampler {
    Sampler::new(Regime::General, XRule::Args(args))
}

/// `-4 u x / (t K)`, which equals `w y`.
fn uy(c: &Ctx, p: &Point) -> Scalar {
    -((&p.u * &p.x).mul_i64(4) / (&c.t * &c.k))
}

// R_alpha

fn r_alpha_args(c: &Ctx, p: &Point) -> Result<Vec<(Scalar, u32)>> {
    let coef = c.phi.pow(&(&p.alpha - &c.one()))? * c.q.pow(&p.alpha)?;
    Ok(vec![(coef, 1)])
}
fn r_alpha_arg(c: &Ctx, p: &Point) -> Res {
    let coef = c.phi.pow(&(&p.alpha - &c.one()))? * c.q.pow(&p.alpha)?;
    Ok(-(coef * &p.x))
}
fn thm53_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.r_alpha(st, &p.alpha, &p.x, &p.u)
}
fn thm53_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let a = c.q.pow(&-&p.alpha)?;
    c.big(st, &[a], &[], &p.w, &r_alpha_arg(c, p)?, D0)
}
fn thm54_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let a = c.q.pow(&-&p.alpha)?;
    c.theorem31(st, &a, &r_alpha_arg(c, p)?, &p.w, &c.q)
}

// thm5.5: order 1/2

fn thm55_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let xb = c.x_big(&p.x)?;
    c_series(c, st, 0, 1, &xb, |n, cen| Ok(half_coef(c, cen, n)? * wc(&p.w, n)?))
}
fn thm55_series(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let a = c.sq.recip();
    let z = -(&c.sq / &c.sphi * &p.x);
    c.big(st, &[a], &[], &p.w, &z, D0)
}
fn thm55_printed_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(p0(c) * thm55_series(c, p, st)?)
}
fn thm55_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(coef1(c) * thm55_series(c, p, st)?)
}

// thm5.6 and its integrated / differentiated relatives

fn thm56_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 0, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * wc(&p.w, n)?))
}
fn thm56_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, std::slice::from_ref(&c.sq), &[], &p.w, &c.y(&p.x), D0)
}

fn thm57_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 0, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * wc(&p.w, n)? / om(c, n as i64 + 1)?))
}
fn thm57_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let v = c.big(st, &[c.sq.clone(), c.q.clone()], &[c.q.square()], &p.w, &c.y(&p.x), D0)?;
    Ok(v / c.q.one_minus())
}

fn thm58_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 1, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * wc(&p.w, n)? / om(c, n as i64)?))
}
/// `4 (1 - sqrt q) x / K`
fn lead(c: &Ctx, p: &Point) -> Scalar {
    (c.sq.one_minus() * &p.x).mul_i64(4) / &c.k
}
fn up3(c: &Ctx) -> Vec<Scalar> {
    vec![&c.q * &c.sq, c.q.clone(), c.q.clone()]
}
fn thm58_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let v = c.big(st, &up3(c), &[c.q.square(), c.q.square()], &p.w, &uy(c, p), D1)?;
    Ok(lead(c, p) / c.q.one_minus().square() * v)
}

fn thm59_l_with(c: &Ctx, p: &Point, st: &mut S, shift: i64) -> Res {
    c_series(c, st, 1, 1, &c.y(&p.x), |n, cen| {
        let nn = n as i64;
        Ok(cen.c(n) * wc(&p.w, n)? / (om(c, nn)? * om(c, nn + shift)?))
    })
}
fn thm59_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    thm59_l_with(c, p, st, 1)
}
fn thm59_proof_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    thm59_l_with(c, p, st, 2)
}
fn thm59_printed_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let v = c.big(st, &up3(c), &[c.q.square(), c.q.powi(3)?], &p.w, &uy(c, p), D1)?;
    Ok(lead(c, p) / (c.q.one_minus().square() * (&c.one() + &c.q)) * v)
}
fn thm59_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(thm59_printed_r(c, p, st)? / c.q.one_minus())
}

fn thm510_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 1, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * om(c, n as i64)? * wc(&p.w, n)?))
}
fn thm510_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(lead(c, p) * c.big(st, &[&c.q * &c.sq], &[], &p.w, &uy(c, p), D1)?)
}

fn thm511_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c_series(c, st, 1, 1, &c.y(&p.x), |n, cen| Ok(cen.c(n) * om(c, n as i64)?.square() * wc(&p.w, n)?))
}
/// Returns the two summands with the second argument sign `sgn`.
fn thm511_parts(c: &Ctx, p: &Point, st: &mut S, sgn: i64) -> Result<(Scalar, Scalar)> {
    let q2sq = c.q.square() * &c.sq;
    let first = c.big(st, &[&c.q * &c.sq], &[], &p.w, &(&c.q * &uy(c, p)), D1)?;
    let z2 = (p.u.square() * &p.x).mul_i64(4 * sgn) / (c.t.square() * &c.k);
    let coef2 = (sq_poch2(c) * &p.u * p.x.square()).mul_i64(16) / (c.t.square() * &c.phi);
    let second = c.big(st, &[q2sq], &[], &p.w, &z2, crate::catalog::ctx::D2)?;
    Ok((lead(c, p) * first, coef2 * second))
}
fn thm511_printed_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let (a, b) = thm511_parts(c, p, st, -1)?;
    Ok(a + b)
}
fn thm511_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let (a, b) = thm511_parts(c, p, st, 1)?;
    Ok(c.q.one_minus() * a + b)
}

fn thm512_lhs(c: &Ctx, p: &Point, st: &mut S, start: usize) -> Res {
    c_series(c, st, start, 2, &c.y_sq(&p.x), |n, cen| {
        Ok(cen.c(n) * wc(&p.w, n)? / om(c, 2 * n as i64 + 1)?)
    })
}
fn thm512_printed_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    thm512_lhs(c, p, st, 1)
}
fn thm512_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    thm512_lhs(c, p, st, 0)
}
fn up_sq(c: &Ctx) -> (Vec<Scalar>, Vec<Scalar>) {
    let qsq = &c.q * &c.sq;
    (vec![c.sq.clone(), c.sq.clone(), -&c.sq], vec![qsq.clone(), -qsq])
}
fn thm512_printed_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let (up, lo) = up_sq(c);
    let z = -(p.x.square().mul_i64(4) / (&c.t * &c.sphi));
    let v = c.big(st, &up, &lo, &p.w, &z, SQ0)?;
    Ok(&p.x / &c.q.one_minus() * v)
}
fn thm512_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let (up, lo) = up_sq(c);
    let v = c.big(st, &up, &lo, &p.w, &c.y_sq(&p.x), SQ0)?;
    Ok(v / c.q.one_minus())
}

pub fn records() -> Vec<R> {
    vec![
        R::new("thm5.3", "R_alpha as a deformed 1Phi0", "Theorem 5.3",
            "sum_n {alpha n} u^C(n,2) x^n = 1Phi0(q^-alpha; -; q, w, -phi^(alpha-1) q^alpha x),  w = -u/t",
            general(r_alpha_args).alpha(-2.0, 2.0))
            .printed(thm53_l, thm53_r),
        R::new("thm5.4", "R_alpha through the product expansion", "Theorem 5.4",
            "R_alpha(x, u) = (q^-alpha;q)_inf sum_j q^(-alpha j)/(q;q)_j e_q(-phi^(alpha-1) q^(alpha+j) x, w),  alpha < 0",
            general(r_alpha_args).alpha(-2.0, -0.25))
            .printed(thm53_l, thm54_r),
        R::new("thm5.5", "Deformed analog of the order-1/2 series", "Theorem 5.5",
            "sum_n [2n n]_q (-1)^n w^C(n,2) X^n / ((-q;q)_n (-sqrt q;q)_n (1-sqrt(q)^(2n-1))) = -sqrt(-t)/((1-sqrt q) phi) 1Phi0(q^(-1/2); -; q, w, -phi^(-1/2) sqrt q x),  X = phi^(-3/2) sqrt(-t) x",
            general(args_half))
            .printed(thm55_l, thm55_printed_r)
            .corrected("coefficient -sqrt(-t)/((1-sqrt q) phi)", thm55_l, thm55_r),
        R::new("thm5.6", "Deformed analog of the central q-binomial generating function", "Theorem 5.6",
            "sum_n [2n n]_q w^C(n,2) / ((-sqrt q;q)_n (-q;q)_n) y^n = 1Phi0(sqrt q; -; q, w, y),  y = 4x/sqrt(-t phi)",
            general(args_lehmer))
            .printed(thm56_l, thm56_r),
        R::new("thm5.7", "q-integrated form with 1/(1-q^(n+1))", "Theorem 5.7",
            "sum_n c_n w^C(n,2) y^n / (1-q^(n+1)) = 1/(1-q) 2Phi1(sqrt q, q; q^2; q, w, y)",
            general(args_lehmer))
            .printed(thm57_l, thm57_r),
        R::new("thm5.8", "Series with 1/(1-q^n)", "Theorem 5.8",
            "sum_(n>=1) c_n w^C(n,2) y^n / (1-q^n) = 4(1-sqrt q) x/((1-q)^2 K) 3Phi2(q sqrt q, q, q; q^2, q^2; q, w, -4ux/(tK))",
            general(args_lehmer))
            .printed(thm58_l, thm58_r),
        R::new("thm5.9", "Series with 1/((1-q^n)(1-q^(n+1)))", "Theorem 5.9",
            "sum_(n>=1) c_n w^C(n,2) y^n / ((1-q^n)(1-q^(n+1))) = 4(1-sqrt q) x/((1-q)^3 (1+q) K) 3Phi2(q sqrt q, q, q; q^2, q^3; q, w, -4ux/(tK))",
            general(args_lehmer))
            .printed(thm59_l, thm59_printed_r)
            .alternative("proof", "denominator (1-q^(n+2)) against the displayed right side", thm59_proof_l, thm59_printed_r)
            .corrected("(1-q^(n+1)) with an extra 1/(1-q) on the right", thm59_l, thm59_r),
        R::new("thm5.10", "Series with (1-q^n)", "Theorem 5.10",
            "sum_(n>=1) c_n (1-q^n) w^C(n,2) y^n = 4(1-sqrt q) x/K 1Phi0(q sqrt q; -; q, w, -4ux/(tK))",
            general(args_lehmer))
            .printed(thm510_l, thm510_r),
        R::new("thm5.11", "Series with (1-q^n)^2", "Theorem 5.11",
            "sum_(n>=1) c_n (1-q^n)^2 w^C(n,2) y^n = 4(1-q)(1-sqrt q) x/K 1Phi0(q sqrt q; -; q, w, -4qux/(tK)) + 16 (sqrt q;q)_2 u x^2/(t^2 phi) 1Phi0(q^2 sqrt q; -; q, w, 4u^2 x/(t^2 K))",
            general(args_lehmer))
            .printed(thm511_l, thm511_printed_r)
            .corrected("factor (1-q) on the first term and argument +4u^2x/(t^2 K)", thm511_l, thm511_r),
        R::new("thm5.12", "Series in x^2 with 1/(1-q^(2n+1))", "Theorem 5.12",
            "sum_(n>=0) c_n w^C(n,2) Y^n / (1-q^(2n+1)) = 1/(1-q) 3Phi2(sqrt q, sqrt q, -sqrt q; q sqrt q, -q sqrt q; q, w, Y),  Y = 4x^2/K",
            general(args_lehmer_sq))
            .printed(thm512_printed_l, thm512_printed_r)
            .corrected("sum from n = 0, prefactor 1/(1-q), argument Y", thm512_l, thm512_r),
    ]
}
