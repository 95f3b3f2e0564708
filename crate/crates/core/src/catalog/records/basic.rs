//! Pochhammer splittings, the deformed-series representations and reductions,
//! and the real-order fibonomial forms.

use super::common::qn;
use crate::catalog::ctx::{poch, Ctx, Stats, D0};
use crate::catalog::{IdentityRecord as R, Point, Regime, Sampler, XRule};
use crate::error::Result;
use crate::numerics::{binom2, Scalar};
use crate::stfib::{
    fib_binet, fibonomial_general, fibonomial_general_falling, fibonomial_half_central,
    fibonomial_half_central_literal, fibonomial_half_pochhammer, fibonomial_neg_half_central,
    fibonomial_neg_half_pochhammer,
};

type S = Stats;
type Res = Result<Scalar>;

fn nk() -> Sampler {
    Sampler::new(Regime::Direct, XRule::None).a(0.8).n(12).k(12)
}

fn disk_a() -> Sampler {
    Sampler::new(Regime::Direct, XRule::Disk(0.5)).a(0.8)
}

// Pochhammer identities

fn eq9_l(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(poch(&p.a, &c.q, p.n))
}
fn eq9_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let shifted = &p.a * &qn(c, p.n as i64)?;
    Ok(c.prod(st, &p.a, &c.q)? / c.prod(st, &shifted, &c.q)?)
}

fn eq10_l(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(poch(&p.a, &c.q, p.n + p.k))
}
fn eq10_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    let shifted = &p.a * &qn(c, p.n as i64)?;
    Ok(poch(&p.a, &c.q, p.n) * poch(&shifted, &c.q, p.k))
}

fn eq11_l(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(poch(&p.a, &c.q, 2 * p.n))
}
fn eq11_printed_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(poch(&p.a, &c.q.square(), p.n) * poch(&(&p.a * &c.q), &c.q, p.n))
}
fn eq11_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    let q2 = c.q.square();
    Ok(poch(&p.a, &q2, p.n) * poch(&(&p.a * &c.q), &q2, p.n))
}

fn eq12_l(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(poch(&p.a.square(), &c.q.square(), p.n))
}
fn eq12_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(poch(&p.a, &c.q, p.n) * poch(&-&p.a, &c.q, p.n))
}

fn eq13_l(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(c.q.one_minus() / qn(c, p.n as i64 + 1)?.one_minus())
}
fn eq13_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(poch(&c.q, &c.q, p.n) / poch(&c.q.square(), &c.q, p.n))
}

fn qbt_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.phi_q(st, std::slice::from_ref(&p.a), &[], &p.x, D0)
}
fn qbt_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(c.prod(st, &(&p.a * &p.x), &c.q)? / c.prod(st, &p.x, &c.q)?)
}

// Deformed series

fn thm31_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, std::slice::from_ref(&p.a), &[], &p.u, &p.x, D0)
}
fn thm31_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.theorem31(st, &p.a, &p.x, &p.u, &c.q)
}

fn cor32_printed_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.phi_q(st, std::slice::from_ref(&p.a), &[c.zero()], &p.x, D0)
}
fn cor32_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.phi_q(st, std::slice::from_ref(&p.a), &[c.zero()], &-&p.x, D0)
}
fn cor32_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let z = c.zero();
    let head = c.prod(st, &-&p.x, &c.q)? * c.prod(st, &p.a, &c.q)?;
    Ok(head * c.phi_q(st, &[z.clone(), z], &[-&p.x], &p.a, D0)?)
}

fn andrews_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.lsum(st, 0, 1, |n| {
        let e = binom2(n as i64 + 1);
        Ok(poch(&p.a, &c.q, n) * qn(c, e)? / poch(&c.q, &c.q, n))
    })
}
fn andrews_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(c.prod(st, &-&c.q, &c.q)? * c.prod(st, &(&p.a * &c.q), &c.q.square())?)
}

fn cor33_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.phi_q(st, std::slice::from_ref(&p.a), &[c.zero(), c.zero()], &(&c.q * &p.x), D0)
}
fn cor33_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let head = c.prod(st, &p.a, &c.q)?;
    let q2 = c.q.square();
    let mut inner = Stats::new();
    let sum = c.lsum(st, 0, 1, |j| {
        let z = &qn(c, j as i64 + 1)? * &p.x;
        let rr = c.big(&mut inner, &[c.zero()], &[], &q2, &z, D0)?;
        Ok(p.a.powi(j as i64)? / poch(&c.q, &c.q, j) * rr)
    })?;
    st.terms_used = st.terms_used.max(inner.terms_used);
    st.converged &= inner.converged;
    Ok(head * sum)
}

fn cor34_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let r = p.a.sqrt();
    c.phi_base(st, &[r.clone(), -r], &[-&c.sq, c.zero()], &c.sq, &-&p.x, D0)
}
fn cor34_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let head = c.prod(st, &p.a, &c.q)?;
    let mut inner = Stats::new();
    let sum = c.lsum(st, 0, 1, |j| {
        let z = -(&qn(c, j as i64)? * &p.x);
        let e = c.phi_base(&mut inner, &[c.zero()], &[-&c.sq], &c.sq, &z, D0)?;
        Ok(p.a.powi(j as i64)? / poch(&c.q, &c.q, j) * e)
    })?;
    st.terms_used = st.terms_used.max(inner.terms_used);
    st.converged &= inner.converged;
    Ok(head * sum)
}

// Reductions of r+1Phi_r at the special values of u, for 1Phi0(a) and 2Phi1(a, -a/2; a/2).

fn up_of(p: &Point, r: usize) -> Vec<Scalar> {
    if r == 0 {
        vec![p.a.clone()]
    } else {
        vec![p.a.clone(), -p.a.div_i64(2)]
    }
}

fn lo_of(p: &Point, r: usize) -> Vec<Scalar> {
    if r == 0 {
        vec![]
    } else {
        vec![p.a.div_i64(2)]
    }
}

fn euler_l<const R: usize>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &up_of(p, R), &lo_of(p, R), &c.q, &p.x, D0)
}
fn euler_r<const R: usize>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let mut lo = lo_of(p, R);
    lo.push(c.zero());
    c.phi_q(st, &up_of(p, R), &lo, &-&p.x, D0)
}

fn rr_l<const R: usize>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &up_of(p, R), &lo_of(p, R), &c.q.square(), &(&c.q * &p.x), D0)
}
fn rr_r<const R: usize>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let mut lo = lo_of(p, R);
    lo.extend([c.zero(), c.zero()]);
    c.phi_q(st, &up_of(p, R), &lo, &(&c.q * &p.x), D0)
}

fn split(v: &[Scalar]) -> Vec<Scalar> {
    v.iter()
        .flat_map(|a| {
            let r = a.sqrt();
            [r.clone(), -r]
        })
        .collect()
}

fn exton_l<const R: usize>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &up_of(p, R), &lo_of(p, R), &c.sq, &p.x, D0)
}
fn exton_r<const R: usize>(c: &Ctx, p: &Point, st: &mut S) -> Res {
    let up = split(&up_of(p, R));
    let mut lo = split(&lo_of(p, R));
    lo.extend([-&c.sq, c.zero()]);
    c.phi_base(st, &up, &lo, &c.sq, &-&p.x, D0)
}

fn qexp_small_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &[c.zero()], &[], &c.one(), &p.x, D0)
}
fn qexp_small_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    Ok(c.prod(st, &p.x, &c.q)?.recip())
}
fn qexp_big_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &[c.zero()], &[], &c.q, &p.x, D0)
}
fn qexp_big_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.prod(st, &-&p.x, &c.q)
}
fn qexp_zero_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &[c.zero()], &[], &c.zero(), &p.x, D0)
}
fn qexp_zero_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    Ok(c.one() + &p.x / &c.q.one_minus())
}
fn qexp_exton_l(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.big(st, &[c.zero()], &[], &c.sq, &p.x, D0)
}
fn qexp_exton_r(c: &Ctx, p: &Point, st: &mut S) -> Res {
    c.phi_base(st, &[c.zero()], &[-&c.sq], &c.sq, &-&p.x, D0)
}

/// `R_q(z) = e_q(q z, q^2)`
fn rogers_ramanujan(c: &Ctx, st: &mut S, z: &Scalar) -> Res {
    c.big(st, &[c.zero()], &[], &c.q.square(), &(&c.q * z), D0)
}
fn rr_first_l(c: &Ctx, _: &Point, st: &mut S) -> Res {
    rogers_ramanujan(c, st, &c.one())
}
fn rr_first_r(c: &Ctx, _: &Point, st: &mut S) -> Res {
    let q5 = qn(c, 5)?;
    Ok((c.prod(st, &c.q, &q5)? * c.prod(st, &qn(c, 4)?, &q5)?).recip())
}
fn rr_second_l(c: &Ctx, _: &Point, st: &mut S) -> Res {
    rogers_ramanujan(c, st, &c.q)
}
fn rr_second_r(c: &Ctx, _: &Point, st: &mut S) -> Res {
    let q5 = qn(c, 5)?;
    Ok((c.prod(st, &qn(c, 2)?, &q5)? * c.prod(st, &qn(c, 3)?, &q5)?).recip())
}

// Real-order fibonomials

fn general_l(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_general_falling(&p.alpha, p.k, &c.p)
}
fn general_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_general(&p.alpha, p.k, &c.p)
}
fn neg_index_l(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fib_binet(&-&p.alpha, &c.p)
}
fn neg_index_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    let scale = c.mt.pow(&-&p.alpha)?;
    Ok(-(scale * fib_binet(&p.alpha, &c.p)?))
}
fn half_falling(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_general_falling(&c.ratio(1, 2), p.k, &c.p)
}
fn neg_half_falling(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_general_falling(&c.ratio(-1, 2), p.k, &c.p)
}
fn eq27_printed_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_half_central_literal(p.k, &c.p)
}
fn eq27_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_half_central(p.k, &c.p)
}
fn eq28_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_half_pochhammer(p.k, &c.p)
}
fn eq29_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_neg_half_central(p.k, &c.p)
}
fn eq30_r(c: &Ctx, p: &Point, _: &mut S) -> Res {
    fibonomial_neg_half_pochhammer(p.k, &c.p)
}

pub fn records() -> Vec<R> {
    let fixed = || Sampler::new(Regime::Direct, XRule::None);
    let k10 = || Sampler::new(Regime::Direct, XRule::None).k(10);
    vec![
        R::new("sec2.1-eq9", "Finite product as a ratio of infinite products", "Section 2.1, Eq. (9)",
            "(a;q)_n = (a;q)_inf / (a q^n;q)_inf", nk())
            .printed(eq9_l, eq9_r),
        R::new("sec2.1-eq10", "Splitting (a;q)_(n+k)", "Section 2.1, Eq. (10)",
            "(a;q)_(n+k) = (a;q)_n (a q^n;q)_k", nk())
            .printed(eq10_l, eq10_r),
        R::new("sec2.1-eq11", "Even-length product in base q^2", "Section 2.1, Eq. (11)",
            "(a;q)_(2n) = (a;q^2)_n (a q;q^2)_n", nk())
            .printed(eq11_l, eq11_printed_r)
            .corrected("second factor needs base q^2", eq11_l, eq11_r),
        R::new("sec2.1-eq12", "Product at a^2 in base q^2", "Section 2.1, Eq. (12)",
            "(a^2;q^2)_n = (a;q)_n (-a;q)_n", nk())
            .printed(eq12_l, eq12_r),
        R::new("sec2.1-eq13", "Shifted q-factorial ratio", "Section 2.1, Eq. (13)",
            "(1-q)/(1-q^(n+1)) = (q;q)_n / (q^2;q)_n", nk())
            .printed(eq13_l, eq13_r),
        R::new("sec2.1-qbinomial", "q-binomial theorem", "Section 2.1, Eq. (14)",
            "1phi0(a; -; q, z) = (a z;q)_inf / (z;q)_inf", disk_a())
            .printed(qbt_l, qbt_r),
        R::new("thm3.1", "Product expansion of the deformed 1Phi0", "Theorem 3.1",
            "1Phi0(a; -; q, u, x) = (a;q)_inf sum_j a^j/(q;q)_j e_q(q^j x, u)", disk_a().with_u())
            .printed(thm31_l, thm31_r),
        R::new("cor3.2", "Euler case u = q", "Corollary 3.2",
            "1phi1(a; 0; q, -x) = (-x, a;q)_inf 2phi1(0, 0; -x; q, a)", disk_a())
            .printed(cor32_printed_l, cor32_r)
            .corrected("series argument is -x", cor32_l, cor32_r),
        R::new("andrews", "Andrews' identity", "Section 3, following Corollary 3.2",
            "sum_n (a;q)_n q^C(n+1,2) / (q;q)_n = (-q;q)_inf (a q;q^2)_inf",
            Sampler::new(Regime::Direct, XRule::None).a(0.8))
            .printed(andrews_l, andrews_r),
        R::new("cor3.3", "Rogers-Ramanujan case u = q^2", "Corollary 3.3",
            "1phi2(a; 0, 0; q, q x) = (a;q)_inf sum_j a^j/(q;q)_j R_q(q^j x)", disk_a())
            .printed(cor33_l, cor33_r),
        R::new("cor3.4", "Exton case u = sqrt q", "Corollary 3.4",
            "2phi2(sqrt a, -sqrt a; -sqrt q, 0; sqrt q, -x) = (a;q)_inf sum_j a^j/(q;q)_j 1phi1(0; -sqrt q; sqrt q, -q^j x)",
            disk_a())
            .printed(cor34_l, cor34_r),
        R::new("sec3-euler2-r0", "Euler-II reduction of 1Phi0", "Section 3, u = q",
            "1Phi0(a; -; q, q, z) = 1phi1(a; 0; q, -z)", disk_a())
            .printed(euler_l::<0>, euler_r::<0>),
        R::new("sec3-euler2-r1", "Euler-II reduction of 2Phi1", "Section 3, u = q",
            "2Phi1(a, -a/2; a/2; q, q, z) = 2phi2(a, -a/2; a/2, 0; q, -z)", disk_a())
            .printed(euler_l::<1>, euler_r::<1>),
        R::new("sec3-rr-r0", "Rogers-Ramanujan reduction of 1Phi0", "Section 3, u = q^2",
            "1Phi0(a; -; q, q^2, q z) = 1phi2(a; 0, 0; q, q z)", disk_a())
            .printed(rr_l::<0>, rr_r::<0>),
        R::new("sec3-rr-r1", "Rogers-Ramanujan reduction of 2Phi1", "Section 3, u = q^2",
            "2Phi1(a, -a/2; a/2; q, q^2, q z) = 2phi3(a, -a/2; a/2, 0, 0; q, q z)", disk_a())
            .printed(rr_l::<1>, rr_r::<1>),
        R::new("sec3-exton-r0", "Exton reduction of 1Phi0", "Section 3, u = sqrt q",
            "1Phi0(a; -; q, sqrt q, z) = 2phi2(sqrt a, -sqrt a; -sqrt q, 0; sqrt q, -z)", disk_a())
            .printed(exton_l::<0>, exton_r::<0>),
        R::new("sec3-exton-r1", "Exton reduction of 2Phi1", "Section 3, u = sqrt q",
            "2Phi1(a, -a/2; a/2; q, sqrt q, z) = 4phi4(+-sqrt a, +-sqrt(-a/2); +-sqrt(a/2), -sqrt q, 0; sqrt q, -z)", disk_a())
            .printed(exton_l::<1>, exton_r::<1>),
        R::new("sec3-qexp-small", "e_q(z, 1) is Euler's small q-exponential", "Section 3, u = 1",
            "e_q(z, 1) = 1 / (z;q)_inf", disk_a())
            .printed(qexp_small_l, qexp_small_r),
        R::new("sec3-qexp-big", "e_q(z, q) is Euler's big q-exponential", "Section 3, u = q",
            "e_q(z, q) = (-z;q)_inf", disk_a())
            .printed(qexp_big_l, qexp_big_r),
        R::new("sec3-qexp-zero", "e_q(z, 0) is linear", "Section 3, u = 0",
            "e_q(z, 0) = 1 + z/(1-q)", disk_a())
            .printed(qexp_zero_l, qexp_zero_r),
        R::new("sec3-qexp-exton", "e_q(z, sqrt q) is Exton's q-exponential", "Section 3, u = sqrt q",
            "e_q(z, sqrt q) = 1phi1(0; -sqrt q; sqrt q, -z)", disk_a())
            .printed(qexp_exton_l, qexp_exton_r),
        R::new("sec3-rogers-ramanujan-1", "First Rogers-Ramanujan identity", "Section 3, R_q(1)",
            "R_q(1) = sum q^(n^2)/(q;q)_n = 1/((q;q^5)_inf (q^4;q^5)_inf)", fixed())
            .printed(rr_first_l, rr_first_r),
        R::new("sec3-rogers-ramanujan-2", "Second Rogers-Ramanujan identity", "Section 3, R_q(q)",
            "R_q(q) = sum q^(n^2+n)/(q;q)_n = 1/((q^2;q^5)_inf (q^3;q^5)_inf)", fixed())
            .printed(rr_second_l, rr_second_r),
        R::new("sec4-general-order", "Real-order fibonomial as a q-Pochhammer quotient", "Section 4, Eq. (26)",
            "{alpha k} = (q^-alpha;q)_k/(q;q)_k (-phi^(alpha-1) q^alpha)^k (phi^2 q)^(-C(k,2))",
            k10().alpha(-2.5, 2.5))
            .printed(general_l, general_r),
        R::new("sec4-negative-index", "Negative-index law", "Section 4",
            "{-alpha} = -(-t)^(-alpha) {alpha}", fixed().alpha(0.25, 4.0))
            .printed(neg_index_l, neg_index_r),
        R::new("sec4-eq27", "{1/2 k} in central q-binomial form", "Section 4, Eq. (27)",
            "{1/2 k} = [2k k]_q sqrt(phi)^(2-3k) (-1)^(k+1) (-t)^(-(k-1)^2/2) (1-sqrt q) / ((-q;q)_k (-sqrt q;q)_k (1-sqrt(q)^(2k-1)))",
            k10())
            .printed(half_falling, eq27_printed_r)
            .corrected("phi exponent (2-3k)/2 and sign (-1)^(k+1)", half_falling, eq27_r),
        R::new("sec4-eq28", "{1/2 k} as a q-Pochhammer quotient", "Section 4, Eq. (28)",
            "{1/2 k} = (q^(-1/2);q)_k/(q;q)_k (-phi^(-1/2) sqrt q)^k (-t)^(-C(k,2))", k10())
            .printed(half_falling, eq28_r),
        R::new("sec4-eq29", "{-1/2 k} in central q-binomial form", "Section 4, Eq. (29)",
            "{-1/2 k} = (-1)^k [2k k]_q phi^(-k/2) (-t)^(-k^2/2) / ((-sqrt q;q)_k (-q;q)_k)", k10())
            .printed(neg_half_falling, eq29_r),
        R::new("sec4-eq30", "{-1/2 k} as a q-Pochhammer quotient", "Section 4, Eq. (30)",
            "{-1/2 k} = (-1)^k (-t)^(-k^2/2) (sqrt q;q)_k/(q;q)_k phi^(-k/2)", k10())
            .printed(neg_half_falling, eq30_r),
    ]
}
