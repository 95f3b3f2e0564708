//! Evaluation context shared by the record formulas.
//!
//! A [`Ctx`] carries the family constants and one side's truncation policy.
//! Every helper folds its truncation statistics into a [`Stats`], so a side
//! reports the largest term count it needed and whether all of its sums
//! converged.
//!
//! In formal mode each sum is cut at a fixed total degree in `x` instead of by
//! magnitude. A helper is told the degree of its first term and how much each
//! further term adds, and sums exactly the terms of degree `<= D`.

use crate::dbhs::{phi_big, r_alpha, theorem31_rhs, SeriesSpec, SeriesValue};
use crate::error::Result;
use crate::numerics::{Precision, Scalar};
use crate::qcalc::{qpochhammer, qpochhammer_inf_counted, TruncationPolicy};
use crate::stfib::STParams;

/// Degree bookkeeping for formal truncation: first term has degree `offset`,
/// each following term adds `step`.
#[derive(Clone, Copy, Debug)]
pub struct Deg {
    pub offset: u32,
    pub step: u32,
}

pub const D0: Deg = Deg { offset: 0, step: 1 };
pub const D1: Deg = Deg { offset: 1, step: 1 };
pub const D2: Deg = Deg { offset: 2, step: 1 };
pub const SQ0: Deg = Deg { offset: 0, step: 2 };

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub terms_used: usize,
    pub converged: bool,
}

impl Stats {
    pub fn new() -> Self {
        Stats { terms_used: 0, converged: true }
    }

    fn absorb(&mut self, v: &SeriesValue) {
        self.terms_used = self.terms_used.max(v.terms_used);
        self.converged &= v.converged;
    }
}

pub struct Ctx {
    pub p: STParams,
    pub prec: Precision,
    pub q: Scalar,
    pub sq: Scalar,
    pub phi: Scalar,
    pub sphi: Scalar,
    pub t: Scalar,
    pub mt: Scalar,
    /// `sqrt(-t)`
    pub smt: Scalar,
    /// `sqrt(-t phi)`
    pub k: Scalar,
    pub policy: TruncationPolicy,
    /// Total `x`-degree cut for formal power series checks.
    pub formal: Option<u32>,
}

impl Ctx {
    pub fn new(p: &STParams, policy: TruncationPolicy, formal: Option<u32>) -> Self {
        Ctx {
            prec: p.precision(),
            q: p.q.clone(),
            sq: p.sqrt_q(),
            phi: p.phi.clone(),
            sphi: p.sqrt_phi(),
            t: p.t.clone(),
            mt: p.minus_t(),
            smt: p.sqrt_minus_t(),
            k: p.k_scale(),
            p: p.clone(),
            policy,
            formal,
        }
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.prec)
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.prec)
    }

    pub fn int(&self, v: i64) -> Scalar {
        Scalar::from_i64(self.prec, v)
    }

    pub fn ratio(&self, n: i64, d: i64) -> Scalar {
        Scalar::ratio(self.prec, n, d)
    }

    /// `q^e` for a rational exponent `n/d`, principal branch.
    pub fn qpow(&self, n: i64, d: i64) -> Result<Scalar> {
        if d == 1 {
            return self.q.powi(n);
        }
        if d == 2 {
            return self.sq.powi(n);
        }
        self.q.pow(&self.ratio(n, d))
    }

    /// `(-1)^n * v`
    pub fn alt(&self, n: usize, v: Scalar) -> Scalar {
        if n.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }

    /// `y = 4x / sqrt(-t phi)`
    pub fn y(&self, x: &Scalar) -> Scalar {
        (x / &self.k).mul_i64(4)
    }

    /// `Y = 4x^2 / sqrt(-t phi)`
    pub fn y_sq(&self, x: &Scalar) -> Scalar {
        (x.square() / &self.k).mul_i64(4)
    }

    /// `phi^(-3/2) sqrt(-t) x`
    pub fn x_big(&self, x: &Scalar) -> Result<Scalar> {
        Ok(self.sphi.powi(-3)? * &self.smt * x)
    }

    fn budget(&self, deg: Deg) -> TruncationPolicy {
        match self.formal {
            None => self.policy.clone(),
            Some(d) => {
                let terms = if deg.offset > d {
                    0
                } else {
                    ((d - deg.offset) / deg.step.max(1)) as usize + 1
                };
                TruncationPolicy::fixed(self.prec, terms)
            }
        }
    }

    fn series_in(&self, st: &mut Stats, spec: SeriesSpec, z: &Scalar, deg: Deg) -> Result<Scalar> {
        let pol = self.budget(deg);
        if pol.fixed_terms == Some(0) {
            return Ok(self.zero());
        }
        let v = phi_big(&spec, z, &pol)?;
        st.absorb(&v);
        Ok(v.value)
    }

    /// Classical `rphi_s` in base `q`.
    pub fn phi_q(&self, st: &mut Stats, up: &[Scalar], lo: &[Scalar], z: &Scalar, deg: Deg) -> Result<Scalar> {
        self.series_in(st, SeriesSpec::classical(up.to_vec(), lo.to_vec(), self.q.clone()), z, deg)
    }

    /// Classical `rphi_s` in an arbitrary base.
    pub fn phi_base(&self, st: &mut Stats, up: &[Scalar], lo: &[Scalar], base: &Scalar, z: &Scalar, deg: Deg) -> Result<Scalar> {
        self.series_in(st, SeriesSpec::classical(up.to_vec(), lo.to_vec(), base.clone()), z, deg)
    }

    /// Deformed `rPhi_s(up; lo; q, w, z)`.
    pub fn big(&self, st: &mut Stats, up: &[Scalar], lo: &[Scalar], w: &Scalar, z: &Scalar, deg: Deg) -> Result<Scalar> {
        self.series_in(st, SeriesSpec::new(up.to_vec(), lo.to_vec(), self.q.clone(), w.clone()), z, deg)
    }

    /// `(a; base)_inf`.
    pub fn prod(&self, st: &mut Stats, a: &Scalar, base: &Scalar) -> Result<Scalar> {
        let (v, used) = qpochhammer_inf_counted(a, base, &self.policy)?;
        st.terms_used = st.terms_used.max(used);
        Ok(v)
    }

    pub fn r_alpha(&self, st: &mut Stats, alpha: &Scalar, x: &Scalar, u: &Scalar) -> Result<Scalar> {
        let v = r_alpha(alpha, x, u, &self.p, &self.budget(D0))?;
        st.absorb(&v);
        Ok(v.value)
    }

    pub fn theorem31(&self, st: &mut Stats, a: &Scalar, x: &Scalar, u: &Scalar, base: &Scalar) -> Result<Scalar> {
        let v = theorem31_rhs(a, x, u, base, &self.policy)?;
        st.absorb(&v);
        Ok(v.value)
    }

    /// `sum_{n >= start} f(n)` with the context's stopping rule; in formal mode
    /// term `n` has degree `n * step` and the sum keeps degrees `<= D`.
    pub fn lsum<F>(&self, st: &mut Stats, start: usize, step: u32, mut f: F) -> Result<Scalar>
    where
        F: FnMut(usize) -> Result<Scalar>,
    {
        let mut sum = self.zero();
        if let Some(d) = self.formal {
            let last = (d / step.max(1)) as usize;
            for n in start..=last {
                sum += f(n)?;
            }
            st.terms_used = st.terms_used.max((last + 1).saturating_sub(start));
            return Ok(sum);
        }
        let mut stop = self.policy.stopper();
        for (count, n) in (start..start + stop.budget()).enumerate() {
            let term = f(n)?;
            sum += &term;
            if stop.observe(count + 1, &term.abs(), &sum.abs()) {
                st.terms_used = st.terms_used.max(count + 1);
                return Ok(sum);
            }
        }
        st.terms_used = st.terms_used.max(stop.budget());
        st.converged = false;
        Ok(sum)
    }

    /// Fresh table of central q-binomial ingredients.
    pub fn central(&self) -> Central {
        Central::new(self)
    }
}

/// Running q-Pochhammer products behind `[2n n]_q` and
/// `c_n = [2n n]_q / ((-sqrt q; q)_n (-q; q)_n)`, extended on demand.
pub struct Central {
    q: Scalar,
    sq: Scalar,
    /// `(q; q)_m` for `m <= 2n`
    qq: Vec<Scalar>,
    /// `(-q; q)_n`
    mq: Vec<Scalar>,
    /// `(-sqrt q; q)_n`
    msq: Vec<Scalar>,
}

impl Central {
    fn new(ctx: &Ctx) -> Self {
        let one = ctx.one();
        Central {
            q: ctx.q.clone(),
            sq: ctx.sq.clone(),
            qq: vec![one.clone()],
            mq: vec![one.clone()],
            msq: vec![one],
        }
    }

    fn grow(&mut self, n: usize) {
        while self.qq.len() <= 2 * n {
            let m = self.qq.len();
            let f = self.q.powi(m as i64).expect("positive power").one_minus();
            let next = &self.qq[m - 1] * &f;
            self.qq.push(next);
        }
        while self.mq.len() <= n {
            let m = self.mq.len() - 1;
            let qm = self.q.powi(m as i64).expect("positive power");
            let a = &self.mq[m] * &(-(&self.q * &qm)).one_minus();
            let b = &self.msq[m] * &(-(&self.sq * &qm)).one_minus();
            self.mq.push(a);
            self.msq.push(b);
        }
    }

    /// `[2n n]_q`
    pub fn binom(&mut self, n: usize) -> Scalar {
        self.grow(n);
        &self.qq[2 * n] / &self.qq[n].square()
    }

    /// `(-q; q)_n (-sqrt q; q)_n`
    pub fn denom(&mut self, n: usize) -> Scalar {
        self.grow(n);
        &self.mq[n] * &self.msq[n]
    }

    /// `c_n = [2n n]_q / ((-sqrt q; q)_n (-q; q)_n)`
    pub fn c(&mut self, n: usize) -> Scalar {
        self.binom(n) / self.denom(n)
    }
}

/// Finite `(a; q)_n`, re-exported for record formulas.
pub fn poch(a: &Scalar, q: &Scalar, n: usize) -> Scalar {
    qpochhammer(a, q, n)
}
