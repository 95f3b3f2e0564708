//! Residual checks over sampled points.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use rug::Float;
use serde::Serialize;

use super::ctx::{Ctx, Stats};
use super::sampler::{fixed_w, sample_with};
use super::{catalog, lookup, Flag, IdentityRecord, Param, Point, Regime, Side, FORMAL_DEGREE};
use crate::error::{Error, Result};
use crate::numerics::{rel_residual, Precision, Scalar};
use crate::qcalc::TruncationPolicy;
use crate::stfib::{STFamily, STParams};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n_points: usize,
    pub seed: u64,
    pub tol: f64,
    pub precision: Precision,
    pub lhs_policy: TruncationPolicy,
    pub rhs_policy: TruncationPolicy,
}

impl VerifyOptions {
    pub fn new(precision: Precision) -> Self {
        let policy = TruncationPolicy::for_precision(precision);
        VerifyOptions {
            n_points: 5,
            seed: 1,
            tol: 1e-25,
            precision,
            lhs_policy: policy.clone(),
            rhs_policy: policy,
        }
    }

    pub fn with_policy(mut self, policy: TruncationPolicy) -> Self {
        self.lhs_policy = policy.clone();
        self.rhs_policy = policy;
        self
    }
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions::new(Precision::default())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointReport {
    pub params: Vec<(String, Scalar)>,
    pub lhs: Option<Scalar>,
    pub rhs: Option<Scalar>,
    pub abs_residual: Option<Float>,
    pub rel_residual: Option<Float>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub converged: bool,
    pub error: Option<String>,
}

impl PointReport {
    pub fn ok(&self, tol: f64) -> bool {
        self.converged && self.rel_residual.as_ref().is_some_and(|r| *r <= tol)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VariantSummary {
    pub name: &'static str,
    pub note: &'static str,
    pub canonical: bool,
    /// `None` when some point failed to evaluate.
    pub max_rel_residual: Option<Float>,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BranchCaveat,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::BranchCaveat => "branch-caveat",
        }
    }

    /// Counts toward a successful run.
    pub fn accepted(self) -> bool {
        !matches!(self, Status::Fail)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub id: &'static str,
    pub family: String,
    pub flags: Vec<Flag>,
    /// Points of the canonical variant.
    pub points: Vec<PointReport>,
    pub max_rel_residual: Option<Float>,
    pub pass: bool,
    pub status: Status,
    pub variants: Vec<VariantSummary>,
    pub max_terms_used: usize,
    pub tolerance: f64,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn variant(&self, name: &str) -> Option<&VariantSummary> {
        self.variants.iter().find(|v| v.name == name)
    }
}

fn param_value(p: &Point, which: Param) -> (String, Scalar) {
    let name = match which {
        Param::X => "x",
        Param::W => "w",
        Param::U => "u",
        Param::A => "a",
        Param::Alpha => "alpha",
        Param::N => "n",
        Param::K => "k",
    };
    let prec = p.x.precision();
    let v = match which {
        Param::X => p.x.clone(),
        Param::W => p.w.clone(),
        Param::U => p.u.clone(),
        Param::A => p.a.clone(),
        Param::Alpha => p.alpha.clone(),
        Param::N => Scalar::from_i64(prec, p.n as i64),
        Param::K => Scalar::from_i64(prec, p.k as i64),
    };
    (name.to_string(), v)
}

fn point_params(rec: &IdentityRecord, params: &STParams, p: &Point) -> Vec<(String, Scalar)> {
    let mut out = vec![("s".to_string(), params.s.clone()), ("t".to_string(), params.t.clone())];
    for which in rec.sampler.params() {
        out.push(param_value(p, which));
    }
    if rec.sampler.x_to_qx {
        out.push(("x_theorem".to_string(), &params.q * &p.x));
    }
    out
}

fn eval_side(side: Side, params: &STParams, policy: &TruncationPolicy, formal: Option<u32>, p: &Point) -> (Result<Scalar>, Stats) {
    let ctx = Ctx::new(params, policy.clone(), formal);
    let mut st = Stats::new();
    let v = side(&ctx, p, &mut st);
    (v, st)
}

fn eval_point(rec: &IdentityRecord, vi: usize, params: &STParams, opts: &VerifyOptions, formal: Option<u32>, p: &Point) -> PointReport {
    let var = &rec.variants[vi];
    let (l, ls) = eval_side(var.lhs, params, &opts.lhs_policy, formal, p);
    let (r, rs) = eval_side(var.rhs, params, &opts.rhs_policy, formal, p);
    let mut report = PointReport {
        params: point_params(rec, params, p),
        lhs: None,
        rhs: None,
        abs_residual: None,
        rel_residual: None,
        lhs_terms: ls.terms_used,
        rhs_terms: rs.terms_used,
        converged: ls.converged && rs.converged,
        error: None,
    };
    match (l, r) {
        (Ok(l), Ok(r)) => {
            if !(l.is_finite() && r.is_finite()) {
                report.error = Some("non-finite value".to_string());
            } else {
                report.abs_residual = Some((&l - &r).abs());
                report.rel_residual = Some(rel_residual(&l, &r));
            }
            if !report.converged {
                report.error = Some("series did not converge within the term budget".to_string());
            }
            report.lhs = Some(l);
            report.rhs = Some(r);
        }
        (l, r) => {
            let mut msgs = Vec::new();
            if let Err(e) = &l {
                msgs.push(format!("lhs: {e}"));
            }
            if let Err(e) = &r {
                msgs.push(format!("rhs: {e}"));
            }
            report.lhs = l.ok();
            report.rhs = r.ok();
            report.converged = false;
            report.error = Some(msgs.join("; "));
        }
    }
    report
}

fn max_residual(points: &[PointReport]) -> Option<Float> {
    let mut best: Option<Float> = None;
    for p in points {
        let r = p.rel_residual.as_ref()?;
        best = Some(match best {
            Some(b) if b >= *r => b,
            _ => r.clone(),
        });
    }
    best
}

/// Whether `rec` runs in formal mode on these parameters.
pub(crate) fn formal_degree(rec: &IdentityRecord, params: &STParams) -> Result<Option<u32>> {
    if !rec.formal_when_divergent {
        return Ok(None);
    }
    let Regime::Fixed(w) = rec.sampler.regime else {
        return Ok(None);
    };
    let ctx = Ctx::new(params, TruncationPolicy::for_precision(params.precision()), None);
    let w = fixed_w(&ctx, w)?;
    Ok((w.abs_f64() >= 1.0).then_some(FORMAL_DEGREE))
}

fn check_family(params: &STParams) -> Result<()> {
    if params.degenerate || params.q.abs_f64() >= 1.0 - 1e-12 {
        return Err(Error::Domain(format!(
            "family needs |q| < 1, got q = {}",
            params.q.to_display(12)
        )));
    }
    Ok(())
}

/// Check one record on one family.
pub fn verify_at(rec: &IdentityRecord, family: &STFamily, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = family.params(opts.precision)?;
    check_family(&params)?;
    let formal = formal_degree(rec, &params)?;
    let points = sample_with(rec, &params, opts.n_points, opts.seed, family)?;

    let mut flags = rec.flags.clone();
    if formal.is_some() {
        flags.push(Flag::FormalSeries);
        flags.sort();
    }
    let mut variants = Vec::new();
    let mut canonical_points = Vec::new();
    let mut max_terms = 0;
    for vi in 0..rec.variants.len() {
        let reports: Vec<PointReport> = points
            .iter()
            .map(|p| eval_point(rec, vi, &params, opts, formal, p))
            .collect();
        let pass = reports.iter().all(|p| p.ok(opts.tol));
        for r in &reports {
            max_terms = max_terms.max(r.lhs_terms).max(r.rhs_terms);
        }
        let v = &rec.variants[vi];
        variants.push(VariantSummary {
            name: v.name,
            note: v.note,
            canonical: vi == rec.canonical,
            max_rel_residual: max_residual(&reports),
            pass,
        });
        if vi == rec.canonical {
            canonical_points = reports;
        }
    }
    let canon = &variants[rec.canonical];
    let pass = canon.pass;
    Ok(VerificationReport {
        id: rec.id,
        family: family.name(),
        flags,
        max_rel_residual: canon.max_rel_residual.clone(),
        points: canonical_points,
        pass,
        status: if pass { Status::Pass } else { Status::Fail },
        variants,
        max_terms_used: max_terms,
        tolerance: opts.tol,
        wall_time: start.elapsed(),
    })
}

/// Single record, single family, one policy for both sides.
pub fn verify(id: &str, family: &STFamily, n_points: usize, seed: u64, tol: f64, policy: &TruncationPolicy) -> Result<VerificationReport> {
    let rec = lookup(id)?;
    let prec = Precision::new(policy.rel_eps.prec())?;
    let opts = VerifyOptions {
        n_points,
        seed,
        tol,
        precision: prec,
        lhs_policy: policy.clone(),
        rhs_policy: policy.clone(),
    };
    verify_at(rec, family, &opts)
}

/// Failing reports of branch-sensitive records are downgraded to
/// [`Status::BranchCaveat`] when the same record passes on mersenne.
pub fn classify(reports: &mut [VerificationReport]) {
    let mersenne = STFamily::Mersenne.name();
    let passed_on_mersenne: Vec<&'static str> = reports
        .iter()
        .filter(|r| r.family == mersenne && r.pass)
        .map(|r| r.id)
        .collect();
    for r in reports.iter_mut() {
        r.status = if r.pass {
            Status::Pass
        } else if r.flags.contains(&Flag::BranchCaveat) && r.family != mersenne && passed_on_mersenne.contains(&r.id) {
            Status::BranchCaveat
        } else {
            Status::Fail
        };
    }
}

/// Run `records` on their default families plus `family`. A family that
/// cannot be used (for instance `|q| >= 1`) yields an error for the whole run.
pub fn verify_records(records: &[IdentityRecord], family: &STFamily, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let mut jobs = Vec::new();
    for rec in records {
        let mut fams = rec.default_families.clone();
        if !fams.contains(family) {
            fams.push(family.clone());
        }
        for f in fams {
            jobs.push((rec, f));
        }
    }
    let results: Vec<Result<VerificationReport>> = jobs.par_iter().map(|(rec, f)| verify_at(rec, f, opts)).collect();
    let mut reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    classify(&mut reports);
    Ok(reports)
}

pub fn verify_all(family: &STFamily, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    verify_records(catalog(), family, opts)
}

pub fn verify_selected(ids: &[String], family: &STFamily, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let recs = ids.iter().map(|id| lookup(id).cloned()).collect::<Result<Vec<_>>>()?;
    verify_records(&recs, family, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm56_passes() {
        let policy = TruncationPolicy::default();
        let r = verify("thm5.6", &STFamily::Mersenne, 5, 1, 1e-25, &policy).unwrap();
        assert!(r.pass, "{:?}", r.max_rel_residual);
        assert_eq!(r.points.len(), 5);
    }

    #[test]
    fn unknown_and_bad_family() {
        let policy = TruncationPolicy::default();
        assert!(matches!(
            verify("nope", &STFamily::Mersenne, 1, 1, 1e-25, &policy),
            Err(Error::UnknownIdentity(_))
        ));
        let bad = STFamily::custom("1", "-2");
        assert!(verify("thm5.6", &bad, 1, 1, 1e-25, &policy).is_err());
    }

    #[test]
    fn empty_catalog() {
        let out = verify_records(&[], &STFamily::Mersenne, &VerifyOptions::default()).unwrap();
        assert!(out.is_empty());
    }
}
