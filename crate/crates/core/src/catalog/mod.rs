//! Executable identity catalog.
//!
//! Each [`IdentityRecord`] stores one or more LHS/RHS pairs ("variants") for a
//! displayed identity. The LHS is always the explicit sum built from
//! Pochhammer products and central q-binomials. The RHS goes through the
//! basic hypergeometric engine or infinite products. Where the displayed form
//! does not hold numerically, the record keeps it as the `printed` variant and
//! adds a `corrected` variant that becomes canonical.

mod ctx;
mod records;
mod sampler;
mod verify;

pub use records::convergent_family;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::Scalar;
use crate::stfib::STFamily;

pub use ctx::{Ctx, Stats};
pub use sampler::{sample_domain, zero_point};
pub use verify::{
    classify, verify, verify_all, verify_at, verify_records, verify_selected, PointReport, Status, VariantSummary,
    VerificationReport, VerifyOptions,
};

/// Total `x`-degree kept when a record has to be checked as a formal power series.
pub const FORMAL_DEGREE: u32 = 12;

/// One side of an identity evaluated at a point.
pub type Side = fn(&Ctx, &Point, &mut Stats) -> Result<Scalar>;

#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub x: Scalar,
    /// The deformation parameter of the `Phi` series.
    pub w: Scalar,
    /// `u` as it appears in the source identity (`-t w` for Lehmer-type records).
    pub u: Scalar,
    pub a: Scalar,
    pub alpha: Scalar,
    pub n: usize,
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    /// Half-integer powers of `q`, `phi` or `-t`; other families may pick a different branch.
    BranchCaveat,
    /// The displayed form fails numerically; a corrected variant is canonical.
    DiscrepantAsPrinted,
    /// The displayed right-hand side is a divergent series at the displayed argument.
    DivergentAsPrinted,
    /// Zero degrees of freedom: the sampler emits a single forced argument.
    FixedArgument,
    /// Checked as a truncated power series in `x` because the deformed series diverge.
    FormalSeries,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::BranchCaveat => "branch-caveat",
            Flag::DiscrepantAsPrinted => "discrepant-as-printed",
            Flag::DivergentAsPrinted => "divergent-as-printed",
            Flag::FixedArgument => "fixed-argument",
            Flag::FormalSeries => "formal-series",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub citation: &'static str,
    /// ASCII rendering of the identity that the canonical variant checks.
    pub display: &'static str,
}

#[derive(Clone, Debug)]
pub struct Variant {
    pub name: &'static str,
    pub note: &'static str,
    pub lhs: Side,
    pub rhs: Side,
}

/// How `w` and `u` are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `u` sampled in `[0.2, 0.9]` and used directly (`w = u`).
    Direct,
    /// `w` sampled in `[0.2, 0.9]`, `u = -t w`.
    General,
    /// `w` pinned by the list heading, `u = -t w`.
    Fixed(WValue),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WValue {
    One,
    Q,
    QSquared,
    SqrtQ,
    PhiSquared,
}

/// The series arguments `(c, k)`, meaning `c x^k`, that bound the radius of `x`.
pub type ArgList = fn(&Ctx, &Point) -> Result<Vec<(Scalar, u32)>>;

/// Rule for the main variable.
#[derive(Clone, Copy, Debug)]
pub enum XRule {
    /// The record has no free argument.
    None,
    /// Uniform in the complex disk of this radius.
    Disk(f64),
    /// Scaled so that every listed series argument `c x^k` has `|c x^k| <= 0.5`.
    Args(ArgList),
    /// A single forced value.
    Fixed(fn(&Ctx) -> Result<Scalar>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    X,
    W,
    U,
    A,
    Alpha,
    N,
    K,
}

#[derive(Clone, Debug)]
pub struct Sampler {
    pub regime: Regime,
    pub x: XRule,
    /// Radius of the complex disk for `a`.
    pub a: Option<f64>,
    /// Real interval for `alpha`.
    pub alpha: Option<(f64, f64)>,
    /// Inclusive upper bound for `n`.
    pub n: Option<usize>,
    /// Inclusive upper bound for `k`.
    pub k: Option<usize>,
    /// The record is the parent theorem evaluated at `q x`.
    pub x_to_qx: bool,
    /// Report `u` for [`Regime::Direct`] samplers.
    pub uses_u: bool,
}

impl Sampler {
    pub fn new(regime: Regime, x: XRule) -> Self {
        Sampler { regime, x, a: None, alpha: None, n: None, k: None, x_to_qx: false, uses_u: false }
    }

    pub fn a(mut self, radius: f64) -> Self {
        self.a = Some(radius);
        self
    }

    pub fn alpha(mut self, lo: f64, hi: f64) -> Self {
        self.alpha = Some((lo, hi));
        self
    }

    pub fn n(mut self, max: usize) -> Self {
        self.n = Some(max);
        self
    }

    pub fn k(mut self, max: usize) -> Self {
        self.k = Some(max);
        self
    }

    pub fn qx(mut self) -> Self {
        self.x_to_qx = true;
        self
    }

    pub fn with_u(mut self) -> Self {
        self.uses_u = true;
        self
    }

    /// Parameters worth reporting for this sampler.
    pub fn params(&self) -> Vec<Param> {
        let mut out = Vec::new();
        if !matches!(self.x, XRule::None) {
            out.push(Param::X);
        }
        if matches!(self.regime, Regime::Direct) {
            if self.uses_u {
                out.push(Param::U);
            }
        } else {
            out.push(Param::W);
            out.push(Param::U);
        }
        if self.a.is_some() {
            out.push(Param::A);
        }
        if self.alpha.is_some() {
            out.push(Param::Alpha);
        }
        if self.n.is_some() {
            out.push(Param::N);
        }
        if self.k.is_some() {
            out.push(Param::K);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub title: &'static str,
    pub anchor: Anchor,
    pub variants: Vec<Variant>,
    pub canonical: usize,
    pub sampler: Sampler,
    pub default_families: Vec<STFamily>,
    pub flags: Vec<Flag>,
    pub notes: &'static str,
    /// Switch to formal power series mode when `|w| >= 1`.
    pub formal_when_divergent: bool,
}

impl IdentityRecord {
    pub fn new(id: &'static str, title: &'static str, citation: &'static str, display: &'static str, sampler: Sampler) -> Self {
        IdentityRecord {
            id,
            title,
            anchor: Anchor { citation, display },
            variants: Vec::new(),
            canonical: 0,
            sampler,
            default_families: vec![STFamily::Mersenne],
            flags: Vec::new(),
            notes: "",
            formal_when_divergent: false,
        }
    }

    /// The form as displayed. Canonical unless a corrected variant follows.
    pub fn printed(mut self, lhs: Side, rhs: Side) -> Self {
        self.variants.push(Variant { name: "printed", note: "", lhs, rhs });
        self
    }

    /// A corrected form; becomes canonical and marks the record discrepant.
    pub fn corrected(mut self, note: &'static str, lhs: Side, rhs: Side) -> Self {
        self.variants.push(Variant { name: "corrected", note, lhs, rhs });
        self.canonical = self.variants.len() - 1;
        self.flag(Flag::DiscrepantAsPrinted)
    }

    /// Additional non-canonical variant.
    pub fn alternative(mut self, name: &'static str, note: &'static str, lhs: Side, rhs: Side) -> Self {
        self.variants.push(Variant { name, note, lhs, rhs });
        self
    }

    pub fn flag(mut self, f: Flag) -> Self {
        if !self.flags.contains(&f) {
            self.flags.push(f);
            self.flags.sort();
        }
        self
    }

    pub fn note(mut self, notes: &'static str) -> Self {
        self.notes = notes;
        self
    }

    pub fn also_on(mut self, family: STFamily) -> Self {
        self.default_families.push(family);
        self
    }

    pub fn formal(mut self) -> Self {
        self.formal_when_divergent = true;
        self
    }

    pub fn has_flag(&self, f: Flag) -> bool {
        self.flags.contains(&f)
    }

    pub fn canonical_variant(&self) -> &Variant {
        &self.variants[self.canonical]
    }
}

/// Every record, built once.
pub fn catalog() -> &'static [IdentityRecord] {
    static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// A fresh copy of the full catalog in display order.
pub fn build_catalog() -> Vec<IdentityRecord> {
    records::all()
}

pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    catalog()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_unique_and_anchored() {
        let cat = catalog();
        assert!(cat.len() >= 34);
        let mut seen = HashSet::new();
        for r in cat {
            assert!(seen.insert(r.id), "duplicate id {}", r.id);
            assert!(!r.anchor.citation.is_empty() && !r.anchor.display.is_empty(), "{}", r.id);
            assert!(!r.variants.is_empty(), "{}", r.id);
            assert!(r.canonical < r.variants.len());
        }
    }

    #[test]
    fn lookup_works() {
        let r = lookup("thm5.6").unwrap();
        assert!(r.anchor.display.contains("(-sqrt q;q)_n (-q;q)_n"));
        assert!(matches!(lookup("nonexistent"), Err(Error::UnknownIdentity(_))));
    }
}
