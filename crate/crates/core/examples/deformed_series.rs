//! The deformed series rPhi_s and the four named q-exponentials it interpolates.

use qlehmer::dbhs::{deformed_qexp, named_qexp, phi_big, NamedQExp, SeriesSpec};
use qlehmer::numerics::{Precision, Scalar};
use qlehmer::qcalc::TruncationPolicy;

fn main() -> qlehmer::error::Result<()> {
    let prec = Precision::default();
    let policy = TruncationPolicy::for_precision(prec);
    let q = Scalar::parse("1/2", prec)?;
    let z = Scalar::parse("0.7", prec)?;

    for (name, kind) in [
        ("e_q", NamedQExp::EulerSmall),
        ("E_q", NamedQExp::EulerBig),
        ("R_q", NamedQExp::RogersRamanujan),
        ("Exton", NamedQExp::Exton),
    ] {
        let v = named_qexp(kind, &z, &q, &policy)?;
        println!("{name:<6} {}  ({} terms)", v.value.to_display(30), v.terms_used);
    }

    // e_q(z, u) for u sliding from 0 to 1
    for u in ["0", "0.25", "0.5", "0.75", "1"] {
        let v = deformed_qexp(&z, &Scalar::parse(u, prec)?, &q, &policy)?;
        println!("e_q(z, {u:<4}) = {}", v.value.to_display(30));
    }

    let spec = SeriesSpec::new(
        vec![Scalar::parse("0.3", prec)?, Scalar::parse("-0.2", prec)?],
        vec![Scalar::parse("0.6", prec)?],
        q.clone(),
        Scalar::parse("0.8", prec)?,
    );
    let v = phi_big(&spec, &z, &policy)?;
    println!("2Phi1(0.3, -0.2; 0.6; q, 0.8, z) = {}  converged={}", v.value.to_display(30), v.converged);
    Ok(())
}
