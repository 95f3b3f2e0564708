//! q-Pochhammer symbols and the q-binomial theorem.

use qlehmer::dbhs::phi_classic;
use qlehmer::numerics::{Precision, Scalar};
use qlehmer::qcalc::{qbinomial, qpochhammer, qpochhammer_inf, TruncationPolicy};

fn main() -> qlehmer::error::Result<()> {
    let prec = Precision::default();
    let policy = TruncationPolicy::for_precision(prec);
    let q = Scalar::parse("1/2", prec)?;
    let a = Scalar::parse("0.3", prec)?;

    for n in [0, 1, 5, 20] {
        println!("(a;q)_{n:<3} = {}", qpochhammer(&a, &q, n).to_display(30));
    }
    println!("(a;q)_inf  = {}", qpochhammer_inf(&a, &q, &policy)?.to_display(30));
    println!("[6 3]_q    = {}", qbinomial(6, 3, &q)?.to_display(30));

    // 1phi0(a; -; q, z) = (az;q)_inf / (z;q)_inf
    let z = Scalar::parse("0.4-0.2i", prec)?;
    let series = phi_classic(std::slice::from_ref(&a), &[], &q, &z, &policy)?;
    let product = qpochhammer_inf(&(&a * &z), &q, &policy)? / qpochhammer_inf(&z, &q, &policy)?;
    println!("1phi0      = {}  ({} terms)", series.value.to_display(30), series.terms_used);
    println!("product    = {}", product.to_display(30));
    Ok(())
}
