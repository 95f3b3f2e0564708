//! q-derivative and Jackson integral on monomials, and the fundamental theorem.

use qlehmer::error::Result;
use qlehmer::numerics::{Precision, Scalar};
use qlehmer::qcalc::{jackson_derivative, q_derivative, q_integral_0, TruncationPolicy};

fn main() -> Result<()> {
    let prec = Precision::default();
    let policy = TruncationPolicy::for_precision(prec);
    let q = Scalar::parse("0.6", prec)?;
    let x = Scalar::parse("0.8", prec)?;

    for n in 1..5i64 {
        let f = |t: &Scalar| t.powi(n);
        let d = q_derivative(f, &x, &q)?;
        let expect = q.powi(n)?.one_minus() * x.powi(n - 1)?;
        let i = q_integral_0(f, &x, &q, &policy)?;
        let expect_i = x.powi(n + 1)? * q.one_minus() / q.powi(n + 1)?.one_minus();
        println!(
            "n={n}  D_q x^n = {}  (exact {})   int_0^x t^n = {}  (exact {})",
            d.to_display(20),
            expect.to_display(20),
            i.to_display(20),
            expect_i.to_display(20)
        );
    }

    // int_0^x D f = f(x) - f(0) with the normalised derivative
    let f = |t: &Scalar| Ok((t * &Scalar::parse("0.5", prec)?).exp());
    let df = |t: &Scalar| jackson_derivative(f, t, &q);
    let lhs = q_integral_0(df, &x, &q, &policy)?;
    let rhs = f(&x)? - f(&Scalar::zero(prec))?;
    println!("int_0^x D_q f = {}\nf(x) - f(0)   = {}", lhs.to_display(40), rhs.to_display(40));
    Ok(())
}
