//! (s,t)-Fibonacci numbers, fibonomials and Catalan analogues on the named families.

use qlehmer::numerics::{Precision, Scalar};
use qlehmer::stfib::{catalan_st, central_fibonomial, fib_binet, fib_recurrence, fibonomial, STFamily};

fn main() -> qlehmer::error::Result<()> {
    let prec = Precision::default();
    for fam in STFamily::NAMED {
        let p = fam.params(prec)?;
        let fibs: Vec<String> = (0..10).map(|n| fib_recurrence(n, &p).map(|v| v.to_display(20))).collect::<Result<_, _>>()?;
        println!("{:<11} q = {}", fam.name(), p.q.to_display(12));
        println!("  {{n}}        {}", fibs.join(" "));
        println!("  {{8 3}}      {}", fibonomial(8, 3, &p)?.to_display(20));
        println!("  {{2n n}}     {}", (0..6).map(|n| central_fibonomial(n, &p).map(|v| v.to_display(20))).collect::<Result<Vec<_>, _>>()?.join(" "));
        println!("  C_n        {}", (0..6).map(|n| catalan_st(n, &p).map(|v| v.to_display(20))).collect::<Result<Vec<_>, _>>()?.join(" "));
        println!("  {{1/2}}      {}", fib_binet(&Scalar::parse("1/2", prec)?, &p)?.to_display(20));
    }
    Ok(())
}
