//! Evaluate both sides of one catalog identity at sampled points.
//!
//! ```text
//! cargo run --example lehmer_identity -- [id] [family]
//! ```

use qlehmer::catalog::{lookup, sample_domain, Ctx, Stats};
use qlehmer::numerics::Precision;
use qlehmer::qcalc::TruncationPolicy;
use qlehmer::stfib::STFamily;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "thm5.6".into());
    let family = STFamily::parse(&args.next().unwrap_or_else(|| "mersenne".into()))?;
    let prec = Precision::default();

    let rec = lookup(&id)?;
    println!("{}  {}\n  {}\n  {}", rec.id, rec.title, rec.anchor.citation, rec.anchor.display);
    let params = family.params(prec)?;
    let ctx = Ctx::new(&params, TruncationPolicy::for_precision(prec), None);
    for v in &rec.variants {
        println!("variant {} {}", v.name, v.note);
        for p in sample_domain(rec, &family, 3, 7, prec)? {
            let (mut ls, mut rs) = (Stats::new(), Stats::new());
            let l = (v.lhs)(&ctx, &p, &mut ls)?;
            let r = (v.rhs)(&ctx, &p, &mut rs)?;
            println!(
                "  x = {:<28} lhs = {:<40} rhs = {:<40} ({} / {} terms)",
                p.x.to_display(12),
                l.to_display(30),
                r.to_display(30),
                ls.terms_used,
                rs.terms_used
            );
        }
    }
    Ok(())
}
