//! Verify the whole catalog on one family and print a table.
//!
//! ```text
//! cargo run --release --example catalog_report -- [family] [points]
//! ```

use std::time::Instant;

use qlehmer::catalog::{verify_all, VerifyOptions};
use qlehmer::stfib::STFamily;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let family = STFamily::parse(&args.next().unwrap_or_else(|| "mersenne".into()))?;
    let points: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);

    let opts = VerifyOptions { n_points: points, ..VerifyOptions::default() };
    let start = Instant::now();
    let reports = verify_all(&family, &opts)?;
    for r in &reports {
        let res = r
            .max_rel_residual
            .as_ref()
            .map(|v| format!("{:.3e}", v.to_f64()))
            .unwrap_or_else(|| "error".into());
        let others: Vec<String> = r
            .variants
            .iter()
            .filter(|v| !v.canonical)
            .map(|v| {
                let m = v.max_rel_residual.as_ref().map(|x| format!("{:.1e}", x.to_f64())).unwrap_or_else(|| "error".into());
                format!("{}={}", v.name, m)
            })
            .collect();
        let err = r.points.iter().find_map(|p| p.error.clone()).unwrap_or_default();
        println!(
            "{:<26} {:<18} {:<13} {:>10} terms={:<5} {:>7.1}ms {} {}",
            r.id,
            r.family,
            r.status.as_str(),
            res,
            r.max_terms_used,
            r.wall_time.as_secs_f64() * 1e3,
            others.join(" "),
            err
        );
    }
    let failed = reports.iter().filter(|r| !r.status.accepted()).count();
    println!("{} reports, {} failed, {:.2}s", reports.len(), failed, start.elapsed().as_secs_f64());
    Ok(())
}
