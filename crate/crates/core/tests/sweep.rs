use std::time::Instant;

use g2forms::catalog::sweep_pairs;
use g2forms::constructor::sweep;

#[test]
fn every_positive_verdict_has_a_verified_certificate() {
    let t = Instant::now();
    let rows = sweep(&sweep_pairs()).unwrap();
    let mut bad = Vec::new();
    for r in &rows {
        match &r.built {
            Some(Ok(route)) => assert_eq!(Some(*route), r.verdict.route),
            Some(Err(e)) => bad.push(format!("{}+{}: {e}", r.g4, r.g3)),
            None => assert!(!r.verdict.exists),
        }
    }
    assert!(bad.is_empty(), "{} failures:\n{}", bad.len(), bad.join("\n"));
    assert!(t.elapsed().as_secs() < 120, "sweep took {:?}", t.elapsed());
}
