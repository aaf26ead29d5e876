use std::time::Instant;
fn main() {
    for name in powerwidth::suites::SUITES {
        let t = Instant::now();
        let r = powerwidth::suites::run_suite(name, 1).unwrap();
        let fails: Vec<_> = r.failures().collect();
        println!(
            "{name}: rows={} pass={} wall={:?}{}",
            r.rows.len(),
            r.passed(),
            t.elapsed(),
            if fails.is_empty() { String::new() } else { format!(" FIRST FAIL: {:?}", fails[0]) }
        );
    }
}
