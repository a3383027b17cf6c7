use kklab::suites::{run, Suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig { timings: true, ..Default::default() };
    let report = run(Suite::All, &cfg);
    for r in report.records.iter().filter(|r| r.id.ends_with(".timing")) {
        println!("{}: {}", r.id, r.note.as_deref().unwrap_or(""));
    }
    println!("{} passed, {} failed", report.passed, report.failed);
}
