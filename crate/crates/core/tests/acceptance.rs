//! One pass/fail line per acceptance criterion. The order-720 Byott runs
//! (criterion 6) only run when `HGS_STRETCH=1`.

use std::io::Write;
use std::time::{Duration, Instant};

use hgs_core::report::{render_suite, CheckItem, Format, Status, SuiteReport};
use hgs_core::verify::{run_suite, Suite, SuiteOptions};

struct Outcome {
    number: u8,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn judge(
    number: u8,
    title: &'static str,
    report: &SuiteReport,
    elapsed: Duration,
    budget: Duration,
    select: impl Fn(&CheckItem) -> bool,
    required: usize,
) -> Outcome {
    let chosen: Vec<&CheckItem> = report.items.iter().filter(|i| select(i)).collect();
    let failed: Vec<&str> = chosen
        .iter()
        .filter(|i| i.status == Status::Fail)
        .map(|i| i.id.as_str())
        .collect();
    let in_time = elapsed <= budget;
    let passed = failed.is_empty() && chosen.len() >= required && in_time;
    Outcome {
        number,
        title,
        passed,
        detail: format!(
            "{} items, failed {:?}, {:.1}s of {}s budget",
            chosen.len(),
            failed,
            elapsed.as_secs_f64(),
            budget.as_secs()
        ),
    }
}

fn timed(suite: Suite, opts: &SuiteOptions) -> (SuiteReport, Duration) {
    let start = Instant::now();
    let r = run_suite(suite, opts);
    (r, start.elapsed())
}

#[test]
fn acceptance_criteria() {
    let opts = SuiteOptions::default();
    let mut outcomes = Vec::new();

    let (p720, t720) = timed(Suite::Order720, &opts);
    eprintln!("{}", render_suite(&p720, Format::Table));
    outcomes.push(judge(
        1,
        "order-720 values via the closed formulas",
        &p720,
        t720,
        Duration::from_secs(300),
        |i| i.id.ends_with("/formula-self") || i.id.ends_with("/formula-product"),
        4,
    ));

    let (p120, t120) = timed(Suite::Order120, &opts);
    eprintln!("{}", render_suite(&p120, Format::Table));
    outcomes.push(judge(
        2,
        "triple agreement at order 120 plus the fixed-point-free count",
        &p120,
        t120,
        Duration::from_secs(600),
        |_| true,
        7,
    ));

    let (small, tsmall) = timed(Suite::Small, &opts);
    eprintln!("{}", render_suite(&small, Format::Table));
    outcomes.push(judge(
        3,
        "brute force equals holomorph enumeration at orders 4, 6, 8",
        &small,
        tsmall,
        Duration::from_secs(900),
        |_| true,
        2 + 4 + 4 + 25,
    ));

    let (lem, tlem) = timed(Suite::Structural, &opts);
    eprintln!("{}", render_suite(&lem, Format::Table));
    outcomes.push(judge(
        4,
        "structural property suite",
        &lem,
        tlem,
        Duration::from_secs(600),
        |i| i.status != Status::Info,
        12,
    ));

    outcomes.push(judge(
        5,
        "screening and the Aut(A6) tower",
        &p720,
        t720,
        Duration::from_secs(300),
        |i| i.id.starts_with("screen(") || i.id == "aut6-tower",
        5,
    ));

    let stretch = std::env::var("HGS_STRETCH").map(|v| v == "1").unwrap_or(false);
    let mut skipped6 = false;
    if stretch {
        let sopts = SuiteOptions {
            stretch_optional: std::env::var("HGS_STRETCH_OPTIONAL").map(|v| v == "1").unwrap_or(false),
            ..SuiteOptions::default()
        };
        let (st, tst) = timed(Suite::Stretch720, &sopts);
        eprintln!("{}", render_suite(&st, Format::Table));
        outcomes.push(judge(
            6,
            "holomorph enumeration at order 720 with checkpoint and resume",
            &st,
            tst,
            Duration::from_secs(4 * 3600),
            |i| i.status != Status::Info,
            4,
        ));
    } else {
        skipped6 = true;
    }

    // written to the stdout handle directly so the lines show even when
    // the harness captures test output
    let mut lines = String::new();
    for o in &outcomes {
        lines.push_str(&format!(
            "criterion {} [PRIMARY] {}: {} ({})\n",
            o.number,
            o.title,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        ));
    }
    if skipped6 {
        lines.push_str("criterion 6 [PRIMARY] order-720 holomorph enumeration: SKIPPED (opt-in, set HGS_STRETCH=1)\n");
    }
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(lines.as_bytes());
    let _ = out.flush();
    // items outside the criteria, such as the fixed-point-free cross-checks,
    // must pass as well
    let extra_failures: Vec<&str> = [&p720, &p120, &small, &lem]
        .iter()
        .flat_map(|r| r.failures())
        .map(|i| i.id.as_str())
        .collect();
    assert!(extra_failures.is_empty(), "failing items: {extra_failures:?}");
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.passed).map(|o| o.number).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
