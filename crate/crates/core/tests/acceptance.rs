//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p isc-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use isc_core::closed_form::{mu_closed, wiener_closed, wiener_family};
use isc_core::cuts::{
    cut_signature, geometric_cuts, geometric_partition, table_cuts, theta_star_partition,
    wiener_from_cuts,
};
use isc_core::distance::{mu_from_wiener, wiener_bfs};
use isc_core::lattice::build_isc;
use isc_core::params::{edge_count, vertex_count};
use isc_core::{CaseKind, Family, IscParams, SquareCellGraph};
use num_bigint::BigInt;
use num_rational::BigRational;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(p: i64, q: i64, m: i64, n: i64) -> IscParams {
    IscParams::new(p, q, m, n).expect("valid tuple")
}

/// Criterion 1: exact small anchors by all four methods.
fn small_anchors() -> Check {
    let anchors = [
        (params(1, 1, 1, 1), 8, (4, 3)),
        (params(2, 2, 1, 2), 25, (5, 3)),
        (params(2, 2, 1, 4), 318, (53, 20)),
    ];
    for (g, w, (a, b)) in anchors {
        let expected = BigInt::from(w);
        let graph = build_isc(&g);
        let values = [
            ("bfs", wiener_bfs(&graph).map_err(|e| e.to_string())?.0),
            ("cuts", wiener_from_cuts(&geometric_cuts(&graph))),
            (
                "tables",
                wiener_from_cuts(&table_cuts(&g).map_err(|e| e.to_string())?),
            ),
            ("closed", wiener_closed(&g).map_err(|e| e.to_string())?),
        ];
        for (name, value) in &values {
            ensure(*value == expected, || {
                format!("{g}: {name} gave {value}, expected {w}")
            })?;
        }
        let mu = BigRational::new(a.into(), b.into());
        let from_w = mu_from_wiener(&expected, &vertex_count(&g)).map_err(|e| e.to_string())?;
        let closed = mu_closed(&g).map_err(|e| e.to_string())?;
        ensure(from_w == mu && closed == mu, || {
            format!("{g}: mu {from_w} / {closed}, expected {mu}")
        })?;
    }
    Ok("W = 8, 25, 318 and mu = 4/3, 5/3, 53/20 by bfs, cuts, tables, closed".into())
}

/// Criterion 2: vertex/edge formulas and the cell identity on the full sweep.
fn structural_formulas() -> Check {
    let mut tuples = 0;
    for g in IscParams::sweep(14, 6) {
        let graph = build_isc(&g);
        ensure(
            BigInt::from(graph.vertex_count()) == vertex_count(&g),
            || {
                format!(
                    "{g}: |V| = {} vs formula {}",
                    graph.vertex_count(),
                    vertex_count(&g)
                )
            },
        )?;
        ensure(BigInt::from(graph.edge_count()) == edge_count(&g), || {
            format!(
                "{g}: |E| = {} vs formula {}",
                graph.edge_count(),
                edge_count(&g)
            )
        })?;
        let cells = graph.unit_cells();
        ensure(
            graph.edge_count() + 1 - graph.vertex_count() == cells.len(),
            || format!("{g}: |E| - |V| + 1 != {} cells", cells.len()),
        )?;
        ensure(
            cells.iter().all(|&c| graph.cell_edges_present(c) == 4),
            || format!("{g}: a unit cell lacks an edge"),
        )?;
        tuples += 1;
    }
    Ok(format!("{tuples} tuples (n <= 14, m <= 6)"))
}

/// Criterion 3: BFS = geometric cuts = table cuts = closed form, and
/// mu_closed = 2W / (N (N - 1)).
fn oracle_equivalence() -> Check {
    let mut per_case = [0usize; 3];
    for g in IscParams::sweep(14, 6) {
        let graph = build_isc(&g);
        let w = wiener_bfs(&graph).map_err(|e| e.to_string())?.0;
        let geometric = wiener_from_cuts(&geometric_cuts(&graph));
        let tables = wiener_from_cuts(&table_cuts(&g).map_err(|e| e.to_string())?);
        let closed = wiener_closed(&g).map_err(|e| e.to_string())?;
        ensure(geometric == w && tables == w && closed == w, || {
            format!("{g}: bfs {w}, cuts {geometric}, tables {tables}, closed {closed}")
        })?;
        let mu = mu_from_wiener(&w, &vertex_count(&g)).map_err(|e| e.to_string())?;
        let mu_c = mu_closed(&g).map_err(|e| e.to_string())?;
        ensure(mu == mu_c, || format!("{g}: mu {mu} vs closed {mu_c}"))?;
        per_case[g.case().number() as usize - 1] += 1;
    }
    let total: usize = per_case.iter().sum();
    ensure(total > 300, || format!("only {total} tuples"))?;
    ensure(per_case.iter().all(|&c| c > 0), || {
        format!("case counts {per_case:?}")
    })?;
    Ok(format!(
        "{total} tuples (case1 {}, case2 {}, case3 {})",
        per_case[0], per_case[1], per_case[2]
    ))
}

/// Criterion 4: Θ* partition equals the strip partition; two components per class.
fn theta_star() -> Check {
    let mut tuples = 0;
    let mut classes = 0;
    for g in IscParams::sweep(10, 4) {
        let graph = build_isc(&g);
        let theta = theta_star_partition(&graph).map_err(|e| format!("{g}: {e}"))?;
        ensure(theta == geometric_partition(&graph), || {
            format!("{g}: Θ* partition differs from strip partition")
        })?;
        ensure(theta.covers_exactly(&graph.edges()), || {
            format!("{g}: not a partition of E")
        })?;
        for orders in theta.component_orders(&graph) {
            ensure(orders.len() == 2, || {
                format!("{g}: class leaves {} components", orders.len())
            })?;
        }
        classes += theta.len();
        tuples += 1;
    }
    Ok(format!(
        "{tuples} tuples, {classes} classes, all two-component"
    ))
}

fn ladder(p: i64) -> SquareCellGraph {
    SquareCellGraph::from_intervals(&[(0, p), (0, p)]).expect("ladder")
}

/// Criterion 5: corollaries equal the general theorem under substitution.
fn corollary_consistency() -> Check {
    let closed = |g: &IscParams| wiener_closed(g).map_err(|e| e.to_string());
    let family = |f: Family| wiener_family(f).map_err(|e| e.to_string());
    let mut checks = 0;
    for p in 1..=20 {
        let g = params(p, p, 1, 3 * p - 2);
        let h = family(Family::Hexagonal { p })?;
        ensure(h == closed(&g)?, || {
            format!("H({p}): {h} vs {}", closed(&g).unwrap())
        })?;
        checks += 1;
    }
    for n in 1..=20 {
        for p in (1..=n).filter(|p| (n - p) % 2 == 0) {
            let t = family(Family::Trapezium { n, p })?;
            ensure(t == closed(&params(p, n, 1, n))?, || {
                format!("T({n}, {p}) mismatch")
            })?;
            checks += 1;
        }
    }
    for n in 1..=14 {
        for p in (1..=n).filter(|p| (n - p) % 2 == 0) {
            for q in (p..=n).filter(|q| (n - q) % 2 == 0) {
                let bt = family(Family::Bitrapezium { n, p, q })?;
                ensure(bt == closed(&params(p, q, 1, n))?, || {
                    format!("BT({n}, {p}, {q}) mismatch")
                })?;
                checks += 1;
            }
        }
    }
    for p in 1..=10i64 {
        let t = family(Family::Trapezium { n: p, p })?;
        let formula = BigInt::from((p + 1) * (2 * p + 1) * (p + 3) / 3);
        let brute = wiener_bfs(&ladder(p)).map_err(|e| e.to_string())?.0;
        ensure(t == formula && t == brute, || {
            format!("T({p}, {p}) = {t}, (p+1)(2p+1)(p+3)/3 = {formula}, ladder BFS = {brute}")
        })?;
        checks += 1;
    }
    Ok(format!("{checks} family/theorem comparisons"))
}

/// Criterion 6: cut-record counts and edge multiplicities.
fn cut_counts() -> Check {
    let mut seen = [false; 3];
    for g in IscParams::sweep(14, 6) {
        let tables = table_cuts(&g).map_err(|e| e.to_string())?;
        let geometric = geometric_cuts(&build_isc(&g));
        for (source, cuts) in [("tables", &tables), ("geometric", &geometric)] {
            let horizontal = cuts.iter().filter(|c| c.family.is_horizontal()).count() as u64;
            let vertical = cuts.len() as u64 - horizontal;
            ensure(vertical == g.n() + g.m() - 1, || {
                format!("{g} {source}: {vertical} vertical records")
            })?;
            ensure(horizontal == g.t() + g.m() + g.s(), || {
                format!("{g} {source}: {horizontal} horizontal records")
            })?;
        }
        let multiplicity: u64 = geometric.iter().map(|c| c.edge_count.unwrap_or(0)).sum();
        ensure(BigInt::from(multiplicity) == edge_count(&g), || {
            format!("{g}: cut multiplicities sum to {multiplicity}")
        })?;
        ensure(cut_signature(&tables) == cut_signature(&geometric), || {
            format!("{g}: table and geometric component sizes differ")
        })?;
        seen[g.case().number() as usize - 1] = true;
    }
    ensure(seen == [true; 3], || "not all cases covered".into())?;
    Ok("record counts n+m-1 / t+m+s and multiplicity sum |E| in all three cases".into())
}

/// Criterion 7: closed form at p=1e4, q=2e4, m=1e3, n=1e5 in < 10 ms, equal
/// to the table cut sum (< 10 s).
fn large_closed_form() -> Check {
    let g = params(10_000, 20_000, 1_000, 100_000);
    ensure(g.case() == CaseKind::Case1, || {
        format!("{g} is {}", g.case())
    })?;

    let start = Instant::now();
    let closed = wiener_closed(&g).map_err(|e| e.to_string())?;
    let closed_time = start.elapsed();

    let start = Instant::now();
    let cuts = table_cuts(&g).map_err(|e| e.to_string())?;
    let tables = wiener_from_cuts(&cuts);
    let table_time = start.elapsed();

    ensure(closed_time < Duration::from_millis(10), || {
        format!("closed form took {closed_time:?}")
    })?;
    ensure(table_time < Duration::from_secs(10), || {
        format!("tables took {table_time:?}")
    })?;
    ensure(closed == tables, || {
        format!("closed {closed} vs tables {tables}")
    })?;
    Ok(format!(
        "W = {closed}; closed {closed_time:?}, tables {table_time:?} over {} cuts",
        cuts.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "1 exact small anchors",
            small_anchors,
            Duration::from_secs(1),
        ),
        (
            "2 structural formulas",
            structural_formulas,
            Duration::from_secs(60),
        ),
        (
            "3 oracle equivalence",
            oracle_equivalence,
            Duration::from_secs(300),
        ),
        (
            "4 theta-star correctness",
            theta_star,
            Duration::from_secs(120),
        ),
        (
            "5 corollary consistency",
            corollary_consistency,
            Duration::from_secs(300),
        ),
        (
            "6 cut-count identities",
            cut_counts,
            Duration::from_secs(300),
        ),
        (
            "7 closed form at scale",
            large_closed_form,
            Duration::from_secs(20),
        ),
    ];
    let mut failures = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed < limit {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
