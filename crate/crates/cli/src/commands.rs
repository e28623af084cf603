use std::fmt::Write as _;
use std::io::Write;
use std::time::{Duration, Instant};

use isc_core::closed_form::{mu_closed, mu_family, wiener_closed, wiener_family};
use isc_core::cuts::{
    cut_signature, cuts_to_csv, first_unmatched, geometric_cuts, geometric_partition, table_cuts,
    theta_star_partition, wiener_from_cuts, CutRecord,
};
use isc_core::distance::{mu_from_wiener, wiener_bfs};
use isc_core::params::{edge_count, special_family_params, vertex_count};
use isc_core::{build_isc, ExactInt, Family, IscParams, MethodRegistry, WienerMethod};
use rayon::prelude::*;

use crate::report::{millis, IndexReport, MethodRun};
use crate::{
    BenchArgs, CliError, Command, ComputeArgs, CutSource, CutsArgs, ExportArgs, FamilyArgs,
    GraphFormat, OutputArgs, ParamArgs, ReportFormat, VerifyArgs,
};

type CliResult<T = ()> = Result<T, CliError>;

pub(crate) fn dispatch(command: &Command, stdout: &mut dyn Write) -> CliResult {
    match command {
        Command::Compute(args) => compute(args, stdout),
        Command::Family(args) => family(args, stdout),
        Command::Cuts(args) => cuts(args, stdout),
        Command::Verify(args) => verify(args, stdout),
        Command::Export(args) => export(args, stdout),
        Command::Bench(args) => bench(args, stdout),
    }
}

fn validate(args: &ParamArgs) -> CliResult<IscParams> {
    Ok(IscParams::new(args.p, args.q, args.m, args.n)?)
}

fn emit(output: &OutputArgs, stdout: &mut dyn Write, text: &str) -> CliResult {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render(report: &IndexReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json()).expect("json");
            s.push('\n');
            s
        }
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Text => report.to_text(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn run_method(method: &dyn WienerMethod, params: &IscParams) -> MethodRun {
    let (wiener, elapsed) = timed(|| method.wiener(params));
    MethodRun {
        name: method.name().to_string(),
        wiener: wiener.map_err(|e| e.to_string()),
        elapsed,
    }
}

fn reference_wiener(runs: &[MethodRun], preferred: &str) -> Option<ExactInt> {
    runs.iter()
        .find(|r| r.name == preferred)
        .and_then(|r| r.wiener.as_ref().ok())
        .or_else(|| runs.iter().find_map(|r| r.wiener.as_ref().ok()))
        .cloned()
}

fn mismatch_unless_agreed(report: &IndexReport) -> CliResult {
    if report.agree() {
        Ok(())
    } else {
        let mut lines = report.disagreements();
        if lines.is_empty() {
            lines.push("methods disagree".into());
        }
        Err(CliError::Mismatch(format!(
            "{}: {}",
            report.label,
            lines.join("; ")
        )))
    }
}

fn compute(args: &ComputeArgs, stdout: &mut dyn Write) -> CliResult {
    let params = validate(&args.params)?;
    let registry = MethodRegistry::with_defaults();
    let methods = registry.select(&args.method)?;
    let runs: Vec<MethodRun> = methods.iter().map(|m| run_method(*m, &params)).collect();
    let vertices = vertex_count(&params);
    let wiener = reference_wiener(&runs, "bfs");
    let mu = match &wiener {
        Some(w) => Some(mu_from_wiener(w, &vertices)?),
        None => None,
    };
    let report = IndexReport {
        label: params.to_string(),
        params,
        case: params.case(),
        edges: edge_count(&params),
        vertices,
        methods: runs,
        wiener,
        mu,
        precision: args.precision,
    };
    emit(&args.output, stdout, &render(&report, args.format))?;
    mismatch_unless_agreed(&report)
}

fn family_of(args: &FamilyArgs) -> CliResult<Family> {
    let choice = &args.family;
    if let Some(p) = choice.hex {
        return Ok(Family::Hexagonal { p });
    }
    if let Some(v) = &choice.trap {
        return Ok(Family::Trapezium { n: v[0], p: v[1] });
    }
    if let Some(v) = &choice.bitrap {
        return Ok(Family::Bitrapezium {
            n: v[0],
            p: v[1],
            q: v[2],
        });
    }
    Err(CliError::Usage(
        "one of --hex, --trap, --bitrap is required".into(),
    ))
}

fn family(args: &FamilyArgs, stdout: &mut dyn Write) -> CliResult {
    let family = family_of(args)?;
    let params = special_family_params(family)?;
    let (corollary, corollary_time) = timed(|| wiener_family(family));
    let (closed, closed_time) = timed(|| wiener_closed(&params));
    let runs = vec![
        MethodRun {
            name: "corollary".into(),
            wiener: corollary.map_err(|e| e.to_string()),
            elapsed: corollary_time,
        },
        MethodRun {
            name: "closed".into(),
            wiener: closed.map_err(|e| e.to_string()),
            elapsed: closed_time,
        },
    ];
    let vertices = vertex_count(&params);
    let mu = mu_family(family)?;
    let report = IndexReport {
        label: format!("{family} = {params}"),
        params,
        case: params.case(),
        edges: edge_count(&params),
        wiener: reference_wiener(&runs, "corollary"),
        vertices,
        methods: runs,
        mu: Some(mu.clone()),
        precision: args.precision,
    };
    emit(&args.output, stdout, &render(&report, args.format))?;
    mismatch_unless_agreed(&report)?;

    let general = mu_closed(&params)?;
    if general != mu {
        return Err(CliError::Mismatch(format!(
            "{family}: family mu = {mu}, general mu = {general}"
        )));
    }
    if let Some(w) = &report.wiener {
        let from_w = mu_from_wiener(w, &report.vertices)?;
        if from_w != mu {
            return Err(CliError::Mismatch(format!(
                "{family}: family mu = {mu}, 2W/(N(N-1)) = {from_w}"
            )));
        }
    }
    Ok(())
}

fn cuts(args: &CutsArgs, stdout: &mut dyn Write) -> CliResult {
    let params = validate(&args.params)?;
    let records = match args.source {
        CutSource::Geometric => geometric_cuts(&build_isc(&params)),
        CutSource::Tables => table_cuts(&params)?,
        CutSource::Theta => {
            let graph = build_isc(&params);
            theta_star_partition(&graph)?.to_cuts(&graph)?
        }
    };
    emit(&args.output, stdout, &cuts_to_csv(&records))
}

fn describe_cut(c: &CutRecord) -> String {
    format!(
        "{} k={} f_small={} f_comp={}",
        c.family, c.k, c.f_small, c.f_comp
    )
}

/// Diagnostics for one tuple; empty when every check passes.
fn check_tuple(params: &IscParams, theta: bool) -> Vec<String> {
    let mut problems = Vec::new();
    let graph = build_isc(params);
    if ExactInt::from(graph.vertex_count()) != vertex_count(params)
        || ExactInt::from(graph.edge_count()) != edge_count(params)
    {
        problems.push(format!(
            "counts: graph N={} E={}, formulas N={} E={}",
            graph.vertex_count(),
            graph.edge_count(),
            vertex_count(params),
            edge_count(params)
        ));
    }
    let bfs = match wiener_bfs(&graph) {
        Ok((w, _)) => w,
        Err(e) => {
            problems.push(format!("bfs: {e}"));
            return problems;
        }
    };
    let geometric = geometric_cuts(&graph);
    let geometric_w = wiener_from_cuts(&geometric);
    let tables = table_cuts(params);
    let closed = wiener_closed(params);

    let tables_w = match &tables {
        Ok(t) => wiener_from_cuts(t).to_string(),
        Err(e) => {
            problems.push(format!("tables: {e}"));
            "error".into()
        }
    };
    let closed_w = match &closed {
        Ok(w) => w.to_string(),
        Err(e) => {
            problems.push(format!("closed: {e}"));
            "error".into()
        }
    };
    let bfs_s = bfs.to_string();
    if geometric_w != bfs || tables_w != bfs_s || closed_w != bfs_s {
        problems.push(format!(
            "W: bfs={bfs} cuts={geometric_w} tables={tables_w} closed={closed_w}"
        ));
    }
    if let Ok(t) = &tables {
        if cut_signature(t) != cut_signature(&geometric) {
            if let Some(c) = first_unmatched(t, &geometric) {
                problems.push(format!("first differing cut (tables): {}", describe_cut(c)));
            } else if let Some(c) = first_unmatched(&geometric, t) {
                problems.push(format!(
                    "first differing cut (geometric): {}",
                    describe_cut(c)
                ));
            }
        }
    }
    match (
        mu_closed(params),
        mu_from_wiener(&bfs, &vertex_count(params)),
    ) {
        (Ok(a), Ok(b)) if a != b => problems.push(format!("mu: closed={a} bfs={b}")),
        (Err(e), _) | (_, Err(e)) => problems.push(format!("mu: {e}")),
        _ => {}
    }
    if theta {
        match theta_star_partition(&graph) {
            Ok(p) if p != geometric_partition(&graph) => {
                problems.push("theta-star partition differs from strip partition".into())
            }
            Err(e) => problems.push(format!("theta-star: {e}")),
            _ => {}
        }
    }
    problems
}

fn verify(args: &VerifyArgs, stdout: &mut dyn Write) -> CliResult {
    let tuples: Vec<IscParams> = IscParams::sweep(args.max_n, args.max_m).collect();
    let outcomes: Vec<Vec<String>> = tuples
        .par_iter()
        .map(|g| check_tuple(g, args.theta))
        .collect();

    let mut out = String::new();
    let mut per_case = [0usize; 3];
    let mut failed = 0;
    for (g, problems) in tuples.iter().zip(&outcomes) {
        per_case[g.case().number() as usize - 1] += 1;
        if !problems.is_empty() {
            failed += 1;
            let _ = writeln!(out, "MISMATCH {g} ({})", g.case());
            for p in problems {
                let _ = writeln!(out, "  {p}");
            }
        }
    }
    let _ = writeln!(
        out,
        "checked {} tuples (n <= {}, m <= {}; case1 {}, case2 {}, case3 {}){}",
        tuples.len(),
        args.max_n,
        args.max_m,
        per_case[0],
        per_case[1],
        per_case[2],
        if args.theta {
            ", including theta-star"
        } else {
            ""
        }
    );
    if failed == 0 {
        let _ = writeln!(out, "all methods agree");
    } else {
        let _ = writeln!(out, "{failed} tuples mismatched");
    }
    emit(&args.output, stdout, &out)?;
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "{failed} of {} tuples mismatched",
            tuples.len()
        )))
    }
}

fn export(args: &ExportArgs, stdout: &mut dyn Write) -> CliResult {
    let params = validate(&args.params)?;
    let graph = build_isc(&params);
    let text = match args.format {
        GraphFormat::Adjlist => graph.to_adjacency_list(),
        GraphFormat::Dot => graph.to_dot(&params.to_string()),
        GraphFormat::Distances => wiener_bfs(&graph)?.1.to_csv(),
    };
    emit(&args.output, stdout, &text)
}

struct BenchRow {
    name: &'static str,
    wiener: Result<ExactInt, String>,
    times: Vec<Duration>,
}

impl BenchRow {
    fn min(&self) -> f64 {
        self.times
            .iter()
            .map(|&d| millis(d))
            .fold(f64::INFINITY, f64::min)
    }

    fn max(&self) -> f64 {
        self.times.iter().map(|&d| millis(d)).fold(0.0, f64::max)
    }

    fn mean(&self) -> f64 {
        self.times.iter().map(|&d| millis(d)).sum::<f64>() / self.times.len().max(1) as f64
    }
}

fn bench(args: &BenchArgs, stdout: &mut dyn Write) -> CliResult {
    if args.repeat == 0 {
        return Err(CliError::Usage("--repeat must be at least 1".into()));
    }
    let params = validate(&args.params)?;
    let registry = MethodRegistry::with_defaults();
    let rows: Vec<BenchRow> = registry
        .select(&args.method)?
        .into_iter()
        .map(|m| {
            let mut times = Vec::with_capacity(args.repeat);
            let mut wiener = Err(String::new());
            for _ in 0..args.repeat {
                let (w, elapsed) = timed(|| m.wiener(&params));
                times.push(elapsed);
                wiener = w.map_err(|e| e.to_string());
            }
            BenchRow {
                name: m.name(),
                wiener,
                times,
            }
        })
        .collect();

    let value = |r: &BenchRow| match &r.wiener {
        Ok(w) => w.to_string(),
        Err(e) => format!("error: {e}"),
    };
    let text = match args.format {
        ReportFormat::Text => {
            let mut s = format!("{params}  {}  repeat {}\n", params.case(), args.repeat);
            let _ = writeln!(
                s,
                "  {:<8} {:>12} {:>12} {:>12}  W",
                "method", "min_ms", "mean_ms", "max_ms"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "  {:<8} {:>12.4} {:>12.4} {:>12.4}  {}",
                    r.name,
                    r.min(),
                    r.mean(),
                    r.max(),
                    value(r)
                );
            }
            s
        }
        ReportFormat::Csv => {
            let mut s = String::from("p,q,m,n,method,repeat,min_ms,mean_ms,max_ms,W\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{:.6},{:.6},{:.6},{}",
                    params.p(),
                    params.q(),
                    params.m(),
                    params.n(),
                    r.name,
                    args.repeat,
                    r.min(),
                    r.mean(),
                    r.max(),
                    r.wiener
                        .as_ref()
                        .map(ToString::to_string)
                        .unwrap_or_default()
                );
            }
            s
        }
        ReportFormat::Json => {
            let methods: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "name": r.name,
                        "W": r.wiener.as_ref().ok().map(ToString::to_string),
                        "min_ms": r.min(),
                        "mean_ms": r.mean(),
                        "max_ms": r.max(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "p": params.p(), "q": params.q(), "m": params.m(), "n": params.n(),
                "case": params.case().to_string(),
                "repeat": args.repeat,
                "methods": methods,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
    };
    emit(&args.output, stdout, &text)?;

    let first = rows.first().and_then(|r| r.wiener.as_ref().ok());
    let agree = first.is_some() && rows.iter().all(|r| r.wiener.as_ref().ok() == first);
    if agree {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "{params}: benchmarked methods disagree"
        )))
    }
}
