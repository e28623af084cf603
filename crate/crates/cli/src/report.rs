//! Index reports and their json / csv / text renderings.

use std::fmt::Write as _;
use std::time::Duration;

use isc_core::exact::{format_rational, to_decimal};
use isc_core::{CaseKind, ExactInt, ExactRational, IscParams};
use serde::Serialize;

/// Result of one method on one tuple.
#[derive(Debug, Clone)]
pub struct MethodRun {
    pub name: String,
    pub wiener: Result<ExactInt, String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct IndexReport {
    /// Heading for text output, e.g. `H(2) = ISC(2, 2, 1, 4)`.
    pub label: String,
    pub params: IscParams,
    pub case: CaseKind,
    pub vertices: ExactInt,
    pub edges: ExactInt,
    pub methods: Vec<MethodRun>,
    /// Reference Wiener index: BFS when it ran, otherwise the first success.
    pub wiener: Option<ExactInt>,
    pub mu: Option<ExactRational>,
    pub precision: usize,
}

impl IndexReport {
    /// True when every method succeeded with the same value.
    pub fn agree(&self) -> bool {
        let mut values = self.methods.iter().map(|m| m.wiener.as_ref());
        match values.next() {
            Some(Ok(first)) => values.all(|v| v == Ok(first)),
            _ => false,
        }
    }

    /// One line per disagreeing or failed method, relative to the reference.
    pub fn disagreements(&self) -> Vec<String> {
        self.methods
            .iter()
            .filter_map(|m| match (&m.wiener, &self.wiener) {
                (Err(e), _) => Some(format!("{} failed: {e}", m.name)),
                (Ok(w), Some(reference)) if w != reference => Some(format!(
                    "{} gave W = {w}, reference W = {reference}",
                    m.name
                )),
                _ => None,
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct MethodJson<'a> {
            name: &'a str,
            #[serde(rename = "W")]
            wiener: Option<String>,
            error: Option<&'a str>,
            time_ms: f64,
        }

        #[derive(Serialize)]
        struct ReportJson<'a> {
            p: u64,
            q: u64,
            m: u64,
            n: u64,
            case: String,
            #[serde(rename = "N")]
            vertices: String,
            #[serde(rename = "E")]
            edges: String,
            #[serde(rename = "W")]
            wiener: Option<String>,
            mu_exact: Option<String>,
            mu_decimal: Option<String>,
            methods: Vec<MethodJson<'a>>,
        }

        let methods = self
            .methods
            .iter()
            .map(|m| MethodJson {
                name: &m.name,
                wiener: m.wiener.as_ref().ok().map(ToString::to_string),
                error: m.wiener.as_ref().err().map(String::as_str),
                time_ms: millis(m.elapsed),
            })
            .collect();
        let report = ReportJson {
            p: self.params.p(),
            q: self.params.q(),
            m: self.params.m(),
            n: self.params.n(),
            case: self.case.to_string(),
            vertices: self.vertices.to_string(),
            edges: self.edges.to_string(),
            wiener: self.wiener.as_ref().map(ToString::to_string),
            mu_exact: self.mu.as_ref().map(format_rational),
            mu_decimal: self.mu.as_ref().map(|mu| to_decimal(mu, self.precision)),
            methods,
        };
        serde_json::to_value(report).expect("report serializes")
    }

    /// Header plus one row per method.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,q,m,n,case,N,E,method,W,time_ms,mu_exact,mu_decimal\n");
        let mu_exact = self.mu.as_ref().map(format_rational).unwrap_or_default();
        let mu_decimal = self
            .mu
            .as_ref()
            .map(|mu| to_decimal(mu, self.precision))
            .unwrap_or_default();
        for m in &self.methods {
            let w = match &m.wiener {
                Ok(w) => w.to_string(),
                Err(_) => String::new(),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{:.6},{},{}",
                self.params.p(),
                self.params.q(),
                self.params.m(),
                self.params.n(),
                self.case,
                self.vertices,
                self.edges,
                m.name,
                w,
                millis(m.elapsed),
                mu_exact,
                mu_decimal
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}  {}  N = {}  E = {}",
            self.label, self.case, self.vertices, self.edges
        );
        if let Some(w) = &self.wiener {
            let _ = writeln!(out, "W  = {w}");
        }
        if let Some(mu) = &self.mu {
            let _ = writeln!(
                out,
                "mu = {} = {}",
                format_rational(mu),
                to_decimal(mu, self.precision)
            );
        }
        let width = self.methods.iter().map(|m| m.name.len()).max().unwrap_or(0);
        for m in &self.methods {
            let value = match &m.wiener {
                Ok(w) => w.to_string(),
                Err(e) => format!("error: {e}"),
            };
            let _ = writeln!(
                out,
                "  {:<width$}  {}  ({:.3} ms)",
                m.name,
                value,
                millis(m.elapsed)
            );
        }
        if self.methods.len() > 1 {
            if self.agree() {
                let _ = writeln!(out, "all {} methods agree", self.methods.len());
            } else {
                let _ = writeln!(out, "METHODS DISAGREE");
            }
        }
        out
    }
}

pub fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}
