//! Wiener-index strategies and a name-keyed registry.

use std::fmt;

use crate::closed_form::wiener_closed;
use crate::cuts::{geometric_cuts, table_cuts, wiener_from_cuts};
use crate::distance::wiener_bfs;
use crate::error::{IscError, Result};
use crate::exact::ExactInt;
use crate::lattice::build_isc;
use crate::params::IscParams;

/// One way of computing `W(ISC(p, q, m, n))`.
pub trait WienerMethod: Send + Sync {
    /// Registry key, e.g. `"bfs"`.
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn wiener(&self, params: &IscParams) -> Result<ExactInt>;
}

impl fmt::Debug for dyn WienerMethod + '_ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WienerMethod")
            .field("name", &self.name())
            .finish()
    }
}

/// Breadth-first search from every vertex of the constructed graph.
#[derive(Debug, Default, Clone, Copy)]
pub struct BfsMethod;

impl WienerMethod for BfsMethod {
    fn name(&self) -> &'static str {
        "bfs"
    }

    fn description(&self) -> &'static str {
        "breadth-first search from every vertex"
    }

    fn wiener(&self, params: &IscParams) -> Result<ExactInt> {
        wiener_bfs(&build_isc(params)).map(|(w, _)| w)
    }
}

/// Strip cuts counted on the constructed graph.
#[derive(Debug, Default, Clone, Copy)]
pub struct GeometricCutMethod;

impl WienerMethod for GeometricCutMethod {
    fn name(&self) -> &'static str {
        "cuts"
    }

    fn description(&self) -> &'static str {
        "cut method over horizontal and column strips of the graph"
    }

    fn wiener(&self, params: &IscParams) -> Result<ExactInt> {
        Ok(wiener_from_cuts(&geometric_cuts(&build_isc(params))))
    }
}

/// Cut method with component orders from the per-case tables.
#[derive(Debug, Default, Clone, Copy)]
pub struct TableCutMethod;

impl WienerMethod for TableCutMethod {
    fn name(&self) -> &'static str {
        "tables"
    }

    fn description(&self) -> &'static str {
        "cut method with closed-form component orders"
    }

    fn wiener(&self, params: &IscParams) -> Result<ExactInt> {
        table_cuts(params).map(|cuts| wiener_from_cuts(&cuts))
    }
}

/// Case polynomial, constant time in the size of the graph.
#[derive(Debug, Default, Clone, Copy)]
pub struct ClosedFormMethod;

impl WienerMethod for ClosedFormMethod {
    fn name(&self) -> &'static str {
        "closed"
    }

    fn description(&self) -> &'static str {
        "closed-form polynomial for the parameter case"
    }

    fn wiener(&self, params: &IscParams) -> Result<ExactInt> {
        wiener_closed(params)
    }
}

/// Methods in registration order, looked up by name.
#[derive(Debug, Default)]
pub struct MethodRegistry {
    methods: Vec<Box<dyn WienerMethod>>,
}

impl MethodRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// `bfs`, `cuts`, `tables`, `closed`.
    pub fn with_defaults() -> Self {
        let mut registry = Self::new();
        registry.register(Box::new(BfsMethod));
        registry.register(Box::new(GeometricCutMethod));
        registry.register(Box::new(TableCutMethod));
        registry.register(Box::new(ClosedFormMethod));
        registry
    }

    /// Adds `method`, replacing any method registered under the same name.
    pub fn register(&mut self, method: Box<dyn WienerMethod>) {
        match self.methods.iter().position(|m| m.name() == method.name()) {
            Some(i) => self.methods[i] = method,
            None => self.methods.push(method),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn WienerMethod> {
        self.methods
            .iter()
            .find(|m| m.name() == name)
            .map(|m| m.as_ref())
            .ok_or_else(|| IscError::UnknownMethod(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn WienerMethod> {
        self.methods.iter().map(|m| m.as_ref())
    }

    /// Resolves `"all"` to every method, otherwise a single name.
    pub fn select(&self, name: &str) -> Result<Vec<&dyn WienerMethod>> {
        if name == "all" {
            Ok(self.iter().collect())
        } else {
            self.get(name).map(|m| vec![m])
        }
    }
}
