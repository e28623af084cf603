//! Wiener index and average distance of irregular square-cell
//! configurations ISC(p, q, m, n), computed four independent ways:
//!
//! - `bfs`: breadth-first search from every vertex ([`distance`])
//! - `cuts`: products of component orders over the strip cuts ([`cuts`])
//! - `tables`: the same products from closed-form component orders
//! - `closed`: quintic polynomials in `p, q, m, n` ([`closed_form`])
//!
//! The methods are exposed as interchangeable [`method::WienerMethod`]
//! strategies looked up by name in a [`method::MethodRegistry`].
//!
//! ```
//! use isc_core::{closed_form::wiener_closed, IscParams};
//!
//! let hexagon = IscParams::new(2, 2, 1, 4).unwrap();
//! assert_eq!(wiener_closed(&hexagon).unwrap(), 318.into());
//! ```

pub mod closed_form;
pub mod cuts;
pub mod distance;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod method;
pub mod params;

pub use error::{IscError, Result};
pub use exact::{ExactInt, ExactRational};
pub use lattice::{build_isc, SquareCellGraph, Vertex};
pub use method::{MethodRegistry, WienerMethod};
pub use params::{classify_case, CaseKind, Family, IscParams};
