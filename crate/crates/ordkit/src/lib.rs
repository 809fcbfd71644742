//! ordkit: finite order theory with categorical structure.
//!
//! The crate implements, at desk scale, the toolbox of an order-enriched
//! pretopos over finite posets:
//!
//! - [`poset`]: finite posets, monotone maps, hom-posets, tensors;
//! - [`limits`]: finite weighted limits over finite graphs (lax
//!   pullbacks, lax kernels, cotensors, conical limits);
//! - [`subobject`]: subobject lattices, images, the direct/inverse image
//!   adjunction, upward closures, Beck-Chevalley and Frobenius checks;
//! - [`colimits`]: congruence closure, quotients, coinserters, disjoint
//!   unions, lax pushouts, copowers;
//! - [`logic`]: a parser and semantic interpreter for the coherent
//!   internal language (terms, formulas, sequents, entailment);
//! - [`duality`]: finite distributive lattices, filters, prime filters,
//!   Birkhoff round trips, finite Nachbin compactification, ultrafilters;
//! - [`checkers`]: decision procedures for projectivity, generators,
//!   order-filtrality, compactness, separation, and representability of
//!   complemented upsets;
//! - [`presheaf`]: finite poset-enriched categories, presheaves, and the
//!   nerve functor with its fully-faithfulness check;
//! - [`io`]: JSON wire formats and DOT export.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so instances can be freely shared across workers.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `ordkit` binary for the command-line surface.

mod bitrel;

pub mod caps;
pub mod checkers;
pub mod colimits;
pub mod duality;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod limits;
pub mod logic;
pub mod poset;
pub mod presheaf;
pub mod report;
pub mod subobject;

pub use caps::Caps;
pub use error::{Error, Result};
pub use poset::{classify, compose, hom_poset, tensor, FinPoset, HomPoset, MonotoneMap};
pub use report::{Report, Verdict};
pub use subobject::{Relation, Subobject};
