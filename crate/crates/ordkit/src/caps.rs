//! Enumeration guards.
//!
//! Everything in this crate terminates, but several operations are
//! exponential in the carrier size (hom-poset enumeration, upset lattices,
//! filter enumeration). The caps below keep those desk-scale by default;
//! callers that want more pass an explicit [`Caps`].

use crate::error::{Error, Result};

/// Size budget for exponential enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest poset a constructor (tensor, copower, product) may build.
    pub max_poset: usize,
    /// Largest candidate count an enumeration may sweep.
    pub max_steps: u64,
}

pub const DEFAULT_MAX_POSET: usize = 10;
pub const DEFAULT_MAX_STEPS: u64 = 1 << 22;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_poset: DEFAULT_MAX_POSET,
            max_steps: DEFAULT_MAX_STEPS,
        }
    }
}

impl Caps {
    /// A cap on poset size only; the step budget keeps its default.
    pub fn with_max_poset(max_poset: usize) -> Self {
        Caps {
            max_poset,
            ..Caps::default()
        }
    }

    pub(crate) fn check_poset(&self, what: &str, size: usize) -> Result<()> {
        if size > self.max_poset {
            return Err(Error::SizeLimit {
                what: what.to_string(),
                size: size as u64,
                cap: self.max_poset as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_steps(&self, what: &str, steps: u64) -> Result<()> {
        if steps > self.max_steps {
            return Err(Error::SizeLimit {
                what: what.to_string(),
                size: steps,
                cap: self.max_steps,
            });
        }
        Ok(())
    }
}
