//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use hgs_core::catalog::Catalog;
use hgs_core::{FiniteGroup, Limits};

/// Resolves a catalog label with default limits; panics on unknown labels.
pub fn group(label: &str) -> Arc<FiniteGroup> {
    Catalog::new(Limits::default())
        .resolve(label)
        .unwrap_or_else(|e| panic!("{label}: {e}"))
}
