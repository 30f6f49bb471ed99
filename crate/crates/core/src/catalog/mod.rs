//! The thirteen CM curves over Q and the cross-checks run against them.

mod entry;
mod verify;

pub use entry::{load_catalog, parse_catalog, CMEntry, EntryView, Psi, CATALOG_SOURCE};
pub use verify::{
    psi_from_coefficients, summarize, verify_all, verify_entries, verify_row, CatalogReport, DeltaCheck, DeltaRelation,
    ExactJCheck, IdentityCheck, IdentityValue, NumericCheck, PinCheck, PinStatus, PsiNumeric, RowReport, Summary,
    DEFAULT_CATALOG_TOL, E6_ZERO_TOL,
};
