pub mod laurent;
pub mod diagram;
pub mod invariants;
pub mod annulus;
pub mod openbook;
pub mod obstruction;

/// Library version; part of every cache key.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
