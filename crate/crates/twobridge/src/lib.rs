//! File formats and the command-line tool for `twobridge-core`.

pub mod beta;
pub mod cli;
pub mod json;
pub mod pd;

pub use beta::{parse_beta_table, BetaFileError};
pub use cli::run;
pub use json::{BoundsJson, CertificateJson, KnotJson};
pub use pd::{emit_pd, parse_pd, parse_pd_records, PdError};
