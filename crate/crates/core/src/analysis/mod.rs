//! Certification of the approximations against the reference oracle.
//!
//! Dense scans bound the absolute and relative errors, bisection locates
//! the crossover abscissae and relative-error thresholds, and the tail
//! certificate covers `x > 4` where the scans thin out.

pub mod certify;
pub mod grid;
pub mod scan;
pub mod search;
pub mod tail;

pub use certify::{certify, Certification, CertifyOptions, Claim, Relation};
pub use grid::{GridSpec, Spacing};
pub use scan::{scan, scan_with, ErrorReport, LocalMax, ScanOptions};
pub use search::{find_crossover, find_rel_threshold, RelThreshold};
pub use tail::{tail_certificate, TailCertificate};
