//! Minimum-change bijection between Dyck paths with `e` and `e + 1` flaws,
//! loopless generation of its columns, and the cycle factors of odd and
//! middle levels graphs built from it.
//!
//! ```
//! use flawshift::{apply_f, pi_recursive, LatticePath};
//!
//! let x: LatticePath = "UUUDDD".parse().unwrap();
//! let y = apply_f(&x).unwrap();
//! assert_eq!(y.path.to_string(), "UDUDDU");
//! assert_eq!((y.up_flip, y.down_flip), (2, 6));
//! assert_eq!(pi_recursive(&x).unwrap().to_string(), "(6,2,4,3,5,1)");
//! ```

pub mod bijection;
pub mod error;
pub mod factor;
pub mod flip;
pub mod generator;
pub mod oracle;
pub mod path;
pub mod verify;

pub use bijection::{
    apply_f, apply_f_classic, apply_f_inverse, apply_g, apply_g_prime, apply_h, apply_h_prime,
    FStepResult, FlipResult,
};
pub use error::{Error, PathClass, Result};
pub use factor::{
    middle_factor, middle_levels_double, odd_cycle, odd_factor, path_to_set, to_dot,
    verify_factor, CycleFactor, FactorCycle, FactorReport, FactorVerifier, GraphKind, VertexSet,
    Violation, COVERAGE_MAX_K,
};
pub use flip::{
    dyck_subpaths, is_alternating, pi_direct, pi_recursive, pi_recursive_counted, recover_origin,
    DyckSubpath, FlipPermutation, HillMatching, OriginWitness, RecursionStats,
};
pub use generator::{
    enumerate_column, sawtooth_enumerate, sawtooth_enumerate_with, ColumnIterator, FlipDelta,
    GridStep, Sawtooth,
};
pub use oracle::{
    binomial, catalan, enumerate_lattice_paths, hamming, verify_chung_feller, FlawPartition,
    DEFAULT_ENUMERATION_CAP,
};
pub use path::{format_steps, read_paths, write_paths, Encoding, LatticePath, LexPaths, Step};
pub use verify::{run_suite, Property, PropertyOutcome, PROPERTIES};
