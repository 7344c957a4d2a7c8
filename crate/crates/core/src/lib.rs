//! Koszul forms, T-roots and spin structures on flag manifolds of compact
//! simple Lie groups, and parity tests for the torus bundles over them.
//!
//! ```
//! use flagspin::FlagSpec;
//!
//! let p = "E7(1,2,3,5)".parse::<FlagSpec>().unwrap().painting().unwrap();
//! assert_eq!(p.koszul_vector(), &[6, 3, 2]);
//! assert!(!p.is_spin());
//! ```

pub mod classical;
pub mod cspace;
pub mod euclid;
pub mod fixtures;
pub mod flag;
pub mod intlat;
pub mod notation;
pub mod rootsys;

pub use classical::{ClassicalError, ClassicalFamily, ClassicalParams};
pub use cspace::{CSpace, CSpaceError, Fibration, SpinCSpaceReport};
pub use euclid::{euclidean_realization, EuclideanRealization};
pub use fixtures::{FixtureDoc, FixtureError, FixtureRow, RegressionReport};
pub use flag::{make_painting, FlagError, KoszulForm, Painting, Sign, TRootTable};
pub use intlat::{IntMatrix, LatticeBasis, LatticeError};
pub use notation::{parse_flag_spec, FlagSpec, SpecParseError};
pub use rootsys::{build_root_system, Family, LieType, RootSystem, RootSystemError, WeightVector};
