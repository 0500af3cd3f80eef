//! Exact symbolic construction of twisted 2-toroidal Lie algebras T(g) for
//! g = A_{2n−1}, D_{n+1} (order-2 diagram automorphism) and D_4 (triality),
//! and machine verification of their current-type presentation.
//!
//! ```
//! use toroidal_core::{AlgebraSpec, Exec, Family, FamilyId, Presentation};
//!
//! let p = Presentation::new(AlgebraSpec::new(Family::A, 3, 2).unwrap());
//! let report = p.verify_family(FamilyId::Twisted(2), 2, 2, Exec::default());
//! assert!(report.all_pass());
//! ```

pub mod coeff;
pub mod error;
pub mod exec;
pub mod kahler;
pub mod liealg;
pub mod linalg;
pub mod presentation;
pub mod report;
pub mod rootdata;
pub mod span;
pub mod toroidal;

pub use coeff::{CycNum, Rational};
pub use error::{Error, Result};
pub use exec::Exec;
pub use kahler::{KahlerElem, KahlerSym, LaurentMono};
pub use liealg::{BasisIndex, LieAlgebra, LieElem};
pub use presentation::{FamilyId, GenSym, Presentation, RelationId, VerifySummary};
pub use rootdata::{AlgebraSpec, Family, TwistKind};
pub use span::SpanReport;
pub use toroidal::{LoopElem, ToroidalAlgebra, ToroidalElem};
