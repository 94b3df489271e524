//! Exact computation of the homotopy Mackey functors of the `KU_G`-local and
//! `KU_G/p`-local equivariant spheres for finite abelian groups `G`.
//!
//! The crate is organised bottom-up:
//!
//! * [`abgroups`]: finite abelian groups, subgroup lattices, Sylow splittings.
//! * [`linalg`]: exact integer matrices, Smith and Hermite normal forms,
//!   finitely generated abelian groups.
//! * [`reps`]: characters, real and complex representation rings, Adams operations.
//! * [`burnside`]: Burnside rings, marks, linearization and Brauer relations.
//! * [`mackey`]: the Mackey functor container, axiom checks, tensor and comparison.
//! * [`kcoeff`]: `pi_* KO` and `pi_* KU` coefficients, `psi^g - 1`, kernels and cokernels.
//! * [`theta`]: extension data in degrees `0` and `8d+1` at the prime 2.
//! * [`assemble`]: the final graded answers.
//! * [`verify`]: the verification suites shared by the CLI and the acceptance tests.

pub mod abgroups;
pub mod assemble;
pub mod burnside;
pub mod error;
pub mod kcoeff;
pub mod linalg;
pub mod mackey;
pub mod reps;
pub mod theta;
pub mod verify;

pub use abgroups::{FinAbGroup, GroupElement, Lattice, Split, Subgroup};
pub use assemble::{GradedAnswer, SymbolicProduct};
pub use error::{KhomError, Result};
pub use linalg::{FgAbGroup, IntMatrix, Mat, Presentation, Ring};
pub use mackey::{Level, MackeyFunctor};
pub use reps::{RealIrrep, VirtualRep};
