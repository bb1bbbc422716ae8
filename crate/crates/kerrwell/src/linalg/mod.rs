//! Dense and banded complex linear algebra used by the physics modules.

pub mod arnoldi;
pub mod banded;
pub mod dense;

pub use arnoldi::{shift_invert_slow_modes, SlowModes};
pub use banded::{Banded, BandedLu};
pub use dense::{
    general_eigen, hermitian_eigen, hermiticity_error, max_abs, CMat, C_I, C_ONE, C_ZERO,
};
