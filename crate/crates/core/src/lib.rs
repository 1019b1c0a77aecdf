//! Graph energy for the cycle `C_n` and the unicyclic graph `P_n^6`.
//!
//! The crate is `no_std` (it needs `alloc`) and splits into:
//!
//! * [`graph`]: construction and validation of simple graphs and the
//!   families `C_n`, `P_n` and `P_n^6` (a hexagon with a pendant path);
//! * [`poly`], [`surd`], [`axis`]: exact integer/rational polynomials, the
//!   quadratic ring `Q[x][s]/(s^2 - x^2 - 4)`, and stable evaluation of
//!   `log |phi(ix)|`;
//! * [`charpoly`]: characteristic polynomials by recurrence, by edge
//!   deletion and by Faddeev-LeVerrier, plus matching numbers and the
//!   coefficient quasi-order;
//! * [`energy`]: spectra, spectral energy, and Coulson-integral energy
//!   differences on top of the double-exponential rules in [`quadrature`];
//! * [`proofkit`]: closed forms along the imaginary axis, exact identity
//!   checks and grid sign certificates for every residue class of `n mod 4`.
//!
//! Floating point only enters through [`axis`], [`eigen`], [`quadrature`] and
//! the numeric halves of [`proofkit`]; everything else is exact.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod axis;
pub mod charpoly;
pub mod eigen;
pub mod energy;
pub mod enumerate;
pub mod graph;
pub mod numeric;
pub mod poly;
pub mod proofkit;
pub mod quadrature;
pub mod surd;

pub use axis::{eval_log_magnitude_imag_axis, AxisLog, ImagAxisPoly};
pub use charpoly::{
    charpoly_auto, charpoly_cycle, charpoly_deletion, charpoly_general, charpoly_p6,
    charpoly_path, matching_numbers, quasi_order_compare, QuasiOrder, QuasiOrderResult,
};
pub use energy::{
    coulson_diff, coulson_energy, compare_energies, energy_cycle_reference, energy_spectral,
    spectrum, CompareOptions, EnergyComparison, EnergyError, Sign, Spectrum,
};
pub use graph::{Bipartition, Family, Graph, GraphError, GraphSpec, Subject};
pub use poly::{bipartite_b_coeffs, IntPoly, Poly, PolyError, RatPoly};
pub use quadrature::QuadratureResult;
pub use surd::SurdElem;
