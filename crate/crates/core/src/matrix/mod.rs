//! Banded infinite matrices over R_m and the homomorphisms from the
//! anti-fixed differential operator algebras into them.

mod banded;
mod hermite;
mod index_poly;
mod phi;
mod window;

pub use banded::{cocycle_c, BandedMatrix};
pub use hermite::{hermite_witness, WitnessTarget};
pub use index_poly::IndexPoly;
pub use phi::{phi_hat, phi_hat_deg0, phi_map, phi_map_unchecked};
pub use window::{
    classical_membership, involution_apply, membership_on_window, t_conjugate, t_factor, AlgebraTag,
    Direction, Involution, Membership, TVariant, Violation, WindowedMatrix,
};
