//! Exact dynamics of translation-invariant linear operators on 𝔽_q^n.
//!
//! An operator commuting with the cyclic shift is a circulant matrix, and
//! circulants over 𝔽_q are the residues of `𝔽_q[y]` modulo `y^n − 1`. This
//! crate uses that identification to
//!
//! * decompose the functional graph of any such operator into cycles with
//!   attached trees, from the factorization of `y^n − 1` and multiplicative
//!   orders ([`dynamics::decompose`]);
//! * compute the preperiod and period of a single orbit exactly
//!   ([`dynamics::orbit_stats_algebraic`]);
//! * classify sequences (delta functions, the quadratic-residue indicator,
//!   multiplicative functions) as most / almost most complicated for an
//!   operator ([`dynamics::classify`]);
//! * cross-check all of the above against brute-force enumeration.

pub mod circulant;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod factor;
pub mod field;
pub mod intfactor;
pub mod order;
pub mod poly;
pub mod sequence;
pub mod verify;

pub use circulant::{CirculantAlgebra, Convention, CycPoly, StateVector};
pub use error::{Error, Result};
pub use factor::{factor_xn_minus_1, Factorization};
pub use field::{FieldCtx, FieldElement};
pub use poly::{Poly, PolyRing};
