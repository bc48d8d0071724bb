//! Exact computations around dual integer sequences, inverse systems of
//! filtrations, fat point schemes and symbolic powers of monomial ideals.

pub mod filtrations;
pub mod linalg;
pub mod monomial;
pub mod numseq;
pub mod points;
pub mod polyalg;
pub mod scalars;
pub mod verify;
