//! Finite commutative rings: descriptors, arithmetic and homomorphisms.

mod descriptor;
mod finite;
mod hom;

pub use descriptor::{RingDescriptor, TableSpec};
pub use finite::{Element, Ring};
pub use hom::{localize_modular, HomKind, Localization, MultiplicativeSet, RingHom};

pub(crate) use finite::{gcd, is_prime};
