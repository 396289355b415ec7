//! Decision procedures for 2-absorbing-primary-type ideals of finite
//! commutative rings and of the integers.

pub mod bitset;
pub mod caps;
pub mod classify;
pub mod error;
pub mod ideal;
pub mod lab;
pub mod ring;
pub mod symbolic;

pub use caps::Caps;
pub use classify::{classify, Analysis, ClassificationReport, Conditions, RadicalShape};
pub use error::{Error, Result};
pub use ideal::{parse_ideal, Ideal, IdealLattice};
pub use ring::{Element, Ring, RingDescriptor};
pub use symbolic::{classify_z, FactoredInteger, OracleCheck};
