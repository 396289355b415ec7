//! Predicates of the 2-absorbing-primary hierarchy and their orders.

mod analysis;
mod conditions;
mod report;

pub use analysis::{Analysis, Witness};
pub use conditions::Conditions;
pub use report::{
    classify, classify_analysis, is_divided_prime, ClassificationReport, Flags, Orders,
    RadicalShape,
};
