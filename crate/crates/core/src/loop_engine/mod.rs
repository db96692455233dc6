//! Loop equation route to the small-tau coefficients for general beta.

mod hierarchy;
mod identities;
mod table;

pub use hierarchy::{alpha_symbol, lambda1_tilde, lambda2_tilde, required_arity, solve_hierarchy, HierarchyState};
pub use identities::*;
pub use table::{coefficient_table, compute_table, extract_alpha, split_alpha, CoefficientTable, Scaled};
