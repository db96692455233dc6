use cjft_exact::ExactError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoreError {
    #[error("hierarchy step (n = {n}, l = {l}): {source}")]
    Hierarchy { n: usize, l: usize, source: ExactError },
    #[error("W_{n}^{l} is not symmetric in its variables")]
    NotSymmetric { n: usize, l: usize },
    #[error("W_{n}^{l} requested but the state only reaches order {order}")]
    Missing { n: usize, l: usize, order: usize },
    #[error("arity bound {given} too small, order {order} needs {needed}")]
    ArityTooSmall { given: usize, needed: usize, order: usize },
    #[error("alpha_{j}: {source}")]
    Extraction { j: usize, source: ExactError },
    #[error("1 + alpha_0 at p = 1, q = 0 is {0}, not zero")]
    SingularStructureFunction(String),
    #[error("order {needed} required, table has {have}")]
    OrderTooLow { needed: usize, have: usize },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Numeric(#[from] cjft_numeric::NumericError),
}
