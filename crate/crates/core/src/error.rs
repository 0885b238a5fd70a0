use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole of {0}")]
    Pole(&'static str),
    #[error("series diverges: {0}")]
    Divergence(String),
    #[error("series needs more than {0} terms")]
    MaxTermsExceeded(u64),
    #[error("argument on branch cut: {0}")]
    BranchCut(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("singular fiber at t = {0}")]
    SingularFiber(String),
    #[error("t = {0} lies on the boundary between formula branches")]
    BranchBoundary(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("lambda violates the rationality constraint")]
    LambdaConstraint,
    #[error("a = b is only conjectural (not evaluated)")]
    ConjecturalCase,
    #[error("root number undetermined: {0}")]
    RootNumber(String),
    #[error("singular curve (discriminant 0)")]
    SingularCurve,
    #[error("symbol is not integral at t = {0}")]
    NotIntegral(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
