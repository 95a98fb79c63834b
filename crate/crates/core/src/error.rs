//! Error taxonomy shared by the whole pipeline, plus the quantitative
//! bound-check record that hard/soft verification modes produce.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("validation: {0}")]
    Validation(String),

    #[error("config parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("resonant quasimomentum: {0}")]
    Resonant(String),

    #[error("truncation box too small: {0}")]
    BoxTooSmall(String),

    #[error("contour quadrature ill-conditioned: {0}")]
    QuadratureIll(String),

    #[error("perturbation series diverging: {0}")]
    SeriesDiverging(String),

    #[error("no eigenvalue inside the spectral window: {0}")]
    NoEigenvalueInWindow(String),

    #[error("multiple eigenvalues inside the spectral window: {0}")]
    MultipleInWindow(String),

    #[error("iteration did not converge: {0}")]
    NoConvergence(String),

    #[error("no root bracketed on the search interval: {0}")]
    NoRootInInterval(String),

    #[error("finite-difference stencil left the non-resonant set: {0}")]
    NeighborhoodExit(String),

    #[error("hard bound violated: {name}: |lhs| = {lhs:e} exceeds rhs = {rhs:e}")]
    HardBound { name: String, lhs: f64, rhs: f64 },

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code contract: 0 ok, 2 validation, 3 resonant,
    /// 4 no-convergence, 5 hard-bound violation, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::Parse { .. } | Error::BoxTooSmall(_) => 2,
            Error::Resonant(_)
            | Error::QuadratureIll(_)
            | Error::NoEigenvalueInWindow(_)
            | Error::MultipleInWindow(_) => 3,
            Error::NoConvergence(_)
            | Error::SeriesDiverging(_)
            | Error::NoRootInInterval(_)
            | Error::NeighborhoodExit(_) => 4,
            Error::HardBound { .. } => 5,
            Error::Io(_) => 1,
        }
    }
}

/// One evaluated inequality: `lhs <= rhs`, tagged with the enforcement mode
/// it ran under. `empirical_c` reports lhs/(rhs/c) for bounds whose right
/// side carries a configurable constant c.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub hard: bool,
    pub pass: bool,
    pub empirical_c: Option<f64>,
}

impl BoundCheck {
    /// Evaluate `lhs <= rhs`; in hard mode a failure is an error.
    pub fn eval(name: &str, lhs: f64, rhs: f64, hard: bool) -> Result<BoundCheck> {
        let pass = lhs <= rhs;
        if hard && !pass {
            return Err(Error::HardBound { name: name.to_string(), lhs, rhs });
        }
        Ok(BoundCheck { name: name.to_string(), lhs, rhs, hard, pass, empirical_c: None })
    }

    /// Same, for bounds of the form `lhs <= c * unit`: also records the
    /// smallest constant that would have made the check pass.
    pub fn eval_with_c(name: &str, lhs: f64, c: f64, unit: f64, hard: bool) -> Result<BoundCheck> {
        let mut chk = Self::eval(name, lhs, c * unit, hard)?;
        chk.empirical_c = if unit > 0.0 { Some(lhs / unit) } else { None };
        Ok(chk)
    }
}
