use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid frequency {0} rad/s (must be positive)")]
    InvalidFrequency(f64),

    #[error("{0}")]
    Domain(String),

    #[error("degenerate operating point: g_Ga^2 == delta_b_tilde * delta_fb")]
    DegenerateOperatingPoint,

    #[error("drift matrix is unstable (max eigenvalue real part {max_real_part:e} rad/s)")]
    Unstable { max_real_part: f64 },

    #[error("degenerate dynamics: vectorized Lyapunov system is singular")]
    DegenerateDynamics,

    #[error("lyapunov residual did not reach tolerance (got {residual:e}, bound {bound:e})")]
    LyapunovResidual { residual: f64, bound: f64 },

    #[error("covariance outside numerical physicality tolerance: {0}")]
    Physicality(String),

    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn config(line: usize, msg: impl Into<String>) -> Self {
        Error::Config { line, msg: msg.into() }
    }
}
