//! One error type for the whole pipeline.
//!
//! Every failure carries enough of a witness (the offending value, location,
//! or residual) that a caller can log it and a test can assert on it without
//! re-running the computation. Variants are grouped by the stage that raises
//! them; `exit_code` maps them onto the process conventions used by the CLI.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WaveError {
    // ---- parameter validation -------------------------------------------
    #[error("parameter `{name}` must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("parameter `{name}` = {value} outside [{lo}, {hi})")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("wave speed c = {c} below the linear-spreading threshold {c_min}; no monotone front exists there")]
    SubcriticalWaveSpeed { c: f64, c_min: f64 },

    #[error("no coexistence state inside the unit box for a = {a}, b = {b}")]
    NoValidEquilibrium { a: f64, b: f64 },

    // ---- characteristic roots -------------------------------------------
    #[error("characteristic quadratic has complex roots: c^2 - 4*D*alpha = {discriminant} < 0 (c = {c}, alpha = {alpha})")]
    ComplexRoots { c: f64, alpha: f64, discriminant: f64 },

    #[error("Newton continuation stalled at delay step {stage}: residual {residual} at z = {z}")]
    NewtonDiverged { stage: usize, z: f64, residual: f64 },

    #[error("root certification failed: winding count {found} (expected {expected}) in window of width {width} around {center}")]
    CertificationFailed {
        center: f64,
        width: f64,
        expected: i64,
        found: i64,
    },

    #[error("characteristic function vanishes on (or hugs) the counting contour: min |h| = {min_modulus}")]
    ZeroOnContour { min_modulus: f64 },

    #[error("contour quadrature did not settle: coarse {coarse} vs refined {fine} (tolerance {tol})")]
    QuadratureNotConverged { coarse: f64, fine: f64, tol: f64 },

    // ---- kernel construction --------------------------------------------
    #[error("kernel symbol too close to zero at omega = {omega}: |s| = {modulus}")]
    SymbolVanishes { omega: f64, modulus: f64 },

    #[error("kernel tail truncation did not settle: doubling the window moved the answer by {diff} (tolerance {tol})")]
    TruncationNotConverged { diff: f64, tol: f64 },

    #[error("kernel decay fit too weak: measured rate {rate}, need at least {needed}")]
    InsufficientDecay { rate: f64, needed: f64 },

    // ---- profiles and operator checks ------------------------------------
    #[error("{what} leaves [{lo}, {hi}]: value {value} at t = {t}")]
    DomainViolation {
        what: &'static str,
        value: f64,
        t: f64,
        lo: f64,
        hi: f64,
    },

    #[error("quasimonotonicity check `{property}` failed: margin {margin} at sample {sample}")]
    PqmViolated {
        property: &'static str,
        margin: f64,
        sample: usize,
    },

    #[error("inequality `{label}` violated at t = {t}: lhs {lhs} vs rhs {rhs}")]
    InequalityViolated {
        label: &'static str,
        t: f64,
        lhs: f64,
        rhs: f64,
    },

    #[error("no admissible bridge half-width: tried up to T = {t_max}, worst slack {worst_slack}")]
    NoAdmissibleT { t_max: f64, worst_slack: f64 },

    // ---- iteration --------------------------------------------------------
    #[error("profile ordering broke at sweep {iter}: component {component} has gap {gap} at t = {t}")]
    OrderingBroken {
        iter: usize,
        component: &'static str,
        t: f64,
        gap: f64,
    },

    #[error("iteration hit the sweep cap {max_iter}: best residual {residual}, bracket gap {gap}")]
    MaxIterExceeded {
        max_iter: usize,
        residual: f64,
        gap: f64,
    },

    #[error("profile never crosses level {level}; cannot align or track it")]
    NoCrossing { level: f64 },

    // ---- time stepping ----------------------------------------------------
    #[error("initial data needs support out to |x| = {needed} but the window only reaches {available}")]
    ProfileTooNarrow { needed: f64, available: f64 },

    #[error("time stepper blew up at t = {time}: max |field| = {max_value}")]
    BlowUp { time: f64, max_value: f64 },

    #[error("delay lookback asked for t = {requested} but history starts at {available}")]
    HistoryUnderflow { requested: f64, available: f64 },

    #[error("front reached the edge of the window at t = {time} (crossing at x = {position})")]
    FrontLostAtBoundary { time: f64, position: f64 },

    // ---- configuration / io ----------------------------------------------
    #[error("bad run configuration: {reason}")]
    ConfigInvalid { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl WaveError {
    /// Process exit code the CLI maps this error onto.
    ///
    /// * `2` — the inputs are mathematically unusable (bad parameters, no
    ///   certified root, broken ordering): rerunning cannot help.
    /// * `3` — a numeric stage aborted (blow-up, non-converged quadrature):
    ///   different resolution or window settings might.
    /// * `64` — malformed configuration or I/O, mirroring the usage code the
    ///   argument parser itself uses.
    pub fn exit_code(&self) -> i32 {
        use WaveError::*;
        match self {
            NonPositiveParameter { .. }
            | ParameterOutOfRange { .. }
            | SubcriticalWaveSpeed { .. }
            | NoValidEquilibrium { .. }
            | ComplexRoots { .. }
            | CertificationFailed { .. }
            | DomainViolation { .. }
            | PqmViolated { .. }
            | InequalityViolated { .. }
            | NoAdmissibleT { .. }
            | OrderingBroken { .. }
            | NoCrossing { .. }
            | ProfileTooNarrow { .. } => 2,
            NewtonDiverged { .. }
            | ZeroOnContour { .. }
            | QuadratureNotConverged { .. }
            | SymbolVanishes { .. }
            | TruncationNotConverged { .. }
            | InsufficientDecay { .. }
            | MaxIterExceeded { .. }
            | BlowUp { .. }
            | HistoryUnderflow { .. }
            | FrontLostAtBoundary { .. } => 3,
            ConfigInvalid { .. } | Io(_) | Json(_) => 64,
        }
    }
}

pub type Result<T> = std::result::Result<T, WaveError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn messages_carry_witnesses() {
        let e = WaveError::SubcriticalWaveSpeed { c: 1.0, c_min: 2.0 };
        let msg = e.to_string();
        assert!(msg.contains("c = 1"), "{msg}");
        assert!(msg.contains("2"), "{msg}");
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn exit_codes_partition_the_variants() {
        assert_eq!(WaveError::BlowUp { time: 0.4, max_value: 9.0 }.exit_code(), 3);
        assert_eq!(
            WaveError::ConfigInvalid { reason: "x".into() }.exit_code(),
            64
        );
        assert_eq!(
            WaveError::OrderingBroken {
                iter: 3,
                component: "phi",
                t: 0.0,
                gap: -0.1
            }
            .exit_code(),
            2
        );
    }
}
