//! Every numeric threshold that gates a result, in one place.
//!
//! Each constant says what it protects. Nothing else in the crate hardcodes a
//! tolerance; stages take these (or values derived from them) so a reader can
//! audit the whole acceptance surface here.

/// How negative an ordering margin (upper − lower, or a monotonicity
/// increment) may go before it counts as a violation. Covers profile-pair
/// ordering, the per-sweep gap monotonicity check, and the operator
/// ordering suites.
pub const ORDERING_SLACK: f64 = 1e-10;

/// Margin tolerance for the pointwise quasi-solution differential
/// inequalities (checked with exact piecewise derivatives, so this is not an
/// h-dependent figure).
pub const QUASI_SLACK: f64 = 1e-10;

/// Acceptance threshold on the sup of the wave-equation residual for a
/// solver candidate, measured away from the window edges.
pub const RESIDUAL_TOL: f64 = 1e-4;

/// Bracket-gap size below which the iteration declares the trap closed.
/// The cross iteration is not proven to close its bracket; this is a
/// secondary termination criterion, residual certification is primary.
pub const GAP_TOL: f64 = 1e-8;

/// Edge margin (in t-units) excluded from the residual certificate; constant
/// tail extension pollutes the equation near the window ends.
pub const CERT_EDGE_MARGIN: f64 = 5.0;

/// Boundary-certificate slack: |phi| at the left window edge, and the
/// bracket around phi at the right edge.
pub const BOUNDARY_TOL: f64 = 1e-3;

/// Absolute residual bound certifying a characteristic root.
pub const ROOT_RESIDUAL: f64 = 1e-12;

/// The argument-principle count must land within this distance of an
/// integer, else the contour quadrature is distrusted.
pub const WINDING_INTEGER_SLACK: f64 = 0.25;

/// Doubling the contour quadrature nodes must move the pre-rounded winding
/// estimate by less than this.
pub const WINDING_REFINE_TOL: f64 = 0.1;

/// Minimum |h(z)| allowed on a counting contour (zeros near the contour make
/// the integral meaningless).
pub const CONTOUR_CLEARANCE: f64 = 1e-8;

/// Agreement demanded between Newton continuation and the real-line
/// bisection oracle when both converge.
pub const ROOT_CROSSCHECK: f64 = 1e-10;

/// Kernel mass identity: the measured integral of a kernel must equal the
/// reciprocal shift constant to this accuracy.
pub const KERNEL_MASS_TOL: f64 = 1e-8;

/// Doubling the spectral window must move kernel samples by less than this,
/// else the tail truncation is not trusted.
pub const KERNEL_TRUNCATION_TOL: f64 = 1e-8;

/// Sup-norm agreement required between the spectral kernel at zero delay and
/// the closed-form two-branch exponential kernel.
pub const KERNEL_CLOSED_FORM_TOL: f64 = 1e-6;

/// How negative a kernel sample may be, relative to the kernel maximum.
/// Positivity is what makes the convolution operators order-preserving; it
/// is checked, never assumed.
pub const KERNEL_POSITIVITY_REL: f64 = 1e-8;

/// Fraction of the kernel maximum below which tail samples are treated as
/// reconstruction noise and excluded from the decay-rate fit.
pub const DECAY_FIT_FLOOR_REL: f64 = 1e-9;

/// Box-mapping slack: operator outputs from inputs inside the profile box
/// must stay inside it to this tolerance.
pub const BOX_MAPPING_TOL: f64 = 1e-8;

/// Pointwise margin tolerance for the quasimonotonicity sample checks.
pub const PQM_SLACK: f64 = 1e-12;

/// Blow-up guard for the time stepper: fields must stay inside
/// [-BLOWUP_MARGIN, 1 + BLOWUP_MARGIN] scaled by the equilibrium box.
pub const BLOWUP_CEILING: f64 = 1.05;

/// Per-step drift allowed when holding an exact equilibrium in the stepper.
pub const EQUILIBRIUM_DRIFT: f64 = 1e-12;

/// Dual-implementation agreement for a single stepper update.
pub const STEP_CROSSCHECK: f64 = 1e-14;

/// Safety factor on the explicit-diffusion step bound dt <= f * dx^2 / D.
pub const CFL_SAFETY: f64 = 0.4;
