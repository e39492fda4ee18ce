//! Grid functions: uniform symmetric samplings of profiles on [-L, L] with
//! declared limits at both infinities.
//!
//! All profiles in this crate converge exponentially to constants, so the
//! tail extension is constant-by-limit: evaluation anywhere on the real line
//! is linear interpolation inside the window and the declared limit outside.
//! That keeps every shifted evaluation total (operators look up arguments
//! like t + r1 or t + r3 - r4 freely) and makes convolution tails analytic.

use crate::error::{Result, WaveError};
use crate::tolerances::ORDERING_SLACK;

/// A real function of one variable sampled at t_j = -L + j*h, extended by
/// constants beyond the window.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    half_length: f64,
    step: f64,
    values: Vec<f64>,
    pub left_limit: f64,
    pub right_limit: f64,
}

impl GridFunction {
    /// Sample `f` on the grid. `L` must be an integer multiple of `h`;
    /// node count is 2L/h + 1.
    pub fn from_fn(
        half_length: f64,
        step: f64,
        limits: (f64, f64),
        f: impl Fn(f64) -> f64,
    ) -> Self {
        let n = Self::node_count(half_length, step);
        let values = (0..n).map(|j| f(-half_length + j as f64 * step)).collect();
        Self {
            half_length,
            step,
            values,
            left_limit: limits.0,
            right_limit: limits.1,
        }
    }

    /// Wrap precomputed samples. Panics if the length does not match the
    /// declared geometry — that is always a programming error, not data.
    pub fn from_values(half_length: f64, step: f64, limits: (f64, f64), values: Vec<f64>) -> Self {
        assert_eq!(
            values.len(),
            Self::node_count(half_length, step),
            "sample count does not match grid geometry"
        );
        Self {
            half_length,
            step,
            values,
            left_limit: limits.0,
            right_limit: limits.1,
        }
    }

    pub fn constant(half_length: f64, step: f64, value: f64) -> Self {
        let n = Self::node_count(half_length, step);
        Self {
            half_length,
            step,
            values: vec![value; n],
            left_limit: value,
            right_limit: value,
        }
    }

    fn node_count(half_length: f64, step: f64) -> usize {
        assert!(half_length > 0.0 && step > 0.0);
        let ratio = 2.0 * half_length / step;
        let n = ratio.round() as usize;
        assert!(
            (ratio - n as f64).abs() < 1e-9,
            "window half-length must be an integer multiple of the step"
        );
        n + 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn half_length(&self) -> f64 {
        self.half_length
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Grid coordinate of node `j`.
    pub fn node(&self, j: usize) -> f64 {
        -self.half_length + j as f64 * self.step
    }

    /// Evaluate anywhere: linear interpolation inside the window, declared
    /// limits outside.
    pub fn eval(&self, t: f64) -> f64 {
        if t <= -self.half_length {
            // The node values win exactly at the window edge so that eval at
            // a node always reproduces the sample.
            if t == -self.half_length {
                return self.values[0];
            }
            return self.left_limit;
        }
        if t >= self.half_length {
            if t == self.half_length {
                return *self.values.last().unwrap();
            }
            return self.right_limit;
        }
        let x = (t + self.half_length) / self.step;
        let j = x.floor() as usize;
        let frac = x - j as f64;
        if j + 1 >= self.values.len() {
            return *self.values.last().unwrap();
        }
        self.values[j] + frac * (self.values[j + 1] - self.values[j])
    }

    /// `f(t + shift)` with the same extension rules.
    pub fn eval_shifted(&self, t: f64, shift: f64) -> f64 {
        self.eval(t + shift)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            half_length: self.half_length,
            step: self.step,
            values: self.values.iter().map(|&v| f(v)).collect(),
            left_limit: f(self.left_limit),
            right_limit: f(self.right_limit),
        }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert!(self.same_grid(other), "grid geometry mismatch");
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Self {
            half_length: self.half_length,
            step: self.step,
            values,
            left_limit: f(self.left_limit, other.left_limit),
            right_limit: f(self.right_limit, other.right_limit),
        }
    }

    pub fn same_grid(&self, other: &Self) -> bool {
        self.half_length == other.half_length && self.step == other.step
    }

    /// Max of |f| over the nodes (limits included, they are attained in the
    /// closure of the range).
    pub fn sup_norm(&self) -> f64 {
        self.values
            .iter()
            .map(|v| v.abs())
            .fold(self.left_limit.abs().max(self.right_limit.abs()), f64::max)
    }

    /// Max of |self - other| over the nodes.
    pub fn sup_distance(&self, other: &Self) -> f64 {
        assert!(self.same_grid(other));
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// First index where the next sample drops by more than `slack`, i.e.
    /// where the function fails to be nondecreasing.
    pub fn first_decrease(&self, slack: f64) -> Option<(usize, f64)> {
        self.values
            .windows(2)
            .enumerate()
            .find(|(_, w)| w[1] - w[0] < -slack)
            .map(|(j, w)| (j, w[1] - w[0]))
    }

    /// Smallest crossing location of `level` (linear interpolation between
    /// the straddling nodes), for profiles that rise through it.
    pub fn crossing(&self, level: f64) -> Option<f64> {
        for j in 0..self.values.len() - 1 {
            let (a, b) = (self.values[j], self.values[j + 1]);
            if (a - level) * (b - level) <= 0.0 && a != b {
                let frac = (level - a) / (b - a);
                if (0.0..=1.0).contains(&frac) {
                    return Some(self.node(j) + frac * self.step);
                }
            }
        }
        None
    }
}

/// sup over t of e^{-mu |t|} * sqrt(sum_i f_i(t)^2), the weighted norm the
/// operator-continuity estimates live in. Evaluated over the grid nodes;
/// the tails contribute e^{-mu L} * (limit magnitude), which dominates the
/// whole tail since the weight only shrinks beyond the window.
pub fn decay_norm(components: &[&GridFunction], mu: f64) -> f64 {
    assert!(mu > 0.0, "decay norm needs a positive exponent");
    let first = components[0];
    let n = first.len();
    let mut best: f64 = 0.0;
    for j in 0..n {
        let t = first.node(j);
        let mut sq = 0.0;
        for f in components {
            let v = f.values()[j];
            sq += v * v;
        }
        best = best.max((-mu * t.abs()).exp() * sq.sqrt());
    }
    let mut left_sq = 0.0;
    let mut right_sq = 0.0;
    for f in components {
        left_sq += f.left_limit * f.left_limit;
        right_sq += f.right_limit * f.right_limit;
    }
    let tail_weight = (-mu * first.half_length()).exp();
    best.max(tail_weight * left_sq.sqrt())
        .max(tail_weight * right_sq.sqrt())
}

/// The four-profile bracket the iteration runs between.
#[derive(Debug, Clone)]
pub struct ProfilePair {
    pub lower_phi: GridFunction,
    pub lower_psi: GridFunction,
    pub upper_phi: GridFunction,
    pub upper_psi: GridFunction,
}

impl ProfilePair {
    /// Check the bracket structure: componentwise 0 <= lower <= upper <= box,
    /// and both psi profiles nondecreasing. Returns the witness of the first
    /// violation. `slack` absorbs quadrature-level noise.
    pub fn check(&self, k_box: (f64, f64), slack: f64) -> Result<()> {
        let pairs: [(&GridFunction, &GridFunction, f64, &'static str); 2] = [
            (&self.lower_phi, &self.upper_phi, k_box.0, "phi"),
            (&self.lower_psi, &self.upper_psi, k_box.1, "psi"),
        ];
        for (lo, hi, k, name) in pairs {
            for j in 0..lo.len() {
                let t = lo.node(j);
                let (a, b) = (lo.values()[j], hi.values()[j]);
                if a < -slack || b > k + slack {
                    return Err(WaveError::DomainViolation {
                        what: name,
                        value: if a < -slack { a } else { b },
                        t,
                        lo: 0.0,
                        hi: k,
                    });
                }
                if b - a < -slack {
                    return Err(WaveError::OrderingBroken {
                        iter: 0,
                        component: name,
                        t,
                        gap: b - a,
                    });
                }
            }
        }
        for (f, name) in [(&self.lower_psi, "lower_psi"), (&self.upper_psi, "upper_psi")] {
            if let Some((j, drop)) = f.first_decrease(slack) {
                return Err(WaveError::OrderingBroken {
                    iter: 0,
                    component: name,
                    t: f.node(j),
                    gap: drop,
                });
            }
        }
        Ok(())
    }

    /// Default slack for post-mutation checks.
    pub fn check_default(&self, k_box: (f64, f64)) -> Result<()> {
        self.check(k_box, ORDERING_SLACK)
    }

    /// Largest componentwise gap between upper and lower.
    pub fn gap_sup(&self) -> f64 {
        self.upper_phi
            .sup_distance(&self.lower_phi)
            .max(self.upper_psi.sup_distance(&self.lower_psi))
    }

    /// Decay-norm of the gap, treating (phi-gap, psi-gap) as one vector
    /// field.
    pub fn gap_mu(&self, mu: f64) -> f64 {
        let dphi = self.upper_phi.zip_with(&self.lower_phi, |a, b| a - b);
        let dpsi = self.upper_psi.zip_with(&self.lower_psi, |a, b| a - b);
        decay_norm(&[&dphi, &dpsi], mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn grid(f: impl Fn(f64) -> f64, limits: (f64, f64)) -> GridFunction {
        GridFunction::from_fn(5.0, 0.1, limits, f)
    }

    #[test]
    fn eval_interpolates_linearly() {
        let g = GridFunction::from_values(1.0, 1.0, (0.0, 0.0), vec![0.0, 1.0, 0.5]);
        // halfway between the first two nodes (t = -0.5)
        assert_eq!(g.eval(-0.5), 0.5);
        assert_eq!(g.eval(0.0), 1.0);
    }

    #[test]
    fn eval_is_exact_on_affine_data() {
        let g = grid(|t| 2.0 * t + 1.0, (0.0, 0.0));
        for &t in &[-4.99, -3.105, 0.0, 1.2499, 4.3] {
            assert!((g.eval(t) - (2.0 * t + 1.0)).abs() < 1e-12, "t = {t}");
        }
        // shift by a quarter step stays exact inside the window
        assert!((g.eval_shifted(1.0, 0.025) - (2.0 * 1.025 + 1.0)).abs() < 1e-12);
    }

    #[test]
    fn tails_extend_by_limits() {
        let g = grid(|t| t, (-7.0, 7.0));
        assert_eq!(g.eval(10.0), 7.0);
        assert_eq!(g.eval(-10.0), -7.0);
        // at the window edge the sample itself wins
        assert_eq!(g.eval(5.0), 5.0);
    }

    #[test]
    fn decay_norm_matches_exhaustive_loop() {
        // brute-force oracle: the same sup computed with explicit loops over
        // nodes and the two tail contributions
        let f = grid(|t| (t * 1.3).sin() * (1.0 + t * t) * 0.1, (0.3, -0.8));
        let g = grid(|t| (t * 0.7).cos() * 0.5, (0.0, 0.25));
        let mu = 0.17;
        let mut oracle: f64 = 0.0;
        for j in 0..f.len() {
            let t = f.node(j);
            let norm = (f.values()[j].powi(2) + g.values()[j].powi(2)).sqrt();
            let weighted = (-mu * t.abs()).exp() * norm;
            if weighted > oracle {
                oracle = weighted;
            }
        }
        let lim_l = (f.left_limit.powi(2) + g.left_limit.powi(2)).sqrt();
        let lim_r = (f.right_limit.powi(2) + g.right_limit.powi(2)).sqrt();
        oracle = oracle
            .max((-mu * 5.0f64).exp() * lim_l)
            .max((-mu * 5.0f64).exp() * lim_r);
        assert_eq!(decay_norm(&[&f, &g], mu), oracle);
    }

    #[test]
    fn decay_norm_of_matched_growth_is_one() {
        // e^{mu |t|} weighted by e^{-mu |t|} is identically 1
        let mu = 0.1;
        let g = GridFunction::from_fn(10.0, 0.1, ((mu * 10.0f64).exp(), (mu * 10.0f64).exp()), |t| {
            (mu * t.abs()).exp()
        });
        assert!((decay_norm(&[&g], mu) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_unit_vector_has_norm_one() {
        let f = GridFunction::constant(10.0, 0.1, 1.0);
        let g = GridFunction::constant(10.0, 0.1, 0.0);
        assert_eq!(decay_norm(&[&f, &g], 0.1), 1.0);
    }

    #[test]
    fn crossing_finds_the_level() {
        let g = grid(|t| 1.0 / (1.0 + (-2.0 * t).exp()), (0.0, 1.0));
        let c = g.crossing(0.5).unwrap();
        assert!(c.abs() < 0.05, "crossing at {c}");
    }

    #[test]
    fn pair_check_catches_order_violation() {
        let lo = grid(|t| 0.6 / (1.0 + (-t).exp()), (0.0, 0.6));
        let hi = grid(|t| 0.5 / (1.0 + (-t).exp()), (0.0, 0.5));
        let pair = ProfilePair {
            lower_phi: lo.clone(),
            lower_psi: GridFunction::constant(5.0, 0.1, 0.0),
            upper_phi: hi,
            upper_psi: lo,
        };
        assert!(matches!(
            pair.check_default((1.0, 1.0)),
            Err(WaveError::OrderingBroken { component: "phi", .. })
        ));
    }

    #[test]
    fn pair_check_catches_psi_decrease() {
        let pair = ProfilePair {
            lower_phi: GridFunction::constant(5.0, 0.1, 0.0),
            lower_psi: GridFunction::constant(5.0, 0.1, 0.0),
            upper_phi: GridFunction::constant(5.0, 0.1, 1.0),
            upper_psi: grid(|t| 0.5 - 0.01 * t, (0.55, 0.45)),
        };
        assert!(matches!(
            pair.check_default((1.0, 1.0)),
            Err(WaveError::OrderingBroken { component: "upper_psi", .. })
        ));
    }

    proptest! {
        #[test]
        fn decay_norm_is_a_norm(scale in -3.0f64..3.0, seed in 0u64..1000) {
            // absolute homogeneity and the triangle inequality on sampled data
            let f = grid(|t| ((t + seed as f64).sin()) * 0.4, (0.1, -0.2));
            let g = grid(|t| ((2.0 * t - seed as f64).cos()) * 0.3, (-0.3, 0.05));
            let mu = 0.1;
            let scaled = f.map(|v| scale * v);
            prop_assert!((decay_norm(&[&scaled], mu) - scale.abs() * decay_norm(&[&f], mu)).abs() < 1e-12);
            let sum = f.zip_with(&g, |a, b| a + b);
            prop_assert!(decay_norm(&[&sum], mu) <= decay_norm(&[&f], mu) + decay_norm(&[&g], mu) + 1e-12);
        }

        #[test]
        fn decay_norm_below_sup_norm(seed in 0u64..500) {
            let f = grid(|t| ((t * 0.9 + seed as f64).sin()) * 0.7, (0.2, -0.1));
            let mu = 0.15;
            prop_assert!(decay_norm(&[&f], mu) <= f.sup_norm() + 1e-15);
        }
    }
}
