//! Lattice-indexed Fourier representation of periodic functions on the cell
//! Q = [0,2π)ⁿ, together with the problem parameter block.
//!
//! A periodic function f is stored as a sparse map q ↦ c_q over the integer
//! dual lattice; `point_eval` realizes the representative
//! f(x) = Σ_q c_q e^{i⟨q,x⟩}. The quasi-periodic problem couples the same
//! index offsets through the dual lattice points p_j(t) = t + 2πj, so all
//! spectral computations downstream are pure coefficient arithmetic. The
//! norm of record is ℓ¹ in the coefficients (the "star" norm), an algebra
//! norm under pointwise multiplication.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Point of the integer dual lattice ℤⁿ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeIndex(pub Vec<i64>);

impl LatticeIndex {
    pub fn zero(n: usize) -> Self {
        LatticeIndex(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Self {
        LatticeIndex(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &LatticeIndex) -> Self {
        LatticeIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticeIndex) -> Self {
        LatticeIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// ‖q‖_∞
    pub fn norm_inf(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Sparse Fourier coefficient field. Missing keys are exact zeros.
///
/// `radius` is the truncation box: every stored index satisfies
/// ‖q‖_∞ ≤ radius. Operations that would push support outside the box clip
/// it back and accumulate the clipped ℓ¹ mass into `trunc_loss`, which
/// propagates additively so a finished run can report its total truncation
/// budget.
#[derive(Debug, Clone)]
pub struct FourierField {
    n: usize,
    radius: i64,
    coeffs: BTreeMap<LatticeIndex, Complex64>,
    hermitian: bool,
    trunc_loss: f64,
}

impl FourierField {
    /// Build from explicit entries. With `hermitian` set, the coefficients
    /// are required to satisfy c_{-q} = conj(c_q) (a real-valued function);
    /// violation is a construction error.
    pub fn new(
        n: usize,
        radius: i64,
        entries: impl IntoIterator<Item = (LatticeIndex, Complex64)>,
        hermitian: bool,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (q, c) in entries {
            if q.dim() != n {
                return Err(Error::Validation(format!(
                    "coefficient index {q} has dimension {} but the field is {n}-dimensional",
                    q.dim()
                )));
            }
            if q.norm_inf() > radius {
                return Err(Error::Validation(format!(
                    "coefficient index {q} lies outside the truncation box ‖q‖_∞ ≤ {radius}"
                )));
            }
            if c != Complex64::ZERO {
                *coeffs.entry(q).or_insert(Complex64::ZERO) += c;
            }
        }
        coeffs.retain(|_, c| *c != Complex64::ZERO);
        let field = FourierField { n, radius, coeffs, hermitian, trunc_loss: 0.0 };
        if hermitian && !field.hermitian_scan(0.0) {
            return Err(Error::Validation(
                "hermitian flag set but coefficients violate c_{-q} = conj(c_q)".into(),
            ));
        }
        Ok(field)
    }

    pub fn zero(n: usize, radius: i64) -> Self {
        FourierField { n, radius, coeffs: BTreeMap::new(), hermitian: true, trunc_loss: 0.0 }
    }

    /// The constant function `value` (single coefficient at q = 0).
    pub fn constant(n: usize, radius: i64, value: Complex64) -> Self {
        let mut coeffs = BTreeMap::new();
        if value != Complex64::ZERO {
            coeffs.insert(LatticeIndex::zero(n), value);
        }
        FourierField { n, radius, coeffs, hermitian: value.im == 0.0, trunc_loss: 0.0 }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn trunc_loss(&self) -> f64 {
        self.trunc_loss
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, q: &LatticeIndex) -> Complex64 {
        self.coeffs.get(q).copied().unwrap_or(Complex64::ZERO)
    }

    /// Mean value of the function = coefficient at q = 0.
    pub fn mean(&self) -> Complex64 {
        self.coeff(&LatticeIndex::zero(self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LatticeIndex, &Complex64)> {
        self.coeffs.iter()
    }

    /// Σ_q |c_q| — the star norm. Zero iff the field is zero.
    pub fn star_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).sum()
    }

    /// Direct scan of c_{-q} = conj(c_q) within `tol` (absolute, per entry).
    pub fn hermitian_scan(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|(q, c)| {
            let mirrored = self.coeff(&q.neg());
            (mirrored - c.conj()).norm() <= tol
        })
    }

    /// Coefficients of the complex conjugate function: q ↦ conj(c_{-q}).
    pub fn conj_field(&self) -> FourierField {
        let coeffs = self.coeffs.iter().map(|(q, c)| (q.neg(), c.conj())).collect();
        FourierField {
            n: self.n,
            radius: self.radius,
            coeffs,
            hermitian: self.hermitian,
            trunc_loss: self.trunc_loss,
        }
    }

    /// Zero out the mean coefficient; the star norm drops by exactly |c_0|.
    pub fn remove_mean(&self) -> FourierField {
        let mut out = self.clone();
        out.coeffs.remove(&LatticeIndex::zero(self.n));
        out.hermitian = self.hermitian && self.mean().im == 0.0;
        out
    }

    pub fn scale(&self, factor: Complex64) -> FourierField {
        let mut out = self.clone();
        if factor == Complex64::ZERO {
            out.coeffs.clear();
        } else {
            for c in out.coeffs.values_mut() {
                *c *= factor;
            }
        }
        out.hermitian = self.hermitian && factor.im == 0.0;
        out
    }

    pub fn add(&self, other: &FourierField) -> FourierField {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        out.radius = self.radius.max(other.radius);
        for (q, c) in &other.coeffs {
            let e = out.coeffs.entry(q.clone()).or_insert(Complex64::ZERO);
            *e += c;
            if *e == Complex64::ZERO {
                out.coeffs.remove(q);
            }
        }
        out.hermitian = self.hermitian && other.hermitian;
        out.trunc_loss = self.trunc_loss + other.trunc_loss;
        out
    }

    pub fn sub(&self, other: &FourierField) -> FourierField {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Full (unclipped) convolution: coefficients of the pointwise product.
    /// The output box grows to the sum of the input radii.
    pub fn convolve(&self, other: &FourierField) -> FourierField {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut coeffs: BTreeMap<LatticeIndex, Complex64> = BTreeMap::new();
        for (qa, ca) in &self.coeffs {
            for (qb, cb) in &other.coeffs {
                let q = qa.add(qb);
                *coeffs.entry(q).or_insert(Complex64::ZERO) += ca * cb;
            }
        }
        coeffs.retain(|_, c| *c != Complex64::ZERO);
        FourierField {
            n: self.n,
            radius: self.radius + other.radius,
            coeffs,
            hermitian: self.hermitian && other.hermitian,
            trunc_loss: self.trunc_loss + other.trunc_loss,
        }
    }

    /// Coefficients of |f|²: out_q = Σ_p c_{q+p} conj(c_p). Always hermitian.
    /// Support doubles, then is clipped back to this field's box with the
    /// clipped mass added to the truncation budget.
    pub fn squared_modulus(&self) -> FourierField {
        let mut coeffs: BTreeMap<LatticeIndex, Complex64> = BTreeMap::new();
        let mut clipped = 0.0;
        for (qa, ca) in &self.coeffs {
            for (qb, cb) in &self.coeffs {
                let q = qa.sub(qb);
                let term = ca * cb.conj();
                if q.norm_inf() > self.radius {
                    clipped += term.norm();
                } else {
                    *coeffs.entry(q).or_insert(Complex64::ZERO) += term;
                }
            }
        }
        // |f|² is real: enforce the symmetry exactly against summation-order
        // drift by pairing q with -q.
        let keys: Vec<LatticeIndex> = coeffs.keys().cloned().collect();
        for q in keys {
            let qn = q.neg();
            if q > qn {
                continue;
            }
            let a = coeffs.get(&q).copied().unwrap_or(Complex64::ZERO);
            let b = coeffs.get(&qn).copied().unwrap_or(Complex64::ZERO);
            let sym = 0.5 * (a + b.conj());
            if q == qn {
                coeffs.insert(q, Complex64::new(sym.re, 0.0));
            } else {
                coeffs.insert(q, sym);
                coeffs.insert(qn, sym.conj());
            }
        }
        coeffs.retain(|_, c| *c != Complex64::ZERO);
        FourierField {
            n: self.n,
            radius: self.radius,
            coeffs,
            hermitian: true,
            trunc_loss: 2.0 * self.trunc_loss * self.star_norm() + clipped,
        }
    }

    /// Clip support to ‖q‖_∞ ≤ radius, adding the removed mass to the
    /// truncation budget.
    pub fn restrict(&self, radius: i64) -> FourierField {
        let mut out = self.clone();
        out.radius = radius;
        let mut clipped = 0.0;
        out.coeffs.retain(|q, c| {
            if q.norm_inf() > radius {
                clipped += c.norm();
                false
            } else {
                true
            }
        });
        out.trunc_loss += clipped;
        out
    }

    /// Evaluate the finite Fourier sum at a point of the cell.
    pub fn point_eval(&self, x: &[f64]) -> Complex64 {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        let mut acc = Complex64::ZERO;
        for (q, c) in &self.coeffs {
            let phase: f64 = q.0.iter().zip(x).map(|(&qi, &xi)| qi as f64 * xi).sum();
            acc += c * Complex64::new(0.0, phase).exp();
        }
        acc
    }

    /// Drop coefficients below `tol` in modulus, recording the lost mass.
    pub fn prune(&self, tol: f64) -> FourierField {
        let mut out = self.clone();
        let mut lost = 0.0;
        out.coeffs.retain(|_, c| {
            if c.norm() < tol {
                lost += c.norm();
                false
            } else {
                true
            }
        });
        out.trunc_loss += lost;
        out
    }

    pub(crate) fn with_trunc_loss(mut self, loss: f64) -> FourierField {
        self.trunc_loss = loss;
        self
    }
}

/// How bound checks are enforced: `Auto` resolves to hard exactly when the
/// carrier radius exceeds the threshold k₁(‖V‖_*, δ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    Auto,
    Hard,
    Soft,
}

/// Linear-solve policy inside the nonlinear iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearSolver {
    /// Perturbation series only; a diverging series aborts the run.
    Strict,
    /// Series first, dense eigensolver on divergence (logged).
    Fallback,
    /// Series, cross-checked against the dense eigensolver at every solve.
    CrossCheck,
}

/// All scalar inputs of a run.
///
/// Quasimomentum components are stored in absolute units, t ∈ [0,2π)ⁿ, so
/// that the dual lattice points are p_j(t) = t + 2πj with exact round trips
/// through direction decomposition.
#[derive(Debug, Clone)]
pub struct ProblemParams {
    pub n: usize,
    pub l: u32,
    pub delta: f64,
    pub sigma: f64,
    pub amplitude: Complex64,
    pub t: Vec<f64>,
    pub k: f64,
    pub radius: i64,
    pub r_max: usize,
    pub n_quad: usize,
    pub tol_fix: f64,
    pub tol_root: f64,
    pub k0_override: f64,
    /// Amplitude-admissibility exponent γ₁ < γ₀.
    pub gamma1: f64,
    /// Constant c in the isoenergetic deviation bounds.
    pub c_iso: f64,
    /// Coefficient floor for operator assembly (mass goes to the budget).
    pub prune_tol: f64,
    pub bound_mode: BoundMode,
    pub solver: LinearSolver,
    pub seed: u64,
}

impl ProblemParams {
    /// Defaults for everything except dimension and operator order.
    pub fn new(n: usize, l: u32) -> Self {
        let gamma0 = 2.0 * l as f64 - n as f64 - 2.0 * Self::default_delta(n, l);
        ProblemParams {
            n,
            l,
            delta: Self::default_delta(n, l),
            sigma: 0.0,
            amplitude: Complex64::new(1.0, 0.0),
            t: vec![0.0; n],
            k: 30.0,
            radius: 12,
            r_max: 12,
            n_quad: 64,
            tol_fix: 1e-10,
            tol_root: 1e-10,
            k0_override: 1.0,
            gamma1: 0.5 * gamma0,
            c_iso: 10.0,
            prune_tol: 1e-14,
            bound_mode: BoundMode::Auto,
            solver: LinearSolver::CrossCheck,
            seed: 0,
        }
    }

    fn default_delta(n: usize, l: u32) -> f64 {
        0.25 * (2.0 * l as f64 - n as f64)
    }

    /// γ₀ = 2l − n − 2δ, the decay exponent of every perturbation bound.
    pub fn gamma0(&self) -> f64 {
        2.0 * self.l as f64 - self.n as f64 - 2.0 * self.delta
    }

    /// Half-width k^{2l−n−δ} of the spectral window ε(k,δ); also the radius
    /// of the resolvent contour.
    pub fn window_halfwidth(&self, k: f64) -> f64 {
        k.powf(2.0 * self.l as f64 - self.n as f64 - self.delta)
    }

    pub fn k_pow_2l(&self, k: f64) -> f64 {
        k.powi(2 * self.l as i32)
    }

    /// σ|A|², the coupling strength every nonlinear bound is phrased in.
    pub fn coupling(&self) -> f64 {
        self.sigma.abs() * self.amplitude.norm_sqr()
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Validation(format!("n = {} but the dimension must be ≥ 2", self.n)));
        }
        if 2 * self.l as usize <= self.n {
            return Err(Error::Validation(format!(
                "order constraint 2l > n violated: l = {}, n = {}",
                self.l, self.n
            )));
        }
        let span = 2.0 * self.l as f64 - self.n as f64;
        if !(self.delta > 0.0 && 2.0 * self.delta < span) {
            return Err(Error::Validation(format!(
                "delta constraint 0 < 2δ < 2l − n violated: δ = {}, 2l − n = {span}",
                self.delta
            )));
        }
        debug_assert!(self.gamma0() > 0.0);
        if self.t.len() != self.n {
            return Err(Error::Validation(format!(
                "quasimomentum has {} components, expected {}",
                self.t.len(),
                self.n
            )));
        }
        if self.t.iter().any(|&ts| !(0.0..2.0 * std::f64::consts::PI).contains(&ts)) {
            return Err(Error::Validation(
                "quasimomentum components must lie in [0, 2π)".into(),
            ));
        }
        if !(self.k > 0.0) {
            return Err(Error::Validation(format!("carrier radius k = {} must be positive", self.k)));
        }
        if self.radius < 1 {
            return Err(Error::Validation("truncation radius must be ≥ 1".into()));
        }
        if self.n_quad < 4 {
            return Err(Error::Validation("contour quadrature needs at least 4 nodes".into()));
        }
        if self.r_max < 2 {
            return Err(Error::Validation("series depth r_max must be ≥ 2".into()));
        }
        if !(self.gamma1 > 0.0 && self.gamma1 < self.gamma0()) {
            return Err(Error::Validation(format!(
                "gamma1 = {} must satisfy 0 < γ₁ < γ₀ = {}",
                self.gamma1,
                self.gamma0()
            )));
        }
        if !(self.tol_fix > 0.0 && self.tol_root > 0.0 && self.prune_tol >= 0.0) {
            return Err(Error::Validation("tolerances must be positive".into()));
        }
        self.check_amplitude(self.k)
    }

    /// Lemma-level admissibility |σ||A|² < k^{γ₁}. Since γ₁ < γ₀ < 2l − n,
    /// this also gives σ|A|² < λ^γ for some 0 < γ < (2l−n)/2l once k > 1.
    pub fn check_amplitude(&self, k: f64) -> Result<()> {
        let lhs = self.coupling();
        let rhs = k.powf(self.gamma1);
        if lhs >= rhs {
            return Err(Error::Validation(format!(
                "amplitude admissibility |σ||A|² < k^γ₁ violated: {lhs:e} ≥ {rhs:e}"
            )));
        }
        Ok(())
    }

    /// Resolve the bound-enforcement mode given the k₁ threshold.
    pub fn hard_mode(&self, k1: f64) -> bool {
        match self.bound_mode {
            BoundMode::Hard => true,
            BoundMode::Soft => false,
            BoundMode::Auto => self.k > k1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand::rngs::StdRng;

    fn li(q: &[i64]) -> LatticeIndex {
        LatticeIndex(q.to_vec())
    }

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn random_field(rng: &mut StdRng, n: usize, radius: i64, support: usize) -> FourierField {
        let mut entries = Vec::new();
        for _ in 0..support {
            let q = LatticeIndex((0..n).map(|_| rng.random_range(-radius..=radius)).collect());
            entries.push((q, c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))));
        }
        FourierField::new(n, radius, entries, false).unwrap()
    }

    #[test]
    fn star_norm_zero_field() {
        assert_eq!(FourierField::zero(2, 4).star_norm(), 0.0);
    }

    #[test]
    fn star_norm_two_terms() {
        let f = FourierField::new(
            2,
            4,
            [(li(&[1, 0]), c(0.3, 0.0)), (li(&[-1, 0]), c(0.3, 0.0))],
            true,
        )
        .unwrap();
        assert_eq!(f.star_norm(), 0.6);
    }

    #[test]
    fn star_norm_matches_term_by_term_sum() {
        let mut rng = StdRng::seed_from_u64(11);
        let f = random_field(&mut rng, 2, 8, 50);
        // independent accumulation loop
        let mut total = 0.0;
        for (_, coeff) in f.iter() {
            total += (coeff.re * coeff.re + coeff.im * coeff.im).sqrt();
        }
        assert!((f.star_norm() - total).abs() <= 1e-12 * total.max(1.0));
    }

    #[test]
    fn squared_modulus_plane_wave() {
        let a = c(0.7, -0.4);
        let f = FourierField::new(2, 4, [(li(&[0, 0]), a)], false).unwrap();
        let sq = f.squared_modulus();
        assert_eq!(sq.support_len(), 1);
        assert!((sq.mean() - c(a.norm_sqr(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn squared_modulus_two_cosines() {
        // f = 2cos x₁ → |f|² = 2 + e^{2ix₁} + e^{-2ix₁}
        let f = FourierField::new(
            2,
            4,
            [(li(&[1, 0]), c(1.0, 0.0)), (li(&[-1, 0]), c(1.0, 0.0))],
            true,
        )
        .unwrap();
        let sq = f.squared_modulus();
        assert!((sq.coeff(&li(&[0, 0])) - c(2.0, 0.0)).norm() < 1e-15);
        assert!((sq.coeff(&li(&[2, 0])) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((sq.coeff(&li(&[-2, 0])) - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(sq.support_len(), 3);
    }

    /// Grid-transform oracle: sample |f(x)|² on a uniform grid fine enough
    /// to resolve the doubled support and Fourier-analyze it directly.
    fn grid_squared_modulus(f: &FourierField, q: &LatticeIndex) -> C {
        let radius = f.radius();
        let m = (4 * radius + 2) as usize; // > 2·(2·radius)+1 modes per axis
        let n = f.dim();
        assert_eq!(n, 2, "oracle written for n = 2");
        let step = 2.0 * std::f64::consts::PI / m as f64;
        let mut acc = C::ZERO;
        for i in 0..m {
            for jj in 0..m {
                let x = [i as f64 * step, jj as f64 * step];
                let v = f.point_eval(&x);
                let phase: f64 = q.0[0] as f64 * x[0] + q.0[1] as f64 * x[1];
                acc += v * v.conj() * C::new(0.0, -phase).exp();
            }
        }
        acc / (m * m) as f64
    }

    #[test]
    fn squared_modulus_matches_grid_oracle() {
        let mut rng = StdRng::seed_from_u64(5);
        let f = random_field(&mut rng, 2, 3, 8);
        let sq = f.squared_modulus();
        for q in [li(&[0, 0]), li(&[1, -1]), li(&[2, 3]), li(&[-3, 0])] {
            let oracle = grid_squared_modulus(&f, &q);
            assert!(
                (sq.coeff(&q) - oracle).norm() < 1e-10,
                "mismatch at {q}: {} vs oracle {}",
                sq.coeff(&q),
                oracle
            );
        }
    }

    #[test]
    fn remove_mean_drops_only_the_constant() {
        let f = FourierField::new(
            2,
            4,
            [(li(&[0, 0]), c(5.0, 0.0)), (li(&[1, 0]), c(1.0, 0.0))],
            false,
        )
        .unwrap();
        let g = f.remove_mean();
        assert_eq!(g.mean(), C::ZERO);
        assert_eq!(g.coeff(&li(&[1, 0])), c(1.0, 0.0));
        assert!((f.star_norm() - g.star_norm() - 5.0).abs() < 1e-15);
        let z = FourierField::zero(2, 4);
        assert_eq!(z.remove_mean().star_norm(), 0.0);
    }

    #[test]
    fn initial_potential_shift_recovers_v() {
        // W₀ = V + σ|A|² with v₀ = 0 shifts back to V exactly.
        let v = FourierField::new(
            2,
            4,
            [
                (li(&[1, 0]), c(1.0, 0.0)),
                (li(&[-1, 0]), c(1.0, 0.0)),
                (li(&[0, 1]), c(1.0, 0.0)),
                (li(&[0, -1]), c(1.0, 0.0)),
            ],
            true,
        )
        .unwrap();
        let w0 = v.add(&FourierField::constant(2, 4, c(0.1, 0.0)));
        let w0_tilde = w0.remove_mean();
        assert_eq!(w0_tilde.sub(&v).star_norm(), 0.0);
    }

    #[test]
    fn point_eval_basics() {
        let z = FourierField::zero(2, 4);
        assert_eq!(z.point_eval(&[0.3, 0.7]), C::ZERO);
        let f = FourierField::new(
            2,
            4,
            [(li(&[1, 0]), c(1.0, 0.0)), (li(&[-1, 0]), c(1.0, 0.0))],
            true,
        )
        .unwrap();
        assert!((f.point_eval(&[0.0, 0.0]) - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn point_eval_matches_naive_sum_and_is_periodic() {
        let mut rng = StdRng::seed_from_u64(17);
        let f = random_field(&mut rng, 2, 6, 20);
        for _ in 0..5 {
            let x = [rng.random_range(0.0..6.28), rng.random_range(0.0..6.28)];
            // naive re-evaluation with explicit cos/sin accumulation
            let mut re = 0.0;
            let mut im = 0.0;
            for (q, coeff) in f.iter() {
                let phase = q.0[0] as f64 * x[0] + q.0[1] as f64 * x[1];
                let (s, cs) = phase.sin_cos();
                re += coeff.re * cs - coeff.im * s;
                im += coeff.re * s + coeff.im * cs;
            }
            assert!((f.point_eval(&x) - c(re, im)).norm() < 1e-12);
            let shifted = [x[0] + 2.0 * std::f64::consts::PI, x[1]];
            assert!((f.point_eval(&x) - f.point_eval(&shifted)).norm() < 1e-9);
        }
    }

    #[test]
    fn hermitian_construction_rejects_asymmetric_coefficients() {
        let err = FourierField::new(
            2,
            4,
            [(li(&[1, 0]), c(1.0, 0.0)), (li(&[-1, 0]), c(0.5, 0.0))],
            true,
        );
        assert!(matches!(err, Err(Error::Validation(_))));
    }

    #[test]
    fn squared_modulus_clips_and_reports_mass() {
        // support at radius 3 in a radius-3 box: products reach radius 6
        let f = FourierField::new(
            2,
            3,
            [(li(&[3, 0]), c(1.0, 0.0)), (li(&[-3, 0]), c(1.0, 0.0))],
            true,
        )
        .unwrap();
        let sq = f.squared_modulus();
        assert!(sq.coeff(&li(&[6, 0])) == C::ZERO);
        assert!(sq.trunc_loss() >= 2.0 - 1e-15); // the two |q|=6 products
        assert!((sq.mean() - c(2.0, 0.0)).norm() < 1e-15);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn star_norm_triangle_inequality(seed in 0u64..1000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let f = random_field(&mut rng, 2, 5, 12);
            let g = random_field(&mut rng, 2, 5, 12);
            prop_assert!(f.add(&g).star_norm() <= f.star_norm() + g.star_norm() + 1e-12);
        }

        #[test]
        fn star_norm_submultiplicative(seed in 0u64..1000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let f = random_field(&mut rng, 2, 5, 10);
            let g = random_field(&mut rng, 2, 5, 10);
            let prod = f.convolve(&g);
            prop_assert!(prod.star_norm() <= f.star_norm() * g.star_norm() + 1e-12);
        }

        #[test]
        fn star_norm_conjugation_invariant(seed in 0u64..1000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let f = random_field(&mut rng, 2, 5, 14);
            prop_assert!((f.conj_field().star_norm() - f.star_norm()).abs() < 1e-12);
        }

        #[test]
        fn squared_modulus_is_hermitian(seed in 0u64..1000) {
            let mut rng = StdRng::seed_from_u64(seed);
            let f = random_field(&mut rng, 2, 4, 10);
            let sq = f.squared_modulus();
            prop_assert!(sq.is_hermitian());
            prop_assert!(sq.hermitian_scan(0.0));
        }

        #[test]
        fn squared_modulus_pointwise(seed in 0u64..1000, x0 in 0.0..6.28, x1 in 0.0..6.28) {
            // keep support ≤ radius/2 so nothing clips
            let mut rng = StdRng::seed_from_u64(seed);
            let f = random_field(&mut rng, 2, 8, 8).restrict(4);
            let sq = f.squared_modulus();
            let x = [x0, x1];
            let direct = f.point_eval(&x).norm_sqr();
            prop_assert!((sq.point_eval(&x).re - direct).abs() < 1e-10);
            prop_assert!(sq.point_eval(&x).im.abs() < 1e-10);
        }
    }

    #[test]
    fn params_validation() {
        let mut p = ProblemParams::new(2, 2);
        p.delta = 0.9;
        assert!(p.validate().is_ok());
        assert!((p.gamma0() - 0.2).abs() < 1e-15);

        let mut bad = p.clone();
        bad.delta = 1.0; // 2δ = 2l − n
        assert!(matches!(bad.validate(), Err(Error::Validation(_))));

        let mut bad = p.clone();
        bad.n = 1;
        assert!(bad.validate().is_err());

        let mut bad = p.clone();
        bad.sigma = 1e6; // amplitude admissibility
        assert!(bad.validate().is_err());

        let mut bad = p;
        bad.t = vec![7.0, 0.0];
        assert!(bad.validate().is_err());
    }
}
