//! Lorentz-channel decomposition of matrix fields and the free-Maxwell
//! equivalence for the vector channel.
//!
//! The 16-element channel basis at N = 4: scalar γ0, pseudoscalar γ0γ5,
//! vector γ0γ^μ, pseudovector γ5γ0γ^μ, tensor γ0[γ^μ,γ^ν]. These are
//! pairwise trace-orthogonal; coefficients come from trace pairing with
//! each element divided by its squared Frobenius norm.
//!
//! The Bargmann–Wigner check uses the frozen second-order operator
//! S(A) = slash(k)·(slash(k)·Ψ0 − Ψ0·γ0·slash(k)·γ0) with
//! Ψ0 = A^μ γ0γ_μ: its zero set coincides with that of the
//! momentum-space Maxwell operator (k·k)A^μ − k^μ(k·A). No first-order
//! combination of the left and right residuals has this property; the
//! outer slash(k) plays the same role as in the Klein–Gordon derivation.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::clifford::CliffordAlgebra;
use crate::dirac::FourMomentum;
use crate::error::{Error, Result};
use crate::linalg::{frobenius, max_norm, CMat};
use crate::seeding::trial_rng;

/// One named element of the channel basis.
#[derive(Debug, Clone)]
pub struct ChannelElement {
    pub name: String,
    pub matrix: CMat,
    /// tr(B†B), the normalization constant recorded for this element.
    pub norm_sq: f64,
}

/// The full 16-element basis at N = 4.
#[derive(Debug, Clone)]
pub struct ChannelBasis {
    pub elements: Vec<ChannelElement>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChannelCoefficients {
    pub scalar: [f64; 2],
    pub pseudoscalar: [f64; 2],
    pub vector: [[f64; 2]; 4],
    pub pseudovector: [[f64; 2]; 4],
    pub tensor: [[f64; 2]; 6],
    pub reconstruction_residual: f64,
}

impl ChannelBasis {
    pub fn new(alg: &CliffordAlgebra) -> Result<Self> {
        if alg.n() != 4 {
            return Err(Error::WrongAlgebra {
                expected: 4,
                got: alg.n(),
            });
        }
        let g0 = &alg.gammas()[0];
        let g5 = alg.gamma5();
        let mut elements = Vec::with_capacity(16);
        let mut push = |name: String, m: CMat| {
            let norm_sq = frobenius(&m, &m).re;
            elements.push(ChannelElement {
                name,
                matrix: m,
                norm_sq,
            });
        };
        push("scalar".into(), g0.clone());
        push("pseudoscalar".into(), g0 * g5);
        for mu in 0..4 {
            push(format!("vector_{mu}"), g0 * &alg.gammas()[mu]);
        }
        for mu in 0..4 {
            push(format!("pseudovector_{mu}"), g5 * g0 * &alg.gammas()[mu]);
        }
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                let gm = &alg.gammas()[mu];
                let gn = &alg.gammas()[nu];
                push(format!("tensor_{mu}{nu}"), g0 * (gm * gn - gn * gm));
            }
        }
        Ok(ChannelBasis { elements })
    }

    fn coefficient(&self, idx: usize, psi0: &CMat) -> Complex64 {
        let e = &self.elements[idx];
        frobenius(&e.matrix, psi0) / Complex64::new(e.norm_sq, 0.0)
    }

    /// Coefficients c with Ψ0 = Σ c_i B_i, plus the reconstruction residual.
    pub fn decompose(&self, psi0: &CMat) -> Result<ChannelCoefficients> {
        if psi0.nrows() != 4 || psi0.ncols() != 4 {
            return Err(Error::SizeMismatch {
                expected: 4,
                got_rows: psi0.nrows(),
                got_cols: psi0.ncols(),
            });
        }
        let coeffs: Vec<Complex64> = (0..16).map(|i| self.coefficient(i, psi0)).collect();
        let mut recon = CMat::zeros(4, 4);
        for (c, e) in coeffs.iter().zip(&self.elements) {
            recon += e.matrix.map(|x| x * c);
        }
        let pair = |c: Complex64| [c.re, c.im];
        Ok(ChannelCoefficients {
            scalar: pair(coeffs[0]),
            pseudoscalar: pair(coeffs[1]),
            vector: [pair(coeffs[2]), pair(coeffs[3]), pair(coeffs[4]), pair(coeffs[5])],
            pseudovector: [pair(coeffs[6]), pair(coeffs[7]), pair(coeffs[8]), pair(coeffs[9])],
            tensor: [
                pair(coeffs[10]),
                pair(coeffs[11]),
                pair(coeffs[12]),
                pair(coeffs[13]),
                pair(coeffs[14]),
                pair(coeffs[15]),
            ],
            reconstruction_residual: max_norm(&(recon - psi0)),
        })
    }

    /// Orthonormality defect of the polarization basis ½γ0γ_μ:
    /// max |tr[(½γ0γ_μ)†(½γ0γ_ν)] − δ_μν| over all 16 pairs.
    pub fn polarization_orthonormality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        let half = Complex64::new(0.5, 0.0);
        for mu in 0..4 {
            for nu in 0..4 {
                let a = self.elements[2 + mu].matrix.map(|c| c * half);
                let b = self.elements[2 + nu].matrix.map(|c| c * half);
                let t = frobenius(&a, &b);
                let target = if mu == nu { 1.0 } else { 0.0 };
                worst = worst.max((t - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }
}

/// A^μ amplitudes with their momentum.
#[derive(Debug, Clone)]
pub struct VectorField {
    pub components: [Complex64; 4],
    pub momentum: FourMomentum,
}

impl VectorField {
    pub fn new(components: [Complex64; 4], momentum: FourMomentum) -> Self {
        VectorField {
            components,
            momentum,
        }
    }
}

/// Ψ0 = A^μ γ0γ_μ.
pub fn vector_embed(alg: &CliffordAlgebra, a: &VectorField) -> CMat {
    let g0 = &alg.gammas()[0];
    let mut m = CMat::zeros(alg.dim(), alg.dim());
    for mu in 0..4 {
        m += (g0 * &alg.gammas()[mu]).map(|c| c * a.components[mu]);
    }
    m
}

/// Momentum-space free-Maxwell operator: R^μ = (k·k)A^μ − k^μ(k·A).
pub fn maxwell_residual(a: &VectorField) -> [Complex64; 4] {
    let k = a.momentum.0;
    let kk = a.momentum.mass_squared();
    // k·A with signature (+,−,−,−)
    let ka = Complex64::new(k[0], 0.0) * a.components[0]
        - Complex64::new(k[1], 0.0) * a.components[1]
        - Complex64::new(k[2], 0.0) * a.components[2]
        - Complex64::new(k[3], 0.0) * a.components[3];
    let mut r = [Complex64::default(); 4];
    for mu in 0..4 {
        r[mu] = Complex64::new(kk, 0.0) * a.components[mu] - Complex64::new(k[mu], 0.0) * ka;
    }
    r
}

pub fn maxwell_residual_norm(a: &VectorField) -> f64 {
    maxwell_residual(a).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// The frozen Bargmann–Wigner operator applied to the vector embedding.
pub fn bw_operator(alg: &CliffordAlgebra, a: &VectorField) -> CMat {
    let sk = alg.slash(&a.momentum.0);
    let g0 = &alg.gammas()[0];
    let psi0 = vector_embed(alg, a);
    &sk * (&sk * &psi0 - &psi0 * g0 * &sk * g0)
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceSample {
    pub s_residual: f64,
    pub maxwell_residual: f64,
    pub consistent: bool,
}

/// Single-field equivalence report: S = 0 must coincide with
/// Maxwell-residual = 0 at the given tolerance.
pub fn bargmann_wigner_check(alg: &CliffordAlgebra, a: &VectorField, tol: f64) -> EquivalenceSample {
    let s = max_norm(&bw_operator(alg, a));
    let m = maxwell_residual_norm(a);
    EquivalenceSample {
        s_residual: s,
        maxwell_residual: m,
        consistent: (s < tol) == (m < tol),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub samples: usize,
    pub max_s_residual: f64,
    pub max_maxwell_residual: f64,
    pub counterexamples: Vec<CounterExample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterExample {
    pub trial: usize,
    pub k: [f64; 4],
    pub a: [[f64; 2]; 4],
    pub s_residual: f64,
    pub maxwell_residual: f64,
}

/// Seeded randomized equivalence suite. The sampler cycles through
/// generic fields, pure-gauge fields (on- and off-shell k), and
/// transverse fields on null momenta, so both zero and nonzero branches
/// of the equivalence are exercised.
pub fn equivalence_suite(
    alg: &CliffordAlgebra,
    seed: u64,
    samples: usize,
    tol: f64,
) -> EquivalenceReport {
    let mut max_s = 0.0f64;
    let mut max_m = 0.0f64;
    let mut counterexamples = Vec::new();
    for trial in 0..samples {
        let mut rng = trial_rng(seed, trial as u64);
        let a = sample_field(&mut rng, trial % 4);
        let check = bargmann_wigner_check(alg, &a, tol);
        max_s = max_s.max(check.s_residual);
        max_m = max_m.max(check.maxwell_residual);
        if !check.consistent {
            counterexamples.push(CounterExample {
                trial,
                k: a.momentum.0,
                a: a.components.map(|c| [c.re, c.im]),
                s_residual: check.s_residual,
                maxwell_residual: check.maxwell_residual,
            });
        }
    }
    EquivalenceReport {
        samples,
        max_s_residual: max_s,
        max_maxwell_residual: max_m,
        counterexamples,
    }
}

fn rand_c(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(2.0 * rng.gen::<f64>() - 1.0, 2.0 * rng.gen::<f64>() - 1.0)
}

fn sample_field(rng: &mut impl Rng, kind: usize) -> VectorField {
    match kind {
        // generic field, generic momentum
        0 => {
            let k = FourMomentum([
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
            ]);
            VectorField::new([rand_c(rng), rand_c(rng), rand_c(rng), rand_c(rng)], k)
        }
        // pure gauge on a generically off-shell momentum
        1 => {
            let k = FourMomentum([
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
            ]);
            let scale = rand_c(rng);
            let comps = [
                scale * Complex64::new(k.0[0], 0.0),
                scale * Complex64::new(k.0[1], 0.0),
                scale * Complex64::new(k.0[2], 0.0),
                scale * Complex64::new(k.0[3], 0.0),
            ];
            VectorField::new(comps, k)
        }
        // transverse field on a null momentum
        2 => {
            let (kx, ky, kz) = (
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
            );
            let e = (kx * kx + ky * ky + kz * kz).sqrt();
            let k = FourMomentum([e, kx, ky, kz]);
            // project a random field onto transversality k·A = 0 by
            // subtracting the k-parallel part along a non-degenerate dual
            let mut a = [rand_c(rng), rand_c(rng), rand_c(rng), rand_c(rng)];
            let ka = Complex64::new(k.0[0], 0.0) * a[0]
                - Complex64::new(k.0[1], 0.0) * a[1]
                - Complex64::new(k.0[2], 0.0) * a[2]
                - Complex64::new(k.0[3], 0.0) * a[3];
            // use the time direction to cancel k·A (k^0 = e > 0)
            a[0] -= ka / Complex64::new(e, 0.0);
            VectorField::new(a, k)
        }
        // generic field on a null momentum (nonzero residuals both sides)
        _ => {
            let (kx, ky, kz) = (
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
            );
            let e = (kx * kx + ky * ky + kz * kz).sqrt();
            let k = FourMomentum([e, kx, ky, kz]);
            VectorField::new([rand_c(rng), rand_c(rng), rand_c(rng), rand_c(rng)], k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build_algebra;
    use crate::dirac::{parity_transform, MatrixField};
    use crate::{TOL_ALGEBRAIC, TOL_NUMERIC};
    use proptest::prelude::*;

    fn alg4() -> CliffordAlgebra {
        build_algebra(4).unwrap()
    }

    #[test]
    fn basis_element_decomposes_to_unit_coefficient() {
        let alg = alg4();
        let basis = ChannelBasis::new(&alg).unwrap();
        let g0g2 = &alg.gammas()[0] * &alg.gammas()[2];
        let c = basis.decompose(&g0g2).unwrap();
        assert!((c.vector[2][0] - 1.0).abs() < TOL_ALGEBRAIC);
        for (i, v) in c.vector.iter().enumerate() {
            if i != 2 {
                assert!(v[0].abs() < TOL_ALGEBRAIC && v[1].abs() < TOL_ALGEBRAIC);
            }
        }
        assert!(c.scalar[0].abs() < TOL_ALGEBRAIC);
        assert!(c.reconstruction_residual < TOL_ALGEBRAIC);
    }

    #[test]
    fn reference_solution_has_equal_vector_and_pseudovector_weight() {
        let alg = alg4();
        let basis = ChannelBasis::new(&alg).unwrap();
        let psi = crate::dirac::reference_solution(&alg);
        let c = basis.decompose(&psi).unwrap();
        // transverse (1, −i)/4 combination in the vector channel
        assert!((c.vector[1][0] - 0.25).abs() < TOL_ALGEBRAIC);
        assert!((c.vector[2][1] + 0.25).abs() < TOL_ALGEBRAIC);
        // pseudovector carries the same weight with opposite sign (V−A)
        assert!((c.pseudovector[1][0] + 0.25).abs() < TOL_ALGEBRAIC);
        assert!((c.pseudovector[2][1] - 0.25).abs() < TOL_ALGEBRAIC);
        assert!(c.scalar[0].abs() < TOL_ALGEBRAIC && c.pseudoscalar[0].abs() < TOL_ALGEBRAIC);
        assert!(c.reconstruction_residual < TOL_ALGEBRAIC);
    }

    #[test]
    fn wrong_dimension_rejected() {
        let alg6 = build_algebra(6).unwrap();
        assert!(ChannelBasis::new(&alg6).is_err());
    }

    #[test]
    fn vector_embed_time_component_is_identity() {
        let alg = alg4();
        let a = VectorField::new(
            [
                Complex64::new(1.0, 0.0),
                Complex64::default(),
                Complex64::default(),
                Complex64::default(),
            ],
            FourMomentum::new(1.0, 0.0, 0.0, 0.0),
        );
        let m = vector_embed(&alg, &a);
        assert!(max_norm(&(m - crate::linalg::ident(4))) < TOL_ALGEBRAIC);
    }

    #[test]
    fn embed_decompose_roundtrip() {
        let alg = alg4();
        let basis = ChannelBasis::new(&alg).unwrap();
        let a = VectorField::new(
            [
                Complex64::new(0.3, -0.1),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(-0.5, 0.25),
            ],
            FourMomentum::new(1.0, 0.0, 0.0, 1.0),
        );
        let c = basis.decompose(&vector_embed(&alg, &a)).unwrap();
        for mu in 0..4 {
            assert!((c.vector[mu][0] - a.components[mu].re).abs() < TOL_ALGEBRAIC);
            assert!((c.vector[mu][1] - a.components[mu].im).abs() < TOL_ALGEBRAIC);
        }
    }

    #[test]
    fn polarization_basis_is_orthonormal() {
        let alg = alg4();
        let basis = ChannelBasis::new(&alg).unwrap();
        assert!(basis.polarization_orthonormality_residual() < TOL_ALGEBRAIC);
    }

    #[test]
    fn maxwell_residual_cases() {
        // pure gauge: R = 0
        let k = FourMomentum::new(2.0, 0.0, 0.0, 0.0);
        let gauge = VectorField::new(
            [
                Complex64::new(2.0, 0.0),
                Complex64::default(),
                Complex64::default(),
                Complex64::default(),
            ],
            k,
        );
        assert!(maxwell_residual_norm(&gauge) < TOL_ALGEBRAIC);
        // transverse on-shell: R = 0
        let k = FourMomentum::new(1.0, 0.0, 0.0, 1.0);
        let trans = VectorField::new(
            [
                Complex64::default(),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::default(),
            ],
            k,
        );
        assert!(maxwell_residual_norm(&trans) < TOL_ALGEBRAIC);
        // massive-like: R = (0,1,0,0)
        let k = FourMomentum::new(1.0, 0.0, 0.0, 0.0);
        let massive = VectorField::new(
            [
                Complex64::default(),
                Complex64::new(1.0, 0.0),
                Complex64::default(),
                Complex64::default(),
            ],
            k,
        );
        let r = maxwell_residual(&massive);
        assert!((r[1] - Complex64::new(1.0, 0.0)).norm() < TOL_ALGEBRAIC);
        assert!(r[0].norm() < TOL_ALGEBRAIC && r[2].norm() < TOL_ALGEBRAIC);
    }

    #[test]
    fn structured_equivalence_cases() {
        let alg = alg4();
        // on-shell transverse: both residuals zero
        let trans = VectorField::new(
            [
                Complex64::default(),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::default(),
            ],
            FourMomentum::new(1.0, 0.0, 0.0, 1.0),
        );
        let s = bargmann_wigner_check(&alg, &trans, TOL_NUMERIC);
        assert!(s.s_residual < TOL_NUMERIC && s.maxwell_residual < TOL_NUMERIC);
        // pure gauge off-shell: both zero under the frozen operator
        let gauge = VectorField::new(
            [
                Complex64::new(2.0, 0.0),
                Complex64::default(),
                Complex64::default(),
                Complex64::default(),
            ],
            FourMomentum::new(2.0, 0.0, 0.0, 0.0),
        );
        let s = bargmann_wigner_check(&alg, &gauge, TOL_NUMERIC);
        assert!(s.consistent);
        assert!(s.maxwell_residual < TOL_NUMERIC);
        // massive-like: both nonzero
        let massive = VectorField::new(
            [
                Complex64::default(),
                Complex64::new(1.0, 0.0),
                Complex64::default(),
                Complex64::default(),
            ],
            FourMomentum::new(1.0, 0.0, 0.0, 0.0),
        );
        let s = bargmann_wigner_check(&alg, &massive, TOL_NUMERIC);
        assert!(s.consistent && s.maxwell_residual > 0.5);
    }

    #[test]
    fn randomized_equivalence_suite_has_no_counterexamples() {
        let alg = alg4();
        let report = equivalence_suite(&alg, 1234, 200, TOL_NUMERIC);
        assert_eq!(report.samples, 200);
        assert!(
            report.counterexamples.is_empty(),
            "counterexamples: {:?}",
            report.counterexamples
        );
    }

    #[test]
    fn parity_covariance_of_decomposition() {
        let alg = alg4();
        let basis = ChannelBasis::new(&alg).unwrap();
        let k = FourMomentum::new(1.0, 0.3, -0.2, 0.5);
        let a = VectorField::new(
            [
                Complex64::new(0.7, 0.1),
                Complex64::new(-0.2, 0.4),
                Complex64::new(0.9, 0.0),
                Complex64::new(0.1, -0.6),
            ],
            k,
        );
        let field = MatrixField::new(vector_embed(&alg, &a), k, 0.0);
        let p = parity_transform(&alg, &field).unwrap();
        let c0 = basis.decompose(&field.amplitude).unwrap();
        let cp = basis.decompose(&p.amplitude).unwrap();
        // vector: time component preserved, spatial flipped
        assert!((cp.vector[0][0] - c0.vector[0][0]).abs() < TOL_ALGEBRAIC);
        for mu in 1..4 {
            assert!((cp.vector[mu][0] + c0.vector[mu][0]).abs() < TOL_ALGEBRAIC);
            assert!((cp.vector[mu][1] + c0.vector[mu][1]).abs() < TOL_ALGEBRAIC);
        }
        assert_eq!(p.momentum, k.space_reflected());
    }

    proptest! {
        #[test]
        fn decompose_reconstructs_any_matrix(seed in 0u64..300) {
            let alg = alg4();
            let basis = ChannelBasis::new(&alg).unwrap();
            let mut rng = trial_rng(seed, 7);
            let m = CMat::from_fn(4, 4, |_, _| {
                Complex64::new(rand::Rng::gen::<f64>(&mut rng) - 0.5, rand::Rng::gen::<f64>(&mut rng) - 0.5)
            });
            let c = basis.decompose(&m).unwrap();
            prop_assert!(c.reconstruction_residual < 1e-12);
        }
    }
}
