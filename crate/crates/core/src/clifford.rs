//! Explicit matrix representations of the Clifford algebra C_N.
//!
//! Base case N = 4 is the Dirac representation (γ0 diagonal, γ_i in
//! off-diagonal Pauli blocks). Larger even N comes from the standard
//! doubling Γ_μ = γ_μ ⊗ diag(1,−1) plus two new generators I ⊗ (·)
//! whose squares are −I. Construction is deterministic: the same N
//! always yields bit-identical matrices.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{anticommutator, ident, kronecker, max_norm, CMat, I, ONE, ZERO};

/// Phase in γ5 = phase · γ0γ1γ2γ3.
///
/// Fixed to +i: this is the phase under which the explicit massless
/// solution ¼(1−γ5)γ0(γ1−iγ2) at k = (1,0,0,1) is annihilated exactly
/// by slash(k). See `dirac` tests for the check.
pub const GAMMA5_PHASE: Complex64 = Complex64::new(0.0, 1.0);

/// Lorentzian metric data for C_N: signature (+1, −1, ..., −1).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metric {
    pub dimension: usize,
    pub signature: Vec<i8>,
}

impl Metric {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension < 4 || dimension % 2 != 0 {
            return Err(Error::Dimension(dimension));
        }
        let mut signature = vec![-1i8; dimension];
        signature[0] = 1;
        Ok(Metric {
            dimension,
            signature,
        })
    }

    pub fn g(&self, mu: usize, nu: usize) -> f64 {
        if mu == nu {
            self.signature[mu] as f64
        } else {
            0.0
        }
    }
}

/// Label describing how a generator was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GeneratorLabel {
    /// σ_μν with μ,ν in 0..4.
    Lorentz(usize, usize),
    /// Product of γ_a over a nonempty subset of {4..N−1}; empty = identity.
    ScalarProduct(Vec<usize>),
    /// Chirally projected scalar product.
    ChiralScalar {
        right_handed: bool,
        subset: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct CliffordAlgebra {
    metric: Metric,
    gammas: Vec<CMat>,
    gamma5: CMat,
    proj_plus: CMat,
    proj_minus: CMat,
}

fn pauli() -> [CMat; 3] {
    [
        CMat::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]),
        CMat::from_row_slice(2, 2, &[ZERO, -I, I, ZERO]),
        CMat::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE]),
    ]
}

fn dirac_base() -> Vec<CMat> {
    let id2 = ident(2);
    let z2 = CMat::zeros(2, 2);
    let mut g0 = CMat::zeros(4, 4);
    g0.view_mut((0, 0), (2, 2)).copy_from(&id2);
    g0.view_mut((2, 2), (2, 2)).copy_from(&(-&id2));
    let mut gs = vec![g0];
    for s in pauli() {
        let mut g = CMat::zeros(4, 4);
        g.view_mut((0, 2), (2, 2)).copy_from(&s);
        g.view_mut((2, 0), (2, 2)).copy_from(&(-&s));
        g.view_mut((0, 0), (2, 2)).copy_from(&z2);
        gs.push(g);
    }
    gs
}

/// Builds C_N for even N ≥ 4.
pub fn build_algebra(n: usize) -> Result<CliffordAlgebra> {
    let metric = Metric::new(n)?;
    let mut gammas = dirac_base();
    while gammas.len() < n {
        let d = gammas[0].nrows();
        let dz = CMat::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE]);
        let mut next: Vec<CMat> = gammas.iter().map(|g| kronecker(g, &dz)).collect();
        let idd = ident(d);
        let off_i = CMat::from_row_slice(2, 2, &[ZERO, I, I, ZERO]);
        let off_r = CMat::from_row_slice(2, 2, &[ZERO, ONE, -ONE, ZERO]);
        next.push(kronecker(&idd, &off_i));
        next.push(kronecker(&idd, &off_r));
        gammas = next;
    }
    let gamma5 = (&gammas[0] * &gammas[1] * &gammas[2] * &gammas[3]).map(|c| c * GAMMA5_PHASE);
    let dim = gammas[0].nrows();
    let half = Complex64::new(0.5, 0.0);
    let proj_plus = (ident(dim) + &gamma5).map(|c| c * half);
    let proj_minus = (ident(dim) - &gamma5).map(|c| c * half);
    Ok(CliffordAlgebra {
        metric,
        gammas,
        gamma5,
        proj_plus,
        proj_minus,
    })
}

impl CliffordAlgebra {
    /// Clifford dimension N.
    pub fn n(&self) -> usize {
        self.metric.dimension
    }

    /// Matrix size 2^(N/2).
    pub fn dim(&self) -> usize {
        self.gammas[0].nrows()
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn gamma(&self, mu: usize) -> Result<&CMat> {
        self.gammas.get(mu).ok_or(Error::IndexOutOfRange {
            index: mu,
            n: self.n(),
        })
    }

    pub fn gammas(&self) -> &[CMat] {
        &self.gammas
    }

    /// γ5 = GAMMA5_PHASE · γ0γ1γ2γ3 (always the first four generators).
    pub fn gamma5(&self) -> &CMat {
        &self.gamma5
    }

    /// Chiral projectors P_± = (1 ± γ5)/2.
    pub fn chiral_projector(&self, right_handed: bool) -> &CMat {
        if right_handed {
            &self.proj_plus
        } else {
            &self.proj_minus
        }
    }

    /// σ_μν = (i/2)[γ_μ, γ_ν].
    pub fn sigma(&self, mu: usize, nu: usize) -> Result<CMat> {
        let gm = self.gamma(mu)?;
        let gn = self.gamma(nu)?;
        Ok((gm * gn - gn * gm).map(|c| c * Complex64::new(0.0, 0.5)))
    }

    /// slash(k) = k_μ γ^μ with the index lowered by the metric,
    /// using the first four generators.
    pub fn slash(&self, k: &[f64; 4]) -> CMat {
        let mut m = CMat::zeros(self.dim(), self.dim());
        for mu in 0..4 {
            let kl = self.metric.g(mu, mu) * k[mu];
            m += self.gammas[mu].map(|c| c * Complex64::new(kl, 0.0));
        }
        m
    }

    /// Product of γ_a over `subset` (indices into 0..N), in index order.
    /// An empty subset gives the identity.
    pub fn gamma_product(&self, subset: &[usize]) -> Result<CMat> {
        let mut m = ident(self.dim());
        for &a in subset {
            m *= self.gamma(a)?;
        }
        Ok(m)
    }

    /// Max residual of {γ_μ, γ_ν} − 2 g_μν I over all index pairs.
    pub fn anticommutation_residual(&self) -> f64 {
        let id = ident(self.dim());
        let mut worst = 0.0f64;
        for mu in 0..self.n() {
            for nu in 0..self.n() {
                let target = id.map(|c| c * Complex64::new(2.0 * self.metric.g(mu, nu), 0.0));
                let r = anticommutator(&self.gammas[mu], &self.gammas[nu]) - target;
                worst = worst.max(max_norm(&r));
            }
        }
        worst
    }

    /// Max residual of the Hermiticity pattern: γ0 Hermitian, γ_i
    /// anti-Hermitian for i ≥ 1, and γ0γ_μ Hermitian for μ in 0..4.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = max_norm(&(&self.gammas[0] - self.gammas[0].adjoint()));
        for g in &self.gammas[1..] {
            worst = worst.max(max_norm(&(g + g.adjoint())));
        }
        for mu in 0..4 {
            let ch = &self.gammas[0] * &self.gammas[mu];
            worst = worst.max(max_norm(&(&ch - ch.adjoint())));
        }
        worst
    }

    /// Max residual of the γ5 identities: γ5² = I, {γ5, γ_μ} = 0 for
    /// μ < 4, [γ5, γ_a] = 0 for a ≥ 4, and the projector algebra.
    pub fn gamma5_residual(&self) -> f64 {
        let id = ident(self.dim());
        let mut worst = max_norm(&(&self.gamma5 * &self.gamma5 - &id));
        for mu in 0..4 {
            worst = worst.max(max_norm(&anticommutator(&self.gamma5, &self.gammas[mu])));
        }
        for a in 4..self.n() {
            let c = &self.gamma5 * &self.gammas[a] - &self.gammas[a] * &self.gamma5;
            worst = worst.max(max_norm(&c));
        }
        let pp = &self.proj_plus;
        let pm = &self.proj_minus;
        worst = worst.max(max_norm(&(pp * pp - pp)));
        worst = worst.max(max_norm(&(pm * pm - pm)));
        worst = worst.max(max_norm(&(pp + pm - id)));
        worst = worst.max(max_norm(&(pp * pm)));
        worst
    }

    pub fn export(&self) -> AlgebraExport {
        AlgebraExport {
            n: self.n(),
            signature: self.metric.signature.clone(),
            gamma5_phase: [GAMMA5_PHASE.re, GAMMA5_PHASE.im],
            gammas: self.gammas.iter().map(matrix_json).collect(),
        }
    }
}

/// Row-major [re, im] pairs.
pub fn matrix_json(m: &CMat) -> Vec<[f64; 2]> {
    let mut out = Vec::with_capacity(m.len());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let c = m[(i, j)];
            out.push([c.re, c.im]);
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraExport {
    pub n: usize,
    pub signature: Vec<i8>,
    pub gamma5_phase: [f64; 2],
    pub gammas: Vec<Vec<[f64; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TOL_ALGEBRAIC;

    #[test]
    fn n4_defining_relations() {
        let alg = build_algebra(4).unwrap();
        assert_eq!(alg.dim(), 4);
        assert!(alg.anticommutation_residual() < TOL_ALGEBRAIC);
        assert!(alg.hermiticity_residual() < TOL_ALGEBRAIC);
        assert!(alg.gamma5_residual() < TOL_ALGEBRAIC);
    }

    #[test]
    fn n6_extra_generators_square_to_minus_identity() {
        let alg = build_algebra(6).unwrap();
        assert_eq!(alg.dim(), 8);
        let id = ident(8);
        for a in 4..6 {
            let g = alg.gamma(a).unwrap();
            assert!(max_norm(&(g * g + &id)) < TOL_ALGEBRAIC);
        }
        assert!(alg.anticommutation_residual() < TOL_ALGEBRAIC);
    }

    #[test]
    fn odd_dimension_rejected() {
        assert!(matches!(build_algebra(3), Err(Error::Dimension(3))));
        assert!(matches!(build_algebra(5), Err(Error::Dimension(5))));
        assert!(matches!(build_algebra(2), Err(Error::Dimension(2))));
    }

    #[test]
    fn larger_algebras_satisfy_all_invariants() {
        for n in [8usize, 10] {
            let alg = build_algebra(n).unwrap();
            assert_eq!(alg.dim(), 1 << (n / 2));
            assert!(alg.anticommutation_residual() < TOL_ALGEBRAIC, "n={n}");
            assert!(alg.hermiticity_residual() < TOL_ALGEBRAIC, "n={n}");
            assert!(alg.gamma5_residual() < TOL_ALGEBRAIC, "n={n}");
        }
    }

    #[test]
    fn sigma_antisymmetry_and_product_form() {
        let alg = build_algebra(4).unwrap();
        let s11 = alg.sigma(1, 1).unwrap();
        assert!(max_norm(&s11) < TOL_ALGEBRAIC);
        // sigma(0,1) = i γ0γ1, from γ0γ1 = −γ1γ0
        let s01 = alg.sigma(0, 1).unwrap();
        let prod = (alg.gamma(0).unwrap() * alg.gamma(1).unwrap()).map(|c| c * I);
        assert!(max_norm(&(s01 - prod)) < TOL_ALGEBRAIC);
        let s10 = alg.sigma(1, 0).unwrap();
        let s01 = alg.sigma(0, 1).unwrap();
        assert!(max_norm(&(s01 + s10)) < TOL_ALGEBRAIC);
    }

    #[test]
    fn sigma_closes_on_lorentz_algebra() {
        // Oracle: [σ_μν, σ_ρτ] = 2i (g_νρ σ_μτ − g_μρ σ_ντ − g_ντ σ_μρ + g_μτ σ_νρ)
        let alg = build_algebra(4).unwrap();
        let g = |a: usize, b: usize| alg.metric().g(a, b);
        for mu in 0..4 {
            for nu in 0..4 {
                for rho in 0..4 {
                    for tau in 0..4 {
                        let lhs = commutator_of(&alg, (mu, nu), (rho, tau));
                        let rhs = alg.sigma(mu, tau).unwrap().map(|c| c * scale(g(nu, rho)))
                            - alg.sigma(nu, tau).unwrap().map(|c| c * scale(g(mu, rho)))
                            - alg.sigma(mu, rho).unwrap().map(|c| c * scale(g(nu, tau)))
                            + alg.sigma(nu, rho).unwrap().map(|c| c * scale(g(mu, tau)));
                        assert!(
                            max_norm(&(lhs - rhs)) < 1e-11,
                            "so(3,1) closure failed at ({mu},{nu}),({rho},{tau})"
                        );
                    }
                }
            }
        }
    }

    fn scale(g: f64) -> Complex64 {
        Complex64::new(0.0, 2.0 * g)
    }

    fn commutator_of(alg: &CliffordAlgebra, a: (usize, usize), b: (usize, usize)) -> CMat {
        let sa = alg.sigma(a.0, a.1).unwrap();
        let sb = alg.sigma(b.0, b.1).unwrap();
        &sa * &sb - &sb * &sa
    }

    #[test]
    fn gamma5_squares_to_identity_and_anticommutes() {
        let alg = build_algebra(4).unwrap();
        let g5 = alg.gamma5();
        assert!(max_norm(&(g5 * g5 - ident(4))) < TOL_ALGEBRAIC);
        assert!(max_norm(&anticommutator(g5, alg.gamma(2).unwrap())) < TOL_ALGEBRAIC);
    }

    #[test]
    fn gamma5_commutes_with_extra_gammas_at_n6() {
        let alg = build_algebra(6).unwrap();
        let g5 = alg.gamma5();
        let g4 = alg.gamma(4).unwrap();
        assert!(max_norm(&(g5 * g4 - g4 * g5)) < TOL_ALGEBRAIC);
    }

    #[test]
    fn construction_is_deterministic() {
        for n in [4usize, 6] {
            let a = build_algebra(n).unwrap();
            let b = build_algebra(n).unwrap();
            for (x, y) in a.gammas().iter().zip(b.gammas()) {
                assert_eq!(x.as_slice(), y.as_slice());
            }
            assert_eq!(a.gamma5().as_slice(), b.gamma5().as_slice());
        }
    }

    #[test]
    fn index_out_of_range() {
        let alg = build_algebra(4).unwrap();
        assert!(alg.gamma(4).is_err());
        assert!(alg.sigma(0, 7).is_err());
    }

    #[test]
    fn export_is_row_major() {
        let alg = build_algebra(4).unwrap();
        let e = alg.export();
        assert_eq!(e.n, 4);
        assert_eq!(e.gammas.len(), 4);
        // γ0 in the Dirac basis: diag(1,1,−1,−1), row-major entry 0 is 1.
        assert_eq!(e.gammas[0][0], [1.0, 0.0]);
        assert_eq!(e.gammas[0][5], [1.0, 0.0]);
        assert_eq!(e.gammas[0][10], [-1.0, 0.0]);
    }
}
