//! Plane-wave sector of the matrix Dirac equation and its right-acting
//! partner.
//!
//! Plane waves are Ψ0 e^{−ik·x}, so derivatives become −ik_μ and the
//! left equation residual is (slash(k) − M)·Ψ0. The right-acting
//! residual is frozen as Ψ0·(slash(k) − M)·γ0: under this convention
//! the adjoint of any standard Dirac solution, Ψ0 = ψψ†γ0, is an exact
//! right solution (see tests).

use num_complex::Complex64;
use serde::Serialize;

use crate::clifford::{matrix_json, CliffordAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{
    self, frobenius, ident, left_mul_operator, max_norm, null_space, right_mul_operator,
    unvectorize, CMat,
};
use crate::SVD_RANK_REL;

/// Four-momentum k^μ = (energy, 3-momentum), natural units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourMomentum(pub [f64; 4]);

impl FourMomentum {
    pub fn new(e: f64, kx: f64, ky: f64, kz: f64) -> Self {
        FourMomentum([e, kx, ky, kz])
    }

    /// k·k with signature (+,−,−,−).
    pub fn dot(&self, other: &FourMomentum) -> f64 {
        let a = self.0;
        let b = other.0;
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
    }

    pub fn mass_squared(&self) -> f64 {
        self.dot(self)
    }

    /// |k·k − M²|, the Klein–Gordon residual.
    pub fn on_shell_residual(&self, mass: f64) -> f64 {
        (self.mass_squared() - mass * mass).abs()
    }

    /// (k^0, −k⃗).
    pub fn space_reflected(&self) -> FourMomentum {
        FourMomentum([self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }
}

/// Which of the two plane-wave equations a field satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
    Both,
    Neither,
}

/// A plane-wave matrix amplitude with its momentum and mass.
#[derive(Debug, Clone)]
pub struct MatrixField {
    pub amplitude: CMat,
    pub momentum: FourMomentum,
    pub mass: f64,
}

impl MatrixField {
    pub fn new(amplitude: CMat, momentum: FourMomentum, mass: f64) -> Self {
        MatrixField {
            amplitude,
            momentum,
            mass,
        }
    }

    pub fn export(&self, n: usize) -> MatrixFieldExport {
        MatrixFieldExport {
            n,
            k: self.momentum.0,
            m: self.mass,
            amplitude: matrix_json(&self.amplitude),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixFieldExport {
    pub n: usize,
    pub k: [f64; 4],
    pub m: f64,
    pub amplitude: Vec<[f64; 2]>,
}

/// ⟨A|B⟩ = tr(A† B), the generalized inner product.
pub fn inner_product(a: &MatrixField, b: &MatrixField) -> Result<Complex64> {
    check_same_size(&a.amplitude, &b.amplitude)?;
    Ok(frobenius(&a.amplitude, &b.amplitude))
}

/// Commutator action O·Ψ − Ψ·O (hole interpretation for right-side
/// components: right-acting operators acquire a minus).
pub fn operator_action(op: &CMat, field: &MatrixField) -> Result<MatrixField> {
    check_same_size(op, &field.amplitude)?;
    Ok(MatrixField {
        amplitude: op * &field.amplitude - &field.amplitude * op,
        momentum: field.momentum,
        mass: field.mass,
    })
}

/// γ0 Ψ γ0 with the momentum space-reflected.
pub fn parity_transform(alg: &CliffordAlgebra, field: &MatrixField) -> Result<MatrixField> {
    let g0 = alg.gamma(0)?;
    check_same_size(g0, &field.amplitude)?;
    Ok(MatrixField {
        amplitude: g0 * &field.amplitude * g0,
        momentum: field.momentum.space_reflected(),
        mass: field.mass,
    })
}

/// The plane-wave problem: algebra, momentum, mass, optional P_D.
pub struct PlaneWaveProblem<'a> {
    pub algebra: &'a CliffordAlgebra,
    pub momentum: FourMomentum,
    pub mass: f64,
    pub projector: Option<CMat>,
}

impl<'a> PlaneWaveProblem<'a> {
    pub fn new(algebra: &'a CliffordAlgebra, momentum: FourMomentum, mass: f64) -> Self {
        PlaneWaveProblem {
            algebra,
            momentum,
            mass,
            projector: None,
        }
    }

    pub fn with_projector(mut self, p_d: CMat) -> Self {
        self.projector = Some(p_d);
        self
    }

    fn dirac_matrix(&self) -> CMat {
        let d = self.algebra.dim();
        self.algebra.slash(&self.momentum.0)
            - ident(d).map(|c| c * Complex64::new(self.mass, 0.0))
    }

    /// Operator applied from the left: (slash(k) − M), or
    /// P_D·γ0·(slash(k) − M) when a projector is present.
    pub fn left_operator(&self) -> CMat {
        let base = self.dirac_matrix();
        match &self.projector {
            None => base,
            Some(p) => p * self.algebra.gammas()[0].clone() * base,
        }
    }

    /// Operator applied from the right: (slash(k) − M)·γ0, followed by
    /// P_D when a projector is present.
    pub fn right_operator(&self) -> CMat {
        let base = self.dirac_matrix() * self.algebra.gammas()[0].clone();
        match &self.projector {
            None => base,
            Some(p) => base * p,
        }
    }

    pub fn left_residual(&self, psi0: &CMat) -> Result<CMat> {
        check_size(psi0, self.algebra.dim())?;
        Ok(self.left_operator() * psi0)
    }

    pub fn right_residual(&self, psi0: &CMat) -> Result<CMat> {
        check_size(psi0, self.algebra.dim())?;
        Ok(psi0 * self.right_operator())
    }

    /// Side classification of a field at the given tolerance.
    pub fn side(&self, psi0: &CMat, tol: f64) -> Result<Side> {
        let l = max_norm(&self.left_residual(psi0)?);
        let r = max_norm(&self.right_residual(psi0)?);
        Ok(match (l < tol, r < tol) {
            (true, true) => Side::Both,
            (true, false) => Side::Left,
            (false, true) => Side::Right,
            (false, false) => Side::Neither,
        })
    }

    /// Orthonormal basis (generalized inner product) of the null space
    /// of the residual map on the full matrix space.
    pub fn solution_space(&self, side: Side) -> Vec<CMat> {
        let d = self.algebra.dim();
        let map = match side {
            Side::Right => right_mul_operator(&self.right_operator()),
            _ => left_mul_operator(&self.left_operator()),
        };
        let ns = null_space(&map, SVD_RANK_REL);
        (0..ns.ncols())
            .map(|j| unvectorize(&CMat::from_column_slice(d * d, 1, ns.column(j).into_owned().as_slice()), d, d))
            .collect()
    }

    /// Intersection of the left and right solution spaces, from the
    /// stacked residual maps.
    pub fn simultaneous_solutions(&self) -> Vec<CMat> {
        let d = self.algebra.dim();
        let l = left_mul_operator(&self.left_operator());
        let r = right_mul_operator(&self.right_operator());
        let mut stacked = CMat::zeros(2 * d * d, d * d);
        stacked.view_mut((0, 0), (d * d, d * d)).copy_from(&l);
        stacked.view_mut((d * d, 0), (d * d, d * d)).copy_from(&r);
        let ns = null_space(&stacked, SVD_RANK_REL);
        (0..ns.ncols())
            .map(|j| unvectorize(&CMat::from_column_slice(d * d, 1, ns.column(j).into_owned().as_slice()), d, d))
            .collect()
    }

    /// Max deviation of the basis Gram matrix from the identity.
    pub fn gram_residual(&self, basis: &[CMat]) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let g = frobenius(a, b);
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }
}

/// The paper's explicit massless solution ¼(1−γ5)γ0(γ1−iγ2), a
/// left-handed state at k = (k,0,0,k).
pub fn reference_solution(alg: &CliffordAlgebra) -> CMat {
    let g0 = &alg.gammas()[0];
    let g1 = &alg.gammas()[1];
    let g2 = &alg.gammas()[2];
    let one_minus_g5 = ident(alg.dim()) - alg.gamma5();
    (one_minus_g5 * g0 * (g1 - g2.map(|c| c * linalg::I))).map(|c| c * Complex64::new(0.25, 0.0))
}

fn check_size(m: &CMat, d: usize) -> Result<()> {
    if m.nrows() != d || m.ncols() != d {
        return Err(Error::SizeMismatch {
            expected: d,
            got_rows: m.nrows(),
            got_cols: m.ncols(),
        });
    }
    Ok(())
}

fn check_same_size(a: &CMat, b: &CMat) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::SizeMismatch {
            expected: a.nrows(),
            got_rows: b.nrows(),
            got_cols: b.ncols(),
        });
    }
    Ok(())
}

/// Solution-space dump for JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct SolutionSpaceExport {
    pub n: usize,
    pub k: [f64; 4],
    pub m: f64,
    pub dimension: usize,
    pub gram_residual: f64,
    pub klein_gordon_residual: f64,
    pub basis: Vec<Vec<[f64; 2]>>,
}

pub fn export_solution_space(
    problem: &PlaneWaveProblem<'_>,
    basis: &[CMat],
) -> SolutionSpaceExport {
    SolutionSpaceExport {
        n: problem.algebra.n(),
        k: problem.momentum.0,
        m: problem.mass,
        dimension: basis.len(),
        gram_residual: problem.gram_residual(basis),
        klein_gordon_residual: problem.momentum.on_shell_residual(problem.mass),
        basis: basis.iter().map(matrix_json).collect(),
    }
}

/// Lorentz covariance check for the Eq. UΨU† transformation contract:
/// if Ψ0 solves at k, UΨ0U† solves at the transformed momentum.
pub fn covariance_residual(
    alg: &CliffordAlgebra,
    momentum: FourMomentum,
    mass: f64,
    psi0: &CMat,
    mu: usize,
    nu: usize,
    theta: f64,
) -> Result<f64> {
    let sigma = alg.sigma(mu, nu)?;
    let u = linalg::expm(&sigma.map(|c| c * Complex64::new(0.0, theta / 2.0)));
    let u_inv = linalg::expm(&sigma.map(|c| c * Complex64::new(0.0, -theta / 2.0)));
    // transformed slash: U slash(k) U^{-1}; extract k' by trace pairing
    let slash_p = &u * alg.slash(&momentum.0) * &u_inv;
    let d = alg.dim() as f64;
    let mut kp = [0.0f64; 4];
    for m in 0..4 {
        // k'^μ = tr(γ^μ slash') / d  since tr(γ^μ γ^ν) = d g^{μν}
        let t = linalg::trace(&(&alg.gammas()[m] * &slash_p));
        kp[m] = t.re / d;
    }
    let kp = FourMomentum(kp);
    // sanity: rebuilt slash must match the conjugated one
    let rebuild = max_norm(&(alg.slash(&kp.0) - &slash_p));
    let problem = PlaneWaveProblem::new(alg, kp, mass);
    let transformed = &u * psi0 * u.adjoint();
    let resid = max_norm(&problem.left_residual(&transformed)?);
    Ok(resid.max(rebuild))
}
