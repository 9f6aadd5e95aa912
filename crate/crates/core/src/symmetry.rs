//! Scalar symmetry algebra of the massless matrix Dirac equation.
//!
//! The candidate generators are the products of γ_a, a = 4..N−1 (2^(N−4)
//! of them up to phase, the empty product being the identity). Each is
//! verified to commute with every 4-d Lorentz generator σ_μν, then split
//! into chiral halves with (1 ± γ5)/2. The paper's U(2^((N−4)/2)) claim
//! is checked as the complex dimension of each chiral span together with
//! commutator closure and the existence of a Hermitian basis; no
//! explicit isomorphism is constructed.

use serde::Serialize;

use crate::clifford::{CliffordAlgebra, GeneratorLabel};
use crate::error::{Error, Result};
use crate::linalg::{
    commutator, ident, max_norm, orthonormal_columns, projection_residual, rank, span_matrix,
    vectorize, CMat,
};
use crate::{SVD_RANK_REL, TOL_ALGEBRAIC};

#[derive(Debug, Clone)]
pub struct SymmetryAlgebra {
    pub n: usize,
    /// Unprojected scalar products with their subset labels.
    pub generators: Vec<(GeneratorLabel, CMat)>,
    pub chiral_right: Vec<CMat>,
    pub chiral_left: Vec<CMat>,
    pub dim_right: usize,
    pub dim_left: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosureCertificate {
    pub max_residual: f64,
    pub pairs_checked: usize,
}

#[derive(Debug, Clone)]
pub struct ProjectorPair {
    pub p_p: CMat,
    pub p_d: CMat,
    pub rank_p: usize,
    pub rank_d: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub dim_right: usize,
    pub dim_left: usize,
    pub closure_residual: f64,
    pub generator_labels: Vec<String>,
}

fn subsets(lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let k = hi - lo;
    (0..(1usize << k))
        .map(|mask| (0..k).filter(|b| mask & (1 << b) != 0).map(|b| lo + b).collect())
        .collect()
}

/// Enumerates the scalar products of {γ_4..γ_(N−1)} and their chiral
/// decomposition. Every returned generator commutes with all σ_μν,
/// μ,ν in 0..4 (verified, not assumed).
pub fn enumerate_scalars(alg: &CliffordAlgebra) -> Result<SymmetryAlgebra> {
    let n = alg.n();
    let sigmas: Vec<CMat> = {
        let mut v = Vec::new();
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                v.push(alg.sigma(mu, nu)?);
            }
        }
        v
    };
    let mut generators: Vec<(GeneratorLabel, CMat)> = Vec::new();
    for subset in subsets(4, n) {
        let m = alg.gamma_product(&subset)?;
        for s in &sigmas {
            let c = max_norm(&commutator(&m, s));
            if c > TOL_ALGEBRAIC {
                return Err(Error::Projector(format!(
                    "scalar candidate {subset:?} fails to commute with a Lorentz generator \
                     (residual {c:.3e})"
                )));
            }
        }
        if !is_duplicate(&generators, &m) {
            generators.push((GeneratorLabel::ScalarProduct(subset), m));
        }
    }
    let pp = alg.chiral_projector(true);
    let pm = alg.chiral_projector(false);
    let chiral_right: Vec<CMat> = generators.iter().map(|(_, g)| pp * g).collect();
    let chiral_left: Vec<CMat> = generators.iter().map(|(_, g)| pm * g).collect();
    let dim_right = rank(&span_matrix(&chiral_right), SVD_RANK_REL);
    let dim_left = rank(&span_matrix(&chiral_left), SVD_RANK_REL);
    Ok(SymmetryAlgebra {
        n,
        generators,
        chiral_right,
        chiral_left,
        dim_right,
        dim_left,
    })
}

/// Deduplication by max-norm distance after phase alignment.
fn is_duplicate(existing: &[(GeneratorLabel, CMat)], candidate: &CMat) -> bool {
    existing
        .iter()
        .any(|(_, g)| phase_aligned_distance(g, candidate) < 1e-9)
}

fn phase_aligned_distance(a: &CMat, b: &CMat) -> f64 {
    // align on the largest-modulus entry of `a`
    let (mut idx, mut best) = (0usize, 0.0f64);
    for (i, c) in a.iter().enumerate() {
        if c.norm() > best {
            best = c.norm();
            idx = i;
        }
    }
    if best == 0.0 {
        return max_norm(b);
    }
    let bi = b.iter().nth(idx).copied().unwrap_or_default();
    if bi.norm() == 0.0 {
        return f64::MAX;
    }
    let phase = (a.iter().nth(idx).unwrap() / bi) / ((a.iter().nth(idx).unwrap() / bi).norm());
    max_norm(&(a - b.map(|c| c * phase)))
}

/// Commutator-closure certificate for an arbitrary generating set:
/// every pairwise commutator must lie in the span.
pub fn check_closure(basis: &[CMat], tol: f64) -> Result<ClosureCertificate> {
    assert!(!basis.is_empty());
    // orthonormalize the span once; per-pair residuals are then cheap
    let q = orthonormal_columns(&span_matrix(basis), 1e-12);
    let mut worst = 0.0f64;
    let mut pairs = 0usize;
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate().skip(i + 1) {
            let c = commutator(a, b);
            let v = vectorize(&c);
            let r = max_norm(&(&v - &q * (q.adjoint() * &v)));
            pairs += 1;
            if r > tol {
                return Err(Error::Closure { i, j, residual: r });
            }
            worst = worst.max(r);
        }
    }
    Ok(ClosureCertificate {
        max_residual: worst,
        pairs_checked: pairs,
    })
}

impl SymmetryAlgebra {
    /// Closure certificate of the chiral-right span.
    pub fn closure_right(&self) -> Result<ClosureCertificate> {
        check_closure(&self.chiral_right, 1e-10)
    }

    pub fn closure_left(&self) -> Result<ClosureCertificate> {
        check_closure(&self.chiral_left, 1e-10)
    }

    /// Full scalar span (both chiralities), which also contains the
    /// γ5-products (Lorentz pseudoscalars) and the identity.
    pub fn full_span(&self) -> Vec<CMat> {
        let mut v = self.chiral_right.clone();
        v.extend(self.chiral_left.iter().cloned());
        v
    }

    /// Generators that also survive a mass term: those commuting with γ0.
    /// No physical-selection claim is made for this subset.
    pub fn massive_filter(&self, alg: &CliffordAlgebra) -> Vec<(GeneratorLabel, CMat)> {
        let g0 = &alg.gammas()[0];
        self.generators
            .iter()
            .filter(|(_, g)| max_norm(&commutator(g, g0)) < TOL_ALGEBRAIC)
            .cloned()
            .collect()
    }

    pub fn report(&self) -> ClassificationReport {
        let closure = self
            .closure_right()
            .map(|c| c.max_residual)
            .unwrap_or(f64::INFINITY);
        ClassificationReport {
            n: self.n,
            dim_right: self.dim_right,
            dim_left: self.dim_left,
            closure_residual: closure,
            generator_labels: self
                .generators
                .iter()
                .map(|(l, _)| format!("{l:?}"))
                .collect(),
        }
    }
}

/// Validates a (P_P, P_D) pair: idempotency, mutual commutation,
/// membership in the scalar span ⊕ identity, and rank P_D ≤ rank P_P.
pub fn validate_projector_pair(
    sym: &SymmetryAlgebra,
    p_p: &CMat,
    p_d: &CMat,
) -> Result<ProjectorPair> {
    let d = sym.chiral_right[0].nrows();
    for (name, p) in [("P_P", p_p), ("P_D", p_d)] {
        if p.nrows() != d || p.ncols() != d {
            return Err(Error::SizeMismatch {
                expected: d,
                got_rows: p.nrows(),
                got_cols: p.ncols(),
            });
        }
        let idem = max_norm(&(p * p - p));
        if idem > 1e-10 {
            return Err(Error::Projector(format!(
                "{name} is not idempotent (residual {idem:.3e})"
            )));
        }
    }
    let comm = max_norm(&commutator(p_p, p_d));
    if comm > 1e-10 {
        return Err(Error::Projector(format!(
            "[P_P, P_D] != 0 (residual {comm:.3e})"
        )));
    }
    let mut span_mats = sym.full_span();
    span_mats.push(ident(d));
    let span = span_matrix(&span_mats);
    for (name, p) in [("P_P", p_p), ("P_D", p_d)] {
        let r = projection_residual(&span, p);
        if r > 1e-9 {
            return Err(Error::Projector(format!(
                "{name} is outside the scalar span (residual {r:.3e})"
            )));
        }
    }
    let rank_p = rank(p_p, SVD_RANK_REL);
    let rank_d = rank(p_d, SVD_RANK_REL);
    if rank_d > rank_p {
        return Err(Error::Projector(format!(
            "rank P_D = {rank_d} exceeds rank P_P = {rank_p}"
        )));
    }
    Ok(ProjectorPair {
        p_p: p_p.clone(),
        p_d: p_d.clone(),
        rank_p,
        rank_d,
    })
}

/// Orthonormal basis of the chiral span, for span-membership tests.
pub fn chiral_span_basis(mats: &[CMat]) -> CMat {
    orthonormal_columns(&span_matrix(mats), SVD_RANK_REL)
}

/// Membership residual of `m` in the span of `mats`.
pub fn span_membership_residual(mats: &[CMat], m: &CMat) -> f64 {
    let q = chiral_span_basis(mats);
    let v = vectorize(m);
    let resid = &v - &q * (q.adjoint() * &v);
    max_norm(&resid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build_algebra;

    #[test]
    fn n4_scalar_sector_is_identity_and_gamma5() {
        let alg = build_algebra(4).unwrap();
        let sym = enumerate_scalars(&alg).unwrap();
        assert_eq!(sym.generators.len(), 1); // empty product only
        assert_eq!(sym.dim_right, 1);
        assert_eq!(sym.dim_left, 1);
        // γ5 lies in the span of the two chiral projections
        assert!(span_membership_residual(&sym.full_span(), alg.gamma5()) < 1e-10);
    }

    #[test]
    fn n6_chiral_factors_have_dimension_four() {
        let alg = build_algebra(6).unwrap();
        let sym = enumerate_scalars(&alg).unwrap();
        assert_eq!(sym.generators.len(), 4);
        assert_eq!(sym.dim_right, 4); // u(2) as a complex span
        assert_eq!(sym.dim_left, 4);
        assert!(sym.closure_right().unwrap().max_residual < 1e-10);
        assert!(sym.closure_left().unwrap().max_residual < 1e-10);
    }

    #[test]
    fn n8_chiral_factors_have_dimension_sixteen() {
        let alg = build_algebra(8).unwrap();
        let sym = enumerate_scalars(&alg).unwrap();
        assert_eq!(sym.dim_right, 16);
        assert_eq!(sym.dim_left, 16);
    }

    #[test]
    fn pseudoscalar_products_stay_in_span() {
        let alg = build_algebra(6).unwrap();
        let sym = enumerate_scalars(&alg).unwrap();
        let full = sym.full_span();
        for (_, g) in &sym.generators {
            let pseudo = alg.gamma5() * g;
            assert!(span_membership_residual(&full, &pseudo) < 1e-10);
        }
    }

    #[test]
    fn trivial_and_adversarial_closure() {
        let alg = build_algebra(4).unwrap();
        // span {I}: trivially closed
        let cert = check_closure(&[ident(4)], 1e-10).unwrap();
        assert_eq!(cert.max_residual, 0.0);
        // span {γ0, γ1}: [γ0, γ1] = 2γ0γ1 is outside
        let bad = vec![alg.gammas()[0].clone(), alg.gammas()[1].clone()];
        assert!(matches!(
            check_closure(&bad, 1e-10),
            Err(Error::Closure { .. })
        ));
    }

    #[test]
    fn projector_pair_validation() {
        let alg = build_algebra(6).unwrap();
        let sym = enumerate_scalars(&alg).unwrap();
        let id = ident(8);
        // (I, I): valid, full ranks
        let pair = validate_projector_pair(&sym, &id, &id).unwrap();
        assert_eq!(pair.rank_p, 8);
        assert_eq!(pair.rank_d, 8);
        // (I, P_+): valid, rank_D = half
        let pp = alg.chiral_projector(true).clone();
        let pair = validate_projector_pair(&sym, &id, &pp).unwrap();
        assert_eq!(pair.rank_d, 4);
        // (P_+, I): rank violation
        let err = validate_projector_pair(&sym, &pp, &id).unwrap_err();
        assert!(err.to_string().contains("rank"));
        // non-idempotent
        let err = validate_projector_pair(&sym, &id, &(alg.gammas()[4].clone())).unwrap_err();
        assert!(err.to_string().contains("idempotent"));
        // outside the scalar span: a Lorentz projector built from γ1 is not scalar
        let half = num_complex::Complex64::new(0.5, 0.0);
        let outside = (ident(8) + alg.gammas()[0].clone()).map(|c| c * half);
        let err = validate_projector_pair(&sym, &id, &outside).unwrap_err();
        assert!(err.to_string().contains("span"));
    }

    #[test]
    fn rank_is_stable_under_small_perturbations() {
        let alg = build_algebra(6).unwrap();
        let pp = alg.chiral_projector(true).clone();
        let mut rng = crate::seeding::trial_rng(3, 0);
        use rand::Rng;
        let noise = CMat::from_fn(8, 8, |_, _| {
            num_complex::Complex64::new(
                (rng.gen::<f64>() - 0.5) * 2e-10,
                (rng.gen::<f64>() - 0.5) * 2e-10,
            )
        });
        assert_eq!(rank(&pp, SVD_RANK_REL), rank(&(pp + noise), SVD_RANK_REL));
    }

    #[test]
    fn chiral_dimensions_match_for_all_n() {
        for n in [4usize, 6, 8] {
            let alg = build_algebra(n).unwrap();
            let sym = enumerate_scalars(&alg).unwrap();
            assert_eq!(sym.dim_right, sym.dim_left, "n={n}");
            let expect = 1usize << (n - 4); // (2^((N-4)/2))^2
            assert_eq!(sym.dim_right, expect, "n={n}");
        }
    }

    #[test]
    fn massive_filter_keeps_gamma0_commutants() {
        let alg = build_algebra(6).unwrap();
        let sym = enumerate_scalars(&alg).unwrap();
        let survivors = sym.massive_filter(&alg);
        // the identity always survives
        assert!(!survivors.is_empty());
        for (_, g) in &survivors {
            assert!(max_norm(&commutator(g, &alg.gammas()[0])) < TOL_ALGEBRAIC);
        }
    }

    #[test]
    fn report_serializes() {
        let alg = build_algebra(6).unwrap();
        let sym = enumerate_scalars(&alg).unwrap();
        let r = sym.report();
        assert_eq!(r.dim_right, 4);
        serde_json::to_string(&r).unwrap();
    }
}
