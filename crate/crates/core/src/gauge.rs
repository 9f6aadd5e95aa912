//! Gauge groups, field strengths, and the kinetic-Lagrangian trace
//! identity, in two modes:
//!
//! * abstract — spin and group factors combine as a tensor product
//!   (γ0γ^λ)⊗G_a on C^4⊗C^{n_f};
//! * embedded — the group generators are themselves Clifford elements of
//!   C_6 (chiral-projected products of γ4, γ5) and multiply the spin
//!   matrices directly.
//!
//! Index placement for the trace identity, frozen against the
//! Yang–Mills oracle −¼F^a_{μν}F^{aμν}:
//!
//!   X_μ  = Σ_{a,λ} F^a_{μλ} (γ0γ^λ)∘G_a
//!   Y^μ  = Σ_{b,η} g^{μμ} F^b_{μη} g_{ηη} (γ0γ^η)∘G_b
//!   lhs  = −tr(Σ_μ X_μ Y^μ) / (4·N_o·4)    [abstract]
//!        = −tr(Σ_μ X_μ Y^μ) / (4·N_o)      [embedded]
//!
//! where ∘ is ⊗ or matrix product per mode. The spin trace
//! tr[(γ0γ^λ)(γ0γ_η)] = 4δ^λ_η forces the mixed-index Y; in abstract
//! mode that 4 is not absorbed by the group normalization, hence the
//! extra spin-dimension divisor. In embedded mode the chiral projector
//! inside the generators supplies exactly that factor.
//!
//! Structure constants are always computed from the stored generators,
//! C^c_{ab} = tr([G_a,G_b]·G_c) / (i·tr(G_c G_c)), never hard-coded.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::clifford::CliffordAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{commutator, frobenius, kronecker, max_norm, trace, CMat, I, ONE};
use crate::seeding::trial_rng;

const SPIN_DIM: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Abstract,
    Embedded,
}

#[derive(Debug, Clone)]
pub struct GaugeGroup {
    pub name: String,
    pub generators: Vec<CMat>,
    /// structure_constants[c][a][b] = C^c_ab
    pub structure_constants: Vec<Vec<Vec<f64>>>,
    /// N_o = tr(G_a G_a), constant across a by construction.
    pub n_o: f64,
}

fn pauli() -> Vec<CMat> {
    let z = Complex64::default();
    vec![
        CMat::from_row_slice(2, 2, &[z, ONE, ONE, z]),
        CMat::from_row_slice(2, 2, &[z, -I, I, z]),
        CMat::from_row_slice(2, 2, &[ONE, z, z, -ONE]),
    ]
}

fn gell_mann() -> Vec<CMat> {
    let z = Complex64::default();
    let r = |x: f64| Complex64::new(x, 0.0);
    let s3 = 1.0 / 3f64.sqrt();
    vec![
        CMat::from_row_slice(3, 3, &[z, ONE, z, ONE, z, z, z, z, z]),
        CMat::from_row_slice(3, 3, &[z, -I, z, I, z, z, z, z, z]),
        CMat::from_row_slice(3, 3, &[ONE, z, z, z, -ONE, z, z, z, z]),
        CMat::from_row_slice(3, 3, &[z, z, ONE, z, z, z, ONE, z, z]),
        CMat::from_row_slice(3, 3, &[z, z, -I, z, z, z, I, z, z]),
        CMat::from_row_slice(3, 3, &[z, z, z, z, z, ONE, z, ONE, z]),
        CMat::from_row_slice(3, 3, &[z, z, z, z, z, -I, z, I, z]),
        CMat::from_row_slice(3, 3, &[r(s3), z, z, z, r(s3), z, z, z, r(-2.0 * s3)]),
    ]
}

/// C^c_ab from the stored generators; errors if the commutators leave
/// the generator span (closure residual above `tol`).
fn compute_structure_constants(
    generators: &[CMat],
    tol: f64,
) -> Result<(Vec<Vec<Vec<f64>>>, f64)> {
    let n = generators.len();
    let norms: Vec<f64> = generators.iter().map(|g| frobenius(g, g).re).collect();
    let mut c = vec![vec![vec![0.0; n]; n]; n];
    let mut worst = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            let comm = commutator(&generators[a], &generators[b]);
            let mut recon = CMat::zeros(comm.nrows(), comm.ncols());
            for k in 0..n {
                // [G_a,G_b] = i C^c_ab G_c  =>  C = tr([G_a,G_b] G_c)/(i N_c)
                let coef = trace(&(&comm * &generators[k])) / (I * Complex64::new(norms[k], 0.0));
                if coef.im.abs() > tol {
                    return Err(Error::Closure {
                        i: a,
                        j: b,
                        residual: coef.im.abs(),
                    });
                }
                c[k][a][b] = coef.re;
                recon += generators[k].map(|x| x * I * Complex64::new(coef.re, 0.0));
            }
            let resid = max_norm(&(comm - recon));
            worst = worst.max(resid);
            if resid > tol {
                return Err(Error::Closure {
                    i: a,
                    j: b,
                    residual: resid,
                });
            }
        }
    }
    Ok((c, worst))
}

impl GaugeGroup {
    fn from_generators(name: &str, generators: Vec<CMat>) -> Result<Self> {
        let n_o = frobenius(&generators[0], &generators[0]).re;
        let (structure_constants, _) = compute_structure_constants(&generators, 1e-10)?;
        Ok(GaugeGroup {
            name: name.to_string(),
            generators,
            structure_constants,
            n_o,
        })
    }

    /// U(1) with a single generator (q); N_o = q².
    pub fn u1(charge: f64) -> Self {
        let g = CMat::from_row_slice(1, 1, &[Complex64::new(charge, 0.0)]);
        GaugeGroup::from_generators("u1", vec![g]).expect("abelian closure is trivial")
    }

    /// SU(2) in the Pauli normalization tr(G_a G_b) = 2δ_ab.
    pub fn su2() -> Self {
        GaugeGroup::from_generators("su2", pauli()).expect("pauli matrices close")
    }

    /// SU(3) Gell-Mann matrices, tr(G_a G_b) = 2δ_ab.
    pub fn su3() -> Self {
        GaugeGroup::from_generators("su3", gell_mann()).expect("gell-mann matrices close")
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "u1" => Ok(GaugeGroup::u1(1.0)),
            "su2" => Ok(GaugeGroup::su2()),
            "su3" => Ok(GaugeGroup::su3()),
            other => Err(Error::GroupDimension(format!("unknown group {other:?}"))),
        }
    }

    pub fn flavor_dim(&self) -> usize {
        self.generators[0].nrows()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// max‖[G_a,G_b] − iC^c_ab G_c‖ with the stored constants.
    pub fn closure_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..self.num_generators() {
            for b in 0..self.num_generators() {
                let comm = commutator(&self.generators[a], &self.generators[b]);
                let mut recon = CMat::zeros(comm.nrows(), comm.ncols());
                for k in 0..self.num_generators() {
                    recon += self.generators[k]
                        .map(|x| x * I * Complex64::new(self.structure_constants[k][a][b], 0.0));
                }
                worst = worst.max(max_norm(&(comm - recon)));
            }
        }
        worst
    }

    pub fn hermiticity_residual(&self) -> f64 {
        self.generators
            .iter()
            .map(|g| max_norm(&(g - g.adjoint())))
            .fold(0.0, f64::max)
    }

    /// max |tr(G_a G_b) − N_o δ_ab|.
    pub fn trace_normalization_residual(&self) -> f64 {
        let n = self.num_generators();
        let mut worst = 0.0f64;
        for a in 0..n {
            for b in 0..n {
                let t = frobenius(&self.generators[a], &self.generators[b]);
                let target = if a == b { self.n_o } else { 0.0 };
                worst = worst.max((t - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }
}

/// The N = 6 u(2) generator set living inside the Clifford algebra:
/// {P₊, P₊·iγ4, P₊·iγ5, P₊·iγ4γ5}/√2, with P₊ the chiral projector of
/// the 4-d block. Hermitian, tr(G_a G_b) = 2δ_ab, real structure
/// constants; intended for embedded-mode `lagrangian_rhs`.
pub fn embedded_generators(alg: &CliffordAlgebra) -> Result<GaugeGroup> {
    if alg.n() != 6 {
        return Err(Error::WrongAlgebra {
            expected: 6,
            got: alg.n(),
        });
    }
    let p_plus = alg.chiral_projector(true);
    let g4 = &alg.gammas()[4];
    let g5x = &alg.gammas()[5];
    let scale = Complex64::new(1.0 / 2f64.sqrt(), 0.0);
    let gens = vec![
        p_plus.map(|x| x * scale),
        (p_plus * g4).map(|x| x * I * scale),
        (p_plus * g5x).map(|x| x * I * scale),
        (p_plus * g4 * g5x).map(|x| x * I * scale),
    ];
    GaugeGroup::from_generators("embedded-u2", gens)
}

/// One real antisymmetric 4×4 block per group index.
#[derive(Debug, Clone)]
pub struct FieldStrength {
    pub blocks: Vec<[[f64; 4]; 4]>,
}

impl FieldStrength {
    pub fn new(blocks: Vec<[[f64; 4]; 4]>) -> Result<Self> {
        for (a, b) in blocks.iter().enumerate() {
            for mu in 0..4 {
                for nu in 0..4 {
                    if (b[mu][nu] + b[nu][mu]).abs() > 1e-14 {
                        return Err(Error::GroupDimension(format!(
                            "field strength block {a} not antisymmetric at ({mu},{nu})"
                        )));
                    }
                }
            }
        }
        Ok(FieldStrength { blocks })
    }

    /// Strictly-upper-triangle entries drawn uniformly from [−1, 1).
    pub fn random(num_generators: usize, rng: &mut impl Rng) -> Self {
        let mut blocks = Vec::with_capacity(num_generators);
        for _ in 0..num_generators {
            let mut b = [[0.0; 4]; 4];
            for mu in 0..4 {
                for nu in (mu + 1)..4 {
                    let v = 2.0 * rng.gen::<f64>() - 1.0;
                    b[mu][nu] = v;
                    b[nu][mu] = -v;
                }
            }
            blocks.push(b);
        }
        FieldStrength { blocks }
    }

    /// Plane-wave curvature: F^a_μν = k_μ a^a_ν − k_ν a^a_μ
    /// + g·C^a_bc·a^b_μ a^c_ν. The derivative acts as multiplication by
    /// k_μ (plane-wave phase absorbed into the real amplitude).
    pub fn from_potentials(
        group: &GaugeGroup,
        k: &[f64; 4],
        potentials: &[[f64; 4]],
        coupling: f64,
    ) -> Result<Self> {
        let n = group.num_generators();
        if potentials.len() != n {
            return Err(Error::GroupDimension(format!(
                "expected {n} potential blocks, got {}",
                potentials.len()
            )));
        }
        let mut blocks = Vec::with_capacity(n);
        for a in 0..n {
            let mut b = [[0.0; 4]; 4];
            for mu in 0..4 {
                for nu in 0..4 {
                    let mut v = k[mu] * potentials[a][nu] - k[nu] * potentials[a][mu];
                    for bb in 0..n {
                        for cc in 0..n {
                            v += coupling
                                * group.structure_constants[a][bb][cc]
                                * potentials[bb][mu]
                                * potentials[cc][nu];
                        }
                    }
                    b[mu][nu] = v;
                }
            }
            blocks.push(b);
        }
        FieldStrength::new(blocks)
    }

    pub fn num_generators(&self) -> usize {
        self.blocks.len()
    }
}

fn metric_sign(mu: usize) -> f64 {
    if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Standard Yang–Mills kinetic scalar −¼ F^a_μν F^{aμν}.
pub fn lagrangian_lhs(f: &FieldStrength) -> f64 {
    let mut acc = 0.0;
    for b in &f.blocks {
        for mu in 0..4 {
            for nu in 0..4 {
                acc += b[mu][nu] * b[mu][nu] * metric_sign(mu) * metric_sign(nu);
            }
        }
    }
    -0.25 * acc
}

fn spin_channel(alg: &CliffordAlgebra, eta: usize) -> CMat {
    &alg.gammas()[0] * &alg.gammas()[eta]
}

/// Trace form of the kinetic scalar; see the module docs for the frozen
/// contraction pattern and the per-mode normalization.
pub fn lagrangian_rhs(
    f: &FieldStrength,
    group: &GaugeGroup,
    alg: &CliffordAlgebra,
    mode: Mode,
    p_d: Option<&CMat>,
) -> Result<f64> {
    let ng = group.num_generators();
    if f.num_generators() != ng {
        return Err(Error::GroupDimension(format!(
            "field strength has {} blocks, group has {ng} generators",
            f.num_generators()
        )));
    }
    let combine: Box<dyn Fn(&CMat, &CMat) -> CMat> = match mode {
        Mode::Abstract => {
            if alg.n() != 4 {
                return Err(Error::WrongAlgebra {
                    expected: 4,
                    got: alg.n(),
                });
            }
            Box::new(|s: &CMat, g: &CMat| kronecker(s, g))
        }
        Mode::Embedded => {
            if alg.n() != 6 {
                return Err(Error::WrongAlgebra {
                    expected: 6,
                    got: alg.n(),
                });
            }
            if group.flavor_dim() != alg.dim() {
                return Err(Error::GroupDimension(format!(
                    "embedded generators must be {0}x{0}, got {1}x{1}",
                    alg.dim(),
                    group.flavor_dim()
                )));
            }
            Box::new(|s: &CMat, g: &CMat| s * g)
        }
    };
    let dim = match mode {
        Mode::Abstract => SPIN_DIM * group.flavor_dim(),
        Mode::Embedded => alg.dim(),
    };
    if let Some(p) = p_d {
        if p.nrows() != dim || p.ncols() != dim {
            return Err(Error::SizeMismatch {
                expected: dim,
                got_rows: p.nrows(),
                got_cols: p.ncols(),
            });
        }
    }
    let channels: Vec<CMat> = (0..4).map(|eta| spin_channel(alg, eta)).collect();
    let mut total = Complex64::default();
    for mu in 0..4 {
        let mut x = CMat::zeros(dim, dim);
        let mut y = CMat::zeros(dim, dim);
        for la in 0..4 {
            for (a, gen) in group.generators.iter().enumerate() {
                let term = combine(&channels[la], gen);
                x += term.map(|v| v * Complex64::new(f.blocks[a][mu][la], 0.0));
                // Y^μ picks up g^μμ (raised μ on F) and g_ηη (lowered γ)
                let w = metric_sign(mu) * f.blocks[a][mu][la] * metric_sign(la);
                y += term.map(|v| v * Complex64::new(w, 0.0));
            }
        }
        let prod = match p_d {
            Some(p) => p * x * y,
            None => x * y,
        };
        total += trace(&prod);
    }
    let divisor = match mode {
        Mode::Abstract => 4.0 * group.n_o * SPIN_DIM as f64,
        Mode::Embedded => 4.0 * group.n_o,
    };
    Ok(-total.re / divisor)
}

/// Independent contraction oracle for the kinetic scalar: raises both
/// indices first, then sums over the strict upper triangle.
pub fn lagrangian_lhs_oracle(f: &FieldStrength) -> f64 {
    let mut acc = 0.0;
    for b in &f.blocks {
        let mut raised = [[0.0; 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                raised[mu][nu] = metric_sign(mu) * metric_sign(nu) * b[mu][nu];
            }
        }
        for mu in 0..4 {
            for nu in (mu + 1)..4 {
                acc += 2.0 * b[mu][nu] * raised[mu][nu];
            }
        }
    }
    -0.25 * acc
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub group: String,
    pub mode: Mode,
    pub trials: usize,
    pub max_rel_error: f64,
}

/// Seeded random-field-strength suite for the trace identity; the
/// relative error uses 1 + |lhs| in the denominator.
pub fn identity_suite(
    group: &GaugeGroup,
    alg: &CliffordAlgebra,
    mode: Mode,
    seed: u64,
    trials: usize,
) -> Result<IdentityReport> {
    let mut max_rel = 0.0f64;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let f = FieldStrength::random(group.num_generators(), &mut rng);
        let lhs = lagrangian_lhs(&f);
        let rhs = lagrangian_rhs(&f, group, alg, mode, None)?;
        max_rel = max_rel.max((lhs - rhs).abs() / (1.0 + lhs.abs()));
    }
    Ok(IdentityReport {
        group: group.name.clone(),
        mode,
        trials,
        max_rel_error: max_rel,
    })
}

/// ψ ⊗ flavor-row data for the current forms.
#[derive(Debug, Clone)]
pub struct FlavorSpinor {
    /// 4-component spin part.
    pub spinor: Vec<Complex64>,
    /// n_f-component flavor part.
    pub flavor: Vec<Complex64>,
}

impl FlavorSpinor {
    pub fn new(spinor: Vec<Complex64>, flavor: Vec<Complex64>) -> Result<Self> {
        if spinor.len() != SPIN_DIM {
            return Err(Error::GroupDimension(format!(
                "spinor must have 4 components, got {}",
                spinor.len()
            )));
        }
        Ok(FlavorSpinor { spinor, flavor })
    }

    pub fn random(flavor_dim: usize, rng: &mut impl Rng) -> Self {
        fn c(rng: &mut impl Rng) -> Complex64 {
            Complex64::new(2.0 * rng.gen::<f64>() - 1.0, 2.0 * rng.gen::<f64>() - 1.0)
        }
        FlavorSpinor {
            spinor: (0..SPIN_DIM).map(|_| c(rng)).collect(),
            flavor: (0..flavor_dim).map(|_| c(rng)).collect(),
        }
    }

    /// Column vector in the spin ⊗ flavor layout.
    pub fn column(&self) -> CMat {
        let nf = self.flavor.len();
        let mut v = CMat::zeros(SPIN_DIM * nf, 1);
        for s in 0..SPIN_DIM {
            for f in 0..nf {
                v[(s * nf + f, 0)] = self.spinor[s] * self.flavor[f];
            }
        }
        v
    }
}

fn check_flavor(psi: &FlavorSpinor, group: &GaugeGroup) -> Result<()> {
    if psi.flavor.len() != group.flavor_dim() {
        return Err(Error::GroupDimension(format!(
            "flavor dimension {} does not match group dimension {}",
            psi.flavor.len(),
            group.flavor_dim()
        )));
    }
    Ok(())
}

/// j^aμ as a trace over the rank-one matrix field:
/// tr[(γ0γ^μ ⊗ G_a)·ψψ†] with ψ the spin⊗flavor column.
pub fn current_trace(
    alg: &CliffordAlgebra,
    group: &GaugeGroup,
    psi: &FlavorSpinor,
    a: usize,
    mu: usize,
) -> Result<Complex64> {
    check_flavor(psi, group)?;
    if a >= group.num_generators() {
        return Err(Error::IndexOutOfRange {
            index: a,
            n: group.num_generators(),
        });
    }
    let channel = kronecker(&spin_channel(alg, mu), &group.generators[a]);
    let col = psi.column();
    let rank_one = &col * col.adjoint();
    Ok(trace(&(channel * rank_one)))
}

/// The same current as an explicit component sum
/// Σ ψ̄_{sf}(γ0γ^μ)_{ss'}(G_a)_{ff'}ψ_{s'f'} — no matrix products, so
/// it is an independent route to the same number.
pub fn current_bilinear(
    alg: &CliffordAlgebra,
    group: &GaugeGroup,
    psi: &FlavorSpinor,
    a: usize,
    mu: usize,
) -> Result<Complex64> {
    check_flavor(psi, group)?;
    let channel = spin_channel(alg, mu);
    let gen = &group.generators[a];
    let nf = group.flavor_dim();
    let mut acc = Complex64::default();
    for s in 0..SPIN_DIM {
        for sp in 0..SPIN_DIM {
            for f in 0..nf {
                for fp in 0..nf {
                    acc += (psi.spinor[s] * psi.flavor[f]).conj()
                        * channel[(s, sp)]
                        * gen[(f, fp)]
                        * psi.spinor[sp]
                        * psi.flavor[fp];
                }
            }
        }
    }
    Ok(acc)
}

/// Interaction scalar two ways: the trace form
/// −g·tr(X·Y)/(4·N_o) with X = Σ g_μμ A^a_μ (γ0γ^μ)⊗G_a and
/// Y = Σ j^bν (γ0γ^ν)⊗G_b, against minimal coupling −g·A^a_μ j^aμ.
#[derive(Debug, Clone, Serialize)]
pub struct VertexValues {
    pub trace_form: f64,
    pub standard_form: f64,
}

pub fn interaction_vertex(
    alg: &CliffordAlgebra,
    group: &GaugeGroup,
    potentials: &[[f64; 4]],
    psi: &FlavorSpinor,
    coupling: f64,
) -> Result<VertexValues> {
    check_flavor(psi, group)?;
    let ng = group.num_generators();
    if potentials.len() != ng {
        return Err(Error::GroupDimension(format!(
            "expected {ng} potential blocks, got {}",
            potentials.len()
        )));
    }
    let nf = group.flavor_dim();
    let dim = SPIN_DIM * nf;
    let mut currents = vec![[Complex64::default(); 4]; ng];
    for a in 0..ng {
        for mu in 0..4 {
            currents[a][mu] = current_trace(alg, group, psi, a, mu)?;
        }
    }
    let mut x = CMat::zeros(dim, dim);
    let mut y = CMat::zeros(dim, dim);
    for (a, gen) in group.generators.iter().enumerate() {
        for mu in 0..4 {
            let term = kronecker(&spin_channel(alg, mu), gen);
            // lowered index on the potential
            let al = metric_sign(mu) * potentials[a][mu];
            x += term.map(|v| v * Complex64::new(al, 0.0));
            y += term.map(|v| v * currents[a][mu]);
        }
    }
    let trace_form = -coupling * trace(&(x * y)).re / (SPIN_DIM as f64 * group.n_o);
    let mut standard = 0.0;
    for a in 0..ng {
        for mu in 0..4 {
            // A_μ j^μ = g_μμ A^μ j^μ; currents are real for Hermitian G
            standard += metric_sign(mu) * potentials[a][mu] * currents[a][mu].re;
        }
    }
    Ok(VertexValues {
        trace_form,
        standard_form: -coupling * standard,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CurrentVertexReport {
    pub group: String,
    pub samples: usize,
    pub max_current_residual: f64,
    pub max_current_imag: f64,
    pub max_vertex_residual: f64,
}

/// Randomized dual-route suite: trace-form currents vs explicit
/// bilinears, and trace-form vertex vs minimal coupling.
pub fn current_vertex_suite(
    alg: &CliffordAlgebra,
    group: &GaugeGroup,
    seed: u64,
    samples: usize,
) -> Result<CurrentVertexReport> {
    let mut max_current = 0.0f64;
    let mut max_imag = 0.0f64;
    let mut max_vertex = 0.0f64;
    let ng = group.num_generators();
    for trial in 0..samples {
        let mut rng = trial_rng(seed, trial as u64);
        let psi = FlavorSpinor::random(group.flavor_dim(), &mut rng);
        let mut potentials = vec![[0.0; 4]; ng];
        for block in potentials.iter_mut() {
            for v in block.iter_mut() {
                *v = 2.0 * rng.gen::<f64>() - 1.0;
            }
        }
        let coupling = 2.0 * rng.gen::<f64>() - 1.0;
        for a in 0..ng {
            for mu in 0..4 {
                let t = current_trace(alg, group, &psi, a, mu)?;
                let b = current_bilinear(alg, group, &psi, a, mu)?;
                max_current = max_current.max((t - b).norm());
                max_imag = max_imag.max(t.im.abs());
            }
        }
        let v = interaction_vertex(alg, group, &potentials, &psi, coupling)?;
        max_vertex = max_vertex
            .max((v.trace_form - v.standard_form).abs() / (1.0 + v.standard_form.abs()));
    }
    Ok(CurrentVertexReport {
        group: group.name.clone(),
        samples,
        max_current_residual: max_current,
        max_current_imag: max_imag,
        max_vertex_residual: max_vertex,
    })
}
