//! Linear and formal deformations of a twisted Rota-Baxter operator.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{axpy, int, unit_vec, vec_add, vec_sub, zero_vec, Matrix, Scalar, ScalarVec, Vector};
use crate::linfty::{d_t, d_t_matrix};
use crate::multilin::Cochain;
use crate::twistrb::{induced_action, require_trb, TrbSetup};
use crate::verdict::{grid2, pairs, Verdict};

/// `T_t = T + tT₁ + … + tᵏTₖ`, truncated to a polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalDeformation {
    setup: TrbSetup,
    base: Matrix,
    coefficients: Vec<Matrix>,
}

impl FormalDeformation {
    pub fn new(setup: TrbSetup, base: Matrix, coefficients: Vec<Matrix>) -> Result<Self> {
        require_trb(&setup, &base)?;
        for c in &coefficients {
            setup.check_operator(c)?;
        }
        Ok(FormalDeformation { setup, base, coefficients })
    }

    pub fn setup(&self) -> &TrbSetup {
        &self.setup
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// `Tᵢ`, with `T₀ = T` and zero beyond the order.
    pub fn coefficient(&self, i: usize) -> Matrix {
        coefficient(&self.base, &self.coefficients, i)
    }
}

fn coefficient(base: &Matrix, rest: &[Matrix], i: usize) -> Matrix {
    match i {
        0 => base.clone(),
        _ => rest.get(i - 1).cloned().unwrap_or_else(|| Matrix::zeros(base.rows(), base.cols())),
    }
}

/// Coefficient of `tⁿ` in `[T_t u, T_t v] − T_t(T_t u • v − T_t v • u + H(T_t u, T_t v))`.
fn order_defect(s: &TrbSetup, ts: &[Matrix], n: usize) -> Cochain {
    let (m, g) = (s.module_dim(), s.lie_dim());
    let zero = Matrix::zeros(g, m);
    let at = |i: usize| ts.get(i).unwrap_or(&zero);
    Cochain::from_fn(2, m, g, |p| {
        let (u, v) = (unit_vec(m, p[0]), unit_vec(m, p[1]));
        let mut acc = zero_vec(g);
        for i in 0..=n {
            let j = n - i;
            let (tiu, tjv, tju) = (at(i).mul_vec(&u), at(j).mul_vec(&v), at(j).mul_vec(&u));
            acc = vec_add(&acc, &s.algebra().bracket(&tiu, &tjv));
            let act = vec_sub(&s.rep().act(&tju, &v), &s.rep().act(&tjv, &u));
            acc = vec_sub(&acc, &at(i).mul_vec(&act));
            for l in 0..=j {
                let k = j - l;
                let h = s.h(&at(l).mul_vec(&u), &at(k).mul_vec(&v));
                acc = vec_sub(&acc, &at(i).mul_vec(&h));
            }
        }
        acc
    })
}

/// Defects of the deformation equations for orders `1..=k`.
pub fn deformation_equation_defects(d: &FormalDeformation) -> Vec<Cochain> {
    let ts: Vec<Matrix> = (0..=d.order()).map(|i| d.coefficient(i)).collect();
    (1..=d.order()).map(|n| order_defect(&d.setup, &ts, n)).collect()
}

/// Whether `d_T T₁ = 0`; the order-1 deformation defect is `−d_T T₁` and is checked to be so.
pub fn infinitesimal_is_cocycle(s: &TrbSetup, t: &Matrix, t1: &Matrix) -> Result<bool> {
    s.check_operator(t1)?;
    let dt = d_t(s, t, &Cochain::linear(t1))?;
    let defect = order_defect(s, &[t.clone(), t1.clone()], 1);
    if defect != dt.neg() {
        return Err(Error::Postcondition("order-1 deformation defect differs from -d_T T1".into()));
    }
    Ok(dt.is_zero())
}

/// The `t¹, t², t³` coefficients of the twisted Rota-Baxter identity for `T + tT₁`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearDeformationReport {
    pub order1: Verdict,
    pub order2: Verdict,
    pub order3: Verdict,
}

impl LinearDeformationReport {
    pub fn holds(&self) -> bool {
        self.order1.holds && self.order2.holds && self.order3.holds
    }
}

pub fn linear_deformation_check(s: &TrbSetup, t: &Matrix, t1: &Matrix) -> Result<LinearDeformationReport> {
    require_trb(s, t)?;
    s.check_operator(t1)?;
    let ts = [t.clone(), t1.clone()];
    let verdict = |n: usize| {
        let c = order_defect(s, &ts, n);
        Verdict::first_defect(&format!("order {n}"), pairs(s.module_dim()), |p| c.eval_basis(p))
    };
    Ok(LinearDeformationReport { order1: verdict(1), order2: verdict(2), order3: verdict(3) })
}

/// The conditions on `x` shared by Nijenhuis elements and equivalences.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ElementConditions {
    /// `[[x,y],[x,z]] = 0`.
    pub lie_hom: Verdict,
    /// `H(x, T(y • u)) = y • H(x, Tu)`.
    pub action_linear: Verdict,
    /// `[x,y] • (x • u + H(x, Tu)) = 0`.
    pub action_quadratic: Verdict,
    /// `x • H(y,z) + H(x, TH(y,z)) = H([x,y], z) + H(y, [x,z])`.
    pub cocycle_linear: Verdict,
    /// `H([x,y], [x,z]) = 0`.
    pub cocycle_quadratic: Verdict,
}

impl ElementConditions {
    pub fn holds(&self) -> bool {
        self.verdicts().iter().all(|v| v.holds)
    }

    pub fn verdicts(&self) -> [&Verdict; 5] {
        [&self.lie_hom, &self.action_linear, &self.action_quadratic, &self.cocycle_linear, &self.cocycle_quadratic]
    }
}

fn element_conditions(s: &TrbSetup, t: &Matrix, x: &[Scalar]) -> ElementConditions {
    let (g, m) = (s.lie_dim(), s.module_dim());
    let (l, rep) = (s.algebra(), s.rep());
    let ad = |y: &[Scalar]| l.bracket(x, y);
    let e = |i: usize| unit_vec(g, i);
    let f = |i: usize| unit_vec(m, i);
    let lie_hom = Verdict::first_defect("[[x,y],[x,z]] = 0", pairs(g), |p| l.bracket(&ad(&e(p[0])), &ad(&e(p[1]))));
    let action_linear = Verdict::first_defect("H(x, T(y.u)) = y.H(x, Tu)", grid2(g, m), |p| {
        let (y, u) = (e(p[0]), f(p[1]));
        vec_sub(&s.h(x, &t.mul_vec(&rep.act(&y, &u))), &rep.act(&y, &s.h(x, &t.mul_vec(&u))))
    });
    let action_quadratic = Verdict::first_defect("[x,y].(x.u + H(x, Tu)) = 0", grid2(g, m), |p| {
        let (y, u) = (e(p[0]), f(p[1]));
        rep.act(&ad(&y), &vec_add(&rep.act(x, &u), &s.h(x, &t.mul_vec(&u))))
    });
    let cocycle_linear = Verdict::first_defect("x.H(y,z) + H(x, TH(y,z)) = H([x,y],z) + H(y,[x,z])", pairs(g), |p| {
        let (y, z) = (e(p[0]), e(p[1]));
        let hyz = s.h(&y, &z);
        let lhs = vec_add(&rep.act(x, &hyz), &s.h(x, &t.mul_vec(&hyz)));
        vec_sub(&lhs, &vec_add(&s.h(&ad(&y), &z), &s.h(&y, &ad(&z))))
    });
    let cocycle_quadratic =
        Verdict::first_defect("H([x,y],[x,z]) = 0", pairs(g), |p| s.h(&ad(&e(p[0])), &ad(&e(p[1]))));
    ElementConditions { lie_hom, action_linear, action_quadratic, cocycle_linear, cocycle_quadratic }
}

fn check_element(s: &TrbSetup, x: &[Scalar]) -> Result<()> {
    if x.len() != s.lie_dim() {
        return Err(Error::DimensionMismatch { context: "element of g", expected: s.lie_dim(), found: x.len() });
    }
    Ok(())
}

/// The seven conditions for `(id + t[x,·], id + t(x•· + H(x,T·)))` to be a
/// morphism from `T + tT₁` to `T + tT₁′`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub conditions: ElementConditions,
    /// `T₁u + [x, Tu] = T(x • u + H(x, Tu)) + T₁′u`.
    pub intertwine_linear: Verdict,
    /// `[x, T₁u] = T₁′(x • u + H(x, Tu))`.
    pub intertwine_quadratic: Verdict,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.conditions.holds() && self.intertwine_linear.holds && self.intertwine_quadratic.holds
    }
}

pub fn equivalence_check(
    s: &TrbSetup,
    t: &Matrix,
    t1: &Matrix,
    t1p: &Matrix,
    x: &[Scalar],
) -> Result<EquivalenceReport> {
    require_trb(s, t)?;
    s.check_operator(t1)?;
    s.check_operator(t1p)?;
    check_element(s, x)?;
    let m = s.module_dim();
    let twist = |u: &[Scalar]| vec_add(&s.rep().act(x, u), &s.h(x, &t.mul_vec(u)));
    let units = || (0..m).map(|i| vec![i]);
    let intertwine_linear = Verdict::first_defect("T1 u + [x,Tu] = T(x.u + H(x,Tu)) + T1' u", units(), |p| {
        let u = unit_vec(m, p[0]);
        let lhs = vec_add(&t1.mul_vec(&u), &s.algebra().bracket(x, &t.mul_vec(&u)));
        vec_sub(&lhs, &vec_add(&t.mul_vec(&twist(&u)), &t1p.mul_vec(&u)))
    });
    let intertwine_quadratic = Verdict::first_defect("[x, T1 u] = T1'(x.u + H(x,Tu))", units(), |p| {
        let u = unit_vec(m, p[0]);
        vec_sub(&s.algebra().bracket(x, &t1.mul_vec(&u)), &t1p.mul_vec(&twist(&u)))
    });
    let report = EquivalenceReport { conditions: element_conditions(s, t, x), intertwine_linear, intertwine_quadratic };
    if report.holds() {
        let dx = d_t(s, t, &Cochain::constant(m, x.to_vec()))?;
        if Cochain::linear(&(t1 - t1p)) != dx {
            return Err(Error::Postcondition("equivalent deformations but T1 - T1' != d_T x".into()));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NijenhuisElementReport {
    /// `[x, u •̄ x] = 0` with the induced action of `M` on `𝔤`.
    pub commutes: Verdict,
    pub conditions: ElementConditions,
}

impl NijenhuisElementReport {
    pub fn holds(&self) -> bool {
        self.commutes.holds && self.conditions.holds()
    }
}

pub fn nijenhuis_element_check(s: &TrbSetup, t: &Matrix, x: &[Scalar]) -> Result<NijenhuisElementReport> {
    require_trb(s, t)?;
    check_element(s, x)?;
    Ok(nijenhuis_element_raw(s, t, &induced_action(s, t), x))
}

fn nijenhuis_element_raw(s: &TrbSetup, t: &Matrix, action: &[Matrix], x: &[Scalar]) -> NijenhuisElementReport {
    let commutes = Verdict::first_defect("[x, u .T x] = 0", (0..action.len()).map(|i| vec![i]), |p| {
        s.algebra().bracket(x, &action[p[0]].mul_vec(x))
    });
    NijenhuisElementReport { commutes, conditions: element_conditions(s, t, x) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RigidityStatus {
    SufficientConditionEstablished,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RigidityReport {
    pub z1_dim: usize,
    /// `dim d_T(𝔤)`.
    pub coboundary_dim: usize,
    /// Per basis cocycle, the first Nijenhuis preimage found on the grid.
    pub preimages: Vec<Option<ScalarVec>>,
    /// Every combination of the chosen preimages is itself a Nijenhuis element.
    pub span_certified: bool,
    pub status: RigidityStatus,
}

/// All vectors `Σ cᵢ vᵢ` with `cᵢ ∈ range`, in lexicographic order of `(c₁, …)`.
fn combinations(base: &[Scalar], dirs: &[Vector], range: &[i64]) -> Vec<Vector> {
    let mut out = vec![base.to_vec()];
    for d in dirs {
        out = out
            .into_iter()
            .flat_map(|v| {
                range.iter().map(move |&c| {
                    let mut w = v.clone();
                    axpy(&mut w, &int(c), d);
                    w
                })
            })
            .collect();
    }
    out
}

/// Tests the hypothesis `Z¹_T = d_T(Nij(T))`.
///
/// A basis of `Z¹_T` is computed, each basis cocycle `f` is matched with the
/// first Nijenhuis element on `x₀ + span(ker d_T)` with coefficients in
/// `−grid..=grid` and `d_T x = f`. Since the Nijenhuis conditions have degree at
/// most 2 in `x`, the span of the chosen preimages consists of Nijenhuis
/// elements iff every combination with coefficients in `{0, 1, 2}` does.
pub fn rigidity_probe(s: &TrbSetup, t: &Matrix, grid: u32) -> Result<RigidityReport> {
    let d0 = d_t_matrix(s, t, 0)?;
    let d1 = d_t_matrix(s, t, 1)?;
    let z1 = d1.kernel_basis();
    let coboundary_dim = d0.rank();
    let action = induced_action(s, t);
    let range: Vec<i64> = (-(grid as i64)..=grid as i64).collect();
    let kernel = d0.kernel_basis();
    let preimages: Vec<Option<Vector>> = z1
        .iter()
        .map(|f| {
            let x0 = d0.solve(f)?;
            combinations(&x0, &kernel, &range).into_iter().find(|x| nijenhuis_element_raw(s, t, &action, x).holds())
        })
        .collect();
    let span_certified = preimages.iter().all(Option::is_some) && {
        let chosen: Vec<Vector> = preimages.iter().flatten().cloned().collect();
        combinations(&zero_vec(s.lie_dim()), &chosen, &[0, 1, 2])
            .iter()
            .all(|x| nijenhuis_element_raw(s, t, &action, x).holds())
    };
    let status =
        if span_certified { RigidityStatus::SufficientConditionEstablished } else { RigidityStatus::Inconclusive };
    Ok(RigidityReport {
        z1_dim: z1.len(),
        coboundary_dim,
        preimages: preimages.into_iter().map(|p| p.map(ScalarVec)).collect(),
        span_certified,
        status,
    })
}

/// `{"order": k, "coefficients": [T₁, …, Tₖ]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DeformationJson {
    pub order: usize,
    pub coefficients: Vec<Matrix>,
}

impl DeformationJson {
    pub fn validate(&self) -> Result<()> {
        if self.coefficients.len() != self.order {
            return Err(Error::DimensionMismatch {
                context: "deformation coefficients",
                expected: self.order,
                found: self.coefficients.len(),
            });
        }
        Ok(())
    }
}
