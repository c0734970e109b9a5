//! Lie algebras, representations and Chevalley-Eilenberg cohomology.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{
    axpy, int, is_zero_vec, unit_vec, vec_add, vec_sub, zero_vec, Matrix, Scalar, ScalarVec, Vector,
};
use crate::multilin::{parse_tuple_key, signed, tuple_key, Cochain, ExtBasis};
use crate::twistrb::TrbSetup;
use crate::verdict::{pairs, Verdict};

/// Why a candidate bracket failed to define a Lie algebra.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LieViolation {
    Shape { expected: usize, found: usize },
    NotAlternating { index: usize, value: ScalarVec },
    NotSkew { pair: (usize, usize), sum: ScalarVec },
    Jacobi { triple: (usize, usize, usize), defect: ScalarVec },
}

impl std::fmt::Display for LieViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LieViolation::Shape { expected, found } => {
                write!(f, "bracket table has {found} entries, expected {expected}")
            }
            LieViolation::NotAlternating { index, .. } => write!(f, "[e{index}, e{index}] != 0"),
            LieViolation::NotSkew { pair: (i, j), .. } => write!(f, "[e{i}, e{j}] + [e{j}, e{i}] != 0"),
            LieViolation::Jacobi { triple: (i, j, k), .. } => write!(f, "Jacobi identity fails on (e{i}, e{j}, e{k})"),
        }
    }
}

impl From<LieViolation> for Error {
    fn from(v: LieViolation) -> Self {
        Error::NotLie(v.to_string())
    }
}

/// A finite-dimensional Lie algebra given by its bracket `μ ∈ Hom(∧²𝔤, 𝔤)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    bracket: Cochain,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { bracket: Cochain::zero(2, dim, dim) }
    }

    /// Validates Jacobi on every basis triple.
    pub fn from_cochain(bracket: Cochain) -> Result<Self, LieViolation> {
        if bracket.degree() != 2 || bracket.source_dim() != bracket.target_dim() {
            return Err(LieViolation::Shape { expected: 2, found: bracket.degree() });
        }
        let l = LieAlgebra { bracket };
        let n = l.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let d = l.jacobi_defect(i, j, k);
                    if !is_zero_vec(&d) {
                        return Err(LieViolation::Jacobi { triple: (i, j, k), defect: ScalarVec(d) });
                    }
                }
            }
        }
        Ok(l)
    }

    /// Structure constants as `(i, j, [e_i, e_j])` with `i < j`; unlisted pairs bracket to zero.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let assignments = brackets.iter().map(|(i, j, v)| (vec![*i, *j], v.clone()));
        let c = crate::multilin::cochain_from_values(2, dim, dim, assignments)?;
        Ok(Self::from_cochain(c)?)
    }

    pub fn dim(&self) -> usize {
        self.bracket.source_dim()
    }

    pub fn structure(&self) -> &Cochain {
        &self.bracket
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.bracket.eval_basis(&[i, j])
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bracket.eval(&[x.to_vec(), y.to_vec()])
    }

    /// `ad(e_i)` as a matrix.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_columns(n, &(0..n).map(|j| self.bracket_basis(i, j)).collect::<Vec<_>>())
    }

    pub fn ad_of(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.ad(i).scale(c);
            }
        }
        m
    }

    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vector {
        let e = |a| unit_vec(self.dim(), a);
        let t1 = self.bracket(&e(i), &self.bracket_basis(j, k));
        let t2 = self.bracket(&e(j), &self.bracket_basis(k, i));
        let t3 = self.bracket(&e(k), &self.bracket_basis(i, j));
        vec_add(&vec_add(&t1, &t2), &t3)
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Product algebra with the second summand's basis after the first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (a, b) = (self.dim(), other.dim());
        let bracket = Cochain::from_fn(2, a + b, a + b, |t| {
            let (i, j) = (t[0], t[1]);
            let mut v = zero_vec(a + b);
            if j < a {
                v[..a].clone_from_slice(&self.bracket_basis(i, j));
            } else if i >= a {
                v[a..].clone_from_slice(&other.bracket_basis(i - a, j - a));
            }
            v
        });
        LieAlgebra { bracket }
    }

    /// The 2-dimensional non-abelian algebra `[e0, e1] = e1`.
    pub fn r2() -> Self {
        Self::from_brackets(2, &[(0, 1, vec![int(0), int(1)])]).expect("valid")
    }

    /// Heisenberg algebra `[e0, e1] = e2`.
    pub fn heisenberg() -> Self {
        Self::from_brackets(3, &[(0, 1, vec![int(0), int(0), int(1)])]).expect("valid")
    }

    /// `sl(2)` in the basis `(h, e, f)`.
    pub fn sl2() -> Self {
        Self::from_brackets(
            3,
            &[
                (0, 1, vec![int(0), int(2), int(0)]),
                (0, 2, vec![int(0), int(0), int(-2)]),
                (1, 2, vec![int(1), int(0), int(0)]),
            ],
        )
        .expect("valid")
    }

    /// Solvable algebra `[e0, e1] = e1`, `[e0, e2] = λ e2`.
    pub fn r3(lambda: Scalar) -> Self {
        Self::from_brackets(3, &[(0, 1, vec![int(0), int(1), int(0)]), (0, 2, vec![int(0), int(0), lambda])])
            .expect("valid")
    }
}

/// Validates a full bracket table `table[i][j] = [e_i, e_j]`: alternation,
/// skewness, then Jacobi. The first violation in lexicographic order is reported.
pub fn validate_lie(dim: usize, table: &[Vec<Vector>]) -> Result<LieAlgebra, LieViolation> {
    if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
        return Err(LieViolation::Shape { expected: dim * dim, found: table.iter().map(Vec::len).sum() });
    }
    for (i, row) in table.iter().enumerate() {
        if !is_zero_vec(&row[i]) {
            return Err(LieViolation::NotAlternating { index: i, value: ScalarVec(row[i].clone()) });
        }
    }
    for (i, row) in table.iter().enumerate() {
        for (j, v) in row.iter().enumerate().skip(i + 1) {
            let s = vec_add(v, &table[j][i]);
            if !is_zero_vec(&s) {
                return Err(LieViolation::NotSkew { pair: (i, j), sum: ScalarVec(s) });
            }
        }
    }
    LieAlgebra::from_cochain(Cochain::from_fn(2, dim, dim, |t| table[t[0]][t[1]].clone()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RepViolation {
    Shape { detail: String },
    Bracket { pair: (usize, usize), defect: Matrix },
}

impl std::fmt::Display for RepViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepViolation::Shape { detail } => write!(f, "{detail}"),
            RepViolation::Bracket { pair: (i, j), .. } => {
                write!(f, "rho([e{i}, e{j}]) != [rho(e{i}), rho(e{j})]")
            }
        }
    }
}

impl From<RepViolation> for Error {
    fn from(v: RepViolation) -> Self {
        Error::NotRepresentation(v.to_string())
    }
}

/// Action matrices `ρ(e_i)` of a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    module_dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn action_basis(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn action_of(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = &m + &self.action[i].scale(c);
            }
        }
        m
    }

    /// `x • u`
    pub fn act(&self, x: &[Scalar], u: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.module_dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.action[i].mul_vec(u));
            }
        }
        out
    }

    pub fn adjoint(l: &LieAlgebra) -> Self {
        Representation { module_dim: l.dim(), action: (0..l.dim()).map(|i| l.ad(i)).collect() }
    }

    pub fn trivial(l: &LieAlgebra, module_dim: usize) -> Self {
        Representation { module_dim, action: vec![Matrix::zeros(module_dim, module_dim); l.dim()] }
    }

    /// Direct sum of two representations of the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let (a, b) = (self.module_dim, other.module_dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(a + b, a + b);
                for r in 0..a {
                    for c in 0..a {
                        m[(r, c)] = x[(r, c)].clone();
                    }
                }
                for r in 0..b {
                    for c in 0..b {
                        m[(a + r, a + c)] = y[(r, c)].clone();
                    }
                }
                m
            })
            .collect();
        Representation { module_dim: a + b, action }
    }
}

/// Checks `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` on all pairs.
pub fn validate_rep(l: &LieAlgebra, action: Vec<Matrix>) -> Result<Representation, RepViolation> {
    if action.len() != l.dim() {
        return Err(RepViolation::Shape {
            detail: format!("{} action matrices for a {}-dimensional algebra", action.len(), l.dim()),
        });
    }
    let m = action.first().map_or(0, Matrix::rows);
    if action.iter().any(|a| a.rows() != m || a.cols() != m) {
        return Err(RepViolation::Shape { detail: "action matrices must share one square shape".into() });
    }
    let rep = Representation { module_dim: m, action };
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let lhs = rep.action_of(&l.bracket_basis(i, j));
            let rhs = &(&rep.action[i] * &rep.action[j]) - &(&rep.action[j] * &rep.action[i]);
            let d = &lhs - &rhs;
            if !d.is_zero() {
                return Err(RepViolation::Bracket { pair: (i, j), defect: d });
            }
        }
    }
    Ok(rep)
}

/// Builds a representation with an explicit module dimension (needed when `dim 𝔤 = 0`).
pub fn validate_rep_with_dim(
    l: &LieAlgebra,
    module_dim: usize,
    action: Vec<Matrix>,
) -> Result<Representation, RepViolation> {
    if action.is_empty() {
        return if l.dim() == 0 {
            Ok(Representation { module_dim, action })
        } else {
            Err(RepViolation::Shape { detail: "missing action matrices".into() })
        };
    }
    if action[0].rows() != module_dim {
        return Err(RepViolation::Shape {
            detail: format!(
                "action matrices are {}x{}, module_dim is {module_dim}",
                action[0].rows(),
                action[0].cols()
            ),
        });
    }
    validate_rep(l, action)
}

/// `(ad*_x α)(y) = −α([x, y])`, i.e. `ρ(e_i) = −ad(e_i)ᵀ` in the dual basis.
pub fn coadjoint_rep(l: &LieAlgebra) -> Representation {
    Representation { module_dim: l.dim(), action: (0..l.dim()).map(|i| -&l.ad(i).transpose()).collect() }
}

/// `δ_CE f` for `f ∈ Hom(∧ⁿ𝔤, M)`.
pub fn ce_apply(l: &LieAlgebra, rep: &Representation, f: &Cochain) -> Cochain {
    let n = f.degree();
    let m = rep.module_dim();
    Cochain::from_fn(n + 1, l.dim(), m, |x| {
        let mut acc = zero_vec(m);
        for k in 0..=n {
            let rest: Vec<usize> = x.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v).collect();
            let term = rep.action_basis(x[k]).mul_vec(&f.eval_basis(&rest));
            axpy(&mut acc, &int(if k % 2 == 0 { 1 } else { -1 }), &term);
        }
        for k in 0..=n {
            for l2 in k + 1..=n {
                let br = l.bracket_basis(x[k], x[l2]);
                if is_zero_vec(&br) {
                    continue;
                }
                let rest: Vec<usize> =
                    x.iter().enumerate().filter(|&(i, _)| i != k && i != l2).map(|(_, &v)| v).collect();
                let term = f.eval_first_vector(&br, &rest);
                let sign = if (k + l2) % 2 == 0 { 1 } else { -1 };
                acc = vec_add(&acc, &signed(term, sign));
            }
        }
        acc
    })
}

/// Matrix of `δ_CE : Cⁿ → Cⁿ⁺¹` in concatenated-column coordinates.
pub fn ce_differential(l: &LieAlgebra, rep: &Representation, n: usize) -> Matrix {
    let m = rep.module_dim();
    let out = Cochain::space_dim(n + 1, l.dim(), m);
    Cochain::operator_matrix(n, l.dim(), m, out, |f| ce_apply(l, rep, f))
}

/// `dim Hⁿ = nullity(δⁿ) − rank(δⁿ⁻¹)` for `n = 0..=n_max`.
pub fn ce_cohomology_dims(l: &LieAlgebra, rep: &Representation, n_max: usize) -> Vec<usize> {
    cohomology_dims_from(n_max, |n| ce_differential(l, rep, n))
}

/// Cohomology dimensions from a family of differential matrices `d(n) : Cⁿ → Cⁿ⁺¹`.
pub(crate) fn cohomology_dims_from(n_max: usize, mut d: impl FnMut(usize) -> Matrix) -> Vec<usize> {
    let mats: Vec<Matrix> = (0..=n_max).map(&mut d).collect();
    let ranks: Vec<usize> = mats.iter().map(Matrix::rank).collect();
    (0..=n_max)
        .map(|n| {
            let nullity = mats[n].cols() - ranks[n];
            nullity - if n == 0 { 0 } else { ranks[n - 1] }
        })
        .collect()
}

/// `δ_CE H = 0`, with the first failing basis triple as witness.
pub fn is_two_cocycle(l: &LieAlgebra, rep: &Representation, h: &Cochain) -> Verdict {
    cocycle_verdict(l, rep, h, "2-cocycle")
}

pub(crate) fn cocycle_verdict(l: &LieAlgebra, rep: &Representation, f: &Cochain, label: &str) -> Verdict {
    match ce_apply(l, rep, f).first_nonzero() {
        None => Verdict::pass(),
        Some((t, d)) => Verdict::fail(label, t, d),
    }
}

/// `[Nx, Ny] = N([Nx, y] + [x, Ny] − N[x, y])` on basis pairs.
pub fn nijenhuis_check(l: &LieAlgebra, n: &Matrix) -> Verdict {
    let dim = l.dim();
    Verdict::first_defect("Nijenhuis identity", pairs(dim), |t| {
        let (x, y) = (unit_vec(dim, t[0]), unit_vec(dim, t[1]));
        let (nx, ny) = (n.mul_vec(&x), n.mul_vec(&y));
        let lhs = l.bracket(&nx, &ny);
        vec_sub(&lhs, &n.mul_vec(&deformed_pair(l, n, &x, &y)))
    })
}

fn deformed_pair(l: &LieAlgebra, n: &Matrix, x: &[Scalar], y: &[Scalar]) -> Vector {
    let a = l.bracket(&n.mul_vec(x), y);
    let b = l.bracket(x, &n.mul_vec(y));
    let c = n.mul_vec(&l.bracket(x, y));
    vec_sub(&vec_add(&a, &b), &c)
}

/// The bracket `[x, y]_N = [Nx, y] + [x, Ny] − N[x, y]` as a raw cochain.
pub fn deformed_bracket_cochain(l: &LieAlgebra, n: &Matrix) -> Cochain {
    let dim = l.dim();
    Cochain::from_fn(2, dim, dim, |t| deformed_pair(l, n, &unit_vec(dim, t[0]), &unit_vec(dim, t[1])))
}

/// `𝔤_N`; fails with `NotNijenhuis` if `N` is not Nijenhuis.
pub fn deformed_bracket(l: &LieAlgebra, n: &Matrix) -> Result<LieAlgebra> {
    check_endomorphism(l, n)?;
    let jacobi = LieAlgebra::from_cochain(deformed_bracket_cochain(l, n));
    if !nijenhuis_check(l, n).holds {
        return Err(Error::NotNijenhuis);
    }
    Ok(jacobi?)
}

pub(crate) fn check_endomorphism(l: &LieAlgebra, n: &Matrix) -> Result<()> {
    if n.rows() != l.dim() || n.cols() != l.dim() {
        return Err(Error::DimensionMismatch {
            context: "endomorphism of the Lie algebra",
            expected: l.dim(),
            found: n.rows(),
        });
    }
    Ok(())
}

/// `(𝔤_N, 𝔤, x•y = [Nx, y], H = −N∘μ)`, validated.
pub fn nijenhuis_trb_setup(l: &LieAlgebra, n: &Matrix) -> Result<TrbSetup> {
    let gn = deformed_bracket(l, n)?;
    let dim = l.dim();
    let action: Vec<Matrix> = (0..dim).map(|i| l.ad_of(&n.mul_vec(&unit_vec(dim, i)))).collect();
    let rep = validate_rep(&gn, action)?;
    let h = l.structure().compose_left(&-n);
    TrbSetup::new(gn, rep, h)
}

/// `d[x, y] = [dx, y] + [x, dy]` on basis pairs.
pub fn derivation_check(l: &LieAlgebra, d: &Matrix) -> Verdict {
    let dim = l.dim();
    Verdict::first_defect("derivation rule", pairs(dim), |t| {
        let (x, y) = (unit_vec(dim, t[0]), unit_vec(dim, t[1]));
        let lhs = d.mul_vec(&l.bracket(&x, &y));
        let rhs = vec_add(&l.bracket(&d.mul_vec(&x), &y), &l.bracket(&x, &d.mul_vec(&y)));
        vec_sub(&lhs, &rhs)
    })
}

/// Least `k ≥ 1` with `dᵏ = 0`, scanning `k ≤ dim² + 1`.
pub fn nilpotency_index(d: &Matrix) -> Result<usize> {
    if !d.is_square() {
        return Err(Error::NotSquare { rows: d.rows(), cols: d.cols() });
    }
    let n = d.rows();
    let mut p = d.clone();
    for k in 1..=n * n + 1 {
        if p.is_zero() {
            return Ok(k);
        }
        p = &p * d;
    }
    Err(Error::NotNilpotent)
}

/// `[e_i, e_j]` table for every ordered pair; helper for callers of [`validate_lie`].
pub fn bracket_table(l: &LieAlgebra) -> Vec<Vec<Vector>> {
    (0..l.dim()).map(|i| (0..l.dim()).map(|j| l.bracket_basis(i, j)).collect()).collect()
}

/// JSON wire form: `{"dim": n, "brackets": {"[i,j]": [..]}}`, `i < j`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LieAlgebraJson {
    pub dim: usize,
    #[serde(default)]
    pub brackets: BTreeMap<String, ScalarVec>,
}

impl From<&LieAlgebra> for LieAlgebraJson {
    fn from(l: &LieAlgebra) -> Self {
        let brackets = ExtBasis::new(l.dim(), 2)
            .tuples
            .into_iter()
            .filter_map(|t| {
                let v = l.bracket_basis(t[0], t[1]);
                (!is_zero_vec(&v)).then(|| (tuple_key(&t), ScalarVec(v)))
            })
            .collect();
        LieAlgebraJson { dim: l.dim(), brackets }
    }
}

impl TryFrom<LieAlgebraJson> for LieAlgebra {
    type Error = Error;
    fn try_from(j: LieAlgebraJson) -> Result<Self> {
        let mut entries = Vec::new();
        for (k, v) in j.brackets {
            let t = parse_tuple_key(&k)?;
            if t.len() != 2 {
                return Err(Error::Parse(format!("bracket key {k:?} must name a pair")));
            }
            entries.push((t[0], t[1], v.0));
        }
        LieAlgebra::from_brackets(j.dim, &entries)
    }
}

/// JSON wire form: `{"module_dim": m, "action": [matrix per generator]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RepresentationJson {
    pub module_dim: usize,
    pub action: Vec<Matrix>,
}

impl From<&Representation> for RepresentationJson {
    fn from(r: &Representation) -> Self {
        RepresentationJson { module_dim: r.module_dim, action: r.action.clone() }
    }
}

impl RepresentationJson {
    pub fn validate(self, l: &LieAlgebra) -> Result<Representation> {
        Ok(validate_rep_with_dim(l, self.module_dim, self.action)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::frac;

    fn heis_trivial() -> (LieAlgebra, Representation) {
        let l = LieAlgebra::heisenberg();
        let r = Representation::trivial(&l, 1);
        (l, r)
    }

    #[test]
    fn validate_lie_examples() {
        assert!(LieAlgebra::from_cochain(LieAlgebra::sl2().structure().clone()).is_ok());
        assert!(LieAlgebra::from_cochain(LieAlgebra::r2().structure().clone()).is_ok());
        let e1 = vec![int(1), int(0)];
        let table = vec![vec![zero_vec(2), e1.clone()], vec![e1, zero_vec(2)]];
        assert!(matches!(validate_lie(2, &table), Err(LieViolation::NotSkew { pair: (0, 1), .. })));
    }

    #[test]
    fn jacobi_violation_reports_first_triple() {
        // [e0,e1] = e2, [e1,e2] = e0, others zero: not Jacobi.
        let c = crate::multilin::cochain_from_values(
            2,
            3,
            3,
            [(vec![0, 1], unit_vec(3, 2)), (vec![1, 2], unit_vec(3, 0)), (vec![0, 2], unit_vec(3, 0))],
        )
        .unwrap();
        match LieAlgebra::from_cochain(c) {
            Err(LieViolation::Jacobi { triple, .. }) => assert_eq!(triple, (0, 1, 2)),
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn representations() {
        for l in [LieAlgebra::sl2(), LieAlgebra::heisenberg(), LieAlgebra::r2()] {
            let ad = Representation::adjoint(&l);
            assert!(validate_rep(&l, ad.action().to_vec()).is_ok());
            let co = coadjoint_rep(&l);
            assert!(validate_rep(&l, co.action().to_vec()).is_ok());
        }
        let a = LieAlgebra::abelian(2);
        assert!(validate_rep(&a, Representation::trivial(&a, 3).action().to_vec()).is_ok());
        let co = coadjoint_rep(&LieAlgebra::r2());
        assert_eq!(co.action_basis(0), &Matrix::from_i64(&[&[0, 0], &[0, -1]]));
        assert!(coadjoint_rep(&LieAlgebra::abelian(3)).action().iter().all(Matrix::is_zero));
        let sl2 = LieAlgebra::sl2();
        for i in 0..3 {
            assert_eq!(coadjoint_rep(&sl2).action_basis(i), &-&sl2.ad(i).transpose());
        }
    }

    #[test]
    fn bad_representation_is_rejected() {
        let l = LieAlgebra::r2();
        // ρ(e0) = 0, ρ(e1) = id violates ρ([e0,e1]) = ρ(e1).
        let action = vec![Matrix::zeros(1, 1), Matrix::identity(1)];
        assert!(matches!(validate_rep(&l, action), Err(RepViolation::Bracket { pair: (0, 1), .. })));
    }

    #[test]
    fn ce_differential_examples() {
        let (l, r) = heis_trivial();
        assert_eq!(ce_differential(&l, &r, 1).rank(), 1);
        let a = LieAlgebra::abelian(2);
        let t = Representation::trivial(&a, 2);
        for n in 0..3 {
            assert!(ce_differential(&a, &t, n).is_zero());
        }
        // degree 0: (δf)(x) = x • f
        let sl2 = LieAlgebra::sl2();
        let ad = Representation::adjoint(&sl2);
        let d0 = ce_differential(&sl2, &ad, 0);
        for i in 0..3 {
            for r in 0..3 {
                for c in 0..3 {
                    assert_eq!(d0[(i * 3 + r, c)], ad.action_basis(i)[(r, c)]);
                }
            }
        }
    }

    #[test]
    fn ce_squares_to_zero() {
        let sl2 = LieAlgebra::sl2();
        for rep in [Representation::adjoint(&sl2), coadjoint_rep(&sl2), Representation::trivial(&sl2, 2)] {
            for n in 0..3 {
                let prod = &ce_differential(&sl2, &rep, n + 1) * &ce_differential(&sl2, &rep, n);
                assert!(prod.is_zero(), "δ² != 0 at n = {n}");
            }
        }
    }

    #[test]
    fn cohomology_examples() {
        let a = LieAlgebra::abelian(1);
        assert_eq!(ce_cohomology_dims(&a, &Representation::trivial(&a, 1), 1), vec![1, 1]);
        let (l, r) = heis_trivial();
        assert_eq!(ce_cohomology_dims(&l, &r, 3)[1], 2);
        let sl2 = LieAlgebra::sl2();
        let dims = ce_cohomology_dims(&sl2, &Representation::adjoint(&sl2), 3);
        assert_eq!(&dims[..2], &[0, 0]);
    }

    #[test]
    fn two_cocycle_examples() {
        let sl2 = LieAlgebra::sl2();
        let ad = Representation::adjoint(&sl2);
        assert!(is_two_cocycle(&sl2, &ad, &Cochain::zero(2, 3, 3)).holds);
        assert!(is_two_cocycle(&sl2, &ad, sl2.structure()).holds);
        let h = Cochain::linear(&Matrix::from_i64(&[&[1, 2, 0], &[0, -1, 3], &[1, 1, 1]]));
        assert!(is_two_cocycle(&sl2, &ad, &ce_apply(&sl2, &ad, &h)).holds);
        // a random 2-cochain with adjoint coefficients is not closed
        let bad = Cochain::from_fn(2, 3, 3, |t| if t == [0, 1] { unit_vec(3, 0) } else { zero_vec(3) });
        let v = is_two_cocycle(&sl2, &ad, &bad);
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().tuple, vec![0, 1, 2]);
    }

    #[test]
    fn nijenhuis_examples() {
        let sl2 = LieAlgebra::sl2();
        assert!(nijenhuis_check(&sl2, &Matrix::identity(3)).holds);
        assert_eq!(deformed_bracket(&sl2, &Matrix::identity(3)).unwrap(), sl2);
        assert!(deformed_bracket(&sl2, &Matrix::zeros(3, 3)).unwrap().is_abelian());
        let r2 = LieAlgebra::r2();
        for (a, b) in [(1, 2), (-1, 3), (0, 5), (frac(1, 2).to_integer().try_into().unwrap_or(7), -4)] {
            let n = Matrix::diagonal(&[int(a), int(b)]);
            assert!(nijenhuis_check(&r2, &n).holds);
            assert!(nijenhuis_trb_setup(&r2, &n).is_ok());
        }
    }

    #[test]
    fn non_nijenhuis_rejected() {
        let sl2 = LieAlgebra::sl2();
        let n = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let v = nijenhuis_check(&sl2, &n);
        if !v.holds {
            assert!(matches!(deformed_bracket(&sl2, &n), Err(Error::NotNijenhuis) | Err(Error::NotLie(_))));
        }
    }

    #[test]
    fn derivations() {
        let h = LieAlgebra::heisenberg();
        let zero = Matrix::zeros(3, 3);
        assert!(derivation_check(&h, &zero).holds);
        assert_eq!(nilpotency_index(&zero).unwrap(), 1);
        let mut d = Matrix::zeros(3, 3);
        d[(2, 0)] = int(1);
        assert!(derivation_check(&h, &d).holds);
        assert_eq!(nilpotency_index(&d).unwrap(), 2);
        assert!(!derivation_check(&h, &Matrix::identity(3)).holds);
        assert!(matches!(nilpotency_index(&Matrix::identity(2)), Err(Error::NotNilpotent)));
    }

    #[test]
    fn json_forms() {
        let s = r#"{"dim": 3, "brackets": {"[0,1]": [0, 0, 1]}}"#;
        let j: LieAlgebraJson = serde_json::from_str(s).unwrap();
        assert_eq!(LieAlgebra::try_from(j).unwrap(), LieAlgebra::heisenberg());
        let back = serde_json::to_string(&LieAlgebraJson::from(&LieAlgebra::heisenberg())).unwrap();
        assert_eq!(back, r#"{"dim":3,"brackets":{"[0,1]":["0","0","1"]}}"#);
    }
}
