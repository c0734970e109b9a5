//! Twisted Rota-Baxter operators `T : M → 𝔤` and the structures they induce.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, frac, int, unit_vec, vec_add, vec_sub, Matrix, Scalar, Vector};
use crate::liealg::{
    ce_apply, check_endomorphism, coadjoint_rep, cocycle_verdict, derivation_check, nilpotency_index, LieAlgebra,
    Representation,
};
use crate::multilin::Cochain;
use crate::verdict::{grid2, pairs, Verdict};

/// Lie algebra, module and twisting 2-cocycle `H`, validated together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrbSetup {
    algebra: LieAlgebra,
    rep: Representation,
    h: Cochain,
}

impl TrbSetup {
    pub fn new(algebra: LieAlgebra, rep: Representation, h: Cochain) -> Result<Self> {
        if rep.action().len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                context: "action matrices",
                expected: algebra.dim(),
                found: rep.action().len(),
            });
        }
        if h.degree() != 2 || h.source_dim() != algebra.dim() || h.target_dim() != rep.module_dim() {
            return Err(Error::DimensionMismatch {
                context: "twisting cocycle shape",
                expected: rep.module_dim(),
                found: h.target_dim(),
            });
        }
        let v = cocycle_verdict(&algebra, &rep, &h, "2-cocycle");
        if let Some(w) = v.witness {
            return Err(Error::NotCocycle(format!("delta H is nonzero on {:?}", w.tuple)));
        }
        Ok(TrbSetup { algebra, rep, h })
    }

    /// `H = 0`.
    pub fn untwisted(algebra: LieAlgebra, rep: Representation) -> Self {
        let h = Cochain::zero(2, algebra.dim(), rep.module_dim());
        TrbSetup { algebra, rep, h }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.h
    }

    pub fn lie_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn module_dim(&self) -> usize {
        self.rep.module_dim()
    }

    pub fn h(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.h.eval(&[x.to_vec(), y.to_vec()])
    }

    /// Same algebra and module with `H` replaced by `c·H`.
    pub fn with_scaled_cocycle(&self, c: &Scalar) -> TrbSetup {
        TrbSetup { h: self.h.scale(c), ..self.clone() }
    }

    pub fn check_operator(&self, t: &Matrix) -> Result<()> {
        if t.rows() != self.lie_dim() || t.cols() != self.module_dim() {
            return Err(Error::DimensionMismatch {
                context: "operator T : M -> g",
                expected: self.lie_dim() * self.module_dim(),
                found: t.rows() * t.cols(),
            });
        }
        Ok(())
    }

    /// `x • v − y • u + H(x, y)`, the module part of the twisted semidirect bracket.
    fn mixed(&self, x: &[Scalar], u: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vector {
        let a = vec_sub(&self.rep.act(x, v), &self.rep.act(y, u));
        vec_add(&a, &self.h(x, y))
    }
}

/// `T(Tu • v − Tv • u + H(Tu, Tv)) − [Tu, Tv]`.
pub fn trb_defect(s: &TrbSetup, t: &Matrix, u: &[Scalar], v: &[Scalar]) -> Vector {
    let (tu, tv) = (t.mul_vec(u), t.mul_vec(v));
    let rhs = t.mul_vec(&s.mixed(&tu, u, &tv, v));
    vec_sub(&rhs, &s.algebra.bracket(&tu, &tv))
}

pub fn check_trb(s: &TrbSetup, t: &Matrix) -> Result<Verdict> {
    s.check_operator(t)?;
    let m = s.module_dim();
    Ok(Verdict::first_defect("twisted Rota-Baxter identity", pairs(m), |p| {
        trb_defect(s, t, &unit_vec(m, p[0]), &unit_vec(m, p[1]))
    }))
}

pub(crate) fn require_trb(s: &TrbSetup, t: &Matrix) -> Result<()> {
    let v = check_trb(s, t)?;
    match v.witness {
        None => Ok(()),
        Some(w) => Err(Error::NotTwistedRb(format!("identity fails on basis pair {:?}", w.tuple))),
    }
}

/// `𝔤 ⋉_H M` with `[(x,u),(y,v)] = ([x,y], x•v − y•u + H(x,y))`.
pub fn twisted_semidirect(s: &TrbSetup) -> LieAlgebra {
    let (n, m) = (s.lie_dim(), s.module_dim());
    let c = Cochain::from_fn(2, n + m, n + m, |t| {
        let (a, b) = (unit_vec(n + m, t[0]), unit_vec(n + m, t[1]));
        semidirect_bracket(s, &a, &b)
    });
    LieAlgebra::from_cochain(c).expect("twisted semidirect product of a valid setup satisfies Jacobi")
}

pub(crate) fn semidirect_bracket(s: &TrbSetup, a: &[Scalar], b: &[Scalar]) -> Vector {
    let n = s.lie_dim();
    let (x, u) = a.split_at(n);
    let (y, v) = b.split_at(n);
    let mut out = s.algebra.bracket(x, y);
    out.extend(s.mixed(x, u, y, v));
    out
}

/// Whether the graph `{(Tu, u)}` is closed under the twisted semidirect bracket.
pub fn graph_subalgebra_check(s: &TrbSetup, t: &Matrix) -> Result<Verdict> {
    s.check_operator(t)?;
    let (n, m) = (s.lie_dim(), s.module_dim());
    let big = twisted_semidirect(s);
    let graph = |i: usize| {
        let u = unit_vec(m, i);
        let mut g = t.mul_vec(&u);
        g.extend(u);
        g
    };
    Ok(Verdict::first_defect("graph closure", pairs(m), |p| {
        let w = big.bracket(&graph(p[0]), &graph(p[1]));
        let (x, u) = w.split_at(n);
        vec_sub(x, &t.mul_vec(u))
    }))
}

/// `[u, v]_T = Tu • v − Tv • u + H(Tu, Tv)` without the TRB check.
pub fn induced_bracket_cochain(s: &TrbSetup, t: &Matrix) -> Cochain {
    let m = s.module_dim();
    Cochain::from_fn(2, m, m, |p| {
        let (u, v) = (unit_vec(m, p[0]), unit_vec(m, p[1]));
        s.mixed(&t.mul_vec(&u), &u, &t.mul_vec(&v), &v)
    })
}

pub fn induced_bracket(s: &TrbSetup, t: &Matrix) -> Result<LieAlgebra> {
    require_trb(s, t)?;
    Ok(LieAlgebra::from_cochain(induced_bracket_cochain(s, t))?)
}

/// `u •̄ x = [Tu, x] + T(x • u + H(x, Tu))`, one matrix per basis vector of `M`.
pub fn induced_action(s: &TrbSetup, t: &Matrix) -> Vec<Matrix> {
    let (n, m) = (s.lie_dim(), s.module_dim());
    (0..m)
        .map(|i| {
            let u = unit_vec(m, i);
            let tu = t.mul_vec(&u);
            let cols: Vec<Vector> = (0..n)
                .map(|j| {
                    let x = unit_vec(n, j);
                    let inner = vec_add(&s.rep.act(&x, &u), &s.h(&x, &tu));
                    vec_add(&s.algebra.bracket(&tu, &x), &t.mul_vec(&inner))
                })
                .collect();
            Matrix::from_columns(n, &cols)
        })
        .collect()
}

/// The induced algebra `(M, [·,·]_T)` together with its representation on `𝔤`.
pub fn induced_structure(s: &TrbSetup, t: &Matrix) -> Result<(LieAlgebra, Representation)> {
    let mt = induced_bracket(s, t)?;
    let rep = crate::liealg::validate_rep_with_dim(&mt, s.lie_dim(), induced_action(s, t))?;
    Ok((mt, rep))
}

pub fn induced_rep(s: &TrbSetup, t: &Matrix) -> Result<Representation> {
    Ok(induced_structure(s, t)?.1)
}

fn check_one_cochain(s: &TrbSetup, b: &Matrix, what: &'static str) -> Result<()> {
    if b.rows() != s.module_dim() || b.cols() != s.lie_dim() {
        return Err(Error::DimensionMismatch {
            context: what,
            expected: s.module_dim() * s.lie_dim(),
            found: b.rows() * b.cols(),
        });
    }
    Ok(())
}

/// `T_B = T(id + B∘T)⁻¹` for a 1-cocycle `B : 𝔤 → M`.
///
/// The result is re-checked, and `id + B∘T` is verified to carry `[·,·]_T`
/// onto `[·,·]_{T_B}`.
pub fn gauge_transform(s: &TrbSetup, t: &Matrix, b: &Matrix) -> Result<Matrix> {
    s.check_operator(t)?;
    check_one_cochain(s, b, "gauge 1-cocycle B : g -> M")?;
    let delta = ce_apply(&s.algebra, &s.rep, &Cochain::linear(b));
    if let Some((tuple, _)) = delta.first_nonzero() {
        return Err(Error::NotCocycle(format!("delta B is nonzero on {tuple:?}")));
    }
    require_trb(s, t)?;
    let phi = &Matrix::identity(s.module_dim()) + &(b * t);
    let inv = phi.invert().map_err(|_| Error::NotAdmissible("id + B T is singular"))?;
    let tb = t * &inv;
    require_trb(s, &tb).map_err(|_| Error::Postcondition("gauge transform is not twisted Rota-Baxter".into()))?;
    let transport = transport_check(s, t, &tb, &phi);
    if !transport.holds {
        return Err(Error::Postcondition("id + B T does not intertwine the induced brackets".into()));
    }
    Ok(tb)
}

/// `φ[u, v]_T = [φu, φv]_{T'}` on basis pairs.
pub fn transport_check(s: &TrbSetup, t: &Matrix, t2: &Matrix, phi: &Matrix) -> Verdict {
    let b1 = induced_bracket_cochain(s, t);
    let b2 = induced_bracket_cochain(s, t2);
    let m = s.module_dim();
    Verdict::first_defect("bracket transport", pairs(m), |p| {
        let lhs = phi.mul_vec(&b1.eval_basis(p));
        let rhs = b2.eval(&[phi.col(p[0]), phi.col(p[1])]);
        vec_sub(&lhs, &rhs)
    })
}

/// Replaces `H` by `H + δh` and `T` by `T(id − h∘T)⁻¹`.
pub fn shift_by_coboundary(s: &TrbSetup, t: &Matrix, h: &Matrix) -> Result<(TrbSetup, Matrix)> {
    s.check_operator(t)?;
    check_one_cochain(s, h, "shift 1-cochain h : g -> M")?;
    require_trb(s, t)?;
    let dh = ce_apply(&s.algebra, &s.rep, &Cochain::linear(h));
    let shifted = TrbSetup { h: s.h.add(&dh), ..s.clone() };
    let psi = &Matrix::identity(s.module_dim()) - &(h * t);
    let inv = psi.invert().map_err(|_| Error::NotAdmissible("id - h T is singular"))?;
    let t2 = t * &inv;
    require_trb(&shifted, &t2)
        .map_err(|_| Error::Postcondition("shifted operator is not twisted Rota-Baxter".into()))?;
    Ok((shifted, t2))
}

/// Adjoint module with `H = −μ`.
pub fn reynolds_setup(l: &LieAlgebra) -> TrbSetup {
    let h = l.structure().neg();
    TrbSetup { algebra: l.clone(), rep: Representation::adjoint(l), h }
}

/// `[Rx, Ry] = R([Rx, y] + [x, Ry] − [Rx, Ry])`, checked directly and as a
/// `(−μ)`-twisted operator on the adjoint module; the two must agree.
pub fn reynolds_check(l: &LieAlgebra, r: &Matrix) -> Result<Verdict> {
    check_endomorphism(l, r)?;
    let n = l.dim();
    let direct = Verdict::first_defect("Reynolds identity", pairs(n), |p| {
        let (x, y) = (unit_vec(n, p[0]), unit_vec(n, p[1]));
        let (rx, ry) = (r.mul_vec(&x), r.mul_vec(&y));
        let rrxy = l.bracket(&rx, &ry);
        let inner = vec_sub(&vec_add(&l.bracket(&rx, &y), &l.bracket(&x, &ry)), &rrxy);
        vec_sub(&rrxy, &r.mul_vec(&inner))
    });
    let via = check_trb(&reynolds_setup(l), r)?;
    let same_tuple = direct.witness.as_ref().map(|w| &w.tuple) == via.witness.as_ref().map(|w| &w.tuple);
    if direct.holds != via.holds || !same_tuple {
        return Err(Error::Postcondition("direct and twisted Reynolds checks disagree".into()));
    }
    Ok(direct)
}

/// `R = Σ_{k < index} (−1)ᵏ dᵏ` for a nilpotent derivation `d`.
pub fn reynolds_from_derivation(l: &LieAlgebra, d: &Matrix) -> Result<Matrix> {
    check_endomorphism(l, d)?;
    if !derivation_check(l, d).holds {
        return Err(Error::NotDerivation);
    }
    let index = nilpotency_index(d)?;
    let n = l.dim();
    let mut r = Matrix::zeros(n, n);
    let mut p = Matrix::identity(n);
    for k in 0..index {
        r = if k % 2 == 0 { &r + &p } else { &r - &p };
        p = &p * d;
    }
    if !reynolds_check(l, &r)?.holds {
        return Err(Error::Postcondition("derivation series is not a Reynolds operator".into()));
    }
    Ok(r)
}

/// An element of the Witt algebra `W_{≥0}` as finitely many coefficients of `l_m`.
type WittElem = BTreeMap<i64, Scalar>;

fn witt_bracket(a: &WittElem, b: &WittElem) -> WittElem {
    let mut out = WittElem::new();
    for (m, x) in a {
        for (n, y) in b {
            let c = x * y * int(m - n);
            if !c.is_zero() {
                *out.entry(m + n).or_insert_with(Scalar::zero) += c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn witt_r(a: &WittElem) -> WittElem {
    a.iter().map(|(m, c)| (*m, c * frac(1, m + 1))).collect()
}

fn witt_combine(a: &WittElem, b: &WittElem, sign: i64) -> WittElem {
    let mut out = a.clone();
    for (k, c) in b {
        *out.entry(*k).or_insert_with(Scalar::zero) += c * int(sign);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficient of `l_k`, requiring every other coefficient to vanish.
fn witt_line(a: &WittElem, k: i64) -> Option<Scalar> {
    if a.keys().any(|&j| j != k) {
        return None;
    }
    Some(a.get(&k).cloned().unwrap_or_else(Scalar::zero))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WittRow {
    pub m: i64,
    pub n: i64,
    #[serde(with = "crate::exactlin::scalar_serde")]
    pub lhs: Scalar,
    #[serde(with = "crate::exactlin::scalar_serde")]
    pub rhs: Scalar,
    #[serde(with = "crate::exactlin::scalar_serde")]
    pub induced_coeff: Scalar,
    pub pass: bool,
}

struct WittPair {
    lhs: Option<Scalar>,
    rhs: Option<Scalar>,
    induced: Option<Scalar>,
}

fn witt_pair(m: i64, n: i64) -> WittPair {
    let lm: WittElem = [(m, Scalar::one())].into();
    let ln: WittElem = [(n, Scalar::one())].into();
    let (rm, rn) = (witt_r(&lm), witt_r(&ln));
    let rr = witt_bracket(&rm, &rn);
    let inner = witt_combine(&witt_combine(&witt_bracket(&rm, &ln), &witt_bracket(&lm, &rn), 1), &rr, -1);
    WittPair { lhs: witt_line(&rr, m + n), rhs: witt_line(&witt_r(&inner), m + n), induced: witt_line(&inner, m + n) }
}

/// Reynolds identity for `R(l_m) = l_m/(m+1)` on `W_{≥0}`, rows `0 ≤ m ≤ n ≤ n_max`.
///
/// A row passes when both orders `(m, n)` and `(n, m)` land on the expected
/// multiples of `l_{m+n}`.
pub fn witt_report(n_max: i64) -> Vec<WittRow> {
    let expected = |m: i64, n: i64| (frac(m - n, (m + 1) * (n + 1)), frac((m - n) * (m + n + 1), (m + 1) * (n + 1)));
    let ok = |m: i64, n: i64| {
        let p = witt_pair(m, n);
        let (e, ei) = expected(m, n);
        p.lhs.as_ref() == Some(&e) && p.rhs.as_ref() == Some(&e) && p.induced.as_ref() == Some(&ei)
    };
    let mut rows = Vec::new();
    for m in 0..=n_max {
        for n in m..=n_max {
            let p = witt_pair(m, n);
            let zero = Scalar::zero;
            rows.push(WittRow {
                m,
                n,
                pass: ok(m, n) && ok(n, m),
                lhs: p.lhs.unwrap_or_else(zero),
                rhs: p.rhs.unwrap_or_else(zero),
                induced_coeff: p.induced.unwrap_or_else(zero),
            });
        }
    }
    rows
}

pub fn render_witt_row(r: &WittRow) -> String {
    format!(
        "{:>3} {:>3} {:>12} {:>12} {:>12} {}",
        r.m,
        r.n,
        format_scalar(&r.lhs),
        format_scalar(&r.rhs),
        format_scalar(&r.induced_coeff),
        if r.pass { "pass" } else { "FAIL" }
    )
}

/// `ψ♯(x, y) = ψ(x, y, ·) ∈ 𝔤*`.
pub fn psi_sharp(psi: &Cochain) -> Cochain {
    let n = psi.source_dim();
    Cochain::from_fn(2, n, n, |t| (0..n).map(|k| psi.eval_basis(&[t[0], t[1], k])[0].clone()).collect())
}

/// `r♯(α) = r(α, ·)`, i.e. the matrix `rᵀ`.
pub fn r_sharp(r: &Matrix) -> Matrix {
    r.transpose()
}

pub fn is_skew(m: &Matrix) -> bool {
    m.is_square() && (&m.transpose() + m).is_zero()
}

pub(crate) fn check_psi(l: &LieAlgebra, psi: &Cochain) -> Result<()> {
    if psi.degree() != 3 || psi.source_dim() != l.dim() || psi.target_dim() != 1 {
        return Err(Error::DimensionMismatch {
            context: "3-cochain psi to the ground field",
            expected: l.dim(),
            found: psi.source_dim(),
        });
    }
    let triv = Representation::trivial(l, 1);
    if let Some((t, _)) = ce_apply(l, &triv, psi).first_nonzero() {
        return Err(Error::NotCocycle(format!("delta psi is nonzero on {t:?}")));
    }
    Ok(())
}

/// The setup `(𝔤, 𝔤*, ad*, ψ♯)` for twisted triangular r-matrices.
pub fn r_matrix_setup(l: &LieAlgebra, psi: &Cochain) -> Result<TrbSetup> {
    check_psi(l, psi)?;
    TrbSetup::new(l.clone(), coadjoint_rep(l), psi_sharp(psi))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RMatrixReport {
    pub verdict: Verdict,
    /// `[α, β] = ad*_{r♯α}β − ad*_{r♯β}α + ψ(r♯α, r♯β, ·)` on `𝔤*`.
    pub dual_bracket: Cochain,
    /// `r♯[α, β] = [r♯α, r♯β]`.
    pub morphism: Verdict,
}

pub fn r_matrix_check(l: &LieAlgebra, r: &Matrix, psi: &Cochain) -> Result<RMatrixReport> {
    check_endomorphism(l, r)?;
    if !is_skew(r) {
        return Err(Error::NotSkew);
    }
    let s = r_matrix_setup(l, psi)?;
    let rs = r_sharp(r);
    let verdict = check_trb(&s, &rs)?;
    let n = l.dim();
    let co = coadjoint_rep(l);
    let dual_bracket = Cochain::from_fn(2, n, n, |p| {
        let (a, b) = (unit_vec(n, p[0]), unit_vec(n, p[1]));
        let (ra, rb) = (rs.mul_vec(&a), rs.mul_vec(&b));
        let tw: Vector = (0..n).map(|k| psi.eval(&[ra.clone(), rb.clone(), unit_vec(n, k)])[0].clone()).collect();
        vec_add(&vec_sub(&co.act(&ra, &b), &co.act(&rb, &a)), &tw)
    });
    let morphism = Verdict::first_defect("r-sharp morphism", pairs(n), |p| {
        let lhs = rs.mul_vec(&dual_bracket.eval_basis(p));
        vec_sub(&lhs, &l.bracket(&rs.col(p[0]), &rs.col(p[1])))
    });
    if verdict.holds != morphism.holds {
        return Err(Error::Postcondition("r-matrix verdict and morphism property disagree".into()));
    }
    Ok(RMatrixReport { verdict, dual_bracket, morphism })
}

/// Pair `(φ : 𝔤 → 𝔤', ψ : M → M')` between two operators; each condition of the
/// morphism definition is reported separately.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MorphismReport {
    pub lie_morphism: Verdict,
    pub equivariant: Verdict,
    pub cocycles: Verdict,
    pub intertwines: Verdict,
}

impl MorphismReport {
    pub fn holds(&self) -> bool {
        self.lie_morphism.holds && self.equivariant.holds && self.cocycles.holds && self.intertwines.holds
    }
}

pub fn morphism_check(
    s: &TrbSetup,
    t: &Matrix,
    s2: &TrbSetup,
    t2: &Matrix,
    phi: &Matrix,
    psi: &Matrix,
) -> Result<MorphismReport> {
    s.check_operator(t)?;
    s2.check_operator(t2)?;
    let (n, m) = (s.lie_dim(), s.module_dim());
    if phi.rows() != s2.lie_dim() || phi.cols() != n || psi.rows() != s2.module_dim() || psi.cols() != m {
        return Err(Error::DimensionMismatch {
            context: "morphism components",
            expected: n + m,
            found: phi.cols() + psi.cols(),
        });
    }
    let (g, g2) = (s.algebra(), s2.algebra());
    let lie_morphism = Verdict::first_defect("phi is a Lie morphism", pairs(n), |p| {
        vec_sub(&phi.mul_vec(&g.bracket_basis(p[0], p[1])), &g2.bracket(&phi.col(p[0]), &phi.col(p[1])))
    });
    let equivariant = Verdict::first_defect("psi(x . u) = phi(x) . psi(u)", grid2(n, m), |p| {
        let (x, u) = (unit_vec(n, p[0]), unit_vec(m, p[1]));
        vec_sub(&psi.mul_vec(&s.rep.act(&x, &u)), &s2.rep.act(&phi.mul_vec(&x), &psi.mul_vec(&u)))
    });
    let cocycles = Verdict::first_defect("psi H = H' (phi x phi)", pairs(n), |p| {
        vec_sub(&psi.mul_vec(&s.cocycle().eval_basis(p)), &s2.h(&phi.col(p[0]), &phi.col(p[1])))
    });
    let intertwines = Verdict::first_defect("phi T = T' psi", (0..m).map(|i| vec![i]), |p| {
        let u = unit_vec(m, p[0]);
        vec_sub(&phi.mul_vec(&t.mul_vec(&u)), &t2.mul_vec(&psi.mul_vec(&u)))
    });
    Ok(MorphismReport { lie_morphism, equivariant, cocycles, intertwines })
}

/// `T = h⁻¹` twisted by `H = −δh`, for an invertible `h : 𝔤 → M`.
pub fn inverse_cochain_setup(l: &LieAlgebra, rep: &Representation, h: &Matrix) -> Result<(TrbSetup, Matrix)> {
    let t = h.invert()?;
    let dh = ce_apply(l, rep, &Cochain::linear(h));
    let s = TrbSetup::new(l.clone(), rep.clone(), dh.neg())?;
    s.check_operator(&t)?;
    Ok((s, t))
}

pub fn zero_operator(s: &TrbSetup) -> Matrix {
    Matrix::zeros(s.lie_dim(), s.module_dim())
}

/// Validates a representation given only by action matrices, as used for adjoint-type setups.
pub fn setup_from_parts(l: LieAlgebra, action: Vec<Matrix>, h: Cochain) -> Result<TrbSetup> {
    let m = h.target_dim();
    let rep = crate::liealg::validate_rep_with_dim(&l, m, action)?;
    TrbSetup::new(l, rep, h)
}
