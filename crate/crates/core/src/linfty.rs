//! The L∞-algebra on `⊕ₙ Hom(∧ⁿM, 𝔤)` controlling twisted Rota-Baxter operators.
//!
//! A graded element is a [`Cochain`] from `M` to `𝔤`; its degree is its arity.

use crate::error::{Error, Result};
use crate::exactlin::{axpy, frac, int, unit_vec, zero_vec, Matrix, Scalar, Vector};
use crate::liealg::{ce_apply, ce_cohomology_dims, cohomology_dims_from};
use crate::multilin::{enumerate_unshuffles, Cochain, Unshuffle};
use crate::twistrb::{check_trb, induced_structure, require_trb, TrbSetup};

fn check_element(s: &TrbSetup, p: &Cochain) -> Result<()> {
    if p.source_dim() != s.module_dim() || p.target_dim() != s.lie_dim() {
        return Err(Error::DimensionMismatch {
            context: "element of Hom(M^p, g)",
            expected: s.module_dim() * s.lie_dim(),
            found: p.source_dim() * p.target_dim(),
        });
    }
    Ok(())
}

fn sign_of(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn shuffled(idx: &[usize], sh: &Unshuffle) -> Vec<usize> {
    sh.perm.iter().map(|&k| idx[k]).collect()
}

/// `Σ_σ sign(σ) outer(inner(u..) • u, u..)` over `Sh(q, 1, p−1)`.
fn act_term(
    s: &TrbSetup,
    outer: &Cochain,
    inner: &Cochain,
    idx: &[usize],
    shuffles: &[Unshuffle],
    acc: &mut [Scalar],
    c: &Scalar,
) {
    let q = inner.degree();
    let m = s.module_dim();
    for sh in shuffles {
        let a = shuffled(idx, sh);
        let x = inner.eval_basis(&a[..q]);
        let mv = s.rep().act(&x, &unit_vec(m, a[q]));
        let val = outer.eval_first_vector(&mv, &a[q + 1..]);
        axpy(acc, &(c * int(sh.sign as i64)), &val);
    }
}

/// `Σ_σ sign(σ) outer(H(first(u..), second(u..)), u..)`.
#[allow(clippy::too_many_arguments)]
fn h_term(
    s: &TrbSetup,
    outer: &Cochain,
    first: &Cochain,
    second: &Cochain,
    idx: &[usize],
    shuffles: &[Unshuffle],
    acc: &mut [Scalar],
    c: &Scalar,
) {
    let (b, d) = (first.degree(), second.degree());
    for sh in shuffles {
        let a = shuffled(idx, sh);
        let hv = s.h(&first.eval_basis(&a[..b]), &second.eval_basis(&a[b..b + d]));
        let val = outer.eval_first_vector(&hv, &a[b + d..]);
        axpy(acc, &(c * int(sh.sign as i64)), &val);
    }
}

/// Unshuffles for a nested term whose outer map has arity `outer`; empty when `outer = 0`.
fn nested_shuffles(a: usize, b: usize, outer: usize) -> Vec<Unshuffle> {
    if outer == 0 {
        Vec::new()
    } else if b == usize::MAX {
        enumerate_unshuffles(&[a, 1, outer - 1])
    } else {
        enumerate_unshuffles(&[a, b, outer - 1])
    }
}

/// The binary bracket `⟦P, Q⟧ ∈ Hom(∧^{p+q}M, 𝔤)`.
pub fn bracket2(s: &TrbSetup, p: &Cochain, q: &Cochain) -> Result<Cochain> {
    check_element(s, p)?;
    check_element(s, q)?;
    Ok(bracket2_raw(s, p, q))
}

pub(crate) fn bracket2_raw(s: &TrbSetup, pp: &Cochain, qq: &Cochain) -> Cochain {
    let (p, q) = (pp.degree(), qq.degree());
    let n = s.lie_dim();
    let e = sign_of(p * q);
    let sh1 = nested_shuffles(q, usize::MAX, p);
    let sh2 = nested_shuffles(p, usize::MAX, q);
    let sh3 = enumerate_unshuffles(&[p, q]);
    let (one, c2, c3) = (int(1), int(-e), int(e));
    let g = s.algebra();
    Cochain::from_fn(p + q, s.module_dim(), n, |idx| {
        let mut acc = zero_vec(n);
        act_term(s, pp, qq, idx, &sh1, &mut acc, &one);
        act_term(s, qq, pp, idx, &sh2, &mut acc, &c2);
        for sh in &sh3 {
            let a = shuffled(idx, sh);
            let v = g.bracket(&pp.eval_basis(&a[..p]), &qq.eval_basis(&a[p..]));
            axpy(&mut acc, &(&c3 * int(sh.sign as i64)), &v);
        }
        acc
    })
}

/// The ternary bracket `⟦P, Q, R⟧ ∈ Hom(∧^{p+q+r−1}M, 𝔤)` built from `H`:
///
/// `½{c_P Σ P(H(Q,R), ..) ∓ .. }` summed over the six placements of `H`, with
/// `c_P = −(−1)^{p+qr}`, `c_Q = (−1)^{q+pq+pr}`, `c_R = −(−1)^{r+pq+qr+rp}`
/// and each pair `X(H(Y,Z)), X(H(Z,Y))` related by `−(−1)^{|Y||Z|}`. These are
/// the signs of the derived bracket `−(−1)^q [[[H, P], Q], R]`; when two of the
/// inputs have degree 1 they reduce to the prefactor `(−1)^{pqr}` form.
///
/// Three degree-0 inputs have no bracket (the target degree would be −1).
pub fn bracket3(s: &TrbSetup, p: &Cochain, q: &Cochain, r: &Cochain) -> Result<Cochain> {
    for x in [p, q, r] {
        check_element(s, x)?;
    }
    bracket3_raw(s, p, q, r).ok_or(Error::DimensionMismatch {
        context: "ternary bracket output degree",
        expected: 1,
        found: 0,
    })
}

pub(crate) fn bracket3_raw(s: &TrbSetup, pp: &Cochain, qq: &Cochain, rr: &Cochain) -> Option<Cochain> {
    let (p, q, r) = (pp.degree(), qq.degree(), rr.degree());
    if p + q + r == 0 {
        return None;
    }
    let n = s.lie_dim();
    let half = frac(1, 2);
    let ca = -sign_of(p + q * r);
    let cb = sign_of(q + p * q + p * r);
    let cc = -sign_of(r + p * q + q * r + r * p);
    let terms: [(&Cochain, &Cochain, &Cochain, i64); 6] = [
        (pp, qq, rr, ca),
        (pp, rr, qq, -sign_of(q * r) * ca),
        (qq, pp, rr, cb),
        (qq, rr, pp, -sign_of(p * r) * cb),
        (rr, pp, qq, cc),
        (rr, qq, pp, -sign_of(p * q) * cc),
    ];
    let plan: Vec<(&Cochain, &Cochain, &Cochain, Scalar, Vec<Unshuffle>)> = terms
        .iter()
        .map(|&(o, a, b, c)| (o, a, b, &half * int(c), nested_shuffles(a.degree(), b.degree(), o.degree())))
        .collect();
    Some(Cochain::from_fn(p + q + r - 1, s.module_dim(), n, |idx| {
        let mut acc = zero_vec(n);
        for (o, a, b, c, sh) in &plan {
            h_term(s, o, a, b, idx, sh, &mut acc, c);
        }
        acc
    }))
}

/// `½⟦T,T⟧ − ⅙⟦T,T,T⟧`, which vanishes exactly when `T` is twisted Rota-Baxter.
pub fn mc_defect(s: &TrbSetup, t: &Matrix) -> Result<Cochain> {
    s.check_operator(t)?;
    let tc = Cochain::linear(t);
    let d = mc_raw(s, &tc);
    if d.is_zero() != check_trb(s, t)?.holds {
        return Err(Error::Postcondition("Maurer-Cartan defect disagrees with the operator identity".into()));
    }
    Ok(d)
}

fn mc_raw(s: &TrbSetup, tc: &Cochain) -> Cochain {
    let b2 = bracket2_raw(s, tc, tc).scale(&frac(1, 2));
    let b3 = bracket3_raw(s, tc, tc, tc).expect("degree 1").scale(&frac(1, 6));
    b2.sub(&b3)
}

/// `d_T f = ⟦T, f⟧ − ½⟦T, T, f⟧`.
pub fn d_t(s: &TrbSetup, t: &Matrix, f: &Cochain) -> Result<Cochain> {
    check_element(s, f)?;
    require_trb(s, t)?;
    Ok(d_t_raw(s, &Cochain::linear(t), f))
}

pub(crate) fn d_t_raw(s: &TrbSetup, tc: &Cochain, f: &Cochain) -> Cochain {
    let a = bracket2_raw(s, tc, f);
    let b = bracket3_raw(s, tc, tc, f).expect("degree at least 1");
    a.sub(&b.scale(&frac(1, 2)))
}

/// Matrix of `d_T : Hom(∧ⁿM, 𝔤) → Hom(∧ⁿ⁺¹M, 𝔤)`.
pub fn d_t_matrix(s: &TrbSetup, t: &Matrix, n: usize) -> Result<Matrix> {
    require_trb(s, t)?;
    Ok(d_t_matrix_raw(s, t, n))
}

fn d_t_matrix_raw(s: &TrbSetup, t: &Matrix, n: usize) -> Matrix {
    let tc = Cochain::linear(t);
    let (m, g) = (s.module_dim(), s.lie_dim());
    Cochain::operator_matrix(n, m, g, Cochain::space_dim(n + 1, m, g), |f| d_t_raw(s, &tc, f))
}

/// Whether `d_T f = (−1)ⁿ δ_CE f` with `δ_CE` taken over `(M, [·,·]_T)` acting on `𝔤` by `•̄`.
pub fn compare_dt_ce(s: &TrbSetup, t: &Matrix, f: &Cochain) -> Result<bool> {
    let lhs = d_t(s, t, f)?;
    let (mt, rep) = induced_structure(s, t)?;
    let rhs = ce_apply(&mt, &rep, f);
    let rhs = if f.degree().is_multiple_of(2) { rhs } else { rhs.neg() };
    Ok(lhs == rhs)
}

/// `dim Hⁿ_T(M, 𝔤)` for `n = 0..=n_max`, cross-checked against the
/// Chevalley-Eilenberg cohomology of the induced structure.
pub fn cohomology_of_t_dims(s: &TrbSetup, t: &Matrix, n_max: usize) -> Result<Vec<usize>> {
    require_trb(s, t)?;
    let dims = cohomology_dims_from(n_max, |n| d_t_matrix_raw(s, t, n));
    let (mt, rep) = induced_structure(s, t)?;
    if dims != ce_cohomology_dims(&mt, &rep, n_max) {
        return Err(Error::Postcondition("operator cohomology differs from the induced CE cohomology".into()));
    }
    Ok(dims)
}

/// `⟦P, Q⟧_T = ⟦P, Q⟧ − ⟦T, P, Q⟧`.
pub fn twisted_bracket2(s: &TrbSetup, t: &Matrix, p: &Cochain, q: &Cochain) -> Result<Cochain> {
    check_element(s, p)?;
    check_element(s, q)?;
    require_trb(s, t)?;
    Ok(twisted_bracket2_raw(s, &Cochain::linear(t), p, q))
}

fn twisted_bracket2_raw(s: &TrbSetup, tc: &Cochain, p: &Cochain, q: &Cochain) -> Cochain {
    let b = bracket2_raw(s, p, q);
    match bracket3_raw(s, tc, p, q) {
        Some(c) => b.sub(&c),
        None => b,
    }
}

/// `d_T T′ + ½⟦T′,T′⟧_T − ⅙⟦T′,T′,T′⟧`, zero exactly when `T + T′` is twisted Rota-Baxter.
pub fn mc_defect_shifted(s: &TrbSetup, t: &Matrix, t2: &Matrix) -> Result<Cochain> {
    s.check_operator(t2)?;
    require_trb(s, t)?;
    let (tc, uc) = (Cochain::linear(t), Cochain::linear(t2));
    let d = d_t_raw(s, &tc, &uc)
        .add(&twisted_bracket2_raw(s, &tc, &uc, &uc).scale(&frac(1, 2)))
        .sub(&bracket3_raw(s, &uc, &uc, &uc).expect("degree 1").scale(&frac(1, 6)));
    if d.is_zero() != check_trb(s, &(t + t2))?.holds {
        return Err(Error::Postcondition("shifted Maurer-Cartan defect disagrees with the operator identity".into()));
    }
    Ok(d)
}

/// Product of `(−1)^σ ε(σ)` over the inversions of `perm`, for elements of the given degrees.
fn koszul_sign(perm: &[usize], degrees: &[usize]) -> i64 {
    let mut sign = 1;
    for k in 0..perm.len() {
        for l in k + 1..perm.len() {
            if perm[k] > perm[l] {
                sign *= -sign_of(degrees[perm[k]] * degrees[perm[l]]);
            }
        }
    }
    sign
}

fn l_bracket(s: &TrbSetup, args: &[&Cochain]) -> Option<Cochain> {
    match args {
        [a, b] => Some(bracket2_raw(s, a, b)),
        [a, b, c] => bracket3_raw(s, a, b, c),
        _ => None,
    }
}

/// The `n`-th higher Jacobi sum of `(l₁ = 0, l₂, l₃)`:
/// `Σ_{i+j=n+1} Σ_σ (−1)^σ ε(σ) (−1)^{i(j−1)} l_j(l_i(x_σ..), x_σ..)`.
///
/// For `n = 2` the residual of graded skew-symmetry `l₂(x,y) + (−1)^{|x||y|} l₂(y,x)` is returned.
/// Valid for `n ∈ {2, 3, 4, 5}`; the result has degree `Σ|xᵢ| + 3 − n`.
pub fn linfty_jacobi_defect(s: &TrbSetup, n: usize, elements: &[Cochain]) -> Result<Cochain> {
    if elements.len() != n || !(2..=5).contains(&n) {
        return Err(Error::DimensionMismatch { context: "higher Jacobi arity", expected: n, found: elements.len() });
    }
    for x in elements {
        check_element(s, x)?;
    }
    let degrees: Vec<usize> = elements.iter().map(Cochain::degree).collect();
    let total: usize = degrees.iter().sum();
    let (m, g) = (s.module_dim(), s.lie_dim());
    let out_degree = (total + 3).checked_sub(n);
    let Some(out_degree) = out_degree else {
        return Ok(Cochain::zero(0, m, g));
    };
    let mut acc = Cochain::zero(out_degree, m, g);
    if n == 2 {
        let a = bracket2_raw(s, &elements[0], &elements[1]);
        let b = bracket2_raw(s, &elements[1], &elements[0]);
        return Ok(a.add(&b.scale(&int(sign_of(degrees[0] * degrees[1])))));
    }
    for i in 2..=3 {
        let j = n + 1 - i;
        if !(2..=3).contains(&j) {
            continue;
        }
        for sh in enumerate_unshuffles(&[i, n - i]) {
            let xs: Vec<&Cochain> = sh.perm.iter().map(|&k| &elements[k]).collect();
            let Some(inner) = l_bracket(s, &xs[..i]) else { continue };
            let mut outer_args = vec![&inner];
            outer_args.extend_from_slice(&xs[i..]);
            let Some(v) = l_bracket(s, &outer_args) else { continue };
            let c = koszul_sign(&sh.perm, &degrees) * sign_of(i * (j - 1));
            if v.degree() == out_degree {
                acc = acc.add(&v.scale(&int(c)));
            }
        }
    }
    Ok(acc)
}

/// Direct value of the degree-1 specialization of `⟦T,T⟧` on `(u, v)`:
/// `2{T(Tu • v − Tv • u) − [Tu, Tv]}`.
pub fn bracket_tt_closed_form(s: &TrbSetup, t: &Matrix) -> Cochain {
    let (m, n) = (s.module_dim(), s.lie_dim());
    Cochain::from_fn(2, m, n, |p| {
        let (u, v) = (unit_vec(m, p[0]), unit_vec(m, p[1]));
        let (tu, tv) = (t.mul_vec(&u), t.mul_vec(&v));
        let inner: Vector = s.rep().act(&tu, &v).iter().zip(s.rep().act(&tv, &u)).map(|(a, b)| a - b).collect();
        let x = t.mul_vec(&inner);
        let y = s.algebra().bracket(&tu, &tv);
        x.iter().zip(y).map(|(a, b)| int(2) * (a - b)).collect()
    })
}

/// Direct value of `⟦T,T,T⟧(u, v) = −6 T(H(Tu, Tv))`.
pub fn bracket_ttt_closed_form(s: &TrbSetup, t: &Matrix) -> Cochain {
    let (m, n) = (s.module_dim(), s.lie_dim());
    Cochain::from_fn(2, m, n, |p| {
        let (tu, tv) = (t.col(p[0]), t.col(p[1]));
        t.mul_vec(&s.h(&tu, &tv)).into_iter().map(|a| a * int(-6)).collect()
    })
}
