//! Twisted generalized complex structures on a module over a Lie algebra.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{frac, unit_vec, vec_add, vec_sub, Matrix, Scalar};
use crate::liealg::{check_endomorphism, LieAlgebra, Representation};
use crate::multilin::Cochain;
use crate::twistrb::{check_psi, check_trb, is_skew, r_matrix_setup, r_sharp, twisted_semidirect, TrbSetup};
use crate::verdict::{grid2, pairs, Verdict};

/// Structure components of `J = [[N, T], [σ, −S]]` on `𝔤 ⊕ M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcsComponents {
    #[serde(rename = "N")]
    pub n: Matrix,
    #[serde(rename = "T")]
    pub t: Matrix,
    pub sigma: Matrix,
    #[serde(rename = "S")]
    pub s: Matrix,
}

impl GcsComponents {
    pub fn check_shapes(&self, setup: &TrbSetup) -> Result<()> {
        let (g, m) = (setup.lie_dim(), setup.module_dim());
        let ok = self.n.rows() == g
            && self.n.cols() == g
            && self.t.rows() == g
            && self.t.cols() == m
            && self.sigma.rows() == m
            && self.sigma.cols() == g
            && self.s.rows() == m
            && self.s.cols() == m;
        if !ok {
            return Err(Error::DimensionMismatch {
                context: "structure components N, T, sigma, S",
                expected: g + m,
                found: self.n.rows() + self.s.rows(),
            });
        }
        Ok(())
    }

    /// The block matrix `J`.
    pub fn block(&self) -> Matrix {
        let (g, m) = (self.n.rows(), self.s.rows());
        let mut j = Matrix::zeros(g + m, g + m);
        for r in 0..g + m {
            for c in 0..g + m {
                j[(r, c)] = match (r < g, c < g) {
                    (true, true) => self.n[(r, c)].clone(),
                    (true, false) => self.t[(r, c - g)].clone(),
                    (false, true) => self.sigma[(r - g, c)].clone(),
                    (false, false) => -self.s[(r - g, c - g)].clone(),
                };
            }
        }
        j
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TgcsDirectReport {
    pub almost_complex: Verdict,
    pub integrable: Verdict,
}

impl TgcsDirectReport {
    pub fn holds(&self) -> bool {
        self.almost_complex.holds && self.integrable.holds
    }
}

/// `J² = −id` and `[Jr, Js] − [r, s] − J([Jr, s] + [r, Js]) = 0` in `𝔤 ⋉_H M`.
pub fn tgcs_check_direct(s: &TrbSetup, j: &GcsComponents) -> Result<TgcsDirectReport> {
    j.check_shapes(s)?;
    let big = twisted_semidirect(s);
    let jm = j.block();
    Ok(TgcsDirectReport { almost_complex: almost_complex(&jm), integrable: integrability(&big, &jm) })
}

fn almost_complex(j: &Matrix) -> Verdict {
    let sq = &(j * j) + &Matrix::identity(j.rows());
    Verdict::first_defect("J^2 = -id", (0..j.rows()).map(|i| vec![i]), |p| sq.col(p[0]))
}

fn integrability(big: &LieAlgebra, j: &Matrix) -> Verdict {
    Verdict::first_defect("integrability", pairs(j.rows()), |p| {
        let (r, s) = (unit_vec(j.rows(), p[0]), unit_vec(j.rows(), p[1]));
        let (jr, js) = (j.mul_vec(&r), j.mul_vec(&s));
        let inner = vec_add(&big.bracket(&jr, &s), &big.bracket(&r, &js));
        vec_sub(&vec_sub(&big.bracket(&jr, &js), &big.bracket(&r, &s)), &j.mul_vec(&inner))
    })
}

pub const TGCS_EQUATIONS: [&str; 10] = [
    "NT = TS",
    "N^2 + T sigma = -id",
    "S sigma = sigma N",
    "S^2 + sigma T = -id",
    "[Tu,Tv] = T(Tu.v - Tv.u)",
    "Tu.Sv - Tv.Su - H(Tu,Tv) = S(Tu.v - Tv.u)",
    "[Nx,Tu] - N[x,Tu] = T(Nx.u - x.Su + H(x,Tu))",
    "sigma[Tu,x] - Tu.sigma x - H(Tu,Nx) = x.u + Nx.Su - S(Nx.u - x.Su + H(x,Tu))",
    "[Nx,Ny] - [x,y] - N([Nx,y] + [x,Ny]) = T(x.sigma y - y.sigma x + H(x,Ny) - H(y,Nx))",
    "Nx.sigma y - Ny.sigma x + H(Nx,Ny) - H(x,y) - sigma([Nx,y] + [x,Ny]) = -S(x.sigma y - y.sigma x + H(x,Ny) - H(y,Nx))",
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TgcsComponentReport {
    /// One verdict per equation, in the order of [`TGCS_EQUATIONS`].
    pub equations: Vec<Verdict>,
    /// Closure of `{(Tu, Su)}` under the `(−H)`-twisted semidirect bracket.
    pub graph_closed: Verdict,
}

impl TgcsComponentReport {
    pub fn holds(&self) -> bool {
        self.equations.iter().all(|v| v.holds)
    }
}

/// The ten component equations; their conjunction is checked against
/// [`tgcs_check_direct`], and equation 5 against the untwisted operator identity.
pub fn tgcs_check_components(s: &TrbSetup, j: &GcsComponents) -> Result<TgcsComponentReport> {
    j.check_shapes(s)?;
    let (g, m) = (s.lie_dim(), s.module_dim());
    let (l, rep) = (s.algebra(), s.rep());
    let (n, t, sg, sm) = (&j.n, &j.t, &j.sigma, &j.s);
    let act = |x: &[Scalar], u: &[Scalar]| rep.act(x, u);
    let e = |i: usize| unit_vec(g, i);
    let f = |i: usize| unit_vec(m, i);
    let cols = |k: usize| (0..k).map(|i| vec![i]);
    let label = |k: usize| TGCS_EQUATIONS[k];

    let nt_ts = &(n * t) - &(t * sm);
    let n2 = &(&(n * n) + &(t * sg)) + &Matrix::identity(g);
    let s_sig = &(sm * sg) - &(sg * n);
    let s2 = &(&(sm * sm) + &(sg * t)) + &Matrix::identity(m);
    let mixed_tt = |u: &[Scalar], v: &[Scalar]| vec_sub(&act(&t.mul_vec(u), v), &act(&t.mul_vec(v), u));
    let w_xu = |x: &[Scalar], u: &[Scalar]| {
        vec_add(&vec_sub(&act(&n.mul_vec(x), u), &act(x, &sm.mul_vec(u))), &s.h(x, &t.mul_vec(u)))
    };
    let w_xy = |x: &[Scalar], y: &[Scalar]| {
        let a = vec_sub(&act(x, &sg.mul_vec(y)), &act(y, &sg.mul_vec(x)));
        vec_add(&a, &vec_sub(&s.h(x, &n.mul_vec(y)), &s.h(y, &n.mul_vec(x))))
    };
    let lie_xy = |x: &[Scalar], y: &[Scalar]| vec_add(&l.bracket(&n.mul_vec(x), y), &l.bracket(x, &n.mul_vec(y)));

    let equations = vec![
        Verdict::first_defect(label(0), cols(m), |p| nt_ts.col(p[0])),
        Verdict::first_defect(label(1), cols(g), |p| n2.col(p[0])),
        Verdict::first_defect(label(2), cols(g), |p| s_sig.col(p[0])),
        Verdict::first_defect(label(3), cols(m), |p| s2.col(p[0])),
        Verdict::first_defect(label(4), pairs(m), |p| {
            let (u, v) = (f(p[0]), f(p[1]));
            vec_sub(&l.bracket(&t.mul_vec(&u), &t.mul_vec(&v)), &t.mul_vec(&mixed_tt(&u, &v)))
        }),
        Verdict::first_defect(label(5), pairs(m), |p| {
            let (u, v) = (f(p[0]), f(p[1]));
            let (tu, tv) = (t.mul_vec(&u), t.mul_vec(&v));
            let lhs = vec_sub(&vec_sub(&act(&tu, &sm.mul_vec(&v)), &act(&tv, &sm.mul_vec(&u))), &s.h(&tu, &tv));
            vec_sub(&lhs, &sm.mul_vec(&mixed_tt(&u, &v)))
        }),
        Verdict::first_defect(label(6), grid2(g, m), |p| {
            let (x, u) = (e(p[0]), f(p[1]));
            let tu = t.mul_vec(&u);
            let lhs = vec_sub(&l.bracket(&n.mul_vec(&x), &tu), &n.mul_vec(&l.bracket(&x, &tu)));
            vec_sub(&lhs, &t.mul_vec(&w_xu(&x, &u)))
        }),
        Verdict::first_defect(label(7), grid2(g, m), |p| {
            let (x, u) = (e(p[0]), f(p[1]));
            let (tu, nx) = (t.mul_vec(&u), n.mul_vec(&x));
            let lhs = vec_sub(&vec_sub(&sg.mul_vec(&l.bracket(&tu, &x)), &act(&tu, &sg.mul_vec(&x))), &s.h(&tu, &nx));
            let rhs = vec_sub(&vec_add(&act(&x, &u), &act(&nx, &sm.mul_vec(&u))), &sm.mul_vec(&w_xu(&x, &u)));
            vec_sub(&lhs, &rhs)
        }),
        Verdict::first_defect(label(8), pairs(g), |p| {
            let (x, y) = (e(p[0]), e(p[1]));
            let lhs = vec_sub(
                &vec_sub(&l.bracket(&n.mul_vec(&x), &n.mul_vec(&y)), &l.bracket(&x, &y)),
                &n.mul_vec(&lie_xy(&x, &y)),
            );
            vec_sub(&lhs, &t.mul_vec(&w_xy(&x, &y)))
        }),
        Verdict::first_defect(label(9), pairs(g), |p| {
            let (x, y) = (e(p[0]), e(p[1]));
            let (nx, ny) = (n.mul_vec(&x), n.mul_vec(&y));
            let a = vec_sub(&act(&nx, &sg.mul_vec(&y)), &act(&ny, &sg.mul_vec(&x)));
            let b = vec_sub(&s.h(&nx, &ny), &s.h(&x, &y));
            let lhs = vec_sub(&vec_add(&a, &b), &sg.mul_vec(&lie_xy(&x, &y)));
            vec_add(&lhs, &sm.mul_vec(&w_xy(&x, &y)))
        }),
    ];
    let graph_closed = graph_closure(s, t, sm);
    let report = TgcsComponentReport { equations, graph_closed };

    if report.holds() != tgcs_check_direct(s, j)?.holds() {
        return Err(Error::Postcondition("component equations disagree with the direct definition".into()));
    }
    if report.equations[4].holds {
        let plain = TrbSetup::untwisted(l.clone(), rep.clone());
        if !check_trb(&plain, t)?.holds {
            return Err(Error::Postcondition("equation 5 holds but T is not Rota-Baxter".into()));
        }
    }
    if report.equations[4].holds && report.equations[5].holds && !report.graph_closed.holds {
        return Err(Error::Postcondition("equations 5 and 6 hold but the graph of (T, S) is not closed".into()));
    }
    Ok(report)
}

/// Whether `[(Tu, Su), (Tv, Sv)]` in `𝔤 ⋉_{−H} M` lies in the image of `(T, S)`.
fn graph_closure(s: &TrbSetup, t: &Matrix, sm: &Matrix) -> Verdict {
    let (g, m) = (s.lie_dim(), s.module_dim());
    let stacked = Matrix::from_columns(
        g + m,
        &(0..m)
            .map(|i| {
                let mut c = t.col(i);
                c.extend(sm.col(i));
                c
            })
            .collect::<Vec<_>>(),
    );
    let neg = s.with_scaled_cocycle(&frac(-1, 1));
    let big = twisted_semidirect(&neg);
    Verdict::first_defect("graph of (T, S) is closed", pairs(m), |p| {
        let w = big.bracket(&stacked.col(p[0]), &stacked.col(p[1]));
        if stacked.spans(&w) {
            vec![Scalar::zero()]
        } else {
            w
        }
    })
}

fn require_gcs(s: &TrbSetup, j: &GcsComponents) -> Result<()> {
    let r = tgcs_check_direct(s, j)?;
    match r.almost_complex.witness.or(r.integrable.witness) {
        None => Ok(()),
        Some(w) => Err(Error::NotGcs(format!("{} fails on {:?}", w.label, w.tuple))),
    }
}

/// `J = [[0, T], [−T⁻¹, 0]]` for an invertible Rota-Baxter operator (`H = 0`).
pub fn gcs_from_invertible_rb(s: &TrbSetup, t: &Matrix) -> Result<GcsComponents> {
    if !s.cocycle().is_zero() {
        return Err(Error::NonzeroH);
    }
    crate::twistrb::require_trb(s, t)?;
    let inv = t.invert()?;
    let (g, m) = (s.lie_dim(), s.module_dim());
    let j = GcsComponents { n: Matrix::zeros(g, g), t: t.clone(), sigma: -&inv, s: Matrix::zeros(m, m) };
    require_gcs(s, &j).map_err(|e| Error::Postcondition(e.to_string()))?;
    Ok(j)
}

/// `J̄ = [[N, −T], [−σ, −S]]`, a `(−H)`-twisted structure.
pub fn opposite(s: &TrbSetup, j: &GcsComponents) -> Result<(TrbSetup, GcsComponents)> {
    require_gcs(s, j)?;
    let neg = s.with_scaled_cocycle(&frac(-1, 1));
    let jbar = GcsComponents { n: j.n.clone(), t: -&j.t, sigma: -&j.sigma, s: j.s.clone() };
    require_gcs(&neg, &jbar).map_err(|e| Error::Postcondition(e.to_string()))?;
    Ok((neg, jbar))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexStructureReport {
    pub i_square: Verdict,
    pub i_integrable: Verdict,
    pub module_square: Verdict,
    /// `I(x) • I_M(u) − x • u − I_M(I(x) • u + x • I_M(u)) = 0`.
    pub module_identity: Verdict,
}

impl ComplexStructureReport {
    pub fn holds(&self) -> bool {
        self.i_square.holds && self.i_integrable.holds && self.module_square.holds && self.module_identity.holds
    }
}

pub fn complex_structure_check(
    l: &LieAlgebra,
    rep: &Representation,
    i: &Matrix,
    im: &Matrix,
) -> Result<ComplexStructureReport> {
    check_endomorphism(l, i)?;
    let (g, m) = (l.dim(), rep.module_dim());
    if im.rows() != m || im.cols() != m {
        return Err(Error::DimensionMismatch { context: "module endomorphism I_M", expected: m, found: im.rows() });
    }
    let i_integrable = Verdict::first_defect("[Ix,Iy] - [x,y] - I([Ix,y] + [x,Iy]) = 0", pairs(g), |p| {
        let (x, y) = (unit_vec(g, p[0]), unit_vec(g, p[1]));
        let (ix, iy) = (i.mul_vec(&x), i.mul_vec(&y));
        let inner = vec_add(&l.bracket(&ix, &y), &l.bracket(&x, &iy));
        vec_sub(&vec_sub(&l.bracket(&ix, &iy), &l.bracket(&x, &y)), &i.mul_vec(&inner))
    });
    let module_identity = Verdict::first_defect("I(x).I_M(u) - x.u - I_M(I(x).u + x.I_M(u)) = 0", grid2(g, m), |p| {
        let (x, u) = (unit_vec(g, p[0]), unit_vec(m, p[1]));
        let (ix, imu) = (i.mul_vec(&x), im.mul_vec(&u));
        let inner = vec_add(&rep.act(&ix, &u), &rep.act(&x, &imu));
        vec_sub(&vec_sub(&rep.act(&ix, &imu), &rep.act(&x, &u)), &im.mul_vec(&inner))
    });
    Ok(ComplexStructureReport {
        i_square: almost_complex(i),
        i_integrable,
        module_square: almost_complex(im),
        module_identity,
    })
}

/// `N = I`, `T = 0`, `σ = 0`, `S = −I_M`, checked as an untwisted structure.
pub fn embed_complex(l: &LieAlgebra, rep: &Representation, i: &Matrix, im: &Matrix) -> Result<GcsComponents> {
    let r = complex_structure_check(l, rep, i, im)?;
    if !r.holds() {
        return Err(Error::NotGcs("not a complex structure on the module".into()));
    }
    let (g, m) = (l.dim(), rep.module_dim());
    let j = GcsComponents { n: i.clone(), t: Matrix::zeros(g, m), sigma: Matrix::zeros(m, g), s: -im };
    require_gcs(&TrbSetup::untwisted(l.clone(), rep.clone()), &j).map_err(|e| Error::Postcondition(e.to_string()))?;
    Ok(j)
}

/// `(N, r, σ)` for `J = [[N, r♯], [σ♭, −N*]]` on `𝔤 ⊕ 𝔤*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieGcsTriple {
    #[serde(rename = "N")]
    pub n: Matrix,
    pub r: Matrix,
    pub sigma: Matrix,
}

impl LieGcsTriple {
    /// `T = r♯`, `σ♭ = σᵀ`, `S = N*`.
    pub fn components(&self) -> GcsComponents {
        GcsComponents { n: self.n.clone(), t: r_sharp(&self.r), sigma: self.sigma.transpose(), s: self.n.transpose() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LieTgcsReport {
    /// `⟨Jr, Js⟩ = ⟨r, s⟩` for `⟨(x,α),(y,β)⟩ = ½(α(y) + β(x))`.
    pub orthogonal: Verdict,
    pub components: TgcsComponentReport,
}

impl LieTgcsReport {
    pub fn holds(&self) -> bool {
        self.orthogonal.holds && self.components.holds()
    }
}

/// The pairing matrix `½[[0, I], [I, 0]]`.
pub fn pairing(n: usize) -> Matrix {
    let mut p = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        p[(i, n + i)] = frac(1, 2);
        p[(n + i, i)] = frac(1, 2);
    }
    p
}

pub fn lie_tgcs_check(l: &LieAlgebra, psi: &Cochain, triple: &LieGcsTriple) -> Result<LieTgcsReport> {
    check_psi(l, psi)?;
    check_endomorphism(l, &triple.n)?;
    check_endomorphism(l, &triple.r)?;
    check_endomorphism(l, &triple.sigma)?;
    if !is_skew(&triple.r) || !is_skew(&triple.sigma) {
        return Err(Error::NotSkew);
    }
    let s = r_matrix_setup(l, psi)?;
    let j = triple.components();
    let jm = j.block();
    let g = pairing(l.dim());
    let defect = &(&(&jm.transpose() * &g) * &jm) - &g;
    let orthogonal =
        Verdict::first_defect("<Jr, Js> = <r, s>", grid2(2 * l.dim(), 2 * l.dim()).filter(|p| p[0] <= p[1]), |p| {
            vec![defect[(p[0], p[1])].clone()]
        });
    let components = tgcs_check_components(&s, &j)?;
    Ok(LieTgcsReport { orthogonal, components })
}
