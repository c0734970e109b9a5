//! NS-Lie algebras, associative NS-algebras and their relation to twisted
//! Rota-Baxter operators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{unit_vec, vec_add, vec_sub, Matrix, Scalar, ScalarVec, Vector};
use crate::liealg::{
    check_endomorphism, is_two_cocycle, nijenhuis_check, validate_rep_with_dim, LieAlgebra, Representation,
};
use crate::multilin::{parse_tuple_key, tuple_key, Bilinear, Cochain};
use crate::twistrb::{check_trb, induced_bracket, require_trb, TrbSetup};
use crate::verdict::{grid2, grid3, Verdict};

/// A candidate NS-Lie structure: `∘` arbitrary bilinear, `⋎` skew.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsLie {
    circ: Bilinear,
    vee: Cochain,
}

impl NsLie {
    pub fn new(circ: Bilinear, vee: Cochain) -> Result<Self> {
        let n = circ.dim_in();
        if circ.dim_out() != n {
            return Err(Error::DimensionMismatch {
                context: "NS-Lie product circ",
                expected: n,
                found: circ.dim_out(),
            });
        }
        if vee.degree() != 2 || vee.source_dim() != n || vee.target_dim() != n {
            return Err(Error::DimensionMismatch {
                context: "NS-Lie product vee",
                expected: n,
                found: vee.source_dim(),
            });
        }
        Ok(NsLie { circ, vee })
    }

    pub fn zero(dim: usize) -> Self {
        NsLie { circ: Bilinear::zero(dim, dim), vee: Cochain::zero(2, dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.circ.dim_in()
    }

    pub fn circ(&self) -> &Bilinear {
        &self.circ
    }

    pub fn vee(&self) -> &Cochain {
        &self.vee
    }

    pub fn circ_apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.circ.apply(x, y)
    }

    pub fn vee_apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.vee.eval(&[x.to_vec(), y.to_vec()])
    }

    /// `x * y = x ∘ y − y ∘ x + x ⋎ y`.
    pub fn star(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        vec_add(&vec_sub(&self.circ_apply(x, y), &self.circ_apply(y, x)), &self.vee_apply(x, y))
    }

    /// `(x∘y)∘z − x∘(y∘z) − (y∘x)∘z + y∘(x∘z) + (x⋎y)∘z`.
    pub fn ns1_defect(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let c = |a: &[Scalar], b: &[Scalar]| self.circ_apply(a, b);
        let mut d = vec_sub(&c(&c(x, y), z), &c(x, &c(y, z)));
        d = vec_sub(&d, &c(&c(y, x), z));
        d = vec_add(&d, &c(y, &c(x, z)));
        vec_add(&d, &c(&self.vee_apply(x, y), z))
    }

    /// `x⋎(y*z) + x∘(y⋎z)` summed cyclically.
    pub fn ns2_defect(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let term = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| {
            vec_add(&self.vee_apply(a, &self.star(b, c)), &self.circ_apply(a, &self.vee_apply(b, c)))
        };
        vec_add(&vec_add(&term(x, y, z), &term(y, z, x)), &term(z, x, y))
    }

    fn adjacent_cochain(&self) -> Cochain {
        let n = self.dim();
        Cochain::from_fn(2, n, n, |t| self.star(&unit_vec(n, t[0]), &unit_vec(n, t[1])))
    }

    fn left_multiplications(&self) -> Vec<Matrix> {
        let n = self.dim();
        (0..n).map(|i| Matrix::from_columns(n, &(0..n).map(|j| self.circ.on_basis(i, j)).collect::<Vec<_>>())).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NsReport {
    pub ns1: Verdict,
    pub ns2: Verdict,
}

impl NsReport {
    pub fn holds(&self) -> bool {
        self.ns1.holds && self.ns2.holds
    }
}

/// NS1 on all ordered basis triples, NS2 on increasing ones.
pub fn ns_check(ns: &NsLie) -> NsReport {
    let n = ns.dim();
    let e = |i: usize| unit_vec(n, i);
    let ns1 = Verdict::first_defect("NS1", grid3(n, n, n), |t| ns.ns1_defect(&e(t[0]), &e(t[1]), &e(t[2])));
    let triples = grid3(n, n, n).filter(|t| t[0] < t[1] && t[1] < t[2]);
    let ns2 = Verdict::first_defect("NS2", triples, |t| ns.ns2_defect(&e(t[0]), &e(t[1]), &e(t[2])));
    NsReport { ns1, ns2 }
}

fn require_ns(ns: &NsLie) -> Result<()> {
    let r = ns_check(ns);
    match r.ns1.witness.or(r.ns2.witness) {
        None => Ok(()),
        Some(w) => Err(Error::NotNsLie(format!("{} fails on {:?}", w.label, w.tuple))),
    }
}

/// `[x, y] = x∘y − y∘x + x⋎y` with the representation `x • m = x ∘ m`.
pub fn adjacent_lie(ns: &NsLie) -> Result<(LieAlgebra, Representation)> {
    require_ns(ns)?;
    let l = LieAlgebra::from_cochain(ns.adjacent_cochain())
        .map_err(|v| Error::Postcondition(format!("adjacent bracket: {v}")))?;
    let rep = validate_rep_with_dim(&l, ns.dim(), ns.left_multiplications())
        .map_err(|v| Error::Postcondition(format!("adjacent representation: {v}")))?;
    Ok((l, rep))
}

/// `x∘y = [Nx, y]`, `x⋎y = −N[x, y]`.
pub fn ns_from_nijenhuis(l: &LieAlgebra, n: &Matrix) -> Result<NsLie> {
    check_endomorphism(l, n)?;
    if !nijenhuis_check(l, n).holds {
        return Err(Error::NotNijenhuis);
    }
    let d = l.dim();
    let circ = Bilinear::from_fn(d, d, |i, j| l.bracket(&n.col(i), &unit_vec(d, j)));
    let vee = l.structure().compose_left(n).neg();
    let ns = NsLie::new(circ, vee)?;
    require_ns(&ns).map_err(|e| Error::Postcondition(e.to_string()))?;
    Ok(ns)
}

/// `u∘v = Tu • v`, `u⋎v = H(Tu, Tv)` on `M`.
pub fn ns_from_trb(s: &TrbSetup, t: &Matrix) -> Result<NsLie> {
    require_trb(s, t)?;
    let m = s.module_dim();
    let circ = Bilinear::from_fn(m, m, |i, j| s.rep().act(&t.col(i), &unit_vec(m, j)));
    let vee = Cochain::from_fn(2, m, m, |p| s.h(&t.col(p[0]), &t.col(p[1])));
    let ns = NsLie::new(circ, vee)?;
    require_ns(&ns).map_err(|e| Error::Postcondition(e.to_string()))?;
    let (adj, _) = adjacent_lie(&ns)?;
    if adj != induced_bracket(s, t)? {
        return Err(Error::Postcondition("adjacent bracket differs from the induced bracket".into()));
    }
    Ok(ns)
}

/// The identity of `L` as a `⋎`-twisted operator from the module `(L, ∘)` to `L_Lie`.
pub fn trb_from_ns(ns: &NsLie) -> Result<(TrbSetup, Matrix)> {
    let (l, rep) = adjacent_lie(ns)?;
    if !is_two_cocycle(&l, &rep, ns.vee()).holds {
        return Err(Error::Postcondition("vee is not a 2-cocycle over the adjacent algebra".into()));
    }
    let s = TrbSetup::new(l, rep, ns.vee().clone())?;
    let id = Matrix::identity(ns.dim());
    if !check_trb(&s, &id)?.holds {
        return Err(Error::Postcondition("identity is not twisted Rota-Baxter".into()));
    }
    Ok((s, id))
}

/// Three products `≺, ≻, □` on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocNs {
    pub prec: Bilinear,
    pub succ: Bilinear,
    pub square: Bilinear,
}

impl AssocNs {
    pub fn new(prec: Bilinear, succ: Bilinear, square: Bilinear) -> Result<Self> {
        let n = prec.dim_in();
        for b in [&succ, &square, &prec] {
            if b.dim_in() != n || b.dim_out() != n {
                return Err(Error::DimensionMismatch {
                    context: "NS-algebra products",
                    expected: n,
                    found: b.dim_out(),
                });
            }
        }
        Ok(AssocNs { prec, succ, square })
    }

    pub fn dim(&self) -> usize {
        self.prec.dim_in()
    }

    /// `x ⊛ y = x ≺ y + x ≻ y + x □ y`.
    pub fn total(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        vec_add(&vec_add(&self.prec.apply(x, y), &self.succ.apply(x, y)), &self.square.apply(x, y))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AssocNsReport {
    pub prec_prec: Verdict,
    pub succ_prec: Verdict,
    pub total_succ: Verdict,
    pub square: Verdict,
}

impl AssocNsReport {
    pub fn holds(&self) -> bool {
        self.prec_prec.holds && self.succ_prec.holds && self.total_succ.holds && self.square.holds
    }
}

type Trilinear<'a> = dyn Fn(&[Scalar], &[Scalar], &[Scalar]) -> Vector + 'a;

pub fn assoc_ns_check(a: &AssocNs) -> AssocNsReport {
    let n = a.dim();
    let e = |i: usize| unit_vec(n, i);
    let (p, s, q) = (&a.prec, &a.succ, &a.square);
    let run =
        |label: &str, f: &Trilinear| Verdict::first_defect(label, grid3(n, n, n), |t| f(&e(t[0]), &e(t[1]), &e(t[2])));
    let prec_prec =
        run("(x < y) < z = x < (y * z)", &|x, y, z| vec_sub(&p.apply(&p.apply(x, y), z), &p.apply(x, &a.total(y, z))));
    let succ_prec =
        run("(x > y) < z = x > (y < z)", &|x, y, z| vec_sub(&p.apply(&s.apply(x, y), z), &s.apply(x, &p.apply(y, z))));
    let total_succ =
        run("(x * y) > z = x > (y > z)", &|x, y, z| vec_sub(&s.apply(&a.total(x, y), z), &s.apply(x, &s.apply(y, z))));
    let square = run("square compatibility", &|x, y, z| {
        let lhs = vec_add(&p.apply(&q.apply(x, y), z), &q.apply(&a.total(x, y), z));
        let rhs = vec_add(&s.apply(x, &q.apply(y, z)), &q.apply(x, &a.total(y, z)));
        vec_sub(&lhs, &rhs)
    });
    AssocNsReport { prec_prec, succ_prec, total_succ, square }
}

/// `x∘y = x ≻ y − y ≺ x`, `x⋎y = x □ y − y □ x`.
pub fn ns_from_assoc(a: &AssocNs) -> Result<NsLie> {
    let r = assoc_ns_check(a);
    if let Some(w) = [&r.prec_prec, &r.succ_prec, &r.total_succ, &r.square].into_iter().find_map(|v| v.witness.clone())
    {
        return Err(Error::NotAssocNs(format!("{} fails on {:?}", w.label, w.tuple)));
    }
    let n = a.dim();
    let circ = Bilinear::from_fn(n, n, |i, j| vec_sub(&a.succ.on_basis(i, j), &a.prec.on_basis(j, i)));
    let vee = Cochain::from_fn(2, n, n, |t| vec_sub(&a.square.on_basis(t[0], t[1]), &a.square.on_basis(t[1], t[0])));
    let ns = NsLie::new(circ, vee)?;
    require_ns(&ns).map_err(|e| Error::Postcondition(e.to_string()))?;
    Ok(ns)
}

/// Bilinear map as `{"[i,j]": [...]}` over ordered pairs; absent keys are zero.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(transparent)]
pub struct BilinearJson(pub BTreeMap<String, ScalarVec>);

impl BilinearJson {
    pub fn from_bilinear(b: &Bilinear) -> Self {
        let n = b.dim_in();
        BilinearJson(
            grid2(n, n)
                .filter_map(|t| {
                    let v = b.on_basis(t[0], t[1]);
                    (!crate::exactlin::is_zero_vec(&v)).then(|| (tuple_key(&t), ScalarVec(v)))
                })
                .collect(),
        )
    }

    pub fn to_bilinear(&self, dim: usize) -> Result<Bilinear> {
        let mut table = vec![vec![None; dim]; dim];
        for (k, v) in &self.0 {
            let t = parse_tuple_key(k)?;
            if t.len() != 2 || t[0] >= dim || t[1] >= dim {
                return Err(Error::Parse(format!("bilinear key {k} out of range for dimension {dim}")));
            }
            if v.0.len() != dim {
                return Err(Error::DimensionMismatch { context: "bilinear value", expected: dim, found: v.0.len() });
            }
            table[t[0]][t[1]] = Some(v.0.clone());
        }
        Ok(Bilinear::from_fn(dim, dim, |i, j| table[i][j].clone().unwrap_or_else(|| crate::exactlin::zero_vec(dim))))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct NsLieJson {
    pub dim: usize,
    #[serde(default)]
    pub circ: BilinearJson,
    /// Keys `[i,j]` with `i < j`.
    #[serde(default)]
    pub vee: BilinearJson,
}

impl NsLieJson {
    pub fn from_ns(ns: &NsLie) -> Self {
        let n = ns.dim();
        let vee = BilinearJson(
            crate::verdict::pairs(n)
                .filter_map(|t| {
                    let v = ns.vee().eval_basis(&t);
                    (!crate::exactlin::is_zero_vec(&v)).then(|| (tuple_key(&t), ScalarVec(v)))
                })
                .collect(),
        );
        NsLieJson { dim: n, circ: BilinearJson::from_bilinear(ns.circ()), vee }
    }

    pub fn to_ns(&self) -> Result<NsLie> {
        let circ = self.circ.to_bilinear(self.dim)?;
        let mut values = Vec::new();
        for (k, v) in &self.vee.0 {
            values.push((parse_tuple_key(k)?, v.0.clone()));
        }
        let vee = crate::multilin::cochain_from_values(2, self.dim, self.dim, values)?;
        NsLie::new(circ, vee)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AssocNsJson {
    pub dim: usize,
    #[serde(default)]
    pub prec: BilinearJson,
    #[serde(default)]
    pub succ: BilinearJson,
    #[serde(default)]
    pub square: BilinearJson,
}

impl AssocNsJson {
    pub fn to_assoc(&self) -> Result<AssocNs> {
        AssocNs::new(
            self.prec.to_bilinear(self.dim)?,
            self.succ.to_bilinear(self.dim)?,
            self.square.to_bilinear(self.dim)?,
        )
    }
}
