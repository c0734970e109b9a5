//! The JSON instance document consumed by the command-line tool.
//!
//! Every section is optional; accessors name the missing section when a
//! command needs it. An absent `cocycle_H` means `H = 0`; an absent `psi`
//! means `ψ = 0`.

use serde::{Deserialize, Serialize};

use crate::deform::DeformationJson;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::liealg::{coadjoint_rep, LieAlgebra, LieAlgebraJson, Representation, RepresentationJson};
use crate::multilin::Cochain;
use crate::nslie::{AssocNs, AssocNsJson, NsLie, NsLieJson};
use crate::tgcs::{GcsComponents, LieGcsTriple};
use crate::twistrb::TrbSetup;

/// Named modules over the algebra of the same document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ModuleJson {
    Adjoint,
    Coadjoint,
    Trivial { dim: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie_algebra: Option<LieAlgebraJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationJson>,
    #[serde(default, rename = "cocycle_H", skip_serializing_if = "Option::is_none")]
    pub cocycle_h: Option<Cochain>,
    #[serde(default, rename = "operator_T", skip_serializing_if = "Option::is_none")]
    pub operator_t: Option<Matrix>,
    #[serde(default, rename = "operator_N", skip_serializing_if = "Option::is_none")]
    pub operator_n: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation_d: Option<Matrix>,
    /// Skew matrix of `r ∈ ∧²𝔤` for the r-matrix check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ns_lie: Option<NsLieJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assoc_ns: Option<AssocNsJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcs_components: Option<GcsComponents>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie_gcs: Option<LieGcsTriple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Cochain>,
}

fn need<'a, T>(section: &'a Option<T>, name: &'static str) -> Result<&'a T> {
    section.as_ref().ok_or(Error::MissingSection(name))
}

fn check_shape(m: &Matrix, rows: usize, cols: usize, context: &'static str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::DimensionMismatch { context, expected: rows * cols, found: m.rows() * m.cols() });
    }
    Ok(())
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn lie(&self) -> Result<LieAlgebra> {
        LieAlgebra::try_from(need(&self.lie_algebra, "lie_algebra")?.clone())
    }

    /// `representation` when given, else the named `module`.
    pub fn rep(&self, l: &LieAlgebra) -> Result<Representation> {
        if let Some(r) = &self.representation {
            return r.clone().validate(l);
        }
        match need(&self.module, "representation")? {
            ModuleJson::Adjoint => Ok(Representation::adjoint(l)),
            ModuleJson::Coadjoint => Ok(coadjoint_rep(l)),
            ModuleJson::Trivial { dim } => Ok(Representation::trivial(l, *dim)),
        }
    }

    pub fn setup(&self) -> Result<TrbSetup> {
        let l = self.lie()?;
        let rep = self.rep(&l)?;
        let h = match &self.cocycle_h {
            Some(h) => h.clone(),
            None => Cochain::zero(2, l.dim(), rep.module_dim()),
        };
        TrbSetup::new(l, rep, h)
    }

    pub fn operator_t(&self, s: &TrbSetup) -> Result<Matrix> {
        let t = need(&self.operator_t, "operator_T")?.clone();
        s.check_operator(&t)?;
        Ok(t)
    }

    fn endomorphism_section(&self, which: &str) -> &Option<Matrix> {
        match which {
            "operator_N" => &self.operator_n,
            "derivation_d" => &self.derivation_d,
            "r_matrix" => &self.r_matrix,
            _ => &self.operator_t,
        }
    }

    /// One of `operator_T`, `operator_N`, `derivation_d`, `r_matrix` as an endomorphism of `𝔤`.
    pub fn endomorphism(&self, l: &LieAlgebra, which: &'static str) -> Result<Matrix> {
        let m = need(self.endomorphism_section(which), which)?;
        check_shape(m, l.dim(), l.dim(), "endomorphism of the Lie algebra")?;
        Ok(m.clone())
    }

    pub fn psi(&self, l: &LieAlgebra) -> Result<Cochain> {
        match &self.psi {
            Some(p) => Ok(p.clone()),
            None => Ok(Cochain::zero(3, l.dim(), 1)),
        }
    }

    pub fn ns_lie(&self) -> Result<NsLie> {
        need(&self.ns_lie, "ns_lie")?.to_ns()
    }

    pub fn assoc_ns(&self) -> Result<AssocNs> {
        need(&self.assoc_ns, "assoc_ns")?.to_assoc()
    }

    pub fn gcs_components(&self, s: &TrbSetup) -> Result<GcsComponents> {
        let j = need(&self.gcs_components, "gcs_components")?.clone();
        j.check_shapes(s)?;
        Ok(j)
    }

    pub fn lie_gcs(&self, l: &LieAlgebra) -> Result<LieGcsTriple> {
        let j = need(&self.lie_gcs, "lie_gcs")?.clone();
        for (m, what) in [(&j.n, "lie_gcs N"), (&j.r, "lie_gcs r"), (&j.sigma, "lie_gcs sigma")] {
            check_shape(m, l.dim(), l.dim(), what)?;
        }
        Ok(j)
    }

    pub fn deformation(&self, s: &TrbSetup) -> Result<DeformationJson> {
        let d = need(&self.deformation, "deformation")?.clone();
        d.validate()?;
        for c in &d.coefficients {
            s.check_operator(c)?;
        }
        Ok(d)
    }

    /// Validates every present section against the others and lists what was found.
    pub fn validate(&self) -> Result<Vec<String>> {
        let mut found = Vec::new();
        let mut setup = None;
        let mut lie = None;
        if self.lie_algebra.is_some() {
            let l = self.lie()?;
            found.push(format!("lie_algebra: dim {}", l.dim()));
            if self.representation.is_some() || self.module.is_some() {
                let s = self.setup()?;
                found.push(format!("module: dim {}", s.module_dim()));
                if self.cocycle_h.is_some() {
                    found.push("cocycle_H: 2-cocycle".into());
                }
                setup = Some(s);
            } else if self.cocycle_h.is_some() {
                return Err(Error::MissingSection("representation"));
            }
            lie = Some(l);
        } else {
            for (present, name) in [
                (self.module.is_some() || self.representation.is_some(), "representation"),
                (self.cocycle_h.is_some(), "cocycle_H"),
                (self.operator_n.is_some(), "operator_N"),
                (self.derivation_d.is_some(), "derivation_d"),
                (self.r_matrix.is_some(), "r_matrix"),
                (self.psi.is_some(), "psi"),
                (self.lie_gcs.is_some(), "lie_gcs"),
            ] {
                if present {
                    return Err(Error::Parse(format!("{name} needs a lie_algebra section")));
                }
            }
        }
        if let Some(t) = &self.operator_t {
            match (&setup, &lie) {
                (Some(s), _) => {
                    s.check_operator(t)?;
                    found.push(format!("operator_T: {}x{}", t.rows(), t.cols()));
                }
                (None, Some(l)) => {
                    check_shape(t, l.dim(), l.dim(), "operator_T on the adjoint module")?;
                    found.push(format!("operator_T: {}x{} (adjoint)", t.rows(), t.cols()));
                }
                (None, None) => return Err(Error::MissingSection("lie_algebra")),
            }
        }
        if let Some(l) = &lie {
            for name in ["operator_N", "derivation_d", "r_matrix"] {
                if self.endomorphism_section(name).is_some() {
                    self.endomorphism(l, name)?;
                    found.push(format!("{name}: {0}x{0}", l.dim()));
                }
            }
            if let Some(p) = &self.psi {
                if p.degree() != 3 || p.source_dim() != l.dim() || p.target_dim() != 1 {
                    return Err(Error::DimensionMismatch { context: "psi", expected: l.dim(), found: p.source_dim() });
                }
                found.push("psi: 3-cochain".into());
            }
            if self.lie_gcs.is_some() {
                self.lie_gcs(l)?;
                found.push("lie_gcs: (N, r, sigma)".into());
            }
        }
        if self.ns_lie.is_some() {
            let ns = self.ns_lie()?;
            found.push(format!("ns_lie: dim {}", ns.dim()));
        }
        if self.assoc_ns.is_some() {
            let a = self.assoc_ns()?;
            found.push(format!("assoc_ns: dim {}", a.dim()));
        }
        for (present, name) in
            [(self.gcs_components.is_some(), "gcs_components"), (self.deformation.is_some(), "deformation")]
        {
            if !present {
                continue;
            }
            let s = setup.as_ref().ok_or(Error::MissingSection("representation"))?;
            if name == "gcs_components" {
                self.gcs_components(s)?;
                found.push("gcs_components: (N, T, sigma, S)".into());
            } else {
                let d = self.deformation(s)?;
                found.push(format!("deformation: order {}", d.order));
            }
        }
        Ok(found)
    }
}
