//! The `trbtool` command surface: argument parsing, dispatch and reports.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for unusable input or usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::deform::{
    infinitesimal_is_cocycle, nijenhuis_element_check, rigidity_probe, FormalDeformation, RigidityStatus,
};
use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, Matrix, ScalarVec};
use crate::gen::Gen;
use crate::instance::InstanceDocument;
use crate::liealg::{ce_cohomology_dims, nijenhuis_check, LieAlgebraJson, RepresentationJson};
use crate::linfty::{cohomology_of_t_dims, d_t, mc_defect};
use crate::multilin::Cochain;
use crate::nslie::{
    adjacent_lie, assoc_ns_check, ns_check, ns_from_assoc, ns_from_nijenhuis, ns_from_trb, trb_from_ns, NsLieJson,
};
use crate::tgcs::{lie_tgcs_check, tgcs_check_components, tgcs_check_direct, TGCS_EQUATIONS};
use crate::twistrb::{
    check_trb, gauge_transform, graph_subalgebra_check, r_matrix_check, r_matrix_setup, render_witt_row,
    reynolds_check, reynolds_from_derivation, shift_by_coboundary, transport_check, witt_report, TrbSetup,
};
use crate::verdict::{Verdict, Witness};

#[derive(Debug, Parser)]
#[command(name = "trbtool", version, about = "Exact checks for twisted Rota-Baxter operators")]
pub struct Cli {
    /// Emit one JSON object instead of a text report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NsSource {
    Nijenhuis,
    Assoc,
    Trb,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse the instance and check every section against the others.
    Validate { input: PathBuf },
    /// Dimensions of H^n(g, M) for n <= nmax.
    CeCohomology {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
    },
    /// Twisted Rota-Baxter identity for operator_T.
    CheckTrb { input: PathBuf },
    /// Maurer-Cartan equation for operator_T, cross-checked against the operator identity.
    CheckMc {
        input: PathBuf,
        /// Number of seeded random operators on the same setup.
        #[arg(long, default_value_t = 16)]
        sweep: usize,
    },
    /// Cohomology of operator_T for n <= nmax.
    CohomologyOfT {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
    },
    /// Reynolds identity for operator_T on the adjoint module.
    CheckReynolds { input: PathBuf },
    /// Reynolds operator from the nilpotent derivation derivation_d.
    ReynoldsFromDerivation { input: PathBuf },
    /// Reynolds operator l_m -> l_m/(m+1) on the Witt algebra.
    WittReport {
        #[arg(long, default_value_t = 10)]
        nmax: i64,
    },
    /// Twisted triangular r-matrix r_matrix with the 3-cocycle psi.
    CheckRMatrix { input: PathBuf },
    /// NS-Lie identities for ns_lie.
    CheckNs { input: PathBuf },
    /// NS-Lie algebra from a Nijenhuis operator, an associative NS-algebra or operator_T.
    NsFrom {
        #[arg(value_enum)]
        source: NsSource,
        input: PathBuf,
    },
    /// Twisted Rota-Baxter operator carried by ns_lie.
    TrbFromNs { input: PathBuf },
    /// Deformation equations of operator_T + sum t^i T_i up to the given order.
    DeformCheck {
        input: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Nijenhuis element conditions for x, given as a JSON list of scalars.
    NijenhuisElement {
        input: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Search for Nijenhuis preimages of every 1-cocycle of operator_T.
    RigidityProbe {
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        grid: u32,
    },
    /// Twisted generalized complex structure gcs_components.
    CheckTgcs {
        input: PathBuf,
        #[arg(long, default_value_t = 16)]
        sweep: usize,
    },
    /// Twisted generalized complex structure lie_gcs on g + g*.
    LieTgcs { input: PathBuf },
    /// Gauge transform of operator_T by the 1-cocycle B, a JSON matrix.
    Gauge {
        input: PathBuf,
        #[arg(long)]
        b: String,
    },
    /// Shift of operator_T by the coboundary of h, a JSON matrix.
    Shift {
        input: PathBuf,
        #[arg(long)]
        h: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::CeCohomology { .. } => "ce-cohomology",
            Command::CheckTrb { .. } => "check-trb",
            Command::CheckMc { .. } => "check-mc",
            Command::CohomologyOfT { .. } => "cohomology-of-t",
            Command::CheckReynolds { .. } => "check-reynolds",
            Command::ReynoldsFromDerivation { .. } => "reynolds-from-derivation",
            Command::WittReport { .. } => "witt-report",
            Command::CheckRMatrix { .. } => "check-r-matrix",
            Command::CheckNs { .. } => "check-ns",
            Command::NsFrom { .. } => "ns-from",
            Command::TrbFromNs { .. } => "trb-from-ns",
            Command::DeformCheck { .. } => "deform-check",
            Command::NijenhuisElement { .. } => "nijenhuis-element",
            Command::RigidityProbe { .. } => "rigidity-probe",
            Command::CheckTgcs { .. } => "check-tgcs",
            Command::LieTgcs { .. } => "lie-tgcs",
            Command::Gauge { .. } => "gauge",
            Command::Shift { .. } => "shift",
        }
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Default)]
struct Report {
    dims: BTreeMap<String, Value>,
    notes: Vec<String>,
    checks: Vec<(String, Verdict)>,
    output: Option<Value>,
    status: Option<&'static str>,
}

impl Report {
    fn dim(&mut self, key: &str, v: impl Into<Value>) {
        self.dims.insert(key.to_string(), v.into());
    }

    fn setup_dims(&mut self, s: &TrbSetup) {
        self.dim("lie", s.lie_dim());
        self.dim("module", s.module_dim());
    }

    fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    fn check(&mut self, name: &str, v: Verdict) {
        self.checks.push((name.to_string(), v));
    }

    fn holds(&self) -> bool {
        self.checks.iter().all(|(_, v)| v.holds)
    }

    fn verdict_word(&self) -> &'static str {
        match (self.holds(), self.status) {
            (true, _) => "pass",
            (false, Some(s)) => s,
            (false, None) => "fail",
        }
    }
}

/// A failing check without a defect vector.
fn failed() -> Verdict {
    Verdict { holds: false, witness: None }
}

fn render_witness(w: &Witness) -> String {
    let tuple: Vec<String> = w.tuple.iter().map(usize::to_string).collect();
    let defect: Vec<String> = w.defect.0.iter().map(format_scalar).collect();
    format!("{} at [{}], defect [{}]", w.label, tuple.join(","), defect.join(", "))
}

fn render_text(command: &str, seed: u64, r: &Report) -> String {
    let mut out = format!("trbtool {command} seed={seed}\n");
    if !r.dims.is_empty() {
        let dims: Vec<String> = r.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out += &format!("dimensions: {}\n", dims.join(" "));
    }
    for n in &r.notes {
        out += n;
        out.push('\n');
    }
    for (name, v) in &r.checks {
        match (&v.holds, &v.witness) {
            (true, _) => out += &format!("pass  {name}\n"),
            (false, Some(w)) => out += &format!("FAIL  {name}: {}\n", render_witness(w)),
            (false, None) => out += &format!("FAIL  {name}\n"),
        }
    }
    if let Some(o) = &r.output {
        out += &format!("output: {}\n", serde_json::to_string(o).expect("json"));
    }
    out += &format!("verdict: {}\n", r.verdict_word());
    out
}

fn render_json(command: &str, seed: u64, r: &Report) -> String {
    let witnesses: Vec<Value> = r
        .checks
        .iter()
        .filter(|(_, v)| !v.holds)
        .map(|(name, v)| json!({ "check": name, "witness": v.witness }))
        .collect();
    let checks: Vec<Value> = r.checks.iter().map(|(name, v)| json!({ "name": name, "holds": v.holds })).collect();
    let mut obj = json!({
        "command": command,
        "verdict": r.verdict_word(),
        "witnesses": witnesses,
        "dimensions": r.dims,
        "seed": seed,
        "checks": checks,
        "notes": r.notes,
    });
    if let Some(o) = &r.output {
        obj["output"] = o.clone();
    }
    serde_json::to_string_pretty(&obj).expect("json") + "\n"
}

/// Input, shape and structural errors exit with 2; failed mathematical requirements with 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::MissingSection(_)
        | Error::DimensionMismatch { .. }
        | Error::NotSquare { .. }
        | Error::IndexOutOfRange { .. }
        | Error::DuplicateAssignment(_)
        | Error::NotLie(_)
        | Error::NotRepresentation(_)
        | Error::NotCocycle(_)
        | Error::NotSkew
        | Error::NotAdmissible(_) => 2,
        _ => 1,
    }
}

fn load(path: &Path) -> Result<InstanceDocument> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    InstanceDocument::parse(&text)
}

fn flag<T: DeserializeOwned>(name: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("--{name}: {e}")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("json")
}

fn matrix_note(label: &str, m: &Matrix) -> String {
    format!("{label} =\n{}", m.render())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let name = cli.command.name();
    match execute(&cli.command, cli.seed) {
        Ok(r) => {
            let code = if r.holds() { 0 } else { 1 };
            let stdout = if cli.json { render_json(name, cli.seed, &r) } else { render_text(name, cli.seed, &r) };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = exit_code(&e);
            if code == 1 {
                let mut r = Report::default();
                r.check(&e.to_string(), failed());
                let stdout = if cli.json { render_json(name, cli.seed, &r) } else { render_text(name, cli.seed, &r) };
                return Outcome { code, stdout, stderr: String::new() };
            }
            if cli.json {
                let obj = json!({
                    "command": name,
                    "verdict": "invalid",
                    "witnesses": [],
                    "dimensions": {},
                    "seed": cli.seed,
                    "error": e.to_string(),
                });
                Outcome {
                    code,
                    stdout: serde_json::to_string_pretty(&obj).expect("json") + "\n",
                    stderr: String::new(),
                }
            } else {
                Outcome { code, stdout: String::new(), stderr: format!("trbtool {name}: error: {e}\n") }
            }
        }
    }
}

fn execute(cmd: &Command, seed: u64) -> Result<Report> {
    let mut r = Report::default();
    match cmd {
        Command::Validate { input } => {
            let doc = load(input)?;
            for line in doc.validate()? {
                r.note(line);
            }
        }
        Command::CeCohomology { input, nmax } => {
            let doc = load(input)?;
            let l = doc.lie()?;
            let rep = doc.rep(&l)?;
            r.dim("lie", l.dim());
            r.dim("module", rep.module_dim());
            let dims = ce_cohomology_dims(&l, &rep, *nmax);
            for (n, d) in dims.iter().enumerate() {
                r.note(format!("H^{n} = {d}"));
            }
            r.dim("cohomology", dims);
        }
        Command::CheckTrb { input } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let t = doc.operator_t(&s)?;
            r.setup_dims(&s);
            r.check("twisted Rota-Baxter identity", check_trb(&s, &t)?);
            r.check("graph is a subalgebra of the twisted semidirect product", graph_subalgebra_check(&s, &t)?);
        }
        Command::CheckMc { input, sweep } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let t = doc.operator_t(&s)?;
            r.setup_dims(&s);
            let mc = mc_verdict(&s, &t)?;
            if mc.holds != check_trb(&s, &t)?.holds {
                return Err(Error::Postcondition("Maurer-Cartan and operator verdicts disagree".into()));
            }
            r.check("Maurer-Cartan equation", mc);
            let mut g = Gen::new(seed);
            let mut positives = 0;
            for _ in 0..*sweep {
                let t2 = g.operator(&s, 1);
                let mc = mc_verdict(&s, &t2)?.holds;
                if mc != check_trb(&s, &t2)?.holds {
                    return Err(Error::Postcondition(
                        "Maurer-Cartan and operator verdicts disagree in the sweep".into(),
                    ));
                }
                positives += usize::from(mc);
            }
            r.note(format!("sweep: {sweep} seeded operators, verdicts agree, {positives} twisted Rota-Baxter"));
        }
        Command::CohomologyOfT { input, nmax } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let t = doc.operator_t(&s)?;
            r.setup_dims(&s);
            let dims = cohomology_of_t_dims(&s, &t, *nmax)?;
            for (n, d) in dims.iter().enumerate() {
                r.note(format!("H^{n}_T = {d}"));
            }
            r.dim("cohomology", dims);
            r.note("agrees with the CE cohomology of the induced Lie algebra on M with coefficients in g");
        }
        Command::CheckReynolds { input } => {
            let doc = load(input)?;
            let l = doc.lie()?;
            let rr = doc.endomorphism(&l, "operator_T")?;
            r.dim("lie", l.dim());
            r.check("Reynolds identity", reynolds_check(&l, &rr)?);
        }
        Command::ReynoldsFromDerivation { input } => {
            let doc = load(input)?;
            let l = doc.lie()?;
            let d = doc.endomorphism(&l, "derivation_d")?;
            r.dim("lie", l.dim());
            let rr = reynolds_from_derivation(&l, &d)?;
            r.note(matrix_note("R", &rr));
            r.check("Reynolds identity", reynolds_check(&l, &rr)?);
            r.output = Some(to_value(&rr));
        }
        Command::WittReport { nmax } => {
            let rows = witt_report(*nmax);
            r.dim("rows", rows.len());
            r.note(format!("{:>3} {:>3} {:>12} {:>12} {:>12} {}", "m", "n", "lhs", "rhs", "induced", "row"));
            let mut verdict = Verdict::pass();
            for row in &rows {
                r.note(render_witt_row(row));
                if verdict.holds && !row.pass {
                    let m = usize::try_from(row.m).unwrap_or(0);
                    let n = usize::try_from(row.n).unwrap_or(0);
                    verdict = Verdict::fail("Witt row", vec![m, n], vec![&row.lhs - &row.rhs]);
                }
            }
            r.check("Reynolds identity on the Witt algebra", verdict);
        }
        Command::CheckRMatrix { input } => {
            let doc = load(input)?;
            let l = doc.lie()?;
            let psi = doc.psi(&l)?;
            let rm = doc.endomorphism(&l, "r_matrix")?;
            r.dim("lie", l.dim());
            let rep = r_matrix_check(&l, &rm, &psi)?;
            let holds = rep.verdict.holds;
            r.check("r-sharp is a psi-twisted Rota-Baxter operator on the coadjoint module", rep.verdict);
            r.check("r-sharp is a morphism from the dual bracket", rep.morphism);
            if holds {
                r.output = Some(to_value(&rep.dual_bracket));
            }
        }
        Command::CheckNs { input } => {
            let doc = load(input)?;
            let ns = doc.ns_lie()?;
            r.dim("ns", ns.dim());
            let rep = ns_check(&ns);
            let holds = rep.holds();
            r.check("NS1", rep.ns1);
            r.check("NS2", rep.ns2);
            if holds {
                let (l, _) = adjacent_lie(&ns)?;
                r.output = Some(json!({ "adjacent": LieAlgebraJson::from(&l) }));
            }
        }
        Command::NsFrom { source, input } => {
            let doc = load(input)?;
            let ns = match source {
                NsSource::Nijenhuis => {
                    let l = doc.lie()?;
                    let n = doc.endomorphism(&l, "operator_N")?;
                    r.dim("lie", l.dim());
                    let v = nijenhuis_check(&l, &n);
                    let ok = v.holds;
                    r.check("Nijenhuis identity", v);
                    ok.then(|| ns_from_nijenhuis(&l, &n)).transpose()?
                }
                NsSource::Assoc => {
                    let a = doc.assoc_ns()?;
                    r.dim("assoc", a.dim());
                    let rep = assoc_ns_check(&a);
                    let ok = rep.holds();
                    r.check("(x < y) < z = x < (y * z)", rep.prec_prec);
                    r.check("(x > y) < z = x > (y < z)", rep.succ_prec);
                    r.check("(x * y) > z = x > (y > z)", rep.total_succ);
                    r.check("square compatibility", rep.square);
                    ok.then(|| ns_from_assoc(&a)).transpose()?
                }
                NsSource::Trb => {
                    let s = doc.setup()?;
                    let t = doc.operator_t(&s)?;
                    r.setup_dims(&s);
                    let v = check_trb(&s, &t)?;
                    let ok = v.holds;
                    r.check("twisted Rota-Baxter identity", v);
                    ok.then(|| ns_from_trb(&s, &t)).transpose()?
                }
            };
            if let Some(ns) = ns {
                let rep = ns_check(&ns);
                r.check("NS1", rep.ns1);
                r.check("NS2", rep.ns2);
                r.output = Some(to_value(&NsLieJson::from_ns(&ns)));
            }
        }
        Command::TrbFromNs { input } => {
            let doc = load(input)?;
            let ns = doc.ns_lie()?;
            r.dim("ns", ns.dim());
            let rep = ns_check(&ns);
            let ok = rep.holds();
            r.check("NS1", rep.ns1);
            r.check("NS2", rep.ns2);
            if ok {
                let (s, t) = trb_from_ns(&ns)?;
                r.check("identity is twisted Rota-Baxter", check_trb(&s, &t)?);
                let out = InstanceDocument {
                    lie_algebra: Some(LieAlgebraJson::from(s.algebra())),
                    representation: Some(RepresentationJson::from(s.rep())),
                    cocycle_h: Some(s.cocycle().clone()),
                    operator_t: Some(t),
                    ..InstanceDocument::default()
                };
                r.output = Some(to_value(&out));
            }
        }
        Command::DeformCheck { input, order } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let t = doc.operator_t(&s)?;
            let d = doc.deformation(&s)?;
            r.setup_dims(&s);
            let k = order.unwrap_or(d.order);
            let zero = Matrix::zeros(s.lie_dim(), s.module_dim());
            let coeffs: Vec<Matrix> =
                (0..k).map(|i| d.coefficients.get(i).cloned().unwrap_or_else(|| zero.clone())).collect();
            r.dim("order", k);
            let t1 = coeffs.first().cloned().unwrap_or_else(|| zero.clone());
            let fd = FormalDeformation::new(s.clone(), t.clone(), coeffs)?;
            for (i, c) in crate::deform::deformation_equation_defects(&fd).iter().enumerate() {
                let v = match c.first_nonzero() {
                    None => Verdict::pass(),
                    Some((tuple, defect)) => Verdict::fail(format!("order {}", i + 1), tuple, defect),
                };
                r.check(&format!("deformation equation at order {}", i + 1), v);
            }
            let cocycle = infinitesimal_is_cocycle(&s, &t, &t1)?;
            r.note(format!("d_T(T_1) = 0: {}", if cocycle { "yes" } else { "no" }));
        }
        Command::NijenhuisElement { input, x } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let t = doc.operator_t(&s)?;
            let x: ScalarVec = flag("x", x)?;
            r.setup_dims(&s);
            let rep = nijenhuis_element_check(&s, &t, &x.0)?;
            let c = &rep.conditions;
            r.check("[x, u .T x] = 0", rep.commutes.clone());
            r.check("[[x,y],[x,z]] = 0", c.lie_hom.clone());
            r.check("H(x, T(y.u)) = y.H(x, Tu)", c.action_linear.clone());
            r.check("[x,y].(x.u + H(x, Tu)) = 0", c.action_quadratic.clone());
            r.check("x.H(y,z) + H(x, T H(y,z)) = H([x,y],z) + H(y,[x,z])", c.cocycle_linear.clone());
            r.check("H([x,y],[x,z]) = 0", c.cocycle_quadratic.clone());
            let dx = d_t(&s, &t, &Cochain::constant(s.module_dim(), x.0.clone()))?;
            r.note(matrix_note("d_T(x)", dx.matrix()));
            r.output = Some(to_value(dx.matrix()));
        }
        Command::RigidityProbe { input, grid } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let t = doc.operator_t(&s)?;
            r.setup_dims(&s);
            let rep = rigidity_probe(&s, &t, *grid)?;
            r.dim("z1", rep.z1_dim);
            r.dim("coboundaries", rep.coboundary_dim);
            r.note(format!("grid: coefficients in -{grid}..={grid}"));
            for (i, p) in rep.preimages.iter().enumerate() {
                match p {
                    Some(x) => r.note(format!(
                        "cocycle {i}: Nijenhuis preimage [{}]",
                        x.0.iter().map(format_scalar).collect::<Vec<_>>().join(", ")
                    )),
                    None => r.note(format!("cocycle {i}: no Nijenhuis preimage on the grid")),
                }
            }
            r.note(format!("span certified: {}", rep.span_certified));
            let v = match rep.status {
                RigidityStatus::SufficientConditionEstablished => Verdict::pass(),
                RigidityStatus::Inconclusive => {
                    r.status = Some("inconclusive");
                    failed()
                }
            };
            r.check("every 1-cocycle is d_T of a Nijenhuis element", v);
            r.output = Some(to_value(&rep));
        }
        Command::CheckTgcs { input, sweep } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let j = doc.gcs_components(&s)?;
            r.setup_dims(&s);
            let direct = tgcs_check_direct(&s, &j)?;
            let comps = tgcs_check_components(&s, &j)?;
            for (k, (label, v)) in TGCS_EQUATIONS.iter().zip(&comps.equations).enumerate() {
                r.note(format!("equation {:>2} {}: {label}", k + 1, if v.holds { "holds" } else { "fails" }));
            }
            r.note(format!("graph of (T, S) closed: {}", comps.graph_closed.holds));
            r.check("J^2 = -id", direct.almost_complex);
            r.check("integrability in the twisted semidirect product", direct.integrable);
            let mut g = Gen::new(seed);
            let mut positives = 0;
            for i in 0..*sweep {
                let even = (s.lie_dim() + s.module_dim()) % 2 == 0;
                let jj = if even && i % 2 == 1 { g.almost_complex_components(&s) } else { g.random_components(&s, 1) };
                let a = tgcs_check_direct(&s, &jj)?.holds();
                if a != tgcs_check_components(&s, &jj)?.holds() {
                    return Err(Error::Postcondition("component equations disagree with the direct definition".into()));
                }
                positives += usize::from(a);
            }
            r.note(format!("sweep: {sweep} seeded component tuples, verdicts agree, {positives} structures"));
        }
        Command::LieTgcs { input } => {
            let doc = load(input)?;
            let l = doc.lie()?;
            let psi = doc.psi(&l)?;
            let triple = doc.lie_gcs(&l)?;
            r.dim("lie", l.dim());
            let rep = lie_tgcs_check(&l, &psi, &triple)?;
            let direct = tgcs_check_direct(&r_matrix_setup(&l, &psi)?, &triple.components())?;
            r.check("orthogonal for the pairing", rep.orthogonal);
            r.check("J^2 = -id", direct.almost_complex);
            r.check("integrability in the twisted semidirect product", direct.integrable);
        }
        Command::Gauge { input, b } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let t = doc.operator_t(&s)?;
            let b: Matrix = flag("b", b)?;
            r.setup_dims(&s);
            let tb = gauge_transform(&s, &t, &b)?;
            let phi = &Matrix::identity(s.module_dim()) + &(&b * &t);
            r.check("T_B is twisted Rota-Baxter", check_trb(&s, &tb)?);
            r.check("id + BT carries [,]_T to [,]_{T_B}", transport_check(&s, &t, &tb, &phi));
            r.note(matrix_note("T_B", &tb));
            r.output = Some(to_value(&tb));
        }
        Command::Shift { input, h } => {
            let doc = load(input)?;
            let s = doc.setup()?;
            let t = doc.operator_t(&s)?;
            let h: Matrix = flag("h", h)?;
            r.setup_dims(&s);
            let (s2, t2) = shift_by_coboundary(&s, &t, &h)?;
            r.check("shifted operator is twisted Rota-Baxter for H + dh", check_trb(&s2, &t2)?);
            r.note(matrix_note("T'", &t2));
            r.output = Some(json!({ "cocycle_H": to_value(s2.cocycle()), "operator_T": to_value(&t2) }));
        }
    }
    Ok(r)
}

fn mc_verdict(s: &TrbSetup, t: &Matrix) -> Result<Verdict> {
    Ok(match mc_defect(s, t)?.first_nonzero() {
        None => Verdict::pass(),
        Some((tuple, defect)) => Verdict::fail("Maurer-Cartan defect", tuple, defect),
    })
}
