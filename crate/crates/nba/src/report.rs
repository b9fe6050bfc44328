//! Report types printed by the command-line front end. Every report is
//! JSON by default and has a plain-text rendering.

use std::fmt::Write as _;

use nba_core::check::Mode;
use nba_core::skew::AxiomReport;
use serde::{Deserialize, Serialize};

use crate::format::{partial_fn_json, Algebra, CongruenceJson, ElementRepr, MultidealJson, PartialFnJson};

pub trait Report: Serialize {
    /// Whether the command succeeded; failing reports exit with 1.
    fn ok(&self) -> bool {
        true
    }

    fn text(&self) -> String;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModeJson {
    Exhaustive { assignments: u64 },
    Sampled { count: u64, seed: u64 },
}

impl From<Mode> for ModeJson {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exhaustive { assignments } => {
                ModeJson::Exhaustive { assignments: u64::try_from(assignments).unwrap_or(u64::MAX) }
            }
            Mode::Sampled { count, seed } => ModeJson::Sampled { count, seed },
        }
    }
}

impl std::fmt::Display for ModeJson {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModeJson::Exhaustive { assignments } => write!(f, "exhaustive, {assignments} assignments"),
            ModeJson::Sampled { count, seed } => write!(f, "sampled, {count} samples, seed {seed:#x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomJson {
    pub name: String,
    pub ok: bool,
    pub mode: ModeJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub var: String,
    pub value: ElementRepr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleJson {
    pub axiom: String,
    pub assignment: Vec<Binding>,
}

/// `{"suite":"NBA","axioms":[{"name":"B2","ok":true,..}],"counterexample":{..}}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub axioms: Vec<AxiomJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleJson>,
}

impl CheckReport {
    pub fn of(alg: &Algebra, r: &AxiomReport) -> Self {
        let axioms = r
            .outcomes
            .iter()
            .map(|o| AxiomJson { name: o.name.clone(), ok: o.ok, mode: o.mode.into() })
            .collect();
        let counterexample = r.first_failure().and_then(|o| {
            let values = o.counterexample.as_ref()?;
            Some(CounterexampleJson {
                axiom: o.name.clone(),
                assignment: o
                    .variables
                    .iter()
                    .zip(values)
                    .map(|(v, &x)| Binding { var: v.clone(), value: alg.label(x) })
                    .collect(),
            })
        });
        CheckReport { suite: r.suite.name().into(), axioms, counterexample }
    }
}

impl Report for CheckReport {
    fn ok(&self) -> bool {
        self.axioms.iter().all(|a| a.ok)
    }

    fn text(&self) -> String {
        let mut s = format!("suite {}\n", self.suite);
        let width = self.axioms.iter().map(|a| a.name.len()).max().unwrap_or(0);
        for a in &self.axioms {
            let verdict = if a.ok { "ok" } else { "FAIL" };
            let _ = writeln!(s, "  {:<width$}  {verdict:<4}  ({})", a.name, a.mode);
        }
        if let Some(c) = &self.counterexample {
            let _ = writeln!(s, "counterexample to {}:", c.axiom);
            for b in &c.assignment {
                let _ = writeln!(s, "  {} = {}", b.var, repr_text(&b.value));
            }
        }
        s
    }
}

pub fn repr_text(e: &ElementRepr) -> String {
    match e {
        ElementRepr::Index(i) => format!("#{i}"),
        ElementRepr::Values(v) => values_text(v),
    }
}

fn values_text(v: &[u8]) -> String {
    let inner: Vec<String> = v.iter().map(u8::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn reprs_text(items: &[ElementRepr]) -> String {
    let inner: Vec<String> = items.iter().map(repr_text).collect();
    format!("{{{}}}", inner.join(" "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalReport {
    pub n: usize,
    pub term: String,
    pub value: Vec<u8>,
}

impl Report for EvalReport {
    fn text(&self) -> String {
        match self.value.as_slice() {
            [k] => format!("e{k}\n"),
            v => format!("{}\n", values_text(v)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarValue {
    pub var: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivReport {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    pub verdict: String,
    pub mode: ModeJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<VarValue>>,
}

impl Report for EquivReport {
    fn ok(&self) -> bool {
        self.counterexample.is_none()
    }

    fn text(&self) -> String {
        match &self.counterexample {
            None => format!("{} ({})\n", self.verdict, self.mode),
            Some(c) => {
                let bind: Vec<String> = c.iter().map(|b| format!("{}={}", b.var, b.value)).collect();
                format!("{} {} ({})\n", self.verdict, bind.join(","), self.mode)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslateReport {
    pub n: usize,
    pub source: String,
    pub target: String,
    pub term: String,
}

impl Report for TranslateReport {
    fn text(&self) -> String {
        format!("{}\n", self.term)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub rule: String,
    pub position: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplifiedJson {
    pub term: String,
    pub verified: bool,
    pub trace: Vec<StepJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthReport {
    pub n: usize,
    pub k: usize,
    pub term: String,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplified: Option<SimplifiedJson>,
}

impl Report for SynthReport {
    fn ok(&self) -> bool {
        self.verified && self.simplified.as_ref().is_none_or(|s| s.verified)
    }

    fn text(&self) -> String {
        let mut s = format!("term       {}\nverified   {}\n", self.term, self.verified);
        if let Some(simple) = &self.simplified {
            let _ = writeln!(s, "simplified {}\nverified   {}", simple.term, simple.verified);
            for step in &simple.trace {
                let _ = writeln!(s, "  {} at {:?}", step.rule, step.position);
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceEntry {
    #[serde(flatten)]
    pub congruence: CongruenceJson,
    /// Whether the constants lie in distinct blocks.
    pub proper: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruencesReport {
    pub size: usize,
    pub count: usize,
    pub congruences: Vec<CongruenceEntry>,
    pub proper_multideals: Vec<MultidealJson>,
}

fn components_text(s: &mut String, m: &MultidealJson) {
    for (k, c) in m.components.iter().enumerate() {
        let _ = writeln!(s, "    I_{} = {}", k + 1, reprs_text(c));
    }
}

impl Report for CongruencesReport {
    fn text(&self) -> String {
        let mut s = format!("{} congruences on {} elements\n", self.count, self.size);
        for (k, c) in self.congruences.iter().enumerate() {
            let blocks: Vec<String> = c.congruence.blocks.iter().map(|b| reprs_text(b)).collect();
            let tag = if c.proper { "" } else { "  (identifies constants)" };
            let _ = writeln!(s, "  θ{k}: {}{tag}", blocks.join(" "));
        }
        let _ = writeln!(s, "{} proper multideals", self.proper_multideals.len());
        for m in &self.proper_multideals {
            components_text(&mut s, m);
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultidealsReport {
    pub size: usize,
    pub count: usize,
    pub multideals: Vec<MultidealJson>,
    /// The degenerate multideal `(A, .., A)` is never listed.
    pub degenerate_excluded: bool,
}

impl Report for MultidealsReport {
    fn text(&self) -> String {
        let mut s = format!("{} proper multideals on {} elements (degenerate one omitted)\n", self.count, self.size);
        for (k, m) in self.multideals.iter().enumerate() {
            let _ = writeln!(s, "  #{k}");
            components_text(&mut s, m);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    /// `proper`, `degenerate` or `invalid`.
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<ElementRepr>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multideal: Option<MultidealJson>,
}

impl Report for ValidationReport {
    fn ok(&self) -> bool {
        self.verdict != "invalid"
    }

    fn text(&self) -> String {
        let mut s = self.verdict.clone();
        if let Some(c) = &self.clause {
            let _ = write!(s, ": violates {c}");
        }
        if let Some(w) = &self.witness {
            let _ = write!(s, ", witness {}", reprs_text(w));
        }
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UltraJson {
    #[serde(flatten)]
    pub multideal: MultidealJson,
    /// `h(x)` for each element, in the order of `elements`.
    pub homomorphism: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UltrasReport {
    pub size: usize,
    pub count: usize,
    pub elements: Vec<ElementRepr>,
    pub ultras: Vec<UltraJson>,
}

impl Report for UltrasReport {
    fn text(&self) -> String {
        let mut s = format!("{} ultramultideals on {} elements\n", self.count, self.size);
        for (k, u) in self.ultras.iter().enumerate() {
            let _ = writeln!(s, "  #{k}");
            components_text(&mut s, &u.multideal);
            let map: Vec<String> = self
                .elements
                .iter()
                .zip(&u.homomorphism)
                .map(|(e, h)| format!("{}->e{h}", repr_text(e)))
                .collect();
            let _ = writeln!(s, "    h: {}", map.join(" "));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageJson {
    pub element: ElementRepr,
    pub image: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedReport {
    pub n: usize,
    pub target_points: usize,
    pub injective: bool,
    pub surjective: bool,
    pub preserves_q: bool,
    pub images: Vec<ImageJson>,
}

impl Report for EmbedReport {
    fn ok(&self) -> bool {
        self.injective && self.preserves_q
    }

    fn text(&self) -> String {
        let mut s = format!(
            "into {}^{}: injective {}, surjective {}, preserves q {}\n",
            self.n, self.target_points, self.injective, self.surjective, self.preserves_q
        );
        for im in &self.images {
            let _ = writeln!(s, "  {} -> {}", repr_text(&im.element), values_text(&im.image));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductReport {
    /// `church`, `rchurch` or `skew`.
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<u8>>,
    pub i: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u8>,
    /// Operation tables address elements by their position here.
    pub elements: Vec<ElementRepr>,
    pub zero: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<usize>>>,
    /// `minus[a][b] = a \ b`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minus: Option<Vec<Vec<usize>>>,
    /// `t[x][y][z]`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<Vec<Vec<usize>>>>,
}

fn binary_text(s: &mut String, name: &str, table: &[Vec<usize>]) {
    let _ = writeln!(s, "{name}");
    for row in table {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        let _ = writeln!(s, "  {}", cells.join(""));
    }
}

impl Report for ReductReport {
    fn text(&self) -> String {
        let mut s = format!("{} reduct, i = {}", self.kind, self.i);
        if let Some(j) = self.j {
            let _ = write!(s, ", j = {j}");
        }
        if let Some(d) = &self.d {
            let _ = write!(s, ", d = {d:?}");
        }
        let _ = writeln!(s, "\nzero #{}", self.zero);
        if let Some(one) = self.one {
            let _ = writeln!(s, "one  #{one}");
        }
        for (k, e) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  #{k} = {}", repr_text(e));
        }
        for (name, table) in [("meet", &self.meet), ("join", &self.join), ("minus", &self.minus)] {
            if let Some(t) = table {
                binary_text(&mut s, name, t);
            }
        }
        if let Some(t) = &self.t {
            for (x, plane) in t.iter().enumerate() {
                binary_text(&mut s, &format!("t(#{x}, y, z)"), plane);
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub op: String,
    pub args: Vec<PartialFnJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarImage {
    pub f: PartialFnJson,
    pub image: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentReport {
    pub points: usize,
    pub n: usize,
    pub i: u8,
    pub pairs_checked: usize,
    pub injective: bool,
    pub homomorphism: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureJson>,
    pub images: Vec<StarImage>,
}

impl RepresentReport {
    pub fn failure_of(f: &nba_core::representation::EmbeddingFailure) -> FailureJson {
        FailureJson { op: f.op.to_string(), args: f.args.iter().map(partial_fn_json).collect() }
    }
}

impl Report for RepresentReport {
    fn ok(&self) -> bool {
        self.injective && self.homomorphism
    }

    fn text(&self) -> String {
        let mut s = format!(
            "|X| = {}, n = {}, i = {}: {} pairs, injective {}, homomorphism {}\n",
            self.points, self.n, self.i, self.pairs_checked, self.injective, self.homomorphism
        );
        if let Some(f) = &self.failure {
            let _ = writeln!(s, "fails for {} at {:?}", f.op, f.args);
        }
        for im in &self.images {
            let dom: Vec<String> = im.f.iter().map(|(p, v)| format!("{p}->{v}")).collect();
            let _ = writeln!(s, "  {{{}}} -> {}", dom.join(","), values_text(&im.image));
        }
        s
    }
}

/// Printed for objects that load but are rejected by the library.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
}

impl Report for ErrorReport {
    fn ok(&self) -> bool {
        false
    }

    fn text(&self) -> String {
        format!("error: {}\n", self.error)
    }
}
