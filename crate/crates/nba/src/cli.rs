//! The `nba` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nba_core::check::{DEFAULT_BUDGET, DEFAULT_SAMPLES, DEFAULT_SEED};
use nba_core::derived::{designated, translate_term, CenterParams, Signature};
use nba_core::ideals::{
    all_congruences, all_multideals, all_ultramultideals_with, multideal_of, stone_embed, validate_multideal,
    Validation, DEFAULT_CONGRUENCE_BOUND,
};
use nba_core::representation::{partial_fn_algebra, star_embed, verify_embedding};
use nba_core::skew::{
    audit_nba, audit_right_handed, audit_skew_ba, audit_skew_lattice, audit_skew_star, audit_srca, church_reduct,
    right_church_reduct, skew_reduct, BinTable, StarTable, TernTable,
};
use nba_core::synthesis::{simplify, synth, verify_term};
use nba_core::term::{eval_term, Outcome};
use nba_core::{
    check_identity, parse_term, power_algebra, AuditConfig, CheckMode, Dim, Element, IndexSet, IndexedAlgebra,
};
use serde::de::DeserializeOwned;

use crate::error::CliError;
use crate::format::{partial_fn_json, Algebra, AlgebraFile, CongruenceJson, MultidealJson, TruthTableFile};
use crate::report::*;

#[derive(Parser, Debug)]
#[command(name = "nba", version, about = "Boolean-like algebras of dimension n: audits, terms, multideals")]
pub struct Cli {
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Audit an algebra file against an axiom suite.
    Check(CheckArgs),
    /// Evaluate a term in a power of the generator.
    Eval(EvalArgs),
    /// Decide whether two terms are equal in every nBA.
    Equiv(EquivArgs),
    /// Translate a term into another signature.
    Translate(TranslateArgs),
    /// Compile a truth table into a q-term.
    Synth(SynthArgs),
    /// List all congruences and the proper multideals they induce.
    Congruences(AlgebraArgs),
    /// List proper multideals, or validate a candidate.
    Multideals(MultidealsArgs),
    /// List ultramultideals and their homomorphisms onto the generator.
    Ultras(UltrasArgs),
    /// Stone embedding into a power of the generator.
    Embed(SingleAlgebra),
    /// Operation tables of a Church, right Church or skew reduct.
    Reduct(ReductArgs),
    /// Embed partial functions into the skew reduct of a power.
    Represent(RepresentArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Nba,
    Skewba,
    Srca,
    Skewstar,
    Skewlattice,
    Righthanded,
}

#[derive(Args, Debug)]
pub struct SamplingArgs {
    /// Random assignments to draw when the exhaustive space exceeds the budget.
    #[arg(long)]
    pub samples: Option<u64>,
    /// Seed for sampled checks.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    #[arg(long, value_enum)]
    pub suite: SuiteArg,
    /// Index of the reduct for the skew and SRCA suites.
    #[arg(long, default_value_t = 1)]
    pub i: u8,
    #[command(flatten)]
    pub sampling: SamplingArgs,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub term: String,
    /// Bindings `x=2` or `x=1,3,2`; all vectors must have the same length.
    #[arg(long, num_args = 1..)]
    pub env: Vec<String>,
}

#[derive(Args, Debug)]
pub struct EquivArgs {
    #[arg(long)]
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    #[command(flatten)]
    pub sampling: SamplingArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Q,
    Skew,
    Star,
}

#[derive(Args, Debug)]
pub struct TranslateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub term: String,
    #[arg(long, value_enum)]
    pub to: TargetArg,
    /// Index of the skew signature.
    #[arg(long)]
    pub i: Option<u8>,
}

#[derive(Args, Debug)]
pub struct SynthArgs {
    #[arg(long)]
    pub table: PathBuf,
    /// Also rewrite with B0, B1 and B4 and print the trace.
    #[arg(long)]
    pub simplify: bool,
}

#[derive(Args, Debug)]
pub struct SingleAlgebra {
    #[arg(long)]
    pub algebra: PathBuf,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    /// Largest carrier for congruence enumeration.
    #[arg(long, default_value_t = DEFAULT_CONGRUENCE_BOUND)]
    pub bound: usize,
}

#[derive(Args, Debug)]
pub struct MultidealsArgs {
    #[command(flatten)]
    pub base: AlgebraArgs,
    /// Candidate multideal file `{"components":[[..],..]}` to validate.
    #[arg(long)]
    pub validate: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct UltrasArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub i: u8,
    #[arg(long, default_value_t = 2)]
    pub j: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReductKindArg {
    Church,
    Rchurch,
    Skew,
}

#[derive(Args, Debug)]
pub struct ReductArgs {
    #[arg(long)]
    pub algebra: PathBuf,
    #[arg(long, value_enum)]
    pub kind: ReductKindArg,
    #[arg(long)]
    pub i: u8,
    /// Subscript set of a Church reduct; defaults to `{i}`.
    #[arg(long, value_delimiter = ',')]
    pub d: Option<Vec<u8>>,
    #[arg(long)]
    pub j: Option<u8>,
}

#[derive(Args, Debug)]
pub struct RepresentArgs {
    #[arg(long)]
    pub points: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub i: u8,
}

/// A rendered report.
pub struct Output {
    pub json: String,
    pub text: String,
    pub ok: bool,
}

fn emit<R: Report>(r: &R) -> Output {
    Output {
        json: serde_json::to_string_pretty(r).expect("reports serialise"),
        text: r.text(),
        ok: r.ok(),
    }
}

/// Parse `argv`, run the command and write its report to `out`. Returns
/// the exit code: 0 on success, 1 for a counterexample or an invalid input
/// object, 2 for usage and file errors.
pub fn run<I, T>(argv: I, out: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (body, code) = match execute(&cli.command) {
        Ok(o) => (if cli.text { o.text } else { o.json + "\n" }, if o.ok { 0 } else { 1 }),
        Err(e) if e.exit_code() == 1 => {
            let o = emit(&ErrorReport { error: e.to_string() });
            (if cli.text { o.text } else { o.json + "\n" }, 1)
        }
        Err(e) => {
            eprintln!("nba: {e}");
            return e.exit_code();
        }
    };
    if out.write_all(body.as_bytes()).is_err() {
        return 2;
    }
    code
}

pub fn execute(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Check(a) => check(a),
        Command::Eval(a) => eval(a),
        Command::Equiv(a) => equiv(a),
        Command::Translate(a) => translate(a),
        Command::Synth(a) => synthesize(a),
        Command::Congruences(a) => congruences(a),
        Command::Multideals(a) => multideals(a),
        Command::Ultras(a) => ultras(a),
        Command::Embed(a) => embed(a),
        Command::Reduct(a) => reduct(a),
        Command::Represent(a) => represent(a),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

pub fn load_algebra(path: &Path) -> Result<Algebra, CliError> {
    let file: AlgebraFile = read_json(path)?;
    Ok(Algebra::from_file(&file)?)
}

fn audit_config(s: &SamplingArgs) -> AuditConfig {
    AuditConfig {
        budget: DEFAULT_BUDGET,
        samples: s.samples.unwrap_or(DEFAULT_SAMPLES),
        seed: s.seed.unwrap_or(DEFAULT_SEED),
    }
}

fn check(a: &CheckArgs) -> Result<Output, CliError> {
    let alg = load_algebra(&a.algebra)?;
    let cfg = audit_config(&a.sampling);
    let report = match a.suite {
        SuiteArg::Nba => audit_nba(&alg, &cfg),
        SuiteArg::Skewba => audit_skew_ba(&skew_reduct(&alg, a.i)?, &cfg),
        SuiteArg::Skewlattice => audit_skew_lattice(&skew_reduct(&alg, a.i)?, &cfg),
        SuiteArg::Righthanded => audit_right_handed(&skew_reduct(&alg, a.i)?, &cfg),
        SuiteArg::Srca => audit_srca(&right_church_reduct(&alg, a.i)?, &cfg),
        SuiteArg::Skewstar => audit_skew_star(&StarTable::of(&alg)?, &cfg),
    };
    Ok(emit(&CheckReport::of(&alg, &report)))
}

fn parse_values(text: &str) -> Result<Vec<u8>, CliError> {
    text.split(',')
        .map(|v| {
            let v = v.trim();
            v.strip_prefix('e')
                .unwrap_or(v)
                .parse::<u8>()
                .map_err(|_| CliError::Usage(format!("bad value `{v}` in binding")))
        })
        .collect()
}

fn eval(a: &EvalArgs) -> Result<Output, CliError> {
    let dim = Dim::new(a.n)?;
    let term = parse_term(&a.term, dim)?;
    let mut bindings = BTreeMap::new();
    for b in &a.env {
        let (name, value) = b
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("binding `{b}` is not of the form name=value")))?;
        bindings.insert(name.trim().to_string(), parse_values(value)?);
    }
    let points = bindings.values().next().map_or(1, Vec::len);
    let alg = power_algebra(a.n, points)?;
    let env = bindings
        .into_iter()
        .map(|(k, v)| Ok((k, Element::new(dim, v)?)))
        .collect::<Result<BTreeMap<_, _>, nba_core::Error>>()?;
    let value = eval_term(&term, &env, &alg)?;
    Ok(emit(&EvalReport { n: a.n, term: term.to_string(), value: value.values().to_vec() }))
}

fn equiv(a: &EquivArgs) -> Result<Output, CliError> {
    let dim = Dim::new(a.n)?;
    let (lhs, rhs) = (parse_term(&a.lhs, dim)?, parse_term(&a.rhs, dim)?);
    let mode = match a.sampling.samples {
        Some(count) => CheckMode::Sampled { count, seed: a.sampling.seed.unwrap_or(DEFAULT_SEED) },
        None => CheckMode::Auto,
    };
    let v = check_identity(&lhs, &rhs, dim, mode)?;
    let (verdict, counterexample) = match &v.outcome {
        Outcome::Valid => ("Valid", None),
        Outcome::Counterexample(asg) => (
            "Counterexample",
            Some(asg.0.iter().map(|(var, k)| VarValue { var: var.clone(), value: format!("e{k}") }).collect()),
        ),
    };
    Ok(emit(&EquivReport {
        n: a.n,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        verdict: verdict.into(),
        mode: v.mode.into(),
        counterexample,
    }))
}

fn translate(a: &TranslateArgs) -> Result<Output, CliError> {
    let dim = Dim::new(a.n)?;
    let term = parse_term(&a.term, dim)?;
    let (target, name) = match (a.to, a.i) {
        (TargetArg::Q, _) => (Signature::Q, "q".to_string()),
        (TargetArg::Star, _) => (Signature::Star, "star".to_string()),
        (TargetArg::Skew, Some(i)) => (Signature::Skew(i), format!("skew[{i}]")),
        (TargetArg::Skew, None) => return Err(CliError::Usage("--to skew needs --i".into())),
    };
    let out = translate_term(&term, dim, target)?;
    Ok(emit(&TranslateReport { n: a.n, source: term.to_string(), target: name, term: out.to_string() }))
}

fn synthesize(a: &SynthArgs) -> Result<Output, CliError> {
    let file: TruthTableFile = read_json(&a.table)?;
    let table = file.to_table()?;
    let term = synth(&table);
    let verified = verify_term(&term, &table)?;
    let simplified = if a.simplify {
        let (s, trace) = simplify(&term, table.dim());
        Some(SimplifiedJson {
            verified: verify_term(&s, &table)?,
            term: s.to_string(),
            trace: trace
                .into_iter()
                .map(|step| StepJson { rule: step.rule.name().into(), position: step.position })
                .collect(),
        })
    } else {
        None
    };
    Ok(emit(&SynthReport { n: file.n, k: file.k, term: term.to_string(), verified, simplified }))
}

fn congruences(a: &AlgebraArgs) -> Result<Output, CliError> {
    let alg = load_algebra(&a.algebra)?;
    let congs = all_congruences(&alg, a.bound)?;
    let mut entries = Vec::new();
    let mut proper_multideals = Vec::new();
    for c in &congs {
        let m = multideal_of(&alg, c)?;
        let json = MultidealJson::of(&alg, &m);
        entries.push(CongruenceEntry { congruence: CongruenceJson::of(&alg, c), proper: json.is_some() });
        proper_multideals.extend(json);
    }
    Ok(emit(&CongruencesReport { size: alg.size(), count: congs.len(), congruences: entries, proper_multideals }))
}

fn multideals(a: &MultidealsArgs) -> Result<Output, CliError> {
    let alg = load_algebra(&a.base.algebra)?;
    if let Some(path) = &a.validate {
        let candidate: MultidealJson = read_json(path)?;
        let tuple = candidate.resolve(&alg)?;
        let report = match validate_multideal(&alg, &tuple)? {
            Validation::Proper(m) => ValidationReport {
                verdict: "proper".into(),
                clause: None,
                witness: None,
                multideal: MultidealJson::of(&alg, &m),
            },
            Validation::Degenerate => {
                ValidationReport { verdict: "degenerate".into(), clause: None, witness: None, multideal: None }
            }
            Validation::Invalid { clause, witness } => ValidationReport {
                verdict: "invalid".into(),
                clause: Some(clause.to_string()),
                witness: Some(alg.labels(&witness)),
                multideal: None,
            },
        };
        return Ok(emit(&report));
    }
    let ms = all_multideals(&alg, a.base.bound)?;
    let multideals: Vec<MultidealJson> = ms.iter().filter_map(|m| MultidealJson::of(&alg, m)).collect();
    Ok(emit(&MultidealsReport { size: alg.size(), count: multideals.len(), multideals, degenerate_excluded: true }))
}

fn ultras(a: &UltrasArgs) -> Result<Output, CliError> {
    let alg = load_algebra(&a.algebra)?;
    let cp = CenterParams::new(alg.dim(), a.i, a.j)?;
    let us = all_ultramultideals_with(&alg, cp);
    let ultras = us
        .iter()
        .map(|u| UltraJson {
            multideal: MultidealJson::of(&alg, &u.to_multideal()).expect("ultramultideals are proper"),
            homomorphism: u.homomorphism(),
        })
        .collect();
    let all: Vec<usize> = (0..alg.size()).collect();
    Ok(emit(&UltrasReport { size: alg.size(), count: us.len(), elements: alg.labels(&all), ultras }))
}

fn embed(a: &SingleAlgebra) -> Result<Output, CliError> {
    let alg = load_algebra(&a.algebra)?;
    let st = stone_embed(&alg)?;
    let images = (0..alg.size())
        .map(|x| ImageJson { element: alg.label(x), image: st.image(x).values().to_vec() })
        .collect();
    Ok(emit(&EmbedReport {
        n: alg.dim().get(),
        target_points: st.target().points(),
        injective: st.is_injective(),
        surjective: st.is_surjective(),
        preserves_q: st.preserves_q(&alg),
        images,
    }))
}

fn binary(t: &BinTable) -> Vec<Vec<usize>> {
    (0..t.size()).map(|a| (0..t.size()).map(|b| t.get(a, b)).collect()).collect()
}

fn ternary(t: &TernTable) -> Vec<Vec<Vec<usize>>> {
    let s = t.size();
    (0..s).map(|x| (0..s).map(|y| (0..s).map(|z| t.get(x, y, z)).collect()).collect()).collect()
}

fn reduct(a: &ReductArgs) -> Result<Output, CliError> {
    let alg = load_algebra(&a.algebra)?;
    let all: Vec<usize> = (0..alg.size()).collect();
    let mut report = ReductReport {
        kind: String::new(),
        d: None,
        i: a.i,
        j: None,
        elements: alg.labels(&all),
        zero: 0,
        one: None,
        meet: None,
        join: None,
        minus: None,
        t: None,
    };
    match a.kind {
        ReductKindArg::Church => {
            let d: IndexSet = match &a.d {
                Some(list) => list.iter().copied().collect(),
                None => IndexSet::singleton(a.i),
            };
            if !d.contains(a.i) {
                return Err(CliError::Usage(format!("--i {} must belong to --d", a.i)));
            }
            let c = church_reduct(&alg, d, Some(a.i), a.j)?;
            report.kind = "church".into();
            report.d = Some(d.iter().collect());
            report.j = designated(alg.dim(), d, Some(a.i), a.j)?.1;
            report.zero = c.zero;
            report.one = Some(c.one);
            report.t = Some(ternary(&c.t));
        }
        ReductKindArg::Rchurch => {
            let r = right_church_reduct(&alg, a.i)?;
            report.kind = "rchurch".into();
            report.zero = r.zero;
            report.t = Some(ternary(&r.q));
        }
        ReductKindArg::Skew => {
            let s = skew_reduct(&alg, a.i)?;
            report.kind = "skew".into();
            report.zero = s.zero;
            report.meet = Some(binary(&s.meet));
            report.join = Some(binary(&s.join));
            report.minus = Some(binary(&s.minus));
        }
    }
    Ok(emit(&report))
}

fn represent(a: &RepresentArgs) -> Result<Output, CliError> {
    let dim = Dim::new(a.n)?;
    let r = verify_embedding(a.points, dim, a.i)?;
    let pf = partial_fn_algebra(a.points)?;
    let images = pf
        .elements()
        .iter()
        .map(|f| Ok(StarImage { f: partial_fn_json(f), image: star_embed(f, dim, a.i)?.values().to_vec() }))
        .collect::<Result<Vec<_>, nba_core::Error>>()?;
    Ok(emit(&RepresentReport {
        points: a.points,
        n: a.n,
        i: a.i,
        pairs_checked: r.pairs_checked,
        injective: r.injective,
        homomorphism: r.failure.is_none(),
        failure: r.failure.as_ref().map(RepresentReport::failure_of),
        images,
    }))
}
