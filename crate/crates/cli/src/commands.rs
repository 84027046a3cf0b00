use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use serde::Serialize;

use equicm::diagrams::{
    classify_fibers, cm_decide, fiber_type, join_diagram, noncm_join, suspension_diagram, Catalog,
    ClassifiedFibers, CompactGroupData, FiberType, GroupDiagram, HomogeneousPair, JoinOutcome,
};
use equicm::invariants::{CMVerdict, Decision, DEFAULT_SEED};
use equicm::models::{
    borel_model, cohomology_betti, formal_dimension, homogeneous_model_auto, ring_truncation, RingJson,
};
use equicm::report::Report;

use crate::Format;

pub struct Settings {
    pub max_degree: Option<u32>,
    pub format: Format,
    pub seed: Option<u64>,
}

impl Settings {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_diagram(path: &Path) -> Result<GroupDiagram> {
    GroupDiagram::from_json_str(&read(path)?).with_context(|| format!("invalid diagram {}", path.display()))
}

fn load_pair(path: &Path) -> Result<HomogeneousPair> {
    HomogeneousPair::from_json_str(&read(path)?).with_context(|| format!("invalid pair file {}", path.display()))
}

/// A catalog fiber name, or a path to a pair file.
fn resolve_pair(arg: &str) -> Result<(HomogeneousPair, bool)> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok((load_pair(path)?, false));
    }
    Ok((Catalog::builtin().pair(arg)?, true))
}

fn homogeneous_bound(pair: &HomogeneousPair) -> u32 {
    let dim = match (pair.k.dim, pair.h.dim) {
        (Some(a), Some(b)) if a >= b => (a - b) as i64,
        _ => formal_dimension(&pair.iota),
    };
    dim.max(2) as u32
}

fn emit<T: Serialize>(report: &Report<T>, table: impl FnOnce() -> String, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Table => print!("{}", table()),
    }
}

fn join_list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct BettiResult {
    name: Option<String>,
    betti: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fiber_type: Option<FiberType>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fibers: Option<ClassifiedFibers>,
}

pub fn betti(s: &Settings, input: &Path, homogeneous: bool, classify: bool) -> Result<ExitCode> {
    let (bound, result) = if homogeneous {
        let pair = load_pair(input)?;
        let bound = s.max_degree.unwrap_or_else(|| homogeneous_bound(&pair));
        let model = homogeneous_model_auto(&pair.iota)?;
        let fiber_type = classify.then(|| fiber_type(&pair.k, &pair.h, &pair.iota));
        (bound, BettiResult { name: Some(pair.name), betti: cohomology_betti(&model, bound), fiber_type, fibers: None })
    } else {
        let d = load_diagram(input)?;
        let bound = s.max_degree.unwrap_or_else(|| d.default_bound());
        let cyl = borel_model(&d, bound)?;
        let fibers = classify.then(|| classify_fibers(&d));
        (bound, BettiResult { name: d.name.clone(), betti: cohomology_betti(&cyl, bound), fiber_type: None, fibers })
    };
    let report = Report::new("betti", Some(bound), None, result);
    emit(
        &report,
        || {
            let r = &report.result;
            let mut out = format!("betti through {bound}: {}\n", join_list(&r.betti));
            if let Some(t) = r.fiber_type {
                out.push_str(&format!("fiber type: {t}\n"));
            }
            if let Some(f) = &r.fibers {
                out.push_str(&format!("fibers: K-/H {}, K+/H {}\n", f.minus, f.plus));
            }
            out
        },
        s.format,
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CmResult {
    name: Option<String>,
    summary: String,
    verdict: CMVerdict,
}

fn exit_for(v: &CMVerdict) -> ExitCode {
    match v.decision {
        Decision::UnknownUpTo(_) => ExitCode::from(2),
        _ => ExitCode::SUCCESS,
    }
}

fn verdict_table(r: &CmResult) -> String {
    let mut out = format!("{}\n", r.summary);
    if r.verdict.bounded {
        out.push_str(&format!("certified through degree {}\n", r.verdict.bound));
    }
    for a in &r.verdict.assumptions {
        out.push_str(&format!("assumption: {a}\n"));
    }
    out
}

fn decide_and_emit(s: &Settings, d: &GroupDiagram, command: &str) -> Result<ExitCode> {
    let verdict = cm_decide(d, s.max_degree, s.seed())?;
    let code = exit_for(&verdict);
    let bound = verdict.bound;
    let result = CmResult { name: d.name.clone(), summary: verdict.to_string(), verdict };
    let report = Report::new(command, Some(bound), Some(s.seed()), result);
    emit(&report, || verdict_table(&report.result), s.format);
    Ok(code)
}

pub fn cm(s: &Settings, input: &Path) -> Result<ExitCode> {
    decide_and_emit(s, &load_diagram(input)?, "cm")
}

pub fn model(s: &Settings, input: &Path, homogeneous: bool) -> Result<ExitCode> {
    let (bound, ring) = if homogeneous {
        let pair = load_pair(input)?;
        let bound = s.max_degree.unwrap_or_else(|| homogeneous_bound(&pair));
        (bound, ring_truncation(&homogeneous_model_auto(&pair.iota)?, bound))
    } else {
        let d = load_diagram(input)?;
        let bound = s.max_degree.unwrap_or_else(|| d.default_bound());
        (bound, ring_truncation(&borel_model(&d, bound)?, bound))
    };
    let report: Report<RingJson> = Report::new("model", Some(bound), None, ring.to_json());
    emit(
        &report,
        || {
            let r = &report.result;
            let mut out = format!("betti through {bound}: {}\n", join_list(&r.betti));
            for c in &r.classes {
                out.push_str(&format!("{} (degree {}) = {}\n", c.label, c.degree, c.representative));
            }
            for p in r.products.iter().filter(|p| p.result != "0") {
                out.push_str(&format!("{} * {} = {}\n", p.left, p.right, p.result));
            }
            out
        },
        s.format,
    );
    Ok(ExitCode::SUCCESS)
}

fn annotate(d: &mut GroupDiagram, minus: FiberType, plus: FiberType, curved: bool) {
    d.options.fiber_minus = Some(minus.to_string());
    d.options.fiber_plus = Some(plus.to_string());
    d.options.positively_curved |= curved;
}

fn write_or_classify(s: &Settings, d: &GroupDiagram, classify: bool, output: Option<&Path>, command: &str) -> Result<ExitCode> {
    let json = d.to_json_string();
    if let Some(path) = output {
        fs::write(path, format!("{json}\n")).with_context(|| format!("cannot write {}", path.display()))?;
    }
    if classify {
        return decide_and_emit(s, d, command);
    }
    if output.is_none() {
        println!("{json}");
    }
    Ok(ExitCode::SUCCESS)
}

pub fn join(s: &Settings, left: &str, right: &str, classify: bool, output: Option<&Path>) -> Result<ExitCode> {
    let (l, l_cat) = resolve_pair(left)?;
    let (r, r_cat) = resolve_pair(right)?;
    let d = match noncm_join(&l, &r)? {
        JoinOutcome::Diagram(d) => *d,
        JoinOutcome::Refused { left: lt, right: rt, reason } => {
            eprintln!("refused: {reason}");
            let mut d = join_diagram((&l.k, &l.h, &l.iota), (&r.k, &r.h, &r.iota))?
                .with_name(format!("{} * {}", l.name, r.name));
            annotate(&mut d, lt, rt, l_cat && r_cat);
            d
        }
    };
    write_or_classify(s, &d, classify, output, "join")
}

pub fn suspension(s: &Settings, fiber: &str, classify: bool, output: Option<&Path>) -> Result<ExitCode> {
    let (p, from_catalog) = resolve_pair(fiber)?;
    let t = fiber_type(&p.k, &p.h, &p.iota);
    let mut d = suspension_diagram(&p.k, &p.h, &p.iota)?.with_name(format!("Susp({})", p.name));
    annotate(&mut d, t, t, from_catalog);
    write_or_classify(s, &d, classify, output, "suspension")
}

#[derive(Serialize)]
struct FiberRow {
    name: String,
    group: String,
    subgroup: String,
    rational_type: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    computed: Option<FiberType>,
}

#[derive(Serialize)]
struct CatalogResult {
    groups: Vec<CompactGroupData>,
    fibers: Vec<FiberRow>,
}

pub fn catalog(s: &Settings, classify: bool) -> Result<ExitCode> {
    let c = Catalog::builtin();
    let fibers = c
        .fibers()
        .iter()
        .map(|f| {
            let computed = if classify {
                let p = c.pair(&f.name)?;
                Some(fiber_type(&p.k, &p.h, &p.iota))
            } else {
                None
            };
            Ok(FiberRow {
                name: f.name.clone(),
                group: f.group.clone(),
                subgroup: f.subgroup.clone(),
                rational_type: f.rational_type.clone(),
                computed,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = Report::new("catalog", None, None, CatalogResult { groups: c.groups().to_vec(), fibers });
    emit(
        &report,
        || {
            let mut out = String::from("groups:\n");
            for g in &report.result.groups {
                let degs: Vec<u32> = g.generators.iter().map(|x| x.degree).collect();
                out.push_str(&format!(
                    "  {:<12} rank {}  degrees {:<12} |W| {}\n",
                    g.name,
                    g.rank,
                    join_list(&degs),
                    g.weyl_order
                ));
            }
            out.push_str("fibers:\n");
            for f in &report.result.fibers {
                let computed = f.computed.map(|t| format!("  computed {t}")).unwrap_or_default();
                out.push_str(&format!(
                    "  {:<8} {}/{}  {}{}\n",
                    f.name, f.group, f.subgroup, f.rational_type, computed
                ));
            }
            out
        },
        s.format,
    );
    Ok(ExitCode::SUCCESS)
}
