//! Command-line front end. `run` parses arguments, merges an optional
//! config file, executes one command and returns the process exit code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::colored::{dbar_decomposition, ColorSet};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::keysets::{apery_single, compute_key_sets, set_name};
use crate::linalg::Characteristic;
use crate::poincare::{corollary_identity, extended_choice, verify_rational_form, Method};
use crate::resolution::{analyze, ResolutionBundle};
use crate::semigroup::{
    realize_complex, validate, ChoiceSet, PresentationFile, SemigroupPresentation, ValidatedSemigroup,
};
use crate::simplicial::{Complex, ComplexFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Validate,
    Poincare,
    Keysets,
    Colored,
    Betti,
    Depth,
    Structure,
    Realize,
    Verify,
}

impl Command {
    fn file_name(self) -> &'static str {
        match self {
            Command::Validate => "validate.json",
            Command::Poincare => "poincare.json",
            Command::Keysets => "keysets.json",
            Command::Colored => "colored.json",
            Command::Betti => "betti.json",
            Command::Depth => "depth.json",
            Command::Structure => "structure.json",
            Command::Realize => "realize.json",
            Command::Verify => "verify.json",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// `E` as generator indices or as explicit exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetSpec {
    Indices(Vec<usize>),
    Exponents(Vec<Vec<i64>>),
}

impl SetSpec {
    /// `0,2,3` selects generators; a JSON array of arrays gives exponents.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('[') {
            return serde_json::from_str(text).map_err(|e| Error::input(format!("bad set {text}: {e}")));
        }
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::input(format!("bad index `{t}`")))
            })
            .collect::<Result<_>>()
            .map(SetSpec::Indices)
    }
}

fn parse_exponents(text: &str) -> Result<Vec<Vec<i64>>> {
    serde_json::from_str(text).map_err(|e| Error::input(format!("bad exponent list {text}: {e}")))
}

#[derive(Debug, Parser)]
#[command(
    name = "poincare",
    version,
    about = "Exact Poincaré series and syzygies of affine semigroups"
)]
struct Args {
    /// Command to run; may instead come from the config file.
    command: Option<Command>,
    /// Presentation file (for `realize`: a complex file).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Choice set E: generator indices `0,1` or exponents `[[3],[4]]`.
    #[arg(long)]
    set: Option<String>,
    /// Color set A as exponents, e.g. `[[6]]`.
    #[arg(long)]
    colors: Option<String>,
    #[arg(long)]
    bound: Option<i64>,
    /// Field characteristics, e.g. `0,2`.
    #[arg(long = "char", value_delimiter = ',')]
    characteristics: Option<Vec<u32>>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Maximum number of enumerated elements.
    #[arg(long)]
    budget: Option<usize>,
    /// Directory for report files.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON or TOML file with the same keys; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub command: Option<Command>,
    pub input: Option<PathBuf>,
    pub set: Option<SetSpec>,
    pub colors: Option<Vec<Vec<i64>>>,
    pub bound: Option<i64>,
    pub characteristics: Option<Vec<u32>>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
    pub budget: Option<usize>,
    pub out: Option<PathBuf>,
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        if path.extension().is_some_and(|e| e == "toml") {
            toml::from_str(&text).map_err(|e| Error::input(format!("{}: {e}", path.display())))
        } else {
            serde_json::from_str(&text).map_err(|e| Error::input(format!("{}: {e}", path.display())))
        }
    }

    fn merge(args: Args) -> Result<Self> {
        let mut c = match &args.config {
            Some(p) => Self::load(p)?,
            None => Self::default(),
        };
        if args.command.is_some() {
            c.command = args.command;
        }
        if args.input.is_some() {
            c.input = args.input;
        }
        if let Some(s) = &args.set {
            c.set = Some(SetSpec::parse(s)?);
        }
        if let Some(a) = &args.colors {
            c.colors = Some(parse_exponents(a)?);
        }
        c.bound = args.bound.or(c.bound);
        c.characteristics = args.characteristics.or(c.characteristics);
        c.format = args.format.or(c.format);
        c.jobs = args.jobs.or(c.jobs);
        c.budget = args.budget.or(c.budget);
        if args.out.is_some() {
            c.out = args.out;
        }
        Ok(c)
    }
}

/// Parses `args` (including the program name), runs the job and returns the
/// exit code: 0 success, 1 configuration, 2 hypothesis, 3 consistency,
/// 4 budget.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let outcome = JobConfig::merge(args).and_then(|c| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(c.jobs.unwrap_or(0))
            .build()
            .map_err(|e| Error::input(e.to_string()))?;
        pool.install(|| execute(&c))
    });
    match outcome {
        Ok(out) => match emit(&out, stdout) {
            Ok(()) => out.code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if let Error::Positivity {
                certificate: Some(c), ..
            } = &e
            {
                let _ = writeln!(stderr, "certificate: {c:?}");
            }
            e.exit_code()
        }
    }
}

struct Output {
    command: Command,
    format: Format,
    out: Option<PathBuf>,
    report: Value,
    text: String,
    /// Extra files for `--out`, by name.
    files: Vec<(String, String)>,
    code: i32,
}

fn emit(o: &Output, stdout: &mut dyn Write) -> Result<()> {
    let json = serde_json::to_string_pretty(&o.report)? + "\n";
    match o.format {
        Format::Json => stdout.write_all(json.as_bytes())?,
        Format::Text => stdout.write_all(o.text.as_bytes())?,
    }
    if let Some(dir) = &o.out {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(o.command.file_name()), &json)?;
        for (name, body) in &o.files {
            fs::write(dir.join(name), body)?;
        }
    }
    Ok(())
}

fn exps(v: &[GroupElement]) -> Vec<Vec<i64>> {
    v.iter().map(|g| g.flat().to_vec()).collect()
}

struct Job {
    s: ValidatedSemigroup,
    e: ChoiceSet,
    bound: i64,
    chars: Vec<Characteristic>,
}

fn elements(s: &ValidatedSemigroup, v: &[Vec<i64>]) -> Result<Vec<GroupElement>> {
    v.iter().map(|x| s.group().element(x)).collect()
}

fn load_semigroup(c: &JobConfig) -> Result<ValidatedSemigroup> {
    let path = c.input.as_ref().ok_or_else(|| Error::input("--input is required"))?;
    let file: PresentationFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    let mut s = validate(&SemigroupPresentation::from_file(&file)?)?;
    if let Some(b) = c.budget {
        s.set_budget(b);
    }
    Ok(s)
}

fn job(c: &JobConfig) -> Result<Job> {
    let s = load_semigroup(c)?;
    let e = match &c.set {
        None => ChoiceSet::generators(&s)?,
        Some(SetSpec::Indices(ix)) => ChoiceSet::from_indices(&s, ix)?,
        Some(SetSpec::Exponents(v)) => ChoiceSet::new(&s, elements(&s, v)?)?,
    };
    let bound = match c.bound {
        Some(b) if b < 0 => return Err(Error::input("the bound must be nonnegative")),
        Some(b) => b,
        None => 5 * s.max_generator_degree() * e.len() as i64,
    };
    let chars = c
        .characteristics
        .clone()
        .unwrap_or_else(|| vec![0, 2])
        .into_iter()
        .map(Characteristic::new)
        .collect::<Result<_>>()?;
    Ok(Job { s, e, bound, chars })
}

/// `A` from the config, or the first nonzero member outside `E`.
fn colors(j: &Job, c: &JobConfig) -> Result<Option<ColorSet>> {
    let elems = match &c.colors {
        Some(v) => elements(&j.s, v)?,
        None => match j
            .s
            .enumerate_up_to(j.bound)?
            .into_iter()
            .find(|m| !m.is_zero() && !j.e.elements().contains(m))
        {
            Some(a) => vec![a],
            None => return Ok(None),
        },
    };
    ColorSet::new(&j.s, &j.e, elems).map(Some)
}

fn execute(c: &JobConfig) -> Result<Output> {
    let command = c.command.ok_or_else(|| Error::input("no command given"))?;
    let (report, text, files, code) = match command {
        Command::Validate => cmd_validate(c)?,
        Command::Realize => cmd_realize(c)?,
        Command::Poincare => cmd_poincare(&job(c)?)?,
        Command::Keysets => cmd_keysets(&job(c)?)?,
        Command::Colored => {
            let j = job(c)?;
            let a = colors(&j, c)?.ok_or_else(|| Error::input("no color outside E within the bound"))?;
            cmd_colored(&j, &a)?
        }
        Command::Betti | Command::Depth | Command::Structure => cmd_resolution(&job(c)?, command)?,
        Command::Verify => {
            let j = job(c)?;
            let a = colors(&j, c)?;
            cmd_verify(&j, a.as_ref())?
        }
    };
    Ok(Output {
        command,
        format: c.format.unwrap_or_default(),
        out: c.out.clone(),
        report,
        text,
        files,
        code,
    })
}

type Produced = (Value, String, Vec<(String, String)>, i32);

fn cmd_validate(c: &JobConfig) -> Result<Produced> {
    let s = load_semigroup(c)?;
    let report = json!({
        "free_rank": s.group().free_rank(),
        "torsion_orders": s.group().torsion_orders(),
        "generators": exps(s.generators()),
        "grading": s.grading().weights(),
        "generator_degrees": s.generator_degrees(),
        "dimension": s.dimension(),
        "positive": true,
    });
    let text = format!(
        "positive: yes\ngrading: {:?}\ngenerator degrees: {:?}\ndimension: {}\n",
        s.grading().weights(),
        s.generator_degrees(),
        s.dimension()
    );
    Ok((report, text, Vec::new(), 0))
}

fn cmd_realize(c: &JobConfig) -> Result<Produced> {
    let path = c.input.as_ref().ok_or_else(|| Error::input("--input is required"))?;
    let file: ComplexFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    let t = Complex::from_file(&file)?;
    let (s, m, e) = realize_complex(&t)?;
    let presentation = s.presentation().to_file();
    let report = json!({
        "presentation": presentation,
        "m": m.flat(),
        "choice": exps(e.elements()),
    });
    let pres_json = serde_json::to_string_pretty(&presentation)? + "\n";
    let text = format!(
        "{} generators in Z^{}\nm = {}\n",
        s.generators().len(),
        s.group().free_rank(),
        m
    );
    Ok((report, text, vec![("presentation.json".into(), pres_json)], 0))
}

fn cmd_poincare(j: &Job) -> Result<Produced> {
    let e2 = extended_choice(&j.s, &j.e)?;
    let r = verify_rational_form(&j.s, &j.e, Some(&e2), j.bound)?;
    let g = j.s.grading();
    let mut text = format!("bound: {}\nnumerator: {}\n", j.bound, r.numerator().display(g));
    text += &format!(
        "denominator: {}\n",
        r.denominator
            .denominator
            .iter()
            .map(|e| format!("(1 - t^{e})"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    text += &format!("methods agree: {}\nsaturated: {}\n", r.methods_agree, r.saturated());
    Ok((r.to_json(g), text, Vec::new(), 0))
}

fn cmd_keysets(j: &Job) -> Result<Produced> {
    let k = compute_key_sets(&j.s, &j.e, j.bound)?;
    let dj: serde_json::Map<String, Value> =
        k.dj.iter()
            .map(|(mask, v)| (format!("D^{}", set_name(*mask)), json!(exps(v))))
            .collect();
    let mut report = json!({
        "bound": j.bound,
        "choice": exps(j.e.elements()),
        "q": exps(&k.q),
        "d": dj,
        "saturation": k.saturation,
    });
    let mut text = format!("bound: {}\nQ: {}\n", j.bound, list(&k.q));
    for (mask, v) in &k.dj {
        text += &format!("D^{}: {}\n", set_name(*mask), list(v));
    }
    if j.bound >= j.s.degree(j.e.sum()) {
        let a = apery_single(&j.s, &j.e, j.bound)?;
        let ej: serde_json::Map<String, Value> =
            a.ej.iter()
                .map(|(mask, v)| (format!("E^{}", set_name(*mask)), json!(exps(v))))
                .collect();
        report["apery_single"] = json!({"q_e": exps(&a.q_e), "e": ej, "saturation": a.saturation});
        text += &format!("Q_E: {}\n", list(&a.q_e));
    }
    text += &format!("stable: {}\n", k.saturation.stable);
    Ok((report, text, Vec::new(), 0))
}

fn list(v: &[GroupElement]) -> String {
    let items: Vec<String> = v.iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn cmd_colored(j: &Job, a: &ColorSet) -> Result<Produced> {
    let r = dbar_decomposition(&j.s, &j.e, a, j.bound)?;
    let text = format!(
        "bound: {}\ncolors: {}\ngraph series checked: {}\nchi(T'_m) = chi(Q,m) + chi(Dbar,m): {}\nP = P_G(Q) + P_G(Dbar): {}\nP_G(Dbar) = sum over D^J: {}\n",
        j.bound,
        list(a.elements()),
        r.graph_series_checked.join(", "),
        r.euler_identity_holds,
        r.series_identity_holds,
        r.dbar_sum_identity_holds
    );
    Ok((serde_json::to_value(&r)?, text, Vec::new(), 0))
}

fn bundle_json(j: &Job, b: &ResolutionBundle, command: Command) -> Value {
    let g = j.s.grading();
    match command {
        Command::Betti => {
            let mut v = b.table.to_json(&j.s);
            v["syzygy_series"] = json!(b.syzygy.to_json(g));
            v
        }
        Command::Depth => json!(b.depth),
        _ => json!(b.structure),
    }
}

fn bundle_text(b: &ResolutionBundle, command: Command) -> String {
    let ch = b.table.characteristic.value();
    match command {
        Command::Betti => format!(
            "char {ch}: totals {:?}, pd {:?}, stable {}\n",
            b.table.totals(),
            b.table.pd(),
            b.table.stable
        ),
        Command::Depth => format!(
            "char {ch}: r = {}, r' = {}, d = {}, cohen-macaulay {}, conclusive {}\n",
            b.depth.r, b.depth.r_prime, b.depth.d, b.depth.cohen_macaulay, b.depth.conclusive
        ),
        _ => format!(
            "char {ch}: gorenstein {}, complete intersection {}, functional equation {}\n",
            b.structure.gorenstein, b.structure.ci, b.structure.functional_equation_holds
        ),
    }
}

fn cmd_resolution(j: &Job, command: Command) -> Result<Produced> {
    let bundles = analyze(&j.s, &j.e, &j.chars, j.bound)?;
    let results: Vec<Value> = bundles.iter().map(|b| bundle_json(j, b, command)).collect();
    let text: String = bundles.iter().map(|b| bundle_text(b, command)).collect();
    let files = if command == Command::Betti {
        bundles
            .iter()
            .map(|b| {
                (
                    format!("betti_{}.csv", b.table.characteristic.value()),
                    b.table.to_csv(&j.s),
                )
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok((json!({"bound": j.bound, "results": results}), text, files, 0))
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn record<T>(
    checks: &mut Vec<Check>,
    name: &str,
    r: Result<T>,
    detail: impl FnOnce(&T) -> String,
) -> Result<Option<T>> {
    match r {
        Ok(v) => {
            checks.push(Check {
                name: name.into(),
                passed: true,
                detail: detail(&v),
            });
            Ok(Some(v))
        }
        Err(e @ Error::Consistency { .. }) => {
            checks.push(Check {
                name: name.into(),
                passed: false,
                detail: e.to_string(),
            });
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn flag(checks: &mut Vec<Check>, name: String, passed: bool, detail: String) {
    checks.push(Check { name, passed, detail });
}

fn cmd_verify(j: &Job, a: Option<&ColorSet>) -> Result<Produced> {
    let g = j.s.grading();
    let mut checks = Vec::new();
    let e2 = extended_choice(&j.s, &j.e)?;
    let report = record(
        &mut checks,
        "rational form",
        verify_rational_form(&j.s, &j.e, Some(&e2), j.bound),
        |r| format!("numerator {}", r.numerator().display(g)),
    )?;
    record(
        &mut checks,
        "single-element identity",
        corollary_identity(&j.s, &j.e, j.bound),
        |r| format!("#Q_E = {}", r.q_e_size),
    )?;
    if let Some(a) = a {
        record(
            &mut checks,
            "colored graphs",
            dbar_decomposition(&j.s, &j.e, a, j.bound),
            |r| format!("colors {:?}, base sets {}", r.colors, r.graph_series_checked.join(" ")),
        )?;
    }
    let mut resolution = Vec::new();
    if j.e.generates_semigroup() {
        let bundles = record(
            &mut checks,
            "depth characterizations",
            analyze(&j.s, &j.e, &j.chars, j.bound),
            |b| {
                b.iter()
                    .map(|b| format!("char {}: r = {}", b.table.characteristic.value(), b.depth.r))
                    .collect::<Vec<_>>()
                    .join(", ")
            },
        )?;
        for b in bundles.iter().flatten() {
            let ch = b.table.characteristic.value();
            let st = &b.structure;
            flag(
                &mut checks,
                format!("betti numerator identity (char {ch})"),
                st.numerator_betti_identity,
                String::new(),
            );
            let ph = b.syzygy.eval_minus_one() == b.table.alternating_sum();
            flag(
                &mut checks,
                format!("syzygy series at v = -1 (char {ch})"),
                ph,
                String::new(),
            );
            if st.gorenstein {
                let ok = st.symmetry_holds == Some(true) && st.functional_equation_holds;
                flag(
                    &mut checks,
                    format!("gorenstein symmetry (char {ch})"),
                    ok,
                    format!("g = {:?}", st.g),
                );
            }
            if st.ci {
                let ok = st.ci_product_holds == Some(true) && st.gorenstein;
                flag(
                    &mut checks,
                    format!("complete intersection product (char {ch})"),
                    ok,
                    format!("C = {:?}", st.ci_degrees),
                );
                if let (Some(c), Some(brute)) = (st.conductor, st.conductor_brute_force) {
                    flag(
                        &mut checks,
                        format!("conductor (char {ch})"),
                        c == brute,
                        format!("{c} vs {brute}"),
                    );
                }
            }
            resolution.push(json!({
                "characteristic": ch,
                "totals": b.table.totals(),
                "depth": b.depth.r,
                "r_prime": b.depth.r_prime,
                "gorenstein": st.gorenstein,
                "complete_intersection": st.ci,
            }));
        }
    } else {
        flag(
            &mut checks,
            "resolution".into(),
            true,
            "skipped: E does not generate S".into(),
        );
    }
    let passed = checks.iter().all(|c| c.passed);
    let numerators: Option<serde_json::Map<String, Value>> = report.as_ref().map(|r| {
        r.numerators
            .iter()
            .map(|(m, p): (&Method, _)| (m.name().to_string(), json!(p.to_json(g))))
            .collect()
    });
    let out = json!({
        "bound": j.bound,
        "choice": exps(j.e.elements()),
        "numerators": numerators,
        "methods_agree": report.as_ref().map(|r| r.methods_agree),
        "saturated": report.as_ref().map(|r| r.saturated()),
        "resolution": resolution,
        "checks": checks,
        "passed": passed,
    });
    let mut text = String::new();
    for c in &checks {
        text += &format!(
            "{} {}{}\n",
            if c.passed { "ok  " } else { "FAIL" },
            c.name,
            if c.detail.is_empty() {
                String::new()
            } else {
                format!(": {}", c.detail)
            }
        );
    }
    Ok((out, text, Vec::new(), if passed { 0 } else { 3 }))
}
