use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spinfactor::affine::{
    affine_denominator_check, affine_spin0_character, affine_spin0_data, coprimary_check, dual_rootsystem_facts,
    verify_prop6_7_8, AffineWeight, CoprimaryCase,
};
use spinfactor::charalg::{
    bigint_json, decompose, denominator_check, irreducible_character, verify_weyl_character, weyl_dimension,
};
use spinfactor::embed::{
    embedding_by_name, partitions_in_box, restrict_character, verify_prop3, verify_prop4, verify_theorem1,
    verify_theorem2, EmbeddingSpec, FoldingKind,
};
use spinfactor::report::Report;
use spinfactor::spin::{clifford_wedge_oracle, spin0_character, spin_character, weight_multiset, DistinguishedCoweight};
use spinfactor::suite::{run_all, SuiteOptions};
use spinfactor::{FormalCharacter, RootSystem, Weight};

mod render;

#[derive(Parser)]
#[command(
    name = "spinfactor",
    version,
    about = "Exact Lie algebra characters, reduced Spin modules and tensor factorization checks"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// Builtin type: A1..A9, B1..B9, C2..C9, D3..D9, E6, F4, G2
    #[arg(long = "type", global = true, value_name = "TYPE")]
    ty: Option<String>,
    /// Cartan matrix as JSON, a_ij = alpha_j(alpha_i^vee)
    #[arg(long, global = true, value_name = "JSON")]
    cartan: Option<String>,
    /// Dynkin labels a,b,...; repeat for several modules
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "LABELS")]
    weight: Vec<String>,
    /// Folding such as A3_to_C2, D4_to_G2, E6_to_F4
    #[arg(long, global = true)]
    folding: Option<String>,
    /// Embedding principal_sl2:<n>
    #[arg(long, global = true)]
    embedding: Option<String>,
    /// Truncation depth in the delta grading
    #[arg(long = "K", global = true, value_name = "K")]
    k: Option<usize>,
    /// Emit JSON
    #[arg(long, global = true)]
    json: bool,
    /// Lift the desk-scale gates (E6, affine rank > 2)
    #[arg(long, global = true)]
    allow_large: bool,
    /// Largest rank for the character sweep in `verify all`
    #[arg(long, global = true)]
    max_rank: Option<usize>,
    /// Print only the dimension
    #[arg(long, global = true)]
    dim: bool,
    /// Number of variables for prop3
    #[arg(long, global = true)]
    n: Option<usize>,
    /// adjoint, theta_s or two_theta_s
    #[arg(long, global = true)]
    case: Option<String>,
    /// Level of the affine weight given by --weight (prop678)
    #[arg(long, global = true)]
    level: Option<i64>,
    /// Distinguished coweight in the fundamental coweight basis
    #[arg(long, global = true, allow_hyphen_values = true)]
    coweight: Option<String>,
}

#[derive(Subcommand)]
enum Verb {
    /// Root data: Cartan matrix, positive roots, rho, theta
    Roots,
    /// Character or dimension of V(weight)
    Char,
    /// Decompose the tensor product of the given irreducibles
    Decompose,
    /// Reduced Spin character of the direct sum of the given irreducibles
    Spin0,
    /// Restrict V(weight) along --folding or --embedding
    Restrict,
    /// Check an identity; exit 1 when it fails
    Verify {
        #[arg(value_enum)]
        subject: Subject,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Subject {
    Denominator,
    Weyl,
    Theorem1,
    Theorem2,
    Prop3,
    Prop4,
    AffineDenominator,
    Prop678,
    Coprimary,
    Prop10,
    Facts,
    Clifford,
    All,
}

/// Bad input; reported with exit code 2.
struct InputError(String);

impl From<spinfactor::Error> for InputError {
    fn from(e: spinfactor::Error) -> Self {
        Self(e.to_string())
    }
}

type Res<T> = std::result::Result<T, InputError>;

struct Output {
    json: Value,
    text: String,
    /// `Some` for verification verbs.
    pass: Option<bool>,
}

impl Output {
    fn plain(json: Value, text: String) -> Self {
        Self { json, text, pass: None }
    }

    fn report(r: Report) -> Self {
        Self {
            text: render::report(&r),
            pass: Some(r.pass),
            json: r.to_json(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(InputError(msg)) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            if cli.opts.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(exit_code(out.pass))
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// 0 on success, 1 when a verification fails.
fn exit_code(pass: Option<bool>) -> u8 {
    match pass {
        Some(false) => 1,
        _ => 0,
    }
}

fn configure_threads() -> Res<()> {
    let Ok(v) = std::env::var("SPINFACTOR_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| InputError(format!("SPINFACTOR_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| InputError(e.to_string()))
}

fn run(cli: &Cli) -> Res<Output> {
    let o = &cli.opts;
    match &cli.verb {
        Verb::Roots => roots(o),
        Verb::Char => char_cmd(o),
        Verb::Decompose => decompose_cmd(o),
        Verb::Spin0 => spin0_cmd(o),
        Verb::Restrict => restrict_cmd(o),
        Verb::Verify { subject } => verify(*subject, o),
    }
}

fn root_system(o: &Opts) -> Res<Arc<RootSystem>> {
    let rs = match (&o.ty, &o.cartan) {
        (Some(t), None) => RootSystem::builtin(t)?,
        (None, Some(c)) => RootSystem::from_spec(c)?,
        (Some(_), Some(_)) => return Err(InputError("--type and --cartan are exclusive".into())),
        (None, None) => return Err(InputError("missing --type or --cartan".into())),
    };
    Ok(Arc::new(rs))
}

fn weights(o: &Opts, rs: &RootSystem) -> Res<Vec<Weight>> {
    o.weight
        .iter()
        .map(|s| {
            let w = Weight::parse(s).map_err(|e| InputError(format!("--weight: {e}")))?;
            w.check_rank(rs.rank()).map_err(|e| InputError(format!("--weight: {e}")))?;
            Ok(w)
        })
        .collect()
}

fn one_weight(o: &Opts, rs: &RootSystem) -> Res<Weight> {
    let mut ws = weights(o, rs)?;
    match ws.len() {
        1 => Ok(ws.remove(0)),
        0 => Err(InputError("missing --weight".into())),
        _ => Err(InputError("expected a single --weight".into())),
    }
}

fn coweight(o: &Opts, rs: &RootSystem) -> Res<DistinguishedCoweight> {
    match &o.coweight {
        None => Ok(DistinguishedCoweight::rho_vee(rs)),
        Some(s) => {
            let w = Weight::parse(s).map_err(|e| InputError(format!("--coweight: {e}")))?;
            w.check_rank(rs.rank()).map_err(|e| InputError(format!("--coweight: {e}")))?;
            Ok(DistinguishedCoweight::new(w.coords().iter().map(|&x| x as i64).collect())?)
        }
    }
}

fn direct_sum(rs: &Arc<RootSystem>, ws: &[Weight]) -> Res<FormalCharacter> {
    let mut chi = FormalCharacter::zero(rs);
    for w in ws {
        chi = chi.add(&irreducible_character(rs, w)?)?;
    }
    Ok(chi)
}

fn embedding(o: &Opts) -> Res<(EmbeddingSpec, Vec<FormalCharacter>)> {
    let name = match (&o.folding, &o.embedding) {
        (Some(f), None) => {
            let kind: FoldingKind = f.parse()?;
            if kind.source_name() == "E6" && !o.allow_large {
                return Err(InputError(format!("{kind} requires --allow-large")));
            }
            kind.to_string()
        }
        (None, Some(e)) => e.clone(),
        (Some(_), Some(_)) => return Err(InputError("--folding and --embedding are exclusive".into())),
        (None, None) => return Err(InputError("missing --folding or --embedding".into())),
    };
    Ok(embedding_by_name(&name)?)
}

fn roots(o: &Opts) -> Res<Output> {
    let rs = root_system(o)?;
    let roots: Vec<Value> = rs
        .positive_roots()
        .iter()
        .zip(rs.positive_root_coords())
        .enumerate()
        .map(|(i, (w, c))| json!({ "labels": w, "alpha": c, "short": rs.is_short_root(i) }))
        .collect();
    let j = json!({
        "rs": rs.name(),
        "rank": rs.rank(),
        "cartan": rs.cartan().entries(),
        "positive_roots": roots,
        "rho": rs.rho(),
        "rho_s": rs.rho_s(),
        "theta": rs.theta(),
        "theta_s": rs.theta_s(),
        "coxeter_number": rs.coxeter_number(),
        "dual_coxeter_number": rs.dual_coxeter_number(),
        "weyl_group_order": rs.weyl_group_order(),
    });
    Ok(Output::plain(j, render::roots(&rs)))
}

fn char_cmd(o: &Opts) -> Res<Output> {
    let rs = root_system(o)?;
    let w = one_weight(o, &rs)?;
    if o.dim {
        let d = weyl_dimension(&rs, &w)?;
        return Ok(Output::plain(
            json!({ "rs": rs.name(), "weight": w, "dim": bigint_json(&d) }),
            format!("{d}\n"),
        ));
    }
    let chi = irreducible_character(&rs, &w)?;
    Ok(Output::plain(chi.to_json(), render::character(&chi)))
}

fn decompose_cmd(o: &Opts) -> Res<Output> {
    let rs = root_system(o)?;
    let ws = weights(o, &rs)?;
    if ws.is_empty() {
        return Err(InputError("missing --weight".into()));
    }
    let mut chi = FormalCharacter::one(&rs);
    for w in &ws {
        chi = chi.multiply(&irreducible_character(&rs, w)?)?;
    }
    let parts = decompose(&rs, &chi)?;
    Ok(Output::plain(
        json!({ "rs": rs.name(), "factors": ws, "constituents": render::parts_json(&parts) }),
        render::parts(&parts),
    ))
}

fn spin0_cmd(o: &Opts) -> Res<Output> {
    let rs = root_system(o)?;
    let ws = weights(o, &rs)?;
    if ws.is_empty() {
        return Err(InputError("missing --weight".into()));
    }
    let chi = direct_sum(&rs, &ws)?;
    if let Some(k) = o.k {
        if o.coweight.is_some() {
            return Err(InputError("--coweight is fixed to rho^vee for the affine Spin".into()));
        }
        let (level, nu) = affine_spin0_data(&rs, &chi)?;
        let a = affine_spin0_character(&rs, &chi, k)?;
        let mut j = a.to_json();
        j["top"] = json!(nu);
        let text = format!("level {level}\ntop {nu}\n{}", render::affine(&a));
        return Ok(Output::plain(j, text));
    }
    let d = coweight(o, &rs)?;
    let s = spin0_character(&rs, &chi, &d)?;
    let parts = decompose(&rs, &s)?;
    let text = format!("{}constituents\n{}", render::character(&s), render::parts(&parts));
    Ok(Output::plain(
        json!({ "character": s.to_json(), "constituents": render::parts_json(&parts) }),
        text,
    ))
}

fn restrict_cmd(o: &Opts) -> Res<Output> {
    let (spec, _) = embedding(o)?;
    let w = one_weight(o, &spec.source)?;
    let chi = restrict_character(&spec, &irreducible_character(&spec.source, &w)?)?;
    let parts = decompose(&spec.target, &chi)?;
    Ok(Output::plain(
        json!({
            "embedding": spec.to_json(),
            "weight": w,
            "character": chi.to_json(),
            "constituents": render::parts_json(&parts),
        }),
        render::parts(&parts),
    ))
}

/// Runs each named report and folds them into one.
fn combined(identity: String, reports: Vec<(String, Report)>) -> Report {
    if reports.len() == 1 {
        return reports.into_iter().next().unwrap().1;
    }
    reports
        .into_iter()
        .fold(Report::verdict(identity, true), |acc, (k, r)| acc.and(&k, r))
}

fn all_dominant_up_to(rank: usize, max: i32) -> Vec<Weight> {
    let mut out: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}

fn verify(subject: Subject, o: &Opts) -> Res<Output> {
    let report = match subject {
        Subject::Denominator => {
            let rs = root_system(o)?;
            let mut r = Report::verdict(format!("denominator:{}", rs.name()), denominator_check(&rs)?);
            if let Some(k) = o.k {
                let a = affine_denominator_check(&rs, k, o.allow_large)?;
                r = r.and("affine", Report::verdict(format!("affine_denominator:K={k}"), a));
            }
            r
        }
        Subject::AffineDenominator => {
            let rs = root_system(o)?;
            let k = o.k.unwrap_or(3);
            Report::verdict(
                format!("affine_denominator:{}:K={k}", rs.name()),
                affine_denominator_check(&rs, k, o.allow_large)?,
            )
        }
        Subject::Weyl => {
            let rs = root_system(o)?;
            let mut ws = weights(o, &rs)?;
            if ws.is_empty() {
                ws = all_dominant_up_to(rs.rank(), 2);
            }
            let mut reports = Vec::new();
            for w in ws {
                let chi = irreducible_character(&rs, &w)?;
                let ok = verify_weyl_character(&rs, &w, &chi)?;
                let dim = weyl_dimension(&rs, &w)?;
                let r = Report::verdict(format!("weyl:{}:{w}", rs.name()), ok && chi.dimension() == dim)
                    .with_detail("dim", bigint_json(&dim));
                reports.push((w.to_string(), r));
            }
            combined(format!("weyl:{}", rs.name()), reports)
        }
        Subject::Theorem1 => {
            let (spec, parts) = embedding(o)?;
            verify_theorem1(&spec, &parts)?
        }
        Subject::Theorem2 => {
            let (spec, parts) = embedding(o)?;
            let mut ws = weights(o, &spec.source)?;
            if ws.is_empty() {
                let n = spec.source.rank();
                ws = (0..n).map(|i| Weight::fundamental(n, i)).collect();
            }
            let reports = ws
                .iter()
                .map(|w| Ok((w.to_string(), verify_theorem2(&spec, &parts, w)?)))
                .collect::<Res<Vec<_>>>()?;
            combined(format!("theorem2:{}", spec.name), reports)
        }
        Subject::Prop3 => {
            let ns: Vec<usize> = match o.n {
                Some(n) => vec![n],
                None => vec![2, 3, 4],
            };
            let mut reports = Vec::new();
            for n in ns {
                let mus: Vec<Vec<i64>> = if o.weight.is_empty() {
                    partitions_in_box(n, 2)
                } else {
                    o.weight
                        .iter()
                        .map(|s| {
                            Weight::parse(s)
                                .map(|w| w.coords().iter().map(|&x| x as i64).collect())
                                .map_err(InputError::from)
                        })
                        .collect::<Res<_>>()?
                };
                for mu in mus {
                    let r = verify_prop3(n, &mu)?;
                    reports.push((r.identity.clone(), r));
                }
            }
            combined("prop3".into(), reports)
        }
        Subject::Prop4 => {
            let f = o
                .folding
                .as_ref()
                .ok_or_else(|| InputError("prop4 needs --folding".into()))?;
            let kind: FoldingKind = f.parse()?;
            if kind.source_name() == "E6" && !o.allow_large {
                return Err(InputError(format!("{kind} requires --allow-large")));
            }
            verify_prop4(kind)?
        }
        Subject::Prop678 => {
            let rs = root_system(o)?;
            let k = o.k.unwrap_or(2);
            let mu = match (o.weight.is_empty(), o.level) {
                (true, None) => None,
                (false, Some(level)) => Some(AffineWeight::new(one_weight(o, &rs)?, level, 0)),
                _ => return Err(InputError("prop678 takes --weight and --level together".into())),
            };
            verify_prop6_7_8(&rs, k, mu.as_ref(), o.allow_large)?
        }
        Subject::Coprimary | Subject::Prop10 => {
            let rs = root_system(o)?;
            let k = o.k.unwrap_or(1);
            let cases: Vec<CoprimaryCase> = match &o.case {
                Some(c) => vec![c.parse()?],
                None => {
                    let mut v = vec![CoprimaryCase::Adjoint];
                    if !rs.is_simply_laced() || rs.rank() == 1 {
                        v.push(CoprimaryCase::ThetaS);
                    }
                    if rs.rank() == 1 || rs.name().starts_with('B') {
                        v.push(CoprimaryCase::TwoThetaS);
                    }
                    v
                }
            };
            let reports = cases
                .iter()
                .map(|&c| Ok((c.to_string(), coprimary_check(&rs, c, k, o.allow_large)?)))
                .collect::<Res<Vec<_>>>()?;
            combined(format!("coprimary:{}", rs.name()), reports)
        }
        Subject::Facts => {
            let rs = root_system(o)?;
            dual_rootsystem_facts(&rs, o.k.unwrap_or(4))?
        }
        Subject::Clifford => {
            let rs = root_system(o)?;
            let mut ws = weights(o, &rs)?;
            if ws.is_empty() {
                ws.push(rs.theta().clone());
            }
            let chi = direct_sum(&rs, &ws)?;
            let d = coweight(o, &rs)?;
            let oracle = clifford_wedge_oracle(&rs, &weight_multiset(&chi)?, &d)?;
            let spin = spin_character(&rs, &chi, &d)?;
            let mut r = Report::compare(format!("clifford:{}", rs.name()), &oracle.character, &spin)
                .with_detail("dim", json!(oracle.dim))
                .with_detail("relations", json!(oracle.relations));
            if oracle.relations == Some(false) {
                r.pass = false;
            }
            r
        }
        Subject::All => {
            let opts = SuiteOptions {
                max_rank: o.max_rank.unwrap_or(3),
                k: o.k.unwrap_or(2),
            };
            let results = run_all(&opts);
            let pass = results.iter().all(|r| r.pass);
            let j = json!({
                "pass": pass,
                "criteria": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            });
            return Ok(Output {
                text: render::suite(&results),
                json: j,
                pass: Some(pass),
            });
        }
    };
    Ok(Output::report(report))
}
