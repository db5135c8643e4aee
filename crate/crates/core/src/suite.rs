//! The acceptance checks as runnable criteria.

use std::sync::Arc;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::affine::{
    affine_denominator_check, affine_irreducible_character, affine_spin0_character, coprimary_check,
    coprimary_finite, dual_rootsystem_facts, verify_prop6_7_8, verify_prop8, AffineWeight, CoprimaryCase,
};
use crate::charalg::{
    adjoint_character, decompose, denominator_check, irreducible_character, verify_weyl_character,
    weyl_dimension, FormalCharacter,
};
use crate::embed::{
    folding_embedding, partitions_in_box, verify_prop3, verify_prop4, verify_theorem1, verify_theorem2,
    FoldingKind,
};
use crate::error::Result;
use crate::rootsys::RootSystem;
use crate::spin::{clifford_wedge_oracle, spin_character, weight_multiset, DistinguishedCoweight};
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Largest rank swept by the character-engine criterion.
    pub max_rank: usize,
    /// Truncation depth for the affine factorization criterion.
    pub k: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { max_rank: 3, k: 2 }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    /// Number of individual cases checked.
    pub cases: usize,
    /// Failing cases or errors, in order.
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionResult {
    /// Deterministic summary without timings.
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "pass": self.pass,
            "cases": self.cases,
            "failures": self.failures,
        })
    }
}

pub const CRITERIA: [(u8, &str, u64); 12] = [
    (1, "denominator identities", 70),
    (2, "character engine", 60),
    (3, "spin0 of the adjoint", 30),
    (4, "clifford oracle", 60),
    (5, "rho factorization on foldings", 180),
    (6, "twice-mu factorization on fundamental weights", 180),
    (7, "principal sl2 factorization", 60),
    (8, "single constituent table", 120),
    (9, "affine spin0 factorizations", 180),
    (10, "affine coprimarity", 180),
    (11, "dual root system facts", 30),
    (12, "determinism", 60),
];

/// Simple types of rank at most `max_rank` available as builtins.
pub fn simple_types(max_rank: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(format!("A{n}"));
    }
    for n in 2..=max_rank {
        out.push(format!("B{n}"));
        out.push(format!("C{n}"));
    }
    for n in 4..=max_rank.min(9) {
        out.push(format!("D{n}"));
    }
    if max_rank >= 2 {
        out.push("G2".into());
    }
    if max_rank >= 4 {
        out.push("F4".into());
    }
    if max_rank >= 6 {
        out.push("E6".into());
    }
    out
}

fn rs(name: &str) -> Result<Arc<RootSystem>> {
    Ok(Arc::new(RootSystem::builtin(name)?))
}

/// Collects named boolean cases; errors count as failures.
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, outcome: Result<bool>) {
        self.cases += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(name.into()),
            Err(e) => self.failures.push(format!("{}: {e}", name.into())),
        }
    }
}

fn dominant_box(rank: usize, max: i32) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i32>| {
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

fn criterion1(t: &mut Tally) {
    let finite = [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4",
    ];
    for name in finite {
        t.check(format!("denominator {name}"), rs(name).and_then(|r| denominator_check(&r)));
    }
    for name in ["A1", "A2", "B2"] {
        t.check(
            format!("affine denominator {name} K=3"),
            rs(name).and_then(|r| affine_denominator_check(&r, 3, false)),
        );
    }
}

fn criterion2(t: &mut Tally, opts: &SuiteOptions) {
    for name in simple_types(opts.max_rank) {
        let r = match rs(&name) {
            Ok(r) => r,
            Err(e) => {
                t.check(name, Err(e));
                continue;
            }
        };
        for lam in dominant_box(r.rank(), 2) {
            t.check(
                format!("weyl character {name} {lam}"),
                (|| {
                    let chi = irreducible_character(&r, &lam)?;
                    Ok(verify_weyl_character(&r, &lam, &chi)? && chi.dimension() == weyl_dimension(&r, &lam)?)
                })(),
            );
        }
    }
}

fn criterion3(t: &mut Tally) {
    for name in simple_types(4) {
        t.check(
            format!("spin0 adjoint {name}"),
            (|| {
                let r = rs(&name)?;
                let s = crate::spin::spin0_character(&r, &adjoint_character(&r), &DistinguishedCoweight::rho_vee(&r))?;
                Ok(s == irreducible_character(&r, r.rho())?)
            })(),
        );
    }
}

fn clifford_case(r: &Arc<RootSystem>, chi: &FormalCharacter) -> Result<bool> {
    let d = DistinguishedCoweight::rho_vee(r);
    let oracle = clifford_wedge_oracle(r, &weight_multiset(chi)?, &d)?;
    let agrees = oracle.character == spin_character(r, chi, &d)?;
    let relations = match oracle.relations {
        Some(ok) => ok,
        None => oracle.dim > crate::spin::RELATION_CAP,
    };
    Ok(agrees && relations)
}

fn criterion4(t: &mut Tally) {
    let corpus: Vec<(&str, Vec<&str>)> = vec![
        ("A1", vec!["adjoint"]),
        ("A2", vec!["adjoint"]),
        ("B2", vec!["adjoint", "V(theta_s)"]),
    ];
    for (name, modules) in corpus {
        let r = match rs(name) {
            Ok(r) => r,
            Err(e) => {
                t.check(name, Err(e));
                continue;
            }
        };
        let chars: Vec<(&str, Result<FormalCharacter>)> = modules
            .iter()
            .map(|&label| {
                let hw = if label == "adjoint" { r.theta() } else { r.theta_s() };
                (label, irreducible_character(&r, hw))
            })
            .collect();
        for (label, chi) in &chars {
            t.check(
                format!("clifford {name} {label}"),
                chi.as_ref().map_err(Clone::clone).and_then(|c| clifford_case(&r, c)),
            );
        }
        for i in 0..chars.len() {
            for j in i..chars.len() {
                t.check(
                    format!("clifford {name} {} + {}", chars[i].0, chars[j].0),
                    (|| {
                        let a = chars[i].1.clone()?;
                        let b = chars[j].1.clone()?;
                        clifford_case(&r, &a.add(&b)?)
                    })(),
                );
            }
        }
    }
}

fn criterion5(t: &mut Tally) {
    for name in ["A3_to_C2", "D3_to_B2", "A2_to_B1", "A4_to_B2", "D4_to_G2"] {
        t.check(
            format!("theorem1 {name}"),
            (|| {
                let kind: FoldingKind = name.parse()?;
                let (spec, parts) = folding_embedding(kind)?;
                Ok(verify_theorem1(&spec, &parts)?.pass && verify_prop4(kind)?.pass)
            })(),
        );
    }
}

fn criterion6(t: &mut Tally) {
    for name in ["A3_to_C2", "A2_to_B1"] {
        let setup = name.parse::<FoldingKind>().and_then(folding_embedding);
        let (spec, parts) = match setup {
            Ok(x) => x,
            Err(e) => {
                t.check(name, Err(e));
                continue;
            }
        };
        for i in 0..spec.source.rank() {
            let mu = Weight::fundamental(spec.source.rank(), i);
            t.check(
                format!("theorem2 {name} {mu}"),
                verify_theorem2(&spec, &parts, &mu).map(|r| r.pass),
            );
        }
    }
}

fn criterion7(t: &mut Tally) {
    for n in 2..=4 {
        for mu in partitions_in_box(n, 2) {
            t.check(format!("prop3 n={n} mu={mu:?}"), verify_prop3(n, &mu).map(|r| r.pass));
        }
    }
}

fn criterion8(t: &mut Tally) {
    let mut cases: Vec<(String, CoprimaryCase)> =
        simple_types(4).into_iter().map(|n| (n, CoprimaryCase::Adjoint)).collect();
    for n in ["B2", "B3", "C2", "C3"] {
        cases.push((n.into(), CoprimaryCase::ThetaS));
    }
    for n in ["A1", "B2"] {
        cases.push((n.into(), CoprimaryCase::TwoThetaS));
    }
    for (name, case) in cases {
        t.check(
            format!("single constituent {name} {case}"),
            rs(&name).and_then(|r| coprimary_finite(&r, case)).map(|r| r.pass),
        );
    }
}

fn criterion9(t: &mut Tally, opts: &SuiteOptions) {
    let k = opts.k;
    t.check(
        format!("A1 spin0(adjoint) = L(rho hat) K={k}"),
        (|| {
            let r = rs("A1")?;
            let s = affine_spin0_character(&r, &adjoint_character(&r), k)?;
            let irr = affine_irreducible_character(&r, &AffineWeight::rho_hat(&r), k, false)?;
            Ok(s.level == 2 && s == irr)
        })(),
    );
    t.check(
        format!("A1 prop6_7_8 K={k}"),
        rs("A1").and_then(|r| verify_prop6_7_8(&r, k, None, false)).map(|r| r.pass),
    );
    t.check(
        "A1 prop8 Lambda_0 + omega K=1",
        (|| {
            let r = rs("A1")?;
            let mu = AffineWeight::new(Weight::new([1]), 1, 0);
            Ok(verify_prop8(&r, &mu, 1, false)?.pass)
        })(),
    );
}

fn criterion10(t: &mut Tally) {
    t.check(
        "A1 two_theta_s obstruction K=1",
        (|| {
            let r = rs("A1")?;
            let rep = coprimary_check(&r, CoprimaryCase::TwoThetaS, 1, false)?;
            let j = rep.to_json();
            let ob = &j["details"]["affine"]["details"];
            Ok(rep.pass
                && j["details"]["level"] == json!(10)
                && ob["Lambda"] == json!({ "finite": [3], "level": 10, "delta": 0 })
                && ob["Lambda_prime"] == json!({ "finite": [7], "level": 10, "delta": -1 }))
        })(),
    );
    t.check(
        "B2 theta_s K=1",
        rs("B2")
            .and_then(|r| coprimary_check(&r, CoprimaryCase::ThetaS, 1, false))
            .map(|r| r.pass),
    );
}

fn criterion11(t: &mut Tally) {
    for name in ["B2", "B3", "C3", "F4", "G2"] {
        t.check(
            format!("dual facts {name} K=4"),
            rs(name).and_then(|r| dual_rootsystem_facts(&r, 4)).map(|r| r.pass),
        );
    }
}

/// JSON outputs that exercise every module, some large enough to take the
/// parallel multiplication path.
pub fn determinism_sample() -> Result<Vec<String>> {
    let mut out = Vec::new();
    let a3 = rs("A3")?;
    let big = irreducible_character(&a3, &Weight::new([2, 2, 2]))?;
    let sq = big.multiply(&big)?;
    out.push(sq.to_json().to_string());
    let parts: Vec<Value> = decompose(&a3, &adjoint_character(&a3).multiply(&adjoint_character(&a3))?)?
        .into_iter()
        .map(|(w, m)| json!([w, m.to_string()]))
        .collect();
    out.push(Value::Array(parts).to_string());
    let (spec, p) = folding_embedding("D4_to_G2".parse()?)?;
    out.push(verify_theorem1(&spec, &p)?.to_json().to_string());
    let a1 = rs("A1")?;
    out.push(verify_prop6_7_8(&a1, 2, None, false)?.to_json().to_string());
    out.push(affine_spin0_character(&a1, &adjoint_character(&a1), 2)?.to_json().to_string());
    out.push(dual_rootsystem_facts(&rs("G2")?, 4)?.to_json().to_string());
    out.push(verify_prop3(3, &[2, 1, 0])?.to_json().to_string());
    Ok(out)
}

fn criterion12(t: &mut Tally) {
    let runs: Vec<Result<Vec<String>>> = [1usize, 4, 1]
        .iter()
        .map(|&n| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| crate::error::Error::ThreadPool(e.to_string()))?
                .install(determinism_sample)
        })
        .collect();
    let first = runs[0].clone();
    for (i, r) in runs.into_iter().enumerate().skip(1) {
        t.check(
            format!("determinism run {i}"),
            match (&first, r) {
                (Ok(a), Ok(b)) => Ok(*a == b),
                (Err(e), _) => Err(e.clone()),
                (_, Err(e)) => Err(e),
            },
        );
    }
}

/// Runs one criterion by number.
pub fn run_criterion(id: u8, opts: &SuiteOptions) -> Option<CriterionResult> {
    let &(_, title, budget) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let mut t = Tally::new();
    match id {
        1 => criterion1(&mut t),
        2 => criterion2(&mut t, opts),
        3 => criterion3(&mut t),
        4 => criterion4(&mut t),
        5 => criterion5(&mut t),
        6 => criterion6(&mut t),
        7 => criterion7(&mut t),
        8 => criterion8(&mut t),
        9 => criterion9(&mut t, opts),
        10 => criterion10(&mut t),
        11 => criterion11(&mut t),
        12 => criterion12(&mut t),
        _ => unreachable!(),
    }
    Some(CriterionResult {
        id,
        title,
        pass: t.failures.is_empty() && t.cases > 0,
        cases: t.cases,
        failures: t.failures,
        elapsed: start.elapsed(),
        budget: Duration::from_secs(budget),
    })
}

pub fn run_all(opts: &SuiteOptions) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter_map(|c| run_criterion(c.0, opts))
        .collect()
}
