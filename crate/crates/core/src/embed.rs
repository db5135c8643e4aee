//! Subalgebra embeddings given by linear maps on weight lattices, character
//! restriction, and the factorization checks built on them.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::charalg::{adjoint_character, decompose, irreducible_character, FormalCharacter};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::report::{Factor, Report};
use crate::rootsys::RootSystem;
use crate::spin::{mul_one_plus_pow, spin0_character, DistinguishedCoweight};
use crate::weight::Weight;

/// Above this many positive roots the source `V(rho)` is expanded from its
/// product form instead of by Freudenthal's recursion.
const PRODUCT_FORM_THRESHOLD: usize = 20;

/// A linear map from source Dynkin labels to target Dynkin labels.
#[derive(Clone, Debug)]
pub struct EmbeddingSpec {
    pub name: String,
    pub source: Arc<RootSystem>,
    pub target: Arc<RootSystem>,
    /// Rows indexed by target nodes, columns by source nodes; entries are
    /// divided by `denom`.
    pub matrix: Vec<Vec<i64>>,
    pub denom: i64,
    pub d: DistinguishedCoweight,
}

impl EmbeddingSpec {
    pub fn new(
        name: impl Into<String>,
        source: Arc<RootSystem>,
        target: Arc<RootSystem>,
        matrix: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let d = DistinguishedCoweight::rho_vee(&target);
        let spec = Self {
            name: name.into(),
            source,
            target,
            matrix,
            denom: 1,
            d,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn identity(rs: Arc<RootSystem>) -> Self {
        let n = rs.rank();
        let matrix = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        Self::new(format!("identity_{}", rs.name()), rs.clone(), rs, matrix).expect("identity embedding")
    }

    pub fn restrict_weight(&self, w: &Weight) -> Result<Weight> {
        w.check_rank(self.source.rank())?;
        let mut out = Vec::with_capacity(self.matrix.len());
        for row in &self.matrix {
            let s: i64 = row.iter().zip(w.coords()).map(|(a, &x)| a * x as i64).sum();
            if s % self.denom != 0 {
                return Err(Error::NonIntegralImage(w.to_string()));
            }
            out.push((s / self.denom) as i32);
        }
        Ok(Weight::new(out))
    }

    /// Positive roots of the source must restrict to weights that are
    /// nonnegative on `d`, and every simple root of the target must be the
    /// restriction of a simple root of the source.
    pub fn validate(&self) -> Result<()> {
        if self.matrix.len() != self.target.rank()
            || self.matrix.iter().any(|r| r.len() != self.source.rank())
        {
            return Err(Error::BadEmbedding(format!("{}: matrix shape", self.name)));
        }
        for a in self.source.positive_roots() {
            let b = self.restrict_weight(a)?;
            if self.d.pair_scaled(&self.target, &b) < 0 {
                return Err(Error::BadEmbedding(format!(
                    "{}: root {a} restricts to d-negative {b}",
                    self.name
                )));
            }
        }
        let images: Vec<Weight> = self
            .source
            .simple_roots()
            .iter()
            .map(|a| self.restrict_weight(a))
            .collect::<Result<_>>()?;
        for b in self.target.simple_roots() {
            if !images.contains(b) {
                return Err(Error::BadEmbedding(format!(
                    "{}: simple root {b} is not a restricted simple root",
                    self.name
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "source": self.source.name(),
            "target": self.target.name(),
            "matrix": self.matrix,
            "denom": self.denom,
            "d": self.d.coeffs(),
        })
    }
}

/// Pushforward of the term map along the restriction.
pub fn restrict_character(spec: &EmbeddingSpec, chi: &FormalCharacter) -> Result<FormalCharacter> {
    if chi.root_system() != &spec.source {
        return Err(Error::RootSystemMismatch(
            spec.source.name().to_string(),
            chi.root_system().name().to_string(),
        ));
    }
    chi.map_weights(&spec.target, |w| spec.restrict_weight(w))
}

/// `sl_2` inside `sl_n` through `H = sum (n + 1 - 2i) E_ii`.
pub fn principal_sl2_embedding(n: usize) -> Result<EmbeddingSpec> {
    if !(2..=10).contains(&n) {
        return Err(Error::BadRank(n));
    }
    let source = Arc::new(RootSystem::builtin(&format!("A{}", n - 1))?);
    let target = Arc::new(RootSystem::builtin("A1")?);
    let row: Vec<i64> = (1..n as i64).map(|i| i * (n as i64 - i)).collect();
    EmbeddingSpec::new(format!("principal_sl2:{n}"), source, target, vec![row])
}

/// Diagram-automorphism foldings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoldingKind {
    /// `A_{2n-1} -> C_n`.
    A2n1ToCn(usize),
    /// `D_{n+1} -> B_n`.
    Dn1ToBn(usize),
    E6ToF4,
    /// `A_{2n} -> B_n`.
    A2nToBn(usize),
    D4ToG2,
}

impl FoldingKind {
    pub fn source_name(&self) -> String {
        match *self {
            Self::A2n1ToCn(n) => format!("A{}", 2 * n - 1),
            Self::Dn1ToBn(n) => format!("D{}", n + 1),
            Self::E6ToF4 => "E6".into(),
            Self::A2nToBn(n) => format!("A{}", 2 * n),
            Self::D4ToG2 => "D4".into(),
        }
    }

    pub fn target_name(&self) -> String {
        match *self {
            Self::A2n1ToCn(n) => format!("C{n}"),
            Self::Dn1ToBn(n) | Self::A2nToBn(n) => format!("B{n}"),
            Self::E6ToF4 => "F4".into(),
            Self::D4ToG2 => "G2".into(),
        }
    }

    /// Order of the diagram automorphism.
    pub fn order(&self) -> u32 {
        match self {
            Self::D4ToG2 => 3,
            _ => 2,
        }
    }

    /// 1 exactly when two exchanged nodes are joined by an edge.
    pub fn edge_flip(&self) -> i32 {
        matches!(self, Self::A2nToBn(_)) as i32
    }

    /// Every folding kind with a source of rank at most 9.
    pub fn all_small() -> Vec<FoldingKind> {
        let mut v = Vec::new();
        for n in 2..=5 {
            v.push(Self::A2n1ToCn(n));
        }
        for n in 2..=8 {
            v.push(Self::Dn1ToBn(n));
        }
        for n in 1..=4 {
            v.push(Self::A2nToBn(n));
        }
        v.push(Self::D4ToG2);
        v.push(Self::E6ToF4);
        v
    }

    fn check(&self) -> Result<()> {
        let ok = match *self {
            Self::A2n1ToCn(n) => (2..=5).contains(&n),
            Self::Dn1ToBn(n) => (2..=8).contains(&n),
            Self::A2nToBn(n) => (1..=4).contains(&n),
            Self::E6ToF4 | Self::D4ToG2 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedKind(self.to_string()))
        }
    }

    /// Restriction matrix: each target node sums the labels of its orbit.
    fn matrix(&self) -> Vec<Vec<i64>> {
        match *self {
            Self::A2n1ToCn(n) => {
                let m = 2 * n - 1;
                (1..=n)
                    .map(|i| {
                        let mut row = vec![0; m];
                        row[i - 1] = 1;
                        row[2 * n - i - 1] = 1;
                        row
                    })
                    .collect()
            }
            Self::Dn1ToBn(n) => {
                let m = n + 1;
                let mut rows: Vec<Vec<i64>> = (0..n)
                    .map(|i| (0..m).map(|j| (i == j) as i64).collect())
                    .collect();
                rows[n - 1][n] = 1;
                rows
            }
            Self::A2nToBn(n) => {
                let m = 2 * n;
                (1..=n)
                    .map(|i| {
                        let mut row = vec![0; m];
                        if i < n {
                            row[i - 1] = 1;
                            row[2 * n - i] = 1;
                        } else {
                            row[n - 1] = 2;
                            row[n] = 2;
                        }
                        row
                    })
                    .collect()
            }
            Self::E6ToF4 => vec![
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 1, 0, 0, 0],
                vec![0, 1, 0, 1, 0, 0],
                vec![1, 0, 0, 0, 1, 0],
            ],
            Self::D4ToG2 => vec![vec![1, 0, 1, 1], vec![0, 1, 0, 0]],
        }
    }

    /// Highest weights of the complement of the adjoint of the target inside
    /// the restricted adjoint of the source.
    fn part_weights(&self, target: &RootSystem) -> Vec<Weight> {
        let ts = target.theta_s().clone();
        match self {
            Self::A2nToBn(_) => vec![ts.scale(2)],
            Self::D4ToG2 => vec![ts.clone(), ts],
            _ => vec![ts],
        }
    }
}

impl fmt::Display for FoldingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_to_{}", self.source_name(), self.target_name())
    }
}

impl FromStr for FoldingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedKind(s.to_string());
        let upper = s.trim().to_ascii_uppercase();
        let (src, dst) = upper.split_once("_TO_").ok_or_else(bad)?;
        let split = |t: &str| -> Result<(char, usize)> {
            let mut c = t.chars();
            let fam = c.next().ok_or_else(bad)?;
            let n = c.as_str().parse().map_err(|_| bad())?;
            Ok((fam, n))
        };
        let kind = match (split(src)?, split(dst)?) {
            (('A', m), ('C', n)) if m == 2 * n - 1 => Self::A2n1ToCn(n),
            (('D', m), ('B', n)) if m == n + 1 => Self::Dn1ToBn(n),
            (('A', m), ('B', n)) if m == 2 * n => Self::A2nToBn(n),
            (('E', 6), ('F', 4)) => Self::E6ToF4,
            (('D', 4), ('G', 2)) => Self::D4ToG2,
            _ => return Err(bad()),
        };
        kind.check()?;
        Ok(kind)
    }
}

/// The folding embedding and the characters `p_j` of the complement of the
/// target adjoint inside the restricted source adjoint.
pub fn folding_embedding(kind: FoldingKind) -> Result<(EmbeddingSpec, Vec<FormalCharacter>)> {
    kind.check()?;
    let source = Arc::new(RootSystem::builtin(&kind.source_name())?);
    let target = Arc::new(RootSystem::builtin(&kind.target_name())?);
    let spec = EmbeddingSpec::new(kind.to_string(), source, target.clone(), kind.matrix())?;
    let parts = kind
        .part_weights(&target)
        .iter()
        .map(|w| irreducible_character(&target, w))
        .collect::<Result<_>>()?;
    Ok((spec, parts))
}

/// Characters `V(2j)`, `j = 2..n-1`, completing the principal `sl_2` inside
/// the restricted adjoint of `sl_n`.
pub fn principal_parts(spec: &EmbeddingSpec) -> Result<Vec<FormalCharacter>> {
    let n = spec.source.rank() + 1;
    (2..n)
        .map(|j| irreducible_character(&spec.target, &Weight::new([2 * j as i32])))
        .collect()
}

/// Resolves `principal_sl2:<n>` or a folding name.
pub fn embedding_by_name(name: &str) -> Result<(EmbeddingSpec, Vec<FormalCharacter>)> {
    if let Some(n) = name.trim().strip_prefix("principal_sl2:") {
        let n: usize = n
            .parse()
            .map_err(|_| Error::UnsupportedKind(name.to_string()))?;
        let spec = principal_sl2_embedding(n)?;
        let parts = principal_parts(&spec)?;
        return Ok((spec, parts));
    }
    folding_embedding(name.parse()?)
}

fn weights_json(parts: &[(Weight, BigInt)]) -> Value {
    Value::Array(
        parts
            .iter()
            .map(|(w, m)| json!([w, crate::charalg::bigint_json(m)]))
            .collect(),
    )
}

/// Checks `restrict(adjoint) = adjoint + sum parts`.
pub fn check_adjoint_split(spec: &EmbeddingSpec, parts: &[FormalCharacter]) -> Result<()> {
    let lhs = restrict_character(spec, &adjoint_character(&spec.source))?;
    let mut rhs = adjoint_character(&spec.target);
    for p in parts {
        rhs = rhs.add(p)?;
    }
    if lhs != rhs {
        let got = decompose(&spec.target, &lhs)
            .map(|d| weights_json(&d).to_string())
            .unwrap_or_else(|e| e.to_string());
        return Err(Error::DecompositionMismatch(format!("{}: restricted adjoint is {got}", spec.name)));
    }
    Ok(())
}

/// `V(rho)` of the source, from its product form `e^rho prod (1 + e^{-a})`
/// when the recursion would be too large.
fn source_rho_character(rs: &Arc<RootSystem>) -> Result<FormalCharacter> {
    if rs.positive_roots().len() <= PRODUCT_FORM_THRESHOLD {
        return irreducible_character(rs, rs.rho());
    }
    let mut out = FormalCharacter::monomial(rs, rs.rho().clone(), 1);
    for a in rs.positive_roots() {
        mul_one_plus_pow(&mut out, a, 1);
    }
    Ok(out)
}

/// Restriction of `V(rho)` of the source. For large sources the product is
/// pushed forward factor by factor so the source support is never built.
fn restricted_source_rho(spec: &EmbeddingSpec) -> Result<FormalCharacter> {
    let src = &spec.source;
    if src.positive_roots().len() <= PRODUCT_FORM_THRESHOLD {
        return restrict_character(spec, &source_rho_character(src)?);
    }
    let mut out = FormalCharacter::monomial(&spec.target, spec.restrict_weight(src.rho())?, 1);
    for a in src.positive_roots() {
        mul_one_plus_pow(&mut out, &spec.restrict_weight(a)?, 1);
    }
    Ok(out)
}

/// `prod_j Spin_0(p_j)`.
pub fn spin_factors(spec: &EmbeddingSpec, parts: &[FormalCharacter]) -> Result<Vec<FormalCharacter>> {
    parts.iter().map(|p| spin0_character(&spec.target, p, &spec.d)).collect()
}

fn product(rs: &Arc<RootSystem>, factors: &[FormalCharacter]) -> Result<FormalCharacter> {
    let mut acc = FormalCharacter::one(rs);
    for f in factors {
        acc = acc.multiply(f)?;
    }
    Ok(acc)
}

fn factors_json(spec: &EmbeddingSpec, ws: &[FormalCharacter]) -> Result<Value> {
    Ok(Value::Array(
        ws.iter()
            .map(|w| decompose(&spec.target, w).map(|d| weights_json(&d)))
            .collect::<Result<_>>()?,
    ))
}

/// `V(rho~) restricted = V(rho) (x) Spin_0(p_1) (x) Spin_0(p_2) ...`.
pub fn verify_theorem1(spec: &EmbeddingSpec, parts: &[FormalCharacter]) -> Result<Report> {
    check_adjoint_split(spec, parts)?;
    let ws = spin_factors(spec, parts)?;
    let lhs = restricted_source_rho(spec)?;
    let rhs = irreducible_character(&spec.target, spec.target.rho())?.multiply(&product(&spec.target, &ws)?)?;
    Ok(Report::compare(format!("theorem1:{}", spec.name), &lhs, &rhs)
        .with_detail("embedding", spec.to_json())
        .with_detail("W", factors_json(spec, &ws)?))
}

/// `V(2 mu~ + rho~) restricted = (sum_i V(2 mu_i + rho)) (x) W_1 (x) ...`
/// where `V(mu~)` restricts to `sum_i V(mu_i)`.
pub fn verify_theorem2(spec: &EmbeddingSpec, parts: &[FormalCharacter], mu_tilde: &Weight) -> Result<Report> {
    mu_tilde.check_rank(spec.source.rank())?;
    if !mu_tilde.is_dominant() {
        return Err(Error::NotDominant(mu_tilde.to_string()));
    }
    check_adjoint_split(spec, parts)?;
    let (src, tgt) = (&spec.source, &spec.target);
    let mu_down = restrict_character(spec, &irreducible_character(src, mu_tilde)?)?;
    let constituents = decompose(tgt, &mu_down)?;
    let top = &mu_tilde.scale(2) + src.rho();
    let lhs = restrict_character(spec, &irreducible_character(src, &top)?)?;
    let mut sum = FormalCharacter::zero(tgt);
    for (mu, m) in &constituents {
        let w = &mu.scale(2) + tgt.rho();
        sum = sum.add(&irreducible_character(tgt, &w)?.scale(m))?;
    }
    let ws = spin_factors(spec, parts)?;
    let rhs = sum.multiply(&product(tgt, &ws)?)?;
    Ok(Report::compare(format!("theorem2:{}:{}", spec.name, mu_tilde), &lhs, &rhs)
        .with_detail("mu_restricted", weights_json(&constituents)))
}

/// `prod_j W_j = [chi(e(rho + rho_s) + rho_s) + (a - 2) chi(0)]^{a - 1}`.
pub fn verify_prop4(kind: FoldingKind) -> Result<Report> {
    let (spec, parts) = folding_embedding(kind)?;
    let tgt = &spec.target;
    let ws = spin_factors(&spec, &parts)?;
    let lhs = product(tgt, &ws)?;
    let a = kind.order();
    let e = kind.edge_flip();
    let hw = &(tgt.rho() + tgt.rho_s()).scale(e) + tgt.rho_s();
    let base = irreducible_character(tgt, &hw)?
        .add(&FormalCharacter::one(tgt).scale(&BigInt::from(a as i64 - 2)))?;
    let rhs = base.pow(a - 1)?;
    Ok(Report::compare(format!("prop4:{kind}"), &lhs, &rhs))
}

fn check_partition(lambda: &[i64], n: usize) -> Result<Vec<i64>> {
    if n == 0 {
        return Err(Error::BadRank(0));
    }
    let trimmed: Vec<i64> = {
        let mut v = lambda.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    if trimmed.len() > n
        || lambda.iter().any(|&x| x < 0)
        || lambda.windows(2).any(|p| p[0] < p[1])
    {
        return Err(Error::BadPartition(format!("{lambda:?} with n = {n}")));
    }
    let mut out = trimmed;
    out.resize(n, 0);
    Ok(out)
}

/// `S_lambda(1, q, ..., q^{n-1})` by enumerating semistandard tableaux with
/// entries in `1..=n`.
pub fn principal_specialization(lambda: &[i64], n: usize) -> Result<QPoly> {
    let lambda = check_partition(lambda, n)?;
    let rows: Vec<usize> = lambda.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
    let mut cells = Vec::new();
    for (r, &len) in rows.iter().enumerate() {
        for c in 0..len {
            cells.push((r, c));
        }
    }
    let col_len = |c: usize| rows.iter().filter(|&&len| len > c).count();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut counts: Vec<u64> = Vec::new();
    fill(&cells, 0, &mut grid, n, &col_len, 0, &mut counts);
    Ok(QPoly::from_coeffs(counts))
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut Vec<Vec<usize>>,
    n: usize,
    col_len: &dyn Fn(usize) -> usize,
    exp: usize,
    counts: &mut Vec<u64>,
) {
    if k == cells.len() {
        if counts.len() <= exp {
            counts.resize(exp + 1, 0);
        }
        counts[exp] += 1;
        return;
    }
    let (r, c) = cells[k];
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    // room for the strictly increasing entries below
    let hi = n - (col_len(c) - r - 1);
    for v in lo..=hi {
        grid[r][c] = v;
        fill(cells, k + 1, grid, n, col_len, exp + v - 1, counts);
    }
}

/// The same specialization through the principal `sl_2`: each weight `k` of
/// the restricted character contributes `q^{N - k/2}`, `N = (n-1)|lambda|/2`.
pub fn principal_specialization_via_character(lambda: &[i64], n: usize) -> Result<QPoly> {
    let lambda = check_partition(lambda, n)?;
    if n == 1 {
        return Ok(QPoly::one());
    }
    let spec = principal_sl2_embedding(n)?;
    let labels = Weight::new(lambda.windows(2).map(|p| (p[0] - p[1]) as i32));
    let chi = restrict_character(&spec, &irreducible_character(&spec.source, &labels)?)?;
    let size: i64 = lambda.iter().sum();
    let twice_n = (n as i64 - 1) * size;
    let mut out = QPoly::zero();
    for (w, c) in chi.terms() {
        let k = w.coords()[0] as i64;
        debug_assert_eq!((twice_n - k) % 2, 0);
        out.add_term((twice_n - k) / 2, c.clone());
    }
    Ok(out)
}

pub fn is_symmetric_unimodal(p: &QPoly) -> Result<bool> {
    p.is_symmetric_unimodal()
}

/// `w_k(q) = (1 + q)(1 + q^2) ... (1 + q^{k+1})`.
pub fn w_factor(k: usize) -> QPoly {
    (1..=k as i64 + 1).fold(QPoly::one(), |acc, j| acc.mul(&QPoly::one_plus(j)))
}

fn binom3(n: i64) -> i64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// `S_{2mu+rho}(1, ..., q^{n-1}) = q^{C(n,3)} (1+q) S_mu(1, q^2, ..., q^{2n-2})
/// * w_1(q) ... w_{n-2}(q)`, every factor symmetric unimodal.
pub fn verify_prop3(n: usize, mu: &[i64]) -> Result<Report> {
    let mu = check_partition(mu, n)?;
    let top: Vec<i64> = mu
        .iter()
        .enumerate()
        .map(|(i, &m)| 2 * m + (n - 1 - i) as i64)
        .collect();
    let lhs = principal_specialization(&top, n)?;
    let via_char = principal_specialization_via_character(&top, n)?;
    let first = principal_specialization(&mu, n)?
        .substitute(2)
        .mul(&QPoly::one_plus(1))
        .shift(binom3(n as i64));
    let mut factors = vec![first];
    factors.extend((1..n.saturating_sub(1)).map(w_factor));
    let rhs = QPoly::product(&factors);
    let verdicts: Vec<Factor> = factors
        .iter()
        .map(|f| {
            Ok(Factor {
                poly: f.to_string(),
                symmetric_unimodal: f.is_symmetric_unimodal()?,
            })
        })
        .collect::<Result<_>>()?;
    let pass = lhs == rhs && lhs == via_char && verdicts.iter().all(|f| f.symmetric_unimodal);
    let mut r = Report::new(
        format!("prop3:n={n}:mu={mu:?}"),
        &json!(lhs.to_string()),
        &json!(rhs.to_string()),
        pass,
    )
    .with_factors(verdicts)
    .with_detail("character_path_agrees", json!(lhs == via_char));
    if lhs != rhs {
        let e = (lhs.min_exp().unwrap_or(0).min(rhs.min_exp().unwrap_or(0))..)
            .find(|&e| lhs.coeff(e) != rhs.coeff(e))
            .unwrap_or(0);
        r.first_diff = Some(json!({
            "exponent": e,
            "lhs": lhs.coeff(e).to_i64(),
            "rhs": rhs.coeff(e).to_i64(),
        }));
    }
    Ok(r)
}

/// All partitions with at most `n` parts, each at most `max_part`.
pub fn partitions_in_box(n: usize, max_part: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

/// Dimension sanity: restriction preserves the total multiplicity.
pub fn preserves_dimension(spec: &EmbeddingSpec, chi: &FormalCharacter) -> Result<bool> {
    Ok(restrict_character(spec, chi)?.dimension() == chi.dimension())
}

/// `true` when the character `chi` of the target is an honest sum of
/// irreducibles whose highest weights are exactly `expected` (as a multiset).
pub fn decomposes_as(rs: &Arc<RootSystem>, chi: &FormalCharacter, expected: &[Weight]) -> Result<bool> {
    let mut got: Vec<Weight> = Vec::new();
    for (w, m) in decompose(rs, chi)? {
        let k = m.to_usize().unwrap_or(0);
        got.extend(std::iter::repeat_n(w, k));
    }
    let mut want = expected.to_vec();
    got.sort();
    want.sort();
    Ok(got == want)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(c: [i32; N]) -> Weight {
        Weight::new(c)
    }

    #[test]
    fn identity_restriction() {
        let a2 = Arc::new(RootSystem::builtin("A2").unwrap());
        let spec = EmbeddingSpec::identity(a2.clone());
        let chi = adjoint_character(&a2);
        assert_eq!(restrict_character(&spec, &chi).unwrap(), chi);
    }

    #[test]
    fn principal_images() {
        let s2 = principal_sl2_embedding(2).unwrap();
        assert_eq!(s2.restrict_weight(&w([3])).unwrap(), w([3]));
        let s3 = principal_sl2_embedding(3).unwrap();
        for a in s3.source.simple_roots() {
            assert_eq!(s3.restrict_weight(a).unwrap(), w([2]));
        }
        assert_eq!(s3.restrict_weight(s3.source.theta()).unwrap(), w([4]));
        // rho(H) = sum over positive roots of their heights
        let s4 = principal_sl2_embedding(4).unwrap();
        let heights: i64 = s4.source.positive_root_coords().iter().map(|c| c.iter().sum::<i64>()).sum();
        assert_eq!(s4.restrict_weight(s4.source.rho()).unwrap(), Weight::new([heights as i32]));
        assert_eq!(principal_sl2_embedding(1).unwrap_err(), Error::BadRank(1));
    }

    #[test]
    fn principal_adjoint_split() {
        let spec = principal_sl2_embedding(3).unwrap();
        let down = restrict_character(&spec, &adjoint_character(&spec.source)).unwrap();
        assert!(decomposes_as(&spec.target, &down, &[w([2]), w([4])]).unwrap());
    }

    #[test]
    fn folding_stated_decompositions() {
        let (spec, parts) = folding_embedding(FoldingKind::A2n1ToCn(2)).unwrap();
        let down = restrict_character(&spec, &adjoint_character(&spec.source)).unwrap();
        let (t, ts) = (spec.target.theta().clone(), spec.target.theta_s().clone());
        assert!(decomposes_as(&spec.target, &down, &[t, ts.clone()]).unwrap());
        assert_eq!(parts, vec![irreducible_character(&spec.target, &ts).unwrap()]);

        let (spec, parts) = folding_embedding(FoldingKind::A2nToBn(1)).unwrap();
        assert_eq!(parts[0], irreducible_character(&spec.target, &w([4])).unwrap());
        check_adjoint_split(&spec, &parts).unwrap();

        let (spec, parts) = folding_embedding(FoldingKind::D4ToG2).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], parts[1]);
        check_adjoint_split(&spec, &parts).unwrap();
    }

    #[test]
    fn all_foldings_split_the_adjoint() {
        for kind in FoldingKind::all_small() {
            let (spec, parts) = folding_embedding(kind).unwrap();
            check_adjoint_split(&spec, &parts).unwrap_or_else(|e| panic!("{kind}: {e}"));
        }
    }

    #[test]
    fn folding_names() {
        assert_eq!("A3_to_C2".parse::<FoldingKind>().unwrap(), FoldingKind::A2n1ToCn(2));
        assert_eq!("D3_to_B2".parse::<FoldingKind>().unwrap(), FoldingKind::Dn1ToBn(2));
        assert_eq!("a2_to_b1".parse::<FoldingKind>().unwrap(), FoldingKind::A2nToBn(1));
        assert_eq!("E6_to_F4".parse::<FoldingKind>().unwrap(), FoldingKind::E6ToF4);
        assert!("A3_to_B2".parse::<FoldingKind>().is_err());
        assert_eq!(FoldingKind::D4ToG2.to_string(), "D4_to_G2");
    }

    #[test]
    fn rho_factorization_small_foldings() {
        let (spec, parts) = folding_embedding(FoldingKind::A2nToBn(1)).unwrap();
        let r = verify_theorem1(&spec, &parts).unwrap();
        assert!(r.pass, "{:?}", r.first_diff);
        // V(rho) (x) V(rho + 2 rho_s) = chi_1 chi_3
        let lhs = restrict_character(&spec, &irreducible_character(&spec.source, spec.source.rho()).unwrap()).unwrap();
        let t = &spec.target;
        let expect = irreducible_character(t, &w([1]))
            .unwrap()
            .multiply(&irreducible_character(t, &w([3])).unwrap())
            .unwrap();
        assert_eq!(lhs, expect);
        let bad = vec![irreducible_character(t, &w([2])).unwrap()];
        assert!(matches!(verify_theorem1(&spec, &bad), Err(Error::DecompositionMismatch(_))));
    }

    #[test]
    fn twice_mu_factorization_small_foldings() {
        let (spec, parts) = folding_embedding(FoldingKind::A2n1ToCn(2)).unwrap();
        assert!(verify_theorem2(&spec, &parts, &w([1, 0, 0])).unwrap().pass);
        let spec = principal_sl2_embedding(3).unwrap();
        let parts = principal_parts(&spec).unwrap();
        assert!(verify_theorem2(&spec, &parts, &w([1, 0])).unwrap().pass);
        assert!(verify_theorem2(&spec, &parts, &w([0, 0])).unwrap().pass);
    }

    #[test]
    fn tableaux() {
        assert_eq!(principal_specialization(&[1, 0], 2).unwrap(), QPoly::from_coeffs([1, 1]));
        let expect = QPoly::from_coeffs([1, 2, 2, 2, 1]).shift(1);
        // q (1+q)^2 (1+q^2) = q + 2q^2 + 2q^3 + 2q^4 + q^5
        assert_eq!(principal_specialization(&[2, 1, 0], 3).unwrap(), expect);
        assert_eq!(principal_specialization(&[0], 4).unwrap(), QPoly::one());
        assert!(matches!(principal_specialization(&[1, 2], 3), Err(Error::BadPartition(_))));
        assert!(matches!(principal_specialization(&[1, 1, 1], 2), Err(Error::BadPartition(_))));
    }

    #[test]
    fn two_specialization_paths_agree() {
        for n in 2..=4 {
            for lam in partitions_in_box(n, 3) {
                assert_eq!(
                    principal_specialization(&lam, n).unwrap(),
                    principal_specialization_via_character(&lam, n).unwrap(),
                    "{lam:?}"
                );
            }
        }
    }

    #[test]
    fn principal_factorization_small() {
        let r = verify_prop3(2, &[0]).unwrap();
        assert!(r.pass);
        assert_eq!(r.factors.len(), 1);
        assert_eq!(r.factors[0].poly, "1 + q");
        let r = verify_prop3(3, &[0, 0, 0]).unwrap();
        assert!(r.pass);
        assert_eq!(r.factors.len(), 2);
        assert!(verify_prop3(3, &[1, 0, 0]).unwrap().pass);
    }

    #[test]
    fn boxed_partitions() {
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(4, 2).len(), 15);
        assert_eq!(partitions_in_box(3, 1)[0], vec![0, 0, 0]);
    }
}
