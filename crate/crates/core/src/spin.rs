//! The reduced Spin character of an orthogonal representation, and an
//! explicit Clifford-algebra model on the wedge space used as an oracle.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::charalg::{decompose, FormalCharacter};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weight::Weight;

/// Largest `dim V` the wedge oracle accepts.
pub const ORACLE_CAP: usize = 24;
/// Largest `dim V` for which the Clifford relations are checked as matrices.
pub const RELATION_CAP: usize = 10;

/// A coweight `d = sum d_i varpi_i^vee`, so `alpha_i(d) = d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedCoweight {
    coeffs: Vec<i64>,
}

impl DistinguishedCoweight {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|&c| c <= 0) {
            return Err(Error::BadCoweight);
        }
        Ok(Self { coeffs })
    }

    /// `rho^vee`, the sum of the fundamental coweights.
    pub fn rho_vee(rs: &RootSystem) -> Self {
        Self {
            coeffs: rs.d_default(),
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        if self.coeffs.len() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: self.coeffs.len(),
            });
        }
        Ok(())
    }

    /// `det(A) * beta(d)`; only the sign is used.
    pub fn pair_scaled(&self, rs: &RootSystem, beta: &Weight) -> i64 {
        rs.pair_coweight_scaled(beta, &self.coeffs)
    }
}

/// Weights of `chi` with positive pairing against `d`, plus the zero-weight
/// multiplicity.
struct Split {
    positive: Vec<(Weight, u64)>,
    zero_mult: u64,
}

fn split_by_coweight(
    rs: &RootSystem,
    terms: impl IntoIterator<Item = (Weight, BigInt)>,
    d: &DistinguishedCoweight,
) -> Result<Split> {
    d.check(rs)?;
    let mut positive = Vec::new();
    let mut zero_mult = 0;
    for (w, c) in terms {
        let m = c
            .to_u64()
            .ok_or_else(|| Error::NotACharacter(format!("multiplicity {c} at {w}")))?;
        if w.is_zero() {
            zero_mult += m;
            continue;
        }
        let p = d.pair_scaled(rs, &w);
        if p == 0 {
            return Err(Error::ZeroPairing(w.to_string()));
        }
        if p > 0 {
            positive.push((w, m));
        }
    }
    positive.sort();
    Ok(Split { positive, zero_mult })
}

/// `Lambda = 1/2 sum m_b b` over the `d`-positive weights.
fn half_sum(rs: &RootSystem, positive: &[(Weight, u64)]) -> Result<Weight> {
    let mut twice = rs.zero_weight();
    for (b, m) in positive {
        twice = &twice + &b.scale(*m as i32);
    }
    twice
        .halve()
        .ok_or_else(|| Error::NonIntegralLambda(twice.to_string()))
}

/// Multiplies `chi` in place by `(1 + e^{-beta})^m`.
pub(crate) fn mul_one_plus_pow(chi: &mut FormalCharacter, beta: &Weight, m: u64) {
    let rs = chi.root_system().clone();
    for _ in 0..m {
        let shifted: Vec<(Weight, BigInt)> = chi
            .terms()
            .iter()
            .map(|(w, c)| (w - beta, c.clone()))
            .collect();
        for (w, c) in shifted {
            chi.add_term(w, c);
        }
    }
    debug_assert!(chi.root_system() == &rs);
}

/// `true` when `chi` is a genuine self-dual character.
pub fn check_orthogonal_candidate(rs: &Arc<RootSystem>, chi: &FormalCharacter) -> Result<bool> {
    decompose(rs, chi)?;
    Ok(chi.is_self_dual())
}

/// `e^Lambda prod_{b(d) > 0} (1 + e^{-b})^{m_b}`.
pub fn spin0_character(
    rs: &Arc<RootSystem>,
    chi: &FormalCharacter,
    d: &DistinguishedCoweight,
) -> Result<FormalCharacter> {
    if !chi.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let split = split_by_coweight(rs, chi.terms().iter().map(|(w, c)| (w.clone(), c.clone())), d)?;
    let lambda = half_sum(rs, &split.positive)?;
    let mut out = FormalCharacter::monomial(rs, lambda, 1);
    for (b, m) in &split.positive {
        mul_one_plus_pow(&mut out, b, *m);
    }
    Ok(out)
}

/// `2^{floor(m_0/2)}` copies of the reduced Spin character.
pub fn spin_character(
    rs: &Arc<RootSystem>,
    chi: &FormalCharacter,
    d: &DistinguishedCoweight,
) -> Result<FormalCharacter> {
    let m0 = chi.coeff(&rs.zero_weight());
    let k = (m0 / 2u32)
        .to_u32()
        .ok_or_else(|| Error::NotACharacter("zero-weight multiplicity".into()))?;
    Ok(spin0_character(rs, chi, d)?.scale(&(BigInt::one() << k)))
}

/// Compares the reduced Spin character of a direct sum with the product of
/// the summands' ones.
pub fn spin0_additivity_check(
    rs: &Arc<RootSystem>,
    chi1: &FormalCharacter,
    chi2: &FormalCharacter,
    d: &DistinguishedCoweight,
) -> Result<bool> {
    let lhs = spin0_character(rs, &chi1.add(chi2)?, d)?;
    let rhs = spin0_character(rs, chi1, d)?.multiply(&spin0_character(rs, chi2, d)?)?;
    Ok(lhs == rhs)
}

/// A signed monomial operator on the wedge basis: basis `J` maps to
/// `coeff[J] * e_{image[J]}`.
#[derive(Clone, Debug)]
struct WedgeOp {
    image: Vec<usize>,
    coeff: Vec<i64>,
}

impl WedgeOp {
    fn to_dense(&self) -> Vec<Vec<i64>> {
        let n = self.image.len();
        let mut m = vec![vec![0; n]; n];
        for j in 0..n {
            if self.coeff[j] != 0 {
                m[self.image[j]][j] = self.coeff[j];
            }
        }
        m
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// Number of elements of `mask` above bit `i`.
fn above(mask: usize, i: usize) -> u32 {
    (mask >> (i + 1)).count_ones()
}

/// `e_i` for `i in I^+` (bit `i - 1`): wedge on the left.
fn op_plus(p: usize, bit: usize) -> WedgeOp {
    let size = 1usize << p;
    let mut image = vec![0; size];
    let mut coeff = vec![0; size];
    for j in 0..size {
        if j & (1 << bit) == 0 {
            image[j] = j | (1 << bit);
            coeff[j] = if above(j, bit) % 2 == 0 { 1 } else { -1 };
        }
    }
    WedgeOp { image, coeff }
}

/// `e_{-i}`: contraction with sign `epsilon(i, J) = 2 (-1)^{#{j in J : j > i}}`.
fn op_minus(p: usize, bit: usize) -> WedgeOp {
    let size = 1usize << p;
    let mut image = vec![0; size];
    let mut coeff = vec![0; size];
    for j in 0..size {
        if j & (1 << bit) != 0 {
            image[j] = j & !(1 << bit);
            coeff[j] = if above(j, bit) % 2 == 0 { 2 } else { -2 };
        }
    }
    WedgeOp { image, coeff }
}

/// `e_0(e_J) = (-1)^{|J|} e_J`.
fn op_zero(p: usize) -> WedgeOp {
    let size = 1usize << p;
    WedgeOp {
        image: (0..size).collect(),
        coeff: (0..size)
            .map(|j| if j.count_ones() % 2 == 0 { 1 } else { -1 })
            .collect(),
    }
}

/// Result of the wedge-space construction.
#[derive(Clone, Debug)]
pub struct CliffordOracle {
    /// Character of the whole wedge space.
    pub character: FormalCharacter,
    /// `dim V`.
    pub dim: usize,
    /// `|I^+|`.
    pub positive_indices: usize,
    /// Whether `V` carries the extra index 0.
    pub has_zero_index: bool,
    /// Outcome of the anticommutation and Cartan-eigenvalue checks, `None`
    /// above `RELATION_CAP`.
    pub relations: Option<bool>,
}

/// Builds `Spin(V) = wedge V^+` from a self-dual weight multiset and reads off
/// its character by enumerating subsets of `I^+`.
pub fn clifford_wedge_oracle(
    rs: &Arc<RootSystem>,
    weights: &[(Weight, u64)],
    d: &DistinguishedCoweight,
) -> Result<CliffordOracle> {
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    for (w, m) in weights {
        w.check_rank(rs.rank())?;
        *mult.entry(w.clone()).or_default() += m;
    }
    mult.retain(|_, m| *m > 0);
    if mult.iter().any(|(w, m)| mult.get(&-w) != Some(m)) {
        return Err(Error::NotSelfDual);
    }
    let dim: u64 = mult.values().sum();
    if dim as usize > ORACLE_CAP {
        return Err(Error::TooLarge {
            size: dim as usize,
            cap: ORACLE_CAP,
        });
    }
    let split = split_by_coweight(rs, mult.into_iter().map(|(w, m)| (w, BigInt::from(m))), d)?;

    // I^+ labels in order: d-positive weights with multiplicity, then one zero
    // weight per isotropic pair of zero vectors.
    let mut betas: Vec<Weight> = Vec::new();
    for (b, m) in &split.positive {
        for _ in 0..*m {
            betas.push(b.clone());
        }
    }
    for _ in 0..split.zero_mult / 2 {
        betas.push(rs.zero_weight());
    }
    let has_zero_index = split.zero_mult % 2 == 1;
    let p = betas.len();

    let mut twice = rs.zero_weight();
    for b in &betas {
        twice = &twice + b;
    }
    let lambda = twice
        .halve()
        .ok_or_else(|| Error::NonIntegralLambda(twice.to_string()))?;

    let mut character = FormalCharacter::zero(rs);
    for mask in 0..(1usize << p) {
        let mut w = lambda.clone();
        for (i, b) in betas.iter().enumerate() {
            if mask & (1 << i) != 0 {
                w = &w - b;
            }
        }
        character.add_term(w, BigInt::one());
    }

    let relations = (dim as usize <= RELATION_CAP)
        .then(|| check_relations(p, has_zero_index, &betas, &twice, &character));

    Ok(CliffordOracle {
        character,
        dim: dim as usize,
        positive_indices: p,
        has_zero_index,
        relations,
    })
}

/// Checks `e_a e_b + e_b e_a = 2 delta_{a,-b}` for all `a, b in I`, and that
/// the Cartan part `sum_i beta_i (e_{-i} e_i - e_i e_{-i}) / 4` acts
/// diagonally with the enumerated weights.
fn check_relations(
    p: usize,
    has_zero: bool,
    betas: &[Weight],
    twice_lambda: &Weight,
    character: &FormalCharacter,
) -> bool {
    let size = 1usize << p;
    // (label, operator); label +i, -i, or 0.
    let mut ops: Vec<(i64, Vec<Vec<i64>>)> = Vec::new();
    for bit in 0..p {
        ops.push((bit as i64 + 1, op_plus(p, bit).to_dense()));
        ops.push((-(bit as i64 + 1), op_minus(p, bit).to_dense()));
    }
    if has_zero {
        ops.push((0, op_zero(p).to_dense()));
    }
    for (a, ma) in &ops {
        for (b, mb) in &ops {
            let ab = mat_mul(ma, mb);
            let ba = mat_mul(mb, ma);
            let expect = if *a == -*b { 2 } else { 0 };
            for i in 0..size {
                for j in 0..size {
                    let want = if i == j { expect } else { 0 };
                    if ab[i][j] + ba[i][j] != want {
                        return false;
                    }
                }
            }
        }
    }
    // Each 4 phi(Z_ii) = e_{-i} e_i - e_i e_{-i} must be diagonal with entries
    // +-2; the weight of e_J is then sum_i beta_i * entry / 4.
    let mut weight_of: Vec<Weight> = vec![twice_lambda.scale(0); size];
    let mut twice_weight: Vec<Weight> = weight_of.clone();
    for bit in 0..p {
        let plus = op_plus(p, bit).to_dense();
        let minus = op_minus(p, bit).to_dense();
        let z = mat_mul(&minus, &plus);
        let z2 = mat_mul(&plus, &minus);
        for j in 0..size {
            for i in 0..size {
                let v = z[i][j] - z2[i][j];
                if i != j && v != 0 {
                    return false;
                }
                if i == j {
                    if v.abs() != 2 {
                        return false;
                    }
                    twice_weight[j] = &twice_weight[j] + &betas[bit].scale((v / 2) as i32);
                }
            }
        }
    }
    let mut from_ops = FormalCharacter::zero(character.root_system());
    for (j, tw) in twice_weight.iter().enumerate() {
        match tw.halve() {
            Some(w) => weight_of[j] = w,
            None => return false,
        }
        from_ops.add_term(weight_of[j].clone(), BigInt::one());
    }
    from_ops == *character
}

/// The multiset of a character as `(weight, multiplicity)` pairs.
pub fn weight_multiset(chi: &FormalCharacter) -> Result<Vec<(Weight, u64)>> {
    let mut out: Vec<(Weight, u64)> = chi
        .terms()
        .iter()
        .map(|(w, c)| {
            if c.is_negative() {
                return Err(Error::NotACharacter(format!("negative multiplicity at {w}")));
            }
            Ok((w.clone(), c.to_u64().unwrap_or(u64::MAX)))
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// Zero-weight multiplicity as a machine integer.
pub fn zero_multiplicity(rs: &RootSystem, chi: &FormalCharacter) -> u64 {
    chi.coeff(&rs.zero_weight()).to_u64().unwrap_or(0)
}
