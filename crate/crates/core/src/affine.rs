//! Untwisted affine characters truncated in the `delta` grading.
//!
//! A character is stored as finite characters indexed by `delta`-degree,
//! keeping the degrees `top, top - 1, ..., top - depth`. Inner products of
//! translations use the normalization `(theta, theta) = 2`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::charalg::{
    adjoint_character, decompose, irreducible_character, skew_symmetrizer, FormalCharacter,
};
use crate::error::{Error, Result};
use crate::report::{first_diff, Report};
use crate::rootsys::RootSystem;
use crate::spin::{spin0_character, DistinguishedCoweight};
use crate::weight::Weight;

/// Largest rank accepted by the affine Weyl group enumeration without
/// `allow_large`.
pub const RANK_GATE: usize = 2;

/// `finite + level * Lambda_0 + delta_degree * delta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub finite: Weight,
    pub level: i64,
    pub delta_degree: i64,
}

impl AffineWeight {
    pub fn new(finite: Weight, level: i64, delta_degree: i64) -> Self {
        Self {
            finite,
            level,
            delta_degree,
        }
    }

    /// `rho + h^vee Lambda_0`.
    pub fn rho_hat(rs: &RootSystem) -> Self {
        Self::new(rs.rho().clone(), rs.dual_coxeter_number(), 0)
    }

    /// Sum of the affine fundamental weights attached to short simple roots.
    /// When every root counts as short this includes `Lambda_0`.
    pub fn rho_s_hat(rs: &RootSystem) -> Self {
        let level = rs.short_dual_coxeter_number() + rs.is_simply_laced() as i64;
        Self::new(rs.rho_s().clone(), level, 0)
    }

    pub fn is_dominant(&self, rs: &RootSystem) -> bool {
        self.finite.is_dominant() && rs.pair_theta_coroot(&self.finite) <= self.level
    }

    pub fn to_json(&self) -> Value {
        json!({ "finite": self.finite, "level": self.level, "delta": self.delta_degree })
    }
}

/// A character truncated to `delta`-degrees `top - depth ..= top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineCharacter {
    pub rs: Arc<RootSystem>,
    pub level: i64,
    pub top: i64,
    pub depth: usize,
    /// Keyed by `delta`-degree; every degree in the window is present.
    pub slices: BTreeMap<i64, FormalCharacter>,
}

impl AffineCharacter {
    fn from_series(rs: &Arc<RootSystem>, level: i64, top: i64, series: Vec<FormalCharacter>) -> Self {
        let depth = series.len() - 1;
        let slices = series
            .into_iter()
            .enumerate()
            .map(|(j, c)| (top - j as i64, c))
            .collect();
        Self {
            rs: rs.clone(),
            level,
            top,
            depth,
            slices,
        }
    }

    pub fn slice(&self, delta: i64) -> Option<&FormalCharacter> {
        self.slices.get(&delta)
    }

    /// Coefficient of `finite + level Lambda_0 + delta * delta`.
    pub fn coeff(&self, w: &AffineWeight) -> BigInt {
        if w.level != self.level {
            return BigInt::zero();
        }
        self.slices
            .get(&w.delta_degree)
            .map(|s| s.coeff(&w.finite))
            .unwrap_or_default()
    }

    /// Slices listed from the top down.
    pub fn series(&self) -> Vec<&FormalCharacter> {
        self.slices.values().rev().collect()
    }

    pub fn to_json(&self) -> Value {
        let slices: Vec<Value> = self
            .slices
            .iter()
            .rev()
            .map(|(m, c)| json!({ "delta": m, "terms": c.terms_json() }))
            .collect();
        json!({ "rs": self.rs.name(), "level": self.level, "K": self.depth, "slices": slices })
    }

    pub fn is_w_invariant(&self) -> bool {
        self.slices.values().all(|s| s.is_w_invariant())
    }

    /// Same character with the level forgotten, used when restricting to
    /// `g + C d`.
    pub fn forget_level(&self) -> Self {
        Self {
            level: 0,
            ..self.clone()
        }
    }
}

/// Compares two truncated characters over the common window.
pub fn compare_affine(identity: impl Into<String>, lhs: &AffineCharacter, rhs: &AffineCharacter) -> Report {
    let pass = lhs == rhs;
    let mut r = Report::new(identity, &lhs.to_json(), &rhs.to_json(), pass);
    if !pass {
        r.first_diff = if lhs.level != rhs.level || lhs.top != rhs.top || lhs.depth != rhs.depth {
            Some(json!({
                "lhs": { "level": lhs.level, "top": lhs.top, "K": lhs.depth },
                "rhs": { "level": rhs.level, "top": rhs.top, "K": rhs.depth },
            }))
        } else {
            lhs.slices.iter().rev().find_map(|(m, a)| {
                let b = &rhs.slices[m];
                first_diff(a, b).map(|d| json!({ "delta": m, "diff": d }))
            })
        };
    }
    r
}

fn rank_gate(rs: &RootSystem, allow_large: bool) -> Result<()> {
    if rs.rank() > RANK_GATE && !allow_large {
        return Err(Error::RankGate {
            rank: rs.rank(),
            gate: RANK_GATE,
        });
    }
    Ok(())
}

type Series = Vec<FormalCharacter>;

fn series_zero(rs: &Arc<RootSystem>, depth: usize) -> Series {
    vec![FormalCharacter::zero(rs); depth + 1]
}

fn series_one(rs: &Arc<RootSystem>, depth: usize) -> Series {
    let mut s = series_zero(rs, depth);
    s[0] = FormalCharacter::one(rs);
    s
}

fn series_mul(a: &Series, b: &Series) -> Result<Series> {
    let depth = a.len() - 1;
    let rs = a[0].root_system().clone();
    let mut out = series_zero(&rs, depth);
    for (i, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(depth + 1 - i) {
            if y.is_empty() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.multiply(y)?)?;
        }
    }
    Ok(out)
}

/// Multiplies in place by `(1 + sign * e^{beta} q^k)`.
fn series_mul_binomial(s: &mut Series, beta: &Weight, k: usize, sign: i64) {
    let depth = s.len() - 1;
    for j in (k..=depth).rev() {
        let shifted: Vec<(Weight, BigInt)> = s[j - k]
            .terms()
            .iter()
            .map(|(w, c)| (w + beta, c * sign))
            .collect();
        for (w, c) in shifted {
            s[j].add_term(w, c);
        }
    }
}

/// Level-0 character of the loop module: `chi` in every degree `-K..=K`.
pub fn affinize_character(rs: &Arc<RootSystem>, chi: &FormalCharacter, k: usize) -> AffineCharacter {
    let series = vec![chi.clone(); 2 * k + 1];
    AffineCharacter::from_series(rs, 0, k as i64, series)
}

/// Lattice data for the translations `t_gamma`, `gamma` in the span of the
/// `nu(alpha_i^vee) = r_i alpha_i`.
struct Translations {
    /// `r_i = (long length) / (alpha_i length)`.
    r: Vec<i64>,
    /// `G_ij = (nu(alpha_i^vee), nu(alpha_j^vee))`.
    gram: Vec<Vec<i64>>,
}

impl Translations {
    fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let rmax = rs.length_ratio();
        let r: Vec<i64> = rs.half_lengths().iter().map(|&d| rmax / d).collect();
        let gram = (0..n)
            .map(|i| (0..n).map(|j| rs.cartan().entry(i, j) * r[j]).collect())
            .collect();
        Self { r, gram }
    }

    /// Dynkin labels of `sum n_j nu(alpha_j^vee)`.
    fn labels(&self, n: &[i64]) -> Vec<i64> {
        self.gram
            .iter()
            .map(|row| row.iter().zip(n).map(|(g, x)| g * x).sum())
            .collect()
    }

    /// Integer box containing every `n` with
    /// `(mu, gamma) + level |gamma|^2 / 2 <= depth`.
    fn bounds(&self, mu: &Weight, level: i64, depth: i64, scale: i64) -> Vec<(i64, i64)> {
        let k = self.r.len();
        let g: Vec<Vec<BigRational>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let ginv = invert(&g);
        let lvl = BigRational::from_integer(level.into());
        let b: Vec<BigRational> = mu.coords().iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let c: Vec<BigRational> = (0..k)
            .map(|i| -(0..k).map(|j| &ginv[i][j] * &b[j]).sum::<BigRational>() / &lvl)
            .collect();
        let mut cgc = BigRational::zero();
        for i in 0..k {
            for j in 0..k {
                cgc += &c[i] * &g[i][j] * &c[j];
            }
        }
        let radius = BigRational::from_integer((2 * depth).into()) / &lvl + cgc;
        (0..k)
            .map(|i| {
                let x = (&radius * &ginv[i][i]).ceil().to_integer().max(BigInt::zero());
                let mut s = x.sqrt();
                if &s * &s < x {
                    s += 1;
                }
                let s = BigRational::from_integer(s * scale);
                let lo = (&c[i] - &s).floor().to_integer().to_i64().unwrap();
                let hi = (&c[i] + &s).ceil().to_integer().to_i64().unwrap();
                (lo, hi)
            })
            .collect()
    }

    /// Every `(gamma labels, depth)` with depth in `0..=max_depth`, where the
    /// depth of `t_gamma(mu + level Lambda_0)` below the top is
    /// `(mu, gamma) + level |gamma|^2 / 2`.
    fn enumerate(&self, mu: &Weight, level: i64, max_depth: i64, scale: i64) -> Vec<(Weight, i64)> {
        let bounds = self.bounds(mu, level, max_depth, scale);
        let mut out = Vec::new();
        let mut n: Vec<i64> = bounds.iter().map(|b| b.0).collect();
        loop {
            let gamma = self.labels(&n);
            let norm: i64 = n.iter().zip(&gamma).map(|(a, b)| a * b).sum();
            let pair: i64 = n.iter().zip(mu.coords()).map(|(a, &b)| a * b as i64).sum();
            debug_assert_eq!(norm % 2, 0);
            let d = pair + level * norm / 2;
            if (0..=max_depth).contains(&d) {
                out.push((Weight::new(gamma.iter().map(|&x| x as i32)), d));
            }
            // odometer
            let mut i = 0;
            loop {
                if i == n.len() {
                    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
                    return out;
                }
                if n[i] < bounds[i].1 {
                    n[i] += 1;
                    break;
                }
                n[i] = bounds[i].0;
                i += 1;
            }
        }
    }
}

fn invert(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero()).expect("singular Gram matrix");
        a.swap(p, k);
        inv.swap(p, k);
        let piv = a[k][k].clone();
        for j in 0..n {
            a[k][j] = &a[k][j] / &piv;
            inv[k][j] = &inv[k][j] / &piv;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in 0..n {
                    let (x, y) = (a[k][j].clone(), inv[k][j].clone());
                    a[i][j] -= &f * x;
                    inv[i][j] -= &f * y;
                }
            }
        }
    }
    inv
}

/// `prod_{k=1..depth} [prod_{a in R} (1 - e^{-a} q^k) (1 - q^k)^n]` as a
/// series in `q = e^{-delta}`.
fn imaginary_denominator(rs: &Arc<RootSystem>, depth: usize) -> Series {
    let mut s = series_one(rs, depth);
    let zero = rs.zero_weight();
    for k in 1..=depth {
        for a in rs.positive_roots() {
            series_mul_binomial(&mut s, a, k, -1);
            series_mul_binomial(&mut s, &-a, k, -1);
        }
        for _ in 0..rs.rank() {
            series_mul_binomial(&mut s, &zero, k, -1);
        }
    }
    s
}

/// `A_{hat rho} = e^{rho + h^vee Lambda_0} prod (...)` expanded from the
/// product side, divided by `e^{h^vee Lambda_0}`.
fn denominator_product_series(rs: &Arc<RootSystem>, depth: usize) -> Result<Series> {
    let mut s = imaginary_denominator(rs, depth);
    let finite = crate::charalg::denominator_product(rs)?;
    for x in s.iter_mut() {
        *x = x.multiply(&finite)?;
    }
    Ok(s)
}

/// `sum sign(w hat) e^{w hat (hat rho)}` over the affine Weyl group, to the
/// given depth.
fn denominator_sum_series(rs: &Arc<RootSystem>, depth: usize) -> Result<Series> {
    let tr = Translations::new(rs);
    let level = rs.dual_coxeter_number();
    let mut s = series_zero(rs, depth);
    for (gamma, d) in tr.enumerate(rs.rho(), level, depth as i64, 1) {
        let nu = rs.rho() + &gamma.scale(level as i32);
        let a = skew_symmetrizer(rs, &nu)?;
        s[d as usize] = s[d as usize].add(&a)?;
    }
    Ok(s)
}

/// Checks the affine denominator identity slice by slice up to depth `k`.
pub fn affine_denominator_check(rs: &Arc<RootSystem>, k: usize, allow_large: bool) -> Result<bool> {
    rank_gate(rs, allow_large)?;
    Ok(denominator_product_series(rs, k)? == denominator_sum_series(rs, k)?)
}

fn affine_irreducible_scaled(
    rs: &Arc<RootSystem>,
    highest: &AffineWeight,
    depth: usize,
    scale: i64,
) -> Result<AffineCharacter> {
    let tr = Translations::new(rs);
    let mu = &highest.finite + rs.rho();
    let level = highest.level + rs.dual_coxeter_number();
    // Numerator divided by A_rho, slice by slice: each regular
    // mu + level*gamma contributes sign * chi_{dominant - rho}.
    let mut numer = series_zero(rs, depth);
    let mut coeffs: Vec<BTreeMap<Weight, i64>> = vec![BTreeMap::new(); depth + 1];
    for (gamma, d) in tr.enumerate(&mu, level, depth as i64, scale) {
        let nu = &mu + &gamma.scale(level as i32);
        let (dom, sign, regular) = rs.dominant_representative(&nu);
        if regular {
            *coeffs[d as usize].entry(&dom - rs.rho()).or_default() += sign as i64;
        }
    }
    let mut cache: HashMap<Weight, FormalCharacter> = HashMap::new();
    for (j, slice) in coeffs.iter().enumerate() {
        for (lam, &c) in slice {
            if c == 0 {
                continue;
            }
            if !cache.contains_key(lam) {
                cache.insert(lam.clone(), irreducible_character(rs, lam)?);
            }
            numer[j] = numer[j].add(&cache[lam].scale(&BigInt::from(c)))?;
        }
    }
    // Divide by the imaginary part of the denominator: P has constant term 1.
    let p = imaginary_denominator(rs, depth);
    let mut ch: Series = Vec::with_capacity(depth + 1);
    for j in 0..=depth {
        let mut x = numer[j].clone();
        for i in 1..=j {
            if p[i].is_empty() || ch[j - i].is_empty() {
                continue;
            }
            x = x.sub(&p[i].multiply(&ch[j - i])?)?;
        }
        ch.push(x);
    }
    Ok(AffineCharacter::from_series(rs, highest.level, highest.delta_degree, ch))
}

/// Weyl–Kac character of `L(highest)` to depth `k`.
pub fn affine_irreducible_character(
    rs: &Arc<RootSystem>,
    highest: &AffineWeight,
    k: usize,
    allow_large: bool,
) -> Result<AffineCharacter> {
    highest.finite.check_rank(rs.rank())?;
    if highest.level <= 0 {
        return Err(Error::LevelNotPositive(highest.level));
    }
    if !highest.is_dominant(rs) {
        return Err(Error::NotDominantAffine(highest.to_json().to_string()));
    }
    rank_gate(rs, allow_large)?;
    affine_irreducible_scaled(rs, highest, k, 1)
}

/// Recomputes with every translation bound doubled and compares.
pub fn enumeration_is_stable(rs: &Arc<RootSystem>, highest: &AffineWeight, k: usize) -> Result<bool> {
    let a = affine_irreducible_character(rs, highest, k, true)?;
    let b = affine_irreducible_scaled(rs, highest, k, 2)?;
    Ok(a == b)
}

/// Level and top weight of the reduced Spin of the loop module.
pub fn affine_spin0_data(rs: &RootSystem, chi: &FormalCharacter) -> Result<(i64, Weight)> {
    let d = DistinguishedCoweight::rho_vee(rs);
    let mut twice_c = 0i64;
    let mut twice_nu = rs.zero_weight();
    for (w, m) in chi.terms() {
        if w.is_zero() {
            continue;
        }
        let p = d.pair_scaled(rs, w);
        if p == 0 {
            return Err(Error::ZeroPairing(w.to_string()));
        }
        if p > 0 {
            let m = m.to_i64().ok_or_else(|| Error::NotACharacter(m.to_string()))?;
            let t = rs.pair_theta_coroot(w);
            twice_c += m * t * t;
            twice_nu = &twice_nu + &w.scale(m as i32);
        }
    }
    if twice_c % 2 != 0 {
        return Err(Error::NonIntegralNu(format!("level {twice_c}/2")));
    }
    let nu = twice_nu
        .halve()
        .ok_or_else(|| Error::NonIntegralNu(format!("top weight {twice_nu}/2")))?;
    Ok((twice_c / 2, nu))
}

/// `e^{nu + c Lambda_0} prod_{b(d) > 0} (1 + e^{-b})^{m_b}
/// prod_{k > 0, b} (1 + e^{-b - k delta})^{m_b}` to depth `k`.
pub fn affine_spin0_character(rs: &Arc<RootSystem>, chi: &FormalCharacter, k: usize) -> Result<AffineCharacter> {
    let (level, _) = affine_spin0_data(rs, chi)?;
    let top = spin0_character(rs, chi, &DistinguishedCoweight::rho_vee(rs))?;
    let mut s = series_zero(rs, k);
    s[0] = top;
    let mut terms: Vec<(&Weight, &BigInt)> = chi.terms().iter().collect();
    terms.sort();
    for j in 1..=k {
        for (b, m) in &terms {
            let m = m.to_u64().ok_or_else(|| Error::NotACharacter(m.to_string()))?;
            for _ in 0..m {
                series_mul_binomial(&mut s, &-*b, j, 1);
            }
        }
    }
    Ok(AffineCharacter::from_series(rs, level, 0, s))
}

/// `sum_j wedge^j(chi)` through Newton's identities and Adams operations.
pub fn exterior_powers(chi: &FormalCharacter, max: usize) -> Result<Vec<FormalCharacter>> {
    let rs = chi.root_system().clone();
    let adams: Vec<FormalCharacter> = (0..=max)
        .map(|i| {
            chi.map_weights(&rs, |w| Ok(w.scale(i as i32)))
                .expect("scaling never fails")
        })
        .collect();
    let mut e = vec![FormalCharacter::one(&rs)];
    for j in 1..=max {
        let mut acc = FormalCharacter::zero(&rs);
        for i in 1..=j {
            let t = e[j - i].multiply(&adams[i])?;
            acc = if i % 2 == 1 { acc.add(&t)? } else { acc.sub(&t)? };
        }
        let jj = BigInt::from(j);
        let mut out = FormalCharacter::zero(&rs);
        for (w, c) in acc.terms() {
            if !(c % &jj).is_zero() {
                return Err(Error::NotACharacter(format!("exterior power {j} at {w}")));
            }
            out.add_term(w.clone(), c / &jj);
        }
        e.push(out);
    }
    Ok(e)
}

/// `prod_{k=1..depth} wedge^*(t^k chi)` with `t^k` lowering the degree by `k`.
fn loop_exterior_series(chi: &FormalCharacter, depth: usize) -> Result<Series> {
    let rs = chi.root_system().clone();
    let mut s = series_one(&rs, depth);
    for k in 1..=depth {
        let powers = exterior_powers(chi, depth / k)?;
        let mut f = series_zero(&rs, depth);
        for (j, p) in powers.into_iter().enumerate() {
            f[j * k] = p;
        }
        s = series_mul(&s, &f)?;
    }
    Ok(s)
}

/// The reduced Spin of the loop module of `chi`, level forgotten, against
/// `Spin_0(chi) (x) wedge^*(t chi) (x) wedge^*(t^2 chi) ...`.
pub fn verify_prop6(rs: &Arc<RootSystem>, chi: &FormalCharacter, k: usize) -> Result<Report> {
    let lhs = affine_spin0_character(rs, chi, k)?.forget_level();
    let mut rhs = loop_exterior_series(chi, k)?;
    let top = spin0_character(rs, chi, &DistinguishedCoweight::rho_vee(rs))?;
    for x in rhs.iter_mut() {
        *x = x.multiply(&top)?;
    }
    let rhs = AffineCharacter::from_series(rs, 0, 0, rhs);
    Ok(compare_affine("prop6", &lhs, &rhs))
}

/// Factorizations of `L(rho hat)` and optionally `L(2 mu hat + rho hat)`
/// restricted to `g + C d`.
pub fn verify_prop6_7_8(
    rs: &Arc<RootSystem>,
    k: usize,
    mu_hat: Option<&AffineWeight>,
    allow_large: bool,
) -> Result<Report> {
    rank_gate(rs, allow_large)?;
    let adj = adjoint_character(rs);
    let prop6 = verify_prop6(rs, &adj, k)?;

    let spin = affine_spin0_character(rs, &adj, k)?;
    let rho_hat = AffineWeight::rho_hat(rs);
    let irr = affine_irreducible_character(rs, &rho_hat, k, allow_large)?;
    let prop7 = compare_affine("prop7", &spin, &irr)
        .with_detail("level", json!(spin.level));

    let mut report = Report::verdict(format!("prop6_7_8:{}:K={k}", rs.name()), true)
        .and("prop6", prop6)
        .and("prop7", prop7);
    if let Some(mu) = mu_hat {
        report = report.and("prop8", verify_prop8(rs, mu, k, allow_large)?);
    }
    Ok(report)
}

/// `L(2 mu hat + rho hat) = (sum_i V(2 mu_i + rho)) (x) wedge^*(t g) (x) ...`
/// where the slices of `L(mu hat)` decompose as `sum_i V(mu_i)`, each
/// `V(2 mu_i + rho)` sitting at twice the degree of `V(mu_i)`.
pub fn verify_prop8(rs: &Arc<RootSystem>, mu_hat: &AffineWeight, k: usize, allow_large: bool) -> Result<Report> {
    if mu_hat.level < 0 || !mu_hat.finite.is_dominant() || rs.pair_theta_coroot(&mu_hat.finite) > mu_hat.level {
        return Err(Error::NotDominantAffine(mu_hat.to_json().to_string()));
    }
    if mu_hat.delta_degree != 0 {
        return Err(Error::UnsupportedCase("mu hat must have delta-degree 0".into()));
    }
    let top = AffineWeight::new(
        &mu_hat.finite.scale(2) + rs.rho(),
        2 * mu_hat.level + rs.dual_coxeter_number(),
        0,
    );
    let lhs = affine_irreducible_character(rs, &top, k, allow_large)?.forget_level();

    let half = k / 2;
    let mu_slices: Vec<FormalCharacter> = if mu_hat.level == 0 {
        // level 0 dominant forces mu = 0: the trivial module
        let mut v = vec![FormalCharacter::zero(rs); half + 1];
        v[0] = FormalCharacter::one(rs);
        v
    } else {
        affine_irreducible_character(rs, mu_hat, half, allow_large)?
            .series()
            .into_iter()
            .cloned()
            .collect()
    };
    let mut doubled = series_zero(rs, k);
    let mut constituents = Vec::new();
    for (j, slice) in mu_slices.iter().enumerate() {
        for (mu, m) in decompose(rs, slice)? {
            let w = &mu.scale(2) + rs.rho();
            doubled[2 * j] = doubled[2 * j].add(&irreducible_character(rs, &w)?.scale(&m))?;
            constituents.push(json!({ "depth": j, "weight": mu, "mult": crate::charalg::bigint_json(&m) }));
        }
    }
    let rhs = series_mul(&doubled, &loop_exterior_series(&adjoint_character(rs), k)?)?;
    let rhs = AffineCharacter::from_series(rs, 0, 0, rhs);
    Ok(compare_affine("prop8", &lhs, &rhs).with_detail("mu_constituents", Value::Array(constituents)))
}

/// `alpha(theta^vee) in {0, 1}` for every positive root other than `theta`.
pub fn theta_coroot_pairings_small(rs: &RootSystem) -> bool {
    rs.positive_roots()
        .iter()
        .filter(|a| *a != rs.theta())
        .all(|a| matches!(rs.pair_theta_coroot(a), 0 | 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoprimaryCase {
    Adjoint,
    ThetaS,
    TwoThetaS,
}

impl std::str::FromStr for CoprimaryCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjoint" => Ok(Self::Adjoint),
            "theta_s" => Ok(Self::ThetaS),
            "two_theta_s" => Ok(Self::TwoThetaS),
            _ => Err(Error::UnsupportedCase(s.to_string())),
        }
    }
}

impl std::fmt::Display for CoprimaryCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Adjoint => "adjoint",
            Self::ThetaS => "theta_s",
            Self::TwoThetaS => "two_theta_s",
        })
    }
}

/// `true` when the name is `A1` or of type `B`.
fn is_b_like(rs: &RootSystem) -> bool {
    rs.rank() == 1 || rs.name().starts_with('B')
}

/// `Lambda' <= Lambda` in the affine root order at equal level:
/// `Lambda - Lambda' = x_0 alpha_0 + sum x_i alpha_i` with `x >= 0`.
pub fn affine_root_order_leq(rs: &RootSystem, lower: &AffineWeight, upper: &AffineWeight) -> bool {
    if lower.level != upper.level {
        return false;
    }
    let x0 = upper.delta_degree - lower.delta_degree;
    if x0 < 0 {
        return false;
    }
    let diff = &(&upper.finite - &lower.finite) + &rs.theta().scale(x0 as i32);
    match rs.alpha_coords(&diff) {
        Some(x) => x.iter().all(|&v| v >= 0),
        None => false,
    }
}

fn coprimary_module(rs: &RootSystem, case: CoprimaryCase) -> Result<(Weight, Weight)> {
    Ok(match case {
        CoprimaryCase::Adjoint => (rs.theta().clone(), rs.rho().clone()),
        CoprimaryCase::ThetaS => {
            if rs.is_simply_laced() && rs.rank() > 1 {
                return Err(Error::UnsupportedCase(format!("theta_s on simply laced {}", rs.name())));
            }
            (rs.theta_s().clone(), rs.rho_s().clone())
        }
        CoprimaryCase::TwoThetaS => {
            if !is_b_like(rs) {
                return Err(Error::UnsupportedCase(format!("two_theta_s on {}", rs.name())));
            }
            (rs.theta_s().scale(2), &rs.rho_s().scale(2) + rs.rho())
        }
    })
}

/// `Spin_0(V)` has a single constituent with the expected highest weight.
pub fn coprimary_finite(rs: &Arc<RootSystem>, case: CoprimaryCase) -> Result<Report> {
    let (v_weight, expect) = coprimary_module(rs, case)?;
    let chi = irreducible_character(rs, &v_weight)?;
    let finite = spin0_character(rs, &chi, &DistinguishedCoweight::rho_vee(rs))?;
    let parts = decompose(rs, &finite)?;
    let single = parts.len() == 1 && parts[0].0 == expect && parts[0].1.is_one();
    Ok(Report::verdict(format!("single_constituent:{}:{case}", rs.name()), single)
        .with_detail("V", json!(v_weight))
        .with_detail("expected", json!(expect))
        .with_detail(
            "constituents",
            Value::Array(
                parts
                    .iter()
                    .map(|(w, m)| json!([w, crate::charalg::bigint_json(m)]))
                    .collect(),
            ),
        ))
}

/// Irreducibility of the reduced Spin for the three candidate modules.
pub fn coprimary_check(rs: &Arc<RootSystem>, case: CoprimaryCase, k: usize, allow_large: bool) -> Result<Report> {
    let (v_weight, _) = coprimary_module(rs, case)?;
    let chi = irreducible_character(rs, &v_weight)?;
    let mut report = Report::verdict(format!("coprimary:{}:{case}:K={k}", rs.name()), true)
        .with_detail("V", json!(v_weight))
        .and("finite", coprimary_finite(rs, case)?);

    let spin = affine_spin0_character(rs, &chi, k)?;
    let (level, nu) = affine_spin0_data(rs, &chi)?;
    report = report.with_detail("level", json!(level)).with_detail("nu", json!(nu));
    match case {
        CoprimaryCase::Adjoint | CoprimaryCase::ThetaS => {
            let hw = if case == CoprimaryCase::Adjoint {
                AffineWeight::rho_hat(rs)
            } else {
                AffineWeight::rho_s_hat(rs)
            };
            let irr = affine_irreducible_character(rs, &hw, k, allow_large)?;
            let cmp = compare_affine("affine_irreducible", &spin, &irr).with_detail("highest", hw.to_json());
            report = report.and("affine", cmp);
        }
        CoprimaryCase::TwoThetaS => {
            let lam = AffineWeight::new(nu.clone(), level, 0);
            let lam2 = AffineWeight::new(&nu + &rs.theta_s().scale(2), level, -1);
            let c1 = spin.coeff(&lam);
            let c2 = if k >= 1 { spin.coeff(&lam2) } else { BigInt::zero() };
            let both_dominant = lam.is_dominant(rs) && lam2.is_dominant(rs);
            let incomparable = !affine_root_order_leq(rs, &lam2, &lam);
            // Lambda - Lambda' = -2 theta_s + delta
            let diff = json!({ "finite": (-&rs.theta_s().scale(2)), "delta": 1 });
            let obstruction = both_dominant && c1.is_positive() && c2.is_positive() && incomparable;
            let mut ob = Report::verdict("not_coprimary", obstruction)
                .with_detail("Lambda", lam.to_json())
                .with_detail("Lambda_prime", lam2.to_json())
                .with_detail("Lambda_minus_Lambda_prime", diff)
                .with_detail("mult_Lambda", crate::charalg::bigint_json(&c1))
                .with_detail("mult_Lambda_prime", crate::charalg::bigint_json(&c2))
                .with_detail("Lambda_prime_below_Lambda", json!(!incomparable));
            if rs.rank() <= RANK_GATE || allow_large {
                let irr = affine_irreducible_character(rs, &lam, k, true)?;
                ob = ob.with_detail("equals_affine_irreducible", json!(irr == spin));
            }
            report = report.and("affine", ob);
        }
    }
    Ok(report)
}

/// Twisted type whose imaginary roots the dual multiset reproduces, as
/// `(N, r)` for `X_N^{(r)}`.
fn twisted_type(rs: &RootSystem, n_short: usize) -> Result<(usize, i64, String)> {
    let n = rs.rank();
    let r = rs.length_ratio();
    let t = if r == 3 {
        (4, 3, "D4^(3)".to_string())
    } else if n == 4 && n_short == 2 {
        (6, 2, "E6^(2)".to_string())
    } else if n_short == 1 {
        (2 * n - 1, 2, format!("A{}^(2)", 2 * n - 1))
    } else if n_short == n - 1 {
        (n + 1, 2, format!("D{}^(2)", n + 1))
    } else {
        return Err(Error::UnsupportedCase(rs.name().to_string()));
    };
    Ok(t)
}

/// Finite shadows of the dual-root-system facts: `r R_s+ u R_l+` is the
/// positive system of the transposed Cartan matrix, its half-sum is
/// `(r - 1) rho_s + rho`, and imaginary multiplicities match the twisted
/// affine algebra up to degree `k`.
pub fn dual_rootsystem_facts(rs: &Arc<RootSystem>, k: usize) -> Result<Report> {
    if rs.is_simply_laced() {
        return Err(Error::SimplyLaced(rs.name().to_string()));
    }
    let n = rs.rank();
    let r = rs.length_ratio();
    let dual = rs.dual()?;
    let kappa: Vec<i64> = (0..n).map(|i| if rs.is_short_simple(i) { r } else { 1 }).collect();

    let mut ours: Vec<Vec<i64>> = rs
        .positive_root_coords()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let s = if rs.is_short_root(i) { r } else { 1 };
            c.iter().map(|x| x * s).collect()
        })
        .collect();
    let mut theirs: Vec<Vec<i64>> = dual
        .positive_root_coords()
        .iter()
        .map(|c| c.iter().zip(&kappa).map(|(x, k)| x * k).collect())
        .collect();
    ours.sort();
    theirs.sort();
    let roots_ok = ours == theirs;

    // rho of the dual in our simple-root basis, doubled
    let twice_dual_rho: Vec<i64> = (0..n).map(|i| theirs.iter().map(|c| c[i]).sum()).collect();
    let det = rs.det();
    let target = &rs.rho_s().scale((r - 1) as i32) + rs.rho();
    let target_twice: Vec<i64> = rs.alpha_coords_scaled(&target).iter().map(|x| 2 * x).collect();
    let rho_ok = twice_dual_rho.iter().map(|x| x * det).collect::<Vec<_>>() == target_twice;

    let n_short = (0..n).filter(|&i| rs.is_short_simple(i)).count();
    let (big_n, rr, name) = twisted_type(rs, n_short)?;
    let mut rows = Vec::new();
    let mut mult_ok = true;
    for j in 1..=k as i64 {
        let from_multiset = (n - n_short) as i64 + if j % r == 0 { n_short as i64 } else { 0 };
        let kac = if j % rr == 0 {
            n as i64
        } else {
            (big_n as i64 - n as i64) / (rr - 1)
        };
        mult_ok &= from_multiset == kac;
        rows.push(json!({ "j": j, "multiset": from_multiset, "twisted": kac }));
    }

    Ok(Report::verdict(format!("dual_facts:{}:K={k}", rs.name()), true)
        .and("dual_positive_roots", Report::verdict("r R_s+ u R_l+", roots_ok).with_detail("dual", json!(dual.name())))
        .and("dual_rho", Report::verdict("rho_dual = (r-1) rho_s + rho", rho_ok))
        .and(
            "imaginary_multiplicities",
            Report::verdict("mult(j delta)", mult_ok)
                .with_detail("twisted", json!(name))
                .with_detail("rows", Value::Array(rows)),
        ))
}
