//! Sparse formal characters over the weight lattice.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weight::Weight;

/// Above this many term pairs `multiply` fans out over the rayon pool.
const PAR_THRESHOLD: usize = 1 << 14;

/// A finitely supported map from weights to integers. Zero coefficients are
/// never stored.
#[derive(Clone)]
pub struct FormalCharacter {
    rs: Arc<RootSystem>,
    terms: HashMap<Weight, BigInt>,
}

impl PartialEq for FormalCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.rs == other.rs && self.terms == other.terms
    }
}

impl Eq for FormalCharacter {}

impl fmt::Debug for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.rs.name())?;
        for (i, (w, c)) in self.sorted_terms().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}:{c}")?;
        }
        write!(f, "]")
    }
}

impl FormalCharacter {
    pub fn zero(rs: &Arc<RootSystem>) -> Self {
        Self {
            rs: rs.clone(),
            terms: HashMap::new(),
        }
    }

    /// The trivial character `e^0`.
    pub fn one(rs: &Arc<RootSystem>) -> Self {
        Self::monomial(rs, rs.zero_weight(), 1)
    }

    pub fn monomial(rs: &Arc<RootSystem>, w: Weight, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(rs);
        out.add_term(w, c.into());
        out
    }

    pub fn from_terms<I, C>(rs: &Arc<RootSystem>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(rs);
        for (w, c) in terms {
            w.check_rank(rs.rank())?;
            out.add_term(w, c.into());
        }
        Ok(out)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn terms(&self) -> &HashMap<Weight, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.rs != other.rs {
            return Err(Error::RootSystemMismatch(
                self.rs.name().to_string(),
                other.rs.name().to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.rs);
        }
        Self {
            rs: self.rs.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Convolution of term maps.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() * large.len() < PAR_THRESHOLD || small.len() < 2 {
            let mut out = Self::zero(&self.rs);
            for (a, ca) in &small.terms {
                for (b, cb) in &large.terms {
                    out.add_term(a + b, ca * cb);
                }
            }
            return Ok(out);
        }
        let left: Vec<(&Weight, &BigInt)> = small.terms.iter().collect();
        let chunk = left.len().div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
        let partial: Vec<HashMap<Weight, BigInt>> = left
            .par_chunks(chunk)
            .map(|part| {
                let mut acc: HashMap<Weight, BigInt> = HashMap::new();
                for (a, ca) in part {
                    for (b, cb) in &large.terms {
                        *acc.entry(*a + b).or_default() += *ca * cb;
                    }
                }
                acc
            })
            .collect();
        let mut out = Self::zero(&self.rs);
        for acc in partial {
            for (w, c) in acc {
                out.add_term(w, c);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one(&self.rs);
        for _ in 0..k {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// `sum c_l e^{2l}`.
    pub fn square_weights(&self) -> Self {
        Self {
            rs: self.rs.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.scale(2), c.clone())).collect(),
        }
    }

    /// `sum c_l e^{-l}`.
    pub fn dual(&self) -> Self {
        Self {
            rs: self.rs.clone(),
            terms: self.terms.iter().map(|(w, c)| (-w, c.clone())).collect(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.terms.iter().all(|(w, c)| self.terms.get(&-w) == Some(c))
    }

    pub fn is_w_invariant(&self) -> bool {
        self.terms.iter().all(|(w, c)| {
            (0..self.rs.rank()).all(|i| self.terms.get(&self.rs.reflect_unchecked(i, w)) == Some(c))
        })
    }

    /// Sum of all coefficients, the dimension for a genuine character.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Terms ordered by descending height, then descending Dynkin labels.
    pub fn sorted_terms(&self) -> Vec<(&Weight, &BigInt)> {
        let mut v: Vec<(i64, &Weight, &BigInt)> = self
            .terms
            .iter()
            .map(|(w, c)| (self.rs.height_scaled(w), w, c))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(a.1)));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    pub fn terms_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(w, c)| json!([w, bigint_json(c)]))
                .collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({ "rs": self.rs.name(), "terms": self.terms_json() })
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn content_hash(&self) -> String {
        sha256_hex(self.to_json().to_string().as_bytes())
    }

    /// Applies `f` to every weight, summing coefficients that collide.
    pub fn map_weights<F>(&self, target: &Arc<RootSystem>, mut f: F) -> Result<Self>
    where
        F: FnMut(&Weight) -> Result<Weight>,
    {
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            out.add_term(f(w)?, c.clone());
        }
        Ok(out)
    }
}

/// A JSON number when it fits in `i64`, otherwise a decimal string.
pub fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub(crate) fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    lambda.check_rank(rs.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// `sum_w sign(w) e^{w(mu)}`; zero when `mu` is fixed by some reflection.
pub fn skew_symmetrizer(rs: &Arc<RootSystem>, mu: &Weight) -> Result<FormalCharacter> {
    mu.check_rank(rs.rank())?;
    let (_, _, regular) = rs.dominant_representative(mu);
    if !regular {
        return Ok(FormalCharacter::zero(rs));
    }
    let terms = rs.signed_orbit(mu).into_iter().map(|(w, s)| (w, BigInt::from(s)));
    FormalCharacter::from_terms(rs, terms)
}

/// `sum e^w` over the Weyl orbit of `w`.
pub fn orbit_sum(rs: &Arc<RootSystem>, w: &Weight) -> FormalCharacter {
    let mut out = FormalCharacter::zero(rs);
    for x in rs.weyl_orbit(w) {
        out.add_term(x, BigInt::one());
    }
    out
}

/// Dominant weights `mu <= lambda`, sorted by increasing depth below `lambda`.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for a in rs.positive_roots() {
            let nu = &mu - a;
            if nu.is_dominant() && seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort_by(|a, b| {
        rs.height_scaled(b)
            .cmp(&rs.height_scaled(a))
            .then_with(|| b.cmp(a))
    });
    out
}

/// Dominant-weight multiplicities of `V(lambda)` by Freudenthal's recursion.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
    check_dominant(rs, lambda)?;
    let rho = rs.rho();
    let lr = lambda + rho;
    let top = rs.inner_scaled(&lr, &lr);
    let mut mult: HashMap<Weight, BigInt> = HashMap::new();
    let order = dominant_weights_below(rs, lambda);
    for mu in &order {
        if mu == lambda {
            mult.insert(mu.clone(), BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for a in rs.positive_roots() {
            let mut nu = mu + a;
            loop {
                let (dom, _, _) = rs.dominant_representative(&nu);
                let Some(m) = mult.get(&dom) else { break };
                acc += m * BigInt::from(rs.inner_scaled(&nu, a));
                nu = &nu + a;
            }
        }
        let mr = mu + rho;
        let denom = top - rs.inner_scaled(&mr, &mr);
        debug_assert!(denom > 0);
        let num: BigInt = acc * 2;
        let d = BigInt::from(denom);
        debug_assert!((&num % &d).is_zero(), "Freudenthal remainder");
        mult.insert(mu.clone(), num / d);
    }
    Ok(mult.into_iter().filter(|(_, m)| !m.is_zero()).collect())
}

/// Full weight-multiplicity map of `V(lambda)`.
pub fn irreducible_character(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<FormalCharacter> {
    let dom = dominant_multiplicities(rs, lambda)?;
    let mut out = FormalCharacter::zero(rs);
    for (mu, m) in dom {
        for w in rs.weyl_orbit(&mu) {
            out.add_term(w, m.clone());
        }
    }
    Ok(out)
}

/// `chi * A_rho == A_{lambda + rho}`.
pub fn verify_weyl_character(rs: &Arc<RootSystem>, lambda: &Weight, chi: &FormalCharacter) -> Result<bool> {
    lambda.check_rank(rs.rank())?;
    let lhs = chi.multiply(&skew_symmetrizer(rs, rs.rho())?)?;
    let rhs = skew_symmetrizer(rs, &(lambda + rs.rho()))?;
    Ok(lhs == rhs)
}

/// `prod_{a > 0} <lambda + rho, a^vee> / <rho, a^vee>`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    check_dominant(rs, lambda)?;
    let lr = lambda + rs.rho();
    let mut acc = BigRational::one();
    for a in rs.positive_roots() {
        let num = BigInt::from(rs.inner_scaled(&lr, a));
        let den = BigInt::from(rs.inner_scaled(rs.rho(), a));
        acc *= BigRational::new(num, den);
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer())
}

pub fn multiply(a: &FormalCharacter, b: &FormalCharacter) -> Result<FormalCharacter> {
    a.multiply(b)
}

pub fn square_weights(a: &FormalCharacter) -> FormalCharacter {
    a.square_weights()
}

/// Decomposes `chi` into irreducibles, highest constituent first.
///
/// At each step the dominant weight of greatest height (then greatest labels)
/// is peeled off with its full irreducible character.
pub fn decompose(rs: &Arc<RootSystem>, chi: &FormalCharacter) -> Result<Vec<(Weight, BigInt)>> {
    if chi.root_system() != rs {
        return Err(Error::RootSystemMismatch(
            rs.name().to_string(),
            chi.root_system().name().to_string(),
        ));
    }
    if !chi.has_nonnegative_coefficients() {
        return Err(Error::NotACharacter("negative coefficient".into()));
    }
    let mut rest = chi.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let top = rest
            .terms()
            .keys()
            .filter(|w| w.is_dominant())
            .max_by(|a, b| {
                rs.height_scaled(a)
                    .cmp(&rs.height_scaled(b))
                    .then_with(|| a.cmp(b))
            })
            .cloned();
        let Some(top) = top else {
            return Err(Error::NotACharacter("no dominant weight left".into()));
        };
        let m = rest.coeff(&top);
        let dom = dominant_multiplicities(rs, &top)?;
        for (mu, k) in dom {
            let delta = -(&k * &m);
            for w in rs.weyl_orbit(&mu) {
                rest.add_term(w.clone(), delta.clone());
                if rest.coeff(&w).is_negative() {
                    return Err(Error::NotACharacter(format!("negative multiplicity at {w}")));
                }
            }
        }
        out.push((top, m));
    }
    Ok(out)
}

/// `sum m_i chi_{lambda_i}`.
pub fn recompose(rs: &Arc<RootSystem>, parts: &[(Weight, BigInt)]) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::zero(rs);
    for (w, m) in parts {
        out = out.add(&irreducible_character(rs, w)?.scale(m))?;
    }
    Ok(out)
}

/// Character of the adjoint representation.
pub fn adjoint_character(rs: &Arc<RootSystem>) -> FormalCharacter {
    let mut out = FormalCharacter::monomial(rs, rs.zero_weight(), rs.rank() as i64);
    for a in rs.positive_roots() {
        out.add_term(a.clone(), BigInt::one());
        out.add_term(-a, BigInt::one());
    }
    out
}

/// `e^rho prod_{a > 0} (1 - e^{-a})` expanded exactly.
pub fn denominator_product(rs: &Arc<RootSystem>) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::monomial(rs, rs.rho().clone(), 1);
    for a in rs.positive_roots() {
        let mut f = FormalCharacter::one(rs);
        f.add_term(-a, BigInt::from(-1));
        out = out.multiply(&f)?;
    }
    Ok(out)
}

pub fn denominator_check(rs: &Arc<RootSystem>) -> Result<bool> {
    Ok(denominator_product(rs)? == skew_symmetrizer(rs, rs.rho())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::builtin(name).unwrap())
    }

    fn w<const N: usize>(c: [i32; N]) -> Weight {
        Weight::new(c)
    }

    #[test]
    fn skew_examples() {
        let a1 = rs("A1");
        let s = skew_symmetrizer(&a1, a1.rho()).unwrap();
        let expect = FormalCharacter::from_terms(&a1, [(w([1]), 1), (w([-1]), -1)]).unwrap();
        assert_eq!(s, expect);
        let a2 = rs("A2");
        let s = skew_symmetrizer(&a2, a2.rho()).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.terms().values().all(|c| c.abs() == BigInt::one()));
        assert!(skew_symmetrizer(&a2, &w([0, 1])).unwrap().is_empty());
    }

    #[test]
    fn irreducible_examples() {
        let a1 = rs("A1");
        let c = irreducible_character(&a1, &w([2])).unwrap();
        let expect = FormalCharacter::from_terms(&a1, [(w([2]), 1), (w([0]), 1), (w([-2]), 1)]).unwrap();
        assert_eq!(c, expect);
        let a2 = rs("A2");
        let adj = irreducible_character(&a2, a2.rho()).unwrap();
        assert_eq!(adj.dimension(), BigInt::from(8));
        assert_eq!(adj.coeff(&w([0, 0])), BigInt::from(2));
        assert_eq!(adj, adjoint_character(&a2));
        let triv = irreducible_character(&a2, &w([0, 0])).unwrap();
        assert_eq!(triv, FormalCharacter::one(&a2));
        assert!(matches!(
            irreducible_character(&a2, &w([-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn weyl_character_check() {
        let a1 = rs("A1");
        let c = irreducible_character(&a1, &w([2])).unwrap();
        assert!(verify_weyl_character(&a1, &w([2]), &c).unwrap());
        let mut bad = c.clone();
        bad.add_term(w([0]), BigInt::one());
        assert!(!verify_weyl_character(&a1, &w([2]), &bad).unwrap());
        let a2 = rs("A2");
        assert!(verify_weyl_character(&a2, a2.rho(), &adjoint_character(&a2)).unwrap());
    }

    #[test]
    fn dimensions() {
        let a2 = rs("A2");
        assert_eq!(weyl_dimension(&a2, a2.rho()).unwrap(), BigInt::from(8));
        assert_eq!(weyl_dimension(&a2, &w([0, 0])).unwrap(), BigInt::one());
        let b2 = rs("B2");
        assert_eq!(weyl_dimension(&b2, b2.theta_s()).unwrap(), BigInt::from(5));
        assert_eq!(irreducible_character(&b2, b2.theta_s()).unwrap().dimension(), BigInt::from(5));
        // adjoint dimensions
        for (name, dim) in [("G2", 14), ("F4", 52), ("C3", 21), ("D4", 28)] {
            let r = rs(name);
            assert_eq!(weyl_dimension(&r, r.theta()).unwrap(), BigInt::from(dim));
        }
    }

    #[test]
    fn multiply_examples() {
        let a1 = rs("A1");
        let v1 = irreducible_character(&a1, &w([1])).unwrap();
        let sq = v1.multiply(&v1).unwrap();
        let expect = irreducible_character(&a1, &w([2]))
            .unwrap()
            .add(&FormalCharacter::one(&a1))
            .unwrap();
        assert_eq!(sq, expect);
        assert_eq!(v1.multiply(&FormalCharacter::one(&a1)).unwrap(), v1);
        let minus = FormalCharacter::from_terms(&a1, [(w([1]), 1), (w([-1]), -1)]).unwrap();
        let plus = FormalCharacter::from_terms(&a1, [(w([1]), 1), (w([-1]), 1)]).unwrap();
        let diff = FormalCharacter::from_terms(&a1, [(w([2]), 1), (w([-2]), -1)]).unwrap();
        assert_eq!(minus.multiply(&plus).unwrap(), diff);
        assert!(matches!(
            v1.multiply(&FormalCharacter::one(&rs("A2"))),
            Err(Error::RootSystemMismatch(..))
        ));
    }

    #[test]
    fn square_weights_examples() {
        let a1 = rs("A1");
        assert_eq!(FormalCharacter::one(&a1).square_weights(), FormalCharacter::one(&a1));
        let v1 = irreducible_character(&a1, &w([1])).unwrap();
        let sq = v1.square_weights();
        assert_eq!(sq, FormalCharacter::from_terms(&a1, [(w([2]), 1), (w([-2]), 1)]).unwrap());
        assert_eq!(
            sq.multiply(&v1).unwrap(),
            irreducible_character(&a1, &w([3])).unwrap()
        );
    }

    #[test]
    fn decompose_examples() {
        let a1 = rs("A1");
        let v1 = irreducible_character(&a1, &w([1])).unwrap();
        let parts = decompose(&a1, &v1.multiply(&v1).unwrap()).unwrap();
        assert_eq!(parts, vec![(w([2]), BigInt::one()), (w([0]), BigInt::one())]);
        let a2 = rs("A2");
        let adj = adjoint_character(&a2);
        let parts = decompose(&a2, &adj.multiply(&adj).unwrap()).unwrap();
        // V(2,2) + V(3,0) + V(0,3) + 2 V(1,1) + V(0,0)
        assert_eq!(parts.len(), 5);
        assert_eq!(parts.iter().map(|(_, m)| m).sum::<BigInt>(), BigInt::from(6));
        let total: BigInt = parts
            .iter()
            .map(|(l, m)| weyl_dimension(&a2, l).unwrap() * m)
            .sum();
        assert_eq!(total, BigInt::from(64));
        let lone = FormalCharacter::monomial(&a1, w([1]), 1);
        assert!(matches!(decompose(&a1, &lone), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn denominators() {
        for name in ["A1", "A2", "G2", "B3"] {
            assert!(denominator_check(&rs(name)).unwrap(), "{name}");
        }
    }

    #[test]
    fn json_is_sorted_and_stable() {
        let a1 = rs("A1");
        let c = irreducible_character(&a1, &w([2])).unwrap();
        assert_eq!(c.to_json().to_string(), r#"{"rs":"A1","terms":[[[2],1],[[0],1],[[-2],1]]}"#);
        assert_eq!(c.content_hash(), c.clone().content_hash());
    }

    #[test]
    fn self_duality() {
        let a2 = rs("A2");
        assert!(adjoint_character(&a2).is_self_dual());
        assert!(!irreducible_character(&a2, &w([1, 0])).unwrap().is_self_dual());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_types() -> impl Strategy<Value = Arc<RootSystem>> {
            prop::sample::select(vec!["A1", "A2", "B2", "G2", "A3", "C3"])
                .prop_map(|n| Arc::new(RootSystem::builtin(n).unwrap()))
        }

        fn dominant(rs: &RootSystem, max: i32) -> impl Strategy<Value = Weight> {
            prop::collection::vec(0..=max, rs.rank()).prop_map(Weight::new)
        }

        fn sparse(rs: Arc<RootSystem>) -> impl Strategy<Value = FormalCharacter> {
            let n = rs.rank();
            prop::collection::vec((prop::collection::vec(-3i32..=3, n), -3i64..=3), 0..6).prop_map(move |ts| {
                let mut c = FormalCharacter::zero(&rs);
                for (w, m) in ts {
                    c.add_term(Weight::new(w), BigInt::from(m));
                }
                c
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn skew_symmetrizer_changes_sign(
                (rs, mu, i) in small_types().prop_flat_map(|rs| {
                    let n = rs.rank();
                    (Just(rs), prop::collection::vec(-3i32..=3, n).prop_map(Weight::new), 0..n)
                })
            ) {
                let a = skew_symmetrizer(&rs, &mu).unwrap();
                let b = skew_symmetrizer(&rs, &rs.weyl_reflect(i, &mu).unwrap()).unwrap();
                prop_assert_eq!(a.add(&b).unwrap(), FormalCharacter::zero(&rs));
            }

            #[test]
            fn multiplication_is_commutative_and_associative(
                (x, y, z) in small_types().prop_flat_map(|rs| (sparse(rs.clone()), sparse(rs.clone()), sparse(rs)))
            ) {
                prop_assert_eq!(x.multiply(&y).unwrap(), y.multiply(&x).unwrap());
                prop_assert_eq!(
                    x.multiply(&y).unwrap().multiply(&z).unwrap(),
                    x.multiply(&y.multiply(&z).unwrap()).unwrap()
                );
            }

            #[test]
            fn decompose_inverts_recompose(
                (rs, parts) in small_types().prop_flat_map(|rs| {
                    let ws = prop::collection::vec((dominant(&rs, 2), 1i64..=3), 1..4);
                    (Just(rs), ws)
                })
            ) {
                let parts: Vec<(Weight, BigInt)> = parts.into_iter().map(|(w, m)| (w, BigInt::from(m))).collect();
                let chi = recompose(&rs, &parts).unwrap();
                let back = decompose(&rs, &chi).unwrap();
                prop_assert_eq!(recompose(&rs, &back).unwrap(), chi);
                let mut merged: BTreeMap<Weight, BigInt> = BTreeMap::new();
                for (w, m) in parts {
                    *merged.entry(w).or_default() += m;
                }
                let mut got: Vec<(Weight, BigInt)> = back;
                got.sort();
                prop_assert_eq!(got, merged.into_iter().collect::<Vec<_>>());
            }

            #[test]
            fn weyl_character_for_small_labels(
                (rs, lam) in small_types().prop_flat_map(|rs| { let d = dominant(&rs, 2); (Just(rs), d) })
            ) {
                let chi = irreducible_character(&rs, &lam).unwrap();
                prop_assert!(verify_weyl_character(&rs, &lam, &chi).unwrap());
                prop_assert_eq!(chi.dimension(), weyl_dimension(&rs, &lam).unwrap());
                prop_assert!(chi.is_w_invariant());
            }
        }
    }
}
