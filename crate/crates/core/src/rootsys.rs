//! Finite root systems built from generalized Cartan matrices.
//!
//! Weights are stored in Dynkin-label coordinates. A simple root `alpha_j` is
//! column `j` of the Cartan matrix in that basis (`a_ij = alpha_j(alpha_i^vee)`).
//! Root lengths are normalized so that short roots have squared length 2.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weight::Weight;

type Q = Ratio<i64>;

/// An `n x n` integer matrix satisfying the generalized Cartan matrix axioms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedCartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl GeneralizedCartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::NotGcm("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotGcm(format!("row {i} has length {}", row.len())));
            }
            if row[i] != 2 {
                return Err(Error::NotGcm(format!("diagonal entry ({i},{i}) is {}", row[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::NotGcm(format!("positive off-diagonal entry ({i},{j})")));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::NotGcm(format!("entries ({i},{j}) and ({j},{i}) disagree on zero")));
                }
            }
        }
        Ok(Self { entries })
    }

    /// Parses a JSON 2-D integer array.
    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<Vec<i64>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("cartan json: {e}")))?;
        Self::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.rank();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
            .collect();
        Self { entries }
    }

    fn is_connected(&self) -> bool {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && self.entries[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Positive rationals `eps_i` with `eps_i a_ij = eps_j a_ji`, scaled so the
    /// smallest entry of each connected component is 1.
    pub fn symmetrizer(&self) -> Result<Vec<Q>> {
        let n = self.rank();
        let mut eps: Vec<Option<Q>> = vec![None; n];
        for start in 0..n {
            if eps[start].is_some() {
                continue;
            }
            let mut component = vec![start];
            eps[start] = Some(Q::one());
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let ei = eps[i].unwrap();
                for j in 0..n {
                    if i == j || self.entries[i][j] == 0 {
                        continue;
                    }
                    let ej = ei * Q::new(self.entries[i][j], self.entries[j][i]);
                    match eps[j] {
                        None => {
                            eps[j] = Some(ej);
                            component.push(j);
                            queue.push_back(j);
                        }
                        Some(e) if e != ej => return Err(Error::NotSymmetrizable),
                        Some(_) => {}
                    }
                }
            }
            let min = component.iter().map(|&i| eps[i].unwrap()).min().unwrap();
            for &i in &component {
                eps[i] = Some(eps[i].unwrap() / min);
            }
        }
        Ok(eps.into_iter().map(Option::unwrap).collect())
    }

    /// True when `diag(eps) * A` is positive definite (Sylvester's criterion).
    pub fn is_finite_type(&self) -> Result<bool> {
        let eps = self.symmetrizer()?;
        let n = self.rank();
        let mut m: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| eps[i] * Q::from(self.entries[i][j])).collect())
            .collect();
        // Gaussian elimination without pivoting: every pivot must stay positive.
        for k in 0..n {
            if m[k][k] <= Q::zero() {
                return Ok(false);
            }
            for i in k + 1..n {
                let f = m[i][k] / m[k][k];
                for j in k..n {
                    let v = m[k][j];
                    m[i][j] -= f * v;
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

/// Cartan matrices of the simple types, Bourbaki numbering except E6 which
/// follows the chain `1-2-3-4-5` with node 6 attached to node 3.
pub mod builtin {
    use super::*;

    fn chain(n: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    }

    pub fn a(n: usize) -> Vec<Vec<i64>> {
        chain(n)
    }

    /// `alpha_n` short.
    pub fn b(n: usize) -> Vec<Vec<i64>> {
        let mut m = chain(n);
        if n >= 2 {
            m[n - 1][n - 2] = -2;
        }
        m
    }

    /// `alpha_n` long.
    pub fn c(n: usize) -> Vec<Vec<i64>> {
        let mut m = chain(n);
        if n >= 2 {
            m[n - 2][n - 1] = -2;
        }
        m
    }

    /// Chain `1..n-2` with node `n-2` joined to both `n-1` and `n`.
    pub fn d(n: usize) -> Vec<Vec<i64>> {
        let mut m = chain(n);
        m[n - 2][n - 1] = 0;
        m[n - 1][n - 2] = 0;
        m[n - 3][n - 1] = -1;
        m[n - 1][n - 3] = -1;
        m
    }

    pub fn e6() -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; 6]; 6];
        for i in 0..6 {
            m[i][i] = 2;
        }
        for (i, j) in [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)] {
            m[i][j] = -1;
            m[j][i] = -1;
        }
        m
    }

    /// `alpha_1, alpha_2` long, `alpha_3, alpha_4` short.
    pub fn f4() -> Vec<Vec<i64>> {
        let mut m = chain(4);
        m[2][1] = -2;
        m
    }

    /// `alpha_1` short, `alpha_2` long.
    pub fn g2() -> Vec<Vec<i64>> {
        vec![vec![2, -3], vec![-1, 2]]
    }

    /// Resolves names such as `A3`, `B2`, `D4`, `G2`.
    pub fn by_name(name: &str) -> Result<Vec<Vec<i64>>> {
        let unknown = || Error::UnknownType(name.to_string());
        let mut chars = name.trim().chars();
        let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let m = match (family, n) {
            ('A', 1..=9) => a(n),
            ('B', 1..=9) => b(n),
            ('C', 2..=9) => c(n),
            ('D', 3..=9) => d(n),
            ('E', 6) => e6(),
            ('F', 4) => f4(),
            ('G', 2) => g2(),
            _ => return Err(unknown()),
        };
        Ok(m)
    }
}

/// A finite root system with its derived data.
#[derive(Clone)]
pub struct RootSystem {
    name: String,
    cartan: GeneralizedCartanMatrix,
    /// `(alpha_i, alpha_i) / 2`, equal to 1 on short simple roots.
    half_lengths: Vec<i64>,
    det: i64,
    /// `det * A^{-1}`.
    adj: Vec<Vec<i64>>,
    /// `(x, y) = x^T form y / det` on Dynkin labels.
    form: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
    is_short: Vec<bool>,
    rho: Weight,
    rho_s: Weight,
    theta: Weight,
    theta_s: Weight,
    coxeter_number: i64,
    dual_coxeter_number: i64,
    marks: Vec<i64>,
    comarks: Vec<i64>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({} {:?})", self.name, self.cartan)
    }
}

impl RootSystem {
    pub fn builtin(name: &str) -> Result<Self> {
        let entries = builtin::by_name(name)?;
        let canonical = name.trim().to_ascii_uppercase();
        Self::build_named(GeneralizedCartanMatrix::new(entries)?, canonical)
    }

    pub fn build(cartan: GeneralizedCartanMatrix) -> Result<Self> {
        let name = format!("{:?}", cartan.entries).replace(' ', "");
        Self::build_named(cartan, name)
    }

    pub fn build_named(cartan: GeneralizedCartanMatrix, name: impl Into<String>) -> Result<Self> {
        let n = cartan.rank();
        let eps = cartan.symmetrizer()?;
        if !cartan.is_finite_type()? {
            return Err(Error::NotFiniteType);
        }
        if !cartan.is_connected() {
            return Err(Error::Decomposable);
        }
        let half_lengths: Vec<i64> = eps
            .iter()
            .map(|e| {
                if e.is_integer() {
                    Ok(e.to_integer())
                } else {
                    Err(Error::NotFiniteType)
                }
            })
            .collect::<Result<_>>()?;

        let (det, adj) = integer_inverse(cartan.entries());
        let form: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| adj[j][i] * half_lengths[j]).collect())
            .collect();

        let simple_roots: Vec<Weight> = (0..n)
            .map(|j| Weight::new((0..n).map(|i| cartan.entry(i, j) as i32)))
            .collect();

        let mut coords = reflection_closure(&cartan);
        // Height first, then reverse-lexicographic in the alpha basis so the
        // simple roots come out as alpha_1, ..., alpha_n.
        coords.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let to_labels = |c: &[i64]| -> Weight {
            Weight::new((0..n).map(|i| (0..n).map(|k| cartan.entry(i, k) * c[k]).sum::<i64>() as i32))
        };
        let positive_roots: Vec<Weight> = coords.iter().map(|c| to_labels(c)).collect();
        let norm = |c: &[i64]| -> i64 {
            let mut s = 0;
            for j in 0..n {
                for k in 0..n {
                    s += c[j] * c[k] * half_lengths[j] * cartan.entry(j, k);
                }
            }
            s
        };
        let norms: Vec<i64> = coords.iter().map(|c| norm(c)).collect();
        let min_norm = *norms.iter().min().unwrap();
        let is_short: Vec<bool> = norms.iter().map(|&x| x == min_norm).collect();

        let top = coords.len() - 1;
        let top_height: i64 = coords[top].iter().sum();
        if coords.iter().filter(|c| c.iter().sum::<i64>() == top_height).count() != 1 {
            return Err(Error::NotFiniteType);
        }
        let theta = positive_roots[top].clone();
        let marks = coords[top].clone();
        let theta_s_idx = (0..coords.len()).rev().find(|&i| is_short[i]).unwrap();
        let theta_s = positive_roots[theta_s_idx].clone();

        let theta_half = norms[top] / 2;
        let comarks: Vec<i64> = (0..n)
            .map(|i| {
                let num = marks[i] * half_lengths[i];
                debug_assert_eq!(num % theta_half, 0);
                num / theta_half
            })
            .collect();
        let coxeter_number = top_height + 1;
        let dual_coxeter_number = 1 + comarks.iter().sum::<i64>();

        let mut short_sum = Weight::zero(n);
        for (r, &s) in positive_roots.iter().zip(&is_short) {
            if s {
                short_sum = &short_sum + r;
            }
        }
        let rho_s = short_sum.halve().ok_or(Error::NotFiniteType)?;

        Ok(Self {
            name: name.into(),
            cartan,
            half_lengths,
            det,
            adj,
            form,
            simple_roots,
            positive_roots,
            positive_root_coords: coords,
            is_short,
            rho: Weight::rho(n),
            rho_s,
            theta,
            theta_s,
            coxeter_number,
            dual_coxeter_number,
            marks,
            comarks,
        })
    }

    /// Resolves a builtin name or an explicit JSON Cartan matrix.
    pub fn from_spec(spec: &str) -> Result<Self> {
        if spec.trim_start().starts_with('[') {
            Self::build(GeneralizedCartanMatrix::from_json(spec)?)
        } else {
            Self::builtin(spec)
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cartan(&self) -> &GeneralizedCartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots in the simple-root basis, aligned with `positive_roots`.
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    pub fn is_short_root(&self, index: usize) -> bool {
        self.is_short[index]
    }

    pub fn short_positive_roots(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .zip(&self.is_short)
            .filter(|(_, &s)| s)
            .map(|(r, _)| r.clone())
            .collect()
    }

    pub fn long_positive_roots(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .zip(&self.is_short)
            .filter(|(_, &s)| !s)
            .map(|(r, _)| r.clone())
            .collect()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.half_lengths.iter().all(|&d| d == 1)
    }

    /// `(alpha_i, alpha_i) / 2` with short roots normalized to 1.
    pub fn half_lengths(&self) -> &[i64] {
        &self.half_lengths
    }

    pub fn is_short_simple(&self, i: usize) -> bool {
        self.half_lengths[i] == 1
    }

    /// Squared-length ratio of long to short roots (1 when simply laced).
    pub fn length_ratio(&self) -> i64 {
        *self.half_lengths.iter().max().unwrap()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn rho_s(&self) -> &Weight {
        &self.rho_s
    }

    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    pub fn theta_s(&self) -> &Weight {
        &self.theta_s
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter_number
    }

    /// Sum of comarks over short simple roots.
    pub fn short_dual_coxeter_number(&self) -> i64 {
        (0..self.rank())
            .filter(|&i| self.is_short_simple(i))
            .map(|i| self.comarks[i])
            .sum()
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// Coefficients of `rho^vee` in the fundamental-coweight basis.
    pub fn d_default(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.rank())
    }

    /// `det(A)`, the denominator of simple-root coordinates of weights.
    pub fn det(&self) -> i64 {
        self.det
    }

    /// `det(A)` times the simple-root coordinates of `w`.
    pub fn alpha_coords_scaled(&self, w: &Weight) -> Vec<i64> {
        let c = w.coords();
        self.adj
            .iter()
            .map(|row| row.iter().zip(c).map(|(a, &x)| a * x as i64).sum())
            .collect()
    }

    /// Simple-root coordinates when `w` lies in the root lattice.
    pub fn alpha_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        self.alpha_coords_scaled(w)
            .into_iter()
            .map(|x| (x % self.det == 0).then_some(x / self.det))
            .collect()
    }

    /// `det(A)` times the height `w(rho^vee)`.
    pub fn height_scaled(&self, w: &Weight) -> i64 {
        self.alpha_coords_scaled(w).iter().sum()
    }

    /// `det(A) * w(d)` for a coweight `d` in the fundamental-coweight basis.
    pub fn pair_coweight_scaled(&self, w: &Weight, d: &[i64]) -> i64 {
        self.alpha_coords_scaled(w).iter().zip(d).map(|(a, b)| a * b).sum()
    }

    /// `det(A) * (x, y)`.
    pub fn inner_scaled(&self, x: &Weight, y: &Weight) -> i64 {
        let (xc, yc) = (x.coords(), y.coords());
        let mut s = 0i64;
        for (i, row) in self.form.iter().enumerate() {
            if xc[i] == 0 {
                continue;
            }
            let mut t = 0i64;
            for (j, f) in row.iter().enumerate() {
                t += f * yc[j] as i64;
            }
            s += xc[i] as i64 * t;
        }
        s
    }

    /// `(x, y)` as an exact rational.
    pub fn inner(&self, x: &Weight, y: &Weight) -> Q {
        Q::new(self.inner_scaled(x, y), self.det)
    }

    /// `<w, beta^vee>` for a root `beta`.
    pub fn coroot_pairing(&self, w: &Weight, beta: &Weight) -> Q {
        Q::new(2 * self.inner_scaled(w, beta), self.inner_scaled(beta, beta))
    }

    /// `w(theta^vee) = sum_i a_i^vee w_i`.
    pub fn pair_theta_coroot(&self, w: &Weight) -> i64 {
        self.comarks.iter().zip(w.coords()).map(|(a, &x)| a * x as i64).sum()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `s_i(w) = w - w(alpha_i^vee) alpha_i` with a 0-based index.
    pub fn weyl_reflect(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        w.check_rank(self.rank())?;
        Ok(self.reflect_unchecked(i, w))
    }

    pub(crate) fn reflect_unchecked(&self, i: usize, w: &Weight) -> Weight {
        let k = w.coords()[i];
        if k == 0 {
            return w.clone();
        }
        let mut out = w.clone();
        for (j, c) in out.coords_mut().iter_mut().enumerate() {
            *c -= k * self.cartan.entry(j, i) as i32;
        }
        out
    }

    /// The full orbit of `w` under the Weyl group, sorted.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                if x.coords()[i] == 0 {
                    continue;
                }
                let y = self.reflect_unchecked(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Orbit of a weight together with the sign of a group element reaching
    /// each orbit point from `w`. Only meaningful when `w` is regular.
    pub fn signed_orbit(&self, w: &Weight) -> Vec<(Weight, i32)> {
        let mut seen: HashMap<Weight, i32> = HashMap::from([(w.clone(), 1)]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            let s = seen[&x];
            for i in 0..self.rank() {
                let y = self.reflect_unchecked(i, &x);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), -s);
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<(Weight, i32)> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Reduces `w` to the dominant chamber. Returns the dominant element, the
    /// parity of the reflection word used, and whether `w` is regular.
    pub fn dominant_representative(&self, w: &Weight) -> (Weight, i32, bool) {
        let mut x = w.clone();
        let mut sign = 1;
        let mut regular = true;
        loop {
            if x.coords().contains(&0) {
                regular = false;
            }
            match x.coords().iter().position(|&c| c < 0) {
                Some(i) => {
                    x = self.reflect_unchecked(i, &x);
                    sign = -sign;
                }
                None => break,
            }
        }
        (x, sign, regular)
    }

    /// `b <= c` in the root order: `c - b` is a nonnegative integer
    /// combination of simple roots.
    pub fn root_order_leq(&self, b: &Weight, c: &Weight) -> bool {
        match self.alpha_coords(&(c - b)) {
            Some(x) => x.iter().all(|&v| v >= 0),
            None => false,
        }
    }

    /// The Langlands dual: the root system of the transposed Cartan matrix.
    pub fn dual(&self) -> Result<RootSystem> {
        Self::build_named(self.cartan.transpose(), format!("{}^vee", self.name))
    }

    /// Order of the Weyl group (size of the orbit of `rho`).
    pub fn weyl_group_order(&self) -> usize {
        self.weyl_orbit(&self.rho).len()
    }
}

/// Returns `(det A, det A * A^{-1})` with exact integer entries.
fn integer_inverse(a: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|&x| Q::from(x)).collect()).collect();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    let mut det = Q::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero()).expect("singular Cartan matrix");
        if p != k {
            m.swap(p, k);
            inv.swap(p, k);
            det = -det;
        }
        let piv = m[k][k];
        det *= piv;
        for j in 0..n {
            m[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k];
                for j in 0..n {
                    let (mk, ik) = (m[k][j], inv[k][j]);
                    m[i][j] -= f * mk;
                    inv[i][j] -= f * ik;
                }
            }
        }
    }
    debug_assert!(det.is_integer() && det.is_positive());
    let d = det.to_integer();
    let adj = inv
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let y = *x * Q::from(d);
                    debug_assert!(y.is_integer());
                    y.to_integer()
                })
                .collect()
        })
        .collect();
    (d, adj)
}

/// All positive roots in the simple-root basis, by closing the simple roots
/// under simple reflections.
fn reflection_closure(cartan: &GeneralizedCartanMatrix) -> Vec<Vec<i64>> {
    let n = cartan.rank();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(c) = queue.pop_front() {
        for i in 0..n {
            let label: i64 = (0..n).map(|k| cartan.entry(i, k) * c[k]).sum();
            if label == 0 {
                continue;
            }
            let mut r = c.clone();
            r[i] -= label;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
    pos.sort();
    pos
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::builtin(name).unwrap()
    }

    #[test]
    fn a2_basics() {
        let a2 = rs("A2");
        assert_eq!(
            a2.positive_roots(),
            &[Weight::new([2, -1]), Weight::new([-1, 2]), Weight::new([1, 1])]
        );
        assert_eq!(a2.rho(), &Weight::new([1, 1]));
        assert_eq!(a2.coxeter_number(), 3);
        assert_eq!(a2.theta(), &Weight::new([1, 1]));
    }

    #[test]
    fn a1_basics() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots(), &[Weight::new([2])]);
        assert_eq!(a1.theta(), a1.theta_s());
        assert_eq!(a1.rho_s(), a1.rho());
    }

    #[test]
    fn b2_basics() {
        let b2 = rs("B2");
        assert_eq!(b2.positive_roots().len(), 4);
        assert_eq!(b2.short_positive_roots().len(), 2);
        assert_eq!(b2.long_positive_roots().len(), 2);
        let theta_idx = b2.positive_roots().iter().position(|r| r == b2.theta()).unwrap();
        assert!(!b2.is_short_root(theta_idx));
        let ts_idx = b2.positive_roots().iter().position(|r| r == b2.theta_s()).unwrap();
        assert!(b2.is_short_root(ts_idx));
        assert_eq!(b2.coxeter_number(), 4);
        assert_eq!(b2.dual_coxeter_number(), 3);
        assert_eq!(b2.theta_s(), &Weight::new([1, 0]));
        assert_eq!(b2.rho_s(), &Weight::new([0, 1]));
    }

    #[test]
    fn positive_root_counts() {
        for (name, dim) in [
            ("A1", 3),
            ("A2", 8),
            ("A3", 15),
            ("A4", 24),
            ("B2", 10),
            ("B3", 21),
            ("B4", 36),
            ("C3", 21),
            ("C4", 36),
            ("D4", 28),
            ("G2", 14),
            ("F4", 52),
            ("E6", 78),
        ] {
            let r = rs(name);
            assert_eq!(2 * r.positive_roots().len() + r.rank(), dim, "{name}");
        }
    }

    #[test]
    fn gcm_validation() {
        assert!(matches!(
            GeneralizedCartanMatrix::new(vec![vec![1]]),
            Err(Error::NotGcm(_))
        ));
        assert!(matches!(
            GeneralizedCartanMatrix::new(vec![vec![2, 1], vec![-1, 2]]),
            Err(Error::NotGcm(_))
        ));
        assert!(matches!(
            GeneralizedCartanMatrix::new(vec![vec![2, 0], vec![-1, 2]]),
            Err(Error::NotGcm(_))
        ));
        // affine A1
        let aff = GeneralizedCartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(RootSystem::build(aff), Err(Error::NotFiniteType));
        // cycle with inconsistent ratios
        let bad = GeneralizedCartanMatrix::new(vec![
            vec![2, -1, -1],
            vec![-2, 2, -1],
            vec![-1, -1, 2],
        ])
        .unwrap();
        assert_eq!(bad.symmetrizer(), Err(Error::NotSymmetrizable));
        let split = GeneralizedCartanMatrix::new(vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(RootSystem::build(split), Err(Error::Decomposable));
    }

    #[test]
    fn json_cartan_matches_builtin() {
        let from_json = RootSystem::from_spec("[[2,-1],[-2,2]]").unwrap();
        assert_eq!(from_json, rs("B2"));
        assert!(RootSystem::from_spec("X7").is_err());
    }

    #[test]
    fn reflections() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_reflect(0, a1.rho()).unwrap(), Weight::new([-1]));
        let a2 = rs("A2");
        assert_eq!(a2.weyl_reflect(0, &Weight::new([2, -1])).unwrap(), Weight::new([-2, 1]));
        assert!(matches!(a2.weyl_reflect(2, a2.rho()), Err(Error::IndexOutOfRange { .. })));
        let b2 = rs("B2");
        // theta_s = (1,0); s_2 fixes it since its second label is 0.
        let img = b2.weyl_reflect(1, b2.theta_s()).unwrap();
        assert_eq!(img, Weight::new([1, 0]));
        let img = b2.weyl_reflect(0, b2.theta_s()).unwrap();
        assert_eq!(img, Weight::new([-1, 2]));
        assert_eq!(b2.weyl_reflect(0, &img).unwrap(), *b2.theta_s());
    }

    #[test]
    fn orbits() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_orbit(a1.rho()), vec![Weight::new([-1]), Weight::new([1])]);
        let a2 = rs("A2");
        assert_eq!(a2.weyl_orbit(a2.rho()).len(), 6);
        assert_eq!(a2.weyl_orbit(&Weight::zero(2)), vec![Weight::zero(2)]);
        assert_eq!(rs("F4").weyl_group_order(), 1152);
        assert_eq!(rs("G2").weyl_group_order(), 12);
    }

    #[test]
    fn dominant_reps() {
        let a2 = rs("A2");
        let (d, _, reg) = a2.dominant_representative(&Weight::new([-1, 2]));
        assert_eq!(d, Weight::new([1, 1]));
        assert!(reg);
        assert!(a2.weyl_orbit(&d).contains(&Weight::new([-1, 2])));
        let (_, _, reg) = a2.dominant_representative(&Weight::new([0, 1]));
        assert!(!reg);
        let a1 = rs("A1");
        assert_eq!(a1.dominant_representative(&Weight::new([3])), (Weight::new([3]), 1, true));
    }

    #[test]
    fn root_order() {
        let a2 = rs("A2");
        let z = Weight::zero(2);
        assert!(a2.root_order_leq(a2.theta(), a2.theta()));
        assert!(a2.root_order_leq(&z, a2.theta()));
        assert!(!a2.root_order_leq(a2.simple_root(0), a2.simple_root(1)));
        // not in the root lattice
        assert!(!a2.root_order_leq(&z, &Weight::new([1, 0])));
    }

    #[test]
    fn form_is_symmetric_and_normalized() {
        for name in ["A3", "B3", "C3", "G2", "F4", "D4"] {
            let r = rs(name);
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    let (a, b) = (Weight::fundamental(n, i), Weight::fundamental(n, j));
                    assert_eq!(r.inner(&a, &b), r.inner(&b, &a));
                }
            }
            for (k, root) in r.positive_roots().iter().enumerate() {
                let len = r.inner(root, root);
                if r.is_short_root(k) {
                    assert_eq!(len, Q::from(2));
                } else {
                    assert_eq!(len, Q::from(2 * r.length_ratio()));
                }
            }
        }
    }

    #[test]
    fn folded_targets_have_expected_lengths() {
        assert!(rs("C2").is_short_simple(0) && !rs("C2").is_short_simple(1));
        assert!(!rs("B3").is_short_simple(0) && rs("B3").is_short_simple(2));
        assert!(rs("G2").is_short_simple(0) && !rs("G2").is_short_simple(1));
        let f4 = rs("F4");
        assert_eq!(
            (0..4).map(|i| f4.is_short_simple(i)).collect::<Vec<_>>(),
            vec![false, false, true, true]
        );
    }

    #[test]
    fn dual_of_b_is_c() {
        for n in 2..=4 {
            let b = rs(&format!("B{n}"));
            assert_eq!(b.dual().unwrap(), rs(&format!("C{n}")));
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn types() -> impl Strategy<Value = RootSystem> {
            prop::sample::select(vec!["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"])
                .prop_map(|n| RootSystem::builtin(n).unwrap())
        }

        fn system_and_weight() -> impl Strategy<Value = (RootSystem, Weight)> {
            types().prop_flat_map(|rs| {
                let n = rs.rank();
                (Just(rs), prop::collection::vec(-4i32..=4, n).prop_map(Weight::new))
            })
        }

        proptest! {
            #[test]
            fn reflections_are_involutions((rs, w) in system_and_weight(), i in 0usize..4) {
                let i = i % rs.rank();
                let once = rs.weyl_reflect(i, &w).unwrap();
                prop_assert_eq!(rs.weyl_reflect(i, &once).unwrap(), w);
            }

            #[test]
            fn root_order_is_a_partial_order(
                (rs, a) in system_and_weight(),
                picks in prop::collection::vec(any::<prop::sample::Index>(), 2),
            ) {
                let roots = rs.positive_roots();
                let b = &a - &roots[picks[0].index(roots.len())];
                let c = &b - &roots[picks[1].index(roots.len())];
                prop_assert!(rs.root_order_leq(&a, &a));
                prop_assert!(rs.root_order_leq(&b, &a));
                prop_assert!(rs.root_order_leq(&c, &b));
                prop_assert!(rs.root_order_leq(&c, &a));
                prop_assert!(!rs.root_order_leq(&a, &b));
            }

            #[test]
            fn dominant_representative_is_in_orbit((rs, w) in system_and_weight()) {
                let (d, _, _) = rs.dominant_representative(&w);
                prop_assert!(d.is_dominant());
                prop_assert!(rs.weyl_orbit(&w).contains(&d));
            }
        }
    }
}
