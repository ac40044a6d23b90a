//! Free nilpotent Lie algebras `n_{m,s}` in a Hall basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::derivations::NikolayevskyResult;
use crate::error::{Error, Result};
use crate::lie::{GradedLieAlgebra, LieAlgebra};
use crate::linalg::spectral::Eigen;
use crate::linalg::{Matrix, Subspace};
use crate::nice::{check_nice_basis, NiceCertificate, NiceCheck};
use crate::{int, Rational};

/// `d_m(k)`, the dimension of the degree-`k` layer of the free Lie algebra on
/// `m` generators, from `k d_m(k) = m^k - Σ_{ℓ<k, ℓ|k} ℓ d_m(ℓ)`.
pub fn witt_dim(m: u64, k: u64) -> u64 {
    assert!(k >= 1, "degree starts at 1");
    let mk = m.checked_pow(k as u32).expect("m^k overflows u64");
    let lower: u64 = (1..k).filter(|l| k.is_multiple_of(*l)).map(|l| l * witt_dim(m, l)).sum();
    (mk - lower) / k
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HallTree {
    Generator(usize),
    Bracket(Box<HallTree>, Box<HallTree>),
}

impl fmt::Display for HallTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HallTree::Generator(i) => write!(f, "e{}", i + 1),
            HallTree::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallWord {
    pub tree: HallTree,
    pub degree: usize,
    /// Position in the Hall order, which is also the basis index.
    pub hall_index: usize,
    /// Hall indices of the left and right factors.
    pub factors: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct FreeNilpotent {
    pub m: usize,
    pub s: usize,
    pub algebra: GradedLieAlgebra<Rational>,
    pub hall_basis: Vec<HallWord>,
    pub layer_dims: Vec<usize>,
}

impl FreeNilpotent {
    pub fn lie(&self) -> &LieAlgebra<Rational> {
        &self.algebra.algebra
    }

    pub fn dim(&self) -> usize {
        self.hall_basis.len()
    }
}

/// Hall words of degree at most `s` on `m` generators. Every word `[a, b]`
/// has `a > b`, and `b ≥ d` when `a = [c, d]`. Words are ordered by degree,
/// then by right factor, then by left factor.
fn hall_words(m: usize, s: usize) -> Vec<HallWord> {
    let mut words: Vec<HallWord> = (0..m)
        .map(|i| HallWord { tree: HallTree::Generator(i), degree: 1, hall_index: i, factors: None })
        .collect();
    for deg in 2..=s {
        let mut new: Vec<(usize, usize)> = Vec::new();
        for b in 0..words.len() {
            for a in b + 1..words.len() {
                if words[a].degree + words[b].degree != deg {
                    continue;
                }
                if let Some((_, d)) = words[a].factors {
                    if b < d {
                        continue;
                    }
                }
                new.push((a, b));
            }
        }
        for (a, b) in new {
            let tree = HallTree::Bracket(Box::new(words[a].tree.clone()), Box::new(words[b].tree.clone()));
            let idx = words.len();
            words.push(HallWord { tree, degree: deg, hall_index: idx, factors: Some((a, b)) });
        }
    }
    words
}

type Combo = Vec<(usize, Rational)>;

struct Rewriter<'a> {
    words: &'a [HallWord],
    index: HashMap<(usize, usize), usize>,
    s: usize,
    memo: HashMap<(usize, usize), Combo>,
}

fn add_scaled(acc: &mut HashMap<usize, Rational>, combo: &Combo, c: &Rational) {
    for (k, v) in combo {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        *e += v * c;
    }
}

fn collect(acc: HashMap<usize, Rational>) -> Combo {
    let mut out: Combo = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    out.sort_by_key(|(k, _)| *k);
    out
}

impl Rewriter<'_> {
    /// `[x, y]` in the Hall basis, using `[[c,d],y] = [[c,y],d] + [c,[d,y]]`
    /// when `y < d`.
    fn bracket(&mut self, x: usize, y: usize) -> Combo {
        if x == y || self.words[x].degree + self.words[y].degree > self.s {
            return Vec::new();
        }
        if let Some(r) = self.memo.get(&(x, y)) {
            return r.clone();
        }
        let r = if x < y {
            self.bracket(y, x).into_iter().map(|(k, v)| (k, -v)).collect()
        } else {
            match self.words[x].factors {
                Some((c, d)) if y < d => {
                    let mut acc = HashMap::new();
                    for (u, a) in self.bracket(c, y) {
                        let t = self.bracket(u, d);
                        add_scaled(&mut acc, &t, &a);
                    }
                    for (v, b) in self.bracket(d, y) {
                        let t = self.bracket(c, v);
                        add_scaled(&mut acc, &t, &b);
                    }
                    collect(acc)
                }
                _ => vec![(self.index[&(x, y)], Rational::one())],
            }
        };
        self.memo.insert((x, y), r.clone());
        r
    }
}

/// `n_{m,s}` with structure constants obtained by Hall rewriting.
pub fn build(m: usize, s: usize) -> Result<FreeNilpotent> {
    if m < 2 || s < 1 {
        return Err(Error::Precondition(format!("need m >= 2 and s >= 1, got ({m}, {s})")));
    }
    let words = hall_words(m, s);
    let n = words.len();
    let index = words.iter().filter_map(|w| w.factors.map(|f| (f, w.hall_index))).collect();
    let mut rw = Rewriter { words: &words, index, s, memo: HashMap::new() };
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (k, c) in rw.bracket(i, j) {
                entries.push((i, j, k, c));
            }
        }
    }
    let lie = LieAlgebra::from_brackets_unchecked(n, entries)?;
    let layer_dims: Vec<usize> = (1..=s).map(|d| words.iter().filter(|w| w.degree == d).count()).collect();
    let algebra = GradedLieAlgebra::from_block_sizes(lie, &layer_dims)?;
    Ok(FreeNilpotent { m, s, algebra, hall_basis: words, layer_dims })
}

type Cache = RwLock<HashMap<(usize, usize), Arc<FreeNilpotent>>>;

static CACHE: OnceLock<Cache> = OnceLock::new();

/// [`build`] memoized per `(m, s)`.
pub fn build_cached(m: usize, s: usize) -> Result<Arc<FreeNilpotent>> {
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.read().expect("cache lock").get(&(m, s)) {
        return Ok(f.clone());
    }
    let f = Arc::new(build(m, s)?);
    Ok(cache.write().expect("cache lock").entry((m, s)).or_insert(f).clone())
}

/// `λ = Σ k d_m(k) / Σ k² d_m(k)`.
pub fn free_lambda(m: usize, s: usize) -> Rational {
    let (mut num, mut den) = (0u64, 0u64);
    for k in 1..=s as u64 {
        let d = witt_dim(m as u64, k);
        num += k * d;
        den += k * k * d;
    }
    Rational::new(num.into(), den.into())
}

/// The Nikolayevsky derivation `λ Σ k π_k` of `n_{m,s}`, without solving the
/// general trace system.
pub fn nikolayevsky_free(m: usize, s: usize) -> Result<NikolayevskyResult> {
    let f = build_cached(m, s)?;
    let lambda = free_lambda(m, s);
    let n = f.dim();
    let mut endo = Matrix::zeros(n, n);
    for w in &f.hall_basis {
        endo[(w.hall_index, w.hall_index)] = &lambda * int(w.degree as i64);
    }
    let mut eigen = Vec::new();
    for (d, layer) in &f.algebra.layers {
        eigen.push(Eigen { value: &lambda * int(*d as i64), multiplicity: layer.dim(), space: layer.clone() });
    }
    // every linear map W_1 → n extends to a unique derivation
    Ok(NikolayevskyResult { endo, eigen, der_dim: m * n })
}

/// `d_m(s) + 2 Σ_{k=1}^{[(s+1)/2]} k d_m(k) < m^s`.
pub fn estimate_check(m: u64, s: u64) -> Result<bool> {
    if s < 4 {
        return Err(Error::Precondition(format!("the estimate needs s >= 4, got {s}")));
    }
    let half: u64 = (1..=s.div_ceil(2)).map(|k| k * witt_dim(m, k)).sum();
    Ok(witt_dim(m, s) + 2 * half < m.pow(s as u32))
}

/// Value of `Σ_{k=1}^s k d_m(k)(2k - n - 1)`.
pub fn cotangent_eigen_sum(m: u64, s: u64, n: u64) -> i128 {
    (1..=s).map(|k| (k * witt_dim(m, k)) as i128 * (2 * k as i128 - n as i128 - 1)).sum()
}

/// Whether `Σ_{k=1}^s k d_m(k)(2k - n - 1) = 0`.
pub fn cotangent_eigen_equation(m: u64, s: u64, n: u64) -> Result<bool> {
    if n < 1 || n > s {
        return Err(Error::Precondition(format!("need 1 <= n <= s, got n = {n}, s = {s}")));
    }
    Ok(cotangent_eigen_sum(m, s, n) == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonniceReason {
    /// Two generators in a nice basis force `dim f(W_5) ≤ 4` while
    /// `dim W_5 = 6`.
    PairObstruction { dim_w5: usize, bound: usize },
    /// `dim [[W_1,W_1],W_1]` exceeds `m(-4+3m+m²)/6`.
    EigenspaceBound { m: usize, dim: usize, bound: usize },
}

#[derive(Clone, Debug)]
pub enum Verdict {
    /// The leading Hall basis, verified nice.
    Nice(NiceCertificate),
    Nonnice(NonniceReason),
}

impl Verdict {
    pub fn is_nice(&self) -> bool {
        matches!(self, Verdict::Nice(_))
    }
}

/// Bound `m(-4+3m+m²)/6` on `dim [[W,W],W]` for a nice eigenspace `W` of
/// dimension `m`.
pub fn eigenspace_bound(m: usize) -> usize {
    m * (3 * m + m * m - 4) / 6
}

pub fn niceness_verdict(m: usize, s: usize) -> Result<Verdict> {
    if m < 2 || s < 1 {
        return Err(Error::Precondition(format!("need m >= 2 and s >= 1, got ({m}, {s})")));
    }
    if m == 2 && s >= 5 {
        return Ok(Verdict::Nonnice(NonniceReason::PairObstruction { dim_w5: witt_dim(2, 5) as usize, bound: 4 }));
    }
    if m >= 3 && s >= 3 {
        let dim = witt_dim(m as u64, 3) as usize;
        return Ok(Verdict::Nonnice(NonniceReason::EigenspaceBound { m, dim, bound: eigenspace_bound(m) }));
    }
    let f = build_cached(m, s)?;
    let cert = NiceCertificate::new(f.lie().clone(), Matrix::identity(f.dim()))?;
    match check_nice_basis(&cert)? {
        NiceCheck::Pass => Ok(Verdict::Nice(cert)),
        NiceCheck::Witness(w) => Err(Error::Precondition(format!("Hall basis of n_({m},{s}) is not nice: {w}"))),
    }
}

/// The `a` with `Ñ = a(N - N* + 2P)` on `T*g`, where `N` is the
/// Nikolayevsky derivation of `g` extended by zero and `P` projects onto
/// `g*`, if one exists.
pub fn cotangent_factor(t_nik: &Matrix<Rational>, n_g: &Matrix<Rational>, metric: &crate::QForm) -> Result<Option<Rational>> {
    let n = n_g.rows();
    let mut ext = Matrix::zeros(2 * n, 2 * n);
    for (r, c, v) in n_g.entries() {
        ext[(r, c)] = v.clone();
    }
    let adj = metric.metric_adjoint(&ext)?;
    let p = crate::constructions::dual_projection::<Rational>(n);
    let m = ext.sub(&adj)?.add(&p.add(&p)?)?;
    let Some((r, c, v)) = m.entries().next() else {
        return Ok(None);
    };
    let a = &t_nik[(r, c)] / v;
    let scaled = Matrix::from_fn(2 * n, 2 * n, |i, j| &m[(i, j)] * &a);
    Ok((&scaled == t_nik).then_some(a))
}

/// Layers `W_1..W_s` of `n_{m,s}` as coordinate subspaces.
pub fn layers(f: &FreeNilpotent) -> Vec<Subspace<Rational>> {
    f.algebra.layers.iter().map(|(_, s)| s.clone()).collect()
}
