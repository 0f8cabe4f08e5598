//! Cardinal languages: Parikh images, bounded significance, and bounded
//! search for multinomial-coefficient reduction witnesses.
//!
//! A witness for reducing `A` (over `k` letters) to `B` (over `k'` letters)
//! is a list of `k'` functions `p_i(v) = Σ_{u ≤ z} α_u · C(v, u)` with
//! natural coefficients such that `v ∈ N(A) ⟺ (p_1(v), …, p_k'(v)) ∈ N(B)`.
//! The search here checks that biconditional on a finite grid only, so a
//! found witness is verified on that grid and "none within bounds" proves
//! nothing about larger bounds.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::hash::Hash;

use thiserror::Error;

use crate::acceptor::{Acceptor, AcceptorKind};
use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::monoid::{transition_monoid, DEFAULT_MONOID_CAP};
use crate::numeric::{multinomial, Count};

/// Largest alphabet `cardinal_spec_of` will scan.
pub const DEFAULT_ALPHABET_CAP: usize = 4;
/// Verification grids are never widened past this bound.
pub const GRID_HARD_CAP: u64 = 64;
/// Default limit on candidate combos per coordinate and on tuples visited.
pub const DEFAULT_SEARCH_LIMIT: usize = 1 << 22;

/// Per-letter occurrence counts, in alphabet order.
pub fn parikh(w: &[Letter], alphabet: &Alphabet) -> Vec<u64> {
    let mut counts = vec![0u64; alphabet.len()];
    for &l in w {
        counts[l] += 1;
    }
    counts
}

/// How membership is decided from a Parikh vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountRule {
    /// Bounded significance: membership of `v` is `table[cap_m(v)]`, the
    /// grid `{0..=m}^k` flattened with the first letter most significant.
    Capped { m: usize, table: Vec<bool> },
    /// More occurrences of `letter` than of all other letters together.
    Majority { letter: Letter },
    /// The count of `letter` is congruent to `residue` modulo `modulus`.
    Modular { letter: Letter, modulus: u64, residue: u64 },
}

/// A language given by a membership rule on Parikh vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalSpec {
    k: usize,
    rule: CountRule,
}

impl CardinalSpec {
    pub fn capped(k: usize, m: usize, table: Vec<bool>) -> Result<Self> {
        let expected = grid_len(k, m as u64)?;
        if k == 0 || table.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: table.len() });
        }
        Ok(CardinalSpec { k, rule: CountRule::Capped { m, table } })
    }

    /// Tabulates `member` on the capped grid `{0..=m}^k`.
    pub fn from_predicate(k: usize, m: usize, member: impl Fn(&[u64]) -> bool) -> Result<Self> {
        let table = GridPoints::new(k, m as u64).map(|v| member(&v)).collect();
        CardinalSpec::capped(k, m, table)
    }

    pub fn majority(k: usize, letter: Letter) -> Result<Self> {
        if letter >= k {
            return Err(Error::LetterOutOfRange { index: letter, size: k });
        }
        Ok(CardinalSpec { k, rule: CountRule::Majority { letter } })
    }

    pub fn modular(k: usize, letter: Letter, modulus: u64, residue: u64) -> Result<Self> {
        if letter >= k {
            return Err(Error::LetterOutOfRange { index: letter, size: k });
        }
        if modulus == 0 {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        Ok(CardinalSpec { k, rule: CountRule::Modular { letter, modulus, residue: residue % modulus } })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rule(&self) -> &CountRule {
        &self.rule
    }

    /// The significance threshold, for bounded-significance specs.
    pub fn threshold(&self) -> Option<usize> {
        match self.rule {
            CountRule::Capped { m, .. } => Some(m),
            _ => None,
        }
    }

    pub fn contains<N: Count>(&self, v: &[N]) -> bool {
        debug_assert_eq!(v.len(), self.k);
        match &self.rule {
            CountRule::Capped { m, table } => {
                let cap = <N as Count>::from_u64(*m as u64);
                let idx = v.iter().fold(0usize, |acc, x| {
                    let c = if *x >= cap { *m } else { x.to_usize().expect("below cap") };
                    acc * (m + 1) + c
                });
                table[idx]
            }
            CountRule::Majority { letter } => {
                let others = v
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| i != letter)
                    .fold(N::zero(), |acc, (_, x)| acc + x.clone());
                v[*letter] > others
            }
            CountRule::Modular { letter, modulus, residue } => {
                let m = <N as Count>::from_u64(*modulus);
                v[*letter].clone() % m == <N as Count>::from_u64(*residue)
            }
        }
    }

    pub fn contains_counts(&self, v: &[u64]) -> bool {
        self.contains(v)
    }

    pub fn accepts_word(&self, w: &[Letter]) -> bool {
        let mut counts = vec![0u64; self.k];
        for &l in w {
            counts[l] += 1;
        }
        self.contains_counts(&counts)
    }

    /// Collapses a value in component `i` to the part membership can see.
    fn normalize<N: Count>(&self, i: usize, value: N) -> N {
        match &self.rule {
            CountRule::Capped { m, .. } => value.min(<N as Count>::from_u64(*m as u64)),
            CountRule::Majority { .. } => value,
            CountRule::Modular { letter, modulus, .. } => {
                if i == *letter {
                    value % <N as Count>::from_u64(*modulus)
                } else {
                    N::zero()
                }
            }
        }
    }

    /// Largest coefficient that can matter for component `i`; larger
    /// coefficients give the same normalized values.
    fn useful_alpha(&self, i: usize, alpha_max: u32) -> u32 {
        match &self.rule {
            CountRule::Capped { m, .. } => alpha_max.min((*m).max(1) as u32),
            CountRule::Majority { .. } => alpha_max,
            CountRule::Modular { letter, .. } => {
                if i == *letter {
                    alpha_max
                } else {
                    alpha_max.min(1)
                }
            }
        }
    }

    /// Text form: header `k m` followed by one `v_1 … v_k ∈|∉` line per
    /// capped grid point; unbounded rules use `k maj <letter>` or
    /// `k mod <letter> <modulus> <residue>` and have no body.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.rule {
            CountRule::Capped { m, table } => {
                let _ = writeln!(out, "{} {}", self.k, m);
                for (v, &member) in GridPoints::new(self.k, *m as u64).zip(table) {
                    let coords: Vec<String> = v.iter().map(u64::to_string).collect();
                    let _ = writeln!(out, "{} {}", coords.join(" "), if member { "∈" } else { "∉" });
                }
            }
            CountRule::Majority { letter } => {
                let _ = writeln!(out, "{} maj {}", self.k, letter);
            }
            CountRule::Modular { letter, modulus, residue } => {
                let _ = writeln!(out, "{} mod {} {} {}", self.k, letter, modulus, residue);
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(format!("cardinal spec: {msg}"));
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header: Vec<&str> = lines
            .next()
            .ok_or_else(|| bad("missing header".into()))?
            .split_whitespace()
            .collect();
        let num = |s: &str| s.parse::<u64>().map_err(|_| bad(format!("bad number {s:?}")));
        let k = num(header.first().ok_or_else(|| bad("empty header".into()))?)? as usize;
        if k == 0 {
            return Err(bad("k must be positive".into()));
        }
        match header.get(1).copied() {
            Some("maj") => {
                let letter = match header.get(2) {
                    Some(s) => num(s)? as usize,
                    None => k - 1,
                };
                CardinalSpec::majority(k, letter)
            }
            Some("mod") => {
                if header.len() != 5 {
                    return Err(bad("expected `k mod <letter> <modulus> <residue>`".into()));
                }
                CardinalSpec::modular(k, num(header[2])? as usize, num(header[3])?, num(header[4])?)
            }
            Some(m) if header.len() == 2 => {
                let m = num(m)? as usize;
                let len = grid_len(k, m as u64)?;
                let mut table: Vec<Option<bool>> = vec![None; len];
                for line in lines {
                    let parts: Vec<&str> = line.split_whitespace().collect();
                    if parts.len() != k + 1 {
                        return Err(bad(format!("expected {} coordinates and a mark: {line:?}", k)));
                    }
                    let mut idx = 0usize;
                    for p in &parts[..k] {
                        let c = num(p)? as usize;
                        if c > m {
                            return Err(bad(format!("coordinate {c} exceeds threshold {m}")));
                        }
                        idx = idx * (m + 1) + c;
                    }
                    let member = match parts[k] {
                        "∈" | "in" | "1" => true,
                        "∉" | "notin" | "0" => false,
                        other => return Err(bad(format!("bad membership mark {other:?}"))),
                    };
                    if table[idx].replace(member).is_some() {
                        return Err(bad(format!("duplicate grid point {line:?}")));
                    }
                }
                let table: Option<Vec<bool>> = table.into_iter().collect();
                CardinalSpec::capped(k, m, table.ok_or_else(|| bad("grid is incomplete".into()))?)
            }
            _ => Err(bad("expected header `k m`, `k maj [letter]` or `k mod ...`".into())),
        }
    }
}

fn grid_len(k: usize, bound: u64) -> Result<usize> {
    let side = usize::try_from(bound + 1).map_err(|_| Error::CapExceeded { what: "grid", cap: usize::MAX })?;
    side.checked_pow(k as u32).ok_or(Error::CapExceeded { what: "grid", cap: usize::MAX })
}

/// The grid `{0..=bound}^k` in lexicographic order.
#[derive(Clone, Debug)]
pub struct GridPoints {
    bound: u64,
    next: Option<Vec<u64>>,
}

impl GridPoints {
    pub fn new(k: usize, bound: u64) -> Self {
        GridPoints { bound, next: Some(vec![0; k]) }
    }
}

impl Iterator for GridPoints {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.bound {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Why an acceptor has no bounded-significance cardinal description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CardinalFailure {
    #[error("language is not cardinal: membership depends on letter order")]
    NotCommutative,
    #[error("no threshold up to m_max={m_max}")]
    NoThreshold { m_max: usize },
    #[error("alphabet of size {k} exceeds the cap of {cap}")]
    AlphabetTooLarge { k: usize, cap: usize },
    #[error(transparent)]
    Engine(#[from] Error),
}

/// Derives a bounded-significance spec for `a` with the smallest threshold
/// `m ≤ m_max` such that membership on `{0..=m_max+m}^k` is invariant under
/// capping at `m`.
pub fn cardinal_spec_of(a: &Acceptor, m_max: usize) -> Result<CardinalSpec, CardinalFailure> {
    cardinal_spec_of_capped(a, m_max, DEFAULT_ALPHABET_CAP)
}

pub fn cardinal_spec_of_capped(
    a: &Acceptor,
    m_max: usize,
    alphabet_cap: usize,
) -> Result<CardinalSpec, CardinalFailure> {
    let k = a.alphabet().len();
    if k > alphabet_cap {
        return Err(CardinalFailure::AlphabetTooLarge { k, cap: alphabet_cap });
    }
    let member: Box<dyn Fn(&[u64]) -> bool> = match a.kind() {
        AcceptorKind::Counting(spec) => {
            let spec = spec.clone();
            Box::new(move |v| spec.contains_counts(v))
        }
        _ => {
            let dfa = a.to_dfa().ok_or_else(|| Error::Unsupported("acceptor has no DFA".into()))?;
            let monoid = transition_monoid(&dfa.minimize(), DEFAULT_MONOID_CAP)?;
            if !monoid.is_commutative() {
                return Err(CardinalFailure::NotCommutative);
            }
            Box::new(move |v| {
                let w: Vec<Letter> = v
                    .iter()
                    .enumerate()
                    .flat_map(|(l, &n)| std::iter::repeat(l).take(n as usize))
                    .collect();
                dfa.accepts(&w)
            })
        }
    };
    'threshold: for m in 0..=m_max {
        let bound = (m_max + m) as u64;
        for v in GridPoints::new(k, bound) {
            let capped: Vec<u64> = v.iter().map(|&x| x.min(m as u64)).collect();
            if member(&v) != member(&capped) {
                continue 'threshold;
            }
        }
        return Ok(CardinalSpec::from_predicate(k, m, &*member)?);
    }
    Err(CardinalFailure::NoThreshold { m_max })
}

/// A positive linear combination of multinomial coefficients,
/// `p(v) = Σ_{u ≤ z} α_u · Π_j C(v_j, u_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultinomialCombo<N> {
    z: Vec<u32>,
    // Nonzero coefficients, sorted by u.
    terms: Vec<(Vec<u32>, N)>,
}

impl<N: Count> MultinomialCombo<N> {
    /// Builds a combo; zero coefficients are dropped, and at least one
    /// coefficient must be nonzero.
    pub fn new(z: Vec<u32>, terms: impl IntoIterator<Item = (Vec<u32>, N)>) -> Result<Self> {
        let mut merged: HashMap<Vec<u32>, N> = HashMap::new();
        for (u, alpha) in terms {
            if u.len() != z.len() {
                return Err(Error::DimensionMismatch { expected: z.len(), got: u.len() });
            }
            if u.iter().zip(&z).any(|(a, b)| a > b) {
                return Err(Error::InvalidParameter(format!("term {u:?} exceeds degree bound {z:?}")));
            }
            let slot = merged.entry(u).or_insert_with(N::zero);
            *slot = slot.clone() + alpha;
        }
        let mut terms: Vec<(Vec<u32>, N)> = merged.into_iter().filter(|(_, a)| !a.is_zero()).collect();
        if terms.is_empty() {
            return Err(Error::InvalidParameter("combination needs a nonzero coefficient".into()));
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(MultinomialCombo { z, terms })
    }

    /// Degree bound taken as the componentwise maximum of the terms.
    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = (Vec<u32>, N)>) -> Result<Self> {
        let terms: Vec<(Vec<u32>, N)> = terms.into_iter().collect();
        let mut z = vec![0u32; k];
        for (u, _) in &terms {
            if u.len() != k {
                return Err(Error::DimensionMismatch { expected: k, got: u.len() });
            }
            for (zj, &uj) in z.iter_mut().zip(u) {
                *zj = (*zj).max(uj);
            }
        }
        MultinomialCombo::new(z, terms)
    }

    /// The constant-zero function. Not a valid search candidate, but useful
    /// for checking that verification rejects it.
    pub fn zero(k: usize) -> Self {
        MultinomialCombo { z: vec![0; k], terms: Vec::new() }
    }

    pub fn constant(k: usize, c: N) -> Result<Self> {
        MultinomialCombo::new(vec![0; k], [(vec![0; k], c)])
    }

    /// `C(v_i, 1) = v_i`.
    pub fn coordinate(k: usize, i: usize) -> Self {
        let mut u = vec![0; k];
        u[i] = 1;
        MultinomialCombo { z: u.clone(), terms: vec![(u, N::one())] }
    }

    pub fn dimension(&self) -> usize {
        self.z.len()
    }

    pub fn degree_bound(&self) -> &[u32] {
        &self.z
    }

    pub fn terms(&self) -> &[(Vec<u32>, N)] {
        &self.terms
    }

    pub fn coefficient_sum(&self) -> N {
        self.terms.iter().fold(N::zero(), |acc, (_, a)| acc + a.clone())
    }

    /// Unchecked evaluation; `v` must have the combo's dimension.
    pub fn eval(&self, v: &[u64]) -> N {
        self.terms
            .iter()
            .fold(N::zero(), |acc, (u, alpha)| acc + alpha.clone() * multinomial::<N>(v, u))
    }

    /// Lines `u_1 … u_k : α`, one per nonzero term.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (u, alpha) in &self.terms {
            let coords: Vec<String> = u.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{} : {}", coords.join(" "), alpha);
        }
        out
    }
}

impl<N: Count> fmt::Display for MultinomialCombo<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(u, a)| {
                if u.iter().all(|&x| x == 0) {
                    format!("{a}")
                } else {
                    let us: Vec<String> = u.iter().map(u32::to_string).collect();
                    format!("{a}·C(v,({}))", us.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Evaluates `c` at `v`, checking dimensions.
pub fn combo_eval<N: Count>(c: &MultinomialCombo<N>, v: &[u64]) -> Result<N> {
    if v.len() != c.dimension() {
        return Err(Error::DimensionMismatch { expected: c.dimension(), got: v.len() });
    }
    Ok(c.eval(v))
}

/// One combo per target letter, verified on `{0..=grid}^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionWitness<N> {
    pub combos: Vec<MultinomialCombo<N>>,
    pub grid: u64,
}

impl<N: Count> ReductionWitness<N> {
    pub fn identity(k: usize, grid: u64) -> Self {
        ReductionWitness { combos: (0..k).map(|i| MultinomialCombo::coordinate(k, i)).collect(), grid }
    }

    pub fn apply(&self, v: &[u64]) -> Vec<N> {
        self.combos.iter().map(|c| c.eval(v)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "GRID: {}", self.grid);
        for (i, c) in self.combos.iter().enumerate() {
            let _ = writeln!(out, "COMBO {}", i + 1);
            out.push_str(&c.to_lines());
        }
        out
    }
}

/// Checks `v ∈ N(a) ⟺ p(v) ∈ N(b)` on every point of `{0..=grid}^k`.
pub fn verify_witness<N: Count>(
    w: &ReductionWitness<N>,
    a: &CardinalSpec,
    b: &CardinalSpec,
    grid: u64,
) -> Result<bool> {
    if w.combos.len() != b.k() {
        return Err(Error::DimensionMismatch { expected: b.k(), got: w.combos.len() });
    }
    if let Some(c) = w.combos.iter().find(|c| c.dimension() != a.k()) {
        return Err(Error::DimensionMismatch { expected: a.k(), got: c.dimension() });
    }
    Ok(GridPoints::new(a.k(), grid).all(|v| a.contains_counts(&v) == b.contains(&w.apply(&v))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Componentwise degree bound on the terms `u`.
    pub z_max: Vec<u32>,
    /// Largest coefficient tried.
    pub alpha_max: u32,
    /// Requested verification grid bound `V`.
    pub grid: u64,
    /// Cap on candidates per coordinate and on candidate tuples visited.
    pub limit: usize,
}

impl SearchBounds {
    pub fn new(z_max: Vec<u32>, alpha_max: u32, grid: u64) -> Self {
        SearchBounds { z_max, alpha_max, grid, limit: DEFAULT_SEARCH_LIMIT }
    }

    /// The grid actually used: widened to `2·max(m_a, m_b) + 2`, never past
    /// [`GRID_HARD_CAP`] unless the request itself is larger.
    pub fn effective_grid(&self, a: &CardinalSpec, b: &CardinalSpec) -> u64 {
        let m = a.threshold().unwrap_or(0).max(b.threshold().unwrap_or(0)) as u64;
        let needed = (2 * m + 2).min(GRID_HARD_CAP);
        self.grid.max(needed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<N> {
    Found(ReductionWitness<N>),
    /// Inconclusive: nothing within these bounds verifies.
    NoneWithinBounds { z_max: Vec<u32>, alpha_max: u32, grid: u64 },
}

impl<N> SearchOutcome<N> {
    pub fn witness(&self) -> Option<&ReductionWitness<N>> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            SearchOutcome::NoneWithinBounds { .. } => None,
        }
    }
}

/// Ordering key of a candidate: coefficient sum, number of nonzero terms,
/// total degree of the support. Additive over coordinates.
type Key = (u64, u64, u64);

fn add_key(a: Key, b: Key) -> Key {
    (a.0 + b.0, a.1 + b.1, a.2 + b.2)
}

struct Candidate<N> {
    key: Key,
    alphas: Vec<u32>,
    values: Vec<N>,
}

/// Bounded search for a reduction witness from `a` to `b`.
///
/// The identity witness is tried first when both alphabets have the same
/// size. Otherwise candidates are visited in increasing (coefficient sum,
/// term count, degree), ties broken lexicographically, so the first witness
/// found is minimal in that order.
pub fn search_reduction<N: Count + Hash>(
    a: &CardinalSpec,
    b: &CardinalSpec,
    bounds: &SearchBounds,
) -> Result<SearchOutcome<N>> {
    let k = a.k();
    if bounds.z_max.len() != k {
        return Err(Error::DimensionMismatch { expected: k, got: bounds.z_max.len() });
    }
    if bounds.alpha_max == 0 || bounds.limit == 0 {
        return Err(Error::InvalidParameter("search bounds must be positive".into()));
    }
    let grid = bounds.effective_grid(a, b);
    let points: Vec<Vec<u64>> = {
        let n = grid_len(k, grid)?;
        if n > bounds.limit {
            return Err(Error::CapExceeded { what: "grid point", cap: bounds.limit });
        }
        GridPoints::new(k, grid).collect()
    };
    let in_a: Vec<bool> = points.iter().map(|v| a.contains_counts(v)).collect();

    if b.k() == k && bounds.z_max.iter().all(|&z| z >= 1) {
        let identity = ReductionWitness::<N>::identity(k, grid);
        if verify_witness(&identity, a, b, grid)? {
            return Ok(SearchOutcome::Found(identity));
        }
    }

    // Terms u ≤ z_max in lexicographic order, and C(v, u) on the grid.
    let us: Vec<Vec<u32>> = UPoints::new(&bounds.z_max).collect();
    let binom: Vec<Vec<N>> = us
        .iter()
        .map(|u| points.iter().map(|v| multinomial::<N>(v, u)).collect())
        .collect();

    let mut lists: Vec<Vec<Candidate<N>>> = Vec::with_capacity(b.k());
    for i in 0..b.k() {
        let amax = b.useful_alpha(i, bounds.alpha_max);
        let total = (amax as usize + 1)
            .checked_pow(us.len() as u32)
            .filter(|&t| t <= bounds.limit)
            .ok_or(Error::CapExceeded { what: "candidate combination", cap: bounds.limit })?;
        let mut best: HashMap<Vec<N>, Candidate<N>> = HashMap::new();
        let mut alphas = vec![0u32; us.len()];
        for _ in 1..total {
            odometer(&mut alphas, amax);
            let mut key: Key = (0, 0, 0);
            for (u, &al) in us.iter().zip(&alphas) {
                if al > 0 {
                    key = add_key(key, (al as u64, 1, u.iter().map(|&x| x as u64).sum()));
                }
            }
            let values: Vec<N> = (0..points.len())
                .map(|g| {
                    let raw = alphas
                        .iter()
                        .zip(&binom)
                        .filter(|(&al, _)| al > 0)
                        .fold(N::zero(), |acc, (&al, col)| {
                            acc + <N as Count>::from_u64(al as u64) * col[g].clone()
                        });
                    b.normalize(i, raw)
                })
                .collect();
            let better = |old: &Candidate<N>| (key, &alphas) < (old.key, &old.alphas);
            match best.get(&values) {
                Some(old) if !better(old) => {}
                _ => {
                    best.insert(values.clone(), Candidate { key, alphas: alphas.clone(), values });
                }
            }
        }
        let mut list: Vec<Candidate<N>> = best.into_values().collect();
        list.sort_by(|x, y| (x.key, &x.alphas).cmp(&(y.key, &y.alphas)));
        if list.is_empty() {
            return Ok(SearchOutcome::NoneWithinBounds {
                z_max: bounds.z_max.clone(),
                alpha_max: bounds.alpha_max,
                grid,
            });
        }
        lists.push(list);
    }

    // Best-first enumeration of index tuples by summed key.
    let tuple_key = |idx: &[usize]| -> Key {
        idx.iter().zip(&lists).fold((0, 0, 0), |acc, (&j, l)| add_key(acc, l[j].key))
    };
    let mut heap: BinaryHeap<Reverse<(Key, Vec<usize>)>> = BinaryHeap::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let start = vec![0usize; lists.len()];
    heap.push(Reverse((tuple_key(&start), start.clone())));
    seen.insert(start);
    let mut target = vec![N::zero(); lists.len()];
    let mut visited = 0usize;
    while let Some(Reverse((_, idx))) = heap.pop() {
        visited += 1;
        if visited > bounds.limit {
            return Err(Error::CapExceeded { what: "candidate tuple", cap: bounds.limit });
        }
        let ok = (0..points.len()).all(|g| {
            for (t, (&j, l)) in target.iter_mut().zip(idx.iter().zip(&lists)) {
                *t = l[j].values[g].clone();
            }
            b.contains(&target) == in_a[g]
        });
        if ok {
            let combos = idx
                .iter()
                .zip(&lists)
                .map(|(&j, l)| {
                    let terms = us
                        .iter()
                        .zip(&l[j].alphas)
                        .filter(|(_, &al)| al > 0)
                        .map(|(u, &al)| (u.clone(), <N as Count>::from_u64(al as u64)));
                    MultinomialCombo::from_terms(k, terms)
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(SearchOutcome::Found(ReductionWitness { combos, grid }));
        }
        for pos in 0..idx.len() {
            if idx[pos] + 1 < lists[pos].len() {
                let mut next = idx.clone();
                next[pos] += 1;
                if seen.insert(next.clone()) {
                    heap.push(Reverse((tuple_key(&next), next)));
                }
            }
        }
    }
    Ok(SearchOutcome::NoneWithinBounds { z_max: bounds.z_max.clone(), alpha_max: bounds.alpha_max, grid })
}

/// Increments a little-endian-last odometer with digits in `0..=max`.
fn odometer(digits: &mut [u32], max: u32) {
    for d in digits.iter_mut().rev() {
        if *d < max {
            *d += 1;
            return;
        }
        *d = 0;
    }
}

/// All `u ≤ z` componentwise, lexicographic.
struct UPoints {
    z: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl UPoints {
    fn new(z: &[u32]) -> Self {
        UPoints { z: z.to_vec(), next: Some(vec![0; z.len()]) }
    }
}

impl Iterator for UPoints {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.z[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

impl<N: Count> PartialOrd for MultinomialCombo<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<N: Count> Ord for MultinomialCombo<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.z, &self.terms).cmp(&(&other.z, &other.terms))
    }
}
