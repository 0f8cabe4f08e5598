//! NFA and DFA construction, minimization and boolean operations.
//!
//! Regex compilation is Thompson's construction followed by the subset
//! construction. Complement sub-expressions are determinized and
//! complemented first, then spliced back into the NFA as a DFA fragment.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::regex::Regex;

/// Default cap on DFA states produced by any construction.
pub const DEFAULT_DFA_CAP: usize = 20_000;

/// Complete deterministic automaton over letters `0..num_letters`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    num_letters: usize,
    start: usize,
    accepting: Vec<bool>,
    // delta[state * num_letters + letter]
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds a DFA from a row-major transition table. Every row must have
    /// `num_letters` entries, all of them valid states.
    pub fn new(
        num_letters: usize,
        start: usize,
        accepting: Vec<bool>,
        delta: Vec<usize>,
    ) -> Result<Self> {
        let n = accepting.len();
        if n == 0 || num_letters == 0 {
            return Err(Error::InvalidParameter("DFA needs a state and a letter".into()));
        }
        if delta.len() != n * num_letters {
            return Err(Error::InvalidParameter(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                n * num_letters
            )));
        }
        if start >= n || delta.iter().any(|&q| q >= n) {
            return Err(Error::InvalidParameter("state index out of range".into()));
        }
        Ok(Dfa { num_letters, start, accepting, delta })
    }

    /// Single-state automaton accepting everything or nothing.
    pub fn trivial(num_letters: usize, accept_all: bool) -> Self {
        Dfa { num_letters, start: 0, accepting: vec![accept_all], delta: vec![0; num_letters] }
    }

    /// Counts occurrences of `letter` modulo `modulus`, accepting when the
    /// count is congruent to `residue`.
    pub fn counter(num_letters: usize, letter: Letter, modulus: usize, residue: usize) -> Self {
        let mut delta = Vec::with_capacity(modulus * num_letters);
        for q in 0..modulus {
            for a in 0..num_letters {
                delta.push(if a == letter { (q + 1) % modulus } else { q });
            }
        }
        let accepting = (0..modulus).map(|q| q == residue % modulus).collect();
        Dfa { num_letters, start: 0, accepting, delta }
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn num_letters(&self) -> usize {
        self.num_letters
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        self.accepting.iter().enumerate().filter(|(_, &a)| a).map(|(q, _)| q)
    }

    #[inline]
    pub fn step(&self, state: usize, letter: Letter) -> usize {
        self.delta[state * self.num_letters + letter]
    }

    pub fn run(&self, from: usize, w: &[Letter]) -> usize {
        w.iter().fold(from, |q, &a| self.step(q, a))
    }

    /// Membership; letters must be below `num_letters`.
    pub fn accepts(&self, w: &[Letter]) -> bool {
        self.accepting[self.run(self.start, w)]
    }

    pub fn complement(&self) -> Dfa {
        Dfa { accepting: self.accepting.iter().map(|a| !a).collect(), ..self.clone() }
    }

    /// Synchronous product; `op` combines acceptance of the two components.
    pub fn product(&self, other: &Dfa, op: impl Fn(bool, bool) -> bool, cap: usize) -> Result<Dfa> {
        if self.num_letters != other.num_letters {
            return Err(Error::AlphabetMismatch("product of DFAs over different alphabets".into()));
        }
        let k = self.num_letters;
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(self.start, other.start)];
        ids.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for a in 0..k {
                let next = (self.step(p, a), other.step(q, a));
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        if pairs.len() >= cap {
                            return Err(Error::CapExceeded { what: "DFA state", cap });
                        }
                        ids.insert(next, pairs.len());
                        pairs.push(next);
                        pairs.len() - 1
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| op(self.accepting[p], other.accepting[q]))
            .collect();
        Ok(Dfa { num_letters: k, start: 0, accepting, delta })
    }

    pub fn intersect(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |a, b| a && b, DEFAULT_DFA_CAP)
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |a, b| a || b, DEFAULT_DFA_CAP)
    }

    /// Language equivalence, with a shortest distinguishing word on failure.
    pub fn distinguishing_word(&self, other: &Dfa) -> Option<Vec<Letter>> {
        assert_eq!(self.num_letters, other.num_letters);
        let mut parent: HashMap<(usize, usize), Option<((usize, usize), Letter)>> = HashMap::new();
        let root = (self.start, other.start);
        parent.insert(root, None);
        let mut queue = VecDeque::from([root]);
        while let Some((p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                let mut word = Vec::new();
                let mut cur = (p, q);
                while let Some(Some((prev, a))) = parent.get(&cur) {
                    word.push(*a);
                    cur = *prev;
                }
                word.reverse();
                return Some(word);
            }
            for a in 0..self.num_letters {
                let next = (self.step(p, a), other.step(q, a));
                parent.entry(next).or_insert_with(|| {
                    queue.push_back(next);
                    Some(((p, q), a))
                });
            }
        }
        None
    }

    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.num_letters == other.num_letters && self.distinguishing_word(other).is_none()
    }

    /// Reachable states in breadth-first order (letters in alphabet order).
    fn reachable_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.start];
        seen[self.start] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for a in 0..self.num_letters {
                let r = self.step(q, a);
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
            i += 1;
        }
        order
    }

    /// Minimal complete DFA, with states renumbered in breadth-first order
    /// from the start state. Minimal DFAs of equal languages are therefore
    /// structurally equal.
    pub fn minimize(&self) -> Dfa {
        let k = self.num_letters;
        let reachable = self.reachable_order();
        let mut local = vec![usize::MAX; self.num_states()];
        for (i, &q) in reachable.iter().enumerate() {
            local[q] = i;
        }
        let n = reachable.len();
        let succ = |i: usize, a: Letter| local[self.step(reachable[i], a)];

        // Moore refinement: split blocks by (block, successor blocks) until stable.
        let mut block: Vec<usize> = reachable.iter().map(|&q| self.accepting[q] as usize).collect();
        let mut num_blocks = {
            let mut seen = block.clone();
            seen.sort_unstable();
            seen.dedup();
            seen.len()
        };
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = Vec::with_capacity(n);
            for i in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(block[i]);
                sig.extend((0..k).map(|a| block[succ(i, a)]));
                let fresh = ids.len();
                next.push(*ids.entry(sig).or_insert(fresh));
            }
            let count = ids.len();
            block = next;
            if count == num_blocks {
                break;
            }
            num_blocks = count;
        }

        // Renumber blocks breadth-first from the start block.
        let mut rep = vec![usize::MAX; num_blocks];
        for i in (0..n).rev() {
            rep[block[i]] = i;
        }
        let mut order = vec![block[0]];
        let mut new_id = vec![usize::MAX; num_blocks];
        new_id[block[0]] = 0;
        let mut j = 0;
        while j < order.len() {
            let b = order[j];
            for a in 0..k {
                let nb = block[succ(rep[b], a)];
                if new_id[nb] == usize::MAX {
                    new_id[nb] = order.len();
                    order.push(nb);
                }
            }
            j += 1;
        }
        let mut delta = Vec::with_capacity(order.len() * k);
        let mut accepting = Vec::with_capacity(order.len());
        for &b in &order {
            let i = rep[b];
            accepting.push(self.accepting[reachable[i]]);
            delta.extend((0..k).map(|a| new_id[block[succ(i, a)]]));
        }
        Dfa { num_letters: k, start: 0, accepting, delta }
    }

    /// Plain-text table: `start`, `accepting` header lines, then one
    /// `state letter next` line per transition.
    pub fn to_table(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "states {}", self.num_states());
        let _ = writeln!(out, "start {}", self.start);
        let acc: Vec<String> = self.accepting_states().map(|q| q.to_string()).collect();
        let _ = writeln!(out, "accepting {}", acc.join(" "));
        for q in 0..self.num_states() {
            for a in 0..self.num_letters {
                let _ = writeln!(out, "{} {} {}", q, alphabet.symbol(a), self.step(q, a));
            }
        }
        out
    }

    /// Parses the format written by [`Dfa::to_table`].
    pub fn from_table(text: &str, alphabet: &Alphabet) -> Result<Dfa> {
        let bad = |msg: &str| Error::Parse(format!("DFA table: {msg}"));
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let mut header = |key: &str| -> Result<Vec<String>> {
            let line = lines.next().ok_or_else(|| bad("truncated header"))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(key) {
                return Err(bad(&format!("expected `{key}` line")));
            }
            Ok(parts.map(String::from).collect())
        };
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("bad number {s:?}")));
        let states = num(header("states")?.first().ok_or_else(|| bad("missing count"))?)?;
        let start = num(header("start")?.first().ok_or_else(|| bad("missing start"))?)?;
        let mut accepting = vec![false; states];
        for s in header("accepting")? {
            let q = num(&s)?;
            *accepting.get_mut(q).ok_or_else(|| bad("accepting state out of range"))? = true;
        }
        let k = alphabet.len();
        let mut delta = vec![usize::MAX; states * k];
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(bad(&format!("bad transition line {line:?}")));
            }
            let q = num(parts[0])?;
            let a = alphabet
                .index_of(parts[1])
                .ok_or_else(|| Error::UnknownSymbol { symbol: parts[1].into() })?;
            if q >= states {
                return Err(bad("state out of range"));
            }
            delta[q * k + a] = num(parts[2])?;
        }
        if delta.contains(&usize::MAX) {
            return Err(bad("transition table is not total"));
        }
        Dfa::new(k, start, accepting, delta)
    }
}

/// Epsilon-NFA used as the intermediate form of regex compilation.
#[derive(Clone, Debug, Default)]
struct Nfa {
    eps: Vec<Vec<usize>>,
    edges: Vec<Vec<(Letter, usize)>>,
}

impl Nfa {
    fn add_state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.edges.push(Vec::new());
        self.eps.len() - 1
    }

    /// Adds a fragment for `re`, returning (entry, exit).
    fn fragment(&mut self, re: &Regex, num_letters: usize, cap: usize) -> Result<(usize, usize)> {
        let s = self.add_state();
        let t = self.add_state();
        match re {
            Regex::Empty => {}
            Regex::Epsilon => self.eps[s].push(t),
            Regex::Letter(a) => self.edges[s].push((*a, t)),
            Regex::Union(a, b) => {
                let (a0, a1) = self.fragment(a, num_letters, cap)?;
                let (b0, b1) = self.fragment(b, num_letters, cap)?;
                self.eps[s].extend([a0, b0]);
                self.eps[a1].push(t);
                self.eps[b1].push(t);
            }
            Regex::Concat(a, b) => {
                let (a0, a1) = self.fragment(a, num_letters, cap)?;
                let (b0, b1) = self.fragment(b, num_letters, cap)?;
                self.eps[s].push(a0);
                self.eps[a1].push(b0);
                self.eps[b1].push(t);
            }
            Regex::Star(a) => {
                let (a0, a1) = self.fragment(a, num_letters, cap)?;
                self.eps[s].extend([a0, t]);
                self.eps[a1].extend([a0, t]);
            }
            Regex::Complement(a) => {
                let dfa = compile_regex(a, num_letters, cap)?.complement().minimize();
                let base = self.eps.len();
                for _ in 0..dfa.num_states() {
                    self.add_state();
                }
                self.eps[s].push(base + dfa.start());
                for q in 0..dfa.num_states() {
                    for l in 0..num_letters {
                        self.edges[base + q].push((l, base + dfa.step(q, l)));
                    }
                    if dfa.is_accepting(q) {
                        self.eps[base + q].push(t);
                    }
                }
            }
        }
        Ok((s, t))
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &r in &self.eps[q] {
                if set.insert(r) {
                    stack.push(r);
                }
            }
        }
    }

    fn determinize(&self, start: usize, accept: usize, num_letters: usize, cap: usize) -> Result<Dfa> {
        let mut init = BTreeSet::from([start]);
        self.closure(&mut init);
        let mut ids: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        ids.insert(init.clone(), 0);
        let mut sets = vec![init];
        let mut delta = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            for a in 0..num_letters {
                let mut next: BTreeSet<usize> = sets[i]
                    .iter()
                    .flat_map(|&q| self.edges[q].iter().filter(|(l, _)| *l == a).map(|&(_, r)| r))
                    .collect();
                self.closure(&mut next);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        if sets.len() >= cap {
                            return Err(Error::CapExceeded { what: "DFA state", cap });
                        }
                        ids.insert(next.clone(), sets.len());
                        sets.push(next);
                        sets.len() - 1
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = sets.iter().map(|s| s.contains(&accept)).collect();
        Ok(Dfa { num_letters, start: 0, accepting, delta })
    }
}

fn compile_regex(re: &Regex, num_letters: usize, cap: usize) -> Result<Dfa> {
    let mut nfa = Nfa::default();
    let (s, t) = nfa.fragment(re, num_letters, cap)?;
    nfa.determinize(s, t, num_letters, cap)
}

/// Minimal complete DFA for `re` over `alphabet`, with the default state cap.
pub fn regex_to_min_dfa(re: &Regex, alphabet: &Alphabet) -> Result<Dfa> {
    regex_to_min_dfa_capped(re, alphabet, DEFAULT_DFA_CAP)
}

pub fn regex_to_min_dfa_capped(re: &Regex, alphabet: &Alphabet, cap: usize) -> Result<Dfa> {
    if let Some(l) = re.max_letter() {
        if l >= alphabet.len() {
            return Err(Error::LetterOutOfRange { index: l, size: alphabet.len() });
        }
    }
    Ok(compile_regex(re, alphabet.len(), cap)?.minimize())
}
