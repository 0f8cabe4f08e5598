//! Transition monoids of DFAs and the algebraic tests run on them.
//!
//! For a minimal DFA the transition monoid is the syntactic monoid of its
//! language. Elements are stored once, in breadth-first order from the
//! identity, and products are computed by composing transformations.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Letter};
use crate::automata::Dfa;
use crate::error::{Error, Result};

pub const DEFAULT_MONOID_CAP: usize = 50_000;

/// Total map on DFA states; the action of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(Vec<u32>);

impl Transformation {
    pub fn identity(n: usize) -> Self {
        Transformation((0..n as u32).collect())
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, state: usize) -> usize {
        self.0[state] as usize
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Transformation) -> Transformation {
        Transformation(self.0.iter().map(|&q| next.0[q as usize]).collect())
    }

    pub fn of_letter(dfa: &Dfa, letter: Letter) -> Self {
        Transformation((0..dfa.num_states()).map(|q| dfa.step(q, letter) as u32).collect())
    }
}

#[derive(Clone, Debug)]
pub struct Monoid {
    elements: Vec<Transformation>,
    index: HashMap<Transformation, usize>,
    identity: usize,
    generator_of: Vec<usize>,
    // right[x * k + a] = x · generator(a)
    right: Vec<usize>,
    // Breadth-first spanning tree: element = parent · generator(letter).
    parent: Vec<Option<(usize, Letter)>>,
}

/// Closure of the letter transformations of `dfa` under composition, with
/// the identity adjoined.
pub fn transition_monoid(dfa: &Dfa, cap: usize) -> Result<Monoid> {
    let k = dfa.num_letters();
    let letters: Vec<Transformation> = (0..k).map(|a| Transformation::of_letter(dfa, a)).collect();
    let id = Transformation::identity(dfa.num_states());
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut parent = vec![None];
    let mut right = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for (a, t) in letters.iter().enumerate() {
            let next = elements[i].then(t);
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { what: "monoid element", cap });
                    }
                    let j = elements.len();
                    index.insert(next.clone(), j);
                    elements.push(next);
                    parent.push(Some((i, a)));
                    j
                }
            };
            right.push(j);
        }
        i += 1;
    }
    let generator_of = (0..k).map(|a| right[a]).collect();
    Ok(Monoid { elements, index, identity: 0, generator_of, right, parent })
}

impl Monoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn num_generators(&self) -> usize {
        self.generator_of.len()
    }

    pub fn generator(&self, letter: Letter) -> usize {
        self.generator_of[letter]
    }

    pub fn element(&self, x: usize) -> &Transformation {
        &self.elements[x]
    }

    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Product `x · y` (the action of `x` first).
    pub fn mul(&self, x: usize, y: usize) -> usize {
        let t = self.elements[x].then(&self.elements[y]);
        self.index[&t]
    }

    /// `x · generator(a)`, from the stored right Cayley graph.
    pub fn mul_letter(&self, x: usize, a: Letter) -> usize {
        self.right[x * self.num_generators() + a]
    }

    /// The element represented by `w`.
    pub fn of_word(&self, w: &[Letter]) -> usize {
        w.iter().fold(self.identity, |x, &a| self.mul_letter(x, a))
    }

    /// A shortest word representing `x`.
    pub fn word_of(&self, mut x: usize) -> Vec<Letter> {
        let mut w = Vec::new();
        while let Some((p, a)) = self.parent[x] {
            w.push(a);
            x = p;
        }
        w.reverse();
        w
    }

    pub fn pow(&self, x: usize, n: usize) -> usize {
        (0..n).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_idempotent(x)).collect()
    }

    /// Index and period of the power sequence `x, x², x³, …`.
    pub fn index_and_period(&self, x: usize) -> (usize, usize) {
        let mut first_seen: HashMap<usize, usize> = HashMap::new();
        let mut p = x;
        let mut i = 1;
        loop {
            if let Some(&j) = first_seen.get(&p) {
                return (j, i - j);
            }
            first_seen.insert(p, i);
            p = self.mul(p, x);
            i += 1;
        }
    }

    /// Every element satisfies `x^k = x^(k+1)` for some `k`.
    pub fn is_aperiodic(&self) -> bool {
        (0..self.len()).all(|x| self.index_and_period(x).1 == 1)
    }

    /// Table symmetry, decided on generators: a monoid is commutative iff
    /// its generators commute pairwise.
    pub fn is_commutative(&self) -> bool {
        let g = &self.generator_of;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| self.mul(g[i], g[j]) == self.mul(g[j], g[i])))
    }

    /// The full multiplication table, row-major.
    pub fn table(&self) -> Vec<usize> {
        let n = self.len();
        let mut t = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                t.push(self.mul(x, y));
            }
        }
        t
    }

    /// Associativity over all triples when `|M| ≤ 200`, otherwise over a
    /// deterministic pseudo-random sample of 40 000 triples.
    pub fn is_associative(&self) -> bool {
        let n = self.len();
        let check = |x, y, z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z));
        if n <= 200 {
            return (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| check(x, y, z))));
        }
        let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        };
        (0..40_000).all(|_| check(next(), next(), next()))
    }

    /// Green's R- and L-class labels: strongly connected components of the
    /// right and left Cayley graphs.
    fn green_classes(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let k = self.num_generators();
        let right = |x: usize| (0..k).map(move |a| self.right[x * k + a]);
        let left_edges: Vec<usize> = (0..n)
            .flat_map(|x| {
                (0..k).map(move |a| {
                    let t = self.elements[self.generator_of[a]].then(&self.elements[x]);
                    self.index[&t]
                })
            })
            .collect();
        let r = strongly_connected(n, |x| right(x).collect());
        let l = strongly_connected(n, |x| left_edges[x * k..(x + 1) * k].to_vec());
        (r, l)
    }

    /// The maximal subgroup at each idempotent `e`: the H-class of `e`,
    /// which is the group of units of `eMe`.
    pub fn maximal_groups(&self) -> Vec<GroupInMonoid> {
        let (r, l) = self.green_classes();
        let mut by_class: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for x in 0..self.len() {
            by_class.entry((r[x], l[x])).or_default().push(x);
        }
        self.idempotents()
            .into_iter()
            .map(|e| GroupInMonoid::build(self, e, &by_class[&(r[e], l[e])]))
            .collect()
    }

    /// Every maximal group is solvable.
    pub fn is_solvable(&self) -> bool {
        self.maximal_groups().iter().all(is_solvable_group)
    }

    /// Plain-text export: element count, identity, generator map, then the
    /// multiplication table one row per line.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "elements {}", self.len());
        let _ = writeln!(out, "identity {}", self.identity);
        for a in 0..self.num_generators() {
            let _ = writeln!(out, "generator {} {}", alphabet.symbol(a), self.generator_of[a]);
        }
        let n = self.len();
        let table = self.table();
        for row in table.chunks(n.max(1)) {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

/// Iterative Kosaraju; returns a component label per vertex.
fn strongly_connected(n: usize, succ: impl Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let adj: Vec<Vec<usize>> = (0..n).map(&succ).collect();
    let mut radj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (x, out) in adj.iter().enumerate() {
        for &y in out {
            radj[y].push(x);
        }
    }
    let mut visited = vec![false; n];
    let mut finish = Vec::with_capacity(n);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some((x, i)) = stack.pop() {
            if i < adj[x].len() {
                stack.push((x, i + 1));
                let y = adj[x][i];
                if !visited[y] {
                    visited[y] = true;
                    stack.push((y, 0));
                }
            } else {
                finish.push(x);
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for &root in finish.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = c;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &y in &radj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = c;
                    stack.push(y);
                }
            }
        }
        c += 1;
    }
    comp
}

/// A subgroup of a monoid with its own multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInMonoid {
    /// The group's identity, an idempotent of the monoid.
    pub idempotent: usize,
    /// Monoid indices of the members, sorted.
    pub members: Vec<usize>,
    /// `inverses[i]` is the local index of the inverse of `members[i]`.
    pub inverses: Vec<usize>,
    // local[i * h + j] = local index of members[i] · members[j]
    local: Vec<usize>,
    local_identity: usize,
}

impl GroupInMonoid {
    fn build(m: &Monoid, idempotent: usize, members: &[usize]) -> Self {
        let mut members = members.to_vec();
        members.sort_unstable();
        let h = members.len();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut local = Vec::with_capacity(h * h);
        for &x in &members {
            for &y in &members {
                // Products leaving the H-class would violate the group
                // structure; `verify` reports it.
                local.push(pos.get(&m.mul(x, y)).copied().unwrap_or(usize::MAX));
            }
        }
        let local_identity = pos[&idempotent];
        let inverses = (0..h)
            .map(|i| (0..h).find(|&j| local[i * h + j] == local_identity).unwrap_or(usize::MAX))
            .collect();
        GroupInMonoid { idempotent, members, inverses, local, local_identity }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Local product of local indices.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.local[i * self.order() + j]
    }

    pub fn local_identity(&self) -> usize {
        self.local_identity
    }

    /// Closure, identity laws and two-sided inverses.
    pub fn verify(&self) -> bool {
        let h = self.order();
        let e = self.local_identity;
        if self.local.iter().any(|&x| x >= h) {
            return false;
        }
        (0..h).all(|i| {
            let inv = self.inverses[i];
            self.mul(e, i) == i
                && self.mul(i, e) == i
                && inv < h
                && self.mul(i, inv) == e
                && self.mul(inv, i) == e
        })
    }

    /// Subgroup generated by `gens` (local indices), as a sorted list.
    fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let h = self.order();
        let mut inside = vec![false; h];
        let mut out = vec![self.local_identity];
        inside[self.local_identity] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Derived series `G ⊇ G' ⊇ G'' ⊇ …` as local index sets, ending either
    /// at the trivial group or at the first repeated term.
    pub fn derived_series(&self) -> Vec<Vec<usize>> {
        let mut series = vec![(0..self.order()).collect::<Vec<usize>>()];
        for _ in 0..self.order() {
            let current = series.last().expect("nonempty");
            if current.len() == 1 {
                break;
            }
            let mut commutators: Vec<usize> = Vec::new();
            for &a in current {
                for &b in current {
                    let ab = self.mul(a, b);
                    let ba = self.mul(b, a);
                    // [a, b] = (ba)^-1 (ab)
                    commutators.push(self.mul(self.inverses[ba], ab));
                }
            }
            commutators.sort_unstable();
            commutators.dedup();
            let next = self.generated(&commutators);
            if next.len() == current.len() {
                break;
            }
            series.push(next);
        }
        series
    }
}

/// The derived series reaches the trivial group.
pub fn is_solvable_group(g: &GroupInMonoid) -> bool {
    g.derived_series().last().map_or(true, |last| last.len() == 1)
}
