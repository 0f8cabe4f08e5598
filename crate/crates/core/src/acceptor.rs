//! Language acceptors: regular (DFA), counting (Parikh rule) and the S₅
//! word problem.

use crate::alphabet::{Alphabet, Letter};
use crate::automata::Dfa;
use crate::cardinal::CardinalSpec;
use crate::catalog::CatalogName;
use crate::error::{Error, Result};
use crate::perm::S5;

#[derive(Clone, Debug)]
pub enum AcceptorKind {
    Regular(Dfa),
    Counting(CardinalSpec),
    GroupWord(GroupWord),
}

/// Word problem over a finite permutation group: letter `i` stands for
/// `elements[i]`, and a word is accepted when its left-to-right product
/// equals `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupWord {
    pub elements: Vec<S5>,
    pub target: S5,
}

impl GroupWord {
    /// All 120 elements of S₅ as letters, accepting products equal to the identity.
    pub fn s5() -> Self {
        GroupWord { elements: S5::all(), target: S5::identity() }
    }

    pub fn product(&self, w: &[Letter]) -> S5 {
        w.iter().fold(S5::identity(), |acc, &l| acc.then(&self.elements[l]))
    }

    /// Cayley-graph DFA: one state per group element, started at the identity.
    pub fn to_dfa(&self) -> Dfa {
        let states = S5::all();
        let pos = |p: &S5| states.binary_search(p).expect("S5 element");
        let k = self.elements.len();
        let mut delta = Vec::with_capacity(states.len() * k);
        for q in &states {
            for g in &self.elements {
                delta.push(pos(&q.then(g)));
            }
        }
        let accepting = states.iter().map(|q| *q == self.target).collect();
        Dfa::new(k, pos(&S5::identity()), accepting, delta).expect("well-formed Cayley DFA")
    }
}

#[derive(Clone, Debug)]
pub struct Acceptor {
    name: String,
    alphabet: Alphabet,
    kind: AcceptorKind,
    catalog: Option<CatalogName>,
}

impl Acceptor {
    pub fn regular(name: impl Into<String>, alphabet: Alphabet, dfa: Dfa) -> Result<Self> {
        if dfa.num_letters() != alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "DFA has {} letters, alphabet has {}",
                dfa.num_letters(),
                alphabet.len()
            )));
        }
        Ok(Acceptor { name: name.into(), alphabet, kind: AcceptorKind::Regular(dfa), catalog: None })
    }

    pub fn counting(name: impl Into<String>, alphabet: Alphabet, spec: CardinalSpec) -> Result<Self> {
        if spec.k() != alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "spec has {} letters, alphabet has {}",
                spec.k(),
                alphabet.len()
            )));
        }
        Ok(Acceptor { name: name.into(), alphabet, kind: AcceptorKind::Counting(spec), catalog: None })
    }

    pub fn group_word(name: impl Into<String>, alphabet: Alphabet, group: GroupWord) -> Result<Self> {
        if group.elements.len() != alphabet.len() {
            return Err(Error::AlphabetMismatch("one letter per group element required".into()));
        }
        Ok(Acceptor { name: name.into(), alphabet, kind: AcceptorKind::GroupWord(group), catalog: None })
    }

    pub(crate) fn with_catalog(mut self, entry: CatalogName) -> Self {
        self.catalog = Some(entry);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn kind(&self) -> &AcceptorKind {
        &self.kind
    }

    /// Catalog identity, when the acceptor came from [`crate::catalog::catalog`].
    pub fn catalog_entry(&self) -> Option<&CatalogName> {
        self.catalog.as_ref()
    }

    /// A DFA for the language, if it is regular-backed.
    pub fn to_dfa(&self) -> Option<Dfa> {
        match &self.kind {
            AcceptorKind::Regular(d) => Some(d.clone()),
            AcceptorKind::GroupWord(g) => Some(g.to_dfa()),
            AcceptorKind::Counting(_) => None,
        }
    }

    pub fn accepts(&self, w: &[Letter]) -> Result<bool> {
        self.alphabet.check_word(w)?;
        Ok(match &self.kind {
            AcceptorKind::Regular(d) => d.accepts(w),
            AcceptorKind::Counting(spec) => spec.accepts_word(w),
            AcceptorKind::GroupWord(g) => g.product(w) == g.target,
        })
    }

    pub fn accepts_str(&self, text: &str) -> Result<bool> {
        self.accepts(&self.alphabet.parse_word(text)?)
    }
}

/// Letter names for the S₅ alphabet: cycle notation of each element.
pub fn s5_alphabet() -> Alphabet {
    Alphabet::new(S5::all().iter().map(|p| p.to_string())).expect("distinct cycle notations")
}
