//! Leaf-string acceptance and the characteristic-string operator, with the
//! conversions between the two.
//!
//! A [`LeafMachine`] is extensional: for each input it gives the number of
//! leaves of its balanced computation tree and the symbol printed at each
//! leaf, leaves being numbered left to right from 0.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::acceptor::{Acceptor, AcceptorKind};
use crate::alphabet::{Alphabet, Letter, Word};
use crate::automata::{Dfa, DEFAULT_DFA_CAP};
use crate::charstring::{char_string, Predicate};
use crate::cnf::Cnf;
use crate::error::{Error, Result};

/// Default bound on the number of CNF variables a SAT machine enumerates.
pub const DEFAULT_VAR_CAP: usize = 20;
/// Leaf strings longer than this are truncated in traces.
pub const TRACE_DISPLAY_LIMIT: usize = 256;

pub type LeafCountFn = Arc<dyn Fn(&[Letter]) -> u64 + Send + Sync>;
pub type LeafSymbolFn = Arc<dyn Fn(&[Letter], u64) -> Letter + Send + Sync>;

#[derive(Clone)]
pub struct LeafMachine {
    name: String,
    input: Alphabet,
    output: Alphabet,
    leaf_count: LeafCountFn,
    leaf_symbol: LeafSymbolFn,
}

impl LeafMachine {
    /// `leaf_count` must be positive; `leaf_symbol(x, i)` must be a letter
    /// of `output` for every `i < leaf_count(x)`.
    pub fn new(
        name: impl Into<String>,
        input: Alphabet,
        output: Alphabet,
        leaf_count: impl Fn(&[Letter]) -> u64 + Send + Sync + 'static,
        leaf_symbol: impl Fn(&[Letter], u64) -> Letter + Send + Sync + 'static,
    ) -> Self {
        LeafMachine {
            name: name.into(),
            input,
            output,
            leaf_count: Arc::new(leaf_count),
            leaf_symbol: Arc::new(leaf_symbol),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output
    }

    pub fn leaf_count(&self, x: &[Letter]) -> u64 {
        (self.leaf_count)(x)
    }

    pub fn leaf_symbol(&self, x: &[Letter], i: u64) -> Letter {
        (self.leaf_symbol)(x, i)
    }
}

impl fmt::Debug for LeafMachine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LeafMachine")
            .field("name", &self.name)
            .field("input", &self.input)
            .field("output", &self.output)
            .finish_non_exhaustive()
    }
}

/// Concatenation of the leaf symbols on input `x`.
pub fn leaf_string(m: &LeafMachine, x: &[Letter]) -> Result<Word> {
    m.input.check_word(x)?;
    let n = m.leaf_count(x);
    let mut out = Vec::with_capacity(usize::try_from(n).unwrap_or(0));
    for i in 0..n {
        let s = m.leaf_symbol(x, i);
        if s >= m.output.len() {
            return Err(Error::LetterOutOfRange { index: s, size: m.output.len() });
        }
        out.push(s);
    }
    Ok(out)
}

/// Maps each output letter of `m` to the letter of `b` with the same symbol.
fn letter_map(output: &Alphabet, target: &Alphabet) -> Result<Vec<Letter>> {
    output
        .symbols()
        .iter()
        .map(|s| {
            target.index_of(s).ok_or_else(|| {
                Error::AlphabetMismatch(format!("leaf symbol {s:?} is not in the leaf language's alphabet"))
            })
        })
        .collect()
}

/// Whether the leaf string of `m` on `x` lies in `b`.
pub fn bleaf_accepts(m: &LeafMachine, b: &Acceptor, x: &[Letter]) -> Result<bool> {
    let map = letter_map(&m.output, b.alphabet())?;
    let w: Word = leaf_string(m, x)?.into_iter().map(|l| map[l]).collect();
    b.accepts(&w)
}

pub type BoundFn = Arc<dyn Fn(&[Letter]) -> u64 + Send + Sync>;

/// `x ∈ L ⟺ χ_{A_x}(0) … χ_{A_x}(f(x)) ∈ B`.
#[derive(Clone)]
pub struct OperatorInstance {
    input: Alphabet,
    predicate: Arc<dyn Predicate>,
    bound: BoundFn,
    leaf_language: Acceptor,
}

impl OperatorInstance {
    /// The leaf language must be over the binary alphabet.
    pub fn new(
        input: Alphabet,
        predicate: impl Predicate + 'static,
        bound: impl Fn(&[Letter]) -> u64 + Send + Sync + 'static,
        leaf_language: Acceptor,
    ) -> Result<Self> {
        if !leaf_language.alphabet().is_binary() {
            return Err(Error::AlphabetMismatch("operator leaf language must be binary".into()));
        }
        Ok(OperatorInstance {
            input,
            predicate: Arc::new(predicate),
            bound: Arc::new(bound),
            leaf_language,
        })
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input
    }

    pub fn leaf_language(&self) -> &Acceptor {
        &self.leaf_language
    }

    pub fn holds(&self, x: &[Letter], y: u64) -> bool {
        self.predicate.holds(x, y)
    }

    pub fn bound(&self, x: &[Letter]) -> u64 {
        (self.bound)(x)
    }
}

impl fmt::Debug for OperatorInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperatorInstance")
            .field("input", &self.input)
            .field("leaf_language", &self.leaf_language.name())
            .finish_non_exhaustive()
    }
}

pub fn operator_accepts(o: &OperatorInstance, x: &[Letter]) -> Result<bool> {
    o.input.check_word(x)?;
    let chi = char_string(&*o.predicate, x, 0, o.bound(x))?;
    o.leaf_language.accepts(&chi)
}

/// Operator whose predicate holds at `y` iff leaf `y` prints 1, with bound
/// `leaf_count − 1`.
pub fn machine_to_operator(m: &LeafMachine, b: &Acceptor) -> Result<OperatorInstance> {
    if !m.output.is_binary() {
        return Err(Error::AlphabetMismatch(format!(
            "machine {} has non-binary output {}; block-encode it first",
            m.name, m.output
        )));
    }
    let symbol = m.leaf_symbol.clone();
    let count = m.leaf_count.clone();
    OperatorInstance::new(
        m.input.clone(),
        move |x: &[Letter], y: u64| symbol(x, y) == 1,
        move |x: &[Letter]| count(x) - 1,
        b.clone(),
    )
}

/// Machine branching over `y = 0 ..= f(x)` and printing `χ_A(x, y)`.
pub fn operator_to_machine(o: &OperatorInstance) -> LeafMachine {
    let pred = o.predicate.clone();
    let bound = o.bound.clone();
    LeafMachine {
        name: format!("branch[{}]", o.leaf_language.name()),
        input: o.input.clone(),
        output: Alphabet::binary(),
        leaf_count: Arc::new(move |x| bound(x) + 1),
        leaf_symbol: Arc::new(move |x, y| pred.holds(x, y) as Letter),
    }
}

/// One leaf per assignment (lexicographic, variable 1 most significant),
/// printing 1 iff the assignment satisfies `cnf`. The input is ignored.
pub fn sat_machine(cnf: &Cnf) -> Result<LeafMachine> {
    sat_machine_capped(cnf, DEFAULT_VAR_CAP)
}

pub fn sat_machine_capped(cnf: &Cnf, var_cap: usize) -> Result<LeafMachine> {
    if cnf.num_vars() > var_cap || cnf.num_vars() > 63 {
        return Err(Error::CapExceeded { what: "CNF variable", cap: var_cap.min(63) });
    }
    let n = cnf.num_vars();
    let cnf = cnf.clone();
    Ok(LeafMachine::new(
        "sat",
        Alphabet::binary(),
        Alphabet::binary(),
        move |_| 1u64 << n,
        move |_, i| cnf.satisfied_by(&cnf.assignment(i)) as Letter,
    ))
}

/// Fixed-width binary block code for an alphabet: letter `l` becomes its
/// `width`-bit big-endian binary expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockCode {
    pub letters: usize,
    pub width: u32,
}

impl BlockCode {
    pub fn for_alphabet(a: &Alphabet) -> Self {
        let letters = a.len();
        let width = usize::BITS - (letters - 1).leading_zeros();
        BlockCode { letters, width: width.max(1) }
    }

    pub fn encode(&self, w: &[Letter]) -> Word {
        w.iter()
            .flat_map(|&l| (0..self.width).rev().map(move |b| (l >> b) & 1))
            .collect()
    }

    /// `None` if the length is not a multiple of the width or a block is unused.
    pub fn decode(&self, bits: &[Letter]) -> Option<Word> {
        if bits.len() % self.width as usize != 0 {
            return None;
        }
        bits.chunks(self.width as usize)
            .map(|c| {
                let l = c.iter().fold(0usize, |acc, &b| acc * 2 + b);
                (l < self.letters).then_some(l)
            })
            .collect()
    }
}

/// The block-encoded machine: each leaf becomes `width` binary leaves.
pub fn block_encode_machine(m: &LeafMachine) -> LeafMachine {
    let code = BlockCode::for_alphabet(&m.output);
    let w = code.width as u64;
    let count = m.leaf_count.clone();
    let symbol = m.leaf_symbol.clone();
    LeafMachine {
        name: format!("{}/block{}", m.name, w),
        input: m.input.clone(),
        output: Alphabet::binary(),
        leaf_count: Arc::new(move |x| count(x) * w),
        leaf_symbol: Arc::new(move |x, i| {
            let l = symbol(x, i / w);
            (l >> (w - 1 - i % w)) & 1
        }),
    }
}

/// Binary acceptor for the block-encoded language `{code(w) : w ∈ B}`.
pub fn block_encode_acceptor(b: &Acceptor) -> Result<Acceptor> {
    let code = BlockCode::for_alphabet(b.alphabet());
    let dfa = match b.kind() {
        AcceptorKind::Counting(_) => {
            return Err(Error::Unsupported("block encoding of counting acceptors".into()))
        }
        _ => b.to_dfa().expect("regular-backed"),
    };
    let w = code.width as usize;
    // Trie of depth `width` under every DFA state, plus a dead state.
    let trie = (1usize << w) - 1;
    let n = dfa.num_states() * trie + 1;
    if n > DEFAULT_DFA_CAP {
        return Err(Error::CapExceeded { what: "DFA state", cap: DEFAULT_DFA_CAP });
    }
    let dead = n - 1;
    // Node (depth d, prefix v) sits at offset 2^d − 1 + v within its trie.
    let id = |q: usize, d: usize, v: usize| q * trie + (1 << d) - 1 + v;
    let mut delta = vec![dead; n * 2];
    let mut accepting = vec![false; n];
    for q in 0..dfa.num_states() {
        accepting[id(q, 0, 0)] = dfa.is_accepting(q);
        for d in 0..w {
            for v in 0..(1usize << d) {
                for bit in 0..2 {
                    let prefix = v * 2 + bit;
                    let next = if d + 1 == w {
                        if prefix < code.letters {
                            id(dfa.step(q, prefix), 0, 0)
                        } else {
                            dead
                        }
                    } else {
                        id(q, d + 1, prefix)
                    };
                    delta[id(q, d, v) * 2 + bit] = next;
                }
            }
        }
    }
    let encoded = Dfa::new(2, id(dfa.start(), 0, 0), accepting, delta)?.minimize();
    Acceptor::regular(format!("{}/block{}", b.name(), w), Alphabet::binary(), encoded)
}

/// `KEY: value` trace of a run; long leaf strings are truncated.
pub fn format_trace(input: &str, leaf: &[Letter], alphabet: &Alphabet, accepted: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "INPUT: {input}");
    let _ = writeln!(out, "LEAF_COUNT: {}", leaf.len());
    if leaf.len() > TRACE_DISPLAY_LIMIT {
        let _ = writeln!(
            out,
            "LEAF_STRING: {}... (length {})",
            alphabet.render(&leaf[..TRACE_DISPLAY_LIMIT]),
            leaf.len()
        );
    } else {
        let _ = writeln!(out, "LEAF_STRING: {}", alphabet.render(leaf));
    }
    let _ = writeln!(out, "VERDICT: {}", if accepted { "accept" } else { "reject" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn bin() -> Alphabet {
        Alphabet::binary()
    }

    fn render(w: &[Letter]) -> String {
        bin().render(w)
    }

    #[test]
    fn constant_machine() {
        let m = LeafMachine::new("ones", bin(), bin(), |_| 4, |_, _| 1);
        assert_eq!(render(&leaf_string(&m, &[]).unwrap()), "1111");
    }

    #[test]
    fn sat_machine_strings() {
        let or = Cnf::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(render(&leaf_string(&sat_machine(&or).unwrap(), &[]).unwrap()), "0111");
        let unsat = Cnf::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(render(&leaf_string(&sat_machine(&unsat).unwrap(), &[]).unwrap()), "00");
        let x1 = Cnf::new(1, vec![vec![1]]).unwrap();
        assert_eq!(render(&leaf_string(&sat_machine(&x1).unwrap(), &[]).unwrap()), "01");
        let xor = Cnf::new(2, vec![vec![1, 2], vec![-1, -2]]).unwrap();
        assert_eq!(render(&leaf_string(&sat_machine(&xor).unwrap(), &[]).unwrap()), "0110");
        let empty = Cnf::new(3, vec![]).unwrap();
        assert_eq!(render(&leaf_string(&sat_machine(&empty).unwrap(), &[]).unwrap()), "11111111");
        let wide = Cnf::new(21, vec![]).unwrap();
        assert!(matches!(sat_machine(&wide), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn quantifiers_on_sat() {
        let or = sat_machine(&Cnf::new(2, vec![vec![1, 2]]).unwrap()).unwrap();
        assert!(bleaf_accepts(&or, &catalog("E", &[]).unwrap(), &[]).unwrap());
        assert!(!bleaf_accepts(&or, &catalog("us", &[]).unwrap(), &[]).unwrap());
        assert!(bleaf_accepts(&or, &catalog("maj", &[]).unwrap(), &[]).unwrap());
        assert!(bleaf_accepts(&or, &catalog("par", &[]).unwrap(), &[]).unwrap());
    }

    #[test]
    fn operator_examples() {
        let u = catalog("U", &[]).unwrap();
        let always = OperatorInstance::new(bin(), |_: &[Letter], _: u64| true, |_: &[Letter]| 3, u).unwrap();
        for x in bin().words_up_to(3) {
            assert!(operator_accepts(&always, &x).unwrap());
        }
        let e = catalog("E", &[]).unwrap();
        let never = OperatorInstance::new(bin(), |_: &[Letter], _: u64| false, |x: &[Letter]| x.len() as u64, e).unwrap();
        for x in bin().words_up_to(3) {
            assert!(!operator_accepts(&never, &x).unwrap());
        }
    }

    #[test]
    fn conversions() {
        let or = sat_machine(&Cnf::new(2, vec![vec![1, 2]]).unwrap()).unwrap();
        let e = catalog("E", &[]).unwrap();
        let o = machine_to_operator(&or, &e).unwrap();
        assert_eq!(o.bound(&[]), 3);
        let table: Vec<bool> = (0..4).map(|y| o.holds(&[], y)).collect();
        assert_eq!(table, vec![false, true, true, true]);
        let back = operator_to_machine(&o);
        assert_eq!(leaf_string(&back, &[]).unwrap(), leaf_string(&or, &[]).unwrap());

        let single = LeafMachine::new("one", bin(), bin(), |_| 1, |_, _| 1);
        let o = machine_to_operator(&single, &e).unwrap();
        assert_eq!(o.bound(&[0, 1]), 0);
        assert!(o.holds(&[0, 1], 0));

        let even = OperatorInstance::new(bin(), |_: &[Letter], y: u64| y % 2 == 0, |_: &[Letter]| 4, e).unwrap();
        assert_eq!(render(&leaf_string(&operator_to_machine(&even), &[]).unwrap()), "10101");
    }

    #[test]
    fn parity_of_shorter_indices() {
        // predicate y < |x|, bound 5, leaf language par: accept iff min(|x|, 6) is odd.
        let par = catalog("par", &[]).unwrap();
        let o = OperatorInstance::new(bin(), |x: &[Letter], y: u64| y < x.len() as u64, |_: &[Letter]| 5, par).unwrap();
        for x in bin().words_up_to(5) {
            assert_eq!(operator_accepts(&o, &x).unwrap(), x.len() % 2 == 1);
        }
    }

    #[test]
    fn non_binary_needs_block_encoding() {
        let tri = Alphabet::from_chars("abc").unwrap();
        let m = LeafMachine::new("abc", bin(), tri.clone(), |x| x.len() as u64 + 1, |_, i| (i % 3) as Letter);
        let b = Acceptor::regular("all", tri, Dfa::trivial(3, true)).unwrap();
        assert!(matches!(machine_to_operator(&m, &b), Err(Error::AlphabetMismatch(_))));
        let encoded = block_encode_machine(&m);
        let eb = block_encode_acceptor(&b).unwrap();
        assert_eq!(render(&leaf_string(&encoded, &[0]).unwrap()), "0001");
        let o = machine_to_operator(&encoded, &eb).unwrap();
        for x in bin().words_up_to(4) {
            assert_eq!(operator_accepts(&o, &x).unwrap(), bleaf_accepts(&m, &b, &x).unwrap());
        }
    }

    #[test]
    fn block_code_round_trip() {
        let code = BlockCode { letters: 120, width: 7 };
        let w = vec![0, 119, 64, 5];
        assert_eq!(code.decode(&code.encode(&w)), Some(w));
        assert_eq!(code.decode(&[1; 7]), None);
        assert_eq!(BlockCode::for_alphabet(&bin()).width, 1);
        assert_eq!(BlockCode::for_alphabet(&Alphabet::from_chars("abc").unwrap()).width, 2);
    }

    #[test]
    fn alphabet_mismatch() {
        let tri = Alphabet::from_chars("xyz").unwrap();
        let m = LeafMachine::new("x", bin(), tri, |_| 1, |_, _| 0);
        assert!(bleaf_accepts(&m, &catalog("E", &[]).unwrap(), &[]).is_err());
    }

    #[test]
    fn trace_truncates() {
        let leaf = vec![1; 300];
        let t = format_trace("x", &leaf, &bin(), true);
        assert!(t.contains("(length 300)"));
        assert!(t.ends_with("VERDICT: accept\n"));
        let short = format_trace("", &[0, 1], &bin(), false);
        assert_eq!(short, "INPUT: \nLEAF_COUNT: 2\nLEAF_STRING: 01\nVERDICT: reject\n");
    }
}
