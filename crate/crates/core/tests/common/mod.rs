//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use leaflang::acceptor::s5_alphabet;
use leaflang::leafsim::{block_encode_acceptor, block_encode_machine};
use leaflang::{
    bleaf_accepts, catalog, leaf_string, machine_to_operator, operator_accepts, operator_to_machine, parse_regex,
    regex_to_min_dfa, sat_machine, Acceptor, Alphabet, BoolFormula, Cnf, Dfa, LeafMachine, Letter, Regex, S5,
};
use rand::Rng;

/// Regex membership straight from the semantics, memoised on (node, span).
pub fn regex_matches(re: &Regex, w: &[Letter]) -> bool {
    fn go(re: &Regex, w: &[Letter], i: usize, j: usize, memo: &mut HashMap<(usize, usize, usize), bool>) -> bool {
        let key = (re as *const Regex as usize, i, j);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let v = match re {
            Regex::Empty => false,
            Regex::Epsilon => i == j,
            Regex::Letter(l) => j == i + 1 && w[i] == *l,
            Regex::Union(a, b) => go(a, w, i, j, memo) || go(b, w, i, j, memo),
            Regex::Concat(a, b) => (i..=j).any(|k| go(a, w, i, k, memo) && go(b, w, k, j, memo)),
            Regex::Star(a) => i == j || (i + 1..=j).any(|k| go(a, w, i, k, memo) && go(re, w, k, j, memo)),
            Regex::Complement(a) => !go(a, w, i, j, memo),
        };
        memo.insert(key, v);
        v
    }
    go(re, w, 0, w.len(), &mut HashMap::new())
}

/// Number of Myhill–Nerode classes separated by suffixes up to `suffix_len`,
/// over prefixes up to `prefix_len`.
pub fn nerode_classes(member: impl Fn(&[Letter]) -> bool, alphabet: &Alphabet, prefix_len: usize, suffix_len: usize) -> usize {
    let suffixes: Vec<Vec<Letter>> = alphabet.words_up_to(suffix_len).collect();
    let mut signatures = HashSet::new();
    for u in alphabet.words_up_to(prefix_len) {
        let sig: Vec<bool> = suffixes.iter().map(|v| member(&[u.as_slice(), v].concat())).collect();
        signatures.insert(sig);
    }
    signatures.len()
}

/// Transition-monoid size by running the DFA on words of increasing length
/// from every state, until a length contributes nothing new. Returns the
/// size and the longest word length that still contributed.
pub fn closure_oracle(dfa: &Dfa) -> (usize, usize) {
    let image = |w: &[Letter]| -> Vec<usize> { (0..dfa.num_states()).map(|q| dfa.run(q, w)).collect() };
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(image(&[]));
    let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
    let mut longest = 0;
    for len in 1.. {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..dfa.num_letters() {
                let mut wa = w.clone();
                wa.push(a);
                if seen.insert(image(&wa)) {
                    next.push(wa);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        longest = len;
        frontier = next;
    }
    (seen.len(), longest)
}

/// Evaluation written independently of the library.
pub fn truth(f: &BoolFormula, bits: &[bool]) -> bool {
    match f {
        BoolFormula::Const(v) => *v,
        BoolFormula::Var(i) => bits[i - 1],
        BoolFormula::Not(a) => !truth(a, bits),
        BoolFormula::And(a, b) => truth(a, bits) & truth(b, bits),
        BoolFormula::Or(a, b) => truth(a, bits) | truth(b, bits),
        BoolFormula::Nor(a, b) => !(truth(a, bits) | truth(b, bits)),
    }
}

pub fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u32 << n).map(move |m| (0..n).map(|i| (m >> (n - 1 - i)) & 1 == 1).collect())
}

/// Every formula of height ≤ `height` over variables `1..=vars`, constants,
/// and `not`, `and`, `or`, `nor`.
pub fn formulas_up_to(height: usize, vars: usize) -> Vec<BoolFormula> {
    let mut atoms: Vec<BoolFormula> = (1..=vars).map(BoolFormula::var).collect();
    atoms.push(BoolFormula::Const(true));
    atoms.push(BoolFormula::Const(false));
    let mut all = atoms.clone();
    for _ in 1..height {
        let prev = all.clone();
        let mut next = atoms.clone();
        next.extend(prev.iter().cloned().map(BoolFormula::not));
        for a in &prev {
            for b in &prev {
                next.push(BoolFormula::and(a.clone(), b.clone()));
                next.push(BoolFormula::or(a.clone(), b.clone()));
                next.push(BoolFormula::nor(a.clone(), b.clone()));
            }
        }
        all = next;
    }
    all
}

pub fn random_formula(rng: &mut impl Rng, vars: usize, depth: usize) -> BoolFormula {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return if rng.gen_ratio(1, 10) {
            BoolFormula::Const(rng.gen())
        } else {
            BoolFormula::var(rng.gen_range(1..=vars))
        };
    }
    let sub = |rng: &mut _| random_formula(rng, vars, depth - 1);
    match rng.gen_range(0..4) {
        0 => BoolFormula::not(sub(rng)),
        1 => BoolFormula::and(sub(rng), sub(rng)),
        2 => BoolFormula::or(sub(rng), sub(rng)),
        _ => BoolFormula::nor(sub(rng), sub(rng)),
    }
}

/// Full NOR tree of the given depth over variables 1, 2, ….
pub fn full_nor_tree(depth: usize, next_var: &mut usize) -> BoolFormula {
    if depth == 0 {
        *next_var += 1;
        return BoolFormula::var(*next_var);
    }
    let a = full_nor_tree(depth - 1, next_var);
    let b = full_nor_tree(depth - 1, next_var);
    BoolFormula::nor(a, b)
}

/// A CNF in canonical form: literals sorted and distinct within a clause,
/// clauses sorted and distinct.
pub type RawCnf = (usize, Vec<Vec<i32>>);

pub fn random_canonical_cnf(rng: &mut impl Rng, max_vars: usize, max_clauses: usize) -> RawCnf {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(0..=max_clauses);
    let mut clauses = BTreeSet::new();
    for _ in 0..m {
        let mut lits = BTreeSet::new();
        for v in 1..=n as i32 {
            match rng.gen_range(0..3) {
                0 => {
                    lits.insert(v);
                }
                1 => {
                    lits.insert(-v);
                }
                _ => {}
            }
        }
        if lits.is_empty() {
            let v = rng.gen_range(1..=n as i32);
            lits.insert(if rng.gen() { v } else { -v });
        }
        clauses.insert(lits.into_iter().collect::<Vec<_>>());
    }
    (n, clauses.into_iter().collect())
}

/// `count` distinct canonical CNFs, plus the empty CNF on every variable count.
pub fn cnf_sample(rng: &mut impl Rng, count: usize, max_vars: usize, max_clauses: usize) -> Vec<RawCnf> {
    let mut seen = BTreeSet::new();
    for n in 1..=max_vars {
        seen.insert((n, vec![]));
    }
    while seen.len() < count {
        seen.insert(random_canonical_cnf(rng, max_vars, max_clauses));
    }
    seen.into_iter().collect()
}

/// Satisfying assignments by bitmask enumeration.
pub fn count_models(cnf: &RawCnf) -> u64 {
    let (n, clauses) = cnf;
    (0..1u64 << n)
        .filter(|mask| {
            clauses.iter().all(|c| {
                c.iter().any(|&lit| {
                    let bit = (mask >> (n - lit.unsigned_abs() as usize)) & 1 == 1;
                    bit == (lit > 0)
                })
            })
        })
        .count() as u64
}

pub fn to_cnf(raw: &RawCnf) -> Cnf {
    Cnf::new(raw.0, raw.1.clone()).unwrap()
}

/// A leaf machine together with the leaf languages it is checked against.
pub struct Registered {
    pub machine: LeafMachine,
    pub acceptors: Vec<Acceptor>,
}

fn bits_value(x: &[Letter]) -> u64 {
    x.iter().fold(0, |acc, &b| acc * 2 + b as u64)
}

pub fn registered_machines() -> Vec<Registered> {
    let bin = Alphabet::binary();
    let cat = |n: &str, p: &[usize]| catalog(n, p).unwrap();
    let mut out = Vec::new();

    let cnfs = [
        (1, vec![vec![1]]),
        (2, vec![vec![1, 2]]),
        (2, vec![vec![1, 2], vec![-1, -2]]),
        (1, vec![vec![1], vec![-1]]),
        (3, vec![]),
        (3, vec![vec![1, -2], vec![2, 3], vec![-1, -3]]),
        (3, vec![vec![1], vec![2], vec![3]]),
        (4, vec![vec![1, 2, 3, 4]]),
        (4, vec![vec![-1, -2], vec![-3, -4], vec![1, 3]]),
        (2, vec![vec![-1], vec![-2]]),
    ];
    for (n, clauses) in cnfs {
        out.push(Registered {
            machine: sat_machine(&Cnf::new(n, clauses).unwrap()).unwrap(),
            acceptors: vec![cat("E", &[]), cat("U", &[]), cat("us", &[]), cat("maj", &[]), cat("par", &[])],
        });
    }

    // Prints the input, then a 1.
    out.push(Registered {
        machine: LeafMachine::new("echo", bin.clone(), bin.clone(), |x| x.len() as u64 + 1, |x, i| {
            x.get(i as usize).copied().unwrap_or(1)
        }),
        acceptors: vec![cat("E", &[]), cat("par", &[]), cat("maj", &[]), cat("A", &[2]), cat("np_and_conp", &[])],
    });

    // Leaf i prints 1 iff i is below the binary value of x.
    out.push(Registered {
        machine: LeafMachine::new("below", bin.clone(), bin.clone(), |x| 1u64 << x.len(), |x, i| {
            (i < bits_value(x)) as Letter
        }),
        acceptors: vec![cat("us", &[]), cat("mod_k", &[3]), cat("E", &[]), cat("U", &[])],
    });

    // Permutation leaves: (12345) for a 1, (12)(34) for a 0, closed by (54321).
    let s5 = s5_alphabet();
    let idx = |p: &str| s5.index_of(&p.parse::<S5>().unwrap().to_string()).unwrap();
    let (one, zero, close) = (idx("(12345)"), idx("(12)(34)"), idx("(15432)"));
    out.push(Registered {
        machine: LeafMachine::new("s5", bin.clone(), s5, move |x| x.len() as u64 + 1, move |x, i| match x.get(i as usize) {
            Some(1) => one,
            Some(_) => zero,
            None => close,
        }),
        acceptors: vec![cat("s5_word", &[])],
    });

    // Ternary leaves a, b from the input, then c.
    let abc = Alphabet::from_chars("abc").unwrap();
    let lang = |text: &str| {
        let dfa = regex_to_min_dfa(&parse_regex(text, &abc).unwrap(), &abc).unwrap();
        Acceptor::regular(text, abc.clone(), dfa).unwrap()
    };
    out.push(Registered {
        machine: LeafMachine::new("abc", bin, abc.clone(), |x| x.len() as u64 + 1, |x, i| {
            x.get(i as usize).copied().unwrap_or(2)
        }),
        acceptors: vec![lang("(a+b)*bc"), lang("~((a+b+c)*aa(a+b+c)*)"), lang("((a+b)(a+b))*c")],
    });
    out
}

/// Checks both conversion directions on every input in `inputs`.
pub fn check_equivalence(m: &LeafMachine, b: &Acceptor, inputs: &[Vec<Letter>]) {
    let (m2, b2) = if m.output_alphabet().is_binary() {
        (m.clone(), b.clone())
    } else {
        (block_encode_machine(m), block_encode_acceptor(b).unwrap())
    };
    let op = machine_to_operator(&m2, &b2).unwrap();
    let back = operator_to_machine(&op);
    for x in inputs {
        let direct = bleaf_accepts(m, b, x).unwrap();
        assert_eq!(bleaf_accepts(&m2, &b2, x).unwrap(), direct, "block encoding of {}", m.name());
        assert_eq!(operator_accepts(&op, x).unwrap(), direct, "machine to operator for {}", m.name());
        assert_eq!(leaf_string(&back, x).unwrap(), leaf_string(&m2, x).unwrap());
        assert_eq!(bleaf_accepts(&back, &b2, x).unwrap(), direct, "operator to machine for {}", m.name());
    }
}
