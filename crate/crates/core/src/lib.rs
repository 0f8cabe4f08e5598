//! Leaf languages made executable: syntactic-monoid classification of
//! regular leaf languages, balanced-tree leaf simulation and its operator
//! form, S₅ permutation programs for boolean formulas, and bounded search
//! for multinomial reductions between cardinal languages.

pub mod acceptor;
pub mod alphabet;
pub mod automata;
pub mod barrington;
pub mod cardinal;
pub mod catalog;
pub mod charstring;
pub mod classify;
pub mod cnf;
pub mod error;
pub mod leafsim;
pub mod monoid;
pub mod numeric;
pub mod perm;
pub mod regex;

pub use acceptor::{Acceptor, AcceptorKind, GroupWord};
pub use alphabet::{Alphabet, Letter, Word};
pub use automata::{regex_to_min_dfa, Dfa};
pub use barrington::{
    barrington_accepts, bottleneck_fold, compile, evaluate_product, pad_to_balanced, to_nor, BoolFormula,
    Convention, GroupProgram,
};
pub use cardinal::{
    cardinal_spec_of, combo_eval, search_reduction, verify_witness, CardinalSpec, MultinomialCombo,
    ReductionWitness, SearchBounds, SearchOutcome,
};
pub use catalog::{catalog, CatalogName};
pub use charstring::{char_string, Predicate};
pub use classify::{classify_leaf_language, Classification, Verdict};
pub use cnf::Cnf;
pub use error::{Error, Result};
pub use leafsim::{
    bleaf_accepts, leaf_string, machine_to_operator, operator_accepts, operator_to_machine, sat_machine,
    LeafMachine, OperatorInstance,
};
pub use monoid::{transition_monoid, Monoid};
pub use perm::{Permutation, S5};
pub use regex::{parse_regex, Regex};

/// Multinomial combination with arbitrary-precision coefficients.
pub type Combo = MultinomialCombo<num_bigint::BigUint>;
/// Reduction witness with arbitrary-precision coefficients.
pub type Witness = ReductionWitness<num_bigint::BigUint>;
