//! Boolean formulas compiled to S₅ permutation programs.
//!
//! Every NOR gate becomes the sixteen-symbol word
//! `w(x, y) = a₀ b x⁴ c y⁴ d x e y f`, which multiplies to `a₁` when both
//! inputs are `a₀` and to `a₀` otherwise. A true bit is `a₁`, a false bit `a₀`.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::S5;

/// The NOR gadget's fixed permutations.
pub mod gadget {
    use crate::perm::S5;

    /// `()`
    pub const A0: S5 = S5::from_images_const([0, 1, 2, 3, 4]);
    /// `(12345)`
    pub const A1: S5 = S5::from_images_const([1, 2, 3, 4, 0]);
    /// `(23)(45)`
    pub const B: S5 = S5::from_images_const([0, 2, 1, 4, 3]);
    /// `(12435)`
    pub const C: S5 = S5::from_images_const([1, 3, 4, 2, 0]);
    /// `(243)`
    pub const D: S5 = S5::from_images_const([0, 3, 1, 2, 4]);
    /// `(345)`
    pub const E: S5 = S5::from_images_const([0, 1, 3, 4, 2]);
    /// `(152)`
    pub const F: S5 = S5::from_images_const([4, 0, 2, 3, 1]);

    pub fn a0() -> S5 {
        A0
    }
    pub fn a1() -> S5 {
        A1
    }
    pub fn b() -> S5 {
        B
    }
    pub fn c() -> S5 {
        C
    }
    pub fn d() -> S5 {
        D
    }
    pub fn e() -> S5 {
        E
    }
    pub fn f() -> S5 {
        F
    }

    /// The sixteen symbols of `w(x, y)` with `x`, `y` substituted.
    pub fn w_word(x: S5, y: S5) -> [S5; 16] {
        [A0, B, x, x, x, x, C, y, y, y, y, D, x, E, y, F]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoolFormula {
    Const(bool),
    /// Variables are numbered from 1.
    Var(usize),
    Not(Box<BoolFormula>),
    And(Box<BoolFormula>, Box<BoolFormula>),
    Or(Box<BoolFormula>, Box<BoolFormula>),
    Nor(Box<BoolFormula>, Box<BoolFormula>),
}

impl BoolFormula {
    pub fn var(i: usize) -> Self {
        BoolFormula::Var(i)
    }

    pub fn not(a: BoolFormula) -> Self {
        BoolFormula::Not(Box::new(a))
    }

    pub fn and(a: BoolFormula, b: BoolFormula) -> Self {
        BoolFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: BoolFormula, b: BoolFormula) -> Self {
        BoolFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn nor(a: BoolFormula, b: BoolFormula) -> Self {
        BoolFormula::Nor(Box::new(a), Box::new(b))
    }

    /// Largest variable index, 0 for a closed formula.
    pub fn arity(&self) -> usize {
        match self {
            BoolFormula::Const(_) => 0,
            BoolFormula::Var(i) => *i,
            BoolFormula::Not(a) => a.arity(),
            BoolFormula::And(a, b) | BoolFormula::Or(a, b) | BoolFormula::Nor(a, b) => a.arity().max(b.arity()),
        }
    }

    /// Nodes on the longest root-to-leaf path; atoms have height 1.
    pub fn height(&self) -> usize {
        match self {
            BoolFormula::Const(_) | BoolFormula::Var(_) => 1,
            BoolFormula::Not(a) => 1 + a.height(),
            BoolFormula::And(a, b) | BoolFormula::Or(a, b) | BoolFormula::Nor(a, b) => 1 + a.height().max(b.height()),
        }
    }

    pub fn is_nor_only(&self) -> bool {
        match self {
            BoolFormula::Const(_) | BoolFormula::Var(_) => true,
            BoolFormula::Nor(a, b) => a.is_nor_only() && b.is_nor_only(),
            _ => false,
        }
    }

    pub fn check_arity(&self, assignment: &[bool]) -> Result<()> {
        let needed = self.arity();
        if assignment.len() < needed {
            return Err(Error::ArityMismatch { needed, got: assignment.len() });
        }
        Ok(())
    }

    /// Direct evaluation; panics if a variable exceeds the assignment.
    pub fn eval(&self, assignment: &[bool]) -> bool {
        match self {
            BoolFormula::Const(v) => *v,
            BoolFormula::Var(i) => assignment[*i - 1],
            BoolFormula::Not(a) => !a.eval(assignment),
            BoolFormula::And(a, b) => a.eval(assignment) && b.eval(assignment),
            BoolFormula::Or(a, b) => a.eval(assignment) || b.eval(assignment),
            BoolFormula::Nor(a, b) => !(a.eval(assignment) || b.eval(assignment)),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text);
        if tokens.is_empty() {
            return Err(Error::Syntax { position: 0, message: "empty formula".into() });
        }
        let mut pos = 0;
        let f = parse_expr(&tokens, &mut pos, text.len())?;
        if let Some(&(at, tok)) = tokens.get(pos) {
            return Err(Error::Syntax { position: at, message: format!("unexpected {tok:?}") });
        }
        Ok(f)
    }
}

fn tokenize(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch == '(' || ch == ')' || ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
            if !ch.is_whitespace() {
                out.push((i, &text[i..i + 1]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

fn parse_expr(tokens: &[(usize, &str)], pos: &mut usize, end: usize) -> Result<BoolFormula> {
    let &(at, tok) = tokens
        .get(*pos)
        .ok_or(Error::Syntax { position: end, message: "unexpected end of formula".into() })?;
    *pos += 1;
    let sub = |pos: &mut usize| parse_expr(tokens, pos, end);
    let f = match tok {
        "(" => {
            let inner = sub(pos)?;
            match tokens.get(*pos) {
                Some(&(_, ")")) => *pos += 1,
                Some(&(p, t)) => return Err(Error::Syntax { position: p, message: format!("expected ')', found {t:?}") }),
                None => return Err(Error::Syntax { position: end, message: "unclosed '('".into() }),
            }
            inner
        }
        "true" | "1" => BoolFormula::Const(true),
        "false" | "0" => BoolFormula::Const(false),
        "const" => match tokens.get(*pos) {
            Some(&(_, "true" | "1")) => {
                *pos += 1;
                BoolFormula::Const(true)
            }
            Some(&(_, "false" | "0")) => {
                *pos += 1;
                BoolFormula::Const(false)
            }
            _ => return Err(Error::Syntax { position: at, message: "const expects true or false".into() }),
        },
        "var" => {
            let (p, n) = tokens
                .get(*pos)
                .copied()
                .ok_or(Error::Syntax { position: end, message: "var expects an index".into() })?;
            *pos += 1;
            match n.parse::<usize>() {
                Ok(i) if i >= 1 => BoolFormula::Var(i),
                _ => return Err(Error::Syntax { position: p, message: format!("bad variable index {n:?}") }),
            }
        }
        "not" => BoolFormula::not(sub(pos)?),
        "and" | "or" | "nor" => {
            let a = sub(pos)?;
            let b = sub(pos)?;
            match tok {
                "and" => BoolFormula::and(a, b),
                "or" => BoolFormula::or(a, b),
                _ => BoolFormula::nor(a, b),
            }
        }
        other => return Err(Error::Syntax { position: at, message: format!("unknown token {other:?}") }),
    };
    Ok(f)
}

impl FromStr for BoolFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoolFormula::parse(s)
    }
}

/// Prefix notation, e.g. `or (var 1) (not (var 2))`.
impl fmt::Display for BoolFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        struct Arg<'a>(&'a BoolFormula);
        impl fmt::Display for Arg<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self.0 {
                    BoolFormula::Const(_) => write!(f, "{}", self.0),
                    other => write!(f, "({other})"),
                }
            }
        }
        match self {
            BoolFormula::Const(v) => write!(f, "{v}"),
            BoolFormula::Var(i) => write!(f, "var {i}"),
            BoolFormula::Not(a) => write!(f, "not {}", Arg(a)),
            BoolFormula::And(a, b) => write!(f, "and {} {}", Arg(a), Arg(b)),
            BoolFormula::Or(a, b) => write!(f, "or {} {}", Arg(a), Arg(b)),
            BoolFormula::Nor(a, b) => write!(f, "nor {} {}", Arg(a), Arg(b)),
        }
    }
}

/// Rewrites `not`, `and`, `or` into NOR gates; NOR-only formulas are unchanged.
pub fn to_nor(phi: &BoolFormula) -> BoolFormula {
    use BoolFormula as F;
    match phi {
        F::Const(_) | F::Var(_) => phi.clone(),
        F::Not(a) => {
            let a = to_nor(a);
            F::nor(a.clone(), a)
        }
        F::Or(a, b) => {
            let inner = F::nor(to_nor(a), to_nor(b));
            F::nor(inner.clone(), inner)
        }
        F::And(a, b) => {
            let (a, b) = (to_nor(a), to_nor(b));
            F::nor(F::nor(a.clone(), a), F::nor(b.clone(), b))
        }
        F::Nor(a, b) => F::nor(to_nor(a), to_nor(b)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Leaf {
    Const(S5),
    /// Evaluates to `a₁` when the bit is set, `a₀` otherwise.
    Var(usize),
}

impl Leaf {
    pub fn value(&self, assignment: &[bool]) -> S5 {
        match self {
            Leaf::Const(p) => *p,
            Leaf::Var(i) if assignment[*i - 1] => gadget::a1(),
            Leaf::Var(_) => gadget::a0(),
        }
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf::Const(p) => write!(f, "{p}"),
            Leaf::Var(i) => write!(f, "x{i}"),
        }
    }
}

impl FromStr for Leaf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_prefix('x') {
            Some(n) => match n.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(Leaf::Var(i)),
                _ => Err(Error::Parse(format!("bad variable leaf {s:?}"))),
            },
            None => Ok(Leaf::Const(s.parse()?)),
        }
    }
}

/// A program node. Subprograms are shared: the repeated `x` and `y` slots of
/// one gadget point at the same node.
#[derive(Debug, PartialEq, Eq)]
pub enum ProgramNode {
    Leaf(Leaf),
    Seq(Vec<Rc<ProgramNode>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupProgram {
    root: Rc<ProgramNode>,
}

impl GroupProgram {
    pub fn root(&self) -> &ProgramNode {
        &self.root
    }

    /// Number of Seq levels on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        fn go(n: &ProgramNode, memo: &mut HashMap<*const ProgramNode, usize>) -> usize {
            match n {
                ProgramNode::Leaf(_) => 0,
                ProgramNode::Seq(cs) => {
                    let key = n as *const ProgramNode;
                    if let Some(&d) = memo.get(&key) {
                        return d;
                    }
                    let d = 1 + cs.iter().map(|c| go(c, memo)).max().unwrap_or(0);
                    memo.insert(key, d);
                    d
                }
            }
        }
        go(&self.root, &mut HashMap::new())
    }

    /// Leaf count of the flattened program, saturating at `u64::MAX`.
    pub fn leaf_count(&self) -> u64 {
        fn go(n: &ProgramNode, memo: &mut HashMap<*const ProgramNode, u64>) -> u64 {
            match n {
                ProgramNode::Leaf(_) => 1,
                ProgramNode::Seq(cs) => {
                    let key = n as *const ProgramNode;
                    if let Some(&c) = memo.get(&key) {
                        return c;
                    }
                    let c = cs.iter().fold(0u64, |acc, c| acc.saturating_add(go(c, memo)));
                    memo.insert(key, c);
                    c
                }
            }
        }
        go(&self.root, &mut HashMap::new())
    }

    /// Leaves left to right.
    pub fn flatten(&self) -> Vec<Leaf> {
        fn go(n: &ProgramNode, out: &mut Vec<Leaf>) {
            match n {
                ProgramNode::Leaf(l) => out.push(*l),
                ProgramNode::Seq(cs) => cs.iter().for_each(|c| go(c, out)),
            }
        }
        let mut out = Vec::new();
        go(&self.root, &mut out);
        out
    }

    /// Product of the flattened program. Children repeated within a node are
    /// evaluated once.
    pub fn evaluate(&self, assignment: &[bool]) -> S5 {
        fn go(n: &ProgramNode, a: &[bool]) -> S5 {
            match n {
                ProgramNode::Leaf(l) => l.value(a),
                ProgramNode::Seq(cs) => {
                    let mut done: Vec<(*const ProgramNode, S5)> = Vec::with_capacity(2);
                    let parts: Vec<S5> = cs
                        .iter()
                        .map(|c| match **c {
                            ProgramNode::Leaf(l) => l.value(a),
                            ProgramNode::Seq(_) => {
                                let key = Rc::as_ptr(c);
                                match done.iter().find(|(k, _)| *k == key) {
                                    Some(&(_, p)) => p,
                                    None => {
                                        let p = go(c, a);
                                        done.push((key, p));
                                        p
                                    }
                                }
                            }
                        })
                        .collect();
                    evaluate_product(&parts)
                }
            }
        }
        go(&self.root, assignment)
    }

    /// One leaf per line: cycle notation or `x<i>`.
    pub fn listing(&self) -> String {
        self.flatten().iter().map(|l| format!("{l}\n")).collect()
    }
}

/// Each NOR gate becomes the sixteen-slot gadget. `not`, `and`, `or` are
/// expanded by the [`to_nor`] rules on the fly, sharing the duplicated
/// operands, so the flattening equals that of the compiled [`to_nor`] image.
pub fn compile(phi: &BoolFormula) -> GroupProgram {
    use gadget::*;
    fn leaf(p: S5) -> Rc<ProgramNode> {
        Rc::new(ProgramNode::Leaf(Leaf::Const(p)))
    }
    fn nor(x: Rc<ProgramNode>, y: Rc<ProgramNode>) -> Rc<ProgramNode> {
        let children = vec![
            leaf(a0()), leaf(b()),
            x.clone(), x.clone(), x.clone(), x.clone(),
            leaf(c()),
            y.clone(), y.clone(), y.clone(), y.clone(),
            leaf(d()), x, leaf(e()), y, leaf(f()),
        ];
        Rc::new(ProgramNode::Seq(children))
    }
    fn go(phi: &BoolFormula) -> Rc<ProgramNode> {
        match phi {
            BoolFormula::Const(v) => leaf(if *v { a1() } else { a0() }),
            BoolFormula::Var(i) => Rc::new(ProgramNode::Leaf(Leaf::Var(*i))),
            BoolFormula::Nor(x, y) => nor(go(x), go(y)),
            BoolFormula::Not(x) => {
                let x = go(x);
                nor(x.clone(), x)
            }
            BoolFormula::Or(x, y) => {
                let inner = nor(go(x), go(y));
                nor(inner.clone(), inner)
            }
            BoolFormula::And(x, y) => {
                let (x, y) = (go(x), go(y));
                nor(nor(x.clone(), x), nor(y.clone(), y))
            }
        }
    }
    GroupProgram { root: go(phi) }
}

/// Pads every branch to the program's depth with `a₀` leaves so that each
/// gadget level has sixteen children: `16^depth` leaves in total.
pub fn pad_to_balanced(p: &GroupProgram) -> GroupProgram {
    fn identity_block(h: usize, memo: &mut Vec<Rc<ProgramNode>>) -> Rc<ProgramNode> {
        while memo.len() <= h {
            let next = match memo.last() {
                None => Rc::new(ProgramNode::Leaf(Leaf::Const(gadget::a0()))),
                Some(prev) => Rc::new(ProgramNode::Seq(vec![prev.clone(); 16])),
            };
            memo.push(next);
        }
        memo[h].clone()
    }
    fn pad(n: &Rc<ProgramNode>, h: usize, ids: &mut Vec<Rc<ProgramNode>>) -> Rc<ProgramNode> {
        if h == 0 {
            return n.clone();
        }
        match &**n {
            ProgramNode::Leaf(_) => {
                let mut cs = vec![pad(n, h - 1, ids)];
                let fill = identity_block(h - 1, ids);
                cs.extend(std::iter::repeat(fill).take(15));
                Rc::new(ProgramNode::Seq(cs))
            }
            ProgramNode::Seq(cs) => Rc::new(ProgramNode::Seq(cs.iter().map(|c| pad(c, h - 1, ids)).collect())),
        }
    }
    let depth = p.depth();
    GroupProgram { root: pad(&p.root, depth, &mut Vec::new()) }
}

/// Order in which a word of permutations is multiplied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// The first symbol acts first.
    LeftToRight,
    /// The last symbol acts first, as in function composition.
    RightToLeft,
}

impl Convention {
    pub fn product(self, seq: &[S5]) -> S5 {
        match self {
            Convention::LeftToRight => seq.iter().fold(S5::identity(), |acc, p| acc.then(p)),
            Convention::RightToLeft => seq.iter().rev().fold(S5::identity(), |acc, p| acc.then(p)),
        }
    }

    /// `w(a₀,a₀) = a₁` and `w(a₀,a₁) = w(a₁,a₀) = w(a₁,a₁) = a₀`.
    pub fn satisfies_gadget(self) -> bool {
        use gadget::*;
        let w = |x, y| self.product(&w_word(x, y));
        w(a0(), a0()) == a1() && w(a0(), a1()) == a0() && w(a1(), a0()) == a0() && w(a1(), a1()) == a0()
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::LeftToRight => write!(f, "left-to-right"),
            Convention::RightToLeft => write!(f, "right-to-left"),
        }
    }
}

/// The convention the gadget identities hold under.
pub const CONVENTION: Convention = Convention::LeftToRight;

/// The conventions under which all four gadget identities hold.
pub fn select_convention() -> Vec<Convention> {
    [Convention::LeftToRight, Convention::RightToLeft]
        .into_iter()
        .filter(|c| c.satisfies_gadget())
        .collect()
}

/// Ordered product under [`CONVENTION`], combined as a balanced tree of
/// segments; the empty product is `a₀`.
pub fn evaluate_product(leaves: &[S5]) -> S5 {
    const SEGMENT: usize = 8;
    if leaves.len() <= SEGMENT {
        return CONVENTION.product(leaves);
    }
    let (l, r) = leaves.split_at(leaves.len() / 2);
    let (l, r) = (evaluate_product(l), evaluate_product(r));
    CONVENTION.product(&[l, r])
}

/// Strict left-to-right fold carrying one permutation as its only state.
pub fn bottleneck_fold(leaves: &[S5]) -> S5 {
    let mut state = S5::identity();
    for p in leaves {
        state = CONVENTION.product(&[state, *p]);
    }
    state
}

/// Substitutes bits for variable leaves.
pub fn instantiate(leaves: &[Leaf], assignment: &[bool]) -> Vec<S5> {
    leaves.iter().map(|l| l.value(assignment)).collect()
}

/// Whether the compiled program of `phi` multiplies to `a₁` under `assignment`.
pub fn barrington_accepts(phi: &BoolFormula, assignment: &[bool]) -> Result<bool> {
    phi.check_arity(assignment)?;
    Ok(compile(phi).evaluate(assignment) == gadget::a1())
}

#[cfg(test)]
mod tests {
    use super::gadget::*;
    use super::*;
    use BoolFormula as F;

    #[test]
    fn convention_is_left_to_right() {
        assert_eq!(select_convention(), vec![Convention::LeftToRight]);
        assert_eq!(CONVENTION, Convention::LeftToRight);
        assert!(!Convention::RightToLeft.satisfies_gadget());
    }

    #[test]
    fn gadget_constants_match_cycle_notation() {
        let cases = [(A0, "()"), (A1, "(12345)"), (B, "(23)(45)"), (C, "(12435)"), (D, "(243)"), (E, "(345)"), (gadget::F, "(152)")];
        for (p, text) in cases {
            assert_eq!(p, text.parse::<S5>().unwrap());
            assert_eq!(p.to_string(), text);
        }
    }

    #[test]
    fn gadget_values() {
        assert_eq!(evaluate_product(&w_word(a0(), a0())), a1());
        assert_eq!(evaluate_product(&w_word(a0(), a1())), a0());
        assert_eq!(evaluate_product(&w_word(a1(), a0())), a0());
        assert_eq!(evaluate_product(&w_word(a1(), a1())), a0());
    }

    #[test]
    fn nor_listing() {
        let p = compile(&F::nor(F::var(1), F::var(2)));
        let lines: Vec<String> = p.listing().lines().map(String::from).collect();
        let expected = [
            "()", "(23)(45)", "x1", "x1", "x1", "x1", "(12435)", "x2", "x2", "x2", "x2", "(243)", "x1", "(345)",
            "x2", "(152)",
        ];
        assert_eq!(lines, expected);
        let parsed: Vec<Leaf> = lines.iter().map(|l| l.parse().unwrap()).collect();
        assert_eq!(parsed, p.flatten());
    }

    #[test]
    fn leaf_counts() {
        assert_eq!(compile(&F::var(1)).leaf_count(), 1);
        let n1 = F::nor(F::var(1), F::var(2));
        let n2 = F::nor(n1.clone(), n1);
        let p = compile(&n2);
        assert_eq!(p.leaf_count(), 166);
        assert_eq!(p.flatten().len(), 166);
        let padded = pad_to_balanced(&p);
        assert_eq!(padded.leaf_count(), 256);
        for bits in 0..4u32 {
            let a = [bits & 2 != 0, bits & 1 != 0];
            assert_eq!(padded.evaluate(&a), p.evaluate(&a));
            assert_eq!(evaluate_product(&instantiate(&padded.flatten(), &a)), p.evaluate(&a));
        }
    }

    #[test]
    fn padding_no_ops() {
        let v = compile(&F::var(1));
        assert_eq!(pad_to_balanced(&v), v);
        let n = compile(&F::nor(F::var(1), F::Const(false)));
        assert_eq!(pad_to_balanced(&n).flatten(), n.flatten());
    }

    #[test]
    fn compile_matches_compiled_nor_image() {
        let phi = F::and(F::or(F::var(1), F::not(F::var(2))), F::Const(true));
        let direct = compile(&phi);
        let via = compile(&to_nor(&phi));
        assert_eq!(direct.flatten(), via.flatten());
        assert!(to_nor(&phi).is_nor_only());
    }

    #[test]
    fn to_nor_rules() {
        assert_eq!(to_nor(&F::var(1)), F::var(1));
        assert_eq!(to_nor(&F::not(F::var(1))), F::nor(F::var(1), F::var(1)));
        let or = to_nor(&F::or(F::var(1), F::var(2)));
        let inner = F::nor(F::var(1), F::var(2));
        assert_eq!(or, F::nor(inner.clone(), inner));
    }

    #[test]
    fn accepts_examples() {
        assert!(barrington_accepts(&F::Const(true), &[]).unwrap());
        assert!(!barrington_accepts(&F::Const(false), &[]).unwrap());
        assert!(barrington_accepts(&F::nor(F::var(1), F::var(2)), &[false, false]).unwrap());
        assert!(!barrington_accepts(&F::nor(F::var(1), F::var(2)), &[true, false]).unwrap());
        assert!(matches!(
            barrington_accepts(&F::var(3), &[true]),
            Err(Error::ArityMismatch { needed: 3, got: 1 })
        ));
    }

    #[test]
    fn fold_examples() {
        assert_eq!(bottleneck_fold(&[a1(); 5]), a0());
        assert_eq!(bottleneck_fold(&[b()]), b());
        assert_eq!(evaluate_product(&[a0()]), a0());
    }

    #[test]
    fn parse_and_print() {
        let f = F::parse("or (var 1) (not (var 2))").unwrap();
        assert_eq!(f, F::or(F::var(1), F::not(F::var(2))));
        assert_eq!(f.to_string(), "or (var 1) (not (var 2))");
        assert_eq!(F::parse("(const true)").unwrap(), F::Const(true));
        assert_eq!(F::parse("nor true (var 3)").unwrap().arity(), 3);
        assert!(matches!(F::parse(""), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(F::parse("and (var 1)"), Err(Error::Syntax { .. })));
        assert!(matches!(F::parse("var 0"), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(F::parse("var 1 var 2"), Err(Error::Syntax { position: 6, .. })));
        assert!(matches!(F::parse("xor (var 1) (var 2)"), Err(Error::Syntax { position: 0, .. })));
    }
}
