//! Regular expression syntax.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! union   := concat ('+' concat)*
//! concat  := factor factor*
//! factor  := '~' factor | atom postfix*
//! postfix := '*' | '^+'
//! atom    := letter | '(' union ')' | '()' | 'ε' | '∅'
//! ```
//!
//! `()` and `ε` denote the empty word, `∅` the empty language, and `~` is
//! complement with respect to the declared alphabet.

use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(Letter),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
    Complement(Box<Regex>),
}

impl Regex {
    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: Regex) -> Regex {
        Regex::Star(Box::new(a))
    }

    /// `a^+`, lowered to `a a*`.
    pub fn plus(a: Regex) -> Regex {
        Regex::concat(a.clone(), Regex::star(a))
    }

    pub fn complement(a: Regex) -> Regex {
        Regex::Complement(Box::new(a))
    }

    /// Largest letter index used, if any.
    pub fn max_letter(&self) -> Option<Letter> {
        match self {
            Regex::Empty | Regex::Epsilon => None,
            Regex::Letter(l) => Some(*l),
            Regex::Union(a, b) | Regex::Concat(a, b) => a.max_letter().max(b.max_letter()),
            Regex::Star(a) | Regex::Complement(a) => a.max_letter(),
        }
    }

    /// Renders the expression with explicit parentheses.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        RegexDisplay { regex: self, alphabet }
    }
}

struct RegexDisplay<'a> {
    regex: &'a Regex,
    alphabet: &'a Alphabet,
}

impl fmt::Display for RegexDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |r| RegexDisplay { regex: r, alphabet: self.alphabet };
        match self.regex {
            Regex::Empty => write!(f, "∅"),
            Regex::Epsilon => write!(f, "()"),
            Regex::Letter(l) => write!(f, "{}", self.alphabet.symbol(*l)),
            Regex::Union(a, b) => write!(f, "({}+{})", sub(a), sub(b)),
            Regex::Concat(a, b) => write!(f, "{}{}", sub(a), sub(b)),
            Regex::Star(a) => write!(f, "({})*", sub(a)),
            Regex::Complement(a) => write!(f, "~({})", sub(a)),
        }
    }
}

/// Parses `text` over a character alphabet.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<Regex> {
    if !alphabet.is_char_alphabet() {
        return Err(Error::Unsupported(
            "regular expressions need single-character symbols".into(),
        ));
    }
    for reserved in ["+", "*", "^", "(", ")", "~", "ε", "∅"] {
        if alphabet.index_of(reserved).is_some() {
            return Err(Error::InvalidAlphabet(format!(
                "symbol {reserved:?} is reserved by the regex syntax"
            )));
        }
    }
    let tokens: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser { tokens, pos: 0, alphabet, end: text.chars().count() };
    if parser.tokens.is_empty() {
        return Err(parser.error("empty expression"));
    }
    let ast = parser.union()?;
    if let Some(&(p, c)) = parser.tokens.get(parser.pos) {
        return Err(Error::Syntax { position: p, message: format!("unexpected {c:?}") });
    }
    Ok(ast)
}

struct Parser<'a> {
    tokens: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a Alphabet,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(p, _)| p)
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax { position: self.position(), message: message.into() }
    }

    fn union(&mut self) -> Result<Regex> {
        let mut acc = self.concat()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let rhs = self.concat()?;
            acc = Regex::union(acc, rhs);
        }
        Ok(acc)
    }

    fn starts_factor(c: char) -> bool {
        !matches!(c, '+' | ')' | '*' | '^')
    }

    fn concat(&mut self) -> Result<Regex> {
        match self.peek() {
            Some(c) if Self::starts_factor(c) => {}
            Some(c) => return Err(self.error(&format!("expected an expression, found {c:?}"))),
            None => return Err(self.error("expected an expression")),
        }
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            if !Self::starts_factor(c) {
                break;
            }
            let rhs = self.factor()?;
            acc = Regex::concat(acc, rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Regex> {
        if self.peek() == Some('~') {
            self.pos += 1;
            return Ok(Regex::complement(self.factor()?));
        }
        let mut atom = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    atom = Regex::star(atom);
                }
                Some('^') => {
                    self.pos += 1;
                    if self.peek() != Some('+') {
                        return Err(self.error("expected '+' after '^'"));
                    }
                    self.pos += 1;
                    atom = Regex::plus(atom);
                }
                _ => return Ok(atom),
            }
        }
    }

    fn atom(&mut self) -> Result<Regex> {
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of expression"));
        };
        match c {
            '(' => {
                self.pos += 1;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(Regex::Epsilon);
                }
                let inner = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            'ε' => {
                self.pos += 1;
                Ok(Regex::Epsilon)
            }
            '∅' => {
                self.pos += 1;
                Ok(Regex::Empty)
            }
            _ => {
                let symbol = c.to_string();
                match self.alphabet.index_of(&symbol) {
                    Some(l) => {
                        self.pos += 1;
                        Ok(Regex::Letter(l))
                    }
                    None => Err(Error::UnknownSymbol { symbol }),
                }
            }
        }
    }
}
