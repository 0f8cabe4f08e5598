//! Finite ordered alphabets and words over them.
//!
//! Letters are stored as indices into the alphabet; the alphabet order is the
//! index order, and it fixes the length-lexicographic bijection between words
//! and naturals (the empty word is 0).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in its alphabet.
pub type Letter = usize;

/// A word is a sequence of letter indices.
pub type Word = Vec<Letter>;

#[derive(Clone)]
pub struct Alphabet {
    letters: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        let mut index = HashMap::with_capacity(letters.len());
        for (i, s) in letters.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidAlphabet("empty symbol".into()));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { letters, index })
    }

    /// One letter per character, in the given order.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(String::from))
    }

    /// The alphabet {0, 1}.
    pub fn binary() -> Self {
        Alphabet::from_chars("01").expect("binary alphabet")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.letters[letter]
    }

    pub fn symbols(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, symbol: &str) -> Option<Letter> {
        self.index.get(symbol).copied()
    }

    pub fn is_binary(&self) -> bool {
        self.letters == ["0", "1"]
    }

    /// Every symbol is exactly one character long.
    pub fn is_char_alphabet(&self) -> bool {
        self.letters.iter().all(|s| s.chars().count() == 1)
    }

    pub fn check_word(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|&&l| l >= self.len()) {
            Some(&index) => Err(Error::LetterOutOfRange { index, size: self.len() }),
            None => Ok(()),
        }
    }

    /// Parses a word. Character alphabets read one letter per character
    /// (whitespace ignored); other alphabets read whitespace-separated symbols.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if self.is_char_alphabet() {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    let s = c.to_string();
                    self.index_of(&s).ok_or(Error::UnknownSymbol { symbol: s })
                })
                .collect()
        } else {
            text.split_whitespace()
                .map(|s| self.index_of(s).ok_or_else(|| Error::UnknownSymbol { symbol: s.into() }))
                .collect()
        }
    }

    pub fn render(&self, w: &[Letter]) -> String {
        let sep = if self.is_char_alphabet() { "" } else { " " };
        w.iter().map(|&l| self.symbol(l)).collect::<Vec<_>>().join(sep)
    }

    /// Position of `w` in length-lexicographic order (the empty word is 0).
    /// `None` on overflow.
    pub fn word_to_index(&self, w: &[Letter]) -> Option<u64> {
        let k = self.len() as u64;
        // Words shorter than |w|: 1 + k + ... + k^(|w|-1).
        let mut shorter: u64 = 0;
        let mut power: u64 = 1;
        for _ in 0..w.len() {
            shorter = shorter.checked_add(power)?;
            power = power.checked_mul(k)?;
        }
        let mut rank: u64 = 0;
        for &l in w {
            rank = rank.checked_mul(k)?.checked_add(l as u64)?;
        }
        shorter.checked_add(rank)
    }

    /// Inverse of [`Alphabet::word_to_index`].
    pub fn index_to_word(&self, mut n: u64) -> Word {
        let k = self.len() as u64;
        let mut len = 0usize;
        let mut block: u64 = 1;
        while n >= block {
            n -= block;
            len += 1;
            block = match block.checked_mul(k) {
                Some(b) => b,
                None => u64::MAX,
            };
        }
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = (n % k) as Letter;
            n /= k;
        }
        w
    }

    /// All words of length exactly `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> WordsOfLength {
        WordsOfLength { k: self.len(), next: Some(vec![0; len]) }
    }

    /// All words of length at most `max_len`, in length-lexicographic order.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Word> + '_ {
        (0..=max_len).flat_map(move |n| self.words_of_length(n))
    }
}

/// Lexicographic enumeration of the words of one length.
pub struct WordsOfLength {
    k: usize,
    next: Option<Word>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.k {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Alphabet").field(&self.letters).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.letters.join(","))
    }
}
