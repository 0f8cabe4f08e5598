//! Named leaf languages.

use std::fmt;
use std::str::FromStr;

use crate::acceptor::{s5_alphabet, Acceptor, GroupWord};
use crate::alphabet::Alphabet;
use crate::automata::{regex_to_min_dfa, Dfa};
use crate::cardinal::CardinalSpec;
use crate::error::{Error, Result};
use crate::regex::parse_regex;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    /// Contains a 1.
    E,
    /// Only 1s.
    U,
    /// More 1s than 0s.
    Maj,
    /// Exactly one 1.
    Us,
    /// Odd number of 1s.
    Par,
    /// Number of 1s divisible by k.
    ModK(usize),
    /// Contains 010 and avoids 0110.
    NpAndConp,
    /// The alternation languages A(k), k ≥ 2.
    A(usize),
    /// S₅ words multiplying to the identity.
    S5Word,
}

impl CatalogName {
    /// Parses a name plus optional parameters, e.g. `("mod_k", [3])`, or
    /// the inline forms `mod_3`, `mod_k(3)`, `A(3)`, `A3`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let param = |inline: Option<usize>| -> Result<usize> {
            inline
                .or_else(|| params.first().copied())
                .ok_or_else(|| Error::InvalidParameter(format!("{name} needs a parameter")))
        };
        let (base, inline) = split_param(name)?;
        let entry = match base {
            "E" => CatalogName::E,
            "U" => CatalogName::U,
            "maj" => CatalogName::Maj,
            "us" => CatalogName::Us,
            "par" => CatalogName::Par,
            "np_and_conp" => CatalogName::NpAndConp,
            "s5_word" => CatalogName::S5Word,
            "mod_k" | "mod" => CatalogName::ModK(param(inline)?),
            "A" => CatalogName::A(param(inline)?),
            _ => return Err(Error::UnknownLanguage(name.into())),
        };
        match entry {
            CatalogName::ModK(k) | CatalogName::A(k) if k < 2 => {
                Err(Error::InvalidParameter(format!("{base} requires k >= 2, got {k}")))
            }
            e => Ok(e),
        }
    }
}

fn split_param(name: &str) -> Result<(&str, Option<usize>)> {
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("bad parameter in {name:?}")))
    };
    if let Some(open) = name.find('(') {
        let inner = name[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::InvalidParameter(format!("unclosed parameter in {name:?}")))?;
        return Ok((&name[..open], Some(num(inner)?)));
    }
    if let Some(rest) = name.strip_prefix("mod_") {
        if rest != "k" {
            return Ok(("mod_k", Some(num(rest)?)));
        }
    }
    if let Some(rest) = name.strip_prefix('A') {
        if !rest.is_empty() {
            return Ok(("A", Some(num(rest)?)));
        }
    }
    Ok((name, None))
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogName::parse(s, &[])
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::E => write!(f, "E"),
            CatalogName::U => write!(f, "U"),
            CatalogName::Maj => write!(f, "maj"),
            CatalogName::Us => write!(f, "us"),
            CatalogName::Par => write!(f, "par"),
            CatalogName::ModK(k) => write!(f, "mod_k({k})"),
            CatalogName::NpAndConp => write!(f, "np_and_conp"),
            CatalogName::A(k) => write!(f, "A({k})"),
            CatalogName::S5Word => write!(f, "s5_word"),
        }
    }
}

/// Regex source of `A(k)` over {0,1}.
pub fn alternation_regex(k: usize) -> Result<String> {
    match k {
        0 | 1 => Err(Error::InvalidParameter(format!("A(k) requires k >= 2, got {k}"))),
        2 => Ok("(0+1)*11(010)^+11(0+1)*".to_string()),
        _ => {
            let ones = "1".repeat(k);
            Ok(format!("(0+1)*{ones}~({}){ones}(0+1)*", alternation_regex(k - 1)?))
        }
    }
}

/// Regex source for the regex-defined catalog entries.
pub fn catalog_regex(entry: &CatalogName) -> Option<String> {
    match entry {
        CatalogName::E => Some("(0+1)*1(0+1)*".into()),
        CatalogName::U => Some("1*".into()),
        CatalogName::Us => Some("0*10*".into()),
        CatalogName::NpAndConp => Some("~(~((0+1)*010(0+1)*)+(0+1)*0110(0+1)*)".into()),
        CatalogName::A(k) => alternation_regex(*k).ok(),
        _ => None,
    }
}

pub fn catalog_entry(entry: &CatalogName) -> Result<Acceptor> {
    let bin = Alphabet::binary();
    let name = entry.to_string();
    let acceptor = match entry {
        CatalogName::Maj => Acceptor::counting(name, bin, CardinalSpec::majority(2, 1)?)?,
        CatalogName::Par => Acceptor::regular(name, bin, Dfa::counter(2, 1, 2, 1))?,
        CatalogName::ModK(k) => Acceptor::regular(name, bin, Dfa::counter(2, 1, *k, 0))?,
        CatalogName::S5Word => Acceptor::group_word(name, s5_alphabet(), GroupWord::s5())?,
        other => {
            let text = catalog_regex(other).expect("regex-defined entry");
            let dfa = regex_to_min_dfa(&parse_regex(&text, &bin)?, &bin)?;
            Acceptor::regular(name, bin, dfa)?
        }
    };
    Ok(acceptor.with_catalog(entry.clone()))
}

/// Looks up a named language, e.g. `catalog("mod_k", &[3])`.
pub fn catalog(name: &str, params: &[usize]) -> Result<Acceptor> {
    catalog_entry(&CatalogName::parse(name, params)?)
}
