//! Complexity classification of leaf languages.
//!
//! Regular languages are classified by their syntactic monoid: a
//! non-solvable monoid yields exactly PSPACE, a solvable one a class inside
//! MODPH, an aperiodic one a class inside PH. Catalog entries additionally
//! carry the class they are known to define.

use std::fmt::{self, Write as _};
use std::sync::OnceLock;

use crate::acceptor::Acceptor;
use crate::automata::Dfa;
use crate::catalog::{catalog_entry, CatalogName};
use crate::error::Result;
use crate::monoid::{transition_monoid, DEFAULT_MONOID_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassTag {
    Np,
    CoNp,
    Pp,
    Us,
    ModP(usize),
    NpAndCoNp,
    /// Boolean closure of Σ_k^p.
    BoolClosureSigma(usize),
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Np => write!(f, "NP"),
            ClassTag::CoNp => write!(f, "coNP"),
            ClassTag::Pp => write!(f, "PP"),
            ClassTag::Us => write!(f, "US"),
            ClassTag::ModP(k) => write!(f, "Mod_{k} P"),
            ClassTag::NpAndCoNp => write!(f, "NP∧coNP"),
            ClassTag::BoolClosureSigma(k) => write!(f, "within boolean closure of Σ_{k}^p"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    EqualsPspace,
    WithinModph,
    WithinPh,
    Named(ClassTag),
    Unclassified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::EqualsPspace => write!(f, "EQUALS_PSPACE"),
            Verdict::WithinModph => write!(f, "WITHIN_MODPH"),
            Verdict::WithinPh => write!(f, "WITHIN_PH"),
            Verdict::Named(tag) => write!(f, "NAMED({tag})"),
            Verdict::Unclassified => write!(f, "UNCLASSIFIED"),
        }
    }
}

/// Facts the verdict rests on.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Evidence {
    pub monoid_size: Option<usize>,
    pub aperiodic: Option<bool>,
    pub solvable: Option<bool>,
    pub catalog: Option<CatalogName>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Verdict from the syntactic monoid (regular acceptors only).
    pub algebraic: Option<Verdict>,
    /// Class attached to a catalog entry.
    pub named: Option<ClassTag>,
    pub evidence: Evidence,
}

impl Classification {
    /// The headline verdict: algebraic if available, else named, else unclassified.
    pub fn verdict(&self) -> Verdict {
        match (&self.algebraic, &self.named) {
            (Some(v), _) => v.clone(),
            (None, Some(tag)) => Verdict::Named(tag.clone()),
            (None, None) => Verdict::Unclassified,
        }
    }

    fn citation(&self) -> &'static str {
        match (&self.algebraic, &self.named) {
            (Some(Verdict::EqualsPspace), _) => {
                "regular leaf language with non-solvable syntactic monoid defines exactly PSPACE"
            }
            (Some(Verdict::WithinModph), _) => {
                "regular leaf languages with solvable syntactic monoid define classes within MODPH"
            }
            (Some(Verdict::WithinPh), _) => {
                "regular leaf languages with aperiodic syntactic monoid define classes within PH"
            }
            (_, Some(_)) => "class defined by the named leaf language",
            _ => "no classification rule applies",
        }
    }

    /// `KEY: value` report; `language` is the name or regex shown first.
    pub fn report(&self, language: &str) -> String {
        let yes_no = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        let mut out = String::new();
        let _ = writeln!(out, "LANGUAGE: {language}");
        let _ = writeln!(
            out,
            "MONOID_SIZE: {}",
            self.evidence.monoid_size.map_or("n/a".to_string(), |n| n.to_string())
        );
        let _ = writeln!(out, "APERIODIC: {}", yes_no(self.evidence.aperiodic));
        let _ = writeln!(out, "SOLVABLE: {}", yes_no(self.evidence.solvable));
        let _ = writeln!(out, "VERDICT: {}", self.verdict());
        if let (Some(_), Some(tag)) = (&self.algebraic, &self.named) {
            let _ = writeln!(out, "NAMED: {tag}");
        }
        let _ = writeln!(out, "CITATION: {}", self.citation());
        out
    }
}

fn named_class(entry: &CatalogName) -> Option<ClassTag> {
    match entry {
        CatalogName::E => Some(ClassTag::Np),
        CatalogName::U => Some(ClassTag::CoNp),
        CatalogName::Maj => Some(ClassTag::Pp),
        CatalogName::Us => Some(ClassTag::Us),
        CatalogName::Par => Some(ClassTag::ModP(2)),
        CatalogName::ModK(k) => Some(ClassTag::ModP(*k)),
        CatalogName::NpAndConp => Some(ClassTag::NpAndCoNp),
        CatalogName::A(k) => Some(ClassTag::BoolClosureSigma(*k)),
        CatalogName::S5Word => None,
    }
}

/// Minimal DFAs of the regular binary catalog entries, in lookup order.
fn regular_catalog() -> &'static [(CatalogName, Dfa)] {
    static TABLE: OnceLock<Vec<(CatalogName, Dfa)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut names = vec![CatalogName::E, CatalogName::U, CatalogName::Us, CatalogName::Par, CatalogName::NpAndConp];
        names.extend((2..=3).map(CatalogName::A));
        names.extend((2..=8).map(CatalogName::ModK));
        names
            .into_iter()
            .map(|n| {
                let dfa = catalog_entry(&n).expect("catalog entry builds").to_dfa().expect("regular entry");
                (n, dfa.minimize())
            })
            .collect()
    })
}

/// The catalog entry recognising the same binary language as `a`, if any.
pub fn identify_catalog(a: &Acceptor) -> Option<CatalogName> {
    if let Some(name) = a.catalog_entry() {
        return Some(name.clone());
    }
    if !a.alphabet().is_binary() {
        return None;
    }
    let dfa = a.to_dfa()?.minimize();
    regular_catalog().iter().find(|(_, d)| d.equivalent(&dfa)).map(|(n, _)| n.clone())
}

pub fn classify_leaf_language(a: &Acceptor) -> Result<Classification> {
    classify_with_cap(a, DEFAULT_MONOID_CAP)
}

pub fn classify_with_cap(a: &Acceptor, monoid_cap: usize) -> Result<Classification> {
    let entry = identify_catalog(a);
    let named = entry.as_ref().and_then(named_class);
    let mut evidence = Evidence { catalog: entry, ..Evidence::default() };
    let algebraic = match a.to_dfa() {
        Some(dfa) => {
            let monoid = transition_monoid(&dfa.minimize(), monoid_cap)?;
            let aperiodic = monoid.is_aperiodic();
            // Aperiodic monoids have only trivial groups.
            let solvable = aperiodic || monoid.is_solvable();
            evidence.monoid_size = Some(monoid.len());
            evidence.aperiodic = Some(aperiodic);
            evidence.solvable = Some(solvable);
            Some(if !solvable {
                Verdict::EqualsPspace
            } else if aperiodic {
                Verdict::WithinPh
            } else {
                Verdict::WithinModph
            })
        }
        None => None,
    };
    Ok(Classification { algebraic, named, evidence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn classify(name: &str, params: &[usize]) -> Classification {
        classify_leaf_language(&catalog(name, params).unwrap()).unwrap()
    }

    #[test]
    fn fixed_points() {
        assert_eq!(classify("s5_word", &[]).verdict(), Verdict::EqualsPspace);
        let u = classify("U", &[]);
        assert_eq!(u.verdict(), Verdict::WithinPh);
        assert_eq!(u.named, Some(ClassTag::CoNp));
        assert_eq!(u.evidence.aperiodic, Some(true));
        let par = classify("par", &[]);
        assert_eq!(par.algebraic, Some(Verdict::WithinModph));
        assert_eq!(par.named, Some(ClassTag::ModP(2)));
    }

    #[test]
    fn counting_entries_are_named_only() {
        let maj = classify("maj", &[]);
        assert_eq!(maj.algebraic, None);
        assert_eq!(maj.verdict(), Verdict::Named(ClassTag::Pp));
        assert_eq!(maj.evidence.monoid_size, None);
    }

    #[test]
    fn regex_recognised_as_catalog_entry() {
        use crate::alphabet::Alphabet;
        use crate::automata::regex_to_min_dfa;
        use crate::regex::parse_regex;
        let bin = Alphabet::binary();
        let dfa = regex_to_min_dfa(&parse_regex("(1)*1*", &bin).unwrap(), &bin).unwrap();
        let c = classify_leaf_language(&Acceptor::regular("(1)*1*", bin.clone(), dfa).unwrap()).unwrap();
        assert_eq!(c.named, Some(ClassTag::CoNp));
        assert_eq!(c.evidence.catalog, Some(CatalogName::U));
        let dfa = regex_to_min_dfa(&parse_regex("(0+1)*00", &bin).unwrap(), &bin).unwrap();
        let c = classify_leaf_language(&Acceptor::regular("x", bin, dfa).unwrap()).unwrap();
        assert_eq!(c.named, None);
        assert_eq!(c.verdict(), Verdict::WithinPh);
    }

    #[test]
    fn counting_outside_catalog_is_unclassified() {
        use crate::alphabet::Alphabet;
        use crate::cardinal::CardinalSpec;
        let spec = CardinalSpec::majority(2, 0).unwrap();
        let a = Acceptor::counting("more zeros", Alphabet::binary(), spec).unwrap();
        let c = classify_leaf_language(&a).unwrap();
        assert_eq!(c.verdict(), Verdict::Unclassified);
        assert!(c.report("more zeros").contains("VERDICT: UNCLASSIFIED\n"));
    }

    #[test]
    fn report_format() {
        let r = classify("U", &[]).report("U");
        assert_eq!(
            r,
            "LANGUAGE: U\nMONOID_SIZE: 2\nAPERIODIC: yes\nSOLVABLE: yes\nVERDICT: WITHIN_PH\n\
             NAMED: coNP\nCITATION: regular leaf languages with aperiodic syntactic monoid define classes within PH\n"
        );
    }
}
