//! CNF formulas and DIMACS input.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Clauses of nonzero DIMACS literals over variables `1..=num_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for lit in clauses.iter().flatten() {
            if *lit == 0 || lit.unsigned_abs() as usize > num_vars {
                return Err(Error::InvalidParameter(format!(
                    "literal {lit} outside variables 1..={num_vars}"
                )));
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }

    /// The `index`-th assignment in lexicographic order, variable 1 most significant.
    pub fn assignment(&self, index: u64) -> Vec<bool> {
        (0..self.num_vars)
            .map(|i| (index >> (self.num_vars - 1 - i)) & 1 == 1)
            .collect()
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(format!("DIMACS: {msg}"));
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if header.is_some() || parts.len() != 4 || parts[1] != "cnf" {
                    return Err(bad(format!("bad problem line {line:?}")));
                }
                let n = |s: &str| s.parse::<usize>().map_err(|_| bad(format!("bad number {s:?}")));
                header = Some((n(parts[2])?, n(parts[3])?));
                continue;
            }
            if header.is_none() {
                return Err(bad("clause before problem line".into()));
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| bad(format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        let (num_vars, num_clauses) = header.ok_or_else(|| bad("missing problem line".into()))?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != num_clauses {
            return Err(bad(format!("header declares {num_clauses} clauses, found {}", clauses.len())));
        }
        Cnf::new(num_vars, clauses).map_err(|e| bad(e.to_string()))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for lit in c {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}
