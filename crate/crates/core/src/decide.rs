//! Deciding equivalence under the identity, the left-divisor order on
//! one-variable terms, and the freeness test for finite tables.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use petgraph::algo::is_cyclic_directed;
use petgraph::graphmap::DiGraphMap;
use serde::Serialize;
use thiserror::Error;

use crate::action::{apply_positive_bounded, ApplyError};
use crate::blueprint::{chi, BlueprintError};
use crate::garside::DEFAULT_MAX_SIZE;
use crate::magma::Magma;
use crate::redress::{Fraction, RedressError, Redresser};
use crate::terms::{right_comb_of, Term, Var};
use crate::word::{PosWord, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error(transparent)]
    Blueprint(#[from] BlueprintError),
    #[error(transparent)]
    Redress(#[from] RedressError),
    #[error("term grew to {size} leaves, over the ceiling {limit}")]
    TooLarge { size: usize, limit: usize },
}

/// `dil(i, u)`: each letter `0^p` with `p < i` adds one. This tracks the
/// depth of `left^i(t)` inside `(t)u`: expanding at `0^p` inserts one node
/// above every deeper left-spine position, and other letters do not move it.
pub fn dil(i: usize, u: &PosWord) -> usize {
    u.addresses().iter().fold(i, |i, a| match a.zeros_count() {
        Some(p) if p < i => i + 1,
        _ => i,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Classification {
    #[serde(rename = "P_minus")]
    PMinus,
    #[serde(rename = "P_zero")]
    PZero,
    #[serde(rename = "P_plus")]
    PPlus,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::PMinus => "P_minus",
            Classification::PZero => "P_zero",
            Classification::PPlus => "P_plus",
        })
    }
}

/// Compares `dil(1, D)` with `dil(1, N)`.
pub fn classify_fraction(f: &Fraction) -> Classification {
    match dil(1, &f.den).cmp(&dil(1, &f.num)) {
        Ordering::Less => Classification::PPlus,
        Ordering::Equal => Classification::PZero,
        Ordering::Greater => Classification::PMinus,
    }
}

/// Decision procedures with explicit redressing budget and size ceiling.
#[derive(Clone, Copy, Debug)]
pub struct Decider {
    pub redresser: Redresser,
    pub max_size: usize,
}

impl Default for Decider {
    fn default() -> Self {
        Decider { redresser: Redresser::default(), max_size: DEFAULT_MAX_SIZE }
    }
}

impl Decider {
    pub fn classify(&self, w: &Word) -> Result<Classification, DecideError> {
        Ok(classify_fraction(&self.redresser.redress(w)?))
    }

    /// Redressed `χ_t⁻¹ · χ_t'`.
    fn difference(&self, t: &Term, t2: &Term) -> Result<Fraction, DecideError> {
        let w = chi(t)?.inverse().then(&chi(t2)?);
        Ok(self.redresser.redress(&w)?)
    }

    pub fn decide_one_var(&self, t: &Term, t2: &Term) -> Result<bool, DecideError> {
        Ok(classify_fraction(&self.difference(t, t2)?) == Classification::PZero)
    }

    /// Less when `t` is an iterated left divisor of `t2`.
    pub fn compare(&self, t: &Term, t2: &Term) -> Result<Ordering, DecideError> {
        Ok(match classify_fraction(&self.difference(t, t2)?) {
            Classification::PPlus => Ordering::Less,
            Classification::PZero => Ordering::Equal,
            Classification::PMinus => Ordering::Greater,
        })
    }

    /// Decides equivalence of arbitrary terms.
    ///
    /// With `N · D⁻¹` the redressed difference of the projected blueprints,
    /// `N` applies to `t · z^[p]` and `D` to `t2 · z^[p]` for `p` at least
    /// both sizes, giving terms of one skeleton. Their left subterms at
    /// depth `dil(1, N)` are expansions of `t` and `t2`, and coincide
    /// exactly when `t` and `t2` are equivalent.
    pub fn decide(&self, t: &Term, t2: &Term) -> Result<bool, DecideError> {
        let diff = self.difference(&t.project(), &t2.project())?;
        if classify_fraction(&diff) != Classification::PZero {
            return Ok(false);
        }
        let (a, b) = self.common_expansions(t, t2, &diff)?;
        Ok(a == b)
    }

    /// The two expansions compared by [`Decider::decide`].
    pub fn common_expansions(&self, t: &Term, t2: &Term, diff: &Fraction) -> Result<(Term, Term), DecideError> {
        let z = Var::new(t.max_var().max(t2.max_var()) + 1).expect("positive index");
        let comb = right_comb_of(z, t.size().max(t2.size())).expect("size >= 1");
        let grow = |s: &Term, u: &PosWord| {
            apply_positive_bounded(&Term::node(s.clone(), comb.clone()), u, self.max_size).map_err(|e| match e {
                ApplyError::TooLarge { size, limit, .. } => DecideError::TooLarge { size, limit },
                ApplyError::Undefined { step } => {
                    panic!("blueprint difference undefined on {s} at step {step}")
                }
            })
        };
        let k = dil(1, &diff.num);
        let a = grow(t, &diff.num)?;
        let b = grow(t2, &diff.den)?;
        let left = |s: &Term| s.left_iter(k).expect("left spine at least dil(1, N) deep").clone();
        Ok((left(&a), left(&b)))
    }
}

pub fn classify(w: &Word) -> Classification {
    Decider::default().classify(w).expect("redressing exceeded its step budget")
}

/// Equivalence of one-variable terms.
pub fn decide_one_var(t: &Term, t2: &Term) -> Result<bool, DecideError> {
    Decider::default().decide_one_var(t, t2)
}

/// Equivalence of arbitrary terms.
pub fn decide(t: &Term, t2: &Term) -> bool {
    Decider::default().decide(t, t2).expect("decision exceeded the default limits")
}

/// The linear left-divisor order on one-variable terms.
pub fn compare(t: &Term, t2: &Term) -> Result<Ordering, DecideError> {
    Decider::default().compare(t, t2)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table syntax: {0}")]
    Syntax(String),
    #[error("identity fails at a={0}, b={1}, c={2}")]
    NotCd(u8, u8, u8),
    #[error("element {0} does not generate the table")]
    NotGenerating(u8),
}

/// A finite operation with a distinguished generator.
///
/// Text format: a line `n g`, then `n` rows of `n` space-separated entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MulTable {
    pub magma: Magma,
    pub generator: u8,
}

impl MulTable {
    pub fn new(magma: Magma, generator: u8) -> Result<MulTable, TableError> {
        if generator as usize >= magma.order() {
            return Err(TableError::Syntax(format!("generator {generator} out of range")));
        }
        Ok(MulTable { magma, generator })
    }
}

impl FromStr for MulTable {
    type Err = TableError;

    fn from_str(s: &str) -> Result<MulTable, TableError> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let nums = |line: &str| -> Result<Vec<usize>, TableError> {
            line.split_whitespace()
                .map(|x| x.parse::<usize>().map_err(|e| TableError::Syntax(format!("{x:?}: {e}"))))
                .collect()
        };
        let head = nums(lines.next().ok_or_else(|| TableError::Syntax("empty input".into()))?)?;
        let [n, g] = head[..] else {
            return Err(TableError::Syntax("first line must be `n g`".into()));
        };
        let mut table = Vec::with_capacity(n * n);
        for r in 0..n {
            let row = nums(lines.next().ok_or_else(|| TableError::Syntax(format!("missing row {r}")))?)?;
            if row.len() != n {
                return Err(TableError::Syntax(format!("row {r} has {} entries, expected {n}", row.len())));
            }
            table.extend(row.into_iter().map(|x| x.min(u8::MAX as usize) as u8));
        }
        if lines.next().is_some() {
            return Err(TableError::Syntax("trailing rows".into()));
        }
        let magma = Magma::new(n, table).ok_or_else(|| TableError::Syntax("entries out of range".into()))?;
        MulTable::new(magma, g.min(u8::MAX as usize) as u8)
    }
}

impl fmt::Display for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.magma.order(), self.generator)?;
        for row in self.magma.rows() {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Whether the table is free: after validating the identity and the
/// generator, whether left division (`a → a·x`) has no cycle.
pub fn check_free(m: &MulTable) -> Result<bool, TableError> {
    if let Some((a, b, c)) = m.magma.cd_violation() {
        return Err(TableError::NotCd(a, b, c));
    }
    if !m.magma.generates(m.generator) {
        return Err(TableError::NotGenerating(m.generator));
    }
    let n = m.magma.order() as u8;
    let mut g = DiGraphMap::<u8, ()>::new();
    for a in 0..n {
        g.add_node(a);
        for x in 0..n {
            g.add_edge(a, m.magma.op(a, x), ());
        }
    }
    Ok(!is_cyclic_directed(&g))
}
