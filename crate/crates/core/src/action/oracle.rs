//! Brute-force equivalence checking, independent of the group-theoretic
//! decision procedure.
//!
//! `Equivalent` is only reported once a common expansion has been exhibited.
//! `NotEquivalent` is only reported when some invariant of the identity
//! separates the two terms: the rightmost variable, the sequence of distinct
//! variables in order of first occurrence, the right height, the value in
//! the free band on the leaf sequence, or the value in some finite table
//! satisfying the identity.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::Serialize;

use crate::magma::Magma;
use crate::terms::{Term, Var};

use super::expansions;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    Unknown,
}

/// Which invariant told two terms apart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Separation {
    RightmostVariable,
    FirstOccurrences,
    RightHeight,
    FreeBand,
    Table { order: usize, assignment: Vec<u8> },
}

pub struct Oracle {
    models: Vec<Magma>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::with_table_order(4)
    }
}

impl Oracle {
    /// Uses every table satisfying the identity with at most `max_order`
    /// elements, up to isomorphism, as a separating model. Order 4 is enough
    /// to separate all inequivalent one-variable terms of size <= 5 and all
    /// inequivalent terms of size <= 4 over three variables.
    pub fn with_table_order(max_order: usize) -> Oracle {
        let models = (2..=max_order)
            .flat_map(Magma::enumerate_cd_up_to_iso)
            .filter(|m| !is_left_or_right_projection(m))
            .collect();
        Oracle { models }
    }

    pub fn models(&self) -> &[Magma] {
        &self.models
    }

    pub fn equiv(&self, t: &Term, u: &Term, depth: usize) -> Verdict {
        if t == u {
            return Verdict::Equivalent;
        }
        if self.separate(t, u).is_some() {
            return Verdict::NotEquivalent;
        }
        if common_expansion(t, u, depth).is_some() {
            Verdict::Equivalent
        } else {
            Verdict::Unknown
        }
    }

    /// The first invariant on which `t` and `u` differ.
    pub fn separate(&self, t: &Term, u: &Term) -> Option<Separation> {
        if t.rightmost_var() != u.rightmost_var() {
            return Some(Separation::RightmostVariable);
        }
        if t.variables() != u.variables() {
            return Some(Separation::FirstOccurrences);
        }
        if t.right_height() != u.right_height() {
            return Some(Separation::RightHeight);
        }
        if !free_band_eq(&t.leaves(), &u.leaves()) {
            return Some(Separation::FreeBand);
        }
        let nvars = t.max_var().max(u.max_var()) as usize;
        for m in &self.models {
            let mut assignment = vec![0u8; nvars];
            loop {
                if m.eval(t, &assignment) != m.eval(u, &assignment) {
                    return Some(Separation::Table { order: m.order(), assignment });
                }
                if !odometer(&mut assignment, m.order() as u8) {
                    break;
                }
            }
        }
        None
    }
}

/// `a*b = a` and `a*b = b` only see the leftmost/rightmost variable.
fn is_left_or_right_projection(m: &Magma) -> bool {
    let n = m.order() as u8;
    let all = |f: &dyn Fn(u8, u8) -> bool| (0..n).all(|a| (0..n).all(|b| f(a, b)));
    all(&|a, b| m.op(a, b) == a) || all(&|a, b| m.op(a, b) == b)
}

fn odometer(digits: &mut [u8], base: u8) -> bool {
    for d in digits.iter_mut() {
        if *d + 1 < base {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

/// Equality in the free band (idempotent semigroup), which satisfies the
/// identity since `xyyz = xyz`.
pub fn free_band_eq(u: &[Var], v: &[Var]) -> bool {
    let cu = content(u);
    if cu != content(v) {
        return false;
    }
    if cu.len() <= 1 {
        return true;
    }
    let (pu, au) = prefix_split(u, cu.len());
    let (pv, av) = prefix_split(v, cu.len());
    if au != av || !free_band_eq(pu, pv) {
        return false;
    }
    let (su, bu) = suffix_split(u, cu.len());
    let (sv, bv) = suffix_split(v, cu.len());
    bu == bv && free_band_eq(su, sv)
}

fn content(u: &[Var]) -> Vec<Var> {
    let mut c: Vec<Var> = u.to_vec();
    c.sort();
    c.dedup();
    c
}

/// Longest prefix missing one letter of the content, and that letter.
fn prefix_split(u: &[Var], k: usize) -> (&[Var], Var) {
    let mut seen = HashSet::new();
    for (i, v) in u.iter().enumerate() {
        seen.insert(*v);
        if seen.len() == k {
            return (&u[..i], *v);
        }
    }
    unreachable!("content has k letters")
}

fn suffix_split(u: &[Var], k: usize) -> (&[Var], Var) {
    let mut seen = HashSet::new();
    for (i, v) in u.iter().enumerate().rev() {
        seen.insert(*v);
        if seen.len() == k {
            return (&u[i + 1..], *v);
        }
    }
    unreachable!("content has k letters")
}

/// Breadth-first search, alternating sides, for a term reachable from both
/// `t` and `u` by at most `depth` expansions each.
pub fn common_expansion(t: &Term, u: &Term, depth: usize) -> Option<Term> {
    let mut seen = [HashSet::from([t.clone()]), HashSet::from([u.clone()])];
    let mut frontier = [vec![t.clone()], vec![u.clone()]];
    if t == u {
        return Some(t.clone());
    }
    for _ in 0..depth {
        for side in 0..2 {
            let mut next = Vec::new();
            for s in &frontier[side] {
                for (_, e) in expansions(s) {
                    if seen[1 - side].contains(&e) {
                        return Some(e);
                    }
                    if seen[side].insert(e.clone()) {
                        next.push(e);
                    }
                }
            }
            frontier[side] = next;
        }
    }
    None
}

/// [`Oracle::equiv`] with the default model family.
pub fn oracle_equiv(t: &Term, u: &Term, depth: usize) -> Verdict {
    static DEFAULT: OnceLock<Oracle> = OnceLock::new();
    DEFAULT.get_or_init(Oracle::default).equiv(t, u, depth)
}
