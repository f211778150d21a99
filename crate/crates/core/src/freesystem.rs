//! The monogenic system realized on cosets `a·G_0` of the group, with
//! `a * b = a · 1b · φ · 1b⁻¹`.
//!
//! Equality of cosets is only decided when both elements remember the
//! one-variable term they came from; no general membership test for the
//! subgroup `G_0` is known.

use serde::Serialize;

use crate::blueprint::{chi, star, BlueprintError};
use crate::decide::{classify, decide_one_var, Classification};
use crate::terms::Term;
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coset {
    pub rep: Word,
    pub origin: Option<Term>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CosetEq {
    Equal,
    NotEqual,
    Unknown,
}

impl Coset {
    /// A coset known only by a representative.
    pub fn from_word(rep: Word) -> Coset {
        Coset { rep, origin: None }
    }
}

pub fn coset_of_term(t: &Term) -> Result<Coset, BlueprintError> {
    Ok(Coset { rep: chi(t)?, origin: Some(t.clone()) })
}

pub fn coset_mul(a: &Coset, b: &Coset) -> Coset {
    let origin = match (&a.origin, &b.origin) {
        (Some(s), Some(t)) => Some(Term::node(s.clone(), t.clone())),
        _ => None,
    };
    Coset { rep: star(&a.rep, &b.rep), origin }
}

/// Decided through the origins when both are known. Otherwise a difference
/// outside `P_0` proves inequality and anything else is `Unknown`.
pub fn coset_eq(a: &Coset, b: &Coset) -> CosetEq {
    if let (Some(s), Some(t)) = (&a.origin, &b.origin) {
        let same = decide_one_var(s, t).expect("origins are one-variable terms");
        return if same { CosetEq::Equal } else { CosetEq::NotEqual };
    }
    match classify(&a.rep.inverse().then(&b.rep)) {
        Classification::PZero => CosetEq::Unknown,
        _ => CosetEq::NotEqual,
    }
}
