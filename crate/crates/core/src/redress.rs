//! Word redressing: turning an arbitrary signed word into a fraction
//! `N · D⁻¹` of positive words by repeatedly replacing `α⁻¹·β` with
//! `f(α, β) · f(β, α)⁻¹`, and the word problems it decides.

use std::fmt;

use thiserror::Error;

use crate::action::trace_positive;
use crate::terms::Address;
use crate::word::{Letter, PosWord, Sign, Word};

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RedressError {
    #[error("redressing did not finish within {budget} steps")]
    BudgetExceeded { budget: usize },
}

/// The complement table on single addresses.
pub fn f_cd(alpha: &Address, beta: &Address) -> PosWord {
    if alpha == beta {
        return PosWord::empty();
    }
    if let Some(rest) = beta.strip_prefix(alpha) {
        match rest {
            [0, gamma @ ..] => {
                return PosWord::letter(alpha.with_suffix(&[0, 0]).with_suffix(gamma));
            }
            [1, 0, gamma @ ..] => {
                return PosWord::from_addresses(vec![
                    alpha.with_suffix(&[0, 1]).with_suffix(gamma),
                    alpha.with_suffix(&[1, 0]).with_suffix(gamma),
                ]);
            }
            [1] => return PosWord::from_addresses(vec![alpha.child(1), alpha.clone()]),
            _ => {}
        }
    }
    if alpha.strip_prefix(beta) == Some(&[1][..]) {
        return PosWord::from_addresses(vec![beta.clone(), beta.child(0)]);
    }
    PosWord::letter(beta.clone())
}

/// A pair of positive words standing for `num · den⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Fraction {
    pub num: PosWord,
    pub den: PosWord,
}

impl Fraction {
    pub fn to_word(&self) -> Word {
        self.num.to_word().then(&self.den.inverse())
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.num, self.den)
    }
}

/// Redressing with an explicit step budget.
#[derive(Clone, Copy, Debug)]
pub struct Redresser {
    pub budget: usize,
}

impl Default for Redresser {
    fn default() -> Self {
        Redresser { budget: DEFAULT_BUDGET }
    }
}

impl Redresser {
    pub fn new(budget: usize) -> Redresser {
        Redresser { budget }
    }

    /// Leftmost-first redressing. The part already scanned always has the
    /// shape `P · Q⁻¹`, so the leftmost `α⁻¹β` factor sits at its boundary.
    pub fn redress(&self, w: &Word) -> Result<Fraction, RedressError> {
        let mut pending: Vec<Letter> = w.letters().iter().rev().cloned().collect();
        let mut num: Vec<Address> = Vec::new();
        let mut neg: Vec<Address> = Vec::new();
        let mut steps = 0usize;
        while let Some(letter) = pending.pop() {
            match letter.sign {
                Sign::Neg => neg.push(letter.address),
                Sign::Pos => match neg.pop() {
                    None => num.push(letter.address),
                    Some(alpha) => {
                        steps += 1;
                        if steps > self.budget {
                            return Err(RedressError::BudgetExceeded { budget: self.budget });
                        }
                        let beta = letter.address;
                        let a = f_cd(&alpha, &beta);
                        let b = f_cd(&beta, &alpha);
                        pending.extend(b.into_addresses().into_iter().map(Letter::neg));
                        pending.extend(a.into_addresses().into_iter().rev().map(Letter::pos));
                    }
                },
            }
        }
        neg.reverse();
        Ok(Fraction { num: PosWord::from_addresses(num), den: PosWord::from_addresses(neg) })
    }

    /// `(u\v, v\u)`: numerator and denominator of `u⁻¹·v`.
    pub fn complements(&self, u: &PosWord, v: &PosWord) -> Result<(PosWord, PosWord), RedressError> {
        let f = self.redress(&u.inverse().then(&v.to_word()))?;
        Ok((f.num, f.den))
    }

    pub fn complement(&self, u: &PosWord, v: &PosWord) -> Result<PosWord, RedressError> {
        Ok(self.complements(u, v)?.0)
    }

    pub fn pos_equiv(&self, u: &PosWord, v: &PosWord) -> Result<bool, RedressError> {
        let (a, b) = self.complements(u, v)?;
        Ok(a.is_empty() && b.is_empty())
    }

    pub fn group_equiv(&self, w: &Word, w2: &Word) -> Result<bool, RedressError> {
        let f = self.redress(&w.inverse().then(w2))?;
        self.pos_equiv(&f.num, &f.den)
    }
}

/// Redresses `w` with the default budget.
///
/// Panics if the budget is exhausted; redressing always terminates, so this
/// indicates a bug. Use [`Redresser`] to choose the budget.
pub fn redress(w: &Word) -> Fraction {
    Redresser::default().redress(w).expect("redressing exceeded its step budget")
}

/// `u\v`, the numerator of `u⁻¹·v`.
pub fn complement(u: &PosWord, v: &PosWord) -> PosWord {
    Redresser::default().complement(u, v).expect("redressing exceeded its step budget")
}

/// `(u\v, v\u)` with the default budget.
pub fn complements(u: &PosWord, v: &PosWord) -> (PosWord, PosWord) {
    Redresser::default().complements(u, v).expect("redressing exceeded its step budget")
}

/// Decides equivalence of positive words in the monoid.
pub fn pos_equiv(u: &PosWord, v: &PosWord) -> bool {
    Redresser::default().pos_equiv(u, v).expect("redressing exceeded its step budget")
}

/// Decides equality in the group presented by the same relations.
pub fn group_equiv(w: &Word, w2: &Word) -> bool {
    Redresser::default().group_equiv(w, w2).expect("redressing exceeded its step budget")
}

/// `size(right) - size(left)` for the trace of `u`; grows with every letter.
pub fn nu(u: &PosWord) -> usize {
    let tr = trace_positive(u);
    tr.right.size() - tr.left.size()
}

/// Whether `((x\y)\(x\z))\((y\x)\(y\z))` and its mirror image with `x`
/// and `y` exchanged are both empty.
pub fn check_cube(x: &Address, y: &Address, z: &Address) -> bool {
    let (x, y, z) = (PosWord::letter(x.clone()), PosWord::letter(y.clone()), PosWord::letter(z.clone()));
    let left = complement(&complement(&x, &y), &complement(&x, &z));
    let right = complement(&complement(&y, &x), &complement(&y, &z));
    complement(&left, &right).is_empty() && complement(&right, &left).is_empty()
}

/// The five families of defining relations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RelationKind {
    /// `γ0α·γ1β = γ1β·γ0α`
    Orthogonal,
    /// `γ0α·γ = γ·γ00α`
    Left,
    /// `γ10α·γ = γ·γ01α·γ10α`
    RightLeft,
    /// `γ11α·γ = γ·γ11α`
    RightRight,
    /// `γ1·γ·γ0 = γ·γ1·γ`
    Right,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CdRelation {
    pub kind: RelationKind,
    pub lhs: PosWord,
    pub rhs: PosWord,
}

/// Every relation with parameter addresses of length at most `max_len`.
pub fn cd_relations(max_len: usize) -> Vec<CdRelation> {
    let addrs = Address::all_up_to(max_len);
    let w = |v: Vec<Address>| PosWord::from_addresses(v);
    let mut out = Vec::new();
    for g in &addrs {
        for a in &addrs {
            for b in &addrs {
                let p = g.with_suffix(&[0]).join(a);
                let q = g.with_suffix(&[1]).join(b);
                out.push(CdRelation {
                    kind: RelationKind::Orthogonal,
                    lhs: w(vec![p.clone(), q.clone()]),
                    rhs: w(vec![q, p]),
                });
            }
            out.push(CdRelation {
                kind: RelationKind::Left,
                lhs: w(vec![g.with_suffix(&[0]).join(a), g.clone()]),
                rhs: w(vec![g.clone(), g.with_suffix(&[0, 0]).join(a)]),
            });
            out.push(CdRelation {
                kind: RelationKind::RightLeft,
                lhs: w(vec![g.with_suffix(&[1, 0]).join(a), g.clone()]),
                rhs: w(vec![g.clone(), g.with_suffix(&[0, 1]).join(a), g.with_suffix(&[1, 0]).join(a)]),
            });
            out.push(CdRelation {
                kind: RelationKind::RightRight,
                lhs: w(vec![g.with_suffix(&[1, 1]).join(a), g.clone()]),
                rhs: w(vec![g.clone(), g.with_suffix(&[1, 1]).join(a)]),
            });
        }
        out.push(CdRelation {
            kind: RelationKind::Right,
            lhs: w(vec![g.child(1), g.clone(), g.child(0)]),
            rhs: w(vec![g.clone(), g.child(1), g.clone()]),
        });
    }
    out
}
