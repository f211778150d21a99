//! The partial operators on terms: applying the identity at an address in
//! either direction, composites along words, and their canonical traces.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::terms::{canonical_renaming, unify, Address, Term, Var};
use crate::word::{Letter, PosWord, Sign, Word};

pub mod oracle;

pub use oracle::{oracle_equiv, Oracle, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApplyError {
    /// The `step`-th letter (1-based) does not apply.
    #[error("undefined at step {step}")]
    Undefined { step: usize },
    #[error("term size {size} exceeds the ceiling {limit} at step {step}")]
    TooLarge { step: usize, size: usize, limit: usize },
}

/// Applies one signed letter. `+α` rewrites an `α`-subterm `s0·(s1·s2)` to
/// `(s0·s1)·(s1·s2)`; `-α` rewrites `(s0·s1)·(s1·s2)` back, requiring the
/// two middle factors to be literally equal.
pub fn apply_letter(t: &Term, letter: &Letter) -> Option<Term> {
    match letter.sign {
        Sign::Pos => expand_at(t, &letter.address),
        Sign::Neg => contract_at(t, &letter.address),
    }
}

pub fn expand_at(t: &Term, addr: &Address) -> Option<Term> {
    t.rewrite_at(addr.bits(), |s| {
        let (s0, rest) = s.as_node()?;
        let (s1, s2) = rest.as_node()?;
        Some(Term::node(
            Term::node(s0.clone(), s1.clone()),
            Term::node(s1.clone(), s2.clone()),
        ))
    })
}

pub fn contract_at(t: &Term, addr: &Address) -> Option<Term> {
    t.rewrite_at(addr.bits(), |s| {
        let (a, b) = s.as_node()?;
        let (s0, s1) = a.as_node()?;
        let (s1b, s2) = b.as_node()?;
        (s1 == s1b).then(|| Term::node(s0.clone(), Term::node(s1.clone(), s2.clone())))
    })
}

/// `(t)w`: letters applied left to right.
pub fn apply_word(t: &Term, w: &Word) -> Result<Term, ApplyError> {
    apply_word_bounded(t, w, usize::MAX)
}

/// Like [`apply_word`], failing once an intermediate term exceeds `limit` leaves.
pub fn apply_word_bounded(t: &Term, w: &Word, limit: usize) -> Result<Term, ApplyError> {
    let mut cur = t.clone();
    for (i, l) in w.letters().iter().enumerate() {
        cur = apply_letter(&cur, l).ok_or(ApplyError::Undefined { step: i + 1 })?;
        if cur.size() > limit {
            return Err(ApplyError::TooLarge { step: i + 1, size: cur.size(), limit });
        }
    }
    Ok(cur)
}

pub fn apply_positive(t: &Term, u: &PosWord) -> Result<Term, ApplyError> {
    apply_positive_bounded(t, u, usize::MAX)
}

pub fn apply_positive_bounded(t: &Term, u: &PosWord, limit: usize) -> Result<Term, ApplyError> {
    let mut cur = t.clone();
    for (i, a) in u.addresses().iter().enumerate() {
        cur = expand_at(&cur, a).ok_or(ApplyError::Undefined { step: i + 1 })?;
        if cur.size() > limit {
            return Err(ApplyError::TooLarge { step: i + 1, size: cur.size(), limit });
        }
    }
    Ok(cur)
}

/// One-step expansions `(α, (t)α)`, addresses in lexicographic order.
pub fn expansions(t: &Term) -> Vec<(Address, Term)> {
    t.addresses()
        .into_iter()
        .filter_map(|a| expand_at(t, &a).map(|s| (a, s)))
        .collect()
}

/// Distinct terms reachable by at most `steps` expansions, grouped by the
/// first level at which they appear. Level 0 is `[t]`.
pub fn expansion_levels(t: &Term, steps: usize) -> Vec<Vec<Term>> {
    let mut seen: HashSet<Term> = HashSet::new();
    seen.insert(t.clone());
    let mut levels = vec![vec![t.clone()]];
    for _ in 0..steps {
        let mut next = Vec::new();
        for s in levels.last().unwrap() {
            for (_, e) in expansions(s) {
                if seen.insert(e.clone()) {
                    next.push(e);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

/// The canonical pair `(t^L_w, t^R_w)`: the operator of `w` maps `t` to
/// `t'` exactly when `(t, t')` is a substitution instance of the pair.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Trace {
    pub left: Term,
    pub right: Term,
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.left, self.right)
    }
}

/// Pattern pair of a single letter, with fresh variables from `*next` on.
fn letter_pattern(letter: &Letter, next: &mut u32) -> (Term, Term) {
    let mut fresh = || {
        let v = Term::x(*next);
        *next += 1;
        v
    };
    let (y0, y1, y2) = (fresh(), fresh(), fresh());
    let narrow = Term::node(y0.clone(), Term::node(y1.clone(), y2.clone()));
    let wide = Term::node(Term::node(y0, y1.clone()), Term::node(y1, y2));
    let (mut lhs, mut rhs) = match letter.sign {
        Sign::Pos => (narrow, wide),
        Sign::Neg => (wide, narrow),
    };
    for &b in letter.address.bits().iter().rev() {
        let sibling = fresh();
        if b == 0 {
            lhs = Term::node(lhs, sibling.clone());
            rhs = Term::node(rhs, sibling);
        } else {
            lhs = Term::node(sibling.clone(), lhs);
            rhs = Term::node(sibling, rhs);
        }
    }
    (lhs, rhs)
}

/// Computes the trace of `w`, or `None` when the operator of `w` is empty.
pub fn trace(w: &Word) -> Option<Trace> {
    let mut left = Term::var(Var::X1);
    let mut right = left.clone();
    let mut next = 2u32;
    for letter in w.letters() {
        let (lhs, rhs) = letter_pattern(letter, &mut next);
        let sigma = unify(&right, &lhs)?;
        left = left.substitute(&sigma);
        right = rhs.substitute(&sigma);
    }
    let renaming = canonical_renaming([&left, &right]);
    let mut rename = |v: Var| renaming[&v];
    Some(Trace { left: left.map_vars(&mut rename), right: right.map_vars(&mut rename) })
}

pub fn trace_positive(u: &PosWord) -> Trace {
    trace(&u.to_word()).expect("positive words have nonempty operators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::enumerate_terms_up_to;

    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn l(s: &str) -> Letter {
        w(s).letters()[0].clone()
    }

    #[test]
    fn single_letters() {
        assert_eq!(apply_letter(&t("(x1 (x2 x3))"), &l("e")), Some(t("((x1 x2) (x2 x3))")));
        assert_eq!(apply_letter(&t("((x1 x2) (x2 x3))"), &l("-e")), Some(t("(x1 (x2 x3))")));
        assert_eq!(apply_letter(&t("((x1 x2) (x4 x3))"), &l("-e")), None);
        assert_eq!(apply_letter(&t("x1"), &l("e")), None);
        assert_eq!(apply_letter(&t("(x1 x2)"), &l("e")), None);
    }

    #[test]
    fn words_on_terms() {
        let start = t("(x1 (x2 (x3 x4)))");
        let target = t("(((x1 x2) (x2 x3)) ((x2 x3) (x3 x4)))");
        assert_eq!(apply_word(&start, &w("1.e.0")), Ok(target.clone()));
        assert_eq!(apply_word(&start, &w("e.1.e")), Ok(target));
        assert_eq!(apply_word(&start, &Word::empty()), Ok(start.clone()));
        assert_eq!(apply_word(&start, &w("e.00")), Err(ApplyError::Undefined { step: 2 }));
    }

    #[test]
    fn bounded_application_stops_on_growth() {
        let start = t("(x1 (x2 (x3 x4)))");
        assert_eq!(
            apply_word_bounded(&start, &w("1.e.0"), 6),
            Err(ApplyError::TooLarge { step: 2, size: 7, limit: 6 })
        );
    }

    #[test]
    fn expansion_lists() {
        assert!(expansions(&t("x1")).is_empty());
        assert_eq!(
            expansions(&t("(x1 (x1 x1))")),
            vec![(Address::root(), t("((x1 x1) (x1 x1))"))]
        );
        let e = expansions(&t("(x1 (x2 (x3 x4)))"));
        let addrs: Vec<String> = e.iter().map(|(a, _)| a.to_string()).collect();
        assert_eq!(addrs, ["e", "1"]);
    }

    #[test]
    fn trace_examples() {
        assert_eq!(
            trace(&w("e")),
            Some(Trace { left: t("(x1 (x2 x3))"), right: t("((x1 x2) (x2 x3))") })
        );
        assert_eq!(
            trace(&w("1.e.0")),
            Some(Trace {
                left: t("(x1 (x2 (x3 x4)))"),
                right: t("(((x1 x2) (x2 x3)) ((x2 x3) (x3 x4)))"),
            })
        );
        assert_eq!(
            trace(&w("e.-e")),
            Some(Trace { left: t("(x1 (x2 x3))"), right: t("(x1 (x2 x3))") })
        );
        assert_eq!(trace(&Word::empty()), Some(Trace { left: t("x1"), right: t("x1") }));
    }

    #[test]
    fn inverse_trace_swaps_sides() {
        let tr = trace(&w("-e")).unwrap();
        assert_eq!(tr.left, t("((x1 x2) (x2 x3))"));
        assert_eq!(tr.right, t("(x1 (x2 x3))"));
    }

    // After `e.e` the 0-subterm is `(x1 x2) x2`; contracting it would need
    // `x2 = x2 · y`, which fails the occurs check. No word of length <= 2 over
    // addresses of length <= 1 has an empty operator.
    #[test]
    fn smallest_empty_operator() {
        let found = smallest_empty_words();
        let shown: Vec<String> = found.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["e.e.-0", "e.1.-e", "e.-1.-e", "0.-e.-e"]);
        for word in &found {
            assert_eq!(trace(word), None, "{word}");
        }
    }

    fn smallest_empty_words() -> Vec<Word> {
        let letters: Vec<Letter> = Address::all_up_to(1)
            .into_iter()
            .flat_map(|a| [Letter::pos(a.clone()), Letter::neg(a)])
            .collect();
        let mut frontier = vec![Word::empty()];
        for _ in 0..3 {
            let mut next = Vec::new();
            for base in &frontier {
                for l in &letters {
                    let mut cand = base.clone();
                    cand.push(l.clone());
                    next.push(cand);
                }
            }
            let empty: Vec<Word> = next.iter().filter(|c| trace(c).is_none()).cloned().collect();
            if !empty.is_empty() {
                return empty;
            }
            frontier = next;
        }
        Vec::new()
    }

    #[test]
    fn letter_then_inverse_is_identity_on_domain() {
        for s in enumerate_terms_up_to(6, 2) {
            for a in s.addresses() {
                if let Some(e) = expand_at(&s, &a) {
                    assert_eq!(contract_at(&e, &a), Some(s.clone()));
                    assert!(e.size() > s.size());
                }
            }
        }
    }
}
