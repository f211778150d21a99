//! Blueprints: words `χ_t` whose operators build a one-variable term `t`
//! on the left of a long enough right comb.

use thiserror::Error;

use crate::action::apply_word;
use crate::terms::{right_comb, Address, Term};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlueprintError {
    #[error("{0} has more than one variable")]
    NotOneVariable(Term),
}

/// Prefixes `gamma` to every address of `w`.
pub fn shift(gamma: &Address, w: &Word) -> Word {
    w.shift(gamma)
}

/// `u * v = u · 1v · φ · (1v)⁻¹`.
pub fn star(u: &Word, v: &Word) -> Word {
    let one = Address::root().child(1);
    let v1 = v.shift(&one);
    let mut out = u.then(&v1);
    out.push(Letter::pos(Address::root()));
    out.then(&v1.inverse())
}

fn one_variable(t: &Term) -> Result<(), BlueprintError> {
    if t.is_one_variable() {
        Ok(())
    } else {
        Err(BlueprintError::NotOneVariable(t.clone()))
    }
}

/// `χ_x = ε`, `χ_{t0·t1} = χ_{t0} * χ_{t1}`.
pub fn chi(t: &Term) -> Result<Word, BlueprintError> {
    one_variable(t)?;
    Ok(chi_unchecked(t))
}

fn chi_unchecked(t: &Term) -> Word {
    match t.as_node() {
        None => Word::empty(),
        Some((l, r)) => star(&chi_unchecked(l), &chi_unchecked(r)),
    }
}

/// `χ*_x = ε`, `χ*_{t0·t1} = χ_{t0} · 1χ*_{t1}`.
pub fn chi_star(t: &Term) -> Result<Word, BlueprintError> {
    one_variable(t)?;
    let mut out = Word::empty();
    let mut prefix = Address::root();
    let mut cur = t;
    while let Some((l, r)) = cur.as_node() {
        out = out.then(&chi_unchecked(l).shift(&prefix));
        prefix = prefix.child(1);
        cur = r;
    }
    Ok(out)
}

/// Whether `χ_t` maps `x^[p+1]` to `t · x^[p]` with `p = size(t)`.
pub fn blueprint_action_check(t: &Term) -> Result<bool, BlueprintError> {
    let w = chi(t)?;
    let p = t.size();
    let start = right_comb(p + 1).expect("p >= 1");
    let target = Term::node(t.clone(), right_comb(p).expect("p >= 1"));
    Ok(apply_word(&start, &w).is_ok_and(|r| r == target))
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

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    #[test]
    fn shifting() {
        assert_eq!(shift(&a("1"), &w("e")), w("1"));
        assert_eq!(shift(&a("1"), &w("e.-0")), w("1.-10"));
        assert_eq!(shift(&a("0"), &Word::empty()), Word::empty());
    }

    #[test]
    fn blueprints() {
        assert_eq!(chi(&t("x1")), Ok(Word::empty()));
        assert_eq!(chi(&t("(x1 x1)")), Ok(w("e")));
        assert_eq!(chi(&t("(x1 (x1 x1))")), Ok(w("1.e.-1")));
        assert_eq!(chi(&t("(x1 x2)")), Err(BlueprintError::NotOneVariable(t("(x1 x2)"))));
    }

    #[test]
    fn starred_blueprints() {
        assert_eq!(chi_star(&t("x1")), Ok(Word::empty()));
        assert_eq!(chi_star(&t("(x1 x1)")), Ok(Word::empty()));
        assert_eq!(chi_star(&t("((x1 x1) x1)")), Ok(w("e")));
        assert_eq!(chi_star(&t("(x1 ((x1 x1) x1))")), Ok(w("1")));
        assert!(chi_star(&t("(x2 x2)")).is_err());
    }

    #[test]
    fn star_unfolds() {
        assert_eq!(star(&Word::empty(), &Word::empty()), w("e"));
        assert_eq!(star(&Word::empty(), &w("e")), w("1.e.-1"));
        for s in enumerate_terms_up_to(6, 1) {
            if let Some((l, r)) = s.as_node() {
                assert_eq!(chi(&s).unwrap(), star(&chi(l).unwrap(), &chi(r).unwrap()));
            }
        }
    }

    #[test]
    fn blueprint_builds_its_term() {
        assert_eq!(blueprint_action_check(&t("x1")), Ok(true));
        assert_eq!(blueprint_action_check(&t("(x1 x1)")), Ok(true));
        assert_eq!(blueprint_action_check(&t("((x1 (x1 x1)) x1)")), Ok(true));
    }
}
