//! The words `α^(p)`, the fundamental words `Δ_t`, the expansion operator
//! `∂t = (t)Δ_t`, and the divisibility witnesses built on them.

use thiserror::Error;

use crate::action::{apply_positive, apply_positive_bounded, expand_at, ApplyError};
use crate::redress::{complement, complements, pos_equiv};
use crate::terms::{Address, Term};
use crate::word::PosWord;

pub const DEFAULT_MAX_SIZE: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarsideError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error("term grew to {size} leaves, over the ceiling {limit}")]
    TooLarge { size: usize, limit: usize },
}

/// `α^(p) = α1^{p-1} · … · α1 · α`, empty for `p <= 0`.
pub fn alpha_power(alpha: &Address, p: i64) -> PosWord {
    (0..p.max(0) as usize)
        .rev()
        .map(|i| alpha.join(&Address::ones(i)))
        .collect()
}

/// `Δ_t`, unrolled literally: with `h` the right height of `t` and
/// `(t)φ^(h-1) = s_0 · (s_1 · (… · s_{h-1} · z))`, the word
/// `φ^(h-1) · 0Δ_{s_0} · 10Δ_{s_1} · … · 1^{h-1}0Δ_{s_{h-1}}`.
pub fn delta(t: &Term) -> PosWord {
    let h = t.right_height();
    if h == 0 {
        return PosWord::empty();
    }
    let head = alpha_power(&Address::root(), h as i64 - 1);
    let s = apply_positive(t, &head).expect("φ^(h-1) applies to terms of right height h");
    let mut out = head;
    let mut spine = &s;
    for i in 0..h {
        let (si, rest) = spine.as_node().expect("right height is preserved");
        out.extend(&delta(si).shift(&Address::ones(i).child(0)));
        spine = rest;
    }
    out
}

/// `∂t = (t)Δ_t`; always defined.
pub fn partial(t: &Term) -> Term {
    apply_positive(t, &delta(t)).expect("every term is in the domain of its Δ")
}

/// `∂^n t`, failing once an intermediate term exceeds `max_size` leaves.
pub fn partial_iter(t: &Term, n: usize, max_size: usize) -> Result<Term, GarsideError> {
    let mut cur = t.clone();
    for _ in 0..n {
        cur = apply_positive_bounded(&cur, &delta(&cur), max_size).map_err(|e| match e {
            ApplyError::TooLarge { size, limit, .. } => GarsideError::TooLarge { size, limit },
            ApplyError::Undefined { step } => {
                GarsideError::Postcondition(format!("Δ undefined on {cur} at step {step}"))
            }
        })?;
    }
    Ok(cur)
}

/// `v` with `α·v ≡⁺ Δ_t`, for `α` applicable to `t`.
pub fn delta_left_factor(t: &Term, alpha: &Address) -> Result<PosWord, GarsideError> {
    if expand_at(t, alpha).is_none() {
        return Err(GarsideError::Precondition(format!("{alpha} does not apply to {t}")));
    }
    let a = PosWord::letter(alpha.clone());
    let d = delta(t);
    let v = complement(&a, &d);
    check(pos_equiv(&a.then(&v), &d), || format!("{alpha}·{v} is not Δ of {t}"))?;
    Ok(v)
}

/// `u'` with `u·Δ_{t'} ≡⁺ Δ_t·u'`, where `t' = (t)u`.
pub fn delta_transport(t: &Term, u: &PosWord) -> Result<PosWord, GarsideError> {
    let t2 = apply_positive(t, u)
        .map_err(|e| GarsideError::Precondition(format!("{u} on {t}: {e}")))?;
    let d = delta(t);
    let lhs = u.then(&delta(&t2));
    let u2 = complement(&d, &lhs);
    check(pos_equiv(&lhs, &d.then(&u2)), || format!("Δ of {t} does not divide {lhs}"))?;
    Ok(u2)
}

/// `Δ_t · Δ_∂t · … · Δ_{∂^{n-1}t}`.
pub fn delta_product(t: &Term, n: usize) -> PosWord {
    let mut out = PosWord::empty();
    let mut cur = t.clone();
    for i in 0..n {
        let d = delta(&cur);
        if i + 1 < n {
            cur = apply_positive(&cur, &d).expect("every term is in the domain of its Δ");
        }
        out.extend(&d);
    }
    out
}

/// `v` with `u·v ≡⁺ Δ_t · Δ_∂t · … · Δ_{∂^{n-1}t}`, where `n = |u|`.
pub fn delta_bound(t: &Term, u: &PosWord) -> Result<PosWord, GarsideError> {
    apply_positive(t, u).map_err(|e| GarsideError::Precondition(format!("{u} on {t}: {e}")))?;
    let prod = delta_product(t, u.len());
    let v = complement(u, &prod);
    check(pos_equiv(&u.then(&v), &prod), || format!("{u} does not divide {prod}"))?;
    Ok(v)
}

/// Right lcm `u·(u\v)`.
pub fn lcm(u: &PosWord, v: &PosWord) -> Result<PosWord, GarsideError> {
    let (a, b) = complements(u, v);
    let m = u.then(&a);
    check(pos_equiv(&m, &v.then(&b)), || format!("{u}·{a} and {v}·{b} differ"))?;
    Ok(m)
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), GarsideError> {
    if ok {
        Ok(())
    } else {
        Err(GarsideError::Postcondition(msg()))
    }
}
