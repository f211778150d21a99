//! Terms over the identity `x(yz) = (xy)(yz)`: the partial rewriting
//! operators it induces, the group and monoid presented by their relations,
//! and the decision procedure for equivalence built on them.
//!
//! ```
//! use centraldup::{decide, parse_term};
//!
//! let t = parse_term("(x1 (x2 x3))").unwrap();
//! let u = parse_term("((x1 x2) (x2 x3))").unwrap();
//! assert!(decide(&t, &u));
//! ```

pub mod action;
pub mod blueprint;
pub mod decide;
pub mod freesystem;
pub mod garside;
pub mod magma;
pub mod redress;
pub mod terms;
pub mod word;

pub use action::{apply_word, trace, ApplyError, Trace, Verdict};
pub use blueprint::{chi, chi_star, star};
pub use decide::{check_free, classify, compare, decide, decide_one_var, dil, Classification, MulTable};
pub use redress::{complement, group_equiv, pos_equiv, redress, Fraction};
pub use terms::{parse_term, Address, Term, Var};
pub use word::{Letter, PosWord, Word};
