//! Terms over a single binary operator, addresses of their nodes, and
//! first-order unification.
//!
//! A term is a finite binary tree whose leaves carry variables `x1, x2, ...`.
//! Nodes are addressed by bit strings: `0` goes to the left child, `1` to the
//! right child, and the empty address (written `e`) is the root.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("address {0} is not a node of the term")]
    UndefinedAddress(Address),
    #[error("right comb needs p >= 1, got {0}")]
    CombOrder(usize),
    #[error("variable indices start at 1")]
    ZeroVariable,
}

/// A variable `x_i`, `i >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(u32);

impl Var {
    pub const X1: Var = Var(1);

    pub fn new(index: u32) -> Result<Var, TermError> {
        if index == 0 {
            Err(TermError::ZeroVariable)
        } else {
            Ok(Var(index))
        }
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A node position: a finite sequence of bits, each `0` or `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Address(Vec<u8>);

#[allow(clippy::len_without_is_empty)]
impl Address {
    /// The empty address, naming the root.
    pub fn root() -> Address {
        Address(Vec::new())
    }

    /// Builds an address from bits; any nonzero value counts as `1`.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Address {
        Address(bits.into_iter().map(|b| (b != 0) as u8).collect())
    }

    /// The address `1^p`.
    pub fn ones(p: usize) -> Address {
        Address(vec![1; p])
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: u8) -> Address {
        let mut bits = self.0.clone();
        bits.push((bit != 0) as u8);
        Address(bits)
    }

    /// Concatenation `self · other` of bit strings.
    pub fn join(&self, other: &Address) -> Address {
        let mut bits = Vec::with_capacity(self.0.len() + other.0.len());
        bits.extend_from_slice(&self.0);
        bits.extend_from_slice(&other.0);
        Address(bits)
    }

    /// Appends raw bits.
    pub fn with_suffix(&self, suffix: &[u8]) -> Address {
        let mut bits = Vec::with_capacity(self.0.len() + suffix.len());
        bits.extend_from_slice(&self.0);
        bits.extend(suffix.iter().map(|&b| (b != 0) as u8));
        Address(bits)
    }

    /// Returns the remainder `γ` when `self = prefix · γ`.
    pub fn strip_prefix(&self, prefix: &Address) -> Option<&[u8]> {
        self.0.strip_prefix(prefix.0.as_slice())
    }

    pub fn is_prefix_of(&self, other: &Address) -> bool {
        other.0.starts_with(&self.0)
    }

    /// `Some(p)` when the address is `0^p`, i.e. on the left spine.
    pub fn zeros_count(&self) -> Option<usize> {
        self.0.iter().all(|&b| b == 0).then_some(self.0.len())
    }

    /// All addresses of length at most `max_len`, in lexicographic order.
    pub fn all_up_to(max_len: usize) -> Vec<Address> {
        let mut out = vec![Address::root()];
        let mut frontier = vec![Address::root()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for a in &frontier {
                next.push(a.child(0));
                next.push(a.child(1));
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for b in &self.0 {
            f.write_str(if *b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Address {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Address, TermError> {
        if s == "e" {
            return Ok(Address::root());
        }
        if s.is_empty() {
            return Err(TermError::Syntax { pos: 0, msg: "empty address".into() });
        }
        s.bytes()
            .enumerate()
            .map(|(pos, c)| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(TermError::Syntax { pos, msg: format!("unexpected {:?} in address", c as char) }),
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(Address)
    }
}

/// A term: a variable or the product of two terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Node(Arc<Node>),
}

/// An inner node; caches the leaf count.
#[derive(PartialEq, Eq, Hash)]
pub struct Node {
    size: usize,
    left: Term,
    right: Term,
}

impl Node {
    pub fn left(&self) -> &Term {
        &self.left
    }

    pub fn right(&self) -> &Term {
        &self.right
    }
}

impl Term {
    pub fn var(v: Var) -> Term {
        Term::Var(v)
    }

    /// The variable term `x_i`.
    ///
    /// Panics if `i == 0`.
    pub fn x(i: u32) -> Term {
        Term::Var(Var::new(i).expect("variable index must be positive"))
    }

    /// The product `left · right`.
    pub fn node(left: Term, right: Term) -> Term {
        let size = left.size() + right.size();
        Term::Node(Arc::new(Node { size, left, right }))
    }

    pub fn as_node(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::Var(_) => None,
            Term::Node(n) => Some((&n.left, &n.right)),
        }
    }

    pub fn as_var(&self) -> Option<Var> {
        match self {
            Term::Var(v) => Some(*v),
            Term::Node(_) => None,
        }
    }

    pub fn left(&self) -> Option<&Term> {
        self.as_node().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&Term> {
        self.as_node().map(|(_, r)| r)
    }

    /// Number of variable occurrences.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Node(n) => n.size,
        }
    }

    /// Length of the rightmost branch.
    pub fn right_height(&self) -> usize {
        let mut h = 0;
        let mut t = self;
        while let Some((_, r)) = t.as_node() {
            h += 1;
            t = r;
        }
        h
    }

    /// The subterm at `addr`, or `None` when the address leaves the tree.
    pub fn subterm(&self, addr: &Address) -> Option<&Term> {
        let mut t = self;
        for &b in addr.bits() {
            let (l, r) = t.as_node()?;
            t = if b == 0 { l } else { r };
        }
        Some(t)
    }

    /// Replaces the subterm at `addr` with `s`.
    pub fn replace(&self, addr: &Address, s: Term) -> Result<Term, TermError> {
        self.replace_bits(addr.bits(), s)
            .ok_or_else(|| TermError::UndefinedAddress(addr.clone()))
    }

    fn replace_bits(&self, bits: &[u8], s: Term) -> Option<Term> {
        match bits.split_first() {
            None => Some(s),
            Some((&b, rest)) => {
                let (l, r) = self.as_node()?;
                if b == 0 {
                    Some(Term::node(l.replace_bits(rest, s)?, r.clone()))
                } else {
                    Some(Term::node(l.clone(), r.replace_bits(rest, s)?))
                }
            }
        }
    }

    /// Rebuilds the term with the subterm at `bits` mapped through `f`;
    /// `None` if the address is missing or `f` declines.
    pub(crate) fn rewrite_at<F>(&self, bits: &[u8], f: F) -> Option<Term>
    where
        F: FnOnce(&Term) -> Option<Term>,
    {
        match bits.split_first() {
            None => f(self),
            Some((&b, rest)) => {
                let (l, r) = self.as_node()?;
                if b == 0 {
                    Some(Term::node(l.rewrite_at(rest, f)?, r.clone()))
                } else {
                    Some(Term::node(l.clone(), r.rewrite_at(rest, f)?))
                }
            }
        }
    }

    /// `left^i(t)`; `None` when the left spine is shorter than `i`.
    pub fn left_iter(&self, i: usize) -> Option<&Term> {
        let mut t = self;
        for _ in 0..i {
            t = t.left()?;
        }
        Some(t)
    }

    pub fn skeleton(&self) -> Skeleton {
        match self.as_node() {
            None => Skeleton::Leaf,
            Some((l, r)) => Skeleton::Node(Box::new(l.skeleton()), Box::new(r.skeleton())),
        }
    }

    /// Leaf variables from left to right, with repetitions.
    pub fn leaves(&self) -> Vec<Var> {
        let mut out = Vec::with_capacity(self.size());
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Term::Var(v) => out.push(*v),
                Term::Node(n) => {
                    stack.push(&n.right);
                    stack.push(&n.left);
                }
            }
        }
        out
    }

    /// Distinct variables in order of first occurrence.
    pub fn variables(&self) -> Vec<Var> {
        let mut seen = HashSet::new();
        self.leaves().into_iter().filter(|v| seen.insert(*v)).collect()
    }

    pub fn max_var(&self) -> u32 {
        self.leaves().iter().map(|v| v.0).max().unwrap_or(1)
    }

    pub fn leftmost_var(&self) -> Var {
        let mut t = self;
        loop {
            match t {
                Term::Var(v) => return *v,
                Term::Node(n) => t = &n.left,
            }
        }
    }

    pub fn rightmost_var(&self) -> Var {
        let mut t = self;
        loop {
            match t {
                Term::Var(v) => return *v,
                Term::Node(n) => t = &n.right,
            }
        }
    }

    /// No variable occurs twice.
    pub fn is_injective(&self) -> bool {
        let leaves = self.leaves();
        let distinct: HashSet<_> = leaves.iter().collect();
        distinct.len() == leaves.len()
    }

    /// First occurrences, read left to right, are `x1, x2, ...` in order.
    pub fn is_canonical(&self) -> bool {
        self.variables().iter().enumerate().all(|(i, v)| v.0 as usize == i + 1)
    }

    /// Every leaf is `x1`.
    pub fn is_one_variable(&self) -> bool {
        self.leaves().iter().all(|v| *v == Var::X1)
    }

    pub fn map_vars<F: FnMut(Var) -> Var>(&self, f: &mut F) -> Term {
        match self {
            Term::Var(v) => Term::Var(f(*v)),
            Term::Node(n) => {
                let l = n.left.map_vars(f);
                let r = n.right.map_vars(f);
                Term::node(l, r)
            }
        }
    }

    /// Replaces every variable with `x1`.
    pub fn project(&self) -> Term {
        self.map_vars(&mut |_| Var::X1)
    }

    /// Renames variables to `x1, x2, ...` by first occurrence.
    pub fn canonicalize(&self) -> Term {
        let renaming = canonical_renaming(std::iter::once(self));
        self.map_vars(&mut |v| renaming[&v])
    }

    pub fn substitute(&self, sub: &Substitution) -> Term {
        match self {
            Term::Var(v) => sub.0.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::Node(n) => Term::node(n.left.substitute(sub), n.right.substitute(sub)),
        }
    }

    /// Every address of an inner or leaf node, in lexicographic order.
    pub fn addresses(&self) -> Vec<Address> {
        let mut out = Vec::new();
        fn walk(t: &Term, prefix: &mut Vec<u8>, out: &mut Vec<Address>) {
            out.push(Address(prefix.clone()));
            if let Some((l, r)) = t.as_node() {
                prefix.push(0);
                walk(l, prefix, out);
                prefix.pop();
                prefix.push(1);
                walk(r, prefix, out);
                prefix.pop();
            }
        }
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

/// Joint renaming of the variables of several terms by first occurrence.
pub(crate) fn canonical_renaming<'a, I>(terms: I) -> BTreeMap<Var, Var>
where
    I: IntoIterator<Item = &'a Term>,
{
    let mut map = BTreeMap::new();
    for t in terms {
        for v in t.leaves() {
            let next = Var(map.len() as u32 + 1);
            map.entry(v).or_insert(next);
        }
    }
    map
}

/// The one-variable right comb `x^[p]`: `x^[1] = x`, `x^[p+1] = x · x^[p]`.
pub fn right_comb(p: usize) -> Result<Term, TermError> {
    right_comb_of(Var::X1, p)
}

/// Right comb `z · (z · (... · z))` with `p` leaves labelled `z`.
pub fn right_comb_of(z: Var, p: usize) -> Result<Term, TermError> {
    if p < 1 {
        return Err(TermError::CombOrder(p));
    }
    let leaf = Term::Var(z);
    let mut t = leaf.clone();
    for _ in 1..p {
        t = Term::node(leaf.clone(), t);
    }
    Ok(t)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Node(n) => write!(f, "({} {})", n.left, n.right),
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Term {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Term, TermError> {
        parse_term(s)
    }
}

/// Parses `term := var | '(' term term ')'`, `var := 'x' [1-9][0-9]*`.
pub fn parse_term(text: &str) -> Result<Term, TermError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let t = p.term()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> TermError {
        TermError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term, TermError> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let l = self.term()?;
                let r = self.term()?;
                self.skip_ws();
                if self.src.get(self.pos) != Some(&b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(Term::node(l, r))
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = &self.src[start..self.pos];
                if digits.is_empty() || digits[0] == b'0' {
                    self.pos = start;
                    return Err(self.error("variable index must match [1-9][0-9]*"));
                }
                let index: u32 = std::str::from_utf8(digits)
                    .ok()
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| {
                        TermError::Syntax { pos: start, msg: "variable index too large".into() }
                    })?;
                Ok(Term::Var(Var(index)))
            }
            Some(_) => Err(self.error("expected '(' or variable")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Unlabelled tree shape of a term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Skeleton {
    Leaf,
    Node(Box<Skeleton>, Box<Skeleton>),
}

impl Skeleton {
    pub fn size(&self) -> usize {
        match self {
            Skeleton::Leaf => 1,
            Skeleton::Node(l, r) => l.size() + r.size(),
        }
    }

    /// All skeletons with `n` leaves (Catalan many).
    pub fn all_of_size(n: usize) -> Vec<Skeleton> {
        let mut table: Vec<Vec<Skeleton>> = vec![Vec::new(), vec![Skeleton::Leaf]];
        for k in 2..=n {
            let mut row = Vec::new();
            for i in 1..k {
                for l in &table[i] {
                    for r in &table[k - i] {
                        row.push(Skeleton::Node(Box::new(l.clone()), Box::new(r.clone())));
                    }
                }
            }
            table.push(row);
        }
        if n == 0 {
            Vec::new()
        } else {
            table.swap_remove(n)
        }
    }

    /// Labels the leaves left to right; `labels` must hold `size()` entries.
    pub fn label(&self, labels: &[Var]) -> Term {
        fn go(s: &Skeleton, labels: &[Var], next: &mut usize) -> Term {
            match s {
                Skeleton::Leaf => {
                    let v = labels[*next];
                    *next += 1;
                    Term::Var(v)
                }
                Skeleton::Node(l, r) => {
                    let l = go(l, labels, next);
                    let r = go(r, labels, next);
                    Term::node(l, r)
                }
            }
        }
        go(self, labels, &mut 0)
    }
}

/// All terms with exactly `size` leaves over `x1 .. x_nvars`.
pub fn enumerate_terms(size: usize, nvars: u32) -> Vec<Term> {
    let mut out = Vec::new();
    for s in Skeleton::all_of_size(size) {
        let mut labels = vec![Var::X1; size];
        loop {
            out.push(s.label(&labels));
            // odometer over labellings
            let mut i = 0;
            loop {
                if i == size {
                    break;
                }
                if labels[i].0 < nvars {
                    labels[i].0 += 1;
                    break;
                }
                labels[i] = Var::X1;
                i += 1;
            }
            if i == size {
                break;
            }
        }
    }
    out
}

/// All terms with at most `max_size` leaves over `x1 .. x_nvars`.
pub fn enumerate_terms_up_to(max_size: usize, nvars: u32) -> Vec<Term> {
    (1..=max_size).flat_map(|n| enumerate_terms(n, nvars)).collect()
}

/// A finite map from variables to terms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Substitution(BTreeMap<Var, Term>);

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn insert(&mut self, v: Var, t: Term) {
        self.0.insert(v, t);
    }

    pub fn get(&self, v: Var) -> Option<&Term> {
        self.0.get(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &Term)> {
        self.0.iter().map(|(v, t)| (*v, t))
    }

    /// No bound variable occurs in any image.
    pub fn is_idempotent(&self) -> bool {
        self.0
            .values()
            .all(|t| t.leaves().iter().all(|v| !self.0.contains_key(v)))
    }
}

impl FromIterator<(Var, Term)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (Var, Term)>>(iter: I) -> Self {
        Substitution(iter.into_iter().collect())
    }
}

/// Most general unifier of `a` and `b`, treating equal indices in both terms
/// as the same variable. `None` on a symbol clash or occurs-check failure.
pub fn unify(a: &Term, b: &Term) -> Option<Substitution> {
    let mut bindings: BTreeMap<Var, Term> = BTreeMap::new();
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((s, t)) = stack.pop() {
        let s = walk(&s, &bindings);
        let t = walk(&t, &bindings);
        match (&s, &t) {
            (Term::Var(x), Term::Var(y)) if x == y => {}
            (Term::Var(x), other) | (other, Term::Var(x)) => {
                if occurs(*x, other, &bindings) {
                    return None;
                }
                bindings.insert(*x, other.clone());
            }
            (Term::Node(m), Term::Node(n)) => {
                stack.push((m.right.clone(), n.right.clone()));
                stack.push((m.left.clone(), n.left.clone()));
            }
        }
    }
    let resolved = bindings
        .keys()
        .map(|v| (*v, resolve(&Term::Var(*v), &bindings)))
        .collect();
    Some(Substitution(resolved))
}

fn walk(t: &Term, bindings: &BTreeMap<Var, Term>) -> Term {
    let mut t = t.clone();
    while let Term::Var(v) = t {
        match bindings.get(&v) {
            Some(next) => t = next.clone(),
            None => break,
        }
    }
    t
}

fn occurs(x: Var, t: &Term, bindings: &BTreeMap<Var, Term>) -> bool {
    match walk(t, bindings) {
        Term::Var(v) => v == x,
        Term::Node(n) => occurs(x, &n.left, bindings) || occurs(x, &n.right, bindings),
    }
}

fn resolve(t: &Term, bindings: &BTreeMap<Var, Term>) -> Term {
    match walk(t, bindings) {
        v @ Term::Var(_) => v,
        Term::Node(n) => Term::node(resolve(&n.left, bindings), resolve(&n.right, bindings)),
    }
}
