//! Finite binary operations given by their multiplication tables.

use std::collections::HashSet;
use std::fmt;

use crate::terms::Term;

/// A binary operation on `{0, .., n-1}`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Magma {
    n: usize,
    table: Vec<u8>,
}

impl Magma {
    /// `None` unless `table` has `n * n` entries, each below `n`.
    pub fn new(n: usize, table: Vec<u8>) -> Option<Magma> {
        (n > 0 && n <= u8::MAX as usize && table.len() == n * n && table.iter().all(|&x| (x as usize) < n))
            .then_some(Magma { n, table })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn op(&self, a: u8, b: u8) -> u8 {
        self.table[a as usize * self.n + b as usize]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.table.chunks(self.n)
    }

    /// First triple `(a, b, c)` with `a(bc) != (ab)(bc)`, if any.
    pub fn cd_violation(&self) -> Option<(u8, u8, u8)> {
        let n = self.n as u8;
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    let bc = self.op(b, c);
                    if self.op(a, bc) != self.op(ab, bc) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_cd(&self) -> bool {
        self.cd_violation().is_none()
    }

    /// Elements reachable from `g` under the operation.
    pub fn generated_by(&self, g: u8) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        inside[g as usize] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..self.n as u8 {
                for b in 0..self.n as u8 {
                    if inside[a as usize] && inside[b as usize] {
                        let c = self.op(a, b) as usize;
                        if !inside[c] {
                            inside[c] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        inside
    }

    pub fn generates(&self, g: u8) -> bool {
        self.generated_by(g).iter().all(|&x| x)
    }

    /// Evaluates `t` with `x_i` sent to `assignment[i - 1]`.
    pub fn eval(&self, t: &Term, assignment: &[u8]) -> u8 {
        match t.as_node() {
            None => assignment[t.as_var().unwrap().index() as usize - 1],
            Some((l, r)) => self.op(self.eval(l, assignment), self.eval(r, assignment)),
        }
    }

    /// Every operation on `{0, .., n-1}` satisfying `a(bc) = (ab)(bc)`.
    pub fn enumerate_cd(n: usize) -> Vec<Magma> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut cells: Vec<Option<u8>> = vec![None; n * n];
        fill(n, 0, &mut cells, &mut out);
        out
    }

    /// One representative per isomorphism class of [`Magma::enumerate_cd`].
    pub fn enumerate_cd_up_to_iso(n: usize) -> Vec<Magma> {
        let perms = permutations(n);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for m in Magma::enumerate_cd(n) {
            let key = perms.iter().map(|p| m.relabel(p).table).min().unwrap();
            if seen.insert(key) {
                out.push(m);
            }
        }
        out
    }

    /// The isomorphic copy with element `a` renamed `perm[a]`.
    pub fn relabel(&self, perm: &[u8]) -> Magma {
        let mut table = vec![0u8; self.n * self.n];
        for a in 0..self.n as u8 {
            for b in 0..self.n as u8 {
                table[perm[a as usize] as usize * self.n + perm[b as usize] as usize] = perm[self.op(a, b) as usize];
            }
        }
        Magma { n: self.n, table }
    }
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, (n - 1) as u8);
            out.push(q);
        }
    }
    out
}

fn fill(n: usize, idx: usize, cells: &mut Vec<Option<u8>>, out: &mut Vec<Magma>) {
    if idx == n * n {
        out.push(Magma { n, table: cells.iter().map(|c| c.unwrap()).collect() });
        return;
    }
    for v in 0..n as u8 {
        cells[idx] = Some(v);
        if consistent(n, cells) {
            fill(n, idx + 1, cells, out);
        }
    }
    cells[idx] = None;
}

/// No fully determined triple violates the identity.
fn consistent(n: usize, cells: &[Option<u8>]) -> bool {
    let get = |a: u8, b: u8| cells[a as usize * n + b as usize];
    for b in 0..n as u8 {
        for c in 0..n as u8 {
            let Some(bc) = get(b, c) else { continue };
            for a in 0..n as u8 {
                let (Some(lhs), Some(ab)) = (get(a, bc), get(a, b)) else { continue };
                if let Some(rhs) = get(ab, bc) {
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

impl fmt::Debug for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u8]> = self.rows().collect();
        write!(f, "Magma{rows:?}")
    }
}
