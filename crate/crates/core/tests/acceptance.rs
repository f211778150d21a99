//! Acceptance criteria. Each test writes one `criterion N: PASS|FAIL` line
//! to stderr (bypassing the test harness capture) before asserting.

use std::cmp::Ordering;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use centraldup::action::{apply_positive, expansion_levels, expansions, oracle_equiv, trace, trace_positive, Verdict};
use centraldup::blueprint::{blueprint_action_check, star};
use centraldup::decide::{check_free, classify, compare, decide, decide_one_var, dil, MulTable, TableError};
use centraldup::freesystem::{coset_eq, coset_mul, coset_of_term, CosetEq};
use centraldup::garside::{alpha_power, delta_bound, delta_left_factor, delta_transport};
use centraldup::magma::Magma;
use centraldup::redress::{cd_relations, check_cube, complement, group_equiv, nu, pos_equiv, RelationKind};
use centraldup::terms::{enumerate_terms_up_to, Skeleton, Var};
use centraldup::{Address, Letter, PosWord, Term, Word};

fn report(n: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {n}: {verdict} ({detail})");
    assert!(ok, "criterion {n}: {detail}");
}

fn a(s: &str) -> Address {
    s.parse().unwrap()
}

fn p(s: &str) -> PosWord {
    s.parse().unwrap()
}

fn ones(i: usize) -> Address {
    Address::ones(i)
}

/// Term with skeleton `s` and leaves `x1, x2, …`.
fn injective(s: &Skeleton) -> Term {
    let labels: Vec<Var> = (1..=s.size() as u32).map(|i| Var::new(i).unwrap()).collect();
    s.label(&labels)
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed)
}

fn random_address(r: &mut ChaCha8Rng, max_len: usize) -> Address {
    let len = r.gen_range(0..=max_len);
    Address::from_bits((0..len).map(|_| r.gen_range(0..2u8)))
}

fn random_pos(r: &mut ChaCha8Rng, max_word: usize, max_addr: usize) -> PosWord {
    let len = r.gen_range(0..=max_word);
    (0..len).map(|_| random_address(r, max_addr)).collect()
}

fn random_word(r: &mut ChaCha8Rng, max_word: usize, max_addr: usize) -> Word {
    let len = r.gen_range(0..=max_word);
    Word::from_letters(
        (0..len)
            .map(|_| {
                let addr = random_address(r, max_addr);
                if r.gen_bool(0.5) {
                    Letter::pos(addr)
                } else {
                    Letter::neg(addr)
                }
            })
            .collect(),
    )
}

#[test]
fn criterion_01_relation_soundness() {
    let rels = cd_relations(2);
    let skeletons: Vec<Term> = (1..=7).flat_map(Skeleton::all_of_size).map(|s| injective(&s)).collect();
    let mut bad = Vec::new();
    for rel in &rels {
        if trace_positive(&rel.lhs) != trace_positive(&rel.rhs) {
            bad.push(format!("trace {} / {}", rel.lhs, rel.rhs));
        }
        for t in &skeletons {
            if apply_positive(t, &rel.lhs).ok() != apply_positive(t, &rel.rhs).ok() {
                bad.push(format!("action {} / {} on {t}", rel.lhs, rel.rhs));
            }
        }
    }
    let right = rels
        .iter()
        .find(|r| r.kind == RelationKind::Right && r.lhs == p("1.e.0"))
        .expect("type 1 instance at the root");
    let tr = trace_positive(&right.lhs);
    let expected: Term = "(((x1 x2) (x2 x3)) ((x2 x3) (x3 x4)))".parse().unwrap();
    if tr.right != expected {
        bad.push(format!("type 1 trace {tr}"));
    }
    report(
        1,
        bad.is_empty(),
        &format!("{} relations, {} skeletons, failures: {:?}", rels.len(), skeletons.len(), bad.first()),
    );
}

#[test]
fn criterion_02_complement_table() {
    let cases = [
        ("e", "1", "1.e"),
        ("1", "e", "e.0"),
        ("1", "11", "11.1"),
        ("11", "1", "1.10"),
        ("e", "11", "e"),
        ("11", "e", "e"),
        ("1.e", "e", "11.1.e"),
        ("11", "1.e", "1.10.e.0"),
    ];
    let mut mismatches = Vec::new();
    for (u, v, want) in cases {
        let got = complement(&p(u), &p(v));
        if got != p(want) {
            mismatches.push(format!("{u}\\{v} = {got}, expected {want}"));
        }
    }
    report(2, mismatches.is_empty(), &format!("{} values, mismatches: {mismatches:?}", cases.len()));
}

#[test]
fn criterion_03_cube_condition() {
    let addrs = Address::all_up_to(3);
    let mut failures = Vec::new();
    let mut count = 0;
    for x in &addrs {
        for y in &addrs {
            for z in &addrs {
                count += 1;
                if !check_cube(x, y, z) {
                    failures.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    report(3, failures.is_empty() && count == 3375, &format!("{count} triples, failures: {:?}", failures.first()));
}

#[test]
fn criterion_04_grading() {
    let rels = cd_relations(2);
    let rel_bad = rels.iter().filter(|r| nu(&r.lhs) != nu(&r.rhs)).count();
    let mut r = rng();
    let mut grow_bad = 0;
    for _ in 0..1000 {
        let alpha = random_address(&mut r, 3);
        let u = random_pos(&mut r, 4, 3);
        if nu(&PosWord::letter(alpha).then(&u)) <= nu(&u) {
            grow_bad += 1;
        }
    }
    report(
        4,
        rel_bad == 0 && grow_bad == 0,
        &format!("{} relations ({rel_bad} differ), 1000 samples ({grow_bad} not increasing)", rels.len()),
    );
}

/// Every positive word of length at most 2 applicable to `t`.
fn applicable_words(t: &Term) -> Vec<PosWord> {
    let mut out = vec![PosWord::empty()];
    for (x, t1) in expansions(t) {
        out.push(PosWord::letter(x.clone()));
        for (y, _) in expansions(&t1) {
            out.push(PosWord::from_addresses(vec![x.clone(), y]));
        }
    }
    out
}

fn spine_identities() -> (usize, Vec<String>) {
    let phi = Address::root();
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut check = |name: &str, l: PosWord, r: PosWord| {
        checked += 1;
        if !pos_equiv(&l, &r) {
            bad.push(format!("{name}: {l} vs {r}"));
        }
    };
    let us: Vec<PosWord> = std::iter::once(PosWord::empty())
        .chain(Address::all_up_to(1).into_iter().map(PosWord::letter))
        .collect();
    for r in 0..=4usize {
        let pr = alpha_power(&phi, r as i64);
        for pp in 0..=3usize {
            if pp + 2 <= r {
                let lhs = PosWord::letter(ones(pp)).then(&pr);
                let mut rhs = pr.clone();
                for i in 0..=pp {
                    rhs.push(ones(i).child(0).join(&ones(pp - i)));
                }
                check("ones then power", lhs, rhs);
            }
        }
        for q in 0..=3usize {
            for u in &us {
                if q < r {
                    let lhs = u.shift(&ones(q).child(0)).then(&pr);
                    let mut rhs = pr.clone();
                    for i in 0..=q {
                        rhs.extend(&u.shift(&ones(i).child(0).join(&ones(q - i)).child(0)));
                    }
                    check("shifted left of spine", lhs, rhs);
                }
                if q == r {
                    let lhs = u.shift(&ones(r).child(0)).then(&pr);
                    let mut rhs = pr.clone();
                    for i in 0..=r {
                        rhs.extend(&u.shift(&ones(i).child(0).join(&ones(r - i))));
                    }
                    check("shifted at spine end", lhs, rhs);
                }
            }
            if q < r {
                let lhs = alpha_power(&phi, q as i64).then(&pr);
                let mut rhs = pr.clone();
                for i in 0..q {
                    rhs.extend(&alpha_power(&ones(i).child(0), (q - i) as i64));
                }
                check("power then power", lhs, rhs);
            }
        }
    }
    (checked, bad)
}

#[test]
fn criterion_05_garside_layer() {
    let (identities, mut bad) = spine_identities();
    let mut witnesses = 0;
    for t in enumerate_terms_up_to(6, 1) {
        for (x, _) in expansions(&t) {
            witnesses += 1;
            if let Err(e) = delta_left_factor(&t, &x) {
                bad.push(format!("left factor {t} {x}: {e}"));
            }
        }
        for u in applicable_words(&t) {
            witnesses += 2;
            if let Err(e) = delta_transport(&t, &u) {
                bad.push(format!("transport {t} {u}: {e}"));
            }
            if let Err(e) = delta_bound(&t, &u) {
                bad.push(format!("bound {t} {u}: {e}"));
            }
        }
    }
    report(
        5,
        bad.is_empty(),
        &format!("{identities} identities, {witnesses} witnesses, failures: {:?}", bad.first()),
    );
}

#[test]
fn criterion_06_blueprint_action() {
    let terms = enumerate_terms_up_to(8, 1);
    let size8 = terms.iter().filter(|t| t.size() == 8).count();
    let bad: Vec<&Term> = terms.iter().filter(|t| blueprint_action_check(t) != Ok(true)).collect();
    report(
        6,
        bad.is_empty(),
        &format!("{} terms of size <= 8 ({size8} of size 8), failures: {:?}", terms.len(), bad.first()),
    );
}

#[test]
fn criterion_07_group_identities() {
    let mut r = rng();
    let zero = Word::from_letters(vec![Letter::pos(a("0"))]);
    let mut bad = Vec::new();
    let n = 600;
    for _ in 0..n {
        let u = random_word(&mut r, 2, 2);
        let v = random_word(&mut r, 2, 2);
        let w = random_word(&mut r, 2, 2);
        let l = star(&star(&u, &v), &star(&v, &w));
        let rr = star(&u, &star(&v, &w)).then(&zero);
        if !group_equiv(&l, &rr) {
            bad.push(format!("star square {u} {v} {w}"));
        }
        let l = star(&u.then(&w.shift(&a("0"))), &v);
        let rr = star(&u, &v).then(&w.shift(&a("00")));
        if !group_equiv(&l, &rr) {
            bad.push(format!("left factor {u} {v} {w}"));
        }
        let l = star(&u, &v.then(&w.shift(&a("0"))));
        let rr = star(&u, &v).then(&w.shift(&a("01")));
        if !group_equiv(&l, &rr) {
            bad.push(format!("right factor {u} {v} {w}"));
        }
    }
    report(7, bad.is_empty(), &format!("{n} triples, failures: {:?}", bad.first()));
}

fn agreement(terms: &[Term]) -> (usize, usize, usize) {
    let (mut agree, mut disagree, mut unknown) = (0, 0, 0);
    for x in terms {
        for y in terms {
            match oracle_equiv(x, y, 8) {
                Verdict::Unknown => unknown += 1,
                v => {
                    if decide(x, y) == (v == Verdict::Equivalent) {
                        agree += 1
                    } else {
                        disagree += 1
                    }
                }
            }
        }
    }
    (agree, disagree, unknown)
}

#[test]
fn criterion_08_decision_vs_oracle() {
    let one = agreement(&enumerate_terms_up_to(5, 1));
    let three = agreement(&enumerate_terms_up_to(4, 3));
    report(
        8,
        one.1 == 0 && one.2 == 0 && three.1 == 0 && three.2 == 0,
        &format!("one variable (agree, disagree, unknown) = {one:?}; three variables = {three:?}"),
    );
}

#[test]
fn criterion_09_dil_invariance() {
    let rels = cd_relations(2);
    let dil_bad = rels
        .iter()
        .filter(|rel| (0..=4).any(|i| dil(i, &rel.lhs) != dil(i, &rel.rhs)))
        .count();
    let mut r = rng();
    let mut class_bad = 0;
    for _ in 0..500 {
        let rel = &rels[r.gen_range(0..rels.len())];
        let (pre, post) = (random_word(&mut r, 3, 2), random_word(&mut r, 3, 2));
        let (l, rr) = if r.gen_bool(0.5) {
            (rel.lhs.to_word(), rel.rhs.to_word())
        } else {
            (rel.lhs.inverse(), rel.rhs.inverse())
        };
        let w = pre.then(&l).then(&post);
        let w2 = pre.then(&rr).then(&post);
        if classify(&w) != classify(&w2) {
            class_bad += 1;
        }
    }
    report(
        9,
        dil_bad == 0 && class_bad == 0,
        &format!("{} relations ({dil_bad} change dil), 500 substitutions ({class_bad} change class)", rels.len()),
    );
}

#[test]
fn criterion_10_order() {
    let five = enumerate_terms_up_to(5, 1);
    let mut bad = Vec::new();
    for x in &five {
        for y in &five {
            let c = compare(x, y).unwrap();
            let back = compare(y, x).unwrap();
            let eq = decide_one_var(x, y).unwrap();
            if back != c.reverse() || (c == Ordering::Equal) != eq {
                bad.push(format!("trichotomy {x} {y}"));
            }
        }
    }
    let four = enumerate_terms_up_to(4, 1);
    let mut triples = 0;
    for x in &four {
        for y in &four {
            if compare(x, y).unwrap() != Ordering::Less {
                continue;
            }
            for z in &four {
                triples += 1;
                if compare(y, z).unwrap() == Ordering::Less && compare(x, z).unwrap() != Ordering::Less {
                    bad.push(format!("transitivity {x} {y} {z}"));
                }
            }
        }
    }
    let mut proper = 0;
    for t in &four {
        for level in expansion_levels(t, 2) {
            for e in level {
                let mut s = e.left();
                while let Some(sub) = s {
                    proper += 1;
                    if decide(t, sub) || compare(sub, t).unwrap() != Ordering::Less {
                        bad.push(format!("irreflexivity {t} {sub}"));
                    }
                    s = sub.left();
                }
            }
        }
    }
    report(
        10,
        bad.is_empty(),
        &format!("{} pairs, {triples} triples, {proper} proper left subterms, failures: {:?}", five.len().pow(2), bad.first()),
    );
}

#[test]
fn criterion_11_coset_system() {
    let four: Vec<_> = enumerate_terms_up_to(4, 1).iter().map(|t| coset_of_term(t).unwrap()).collect();
    let mut bad = Vec::new();
    for x in &four {
        for y in &four {
            let yz_cache: Vec<_> = four.iter().map(|z| coset_mul(y, z)).collect();
            let xy = coset_mul(x, y);
            for yz in &yz_cache {
                if coset_eq(&coset_mul(&xy, yz), &coset_mul(x, yz)) != CosetEq::Equal {
                    bad.push("identity".to_string());
                }
            }
        }
    }
    let x = coset_of_term(&"x1".parse().unwrap()).unwrap();
    let xx = coset_of_term(&"(x1 x1)".parse().unwrap()).unwrap();
    let nontrivial = coset_eq(&x, &xx) == CosetEq::NotEqual;
    let five = enumerate_terms_up_to(5, 1);
    for s in &five {
        for t in &five {
            let (cs, ct) = (coset_of_term(s).unwrap(), coset_of_term(t).unwrap());
            let same = decide_one_var(s, t).unwrap();
            let verdict = coset_eq(&cs, &ct);
            let by_class = classify(&cs.rep.inverse().then(&ct.rep)) == centraldup::Classification::PZero;
            if (verdict == CosetEq::Equal) != same || by_class != same {
                bad.push(format!("equality {s} {t}"));
            }
        }
    }
    report(
        11,
        bad.is_empty() && nontrivial,
        &format!("{} triples, {} pairs, x != xx: {nontrivial}, failures: {:?}", four.len().pow(3), five.len().pow(2), bad.first()),
    );
}

#[test]
fn criterion_12_finite_tables() {
    let mut monogenic = 0;
    let mut free = 0;
    for n in 1..=4 {
        for m in Magma::enumerate_cd(n) {
            for g in 0..n as u8 {
                if m.generates(g) {
                    monogenic += 1;
                    if check_free(&MulTable::new(m.clone(), g).unwrap()) != Ok(false) {
                        free += 1;
                    }
                }
            }
        }
    }
    let mut non_cd = 0;
    let mut witness_bad = 0;
    for code in 0..3u32.pow(9) {
        let mut c = code;
        let table: Vec<u8> = (0..9)
            .map(|_| {
                let v = (c % 3) as u8;
                c /= 3;
                v
            })
            .collect();
        let m = Magma::new(3, table).unwrap();
        if m.is_cd() {
            continue;
        }
        non_cd += 1;
        match check_free(&MulTable::new(m.clone(), 0).unwrap()) {
            Err(TableError::NotCd(x, y, z)) if m.op(x, m.op(y, z)) != m.op(m.op(x, y), m.op(y, z)) => {}
            _ => witness_bad += 1,
        }
    }
    report(
        12,
        free == 0 && witness_bad == 0,
        &format!("{monogenic} monogenic tables ({free} free), {non_cd} non-CD tables ({witness_bad} without witness)"),
    );
}

#[test]
fn spine_identities_are_not_vacuous() {
    // the identity family is not vacuous and each instance is a valid trace pair
    let (n, bad) = spine_identities();
    assert!(n > 50 && bad.is_empty(), "{n} {bad:?}");
    assert!(trace(&p("1.e.0").to_word()).is_some());
}
