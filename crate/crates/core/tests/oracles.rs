//! Brute-force oracles for closed forms, the weight-function checker and the
//! structure of the weighted left-symmetry defect.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use splice_algebra::{
    c_closed_form, check_f_equations, check_f_symmetry, compute_h, enumerate_binary_f,
    identity_defect, Alphabet, Coefficient, IdentityKind, InsertionOperator, Polynomial, Rational,
    WeightFunction, WeightTable, Word,
};

fn int(n: i64) -> Coefficient {
    Coefficient::from_int(n)
}

fn table(min: u32, bound: u32, f: impl Fn(u32, u32) -> i64) -> WeightFunction {
    WeightFunction::Table(WeightTable::from_fn(min, bound, |m, n| int(f(m, n))).unwrap())
}

#[test]
fn closed_form_matches_direct_sum() {
    for p in 1..=30u64 {
        for q in 1..=30u64 {
            let direct: u64 = (1..=q).map(|t| p.min(t)).sum();
            assert_eq!(
                c_closed_form(p, q),
                Rational::from_integer(BigInt::from(direct)),
                "p={p} q={q}"
            );
        }
    }
}

#[test]
fn closed_form_matches_single_letter_synchronized_product() {
    let a = Alphabet::parse("a").unwrap();
    for p in 1..=12usize {
        for q in 1..=12usize {
            let (x, y) = (
                Word::from_symbols(vec![0; p]),
                Word::from_symbols(vec![0; q]),
            );
            let prod = InsertionOperator::Synchronized.product(&a, &x, &y).unwrap();
            let c = prod.coefficient(&Word::from_symbols(vec![0; p + q]));
            assert_eq!(
                c,
                Coefficient::from_rational(c_closed_form(p as u64, q as u64))
            );
        }
    }
}

fn binary_tables_by_brute_force(bound: u32) -> BTreeSet<Vec<u8>> {
    let cells = (bound * bound) as usize;
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << cells) {
        let bit = |m: u32, n: u32| (mask >> ((m - 1) * bound + (n - 1))) & 1;
        let f = table(1, bound, |m, n| bit(m, n) as i64);
        if check_f_equations(&f, bound).unwrap().passed {
            out.insert((0..cells as u32).map(|i| ((mask >> i) & 1) as u8).collect());
        }
    }
    out
}

fn flatten(t: &WeightTable) -> Vec<u8> {
    let b = t.bound();
    let mut v = Vec::new();
    for m in 1..=b {
        for n in 1..=b {
            v.push(if t.get(m, n).unwrap().is_zero() { 0 } else { 1 });
        }
    }
    v
}

#[test]
fn binary_enumeration_matches_brute_force() {
    for bound in 1..=3 {
        let expected = binary_tables_by_brute_force(bound);
        let got: BTreeSet<Vec<u8>> = enumerate_binary_f(bound)
            .unwrap()
            .tables
            .iter()
            .map(flatten)
            .collect();
        assert_eq!(got, expected, "bound {bound}");
    }
    assert_eq!(binary_tables_by_brute_force(2).len(), 12);
}

#[test]
fn sum_table_violates_at_one_one_two() {
    let f = table(0, 3, |m, n| (m + n) as i64);
    let report = check_f_equations(&f, 3).unwrap();
    assert!(!report.passed);
    let v = report
        .violations
        .iter()
        .find(|v| (v.m, v.n, v.p) == (1, 1, 2))
        .expect("(1, 1, 2) is violated");
    assert_eq!(v.lhs, int(8));
    assert_eq!(v.mid, int(12));
    assert!(v.failed.contains(&"lhs=mid"));
    let h = compute_h(&f, 1, 1, 2).unwrap();
    assert_eq!((h.h1, h.h2, h.h), (int(8), int(12), int(-4)));
}

#[test]
fn passing_families_are_symmetric() {
    let families = [
        WeightFunction::ExpBilinear,
        WeightFunction::Parity,
        WeightFunction::Constant(int(1)),
        WeightFunction::Constant(int(0)),
        WeightFunction::Constant(int(-3)),
        WeightFunction::Constant(Coefficient::t_pow(2)),
    ];
    for f in &families {
        assert!(check_f_equations(f, 10).unwrap().passed, "{f}");
        assert!(check_f_symmetry(f, 10).unwrap().symmetric, "{f}");
    }
}

#[test]
fn asymmetric_table_is_flagged_at_one_two() {
    let f = table(0, 10, |m, n| (m + 2 * n) as i64);
    let report = check_f_symmetry(&f, 10).unwrap();
    assert!(!report.symmetric);
    let first = &report.witnesses[0];
    assert_eq!((first.m, first.n), (1, 2));
    assert_eq!((first.f_mn.clone(), first.f_nm.clone()), (int(5), int(4)));
}

fn words(a: &Alphabet, s: &[u8]) -> Word {
    assert!(s.iter().all(|&i| (i as usize) < a.len()));
    Word::from_symbols(s.iter().copied())
}

fn mono(a: &Alphabet, w: &Word) -> Polynomial {
    Polynomial::from_word(a, w.clone()).unwrap()
}

fn simple_then(a: &Alphabet, x: &Word, y: &Word, z: &Word) -> Polynomial {
    let s = InsertionOperator::Simple;
    s.apply(&s.product(a, x, y).unwrap(), &mono(a, z)).unwrap()
}

fn simple_associator(a: &Alphabet, x: &Word, y: &Word, z: &Word) -> Polynomial {
    let s = InsertionOperator::Simple;
    let inner = s.apply(&mono(a, x), &s.product(a, y, z).unwrap()).unwrap();
    simple_then(a, x, y, z).checked_sub(&inner).unwrap()
}

fn small_table() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 81)
}

fn word_strategy(letters: u8) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0..letters, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// `D(x,y,z) = H(m,n,p)·(x→y)→z − H(n,m,p)·(y→x)→z + (H₂(m,n,p) − H₂(n,m,p))·A(x,y,z)`
    /// where `A` is the simple associator, which is symmetric in its first two arguments.
    #[test]
    fn weighted_defect_decomposes(
        values in small_table(), x in word_strategy(2), y in word_strategy(2), z in word_strategy(2),
    ) {
        let a = Alphabet::parse("ab").unwrap();
        let f = table(0, 8, |m, n| values[(m * 9 + n) as usize]);
        let (x, y, z) = (words(&a, &x), words(&a, &y), words(&a, &z));
        let (m, n, p) = (x.len() as u32, y.len() as u32, z.len() as u32);
        let op = InsertionOperator::Weighted(f.clone());
        let defect = identity_defect(&op, IdentityKind::LeftSymmetric, &a, &x, &y, &z).unwrap();

        let hx = compute_h(&f, m, n, p).unwrap();
        let hy = compute_h(&f, n, m, p).unwrap();
        let expected = simple_then(&a, &x, &y, &z).scalar_mul(&hx.h)
            .checked_sub(&simple_then(&a, &y, &x, &z).scalar_mul(&hy.h)).unwrap()
            .checked_add(&simple_associator(&a, &x, &y, &z).scalar_mul(&(&hx.h2 - &hy.h2))).unwrap();
        prop_assert_eq!(defect, expected);
    }

    /// With pairwise distinct letters, `yxz` arises once on each side.
    #[test]
    fn leading_coefficient_with_distinct_letters(
        values in small_table(), m in 1usize..=3, n in 1usize..=3, p in 1usize..=2,
    ) {
        let a = Alphabet::parse("abcdefgh").unwrap();
        let mut next = 0u8..;
        let mut take = |k: usize| Word::from_symbols((&mut next).take(k).collect::<Vec<u8>>());
        let (x, y, z) = (take(m), take(n), take(p));
        let f = table(0, 8, |m, n| values[(m * 9 + n) as usize]);
        let op = InsertionOperator::Weighted(f.clone());
        let defect = identity_defect(&op, IdentityKind::LeftSymmetric, &a, &x, &y, &z).unwrap();
        let (m, n, p) = (m as u32, n as u32, p as u32);
        let expected = &compute_h(&f, m, n, p).unwrap().h - &compute_h(&f, n, m, p).unwrap().h;
        prop_assert_eq!(defect.coefficient(&y.concat(&x).concat(&z)), expected);
    }
}

/// Over nonempty words the first witness repeats letters, so several insertion
/// paths land on `yxz` and its coefficient is not `H(m,n,p) − H(n,m,p)`.
#[test]
fn sum_table_first_nonempty_witness_collapses_letters() {
    use splice_algebra::{check_identity_with, SearchMode, SearchOptions};
    let a = Alphabet::parse("ab").unwrap();
    let f = table(0, 6, |m, n| (m + n) as i64);
    let opts = SearchOptions {
        include_empty: Some(false),
        ..SearchOptions::default()
    };
    let op = InsertionOperator::Weighted(f.clone());
    let r = check_identity_with(
        &op,
        IdentityKind::LeftSymmetric,
        &a,
        6,
        SearchMode::Exhaustive,
        &opts,
    )
    .unwrap();
    let w = r.witness.unwrap();
    assert_eq!(
        (
            a.format_word(&w.x),
            a.format_word(&w.y),
            a.format_word(&w.z)
        ),
        ("a".into(), "aa".into(), "a".into())
    );
    assert_eq!(w.defect.to_string(), "-24*aaaa");
    let h_diff = &compute_h(&f, 1, 2, 1).unwrap().h - &compute_h(&f, 2, 1, 1).unwrap().h;
    assert_eq!(h_diff, int(-4));
}

/// Setting `n = p` in `f(m,n)·f(m+n,p) = f(m,p)·f(n,m+p)` and cancelling a
/// nonzero `f(m,p)` gives `f(m+p,p) = f(p,m+p)` wherever the triple was checked.
#[test]
fn conditional_symmetry_on_enumerated_tables() {
    let mut cancelled = 0;
    for bound in 2..=4u32 {
        for t in enumerate_binary_f(bound).unwrap().tables {
            let f = WeightFunction::Table(t);
            for m in 1..=bound {
                for p in 1..=bound {
                    if m + p > bound || 2 * p > bound || f.eval(m, p).unwrap().is_zero() {
                        continue;
                    }
                    assert_eq!(
                        f.eval(m + p, p).unwrap(),
                        f.eval(p, m + p).unwrap(),
                        "{f} at ({m},{p})"
                    );
                    cancelled += 1;
                }
            }
        }
    }
    assert!(cancelled > 0);
}
