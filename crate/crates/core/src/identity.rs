//! Associators, identity defects and bounded searches for identity violations.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::ops::{AdjacencyRelation, InsertionOperator};
use crate::poly::Polynomial;

/// Default cap on the number of ordered triples an exhaustive search may visit.
pub const DEFAULT_CEILING: u128 = 10_000_000;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_1e55;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    /// `(x,y,z) = (y,x,z)`
    LeftSymmetric,
    /// `(x,y,z) = (x,z,y)`
    RightSymmetric,
    /// `(x,y,z) = 0`
    Associative,
    /// `x∘y = y∘x`
    Commutative,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::LeftSymmetric => "left-sym",
            IdentityKind::RightSymmetric => "right-sym",
            IdentityKind::Associative => "assoc",
            IdentityKind::Commutative => "comm",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left-sym" => Ok(IdentityKind::LeftSymmetric),
            "right-sym" => Ok(IdentityKind::RightSymmetric),
            "assoc" => Ok(IdentityKind::Associative),
            "comm" => Ok(IdentityKind::Commutative),
            _ => Err(Error::parse(
                "identity",
                s,
                "expected left-sym, right-sym, assoc or comm",
            )),
        }
    }
}

/// `(x∘y)∘z − x∘(y∘z)`.
pub fn associator(
    op: &InsertionOperator,
    x: &Polynomial,
    y: &Polynomial,
    z: &Polynomial,
) -> Result<Polynomial> {
    let left = op.apply(&op.apply(x, y)?, z)?;
    let right = op.apply(x, &op.apply(y, z)?)?;
    left.checked_sub(&right)
}

/// The difference of the two sides of `kind` at `(x, y, z)`; zero iff the
/// instance holds. `z` is ignored for [`IdentityKind::Commutative`].
pub fn identity_defect_poly(
    op: &InsertionOperator,
    kind: IdentityKind,
    x: &Polynomial,
    y: &Polynomial,
    z: &Polynomial,
) -> Result<Polynomial> {
    match kind {
        IdentityKind::LeftSymmetric => {
            associator(op, x, y, z)?.checked_sub(&associator(op, y, x, z)?)
        }
        IdentityKind::RightSymmetric => {
            associator(op, x, y, z)?.checked_sub(&associator(op, x, z, y)?)
        }
        IdentityKind::Associative => associator(op, x, y, z),
        IdentityKind::Commutative => op.apply(x, y)?.checked_sub(&op.apply(y, x)?),
    }
}

pub fn identity_defect(
    op: &InsertionOperator,
    kind: IdentityKind,
    alphabet: &Alphabet,
    x: &Word,
    y: &Word,
    z: &Word,
) -> Result<Polynomial> {
    let m = |w: &Word| Polynomial::from_word(alphabet, w.clone());
    identity_defect_poly(op, kind, &m(x)?, &m(y)?, &m(z)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random { seed: u64, trials: u64 },
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Overrides the operator's default on whether the empty word is enumerated.
    pub include_empty: Option<bool>,
    pub ceiling: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            include_empty: None,
            ceiling: DEFAULT_CEILING,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: Word,
    pub y: Word,
    pub z: Word,
    pub defect: Polynomial,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        let a = self.defect.alphabet();
        json!({
            "x": a.format_word(&self.x),
            "y": a.format_word(&self.y),
            "z": a.format_word(&self.z),
            "defect": self.defect.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub operator: String,
    pub identity: IdentityKind,
    pub alphabet: Alphabet,
    pub max_total_length: usize,
    pub mode: SearchMode,
    pub include_empty: bool,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub tuples_checked: u64,
}

impl IdentityReport {
    pub fn to_json(&self) -> Value {
        let mut search = json!({
            "alphabet": self.alphabet.to_string(),
            "max_len": self.max_total_length,
            "include_empty": self.include_empty,
        });
        match self.mode {
            SearchMode::Exhaustive => search["mode"] = json!("exhaustive"),
            SearchMode::Random { seed, trials } => {
                search["mode"] = json!("random");
                search["seed"] = json!(seed);
                search["trials"] = json!(trials);
            }
        }
        json!({
            "op": self.operator,
            "identity": self.identity.name(),
            "passed": self.passed,
            "tuples_checked": self.tuples_checked,
            "witness": self.witness.as_ref().map(Witness::to_json),
            "search": search,
        })
    }
}

/// Words of each length admitted by an operator, in word order.
struct WordSpace {
    min_len: usize,
    by_len: Vec<Vec<Word>>,
}

impl WordSpace {
    fn words(&self, max_len: usize) -> impl Iterator<Item = &Word> {
        self.by_len[self.min_len..=max_len.min(self.by_len.len() - 1)]
            .iter()
            .flatten()
    }
}

/// Number of admissible words of each length `0..=max_len`, saturating.
fn admissible_counts(
    alphabet: &Alphabet,
    rel: Option<&AdjacencyRelation>,
    max_len: usize,
) -> Vec<u128> {
    let k = alphabet.len();
    let mut out = vec![1u128];
    // ending[a] = words of the current length ending in letter a
    let mut ending = vec![1u128; k];
    for len in 1..=max_len {
        if len > 1 {
            ending = (0..k)
                .map(|b| {
                    (0..k)
                        .filter(|&a| rel.is_none_or(|r| r.allows(a as u8, b as u8)))
                        .fold(0u128, |acc, a| acc.saturating_add(ending[a]))
                })
                .collect();
        }
        out.push(ending.iter().fold(0u128, |acc, &c| acc.saturating_add(c)));
    }
    out
}

/// Ordered triples with lengths in `[min, ..]` summing to at most `max_total`.
fn triple_count(counts: &[u128], min_len: usize, max_total: usize) -> u128 {
    let mut total = 0u128;
    for l1 in min_len..=max_total {
        for l2 in min_len..=max_total.saturating_sub(l1) {
            for l3 in min_len..=max_total.saturating_sub(l1 + l2) {
                if l1 + l2 + l3 > max_total {
                    continue;
                }
                let c = counts[l1]
                    .saturating_mul(counts[l2])
                    .saturating_mul(counts[l3]);
                total = total.saturating_add(c);
            }
        }
    }
    total
}

fn pair_count(counts: &[u128], min_len: usize, budget: usize) -> u128 {
    let mut total = 0u128;
    for l2 in min_len..=budget {
        for l3 in min_len..=budget - l2 {
            total = total.saturating_add(counts[l2].saturating_mul(counts[l3]));
        }
    }
    total
}

/// Searches ordered triples `(x, y, z)` with `|x| + |y| + |z| <= max_total_length`
/// for a nonzero defect of `kind`. Exhaustive mode reports the first witness in
/// enumeration order (words by length then letters, triples lexicographically).
pub fn check_identity(
    op: &InsertionOperator,
    kind: IdentityKind,
    alphabet: &Alphabet,
    max_total_length: usize,
    mode: SearchMode,
) -> Result<IdentityReport> {
    check_identity_with(
        op,
        kind,
        alphabet,
        max_total_length,
        mode,
        &SearchOptions::default(),
    )
}

pub fn check_identity_with(
    op: &InsertionOperator,
    kind: IdentityKind,
    alphabet: &Alphabet,
    max_total_length: usize,
    mode: SearchMode,
    opts: &SearchOptions,
) -> Result<IdentityReport> {
    let rel = op.relation();
    if rel.is_some_and(|r| r.alphabet() != alphabet) {
        return Err(Error::AlphabetMismatch);
    }
    let include_empty = opts
        .include_empty
        .unwrap_or_else(|| op.admits_empty_words());
    let min_len = usize::from(!include_empty);
    if max_total_length < 3 * min_len.max(1) && matches!(mode, SearchMode::Exhaustive) {
        return Err(Error::InvalidSearch(format!(
            "exhaustive search needs a total length of at least 3, got {max_total_length}"
        )));
    }
    if max_total_length < 3 * min_len {
        return Err(Error::InvalidSearch(format!(
            "no triple of nonempty words fits in total length {max_total_length}"
        )));
    }
    let counts = admissible_counts(alphabet, rel, max_total_length);

    let mut report = IdentityReport {
        operator: op.to_string(),
        identity: kind,
        alphabet: alphabet.clone(),
        max_total_length,
        mode,
        include_empty,
        passed: true,
        witness: None,
        tuples_checked: 0,
    };

    match mode {
        SearchMode::Exhaustive => {
            let estimate = triple_count(&counts, min_len, max_total_length);
            if estimate > opts.ceiling {
                return Err(Error::SearchSpaceTooLarge {
                    estimate,
                    ceiling: opts.ceiling,
                });
            }
            let longest = max_total_length - 2 * min_len;
            let space = WordSpace {
                min_len,
                by_len: (0..=longest)
                    .map(|len| {
                        alphabet
                            .words_of_length(len)
                            .filter(|w| rel.is_none_or(|r| r.is_admissible(w)))
                            .collect()
                    })
                    .collect(),
            };
            exhaustive(
                op,
                kind,
                alphabet,
                &space,
                &counts,
                max_total_length,
                &mut report,
            )?;
        }
        SearchMode::Random { seed, trials } => {
            random(
                op,
                kind,
                alphabet,
                rel,
                min_len,
                max_total_length,
                seed,
                trials,
                &mut report,
            )?;
        }
    }
    Ok(report)
}

fn exhaustive(
    op: &InsertionOperator,
    kind: IdentityKind,
    alphabet: &Alphabet,
    space: &WordSpace,
    counts: &[u128],
    max_total: usize,
    report: &mut IdentityReport,
) -> Result<()> {
    let min = space.min_len;
    let xs: Vec<&Word> = space.words(max_total - 2 * min).collect();

    // first nonzero defect in (x, y, z) order, with its index among x's pairs
    let found = xs
        .par_iter()
        .enumerate()
        .map(|(xi, x)| -> Result<Option<(usize, u64, Witness)>> {
            let budget_y = max_total - x.len() - min;
            let mut local = 0u64;
            for y in space.words(budget_y) {
                for z in space.words(max_total - x.len() - y.len()) {
                    let defect = identity_defect(op, kind, alphabet, x, y, z)?;
                    if !defect.is_zero() {
                        let w = Witness {
                            x: (*x).clone(),
                            y: y.clone(),
                            z: z.clone(),
                            defect,
                        };
                        return Ok(Some((xi, local, w)));
                    }
                    local += 1;
                }
            }
            Ok(None)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });

    let pairs_for = |x: &Word| pair_count(counts, min, max_total - x.len()) as u64;
    match found {
        None => {
            report.passed = true;
            report.tuples_checked = xs.iter().map(|x| pairs_for(x)).sum();
        }
        Some(Err(e)) => return Err(e),
        Some(Ok(None)) => unreachable!("filtered above"),
        Some(Ok(Some((xi, local, witness)))) => {
            let before: u64 = xs[..xi].iter().map(|x| pairs_for(x)).sum();
            report.passed = false;
            report.tuples_checked = before + local + 1;
            report.witness = Some(witness);
        }
    }
    Ok(())
}

fn random_word(
    rng: &mut ChaCha8Rng,
    alphabet: &Alphabet,
    rel: Option<&AdjacencyRelation>,
    len: usize,
) -> Word {
    let k = alphabet.len() as u8;
    let mut symbols: Vec<u8> = Vec::with_capacity(len);
    for _ in 0..len {
        let next = match (rel, symbols.last()) {
            (Some(r), Some(&prev)) => {
                let options: Vec<u8> = (0..k).filter(|&b| r.allows(prev, b)).collect();
                *options.choose(rng).expect("diagonal is always allowed")
            }
            _ => rng.gen_range(0..k),
        };
        symbols.push(next);
    }
    Word::from_symbols(symbols)
}

#[allow(clippy::too_many_arguments)]
fn random(
    op: &InsertionOperator,
    kind: IdentityKind,
    alphabet: &Alphabet,
    rel: Option<&AdjacencyRelation>,
    min: usize,
    max_total: usize,
    seed: u64,
    trials: u64,
    report: &mut IdentityReport,
) -> Result<()> {
    let mut shapes = Vec::new();
    for l1 in min..=max_total {
        for l2 in min..=max_total - l1 {
            for l3 in min..=max_total - l1 - l2 {
                shapes.push((l1, l2, l3));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let &(l1, l2, l3) = shapes.choose(&mut rng).expect("nonempty shape list");
        let x = random_word(&mut rng, alphabet, rel, l1);
        let y = random_word(&mut rng, alphabet, rel, l2);
        let z = random_word(&mut rng, alphabet, rel, l3);
        let defect = identity_defect(op, kind, alphabet, &x, &y, &z)?;
        if !defect.is_zero() {
            report.passed = false;
            report.tuples_checked = trial + 1;
            report.witness = Some(Witness { x, y, z, defect });
            return Ok(());
        }
    }
    report.tuples_checked = trials;
    Ok(())
}

/// One configuration of the adjacency-restricted product, the outcome the
/// literature claims for it, and what the exhaustive check observed.
#[derive(Clone, Debug)]
pub struct AuditCase {
    pub case: &'static str,
    pub description: &'static str,
    pub forbidden: Vec<(char, char)>,
    pub identity: IdentityKind,
    pub claimed_holds: bool,
    pub report: IdentityReport,
    /// A worked instance evaluated directly, when the case has one.
    pub reference_instance: Option<Witness>,
}

impl AuditCase {
    pub fn agrees(&self) -> bool {
        self.claimed_holds == self.report.passed
    }

    pub fn to_json(&self) -> Value {
        let holds = |b: bool| if b { "holds" } else { "fails" };
        json!({
            "case": self.case,
            "description": self.description,
            "alphabet": self.report.alphabet.to_string(),
            "forbidden": self.forbidden.iter().map(|(a, b)| format!("{a}{b}")).collect::<Vec<_>>(),
            "identity": self.identity.name(),
            "claimed": holds(self.claimed_holds),
            "observed": holds(self.report.passed),
            "status": if self.agrees() { "agrees" } else { "diverges-from-claim" },
            "report": self.report.to_json(),
            "reference_instance": self.reference_instance.as_ref().map(Witness::to_json),
        })
    }
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub max_total_length: usize,
    pub cases: Vec<AuditCase>,
}

impl AuditReport {
    pub fn all_agree(&self) -> bool {
        self.cases.iter().all(AuditCase::agrees)
    }

    pub fn case(&self, id: &str) -> Option<&AuditCase> {
        self.cases.iter().find(|c| c.case == id)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_len": self.max_total_length,
            "all_agree": self.all_agree(),
            "cases": self.cases.iter().map(AuditCase::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Runs the adjacency-restricted product through each alphabet-size case of the
/// classical claim: one letter, two connected letters, two disconnected letters
/// (claimed associative), and three letters with one missing edge (claimed not
/// left-symmetric) or none missing. Searches use nonempty words only.
pub fn audit_adjacency_restriction(max_total_length: usize) -> Result<AuditReport> {
    struct Spec {
        case: &'static str,
        description: &'static str,
        letters: &'static str,
        forbidden: &'static [(char, char)],
        identity: IdentityKind,
        claimed_holds: bool,
    }
    const SPECS: &[Spec] = &[
        Spec {
            case: "a",
            description: "one letter, left-symmetric",
            letters: "a",
            forbidden: &[],
            identity: IdentityKind::LeftSymmetric,
            claimed_holds: true,
        },
        Spec {
            case: "b",
            description: "two connected letters, left-symmetric",
            letters: "ab",
            forbidden: &[],
            identity: IdentityKind::LeftSymmetric,
            claimed_holds: true,
        },
        Spec {
            case: "b'-assoc",
            description: "two disconnected letters, associative",
            letters: "ab",
            forbidden: &[('a', 'b')],
            identity: IdentityKind::Associative,
            claimed_holds: true,
        },
        Spec {
            case: "b'-left-sym",
            description: "two disconnected letters, left-symmetric",
            letters: "ab",
            forbidden: &[('a', 'b')],
            identity: IdentityKind::LeftSymmetric,
            claimed_holds: true,
        },
        Spec {
            case: "c",
            description: "three letters on a path a-b-c, left-symmetric",
            letters: "abc",
            forbidden: &[('a', 'c')],
            identity: IdentityKind::LeftSymmetric,
            claimed_holds: false,
        },
        Spec {
            case: "c-full",
            description: "three fully connected letters, left-symmetric",
            letters: "abc",
            forbidden: &[],
            identity: IdentityKind::LeftSymmetric,
            claimed_holds: true,
        },
    ];

    let opts = SearchOptions {
        include_empty: Some(false),
        ..SearchOptions::default()
    };
    let mut cases = Vec::with_capacity(SPECS.len());
    for spec in SPECS {
        let alphabet = Alphabet::parse(spec.letters)?;
        let rel = AdjacencyRelation::with_forbidden(&alphabet, spec.forbidden)?;
        let op = InsertionOperator::AdjacencyRestricted(rel);
        let report = check_identity_with(
            &op,
            spec.identity,
            &alphabet,
            max_total_length,
            SearchMode::Exhaustive,
            &opts,
        )?;
        let reference_instance = if spec.case == "c" {
            let w = |s: &str| alphabet.parse_word(s);
            let (x, y, z) = (w("a")?, w("b")?, w("c")?);
            let defect = identity_defect(&op, spec.identity, &alphabet, &x, &y, &z)?;
            Some(Witness { x, y, z, defect })
        } else {
            None
        };
        cases.push(AuditCase {
            case: spec.case,
            description: spec.description,
            forbidden: spec.forbidden.to_vec(),
            identity: spec.identity,
            claimed_holds: spec.claimed_holds,
            report,
            reference_instance,
        });
    }
    Ok(AuditReport {
        max_total_length,
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::WeightFunction;

    fn abc() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    fn path_op() -> InsertionOperator {
        InsertionOperator::AdjacencyRestricted(
            AdjacencyRelation::with_forbidden(&abc(), &[('a', 'c')]).unwrap(),
        )
    }

    fn assoc(op: &InsertionOperator, a: &Alphabet, x: &str, y: &str, z: &str) -> String {
        let p = |s| Polynomial::parse(s, a).unwrap();
        associator(op, &p(x), &p(y), &p(z)).unwrap().to_string()
    }

    fn defect(
        op: &InsertionOperator,
        kind: IdentityKind,
        a: &Alphabet,
        x: &str,
        y: &str,
        z: &str,
    ) -> String {
        let w = |s| a.parse_word(s).unwrap();
        identity_defect(op, kind, a, &w(x), &w(y), &w(z))
            .unwrap()
            .to_string()
    }

    #[test]
    fn delta_associators() {
        let op = InsertionOperator::DeltaRestricted;
        assert_eq!(assoc(&op, &abc(), "ab", "abc", "ac"), "-abcabac");
        assert_eq!(assoc(&op, &abc(), "abc", "ab", "ac"), "-ababcac");
        assert_eq!(
            defect(&op, IdentityKind::LeftSymmetric, &abc(), "ab", "abc", "ac"),
            "ababcac - abcabac"
        );
    }

    #[test]
    fn path_associators() {
        let op = path_op();
        assert_eq!(assoc(&op, &abc(), "a", "b", "c"), "0");
        assert_eq!(assoc(&op, &abc(), "b", "a", "c"), "abc + cba");
        assert_eq!(
            defect(&op, IdentityKind::Associative, &abc(), "a", "a", "a"),
            "-2*aaa"
        );
    }

    #[test]
    fn synchronized_defect() {
        let a = Alphabet::parse("a").unwrap();
        assert_eq!(
            defect(
                &InsertionOperator::Synchronized,
                IdentityKind::LeftSymmetric,
                &a,
                "aa",
                "aaa",
                "aaaaaa"
            ),
            "16*aaaaaaaaaaa"
        );
    }

    #[test]
    fn commutative_and_right_symmetric() {
        let a = Alphabet::parse("ab").unwrap();
        let op = InsertionOperator::Simple;
        assert_eq!(
            defect(&op, IdentityKind::Commutative, &a, "a", "b", "1"),
            "0"
        );
        assert_eq!(
            defect(&op, IdentityKind::Commutative, &a, "aa", "b", "1"),
            "-aba"
        );
        assert!(
            !check_identity(
                &op,
                IdentityKind::RightSymmetric,
                &a,
                4,
                SearchMode::Exhaustive
            )
            .unwrap()
            .passed
        );
    }

    #[test]
    fn simple_is_left_symmetric_small() {
        let r = check_identity(
            &InsertionOperator::Simple,
            IdentityKind::LeftSymmetric,
            &Alphabet::parse("ab").unwrap(),
            6,
            SearchMode::Exhaustive,
        )
        .unwrap();
        assert!(r.passed);
        assert!(r.witness.is_none());
        // Σ_{L<=6} C(L+2,2)·2^L
        let expected: u64 = (0..=6u64).map(|l| (l + 1) * (l + 2) / 2 * (1 << l)).sum();
        assert_eq!(r.tuples_checked, expected);
    }

    #[test]
    fn first_witness_and_count() {
        let r = check_identity(
            &path_op(),
            IdentityKind::Associative,
            &abc(),
            3,
            SearchMode::Exhaustive,
        )
        .unwrap();
        // with empty words enumerated the very first nontrivial triple is (1, 1, a)
        let w = r.witness.unwrap();
        assert_eq!(abc().format_word(&w.x), "1");
        assert_eq!(abc().format_word(&w.y), "1");
        assert_eq!(abc().format_word(&w.z), "a");
        assert_eq!(w.defect.to_string(), "-2*a");
        assert_eq!(r.tuples_checked, 2);
    }

    #[test]
    fn parallel_matches_sequential_order() {
        let op = InsertionOperator::DeltaRestricted;
        let a = abc();
        let r = check_identity(
            &op,
            IdentityKind::LeftSymmetric,
            &a,
            7,
            SearchMode::Exhaustive,
        )
        .unwrap();
        let w = r.witness.clone().unwrap();
        // sequential scan to the same point
        let mut n = 0u64;
        let mut first = None;
        'outer: for x in a.words_up_to(1, 5) {
            for y in a.words_up_to(1, 6 - x.len()) {
                for z in a.words_up_to(1, 7 - x.len() - y.len()) {
                    n += 1;
                    if !identity_defect(&op, IdentityKind::LeftSymmetric, &a, &x, &y, &z)
                        .unwrap()
                        .is_zero()
                    {
                        first = Some((x, y, z));
                        break 'outer;
                    }
                }
            }
        }
        let (x, y, z) = first.unwrap();
        assert_eq!((w.x, w.y, w.z), (x, y, z));
        assert_eq!(r.tuples_checked, n);
    }

    #[test]
    fn ceiling_and_bounds() {
        let a = Alphabet::parse("abcd").unwrap();
        let err = check_identity(
            &InsertionOperator::Simple,
            IdentityKind::LeftSymmetric,
            &a,
            14,
            SearchMode::Exhaustive,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::SearchSpaceTooLarge {
                ceiling: DEFAULT_CEILING,
                ..
            }
        ));
        assert!(matches!(
            check_identity(
                &InsertionOperator::Simple,
                IdentityKind::LeftSymmetric,
                &a,
                2,
                SearchMode::Exhaustive
            ),
            Err(Error::InvalidSearch(_))
        ));
        let other = Alphabet::parse("ab").unwrap();
        assert_eq!(
            check_identity(
                &path_op(),
                IdentityKind::LeftSymmetric,
                &other,
                3,
                SearchMode::Exhaustive
            )
            .unwrap_err(),
            Error::AlphabetMismatch
        );
    }

    #[test]
    fn admissible_counting() {
        let rel = AdjacencyRelation::with_forbidden(&abc(), &[('a', 'c')]).unwrap();
        let counts = admissible_counts(&abc(), Some(&rel), 4);
        for (len, &c) in counts.iter().enumerate() {
            let brute = abc()
                .words_of_length(len)
                .filter(|w| rel.is_admissible(w))
                .count();
            assert_eq!(c, brute as u128, "length {len}");
        }
    }

    #[test]
    fn random_mode_is_deterministic() {
        let a = abc();
        let mode = SearchMode::Random {
            seed: 7,
            trials: 200,
        };
        let run = || {
            check_identity(
                &InsertionOperator::DeltaRestricted,
                IdentityKind::LeftSymmetric,
                &a,
                7,
                mode,
            )
            .unwrap()
        };
        let (r1, r2) = (run(), run());
        assert_eq!(r1, r2);
        assert!(!r1.passed);

        let r = check_identity(
            &InsertionOperator::Weighted(WeightFunction::ExpBilinear),
            IdentityKind::LeftSymmetric,
            &a,
            7,
            SearchMode::Random {
                seed: 1,
                trials: 300,
            },
        )
        .unwrap();
        assert!(r.passed);
        assert_eq!(r.tuples_checked, 300);
    }

    #[test]
    fn random_words_respect_relation() {
        let rel = AdjacencyRelation::with_forbidden(&abc(), &[('a', 'c')]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let w = random_word(&mut rng, &abc(), Some(&rel), 6);
            assert!(rel.is_admissible(&w));
        }
    }

    #[test]
    fn report_json_schema() {
        let r = check_identity(
            &InsertionOperator::DeltaRestricted,
            IdentityKind::LeftSymmetric,
            &abc(),
            7,
            SearchMode::Exhaustive,
        )
        .unwrap();
        let v = r.to_json();
        assert_eq!(v["op"], "delta");
        assert_eq!(v["identity"], "left-sym");
        assert_eq!(v["passed"], false);
        assert!(v["tuples_checked"].as_u64().unwrap() > 0);
        assert!(v["witness"]["defect"].as_str().unwrap() != "0");
        for key in ["x", "y", "z"] {
            assert!(v["witness"][key].is_string());
        }
    }
}
