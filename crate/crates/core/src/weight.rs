//! Weight functions `f: ℕ × ℕ → Coefficient` scaling the weighted insertion
//! `x ⇒ y = f(|x|, |y|) · (x → y)`, and checks of the functional equations
//!
//! ```text
//! f(m, n)·f(m+n, p) = f(n, p)·f(m, n+p) = f(m, p)·f(n, m+p)
//! ```
//!
//! that make the weighted product left-symmetric.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// Largest bound accepted by [`enumerate_binary_f`] (2^16 candidate tables).
pub const MAX_BINARY_BOUND: u32 = 4;

#[derive(Clone, PartialEq, Eq)]
pub enum WeightFunction {
    Constant(Coefficient),
    /// `f(m, n) = t^{m·n}`, i.e. `e^{k·m·n}` with `t = e^k`.
    ExpBilinear,
    /// 1 when `m` and `n` are both odd, else 0.
    Parity,
    Table(WeightTable),
}

impl WeightFunction {
    pub fn eval(&self, m: u32, n: u32) -> Result<Coefficient> {
        match self {
            WeightFunction::Constant(c) => Ok(c.clone()),
            WeightFunction::ExpBilinear => Ok(Coefficient::t_pow(m as i64 * n as i64)),
            WeightFunction::Parity => Ok(Coefficient::from_int((m % 2 == 1 && n % 2 == 1) as i64)),
            WeightFunction::Table(t) => t.get(m, n).cloned().ok_or(Error::OutOfDomain { m, n }),
        }
    }

    pub fn in_domain(&self, m: u32, n: u32) -> bool {
        match self {
            WeightFunction::Table(t) => t.contains(m, n),
            _ => true,
        }
    }

    /// Parses `exp`, `parity` or `const:<coefficient>`. Tables are loaded separately.
    pub fn parse_family(spec: &str) -> Result<Self> {
        match spec {
            "exp" => Ok(WeightFunction::ExpBilinear),
            "parity" => Ok(WeightFunction::Parity),
            _ => match spec.strip_prefix("const:") {
                Some(c) => Ok(WeightFunction::Constant(c.parse()?)),
                None => Err(Error::parse(
                    "weight function",
                    spec,
                    "expected exp, parity, const:<coefficient> or a table",
                )),
            },
        }
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightFunction::Constant(c) => write!(f, "const:{c}"),
            WeightFunction::ExpBilinear => write!(f, "exp"),
            WeightFunction::Parity => write!(f, "parity"),
            WeightFunction::Table(t) => write!(f, "table[{}..={}]", t.min, t.bound),
        }
    }
}

impl fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A weight function given by explicit values on the square `[min, bound]²`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightTable {
    min: u32,
    bound: u32,
    values: Vec<Coefficient>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    #[serde(rename = "N")]
    bound: u32,
    #[serde(default, skip_serializing_if = "is_zero_u32")]
    min: u32,
    entries: Vec<(u32, u32, String)>,
}

fn is_zero_u32(v: &u32) -> bool {
    *v == 0
}

impl WeightTable {
    pub fn from_fn(
        min: u32,
        bound: u32,
        mut f: impl FnMut(u32, u32) -> Coefficient,
    ) -> Result<Self> {
        if min > bound {
            return Err(Error::InvalidTable(format!("min {min} exceeds N {bound}")));
        }
        let side = (bound - min + 1) as usize;
        let mut values = Vec::with_capacity(side * side);
        for m in min..=bound {
            for n in min..=bound {
                values.push(f(m, n));
            }
        }
        Ok(WeightTable { min, bound, values })
    }

    pub fn min(&self) -> u32 {
        self.min
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn contains(&self, m: u32, n: u32) -> bool {
        (self.min..=self.bound).contains(&m) && (self.min..=self.bound).contains(&n)
    }

    pub fn get(&self, m: u32, n: u32) -> Option<&Coefficient> {
        if !self.contains(m, n) {
            return None;
        }
        let side = (self.bound - self.min + 1) as usize;
        Some(&self.values[(m - self.min) as usize * side + (n - self.min) as usize])
    }

    /// Parses `{"N": 4, "entries": [[m, n, "coeff"], ...]}`. The optional `"min"`
    /// field (default 0) lowers the domain's left edge; every `(m, n)` in
    /// `[min, N]²` must be listed exactly once.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidTable(e.to_string()))?;
        if file.min > file.bound {
            return Err(Error::InvalidTable(format!(
                "min {} exceeds N {}",
                file.min, file.bound
            )));
        }
        let side = (file.bound - file.min + 1) as usize;
        let mut slots: Vec<Option<Coefficient>> = vec![None; side * side];
        for (m, n, text) in &file.entries {
            let in_range =
                (file.min..=file.bound).contains(m) && (file.min..=file.bound).contains(n);
            if !in_range {
                return Err(Error::InvalidTable(format!(
                    "entry ({m}, {n}) lies outside [{}, {}]²",
                    file.min, file.bound
                )));
            }
            let slot = &mut slots[(m - file.min) as usize * side + (n - file.min) as usize];
            if slot.is_some() {
                return Err(Error::InvalidTable(format!("duplicate entry ({m}, {n})")));
            }
            *slot = Some(text.parse()?);
        }
        let mut values = Vec::with_capacity(slots.len());
        for (i, slot) in slots.into_iter().enumerate() {
            let m = file.min + (i / side) as u32;
            let n = file.min + (i % side) as u32;
            values.push(
                slot.ok_or_else(|| Error::InvalidTable(format!("missing entry ({m}, {n})")))?,
            );
        }
        Ok(WeightTable {
            min: file.min,
            bound: file.bound,
            values,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut entries = Vec::with_capacity(self.values.len());
        for m in self.min..=self.bound {
            for n in self.min..=self.bound {
                entries.push((m, n, self.get(m, n).unwrap().to_string()));
            }
        }
        serde_json::to_string(&TableFile {
            bound: self.bound,
            min: self.min,
            entries,
        })
        .expect("table serializes")
    }
}

/// The three products whose equality is required at `(m, n, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HValues {
    /// `H1 − H2`.
    pub h: Coefficient,
    /// `f(m, n)·f(m+n, p)`.
    pub h1: Coefficient,
    /// `f(n, p)·f(m, n+p)`.
    pub h2: Coefficient,
}

pub fn compute_h(f: &WeightFunction, m: u32, n: u32, p: u32) -> Result<HValues> {
    let h1 = &f.eval(m, n)? * &f.eval(m + n, p)?;
    let h2 = &f.eval(n, p)? * &f.eval(m, n + p)?;
    Ok(HValues {
        h: &h1 - &h2,
        h1,
        h2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FViolation {
    pub m: u32,
    pub n: u32,
    pub p: u32,
    /// `f(m, n)·f(m+n, p)`
    pub lhs: Coefficient,
    /// `f(n, p)·f(m, n+p)`
    pub mid: Coefficient,
    /// `f(m, p)·f(n, m+p)`
    pub rhs: Coefficient,
    /// Which of `lhs=mid`, `mid=rhs`, `lhs=rhs` fail.
    pub failed: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FGridReport {
    pub function: String,
    pub bound: u32,
    pub passed: bool,
    /// Triples actually compared.
    pub checked: u64,
    /// Triples skipped because a derived index leaves a table's domain.
    pub skipped: u64,
    pub violations: Vec<FViolation>,
}

fn triple_in_domain(f: &WeightFunction, m: u32, n: u32, p: u32) -> bool {
    [(m, n), (m + n, p), (n, p), (m, n + p), (m, p), (n, m + p)]
        .iter()
        .all(|&(a, b)| f.in_domain(a, b))
}

/// Checks both functional equations on every `(m, n, p) ∈ [0, bound]³`, skipping
/// triples that would read a table outside its declared domain.
pub fn check_f_equations(f: &WeightFunction, bound: u32) -> Result<FGridReport> {
    let per_m: Vec<(u64, u64, Vec<FViolation>)> = (0..=bound)
        .into_par_iter()
        .map(|m| -> Result<_> {
            let (mut checked, mut skipped, mut violations) = (0u64, 0u64, Vec::new());
            for n in 0..=bound {
                for p in 0..=bound {
                    if !triple_in_domain(f, m, n, p) {
                        skipped += 1;
                        continue;
                    }
                    checked += 1;
                    let HValues {
                        h1: lhs, h2: mid, ..
                    } = compute_h(f, m, n, p)?;
                    let rhs = &f.eval(m, p)? * &f.eval(n, m + p)?;
                    let mut failed = Vec::new();
                    if lhs != mid {
                        failed.push("lhs=mid");
                    }
                    if mid != rhs {
                        failed.push("mid=rhs");
                    }
                    if lhs != rhs {
                        failed.push("lhs=rhs");
                    }
                    if !failed.is_empty() {
                        violations.push(FViolation {
                            m,
                            n,
                            p,
                            lhs,
                            mid,
                            rhs,
                            failed,
                        });
                    }
                }
            }
            Ok((checked, skipped, violations))
        })
        .collect::<Result<_>>()?;

    let mut report = FGridReport {
        function: f.to_string(),
        bound,
        passed: true,
        checked: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for (c, s, v) in per_m {
        report.checked += c;
        report.skipped += s;
        report.violations.extend(v);
    }
    report.passed = report.violations.is_empty();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryWitness {
    pub m: u32,
    pub n: u32,
    pub f_mn: Coefficient,
    pub f_nm: Coefficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub bound: u32,
    pub symmetric: bool,
    /// Pairs with `m < n` and `f(m, n) ≠ f(n, m)`, in lexicographic order.
    pub witnesses: Vec<SymmetryWitness>,
}

/// Compares `f(m, n)` with `f(n, m)` on `[1, bound]²`.
pub fn check_f_symmetry(f: &WeightFunction, bound: u32) -> Result<SymmetryReport> {
    let mut witnesses = Vec::new();
    for m in 1..=bound {
        for n in m + 1..=bound {
            let (f_mn, f_nm) = (f.eval(m, n)?, f.eval(n, m)?);
            if f_mn != f_nm {
                witnesses.push(SymmetryWitness { m, n, f_mn, f_nm });
            }
        }
    }
    Ok(SymmetryReport {
        bound,
        symmetric: witnesses.is_empty(),
        witnesses,
    })
}

/// Result of [`enumerate_binary_f`]. Tables are only known to be consistent on
/// `checked_triples`; triples whose sums exceed the bound are not constrained.
#[derive(Clone, Debug)]
pub struct BinaryEnumeration {
    pub bound: u32,
    pub checked_triples: Vec<(u32, u32, u32)>,
    pub tables: Vec<WeightTable>,
}

/// All {0,1}-valued tables on `[1, bound]²` that satisfy the functional
/// equations on every triple whose derived indices stay inside the table.
pub fn enumerate_binary_f(bound: u32) -> Result<BinaryEnumeration> {
    if bound > MAX_BINARY_BOUND {
        return Err(Error::BoundTooLarge {
            bound,
            max: MAX_BINARY_BOUND,
        });
    }
    if bound == 0 {
        return Err(Error::InvalidTable("binary tables need N >= 1".into()));
    }
    let side = bound as usize;
    let cells = side * side;
    let idx = |m: u32, n: u32| (m as usize - 1) * side + (n as usize - 1);

    let mut checked_triples = Vec::new();
    for m in 1..=bound {
        for n in 1..=bound {
            for p in 1..=bound {
                if m + n <= bound && n + p <= bound && m + p <= bound {
                    checked_triples.push((m, n, p));
                }
            }
        }
    }
    // (m,n) (m+n,p) | (n,p) (m,n+p) | (m,p) (n,m+p) as bit positions
    let probes: Vec<[usize; 6]> = checked_triples
        .iter()
        .map(|&(m, n, p)| {
            [
                idx(m, n),
                idx(m + n, p),
                idx(n, p),
                idx(m, n + p),
                idx(m, p),
                idx(n, m + p),
            ]
        })
        .collect();

    let bit = |mask: u32, i: usize| (mask >> i) & 1 == 1;
    let tables = (0u32..1 << cells)
        .filter(|&mask| {
            probes.iter().all(|pr| {
                let a = bit(mask, pr[0]) && bit(mask, pr[1]);
                let b = bit(mask, pr[2]) && bit(mask, pr[3]);
                let c = bit(mask, pr[4]) && bit(mask, pr[5]);
                a == b && b == c
            })
        })
        .map(|mask| {
            WeightTable::from_fn(1, bound, |m, n| {
                Coefficient::from_int(bit(mask, idx(m, n)) as i64)
            })
            .expect("1 <= bound")
        })
        .collect();

    Ok(BinaryEnumeration {
        bound,
        checked_triples,
        tables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(bound: u32, f: impl Fn(u32, u32) -> i64) -> WeightFunction {
        WeightFunction::Table(
            WeightTable::from_fn(0, bound, |m, n| Coefficient::from_int(f(m, n))).unwrap(),
        )
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            WeightFunction::ExpBilinear.eval(3, 2).unwrap(),
            Coefficient::t_pow(6)
        );
        assert_eq!(
            WeightFunction::Parity.eval(1, 3).unwrap(),
            Coefficient::one()
        );
        assert!(WeightFunction::Parity.eval(2, 1).unwrap().is_zero());
        assert!(WeightFunction::Constant(Coefficient::one())
            .eval(17, 4)
            .unwrap()
            .is_one());
        assert_eq!(
            WeightFunction::ExpBilinear.eval(0, 9).unwrap(),
            Coefficient::one()
        );
        assert!(WeightFunction::Parity.eval(0, 3).unwrap().is_zero());
        assert_eq!(
            table(2, |m, n| (m + n) as i64).eval(3, 0),
            Err(Error::OutOfDomain { m: 3, n: 0 })
        );
    }

    #[test]
    fn families_pass_equations() {
        assert!(
            check_f_equations(&WeightFunction::ExpBilinear, 10)
                .unwrap()
                .passed
        );
        assert!(
            check_f_equations(&WeightFunction::Parity, 10)
                .unwrap()
                .passed
        );
        let c = WeightFunction::Constant("3/2*t^-1".parse().unwrap());
        assert!(check_f_equations(&c, 6).unwrap().passed);
    }

    #[test]
    fn sum_table_violates_at_112() {
        let f = table(3, |m, n| (m + n) as i64);
        let report = check_f_equations(&f, 3).unwrap();
        assert!(!report.passed);
        let v = report
            .violations
            .iter()
            .find(|v| (v.m, v.n, v.p) == (1, 1, 2))
            .expect("violation at (1,1,2)");
        assert_eq!(v.lhs, Coefficient::from_int(8));
        assert_eq!(v.mid, Coefficient::from_int(12));
        assert_eq!(v.rhs, Coefficient::from_int(12));
        assert_eq!(v.failed, vec!["lhs=mid", "lhs=rhs"]);
        // clamped: e.g. (2,2,2) needs f(4,2)
        assert!(report.skipped > 0);
        assert_eq!(report.checked + report.skipped, 64);
    }

    #[test]
    fn violations_are_sorted() {
        let f = table(4, |m, n| (m * 3 + n) as i64);
        let r = check_f_equations(&f, 4).unwrap();
        let keys: Vec<_> = r.violations.iter().map(|v| (v.m, v.n, v.p)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn symmetry_examples() {
        assert!(
            check_f_symmetry(&WeightFunction::ExpBilinear, 10)
                .unwrap()
                .symmetric
        );
        assert!(
            check_f_symmetry(&WeightFunction::Parity, 10)
                .unwrap()
                .symmetric
        );
        let r = check_f_symmetry(&table(10, |m, n| (m + 2 * n) as i64), 10).unwrap();
        assert!(!r.symmetric);
        let w = &r.witnesses[0];
        assert_eq!((w.m, w.n), (1, 2));
        assert_eq!(w.f_mn, Coefficient::from_int(5));
        assert_eq!(w.f_nm, Coefficient::from_int(4));
    }

    #[test]
    fn h_examples() {
        let h = compute_h(&WeightFunction::ExpBilinear, 2, 5, 3).unwrap();
        assert!(h.h.is_zero());
        let h = compute_h(&table(3, |m, n| (m + n) as i64), 1, 1, 2).unwrap();
        assert_eq!(h.h, Coefficient::from_int(-4));
        let h = compute_h(&WeightFunction::Constant(Coefficient::one()), 4, 1, 2).unwrap();
        assert!(h.h.is_zero() && h.h1.is_one() && h.h2.is_one());
    }

    #[test]
    fn binary_bound_limit() {
        assert_eq!(
            enumerate_binary_f(5).unwrap_err(),
            Error::BoundTooLarge { bound: 5, max: 4 }
        );
    }

    #[test]
    fn table_json() {
        let text = r#"{"N": 1, "entries": [[0,0,"1"],[0,1,"t"],[1,0,"t"],[1,1,"3/2*t^2 - 1"]]}"#;
        let t = WeightTable::from_json_str(text).unwrap();
        assert_eq!(t.get(1, 1).unwrap().to_string(), "3/2*t^2 - 1");
        assert_eq!(WeightTable::from_json_str(&t.to_json_string()).unwrap(), t);

        let missing = r#"{"N": 1, "entries": [[0,0,"1"]]}"#;
        assert!(matches!(
            WeightTable::from_json_str(missing),
            Err(Error::InvalidTable(_))
        ));
        let dup = r#"{"N": 0, "entries": [[0,0,"1"],[0,0,"2"]]}"#;
        assert!(WeightTable::from_json_str(dup).is_err());
        let outside = r#"{"N": 0, "entries": [[0,0,"1"],[0,3,"2"]]}"#;
        assert!(WeightTable::from_json_str(outside).is_err());
        let shifted = r#"{"N": 1, "min": 1, "entries": [[1,1,"1"]]}"#;
        assert_eq!(WeightTable::from_json_str(shifted).unwrap().min(), 1);
    }
}
