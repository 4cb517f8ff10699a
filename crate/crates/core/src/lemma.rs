//! Exact-integer evaluation of the constrained binomial sums F(x,y) and
//! C(t,x), plus full-grid sweeps of the inequalities and identities that
//! relate them. Inequalities are checked in doubled form (2F vs C(ℓ,k))
//! so no rational arithmetic is ever needed.
//!
//! Binomials use the zero-extension convention: C(p,q) = 0 when q < 0 or
//! p < q. Every summation here relies on it.
//!
//! Arithmetic is u128 with checked operations; sums stay far below the
//! 128-bit range for ℓ ≤ 40, which is the supported sweep range.

use serde::Serialize;
use thiserror::Error;

pub const MAX_ELL: u64 = 40;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LemmaError {
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("u128 overflow at {0}; reduce the sweep range")]
    Overflow(String),
}

/// C(p,q) under the zero-extension convention.
pub fn binom(p: i64, q: i64) -> u128 {
    if q < 0 || p < q {
        return 0;
    }
    let q = q.min(p - q); // p >= q >= 0 here
    let mut acc: u128 = 1;
    for i in 0..q {
        acc = acc * (p - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Which lower bound the 2a+b constraint uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Floor {
    KPlus1,
    KPlus2,
}

impl Floor {
    fn value(self, k: i64) -> i64 {
        match self {
            Floor::KPlus1 => k + 1,
            Floor::KPlus2 => k + 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaParams {
    pub ell: u64,
    pub k: u64,
    pub x: u64,
    pub y: u64,
}

impl LemmaParams {
    pub fn validate(&self) -> Result<(), LemmaError> {
        if self.k < 1 {
            return Err(LemmaError::Range("k must be at least 1".into()));
        }
        if self.ell <= self.k {
            return Err(LemmaError::Range(format!(
                "need ell > k, got ell = {} k = {}",
                self.ell, self.k
            )));
        }
        if self.x + self.y > self.ell {
            return Err(LemmaError::Range(format!(
                "need x + y <= ell, got {} + {} > {}",
                self.x, self.y, self.ell
            )));
        }
        if self.ell > MAX_ELL {
            return Err(LemmaError::Range(format!(
                "ell = {} exceeds supported maximum {MAX_ELL}",
                self.ell
            )));
        }
        Ok(())
    }

    /// p(x) = x + ceil((k+1-ell)/2)
    pub fn p_of_x(&self) -> i64 {
        let num = self.k as i64 + 1 - self.ell as i64;
        self.x as i64 + num.div_euclid(2) + if num.rem_euclid(2) != 0 { 1 } else { 0 }
    }
}

/// F(x,y): sum of C(x,a)·C(y,b)·C(ℓ−x−y, k−a−b) over 0 ≤ a ≤ x,
/// 0 ≤ b ≤ y, a+b ≤ k, 2a+b ≥ max(2x+y+k+1−ℓ, floor).
pub fn f_value(params: &LemmaParams, floor: Floor) -> Result<u128, LemmaError> {
    params.validate()?;
    let (ell, k, x, y) = (
        params.ell as i64,
        params.k as i64,
        params.x as i64,
        params.y as i64,
    );
    let lo = (2 * x + y + k + 1 - ell).max(floor.value(k));
    let mut total: u128 = 0;
    for a in 0..=x {
        for b in 0..=y {
            if a + b > k || 2 * a + b < lo {
                continue;
            }
            let term = binom(x, a)
                .checked_mul(binom(y, b))
                .and_then(|t| t.checked_mul(binom(ell - x - y, k - a - b)))
                .ok_or_else(|| LemmaError::Overflow(format!("F term at a={a} b={b}")))?;
            total = total
                .checked_add(term)
                .ok_or_else(|| LemmaError::Overflow("F sum".into()))?;
        }
    }
    Ok(total)
}

/// C(t,x): sum over 2a ≤ t of C(x,a)·C(ℓ−2x, t−2a)·C(x, k+a−t).
pub fn c_value(t: u64, x: u64, ell: u64, k: u64) -> Result<u128, LemmaError> {
    if ell > MAX_ELL {
        return Err(LemmaError::Range(format!("ell = {ell} exceeds {MAX_ELL}")));
    }
    if 2 * x > ell {
        return Err(LemmaError::Range(format!(
            "need x <= floor(ell/2), got x = {x} ell = {ell}"
        )));
    }
    if t > 2 * k {
        return Err(LemmaError::Range(format!(
            "need t <= 2k, got t = {t} k = {k}"
        )));
    }
    let (t, x, ell, k) = (t as i64, x as i64, ell as i64, k as i64);
    let mut total: u128 = 0;
    for a in 0..=t / 2 {
        let term = binom(x, a)
            .checked_mul(binom(ell - 2 * x, t - 2 * a))
            .and_then(|v| v.checked_mul(binom(x, k + a - t)))
            .ok_or_else(|| LemmaError::Overflow(format!("C term at a={a}")))?;
        total = total
            .checked_add(term)
            .ok_or_else(|| LemmaError::Overflow("C sum".into()))?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GridCell {
    pub ell: u64,
    pub k: u64,
    pub x: u64,
    pub y: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub identity: String,
    pub cell: GridCell,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityVerdict {
    pub identity: String,
    pub cells_checked: u64,
    pub violations: u64,
}

/// Outcome of a sweep: exact verdicts per identity, every violating cell,
/// and for the main inequality the observed equality cases.
#[derive(Debug, Clone, Serialize, Default)]
pub struct SweepReport {
    pub ell_max: u64,
    pub verdicts: Vec<IdentityVerdict>,
    pub violations: Vec<Violation>,
    pub equality_cases: Vec<GridCell>,
    /// Set when the sweep adjudicates a printed formula against a
    /// consistent variant: records which side the grid supports.
    pub adjudications: Vec<String>,
}

impl SweepReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, identity: &str, cells: u64, violations: Vec<Violation>) {
        self.verdicts.push(IdentityVerdict {
            identity: identity.to_owned(),
            cells_checked: cells,
            violations: violations.len() as u64,
        });
        self.violations.extend(violations);
    }
}

/// Sweep 2F(x,y) ≤ C(ℓ,k) over every 1 ≤ k < ℓ ≤ ell_max and feasible
/// (x,y), recording equality cases. With `Floor::KPlus1` the equality set
/// must be exactly {ℓ even, k odd, x = ℓ/2, y = 0}; with `Floor::KPlus2`
/// the inequality must be strict everywhere.
pub fn verify_main_lemma(ell_max: u64, floor: Floor) -> Result<SweepReport, LemmaError> {
    if ell_max < 2 {
        return Err(LemmaError::Range("ell_max must be at least 2".into()));
    }
    let mut report = SweepReport {
        ell_max,
        ..Default::default()
    };
    let mut cells = 0u64;
    let mut violations = Vec::new();
    for ell in 2..=ell_max {
        for k in 1..ell {
            let bound = binom(ell as i64, k as i64);
            for x in 0..=ell {
                for y in 0..=(ell - x) {
                    cells += 1;
                    let f = f_value(&LemmaParams { ell, k, x, y }, floor)?;
                    let doubled = f
                        .checked_mul(2)
                        .ok_or_else(|| LemmaError::Overflow("2F".into()))?;
                    let cell = GridCell { ell, k, x, y };
                    match floor {
                        Floor::KPlus1 => {
                            if doubled > bound {
                                violations.push(Violation {
                                    identity: "2F <= binom(ell,k)".into(),
                                    cell: cell.clone(),
                                    detail: format!("2F = {doubled} > {bound}"),
                                });
                            } else if doubled == bound {
                                report.equality_cases.push(cell.clone());
                                let expected = ell % 2 == 0 && k % 2 == 1 && x == ell / 2 && y == 0;
                                if !expected {
                                    violations.push(Violation {
                                        identity: "equality characterization".into(),
                                        cell,
                                        detail: "unexpected equality case".into(),
                                    });
                                }
                            }
                        }
                        Floor::KPlus2 => {
                            if doubled >= bound {
                                violations.push(Violation {
                                    identity: "2F < binom(ell,k) with floor k+2".into(),
                                    cell,
                                    detail: format!("2F = {doubled} >= {bound}"),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    // With the k+1 floor, every characterized cell must actually occur.
    if floor == Floor::KPlus1 {
        for ell in (2..=ell_max).step_by(2) {
            for k in (1..ell).step_by(2) {
                let cell = GridCell {
                    ell,
                    k,
                    x: ell / 2,
                    y: 0,
                };
                if !report.equality_cases.contains(&cell) {
                    violations.push(Violation {
                        identity: "equality characterization".into(),
                        cell,
                        detail: "characterized equality case missing".into(),
                    });
                }
            }
        }
    }
    report.record(
        match floor {
            Floor::KPlus1 => "main inequality (floor k+1)",
            Floor::KPlus2 => "strict inequality (floor k+2)",
        },
        cells,
        violations,
    );
    Ok(report)
}

/// Exact checks of the seven identity families behind the main lemma:
///
/// 1. Σ_t C(t,x) = C(ℓ,k)
/// 2. C(t,x) = C(2k−t, x) for t ≤ k
/// 3. 2·F(x, ℓ−2x) = C(ℓ,k) − C(k,x) for 1 ≤ x ≤ ⌊ℓ/2⌋, adjudicating the
///    printed C(ℓ,2k) variant against C(ℓ,k)
/// 4. monotonicity of F(x0, ·) on both sides of y = ℓ−2x0
/// 5. C(k,x) = 0 exactly when ℓ = 2x and k is odd
/// 6. F(x,0) − F(x+1,0) = C(x,p(x))·C(ℓ−1−x, k−p(x)) for x ≥ ⌈ℓ/2⌉
/// 7. odd ℓ: F((ℓ+1)/2, 0) ≤ F((ℓ−1)/2, 1)
pub fn verify_section_identities(ell_max: u64) -> Result<SweepReport, LemmaError> {
    if ell_max < 2 {
        return Err(LemmaError::Range("ell_max must be at least 2".into()));
    }
    let mut report = SweepReport {
        ell_max,
        ..Default::default()
    };

    // (1) row sums
    let mut cells = 0u64;
    let mut bad = Vec::new();
    for ell in 2..=ell_max {
        for k in 1..ell {
            for x in 0..=ell / 2 {
                cells += 1;
                let mut sum: u128 = 0;
                for t in 0..=2 * k {
                    sum = sum
                        .checked_add(c_value(t, x, ell, k)?)
                        .ok_or_else(|| LemmaError::Overflow("C row sum".into()))?;
                }
                let expect = binom(ell as i64, k as i64);
                if sum != expect {
                    bad.push(Violation {
                        identity: "sum_t C(t,x) = binom(ell,k)".into(),
                        cell: GridCell { ell, k, x, y: 0 },
                        detail: format!("sum = {sum}, binom = {expect}"),
                    });
                }
            }
        }
    }
    report.record("sum_t C(t,x) = binom(ell,k)", cells, bad);

    // (2) palindrome symmetry
    let mut cells = 0u64;
    let mut bad = Vec::new();
    for ell in 2..=ell_max {
        for k in 1..ell {
            for x in 0..=ell / 2 {
                for t in 0..=k {
                    cells += 1;
                    let lhs = c_value(t, x, ell, k)?;
                    let rhs = c_value(2 * k - t, x, ell, k)?;
                    if lhs != rhs {
                        bad.push(Violation {
                            identity: "C(t,x) = C(2k-t,x)".into(),
                            cell: GridCell { ell, k, x, y: t },
                            detail: format!("C({t},{x}) = {lhs}, C({},{x}) = {rhs}", 2 * k - t),
                        });
                    }
                }
            }
        }
    }
    report.record("C(t,x) = C(2k-t,x)", cells, bad);

    // (3) half-split of the row sum, plus adjudication of the printed
    // binom(ell,2k) variant.
    let mut cells = 0u64;
    let mut bad = Vec::new();
    let mut printed_refuted: Option<GridCell> = None;
    let mut printed_refutations = 0u64;
    for ell in 2..=ell_max {
        for k in 1..ell {
            for x in 1..=ell / 2 {
                cells += 1;
                let f = f_value(
                    &LemmaParams {
                        ell,
                        k,
                        x,
                        y: ell - 2 * x,
                    },
                    Floor::KPlus1,
                )?;
                let ck = c_value(k, x, ell, k)?;
                let corrected = binom(ell as i64, k as i64);
                if 2 * f + ck != corrected {
                    bad.push(Violation {
                        identity: "2F(x,ell-2x) = binom(ell,k) - C(k,x)".into(),
                        cell: GridCell {
                            ell,
                            k,
                            x,
                            y: ell - 2 * x,
                        },
                        detail: format!("2F = {}, binom - C = {}", 2 * f, corrected - ck),
                    });
                }
                let printed = binom(ell as i64, 2 * k as i64);
                if 2 * f + ck != printed {
                    printed_refutations += 1;
                    if printed_refuted.is_none() {
                        printed_refuted = Some(GridCell {
                            ell,
                            k,
                            x,
                            y: ell - 2 * x,
                        });
                    }
                }
            }
        }
    }
    match printed_refuted {
        Some(cell) => report.adjudications.push(format!(
            "half-split identity holds with binom(ell,k); the binom(ell,2k) variant fails at \
             {printed_refutations} cells, first at ell={} k={} x={}",
            cell.ell, cell.k, cell.x
        )),
        None => bad.push(Violation {
            identity: "adjudication".into(),
            cell: GridCell {
                ell: 0,
                k: 0,
                x: 0,
                y: 0,
            },
            detail: "expected at least one cell separating binom(ell,k) from binom(ell,2k)".into(),
        }),
    }
    report.record("2F(x,ell-2x) = binom(ell,k) - C(k,x)", cells, bad);

    // (4) monotonicity in y
    let mut cells = 0u64;
    let mut bad = Vec::new();
    for ell in 2..=ell_max {
        for k in 1..ell {
            for x in 0..=ell {
                for y in 0..(ell - x) {
                    cells += 1;
                    let here = f_value(&LemmaParams { ell, k, x, y }, Floor::KPlus1)?;
                    let next = f_value(
                        &LemmaParams {
                            ell,
                            k,
                            x,
                            y: y + 1,
                        },
                        Floor::KPlus1,
                    )?;
                    let down_regime = (y as i64) >= ell as i64 - 2 * x as i64;
                    let holds = if down_regime {
                        next <= here
                    } else {
                        here <= next
                    };
                    if !holds {
                        bad.push(Violation {
                            identity: "F monotonicity in y".into(),
                            cell: GridCell { ell, k, x, y },
                            detail: format!(
                                "F(x,{y}) = {here}, F(x,{}) = {next}, regime {}",
                                y + 1,
                                if down_regime { "down" } else { "up" }
                            ),
                        });
                    }
                }
            }
        }
    }
    report.record("F monotonicity in y", cells, bad);

    // (5) C(k,x) vanishing characterization
    let mut cells = 0u64;
    let mut bad = Vec::new();
    for ell in 2..=ell_max {
        for k in 1..ell {
            for x in 1..=ell / 2 {
                cells += 1;
                let v = c_value(k, x, ell, k)?;
                let should_vanish = ell == 2 * x && k % 2 == 1;
                if (v == 0) != should_vanish {
                    bad.push(Violation {
                        identity: "C(k,x) = 0 iff ell = 2x and k odd".into(),
                        cell: GridCell { ell, k, x, y: 0 },
                        detail: format!("C(k,x) = {v}"),
                    });
                }
            }
        }
    }
    report.record("C(k,x) = 0 iff ell = 2x and k odd", cells, bad);

    // (6) telescoping difference of F(x,0)
    let mut cells = 0u64;
    let mut bad = Vec::new();
    for ell in 2..=ell_max {
        for k in 1..ell {
            for x in ell.div_ceil(2)..ell {
                cells += 1;
                let params = LemmaParams { ell, k, x, y: 0 };
                let here = f_value(&params, Floor::KPlus1)?;
                let next = f_value(
                    &LemmaParams {
                        ell,
                        k,
                        x: x + 1,
                        y: 0,
                    },
                    Floor::KPlus1,
                )?;
                let p = params.p_of_x();
                let expect = binom(x as i64, p)
                    .checked_mul(binom(ell as i64 - 1 - x as i64, k as i64 - p))
                    .ok_or_else(|| LemmaError::Overflow("delta".into()))?;
                if here < next || here - next != expect {
                    bad.push(Violation {
                        identity: "F(x,0) - F(x+1,0) telescoping".into(),
                        cell: GridCell { ell, k, x, y: 0 },
                        detail: format!(
                            "F(x,0) = {here}, F(x+1,0) = {next}, expected difference {expect}"
                        ),
                    });
                }
            }
        }
    }
    report.record("F(x,0) - F(x+1,0) telescoping", cells, bad);

    // (7) odd-ell comparison
    let mut cells = 0u64;
    let mut bad = Vec::new();
    for ell in (3..=ell_max).step_by(2) {
        for k in 1..ell {
            cells += 1;
            let hi = f_value(
                &LemmaParams {
                    ell,
                    k,
                    x: (ell + 1) / 2,
                    y: 0,
                },
                Floor::KPlus1,
            )?;
            let lo = f_value(
                &LemmaParams {
                    ell,
                    k,
                    x: (ell - 1) / 2,
                    y: 1,
                },
                Floor::KPlus1,
            )?;
            if hi > lo {
                bad.push(Violation {
                    identity: "odd ell: F((ell+1)/2,0) <= F((ell-1)/2,1)".into(),
                    cell: GridCell {
                        ell,
                        k,
                        x: (ell + 1) / 2,
                        y: 0,
                    },
                    detail: format!("F((ell+1)/2,0) = {hi} > F((ell-1)/2,1) = {lo}"),
                });
            }
        }
    }
    report.record("odd ell: F((ell+1)/2,0) <= F((ell-1)/2,1)", cells, bad);

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_zero_extension() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(5, -1), 0);
        assert_eq!(binom(2, 5), 0);
        assert_eq!(binom(0, 0), 1);
    }

    #[test]
    fn f_examples() {
        // equality case of the main inequality
        let f = f_value(
            &LemmaParams {
                ell: 4,
                k: 1,
                x: 2,
                y: 0,
            },
            Floor::KPlus1,
        )
        .unwrap();
        assert_eq!(f, 2);
        assert_eq!(2 * f, binom(4, 1));

        let f = f_value(
            &LemmaParams {
                ell: 5,
                k: 2,
                x: 2,
                y: 1,
            },
            Floor::KPlus1,
        )
        .unwrap();
        assert_eq!(f, 3);
        assert!(2 * f < binom(5, 2));

        let f = f_value(
            &LemmaParams {
                ell: 5,
                k: 2,
                x: 0,
                y: 0,
            },
            Floor::KPlus1,
        )
        .unwrap();
        assert_eq!(f, 0);
    }

    #[test]
    fn c_examples() {
        // vanishing case: ell = 2x, k odd, t = k
        assert_eq!(c_value(1, 2, 4, 1).unwrap(), 0);
        // single-term case
        assert_eq!(c_value(0, 1, 4, 1).unwrap(), 1);
        // palindrome instance
        assert_eq!(c_value(1, 2, 6, 2).unwrap(), c_value(3, 2, 6, 2).unwrap());
    }

    #[test]
    fn p_of_x_matches_ceiling() {
        let p = LemmaParams {
            ell: 5,
            k: 2,
            x: 3,
            y: 0,
        };
        // ceil((2+1-5)/2) = ceil(-1) = -1
        assert_eq!(p.p_of_x(), 3 - 1);
        let p = LemmaParams {
            ell: 4,
            k: 1,
            x: 2,
            y: 0,
        };
        // ceil((1+1-4)/2) = ceil(-1) = -1
        assert_eq!(p.p_of_x(), 1);
    }

    #[test]
    fn smallest_sweep_has_single_equality() {
        let report = verify_main_lemma(2, Floor::KPlus1).unwrap();
        assert!(report.clean(), "{:?}", report.violations);
        assert_eq!(
            report.equality_cases,
            vec![GridCell {
                ell: 2,
                k: 1,
                x: 1,
                y: 0
            }]
        );
    }

    #[test]
    fn sweep_to_8_is_clean() {
        let report = verify_main_lemma(8, Floor::KPlus1).unwrap();
        assert!(report.clean(), "{:?}", report.violations);
        let strict = verify_main_lemma(8, Floor::KPlus2).unwrap();
        assert!(strict.clean(), "{:?}", strict.violations);
    }

    #[test]
    fn identities_to_8_are_clean() {
        let report = verify_section_identities(8).unwrap();
        assert!(report.clean(), "{:?}", report.violations);
        assert_eq!(report.adjudications.len(), 1);
    }

    #[test]
    fn misprint_refuted_at_witness_cell() {
        // the half-split identity at ell=4, k=1, x=2: F = 2, C(k,x) = 0,
        // binom(4,1) = 4 works; the printed binom(4,2) = 6 does not.
        let f = f_value(
            &LemmaParams {
                ell: 4,
                k: 1,
                x: 2,
                y: 0,
            },
            Floor::KPlus1,
        )
        .unwrap();
        let ck = c_value(1, 2, 4, 1).unwrap();
        assert_eq!(2 * f + ck, binom(4, 1));
        assert_ne!(2 * f + ck, binom(4, 2));
    }

    #[test]
    fn row_sum_example_cell() {
        // ell = 4, k = 1, x = 2: the C-row sums to binom(4,1) = 4
        let total: u128 = (0..=2u64).map(|t| c_value(t, 2, 4, 1).unwrap()).sum();
        assert_eq!(total, binom(4, 1));
        // ell = 5, k = 2: the odd-ell comparison at a single cell
        let hi = f_value(
            &LemmaParams {
                ell: 5,
                k: 2,
                x: 3,
                y: 0,
            },
            Floor::KPlus1,
        )
        .unwrap();
        let lo = f_value(
            &LemmaParams {
                ell: 5,
                k: 2,
                x: 2,
                y: 1,
            },
            Floor::KPlus1,
        )
        .unwrap();
        assert!(hi <= lo);
    }

    #[test]
    fn floor_gap_at_equality_cells() {
        // at the equality cells (ell even, k odd, x = ell/2, y = 0) the
        // two floors differ by exactly binom(ell/2,(k+1)/2) * binom(ell/2,(k-1)/2)
        for ell in (2..=12u64).step_by(2) {
            for k in (1..ell).step_by(2) {
                let p = LemmaParams {
                    ell,
                    k,
                    x: ell / 2,
                    y: 0,
                };
                let wide = f_value(&p, Floor::KPlus1).unwrap();
                let strict = f_value(&p, Floor::KPlus2).unwrap();
                let gap = binom((ell / 2) as i64, ((k + 1) / 2) as i64)
                    * binom((ell / 2) as i64, ((k - 1) / 2) as i64);
                assert_eq!(wide - strict, gap, "ell={ell} k={k}");
            }
        }
    }

    #[test]
    fn f_at_y_zero_matches_single_sum() {
        // for x >= ceil(ell/2), F(x,0) collapses to
        // sum_{i=p(x)}^{k} binom(x,i) binom(ell-x, k-i)
        for ell in 2..=10u64 {
            for k in 1..ell {
                for x in ell.div_ceil(2)..=ell {
                    let params = LemmaParams { ell, k, x, y: 0 };
                    let f = f_value(&params, Floor::KPlus1).unwrap();
                    let p = params.p_of_x();
                    let direct: u128 = (p.max(0)..=k as i64)
                        .map(|i| binom(x as i64, i) * binom((ell - x) as i64, k as i64 - i))
                        .sum();
                    assert_eq!(f, direct, "ell={ell} k={k} x={x}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(f_value(
            &LemmaParams {
                ell: 3,
                k: 3,
                x: 0,
                y: 0
            },
            Floor::KPlus1
        )
        .is_err());
        assert!(f_value(
            &LemmaParams {
                ell: 4,
                k: 1,
                x: 3,
                y: 2
            },
            Floor::KPlus1
        )
        .is_err());
        assert!(c_value(0, 3, 4, 1).is_err());
        assert!(c_value(3, 1, 4, 1).is_err());
    }
}
