//! Monomial term orders: Lex, DegLex, DegRevLex, matrix orders and weight
//! orders with a total tiebreak.
//!
//! Index 0 is always the highest-ranked variable, so Lex compares exponents
//! left to right. DegRevLex compares total degree first and breaks ties on
//! the rightmost differing exponent, the smaller exponent winning.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::QMatrix;
use crate::monomial::Monomial;
use crate::rational::rational_to_string;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    DegLex,
    DegRevLex,
    /// Full-rank matrix whose columns each start with a positive entry;
    /// compares image vectors lexicographically.
    Matrix(Vec<Vec<BigRational>>),
    /// Non-negative weight vector refined by a total tiebreak order.
    Weight { weights: Vec<BigRational>, tiebreak: Box<TermOrder> },
}

/// Check the ordering-matrix conditions: full rank and, in every column, a
/// positive first nonzero entry. Non-square input is a dimension error.
pub fn validate_order_matrix(rows: &[Vec<BigRational>]) -> Result<bool> {
    let k = rows.len();
    if k == 0 || rows.iter().any(|r| r.len() != k) {
        return Err(Error::InvalidOrderMatrix("matrix must be square and nonempty".into()));
    }
    for col in 0..k {
        match rows.iter().map(|r| &r[col]).find(|v| !v.is_zero()) {
            Some(v) if *v > BigRational::zero() => {}
            _ => return Ok(false),
        }
    }
    let m = QMatrix::from_rows(rows.to_vec());
    Ok(m.rank() == k)
}

impl TermOrder {
    /// Construct a matrix order, rejecting matrices that do not define one.
    pub fn matrix(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        if validate_order_matrix(&rows)? {
            Ok(TermOrder::Matrix(rows))
        } else {
            Err(Error::InvalidOrderMatrix(
                "matrix must have full rank and positive first nonzero entry in each column".into(),
            ))
        }
    }

    /// Weight order with an explicit total tiebreak.
    pub fn weight(weights: Vec<BigRational>, tiebreak: TermOrder) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeight("weight vector must be nonempty".into()));
        }
        if weights.iter().any(|w| *w < BigRational::zero()) {
            return Err(Error::InvalidWeight("weights must be non-negative".into()));
        }
        Ok(TermOrder::Weight { weights, tiebreak: Box::new(tiebreak) })
    }

    /// Weight order with the default DegRevLex tiebreak.
    pub fn weight_degrevlex(weights: Vec<BigRational>) -> Result<Self> {
        Self::weight(weights, TermOrder::DegRevLex)
    }

    /// Arity pinned by the order itself, if any.
    pub fn fixed_arity(&self) -> Option<usize> {
        match self {
            TermOrder::Matrix(rows) => Some(rows.len()),
            TermOrder::Weight { weights, .. } => Some(weights.len()),
            _ => None,
        }
    }

    /// Total comparison of two monomials.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch { expected: a.arity(), found: b.arity() });
        }
        if let Some(k) = self.fixed_arity() {
            if k != a.arity() {
                return Err(Error::ArityMismatch { expected: k, found: a.arity() });
            }
        }
        Ok(self.cmp_exponents(a.exponents(), b.exponents()))
    }

    fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => lex(a, b),
            TermOrder::DegLex => degree(a, b).then_with(|| lex(a, b)),
            TermOrder::DegRevLex => degree(a, b).then_with(|| revlex_tie(a, b)),
            TermOrder::Matrix(rows) => {
                for row in rows {
                    let mut dot = BigRational::zero();
                    for (w, (&x, &y)) in row.iter().zip(a.iter().zip(b)) {
                        if x != y {
                            dot += w * BigRational::from_integer((i64::from(x) - i64::from(y)).into());
                        }
                    }
                    match dot.cmp(&BigRational::zero()) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Weight { weights, tiebreak } => {
                let mut dot = BigRational::zero();
                for (w, (&x, &y)) in weights.iter().zip(a.iter().zip(b)) {
                    if x != y {
                        dot += w * BigRational::from_integer((i64::from(x) - i64::from(y)).into());
                    }
                }
                match dot.cmp(&BigRational::zero()) {
                    Ordering::Equal => tiebreak.cmp_exponents(a, b),
                    other => other,
                }
            }
        }
    }

    /// Short text form for reports.
    pub fn name(&self) -> String {
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::DegLex => "deglex".into(),
            TermOrder::DegRevLex => "degrevlex".into(),
            TermOrder::Matrix(rows) => {
                let body = rows
                    .iter()
                    .map(|r| r.iter().map(rational_to_string).collect::<Vec<_>>().join(","))
                    .collect::<Vec<_>>()
                    .join(";");
                format!("matrix[{body}]")
            }
            TermOrder::Weight { weights, tiebreak } => {
                let w = weights.iter().map(rational_to_string).collect::<Vec<_>>().join(",");
                format!("weight[{w}];{}", tiebreak.name())
            }
        }
    }
}

fn degree(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db)
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// DegRevLex tie rule on equal degrees: scan from the right; whoever has the
/// smaller exponent at the first difference is the larger monomial.
fn revlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for (&x, &y) in a.iter().zip(b).rev() {
        match x.cmp(&y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
