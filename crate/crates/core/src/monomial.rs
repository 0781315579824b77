//! Monomials as exponent vectors of fixed arity.

use num_rational::BigRational;
use num_traits::One;

use crate::vars::Vars;
use crate::{Error, Result};

/// A power product x1^a1 * ... * xk^ak stored as its exponent vector.
///
/// The derived `Ord` compares exponent vectors lexicographically and is used
/// only as a canonical storage key; monomial *term* comparisons always go
/// through [`crate::TermOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The constant monomial 1.
    pub fn unit(arity: usize) -> Self {
        Monomial { exponents: vec![0; arity] }
    }

    /// The monomial x_index.
    pub fn variable(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index out of range");
        let mut exponents = vec![0; arity];
        exponents[index] = 1;
        Monomial { exponents }
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Exponent-wise sum; panics on arity mismatch.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiply by a single variable.
    pub fn times_variable(&self, index: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[index] += 1;
        Monomial { exponents }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.arity() == other.arity()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// `self / divisor` when the division is exact.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&divisor.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: point.len() });
        }
        let mut value = BigRational::one();
        for (coord, &e) in point.iter().zip(&self.exponents) {
            for _ in 0..e {
                value *= coord;
            }
        }
        Ok(value)
    }

    /// New monomial with coordinates i and j swapped.
    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.swap(i, j);
        Monomial { exponents }
    }

    /// Render against variable names: `x1^2*x3`, or `1` for the unit.
    pub fn to_string_with(&self, vars: &Vars) -> String {
        assert_eq!(vars.arity(), self.arity(), "monomial/vars arity mismatch");
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    vars.name(i).to_string()
                } else {
                    format!("{}^{}", vars.name(i), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}
