//! Downward-closed exponent sets: the staircase models identified by designs.

use std::collections::BTreeSet;

use crate::monomial::Monomial;
use crate::vars::Vars;
use crate::{Error, Result};

/// A finite set of exponent vectors with the order-ideal property: every
/// componentwise-smaller vector of a member is also a member. These index the
/// hierarchical (saturated) polynomial models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    arity: usize,
    monomials: BTreeSet<Monomial>,
}

impl Staircase {
    /// Build and validate downward closure.
    pub fn new<I>(arity: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let monomials: BTreeSet<Monomial> = monomials.into_iter().collect();
        for m in &monomials {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: m.arity() });
            }
        }
        for m in &monomials {
            for i in 0..arity {
                if m.exponent(i) > 0 {
                    let mut down = m.exponents().to_vec();
                    down[i] -= 1;
                    if !monomials.contains(&Monomial::new(down)) {
                        return Err(Error::NotDownwardClosed(format!(
                            "missing divisor of exponent vector {:?}",
                            m.exponents()
                        )));
                    }
                }
            }
        }
        Ok(Staircase { arity, monomials })
    }

    pub fn from_exponents(arity: usize, exponents: Vec<Vec<u32>>) -> Result<Self> {
        Staircase::new(arity, exponents.into_iter().map(Monomial::new))
    }

    /// Internal constructor for sets already known to be downward closed.
    pub(crate) fn new_unchecked(arity: usize, monomials: BTreeSet<Monomial>) -> Self {
        Staircase { arity, monomials }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    /// Members in canonical (storage) order.
    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.monomials.iter().cloned().collect()
    }

    /// Canonical exponent listing used for hashing and report output.
    pub fn sorted_exponents(&self) -> Vec<Vec<u32>> {
        self.monomials.iter().map(|m| m.exponents().to_vec()).collect()
    }

    /// Sum of all exponents: the linear-aberration cost of the model.
    pub fn total_degree(&self) -> u32 {
        self.monomials.iter().map(Monomial::total_degree).sum()
    }

    /// Componentwise exponent sums (one coordinate per variable).
    pub fn state_vector(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.arity];
        for m in &self.monomials {
            for (acc, &e) in v.iter_mut().zip(m.exponents()) {
                *acc += u64::from(e);
            }
        }
        v
    }

    /// Count of members per total degree, trailing zeros trimmed: the
    /// Hilbert-series coefficients of the model.
    pub fn degree_histogram(&self) -> Vec<u64> {
        let mut h = Vec::new();
        for m in &self.monomials {
            let d = m.total_degree() as usize;
            if h.len() <= d {
                h.resize(d + 1, 0);
            }
            h[d] += 1;
        }
        h
    }

    /// Minimal generators of the complement monomial ideal: the monomials
    /// just outside the staircase, i.e. the candidate leading terms.
    pub fn border(&self) -> Vec<Monomial> {
        border_of_set(self.arity, &self.monomials)
    }

    /// Staircase with variable coordinates permuted by swapping i and j.
    pub fn swapped(&self, i: usize, j: usize) -> Staircase {
        Staircase {
            arity: self.arity,
            monomials: self.monomials.iter().map(|m| m.swapped(i, j)).collect(),
        }
    }

    pub fn to_strings(&self, vars: &Vars) -> Vec<String> {
        self.monomials.iter().map(|m| m.to_string_with(vars)).collect()
    }
}

/// Border of a downward-closed monomial set: m outside the set whose every
/// single-variable quotient lies inside.
pub(crate) fn border_of_set(arity: usize, set: &BTreeSet<Monomial>) -> Vec<Monomial> {
    let mut out = BTreeSet::new();
    if set.is_empty() {
        return vec![Monomial::unit(arity)];
    }
    for m in set {
        'next: for i in 0..arity {
            let candidate = m.times_variable(i);
            if set.contains(&candidate) {
                continue;
            }
            for j in 0..arity {
                if candidate.exponent(j) > 0 {
                    let mut down = candidate.exponents().to_vec();
                    down[j] -= 1;
                    if !set.contains(&Monomial::new(down)) {
                        continue 'next;
                    }
                }
            }
            out.insert(candidate);
        }
    }
    out.into_iter().collect()
}
