//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::rational::rational_to_string;
use crate::vars::Vars;
use crate::{Error, Result};

/// Finite map from monomials to nonzero rational coefficients; the zero
/// polynomial is the empty map, so equality is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Polynomial::zero(arity);
        p.add_term(Monomial::unit(arity), c);
        p
    }

    pub fn one(arity: usize) -> Self {
        Polynomial::constant(arity, BigRational::one())
    }

    pub fn variable(arity: usize, index: usize) -> Self {
        let mut p = Polynomial::zero(arity);
        p.add_term(Monomial::variable(arity, index), BigRational::one());
        p
    }

    pub fn from_monomial(m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero(m.arity());
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Polynomial::zero(arity);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: m.arity() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Add `c * m` in place, pruning a resulting zero.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.arity(), self.arity, "term arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// `c * x^m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        assert_eq!(m.arity(), self.arity, "term arity mismatch");
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(mm, v)| (m.mul(mm), v * c)).collect(),
        }
    }

    /// Order-maximal term of a nonzero polynomial.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(Monomial, BigRational)> {
        let mut best: Option<&Monomial> = None;
        for m in self.terms.keys() {
            best = Some(match best {
                None => m,
                Some(b) => {
                    if order.compare(m, b)? == std::cmp::Ordering::Greater {
                        m
                    } else {
                        b
                    }
                }
            });
        }
        let m = best.ok_or(Error::ZeroPolynomial)?;
        Ok((m.clone(), self.terms[m].clone()))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<Monomial> {
        Ok(self.leading_term(order)?.0)
    }

    /// Rescale so the leading coefficient is 1.
    pub fn monic(&self, order: &TermOrder) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(order)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: point.len() });
        }
        let mut acc = BigRational::zero();
        for (m, c) in self.terms() {
            acc += c * m.evaluate(point)?;
        }
        Ok(acc)
    }

    /// Deterministic rendering with terms descending under `order`.
    pub fn to_string_with(&self, vars: &Vars, order: &TermOrder) -> String {
        assert_eq!(vars.arity(), self.arity, "vars arity mismatch");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| order.compare(b, a).expect("consistent arity"));
        let mut out = String::new();
        for (i, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let negative = *c < BigRational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff_is_one = abs.is_one();
            if m.is_unit() {
                out.push_str(&rational_to_string(&abs));
            } else if coeff_is_one {
                out.push_str(&m.to_string_with(vars));
            } else {
                out.push_str(&rational_to_string(&abs));
                out.push('*');
                out.push_str(&m.to_string_with(vars));
            }
        }
        out
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::rational::from_int as q;

    fn vars() -> Vars {
        Vars::new(vec!["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &vars()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x+1") * &p("x-1"), p("x^2-1"));
    }

    #[test]
    fn adding_zero_is_identity() {
        let f = p("3/2*x^2*z - y + 1");
        assert_eq!(f.try_add(&Polynomial::zero(3)).unwrap(), f);
    }

    #[test]
    fn division_tableau_product() {
        // (x^2+3)(x+2) - 5 = x^3 + 2x^2 + 3x + 1
        let lhs = (&p("x^2+3") * &p("x+2")).try_add(&p("-5")).unwrap();
        assert_eq!(lhs, p("x^3+2*x^2+3*x+1"));
    }

    #[test]
    fn leading_terms() {
        let f = p("x^3+2*x^2+3*x+1");
        let (m, c) = f.leading_term(&TermOrder::Lex).unwrap();
        assert_eq!(m, Monomial::new(vec![3, 0, 0]));
        assert_eq!(c, q(1));

        let g = p("x*y^2 + x^2*z");
        let (m, c) = g.leading_term(&TermOrder::DegRevLex).unwrap();
        assert_eq!(m, Monomial::new(vec![1, 2, 0]));
        assert_eq!(c, q(1));

        let constant = p("7");
        let (m, c) = constant.leading_term(&TermOrder::DegLex).unwrap();
        assert_eq!(m, Monomial::unit(3));
        assert_eq!(c, q(7));

        assert!(Polynomial::zero(3).leading_term(&TermOrder::Lex).is_err());
    }

    #[test]
    fn printing_descends_under_order() {
        let f = p("1 - y + 3/2*x^2*z");
        assert_eq!(f.to_string_with(&vars(), &TermOrder::DegRevLex), "3/2*x^2*z - y + 1");
        assert_eq!(Polynomial::zero(3).to_string_with(&vars(), &TermOrder::Lex), "0");
        assert_eq!(p("-x").to_string_with(&vars(), &TermOrder::Lex), "-x");
    }

    #[test]
    fn evaluation() {
        let f = p("x^2*y - 2*z + 1");
        let v = f.evaluate(&[q(2), q(3), q(5)]).unwrap();
        assert_eq!(v, q(3));
    }
}
