//! Division with remainder, Buchberger's algorithm, reduced Groebner bases,
//! normal forms, and quotient (standard-monomial) bases.

use std::collections::BTreeSet;

use num_rational::BigRational;

use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use crate::staircase::Staircase;
use crate::{Error, Result};

/// A generator-presented ideal. Generators are stored verbatim: the ideal is
/// basis-independent but its presentation is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    arity: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(arity: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() || generators.iter().any(Polynomial::is_zero) {
            return Err(Error::InvalidGenerators);
        }
        for g in &generators {
            if g.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: g.arity() });
            }
        }
        Ok(Ideal { arity, generators })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// A Groebner basis for some ideal under a fixed term order. When `reduced`
/// is set the elements are monic, mutually reduced, and sorted by ascending
/// leading monomial, which makes the basis the unique one for (ideal, order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    arity: usize,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub(crate) fn new_reduced(order: TermOrder, arity: usize, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis { order, arity, elements, reduced: true }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("nonzero basis element"))
            .collect()
    }

    /// Unique remainder of f on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.elements.is_empty() {
            return Ok(f.clone());
        }
        Ok(divide(f, &self.elements, &self.order)?.remainder)
    }

    /// Ideal membership via a vanishing normal form.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The monomials outside the leading-term ideal. Errors unless that set
    /// is finite (zero-dimensional ideal).
    pub fn quotient_basis(&self) -> Result<Staircase> {
        let lts = self.leading_monomials();
        // ideal contains a constant: the quotient is trivial
        if lts.iter().any(Monomial::is_unit) {
            return Ok(Staircase::new_unchecked(self.arity, BTreeSet::new()));
        }
        // zero-dimensional iff a pure power of every variable leads some element
        let mut bounds = vec![None; self.arity];
        for lt in &lts {
            let support: Vec<usize> =
                (0..self.arity).filter(|&i| lt.exponent(i) > 0).collect();
            if support.len() == 1 {
                let i = support[0];
                let e = lt.exponent(i);
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        let bounds: Vec<u32> = bounds
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotZeroDimensional)?;

        let mut out = BTreeSet::new();
        let mut current = vec![0u32; self.arity];
        collect_staircase(&lts, &bounds, &mut current, 0, &mut out);
        Ok(Staircase::new_unchecked(self.arity, out))
    }
}

fn collect_staircase(
    lts: &[Monomial],
    bounds: &[u32],
    current: &mut Vec<u32>,
    var: usize,
    out: &mut BTreeSet<Monomial>,
) {
    if var == bounds.len() {
        let m = Monomial::new(current.clone());
        if !lts.iter().any(|lt| lt.divides(&m)) {
            out.insert(m);
        }
        return;
    }
    for e in 0..bounds[var] {
        current[var] = e;
        collect_staircase(lts, bounds, current, var + 1, out);
    }
    current[var] = 0;
}

/// Result of multivariate division: `f = sum quotients[i]*divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Divide f by an ordered list of divisors. No monomial of the remainder is
/// divisible by any divisor's leading term; divisors are tried in list order.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &TermOrder) -> Result<Division> {
    if divisors.is_empty() {
        return Err(Error::EmptyDivisors);
    }
    for d in divisors {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if d.arity() != f.arity() {
            return Err(Error::ArityMismatch { expected: f.arity(), found: d.arity() });
        }
    }
    let lts: Vec<(Monomial, BigRational)> = divisors
        .iter()
        .map(|d| d.leading_term(order))
        .collect::<Result<_>>()?;

    let mut quotients = vec![Polynomial::zero(f.arity()); divisors.len()];
    let mut remainder = Polynomial::zero(f.arity());
    let mut p = f.clone();
    while !p.is_zero() {
        let (lm, lc) = p.leading_term(order)?;
        match lts.iter().position(|(m, _)| m.divides(&lm)) {
            Some(i) => {
                let qm = lm.checked_div(&lts[i].0).expect("divisibility checked");
                let qc = &lc / &lts[i].1;
                quotients[i].add_term(qm.clone(), qc.clone());
                p = &p - &divisors[i].mul_term(&qm, &qc);
            }
            None => {
                remainder.add_term(lm.clone(), lc.clone());
                let single = Polynomial::from_monomial(lm, lc);
                p = &p - &single;
            }
        }
    }
    Ok(Division { quotients, remainder })
}

/// S-polynomial: the leading terms of the two inputs cancel against their lcm.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    let (fm, fc) = f.leading_term(order)?;
    let (gm, gc) = g.leading_term(order)?;
    if f.arity() != g.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), found: g.arity() });
    }
    let l = fm.lcm(&gm);
    let fmul = l.checked_div(&fm).expect("lcm divisibility");
    let gmul = l.checked_div(&gm).expect("lcm divisibility");
    Ok(&f.mul_term(&fmul, &fc.recip()) - &g.mul_term(&gmul, &gc.recip()))
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprime-leading-term criterion, followed by reduction to
/// the unique monic reduced basis.
pub fn buchberger(ideal: &Ideal, order: &TermOrder) -> Result<GroebnerBasis> {
    let arity = ideal.arity();
    if let Some(k) = order.fixed_arity() {
        if k != arity {
            return Err(Error::ArityMismatch { expected: k, found: arity });
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        basis.push(g.monic(order)?);
    }
    let mut lts: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order))
        .collect::<Result<_>>()?;

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // normal strategy: pop the pair whose lcm is smallest under the order
        let mut best = 0;
        let mut best_lcm = lts[pairs[0].0].lcm(&lts[pairs[0].1]);
        for (idx, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lts[i].lcm(&lts[j]);
            if order.compare(&l, &best_lcm)? == std::cmp::Ordering::Less {
                best = idx;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        if lts[i].coprime(&lts[j]) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        if s.is_zero() {
            continue;
        }
        let r = divide(&s, &basis, order)?.remainder;
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order)?;
        let lt = r.leading_monomial(order)?;
        let new = basis.len();
        basis.push(r);
        lts.push(lt);
        for t in 0..new {
            pairs.push((t, new));
        }
    }

    Ok(reduce_basis(arity, basis, order)?)
}

/// Interreduce a (possibly redundant) Groebner basis into the reduced one.
pub(crate) fn reduce_basis(
    arity: usize,
    mut basis: Vec<Polynomial>,
    order: &TermOrder,
) -> Result<GroebnerBasis> {
    // minimize: drop elements whose leading term another element divides
    basis.retain(|g| !g.is_zero());
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lt_i = basis[i].leading_monomial(order)?;
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lt_j = basis[j].leading_monomial(order)?;
            if lt_j.divides(&lt_i) && (lt_j != lt_i || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // fully reduce each element against the others
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                .collect();
            if others.is_empty() {
                break;
            }
            let r = divide(&minimal[i], &others, order)?.remainder;
            if r != minimal[i] {
                changed = true;
                minimal[i] = r;
            }
        }
        minimal.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }

    let mut monic: Vec<Polynomial> = minimal
        .into_iter()
        .map(|g| g.monic(order))
        .collect::<Result<_>>()?;
    let mut keyed: Vec<(Monomial, Polynomial)> = monic
        .drain(..)
        .map(|g| Ok((g.leading_monomial(order)?, g)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|(a, _), (b, _)| order.compare(a, b).expect("consistent arity"));
    Ok(GroebnerBasis::new_reduced(
        order.clone(),
        arity,
        keyed.into_iter().map(|(_, g)| g).collect(),
    ))
}
