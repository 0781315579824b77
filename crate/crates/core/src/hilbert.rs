//! Hilbert function and series of monomial ideals and staircase quotients.
//!
//! Both count monomials *outside* a monomial ideal, degree by degree. The
//! counting runs the inclusion-exclusion over generator lcms in its organized
//! recursive form: split off one generator m and recurse on the remaining
//! ideal and on its colon by m, minimizing generators at every step so the
//! branching collapses. The ideal-side generating function is reported
//! through its numerator over (1-s)^k.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::staircase::Staircase;
use crate::{Error, Result};

/// Guard for the recursive counting; design-scale ideals stay far below it.
const MAX_GENERATORS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub arity: usize,
    /// Finite coefficient list h_0, h_1, ... of the quotient when the
    /// staircase is finite; `None` for positive-dimensional quotients.
    pub quotient: Option<Vec<u64>>,
    /// Numerator N(s) such that N(s)/(1-s)^arity counts the monomials
    /// *inside* the ideal degree by degree.
    pub ideal_numerator: Vec<BigInt>,
}

impl HilbertSeries {
    pub fn is_zero_dimensional(&self) -> bool {
        self.quotient.is_some()
    }

    /// Total count of standard monomials, when finite.
    pub fn quotient_total(&self) -> Option<u64> {
        self.quotient.as_ref().map(|h| h.iter().sum())
    }

    /// `1 + 2s + 3s^2 + 2s^3` for the quotient side, when finite.
    pub fn quotient_string(&self) -> Option<String> {
        self.quotient.as_ref().map(|h| {
            let terms: Vec<(BigInt, usize)> = h
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(d, &c)| (BigInt::from(c), d))
                .collect();
            polynomial_in_s(&terms)
        })
    }

    pub fn ideal_numerator_string(&self) -> String {
        let terms: Vec<(BigInt, usize)> = self
            .ideal_numerator
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (c.clone(), d))
            .collect();
        polynomial_in_s(&terms)
    }
}

fn polynomial_in_s(terms: &[(BigInt, usize)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (coeff, degree)) in terms.iter().enumerate() {
        let negative = coeff.is_negative();
        let abs = coeff.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let body = match degree {
            0 => abs.to_string(),
            1 if abs.is_one() => "s".to_string(),
            1 => format!("{abs}s"),
            d if abs.is_one() => format!("s^{d}"),
            d => format!("{abs}s^{d}"),
        };
        out.push_str(&body);
    }
    out
}

/// Discard duplicates and any generator divisible by another; a unit
/// generator collapses the list to just the unit.
fn minimal_generators(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if out.iter().any(|h| h.divides(g)) {
            continue;
        }
        out.retain(|h| !g.divides(h));
        out.push(g.clone());
    }
    out
}

fn check_arity(gens: &[Monomial], arity: usize) -> Result<()> {
    for g in gens {
        if g.arity() != arity {
            return Err(Error::ArityMismatch { expected: arity, found: g.arity() });
        }
    }
    Ok(())
}

/// Number of monomials of total degree exactly j in k variables.
fn orthant_count(j: i64, k: usize) -> BigUint {
    if j < 0 {
        return BigUint::zero();
    }
    let j = BigUint::from(j as u64);
    let k1 = BigUint::from(k as u64 - 1);
    binomial(j + &k1, k1)
}

/// Numerator of the generating function counting monomials *inside* the
/// ideal: split off the last generator m, then
/// N(I' + m) = N(I') + s^deg(m) * (1 - N(I' : m)).
fn inside_numerator(gens: &[Monomial], arity: usize) -> Vec<BigInt> {
    let gens = minimal_generators(gens);
    if gens.is_empty() {
        return vec![BigInt::zero()];
    }
    if gens.iter().any(Monomial::is_unit) {
        return vec![BigInt::one()];
    }
    if gens.len() == 1 {
        let d = gens[0].total_degree() as usize;
        let mut n = vec![BigInt::zero(); d + 1];
        n[d] = BigInt::one();
        return n;
    }
    let (pivot, rest) = gens.split_last().expect("nonempty");
    let n_rest = inside_numerator(rest, arity);
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| {
            Monomial::new(
                g.exponents()
                    .iter()
                    .zip(pivot.exponents())
                    .map(|(&a, &b)| a.saturating_sub(b))
                    .collect(),
            )
        })
        .collect();
    let n_colon = inside_numerator(&colon, arity);
    // n_rest + s^deg(pivot) * (1 - n_colon)
    let shift = pivot.total_degree() as usize;
    let mut out = n_rest;
    if out.len() < shift + n_colon.len() {
        out.resize(shift + n_colon.len(), BigInt::zero());
    }
    out[shift] += 1;
    for (d, c) in n_colon.iter().enumerate() {
        out[shift + d] -= c;
    }
    trim(&mut out);
    out
}

/// Count of degree-j monomials *not* in the ideal generated by `gens`.
pub fn hilbert_function(gens: &[Monomial], arity: usize, j: u32) -> Result<BigUint> {
    if arity == 0 {
        return Err(Error::ArityMismatch { expected: 1, found: 0 });
    }
    check_arity(gens, arity)?;
    let gens = minimal_generators(gens);
    if gens.len() > MAX_GENERATORS {
        return Err(Error::Unsupported(format!(
            "{} minimal generators is out of range",
            gens.len()
        )));
    }
    // outside(j) = orthant(j) - sum_d N_in[d] * orthant(j - d)
    let n_in = inside_numerator(&gens, arity);
    let mut outside: BigInt = orthant_count(i64::from(j), arity).into();
    for (d, c) in n_in.iter().enumerate() {
        if !c.is_zero() {
            let count: BigInt = orthant_count(i64::from(j) - d as i64, arity).into();
            outside -= c * count;
        }
    }
    outside
        .try_into()
        .map_err(|_| Error::Internal("negative Hilbert function value".into()))
}

/// Full series of the ideal: finite quotient coefficients when the quotient
/// is zero-dimensional, plus the ideal-side numerator in either case.
pub fn hilbert_series(gens: &[Monomial], arity: usize) -> Result<HilbertSeries> {
    if arity == 0 {
        return Err(Error::ArityMismatch { expected: 1, found: 0 });
    }
    check_arity(gens, arity)?;
    let gens = minimal_generators(gens);
    if gens.len() > MAX_GENERATORS {
        return Err(Error::Unsupported(format!(
            "{} minimal generators is out of range",
            gens.len()
        )));
    }

    let ideal_numerator = inside_numerator(&gens, arity);

    // outside numerator: 1 - N_in
    let mut outside_numerator = ideal_numerator.clone();
    for c in outside_numerator.iter_mut() {
        *c = -c.clone();
    }
    if outside_numerator.is_empty() {
        outside_numerator.push(BigInt::one());
    } else {
        outside_numerator[0] += 1;
    }
    trim(&mut outside_numerator);

    // zero-dimensional iff some pure power of every variable generates
    let zero_dim = !gens.iter().any(Monomial::is_unit)
        && (0..arity).all(|i| {
            gens.iter()
                .any(|g| g.exponent(i) > 0 && (0..arity).all(|j| j == i || g.exponent(j) == 0))
        });
    let unit_ideal = gens.iter().any(Monomial::is_unit);

    let quotient = if unit_ideal {
        Some(Vec::new())
    } else if zero_dim {
        // exact division of the outside numerator by (1-s)^k
        let mut poly = outside_numerator.clone();
        for _ in 0..arity {
            poly = divide_by_one_minus_s(&poly).ok_or_else(|| {
                Error::Internal("outside numerator not divisible by (1-s)^k".into())
            })?;
        }
        let coeffs: Option<Vec<u64>> = poly
            .iter()
            .map(|c| u64::try_from(c).ok())
            .collect();
        Some(coeffs.ok_or_else(|| Error::Internal("negative quotient coefficient".into()))?)
    } else {
        None
    };

    Ok(HilbertSeries { arity, quotient, ideal_numerator })
}

/// Series of a finite staircase: coefficient j counts members of degree j.
pub fn staircase_series(model: &Staircase) -> HilbertSeries {
    let h = model.degree_histogram();
    let k = model.arity();
    // N_out = h(s) * (1-s)^k, ideal numerator = 1 - N_out
    let mut n_out: Vec<BigInt> = h.iter().map(|&c| BigInt::from(c)).collect();
    if n_out.is_empty() {
        n_out.push(BigInt::zero());
    }
    for _ in 0..k {
        n_out = multiply_by_one_minus_s(&n_out);
    }
    let mut ideal_numerator = n_out;
    for c in ideal_numerator.iter_mut() {
        *c = -c.clone();
    }
    ideal_numerator[0] += 1;
    trim(&mut ideal_numerator);
    HilbertSeries { arity: k, quotient: Some(h), ideal_numerator }
}

fn trim(poly: &mut Vec<BigInt>) {
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
}

fn multiply_by_one_minus_s(poly: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); poly.len() + 1];
    for (d, c) in poly.iter().enumerate() {
        out[d] += c;
        out[d + 1] -= c;
    }
    let mut out = out;
    trim(&mut out);
    out
}

/// Exact division by (1-s): partial sums; `None` when a remainder is left.
fn divide_by_one_minus_s(poly: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut quotient = Vec::with_capacity(poly.len());
    let mut carry = BigInt::zero();
    for c in poly {
        carry += c;
        quotient.push(carry.clone());
    }
    if carry.is_zero() {
        quotient.pop();
        if quotient.is_empty() {
            quotient.push(BigInt::zero());
        }
        Some(quotient)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn example_ideal() -> Vec<Monomial> {
        // x^3, x*y^2, y^4 in two variables
        vec![m(&[3, 0]), m(&[1, 2]), m(&[0, 4])]
    }

    #[test]
    fn worked_example_function() {
        let gens = example_ideal();
        let values: Vec<u64> = (0..6)
            .map(|j| {
                hilbert_function(&gens, 2, j)
                    .unwrap()
                    .try_into()
                    .unwrap()
            })
            .collect();
        assert_eq!(values, vec![1, 2, 3, 2, 0, 0]);
    }

    #[test]
    fn worked_example_series() {
        let hs = hilbert_series(&example_ideal(), 2).unwrap();
        assert_eq!(hs.quotient, Some(vec![1, 2, 3, 2]));
        assert_eq!(hs.quotient_string().unwrap(), "1 + 2s + 3s^2 + 2s^3");
        // monomials inside the ideal: (2s^3 + s^4 - 2s^5)/(1-s)^2
        assert_eq!(hs.ideal_numerator_string(), "2s^3 + s^4 - 2s^5");
        assert_eq!(hs.quotient_total(), Some(8));
    }

    #[test]
    fn first_order_saturated_ideal() {
        // x_i^2 and all pairs x_i*x_j in 7 variables: HS = 1 + 7s
        let mut gens = Vec::new();
        for i in 0..7 {
            let mut e = vec![0u32; 7];
            e[i] = 2;
            gens.push(Monomial::new(e));
        }
        for i in 0..7 {
            for j in i + 1..7 {
                let mut e = vec![0u32; 7];
                e[i] = 1;
                e[j] = 1;
                gens.push(Monomial::new(e));
            }
        }
        assert_eq!(hilbert_function(&gens, 7, 1).unwrap(), 7u32.into());
        let hs = hilbert_series(&gens, 7).unwrap();
        assert_eq!(hs.quotient, Some(vec![1, 7]));
        assert_eq!(hs.quotient_string().unwrap(), "1 + 7s");
    }

    #[test]
    fn empty_generators_count_the_orthant() {
        for k in 1..=5usize {
            for j in 0..=12u32 {
                let expect = orthant_count(i64::from(j), k);
                assert_eq!(hilbert_function(&[], k, j).unwrap(), expect);
            }
        }
        let hs = hilbert_series(&[], 3).unwrap();
        assert_eq!(hs.quotient, None);
        assert_eq!(hs.ideal_numerator_string(), "0");
    }

    #[test]
    fn unit_ideal_has_empty_quotient() {
        let hs = hilbert_series(&[m(&[0, 0])], 2).unwrap();
        assert_eq!(hs.quotient, Some(vec![]));
        assert_eq!(hilbert_function(&[m(&[0, 0])], 2, 3).unwrap(), 0u32.into());
    }

    #[test]
    fn staircase_series_counts_degrees() {
        let unit = Staircase::from_exponents(2, vec![vec![0, 0]]).unwrap();
        let hs = staircase_series(&unit);
        assert_eq!(hs.quotient, Some(vec![1]));
        assert_eq!(hs.quotient_string().unwrap(), "1");
        // the staircase ideal of {1} is generated by x and y
        assert_eq!(hs.ideal_numerator_string(), "2s - s^2");
    }

    #[test]
    fn inclusion_exclusion_matches_brute_force() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..40 {
            let k = rng.gen_range(1..=4usize);
            let gens: Vec<Monomial> = (0..rng.gen_range(0..=5usize))
                .map(|_| {
                    Monomial::new((0..k).map(|_| rng.gen_range(0..=4u32)).collect())
                })
                .filter(|g| !g.is_unit())
                .collect();
            for j in 0..=10u32 {
                let fast = hilbert_function(&gens, k, j).unwrap();
                let brute = brute_force_outside(&gens, k, j);
                assert_eq!(fast, brute.into(), "k={k} j={j} gens={gens:?}");
            }
        }
    }

    fn brute_force_outside(gens: &[Monomial], k: usize, j: u32) -> u64 {
        fn rec(k: usize, j: u32, prefix: &mut Vec<u32>, gens: &[Monomial], count: &mut u64) {
            if prefix.len() == k - 1 {
                prefix.push(j - prefix.iter().sum::<u32>());
                let m = Monomial::new(prefix.clone());
                if !gens.iter().any(|g| g.divides(&m)) {
                    *count += 1;
                }
                prefix.pop();
                return;
            }
            let used: u32 = prefix.iter().sum();
            for e in 0..=(j - used) {
                prefix.push(e);
                rec(k, j, prefix, gens, count);
                prefix.pop();
            }
        }
        let mut count = 0;
        rec(k, j, &mut Vec::new(), gens, &mut count);
        count
    }
}
