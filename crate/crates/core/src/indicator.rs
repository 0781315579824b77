//! Indicator functions of fractions inside a base design.
//!
//! The indicator of a fraction D inside a base design N is the unique
//! interpolator over N's quotient basis taking the value 1 on D and 0 on
//! N \ D. Its zero coefficients certify orthogonality statements, and
//! intersections/unions of fractions become products/inclusion-exclusion of
//! indicators reduced to normal form.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::design::Design;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct IndicatorFunction {
    base: Design,
    fraction_points: Vec<Vec<BigRational>>,
    order: TermOrder,
    g: Polynomial,
}

/// Indicator of a fraction given as a design; every fraction point must lie
/// in the base.
pub fn indicator_of(base: &Design, fraction: &Design, order: &TermOrder) -> Result<IndicatorFunction> {
    if base.vars() != fraction.vars() {
        return Err(Error::Unsupported(
            "fraction and base designs must share the same variables".into(),
        ));
    }
    indicator_of_points(base, fraction.points(), order)
}

/// Indicator of an arbitrary (possibly empty) subset of the base points.
pub fn indicator_of_points(
    base: &Design,
    points: &[Vec<BigRational>],
    order: &TermOrder,
) -> Result<IndicatorFunction> {
    for (row, point) in points.iter().enumerate() {
        if !base.contains_point(point) {
            return Err(Error::FractionNotInBase { row });
        }
    }
    let values: Vec<BigRational> = base
        .points()
        .iter()
        .map(|p| {
            if points.contains(p) {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let g = base.interpolate(&values, order)?;
    // fraction points in base order, deduplicated
    let fraction_points: Vec<Vec<BigRational>> = base
        .points()
        .iter()
        .filter(|p| points.contains(*p))
        .cloned()
        .collect();
    Ok(IndicatorFunction { base: base.clone(), fraction_points, order: order.clone(), g })
}

impl IndicatorFunction {
    pub fn polynomial(&self) -> &Polynomial {
        &self.g
    }

    pub fn base(&self) -> &Design {
        &self.base
    }

    pub fn fraction_points(&self) -> &[Vec<BigRational>] {
        &self.fraction_points
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Orthogonality audit for two square-free monomials over a two-level
    /// base: the sum of x^(a+b) g(x) over the base, which equals the sum of
    /// x^(a+b) over the fraction. Orthogonal iff the sum vanishes.
    pub fn orthogonality(&self, a: &Monomial, b: &Monomial) -> Result<(BigRational, bool)> {
        if !self.base.is_two_level() {
            return Err(Error::Unsupported(
                "orthogonality audits require a two-level (+1/-1) base design".into(),
            ));
        }
        if !a.is_square_free() || !b.is_square_free() {
            return Err(Error::Unsupported(
                "orthogonality audits take square-free monomials".into(),
            ));
        }
        let prod = a.mul(b);
        let mut sum = BigRational::zero();
        for point in &self.fraction_points {
            sum += prod.evaluate(point)?;
        }
        let orthogonal = sum.is_zero();
        Ok((sum, orthogonal))
    }

    /// Indicator of the intersection of the two fractions: NF(g1*g2).
    pub fn intersect(&self, other: &IndicatorFunction) -> Result<IndicatorFunction> {
        self.check_compatible(other)?;
        let gb = self.base.groebner_basis(&self.order)?;
        let g = gb.normal_form(&(&self.g * &other.g))?;
        let fraction_points: Vec<Vec<BigRational>> = self
            .fraction_points
            .iter()
            .filter(|p| other.fraction_points.contains(*p))
            .cloned()
            .collect();
        let out = IndicatorFunction {
            base: self.base.clone(),
            fraction_points,
            order: self.order.clone(),
            g,
        };
        out.verify_pointwise()?;
        Ok(out)
    }

    /// Indicator of the union: NF(g1 + g2 - g1*g2).
    pub fn union(&self, other: &IndicatorFunction) -> Result<IndicatorFunction> {
        self.check_compatible(other)?;
        let gb = self.base.groebner_basis(&self.order)?;
        let sum = &(&self.g + &other.g) - &(&self.g * &other.g);
        let g = gb.normal_form(&sum)?;
        let mut fraction_points = self.fraction_points.clone();
        for p in &other.fraction_points {
            if !fraction_points.contains(p) {
                fraction_points.push(p.clone());
            }
        }
        // keep base-point order
        let fraction_points: Vec<Vec<BigRational>> = self
            .base
            .points()
            .iter()
            .filter(|p| fraction_points.contains(*p))
            .cloned()
            .collect();
        let out = IndicatorFunction {
            base: self.base.clone(),
            fraction_points,
            order: self.order.clone(),
            g,
        };
        out.verify_pointwise()?;
        Ok(out)
    }

    fn check_compatible(&self, other: &IndicatorFunction) -> Result<()> {
        if self.base != other.base || self.order != other.order {
            return Err(Error::Unsupported(
                "indicator functions must share the same base design and order".into(),
            ));
        }
        Ok(())
    }

    fn verify_pointwise(&self) -> Result<()> {
        for point in self.base.points() {
            let expected = if self.fraction_points.contains(point) {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            if self.g.evaluate(point)? != expected {
                return Err(Error::Internal(
                    "combined indicator disagrees with the point-set operation".into(),
                ));
            }
        }
        Ok(())
    }
}
