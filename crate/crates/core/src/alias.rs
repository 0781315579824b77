//! Aliasing of polynomial effects over a design.
//!
//! Two polynomials are algebraically aliased when they agree on every design
//! point, i.e. their difference lies in the design ideal, i.e. their normal
//! forms coincide. Statistical aliasing of collections compares the spans of
//! their design-evaluation vectors instead, decided by exact rank tests.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::design::Design;
use crate::linalg::QMatrix;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use crate::{Error, Result};

/// Which monomials an alias table partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialUniverse {
    /// All 2^k square-free monomials; over a two-level design these
    /// represent every aliasing class.
    SquareFree,
    /// All monomials of total degree at most the bound.
    UpToDegree(u32),
}

/// One row: the universe monomials sharing a normal form, keyed by it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AliasRow {
    /// Shared normal form; a quotient-basis monomial for regular fractions.
    pub key: Polynomial,
    /// Members ascending under the active order; the key's monomial, when in
    /// the universe, is the first member.
    pub members: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AliasTable {
    pub order: TermOrder,
    pub rows: Vec<AliasRow>,
}

/// f and g take the same value at every design point.
pub fn algebraically_aliased(
    f: &Polynomial,
    g: &Polynomial,
    design: &Design,
    order: &TermOrder,
) -> Result<bool> {
    if f.arity() != design.arity() || g.arity() != design.arity() {
        return Err(Error::ArityMismatch {
            expected: design.arity(),
            found: if f.arity() != design.arity() { f.arity() } else { g.arity() },
        });
    }
    let gb = design.groebner_basis(order)?;
    Ok(gb.normal_form(&(f - g))?.is_zero())
}

fn universe_monomials(universe: MonomialUniverse, k: usize) -> Result<Vec<Monomial>> {
    match universe {
        MonomialUniverse::SquareFree => {
            if k > 20 {
                return Err(Error::Unsupported(format!(
                    "square-free universe of 2^{k} monomials is out of range"
                )));
            }
            let mut out = Vec::with_capacity(1 << k);
            for mask in 0u64..(1 << k) {
                out.push(Monomial::new(
                    (0..k).map(|i| u32::from(mask >> i & 1 == 1)).collect(),
                ));
            }
            Ok(out)
        }
        MonomialUniverse::UpToDegree(bound) => {
            let mut out = Vec::new();
            let mut current = vec![0u32; k];
            fn rec(k: usize, bound: u32, var: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
                if var == k {
                    out.push(Monomial::new(current.clone()));
                    return;
                }
                let used: u32 = current[..var].iter().sum();
                for e in 0..=(bound - used) {
                    current[var] = e;
                    rec(k, bound, var + 1, current, out);
                }
                current[var] = 0;
            }
            rec(k, bound, 0, &mut current, &mut out);
            if out.len() > 2_000_000 {
                return Err(Error::Unsupported("monomial universe too large".into()));
            }
            Ok(out)
        }
    }
}

/// Partition a monomial universe by normal form over a two-level design.
/// For regular fractions every key is a quotient-basis monomial and the row
/// containing 1 lists the defining-contrast group.
pub fn alias_table(
    design: &Design,
    order: &TermOrder,
    universe: MonomialUniverse,
) -> Result<AliasTable> {
    if !design.is_two_level() {
        return Err(Error::Unsupported(
            "alias tables require a two-level (+1/-1) design; compare general designs pairwise".into(),
        ));
    }
    let gb = design.groebner_basis(order)?;
    let mut grouped: BTreeMap<Vec<(Monomial, BigRational)>, Vec<Monomial>> = BTreeMap::new();
    for m in universe_monomials(universe, design.arity())? {
        let nf = gb.normal_form(&Polynomial::from_monomial(m.clone(), BigRational::from_integer(BigInt::from(1))))?;
        let key: Vec<(Monomial, BigRational)> =
            nf.terms().map(|(mm, c)| (mm.clone(), c.clone())).collect();
        grouped.entry(key).or_default().push(m);
    }
    let arity = design.arity();
    let mut rows: Vec<AliasRow> = Vec::with_capacity(grouped.len());
    for (key_terms, mut members) in grouped {
        members.sort_by(|a, b| order.compare(a, b).expect("consistent arity"));
        let key = Polynomial::from_terms(arity, key_terms)?;
        rows.push(AliasRow { key, members });
    }
    // sort rows by the active order on their key's leading monomial
    let mut keyed: Vec<(Option<Monomial>, AliasRow)> = rows
        .into_iter()
        .map(|r| (r.key.leading_monomial(order).ok(), r))
        .collect();
    keyed.sort_by(|(a, _), (b, _)| match (a, b) {
        (None, None) => std::cmp::Ordering::Equal,
        (None, Some(_)) => std::cmp::Ordering::Less,
        (Some(_), None) => std::cmp::Ordering::Greater,
        (Some(x), Some(y)) => order.compare(x, y).expect("consistent arity"),
    });
    Ok(AliasTable { order: order.clone(), rows: keyed.into_iter().map(|(_, r)| r).collect() })
}

/// Span equality of the design-evaluation vectors of two collections,
/// decided by exact Gaussian elimination:
/// rank F = rank G = rank (F union G).
pub fn statistically_aliased(
    fs: &[Polynomial],
    gs: &[Polynomial],
    design: &Design,
) -> Result<bool> {
    if fs.is_empty() || gs.is_empty() {
        return Err(Error::Unsupported("statistical aliasing needs nonempty collections".into()));
    }
    let rows_f: Vec<Vec<BigRational>> = fs
        .iter()
        .map(|f| design.support_vector(f))
        .collect::<Result<_>>()?;
    let rows_g: Vec<Vec<BigRational>> = gs
        .iter()
        .map(|g| design.support_vector(g))
        .collect::<Result<_>>()?;
    let rank_f = QMatrix::from_rows(rows_f.clone()).rank();
    let rank_g = QMatrix::from_rows(rows_g.clone()).rank();
    let mut all = rows_f;
    all.extend(rows_g);
    let rank_all = QMatrix::from_rows(all).rank();
    Ok(rank_f == rank_g && rank_g == rank_all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::rational::from_int as q;
    use crate::vars::Vars;

    fn p(s: &str, vars: &Vars) -> Polynomial {
        parse_polynomial(s, vars).unwrap()
    }

    #[test]
    fn full_factorial_has_no_aliasing() {
        let design = Design::two_level_full_factorial(3).unwrap();
        let table = alias_table(&design, &TermOrder::DegRevLex, MonomialUniverse::SquareFree)
            .unwrap();
        assert_eq!(table.rows.len(), 8);
        assert!(table.rows.iter().all(|r| r.members.len() == 1));
    }

    #[test]
    fn self_aliasing_is_reflexive() {
        let design = Design::plackett_burman_8();
        let vars = design.vars().clone();
        let f = p("x1*x2 + 3", &vars);
        assert!(algebraically_aliased(&f, &f, &design, &TermOrder::DegRevLex).unwrap());
        assert!(statistically_aliased(
            std::slice::from_ref(&f),
            std::slice::from_ref(&f),
            &design
        )
        .unwrap());
    }

    #[test]
    fn distinct_main_effects_not_aliased_on_pb8() {
        let design = Design::plackett_burman_8();
        let vars = design.vars().clone();
        let f = p("x1", &vars);
        let g = p("x2", &vars);
        // oracle: the two support vectors differ on at least one run
        let sf = design.support_vector(&f).unwrap();
        let sg = design.support_vector(&g).unwrap();
        assert_ne!(sf, sg);
        assert!(!algebraically_aliased(&f, &g, &design, &TermOrder::DegRevLex).unwrap());
    }

    #[test]
    fn scaling_is_statistical_but_not_algebraic() {
        let design = Design::plackett_burman_8();
        let vars = design.vars().clone();
        let f = p("x1*x2 - 2", &vars);
        let cf = f.scale(&q(5));
        assert!(statistically_aliased(
            std::slice::from_ref(&f),
            std::slice::from_ref(&cf),
            &design
        )
        .unwrap());
        assert!(!algebraically_aliased(&f, &cf, &design, &TermOrder::DegRevLex).unwrap());
    }

    #[test]
    fn non_two_level_design_is_rejected() {
        let vars = Vars::numbered("x", 2);
        let design = Design::new(
            vars,
            vec![vec![q(0), q(1)], vec![q(1), q(2)]],
        )
        .unwrap();
        assert!(matches!(
            alias_table(&design, &TermOrder::Lex, MonomialUniverse::SquareFree),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn universe_up_to_degree() {
        let ms = universe_monomials(MonomialUniverse::UpToDegree(2), 2).unwrap();
        assert_eq!(ms.len(), 6); // 1, x, y, x^2, xy, y^2
    }
}
