//! Shared helpers for the integration suites.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use algdes::design::Design;
use algdes::monomial::Monomial;
use algdes::parse::{parse_monomial, parse_polynomial};
use algdes::polynomial::Polynomial;
use algdes::staircase::Staircase;
use algdes::vars::Vars;
use algdes::TermOrder;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn load(name: &str) -> Design {
    Design::from_csv_path(fixture(name)).expect("fixture parses")
}

pub fn p(s: &str, vars: &Vars) -> Polynomial {
    parse_polynomial(s, vars).expect("polynomial parses")
}

pub fn mono(s: &str, vars: &Vars) -> Monomial {
    parse_monomial(s, vars).expect("monomial parses")
}

/// Model monomials as a set of canonical strings.
pub fn staircase_names(model: &Staircase, vars: &Vars) -> BTreeSet<String> {
    model.iter().map(|m| m.to_string_with(vars)).collect()
}

pub fn model_names(design: &Design, order: &TermOrder) -> BTreeSet<String> {
    staircase_names(&design.model(order).expect("model"), design.vars())
}

pub fn names(list: &[&str]) -> BTreeSet<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// The 16-point response-surface design: a 5x5 grid with the 3x3 interior
/// removed.
pub fn response_surface_16() -> Design {
    let coords: [(i64, i64); 16] = [
        (2, 0), (2, 1), (2, 2), (1, 2),
        (0, 2), (-1, 2), (-2, 2), (-2, 1),
        (-2, 0), (-2, -1), (-2, -2), (-1, -2),
        (0, -2), (1, -2), (2, -2), (2, -1),
    ];
    let points = coords
        .iter()
        .map(|&(a, b)| vec![algdes::rational::from_int(a), algdes::rational::from_int(b)])
        .collect();
    Design::new(Vars::numbered("x", 2), points).expect("valid design")
}

/// Deterministic valid random ordering matrices (entries -3..=3).
pub fn random_matrix_orders(k: usize, count: usize, seed: u64) -> Vec<TermOrder> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let rows: Vec<Vec<_>> = (0..k)
            .map(|_| {
                (0..k)
                    .map(|_| algdes::rational::from_int(rng.gen_range(-3..=3)))
                    .collect()
            })
            .collect();
        if let Ok(order) = TermOrder::matrix(rows) {
            out.push(order);
        }
    }
    out
}
