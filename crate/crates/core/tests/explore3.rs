//! Scratch: time the larger fans.

use std::path::PathBuf;

use algdes::design::Design;
use algdes::fan::{enumerate_fan, state_geometry, FanLimits};
use algdes::rational::from_int;
use algdes::vars::Vars;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn example2_design() -> Design {
    let coords: [(i64, i64); 16] = [
        (2, 0), (2, 1), (2, 2), (1, 2),
        (0, 2), (-1, 2), (-2, 2), (-2, 1),
        (-2, 0), (-2, -1), (-2, -2), (-1, -2),
        (0, -2), (1, -2), (2, -2), (2, -1),
    ];
    let points = coords
        .iter()
        .map(|&(a, b)| vec![from_int(a), from_int(b)])
        .collect();
    Design::new(Vars::numbered("x", 2), points).unwrap()
}

#[test]
fn example2_fan_is_single() {
    let design = example2_design();
    let t0 = std::time::Instant::now();
    let fan = enumerate_fan(&design, &FanLimits::default()).unwrap();
    println!("example2: {} models ({:?})", fan.models.len(), t0.elapsed());
}

#[test]
fn pb8_fan() {
    let design = Design::from_csv_path(fixture("pb8.csv")).unwrap();
    let t0 = std::time::Instant::now();
    let fan = enumerate_fan(&design, &FanLimits::default()).unwrap();
    let sizes: Vec<(usize, bool)> = fan
        .classes
        .iter()
        .map(|c| (c.members.len(), c.closed))
        .collect();
    println!(
        "pb8: {} models, classes {:?} ({:?})",
        fan.models.len(),
        sizes,
        t0.elapsed()
    );
    let t1 = std::time::Instant::now();
    let geo = state_geometry(&fan);
    println!(
        "pb8 polytope: {} vertices, min degree {} ({:?})",
        geo.vertices.len(),
        geo.min_total_degree,
        t1.elapsed()
    );
}

#[test]
fn frac262_fan() {
    let design = Design::from_csv_path(fixture("frac262.csv")).unwrap();
    let t0 = std::time::Instant::now();
    let fan = enumerate_fan(&design, &FanLimits::default()).unwrap();
    let mut summary: Vec<(usize, bool, u32, Vec<u64>)> = fan
        .classes
        .iter()
        .map(|c| {
            let rep = &fan.models[c.members[0]];
            (c.members.len(), c.closed, rep.total_degree, rep.series.clone())
        })
        .collect();
    summary.sort();
    println!(
        "frac262: {} models, {} classes ({:?})",
        fan.models.len(),
        fan.classes.len(),
        t0.elapsed()
    );
    for s in summary {
        println!("  {s:?}");
    }
}
