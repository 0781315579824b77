//! Scratch: find a rational axial distance reproducing the sqrt(2) CCD fan.

use algdes::design::Design;
use algdes::fan::{enumerate_fan, FanLimits};
use algdes::rational::{from_int, from_ratio};
use algdes::vars::Vars;
use num_rational::BigRational;

fn ccd(axial: BigRational, origin: bool) -> Design {
    let one = from_int(1);
    let zero = from_int(0);
    let mut points = Vec::new();
    for sx in [-1i64, 1] {
        for sy in [-1i64, 1] {
            for sz in [-1i64, 1] {
                points.push(vec![from_int(sx), from_int(sy), from_int(sz)]);
            }
        }
    }
    let _ = one;
    for axis in 0..3 {
        for sign in [-1i64, 1] {
            let mut p = vec![zero.clone(), zero.clone(), zero.clone()];
            p[axis] = if sign < 0 { -axial.clone() } else { axial.clone() };
            points.push(p);
        }
    }
    if origin {
        points.push(vec![zero.clone(), zero.clone(), zero.clone()]);
    }
    Design::new(Vars::numbered("x", 3), points).unwrap()
}

#[test]
fn axial_scan() {
    for (num, den) in [(7i64, 5i64), (3, 2), (17, 12), (4, 3), (10, 7), (2, 1)] {
        let a = from_ratio(num, den);
        for origin in [false, true] {
            let design = ccd(a.clone(), origin);
            let fan = enumerate_fan(&design, &FanLimits::default()).unwrap();
            let sizes: Vec<usize> = fan.classes.iter().map(|c| c.members.len()).collect();
            println!(
                "axial {num}/{den} origin={origin}: {} models, classes {:?}",
                fan.models.len(),
                sizes
            );
        }
    }
}
