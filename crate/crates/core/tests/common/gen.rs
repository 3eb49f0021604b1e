//! Random inputs for property tests.
#![allow(dead_code)]

use lutz_core::front::random::{random_front, random_knot};
use lutz_core::linalg::{determinant, IntMatrix, IntSymMatrix};
use lutz_core::lutz::{lutz_pair_with_host, LutzSign};
use lutz_core::{ContactCoefficient, FrontDiagram, SurgeryPresentation, Zigzag};
use num_traits::Zero;
use rand::Rng;

pub fn random_sym<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> IntSymMatrix {
    let mut rows = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let x = rng.gen_range(-bound..=bound);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    IntSymMatrix::from_rows(&rows).unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    IntMatrix::from_rows(&data).unwrap()
}

/// Product of random elementary row operations applied to the identity.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            rows[0][0] = -1;
        }
        return IntMatrix::from_rows(&rows).unwrap();
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..3) {
            0 => rows.swap(i, j),
            1 => rows[i].iter_mut().for_each(|x| *x = -*x),
            _ => {
                let f = rng.gen_range(-2..=2);
                for k in 0..n {
                    rows[i][k] += f * rows[j][k];
                }
            }
        }
    }
    IntMatrix::from_rows(&rows).unwrap()
}

pub fn random_sign<R: Rng>(rng: &mut R) -> LutzSign {
    if rng.gen_bool(0.5) {
        LutzSign::Positive
    } else {
        LutzSign::Negative
    }
}

pub fn random_coefficient<R: Rng>(rng: &mut R) -> ContactCoefficient {
    if rng.gen_bool(0.5) {
        ContactCoefficient::Plus
    } else {
        ContactCoefficient::Minus
    }
}

/// Unknot or right trefoil with up to `max` random stabilizations.
pub fn stabilized<R: Rng>(rng: &mut R, max: usize) -> FrontDiagram {
    let mut d = if rng.gen_bool(0.5) { FrontDiagram::unknot() } else { FrontDiagram::right_trefoil() };
    for _ in 0..rng.gen_range(0..=max) {
        let z = if rng.gen_bool(0.5) { Zigzag::Up } else { Zigzag::Down };
        d = d.stabilize(0, z).unwrap();
    }
    d
}

fn nonsingular(p: &SurgeryPresentation) -> bool {
    !determinant(p.linking_matrix().as_matrix()).unwrap().is_zero()
}

/// Surgery on a random subset of the components of a random front, with a
/// nonsingular linking matrix.
pub fn random_host<R: Rng>(rng: &mut R, max_events: usize) -> SurgeryPresentation {
    loop {
        let d = random_front(rng, max_events);
        let n = d.num_components().unwrap();
        let mut coeffs = Vec::new();
        for c in 0..n {
            if rng.gen_bool(0.7) {
                coeffs.push((c, random_coefficient(rng)));
            }
        }
        let p = SurgeryPresentation::from_front(&d, None, &coeffs).unwrap();
        if nonsingular(&p) {
            return p;
        }
    }
}

/// A host and a Lutz pair on a knot split from it, as (host, combined, tb, rot).
pub fn split_case<R: Rng>(rng: &mut R, sign: LutzSign) -> (SurgeryPresentation, SurgeryPresentation, i64, i64) {
    let host = random_host(rng, 24);
    let knot = random_knot(rng, 24);
    let inv = knot.classical_invariants().unwrap();
    let pair = lutz_core::lutz_pair(&knot, 0, sign).unwrap();
    (host.clone(), host.disjoint_union(&pair), inv.tb(0), inv.rot(0))
}

/// A host and a Lutz pair on a component of the same random link, so that
/// `L_1` may link host components.
pub fn linked_case<R: Rng>(rng: &mut R, sign: LutzSign) -> (SurgeryPresentation, SurgeryPresentation, i64, i64) {
    loop {
        let d = random_front(rng, 30);
        let n = d.num_components().unwrap();
        if n < 2 {
            continue;
        }
        let l1 = rng.gen_range(0..n);
        let host: Vec<(usize, ContactCoefficient)> =
            (0..n).filter(|&c| c != l1).map(|c| (c, random_coefficient(rng))).collect();
        let base = SurgeryPresentation::from_front(&d, None, &host).unwrap();
        if !nonsingular(&base) {
            continue;
        }
        let inv = d.classical_invariants().unwrap();
        let full = lutz_pair_with_host(&d, &host, l1, sign).unwrap();
        return (base, full, inv.tb(l1), inv.rot(l1));
    }
}
