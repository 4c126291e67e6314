//! Oracles shared by the integration and acceptance tests. Nothing here uses
//! the crate's character or subgroup code: representations are built as
//! floating-point matrices from generator images, subgroups are found by
//! subset search, and counts come from closed formulas.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::f64::consts::PI;

use num_complex::Complex64;
use strong_gelfand::character::ClassFunction;
use strong_gelfand::group::{Family, FiniteGroup};

pub const TOL: f64 = 1e-9;

type Mat = [[Complex64; 2]; 2];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn close(x: &Mat, y: &Mat) -> bool {
    (0..2).all(|i| (0..2).all(|j| (x[i][j] - y[i][j]).norm() < 1e-9))
}

fn scalar(z: Complex64) -> Mat {
    [[z, c(0.0, 0.0)], [c(0.0, 0.0), z]]
}

fn root(m: usize, k: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64)
}

/// Extends generator images to a homomorphism by walking the Cayley graph;
/// `None` if two paths to one element disagree.
fn extend(g: &FiniteGroup, images: &[Mat]) -> Option<Vec<Mat>> {
    let mut rho: Vec<Option<Mat>> = vec![None; g.order()];
    rho[g.identity()] = Some(scalar(c(1.0, 0.0)));
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let rx = rho[x].unwrap();
        for (&s, img) in g.generators().iter().zip(images) {
            let y = g.mul(x, s);
            let ry = mat_mul(&rx, img);
            match &rho[y] {
                None => {
                    rho[y] = Some(ry);
                    queue.push_back(y);
                }
                Some(existing) if !close(existing, &ry) => return None,
                Some(_) => {}
            }
        }
    }
    rho.into_iter().collect()
}

fn traces_on_classes(g: &FiniteGroup, rho: &[Mat], dim: usize) -> Vec<Complex64> {
    g.classes().reps.iter().map(|&x| if dim == 1 { rho[x][0][0] } else { rho[x][0][0] + rho[x][1][1] }).collect()
}

fn float_norm(g: &FiniteGroup, chi: &[Complex64]) -> f64 {
    let classes = g.classes();
    chi.iter().zip(&classes.sizes).map(|(v, &s)| s as f64 * v.norm_sqr()).sum::<f64>() / g.order() as f64
}

/// Irreducible characters of a cyclic, dihedral or dicyclic group as float
/// vectors over class representatives, from explicit matrix representations.
pub fn float_irreducibles(g: &FiniteGroup) -> Vec<Vec<Complex64>> {
    let mut found: Vec<Vec<Complex64>> = Vec::new();
    let keep = |chi: Vec<Complex64>, found: &mut Vec<Vec<Complex64>>| {
        if (float_norm(g, &chi) - 1.0).abs() < 1e-9 && !found.iter().any(|f| same(f, &chi)) {
            found.push(chi);
        }
    };
    let gens = g.generators().len();
    let orders: Vec<usize> = g.generators().iter().map(|&s| g.element_order(s)).collect();
    // One-dimensional: each generator to a root of unity of its own order.
    let mut choice = vec![0usize; gens];
    loop {
        let images: Vec<Mat> = choice.iter().zip(&orders).map(|(&k, &o)| scalar(root(o, k as i64))).collect();
        if let Some(rho) = extend(g, &images) {
            keep(traces_on_classes(g, &rho, 1), &mut found);
        }
        let mut i = 0;
        while i < gens {
            choice[i] += 1;
            if choice[i] < orders[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == gens {
            break;
        }
    }
    // Two-dimensional: a ↦ diag(ω^j, ω^-j), b ↦ [[0, s], [1, 0]].
    if let Some(m) = g.rotation_order().filter(|_| gens == 2) {
        for j in 1..m as i64 {
            for s in [1.0, -1.0] {
                let a = [[root(m, j), c(0.0, 0.0)], [c(0.0, 0.0), root(m, -j)]];
                let b = [[c(0.0, 0.0), c(s, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
                if let Some(rho) = extend(g, &[a, b]) {
                    keep(traces_on_classes(g, &rho, 2), &mut found);
                }
            }
        }
    }
    found
}

pub fn same(x: &[Complex64], y: &[Complex64]) -> bool {
    x.len() == y.len() && x.iter().zip(y).all(|(a, b)| (a - b).norm() < TOL)
}

pub fn approx_row(f: &ClassFunction) -> Vec<Complex64> {
    f.values().iter().map(|v| v.approx()).collect()
}

/// Whether every exact row matches a distinct oracle row within `TOL`.
pub fn matches_up_to_permutation(exact: &[ClassFunction], oracle: &[Vec<Complex64>]) -> bool {
    if exact.len() != oracle.len() {
        return false;
    }
    let mut used = vec![false; oracle.len()];
    exact.iter().all(|row| {
        let a = approx_row(row);
        match (0..oracle.len()).find(|&k| !used[k] && same(&a, &oracle[k])) {
            Some(k) => {
                used[k] = true;
                true
            }
            None => false,
        }
    })
}

/// All subgroups by exhaustive search over subsets containing the identity.
pub fn brute_force_subgroup_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    assert!(n <= 20, "subset search is exponential");
    let others: Vec<usize> = (0..n).filter(|&x| x != g.identity()).collect();
    let mut count = 0;
    for mask in 0u32..(1 << others.len()) {
        let mut member = vec![false; n];
        member[g.identity()] = true;
        for (bit, &x) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                member[x] = true;
            }
        }
        let closed = (0..n).filter(|&x| member[x]).all(|x| (0..n).filter(|&y| member[y]).all(|y| member[g.mul(x, y)]));
        if closed {
            count += 1;
        }
    }
    count
}

pub fn divisor_count(n: usize) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count()
}

pub fn divisor_sum(n: usize) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
}

/// Number of subgroups from closed formulas.
pub fn subgroup_count_formula(family: &Family) -> usize {
    match *family {
        Family::Cyclic(n) => divisor_count(n),
        Family::Dihedral(n) => divisor_count(n) + divisor_sum(n),
        Family::Dicyclic(1) => 3,
        Family::Dicyclic(n) => divisor_count(2 * n) + divisor_sum(n),
        Family::Product(..) => unimplemented!(),
    }
}

/// Number of conjugacy classes from closed formulas.
pub fn class_count_formula(family: &Family) -> usize {
    match *family {
        Family::Cyclic(n) => n,
        Family::Dihedral(1) => 2,
        Family::Dihedral(2) => 4,
        Family::Dihedral(n) if n % 2 == 1 => (n + 3) / 2,
        Family::Dihedral(n) => n / 2 + 3,
        Family::Dicyclic(1) => 4,
        Family::Dicyclic(n) => n + 3,
        Family::Product(..) => unimplemented!(),
    }
}

/// `⟨f, g⟩` over a group given only by per-element float values.
pub fn float_inner_over_elements(f: &[Complex64], g: &[Complex64]) -> Complex64 {
    f.iter().zip(g).map(|(a, b)| a * b.conj()).sum::<Complex64>() / f.len() as f64
}
