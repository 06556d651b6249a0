#![allow(dead_code)]

use qnoeth_core::matrix::Matrix;
use qnoeth_core::rep::Representation;
use qnoeth_core::{PrimeField, Quiver};
use rand::Rng;

pub fn jordan() -> Quiver {
    Quiver::from_parts(&["x"], &[("l", "x", "x")], &[]).unwrap()
}

pub fn a2() -> Quiver {
    Quiver::from_parts(&["x", "y"], &[("a", "x", "y")], &[]).unwrap()
}

pub fn kronecker() -> Quiver {
    Quiver::from_parts(&["x", "y"], &[("a", "x", "y"), ("b", "x", "y")], &[]).unwrap()
}

pub fn two_loops() -> Quiver {
    Quiver::from_parts(&["x"], &[("a", "x", "x"), ("b", "x", "x")], &[]).unwrap()
}

pub fn cycle_branch() -> Quiver {
    Quiver::from_parts(
        &["x", "y", "z"],
        &[("a", "x", "y"), ("b", "y", "x"), ("c", "y", "z")],
        &[],
    )
    .unwrap()
}

pub fn ray_simple() -> Quiver {
    Quiver::from_parts(&["x", "y"], &[("a", "x", "y")], &[("r", "y")]).unwrap()
}

/// Random representation with the given dimensions.
pub fn random_rep<R: Rng>(rng: &mut R, q: &Quiver, f: PrimeField, dims: &[usize]) -> Representation {
    let maps = q
        .arrow_decls()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target], dims[a.source]);
            let entries: Vec<i64> = (0..r * c).map(|_| rng.gen_range(0..f.p() as i64)).collect();
            Matrix::from_rows(f, r, c, &entries).unwrap()
        })
        .collect();
    Representation::new(q.clone(), f, dims.to_vec(), maps).unwrap()
}

/// Random dimension vector with total at most `max_total`.
pub fn random_dims<R: Rng>(rng: &mut R, n: usize, max_total: usize) -> Vec<usize> {
    let mut dims = vec![0; n];
    let total = rng.gen_range(0..=max_total);
    for _ in 0..total {
        dims[rng.gen_range(0..n)] += 1;
    }
    dims
}
