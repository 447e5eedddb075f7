//! Instance family and brute-force oracles shared by the integration
//! tests. The oracles use only integer arithmetic and direct enumeration.

#![allow(dead_code)]

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zonotopal::VectorList;

pub const SEED: u64 = 0x5EED_2011;

pub fn list(dim: usize, vs: &[&[i64]]) -> VectorList {
    VectorList::new(dim, vs.iter().map(|v| v.to_vec()).collect()).unwrap()
}

pub fn repeated_unit(k: usize) -> VectorList {
    VectorList::new(1, vec![vec![1]; k + 1]).unwrap()
}

/// Nonzero integer vectors with entries in `[-2, 2]`.
pub fn small_vectors(dim: usize) -> Vec<Vec<i64>> {
    (0..dim)
        .map(|_| -2..=2i64)
        .multi_cartesian_product()
        .filter(|v| v.iter().any(|&c| c != 0))
        .collect()
}

/// Rank by fraction-free elimination over `i128`.
pub fn rank(vectors: &[&[i64]], dim: usize) -> usize {
    let mut rows: Vec<Vec<i128>> = vectors.iter().map(|v| v.iter().map(|&c| c as i128).collect()).collect();
    let mut r = 0;
    for c in 0..dim {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for row in &mut rows[r + 1..] {
            let b = row[c];
            for (v, p) in row.iter_mut().zip(&pivot) {
                *v = *v * pivot[c] - p * b;
            }
            let g = row.iter().fold(0i128, |g, &v| gcd(g, v.abs()));
            if g > 1 {
                row.iter_mut().for_each(|v| *v /= g);
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn subset_rank(x: &VectorList, subset: &[usize]) -> usize {
    let vs: Vec<&[i64]> = subset.iter().map(|&i| x.vector(i)).collect();
    rank(&vs, x.dim())
}

pub fn spans(x: &VectorList) -> bool {
    subset_rank(x, &x.all_indices()) == x.dim()
}

/// Number of independent sublists of each size.
pub fn independent_counts(x: &VectorList) -> Vec<usize> {
    (0..=x.dim())
        .map(|k| (0..x.len()).combinations(k).filter(|s| subset_rank(x, s) == k).count())
        .collect()
}

pub fn bases(x: &VectorList) -> Vec<Vec<usize>> {
    (0..x.len()).combinations(x.dim()).filter(|s| subset_rank(x, s) == x.dim()).collect()
}

/// Bases counted by external activity: `e ∉ B` is active when it is the
/// smallest element of the unique circuit inside `B ∪ {e}`, found here as
/// the minimal dependent subset containing `e`.
pub fn external_activity_counts(x: &VectorList) -> Vec<usize> {
    let mut counts = vec![0; x.len() - x.dim() + 1];
    for b in bases(x) {
        let mut active = 0;
        for e in (0..x.len()).filter(|e| !b.contains(e)) {
            let circuit = (0..=b.len())
                .flat_map(|k| b.iter().copied().combinations(k))
                .map(|mut c| {
                    c.push(e);
                    c
                })
                .find(|c| subset_rank(x, c) < c.len())
                .expect("B ∪ {e} is dependent");
            if circuit.iter().all(|&i| i >= e) {
                active += 1;
            }
        }
        counts[active] += 1;
    }
    counts
}

#[derive(Clone, Debug)]
pub struct Member {
    pub name: String,
    pub list: VectorList,
}

fn member(dim: usize, vs: Vec<Vec<i64>>) -> Member {
    let name = format!("{vs:?}");
    Member { name, list: VectorList::new(dim, vs).unwrap() }
}

fn sample(rng: &mut ChaCha8Rng, dim: usize, m: usize, count: usize) -> Vec<Member> {
    let pool = small_vectors(dim);
    let mut out = Vec::new();
    while out.len() < count {
        let vs: Vec<Vec<i64>> = (0..m).map(|_| pool.choose(rng).unwrap().clone()).collect();
        let x = VectorList::new(dim, vs.clone()).unwrap();
        if spans(&x) {
            out.push(member(dim, vs));
        }
    }
    out
}

/// Sizes of the random strata, per `(dim, m)`.
pub struct FamilyShape {
    pub plane: [(usize, usize); 3],
    pub space: [(usize, usize); 4],
}

pub const SHAPE: FamilyShape = FamilyShape {
    plane: [(4, 40), (5, 30), (6, 20)],
    space: [(3, 25), (4, 25), (5, 15), (6, 8)],
};

/// The instance family: every spanning multiset over `[-2, 2]` in dimension
/// one with at most six vectors, every spanning pair and triple in
/// dimension two, seeded samples of longer planar lists and of spatial
/// lists, and the repeated unit vector `1^{k+1}` for `k ≤ 5`.
pub fn family() -> Vec<Member> {
    let mut out = Vec::new();
    for k in 0..=5 {
        out.push(Member { name: format!("1^{}", k + 1), list: repeated_unit(k) });
    }
    let line = small_vectors(1);
    for m in 1..=6 {
        for vs in line.iter().cloned().combinations_with_replacement(m) {
            out.push(member(1, vs));
        }
    }
    let plane = small_vectors(2);
    for m in 2..=3 {
        for vs in plane.iter().cloned().combinations_with_replacement(m) {
            let x = VectorList::new(2, vs.clone()).unwrap();
            if spans(&x) {
                out.push(member(2, vs));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (m, count) in SHAPE.plane {
        out.extend(sample(&mut rng, 2, m, count));
    }
    for (m, count) in SHAPE.space {
        out.extend(sample(&mut rng, 3, m, count));
    }
    out
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}
