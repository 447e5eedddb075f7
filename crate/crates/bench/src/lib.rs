//! Fixed instances shared by the criterion benches.

use zonotopal::VectorList;

/// `(e1, e2, e1+e2, e1-e2, 2e1+e2)`: five lines in the plane.
pub fn planar_five() -> VectorList {
    VectorList::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, -1], vec![2, 1]]).unwrap()
}

/// Six vectors spanning three-space, acute cone.
pub fn spatial_six() -> VectorList {
    VectorList::new(
        3,
        vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ],
    )
    .unwrap()
}

/// `1^{k+1}` in dimension one.
pub fn repeated_unit(k: usize) -> VectorList {
    VectorList::new(1, vec![vec![1]; k + 1]).unwrap()
}
