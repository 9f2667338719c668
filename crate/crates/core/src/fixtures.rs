//! Named catalog of the configurations used throughout the test suite and
//! the command-line tool.
//!
//! Every entry is pinned byte-for-byte: tests and golden values depend on
//! the exact columns and their order. Identifiers are stable.

use crate::matrix::IntMatrix;

/// A named configuration with a one-line description.
pub struct Fixture {
    pub id: &'static str,
    pub description: &'static str,
    pub matrix: IntMatrix,
}

/// The full catalog, in stable order.
pub fn catalog() -> Vec<Fixture> {
    let mut out = vec![
        Fixture {
            id: "b_neg2_3",
            description: "one row {-2, 3}: normal but not supernormal",
            matrix: IntMatrix::from_rows(&[vec![-2, 3]]),
        },
        Fixture {
            id: "b_2_3",
            description: "one row {2, 3}: pointed, not normal, single initial ideal",
            matrix: IntMatrix::from_rows(&[vec![2, 3]]),
        },
        Fixture {
            id: "quadrant3",
            description: "planar {(1,0),(1,2),(0,1)}: normal, not supernormal; \
                          admits a tight non-TDI bound",
            matrix: IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 2, 1]]),
        },
        Fixture {
            id: "hilbert3d",
            description: "six-vector Hilbert basis of a skew 3d cone: normal, \
                          not supernormal with witness (1,2,2)",
            matrix: IntMatrix::from_rows(&[
                vec![1, 0, 1, 1, 1, 1],
                vec![0, 1, 1, 1, 2, 2],
                vec![0, 0, 1, 2, 3, 4],
            ]),
        },
        Fixture {
            id: "hilbert3d+",
            description: "the six-vector skew cone plus (1,2,2): supernormal",
            matrix: IntMatrix::from_rows(&[
                vec![1, 0, 1, 1, 1, 1, 1],
                vec![0, 1, 1, 1, 2, 2, 2],
                vec![0, 0, 1, 2, 3, 4, 2],
            ]),
        },
        Fixture {
            id: "cube4d",
            description: "unit cube vertices lifted to Z^4: not supernormal, \
                          missing (2,1,1,1)",
            matrix: IntMatrix::from_rows(&[
                vec![1, 1, 1, 1, 1, 1, 1, 1],
                vec![0, 0, 0, 0, 1, 1, 1, 1],
                vec![0, 0, 1, 1, 0, 0, 1, 1],
                vec![0, 1, 0, 1, 0, 1, 0, 1],
            ]),
        },
        Fixture {
            id: "cube4d+",
            description: "the lifted cube plus its doubled center (2,1,1,1): supernormal",
            matrix: IntMatrix::from_rows(&[
                vec![1, 1, 1, 1, 1, 1, 1, 1, 2],
                vec![0, 0, 0, 0, 1, 1, 1, 1, 1],
                vec![0, 0, 1, 1, 0, 0, 1, 1, 1],
                vec![0, 1, 0, 1, 0, 1, 0, 1, 1],
            ]),
        },
        Fixture {
            id: "recursion3d",
            description: "seed triple of the halving recursion family: \
                          (0,1,0), (1,0,0), (-1,1,2)",
            matrix: IntMatrix::from_rows(&[
                vec![0, 1, -1],
                vec![1, 0, 1],
                vec![0, 0, 2],
            ]),
        },
        Fixture {
            id: "quad51",
            description: "eight lifted points of a lattice quadrilateral: \
                          supernormal, 10-element reduced basis under (0,0,0,0,1,4,1,0)",
            matrix: IntMatrix::from_rows(&[
                vec![1, 1, 1, 1, 1, 1, 1, 1],
                vec![1, 0, 1, 2, 3, 1, 2, 2],
                vec![0, 1, 1, 1, 1, 2, 2, 3],
            ]),
        },
        Fixture {
            id: "rect61",
            description: "six lifted points of the 1x2 rectangle: supernormal, \
                          16 chambers, 18 virtual chambers",
            matrix: IntMatrix::from_rows(&[
                vec![1, 1, 1, 1, 1, 1],
                vec![0, 1, 2, 0, 1, 2],
                vec![0, 0, 0, 1, 1, 1],
            ]),
        },
        Fixture {
            id: "square2d",
            description: "four lifted vertices of the unit square: supernormal, \
                          4 chambers",
            matrix: IntMatrix::from_rows(&[
                vec![1, 1, 1, 1],
                vec![0, 1, 1, 0],
                vec![0, 0, 1, 1],
            ]),
        },
    ];
    // All nonzero sign vectors in three coordinates, in lexicographic order.
    let mut cols: Vec<Vec<i64>> = Vec::new();
    for x in -1..=1i64 {
        for y in -1..=1i64 {
            for z in -1..=1i64 {
                if (x, y, z) != (0, 0, 0) {
                    cols.push(vec![x, y, z]);
                }
            }
        }
    }
    out.push(Fixture {
        id: "cube26",
        description: "all 26 nonzero sign vectors in Z^3: supernormal, not pointed",
        matrix: IntMatrix::from_rows(&[
            cols.iter().map(|c| c[0]).collect(),
            cols.iter().map(|c| c[1]).collect(),
            cols.iter().map(|c| c[2]).collect(),
        ]),
    });
    out
}

/// Look up a fixture by identifier.
pub fn by_id(id: &str) -> Option<Fixture> {
    catalog().into_iter().find(|f| f.id == id)
}
