//! Small fixed graphs used throughout the tests and by the CLI.
//!
//! The members of the infinite families live in [`crate::families`]; this
//! module holds the one-off graphs.

use crate::graph::{EdgeId, Graph};

fn build(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, pairs).expect("fixed graph is well formed")
}

pub fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    build(n, &pairs)
}

pub fn k4() -> Graph {
    complete(4)
}

/// The cycle `0 1 .. n-1 0`.
pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &pairs)
}

/// The path `0 1 .. n-1`.
pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &pairs)
}

/// `K_{p,q}` with colour classes `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..p {
        for v in p..p + q {
            pairs.push((u, v));
        }
    }
    build(p + q, &pairs)
}

/// The triangular prism, i.e. the complement of `C6`: triangles `0 1 2`
/// and `3 4 5` joined by the matching `i, i+3`.
pub fn c6_bar() -> Graph {
    build(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
}

/// Outer 5-cycle `0..5`, spokes `i, i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        pairs.push((i, i + 5));
    }
    for i in 0..5 {
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &pairs)
}

/// Wheel with hub `0` and rim `1..=k` in cyclic order.
pub fn wheel(k: usize) -> Graph {
    let mut pairs: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    for i in 1..=k {
        pairs.push((i, i % k + 1));
    }
    build(k + 1, &pairs)
}

/// The Tricorn: a cubic brick on ten vertices obtained from a claw by
/// attaching a triangle-like fan at each leaf. Its three removable edges
/// are [`TRICORN_REMOVABLE`].
///
/// Vertex 0 is the centre, 1..=3 the inner vertices, 4..=9 the outer ring.
pub fn tricorn() -> Graph {
    build(
        10,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (2, 7),
            (3, 8),
            (3, 9),
            (5, 6),
            (7, 8),
            (9, 4),
            (4, 5),
            (6, 7),
            (8, 9),
        ],
    )
}

/// Ids of the outer edges `4 5`, `6 7`, `8 9` of [`tricorn`].
pub const TRICORN_REMOVABLE: [EdgeId; 3] = [EdgeId(12), EdgeId(13), EdgeId(14)];

/// A cubic simple R-brick on twelve vertices whose edge `EdgeId(0)` is
/// strictly R-thin; deleting it and taking the retract gives the truncated
/// biwheel on eight vertices. The doubleton is [`T8_EXPANSION_DOUBLETON`].
pub fn t8_expansion() -> Graph {
    build(
        12,
        &[
            (7, 10),
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (6, 7),
            (7, 8),
            (9, 10),
            (10, 11),
            (0, 9),
            (9, 1),
            (2, 6),
            (6, 0),
            (3, 11),
            (11, 5),
            (4, 8),
            (8, 5),
        ],
    )
}

/// The doubleton `{0 9, 8 5}` of [`t8_expansion`].
pub const T8_EXPANSION_DOUBLETON: (EdgeId, EdgeId) = (EdgeId(10), EdgeId(17));

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(k4().size(), 6);
        assert_eq!(petersen().size(), 15);
        assert_eq!(petersen().degrees(), vec![3; 10]);
        assert_eq!(tricorn().degrees(), vec![3; 10]);
        assert_eq!(t8_expansion().degrees(), vec![3; 12]);
        assert_eq!(c6_bar().degrees(), vec![3; 6]);
        assert_eq!(wheel(5).size(), 10);
        assert!(t8_expansion().is_simple());
    }
}
