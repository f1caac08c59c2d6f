//! Simply-laced Dynkin graphs A_n, D_n, E_6/7/8 in a fixed enumeration.
//!
//! The enumeration is the one used throughout for coordinates on ℤQ:
//!
//! * `A_n`:  1 → 2 → … → n
//! * `D_n`:  1 → 2 → … → n−2, plus n−2 → n−1 and n−2 → n (the two *high* vertices)
//! * `E_n`:  1 → 2 → … → n−3 → n−2 → n−1, plus n−3 → n
//!
//! Vertices are 1-based in the public API to match the coordinate conventions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    A,
    D,
    E,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::A => write!(f, "A"),
            Kind::D => write!(f, "D"),
            Kind::E => write!(f, "E"),
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(Kind::A),
            "D" | "d" => Ok(Kind::D),
            "E" | "e" => Ok(Kind::E),
            _ => Err(format!("unknown Dynkin kind '{s}'")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DynkinError {
    #[error("rank {n} is out of range for type {kind} (A: n≥1, D: n≥4, E: n∈{{6,7,8}})")]
    RankOutOfRange { kind: Kind, n: u32 },
    #[error("high vertices are only defined for type D")]
    NoHighVertices,
}

/// A simply-laced Dynkin graph with the fixed orientation above.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinGraph {
    kind: Kind,
    n: u32,
}

/// A permutation of the vertices `1..=n` preserving the underlying graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphAutomorphism {
    /// `perm[q-1]` is the image of vertex `q`.
    perm: Vec<u32>,
}

impl GraphAutomorphism {
    pub fn identity(n: u32) -> Self {
        GraphAutomorphism {
            perm: (1..=n).collect(),
        }
    }

    pub fn from_perm(perm: Vec<u32>) -> Self {
        GraphAutomorphism { perm }
    }

    pub fn apply(&self, q: u32) -> u32 {
        self.perm[(q - 1) as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.perm
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn compose(&self, then: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism {
            perm: self.perm.iter().map(|&q| then.apply(q)).collect(),
        }
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        let n = self.perm.len() as u32;
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
            assert!(k <= n + 1, "order computation ran away");
        }
        k
    }
}

impl DynkinGraph {
    pub fn new(kind: Kind, n: u32) -> Result<Self, DynkinError> {
        let ok = match kind {
            Kind::A => n >= 1,
            Kind::D => n >= 4,
            Kind::E => (6..=8).contains(&n),
        };
        if ok {
            Ok(DynkinGraph { kind, n })
        } else {
            Err(DynkinError::RankOutOfRange { kind, n })
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    /// Oriented edges `(q, q')` of the fixed enumeration, in increasing order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let n = self.n;
        match self.kind {
            Kind::A => (1..n).map(|q| (q, q + 1)).collect(),
            Kind::D => {
                let mut e: Vec<_> = (1..n - 2).map(|q| (q, q + 1)).collect();
                e.push((n - 2, n - 1));
                e.push((n - 2, n));
                e
            }
            Kind::E => {
                let mut e: Vec<_> = (1..n - 1).map(|q| (q, q + 1)).collect();
                e.push((n - 3, n));
                e.sort();
                e
            }
        }
    }

    /// The Coxeter number h of the underlying root system.
    pub fn coxeter_number(&self) -> u32 {
        match (self.kind, self.n) {
            (Kind::A, n) => n + 1,
            (Kind::D, n) => 2 * n - 2,
            (Kind::E, 6) => 12,
            (Kind::E, 7) => 18,
            (Kind::E, 8) => 30,
            _ => unreachable!(),
        }
    }

    /// Number of positive roots of the root system.
    pub fn positive_roots(&self) -> u32 {
        match (self.kind, self.n) {
            (Kind::A, n) => n * (n + 1) / 2,
            (Kind::D, n) => n * (n - 1),
            (Kind::E, 6) => 36,
            (Kind::E, 7) => 63,
            (Kind::E, 8) => 120,
            _ => unreachable!(),
        }
    }

    /// The two high vertices (n−1, n) of a D-graph.
    pub fn high_vertices(&self) -> Result<(u32, u32), DynkinError> {
        match self.kind {
            Kind::D => Ok((self.n - 1, self.n)),
            _ => Err(DynkinError::NoHighVertices),
        }
    }

    /// The full automorphism group of the underlying (unoriented) graph.
    ///
    /// Enumerated explicitly: A_1, E_7, E_8 are rigid; A_n (n≥2), D_n (n≥5)
    /// and E_6 have one non-trivial involution; D_4 has S_3 on {1, n−1, n}.
    pub fn automorphisms(&self) -> Vec<GraphAutomorphism> {
        let n = self.n;
        let id = GraphAutomorphism::identity(n);
        let mut out = vec![id];
        match self.kind {
            Kind::A => {
                if n >= 2 {
                    out.push(GraphAutomorphism::from_perm(
                        (1..=n).map(|q| n + 1 - q).collect(),
                    ));
                }
            }
            Kind::D => {
                if n == 4 {
                    // All permutations of the leaves {1, 3, 4} around the hub 2.
                    out.clear();
                    for perm3 in [
                        [1, 3, 4],
                        [1, 4, 3],
                        [3, 1, 4],
                        [3, 4, 1],
                        [4, 1, 3],
                        [4, 3, 1],
                    ] {
                        out.push(GraphAutomorphism::from_perm(vec![
                            perm3[0], 2, perm3[1], perm3[2],
                        ]));
                    }
                } else {
                    let mut perm: Vec<u32> = (1..=n).collect();
                    perm.swap((n - 2) as usize, (n - 1) as usize);
                    out.push(GraphAutomorphism::from_perm(perm));
                }
            }
            Kind::E => {
                if n == 6 {
                    // Swap the two long arms: 1↔5, 2↔4; fix the hub 3 and the leaf 6.
                    out.push(GraphAutomorphism::from_perm(vec![5, 4, 3, 2, 1, 6]));
                }
            }
        }
        out
    }
}

impl std::fmt::Display for DynkinGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.kind, self.n)
    }
}
