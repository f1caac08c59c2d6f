//! Shared test helpers: an independent closed-form Hom oracle for
//! self-injective Nakayama (serial) algebras, and a tiny brute-force
//! automorphism enumerator.
//!
//! The oracle never touches the mesh-category engines: it counts morphisms
//! between uniserial modules directly from the submodule/quotient structure,
//! so agreement with the engines is a genuine cross-check.

use meshcat::tquiver::{TqVertex, TranslationQuiver};

/// The self-injective Nakayama algebra with `s` vertices on a cyclic quiver
/// (arrows i → i+1 mod s) and Loewy length n+1. Its indecomposables are the
/// uniserials `M(i, ℓ)` with top S_i and length 1 ≤ ℓ ≤ n+1; the projectives
/// are the M(i, n+1) and the stable AR-quiver is ℤA_n/τ^s.
pub struct SerialOracle {
    pub n: i64,
    pub s: i64,
}

impl SerialOracle {
    /// dim Hom(M(i,a), M(j,b)): a hom is determined by its image, a length-c
    /// quotient of the source embedded as the length-c submodule of the
    /// target; tops match iff c ≡ b+j−i (mod s).
    pub fn hom(&self, (i, a): (i64, i64), (j, b): (i64, i64)) -> usize {
        (1..=a.min(b))
            .filter(|c| (c - (b + j - i)).rem_euclid(self.s) == 0)
            .count()
    }

    /// Dimension of the subspace of Hom(M(i,a), M(j,b)) of maps factoring
    /// through a projective: maps that extend along the injective envelope
    /// M(i,a) ⊆ M(i+a−n−1, n+1) (projective = injective here). The extension
    /// with image length d restricts to the map with image length
    /// d − (n+1−a), nonzero iff a+d−n−1 ≥ 1.
    pub fn phom(&self, (i, a): (i64, i64), (j, b): (i64, i64)) -> usize {
        (1..=b)
            .filter(|d| {
                (d - (b + j - i - a + 1 + self.n)).rem_euclid(self.s) == 0 && a + d - self.n > 1
            })
            .count()
    }

    pub fn stable_hom(&self, x: (i64, i64), y: (i64, i64)) -> usize {
        self.hom(x, y) - self.phom(x, y)
    }

    /// The module sitting at a quiver vertex: regular (p,q) ↦ M(−p−q, q);
    /// the projective attached over (p,n) ↦ M(−p−n−1, n+1).
    pub fn module_of(&self, tq: &TranslationQuiver, v: usize) -> (i64, i64) {
        match tq.vertices()[v] {
            TqVertex::Reg { layer, pos } => (
                (-(layer as i64) - pos as i64).rem_euclid(self.s),
                pos as i64,
            ),
            TqVertex::Proj { layer, pos } => {
                assert_eq!(pos as i64, self.n, "projectives sit over the top row");
                (
                    (-(layer as i64) - self.n - 1).rem_euclid(self.s),
                    self.n + 1,
                )
            }
        }
    }
}

/// All vertex bijections of `tq` that are translation-quiver automorphisms,
/// found by checking every permutation (use only on tiny quivers).
pub fn brute_force_automorphisms(tq: &TranslationQuiver) -> usize {
    let nv = tq.vertices().len();
    let mut perm: Vec<usize> = (0..nv).collect();
    let mut count = 0;
    heaps(&mut perm, nv, &mut |p| {
        if tq.automorphism_from_vertex_map(p.to_vec()).is_some() {
            count += 1;
        }
    });
    count
}

fn heaps(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(perm);
        return;
    }
    for i in 0..k {
        heaps(perm, k - 1, visit);
        if k.is_multiple_of(2) {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}
