//! Riedtmann configurations: the Def. 1.1 checker, the per-family catalogs of
//! Cor. A.2, stabilizers, and configuration isomorphism.
//!
//! A configuration of a stable translation quiver Δ is a vertex set C with
//! `Hom_{k(Δ)}(e,f) = k` when `e = f ∈ C`, `0` for distinct `e, f ∈ C`, and
//! such that every vertex of Δ admits a nonzero morphism to some member of C.
//! Both axioms are checked against a completed mesh-category engine, never
//! assumed.

use crate::field::Field;
use crate::pathcat::QuotientCategory;
use crate::tquiver::{Family, RfsType, TqAutomorphism, TqError, TranslationQuiver};
use std::collections::BTreeSet;

/// A set of vertices (by id) of a stable translation quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    vertices: BTreeSet<usize>,
}

impl Configuration {
    /// Build from `(layer, pos)` coordinates; layers are canonicalized, so
    /// negative or out-of-window layers (as in the E-series catalog) are fine.
    pub fn from_coords(tq: &TranslationQuiver, coords: &[(i64, u32)]) -> Result<Self, TqError> {
        let mut vertices = BTreeSet::new();
        for &(layer, pos) in coords {
            vertices.insert(tq.vertex(layer, pos)?);
        }
        Ok(Configuration { vertices })
    }

    pub fn from_ids(tq: &TranslationQuiver, ids: impl IntoIterator<Item = usize>) -> Self {
        let vertices: BTreeSet<usize> = ids.into_iter().collect();
        assert!(vertices.iter().all(|&v| v < tq.vertices().len()));
        Configuration { vertices }
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// The image configuration under an automorphism.
    pub fn image(&self, g: &TqAutomorphism) -> Configuration {
        Configuration {
            vertices: self.vertices.iter().map(|&v| g.vmap[v]).collect(),
        }
    }

    /// Sorted human-readable vertex names.
    pub fn names(&self, tq: &TranslationQuiver) -> Vec<String> {
        self.vertices
            .iter()
            .map(|&v| tq.vertices()[v].name())
            .collect()
    }
}

/// Outcome of `check_configuration`: all Def. 1.1 violations, if any.
#[derive(Clone, Debug)]
pub struct ConfigReport {
    pub verdict: bool,
    /// Pairs `(e, f, dim)` in C×C where dim Hom(e,f) differs from δ_{ef}.
    pub axiom1_violations: Vec<(usize, usize, usize)>,
    /// Vertices `e` with Hom(e,f) = 0 for every f ∈ C.
    pub axiom2_violations: Vec<usize>,
    /// For each dominated vertex `e`, one `f ∈ C` with Hom(e,f) ≠ 0.
    pub axiom2_witnesses: Vec<(usize, usize)>,
}

impl ConfigReport {
    pub fn to_json(&self, tq: &TranslationQuiver) -> serde_json::Value {
        let name = |v: usize| tq.vertices()[v].name();
        serde_json::json!({
            "verdict": self.verdict,
            "axiom1_violations": self
                .axiom1_violations
                .iter()
                .map(|&(e, f, d)| serde_json::json!({"e": name(e), "f": name(f), "dim": d}))
                .collect::<Vec<_>>(),
            "axiom2_violations": self
                .axiom2_violations
                .iter()
                .map(|&e| name(e))
                .collect::<Vec<_>>(),
        })
    }
}

/// Check Def. 1.1 for `c` against a mesh-category engine on the stable
/// quiver. `qc` must have been built on `tq` (same vertex indexing).
pub fn check_configuration<F: Field>(
    qc: &QuotientCategory<F>,
    tq: &TranslationQuiver,
    c: &Configuration,
) -> Result<ConfigReport, TqError> {
    if !tq.is_stable() {
        return Err(TqError::NotStable);
    }
    let mut axiom1_violations = Vec::new();
    for &e in &c.vertices {
        for &f in &c.vertices {
            let expect = usize::from(e == f);
            let dim = qc.hom_dim(e, f);
            if dim != expect {
                axiom1_violations.push((e, f, dim));
            }
        }
    }
    let mut axiom2_violations = Vec::new();
    let mut axiom2_witnesses = Vec::new();
    for e in 0..tq.vertices().len() {
        match c.vertices.iter().find(|&&f| qc.hom_dim(e, f) > 0) {
            Some(&f) => axiom2_witnesses.push((e, f)),
            None => axiom2_violations.push(e),
        }
    }
    Ok(ConfigReport {
        verdict: axiom1_violations.is_empty() && axiom2_violations.is_empty(),
        axiom1_violations,
        axiom2_violations,
        axiom2_witnesses,
    })
}

/// The configuration of the representative algebra of type `ty`, transcribed
/// from the Cor. A.2 catalog (parametric in i and s, instantiated here).
pub fn catalog_configuration(
    ty: &RfsType,
    tq: &TranslationQuiver,
) -> Result<Configuration, TqError> {
    let n = ty.graph().rank() as i64;
    let mut coords: Vec<(i64, u32)> = Vec::new();
    match ty.family() {
        Family::ANakayama { s } => {
            for i in 0..s as i64 {
                coords.push((i, n as u32));
            }
        }
        Family::AMoebius { p, s } => {
            // The bottom-row points come in 2s blocks of p: the wrap sends the
            // block at i + s onto the top row over the block at i, so this set
            // is stable under τ^{2p+1} and has s(2p+1) vertices in the quotient.
            let (p, period) = (p as i64, 2 * p as i64 + 1);
            for i in 0..2 * s as i64 {
                for j in 0..p {
                    coords.push((period * i + j, 1));
                }
            }
            for i in 0..s as i64 {
                coords.push((period * i + p, (p + 1) as u32));
            }
        }
        Family::DStandard { s } => {
            let period = 2 * n - 3;
            for i in 0..s as i64 {
                coords.push((period * i, (n - 1) as u32));
                coords.push((period * i, n as u32));
                coords.push((period * i + n - 1, (n - 2) as u32));
                for j in 1..=n - 3 {
                    coords.push((period * i + j, 1));
                }
            }
        }
        Family::DThird { m, s } => {
            let (m, period) = (m as i64, 2 * m as i64 - 1);
            for i in 0..s as i64 {
                coords.push((period * i, (3 * m - 1) as u32));
                for j in m..=2 * m - 2 {
                    coords.push((period * i + j, 1));
                }
            }
        }
        Family::DFourTriple { s } => {
            for i in 0..s as i64 {
                coords.push((5 * i, 3));
                coords.push((5 * i, 4));
                coords.push((5 * i + 3, 2));
                coords.push((5 * i + 1, 1));
            }
        }
        Family::EStandard { s } => {
            let mn: i64 = match n {
                6 => 11,
                7 => 17,
                _ => 29,
            };
            for i in 0..s as i64 {
                for j in 0..=n - 5 {
                    coords.push((mn * i + j, 1));
                }
                coords.push((mn * i - 1, n as u32));
                coords.push((mn * i - 2, (n - 1) as u32));
                coords.push((mn * i - 1, (n - 1) as u32));
                coords.push((mn * i + (mn - 1) / 2, (n - 3) as u32));
            }
        }
    }
    Configuration::from_coords(tq, &coords)
}

/// Λ(m)'s configuration C = {(0,3m−1)} ∪ {(2m−1−j,1) | 1 ≤ j ≤ m−1}; the same
/// set as the (D_{3m}, 1/3, 1) catalog entry.
pub fn lambda_configuration(m: u32, tq: &TranslationQuiver) -> Result<Configuration, TqError> {
    let m = m as i64;
    let mut coords = vec![(0, (3 * m - 1) as u32)];
    for j in 1..=m - 1 {
        coords.push((2 * m - 1 - j, 1));
    }
    Configuration::from_coords(tq, &coords)
}

/// The positions of the simple Λ(m)-modules: simple i sits at (0,3m) for
/// i = 1 and at (2m−i,1) for 2 ≤ i ≤ m.
pub fn lambda_simples(m: u32, tq: &TranslationQuiver) -> Result<Configuration, TqError> {
    let m = m as i64;
    let mut coords = vec![(0, (3 * m) as u32)];
    for i in 2..=m {
        coords.push((2 * m - i, 1));
    }
    Configuration::from_coords(tq, &coords)
}

/// All automorphisms g with g(C) = C setwise.
pub fn configuration_stabilizer(
    tq: &TranslationQuiver,
    c: &Configuration,
) -> Result<Vec<TqAutomorphism>, TqError> {
    Ok(tq
        .automorphism_group()?
        .into_iter()
        .filter(|g| c.image(g) == *c)
        .collect())
}

/// Some automorphism g with g(C1) = C2, if one exists.
pub fn configurations_isomorphic(
    tq: &TranslationQuiver,
    c1: &Configuration,
    c2: &Configuration,
) -> Result<Option<TqAutomorphism>, TqError> {
    if c1.len() != c2.len() {
        return Ok(None);
    }
    Ok(tq
        .automorphism_group()?
        .into_iter()
        .find(|g| c1.image(g) == *c2))
}
