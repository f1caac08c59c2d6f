//! Quotient translation quivers ℤQ/⟨ζτ^{−r}⟩ for representation-finite
//! self-injective (RFS) types.
//!
//! Coordinates: a vertex of ℤQ is `(p, q)` with `p ∈ ℤ` a layer and `q` a
//! vertex of the Dynkin graph Q. Arrows of ℤQ are, for every edge `q → q'`
//! of Q and every layer `p`:
//!
//! * the *edge* arrow `(p, q) → (p, q')`, and
//! * its σ-partner `(p, q') → (p+1, q)`.
//!
//! The translation is `τ(p, q) = (p−1, q)`.
//!
//! The admissible cyclic group is generated by `G = Z(ζ)·τ^{−r}` where `Z(ζ)`
//! is the automorphism of ℤQ induced by a graph automorphism ζ of Q. When ζ
//! preserves the chosen orientation, `Z(ζ)(p, q) = (p, ζq)` and the wrap rule
//! is simply `(p+r, q) ≡ (p, ζq)`. Orientation-reversing ζ (the A-flip, the
//! D₄ triality, the E₆ arm swap) pick up per-position layer shifts `d(q)`,
//! determined by propagating arrow constraints over the tree and gauged so
//! that `Z(ζ)^t = id` (t = order of ζ). Canonical representatives live in the
//! layer window `[0, t·r)` and are the lexicographically least orbit element.

use crate::dynkin::{DynkinGraph, GraphAutomorphism, Kind};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

/// A positive rational frequency `f = num/den`, stored reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frequency {
    num: u32,
    den: u32,
}

impl Frequency {
    pub fn new(num: u32, den: u32) -> Result<Self, TypeError> {
        if num == 0 || den == 0 {
            return Err(TypeError::BadFrequency);
        }
        let g = gcd(num, den);
        Ok(Frequency {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numer(&self) -> u32 {
        self.num
    }
    pub fn denom(&self) -> u32 {
        self.den
    }

    /// `f · k`, if integral.
    fn times(&self, k: u32) -> Option<u32> {
        let prod = self.num as u64 * k as u64;
        if prod.is_multiple_of(self.den as u64) {
            Some((prod / self.den as u64) as u32)
        } else {
            None
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::fmt::Display for Frequency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl std::str::FromStr for Frequency {
    type Err = TypeError;
    fn from_str(s: &str) -> Result<Self, TypeError> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: u32 = n.parse().map_err(|_| TypeError::BadFrequency)?;
        let den: u32 = d.parse().map_err(|_| TypeError::BadFrequency)?;
        Frequency::new(num, den)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TypeError {
    #[error("frequency must be a positive rational")]
    BadFrequency,
    #[error("torsion must be 1, 2 or 3")]
    BadTorsion,
    #[error("({graph}, {frequency}, {torsion}) is not in the admissible table: {reason}")]
    NotAdmissible {
        graph: String,
        frequency: String,
        torsion: u32,
        reason: String,
    },
}

/// Which row of the admissibility table a validated type belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// (A_n, s/n, 1): self-injective Nakayama algebras.
    ANakayama { s: u32 },
    /// (A_{2p+1}, s, 2): Möbius algebras.
    AMoebius { p: u32, s: u32 },
    /// (D_n, s, 1) or (D_n, s, 2).
    DStandard { s: u32 },
    /// (D_{3m}, s/3, 1) with 3 ∤ s; nonstandard in characteristic 2 when s = 1.
    DThird { m: u32, s: u32 },
    /// (D_4, s, 3).
    DFourTriple { s: u32 },
    /// (E_n, s, 1) or (E_6, s, 2).
    EStandard { s: u32 },
}

/// A validated RFS type (Q, f, t).
#[derive(Clone, Debug)]
pub struct RfsType {
    graph: DynkinGraph,
    frequency: Frequency,
    torsion: u32,
    family: Family,
    r: u32,
    twist: GraphAutomorphism,
    shift: Vec<i64>,
}

impl RfsType {
    pub fn graph(&self) -> DynkinGraph {
        self.graph
    }
    pub fn frequency(&self) -> Frequency {
        self.frequency
    }
    pub fn torsion(&self) -> u32 {
        self.torsion
    }
    pub fn family(&self) -> Family {
        self.family
    }
    /// The τ-period r = f·(h−1) of the quotient.
    pub fn tau_period(&self) -> u32 {
        self.r
    }
    pub fn twist(&self) -> &GraphAutomorphism {
        &self.twist
    }

    /// True exactly for (D_{3m}, 1/3, 1): the type whose algebras are
    /// nonstandard in characteristic 2.
    pub fn is_nonstandard_candidate(&self) -> bool {
        matches!(self.family, Family::DThird { s: 1, .. })
    }

    /// The type (D_{3m}, 1/3, 1) of the nonstandard algebra Λ = Λ(m).
    pub fn lambda(m: u32) -> RfsType {
        assert!(m >= 2);
        validate_type(
            DynkinGraph::new(Kind::D, 3 * m).unwrap(),
            Frequency::new(1, 3).unwrap(),
            1,
        )
        .unwrap()
    }
}

impl std::fmt::Display for RfsType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.graph, self.frequency, self.torsion)
    }
}

/// Layer shifts of the induced automorphism Z(ζ) of ℤQ.
///
/// `Z(ζ)(p, q) = (p + d(q), ζq)`; for each edge `q → q'` of Q the image must
/// again be an arrow, forcing `d(q') = d(q)` when `ζq → ζq'` is an edge and
/// `d(q') = d(q) + 1` when the edge is reversed. The overall constant is
/// fixed by `Z(ζ)^t = id`, i.e. all ζ-orbit sums of d vanish; if no integral
/// gauge exists the twist has no admissible lift (e.g. the A-flip in even
/// rank).
fn induced_shift(graph: &DynkinGraph, zeta: &GraphAutomorphism) -> Option<Vec<i64>> {
    let n = graph.rank() as usize;
    let edges = graph.edges();
    let has_edge = |a: u32, b: u32| edges.contains(&(a, b));
    let mut d = vec![None::<i64>; n + 1];
    d[1] = Some(0);
    // Propagate over the tree (edges visited in order reach every vertex
    // because vertex labels increase along the enumeration, except E_n's leaf
    // which hangs off n−3; a fixed-point loop keeps this robust).
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in &edges {
            let (ia, ib) = (zeta.apply(a), zeta.apply(b));
            let delta = if has_edge(ia, ib) {
                0
            } else if has_edge(ib, ia) {
                1
            } else {
                unreachable!("ζ is not a graph automorphism")
            };
            match (d[a as usize], d[b as usize]) {
                (Some(da), None) => {
                    d[b as usize] = Some(da + delta);
                    changed = true;
                }
                (None, Some(db)) => {
                    d[a as usize] = Some(db - delta);
                    changed = true;
                }
                (Some(da), Some(db)) => assert_eq!(db, da + delta, "inconsistent shifts"),
                (None, None) => {}
            }
        }
    }
    let d: Vec<i64> = (1..=n).map(|q| d[q].unwrap()).collect();
    // Gauge: find integral c with Σ_{q ∈ O} (d(q) + c) = 0 for every ζ-orbit O.
    let mut seen = vec![false; n + 1];
    let mut c: Option<i64> = None;
    for q0 in 1..=n as u32 {
        if seen[q0 as usize] {
            continue;
        }
        let mut orbit_sum = 0i64;
        let mut orbit_len = 0i64;
        let mut q = q0;
        loop {
            seen[q as usize] = true;
            orbit_sum += d[(q - 1) as usize];
            orbit_len += 1;
            q = zeta.apply(q);
            if q == q0 {
                break;
            }
        }
        if orbit_sum % orbit_len != 0 {
            return None;
        }
        let this_c = -orbit_sum / orbit_len;
        match c {
            None => c = Some(this_c),
            Some(c0) if c0 == this_c => {}
            Some(_) => return None,
        }
    }
    let c = c.unwrap();
    Some(d.into_iter().map(|x| x + c).collect())
}

/// Validate (Q, f, t) against the admissibility table and package the
/// quotient data.
pub fn validate_type(
    graph: DynkinGraph,
    frequency: Frequency,
    torsion: u32,
) -> Result<RfsType, TypeError> {
    if !(1..=3).contains(&torsion) {
        return Err(TypeError::BadTorsion);
    }
    let n = graph.rank();
    let not_admissible = |reason: &str| TypeError::NotAdmissible {
        graph: graph.to_string(),
        frequency: frequency.to_string(),
        torsion,
        reason: reason.to_string(),
    };
    let integral_s = frequency.times(1);
    let (family, twist) = match (graph.kind(), torsion) {
        (Kind::A, 1) => {
            let s = frequency
                .times(n)
                .ok_or_else(|| not_admissible("frequency must be s/n for type (A_n, s/n, 1)"))?;
            (Family::ANakayama { s }, GraphAutomorphism::identity(n))
        }
        (Kind::A, 2) => {
            if n < 3 || n.is_multiple_of(2) {
                return Err(not_admissible(
                    "torsion 2 requires odd rank A_{2p+1}, p ≥ 1",
                ));
            }
            let s = integral_s.ok_or_else(|| not_admissible("frequency must be an integer"))?;
            let flip = GraphAutomorphism::from_perm((1..=n).map(|q| n + 1 - q).collect());
            (Family::AMoebius { p: (n - 1) / 2, s }, flip)
        }
        (Kind::D, 1) => match integral_s {
            Some(s) => (Family::DStandard { s }, GraphAutomorphism::identity(n)),
            None => {
                if frequency.denom() != 3 {
                    return Err(not_admissible(
                        "torsion-1 D frequency must be an integer or s/3",
                    ));
                }
                if !n.is_multiple_of(3) || n < 6 {
                    return Err(not_admissible("frequency s/3 requires rank 3m, m ≥ 2"));
                }
                let s = frequency.numer(); // 3 ∤ s since the fraction is reduced
                (
                    Family::DThird { m: n / 3, s },
                    GraphAutomorphism::identity(n),
                )
            }
        },
        (Kind::D, 2) => {
            let s = integral_s.ok_or_else(|| not_admissible("frequency must be an integer"))?;
            let mut perm: Vec<u32> = (1..=n).collect();
            perm.swap((n - 2) as usize, (n - 1) as usize);
            (Family::DStandard { s }, GraphAutomorphism::from_perm(perm))
        }
        (Kind::D, 3) => {
            if n != 4 {
                return Err(not_admissible("torsion 3 exists only for D_4"));
            }
            let s = integral_s.ok_or_else(|| not_admissible("frequency must be an integer"))?;
            (
                Family::DFourTriple { s },
                GraphAutomorphism::from_perm(vec![3, 2, 4, 1]),
            )
        }
        (Kind::E, 1) => {
            let s = integral_s.ok_or_else(|| not_admissible("frequency must be an integer"))?;
            (Family::EStandard { s }, GraphAutomorphism::identity(n))
        }
        (Kind::E, 2) => {
            if n != 6 {
                return Err(not_admissible("torsion 2 exists only for E_6"));
            }
            let s = integral_s.ok_or_else(|| not_admissible("frequency must be an integer"))?;
            (
                Family::EStandard { s },
                GraphAutomorphism::from_perm(vec![5, 4, 3, 2, 1, 6]),
            )
        }
        _ => return Err(not_admissible("no such torsion for this kind")),
    };
    if twist.order() != torsion {
        return Err(not_admissible("twist order does not match torsion"));
    }
    let r = frequency
        .times(graph.coxeter_number() - 1)
        .ok_or_else(|| not_admissible("f·(h−1) must be a positive integer"))?;
    let shift = induced_shift(&graph, &twist)
        .ok_or_else(|| not_admissible("twist has no integral lift"))?;
    Ok(RfsType {
        graph,
        frequency,
        torsion,
        family,
        r,
        twist,
        shift,
    })
}

/// A vertex of a (possibly projective-augmented) quotient translation quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TqVertex {
    /// Canonical coordinates `(layer, pos)` with `0 ≤ layer < t·r`.
    Reg { layer: u32, pos: u32 },
    /// The projective vertex attached over the configuration vertex `(layer, pos)`.
    Proj { layer: u32, pos: u32 },
}

impl TqVertex {
    pub fn name(&self) -> String {
        match self {
            TqVertex::Reg { layer, pos } => format!("{layer}:{pos}"),
            TqVertex::Proj { layer, pos } => format!("P({layer}:{pos})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
}

/// A composable sequence of arrows, stored in application order
/// (`arrows[0]` is applied first; composition symbols read right to left).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSeq {
    pub source: usize,
    pub arrows: Vec<u32>,
}

impl PathSeq {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// An automorphism of a quotient translation quiver (commutes with τ).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TqAutomorphism {
    /// `vmap[v]` is the image vertex of `v`.
    pub vmap: Vec<usize>,
    /// `amap[a]` is the image arrow of `a`.
    pub amap: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TqError {
    #[error("vertex {0:?} is not in this quiver")]
    NoSuchVertex(TqVertex),
    #[error("no arrow {0} → {1} in this quiver")]
    NoSuchArrow(String, String),
    #[error("operation requires a stable quiver (no projective vertices)")]
    NotStable,
    #[error("operation requires τ{0} to be defined")]
    TauUndefined(String),
    #[error("this operation is only defined for the quotients of type (D_{{3m}}, 1/3, 1)")]
    NotLambdaQuotient,
}

/// A quotient translation quiver, optionally augmented with projective
/// vertices over a configuration.
#[derive(Clone, Debug)]
pub struct TranslationQuiver {
    graph: DynkinGraph,
    r: u32,
    torsion: u32,
    pi: Vec<u32>,
    shift: Vec<i64>,
    vertices: Vec<TqVertex>,
    vindex: HashMap<TqVertex, usize>,
    arrows: Vec<Arrow>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arrow_by_ends: HashMap<(usize, usize), usize>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    sigma: Vec<Option<usize>>,
}

/// Build the stable quotient translation quiver ℤQ/⟨ζτ^{−r}⟩ of a validated type.
pub fn build_quotient(ty: &RfsType) -> TranslationQuiver {
    let graph = ty.graph;
    let n = graph.rank();
    let r = ty.r;
    let t = ty.torsion;
    let pi: Vec<u32> = (1..=n).map(|q| ty.twist.apply(q)).collect();
    let shift = ty.shift.clone();

    let canon = |mut a: i64, mut q: u32| -> (u32, u32) {
        let period = (t * r) as i64;
        a = a.rem_euclid(period);
        let mut best = (a as u32, q);
        let mut cur_a = a;
        for _ in 1..t {
            cur_a += r as i64 + shift[(q - 1) as usize];
            q = pi[(q - 1) as usize];
            let cand = (cur_a.rem_euclid(period) as u32, q);
            if cand < best {
                best = cand;
            }
        }
        best
    };

    let mut vertices = Vec::new();
    for layer in 0..t * r {
        for pos in 1..=n {
            if canon(layer as i64, pos) == (layer, pos) {
                vertices.push(TqVertex::Reg { layer, pos });
            }
        }
    }
    vertices.sort();
    let vindex: HashMap<TqVertex, usize> =
        vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let vid = |a: i64, q: u32| -> usize {
        let (layer, pos) = canon(a, q);
        vindex[&TqVertex::Reg { layer, pos }]
    };

    let edges = graph.edges();
    let mut arrows = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        let TqVertex::Reg { layer, pos } = v else {
            unreachable!()
        };
        for &(a, b) in &edges {
            if a == pos {
                arrows.push(Arrow {
                    src: i,
                    dst: vid(layer as i64, b),
                });
            }
        }
        for &(a, b) in &edges {
            if b == pos {
                arrows.push(Arrow {
                    src: i,
                    dst: vid(layer as i64 + 1, a),
                });
            }
        }
    }

    let tau: Vec<Option<usize>> = vertices
        .iter()
        .map(|v| {
            let TqVertex::Reg { layer, pos } = v else {
                unreachable!()
            };
            Some(vid(*layer as i64 - 1, *pos))
        })
        .collect();

    let mut tq = TranslationQuiver {
        graph,
        r,
        torsion: t,
        pi,
        shift: ty.shift.clone(),
        vertices,
        vindex,
        arrows,
        out: Vec::new(),
        inn: Vec::new(),
        arrow_by_ends: HashMap::new(),
        tau,
        tau_inv: Vec::new(),
        sigma: Vec::new(),
    };
    tq.rebuild_indices();
    tq
}

impl TranslationQuiver {
    fn rebuild_indices(&mut self) {
        let nv = self.vertices.len();
        self.out = vec![Vec::new(); nv];
        self.inn = vec![Vec::new(); nv];
        self.arrow_by_ends.clear();
        for (ai, a) in self.arrows.iter().enumerate() {
            self.out[a.src].push(ai);
            self.inn[a.dst].push(ai);
            let dup = self.arrow_by_ends.insert((a.src, a.dst), ai);
            assert!(dup.is_none(), "parallel arrows are not expected");
        }
        self.tau_inv = vec![None; nv];
        for (v, t) in self.tau.iter().enumerate() {
            if let Some(t) = t {
                self.tau_inv[*t] = Some(v);
            }
        }
        self.sigma = self
            .arrows
            .iter()
            .map(|a| {
                let tz = self.tau[a.dst]?;
                self.arrow_by_ends.get(&(tz, a.src)).copied()
            })
            .collect();
    }

    pub fn graph(&self) -> DynkinGraph {
        self.graph
    }
    pub fn tau_period(&self) -> u32 {
        self.r
    }
    pub fn torsion(&self) -> u32 {
        self.torsion
    }
    pub fn vertices(&self) -> &[TqVertex] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out[v]
    }
    pub fn in_arrows(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }
    pub fn is_stable(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| matches!(v, TqVertex::Reg { .. }))
    }

    /// Canonical coordinates of `(layer, pos)` for any integer layer.
    pub fn canonicalize(&self, mut a: i64, mut q: u32) -> (u32, u32) {
        let period = (self.torsion * self.r) as i64;
        a = a.rem_euclid(period);
        let mut best = (a as u32, q);
        let mut cur_a = a;
        for _ in 1..self.torsion {
            cur_a += self.r as i64 + self.shift[(q - 1) as usize];
            q = self.pi[(q - 1) as usize];
            let cand = (cur_a.rem_euclid(period) as u32, q);
            if cand < best {
                best = cand;
            }
        }
        best
    }

    /// Vertex id of the canonical representative of `(layer, pos)`.
    pub fn vertex(&self, layer: i64, pos: u32) -> Result<usize, TqError> {
        let (layer, pos) = self.canonicalize(layer, pos);
        self.vindex
            .get(&TqVertex::Reg { layer, pos })
            .copied()
            .ok_or(TqError::NoSuchVertex(TqVertex::Reg { layer, pos }))
    }

    pub fn vertex_id(&self, v: TqVertex) -> Option<usize> {
        self.vindex.get(&v).copied()
    }

    pub fn tau(&self, v: usize) -> Option<usize> {
        self.tau[v]
    }
    pub fn tau_inv(&self, v: usize) -> Option<usize> {
        self.tau_inv[v]
    }

    /// σ of an arrow `α: x → z` is the arrow `τz → x`; `None` when `τz` is
    /// undefined (arrows into projective vertices). σ² shifts an arrow one
    /// τ-step.
    pub fn sigma(&self, arrow: usize) -> Option<usize> {
        self.sigma[arrow]
    }

    pub fn arrow_between(&self, src: usize, dst: usize) -> Result<usize, TqError> {
        self.arrow_by_ends.get(&(src, dst)).copied().ok_or_else(|| {
            TqError::NoSuchArrow(self.vertices[src].name(), self.vertices[dst].name())
        })
    }

    /// The two-arrow arms `x → y → τ⁻¹x` of the mesh starting at `x`.
    /// Returns pairs `(first, second)` of arrow ids, ordered by first arrow.
    pub fn mesh_summands(&self, x: usize) -> Result<Vec<(usize, usize)>, TqError> {
        let tix = self
            .tau_inv(x)
            .ok_or_else(|| TqError::TauUndefined(self.vertices[x].name()))?;
        let mut arms = Vec::new();
        for &a in &self.out[x] {
            let y = self.arrows[a].dst;
            let b = self.arrow_between(y, tix)?;
            arms.push((a, b));
        }
        Ok(arms)
    }

    /// Attach a projective vertex `p_c` with arrows `c → p_c → τ⁻¹c` over
    /// every vertex of `config` (given as `(layer, pos)` coordinates).
    pub fn attach_projectives(&self, config: &[(u32, u32)]) -> Result<TranslationQuiver, TqError> {
        if !self.is_stable() {
            return Err(TqError::NotStable);
        }
        let mut tq = self.clone();
        let mut cs: Vec<(u32, u32)> = config.to_vec();
        cs.sort();
        cs.dedup();
        for (layer, pos) in cs {
            let c = self.vertex(layer as i64, pos)?;
            let TqVertex::Reg { layer, pos } = self.vertices[c] else {
                unreachable!()
            };
            let pc = tq.vertices.len();
            tq.vertices.push(TqVertex::Proj { layer, pos });
            tq.vindex.insert(TqVertex::Proj { layer, pos }, pc);
            tq.tau.push(None);
            tq.arrows.push(Arrow { src: c, dst: pc });
            tq.arrows.push(Arrow {
                src: pc,
                dst: self.tau_inv(c).unwrap(),
            });
        }
        tq.rebuild_indices();
        Ok(tq)
    }

    /// All paths from `x` to `y` of the given length, in lexicographic arrow
    /// order.
    pub fn enumerate_paths(&self, x: usize, y: usize, len: usize) -> Vec<PathSeq> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.paths_rec(x, y, len, &mut stack, &mut out);
        out
    }

    fn paths_rec(
        &self,
        at: usize,
        y: usize,
        remaining: usize,
        stack: &mut Vec<u32>,
        out: &mut Vec<PathSeq>,
    ) {
        if remaining == 0 {
            if at == y {
                let source = if let Some(&first) = stack.first() {
                    self.arrows[first as usize].src
                } else {
                    y
                };
                out.push(PathSeq {
                    source,
                    arrows: stack.clone(),
                });
            }
            return;
        }
        for &a in &self.out[at] {
            stack.push(a as u32);
            self.paths_rec(self.arrows[a].dst, y, remaining - 1, stack, out);
            stack.pop();
        }
    }

    /// Target vertex of a path.
    pub fn path_target(&self, p: &PathSeq) -> usize {
        p.arrows
            .iter()
            .fold(p.source, |_, &a| self.arrows[a as usize].dst)
    }

    /// Build a path through the listed `(layer, pos)` coordinates.
    pub fn path_through(&self, coords: &[(i64, u32)]) -> Result<PathSeq, TqError> {
        assert!(!coords.is_empty());
        let ids: Vec<usize> = coords
            .iter()
            .map(|&(l, p)| self.vertex(l, p))
            .collect::<Result<_, _>>()?;
        let mut arrows = Vec::new();
        for w in ids.windows(2) {
            arrows.push(self.arrow_between(w[0], w[1])? as u32);
        }
        Ok(PathSeq {
            source: ids[0],
            arrows,
        })
    }

    /// The length-4m deviation path p of the modified mesh ideal of the Λ(m)
    /// quotient: (0,3m−1) → (1,3m−2) → (2,3m−3) → (2,3m−2) → … →
    /// (2m,3m−3) → (2m,3m−2) → (2m,3m−1) ≡ (1,3m−1).
    pub fn build_path_p(&self, m: u32) -> Result<PathSeq, TqError> {
        self.check_lambda(m)?;
        let m = m as i64;
        let mut coords = vec![(0, (3 * m - 1) as u32), (1, (3 * m - 2) as u32)];
        for k in 2..=2 * m {
            coords.push((k, (3 * m - 3) as u32));
            coords.push((k, (3 * m - 2) as u32));
        }
        coords.push((2 * m, (3 * m - 1) as u32));
        self.path_through(&coords)
    }

    pub(crate) fn check_lambda(&self, m: u32) -> Result<(), TqError> {
        if self.graph.kind() != Kind::D
            || self.graph.rank() != 3 * m
            || self.r != 2 * m - 1
            || self.torsion != 1
        {
            return Err(TqError::NotLambdaQuotient);
        }
        Ok(())
    }

    /// The translation τ as an automorphism (stable quivers only).
    pub fn tau_automorphism(&self) -> Result<TqAutomorphism, TqError> {
        if !self.is_stable() {
            return Err(TqError::NotStable);
        }
        let vmap: Vec<usize> = (0..self.vertices.len())
            .map(|v| self.tau[v].unwrap())
            .collect();
        self.automorphism_from_vertex_map(vmap)
            .ok_or(TqError::NotStable)
    }

    /// Promote a vertex bijection to a full automorphism, checking that it
    /// maps arrows to arrows and commutes with τ. Returns `None` otherwise.
    pub fn automorphism_from_vertex_map(&self, vmap: Vec<usize>) -> Option<TqAutomorphism> {
        let nv = self.vertices.len();
        if vmap.len() != nv {
            return None;
        }
        let mut seen = vec![false; nv];
        for &im in &vmap {
            if im >= nv || seen[im] {
                return None;
            }
            seen[im] = true;
        }
        for v in 0..nv {
            match (self.tau[v], self.tau[vmap[v]]) {
                (Some(tv), Some(tgv)) => {
                    if vmap[tv] != tgv {
                        return None;
                    }
                }
                (None, None) => {}
                _ => return None,
            }
        }
        let mut amap = Vec::with_capacity(self.arrows.len());
        for a in &self.arrows {
            match self.arrow_by_ends.get(&(vmap[a.src], vmap[a.dst])) {
                Some(&ia) => amap.push(ia),
                None => return None,
            }
        }
        Some(TqAutomorphism { vmap, amap })
    }

    /// All translation-quiver automorphisms, found by slice propagation: an
    /// automorphism commuting with τ is determined by the image of one base
    /// vertex plus arrow-compatible choices propagated over the (connected)
    /// arrow graph; candidates are pruned against every arrow into the
    /// already-assigned region.
    pub fn automorphism_group(&self) -> Result<Vec<TqAutomorphism>, TqError> {
        if !self.is_stable() {
            return Err(TqError::NotStable);
        }
        let nv = self.vertices.len();
        // BFS order over the underlying undirected arrow graph (components
        // appended in vertex order; ℤA₁ quotients have no arrows at all).
        let mut order = Vec::with_capacity(nv);
        let mut in_order = vec![false; nv];
        for start in 0..nv {
            if in_order[start] {
                continue;
            }
            in_order[start] = true;
            order.push(start);
            let mut head = order.len() - 1;
            while head < order.len() {
                let v = order[head];
                head += 1;
                let nbrs = self.out[v]
                    .iter()
                    .map(|&a| self.arrows[a].dst)
                    .chain(self.inn[v].iter().map(|&a| self.arrows[a].src));
                for w in nbrs {
                    if !in_order[w] {
                        in_order[w] = true;
                        order.push(w);
                    }
                }
            }
        }

        let mut results = Vec::new();
        let mut assign = vec![usize::MAX; nv];
        let mut used = vec![false; nv];
        self.aut_search(&order, 0, &mut assign, &mut used, &mut results);
        results.sort();
        Ok(results)
    }

    fn aut_search(
        &self,
        order: &[usize],
        depth: usize,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        results: &mut Vec<TqAutomorphism>,
    ) {
        if depth == order.len() {
            if let Some(aut) = self.automorphism_from_vertex_map(assign.clone()) {
                results.push(aut);
            }
            return;
        }
        let v = order[depth];
        let candidates: Vec<usize> = if depth == 0 {
            (0..self.vertices.len()).collect()
        } else {
            // v is adjacent to some earlier-assigned vertex; use the first
            // such arrow to generate candidates.
            let mut cands = None;
            for &a in &self.inn[v] {
                let u = self.arrows[a].src;
                if assign[u] != usize::MAX {
                    cands = Some(
                        self.out[assign[u]]
                            .iter()
                            .map(|&b| self.arrows[b].dst)
                            .collect::<Vec<_>>(),
                    );
                    break;
                }
            }
            if cands.is_none() {
                for &a in &self.out[v] {
                    let u = self.arrows[a].dst;
                    if assign[u] != usize::MAX {
                        cands = Some(
                            self.inn[assign[u]]
                                .iter()
                                .map(|&b| self.arrows[b].src)
                                .collect::<Vec<_>>(),
                        );
                        break;
                    }
                }
            }
            // Components after the first start fresh: no assigned neighbor.
            cands.unwrap_or_else(|| (0..self.vertices.len()).collect())
        };
        'cand: for im in candidates {
            if used[im] {
                continue;
            }
            // Check all arrows between v and the assigned region.
            for &a in &self.out[v] {
                let w = assign[self.arrows[a].dst];
                if w != usize::MAX && !self.arrow_by_ends.contains_key(&(im, w)) {
                    continue 'cand;
                }
            }
            for &a in &self.inn[v] {
                let w = assign[self.arrows[a].src];
                if w != usize::MAX && !self.arrow_by_ends.contains_key(&(w, im)) {
                    continue 'cand;
                }
            }
            assign[v] = im;
            used[im] = true;
            self.aut_search(order, depth + 1, assign, used, results);
            assign[v] = usize::MAX;
            used[im] = false;
        }
    }

    /// Compose two automorphisms: `a` then `b`.
    pub fn compose(&self, a: &TqAutomorphism, b: &TqAutomorphism) -> TqAutomorphism {
        TqAutomorphism {
            vmap: a.vmap.iter().map(|&v| b.vmap[v]).collect(),
            amap: a.amap.iter().map(|&x| b.amap[x]).collect(),
        }
    }

    /// Number of τ-orbits of regular vertices.
    pub fn tau_orbit_count(&self) -> usize {
        let nv = self.vertices.len();
        let mut seen = vec![false; nv];
        let mut count = 0;
        for v in 0..nv {
            if seen[v] || !matches!(self.vertices[v], TqVertex::Reg { .. }) {
                continue;
            }
            count += 1;
            let mut w = v;
            loop {
                seen[w] = true;
                w = self.tau[w].unwrap();
                if seen[w] {
                    break;
                }
            }
        }
        count
    }

    /// Deterministic DOT rendering (vertices and arrows in id order).
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph tq {\n  rankdir=LR;\n");
        for v in &self.vertices {
            let shape = match v {
                TqVertex::Reg { .. } => "ellipse",
                TqVertex::Proj { .. } => "box",
            };
            s.push_str(&format!("  \"{}\" [shape={}];\n", v.name(), shape));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.vertices[a.src].name(),
                self.vertices[a.dst].name()
            ));
        }
        s.push_str("}\n");
        s
    }

    /// Deterministic JSON description.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<String> = self.vertices.iter().map(|v| v.name()).collect();
        let arrows: Vec<serde_json::Value> = self
            .arrows
            .iter()
            .map(|a| {
                serde_json::json!({
                    "src": self.vertices[a.src].name(),
                    "dst": self.vertices[a.dst].name(),
                })
            })
            .collect();
        let tau: BTreeMap<String, String> = self
            .tau
            .iter()
            .enumerate()
            .filter_map(|(v, t)| t.map(|t| (self.vertices[v].name(), self.vertices[t].name())))
            .collect();
        serde_json::json!({
            "graph": self.graph.to_string(),
            "tau_period": self.r,
            "torsion": self.torsion,
            "vertex_count": self.vertices.len(),
            "arrow_count": self.arrows.len(),
            "tau_orbits": self.tau_orbit_count(),
            "vertices": vertices,
            "arrows": arrows,
            "tau": tau,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::Kind;

    fn ty(kind: Kind, n: u32, f: &str, t: u32) -> Result<RfsType, TypeError> {
        validate_type(DynkinGraph::new(kind, n).unwrap(), f.parse().unwrap(), t)
    }

    #[test]
    fn admissibility_table() {
        assert!(ty(Kind::A, 3, "2/3", 1).is_ok());
        assert!(ty(Kind::A, 3, "1/2", 1).is_err());
        assert!(ty(Kind::A, 4, "1", 2).is_err()); // even rank flip is not admissible
        assert!(ty(Kind::A, 3, "1", 2).is_ok());
        assert!(ty(Kind::A, 3, "1/3", 2).is_err());
        assert!(ty(Kind::D, 6, "1/3", 1).is_ok());
        assert!(ty(Kind::D, 6, "2/3", 1).is_ok());
        assert!(ty(Kind::D, 6, "3/3", 1).is_ok()); // reduces to integer f = 1
        assert!(ty(Kind::D, 7, "1/3", 1).is_err());
        assert!(ty(Kind::D, 4, "1", 3).is_ok());
        assert!(ty(Kind::D, 5, "1", 3).is_err());
        assert!(ty(Kind::E, 6, "1", 2).is_ok());
        assert!(ty(Kind::E, 7, "1", 2).is_err());
        assert!(ty(Kind::E, 7, "1", 1).is_ok());
        assert!("0/1".parse::<Frequency>().is_err());
    }

    #[test]
    fn tau_periods() {
        assert_eq!(ty(Kind::A, 3, "2/3", 1).unwrap().tau_period(), 2);
        assert_eq!(ty(Kind::A, 3, "1", 2).unwrap().tau_period(), 3);
        assert_eq!(ty(Kind::D, 6, "1/3", 1).unwrap().tau_period(), 3);
        assert_eq!(ty(Kind::D, 4, "1", 3).unwrap().tau_period(), 5);
        assert_eq!(ty(Kind::E, 6, "1", 1).unwrap().tau_period(), 11);
        assert_eq!(RfsType::lambda(3).tau_period(), 5);
    }

    #[test]
    fn quotient_counts() {
        // (D6, 1/3, 1): 18 vertices, 2·r·|edges| = 30 arrows, 6 τ-orbits.
        let tq = build_quotient(&ty(Kind::D, 6, "1/3", 1).unwrap());
        assert_eq!(tq.vertices().len(), 18);
        assert_eq!(tq.arrows().len(), 30);
        assert_eq!(tq.tau_orbit_count(), 6);

        // (A3, 2/3, 1): 6 vertices, τ-period 2.
        let tq = build_quotient(&ty(Kind::A, 3, "2/3", 1).unwrap());
        assert_eq!(tq.vertices().len(), 6);
        assert_eq!(tq.tau_period(), 2);

        // (A3, 1, 2): flip-twisted wrap leaves 9 canonical vertices.
        let tq = build_quotient(&ty(Kind::A, 3, "1", 2).unwrap());
        assert_eq!(tq.vertices().len(), 9);
        assert_eq!(tq.arrows().len(), 2 * 3 * 2);

        // (D4, 1, 3): 20 canonical vertices.
        let tq = build_quotient(&ty(Kind::D, 4, "1", 3).unwrap());
        assert_eq!(tq.vertices().len(), 20);
    }

    #[test]
    fn twisted_wrap_is_consistent() {
        // In (A3, 1, 2) the generator is G = Z(flip)·τ^{-3} with layer shifts
        // d = (−1, 0, 1), so (0,1) ~ G(0,1) = (0+3−1, 3) = (2, 3).
        let tq = build_quotient(&ty(Kind::A, 3, "1", 2).unwrap());
        assert_eq!(tq.canonicalize(0, 1), tq.canonicalize(2, 3));
        // Every vertex id round-trips through canonicalization.
        for (i, v) in tq.vertices().iter().enumerate() {
            let TqVertex::Reg { layer, pos } = v else {
                unreachable!()
            };
            assert_eq!(tq.vertex(*layer as i64, *pos).unwrap(), i);
        }
    }

    #[test]
    fn sigma_squared_is_tau_shift() {
        for t in [
            ty(Kind::D, 6, "1/3", 1).unwrap(),
            ty(Kind::A, 3, "1", 2).unwrap(),
            ty(Kind::D, 4, "1", 3).unwrap(),
        ] {
            let tq = build_quotient(&t);
            for a in 0..tq.arrows().len() {
                let s2 = tq.sigma(tq.sigma(a).unwrap()).unwrap();
                let orig = &tq.arrows()[a];
                let img = &tq.arrows()[s2];
                assert_eq!(img.src, tq.tau(orig.src).unwrap());
                assert_eq!(img.dst, tq.tau(orig.dst).unwrap());
            }
        }
    }

    #[test]
    fn mesh_arms_d6() {
        // x = (0,4) in (D6, 1/3, 1): arms through (0,5), (0,6) and (1,3).
        let tq = build_quotient(&ty(Kind::D, 6, "1/3", 1).unwrap());
        let x = tq.vertex(0, 4).unwrap();
        let arms = tq.mesh_summands(x).unwrap();
        let mids: Vec<TqVertex> = arms
            .iter()
            .map(|&(a, _)| tq.vertices()[tq.arrows()[a].dst])
            .collect();
        let expect: Vec<TqVertex> = [(0, 5), (0, 6), (1, 3)]
            .iter()
            .map(|&(layer, pos)| TqVertex::Reg { layer, pos })
            .collect();
        let mut mids = mids;
        mids.sort();
        assert_eq!(mids, expect);
        for &(_, b) in &arms {
            assert_eq!(tq.arrows()[b].dst, tq.tau_inv(x).unwrap());
        }
    }

    #[test]
    fn za2_mod_tau_single_arm() {
        let tq = build_quotient(&ty(Kind::A, 2, "1/2", 1).unwrap());
        assert_eq!(tq.vertices().len(), 2);
        let x = tq.vertex(0, 1).unwrap();
        let arms = tq.mesh_summands(x).unwrap();
        assert_eq!(arms.len(), 1);
        assert_eq!(
            tq.vertices()[tq.arrows()[arms[0].0].dst],
            TqVertex::Reg { layer: 0, pos: 2 }
        );
        // Exactly one length-2 path (0,1) → (0,1).
        assert_eq!(tq.enumerate_paths(x, x, 2).len(), 1);
    }

    #[test]
    fn path_p_endpoints_and_length() {
        for m in [2u32, 3, 4] {
            let tq = build_quotient(&RfsType::lambda(m));
            let p = tq.build_path_p(m).unwrap();
            assert_eq!(p.len(), (4 * m) as usize);
            assert_eq!(tq.vertices()[p.source].name(), format!("0:{}", 3 * m - 1));
            let tgt = tq.path_target(&p);
            assert_eq!(tq.vertices()[tgt].name(), format!("1:{}", 3 * m - 1));
        }
    }

    #[test]
    fn attach_projectives_structure() {
        let m = 2;
        let tq = build_quotient(&RfsType::lambda(m));
        // C_Λ for m = 2: {(0,5), (2,1)}.
        let full = tq.attach_projectives(&[(0, 5), (2, 1)]).unwrap();
        assert_eq!(full.vertices().len(), 20);
        assert_eq!(full.arrows().len(), 34);
        // Mesh at (0,5) gains the projective arm: arms through (1,4) and P(0:5).
        let x = full.vertex(0, 5).unwrap();
        let arms = full.mesh_summands(x).unwrap();
        let mut mids: Vec<String> = arms
            .iter()
            .map(|&(a, _)| full.vertices()[full.arrows()[a].dst].name())
            .collect();
        mids.sort();
        assert_eq!(mids, vec!["1:4".to_string(), "P(0:5)".to_string()]);
        // σ pairs κ with ι.
        let pc = full.vertex_id(TqVertex::Proj { layer: 0, pos: 5 }).unwrap();
        let iota = full.arrow_between(x, pc).unwrap();
        let kappa = full.arrow_between(pc, full.tau_inv(x).unwrap()).unwrap();
        assert_eq!(full.sigma(kappa), Some(iota));
        assert_eq!(full.sigma(iota), None);
    }

    #[test]
    fn automorphism_groups_of_quotients() {
        // ℤA₁/τ^s is rigid except for τ: cyclic of order s.
        for s in 1..=4 {
            let t = ty(Kind::A, 1, &format!("{s}/1"), 1).unwrap();
            let tq = build_quotient(&t);
            assert_eq!(tq.automorphism_group().unwrap().len(), s as usize);
        }
        // Λ quotients: ⟨τ⟩ × ⟨η⟩ of order 2(2m−1).
        for m in [2u32, 3] {
            let tq = build_quotient(&RfsType::lambda(m));
            assert_eq!(
                tq.automorphism_group().unwrap().len(),
                2 * (2 * m as usize - 1)
            );
        }
    }

    #[test]
    fn dot_output_is_deterministic() {
        let tq = build_quotient(&ty(Kind::A, 2, "1/2", 1).unwrap());
        let dot = tq.to_dot();
        assert_eq!(dot, tq.to_dot());
        assert!(dot.contains("\"0:1\" -> \"0:2\""));
        assert!(dot.contains("\"0:2\" -> \"0:1\""));
    }
}
