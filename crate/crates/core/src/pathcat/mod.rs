//! Exact linear algebra in path categories modulo an ideal.
//!
//! A quiver with finitely many vertices presents a path category; an ideal
//! given by uniform elements (fixed source and target) presents a quotient.
//! Two independent engines compute Hom-space data:
//!
//! * [`rewrite`]: noncommutative rewriting. Generators are completed to a
//!   confluent system under the degree-lexicographic order (Bergman's diamond
//!   lemma / Buchberger-style overlap completion); Hom bases are the normal
//!   words. Works for inhomogeneous ideals such as the modified mesh ideal.
//! * [`degreewise`]: for homogeneous ideals, per-degree Gaussian elimination
//!   of the span of `u·g·v` inside the span of paths of each length.
//!
//! The two engines are required by the test suite to agree on every
//! homogeneous instance they share.

pub mod degreewise;
pub mod present;
pub mod rewrite;

use crate::field::Field;
use crate::tquiver::{PathSeq, TqVertex, TranslationQuiver};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;
use thiserror::Error;

/// A composable word of arrow ids in application order (`w[0]` acts first).
///
/// Ordered degree-lexicographically: first by length, then lexicographically
/// by arrow ids. This order is admissible (compatible with concatenation on
/// both sides), which is what completion and reduction termination rely on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The ambient quiver data the path-category engines work over.
#[derive(Debug)]
pub struct PathContext {
    /// Number of vertices.
    pub nv: usize,
    /// Arrow endpoints `(src, dst)`.
    pub arrows: Vec<(usize, usize)>,
    /// Outgoing arrow ids per vertex, sorted.
    pub out: Vec<Vec<u32>>,
    /// Display names of the vertices.
    pub names: Vec<String>,
}

impl PathContext {
    pub fn new(nv: usize, arrows: Vec<(usize, usize)>, names: Vec<String>) -> Arc<PathContext> {
        assert_eq!(names.len(), nv);
        let mut out = vec![Vec::new(); nv];
        for (i, &(s, d)) in arrows.iter().enumerate() {
            assert!(s < nv && d < nv);
            out[s].push(i as u32);
        }
        Arc::new(PathContext {
            nv,
            arrows,
            out,
            names,
        })
    }

    pub fn from_tquiver(tq: &TranslationQuiver) -> Arc<PathContext> {
        PathContext::new(
            tq.vertices().len(),
            tq.arrows().iter().map(|a| (a.src, a.dst)).collect(),
            tq.vertices().iter().map(TqVertex::name).collect(),
        )
    }

    /// Endpoints of a non-empty composable word; `None` if not composable.
    pub fn endpoints(&self, w: &Word) -> Option<(usize, usize)> {
        let first = *w.0.first()?;
        let mut at = self.arrows[first as usize].0;
        let src = at;
        for &a in &w.0 {
            let (s, d) = self.arrows[a as usize];
            if s != at {
                return None;
            }
            at = d;
        }
        Some((src, at))
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("budget exceeded during {0}")]
    Budget(String),
    #[error("ideal is not homogeneous; the per-degree engine requires homogeneous generators")]
    NotHomogeneous,
    #[error("ideal is not admissible: completed generator with leading word of length {0}")]
    NotAdmissible(usize),
    #[error("quotient is not finite-dimensional within configured bounds")]
    NotFiniteDimensional,
    #[error("operation unsupported by this engine: {0}")]
    Unsupported(String),
    #[error("field characteristic must be 2 for this construction")]
    WrongCharacteristic,
    #[error("malformed element: {0}")]
    Malformed(String),
}

/// Resource limits for engine runs. `deadline` is wall-clock; `max_steps`
/// counts elementary reduction/elimination steps.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub deadline: Option<Instant>,
    pub max_steps: u64,
    pub max_dim: usize,
    pub max_degree: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            deadline: None,
            max_steps: 500_000_000,
            max_dim: 500_000,
            max_degree: 10_000,
        }
    }
}

impl Budget {
    pub fn with_secs(secs: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + std::time::Duration::from_secs(secs)),
            ..Budget::default()
        }
    }
}

/// Mutable step counter for a budgeted run.
#[derive(Debug)]
pub struct BudgetTracker {
    budget: Budget,
    steps: u64,
}

impl BudgetTracker {
    pub fn new(budget: Budget) -> Self {
        BudgetTracker { budget, steps: 0 }
    }

    pub fn tick(&mut self, what: &str) -> Result<(), EngineError> {
        self.steps += 1;
        if self.steps > self.budget.max_steps {
            return Err(EngineError::Budget(what.to_string()));
        }
        if self.steps.is_multiple_of(4096) {
            if let Some(deadline) = self.budget.deadline {
                if Instant::now() > deadline {
                    return Err(EngineError::Budget(what.to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }
}

/// A finite linear combination of parallel paths (uniform source and target).
#[derive(Clone, Debug)]
pub struct PathVec<F: Field> {
    pub src: usize,
    pub tgt: usize,
    pub terms: BTreeMap<Word, F::Elem>,
}

impl<F: Field> PathVec<F> {
    pub fn zero(src: usize, tgt: usize) -> Self {
        PathVec {
            src,
            tgt,
            terms: BTreeMap::new(),
        }
    }

    /// The identity morphism at `v` (the empty word).
    pub fn identity(field: &F, v: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Word::empty(), field.one());
        PathVec {
            src: v,
            tgt: v,
            terms,
        }
    }

    pub fn from_word(
        ctx: &PathContext,
        field: &F,
        src: usize,
        w: Word,
    ) -> Result<Self, EngineError> {
        let (s, t) = if w.is_empty() {
            (src, src)
        } else {
            let e = ctx
                .endpoints(&w)
                .ok_or_else(|| EngineError::Malformed("word is not composable".into()))?;
            if e.0 != src {
                return Err(EngineError::Malformed("word source mismatch".into()));
            }
            e
        };
        let mut terms = BTreeMap::new();
        terms.insert(w, field.one());
        Ok(PathVec {
            src: s,
            tgt: t,
            terms,
        })
    }

    pub fn from_pathseq(ctx: &PathContext, field: &F, p: &PathSeq) -> Result<Self, EngineError> {
        Self::from_word(ctx, field, p.source, Word(p.arrows.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Word, &F::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, field: &F, w: Word, c: F::Elem) {
        if field.is_zero(&c) {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = field.add(e.get(), &c);
                if field.is_zero(&sum) {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, field: &F, other: &PathVec<F>) -> PathVec<F> {
        assert_eq!((self.src, self.tgt), (other.src, other.tgt));
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(field, w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, field: &F, other: &PathVec<F>) -> PathVec<F> {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(field, w.clone(), field.neg(c));
        }
        out
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> PathVec<F> {
        let mut out = PathVec::zero(self.src, self.tgt);
        for (w, x) in &self.terms {
            out.add_term(field, w.clone(), field.mul(x, c));
        }
        out
    }

    /// Composition: `self` first, then `other` (i.e. `other ∘ self`).
    pub fn then(&self, field: &F, other: &PathVec<F>) -> PathVec<F> {
        assert_eq!(self.tgt, other.src, "composition endpoint mismatch");
        let mut out = PathVec::zero(self.src, other.tgt);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(field, w1.concat(w2), field.mul(c1, c2));
            }
        }
        out
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, field: &F) -> PathVec<F> {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(field, &field.inv(c)),
        }
    }
}

/// An ideal presented by uniform generators.
#[derive(Clone, Debug)]
pub struct IdealSpec<F: Field> {
    pub gens: Vec<PathVec<F>>,
}

impl<F: Field> IdealSpec<F> {
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| {
            let mut lens = g.terms.keys().map(Word::len);
            match lens.next() {
                None => true,
                Some(first) => lens.all(|l| l == first),
            }
        })
    }
}

/// The mesh ideal of a (possibly projective-augmented) quotient translation
/// quiver: one generator `m_x = Σ arms β∘α` per vertex `x` with `τ⁻¹x`
/// defined, including arms through projective vertices.
pub fn mesh_ideal<F: Field>(tq: &TranslationQuiver, field: &F) -> IdealSpec<F> {
    let mut gens = Vec::new();
    for x in 0..tq.vertices().len() {
        if tq.tau_inv(x).is_none() {
            continue;
        }
        let arms = tq.mesh_summands(x).expect("τ⁻¹x exists");
        let mut m = PathVec::zero(x, tq.tau_inv(x).unwrap());
        for (a, b) in arms {
            m.add_term(field, Word(vec![a as u32, b as u32]), field.one());
        }
        gens.push(m);
    }
    gens.sort_by_key(|a| (a.src, a.tgt));
    IdealSpec { gens }
}

/// The modified mesh ideal of a Λ(m) quotient (stable or with projectives
/// attached): every mesh generator except `m_{(0,3m−1)}`, which is replaced
/// by `m_{(0,3m−1)} + p` with `p` the length-4m deviation path. Only defined
/// in characteristic 2.
pub fn modified_mesh_ideal<F: Field>(
    tq: &TranslationQuiver,
    m: u32,
    field: &F,
) -> Result<IdealSpec<F>, EngineError> {
    if field.characteristic() != 2 {
        return Err(EngineError::WrongCharacteristic);
    }
    tq.check_lambda(m)
        .map_err(|e| EngineError::Malformed(e.to_string()))?;
    let x0 = tq
        .vertex(0, 3 * m - 1)
        .map_err(|e| EngineError::Malformed(e.to_string()))?;
    let p = tq
        .build_path_p(m)
        .map_err(|e| EngineError::Malformed(e.to_string()))?;
    let ctx = PathContext::from_tquiver(tq);
    let pvec = PathVec::from_pathseq(&ctx, field, &p)?;
    let mut ideal = mesh_ideal(tq, field);
    for g in &mut ideal.gens {
        if g.src == x0 {
            assert_eq!(g.tgt, pvec.tgt, "p must run (0,3m−1) → τ⁻¹(0,3m−1)");
            *g = g.add(field, &pvec);
        }
    }
    Ok(ideal)
}

/// Which engine backs a [`QuotientCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineKind {
    Rewrite,
    Degreewise,
}

enum EngineState<F: Field> {
    Rewrite(rewrite::RewriteSystem<F>),
    Degreewise { vanish_degree: usize },
}

/// A path category modulo an ideal, with precomputed Hom data.
pub struct QuotientCategory<F: Field> {
    pub ctx: Arc<PathContext>,
    field: F,
    ideal: IdealSpec<F>,
    state: EngineState<F>,
    /// `dims[x][y] = dim Hom(x, y)`.
    dims: Vec<Vec<usize>>,
    /// Basis words per (source, target).
    bases: BTreeMap<(usize, usize), Vec<Word>>,
}

impl<F: Field> QuotientCategory<F> {
    /// Build with the rewriting engine (any uniform ideal).
    pub fn build_rewrite(
        ctx: Arc<PathContext>,
        field: F,
        ideal: IdealSpec<F>,
        budget: Budget,
    ) -> Result<Self, EngineError> {
        let mut tracker = BudgetTracker::new(budget);
        let mut system = rewrite::RewriteSystem::new(ctx.clone(), field.clone());
        system.complete(ideal.gens.clone(), &mut tracker)?;
        let words = system.normal_words(&mut tracker)?;
        let mut dims = vec![vec![0usize; ctx.nv]; ctx.nv];
        let mut bases: BTreeMap<(usize, usize), Vec<Word>> = BTreeMap::new();
        for (src, tgt, w) in words {
            dims[src][tgt] += 1;
            bases.entry((src, tgt)).or_default().push(w);
        }
        Ok(QuotientCategory {
            ctx,
            field,
            ideal,
            state: EngineState::Rewrite(system),
            dims,
            bases,
        })
    }

    /// Build with the per-degree engine (homogeneous ideals only).
    pub fn build_degreewise(
        ctx: Arc<PathContext>,
        field: F,
        ideal: IdealSpec<F>,
        budget: Budget,
    ) -> Result<Self, EngineError> {
        if !ideal.is_homogeneous() {
            return Err(EngineError::NotHomogeneous);
        }
        let mut tracker = BudgetTracker::new(budget);
        let out = degreewise::compute(&ctx, &field, &ideal, &mut tracker)?;
        Ok(QuotientCategory {
            ctx,
            field,
            ideal,
            state: EngineState::Degreewise {
                vanish_degree: out.vanish_degree,
            },
            dims: out.dims,
            bases: out.bases,
        })
    }

    pub fn build(
        ctx: Arc<PathContext>,
        field: F,
        ideal: IdealSpec<F>,
        kind: EngineKind,
        budget: Budget,
    ) -> Result<Self, EngineError> {
        match kind {
            EngineKind::Rewrite => Self::build_rewrite(ctx, field, ideal, budget),
            EngineKind::Degreewise => Self::build_degreewise(ctx, field, ideal, budget),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ideal(&self) -> &IdealSpec<F> {
        &self.ideal
    }

    pub fn engine_kind(&self) -> EngineKind {
        match self.state {
            EngineState::Rewrite(_) => EngineKind::Rewrite,
            EngineState::Degreewise { .. } => EngineKind::Degreewise,
        }
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.dims[x][y]
    }

    pub fn dims(&self) -> &Vec<Vec<usize>> {
        &self.dims
    }

    /// Basis of Hom(x, y) as residue classes of paths.
    pub fn hom_basis(&self, x: usize, y: usize) -> Vec<Word> {
        self.bases.get(&(x, y)).cloned().unwrap_or_default()
    }

    pub fn total_dimension(&self) -> usize {
        self.dims.iter().flatten().sum()
    }

    /// Normal form of an element (rewriting engine only).
    pub fn normal_form(&self, e: &PathVec<F>) -> Result<PathVec<F>, EngineError> {
        match &self.state {
            EngineState::Rewrite(sys) => {
                let mut tracker = BudgetTracker::new(Budget::default());
                sys.normal_form(e.clone(), None, &mut tracker)
            }
            EngineState::Degreewise { .. } => Err(EngineError::Unsupported(
                "normal_form requires the rewriting engine".into(),
            )),
        }
    }

    /// Normal form plus the explicit ideal-membership certificate:
    /// `e = nf + Σ cᵢ · (preᵢ ∘ gen ∘ sufᵢ)` over the *completed* system,
    /// each of whose members in turn reduced from the input generators.
    pub fn normal_form_with_trace(
        &self,
        e: &PathVec<F>,
    ) -> Result<(PathVec<F>, Vec<rewrite::TraceStep<F>>), EngineError> {
        match &self.state {
            EngineState::Rewrite(sys) => {
                let mut tracker = BudgetTracker::new(Budget::default());
                let mut trace = Vec::new();
                let nf = sys.normal_form(e.clone(), Some(&mut trace), &mut tracker)?;
                Ok((nf, trace))
            }
            EngineState::Degreewise { .. } => Err(EngineError::Unsupported(
                "traces require the rewriting engine".into(),
            )),
        }
    }

    /// The completed rewriting system, when this category was built with the
    /// rewriting engine. Exposed so external checks can replay reduction
    /// traces against the generators.
    pub fn rewrite_system(&self) -> Option<&rewrite::RewriteSystem<F>> {
        match &self.state {
            EngineState::Rewrite(sys) => Some(sys),
            EngineState::Degreewise { .. } => None,
        }
    }

    /// Check all completed leading words have length ≥ 2 (admissible ideal).
    pub fn check_admissible(&self) -> Result<(), EngineError> {
        if let EngineState::Rewrite(sys) = &self.state {
            for g in sys.generators() {
                let len = g.leading().map(|(w, _)| w.len()).unwrap_or(0);
                if len < 2 {
                    return Err(EngineError::NotAdmissible(len));
                }
            }
        }
        Ok(())
    }

    /// The nilpotency index N of the radical: the least N such that every
    /// path of length ≥ N is zero in the quotient. Returns N and a witness
    /// path of length N−1 that is nonzero (when N ≥ 2).
    ///
    /// Rewriting engine: iterate `S_d = span{NF(p) : |p| = d}` via
    /// `S_{d+1} = Σ_a NF(S_d · a)`; N is the first empty degree. Sound for
    /// inhomogeneous ideals because NF is linear and multiplicative-compatible.
    pub fn nilpotency_index(&self) -> Result<(usize, Option<Word>), EngineError> {
        match &self.state {
            EngineState::Degreewise { vanish_degree } => Ok((*vanish_degree, None)),
            EngineState::Rewrite(sys) => {
                let mut tracker = BudgetTracker::new(Budget::default());
                // Index the normal words.
                let mut index: std::collections::HashMap<(usize, Word), usize> =
                    std::collections::HashMap::new();
                let mut rev: Vec<(usize, Word)> = Vec::new();
                for ((src, _tgt), words) in &self.bases {
                    for w in words {
                        index.insert((*src, w.clone()), rev.len());
                        rev.push((*src, w.clone()));
                    }
                }
                let f = &self.field;
                // A row: sparse vector over normal-word ids, plus its witness
                // path (src, word) and the shared target of all its words.
                struct Row<E> {
                    vec: BTreeMap<usize, E>,
                    witness: (usize, Word),
                    tgt: usize,
                }
                let to_vec = |nf: &PathVec<F>| -> BTreeMap<usize, F::Elem> {
                    nf.terms
                        .iter()
                        .map(|(w, c)| (index[&(nf.src, w.clone())], c.clone()))
                        .collect()
                };
                let reduce_insert = |rows: &mut Vec<Row<F::Elem>>, mut r: Row<F::Elem>| -> bool {
                    for row in rows.iter() {
                        let Some((&pivot, _)) = row.vec.iter().next() else {
                            continue;
                        };
                        if let Some(c) = r.vec.get(&pivot).cloned() {
                            let pc = row.vec[&pivot].clone();
                            let factor = f.mul(&c, &f.inv(&pc));
                            for (k, v) in &row.vec {
                                let cur = r.vec.remove(k).unwrap_or_else(|| f.zero());
                                let upd = f.sub(&cur, &f.mul(&factor, v));
                                if !f.is_zero(&upd) {
                                    r.vec.insert(*k, upd);
                                }
                            }
                        }
                    }
                    if r.vec.is_empty() {
                        false
                    } else {
                        rows.push(r);
                        true
                    }
                };

                let mut current: Vec<Row<F::Elem>> = Vec::new();
                for v in 0..self.ctx.nv {
                    let id = PathVec::identity(f, v);
                    let nf = sys.normal_form(id, None, &mut tracker)?;
                    if !nf.is_zero() {
                        let r = Row {
                            vec: to_vec(&nf),
                            witness: (v, Word::empty()),
                            tgt: v,
                        };
                        reduce_insert(&mut current, r);
                    }
                }
                let max_n = self.total_dimension() + 2;
                let mut d = 0usize;
                let mut last_witness: Option<Word> = None;
                while !current.is_empty() {
                    last_witness = Some(current[0].witness.1.clone());
                    d += 1;
                    if d > max_n {
                        return Err(EngineError::NotFiniteDimensional);
                    }
                    let mut next: Vec<Row<F::Elem>> = Vec::new();
                    for row in &current {
                        for &a in &self.ctx.out[row.tgt] {
                            tracker.tick("nilpotency iteration")?;
                            // Multiply the row by arrow a: extend each normal
                            // word and re-normalize.
                            let mut prod =
                                PathVec::<F>::zero(row.witness.0, self.ctx.arrows[a as usize].1);
                            for (&id, c) in &row.vec {
                                let (src, w) = &rev[id];
                                let mut ext = w.0.clone();
                                ext.push(a);
                                prod.src = *src;
                                prod.add_term(&self.field, Word(ext), c.clone());
                            }
                            let nf = sys.normal_form(prod, None, &mut tracker)?;
                            if nf.is_zero() {
                                continue;
                            }
                            let mut wit = row.witness.1 .0.clone();
                            wit.push(a);
                            let r = Row {
                                vec: to_vec(&nf),
                                witness: (row.witness.0, Word(wit)),
                                tgt: self.ctx.arrows[a as usize].1,
                            };
                            reduce_insert(&mut next, r);
                        }
                    }
                    current = next;
                }
                Ok((d, last_witness))
            }
        }
    }
}

/// Comparison of full vs stable Hom dimensions at a pair of coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StableVsFull {
    pub dim_full: usize,
    pub dim_stable: usize,
    pub dim_projective_factoring: usize,
}

/// Compare `dim Hom` between a full quotient category (projectives attached)
/// and the stable one at regular coordinates `x`, `y`. The difference is the
/// dimension of the space of morphisms factoring through projectives.
pub fn stable_vs_full<F: Field>(
    full_tq: &TranslationQuiver,
    full: &QuotientCategory<F>,
    stable_tq: &TranslationQuiver,
    stable: &QuotientCategory<F>,
    x: (i64, u32),
    y: (i64, u32),
) -> Result<StableVsFull, EngineError> {
    let err = |e: crate::tquiver::TqError| EngineError::Malformed(e.to_string());
    let fx = full_tq.vertex(x.0, x.1).map_err(err)?;
    let fy = full_tq.vertex(y.0, y.1).map_err(err)?;
    let sx = stable_tq.vertex(x.0, x.1).map_err(err)?;
    let sy = stable_tq.vertex(y.0, y.1).map_err(err)?;
    let dim_full = full.hom_dim(fx, fy);
    let dim_stable = stable.hom_dim(sx, sy);
    if dim_full < dim_stable {
        return Err(EngineError::Malformed(
            "full Hom smaller than stable Hom; engines disagree".into(),
        ));
    }
    Ok(StableVsFull {
        dim_full,
        dim_stable,
        dim_projective_factoring: dim_full - dim_stable,
    })
}
