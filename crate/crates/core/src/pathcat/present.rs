//! Quiver presentations of the algebras attached to RFS types, and module
//! structure read off from the quotient category.
//!
//! * `nakayama(n, s)`: the self-injective Nakayama algebra with s vertices on
//!   a cyclic quiver and all paths of length n+1 equal to zero (Loewy length
//!   n+1); its stable AR-quiver is ℤA_n/τ^s.
//! * `lambda(m)`: the representative nonstandard algebra Λ(m) of type
//!   (D_{3m}, 1/3, 1): cyclic quiver 1 → 2 → … → m → 1 with arrows α_i plus a
//!   loop β at 1, relations α_m…α_1 = β², α_i…α_{i+1}α_i = 0 and
//!   α_1α_m = α_1βα_m.

use super::{Budget, EngineError, IdealSpec, PathContext, PathVec, QuotientCategory, Word};
use crate::field::Field;
use std::sync::Arc;

/// A quiver together with an admissible-ideal presentation of an algebra.
pub struct AlgebraPresentation<F: Field> {
    pub ctx: Arc<PathContext>,
    pub relations: IdealSpec<F>,
}

/// The cyclic Nakayama algebra: vertices `1..=s` (ids `0..s`), arrows
/// `α_i : i → i+1 (mod s)`, relations: all paths of length n+1 vanish.
pub fn nakayama<F: Field>(n: u32, s: u32, field: &F) -> AlgebraPresentation<F> {
    assert!(n >= 1 && s >= 1);
    let s = s as usize;
    let arrows: Vec<(usize, usize)> = (0..s).map(|i| (i, (i + 1) % s)).collect();
    let names = (1..=s).map(|i| format!("v{i}")).collect();
    let ctx = PathContext::new(s, arrows, names);
    let mut gens = Vec::new();
    for i in 0..s {
        let word: Vec<u32> = (0..=n).map(|k| ((i + k as usize) % s) as u32).collect();
        gens.push(PathVec::from_word(&ctx, field, i, Word(word)).unwrap());
    }
    AlgebraPresentation {
        ctx,
        relations: IdealSpec { gens },
    }
}

/// The nonstandard algebra Λ(m), m ≥ 2. Arrow ids: `0..m` are α_1..α_m
/// (α_i has id i−1), id `m` is the loop β at vertex 1 (id 0).
pub fn lambda<F: Field>(m: u32, field: &F) -> Result<AlgebraPresentation<F>, EngineError> {
    assert!(m >= 2);
    if field.characteristic() != 2 {
        return Err(EngineError::WrongCharacteristic);
    }
    let m = m as usize;
    let mut arrows: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    arrows.push((0, 0)); // β
    let beta = m as u32;
    let alpha = |i: usize| ((i - 1) % m) as u32; // α_i, 1-based index
    let names = (1..=m).map(|i| format!("v{i}")).collect();
    let ctx = PathContext::new(m, arrows, names);

    let mut gens = Vec::new();
    // α_m…α_1 − β² (a cycle at vertex 1, application order α_1 first).
    let around: Vec<u32> = (1..=m).map(alpha).collect();
    let c1 = PathVec::from_word(&ctx, field, 0, Word(around)).unwrap();
    let b2 = PathVec::from_word(&ctx, field, 0, Word(vec![beta, beta])).unwrap();
    gens.push(c1.sub(field, &b2));
    // α_i…α_{i+1}α_i = 0: the m+1-arrow cycle starting and re-entering at i.
    for i in 1..=m {
        let word: Vec<u32> = (0..=m).map(|k| alpha((i + k - 1) % m + 1)).collect();
        gens.push(PathVec::from_word(&ctx, field, i - 1, Word(word)).unwrap());
    }
    // α_1α_m − α_1βα_m (paths m → 2; application order α_m first).
    let lhs = PathVec::from_word(&ctx, field, m - 1, Word(vec![alpha(m), alpha(1)])).unwrap();
    let rhs = PathVec::from_word(&ctx, field, m - 1, Word(vec![alpha(m), beta, alpha(1)])).unwrap();
    gens.push(lhs.sub(field, &rhs));

    Ok(AlgebraPresentation {
        ctx,
        relations: IdealSpec { gens },
    })
}

impl<F: Field> AlgebraPresentation<F> {
    /// Build the quotient algebra (as a category with one object per vertex)
    /// with the rewriting engine and check admissibility.
    pub fn quotient(&self, field: F, budget: Budget) -> Result<QuotientCategory<F>, EngineError> {
        let qc = QuotientCategory::build_rewrite(
            self.ctx.clone(),
            field,
            IdealSpec {
                gens: self.relations.gens.clone(),
            },
            budget,
        )?;
        qc.check_admissible()?;
        Ok(qc)
    }
}

/// Dimensions of the indecomposable projective `P_v = A·e_v` (paths starting
/// at `v`): total dimension and radical layer dimensions
/// `dim rad^k P / rad^{k+1} P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoewyData {
    pub vertex: usize,
    pub dim: usize,
    pub layers: Vec<usize>,
}

impl LoewyData {
    pub fn loewy_length(&self) -> usize {
        self.layers.len()
    }
}

/// A spanning set for one radical layer: sparse rows over the global
/// normal-word index, each tagged with the degree-0 vertex it came from.
type SparseLayer<F> = Vec<(std::collections::BTreeMap<usize, <F as Field>::Elem>, usize)>;

/// Radical filtration of every projective, computed from normal forms:
/// `T_d = span{NF(p) : p starts at v, |p| = d}`, `rad^k = Σ_{d ≥ k} T_d`.
/// Exact also for inhomogeneous ideals, where path classes can drop degree.
pub fn loewy_data<F: Field>(qc: &QuotientCategory<F>) -> Result<Vec<LoewyData>, EngineError> {
    let sys = qc.rewrite_system().ok_or_else(|| {
        EngineError::Unsupported("loewy_data requires the rewriting engine".into())
    })?;
    let f = qc.field().clone();
    let mut tracker = super::BudgetTracker::new(Budget::default());
    // Global normal-word index.
    let mut index: std::collections::HashMap<(usize, Word), usize> =
        std::collections::HashMap::new();
    let mut rev: Vec<Word> = Vec::new();
    for x in 0..qc.ctx.nv {
        for y in 0..qc.ctx.nv {
            for w in qc.hom_basis(x, y) {
                index.insert((x, w.clone()), rev.len());
                rev.push(w);
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..qc.ctx.nv {
        // T_d bases as sparse rows; keep all degrees.
        let mut all_degrees: Vec<SparseLayer<F>> = Vec::new();
        let id = sys.normal_form(PathVec::identity(&f, v), None, &mut tracker)?;
        let to_vec = |nf: &PathVec<F>| -> std::collections::BTreeMap<usize, F::Elem> {
            nf.terms
                .iter()
                .map(|(w, c)| (index[&(nf.src, w.clone())], c.clone()))
                .collect()
        };
        let mut current: SparseLayer<F> = vec![(to_vec(&id), v)];
        let max_d = qc.total_dimension() + 2;
        let mut d = 0;
        while !current.is_empty() {
            all_degrees.push(current.clone());
            d += 1;
            if d > max_d {
                return Err(EngineError::NotFiniteDimensional);
            }
            let mut next: Vec<(std::collections::BTreeMap<usize, F::Elem>, usize)> = Vec::new();
            let mut ech_pivots: Vec<(usize, std::collections::BTreeMap<usize, F::Elem>)> =
                Vec::new();
            // Collect basis words of the current span, extend by arrows. The
            // span of NF(length-d paths) extended by each arrow spans T_{d+1}.
            for (vecrow, tgt) in &current {
                for &a in &qc.ctx.out[*tgt] {
                    tracker.tick("loewy iteration")?;
                    let mut prod = PathVec::<F>::zero(v, qc.ctx.arrows[a as usize].1);
                    for (&id, c) in vecrow.iter() {
                        let mut ext = rev[id].0.clone();
                        ext.push(a);
                        prod.add_term(&f, Word(ext), c.clone());
                    }
                    let nf = sys.normal_form(prod, None, &mut tracker)?;
                    if nf.is_zero() {
                        continue;
                    }
                    let mut row = to_vec(&nf);
                    // Sparse elimination against collected pivots.
                    for (p, prow) in &ech_pivots {
                        if let Some(c) = row.get(p).cloned() {
                            let factor = f.mul(&c, &f.inv(&prow[p]));
                            for (k, val) in prow {
                                let cur = row.remove(k).unwrap_or_else(|| f.zero());
                                let upd = f.sub(&cur, &f.mul(&factor, val));
                                if !f.is_zero(&upd) {
                                    row.insert(*k, upd);
                                }
                            }
                        }
                    }
                    if let Some((&p, _)) = row.iter().next() {
                        ech_pivots.push((p, row.clone()));
                        next.push((row, qc.ctx.arrows[a as usize].1));
                    }
                }
            }
            current = next;
        }
        // rad^k = Σ_{d≥k} T_d; accumulate from the top degree down.
        let mut rad_dims = vec![0usize; all_degrees.len() + 1];
        let mut ech: Vec<(usize, std::collections::BTreeMap<usize, F::Elem>)> = Vec::new();
        for k in (0..all_degrees.len()).rev() {
            for (row, _) in &all_degrees[k] {
                let mut row = row.clone();
                for (p, prow) in &ech {
                    if let Some(c) = row.get(p).cloned() {
                        let factor = f.mul(&c, &f.inv(&prow[p]));
                        for (kk, val) in prow {
                            let cur = row.remove(kk).unwrap_or_else(|| f.zero());
                            let upd = f.sub(&cur, &f.mul(&factor, val));
                            if !f.is_zero(&upd) {
                                row.insert(*kk, upd);
                            }
                        }
                    }
                }
                if let Some((&p, _)) = row.iter().next() {
                    ech.push((p, row));
                }
            }
            rad_dims[k] = ech.len();
        }
        let dim = rad_dims[0];
        // Nakayama's lemma: the radical filtration is strictly decreasing
        // until it hits zero, so every layer here is nonzero.
        let layers: Vec<usize> = (0..all_degrees.len())
            .map(|k| rad_dims[k] - rad_dims[k + 1])
            .collect();
        out.push(LoewyData {
            vertex: v,
            dim,
            layers,
        });
    }
    Ok(out)
}
