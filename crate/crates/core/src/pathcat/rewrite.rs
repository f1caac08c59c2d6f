//! Noncommutative rewriting over a path category.
//!
//! Generators (monic, fully reduced against each other) form a rewriting
//! system under the degree-lexicographic word order. `complete` resolves all
//! overlap and inclusion ambiguities of leading words (the diamond lemma), so
//! afterwards normal forms are unique and the words avoiding every leading
//! word as a subword form a basis of the quotient.
//!
//! For admissible ideals the quotient is finite dimensional, normal words
//! have bounded length, and completion terminates: obstructions (minimal
//! reducible words) are bounded by one more than the longest normal word.

use super::{BudgetTracker, EngineError, PathContext, PathVec, Word};
use crate::field::Field;
use std::sync::Arc;

/// One step of a reduction trace: the reduced element satisfies
/// `input = output + Σ coeff · (pre ∘ generators[gen] ∘ suf)`.
#[derive(Clone, Debug)]
pub struct TraceStep<F: Field> {
    pub coeff: F::Elem,
    pub gen: usize,
    pub pre: Word,
    pub suf: Word,
}

pub struct RewriteSystem<F: Field> {
    ctx: Arc<PathContext>,
    field: F,
    gens: Vec<PathVec<F>>,
}

impl<F: Field> RewriteSystem<F> {
    pub fn new(ctx: Arc<PathContext>, field: F) -> Self {
        RewriteSystem {
            ctx,
            field,
            gens: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[PathVec<F>] {
        &self.gens
    }

    /// First (generator, position) whose leading word occurs in `w`, if any.
    fn find_reduction(&self, w: &Word) -> Option<(usize, usize)> {
        for (gi, g) in self.gens.iter().enumerate() {
            let lw = &g.leading().expect("generators are nonzero").0 .0;
            if lw.len() > w.0.len() {
                continue;
            }
            for pos in 0..=w.0.len() - lw.len() {
                if &w.0[pos..pos + lw.len()] == lw.as_slice() {
                    return Some((gi, pos));
                }
            }
        }
        None
    }

    /// Fully reduce `e` to its normal form, optionally recording a
    /// membership trace.
    pub fn normal_form(
        &self,
        mut e: PathVec<F>,
        mut trace: Option<&mut Vec<TraceStep<F>>>,
        tracker: &mut BudgetTracker,
    ) -> Result<PathVec<F>, EngineError> {
        let f = &self.field;
        let mut nf = PathVec::zero(e.src, e.tgt);
        while let Some((w, c)) = e
            .terms
            .iter()
            .next_back()
            .map(|(w, c)| (w.clone(), c.clone()))
        {
            tracker.tick("rewriting reduction")?;
            e.terms.remove(&w);
            match self.find_reduction(&w) {
                None => {
                    nf.add_term(f, w, c);
                }
                Some((gi, pos)) => {
                    let g = &self.gens[gi];
                    let lw_len = g.leading().unwrap().0.len();
                    let pre = Word(w.0[..pos].to_vec());
                    let suf = Word(w.0[pos + lw_len..].to_vec());
                    // e := e − c · pre∘g∘suf, except the leading term of that
                    // product is exactly c·w, already removed above.
                    for (gw, gc) in &g.terms {
                        let full = pre.concat(gw).concat(&suf);
                        if full == w {
                            continue;
                        }
                        e.add_term(f, full, f.neg(&f.mul(&c, gc)));
                    }
                    if let Some(t) = trace.as_deref_mut() {
                        t.push(TraceStep {
                            coeff: c,
                            gen: gi,
                            pre,
                            suf,
                        });
                    }
                }
            }
        }
        Ok(nf)
    }

    /// Complete the given generators to a confluent system.
    pub fn complete(
        &mut self,
        gens: Vec<PathVec<F>>,
        tracker: &mut BudgetTracker,
    ) -> Result<(), EngineError> {
        let f = self.field.clone();
        let mut queue: std::collections::VecDeque<PathVec<F>> = gens.into();
        while let Some(g) = queue.pop_front() {
            tracker.tick("completion")?;
            let g = self.normal_form(g, None, tracker)?;
            if g.is_zero() {
                continue;
            }
            let g = g.monic(&f);
            let new_lw = g.leading().unwrap().0.clone();
            // Re-queue existing generators that the new one can reduce
            // (leading-word inclusions or reducible tails).
            let mut kept = Vec::new();
            for old in self.gens.drain(..) {
                let reducible = old.terms.keys().any(|w| contains(&w.0, &new_lw.0));
                if reducible {
                    queue.push_back(old);
                } else {
                    kept.push(old);
                }
            }
            self.gens = kept;
            // Overlap ambiguities between the new generator and all current
            // ones (both orders) plus itself.
            let mut s_elems = Vec::new();
            for other in self.gens.iter().chain(std::iter::once(&g)) {
                let u = &g.leading().unwrap().0 .0;
                let v = &other.leading().unwrap().0 .0;
                for s in overlaps(&self.ctx, &f, &g, u, other, v) {
                    s_elems.push(s);
                }
                for s in overlaps(&self.ctx, &f, other, v, &g, u) {
                    s_elems.push(s);
                }
            }
            self.gens.push(g);
            for s in s_elems {
                queue.push_back(s);
            }
        }
        Ok(())
    }

    /// All normal words, as `(src, tgt, word)` triples, enumerated by DFS in
    /// lexicographic arrow order per source vertex.
    pub fn normal_words(
        &self,
        tracker: &mut BudgetTracker,
    ) -> Result<Vec<(usize, usize, Word)>, EngineError> {
        let mut out = Vec::new();
        for v in 0..self.ctx.nv {
            let mut stack = Vec::new();
            self.normal_words_rec(v, v, &mut stack, &mut out, tracker)?;
        }
        Ok(out)
    }

    fn normal_words_rec(
        &self,
        src: usize,
        at: usize,
        stack: &mut Vec<u32>,
        out: &mut Vec<(usize, usize, Word)>,
        tracker: &mut BudgetTracker,
    ) -> Result<(), EngineError> {
        tracker.tick("normal word enumeration")?;
        out.push((src, at, Word(stack.clone())));
        if out.len() > tracker.budget().max_dim {
            return Err(EngineError::NotFiniteDimensional);
        }
        for &a in &self.ctx.out[at].clone() {
            stack.push(a);
            // `stack` was normal before the push, so reducibility can only
            // come from a leading word that is a suffix of the extension.
            let reducible = self.gens.iter().any(|g| {
                let lw = &g.leading().unwrap().0 .0;
                lw.len() <= stack.len() && stack[stack.len() - lw.len()..] == lw[..]
            });
            if !reducible {
                self.normal_words_rec(src, self.ctx.arrows[a as usize].1, stack, out, tracker)?;
            }
            stack.pop();
        }
        Ok(())
    }
}

fn contains(hay: &[u32], needle: &[u32]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// S-elements for every proper overlap where a suffix of `u = lw(g)` equals a
/// prefix of `v = lw(h)`.
fn overlaps<F: Field>(
    ctx: &PathContext,
    f: &F,
    g: &PathVec<F>,
    u: &[u32],
    h: &PathVec<F>,
    v: &[u32],
) -> Vec<PathVec<F>> {
    let mut out = Vec::new();
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] != v[..k] {
            continue;
        }
        // Common multiple w = u ++ v[k..] = u[..|u|−k] ++ v. Both head and
        // tail are nonempty, so endpoints come off their arrow ids.
        let tail = Word(v[k..].to_vec());
        let head = Word(u[..u.len() - k].to_vec());
        let tgt = ctx.arrows[*tail.0.last().unwrap() as usize].1;
        let src = ctx.arrows[head.0[0] as usize].0;
        let a = mul_word_right(f, g, &tail, tgt);
        let b = mul_word_left(f, &head, h, src);
        out.push(a.sub(f, &b));
    }
    out
}

fn mul_word_right<F: Field>(f: &F, g: &PathVec<F>, w: &Word, tgt: usize) -> PathVec<F> {
    let mut out = PathVec::zero(g.src, tgt);
    for (gw, gc) in &g.terms {
        out.add_term(f, gw.concat(w), gc.clone());
    }
    out
}

fn mul_word_left<F: Field>(f: &F, w: &Word, g: &PathVec<F>, src: usize) -> PathVec<F> {
    let mut out = PathVec::zero(src, g.tgt);
    for (gw, gc) in &g.terms {
        out.add_term(f, w.concat(gw), gc.clone());
    }
    out
}
