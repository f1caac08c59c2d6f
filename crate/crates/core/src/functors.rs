//! Functors induced by quiver automorphisms: the high-vertex swap η, coset
//! labels in ⟨τ⟩×⟨η⟩, the explicit assignment H′ of Remark 4.3, a solver
//! certifying that corrected lifts preserve the (modified) mesh ideal, and
//! the vertex-level shadow of the loop functor Ω.

use crate::dynkin::Kind;
use crate::field::Field;
use crate::pathcat::{EngineError, IdealSpec, PathContext, PathVec, QuotientCategory, Word};
use crate::tquiver::{PathSeq, TqAutomorphism, TqError, TqVertex, TranslationQuiver};
use std::sync::Arc;

/// The automorphism swapping the two high vertices of a stable D-type
/// quotient, identity on every other position.
pub fn eta_automorphism(tq: &TranslationQuiver) -> Result<TqAutomorphism, TqError> {
    if !tq.is_stable() {
        return Err(TqError::NotStable);
    }
    let graph = tq.graph();
    if graph.kind() != Kind::D {
        return Err(TqError::NotLambdaQuotient);
    }
    let n = graph.rank();
    let swap = |q: u32| {
        if q == n - 1 {
            n
        } else if q == n {
            n - 1
        } else {
            q
        }
    };
    let vmap: Vec<usize> = tq
        .vertices()
        .iter()
        .map(|v| match *v {
            TqVertex::Reg { layer, pos } => tq.vertex(layer as i64, swap(pos)),
            TqVertex::Proj { .. } => unreachable!("quiver is stable"),
        })
        .collect::<Result<_, _>>()?;
    tq.automorphism_from_vertex_map(vmap)
        .ok_or(TqError::NotLambdaQuotient)
}

/// Write `g = τ^a η^b` if possible: returns `(a, b)` with `0 ≤ a < ord(τ)`
/// and `b ∈ {0, 1}`, or `None` when g is outside ⟨τ⟩×⟨η⟩.
pub fn coset_label(
    tq: &TranslationQuiver,
    g: &TqAutomorphism,
) -> Result<Option<(u32, u32)>, TqError> {
    let tau = tq.tau_automorphism()?;
    let eta = eta_automorphism(tq)?;
    let id = TqAutomorphism {
        vmap: (0..tq.vertices().len()).collect(),
        amap: (0..tq.arrows().len()).collect(),
    };
    let mut power = id.clone();
    let mut a = 0u32;
    loop {
        if power == *g {
            return Ok(Some((a, 0)));
        }
        if tq.compose(&eta, &power) == *g {
            return Ok(Some((a, 1)));
        }
        power = tq.compose(&power, &tau);
        a += 1;
        if power == id {
            return Ok(None);
        }
    }
}

/// The named paths and arrows of Remark 4.3 in the Λ(m) quotient.
///
/// * `q[i−1]` (1 ≤ i ≤ 3m−3): the length-(4m−2) cycle at (0,i+1) running
///   (0,i+1) → (1,i) → (1,i+1) → (2,i) → … → (2m−1,i) → (2m−1,i+1).
/// * `l[i]`, `h[i]`, `p[i]` (0 ≤ i ≤ 2m−2): the length-2 paths
///   (i,3m−2) → (i,3m) → (i+1,3m−2), (i,3m−2) → (i,3m−1) → (i+1,3m−2) and
///   (i,3m−2) → (i+1,3m−3) → (i+1,3m−2); layer indices act mod 2m−1.
/// * `alpha`, `gamma`: the arrows (0,3m) → (1,3m−2) and (0,3m−1) → (1,3m−2)
///   out of the high vertices; `delta[i−1]` (1 ≤ i ≤ 3m−3): (0,i+1) → (1,i).
pub struct RemarkPaths {
    pub q: Vec<PathSeq>,
    pub l: Vec<PathSeq>,
    pub h: Vec<PathSeq>,
    pub p: Vec<PathSeq>,
    pub alpha: usize,
    pub gamma: usize,
    pub delta: Vec<usize>,
}

pub fn remark_paths(tq: &TranslationQuiver, m: u32) -> Result<RemarkPaths, TqError> {
    tq.build_path_p(m)?; // validates the type
    let m = m as i64;
    let mut q = Vec::new();
    for i in 1..=3 * m - 3 {
        let mut coords = vec![(0, (i + 1) as u32)];
        for k in 1..=2 * m - 1 {
            coords.push((k, i as u32));
            coords.push((k, (i + 1) as u32));
        }
        q.push(tq.path_through(&coords)?);
    }
    let (mut l, mut h, mut p) = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..=2 * m - 2 {
        l.push(tq.path_through(&[
            (i, (3 * m - 2) as u32),
            (i, (3 * m) as u32),
            (i + 1, (3 * m - 2) as u32),
        ])?);
        h.push(tq.path_through(&[
            (i, (3 * m - 2) as u32),
            (i, (3 * m - 1) as u32),
            (i + 1, (3 * m - 2) as u32),
        ])?);
        p.push(tq.path_through(&[
            (i, (3 * m - 2) as u32),
            (i + 1, (3 * m - 3) as u32),
            (i + 1, (3 * m - 2) as u32),
        ])?);
    }
    let alpha = tq.arrow_between(
        tq.vertex(0, (3 * m) as u32)?,
        tq.vertex(1, (3 * m - 2) as u32)?,
    )?;
    let gamma = tq.arrow_between(
        tq.vertex(0, (3 * m - 1) as u32)?,
        tq.vertex(1, (3 * m - 2) as u32)?,
    )?;
    let mut delta = Vec::new();
    for i in 1..=3 * m - 3 {
        delta.push(tq.arrow_between(tq.vertex(0, (i + 1) as u32)?, tq.vertex(1, i as u32)?)?);
    }
    Ok(RemarkPaths {
        q,
        l,
        h,
        p,
        alpha,
        gamma,
        delta,
    })
}

/// A vertex map together with an image morphism for every arrow; extends
/// uniquely to a functor on the path category.
pub struct ArrowAssignment<F: Field> {
    pub vmap: Vec<usize>,
    /// `images[a]` runs `vmap[src a] → vmap[tgt a]`.
    pub images: Vec<PathVec<F>>,
}

impl<F: Field> ArrowAssignment<F> {
    /// The assignment sending each arrow to its single image arrow under `g`.
    pub fn from_automorphism(ctx: &Arc<PathContext>, field: &F, g: &TqAutomorphism) -> Self {
        let images = g
            .amap
            .iter()
            .map(|&b| {
                let src = ctx.arrows[b].0;
                PathVec::from_word(ctx, field, src, Word(vec![b as u32])).unwrap()
            })
            .collect();
        ArrowAssignment {
            vmap: g.vmap.clone(),
            images,
        }
    }

    /// Apply the induced functor to a morphism of the path category.
    pub fn apply(&self, field: &F, e: &PathVec<F>) -> PathVec<F> {
        let mut out = PathVec::zero(self.vmap[e.src], self.vmap[e.tgt]);
        for (w, c) in &e.terms {
            let mut img = PathVec::identity(field, self.vmap[e.src]);
            for &a in &w.0 {
                img = img.then(field, &self.images[a as usize]);
            }
            out = out.add(field, &img.scale(field, c));
        }
        out
    }
}

/// Per-generator record of `preserves_ideal`: the generator's image under
/// the assignment and that image's normal form (zero iff preserved).
pub struct PreservationCertificate<F: Field> {
    pub verdict: bool,
    pub entries: Vec<(usize, PathVec<F>, PathVec<F>)>,
}

impl<F: Field> PreservationCertificate<F> {
    pub fn to_json(&self, names: &dyn Fn(usize) -> String) -> serde_json::Value {
        serde_json::json!({
            "verdict": self.verdict,
            "generators": self.entries.iter().map(|(i, img, nf)| serde_json::json!({
                "generator": i,
                "source": names(img.src),
                "image_terms": img.terms.len(),
                "normal_form_terms": nf.terms.len(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Check that the functor extending `assignment` maps every generator of
/// `ideal` into the ideal, by normal forms in the completed engine `qc`.
pub fn preserves_ideal<F: Field>(
    assignment: &ArrowAssignment<F>,
    ideal: &IdealSpec<F>,
    qc: &QuotientCategory<F>,
) -> Result<PreservationCertificate<F>, EngineError> {
    let field = qc.field().clone();
    let mut entries = Vec::new();
    let mut verdict = true;
    for (i, g) in ideal.gens.iter().enumerate() {
        let img = assignment.apply(&field, g);
        let nf = qc.normal_form(&img)?;
        verdict &= nf.is_zero();
        entries.push((i, img, nf));
    }
    Ok(PreservationCertificate { verdict, entries })
}

/// One unknown F₂ scalar per entry: arrow `a`'s image gains `± correction`
/// when the unknown is set.
pub struct CorrectionTemplate {
    pub entries: Vec<(usize, PathSeq)>,
}

/// The Remark 4.3-shaped template for lifting η over Λ(m): α and γ paired
/// with the alternating l/h chains composed after the other high arrow, and
/// each δ_i paired with δ_i∘q_i.
pub fn default_template(tq: &TranslationQuiver, m: u32) -> Result<CorrectionTemplate, TqError> {
    let rp = remark_paths(tq, m)?;
    let period = (2 * m - 1) as usize;
    let chain = |first_l: bool| -> Vec<u32> {
        // indices k = 1, …, 2m−1 (mod 2m−1), alternating starting with l or h.
        let mut arrows = Vec::new();
        for k in 1..=period {
            let use_l = (k % 2 == 1) == first_l;
            let seg = if use_l {
                &rp.l[k % period]
            } else {
                &rp.h[k % period]
            };
            arrows.extend_from_slice(&seg.arrows);
        }
        arrows
    };
    let mut entries = Vec::new();
    // H′(α) − γ = l_{2m−1}h_{2m−2}…l₃h₂l₁ ∘ γ (source (0,3m−1)).
    let gamma_src = tq.arrows()[rp.gamma].src;
    let mut arrows = vec![rp.gamma as u32];
    arrows.extend(chain(true));
    entries.push((
        rp.alpha,
        PathSeq {
            source: gamma_src,
            arrows,
        },
    ));
    // H′(γ) − α = h_{2m−1}l_{2m−2}…h₃l₂h₁ ∘ α (source (0,3m)).
    let alpha_src = tq.arrows()[rp.alpha].src;
    let mut arrows = vec![rp.alpha as u32];
    arrows.extend(chain(false));
    entries.push((
        rp.gamma,
        PathSeq {
            source: alpha_src,
            arrows,
        },
    ));
    // H′(δ_i) − δ_i = δ_i ∘ q_i.
    for (i, &d) in rp.delta.iter().enumerate() {
        let mut arrows = rp.q[i].arrows.clone();
        arrows.push(d as u32);
        entries.push((
            d,
            PathSeq {
                source: rp.q[i].source,
                arrows,
            },
        ));
    }
    Ok(CorrectionTemplate { entries })
}

/// The explicit H′ of Remark 4.3: the η assignment with every default
/// template correction switched on.
pub fn explicit_hprime<F: Field>(
    tq: &TranslationQuiver,
    ctx: &Arc<PathContext>,
    field: &F,
    m: u32,
) -> Result<ArrowAssignment<F>, TqError> {
    let eta = eta_automorphism(tq)?;
    let template = default_template(tq, m)?;
    let mut assignment = ArrowAssignment::from_automorphism(ctx, field, &eta);
    apply_corrections(
        ctx,
        field,
        &mut assignment,
        &template,
        &vec![true; template.entries.len()],
    );
    Ok(assignment)
}

fn apply_corrections<F: Field>(
    ctx: &Arc<PathContext>,
    field: &F,
    assignment: &mut ArrowAssignment<F>,
    template: &CorrectionTemplate,
    chosen: &[bool],
) {
    for ((arrow, path), &on) in template.entries.iter().zip(chosen) {
        if !on {
            continue;
        }
        let word = Word(path.arrows.clone());
        let corr = PathVec::from_word(ctx, field, path.source, word).unwrap();
        assignment.images[*arrow] = assignment.images[*arrow].add(field, &corr);
    }
}

/// Brute-force all F₂ choices of template corrections on top of the arrow
/// assignment induced by `g`, returning every choice whose functor preserves
/// the ideal. Unknown count is capped at 24 (2^24 candidates).
pub fn solve_lift<F: Field>(
    g: &TqAutomorphism,
    template: &CorrectionTemplate,
    ideal: &IdealSpec<F>,
    qc: &QuotientCategory<F>,
) -> Result<Vec<Vec<bool>>, EngineError> {
    let u = template.entries.len();
    if u > 24 {
        return Err(EngineError::Unsupported(format!(
            "{u} unknowns exceed the brute-force bound of 24"
        )));
    }
    let field = qc.field().clone();
    let mut solutions = Vec::new();
    for mask in 0u64..(1u64 << u) {
        let chosen: Vec<bool> = (0..u).map(|i| mask & (1 << i) != 0).collect();
        let mut assignment = ArrowAssignment::from_automorphism(&qc.ctx, &field, g);
        apply_corrections(&qc.ctx, &field, &mut assignment, template, &chosen);
        if preserves_ideal(&assignment, ideal, qc)?.verdict {
            solutions.push(chosen);
        }
    }
    Ok(solutions)
}

/// All automorphisms mapping S onto C setwise: the vertex-level candidates
/// for the loop functor Ω (which induces a bijection simples → C).
pub fn omega_candidates(
    tq: &TranslationQuiver,
    s: &crate::configuration::Configuration,
    c: &crate::configuration::Configuration,
) -> Result<Vec<TqAutomorphism>, TqError> {
    Ok(tq
        .automorphism_group()?
        .into_iter()
        .filter(|g| s.image(g) == *c)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::pathcat::{modified_mesh_ideal, Budget, QuotientCategory};
    use crate::tquiver::{build_quotient, RfsType};

    fn modified_engine(m: u32) -> (TranslationQuiver, QuotientCategory<PrimeField>) {
        let tq = build_quotient(&RfsType::lambda(m));
        let ctx = PathContext::from_tquiver(&tq);
        let f = PrimeField::gf2();
        let ideal = modified_mesh_ideal(&tq, m, &f).unwrap();
        let qc = QuotientCategory::build_rewrite(ctx, f, ideal, Budget::default()).unwrap();
        (tq, qc)
    }

    #[test]
    fn eta_is_an_involution_commuting_with_tau() {
        let tq = build_quotient(&RfsType::lambda(2));
        let eta = eta_automorphism(&tq).unwrap();
        let tau = tq.tau_automorphism().unwrap();
        let id: Vec<usize> = (0..tq.vertices().len()).collect();
        assert_eq!(tq.compose(&eta, &eta).vmap, id);
        assert_eq!(tq.compose(&eta, &tau), tq.compose(&tau, &eta));
        // (0,5) ↦ (0,6).
        assert_eq!(eta.vmap[tq.vertex(0, 5).unwrap()], tq.vertex(0, 6).unwrap());
    }

    #[test]
    fn coset_labels_enumerate_the_group() {
        let tq = build_quotient(&RfsType::lambda(3));
        let tau = tq.tau_automorphism().unwrap();
        let eta = eta_automorphism(&tq).unwrap();
        assert_eq!(coset_label(&tq, &tau).unwrap(), Some((1, 0)));
        assert_eq!(coset_label(&tq, &eta).unwrap(), Some((0, 1)));
        let t3e = tq.compose(&eta, &tq.compose(&tau, &tq.compose(&tau, &tau)));
        assert_eq!(coset_label(&tq, &t3e).unwrap(), Some((3, 1)));
        // Labels biject with the full group of order 2(2m−1) = 10.
        let group = tq.automorphism_group().unwrap();
        let mut labels: Vec<(u32, u32)> = group
            .iter()
            .map(|g| coset_label(&tq, g).unwrap().unwrap())
            .collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 10);
    }

    #[test]
    fn remark_paths_have_the_stated_shapes() {
        for m in [2u32, 3] {
            let tq = build_quotient(&RfsType::lambda(m));
            let rp = remark_paths(&tq, m).unwrap();
            assert_eq!(rp.q.len(), (3 * m - 3) as usize);
            for (i, q) in rp.q.iter().enumerate() {
                assert_eq!(q.len(), (4 * m - 2) as usize);
                // A cycle at (0, i+2).
                let start = tq.vertex(0, i as u32 + 2).unwrap();
                assert_eq!(q.source, start);
                assert_eq!(tq.path_target(q), start);
            }
            assert_eq!(rp.l.len(), (2 * m - 1) as usize);
            for seg in rp.l.iter().chain(&rp.h).chain(&rp.p) {
                assert_eq!(seg.len(), 2);
            }
            assert_eq!(rp.delta.len(), (3 * m - 3) as usize);
            // α and γ start at the two high vertices.
            assert_eq!(tq.arrows()[rp.alpha].src, tq.vertex(0, 3 * m).unwrap());
            assert_eq!(tq.arrows()[rp.gamma].src, tq.vertex(0, 3 * m - 1).unwrap());
        }
    }

    #[test]
    fn hprime_corrections_are_parallel_morphisms() {
        for m in [2u32, 3] {
            let tq = build_quotient(&RfsType::lambda(m));
            let ctx = PathContext::from_tquiver(&tq);
            let f = PrimeField::gf2();
            let hp = explicit_hprime(&tq, &ctx, &f, m).unwrap();
            let eta = eta_automorphism(&tq).unwrap();
            for (a, img) in hp.images.iter().enumerate() {
                let (src, tgt) = (ctx.arrows[a].0, ctx.arrows[a].1);
                assert_eq!(img.src, eta.vmap[src]);
                assert_eq!(img.tgt, eta.vmap[tgt]);
                // Correction terms (when present) are degree 4m−1 on top of
                // the degree-1 leading arrow.
                let lens: Vec<usize> = img.terms.keys().map(|w| w.len()).collect();
                assert!(lens == vec![1] || lens == vec![1, (4 * m - 1) as usize]);
            }
            // Exactly 3m−1 arrows carry corrections.
            let corrected = hp.images.iter().filter(|i| i.terms.len() == 2).count();
            assert_eq!(corrected, (3 * m - 1) as usize);
        }
    }

    #[test]
    fn hprime_preserves_the_modified_ideal_but_plain_eta_does_not() {
        let (tq, qc) = modified_engine(2);
        let f = PrimeField::gf2();
        let hp = explicit_hprime(&tq, &qc.ctx, &f, 2).unwrap();
        let cert = preserves_ideal(&hp, qc.ideal(), &qc).unwrap();
        assert!(cert.verdict, "H' must preserve the modified mesh ideal");
        let eta = eta_automorphism(&tq).unwrap();
        let plain = ArrowAssignment::from_automorphism(&qc.ctx, &f, &eta);
        let cert = preserves_ideal(&plain, qc.ideal(), &qc).unwrap();
        assert!(!cert.verdict, "plain η must fail on the modified ideal");
        // The identity assignment preserves any ideal.
        let id = TqAutomorphism {
            vmap: (0..tq.vertices().len()).collect(),
            amap: (0..tq.arrows().len()).collect(),
        };
        let idassign = ArrowAssignment::from_automorphism(&qc.ctx, &f, &id);
        assert!(preserves_ideal(&idassign, qc.ideal(), &qc).unwrap().verdict);
    }

    #[test]
    fn omega_candidates_is_exactly_eta_at_m2() {
        let tq = build_quotient(&RfsType::lambda(2));
        let s = crate::configuration::lambda_simples(2, &tq).unwrap();
        let c = crate::configuration::lambda_configuration(2, &tq).unwrap();
        let cands = omega_candidates(&tq, &s, &c).unwrap();
        assert_eq!(cands.len(), 1);
        assert_eq!(coset_label(&tq, &cands[0]).unwrap(), Some((0, 1)));
    }
}
