//! Closed-form visibility polynomial of a corona product `G ⊙ H`.
//!
//! Mutual-visibility sets of `G ⊙ H` split into four disjoint kinds:
//! sets inside the base graph, nonempty sets made only of copy vertices,
//! one base vertex `v` with a nonempty set from its own copy of diameter at
//! most 2 in `H`, and a nonempty proper mutual-visibility set `Q` of `G`
//! together with copy vertices hanging off an absolute c_Q-visible set.
//! The last kind is counted per `Q` by [`p_q_polynomial`].

use crate::cq::{maximal_absolute_cq_sets, GammaFamily};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, corona, DistanceMatrix, Graph};
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;
use crate::visibility::{enumerate_mv_sets, is_mv_set, mu, mv_sets};
use crate::Limits;

/// `((1+x)^{k} - 1) · x^{shift}`.
fn copies_term(k: usize, shift: usize) -> Polynomial {
    (Polynomial::binomial_power(k) - Polynomial::one()).shift(shift)
}

/// Sum over the members `Ω` of `((1+x)^{|Ω|·n_h} - 1) · x^{|Q|}`. Exact only
/// when the members are pairwise disjoint.
pub fn p_q_disjoint_branch(family: &GammaFamily, copy_order: usize) -> Polynomial {
    family
        .members
        .iter()
        .map(|w| copies_term(w.len() * copy_order, family.q.len()))
        .sum()
}

/// Inclusion–exclusion over the nonempty subfamilies of `family`, indexed by
/// the size of their common intersection. Subfamilies whose intersection is
/// empty contribute nothing and are pruned with all their supersets.
pub fn p_q_inclusion_exclusion(family: &GammaFamily, copy_order: usize, limits: &Limits) -> Result<Polynomial> {
    if family.len() > limits.max_family {
        return Err(Error::LimitExceeded {
            what: "inclusion-exclusion over a c_Q family",
            size: family.len(),
            limit: limits.max_family,
        });
    }

    // weight[s] = signed number of subfamilies whose intersection has s vertices
    let mut weight = vec![0i64; family.members.iter().map(|w| w.len()).max().unwrap_or(0) + 1];
    fn walk(members: &[VertexSet], start: usize, common: VertexSet, picked: usize, weight: &mut [i64]) {
        for (i, w) in members.iter().enumerate().skip(start) {
            let next = common.intersection(*w);
            if next.is_empty() {
                continue;
            }
            let sign = if picked.is_multiple_of(2) { 1 } else { -1 };
            weight[next.len()] += sign;
            walk(members, i + 1, next, picked + 1, weight);
        }
    }
    let everything = family.members.iter().fold(VertexSet::empty(), |a, w| a.union(*w));
    walk(&family.members, 0, everything, 0, &mut weight);

    Ok(weight
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(size, &c)| copies_term(size * copy_order, family.q.len()).scale(c))
        .sum())
}

fn check_q(g: &Graph, dm: &DistanceMatrix, q: VertexSet) -> Result<()> {
    g.check_set(q)?;
    if q.is_empty() || q == g.vertices() {
        return Err(Error::invalid(format!(
            "{q} is not a nonempty proper subset of the base graph"
        )));
    }
    if !is_mv_set(g, dm, q) {
        return Err(Error::invalid(format!("{q} is not a mutual-visibility set")));
    }
    Ok(())
}

fn p_q_from_family(family: &GammaFamily, copy_order: usize, limits: &Limits) -> Result<Polynomial> {
    if family.is_pairwise_disjoint() {
        Ok(p_q_disjoint_branch(family, copy_order))
    } else {
        p_q_inclusion_exclusion(family, copy_order, limits)
    }
}

/// Contribution of the sets `Q ∪ S` with `S` a nonempty set of copy
/// vertices outside `Q`'s own copies.
pub fn p_q_polynomial(
    g: &Graph,
    dm: &DistanceMatrix,
    q: VertexSet,
    copy_order: usize,
    limits: &Limits,
) -> Result<Polynomial> {
    check_q(g, dm, q)?;
    if copy_order == 0 {
        return Err(Error::invalid("the attached graph needs at least one vertex"));
    }
    let family = maximal_absolute_cq_sets(g, dm, q)?;
    p_q_from_family(&family, copy_order, limits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QTerm {
    pub family: GammaFamily,
    pub disjoint_visible: bool,
    pub term: Polynomial,
}

impl QTerm {
    pub fn q(&self) -> VertexSet {
        self.family.q
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaPolyReport {
    pub formula_poly: Polynomial,
    pub v_of_g: Polynomial,
    /// `(1+x)^{mn} - 1`
    pub all_copies_term: Polynomial,
    /// `m·x·(V₂(H) - 1)`
    pub per_base_term: Polynomial,
    /// One entry per nonempty proper mutual-visibility set `Q` of `G`, in
    /// canonical order of `Q`.
    pub per_q_terms: Vec<QTerm>,
}

pub fn corona_visibility_polynomial(g: &Graph, h: &Graph, limits: &Limits) -> Result<CoronaPolyReport> {
    let m = g.order();
    let n = h.order();
    if m < 2 {
        return Err(Error::invalid("the base graph needs at least two vertices"));
    }
    let dm_g = all_pairs_distances(g)?;
    let dm_h = all_pairs_distances(h)?;

    let g_table = enumerate_mv_sets(g, &dm_g, limits)?;
    let v_of_g = g_table.polynomial();
    let all_copies_term = copies_term(m * n, 0);
    let v2_h = enumerate_mv_sets(h, &dm_h, limits)?.restricted_polynomial(2);
    let per_base_term = (v2_h - Polynomial::one()).shift(1).scale(m as u64);

    let mut qs = mv_sets(g, &dm_g, limits)?;
    qs.retain(|q| !q.is_empty() && *q != g.vertices());
    qs.sort_by(VertexSet::canonical_cmp);
    let per_q_terms = qs
        .into_iter()
        .map(|q| {
            let family = maximal_absolute_cq_sets(g, &dm_g, q)?;
            let disjoint_visible = family.is_pairwise_disjoint();
            let term = p_q_from_family(&family, n, limits)?;
            Ok(QTerm {
                family,
                disjoint_visible,
                term,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let formula_poly = &v_of_g
        + &all_copies_term
        + &per_base_term
        + per_q_terms.iter().map(|t| t.term.clone()).sum::<Polynomial>();

    Ok(CoronaPolyReport {
        formula_poly,
        v_of_g,
        all_copies_term,
        per_base_term,
        per_q_terms,
    })
}

/// Mutual-visibility number of `g ⊙ h`.
///
/// Both orders at least 2 gives `m·n`; a single base vertex gives `n + 1`
/// for complete `h` and `n` otherwise. A single-vertex `h` has no closed
/// form here and is enumerated on the product.
pub fn corona_mu(g: &Graph, h: &Graph, limits: &Limits) -> Result<usize> {
    all_pairs_distances(g)?;
    all_pairs_distances(h)?;
    let (m, n) = (g.order(), h.order());
    if m >= 2 && n >= 2 {
        Ok(m * n)
    } else if m == 1 {
        Ok(if h.is_complete() { n + 1 } else { n })
    } else {
        let (product, _) = corona(g, h)?;
        let dm = all_pairs_distances(&product)?;
        mu(&product, &dm, limits)
    }
}
