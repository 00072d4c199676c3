use serde::{Deserialize, Serialize};

use super::{chi_la_exact, chi_la_lower_bound, SolveStatus, SolverError, DEFAULT_BUDGET};
use crate::constructions::{label_along_tour, lex_labeling, tripartite_labeling, validate_tripartite, TripartiteParts};
use crate::graph::{euler_tour, lex_product, Graph};
use crate::labeling::{verify, EdgeLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    ChromaticNumber,
    TwoColorBalance,
    EulerTour,
    TripartiteHub,
    LexicographicBlocks,
    ExactSearch,
}

/// Optional structure that unlocks constructive upper bounds.
#[derive(Debug, Clone)]
pub struct BoundHints {
    pub tripartite: Option<TripartiteParts>,
    /// `(H, f, n)` when the graph is `H[O_n]` and `f` labels `H`.
    pub lex_base: Option<(Graph, EdgeLabeling, usize)>,
    /// Run the exact search when the graph has at most this many edges.
    pub exact_max_edges: usize,
    pub budget: u64,
}

impl Default for BoundHints {
    fn default() -> Self {
        BoundHints { tripartite: None, lex_base: None, exact_max_edges: 10, budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone)]
pub struct Bounds {
    pub lower: usize,
    pub lower_source: BoundSource,
    pub upper: Option<usize>,
    pub upper_source: Option<BoundSource>,
    pub witness: Option<EdgeLabeling>,
}

impl Bounds {
    fn offer(&mut self, g: &Graph, f: EdgeLabeling, source: BoundSource) {
        let Ok(rep) = verify(g, &f) else { return };
        if rep.is_local_antimagic() && self.upper.is_none_or(|u| rep.color_count < u) {
            self.upper = Some(rep.color_count);
            self.upper_source = Some(source);
            self.witness = Some(f);
        }
    }
}

/// Lower bound from colorings and the two-color balance test; upper bounds
/// from every construction that applies, then the exact search on small
/// graphs. A construction that does not apply contributes nothing.
pub fn chi_la_bounds(g: &Graph, hints: &BoundHints) -> Result<Bounds, SolverError> {
    let (lower, lower_source) = chi_la_lower_bound(g)?;
    let mut b = Bounds { lower, lower_source, upper: None, upper_source: None, witness: None };

    if g.is_connected() && g.size() > 0 {
        if let Ok(tour) = euler_tour(g, None) {
            if let Ok(f) = label_along_tour(g, &tour) {
                b.offer(g, f, BoundSource::EulerTour);
            }
        }
    }
    if let Some(parts) = &hints.tripartite {
        if let Ok(s) = validate_tripartite(g, parts) {
            if let Ok(t) = tripartite_labeling(&s) {
                b.offer(g, t.labeling, BoundSource::TripartiteHub);
            }
        }
    }
    if let Some((h, f, n)) = &hints.lex_base {
        if lex_product(h, &Graph::empty(*n)) == *g {
            if let Ok((_, lf)) = lex_labeling(h, f, *n) {
                b.offer(g, lf, BoundSource::LexicographicBlocks);
            }
        }
    }
    if g.size() <= hints.exact_max_edges && b.upper != Some(b.lower) {
        let r = chi_la_exact(g, hints.budget)?;
        match r.status {
            SolveStatus::Exact => {
                let chi = r.chi_la.expect("exact result");
                b.lower = chi;
                b.lower_source = BoundSource::ExactSearch;
                b.offer(g, r.witness.expect("exact result has a witness"), BoundSource::ExactSearch);
            }
            SolveStatus::BudgetExceeded => {
                if let Some(w) = r.witness {
                    b.offer(g, w, BoundSource::ExactSearch);
                }
            }
            SolveStatus::UndefinedNoLabeling => {}
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn cycle_bounds_meet() {
        let g = generate(FamilySpec::Cycle { n: 8 }).unwrap();
        let b = chi_la_bounds(&g, &BoundHints::default()).unwrap();
        assert_eq!((b.lower, b.upper), (3, Some(3)));
        assert_eq!(b.lower_source, BoundSource::TwoColorBalance);
        assert_eq!(b.upper_source, Some(BoundSource::EulerTour));
    }

    #[test]
    fn bowtie_with_parts() {
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4)]).unwrap();
        let hints = BoundHints {
            tripartite: Some(TripartiteParts { w: 0, v2: vec![1, 2], v3: vec![3, 4] }),
            exact_max_edges: 0,
            ..BoundHints::default()
        };
        let b = chi_la_bounds(&g, &hints).unwrap();
        assert_eq!((b.lower, b.upper), (3, Some(3)));
    }

    #[test]
    fn lex_hint_on_c4() {
        let (c4, f) = crate::constructions::cycle_labeling(4).unwrap();
        let g = lex_product(&c4, &Graph::empty(3));
        let hints = BoundHints { lex_base: Some((c4, f, 3)), exact_max_edges: 0, ..BoundHints::default() };
        let b = chi_la_bounds(&g, &hints).unwrap();
        assert_eq!(b.lower, 3);
        assert_eq!(b.upper, Some(3));
    }

    #[test]
    fn torus_and_two_squares() {
        let c4 = generate(FamilySpec::Cycle { n: 4 }).unwrap();
        let torus = crate::graph::cartesian_product(&c4, &c4);
        let b = chi_la_bounds(&torus, &BoundHints::default()).unwrap();
        assert_eq!((b.lower, b.upper), (3, Some(3)));
        assert_eq!(b.lower_source, BoundSource::TwoColorBalance);

        let two = crate::graph::disjoint_copies(2, &c4);
        let b = chi_la_bounds(&two, &BoundHints::default()).unwrap();
        assert_eq!((b.lower, b.upper), (3, Some(3)));
        assert_eq!(b.upper_source, Some(BoundSource::ExactSearch));
    }

    #[test]
    fn exact_search_on_small_graphs() {
        let g = generate(FamilySpec::CompleteBipartite { a: 1, b: 3 }).unwrap();
        let b = chi_la_bounds(&g, &BoundHints::default()).unwrap();
        assert_eq!((b.lower, b.upper), (4, Some(4)));
        assert_eq!(b.lower_source, BoundSource::ExactSearch);
    }
}
