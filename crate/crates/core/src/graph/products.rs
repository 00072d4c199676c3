use super::Graph;

/// `g ∨ h`: vertices of `g` first, then `h` offset by `g.order()`, plus every
/// cross pair.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let own = g.edges().iter().copied();
    let theirs = h.edges().iter().map(|&(u, v)| (u + off, v + off));
    let cross = (0..g.order()).flat_map(|u| (0..h.order()).map(move |x| (u, x + off)));
    Graph::new(g.order() + h.order(), own.chain(theirs).chain(cross)).expect("join of simple graphs is simple")
}

/// Lexicographic product `g[h]`; vertex `(u, x)` gets index `u * |V(h)| + x`.
pub fn lex_product(g: &Graph, h: &Graph) -> Graph {
    let ph = h.order();
    let id = |u: usize, x: usize| u * ph + x;
    let mut edges = Vec::with_capacity(g.size() * ph * ph + g.order() * h.size());
    for &(u, v) in g.edges() {
        for x in 0..ph {
            for y in 0..ph {
                edges.push((id(u, x), id(v, y)));
            }
        }
    }
    for u in 0..g.order() {
        for &(x, y) in h.edges() {
            edges.push((id(u, x), id(u, y)));
        }
    }
    Graph::new(g.order() * ph, edges).expect("lexicographic product of simple graphs is simple")
}

/// Cartesian product `g × h`; vertex `(u, x)` gets index `u * |V(h)| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let ph = h.order();
    let id = |u: usize, x: usize| u * ph + x;
    let mut edges = Vec::with_capacity(g.size() * ph + g.order() * h.size());
    for &(u, v) in g.edges() {
        for x in 0..ph {
            edges.push((id(u, x), id(v, x)));
        }
    }
    for u in 0..g.order() {
        for &(x, y) in h.edges() {
            edges.push((id(u, x), id(u, y)));
        }
    }
    Graph::new(g.order() * ph, edges).expect("cartesian product of simple graphs is simple")
}

/// `m` vertex-disjoint copies of `g`; copy `c` occupies `c*p .. (c+1)*p`.
pub fn disjoint_copies(m: usize, g: &Graph) -> Graph {
    let p = g.order();
    let edges = (0..m).flat_map(|c| g.edges().iter().map(move |&(u, v)| (u + c * p, v + c * p)));
    Graph::new(m * p, edges).expect("copies of a simple graph are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, generate, FamilySpec};

    fn cycle(n: usize) -> Graph {
        generate(FamilySpec::Cycle { n }).unwrap()
    }

    fn null(n: usize) -> Graph {
        generate(FamilySpec::Null { n }).unwrap()
    }

    #[test]
    fn join_counts() {
        let g = join(&cycle(4), &null(2));
        assert_eq!((g.order(), g.size()), (6, 12));
        assert_eq!(join(&null(1), &cycle(5)), generate(FamilySpec::Wheel { n: 5 }).unwrap());
        let cc = join(&cycle(5), &cycle(5));
        assert_eq!((cc.order(), cc.regular_degree()), (10, Some(7)));
    }

    #[test]
    fn lex_product_examples() {
        let g = lex_product(&cycle(4), &null(3));
        assert_eq!((g.order(), g.size(), g.regular_degree()), (12, 36, Some(6)));

        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        assert_eq!(lex_product(&k2, &null(3)), generate(FamilySpec::CompleteBipartite { a: 3, b: 3 }).unwrap());

        let w = generate(FamilySpec::Wheel { n: 5 }).unwrap();
        assert_eq!(lex_product(&w, &null(1)), w);
    }

    #[test]
    fn lex_product_degree_law() {
        let g = generate(FamilySpec::Wheel { n: 4 }).unwrap();
        let h = cycle(3);
        let gh = lex_product(&g, &h);
        for u in 0..g.order() {
            for x in 0..h.order() {
                assert_eq!(gh.degree(u * 3 + x), g.degree(u) * 3 + h.degree(x));
            }
        }
    }

    #[test]
    fn cartesian_examples() {
        let g = cartesian_product(&cycle(4), &cycle(4));
        assert_eq!((g.order(), g.size(), g.regular_degree()), (16, 32, Some(4)));
        assert!(bipartition(&g).is_some());

        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        let sq = cartesian_product(&k2, &k2);
        // 0-1-3-2-0 is a 4-cycle
        assert_eq!(sq.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);

        let g = cartesian_product(&cycle(4), &cycle(6));
        assert_eq!((g.order(), g.regular_degree()), (24, Some(4)));
    }

    #[test]
    fn copies() {
        let g = disjoint_copies(2, &cycle(4));
        assert_eq!((g.order(), g.size()), (8, 8));
        assert_eq!(g.components().len(), 2);
        let k4 = generate(FamilySpec::Complete { n: 4 }).unwrap();
        assert_eq!(disjoint_copies(1, &k4), k4);
        let g = disjoint_copies(3, &k4);
        assert_eq!((g.order(), g.size()), (12, 18));
    }
}
