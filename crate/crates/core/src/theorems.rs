//! Desk-scale checks of the constructions and bounds, one case per instance.
//!
//! Case identifiers follow `<claim>/<instance>` (for example `thm2.6/C4xC4`)
//! so a prefix filter selects a whole claim. Every case belongs to one
//! numbered acceptance criterion; [`criterion_limits`] lists their time
//! budgets.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{
    bipartite_regular_colors, bipartite_regular_labeling, check_lex_conditions, check_lex_conditions_on,
    cycle_labeling, cycle_pattern, lex_labeling, tripartite_labeling, validate_tripartite, TripartiteParts,
};
use crate::graph::{cartesian_product, disjoint_copies, generate, FamilySpec, Graph};
use crate::labeling::{
    complement, delete_extreme_edge, from_matrix, to_matrix, two_coloring_certificate, verify, EdgeLabeling,
    LabelingMatrix,
};
use crate::magic::{magic_constant, magic_square};
use crate::solver::oracle::chi_la_naive;
use crate::solver::{chi_la_exact, SolveStatus, DEFAULT_BUDGET};

pub const DEFAULT_SEED: u64 = 0x5EED_2024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    ConstructVerify,
    SolveExact,
    BoundChain,
    Property,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random instances drawn by each property case.
    pub random_cases: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: DEFAULT_SEED, random_cases: 1000 }
    }
}

type Check = Box<dyn Fn(&SuiteConfig) -> Result<String, String> + Send + Sync>;

pub struct TheoremCase {
    pub id: String,
    pub criterion: u8,
    pub kind: CheckKind,
    pub expected: String,
    check: Check,
}

impl std::fmt::Debug for TheoremCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCase")
            .field("id", &self.id)
            .field("criterion", &self.criterion)
            .field("kind", &self.kind)
            .field("expected", &self.expected)
            .finish()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseOutcome {
    pub id: String,
    pub criterion: u8,
    pub kind: CheckKind,
    pub expected: String,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

/// Wall-clock budget per criterion.
pub fn criterion_limits() -> BTreeMap<u8, Duration> {
    let s = Duration::from_secs;
    [(1, s(1)), (2, s(1)), (3, s(1)), (4, s(1)), (5, s(1)), (6, s(1)), (7, s(120)), (8, s(300)), (9, s(1)), (10, s(60))]
        .into_iter()
        .collect()
}

pub fn run_case(case: &TheoremCase, cfg: &SuiteConfig) -> CaseOutcome {
    let start = Instant::now();
    let result = (case.check)(cfg);
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CaseOutcome {
        id: case.id.clone(),
        criterion: case.criterion,
        kind: case.kind,
        expected: case.expected.clone(),
        passed,
        detail,
        elapsed,
    }
}

/// Runs every case whose identifier starts with `filter`, in suite order.
pub fn run_suite(filter: Option<&str>, cfg: &SuiteConfig) -> Vec<CaseOutcome> {
    cases()
        .iter()
        .filter(|c| filter.is_none_or(|f| c.id.starts_with(f)))
        .map(|c| run_case(c, cfg))
        .collect()
}

fn case(
    id: impl Into<String>,
    criterion: u8,
    kind: CheckKind,
    expected: impl Into<String>,
    check: impl Fn(&SuiteConfig) -> Result<String, String> + Send + Sync + 'static,
) -> TheoremCase {
    TheoremCase { id: id.into(), criterion, kind, expected: expected.into(), check: Box::new(check) }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cycle(n: usize) -> Graph {
    generate(FamilySpec::Cycle { n }).expect("n >= 3")
}

/// `C_4` labeled `x1x2=1, x2x3=2, x3x4=3, x4x1=4`, the base of [`C4O3_MATRIX`].
pub fn c4_base_labeling() -> (Graph, EdgeLabeling) {
    let g = cycle(4);
    let f = EdgeLabeling::from_vertex_pairs(&g, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)]).expect("valid labels");
    (g, f)
}

pub const C4O3_MATRIX: &str = "\
* * * 8 1 6 * * * 35 28 33
* * * 3 5 7 * * * 30 32 34
* * * 4 9 2 * * * 31 36 29
8 3 4 * * * 17 10 15 * * *
1 5 9 * * * 12 14 16 * * *
6 7 2 * * * 13 18 11 * * *
* * * 17 12 13 * * * 26 19 24
* * * 10 14 18 * * * 21 23 25
* * * 15 16 11 * * * 22 27 20
35 30 31 * * * 26 21 22 * * *
28 32 36 * * * 19 23 27 * * *
33 34 29 * * * 24 25 20 * * *
";

/// Hub `0`, `V2 = {1, 2}`, `V3 = {3, 4}`: two triangles sharing the hub.
pub fn bowtie() -> (Graph, TripartiteParts) {
    let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4)]).expect("valid");
    (g, TripartiteParts { w: 0, v2: vec![1, 2], v3: vec![3, 4] })
}

/// The 5-cycle `w u1 v2 u2 v1` with hub `0`, `V2 = {1, 2}`, `V3 = {3, 4}`.
pub fn pentagon() -> (Graph, TripartiteParts) {
    let g = Graph::new(5, [(0, 1), (1, 4), (4, 2), (2, 3), (3, 0)]).expect("valid");
    (g, TripartiteParts { w: 0, v2: vec![1, 2], v3: vec![3, 4] })
}

/// The even regular bipartite instances: `(name, graph)`.
pub fn bipartite_regular_instances() -> Vec<(&'static str, Graph)> {
    let gmn = |m, n| generate(FamilySpec::Gmn { m, n }).expect("valid");
    vec![
        ("C4", cycle(4)),
        ("C6", cycle(6)),
        ("GmnF(2,2)", gmn(2, 2)),
        ("GmnF(3,2)", gmn(3, 2)),
        ("C4xC4", cartesian_product(&cycle(4), &cycle(4))),
        ("C4xC6", cartesian_product(&cycle(4), &cycle(6))),
    ]
}

/// Solver instances with their expected values.
pub fn solver_instances() -> Vec<(&'static str, Graph, usize)> {
    let kb = |a, b| generate(FamilySpec::CompleteBipartite { a, b }).expect("valid");
    vec![
        ("C3", cycle(3), 3),
        ("C4", cycle(4), 3),
        ("C5", cycle(5), 3),
        ("C6", cycle(6), 3),
        ("K22", kb(2, 2), 3),
        ("bowtie", bowtie().0, 3),
        ("K13", kb(1, 3), 2),
    ]
}

fn solve_and_cross_check(g: &Graph, expected: usize) -> Result<String, String> {
    let r = chi_la_exact(g, DEFAULT_BUDGET).map_err(err)?;
    ensure(r.status == SolveStatus::Exact, || format!("solver status {:?}", r.status))?;
    let chi = r.chi_la.expect("exact");
    let w = r.witness.as_ref().expect("exact result has a witness");
    let rep = verify(g, w).map_err(err)?;
    ensure(rep.is_local_antimagic() && rep.color_count == chi, || "witness does not re-verify".into())?;
    let mut detail = format!("exact {chi} in {} nodes", r.nodes_explored);
    if g.size() <= 8 {
        let naive = chi_la_naive(g);
        ensure(naive.chi_la == Some(chi), || format!("{detail}; naive oracle {:?}", naive.chi_la))?;
        detail.push_str(&format!("; oracle agrees over {} labelings", naive.permutations));
    }
    ensure(chi == expected, || format!("{detail}; expected {expected}"))?;
    Ok(detail)
}

/// The full suite, ordered by criterion.
pub fn cases() -> Vec<TheoremCase> {
    use CheckKind::*;
    let mut out = Vec::new();

    // 1: magic squares
    out.push(case("magic/lo-shu", 1, ConstructVerify, "8 1 6 / 3 5 7 / 4 9 2", |_| {
        let sq = magic_square(3).map_err(err)?;
        ensure(sq.to_string() == "8 1 6\n3 5 7\n4 9 2\n", || format!("got\n{sq}"))?;
        Ok("order 3 matches".into())
    }));
    for n in 3..=16usize {
        out.push(case(format!("magic/order{n:02}"), 1, ConstructVerify, format!("magic, constant {}", magic_constant(n as u64)), move |_| {
            let sq = magic_square(n).map_err(err)?;
            let k = magic_constant(n as u64);
            let rows = sq.rows();
            let mut seen = vec![false; n * n + 1];
            for &v in rows.iter().flatten() {
                ensure(v >= 1 && v as usize <= n * n && !seen[v as usize], || format!("entry {v} repeated or out of range"))?;
                seen[v as usize] = true;
            }
            let mut lines: Vec<u64> = rows.iter().map(|r| r.iter().sum()).collect();
            lines.extend((0..n).map(|c| rows.iter().map(|r| r[c]).sum::<u64>()));
            lines.push((0..n).map(|i| rows[i][i]).sum());
            lines.push((0..n).map(|i| rows[i][n - 1 - i]).sum());
            ensure(lines.len() == 2 * n + 2 && lines.iter().all(|&s| s == k), || format!("line sums {lines:?}"))?;
            Ok(format!("{} lines sum to {k}", lines.len()))
        }));
    }

    // 2: the C4[O3] block matrix
    out.push(case("thm2.1/C4O3", 2, ConstructVerify, "block matrix, colors {57, 111, 165}", |_| {
        let (g, f) = c4_base_labeling();
        let (prod, lab) = lex_labeling(&g, &f, 3).map_err(err)?;
        let text = to_matrix(&prod, &lab).map_err(err)?.to_string();
        ensure(text == C4O3_MATRIX, || format!("matrix differs:\n{text}"))?;
        let rep = verify(&prod, &lab).map_err(err)?;
        ensure(rep.is_local_antimagic(), || "not proper".into())?;
        ensure(rep.colors == vec![57, 111, 165], || format!("colors {:?}", rep.colors))?;
        Ok("12x12 matrix byte-exact; proper with colors {57, 111, 165}".into())
    }));

    // 3: cycle labelings
    out.push(case("cycle/C3-C200", 3, ConstructVerify, "f(e1)=n and the sum pattern", |_| {
        for n in 3..=200usize {
            let (g, f) = cycle_labeling(n).map_err(err)?;
            ensure(f.is_bijection(), || format!("C{n}: not a bijection"))?;
            let e1 = g.edge_index(0, 1).expect("x1x2 exists");
            ensure(f.label(e1) == n as u64, || format!("C{n}: f(e1) = {}", f.label(e1)))?;
            for i in 1..=n {
                let want = if i == 1 {
                    (2 * n - n / 2) as u64
                } else if i % 2 == 1 {
                    n as u64
                } else {
                    n as u64 + 1
                };
                ensure(f.sum(i - 1) == want && cycle_pattern(n as u64, i as u64) == want, || {
                    format!("C{n}: f+(x{i}) = {}, expected {want}", f.sum(i - 1))
                })?;
            }
            ensure(verify(&g, &f).map_err(err)?.is_local_antimagic(), || format!("C{n}: not proper"))?;
        }
        Ok("198 cycles match".into())
    }));

    // 4: tour labelings of 2m-regular bipartite graphs
    for (name, g) in bipartite_regular_instances() {
        let q = g.size() as u64;
        let m = g.regular_degree().expect("regular") as u64 / 2;
        let mut want = bipartite_regular_colors(q, m).to_vec();
        want.sort_unstable();
        let expected = format!("colors {want:?}");
        out.push(case(format!("thm2.6/{name}"), 4, ConstructVerify, expected, move |_| {
            let t = bipartite_regular_labeling(&g, None).map_err(err)?;
            let rep = verify(&g, &t.labeling).map_err(err)?;
            ensure(rep.is_local_antimagic(), || "not proper".into())?;
            ensure(rep.colors == want, || format!("colors {:?}, expected {want:?}", rep.colors))?;
            // third color written the long way
            ensure(want.contains(&((2 * m + 1) * q / 2)), || "(2m+1)q/2 missing".into())?;
            let first = t.labeling.label(t.tour.edges[0]);
            ensure(first == q, || format!("first tour edge has label {first}"))?;
            Ok(format!("q={q}, m={m}, colors {:?}", rep.colors))
        }));
    }

    // 5: deleting the label-q edge
    for (name, g) in bipartite_regular_instances() {
        let must_succeed = matches!(name, "C4" | "C6");
        let expected = if must_succeed { "proper, <= 3 colors" } else { "proper with <= 3 colors, or diagnostic" };
        out.push(case(format!("thm2.6/{name}-e"), 5, BoundChain, expected, move |_| {
            let t = bipartite_regular_labeling(&g, None).map_err(err)?;
            let q = g.size() as u64;
            let e = (0..g.size()).find(|&e| t.labeling.label(e) == q).expect("bijection");
            let out = delete_extreme_edge(&g, &t.labeling, e).map_err(err)?;
            if out.construction_failed {
                let msg = format!("construction failed; candidates {:?}", out.candidates);
                return if must_succeed { Err(msg) } else { Ok(msg) };
            }
            let rep = verify(&out.graph, &out.labeling).map_err(err)?;
            ensure(rep.is_local_antimagic(), || "reported labeling does not verify".into())?;
            ensure(rep.color_count <= 3, || format!("{} colors", rep.color_count))?;
            Ok(format!("{:?}: colors {:?}", out.route, rep.colors))
        }));
    }

    // 6: tripartite hub construction
    for (id, (g, parts), want) in
        [("thm2.9/bowtie", bowtie(), (7u64, 6u64, 16u64)), ("thm2.10/pentagon", pentagon(), (6, 5, 8))]
    {
        out.push(case(id, 6, ConstructVerify, format!("colors {want:?} (V2, V3, hub)"), move |_| {
            let s = validate_tripartite(&g, &parts).map_err(err)?;
            ensure(s.expected_colors() == want, || format!("formula colors {:?}", s.expected_colors()))?;
            let t = tripartite_labeling(&s).map_err(err)?;
            let d = &t.decomposition;
            let fails = d.hub_condition_failures(&s, false);
            ensure(fails.is_empty(), || format!("hub condition fails at {fails:?}"))?;
            ensure(d.position_law_holds(&s), || "position law fails".into())?;
            let rep = verify(&g, &t.labeling).map_err(err)?;
            ensure(rep.is_local_antimagic(), || "not proper".into())?;
            let f = &t.labeling;
            let sums = |vs: &[usize]| vs.iter().map(|&v| f.sum(v)).collect::<Vec<_>>();
            ensure(sums(&parts.v2).iter().all(|&c| c == want.0), || format!("V2 sums {:?}", sums(&parts.v2)))?;
            ensure(sums(&parts.v3).iter().all(|&c| c == want.1), || format!("V3 sums {:?}", sums(&parts.v3)))?;
            ensure(f.sum(parts.w) == want.2, || format!("hub sum {}", f.sum(parts.w)))?;
            ensure(rep.color_count == 3, || format!("{} colors", rep.color_count))?;
            Ok(format!("tour {:?}, colors {:?}", t.tour.vertices, rep.colors))
        }));
    }

    // 7: exact solver
    for (name, g, want) in solver_instances() {
        out.push(case(format!("solver/{name}"), 7, SolveExact, format!("chi_la = {want}"), move |_| {
            solve_and_cross_check(&g, want)
        }));
    }

    // 8: two disjoint 4-cycles
    out.push(case("cor4.3/2C4", 8, SolveExact, "chi_la = 3", |_| solve_and_cross_check(&disjoint_copies(2, &cycle(4)), 3)));

    // 9: lex conditions
    out.push(case("thm2.1/conditions-regular", 9, BoundChain, "conditions hold at n = 3", |_| {
        let mut pairs = Vec::new();
        for n in 3..=200 {
            let (g, f) = cycle_labeling(n).map_err(err)?;
            pairs.push((format!("C{n}"), g, f));
        }
        for (name, g) in bipartite_regular_instances() {
            let f = bipartite_regular_labeling(&g, None).map_err(err)?.labeling;
            pairs.push((name.to_string(), g, f));
        }
        for (name, g, f) in &pairs {
            let chk = check_lex_conditions(g, f, 3);
            ensure(chk.holds(), || format!("{name}: {chk:?}"))?;
        }
        Ok(format!("{} labelings checked", pairs.len()))
    }));
    out.push(case("thm2.1/W4-data", 9, BoundChain, "conditions hold at n = 3", |_| {
        let chk = check_lex_conditions_on(&[(11, 3), (15, 3), (20, 4)], 3);
        ensure(chk.holds(), || format!("{chk:?}"))?;
        Ok("values 261, 369, 492 distinct".into())
    }));

    // 10: randomized invariants
    out.push(case("props/sum-identity", 10, Property, "sum of f+ = q(q+1)", prop_sum_identity));
    out.push(case("props/complement", 10, Property, "involution, same color count", prop_complement));
    out.push(case("props/matrix-roundtrip", 10, Property, "text and graph round trip", prop_matrix_roundtrip));
    out.push(case("props/two-color-certificate", 10, Property, "x|X| = y|Y| = q(q+1)/2", prop_two_color_certificate));

    out
}

fn random_graph(rng: &mut ChaCha8Rng, p: usize, density: f64) -> Graph {
    let edges: Vec<_> = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect();
    Graph::new(p, edges.into_iter().filter(|_| rng.gen_bool(density))).expect("simple by construction")
}

fn random_bijection(rng: &mut ChaCha8Rng, g: &Graph) -> EdgeLabeling {
    let mut labels: Vec<u64> = (1..=g.size() as u64).collect();
    labels.shuffle(rng);
    EdgeLabeling::new(g, labels).expect("bijection")
}

fn random_regular(rng: &mut ChaCha8Rng) -> Graph {
    match rng.gen_range(0..4) {
        0 => cycle(rng.gen_range(3..30)),
        1 => generate(FamilySpec::Complete { n: rng.gen_range(2..8) }).expect("valid"),
        2 => generate(FamilySpec::MobiusLadder { n: 2 * rng.gen_range(2..10) }).expect("valid"),
        _ => generate(FamilySpec::Gmn { m: rng.gen_range(2..4), n: rng.gen_range(2..4) }).expect("valid"),
    }
}

fn prop_sum_identity(cfg: &SuiteConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.random_cases {
        let (what, g, f) = match rng.gen_range(0..4) {
            0 => {
                let n = rng.gen_range(3..80);
                let (g, f) = cycle_labeling(n).map_err(err)?;
                (format!("cycle C{n}"), g, f)
            }
            1 => {
                let g = if rng.gen_bool(0.5) {
                    generate(FamilySpec::Gmn { m: rng.gen_range(2..5), n: rng.gen_range(2..5) }).expect("valid")
                } else {
                    cartesian_product(&cycle(2 * rng.gen_range(2..5)), &cycle(2 * rng.gen_range(2..5)))
                };
                let f = bipartite_regular_labeling(&g, None).map_err(err)?.labeling;
                ("bipartite regular".to_string(), g, f)
            }
            2 => {
                let p = rng.gen_range(2..7);
                let base = random_graph(&mut rng, p, 0.6);
                if base.size() == 0 {
                    continue;
                }
                let f = random_bijection(&mut rng, &base);
                let n = rng.gen_range(2..5);
                let (g, lf) = lex_labeling(&base, &f, n).map_err(err)?;
                (format!("lex n={n}"), g, lf)
            }
            _ => {
                let (g, parts) = if rng.gen_bool(0.5) { bowtie() } else { pentagon() };
                let s = validate_tripartite(&g, &parts).map_err(err)?;
                let f = tripartite_labeling(&s).map_err(err)?.labeling;
                ("tripartite".to_string(), g, f)
            }
        };
        let q = g.size() as u64;
        let total: u64 = f.sums().iter().sum();
        ensure(total == q * (q + 1), || format!("case {i} ({what}): sum {total} != {}", q * (q + 1)))?;
        ensure(f.is_bijection(), || format!("case {i} ({what}): not a bijection"))?;
    }
    Ok(format!("{} cases", cfg.random_cases))
}

fn prop_complement(cfg: &SuiteConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 1);
    for i in 0..cfg.random_cases {
        let g = random_regular(&mut rng);
        let f = random_bijection(&mut rng, &g);
        let c = complement(&g, &f);
        ensure(complement(&g, &c) == f, || format!("case {i}: not an involution"))?;
        ensure(c.color_count() == f.color_count(), || format!("case {i}: color count changed"))?;
        let (rf, rc) = (verify(&g, &f).map_err(err)?, verify(&g, &c).map_err(err)?);
        ensure(rf.is_proper == rc.is_proper, || format!("case {i}: properness changed"))?;
    }
    Ok(format!("{} cases", cfg.random_cases))
}

fn prop_matrix_roundtrip(cfg: &SuiteConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 2);
    for i in 0..cfg.random_cases {
        let (p, density) = (rng.gen_range(1..12), rng.gen_range(0.1..0.9));
        let g = random_graph(&mut rng, p, density);
        let f = random_bijection(&mut rng, &g);
        let m = to_matrix(&g, &f).map_err(err)?;
        let text = m.to_string();
        let parsed = LabelingMatrix::parse(&text).map_err(err)?;
        ensure(parsed == m, || format!("case {i}: text round trip differs"))?;
        let (g2, f2) = from_matrix(&parsed).map_err(err)?;
        ensure(g2 == g && f2 == f, || format!("case {i}: graph round trip differs"))?;
        for v in 0..g.order() {
            ensure(m.row_sum(v) == f.sum(v), || format!("case {i}: row {v} sum"))?;
        }
    }
    Ok(format!("{} cases", cfg.random_cases))
}

fn prop_two_color_certificate(cfg: &SuiteConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 3);
    let mut instances = vec![generate(FamilySpec::CompleteBipartite { a: 2, b: 4 }).expect("valid")];
    while instances.len() < cfg.random_cases.max(1) {
        let (a, b) = (rng.gen_range(1..4), rng.gen_range(1..6));
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        let g = Graph::new(a + b, edges.into_iter().filter(|_| rng.gen_bool(0.7))).expect("simple");
        let isolated = (0..g.order()).any(|v| g.degree(v) == 0);
        if !isolated && g.size() <= 8 {
            instances.push(g);
        }
    }
    let mut two = 0;
    for (i, g) in instances.iter().enumerate() {
        let r = chi_la_exact(g, DEFAULT_BUDGET).map_err(err)?;
        let Some(w) = r.witness else { continue };
        if r.chi_la != Some(2) {
            continue;
        }
        two += 1;
        let cert = two_coloring_certificate(g, &w)
            .map_err(err)?
            .ok_or_else(|| format!("instance {i}: two colors but no certificate"))?;
        let q = g.size() as u64;
        let half = q * (q + 1) / 2;
        ensure(
            cert.x * cert.class_x.len() as u64 == half
                && cert.y * cert.class_y.len() as u64 == half
                && cert.class_x.len() > cert.class_y.len(),
            || format!("instance {i}: certificate {cert:?}"),
        )?;
    }
    ensure(two > 0, || "no two-color labeling found".into())?;
    Ok(format!("{} instances, {two} with two colors", instances.len()))
}
