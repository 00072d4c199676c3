mod args;
mod io;

use std::process::ExitCode;

use antimagic::constructions::{
    bipartite_regular_labeling, cycle_labeling, lex_labeling, tripartite_labeling, validate_tripartite,
    TripartiteParts,
};
use antimagic::graph::{cartesian_product, disjoint_copies, generate, lex_product, FamilySpec, Graph};
use antimagic::labeling::{complement, delete_extreme_edge, to_matrix, verify, EdgeLabeling, LabelingJson};
use antimagic::magic::{magic_square, render_grid};
use antimagic::solver::oracle::chi_la_naive;
use antimagic::solver::{chi_la_exact, chi_la_lower_bound};
use antimagic::theorems::{run_suite, SuiteConfig};
use clap::Parser;
use serde_json::json;

use args::{Cli, Command, Family, GenArgs, GraphFormat, LabelCommand, LabelingFormat, OutputArgs};
use io::{emit, invalid, read_graph, read_json, read_labeled, read_matrix, to_json_line, Bundle, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("antimagic: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Gen(a) => gen(a),
        Command::Label(l) => label(l),
        Command::Verify(a) => {
            let (g, f) = if a.matrix { read_matrix(&a.input.input)? } else { read_labeled(&a.input)? };
            let report = verify(&g, &f).map_err(invalid)?;
            emit(&to_json_line(&report), None)?;
            if report.is_local_antimagic() {
                Ok(())
            } else {
                Err(CliError::Check("labeling is not local antimagic".into()))
            }
        }
        Command::Solve(a) => {
            let g = read_graph(&a.graph)?;
            let out = if a.oracle {
                let r = chi_la_naive(&g);
                json!({
                    "method": "oracle",
                    "chi_la": r.chi_la,
                    "witness": r.witness.map(|ls| labeled_json(&g, &EdgeLabeling::new(&g, ls).expect("permutation"))),
                    "permutations": r.permutations,
                })
            } else {
                let r = chi_la_exact(&g, a.budget).map_err(invalid)?;
                let (lower, source) = chi_la_lower_bound(&g).map_err(invalid)?;
                json!({
                    "method": "search",
                    "status": r.status,
                    "chi_la": r.chi_la,
                    "lower_bound": lower,
                    "lower_bound_source": source,
                    "upper_bound": r.upper_bound,
                    "nodes_explored": r.nodes_explored,
                    "witness": r.witness.as_ref().map(|w| labeled_json(&g, w)),
                })
            };
            emit(&to_json_line(&out), None)
        }
        Command::Magic(a) => {
            let sq = magic_square(a.n).map_err(invalid)?;
            let text = match (a.block, a.q) {
                (Some(i), Some(q)) => render_grid(&sq.shifted_block(i, q).map_err(invalid)?),
                _ => sq.to_string(),
            };
            emit(&text, None)
        }
        Command::Theorems(a) => {
            let cfg = SuiteConfig { seed: a.seed, random_cases: a.cases };
            let mut outcomes = run_suite(a.filter.as_deref(), &cfg);
            if outcomes.is_empty() {
                return Err(invalid(format!("no case matches {:?}", a.filter.unwrap_or_default())));
            }
            outcomes.sort_by(|x, y| x.id.cmp(&y.id));
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if a.json {
                emit(&to_json_line(&outcomes), None)?;
            } else {
                for o in &outcomes {
                    let mark = if o.passed { "PASS" } else { "FAIL" };
                    println!("{mark} {:<28} [{}] {}", o.id, o.criterion, o.detail);
                }
                println!("{} passed, {failed} failed", outcomes.len() - failed);
            }
            if failed == 0 {
                Ok(())
            } else {
                Err(CliError::Check(format!("{failed} theorem case(s) failed")))
            }
        }
    }
}

fn need(v: Option<usize>, flag: &str, family: Family) -> Result<usize, CliError> {
    v.ok_or_else(|| invalid(format!("family {family:?} needs --{flag}")))
}

fn gen(a: GenArgs) -> Result<(), CliError> {
    let fam = a.family;
    let spec = |s: FamilySpec| generate(s).map_err(invalid);
    let mut g = match fam {
        Family::Cycle => spec(FamilySpec::Cycle { n: need(a.n, "n", fam)? })?,
        Family::Complete => spec(FamilySpec::Complete { n: need(a.n, "n", fam)? })?,
        Family::CompleteBipartite => {
            spec(FamilySpec::CompleteBipartite { a: need(a.a, "a", fam)?, b: need(a.b, "b", fam)? })?
        }
        Family::Null => spec(FamilySpec::Null { n: need(a.n, "n", fam)? })?,
        Family::Wheel => spec(FamilySpec::Wheel { n: need(a.n, "n", fam)? })?,
        Family::MobiusLadder => spec(FamilySpec::MobiusLadder { n: need(a.n, "n", fam)? })?,
        Family::Gmn => spec(FamilySpec::Gmn { m: need(a.m, "m", fam)?, n: need(a.n, "n", fam)? })?,
        Family::Torus => {
            let ca = spec(FamilySpec::Cycle { n: need(a.a, "a", fam)? })?;
            let cb = spec(FamilySpec::Cycle { n: need(a.b, "b", fam)? })?;
            cartesian_product(&ca, &cb)
        }
    };
    if let Some(n) = a.blowup {
        if n == 0 {
            return Err(invalid("--blowup needs n >= 1"));
        }
        g = lex_product(&g, &Graph::empty(n));
    }
    if let Some(m) = a.copies {
        g = disjoint_copies(m, &g);
    }
    let text = match a.format {
        GraphFormat::Json => format!("{}\n", g.to_json()),
        GraphFormat::Dot => g.to_dot(None, None),
    };
    emit(&text, a.out.as_deref())
}

fn labeled_json(g: &Graph, f: &EdgeLabeling) -> serde_json::Value {
    let wire = LabelingJson::describe(g, f).expect("labeling matches its graph");
    serde_json::to_value(Bundle { graph: g.clone(), labeling: wire }).expect("serializable")
}

fn write_labeling(g: &Graph, f: &EdgeLabeling, out: &OutputArgs) -> Result<(), CliError> {
    let text = match out.format() {
        LabelingFormat::Json => to_json_line(&labeled_json(g, f)),
        LabelingFormat::Matrix => to_matrix(g, f).map_err(invalid)?.to_string(),
        LabelingFormat::Dot => g.to_dot(Some(f.sums()), Some(f.labels())),
    };
    emit(&text, out.out.as_deref())
}

fn label(cmd: LabelCommand) -> Result<(), CliError> {
    match cmd {
        LabelCommand::Cycle { n, output } => {
            let (g, f) = cycle_labeling(n).map_err(invalid)?;
            write_labeling(&g, &f, &output)
        }
        LabelCommand::Lex { base, n, output } => {
            let (g, f) = io::read_bundle(&base)?;
            let (prod, lab) = lex_labeling(&g, &f, n).map_err(invalid)?;
            write_labeling(&prod, &lab, &output)
        }
        LabelCommand::Bipartite { graph, start, output } => {
            let g = read_graph(&graph)?;
            let t = bipartite_regular_labeling(&g, start).map_err(invalid)?;
            write_labeling(&g, &t.labeling, &output)
        }
        LabelCommand::Tripartite { graph, parts, output } => {
            let g = read_graph(&graph)?;
            let parts: TripartiteParts = read_json(&parts)?;
            let s = validate_tripartite(&g, &parts).map_err(invalid)?;
            let t = tripartite_labeling(&s).map_err(invalid)?;
            write_labeling(&g, &t.labeling, &output)
        }
        LabelCommand::Complement { input, output } => {
            let (g, f) = read_labeled(&input)?;
            if !f.is_bijection() {
                return Err(invalid("labels are not a bijection onto 1..=q"));
            }
            write_labeling(&g, &complement(&g, &f), &output)
        }
        LabelCommand::DeleteExtreme { input, edge, output } => {
            let (g, f) = read_labeled(&input)?;
            let e = match edge {
                Some((u, v)) => g.edge_index(u, v).ok_or_else(|| invalid(format!("no edge {u},{v}")))?,
                None => (0..g.size())
                    .find(|&e| f.label(e) == g.size() as u64)
                    .ok_or_else(|| invalid("no edge carries label q"))?,
            };
            let out = delete_extreme_edge(&g, &f, e).map_err(invalid)?;
            if output.format() == LabelingFormat::Json {
                let doc = json!({
                    "removed": g.edge(e),
                    "route": out.route,
                    "construction_failed": out.construction_failed,
                    "candidates": out.candidates,
                    "result": labeled_json(&out.graph, &out.labeling),
                });
                emit(&to_json_line(&doc), output.out.as_deref())?;
            } else {
                write_labeling(&out.graph, &out.labeling, &output)?;
            }
            if out.construction_failed {
                Err(CliError::Check("no deletion recipe gives a local antimagic labeling".into()))
            } else {
                Ok(())
            }
        }
    }
}
