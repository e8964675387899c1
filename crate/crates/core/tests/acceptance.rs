//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
//!
//! Reference values come from the independent oracles below (set-partition
//! and subset enumeration over raw bitmasks), never from the library's
//! search code.

use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdc_core::enumerate::{connected_graphs, random_connected_graphs, tree_classes_by_prufer};
use tdc_core::families::{
    classify_tree, cycle_formula_unpatched, path_formula, verify_queries, Relation, TreeCase,
};
use tdc_core::solver::bounds::{component_bounds, ub_gamma_t_chi};
use tdc_core::*;

// ---------------------------------------------------------------- oracles

/// Minimum class counts over every set partition of `V` whose blocks are
/// independent: plain χ, and the least partition meeting each domination rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PartitionOracle {
    chi: usize,
    chi_d: usize,
    chi_dt: Option<usize>,
}

fn partition_oracle(g: &Graph) -> PartitionOracle {
    let n = g.n();
    let open: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let closed: Vec<u64> = (0..n).map(|v| open[v] | 1 << v).collect();
    let mut best = PartitionOracle {
        chi: usize::MAX,
        chi_d: usize::MAX,
        chi_dt: None,
    };
    fn walk(
        v: usize,
        blocks: &mut Vec<u64>,
        open: &[u64],
        closed: &[u64],
        best: &mut PartitionOracle,
    ) {
        if v == open.len() {
            let k = blocks.len();
            best.chi = best.chi.min(k);
            let covers = |nb: &[u64]| nb.iter().all(|&t| blocks.iter().any(|&b| b & !t == 0));
            if covers(closed) {
                best.chi_d = best.chi_d.min(k);
            }
            if covers(open) && best.chi_dt.is_none_or(|b| k < b) {
                best.chi_dt = Some(k);
            }
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i] & open[v] == 0 {
                blocks[i] |= 1 << v;
                walk(v + 1, blocks, open, closed, best);
                blocks[i] &= !(1 << v);
            }
        }
        blocks.push(1 << v);
        walk(v + 1, blocks, open, closed, best);
        blocks.pop();
    }
    walk(0, &mut Vec::new(), &open, &closed, &mut best);
    if n == 0 {
        best.chi = 0;
        best.chi_d = 0;
    }
    best
}

/// γ_t by scanning every subset.
fn gamma_t_oracle(g: &Graph) -> Option<usize> {
    let n = g.n();
    let open: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    (0u64..1 << n)
        .filter(|&s| open.iter().all(|&t| t & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
}

fn is_complete_bipartite_oracle(g: &Graph) -> bool {
    // connected and bipartite with every cross pair adjacent
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return false;
    }
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u).iter() {
            match side[v] {
                None => {
                    side[v] = Some(!side[u].unwrap());
                    stack.push(v);
                }
                Some(s) if s == side[u].unwrap() => return false,
                _ => {}
            }
        }
    }
    (0..n).all(|u| (0..n).all(|v| u == v || side[u] == side[v] || g.has_edge(u, v)))
}

fn fam(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .and_then(|s| s.generate())
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

// ------------------------------------------------------- witness tracking

static CN_CHECKED: AtomicUsize = AtomicUsize::new(0);
static CN_FAILURES: Mutex<Vec<String>> = Mutex::new(Vec::new());

/// Records a total dominator coloring produced by the library: it must be a
/// TDC and its small classes' common neighborhoods must cover `V`.
fn witness(g: &Graph, c: &Coloring, context: &str) {
    CN_CHECKED.fetch_add(1, Ordering::Relaxed);
    let ok = matches!(verify_cn_cover(g, c), Ok(true));
    if !ok {
        CN_FAILURES
            .lock()
            .unwrap()
            .push(format!("{context}: {:?}", c.assignment()));
    }
}

fn solve(g: &Graph, context: &str) -> Result<SolveReport, String> {
    let r = tdc_exact(g).map_err(|e| format!("{context}: {e}"))?;
    witness(g, &r.witness, context);
    if r.witness.k() != r.value {
        return Err(format!(
            "{context}: witness has {} classes, value {}",
            r.witness.k(),
            r.value
        ));
    }
    Ok(r)
}

// ----------------------------------------------------------------- corpus

struct Entry {
    g: Graph,
    oracle: PartitionOracle,
    report: SolveReport,
}

struct Corpus {
    entries: Vec<Entry>,
    exhaustive: usize,
}

fn build_corpus() -> Result<Corpus, String> {
    let mut graphs: Vec<Graph> = (2..=6).flat_map(connected_graphs).collect();
    let exhaustive = graphs.len();
    graphs.extend(random_connected_graphs(300, 7..=8, 2024));
    let mut entries = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.into_iter().enumerate() {
        let oracle = partition_oracle(&g);
        let report = solve(&g, &format!("corpus #{i}"))?;
        entries.push(Entry { g, oracle, report });
    }
    Ok(Corpus {
        entries,
        exhaustive,
    })
}

// --------------------------------------------------------------- criteria

type Outcome = Result<String, String>;
type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence(corpus: &Corpus) -> Outcome {
    let mut mismatches = Vec::new();
    for (i, e) in corpus.entries.iter().enumerate() {
        if e.oracle.chi_dt != Some(e.report.value) {
            mismatches.push(format!(
                "#{i} n={} oracle {:?} solver {}",
                e.g.n(),
                e.oracle.chi_dt,
                e.report.value
            ));
        }
    }
    let random = corpus.entries.len() - corpus.exhaustive;
    let sizes_ok = corpus.entries[corpus.exhaustive..]
        .iter()
        .all(|e| (7..=8).contains(&e.g.n()) && e.g.is_connected() && e.g.min_degree() >= 1);
    check(sizes_ok, || {
        "random corpus outside 7-8 vertices or disconnected".into()
    })?;
    check(mismatches.is_empty(), || {
        format!("{} mismatches, first {}", mismatches.len(), mismatches[0])
    })?;
    Ok(format!(
        "{} labeled connected graphs on 2-6 vertices and {random} random on 7-8 agree with the set-partition oracle",
        corpus.exhaustive
    ))
}

/// Runs the family verifier and cross-checks every exact value it reports
/// against the partition oracle where the oracle is affordable.
fn family_rows(queries: Vec<FormulaQuery>, context: &str) -> Result<VerificationReport, String> {
    let report =
        verify_queries(queries, &SolverConfig::default()).map_err(|e| format!("{context}: {e}"))?;
    for row in &report.rows {
        let g = row.query.graph().map_err(|e| e.to_string())?;
        witness(&g, &row.witness, &row.label);
        check(row.witness.k() == row.exact_value, || {
            format!("{}: witness size", row.label)
        })?;
        if g.n() <= 10 {
            let o = partition_oracle(&g).chi_dt;
            check(o == Some(row.exact_value), || {
                format!(
                    "{}: solver {} but oracle {:?}",
                    row.label, row.exact_value, o
                )
            })?;
        }
    }
    Ok(report)
}

fn mismatch_list(report: &VerificationReport) -> String {
    report
        .errata
        .iter()
        .map(|r| {
            format!(
                "{} formula {} exact {}",
                r.label, r.formula_value, r.exact_value
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn cycles() -> Outcome {
    let report = family_rows(
        (4..=13).map(|n| FormulaQuery::Cycle { n }).collect(),
        "cycles",
    )?;
    check(report.all_match(), || mismatch_list(&report))?;
    let c3 = solve(&fam("cycle:3"), "C_3")?.value;
    check(c3 == 3, || format!("C_3 solved to {c3}"))?;
    check(partition_oracle(&fam("cycle:3")).chi_dt == Some(3), || {
        "oracle disagrees on C_3".into()
    })?;
    let unpatched = cycle_formula_unpatched(3).map_err(|e| e.to_string())?;
    Ok(format!(
        "C_4..C_13 match ({} rows); C_3 = 3 where the mod-6 rule alone gives {unpatched}",
        report.total
    ))
}

fn paths() -> Outcome {
    let report = family_rows(
        (2..=13).map(|n| FormulaQuery::Path { n }).collect(),
        "paths",
    )?;
    check(report.all_match(), || mismatch_list(&report))?;
    let p2 = solve(&fam("path:2"), "P_2")?.value;
    let p5 = solve(&fam("path:5"), "P_5")?.value;
    check(p2 == 2 && p5 == 4, || format!("P_2 = {p2}, P_5 = {p5}"))?;
    Ok(format!(
        "P_2..P_13 match ({} rows), P_2 = 2, P_5 = 4",
        report.total
    ))
}

fn wheels() -> Outcome {
    let report = family_rows(
        (3..=10).map(|n| FormulaQuery::Wheel { n }).collect(),
        "wheels",
    )?;
    check(report.all_match(), || mismatch_list(&report))?;
    for n in 3..=10 {
        let g = fam(&format!("wheel:{n}"));
        let tdc = solve(&g, &format!("W_{n}"))?.value;
        let dc = dc_exact(&g).map_err(|e| e.to_string())?;
        check(is_dominator_coloring(&g, &dc.witness), || {
            format!("W_{n}: χ_d witness invalid")
        })?;
        let o = partition_oracle(&g);
        check(
            tdc == dc.value && dc.value == o.chi && o.chi_d == dc.value,
            || format!("W_{n}: χ_d^t {tdc}, χ_d {}, χ {}", dc.value, o.chi),
        )?;
    }
    Ok(format!(
        "W_3..W_10 match ({} rows) and χ_d^t = χ_d = χ on each",
        report.total
    ))
}

fn complements() -> Outcome {
    let mut queries: Vec<FormulaQuery> = (4..=12)
        .map(|n| FormulaQuery::ComplementCycle { n })
        .collect();
    queries.extend((4..=12).map(|n| FormulaQuery::ComplementPath { n }));
    let report = family_rows(queries, "complements")?;
    check(report.all_match(), || mismatch_list(&report))?;
    Ok(format!(
        "complements of C_n and P_n, n = 4..12, match ({} rows)",
        report.total
    ))
}

fn integer_partitions(n: usize, max_parts: usize, cap: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    if max_parts == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in (1..=cap.min(n)).rev() {
        for mut rest in integer_partitions(n - first, max_parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn multipartite() -> Outcome {
    let mut queries = Vec::new();
    for n in 2..=10 {
        for parts in integer_partitions(n, 4, n) {
            if parts.len() >= 2 {
                queries.push(FormulaQuery::CompleteMultipartite { parts });
            }
        }
    }
    let parts_total = queries.len();
    queries.extend((2..=8).map(|n| FormulaQuery::CompleteGraph { n }));
    let report = family_rows(queries, "multipartite")?;
    check(report.all_match(), || mismatch_list(&report))?;
    for row in &report.rows {
        let expected = match &row.query {
            FormulaQuery::CompleteMultipartite { parts } => parts.len(),
            FormulaQuery::CompleteGraph { n } => *n,
            _ => unreachable!(),
        };
        check(row.exact_value == expected, || {
            format!("{}: {}", row.label, row.exact_value)
        })?;
    }
    Ok(format!(
        "{parts_total} complete p-partite graphs (2 <= p <= 4, n <= 10) give p; K_2..K_8 give n"
    ))
}

fn characterization(corpus: &Corpus) -> Outcome {
    let mut two = 0;
    let mut full = 0;
    for e in &corpus.entries[..corpus.exhaustive] {
        let n = e.g.n();
        let value = e.report.value;
        let cb = is_complete_bipartite_oracle(&e.g);
        let complete = e.g.m() == n * (n - 1) / 2;
        check((value == 2) == cb, || {
            format!(
                "value {value} vs complete bipartite {cb} on {:?}",
                e.g.edges().collect::<Vec<_>>()
            )
        })?;
        check((value == n) == complete, || {
            format!(
                "value {value} vs complete {complete} on {:?}",
                e.g.edges().collect::<Vec<_>>()
            )
        })?;
        two += usize::from(cb);
        full += usize::from(complete);
    }
    Ok(format!(
        "over {} connected graphs: {two} with value 2, all complete bipartite; {full} with value n, all complete",
        corpus.exhaustive
    ))
}

fn bound_sandwich(corpus: &Corpus) -> Outcome {
    let mut certificates = 0;
    for (i, e) in corpus.entries.iter().enumerate() {
        let g = &e.g;
        let ctx = format!("corpus #{i}");
        let value = e.report.value;
        let rec = bounds_report(g).map_err(|err| format!("{ctx}: {err}"))?;
        rec.revalidate(g).map_err(|err| format!("{ctx}: {err}"))?;
        let dc = dc_exact(g).map_err(|err| format!("{ctx}: {err}"))?;
        let gamma_t = gamma_t_oracle(g).expect("corpus graphs have no isolated vertices");
        check(
            dc.value == e.oracle.chi_d
                && rec.obs_lb.chi == e.oracle.chi
                && rec.obs_lb.gamma_t == gamma_t,
            || format!("{ctx}: companion invariants disagree with oracles"),
        )?;
        let lower = dc.value.max(gamma_t);
        check(lower <= value, || {
            format!("{ctx}: max(χ_d, γ_t) = {lower} > {value}")
        })?;
        for (name, ub) in rec.upper_bounds() {
            check(value <= ub, || format!("{ctx}: {name} = {ub} < {value}"))?;
        }
        check(
            rec.alpha0_ub.is_some() && rec.gamma_t_chi_ub.is_some(),
            || format!("{ctx}: bound missing"),
        )?;
        for b in [
            &rec.alpha0_ub,
            &rec.gamma_t_chi_ub,
            &rec.partite_ub,
            &rec.universal_value,
        ]
        .into_iter()
        .flatten()
        {
            witness(g, &b.witness, &ctx);
            check(
                is_total_dominator_coloring(g, &b.witness) && b.witness.k() == b.value,
                || format!("{ctx}: certificate of value {} invalid", b.value),
            )?;
            certificates += 1;
        }
        if let Some(u) = &rec.universal_value {
            check(u.value == value, || {
                format!("{ctx}: universal-vertex value {} != {value}", u.value)
            })?;
        }
    }
    Ok(format!(
        "{} graphs sit inside their bounds; {certificates} constructive witnesses validate",
        corpus.entries.len()
    ))
}

fn gamma_t_chi_sharpness() -> Outcome {
    let mut cases: Vec<String> = (3..=8).map(|n| format!("complete:{n}")).collect();
    cases.extend([3, 5, 7, 9].map(|n| format!("wheel:{n}")));
    for spec in &cases {
        let g = fam(spec);
        let bound = ub_gamma_t_chi(&g).map_err(|e| format!("{spec}: {e}"))?;
        witness(&g, &bound.witness, spec);
        let value = solve(&g, spec)?.value;
        check(bound.value == value, || {
            format!("{spec}: bound {} but χ_d^t {value}", bound.value)
        })?;
        check(partition_oracle(&g).chi_dt == Some(value), || {
            format!("{spec}: oracle disagrees")
        })?;
    }
    Ok(format!(
        "γ_t + χ is attained on K_3..K_8 and W_3, W_5, W_7, W_9 ({} graphs)",
        cases.len()
    ))
}

fn reduction(corpus: &Corpus) -> Outcome {
    let cfg = SolverConfig::default();
    for (i, e) in corpus.entries.iter().enumerate() {
        let ctx = format!("corpus #{i}");
        let check_ = verify_reduction(&e.g, &cfg).map_err(|err| format!("{ctx}: {err}"))?;
        let inst = reduce(&e.g, e.oracle.chi).map_err(|err| err.to_string())?;
        witness(&inst.reduced, &check_.reduced_witness, &ctx);
        check(check_.chi == e.oracle.chi, || {
            format!("{ctx}: χ {} vs oracle {}", check_.chi, e.oracle.chi)
        })?;
        check(
            check_.holds && check_.tdc_of_reduced == e.oracle.chi + 1,
            || {
                format!(
                    "{ctx}: χ_d^t(G') = {} but χ(G) = {}",
                    check_.tdc_of_reduced, e.oracle.chi
                )
            },
        )?;
        check(check_.apex_alone, || {
            format!("{ctx}: apex shares its class")
        })?;
        check(is_proper(&e.g, &check_.extracted).unwrap_or(false), || {
            format!("{ctx}: extracted coloring improper")
        })?;
        check(
            inst.k_prime == inst.k + 1 && inst.reduced.degree(inst.apex()) == e.g.n(),
            || format!("{ctx}: malformed instance"),
        )?;
    }
    Ok(format!(
        "χ_d^t(G + apex) = χ(G) + 1 with the apex alone in its class on all {} graphs",
        corpus.entries.len()
    ))
}

/// Violations of one claim, with the first offending tree.
#[derive(Default)]
struct Tally {
    count: usize,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.count += 1;
            self.first.get_or_insert_with(detail);
        }
    }
}

fn trees() -> Outcome {
    let mut total = 0;
    let mut classified = 0;
    let mut labeled: u64 = 0;
    let mut open = 0;
    let mut s_plus_two_cases = 0;
    let mut diam4_at_three = 0;
    let names = [
        "oracle",
        "s + 1 lower bound",
        "closed form",
        "s + 2 for diameter >= 5 with L ∪ S != V",
        "both diameter-5 patterns",
        "leaves at distance 3 without L ∪ S = V",
    ];
    let mut tallies: Vec<Tally> = names.iter().map(|_| Tally::default()).collect();
    for n in 3..=10usize {
        labeled += (n as u64).pow(n as u32 - 2);
        for (_, t) in tree_classes_by_prufer(n) {
            total += 1;
            let edges = || format!("{:?}", t.edges().collect::<Vec<_>>());
            let profile = analyze_tree(&t).map_err(|e| e.to_string())?;
            let value = solve(&t, &edges())?.value;
            let s = profile.s;
            let o = partition_oracle(&t).chi_dt;
            tallies[0].record(o == Some(value), || {
                format!("{} oracle {o:?} solver {value}", edges())
            });
            tallies[1].record(s < value, || format!("{} value {value}, s = {s}", edges()));
            let lsv = profile.all_leaf_or_support(n);
            if profile.diameter >= 5 && !lsv {
                s_plus_two_cases += 1;
                tallies[3].record(value >= s + 2, || {
                    format!("{} value {value}, s = {s}", edges())
                });
            }
            if profile.diameter == 5 {
                let Center::Edge(a, b) = profile.center else {
                    return Err(format!("{}: diameter 5 with a central vertex", edges()));
                };
                let (ia, ib) = (profile.supports.contains(a), profile.supports.contains(b));
                tallies[4].record(!(ia && ib && (s == 2 || ia != ib)), edges);
            }
            if profile.diameter == 4 {
                let dist = tree::distance_matrix(&t).map_err(|e| e.to_string())?;
                let leaves = profile.leaves.to_vec();
                if leaves
                    .iter()
                    .any(|&u| leaves.iter().any(|&v| dist[u][v] == 3))
                {
                    diam4_at_three += 1;
                    tallies[5].record(lsv, edges);
                }
            }
            let (case, _) = classify_tree(&t).map_err(|e| e.to_string())?;
            match tree_formula(&t).map_err(|e| e.to_string())? {
                Some(f) => {
                    classified += 1;
                    tallies[2].record(f == value, || {
                        format!("{} {case:?} gives {f}, exact {value}", edges())
                    });
                }
                None => {
                    check(case == TreeCase::Open && profile.diameter >= 6, || {
                        format!("{}: unclassified", edges())
                    })?;
                    open += 1;
                }
            }
        }
    }
    let summary = format!(
        "{labeled} Prüfer sequences give {total} trees on 3-10 vertices; {classified} have a closed form, \
         {open} have diameter >= 6 and L ∪ S != V; {s_plus_two_cases} fall under the s + 2 bound; \
         {diam4_at_three} diameter-4 trees have leaves at distance 3"
    );
    let violations: Vec<String> = names
        .iter()
        .zip(&tallies)
        .filter(|(_, t)| t.count > 0)
        .map(|(name, t)| {
            format!(
                "{name}: {} violations, e.g. {}",
                t.count,
                t.first.as_deref().unwrap_or("")
            )
        })
        .collect();
    if violations.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{}; {summary}", violations.join("; ")))
    }
}

fn components() -> Outcome {
    const POOL: [&str; 16] = [
        "path:2",
        "path:3",
        "path:4",
        "path:5",
        "cycle:3",
        "cycle:4",
        "cycle:5",
        "cycle:6",
        "star:3",
        "complete:3",
        "complete:4",
        "multipartite:2,2",
        "multipartite:2,3",
        "multipartite:1,1,2",
        "wheel:4",
        "wheel:5",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let cfg = SolverConfig::default();
    let mut tight = 0;
    for i in 0..50 {
        let parts = rng.gen_range(2..=3);
        let specs: Vec<&str> = (0..parts)
            .map(|_| POOL[rng.gen_range(0..POOL.len())])
            .collect();
        let ctx = format!("union #{i} {}", specs.join(" + "));
        let mut g = fam(specs[0]);
        for s in &specs[1..] {
            g = g.disjoint_union(&fam(s)).map_err(|e| e.to_string())?;
        }
        let b = component_bounds(&g, &cfg).map_err(|e| format!("{ctx}: {e}"))?;
        witness(&g, &b.witness, &ctx);
        check(b.components == parts, || {
            format!("{ctx}: {} components", b.components)
        })?;
        let value = solve(&g, &ctx)?.value;
        check(b.lb <= value && value <= b.ub, || {
            format!("{ctx}: {value} outside [{}, {}]", b.lb, b.ub)
        })?;
        let non_cb = g
            .connected_components()
            .into_iter()
            .filter(|&c| !is_complete_bipartite_oracle(&g.induced_subgraph(c).0))
            .count();
        check(b.equality_expected == (non_cb <= 1), || {
            format!("{ctx}: equality flag wrong")
        })?;
        if non_cb <= 1 {
            check(value == b.lb, || {
                format!("{ctx}: expected {} got {value}", b.lb)
            })?;
            tight += 1;
        }
    }
    Ok(format!("50 unions inside [lb, ub]; all {tight} with at most one non-complete-bipartite component hit lb"))
}

fn products() -> Outcome {
    let mut factors = Vec::new();
    for m in 2..=4 {
        factors.push(format!("path:{m}"));
        factors.push(format!("complete:{m}"));
        if m >= 3 {
            factors.push(format!("cycle:{m}"));
        }
    }
    let mut checked = 0;
    for a in &factors {
        for b in &factors {
            let (g, h) = (fam(a), fam(b));
            if g.n() * h.n() > 16 {
                continue;
            }
            let r = check_product_bound(&g, &h).map_err(|e| format!("{a} x {b}: {e}"))?;
            let prod = g.cartesian_product(&h).map_err(|e| e.to_string())?;
            let lhs = gamma_t_oracle(&prod).unwrap();
            let rhs =
                (gamma_t_oracle(&g).unwrap() * h.n()).min(gamma_t_oracle(&h).unwrap() * g.n());
            check(r.lhs == lhs && r.rhs == rhs, || {
                format!("{a} x {b}: values disagree with oracle")
            })?;
            check(r.holds && lhs <= rhs, || {
                format!("{a} x {b}: {lhs} > {rhs}")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "γ_t(G□H) <= min(γ_t(G)|H|, γ_t(H)|G|) on {checked} ordered products"
    ))
}

fn comparisons() -> Outcome {
    let report = comparison_report(3..=13, &SolverConfig::default()).map_err(|e| e.to_string())?;
    for row in &report.rows {
        let n = row.n;
        let o = |spec: String| partition_oracle(&fam(&spec)).chi_dt.unwrap();
        if n <= 9 {
            check(
                row.path == o(format!("path:{n}"))
                    && row.cycle == o(format!("cycle:{n}"))
                    && row.wheel == o(format!("wheel:{n}")),
                || format!("n = {n}: exact values disagree with oracle"),
            )?;
        }
    }
    let wheel_rows = report.rows.iter().filter(|r| r.wheel_matches()).count();
    let path_rows = report.rows.iter().filter(|r| r.path_matches()).count();
    let mut problems = Vec::new();
    // P_3 = K_{1,2} needs 2 classes and C_3 = K_3 needs 3; the table's
    // "equal" at n = 3 inherits the mod-6 rule's value of 2 for C_3
    if path_formula(3).ok() != cycle_formula_unpatched(3).ok() {
        problems.push("n = 3 disagreement is not explained by the C_3 value".to_string());
    }
    let expected = vec![(3, "path_vs_cycle".to_string())];
    if report.errata != expected {
        let extra: Vec<String> = report
            .rows
            .iter()
            .filter(|r| r.n != 3 && !(r.path_matches() && r.wheel_matches()))
            .map(|r| {
                format!(
                    "n = {}: P {} C {} W {} (table {:?}/{:?}, observed {:?}/{:?})",
                    r.n,
                    r.path,
                    r.cycle,
                    r.wheel,
                    r.path_vs_cycle_expected,
                    r.cycle_vs_wheel_expected,
                    r.path_vs_cycle_observed,
                    r.cycle_vs_wheel_observed
                )
            })
            .collect();
        problems.push(format!(
            "table disagreements beyond n = 3: {}",
            extra.join(", ")
        ));
    }

    // subgraph pairs H ⊆ G under the canonical labelings
    let pairs = [
        ("path:4", "cycle:4", Relation::Greater),
        ("cycle:6", "wheel:6", Relation::Greater),
        ("path:3", "cycle:3", Relation::Less),
        ("cycle:3", "wheel:3", Relation::Less),
    ];
    let mut shown = Vec::new();
    for (h, g, direction) in pairs {
        let (hg, gg) = (fam(h), fam(g));
        let is_sub = hg.n() <= gg.n() && hg.edges().all(|(u, v)| gg.has_edge(u, v));
        check(is_sub, || format!("{h} is not a subgraph of {g}"))?;
        let (a, b) = (solve(&hg, h)?.value, solve(&gg, g)?.value);
        let observed = if a > b {
            Relation::Greater
        } else if a < b {
            Relation::Less
        } else {
            Relation::Equal
        };
        if observed != direction {
            problems.push(format!("{h} = {a}, {g} = {b}"));
        }
        shown.push(format!("{h}={a} {g}={b}"));
    }
    let summary = format!(
        "n = 3..13: cycle-vs-wheel {wheel_rows}/{rows} rows, path-vs-cycle {path_rows}/{rows} rows; \
         non-monotone pairs {}",
        shown.join(", "),
        rows = report.rows.len(),
    );
    if problems.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{}; {summary}", problems.join("; ")))
    }
}

fn cn_cover() -> Outcome {
    let checked = CN_CHECKED.load(Ordering::Relaxed);
    let failures = CN_FAILURES.lock().unwrap();
    check(checked > 0, || "no witnesses were recorded".into())?;
    check(failures.is_empty(), || {
        format!("{} failures, first {}", failures.len(), failures[0])
    })?;
    Ok(format!(
        "{checked} witnesses from every other criterion pass the common-neighborhood cover check"
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = match build_corpus() {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL corpus construction: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!("corpus built in {:.1?}", start.elapsed());

    let criteria: Vec<Criterion> = vec![
        (
            1,
            "oracle equivalence",
            Box::new(|| oracle_equivalence(&corpus)),
        ),
        (2, "cycle formula", Box::new(cycles)),
        (3, "path formula", Box::new(paths)),
        (4, "wheel formula", Box::new(wheels)),
        (5, "complement formulas", Box::new(complements)),
        (6, "complete multipartite and K_n", Box::new(multipartite)),
        (
            7,
            "value 2 and value n characterization",
            Box::new(|| characterization(&corpus)),
        ),
        (8, "bound sandwich", Box::new(|| bound_sandwich(&corpus))),
        (9, "sharpness of γ_t + χ", Box::new(gamma_t_chi_sharpness)),
        (
            10,
            "universal-vertex reduction",
            Box::new(|| reduction(&corpus)),
        ),
        (12, "trees", Box::new(trees)),
        (13, "components", Box::new(components)),
        (14, "product bound for γ_t", Box::new(products)),
        (
            15,
            "path, cycle and wheel comparisons",
            Box::new(comparisons),
        ),
        // last, so it sees the witnesses of every other criterion
        (11, "common-neighborhood cover", Box::new(cn_cover)),
    ];

    let mut failed = 0;
    for (id, name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{id:>2}] {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{id:>2}] {name}: {why} ({secs:.1}s)");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        15 - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
