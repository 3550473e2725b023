//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{brute_hub, brute_odd_odd, brute_quad_pent, labeled_trees, unlabeled_trees};
use halfguard::decomp::{odd_odd_edge, pent_hub_edges, quad_pent_edge};
use halfguard::fixtures::orthogonal_26;
use halfguard::geom::Polygon;
use halfguard::guard::{is_aligned, is_entire, HalfGuard};
use halfguard::place::{place_any, place_even_aligned, place_orthogonal};
use halfguard::polygen::{gen_orthogonal, gen_simple};
use halfguard::smallcase::{pent_guard, quad_guard};
use halfguard::tri::{dual_tree, triangulate};
use halfguard::verify::{
    exact_coverage, is_connected, mutual_visibility_graph, sample_coverage, uncovered_region, verify_report_with, Covered,
    SampleOutcome, VerifyOptions,
};

const SIMPLE_SEEDS: u64 = 11;
const ORTHOGONAL_SEEDS: u64 = 8;
/// Largest size with exact coverage in the validity check.
const EXACT_MAX_N: usize = 16;
/// Interior samples per unit area above [`EXACT_MAX_N`].
const DENSITY: f64 = 50.0;

const LIMIT_SIMPLE: Duration = Duration::from_secs(120);
const LIMIT_ORTHOGONAL: Duration = Duration::from_secs(60);
const LIMIT_FIXTURE: Duration = Duration::from_secs(5);
const LIMIT_VALIDITY: Duration = Duration::from_secs(300);
const LIMIT_ALIGNED: Duration = Duration::from_secs(120);

/// Unlabeled trees with maximum degree 3 on 1..=12 nodes.
const DEGREE3_TREES: [usize; 12] = [1, 1, 1, 2, 2, 4, 6, 11, 18, 37, 66, 135];

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { failures: Vec::new(), detail: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn within(&mut self, t: Instant, limit: Duration) {
        let took = t.elapsed();
        self.detail = format!("{} in {:.2}s (limit {}s)", self.detail, took.as_secs_f64(), limit.as_secs());
        self.check(took <= limit, || format!("took {:.2}s", took.as_secs_f64()));
    }
}

fn simple_corpus() -> Vec<(u64, Polygon)> {
    (4..=24).flat_map(|n| (0..SIMPLE_SEEDS).map(move |s| (s, gen_simple(n, s).expect("generator")))).collect()
}

fn orthogonal_corpus() -> Vec<(u64, Polygon)> {
    (6..=30).step_by(2).flat_map(|n| (0..ORTHOGONAL_SEEDS).map(move |s| (s, gen_orthogonal(n, s).expect("generator")))).collect()
}

fn cardinality(corpus: &[(u64, Polygon)], orthogonal: bool, limit: Duration) -> (Outcome, Vec<Vec<HalfGuard>>) {
    let mut o = Outcome::new();
    let t = Instant::now();
    let mut sets = Vec::new();
    for (seed, p) in corpus {
        let n = p.n();
        let (res, want) = if orthogonal { (place_orthogonal(p), n / 2 - 2) } else { (place_any(p), n / 2 - 1) };
        match res {
            Ok(s) => {
                o.check(s.len() == want, || format!("n={n} seed={seed}: {} guards, want {want}", s.len()));
                sets.push(s.guards);
            }
            Err(e) => {
                o.failures.push(format!("n={n} seed={seed}: {e}"));
                sets.push(Vec::new());
            }
        }
    }
    o.detail = format!("{} instances", corpus.len());
    o.within(t, limit);
    (o, sets)
}

fn fixture() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let p = orthogonal_26();
    match place_orthogonal(&p) {
        Ok(s) => {
            let opts = VerifyOptions { exact_max_n: usize::MAX, ..Default::default() };
            let r = verify_report_with(&p, &s.guards, 11, None, &opts);
            o.check(s.len() == 11, || format!("{} guards", s.len()));
            o.check(r.covered == Covered::ProvedExact, || format!("coverage {:?}", r.covered));
            o.check(r.ok(), || format!("{r:?}"));
            o.detail = format!("{} guards, coverage {:?}", s.len(), r.covered);
        }
        Err(e) => o.failures.push(e.to_string()),
    }
    o.within(t, LIMIT_FIXTURE);
    o
}

fn validity(instances: &[(&(u64, Polygon), &Vec<HalfGuard>)]) -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let (mut exact, mut sampled) = (0, 0);
    for ((seed, p), guards) in instances {
        let n = p.n();
        if guards.is_empty() {
            o.failures.push(format!("n={n} seed={seed}: no guard set"));
            continue;
        }
        if n <= EXACT_MAX_N {
            exact += 1;
            o.check(uncovered_region(p, guards).is_empty(), || format!("n={n} seed={seed}: uncovered region"));
        } else {
            sampled += 1;
            match sample_coverage(p, guards, DENSITY, *seed) {
                Ok(SampleOutcome::SampledOk(_)) => {}
                other => o.failures.push(format!("n={n} seed={seed}: sampling {other:?}")),
            }
        }
        o.check(is_connected(&mutual_visibility_graph(p, guards)), || format!("n={n} seed={seed}: disconnected"));
    }
    o.detail = format!("{exact} exact, {sampled} sampled at density {DENSITY}");
    o.within(t, LIMIT_VALIDITY);
    o
}

fn alignment(simple: &[(u64, Polygon)]) -> Outcome {
    let mut o = Outcome::new();
    // Restricted run: 50 even instances with n <= 12, each fully verified.
    let t = Instant::now();
    let restricted: Vec<Polygon> = (4..=12).step_by(2).flat_map(|n| (0..10).map(move |s| gen_simple(n, 100 + s).unwrap())).collect();
    let opts = VerifyOptions { exact_max_n: usize::MAX, ..Default::default() };
    let mut checked = 0;
    for p in &restricted {
        for s in 0..p.n() {
            let side = p.edge(s);
            match place_even_aligned(p, s) {
                Ok(set) => {
                    let r = verify_report_with(p, &set.guards, (p.n() - 2) / 2, Some(&side), &opts);
                    o.check(r.ok(), || format!("n={} side {s}: {r:?}", p.n()));
                }
                Err(e) => o.failures.push(format!("n={} side {s}: {e}", p.n())),
            }
            checked += 1;
        }
    }
    o.detail = format!("restricted {} instances, {checked} sides", restricted.len());
    o.within(t, LIMIT_ALIGNED);
    // Every side of every even instance of the simple corpus.
    let mut sides = 0;
    for (seed, p) in simple.iter().filter(|(_, p)| p.n() % 2 == 0) {
        for s in 0..p.n() {
            let side = p.edge(s);
            let ok = place_even_aligned(p, s).is_ok_and(|set| set.guards.iter().any(|g| is_aligned(p, g, &side)));
            o.check(ok, || format!("n={} seed={seed} side {s}", p.n()));
            sides += 1;
        }
    }
    o.detail = format!("{}; full corpus {sides} sides", o.detail);
    o
}

fn triangulations(corpus: &[&(u64, Polygon)]) -> Outcome {
    let mut o = Outcome::new();
    for (seed, p) in corpus {
        let t = triangulate(p);
        let g = dual_tree(&t);
        o.check(t.triangles.len() == p.n() - 2, || format!("n={} seed={seed}: {} triangles", p.n(), t.triangles.len()));
        o.check(g.tree.n() == p.n() - 2 && g.tree.max_degree() <= 3, || format!("n={} seed={seed}: dual tree", p.n()));
    }
    o.detail = format!("{} polygons", corpus.len());
    o
}

fn tree_oracles() -> Outcome {
    let mut o = Outcome::new();
    let mut counts = [0usize; 12];
    for adj in unlabeled_trees(12) {
        counts[adj.len() - 1] += 1;
    }
    o.check(counts == DEGREE3_TREES, || format!("tree counts {counts:?}"));
    let trees = labeled_trees(12);
    for t in &trees {
        let n = t.n();
        if n % 2 == 0 {
            for x in (0..n).filter(|&x| matches!(t.degree(x), 1 | 2)) {
                let ok = odd_odd_edge(t, x).is_ok_and(|e| brute_odd_odd(t, x).contains(&e));
                o.check(ok, || format!("odd_odd_edge {:?} at {x}", t.edges()));
            }
        }
        if n >= 3 {
            let ok = quad_pent_edge(t).is_ok_and(|c| brute_quad_pent(t).contains(&c.edge) && t.components(&[c.edge]).contains(&c.small));
            o.check(ok, || format!("quad_pent_edge {:?}", t.edges()));
        }
        if n >= 3 && n % 2 == 1 {
            let ok = pent_hub_edges(t).is_ok_and(|h| {
                let mut e = h.edges.clone();
                e.sort();
                brute_hub(t).contains(&e)
            });
            o.check(ok, || format!("pent_hub_edges {:?}", t.edges()));
        }
    }
    o.detail = format!("{} labeled trees", trees.len());
    o
}

fn covers_alone(p: &Polygon, g: &HalfGuard) -> bool {
    exact_coverage(p, std::slice::from_ref(g)) == Covered::ProvedExact
}

fn small_cases() -> Outcome {
    let mut o = Outcome::new();
    for seed in 0..100 {
        let q = gen_simple(4, 1000 + seed).unwrap();
        for s in 0..4 {
            let ok = quad_guard(&q, s).is_ok_and(|g| {
                is_entire(&q, &g).unwrap_or(false) && is_aligned(&q, &g, &q.edge(s)) && covers_alone(&q, &g)
            });
            o.check(ok, || format!("quad {:?} side {s}", q.vertices()));
        }
    }
    for seed in 0..100 {
        let p = gen_simple(5, 2000 + seed).unwrap();
        let ok = pent_guard(&p).is_ok_and(|g| {
            is_entire(&p, &g).unwrap_or(false) && p.find_vertex(&g.pos).is_none() && covers_alone(&p, &g)
        });
        o.check(ok, || format!("pentagon {:?}", p.vertices()));
    }
    o.detail = "100 quadrilaterals x 4 sides, 100 pentagons".into();
    o
}

fn report(id: u32, name: &str, o: &Outcome) -> bool {
    let ok = o.failures.is_empty();
    println!("{} criterion {id}: {name}: {}", if ok { "PASS" } else { "FAIL" }, o.detail.trim());
    for f in o.failures.iter().take(10) {
        println!("    {f}");
    }
    if o.failures.len() > 10 {
        println!("    ... {} more", o.failures.len() - 10);
    }
    ok
}

fn main() {
    // libtest flags such as --list or a name filter are not meaningful here.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let simple = simple_corpus();
    let orthogonal = orthogonal_corpus();
    let mut ok = true;

    let (o1, simple_sets) = cardinality(&simple, false, LIMIT_SIMPLE);
    ok &= report(1, "general cardinality floor(n/2)-1", &o1);
    let (o2, orth_sets) = cardinality(&orthogonal, true, LIMIT_ORTHOGONAL);
    ok &= report(2, "orthogonal cardinality n/2-2", &o2);
    ok &= report(3, "26-gon fixture with 11 guards", &fixture());
    let all: Vec<_> = simple.iter().zip(&simple_sets).chain(orthogonal.iter().zip(&orth_sets)).collect();
    ok &= report(4, "coverage and connectivity", &validity(&all));
    ok &= report(5, "aligned guard on every side", &alignment(&simple));
    let polys: Vec<_> = simple.iter().chain(&orthogonal).collect();
    ok &= report(6, "triangulation size and dual degree", &triangulations(&polys));
    ok &= report(7, "tree edge selections against brute force", &tree_oracles());
    ok &= report(8, "quadrilateral and pentagon guards", &small_cases());
    println!("EXCLUDED criterion 9: lower-bound necessity and comparison claims have no constructions to reproduce");
    if !ok {
        std::process::exit(1);
    }
}
