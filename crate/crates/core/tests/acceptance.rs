//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use graphcurve::fixtures::{theta10_cubics, theta10_graph, theta10_labeling, theta10_quadrics, theta10_ring, k4_subdivided};
use graphcurve::graph::{random_valid, Graph};
use graphcurve::homology::{analyze, girth_predictions, Analysis, Guardrails};
use graphcurve::idealgen::{certify, combinatorial_generators, intersection_ideal, quadric_space};
use graphcurve::labeling::{label_edges, Labeling};
use graphcurve::secant::{secant_degree_prediction, secant_ideal, SecantSpec, SecantStatus};
use graphcurve_algebra::{format_polynomial, Ideal, Polynomial, Ring};

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(60);
const LIMIT_3: Duration = Duration::from_secs(300);
const LIMIT_4: Duration = Duration::from_secs(60);
const LIMIT_SWEEP: Duration = Duration::from_secs(30 * 60);
const SWEEP_SIZE: usize = 60;
const SWEEP_MAX_D: usize = 12;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn timed(n: u32, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    let el = t.elapsed();
    let in_time = limit.is_none_or(|l| el <= l);
    let ok = o.ok && in_time;
    let limit = limit.map_or("none".into(), |l| format!("{}s", l.as_secs()));
    let late = if in_time { "" } else { " [over time limit]" };
    println!(
        "criterion {n}: {} ({:.2}s, limit {limit}){late} {}",
        if ok { "PASS" } else { "FAIL" },
        el.as_secs_f64(),
        o.detail
    );
    ok
}

fn monic_set(r: &Ring, fs: &[Polynomial]) -> BTreeSet<String> {
    fs.iter().map(|f| format_polynomial(r, &r.make_monic(f))).collect()
}

fn criterion_1() -> Outcome {
    let (l, r) = (theta10_labeling(), theta10_ring());
    let gens: Vec<Polynomial> = combinatorial_generators(&l, &r).iter().map(|q| q.to_poly(&r)).collect();
    let ours = monic_set(&r, &gens);
    let listed = monic_set(&r, &theta10_quadrics(&r));
    let binomials = ["x3*x7 - x4*x7", "x0*x8 - x6*x8"].iter().all(|b| ours.contains(*b));
    outcome(
        ours == listed && binomials,
        format!("{} products, {} listed, binomial products present: {binomials}", ours.len(), listed.len()),
    )
}

fn criterion_2() -> Outcome {
    let (l, r) = (theta10_labeling(), theta10_ring());
    let a = analyze(&intersection_ideal(&l, &r).unwrap(), Guardrails::default()).unwrap();
    let d = &a.diagram;
    let totals = d.totals();
    let row1: Vec<u64> = (1..=6).map(|i| d.at_row(i, 1)).collect();
    let row2: Vec<u64> = (5..=7).map(|i| d.at_row(i, 2)).collect();
    let ok = totals == [1, 26, 98, 168, 154, 72, 15, 2]
        && row1 == [26, 98, 168, 154, 70, 8]
        && row2 == [2, 7, 2]
        && d.row(0) == [1, 0, 0, 0, 0, 0, 0, 0]
        && d.regularity() == 2;
    outcome(ok, format!("totals {totals:?}, row 1 {row1:?}, row 2 at i=5..7 {row2:?}"))
}

fn criterion_3() -> Outcome {
    let (l, r) = (theta10_labeling(), theta10_ring());
    let s = secant_ideal(&l, &r, 1).unwrap();
    let listed = Ideal::new(&r, theta10_cubics(&r));
    let same = s.ideal == listed;
    let a = analyze(&s.ideal, Guardrails::default()).unwrap();
    let sum = a.summary.clone().unwrap();
    let totals = a.diagram.totals();
    let degree = a.hilbert.degree();
    let predicted = secant_degree_prediction(10, 2).formula;
    let ok = same
        && totals == [1, 25, 58, 43, 12, 3]
        && a.ideal_regularity() == Some(5)
        && sum.projective_dimension == 5
        && sum.codimension == 5
        && sum.is_acm
        && degree == 34
        && predicted == 34;
    outcome(
        ok,
        format!(
            "GB equal to listed cubics: {same}, totals {totals:?}, reg(I) {:?}, pd {} codim {}, degree {degree} (formula {predicted})",
            a.ideal_regularity(),
            sum.projective_dimension,
            sum.codimension
        ),
    )
}

fn criterion_4() -> Outcome {
    let g = k4_subdivided();
    let l = label_edges(&g, true).unwrap();
    let r = Ring::grevlex(l.nvars()).unwrap();
    let q = quadric_space(&l, &r);
    let oracle = intersection_ideal(&l, &r).unwrap();
    let generates = Ideal::new(&r, q.clone()) == oracle;
    let dim2 = oracle.dim_in_degree(2).unwrap();
    outcome(
        q.len() == 18 && dim2 == 18 && generates,
        format!("vanishing quadrics {}, dim I_2 {dim2}, quadrics generate: {generates}", q.len()),
    )
}

/// Everything computed for one sweep graph.
struct Fixture {
    graph: Graph,
    labeling: Labeling,
    ring: Ring,
    certified: bool,
    oracle: Ideal,
    curve: Analysis,
    secant: SecantSpec,
    secant_analysis: Option<Analysis>,
}

fn sweep_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    let mut i = 0u64;
    while out.len() < SWEEP_SIZE {
        let d = 4 + (i as usize % (SWEEP_MAX_D - 3));
        let gmax = (d - 2) / 2;
        let g = (i as usize / (SWEEP_MAX_D - 3)) % (gmax + 1);
        // Some (d, g) pairs allowed by d >= 2g + 2 have no admissible graph.
        if let Ok(gr) = random_valid(d, g, 1000 + i) {
            out.push(gr);
        }
        i += 1;
    }
    out
}

fn build(graph: Graph) -> Fixture {
    let labeling = label_edges(&graph, false).unwrap();
    let ring = Ring::grevlex(labeling.nvars()).unwrap();
    let c = certify(&labeling, &ring).unwrap();
    let curve = analyze(&c.oracle, Guardrails::default()).unwrap();
    let secant = secant_ideal(&labeling, &ring, 1).unwrap();
    let secant_analysis = (secant.status == SecantStatus::Computed).then(|| analyze(&secant.ideal, Guardrails::default()).unwrap());
    Fixture { graph, labeling, ring, certified: c.certificate.passed(), oracle: c.oracle, curve, secant, secant_analysis }
}

fn criterion_5(fx: &[Fixture]) -> Outcome {
    let failed: Vec<String> = fx.iter().filter(|f| !f.certified).map(|f| f.graph.hash()[..12].to_string()).collect();
    let trees = fx.iter().filter(|f| f.graph.genus() == 0).count();
    let max_d = fx.iter().map(|f| f.graph.vertex_count()).max().unwrap_or(0);
    let admissible = fx.iter().all(|f| f.graph.validate().is_admissible());
    outcome(
        failed.is_empty() && admissible && fx.len() >= 50 && max_d <= SWEEP_MAX_D,
        format!("{} graphs ({trees} trees, d <= {max_d}), certificate failures {failed:?}", fx.len()),
    )
}

fn criterion_6(fx: &[Fixture]) -> Outcome {
    let mut bad = Vec::new();
    for f in fx {
        let Some(s) = &f.curve.summary else {
            bad.push(format!("{}: incomplete", f.graph.hash()));
            continue;
        };
        let tree = f.graph.genus() == 0;
        let reg_ok = if tree { s.regularity == 1 } else { s.regularity <= 2 };
        if !reg_ok || s.projective_dimension != s.codimension {
            bad.push(format!("d={} g={} reg {} pd {} codim {}", f.graph.vertex_count(), f.graph.genus(), s.regularity, s.projective_dimension, s.codimension));
        }
    }
    outcome(bad.is_empty(), format!("violations {bad:?}"))
}

fn criterion_7(fx: &[Fixture]) -> Outcome {
    let (mut curve_checked, mut secant_checked) = (0, 0);
    let mut bad = Vec::new();
    for f in fx {
        let Some(p) = girth_predictions(&f.graph) else { continue };
        curve_checked += 1;
        if f.curve.diagram.check_nkp(2, p.curve_fails_n2) {
            bad.push(format!("curve N_{{2,{}}} holds (girth {})", p.curve_fails_n2, p.girth));
        }
        if let (Some(q), Some(a)) = (p.secant_fails_n3, &f.secant_analysis) {
            if a.is_complete() {
                secant_checked += 1;
                if a.diagram.check_nkp(3, q) {
                    bad.push(format!("secant N_{{3,{q}}} holds (girth {})", p.girth));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("curve checks {curve_checked}, secant checks {secant_checked}, violations {bad:?}"))
}

fn criterion_8(fx: &[Fixture]) -> Outcome {
    let g = theta10_graph();
    let (l, r) = (theta10_labeling(), theta10_ring());
    let a = analyze(&intersection_ideal(&l, &r).unwrap(), Guardrails::default()).unwrap();
    let c = girth_predictions(&g).unwrap().cycle_count.unwrap();
    let beta = a.diagram.get(c.i, c.j);
    let example_ok = beta == 2 && c.cycles == 2;
    let (mut agree, mut total) = (0, 0);
    for f in fx {
        let Some(cc) = girth_predictions(&f.graph).and_then(|p| p.cycle_count) else { continue };
        total += 1;
        if f.curve.diagram.get(cc.i, cc.j) == cc.cycles as u64 {
            agree += 1;
        }
    }
    outcome(
        example_ok,
        format!("example: beta_{{{},{}}} = {beta}, cycles = {}; sweep agreement {agree}/{total} (logged only)", c.i, c.j, c.cycles),
    )
}

fn criterion_9(fx: &[Fixture]) -> Outcome {
    let (mut gbs, mut resolutions, mut intersections) = (0, 0, 0);
    let mut bad = Vec::new();
    for f in fx {
        let r = &f.ring;
        let mut bases = vec![f.oracle.gb()];
        if f.secant.status == SecantStatus::Computed {
            bases.push(f.secant.ideal.gb());
        }
        for gb in bases {
            gbs += 1;
            if !gb.satisfies_buchberger_criterion() {
                bad.push(format!("{}: S-pair criterion", f.graph.hash()));
            }
        }
        for a in std::iter::once(&f.curve).chain(f.secant_analysis.as_ref()) {
            resolutions += 1;
            if !a.euler_ok {
                bad.push(format!("{}: Euler identity", f.graph.hash()));
            }
        }
        let lines: Vec<Ideal> = f.labeling.line_ideals().iter().map(|li| Ideal::new(r, li.polys(r))).collect();
        intersections += lines.len() - 1;
        if !f.oracle.generators().iter().all(|g| lines.iter().all(|li| li.is_member(g))) {
            bad.push(format!("{}: curve generator off a line", f.graph.hash()));
        }
        let comps: Vec<Ideal> = f.secant.components.iter().map(|c| Ideal::new(r, c.ideal.generators(r))).collect();
        intersections += comps.len().saturating_sub(1);
        if !f.secant.ideal.generators().iter().all(|g| comps.iter().all(|c| c.is_member(g))) {
            bad.push(format!("{}: secant generator off a span", f.graph.hash()));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{gbs} bases, {resolutions} resolutions, {intersections} intersections; violations {bad:?}"),
    )
}

fn main() {
    // Quiet under `cargo test -- --list` and similar harness probes.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let mut ok = true;
    ok &= timed(1, Some(LIMIT_1), criterion_1);
    ok &= timed(2, Some(LIMIT_2), criterion_2);
    ok &= timed(3, Some(LIMIT_3), criterion_3);
    ok &= timed(4, Some(LIMIT_4), criterion_4);

    // Criterion 5 owns the sweep, so its time covers building every fixture.
    let cache: OnceLock<Vec<Fixture>> = OnceLock::new();
    let fixtures = || cache.get_or_init(|| sweep_graphs().into_iter().map(build).collect());
    ok &= timed(5, Some(LIMIT_SWEEP), || criterion_5(fixtures()));
    let fixtures = fixtures();
    ok &= timed(6, None, || criterion_6(fixtures));
    ok &= timed(7, None, || criterion_7(fixtures));
    ok &= timed(8, None, || criterion_8(fixtures));
    ok &= timed(9, None, || criterion_9(fixtures));
    if !ok {
        std::process::exit(1);
    }
}
