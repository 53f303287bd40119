//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use aos::generate;
use aos_core::analysis::check_hierarchy;
use aos_core::{
    apply_box_bounds, brute_force_vertices, build_copper_plate, build_dcopf, build_network_flow,
    enumerate_binary, enumerate_vertices, is_in_convex_hull, is_unique_minimizer, project_set, rank_alternatives,
    solve, to_standard_form, EnumerateOptions, LpModel, Network, ObjectiveSense, ProjectionSpec, Role,
    SecondaryObjective, SolveStatus, SublevelSpec, VertexSet,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn close(a: &[Vec<f64>], b: &[Vec<f64>], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(p, q)| p.len() == q.len() && p.iter().zip(q).all(|(x, y)| (x - y).abs() <= tol))
}

fn optimum(m: &LpModel) -> Result<f64, String> {
    let r = solve(&to_standard_form(m).map_err(|e| e.to_string())?);
    if r.is_optimal() { Ok(r.z_star) } else { Err(format!("solver status {:?}", r.status)) }
}

fn vertices(m: &LpModel, spec: SublevelSpec, bound: f64) -> Result<VertexSet, String> {
    let z = optimum(m)?;
    let boxed = apply_box_bounds(m, bound).map_err(|e| e.to_string())?.model;
    enumerate_vertices(&boxed, z, spec, 10_000).map_err(|e| e.to_string())
}

fn three_bus_optimum() -> Check {
    let start = Instant::now();
    let r = solve(&to_standard_form(&build_dcopf(&Network::canonical_three_bus())).map_err(|e| e.to_string())?);
    let elapsed = start.elapsed();
    ensure(r.status == SolveStatus::Optimal, || format!("status {:?}", r.status))?;
    ensure((r.z_star - 5000.0).abs() <= 1e-6, || format!("z* = {}", r.z_star))?;
    ensure(close(&[r.x_star[..3].to_vec()], &[vec![100.0, 0.0, 0.0]], 1e-6), || format!("P = {:?}", &r.x_star[..3]))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("z* = 5000, P = [100, 0, 0] in {elapsed:?}"))
}

fn three_bus_counts() -> Check {
    let net = Network::canonical_three_bus();
    let models = [("DC", build_dcopf(&net), 5), ("NF", build_network_flow(&net), 4), ("CP", build_copper_plate(&net), 2)];
    for bound in [1e4, 1e6] {
        for (label, m, want) in &models {
            let vs = vertices(m, SublevelSpec::RelativeGap(0.0), bound)?;
            ensure(vs.complete && vs.len() == *want, || format!("{label} at M={bound}: {} vertices", vs.len()))?;
            let z = optimum(m)?;
            let boxed = apply_box_bounds(m, bound).map_err(|e| e.to_string())?.model;
            let slow = brute_force_vertices(&boxed, z, SublevelSpec::Absolute(z)).map_err(|e| e.to_string())?;
            ensure(close(&vs.points, &slow.points, 1e-6), || format!("{label} at M={bound}: brute force differs"))?;
        }
    }
    Ok("DC 5, NF 4, CP 2 at M = 1e4 and 1e6; brute force agrees".into())
}

fn three_bus_projections() -> Check {
    let net = Network::canonical_three_bus();
    let dc = build_dcopf(&net);
    let gen = ProjectionSpec::by_roles(&dc, &[Role::Generation]);
    let project = |m: &LpModel| -> Result<VertexSet, String> {
        project_set(&vertices(m, SublevelSpec::Absolute(5000.0), 1e4)?, &gen, 1e-6).map_err(|e| e.to_string())
    };
    let all = [vec![0.0, 100.0, 0.0], vec![50.0, 50.0, 0.0], vec![100.0, 0.0, 0.0]];
    let ends = [all[0].clone(), all[2].clone()];
    let dc_p = project(&dc)?;
    ensure(close(&dc_p.points, &all, 1e-6), || format!("DC projection {:?}", dc_p.points))?;
    let nf_p = project(&build_network_flow(&net))?;
    ensure(close(&nf_p.points, &ends, 1e-6), || format!("NF projection {:?}", nf_p.points))?;
    let cp = vertices(&build_copper_plate(&net), SublevelSpec::Absolute(5000.0), 1e4)?;
    ensure(close(&cp.points, &ends, 1e-6), || format!("CP vertices {:?}", cp.points))?;
    let inside = is_in_convex_hull(&[50.0, 50.0, 0.0], &ends).map_err(|e| e.to_string())?;
    ensure(inside, || "[50, 50, 0] is outside the NF hull".into())?;
    Ok("DC {[0,100,0],[50,50,0],[100,0,0]}, NF = CP {[0,100,0],[100,0,0]}, [50,50,0] in hull".into())
}

fn triangle(steep: bool) -> Result<LpModel, String> {
    let inf = f64::INFINITY;
    let e = |e: aos_core::Error| e.to_string();
    let mut m = LpModel::new(ObjectiveSense::Maximize);
    let x1 = m.add_variable("x1", -inf, inf, Role::Generic).map_err(e)?;
    let x2 = m.add_variable("x2", -inf, inf, Role::Generic).map_err(e)?;
    m.add_constraint("diagonal", [(x1, 1.0), (x2, 1.0)], aos_core::RowSense::Ge, 101.0).map_err(e)?;
    if steep {
        m.add_constraint("near_vertical", [(x1, 99.0), (x2, 1.0)], aos_core::RowSense::Le, 9901.0).map_err(e)?;
    } else {
        m.add_constraint("vertical", [(x1, 1.0)], aos_core::RowSense::Le, 100.0).map_err(e)?;
    }
    m.add_constraint("top", [(x2, 1.0)], aos_core::RowSense::Le, 100.0).map_err(e)?;
    m.set_objective(ObjectiveSense::Maximize, [(x1, 1.0)], 0.0).map_err(e)?;
    Ok(m)
}

fn triangles() -> Check {
    let e = |e: aos_core::Error| e.to_string();
    let flat = apply_box_bounds(&triangle(false)?, 1e4).map_err(e)?.model;
    let cert = is_unique_minimizer(&flat, 100.0, SublevelSpec::Absolute(100.0)).map_err(e)?;
    ensure(!cert.unique && close(&cert.witnesses, &[vec![100.0, 1.0], vec![100.0, 100.0]], 1e-6), || {
        format!("vertical edge: unique = {}, witnesses {:?}", cert.unique, cert.witnesses)
    })?;
    let m = triangle(true)?;
    let z = optimum(&m)?;
    let steep = apply_box_bounds(&m, 1e4).map_err(e)?.model;
    let cert = is_unique_minimizer(&steep, z, SublevelSpec::Absolute(z)).map_err(e)?;
    ensure(cert.unique && close(&cert.witnesses, &[vec![100.0, 1.0]], 1e-6), || {
        format!("steep edge: unique = {}, witnesses {:?}", cert.unique, cert.witnesses)
    })?;
    let vs = vertices(&m, SublevelSpec::RelativeGap(0.01), 1e4)?;
    ensure(vs.contains(&[99.0, 100.0], 1e-6), || format!("1% set {:?} misses (99, 100)", vs.points))?;
    let sec = SecondaryObjective { sense: ObjectiveSense::Maximize, terms: vec![("x2".into(), 1.0)] };
    let ranked = rank_alternatives(&vs, &sec).map_err(e)?;
    let (best, worst) = (ranked.best().map(|b| b.value), ranked.worst().map(|w| w.value));
    ensure(best == Some(100.0) && worst == Some(1.0), || format!("max x2 best {best:?}, worst {worst:?}"))?;
    Ok("vertical edge not unique, steep edge unique at (100, 1); 1% gap reaches (99, 100), max x2 ranks 100 / 1".into())
}

fn random_hierarchy() -> Check {
    let start = Instant::now();
    let mut rng = generate::rng(2024);
    let (mut networks, mut drawn, mut worst) = (0, 0, 0.0f64);
    while networks < 200 {
        let net = generate::random_network(&mut rng, 3..=6);
        drawn += 1;
        ensure(drawn < 20_000, || format!("only {networks} feasible networks in {drawn} draws"))?;
        if optimum(&build_dcopf(&net)).is_err() {
            continue;
        }
        for gap in [0.0, 0.01, 0.1] {
            let check = check_hierarchy(&net, SublevelSpec::RelativeGap(gap), 1e4, &EnumerateOptions::default(), None)
                .map_err(|e| format!("network {networks} gap {gap}: {e}"))?;
            let v = check.report.max_violation();
            ensure(check.report.pass && v <= 1e-6, || format!("network {networks} gap {gap}: violation {v:e}"))?;
            worst = worst.max(v);
        }
        networks += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{networks} networks x 3 gaps, max violation {worst:e}, {elapsed:?}"))
}

fn random_oracles() -> Check {
    let e = |e: aos_core::Error| e.to_string();
    let mut rng = generate::rng(7);
    let (mut lps, mut solved) = (0, 0);
    while solved < 500 {
        let i = lps;
        ensure(lps < 5000, || format!("only {solved} of {lps} LPs feasible"))?;
        let m = generate::random_lp(&mut rng, 1..=5, 1..=10);
        let gap = [0.0, 0.05, 0.5][i % 3];
        lps += 1;
        let r = solve(&to_standard_form(&m).map_err(e)?);
        if !r.is_optimal() {
            let far = match m.objective().sense {
                ObjectiveSense::Minimize => 1e9,
                ObjectiveSense::Maximize => -1e9,
            };
            let every = brute_force_vertices(&m, far, SublevelSpec::Absolute(far)).map_err(e)?;
            ensure(r.status == SolveStatus::Infeasible && every.is_empty(), || format!("LP {i}: {:?}", r.status))?;
            continue;
        }
        solved += 1;
        let spec = SublevelSpec::RelativeGap(gap);
        let fast = enumerate_vertices(&m, r.z_star, spec, 10_000).map_err(e)?;
        let slow = brute_force_vertices(&m, r.z_star, spec).map_err(e)?;
        ensure(fast.complete && close(&fast.points, &slow.points, 1e-6), || {
            format!("LP {i} at gap {gap}: {:?} vs {:?}", fast.points, slow.points)
        })?;
    }
    let mut programs = 0;
    for i in 0..120 {
        let (m, names) = generate::random_binary_program(&mut rng, 2..=10, 1..=5);
        let n = names.len();
        let sense = m.objective().sense;
        let feasible: Vec<(Vec<u8>, f64)> = (0u32..1 << n)
            .map(|mask| (0..n).map(|j| ((mask >> (n - 1 - j)) & 1) as u8).collect::<Vec<u8>>())
            .filter_map(|bits| {
                let x: Vec<f64> = bits.iter().map(|&b| f64::from(b)).collect();
                m.is_feasible(&x, 1e-9).then(|| (bits, m.objective_value(&x)))
            })
            .collect();
        for gap in [0.0, 0.05] {
            let pool = enumerate_binary(&m, &names, SublevelSpec::RelativeGap(gap), 1 << n).map_err(e)?;
            let mut got: Vec<Vec<u8>> = pool.solutions.iter().map(|s| s.assignment.clone()).collect();
            got.sort();
            let mut want: Vec<Vec<u8>> = match feasible.iter().map(|f| f.1).reduce(|a, v| if sense.better(v, a, 0.0) { v } else { a }) {
                None => Vec::new(),
                Some(best) => {
                    let tau = SublevelSpec::RelativeGap(gap).resolve(best, sense).map_err(e)?;
                    feasible.iter().filter(|(_, v)| !sense.better(tau, *v, 1e-9)).map(|(b, _)| b.clone()).collect()
                }
            };
            want.sort();
            ensure(pool.exhausted && got == want, || format!("binary program {i} at gap {gap}: {got:?} vs {want:?}"))?;
        }
        programs += 1;
    }
    Ok(format!("{solved} feasible of {lps} LPs match brute force; {programs} binary programs x 2 gaps match exhaustive scan"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_aos")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn cli_determinism() -> Check {
    let net = fixture("canonical_3bus.json");
    let t1 = fixture("triangle_1.json");
    let t2 = fixture("triangle_2.json");
    let p = |p: &PathBuf| p.to_str().expect("utf-8 path").to_owned();
    let (net, t1, t2) = (p(&net), p(&t1), p(&t2));
    let (min_p1, max_x2) = (p(&fixture("min_p1.json")), p(&fixture("max_x2.json")));
    let mut runs: Vec<Vec<&str>> = Vec::new();
    for model in ["dcopf", "nf", "cp"] {
        runs.push(vec!["solve", &net, "--model", model]);
        runs.push(vec!["enumerate", &net, "--model", model]);
        runs.push(vec!["oracle", &net, "--model", model, "--gap", "0.1"]);
    }
    runs.push(vec!["enumerate", &net, "--project", "generation", "--gap", "0.01"]);
    runs.push(vec!["verify", &net, "--gap", "0.1"]);
    runs.push(vec!["rank", &net, "--secondary", &min_p1, "--project", "generation"]);
    for t in [&t1, &t2] {
        runs.push(vec!["solve", t]);
        runs.push(vec!["enumerate", t, "--gap", "0.01"]);
        runs.push(vec!["oracle", t, "--gap", "0.01"]);
        runs.push(vec!["rank", t, "--secondary", &max_x2, "--gap", "0.01"]);
    }
    for args in &runs {
        let first = run_cli(args)?;
        let second = run_cli(args)?;
        ensure(first.0 == 0, || format!("`aos {}` exited {}", args.join(" "), first.0))?;
        ensure(first == second, || format!("`aos {}` output differs between runs", args.join(" ")))?;
    }
    Ok(format!("{} commands over all fixtures byte-identical across runs", runs.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("three-bus optimum", three_bus_optimum),
        ("three-bus vertex counts", three_bus_counts),
        ("three-bus projected sets", three_bus_projections),
        ("triangle fixtures", triangles),
        ("random network hierarchy", random_hierarchy),
        ("random LP and binary oracles", random_oracles),
        ("command line determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
