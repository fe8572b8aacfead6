//! Acceptance criteria. Runs as a plain binary so every criterion prints
//! one PASS/FAIL line regardless of output capture.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pmcsolve::dp::{exact_treewidth_le, solve_with_containers};
use pmcsolve::harness::{
    brute_pmcs_by_definition, brute_tw_subgraph, random_class_c_graph, random_graph, random_long_hole_free_graph,
    random_p5_free_graph,
};
use pmcsolve::minsep::{enumerate_minimal_separators, enumerate_pmc_sets, full_components, is_pmc, is_pmc_in};
use pmcsolve::pmc_containers::{container_family, is_survival_sequence, pmc_lift, x_rec};
use pmcsolve::recognition::coloring_within;
use pmcsolve::sep_containers::{
    enumerate_family_f1, extend_family_f2, find_anticomplete_vertex, witness_container_for_separator,
    witness_family_f1,
};
use pmcsolve::{solve_fvs, solve_mwis, Error, Graph, VertexSet, WeightMap};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize, max: u64) -> WeightMap {
    WeightMap::new((0..n).map(|_| rng.gen_range(0..=max)).collect()).unwrap()
}

fn ac1_prism_counts() -> Outcome {
    for p in 2..=5 {
        let g = Graph::prism(p);
        let seps = enumerate_minimal_separators(&g, usize::MAX).map_err(|e| e.to_string())?.len();
        let pmcs = enumerate_pmc_sets(&g, usize::MAX).map_err(|e| e.to_string())?.len();
        ensure(seps == (1 << p) - 2, || format!("prism({p}): {seps} separators"))?;
        ensure(pmcs == p << (p - 1), || format!("prism({p}): {pmcs} PMCs"))?;
    }
    Ok("p = 2..5 exact".into())
}

fn agree_on_every_subset(g: &Graph) -> Result<(), String> {
    let by_def = brute_pmcs_by_definition(g).map_err(|e| e.to_string())?;
    for bits in 0u32..1 << g.n() {
        let s = VertexSet::from_bits(bits as u128);
        ensure(is_pmc(g, s) == by_def.binary_search(&s).is_ok(), || format!("{g:?}: disagree on {s}"))?;
    }
    Ok(())
}

fn ac2_characterization() -> Outcome {
    let mut graphs = 0;
    for n in 0..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            agree_on_every_subset(&Graph::from_edges(n, edges).unwrap())?;
            graphs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..240 {
        let n = 6 + i % 2;
        let p = rng.gen_range(0.2..0.8);
        agree_on_every_subset(&random_graph(n, p, rng.gen()).unwrap())?;
        graphs += 1;
    }
    Ok(format!("{graphs} graphs, every subset"))
}

/// Random class-C graphs for the separator sweep, plus prisms whose
/// separators are mostly non-primitive.
fn separator_sweep_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut out: Vec<Graph> = (0..300)
        .map(|i| random_class_c_graph(4 + i % 9, rng.gen_range(0.25..0.7), rng.gen()).unwrap())
        .collect();
    for p in 3..=6 {
        out.extend(std::iter::repeat_n(Graph::prism(p), 5));
    }
    out
}

fn ac3_and_ac4() -> (Outcome, Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let (mut containers, mut outside, mut sides) = (0usize, 0usize, 0usize);
    let mut ac3: Result<(), String> = Ok(());
    let mut ac4: Result<(), String> = Ok(());
    for g in separator_sweep_graphs() {
        let w = random_weights(&mut rng, g.n(), 100);
        let seps = enumerate_minimal_separators(&g, usize::MAX).unwrap();
        for k in [1, 2] {
            let f = brute_tw_subgraph(&g, &w, k).unwrap();
            let coloring = coloring_within(&g, f);
            for &s in &seps {
                let full = full_components(&g, s).full_components;
                for &l in &full {
                    for &r in full.iter().filter(|&&r| r != l) {
                        match witness_container_for_separator(&g, s, l, r, &coloring, f) {
                            Ok(a) => {
                                containers += 1;
                                if ac3.is_ok() && !(s.is_subset(a) && a & f == s & f) {
                                    ac3 = Err(format!("{g:?} k={k} S={s} A={a} F={f}"));
                                }
                            }
                            Err(Error::PrimitiveSeparator { .. }) => {}
                            Err(e) if ac3.is_ok() => ac3 = Err(format!("{g:?} S={s}: {e}")),
                            Err(_) => {}
                        }
                    }
                }
            }
            let f2 = extend_family_f2(&g, &witness_family_f1(&g, &seps, &coloring, f).unwrap());
            for &s in seps.iter().filter(|s| f2.binary_search(s).is_err()) {
                outside += 1;
                for side in full_components(&g, s).full_components {
                    sides += 1;
                    if ac4.is_ok() && find_anticomplete_vertex(&g, s, side, f).is_none() {
                        ac4 = Err(format!("{g:?} k={k} S={s} side={side} F={f}"));
                    }
                }
            }
        }
    }
    (
        ac3.map(|_| format!("{containers} containers checked")),
        ac4.map(|_| format!("{outside} separators outside F2, {sides} sides checked")),
    )
}

fn ac5_lifting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut trials = 0;
    while trials < 1500 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(n, rng.gen_range(0.2..0.8), rng.gen()).unwrap();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        order.truncate(rng.gen_range(0..=n));
        let removed: VertexSet = order.iter().collect();
        let alive = g.vertices() - removed;
        let end_pmcs: Vec<VertexSet> = (0u32..1 << n)
            .map(|b| VertexSet::from_bits(b as u128))
            .filter(|&s| s.is_subset(alive) && is_pmc_in(&g, alive, s))
            .collect();
        for end in end_pmcs {
            trials += 1;
            let omega = pmc_lift(&g, &order, end).map_err(|e| format!("{g:?} {order:?} {end}: {e}"))?;
            ensure(is_pmc(&g, omega), || format!("{g:?}: lift {omega} is not a PMC"))?;
            ensure(is_survival_sequence(&g, &order, omega), || format!("{g:?} {order:?}: not surviving"))?;
            ensure(omega - removed == end, || format!("{g:?}: {omega} does not end in {end}"))?;
            // exactly one of the two candidates is a PMC at every step
            let mut cur_alive = alive;
            let mut cur = end;
            for &x in order.iter().rev() {
                cur_alive.insert(x);
                let keep = is_pmc_in(&g, cur_alive, cur);
                let grow = is_pmc_in(&g, cur_alive, cur.with(x));
                ensure(keep != grow, || format!("{g:?} {order:?} {end}: ambiguous at {x}"))?;
                if grow {
                    cur.insert(x);
                }
            }
        }
    }
    Ok(format!("{trials} lifts"))
}

fn ac6_x_rec() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut graphs, mut hits) = (0, 0);
    for i in 0..120 {
        let g = random_class_c_graph(3 + i % 5, rng.gen_range(0.3..0.7), rng.gen()).unwrap();
        let k = 1 + i % 2;
        let f2 = extend_family_f2(&g, &enumerate_family_f1(&g, k, usize::MAX).unwrap());
        let mut y: Vec<VertexSet> = f2.iter().flat_map(|&s| g.components(s)).collect();
        y.sort();
        y.dedup();
        let rec = x_rec(&g, &y, usize::MAX).map_err(|e| e.to_string())?;
        for omega in enumerate_pmc_sets(&g, usize::MAX).unwrap() {
            if g.components(omega).iter().all(|c| y.binary_search(c).is_ok()) {
                hits += 1;
                ensure(rec.binary_search(&omega).is_ok(), || format!("{g:?} k={k}: missing {omega}"))?;
            }
        }
        graphs += 1;
    }
    Ok(format!("{graphs} graphs, {hits} PMCs recovered"))
}

fn ac7_dp() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut runs = 0;
    for i in 0..500 {
        let n = 1 + i % 10;
        let g = random_graph(n, rng.gen_range(0.15..0.75), rng.gen()).unwrap();
        let w = random_weights(&mut rng, n, 100);
        let family = enumerate_pmc_sets(&g, usize::MAX).unwrap();
        for k in 1..=3 {
            let got = solve_with_containers(&g, &w, &family, k).map_err(|e| e.to_string())?;
            let want = brute_tw_subgraph(&g, &w, k).unwrap();
            ensure(got == want, || format!("{g:?} {w:?} k={k}: {got} vs {want}"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} solver runs on 500 graphs"))
}

fn is_forest(g: &Graph, s: VertexSet) -> bool {
    // union-find over edges inside s
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn root(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for (u, v) in g.edges() {
        if s.contains(u) && s.contains(v) {
            let (a, b) = (root(&mut parent, u), root(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}

fn ac8_end_to_end() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..300 {
        let n = 1 + i % 12;
        let g = random_long_hole_free_graph(n, rng.gen_range(0.2..0.7), rng.gen()).unwrap();
        let w = random_weights(&mut rng, n, 100);
        let got = solve_mwis(&g, &w).map_err(|e| e.to_string())?;
        let best = (0u32..1 << n)
            .map(|b| VertexSet::from_bits(b as u128))
            .filter(|&s| g.is_independent(s))
            .map(|s| w.total(s))
            .max()
            .unwrap();
        ensure(g.is_independent(got) && w.total(got) == best, || format!("{g:?} {w:?}: mwis {got}"))?;
    }
    for i in 0..300 {
        let n = 1 + i % 12;
        let g = random_p5_free_graph(n, rng.gen_range(0.2..0.7), rng.gen()).unwrap();
        let fvs = solve_fvs(&g).map_err(|e| e.to_string())?;
        let forest = (0u32..1 << n)
            .map(|b| VertexSet::from_bits(b as u128))
            .filter(|&s| is_forest(&g, s))
            .map(|s| s.len())
            .max()
            .unwrap();
        ensure(is_forest(&g, g.vertices() - fvs) && fvs.len() == n - forest, || {
            format!("{g:?}: fvs {fvs}, largest forest {forest}")
        })?;
    }
    Ok("300 MWIS + 300 FVS instances".into())
}

fn ac9_container_promise() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut pairs = 0usize;
    for i in 0..60 {
        let n = 1 + i % 6;
        let g = random_class_c_graph(n, rng.gen_range(0.3..0.7), rng.gen()).unwrap();
        let pmcs = enumerate_pmc_sets(&g, usize::MAX).unwrap();
        for k in [1, 2] {
            let family = container_family(&g, k, usize::MAX).map_err(|e| e.to_string())?;
            for bits in 0u32..1 << n {
                let f = VertexSet::from_bits(bits as u128);
                if !exact_treewidth_le(&g.induced(f).0, k - 1).unwrap() {
                    continue;
                }
                for &omega in &pmcs {
                    pairs += 1;
                    ensure(family.iter().any(|&a| omega.is_subset(a) && a & f == omega & f), || {
                        format!("{g:?} k={k}: no container for {omega} against F = {f}")
                    })?;
                }
            }
        }
    }
    Ok(format!("{pairs} (PMC, F) pairs"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |name: &str, limit: Option<Duration>, started: Instant, outcome: Outcome| {
        let elapsed = started.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.1?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("{name} PASS ({detail}; {elapsed:.1?})"),
            Err(detail) => {
                failed += 1;
                println!("{name} FAIL ({detail}; {elapsed:.1?})");
            }
        }
    };
    let mins = |m: u64| Some(Duration::from_secs(60 * m));

    let t = Instant::now();
    report("AC1 prism counts", Some(Duration::from_secs(30)), t, ac1_prism_counts());
    let t = Instant::now();
    report("AC2 PMC characterization", mins(5), t, ac2_characterization());
    let t = Instant::now();
    let (ac3, ac4) = ac3_and_ac4();
    report("AC3 separator containers", mins(10), t, ac3);
    report("AC4 anticomplete pair outside F2", None, t, ac4);
    let t = Instant::now();
    report("AC5 PMC lifting", None, t, ac5_lifting());
    let t = Instant::now();
    report("AC6 x_rec completeness", None, t, ac6_x_rec());
    let t = Instant::now();
    report("AC7 DP vs brute force", mins(15), t, ac7_dp());
    let t = Instant::now();
    report("AC8 MWIS and FVS end to end", None, t, ac8_end_to_end());
    let t = Instant::now();
    report("AC9 container promise", mins(10), t, ac9_container_promise());

    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
