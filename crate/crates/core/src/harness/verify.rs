//! Oracle sweeps over a single instance, as run by `pmcsolve verify`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dp::solve_with_containers;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::harness::{brute_tw_subgraph, Instance};
use crate::minsep::{enumerate_minimal_separators, enumerate_pmc_sets, full_components, is_pmc};
use crate::pmc_containers::{impure_pmc_container, is_survival_sequence, pmc_lift, x_rec};
use crate::recognition::{coloring_within, is_in_class_c};
use crate::sep_containers::{
    enumerate_family_f1, extend_family_f2, find_anticomplete_vertex, witness_container_for_separator,
    witness_family_f1,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    SepContainers,
    PmcContainers,
    Dp,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub budget: usize,
    pub seed: u64,
    pub max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: 10_000_000,
            seed: 0,
            max_n: 12,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

pub fn verify(inst: &Instance<u64>, suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let g = &inst.graph;
    if g.n() > opts.max_n {
        return Err(Error::TooLarge {
            n: g.n(),
            max: opts.max_n,
        });
    }
    let mut report = VerifyReport::default();
    match suite {
        Suite::SepContainers => sep_suite(inst, opts, &mut report)?,
        Suite::PmcContainers => pmc_suite(inst, opts, &mut report)?,
        Suite::Dp => dp_suite(inst, &mut report)?,
    }
    Ok(report)
}

fn require_class_c(g: &Graph) -> Result<()> {
    if is_in_class_c(g) {
        Ok(())
    } else {
        Err(Error::NotInClassC)
    }
}

fn sep_suite(inst: &Instance<u64>, opts: &VerifyOptions, report: &mut VerifyReport) -> Result<()> {
    let g = &inst.graph;
    require_class_c(g)?;
    let seps = enumerate_minimal_separators(g, opts.budget)?;
    for k in [1, 2] {
        let f = brute_tw_subgraph(g, &inst.weights, k)?;
        let coloring = coloring_within(g, f);
        for &s in &seps {
            let full = full_components(g, s).full_components;
            for &l in &full {
                for &r in full.iter().filter(|&&r| r != l) {
                    match witness_container_for_separator(g, s, l, r, &coloring, f) {
                        Ok(a) => report.check(s.is_subset(a) && a & f == s & f, || {
                            format!("k={k}: container {a} for separator {s} leaks into F = {f}")
                        }),
                        Err(Error::PrimitiveSeparator { .. }) => {}
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        let f2 = extend_family_f2(g, &witness_family_f1(g, &seps, &coloring, f)?);
        for &s in seps.iter().filter(|s| f2.binary_search(s).is_err()) {
            let full = full_components(g, s).full_components;
            for &side in &full {
                report.check(find_anticomplete_vertex(g, s, side, f).is_some(), || {
                    format!("k={k}: separator {s} outside F2 has no vertex anticomplete beyond {side}")
                });
            }
        }
    }
    Ok(())
}

fn pmc_suite(inst: &Instance<u64>, opts: &VerifyOptions, report: &mut VerifyReport) -> Result<()> {
    let g = &inst.graph;
    require_class_c(g)?;
    let pmcs = enumerate_pmc_sets(g, opts.budget)?;
    let seps = enumerate_minimal_separators(g, opts.budget)?;
    for k in [1, 2] {
        let f = brute_tw_subgraph(g, &inst.weights, k)?;
        let coloring = coloring_within(g, f);
        let f2 = extend_family_f2(g, &witness_family_f1(g, &seps, &coloring, f)?);
        for &omega in &pmcs {
            match impure_pmc_container(g, omega, &f2, f, &coloring) {
                Ok(a) => report.check(omega.is_subset(a) && a & f == omega & f, || {
                    format!("k={k}: container {a} for PMC {omega} leaks into F = {f}")
                }),
                Err(Error::PurePmc) => {}
                Err(e) => return Err(e),
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..20 {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        for &omega in &pmcs {
            for len in 0..=order.len() {
                let prefix = &order[..len];
                if !is_survival_sequence(g, prefix, omega) {
                    break;
                }
                let removed: VertexSet = prefix.iter().collect();
                let lifted = pmc_lift(g, prefix, omega - removed);
                report.check(lifted == Ok(omega), || {
                    format!("lifting {} along {prefix:?} gave {lifted:?}, expected {omega}", omega - removed)
                });
            }
        }
    }

    if let Ok(f1) = enumerate_family_f1(g, 1, opts.budget) {
        let f2 = extend_family_f2(g, &f1);
        let mut y: Vec<VertexSet> = f2.iter().flat_map(|&s| g.components(s)).collect();
        y.sort();
        y.dedup();
        let rec = x_rec(g, &y, opts.budget)?;
        for &omega in &pmcs {
            if g.components(omega).iter().all(|c| y.binary_search(c).is_ok()) {
                report.check(rec.binary_search(&omega).is_ok(), || format!("x_rec misses pure PMC {omega}"));
            }
        }
        report.check(rec.iter().all(|&o| is_pmc(g, o)), || "x_rec produced a non-PMC".into());
    }
    Ok(())
}

fn dp_suite(inst: &Instance<u64>, report: &mut VerifyReport) -> Result<()> {
    let g = &inst.graph;
    let family = enumerate_pmc_sets(g, usize::MAX)?;
    for k in 1..=3 {
        let got = solve_with_containers(g, &inst.weights, &family, k)?;
        let want = brute_tw_subgraph(g, &inst.weights, k)?;
        report.check(got == want, || format!("k={k}: solver returned {got}, oracle {want}"));
    }
    Ok(())
}
