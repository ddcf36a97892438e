//! Cross-checking suites: exact oracles against constructive pipelines,
//! the `t(n)` table against its closed forms, and the tree solvers against
//! brute force.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{
    chain_point, closed_form_preimage, count_partitions, erdos_lehner_estimate, recurrence_exceptions, TTable,
    DEFAULT_CAPACITY,
};
use crate::bounds::{
    connected_cut_bound, ordered_vertex_partitions_with, packing_partitions_with, path_cut_partitions_with,
};
use crate::error::{Error, Result};
use crate::exact::{cmc, edge_partition_profile, gyori_lovasz, vertex_partition_profile, ExactConfig};
use crate::families::{binary_clique, binary_clique_edge_count, random_connected, random_tree, FamilySpec};
use crate::graph::{is_biconnected, Graph, RootedTree};
use crate::par::{self, Parallelism};
use crate::partition::SizeProfile;
use crate::splits::{nested_split_sequence, recursive_k_partitions, tree_exact_p2, tree_lower_bound_partitions};

pub const SCHEMA: &str = "partctl/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Inequalities,
    TTable,
    Trees,
    ConstrUpper,
    ErdosLehner,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::Inequalities, Suite::TTable, Suite::Trees, Suite::ConstrUpper, Suite::ErdosLehner];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Inequalities => "inequalities",
            Suite::TTable => "t-table",
            Suite::Trees => "trees",
            Suite::ConstrUpper => "constr-upper",
            Suite::ErdosLehner => "erdos-lehner",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Number of random instances; `None` uses the suite default.
    pub count: Option<usize>,
    pub exact: ExactConfig,
    pub parallelism: Parallelism,
}

/// One comparison `lhs relation rhs`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: f64,
    pub relation: &'static str,
    pub rhs: f64,
    pub pass: bool,
}

impl Check {
    fn ge(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Check { name: name.into(), lhs, relation: ">=", rhs, pass: lhs >= rhs }
    }

    fn le(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Check { name: name.into(), lhs, relation: "<=", rhs, pass: lhs <= rhs }
    }

    fn eq(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Check { name: name.into(), lhs, relation: "==", rhs, pass: lhs == rhs }
    }

    /// A yes/no property, recorded as `1 == 1`.
    fn holds(name: impl Into<String>, ok: bool) -> Self {
        Check::eq(name, ok as u8 as f64, 1.0)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphRecord {
    /// Reproducible description of the instance.
    pub spec: String,
    pub n: usize,
    pub m: usize,
    pub d: f64,
    pub exact: Vec<(String, f64)>,
    pub constructive: Vec<(String, f64)>,
    pub checks: Vec<Check>,
    pub runtime_ms: f64,
    #[serde(skip)]
    sort_key: Vec<u64>,
}

impl GraphRecord {
    fn new(spec: impl Into<String>, g: Option<&Graph>, sort_key: Vec<u64>) -> Self {
        GraphRecord {
            spec: spec.into(),
            n: g.map_or(0, Graph::n),
            m: g.map_or(0, Graph::m),
            d: g.map_or(0.0, Graph::average_degree),
            exact: Vec::new(),
            constructive: Vec::new(),
            checks: Vec::new(),
            runtime_ms: 0.0,
            sort_key,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub suite: Suite,
    pub seed: u64,
    pub records: Vec<GraphRecord>,
    pub checks: usize,
    pub failures: usize,
}

impl VerifyReport {
    fn new(suite: Suite, seed: u64, mut records: Vec<GraphRecord>) -> Self {
        records.sort_by(|a, b| a.sort_key.cmp(&b.sort_key));
        let checks = records.iter().map(|r| r.checks.len()).sum();
        let failures = records.iter().flat_map(|r| &r.checks).filter(|c| !c.pass).count();
        VerifyReport { schema: SCHEMA, suite, seed, records, checks, failures }
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    /// Plain-text table, one line per record plus one per failed check.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (seed {})", self.suite.name(), self.seed);
        let _ = writeln!(out, "{:<44} {:>5} {:>5} {:>7} {:>7} {:>9}", "instance", "n", "m", "checks", "status", "ms");
        for r in &self.records {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<44} {:>5} {:>5} {:>7} {:>7} {:>9.1}",
                r.spec,
                r.n,
                r.m,
                r.checks.len(),
                status,
                r.runtime_ms
            );
            for c in r.checks.iter().filter(|c| !c.pass) {
                let _ = writeln!(out, "    {}: {} {} {} failed", c.name, c.lhs, c.relation, c.rhs);
            }
        }
        let _ = writeln!(out, "{} checks, {} failed", self.checks, self.failures);
        out
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let records = match suite {
        Suite::Inequalities => inequalities(opts)?,
        Suite::TTable => vec![t_table()],
        Suite::Trees => trees(opts)?,
        Suite::ConstrUpper => constr_upper(opts)?,
        Suite::ErdosLehner => vec![erdos_lehner()],
    };
    Ok(VerifyReport::new(suite, opts.seed, records))
}

fn timed(mut rec: GraphRecord, f: impl FnOnce(&mut GraphRecord) -> Result<()>) -> Result<GraphRecord> {
    let start = Instant::now();
    f(&mut rec)?;
    rec.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(rec)
}

/// `(n, m, seed)` triples for random connected graphs with `n ≤ max_n`
/// over all densities.
pub fn random_instances(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<(usize, usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let m = rng.gen_range(n - 1..=n * (n - 1) / 2);
            (n, m, rng.gen())
        })
        .collect()
}

fn profile_subset(emitted: impl IntoIterator<Item = Vec<usize>>, exact: &SizeProfile) -> bool {
    emitted.into_iter().collect::<SizeProfile>().is_subset(exact)
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn inequalities(opts: &VerifyOptions) -> Result<Vec<GraphRecord>> {
    let inst = random_instances(opts.seed, opts.count.unwrap_or(100), 3, 10);
    let exact = opts.exact.clone().with_parallelism(Parallelism::Sequential);
    let recs = par::map(opts.parallelism, inst, |(n, m, seed)| {
        let g = random_connected(n, m, seed)?;
        let spec = FamilySpec::RandomConnected { n, m, seed };
        let rec = GraphRecord::new(format!("{spec:?}"), Some(&g), vec![n as u64, m as u64, seed]);
        timed(rec, |rec| inequality_checks(&g, &exact, rec))
    });
    recs.into_iter().collect()
}

/// All exact-versus-constructive comparisons on one small graph.
pub fn inequality_checks(g: &Graph, cfg: &ExactConfig, rec: &mut GraphRecord) -> Result<()> {
    let wide = cfg.clone().with_max_elements(64);
    let p2 = edge_partition_profile(g, 2, &wide)?;
    let cmc2 = cmc(g, 2, cfg)?;
    rec.exact.push(("P2".into(), p2.value() as f64));
    rec.exact.push(("CMC2".into(), cmc2.cut_size as f64));
    rec.checks.push(Check::holds("exact witnesses validate", p2.witnesses_valid(g) && cmc2.is_valid(g)));
    rec.checks.push(Check::ge("P2 >= ceil(CMC/2)", p2.value() as f64, cmc2.cut_size.div_ceil(2) as f64));

    let (pc, report) = path_cut_partitions_with(g, Parallelism::Sequential)?;
    rec.constructive.push(("pathcut".into(), report.distinct_pairs as f64));
    rec.checks.push(Check::holds("pathcut valid", pc.iter().all(|p| p.is_valid(g))));
    rec.checks.push(Check::holds("pathcut within P2", profile_subset(pc.iter().map(|p| p.sizes()), &p2.profile)));

    match packing_partitions_with(g, 2, Parallelism::Sequential) {
        Ok((pk, report)) => {
            rec.constructive.push(("packing".into(), report.emitted as f64));
            rec.checks.push(Check::holds("packing valid", pk.iter().all(|p| p.is_valid(g))));
            rec.checks
                .push(Check::holds("packing within P2", profile_subset(pk.iter().map(|p| p.sizes()), &p2.profile)));
        }
        Err(Error::PackingInfeasible { .. }) => {}
        Err(e) => return Err(e),
    }

    if g.m() >= 2 {
        let rk = recursive_k_partitions(g, 2)?;
        rec.checks.push(Check::holds("splits valid", rk.iter().all(|p| p.is_valid(g))));
        rec.checks.push(Check::holds("splits within P2", profile_subset(rk.iter().map(|p| p.sizes()), &p2.profile)));
    }

    let cut2 = connected_cut_bound(g, 2)?;
    rec.constructive.push(("cut2".into(), cut2.cut_size as f64));
    rec.checks.push(Check::holds("cut2 valid", cut2.is_valid(g)));
    rec.checks.push(Check::le("cut2 <= CMC2", cut2.cut_size as f64, cmc2.cut_size as f64));
    if g.n() >= 3 {
        let cmc3 = cmc(g, 3, cfg)?;
        let cut3 = connected_cut_bound(g, 3)?;
        rec.exact.push(("CMC3".into(), cmc3.cut_size as f64));
        rec.constructive.push(("cut3".into(), cut3.cut_size as f64));
        rec.checks.push(Check::holds("cut3 valid", cut3.is_valid(g)));
        rec.checks.push(Check::le("cut3 <= CMC3", cut3.cut_size as f64, cmc3.cut_size as f64));
    }

    for k in 2..=3usize {
        if g.n() < k {
            continue;
        }
        let pi = vertex_partition_profile(g, k, cfg)?;
        rec.exact.push((format!("pi{k}"), pi.value() as f64));
        match ordered_vertex_partitions_with(g, k, Parallelism::Sequential) {
            Ok((ov, report)) => {
                rec.constructive.push((format!("ordered{k}"), report.succeeded as f64));
                rec.checks.push(Check::holds(
                    format!("ordered{k} valid"),
                    ov.iter().all(|p| p.is_valid(g)) && report.distinct,
                ));
                rec.checks.push(Check::le(
                    format!("ceil(ordered{k}/k!) <= pi{k}"),
                    report.succeeded.div_ceil(factorial(k)) as f64,
                    pi.value() as f64,
                ));
                rec.checks.push(Check::holds(
                    format!("ordered{k} within pi{k}"),
                    profile_subset(ov.iter().map(|p| p.sizes()), &pi.profile),
                ));
            }
            Err(Error::TooSmall { .. }) => {}
            Err(e) => return Err(e),
        }
    }

    if is_biconnected(g) {
        let ok = (1..g.n()).all(|a| {
            gyori_lovasz(g, &[a, g.n() - a], cfg)
                .is_ok_and(|p| p.is_some_and(|p| p.is_valid(g) && p.sizes() == [a, g.n() - a]))
        });
        rec.checks.push(Check::holds("st-numbering partitions exist and validate", ok));
    }
    Ok(())
}

/// Aggregated `t(n)` checks up to the default capacity.
pub fn t_table() -> GraphRecord {
    let start = Instant::now();
    let mut rec = GraphRecord::new(format!("t-table n<={DEFAULT_CAPACITY}"), None, vec![0]);
    let t = TTable::new(DEFAULT_CAPACITY);
    let v = t.values();
    let cap = t.capacity();
    let not_monotone = v.windows(2).filter(|w| w[0] > w[1]).count();
    rec.checks.push(Check::eq("monotonicity violations", not_monotone as f64, 0.0));
    let exceptions = recurrence_exceptions(&t);
    let unexpected = exceptions.iter().filter(|&&n| n != 11 && n != 23).count();
    rec.checks.push(Check::eq("t(n) = 3 + t(ceil((n-1)/3)) violations other than n = 11, 23", unexpected as f64, 0.0));
    let iv = t.intervals();
    let mut compared = 0;
    let mut mismatched = 0;
    for (h, lo, hi) in iv.complete_rows().filter(|r| r.0 >= 8) {
        compared += 1;
        if closed_form_preimage(h) != Some((lo, hi)) {
            mismatched += 1;
        }
    }
    rec.checks.push(Check::ge("closed-form intervals compared", compared as f64, 1.0));
    rec.checks.push(Check::eq("closed-form interval mismatches", mismatched as f64, 0.0));
    let mut anchors = 0;
    for ell in 0.. {
        let a = chain_point(ell) as usize;
        if a > cap {
            break;
        }
        anchors += 1;
        rec.checks.push(Check::eq(format!("t({a}) = t(10) + 3*{ell}"), t.t(a) as f64, (t.t(10) + 3 * ell) as f64));
    }
    rec.exact.push(("anchors".into(), anchors as f64));
    rec.exact.push(("empirical_C".into(), t.empirical_log_constant()));
    rec.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    rec
}

fn trees(opts: &VerifyOptions) -> Result<Vec<GraphRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let count = opts.count.unwrap_or(200);
    let small: Vec<(usize, u64)> = (0..count).map(|_| (rng.gen_range(2..=11), rng.gen())).collect();
    let large: Vec<(usize, u64)> = (0..count.max(500)).map(|_| (rng.gen_range(1..=500), rng.gen())).collect();
    let ttable = TTable::new(1000);
    let exact = opts.exact.clone().with_parallelism(Parallelism::Sequential);

    let mut out: Vec<Result<GraphRecord>> = par::map(opts.parallelism, small, |(n, seed)| {
        let g = random_tree(n, seed);
        let rec = GraphRecord::new(format!("random_tree n={n} seed={seed}"), Some(&g), vec![0, n as u64, seed]);
        timed(rec, |rec| {
            let fast = tree_exact_p2(&g)?;
            let slow = edge_partition_profile(&g, 2, &exact)?;
            rec.exact.push(("P2".into(), slow.value() as f64));
            rec.checks.push(Check::holds("tree P2 equals brute force", fast == slow.profile));
            Ok(())
        })
    });
    out.extend(par::map(opts.parallelism, large, |(n, seed)| {
        let g = random_tree(n, seed);
        let rec = GraphRecord::new(format!("random_tree n={n} seed={seed}"), Some(&g), vec![1, n as u64, seed]);
        timed(rec, |rec| split_checks(&g, &ttable, rec))
    }));
    out.into_iter().collect()
}

/// Split-sequence invariants from the root 0 and the lower-bound family.
pub fn split_checks(g: &Graph, ttable: &TTable, rec: &mut GraphRecord) -> Result<()> {
    let n = g.n();
    let seq = nested_split_sequence(&RootedTree::new(g.clone(), 0)?);
    let verdict = seq.check(g, 0, ttable);
    let name = match &verdict {
        Ok(()) => "split invariants".to_string(),
        Err(e) => format!("split invariants: {e}"),
    };
    rec.checks.push(Check::holds(name, verdict.is_ok()));
    rec.checks.push(Check::ge("split length >= t(n)+1", seq.len() as f64, (ttable.t(n) + 1) as f64));
    if n >= 3 {
        let (parts, _) = tree_lower_bound_partitions(g)?;
        let sizes: SizeProfile = parts.iter().map(|p| p.sizes()).collect();
        rec.constructive.push(("lower_bound".into(), sizes.len() as f64));
        rec.checks.push(Check::holds("lower-bound partitions valid", parts.iter().all(|p| p.is_valid(g))));
        rec.checks.push(Check::ge(
            "distinct lower-bound profiles >= t(n)-2",
            sizes.len() as f64,
            ttable.t(n) as f64 - 2.0,
        ));
    }
    Ok(())
}

/// `2^{k²} · Σ_{i<k} 2^{i(2h₂+1)} h₁^{k−1−i}`.
pub fn construction_upper_bound(h1: u32, h2: u32, k: u32) -> f64 {
    let s: f64 = (0..k).map(|i| 2f64.powi((i * (2 * h2 + 1)) as i32) * (h1 as f64).powi((k - 1 - i) as i32)).sum();
    2f64.powi((k * k) as i32) * s
}

fn constr_upper(opts: &VerifyOptions) -> Result<Vec<GraphRecord>> {
    let cfg = opts.exact.clone().with_max_elements(64);
    [(1, 1), (2, 1), (1, 2)]
        .into_iter()
        .map(|(h1, h2)| {
            let g = binary_clique(h1, h2)?;
            let rec = GraphRecord::new(format!("binary_clique h1={h1} h2={h2}"), Some(&g), vec![h1 as u64, h2 as u64]);
            timed(rec, |rec| {
                rec.checks.push(Check::eq("m matches formula", g.m() as f64, binary_clique_edge_count(h1, h2) as f64));
                let p = edge_partition_profile(&g, 2, &cfg)?;
                rec.exact.push(("P2".into(), p.value() as f64));
                rec.checks.push(Check::le("P2 <= upper bound", p.value() as f64, construction_upper_bound(h1, h2, 2)));
                Ok(())
            })
        })
        .collect()
}

/// `|π(n,k)·k! / C(n−1,k−1) − 1|` for the two reference points.
pub fn erdos_lehner() -> GraphRecord {
    let start = Instant::now();
    let mut rec = GraphRecord::new("erdos-lehner", None, vec![0]);
    for (n, k) in [(100usize, 2usize), (100, 3)] {
        let count = count_partitions(n, k, false);
        let r = count.to_f64().unwrap_or(f64::INFINITY) / erdos_lehner_estimate(n as u64, k as u64);
        rec.exact.push((format!("pi({n},{k})"), count.to_f64().unwrap_or(f64::INFINITY)));
        rec.checks.push(Check::le(format!("|ratio({n},{k}) - 1|"), (r - 1.0).abs(), 0.1));
    }
    rec.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    rec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn upper_bound_formula() {
        // k = 2: 16 (h1 + 2^{2 h2 + 1})
        assert_eq!(construction_upper_bound(1, 1, 2), 16.0 * 9.0);
        assert_eq!(construction_upper_bound(2, 1, 2), 16.0 * 10.0);
        assert_eq!(construction_upper_bound(1, 2, 2), 16.0 * 33.0);
    }

    #[test]
    fn small_inequality_run() {
        let opts = VerifyOptions { count: Some(5), ..VerifyOptions::default() };
        let r = run_suite(Suite::Inequalities, &opts).unwrap();
        assert_eq!(r.records.len(), 5);
        assert!(r.ok(), "{}", r.table());
    }

    #[test]
    fn erdos_lehner_passes() {
        assert!(erdos_lehner().passed());
    }
}
