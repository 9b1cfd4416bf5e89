//! The full verification suite: one runner per headline claim, shared by
//! the CLI `verify` command and the acceptance test.

use std::path::PathBuf;
use std::time::Instant;

use num::{BigInt, BigRational};
use rand::Rng;
use rand::SeedableRng;

use crate::affine::{graded_character, trace_anomaly, LevelWeight};
use crate::config::RunConfig;
use crate::embed::{
    branch_affine, branch_finite, duality_check, is_conformal, resolve_embedding,
    Embedding, EmbeddingFile,
};
use crate::error::Result;
use crate::heisenberg::{run_scenario, strange_duality_map, FiniteAbelian, Scenario};
use crate::rootsys::{RootSystem, Weight};
use crate::verlinde::{
    factorization_check, fusion_dim, s_matrix, strange_duality_dims,
};

/// Outcome of one verification criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!(
            "{verdict} {:<22} {:<46} ({:.2}s) {}",
            self.id, self.title, self.seconds, self.detail
        )
    }
}

/// Suite options: a substring filter on criterion ids and an optional
/// embedding file replacing the built-in E8 ⊃ G2+F4 data.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub filter: Option<String>,
    pub embedding_file: Option<PathBuf>,
}

const BUDGET: usize = 2_000_000;

/// The conformal subalgebras of E8 under scrutiny, by embedding spec.
pub const CONFORMAL_SPECS: [&str; 6] =
    ["E8:D8", "E8:A8", "E8:A4+A4", "E8:A2+E6", "E8:A1+E7", "E8:G2+F4"];

/// The maximal-rank specs with tabulated branching data.
pub const TABLE_SPECS: [&str; 5] =
    ["E8:D8", "E8:A8", "E8:A4+A4", "E8:A2+E6", "E8:A1+E7"];

fn fund(rank: usize, i: usize) -> Vec<i64> {
    Weight::fundamental(rank, i).0
}

/// Expected branching classes of the basic E8 module per subalgebra:
/// (spec, list of sub-weight labels, one per shift-0/1 entry, the zero
/// weight first).
fn expected_branchings() -> Vec<(&'static str, Vec<Vec<i64>>)> {
    let pair = |a: Vec<i64>, b: Vec<i64>| -> Vec<i64> {
        let mut v = a;
        v.extend(b);
        v
    };
    vec![
        ("E8:D8", vec![vec![0; 8], fund(8, 7)]),
        ("E8:A8", vec![vec![0; 8], fund(8, 3), fund(8, 6)]),
        (
            "E8:A4+A4",
            vec![
                vec![0; 8],
                pair(fund(4, 1), fund(4, 2)),
                pair(fund(4, 2), fund(4, 4)),
                pair(fund(4, 3), fund(4, 1)),
                pair(fund(4, 4), fund(4, 3)),
            ],
        ),
        (
            "E8:A2+E6",
            vec![vec![0; 8], pair(fund(2, 1), fund(6, 1)), pair(fund(2, 2), fund(6, 6))],
        ),
        ("E8:A1+E7", vec![vec![0; 8], pair(fund(1, 1), fund(7, 7))]),
    ]
}

fn resolve_with_options(spec: &str, opts: &SuiteOptions) -> Result<Embedding> {
    if spec == "E8:G2+F4" {
        if let Some(path) = &opts.embedding_file {
            return EmbeddingFile::load(path);
        }
    }
    resolve_embedding(spec)
}

fn criterion_conformal(opts: &SuiteOptions) -> Result<String> {
    let eight = BigRational::from_integer(BigInt::from(8));
    let mut specs: Vec<&str> = CONFORMAL_SPECS.to_vec();
    specs.push("E8:D4+D4");
    for spec in &specs {
        let e = resolve_with_options(spec, opts)?;
        let cert = is_conformal(&e, 1)?;
        if !cert.conformal || cert.ambient_anomaly != eight || cert.sub_anomaly != eight {
            return Ok(format!("FAIL {spec}: anomalies not both 8 at k=1"));
        }
        let cert2 = is_conformal(&e, 2)?;
        if cert2.conformal {
            return Ok(format!("FAIL {spec}: still conformal at k=2"));
        }
    }
    Ok(format!("{} embeddings conformal at k=1 only", specs.len()))
}

fn criterion_table_branchings(opts: &SuiteOptions) -> Result<String> {
    let mut count = 0;
    for (spec, classes) in expected_branchings() {
        let e = resolve_with_options(spec, opts)?;
        let vac = LevelWeight::vacuum(&e.ambient, vec![1])?;
        let result = branch_affine(&e, &vac, 3, BUDGET)?;
        let mut got: Vec<(Vec<i64>, u64, i64)> = result
            .entries
            .iter()
            .map(|en| (en.weight.weight.0.clone(), en.shift, en.mult))
            .collect();
        got.sort();
        let mut want: Vec<(Vec<i64>, u64, i64)> = classes
            .iter()
            .map(|w| {
                let shift = u64::from(w.iter().any(|&x| x != 0));
                (w.clone(), shift, 1)
            })
            .collect();
        want.sort();
        if got != want {
            return Ok(format!("FAIL {spec}: got {got:?}, want {want:?}"));
        }
        count += 1;
    }
    Ok(format!("{count} branching rows exact at cutoff 3"))
}

fn criterion_duality_involution(opts: &SuiteOptions) -> Result<String> {
    let mut count = 0;
    for spec in CONFORMAL_SPECS {
        let e = resolve_with_options(spec, opts)?;
        let vac = LevelWeight::vacuum(&e.ambient, vec![1])?;
        if !duality_check(&e, &vac, 3, BUDGET)? {
            return Ok(format!("FAIL {spec}: branching does not commute with dagger"));
        }
        count += 1;
    }
    Ok(format!("{count} rows commute with the duality involution"))
}

fn criterion_verlinde_table(config: &RunConfig) -> Result<String> {
    let mut checks = 0;
    let mut expect = |name: &str, base: u64| -> Result<Option<String>> {
        let rs = RootSystem::parse(name)?;
        let k = vec![1i64; rs.num_components()];
        let s = s_matrix(&rs, &k, config)?;
        for g in 0..=4u32 {
            let d = fusion_dim(&s, g, &[])?;
            let want = base.pow(g);
            if d != want {
                return Ok(Some(format!("FAIL {name} g={g}: {d} != {want}")));
            }
            checks += 1;
        }
        Ok(None)
    };
    for r in 1..=8usize {
        if let Some(msg) = expect(&format!("A{r}"), (r + 1) as u64)? {
            return Ok(msg);
        }
    }
    for (name, base) in [("D8", 4), ("D4", 4), ("E6", 3), ("E7", 2), ("E8", 1)] {
        if let Some(msg) = expect(name, base)? {
            return Ok(msg);
        }
    }
    Ok(format!("{checks} level-one dimensions match closed forms"))
}

fn criterion_g2f4_closed_form(config: &RunConfig) -> Result<String> {
    let mut dims = Vec::new();
    for g in 0..=4u32 {
        let rep = strange_duality_dims("G2:F4", g, config)?;
        if !rep.equal {
            return Ok(format!("FAIL g={g}: {} != {}", rep.dim_a, rep.dim_b));
        }
        let cf = rep.closed_form.expect("closed form for G2/F4");
        if (cf - rep.dim_a as f64).abs() > 1e-6 {
            return Ok(format!("FAIL g={g}: closed form {cf} vs {}", rep.dim_a));
        }
        dims.push(rep.dim_a);
    }
    Ok(format!("dims {dims:?} for g=0..4 match the golden-ratio form"))
}

fn criterion_factorization(config: &RunConfig) -> Result<String> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut checks = 0;
    for name in ["A1", "A2", "D4", "G2"] {
        let rs = RootSystem::parse(name)?;
        let s = s_matrix(&rs, &[1], config)?;
        let random_label = s.alcove[rng.gen_range(0..s.alcove.len())].clone();
        for genus in 1..=3u32 {
            for labels in [vec![], vec![random_label.clone()]] {
                let rep = factorization_check(&rs, &s, genus, &labels)?;
                if !rep.holds {
                    return Ok(format!(
                        "FAIL {name} g={genus} labels={}: {} != {}",
                        labels.len(),
                        rep.lhs,
                        rep.rhs
                    ));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} genus-recursion identities exact"))
}

fn criterion_heisenberg_invariants() -> Result<String> {
    let centers: [&[u64]; 5] = [&[2], &[3], &[5], &[2, 2], &[3, 3]];
    let mut total = 0;
    for center in centers {
        for genus in [1usize, 2] {
            let sc = Scenario {
                center: center.to_vec(),
                genus,
                samples: 10,
                seed: 7 + genus as u64,
            };
            let rep = run_scenario(&sc)?;
            if !rep.all_one {
                return Ok(format!(
                    "FAIL {center:?} g={genus}: dims {:?}",
                    rep.invariant_dims
                ));
            }
            total += rep.samples;
        }
    }
    Ok(format!("{total} random lifted Lagrangians all give dimension 1"))
}

fn criterion_duality_rank() -> Result<String> {
    let models: [(Vec<u64>, usize); 3] = [(vec![5], 1), (vec![3], 1), (vec![2], 2)];
    let mut ranks = Vec::new();
    for (orders, genus) in models {
        let rep = strange_duality_map(&FiniteAbelian::new(orders.clone()), genus, false)?;
        if !rep.full_rank || !rep.equivariant {
            return Ok(format!(
                "FAIL {orders:?} g={genus}: rank {}/{}",
                rep.rank, rep.space_dim
            ));
        }
        ranks.push(rep.rank);
    }
    Ok(format!("invariant maps have full ranks {ranks:?}"))
}

fn criterion_properties(opts: &SuiteOptions, config: &RunConfig) -> Result<String> {
    // dagger is an involution on sampled weights
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for name in ["A5", "D5", "E6"] {
        let rs = RootSystem::parse(name)?;
        for _ in 0..20 {
            let w = Weight(
                (0..rs.rank).map(|_| rng.gen_range(0..3i64)).collect(),
            );
            if rs.dagger(&rs.dagger(&w)) != w {
                return Ok(format!("FAIL dagger not an involution on {name}"));
            }
            // the trace anomaly is dagger-invariant
            let lw = LevelWeight::new(&rs, w.clone(), vec![rs.level_of(&w.0, 0).max(1)])?;
            let dlw = LevelWeight::new(&rs, rs.dagger(&w), lw.level.clone())?;
            if trace_anomaly(&rs, &lw)? != trace_anomaly(&rs, &dlw)? {
                return Ok(format!("FAIL anomaly not dagger-invariant on {name}"));
            }
        }
    }
    // S^2 is the charge-conjugation permutation
    for name in ["A4", "D4"] {
        let rs = RootSystem::parse(name)?;
        let s = s_matrix(&rs, &[1], config)?;
        let n = s.alcove.len();
        for i in 0..n {
            let dag = LevelWeight {
                weight: rs.dagger(&s.alcove[i].weight),
                level: s.alcove[i].level.clone(),
            };
            let j = s.index_of(&dag)?;
            for l in 0..n {
                let mut acc = num_complex::Complex64::new(0.0, 0.0);
                for t in 0..n {
                    acc += s.entries[i][t] * s.entries[t][l];
                }
                let want = f64::from(l == j);
                if (acc.re - want).abs() > 1e-8 || acc.im.abs() > 1e-8 {
                    return Ok(format!("FAIL S^2 != C for {name}"));
                }
            }
        }
    }
    // shift-0 branching classes agree with finite branching
    let e = resolve_with_options("E8:D8", opts)?;
    let vac = LevelWeight::vacuum(&e.ambient, vec![1])?;
    let affine_result = branch_affine(&e, &vac, 1, BUDGET)?;
    let finite = branch_finite(&e, &Weight::zero(8))?;
    for en in affine_result.entries.iter().filter(|en| en.shift == 0) {
        if finite.get(&en.weight.weight).copied().unwrap_or(0) != en.mult {
            return Ok("FAIL shift-0 branching disagrees with finite branching".into());
        }
    }
    // graded character of the A1 basic module against the lattice oracle
    let rs = RootSystem::parse("A1")?;
    let lw = LevelWeight::vacuum(&rs, vec![1])?;
    let ch = graded_character(&rs, &lw, 4, BUDGET)?;
    if (0..=4).map(|m| ch.grade_dim(m)).collect::<Vec<_>>() != vec![1, 3, 4, 7, 13] {
        return Ok("FAIL basic-module grade dimensions off".into());
    }
    Ok("dagger, anomaly, S^2=C, shift-0 and character oracles agree".into())
}

/// Run every criterion whose id contains the filter substring.
pub fn run_suite(opts: &SuiteOptions, config: &RunConfig) -> Vec<CriterionResult> {
    type Runner<'a> = Box<dyn Fn() -> Result<String> + 'a>;
    let items: Vec<(&'static str, &'static str, Runner)> = vec![
        (
            "conformal",
            "conformal at level 1 with anomaly 8",
            Box::new(|| criterion_conformal(opts)),
        ),
        (
            "table11",
            "basic-module branching rows",
            Box::new(|| criterion_table_branchings(opts)),
        ),
        (
            "branch-duality",
            "branching commutes with dagger",
            Box::new(|| criterion_duality_involution(opts)),
        ),
        (
            "table10",
            "level-one Verlinde dimensions",
            Box::new(|| criterion_verlinde_table(config)),
        ),
        (
            "g2f4",
            "G2/F4 dimensions and closed form",
            Box::new(|| criterion_g2f4_closed_form(config)),
        ),
        (
            "factorization",
            "genus recursion for fusion dimensions",
            Box::new(|| criterion_factorization(config)),
        ),
        (
            "heisenberg",
            "invariant dimension one for all lifts",
            Box::new(criterion_heisenberg_invariants),
        ),
        (
            "duality-rank",
            "full rank of the induced duality map",
            Box::new(criterion_duality_rank),
        ),
        (
            "properties",
            "structural property spot-checks",
            Box::new(|| criterion_properties(opts, config)),
        ),
    ];
    let mut out = Vec::new();
    for (id, title, run) in items {
        if let Some(f) = &opts.filter {
            if !id.contains(f.as_str()) {
                continue;
            }
        }
        let start = Instant::now();
        let (passed, detail) = match run() {
            Ok(detail) => (!detail.starts_with("FAIL"), detail),
            Err(e) => (false, format!("error: {e}")),
        };
        out.push(CriterionResult {
            id,
            title,
            passed,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_selects_subset() {
        let opts = SuiteOptions { filter: Some("table10".into()), ..Default::default() };
        let results = run_suite(&opts, &RunConfig::default());
        assert_eq!(results.len(), 1);
        assert_eq!(results[0].id, "table10");
        assert!(results[0].passed, "{}", results[0].detail);
    }

    #[test]
    fn corrupted_embedding_file_fails_named_criteria() {
        let dir = std::env::temp_dir().join("levelone-suite-bad-embedding");
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.json");
        // a well-formed file whose restriction rows were zeroed out
        let e = crate::embed::builtin_g2_f4().unwrap();
        let mut file = EmbeddingFile::from_embedding(&e, true);
        for row in &mut file.restriction {
            for x in row.iter_mut() {
                *x = 0;
            }
        }
        std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        let opts = SuiteOptions {
            filter: Some("conformal".into()),
            embedding_file: Some(path),
        };
        let results = run_suite(&opts, &RunConfig::default());
        assert_eq!(results.len(), 1);
        assert!(!results[0].passed);
        assert_eq!(results[0].id, "conformal");
        let _ = std::fs::remove_dir_all(&dir);
    }
}
