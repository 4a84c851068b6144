//! The acceptance suites: ten exact checks grouped into five suites.
//!
//! Randomized criteria draw case `c` of criterion `n` from
//! `random::stream(seed, n, c)`, so a report depends only on the seed and the
//! golden tables. Criteria run on separate threads and the report is
//! assembled in criterion order. Timings are kept out of the report text.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::error::Error;
use crate::liealg::ce::{ce_coalgebra, ce_complex, ce_map};
use crate::liealg::free::free_lie;
use crate::liealg::quillen::{epsilon, eta, quillen_complex};
use crate::liealg::{check_lie_map, tensor_lie, validate_coalg, validate_lie, GradedAlgebra, TwistedCoalg, TwistedLie};
use crate::models::{braid_poincare_oracle, conf_lie_model, delta_pullback_check, discrete_conf_coalgebra};
use crate::partitions::{all_collision_structures, InjMap};
use crate::poly::Polynomial;
use crate::projcat::cs::{
    complex_structures, cs_composition_preserved, cs_correspondence, forgetful_faithful, graph_structures,
    subcategory_fully_faithful,
};
use crate::projcat::fb::{class_composition_preserved, composition_preserved, fb_correspondence, lift_injection, perm_from_lehmer, pr_fb_hom};
use crate::projcat::{walking_arrow, PrCategory};
use crate::random::{contractible_pair, random_quasi_iso_below, random_seq, rep_piece, stream, Rep, SeqShape};
use crate::repstab::{check_conditions, e1_page, e1_page_brute_force, vanishing_bound_report, LieHomologyData, Variant};
use crate::twisted::day::{day_tensor_fb, gamma_power_map, norm};
use crate::twisted::{homology, is_quasi_iso, is_quasi_iso_below, validate, ChainMap, HomTable, SymSeq};

/// Environment variable naming a directory that replaces the bundled goldens.
pub const GOLDEN_DIR_VAR: &str = "TWISTLIE_GOLDEN_DIR";

const GOLDENS: &[(&str, &str)] = &[
    ("fb_hom_counts.tsv", include_str!("../goldens/fb_hom_counts.tsv")),
    ("braid_poincare.tsv", include_str!("../goldens/braid_poincare.tsv")),
    ("discrete_conf.tsv", include_str!("../goldens/discrete_conf.tsv")),
    ("stability_thresholds.tsv", include_str!("../goldens/stability_thresholds.tsv")),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Projcat,
    Daycore,
    Duality,
    Conf,
    Stability,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["projcat", "daycore", "duality", "conf", "stability", "all"];

    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Projcat => &[1, 2, 3],
            Suite::Daycore => &[4, 5],
            Suite::Duality => &[6],
            Suite::Conf => &[7, 8, 9],
            Suite::Stability => &[10],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s {
            "projcat" => Suite::Projcat,
            "daycore" => Suite::Daycore,
            "duality" => Suite::Duality,
            "conf" => Suite::Conf,
            "stability" => Suite::Stability,
            "all" => Suite::All,
            other => return Err(Error::arg(format!("unknown suite {other:?}; expected one of {}", Suite::NAMES.join(", ")))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Projcat => "projcat",
            Suite::Daycore => "daycore",
            Suite::Duality => "duality",
            Suite::Conf => "conf",
            Suite::Stability => "stability",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    /// Replaces the bundled golden tables when set.
    pub golden_dir: Option<PathBuf>,
}

impl Options {
    pub fn new(seed: u64) -> Self {
        Options { seed, golden_dir: std::env::var_os(GOLDEN_DIR_VAR).map(PathBuf::from) }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct AcceptanceReport {
    pub suite: Suite,
    pub seed: u64,
    pub results: Vec<CriterionResult>,
}

impl AcceptanceReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    /// One `PASS`/`FAIL` line per criterion, free of timings.
    pub fn to_tsv(&self) -> String {
        let mut s = format!("# suite {} seed {}\n", self.suite, self.seed);
        for r in &self.results {
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("{verdict}\t{}\t{}\t{}\n", r.id, r.name, r.detail));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite.to_string(),
            "seed": self.seed,
            "criteria": self.results.iter().map(|r| serde_json::json!({
                "id": r.id,
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn timings(&self) -> String {
        self.results.iter().map(|r| format!("{}\t{}\t{:.3}s\n", r.id, r.name, r.elapsed.as_secs_f64())).collect()
    }
}

type Outcome = std::result::Result<String, String>;

fn name_of(id: u8) -> &'static str {
    match id {
        1 => "fb-classification",
        2 => "walking-arrow",
        3 => "collision-classification",
        4 => "day-core",
        5 => "free-lie-homology",
        6 => "koszul-duality",
        7 => "conf-braid-oracle",
        8 => "discrete-projection-space",
        9 => "delta-pullback",
        10 => "stability-pipeline",
        _ => unreachable!("criteria are numbered 1 to 10"),
    }
}

fn dispatch(id: u8, opts: &Options) -> Outcome {
    match id {
        1 => fb_classification(opts),
        2 => walking_arrow_check(),
        3 => collision_classification(),
        4 => day_core(opts.seed),
        5 => free_lie_homology(opts.seed),
        6 => koszul_duality(opts.seed),
        7 => conf_braid(opts),
        8 => discrete_projection_space(opts),
        9 => delta_pullback(opts.seed),
        10 => stability_pipeline(opts),
        _ => unreachable!("criteria are numbered 1 to 10"),
    }
}

/// Runs a suite. Criteria run concurrently; a panicking criterion fails.
pub fn run(suite: Suite, opts: &Options) -> AcceptanceReport {
    let ids = suite.criteria();
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let outcome = dispatch(id, opts);
                    (outcome, start.elapsed())
                })
            })
            .collect();
        ids.iter()
            .zip(handles)
            .map(|(&id, h)| {
                let (outcome, elapsed) =
                    h.join().unwrap_or_else(|_| (Err("criterion panicked".to_string()), Duration::ZERO));
                let (passed, detail) = match outcome {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                CriterionResult { id, name: name_of(id), passed, detail, elapsed }
            })
            .collect()
    });
    AcceptanceReport { suite, seed: opts.seed, results }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden(opts: &Options, name: &str) -> std::result::Result<String, String> {
    match &opts.golden_dir {
        Some(dir) => {
            let path: &Path = dir.as_ref();
            std::fs::read_to_string(path.join(name)).map_err(|e| format!("golden {name} unreadable: {e}"))
        }
        None => Ok(GOLDENS.iter().find(|(n, _)| *n == name).expect("bundled golden").1.to_string()),
    }
}

/// Compares a computed table with a golden one line by line.
fn check_golden(opts: &Options, name: &str, computed: &str) -> std::result::Result<(), String> {
    let expected = golden(opts, name)?;
    let mut a = computed.lines();
    let mut b = expected.lines();
    for line in 1.. {
        match (a.next(), b.next()) {
            (None, None) => return Ok(()),
            (x, y) if x == y => continue,
            _ => return Err(format!("golden {name} mismatch at line {line}")),
        }
    }
    unreachable!()
}

fn falling(n: usize, m: usize) -> usize {
    (n - m + 1..=n).product()
}

fn random_injection<R: Rng>(rng: &mut R, m: usize, n: usize) -> InjMap {
    let code = rng.gen::<u64>();
    let p = perm_from_lehmer(n, code);
    InjMap::new(n, p.0[..m].to_vec()).expect("prefix of a permutation is injective")
}

fn fb_classification(opts: &Options) -> Outcome {
    let mut table = String::from("m\tn\tclasses\n");
    for n in 0..=6 {
        for m in 0..=n {
            let got = pr_fb_hom(m, n).map_err(err)?.len();
            ensure(got == falling(n, m), || format!("Pr(FB)({m},{n}) has {got} classes"))?;
            table.push_str(&format!("{m}\t{n}\t{got}\n"));
        }
    }
    check_golden(opts, "fb_hom_counts.tsv", &table)?;
    for n in 0..=4 {
        for m in 0..=n {
            fb_correspondence(m, n).map_err(err)?;
        }
    }
    for case in 0..200 {
        let mut rng = stream(opts.seed, 1, case);
        let p = rng.gen_range(0..=6);
        let n = rng.gen_range(0..=p);
        let m = rng.gen_range(0..=n);
        let i = random_injection(&mut rng, m, n);
        let j = random_injection(&mut rng, n, p);
        let classes = class_composition_preserved(&i, &j).map_err(err)?;
        let members = composition_preserved(&lift_injection(&i), &lift_injection(&j));
        ensure(classes && members, || format!("composition not preserved on case {case} ({m} → {n} → {p})"))?;
    }
    Ok("28 hom counts, 200 composable pairs".into())
}

fn walking_arrow_check() -> Outcome {
    let cat = walking_arrow();
    cat.validate().map_err(err)?;
    let pr = PrCategory::build(&cat);
    for a in 0..2 {
        for b in 0..2 {
            ensure(pr.hom_size(a, b) == 1, || format!("hom({a},{b}) has {} classes", pr.hom_size(a, b)))?;
        }
    }
    for (a, b, c) in [(0, 1, 0), (1, 0, 1), (0, 0, 1), (0, 1, 1), (1, 1, 0), (1, 0, 0)] {
        let k = pr.compose(&cat, a, b, c, 0, 0).map_err(err)?;
        if a == c {
            ensure(Some(k) == pr.identity_class(&cat, a), || format!("{a} → {b} → {c} is not the identity"))?;
        }
    }
    Ok("four singleton hom-sets, inverse composites".into())
}

fn collision_classification() -> Outcome {
    let structures: Vec<_> = (0..=3).map(all_collision_structures).collect::<crate::Result<_>>().map_err(err)?;
    let mut pairs = 0;
    for m in 0..=3 {
        for n in m..=3 {
            for s in &structures[m] {
                for t in &structures[n] {
                    let c = cs_correspondence(s, t).map_err(err)?;
                    ensure(c.classes.len() == c.injections.len(), || format!("{s} → {t} is not a bijection"))?;
                    ensure(forgetful_faithful(s, t).map_err(err)?, || format!("{s} → {t} is not faithful over FB"))?;
                    pairs += 1;
                }
            }
        }
    }
    let mut triples = 0;
    for m in 0..=3 {
        for n in m..=3 {
            for p in n..=3 {
                for s in &structures[m] {
                    for t in &structures[n] {
                        for r in &structures[p] {
                            ensure(cs_composition_preserved(s, t, r).map_err(err)?, || {
                                format!("composition fails on {s} → {t} → {r}")
                            })?;
                            triples += 1;
                        }
                    }
                }
            }
        }
    }
    type Family = fn(usize) -> crate::Result<Vec<crate::partitions::CollisionStructure>>;
    let families: [(&str, Family); 2] = [("graphs", graph_structures), ("complexes", complex_structures)];
    for (label, family) in families {
        let objs: Vec<_> = (0..=3).map(family).collect::<crate::Result<_>>().map_err(err)?;
        for m in 0..=3 {
            for n in m..=3 {
                for s in &objs[m] {
                    for t in &objs[n] {
                        ensure(subcategory_fully_faithful(s, t, &objs[n - m]).map_err(err)?, || {
                            format!("{label}: {s} → {t} is not fully faithful")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, {triples} triples, graphs and complexes fully faithful"))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn day_core(seed: u64) -> Outcome {
    for case in 0..50 {
        let mut rng = stream(seed, 4, case);
        let w = rng.gen_range(2..=5);
        let a = rng.gen_range(1..=2.min(w));
        let b = rng.gen_range(1..=2.min(w));
        let shape = |min_weight| SeqShape { max_weight: w, min_weight, max_summands: 2, ..Default::default() };
        let f = random_seq(&mut rng, &shape(a));
        let g = random_seq(&mut rng, &shape(b));
        let t = day_tensor_fb(&f, &g, w).map_err(err)?;
        ensure(validate(&t).is_valid(), || format!("Day product {case} is invalid"))?;
        for k in 0..=w {
            let expect: usize = (0..=k).map(|i| binomial(k, i) * f.dim(i) * g.dim(k - i)).sum();
            ensure(t.dim(k) == expect, || format!("Day product {case} has dimension {} in weight {k}, not {expect}", t.dim(k)))?;
            ensure(k >= a + b || t.dim(k) == 0, || format!("Day product {case} is nonzero in weight {k} < {}", a + b))?;
        }
        if case < 10 {
            for r in 1..=3 {
                let nm = norm(&f, r, w.min(4)).map_err(err)?;
                ensure(nm.is_iso(), || format!("norm Sym^{r} → Γ^{r} fails on case {case}"))?;
            }
        }
    }
    for case in 0..20 {
        let mut rng = stream(seed, 4, 100 + case);
        let n = rng.gen_range(1..=3);
        let shape = SeqShape { max_weight: 4, max_summands: 2, ..Default::default() };
        let f = random_quasi_iso_below(&mut rng, &shape, n);
        ensure(f.check().is_valid() && is_quasi_iso_below(&f, n), || format!("cone {case} is not a quasi-iso below {n}"))?;
        for k in 1..=3 {
            let g = gamma_power_map(&f, k, 4).map_err(err)?;
            ensure(g.check().is_valid(), || format!("Γ^{k} of map {case} is not a chain map"))?;
            ensure(is_quasi_iso_below(&g, n + k - 1), || format!("Γ^{k} of map {case} fails below weight {}", n + k - 1))?;
        }
    }
    Ok("50 Day pairs, norms, 20 cones".into())
}

/// At most two basis classes in weights one and two.
fn small_generators<R: Rng>(rng: &mut R, w: usize) -> SymSeq {
    let mut v = SymSeq::zero(w);
    let rep = |rng: &mut R, k: usize| if k >= 2 && rng.gen_bool(0.5) { Rep::Sign } else { Rep::Trivial };
    if rng.gen_bool(0.3) {
        let k = rng.gen_range(1..=2);
        let r = rep(rng, k);
        v.pieces[k] = contractible_pair(k, r, rng.gen_range(-1..=1));
    } else {
        for _ in 0..rng.gen_range(1..=2) {
            let k = rng.gen_range(1..=2);
            let r = rep(rng, k);
            let p = rep_piece(k, r, rng.gen_range(-1..=1));
            v.pieces[k] = v.pieces[k].direct_sum(&p);
        }
    }
    v
}

fn free_lie_homology(seed: u64) -> Outcome {
    for case in 0..20 {
        let mut rng = stream(seed, 5, case);
        let v = small_generators(&mut rng, 5);
        let l = free_lie(&v, 5).map_err(err)?;
        let h = homology(&ce_complex(&l.lie, None).map_err(err)?.seq);
        let mut expect = HomTable { max_weight: 5, ..Default::default() };
        expect.set(0, 0, 1);
        for ((k, p), d) in homology(&v).entries {
            expect.set(k, p + 1, d);
        }
        ensure(h == expect, || format!("case {case}: H(CE) = {:?}, expected {:?}", h.entries, expect.entries))?;
    }
    Ok("20 free Lie algebras".into())
}

fn random_lie<R: Rng>(rng: &mut R, case: u32, w: usize) -> crate::Result<TwistedLie> {
    match case % 4 {
        0 => {
            let mut v = small_generators(rng, w);
            if v.dim(1) == 0 {
                v.pieces[1] = rep_piece(1, Rep::Trivial, rng.gen_range(-1..=1));
            }
            Ok(free_lie(&v, w)?.lie)
        }
        1 => tensor_lie(&GradedAlgebra::torus(), &free_lie(&SymSeq::generator(w, 1, rng.gen_range(0..=2)), w)?.lie),
        2 => {
            let shape = SeqShape { max_weight: w, max_summands: 1, degrees: (-1, 1), ..Default::default() };
            Ok(TwistedLie::abelian(random_seq(rng, &shape)))
        }
        _ => {
            let alg = GradedAlgebra::compact_euclidean(rng.gen_range(1..=2));
            tensor_lie(&alg, &free_lie(&SymSeq::generator(w, 1, rng.gen_range(0..=2)), w)?.lie)
        }
    }
}

fn random_coalg<R: Rng>(rng: &mut R, case: u32, w: usize) -> crate::Result<TwistedCoalg> {
    let shape = SeqShape { max_weight: w, max_summands: 1, degrees: (-1, 1), ..Default::default() };
    match case % 4 {
        0 => TwistedCoalg::primitive(&random_seq(rng, &shape)),
        1 => Ok(ce_coalgebra(&TwistedLie::abelian(random_seq(rng, &shape)))?.1),
        2 => Ok(ce_coalgebra(&free_lie(&SymSeq::generator(w, 1, rng.gen_range(-1..=1)), w)?.lie)?.1),
        _ => discrete_conf_coalgebra(rng.gen_range(1..=3), w),
    }
}

fn koszul_duality(seed: u64) -> Outcome {
    const W: usize = 4;
    for case in 0..20 {
        let mut rng = stream(seed, 6, case);
        let l = random_lie(&mut rng, case, W).map_err(err)?;
        validate_lie(&l).into_result().map_err(|e| format!("Lie case {case}: {e}"))?;
        let (ce, kc) = ce_coalgebra(&l).map_err(err)?;
        let q = quillen_complex(&kc, W).map_err(err)?;
        let e = epsilon(&l, &ce, &q).map_err(err)?;
        ensure(check_lie_map(&e, &q.lie, &l).is_valid(), || format!("Lie case {case}: ε is not a Lie map"))?;
        ensure(is_quasi_iso(&e), || format!("Lie case {case}: ε is not a quasi-isomorphism"))?;
        let ce_q = ce_complex(&q.lie, None).map_err(err)?;
        let h = eta(&kc, &q, &ce_q).map_err(err)?;
        ensure(h.check().is_valid() && is_quasi_iso(&h), || format!("Lie case {case}: η is not a quasi-isomorphism"))?;
        let back = ce_map(&e, &ce_q, &ce).map_err(err)?;
        ensure(back.compose(&h) == ChainMap::identity(&ce.seq), || format!("Lie case {case}: CE(ε)∘η is not the identity"))?;
    }
    for case in 0..20 {
        let mut rng = stream(seed, 6, 100 + case);
        let kc = random_coalg(&mut rng, case, W).map_err(err)?;
        validate_coalg(&kc).into_result().map_err(|e| format!("coalgebra case {case}: {e}"))?;
        let q = quillen_complex(&kc, W).map_err(err)?;
        ensure(validate_lie(&q.lie).is_valid(), || format!("coalgebra case {case}: Q(K) is not a Lie algebra"))?;
        let ce_q = ce_complex(&q.lie, None).map_err(err)?;
        let h = eta(&kc, &q, &ce_q).map_err(err)?;
        ensure(h.check().is_valid() && is_quasi_iso(&h), || format!("coalgebra case {case}: η is not a quasi-isomorphism"))?;
    }
    Ok("20 Lie algebras, 20 coalgebras".into())
}

fn conf_braid(opts: &Options) -> Outcome {
    let mut table = String::from("n\tweight\tpoincare\n");
    for n in [2, 3] {
        let l = conf_lie_model(n, 6, false).map_err(err)?;
        validate_lie(&l).into_result().map_err(err)?;
        let h = homology(&ce_complex(&l, None).map_err(err)?.seq);
        for k in 1..=6 {
            let oracle = braid_poincare_oracle(k, n).map_err(err)?;
            let got = h.poincare(k);
            ensure(got == oracle, || format!("n={n} weight {k}: {got} vs oracle {oracle}"))?;
            table.push_str(&format!("{n}\t{k}\t{got}\n"));
        }
        if n == 2 {
            let worked = Polynomial::from_coeffs([(0, 1), (1, 6), (2, 11), (3, 6)]);
            ensure(h.poincare(4) == worked, || "weight 4 differs from 1 + 6t + 11t^2 + 6t^3".into())?;
        }
    }
    check_golden(opts, "braid_poincare.tsv", &table)?;
    Ok("n = 2, 3 through weight 6".into())
}

fn discrete_projection_space(opts: &Options) -> Outcome {
    let mut table = String::from("points\tweight\tdegree\tdim\n");
    for m in 1..=4 {
        let kc = discrete_conf_coalgebra(m, 4).map_err(err)?;
        validate_coalg(&kc).into_result().map_err(err)?;
        let q = quillen_complex(&kc, 4).map_err(err)?;
        let h = homology(&ce_complex(&q.lie, None).map_err(err)?.seq);
        for k in 0..=4 {
            let expect = if k <= m { falling(m, k) } else { 0 };
            ensure(h.get(k, 0) == expect && h.weight_total(k) == expect, || {
                format!("m={m} weight {k}: {:?}, expected {expect} in degree 0", h.poincare(k).to_string())
            })?;
        }
        for ((k, p), d) in &h.entries {
            table.push_str(&format!("{m}\t{k}\t{p}\t{d}\n"));
        }
    }
    check_golden(opts, "discrete_conf.tsv", &table)?;
    Ok("m ≤ 4 through weight 4".into())
}

fn delta_pullback(seed: u64) -> Outcome {
    let structures: Vec<_> = (0..=4).map(all_collision_structures).collect::<crate::Result<_>>().map_err(err)?;
    for case in 0..100 {
        let mut rng = stream(seed, 9, case);
        let n = rng.gen_range(0..=4);
        let m = rng.gen_range(0..=n);
        let f = random_injection(&mut rng, m, n);
        let s = &structures[m][rng.gen_range(0..structures[m].len())];
        let x = rng.gen_range(1..=4);
        ensure(delta_pullback_check(&f, s, x).map_err(err)?, || format!("case {case}: pullback of Δ_{s} differs"))?;
    }
    Ok("100 triples".into())
}

fn stability_pipeline(opts: &Options) -> Outcome {
    let conf = |n, w| LieHomologyData::from_lie(&conf_lie_model(n, w, false)?);
    let h = conf(2, 8).map_err(err)?;
    let report = check_conditions(&h, 3, Variant::General);
    ensure(report.holds(), || format!("conditions fail: {report}"))?;
    let mut table = String::from("degree\tell\n");
    for t in &report.thresholds {
        ensure(t.ell as i32 == t.degree + 3, || format!("ℓ({}) = {}", t.degree, t.ell))?;
        table.push_str(&format!("{}\t{}\n", t.degree, t.ell));
    }
    check_golden(opts, "stability_thresholds.tsv", &table)?;
    let bound = vanishing_bound_report(&h, 3, 8, Variant::General).map_err(err)?;
    ensure(bound.verified(), || format!("Sym(V) bound fails: {:?}", bound.rows.iter().find(|r| r.first_failure.is_some())))?;
    let checked: usize = bound.rows.iter().map(|r| r.checked_weights).sum();
    for n in [2, 3] {
        for w in 1..=4 {
            let small = conf(n, w).map_err(err)?;
            let fast = e1_page(&small, w).map_err(err)?;
            let slow = e1_page_brute_force(&small, w).map_err(err)?;
            ensure(fast == slow, || format!("E1 pages differ for n={n}, W={w}"))?;
        }
    }
    Ok(format!("ℓ(i) = i + 3 for -1 ≤ i ≤ 3, {checked} bound cells, E1 agrees"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn corrupted_golden_fails_by_name() {
        let dir = tempfile::tempdir().unwrap();
        for (name, text) in GOLDENS {
            std::fs::write(dir.path().join(name), text).unwrap();
        }
        std::fs::write(dir.path().join("fb_hom_counts.tsv"), "m\tn\tclasses\n0\t0\t2\n").unwrap();
        let opts = Options { seed: 1, golden_dir: Some(dir.path().to_path_buf()) };
        let r = run(Suite::Projcat, &opts);
        assert!(!r.results[0].passed);
        assert!(r.results[0].detail.contains("fb_hom_counts.tsv"), "{}", r.results[0].detail);
        assert!(r.results[1].passed && r.results[2].passed);
    }

    #[test]
    fn missing_golden_fails() {
        let dir = tempfile::tempdir().unwrap();
        let opts = Options { seed: 1, golden_dir: Some(dir.path().to_path_buf()) };
        let r = run(Suite::Stability, &opts);
        assert!(!r.all_passed());
        assert!(r.results[0].detail.contains("stability_thresholds.tsv"));
    }
}
