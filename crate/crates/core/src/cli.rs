//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on invalid input or a failed check, 2 when a
//! size cap or truncation bound is hit. Caps are overridden through
//! `TWISTLIE_CAPS`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::acceptance::{self, Suite};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::io::{coalg_from_json, cs_from_json, lie_from_json, lie_to_json, parse_json, seq_from_json};
use crate::liealg::ce::{ce_coalgebra, ce_complex, ce_map};
use crate::liealg::free::free_lie;
use crate::liealg::quillen::{epsilon, eta, quillen_complex};
use crate::liealg::{check_lie_map, TwistedCoalg, TwistedLie};
use crate::models::{braid_poincare_oracle, chromatic_polynomial, conf_lie_model, GraphSpec};
use crate::partitions::surjections;
use crate::projcat::cs::pr_cs_hom;
use crate::projcat::fb::pr_fb_hom;
use crate::projcat::{pr_hom_generic, FiniteSmc, SmcSpec};
use crate::repstab::{check_conditions, vanishing_bound_report, LieHomologyData, Variant};
use crate::twisted::{basis_table, homology, is_quasi_iso, ChainMap, HomTable, SymSeq};

#[derive(Parser, Debug)]
#[command(name = "twistlie", version, about = "Twisted Lie algebra homology, Koszul duality and projection categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Weight truncation for constructions that need one.
    #[arg(long, global = true)]
    pub max_weight: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CatKind {
    Fb,
    Cs,
    Smc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Stability,
    General,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Stability => Variant::Stability,
            VariantArg::General => Variant::General,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count classes of complementary morphisms.
    Projhom {
        #[arg(long, value_enum)]
        cat: CatKind,
        /// Source: a set size (fb), a JSON file (cs) or an object name (smc).
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        /// Category tables for `--cat smc`.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Surjections `[n] → [r]`.
    Surj {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// List them instead of counting.
        #[arg(long)]
        list: bool,
    },
    /// The free twisted Lie algebra on a sequence or a single generator.
    FreeLie {
        #[arg(long)]
        generators: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        weight: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        degree: i32,
    },
    /// Homology of the Chevalley–Eilenberg complex.
    Ce {
        #[arg(long, conflicts_with = "conf", required_unless_present = "conf")]
        lie: Option<PathBuf>,
        /// Use the configuration model in `R^n` instead of a file.
        #[arg(long)]
        conf: Option<i32>,
        /// Keep only degrees up to this bound.
        #[arg(long, allow_hyphen_values = true)]
        max_degree: Option<i32>,
    },
    /// The Quillen complex of a coalgebra.
    Quillen {
        #[arg(long)]
        coalg: PathBuf,
    },
    /// Certifies the duality maps on a coalgebra or Lie algebra.
    DualityCheck {
        #[arg(long, conflicts_with = "lie", required_unless_present = "lie")]
        coalg: Option<PathBuf>,
        #[arg(long)]
        lie: Option<PathBuf>,
    },
    /// The Lie model of ordered configurations in `R^n`.
    ConfModel {
        #[arg(long)]
        n: i32,
        /// Skip the degree shift that puts primitives in degree `-1`.
        #[arg(long)]
        unshifted: bool,
    },
    /// Independent polynomial oracles.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Checks the representation-stability conditions on Lie homology.
    Stability {
        #[arg(long)]
        homology: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        imax: i32,
        #[arg(long, value_enum, default_value_t = VariantArg::General)]
        variant: VariantArg,
        /// Also verify the vanishing bound on `Sym(V)`.
        #[arg(long)]
        bound: bool,
    },
    /// Runs an acceptance suite.
    Acceptance {
        #[arg(value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        /// Directory replacing the bundled golden tables.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Poincaré polynomial of ordered configurations of `k` points in `R^dim`.
    Braid {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        dim: i32,
    },
    /// Chromatic polynomial of a graph.
    Chromatic {
        #[arg(long)]
        vertices: usize,
        /// Edges as `a-b`, comma separated.
        #[arg(long, default_value = "")]
        edges: String,
    },
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Output text with the exit status; status 1 marks a failed check.
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

impl Outcome {
    fn ok(text: impl Into<String>) -> Self {
        Outcome { text: text.into(), status: 0 }
    }

    fn check(text: impl Into<String>, passed: bool) -> Self {
        Outcome { text: text.into(), status: if passed { 0 } else { 1 } }
    }
}

fn read_text(path: &Path) -> Result<(String, String)> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: name.clone(), source })?;
    Ok((text, name))
}

fn read_lie(path: &Path, w: Option<usize>) -> Result<TwistedLie> {
    let (text, name) = read_text(path)?;
    let l = lie_from_json(&text, &name)?;
    match w {
        Some(w) => l.truncate(w),
        None => Ok(l),
    }
}

fn read_coalg(path: &Path) -> Result<TwistedCoalg> {
    let (text, name) = read_text(path)?;
    coalg_from_json(&text, &name)
}

fn table_json(t: &HomTable) -> Value {
    let cells: Vec<Value> =
        t.entries.iter().map(|((k, p), d)| json!({"weight": k, "degree": p, "dim": d})).collect();
    json!({"max_weight": t.max_weight, "cells": cells})
}

fn emit_table(t: &HomTable, format: Format) -> String {
    match format {
        Format::Tsv => t.to_tsv(),
        Format::Json => pretty(&table_json(t)),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_size(s: Option<&str>, what: &str) -> Result<usize> {
    let s = s.ok_or_else(|| Error::arg(format!("--{what} is required")))?;
    s.parse().map_err(|_| Error::arg(format!("--{what} expects a set size, got {s:?}")))
}

fn projhom(cli: &Cli, cat: CatKind, from: Option<&str>, to: Option<&str>, spec: Option<&Path>) -> Result<Outcome> {
    let count = match cat {
        CatKind::Fb => pr_fb_hom(parse_size(from, "from")?, parse_size(to, "to")?)?.len(),
        CatKind::Cs => {
            let load = |p: Option<&str>, what: &str| -> Result<_> {
                let p = p.ok_or_else(|| Error::arg(format!("--{what} is required")))?;
                let (text, name) = read_text(Path::new(p))?;
                cs_from_json(&text, &name)
            };
            pr_cs_hom(&load(from, "from")?, &load(to, "to")?)?.len()
        }
        CatKind::Smc => {
            let spec = spec.ok_or_else(|| Error::arg("--spec is required for --cat smc"))?;
            let (text, name) = read_text(spec)?;
            let cat = FiniteSmc::from_spec(&parse_json::<SmcSpec>(&text, &name)?)?;
            let index = |o: &str| cat.object_index(o).ok_or_else(|| Error::arg(format!("unknown object {o:?}")));
            match (from, to) {
                (Some(a), Some(b)) => pr_hom_generic(&cat, index(a)?, index(b)?).len(),
                (None, None) => return Ok(Outcome::ok(smc_table(&cat, cli.format))),
                _ => return Err(Error::arg("give both --from and --to, or neither")),
            }
        }
    };
    Ok(Outcome::ok(match cli.format {
        Format::Tsv => format!("{count}\n"),
        Format::Json => pretty(&json!({"classes": count})),
    }))
}

fn smc_table(cat: &FiniteSmc, format: Format) -> String {
    let mut rows = Vec::new();
    for a in 0..cat.num_objects() {
        for b in 0..cat.num_objects() {
            rows.push((cat.object_name(a).to_string(), cat.object_name(b).to_string(), pr_hom_generic(cat, a, b).len()));
        }
    }
    match format {
        Format::Tsv => {
            let mut s = String::from("source\ttarget\tclasses\n");
            for (a, b, n) in rows {
                s.push_str(&format!("{a}\t{b}\t{n}\n"));
            }
            s
        }
        Format::Json => pretty(&json!(rows
            .iter()
            .map(|(a, b, n)| json!({"source": a, "target": b, "classes": n}))
            .collect::<Vec<_>>())),
    }
}

fn surj(cli: &Cli, n: usize, r: usize, list: bool) -> Result<Outcome> {
    let all = surjections(n, r)?;
    Ok(Outcome::ok(match (cli.format, list) {
        (Format::Tsv, false) => format!("{}\n", all.len()),
        (Format::Tsv, true) => all
            .iter()
            .map(|s| s.0.iter().map(ToString::to_string).collect::<Vec<_>>().join("\t") + "\n")
            .collect(),
        (Format::Json, false) => pretty(&json!({"count": all.len()})),
        (Format::Json, true) => pretty(&json!(all.iter().map(|s| s.0.clone()).collect::<Vec<_>>())),
    }))
}

fn free_lie_verb(cli: &Cli, generators: Option<&Path>, weight: usize, degree: i32) -> Result<Outcome> {
    let w = cli.max_weight.unwrap_or(4);
    let v = match generators {
        Some(p) => {
            let (text, name) = read_text(p)?;
            seq_from_json(&text, &name)?.truncate(w)?
        }
        None => {
            if weight == 0 || weight > w {
                return Err(Error::arg(format!("generator weight {weight} must lie in 1..={w}")));
            }
            SymSeq::generator(w, weight, degree)
        }
    };
    let f = free_lie(&v, w)?;
    Ok(Outcome::ok(match cli.format {
        Format::Tsv => basis_table(&f.lie.seq).to_tsv(),
        Format::Json => pretty(&lie_to_json(&f.lie)),
    }))
}

fn ce_verb(cli: &Cli, lie: Option<&Path>, conf: Option<i32>, max_degree: Option<i32>) -> Result<Outcome> {
    let l = match (lie, conf) {
        (Some(p), _) => read_lie(p, cli.max_weight)?,
        (None, Some(n)) => conf_lie_model(n, cli.max_weight.unwrap_or(4), false)?,
        (None, None) => return Err(Error::arg("give --lie or --conf")),
    };
    let ce = ce_complex(&l, max_degree)?;
    Ok(Outcome::ok(emit_table(&homology(&ce.seq), cli.format)))
}

fn quillen_verb(cli: &Cli, coalg: &Path) -> Result<Outcome> {
    let k = read_coalg(coalg)?;
    let w = cli.max_weight.unwrap_or(k.max_weight()).min(k.max_weight());
    let q = quillen_complex(&k, w)?;
    Ok(Outcome::ok(match cli.format {
        Format::Tsv => homology(&q.lie.seq).to_tsv(),
        Format::Json => pretty(&lie_to_json(&q.lie)),
    }))
}

fn duality_verb(cli: &Cli, coalg: Option<&Path>, lie: Option<&Path>) -> Result<Outcome> {
    let mut lines: Vec<(String, bool)> = Vec::new();
    let eta_lines = |kc: &TwistedCoalg, w: usize, lines: &mut Vec<(String, bool)>| -> Result<ChainMap> {
        let q = quillen_complex(kc, w)?;
        let ce_q = ce_complex(&q.lie, None)?;
        let h = eta(kc, &q, &ce_q)?;
        lines.push(("eta chain map".into(), h.check().is_valid()));
        lines.push(("eta quasi-isomorphism".into(), is_quasi_iso(&h)));
        Ok(h)
    };
    match (coalg, lie) {
        (Some(p), _) => {
            let k = read_coalg(p)?;
            let w = cli.max_weight.unwrap_or(k.max_weight()).min(k.max_weight());
            eta_lines(&k, w, &mut lines)?;
        }
        (None, Some(p)) => {
            let l = read_lie(p, cli.max_weight)?;
            let w = l.max_weight();
            let (ce, kc) = ce_coalgebra(&l)?;
            let q = quillen_complex(&kc, w)?;
            let e = epsilon(&l, &ce, &q)?;
            lines.push(("epsilon Lie map".into(), check_lie_map(&e, &q.lie, &l).is_valid()));
            lines.push(("epsilon quasi-isomorphism".into(), is_quasi_iso(&e)));
            let ce_q = ce_complex(&q.lie, None)?;
            let h = eta(&kc, &q, &ce_q)?;
            lines.push(("eta chain map".into(), h.check().is_valid()));
            lines.push(("eta quasi-isomorphism".into(), is_quasi_iso(&h)));
            let back = ce_map(&e, &ce_q, &ce)?;
            lines.push(("CE(epsilon) after eta is the identity".into(), back.compose(&h) == ChainMap::identity(&ce.seq)));
        }
        (None, None) => return Err(Error::arg("give --coalg or --lie")),
    }
    let passed = lines.iter().all(|(_, ok)| *ok);
    let verdict = if passed { "PASS" } else { "FAIL" };
    let text = match cli.format {
        Format::Tsv => {
            let mut s = format!("{verdict}\n");
            for (name, ok) in &lines {
                s.push_str(&format!("{}\t{name}\n", if *ok { "PASS" } else { "FAIL" }));
            }
            s
        }
        Format::Json => pretty(&json!({
            "passed": passed,
            "checks": lines.iter().map(|(n, ok)| json!({"check": n, "passed": ok})).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome::check(text, passed))
}

fn conf_verb(cli: &Cli, n: i32, unshifted: bool) -> Result<Outcome> {
    let l = conf_lie_model(n, cli.max_weight.unwrap_or(4), unshifted)?;
    Ok(Outcome::ok(match cli.format {
        Format::Tsv => basis_table(&l.seq).to_tsv(),
        Format::Json => pretty(&lie_to_json(&l)),
    }))
}

fn parse_edges(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .map(str::trim)
        .filter(|e| !e.is_empty())
        .map(|e| {
            let (a, b) = e.split_once('-').ok_or_else(|| Error::arg(format!("edge {e:?} is not a-b")))?;
            let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| Error::arg(format!("edge {e:?} has a bad vertex")));
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

fn oracle_verb(cli: &Cli, which: &OracleCommand) -> Result<Outcome> {
    let p = match which {
        OracleCommand::Braid { k, dim } => braid_poincare_oracle(*k, *dim)?,
        OracleCommand::Chromatic { vertices, edges } => {
            chromatic_polynomial(&GraphSpec::new(*vertices, parse_edges(edges)?)?)?
        }
    };
    Ok(Outcome::ok(match cli.format {
        Format::Tsv => format!("{p}\n"),
        Format::Json => pretty(&json!({
            "polynomial": p.to_string(),
            "coefficients": p.terms().map(|(e, c)| json!([e, c])).collect::<Vec<_>>(),
        })),
    }))
}

fn stability_verb(cli: &Cli, path: &Path, imax: i32, variant: Variant, bound: bool) -> Result<Outcome> {
    let (text, name) = read_text(path)?;
    let mut seq = seq_from_json(&text, &name)?;
    if let Some(w) = cli.max_weight {
        seq = seq.truncate(w)?;
    }
    let h = LieHomologyData::new(seq)?;
    let report = check_conditions(&h, imax, variant);
    let bounds = if bound { Some(vanishing_bound_report(&h, imax, h.max_weight(), variant)?) } else { None };
    let passed = report.holds() && bounds.as_ref().is_none_or(|b| b.verified());
    let text = match cli.format {
        Format::Tsv => {
            let mut s = format!("{report}\n");
            if let Some(b) = &bounds {
                s.push_str("degree\tell\tfrom_weight\tchecked\tfirst_failure\n");
                for r in &b.rows {
                    let fail = r.first_failure.map_or("-".to_string(), |(k, d)| format!("weight {k}: {d}"));
                    s.push_str(&format!("{}\t{}\t{}\t{}\t{fail}\n", r.degree, r.ell, r.from_weight, r.checked_weights));
                }
            }
            s
        }
        Format::Json => pretty(&json!({"conditions": report, "bound": bounds, "holds": passed})),
    };
    Ok(Outcome::check(text, passed))
}

fn acceptance_verb(cli: &Cli, suite: Suite, golden_dir: Option<&Path>) -> Result<Outcome> {
    let mut opts = acceptance::Options::new(cli.seed);
    if let Some(d) = golden_dir {
        opts.golden_dir = Some(d.to_path_buf());
    }
    let report = acceptance::run(suite, &opts);
    eprint!("{}", report.timings());
    let text = match cli.format {
        Format::Tsv => report.to_tsv(),
        Format::Json => pretty(&report.to_json()),
    };
    Ok(Outcome::check(text, report.all_passed()))
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Result<Outcome> {
    Caps::from_env()?;
    match &cli.command {
        Command::Projhom { cat, from, to, spec } => projhom(cli, *cat, from.as_deref(), to.as_deref(), spec.as_deref()),
        Command::Surj { n, r, list } => surj(cli, *n, *r, *list),
        Command::FreeLie { generators, weight, degree } => free_lie_verb(cli, generators.as_deref(), *weight, *degree),
        Command::Ce { lie, conf, max_degree } => ce_verb(cli, lie.as_deref(), *conf, *max_degree),
        Command::Quillen { coalg } => quillen_verb(cli, coalg),
        Command::DualityCheck { coalg, lie } => duality_verb(cli, coalg.as_deref(), lie.as_deref()),
        Command::ConfModel { n, unshifted } => conf_verb(cli, *n, *unshifted),
        Command::Oracle { which } => oracle_verb(cli, which),
        Command::Stability { homology, imax, variant, bound } => {
            stability_verb(cli, homology, *imax, (*variant).into(), *bound)
        }
        Command::Acceptance { suite, golden_dir } => acceptance_verb(cli, *suite, golden_dir.as_deref()),
    }
}

/// Parses arguments, runs, writes the output and returns the exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return status;
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.text)
                    .map_err(|source| Error::Io { path: path.display().to_string(), source }),
                None => std::io::stdout()
                    .write_all(outcome.text.as_bytes())
                    .map_err(|source| Error::Io { path: "<stdout>".into(), source }),
            };
            match written {
                Ok(()) => outcome.status,
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
