//! Command-line front end.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fusionkit_core::nising::*;
use fusionkit_core::pointed::{enumerate_braidings, enumerate_quadratic_forms, split_svect_factor, CenterClass};
use fusionkit_core::ring::{
    deligne_product, gty_structure, pointed_ring, ring_isomorphic, subring_lattice, verify_isomorphism,
};
use fusionkit_core::structure::{decompose_gty, Decomposition, DecompositionTrace, GeneratorBlock};
use fusionkit_core::{FiniteAbelianGroup, FusionRing, Limits, RootOfUnity};
use serde_json::{json, Value};

use crate::format::{read_premetric, read_ring, ring_to_json, write_text, Metadata};
use crate::report::{bijection, center_class, labels, lattice_dot, VerificationReport};

/// Environment variable overriding the subring-lattice rank bound.
pub const MAX_RANK_VAR: &str = "FUSIONKIT_MAX_RANK";

#[derive(Debug, Parser)]
#[command(name = "fusionkit", version, about = "Exact fusion rings, N-Ising data and pointed braidings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a ring from a named family and write it as JSON.
    Construct(ConstructArgs),
    /// Run a named check and report its verdicts.
    Verify(VerifyArgs),
    /// Print the subring lattice of a ring as a DOT graph.
    Lattice {
        ring: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every braiding `σ_ξ` of `(Z_M, ω_ζ)`.
    Braidings {
        #[arg(long = "M", visible_alias = "m")]
        m: u64,
        /// Restrict to one twist; all admissible twists otherwise.
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<RootOfUnity>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Müger center of `I_N` with the braiding induced by `ξ`.
    Center {
        #[arg(long = "N", visible_alias = "n")]
        n: u32,
        #[arg(long)]
        xi: RootOfUnity,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare slight degeneracy of `I_N` with non-degeneracy of `Z_{2^N}`
    /// over every `ξ` with `ξ^{2^N} = ζ`.
    DegeneracyTable {
        #[arg(long = "N", visible_alias = "n")]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        zeta: RootOfUnity,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a ring with simple dimensions {1, √2} as `I_N ⊠ B`.
    Decompose {
        ring: PathBuf,
        /// Write the step-by-step trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a basis isomorphism between two rings.
    Isomorphic {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the Müger center of a premetric group.
    Classify {
        premetric: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Ising,
    Cm,
    Nising,
    Pointed,
    MooreRead,
    Product,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long = "M", visible_alias = "m")]
    m: Option<u64>,
    #[arg(long = "N", visible_alias = "n")]
    n: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<RootOfUnity>,
    /// Cyclic orders, comma separated.
    #[arg(long, value_delimiter = ',')]
    group: Vec<u64>,
    #[arg(long)]
    left: Option<PathBuf>,
    #[arg(long)]
    right: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// `C_M ≅ I_N ⊠ pointed(Z_m)`.
    FactCm,
    /// Every proper subring of `I_N` is pointed.
    Nofact,
    /// No induced braiding on `I_N` has a non-trivial non-degenerate
    /// pointed subring.
    Primeness,
    /// Structure of a ring whose non-invertibles multiply into invertibles.
    Gty,
    /// The degeneracy table.
    Degeneracy,
    /// Braiding counts on `Z_M`.
    BraidingCount,
    /// Whether `I_{N,ζ}` can be braided.
    Twist,
    /// Self-dual non-invertibles of `C_M`.
    SelfDual,
    /// The squared-braiding scalar `s(δ, Z)`.
    IsingPairing,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    #[arg(long = "M", visible_alias = "m")]
    m: Option<u64>,
    #[arg(long = "N", visible_alias = "n")]
    n: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<RootOfUnity>,
    #[arg(long)]
    ring: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Default limits with the lattice bound taken from `FUSIONKIT_MAX_RANK`.
pub fn limits() -> Result<Limits> {
    let mut limits = Limits::default();
    if let Ok(v) = std::env::var(MAX_RANK_VAR) {
        limits.lattice_rank = v
            .trim()
            .parse()
            .with_context(|| format!("{MAX_RANK_VAR}={v:?} is not a non-negative integer"))?;
    }
    Ok(limits)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_text(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| anyhow!("missing required argument {flag}"))
}

/// Runs a command. `Ok(true)` means every verdict passed, `Ok(false)` that
/// some verdict failed; errors are usage or input problems.
pub fn run(cli: Cli) -> Result<bool> {
    let limits = limits()?;
    let start = Instant::now();
    let (mut report, out) = match cli.command {
        Command::Construct(args) => {
            construct(args)?;
            return Ok(true);
        }
        Command::Lattice { ring, out } => {
            let (ring, _) = read_ring(&ring)?;
            let lattice = subring_lattice(&ring, &limits)?;
            emit(out.as_deref(), &lattice_dot(&ring, &lattice)?)?;
            return Ok(true);
        }
        Command::Verify(args) => {
            let out = args.out.clone();
            (verify(args, &limits)?, out)
        }
        Command::Braidings { m, zeta, out } => (braidings(m, zeta)?, out),
        Command::Center { n, xi, out } => (center(n, xi)?, out),
        Command::DegeneracyTable { n, zeta, out } => (degeneracy_report(n, zeta)?, out),
        Command::Decompose { ring, trace, out } => (decompose(&ring, trace.as_deref(), &limits)?, out),
        Command::Isomorphic { first, second, out } => (isomorphic(&first, &second, &limits)?, out),
        Command::Classify { premetric, out } => (classify(&premetric)?, out),
    };
    report.finish(start.elapsed());
    emit(out.as_deref(), &report.to_json())?;
    Ok(report.passed())
}

fn construct(args: ConstructArgs) -> Result<()> {
    let mut meta = Metadata {
        family: Some(value_name(args.family)),
        ..Metadata::default()
    };
    let ring = match args.family {
        Family::Ising => build_ising(),
        Family::Cm => {
            let m = need(args.m, "--M")?;
            meta.m = Some(m);
            build_cm(m)?.ring
        }
        Family::Nising => {
            let spec = NIsingSpec::new(need(args.n, "--N")?, args.zeta.unwrap_or(RootOfUnity::ONE))?;
            meta.n = Some(spec.n());
            meta.zeta = Some(spec.zeta().to_string());
            build_nising(spec).ring().clone()
        }
        Family::Pointed => {
            if args.group.is_empty() || args.group.contains(&0) {
                bail!("--group needs positive cyclic orders, e.g. --group 2,4");
            }
            let group = FiniteAbelianGroup::from_cyclic_orders(&args.group);
            meta.group = Some(group.factors().to_vec());
            pointed_ring(&group)
        }
        Family::MooreRead => build_moore_read(),
        Family::Product => {
            let (left, _) = read_ring(&need(args.left, "--left")?)?;
            let (right, _) = read_ring(&need(args.right, "--right")?)?;
            deligne_product(&left, &right)
        }
    };
    emit(args.out.as_deref(), &ring_to_json(&ring, meta))
}

fn verify(args: VerifyArgs, limits: &Limits) -> Result<VerificationReport> {
    let theorem = value_name(args.theorem);
    let name = format!("verify --theorem {theorem}");
    let inputs = json!({
        "theorem": theorem,
        "M": args.m,
        "N": args.n,
        "zeta": args.zeta.map(|z| z.to_string()),
        "ring": args.ring.as_ref().map(|p| p.display().to_string()),
    });
    let mut report = VerificationReport::new(name, inputs);
    match args.theorem {
        Theorem::FactCm => {
            let m = need(args.m, "--M")?;
            let r = verify_fact_cm(m, limits)?;
            report.verdict("fact-cm", r.holds(), json!({ "M": m, "N": r.n, "m": r.m }));
            if let Some(w) = &r.witness {
                let spec = NIsingSpec::new(r.n, RootOfUnity::ONE)?;
                let product = deligne_product(build_nising(spec).ring(), &pointed_ring(&FiniteAbelianGroup::cyclic(r.m)));
                let cm = build_cm(m)?;
                report.witness("isomorphism", bijection(&product, &cm.ring, w));
            }
        }
        Theorem::Nofact => {
            let n = need(args.n, "--N")?;
            let r = verify_nofact(n, limits)?;
            let ring = build_nising(NIsingSpec::new(n, RootOfUnity::ONE)?).ring().clone();
            report.verdict(
                "proper-subrings-pointed",
                r.nonpointed_proper.is_empty(),
                json!({ "lattice_size": r.lattice_size, "proper": r.proper }),
            );
            report.verdict(
                "noninvertibles-faithful",
                r.nonfaithful.is_empty(),
                json!({ "noninvertibles": r.noninvertibles }),
            );
            let bad: Vec<Value> = r.nonpointed_proper.iter().map(|s| labels(&ring, s.simples())).collect();
            report.witness("nonpointed_proper", json!(bad));
            report.witness("nonfaithful", labels(&ring, &r.nonfaithful));
        }
        Theorem::Primeness => {
            let n = need(args.n, "--N")?;
            let r = verify_primeness(n, IsingPairing::derive()?, limits)?;
            report.verdict(
                "prime",
                r.holds(),
                json!({
                    "braidings": r.braidings_checked,
                    "pointed_subrings_checked": r.subrings_checked,
                    "proper_nonpointed": r.proper_nonpointed,
                }),
            );
            if let Some((xi, simples)) = &r.counterexample {
                let ring = build_cm(1 << n)?.ring;
                report.witness("counterexample", json!({ "xi": xi.to_string(), "subring": labels(&ring, simples) }));
            }
        }
        Theorem::Gty => {
            let (ring, _) = read_ring(&need(args.ring, "--ring")?)?;
            let g = gty_structure(&ring)?;
            report.verdict(
                "gty",
                g.consistent(),
                json!({
                    "is_gty": g.is_gty,
                    "n": g.n,
                    "invertibles": g.invertible_count,
                    "adjoint_rank": g.adjoint_rank,
                    "universal_order": g.universal_order,
                    "action_transitive": g.action_transitive,
                    "delta": g.delta.map(|d| ring.label(d).to_string()),
                    "delta_normal": g.delta_normal,
                }),
            );
        }
        Theorem::Degeneracy => {
            let t = degeneracy_report(need(args.n, "--N")?, need(args.zeta, "--zeta")?)?;
            report.verdicts = t.verdicts;
            report.witnesses = t.witnesses;
        }
        Theorem::BraidingCount => {
            let m = need(args.m, "--M")?;
            let counts: Vec<(RootOfUnity, usize)> = RootOfUnity::all_nth(m)
                .map(|z| Ok((z, enumerate_braidings(m, z)?.len())))
                .collect::<fusionkit_core::Result<_>>()?;
            let admissible: Vec<usize> = counts.iter().map(|&(_, c)| c).filter(|&c| c > 0).collect();
            let total: usize = admissible.iter().sum();
            let forms = enumerate_quadratic_forms(&FiniteAbelianGroup::cyclic(m), limits)?.len();
            let expected = gcd(m * m, 2 * m) as usize;
            let each_m = admissible.iter().all(|&c| c as u64 == m);
            report.verdict(
                "braiding-count",
                each_m && total == expected && forms == total,
                json!({
                    "counts": admissible,
                    "total": total,
                    "gcd(M^2,2M)": expected,
                    "quadratic_forms": forms,
                }),
            );
            let per_zeta: Vec<Value> = counts
                .iter()
                .map(|(z, c)| json!({ "zeta": z.to_string(), "count": c }))
                .collect();
            report.witness("per_zeta", json!(per_zeta));
        }
        Theorem::Twist => {
            let spec = NIsingSpec::new(need(args.n, "--N")?, need(args.zeta, "--zeta")?)?;
            let detail = match twist_obstruction(spec)? {
                TwistVerdict::Admits => json!({ "verdict": "Admits" }),
                TwistVerdict::RuledOut { reason } => json!({ "verdict": "RuledOut", "reason": reason }),
                TwistVerdict::Unknown => json!({ "verdict": "Unknown" }),
            };
            report.verdict("twist", true, detail);
        }
        Theorem::SelfDual => {
            let m = need(args.m, "--M")?;
            let sd = self_dual_noninvertibles(m)?;
            let expected = (m / 2) % 2 == 1;
            let cm = build_cm(m)?;
            let zs: Vec<usize> = sd.iter().map(|&j| cm.basis.z(j)).collect();
            report.verdict(
                "self-dual-iff-half-odd",
                sd.is_empty() != expected,
                json!({ "M": m, "self_dual": labels(&cm.ring, &zs) }),
            );
        }
        Theorem::IsingPairing => {
            let p = IsingPairing::derive()?;
            report.verdict(
                "ising-pairing",
                p.s_delta_z == RootOfUnity::MINUS_ONE,
                json!({ "s_delta_Z": p.s_delta_z.to_string(), "q_delta": p.q_delta.to_string() }),
            );
        }
    }
    Ok(report)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn braidings(m: u64, zeta: Option<RootOfUnity>) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "braidings",
        json!({ "M": m, "zeta": zeta.map(|z| z.to_string()) }),
    );
    let twists: Vec<RootOfUnity> = match zeta {
        Some(z) => vec![z],
        None => RootOfUnity::all_nth(m).collect(),
    };
    let mut rows = Vec::new();
    let mut hexagons = true;
    for z in twists {
        for b in enumerate_braidings(m, z)? {
            let q = b.quadratic_form();
            let ok = b.satisfies_hexagons();
            hexagons &= ok;
            rows.push(json!({
                "zeta": z.to_string(),
                "xi": b.xi().to_string(),
                "q": q.values().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "nondegenerate": q.radical().len() == 1,
                "hexagons": ok,
            }));
        }
    }
    report.verdict("hexagons", hexagons, json!({ "count": rows.len() }));
    report.witness("braidings", json!(rows));
    Ok(report)
}

fn center(n: u32, xi: RootOfUnity) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("center", json!({ "N": n, "xi": xi.to_string() }));
    let br = InducedBraiding::new(n, IsingPairing::derive()?, xi)?;
    let c = induced_center(&br)?;
    let ring = build_cm(br.modulus())?.ring;
    let (form, simples) = br.pointed_form();
    report.verdict(
        "center",
        true,
        json!({
            "zeta": br.zeta().to_string(),
            "center": labels(&ring, &c.center),
            "class": center_class(&c.class, |x| ring.label(x).to_string()),
        }),
    );
    report.verdict("adjoint-is-svect", c.adjoint_is_svect, json!(null));
    report.verdict("radical-matches-center", c.radical_matches, json!(null));
    let q: Vec<Value> = simples
        .iter()
        .enumerate()
        .map(|(g, &x)| json!([ring.label(x), form.value(g).to_string()]))
        .collect();
    report.witness("q_pointed", json!(q));
    let table: Vec<Vec<String>> = squared_braiding_table(&br)
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    if e.projective_only {
                        format!("{}*", e.value)
                    } else {
                        e.value.to_string()
                    }
                })
                .collect()
        })
        .collect();
    report.witness("squared_braiding", json!({ "labels": ring.labels(), "table": table }));
    Ok(report)
}

fn degeneracy_report(n: u32, zeta: RootOfUnity) -> Result<VerificationReport> {
    let t = degeneracy_criterion(n, zeta, IsingPairing::derive()?)?;
    let ring = build_cm(1 << n)?.ring;
    let mut report = VerificationReport::new("degeneracy-table", json!({ "N": n, "zeta": zeta.to_string() }));
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "xi": r.xi.to_string(),
                "class": center_class(&r.class, |x| ring.label(x).to_string()),
                "slightly_degenerate": r.slightly_degenerate,
                "pointed_nondegenerate": r.pointed_nondegenerate,
            })
        })
        .collect();
    let slightly = t.rows.iter().filter(|r| r.slightly_degenerate).count();
    report.verdict(
        "equivalence",
        t.holds(),
        json!({ "asserted": t.asserted, "rows": t.rows.len(), "slightly_degenerate": slightly }),
    );
    report.witness("rows", json!(rows));
    Ok(report)
}

fn trace_json(ring: &FusionRing, t: &DecompositionTrace) -> Result<Value> {
    let group = FiniteAbelianGroup::new(t.universal_factors.clone())?;
    let label = |x: usize| ring.label(x).to_string();
    let blocks: Vec<Value> = t
        .blocks
        .iter()
        .map(|b| match *b {
            GeneratorBlock::NonInvertible { index, z } => {
                json!({ "generator": index + 1, "kind": "non-invertible", "Z": label(z) })
            }
            GeneratorBlock::Invertible { index, a, b } => {
                json!({ "generator": index + 1, "kind": "invertible", "a": label(a), "b": label(b) })
            }
        })
        .collect();
    Ok(json!({
        "universal_factors": t.universal_factors,
        "generators": t.generators.iter().map(|&e| group.residues(e)).collect::<Vec<_>>(),
        "degree": t.degree.iter().map(|&d| group.residues(d)).collect::<Vec<_>>(),
        "blocks": blocks,
        "Z": label(t.z),
        "delta": label(t.delta),
        "translations": labels(ring, &t.translations),
        "b_tilde_generators": labels(ring, &t.b_tilde_generators),
        "b_tilde": labels(ring, &t.b_tilde),
        "complement": labels(ring, &t.complement),
        "complement_factors": t.complement_factors,
        "z_subring": labels(ring, &t.z_subring),
        "cyclic_order": t.cyclic_order,
        "cm_witness": t.cm_witness,
    }))
}

fn decompose(path: &Path, trace: Option<&Path>, limits: &Limits) -> Result<VerificationReport> {
    let (ring, _) = read_ring(path)?;
    let mut report = VerificationReport::new("decompose", json!({ "ring": path.display().to_string() }));
    match decompose_gty(&ring, limits)? {
        Decomposition::Decomposed(d) => {
            let spec = NIsingSpec::new(d.n, RootOfUnity::ONE)?;
            let assembled = deligne_product(build_nising(spec).ring(), &d.b);
            let rechecked = verify_isomorphism(&assembled, &ring, &d.witness);
            report.verdict(
                "decomposed",
                rechecked,
                json!({
                    "N": d.n,
                    "m": d.m,
                    "B": d.b_group.factors(),
                    "B_order": d.b_group.order(),
                }),
            );
            report.witness("isomorphism", bijection(&assembled, &ring, &d.witness));
            let t = trace_json(&ring, &d.trace)?;
            if let Some(p) = trace {
                let mut text = serde_json::to_string_pretty(&t)?;
                text.push('\n');
                write_text(p, &text)?;
            }
            report.witness("trace", t);
        }
        Decomposition::NotDecomposable { step, reason } => {
            report.verdict("decomposed", false, json!({ "step": step.name(), "reason": reason }));
            if let Some(p) = trace {
                let text = serde_json::to_string_pretty(&json!({ "failed_step": step.name(), "reason": reason }))?;
                write_text(p, &(text + "\n"))?;
            }
        }
    }
    Ok(report)
}

fn isomorphic(a: &Path, b: &Path, limits: &Limits) -> Result<VerificationReport> {
    let (r1, _) = read_ring(a)?;
    let (r2, _) = read_ring(b)?;
    let mut report = VerificationReport::new(
        "isomorphic",
        json!({ "first": a.display().to_string(), "second": b.display().to_string() }),
    );
    let found = ring_isomorphic(&r1, &r2, limits)?;
    report.verdict("isomorphic", found.is_some(), json!({ "ranks": [r1.rank(), r2.rank()] }));
    if let Some(phi) = found {
        report.witness("isomorphism", bijection(&r1, &r2, &phi));
    }
    Ok(report)
}

fn classify(path: &Path) -> Result<VerificationReport> {
    let q = read_premetric(path)?;
    let g = q.group().clone();
    let mut report = VerificationReport::new("classify", json!({ "premetric": path.display().to_string() }));
    let name = |x: usize| format!("{:?}", g.residues(x));
    report.verdict("quadratic", q.is_quadratic(), json!({ "group": g.factors() }));
    if !q.is_quadratic() {
        return Ok(report);
    }
    let class = q.classify_center();
    report.verdict("center", true, center_class(&class, name));
    let radical: Vec<String> = q.radical().iter().map(|&x| name(x)).collect();
    report.witness("radical", json!(radical));
    if matches!(class, CenterClass::SlightlyDegenerate { .. }) {
        if let Some(s) = split_svect_factor(&q) {
            report.witness(
                "svect_split",
                json!({
                    "u": name(s.u),
                    "complement": s.complement.iter().map(|&x| name(x)).collect::<Vec<_>>(),
                    "complement_nondegenerate": s.restricted.radical().len() == 1,
                }),
            );
        }
    }
    Ok(report)
}
