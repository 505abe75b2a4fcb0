//! The `minrank` command line tool.
//!
//! Every subcommand prints deterministically: collections are emitted in the
//! canonical orders fixed by the library, so identical invocations produce
//! byte-identical output.  `--format json` wraps each result in an envelope
//! with `schema_version: 1`; computation failures become a structured
//! `{"error": {...}}` object with exit code 1, and usage problems exit 2.
//!
//! Weights are entered in simple-root coordinates (the adjoint convention
//! used throughout the library), not in fundamental-weight coordinates.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use minrank::folding::{build_space, rank_bookkeeping, Space};
use minrank::orbits::{
    closure_matrix, enumerate_orbits_with, generic_position_schubert, OrbitRecord,
    DEFAULT_MAX_BRUTE_FORCE,
};
use minrank::rootdata::{build_datum, RootDatum, Weight};
use minrank::weyl::{self, WeylElement, WeylGroup, DEFAULT_MAX_GROUP};
use minrank::{
    branch, bundle_rank, catalog, demazure_word, extend_weight, indices_with, weyl_character, Error,
};

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "minrank",
    version,
    about = "Exact combinatorics of minimal-rank symmetric spaces",
    long_about = "Exact computations for root systems, Weyl groups, Demazure characters and \
                  B-orbits of minimal-rank symmetric spaces.\n\n\
                  Space specs: group:<TYPE> (K x K / diag K), fold:A<odd n>=3>, fold:D<n>=4>, \
                  fold:E6, and *-products of these (e.g. group:A1*fold:A3).\n\
                  Weights are comma-separated integers in simple-root coordinates.\n\
                  Words are comma-separated 1-based simple indices; use `e` for the identity."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the supported symmetric spaces
    Catalog,
    /// Ranks, folded type and Grothendieck-group indices of a space
    Info { spec: String },
    /// The B-orbits of a space, optionally as a DOT closure diagram
    Orbits {
        spec: String,
        /// Emit the Hasse diagram of the closure order in DOT syntax
        #[arg(long)]
        dot: bool,
    },
    /// Weyl character of a dominant weight
    Character {
        r#type: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Demazure character: apply the operator of a word to a weight
    Demazure {
        r#type: String,
        word: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Branch an irreducible of the ambient group over the fixed subgroup
    Branch {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Extend a dominant weight of the fixed subgroup to the ambient group
    Extend {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Rank of the extended equivariant bundle at a dominant weight
    Rank {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Generic position of two Schubert varieties, by brute force
    Generic {
        r#type: String,
        y_word: String,
        z_word: String,
    },
    /// Run the full invariant suite for a space
    Verify {
        spec: String,
        /// Add exhaustive sweeps (larger weight boxes, Demazure identities)
        #[arg(long)]
        deep: bool,
    },
}

enum Failure {
    Usage(String),
    Computation(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Computation(e)
    }
}

type CmdResult = Result<i32, Failure>;

/// Entry point shared by the binary and the tests.  `args` excludes the
/// program name.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut argv = vec!["minrank".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            }
        }
    };
    let format = cli.format;
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Computation(e)) => {
            let envelope = json!({
                "schema_version": 1,
                "error": { "kind": e.kind(), "detail": e.to_string() },
            });
            match format {
                Format::Json => {
                    let _ = writeln!(out, "{}", pretty(&envelope));
                }
                Format::Text => {
                    let _ = writeln!(err, "error[{}]: {e}", e.kind());
                    let _ = writeln!(out, "{}", pretty(&envelope));
                }
            }
            1
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serialization cannot fail")
}

fn max_group() -> Result<usize, Failure> {
    match std::env::var("MINRANK_MAX_GROUP") {
        Ok(s) => s
            .parse()
            .map_err(|_| Failure::Usage(format!("MINRANK_MAX_GROUP={s} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_GROUP),
    }
}

fn parse_weight(s: &str, rank: usize, what: &str) -> Result<Weight, Failure> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    let coords = coords.map_err(|_| {
        Failure::Usage(format!(
            "{what} `{s}` is not a comma-separated integer vector"
        ))
    })?;
    if coords.len() != rank {
        return Err(Failure::Usage(format!(
            "{what} `{s}` has {} coordinates but the rank is {rank}",
            coords.len()
        )));
    }
    Ok(Weight::new(coords))
}

fn parse_word(s: &str, rank: usize, what: &str) -> Result<Vec<usize>, Failure> {
    if s == "e" {
        return Ok(Vec::new());
    }
    let letters: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    let letters = letters
        .map_err(|_| Failure::Usage(format!("{what} `{s}` is not a comma-separated index list")))?;
    for &i in &letters {
        if i == 0 || i > rank {
            return Err(Failure::Usage(format!(
                "{what} `{s}`: index {i} out of range 1..={rank}"
            )));
        }
    }
    Ok(letters.into_iter().map(|i| i - 1).collect())
}

struct SpaceCtx {
    space: Space,
    group: WeylGroup,
    orbits: Vec<OrbitRecord>,
}

fn space_ctx(spec: &str) -> Result<SpaceCtx, Failure> {
    let space = build_space(spec)?;
    let group = weyl::enumerate(space.datum(), max_group()?)?;
    let orbits = enumerate_orbits_with(space.datum(), &group, space.theta())?;
    Ok(SpaceCtx {
        space,
        group,
        orbits,
    })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Catalog => cmd_catalog(fmt, out),
        Cmd::Info { spec } => cmd_info(fmt, &spec, out),
        Cmd::Orbits { spec, dot } => cmd_orbits(fmt, &spec, dot, out),
        Cmd::Character { r#type, lambda } => cmd_character(fmt, &r#type, &lambda, out),
        Cmd::Demazure {
            r#type,
            word,
            lambda,
        } => cmd_demazure(fmt, &r#type, &word, &lambda, out),
        Cmd::Branch { spec, lambda } => cmd_branch(fmt, &spec, &lambda, out),
        Cmd::Extend { spec, mu } => cmd_extend(fmt, &spec, &mu, out),
        Cmd::Rank { spec, lambda } => cmd_rank(fmt, &spec, &lambda, out),
        Cmd::Generic {
            r#type,
            y_word,
            z_word,
        } => cmd_generic(fmt, &r#type, &y_word, &z_word, out),
        Cmd::Verify { spec, deep } => cmd_verify(fmt, &spec, deep, out),
    }
}

fn emit(out: &mut dyn Write, v: serde_json::Value) -> CmdResult {
    let _ = writeln!(out, "{}", pretty(&v));
    Ok(0)
}

fn cmd_catalog(fmt: Format, out: &mut dyn Write) -> CmdResult {
    let mut entries = Vec::new();
    for spec in catalog() {
        let s = build_space(spec)?;
        let ranks = rank_bookkeeping(s.datum(), s.theta());
        entries.push((spec, s, ranks));
    }
    match fmt {
        Format::Json => {
            let spaces: Vec<_> = entries
                .iter()
                .map(|(spec, s, ranks)| {
                    json!({
                        "spec": spec,
                        "type_g": s.datum().type_label(),
                        "type_k": s.folded().datum_k().type_label(),
                        "rank": s.datum().rank(),
                        "r": ranks.r,
                        "s": ranks.s,
                    })
                })
                .collect();
            emit(
                out,
                json!({ "schema_version": 1, "command": "catalog", "spaces": spaces }),
            )
        }
        Format::Text => {
            for (spec, s, ranks) in &entries {
                let _ = writeln!(
                    out,
                    "{spec:<12} G = {:<12} K = {:<6} rank {} = {} + {}",
                    s.datum().type_label(),
                    s.folded().datum_k().type_label(),
                    s.datum().rank(),
                    ranks.r,
                    ranks.s,
                );
            }
            Ok(0)
        }
    }
}

fn cmd_info(fmt: Format, spec: &str, out: &mut dyn Write) -> CmdResult {
    let ctx = space_ctx(spec)?;
    let report = indices_with(ctx.space.datum(), &ctx.group, ctx.space.theta())?;
    match fmt {
        Format::Json => emit(
            out,
            json!({
                "schema_version": 1,
                "command": "info",
                "spec": spec,
                "type_g": ctx.space.datum().type_label(),
                "rank_g": ctx.space.datum().rank(),
                "type_k": ctx.space.folded().datum_k().type_label(),
                "rank_k": ctx.space.folded().rank_k(),
                "weyl_order": ctx.group.len(),
                "indices": report,
            }),
        ),
        Format::Text => {
            let _ = writeln!(out, "space        {spec}");
            let _ = writeln!(
                out,
                "G            {} (rank {}, |W| = {})",
                ctx.space.datum().type_label(),
                ctx.space.datum().rank(),
                ctx.group.len()
            );
            let _ = writeln!(
                out,
                "K            {} (rank {})",
                ctx.space.folded().datum_k().type_label(),
                ctx.space.folded().rank_k()
            );
            let _ = writeln!(out, "rank split   r = {}, s = {}", report.r, report.s);
            let _ = writeln!(out, "orbit_count  {}", report.orbit_count);
            let _ = writeln!(out, "k_dim        {}", report.k_dim);
            let _ = writeln!(out, "free_rank    {}", report.free_rank);
            let _ = writeln!(out, "proper       {}", report.proper);
            Ok(0)
        }
    }
}

fn dot_diagram(records: &[OrbitRecord], closure: &[Vec<bool>]) -> String {
    let n = records.len();
    let mut s = String::from("digraph closure {\n  rankdir=BT;\n");
    for rec in records {
        s.push_str(&format!(
            "  o{} [label=\"{} (h={})\"];\n",
            rec.coset_id, rec.coset_id, rec.h
        ));
    }
    for a in 0..n {
        for b in 0..n {
            if a == b || !closure[a][b] {
                continue;
            }
            // covering edge: nothing strictly between
            let covering = !(0..n).any(|c| c != a && c != b && closure[a][c] && closure[c][b]);
            if covering {
                s.push_str(&format!("  o{a} -> o{b};\n"));
            }
        }
    }
    s.push_str("}\n");
    s
}

fn cmd_orbits(fmt: Format, spec: &str, dot: bool, out: &mut dyn Write) -> CmdResult {
    let ctx = space_ctx(spec)?;
    if dot {
        let closure = closure_matrix(&ctx.group, &ctx.orbits);
        let _ = write!(out, "{}", dot_diagram(&ctx.orbits, &closure));
        return Ok(0);
    }
    match fmt {
        Format::Json => emit(
            out,
            json!({
                "schema_version": 1,
                "command": "orbits",
                "spec": spec,
                "orbit_count": ctx.orbits.len(),
                "orbits": ctx.orbits,
            }),
        ),
        Format::Text => {
            let _ = writeln!(out, "{} B-orbits of {spec}", ctx.orbits.len());
            for rec in &ctx.orbits {
                let _ = writeln!(
                    out,
                    "  #{:<3} h = {:<2} size = {:<6} word = {:?} x = {:?}",
                    rec.coset_id,
                    rec.h,
                    rec.size(),
                    rec.canonical_word_1based(),
                    rec.x.word_1based(),
                );
            }
            Ok(0)
        }
    }
}

fn character_payload(
    datum: &RootDatum,
    lambda: &Weight,
    ch: &minrank::WeightPolynomial,
) -> serde_json::Value {
    let terms: Vec<_> = ch
        .terms()
        .map(|(w, c)| json!({ "weight": w.coords, "coeff": c }))
        .collect();
    json!({
        "type": datum.type_label(),
        "lambda": lambda.coords,
        "dim": serde_json::Number::from_string_unchecked(ch.coefficient_sum().to_string()),
        "terms": terms,
    })
}

fn write_character_text(out: &mut dyn Write, ch: &minrank::WeightPolynomial, head: &str) {
    let _ = writeln!(out, "{head}  dim {}", ch.coefficient_sum());
    for (w, c) in ch.terms() {
        let _ = writeln!(out, "  {w}: {c}");
    }
}

fn cmd_character(fmt: Format, label: &str, lambda: &str, out: &mut dyn Write) -> CmdResult {
    let datum = build_datum(label)?;
    let lambda = parse_weight(lambda, datum.rank(), "lambda")?;
    let ch = weyl_character(&datum, &lambda)?;
    match fmt {
        Format::Json => {
            let mut v = character_payload(&datum, &lambda, &ch);
            v["schema_version"] = json!(1);
            v["command"] = json!("character");
            emit(out, v)
        }
        Format::Text => {
            write_character_text(out, &ch, &format!("character {label} {lambda}"));
            Ok(0)
        }
    }
}

fn cmd_demazure(
    fmt: Format,
    label: &str,
    word: &str,
    lambda: &str,
    out: &mut dyn Write,
) -> CmdResult {
    let datum = build_datum(label)?;
    let word0 = parse_word(word, datum.rank(), "word")?;
    let lambda = parse_weight(lambda, datum.rank(), "lambda")?;
    let ch = demazure_word(
        &datum,
        &minrank::WeightPolynomial::monomial(lambda.clone(), 1),
        &word0,
    );
    match fmt {
        Format::Json => {
            let mut v = character_payload(&datum, &lambda, &ch);
            v["schema_version"] = json!(1);
            v["command"] = json!("demazure");
            v["word"] = json!(word0.iter().map(|&i| i + 1).collect::<Vec<_>>());
            emit(out, v)
        }
        Format::Text => {
            write_character_text(out, &ch, &format!("demazure {label} [{word}] {lambda}"));
            Ok(0)
        }
    }
}

fn cmd_branch(fmt: Format, spec: &str, lambda: &str, out: &mut dyn Write) -> CmdResult {
    let space = build_space(spec)?;
    let lambda = parse_weight(lambda, space.datum().rank(), "lambda")?;
    let result = branch(space.datum(), &lambda, space.folded())?;
    match fmt {
        Format::Json => {
            let mut v = serde_json::to_value(&result).expect("serialization cannot fail");
            v["schema_version"] = json!(1);
            v["command"] = json!("branch");
            v["spec"] = json!(spec);
            v["type_k"] = json!(space.folded().datum_k().type_label());
            emit(out, v)
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "branch {spec} {lambda}: head {} rank {}",
                result.head, result.rank
            );
            for c in &result.constituents {
                let _ = writeln!(out, "  {} x{} (dim {})", c.mu, c.mult, c.dim);
            }
            Ok(0)
        }
    }
}

fn cmd_extend(fmt: Format, spec: &str, mu: &str, out: &mut dyn Write) -> CmdResult {
    let space = build_space(spec)?;
    let mu = parse_weight(mu, space.folded().rank_k(), "mu")?;
    let lambda = extend_weight(&mu, space.folded(), space.datum())?;
    match fmt {
        Format::Json => emit(
            out,
            json!({
                "schema_version": 1,
                "command": "extend",
                "spec": spec,
                "mu": mu.coords,
                "lambda": lambda.coords,
            }),
        ),
        Format::Text => {
            let _ = writeln!(out, "{mu} extends to {lambda}");
            Ok(0)
        }
    }
}

fn cmd_rank(fmt: Format, spec: &str, lambda: &str, out: &mut dyn Write) -> CmdResult {
    let space = build_space(spec)?;
    let lambda = parse_weight(lambda, space.datum().rank(), "lambda")?;
    let rank = bundle_rank(space.datum(), &lambda, space.folded())?;
    match fmt {
        Format::Json => emit(
            out,
            json!({
                "schema_version": 1,
                "command": "rank",
                "spec": spec,
                "lambda": lambda.coords,
                "rank": serde_json::Number::from_string_unchecked(rank.to_string()),
            }),
        ),
        Format::Text => {
            let _ = writeln!(out, "{rank}");
            Ok(0)
        }
    }
}

fn cmd_generic(
    fmt: Format,
    label: &str,
    y_word: &str,
    z_word: &str,
    out: &mut dyn Write,
) -> CmdResult {
    let datum = build_datum(label)?;
    let y = WeylElement::from_word(&datum, &parse_word(y_word, datum.rank(), "y-word")?);
    let z = WeylElement::from_word(&datum, &parse_word(z_word, datum.rank(), "z-word")?);
    let gp = generic_position_schubert(&datum, &y, &z, DEFAULT_MAX_BRUTE_FORCE)?;
    match fmt {
        Format::Json => {
            let mut v = serde_json::to_value(&gp).expect("serialization cannot fail");
            v["schema_version"] = json!(1);
            v["command"] = json!("generic");
            v["type"] = json!(label);
            v["y"] = json!(y.word_1based());
            v["z"] = json!(z.word_1based());
            emit(out, v)
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "w_max = {:?}, meet set size {}, lower interval: {}",
                gp.w_max.word_1based(),
                gp.meet_set_size,
                gp.is_lower_interval
            );
            Ok(0)
        }
    }
}

fn cmd_verify(fmt: Format, spec: &str, deep: bool, out: &mut dyn Write) -> CmdResult {
    let ctx = space_ctx(spec)?;
    let report = minrank::space_report(&ctx.space, &ctx.group, &ctx.orbits, max_group()?, deep)?;
    let pass = report.all_pass();
    match fmt {
        Format::Json => {
            let _ = writeln!(
                out,
                "{}",
                pretty(&json!({
                    "schema_version": 1,
                    "command": "verify",
                    "spec": spec,
                    "deep": deep,
                    "pass": pass,
                    "claims": report.claims,
                }))
            );
        }
        Format::Text => {
            let _ = writeln!(out, "verify {spec}{}", if deep { " --deep" } else { "" });
            for c in &report.claims {
                let _ = writeln!(
                    out,
                    "{} {} — {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.id,
                    c.detail
                );
            }
            let _ = writeln!(
                out,
                "{}",
                if pass {
                    "all claims pass"
                } else {
                    "VERIFICATION FAILED"
                }
            );
        }
    }
    Ok(if pass { 0 } else { 1 })
}
