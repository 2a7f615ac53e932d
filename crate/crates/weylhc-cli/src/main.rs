//! Batch command-line front end: build character tables, run the
//! restriction-ambiguity checker, verify the G2 cyclotomic factorisation
//! table, and emit Schur-element / fake-degree / relative-Weyl-group reports.
//!
//! Exit codes: 0 success; 1 unexpected ambiguity or identity mismatch;
//! 2 bad type specification or arguments; 3 enumeration bound exceeded;
//! 4 internal error.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use weylhc::chartab::{char_table, decompose, restrict, FusionData};
use weylhc::coxeter::{
    normalizer_splitting_check, parabolic_subgroup, relative_weyl_group, CoxeterGroup,
    DEFAULT_BOUND, MAX_BOUND,
};
use weylhc::error::Error;
use weylhc::hcseries::{run_proposition_check, CheckConfig};
use weylhc::hecke::{
    attach_phi_labels, fake_degrees, poincare_index, schur_a1, schur_dihedral, schur_g2,
    table1_identities,
};
use weylhc::rootdata::{CartanType, SimpleType};

#[derive(Parser)]
#[command(
    name = "weylhc",
    version,
    about = "Exact Coxeter-group and Hecke-algebra combinatorics",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutFormat>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Enumeration bound (number of group elements). Also settable through
    /// WEYLHC_BOUND and a config file; flags win.
    #[arg(long, global = true)]
    bound: Option<u64>,

    /// Optional key=value config file (lowest precedence).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Tsv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and emit character tables (chartab-v1).
    Chartab {
        /// Cartan types, e.g. "G2", "B2xA1", "I2(8)".
        #[arg(required = true)]
        types: Vec<String>,
    },
    /// Run the restriction-ambiguity checker.
    Check {
        #[arg(required = true)]
        types: Vec<String>,
        /// Hecke parameter k (for G2: parameters (q, q^{2k-1}), k in {1,2,5}).
        #[arg(long)]
        k: Option<i64>,
        /// Admit E6 (costly generic table).
        #[arg(long = "include-e6")]
        include_e6: bool,
        /// Include per-parabolic restriction vectors in reports.
        #[arg(long = "emit-restriction-vectors")]
        emit_restriction_vectors: bool,
    },
    /// Verify the six cyclotomic identities of the G2 factorisation table.
    Table1 {
        /// Restrict to one parameter row (k in {1,2,5}).
        #[arg(long)]
        k: Option<i64>,
    },
    /// Relative Weyl group N_W(W_J)/W_J and the normalizer splitting check.
    Relweyl {
        r#type: String,
        /// Comma-separated 1-based simple-reflection indices.
        #[arg(long = "J", value_delimiter = ',', required = true)]
        j: Vec<usize>,
    },
    /// Schur elements for A1 (parameter q^k) or I2(m)/G2.
    Schur {
        r#type: String,
        #[arg(long, default_value_t = 1)]
        k: i64,
    },
    /// Fake degrees and b-invariants.
    Fakedeg { r#type: String },
    /// Restriction of every irreducible character to a standard parabolic.
    Restrict {
        r#type: String,
        #[arg(long = "J", value_delimiter = ',', required = true)]
        j: Vec<usize>,
    },
}

struct Settings {
    format: OutFormat,
    out: Option<PathBuf>,
    bound: u64,
    config_k: Option<i64>,
}

fn load_settings(cli: &Cli) -> Result<Settings, String> {
    // Config file (lowest precedence): key=value lines.
    let mut cfg: BTreeMap<String, String> = BTreeMap::new();
    if let Some(path) = &cli.config {
        let text = fs::read_to_string(path).map_err(|e| format!("config {path:?}: {e}"))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(format!("config line without '=': {line}"));
            };
            cfg.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    let parse_bound = |s: &str| {
        s.parse::<u64>()
            .map_err(|e| format!("bad bound '{s}': {e}"))
    };
    let mut bound = DEFAULT_BOUND;
    if let Some(v) = cfg.get("bound") {
        bound = parse_bound(v)?;
    }
    if let Ok(v) = std::env::var("WEYLHC_BOUND") {
        bound = parse_bound(&v)?;
    }
    if let Some(v) = cli.bound {
        bound = v;
    }
    if bound == 0 || bound > MAX_BOUND {
        return Err(format!("bound must be between 1 and {MAX_BOUND}"));
    }
    let mut format = OutFormat::Json;
    if let Some(v) = cfg.get("format") {
        format = match v.as_str() {
            "json" => OutFormat::Json,
            "tsv" => OutFormat::Tsv,
            "text" => OutFormat::Text,
            other => return Err(format!("bad format '{other}' in config")),
        };
    }
    if let Some(v) = cli.format {
        format = v;
    }
    let config_k = match cfg.get("k") {
        Some(v) => Some(v.parse::<i64>().map_err(|e| format!("bad k '{v}': {e}"))?),
        None => None,
    };
    Ok(Settings {
        format,
        out: cli.out.clone(),
        bound,
        config_k,
    })
}

fn emit(settings: &Settings, data: &str) -> Result<(), String> {
    match &settings.out {
        Some(path) => fs::write(path, data).map_err(|e| format!("writing {path:?}: {e}")),
        None => {
            println!("{data}");
            Ok(())
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::InvalidType(_) | Error::Domain(_) => 2,
        Error::BoundExceeded { .. } => 3,
        Error::NotImplemented(_) | Error::Internal(_) => 4,
    }
}

fn parse_types(specs: &[String]) -> Result<Vec<CartanType>, Error> {
    specs.iter().map(|s| s.parse()).collect()
}

fn parse_j(j: &[usize], rank: usize) -> Result<Vec<usize>, Error> {
    let mut out = Vec::new();
    for &x in j {
        if x == 0 || x > rank {
            return Err(Error::Domain(format!(
                "J index {x} out of range 1..={rank} (indices are 1-based)"
            )));
        }
        out.push(x - 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn run(cli: &Cli, settings: &Settings) -> Result<u8, Error> {
    match &cli.command {
        Command::Chartab { types } => {
            let types = parse_types(types)?;
            let mut docs = Vec::new();
            let mut tsv = String::new();
            for t in &types {
                let group = CoxeterGroup::build(t, settings.bound)?;
                let mut table = char_table(&group)?;
                attach_phi_labels(&mut table)?;
                match settings.format {
                    OutFormat::Json => docs.push(serde_json::to_value(table.to_json()).unwrap()),
                    OutFormat::Tsv | OutFormat::Text => {
                        tsv.push_str(&format!("# {t}\n"));
                        tsv.push_str(&table.to_tsv());
                    }
                }
            }
            let payload = match settings.format {
                OutFormat::Json => {
                    if docs.len() == 1 {
                        serde_json::to_string_pretty(&docs[0]).unwrap()
                    } else {
                        serde_json::to_string_pretty(&docs).unwrap()
                    }
                }
                _ => tsv.trim_end().to_string(),
            };
            emit(settings, &payload).map_err(Error::Internal)?;
            Ok(0)
        }
        Command::Check {
            types,
            k,
            include_e6,
            emit_restriction_vectors,
        } => {
            let types = parse_types(types)?;
            let k = k.or(settings.config_k);
            if let Some(kv) = k {
                // The G2 principal-series family admits k in {1, 2, 5}.
                if types.iter().any(|t| t.components == [SimpleType::G2])
                    && ![1, 2, 5].contains(&kv)
                {
                    return Err(Error::Domain(format!(
                        "k={kv} invalid for G2; the admissible parameters are k in {{1, 2, 5}}"
                    )));
                }
            }
            let cfg = CheckConfig {
                bound: settings.bound,
                k,
                include_e6: *include_e6,
            };
            let reports = run_proposition_check(&types, &cfg);
            let all_expected = reports.iter().all(|r| r.matches_expectation);
            match settings.format {
                OutFormat::Json => {
                    let docs: Vec<_> = reports
                        .iter()
                        .map(|r| r.to_json(*emit_restriction_vectors))
                        .collect();
                    emit(settings, &serde_json::to_string_pretty(&docs).unwrap())
                        .map_err(Error::Internal)?;
                }
                _ => {
                    let mut text = String::new();
                    for r in &reports {
                        text.push_str(&format!(
                            "{}: {} pair(s), expectation {:?}, {}\n",
                            r.ctype,
                            r.pairs.len(),
                            r.expectation,
                            if r.matches_expectation {
                                "as expected"
                            } else {
                                "UNEXPECTED"
                            }
                        ));
                        for p in &r.pairs {
                            text.push_str(&format!(
                                "  {{{}, {}}}: {}\n",
                                p.labels.0,
                                p.labels.1,
                                match &p.separation {
                                    weylhc::hcseries::Separation::Degree => {
                                        "separated by degree".to_string()
                                    }
                                    weylhc::hcseries::Separation::Schur { witness } => format!(
                                        "separated by Schur elements: {} vs {}",
                                        witness.0.value, witness.1.value
                                    ),
                                    weylhc::hcseries::Separation::Unresolved =>
                                        "unresolved (no Hecke data supplied)".to_string(),
                                }
                            ));
                        }
                        if let Some(doc) = &r.documented {
                            text.push_str(&format!(
                                "  documented exceptional family: dimension {} ({})\n",
                                doc.dimension, doc.citation
                            ));
                        }
                        if let Some(err) = &r.error {
                            text.push_str(&format!("  error: {err}\n"));
                        }
                    }
                    emit(settings, text.trim_end()).map_err(Error::Internal)?;
                }
            }
            Ok(if all_expected { 0 } else { 1 })
        }
        Command::Table1 { k } => {
            let rows = table1_identities(*k)?;
            let mut all_hold = true;
            let mut text = String::new();
            for row in &rows {
                all_hold &= row.holds;
                text.push_str(&format!(
                    "k={} b={}: Φ3(q^{})·Φ6(q^{}) = {} {} expansion {}\n",
                    row.k,
                    row.b,
                    row.k + row.b as i64 - 2,
                    row.k - row.b as i64 + 1,
                    row.claimed,
                    if row.holds { "=" } else { "≠" },
                    row.lhs
                ));
            }
            match settings.format {
                OutFormat::Json => {
                    let docs: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "k": r.k,
                                "b": r.b,
                                "claimed": r.claimed.to_string(),
                                "computed": r.computed.to_string(),
                                "expansion": r.lhs.to_string(),
                                "holds": r.holds,
                            })
                        })
                        .collect();
                    emit(settings, &serde_json::to_string_pretty(&docs).unwrap())
                        .map_err(Error::Internal)?;
                }
                _ => emit(settings, text.trim_end()).map_err(Error::Internal)?,
            }
            Ok(if all_hold { 0 } else { 1 })
        }
        Command::Relweyl { r#type, j } => {
            let t: CartanType = r#type.parse()?;
            let group = CoxeterGroup::build(&t, settings.bound)?;
            let j = parse_j(j, group.rank())?;
            let rw = relative_weyl_group(&group, &j)?;
            let split = normalizer_splitting_check(&group, &j)?;
            let payload = match settings.format {
                OutFormat::Json => serde_json::to_string_pretty(&json!({
                    "cartan_type": t.to_string(),
                    "j": j.iter().map(|x| x + 1).collect::<Vec<_>>(),
                    "subgroup_order": rw.subgroup_order,
                    "normalizer_order": rw.normalizer_order,
                    "quotient_order": rw.order(),
                    "split": split.split,
                    "section_words": split.section.as_ref().map(|sec| sec
                        .iter()
                        .map(|&w| group.reduced_word(w).iter().map(|x| x + 1).collect::<Vec<_>>())
                        .collect::<Vec<_>>()),
                }))
                .unwrap(),
                _ => format!(
                    "{} J={:?}: |W_J| = {}, |N_W(W_J)| = {}, quotient order {}, split: {}",
                    t,
                    j.iter().map(|x| x + 1).collect::<Vec<_>>(),
                    rw.subgroup_order,
                    rw.normalizer_order,
                    rw.order(),
                    split.split
                ),
            };
            emit(settings, &payload).map_err(Error::Internal)?;
            Ok(0)
        }
        Command::Schur { r#type, k } => {
            let t: CartanType = r#type.parse()?;
            let k = *k;
            let elements: Vec<(String, String, Option<String>)> = match t.components[..] {
                [SimpleType::A(1)] => {
                    let (triv, sign) = schur_a1(k)?;
                    vec![
                        (triv.label.to_string(), triv.value.to_string(), None),
                        (sign.label.to_string(), sign.value.to_string(), None),
                    ]
                }
                [SimpleType::G2] | [SimpleType::I2(_)] => {
                    let m = match t.components[0] {
                        SimpleType::G2 => 6,
                        SimpleType::I2(m) => m,
                        _ => unreachable!(),
                    };
                    let params = weylhc::hcseries::params_for(t.components[0], k).unwrap();
                    let schur = schur_dihedral(m, &params)?;
                    schur
                        .iter()
                        .map(|s| {
                            // G2 two-dimensional elements carry the
                            // closed-form cyclotomic factorisation.
                            let factored = match (&t.components[0], &s.label) {
                                (SimpleType::G2, weylhc::chartab::IrrLabel::DihedralTwoDim(j))
                                    if [1, 2, 5].contains(&k) =>
                                {
                                    schur_g2(k, *j as u8)
                                        .ok()
                                        .map(|g| format!("2 · q^{} · {}", g.q_shift, g.factors))
                                }
                                _ => None,
                            };
                            (s.label.to_string(), s.value.to_string(), factored)
                        })
                        .collect()
                }
                _ => {
                    return Err(Error::NotImplemented(format!(
                        "Schur elements are implemented for A1 and I2(m)/G2, not {t}"
                    )))
                }
            };
            let payload = match settings.format {
                OutFormat::Json => serde_json::to_string_pretty(&json!({
                    "cartan_type": t.to_string(),
                    "k": k,
                    "schur_elements": elements
                        .iter()
                        .map(|(l, v, f)| json!({
                            "label": l,
                            "value": v,
                            "factorisation": f,
                        }))
                        .collect::<Vec<_>>(),
                }))
                .unwrap(),
                _ => elements
                    .iter()
                    .map(|(l, v, f)| match f {
                        Some(f) => format!("{l}: {v}   [{f}]"),
                        None => format!("{l}: {v}"),
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(settings, &payload).map_err(Error::Internal)?;
            Ok(0)
        }
        Command::Fakedeg { r#type } => {
            let t: CartanType = r#type.parse()?;
            let group = CoxeterGroup::build(&t, settings.bound)?;
            let mut table = char_table(&group)?;
            attach_phi_labels(&mut table)?;
            let fds = fake_degrees(&table)?;
            let payload = match settings.format {
                OutFormat::Json => serde_json::to_string_pretty(&json!({
                    "cartan_type": t.to_string(),
                    "poincare_index_full": poincare_index(&group, &[]).to_string(),
                    "fake_degrees": table
                        .irreducibles
                        .iter()
                        .zip(&fds)
                        .map(|(irr, fd)| json!({
                            "label": irr.display_label(),
                            "poly": fd.poly.to_string(),
                            "b_invariant": fd.b_invariant,
                        }))
                        .collect::<Vec<_>>(),
                }))
                .unwrap(),
                _ => table
                    .irreducibles
                    .iter()
                    .zip(&fds)
                    .map(|(irr, fd)| {
                        format!(
                            "{}: {} (b = {})",
                            irr.display_label(),
                            fd.poly,
                            fd.b_invariant
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(settings, &payload).map_err(Error::Internal)?;
            Ok(0)
        }
        Command::Restrict { r#type, j } => {
            let t: CartanType = r#type.parse()?;
            let group = CoxeterGroup::build(&t, settings.bound)?;
            let j = parse_j(j, group.rank())?;
            let mut table = char_table(&group)?;
            attach_phi_labels(&mut table)?;
            let (sub_table, fusion, sub_name) = if j.is_empty() {
                (None, FusionData::trivial(&group), "1".to_string())
            } else {
                let sub = parabolic_subgroup(&group, &j)?;
                let mut st = char_table(&sub.group)?;
                attach_phi_labels(&mut st)?;
                let fusion = FusionData::from_parabolic(&group, &sub);
                let name = sub.sub_type.to_string();
                (Some(st), fusion, name)
            };
            let mut lines = Vec::new();
            for irr in &table.irreducibles {
                let restricted = restrict(&irr.values, &fusion);
                let desc = match &sub_table {
                    Some(st) => {
                        let parts = decompose(st, &restricted)?;
                        parts
                            .iter()
                            .map(|(i, m)| {
                                let lbl = st.irreducibles[*i].display_label();
                                if m == &1u32.into() {
                                    lbl
                                } else {
                                    format!("{m}*{lbl}")
                                }
                            })
                            .collect::<Vec<_>>()
                            .join(" + ")
                    }
                    None => format!("{}*triv", irr.degree()),
                };
                lines.push((irr.display_label(), desc));
            }
            let payload = match settings.format {
                OutFormat::Json => serde_json::to_string_pretty(&json!({
                    "cartan_type": t.to_string(),
                    "parabolic": sub_name,
                    "j": j.iter().map(|x| x + 1).collect::<Vec<_>>(),
                    "restrictions": lines
                        .iter()
                        .map(|(l, d)| json!({ "character": l, "decomposition": d }))
                        .collect::<Vec<_>>(),
                }))
                .unwrap(),
                _ => lines
                    .iter()
                    .map(|(l, d)| format!("Res({l}) = {d}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(settings, &payload).map_err(Error::Internal)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match load_settings(&cli) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(&cli, &settings) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
