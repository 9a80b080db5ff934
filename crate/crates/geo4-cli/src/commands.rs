//! Command implementations. Each returns its exit code and writes to the
//! given sinks, so the binary shell stays a thin argument parser.

use crate::config::CliConfig;
use crate::dsl;
use crate::exit_codes;
use geo4::geography::{self, report, Bounds, LatticePoint, PlanOutcome};
use geo4::grouppres::{coset_enumeration, CosetResult, FpGroup, Word};
use geo4::invariants::CharNumbers;
use geo4::mcg::{evaluate, Character, SurfaceModel};
use geo4::verify::{run_suite, transcript_hash, Suite};
use serde_json::json;
use std::io::Write;
use std::path::Path;

pub struct ConvertArgs {
    pub e: Option<i64>,
    pub sigma: Option<i64>,
    pub b2plus: Option<i64>,
    pub b2minus: Option<i64>,
    pub c1sq: Option<i64>,
    pub chih: Option<String>,
    pub b1: i64,
    pub json: bool,
}

/// Rebuilds the full coordinate row from any one of the coordinate pairs.
pub fn cmd_convert(args: &ConvertArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pair = match (args.e, args.sigma, args.b2plus, args.b2minus, &args.c1sq, &args.chih) {
        (Some(e), Some(sigma), None, None, None, None) => Ok((e, sigma)),
        (None, None, Some(p), Some(m), None, None) => Ok((2 + p + m + 2 * args.b1, p - m)),
        (None, None, None, None, Some(c), Some(chih)) => parse_chih(chih).map(|(num, den)| {
            // e = 12χ − c and σ = c − 8χ, demanding integrality
            let e12 = 12 * num;
            let s8 = 8 * num;
            if e12 % den != 0 || s8 % den != 0 {
                (i64::MIN, i64::MIN)
            } else {
                (e12 / den - c, c - s8 / den)
            }
        }),
        _ => Err("provide exactly one pair: --e/--sigma, --b2plus/--b2minus, or --c1sq/--chih".to_string()),
    };
    let (e, sigma) = match pair {
        Ok((i64::MIN, _)) => {
            let _ = writeln!(err, "error: chih denominator does not divide the conversion");
            return exit_codes::PARITY;
        }
        Ok(pair) => pair,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return exit_codes::DOMAIN;
        }
    };
    match CharNumbers::from_e_sigma_b1(e, sigma, args.b1) {
        Ok(chars) => {
            if args.json {
                let mut value = serde_json::to_value(chars).expect("chars serialize");
                value["fixture_hash"] = json!(report::fixture_hash());
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                let chih = chars.chih();
                let _ = writeln!(
                    out,
                    "e={} sigma={} b1={} b2plus={} b2minus={} c1sq={} chih={}/{}",
                    chars.e,
                    chars.sigma,
                    args.b1,
                    chars.b2plus().unwrap(),
                    chars.b2minus().unwrap(),
                    chars.c1sq(),
                    chih.numer(),
                    chih.denom()
                );
            }
            exit_codes::OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_codes::PARITY
        }
    }
}

fn parse_chih(text: &str) -> Result<(i64, i64), String> {
    if let Some((p, q)) = text.split_once('/') {
        let p = p.trim().parse().map_err(|_| format!("bad rational `{text}`"))?;
        let q: i64 = q.trim().parse().map_err(|_| format!("bad rational `{text}`"))?;
        if q == 0 {
            return Err("zero denominator".into());
        }
        Ok((p, q))
    } else {
        text.trim().parse().map(|p| (p, 1)).map_err(|_| format!("bad rational `{text}`"))
    }
}

pub fn cmd_plan(
    m: i64,
    n: i64,
    emit_recipe: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let point = LatticePoint::new(m, n);
    match geography::plan(point) {
        Ok(PlanOutcome::Realized(recipe)) => {
            let text = dsl::print_recipe(&recipe);
            let descriptor = geography::validate(&recipe);
            if let Some(path) = emit_recipe {
                if let Err(e) = std::fs::write(path, &text) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return exit_codes::DOMAIN;
                }
            }
            if json {
                let value = json!({
                    "m": m, "n": n,
                    "status": "realized",
                    "rule": recipe.rule,
                    "recipe": text,
                    "descriptor": descriptor.as_ref().ok().map(|d| serde_json::to_value(d).unwrap()),
                    "fixture_hash": report::fixture_hash(),
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                let _ = writeln!(out, "status: realized (rule {})", recipe.rule);
                match &descriptor {
                    Ok(d) => {
                        let _ = writeln!(
                            out,
                            "validated: e={} sigma={} pi1={:?} parity={:?} irreducible={:?}",
                            d.chars.e, d.chars.sigma, d.pi1, d.parity, d.irreducible
                        );
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: shipped recipe failed validation: {e}");
                        return exit_codes::VERIFY_FAILED;
                    }
                }
                let _ = write!(out, "{text}");
            }
            exit_codes::OK
        }
        Ok(PlanOutcome::External { citation }) => {
            if json {
                let value = json!({
                    "m": m, "n": n, "status": "external", "citation": citation,
                    "fixture_hash": report::fixture_hash(),
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                let _ = writeln!(out, "status: external ({citation})");
            }
            exit_codes::OK
        }
        Ok(PlanOutcome::Open) => {
            if json {
                let value = json!({
                    "m": m, "n": n, "status": "open",
                    "fixture_hash": report::fixture_hash(),
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                let _ = writeln!(out, "status: open");
            }
            exit_codes::OPEN_POINT
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_codes::DOMAIN
        }
    }
}

pub fn cmd_scan(
    bounds: Bounds,
    csv: Option<&Path>,
    svg: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if bounds.m_min > bounds.m_max || bounds.n_min > bounds.n_max || bounds.m_min < 1 || bounds.n_min < 1 {
        let _ = writeln!(err, "error: malformed bounds {bounds:?}");
        return exit_codes::DOMAIN;
    }
    let report_data = match geography::scan(bounds) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_codes::DOMAIN;
        }
    };
    if let Some(path) = csv {
        if let Err(e) = std::fs::write(path, report::to_csv(&report_data)) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return exit_codes::DOMAIN;
        }
    }
    if let Some(path) = svg {
        if let Err(e) = std::fs::write(path, report::to_svg(&report_data)) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return exit_codes::DOMAIN;
        }
    }
    if json {
        let value = json!({
            "bounds": serde_json::to_value(bounds).unwrap(),
            "realized": report_data.realized.len(),
            "external": report_data.external.len(),
            "open": report_data.open.len(),
            "open_points": report_data.open.iter().map(|p| json!({"m": p.m, "n": p.n})).collect::<Vec<_>>(),
            "figure_markers": report_data.figure_markers().len(),
            "fixture_hash": report_data.fixture_hash,
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        let _ = writeln!(
            out,
            "scanned [{}..{}]x[{}..{}]: {} realized, {} external, {} open ({} figure markers)",
            bounds.m_min,
            bounds.m_max,
            bounds.n_min,
            bounds.n_max,
            report_data.realized.len(),
            report_data.external.len(),
            report_data.open.len(),
            report_data.figure_markers().len()
        );
        for p in &report_data.open {
            let _ = writeln!(out, "open: ({}, {})", p.m, p.n);
        }
    }
    exit_codes::OK
}

/// Runs the named suites and, for the recipe suite, re-validates every
/// fixture recipe document on disk (or the embedded defaults).
pub fn cmd_verify(which: &str, config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let suites: Vec<Suite> = match which {
        "relations" => vec![Suite::Relations],
        "words" => vec![Suite::Words],
        "groups" => vec![Suite::Groups],
        "recipes" => vec![Suite::Recipes],
        "all" => Suite::all().to_vec(),
        other => {
            let _ = writeln!(err, "error: unknown suite `{other}`");
            return exit_codes::DOMAIN;
        }
    };
    let mut all_pass = true;
    for suite in &suites {
        for result in run_suite(*suite) {
            all_pass &= result.pass;
            let verdict = if result.pass { "PASS" } else { "FAIL" };
            let detail = if result.detail.is_empty() { String::new() } else { format!("; {}", result.detail) };
            let _ = writeln!(out, "{verdict} {}::{} [{}]{detail}", suite.name(), result.name, result.anchor);
        }
    }
    if suites.iter().any(|s| *s == Suite::Words) {
        for (name, genus, text) in word_documents(config, err) {
            let verdict = match dsl::parse_word(&text) {
                Ok(word) => {
                    let surface = SurfaceModel::standard(genus);
                    match evaluate(&surface, &word) {
                        Ok(m) => {
                            let closed = m.mat.is_identity();
                            if !closed {
                                let _ = writeln!(err, "word fixture {name}: does not close over the sphere");
                            }
                            closed
                        }
                        Err(e) => {
                            let _ = writeln!(err, "word fixture {name}: {e}");
                            false
                        }
                    }
                }
                Err(e) => {
                    let _ = writeln!(err, "word fixture {name}: {e}");
                    false
                }
            };
            all_pass &= verdict;
            let flag = if verdict { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{flag} words::fixture-{name} [factorization-closure-over-sphere]");
        }
    }
    if suites.contains(&Suite::Recipes) {
        for (name, text) in fixture_documents(config, err) {
            let verdict = match dsl::parse_recipe(&text) {
                Ok(recipe) => {
                    let round = dsl::parse_recipe(&dsl::print_recipe(&recipe)).map(|r| r == recipe);
                    match (geography::validate(&recipe), round) {
                        (Ok(_), Ok(true)) => true,
                        (Ok(_), _) => {
                            let _ = writeln!(err, "fixture {name}: round-trip mismatch");
                            false
                        }
                        (Err(e), _) => {
                            let _ = writeln!(err, "fixture {name}: {e}");
                            false
                        }
                    }
                }
                Err(e) => {
                    let _ = writeln!(err, "fixture {name}: {e}");
                    false
                }
            };
            all_pass &= verdict;
            let flag = if verdict { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{flag} recipes::fixture-{name} [recipe-fold-regression-guard]");
        }
    }
    if all_pass {
        exit_codes::OK
    } else {
        exit_codes::VERIFY_FAILED
    }
}

/// Embedded fixture documents; a fixtures directory (config or
/// `GEO4_FIXTURES`) overrides them.
pub fn fixture_documents(config: &CliConfig, err: &mut dyn Write) -> Vec<(String, String)> {
    if let Some(dir) = config.fixtures_dir() {
        let mut out = Vec::new();
        match std::fs::read_dir(&dir) {
            Ok(entries) => {
                let mut paths: Vec<_> = entries
                    .filter_map(|e| e.ok())
                    .map(|e| e.path())
                    .filter(|p| p.extension().is_some_and(|x| x == "recipe"))
                    .collect();
                paths.sort();
                for path in paths {
                    match std::fs::read_to_string(&path) {
                        Ok(text) => {
                            let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
                            out.push((name, text));
                        }
                        Err(e) => {
                            let _ = writeln!(err, "warning: cannot read {}: {e}", path.display());
                        }
                    }
                }
            }
            Err(e) => {
                let _ = writeln!(err, "warning: cannot read fixtures dir {}: {e}", dir.display());
            }
        }
        out
    } else {
        EMBEDDED_FIXTURES.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect()
    }
}

/// Word fixture documents (`<name>.g<genus>.word`); a fixtures directory
/// overrides the embedded set.
pub fn word_documents(config: &CliConfig, err: &mut dyn Write) -> Vec<(String, usize, String)> {
    let parse_name = |stem: &str| -> Option<(String, usize)> {
        let (name, g) = stem.rsplit_once(".g")?;
        Some((name.to_string(), g.parse().ok()?))
    };
    if let Some(dir) = config.fixtures_dir() {
        let mut out = Vec::new();
        if let Ok(entries) = std::fs::read_dir(&dir) {
            let mut paths: Vec<_> = entries
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().is_some_and(|x| x == "word"))
                .collect();
            paths.sort();
            for path in paths {
                let stem = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
                let Some((name, genus)) = parse_name(&stem) else {
                    let _ = writeln!(err, "warning: word fixture {stem} lacks a .g<genus> suffix");
                    continue;
                };
                if let Ok(text) = std::fs::read_to_string(&path) {
                    out.push((name, genus, text));
                }
            }
        }
        out
    } else {
        EMBEDDED_WORDS
            .iter()
            .filter_map(|(stem, text)| {
                parse_name(stem).map(|(name, genus)| (name, genus, text.to_string()))
            })
            .collect()
    }
}

pub const EMBEDDED_WORDS: &[(&str, &str)] = &[
    ("chain-square.g2", include_str!("../fixtures/chain-square.g2.word")),
    ("conjugated-chain.g2", include_str!("../fixtures/conjugated-chain.g2.word")),
    ("double.g2", include_str!("../fixtures/double.g2.word")),
    ("double-sixsub.g2", include_str!("../fixtures/double-sixsub.g2.word")),
    ("elliptic.g1", include_str!("../fixtures/elliptic.g1.word")),
];

pub const EMBEDDED_FIXTURES: &[(&str, &str)] = &[
    ("r-2-14", include_str!("../fixtures/r-2-14.recipe")),
    ("r-2-5", include_str!("../fixtures/r-2-5.recipe")),
    ("r-4-7", include_str!("../fixtures/r-4-7.recipe")),
    ("r-6-15", include_str!("../fixtures/r-6-15.recipe")),
    ("r-9-2", include_str!("../fixtures/r-9-2.recipe")),
];

pub fn cmd_recipe(path: &Path, do_validate: bool, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return exit_codes::DOMAIN;
        }
    };
    let recipe = match dsl::parse_recipe(&text) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_codes::DOMAIN;
        }
    };
    let canonical = dsl::print_recipe(&recipe);
    debug_assert_eq!(dsl::parse_recipe(&canonical).as_ref(), Ok(&recipe));
    let descriptor = if do_validate { Some(geography::validate(&recipe)) } else { None };
    if json {
        let value = json!({
            "rule": recipe.rule,
            "recipe": canonical,
            "descriptor": match &descriptor {
                Some(Ok(d)) => serde_json::to_value(d).unwrap(),
                Some(Err(e)) => json!({"error": e.to_string()}),
                None => serde_json::Value::Null,
            },
            "fixture_hash": report::fixture_hash(),
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        let _ = write!(out, "{canonical}");
    }
    match descriptor {
        Some(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_codes::VERIFY_FAILED
        }
        _ => exit_codes::OK,
    }
}

pub fn cmd_word(genus: usize, expr: &str, image_of: Option<&str>, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let word = match dsl::parse_word(expr) {
        Ok(w) => w,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_codes::DOMAIN;
        }
    };
    let surface = SurfaceModel::standard(genus);
    let matrix = match evaluate(&surface, &word) {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_codes::DOMAIN;
        }
    };
    let image = match image_of {
        Some(curve) => match geo4::mcg::twist_image(&surface, &word, curve) {
            Ok(v) => Some(v),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return exit_codes::DOMAIN;
            }
        },
        None => None,
    };
    let rows: Vec<Vec<i64>> = (0..matrix.mat.rows())
        .map(|i| matrix.mat.row(i).iter().map(|&x| x as i64).collect())
        .collect();
    // vanishing-cycle breakdown by separating type
    let mut nonseparating = 0usize;
    let mut separating = std::collections::BTreeMap::<usize, usize>::new();
    for letter in &word.letters {
        match geo4::mcg::letter_separating_type(&surface, letter) {
            Ok(0) => nonseparating += 1,
            Ok(h) => *separating.entry(h).or_insert(0) += 1,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return exit_codes::DOMAIN;
            }
        }
    }
    if json {
        let value = json!({
            "genus": genus,
            "length": word.len(),
            "character": match matrix.character { Character::Symplectic => "symplectic", Character::AntiSymplectic => "anti-symplectic" },
            "matrix": rows,
            "identity": matrix.mat.is_identity(),
            "image": image.as_ref().map(|v| v.iter().map(|&x| x as i64).collect::<Vec<_>>()),
            "breakdown": {
                "nonseparating": nonseparating,
                "separating": separating.iter().map(|(h, c)| json!({"genus": h, "count": c})).collect::<Vec<_>>(),
            },
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        let _ = writeln!(out, "length {} character {:?} identity {}", word.len(), matrix.character, matrix.mat.is_identity());
        for row in &rows {
            let _ = writeln!(out, "{row:?}");
        }
        if let Some(v) = image {
            let _ = writeln!(out, "image: {v:?}");
        }
    }
    exit_codes::OK
}

pub fn cmd_group(
    expr: &str,
    subgroup: &[String],
    cap: usize,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let group: FpGroup = match dsl::parse_group(expr) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_codes::DOMAIN;
        }
    };
    let mut sub_words: Vec<Word> = Vec::new();
    for s in subgroup {
        match dsl::parse_word_over(s, &group.gens) {
            Ok(w) => sub_words.push(w),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return exit_codes::DOMAIN;
            }
        }
    }
    let ab = group.abelianization();
    let enumeration = coset_enumeration(&group, &sub_words, cap);
    let (index, exceeded) = match enumeration {
        CosetResult::Finite(n) => (Some(n), false),
        CosetResult::Exceeded => (None, true),
    };
    let hash = transcript_hash(&[
        expr,
        &format!("{ab:?}"),
        &format!("{enumeration:?}"),
        &format!("cap={cap}"),
    ]);
    let value = json!({
        "generators": group.gens.len(),
        "relators": group.relators.len(),
        "divisors": ab.divisors.iter().map(|&d| d as i64).collect::<Vec<_>>(),
        "rank": ab.rank,
        "index": index,
        "exceeded": exceeded,
        "transcript_hash": hash,
    });
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        let _ = writeln!(
            out,
            "abelianization: divisors {:?} rank {}; coset index: {}",
            ab.divisors,
            ab.rank,
            match index {
                Some(n) => n.to_string(),
                None => format!("exceeded (cap {cap})"),
            }
        );
        let _ = writeln!(out, "transcript: {hash}");
    }
    exit_codes::OK
}
