//! Report assembly and rendering for the four commands.
//!
//! A [`Report`] carries the tool identity, a digest of the raw input, the
//! problem header, and exactly one command section. It serializes to JSON
//! (machine-readable, stable field order) and to an indented text form that
//! mirrors the same structure line by line.

use serde::Serialize;
use serde_json::Value;

use crate::completion::{self, AugmentOutcome, EmbedCertificates};
use crate::error::Error;
use crate::hull::{self, HullResult};
use crate::problem::ProblemFile;
use crate::props::{self, CodeReport};
use crate::words::{FiniteLang, MapKind, Word};

pub const TOOL_NAME: &str = "thetacode";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default cap for the delay searches and the synchronization-delay search.
pub const DEFAULT_DELAY_CAP: u32 = 8;
/// Default maximum length of members enumerated from an infinite result.
pub const DEFAULT_ENUM_LEN: usize = 24;
/// Hard cap on the number of enumerated members in a report.
const ENUM_COUNT_CAP: usize = 4096;

/// Families accepted by the augment command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AugmentFamily {
    Invariant,
    Prefix,
    Circular,
    Sync,
}

impl AugmentFamily {
    pub fn name(self) -> &'static str {
        match self {
            AugmentFamily::Invariant => "invariant",
            AugmentFamily::Prefix => "prefix",
            AugmentFamily::Circular => "circular",
            AugmentFamily::Sync => "sync",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input_digest: String,
    pub alphabet: String,
    pub kind: &'static str,
    pub perm: String,
    pub words: FiniteLang,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CodeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hull: Option<HullResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augment: Option<AugmentSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<CompleteSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AugmentSection {
    pub family: AugmentFamily,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<AugmentOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sync: Option<SyncSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SyncSection {
    pub k: u32,
    /// False exactly when the input was already complete.
    pub grew: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_prime_words: Option<FiniteLang>,
    pub x_prime_automaton: String,
    pub m_automaton: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompleteSection {
    pub t: Word,
    pub certificates: EmbedCertificates,
    pub rational_expression: String,
    pub u_automaton: String,
    pub result_automaton: String,
    /// Maximum member length enumerated below.
    pub enum_len: usize,
    pub members: Vec<Word>,
    pub members_truncated: bool,
}

fn header(problem: &ProblemFile, command: &str) -> Report {
    let map = &problem.map;
    Report {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        command: command.to_string(),
        input_digest: problem.digest.clone(),
        alphabet: map.alphabet().letters().iter().collect(),
        kind: match map.kind() {
            MapKind::Morphism => "morphism",
            MapKind::Antimorphism => "antimorphism",
        },
        perm: map
            .pairs()
            .iter()
            .map(|(x, y)| format!("{x}:{y}"))
            .collect::<Vec<_>>()
            .join(","),
        words: problem.words.clone(),
        check: None,
        hull: None,
        augment: None,
        complete: None,
    }
}

// ---------------------------------------------------------------------------
// command runners

pub fn run_check(problem: &ProblemFile, delay_cap: u32, sync_cap: u32) -> Result<Report, Error> {
    let mut report = header(problem, "check");
    report.check = Some(props::analyze(
        &problem.map,
        &problem.words,
        delay_cap,
        sync_cap,
    )?);
    Ok(report)
}

pub fn run_hull(problem: &ProblemFile) -> Result<Report, Error> {
    let mut report = header(problem, "hull");
    report.hull = Some(hull::defect_report(&problem.map, &problem.words)?);
    Ok(report)
}

/// The witness override: a flag value wins over the file's `witness=` field.
pub fn run_augment(
    problem: &ProblemFile,
    family: AugmentFamily,
    witness_flag: Option<&Word>,
    k: u32,
) -> Result<Report, Error> {
    let mut report = header(problem, "augment");
    let witness = witness_flag.or(problem.witness.as_ref());
    let map = &problem.map;
    let words = &problem.words;
    let section = match family {
        AugmentFamily::Invariant => AugmentSection {
            family,
            outcome: Some(completion::augment_invariant(map, words, witness)?),
            sync: None,
        },
        AugmentFamily::Prefix => AugmentSection {
            family,
            outcome: Some(completion::augment_prefix(map, words)?),
            sync: None,
        },
        AugmentFamily::Circular => AugmentSection {
            family,
            outcome: Some(completion::augment_circular(map, words, witness)?),
            sync: None,
        },
        AugmentFamily::Sync => {
            let done = completion::complete_sync(map, words, k)?;
            AugmentSection {
                family,
                outcome: None,
                sync: Some(SyncSection {
                    k: done.k,
                    grew: done.grew,
                    x_prime_words: done.x_prime_words,
                    x_prime_automaton: done.x_prime.to_text(),
                    m_automaton: done.m.to_text(),
                }),
            }
        }
    };
    report.augment = Some(section);
    Ok(report)
}

pub fn run_complete(problem: &ProblemFile, enum_len: usize) -> Result<Report, Error> {
    let mut report = header(problem, "complete");
    let out = completion::embed_complete(&problem.map, &problem.words)?;
    let members = out.result.words_up_to(enum_len, ENUM_COUNT_CAP)?;
    report.complete = Some(CompleteSection {
        rational_expression: out.rational_expression(&problem.words),
        u_automaton: out.u.to_text(),
        result_automaton: out.result.to_text(),
        t: out.t,
        certificates: out.certificates,
        enum_len,
        members_truncated: members.len() >= ENUM_COUNT_CAP,
        members,
    });
    Ok(report)
}

// ---------------------------------------------------------------------------
// rendering

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// Indented text rendering that mirrors the JSON structure: one `key: value`
/// line per scalar, nested maps indented by two spaces, scalar arrays
/// inline, multi-line strings (automata) as indented blocks.
pub fn to_text(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut out = String::new();
    render(&value, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => {
            Some(if s.is_empty() { "ε".into() } else { s.clone() })
        }
        _ => None,
    }
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                render_entry(key, val, depth, out);
            }
        }
        other => render_entry("value", other, depth, out),
    }
}

fn render_entry(key: &str, v: &Value, depth: usize, out: &mut String) {
    if let Some(s) = scalar(v) {
        indent(out, depth);
        out.push_str(key);
        out.push_str(": ");
        out.push_str(&s);
        out.push('\n');
        return;
    }
    match v {
        Value::String(s) => {
            // multi-line string: indented block
            indent(out, depth);
            out.push_str(key);
            out.push_str(":\n");
            for line in s.lines() {
                indent(out, depth + 1);
                out.push_str(line);
                out.push('\n');
            }
        }
        Value::Array(items) => {
            if let Some(scalars) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                indent(out, depth);
                out.push_str(key);
                out.push_str(": [");
                out.push_str(&scalars.join(", "));
                out.push_str("]\n");
            } else {
                indent(out, depth);
                out.push_str(key);
                out.push_str(":\n");
                for item in items {
                    indent(out, depth + 1);
                    out.push_str("-\n");
                    render(item, depth + 2, out);
                }
            }
        }
        Value::Object(map) => {
            indent(out, depth);
            out.push_str(key);
            out.push_str(":\n");
            for (k, val) in map {
                render_entry(k, val, depth + 1, out);
            }
        }
        _ => unreachable!("scalar() covers the rest"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse_problem;

    const SIX_WORD_FILE: &str = "\
alphabet=abc
kind=antimorphism
perm=a:b,b:c,c:a
witness=aaab
words:
ab
cb
ca
ba
bc
ac
";

    const AB_SWAP_FILE: &str = "\
alphabet=ab
kind=antimorphism
perm=a:b,b:a
words:
ab
";

    #[test]
    fn check_report_on_the_running_example() {
        let p = parse_problem(SIX_WORD_FILE).unwrap();
        let r = run_check(&p, DEFAULT_DELAY_CAP, DEFAULT_DELAY_CAP).unwrap();
        let check = r.check.as_ref().unwrap();
        assert!(check.is_invariant);
        assert!(check.is_code.holds);
        assert!(!check.is_complete.holds);
        assert_eq!(check.is_complete.witness, Some(Word::from("aaa")));
        assert!(r.hull.is_none() && r.augment.is_none() && r.complete.is_none());
        assert_eq!(r.kind, "antimorphism");
        assert_eq!(r.perm, "a:b,b:c,c:a");
    }

    #[test]
    fn json_rendering_round_trips() {
        let p = parse_problem(SIX_WORD_FILE).unwrap();
        let r = run_check(&p, DEFAULT_DELAY_CAP, DEFAULT_DELAY_CAP).unwrap();
        let json = to_json(&r);
        let parsed: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, serde_json::to_value(&r).unwrap());
        assert_eq!(parsed["tool"], "thetacode");
        assert_eq!(parsed["check"]["is_code"]["holds"], true);
    }

    #[test]
    fn text_rendering_is_deterministic_and_structured() {
        let p = parse_problem(SIX_WORD_FILE).unwrap();
        let r = run_check(&p, DEFAULT_DELAY_CAP, DEFAULT_DELAY_CAP).unwrap();
        let t1 = to_text(&r);
        let t2 = to_text(&r);
        assert_eq!(t1, t2);
        assert!(t1.starts_with("tool: thetacode\n"));
        assert!(t1.contains("\ncheck:\n"));
        assert!(t1.contains("is_invariant: true"));
    }

    #[test]
    fn hull_report() {
        let p = parse_problem(
            "alphabet=ab\nkind=morphism\nperm=a:a,b:b\nwords:\na\nab\nba\n",
        )
        .unwrap();
        let r = run_hull(&p).unwrap();
        let hull = r.hull.unwrap();
        assert_eq!(hull.generators, FiniteLang::of(["a", "b"]));
        assert!(hull.defect_holds);
    }

    #[test]
    fn augment_report_uses_the_file_witness() {
        let p = parse_problem(SIX_WORD_FILE).unwrap();
        let r = run_augment(&p, AugmentFamily::Invariant, None, 1).unwrap();
        let sec = r.augment.unwrap();
        let out = sec.outcome.unwrap();
        assert_eq!(out.seed, Word::from("aaab"));
        assert_eq!(out.result.len(), 12);
    }

    #[test]
    fn augment_flag_beats_file_witness() {
        let p = parse_problem(SIX_WORD_FILE).unwrap();
        let flag = Word::from("aaaab");
        let r = run_augment(&p, AugmentFamily::Invariant, Some(&flag), 1).unwrap();
        assert_eq!(r.augment.unwrap().outcome.unwrap().seed, flag);
    }

    #[test]
    fn sync_family_emits_automata() {
        let p = parse_problem(AB_SWAP_FILE).unwrap();
        let r = run_augment(&p, AugmentFamily::Sync, None, 1).unwrap();
        let sync = r.augment.unwrap().sync.unwrap();
        assert_eq!(sync.k, 1);
        assert!(sync.grew);
        assert!(sync.x_prime_automaton.starts_with("states "));
        assert!(sync.m_automaton.contains("initial "));
    }

    #[test]
    fn complete_report_on_ab_swap() {
        let p = parse_problem(AB_SWAP_FILE).unwrap();
        let r = run_complete(&p, DEFAULT_ENUM_LEN).unwrap();
        let sec = r.complete.unwrap();
        assert_eq!(sec.t, Word::from("aaaababbbaaababbbb"));
        assert!(sec.certificates.is_code);
        assert!(sec.certificates.is_complete);
        assert!(sec.certificates.is_invariant);
        assert!(sec.members.contains(&Word::from("ab")));
        assert!(sec.members.contains(&sec.t));
        assert!(!sec.members_truncated);
        assert!(sec.rational_expression.starts_with("union(words(ab)"));
        let text = to_text(&run_complete(&p, DEFAULT_ENUM_LEN).unwrap());
        assert!(text.contains("result_automaton:"));
    }

    #[test]
    fn precondition_failures_surface_as_errors() {
        let p = parse_problem(
            "alphabet=ab\nkind=morphism\nperm=a:a,b:b\nwords:\nab\nba\n",
        )
        .unwrap();
        assert!(matches!(
            run_augment(&p, AugmentFamily::Circular, None, 1),
            Err(Error::NotInFamily { .. })
        ));
        assert!(matches!(
            run_complete(&p, DEFAULT_ENUM_LEN),
            Err(Error::UnsupportedMap(_))
        ));
    }
}
