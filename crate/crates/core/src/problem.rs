//! The problem-file format shared by every CLI command.
//!
//! ```text
//! alphabet=abc
//! kind=antimorphism
//! perm=a:b,b:c,c:a
//! witness=aaab        # optional
//! words:
//! ab
//! cb                  # one word per line, '#' starts a comment
//! ```
//!
//! Parsing is total: every rejection carries the 1-based line number of the
//! offending line. Blank lines and comments are allowed anywhere; the
//! directives must appear in the order shown.

use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::words::{Alphabet, FiniteLang, LiteralMap, MapKind, Word};

/// A parsed problem: the map (which owns the alphabet), the word set, and
/// an optional witness override for the augmentation commands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub map: LiteralMap,
    pub words: FiniteLang,
    pub witness: Option<Word>,
    /// Hex SHA-256 of the raw input text, echoed in reports.
    pub digest: String,
}

impl ProblemFile {
    pub fn alphabet(&self) -> &Alphabet {
        self.map.alphabet()
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Strips an end-of-line comment and surrounding whitespace.
fn payload(raw: &str) -> &str {
    match raw.find('#') {
        Some(i) => raw[..i].trim(),
        None => raw.trim(),
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, Error> {
    let digest = {
        let d = Sha256::digest(text.as_bytes());
        d.iter().map(|b| format!("{b:02x}")).collect::<String>()
    };

    // (line number, content) for every non-blank line after comment stripping
    let lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, payload(raw)))
        .filter(|(_, s)| !s.is_empty());

    #[derive(PartialEq)]
    enum Stage {
        Alphabet,
        Kind,
        Perm,
        WitnessOrWords,
        Words,
    }

    let mut stage = Stage::Alphabet;
    let mut alphabet: Option<Alphabet> = None;
    let mut kind: Option<MapKind> = None;
    let mut map: Option<LiteralMap> = None;
    let mut witness: Option<(usize, Word)> = None;
    let mut words = Vec::new();
    let mut last_line = 0;

    for (no, line) in lines {
        last_line = no;
        match stage {
            Stage::Alphabet => {
                let Some(rest) = line.strip_prefix("alphabet=") else {
                    return Err(err(no, format!("expected `alphabet=<letters>`, found `{line}`")));
                };
                let a = Alphabet::parse(rest).map_err(|e| err(no, e.to_string()))?;
                alphabet = Some(a);
                stage = Stage::Kind;
            }
            Stage::Kind => {
                let Some(rest) = line.strip_prefix("kind=") else {
                    return Err(err(no, format!("expected `kind=<morphism|antimorphism>`, found `{line}`")));
                };
                kind = Some(match rest {
                    "morphism" => MapKind::Morphism,
                    "antimorphism" => MapKind::Antimorphism,
                    other => {
                        return Err(err(no, format!("unknown kind `{other}` (expected morphism or antimorphism)")));
                    }
                });
                stage = Stage::Perm;
            }
            Stage::Perm => {
                let Some(rest) = line.strip_prefix("perm=") else {
                    return Err(err(no, format!("expected `perm=<x:y[,x:y...]>`, found `{line}`")));
                };
                let mut pairs = Vec::new();
                for part in rest.split(',') {
                    let part = part.trim();
                    let mut it = part.chars();
                    match (it.next(), it.next(), it.next(), it.next()) {
                        (Some(x), Some(':'), Some(y), None) => pairs.push((x, y)),
                        _ => {
                            return Err(err(no, format!("malformed pair `{part}` (expected `x:y`)")));
                        }
                    }
                }
                let a = alphabet.as_ref().expect("stage order");
                let k = kind.expect("stage order");
                map = Some(LiteralMap::new(a, &pairs, k).map_err(|e| err(no, e.to_string()))?);
                stage = Stage::WitnessOrWords;
            }
            Stage::WitnessOrWords => {
                if let Some(rest) = line.strip_prefix("witness=") {
                    let w = Word::from(rest);
                    w.validate_over(alphabet.as_ref().expect("stage order"))
                        .map_err(|e| err(no, e.to_string()))?;
                    if w.is_empty() {
                        return Err(err(no, "witness must not be empty"));
                    }
                    witness = Some((no, w));
                } else if line == "words:" {
                    stage = Stage::Words;
                } else {
                    return Err(err(no, format!("expected `witness=<word>` or `words:`, found `{line}`")));
                }
            }
            Stage::Words => {
                if line.contains(char::is_whitespace) {
                    return Err(err(no, format!("a word line must hold a single word, found `{line}`")));
                }
                let w = Word::from(line);
                w.validate_over(alphabet.as_ref().expect("stage order"))
                    .map_err(|e| err(no, e.to_string()))?;
                words.push(w);
            }
        }
    }

    if stage != Stage::Words {
        let missing = match stage {
            Stage::Alphabet => "alphabet=",
            Stage::Kind => "kind=",
            Stage::Perm => "perm=",
            _ => "words:",
        };
        return Err(err(last_line + 1, format!("missing `{missing}` section")));
    }

    Ok(ProblemFile {
        map: map.expect("stage order"),
        words: FiniteLang::new(words),
        witness: witness.map(|(_, w)| w),
        digest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIX_WORD_FILE: &str = "\
# the running example
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

    #[test]
    fn parses_the_running_example() {
        let p = parse_problem(SIX_WORD_FILE).unwrap();
        assert_eq!(p.alphabet().letters(), &['a', 'b', 'c']);
        assert_eq!(p.map.kind(), MapKind::Antimorphism);
        assert_eq!(p.map.order(), 6);
        assert_eq!(p.witness, Some(Word::from("aaab")));
        assert_eq!(
            p.words,
            FiniteLang::of(["ab", "cb", "ca", "ba", "bc", "ac"])
        );
        assert_eq!(p.digest.len(), 64);
    }

    #[test]
    fn digest_is_stable_and_input_sensitive() {
        let p1 = parse_problem(SIX_WORD_FILE).unwrap();
        let p2 = parse_problem(SIX_WORD_FILE).unwrap();
        assert_eq!(p1.digest, p2.digest);
        let other = parse_problem(&SIX_WORD_FILE.replace("witness=aaab\n", "")).unwrap();
        assert_ne!(p1.digest, other.digest);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\n# leading\nalphabet=ab # trailing\n\nkind=morphism\nperm=a:a,b:b\nwords:\nab # fine\n\nba\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.words, FiniteLang::of(["ab", "ba"]));
        assert!(p.witness.is_none());
    }

    #[test]
    fn errors_carry_line_numbers() {
        // wrong first directive
        let e = parse_problem("kind=morphism\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        // bad kind value
        let e = parse_problem("alphabet=ab\nkind=identity\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        // malformed pair
        let e = parse_problem("alphabet=ab\nkind=morphism\nperm=ab\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        // non-bijective permutation
        let e = parse_problem("alphabet=ab\nkind=morphism\nperm=a:a,b:a\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        // word outside the alphabet
        let e = parse_problem("alphabet=ab\nkind=morphism\nperm=a:a,b:b\nwords:\nac\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }));
        // missing words section
        let e = parse_problem("alphabet=ab\nkind=morphism\nperm=a:a,b:b\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
        // witness after words:
        let e =
            parse_problem("alphabet=ab\nkind=morphism\nperm=a:a,b:b\nwords:\nwitness=ab\n")
                .unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }));
    }

    #[test]
    fn empty_words_section_parses_to_an_empty_set() {
        let p = parse_problem("alphabet=ab\nkind=morphism\nperm=a:a,b:b\nwords:\n").unwrap();
        assert!(p.words.is_empty());
    }
}
