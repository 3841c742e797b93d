//! Alphabets, words, finite languages, and literal (anti)morphisms.
//!
//! A *literal map* is induced by a permutation σ of the alphabet. A morphism
//! applies σ letter by letter; an antimorphism additionally reverses the word,
//! so `apply(uv) = apply(v)·apply(u)`. Both are length-preserving bijections
//! of A*. A set X is *invariant* under the map θ when θ(X) = X.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An ordered alphabet of distinct symbols.
///
/// The declaration order is the order used whenever ties are broken
/// "alphabetically": shortest-then-leftmost searches, witness selection,
/// and serialized transition tables all follow it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, Error> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = BTreeSet::new();
        for &c in &letters {
            if !seen.insert(c) {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Alphabet { letters })
    }

    /// Builds an alphabet from a string, one letter per `char`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // `new` rejects empty alphabets
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn letter(&self, i: usize) -> char {
        self.letters[i]
    }

    /// Cyclic successor of `c` in declaration order.
    pub fn successor(&self, c: char) -> Result<char, Error> {
        let i = self.index_of(c).ok_or(Error::UnknownLetter(c))?;
        Ok(self.letters[(i + 1) % self.letters.len()])
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A word over some alphabet; the empty word ε is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new(chars: impl IntoIterator<Item = char>) -> Self {
        Word(chars.into_iter().collect())
    }

    pub fn epsilon() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn chars(&self) -> &[char] {
        &self.0
    }

    pub fn first(&self) -> Option<char> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<char> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The prefix of length `n` (clamped to the word length).
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.0.len())].to_vec())
    }

    /// The suffix of length `n` (clamped to the word length).
    pub fn suffix(&self, n: usize) -> Word {
        let n = n.min(self.0.len());
        Word(self.0[self.0.len() - n..].to_vec())
    }

    pub fn repeat_letter(c: char, n: usize) -> Word {
        Word(std::iter::repeat_n(c, n).collect())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.len() >= self.0.len() && other.0[other.0.len() - self.0.len()..] == self.0[..]
    }

    pub fn is_factor_of(&self, other: &Word) -> bool {
        if self.0.is_empty() {
            return true;
        }
        other.0.windows(self.0.len()).any(|w| w == self.0)
    }

    /// `other⁻¹·self`: strips `other` from the front, if it is a prefix.
    pub fn strip_prefix(&self, other: &Word) -> Option<Word> {
        other
            .is_prefix_of(self)
            .then(|| Word(self.0[other.0.len()..].to_vec()))
    }

    /// A word has a *border* when some proper nonempty prefix is also a
    /// suffix; bordered words are exactly the self-overlapping ones.
    pub fn has_border(&self) -> bool {
        (1..self.0.len()).any(|l| self.0[..l] == self.0[self.0.len() - l..])
    }

    pub fn is_over(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|&c| alphabet.contains(c))
    }

    pub fn validate_over(&self, alphabet: &Alphabet) -> Result<(), Error> {
        match self.0.iter().find(|&&c| !alphabet.contains(c)) {
            Some(&c) => Err(Error::UnknownLetter(c)),
            None => Ok(()),
        }
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for &c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

// Words serialize as plain strings ("" for ε) so reports stay readable.
impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.iter().collect::<String>())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(Word::from(s.as_str()))
    }
}

/// Shortlex comparison key relative to an alphabet's declaration order.
///
/// Words containing letters outside the alphabet sort last (only relevant for
/// defensive use; callers validate first).
pub fn shortlex_key(alphabet: &Alphabet, w: &Word) -> (usize, Vec<usize>) {
    (
        w.len(),
        w.chars()
            .iter()
            .map(|&c| alphabet.index_of(c).unwrap_or(usize::MAX))
            .collect(),
    )
}

/// A finite set of words. Serializes as a plain array of words.
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct FiniteLang {
    words: BTreeSet<Word>,
}

impl FiniteLang {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Self {
        FiniteLang {
            words: words.into_iter().collect(),
        }
    }

    /// Convenience constructor, mainly for tests: `FiniteLang::of(["ab", "ba"])`.
    pub fn of<I>(words: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<Word>,
    {
        Self::new(words.into_iter().map(Into::into))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn contains_epsilon(&self) -> bool {
        self.words.contains(&Word::epsilon())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn insert(&mut self, w: Word) -> bool {
        self.words.insert(w)
    }

    pub fn remove(&mut self, w: &Word) -> bool {
        self.words.remove(w)
    }

    pub fn union_with(&self, other: &FiniteLang) -> FiniteLang {
        FiniteLang {
            words: self.words.union(&other.words).cloned().collect(),
        }
    }

    pub fn is_subset_of(&self, other: &FiniteLang) -> bool {
        self.words.is_subset(&other.words)
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn validate_over(&self, alphabet: &Alphabet) -> Result<(), Error> {
        for w in &self.words {
            w.validate_over(alphabet)?;
        }
        Ok(())
    }

    /// The words sorted shortest-first, ties by the alphabet's order.
    pub fn sorted_shortlex(&self, alphabet: &Alphabet) -> Vec<Word> {
        let mut v: Vec<Word> = self.words.iter().cloned().collect();
        v.sort_by_key(|w| shortlex_key(alphabet, w));
        v
    }
}

impl FromIterator<Word> for FiniteLang {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl<'a> IntoIterator for &'a FiniteLang {
    type Item = &'a Word;
    type IntoIter = std::collections::btree_set::Iter<'a, Word>;
    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

impl fmt::Display for FiniteLang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

/// Whether the permutation extends to words as a morphism or an antimorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Morphism,
    Antimorphism,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapKind::Morphism => write!(f, "morphism"),
            MapKind::Antimorphism => write!(f, "antimorphism"),
        }
    }
}

/// A literal (anti)morphism θ: a permutation of the alphabet extended to
/// words, reversing them in the antimorphism case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralMap {
    alphabet: Alphabet,
    kind: MapKind,
    /// perm[i] = index of the image of letter i.
    perm: Vec<usize>,
    order: u32,
}

impl LiteralMap {
    /// Builds the map from explicit letter pairs. Every alphabet letter must
    /// appear exactly once as a source, and the images must form a
    /// permutation of the alphabet.
    pub fn new(alphabet: &Alphabet, pairs: &[(char, char)], kind: MapKind) -> Result<Self, Error> {
        let n = alphabet.len();
        let mut perm: Vec<Option<usize>> = vec![None; n];
        for &(src, dst) in pairs {
            let i = alphabet.index_of(src).ok_or(Error::UnknownLetter(src))?;
            let j = alphabet.index_of(dst).ok_or(Error::UnknownLetter(dst))?;
            if perm[i].is_some() {
                return Err(Error::BadPermutation(format!(
                    "letter '{src}' is mapped twice"
                )));
            }
            perm[i] = Some(j);
        }
        let mut image_seen = vec![false; n];
        let mut flat = Vec::with_capacity(n);
        for (i, p) in perm.into_iter().enumerate() {
            let j = p.ok_or_else(|| {
                Error::BadPermutation(format!("letter '{}' has no image", alphabet.letter(i)))
            })?;
            if image_seen[j] {
                return Err(Error::BadPermutation(format!(
                    "letter '{}' is the image of two letters",
                    alphabet.letter(j)
                )));
            }
            image_seen[j] = true;
            flat.push(j);
        }
        let mut map = LiteralMap {
            alphabet: alphabet.clone(),
            kind,
            perm: flat,
            order: 0,
        };
        map.order = map.compute_order();
        Ok(map)
    }

    /// The identity morphism on `alphabet`.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let pairs: Vec<(char, char)> = alphabet.letters().iter().map(|&c| (c, c)).collect();
        Self::new(alphabet, &pairs, MapKind::Morphism).expect("identity is a permutation")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    /// The letter pairs (src, dst) in alphabet order.
    pub fn pairs(&self) -> Vec<(char, char)> {
        self.perm
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.alphabet.letter(i), self.alphabet.letter(j)))
            .collect()
    }

    pub fn apply_letter(&self, c: char) -> Result<char, Error> {
        let i = self.alphabet.index_of(c).ok_or(Error::UnknownLetter(c))?;
        Ok(self.alphabet.letter(self.perm[i]))
    }

    /// Letter image by index (infallible; used by the automata engine).
    pub fn image_index(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// Applies θ to a word: substitute letterwise, reversing first for
    /// antimorphisms.
    pub fn apply(&self, w: &Word) -> Result<Word, Error> {
        let mapped: Result<Vec<char>, Error> = match self.kind {
            MapKind::Morphism => w.chars().iter().map(|&c| self.apply_letter(c)).collect(),
            MapKind::Antimorphism => w
                .chars()
                .iter()
                .rev()
                .map(|&c| self.apply_letter(c))
                .collect(),
        };
        Ok(Word::new(mapped?))
    }

    /// Applies θ `n` times.
    pub fn apply_pow(&self, w: &Word, n: u32) -> Result<Word, Error> {
        let mut out = w.clone();
        for _ in 0..n {
            out = self.apply(&out)?;
        }
        Ok(out)
    }

    /// The smallest n ≥ 1 with θⁿ = id, found by iterating `apply` on a probe
    /// word that contains every letter (the first letter doubled, so that no
    /// odd antimorphism power can fix it on alphabets of two or more letters).
    fn compute_order(&self) -> u32 {
        let probe = Word::new(
            std::iter::once(self.alphabet.letter(0)).chain(self.alphabet.letters().iter().copied()),
        );
        let mut w = self.apply(&probe).expect("probe is over the alphabet");
        let mut n = 1u32;
        while w != probe {
            w = self.apply(&w).expect("images stay over the alphabet");
            n += 1;
        }
        n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Whether σ fixes every letter.
    pub fn is_identity_on_letters(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The orbit {θⁱ(w) : 0 ≤ i < order} as a set.
    pub fn orbit(&self, w: &Word) -> Result<BTreeSet<Word>, Error> {
        let mut out = BTreeSet::new();
        let mut cur = w.clone();
        for _ in 0..self.order {
            out.insert(cur.clone());
            cur = self.apply(&cur)?;
        }
        Ok(out)
    }

    /// The θ-closure of a finite set: the union of the orbits of its words.
    /// Idempotent, and the smallest invariant superset.
    pub fn orbit_lang(&self, x: &FiniteLang) -> Result<FiniteLang, Error> {
        let mut out = BTreeSet::new();
        for w in x {
            out.extend(self.orbit(w)?);
        }
        Ok(FiniteLang::new(out))
    }

    /// Whether θ(X) = X.
    pub fn is_invariant(&self, x: &FiniteLang) -> Result<bool, Error> {
        let image: BTreeSet<Word> = x
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<_, _>>()?;
        Ok(image.iter().eq(x.iter()))
    }
}
