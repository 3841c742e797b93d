//! Shared oracles and random-instance generators for the integration
//! suites. Every oracle here is deliberately independent of the library's
//! automata: plain string dynamic programming over explicit word sets.
//
// Each integration-test binary compiles its own copy of this module, so
// helpers used by only one suite would otherwise warn in the others.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use theta_codes::words::{Alphabet, FiniteLang, LiteralMap, MapKind, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// star membership and factorization counting (string DP)

/// Word set grouped by length for O(1) slice lookups.
pub struct WordSet {
    by_len: Vec<HashSet<Vec<char>>>,
}

impl WordSet {
    pub fn new(x: &FiniteLang) -> Self {
        let max = x.max_len();
        let mut by_len = vec![HashSet::new(); max + 1];
        for w in x.iter() {
            by_len[w.len()].insert(w.chars().to_vec());
        }
        WordSet { by_len }
    }

    pub fn max_len(&self) -> usize {
        self.by_len.len().saturating_sub(1)
    }

    pub fn contains_slice(&self, s: &[char]) -> bool {
        self.by_len
            .get(s.len())
            .is_some_and(|set| set.contains(s))
    }
}

/// Number of factorizations of `w` over `x`, saturated at `cap`.
pub fn count_factorizations(set: &WordSet, w: &[char], cap: usize) -> usize {
    let n = w.len();
    let mut counts = vec![0usize; n + 1];
    counts[0] = 1;
    for i in 1..=n {
        for l in 1..=set.max_len().min(i) {
            if counts[i - l] > 0 && set.contains_slice(&w[i - l..i]) {
                counts[i] = (counts[i] + counts[i - l]).min(cap);
            }
        }
    }
    counts[n]
}

/// Membership of `w` in X*.
pub fn in_star(set: &WordSet, w: &[char]) -> bool {
    count_factorizations(set, w, 1) > 0
}

pub fn in_star_word(x: &FiniteLang, w: &Word) -> bool {
    in_star(&WordSet::new(x), w.chars())
}

// ---------------------------------------------------------------------------
// code oracle: brute-force double-factorization search

/// True iff no word of length ≤ `max_len` has two distinct factorizations
/// over `x`. The search walks the word tree carrying the factorization
/// counts of every prefix, so each node costs O(max word length).
pub fn oracle_is_code(alphabet: &Alphabet, x: &FiniteLang, max_len: usize) -> bool {
    if x.contains_epsilon() {
        return false;
    }
    let set = WordSet::new(x);
    let mut word: Vec<char> = Vec::with_capacity(max_len);
    let mut counts: Vec<usize> = vec![1];
    !ambiguous_below(alphabet, &set, &mut word, &mut counts, max_len)
}

fn ambiguous_below(
    alphabet: &Alphabet,
    set: &WordSet,
    word: &mut Vec<char>,
    counts: &mut Vec<usize>,
    max_len: usize,
) -> bool {
    if word.len() == max_len {
        return false;
    }
    for &c in alphabet.letters() {
        word.push(c);
        let i = word.len();
        let mut count = 0usize;
        for l in 1..=set.max_len().min(i) {
            if counts[i - l] > 0 && set.contains_slice(&word[i - l..i]) {
                count = (count + counts[i - l]).min(2);
            }
        }
        counts.push(count);
        let found = count >= 2 || ambiguous_below(alphabet, set, word, counts, max_len);
        counts.pop();
        word.pop();
        if found {
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// circularity oracle: bounded direct search

fn member_memo(set: &WordSet, s: &[char], memo: &mut HashMap<Vec<char>, bool>) -> bool {
    if let Some(&b) = memo.get(s) {
        return b;
    }
    let b = in_star(set, s);
    memo.insert(s.to_vec(), b);
    b
}

/// Searches all pairs (u, v) of non-empty words with |uv| ≤ `cap_total` for
/// a very-purity violation: uv ∈ X*, vu ∈ X*, but u ∉ X* or v ∉ X*.
pub fn oracle_purity_violation(
    alphabet: &Alphabet,
    x: &FiniteLang,
    cap_total: usize,
) -> Option<(Word, Word)> {
    let set = WordSet::new(x);
    let mut memo: HashMap<Vec<char>, bool> = HashMap::new();
    for len in 2..=cap_total {
        let total = (alphabet.len() as u64).pow(len as u32);
        let mut idx = vec![0usize; len];
        for _ in 0..total {
            let w: Vec<char> = idx.iter().map(|&i| alphabet.letter(i)).collect();
            if member_memo(&set, &w, &mut memo) {
                for cut in 1..len {
                    let (u, v) = w.split_at(cut);
                    let rotated: Vec<char> = v.iter().chain(u.iter()).copied().collect();
                    if member_memo(&set, &rotated, &mut memo)
                        && !(member_memo(&set, u, &mut memo)
                            && member_memo(&set, v, &mut memo))
                    {
                        return Some((
                            Word::new(u.iter().copied()),
                            Word::new(v.iter().copied()),
                        ));
                    }
                }
            }
            let mut pos = len;
            while pos > 0 {
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < alphabet.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    None
}

/// Bounded circularity verdict: a code with no purity violation of total
/// length ≤ `cap_total`.
pub fn oracle_is_circular(
    alphabet: &Alphabet,
    x: &FiniteLang,
    code_len: usize,
    cap_total: usize,
) -> bool {
    oracle_is_code(alphabet, x, code_len)
        && oracle_purity_violation(alphabet, x, cap_total).is_none()
}

// ---------------------------------------------------------------------------
// random instances

pub fn random_word(rng: &mut ChaCha8Rng, alphabet: &Alphabet, max_len: usize) -> Word {
    let len = rng.random_range(1..=max_len);
    Word::new((0..len).map(|_| alphabet.letter(rng.random_range(0..alphabet.len()))))
}

/// A uniformly random permutation map of either kind.
pub fn random_map(rng: &mut ChaCha8Rng, alphabet: &Alphabet) -> LiteralMap {
    let n = alphabet.len();
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        images.swap(i, rng.random_range(0..=i));
    }
    let pairs: Vec<(char, char)> = (0..n)
        .map(|i| (alphabet.letter(i), alphabet.letter(images[i])))
        .collect();
    let kind = if rng.random_bool(0.5) {
        MapKind::Morphism
    } else {
        MapKind::Antimorphism
    };
    LiteralMap::new(alphabet, &pairs, kind).expect("permutation by construction")
}

/// A random involutive antimorphism that moves at least one letter: the
/// letters are paired up by a random matching with at least one swap.
pub fn random_involution(rng: &mut ChaCha8Rng, alphabet: &Alphabet) -> LiteralMap {
    let n = alphabet.len();
    assert!(n >= 2, "an involution with a moved letter needs two letters");
    loop {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut free: Vec<usize> = (0..n).collect();
        let mut swapped = false;
        while free.len() >= 2 {
            let i = free.swap_remove(rng.random_range(0..free.len()));
            if rng.random_bool(0.7) {
                let j = free.swap_remove(rng.random_range(0..free.len()));
                perm.swap(i, j);
                swapped = true;
            }
            if free.len() < 2 {
                break;
            }
        }
        if !swapped {
            continue;
        }
        let pairs: Vec<(char, char)> = (0..n)
            .map(|i| (alphabet.letter(i), alphabet.letter(perm[i])))
            .collect();
        return LiteralMap::new(alphabet, &pairs, MapKind::Antimorphism)
            .expect("involution by construction");
    }
}

/// The orbit closure of `count` random words: always invariant, never
/// containing ε.
pub fn random_closed_set(
    rng: &mut ChaCha8Rng,
    map: &LiteralMap,
    count: usize,
    max_len: usize,
) -> FiniteLang {
    let alphabet = map.alphabet();
    let words = FiniteLang::new((0..count).map(|_| random_word(rng, alphabet, max_len)));
    map.orbit_lang(&words).expect("words are over the alphabet")
}

pub fn two_letter() -> Alphabet {
    Alphabet::parse("ab").unwrap()
}

pub fn three_letter() -> Alphabet {
    Alphabet::parse("abc").unwrap()
}

pub fn random_alphabet(rng: &mut ChaCha8Rng) -> Alphabet {
    if rng.random_bool(0.5) {
        two_letter()
    } else {
        three_letter()
    }
}
