//! Constructive augmentation and completion: the orbit block Z that
//! augments a non-complete invariant code, family-preserving augmentations
//! (prefix, synchronized, circular), and the embedding of a regular
//! invariant code into a complete one for involutive antimorphisms.

use serde::Serialize;

use crate::error::Error;
use crate::lang::RegularLang;
use crate::props;
use crate::words::{shortlex_key, Alphabet, FiniteLang, LiteralMap, MapKind, Word};

/// Cap on candidate words scanned by the prefix-augmentation search.
const PREFIX_SEARCH_BUDGET: usize = 20_000;
/// Cap on the extension length tried by `make_overlap_free`.
const OVERLAP_EXTENSION_BUDGET: usize = 12;
/// Enumeration cap when a completion result happens to be finite.
const RESULT_ENUM_BUDGET: usize = 4096;

/// The block data derived from a witness y: z = ā^{|y|}·y·a^{|y|} (a the
/// first letter of y, ā the last) and Z the orbit of z under the map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSpec {
    pub y: Word,
    pub z: Word,
    #[serde(rename = "Z")]
    pub z_orbit: FiniteLang,
    pub block_len: usize,
}

/// Result of a finite augmentation: the words that were adjoined and the
/// grown set, plus the block data when the orbit-block construction was
/// used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentOutcome {
    /// The seed witness (the non-factor y, or the seed word of the prefix
    /// augmentation).
    pub seed: Word,
    /// Block data for the orbit-block constructions; absent for the prefix
    /// path.
    pub block: Option<BlockSpec>,
    pub added: FiniteLang,
    pub result: FiniteLang,
}

/// Certificates of a completion, re-decided on the constructed result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EmbedCertificates {
    pub is_code: bool,
    pub is_complete: bool,
    pub is_invariant: bool,
}

/// Result of embedding X into a complete code: X′ = X ∪ t(Ut)* with
/// U = A* ∖ (X* ∪ A*tA*).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionResult {
    pub t: Word,
    pub u: RegularLang,
    pub result: RegularLang,
    pub certificates: EmbedCertificates,
}

impl CompletionResult {
    /// The result as a rational expression over the original set.
    pub fn rational_expression(&self, x: &FiniteLang) -> String {
        let words = x
            .sorted_shortlex(self.result.alphabet())
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let t = &self.t;
        format!("union(words({words}), concat(word({t}), star(concat(auto(U), word({t})))))")
    }
}

/// Result of the synchronized completion: the submonoid M and its minimal
/// generating set X′.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncCompletion {
    pub k: u32,
    pub m: RegularLang,
    pub x_prime: RegularLang,
    /// The generating set as words when it is finite.
    pub x_prime_words: Option<FiniteLang>,
    /// Whether X′ strictly contains X (false exactly when X was already
    /// complete, e.g. X = A).
    pub grew: bool,
}

fn validate_finite_input(alphabet: &Alphabet, x: &FiniteLang) -> Result<(), Error> {
    x.validate_over(alphabet)?;
    if x.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    if x.contains_epsilon() {
        return Err(Error::EpsilonInLanguage);
    }
    Ok(())
}

fn a_plus(alphabet: &Alphabet) -> RegularLang {
    RegularLang::letters(alphabet)
        .concat(&RegularLang::universal(alphabet))
        .expect("same alphabet")
}

fn star_factors(alphabet: &Alphabet, x: &FiniteLang) -> Result<RegularLang, Error> {
    RegularLang::from_words(alphabet, x)?.star()?.factor_closure()
}

// ---------------------------------------------------------------------------
// witness and block

/// A word y ∉ F(X*) with |y| ≥ 2 whose first and last letters differ.
/// Without an override, the smallest non-factor w is used, wrapped as
/// a·w·ā (ā the cyclic successor of w's first letter a) when the ends of w
/// coincide — the wrap stays outside F(X*) because w is a factor of it.
pub fn pick_witness(
    alphabet: &Alphabet,
    x: &FiniteLang,
    override_y: Option<&Word>,
) -> Result<Word, Error> {
    x.validate_over(alphabet)?;
    if x.contains_epsilon() {
        return Err(Error::EpsilonInLanguage);
    }
    if alphabet.len() < 2 {
        return Err(Error::BadArgument(
            "augmentation requires an alphabet with at least two letters".into(),
        ));
    }
    let factors = star_factors(alphabet, x)?;
    let Some(w) = factors.shortest_outside() else {
        return Err(Error::AlreadyComplete);
    };
    if let Some(y) = override_y {
        y.validate_over(alphabet)?;
        if y.len() < 2 {
            return Err(Error::BadWitness(format!(
                "witness {y} is shorter than two letters"
            )));
        }
        if y.first() == y.last() {
            return Err(Error::BadWitness(format!(
                "witness {y} starts and ends with the same letter"
            )));
        }
        if factors.contains(y) {
            return Err(Error::BadWitness(format!(
                "witness {y} is a factor of the star of the input"
            )));
        }
        return Ok(y.clone());
    }
    if w.first() == w.last() {
        let a = w.first().expect("non-factor of a star is non-empty");
        let abar = alphabet.successor(a)?;
        let wrapped = Word::new([a])
            .concat(&w)
            .concat(&Word::new([abar]));
        debug_assert!(!factors.contains(&wrapped));
        Ok(wrapped)
    } else {
        Ok(w)
    }
}

/// z = ā^{|y|}·y·a^{|y|} and its orbit Z. Every orbit member is checked for
/// the block shape c̄^{|y|}·(c…c̄)·c^{|y|} with c ≠ c̄, and Z must avoid
/// F(X*) (this follows from y ∉ F(X*) plus invariance of X, so a failure
/// means the witness or the input does not satisfy the preconditions).
pub fn build_block(map: &LiteralMap, y: &Word, x: &FiniteLang) -> Result<BlockSpec, Error> {
    let alphabet = map.alphabet();
    y.validate_over(alphabet)?;
    x.validate_over(alphabet)?;
    if y.len() < 2 || y.first() == y.last() {
        return Err(Error::BadWitness(format!(
            "block witness must have length ≥ 2 and distinct end letters, got {y}"
        )));
    }
    let factors = star_factors(alphabet, x)?;
    if factors.contains(y) {
        return Err(Error::BadWitness(format!(
            "block witness {y} is a factor of the star of the input"
        )));
    }
    let a = y.first().unwrap();
    let abar = y.last().unwrap();
    let n = y.len();
    let z = Word::repeat_letter(abar, n)
        .concat(y)
        .concat(&Word::repeat_letter(a, n));
    let orbit = map.orbit(&z)?;
    for m in &orbit {
        if m.len() != 3 * n {
            return Err(Error::Internal(format!(
                "block image {m} does not have length 3·|y|"
            )));
        }
        let chars = m.chars();
        let c = chars[n];
        let cbar = chars[2 * n - 1];
        let shaped = c != cbar
            && chars[..n].iter().all(|&l| l == cbar)
            && chars[2 * n..].iter().all(|&l| l == c);
        if !shaped {
            return Err(Error::Internal(format!(
                "block image {m} violates the letter-power shape"
            )));
        }
        if factors.contains(m) {
            return Err(Error::BadWitness(format!(
                "block image {m} is a factor of the star of the input; \
                 the input set must be invariant under the map"
            )));
        }
    }
    Ok(BlockSpec {
        y: y.clone(),
        z,
        z_orbit: FiniteLang::new(orbit),
        block_len: 3 * n,
    })
}

/// The three consequences the block construction relies on:
/// (i) any overlap between two Z-words is a letter power, with shift at
/// least 2|y| (so the shared part has length at most |y|);
/// (ii) A⁺ZA⁺ ∩ ZX*Z = ∅;
/// (iii) X*Z is a prefix code.
/// They are theorems for a valid BlockSpec, so a `false` indicates a bug.
pub fn check_overlap_lemmas(
    alphabet: &Alphabet,
    spec: &BlockSpec,
    x: &FiniteLang,
) -> Result<bool, Error> {
    let n = spec.y.len();
    let len = spec.block_len;
    // (i) sliding-window scan over ordered pairs
    for m1 in &spec.z_orbit {
        for m2 in &spec.z_orbit {
            for shift in 1..len {
                let ell = len - shift;
                if m1.suffix(ell) != m2.prefix(ell) {
                    continue;
                }
                if shift < 2 * n {
                    return Ok(false);
                }
                let first = m1.suffix(ell).chars()[0];
                if m1.suffix(ell).chars().iter().any(|&c| c != first) {
                    return Ok(false);
                }
            }
        }
    }
    // (ii) regular emptiness
    let zl = RegularLang::from_words(alphabet, &spec.z_orbit)?;
    let xstar = RegularLang::from_words(alphabet, x)?.star()?;
    let aplus = a_plus(alphabet);
    let padded = aplus.concat(&zl)?.concat(&aplus)?;
    let framed = zl.concat(&xstar)?.concat(&zl)?;
    if !padded.intersect(&framed)?.is_empty() {
        return Ok(false);
    }
    // (iii) X*Z is prefix
    Ok(props::is_prefix_lang(&xstar.concat(&zl)?)?.holds)
}

// ---------------------------------------------------------------------------
// finite augmentations

fn require_invariant(map: &LiteralMap, x: &FiniteLang) -> Result<(), Error> {
    if !map.is_invariant(x)? {
        return Err(Error::NotInvariant);
    }
    Ok(())
}

fn block_augmentation(
    map: &LiteralMap,
    x: &FiniteLang,
    override_y: Option<&Word>,
) -> Result<AugmentOutcome, Error> {
    let alphabet = map.alphabet();
    let y = pick_witness(alphabet, x, override_y)?;
    let block = build_block(map, &y, x)?;
    if !check_overlap_lemmas(alphabet, &block, x)? {
        return Err(Error::Internal(
            "overlap consequences failed for a valid block".into(),
        ));
    }
    let result = x.union_with(&block.z_orbit);
    Ok(AugmentOutcome {
        seed: y,
        added: block.z_orbit.clone(),
        block: Some(block),
        result,
    })
}

/// Adjoins the orbit block Z to a non-complete invariant code; the result
/// is a strictly larger invariant code (re-verified).
pub fn augment_invariant(
    map: &LiteralMap,
    x: &FiniteLang,
    override_y: Option<&Word>,
) -> Result<AugmentOutcome, Error> {
    let alphabet = map.alphabet();
    validate_finite_input(alphabet, x)?;
    require_invariant(map, x)?;
    let code = props::is_code(alphabet, x)?;
    if !code.holds {
        let detail = code
            .witness
            .map(|w| w.word.to_string())
            .unwrap_or_default();
        return Err(Error::NotACode(format!(
            "the input is not a code (ambiguous word {detail})"
        )));
    }
    let outcome = block_augmentation(map, x, override_y)?;
    let grown_code = props::is_code(alphabet, &outcome.result)?;
    if !grown_code.holds {
        return Err(Error::Internal(
            "augmented set lost the code property".into(),
        ));
    }
    if !map.is_invariant(&outcome.result)? {
        return Err(Error::Internal("augmented set lost invariance".into()));
    }
    if outcome.result.len() <= x.len() {
        return Err(Error::Internal("augmentation did not grow the set".into()));
    }
    Ok(outcome)
}

/// Adjoins the orbit block Z to a non-complete invariant circular code;
/// circularity of the result is re-verified.
pub fn augment_circular(
    map: &LiteralMap,
    x: &FiniteLang,
    override_y: Option<&Word>,
) -> Result<AugmentOutcome, Error> {
    let alphabet = map.alphabet();
    validate_finite_input(alphabet, x)?;
    require_invariant(map, x)?;
    let circ = props::is_circular(alphabet, x)?;
    if !circ.holds {
        let detail = circ
            .witness
            .map(|w| format!("u={}, v={}", w.u, w.v))
            .unwrap_or_default();
        return Err(Error::NotInFamily {
            family: "circular".into(),
            detail,
        });
    }
    let outcome = block_augmentation(map, x, override_y)?;
    if !props::is_circular(alphabet, &outcome.result)?.holds {
        return Err(Error::Internal(
            "augmented set lost circularity".into(),
        ));
    }
    if !map.is_invariant(&outcome.result)? {
        return Err(Error::Internal("augmented set lost invariance".into()));
    }
    Ok(outcome)
}

/// Candidate filter for growing a prefix code: y itself must not extend a
/// member or be a proper prefix of one.
fn prefix_compatible(y: &Word, x: &FiniteLang) -> bool {
    !x.iter().any(|m| m.is_prefix_of(y) || (y.is_prefix_of(m) && y.len() < m.len()))
}

fn suffix_compatible(y: &Word, x: &FiniteLang) -> bool {
    !x.iter().any(|m| m.is_suffix_of(y) || (y.is_suffix_of(m) && y.len() < m.len()))
}

/// All non-empty words up to `max_len`, shortest first then alphabet order.
fn words_shortlex(alphabet: &Alphabet, max_len: usize) -> impl Iterator<Item = Word> + '_ {
    (1..=max_len).flat_map(move |len| {
        let mut idx = vec![0usize; len];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let w = Word::new(idx.iter().map(|&i| alphabet.letter(i)));
            // odometer increment
            let mut pos = len;
            loop {
                if pos == 0 {
                    done = true;
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < alphabet.len() {
                    break;
                }
                idx[pos] = 0;
            }
            Some(w)
        })
    })
}

/// Grows a non-complete invariant prefix code by the orbit of a compatible
/// seed: orbit(y) for a morphism, orbit(y·y′) for an antimorphism with y
/// prefix-compatible and y′ suffix-compatible. The first seed (shortest,
/// then alphabet order) whose grown set passes the prefix, code and
/// invariance re-checks is taken.
pub fn augment_prefix(map: &LiteralMap, x: &FiniteLang) -> Result<AugmentOutcome, Error> {
    let alphabet = map.alphabet();
    validate_finite_input(alphabet, x)?;
    require_invariant(map, x)?;
    let pfx = props::is_prefix(alphabet, x)?;
    if !pfx.holds {
        let detail = pfx
            .witness
            .map(|w| format!("{} is a proper prefix of {}", w.shorter, w.longer))
            .unwrap_or_default();
        return Err(Error::NotInFamily {
            family: "prefix".into(),
            detail,
        });
    }
    if star_factors(alphabet, x)?.is_universal() {
        return Err(Error::AlreadyComplete);
    }
    let max_len = x.max_len().max(2) * 2 + 2;
    let try_seed = |seed: &Word| -> Result<Option<AugmentOutcome>, Error> {
        let orbit = map.orbit_lang(&FiniteLang::new([seed.clone()]))?;
        let grown = x.union_with(&orbit);
        if grown.len() == x.len() {
            return Ok(None);
        }
        let ok = props::is_prefix(alphabet, &grown)?.holds
            && props::is_code(alphabet, &grown)?.holds
            && map.is_invariant(&grown)?;
        Ok(ok.then(|| AugmentOutcome {
            seed: seed.clone(),
            block: None,
            added: orbit,
            result: grown,
        }))
    };
    let mut scanned = 0usize;
    match map.kind() {
        MapKind::Morphism => {
            for y in words_shortlex(alphabet, max_len) {
                scanned += 1;
                if scanned > PREFIX_SEARCH_BUDGET {
                    break;
                }
                if !prefix_compatible(&y, x) {
                    continue;
                }
                if let Some(outcome) = try_seed(&y)? {
                    return Ok(outcome);
                }
            }
        }
        MapKind::Antimorphism => {
            let pre: Vec<Word> = words_shortlex(alphabet, max_len)
                .filter(|y| prefix_compatible(y, x))
                .take(64)
                .collect();
            let post: Vec<Word> = words_shortlex(alphabet, max_len)
                .filter(|y| suffix_compatible(y, x))
                .take(64)
                .collect();
            let mut pairs: Vec<(&Word, &Word)> = pre
                .iter()
                .flat_map(|y| post.iter().map(move |yp| (y, yp)))
                .collect();
            pairs.sort_by_key(|(y, yp)| {
                (
                    y.len() + yp.len(),
                    shortlex_key(alphabet, y),
                    shortlex_key(alphabet, yp),
                )
            });
            for (y, yp) in pairs {
                scanned += 1;
                if scanned > PREFIX_SEARCH_BUDGET {
                    break;
                }
                if let Some(outcome) = try_seed(&y.concat(yp))? {
                    return Ok(outcome);
                }
            }
        }
    }
    Err(Error::Budget(
        "prefix augmentation found no compatible seed within its budget".into(),
    ))
}

// ---------------------------------------------------------------------------
// synchronized completion

/// Completion of a uniformly synchronized code with delay k via the
/// submonoid M = (X^{2k}A* ∩ A*X^{2k}) ∪ X*; the result X′ is the minimal
/// generating set of M. Invariance, completeness and X ⊆ X′ are
/// re-verified on the constructed automata.
pub fn complete_sync(map: &LiteralMap, x: &FiniteLang, k: u32) -> Result<SyncCompletion, Error> {
    let alphabet = map.alphabet();
    validate_finite_input(alphabet, x)?;
    require_invariant(map, x)?;
    let sync = props::is_uniformly_synchronized(alphabet, x, k)?;
    if !sync.synchronized {
        let detail = sync
            .witness
            .map(|w| format!("u={}, x={}, y={}, v={}", w.u, w.x, w.y, w.v))
            .unwrap_or_default();
        return Err(Error::NotSynchronized { k, detail });
    }
    let xl = RegularLang::from_words(alphabet, x)?;
    let x2k = xl.power(2 * k as usize)?;
    let all = RegularLang::universal(alphabet);
    let ideal = x2k.concat(&all)?.intersect(&all.concat(&x2k)?)?;
    let m = ideal.union(&xl.star()?)?;
    if !m.contains(&Word::epsilon()) || !m.concat(&m)?.is_subset_of(&m)? {
        return Err(Error::Internal(
            "synchronized completion did not produce a submonoid".into(),
        ));
    }
    if !m.invariant_under(map)? {
        return Err(Error::Internal(
            "synchronized completion produced a non-invariant submonoid".into(),
        ));
    }
    let x_prime = m.min_gen_set()?;
    if !x_prime.invariant_under(map)? {
        return Err(Error::Internal(
            "minimal generating set of an invariant submonoid must be invariant".into(),
        ));
    }
    if !x_prime.star()?.equivalent(&m)? {
        return Err(Error::Internal(
            "minimal generating set does not regenerate the submonoid".into(),
        ));
    }
    if !props::completeness_lang(&x_prime)?.holds {
        return Err(Error::Internal(
            "synchronized completion is not complete".into(),
        ));
    }
    if !xl.is_subset_of(&x_prime)? {
        return Err(Error::Internal(
            "input words are not all generators of the completion".into(),
        ));
    }
    let grew = !x_prime.equivalent(&xl)?;
    let x_prime_words = if x_prime.is_finite() {
        Some(x_prime.to_finite_lang(RESULT_ENUM_BUDGET)?)
    } else {
        None
    };
    Ok(SyncCompletion {
        k,
        m,
        x_prime,
        x_prime_words,
        grew,
    })
}

// ---------------------------------------------------------------------------
// embedding via an overlap-free anchor

/// Extends x on the right until it is overlapping-free (has no non-trivial
/// border), keeping it outside F(X*). Extensions are tried shortest first,
/// then in alphabet order.
pub fn make_overlap_free(
    alphabet: &Alphabet,
    x_word: &Word,
    x: &FiniteLang,
) -> Result<Word, Error> {
    let factors = star_factors(alphabet, x)?;
    make_overlap_free_lang(alphabet, x_word, &factors)
}

fn make_overlap_free_lang(
    alphabet: &Alphabet,
    x_word: &Word,
    factors: &RegularLang,
) -> Result<Word, Error> {
    if factors.contains(x_word) {
        return Err(Error::BadWitness(format!(
            "{x_word} is a factor of the star of the input"
        )));
    }
    if !x_word.has_border() {
        return Ok(x_word.clone());
    }
    let cap = x_word.len().max(OVERLAP_EXTENSION_BUDGET);
    for s in words_shortlex(alphabet, cap) {
        let candidate = x_word.concat(&s);
        if !candidate.has_border() && !factors.contains(&candidate) {
            return Ok(candidate);
        }
    }
    Err(Error::Budget(
        "no overlapping-free extension found within the length budget".into(),
    ))
}

fn require_involutive_antimorphism(map: &LiteralMap) -> Result<(), Error> {
    if map.kind() != MapKind::Antimorphism {
        return Err(Error::UnsupportedMap(
            "embedding is established for involutive antimorphisms only; \
             morphisms are an open problem"
                .into(),
        ));
    }
    if map.is_identity_on_letters() {
        return Err(Error::UnsupportedMap(
            "the mirror antimorphism (identity on letters) is excluded: \
             every candidate anchor overlaps its image (open problem)"
                .into(),
        ));
    }
    if map.order() > 2 {
        return Err(Error::UnsupportedMap(format!(
            "embedding requires an involutive antimorphism; this one has order {}",
            map.order()
        )));
    }
    Ok(())
}

/// An overlapping-free word t ∉ F(X*) with θ(t) = t, following the case
/// ladder: a θ-fixed overlap-free non-factor x is its own anchor; else the
/// ladder pads x to y = c·x (c the first letter of x) and, if θ(y) ≠ y,
/// assembles t = a^{|y|}·b·θ(y)·y·a·b^{|y|} from a letter pair with
/// θ(a) = b, a ≠ b, b ≠ c.
pub fn build_anchor(map: &LiteralMap, x: &RegularLang) -> Result<Word, Error> {
    require_involutive_antimorphism(map)?;
    let alphabet = map.alphabet();
    let factors = x.star()?.factor_closure()?;
    let Some(w0) = factors.shortest_outside() else {
        return Err(Error::AlreadyComplete);
    };
    // the ladder needs |x| ≥ 2
    let seed = if w0.len() < 2 { w0.concat(&w0) } else { w0 };
    let x_of = make_overlap_free_lang(alphabet, &seed, &factors)?;
    if map.apply(&x_of)? == x_of {
        return Ok(x_of);
    }
    let c = x_of.first().expect("non-factor words are non-empty");
    let y = make_overlap_free_lang(alphabet, &Word::new([c]).concat(&x_of), &factors)?;
    if map.apply(&y)? == y {
        return Ok(y);
    }
    let c_idx = alphabet.index_of(c).expect("validated word");
    let (a, b) = (0..alphabet.len())
        .filter(|&i| map.image_index(i) != i)
        .flat_map(|i| [(i, map.image_index(i)), (map.image_index(i), i)])
        .find(|&(_, bi)| bi != c_idx)
        .map(|(ai, bi)| (alphabet.letter(ai), alphabet.letter(bi)))
        .ok_or_else(|| {
            Error::Internal("no letter pair a,b with θ(a)=b, a≠b, b≠c exists".into())
        })?;
    let n = y.len();
    let t = Word::repeat_letter(a, n)
        .concat(&Word::new([b]))
        .concat(&map.apply(&y)?)
        .concat(&y)
        .concat(&Word::new([a]))
        .concat(&Word::repeat_letter(b, n));
    if map.apply(&t)? != t {
        return Err(Error::Internal("anchor is not fixed by the map".into()));
    }
    if t.has_border() {
        return Err(Error::Internal("anchor has a border".into()));
    }
    if factors.contains(&t) {
        return Err(Error::Internal(
            "anchor fell into the factors of the star".into(),
        ));
    }
    Ok(t)
}

/// Embeds a non-complete invariant code into a complete invariant code:
/// X′ = X ∪ t(Ut)* with U = A* ∖ (X* ∪ A*tA*). The code, completeness and
/// invariance certificates are re-decided on the result and must all hold.
pub fn embed_complete_lang(
    map: &LiteralMap,
    xl: &RegularLang,
) -> Result<CompletionResult, Error> {
    require_involutive_antimorphism(map)?;
    let alphabet = map.alphabet();
    if xl.contains(&Word::epsilon()) {
        return Err(Error::EpsilonInLanguage);
    }
    if !xl.invariant_under(map)? {
        return Err(Error::NotInvariant);
    }
    let code = props::is_code_regular(xl)?;
    if !code.holds {
        let detail = code
            .witness
            .map(|w| w.word.to_string())
            .unwrap_or_default();
        return Err(Error::NotACode(format!(
            "the input is not a code (ambiguous word {detail})"
        )));
    }
    if props::completeness_lang(xl)?.holds {
        return Err(Error::AlreadyComplete);
    }
    let t = build_anchor(map, xl)?;
    let all = RegularLang::universal(alphabet);
    let tl = RegularLang::word(alphabet, &t)?;
    let framed_t = all.concat(&tl)?.concat(&all)?;
    let u = xl.star()?.union(&framed_t)?.complement();
    let v = tl.concat(&u.concat(&tl)?.star()?)?;
    let result = xl.union(&v)?;
    let certificates = EmbedCertificates {
        is_code: props::is_code_regular(&result)?.holds,
        is_complete: props::completeness_lang(&result)?.holds,
        is_invariant: result.invariant_under(map)?,
    };
    if !(certificates.is_code && certificates.is_complete && certificates.is_invariant) {
        return Err(Error::Internal(format!(
            "embedding certificates failed: code={}, complete={}, invariant={}",
            certificates.is_code, certificates.is_complete, certificates.is_invariant
        )));
    }
    Ok(CompletionResult {
        t,
        u,
        result,
        certificates,
    })
}

/// Finite-input convenience wrapper for `embed_complete_lang`.
pub fn embed_complete(map: &LiteralMap, x: &FiniteLang) -> Result<CompletionResult, Error> {
    let alphabet = map.alphabet();
    x.validate_over(alphabet)?;
    embed_complete_lang(map, &RegularLang::from_words(alphabet, x)?)
}
