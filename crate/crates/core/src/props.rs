//! Decision procedures for code properties: unique decipherability,
//! prefix/suffix/bifix, deciphering delays, uniform synchronization,
//! circularity, completeness, thinness, and maximality.
//!
//! Every negative verdict carries a witness that replays to a concrete
//! violation of the property.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::error::Error;
use crate::lang::RegularLang;
use crate::words::{shortlex_key, Alphabet, FiniteLang, LiteralMap, Word};

/// Enumeration budget for the members of X^k during synchronization checks.
pub const SYNC_ENUM_BUDGET: usize = 4096;

/// Verdict of the code test; `witness` is present exactly when `holds` is
/// false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeVerdict {
    pub holds: bool,
    pub witness: Option<CodeWitness>,
}

/// A word with two distinct factorizations over the set under test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeWitness {
    pub word: Word,
    pub first: Vec<Word>,
    pub second: Vec<Word>,
}

/// Verdict of the prefix/suffix/bifix tests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropVerdict {
    pub holds: bool,
    pub witness: Option<PairWitness>,
}

/// Two members of the set where `shorter` is a proper prefix (or suffix) of
/// `longer`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub shorter: Word,
    pub longer: Word,
}

/// A single-flag verdict with an optional word witness (used for
/// completeness and thinness, where the witness is a non-factor).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagVerdict {
    pub holds: bool,
    pub witness: Option<Word>,
}

/// Result of a delay search up to a cap. `failures[d]` is a counterexample
/// to the delay-d inclusion, for every d below the answer (or up to the cap
/// when no delay was found).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DelayReport {
    pub delay: Option<u32>,
    pub cap: u32,
    pub failures: Vec<Word>,
}

/// Verdict of the uniform-synchronization test at a fixed k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyncReport {
    pub synchronized: bool,
    pub k: u32,
    /// Number of words of X^k enumerated per side.
    pub pairs_side: usize,
    pub witness: Option<SyncWitness>,
}

/// A violation u·x·y·v ∈ X* (x, y ∈ X^k) where the stated side of the
/// conclusion fails: u·x ∉ X* when `prefix_side`, otherwise y·v ∉ X*.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyncWitness {
    pub u: Word,
    pub x: Word,
    pub y: Word,
    pub v: Word,
    pub prefix_side: bool,
}

/// Result of the outcome of a smallest-k synchronization search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyncSearch {
    pub delay: Option<u32>,
    pub cap: u32,
    /// Set when the search stopped early (enumeration budget).
    pub note: Option<String>,
}

/// Verdict of the circularity test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircularVerdict {
    pub holds: bool,
    pub witness: Option<CircularWitness>,
}

/// A double reading on the circle: the word u·v factorizes as `xs`, while
/// `ys` reads the same circle starting inside the block that straddles the
/// u/v junction. Concretely u·v = s·ys[1]⋯ys[n-1]·p with ys[0] = p·s, and
/// the two readings are not the trivial rearrangement (p ≠ ε or xs ≠ ys).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircularWitness {
    pub u: Word,
    pub v: Word,
    pub s: Word,
    pub p: Word,
    pub xs: Vec<Word>,
    pub ys: Vec<Word>,
}

/// Maximality is only decided for thin codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Maximality {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalityReport {
    pub verdict: Maximality,
    pub justification: String,
    /// Completeness witness when the verdict is No.
    pub witness: Option<Word>,
}

/// The full property report for one (map, X) input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub is_invariant: bool,
    pub map_order: u32,
    pub is_code: CodeVerdict,
    pub is_prefix: PropVerdict,
    pub is_suffix: PropVerdict,
    pub is_bifix: PropVerdict,
    /// `None` when X is not a code (delays are defined for codes).
    pub deciphering_delay: Option<DelayReport>,
    pub two_way_delay: Option<DelayReport>,
    pub sync_delay: Option<SyncSearch>,
    pub is_circular: CircularVerdict,
    pub is_complete: FlagVerdict,
    pub is_thin: FlagVerdict,
    /// `None` when X is not a code.
    pub is_maximal: Option<MaximalityReport>,
}

// ---------------------------------------------------------------------------
// helpers

fn validate_code_input(alphabet: &Alphabet, x: &FiniteLang) -> Result<(), Error> {
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

#[cfg(test)]
pub(crate) fn concat_all(ws: &[Word]) -> Word {
    ws.iter().fold(Word::epsilon(), |acc, w| acc.concat(w))
}

/// Up to `limit` factorizations of `w` over the set accepted by `x`,
/// ordered by their boundary sequences (earlier first boundary first).
pub(crate) fn factorizations(w: &Word, x: &RegularLang, limit: usize) -> Vec<Vec<Word>> {
    let n = w.len();
    let d = x.dfa();
    // member[i][j] ⟺ w[i..j] is accepted by x
    let mut member = vec![vec![false; n + 1]; n + 1];
    for i in 0..n {
        let mut s = 0usize;
        for j in i..n {
            let Some(a) = x.alphabet().index_of(w.chars()[j]) else {
                break;
            };
            s = d.step(s, a);
            member[i][j + 1] = d.accepting_state(s);
        }
    }
    // positions from which the end is reachable
    let mut co = vec![false; n + 1];
    co[n] = true;
    for i in (0..n).rev() {
        co[i] = (i + 1..=n).any(|j| member[i][j] && co[j]);
    }
    let mut out = Vec::new();
    let mut cur: Vec<Word> = Vec::new();
    fn rec(
        i: usize,
        n: usize,
        member: &Vec<Vec<bool>>,
        co: &[bool],
        w: &Word,
        cur: &mut Vec<Word>,
        out: &mut Vec<Vec<Word>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if i == n {
            out.push(cur.clone());
            return;
        }
        for j in i + 1..=n {
            if member[i][j] && co[j] {
                cur.push(Word::new(w.chars()[i..j].iter().copied()));
                rec(j, n, member, co, w, cur, out, limit);
                cur.pop();
            }
        }
    }
    if co[0] {
        rec(0, n, &member, &co, w, &mut cur, &mut out, limit);
    }
    out
}

// ---------------------------------------------------------------------------
// unique decipherability

/// Residual iteration: X is a code iff ε never appears in the derived
/// residual sets. Terminates because every residual is a suffix of a word
/// of X.
fn residuals_say_code(x: &FiniteLang) -> bool {
    let mut u1: BTreeSet<Word> = BTreeSet::new();
    for a in x {
        for b in x {
            if a != b {
                if let Some(r) = b.strip_prefix(a) {
                    u1.insert(r);
                }
            }
        }
    }
    let mut seen: HashSet<BTreeSet<Word>> = HashSet::new();
    let mut cur = u1;
    loop {
        if cur.iter().any(Word::is_empty) {
            return false;
        }
        if cur.is_empty() || !seen.insert(cur.clone()) {
            return true;
        }
        let mut next = BTreeSet::new();
        for u in &cur {
            for xw in x {
                if let Some(r) = u.strip_prefix(xw) {
                    next.insert(r);
                }
                if let Some(r) = xw.strip_prefix(u) {
                    next.insert(r);
                }
            }
        }
        cur = next;
    }
}

/// The shortest word with two distinct factorizations over the language of
/// `x`, or `None` when the star of that language is unambiguous.
///
/// A run automaton is built on top of the DFA of X: a fresh hub state marks
/// factorization boundaries (it mirrors the initial state's outgoing rows,
/// and every transition entering an accepting state forks a "restart" copy
/// into the hub). Hub-to-hub runs correspond bijectively to factorizations,
/// so ambiguity is an off-diagonal reconvergence in the squared automaton.
fn star_ambiguous_word(x: &RegularLang) -> Option<Word> {
    let d = x.dfa();
    let n = d.n();
    let hub = n;
    let k = x.alphabet().len();
    let base = |s: usize| if s == hub { 0 } else { s };
    let succs = |s: usize, a: usize| {
        let t = d.step(base(s), a);
        let restart = d.accepting_state(t);
        (t, restart)
    };
    let idx = |s: usize, t: usize, f: bool| (s * (n + 1) + t) * 2 + usize::from(f);
    let total = (n + 1) * (n + 1) * 2;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; total];
    let mut seen = vec![false; total];
    let start = idx(hub, hub, false);
    let goal = idx(hub, hub, true);
    seen[start] = true;
    let mut queue = VecDeque::from([(hub, hub, false)]);
    while let Some((s, t, f)) = queue.pop_front() {
        for a in 0..k {
            let (s_t, s_restart) = succs(s, a);
            let (t_t, t_restart) = succs(t, a);
            let mut s_opts = vec![s_t];
            if s_restart {
                s_opts.push(hub);
            }
            let mut t_opts = vec![t_t];
            if t_restart {
                t_opts.push(hub);
            }
            for &s2 in &s_opts {
                for &t2 in &t_opts {
                    let f2 = f || s2 != t2;
                    let i2 = idx(s2, t2, f2);
                    if seen[i2] {
                        continue;
                    }
                    seen[i2] = true;
                    parent[i2] = Some((idx(s, t, f), a));
                    if i2 == goal {
                        let mut letters = Vec::new();
                        let mut cur = i2;
                        while cur != start {
                            let (p, a) = parent[cur].unwrap();
                            letters.push(x.alphabet().letter(a));
                            cur = p;
                        }
                        letters.reverse();
                        return Some(Word::new(letters));
                    }
                    queue.push_back((s2, t2, f2));
                }
            }
        }
    }
    None
}

fn ambiguity_witness(xl: &RegularLang) -> Result<Option<CodeWitness>, Error> {
    let Some(word) = star_ambiguous_word(xl) else {
        return Ok(None);
    };
    let fs = factorizations(&word, xl, 2);
    if fs.len() < 2 {
        return Err(Error::Internal(format!(
            "ambiguous word {word} does not admit two factorizations"
        )));
    }
    Ok(Some(CodeWitness {
        word,
        first: fs[0].clone(),
        second: fs[1].clone(),
    }))
}

/// Whether the finite set X is a code, by residual iteration; on failure the
/// witness (a doubly-factorizable word) comes from the ambiguity search.
pub fn is_code(alphabet: &Alphabet, x: &FiniteLang) -> Result<CodeVerdict, Error> {
    validate_code_input(alphabet, x)?;
    let verdict = residuals_say_code(x);
    let xl = RegularLang::from_words(alphabet, x)?;
    if verdict {
        return Ok(CodeVerdict {
            holds: true,
            witness: None,
        });
    }
    match ambiguity_witness(&xl)? {
        Some(w) => Ok(CodeVerdict {
            holds: false,
            witness: Some(w),
        }),
        None => Err(Error::Internal(
            "residual iteration and ambiguity search disagree on code status".into(),
        )),
    }
}

/// Whether a regular set is a code, by the star-ambiguity test (exact, no
/// length bound).
pub fn is_code_regular(l: &RegularLang) -> Result<CodeVerdict, Error> {
    if l.contains(&Word::epsilon()) {
        return Err(Error::EpsilonInLanguage);
    }
    Ok(match ambiguity_witness(l)? {
        Some(w) => CodeVerdict {
            holds: false,
            witness: Some(w),
        },
        None => CodeVerdict {
            holds: true,
            witness: None,
        },
    })
}

// ---------------------------------------------------------------------------
// prefix / suffix / bifix

/// X is a prefix code iff X ≠ {ε} and X ∩ XA⁺ = ∅.
pub fn is_prefix_lang(l: &RegularLang) -> Result<PropVerdict, Error> {
    if *l == RegularLang::epsilon(l.alphabet()) {
        return Err(Error::BadArgument(
            "the set {ε} is outside the prefix/suffix code definitions".into(),
        ));
    }
    let bad = l.intersect(&l.concat(&a_plus(l.alphabet()))?)?;
    match bad.shortest_word() {
        None => Ok(PropVerdict {
            holds: true,
            witness: None,
        }),
        Some(longer) => {
            let shorter = (0..longer.len())
                .map(|i| longer.prefix(i))
                .find(|p| l.contains(p))
                .expect("a member of X is a proper prefix of the witness");
            Ok(PropVerdict {
                holds: false,
                witness: Some(PairWitness { shorter, longer }),
            })
        }
    }
}

/// X is a suffix code iff X ≠ {ε} and X ∩ A⁺X = ∅.
pub fn is_suffix_lang(l: &RegularLang) -> Result<PropVerdict, Error> {
    if *l == RegularLang::epsilon(l.alphabet()) {
        return Err(Error::BadArgument(
            "the set {ε} is outside the prefix/suffix code definitions".into(),
        ));
    }
    let bad = l.intersect(&a_plus(l.alphabet()).concat(l)?)?;
    match bad.shortest_word() {
        None => Ok(PropVerdict {
            holds: true,
            witness: None,
        }),
        Some(longer) => {
            let shorter = (0..longer.len())
                .map(|i| longer.suffix(i))
                .find(|p| l.contains(p))
                .expect("a member of X is a proper suffix of the witness");
            Ok(PropVerdict {
                holds: false,
                witness: Some(PairWitness { shorter, longer }),
            })
        }
    }
}

pub fn is_bifix_lang(l: &RegularLang) -> Result<PropVerdict, Error> {
    let p = is_prefix_lang(l)?;
    if !p.holds {
        return Ok(p);
    }
    is_suffix_lang(l)
}

pub fn is_prefix(alphabet: &Alphabet, x: &FiniteLang) -> Result<PropVerdict, Error> {
    x.validate_over(alphabet)?;
    is_prefix_lang(&RegularLang::from_words(alphabet, x)?)
}

pub fn is_suffix(alphabet: &Alphabet, x: &FiniteLang) -> Result<PropVerdict, Error> {
    x.validate_over(alphabet)?;
    is_suffix_lang(&RegularLang::from_words(alphabet, x)?)
}

pub fn is_bifix(alphabet: &Alphabet, x: &FiniteLang) -> Result<PropVerdict, Error> {
    x.validate_over(alphabet)?;
    is_bifix_lang(&RegularLang::from_words(alphabet, x)?)
}

// ---------------------------------------------------------------------------
// deciphering delays

/// The smallest d ≤ cap with X⁻¹X* ∩ X^d A⁺ ⊆ X⁺, for a code X.
pub fn deciphering_delay(
    alphabet: &Alphabet,
    x: &FiniteLang,
    cap: u32,
) -> Result<DelayReport, Error> {
    validate_code_input(alphabet, x)?;
    if !residuals_say_code(x) {
        return Err(Error::NotACode(
            "deciphering delay is defined for codes".into(),
        ));
    }
    let xl = RegularLang::from_words(alphabet, x)?;
    let star = xl.star()?;
    let xplus = xl.plus()?;
    let lhs_base = star.quotient_left(&xl)?;
    let aplus = a_plus(alphabet);
    let mut failures = Vec::new();
    for d in 0..=cap {
        let window = xl.power(d as usize)?.concat(&aplus)?;
        let lhs = lhs_base.intersect(&window)?;
        let escape = lhs.difference(&xplus)?;
        match escape.shortest_word() {
            None => {
                return Ok(DelayReport {
                    delay: Some(d),
                    cap,
                    failures,
                })
            }
            Some(w) => failures.push(w),
        }
    }
    Ok(DelayReport {
        delay: None,
        cap,
        failures,
    })
}

/// The smallest d′ ≤ cap with X*X⁻¹ ∩ A⁺X^d′ ⊆ X⁺, for a code X.
pub fn two_way_delay(alphabet: &Alphabet, x: &FiniteLang, cap: u32) -> Result<DelayReport, Error> {
    validate_code_input(alphabet, x)?;
    if !residuals_say_code(x) {
        return Err(Error::NotACode(
            "deciphering delay is defined for codes".into(),
        ));
    }
    let xl = RegularLang::from_words(alphabet, x)?;
    let star = xl.star()?;
    let xplus = xl.plus()?;
    let lhs_base = star.quotient_right(&xl)?;
    let aplus = a_plus(alphabet);
    let mut failures = Vec::new();
    for d in 0..=cap {
        let window = aplus.concat(&xl.power(d as usize)?)?;
        let lhs = lhs_base.intersect(&window)?;
        let escape = lhs.difference(&xplus)?;
        match escape.shortest_word() {
            None => {
                return Ok(DelayReport {
                    delay: Some(d),
                    cap,
                    failures,
                })
            }
            Some(w) => failures.push(w),
        }
    }
    Ok(DelayReport {
        delay: None,
        cap,
        failures,
    })
}

// ---------------------------------------------------------------------------
// uniform synchronization

/// Whether every pair over X^k synchronizes: u·x·y·v ∈ X* forces u·x ∈ X*
/// and y·v ∈ X*. Decided by two quotient containments per word of X^k (the
/// conclusion splits into a u-only and a v-only condition, so the pair
/// quantifier folds into the quotient by x·X^k resp. X^k·y).
pub fn is_uniformly_synchronized(
    alphabet: &Alphabet,
    x: &FiniteLang,
    k: u32,
) -> Result<SyncReport, Error> {
    if k < 1 {
        return Err(Error::BadArgument("synchronization delay k must be ≥ 1".into()));
    }
    validate_code_input(alphabet, x)?;
    if !residuals_say_code(x) {
        return Err(Error::NotACode(
            "uniform synchronization is defined for codes".into(),
        ));
    }
    let xl = RegularLang::from_words(alphabet, x)?;
    let xk_lang = xl.power(k as usize)?;
    let xk_words = xk_lang
        .to_finite_lang(SYNC_ENUM_BUDGET)
        .map_err(|_| {
            Error::Budget(format!(
                "|X|^k exceeds the {SYNC_ENUM_BUDGET}-word enumeration budget at k={k}"
            ))
        })?
        .sorted_shortlex(alphabet);
    let star = xl.star()?;
    let p_star = star.prefix_closure();
    let s_star = star.suffix_closure()?;

    for xw in &xk_words {
        let xw_lang = RegularLang::word(alphabet, xw)?;
        let lhs = p_star.quotient_right(&xw_lang.concat(&xk_lang)?)?;
        let rhs = star.quotient_right(&xw_lang)?;
        let gap = lhs.difference(&rhs)?;
        if let Some(u) = gap.shortest_word() {
            let y = xk_words
                .iter()
                .find(|y| p_star.contains(&u.concat(xw).concat(y)))
                .expect("some y ∈ X^k extends the failing u·x into P(X*)")
                .clone();
            let uxy = u.concat(xw).concat(&y);
            let v = star
                .quotient_left(&RegularLang::word(alphabet, &uxy)?)?
                .shortest_word()
                .expect("u·x·y is a prefix of an X*-word");
            return Ok(SyncReport {
                synchronized: false,
                k,
                pairs_side: xk_words.len(),
                witness: Some(SyncWitness {
                    u,
                    x: xw.clone(),
                    y,
                    v,
                    prefix_side: true,
                }),
            });
        }
    }
    for yw in &xk_words {
        let yw_lang = RegularLang::word(alphabet, yw)?;
        let lhs = s_star.quotient_left(&xk_lang.concat(&yw_lang)?)?;
        let rhs = star.quotient_left(&yw_lang)?;
        let gap = lhs.difference(&rhs)?;
        if let Some(v) = gap.shortest_word() {
            let x_found = xk_words
                .iter()
                .find(|x| s_star.contains(&x.concat(yw).concat(&v)))
                .expect("some x ∈ X^k extends the failing y·v into S(X*)")
                .clone();
            let xyv = x_found.concat(yw).concat(&v);
            let u = star
                .quotient_right(&RegularLang::word(alphabet, &xyv)?)?
                .shortest_word()
                .expect("x·y·v is a suffix of an X*-word");
            return Ok(SyncReport {
                synchronized: false,
                k,
                pairs_side: xk_words.len(),
                witness: Some(SyncWitness {
                    u,
                    x: x_found,
                    y: yw.clone(),
                    v,
                    prefix_side: false,
                }),
            });
        }
    }
    Ok(SyncReport {
        synchronized: true,
        k,
        pairs_side: xk_words.len(),
        witness: None,
    })
}

// ---------------------------------------------------------------------------
// circularity

/// A violation of purity of the submonoid: words (u, v) with uv ∈ M,
/// vu ∈ M, u ∉ M. `star` must accept a submonoid. Returns the violation
/// minimizing (|u|+|v|, u, v) in shortlex terms.
fn very_pure_violation(star: &RegularLang) -> Option<(Word, Word)> {
    let d = star.dfa();
    let n = d.n();
    let k = star.alphabet().len();
    // maps[t][p] = shortest w with δ(0, w) = p and δ(t, w) accepting
    let mut maps: Vec<Vec<Option<Word>>> = Vec::with_capacity(n);
    for t0 in 0..n {
        let mut best: Vec<Option<Word>> = vec![None; n];
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n * n];
        let mut seen = vec![false; n * n];
        let start = t0; // pair (0, t0) encoded as 0 * n + t0
        seen[start] = true;
        let mut queue = VecDeque::from([(0usize, t0)]);
        let reconstruct = |pair: usize, parent: &[Option<(usize, usize)>]| {
            let mut letters = Vec::new();
            let mut cur = pair;
            while cur != start {
                let (prev, a) = parent[cur].unwrap();
                letters.push(star.alphabet().letter(a));
                cur = prev;
            }
            letters.reverse();
            Word::new(letters)
        };
        if d.accepting_state(t0) {
            best[0] = Some(Word::epsilon());
        }
        while let Some((i, j)) = queue.pop_front() {
            for a in 0..k {
                let (i2, j2) = (d.step(i, a), d.step(j, a));
                let pair = i2 * n + j2;
                if seen[pair] {
                    continue;
                }
                seen[pair] = true;
                parent[pair] = Some((i * n + j, a));
                if d.accepting_state(j2) && best[i2].is_none() {
                    best[i2] = Some(reconstruct(pair, &parent));
                }
                queue.push_back((i2, j2));
            }
        }
        maps.push(best);
    }
    let mut found: Option<(Word, Word)> = None;
    for p in 0..n {
        if d.accepting_state(p) {
            continue; // u must lie outside the submonoid
        }
        for r in 0..n {
            let (Some(u), Some(v)) = (&maps[r][p], &maps[p][r]) else {
                continue;
            };
            let better = match &found {
                None => true,
                Some((bu, bv)) => {
                    let cand = (
                        u.len() + v.len(),
                        shortlex_key(star.alphabet(), u),
                        shortlex_key(star.alphabet(), v),
                    );
                    let best = (
                        bu.len() + bv.len(),
                        shortlex_key(star.alphabet(), bu),
                        shortlex_key(star.alphabet(), bv),
                    );
                    cand < best
                }
            };
            if better {
                found = Some((u.clone(), v.clone()));
            }
        }
    }
    found
}

/// Whether the finite set X is a circular code. X must be a code and its
/// star must be very pure (uv, vu ∈ X* implies u, v ∈ X*); a purity
/// violation is mapped back to a double reading of a word on the circle.
pub fn is_circular(alphabet: &Alphabet, x: &FiniteLang) -> Result<CircularVerdict, Error> {
    validate_code_input(alphabet, x)?;
    let code = is_code(alphabet, x)?;
    let xl = RegularLang::from_words(alphabet, x)?;
    if let Some(w) = code.witness {
        // Two flat factorizations violate circularity with s = first block
        // of the second reading and p = ε.
        let s = w.second[0].clone();
        return Ok(CircularVerdict {
            holds: false,
            witness: Some(CircularWitness {
                u: w.word,
                v: Word::epsilon(),
                s,
                p: Word::epsilon(),
                xs: w.first,
                ys: w.second,
            }),
        });
    }
    let star = xl.star()?;
    let Some((u, v)) = very_pure_violation(&star) else {
        return Ok(CircularVerdict {
            holds: true,
            witness: None,
        });
    };
    // Factorize both rotations (unique: X is a code) and cut the block of
    // v·u that straddles the v/u junction into p·s.
    let uv = u.concat(&v);
    let xs = factorizations(&uv, &xl, 1)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal(format!("uv = {uv} lost its factorization")))?;
    let vu = v.concat(&u);
    let ys_raw = factorizations(&vu, &xl, 1)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal(format!("vu = {vu} lost its factorization")))?;
    let mut boundary = 0usize;
    let mut cut_block = None;
    for (j, y) in ys_raw.iter().enumerate() {
        let next = boundary + y.len();
        if boundary < v.len() && v.len() < next {
            cut_block = Some((j, v.len() - boundary));
            break;
        }
        boundary = next;
    }
    let Some((j, offset)) = cut_block else {
        return Err(Error::Internal(
            "purity violation does not straddle a block boundary".into(),
        ));
    };
    let p = ys_raw[j].prefix(offset);
    let s = ys_raw[j].suffix(ys_raw[j].len() - offset);
    // Paper-order reading: the cut block first, then around the circle.
    let mut ys = vec![ys_raw[j].clone()];
    ys.extend(ys_raw[j + 1..].iter().cloned());
    ys.extend(ys_raw[..j].iter().cloned());
    Ok(CircularVerdict {
        holds: false,
        witness: Some(CircularWitness { u, v, s, p, xs, ys }),
    })
}

// ---------------------------------------------------------------------------
// completeness, thinness, maximality

/// X is complete iff F(X*) = A*; the witness is a shortest non-factor.
pub fn completeness_lang(l: &RegularLang) -> Result<FlagVerdict, Error> {
    let f = l.star()?.factor_closure()?;
    Ok(match f.shortest_outside() {
        None => FlagVerdict {
            holds: true,
            witness: None,
        },
        Some(w) => FlagVerdict {
            holds: false,
            witness: Some(w),
        },
    })
}

pub fn is_complete(alphabet: &Alphabet, x: &FiniteLang) -> Result<FlagVerdict, Error> {
    x.validate_over(alphabet)?;
    completeness_lang(&RegularLang::from_words(alphabet, x)?)
}

/// X is thin iff F(X) ≠ A*; the witness is a shortest word that is a factor
/// of no member.
pub fn thinness_lang(l: &RegularLang) -> Result<FlagVerdict, Error> {
    let f = l.factor_closure()?;
    Ok(match f.shortest_outside() {
        None => FlagVerdict {
            holds: false,
            witness: None,
        },
        Some(w) => FlagVerdict {
            holds: true,
            witness: Some(w),
        },
    })
}

pub fn is_thin(alphabet: &Alphabet, x: &FiniteLang) -> Result<FlagVerdict, Error> {
    x.validate_over(alphabet)?;
    thinness_lang(&RegularLang::from_words(alphabet, x)?)
}

fn maximality_from_parts(
    invariant: bool,
    thin: &FlagVerdict,
    complete: &FlagVerdict,
) -> MaximalityReport {
    if !thin.holds {
        return MaximalityReport {
            verdict: Maximality::Unknown,
            justification: "non-thin code: the completeness criterion for maximality applies to thin codes only".into(),
            witness: None,
        };
    }
    let family = if invariant {
        "maximal, both as a code and within the invariant codes"
    } else {
        "maximal as a code"
    };
    if complete.holds {
        MaximalityReport {
            verdict: Maximality::Yes,
            justification: format!("thin and complete, hence {family}"),
            witness: None,
        }
    } else {
        MaximalityReport {
            verdict: Maximality::No,
            justification: "thin but not complete, hence not maximal".into(),
            witness: complete.witness.clone(),
        }
    }
}

/// Maximality of a code: decided via completeness for thin codes, reported
/// as unknown otherwise.
pub fn is_maximal_lang(map: &LiteralMap, l: &RegularLang) -> Result<MaximalityReport, Error> {
    let code = is_code_regular(l)?;
    if !code.holds {
        return Err(Error::NotACode("maximality is defined for codes".into()));
    }
    let thin = thinness_lang(l)?;
    let complete = completeness_lang(l)?;
    let invariant = l.invariant_under(map)?;
    Ok(maximality_from_parts(invariant, &thin, &complete))
}

pub fn is_maximal(
    map: &LiteralMap,
    alphabet: &Alphabet,
    x: &FiniteLang,
) -> Result<MaximalityReport, Error> {
    validate_code_input(alphabet, x)?;
    is_maximal_lang(map, &RegularLang::from_words(alphabet, x)?)
}

// ---------------------------------------------------------------------------
// full report

/// Runs every decider on (map, X) and assembles the report. `delay_cap`
/// bounds both delay searches, `sync_cap` the smallest-k synchronization
/// search.
pub fn analyze(
    map: &LiteralMap,
    x: &FiniteLang,
    delay_cap: u32,
    sync_cap: u32,
) -> Result<CodeReport, Error> {
    let alphabet = map.alphabet();
    validate_code_input(alphabet, x)?;
    let is_invariant = map.is_invariant(x)?;
    let is_code_v = is_code(alphabet, x)?;
    let is_prefix_v = is_prefix(alphabet, x)?;
    let is_suffix_v = is_suffix(alphabet, x)?;
    let is_bifix_v = is_bifix(alphabet, x)?;
    let (deciphering, two_way, sync) = if is_code_v.holds {
        let fdd = deciphering_delay(alphabet, x, delay_cap)?;
        let back = two_way_delay(alphabet, x, delay_cap)?;
        let mut search = SyncSearch {
            delay: None,
            cap: sync_cap,
            note: None,
        };
        for k in 1..=sync_cap {
            match is_uniformly_synchronized(alphabet, x, k) {
                Ok(rep) if rep.synchronized => {
                    search.delay = Some(k);
                    break;
                }
                Ok(_) => {}
                Err(Error::Budget(msg)) => {
                    search.note = Some(format!("search stopped early: {msg}"));
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        (Some(fdd), Some(back), Some(search))
    } else {
        (None, None, None)
    };
    let is_circular_v = is_circular(alphabet, x)?;
    let is_complete_v = is_complete(alphabet, x)?;
    let is_thin_v = is_thin(alphabet, x)?;
    let is_maximal_v = is_code_v
        .holds
        .then(|| maximality_from_parts(is_invariant, &is_thin_v, &is_complete_v));
    Ok(CodeReport {
        is_invariant,
        map_order: map.order(),
        is_code: is_code_v,
        is_prefix: is_prefix_v,
        is_suffix: is_suffix_v,
        is_bifix: is_bifix_v,
        deciphering_delay: deciphering,
        two_way_delay: two_way,
        sync_delay: sync,
        is_circular: is_circular_v,
        is_complete: is_complete_v,
        is_thin: is_thin_v,
        is_maximal: is_maximal_v,
    })
}
