//! Free hulls and invariant free hulls of finite sets, with the defect
//! bound and initial/terminal-factor witnesses.
//!
//! The free hull of X is the least free submonoid of A* containing X; its
//! minimal generating set Y satisfies |Y| ≤ |X| − 1 whenever X is not a
//! code (the defect theorem). The invariant variant closes under the
//! literal map as well and enjoys the same bound relative to the closed
//! input.

use serde::Serialize;

use crate::error::Error;
use crate::lang::RegularLang;
use crate::props;
use crate::words::{shortlex_key, Alphabet, FiniteLang, LiteralMap, Word};

/// Cap on closure passes; the candidate pool is finite, so reaching this is
/// a bug guard, not an expected outcome.
const ALTERNATION_BUDGET: u32 = 256;

/// A generator together with an input word whose unique factorization over
/// the generators starts (or ends) with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorWitness {
    pub generator: Word,
    pub witness: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullResult {
    /// Minimal generating set Y of the hull.
    pub generators: FiniteLang,
    /// Input after closure under the map (equals the input for the plain
    /// free hull); the defect bound and the factor maps are relative to it.
    pub closed_input: FiniteLang,
    /// Closure passes performed.
    pub iterations: u32,
    /// True when the closed input is a code (bound vacuous) or
    /// |Y| ≤ |closed input| − 1.
    pub defect_holds: bool,
    /// For every generator, a closed-input word whose factorization starts
    /// with it.
    pub initial_factor_map: Vec<FactorWitness>,
    /// For every generator, a closed-input word whose factorization ends
    /// with it.
    pub terminal_factor_map: Vec<FactorWitness>,
}

fn validate_input(alphabet: &Alphabet, x: &FiniteLang) -> Result<(), Error> {
    x.validate_over(alphabet)?;
    if x.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    if x.contains_epsilon() {
        return Err(Error::EpsilonInLanguage);
    }
    Ok(())
}

/// All proper non-empty prefixes of the members, shortest first then in
/// alphabet order.
fn proper_prefix_pool(alphabet: &Alphabet, x: &FiniteLang) -> Vec<Word> {
    let mut pool: Vec<Word> = x
        .iter()
        .flat_map(|w| (1..w.len()).map(|i| w.prefix(i)))
        .collect();
    pool.sort_by_key(|w| shortlex_key(alphabet, w));
    pool.dedup();
    pool
}

/// Minimal generating set of the submonoid generated by `g`, as a finite
/// set (it is a subset of `g`, hence finite).
fn normalize(alphabet: &Alphabet, g: &FiniteLang) -> Result<FiniteLang, Error> {
    let star = RegularLang::from_words(alphabet, g)?.star()?;
    star.min_gen_set()?.to_finite_lang(g.len() + 1)
}

/// Core closure: repeatedly adjoin the shortest pool word that witnesses a
/// stability failure of G* (w ∉ G* but w ∈ (G*)⁻¹G* ∩ G*(G*)⁻¹), then
/// re-minimize. At the fixpoint G* is stable, hence free; every adjoined
/// word lies in every free submonoid containing the previous G*, so the
/// fixpoint is the least free submonoid containing the input.
///
/// Restricting candidates to the pool is complete: a minimal-length
/// stability violation is always a proper prefix of a generator word, and
/// generators stay within prefixes of the input across iterations.
fn free_hull_steps(
    alphabet: &Alphabet,
    input: &FiniteLang,
) -> Result<(FiniteLang, u32), Error> {
    let pool = proper_prefix_pool(alphabet, input);
    let mut g = normalize(alphabet, input)?;
    let mut iterations = 0u32;
    loop {
        iterations += 1;
        if iterations > pool.len() as u32 + 2 {
            return Err(Error::Budget(
                "free-hull closure exceeded its step budget".into(),
            ));
        }
        let gstar = RegularLang::from_words(alphabet, &g)?.star()?;
        let left = gstar.quotient_left(&gstar)?;
        let right = gstar.quotient_right(&gstar)?;
        let candidate = pool
            .iter()
            .find(|w| !gstar.contains(w) && left.contains(w) && right.contains(w));
        match candidate {
            None => return Ok((g, iterations)),
            Some(w) => {
                let mut grown = g.clone();
                grown.insert(w.clone());
                g = normalize(alphabet, &grown)?;
            }
        }
    }
}

/// Factor maps per the defect theorem: every generator is the initial
/// (terminal) factor of some closed-input word. Absence of a witness would
/// contradict the theorem and is reported as an internal error.
fn factor_maps(
    alphabet: &Alphabet,
    generators: &FiniteLang,
    closed: &FiniteLang,
) -> Result<(Vec<FactorWitness>, Vec<FactorWitness>), Error> {
    let ystar = RegularLang::from_words(alphabet, generators)?.star()?;
    let mut initial = Vec::new();
    let mut terminal = Vec::new();
    for y in generators.sorted_shortlex(alphabet) {
        let init_witness = closed
            .sorted_shortlex(alphabet)
            .into_iter()
            .find(|x| {
                x.strip_prefix(&y)
                    .map(|rest| ystar.contains(&rest))
                    .unwrap_or(false)
            })
            .ok_or_else(|| {
                Error::Internal(format!(
                    "generator {y} is the initial factor of no input word"
                ))
            })?;
        let term_witness = closed
            .sorted_shortlex(alphabet)
            .into_iter()
            .find(|x| {
                y.is_suffix_of(x) && ystar.contains(&x.prefix(x.len() - y.len()))
            })
            .ok_or_else(|| {
                Error::Internal(format!(
                    "generator {y} is the terminal factor of no input word"
                ))
            })?;
        initial.push(FactorWitness {
            generator: y.clone(),
            witness: init_witness,
        });
        terminal.push(FactorWitness {
            generator: y,
            witness: term_witness,
        });
    }
    Ok((initial, terminal))
}

fn assemble(
    alphabet: &Alphabet,
    generators: FiniteLang,
    closed: FiniteLang,
    iterations: u32,
) -> Result<HullResult, Error> {
    let closed_is_code = props::is_code(alphabet, &closed)?.holds;
    let defect_holds = closed_is_code || generators.len() <= closed.len().saturating_sub(1);
    let (initial_factor_map, terminal_factor_map) =
        factor_maps(alphabet, &generators, &closed)?;
    Ok(HullResult {
        generators,
        closed_input: closed,
        iterations,
        defect_holds,
        initial_factor_map,
        terminal_factor_map,
    })
}

/// Minimal generating set of the least free submonoid containing X.
pub fn free_hull(alphabet: &Alphabet, x: &FiniteLang) -> Result<HullResult, Error> {
    validate_input(alphabet, x)?;
    let (generators, iterations) = free_hull_steps(alphabet, x)?;
    assemble(alphabet, generators, x.clone(), iterations)
}

/// Minimal generating set of the least free submonoid containing X that is
/// also invariant under the map. X is first closed under the map; the
/// computation then alternates hull and orbit closure to the joint
/// fixpoint. Both closures stay inside every invariant free submonoid
/// containing X, so the fixpoint is least.
pub fn invariant_free_hull(map: &LiteralMap, x: &FiniteLang) -> Result<HullResult, Error> {
    let alphabet = map.alphabet();
    validate_input(alphabet, x)?;
    let closed = map.orbit_lang(x)?;
    let mut g = closed.clone();
    let mut rounds = 0u32;
    let generators = loop {
        rounds += 1;
        if rounds > ALTERNATION_BUDGET {
            return Err(Error::Budget(
                "invariant-hull alternation exceeded its step budget".into(),
            ));
        }
        let (h, _) = free_hull_steps(alphabet, &g)?;
        let h_closed = map.orbit_lang(&h)?;
        if h_closed == h {
            break h;
        }
        g = h_closed;
    };
    assemble(alphabet, generators, closed, rounds)
}

/// `invariant_free_hull` with the factor maps treated as the point of the
/// call: the result carries, for every generator, the words of the closed
/// input that exhibit it as an initial and as a terminal factor. A missing
/// witness surfaces as an internal error (assembly already checks this).
pub fn defect_report(map: &LiteralMap, x: &FiniteLang) -> Result<HullResult, Error> {
    invariant_free_hull(map, x)
}
