//! Regular languages with decidable algebra.
//!
//! `RegularLang` wraps a canonical minimal complete DFA, so `==` *is*
//! language equality. Every constructor and combinator canonicalizes its
//! result eagerly; the values behave like opaque language terms.

use std::collections::HashMap;

use crate::automata::{Dfa, Nfa};
use crate::error::Error;
use crate::words::{Alphabet, FiniteLang, LiteralMap, MapKind, Word};

/// A regular language over a fixed alphabet. Structural equality coincides
/// with language equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularLang {
    dfa: Dfa,
}

impl RegularLang {
    fn wrap(dfa: Dfa) -> RegularLang {
        RegularLang {
            dfa: dfa.canonicalize(),
        }
    }

    fn check_alphabet(&self, other: &RegularLang) -> Result<(), Error> {
        if self.dfa.alphabet != other.dfa.alphabet {
            return Err(Error::AlphabetMismatch(
                self.dfa.alphabet.to_string(),
                other.dfa.alphabet.to_string(),
            ));
        }
        Ok(())
    }

    // ----- constructors -----

    pub fn empty(alphabet: &Alphabet) -> RegularLang {
        RegularLang::wrap(Dfa::trivial(alphabet, false))
    }

    /// The full monoid A*.
    pub fn universal(alphabet: &Alphabet) -> RegularLang {
        RegularLang::wrap(Dfa::trivial(alphabet, true))
    }

    /// The language {ε}.
    pub fn epsilon(alphabet: &Alphabet) -> RegularLang {
        Self::word(alphabet, &Word::epsilon()).expect("ε is over every alphabet")
    }

    /// The language A of single letters.
    pub fn letters(alphabet: &Alphabet) -> RegularLang {
        let words = FiniteLang::new(alphabet.letters().iter().map(|&c| Word::new([c])));
        Self::from_words(alphabet, &words).expect("letters are over the alphabet")
    }

    /// The singleton language {w}.
    pub fn word(alphabet: &Alphabet, w: &Word) -> Result<RegularLang, Error> {
        Self::from_words(alphabet, &FiniteLang::new([w.clone()]))
    }

    /// The finite language X, built as a trie.
    pub fn from_words(alphabet: &Alphabet, x: &FiniteLang) -> Result<RegularLang, Error> {
        x.validate_over(alphabet)?;
        let k = alphabet.len();
        // State 0 is the trie root; a separate dead state keeps the DFA
        // complete and is added up front as state 1.
        let mut trans: Vec<Vec<usize>> = vec![vec![1; k], vec![1; k]];
        let mut accepting = vec![false, false];
        for w in x {
            let mut s = 0;
            for &c in w.chars() {
                let a = alphabet.index_of(c).expect("validated above");
                if trans[s][a] == 1 {
                    trans.push(vec![1; k]);
                    accepting.push(false);
                    let fresh = trans.len() - 1;
                    trans[s][a] = fresh;
                }
                s = trans[s][a];
            }
            accepting[s] = true;
        }
        Ok(RegularLang::wrap(Dfa {
            alphabet: alphabet.clone(),
            trans,
            accepting,
        }))
    }

    // ----- boolean algebra -----

    pub fn union(&self, other: &RegularLang) -> Result<RegularLang, Error> {
        self.check_alphabet(other)?;
        Ok(RegularLang::wrap(
            self.dfa.product(&other.dfa, |x, y| x || y),
        ))
    }

    pub fn intersect(&self, other: &RegularLang) -> Result<RegularLang, Error> {
        self.check_alphabet(other)?;
        Ok(RegularLang::wrap(
            self.dfa.product(&other.dfa, |x, y| x && y),
        ))
    }

    /// self ∖ other.
    pub fn difference(&self, other: &RegularLang) -> Result<RegularLang, Error> {
        self.check_alphabet(other)?;
        Ok(RegularLang::wrap(
            self.dfa.product(&other.dfa, |x, y| x && !y),
        ))
    }

    /// A* ∖ self. Complementing a canonical DFA keeps it canonical.
    pub fn complement(&self) -> RegularLang {
        RegularLang {
            dfa: self.dfa.complement(),
        }
    }

    // ----- rational operations -----

    pub fn concat(&self, other: &RegularLang) -> Result<RegularLang, Error> {
        self.check_alphabet(other)?;
        let n1 = self.dfa.n();
        let mut nfa = Nfa::new(&self.dfa.alphabet, n1 + other.dfa.n());
        nfa.initial.insert(0);
        for (s, row) in self.dfa.trans.iter().enumerate() {
            for (a, &t) in row.iter().enumerate() {
                nfa.add_edge(s, a, t);
            }
        }
        for (s, row) in other.dfa.trans.iter().enumerate() {
            for (a, &t) in row.iter().enumerate() {
                nfa.add_edge(n1 + s, a, n1 + t);
            }
        }
        for (s, &acc) in self.dfa.accepting.iter().enumerate() {
            if acc {
                nfa.add_eps(s, n1); // into other's initial state
            }
        }
        for (s, &acc) in other.dfa.accepting.iter().enumerate() {
            if acc {
                nfa.accepting.insert(n1 + s);
            }
        }
        Ok(RegularLang::wrap(nfa.determinize()?))
    }

    pub fn star(&self) -> Result<RegularLang, Error> {
        let mut nfa = self.dfa.to_nfa();
        let hub = nfa.add_state();
        nfa.add_eps(hub, 0);
        let accepting: Vec<usize> = nfa.accepting.iter().copied().collect();
        for s in accepting {
            nfa.add_eps(s, hub);
        }
        nfa.initial.clear();
        nfa.initial.insert(hub);
        nfa.accepting.clear();
        nfa.accepting.insert(hub);
        Ok(RegularLang::wrap(nfa.determinize()?))
    }

    /// L⁺ = L·L*.
    pub fn plus(&self) -> Result<RegularLang, Error> {
        self.concat(&self.star()?)
    }

    /// Lⁿ, with L⁰ = {ε}.
    pub fn power(&self, n: usize) -> Result<RegularLang, Error> {
        let mut out = RegularLang::epsilon(&self.dfa.alphabet);
        for _ in 0..n {
            out = out.concat(self)?;
        }
        Ok(out)
    }

    /// The mirror language {reverse(w) : w ∈ L}.
    pub fn reverse(&self) -> Result<RegularLang, Error> {
        Ok(RegularLang::wrap(self.dfa.to_nfa().reversed().determinize()?))
    }

    // ----- quotients and closures -----

    /// K⁻¹·L = {v : ∃u ∈ K, uv ∈ L}.
    pub fn quotient_left(&self, k: &RegularLang) -> Result<RegularLang, Error> {
        self.check_alphabet(k)?;
        // States of L reachable while K accepts the consumed prefix.
        let mut nfa = self.dfa.to_nfa();
        nfa.initial.clear();
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut stack = vec![(0usize, 0usize)]; // (K state, L state)
        seen.insert((0, 0), ());
        while let Some((ks, ls)) = stack.pop() {
            if k.dfa.accepting[ks] {
                nfa.initial.insert(ls);
            }
            for a in 0..self.dfa.alphabet.len() {
                let p = (k.dfa.trans[ks][a], self.dfa.trans[ls][a]);
                if seen.insert(p, ()).is_none() {
                    stack.push(p);
                }
            }
        }
        Ok(RegularLang::wrap(nfa.determinize()?))
    }

    /// L·K⁻¹ = {u : ∃v ∈ K, uv ∈ L}.
    pub fn quotient_right(&self, k: &RegularLang) -> Result<RegularLang, Error> {
        self.check_alphabet(k)?;
        // A state s of L is good when some v ∈ K leads it to acceptance;
        // decided by backward reachability over the L×K product graph.
        let nl = self.dfa.n();
        let nk = k.dfa.n();
        let idx = |ls: usize, ks: usize| ls * nk + ks;
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); nl * nk];
        for ls in 0..nl {
            for ks in 0..nk {
                for a in 0..self.dfa.alphabet.len() {
                    preds[idx(self.dfa.trans[ls][a], k.dfa.trans[ks][a])].push(idx(ls, ks));
                }
            }
        }
        let mut good_pair = vec![false; nl * nk];
        let mut queue = std::collections::VecDeque::new();
        for ls in 0..nl {
            for ks in 0..nk {
                if self.dfa.accepting[ls] && k.dfa.accepting[ks] {
                    good_pair[idx(ls, ks)] = true;
                    queue.push_back(idx(ls, ks));
                }
            }
        }
        while let Some(p) = queue.pop_front() {
            for &q in &preds[p] {
                if !good_pair[q] {
                    good_pair[q] = true;
                    queue.push_back(q);
                }
            }
        }
        let mut dfa = self.dfa.clone();
        for ls in 0..nl {
            dfa.accepting[ls] = good_pair[idx(ls, 0)];
        }
        Ok(RegularLang::wrap(dfa))
    }

    /// P(L) = {u : ∃v, uv ∈ L}.
    pub fn prefix_closure(&self) -> RegularLang {
        let dist = self.dfa.dist_to_accept();
        let mut dfa = self.dfa.clone();
        for (s, d) in dist.iter().enumerate() {
            dfa.accepting[s] = d.is_some();
        }
        RegularLang::wrap(dfa)
    }

    /// S(L) = {v : ∃u, uv ∈ L}.
    pub fn suffix_closure(&self) -> Result<RegularLang, Error> {
        // Start anywhere: every state of the canonical DFA is reachable.
        let mut nfa = self.dfa.to_nfa();
        nfa.initial = (0..self.dfa.n()).collect();
        Ok(RegularLang::wrap(nfa.determinize()?))
    }

    /// F(L) = {v : ∃u,w, uvw ∈ L}.
    pub fn factor_closure(&self) -> Result<RegularLang, Error> {
        let dist = self.dfa.dist_to_accept();
        let mut nfa = self.dfa.to_nfa();
        nfa.initial = (0..self.dfa.n()).collect();
        nfa.accepting = (0..self.dfa.n()).filter(|&s| dist[s].is_some()).collect();
        Ok(RegularLang::wrap(nfa.determinize()?))
    }

    // ----- literal maps -----

    /// The image θ(L). For a morphism this relabels transitions by σ; an
    /// antimorphism additionally mirrors the language.
    pub fn image(&self, map: &LiteralMap) -> Result<RegularLang, Error> {
        if *map.alphabet() != self.dfa.alphabet {
            return Err(Error::AlphabetMismatch(
                map.alphabet().to_string(),
                self.dfa.alphabet.to_string(),
            ));
        }
        let k = self.dfa.alphabet.len();
        let mut relabeled = self.dfa.clone();
        for s in 0..self.dfa.n() {
            for a in 0..k {
                relabeled.trans[s][map.image_index(a)] = self.dfa.trans[s][a];
            }
        }
        let lang = RegularLang::wrap(relabeled);
        match map.kind() {
            MapKind::Morphism => Ok(lang),
            MapKind::Antimorphism => lang.reverse(),
        }
    }

    /// Whether θ(L) = L.
    pub fn invariant_under(&self, map: &LiteralMap) -> Result<bool, Error> {
        Ok(self.image(map)? == *self)
    }

    // ----- submonoid utilities -----

    /// The minimal generating set (M∖{ε}) ∖ (M∖{ε})² of a submonoid M.
    /// Rejects languages that are not submonoids.
    pub fn min_gen_set(&self) -> Result<RegularLang, Error> {
        if !self.contains(&Word::epsilon()) {
            return Err(Error::NotSubmonoid("ε is missing".into()));
        }
        if !self.concat(self)?.is_subset_of(self)? {
            return Err(Error::NotSubmonoid(
                "not closed under concatenation".into(),
            ));
        }
        let plus = self.difference(&RegularLang::epsilon(&self.dfa.alphabet))?;
        plus.difference(&plus.concat(&plus)?)
    }

    // ----- queries -----

    pub fn alphabet(&self) -> &Alphabet {
        &self.dfa.alphabet
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.dfa.accepts(w)
    }

    pub fn is_empty(&self) -> bool {
        self.dfa.is_empty_lang()
    }

    pub fn is_universal(&self) -> bool {
        self.dfa.complement().is_empty_lang()
    }

    pub fn equivalent(&self, other: &RegularLang) -> Result<bool, Error> {
        self.check_alphabet(other)?;
        Ok(self == other)
    }

    pub fn is_subset_of(&self, other: &RegularLang) -> Result<bool, Error> {
        self.check_alphabet(other)?;
        Ok(self.dfa.product(&other.dfa, |x, y| x && !y).is_empty_lang())
    }

    /// The shortlex-least member, or `None` for the empty language.
    pub fn shortest_word(&self) -> Option<Word> {
        self.dfa.shortest_accepted()
    }

    /// The shortlex-least word *not* in the language; `None` iff L = A*.
    pub fn shortest_outside(&self) -> Option<Word> {
        self.complement().shortest_word()
    }

    pub fn is_finite(&self) -> bool {
        self.dfa.is_finite_lang()
    }

    /// All members of a finite language. Errors on infinite languages and
    /// when more than `max_count` words exist.
    pub fn to_finite_lang(&self, max_count: usize) -> Result<FiniteLang, Error> {
        if !self.is_finite() {
            return Err(Error::BadArgument(
                "cannot enumerate an infinite language".into(),
            ));
        }
        // In a DFA accepting a finite language, useful paths never revisit a
        // state, so no member is longer than the state count.
        let words = self.dfa.enumerate_up_to(self.dfa.n(), max_count)?;
        Ok(FiniteLang::new(words))
    }

    /// Members of length ≤ `max_len` in shortlex order, capped at
    /// `max_count` words (a budget error beyond that).
    pub fn words_up_to(&self, max_len: usize, max_count: usize) -> Result<Vec<Word>, Error> {
        self.dfa.enumerate_up_to(max_len, max_count)
    }

    /// Number of states of the canonical automaton (a size measure).
    pub fn num_states(&self) -> usize {
        self.dfa.n()
    }

    /// Deterministic textual form of the canonical automaton: a `states N`
    /// header, `initial 0`, an `accepting` line with the accepting state
    /// indices, then one `src letter dst` line per transition, ordered by
    /// source state then alphabet.
    pub fn to_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "states {}", self.dfa.n());
        let _ = writeln!(out, "initial 0");
        let mut acc_line = String::from("accepting");
        for (s, &a) in self.dfa.accepting.iter().enumerate() {
            if a {
                let _ = write!(acc_line, " {s}");
            }
        }
        let _ = writeln!(out, "{acc_line}");
        for (s, row) in self.dfa.trans.iter().enumerate() {
            for (a, &t) in row.iter().enumerate() {
                let _ = writeln!(out, "{s} {} {t}", self.dfa.alphabet.letter(a));
            }
        }
        out
    }

    /// Internal access for the decision procedures that walk the automaton
    /// (star ambiguity, circularity).
    pub(crate) fn dfa(&self) -> &Dfa {
        &self.dfa
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn abc() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    fn lang(words: &[&str]) -> RegularLang {
        RegularLang::from_words(&ab(), &FiniteLang::of(words.iter().copied())).unwrap()
    }

    /// All words over `alphabet` up to length `n`, shortlex.
    fn all_words(alphabet: &Alphabet, n: usize) -> Vec<Word> {
        let mut out = vec![Word::epsilon()];
        let mut layer = vec![Word::epsilon()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &layer {
                for &c in alphabet.letters() {
                    let mut v = w.chars().to_vec();
                    v.push(c);
                    next.push(Word::new(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    fn members_up_to(l: &RegularLang, n: usize) -> BTreeSet<Word> {
        all_words(l.alphabet(), n)
            .into_iter()
            .filter(|w| l.contains(w))
            .collect()
    }

    #[test]
    fn from_words_accepts_exactly_the_set() {
        let l = lang(&["ab"]);
        assert!(l.contains(&Word::from("ab")));
        assert!(!l.contains(&Word::from("a")));
        assert!(!l.contains(&Word::epsilon()));
        assert!(!l.contains(&Word::from("abab")));
        assert_eq!(l.num_states(), 4); // chain of 3 plus a dead state
        assert!(RegularLang::empty(&ab()).is_empty());
    }

    #[test]
    fn star_of_ab() {
        let l = lang(&["ab"]).star().unwrap();
        assert!(l.contains(&Word::epsilon()));
        assert!(l.contains(&Word::from("abab")));
        assert!(!l.contains(&Word::from("aba")));
        assert!(!l.contains(&Word::from("a")));
    }

    #[test]
    fn complement_roundtrip_and_universality() {
        let l = lang(&["a", "ba"]);
        assert_eq!(l.complement().complement(), l);
        let all = RegularLang::universal(&ab());
        assert!(all.is_universal());
        assert!(all.complement().is_empty());
        assert_eq!(RegularLang::empty(&ab()).complement(), all);
    }

    #[test]
    fn boolean_ops_match_enumeration() {
        let l1 = lang(&["a", "ab", "ba"]);
        let l2 = lang(&["b", "ba", "aa"]);
        let union = l1.union(&l2).unwrap();
        let inter = l1.intersect(&l2).unwrap();
        let diff = l1.difference(&l2).unwrap();
        for w in all_words(&ab(), 4) {
            assert_eq!(union.contains(&w), l1.contains(&w) || l2.contains(&w));
            assert_eq!(inter.contains(&w), l1.contains(&w) && l2.contains(&w));
            assert_eq!(diff.contains(&w), l1.contains(&w) && !l2.contains(&w));
        }
    }

    #[test]
    fn concat_and_star_match_enumeration() {
        let l1 = lang(&["a", "ab"]);
        let l2 = lang(&["b", "ba"]);
        let cat = l1.concat(&l2).unwrap();
        let expected: BTreeSet<Word> = ["ab", "aba", "abb", "abba"]
            .into_iter()
            .map(Word::from)
            .collect();
        assert_eq!(members_up_to(&cat, 6), expected);

        // star by dynamic programming over membership
        let star = l1.star().unwrap();
        for w in all_words(&ab(), 6) {
            let n = w.len();
            let mut reach = vec![false; n + 1];
            reach[0] = true;
            for i in 0..n {
                if reach[i] {
                    for j in i + 1..=n {
                        if l1.contains(&Word::new(w.chars()[i..j].iter().copied())) {
                            reach[j] = true;
                        }
                    }
                }
            }
            assert_eq!(star.contains(&w), reach[n], "star disagrees on {w}");
        }
    }

    #[test]
    fn star_is_idempotent() {
        let l = lang(&["a", "abb"]);
        let s = l.star().unwrap();
        assert_eq!(s.star().unwrap(), s);
    }

    #[test]
    fn plus_excludes_epsilon_unless_present() {
        let l = lang(&["ab"]);
        let p = l.plus().unwrap();
        assert!(!p.contains(&Word::epsilon()));
        assert!(p.contains(&Word::from("ab")));
        assert!(p.contains(&Word::from("abab")));
        assert_eq!(
            p.union(&RegularLang::epsilon(&ab())).unwrap(),
            l.star().unwrap()
        );
    }

    #[test]
    fn reverse_mirrors_members() {
        let l = lang(&["aab", "b"]);
        let r = l.reverse().unwrap();
        assert!(r.contains(&Word::from("baa")));
        assert!(r.contains(&Word::from("b")));
        assert!(!r.contains(&Word::from("aab")));
        assert_eq!(r.reverse().unwrap(), l);
    }

    #[test]
    fn quotients_on_small_examples() {
        // left-quotient of (ab)* by {ab} is (ab)* again
        let star = lang(&["ab"]).star().unwrap();
        assert_eq!(star.quotient_left(&lang(&["ab"])).unwrap(), star);
        // right-quotient of {ab} by {b} is {a}
        assert_eq!(
            lang(&["ab"]).quotient_right(&lang(&["b"])).unwrap(),
            lang(&["a"])
        );
        // quotient by the empty language is empty on both sides
        let empty = RegularLang::empty(&ab());
        assert!(star.quotient_left(&empty).unwrap().is_empty());
        assert!(star.quotient_right(&empty).unwrap().is_empty());
    }

    #[test]
    fn quotients_match_enumeration() {
        let l = lang(&["a", "ab", "ba", "bab"]).star().unwrap();
        let k = lang(&["a", "ba"]);
        let left = l.quotient_left(&k).unwrap();
        let right = l.quotient_right(&k).unwrap();
        let max = 4;
        for v in all_words(&ab(), max) {
            let expect_left = ["a", "ba"]
                .iter()
                .any(|u| l.contains(&Word::from(*u).concat(&v)));
            assert_eq!(left.contains(&v), expect_left, "left quotient on {v}");
            let expect_right = ["a", "ba"]
                .iter()
                .any(|u| l.contains(&v.concat(&Word::from(*u))));
            assert_eq!(right.contains(&v), expect_right, "right quotient on {v}");
        }
    }

    #[test]
    fn closures_on_star_of_ab() {
        let star = lang(&["ab"]).star().unwrap();
        let f = star.factor_closure().unwrap();
        assert!(f.contains(&Word::from("ba")));
        assert!(!f.contains(&Word::from("aa")));
        let p = star.prefix_closure();
        assert!(p.contains(&Word::from("aba")));
        assert!(!p.contains(&Word::from("b")));
        let s = star.suffix_closure().unwrap();
        assert!(s.contains(&Word::from("bab")));
        assert!(!s.contains(&Word::from("aa")));
        // F ⊇ L ∪ P ∪ S
        assert!(star.is_subset_of(&f).unwrap());
        assert!(p.is_subset_of(&f).unwrap());
        assert!(s.is_subset_of(&f).unwrap());
    }

    #[test]
    fn closures_of_degenerate_languages() {
        let empty = RegularLang::empty(&ab());
        assert!(empty.factor_closure().unwrap().is_empty());
        let eps = RegularLang::epsilon(&ab());
        assert_eq!(eps.factor_closure().unwrap(), eps);
    }

    #[test]
    fn factor_closure_matches_enumeration() {
        let l = lang(&["ab", "bba"]).star().unwrap();
        let f = l.factor_closure().unwrap();
        // w is a factor iff some word of the language up to length 8
        // contains it; for this language length 8 suffices for |w| ≤ 4.
        let members: Vec<Word> = l.words_up_to(8, 10_000).unwrap();
        for w in all_words(&ab(), 4) {
            let expected = members.iter().any(|m| w.is_factor_of(m));
            assert_eq!(f.contains(&w), expected, "factor closure on {w}");
        }
    }

    #[test]
    fn six_word_example_factors_exclude_aaa() {
        let x = FiniteLang::of(["ab", "cb", "ca", "ba", "bc", "ac"]);
        let star = RegularLang::from_words(&abc(), &x).unwrap().star().unwrap();
        let f = star.factor_closure().unwrap();
        assert!(!f.contains(&Word::from("aaa")));
        assert_eq!(f.shortest_outside(), Some(Word::from("aaa")));
        assert!(!f.is_universal());
    }

    #[test]
    fn quotient_of_star_by_generators_contains_generators() {
        let x = FiniteLang::of(["ab", "cb", "ca", "ba", "bc", "ac"]);
        let xl = RegularLang::from_words(&abc(), &x).unwrap();
        let star = xl.star().unwrap();
        let q = star.quotient_left(&xl).unwrap();
        assert!(q.contains(&Word::epsilon()));
        for w in &x {
            assert!(q.contains(w));
        }
    }

    #[test]
    fn shortest_word_and_outside() {
        assert_eq!(RegularLang::empty(&ab()).shortest_word(), None);
        assert_eq!(
            RegularLang::empty(&ab()).shortest_outside(),
            Some(Word::epsilon())
        );
        assert_eq!(RegularLang::universal(&ab()).shortest_outside(), None);
        let l = lang(&["ba", "aa"]);
        assert_eq!(l.shortest_word(), Some(Word::from("aa")));
        let outside = RegularLang::universal(&ab()).difference(&l).unwrap();
        assert_eq!(outside.shortest_word(), Some(Word::epsilon()));
    }

    #[test]
    fn image_under_maps() {
        let swap_anti =
            LiteralMap::new(&ab(), &[('a', 'b'), ('b', 'a')], MapKind::Antimorphism).unwrap();
        let l = lang(&["ab", "aab"]);
        let img = l.image(&swap_anti).unwrap();
        assert_eq!(img, lang(&["ab", "abb"]));
        // (ab)* is invariant under the swap antimorphism
        let star = lang(&["ab"]).star().unwrap();
        assert!(star.invariant_under(&swap_anti).unwrap());
        // ...but not under the swap morphism
        let swap_morph =
            LiteralMap::new(&ab(), &[('a', 'b'), ('b', 'a')], MapKind::Morphism).unwrap();
        assert!(!star.invariant_under(&swap_morph).unwrap());
        // A* is invariant under every map
        assert!(RegularLang::universal(&ab())
            .invariant_under(&swap_morph)
            .unwrap());
    }

    #[test]
    fn image_of_star_is_star_of_image() {
        let cycle_anti = LiteralMap::new(
            &abc(),
            &[('a', 'b'), ('b', 'c'), ('c', 'a')],
            MapKind::Antimorphism,
        )
        .unwrap();
        let x = RegularLang::from_words(&abc(), &FiniteLang::of(["ab", "ca"])).unwrap();
        let lhs = x.star().unwrap().image(&cycle_anti).unwrap();
        let rhs = x.image(&cycle_anti).unwrap().star().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn min_gen_set_examples() {
        let ab_star = lang(&["ab"]).star().unwrap();
        assert_eq!(ab_star.min_gen_set().unwrap(), lang(&["ab"]));
        let all = RegularLang::universal(&ab());
        assert_eq!(all.min_gen_set().unwrap(), RegularLang::letters(&ab()));
        let free = lang(&["a", "b"]).star().unwrap();
        assert_eq!(free.min_gen_set().unwrap(), lang(&["a", "b"]));
    }

    #[test]
    fn min_gen_set_rejects_non_submonoids() {
        assert!(matches!(
            lang(&["ab"]).min_gen_set(),
            Err(Error::NotSubmonoid(_))
        ));
        // ε alone is not enough: must be closed under concatenation
        let l = lang(&["", "ab"]);
        assert!(matches!(l.min_gen_set(), Err(Error::NotSubmonoid(_))));
    }

    #[test]
    fn finiteness_and_enumeration() {
        let l = lang(&["ab", "ba"]);
        assert!(l.is_finite());
        assert_eq!(
            l.to_finite_lang(100).unwrap(),
            FiniteLang::of(["ab", "ba"])
        );
        let star = l.star().unwrap();
        assert!(!star.is_finite());
        assert!(star.to_finite_lang(100).is_err());
        let shown: Vec<String> = star
            .words_up_to(4, 100)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(shown, vec!["ε", "ab", "ba", "abab", "abba", "baab", "baba"]);
    }

    #[test]
    fn alphabet_mismatch_is_rejected() {
        let l2 = lang(&["ab"]);
        let l3 = RegularLang::from_words(&abc(), &FiniteLang::of(["ab"])).unwrap();
        assert!(matches!(
            l2.union(&l3),
            Err(Error::AlphabetMismatch(_, _))
        ));
    }

    #[test]
    fn textual_format_is_frozen() {
        let text = lang(&["ab"]).to_text();
        let expected = "\
states 4
initial 0
accepting 3
0 a 1
0 b 2
1 a 2
1 b 3
2 a 2
2 b 2
3 a 2
3 b 2
";
        assert_eq!(text, expected);
    }

    #[test]
    fn embedding_candidate_set_membership() {
        // X = {ab} over {a,b} with anchor word t: U = A* ∖ (X* ∪ A*tA*)
        // contains b but not ε.
        let t = Word::from("aaaababbbaaababbbb");
        let star = lang(&["ab"]).star().unwrap();
        let all = RegularLang::universal(&ab());
        let t_lang = RegularLang::word(&ab(), &t).unwrap();
        let with_t = all.concat(&t_lang).unwrap().concat(&all).unwrap();
        let u = all.difference(&star.union(&with_t).unwrap()).unwrap();
        assert!(!u.contains(&Word::epsilon()));
        assert!(u.contains(&Word::from("b")));
        assert!(!u.contains(&t));
    }
}
