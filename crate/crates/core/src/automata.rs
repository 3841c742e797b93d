//! Finite-automaton machinery: NFAs for construction, DFAs in a canonical
//! form for decision.
//!
//! The canonical form is the minimal complete DFA with states renumbered by
//! breadth-first search from the initial state (letters explored in alphabet
//! order, initial state always 0). Minimal complete DFAs are unique up to
//! isomorphism, and the BFS numbering fixes the isomorphism, so two canonical
//! DFAs accept the same language iff they are structurally equal.

use std::collections::{BTreeSet, HashMap};

use crate::error::Error;
use crate::words::{Alphabet, Word};

/// Cap on subset-construction output; beyond this the operation reports a
/// budget error instead of thrashing.
pub(crate) const MAX_DFA_STATES: usize = 1 << 17;

/// A complete deterministic automaton. The initial state is always 0 and
/// every state has a transition for every letter (index-aligned with the
/// alphabet).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Dfa {
    pub alphabet: Alphabet,
    pub trans: Vec<Vec<usize>>,
    pub accepting: Vec<bool>,
}

/// Builds the BFS-renumbered restriction of a transition table to the states
/// reachable from `init` (which becomes state 0).
fn renumber_from(trans: &[Vec<usize>], accepting: &[bool], init: usize, alphabet: &Alphabet) -> Dfa {
    let mut map = vec![usize::MAX; trans.len()];
    let mut order = Vec::new();
    map[init] = 0;
    order.push(init);
    let mut qi = 0;
    while qi < order.len() {
        let s = order[qi];
        qi += 1;
        for a in 0..alphabet.len() {
            let t = trans[s][a];
            if map[t] == usize::MAX {
                map[t] = order.len();
                order.push(t);
            }
        }
    }
    Dfa {
        alphabet: alphabet.clone(),
        trans: order
            .iter()
            .map(|&s| trans[s].iter().map(|&t| map[t]).collect())
            .collect(),
        accepting: order.iter().map(|&s| accepting[s]).collect(),
    }
}

impl Dfa {
    /// The one-state automaton accepting everything (`accepting = true`) or
    /// nothing (`accepting = false`).
    pub fn trivial(alphabet: &Alphabet, accepting: bool) -> Dfa {
        Dfa {
            alphabet: alphabet.clone(),
            trans: vec![vec![0; alphabet.len()]],
            accepting: vec![accepting],
        }
    }

    pub fn n(&self) -> usize {
        self.trans.len()
    }

    pub fn step(&self, s: usize, letter_idx: usize) -> usize {
        self.trans[s][letter_idx]
    }

    /// Runs the automaton from the initial state; `None` when the word uses a
    /// letter outside the alphabet.
    pub fn run(&self, w: &Word) -> Option<usize> {
        let mut s = 0;
        for &c in w.chars() {
            s = self.trans[s][self.alphabet.index_of(c)?];
        }
        Some(s)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(w).map(|s| self.accepting[s]).unwrap_or(false)
    }

    pub fn accepting_state(&self, s: usize) -> bool {
        self.accepting[s]
    }

    /// Minimal complete DFA, BFS-renumbered. Idempotent.
    pub fn canonicalize(self) -> Dfa {
        // Restrict to reachable states first so they cannot distort the
        // partition refinement.
        let d = renumber_from(&self.trans, &self.accepting, 0, &self.alphabet);
        let n = d.n();
        let mut class: Vec<usize> = d.accepting.iter().map(|&b| usize::from(b)).collect();
        let mut n_classes = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            // Signature = own class plus the classes of all successors; equal
            // signatures merge. Refinement only splits, so a stable class
            // count means a stable partition.
            let mut sig_ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next = vec![0usize; n];
            for s in 0..n {
                let sig = (
                    class[s],
                    d.trans[s].iter().map(|&t| class[t]).collect::<Vec<_>>(),
                );
                let fresh = sig_ids.len();
                next[s] = *sig_ids.entry(sig).or_insert(fresh);
            }
            let m = sig_ids.len();
            class = next;
            if m == n_classes {
                break;
            }
            n_classes = m;
        }
        let k = self.alphabet.len();
        let mut trans = vec![vec![usize::MAX; k]; n_classes];
        let mut accepting = vec![false; n_classes];
        for s in 0..n {
            accepting[class[s]] |= d.accepting[s];
            for a in 0..k {
                trans[class[s]][a] = class[d.trans[s][a]];
            }
        }
        renumber_from(&trans, &accepting, class[0], &self.alphabet)
    }

    /// Product automaton with acceptance combined by `f`; only reachable
    /// pairs are built. Alphabets must already agree.
    pub fn product(&self, other: &Dfa, f: impl Fn(bool, bool) -> bool) -> Dfa {
        let k = self.alphabet.len();
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(0usize, 0usize)];
        ids.insert((0, 0), 0);
        let mut trans: Vec<Vec<usize>> = Vec::new();
        let mut accepting: Vec<bool> = Vec::new();
        let mut qi = 0;
        while qi < pairs.len() {
            let (s, t) = pairs[qi];
            qi += 1;
            accepting.push(f(self.accepting[s], other.accepting[t]));
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let p = (self.trans[s][a], other.trans[t][a]);
                let id = *ids.entry(p).or_insert_with(|| {
                    pairs.push(p);
                    pairs.len() - 1
                });
                row.push(id);
            }
            trans.push(row);
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            trans,
            accepting,
        }
    }

    /// Complement. Canonical input yields canonical output: distinguishable
    /// state pairs are the same for the complement.
    pub fn complement(&self) -> Dfa {
        Dfa {
            alphabet: self.alphabet.clone(),
            trans: self.trans.clone(),
            accepting: self.accepting.iter().map(|&b| !b).collect(),
        }
    }

    /// States from which some accepting state is reachable, with the length
    /// of a shortest such path (`None` for dead states).
    pub fn dist_to_accept(&self) -> Vec<Option<usize>> {
        let n = self.n();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, row) in self.trans.iter().enumerate() {
            for &t in row {
                preds[t].push(s);
            }
        }
        let mut dist = vec![None; n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n {
            if self.accepting[s] {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(t) = queue.pop_front() {
            let d = dist[t].unwrap();
            for &s in &preds[t] {
                if dist[s].is_none() {
                    dist[s] = Some(d + 1);
                    queue.push_back(s);
                }
            }
        }
        dist
    }

    /// Whether any accepting state is reachable from the initial one.
    pub fn is_empty_lang(&self) -> bool {
        self.dist_to_accept()[0].is_none()
    }

    /// The shortest accepted word, ties broken by alphabet order; `None` for
    /// the empty language. BFS dequeues states in shortlex order of their
    /// discovery words, so the first accepting state reached gives the
    /// shortlex-minimal word.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let n = self.n();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            if self.accepting[s] {
                let mut letters = Vec::new();
                let mut cur = s;
                while let Some((p, a)) = parent[cur] {
                    letters.push(self.alphabet.letter(a));
                    cur = p;
                }
                letters.reverse();
                return Some(Word::new(letters));
            }
            for a in 0..self.alphabet.len() {
                let t = self.trans[s][a];
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((s, a));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Whether the accepted language is finite: no cycle among useful states
    /// (reachable and co-accessible).
    pub fn is_finite_lang(&self) -> bool {
        let dist = self.dist_to_accept();
        let reach = {
            let mut r = vec![false; self.n()];
            let mut stack = vec![0usize];
            r[0] = true;
            while let Some(s) = stack.pop() {
                for &t in &self.trans[s] {
                    if !r[t] {
                        r[t] = true;
                        stack.push(t);
                    }
                }
            }
            r
        };
        let useful: Vec<bool> = (0..self.n())
            .map(|s| reach[s] && dist[s].is_some())
            .collect();
        // Iterative three-color DFS for a cycle within the useful subgraph.
        let mut color = vec![0u8; self.n()]; // 0 white, 1 gray, 2 black
        for root in 0..self.n() {
            if !useful[root] || color[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            color[root] = 1;
            while let Some(&mut (s, ref mut ai)) = stack.last_mut() {
                if *ai < self.alphabet.len() {
                    let t = self.trans[s][*ai];
                    *ai += 1;
                    if !useful[t] {
                        continue;
                    }
                    match color[t] {
                        0 => {
                            color[t] = 1;
                            stack.push((t, 0));
                        }
                        1 => return false, // back edge: cycle
                        _ => {}
                    }
                } else {
                    color[s] = 2;
                    stack.pop();
                }
            }
        }
        true
    }

    /// All accepted words of length ≤ `max_len`, in shortlex order, pruning
    /// via shortest-distance-to-acceptance. Errors when more than `max_count`
    /// words exist.
    pub fn enumerate_up_to(&self, max_len: usize, max_count: usize) -> Result<Vec<Word>, Error> {
        let dist = self.dist_to_accept();
        let mut out = Vec::new();
        let mut prefix: Vec<char> = Vec::new();
        self.enumerate_rec(0, max_len, max_count, &dist, &mut prefix, &mut out)?;
        out.sort_by_key(|w| crate::words::shortlex_key(&self.alphabet, w));
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        s: usize,
        remaining: usize,
        max_count: usize,
        dist: &[Option<usize>],
        prefix: &mut Vec<char>,
        out: &mut Vec<Word>,
    ) -> Result<(), Error> {
        if self.accepting[s] {
            if out.len() >= max_count {
                return Err(Error::Budget(format!(
                    "enumeration exceeded {max_count} words"
                )));
            }
            out.push(Word::new(prefix.iter().copied()));
        }
        if remaining == 0 {
            return Ok(());
        }
        for a in 0..self.alphabet.len() {
            let t = self.trans[s][a];
            if matches!(dist[t], Some(d) if d < remaining) {
                prefix.push(self.alphabet.letter(a));
                self.enumerate_rec(t, remaining - 1, max_count, dist, prefix, out)?;
                prefix.pop();
            }
        }
        Ok(())
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut nfa = Nfa::new(&self.alphabet, self.n());
        nfa.initial.insert(0);
        for (s, row) in self.trans.iter().enumerate() {
            for (a, &t) in row.iter().enumerate() {
                nfa.trans[s][a].insert(t);
            }
        }
        for (s, &acc) in self.accepting.iter().enumerate() {
            if acc {
                nfa.accepting.insert(s);
            }
        }
        nfa
    }
}

/// A nondeterministic automaton with ε-transitions; the construction side of
/// the engine. Only ever used transiently before determinization.
#[derive(Debug, Clone)]
pub(crate) struct Nfa {
    pub alphabet: Alphabet,
    pub initial: BTreeSet<usize>,
    pub accepting: BTreeSet<usize>,
    pub trans: Vec<Vec<BTreeSet<usize>>>,
    pub eps: Vec<BTreeSet<usize>>,
}

impl Nfa {
    pub fn new(alphabet: &Alphabet, n: usize) -> Nfa {
        Nfa {
            alphabet: alphabet.clone(),
            initial: BTreeSet::new(),
            accepting: BTreeSet::new(),
            trans: vec![vec![BTreeSet::new(); alphabet.len()]; n],
            eps: vec![BTreeSet::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.trans.len()
    }

    pub fn add_state(&mut self) -> usize {
        self.trans.push(vec![BTreeSet::new(); self.alphabet.len()]);
        self.eps.push(BTreeSet::new());
        self.trans.len() - 1
    }

    pub fn add_edge(&mut self, s: usize, letter_idx: usize, t: usize) {
        self.trans[s][letter_idx].insert(t);
    }

    pub fn add_eps(&mut self, s: usize, t: usize) {
        self.eps[s].insert(t);
    }

    fn eps_closure(&self, seed: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut out: BTreeSet<usize> = seed.into_iter().collect();
        let mut stack: Vec<usize> = out.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if out.insert(t) {
                    stack.push(t);
                }
            }
        }
        out
    }

    /// Reverses the automaton: initial and accepting swap, all edges flip.
    pub fn reversed(&self) -> Nfa {
        let mut rev = Nfa::new(&self.alphabet, self.n());
        rev.initial = self.accepting.clone();
        rev.accepting = self.initial.clone();
        for (s, row) in self.trans.iter().enumerate() {
            for (a, targets) in row.iter().enumerate() {
                for &t in targets {
                    rev.trans[t][a].insert(s);
                }
            }
        }
        for (s, targets) in self.eps.iter().enumerate() {
            for &t in targets {
                rev.eps[t].insert(s);
            }
        }
        rev
    }

    /// Subset construction. The result is complete (the empty subset is the
    /// dead state) but not yet minimal.
    pub fn determinize(&self) -> Result<Dfa, Error> {
        let k = self.alphabet.len();
        let start: Vec<usize> = self
            .eps_closure(self.initial.iter().copied())
            .into_iter()
            .collect();
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        ids.insert(start.clone(), 0);
        let mut subsets = vec![start];
        let mut trans: Vec<Vec<usize>> = Vec::new();
        let mut accepting: Vec<bool> = Vec::new();
        let mut qi = 0;
        while qi < subsets.len() {
            let cur = subsets[qi].clone();
            qi += 1;
            accepting.push(cur.iter().any(|s| self.accepting.contains(s)));
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let mut step = BTreeSet::new();
                for &s in &cur {
                    step.extend(self.trans[s][a].iter().copied());
                }
                let key: Vec<usize> = self.eps_closure(step).into_iter().collect();
                let id = match ids.get(&key) {
                    Some(&i) => i,
                    None => {
                        let i = subsets.len();
                        if i >= MAX_DFA_STATES {
                            return Err(Error::Budget(format!(
                                "determinization exceeded {MAX_DFA_STATES} states"
                            )));
                        }
                        ids.insert(key.clone(), i);
                        subsets.push(key);
                        i
                    }
                };
                row.push(id);
            }
            trans.push(row);
        }
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            trans,
            accepting,
        })
    }

    /// Determinize and canonicalize in one step.
    #[cfg(test)]
    pub fn to_canonical_dfa(&self) -> Result<Dfa, Error> {
        Ok(self.determinize()?.canonicalize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    /// A deliberately redundant DFA for "even number of a's" over {a,b}:
    /// four states where two suffice.
    fn redundant_parity() -> Dfa {
        Dfa {
            alphabet: ab(),
            trans: vec![vec![1, 0], vec![2, 1], vec![3, 2], vec![0, 3]],
            accepting: vec![true, false, true, false],
        }
    }

    #[test]
    fn canonicalize_merges_equivalent_states() {
        let c = redundant_parity().canonicalize();
        assert_eq!(c.n(), 2);
        assert!(c.accepting[0]);
        assert!(!c.accepting[1]);
        assert!(c.accepts(&Word::from("babab"))); // two a's
        assert!(!c.accepts(&Word::from("aabab"))); // three a's
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let c = redundant_parity().canonicalize();
        assert_eq!(c.clone().canonicalize(), c);
    }

    #[test]
    fn canonicalize_drops_unreachable_states() {
        let d = Dfa {
            alphabet: ab(),
            trans: vec![vec![0, 0], vec![0, 1]],
            accepting: vec![true, false],
        };
        assert_eq!(d.canonicalize().n(), 1);
    }

    #[test]
    fn trivial_automata() {
        let all = Dfa::trivial(&ab(), true);
        let none = Dfa::trivial(&ab(), false);
        assert!(all.accepts(&Word::from("abba")));
        assert!(all.accepts(&Word::epsilon()));
        assert!(!none.accepts(&Word::epsilon()));
        assert!(none.is_empty_lang());
        assert!(!all.is_empty_lang());
        assert!(none.is_finite_lang());
        assert!(!all.is_finite_lang());
    }

    #[test]
    fn product_booleans() {
        let even_a = redundant_parity().canonicalize();
        let odd_a = even_a.complement();
        assert!(even_a.product(&odd_a, |x, y| x && y).is_empty_lang());
        let either = even_a.product(&odd_a, |x, y| x || y).canonicalize();
        assert_eq!(either, Dfa::trivial(&ab(), true));
    }

    #[test]
    fn shortest_accepted_breaks_ties_by_alphabet_order() {
        // Accepts exactly {ba, ab} over alphabet "ba": shortest should be ba.
        let alphabet = Alphabet::parse("ba").unwrap();
        let mut nfa = Nfa::new(&alphabet, 5);
        nfa.initial.insert(0);
        nfa.accepting.insert(4);
        let b = 0;
        let a = 1;
        nfa.add_edge(0, b, 1);
        nfa.add_edge(1, a, 4);
        nfa.add_edge(0, a, 2);
        nfa.add_edge(2, b, 4);
        let dfa = nfa.to_canonical_dfa().unwrap();
        assert_eq!(dfa.shortest_accepted(), Some(Word::from("ba")));
    }

    #[test]
    fn determinize_handles_eps_cycles() {
        // Two states in an ε-cycle, edge on a to an accepting state.
        let mut nfa = Nfa::new(&ab(), 3);
        nfa.initial.insert(0);
        nfa.add_eps(0, 1);
        nfa.add_eps(1, 0);
        nfa.add_edge(1, 0, 2);
        nfa.accepting.insert(2);
        let dfa = nfa.to_canonical_dfa().unwrap();
        assert!(dfa.accepts(&Word::from("a")));
        assert!(!dfa.accepts(&Word::from("b")));
        assert!(!dfa.accepts(&Word::epsilon()));
        assert!(dfa.is_finite_lang());
    }

    #[test]
    fn reversal_reverses_words() {
        let mut nfa = Nfa::new(&ab(), 4);
        nfa.initial.insert(0);
        nfa.accepting.insert(3);
        nfa.add_edge(0, 0, 1); // a
        nfa.add_edge(1, 0, 2); // a
        nfa.add_edge(2, 1, 3); // b
        let fwd = nfa.to_canonical_dfa().unwrap();
        let rev = nfa.reversed().to_canonical_dfa().unwrap();
        assert!(fwd.accepts(&Word::from("aab")));
        assert!(rev.accepts(&Word::from("baa")));
        assert!(!rev.accepts(&Word::from("aab")));
    }

    #[test]
    fn enumerate_respects_budget_and_order() {
        let all = Dfa::trivial(&ab(), true);
        let words = all.enumerate_up_to(2, 100).unwrap();
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, vec!["ε", "a", "b", "aa", "ab", "ba", "bb"]);
        assert!(matches!(
            all.enumerate_up_to(2, 3),
            Err(Error::Budget(_))
        ));
    }
}
