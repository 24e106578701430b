//! Breadth-first relator rewriting on cyclic words.
//!
//! A word `w` is trivial in `<S | R>` iff its cyclic reduction can be brought
//! to the empty word by repeatedly inserting a cyclic conjugate of a relator
//! (or of its inverse) at some position and cyclically reducing. Each
//! insertion costs one unit of fuel; free cancellation is normalization and
//! is not charged.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::word::Word;

/// One relator application: insert `variants[relator]` before letter
/// `position` of the current cyclic word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RewriteStep {
    pub position: usize,
    pub relator: usize,
}

/// Every cyclic rotation of every relator and of its inverse, cyclically
/// reduced, deduplicated and sorted. Indices into this list are stable for a
/// fixed relator set, which is what certificates refer to.
pub fn relator_variants(relators: &[Word]) -> Vec<Word> {
    let mut out = BTreeSet::new();
    for r in relators {
        for base in [r.clone(), r.inverse()] {
            let base = cyclically_reduced(&base);
            let letters = base.letters();
            for k in 0..letters.len().max(1) {
                let mut rot = letters[k..].to_vec();
                rot.extend_from_slice(&letters[..k]);
                let rot = Word::from_letters(rot);
                if !rot.is_empty() {
                    out.insert(rot);
                }
            }
        }
    }
    out.into_iter().collect()
}

pub fn cyclically_reduced(w: &Word) -> Word {
    let reduced = w.freely_reduced();
    let letters = reduced.letters();
    let (mut lo, mut hi) = (0, letters.len());
    while hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    Word::from_letters(letters[lo..hi].to_vec())
}

/// Least rotation of a cyclically reduced word.
pub fn canonical_rotation(w: &Word) -> Word {
    let letters = w.letters();
    (0..letters.len().max(1))
        .map(|k| {
            let mut rot = letters[k.min(letters.len())..].to_vec();
            rot.extend_from_slice(&letters[..k.min(letters.len())]);
            Word::from_letters(rot)
        })
        .min()
        .unwrap_or_default()
}

fn normalize(w: &Word) -> Word {
    canonical_rotation(&cyclically_reduced(w))
}

fn apply(state: &Word, step: RewriteStep, variants: &[Word]) -> Option<Word> {
    let rel = variants.get(step.relator)?;
    let letters = state.letters();
    if step.position > letters.len() {
        return None;
    }
    let mut v = letters[..step.position].to_vec();
    v.extend_from_slice(rel.letters());
    v.extend_from_slice(&letters[step.position..]);
    Some(normalize(&Word::from_letters(v)))
}

/// Searches for a derivation of `w = 1` using at most `fuel` relator
/// applications. Returns the steps on success.
pub fn prove_trivial(w: &Word, variants: &[Word], fuel: usize) -> Option<Vec<RewriteStep>> {
    let start = normalize(w);
    if start.is_empty() {
        return Some(Vec::new());
    }
    let mut parent: HashMap<Word, (Word, RewriteStep)> = HashMap::new();
    let mut seen: HashSet<Word> = HashSet::new();
    seen.insert(start.clone());
    // Each application shortens the word by at most the longest relator, so
    // states longer than `remaining * max_len` cannot reach the empty word.
    let max_len = variants.iter().map(Word::len).max().unwrap_or(0);
    if start.len() > fuel * max_len {
        return None;
    }
    let mut frontier = vec![start.clone()];
    for depth in 0..fuel {
        let budget = (fuel - depth - 1) * max_len;
        let mut next = Vec::new();
        for state in &frontier {
            // Positions on a cyclic word are equivalent up to rotation, but
            // the normalized state fixes the rotation, so all of them count.
            let npos = state.len().max(1);
            for position in 0..npos {
                for relator in 0..variants.len() {
                    let step = RewriteStep { position, relator };
                    let Some(succ) = apply(state, step, variants) else {
                        continue;
                    };
                    if succ.len() > budget {
                        continue;
                    }
                    if !seen.insert(succ.clone()) {
                        continue;
                    }
                    parent.insert(succ.clone(), (state.clone(), step));
                    if succ.is_empty() {
                        let mut steps = vec![step];
                        let mut cur = state.clone();
                        while cur != start {
                            let (p, s) = parent[&cur].clone();
                            steps.push(s);
                            cur = p;
                        }
                        steps.reverse();
                        return Some(steps);
                    }
                    next.push(succ);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    None
}

/// Replays a derivation without searching.
pub fn replay(w: &Word, variants: &[Word], steps: &[RewriteStep]) -> bool {
    let mut state = normalize(w);
    for &step in steps {
        match apply(&state, step, variants) {
            Some(s) => state = s,
            None => return false,
        }
    }
    state.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn commutator_is_trivial_in_one_step() {
        let vars = relator_variants(&[w("abAB")]);
        let steps = prove_trivial(&w("abAB"), &vars, 1).unwrap();
        assert_eq!(steps.len(), 1);
        assert!(replay(&w("abAB"), &vars, &steps));
        assert!(prove_trivial(&w("abAB"), &vars, 0).is_none());
    }

    #[test]
    fn two_commutations_need_two_steps() {
        // aab = baa in Z^2 needs two swaps.
        let vars = relator_variants(&[w("abAB")]);
        let word = w("aab").concat(&w("baa").inverse());
        assert!(prove_trivial(&word, &vars, 1).is_none());
        let steps = prove_trivial(&word, &vars, 2).unwrap();
        assert!(replay(&word, &vars, &steps));
    }

    #[test]
    fn distinct_generators_never_proved_equal() {
        let vars = relator_variants(&[w("abAB")]);
        assert!(prove_trivial(&w("aB"), &vars, 3).is_none());
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(cyclically_reduced(&w("abcA")), w("bc"));
        assert_eq!(cyclically_reduced(&w("aA")), Word::empty());
        assert_eq!(canonical_rotation(&w("ba")), w("ab"));
    }

    #[test]
    fn tampered_replay_fails() {
        let vars = relator_variants(&[w("abAB")]);
        let mut steps = prove_trivial(&w("abAB"), &vars, 1).unwrap();
        steps[0].relator = (steps[0].relator + 1) % vars.len();
        assert!(!replay(&w("abAB"), &vars, &steps));
    }
}
