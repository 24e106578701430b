use crate::error::{Error, Result};
use crate::pattern::Symbol;

use super::Sft;

const MAX_VERTICES: usize = 1 << 20;

/// De Bruijn graph of a one-dimensional SFT.
///
/// Vertices are the allowed words of length `k = max(span - 1, 1)`, where
/// `span` is the widest forbidden pattern; `u -> v` is an edge when `v`
/// shifts `u` by one symbol and the `(k+1)`-word they spell is allowed.
/// Trimming keeps the vertices that lie on a bi-infinite path, so the words
/// labelling paths of the trimmed graph are exactly the language.
#[derive(Debug, Clone)]
pub struct DeBruijnAutomaton {
    k: usize,
    radix: usize,
    /// `allowed[v]`: vertex word avoids every forbidden pattern.
    allowed: Vec<bool>,
    /// `alive[v]`: vertex survives trimming.
    alive: Vec<bool>,
    /// `edge[v * radix + s]`: the edge `v -> shift(v, s)` is allowed.
    edge: Vec<bool>,
}

fn decode(mut v: usize, k: usize, radix: usize) -> Vec<Symbol> {
    let mut out = vec![Symbol(0); k];
    for i in (0..k).rev() {
        out[i] = Symbol((v % radix) as u16);
        v /= radix;
    }
    out
}

fn avoids(word: &[Symbol], runs: &[Vec<Option<Symbol>>]) -> bool {
    runs.iter().all(|f| {
        if f.len() > word.len() {
            return true;
        }
        (0..=word.len() - f.len()).all(|off| {
            f.iter()
                .enumerate()
                .any(|(i, s)| s.is_some_and(|s| word[off + i] != s))
        })
    })
}

impl DeBruijnAutomaton {
    pub fn build(x: &Sft) -> Result<Self> {
        let ctx = x.ctx();
        if !ctx.is_one_dimensional() {
            return Err(Error::NotOneDimensional {
                op: "language_exact_1d",
            });
        }
        let runs: Vec<Vec<Option<Symbol>>> = x
            .forbidden()
            .iter()
            .map(|f| f.to_run(ctx).map(|(_, run)| run))
            .collect::<Result<_>>()?;
        let radix = x.alphabet().len();
        // An empty forbidden pattern occurs everywhere.
        let everything_forbidden = runs.iter().any(|r| r.is_empty());
        let span = runs.iter().map(Vec::len).max().unwrap_or(0);
        let k = span.saturating_sub(1).max(1);
        let nverts = radix
            .checked_pow(k as u32)
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or_else(|| Error::Document(format!("de Bruijn graph too large ({radix}^{k} vertices)")))?;

        let allowed: Vec<bool> = (0..nverts)
            .map(|v| !everything_forbidden && avoids(&decode(v, k, radix), &runs))
            .collect();
        let mut edge = vec![false; nverts * radix];
        for v in 0..nverts {
            if !allowed[v] {
                continue;
            }
            let mut word = decode(v, k, radix);
            word.push(Symbol(0));
            for s in 0..radix {
                word[k] = Symbol(s as u16);
                let next = (v * radix + s) % nverts;
                edge[v * radix + s] = allowed[next] && avoids(&word, &runs);
            }
        }

        let mut alive = allowed.clone();
        loop {
            let mut has_out = vec![false; nverts];
            let mut has_in = vec![false; nverts];
            for v in 0..nverts {
                if !alive[v] {
                    continue;
                }
                for s in 0..radix {
                    let w = (v * radix + s) % nverts;
                    if edge[v * radix + s] && alive[w] {
                        has_out[v] = true;
                        has_in[w] = true;
                    }
                }
            }
            let mut changed = false;
            for v in 0..nverts {
                if alive[v] && !(has_out[v] && has_in[v]) {
                    alive[v] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        Ok(DeBruijnAutomaton {
            k,
            radix,
            allowed,
            alive,
            edge,
        })
    }

    pub fn block_length(&self) -> usize {
        self.k
    }

    /// Number of allowed vertices before trimming. Any locally admissible
    /// word that is not in the language dies within this many cells of margin.
    pub fn trimming_bound(&self) -> usize {
        self.allowed.iter().filter(|&&a| a).count()
    }

    pub fn live_vertices(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn is_empty(&self) -> bool {
        self.live_vertices() == 0
    }

    fn nverts(&self) -> usize {
        self.alive.len()
    }

    fn step(&self, v: usize, s: usize) -> Option<usize> {
        let w = (v * self.radix + s) % self.nverts();
        (self.edge[v * self.radix + s] && self.alive[w]).then_some(w)
    }

    /// Does some word of the language of length `run.len()` agree with `run`
    /// on every non-hole position?
    pub fn admits(&self, run: &[Option<Symbol>]) -> bool {
        let matches = |v: usize, offset: usize, len: usize| {
            decode(v, self.k, self.radix)
                .iter()
                .take(len)
                .enumerate()
                .all(|(i, s)| run[offset + i].is_none_or(|r| r == *s))
        };
        let n = run.len();
        if n <= self.k {
            return (0..self.nverts()).any(|v| self.alive[v] && matches(v, 0, n));
        }
        let mut current: Vec<bool> = (0..self.nverts())
            .map(|v| self.alive[v] && matches(v, 0, self.k))
            .collect();
        for pos in self.k..n {
            let mut next = vec![false; self.nverts()];
            for v in 0..self.nverts() {
                if !current[v] {
                    continue;
                }
                for s in 0..self.radix {
                    if run[pos].is_some_and(|r| r.0 as usize != s) {
                        continue;
                    }
                    if let Some(w) = self.step(v, s) {
                        next[w] = true;
                    }
                }
            }
            current = next;
        }
        current.iter().any(|&b| b)
    }

    pub fn contains(&self, word: &[Symbol]) -> bool {
        let run: Vec<Option<Symbol>> = word.iter().copied().map(Some).collect();
        self.admits(&run)
    }

    /// Number of words of length `len` in the language.
    pub fn count(&self, len: usize) -> u128 {
        if len <= self.k {
            return self.words(len).len() as u128;
        }
        let mut ways: Vec<u128> = self.alive.iter().map(|&a| a as u128).collect();
        for _ in self.k..len {
            let mut next = vec![0u128; self.nverts()];
            for v in 0..self.nverts() {
                if ways[v] == 0 {
                    continue;
                }
                for s in 0..self.radix {
                    if let Some(w) = self.step(v, s) {
                        next[w] += ways[v];
                    }
                }
            }
            ways = next;
        }
        ways.iter().sum()
    }

    /// All words of length `len` in the language, lexicographically sorted.
    pub fn words(&self, len: usize) -> Vec<Vec<Symbol>> {
        let mut out = Vec::new();
        if len <= self.k {
            let mut set = std::collections::BTreeSet::new();
            for v in 0..self.nverts() {
                if self.alive[v] {
                    set.insert(decode(v, self.k, self.radix)[..len].to_vec());
                }
            }
            return set.into_iter().collect();
        }
        fn extend(aut: &DeBruijnAutomaton, v: usize, word: &mut Vec<Symbol>, len: usize, out: &mut Vec<Vec<Symbol>>) {
            if word.len() == len {
                out.push(word.clone());
                return;
            }
            for s in 0..aut.radix {
                if let Some(w) = aut.step(v, s) {
                    word.push(Symbol(s as u16));
                    extend(aut, w, word, len, out);
                    word.pop();
                }
            }
        }
        for v in 0..self.nverts() {
            if self.alive[v] {
                let mut word = decode(v, self.k, self.radix);
                extend(self, v, &mut word, len, &mut out);
            }
        }
        out
    }
}
