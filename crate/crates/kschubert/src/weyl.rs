//! Weyl group enumeration, Bruhat order, minimal coset representatives,
//! the parabolic Moebius function and the descent partition of W.
//!
//! Elements are canonically identified by their action matrix on weight
//! coordinates; reduced words are stored for the Demazure machinery but two
//! elements are equal iff their matrices are equal.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};

/// Index of an element inside its enumerated group.
pub type ElemId = usize;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    /// Row-major `rank x rank` action matrix on fundamental-weight coordinates.
    pub matrix: Vec<i64>,
    /// The lexicographically smallest reduced word (zero-based letters).
    pub word: Vec<u8>,
    pub length: u32,
}

/// A subset of simple-root indices, stored sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ParabolicSubset {
    indices: Vec<usize>,
    mask: u32,
}

impl ParabolicSubset {
    pub fn new(rank: usize, indices: &[usize]) -> Result<ParabolicSubset> {
        let mut sorted: Vec<usize> = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&i| i >= rank) {
            return Err(Error::Usage(format!(
                "simple-root index out of range for rank {rank}"
            )));
        }
        let mask = sorted.iter().fold(0u32, |m, &i| m | (1 << i));
        Ok(ParabolicSubset {
            indices: sorted,
            mask,
        })
    }

    pub fn from_mask(rank: usize, mask: u32) -> ParabolicSubset {
        let indices: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
        ParabolicSubset { indices, mask }
    }

    pub fn empty(_rank: usize) -> ParabolicSubset {
        ParabolicSubset {
            indices: Vec::new(),
            mask: 0,
        }
    }

    pub fn full(rank: usize) -> ParabolicSubset {
        ParabolicSubset::from_mask(rank, (1u32 << rank) - 1)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn contains(&self, j: usize) -> bool {
        self.mask & (1 << j) != 0
    }

    pub fn complement(&self, rank: usize) -> ParabolicSubset {
        ParabolicSubset::from_mask(rank, !self.mask & ((1u32 << rank) - 1))
    }

    pub fn is_subset_of(&self, other: &ParabolicSubset) -> bool {
        self.mask & !other.mask == 0
    }

    /// Parse CLI syntax: comma-separated one-based indices, e.g. "2" or "1,2".
    pub fn parse(rank: usize, s: &str) -> Result<ParabolicSubset> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ParabolicSubset::empty(rank));
        }
        let mut idx = Vec::new();
        for tok in s.split(',') {
            let i: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad index '{tok}' in I")))?;
            if i == 0 || i > rank {
                return Err(Error::Usage(format!(
                    "index {i} out of range 1..={rank} in I"
                )));
            }
            idx.push(i - 1);
        }
        ParabolicSubset::new(rank, &idx)
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The enumerated Weyl group of a root system, with memoized Bruhat order.
pub struct WeylGroup {
    rank: usize,
    elems: Vec<WeylElement>,
    index: HashMap<Vec<i64>, ElemId>,
    /// `bruhat[u][w]` is `u <= w` in Bruhat order.
    bruhat: Vec<Vec<bool>>,
    longest: ElemId,
    simple_matrices: Vec<Vec<i64>>,
}

impl WeylGroup {
    /// Enumerate the whole group by breadth-first closure from the identity.
    ///
    /// Elements come out sorted by (length, lexicographic reduced word), which
    /// fixes serialization order everywhere downstream.
    pub fn build(rs: &RootSystem) -> WeylGroup {
        let rank = rs.rank();
        let simple_matrices: Vec<Vec<i64>> = (0..rank)
            .map(|j| {
                let mut m = identity_matrix(rank);
                for i in 0..rank {
                    m[i * rank + j] -= rs.datum.cartan[i][j];
                }
                m
            })
            .collect();

        let mut elems = vec![WeylElement {
            matrix: identity_matrix(rank),
            word: Vec::new(),
            length: 0,
        }];
        let mut index = HashMap::new();
        index.insert(elems[0].matrix.clone(), 0usize);

        let mut level: Vec<ElemId> = vec![0];
        let mut length = 0u32;
        while !level.is_empty() {
            length += 1;
            let mut next: Vec<WeylElement> = Vec::new();
            let mut next_index: HashMap<Vec<i64>, usize> = HashMap::new();
            // Ascending j first: the first discovery of an element uses its
            // smallest possible leading letter, so words are lexicographic minima.
            for j in 0..rank {
                for &wid in &level {
                    let m = mat_mul(rank, &simple_matrices[j], &elems[wid].matrix);
                    if index.contains_key(&m) || next_index.contains_key(&m) {
                        continue;
                    }
                    let mut word = Vec::with_capacity(elems[wid].word.len() + 1);
                    word.push(j as u8);
                    word.extend_from_slice(&elems[wid].word);
                    next_index.insert(m.clone(), next.len());
                    next.push(WeylElement {
                        matrix: m,
                        word,
                        length,
                    });
                }
            }
            next.sort_by(|a, b| a.word.cmp(&b.word));
            level = Vec::with_capacity(next.len());
            for e in next {
                let id = elems.len();
                index.insert(e.matrix.clone(), id);
                elems.push(e);
                level.push(id);
            }
        }

        let longest = elems.len() - 1;
        let mut wg = WeylGroup {
            rank,
            elems,
            index,
            bruhat: Vec::new(),
            longest,
            simple_matrices,
        };
        wg.bruhat = wg.compute_bruhat();
        wg
    }

    fn compute_bruhat(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        // leq[u][w], filled for w in increasing length using the recursion
        // through a left descent of w.
        let mut leq = vec![vec![false; n]; n];
        for u in 0..n {
            leq[u][0] = u == 0;
        }
        for w in 1..n {
            let j = self.elems[w].word[0] as usize;
            let wp = self.left_mul_simple(j, w);
            debug_assert!(self.elems[wp].length + 1 == self.elems[w].length);
            for u in 0..n {
                let su = self.left_mul_simple(j, u);
                leq[u][w] = if self.elems[su].length < self.elems[u].length {
                    leq[su][wp]
                } else {
                    leq[u][wp]
                };
            }
        }
        leq
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elems
    }

    pub fn elem(&self, id: ElemId) -> &WeylElement {
        &self.elems[id]
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn longest_element(&self) -> ElemId {
        self.longest
    }

    pub fn length(&self, id: ElemId) -> u32 {
        self.elems[id].length
    }

    /// `det(w) = (-1)^{l(w)}`.
    pub fn det(&self, id: ElemId) -> i64 {
        if self.elems[id].length % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn left_mul_simple(&self, j: usize, w: ElemId) -> ElemId {
        let m = mat_mul(self.rank, &self.simple_matrices[j], &self.elems[w].matrix);
        self.index[&m]
    }

    pub fn simple_reflection(&self, j: usize) -> ElemId {
        self.index[&self.simple_matrices[j]]
    }

    pub fn mult(&self, a: ElemId, b: ElemId) -> ElemId {
        let m = mat_mul(self.rank, &self.elems[a].matrix, &self.elems[b].matrix);
        self.index[&m]
    }

    pub fn inverse(&self, a: ElemId) -> ElemId {
        let mut m = identity_matrix(self.rank);
        for &j in self.elems[a].word.iter().rev() {
            m = mat_mul(self.rank, &m, &self.simple_matrices[j as usize]);
        }
        self.index[&m]
    }

    /// Matrix-vector action on a weight.
    pub fn act_weight(&self, w: ElemId, lambda: &Weight) -> Weight {
        let m = &self.elems[w].matrix;
        let r = self.rank;
        assert_eq!(lambda.rank(), r, "rank mismatch in weyl action");
        let mut out = vec![0i64; r];
        for i in 0..r {
            let mut acc: i64 = 0;
            for k in 0..r {
                acc = acc
                    .checked_add(
                        m[i * r + k]
                            .checked_mul(lambda.0[k])
                            .expect("weight coordinate overflow"),
                    )
                    .expect("weight coordinate overflow");
            }
            out[i] = acc;
        }
        Weight(out)
    }

    /// Bruhat order via the memoized subword-criterion table.
    pub fn bruhat_leq(&self, u: ElemId, w: ElemId) -> bool {
        self.bruhat[u][w]
    }

    /// Right descent test: `l(w s_j) < l(w)`.
    pub fn has_right_descent(&self, w: ElemId, j: usize) -> bool {
        let ws = self.mult(w, self.simple_reflection(j));
        self.elems[ws].length < self.elems[w].length
    }

    /// Minimal-length coset representatives `W^I`, in enumeration order.
    pub fn min_coset_reps(&self, i_set: &ParabolicSubset) -> Vec<ElemId> {
        (0..self.order())
            .filter(|&w| i_set.indices().iter().all(|&j| !self.has_right_descent(w, j)))
            .collect()
    }

    /// The parabolic subgroup `W_I` as a sorted list of element ids.
    pub fn subgroup(&self, i_set: &ParabolicSubset) -> Vec<ElemId> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(w) = stack.pop() {
            for &j in i_set.indices() {
                let nw = self.left_mul_simple(j, w);
                if !seen[nw] {
                    seen[nw] = true;
                    stack.push(nw);
                }
            }
        }
        (0..self.order()).filter(|&w| seen[w]).collect()
    }

    /// Moebius function of the induced Bruhat order on `W^I`:
    /// `(-1)^{l(v)+l(w)}` when the full interval `[v,w]` in `W` stays inside
    /// `W^I`, zero otherwise (and zero when `v` is not below `w`).
    pub fn mobius(&self, i_set: &ParabolicSubset, v: ElemId, w: ElemId) -> Result<i64> {
        let reps = self.min_coset_reps(i_set);
        for x in [v, w] {
            if !reps.contains(&x) {
                return Err(Error::NotMinimalRep(
                    self.render(x),
                    format!("{i_set}"),
                ));
            }
        }
        if !self.bruhat_leq(v, w) {
            return Ok(0);
        }
        let inside = (0..self.order())
            .filter(|&u| self.bruhat_leq(v, u) && self.bruhat_leq(u, w))
            .all(|u| reps.contains(&u));
        if inside {
            Ok(if (self.elems[v].length + self.elems[w].length) % 2 == 0 {
                1
            } else {
                -1
            })
        } else {
            Ok(0)
        }
    }

    /// The partition `C^I = W^{Delta minus I} minus the union over J strictly
    /// inside I of W^{Delta minus J}`, for every subset I, keyed by bitmask.
    pub fn partition(&self) -> Vec<(ParabolicSubset, Vec<ElemId>)> {
        let rank = self.rank;
        let full = (1u32 << rank) - 1;
        let mut reps_by_mask: Vec<Vec<ElemId>> = Vec::with_capacity(full as usize + 1);
        for mask in 0..=full {
            let i_set = ParabolicSubset::from_mask(rank, mask);
            let complement = i_set.complement(rank);
            reps_by_mask.push(self.min_coset_reps(&complement));
        }
        let mut out = Vec::with_capacity(full as usize + 1);
        for mask in 0..=full {
            let mut members = reps_by_mask[mask as usize].clone();
            members.retain(|w| {
                for sub in 0..mask {
                    if sub & mask == sub && reps_by_mask[sub as usize].contains(w) {
                        return false;
                    }
                }
                true
            });
            out.push((ParabolicSubset::from_mask(rank, mask), members));
        }
        out
    }

    /// The unique subset I with `w` in `C^I`.
    pub fn partition_tag(&self, w: ElemId) -> ParabolicSubset {
        for (i_set, members) in self.partition() {
            if members.contains(&w) {
                return i_set;
            }
        }
        unreachable!("partition covers W");
    }

    /// All reduced words of `w`, for word-independence tests.
    pub fn reduced_words(&self, w: ElemId) -> Vec<Vec<u8>> {
        if w == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in 0..self.rank {
            let sw = self.left_mul_simple(j, w);
            if self.elems[sw].length < self.elems[w].length {
                for mut tail in self.reduced_words(sw) {
                    let mut word = vec![j as u8];
                    word.append(&mut tail);
                    out.push(word);
                }
            }
        }
        out
    }

    /// Element named by a (not necessarily reduced) word.
    pub fn element_by_word(&self, word: &[u8]) -> ElemId {
        let mut cur = 0usize;
        for &j in word {
            cur = self.mult(cur, self.simple_reflection(j as usize));
        }
        cur
    }

    /// Render as a reduced word, `"e"` for the identity.
    pub fn render(&self, w: ElemId) -> String {
        if w == 0 {
            return "e".to_string();
        }
        let parts: Vec<String> = self.elems[w]
            .word
            .iter()
            .map(|j| format!("s{}", j + 1))
            .collect();
        parts.join(" ")
    }

    /// Parse `"e"`, `"s1 s2"`, or bare `"s"` (rank-one shorthand). Unreduced
    /// words are accepted and canonicalized.
    pub fn parse_word(&self, s: &str) -> Result<ElemId> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "1" {
            return Ok(0);
        }
        let mut word = Vec::new();
        for tok in s.split_whitespace() {
            let body = tok.strip_prefix('s').unwrap_or(tok);
            let j: usize = if body.is_empty() {
                1
            } else {
                body.parse()
                    .map_err(|_| Error::Usage(format!("bad word token '{tok}'")))?
            };
            if j == 0 || j > self.rank {
                return Err(Error::Usage(format!(
                    "letter {tok} out of range for rank {}",
                    self.rank
                )));
            }
            word.push((j - 1) as u8);
        }
        Ok(self.element_by_word(&word))
    }

    /// Number of positive roots sent negative by `w`; equals `l(w)`.
    pub fn inversions(&self, rs: &RootSystem, w: ElemId) -> usize {
        rs.positive_roots
            .iter()
            .filter(|beta| {
                let image = self.act_weight(w, beta);
                rs.is_positive_root(&image.neg())
            })
            .count()
    }
}

fn identity_matrix(rank: usize) -> Vec<i64> {
    let mut m = vec![0i64; rank * rank];
    for i in 0..rank {
        m[i * rank + i] = 1;
    }
    m
}

fn mat_mul(rank: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; rank * rank];
    for i in 0..rank {
        for k in 0..rank {
            let aik = a[i * rank + k];
            if aik == 0 {
                continue;
            }
            for j in 0..rank {
                out[i * rank + j] += aik * b[k * rank + j];
            }
        }
    }
    out
}
