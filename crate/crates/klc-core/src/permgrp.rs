//! Symmetric group elements in one-line notation, parabolic subgroups and
//! coset representatives, Bruhat order, and window notation for the extended
//! affine symmetric group.
//!
//! Conventions.  A permutation `w` of `{1..n}` acts on values; products
//! compose as functions, so `(w * v)(i) = w(v(i))` and in a product of simple
//! reflections the rightmost factor acts first.  The *word* of `w` is the
//! sequence `w^-1(1), ..., w^-1(n)`.  Left multiplication by `s_i` swaps the
//! entries `i` and `i+1` somewhere in the one-line form (equivalently swaps
//! positions `i, i+1` of the word), and `s_i w < w` exactly when `i` appears
//! after `i+1` in the word.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..={1}")]
    InvalidOneline(Vec<u8>, usize),
    #[error("cannot parse {0:?} as a permutation (space-free digits, n <= 9)")]
    Parse(String),
    #[error("generator index {index} out of range for n = {n}")]
    InvalidGenerator { n: usize, index: u8 },
    #[error("window {0:?} is not a valid extended affine element for n = {1}")]
    InvalidWindow(Vec<i64>, usize),
}

/// An element of `S_n`, stored as its one-line form `w(1), ..., w(n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    oneline: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { oneline: (1..=n as u8).collect() }
    }

    /// The simple reflection `s_i` swapping `i` and `i+1`, for `1 <= i <= n-1`.
    pub fn simple(n: usize, i: u8) -> Result<Self, PermError> {
        if i == 0 || (i as usize) >= n {
            return Err(PermError::InvalidGenerator { n, index: i });
        }
        let mut oneline: Vec<u8> = (1..=n as u8).collect();
        oneline.swap(i as usize - 1, i as usize);
        Ok(Perm { oneline })
    }

    pub fn from_oneline(oneline: Vec<u8>) -> Result<Self, PermError> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || (v as usize) > n || seen[v as usize] {
                return Err(PermError::InvalidOneline(oneline.clone(), n));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { oneline })
    }

    /// Build `w` from its word `w^-1(1), ..., w^-1(n)`.
    pub fn from_word(word: &[u8]) -> Result<Self, PermError> {
        Ok(Perm::from_oneline(word.to_vec())?.inverse())
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: u8) -> u8 {
        self.oneline[i as usize - 1]
    }

    pub fn oneline(&self) -> &[u8] {
        &self.oneline
    }

    /// The word `w^-1(1), ..., w^-1(n)`.
    pub fn word(&self) -> Vec<u8> {
        let mut word = vec![0u8; self.n()];
        for (pos, &v) in self.oneline.iter().enumerate() {
            word[v as usize - 1] = pos as u8 + 1;
        }
        word
    }

    pub fn inverse(&self) -> Perm {
        Perm { oneline: self.word() }
    }

    /// The composite `self · rhs`, applying `rhs` first.
    pub fn mul(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.n(), rhs.n(), "size mismatch in permutation product");
        Perm {
            oneline: rhs.oneline.iter().map(|&v| self.oneline[v as usize - 1]).collect(),
        }
    }

    /// Number of inversions of the one-line form.
    pub fn length(&self) -> usize {
        let mut len = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.oneline[i] > self.oneline[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// `{ i : s_i w < w }`, i.e. the values `i` appearing after `i+1` in the word.
    pub fn left_descents(&self) -> BTreeSet<u8> {
        let word = self.word();
        (1..self.n() as u8)
            .filter(|&i| word[i as usize - 1] > word[i as usize])
            .collect()
    }

    /// `{ i : w s_i < w }`, i.e. the positions `i` with `w(i) > w(i+1)`.
    pub fn right_descents(&self) -> BTreeSet<u8> {
        (1..self.n() as u8)
            .filter(|&i| self.oneline[i as usize - 1] > self.oneline[i as usize])
            .collect()
    }

    /// A reduced word `(i_1, ..., i_k)` with `w = s_{i_1} ... s_{i_k}`,
    /// obtained by repeatedly stripping the smallest left descent.
    pub fn left_reduced_word(&self) -> Vec<u8> {
        let mut w = self.clone();
        let mut out = Vec::with_capacity(w.length());
        loop {
            match w.left_descents().iter().next().copied() {
                None => break,
                Some(i) => {
                    out.push(i);
                    w = Perm::simple(w.n(), i).unwrap().mul(&w);
                }
            }
        }
        out
    }

    /// The word of `w` with every entry `x` replaced by `n + 1 - x`.
    pub fn sharp(&self) -> Perm {
        let n = self.n() as u8;
        let word: Vec<u8> = self.word().iter().map(|&x| n + 1 - x).collect();
        Perm::from_word(&word).unwrap()
    }

    /// `d s_i d^-1` as a simple reflection, when the transposition
    /// `(d(i), d(i+1))` is simple.
    pub fn conjugate_simple(&self, i: u8) -> Option<u8> {
        let a = self.apply(i);
        let b = self.apply(i + 1);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        (hi == lo + 1).then_some(lo)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.oneline {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Perm {
    type Err = PermError;

    /// Parse a space-free digit string such as `"436125"` (so `n <= 9`).
    fn from_str(s: &str) -> Result<Self, PermError> {
        let err = || PermError::Parse(s.to_string());
        if s.is_empty() || s.len() > 9 {
            return Err(err());
        }
        let mut oneline = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = c.to_digit(10).ok_or_else(err)?;
            oneline.push(d as u8);
        }
        Perm::from_oneline(oneline).map_err(|_| err())
    }
}

/// All of `S_n`, sorted by `(length, one-line form)`; this order refines the
/// Bruhat order and so is a valid linear extension for triangular solves.
pub fn all_perms(n: usize) -> Vec<Perm> {
    assert!(n <= 9, "full symmetric group enumeration capped at n = 9");
    let mut out = Vec::new();
    let mut items: Vec<u8> = (1..=n as u8).collect();
    permute_into(&mut items, 0, &mut out);
    out.sort_by_cached_key(|w| (w.length(), w.oneline.clone()));
    out
}

fn permute_into(items: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
    if k == items.len() {
        out.push(Perm { oneline: items.clone() });
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_into(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Bruhat order via the rank-matrix criterion: `x <= w` iff
/// `#{a <= i : x(a) >= j} <= #{a <= i : w(a) >= j}` for all `i, j`.
pub fn bruhat_leq(x: &Perm, w: &Perm) -> bool {
    assert_eq!(x.n(), w.n(), "size mismatch in Bruhat comparison");
    let n = x.n();
    for j in 1..=n as u8 {
        let mut cx = 0usize;
        let mut cw = 0usize;
        for i in 0..n {
            if x.oneline[i] >= j {
                cx += 1;
            }
            if w.oneline[i] >= j {
                cw += 1;
            }
            if cx > cw {
                return false;
            }
        }
    }
    true
}

/// A subset `J` of the simple reflections `{s_1, ..., s_{n-1}}` of `S_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Parabolic {
    n: usize,
    gens: BTreeSet<u8>,
}

impl Parabolic {
    pub fn new(n: usize, gens: impl IntoIterator<Item = u8>) -> Result<Self, PermError> {
        let gens: BTreeSet<u8> = gens.into_iter().collect();
        for &i in &gens {
            if i == 0 || (i as usize) >= n {
                return Err(PermError::InvalidGenerator { n, index: i });
            }
        }
        Ok(Parabolic { n, gens })
    }

    /// The full generating set `S = {s_1, ..., s_{n-1}}`.
    pub fn full(n: usize) -> Self {
        Parabolic { n, gens: (1..n as u8).collect() }
    }

    pub fn empty(n: usize) -> Self {
        Parabolic { n, gens: BTreeSet::new() }
    }

    /// `{s_lo, ..., s_hi}` (empty when `hi < lo`).
    pub fn range(n: usize, lo: u8, hi: u8) -> Self {
        Parabolic { n, gens: (lo..=hi).filter(|&i| i >= 1 && (i as usize) < n).collect() }
    }

    /// `S` with `s_i` removed.
    pub fn without(n: usize, i: u8) -> Self {
        let mut p = Parabolic::full(n);
        p.gens.remove(&i);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &BTreeSet<u8> {
        &self.gens
    }

    pub fn contains(&self, i: u8) -> bool {
        self.gens.contains(&i)
    }

    pub fn is_subset_of(&self, other: &Parabolic) -> bool {
        self.n == other.n && self.gens.is_subset(&other.gens)
    }

    pub fn is_full(&self) -> bool {
        self.gens.len() == self.n - 1
    }

    /// Maximal intervals `[a, b]` of `{1..n}` permuted by `W_J`; singleton
    /// intervals are included, so the blocks partition `{1..n}`.
    pub fn blocks(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        let mut start = 1u8;
        for v in 1..=self.n as u8 {
            let joined = v < self.n as u8 && self.gens.contains(&v);
            if !joined {
                out.push((start, v));
                start = v + 1;
            }
        }
        out
    }

    /// All elements of `W_J`, sorted by `(length, one-line form)`.
    pub fn elements(&self) -> Vec<Perm> {
        let blocks = self.blocks();
        let mut partial: Vec<Vec<u8>> = vec![Vec::new()];
        for &(a, b) in &blocks {
            let vals: Vec<u8> = (a..=b).collect();
            let mut block_perms = Vec::new();
            let mut items = vals;
            permute_block(&mut items, 0, &mut block_perms);
            let mut next = Vec::with_capacity(partial.len() * block_perms.len());
            for p in &partial {
                for bp in &block_perms {
                    let mut q = p.clone();
                    q.extend_from_slice(bp);
                    next.push(q);
                }
            }
            partial = next;
        }
        let mut out: Vec<Perm> = partial
            .into_iter()
            .map(|oneline| Perm { oneline })
            .collect();
        out.sort_by_cached_key(|w| (w.length(), w.oneline.clone()));
        out
    }

    pub fn order(&self) -> usize {
        self.blocks()
            .iter()
            .map(|&(a, b)| (1..=(b - a + 1) as usize).product::<usize>())
            .product()
    }
}

fn permute_block(items: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_block(items, k + 1, out);
        items.swap(k, i);
    }
}

impl fmt::Debug for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{{{}}} in S_{}", parts.join(","), self.n)
    }
}

/// Decompose `w = u · v` with `u` minimal in `w W_J` (no right descents in
/// `J`) and `v` in `W_J`.
pub fn coset_decompose_left(w: &Perm, j: &Parabolic) -> (Perm, Perm) {
    assert_eq!(w.n(), j.n());
    let mut u = w.clone();
    let mut v = Perm::identity(w.n());
    loop {
        let d = u.right_descents().into_iter().find(|i| j.contains(*i));
        match d {
            None => return (u, v),
            Some(i) => {
                let s = Perm::simple(w.n(), i).unwrap();
                u = u.mul(&s);
                v = s.mul(&v);
            }
        }
    }
}

/// Decompose `w = v · u` with `v` in `W_J` and `u` minimal in `W_J w` (no
/// left descents in `J`).
pub fn coset_decompose_right(w: &Perm, j: &Parabolic) -> (Perm, Perm) {
    assert_eq!(w.n(), j.n());
    let mut u = w.clone();
    let mut v = Perm::identity(w.n());
    loop {
        let d = u.left_descents().into_iter().find(|i| j.contains(*i));
        match d {
            None => return (v, u),
            Some(i) => {
                let s = Perm::simple(w.n(), i).unwrap();
                u = s.mul(&u);
                v = v.mul(&s);
            }
        }
    }
}

/// The minimal representatives `W^J` of the left cosets `w W_J`, i.e. the
/// elements with no right descent in `J`, sorted by `(length, one-line form)`.
pub fn min_coset_reps_left(j: &Parabolic) -> Vec<Perm> {
    min_coset_reps_left_in(&Parabolic::full(j.n()), j)
}

/// The minimal representatives `^J W` of the right cosets `W_J w`, sorted by
/// `(length, one-line form)`.
pub fn min_coset_reps_right(j: &Parabolic) -> Vec<Perm> {
    let mut out: Vec<Perm> = min_coset_reps_left(j).iter().map(Perm::inverse).collect();
    out.sort_by_cached_key(|w| (w.length(), w.oneline.clone()));
    out
}

/// The minimal representatives `W_K^J` of the left cosets of `W_J` inside the
/// parabolic `W_K`, for `J` a subset of `K`.
pub fn min_coset_reps_left_in(k: &Parabolic, j: &Parabolic) -> Vec<Perm> {
    assert!(j.is_subset_of(k), "{j:?} is not a subset of {k:?}");
    k.elements()
        .into_iter()
        .filter(|w| w.right_descents().iter().all(|i| !j.contains(*i)))
        .collect()
}

/// The minimal representative of the double coset `W_K w W_I`.
pub fn double_coset_min(w: &Perm, k: &Parabolic, i: &Parabolic) -> Perm {
    let mut m = w.clone();
    loop {
        let mut changed = false;
        if let Some(d) = m.left_descents().into_iter().find(|g| k.contains(*g)) {
            m = Perm::simple(m.n(), d).unwrap().mul(&m);
            changed = true;
        }
        if let Some(d) = m.right_descents().into_iter().find(|g| i.contains(*g)) {
            m = m.mul(&Perm::simple(m.n(), d).unwrap());
            changed = true;
        }
        if !changed {
            return m;
        }
    }
}

/// The minimal double-coset representatives `^K W ^I`, sorted by
/// `(length, one-line form)`.
pub fn double_coset_reps(k: &Parabolic, i: &Parabolic) -> Vec<Perm> {
    assert_eq!(k.n(), i.n());
    let mut set: BTreeSet<Vec<u8>> = BTreeSet::new();
    for w in all_perms(k.n()) {
        set.insert(double_coset_min(&w, k, i).oneline);
    }
    let mut out: Vec<Perm> = set.into_iter().map(|oneline| Perm { oneline }).collect();
    out.sort_by_cached_key(|w| (w.length(), w.oneline.clone()));
    out
}

/// An element of the extended affine symmetric group: a bijection
/// `w : Z -> Z` with `w(i + n) = w(i) + n`, stored by its window
/// `w^-1(1), ..., w^-1(n)` (the *word* of `w`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePerm {
    n: usize,
    word: Vec<i64>,
}

impl AffinePerm {
    pub fn from_window(n: usize, word: Vec<i64>) -> Result<Self, PermError> {
        if word.len() != n || n == 0 {
            return Err(PermError::InvalidWindow(word, n));
        }
        let mut residues: BTreeSet<i64> = BTreeSet::new();
        let mut sum = 0i64;
        for (i, &x) in word.iter().enumerate() {
            residues.insert(x.rem_euclid(n as i64));
            sum += x - (i as i64 + 1);
        }
        if residues.len() != n || sum % n as i64 != 0 {
            return Err(PermError::InvalidWindow(word, n));
        }
        Ok(AffinePerm { n, word })
    }

    pub fn identity(n: usize) -> Self {
        AffinePerm { n, word: (1..=n as i64).collect() }
    }

    /// `pi : k -> k + 1`, whose word is `0, 1, ..., n-1`.
    pub fn pi(n: usize) -> Self {
        AffinePerm { n, word: (0..n as i64).collect() }
    }

    pub fn pi_pow(n: usize, d: i64) -> Self {
        AffinePerm { n, word: (1..=n as i64).map(|i| i - d).collect() }
    }

    pub fn from_finite(w: &Perm) -> Self {
        AffinePerm {
            n: w.n(),
            word: w.word().iter().map(|&x| x as i64).collect(),
        }
    }

    /// The affine simple reflection `s_i` for `0 <= i <= n-1`; `s_i` with
    /// `i >= 1` is the finite one, and `s_0` swaps `kn` with `kn + 1`.
    pub fn simple_affine(n: usize, i: u8) -> Result<Self, PermError> {
        if (i as usize) >= n {
            return Err(PermError::InvalidGenerator { n, index: i });
        }
        if i >= 1 {
            return Ok(AffinePerm::from_finite(&Perm::simple(n, i)?));
        }
        let mut word: Vec<i64> = (1..=n as i64).collect();
        word[0] = 0;
        word[n - 1] = n as i64 + 1;
        Ok(AffinePerm { n, word })
    }

    /// `y_i = s_{i-1} ... s_1 · pi · s_{n-1} ... s_i` for `1 <= i <= n`.
    pub fn y(n: usize, i: u8) -> Result<Self, PermError> {
        if i == 0 || (i as usize) > n {
            return Err(PermError::InvalidGenerator { n, index: i });
        }
        let mut out = AffinePerm::identity(n);
        for g in (1..i).rev() {
            out = out.mul(&AffinePerm::simple_affine(n, g)?);
        }
        out = out.mul(&AffinePerm::pi(n));
        for g in (i..n as u8).rev() {
            out = out.mul(&AffinePerm::simple_affine(n, g)?);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The window `w^-1(1), ..., w^-1(n)`.
    pub fn window(&self) -> &[i64] {
        &self.word
    }

    /// `w^-1(i)` for any integer `i`.
    pub fn inv_apply(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n);
        let k = (i - 1).div_euclid(n);
        self.word[r as usize] + k * n
    }

    /// `w(i)` for any integer `i`.
    pub fn apply(&self, i: i64) -> i64 {
        self.inverse().inv_apply(i)
    }

    pub fn inverse(&self) -> AffinePerm {
        let n = self.n as i64;
        let mut word = vec![0i64; self.n];
        for (j, &t) in self.word.iter().enumerate() {
            let r = (t - 1).rem_euclid(n);
            let k = (t - 1).div_euclid(n);
            word[r as usize] = j as i64 + 1 - k * n;
        }
        AffinePerm { n: self.n, word }
    }

    /// The composite `self · rhs`, applying `rhs` first.
    pub fn mul(&self, rhs: &AffinePerm) -> AffinePerm {
        assert_eq!(self.n, rhs.n, "size mismatch in affine product");
        AffinePerm {
            n: self.n,
            word: self.word.iter().map(|&x| rhs.inv_apply(x)).collect(),
        }
    }

    /// The degree `d` with `self = pi^d · v` for `v` in the affine Weyl group.
    pub fn pi_degree(&self) -> i64 {
        let n = self.n as i64;
        let sum: i64 = self
            .word
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (i as i64 + 1))
            .sum();
        -sum / n
    }

    /// `sum_{i<j} |floor((word_j - word_i)/n)|`, the affine inversion count.
    pub fn length(&self) -> usize {
        let n = self.n as i64;
        let mut len = 0i64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                len += (self.word[j] - self.word[i]).div_euclid(n).abs();
            }
        }
        len as usize
    }

    /// Finite left descents: `{ i in 1..n-1 : s_i w < w }`.
    pub fn left_descents_finite(&self) -> BTreeSet<u8> {
        (1..self.n as u8)
            .filter(|&i| self.word[i as usize - 1] > self.word[i as usize])
            .collect()
    }

    /// Decompose `self = v · m` with `v` finite (in `W_{K_0}`) and `m` of
    /// minimal length in `W_{K_0} · self`, i.e. with increasing window.
    pub fn strip_finite_left(&self) -> (Perm, AffinePerm) {
        let mut m = self.clone();
        let mut v = Perm::identity(self.n);
        loop {
            match m.left_descents_finite().iter().next().copied() {
                None => return (v, m),
                Some(i) => {
                    m.word.swap(i as usize - 1, i as usize);
                    v = v.mul(&Perm::simple(self.n, i).unwrap());
                }
            }
        }
    }

    /// The finite permutation with the same window, if the window is a
    /// permutation of `1..n`.
    pub fn to_finite(&self) -> Option<Perm> {
        let word: Vec<u8> = self
            .word
            .iter()
            .map(|&x| u8::try_from(x).ok().filter(|&v| v >= 1 && (v as usize) <= self.n))
            .collect::<Option<_>>()?;
        Perm::from_word(&word).ok()
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn word_is_inverse_oneline() {
        let w = p("436125");
        assert_eq!(w.word(), vec![4, 5, 2, 1, 6, 3]);
        assert_eq!(Perm::from_word(&[4, 5, 2, 1, 6, 3]).unwrap(), w);
        assert_eq!(w.inverse().oneline(), &[4, 5, 2, 1, 6, 3]);
    }

    #[test]
    fn descents_match_word_convention() {
        let w = Perm::from_word(&[5, 2, 1, 6, 3, 4]).unwrap();
        assert_eq!(w, p("325614"));
        assert_eq!(w.left_descents(), BTreeSet::from([1, 2, 4]));
        assert_eq!(w.right_descents(), BTreeSet::from([1, 4]));
        for i in w.left_descents() {
            let s = Perm::simple(6, i).unwrap();
            assert!(s.mul(&w).length() < w.length());
        }
        for i in w.right_descents() {
            let s = Perm::simple(6, i).unwrap();
            assert!(w.mul(&s).length() < w.length());
        }
    }

    #[test]
    fn reduced_word_reconstructs() {
        for w in all_perms(5) {
            let rw = w.left_reduced_word();
            assert_eq!(rw.len(), w.length());
            let mut prod = Perm::identity(5);
            for i in &rw {
                prod = prod.mul(&Perm::simple(5, *i).unwrap());
            }
            assert_eq!(prod, w);
        }
    }

    #[test]
    fn sharp_twist_complements_word() {
        let w = p("436125");
        assert_eq!(w.sharp().word(), vec![3, 2, 5, 6, 1, 4]);
        assert_eq!(w.sharp().sharp(), w);
    }

    #[test]
    fn parabolic_blocks_and_order() {
        let j = Parabolic::new(6, [1, 2, 4]).unwrap();
        assert_eq!(j.blocks(), vec![(1, 3), (4, 5), (6, 6)]);
        assert_eq!(j.order(), 12);
        assert_eq!(j.elements().len(), 12);
        assert_eq!(Parabolic::without(6, 2).gens(), &BTreeSet::from([1, 3, 4, 5]));
        assert_eq!(Parabolic::range(6, 3, 5).gens(), &BTreeSet::from([3, 4, 5]));
        assert!(Parabolic::range(6, 4, 3).gens().is_empty());
    }

    #[test]
    fn coset_decompositions_multiply_back() {
        let j = Parabolic::range(6, 2, 5);
        for w in all_perms(6).into_iter().step_by(7) {
            let (u, v) = coset_decompose_left(&w, &j);
            assert_eq!(u.mul(&v), w);
            assert!(u.right_descents().iter().all(|i| !j.contains(*i)));
            assert!(j.elements().contains(&v));
            assert_eq!(u.length() + v.length(), w.length());

            let (v2, u2) = coset_decompose_right(&w, &j);
            assert_eq!(v2.mul(&u2), w);
            assert!(u2.left_descents().iter().all(|i| !j.contains(*i)));
            assert_eq!(v2.length() + u2.length(), w.length());
        }
    }

    #[test]
    fn min_reps_of_j_prime_are_the_a_k() {
        // a_k = s_{k-1} ... s_1 are the minimal left-coset representatives of
        // W_{J'_{n-1}} with J'_{n-1} = {s_2, ..., s_{n-1}}.
        let n = 4;
        let j = Parabolic::without(n, 1);
        let reps = min_coset_reps_left(&j);
        let mut expected = Vec::new();
        for k in 1..=n as u8 {
            let mut a = Perm::identity(n);
            for g in (1..k).rev() {
                a = a.mul(&Perm::simple(n, g).unwrap());
            }
            expected.push(a);
        }
        assert_eq!(reps, expected);
    }

    #[test]
    fn min_reps_of_j_are_the_b_k() {
        // b_k = s_k ... s_{n-1} (and b_n = 1) are the minimal left-coset
        // representatives of W_{J_{n-1}} with J_{n-1} = {s_1, ..., s_{n-2}}.
        let n = 4;
        let j = Parabolic::without(n, (n - 1) as u8);
        let reps: BTreeSet<Perm> = min_coset_reps_left(&j).into_iter().collect();
        let mut expected = BTreeSet::new();
        for k in 1..=n as u8 {
            let mut b = Perm::identity(n);
            for g in k..n as u8 {
                b = b.mul(&Perm::simple(n, g).unwrap());
            }
            expected.insert(b);
        }
        assert_eq!(reps, expected);
    }

    #[test]
    fn double_coset_reps_for_adjacent_parabolics() {
        // ^K W ^I = {1, s_1} for K = I = J'_{n-1}.
        let n = 4;
        let j = Parabolic::without(n, 1);
        let reps = double_coset_reps(&j, &j);
        assert_eq!(reps, vec![Perm::identity(n), Perm::simple(n, 1).unwrap()]);
    }

    #[test]
    fn bruhat_basics() {
        let id = Perm::identity(3);
        let w0 = p("321");
        for w in all_perms(3) {
            assert!(bruhat_leq(&id, &w));
            assert!(bruhat_leq(&w, &w0));
            assert!(bruhat_leq(&w, &w));
        }
        assert!(!bruhat_leq(&p("213"), &p("132")));
        assert!(!bruhat_leq(&p("132"), &p("213")));
    }

    #[test]
    fn affine_window_of_pi2_s2_s0_s1() {
        let n = 4;
        let w = AffinePerm::pi_pow(n, 2)
            .mul(&AffinePerm::simple_affine(n, 2).unwrap())
            .mul(&AffinePerm::simple_affine(n, 0).unwrap())
            .mul(&AffinePerm::simple_affine(n, 1).unwrap());
        assert_eq!(w.window(), &[-3, 2, 0, 3]);
        assert_eq!(w.pi_degree(), 2);
        assert_eq!(w.mul(&w.inverse()), AffinePerm::identity(n));
    }

    #[test]
    fn affine_length_and_pi_invariance() {
        let n = 4;
        assert_eq!(AffinePerm::pi(n).length(), 0);
        assert_eq!(AffinePerm::simple_affine(n, 0).unwrap().length(), 1);
        for w in all_perms(n) {
            let a = AffinePerm::from_finite(&w);
            assert_eq!(a.length(), w.length());
            assert_eq!(AffinePerm::pi(n).mul(&a).length(), w.length());
        }
    }

    #[test]
    fn affine_pi_commutation_and_y_elements() {
        // s_i pi = pi s_{i-1} with indices mod n, and the y_i multiply out to
        // translations: y_i has window i - n at position i.
        let n = 4;
        for i in 1..n as u8 {
            let lhs = AffinePerm::simple_affine(n, i)
                .unwrap()
                .mul(&AffinePerm::pi(n));
            let rhs = AffinePerm::pi(n).mul(&AffinePerm::simple_affine(n, i - 1).unwrap());
            assert_eq!(lhs, rhs);
        }
        for i in 1..=n as u8 {
            let y = AffinePerm::y(n, i).unwrap();
            let mut expect: Vec<i64> = (1..=n as i64).collect();
            expect[i as usize - 1] -= n as i64;
            assert_eq!(y.window(), &expect[..], "y_{i}");
        }
    }

    #[test]
    fn affine_strip_finite_left() {
        let n = 4;
        let w = AffinePerm::pi_pow(n, 2)
            .mul(&AffinePerm::simple_affine(n, 2).unwrap())
            .mul(&AffinePerm::simple_affine(n, 0).unwrap())
            .mul(&AffinePerm::simple_affine(n, 1).unwrap());
        let (v, m) = w.strip_finite_left();
        assert_eq!(AffinePerm::from_finite(&v).mul(&m), w);
        let win = m.window();
        assert!(win.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(v.length() + m.length(), w.length());
    }

    #[test]
    fn window_validation() {
        assert!(AffinePerm::from_window(4, vec![-3, 2, 0, 3]).is_ok());
        assert!(AffinePerm::from_window(4, vec![1, 2, 3, 3]).is_err());
        assert!(AffinePerm::from_window(4, vec![1, 2, 3, 5]).is_err());
        assert!(AffinePerm::from_window(4, vec![0, 2, 3, 5]).is_ok());
    }
}
