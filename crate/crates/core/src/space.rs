//! Dense indexing of all tuples of length `0..=N` over a chain of size `m`.
//!
//! Tuples are numbered by length first and lexicographically (first
//! coordinate most significant) within a length, so index order is the
//! canonical `(length, chain order)` order. Index 0 is ε.

use crate::chain::TupleKey;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleSpace {
    base: usize,
    max_len: usize,
    offsets: Vec<usize>,
    pows: Vec<usize>,
    lens: Vec<u8>,
}

impl TupleSpace {
    pub fn new(base: usize, max_len: usize) -> Self {
        assert!(base >= 1, "tuple space over an empty chain");
        let mut pows = Vec::with_capacity(max_len + 1);
        let mut p = 1usize;
        for _ in 0..=max_len {
            pows.push(p);
            p = p.checked_mul(base).expect("tuple space too large");
        }
        let mut offsets = Vec::with_capacity(max_len + 2);
        let mut acc = 0usize;
        for &p in &pows {
            offsets.push(acc);
            acc += p;
        }
        offsets.push(acc);
        let mut lens = Vec::with_capacity(acc);
        for (len, &p) in pows.iter().enumerate() {
            lens.extend(std::iter::repeat_n(len as u8, p));
        }
        TupleSpace {
            base,
            max_len,
            offsets,
            pows,
            lens,
        }
    }

    /// Chain size.
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of tuples, ε included.
    pub fn total(&self) -> usize {
        self.offsets[self.max_len + 1]
    }

    /// Number of tuples of exactly this length (`m^len`).
    pub fn count(&self, len: usize) -> usize {
        self.pows[len]
    }

    pub fn indices_of_len(&self, len: usize) -> std::ops::Range<usize> {
        self.offsets[len]..self.offsets[len + 1]
    }

    /// Indices of all nonempty tuples.
    pub fn nonempty(&self) -> std::ops::Range<usize> {
        1..self.total()
    }

    pub fn len_of(&self, idx: usize) -> usize {
        self.lens[idx] as usize
    }

    pub fn code_of(&self, idx: usize) -> usize {
        idx - self.offsets[self.len_of(idx)]
    }

    pub fn index_of_code(&self, len: usize, code: usize) -> usize {
        self.offsets[len] + code
    }

    /// Index of a tuple, or `None` if it is longer than `max_len`.
    pub fn index(&self, items: &[u32]) -> Option<usize> {
        if items.len() > self.max_len {
            return None;
        }
        let code = items
            .iter()
            .fold(0usize, |acc, &s| acc * self.base + s as usize);
        Some(self.offsets[items.len()] + code)
    }

    pub fn tuple(&self, idx: usize) -> TupleKey {
        let len = self.len_of(idx);
        let mut code = self.code_of(idx);
        let mut items = vec![0u32; len];
        for slot in items.iter_mut().rev() {
            *slot = (code % self.base) as u32;
            code /= self.base;
        }
        TupleKey(items)
    }

    /// Element at position `pos` of the tuple with the given index.
    pub fn item(&self, idx: usize, pos: usize) -> u32 {
        let len = self.len_of(idx);
        ((self.code_of(idx) / self.pows[len - 1 - pos]) % self.base) as u32
    }

    /// Index of the concatenation of tuples given by index, if it fits.
    pub fn concat(&self, parts: &[usize]) -> Option<usize> {
        let mut len = 0usize;
        let mut code = 0usize;
        for &p in parts {
            let l = self.len_of(p);
            len += l;
            if len > self.max_len {
                return None;
            }
            code = code * self.pows[l] + self.code_of(p);
        }
        Some(self.offsets[len] + code)
    }

    /// Index of the concatenation `(x, s, z)` with a single element in the middle.
    pub fn concat_around(&self, x: usize, s: u32, z: usize) -> Option<usize> {
        let (lx, lz) = (self.len_of(x), self.len_of(z));
        let len = lx + 1 + lz;
        if len > self.max_len {
            return None;
        }
        let code = (self.code_of(x) * self.base + s as usize) * self.pows[lz] + self.code_of(z);
        Some(self.offsets[len] + code)
    }

    /// Index of the single-element tuple `(s)`.
    pub fn singleton(&self, s: u32) -> usize {
        self.offsets[1] + s as usize
    }

    /// Index of `k·x`, if it fits.
    pub fn replicate(&self, x: usize, k: usize) -> Option<usize> {
        let l = self.len_of(x);
        if l * k > self.max_len {
            return None;
        }
        let c = self.code_of(x);
        let code = (0..k).fold(0usize, |acc, _| acc * self.pows[l] + c);
        Some(self.offsets[l * k] + code)
    }
}
