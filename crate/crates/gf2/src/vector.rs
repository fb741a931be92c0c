use std::fmt;

use crate::Gf2Error;

const WORD_BITS: usize = 64;

/// A vector over GF(2), packed 64 bits per word.
///
/// XOR is addition; `weight` is the Hamming weight. Trailing bits of the
/// last word are kept zero as an invariant so equality and weight can work
/// word-wise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    /// All-zero vector of `len` bits.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    /// Vector with exactly the listed bits set.
    pub fn from_support(len: usize, support: &[usize]) -> Result<Self, Gf2Error> {
        let mut v = Self::zeros(len);
        for &i in support {
            if i >= len {
                return Err(Gf2Error::IndexOutOfRange { index: i, len });
            }
            v.set(i, true);
        }
        Ok(v)
    }

    /// Vector from a 0/1 slice, mostly for tests.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Number of set bits.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place XOR with another vector of the same length.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the AND of two vectors: `|self ∧ other| mod 2`.
    ///
    /// This is the GF(2) inner product, hence the commutation test between
    /// an X-type and a Z-type Pauli given by their supports.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ ((a & b).count_ones() & 1))
            == 1
    }

    /// Size of the common support with `other`.
    pub fn overlap(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "overlap length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Indices of set bits in increasing order.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let tz = bits.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + tz);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Index of the lowest set bit, if any.
    pub fn first_set(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Restriction to an index subset: bit `j` of the result is bit
    /// `keep[j]` of `self`.
    pub fn select(&self, keep: &[usize]) -> Self {
        let mut out = Self::zeros(keep.len());
        for (j, &i) in keep.iter().enumerate() {
            if self.get(i) {
                out.set(j, true);
            }
        }
        out
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(self.len);
        for i in 0..self.len {
            s.push(if self.get(i) { '1' } else { '0' });
        }
        write!(f, "BinaryVector({s})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_is_involution() {
        let v = BinaryVector::from_bits(&[1, 0, 1, 1, 0, 0, 1]);
        let w = BinaryVector::from_bits(&[0, 1, 1, 0, 1, 0, 1]);
        let back = v.xor(&w).xor(&w);
        assert_eq!(back, v);
    }

    #[test]
    fn weight_counts_set_bits() {
        let v = BinaryVector::from_support(130, &[0, 63, 64, 129]).unwrap();
        assert_eq!(v.weight(), 4);
        assert_eq!(v.support(), vec![0, 63, 64, 129]);
    }

    #[test]
    fn out_of_range_support_rejected() {
        let err = BinaryVector::from_support(3, &[3]).unwrap_err();
        assert_eq!(err, Gf2Error::IndexOutOfRange { index: 3, len: 3 });
    }

    #[test]
    fn dot_is_overlap_parity() {
        let v = BinaryVector::from_bits(&[1, 1, 0, 1]);
        let w = BinaryVector::from_bits(&[1, 1, 1, 0]);
        assert!(!v.dot(&w)); // overlap 2
        assert_eq!(v.overlap(&w), 2);
    }
}
