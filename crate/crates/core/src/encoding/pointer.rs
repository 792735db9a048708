use std::sync::Arc;

use crate::error::{Error, Result};
use crate::model::{lg_ceil, word_bits, OwnedFrame, WorkspaceMeter};

/// One variable-width counter per list, packed back to back.
///
/// Field `i` has width `w_i = max(1, ⌈lg d_i⌉)`. The delimiter bitvector `B`
/// is the concatenation of `0^(w_i - 1) 1`, so field `i` occupies
/// `select(i - 1) + 1 ..= select(i)` of the packed vector `P`. Select is
/// answered from a sample of every `S`-th one, with `S` chosen so that the
/// gap between samples spans at most 64 bits.
#[derive(Debug)]
pub struct PointerStructure {
    n: usize,
    total_width: usize,
    b: Vec<u64>,
    p: Vec<u64>,
    limits: Vec<usize>,
    stride: usize,
    samples: Vec<u32>,
    _frame: OwnedFrame,
}

fn bit(words: &[u64], pos: usize) -> bool {
    words[pos / 64] >> (pos % 64) & 1 == 1
}

impl PointerStructure {
    /// Builds the structure for lists of the given degrees; every pointer
    /// starts at 0.
    pub fn new(degrees: &[usize], meter: &Arc<WorkspaceMeter>) -> Result<Self> {
        let widths: Vec<usize> = degrees.iter().map(|&d| lg_ceil(d) as usize).collect();
        let len: usize = widths.iter().sum();
        let w_max = widths.iter().copied().max().unwrap_or(1);
        let stride = (64 / w_max).max(1);
        let mut b = vec![0u64; len.div_ceil(64)];
        let mut samples = Vec::with_capacity(degrees.len().div_ceil(stride));
        let mut pos = 0;
        for (i, w) in widths.iter().enumerate() {
            if i % stride == 0 {
                samples.push(pos as u32);
            }
            pos += w;
            b[(pos - 1) / 64] |= 1 << ((pos - 1) % 64);
        }
        let directory = samples.len() as u64 * word_bits(len.max(1));
        let frame = meter.owned_frame(2 * len as u64 + directory)?;
        Ok(Self {
            n: degrees.len(),
            total_width: len,
            b,
            p: vec![0; len.div_ceil(64)],
            limits: degrees.to_vec(),
            stride,
            samples,
            _frame: frame,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Total bits charged to the meter.
    pub fn metered_bits(&self) -> u64 {
        self._frame.bits()
    }

    /// 1-based position of the `i`-th one of `B`; `select(0) = 0`.
    pub fn select(&self, i: usize) -> usize {
        assert!(i <= self.n, "select({i}) beyond {} ones", self.n);
        if i == 0 {
            return 0;
        }
        let k = (i - 1) / self.stride;
        let mut left = (i - 1) % self.stride;
        let mut pos = self.samples[k] as usize;
        // at most `stride * w_max <= 64` bits separate the sample from the answer
        loop {
            let word = pos / 64;
            let off = pos % 64;
            let mut chunk = self.b[word] >> off;
            let ones = chunk.count_ones() as usize;
            if ones > left {
                for _ in 0..left {
                    chunk &= chunk - 1;
                }
                return pos + chunk.trailing_zeros() as usize + 1;
            }
            left -= ones;
            pos = (word + 1) * 64;
        }
    }

    fn field(&self, i: usize) -> Result<(usize, usize)> {
        if i == 0 || i > self.n {
            return Err(Error::PositionOutOfRange { pos: i, len: self.n });
        }
        let lo = self.select(i - 1);
        Ok((lo, self.select(i) - lo))
    }

    pub fn get(&self, i: usize) -> Result<usize> {
        let (lo, w) = self.field(i)?;
        let mut val = 0;
        for k in 0..w {
            if bit(&self.p, lo + k) {
                val |= 1 << k;
            }
        }
        Ok(val)
    }

    pub fn set(&mut self, i: usize, val: usize) -> Result<()> {
        let (lo, w) = self.field(i)?;
        let limit = self.limits[i - 1].max(1);
        if val >= limit {
            return Err(Error::ValueTooWide {
                value: val as u64,
                width: w as u32,
            });
        }
        for k in 0..w {
            let pos = lo + k;
            let mask = 1u64 << (pos % 64);
            if val >> k & 1 == 1 {
                self.p[pos / 64] |= mask;
            } else {
                self.p[pos / 64] &= !mask;
            }
        }
        Ok(())
    }

    /// `B` as a string of `0`/`1`, first bit first.
    pub fn delimiters(&self) -> String {
        (0..self.total_width)
            .map(|k| if bit(&self.b, k) { '1' } else { '0' })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meter() -> Arc<WorkspaceMeter> {
        Arc::new(WorkspaceMeter::new(8))
    }

    #[test]
    fn delimiter_layout() {
        let m = meter();
        let ps = PointerStructure::new(&[2, 4, 8], &m).unwrap();
        assert_eq!(ps.delimiters(), "101001");
        assert_eq!((ps.select(1), ps.select(2), ps.select(3)), (1, 3, 6));
        let ones = PointerStructure::new(&[1; 5], &m).unwrap();
        assert_eq!(ones.delimiters(), "11111");
    }

    #[test]
    fn set_get() {
        let m = meter();
        let mut ps = PointerStructure::new(&[2, 4, 8], &m).unwrap();
        ps.set(2, 3).unwrap();
        assert_eq!(ps.get(2), Ok(3));
        assert_eq!(ps.get(1), Ok(0));
        assert_eq!(ps.get(3), Ok(0));
        assert!(ps.set(2, 4).is_err());
        assert!(ps.get(4).is_err());
    }

    #[test]
    fn select_matches_scan() {
        let m = meter();
        let degrees: Vec<usize> = (0..300).map(|i| 1 + (i * 37 % 200)).collect();
        let ps = PointerStructure::new(&degrees, &m).unwrap();
        let b: Vec<char> = ps.delimiters().chars().collect();
        let mut ones = 0;
        for (k, &c) in b.iter().enumerate() {
            if c == '1' {
                ones += 1;
                assert_eq!(ps.select(ones), k + 1);
            }
        }
        assert_eq!(ones, degrees.len());
    }

    #[test]
    fn fields_are_independent() {
        let m = meter();
        let degrees = [3, 1, 70, 5, 2, 64, 9];
        let mut ps = PointerStructure::new(&degrees, &m).unwrap();
        for (i, &d) in degrees.iter().enumerate() {
            ps.set(i + 1, d - 1).unwrap();
        }
        for (i, &d) in degrees.iter().enumerate() {
            assert_eq!(ps.get(i + 1), Ok(d - 1));
        }
    }

    #[test]
    fn metered_within_twice_fields_plus_directory() {
        let m = meter();
        let degrees: Vec<usize> = (1..=64).collect();
        let sum: u64 = degrees.iter().map(|&d| lg_ceil(d)).sum();
        let ps = PointerStructure::new(&degrees, &m).unwrap();
        assert_eq!(m.current(), ps.metered_bits());
        assert!(ps.metered_bits() <= 4 * sum);
        drop(ps);
        assert_eq!(m.current(), 0);
    }
}
