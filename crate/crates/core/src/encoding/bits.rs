use crate::error::{Error, Result};
use crate::model::{Frame, WorkspaceMeter};

/// Metered bit array addressed `1..=n`, initially all zero.
#[derive(Debug)]
pub struct BitArray<'m> {
    n: usize,
    words: Vec<u64>,
    _frame: Frame<'m>,
}

impl<'m> BitArray<'m> {
    pub fn new(n: usize, meter: &'m WorkspaceMeter) -> Result<Self> {
        let frame = meter.frame(Self::storage_bits(n))?;
        Ok(Self {
            n,
            words: vec![0; n.div_ceil(64)],
            _frame: frame,
        })
    }

    pub fn storage_bits(n: usize) -> u64 {
        n as u64
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::PositionOutOfRange { pos: i, len: self.n });
        }
        Ok(())
    }

    pub fn get(&self, i: usize) -> Result<bool> {
        self.check(i)?;
        let k = i - 1;
        Ok(self.words[k / 64] >> (k % 64) & 1 == 1)
    }

    pub fn set(&mut self, i: usize, b: bool) -> Result<()> {
        self.check(i)?;
        let k = i - 1;
        let mask = 1u64 << (k % 64);
        if b {
            self.words[k / 64] |= mask;
        } else {
            self.words[k / 64] &= !mask;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get() {
        let m = WorkspaceMeter::new(8);
        let mut b = BitArray::new(130, &m).unwrap();
        assert_eq!(m.current(), 130);
        b.set(1, true).unwrap();
        b.set(130, true).unwrap();
        b.set(65, true).unwrap();
        b.set(65, false).unwrap();
        assert_eq!(b.get(1), Ok(true));
        assert_eq!(b.get(130), Ok(true));
        assert_eq!(b.get(65), Ok(false));
        assert!(b.get(131).is_err());
    }
}
