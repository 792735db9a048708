use crate::error::{Error, Result};
use crate::model::{Frame, WorkspaceMeter};

/// Three-valued DFS colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    White = 0,
    Gray = 1,
    Black = 2,
}

impl Color {
    fn from_trit(t: u8) -> Color {
        match t {
            0 => Color::White,
            1 => Color::Gray,
            _ => Color::Black,
        }
    }
}

const TRITS_PER_BYTE: usize = 5;
const POW3: [u8; TRITS_PER_BYTE] = [1, 3, 9, 27, 81];

/// Packed array of `n` colours, five trits per byte (`3^5 = 243 <= 256`).
///
/// Cells are addressed `1..=n` and start out white.
#[derive(Debug)]
pub struct TritArray<'m> {
    n: usize,
    bytes: Vec<u8>,
    _frame: Frame<'m>,
}

impl<'m> TritArray<'m> {
    pub fn new(n: usize, meter: &'m WorkspaceMeter) -> Result<Self> {
        let len = n.div_ceil(TRITS_PER_BYTE);
        let frame = meter.frame(Self::storage_bits(n))?;
        Ok(Self {
            n,
            bytes: vec![0; len],
            _frame: frame,
        })
    }

    /// Bits reserved for `n` cells.
    pub fn storage_bits(n: usize) -> u64 {
        8 * n.div_ceil(TRITS_PER_BYTE) as u64
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn locate(&self, i: usize) -> Result<(usize, u8)> {
        if i == 0 || i > self.n {
            return Err(Error::PositionOutOfRange { pos: i, len: self.n });
        }
        let k = i - 1;
        Ok((k / TRITS_PER_BYTE, POW3[k % TRITS_PER_BYTE]))
    }

    pub fn get(&self, i: usize) -> Result<Color> {
        let (byte, pow) = self.locate(i)?;
        Ok(Color::from_trit(self.bytes[byte] / pow % 3))
    }

    pub fn set(&mut self, i: usize, c: Color) -> Result<()> {
        let (byte, pow) = self.locate(i)?;
        let old = self.bytes[byte] / pow % 3;
        // digits never borrow: old and new are both in 0..3
        self.bytes[byte] = self.bytes[byte] - old * pow + (c as u8) * pow;
        Ok(())
    }
}
