use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Extra-bit accounting. Every algorithm variable is reserved through a
/// [`Frame`] and released when the frame drops.
#[derive(Debug, Default)]
pub struct WorkspaceMeter {
    current: AtomicU64,
    peak: AtomicU64,
    budget: AtomicU64,
    word: AtomicU64,
}

const NO_BUDGET: u64 = u64::MAX;

impl WorkspaceMeter {
    /// A meter whose words are `word_bits` wide, without a budget.
    pub fn new(word_bits: u64) -> Self {
        Self {
            current: AtomicU64::new(0),
            peak: AtomicU64::new(0),
            budget: AtomicU64::new(NO_BUDGET),
            word: AtomicU64::new(word_bits),
        }
    }

    pub fn set_budget(&self, bits: Option<u64>) {
        self.budget.store(bits.unwrap_or(NO_BUDGET), Ordering::Relaxed);
    }

    pub fn budget(&self) -> Option<u64> {
        match self.budget.load(Ordering::Relaxed) {
            NO_BUDGET => None,
            b => Some(b),
        }
    }

    pub fn word_bits(&self) -> u64 {
        self.word.load(Ordering::Relaxed)
    }

    pub fn current(&self) -> u64 {
        self.current.load(Ordering::Relaxed)
    }

    pub fn peak(&self) -> u64 {
        self.peak.load(Ordering::Relaxed)
    }

    /// Clears the peak, e.g. between two runs on one instance.
    pub fn reset_peak(&self) {
        self.peak.store(self.current(), Ordering::Relaxed);
    }

    /// Reserves `bits` until the returned frame drops.
    pub fn frame(&self, bits: u64) -> Result<Frame<'_>> {
        self.reserve(bits)?;
        Ok(Frame { meter: self, bits })
    }

    /// Like [`frame`](Self::frame), for reservations that outlive a borrow,
    /// such as structures owned alongside the meter.
    pub fn owned_frame(self: &Arc<Self>, bits: u64) -> Result<OwnedFrame> {
        self.reserve(bits)?;
        Ok(OwnedFrame {
            meter: Arc::clone(self),
            bits,
        })
    }

    fn reserve(&self, bits: u64) -> Result<()> {
        let now = self.current.fetch_add(bits, Ordering::Relaxed) + bits;
        if let Some(budget) = self.budget() {
            if now > budget {
                self.current.fetch_sub(bits, Ordering::Relaxed);
                return Err(Error::BudgetExceeded {
                    requested: now,
                    budget,
                });
            }
        }
        self.peak.fetch_max(now, Ordering::Relaxed);
        Ok(())
    }

    /// Reserves `count` machine words.
    pub fn words(&self, count: u64) -> Result<Frame<'_>> {
        self.frame(count * self.word_bits())
    }
}

/// Reservation guard returned by [`WorkspaceMeter::frame`].
#[derive(Debug)]
pub struct Frame<'a> {
    meter: &'a WorkspaceMeter,
    bits: u64,
}

impl Frame<'_> {
    pub fn bits(&self) -> u64 {
        self.bits
    }
}

impl Drop for Frame<'_> {
    fn drop(&mut self) {
        self.meter.current.fetch_sub(self.bits, Ordering::Relaxed);
    }
}

/// Reservation guard returned by [`WorkspaceMeter::owned_frame`].
#[derive(Debug)]
pub struct OwnedFrame {
    meter: Arc<WorkspaceMeter>,
    bits: u64,
}

impl OwnedFrame {
    pub fn bits(&self) -> u64 {
        self.bits
    }
}

impl Drop for OwnedFrame {
    fn drop(&mut self) {
        self.meter.current.fetch_sub(self.bits, Ordering::Relaxed);
    }
}

/// Unit-operation counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCounter {
    pub rotations: u64,
    pub swaps: u64,
    pub element_reads: u64,
    pub comparisons: u64,
}

impl OpCounter {
    /// Component-wise difference `self - earlier`.
    pub fn since(&self, earlier: &OpCounter) -> OpCounter {
        OpCounter {
            rotations: self.rotations - earlier.rotations,
            swaps: self.swaps - earlier.swaps,
            element_reads: self.element_reads - earlier.element_reads,
            comparisons: self.comparisons - earlier.comparisons,
        }
    }
}
