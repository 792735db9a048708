//! Values stored in an implicit graph by permuting adjacency elements.
//!
//! A bit lives in two consecutive positions: ascending order is 0,
//! descending is 1. Elements are compared by label, which is distinct
//! within any list of a simple graph.

use crate::error::{Error, Result};
use crate::model::{ImplicitGraph, Side, Vertex};

/// Reads the pair at positions `i`, `i + 1`; the second read is a cursor step.
fn pair(g: &mut ImplicitGraph, v: Vertex, side: Side, i: usize) -> Result<(Vertex, Vertex)> {
    pair_from(g, v, side, i, false)
}

/// As [`pair`], with the first read also a cursor step when `walking`.
fn pair_from(
    g: &mut ImplicitGraph,
    v: Vertex,
    side: Side,
    i: usize,
    walking: bool,
) -> Result<(Vertex, Vertex)> {
    let a = if walking {
        g.cursor_read(v, side, i)?
    } else {
        g.read_at(v, side, i)?
    };
    let b = g.cursor_read(v, side, i + 1)?;
    g.count_comparisons(1);
    if a == b {
        return Err(Error::EqualValues);
    }
    Ok((a, b))
}

pub fn decode_bit(g: &mut ImplicitGraph, v: Vertex, side: Side, i: usize) -> Result<bool> {
    let (a, b) = pair(g, v, side, i)?;
    Ok(a > b)
}

/// Stores `bit` at positions `i`, `i + 1` with at most one swap.
pub fn encode_bit(g: &mut ImplicitGraph, v: Vertex, side: Side, i: usize, bit: bool) -> Result<()> {
    let (a, b) = pair(g, v, side, i)?;
    if (a > b) != bit {
        g.swap(v, side, i, i + 1)?;
    }
    Ok(())
}

/// Stores the low `width` bits of `val` in `2 * width` positions from
/// `start`, least significant bit first.
pub fn encode_ptr(
    g: &mut ImplicitGraph,
    v: Vertex,
    side: Side,
    start: usize,
    val: u64,
    width: u32,
) -> Result<()> {
    if width < 64 && val >> width != 0 {
        return Err(Error::ValueTooWide { value: val, width });
    }
    check_span(g, v, side, start, 2 * width as usize)?;
    for k in 0..width as usize {
        let i = start + 2 * k;
        let (a, b) = pair_from(g, v, side, i, k > 0)?;
        if (a > b) != (val >> k & 1 == 1) {
            g.swap(v, side, i, i + 1)?;
        }
    }
    Ok(())
}

pub fn decode_ptr(g: &mut ImplicitGraph, v: Vertex, side: Side, start: usize, width: u32) -> Result<u64> {
    check_span(g, v, side, start, 2 * width as usize)?;
    let mut val = 0;
    for k in 0..width as usize {
        let (a, b) = pair_from(g, v, side, start + 2 * k, k > 0)?;
        if a > b {
            val |= 1 << k;
        }
    }
    Ok(val)
}

fn check_span(g: &ImplicitGraph, v: Vertex, side: Side, start: usize, span: usize) -> Result<()> {
    let len = g.degree(v, side);
    if start == 0 || start + span - 1 > len {
        return Err(Error::PositionOutOfRange {
            pos: start + span.max(1) - 1,
            len,
        });
    }
    Ok(())
}

/// Four colours encoded by the relative order of three elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color4 {
    White,
    Gray1,
    Gray2,
    Black,
}

impl Color4 {
    pub const ALL: [Color4; 4] = [Color4::White, Color4::Gray1, Color4::Gray2, Color4::Black];

    /// Rank (0 = smallest) of the element at each of the three positions.
    pub fn ranks(self) -> [u8; 3] {
        match self {
            Color4::White => [0, 1, 2],
            Color4::Gray1 => [0, 2, 1],
            Color4::Gray2 => [1, 0, 2],
            Color4::Black => [1, 2, 0],
        }
    }

    fn from_ranks(r: [u8; 3]) -> Option<Color4> {
        Color4::ALL.into_iter().find(|c| c.ranks() == r)
    }
}

fn triple(g: &mut ImplicitGraph, v: Vertex, side: Side, start: usize) -> Result<[Vertex; 3]> {
    let d = g.degree(v, side);
    if d < start + 2 {
        return Err(Error::DegreeTooSmall {
            vertex: v,
            degree: d,
            needed: start + 2,
        });
    }
    let t = [
        g.read_at(v, side, start)?,
        g.cursor_read(v, side, start + 1)?,
        g.cursor_read(v, side, start + 2)?,
    ];
    g.count_comparisons(3);
    Ok(t)
}

fn ranks_of(t: [Vertex; 3]) -> [u8; 3] {
    let mut r = [0u8; 3];
    for (i, x) in t.iter().enumerate() {
        r[i] = t.iter().filter(|&y| y < x).count() as u8;
    }
    r
}

/// Colour held by positions `start..start + 3` of `v`'s list.
pub fn decode_color4_at(g: &mut ImplicitGraph, v: Vertex, side: Side, start: usize) -> Result<Color4> {
    let t = triple(g, v, side, start)?;
    Color4::from_ranks(ranks_of(t)).ok_or(Error::CorruptEncoding { vertex: v })
}

/// Permutes positions `start..start + 3` into the pattern of `c`, using at
/// most two swaps and none if the colour is already stored.
pub fn encode_color4_at(
    g: &mut ImplicitGraph,
    v: Vertex,
    side: Side,
    start: usize,
    c: Color4,
) -> Result<()> {
    let t = triple(g, v, side, start)?;
    let mut cur = ranks_of(t);
    let want = c.ranks();
    for i in 0..3 {
        if cur[i] != want[i] {
            let j = (i + 1..3).find(|&j| cur[j] == want[i]).expect("ranks are a permutation");
            g.swap(v, side, start + i, start + j)?;
            cur.swap(i, j);
        }
    }
    Ok(())
}

pub fn decode_color4(g: &mut ImplicitGraph, v: Vertex, side: Side) -> Result<Color4> {
    decode_color4_at(g, v, side, 1)
}

pub fn encode_color4(g: &mut ImplicitGraph, v: Vertex, side: Side, c: Color4) -> Result<()> {
    encode_color4_at(g, v, side, 1, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{GraphData, Layout};

    /// Vertex 1 adjacent to every label in `labels`, in that order.
    fn star(labels: &[usize]) -> ImplicitGraph {
        let n = *labels.iter().max().unwrap();
        let edges: Vec<_> = labels.iter().map(|&x| (1, x)).collect();
        ImplicitGraph::new(&GraphData::from_edges(n, false, &edges).unwrap(), Layout::Array)
    }

    #[test]
    fn bit_pairs() {
        let mut g = star(&[2, 5]);
        encode_bit(&mut g, 1, Side::Out, 1, false).unwrap();
        assert_eq!(g.snapshot(1, Side::Out), vec![2, 5]);
        assert!(!decode_bit(&mut g, 1, Side::Out, 1).unwrap());
        encode_bit(&mut g, 1, Side::Out, 1, true).unwrap();
        assert_eq!(g.snapshot(1, Side::Out), vec![5, 2]);
        assert!(decode_bit(&mut g, 1, Side::Out, 1).unwrap());
        let swaps = g.ops().swaps;
        encode_bit(&mut g, 1, Side::Out, 1, true).unwrap();
        assert_eq!(g.ops().swaps, swaps);
    }

    #[test]
    fn bit_needs_two_positions() {
        let mut g = star(&[2, 5]);
        assert!(encode_bit(&mut g, 1, Side::Out, 2, true).is_err());
    }

    #[test]
    fn color_round_trip() {
        let mut g = star(&[4, 7, 9, 3]);
        encode_color4(&mut g, 1, Side::Out, Color4::White).unwrap();
        assert_eq!(g.snapshot(1, Side::Out), vec![4, 7, 9, 3]);
        encode_color4(&mut g, 1, Side::Out, Color4::Black).unwrap();
        assert_eq!(g.snapshot(1, Side::Out), vec![7, 9, 4, 3]);
        for c in Color4::ALL {
            encode_color4(&mut g, 1, Side::Out, c).unwrap();
            assert_eq!(decode_color4(&mut g, 1, Side::Out).unwrap(), c);
            assert_eq!(g.snapshot(1, Side::Out)[3], 3);
            let swaps = g.ops().swaps;
            encode_color4(&mut g, 1, Side::Out, c).unwrap();
            assert_eq!(g.ops().swaps, swaps);
        }
        // transitions between every pair of colours
        for a in Color4::ALL {
            for b in Color4::ALL {
                encode_color4(&mut g, 1, Side::Out, a).unwrap();
                encode_color4(&mut g, 1, Side::Out, b).unwrap();
                assert_eq!(decode_color4(&mut g, 1, Side::Out).unwrap(), b);
            }
        }
    }

    #[test]
    fn color_needs_degree_three() {
        let mut g = star(&[2, 3]);
        assert!(matches!(
            encode_color4(&mut g, 1, Side::Out, Color4::Gray1),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn unassigned_pattern_is_corrupt() {
        let mut g = star(&[9, 7, 4]);
        assert_eq!(
            decode_color4(&mut g, 1, Side::Out),
            Err(Error::CorruptEncoding { vertex: 1 })
        );
    }

    #[test]
    fn pointer_bits() {
        let mut g = star(&[2, 3, 4, 5, 6, 7, 8, 9]);
        encode_ptr(&mut g, 1, Side::Out, 1, 5, 3).unwrap();
        let s = g.snapshot(1, Side::Out);
        assert!(s[0] > s[1] && s[2] < s[3] && s[4] > s[5]);
        for val in 0..16 {
            encode_ptr(&mut g, 1, Side::Out, 1, val, 4).unwrap();
            assert_eq!(decode_ptr(&mut g, 1, Side::Out, 1, 4).unwrap(), val);
        }
        encode_ptr(&mut g, 1, Side::Out, 1, 0, 4).unwrap();
        assert_eq!(g.snapshot(1, Side::Out), vec![2, 3, 4, 5, 6, 7, 8, 9]);
        assert!(encode_ptr(&mut g, 1, Side::Out, 1, 16, 4).is_err());
        assert!(encode_ptr(&mut g, 1, Side::Out, 2, 0, 4).is_err());
    }
}
