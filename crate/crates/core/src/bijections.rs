//! Executable bijections between fence tilings and square-and-domino
//! tilings.
//!
//! `splice`/`unsplice` realise the product formula for gap-(m-1) fence
//! tilings: reading every m-th cell of an N-board turns each fence into a
//! domino and each square into a unit square, producing an m-tuple of
//! square-and-domino boards whose lengths differ by at most one.
//! `domino_pair_map` pairs each domino with its successor tile to turn a
//! square-and-domino tiling into a tiling by squares, filled fences, and
//! bifences, splitting the binomial count into two triangle entries.

use std::fmt;

use crate::tiling::{CellContent, CellOccupancy, Metatile, Tiling};
use crate::Error;

/// A tile of a square-and-domino tiling.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SdSymbol {
    /// `S`: a unit square.
    Square,
    /// `D`: a domino covering two adjacent cells.
    Domino,
}

/// A square-and-domino tiling of a board, written left to right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SdTiling {
    symbols: Vec<SdSymbol>,
}

impl SdTiling {
    pub fn new(symbols: Vec<SdSymbol>) -> Self {
        SdTiling { symbols }
    }

    pub fn symbols(&self) -> &[SdSymbol] {
        &self.symbols
    }

    /// Cells covered: squares count 1, dominoes count 2.
    pub fn board_length(&self) -> usize {
        self.symbols
            .iter()
            .map(|s| match s {
                SdSymbol::Square => 1,
                SdSymbol::Domino => 2,
            })
            .sum()
    }

    /// Number of dominoes.
    pub fn domino_count(&self) -> usize {
        self.symbols
            .iter()
            .filter(|s| **s == SdSymbol::Domino)
            .count()
    }
}

impl fmt::Display for SdTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            f.write_str(match s {
                SdSymbol::Square => "S",
                SdSymbol::Domino => "D",
            })?;
        }
        Ok(())
    }
}

/// An ordered tuple of m >= 2 square-and-domino boards whose lengths follow
/// the splice pattern: for total length `m*q + r`, the first `r` boards have
/// length `q + 1` and the rest have length `q`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SdTuple {
    boards: Vec<SdTiling>,
}

impl SdTuple {
    /// Validates the board-length pattern.
    pub fn new(boards: Vec<SdTiling>) -> Result<Self, Error> {
        let m = boards.len();
        if m < 2 {
            return Err(Error::MalformedTuple(format!(
                "need at least 2 boards, got {m}"
            )));
        }
        let total: usize = boards.iter().map(SdTiling::board_length).sum();
        let q = total / m;
        let r = total % m;
        for (j, board) in boards.iter().enumerate() {
            let want = if j < r { q + 1 } else { q };
            if board.board_length() != want {
                return Err(Error::MalformedTuple(format!(
                    "board {j} has length {}, expected {want} for total {total}",
                    board.board_length()
                )));
            }
        }
        Ok(SdTuple { boards })
    }

    pub fn boards(&self) -> &[SdTiling] {
        &self.boards
    }
}

impl fmt::Display for SdTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, board) in self.boards.iter().enumerate() {
            if j > 0 {
                f.write_str("|")?;
            }
            write!(f, "{board}")?;
        }
        Ok(())
    }
}

/// Splits a gap-(m-1) fence tiling into m square-and-domino boards. Board j
/// collects the cells with index congruent to j mod m (0-based), in order;
/// the two posts of a fence land on adjacent cells of one board and become a
/// domino there. Fails unless the occupancy's gap is exactly `m - 1`.
pub fn splice(occ: &CellOccupancy, m: usize) -> Result<SdTuple, Error> {
    if m < 2 {
        return Err(Error::FamilyTooSmall { m });
    }
    if occ.gap() + 1 != m {
        return Err(Error::GapMismatch { gap: occ.gap(), m });
    }
    let cells = occ.cells();
    let mut boards = Vec::with_capacity(m);
    for class in 0..m {
        let mut symbols = Vec::new();
        let mut i = class;
        while i < cells.len() {
            match cells[i] {
                CellContent::Square => symbols.push(SdSymbol::Square),
                CellContent::FenceStart => symbols.push(SdSymbol::Domino),
                // The matching start already produced this fence's domino.
                CellContent::FenceEnd => {}
            }
            i += m;
        }
        boards.push(SdTiling::new(symbols));
    }
    Ok(SdTuple::new(boards).expect("residue classes follow the length pattern"))
}

/// Inverse of [`splice`]: interleaves the boards of a tuple back into one
/// fence tiling with gap `m - 1`, where m is the number of boards.
pub fn unsplice(tuple: &SdTuple) -> CellOccupancy {
    let m = tuple.boards().len();
    let total: usize = tuple.boards().iter().map(SdTiling::board_length).sum();
    let mut cells = vec![CellContent::Square; total];
    for (class, board) in tuple.boards().iter().enumerate() {
        let mut slot = 0usize;
        for symbol in board.symbols() {
            match symbol {
                SdSymbol::Square => {
                    cells[class + slot * m] = CellContent::Square;
                    slot += 1;
                }
                SdSymbol::Domino => {
                    cells[class + slot * m] = CellContent::FenceStart;
                    cells[class + (slot + 1) * m] = CellContent::FenceEnd;
                    slot += 2;
                }
            }
        }
    }
    CellOccupancy::new(m - 1, cells).expect("tuple pattern yields a complete tiling")
}

/// Outcome of [`domino_pair_map`]: either every domino found a successor
/// tile, or a final unpaired domino was dropped.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DominoPairImage {
    /// Same tile count n and fence count k as the input had symbols and
    /// dominoes.
    Full(Tiling),
    /// The input ended in an isolated domino; the image has n-1 tiles and
    /// k-1 fences.
    Reduced(Tiling),
}

impl DominoPairImage {
    pub fn tiling(&self) -> &Tiling {
        match self {
            DominoPairImage::Full(t) | DominoPairImage::Reduced(t) => t,
        }
    }
}

/// Scans a square-and-domino tiling left to right, pairing each domino with
/// the tile after it: domino-domino becomes a bifence, domino-square becomes
/// a filled fence, and a lone square stays a free square. A domino with no
/// successor is dropped and the result is tagged [`DominoPairImage::Reduced`].
pub fn domino_pair_map(sd: &SdTiling) -> DominoPairImage {
    let symbols = sd.symbols();
    let mut metatiles = Vec::new();
    let mut i = 0;
    while i < symbols.len() {
        match symbols[i] {
            SdSymbol::Square => {
                metatiles.push(Metatile::FreeSquare);
                i += 1;
            }
            SdSymbol::Domino => {
                if i + 1 == symbols.len() {
                    return DominoPairImage::Reduced(Tiling::new(metatiles));
                }
                metatiles.push(match symbols[i + 1] {
                    SdSymbol::Domino => Metatile::Bifence,
                    SdSymbol::Square => Metatile::FilledFence,
                });
                i += 2;
            }
        }
    }
    DominoPairImage::Full(Tiling::new(metatiles))
}

/// Inverse of [`domino_pair_map`] on each branch: expands metatiles back to
/// symbols and, for the reduced branch, restores the trailing domino.
pub fn domino_pair_unmap(image: &DominoPairImage) -> SdTiling {
    let mut symbols = Vec::new();
    for mt in image.tiling().metatiles() {
        match mt {
            Metatile::FreeSquare => symbols.push(SdSymbol::Square),
            Metatile::FilledFence => symbols.extend([SdSymbol::Domino, SdSymbol::Square]),
            Metatile::Bifence => symbols.extend([SdSymbol::Domino, SdSymbol::Domino]),
        }
    }
    if matches!(image, DominoPairImage::Reduced(_)) {
        symbols.push(SdSymbol::Domino);
    }
    SdTiling::new(symbols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::enumerate_board_tilings_by_cells;
    use SdSymbol::{Domino as D, Square as S};

    fn sd(symbols: &[SdSymbol]) -> SdTiling {
        SdTiling::new(symbols.to_vec())
    }

    #[test]
    fn test_splice_bifence() {
        // The 4-board bifence splits into two one-domino boards.
        let occ = Tiling::new(vec![Metatile::Bifence]).to_occupancy();
        let tuple = splice(&occ, 2).unwrap();
        assert_eq!(tuple.to_string(), "D|D");
        assert_eq!(unsplice(&tuple), occ);
    }

    #[test]
    fn test_splice_known_eight_board() {
        let occ = Tiling::new(vec![
            Metatile::FreeSquare,
            Metatile::FilledFence,
            Metatile::Bifence,
        ])
        .to_occupancy();
        let tuple = splice(&occ, 2).unwrap();
        // Cells 0,2,4,6 give S S D; cells 1,3,5,7 give D D.
        assert_eq!(tuple.to_string(), "SSD|DD");
        assert_eq!(unsplice(&tuple), occ);
    }

    #[test]
    fn test_splice_gap_checks() {
        let occ = Tiling::new(vec![Metatile::Bifence]).to_occupancy();
        assert_eq!(splice(&occ, 3), Err(Error::GapMismatch { gap: 1, m: 3 }));
        assert_eq!(splice(&occ, 1), Err(Error::FamilyTooSmall { m: 1 }));
        let wide = enumerate_board_tilings_by_cells(6, 2).unwrap();
        assert!(wide.iter().all(|occ| splice(occ, 3).is_ok()));
    }

    #[test]
    fn test_unsplice_examples() {
        let pair = SdTuple::new(vec![sd(&[D]), sd(&[D])]).unwrap();
        let occ = unsplice(&pair);
        assert_eq!(occ.board_length(), 4);
        assert_eq!(occ.fence_count(), 2);
        assert_eq!(occ.gap(), 1);

        let triple = SdTuple::new(vec![sd(&[S]), sd(&[S]), sd(&[S])]).unwrap();
        let occ = unsplice(&triple);
        assert_eq!(occ.board_length(), 3);
        assert_eq!(occ.fence_count(), 0);
        assert_eq!(occ.gap(), 2);
    }

    #[test]
    fn test_tuple_validation() {
        // Total 4 with two boards means both must have length 2.
        assert!(SdTuple::new(vec![sd(&[S, S, S]), sd(&[S])]).is_err());
        assert!(SdTuple::new(vec![sd(&[S, S])]).is_err());
        // Total 7 = 2*3 + 1: the longer board must come first.
        assert!(SdTuple::new(vec![sd(&[S, S, S]), sd(&[S, S, S, S])]).is_err());
        assert!(SdTuple::new(vec![sd(&[S, S, S, S]), sd(&[S, S, S])]).is_ok());
    }

    #[test]
    fn test_domino_pair_map_examples() {
        match domino_pair_map(&sd(&[D, D])) {
            DominoPairImage::Full(t) => assert_eq!(t.symbols(), "FF"),
            other => panic!("expected a full image, got {other:?}"),
        }
        match domino_pair_map(&sd(&[D, S])) {
            DominoPairImage::Full(t) => assert_eq!(t.symbols(), "FS"),
            other => panic!("expected a full image, got {other:?}"),
        }
        // A trailing domino with no successor is dropped.
        match domino_pair_map(&sd(&[S, D])) {
            DominoPairImage::Reduced(t) => {
                assert_eq!(t.symbols(), "S");
                assert_eq!(t.tile_count(), 1);
                assert_eq!(t.fence_count(), 0);
            }
            other => panic!("expected a reduced image, got {other:?}"),
        }
        match domino_pair_map(&sd(&[S, D, D, S, D])) {
            DominoPairImage::Reduced(t) => assert_eq!(t.symbols(), "SFFS"),
            other => panic!("expected a reduced image, got {other:?}"),
        }
    }

    #[test]
    fn test_domino_pair_unmap_round_trip() {
        for symbols in [
            vec![],
            vec![S],
            vec![D],
            vec![D, D, D],
            vec![S, D, D, S, D],
            vec![D, S, D, S, S],
        ] {
            let input = sd(&symbols);
            let image = domino_pair_map(&input);
            assert_eq!(domino_pair_unmap(&image), input, "input {input}");
        }
    }

    #[test]
    fn test_domino_pair_counts_on_five_tiles() {
        // All 10 placements of 2 dominoes among 5 tiles: 7 map to complete
        // 5-tile fence tilings and 3 lose their trailing domino.
        let mut full = 0;
        let mut reduced = 0;
        for mask in 0u32..32 {
            if mask.count_ones() != 2 {
                continue;
            }
            let symbols: Vec<SdSymbol> = (0..5)
                .map(|i| if mask & (1 << i) != 0 { D } else { S })
                .collect();
            match domino_pair_map(&sd(&symbols)) {
                DominoPairImage::Full(t) => {
                    assert_eq!(t.tile_count(), 5);
                    assert_eq!(t.fence_count(), 2);
                    full += 1;
                }
                DominoPairImage::Reduced(t) => {
                    assert_eq!(t.tile_count(), 4);
                    assert_eq!(t.fence_count(), 1);
                    reduced += 1;
                }
            }
        }
        assert_eq!((full, reduced), (7, 3));
    }
}
