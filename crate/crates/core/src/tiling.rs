//! Ground-truth tiling objects: tiles, metatiles, whole tilings, cell-level
//! occupancies, and the exhaustive enumerators used as oracles for every
//! counting claim in the crate.
//!
//! A board is a 1 x n strip of cells. It is tiled by unit squares and by
//! fences: a fence is two unit posts separated by a fixed gap of cells that
//! other tiles must fill. For the unit gap every complete tiling splits
//! uniquely into three indecomposable blocks, the metatiles: a free square
//! `S` (length 1), a fence holding a captured square `FS` (length 3), and two
//! interleaved fences `FF` (length 4). The enumerators here place raw tiles
//! cell by cell and never assume that decomposition, so they can check it.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::Error;

/// Default largest board length `classify_board_tilings` will enumerate.
pub const BOARD_CLASSIFY_CAP: usize = 24;
/// Default largest tile count `classify_n_tilings` will enumerate.
pub const N_TILING_CLASSIFY_CAP: usize = 20;

/// A raw tile: a unit square, or a fence whose two posts sit `gap + 1` cells
/// apart (the gap is filled later by other tiles).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Tile {
    Square,
    Fence { gap: usize },
}

impl Tile {
    /// Number of cells the tile itself covers.
    pub fn cells(&self) -> usize {
        match self {
            Tile::Square => 1,
            Tile::Fence { .. } => 2,
        }
    }
}

/// One of the three indecomposable blocks of a unit-gap tiling.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Metatile {
    /// `S`: a square standing on its own.
    FreeSquare,
    /// `FS`: a fence with a square captured in its gap.
    FilledFence,
    /// `FF`: two fences interleaved post-by-post.
    Bifence,
}

impl Metatile {
    /// Cells covered on the board.
    pub fn board_length(&self) -> usize {
        match self {
            Metatile::FreeSquare => 1,
            Metatile::FilledFence => 3,
            Metatile::Bifence => 4,
        }
    }

    /// Number of tiles inside the block.
    pub fn tile_count(&self) -> usize {
        match self {
            Metatile::FreeSquare => 1,
            Metatile::FilledFence | Metatile::Bifence => 2,
        }
    }

    /// Number of fences inside the block.
    pub fn fence_count(&self) -> usize {
        match self {
            Metatile::FreeSquare => 0,
            Metatile::FilledFence => 1,
            Metatile::Bifence => 2,
        }
    }

    /// Symbol used in tiling strings.
    pub fn symbol(&self) -> &'static str {
        match self {
            Metatile::FreeSquare => "S",
            Metatile::FilledFence => "FS",
            Metatile::Bifence => "FF",
        }
    }
}

/// A complete unit-gap tiling, stored as its metatile sequence. The sequence
/// is the canonical identity of a tiling: two tilings are equal exactly when
/// their metatile sequences are.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tiling {
    metatiles: Vec<Metatile>,
}

impl Tiling {
    pub fn new(metatiles: Vec<Metatile>) -> Self {
        Tiling { metatiles }
    }

    pub fn metatiles(&self) -> &[Metatile] {
        &self.metatiles
    }

    /// Total cells covered: `4b + 3f + s` for `b` bifences, `f` filled
    /// fences, and `s` free squares.
    pub fn board_length(&self) -> usize {
        self.metatiles.iter().map(Metatile::board_length).sum()
    }

    /// Total tiles used: `2b + 2f + s`.
    pub fn tile_count(&self) -> usize {
        self.metatiles.iter().map(Metatile::tile_count).sum()
    }

    /// Total fences used: `2b + f`.
    pub fn fence_count(&self) -> usize {
        self.metatiles.iter().map(Metatile::fence_count).sum()
    }

    /// `(bifences, filled fences, free squares)`.
    pub fn metatile_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for mt in &self.metatiles {
            match mt {
                Metatile::Bifence => counts.0 += 1,
                Metatile::FilledFence => counts.1 += 1,
                Metatile::FreeSquare => counts.2 += 1,
            }
        }
        counts
    }

    /// Concatenated metatile symbols, e.g. `"SFSFF"` for square, filled
    /// fence, bifence.
    pub fn symbols(&self) -> String {
        self.metatiles.iter().map(Metatile::symbol).collect()
    }

    /// Expands the metatile sequence back into its cell-level occupancy.
    pub fn to_occupancy(&self) -> CellOccupancy {
        let mut cells = Vec::with_capacity(self.board_length());
        for mt in &self.metatiles {
            match mt {
                Metatile::FreeSquare => cells.push(CellContent::Square),
                Metatile::FilledFence => cells.extend([
                    CellContent::FenceStart,
                    CellContent::Square,
                    CellContent::FenceEnd,
                ]),
                Metatile::Bifence => cells.extend([
                    CellContent::FenceStart,
                    CellContent::FenceStart,
                    CellContent::FenceEnd,
                    CellContent::FenceEnd,
                ]),
            }
        }
        CellOccupancy { gap: 1, cells }
    }
}

impl std::fmt::Display for Tiling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.symbols())
    }
}

/// What covers a single cell of a tiled board.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CellContent {
    /// A unit square tile.
    Square,
    /// The left post of a fence; its right post sits `gap + 1` cells later.
    FenceStart,
    /// The right post of a fence; its left post sits `gap + 1` cells earlier.
    FenceEnd,
}

/// A complete cell-level tiling of a board by squares and fences with one
/// fixed gap. Every cell is covered exactly once and fence posts pair up by
/// construction; `new` rejects anything else.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CellOccupancy {
    gap: usize,
    cells: Vec<CellContent>,
}

impl CellOccupancy {
    /// Validates that `cells` is a complete tiling whose fences all have the
    /// stated gap.
    pub fn new(gap: usize, cells: Vec<CellContent>) -> Result<Self, Error> {
        if gap == 0 {
            return Err(Error::ZeroGap);
        }
        let span = gap + 1;
        for (i, cell) in cells.iter().enumerate() {
            match cell {
                CellContent::Square => {}
                CellContent::FenceStart => {
                    if i + span >= cells.len() || cells[i + span] != CellContent::FenceEnd {
                        return Err(Error::MalformedOccupancy(format!(
                            "fence starting at cell {i} has no matching post"
                        )));
                    }
                }
                CellContent::FenceEnd => {
                    if i < span || cells[i - span] != CellContent::FenceStart {
                        return Err(Error::MalformedOccupancy(format!(
                            "fence post at cell {i} has no matching start"
                        )));
                    }
                }
            }
        }
        Ok(CellOccupancy { gap, cells })
    }

    /// The fence gap every fence in this tiling uses.
    pub fn gap(&self) -> usize {
        self.gap
    }

    /// Board length in cells.
    pub fn board_length(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[CellContent] {
        &self.cells
    }

    /// Number of fences (each contributes exactly one `FenceStart`).
    pub fn fence_count(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| **c == CellContent::FenceStart)
            .count()
    }

    /// Number of tiles: squares plus fences.
    pub fn tile_count(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| **c != CellContent::FenceEnd)
            .count()
    }
}

/// Calls `visit` once for every complete tiling of an `n`-board by squares
/// and gap-`gap` fences, in canonical order: depth-first filling of the
/// leftmost empty cell, trying a square before a fence.
pub fn for_each_board_tiling(
    n: usize,
    gap: usize,
    mut visit: impl FnMut(&CellOccupancy),
) -> Result<(), Error> {
    if gap == 0 {
        return Err(Error::ZeroGap);
    }
    let mut cells: Vec<Option<CellContent>> = vec![None; n];
    fill(&mut cells, gap, &mut visit);
    Ok(())
}

fn fill(cells: &mut Vec<Option<CellContent>>, gap: usize, visit: &mut impl FnMut(&CellOccupancy)) {
    match cells.iter().position(Option::is_none) {
        None => {
            let complete = CellOccupancy {
                gap,
                cells: cells.iter().map(|c| c.unwrap()).collect(),
            };
            visit(&complete);
        }
        Some(i) => {
            cells[i] = Some(CellContent::Square);
            fill(cells, gap, visit);

            let j = i + gap + 1;
            if j < cells.len() && cells[j].is_none() {
                cells[i] = Some(CellContent::FenceStart);
                cells[j] = Some(CellContent::FenceEnd);
                fill(cells, gap, visit);
                cells[j] = None;
            }
            cells[i] = None;
        }
    }
}

/// All complete tilings of an `n`-board by squares and gap-`gap` fences, in
/// the canonical depth-first order of [`for_each_board_tiling`].
pub fn enumerate_board_tilings_by_cells(n: usize, gap: usize) -> Result<Vec<CellOccupancy>, Error> {
    let mut out = Vec::new();
    for_each_board_tiling(n, gap, |occ| out.push(occ.clone()))?;
    Ok(out)
}

/// Calls `visit` once for every metatile sequence using exactly `n` tiles,
/// in lexicographic order with `S < FS < FF`.
pub fn for_each_n_tiling(n: usize, mut visit: impl FnMut(&[Metatile])) {
    let mut prefix = Vec::with_capacity(n);
    extend(n, &mut prefix, &mut visit);
}

fn extend(remaining: usize, prefix: &mut Vec<Metatile>, visit: &mut impl FnMut(&[Metatile])) {
    if remaining == 0 {
        visit(prefix);
        return;
    }
    prefix.push(Metatile::FreeSquare);
    extend(remaining - 1, prefix, visit);
    prefix.pop();
    if remaining >= 2 {
        for mt in [Metatile::FilledFence, Metatile::Bifence] {
            prefix.push(mt);
            extend(remaining - 2, prefix, visit);
            prefix.pop();
        }
    }
}

/// All tilings that use exactly `n` tiles, in the lexicographic order of
/// [`for_each_n_tiling`].
pub fn enumerate_n_tilings(n: usize) -> Vec<Tiling> {
    let mut out = Vec::new();
    for_each_n_tiling(n, |mts| out.push(Tiling::new(mts.to_vec())));
    out
}

/// Splits a unit-gap occupancy into its metatile sequence. Cuts fall exactly
/// where no fence straddles the boundary, and each indecomposable segment is
/// one of the three metatiles.
pub fn to_metatiles(occ: &CellOccupancy) -> Result<Tiling, Error> {
    if occ.gap() != 1 {
        return Err(Error::UnsupportedGap { gap: occ.gap() });
    }
    let cells = occ.cells();
    let mut metatiles = Vec::new();
    let mut open = 0usize;
    let mut start = 0usize;
    for (i, cell) in cells.iter().enumerate() {
        match cell {
            CellContent::FenceStart => open += 1,
            CellContent::FenceEnd => open -= 1,
            CellContent::Square => {}
        }
        if open == 0 {
            metatiles.push(segment_metatile(&cells[start..=i])?);
            start = i + 1;
        }
    }
    Ok(Tiling::new(metatiles))
}

fn segment_metatile(segment: &[CellContent]) -> Result<Metatile, Error> {
    use CellContent::*;
    match segment {
        [Square] => Ok(Metatile::FreeSquare),
        [FenceStart, Square, FenceEnd] => Ok(Metatile::FilledFence),
        [FenceStart, FenceStart, FenceEnd, FenceEnd] => Ok(Metatile::Bifence),
        other => Err(Error::MalformedOccupancy(format!(
            "segment {other:?} is not a metatile"
        ))),
    }
}

/// Histogram of unit-gap tilings of an `n`-board by fence count, computed by
/// exhaustive enumeration with the default cap of [`BOARD_CLASSIFY_CAP`].
/// Keys run over every conceivable fence count `0..=n/2`, including zeros.
pub fn classify_board_tilings(n: usize) -> Result<BTreeMap<usize, BigUint>, Error> {
    classify_board_tilings_with_cap(n, BOARD_CLASSIFY_CAP)
}

/// [`classify_board_tilings`] with an explicit enumeration cap.
pub fn classify_board_tilings_with_cap(
    n: usize,
    cap: usize,
) -> Result<BTreeMap<usize, BigUint>, Error> {
    if n > cap {
        return Err(Error::InstanceTooLarge { n, cap });
    }
    let mut histogram: BTreeMap<usize, BigUint> =
        (0..=n / 2).map(|k| (k, BigUint::default())).collect();
    for_each_board_tiling(n, 1, |occ| {
        *histogram.get_mut(&occ.fence_count()).unwrap() += 1u32;
    })?;
    Ok(histogram)
}

/// Histogram of `n`-tile tilings by fence count, computed by exhaustive
/// enumeration with the default cap of [`N_TILING_CLASSIFY_CAP`]. Keys run
/// over `0..=n`, including zeros.
pub fn classify_n_tilings(n: usize) -> Result<BTreeMap<usize, BigUint>, Error> {
    classify_n_tilings_with_cap(n, N_TILING_CLASSIFY_CAP)
}

/// [`classify_n_tilings`] with an explicit enumeration cap.
pub fn classify_n_tilings_with_cap(
    n: usize,
    cap: usize,
) -> Result<BTreeMap<usize, BigUint>, Error> {
    if n > cap {
        return Err(Error::InstanceTooLarge { n, cap });
    }
    let mut histogram: BTreeMap<usize, BigUint> =
        (0..=n).map(|k| (k, BigUint::default())).collect();
    for_each_n_tiling(n, |mts| {
        let fences: usize = mts.iter().map(Metatile::fence_count).sum();
        *histogram.get_mut(&fences).unwrap() += 1u32;
    });
    Ok(histogram)
}
