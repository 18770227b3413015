//! Coordinates on modules whose vectors are tuples of matrices.

use crate::exact::{Mat, MultiPoly, Ring, Scalar};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// All `rows * cols` entries, row-major.
    Full { rows: usize, cols: usize },
    /// Entries `(i, j)` with `i <= j`.
    Symmetric(usize),
    /// Entries `(i, j)` with `i < j`; `(j, i)` is the negative.
    Skew(usize),
}

impl BlockKind {
    pub fn dim(self) -> usize {
        match self {
            BlockKind::Full { rows, cols } => rows * cols,
            BlockKind::Symmetric(n) => n * (n + 1) / 2,
            BlockKind::Skew(n) => n * n.saturating_sub(1) / 2,
        }
    }

    pub fn shape(self) -> (usize, usize) {
        match self {
            BlockKind::Full { rows, cols } => (rows, cols),
            BlockKind::Symmetric(n) | BlockKind::Skew(n) => (n, n),
        }
    }

    /// Matrix positions carrying the coordinates, in coordinate order.
    pub fn positions(self) -> Vec<(usize, usize)> {
        match self {
            BlockKind::Full { rows, cols } => (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).collect(),
            BlockKind::Symmetric(n) => (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect(),
            BlockKind::Skew(n) => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        }
    }
}

/// A module `V` identified with a tuple of matrices, one per block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixLayout {
    blocks: Vec<BlockKind>,
}

impl MatrixLayout {
    pub fn new(blocks: Vec<BlockKind>) -> Self {
        MatrixLayout { blocks }
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        Self::new(vec![BlockKind::Full { rows, cols }])
    }

    pub fn blocks(&self) -> &[BlockKind] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim()).sum()
    }

    /// First coordinate index of each block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.blocks
            .iter()
            .map(|b| {
                let o = acc;
                acc += b.dim();
                o
            })
            .collect()
    }

    pub fn to_matrices<R: Ring>(&self, coords: &[R], proto: &R) -> Vec<Mat<R>> {
        assert_eq!(coords.len(), self.dim(), "coordinate vector length");
        let mut out = Vec::with_capacity(self.blocks.len());
        let mut k = 0;
        for &b in &self.blocks {
            let (r, c) = b.shape();
            let mut m = Mat::zeros_like(r, c, proto);
            for (i, j) in b.positions() {
                let x = coords[k].clone();
                k += 1;
                match b {
                    BlockKind::Full { .. } => m.set(i, j, x),
                    BlockKind::Symmetric(_) => {
                        m.set(j, i, x.clone());
                        m.set(i, j, x);
                    }
                    BlockKind::Skew(_) => {
                        m.set(j, i, x.negated());
                        m.set(i, j, x);
                    }
                }
            }
            out.push(m);
        }
        out
    }

    /// Reads coordinates back, requiring each matrix to have its block's shape
    /// and symmetry exactly.
    pub fn from_matrices<R: Ring>(&self, mats: &[Mat<R>]) -> Result<Vec<R>> {
        if mats.len() != self.blocks.len() {
            return Err(Error::BlockStructure(format!("expected {} blocks, got {}", self.blocks.len(), mats.len())));
        }
        let mut out = Vec::with_capacity(self.dim());
        for (m, &b) in mats.iter().zip(&self.blocks) {
            if (m.rows(), m.cols()) != b.shape() {
                return Err(Error::BlockStructure(format!("block shape {:?} vs {}x{}", b, m.rows(), m.cols())));
            }
            let ok = match b {
                BlockKind::Full { .. } => true,
                BlockKind::Symmetric(_) => m.is_symmetric(),
                BlockKind::Skew(_) => m.is_skew(),
            };
            if !ok {
                return Err(Error::BlockStructure(format!("matrix does not have the {:?} symmetry", b)));
            }
            for (i, j) in b.positions() {
                out.push(m.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// The generic point: coordinate `i` is the variable `offset + i` of a
    /// polynomial ring with `nvars` variables.
    pub fn symbolic(&self, nvars: usize, offset: usize) -> Vec<Mat<MultiPoly>> {
        let vars: Vec<MultiPoly> = (0..self.dim()).map(|i| MultiPoly::var(nvars, offset + i)).collect();
        self.to_matrices(&vars, &MultiPoly::zero(nvars))
    }

    pub fn numeric(&self, coords: &[Scalar]) -> Vec<Mat<Scalar>> {
        self.to_matrices(coords, &Scalar::zero())
    }
}
