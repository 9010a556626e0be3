//! The coherent configuration object.
//!
//! A configuration of degree `n` is stored as its `n x n` color matrix. All
//! derived data (transpose map, fibers, valencies, supports) is computed once
//! at construction; structure constants are filled lazily on first use.

mod build;
mod fingerprint;
mod ops;
mod structure;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::AtomicU64;
use std::sync::{Mutex, OnceLock};

use crate::bitset::ColorSet;
use crate::error::{Error, Result};
use crate::relation::Parabolic;

pub use build::canonicalize_colors;
pub use fingerprint::Fingerprint;
pub(crate) use ops::check_permutation;
pub(crate) use structure::StructureConstants;

/// Default cap on the degree of any configuration.
pub const DEFAULT_MAX_DEGREE: usize = 4096;

/// Environment variable overriding [`DEFAULT_MAX_DEGREE`].
pub const MAX_DEGREE_ENV: &str = "CCDEC_MAX_DEGREE";

/// Index of one basis relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u32);

impl Color {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Square matrix of colors, `cell(a, b)` being the color of the pair `(a, b)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColorMatrix {
    degree: usize,
    cells: Vec<u32>,
}

impl ColorMatrix {
    pub fn new(degree: usize, cells: Vec<u32>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidDegree);
        }
        if cells.len() != degree * degree {
            return Err(Error::NotSquare { row: 0, len: cells.len(), degree: degree * degree });
        }
        Ok(ColorMatrix { degree, cells })
    }

    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let degree = rows.len();
        if degree == 0 {
            return Err(Error::InvalidDegree);
        }
        let mut cells = Vec::with_capacity(degree * degree);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != degree {
                return Err(Error::NotSquare { row, len: r.len(), degree });
            }
            cells.extend_from_slice(r);
        }
        Ok(ColorMatrix { degree, cells })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn cell(&self, a: usize, b: usize) -> u32 {
        self.cells[a * self.degree + b]
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.cells.chunks(self.degree)
    }

    pub fn into_cells(self) -> Vec<u32> {
        self.cells
    }
}

impl fmt::Debug for ColorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// How thoroughly C3 is verified during construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CheckMode {
    /// Every pair is compared with its color's witness pair.
    #[default]
    Full,
    /// One extra witness per color. Partial: can accept non-coherent input.
    Fast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub max_degree: usize,
    pub check: CheckMode,
}

impl BuildOptions {
    /// Full checking and the degree cap from `CCDEC_MAX_DEGREE`, if set.
    pub fn from_env() -> Self {
        let max_degree =
            std::env::var(MAX_DEGREE_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_DEGREE);
        BuildOptions { max_degree, check: CheckMode::Full }
    }

    pub fn fast(mut self) -> Self {
        self.check = CheckMode::Fast;
        self
    }
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self::from_env()
    }
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A validated coherent configuration. Immutable after construction; the
/// internal caches fill idempotently and are safe to share across threads.
pub struct CoherentConfiguration {
    id: u64,
    matrix: ColorMatrix,
    rank: usize,
    transpose: Vec<Color>,
    reflexive: Vec<bool>,
    fiber_of_point: Vec<usize>,
    fibers: Vec<Vec<usize>>,
    valency: Vec<usize>,
    support: Vec<(usize, usize)>,
    witness: Vec<(usize, usize)>,
    options: BuildOptions,
    structure: OnceLock<StructureConstants>,
    closures: Vec<OnceLock<Parabolic>>,
    parabolic_cache: Mutex<HashMap<ColorSet, bool>>,
}

impl Clone for CoherentConfiguration {
    fn clone(&self) -> Self {
        CoherentConfiguration {
            id: self.id,
            matrix: self.matrix.clone(),
            rank: self.rank,
            transpose: self.transpose.clone(),
            reflexive: self.reflexive.clone(),
            fiber_of_point: self.fiber_of_point.clone(),
            fibers: self.fibers.clone(),
            valency: self.valency.clone(),
            support: self.support.clone(),
            witness: self.witness.clone(),
            options: self.options,
            structure: self.structure.clone(),
            closures: self.closures.clone(),
            parabolic_cache: Mutex::new(self.parabolic_cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for CoherentConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoherentConfiguration")
            .field("degree", &self.degree())
            .field("rank", &self.rank)
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl PartialEq for CoherentConfiguration {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for CoherentConfiguration {}

impl CoherentConfiguration {
    /// Validates `matrix` against C1-C3 with default options.
    pub fn from_matrix(matrix: ColorMatrix) -> Result<Self> {
        Self::from_matrix_with(matrix, BuildOptions::default())
    }

    pub fn from_matrix_with(matrix: ColorMatrix, options: BuildOptions) -> Result<Self> {
        build::validate(matrix, options)
    }

    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        Self::from_matrix(ColorMatrix::from_rows(rows)?)
    }

    pub(crate) fn home_id(&self) -> u64 {
        self.id
    }

    pub fn options(&self) -> BuildOptions {
        self.options
    }

    pub fn degree(&self) -> usize {
        self.matrix.degree
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &ColorMatrix {
        &self.matrix
    }

    #[inline]
    pub fn cell(&self, a: usize, b: usize) -> Color {
        Color(self.matrix.cell(a, b))
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        (0..self.rank as u32).map(Color)
    }

    pub fn check_color(&self, c: Color) -> Result<()> {
        if c.index() < self.rank {
            Ok(())
        } else {
            Err(Error::ColorOutOfRange { color: c.index(), rank: self.rank })
        }
    }

    /// The color `s*` of the transposed relation.
    pub fn transpose_color(&self, c: Color) -> Color {
        self.transpose[c.index()]
    }

    pub fn is_reflexive(&self, c: Color) -> bool {
        self.reflexive[c.index()]
    }

    pub fn reflexive_colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.colors().filter(|&c| self.is_reflexive(c))
    }

    pub fn irreflexive_colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.colors().filter(|&c| !self.is_reflexive(c))
    }

    /// Out-degree `|a s|` for `a` in the left support of `s`.
    pub fn valency(&self, c: Color) -> usize {
        self.valency[c.index()]
    }

    /// `(left fiber, right fiber)` of a color.
    pub fn support(&self, c: Color) -> (usize, usize) {
        self.support[c.index()]
    }

    /// First pair of color `c` in row-major order.
    pub fn witness(&self, c: Color) -> (usize, usize) {
        self.witness[c.index()]
    }

    pub fn fiber_of(&self, point: usize) -> usize {
        self.fiber_of_point[point]
    }

    /// Fibers in ascending order of their minimal point.
    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    pub fn is_homogeneous(&self) -> bool {
        self.fibers.len() == 1
    }

    pub fn is_thin(&self, c: Color) -> bool {
        self.valency(c) == 1 && self.valency(self.transpose_color(c)) == 1
    }

    /// No irreflexive color is thin. Degree-1 configurations are vacuously thick.
    pub fn is_thick(&self) -> bool {
        self.irreflexive_colors().all(|c| !self.is_thin(c))
    }

    /// `d(s) = n_s * n_{s*}`.
    pub fn d_value(&self, c: Color) -> usize {
        self.valency(c) * self.valency(self.transpose_color(c))
    }

    /// Rank 2, i.e. only the diagonal and its complement (or degree 1).
    pub fn is_trivial(&self) -> bool {
        self.rank <= 2 && self.is_homogeneous()
    }

    pub(crate) fn structure(&self) -> &StructureConstants {
        self.structure.get_or_init(|| StructureConstants::compute(self))
    }

    /// The intersection number `c_{rs}^t = |a r ∩ b s*|` for `(a, b)` in `t`.
    pub fn intersection_number(&self, r: Color, s: Color, t: Color) -> Result<usize> {
        self.check_color(r)?;
        self.check_color(s)?;
        self.check_color(t)?;
        Ok(self.structure().get(r, s, t))
    }

    /// All nonzero `(r, s, t, c_{rs}^t)` entries.
    pub fn intersection_numbers(&self) -> impl Iterator<Item = (Color, Color, Color, usize)> + '_ {
        self.structure().iter()
    }

    pub(crate) fn closure_slot(&self, c: Color) -> &OnceLock<Parabolic> {
        &self.closures[c.index()]
    }

    pub(crate) fn parabolic_cache(&self) -> &Mutex<HashMap<ColorSet, bool>> {
        &self.parabolic_cache
    }
}

#[cfg(test)]
mod tests;
