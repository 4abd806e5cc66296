//! Young diagrams and the diagonal calculus used throughout the crate.
//!
//! A diagram is stored as its nonzero row lengths, so the empty diagram has a
//! unique representation. Row indices in the docs are 1-based; storage is
//! 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A Young diagram `(α_1 ≥ α_2 ≥ … ≥ α_h > 0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    /// Builds a diagram from row lengths, stripping trailing zeros.
    pub fn new(rows: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut rows = rows.into();
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(rows));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Self { rows })
    }

    /// Same as [`YoungDiagram::new`] but panics on a non-decreasing input.
    /// Intended for literals in tests and tables.
    pub fn from_rows(rows: &[u32]) -> Self {
        Self::new(rows.to_vec()).expect("rows must be weakly decreasing")
    }

    /// Single row `(a)`.
    pub fn row(a: u32) -> Self {
        Self::from_rows(&[a])
    }

    /// Single column `(1^a)`.
    pub fn column(a: u32) -> Self {
        Self::rectangle(1, a)
    }

    /// Full rectangle with `height` rows of length `width`.
    pub fn rectangle(width: u32, height: u32) -> Self {
        Self::from_rows(&vec![width; height as usize])
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// 1-based row access; rows past the height are zero.
    pub fn row_len(&self, i: usize) -> u32 {
        assert!(i >= 1, "rows are 1-based");
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> u32 {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Number of boxes `|α|`.
    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Side of the largest square fitting in the top-left corner,
    /// `max { i : α_i ≥ i }`.
    pub fn diag_len(&self) -> usize {
        self.rows
            .iter()
            .enumerate()
            .take_while(|&(i, &r)| r as usize > i)
            .count()
    }

    /// Rows padded with zeros to exactly `len` entries. Panics if the
    /// diagram is taller than `len`.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(self.height() <= len, "diagram {self} taller than {len}");
        let mut v = self.rows.clone();
        v.resize(len, 0);
        v
    }

    pub fn transpose(&self) -> Self {
        let rows = (1..=self.width())
            .map(|j| self.rows.iter().filter(|&&r| r >= j).count() as u32)
            .collect();
        Self { rows }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// The parts right of and below the diagonal square.
    pub fn head_tail(&self) -> (Self, Self) {
        let s = self.diag_len();
        let head = self.rows[..s]
            .iter()
            .map(|&r| r - s as u32)
            .collect::<Vec<_>>();
        let tail = self.rows[s..].to_vec();
        (
            Self::new(head).expect("head of a diagram is a diagram"),
            Self { rows: tail },
        )
    }

    pub fn head(&self) -> Self {
        self.head_tail().0
    }

    pub fn tail(&self) -> Self {
        self.head_tail().1
    }

    /// Widens the first `diag_len` rows by `p`.
    pub fn expand_horizontal(&self, p: u32) -> Self {
        let s = self.diag_len();
        let mut rows = self.rows.clone();
        for r in &mut rows[..s] {
            *r += p;
        }
        Self { rows }
    }

    /// Inserts `q` rows of length `diag_len` right after row `diag_len`.
    pub fn expand_vertical(&self, q: u32) -> Self {
        let s = self.diag_len();
        if s == 0 {
            return self.clone();
        }
        let mut rows = Vec::with_capacity(self.rows.len() + q as usize);
        rows.extend_from_slice(&self.rows[..s]);
        rows.extend(std::iter::repeat_n(s as u32, q as usize));
        rows.extend_from_slice(&self.rows[s..]);
        Self { rows }
    }

    /// Inverse of [`expand_horizontal`](Self::expand_horizontal): the unique
    /// `ν` with `expand_horizontal(ν, p) == self`, if any.
    pub fn contract_horizontal(&self, p: u32) -> Option<Self> {
        let s = self.diag_len();
        let mut rows = self.rows.clone();
        for r in &mut rows[..s] {
            *r = r.checked_sub(p)?;
        }
        let nu = Self::new(rows).ok()?;
        (nu.diag_len() == s).then_some(nu)
    }

    /// Inverse of [`expand_vertical`](Self::expand_vertical).
    pub fn contract_vertical(&self, q: u32) -> Option<Self> {
        self.transpose()
            .contract_horizontal(q)
            .map(|nu| nu.transpose())
    }

    /// Row-wise containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.height() <= other.height() && self.rows.iter().zip(&other.rows).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for r in &self.rows {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let rows = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad diagram {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows)
    }
}

impl From<YoungDiagram> for String {
    fn from(d: YoungDiagram) -> Self {
        d.to_string()
    }
}

impl TryFrom<String> for YoungDiagram {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// The box `Y_{w,h}` of diagrams with at most `h` rows of length at most `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rectangle {
    pub width: u32,
    pub height: u32,
}

impl Rectangle {
    pub fn new(width: u32, height: u32) -> Self {
        Self { width, height }
    }

    pub fn contains(&self, alpha: &YoungDiagram) -> bool {
        alpha.height() <= self.height as usize && alpha.width() <= self.width
    }

    /// All diagrams in the rectangle, in ascending lexicographic order of
    /// their row sequences (so `∅` first).
    pub fn diagrams(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        let mut rows = Vec::with_capacity(self.height as usize);
        push_diagrams(self.width, self.height as usize, &mut rows, &mut out);
        out.sort();
        out
    }
}

fn push_diagrams(max: u32, slots: usize, rows: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
    out.push(YoungDiagram { rows: rows.clone() });
    if slots == 0 {
        return;
    }
    for r in 1..=max {
        rows.push(r);
        push_diagrams(r, slots - 1, rows, out);
        rows.pop();
    }
}

/// Filters accepted by [`enumerate`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DiagramFilter {
    pub symmetric_only: bool,
    /// Keep only diagrams with `|ν| + diag_len(ν)` equal to this value.
    pub size_plus_diag: Option<u32>,
}

impl DiagramFilter {
    pub fn symmetric() -> Self {
        Self {
            symmetric_only: true,
            size_plus_diag: None,
        }
    }

    pub fn with_size_plus_diag(mut self, target: u32) -> Self {
        self.size_plus_diag = Some(target);
        self
    }

    pub fn accepts(&self, nu: &YoungDiagram) -> bool {
        (!self.symmetric_only || nu.is_symmetric())
            && self
                .size_plus_diag
                .is_none_or(|t| nu.size() + nu.diag_len() as u32 == t)
    }
}

/// Diagrams in `rect` passing `filter`, in the order of [`Rectangle::diagrams`].
pub fn enumerate(rect: Rectangle, filter: DiagramFilter) -> Vec<YoungDiagram> {
    rect.diagrams()
        .into_iter()
        .filter(|d| filter.accepts(d))
        .collect()
}
