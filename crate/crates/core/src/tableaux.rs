//! Shapes and standard Young tableaux.
//!
//! General standard tableaux are stored by rows and are what the
//! Robinson-Schensted code works with. Two-column tableaux get their own type,
//! stored by columns, because that is how the orbital-variety side indexes
//! them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `n`, given by its row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Shape("a shape needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Shape("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Shape whose dual is `(n-k, k)`: `k` rows of length two on top of
    /// `n-2k` rows of length one.
    pub fn two_column(n: usize, k: usize) -> Result<Self> {
        check_two_column_params(n, k)?;
        let mut parts = vec![2; k];
        parts.extend(std::iter::repeat_n(1, n - 2 * k));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// The conjugate partition (column lengths).
    pub fn dual(&self) -> Shape {
        let parts = (1..=self.parts[0])
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Shape { parts }
    }

    /// `Some(k)` when the shape has at most two columns; `k` is the length of
    /// the second column.
    pub fn two_column_rank(&self) -> Option<usize> {
        match self.parts[0] {
            1 => Some(0),
            2 => Some(self.parts.iter().filter(|&&p| p == 2).count()),
            _ => None,
        }
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(shape: Shape) -> Self {
        shape.parts
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Shape> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            out.push(Shape { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of standard tableaux of the given shape, by the hook-length formula.
pub fn hook_count(shape: &Shape) -> u128 {
    let dual = shape.dual();
    let mut hooks: u128 = 1;
    for (r, &len) in shape.parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = dual.parts[c] - r - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    let factorial: u128 = (1..=shape.size() as u128).product();
    factorial / hooks
}

pub(crate) fn check_two_column_params(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if 2 * k > n {
        return Err(Error::Domain(format!("need 0 <= 2k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// A standard Young tableau of arbitrary shape, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRows", into = "TableauRows")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRows {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRows> for StandardTableau {
    type Error = Error;
    fn try_from(raw: TableauRows) -> Result<Self> {
        StandardTableau::from_rows(raw.rows)
    }
}

impl From<StandardTableau> for TableauRows {
    fn from(t: StandardTableau) -> Self {
        TableauRows { rows: t.rows }
    }
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        Shape::new(lengths).map_err(|e| Error::Tableau(e.to_string()))?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n {
                return Err(Error::Tableau(format!("entry {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::Tableau(format!("entry {v} repeated")));
            }
            seen[v] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            if let Some(w) = row.windows(2).find(|w| w[0] >= w[1]) {
                return Err(Error::Tableau(format!(
                    "row {} not increasing at {} >= {}",
                    r + 1,
                    w[0],
                    w[1]
                )));
            }
            if r > 0 {
                for (c, &v) in row.iter().enumerate() {
                    if rows[r - 1][c] >= v {
                        return Err(Error::Tableau(format!(
                            "column {} not increasing at {} >= {}",
                            c + 1,
                            rows[r - 1][c],
                            v
                        )));
                    }
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self> {
        if columns.is_empty() || columns[0].is_empty() {
            return Err(Error::Tableau("empty tableau".into()));
        }
        let mut rows = vec![Vec::new(); columns[0].len()];
        for (c, col) in columns.iter().enumerate() {
            if c > 0 && col.len() > columns[c - 1].len() {
                return Err(Error::Tableau(format!(
                    "column {} is longer than column {}",
                    c + 1,
                    c
                )));
            }
            if col.is_empty() {
                return Err(Error::Tableau(format!("column {} is empty", c + 1)));
            }
            for (r, &v) in col.iter().enumerate() {
                rows[r].push(v);
            }
        }
        Self::from_rows(rows)
    }

    /// The single-row tableau `1 2 ... n`.
    pub fn single_row(n: usize) -> Self {
        Self { rows: vec![(1..=n).collect()] }
    }

    /// The single-column tableau `1 2 ... n`.
    pub fn single_column(n: usize) -> Self {
        Self { rows: (1..=n).map(|v| vec![v]).collect() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.rows[0].len())
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    pub fn shape(&self) -> Shape {
        Shape { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

fn write_columns(f: &mut fmt::Formatter<'_>, columns: &[&[usize]]) -> fmt::Result {
    let text: Vec<String> = columns
        .iter()
        .map(|c| c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    write!(f, "{}", text.join("|"))
}

fn parse_columns(s: &str) -> Result<Vec<Vec<usize>>> {
    s.trim()
        .split('|')
        .map(|col| {
            let col = col.trim();
            if col.is_empty() {
                return Ok(Vec::new());
            }
            col.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad tableau entry {v:?}")))
                })
                .collect()
        })
        .collect()
}

/// Columns joined by `|`, entries by `,`: `"1,2,4|3"`.
impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols = self.columns();
        let refs: Vec<&[usize]> = cols.iter().map(Vec::as_slice).collect();
        write_columns(f, &refs)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut cols = parse_columns(s)?;
        while cols.len() > 1 && cols.last().is_some_and(Vec::is_empty) {
            cols.pop();
        }
        Self::from_columns(cols)
    }
}

/// All standard tableaux of `shape`, sorted by their last column first, then
/// the one before it, and so on. For two-column shapes this is the
/// lexicographic order on the second column.
pub fn enumerate_standard(shape: &Shape) -> Vec<StandardTableau> {
    fn rec(
        v: usize,
        n: usize,
        parts: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if v > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..parts.len() {
            let len = rows[r].len();
            if len < parts[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(v);
                rec(v + 1, n, parts, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.num_rows()];
    rec(1, shape.size(), &shape.parts, &mut rows, &mut out);
    out.sort_by_cached_key(|t| {
        let mut cols = t.columns();
        cols.reverse();
        cols
    });
    out
}

/// A standard tableau with at most two columns, stored as its two columns.
///
/// `col1` has length `n-k`, `col2` has length `k`, and `k <= n-k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawColumns", into = "RawColumns")]
pub struct TwoColumnTableau {
    col1: Vec<usize>,
    col2: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawColumns {
    col1: Vec<usize>,
    col2: Vec<usize>,
}

impl TryFrom<RawColumns> for TwoColumnTableau {
    type Error = Error;
    fn try_from(raw: RawColumns) -> Result<Self> {
        TwoColumnTableau::new(raw.col1, raw.col2)
    }
}

impl From<TwoColumnTableau> for RawColumns {
    fn from(t: TwoColumnTableau) -> Self {
        RawColumns { col1: t.col1, col2: t.col2 }
    }
}

impl TwoColumnTableau {
    /// Validates the columns. The error names the first failed check, in the
    /// order: increasing columns, entries partition `1..=n`, `k <= n-k`, row
    /// condition `col1[s] < col2[s]`.
    pub fn new(col1: Vec<usize>, col2: Vec<usize>) -> Result<Self> {
        for (name, col) in [("col1", &col1), ("col2", &col2)] {
            if let Some(w) = col.windows(2).find(|w| w[0] >= w[1]) {
                return Err(Error::Tableau(format!(
                    "{name} is not increasing ({} >= {})",
                    w[0], w[1]
                )));
            }
        }
        let n = col1.len() + col2.len();
        if n == 0 {
            return Err(Error::Tableau("empty tableau".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in col1.iter().chain(&col2) {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Tableau(format!(
                    "columns do not partition 1..={n} (entry {v})"
                )));
            }
            seen[v] = true;
        }
        if col2.len() > col1.len() {
            return Err(Error::Tableau(format!(
                "col2 (length {}) is longer than col1 (length {})",
                col2.len(),
                col1.len()
            )));
        }
        if let Some(s) = (0..col2.len()).find(|&s| col1[s] >= col2[s]) {
            return Err(Error::Tableau(format!(
                "row condition col1[{0}] < col2[{0}] fails ({1} >= {2})",
                s + 1,
                col1[s],
                col2[s]
            )));
        }
        Ok(Self { col1, col2 })
    }

    /// Tableau with a given second column; the first column is the complement.
    pub fn from_second_column(n: usize, col2: Vec<usize>) -> Result<Self> {
        let col1 = (1..=n).filter(|v| !col2.contains(v)).collect();
        Self::new(col1, col2)
    }

    pub fn col1(&self) -> &[usize] {
        &self.col1
    }

    pub fn col2(&self) -> &[usize] {
        &self.col2
    }

    pub fn n(&self) -> usize {
        self.col1.len() + self.col2.len()
    }

    pub fn k(&self) -> usize {
        self.col2.len()
    }

    pub fn shape(&self) -> Shape {
        Shape::two_column(self.n(), self.k()).expect("validated tableau has a valid shape")
    }

    pub fn to_standard(&self) -> StandardTableau {
        let rows = (0..self.col1.len())
            .map(|r| {
                let mut row = vec![self.col1[r]];
                if let Some(&v) = self.col2.get(r) {
                    row.push(v);
                }
                row
            })
            .collect();
        StandardTableau { rows }
    }

    pub fn from_standard(t: &StandardTableau) -> Result<Self> {
        let mut cols = t.columns();
        match cols.len() {
            1 => Self::new(cols.pop().unwrap(), Vec::new()),
            2 => {
                let col2 = cols.pop().unwrap();
                Self::new(cols.pop().unwrap(), col2)
            }
            c => Err(Error::Tableau(format!("tableau has {c} columns, expected at most 2"))),
        }
    }
}

/// `"c11,c12,...|c21,c22,..."`; a tableau with empty second column prints as
/// its first column only.
impl fmt::Display for TwoColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.col2.is_empty() {
            write_columns(f, &[&self.col1])
        } else {
            write_columns(f, &[&self.col1, &self.col2])
        }
    }
}

impl FromStr for TwoColumnTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut cols = parse_columns(s)?;
        match cols.len() {
            1 => Self::new(cols.pop().unwrap(), Vec::new()),
            2 => {
                let col2 = cols.pop().unwrap();
                Self::new(cols.pop().unwrap(), col2)
            }
            c => Err(Error::Parse(format!("expected at most 2 columns, got {c}"))),
        }
    }
}

/// All standard tableaux of dual shape `(n-k, k)`, ordered lexicographically
/// by the second column.
pub fn enumerate_two_column(n: usize, k: usize) -> Result<Vec<TwoColumnTableau>> {
    check_two_column_params(n, k)?;
    // The row condition is equivalent to col2[s] >= 2s (1-based s).
    fn rec(n: usize, k: usize, col2: &mut Vec<usize>, out: &mut Vec<TwoColumnTableau>) {
        let s = col2.len();
        if s == k {
            out.push(
                TwoColumnTableau::from_second_column(n, col2.clone())
                    .expect("ballot sequence gives a standard tableau"),
            );
            return;
        }
        let lo = col2.last().map_or(0, |&c| c).max(2 * (s + 1) - 1) + 1;
        let hi = n - (k - s - 1);
        for c in lo..=hi {
            col2.push(c);
            rec(n, k, col2, out);
            col2.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::with_capacity(k), &mut out);
    Ok(out)
}
