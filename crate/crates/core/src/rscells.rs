//! Robinson-Schensted correspondence, left cells and cell graphs.
//!
//! `rs` row-inserts the one-line word `w(1) ... w(n)`; the insertion tableau
//! comes first. The left cell of `T` is the set of permutations whose
//! insertion tableau is `T`. In a cell graph the simple reflection `s_k`
//! swaps the letters in positions `k` and `k+1`, so that the insertion
//! tableau can survive the move.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intersections::pairwise_table;
use crate::tableaux::{enumerate_standard, Shape, StandardTableau, TwoColumnTableau};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Permutation(format!("{values:?} is not a rearrangement of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (1..=n).collect() }
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Self { values: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { values: inv }
    }

    /// `s_k * w`: swaps the values `k` and `k+1`.
    pub fn left_reflect(&self, k: usize) -> Self {
        let values = self
            .values
            .iter()
            .map(|&v| if v == k { k + 1 } else if v == k + 1 { k } else { v })
            .collect();
        Self { values }
    }

    /// `w * s_k`: swaps the entries in positions `k` and `k+1`.
    pub fn right_reflect(&self, k: usize) -> Self {
        let mut values = self.values.clone();
        values.swap(k - 1, k);
        Self { values }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.values
    }
}

/// `"[4,2,3,1]"`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vals.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let values = inner
            .split(',')
            .map(|v| v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {v:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// Row insertion of the word `w(1) ... w(n)`. Returns `(P, Q)`, the insertion
/// and recording tableaux.
pub fn rs(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in w.values.iter().enumerate() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut p[r][c], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    let p = StandardTableau::from_rows(p).expect("insertion tableau is standard");
    let q = StandardTableau::from_rows(q).expect("recording tableau is standard");
    (p, q)
}

/// The permutation with insertion tableau `p` and recording tableau `q`.
pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::Domain(format!(
            "shapes differ: {} vs {}",
            p.shape(),
            q.shape()
        )));
    }
    let mut p: Vec<Vec<usize>> = p.rows().to_vec();
    let mut q: Vec<Vec<usize>> = q.rows().to_vec();
    let n: usize = p.iter().map(Vec::len).sum();
    let mut values = vec![0; n];
    for step in (1..=n).rev() {
        let r = q
            .iter()
            .position(|row| row.last() == Some(&step))
            .expect("largest recording entry sits at the end of a row");
        q[r].pop();
        let mut x = p[r].pop().expect("rows of P and Q have equal length");
        for row in p[..r].iter_mut().rev() {
            let c = row
                .iter()
                .rposition(|&y| y < x)
                .expect("reverse bumping finds a smaller entry in the row above");
            x = std::mem::replace(&mut row[c], x);
        }
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        values[step - 1] = x;
    }
    Permutation::new(values)
}

/// The left cell of `t`: `rs_inverse(t, s)` for every tableau `s` of the same
/// shape, in tableau enumeration order.
pub fn cell(t: &StandardTableau) -> Vec<Permutation> {
    enumerate_standard(&t.shape())
        .iter()
        .map(|s| rs_inverse(t, s).expect("same shape"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellEdge {
    /// Vertex indices, `a < b`.
    pub a: usize,
    pub b: usize,
    pub label: usize,
}

/// The cell graph of a base tableau: vertices are all tableaux of its shape,
/// and `T'`, `T''` are joined by an edge labelled `k` when
/// swapping positions `k`, `k+1` of `RS(T, T')` gives `RS(T, T'')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellGraph {
    pub base: StandardTableau,
    pub vertices: Vec<StandardTableau>,
    pub edges: Vec<CellEdge>,
}

pub fn cell_graph(t: &StandardTableau) -> CellGraph {
    let vertices = enumerate_standard(&t.shape());
    let n = t.size();
    let mut edges = BTreeSet::new();
    for (a, s) in vertices.iter().enumerate() {
        let w = rs_inverse(t, s).expect("same shape");
        for k in 1..n {
            let (p, q) = rs(&w.right_reflect(k));
            if &p != t {
                continue;
            }
            let b = vertices.iter().position(|v| v == &q).expect("recording tableau has the shape");
            edges.insert(CellEdge { a: a.min(b), b: a.max(b), label: k });
        }
    }
    CellGraph { base: t.clone(), vertices, edges: edges.into_iter().collect() }
}

impl CellGraph {
    /// Edges as `(vertex, vertex, label)` with vertices in text encoding.
    pub fn labelled_edges(&self) -> Vec<(String, String, usize)> {
        self.edges
            .iter()
            .map(|e| (self.vertices[e.a].to_string(), self.vertices[e.b].to_string(), e.label))
            .collect()
    }
}

/// The positions `(i, j)`, `i < j`, of the root spaces in the intersection
/// of the upper-triangular nilpotents with its `w`-conjugate:
/// `w^{-1}(i) < w^{-1}(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPositionSet {
    pub w: Permutation,
    pub positions: Vec<(usize, usize)>,
}

pub fn root_positions(w: &Permutation) -> RootPositionSet {
    let inv = w.inverse();
    let n = w.n();
    let positions = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| inv.apply(i) < inv.apply(j))
        .collect();
    RootPositionSet { w: w.clone(), positions }
}

impl RootPositionSet {
    /// The `n x n` pattern with `*` on included positions and `.` elsewhere.
    pub fn to_grid(&self) -> String {
        let n = self.w.n();
        let mut s = String::new();
        for i in 1..=n {
            let row: String = (1..=n)
                .map(|j| if self.positions.binary_search(&(i, j)).is_ok() { '*' } else { '.' })
                .collect();
            let _ = writeln!(s, "{row}");
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCodimRow {
    pub left: TwoColumnTableau,
    pub right: TwoColumnTableau,
    /// Base tableaux whose cell graph joins the pair.
    pub joined_in: Vec<TwoColumnTableau>,
    pub labels: Vec<usize>,
    pub codim: usize,
    pub irreducible: bool,
    /// Joined in some cell graph, but the codimension is not one.
    pub unsound: bool,
    /// Codimension one, but not joined in any cell graph.
    pub missing_edge: bool,
}

/// Compares cell-graph adjacency with codimension-one intersections for one
/// two-column shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCodimReport {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<EdgeCodimRow>,
    pub discrepancies: usize,
}

pub fn edge_vs_codim(n: usize, k: usize) -> Result<EdgeCodimReport> {
    let table = pairwise_table(n, k)?;
    let shape = Shape::two_column(n, k)?;
    let standard: Vec<StandardTableau> = table.tableaux.iter().map(TwoColumnTableau::to_standard).collect();
    debug_assert_eq!(standard, enumerate_standard(&shape));
    let m = standard.len();
    let mut joined: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![Vec::new(); m]; m];
    for (base, t) in standard.iter().enumerate() {
        for e in cell_graph(t).edges {
            joined[e.a][e.b].push((base, e.label));
        }
    }
    let mut rows = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for a in 0..m {
        for b in a + 1..m {
            let cell = table.cells[a][b];
            let mut bases: Vec<TwoColumnTableau> =
                joined[a][b].iter().map(|&(base, _)| table.tableaux[base].clone()).collect();
            bases.dedup();
            let mut labels: Vec<usize> = joined[a][b].iter().map(|&(_, l)| l).collect();
            labels.sort_unstable();
            labels.dedup();
            let is_joined = !bases.is_empty();
            rows.push(EdgeCodimRow {
                left: table.tableaux[a].clone(),
                right: table.tableaux[b].clone(),
                joined_in: bases,
                labels,
                codim: cell.codim,
                irreducible: cell.irreducible,
                unsound: is_joined && cell.codim != 1,
                missing_edge: !is_joined && cell.codim == 1,
            });
        }
    }
    let discrepancies = rows.iter().filter(|r| r.unsound || r.missing_edge).count();
    Ok(EdgeCodimReport { n, k, rows, discrepancies })
}

impl EdgeCodimReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n={} k={}: {} discrepancies", self.n, self.k, self.discrepancies);
        for r in &self.rows {
            let flag = if r.unsound {
                "  UNSOUND"
            } else if r.missing_edge {
                "  codim 1 without edge"
            } else {
                ""
            };
            let labels: Vec<String> = r.labels.iter().map(usize::to_string).collect();
            let _ = writeln!(
                s,
                "{} -- {}: codim {} joined in {} graph(s) labels [{}]{flag}",
                r.left,
                r.right,
                r.codim,
                r.joined_in.len(),
                labels.join(",")
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::partitions;

    fn all_permutations(n: usize) -> Vec<Permutation> {
        let mut out = vec![vec![]];
        for m in 1..=n {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..=p.len()).map(move |pos| {
                        let mut q = p.clone();
                        q.insert(pos, m);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|v| Permutation::new(v).unwrap()).collect()
    }

    fn st(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn rs_trivial_cases() {
        let (p, q) = rs(&Permutation::identity(5));
        assert_eq!(p, StandardTableau::single_row(5));
        assert_eq!(q, StandardTableau::single_row(5));
        let (p, q) = rs(&Permutation::longest(5));
        assert_eq!(p, StandardTableau::single_column(5));
        assert_eq!(q, StandardTableau::single_column(5));
        assert_eq!(rs_inverse(&StandardTableau::single_row(4), &StandardTableau::single_row(4)).unwrap(), Permutation::identity(4));
        assert!(rs_inverse(&StandardTableau::single_row(4), &StandardTableau::single_column(4)).is_err());
    }

    #[test]
    fn rs_is_a_bijection() {
        for n in 1..=6 {
            let mut pairs = BTreeSet::new();
            for w in all_permutations(n) {
                let (p, q) = rs(&w);
                assert_eq!(p.shape(), q.shape());
                assert_eq!(rs_inverse(&p, &q).unwrap(), w);
                pairs.insert((p, q));
            }
            let expected: u128 = partitions(n).iter().map(|s| crate::hook_count(s).pow(2)).sum();
            assert_eq!(pairs.len() as u128, expected);
        }
    }

    #[test]
    fn cell_calibration() {
        let t = st("1,2,4|3");
        let mut c: Vec<String> = cell(&t).iter().map(|w| w.to_string()).collect();
        c.sort();
        assert_eq!(c, ["[2,4,3,1]", "[4,2,1,3]", "[4,2,3,1]"]);
        assert_eq!(cell(&StandardTableau::single_row(4)), vec![Permutation::identity(4)]);
        assert_eq!(cell(&st("1,3,5|2,4,6")).len(), 5);
    }

    #[test]
    fn cells_partition_sn() {
        for n in 1..=5 {
            let mut seen = BTreeSet::new();
            for shape in partitions(n) {
                for t in enumerate_standard(&shape) {
                    for w in cell(&t) {
                        assert!(seen.insert(w));
                    }
                }
            }
            assert_eq!(seen.len(), all_permutations(n).len());
        }
    }

    #[test]
    fn cell_graph_of_shape_222() {
        let names = ["1,2,3|4,5,6", "1,2,4|3,5,6", "1,3,4|2,5,6", "1,2,5|3,4,6", "1,3,5|2,4,6"];
        let mut expected: Vec<(String, String, usize)> = [(0, 1, 3), (1, 3, 4), (1, 2, 2), (3, 4, 2), (2, 4, 4)]
            .iter()
            .map(|&(a, b, l)| (names[a].to_string(), names[b].to_string(), l))
            .map(|(a, b, l)| if a <= b { (a, b, l) } else { (b, a, l) })
            .collect();
        expected.sort();
        for base in names {
            let mut edges: Vec<(String, String, usize)> = cell_graph(&st(base))
                .labelled_edges()
                .into_iter()
                .map(|(a, b, l)| if a <= b { (a, b, l) } else { (b, a, l) })
                .collect();
            edges.sort();
            assert_eq!(edges, expected, "base {base}");
        }
    }

    #[test]
    fn single_column_graph() {
        let g = cell_graph(&StandardTableau::single_column(4));
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn root_position_examples() {
        assert_eq!(root_positions(&Permutation::identity(3)).positions, [(1, 2), (1, 3), (2, 3)]);
        assert!(root_positions(&Permutation::longest(5)).positions.is_empty());
        let w: Permutation = "[4,2,3,1]".parse().unwrap();
        // w^{-1} = [4,2,3,1]; keep (i,j) with w^{-1}(i) < w^{-1}(j).
        assert_eq!(root_positions(&w).positions, [(2, 3)]);
        let w: Permutation = "[2,4,3,1]".parse().unwrap();
        assert_eq!(root_positions(&w).positions, [(2, 3), (2, 4)]);
    }

    #[test]
    fn edges_imply_codim_one() {
        for n in 2..=6 {
            for k in 1..=n / 2 {
                let report = edge_vs_codim(n, k).unwrap();
                assert!(report.rows.iter().all(|r| !r.unsound), "n={n} k={k}\n{}", report.to_text());
            }
        }
    }

    #[test]
    fn edge_vs_codim_examples() {
        let report = edge_vs_codim(6, 3).unwrap();
        let row = report
            .rows
            .iter()
            .find(|r| {
                let pair = [r.left.to_string(), r.right.to_string()];
                pair.contains(&"1,2,3|4,5,6".to_string()) && pair.contains(&"1,3,5|2,4,6".to_string())
            })
            .unwrap();
        assert_eq!(row.codim, 1);
        assert!(row.joined_in.is_empty());
        assert!(row.missing_edge);
        assert_eq!(report.discrepancies, 1);
        for (n, k) in [(4, 2), (5, 2), (4, 1), (5, 1)] {
            assert_eq!(edge_vs_codim(n, k).unwrap().discrepancies, 0, "n={n} k={k}");
        }
    }

    #[test]
    fn permutation_parsing() {
        assert!("[1,1]".parse::<Permutation>().is_err());
        assert!("[1,3]".parse::<Permutation>().is_err());
        let w: Permutation = "3,1,2".parse().unwrap();
        assert_eq!(w.to_string(), "[3,1,2]");
        assert_eq!(w.inverse().to_string(), "[2,3,1]");
        assert_eq!(w.left_reflect(1).to_string(), "[3,2,1]");
        assert_eq!(w.right_reflect(1).to_string(), "[1,3,2]");
    }
}
