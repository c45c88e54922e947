//! Intersections of B-orbit closures.
//!
//! The intersection of the closures of `B.N_sigma` and `B.N_tau` is the union
//! of the orbits whose rank matrix lies below the entrywise minimum of the
//! two rank matrices. Its irreducible components are the closures of the
//! maximal such orbits, and there is exactly one component precisely when the
//! minimum is itself a rank matrix.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions::{orbit_dim, sigma_of_tableau, Involution};
use crate::rankmatrix::{leq_same_size, rank_matrix, validate, UpperMatrix};
use crate::tableaux::{enumerate_two_column, TwoColumnTableau};

/// Entrywise minimum of two rank matrices.
pub fn meet(a: &UpperMatrix, b: &UpperMatrix) -> Result<UpperMatrix> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    let rows = a
        .rows()
        .iter()
        .zip(b.rows())
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| *x.min(&y)).collect())
        .collect();
    UpperMatrix::from_rows(rows)
}

/// All involutions whose rank matrix is entrywise below `bound`.
///
/// Adding a 2-cycle only increases a rank matrix, so the search extends
/// partial matchings point by point and abandons a branch as soon as one
/// entry exceeds the bound.
pub fn downset(bound: &UpperMatrix) -> Vec<Involution> {
    struct Search<'a> {
        n: usize,
        bound: &'a UpperMatrix,
        current: Vec<u32>,
        used: Vec<bool>,
        cycles: Vec<(usize, usize)>,
        out: Vec<Involution>,
    }

    impl Search<'_> {
        fn fits(&self, a: usize, b: usize) -> bool {
            (1..=a).all(|i| (b..=self.n).all(|j| self.current[(i - 1) * self.n + j - 1] < self.bound.at(i, j)))
        }

        fn bump(&mut self, a: usize, b: usize, up: bool) {
            for i in 1..=a {
                for j in b..=self.n {
                    let cell = &mut self.current[(i - 1) * self.n + j - 1];
                    if up {
                        *cell += 1;
                    } else {
                        *cell -= 1;
                    }
                }
            }
        }

        fn run(&mut self, v: usize) {
            if v > self.n {
                let sigma = Involution::new(self.n, self.cycles.clone()).expect("disjoint cycles");
                self.out.push(sigma);
                return;
            }
            if self.used[v] {
                self.run(v + 1);
                return;
            }
            self.run(v + 1);
            self.used[v] = true;
            for w in v + 1..=self.n {
                if self.used[w] || !self.fits(v, w) {
                    continue;
                }
                self.used[w] = true;
                self.cycles.push((v, w));
                self.bump(v, w, true);
                self.run(v + 1);
                self.bump(v, w, false);
                self.cycles.pop();
                self.used[w] = false;
            }
            self.used[v] = false;
        }
    }

    let n = bound.size();
    let mut search = Search {
        n,
        bound,
        current: vec![0; n * n],
        used: vec![false; n + 1],
        cycles: Vec::new(),
        out: Vec::new(),
    };
    search.run(1);
    let mut out = search.out;
    out.sort_unstable_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cycles().cmp(b.cycles())));
    out
}

/// The maximal elements of a set of involutions under the closure order,
/// sorted by cycle sequence.
pub fn maximal_elements(sigmas: &[Involution]) -> Vec<Involution> {
    let mut keyed: Vec<(u64, UpperMatrix, &Involution)> = sigmas
        .iter()
        .map(|s| {
            let r = rank_matrix(s);
            let weight = r.entries().iter().map(|&v| v as u64).sum();
            (weight, r, s)
        })
        .collect();
    // A strictly larger matrix has a strictly larger entry sum, so every
    // element is compared only with maxima that were accepted before it.
    keyed.sort_by_key(|k| std::cmp::Reverse(k.0));
    let mut maxima: Vec<(UpperMatrix, &Involution)> = Vec::new();
    for (_, r, s) in keyed {
        if !maxima.iter().any(|(m, _)| leq_same_size(&r, m)) {
            maxima.push((r, s));
        }
    }
    let mut out: Vec<Involution> = maxima.into_iter().map(|(_, s)| s.clone()).collect();
    out.sort_unstable_by(|a, b| a.cycles().cmp(b.cycles()));
    out
}

/// Every involution in the closure of `B.N_sigma`, including `sigma` and
/// the identity.
pub fn closure_set(sigma: &Involution) -> Vec<Involution> {
    downset(&rank_matrix(sigma))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub cycles: Vec<(usize, usize)>,
    pub rank: usize,
    pub dim: usize,
    pub codim: usize,
}

impl Component {
    pub fn sigma(&self, n: usize) -> Result<Involution> {
        Involution::new(n, self.cycles.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionReport {
    pub n: usize,
    pub left: Involution,
    pub right: Involution,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_tableau: Option<TwoColumnTableau>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_tableau: Option<TwoColumnTableau>,
    pub meet: UpperMatrix,
    pub irreducible: bool,
    pub components: Vec<Component>,
    /// Dimension of the left orbit; codimensions are measured against it.
    pub ambient_dim: usize,
    /// Whether both sides have the same number of 2-cycles. When they do not,
    /// the codimensions are only relative to the left orbit.
    pub same_rank: bool,
}

impl IntersectionReport {
    /// `ambient_dim` minus the largest component dimension.
    pub fn codim(&self) -> usize {
        self.components.iter().map(|c| c.codim).min().unwrap_or(self.ambient_dim)
    }

    pub fn max_dim(&self) -> usize {
        self.components.iter().map(|c| c.dim).max().unwrap_or(0)
    }

    pub fn component_sigmas(&self) -> Vec<Involution> {
        self.components
            .iter()
            .map(|c| c.sigma(self.n).expect("components are valid involutions"))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let label = |sigma: &Involution, t: &Option<TwoColumnTableau>| match t {
            Some(t) => format!("{sigma} [{t}]"),
            None => sigma.to_string(),
        };
        let _ = writeln!(s, "left:  {}", label(&self.left, &self.left_tableau));
        let _ = writeln!(s, "right: {}", label(&self.right, &self.right_tableau));
        let _ = writeln!(s, "meet:\n{}", self.meet);
        let _ = writeln!(s, "irreducible: {}", self.irreducible);
        let _ = writeln!(s, "ambient dim: {}{}", self.ambient_dim, if self.same_rank { "" } else { " (mixed ranks)" });
        let _ = writeln!(s, "components: {}", self.components.len());
        for c in &self.components {
            let sigma = c.sigma(self.n).expect("components are valid involutions");
            let _ = writeln!(s, "  {sigma}  rank {}  dim {}  codim {}", c.rank, c.dim, c.codim);
        }
        s
    }
}

/// Decomposes the intersection of the closures of `B.N_left` and `B.N_right`.
pub fn intersect(left: &Involution, right: &Involution) -> Result<IntersectionReport> {
    if left.n() != right.n() {
        return Err(Error::SizeMismatch(left.n(), right.n()));
    }
    let bound = meet(&rank_matrix(left), &rank_matrix(right))?;
    let ambient_dim = orbit_dim(left);
    let components = maximal_elements(&downset(&bound))
        .into_iter()
        .map(|s| {
            let dim = orbit_dim(&s);
            Component {
                cycles: s.cycles().to_vec(),
                rank: s.rank(),
                dim,
                codim: ambient_dim - dim,
            }
        })
        .collect();
    Ok(IntersectionReport {
        n: left.n(),
        left: left.clone(),
        right: right.clone(),
        left_tableau: None,
        right_tableau: None,
        irreducible: validate(&bound).valid,
        meet: bound,
        components,
        ambient_dim,
        same_rank: left.rank() == right.rank(),
    })
}

/// [`intersect`] for the orbital varieties of two tableaux.
pub fn intersect_tableaux(
    left: &TwoColumnTableau,
    right: &TwoColumnTableau,
) -> Result<IntersectionReport> {
    let mut report = intersect(&sigma_of_tableau(left), &sigma_of_tableau(right))?;
    report.left_tableau = Some(left.clone());
    report.right_tableau = Some(right.clone());
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub codim: usize,
    pub irreducible: bool,
    pub components: usize,
}

/// Intersections of all pairs of orbital varieties of one two-column shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwiseTable {
    pub n: usize,
    pub k: usize,
    pub tableaux: Vec<TwoColumnTableau>,
    pub cells: Vec<Vec<TableCell>>,
}

/// Computes every cell of the table. Cells are independent and are evaluated
/// on the current rayon pool; the result does not depend on the pool size.
pub fn pairwise_table(n: usize, k: usize) -> Result<PairwiseTable> {
    let tableaux = enumerate_two_column(n, k)?;
    let m = tableaux.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect();
    let computed: Vec<Result<TableCell>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let report = intersect_tableaux(&tableaux[a], &tableaux[b])?;
            Ok(TableCell {
                codim: report.codim(),
                irreducible: report.irreducible,
                components: report.components.len(),
            })
        })
        .collect();
    let blank = TableCell { codim: 0, irreducible: true, components: 1 };
    let mut cells = vec![vec![blank; m]; m];
    for (&(a, b), cell) in pairs.iter().zip(computed) {
        let cell = cell?;
        cells[a][b] = cell;
        cells[b][a] = cell;
    }
    Ok(PairwiseTable { n, k, tableaux, cells })
}

impl PairwiseTable {
    /// Index pairs `a < b` whose intersection has codimension one.
    pub fn codim1_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs_with_codim(1)
    }

    pub fn pairs_with_codim(&self, codim: usize) -> Vec<(usize, usize)> {
        let m = self.tableaux.len();
        (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|&(a, b)| self.cells[a][b].codim == codim)
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("row,col,row_tableau,col_tableau,codim,irreducible,components\n");
        for (a, row) in self.cells.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{},{},\"{}\",\"{}\",{},{},{}",
                    a + 1,
                    b + 1,
                    self.tableaux[a],
                    self.tableaux[b],
                    c.codim,
                    c.irreducible,
                    c.components
                );
            }
        }
        s
    }

    /// Codimension grid; a trailing `*` marks a reducible intersection.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n={} k={} ambient dim {}", self.n, self.k, self.k * (self.n - self.k));
        for (a, t) in self.tableaux.iter().enumerate() {
            let _ = writeln!(s, "T{}: {t}", a + 1);
        }
        let m = self.tableaux.len();
        let width = (m.to_string().len() + 1).max(3);
        let _ = write!(s, "{:>width$}", "");
        for b in 0..m {
            let _ = write!(s, " {:>width$}", format!("T{}", b + 1));
        }
        s.push('\n');
        for (a, row) in self.cells.iter().enumerate() {
            let _ = write!(s, "{:>width$}", format!("T{}", a + 1));
            for c in row {
                let cell = format!("{}{}", c.codim, if c.irreducible { "" } else { "*" });
                let _ = write!(s, " {cell:>width$}");
            }
            s.push('\n');
        }
        s
    }
}
