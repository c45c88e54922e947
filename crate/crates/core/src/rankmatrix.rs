//! Rank matrices of B-orbits and the closure order.
//!
//! Indices in this module's public API are 1-based: `(i, j)` is row `i`,
//! column `j`, as in the usual displays of these matrices. For an involution
//! `sigma`, `(R_sigma)_{i,j}` counts the 2-cycles `(a, b)` with `i <= a` and
//! `b <= j`, i.e. the rank of the window `i..=j` of `N_sigma`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions::Involution;
use crate::tableaux::TwoColumnTableau;

/// A square matrix of non-negative integers vanishing on and below the
/// diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct UpperMatrix {
    n: usize,
    entries: Vec<u16>,
}

impl UpperMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![0; n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Matrix(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if r >= c && v != 0 {
                    return Err(Error::Matrix(format!(
                        "entry ({},{}) = {v} lies on or below the diagonal",
                        r + 1,
                        c + 1
                    )));
                }
                let v = u16::try_from(v)
                    .map_err(|_| Error::Matrix(format!("entry {v} is too large")))?;
                m.entries[r * n + c] = v;
            }
        }
        Ok(m)
    }

    /// Parses rows separated by `;`, entries by `,`: `"0,1,2;0,0,1;0,0,0"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_rows(parse_rows(text)?)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based. Row `n+1` and column `0` (and anything else
    /// outside the matrix) read as zero.
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            0
        } else {
            self.entries[(i - 1) * self.n + (j - 1)] as u32
        }
    }

    fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[(i - 1) * self.n + (j - 1)] = v as u16;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.iter().map(|&v| v as u32).collect()).collect()
    }

    /// The entry `(1, n)`, which for a rank matrix is the rank of the orbit.
    pub fn corner(&self) -> u32 {
        self.at(1, self.n)
    }

    pub(crate) fn entries(&self) -> &[u16] {
        &self.entries
    }
}

impl TryFrom<Vec<Vec<u32>>> for UpperMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        UpperMatrix::from_rows(rows)
    }
}

impl From<UpperMatrix> for Vec<Vec<u32>> {
    fn from(m: UpperMatrix) -> Self {
        m.rows()
    }
}

/// Right-aligned grid, one row per line.
impl fmt::Display for UpperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn parse_rows(text: &str) -> Result<Vec<Vec<u32>>> {
    text.trim()
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad matrix entry {v:?}")))
                })
                .collect()
        })
        .collect()
}

/// `(N_sigma)_{i,j} = 1` iff `i < j` and `sigma(i) = j`.
pub fn n_matrix(sigma: &Involution) -> UpperMatrix {
    let mut m = UpperMatrix::zeros(sigma.n());
    for &(i, j) in sigma.cycles() {
        m.set(i, j, 1);
    }
    m
}

/// `(R_sigma)_{i,j}` = number of ones of `N_sigma` weakly below and to the
/// left of `(i, j)`, for `i < j`.
pub fn rank_matrix(sigma: &Involution) -> UpperMatrix {
    let n = sigma.n();
    let mut m = UpperMatrix::zeros(n);
    for &(a, b) in sigma.cycles() {
        for i in 1..=a {
            for j in b..=n {
                let idx = (i - 1) * n + (j - 1);
                m.entries[idx] += 1;
            }
        }
    }
    m
}

/// Which rank-matrix condition a [`Violation`] breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    /// Non-zero entry on or below the diagonal.
    #[serde(rename = "i")]
    Lower,
    /// `R_{i+1,j} <= R_{i,j} <= R_{i+1,j} + 1` fails.
    #[serde(rename = "ii-row")]
    RowStep,
    /// `R_{i,j-1} <= R_{i,j} <= R_{i,j-1} + 1` fails.
    #[serde(rename = "ii-col")]
    ColStep,
    /// Row `i` must step by one exactly from column `j` on.
    #[serde(rename = "iiia")]
    PivotRow,
    /// Column `j` must step by one exactly up to row `i`.
    #[serde(rename = "iiib")]
    PivotColumn,
    /// Row `j` and column `i` must carry no pivot.
    #[serde(rename = "iiic")]
    PivotExclusion,
}

impl Condition {
    pub fn tag(self) -> &'static str {
        match self {
            Condition::Lower => "i",
            Condition::RowStep => "ii-row",
            Condition::ColStep => "ii-col",
            Condition::PivotRow => "iiia",
            Condition::PivotColumn => "iiib",
            Condition::PivotExclusion => "iiic",
        }
    }
}

/// A failed condition. For the step conditions `position` is the offending
/// entry; for the pivot conditions it is the pivot `(i, j)` that triggered
/// the check and `witness` is the first entry where the check fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub position: (usize, usize),
    pub witness: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self { valid: violations.is_empty(), violations }
    }
}

/// Checks whether `r` is the rank matrix of some involution, using the
/// step conditions on adjacent entries and the pivot conditions at every
/// entry where both steps into it are `+1` and the diagonal step is `+1`.
///
/// Every violation is reported, not only the first.
pub fn validate(r: &UpperMatrix) -> ValidityReport {
    let n = r.size();
    let at = |i: usize, j: usize| r.at(i, j) as i64;
    let mut out = Vec::new();
    let push = |out: &mut Vec<Violation>, condition, position, witness| {
        out.push(Violation { condition, position, witness })
    };
    for i in 1..=n {
        for j in i + 1..=n {
            let d_row = at(i, j) - at(i + 1, j);
            if !(0..=1).contains(&d_row) {
                push(&mut out, Condition::RowStep, (i, j), (i + 1, j));
            }
            let d_col = at(i, j) - at(i, j - 1);
            if !(0..=1).contains(&d_col) {
                push(&mut out, Condition::ColStep, (i, j), (i, j - 1));
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let v = at(i, j);
            let pivot = v == at(i + 1, j) + 1 && v == at(i, j - 1) + 1 && v == at(i + 1, j - 1) + 1;
            if !pivot {
                continue;
            }
            let row_bad = (1..=n).find(|&k| {
                let expected = if k < j { 0 } else { 1 };
                at(i, k) - at(i + 1, k) != expected
            });
            if let Some(k) = row_bad {
                push(&mut out, Condition::PivotRow, (i, j), (i, k));
            }
            let col_bad = (1..=n).find(|&k| {
                let expected = if k > i { 0 } else { 1 };
                at(k, j) - at(k, j - 1) != expected
            });
            if let Some(k) = col_bad {
                push(&mut out, Condition::PivotColumn, (i, j), (k, j));
            }
            let excl_bad = (1..=n)
                .find(|&k| at(j, k) != at(j + 1, k))
                .map(|k| (j, k))
                .or_else(|| (1..=n).find(|&k| at(k, i) != at(k, i - 1)).map(|k| (k, i)));
            if let Some(w) = excl_bad {
                push(&mut out, Condition::PivotExclusion, (i, j), w);
            }
        }
    }
    ValidityReport::from_violations(out)
}

/// Like [`validate`], but for an arbitrary square matrix given by rows:
/// entries on or below the diagonal are reported as [`Condition::Lower`]
/// violations and then ignored.
pub fn validate_rows(rows: &[Vec<u32>]) -> Result<ValidityReport> {
    let n = rows.len();
    let mut lower = Vec::new();
    let mut upper = rows.to_vec();
    for (r, row) in upper.iter_mut().enumerate() {
        if row.len() != n {
            return Err(Error::Matrix(format!("matrix is not square (row {})", r + 1)));
        }
        for (c, v) in row.iter_mut().enumerate() {
            if r >= c && *v != 0 {
                lower.push(Violation {
                    condition: Condition::Lower,
                    position: (r + 1, c + 1),
                    witness: (r + 1, c + 1),
                });
                *v = 0;
            }
        }
    }
    let report = validate(&UpperMatrix::from_rows(upper)?);
    lower.extend(report.violations);
    Ok(ValidityReport::from_violations(lower))
}

/// Recovers `N` from `R` by inclusion-exclusion and checks that it is the
/// matrix of a partial matching whose rank matrix is `R`. This is a second
/// membership test, independent of [`validate`].
pub fn reconstruct(r: &UpperMatrix) -> Option<Involution> {
    let n = r.size();
    let at = |i: usize, j: usize| r.at(i, j) as i64;
    let mut cycles = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            match at(i, j) - at(i + 1, j) - at(i, j - 1) + at(i + 1, j - 1) {
                0 => {}
                1 => cycles.push((i, j)),
                _ => return None,
            }
        }
    }
    let sigma = Involution::new(n, cycles).ok()?;
    (rank_matrix(&sigma) == *r).then_some(sigma)
}

/// The unique involution with rank matrix `r`.
pub fn sigma_of_rank_matrix(r: &UpperMatrix) -> Result<Involution> {
    if !validate(r).valid {
        return Err(Error::InvalidRankMatrix);
    }
    reconstruct(r).ok_or_else(|| {
        Error::Internal(format!("matrix passes validation but does not reconstruct:\n{r}"))
    })
}

/// Entrywise `a <= b`.
pub fn leq(a: &UpperMatrix, b: &UpperMatrix) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    Ok(leq_same_size(a, b))
}

#[inline]
pub(crate) fn leq_same_size(a: &UpperMatrix, b: &UpperMatrix) -> bool {
    a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y)
}

fn check_window(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i > j || j > n {
        return Err(Error::OutOfRange(format!("window ({i},{j}) outside 1..={n}")));
    }
    Ok(())
}

/// The window of rows and columns `i..=j`, as a `(j-i+1)`-sized matrix.
pub fn project(r: &UpperMatrix, i: usize, j: usize) -> Result<UpperMatrix> {
    check_window(r.size(), i, j)?;
    let m = j - i + 1;
    let mut out = UpperMatrix::zeros(m);
    for a in 1..=m {
        for b in a + 1..=m {
            out.set(a, b, r.at(a + i - 1, b + i - 1));
        }
    }
    Ok(out)
}

/// Keeps the cycles of `sigma` lying inside `{i..j}`, inside `S_n`.
pub fn restrict(sigma: &Involution, i: usize, j: usize) -> Result<Involution> {
    check_window(sigma.n(), i, j)?;
    let kept = sigma.cycles().iter().copied().filter(|&(a, b)| i <= a && b <= j).collect();
    Involution::new(sigma.n(), kept)
}

/// Keeps the cycles of `sigma` lying inside `{i..j}`, relabelled to
/// `{1..j-i+1}`.
pub fn project_involution(sigma: &Involution, i: usize, j: usize) -> Result<Involution> {
    let kept = restrict(sigma, i, j)?;
    let shifted = kept.cycles().iter().map(|&(a, b)| (a + 1 - i, b + 1 - i)).collect();
    Involution::new(j - i + 1, shifted)
}

/// The tableau read off the first row of a rank matrix: `m` lies in the
/// second column iff `R_{1,m} = R_{1,m-1} + 1`.
pub fn st1_tableau(r: &UpperMatrix) -> Result<TwoColumnTableau> {
    if !validate(r).valid {
        return Err(Error::InvalidRankMatrix);
    }
    let col2 = (1..=r.size()).filter(|&m| r.at(1, m) == r.at(1, m - 1) + 1).collect();
    TwoColumnTableau::from_second_column(r.size(), col2)
        .map_err(|e| Error::Internal(format!("first row of a valid rank matrix: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::{enumerate_involutions, sigma_o};
    use crate::tableaux::enumerate_two_column;
    use crate::sigma_of_tableau;

    fn inv(text: &str, n: usize) -> Involution {
        Involution::parse(text, Some(n)).unwrap()
    }

    fn m(text: &str) -> UpperMatrix {
        UpperMatrix::parse(text).unwrap()
    }

    #[test]
    fn n_matrix_examples() {
        let n = n_matrix(&sigma_o(5, 2).unwrap());
        let ones: Vec<(usize, usize)> = (1..=5)
            .flat_map(|i| (1..=5).map(move |j| (i, j)))
            .filter(|&(i, j)| n.at(i, j) == 1)
            .collect();
        assert_eq!(ones, [(1, 4), (2, 5)]);
        assert_eq!(n_matrix(&Involution::identity(4)), UpperMatrix::zeros(4));
        let s = inv("(1,8)(2,5)(3,4)(6,7)", 8);
        let n = n_matrix(&s);
        assert_eq!(n.entries().iter().filter(|&&v| v == 1).count(), 4);
        for &(i, j) in s.cycles() {
            assert_eq!(n.at(i, j), 1);
        }
    }

    #[test]
    fn rank_matrix_of_tableau_pair() {
        let t = "1,3,5|2,4".parse().unwrap();
        assert_eq!(
            rank_matrix(&sigma_of_tableau(&t)),
            m("0,1,1,2,2;0,0,0,1,1;0,0,0,1,1;0,0,0,0,0;0,0,0,0,0")
        );
        let t = "1,2,4|3,5".parse().unwrap();
        assert_eq!(
            rank_matrix(&sigma_of_tableau(&t)),
            m("0,0,1,1,2;0,0,1,1,2;0,0,0,0,1;0,0,0,0,1;0,0,0,0,0")
        );
        assert_eq!(rank_matrix(&Involution::identity(6)), UpperMatrix::zeros(6));
    }

    #[test]
    fn minimal_involution_rank_matrix() {
        for n in 1..=9 {
            for k in 0..=n / 2 {
                let r = rank_matrix(&sigma_o(n, k).unwrap());
                for i in 1..=n {
                    for j in i + 1..=n {
                        let expected = (j as i64 - i as i64 + 1 - (n - k) as i64).max(0);
                        assert_eq!(r.at(i, j) as i64, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn validate_examples() {
        let bad = validate(&m("0,1,2;0,0,1;0,0,0"));
        assert!(!bad.valid);
        let meet = m("0,0,1,1,2;0,0,0,1,1;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0");
        let report = validate(&meet);
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.condition == Condition::PivotExclusion && v.position == (1, 3)));
        let six = m("0,0,1,1,1,2;0,0,0,0,1,1;0,0,0,0,0,1;0,0,0,0,0,1;0,0,0,0,0,0;0,0,0,0,0,0");
        let report = validate(&six);
        assert!(report
            .violations
            .iter()
            .any(|v| v.condition == Condition::PivotRow && v.position == (1, 3)));
    }

    #[test]
    fn validate_step_conditions() {
        let r = validate(&m("0,2;0,0"));
        assert!(r.violations.iter().any(|v| v.condition == Condition::RowStep));
        assert!(r.violations.iter().any(|v| v.condition == Condition::ColStep));
        let rows = vec![vec![0, 1], vec![1, 0]];
        let r = validate_rows(&rows).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations[0].condition, Condition::Lower);
        assert!(validate_rows(&[vec![0, 1]]).is_err());
    }

    #[test]
    fn forward_direction_and_injectivity() {
        for n in 1..=8 {
            let all = enumerate_involutions(n, None).unwrap();
            let mut mats: Vec<UpperMatrix> = all.iter().map(rank_matrix).collect();
            for (s, r) in all.iter().zip(&mats) {
                if n <= 7 {
                    assert!(validate(r).valid, "{s}: {:?}", validate(r));
                    assert_eq!(&sigma_of_rank_matrix(r).unwrap(), s);
                }
                assert_eq!(r.corner() as usize, s.rank());
            }
            mats.sort();
            mats.dedup();
            assert_eq!(mats.len(), all.len());
        }
    }

    #[test]
    fn sigma_of_rank_matrix_examples() {
        let r = m("0,0,0,1,2,3;0,0,0,1,1,2;0,0,0,1,1,1;0,0,0,0,0,0;0,0,0,0,0,0;0,0,0,0,0,0");
        assert_eq!(sigma_of_rank_matrix(&r).unwrap(), inv("(1,5)(2,6)(3,4)", 6));
        assert_eq!(sigma_of_rank_matrix(&UpperMatrix::zeros(4)).unwrap(), Involution::identity(4));
        assert_eq!(sigma_of_rank_matrix(&m("0,1,2;0,0,1;0,0,0")), Err(Error::InvalidRankMatrix));
    }

    #[test]
    fn order_examples() {
        let low = rank_matrix(&sigma_o(5, 2).unwrap());
        for s in enumerate_involutions(5, Some(2)).unwrap() {
            assert!(leq(&low, &rank_matrix(&s)).unwrap());
        }
        assert!(leq(&low, &low).unwrap());
        let meet = m("0,0,1,1,2;0,0,0,1,1;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0");
        assert!(leq(&rank_matrix(&inv("(1,3)(2,5)", 5)), &meet).unwrap());
        assert_eq!(leq(&low, &UpperMatrix::zeros(4)), Err(Error::SizeMismatch(5, 4)));
    }

    #[test]
    fn projection_examples() {
        let s = inv("(1,5)(2,6)(3,4)", 6);
        assert_eq!(restrict(&s, 2, 6).unwrap(), inv("(2,6)(3,4)", 6));
        assert_eq!(project_involution(&s, 2, 6).unwrap(), inv("(1,5)(2,3)", 5));
        assert_eq!(project_involution(&s, 1, 6).unwrap(), s);
        let r = rank_matrix(&s);
        assert_eq!(project(&r, 1, 6).unwrap(), r);
        assert!(project(&r, 3, 2).is_err());
        assert!(project(&r, 0, 2).is_err());
        assert!(project(&r, 2, 7).is_err());
        for n in 1..=6 {
            for s in enumerate_involutions(n, None).unwrap() {
                let r = rank_matrix(&s);
                for i in 1..=n {
                    for j in i..=n {
                        assert_eq!(
                            project(&r, i, j).unwrap(),
                            rank_matrix(&project_involution(&s, i, j).unwrap())
                        );
                        assert_eq!(
                            project(&n_matrix(&s), i, j).unwrap(),
                            n_matrix(&project_involution(&s, i, j).unwrap())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn st1_examples() {
        for n in 1..=8 {
            for k in 0..=n / 2 {
                for t in enumerate_two_column(n, k).unwrap() {
                    assert_eq!(st1_tableau(&rank_matrix(&sigma_of_tableau(&t))).unwrap(), t);
                }
            }
        }
        assert_eq!(st1_tableau(&UpperMatrix::zeros(3)).unwrap().col1(), &[1, 2, 3]);
        let t = st1_tableau(&rank_matrix(&inv("(1,3)(2,5)", 5))).unwrap();
        assert_eq!(t.col2(), &[3, 5]);
        assert!(st1_tableau(&m("0,1,2;0,0,1;0,0,0")).is_err());
    }

    #[test]
    fn text_and_json() {
        let r = rank_matrix(&inv("(1,3)(2,5)", 5));
        assert_eq!(UpperMatrix::parse(&r.rows().iter().map(|row| row.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect::<Vec<_>>().join(";")).unwrap(), r);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "[[0,0,1,1,2],[0,0,0,0,1],[0,0,0,0,0],[0,0,0,0,0],[0,0,0,0,0]]");
        assert_eq!(serde_json::from_str::<UpperMatrix>(&json).unwrap(), r);
        assert!(serde_json::from_str::<UpperMatrix>("[[1,0],[0,0]]").is_err());
        assert_eq!(r.to_string().lines().next().unwrap(), "0 0 1 1 2");
        assert!(UpperMatrix::parse("0,1;0").is_err());
        assert!(UpperMatrix::parse("0,a;0,0").is_err());
    }
}
