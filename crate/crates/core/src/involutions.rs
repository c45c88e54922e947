//! Involutions of `{1..n}` and their orbit statistics.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{check_two_column_params, TwoColumnTableau};

/// An involution of `{1..n}`, written as its 2-cycles `(i_s, j_s)` with
/// `i_s < j_s` and `i_1 < i_2 < ... < i_k`. Fixed points are implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawInvolution", into = "RawInvolution")]
pub struct Involution {
    n: usize,
    cycles: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawInvolution {
    n: usize,
    cycles: Vec<(usize, usize)>,
}

impl TryFrom<RawInvolution> for Involution {
    type Error = Error;
    fn try_from(raw: RawInvolution) -> Result<Self> {
        Involution::new(raw.n, raw.cycles)
    }
}

impl From<Involution> for RawInvolution {
    fn from(s: Involution) -> Self {
        RawInvolution { n: s.n, cycles: s.cycles }
    }
}

impl Involution {
    /// Builds an involution from disjoint transpositions given in any order;
    /// the result is stored in canonical order.
    pub fn new(n: usize, cycles: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; n + 1];
        let mut canon = Vec::with_capacity(cycles.len());
        for (a, b) in cycles {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == j {
                return Err(Error::Involution(format!("({a},{b}) is not a transposition")));
            }
            if i == 0 || j > n {
                return Err(Error::Involution(format!("({a},{b}) leaves 1..={n}")));
            }
            for v in [i, j] {
                if used[v] {
                    return Err(Error::Involution(format!("{v} appears in two cycles")));
                }
                used[v] = true;
            }
            canon.push((i, j));
        }
        canon.sort_unstable();
        Ok(Self { n, cycles: canon })
    }

    pub fn identity(n: usize) -> Self {
        Self { n, cycles: Vec::new() }
    }

    /// Parses `"(i1,j1)(i2,j2)..."`, or `"()"` for the identity. When `n`
    /// is `None` the largest entry is used.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let n = n.unwrap_or_else(|| cycles.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0));
        Self::new(n, cycles)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `L(sigma)`, the number of 2-cycles.
    pub fn rank(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycles(&self) -> &[(usize, usize)] {
        &self.cycles
    }

    /// The image of `v` (1-based); fixed points map to themselves.
    pub fn apply(&self, v: usize) -> usize {
        for &(i, j) in &self.cycles {
            if i == v {
                return j;
            }
            if j == v {
                return i;
            }
        }
        v
    }

    /// One-line notation `sigma(1), ..., sigma(n)`.
    pub fn one_line(&self) -> Vec<usize> {
        let mut w: Vec<usize> = (1..=self.n).collect();
        for &(i, j) in &self.cycles {
            w[i - 1] = j;
            w[j - 1] = i;
        }
        w
    }

    /// The same cycles viewed inside a larger ambient size.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::Domain(format!("cannot embed S_{} into S_{n}", self.n)));
        }
        Ok(Self { n, cycles: self.cycles.clone() })
    }
}

/// `"(1,8)(2,5)(3,4)(6,7)"`; the identity prints as `"()"`.
impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for (i, j) in &self.cycles {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

fn parse_cycles(text: &str) -> Result<Vec<(usize, usize)>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "()" {
        return Ok(Vec::new());
    }
    let inner = compact
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("cycle text {text:?} must look like (i,j)(k,l)")))?;
    inner
        .split(")(")
        .map(|pair| {
            let mut it = pair.split(',');
            let mut next = || -> Result<usize> {
                it.next()
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad cycle {pair:?}")))
            };
            let (a, b) = (next()?, next()?);
            if it.next().is_some() {
                return Err(Error::Parse(format!("cycle {pair:?} is not a transposition")));
            }
            Ok((a, b))
        })
        .collect()
}

/// The involution attached to a two-column tableau: `j_s` runs down the
/// second column and `i_s` is the largest unused first-column entry below
/// `j_s`.
pub fn sigma_of_tableau(t: &TwoColumnTableau) -> Involution {
    let mut available: Vec<usize> = t.col1().to_vec();
    let mut cycles = Vec::with_capacity(t.k());
    for &j in t.col2() {
        let pos = available
            .iter()
            .rposition(|&d| d < j)
            .expect("a standard tableau always has a free first-column entry below j");
        cycles.push((available.remove(pos), j));
    }
    Involution::new(t.n(), cycles).expect("greedy pairing is a valid involution")
}

/// Inverse of [`sigma_of_tableau`]: the second column is the set of `j_s`.
/// Fails for involutions that are not of the form `sigma_T`.
pub fn tableau_of_sigma(sigma: &Involution) -> Result<TwoColumnTableau> {
    let mut col2: Vec<usize> = sigma.cycles.iter().map(|&(_, j)| j).collect();
    col2.sort_unstable();
    let t = TwoColumnTableau::from_second_column(sigma.n, col2)
        .map_err(|e| Error::NotTableauImage(format!("{sigma}: {e}")))?;
    let back = sigma_of_tableau(&t);
    if &back != sigma {
        return Err(Error::NotTableauImage(format!(
            "{sigma} reconstructs to {t}, whose involution is {back}"
        )));
    }
    Ok(t)
}

/// `r_s(sigma) = #{p : i_p < i_s, j_p < j_s} + #{p : j_p < i_s}`, with `s`
/// 1-based.
pub fn r_stat(sigma: &Involution, s: usize) -> Result<usize> {
    if s == 0 || s > sigma.rank() {
        return Err(Error::OutOfRange(format!(
            "cycle index {s} outside 1..={}",
            sigma.rank()
        )));
    }
    Ok(r_stat_unchecked(&sigma.cycles, s - 1))
}

fn r_stat_unchecked(cycles: &[(usize, usize)], s: usize) -> usize {
    let (is, js) = cycles[s];
    let nested = cycles.iter().filter(|&&(ip, jp)| ip < is && jp < js).count();
    let before = cycles.iter().filter(|&&(_, jp)| jp < is).count();
    nested + before
}

/// Dimension of the B-orbit of `N_sigma`:
/// `kn - sum (j_s - i_s) - sum_{s >= 2} r_s(sigma)`.
pub fn orbit_dim(sigma: &Involution) -> usize {
    let k = sigma.rank();
    let spread: usize = sigma.cycles.iter().map(|&(i, j)| j - i).sum();
    let r: usize = (1..k).map(|s| r_stat_unchecked(&sigma.cycles, s)).sum();
    k * sigma.n - spread - r
}

/// The minimal involution of rank `k`: `(1, n-k+1)(2, n-k+2)...(k, n)`.
pub fn sigma_o(n: usize, k: usize) -> Result<Involution> {
    check_two_column_params(n, k)?;
    Involution::new(n, (1..=k).map(|s| (s, n - k + s)).collect())
}

/// Number of involutions of `{1..n}` with exactly `k` 2-cycles.
pub fn involution_count(n: usize, k: usize) -> u128 {
    if 2 * k > n {
        return 0;
    }
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    fact(n) / (fact(k) * (1u128 << k) * fact(n - 2 * k))
}

/// All involutions of `{1..n}`, optionally restricted to `k` 2-cycles.
/// Sorted by rank, then lexicographically by cycle sequence.
pub fn enumerate_involutions(n: usize, k: Option<usize>) -> Result<Vec<Involution>> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if let Some(k) = k {
        check_two_column_params(n, k)?;
    }
    let max_k = k.unwrap_or(n / 2);
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut cycles = Vec::new();
    collect_involutions(n, 1, max_k, &mut used, &mut cycles, &mut out);
    if let Some(k) = k {
        out.retain(|s| s.rank() == k);
    }
    out.sort_unstable_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cycles.cmp(&b.cycles)));
    Ok(out)
}

fn collect_involutions(
    n: usize,
    v: usize,
    budget: usize,
    used: &mut [bool],
    cycles: &mut Vec<(usize, usize)>,
    out: &mut Vec<Involution>,
) {
    if v > n {
        out.push(Involution { n, cycles: cycles.clone() });
        return;
    }
    if used[v] {
        collect_involutions(n, v + 1, budget, used, cycles, out);
        return;
    }
    collect_involutions(n, v + 1, budget, used, cycles, out);
    if budget == 0 {
        return;
    }
    used[v] = true;
    for w in v + 1..=n {
        if !used[w] {
            used[w] = true;
            cycles.push((v, w));
            collect_involutions(n, v + 1, budget - 1, used, cycles, out);
            cycles.pop();
            used[w] = false;
        }
    }
    used[v] = false;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_two_column;

    fn inv(text: &str, n: usize) -> Involution {
        Involution::parse(text, Some(n)).unwrap()
    }

    #[test]
    fn sigma_of_tableau_examples() {
        let t: TwoColumnTableau = "1,2,3,6|4,5,7,8".parse().unwrap();
        assert_eq!(sigma_of_tableau(&t).to_string(), "(1,8)(2,5)(3,4)(6,7)");
        let t: TwoColumnTableau = "1,3,5|2,4".parse().unwrap();
        assert_eq!(sigma_of_tableau(&t), inv("(1,2)(3,4)", 5));
        let t: TwoColumnTableau = "1,2,4|3,5".parse().unwrap();
        assert_eq!(sigma_of_tableau(&t), inv("(2,3)(4,5)", 5));
        let t: TwoColumnTableau = "1|2".parse().unwrap();
        assert_eq!(sigma_of_tableau(&t), inv("(1,2)", 2));
    }

    #[test]
    fn tableau_of_sigma_examples() {
        let t = tableau_of_sigma(&inv("(1,8)(2,5)(3,4)(6,7)", 8)).unwrap();
        assert_eq!(t.to_string(), "1,2,3,6|4,5,7,8");
        let t = tableau_of_sigma(&Involution::identity(3)).unwrap();
        assert_eq!(t.col1(), &[1, 2, 3]);
        assert_eq!(tableau_of_sigma(&inv("(1,2)(3,4)", 4)).unwrap().to_string(), "1,3|2,4");
        assert!(matches!(
            tableau_of_sigma(&inv("(1,3)(2,4)", 4)),
            Err(Error::NotTableauImage(_))
        ));
    }

    #[test]
    fn r_stat_examples() {
        let s = inv("(1,6)(3,4)(5,7)", 7);
        assert_eq!(r_stat(&s, 1), Ok(0));
        assert_eq!(r_stat(&s, 2), Ok(0));
        assert_eq!(r_stat(&s, 3), Ok(3));
        assert_eq!(r_stat(&inv("(1,2)", 2), 1), Ok(0));
        // (1,3) and (2,5) both sit below-left of (4,6), and 3 < 4.
        assert_eq!(r_stat(&inv("(1,3)(2,5)(4,6)", 6), 3), Ok(3));
        assert!(matches!(r_stat(&s, 4), Err(Error::OutOfRange(_))));
        assert!(matches!(r_stat(&s, 0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn orbit_dim_examples() {
        assert_eq!(orbit_dim(&inv("(1,6)(3,4)(5,7)", 7)), 21 - 8 - 3);
        assert_eq!(orbit_dim(&inv("(1,5)(2,6)(3,4)", 6)), 8);
        assert_eq!(orbit_dim(&inv("(1,3)(4,6)", 6)), 6);
        assert_eq!(orbit_dim(&inv("(1,6)(2,5)", 6)), 4);
        assert_eq!(orbit_dim(&Involution::identity(5)), 0);
    }

    #[test]
    fn sigma_o_examples() {
        assert_eq!(sigma_o(5, 2).unwrap(), inv("(1,4)(2,5)", 5));
        assert_eq!(sigma_o(4, 0).unwrap(), Involution::identity(4));
        assert_eq!(sigma_o(6, 3).unwrap(), inv("(1,4)(2,5)(3,6)", 6));
        assert!(sigma_o(5, 3).is_err());
    }

    /// Involutions as the permutations of S_n squaring to the identity.
    fn brute_force_involutions(n: usize) -> Vec<Vec<usize>> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n);
                    out.push(q);
                }
            }
            out
        }
        perms(n).into_iter().filter(|w| (0..n).all(|i| w[w[i] - 1] == i + 1)).collect()
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let exp = [1usize, 2, 4, 10, 26, 76, 232];
        for n in 1..=7 {
            let all = enumerate_involutions(n, None).unwrap();
            assert_eq!(all.len(), exp[n - 1]);
            let mut ours: Vec<Vec<usize>> = all.iter().map(Involution::one_line).collect();
            let mut brute = brute_force_involutions(n);
            ours.sort();
            brute.sort();
            assert_eq!(ours, brute);
            for k in 0..=n / 2 {
                let part = enumerate_involutions(n, Some(k)).unwrap();
                assert_eq!(part.len() as u128, involution_count(n, k));
                assert!(part.iter().all(|s| s.rank() == k));
            }
        }
        let four: Vec<String> =
            enumerate_involutions(4, Some(2)).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(four, ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]);
        assert_eq!(enumerate_involutions(3, Some(0)).unwrap(), vec![Involution::identity(3)]);
    }

    #[test]
    fn roundtrip_and_maximal_dimension() {
        for n in 1..=10 {
            for k in 0..=n / 2 {
                let sigmas: Vec<Involution> =
                    enumerate_two_column(n, k).unwrap().iter().map(sigma_of_tableau).collect();
                let mut sorted = sigmas.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), sigmas.len(), "injectivity n={n} k={k}");
                for (t, s) in enumerate_two_column(n, k).unwrap().iter().zip(&sigmas) {
                    assert_eq!(&tableau_of_sigma(s).unwrap(), t);
                    assert_eq!(orbit_dim(s), k * (n - k));
                }
                for s in enumerate_involutions(n, Some(k)).unwrap() {
                    let d = orbit_dim(&s);
                    assert!(d <= k * (n - k));
                    assert_eq!(d == k * (n - k), sorted.binary_search(&s).is_ok(), "{s}");
                    if k > 0 {
                        assert_eq!(r_stat(&s, 1), Ok(0));
                    }
                }
            }
        }
    }

    #[test]
    fn parsing() {
        let s = Involution::parse("(5,7)(3,4)(6,1)", None).unwrap();
        assert_eq!(s.to_string(), "(1,6)(3,4)(5,7)");
        assert_eq!(s.n(), 7);
        assert_eq!(Involution::parse("()", Some(3)).unwrap(), Involution::identity(3));
        assert!(Involution::parse("(1,2)(2,3)", None).is_err());
        assert!(Involution::parse("(1,2,3)", None).is_err());
        assert!(Involution::parse("(1,9)", Some(5)).is_err());
        assert!(Involution::parse("1,2", None).is_err());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":7,"cycles":[[1,6],[3,4],[5,7]]}"#);
        assert_eq!(serde_json::from_str::<Involution>(&json).unwrap(), s);
    }
}
