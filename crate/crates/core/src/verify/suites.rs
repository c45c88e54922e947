use std::collections::BTreeSet;

use super::{oracle::centralizer_dim_oracle, Ctx, Suite};
use crate::intersections::{downset, intersect, intersect_tableaux, pairwise_table};
use crate::involutions::{
    enumerate_involutions, involution_count, orbit_dim, sigma_o, sigma_of_tableau, tableau_of_sigma,
    Involution,
};
use crate::rankmatrix::{
    leq, project, project_involution, rank_matrix, reconstruct, sigma_of_rank_matrix, st1_tableau,
    validate, UpperMatrix,
};
use crate::rscells::{cell, cell_graph, edge_vs_codim, rs, rs_inverse, Permutation};
use crate::tableaux::{enumerate_standard, enumerate_two_column, hook_count, partitions, Shape, StandardTableau};

pub(crate) const SUITES: &[Suite] = &[
    Suite { name: "tableau-counts", cap: 12, min_n: 1, run: tableau_counts },
    Suite { name: "sigma-roundtrip", cap: 10, min_n: 1, run: sigma_roundtrip },
    Suite { name: "dimension-oracle", cap: 6, min_n: 1, run: dimension_oracle },
    Suite { name: "rank-matrix-forward", cap: 7, min_n: 1, run: rank_matrix_forward },
    Suite { name: "dual-membership", cap: 7, min_n: 1, run: dual_membership },
    Suite { name: "order-axioms", cap: 7, min_n: 1, run: order_axioms },
    Suite { name: "dimension-monotonicity", cap: 7, min_n: 1, run: dimension_monotonicity },
    Suite { name: "additivity", cap: 6, min_n: 1, run: additivity },
    Suite { name: "projection", cap: 6, min_n: 1, run: projection },
    Suite { name: "difference-propagation", cap: 7, min_n: 1, run: difference_propagation },
    Suite { name: "st1-recovery", cap: 8, min_n: 1, run: st1_recovery },
    Suite { name: "meet-criterion", cap: 7, min_n: 1, run: meet_criterion },
    Suite { name: "antichain-maximality", cap: 7, min_n: 1, run: antichain_maximality },
    Suite { name: "minimal-involution", cap: 8, min_n: 1, run: minimal_involution },
    Suite { name: "small-n-irreducible", cap: 5, min_n: 1, run: small_n_irreducible },
    Suite { name: "codim1-irreducible", cap: 7, min_n: 1, run: codim1_irreducible },
    Suite { name: "rs-roundtrip", cap: 6, min_n: 1, run: rs_roundtrip },
    Suite { name: "cell-partition", cap: 5, min_n: 1, run: cell_partition },
    Suite { name: "cell-edge-soundness", cap: 6, min_n: 2, run: cell_edge_soundness },
    Suite { name: "cell-calibration", cap: 4, min_n: 4, run: cell_calibration },
    Suite { name: "reducible-n5", cap: 5, min_n: 5, run: reducible_n5 },
    Suite { name: "non-equidimensional-n6", cap: 6, min_n: 6, run: non_equidimensional_n6 },
    Suite { name: "shape-222", cap: 6, min_n: 6, run: shape_222 },
];

fn binom(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn involutions(n: usize) -> Vec<Involution> {
    enumerate_involutions(n, None).expect("n >= 1")
}

fn inv(text: &str, n: usize) -> Involution {
    Involution::parse(text, Some(n)).expect("literal involution")
}

fn tableau_counts(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for k in 0..=n / 2 {
            let all = enumerate_two_column(n, k).expect("valid parameters");
            let expected = binom(n, k) - if k == 0 { 0 } else { binom(n, k - 1) };
            let hook = hook_count(&Shape::two_column(n, k).expect("valid parameters"));
            let distinct: BTreeSet<_> = all.iter().collect();
            ctx.check(
                all.len() as u128 == expected && hook == expected && distinct.len() == all.len(),
                || format!("n={n} k={k}: {} tableaux, hook {hook}, expected {expected}", all.len()),
            );
        }
        for shape in partitions(n) {
            ctx.check(shape.dual().dual() == shape, || format!("dual of dual of {shape}"));
        }
    }
}

fn sigma_roundtrip(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for k in 0..=n / 2 {
            let images: BTreeSet<Involution> = enumerate_two_column(n, k)
                .expect("valid parameters")
                .iter()
                .map(|t| {
                    let s = sigma_of_tableau(t);
                    ctx.check(tableau_of_sigma(&s).as_ref() == Ok(t), || format!("roundtrip {t}"));
                    s
                })
                .collect();
            ctx.check(images.len() as u128 == hook_count(&Shape::two_column(n, k).unwrap()), || {
                format!("sigma_T not injective at n={n} k={k}")
            });
            for s in enumerate_involutions(n, Some(k)).expect("valid parameters") {
                let d = orbit_dim(&s);
                let top = d == k * (n - k);
                ctx.check(d <= k * (n - k) && top == images.contains(&s), || {
                    format!("{s} in S_{n}: dim {d}, sigma_T image {}", images.contains(&s))
                });
            }
        }
    }
}

fn dimension_oracle(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for s in involutions(n) {
            let (formula, oracle) = (orbit_dim(&s), centralizer_dim_oracle(&s));
            ctx.check(formula == oracle, || format!("{s} in S_{n}: formula {formula}, oracle {oracle}"));
        }
    }
}

fn rank_matrix_forward(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        let all = involutions(n);
        ctx.check(all.len() as u128 == (0..=n / 2).map(|k| involution_count(n, k)).sum::<u128>(), || {
            format!("involution count at n={n}")
        });
        let mut seen = BTreeSet::new();
        for s in &all {
            let r = rank_matrix(s);
            ctx.check(validate(&r).valid, || format!("R of {s} rejected: {:?}", validate(&r).violations));
            ctx.check(sigma_of_rank_matrix(&r).as_ref() == Ok(s), || format!("reconstruction of {s}"));
            ctx.check(seen.insert(r), || format!("rank matrix of {s} repeated"));
        }
    }
}

fn dual_membership(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        let mats: Vec<UpperMatrix> = involutions(n).iter().map(rank_matrix).collect();
        for (a, ra) in mats.iter().enumerate() {
            for rb in &mats[a..] {
                let m = crate::intersections::meet(ra, rb).expect("same size");
                let direct = validate(&m).valid;
                let rebuilt = reconstruct(&m).is_some();
                ctx.check(direct == rebuilt, || format!("n={n} meet {m:?}: direct {direct}, reconstruction {rebuilt}"));
            }
        }
    }
}

fn order_axioms(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        let all = involutions(n);
        let mats: Vec<UpperMatrix> = all.iter().map(rank_matrix).collect();
        let m = mats.len();
        let le: Vec<Vec<bool>> =
            mats.iter().map(|a| mats.iter().map(|b| leq(a, b).unwrap()).collect()).collect();
        for a in 0..m {
            ctx.check(le[a][a], || format!("reflexivity fails for {}", all[a]));
            for b in 0..m {
                if a != b {
                    ctx.check(!(le[a][b] && le[b][a]), || format!("antisymmetry: {} {}", all[a], all[b]));
                }
                if le[a][b] {
                    let ok = (0..m).all(|c| !le[b][c] || le[a][c]);
                    ctx.check(ok, || format!("transitivity through {} <= {}", all[a], all[b]));
                }
            }
        }
    }
}

fn dimension_monotonicity(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        let all = involutions(n);
        let mats: Vec<UpperMatrix> = all.iter().map(rank_matrix).collect();
        let dims: Vec<usize> = all.iter().map(orbit_dim).collect();
        for a in 0..all.len() {
            for b in 0..all.len() {
                if a != b && leq(&mats[a], &mats[b]).unwrap() {
                    ctx.check(dims[a] < dims[b], || {
                        format!("{} < {} but dims {} >= {}", all[a], all[b], dims[a], dims[b])
                    });
                }
            }
        }
    }
}

fn additivity(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for s in involutions(n) {
            let r = rank_matrix(&s);
            let k = s.rank();
            for mask in 0u32..(1 << k) {
                let (left, right): (Vec<_>, Vec<_>) =
                    s.cycles().iter().enumerate().partition(|(i, _)| mask & (1 << i) != 0);
                let s1 = Involution::new(n, left.into_iter().map(|(_, c)| *c).collect()).unwrap();
                let s2 = Involution::new(n, right.into_iter().map(|(_, c)| *c).collect()).unwrap();
                let (r1, r2) = (rank_matrix(&s1), rank_matrix(&s2));
                let sum: Vec<Vec<u32>> = r1
                    .rows()
                    .iter()
                    .zip(r2.rows())
                    .map(|(x, y)| x.iter().zip(&y).map(|(a, b)| a + b).collect())
                    .collect();
                ctx.check(sum == r.rows() && leq(&r1, &r).unwrap() && leq(&r2, &r).unwrap(), || {
                    format!("{s} = {s1} * {s2}")
                });
            }
        }
    }
}

fn projection(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for s in involutions(n) {
            let r = rank_matrix(&s);
            for i in 1..=n {
                for j in i..=n {
                    let p = project_involution(&s, i, j).unwrap();
                    let pr = project(&r, i, j).unwrap();
                    ctx.check(pr == rank_matrix(&p) && validate(&pr).valid, || {
                        format!("window ({i},{j}) of {s} in S_{n}")
                    });
                }
            }
        }
    }
}

fn difference_propagation(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for s in involutions(n) {
            let r = rank_matrix(&s);
            for i in 1..=n {
                for j in 1..=n {
                    if r.at(i, j) == r.at(i, j - 1) + 1 {
                        let ok = (1..=i).all(|p| r.at(p, j) == r.at(p, j - 1) + 1);
                        ctx.check(ok, || format!("horizontal step at ({i},{j}) of R{s}"));
                    }
                    if r.at(i, j) == r.at(i + 1, j) + 1 {
                        let ok = (j..=n).all(|q| r.at(i, q) == r.at(i + 1, q) + 1);
                        ctx.check(ok, || format!("vertical step at ({i},{j}) of R{s}"));
                    }
                }
            }
        }
    }
}

fn st1_recovery(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for k in 0..=n / 2 {
            for t in enumerate_two_column(n, k).unwrap() {
                let back = st1_tableau(&rank_matrix(&sigma_of_tableau(&t)));
                ctx.check(back.as_ref() == Ok(&t), || format!("st1 of {t} gave {back:?}"));
            }
        }
    }
}

fn check_report(ctx: &mut Ctx, label: &str, report: &crate::IntersectionReport) {
    let single = report.components.len() == 1;
    ctx.check(report.irreducible == single, || {
        format!("{label}: criterion says {}, {} components", report.irreducible, report.components.len())
    });
    if single {
        let unique = rank_matrix(&report.component_sigmas()[0]);
        ctx.check(unique == report.meet, || format!("{label}: unique component differs from meet"));
    }
}

fn meet_criterion(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for k in 0..=n / 2 {
            let tabs = enumerate_two_column(n, k).unwrap();
            for a in &tabs {
                for b in &tabs {
                    let report = intersect_tableaux(a, b).unwrap();
                    check_report(ctx, &format!("{a} / {b}"), &report);
                }
            }
        }
        if n <= 6 {
            let all = involutions(n);
            for a in &all {
                for b in &all {
                    check_report(ctx, &format!("{a} / {b} in S_{n}"), &intersect(a, b).unwrap());
                }
            }
        }
    }
}

fn antichain_maximality(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for k in 0..=n / 2 {
            let tabs = enumerate_two_column(n, k).unwrap();
            for (x, a) in tabs.iter().enumerate() {
                for b in &tabs[x..] {
                    let report = intersect_tableaux(a, b).unwrap();
                    let flipped = intersect_tableaux(b, a).unwrap();
                    ctx.check(report.component_sigmas() == flipped.component_sigmas(), || {
                        format!("{a} / {b}: not symmetric")
                    });
                    let comps: Vec<UpperMatrix> = report.component_sigmas().iter().map(rank_matrix).collect();
                    let antichain = comps.iter().enumerate().all(|(p, cp)| {
                        comps.iter().enumerate().all(|(q, cq)| p == q || !leq(cp, cq).unwrap())
                    });
                    ctx.check(antichain, || format!("{a} / {b}: components comparable"));
                    ctx.check(comps.iter().all(|c| leq(c, &report.meet).unwrap()), || {
                        format!("{a} / {b}: component above the meet")
                    });
                    for s in downset(&report.meet) {
                        let r = rank_matrix(&s);
                        ctx.check(comps.iter().any(|c| leq(&r, c).unwrap()), || {
                            format!("{a} / {b}: {s} lies under no component")
                        });
                    }
                }
            }
        }
    }
}

fn minimal_involution(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        for k in 0..=n / 2 {
            let low = rank_matrix(&sigma_o(n, k).unwrap());
            for s in enumerate_involutions(n, Some(k)).unwrap() {
                ctx.check(leq(&low, &rank_matrix(&s)).unwrap(), || format!("sigma_o({k}) not below {s}"));
            }
            let tabs = enumerate_two_column(n, k).unwrap();
            for (x, a) in tabs.iter().enumerate() {
                for b in &tabs[x..] {
                    let report = intersect_tableaux(a, b).unwrap();
                    let ok = !report.components.is_empty()
                        && report.component_sigmas().iter().all(|c| leq(&low, &rank_matrix(c)).unwrap());
                    ctx.check(ok, || format!("{a} / {b}: empty or not above sigma_o({k})"));
                }
            }
        }
    }
}

fn small_n_irreducible(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max.min(4) {
        for k in 0..=n / 2 {
            let same = enumerate_involutions(n, Some(k)).unwrap();
            for a in &same {
                for b in &same {
                    let r = intersect(a, b).unwrap();
                    ctx.check(r.irreducible && r.components.len() == 1, || format!("{a} / {b} in S_{n} reducible"));
                }
            }
        }
    }
    // Closures of orbits of different ranks can already meet reducibly at
    // n = 4; pin down exactly which pairs do.
    if n_max >= 4 {
        let all = involutions(4);
        let mut mixed = Vec::new();
        for (x, a) in all.iter().enumerate() {
            for b in &all[x + 1..] {
                if !intersect(a, b).unwrap().irreducible {
                    mixed.push(format!("{a} / {b}"));
                }
            }
        }
        ctx.check(mixed == ["(2,3) / (1,2)(3,4)", "(2,3) / (1,3)(2,4)"], || format!("reducible pairs at n=4: {mixed:?}"));
    }
    if n_max >= 5 {
        let reducible = (0..=2)
            .map(|k| {
                let same = enumerate_involutions(5, Some(k)).unwrap();
                same.iter()
                    .flat_map(|a| same.iter().map(move |b| (a, b)))
                    .filter(|(a, b)| !intersect(a, b).unwrap().irreducible)
                    .count()
            })
            .sum::<usize>();
        ctx.check(reducible > 0, || "no reducible same-rank intersection at n=5".into());
        let tabs = enumerate_two_column(5, 2).unwrap();
        let mut pairs = Vec::new();
        for (x, a) in tabs.iter().enumerate() {
            for b in &tabs[x + 1..] {
                if !intersect_tableaux(a, b).unwrap().irreducible {
                    pairs.push(format!("{a} / {b}"));
                }
            }
        }
        ctx.check(pairs == ["1,3,5|2,4 / 1,2,4|3,5"], || format!("reducible orbital pairs at n=5: {pairs:?}"));
    }
}

fn codim1_irreducible(ctx: &mut Ctx, n_max: usize) {
    for n in 2..=n_max {
        for k in 1..=n / 2 {
            let table = pairwise_table(n, k).unwrap();
            for (a, b) in table.codim1_pairs() {
                ctx.check(table.cells[a][b].irreducible, || {
                    format!("{} / {}: codim 1 but reducible", table.tableaux[a], table.tableaux[b])
                });
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Permutation> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for m in 1..=n {
        out = out
            .into_iter()
            .flat_map(|p| {
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

fn rs_roundtrip(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        let mut pairs = BTreeSet::new();
        for w in permutations(n) {
            let (p, q) = rs(&w);
            ctx.check(p.shape() == q.shape() && rs_inverse(&p, &q).as_ref() == Ok(&w), || format!("rs roundtrip {w}"));
            pairs.insert((p, q));
        }
        let expected: u128 = partitions(n).iter().map(|s| hook_count(s).pow(2)).sum();
        ctx.check(pairs.len() as u128 == expected, || format!("rs not injective at n={n}"));
    }
}

fn cell_partition(ctx: &mut Ctx, n_max: usize) {
    for n in 1..=n_max {
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for shape in partitions(n) {
            for t in enumerate_standard(&shape) {
                let c = cell(&t);
                ctx.check(c.len() as u128 == hook_count(&shape), || format!("cell size of {t}"));
                for w in c {
                    total += 1;
                    ctx.check(rs(&w).0 == t, || format!("{w} listed in the cell of {t}"));
                    seen.insert(w);
                }
            }
        }
        ctx.check(seen.len() == total && total == permutations(n).len(), || format!("cells do not partition S_{n}"));
    }
}

fn cell_edge_soundness(ctx: &mut Ctx, n_max: usize) {
    for n in 2..=n_max {
        for k in 1..=n / 2 {
            let report = edge_vs_codim(n, k).unwrap();
            for row in &report.rows {
                ctx.check(!row.unsound, || format!("{} -- {} joined but codim {}", row.left, row.right, row.codim));
            }
        }
    }
}

fn cell_calibration(ctx: &mut Ctx, _n: usize) {
    let t: StandardTableau = "1,2,4|3".parse().unwrap();
    let got: BTreeSet<String> = cell(&t).iter().map(|w| w.to_string()).collect();
    let want: BTreeSet<String> = ["[4,2,3,1]", "[2,4,3,1]", "[4,2,1,3]"].iter().map(|s| s.to_string()).collect();
    ctx.check(got == want, || format!("cell of {t} is {got:?}"));
    let sigma = sigma_of_tableau(&"1,2,4|3".parse().unwrap());
    let top: Vec<String> = crate::closure_set(&sigma)
        .iter()
        .filter(|s| s.rank() == sigma.rank())
        .map(|s| s.to_string())
        .collect();
    ctx.check(top == ["(1,3)", "(1,4)", "(2,3)", "(2,4)"], || format!("rank-1 part of closure of {sigma}: {top:?}"));
}

fn component_list(report: &crate::IntersectionReport) -> Vec<(String, usize, usize)> {
    report
        .component_sigmas()
        .iter()
        .zip(&report.components)
        .map(|(s, c)| (s.to_string(), c.dim, c.codim))
        .collect()
}

fn reducible_n5(ctx: &mut Ctx, _n: usize) {
    let (t, t2) = ("1,3,5|2,4".parse().unwrap(), "1,2,4|3,5".parse().unwrap());
    let expect = |s: &str| UpperMatrix::parse(s).unwrap();
    ctx.check(rank_matrix(&sigma_of_tableau(&t)) == expect("0,1,1,2,2;0,0,0,1,1;0,0,0,1,1;0,0,0,0,0;0,0,0,0,0"), || "R_T".into());
    ctx.check(rank_matrix(&sigma_of_tableau(&t2)) == expect("0,0,1,1,2;0,0,1,1,2;0,0,0,0,1;0,0,0,0,1;0,0,0,0,0"), || "R_T'".into());
    let report = intersect_tableaux(&t, &t2).unwrap();
    ctx.check(report.meet == expect("0,0,1,1,2;0,0,0,1,1;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0"), || "meet".into());
    ctx.check(!report.irreducible, || "meet accepted".into());
    let want: Vec<(String, usize, usize)> =
        ["(1,3)(2,5)", "(1,4)(3,5)", "(1,5)(2,4)"].iter().map(|s| (s.to_string(), 4, 2)).collect();
    ctx.check(component_list(&report) == want, || format!("components {:?}", component_list(&report)));
}

fn non_equidimensional_n6(ctx: &mut Ctx, _n: usize) {
    let (t, t2) = ("1,2,4,5|3,6".parse().unwrap(), "1,3,4,6|2,5".parse().unwrap());
    let report = intersect_tableaux(&t, &t2).unwrap();
    let want = vec![("(1,3)(4,6)".to_string(), 6, 2), ("(1,6)(2,5)".to_string(), 4, 4)];
    ctx.check(!report.irreducible && component_list(&report) == want, || {
        format!("components {:?}", component_list(&report))
    });
}

fn shape_222(ctx: &mut Ctx, _n: usize) {
    let names = ["1,2,3|4,5,6", "1,2,4|3,5,6", "1,3,4|2,5,6", "1,2,5|3,4,6", "1,3,5|2,4,6"];
    let norm = |(a, b, l): (String, String, usize)| if a <= b { (a, b, l) } else { (b, a, l) };
    let mut want: Vec<(String, String, usize)> = [(0, 1, 3), (1, 3, 4), (1, 2, 2), (3, 4, 2), (2, 4, 4)]
        .iter()
        .map(|&(a, b, l)| norm((names[a].to_string(), names[b].to_string(), l)))
        .collect();
    want.sort();
    for base in names {
        let mut got: Vec<_> = cell_graph(&base.parse().unwrap()).labelled_edges().into_iter().map(norm).collect();
        got.sort();
        ctx.check(got == want, || format!("cell graph of {base}: {got:?}"));
    }
    let table = pairwise_table(6, 3).unwrap();
    let index = |i: usize| table.tableaux.iter().position(|t| t.to_string() == names[i]).unwrap();
    let pairs_with = |codim: usize| -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                if table.cells[index(a)][index(b)].codim == codim {
                    v.push((a + 1, b + 1));
                }
            }
        }
        v
    };
    ctx.check(pairs_with(1) == [(1, 2), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)], || format!("codim 1: {:?}", pairs_with(1)));
    ctx.check(pairs_with(2) == [(1, 3), (1, 4), (2, 5), (3, 4)], || format!("codim 2: {:?}", pairs_with(2)));
    let tab = |i: usize| names[i].parse().unwrap();
    let r15 = intersect_tableaux(&tab(0), &tab(4)).unwrap();
    ctx.check(r15.component_sigmas() == [inv("(1,5)(2,6)(3,4)", 6)] && r15.max_dim() == 8, || "T1/T5".into());
    let r25 = intersect_tableaux(&tab(1), &tab(4)).unwrap();
    let want: BTreeSet<Involution> =
        ["(1,3)(2,5)(4,6)", "(1,5)(2,4)(3,6)", "(1,4)(2,6)(3,5)"].iter().map(|s| inv(s, 6)).collect();
    let got: BTreeSet<Involution> = r25.component_sigmas().into_iter().collect();
    ctx.check(got == want, || format!("T2/T5 components {got:?}"));
    for (a, b) in [(0, 3), (0, 2), (1, 4), (2, 3)] {
        let r = intersect_tableaux(&tab(a), &tab(b)).unwrap();
        ctx.check(r.max_dim() == 7, || format!("T{}/T{} max dim {}", a + 1, b + 1, r.max_dim()));
    }
}
