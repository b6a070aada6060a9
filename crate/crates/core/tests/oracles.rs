//! Implementation-independent oracles checked against the library.

use hookpaths::closedforms::{binomial, catalan};
use hookpaths::lgv::{enumerate_disjoint_systems, se_unit_selections, signed_count, Selection};
use hookpaths::patharray::{count_paths, enumerate_paths, DEFAULT_PATH_LIMIT};
use hookpaths::{enumerate_partitions, path_count_array, BoxCoord, ExactMatrix, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Counts paths by trying every arrangement of north/east steps as a bitmask.
fn brute_force_paths(shape: &Partition, from: BoxCoord, to: BoxCoord) -> u64 {
    if to.row > from.row || to.col < from.col {
        return 0;
    }
    let north = from.row - to.row;
    let east = to.col - from.col;
    let steps = north + east;
    let mut count = 0;
    for mask in 0u32..(1 << steps) {
        if mask.count_ones() as usize != north {
            continue;
        }
        let (mut r, mut c) = (from.row, from.col);
        let mut inside = true;
        for k in 0..steps {
            if mask >> k & 1 == 1 {
                r -= 1;
            } else {
                c += 1;
            }
            if !shape.contains(BoxCoord::new(r, c)) {
                inside = false;
                break;
            }
        }
        if inside {
            count += 1;
        }
    }
    count
}

/// Leibniz formula over all permutations.
fn leibniz(m: &ExactMatrix) -> BigInt {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.order();
    let mut total = BigInt::from(0);
    for p in perms(n) {
        let mut inv = 0;
        for a in 0..n {
            for b in a + 1..n {
                if p[a] > p[b] {
                    inv += 1;
                }
            }
        }
        let mut term = BigInt::from(if inv % 2 == 0 { 1 } else { -1 });
        for (r, &c) in p.iter().enumerate() {
            term *= m.get(r, c);
        }
        total += term;
    }
    total
}

/// p(0..=n) by the coin-counting recurrence.
fn partition_numbers(n: usize) -> Vec<usize> {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways
}

#[test]
fn dp_and_dfs_agree_with_bitmask_oracle() {
    for shape in enumerate_partitions(10) {
        let boxes: Vec<_> = shape.boxes().collect();
        let d = path_count_array(&shape);
        for &from in &boxes {
            for &to in &boxes {
                let expected = brute_force_paths(&shape, from, to);
                assert_eq!(count_paths(&shape, from, to).unwrap(), expected.into());
                let listed = enumerate_paths(&shape, from, to, DEFAULT_PATH_LIMIT).unwrap();
                assert_eq!(listed.len() as u64, expected);
            }
        }
        for b in &boxes {
            let foot = shape.foot(b.col).unwrap();
            let end = shape.row_end(b.row).unwrap();
            assert_eq!(
                d.at(b.row, b.col),
                &brute_force_paths(&shape, foot, end).into()
            );
        }
    }
}

#[test]
fn enumerated_paths_are_distinct_and_valid() {
    let shape = Partition::new(vec![4, 4, 3, 1]).unwrap();
    let paths = enumerate_paths(
        &shape,
        BoxCoord::new(4, 1),
        BoxCoord::new(1, 4),
        DEFAULT_PATH_LIMIT,
    )
    .unwrap();
    let unique: std::collections::HashSet<_> = paths.iter().collect();
    assert_eq!(unique.len(), paths.len());
    for p in &paths {
        assert!(hookpaths::LatticePath::new(&shape, p.boxes().to_vec()).is_ok());
    }
}

#[test]
fn bareiss_matches_leibniz_on_path_matrices() {
    for shape in enumerate_partitions(12) {
        let d = path_count_array(&shape);
        for sel in hookpaths::lgv::contiguous_selections(&shape, 4) {
            let m = d.submatrix(&sel);
            assert_eq!(m.determinant(), leibniz(&m), "{shape} {sel:?}");
        }
    }
}

#[test]
fn partition_counts_match_recurrence() {
    let p = partition_numbers(14);
    for n in 0..=14 {
        let expected: usize = p[..=n].iter().sum();
        let all: Vec<_> = enumerate_partitions(n).collect();
        assert_eq!(all.len(), expected);
        let unique: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(unique.len(), expected);
    }
}

#[test]
fn catalan_oracle() {
    // C_{m+1} = Σ C_k C_{m-k}
    let mut table = vec![BigInt::from(1)];
    for m in 0..30 {
        let next: BigInt = (0..=m).map(|k| &table[k] * &table[m - k]).sum();
        table.push(next);
    }
    for (m, expected) in table.iter().enumerate() {
        assert_eq!(&catalan(m), expected);
        let diff = binomial(2 * m as i64, m as i64).unwrap()
            - binomial(2 * m as i64, m as i64 + 1).unwrap();
        assert_eq!(&diff, expected);
    }
}

#[test]
fn binomial_matches_pascal_triangle() {
    let mut row = vec![BigInt::from(1)];
    for a in 0..40i64 {
        for (b, v) in row.iter().enumerate() {
            assert_eq!(&binomial(a, b as i64).unwrap(), v);
        }
        assert_eq!(binomial(a, a + 1).unwrap(), BigInt::from(0));
        let mut next = vec![BigInt::from(1)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
}

#[test]
fn noncontiguous_counterexample_still_obeys_lgv() {
    let shape = Partition::new(vec![5, 4, 3, 3]).unwrap();
    let sel = Selection::new(&shape, vec![1, 3], vec![1, 3]).unwrap();
    let d = path_count_array(&shape);
    assert_eq!(leibniz(&d.submatrix(&sel)), BigInt::from(10));
    let systems = enumerate_disjoint_systems(&shape, &[1, 3], &[1, 3], 1_000_000).unwrap();
    assert_eq!(signed_count(&systems), BigInt::from(10));
    assert!(!se_unit_selections(&shape).contains(&sel));
}

fn partition_strategy(max_cells: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=max_cells, 0..=max_cells).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_cells
        });
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition_strategy(14)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.conjugate().durfee(), p.durfee());
    }

    #[test]
    fn truncations_compose(p in partition_strategy(14), a in 0usize..5, b in 0usize..5) {
        let a = a.min(p.num_rows());
        let direct = p.truncate(a, b).unwrap();
        let staged = p.truncate(a, 0).unwrap().truncate(0, b).unwrap();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn text_form_round_trips(p in partition_strategy(20)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn conjugate_array_is_transpose(p in partition_strategy(14)) {
        prop_assert_eq!(path_count_array(&p.conjugate()), path_count_array(&p).transpose());
    }

    #[test]
    fn entries_are_positive_and_monotone(p in partition_strategy(12)) {
        let d = path_count_array(&p);
        prop_assert!(p.boxes().all(|b| d.at(b.row, b.col) >= &BigInt::from(1)));
        prop_assert!(d.is_monotone());
    }
}
