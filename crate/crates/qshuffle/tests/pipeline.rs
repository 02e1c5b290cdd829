//! Cross-module checks through the public API.

use proptest::prelude::*;

use qshuffle::markov::transition_matrix;
use qshuffle::qpoly::{int, rat, LaurentPoly, Rational};
use qshuffle::spectra::{evaluate_factored, specht_charpoly, spectrum_table, ShuffleOp};
use qshuffle::symmetric::{factorial, Permutation};
use qshuffle::tableaux::{count_syt, Partition};

/// Remove the card at position `i` and reinsert it at position `j` (0-based),
/// as a one-line permutation of positions.
fn move_card(n: usize, i: usize, j: usize) -> Permutation {
    let mut deck: Vec<usize> = (1..=n).collect();
    let c = deck.remove(i);
    deck.insert(j, c);
    Permutation::from_one_line(&deck).unwrap()
}

#[test]
fn classical_limit_is_random_to_random() {
    for n in 1..=4 {
        let p = transition_matrix(n, &int(1)).unwrap();
        let step = rat(1, (n * n) as i64);
        let perms = Permutation::all(n);
        for w in &perms {
            let mut row = vec![Rational::from_integer(0.into()); factorial(n)];
            for i in 0..n {
                for j in 0..n {
                    row[w.compose(&move_card(n, i, j)).rank()] += &step;
                }
            }
            assert_eq!(p.row(w.rank()), &row[..], "n={n} w={w}");
        }
    }
}

#[test]
fn multiplicities_fill_each_specht_module() {
    for n in 1..=8 {
        let mut total = 0;
        for lam in Partition::all(n) {
            let rows: Vec<_> = spectrum_table(n)
                .into_iter()
                .filter(|r| r.lambda == lam)
                .collect();
            let d: usize = rows.iter().map(|r| r.d_mu).sum();
            assert_eq!(d, count_syt(&lam), "{lam}");
            total += rows.iter().map(|r| r.multiplicity).sum::<usize>();
        }
        let f2: usize = Partition::all(n)
            .iter()
            .map(|l| count_syt(l) * count_syt(l))
            .sum();
        assert_eq!(total, f2);
        assert_eq!(total, factorial(n));
    }
}

fn arb_shape() -> impl Strategy<Value = Partition> {
    (1usize..=4).prop_flat_map(|n| {
        let shapes = Partition::all(n);
        (0..shapes.len()).prop_map(move |k| shapes[k].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn specht_charpoly_matches_strips(lam in arb_shape(), a in 1i64..6, b in 1i64..6) {
        let q0 = rat(a, b);
        let factors: Vec<(LaurentPoly, usize)> = spectrum_table(lam.size())
            .into_iter()
            .filter(|r| r.lambda == lam)
            .map(|r| (r.eigenvalue, r.d_mu))
            .collect();
        let expected = evaluate_factored(&factors, &q0).unwrap();
        prop_assert_eq!(specht_charpoly(ShuffleOp::RandomToRandom, &lam, &q0).unwrap(), expected);
    }
}
