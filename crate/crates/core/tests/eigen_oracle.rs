//! The Jacobi solver and the Gram verdicts against nalgebra.

use isoseq_core::{construct_family, gram, realize, symmetric_eigen, FamilySpec};
use nalgebra::DMatrix;
use proptest::prelude::*;

fn reference(n: usize, a: &[f64]) -> Vec<f64> {
    let m = DMatrix::from_row_slice(n, n, a);
    let mut v: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn jacobi_matches_nalgebra(n in 1usize..10, seed in proptest::collection::vec(-5.0f64..5.0, 100)) {
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                a[i * n + j] = seed[i * 10 + j];
                a[j * n + i] = seed[i * 10 + j];
            }
        }
        let ours = symmetric_eigen(n, &a);
        let theirs = reference(n, &a);
        for (x, y) in ours.values.iter().zip(&theirs) {
            prop_assert!((x - y).abs() < 1e-9, "{:?} vs {:?}", ours.values, theirs);
        }
        for k in 0..n {
            let v = ours.vector(k);
            for i in 0..n {
                let av: f64 = (0..n).map(|j| a[i * n + j] * v[j]).sum();
                prop_assert!((av - ours.values[k] * v[i]).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn family_gram_spectra_match() {
    let specs = [
        FamilySpec::Pentagon,
        FamilySpec::CrossPolytope { m: 4 },
        FamilySpec::Cube { d: 3 },
        FamilySpec::JohnsonJ52,
        FamilySpec::Example1 { n: 8 },
        FamilySpec::Example4 { n: 7 },
    ];
    for spec in specs {
        let r = realize(construct_family(&spec).unwrap(), None).unwrap();
        let g = gram(&r);
        let theirs = reference(g.n, &g.g);
        for (x, y) in g.eigenvalues.iter().zip(&theirs) {
            assert!((x - y).abs() < 1e-10, "{spec:?}");
        }
    }
}
