//! End-to-end acceptance checks, one test per criterion. Each prints a
//! PASS line on success; a failed assertion fails the build.
//!
//! The agreement checks compare invariants computed independently from
//! the two braid presentations and the grid diagram. Invariant equality
//! is strong evidence that the constructions present the same link; it is
//! not, by itself, a proof of isotopy.

use std::time::{Duration, Instant};

use lorenz_links::braid::{lorenz_word, tlink_word, BraidWord};
use lorenz_links::grid::GridDiagram;
use lorenz_links::invariants::{alexander, InvariantOptions};
use lorenz_links::laurent::LaurentPoly;
use lorenz_links::lorenz::LorenzVector;
use lorenz_links::verify::{battery, enumerate_vectors, verify_instance};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn poly(min_deg: i64, coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(min_deg, coeffs.to_vec())
}

// write straight to the process stdout: the test harness only captures the
// print! macro family, so these lines stay visible in a plain `cargo test`
fn pass(line: String) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

#[test]
fn c1_fixture_cross_checks() {
    let start = Instant::now();
    let v = LorenzVector::new(vec![3, 3, 3, 3, 5, 5, 5]).unwrap();
    let r = verify_instance(&v, &InvariantOptions::default()).unwrap();

    assert_eq!(r.tlink.pairs(), &[(3, 4), (5, 3)]);
    let mut t_expected: Vec<i32> = Vec::new();
    for _ in 0..4 {
        t_expected.extend([1, 2]);
    }
    for _ in 0..3 {
        t_expected.extend([1, 2, 3, 4]);
    }
    assert_eq!(r.braids.t.word(), &t_expected[..]);
    assert_eq!(r.braids.t.len(), 20);
    assert_eq!(r.braids.t.strands(), 5);
    assert_eq!(r.braids.lorenz.len(), 27);
    assert_eq!(r.braids.lorenz.strands(), 12);

    let (lorenz, t) = (&r.invariants[0], &r.invariants[1]);
    assert_eq!(lorenz.components, 1);
    assert_eq!(t.components, 1);
    assert_eq!(r.invariants[2].components, 1);
    assert_eq!(lorenz.euler_characteristic, Some(-15));
    assert_eq!(t.euler_characteristic, Some(-15));
    assert_eq!(lorenz.genus, Some(8));
    assert_eq!(t.genus, Some(8));
    let (la, ta) = (
        lorenz.alexander.as_ref().unwrap(),
        t.alexander.as_ref().unwrap(),
    );
    assert!(la.equal_up_to_units(ta));
    assert!(r.verified, "{:?}", r.mismatch_detail);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {:?}", elapsed);
    pass(format!(
        "PASS fixture 3^4,5^3 cross-checks in {:?}",
        elapsed
    ));
}

#[test]
fn c2_battery_sum_10_verifies() {
    let start = Instant::now();
    let s = battery(10, &InvariantOptions::default()).unwrap();
    assert!(s.total >= 138, "only {} instances", s.total);
    for r in &s.results {
        assert!(
            r.verified,
            "{}: {}",
            r.vector.spec_string(),
            r.mismatch_detail.as_deref().unwrap_or("unknown")
        );
    }
    assert!(s.all_verified());
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {:?}", elapsed);
    pass(format!(
        "PASS battery: {} instances agree across all three representations in {:?}",
        s.total, elapsed
    ));
    pass(
        "note: invariant agreement is strong evidence of link equality, not a proof of isotopy"
            .into(),
    );
}

#[test]
fn c3_grid_crossings_all_positive() {
    let mut checked = 0usize;
    for v in enumerate_vectors(10) {
        let g = GridDiagram::from_shuffle(&v.shuffle());
        for c in g.crossings() {
            assert_eq!(
                c.sign,
                1,
                "negative crossing at ({}, {}) in {}",
                c.col,
                c.row,
                v.spec_string()
            );
            checked += 1;
        }
    }
    pass(format!(
        "PASS positivity: {} grid crossings, zero negative",
        checked
    ));
}

#[test]
fn c4_known_value_oracles() {
    let opts = InvariantOptions::default();

    let trefoil = verify_instance(&LorenzVector::new(vec![2, 2, 2]).unwrap(), &opts).unwrap();
    let delta = poly(0, &[1, -1, 1]);
    let f_trefoil = poly(-16, &[-1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1]);
    for rep in &trefoil.invariants {
        if let Some(a) = &rep.alexander {
            assert!(a.equal_up_to_units(&delta), "{}", rep.source.label());
        }
        assert_eq!(
            rep.kauffman_f.computed().unwrap(),
            &f_trefoil,
            "{}",
            rep.source.label()
        );
    }

    let hopf = verify_instance(&LorenzVector::new(vec![2, 2]).unwrap(), &opts).unwrap();
    let f_hopf = poly(-10, &[-1, 0, 0, 0, 0, 0, 0, 0, -1]);
    for rep in &hopf.invariants {
        assert_eq!(
            rep.kauffman_f.computed().unwrap(),
            &f_hopf,
            "{}",
            rep.source.label()
        );
    }

    for p in 1..=6 {
        let unknot = verify_instance(&LorenzVector::new(vec![p]).unwrap(), &opts).unwrap();
        for rep in &unknot.invariants {
            if let Some(a) = &rep.alexander {
                assert!(a.equal_up_to_units(&LaurentPoly::one()), "<{}>", p);
            }
            assert_eq!(
                rep.kauffman_f.computed().unwrap(),
                &LaurentPoly::one(),
                "<{}> via {}",
                p,
                rep.source.label()
            );
        }
    }
    pass("PASS known values: trefoil, hopf link, and <p> unknots for p <= 6".into());
}

fn random_vector(rng: &mut StdRng) -> LorenzVector {
    let k = rng.random_range(1..=8usize);
    let mut entries: Vec<u32> = (0..k).map(|_| rng.random_range(1..=6u32)).collect();
    entries.sort_unstable();
    LorenzVector::new(entries).unwrap()
}

#[test]
fn c5_structural_identities_random_shuffles() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x10e852);
    for case in 0..500 {
        let v = random_vector(&mut rng);
        let s = v.shuffle();
        assert!(s.n() <= 14, "case {}", case);
        let tlink = v.compress();
        let lw = lorenz_word(&s);
        let tw = tlink_word(&tlink);

        // the braid built from a shuffle realizes exactly that shuffle
        assert_eq!(lw.permutation(), *s.permutation(), "case {}", case);

        // word lengths differ by the number of vector entries
        assert_eq!(lw.len() - tw.len(), v.k(), "case {}", case);

        // both surfaces have euler characteristic p_s + k - sum(q_j p_j)
        let qp: i64 = tlink
            .pairs()
            .iter()
            .map(|&(p, q)| p as i64 * q as i64)
            .sum();
        let expected_chi = tlink.p_max() as i64 + v.k() as i64 - qp;
        assert_eq!(
            lw.positive_euler_characteristic().unwrap(),
            expected_chi,
            "case {}",
            case
        );
        assert_eq!(
            tw.positive_euler_characteristic().unwrap(),
            expected_chi,
            "case {}",
            case
        );

        // representation roundtrips
        assert_eq!(s.vector().entries(), v.entries(), "case {}", case);
        assert_eq!(tlink.decompress().entries(), v.entries(), "case {}", case);

        // closures agree on component count
        assert_eq!(
            lw.closure_components(),
            tw.closure_components(),
            "case {}",
            case
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {:?}", elapsed);
    pass(format!(
        "PASS structural identities on 500 random shuffles in {:?}",
        elapsed
    ));
}

#[test]
fn c6_alexander_division_exact() {
    // exactness is asserted inside alexander(): an inexact division
    // returns an error instead of a polynomial
    for v in enumerate_vectors(10) {
        let s = v.shuffle();
        alexander(&lorenz_word(&s)).unwrap();
        alexander(&tlink_word(&v.compress())).unwrap();
    }
    let mut rng = StdRng::seed_from_u64(0xa1e);
    for _ in 0..200 {
        let n = rng.random_range(2..=8usize);
        let len = rng.random_range(0..=20usize);
        let word: Vec<i32> = (0..len).map(|_| rng.random_range(1..n as i32)).collect();
        let w = BraidWord::new(n, word).unwrap();
        assert!(w.is_positive());
        alexander(&w).unwrap();
    }
    pass("PASS division exactness on the battery plus 200 random positive words".into());
}
