//! Randomized law checking across the construction pipeline.

use lorenz_links::braid::{lorenz_word, tlink_word, BraidWord};
use lorenz_links::grid::GridDiagram;
use lorenz_links::invariants::alexander;
use lorenz_links::laurent::LaurentPoly;
use lorenz_links::lorenz::{LorenzVector, Shuffle};
use lorenz_links::parse::{parse_tlink_spec, parse_vector_spec};
use proptest::prelude::*;

fn vector_strategy(max_len: usize, max_entry: u32) -> impl Strategy<Value = LorenzVector> {
    proptest::collection::vec(1..=max_entry, 1..=max_len).prop_map(|mut entries| {
        entries.sort_unstable();
        LorenzVector::new(entries).expect("sorted positive entries are valid")
    })
}

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, proptest::collection::vec(-8i64..=8, 0..6))
        .prop_map(|(min_deg, coeffs)| LaurentPoly::from_coeffs(min_deg, coeffs))
}

proptest! {
    #[test]
    fn vector_shuffle_roundtrip(v in vector_strategy(7, 6)) {
        let s = v.shuffle();
        let from_shuffle = s.vector();
        prop_assert_eq!(from_shuffle.entries(), v.entries());
        // the image list itself reconstructs the same shuffle
        let rebuilt = Shuffle::new(s.images().to_vec(), s.k()).unwrap();
        let from_rebuilt = rebuilt.vector();
        prop_assert_eq!(from_rebuilt.entries(), v.entries());
    }

    #[test]
    fn vector_tlink_roundtrip(v in vector_strategy(7, 6)) {
        let t = v.compress();
        let back = t.decompress();
        prop_assert_eq!(back.entries(), v.entries());
        // runs compress maximally: adjacent parameters have distinct p
        let ps: Vec<u32> = t.pairs().iter().map(|&(p, _)| p).collect();
        prop_assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn spec_strings_round_trip(v in vector_strategy(7, 6)) {
        let parsed = parse_vector_spec(&v.spec_string()).unwrap();
        prop_assert_eq!(parsed.entries(), v.entries());
        let t = v.compress();
        let parsed_t = parse_tlink_spec(&t.spec_string()).unwrap();
        prop_assert_eq!(parsed_t.pairs(), t.pairs());
    }

    #[test]
    fn lorenz_word_realizes_its_shuffle(v in vector_strategy(7, 6)) {
        let s = v.shuffle();
        let w = lorenz_word(&s);
        prop_assert_eq!(w.permutation(), s.permutation().clone());
        prop_assert!(w.is_positive());
    }

    #[test]
    fn lorenz_word_is_a_permutation_braid(v in vector_strategy(7, 6)) {
        // strands pairwise cross at most once
        let s = v.shuffle();
        let w = lorenz_word(&s);
        let n = w.strands();
        let mut pos: Vec<usize> = (0..=n).collect();
        let mut crossings = std::collections::HashMap::new();
        for &l in w.word() {
            let i = l.unsigned_abs() as usize;
            let (a, b) = (pos[i], pos[i + 1]);
            let key = (a.min(b), a.max(b));
            *crossings.entry(key).or_insert(0u32) += 1;
            pos.swap(i, i + 1);
        }
        prop_assert!(crossings.values().all(|&c| c <= 1));
    }

    #[test]
    fn closures_agree_on_components(v in vector_strategy(7, 6)) {
        let s = v.shuffle();
        let braid_parts = lorenz_word(&s).closure_components();
        let t_parts = tlink_word(&v.compress()).closure_components();
        let grid_parts = GridDiagram::from_shuffle(&s).components();
        prop_assert_eq!(braid_parts, t_parts);
        prop_assert_eq!(braid_parts, grid_parts);
    }

    #[test]
    fn grid_crossings_positive_and_planar_consistent(v in vector_strategy(7, 6)) {
        let g = GridDiagram::from_shuffle(&v.shuffle());
        let crossings = g.crossings();
        prop_assert!(crossings.iter().all(|c| c.sign == 1));
        let pd = g.to_planar();
        prop_assert!(pd.is_well_formed());
        prop_assert_eq!(pd.crossing_count(), crossings.len());
        prop_assert_eq!(pd.writhe(), g.writhe());
        prop_assert_eq!(pd.components(), g.components());
    }

    #[test]
    fn braid_word_json_round_trips(v in vector_strategy(7, 6)) {
        let w = lorenz_word(&v.shuffle());
        let json = serde_json::to_string(&w).unwrap();
        let back: BraidWord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.strands(), w.strands());
        prop_assert_eq!(back.word(), w.word());
    }

    #[test]
    fn laurent_json_round_trips(p in poly_strategy()) {
        let json = serde_json::to_string(&p).unwrap();
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn laurent_division_inverts_multiplication(
        a in poly_strategy(),
        b in poly_strategy().prop_filter("nonzero divisor", |p| !p.is_zero()),
    ) {
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn canonical_form_is_a_unit_multiple(p in poly_strategy()) {
        let c = p.canonical_unit_form();
        prop_assert!(c.equal_up_to_units(&p));
        if !p.is_zero() {
            prop_assert_eq!(c.min_degree(), Some(0));
            prop_assert!(c.coeff(0) > 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alexander_agrees_between_braid_presentations(v in vector_strategy(5, 5)) {
        let a = alexander(&lorenz_word(&v.shuffle())).unwrap();
        let b = alexander(&tlink_word(&v.compress())).unwrap();
        prop_assert!(a.equal_up_to_units(&b), "{} vs {}", a.display("t"), b.display("t"));
    }
}
