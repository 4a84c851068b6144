//! Property tests over seeded random inputs.

use proptest::prelude::*;

use twistlie::io::{seq_from_json, seq_to_json};
use twistlie::liealg::ce::{ce_coalgebra, ce_complex, ce_map};
use twistlie::liealg::free::free_lie;
use twistlie::liealg::quillen::{bracket_lengths, epsilon, eta, quillen_complex};
use twistlie::liealg::{tensor_lie, validate_coalg, validate_lie, GradedAlgebra, TwistedLie};
use twistlie::models::{braid_poincare_oracle, discrete_conf_coalgebra};
use twistlie::partitions::{bell, enumerate_partitions, surjections};
use twistlie::perm::factorial;
use twistlie::projcat::fb::perm_from_lehmer;
use twistlie::random::{random_quasi_iso_below, random_seq, stream, SeqShape};
use twistlie::twisted::day::day_tensor_fb;
use twistlie::twisted::{is_quasi_iso, is_quasi_iso_below, ChainMap, SymSeq};

fn small_lie(seed: u64, kind: u8, w: usize) -> TwistedLie {
    let mut rng = stream(seed, 0, 0);
    let deg = (seed % 3) as i32 - 1;
    match kind % 3 {
        0 => free_lie(&SymSeq::generator(w, 1, deg), w).unwrap().lie,
        1 => {
            let shape = SeqShape { max_weight: w, max_summands: 1, degrees: (-1, 1), ..Default::default() };
            TwistedLie::abelian(random_seq(&mut rng, &shape))
        }
        _ => tensor_lie(&GradedAlgebra::torus(), &free_lie(&SymSeq::generator(w, 1, deg.abs()), w).unwrap().lie).unwrap(),
    }
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn partitions_are_counted_by_bell_numbers(n in 0usize..=7) {
        let parts = enumerate_partitions(n).unwrap();
        prop_assert_eq!(parts.len() as u64, bell(n));
        let mut rgs: Vec<_> = parts.iter().map(|p| p.rgs().to_vec()).collect();
        rgs.sort();
        rgs.dedup();
        prop_assert_eq!(rgs.len(), parts.len());
    }

    #[test]
    fn surjections_match_inclusion_exclusion(n in 0usize..=6, r in 0usize..=6) {
        let expect: i64 = (0..=r as u64)
            .map(|j| {
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * binomial(r as u64, j) * ((r as u64 - j) as i64).pow(n as u32)
            })
            .sum();
        prop_assert_eq!(surjections(n, r).unwrap().len() as i64, expect);
    }

    #[test]
    fn braid_total_betti_is_factorial(k in 1usize..=6, n in 2i32..=4) {
        let p = braid_poincare_oracle(k, n).unwrap();
        prop_assert_eq!(p.eval(1) as u128, factorial(k));
    }

    #[test]
    fn lehmer_codes_give_permutations(n in 0usize..=7, code in any::<u64>()) {
        let p = perm_from_lehmer(n, code);
        prop_assert!(p.is_valid());
        prop_assert_eq!(p.len(), n);
    }

    #[test]
    fn sequences_survive_json(seed in any::<u64>()) {
        let shape = SeqShape { max_weight: 3, ..Default::default() };
        let s = random_seq(&mut stream(seed, 1, 0), &shape);
        let back = seq_from_json(&seq_to_json(&s).to_string(), "<memory>").unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn day_tensor_dimensions(seed in any::<u64>()) {
        let mut rng = stream(seed, 2, 0);
        let shape = SeqShape { max_weight: 4, ..Default::default() };
        let f = random_seq(&mut rng, &shape);
        let g = random_seq(&mut rng, &shape);
        let fg = day_tensor_fb(&f, &g, 4).unwrap();
        let gf = day_tensor_fb(&g, &f, 4).unwrap();
        for k in 0..=4 {
            let expect: i64 = (0..=k).map(|i| binomial(k as u64, i as u64) * (f.dim(i) * g.dim(k - i)) as i64).sum();
            prop_assert_eq!(fg.dim(k) as i64, expect);
            prop_assert_eq!(fg.dim(k), gf.dim(k));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn ce_detects_quasi_isomorphisms(seed in any::<u64>(), n in 1usize..=4) {
        let shape = SeqShape { max_weight: 3, degrees: (-1, 1), ..Default::default() };
        let f = random_quasi_iso_below(&mut stream(seed, 3, 0), &shape, n);
        let src = ce_complex(&TwistedLie::abelian(f.source.clone()), None).unwrap();
        let tgt = ce_complex(&TwistedLie::abelian(f.target.clone()), None).unwrap();
        let g = ce_map(&f, &src, &tgt).unwrap();
        prop_assert!(g.check().is_valid());
        for below in 1..=4 {
            prop_assert_eq!(is_quasi_iso_below(&f, below), is_quasi_iso_below(&g, below), "below {}", below);
        }
    }

    #[test]
    fn word_length_filtrations(seed in any::<u64>(), kind in 0u8..3) {
        let l = small_lie(seed, kind, 3);
        prop_assert!(validate_lie(&l).is_valid());
        let (ce, kc) = ce_coalgebra(&l).unwrap();
        for k in 0..=3 {
            let lengths = ce.lengths(k);
            let d = &ce.seq.piece(k).d;
            for (j, &len) in lengths.iter().enumerate() {
                for (i, _) in d.col(j).iter() {
                    prop_assert!(lengths[*i] == len || lengths[*i] + 1 == len);
                }
            }
        }
        let q = quillen_complex(&kc, 3).unwrap();
        for k in 0..=3 {
            let lengths = bracket_lengths(&q, k);
            let d = &q.lie.seq.piece(k).d;
            for (j, &len) in lengths.iter().enumerate() {
                for (i, _) in d.col(j).iter() {
                    prop_assert!(lengths[*i] >= len);
                }
            }
        }
    }

    #[test]
    fn duality_maps_are_inverse_on_homology(seed in any::<u64>(), kind in 0u8..3) {
        let l = small_lie(seed, kind, 3);
        let (ce, kc) = ce_coalgebra(&l).unwrap();
        prop_assert!(validate_coalg(&kc).is_valid());
        let q = quillen_complex(&kc, 3).unwrap();
        let e = epsilon(&l, &ce, &q).unwrap();
        prop_assert!(is_quasi_iso(&e));
        let ce_q = ce_complex(&q.lie, None).unwrap();
        let h = eta(&kc, &q, &ce_q).unwrap();
        prop_assert!(is_quasi_iso(&h));
        prop_assert_eq!(ce_map(&e, &ce_q, &ce).unwrap().compose(&h), ChainMap::identity(&ce.seq));
    }

    #[test]
    fn discrete_configurations_are_koszul(m in 1usize..=3, w in 1usize..=3) {
        let kc = discrete_conf_coalgebra(m, w).unwrap();
        let q = quillen_complex(&kc, w).unwrap();
        let ce_q = ce_complex(&q.lie, None).unwrap();
        prop_assert!(is_quasi_iso(&eta(&kc, &q, &ce_q).unwrap()));
    }
}
