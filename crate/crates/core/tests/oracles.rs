//! Library results checked against brute-force or independently built references.

mod common;

use common::{all_words, alphabet, reflected_listing, word};
use qbalance::analysis::{self, Scheme};
use qbalance::{decode, encode, enumerate_encodings, Balancer, GrayCode, Params, Sequence};

#[test]
fn gray_code_matches_recursive_reflection() {
    for q in 2..=7u32 {
        for len in 1..=4usize {
            let code = GrayCode::new(alphabet(q), len).unwrap();
            let listing = reflected_listing(q as u8, len);
            assert_eq!(listing.len() as u64, code.size());
            for (z, expected) in listing.iter().enumerate() {
                let g = code.unrank(z as u64).unwrap();
                assert_eq!(
                    g.word.symbols(),
                    expected.as_slice(),
                    "q={q} len={len} z={z}"
                );
                assert_eq!(code.rank(&g.word).unwrap(), z as u64);
            }
        }
    }
}

#[test]
fn q4_listing_rank_12() {
    let listing = reflected_listing(4, 2);
    let code = GrayCode::new(alphabet(4), 2).unwrap();
    assert_eq!(listing[12], vec![3, 3]);
    assert_eq!(code.unrank(12).unwrap().word, word(4, "33"));
}

#[test]
fn every_ternary_length_four_word_has_a_balanced_candidate() {
    let a = alphabet(3);
    let balancer = Balancer::new(a, 4).unwrap();
    for x in all_words(3, 4) {
        // Direct addition of every step sequence, no incremental walk.
        let hits = (0..12)
            .filter(|&z| {
                let b = balancer.sequence_at(z).unwrap();
                let y: Vec<u8> = x
                    .symbols()
                    .iter()
                    .zip(b.symbols())
                    .map(|(&xi, &bi)| (xi + bi) % 3)
                    .collect();
                y.iter().map(|&s| s as u32).sum::<u32>() == 4
            })
            .count();
        assert!(hits >= 1, "{x}");
        let via_iter = balancer
            .candidates(&x)
            .unwrap()
            .filter(|c| c.weight == 4)
            .count();
        assert_eq!(hits, via_iter, "{x}");
    }
}

/// Reference encoder: materialise every row and take the first whose weight
/// hits β_n with an admissible free symbol.
fn reference_encode(params: &Params, x: &Sequence) -> Option<(u64, Vec<u8>)> {
    let q = params.q() as u64;
    let code = params.gray_code();
    let balancer = params.balancer();
    (0..balancer.count()).find_map(|z| {
        let y = x.add_mod(&balancer.sequence_at(z).unwrap()).unwrap();
        let g = code.unrank(params.z1() + z).unwrap().word;
        let gap = params.beta_n() as i64 - y.weight() as i64 - g.weight() as i64;
        (0..q as i64).contains(&gap).then(|| {
            let mut c = vec![gap as u8];
            c.extend_from_slice(g.symbols());
            c.extend_from_slice(y.symbols());
            (z, c)
        })
    })
}

#[test]
fn encoder_agrees_with_reference_search() {
    for (q, k) in [
        (2, 4),
        (3, 2),
        (3, 3),
        (3, 4),
        (3, 5),
        (4, 3),
        (5, 2),
        (3, 6),
        (6, 5),
        (7, 3),
    ] {
        let params = Params::new(q, k).unwrap();
        for x in all_words(q, k) {
            let (z, c) = reference_encode(&params, &x).expect("reference finds a balanced row");
            let e = encode(&params, &x).unwrap();
            assert_eq!(e.index.z, z, "q={q} k={k} x={x}");
            assert_eq!(e.codeword.to_sequence().symbols(), c.as_slice());
            let rows = enumerate_encodings(&params, &x).unwrap();
            let first = rows.iter().find(|r| r.balanced).unwrap();
            assert_eq!(first.codeword, e.codeword);
            assert_eq!(decode(&params, &e.codeword.to_sequence()).unwrap(), x);
        }
    }
}

#[test]
fn balanced_counts_against_approximation() {
    for (q, k, exact) in [(2u32, 2u32, 2usize), (3, 2, 3)] {
        let counted = all_words(q, k as usize)
            .iter()
            .filter(|w| w.is_balanced())
            .count();
        assert_eq!(counted, exact);
        let approx = analysis::balanced_cardinality_approx(alphabet(q), k).unwrap();
        assert!(approx > exact as f64 / 2.0 && approx < exact as f64 * 2.0);
    }
    let a = analysis::balanced_cardinality_approx(alphabet(2), 2).unwrap();
    assert!((a - 2.2568).abs() < 1e-4);
    let b = analysis::balanced_cardinality_approx(alphabet(3), 2).unwrap();
    assert!((b - 3.1095).abs() < 1e-4);
}

#[test]
fn balanced_prefix_bound_by_scan() {
    for q in 2..=9u32 {
        for r in 1..=14u32 {
            let f = analysis::balanced_cardinality_approx(alphabet(q), r).unwrap();
            let qs = q as f64;
            let admissible = |k: u64| {
                let term = (q as u64 % 2 + ((q as u64 - 1) * k) % 2) as f64;
                (k as f64) <= (f - term) / (qs - 1.0)
            };
            // Scan down from above for the largest admissible k.
            let mut k = (f / (qs - 1.0)).floor() as u64 + 1;
            while k > 0 && !admissible(k) {
                k -= 1;
            }
            let fp = analysis::balanced_prefix_fixed_point(alphabet(q), r).unwrap();
            if k >= 1 {
                assert_eq!(fp.k_max, k as f64, "q={q} r={r}");
            } else {
                assert!(fp.k_max < 1.0, "q={q} r={r}");
            }
            assert!(fp.iterations <= 2);
        }
    }
}

#[test]
fn gray_prefix_beats_lookup_prefix_bound() {
    for q in 2..=4u32 {
        for r in 4..=20u32 {
            let ours = analysis::scheme_kmax(Scheme::GrayPrefix, alphabet(q), r).unwrap();
            let theirs = analysis::scheme_kmax(Scheme::SwartWeber, alphabet(q), r).unwrap();
            // Raw (unfloored) comparison of q^(r−2) with F_q^r / q.
            let raw = analysis::balanced_cardinality_approx(alphabet(q), r).unwrap() / q as f64;
            assert!(ours.k_max.as_f64() >= raw, "q={q} r={r}");
            assert!(ours.k_max.as_f64() >= theirs.k_max.as_f64());
        }
    }
}

#[test]
fn chain_bounds_ordering() {
    let a = analysis::scheme_kmax(Scheme::CapocelliA, alphabet(3), 6).unwrap();
    let b = analysis::scheme_kmax(Scheme::CapocelliB, alphabet(3), 6).unwrap();
    assert!(b.k_max.as_f64() > a.k_max.as_f64());
}
