use monohom::decomp::engine::verify_report;
use monohom::decomp::{brute_force_idempotent_oracle, commutant, decide, DecideOptions, Verdict, Witness};
use monohom::hom::{build_hom, FinitePresentation, InnerIdeal};
use monohom::lab::corpus;
use monohom::{ParameterSystem, PrimeFieldMatrix};
use proptest::prelude::*;

fn hom_presentations(ps: &ParameterSystem, max: u32) -> Vec<(Vec<u32>, FinitePresentation)> {
    let d = ps.len();
    let mut out = Vec::new();
    let mut t = vec![1u32; d];
    loop {
        let q = build_hom(ps, &InnerIdeal::Powers(t.clone())).unwrap();
        out.push((t.clone(), q.presentation(2).unwrap()));
        let Some(k) = (0..d).rev().find(|&k| t[k] < max) else { break };
        t[k] += 1;
        t[k + 1..].iter_mut().for_each(|e| *e = 1);
    }
    out
}

fn small_modules() -> Vec<(String, FinitePresentation)> {
    let mut out = Vec::new();
    for m in 2..=6 {
        for (t, p) in hom_presentations(&corpus::line_sop(m), m + 3) {
            out.push((format!("line m={m} t={t:?}"), p));
        }
    }
    for (t, p) in hom_presentations(&corpus::plane_sop(), 4) {
        out.push((format!("plane t={t:?}"), p));
    }
    for inst in corpus::random_dim1_depth0(3, 10) {
        let ps = inst.ring.validate_sop(vec![inst.parameter.clone()]).unwrap();
        for (t, p) in hom_presentations(&ps, 4) {
            out.push((format!("{} t={t:?}", inst.name), p));
        }
    }
    out
}

#[test]
fn engine_agrees_with_brute_force_oracle() {
    let mut compared = 0;
    for (name, pres) in small_modules() {
        if pres.dim() == 0 || commutant(&pres).unwrap().dim() > 12 {
            continue;
        }
        let engine = decide(&pres, DecideOptions::default()).unwrap();
        let brute = brute_force_idempotent_oracle(&pres).unwrap();
        assert_eq!(engine.verdict, brute, "{name}");
        compared += 1;
    }
    assert!(compared >= 50, "only {compared} modules compared");
}

#[test]
fn verdicts_agree_across_primes() {
    for (name, pres) in small_modules() {
        if pres.dim() == 0 {
            continue;
        }
        let first = decide(&pres, DecideOptions::default()).unwrap();
        let other = pres.with_prime(10_007).unwrap();
        let second = decide(&other, DecideOptions::default()).unwrap();
        assert_eq!(first.verdict, second.verdict, "{name}");
        verify_report(&pres.with_prime(first.prime).unwrap(), &first).unwrap();
        verify_report(&other, &second).unwrap();
    }
}

fn jordan(n: usize, p: u64) -> PrimeFieldMatrix {
    let mut m = PrimeFieldMatrix::zeros(n, n, p);
    for i in 1..n {
        m.set(i, i - 1, 1);
    }
    m
}

fn block_diag(blocks: &[PrimeFieldMatrix], p: u64) -> PrimeFieldMatrix {
    let n: usize = blocks.iter().map(PrimeFieldMatrix::rows).sum();
    let mut m = PrimeFieldMatrix::zeros(n, n, p);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m.set(off + i, off + j, b.get(i, j));
            }
        }
        off += b.rows();
    }
    m
}

/// Unitriangular change of basis built from `entries`.
fn mixer(n: usize, entries: &[u64], p: u64) -> PrimeFieldMatrix {
    let mut t = PrimeFieldMatrix::identity(n, p);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            t.set(i, j, entries[k % entries.len()] % p);
            k += 1;
        }
    }
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// A conjugated sum of Jordan blocks decomposes iff there are at least
    /// two blocks, and every witness checks out.
    #[test]
    fn jordan_sums(sizes in prop::collection::vec(1usize..4, 1..4), entries in prop::collection::vec(0u64..101, 1..12), seed in 0u64..1000) {
        let p = 101;
        let blocks: Vec<PrimeFieldMatrix> = sizes.iter().map(|&s| jordan(s, p)).collect();
        let n: usize = sizes.iter().sum();
        let j = block_diag(&blocks, p);
        let t = mixer(n, &entries, p);
        let tinv = t.inverse().unwrap();
        let action = tinv.mul(&j).mul(&t);
        let pres = FinitePresentation::from_actions(n, vec![action], p).unwrap();
        let report = decide(&pres, DecideOptions { seed, ..DecideOptions::default() }).unwrap();
        let expected = if sizes.len() >= 2 { Verdict::Decomposable } else { Verdict::Indecomposable };
        prop_assert_eq!(report.verdict, expected);
        prop_assert!(!matches!(report.witness, Witness::Pending));
        prop_assert_eq!(report.prime, p);
        verify_report(&pres, &report).unwrap();
        if let Witness::Idempotent { idempotent, image_dim, kernel_dim } = &report.witness {
            prop_assert!(idempotent.is_idempotent());
            prop_assert_eq!(image_dim + kernel_dim, n);
            prop_assert!(*image_dim > 0 && *kernel_dim > 0);
        }
    }
}
