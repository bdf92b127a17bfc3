//! `Hom(R/a, N)` recomputed as the joint kernel of multiplication by the
//! generators of `a` on `N = R/(I + b)`, with plain Gaussian elimination
//! over F_p. Also a brute-force stabilization index.

use monohom::hom::{build_hom, InnerIdeal};
use monohom::lab::corpus;
use monohom::{HomSubquotient, LocalRing, Monomial, MonomialIdeal, ParameterSystem};

const P: u64 = 101;

fn member(i: &MonomialIdeal, u: &Monomial) -> bool {
    i.gens().iter().any(|g| g.divides(u))
}

/// All monomials with exponents bounded by `bound`.
fn box_monomials(bound: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=b).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|e| Monomial::from_exponents(e).unwrap()).collect()
}

/// Standard monomials of a finite-colength ideal, by enumeration below its
/// pure powers.
fn standard(j: &MonomialIdeal) -> Vec<Monomial> {
    let n = j.nvars();
    let bound: Vec<u32> = (0..n)
        .map(|i| {
            j.gens()
                .iter()
                .filter(|g| g.support() == 1 << i)
                .map(|g| g.exponents()[i])
                .min()
                .expect("finite colength")
                - 1
        })
        .collect();
    box_monomials(&bound).into_iter().filter(|u| !member(j, u)).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = pow_mod(rows[r][c], P - 2);
        rows[r].iter_mut().for_each(|x| *x = *x * inv % P);
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                for j in 0..ncols {
                    rows[k][j] = (rows[k][j] + P * P - f * rows[r][j]) % P;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    rref(&mut rows).len()
}

/// Matrix of multiplication by `g` on the basis `basis` of `R/j`.
fn mult(j: &MonomialIdeal, basis: &[Monomial], g: &Monomial) -> Vec<Vec<u64>> {
    let mut m = vec![vec![0; basis.len()]; basis.len()];
    for (c, u) in basis.iter().enumerate() {
        let v = u.mul(g).unwrap();
        if !member(j, &v) {
            let r = basis.iter().position(|w| *w == v).unwrap();
            m[r][c] = 1;
        }
    }
    m
}

struct Oracle {
    length: usize,
    mu: usize,
    base_length: usize,
}

fn oracle(ring: &LocalRing, a: &MonomialIdeal, b: &MonomialIdeal) -> Oracle {
    let n = ring.nvars();
    let j = ring.defining().sum(b).unwrap();
    let basis = standard(&j);
    let dim = basis.len();
    // Kernel of the stacked multiplications by generators of a.
    let mut stacked: Vec<Vec<u64>> = a.gens().iter().flat_map(|g| mult(&j, &basis, g)).collect();
    let pivots = rref(&mut stacked);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let kernel: Vec<Vec<u64>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![0; dim];
            v[f] = 1;
            for (row, &pc) in stacked.iter().zip(&pivots) {
                v[pc] = (P - row[f]) % P;
            }
            v
        })
        .collect();
    let length = kernel.len();
    // m·H spanned by x_i applied to a kernel basis.
    let mut image = Vec::new();
    for i in 0..n {
        let x = mult(&j, &basis, &Monomial::var(n, i));
        for v in &kernel {
            image.push((0..dim).map(|r| (0..dim).map(|c| x[r][c] * v[c]).sum::<u64>() % P).collect::<Vec<_>>());
        }
    }
    let mh = if image.is_empty() { 0 } else { rank(image) };
    let base_length = standard(&ring.defining().sum(a).unwrap()).len();
    Oracle { length, mu: length - mh, base_length }
}

fn check(ring: &LocalRing, a: &MonomialIdeal, b: &MonomialIdeal) {
    let q = HomSubquotient::from_ideals(ring, a, b).unwrap();
    let o = oracle(ring, a, b);
    let label = format!("{} a = {} b = {}", ring.fmt_ideal(ring.defining()), ring.fmt_ideal(a), ring.fmt_ideal(b));
    assert_eq!(q.length().unwrap(), o.length, "length, {label}");
    assert_eq!(q.minimal_generator_count(), o.mu, "mu, {label}");
    assert_eq!(q.base_length().unwrap(), o.base_length, "base length, {label}");
    assert_eq!(q.is_free_over_base().unwrap(), o.length == o.mu * o.base_length, "free, {label}");
    assert_eq!(q.is_cyclic(), o.mu == 1, "cyclic, {label}");
}

fn sweep(ps: &ParameterSystem, max: u32) {
    let ring = ps.ring();
    let d = ps.len();
    let a = MonomialIdeal::minimalize(ring.nvars(), ps.params().to_vec()).unwrap();
    let points: Vec<Vec<u32>> = box_monomials(&vec![max - 1; d])
        .into_iter()
        .map(|m| m.exponents().iter().map(|e| e + 1).collect())
        .collect();
    for t in points {
        let q = build_hom(ps, &InnerIdeal::Powers(t.clone())).unwrap();
        check(ring, &a, q.outer());
    }
}

#[test]
fn line_family_matches_oracle() {
    for m in 2..=6 {
        sweep(&corpus::line_sop(m), m + 3);
        let r = corpus::line_ring(m);
        sweep(&r.parse_sop(&["y"]).unwrap(), m + 3);
    }
}

#[test]
fn plane_ring_matches_oracle() {
    sweep(&corpus::plane_sop(), 5);
}

#[test]
fn cm_rings_match_oracle() {
    for (vars, rel, sop) in [
        (&["x", "y"][..], "(x^2)", &["y"][..]),
        (&["x", "y"][..], "()", &["x", "y"][..]),
        (&["x", "y", "z"][..], "(x^3)", &["y", "z"][..]),
        (&["x", "y", "z"][..], "(x^2, y^2)", &["z"][..]),
    ] {
        let r = LocalRing::parse(vars, rel).unwrap();
        sweep(&r.parse_sop(sop).unwrap(), 4);
    }
}

#[test]
fn random_dim1_rings_match_oracle() {
    for inst in corpus::random_dim1_depth0(11, 12) {
        let ps = inst.ring.validate_sop(vec![inst.parameter.clone()]).unwrap();
        sweep(&ps, 5);
    }
}

#[test]
fn non_parameter_ideals_match_oracle() {
    let r = LocalRing::parse(&["x", "y"], "(x^2, xy^3)").unwrap();
    for (a, b) in [("(x, y^2)", "(x^2, y^5)"), ("(x, y)", "(y^3)"), ("(y^2)", "(xy, y^4)"), ("(x, y)", "(x, y)")] {
        check(&r, &r.ideal(a).unwrap(), &r.ideal(b).unwrap());
    }
}

/// Least `n` with `m^n ∩ Γ = 0`: one more than the largest degree of a
/// monomial outside `I` killed by every monomial of a large degree.
fn stabilization_oracle(ring: &LocalRing, bound: u32, k: u32) -> u32 {
    let n = ring.nvars();
    let i = ring.defining();
    let high: Vec<Monomial> = box_monomials(&vec![k; n]).into_iter().filter(|m| m.degree() == u64::from(k)).collect();
    box_monomials(&vec![bound; n])
        .into_iter()
        .filter(|u| !member(i, u) && high.iter().all(|v| member(i, &u.mul(v).unwrap())))
        .map(|u| u.degree() as u32 + 1)
        .max()
        .unwrap_or(0)
}

#[test]
fn stabilization_matches_brute_force() {
    for m in 2..=6 {
        let r = corpus::line_ring(m);
        assert_eq!(r.stabilization_index().unwrap(), stabilization_oracle(&r, 10, 12), "m = {m}");
        assert_eq!(r.stabilization_index().unwrap(), m + 1);
    }
    for n1 in 2..=6 {
        let r = corpus::s_ring(n1);
        let n = stabilization_oracle(&r, 9, 12);
        assert_eq!(r.stabilization_index().unwrap(), n, "n1 = {n1}");
        // Γ is spanned by x y^b for 1 <= b < n1, of top degree n1.
        assert_eq!(n, n1 + 1);
    }
    for inst in corpus::random_dim1_depth0(5, 10) {
        let got = inst.ring.stabilization_index().unwrap();
        assert_eq!(got, stabilization_oracle(&inst.ring, 9, 14), "{}", inst.name);
    }
    let cm = LocalRing::parse(&["x", "y"], "(x^2)").unwrap();
    assert_eq!(cm.stabilization_index().unwrap(), 0);
}
