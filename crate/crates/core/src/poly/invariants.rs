//! Invariance tests, orbit-sum bases of invariant rings and their graded dimensions.

use super::monomial::{Monomial, Var};
use super::polynomial::Polynomial;
use super::roots::{Block, Frame};
use crate::weyl::Parabolic;

/// Whether `f` is fixed by every generator of `p`.
pub fn is_invariant(f: &Polynomial, p: &Parabolic) -> bool {
    p.generators().iter().all(|s| s.act(f) == *f)
}

/// Partitions of `m` into at most `parts` parts (weakly decreasing, padded with zeros),
/// with every part even if `even`.
fn partitions(m: u32, parts: usize, even: bool) -> Vec<Vec<u32>> {
    fn rec(m: u32, parts: usize, max: u32, step: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 0 {
            let mut v = cur.clone();
            v.resize(cur.len() + parts, 0);
            out.push(v);
            return;
        }
        if parts == 0 {
            return;
        }
        let mut k = max.min(m);
        k -= k % step;
        while k >= step {
            cur.push(k);
            rec(m - k, parts - 1, k, step, cur, out);
            cur.pop();
            k -= step;
        }
    }
    let mut out = Vec::new();
    if even && m % 2 == 1 {
        return out;
    }
    rec(m, parts, m, if even { 2 } else { 1 }, &mut Vec::new(), &mut out);
    out
}

/// All distinct rearrangements of `v`, in lexicographically decreasing order.
fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![cur.clone()];
    // previous permutation in lexicographic order
    loop {
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] > cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] < cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

fn block_orbit_sum(bl: &Block, exps: &[u32]) -> Polynomial {
    let mut p = Polynomial::zero();
    for perm in distinct_permutations(exps) {
        let m = Monomial::from_pairs(perm.iter().enumerate().map(|(t, &e)| (Var::new(bl.vertex, bl.start + t), e)));
        p.add_term(m, super::polynomial::rat(1));
    }
    p
}

/// Orbit sums of monomials of degree exactly `deg` under `p`: a basis of `(Λ_p)_deg`.
pub fn invariant_basis_degree(frame: &Frame, p: &Parabolic, deg: u32) -> Vec<Polynomial> {
    let blocks = frame.blocks(p);
    let mut out = Vec::new();
    fn rec(blocks: &[Block], idx: usize, left: u32, acc: Polynomial, out: &mut Vec<Polynomial>) {
        if idx == blocks.len() {
            if left == 0 {
                out.push(acc);
            }
            return;
        }
        let bl = &blocks[idx];
        for m in (0..=left).rev() {
            for part in partitions(m, bl.len(), bl.signed) {
                let next = &acc * &block_orbit_sum(bl, &part);
                rec(blocks, idx + 1, left - m, next, out);
            }
        }
    }
    rec(&blocks, 0, deg, Polynomial::one(), &mut out);
    out
}

/// Orbit sums of all degrees `≤ max_deg`, graded by increasing degree.
pub fn invariant_basis(frame: &Frame, p: &Parabolic, max_deg: u32) -> Vec<Polynomial> {
    (0..=max_deg).flat_map(|d| invariant_basis_degree(frame, p, d)).collect()
}

/// `dim (Λ_p)_k` for `k = 0..=max_deg`.
pub fn hilbert_series(frame: &Frame, p: &Parabolic, max_deg: u32) -> Vec<u64> {
    let blocks = frame.blocks(p);
    let mut series = vec![0u64; max_deg as usize + 1];
    series[0] = 1;
    for bl in &blocks {
        let per: Vec<u64> = (0..=max_deg).map(|m| partitions(m, bl.len(), bl.signed).len() as u64).collect();
        let mut next = vec![0u64; series.len()];
        for (a, &x) in series.iter().enumerate() {
            for (b, &y) in per.iter().enumerate() {
                if a + b <= max_deg as usize {
                    next[a + b] += x * y;
                }
            }
        }
        series = next;
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::roots::RootType;
    use crate::quiver::DimVector;
    use crate::weyl::FactorKind;

    fn x(k: usize) -> Polynomial {
        Polynomial::var(Var::new(0, k))
    }

    #[test]
    fn sym2_basis() {
        let fr = Frame::ordinary(&DimVector(vec![2]));
        let b = invariant_basis(&fr, &fr.whole(), 2);
        let expect = vec![
            Polynomial::one(),
            &x(1) + &x(2),
            &x(1).pow(2) + &x(2).pow(2),
            &x(1) * &x(2),
        ];
        assert_eq!(b.len(), 4);
        for e in &expect {
            assert!(b.contains(e), "{}", e);
        }
        assert_eq!(hilbert_series(&fr, &fr.whole(), 5), vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn trivial_and_sign_groups() {
        let fr = Frame::ordinary(&DimVector(vec![1]));
        assert_eq!(hilbert_series(&fr, &fr.whole(), 3), vec![1, 1, 1, 1]);
        let sg = Frame { kinds: vec![FactorKind::Hyp(1)], types: vec![RootType::B] };
        assert_eq!(hilbert_series(&sg, &sg.whole(), 4), vec![1, 0, 1, 0, 1]);
        assert_eq!(invariant_basis(&sg, &sg.whole(), 4), vec![Polynomial::one(), x(1).pow(2), x(1).pow(4)]);
    }

    #[test]
    fn basis_elements_are_invariant() {
        let fr = Frame { kinds: vec![FactorKind::Hyp(3)], types: vec![RootType::C] };
        let p = Parabolic::from_blocks(&fr.kinds, &[vec![1]], &[2]);
        let b = invariant_basis(&fr, &p, 4);
        assert!(b.iter().all(|f| is_invariant(f, &p)));
        let h = hilbert_series(&fr, &p, 4);
        assert_eq!(h.iter().sum::<u64>() as usize, b.len());
    }
}
