//! Partitionings of the slot set `N_c = ⨆_i {1..c(i)} × {i}` and the maps `C`, `P`.

use super::group::{Factor, WeylElement};
use super::perm::{Perm, SignedPerm};
use crate::error::{bail, Result};
use crate::quiver::{Comp, DimVector, IsoComp, Quiver, Side};
use std::fmt;

/// A slot `(vertex, index)` with 1-based index.
pub type Slot = (usize, usize);

/// Surjective labelling `λ: N_c → {1..n}`, stored as per-vertex label lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partitioning {
    labels: Vec<Vec<usize>>,
    n: usize,
}

impl Partitioning {
    /// From per-vertex label lists; labels must cover `1..=n` for some `n`.
    pub fn from_labels(labels: Vec<Vec<usize>>) -> Result<Partitioning> {
        let n = labels.iter().flatten().copied().max().unwrap_or(0);
        let mut hit = vec![false; n + 1];
        for &l in labels.iter().flatten() {
            if l == 0 {
                bail!(Argument, "partitioning labels start at 1");
            }
            hit[l] = true;
        }
        if hit[1..].iter().any(|h| !h) {
            bail!(Argument, "partitioning labels must be surjective onto 1..{}", n);
        }
        Ok(Partitioning { labels, n })
    }

    /// From blocks listed in order; the blocks must be nonempty, disjoint and cover `N_c`.
    pub fn from_blocks(c: &DimVector, blocks: &[Vec<Slot>]) -> Result<Partitioning> {
        let mut labels: Vec<Vec<usize>> = c.0.iter().map(|&n| vec![0; n as usize]).collect();
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                bail!(Argument, "block {} is empty", b + 1);
            }
            for &(v, k) in block {
                if v >= labels.len() || k == 0 || k > labels[v].len() {
                    bail!(Argument, "slot ({},{}) is outside N_c", k, v + 1);
                }
                if labels[v][k - 1] != 0 {
                    bail!(Argument, "slot ({},{}) lies in two blocks", k, v + 1);
                }
                labels[v][k - 1] = b + 1;
            }
        }
        if labels.iter().flatten().any(|&l| l == 0) {
            bail!(Argument, "blocks do not cover N_c");
        }
        Partitioning::from_labels(labels)
    }

    /// `P(d)`: slot `(k, i)` lies in block `p` iff `k` falls in the `p`-th part at vertex `i`.
    pub fn of_comp(d: &Comp) -> Partitioning {
        Partitioning::of_parts(d.parts())
    }

    /// `P` applied to a list of parts, skipping zero parts.
    fn of_parts(parts: &[DimVector]) -> Partitioning {
        let nv = parts[0].len();
        let nonzero: Vec<&DimVector> = parts.iter().filter(|p| !p.is_zero()).collect();
        let mut labels = vec![Vec::new(); nv];
        for (b, p) in nonzero.iter().enumerate() {
            for (i, l) in labels.iter_mut().enumerate() {
                l.extend(std::iter::repeat(b + 1).take(p.get(i) as usize));
            }
        }
        Partitioning { labels, n: nonzero.len() }
    }

    /// `θP(d) = P(D(d))`.
    pub fn of_iso(q: &Quiver, d: &IsoComp) -> Result<Partitioning> {
        let inv = q.inv()?;
        Ok(Partitioning::of_parts(&d.doubled_parts(&inv.vertex_map)))
    }

    /// Number of blocks `ℓ_λ`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dims(&self) -> DimVector {
        DimVector(self.labels.iter().map(|l| l.len() as u32).collect())
    }

    pub fn label(&self, s: Slot) -> usize {
        self.labels[s.0][s.1 - 1]
    }

    /// The slots of block `k` (1-based) in slot order.
    pub fn block(&self, k: usize) -> Vec<Slot> {
        let mut out = Vec::new();
        for (v, l) in self.labels.iter().enumerate() {
            for (i, &x) in l.iter().enumerate() {
                if x == k {
                    out.push((v, i + 1));
                }
            }
        }
        out
    }

    pub fn blocks(&self) -> Vec<Vec<Slot>> {
        (1..=self.n).map(|k| self.block(k)).collect()
    }

    fn block_dims(&self, k: usize) -> DimVector {
        DimVector(self.labels.iter().map(|l| l.iter().filter(|&&x| x == k).count() as u32).collect())
    }

    /// `C(λ)`.
    pub fn to_comp(&self) -> Comp {
        Comp::new((1..=self.n).map(|k| self.block_dims(k)).collect()).expect("blocks are nonempty")
    }

    /// `θC(λ)`: the first `⌊n/2⌋` blocks are the finite parts, the middle block (if `n`
    /// is odd) is the infinity part.
    pub fn to_iso(&self, q: &Quiver) -> Result<IsoComp> {
        let inv = q.inv()?;
        if !self.is_isotropic(q)? {
            bail!(Argument, "partitioning is not isotropic");
        }
        let l = self.n / 2;
        let finite = (1..=l).map(|k| self.block_dims(k)).collect();
        let inf = if self.n % 2 == 1 { self.block_dims(l + 1) } else { DimVector::zero(self.labels.len()) };
        IsoComp::new(finite, inf, &inv.vertex_map)
    }

    /// Pairs `(k, l)` with `λ^{-1}(k) ∩ μ^{-1}(l)` nonempty, in lexicographic order.
    pub fn intersection_pairs(&self, other: &Partitioning) -> Result<Vec<(usize, usize)>> {
        if self.dims() != other.dims() {
            bail!(Argument, "partitionings of different slot sets");
        }
        let mut pairs: Vec<(usize, usize)> = self
            .labels
            .iter()
            .zip(&other.labels)
            .flat_map(|(a, b)| a.iter().copied().zip(b.iter().copied()))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Ok(pairs)
    }

    /// The ordered intersection `λ ⨅ μ`.
    pub fn ordered_intersection(&self, other: &Partitioning) -> Result<Partitioning> {
        let pairs = self.intersection_pairs(other)?;
        let labels = self
            .labels
            .iter()
            .zip(&other.labels)
            .map(|(a, b)| {
                a.iter().zip(b).map(|(&x, &y)| pairs.binary_search(&(x, y)).unwrap() + 1).collect()
            })
            .collect();
        Ok(Partitioning { labels, n: pairs.len() })
    }

    /// Moves every slot `s` to `f(s)`: `(f·λ)(f(s)) = λ(s)`.
    pub fn move_slots(&self, f: impl Fn(Slot) -> Slot) -> Partitioning {
        let mut labels = self.labels.clone();
        for (v, l) in self.labels.iter().enumerate() {
            for (i, &x) in l.iter().enumerate() {
                let (v2, i2) = f((v, i + 1));
                labels[v2][i2 - 1] = x;
            }
        }
        Partitioning { labels, n: self.n }
    }

    /// The `W_c`-action `w·λ`.
    pub fn act(&self, w: &WeylElement) -> Partitioning {
        self.move_slots(|(v, k)| (v, w.0[v].image(k).0))
    }

    /// The `θW_c`-action on an isotropic partitioning.
    pub fn act_theta(&self, q: &Quiver, w: &WeylElement) -> Result<Partitioning> {
        let inv = q.inv()?;
        let c = self.dims();
        Ok(self.move_slots(|(v, k)| {
            let n = c.get(v) as usize;
            match inv.vertex_side[v] {
                Side::Plus => (v, w.0[v].image(k).0),
                Side::Minus => {
                    let p = inv.vertex_map[v];
                    (v, n + 1 - w.0[p].image(n + 1 - k).0)
                }
                Side::Fixed => match &w.0[v] {
                    Factor::Hyp(s) => (v, fold_apply(s, n, k)),
                    Factor::Sym(_) => unreachable!("θ-fixed vertices carry hyperoctahedral factors"),
                },
            }
        }))
    }

    /// The `Sym_n`-action on labels: `(u·λ)(s) = u(λ(s))`.
    pub fn relabel(&self, u: &Perm) -> Partitioning {
        let labels = self.labels.iter().map(|l| l.iter().map(|&x| u.apply(x)).collect()).collect();
        Partitioning { labels, n: self.n }
    }

    /// The `Z_2 ≀ Sym_m`-action on the labels of an isotropic partitioning with `m = ⌊n/2⌋`.
    pub fn relabel_signed(&self, u: &SignedPerm) -> Partitioning {
        let labels = self.labels.iter().map(|l| l.iter().map(|&x| fold_apply(u, self.n, x)).collect()).collect();
        Partitioning { labels, n: self.n }
    }

    /// `λ^{-1}(n−k+1) = θ(λ^{-1}(k))` for the slot involution `(k,i) ↦ (c(i)−k+1, θ(i))`.
    pub fn is_isotropic(&self, q: &Quiver) -> Result<bool> {
        let inv = q.inv()?;
        let c = self.dims();
        if !c.is_theta_fixed(&inv.vertex_map) {
            return Ok(false);
        }
        for (v, l) in self.labels.iter().enumerate() {
            let tv = inv.vertex_map[v];
            for (i, &x) in l.iter().enumerate() {
                let k = i + 1;
                let tk = c.get(v) as usize + 1 - k;
                if self.labels[tv][tk - 1] != self.n + 1 - x {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Bracket notation `[1,2,3][4,5]`; on several vertices slots are written `k@vertex`.
    pub fn to_text(&self, q: &Quiver) -> String {
        let single = self.labels.len() == 1;
        self.blocks()
            .iter()
            .map(|b| {
                let items: Vec<String> = b
                    .iter()
                    .map(|&(v, k)| if single { k.to_string() } else { format!("{}@{}", k, q.vertices[v]) })
                    .collect();
                format!("[{}]", items.join(","))
            })
            .collect()
    }
}

impl fmt::Display for Partitioning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.blocks() {
            let items: Vec<String> = b.iter().map(|&(v, k)| format!("{}@{}", k, v + 1)).collect();
            write!(f, "[{}]", items.join(","))?;
        }
        Ok(())
    }
}

/// The action of a signed permutation of rank `m` on `{1..total}` (`m = ⌊total/2⌋`),
/// identifying `total−k+1` with `−k` and fixing the middle point.
pub fn fold_apply(w: &SignedPerm, total: usize, k: usize) -> usize {
    let m = w.n();
    let place = |x: i16| if x > 0 { x as usize } else { total + 1 - x.unsigned_abs() as usize };
    if k <= m {
        place(w.apply(k))
    } else if k > total - m {
        place(-w.apply(total + 1 - k))
    } else {
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(blocks: &[&[usize]]) -> Partitioning {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let bl: Vec<Vec<Slot>> = blocks.iter().map(|b| b.iter().map(|&k| (0, k)).collect()).collect();
        Partitioning::from_blocks(&DimVector(vec![n as u32]), &bl).unwrap()
    }

    #[test]
    fn ordered_intersection_example() {
        let l = single(&[&[1, 2, 3], &[4, 5], &[6, 7, 8]]);
        let m = single(&[&[1, 2, 4, 5], &[6, 7], &[3, 8]]);
        let q = Quiver::a1();
        assert_eq!(l.ordered_intersection(&m).unwrap().to_text(&q), "[1,2][3][4,5][6,7][8]");
        assert_eq!(m.ordered_intersection(&l).unwrap().to_text(&q), "[1,2][4,5][6,7][3][8]");
        assert_eq!(l.ordered_intersection(&l).unwrap(), l);
    }

    #[test]
    fn c_after_p_is_identity() {
        let d = Comp::ints(&[1, 1]).unwrap();
        let p = Partitioning::of_comp(&d);
        assert_eq!(p.to_text(&Quiver::a1()), "[1][2]");
        assert_eq!(p.to_comp(), d);
    }

    #[test]
    fn rejects_bad_blocks() {
        let c = DimVector(vec![3]);
        assert!(Partitioning::from_blocks(&c, &[vec![(0, 1)], vec![(0, 1), (0, 2), (0, 3)]]).is_err());
        assert!(Partitioning::from_blocks(&c, &[vec![(0, 1)], vec![(0, 2)]]).is_err());
        assert!(Partitioning::from_blocks(&c, &[vec![(0, 1), (0, 2), (0, 3)], vec![]]).is_err());
    }

    #[test]
    fn fold_apply_matches_sign_convention() {
        // s_2 in rank 2 sends 2 to −2, i.e. slot 2 of 5 to slot 4
        let s = SignedPerm::simple(2, 2);
        assert_eq!(fold_apply(&s, 5, 2), 4);
        assert_eq!(fold_apply(&s, 5, 4), 2);
        assert_eq!(fold_apply(&s, 5, 3), 3);
        assert_eq!(fold_apply(&s, 5, 1), 1);
    }
}
