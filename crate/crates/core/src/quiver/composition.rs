use super::dims::{split_top, DimVector};
use crate::error::{bail, Result};
use std::fmt;

/// Ordered list of nonzero dimension vectors (a vector composition of their sum).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Comp {
    parts: Vec<DimVector>,
}

impl Comp {
    pub fn new(parts: Vec<DimVector>) -> Result<Comp> {
        if parts.is_empty() {
            bail!(Argument, "a vector composition needs at least one part");
        }
        let n = parts[0].len();
        for p in &parts {
            if p.is_zero() {
                bail!(Argument, "vector composition with a zero part");
            }
            if p.len() != n {
                bail!(Structure, "parts of different lengths");
            }
        }
        Ok(Comp { parts })
    }

    /// One-vertex shorthand.
    pub fn ints(parts: &[u32]) -> Result<Comp> {
        Comp::new(parts.iter().map(|&p| DimVector(vec![p])).collect())
    }

    pub fn parts(&self) -> &[DimVector] {
        &self.parts
    }

    pub fn part(&self, k: usize) -> &DimVector {
        &self.parts[k]
    }

    /// Number of parts `ℓ_d`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n_vertices(&self) -> usize {
        self.parts[0].len()
    }

    /// `⟨d⟩`.
    pub fn total(&self) -> DimVector {
        let mut t = DimVector::zero(self.n_vertices());
        for p in &self.parts {
            t = &t + p;
        }
        t
    }

    /// Partial sums `d°_r(i)` for `r = 0..=ℓ` at vertex `i`.
    pub fn partial_sums(&self, i: usize) -> Vec<u32> {
        let mut out = vec![0];
        for p in &self.parts {
            out.push(out.last().unwrap() + p.get(i));
        }
        out
    }

    /// Part sizes at vertex `i`.
    pub fn at(&self, i: usize) -> Vec<u32> {
        self.parts.iter().map(|p| p.get(i)).collect()
    }

    /// Concatenation `d ∪ e`.
    pub fn concat(&self, other: &Comp) -> Comp {
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().cloned());
        Comp { parts }
    }

    /// `∧_β(d)`: sums consecutive blocks of sizes `β`.
    pub fn wedge(&self, beta: &[usize]) -> Result<Comp> {
        if beta.iter().any(|&b| b == 0) || beta.iter().sum::<usize>() != self.len() {
            bail!(Argument, "{:?} is not a composition of {}", beta, self.len());
        }
        let mut parts = Vec::new();
        let mut k = 0;
        for &b in beta {
            let mut s = DimVector::zero(self.n_vertices());
            for p in &self.parts[k..k + b] {
                s = &s + p;
            }
            parts.push(s);
            k += b;
        }
        Ok(Comp { parts })
    }

    /// `∧_k`: merges parts `k` and `k+1` (1-based).
    pub fn wedge_at(&self, k: usize) -> Result<Comp> {
        if k == 0 || k >= self.len() {
            bail!(Argument, "cannot merge parts {} and {} of a composition of length {}", k, k + 1, self.len());
        }
        let mut beta = vec![1; self.len() - 1];
        beta[k - 1] = 2;
        self.wedge(&beta)
    }

    /// The unique `β` with `∧_β(self) = other`, if `self` refines `other`.
    pub fn refines(&self, other: &Comp) -> Option<Vec<usize>> {
        if self.n_vertices() != other.n_vertices() {
            return None;
        }
        let mut beta = Vec::new();
        let mut k = 0;
        for target in &other.parts {
            let mut s = DimVector::zero(self.n_vertices());
            let start = k;
            while s != *target {
                if k == self.len() {
                    return None;
                }
                s = &s + &self.parts[k];
                k += 1;
                // overshooting the target in any coordinate means no refinement
                target.checked_sub(&s)?;
            }
            if k == start {
                return None;
            }
            beta.push(k - start);
        }
        if k != self.len() {
            return None;
        }
        Some(beta)
    }

    /// Swaps parts `k` and `k+1` (the action of `s_k`).
    pub fn swap(&self, k: usize) -> Comp {
        let mut parts = self.parts.clone();
        parts.swap(k - 1, k);
        Comp { parts }
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_text()).collect();
        format!("({})", parts.join(","))
    }

    pub fn parse(s: &str, n: usize) -> Result<Comp> {
        Comp::parse_named(s, n, &[])
    }

    /// Parts may be written as linear combinations of `names`.
    pub fn parse_named(s: &str, n: usize, names: &[String]) -> Result<Comp> {
        let s = s.trim();
        let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) else {
            bail!(Parse, "composition {:?} must be enclosed in parentheses", s)
        };
        let parts =
            split_top(inner, ',').into_iter().map(|p| DimVector::parse_named(p, n, names)).collect::<Result<Vec<_>>>()?;
        Comp::new(parts)
    }

    /// All vector compositions of `c`.
    pub fn all_of(c: &DimVector) -> Vec<Comp> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: &DimVector, cur: &mut Vec<DimVector>, out: &mut Vec<Comp>) {
            if rest.is_zero() {
                if !cur.is_empty() {
                    out.push(Comp { parts: cur.clone() });
                }
                return;
            }
            for p in sub_vectors(rest) {
                if p.is_zero() {
                    continue;
                }
                cur.push(p.clone());
                rec(&(rest - &p), cur, out);
                cur.pop();
            }
        }
        rec(c, &mut cur, &mut out);
        out.sort();
        out
    }
}

/// All `0 ≤ v ≤ c` componentwise.
pub fn sub_vectors(c: &DimVector) -> Vec<DimVector> {
    let mut out = vec![Vec::new()];
    for &ci in &c.0 {
        let mut next = Vec::new();
        for v in &out {
            for x in 0..=ci {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out.into_iter().map(DimVector).collect()
}

impl fmt::Display for Comp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Isotropic vector composition `(d_1,…,d_ℓ | d_∞)` with `ℓ ≥ 0` and `d_∞` θ-fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoComp {
    finite: Vec<DimVector>,
    inf: DimVector,
}

impl IsoComp {
    /// Checks nonzero finite parts and `θ(d_∞) = d_∞`; the parity condition at
    /// symplectic-type vertices is checked by [`crate::quiver::Quiver::check_iso`].
    pub fn new(finite: Vec<DimVector>, inf: DimVector, vertex_map: &[usize]) -> Result<IsoComp> {
        for p in &finite {
            if p.is_zero() {
                bail!(Argument, "isotropic composition with a zero finite part");
            }
            if p.len() != inf.len() {
                bail!(Structure, "parts of different lengths");
            }
        }
        if inf.len() != vertex_map.len() {
            bail!(Structure, "dimension vector length does not match the quiver");
        }
        if !inf.is_theta_fixed(vertex_map) {
            bail!(Argument, "infinity part {} is not θ-fixed", inf);
        }
        Ok(IsoComp { finite, inf })
    }

    pub fn finite(&self) -> &[DimVector] {
        &self.finite
    }

    pub fn part(&self, k: usize) -> &DimVector {
        &self.finite[k]
    }

    pub fn inf(&self) -> &DimVector {
        &self.inf
    }

    /// `ℓ_d`, the number of finite parts.
    pub fn len(&self) -> usize {
        self.finite.len()
    }

    pub fn is_empty(&self) -> bool {
        self.finite.is_empty()
    }

    pub fn n_vertices(&self) -> usize {
        self.inf.len()
    }

    /// `⟨d⟩_θ = d_∞ + Σ D(d_j)`.
    pub fn total(&self, vertex_map: &[usize]) -> DimVector {
        let mut t = self.inf.clone();
        for p in &self.finite {
            t = &t + &p.double(vertex_map);
        }
        t
    }

    /// The finite part `d^f` as an ordinary composition (`None` if `ℓ = 0`).
    pub fn finite_comp(&self) -> Option<Comp> {
        if self.finite.is_empty() {
            None
        } else {
            Some(Comp { parts: self.finite.clone() })
        }
    }

    /// `D(d) = (d_1,…,d_ℓ, d_∞, θd_ℓ,…,θd_1)` as a list (the middle part may be zero).
    pub fn doubled_parts(&self, vertex_map: &[usize]) -> Vec<DimVector> {
        let mut out = self.finite.clone();
        out.push(self.inf.clone());
        for p in self.finite.iter().rev() {
            out.push(p.theta(vertex_map));
        }
        out
    }

    /// `∧^θ_β`: `β` is a composition of `ℓ+1`; its last block collapses into `d_∞`.
    pub fn theta_wedge(&self, beta: &[usize], vertex_map: &[usize]) -> Result<IsoComp> {
        if beta.iter().any(|&b| b == 0) || beta.iter().sum::<usize>() != self.len() + 1 {
            bail!(Argument, "{:?} is not a composition of {}", beta, self.len() + 1);
        }
        let n = self.n_vertices();
        let mut finite = Vec::new();
        let mut k = 0;
        for &b in &beta[..beta.len() - 1] {
            let mut s = DimVector::zero(n);
            for p in &self.finite[k..k + b] {
                s = &s + p;
            }
            finite.push(s);
            k += b;
        }
        let mut inf = self.inf.clone();
        for p in &self.finite[k..] {
            inf = &inf + &p.double(vertex_map);
        }
        Ok(IsoComp { finite, inf })
    }

    /// `∧^θ_k`: for `k < ℓ` merges finite parts `k`, `k+1`; for `k = ℓ` absorbs `d_ℓ` into `d_∞`.
    pub fn theta_wedge_at(&self, k: usize, vertex_map: &[usize]) -> Result<IsoComp> {
        if k == 0 || k > self.len() {
            bail!(Argument, "no elementary θ-coarsening at position {} for ℓ = {}", k, self.len());
        }
        let mut beta = vec![1; self.len()];
        beta[k - 1] = 2;
        self.theta_wedge(&beta, vertex_map)
    }

    /// The unique `β` with `∧^θ_β(self) = other`.
    pub fn refines(&self, other: &IsoComp, vertex_map: &[usize]) -> Option<Vec<usize>> {
        if other.len() > self.len() {
            return None;
        }
        compositions_into(self.len() + 1, other.len() + 1)
            .into_iter()
            .find(|beta| self.theta_wedge(beta, vertex_map).map_or(false, |e| e == *other))
    }

    /// The action of `s_k` (`k < ℓ` swaps parts, `k = ℓ` replaces `d_ℓ` by `θ(d_ℓ)`).
    pub fn reflect(&self, k: usize, vertex_map: &[usize]) -> IsoComp {
        let mut finite = self.finite.clone();
        if k == self.len() {
            finite[k - 1] = finite[k - 1].theta(vertex_map);
        } else {
            finite.swap(k - 1, k);
        }
        IsoComp { finite, inf: self.inf.clone() }
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.finite.iter().map(|p| p.to_text()).collect();
        format!("({}|{})", parts.join(","), self.inf.to_text())
    }

    pub fn parse(s: &str, vertex_map: &[usize]) -> Result<IsoComp> {
        IsoComp::parse_named(s, vertex_map, &[])
    }

    pub fn parse_named(s: &str, vertex_map: &[usize], names: &[String]) -> Result<IsoComp> {
        let n = vertex_map.len();
        let s = s.trim();
        let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) else {
            bail!(Parse, "isotropic composition {:?} must be enclosed in parentheses", s)
        };
        let halves = split_top(inner, '|');
        if halves.len() != 2 {
            bail!(Parse, "isotropic composition {:?} needs exactly one '|'", s);
        }
        let finite = if halves[0].trim().is_empty() {
            Vec::new()
        } else {
            split_top(halves[0], ',').into_iter().map(|p| DimVector::parse_named(p, n, names)).collect::<Result<Vec<_>>>()?
        };
        let inf = DimVector::parse_named(halves[1], n, names)?;
        IsoComp::new(finite, inf, vertex_map)
    }

    /// All isotropic compositions with `⟨d⟩_θ = c` (no parity filtering).
    pub fn all_of(c: &DimVector, vertex_map: &[usize]) -> Vec<IsoComp> {
        let mut out = Vec::new();
        for inf in super::composition::sub_vectors(c) {
            if !inf.is_theta_fixed(vertex_map) {
                continue;
            }
            let rest = c - &inf;
            // finite parts a_j with Σ D(a_j) = rest
            let mut cur = Vec::new();
            fn rec(rest: &DimVector, vm: &[usize], inf: &DimVector, cur: &mut Vec<DimVector>, out: &mut Vec<IsoComp>) {
                if rest.is_zero() {
                    out.push(IsoComp { finite: cur.clone(), inf: inf.clone() });
                    return;
                }
                for p in sub_vectors(rest) {
                    if p.is_zero() {
                        continue;
                    }
                    if let Some(r) = rest.checked_sub(&p.double(vm)) {
                        cur.push(p);
                        rec(&r, vm, inf, cur, out);
                        cur.pop();
                    }
                }
            }
            rec(&rest, vertex_map, &inf, &mut cur, &mut out);
        }
        out.sort();
        out
    }
}

/// Compositions of `n` into exactly `m` positive parts.
pub fn compositions_into(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for b in 1..=left {
            cur.push(b);
            rec(left - b, parts - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, m, &mut cur, &mut out);
    out
}

impl fmt::Display for IsoComp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
