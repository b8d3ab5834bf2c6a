use std::fmt;

/// Permutation of `{1..n}` in one-line notation: `w[k-1] = w(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((1..=n as u16).collect())
    }

    pub fn from_one_line(v: Vec<u16>) -> Option<Perm> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &x in &v {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(v))
    }

    /// The simple transposition `s_j = (j, j+1)`.
    pub fn simple(n: usize, j: usize) -> Perm {
        assert!(j >= 1 && j < n, "s_{} is not a simple reflection of Sym_{}", j, n);
        let mut p = Perm::identity(n);
        p.0.swap(j - 1, j);
        p
    }

    /// Product of simple transpositions, written left to right as in `s_3 s_4`.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter().fold(Perm::identity(n), |acc, &j| acc.compose(&Perm::simple(n, j)))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1] as usize
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&k| self.0[k as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &k) in self.0.iter().enumerate() {
            inv[k as usize - 1] = i as u16 + 1;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &k)| k as usize == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut l = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn has_right_descent(&self, j: usize) -> bool {
        self.0[j - 1] > self.0[j]
    }

    pub fn has_left_descent(&self, j: usize) -> bool {
        self.inverse().has_right_descent(j)
    }

    /// Reduced word in product order: `self = s_{w[0]} s_{w[1]} ⋯`. The letters are
    /// found from the right by always splitting off the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.clone();
        let mut rev = Vec::new();
        while let Some(j) = (1..v.n()).find(|&j| v.has_right_descent(j)) {
            v.0.swap(j - 1, j);
            rev.push(j);
        }
        rev.reverse();
        rev
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Signed permutation of `{1..n}`: `w[k-1] = ±m` means `w(k) = ±m`. The generator `s_n`
/// changes the sign of `n`; `s_j` (`j < n`) swaps `j` and `j+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(pub Vec<i16>);

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm((1..=n as i16).collect())
    }

    pub fn from_one_line(v: Vec<i16>) -> Option<SignedPerm> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &x in &v {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return None;
            }
            seen[a] = true;
        }
        Some(SignedPerm(v))
    }

    pub fn simple(n: usize, j: usize) -> SignedPerm {
        assert!(j >= 1 && j <= n, "s_{} is not a simple reflection of the rank {} signed group", j, n);
        let mut p = SignedPerm::identity(n);
        if j == n {
            p.0[n - 1] = -p.0[n - 1];
        } else {
            p.0.swap(j - 1, j);
        }
        p
    }

    pub fn from_word(n: usize, word: &[usize]) -> SignedPerm {
        word.iter().fold(SignedPerm::identity(n), |acc, &j| acc.compose(&SignedPerm::simple(n, j)))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, k: usize) -> i16 {
        self.0[k - 1]
    }

    fn apply_signed(&self, k: i16) -> i16 {
        let img = self.0[k.unsigned_abs() as usize - 1];
        if k < 0 {
            -img
        } else {
            img
        }
    }

    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm(other.0.iter().map(|&k| self.apply_signed(k)).collect())
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0i16; self.0.len()];
        for (i, &k) in self.0.iter().enumerate() {
            let a = k.unsigned_abs() as usize;
            inv[a - 1] = if k < 0 { -(i as i16 + 1) } else { i as i16 + 1 };
        }
        SignedPerm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &k)| k as usize == i + 1)
    }

    pub fn is_unsigned(&self) -> bool {
        self.0.iter().all(|&k| k > 0)
    }

    /// Coxeter length: the number of positive roots `e_k ± e_l (k<l)`, `e_k` sent to
    /// negative roots, where a root is positive if its lowest-index coefficient is.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let n = v.len();
        let mut l = v.iter().filter(|&&k| k < 0).count();
        for k in 0..n {
            for m in k + 1..n {
                let (a, b) = (v[k], v[m]);
                // image of e_k - e_m is sgn(a) e_|a| - sgn(b) e_|b|; of e_k + e_m the same with +
                let first_is_a = a.unsigned_abs() < b.unsigned_abs();
                let minus = if first_is_a { a > 0 } else { b < 0 };
                let plus = if first_is_a { a > 0 } else { b > 0 };
                l += usize::from(!minus) + usize::from(!plus);
            }
        }
        l
    }

    pub fn has_right_descent(&self, j: usize) -> bool {
        let n = self.n();
        if j == n {
            self.0[n - 1] < 0
        } else {
            // s_j sends the simple root e_j - e_{j+1} to its negative
            let (a, b) = (self.0[j - 1], self.0[j]);
            if a.unsigned_abs() < b.unsigned_abs() {
                a < 0
            } else {
                b > 0
            }
        }
    }

    pub fn has_left_descent(&self, j: usize) -> bool {
        self.inverse().has_right_descent(j)
    }

    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.clone();
        let n = v.n();
        let mut rev = Vec::new();
        while let Some(j) = (1..=n).find(|&j| v.has_right_descent(j)) {
            v = v.compose(&SignedPerm::simple(n, j));
            rev.push(j);
        }
        rev.reverse();
        rev
    }

    /// All `2^n n!` elements.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut out = Vec::new();
        for p in all_perms(n) {
            for mask in 0..(1u32 << n) {
                out.push(SignedPerm(
                    p.0.iter()
                        .enumerate()
                        .map(|(i, &k)| if mask >> i & 1 == 1 { -(k as i16) } else { k as i16 })
                        .collect(),
                ));
            }
        }
        out
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = Perm::identity(n).0;
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    /// Word length by breadth-first search from the identity.
    fn bfs_lengths(n: usize) -> HashMap<SignedPerm, usize> {
        let mut dist = HashMap::new();
        let mut q = VecDeque::new();
        dist.insert(SignedPerm::identity(n), 0);
        q.push_back(SignedPerm::identity(n));
        while let Some(w) = q.pop_front() {
            let d = dist[&w];
            for j in 1..=n {
                let v = w.compose(&SignedPerm::simple(n, j));
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), d + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    #[test]
    fn signed_length_matches_word_length() {
        for n in 1..=4 {
            let dist = bfs_lengths(n);
            assert_eq!(dist.len(), SignedPerm::all(n).len());
            for (w, d) in dist {
                assert_eq!(w.length(), d, "{}", w);
                assert_eq!(w.reduced_word().len(), d);
                assert_eq!(SignedPerm::from_word(n, &w.reduced_word()), w);
                for j in 1..=n {
                    let longer = w.compose(&SignedPerm::simple(n, j)).length() > d;
                    assert_eq!(w.has_right_descent(j), !longer);
                }
            }
        }
    }

    #[test]
    fn perm_words_and_lengths() {
        for w in all_perms(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Perm::from_word(5, &word), w);
            assert_eq!(w.compose(&w.inverse()), Perm::identity(5));
        }
        assert_eq!(all_perms(4).len(), 24);
    }

    #[test]
    fn composition_is_function_composition() {
        // s_3 s_4 s_5 s_6 sends 7 to 3
        let w = Perm::from_word(8, &[3, 4, 5, 6]);
        assert_eq!(w.0, vec![1, 2, 4, 5, 6, 7, 3, 8]);
        // canonical word splits off the smallest right descent first
        let u = Perm::from_word(5, &[3, 2]);
        assert_eq!(u.reduced_word(), vec![3, 2]);
    }
}
