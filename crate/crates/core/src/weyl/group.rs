use super::perm::{Perm, SignedPerm};
use crate::poly::{Polynomial, Var};
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Weyl group of one vertex: `Sym_n`, or the hyperoctahedral group of rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Sym(usize),
    Hyp(usize),
}

impl FactorKind {
    pub fn rank(&self) -> usize {
        match *self {
            FactorKind::Sym(n) | FactorKind::Hyp(n) => n,
        }
    }

    /// Indices of all simple reflections.
    pub fn simple_indices(&self) -> Vec<usize> {
        match *self {
            FactorKind::Sym(n) => (1..n).collect(),
            FactorKind::Hyp(n) => (1..=n).collect(),
        }
    }

    pub fn identity(&self) -> Factor {
        match *self {
            FactorKind::Sym(n) => Factor::Sym(Perm::identity(n)),
            FactorKind::Hyp(n) => Factor::Hyp(SignedPerm::identity(n)),
        }
    }

    pub fn simple(&self, j: usize) -> Factor {
        match *self {
            FactorKind::Sym(n) => Factor::Sym(Perm::simple(n, j)),
            FactorKind::Hyp(n) => Factor::Hyp(SignedPerm::simple(n, j)),
        }
    }

    pub fn order(&self) -> u128 {
        let f: u128 = (1..=self.rank() as u128).product();
        match *self {
            FactorKind::Sym(_) => f,
            FactorKind::Hyp(n) => f << n,
        }
    }

    /// Every group element.
    pub fn all(&self) -> Vec<Factor> {
        match *self {
            FactorKind::Sym(n) => super::perm::all_perms(n).into_iter().map(Factor::Sym).collect(),
            FactorKind::Hyp(n) => SignedPerm::all(n).into_iter().map(Factor::Hyp).collect(),
        }
    }
}

/// The component of a Weyl group element at one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Sym(Perm),
    Hyp(SignedPerm),
}

impl Factor {
    pub fn kind(&self) -> FactorKind {
        match self {
            Factor::Sym(p) => FactorKind::Sym(p.n()),
            Factor::Hyp(p) => FactorKind::Hyp(p.n()),
        }
    }

    pub fn length(&self) -> usize {
        match self {
            Factor::Sym(p) => p.length(),
            Factor::Hyp(p) => p.length(),
        }
    }

    pub fn compose(&self, other: &Factor) -> Factor {
        match (self, other) {
            (Factor::Sym(a), Factor::Sym(b)) => Factor::Sym(a.compose(b)),
            (Factor::Hyp(a), Factor::Hyp(b)) => Factor::Hyp(a.compose(b)),
            _ => panic!("composing factors of different types"),
        }
    }

    pub fn inverse(&self) -> Factor {
        match self {
            Factor::Sym(p) => Factor::Sym(p.inverse()),
            Factor::Hyp(p) => Factor::Hyp(p.inverse()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Factor::Sym(p) => p.is_identity(),
            Factor::Hyp(p) => p.is_identity(),
        }
    }

    pub fn has_right_descent(&self, j: usize) -> bool {
        match self {
            Factor::Sym(p) => p.has_right_descent(j),
            Factor::Hyp(p) => p.has_right_descent(j),
        }
    }

    pub fn has_left_descent(&self, j: usize) -> bool {
        match self {
            Factor::Sym(p) => p.has_left_descent(j),
            Factor::Hyp(p) => p.has_left_descent(j),
        }
    }

    /// Image of position `k` as (position, sign flipped); positions beyond the rank are fixed.
    pub fn image(&self, k: usize) -> (usize, bool) {
        if k > self.kind().rank() {
            return (k, false);
        }
        match self {
            Factor::Sym(p) => (p.apply(k), false),
            Factor::Hyp(p) => {
                let m = p.apply(k);
                (m.unsigned_abs() as usize, m < 0)
            }
        }
    }

    pub fn reduced_word(&self) -> Vec<usize> {
        match self {
            Factor::Sym(p) => p.reduced_word(),
            Factor::Hyp(p) => p.reduced_word(),
        }
    }

    pub fn one_line(&self) -> Vec<i32> {
        match self {
            Factor::Sym(p) => p.0.iter().map(|&k| k as i32).collect(),
            Factor::Hyp(p) => p.0.iter().map(|&k| k as i32).collect(),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Sym(p) => write!(f, "{}", p),
            Factor::Hyp(p) => write!(f, "{}", p),
        }
    }
}

/// Element of a product of per-vertex Weyl groups, one factor per vertex in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement(pub Vec<Factor>);

impl WeylElement {
    pub fn identity(kinds: &[FactorKind]) -> WeylElement {
        WeylElement(kinds.iter().map(|k| k.identity()).collect())
    }

    /// The simple reflection `s_j(vertex)`.
    pub fn simple(kinds: &[FactorKind], vertex: usize, j: usize) -> WeylElement {
        let mut w = WeylElement::identity(kinds);
        w.0[vertex] = kinds[vertex].simple(j);
        w
    }

    /// Builds an element from per-vertex words in product order.
    pub fn from_words(kinds: &[FactorKind], words: &[Vec<usize>]) -> WeylElement {
        WeylElement(
            kinds
                .iter()
                .zip(words)
                .map(|(k, word)| word.iter().fold(k.identity(), |acc, &j| acc.compose(&k.simple(j))))
                .collect(),
        )
    }

    pub fn kinds(&self) -> Vec<FactorKind> {
        self.0.iter().map(|f| f.kind()).collect()
    }

    pub fn length(&self) -> usize {
        self.0.iter().map(|f| f.length()).sum()
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement(self.0.iter().zip(&other.0).map(|(a, b)| a.compose(b)).collect())
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement(self.0.iter().map(|f| f.inverse()).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|f| f.is_identity())
    }

    /// Concatenated one-line forms; the secondary sort key for representatives.
    pub fn one_line(&self) -> Vec<i32> {
        self.0.iter().flat_map(|f| f.one_line()).collect()
    }

    /// The signed image `w·x_k(i) = ±x_{w(k)}(i)`.
    pub fn image(&self, v: Var) -> (Var, bool) {
        let f = &self.0[v.vertex as usize];
        let (k, neg) = f.image(v.index as usize);
        (Var::new(v.vertex as usize, k), neg)
    }

    pub fn act(&self, p: &Polynomial) -> Polynomial {
        if self.is_identity() {
            return p.clone();
        }
        p.substitute(|v| self.image(v))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// Standard parabolic subgroup of a product of per-vertex Weyl groups, given by its
/// simple reflections at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    pub kinds: Vec<FactorKind>,
    pub gens: Vec<Vec<usize>>,
}

impl Parabolic {
    pub fn whole(kinds: &[FactorKind]) -> Parabolic {
        Parabolic { kinds: kinds.to_vec(), gens: kinds.iter().map(|k| k.simple_indices()).collect() }
    }

    /// Type-A blocks at every vertex (vertex `i` has blocks `blocks[i]`), and for
    /// hyperoctahedral factors a signed tail of the given rank after the blocks.
    pub fn from_blocks(kinds: &[FactorKind], blocks: &[Vec<usize>], tails: &[usize]) -> Parabolic {
        let mut gens = Vec::new();
        for (i, kind) in kinds.iter().enumerate() {
            let mut g = Vec::new();
            let mut start = 0;
            for &b in &blocks[i] {
                for j in start + 1..start + b {
                    g.push(j);
                }
                start += b;
            }
            if let FactorKind::Hyp(n) = *kind {
                let t = tails[i];
                assert_eq!(start + t, n, "blocks and tail must fill the rank");
                for j in n - t + 1..=n {
                    g.push(j);
                }
            } else {
                assert_eq!(start, kind.rank(), "blocks must fill the rank");
            }
            gens.push(g);
        }
        Parabolic { kinds: kinds.to_vec(), gens }
    }

    pub fn contains_generator(&self, vertex: usize, j: usize) -> bool {
        self.gens[vertex].contains(&j)
    }

    /// Whether `w` lies in the subgroup (its reduced words only use the generators).
    pub fn contains(&self, w: &WeylElement) -> bool {
        w.0.iter().enumerate().all(|(i, f)| f.reduced_word().iter().all(|j| self.gens[i].contains(j)))
    }

    pub fn generators(&self) -> Vec<WeylElement> {
        let mut out = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            for &j in g {
                out.push(WeylElement::simple(&self.kinds, i, j));
            }
        }
        out
    }

    /// Every element of the subgroup.
    pub fn elements(&self) -> Vec<WeylElement> {
        let per: Vec<Vec<Factor>> = (0..self.kinds.len())
            .map(|i| closure(&self.kinds[i], &self.gens[i], |_| true))
            .collect();
        product(per)
    }

    /// Minimal length representatives of the left cosets `w·small` inside `self`.
    pub fn min_left_coset_reps(&self, small: &Parabolic) -> Vec<WeylElement> {
        let per: Vec<Vec<Factor>> = (0..self.kinds.len())
            .map(|i| {
                let sg = &small.gens[i];
                closure(&self.kinds[i], &self.gens[i], |f| sg.iter().all(|&j| !f.has_right_descent(j)))
            })
            .collect();
        sort_elements(product(per))
    }

    pub fn longest_element(&self) -> WeylElement {
        let per: Vec<Vec<Factor>> = (0..self.kinds.len())
            .map(|i| {
                let all = closure(&self.kinds[i], &self.gens[i], |_| true);
                vec![all.into_iter().max_by_key(|f| f.length()).unwrap()]
            })
            .collect();
        product(per).pop().unwrap()
    }

    pub fn order(&self) -> u128 {
        self.elements().len() as u128
    }
}

/// Elements reachable from the identity by left multiplication with `gens`, going up in
/// length, staying inside the lower set cut out by `keep`.
fn closure(kind: &FactorKind, gens: &[usize], keep: impl Fn(&Factor) -> bool) -> Vec<Factor> {
    let id = kind.identity();
    let mut seen: HashSet<Factor> = HashSet::new();
    let mut out = vec![id.clone()];
    let mut q = VecDeque::new();
    seen.insert(id.clone());
    q.push_back(id);
    let simples: Vec<Factor> = gens.iter().map(|&j| kind.simple(j)).collect();
    while let Some(w) = q.pop_front() {
        let l = w.length();
        for s in &simples {
            let v = s.compose(&w);
            if v.length() == l + 1 && !seen.contains(&v) && keep(&v) {
                seen.insert(v.clone());
                out.push(v.clone());
                q.push_back(v);
            }
        }
    }
    out
}

fn product(per: Vec<Vec<Factor>>) -> Vec<WeylElement> {
    let mut acc: Vec<Vec<Factor>> = vec![Vec::new()];
    for list in per {
        let mut next = Vec::with_capacity(acc.len() * list.len());
        for a in &acc {
            for f in &list {
                let mut v = a.clone();
                v.push(f.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc.into_iter().map(WeylElement).collect()
}

/// Sorts by length, then by one-line form.
pub fn sort_elements(mut v: Vec<WeylElement>) -> Vec<WeylElement> {
    v.sort_by_cached_key(|w| (w.length(), w.one_line()));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_orders() {
        let kinds = [FactorKind::Sym(4), FactorKind::Hyp(3)];
        let p = Parabolic::from_blocks(&kinds, &[vec![2, 2], vec![1]], &[0, 2]);
        assert_eq!(p.order(), 4 * 8);
        let whole = Parabolic::whole(&kinds);
        assert_eq!(whole.order(), 24 * 48);
        let reps = whole.min_left_coset_reps(&p);
        assert_eq!(reps.len() as u128, whole.order() / p.order());
    }

    #[test]
    fn closure_reaches_longest() {
        let kinds = [FactorKind::Hyp(3)];
        let w0 = Parabolic::whole(&kinds).longest_element();
        assert_eq!(w0.length(), 9);
        assert_eq!(w0.0[0], Factor::Hyp(SignedPerm(vec![-1, -2, -3])));
    }
}
