use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// The variable `x_index(vertex)`; `vertex` is the declaration index of the vertex and
/// `index` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub vertex: u16,
    pub index: u16,
}

impl Var {
    pub const fn new(vertex: usize, index: usize) -> Var {
        Var { vertex: vertex as u16, index: index as u16 }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.vertex + 1, self.index)
    }
}

/// Sparse exponent vector, sorted by variable, no zero exponents.
///
/// Ordered by total degree, ties broken lexicographically with later variables
/// counting as larger (so `x[1,2] > x[1,1]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::from_pairs([(v, 1)])
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs; repeated variables add up.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut v: SmallVec<[(Var, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        let mut j = 0;
        let b = &other.0;
        for &(v, e) in self.0.iter() {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                if b[j].1 > e {
                    return None;
                }
                if e > b[j].1 {
                    out.push((v, e - b[j].1));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Applies a signed variable substitution; returns the image monomial and whether
    /// the sign flipped.
    pub fn substitute(&self, map: &impl Fn(Var) -> (Var, bool)) -> (Monomial, bool) {
        let mut neg = false;
        let m = Monomial::from_pairs(self.0.iter().map(|&(v, e)| {
            let (w, s) = map(v);
            if s && e % 2 == 1 {
                neg = !neg;
            }
            (w, e)
        }));
        (m, neg)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (a.len(), b.len());
        loop {
            match (i, j) {
                (0, 0) => return Ordering::Equal,
                (0, _) => return Ordering::Less,
                (_, 0) => return Ordering::Greater,
                _ => {}
            }
            let (x, y) = (a[i - 1], b[j - 1]);
            match x.0.cmp(&y.0) {
                Ordering::Equal => match x.1.cmp(&y.1) {
                    Ordering::Equal => {
                        i -= 1;
                        j -= 1;
                    }
                    o => return o,
                },
                o => return o,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Var {
        Var::new(0, i)
    }

    #[test]
    fn order_is_graded_then_lex_from_last_variable() {
        let m1 = Monomial::var(x(1));
        let m2 = Monomial::var(x(2));
        assert!(m2 > m1);
        let sq = Monomial::from_pairs([(x(1), 2)]);
        assert!(sq > m2);
        let mixed = Monomial::from_pairs([(x(1), 1), (x(2), 1)]);
        assert!(Monomial::from_pairs([(x(2), 2)]) > mixed);
        assert!(mixed > sq);
    }

    #[test]
    fn divide_and_multiply() {
        let a = Monomial::from_pairs([(x(1), 2), (x(3), 1)]);
        let b = Monomial::from_pairs([(x(1), 1)]);
        let q = a.div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(b.div(&a).is_none());
        assert!(Monomial::var(x(2)).div(&Monomial::var(x(1))).is_none());
    }
}
