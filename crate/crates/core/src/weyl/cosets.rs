//! Minimal length double coset representatives `W_e \ W / W_d`.

use super::group::{sort_elements, Parabolic, WeylElement};
use std::collections::{HashMap, HashSet};

/// Elements of `whole` without left descents in `left` and without right descents in
/// `right`: exactly one per double coset, of minimal length in it. Sorted by length,
/// then one-line form.
pub fn min_double_coset_reps(whole: &Parabolic, left: &Parabolic, right: &Parabolic) -> Vec<WeylElement> {
    let reps = whole.min_left_coset_reps(right);
    reps.into_iter()
        .filter(|w| {
            w.0.iter().enumerate().all(|(i, f)| left.gens[i].iter().all(|&j| !f.has_left_descent(j)))
        })
        .collect()
}

/// Independent check: partitions every element of `whole` into double cosets by closing
/// under the generators of `left` (on the left) and `right` (on the right), and returns
/// the shortest element of each class.
pub fn brute_force_double_coset_reps(whole: &Parabolic, left: &Parabolic, right: &Parabolic) -> Vec<WeylElement> {
    let all = sort_elements(whole.elements());
    let lg = left.generators();
    let rg = right.generators();
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut reps = Vec::new();
    for w in all {
        if seen.contains(&w) {
            continue;
        }
        let mut stack = vec![w.clone()];
        seen.insert(w.clone());
        while let Some(x) = stack.pop() {
            for s in &lg {
                let y = s.compose(&x);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
            for s in &rg {
                let y = x.compose(s);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        reps.push(w);
    }
    reps
}

/// The elements of a parabolic subgroup in sorted order, with the index of `s·w` and
/// `w·s` for every generator `s`, so that double cosets can be partitioned on indices.
pub struct GroupTable {
    elements: Vec<WeylElement>,
    gens: Vec<(usize, usize)>,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
}

impl GroupTable {
    pub fn new(whole: &Parabolic) -> GroupTable {
        let elements = sort_elements(whole.elements());
        let index: HashMap<&WeylElement, u32> = elements.iter().enumerate().map(|(i, w)| (w, i as u32)).collect();
        let mut gens = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (v, g) in whole.gens.iter().enumerate() {
            for &j in g {
                let s = WeylElement::simple(&whole.kinds, v, j);
                gens.push((v, j));
                left.push(elements.iter().map(|w| index[&s.compose(w)]).collect());
                right.push(elements.iter().map(|w| index[&w.compose(&s)]).collect());
            }
        }
        GroupTable { elements, gens, left, right }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The shortest element of every double coset `left·w·right`, found by closing each
    /// unvisited element under the generators of both subgroups.
    pub fn double_coset_reps(&self, left: &Parabolic, right: &Parabolic) -> Vec<WeylElement> {
        let pick = |p: &Parabolic, table: &[Vec<u32>]| -> Vec<usize> {
            (0..table.len()).filter(|&g| p.contains_generator(self.gens[g].0, self.gens[g].1)).collect()
        };
        let (lg, rg) = (pick(left, &self.left), pick(right, &self.right));
        let mut seen = vec![false; self.elements.len()];
        let mut reps = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.elements.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start as u32);
            while let Some(x) = stack.pop() {
                let moves = lg.iter().map(|&g| self.left[g][x as usize]).chain(rg.iter().map(|&g| self.right[g][x as usize]));
                for y in moves {
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        stack.push(y);
                    }
                }
            }
            reps.push(self.elements[start].clone());
        }
        reps
    }
}

/// Brute-force check that `w` is no longer than any `x w y` with `x ∈ left`, `y ∈ right`.
pub fn is_minimal_in_double_coset(w: &WeylElement, left: &Parabolic, right: &Parabolic) -> bool {
    let l = w.length();
    let lx = left.elements();
    let ry = right.elements();
    lx.iter().all(|x| ry.iter().all(|y| x.compose(w).compose(y).length() >= l))
}
