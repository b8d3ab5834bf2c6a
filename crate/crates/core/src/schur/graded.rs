//! Elements of `⊕_d Λ_d`: finitely supported maps from (isotropic) compositions of a
//! fixed total to polynomials.

use crate::error::{bail, Result};
use crate::poly::{Polynomial, Rat};
use crate::quiver::{Comp, IsoComp};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

/// Index set of the graded components: [`Comp`] for ordinary and [`IsoComp`] for mixed
/// quiver Schur algebras.
pub trait Key: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn to_text(&self) -> String;
}

impl Key for Comp {
    fn to_text(&self) -> String {
        Comp::to_text(self)
    }
}

impl Key for IsoComp {
    fn to_text(&self) -> String {
        IsoComp::to_text(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded<K: Key> {
    comps: BTreeMap<K, Polynomial>,
}

/// An element of the polynomial representation `⊕_d Λ_d` of a quiver Schur algebra.
pub type GradedElement = Graded<Comp>;
/// An element of `⊕_d θΛ_d`.
pub type ThetaElement = Graded<IsoComp>;

impl<K: Key> Default for Graded<K> {
    fn default() -> Self {
        Graded { comps: BTreeMap::new() }
    }
}

impl<K: Key> Graded<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K, f: Polynomial) -> Self {
        let mut g = Self::zero();
        g.add(key, &f);
        g
    }

    pub fn get(&self, key: &K) -> Option<&Polynomial> {
        self.comps.get(key)
    }

    /// The component at `key`, zero if absent.
    pub fn component(&self, key: &K) -> Polynomial {
        self.comps.get(key).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// Adds `f` to the component at `key`, dropping it if the sum vanishes.
    pub fn add(&mut self, key: K, f: &Polynomial) {
        if f.is_zero() {
            return;
        }
        let slot = self.comps.entry(key.clone()).or_insert_with(Polynomial::zero);
        slot.add_assign_ref(f);
        if slot.is_zero() {
            self.comps.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Polynomial)> {
        self.comps.iter()
    }

    pub fn support(&self) -> Vec<K> {
        self.comps.keys().cloned().collect()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = Self::zero();
        for (k, f) in &self.comps {
            out.add(k.clone(), &f.scale(s));
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, f) in &other.comps {
            out.add(k.clone(), f);
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, f) in &other.comps {
            out.add(k.clone(), &-f);
        }
        out
    }

    /// The restriction to one component.
    pub fn project(&self, key: &K) -> Self {
        match self.comps.get(key) {
            Some(f) => Self::single(key.clone(), f.clone()),
            None => Self::zero(),
        }
    }

    /// JSON object mapping composition text to canonical polynomial text.
    pub fn to_json(&self, names: &[String]) -> Value {
        let mut m = Map::new();
        for (k, f) in &self.comps {
            m.insert(k.to_text(), Value::String(f.to_text(names)));
        }
        Value::Object(m)
    }

    /// Inverse of [`Graded::to_json`], given a parser for the keys.
    pub fn from_json(v: &Value, names: &[String], parse_key: impl Fn(&str) -> Result<K>) -> Result<Self> {
        let Some(obj) = v.as_object() else { bail!(Parse, "graded element must be a JSON object") };
        let mut out = Self::zero();
        for (k, f) in obj {
            let Some(text) = f.as_str() else { bail!(Parse, "component {} must be a polynomial string", k) };
            out.add(parse_key(k)?, &Polynomial::parse(text, names)?);
        }
        Ok(out)
    }

    /// One line per component, `key: polynomial`.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let lines: Vec<String> = self.comps.iter().map(|(k, f)| format!("{}: {}", k.to_text(), f.to_text(names))).collect();
        lines.join("\n")
    }
}

impl<K: Key> fmt::Display for Graded<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Var};

    #[test]
    fn components_cancel_and_round_trip() {
        let d = Comp::ints(&[1, 1]).unwrap();
        let e = Comp::ints(&[2]).unwrap();
        let x1 = Polynomial::var(Var::new(0, 1));
        let mut g = GradedElement::single(d.clone(), x1.clone());
        g.add(e.clone(), &Polynomial::one());
        g.add(d.clone(), &-&x1);
        assert_eq!(g.support(), vec![e.clone()]);
        let g = g.plus(&GradedElement::single(d.clone(), x1.scale(&rat(3))));
        let json = g.to_json(&[]);
        let back = GradedElement::from_json(&json, &[], |s| Comp::parse(s, 1)).unwrap();
        assert_eq!(back, g);
        assert_eq!(g.minus(&g), GradedElement::zero());
    }
}
