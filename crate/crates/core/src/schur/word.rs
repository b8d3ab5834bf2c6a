//! Formal products of merges, splits, idempotents, polynomial cups and crossings, with
//! the bracketed term syntax `merge[(1,1)->(2)] * cup[(1,1); x[1,1]] * split[(2)->(1,1)]`.

use super::graded::Key;
use crate::error::{bail, Result};
use crate::poly::Polynomial;
use std::fmt;

/// One generator. Merges go from a finer to a coarser composition, splits the other way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator<K: Key> {
    Idempotent(K),
    Merge { from: K, to: K },
    Split { from: K, to: K },
    Cup { at: K, poly: Polynomial },
    Cross { at: K, k: usize },
}

impl<K: Key> Generator<K> {
    /// The composition the generator reads from.
    pub fn source(&self) -> &K {
        match self {
            Generator::Idempotent(d) => d,
            Generator::Merge { from, .. } | Generator::Split { from, .. } => from,
            Generator::Cup { at, .. } | Generator::Cross { at, .. } => at,
        }
    }

    pub fn to_text(&self, names: &[String]) -> String {
        match self {
            Generator::Idempotent(d) => format!("idem[{}]", d.to_text()),
            Generator::Merge { from, to } => format!("merge[{}->{}]", from.to_text(), to.to_text()),
            Generator::Split { from, to } => format!("split[{}->{}]", from.to_text(), to.to_text()),
            Generator::Cup { at, poly } => format!("cup[{}; {}]", at.to_text(), poly.to_text(names)),
            Generator::Cross { at, k } => format!("cross[{}; {}]", at.to_text(), k),
        }
    }

    pub fn parse(s: &str, names: &[String], parse_key: &dyn Fn(&str) -> Result<K>) -> Result<Generator<K>> {
        let s = s.trim();
        let Some(open) = s.find('[') else { bail!(Parse, "generator {:?} lacks '['", s) };
        let Some(body) = s[open + 1..].strip_suffix(']') else { bail!(Parse, "generator {:?} lacks a closing ']'", s) };
        let name = s[..open].trim();
        let pair = |sep: &str| -> Result<(String, String)> {
            match find_top(body, sep) {
                Some(p) => Ok((body[..p].trim().to_string(), body[p + sep.len()..].trim().to_string())),
                None => bail!(Parse, "{:?} needs '{}'", s, sep),
            }
        };
        Ok(match name {
            "idem" => Generator::Idempotent(parse_key(body)?),
            "merge" | "split" => {
                let (a, b) = pair("->")?;
                let (from, to) = (parse_key(&a)?, parse_key(&b)?);
                if name == "merge" {
                    Generator::Merge { from, to }
                } else {
                    Generator::Split { from, to }
                }
            }
            "cup" => {
                let (a, b) = pair(";")?;
                Generator::Cup { at: parse_key(&a)?, poly: Polynomial::parse(&b, names)? }
            }
            "cross" => {
                let (a, b) = pair(";")?;
                let k = b.parse::<usize>().map_err(|_| crate::Error::Parse(format!("bad crossing position {:?}", b)))?;
                Generator::Cross { at: parse_key(&a)?, k }
            }
            other => bail!(Parse, "unknown generator {:?}", other),
        })
    }
}

/// Position of `pat` in `s` outside all brackets and parentheses.
fn find_top(s: &str, pat: &str) -> Option<usize> {
    let b = s.as_bytes();
    let mut depth = 0i32;
    for i in 0..b.len() {
        match b[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            _ if depth == 0 && s[i..].starts_with(pat) => return Some(i),
            _ => {}
        }
    }
    None
}

/// A product `g_1 * g_2 * ⋯ * g_n` of generators; `g_n` acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurWord<K: Key> {
    pub gens: Vec<Generator<K>>,
}

impl<K: Key> SchurWord<K> {
    pub fn new(gens: Vec<Generator<K>>) -> Self {
        SchurWord { gens }
    }

    pub fn single(g: Generator<K>) -> Self {
        SchurWord { gens: vec![g] }
    }

    /// `self ⋆ other`: `other` acts first.
    pub fn star(&self, other: &SchurWord<K>) -> SchurWord<K> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        SchurWord { gens }
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn to_text(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_text(names)).collect();
        parts.join(" * ")
    }

    pub fn parse(s: &str, names: &[String], parse_key: &dyn Fn(&str) -> Result<K>) -> Result<SchurWord<K>> {
        let mut gens = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            match find_top(rest, "*") {
                Some(p) => {
                    gens.push(Generator::parse(&rest[..p], names, parse_key)?);
                    rest = rest[p + 1..].trim();
                    if rest.is_empty() {
                        bail!(Parse, "word {:?} ends with '*'", s);
                    }
                }
                None => {
                    gens.push(Generator::parse(rest, names, parse_key)?);
                    rest = "";
                }
            }
        }
        if gens.is_empty() {
            bail!(Parse, "empty word");
        }
        Ok(SchurWord { gens })
    }
}

impl<K: Key> fmt::Display for SchurWord<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Comp;

    #[test]
    fn round_trip() {
        let text = "merge[(1,1)->(2)] * cup[(1,1); x[1,1]*x[1,2] - 2] * split[(2)->(1,1)]";
        let parse = |s: &str| Comp::parse(s, 1);
        let w = SchurWord::parse(text, &[], &parse).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_text(&[]), "merge[(1,1)->(2)] * cup[(1,1); x[1,1]*x[1,2] - 2] * split[(2)->(1,1)]");
        let again = SchurWord::parse(&w.to_text(&[]), &[], &parse).unwrap();
        assert_eq!(again, w);
        let c = SchurWord::parse("cross[(1,1); 1] * idem[(1,1)]", &[], &parse).unwrap();
        assert_eq!(c.gens[0], Generator::Cross { at: Comp::ints(&[1, 1]).unwrap(), k: 1 });
        assert!(SchurWord::parse("fuse[(1,1)]", &[], &parse).is_err());
        assert!(SchurWord::parse("merge[(1,1)->(2)] *", &[], &parse).is_err());
    }
}
