use crate::error::{bail, Error, Result};
use std::fmt;
use std::ops::{Add, Sub};

/// Dimension vector, indexed by vertex declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(n: usize) -> DimVector {
        DimVector(vec![0; n])
    }

    pub fn single(n: usize, vertex: usize, value: u32) -> DimVector {
        let mut d = DimVector::zero(n);
        d.0[vertex] = value;
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|d| = Σ_i d(i)`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `(θd)(i) = d(θ(i))`.
    pub fn theta(&self, vertex_map: &[usize]) -> DimVector {
        DimVector(vertex_map.iter().map(|&j| self.0[j]).collect())
    }

    /// `D(d) = d + θ(d)`.
    pub fn double(&self, vertex_map: &[usize]) -> DimVector {
        self + &self.theta(vertex_map)
    }

    pub fn is_theta_fixed(&self, vertex_map: &[usize]) -> bool {
        self.theta(vertex_map) == *self
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(DimVector(out))
    }

    /// Text form: a bare integer for one-vertex quivers, else `[a,b,…]`.
    pub fn to_text(&self) -> String {
        if self.0.len() == 1 {
            self.0[0].to_string()
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    pub fn parse(s: &str, n: usize) -> Result<DimVector> {
        DimVector::parse_named(s, n, &[])
    }

    /// Also accepts linear combinations of vertex names such as `3i1+i2` or `2*a+b`.
    pub fn parse_named(s: &str, n: usize, names: &[String]) -> Result<DimVector> {
        let s = s.trim();
        if !names.is_empty() && !s.starts_with('[') && s.parse::<u32>().is_err() {
            return parse_combination(s, names);
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let vals: Vec<u32> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{:?}: {}", t, e))))
                    .collect::<Result<_>>()?
            };
            if vals.len() != n {
                bail!(Parse, "dimension vector {:?} has {} entries, expected {}", s, vals.len(), n);
            }
            return Ok(DimVector(vals));
        }
        if n != 1 {
            bail!(Parse, "bare integer {:?} is only a dimension vector for one-vertex quivers", s);
        }
        let v = s.parse::<u32>().map_err(|e| Error::Parse(format!("{:?}: {}", s, e)))?;
        Ok(DimVector(vec![v]))
    }
}

fn parse_combination(s: &str, names: &[String]) -> Result<DimVector> {
    let mut out = DimVector::zero(names.len());
    for term in s.split('+') {
        let t = term.trim();
        let (coef, name) = match t.split_once('*') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => {
                let cut = t.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(t.len());
                (&t[..cut], &t[cut..])
            }
        };
        let coef = if coef.is_empty() {
            1
        } else {
            coef.parse::<u32>().map_err(|e| Error::Parse(format!("{:?}: {}", t, e)))?
        };
        let Some(v) = names.iter().position(|x| x == name) else {
            bail!(Parse, "unknown vertex {:?} in dimension vector {:?}", name, s)
        };
        out.0[v] += coef;
    }
    Ok(out)
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVector {
    type Output = DimVector;
    fn sub(self, rhs: &DimVector) -> DimVector {
        self.checked_sub(rhs).expect("negative dimension vector")
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Splits at top-level commas (ignoring commas nested in brackets or parentheses).
pub(crate) fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' | '{' => depth += 1,
            ']' | ')' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}
