//! Quivers, involutions with duality structures, dimension vectors and (isotropic)
//! vector compositions.

mod composition;
mod dims;
mod json;

pub use json::dim_to_json;

pub use composition::{compositions_into, sub_vectors, Comp, IsoComp};
pub use dims::DimVector;

use crate::error::{bail, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// Which side of the involution a vertex or arrow lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Fixed,
    Minus,
}

/// Involution `θ` with duality signs `σ` (vertices) and `ς` (arrows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionData {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
    pub sigma: Vec<i8>,
    pub varsigma: Vec<i8>,
    pub vertex_side: Vec<Side>,
    pub arrow_side: Vec<Side>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub involution: Option<InvolutionData>,
}

/// A violated condition of a duality structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexMapNotInvolution(String),
    ArrowMapNotInvolution(String),
    /// `s(θa) = θ(t a)` and `t(θa) = θ(s a)`.
    ConditionA(String),
    /// `t(a) = θ(s a)` forces `θa = a`.
    ConditionB(String),
    /// `σ(θ i) = σ(i)`.
    SigmaCompatibility(String),
    /// `ς(a)ς(θa) = σ(s a)σ(t a)`.
    VarsigmaCompatibility(String),
    /// Side tags must pair `+` with `−` and mark exactly the fixed points as fixed.
    Partition(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexMapNotInvolution(v) => write!(f, "vertex map is not an involution at {}", v),
            Violation::ArrowMapNotInvolution(a) => write!(f, "arrow map is not an involution at {}", a),
            Violation::ConditionA(a) => write!(f, "condition (a) fails for arrow {}", a),
            Violation::ConditionB(a) => write!(f, "condition (b) fails for arrow {}", a),
            Violation::SigmaCompatibility(v) => write!(f, "sigma is not θ-invariant at {}", v),
            Violation::VarsigmaCompatibility(a) => write!(f, "varsigma sign condition fails for arrow {}", a),
            Violation::Partition(x) => write!(f, "side partition is inconsistent at {}", x),
        }
    }
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        if vertices.is_empty() {
            bail!(Structure, "a quiver needs at least one vertex");
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                bail!(Structure, "duplicate vertex {:?}", v);
            }
        }
        let mut out = Quiver { vertices, arrows: Vec::new(), involution: None };
        for (name, s, t) in arrows {
            if out.arrows.iter().any(|a| a.name == name) {
                bail!(Structure, "duplicate arrow {:?}", name);
            }
            let src = out.vertex_index(&s)?;
            let tgt = out.vertex_index(&t)?;
            out.arrows.push(Arrow { name, src, tgt });
        }
        Ok(out)
    }

    /// One vertex named `1`, `loops` loops.
    pub fn one_vertex(loops: usize) -> Quiver {
        let arrows = (0..loops).map(|k| (format!("a{}", k + 1), "1".to_string(), "1".to_string())).collect();
        Quiver::new(vec!["1".into()], arrows).unwrap()
    }

    /// The `A_1` quiver.
    pub fn a1() -> Quiver {
        Quiver::one_vertex(0)
    }

    pub fn jordan() -> Quiver {
        Quiver::one_vertex(1)
    }

    /// Linear `A_n` quiver `1 → 2 → ⋯ → n`.
    pub fn linear(n: usize) -> Quiver {
        let vertices = (1..=n).map(|k| k.to_string()).collect();
        let arrows = (1..n).map(|k| (format!("a{}", k), k.to_string(), (k + 1).to_string())).collect();
        Quiver::new(vertices, arrows).unwrap()
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        match self.vertices.iter().position(|v| v == name) {
            Some(i) => Ok(i),
            None => bail!(Structure, "unknown vertex {:?}", name),
        }
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        match self.arrows.iter().position(|a| a.name == name) {
            Some(i) => Ok(i),
            None => bail!(Structure, "unknown arrow {:?}", name),
        }
    }

    /// `a_ij`, the number of arrows `i → j`.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.src == i && a.tgt == j).count()
    }

    /// Attaches an involution given by names; sides default to `+` for the first-declared
    /// member of each pair. The data is validated and any violation is an error.
    pub fn with_involution(
        mut self,
        vertex_map: &[(&str, &str)],
        arrow_map: &[(&str, &str)],
        sigma: &[(&str, i8)],
        varsigma: &[(&str, i8)],
    ) -> Result<Quiver> {
        let inv = self.build_involution(vertex_map, arrow_map, sigma, varsigma, &[], &[])?;
        let report = self.validate_duality(&inv);
        if !report.is_empty() {
            let msgs: Vec<String> = report.iter().map(|v| v.to_string()).collect();
            bail!(Argument, "invalid duality structure: {}", msgs.join("; "));
        }
        self.involution = Some(inv);
        Ok(self)
    }

    /// Resolves names into an [`InvolutionData`] without validating the conditions.
    /// Unlisted vertices and arrows map to themselves; unlisted signs are `+1`.
    pub fn build_involution(
        &self,
        vertex_map: &[(&str, &str)],
        arrow_map: &[(&str, &str)],
        sigma: &[(&str, i8)],
        varsigma: &[(&str, i8)],
        plus_vertices: &[&str],
        plus_arrows: &[&str],
    ) -> Result<InvolutionData> {
        let mut vm: Vec<usize> = (0..self.n_vertices()).collect();
        for (a, b) in vertex_map {
            vm[self.vertex_index(a)?] = self.vertex_index(b)?;
        }
        let mut am: Vec<usize> = (0..self.arrows.len()).collect();
        for (a, b) in arrow_map {
            am[self.arrow_index(a)?] = self.arrow_index(b)?;
        }
        let mut sg = vec![1i8; self.n_vertices()];
        for (v, s) in sigma {
            if *s != 1 && *s != -1 {
                bail!(Structure, "sigma({}) must be ±1", v);
            }
            sg[self.vertex_index(v)?] = *s;
        }
        let mut vs = vec![1i8; self.arrows.len()];
        for (a, s) in varsigma {
            if *s != 1 && *s != -1 {
                bail!(Structure, "varsigma({}) must be ±1", a);
            }
            vs[self.arrow_index(a)?] = *s;
        }
        let pv: Vec<usize> = plus_vertices.iter().map(|v| self.vertex_index(v)).collect::<Result<_>>()?;
        let pa: Vec<usize> = plus_arrows.iter().map(|a| self.arrow_index(a)).collect::<Result<_>>()?;
        let side = |map: &[usize], i: usize, plus: &[usize]| {
            let j = map[i];
            if j == i {
                Side::Fixed
            } else if plus.contains(&i) || (!plus.contains(&j) && i < j) {
                Side::Plus
            } else {
                Side::Minus
            }
        };
        let vertex_side = (0..vm.len()).map(|i| side(&vm, i, &pv)).collect();
        let arrow_side = (0..am.len()).map(|i| side(&am, i, &pa)).collect();
        Ok(InvolutionData { vertex_map: vm, arrow_map: am, sigma: sg, varsigma: vs, vertex_side, arrow_side })
    }

    /// Lists every violated condition; empty iff `inv` is a duality structure.
    pub fn validate_duality(&self, inv: &InvolutionData) -> Vec<Violation> {
        let mut out = Vec::new();
        let vm = &inv.vertex_map;
        let am = &inv.arrow_map;
        if vm.len() != self.n_vertices() || am.len() != self.arrows.len() {
            out.push(Violation::Partition("size mismatch".into()));
            return out;
        }
        for (i, &j) in vm.iter().enumerate() {
            if j >= vm.len() || vm[j] != i {
                out.push(Violation::VertexMapNotInvolution(self.vertices[i].clone()));
            }
        }
        for (a, &b) in am.iter().enumerate() {
            if b >= am.len() || am[b] != a {
                out.push(Violation::ArrowMapNotInvolution(self.arrows[a].name.clone()));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (a, arrow) in self.arrows.iter().enumerate() {
            let ta = &self.arrows[am[a]];
            if ta.src != vm[arrow.tgt] || ta.tgt != vm[arrow.src] {
                out.push(Violation::ConditionA(arrow.name.clone()));
            }
            if arrow.tgt == vm[arrow.src] && am[a] != a {
                out.push(Violation::ConditionB(arrow.name.clone()));
            }
        }
        for (i, &j) in vm.iter().enumerate() {
            if inv.sigma[i] != inv.sigma[j] {
                out.push(Violation::SigmaCompatibility(self.vertices[i].clone()));
            }
        }
        for (a, arrow) in self.arrows.iter().enumerate() {
            if inv.varsigma[a] * inv.varsigma[am[a]] != inv.sigma[arrow.src] * inv.sigma[arrow.tgt] {
                out.push(Violation::VarsigmaCompatibility(arrow.name.clone()));
            }
        }
        let check_sides = |map: &[usize], sides: &[Side], name: &dyn Fn(usize) -> String, out: &mut Vec<Violation>| {
            for (i, &j) in map.iter().enumerate() {
                let ok = match sides[i] {
                    Side::Fixed => i == j,
                    Side::Plus => i != j && sides[j] == Side::Minus,
                    Side::Minus => i != j && sides[j] == Side::Plus,
                };
                if !ok {
                    out.push(Violation::Partition(name(i)));
                }
            }
        };
        check_sides(vm, &inv.vertex_side, &|i| self.vertices[i].clone(), &mut out);
        check_sides(am, &inv.arrow_side, &|a| self.arrows[a].name.clone(), &mut out);
        out
    }

    pub fn inv(&self) -> Result<&InvolutionData> {
        match &self.involution {
            Some(i) => Ok(i),
            None => bail!(Structure, "the quiver carries no involution"),
        }
    }

    pub fn parse_dim(&self, s: &str) -> Result<DimVector> {
        let t = s.trim();
        if t.starts_with('{') {
            return json::dim_from_json(self, &serde_json::from_str(t).map_err(|e| crate::Error::Parse(e.to_string()))?);
        }
        DimVector::parse_named(t, self.n_vertices(), &self.vertices)
    }

    pub fn parse_comp(&self, s: &str) -> Result<Comp> {
        Comp::parse_named(s, self.n_vertices(), &self.vertices)
    }

    pub fn parse_iso(&self, s: &str) -> Result<IsoComp> {
        let inv = self.inv()?;
        let d = IsoComp::parse_named(s, &inv.vertex_map, &self.vertices)?;
        self.check_iso(&d)?;
        Ok(d)
    }

    /// Builds and validates an isotropic composition.
    pub fn iso(&self, finite: Vec<DimVector>, inf: DimVector) -> Result<IsoComp> {
        let inv = self.inv()?;
        let d = IsoComp::new(finite, inf, &inv.vertex_map)?;
        self.check_iso(&d)?;
        Ok(d)
    }

    /// `d_∞(i)` must be even at fixed vertices with `σ(i) = −1`.
    pub fn check_iso(&self, d: &IsoComp) -> Result<()> {
        let inv = self.inv()?;
        for i in 0..self.n_vertices() {
            if inv.vertex_side[i] == Side::Fixed && inv.sigma[i] == -1 && d.inf().get(i) % 2 == 1 {
                bail!(
                    Argument,
                    "d_∞({}) = {} must be even at a vertex with sigma = -1",
                    self.vertices[i],
                    d.inf().get(i)
                );
            }
        }
        Ok(())
    }

    /// Every valid isotropic composition of `c`.
    pub fn all_iso(&self, c: &DimVector) -> Result<Vec<IsoComp>> {
        let inv = self.inv()?;
        Ok(IsoComp::all_of(c, &inv.vertex_map).into_iter().filter(|d| self.check_iso(d).is_ok()).collect())
    }

    pub fn from_json(text: &str) -> Result<Quiver> {
        json::quiver_from_json(text)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json::quiver_to_json(self)
    }
}

#[cfg(test)]
mod tests;
