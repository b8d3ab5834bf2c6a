//! The Weyl groups `W_c`, `θW_c` and their parabolic subgroups `W_d`, `θW_d`.

use super::group::{FactorKind, Parabolic};
use crate::error::Result;
use crate::quiver::{Comp, DimVector, IsoComp, Quiver, Side};

/// `W_c = ∏_i Sym_{c(i)}`.
pub fn kinds(c: &DimVector) -> Vec<FactorKind> {
    c.0.iter().map(|&n| FactorKind::Sym(n as usize)).collect()
}

/// `W_d`: blocks `d_1(i), d_2(i), …` at each vertex.
pub fn parabolic(d: &Comp) -> Parabolic {
    let c = d.total();
    let blocks: Vec<Vec<usize>> = (0..c.len()).map(|i| d.at(i).iter().map(|&b| b as usize).collect()).collect();
    Parabolic::from_blocks(&kinds(&c), &blocks, &vec![0; c.len()])
}

/// `θW_c`: `Sym_{c(i)}` at `+` vertices, the hyperoctahedral group of rank `⌊c(i)/2⌋` at
/// θ-fixed vertices, and the trivial group at `−` vertices.
pub fn theta_kinds(q: &Quiver, c: &DimVector) -> Result<Vec<FactorKind>> {
    let inv = q.inv()?;
    Ok((0..q.n_vertices())
        .map(|i| match inv.vertex_side[i] {
            Side::Plus => FactorKind::Sym(c.get(i) as usize),
            Side::Fixed => FactorKind::Hyp(c.get(i) as usize / 2),
            Side::Minus => FactorKind::Sym(0),
        })
        .collect())
}

/// `θW_d`: type-A blocks of `D(d)` at `+` vertices; at θ-fixed vertices type-A blocks
/// `d_1(i), …, d_ℓ(i)` followed by a hyperoctahedral tail of rank `⌊d_∞(i)/2⌋`.
pub fn theta_parabolic(q: &Quiver, d: &IsoComp) -> Result<Parabolic> {
    let inv = q.inv()?;
    let c = d.total(&inv.vertex_map);
    let kinds = theta_kinds(q, &c)?;
    let doubled = d.doubled_parts(&inv.vertex_map);
    let mut blocks = Vec::new();
    let mut tails = Vec::new();
    for i in 0..q.n_vertices() {
        match inv.vertex_side[i] {
            Side::Plus => {
                blocks.push(doubled.iter().map(|p| p.get(i) as usize).collect());
                tails.push(0);
            }
            Side::Fixed => {
                blocks.push(d.finite().iter().map(|p| p.get(i) as usize).collect());
                tails.push(d.inf().get(i) as usize / 2);
            }
            Side::Minus => {
                blocks.push(Vec::new());
                tails.push(0);
            }
        }
    }
    Ok(Parabolic::from_blocks(&kinds, &blocks, &tails))
}
