//! W-graphs: vertices with descent sets and integer edge weights encoding an
//! `H`-module on the free `A`-span of the vertices, via
//!
//! `C_s γ = [2] γ` when `s` lies in `L(γ)`, and
//! `C_s γ = sum of mu(δ, γ) δ over δ with s in L(δ)` otherwise.
//!
//! The weights are stored asymmetrically: `mu(δ, γ)` is the coefficient with
//! which `δ` appears in `C_s γ`, and nothing forces `mu(δ, γ) = mu(γ, δ)`.
//! A weight only influences the action when `L(δ)` is not contained in
//! `L(γ)`; such pairs are called *relevant* below, and both cell structure
//! and isomorphism are defined in terms of them.

use crate::hecke::HeckeAlg;
use crate::icengine::IcError;
use crate::laurent::Laurent;
use crate::permgrp::{Parabolic, Perm};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WGraphError {
    #[error("descent {descent} of vertex {vertex} is outside the generator set")]
    DescentOutsideGenerators { vertex: String, descent: u8 },
    #[error("mu refers to vertex index {0} out of range")]
    BadVertexIndex(usize),
    #[error("quadratic relation fails at generator {0}")]
    QuadraticFails(u8),
    #[error("braid relation fails at generators {0}, {1}")]
    BraidFails(u8, u8),
    #[error("commutation fails at generators {0}, {1}")]
    CommutationFails(u8, u8),
    #[error("subset is not a union of cells")]
    NotUnionOfCells,
    #[error("subset is not convex in the cell order")]
    NotConvex,
}

/// A vector over the vertices with Laurent coefficients.
pub type Vect = BTreeMap<usize, Laurent>;

#[derive(Clone)]
pub struct WGraph {
    gens: Parabolic,
    labels: Vec<String>,
    descents: Vec<BTreeSet<u8>>,
    mu: BTreeMap<(usize, usize), BigInt>,
}

impl WGraph {
    /// Assemble a graph from raw data; checks only well-formedness, not the
    /// module axioms (see [`WGraph::validate`] for those).
    pub fn new(
        gens: Parabolic,
        labels: Vec<String>,
        descents: Vec<BTreeSet<u8>>,
        mu: BTreeMap<(usize, usize), BigInt>,
    ) -> Result<Self, WGraphError> {
        assert_eq!(labels.len(), descents.len());
        for (v, ds) in descents.iter().enumerate() {
            for &d in ds {
                if !gens.contains(d) {
                    return Err(WGraphError::DescentOutsideGenerators {
                        vertex: labels[v].clone(),
                        descent: d,
                    });
                }
            }
        }
        let mut mu = mu;
        mu.retain(|_, m| !m.is_zero());
        for &(d, g) in mu.keys() {
            let bad = [d, g].into_iter().find(|&i| i >= labels.len());
            if let Some(i) = bad {
                return Err(WGraphError::BadVertexIndex(i));
            }
        }
        Ok(WGraph { gens, labels, descents, mu })
    }

    /// A single vertex carrying the given descents, e.g. the trivial
    /// (empty descents) or sign (full descents) module of `W_J`.
    pub fn single_vertex(gens: Parabolic, label: &str, descents: BTreeSet<u8>) -> Self {
        WGraph::new(gens, vec![label.to_string()], vec![descents], BTreeMap::new()).unwrap()
    }

    pub fn gens(&self) -> &Parabolic {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn descents(&self, v: usize) -> &BTreeSet<u8> {
        &self.descents[v]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mu(&self, delta: usize, gamma: usize) -> BigInt {
        self.mu.get(&(delta, gamma)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn mu_pairs(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.mu.iter().map(|(&(d, g), m)| (d, g, m))
    }

    /// Whether `mu(δ, γ)` can influence the action, i.e. `L(δ) ⊄ L(γ)`.
    pub fn is_relevant(&self, delta: usize, gamma: usize) -> bool {
        !self.descents[delta].is_subset(&self.descents[gamma])
    }

    /// `C_s` applied to a vector.
    pub fn act_cs(&self, s: u8, v: &Vect) -> Vect {
        assert!(self.gens.contains(s), "generator s_{s} outside {:?}", self.gens);
        let two = Laurent::u_integer(2).unwrap();
        let mut out = Vect::new();
        for (&g, f) in v {
            if self.descents[g].contains(&s) {
                add_to(&mut out, g, &(f * &two));
            } else {
                for ((d, g2), m) in &self.mu {
                    if *g2 == g && self.descents[*d].contains(&s) {
                        add_to(&mut out, *d, &(f * &Laurent::term(m.clone(), 0)));
                    }
                }
            }
        }
        out
    }

    /// `T_s = C_s - u^-1` applied to a vector.
    pub fn act_ts(&self, s: u8, v: &Vect) -> Vect {
        let mut out = self.act_cs(s, v);
        let minus = -&Laurent::u_pow(-1);
        for (&g, f) in v {
            add_to(&mut out, g, &(f * &minus));
        }
        out
    }

    /// Check the quadratic, braid, and commutation relations for the `T_s`
    /// matrices defined by the action.  Cost grows with the cube of the
    /// vertex count, so keep this to desk-scale graphs.
    pub fn validate(&self) -> Result<(), WGraphError> {
        let gens: Vec<u8> = self.gens.gens().iter().copied().collect();
        let shift = &Laurent::u_pow(1) - &Laurent::u_pow(-1);
        let mats: BTreeMap<u8, Vec<Vect>> =
            gens.iter().map(|&s| (s, self.ts_matrix(s))).collect();
        for &s in &gens {
            let m = &mats[&s];
            let sq = compose(m, m);
            let mut expect = scale_matrix(m, &shift);
            for (g, col) in expect.iter_mut().enumerate() {
                add_to(col, g, &Laurent::one());
            }
            if sq != expect {
                return Err(WGraphError::QuadraticFails(s));
            }
        }
        for &s in &gens {
            for &t in &gens {
                if t <= s {
                    continue;
                }
                let (ms, mt) = (&mats[&s], &mats[&t]);
                if t == s + 1 {
                    let lhs = compose(ms, &compose(mt, ms));
                    let rhs = compose(mt, &compose(ms, mt));
                    if lhs != rhs {
                        return Err(WGraphError::BraidFails(s, t));
                    }
                } else {
                    let lhs = compose(ms, mt);
                    let rhs = compose(mt, ms);
                    if lhs != rhs {
                        return Err(WGraphError::CommutationFails(s, t));
                    }
                }
            }
        }
        Ok(())
    }

    fn ts_matrix(&self, s: u8) -> Vec<Vect> {
        (0..self.len())
            .map(|g| self.act_ts(s, &Vect::from([(g, Laurent::one())])))
            .collect()
    }

    /// Directed preorder edges: `γ → δ` when `δ` appears in some `C_s γ`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mu
            .iter()
            .filter(|(&(d, g), m)| d != g && !m.is_zero() && self.is_relevant(d, g))
            .map(|(&(d, g), _)| (g, d))
            .collect()
    }

    pub fn cells(&self) -> CellDecomposition {
        let m = self.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (g, d) in self.edges() {
            adj[g].push(d);
        }
        let comp = tarjan_scc(&adj);
        let num = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); num];
        for (v, &c) in comp.iter().enumerate() {
            cells[c].push(v);
        }
        cells.sort_by_key(|cell| cell[0]);
        let mut cell_of = vec![0usize; m];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut reach: Vec<Vec<bool>> = vec![vec![false; cells.len()]; cells.len()];
        for (g, d) in self.edges() {
            reach[cell_of[g]][cell_of[d]] = true;
        }
        for i in 0..cells.len() {
            reach[i][i] = true;
        }
        for k in 0..cells.len() {
            for i in 0..cells.len() {
                if reach[i][k] {
                    for j in 0..cells.len() {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        CellDecomposition { cells, cell_of, reach }
    }

    /// The graph induced on `keep`, which must be a union of cells convex in
    /// the cell order (a cellular subquotient).
    pub fn subquotient(&self, keep: &BTreeSet<usize>) -> Result<WGraph, WGraphError> {
        let dec = self.cells();
        let kept_cells: BTreeSet<usize> = keep.iter().map(|&v| dec.cell_of[v]).collect();
        let full: BTreeSet<usize> = kept_cells
            .iter()
            .flat_map(|&c| dec.cells[c].iter().copied())
            .collect();
        if full != *keep {
            return Err(WGraphError::NotUnionOfCells);
        }
        for &a in &kept_cells {
            for &c in &kept_cells {
                for b in 0..dec.cells.len() {
                    if !kept_cells.contains(&b) && dec.reach[a][b] && dec.reach[b][c] {
                        return Err(WGraphError::NotConvex);
                    }
                }
            }
        }
        Ok(self.restrict_vertices(keep))
    }

    fn restrict_vertices(&self, keep: &BTreeSet<usize>) -> WGraph {
        let old: Vec<usize> = keep.iter().copied().collect();
        let new_of: BTreeMap<usize, usize> =
            old.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let mu = self
            .mu
            .iter()
            .filter_map(|(&(d, g), m)| {
                Some(((*new_of.get(&d)?, *new_of.get(&g)?), m.clone()))
            })
            .collect();
        WGraph {
            gens: self.gens.clone(),
            labels: old.iter().map(|&o| self.labels[o].clone()).collect(),
            descents: old.iter().map(|&o| self.descents[o].clone()).collect(),
            mu,
        }
    }

    /// Restriction to a parabolic `J` of the generator set: same vertices and
    /// weights, descent sets intersected with `J`.
    pub fn restrict(&self, j: &Parabolic) -> WGraph {
        assert!(j.is_subset_of(&self.gens) || j.n() == self.gens.n());
        WGraph {
            gens: j.clone(),
            labels: self.labels.clone(),
            descents: self
                .descents
                .iter()
                .map(|ds| ds.iter().copied().filter(|d| j.contains(*d)).collect())
                .collect(),
            mu: self.mu.clone(),
        }
    }

    /// Shift every descent index by `by`, landing in the new generator set.
    pub fn shift_descents(&self, by: i16, gens: Parabolic) -> WGraph {
        let descents: Vec<BTreeSet<u8>> = self
            .descents
            .iter()
            .map(|ds| ds.iter().map(|&d| (d as i16 + by) as u8).collect())
            .collect();
        WGraph::new(gens, self.labels.clone(), descents, self.mu.clone()).unwrap()
    }

    pub fn relabel(&self, labels: Vec<String>) -> WGraph {
        assert_eq!(labels.len(), self.len());
        WGraph { labels, ..self.clone() }
    }

    /// A descent-preserving bijection `self → other` matching every relevant
    /// weight (zero included), or `None`.
    pub fn isomorphism(&self, other: &WGraph) -> Option<Vec<usize>> {
        if self.len() != other.len() || self.gens.gens() != other.gens.gens() {
            return None;
        }
        let m = self.len();
        let sig1: Vec<_> = (0..m).map(|v| self.signature(v)).collect();
        let sig2: Vec<_> = (0..m).map(|v| other.signature(v)).collect();
        {
            let mut a = sig1.clone();
            let mut b = sig2.clone();
            a.sort();
            b.sort();
            if a != b {
                return None;
            }
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&v| sig2.iter().filter(|s| **s == sig1[v]).count());
        let mut image: Vec<Option<usize>> = vec![None; m];
        let mut used = vec![false; m];
        if self.search(other, &sig1, &sig2, &order, 0, &mut image, &mut used) {
            Some(image.into_iter().map(Option::unwrap).collect())
        } else {
            None
        }
    }

    fn signature(&self, v: usize) -> (BTreeSet<u8>, Vec<(BigInt, BTreeSet<u8>)>, Vec<(BigInt, BTreeSet<u8>)>) {
        let mut out_w: Vec<(BigInt, BTreeSet<u8>)> = Vec::new();
        let mut in_w: Vec<(BigInt, BTreeSet<u8>)> = Vec::new();
        for ((d, g), m) in &self.mu {
            if *g == v && self.is_relevant(*d, *g) {
                out_w.push((m.clone(), self.descents[*d].clone()));
            }
            if *d == v && self.is_relevant(*d, *g) {
                in_w.push((m.clone(), self.descents[*g].clone()));
            }
        }
        out_w.sort();
        in_w.sort();
        (self.descents[v].clone(), out_w, in_w)
    }

    fn search(
        &self,
        other: &WGraph,
        sig1: &[(BTreeSet<u8>, Vec<(BigInt, BTreeSet<u8>)>, Vec<(BigInt, BTreeSet<u8>)>)],
        sig2: &[(BTreeSet<u8>, Vec<(BigInt, BTreeSet<u8>)>, Vec<(BigInt, BTreeSet<u8>)>)],
        order: &[usize],
        pos: usize,
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return self.check_full(other, image);
        }
        let v = order[pos];
        for t in 0..other.len() {
            if used[t] || sig2[t] != sig1[v] {
                continue;
            }
            if !self.consistent(other, v, t, image) {
                continue;
            }
            image[v] = Some(t);
            used[t] = true;
            if self.search(other, sig1, sig2, order, pos + 1, image, used) {
                return true;
            }
            image[v] = None;
            used[t] = false;
        }
        false
    }

    fn consistent(&self, other: &WGraph, v: usize, t: usize, image: &[Option<usize>]) -> bool {
        for (u, tu) in image.iter().enumerate() {
            let Some(tu) = tu else { continue };
            for (a, b, ta, tb) in [(v, u, t, *tu), (u, v, *tu, t)] {
                if self.is_relevant(a, b) && self.mu(a, b) != other.mu(ta, tb) {
                    return false;
                }
            }
        }
        true
    }

    fn check_full(&self, other: &WGraph, image: &[Option<usize>]) -> bool {
        for d in 0..self.len() {
            for g in 0..self.len() {
                if d != g && self.is_relevant(d, g) {
                    let (td, tg) = (image[d].unwrap(), image[g].unwrap());
                    if self.mu(d, g) != other.mu(td, tg) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> WGraphJson {
        WGraphJson {
            n: self.gens.n(),
            generators: self.gens.gens().iter().copied().collect(),
            vertices: (0..self.len())
                .map(|v| VertexJson {
                    id: self.labels[v].clone(),
                    descents: self.descents[v].iter().copied().collect(),
                })
                .collect(),
            edges: self
                .mu
                .iter()
                .map(|(&(d, g), m)| EdgeJson {
                    from: self.labels[g].clone(),
                    to: self.labels[d].clone(),
                    mu: m.to_string(),
                })
                .collect(),
        }
    }

    /// DOT rendering: an arrowed edge when one descent set strictly contains
    /// the other (pointing at the larger), an undirected edge otherwise.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        let _ = writeln!(out, "  node [shape=plaintext];");
        for v in 0..self.len() {
            let ds: Vec<String> = self.descents[v].iter().map(|d| d.to_string()).collect();
            let _ = writeln!(
                out,
                "  v{v} [label=\"{}\\n{{{}}}\"];",
                self.labels[v],
                ds.join(",")
            );
        }
        let mut drawn: BTreeSet<(usize, usize)> = BTreeSet::new();
        for ((d, g), m) in &self.mu {
            let (d, g) = (*d, *g);
            if d == g || !self.is_relevant(d, g) {
                continue;
            }
            let key = (d.min(g), d.max(g));
            if !drawn.insert(key) {
                continue;
            }
            let (ld, lg) = (&self.descents[d], &self.descents[g]);
            let attr_label = if m == &BigInt::from(1) {
                String::new()
            } else {
                format!(", label=\"{m}\"")
            };
            if lg.is_subset(ld) {
                let _ = writeln!(out, "  v{g} -- v{d} [dir=forward{attr_label}];");
            } else if ld.is_subset(lg) {
                let _ = writeln!(out, "  v{d} -- v{g} [dir=forward{attr_label}];");
            } else {
                let _ = writeln!(out, "  v{d} -- v{g} [dir=none{attr_label}];");
            }
        }
        let _ = writeln!(out, "}}");
        out
    }
}

fn add_to(v: &mut Vect, i: usize, f: &Laurent) {
    if f.is_zero() {
        return;
    }
    let slot = v.entry(i).or_insert_with(Laurent::zero);
    slot.add_assign(f);
    if slot.is_zero() {
        v.remove(&i);
    }
}

fn compose(a: &[Vect], b: &[Vect]) -> Vec<Vect> {
    // Column j of the composite is a applied to column j of b.
    b.iter()
        .map(|col| {
            let mut out = Vect::new();
            for (&i, f) in col {
                for (&k, g) in &a[i] {
                    add_to(&mut out, k, &(f * g));
                }
            }
            out
        })
        .collect()
}

fn scale_matrix(a: &[Vect], f: &Laurent) -> Vec<Vect> {
    a.iter()
        .map(|col| col.iter().map(|(&i, g)| (i, f * g)).collect())
        .collect()
}

fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<usize> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next_index: usize,
        comp: Vec<usize>,
        next_comp: usize,
    }
    let n = adj.len();
    let mut st = State {
        adj,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next_index: 0,
        comp: vec![usize::MAX; n],
        next_comp: 0,
    };
    // Iterative DFS; frame = (vertex, next child position).
    fn visit(st: &mut State, root: usize) {
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut ci)) = frames.last_mut() {
            if st.index[v].is_none() {
                st.index[v] = Some(st.next_index);
                st.low[v] = st.next_index;
                st.next_index += 1;
                st.stack.push(v);
                st.on_stack[v] = true;
            }
            if *ci < st.adj[v].len() {
                let w = st.adj[v][*ci];
                *ci += 1;
                if st.index[w].is_none() {
                    frames.push((w, 0));
                } else if st.on_stack[w] {
                    st.low[v] = st.low[v].min(st.index[w].unwrap());
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    st.low[parent] = st.low[parent].min(st.low[v]);
                }
                if st.low[v] == st.index[v].unwrap() {
                    loop {
                        let w = st.stack.pop().unwrap();
                        st.on_stack[w] = false;
                        st.comp[w] = st.next_comp;
                        if w == v {
                            break;
                        }
                    }
                    st.next_comp += 1;
                }
            }
        }
    }
    for v in 0..n {
        if st.index[v].is_none() {
            visit(&mut st, v);
        }
    }
    st.comp
}

/// The cell partition of a W-graph together with condensation reachability.
#[derive(Debug, Clone)]
pub struct CellDecomposition {
    /// Cells sorted by smallest member; vertices sorted within each cell.
    pub cells: Vec<Vec<usize>>,
    pub cell_of: Vec<usize>,
    reach: Vec<Vec<bool>>,
}

impl CellDecomposition {
    /// Whether some vertex of cell `a` reaches cell `b` along preorder edges.
    pub fn reaches(&self, a: usize, b: usize) -> bool {
        self.reach[a][b]
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WGraphJson {
    pub n: usize,
    pub generators: Vec<u8>,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    pub descents: Vec<u8>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: String,
    pub to: String,
    pub mu: String,
}

/// The W-graph of the regular representation: vertices `S_n`, descents the
/// left descent sets, weights from the canonical basis.
pub fn regular_wgraph(n: usize) -> Result<WGraph, IcError> {
    let h = HeckeAlg::new(n);
    let kl = h.kl_basis()?;
    let order: Vec<Perm> = kl.order().to_vec();
    let labels: Vec<String> = order.iter().map(Perm::to_string).collect();
    let descents: Vec<BTreeSet<u8>> = order.iter().map(Perm::left_descents).collect();
    let mut mu: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for (gi, gamma) in order.iter().enumerate() {
        for (di, delta) in order.iter().enumerate() {
            let m = if delta.length() < gamma.length() {
                kl.mu(delta, gamma)
            } else if delta.length() == gamma.length() + 1 && is_left_multiple(delta, gamma) {
                BigInt::from(1)
            } else {
                BigInt::zero()
            };
            if !m.is_zero() {
                mu.insert((di, gi), m);
            }
        }
    }
    Ok(WGraph::new(Parabolic::full(n), labels, descents, mu).unwrap())
}

fn is_left_multiple(delta: &Perm, gamma: &Perm) -> bool {
    // delta = s gamma for a simple s exactly when delta gamma^-1 is simple.
    let d = delta.mul(&gamma.inverse());
    let moved: Vec<u8> = (1..=d.n() as u8).filter(|&i| d.apply(i) != i).collect();
    moved.len() == 2 && moved[1] == moved[0] + 1
}
