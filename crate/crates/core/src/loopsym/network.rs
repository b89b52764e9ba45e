//! Families of non-crossing paths on the cylindric loop network.
//!
//! The network has `n` wires wound around a cylinder and `m` loops. A path
//! on wire `w` just before loop `k` carries color `w + k - 1`. At each loop
//! it either goes straight, picking up `x_k^{(color)}` and moving one color
//! up, or rides the loop onto wire `w - 1` at weight one.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::One;

use super::{color, LoopPolynomial, Monomial};
use crate::tableaux::CylindricShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Edge {
    /// Segment of wire `w` after loop `k` (`k = 0` is the source end).
    Wire(usize, usize),
    /// Crossing along loop `k` from wire `w` to wire `w - 1`.
    Loop(usize, usize),
}

struct RoutedPath {
    edges: Vec<Edge>,
    mono: Monomial,
}

fn route(start: i64, straight: &[bool], n: usize, m: usize) -> RoutedPath {
    let mut c = start;
    let mut mono = vec![0u16; n * m];
    let mut edges = vec![Edge::Wire(color(c, n), 0)];
    for k in 1..=m {
        let w = c - k as i64 + 1;
        if straight[k - 1] {
            mono[(k - 1) * n + color(c, n)] += 1;
            edges.push(Edge::Wire(color(w, n), k));
            c += 1;
        } else {
            edges.push(Edge::Loop(k, color(w, n)));
            edges.push(Edge::Wire(color(w - 1, n), k));
        }
    }
    RoutedPath { edges, mono }
}

fn column_paths(start: i64, len: usize, n: usize, m: usize) -> Vec<RoutedPath> {
    let mut out = Vec::new();
    if len > m {
        return out;
    }
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize == len {
            let straight: Vec<bool> = (0..m).map(|k| mask >> k & 1 == 1).collect();
            out.push(route(start, &straight, n, m));
        }
    }
    out
}

/// Source and sink colors `(μ'_i - i + 1 + r, λ'_i - i + r)` for each of the
/// `n - s` columns of the base shape.
pub fn network_sources_sinks(d: &CylindricShape, r: i64) -> Vec<(i64, i64)> {
    let outer = d.base().outer().conjugate();
    let inner = d.base().inner().conjugate();
    (1..=d.n() - d.s())
        .map(|i| {
            let i64i = i as i64;
            (
                inner.part(i - 1) as i64 - (i64i - 1) + r,
                outer.part(i - 1) as i64 - i64i + r,
            )
        })
        .collect()
}

/// Generating function of edge-disjoint path families, one path per column
/// of the base shape, with `m` loops.
pub fn noncrossing_generating_function(d: &CylindricShape, r: i64, m: usize) -> LoopPolynomial {
    let n = d.n();
    let outer = d.base().outer().conjugate();
    let inner = d.base().inner().conjugate();
    let columns: Vec<Vec<RoutedPath>> = network_sources_sinks(d, r)
        .iter()
        .enumerate()
        .map(|(i, &(start, _))| {
            column_paths(start, outer.part(i) - inner.part(i), n, m)
        })
        .collect();
    let mut out = LoopPolynomial::zero(n, m);
    let mut used = HashSet::new();
    let mut mono = vec![0u16; n * m];
    search(&columns, 0, &mut used, &mut mono, &mut out);
    out
}

fn search(
    columns: &[Vec<RoutedPath>],
    i: usize,
    used: &mut HashSet<Edge>,
    mono: &mut Monomial,
    out: &mut LoopPolynomial,
) {
    if i == columns.len() {
        out.add_term(mono.clone(), BigInt::one());
        return;
    }
    for p in &columns[i] {
        if p.edges.iter().any(|e| used.contains(e)) {
            continue;
        }
        used.extend(p.edges.iter().copied());
        for (a, b) in mono.iter_mut().zip(&p.mono) {
            *a += b;
        }
        search(columns, i + 1, used, mono, out);
        for (a, b) in mono.iter_mut().zip(&p.mono) {
            *a -= b;
        }
        for e in &p.edges {
            used.remove(e);
        }
    }
}
