//! Brute-force reference implementations. Everything here enumerates subsets,
//! matchings or labelled graphs directly and shares no code with the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use gconj_core::{Graph, Rational};

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.rows()[u] >> v & 1 == 1
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

fn is_independent(g: &Graph, s: u64) -> bool {
    let n = g.order();
    (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !adjacent(g, u, v)))
}

fn dominates(g: &Graph, s: u64) -> bool {
    let n = g.order();
    (0..n).all(|v| s >> v & 1 == 1 || (0..n).any(|u| s >> u & 1 == 1 && adjacent(g, u, v)))
}

pub fn alpha(g: &Graph) -> usize {
    subsets(g.order()).filter(|&s| is_independent(g, s)).map(|s| s.count_ones() as usize).max().unwrap()
}

pub fn gamma(g: &Graph) -> usize {
    subsets(g.order()).filter(|&s| dominates(g, s)).map(|s| s.count_ones() as usize).min().unwrap()
}

pub fn indep_dom(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|&s| is_independent(g, s) && dominates(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(g, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Every matching, as a set of edge indices.
pub fn matchings(g: &Graph) -> Vec<Vec<usize>> {
    fn go(edges: &[(usize, usize)], i: usize, used: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == edges.len() {
            out.push(cur.clone());
            return;
        }
        go(edges, i + 1, used, cur, out);
        let (u, v) = edges[i];
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            cur.push(i);
            go(edges, i + 1, used | 1 << u | 1 << v, cur, out);
            cur.pop();
        }
    }
    let edges = edge_list(g);
    let mut out = Vec::new();
    go(&edges, 0, 0, &mut Vec::new(), &mut out);
    out
}

pub fn mu(g: &Graph) -> usize {
    matchings(g).iter().map(Vec::len).max().unwrap()
}

pub fn mu_star(g: &Graph) -> usize {
    let edges = edge_list(g);
    matchings(g)
        .iter()
        .filter(|m| {
            let covered: u64 = m.iter().map(|&i| 1u64 << edges[i].0 | 1u64 << edges[i].1).fold(0, |a, b| a | b);
            edges.iter().all(|&(u, v)| covered >> u & 1 == 1 || covered >> v & 1 == 1)
        })
        .map(Vec::len)
        .min()
        .unwrap()
}

fn forcing_closure(g: &Graph, blue: u64) -> u64 {
    let n = g.order();
    let mut blue = blue;
    loop {
        let mut changed = false;
        for v in 0..n {
            if blue >> v & 1 == 0 {
                continue;
            }
            let white: Vec<usize> = (0..n).filter(|&w| adjacent(g, v, w) && blue >> w & 1 == 0).collect();
            if white.len() == 1 {
                blue |= 1 << white[0];
                changed = true;
            }
        }
        if !changed {
            return blue;
        }
    }
}

pub fn zero_forcing(g: &Graph) -> usize {
    let full = (1u64 << g.order()) - 1;
    subsets(g.order())
        .filter(|&s| forcing_closure(g, s) == full)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn degrees(g: &Graph) -> Vec<usize> {
    let n = g.order();
    (0..n).map(|u| (0..n).filter(|&v| adjacent(g, u, v)).count()).collect()
}

/// Largest vertex set whose degree sum is at most m.
pub fn annihilation(g: &Graph) -> usize {
    let d = degrees(g);
    let m = d.iter().sum::<usize>() / 2;
    subsets(g.order())
        .filter(|&s| (0..g.order()).filter(|&v| s >> v & 1 == 1).map(|v| d[v]).sum::<usize>() <= m)
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Havel-Hakimi residue on a multiset of degrees kept as counts per value.
pub fn residue(g: &Graph) -> usize {
    let d = degrees(g);
    let top = d.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; top + 1];
    for x in d {
        count[x] += 1;
    }
    loop {
        let Some(hi) = (1..count.len()).rev().find(|&x| count[x] > 0) else {
            return count[0];
        };
        count[hi] -= 1;
        let mut need = hi;
        let mut moved = vec![0usize; count.len()];
        for x in (1..count.len()).rev() {
            let take = need.min(count[x]);
            count[x] -= take;
            moved[x - 1] += take;
            need -= take;
        }
        assert_eq!(need, 0, "not graphic");
        for (x, c) in moved.into_iter().enumerate() {
            count[x] += c;
        }
    }
}

pub fn harmonic(g: &Graph) -> Rational {
    let d = degrees(g);
    edge_list(g).into_iter().fold(Rational::zero(), |acc, (u, v)| acc + Rational::new(2, (d[u] + d[v]) as i64))
}

/// Labelled graphs on `n` vertices, as edge bitmasks over the pairs of `pairs(n)`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn labelled(n: usize, mask: u64) -> Graph {
    let p = pairs(n);
    Graph::from_edges(n, (0..p.len()).filter(|&i| mask >> i & 1 == 1).map(|i| p[i])).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Smallest edge mask over all relabellings.
pub fn brute_canonical(n: usize, mask: u64, perms: &[Vec<usize>]) -> u64 {
    let p = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in p.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    perms
        .iter()
        .map(|perm| {
            (0..p.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| 1u64 << index[perm[p[i].0]][perm[p[i].1]])
                .fold(0, |a, b| a | b)
        })
        .min()
        .unwrap()
}

fn connected_mask(n: usize, mask: u64) -> bool {
    let p = pairs(n);
    let mut seen = 1u64;
    loop {
        let mut next = seen;
        for (i, &(u, v)) in p.iter().enumerate() {
            if mask >> i & 1 == 1 && (seen >> u & 1 == 1 || seen >> v & 1 == 1) {
                next |= 1 << u | 1 << v;
            }
        }
        if next == seen {
            return seen.count_ones() as usize == n;
        }
        seen = next;
    }
}

/// Isomorphism classes of connected graphs on `n` vertices, by exhaustive relabelling.
pub fn connected_classes(n: usize) -> BTreeSet<u64> {
    let perms = permutations(n);
    let edges = n * (n - 1) / 2;
    (0..1u64 << edges).filter(|&m| connected_mask(n, m)).map(|m| brute_canonical(n, m, &perms)).collect()
}

/// Sorted degree sequences realised by some labelled graph on `n` vertices.
pub fn realisable_sequences(n: usize) -> BTreeSet<Vec<usize>> {
    let p = pairs(n);
    (0..1u64 << p.len())
        .map(|mask| {
            let mut d = vec![0usize; n];
            for (i, &(u, v)) in p.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d[u] += 1;
                    d[v] += 1;
                }
            }
            d.sort_unstable_by(|a, b| b.cmp(a));
            d
        })
        .collect()
}

/// Every sequence of `len` entries in `0..=max`.
pub fn all_sequences(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..=max).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}
