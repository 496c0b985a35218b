//! Full isometry groups of finite point configurations.
//!
//! A bijection of an inscribed point set that preserves all pairwise
//! distances extends to an orthogonal map of the ambient space, so the
//! isometry group of the metric space can be computed combinatorially: search
//! for all permutations preserving the distance-class matrix, then solve for
//! the orthogonal matrix realizing each one and verify it. The search refines
//! per-vertex invariants (distance-class profiles) to fixed point before
//! backtracking, which keeps the tree close to the group itself.

use std::collections::HashMap;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::geometry::{DistanceClasses, VertexSet};

#[derive(Debug, Clone, Error)]
pub enum SymmetryError {
    /// A distance-class automorphism admits no orthogonal realization within
    /// tolerance. For a genuinely inscribed configuration this cannot happen
    /// (equal norms and equal distances force equal inner products), so it
    /// signals a misconfigured tolerance or a hand-built class matrix.
    #[error("permutation {mapping:?} has no orthogonal witness (residual {residual:.3e})")]
    WitnessFailure { mapping: Vec<usize>, residual: f64 },
}

/// A permutation of vertex indices, stored as the image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    pub fn from_map(map: Vec<usize>) -> Option<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Self { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.map
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// The full isometry group of a vertex set: every distance-class-preserving
/// permutation together with an orthogonal matrix realizing it on the
/// normalized coordinates. Elements are sorted lexicographically by mapping,
/// so equal inputs give identical element lists.
#[derive(Debug, Clone)]
pub struct IsometryGroup {
    elements: Vec<Permutation>,
    witnesses: Vec<DMatrix<f64>>,
}

impl IsometryGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &Permutation {
        &self.elements[k]
    }

    /// Orthogonal matrix realizing element `k` on the ambient space.
    pub fn witness(&self, k: usize) -> &DMatrix<f64> {
        &self.witnesses[k]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Elements fixing vertex `v`, with their witnesses.
    pub fn isotropy_subgroup(&self, v: usize) -> IsometryGroup {
        let mut elements = Vec::new();
        let mut witnesses = Vec::new();
        for (e, w) in self.elements.iter().zip(&self.witnesses) {
            if e.apply(v) == v {
                elements.push(e.clone());
                witnesses.push(w.clone());
            }
        }
        IsometryGroup { elements, witnesses }
    }

    /// Partition of `subset` into orbits of the group action. Orbits of the
    /// full action are intersected with the subset, so the result is a
    /// partition even when the subset is not invariant.
    pub fn orbits(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let n = self.elements.first().map_or(0, |e| e.len());
        let mut orbit_id = vec![usize::MAX; n];
        let mut next = 0;
        for &x in subset {
            if orbit_id[x] == usize::MAX {
                for e in &self.elements {
                    let y = e.apply(x);
                    if orbit_id[y] == usize::MAX {
                        orbit_id[y] = next;
                    }
                }
                next += 1;
            }
        }
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); next];
        for &x in subset {
            buckets[orbit_id[x]].push(x);
        }
        buckets
    }

    /// Single orbit on all vertices, i.e. the configuration is homogeneous.
    pub fn is_transitive(&self) -> bool {
        let n = self.elements.first().map_or(0, |e| e.len());
        let all: Vec<usize> = (0..n).collect();
        self.orbits(&all).len() == 1
    }

    /// Checks the group axioms: full multiplication table for orders up to
    /// 400, a fixed pseudo-random sample of pairs above that.
    pub fn verify_axioms(&self) -> bool {
        let n = match self.elements.first() {
            Some(e) => e.len(),
            None => return false,
        };
        if !self.contains(&Permutation::identity(n)) {
            return false;
        }
        for e in &self.elements {
            if !self.contains(&e.inverse()) {
                return false;
            }
        }
        let m = self.elements.len();
        if m <= 400 {
            for a in &self.elements {
                for b in &self.elements {
                    if !self.contains(&a.compose(b)) {
                        return false;
                    }
                }
            }
        } else {
            let mut state: u64 = 0x9e3779b97f4a7c15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..1000 {
                let a = &self.elements[(next() % m as u64) as usize];
                let b = &self.elements[(next() % m as u64) as usize];
                if !self.contains(&a.compose(b)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Computes the full isometry group of `vs` (which should be centered at the
/// origin, as produced by [`VertexSet::normalize`] or
/// [`VertexSet::center_and_scale`]) as the set of all permutations preserving
/// the distance-class matrix `dc`, each verified by an orthogonal witness.
pub fn isometry_group(vs: &VertexSet, dc: &DistanceClasses) -> Result<IsometryGroup, SymmetryError> {
    let q = vs.len();
    let colors = refine_colors(dc);

    // static target order: rarest colors first, ties by index
    let mut freq: HashMap<u64, usize> = HashMap::new();
    for &c in &colors {
        *freq.entry(c).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = (0..q).collect();
    order.sort_by_key(|&i| (freq[&colors[i]], colors[i], i));

    let mut solutions: Vec<Permutation> = Vec::new();
    let mut image = vec![usize::MAX; q];
    let mut used = vec![false; q];
    search(dc, &colors, &order, 0, &mut image, &mut used, &mut solutions);
    solutions.sort();

    let realizer = WitnessBuilder::new(vs);
    let mut witnesses = Vec::with_capacity(solutions.len());
    for p in &solutions {
        witnesses.push(realizer.realize(vs, p)?);
    }
    Ok(IsometryGroup { elements: solutions, witnesses })
}

fn search(
    dc: &DistanceClasses,
    colors: &[u64],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    let q = order.len();
    if depth == q {
        out.push(Permutation { map: image.to_vec() });
        return;
    }
    let v = order[depth];
    'cand: for u in 0..q {
        if used[u] || colors[u] != colors[v] {
            continue;
        }
        for &w in &order[..depth] {
            if dc.class_of(v, w) != dc.class_of(u, image[w]) {
                continue 'cand;
            }
        }
        image[v] = u;
        used[u] = true;
        search(dc, colors, order, depth + 1, image, used, out);
        image[v] = usize::MAX;
        used[u] = false;
    }
}

/// Iterated refinement of vertex colors by distance-class profiles: a
/// vertex's color becomes the multiset of (class, neighbor color) pairs over
/// all other vertices, repeated to a fixed point.
fn refine_colors(dc: &DistanceClasses) -> Vec<u64> {
    let q = dc.len();
    let mut colors = vec![0u64; q];
    loop {
        let mut sigs: Vec<(Vec<(usize, u64)>, usize)> = (0..q)
            .map(|i| {
                let mut profile: Vec<(usize, u64)> = (0..q)
                    .filter(|&j| j != i)
                    .map(|j| (dc.class_of(i, j), colors[j]))
                    .collect();
                profile.sort_unstable();
                (profile, i)
            })
            .collect();
        sigs.sort();
        let mut new_colors = vec![0u64; q];
        let mut current = 0u64;
        for k in 0..q {
            if k > 0 && sigs[k].0 != sigs[k - 1].0 {
                current += 1;
            }
            new_colors[sigs[k].1] = current;
        }
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

/// Solves for orthogonal witnesses from a fixed, canonical linearly
/// independent base tuple of vertices, working inside the linear span of the
/// configuration and extending by the identity on its complement.
struct WitnessBuilder {
    /// orthonormal basis of the span, as columns (ambient_dim x rank)
    span: DMatrix<f64>,
    /// span coordinates of every vertex (rank x q)
    coords: DMatrix<f64>,
    /// indices of the canonical base tuple
    base: Vec<usize>,
    /// inverse of the base coordinate matrix
    base_inv: DMatrix<f64>,
    tol: f64,
}

impl WitnessBuilder {
    fn new(vs: &VertexSet) -> Self {
        let n = vs.dim();
        let q = vs.len();
        let m = DMatrix::from_fn(n, q, |r, c| vs.point(c)[r]);
        let svd = m.clone().svd(true, false);
        let u = svd.u.as_ref().expect("SVD with U requested");
        let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
        let rank = svd
            .singular_values
            .iter()
            .filter(|&&s| s > 1e-9 * smax.max(1.0))
            .count();
        let span = u.columns(0, rank).into_owned();
        let coords = span.transpose() * &m;

        // greedy canonical base: first vertices whose span coordinates are
        // linearly independent
        let mut base: Vec<usize> = Vec::new();
        let mut chosen: Vec<DVector<f64>> = Vec::new();
        for i in 0..q {
            if base.len() == rank {
                break;
            }
            let v = coords.column(i).into_owned();
            let mut resid = v.clone();
            for b in &chosen {
                let proj = b.dot(&resid) / b.dot(b);
                resid -= b * proj;
            }
            if resid.norm() > 1e-6 {
                base.push(i);
                chosen.push(v);
            }
        }
        let base_mat = DMatrix::from_fn(rank, rank, |r, c| coords[(r, base[c])]);
        let base_inv = base_mat
            .try_inverse()
            .expect("canonical base tuple is invertible by construction");
        Self {
            span,
            coords,
            base,
            base_inv,
            tol: 10.0 * vs.tol().dist_abs,
        }
    }

    fn realize(&self, vs: &VertexSet, p: &Permutation) -> Result<DMatrix<f64>, SymmetryError> {
        let rank = self.base.len();
        let target = DMatrix::from_fn(rank, rank, |r, c| self.coords[(r, p.apply(self.base[c]))]);
        let q_span = target * &self.base_inv;

        // orthogonality within the span
        let gram = &q_span * q_span.transpose();
        let mut residual: f64 = 0.0;
        for r in 0..rank {
            for c in 0..rank {
                let expected = if r == c { 1.0 } else { 0.0 };
                residual = residual.max((gram[(r, c)] - expected).abs());
            }
        }
        // the witness must push every vertex onto its image
        for i in 0..vs.len() {
            let img = &q_span * self.coords.column(i);
            let diff = (&img - self.coords.column(p.apply(i))).norm();
            residual = residual.max(diff);
        }
        if residual > self.tol {
            return Err(SymmetryError::WitnessFailure {
                mapping: p.mapping().to_vec(),
                residual,
            });
        }

        // embed: identity on the orthogonal complement of the span
        let n = vs.dim();
        let eye = DMatrix::<f64>::identity(n, n);
        let proj = &self.span * self.span.transpose();
        Ok(&self.span * q_span * self.span.transpose() + (eye - proj))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Tolerance;

    fn group_of(points: Vec<Vec<f64>>) -> IsometryGroup {
        let vs = VertexSet::new(points[0].len(), points, Tolerance::default())
            .unwrap()
            .normalize()
            .unwrap();
        let dc = vs.distance_classes().unwrap();
        isometry_group(&vs, &dc).unwrap()
    }

    #[test]
    fn cube_group_has_order_48() {
        let mut pts = Vec::new();
        for sx in [-1.0, 1.0] {
            for sy in [-1.0, 1.0] {
                for sz in [-1.0, 1.0] {
                    pts.push(vec![sx, sy, sz]);
                }
            }
        }
        let g = group_of(pts);
        assert_eq!(g.order(), 48);
        assert!(g.verify_axioms());
        assert!(g.is_transitive());
        // orbit-stabilizer at every vertex
        for v in 0..8 {
            assert_eq!(g.isotropy_subgroup(v).order(), 6);
        }
    }

    #[test]
    fn segment_group_has_order_2() {
        let vs = VertexSet::new(2, vec![vec![0.0, 0.0], vec![1.0, 0.0]], Tolerance::default())
            .unwrap()
            .normalize()
            .unwrap();
        let dc = vs.distance_classes().unwrap();
        let g = isometry_group(&vs, &dc).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.verify_axioms());
    }

    #[test]
    fn witnesses_are_orthogonal_and_map_vertices() {
        let mut pts = Vec::new();
        for sx in [-1.0, 1.0] {
            for sy in [-1.0, 1.0] {
                pts.push(vec![sx, sy, 0.5]);
            }
        }
        let vs = VertexSet::new(3, pts, Tolerance::default())
            .unwrap()
            .normalize()
            .unwrap();
        let dc = vs.distance_classes().unwrap();
        let g = isometry_group(&vs, &dc).unwrap();
        assert_eq!(g.order(), 8);
        for k in 0..g.order() {
            let w = g.witness(k);
            let gram = w * w.transpose();
            for r in 0..3 {
                for c in 0..3 {
                    let expected = if r == c { 1.0 } else { 0.0 };
                    assert!((gram[(r, c)] - expected).abs() < 1e-8);
                }
            }
            for i in 0..vs.len() {
                let x = nalgebra::DVector::from_column_slice(vs.point(i));
                let img = w * x;
                let target = vs.point(g.element(k).apply(i));
                for (a, b) in img.iter().zip(target) {
                    assert!((a - b).abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn witness_failure_on_forged_classes() {
        // a 4-point path with all pairs forced into one class: every
        // permutation is class-preserving, but most have no rigid motion
        let vs = VertexSet::new(
            1,
            vec![vec![0.0], vec![1.0], vec![3.0], vec![7.0]],
            Tolerance::default(),
        )
        .unwrap()
        .center_and_scale();
        let q = vs.len();
        let mut class_of = vec![vec![1usize; q]; q];
        for (i, row) in class_of.iter_mut().enumerate() {
            row[i] = 0;
        }
        let dc = DistanceClasses::from_parts(vec![1.0], class_of).unwrap();
        match isometry_group(&vs, &dc) {
            Err(SymmetryError::WitnessFailure { .. }) => {}
            other => panic!("expected WitnessFailure, got {other:?}"),
        }
    }

    #[test]
    fn orbits_partition_subsets() {
        let g = group_of(vec![
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![-1.0, 0.0],
            vec![0.0, -1.0],
        ]);
        assert_eq!(g.order(), 8);
        let orbits = g.orbits(&[0, 1, 2, 3]);
        assert_eq!(orbits.len(), 1);
        let trivial = g.isotropy_subgroup(0).isotropy_subgroup(1);
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.orbits(&[0, 1, 2, 3]).len(), 4);
    }
}
