//! Labeled point configurations, tolerance policy, and distance quantization.
//!
//! Everything downstream (symmetry search, homogeneity tests, face analysis)
//! works on two values produced here: a [`VertexSet`] normalized to
//! circumradius 1 and its [`DistanceClasses`], the quantized pairwise-distance
//! structure. All floating-point comparisons in the crate funnel through the
//! quantization step, so the tolerance story lives in one place.

use thiserror::Error;

/// Errors produced by vertex-set construction and distance quantization.
#[derive(Debug, Clone, Error)]
pub enum GeometryError {
    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),
    /// The points are not equidistant from their barycenter. Callers may
    /// still analyze such a configuration (it simply is not homogeneous),
    /// but sphere-based shortcuts are off the table.
    #[error("vertex set is not inscribed about its barycenter (distance spread {max_deviation:.3e})")]
    NotInscribed { max_deviation: f64 },
    /// Two distance clusters sit too close relative to their internal spread.
    /// This signals parameters at a degenerate boundary; perturb the input
    /// rather than trusting the class assignment.
    #[error("ambiguous distance classes: cluster gap {gap:.3e} below required {required:.3e}")]
    AmbiguousClasses { gap: f64, required: f64 },
}

/// Tolerance policy for quantizing a configuration's metric data.
///
/// `dist_abs` is an absolute distance tolerance and assumes coordinates
/// normalized to circumradius 1 (see [`VertexSet::normalize`]); `class_gap`
/// is the minimum ratio between the separation of two distance classes and
/// the spread inside a class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub dist_abs: f64,
    pub class_gap: f64,
}

impl Tolerance {
    pub fn new(dist_abs: f64, class_gap: f64) -> Result<Self, GeometryError> {
        if !(dist_abs > 0.0 && dist_abs < 1e-3) {
            return Err(GeometryError::InvalidVertexSet(format!(
                "dist_abs must lie in (0, 1e-3), got {dist_abs}"
            )));
        }
        if !(class_gap >= 10.0) {
            return Err(GeometryError::InvalidVertexSet(format!(
                "class_gap must be >= 10, got {class_gap}"
            )));
        }
        Ok(Self { dist_abs, class_gap })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { dist_abs: 1e-9, class_gap: 10.0 }
    }
}

/// A finite labeled point configuration in `R^dim` — the metric space under
/// study, with Euclidean distances.
#[derive(Debug, Clone)]
pub struct VertexSet {
    dim: usize,
    points: Vec<Vec<f64>>,
    labels: Option<Vec<String>>,
    tol: Tolerance,
}

/// Euclidean distance between two coordinate slices.
pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

impl VertexSet {
    /// Builds a vertex set, checking that the points are pairwise distinct
    /// and consistently dimensioned.
    pub fn new(dim: usize, points: Vec<Vec<f64>>, tol: Tolerance) -> Result<Self, GeometryError> {
        if dim == 0 {
            return Err(GeometryError::InvalidVertexSet("dimension must be positive".into()));
        }
        if points.len() < 2 {
            return Err(GeometryError::InvalidVertexSet(format!(
                "need at least 2 points, got {}",
                points.len()
            )));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(GeometryError::InvalidVertexSet(format!(
                    "point {i} has {} coordinates, expected {dim}",
                    p.len()
                )));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(GeometryError::InvalidVertexSet(format!(
                    "point {i} has a non-finite coordinate"
                )));
            }
        }
        let scale = max_spread(&points).max(1.0);
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if dist(&points[i], &points[j]) <= tol.dist_abs * scale {
                    return Err(GeometryError::InvalidVertexSet(format!(
                        "points {i} and {j} coincide within tolerance"
                    )));
                }
            }
        }
        Ok(Self { dim, points, labels: None, tol })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GeometryError> {
        if labels.len() != self.points.len() {
            return Err(GeometryError::InvalidVertexSet(format!(
                "{} labels for {} points",
                labels.len(),
                self.points.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => format!("v{i}"),
        }
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        dist(&self.points[i], &self.points[j])
    }

    /// Coordinate-wise mean of the points. Invariant under any reordering.
    pub fn barycenter(&self) -> Vec<f64> {
        let q = self.points.len() as f64;
        let mut c = vec![0.0; self.dim];
        for p in &self.points {
            for (ci, xi) in c.iter_mut().zip(p) {
                *ci += xi;
            }
        }
        for ci in &mut c {
            *ci /= q;
        }
        c
    }

    /// Checks that all points are equidistant from the barycenter and returns
    /// that common center and radius.
    ///
    /// A configuration whose isometry group is transitive on points is always
    /// inscribed this way, so a failure here rules homogeneity out early.
    /// The tolerance scales with the configuration's extent so the check is
    /// meaningful before normalization.
    pub fn inscribed_check(&self) -> Result<Inscribed, GeometryError> {
        let center = self.barycenter();
        let radii: Vec<f64> = self.points.iter().map(|p| dist(p, &center)).collect();
        let rmax = radii.iter().cloned().fold(f64::MIN, f64::max);
        let rmin = radii.iter().cloned().fold(f64::MAX, f64::min);
        let spread = rmax - rmin;
        if spread > self.tol.dist_abs * rmax.max(1.0) {
            return Err(GeometryError::NotInscribed { max_deviation: spread });
        }
        let radius = radii.iter().sum::<f64>() / radii.len() as f64;
        Ok(Inscribed { center, radius })
    }

    /// Translates the barycenter to the origin and rescales to circumradius 1.
    ///
    /// Fails with [`GeometryError::NotInscribed`] when the input has no
    /// common circumradius about its barycenter. The normalized form is what
    /// every tolerance in the crate assumes.
    pub fn normalize(&self) -> Result<VertexSet, GeometryError> {
        let Inscribed { center, radius } = self.inscribed_check()?;
        let points = self
            .points
            .iter()
            .map(|p| p.iter().zip(&center).map(|(x, c)| (x - c) / radius).collect())
            .collect();
        Ok(VertexSet {
            dim: self.dim,
            points,
            labels: self.labels.clone(),
            tol: self.tol,
        })
    }

    /// Translates the barycenter to the origin and rescales so the farthest
    /// point sits at distance 1, without requiring a common circumradius.
    /// This is the fallback normal form for configurations that fail
    /// [`VertexSet::inscribed_check`].
    pub fn center_and_scale(&self) -> VertexSet {
        let center = self.barycenter();
        let rmax = self
            .points
            .iter()
            .map(|p| dist(p, &center))
            .fold(f64::MIN, f64::max);
        let points = self
            .points
            .iter()
            .map(|p| p.iter().zip(&center).map(|(x, c)| (x - c) / rmax).collect())
            .collect();
        VertexSet {
            dim: self.dim,
            points,
            labels: self.labels.clone(),
            tol: self.tol,
        }
    }

    /// Sorts all pairwise distances, merges values closer than `dist_abs`
    /// into classes (single linkage), and assigns every pair its class index.
    ///
    /// Class index 0 is reserved for the diagonal; classes `1..=s` are in
    /// increasing distance order. Errors with
    /// [`GeometryError::AmbiguousClasses`] when two clusters approach each
    /// other within `class_gap` times the largest in-cluster spread.
    pub fn distance_classes(&self) -> Result<DistanceClasses, GeometryError> {
        let q = self.points.len();
        let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(q * (q - 1) / 2);
        for i in 0..q {
            for j in (i + 1)..q {
                pairs.push((self.distance(i, j), i, j));
            }
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

        // single-linkage clustering on the sorted distance list
        let mut clusters: Vec<(f64, f64, Vec<(usize, usize)>)> = Vec::new();
        for &(d, i, j) in &pairs {
            match clusters.last_mut() {
                Some((_, max, members)) if d - *max <= self.tol.dist_abs => {
                    *max = d;
                    members.push((i, j));
                }
                _ => clusters.push((d, d, vec![(i, j)])),
            }
        }

        let max_spread = clusters
            .iter()
            .map(|(min, max, _)| max - min)
            .fold(0.0, f64::max);
        let values: Vec<f64> = clusters
            .iter()
            .map(|(min, max, _)| 0.5 * (min + max))
            .collect();
        for w in values.windows(2) {
            let gap = w[1] - w[0];
            let required = self.tol.class_gap * max_spread;
            if gap < required {
                return Err(GeometryError::AmbiguousClasses { gap, required });
            }
        }

        let mut class_of = vec![vec![0usize; q]; q];
        for (k, (_, _, members)) in clusters.iter().enumerate() {
            for &(i, j) in members {
                class_of[i][j] = k + 1;
                class_of[j][i] = k + 1;
            }
        }
        Ok(DistanceClasses { values, class_of })
    }

    /// Rank of the centered coordinate matrix: the dimension of the affine
    /// hull of the points.
    pub fn affine_dim(&self) -> usize {
        let center = self.barycenter();
        let q = self.points.len();
        let m = nalgebra::DMatrix::from_fn(self.dim, q, |r, c| self.points[c][r] - center[r]);
        let scale = max_spread(&self.points).max(1.0);
        m.rank(1e-9 * scale)
    }
}

fn max_spread(points: &[Vec<f64>]) -> f64 {
    let mut m: f64 = 0.0;
    for p in points {
        for &x in p {
            m = m.max(x.abs());
        }
    }
    m
}

/// Common center and radius returned by [`VertexSet::inscribed_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct Inscribed {
    pub center: Vec<f64>,
    pub radius: f64,
}

/// Quantized pairwise-distance structure of a vertex set: the sorted distinct
/// distance values `d_1 < … < d_s` and, for every ordered pair of vertices,
/// the index of the class its distance falls in (0 on the diagonal).
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceClasses {
    values: Vec<f64>,
    class_of: Vec<Vec<usize>>,
}

impl DistanceClasses {
    /// Assembles the structure from raw parts without re-clustering.
    /// Intended for tests and callers that quantize by other means; the
    /// matrix must be symmetric with a zero diagonal.
    pub fn from_parts(values: Vec<f64>, class_of: Vec<Vec<usize>>) -> Result<Self, GeometryError> {
        let q = class_of.len();
        for (i, row) in class_of.iter().enumerate() {
            if row.len() != q {
                return Err(GeometryError::InvalidVertexSet("class matrix is not square".into()));
            }
            if row[i] != 0 {
                return Err(GeometryError::InvalidVertexSet("class matrix diagonal must be 0".into()));
            }
            for (j, &c) in row.iter().enumerate() {
                if class_of[j][i] != c {
                    return Err(GeometryError::InvalidVertexSet("class matrix is not symmetric".into()));
                }
                if i != j && (c == 0 || c > values.len()) {
                    return Err(GeometryError::InvalidVertexSet(format!(
                        "class index {c} out of range at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self { values, class_of })
    }

    /// Number of distinct nonzero distance classes.
    pub fn class_count(&self) -> usize {
        self.values.len()
    }

    /// Representative distance of class `k` (1-based).
    pub fn value(&self, k: usize) -> f64 {
        self.values[k - 1]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Class index of the pair `(i, j)`; 0 iff `i == j`.
    pub fn class_of(&self, i: usize, j: usize) -> usize {
        self.class_of[i][j]
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(points: Vec<Vec<f64>>) -> VertexSet {
        VertexSet::new(points[0].len(), points, Tolerance::default()).unwrap()
    }

    #[test]
    fn barycenter_of_cube_is_origin() {
        let mut pts = Vec::new();
        for sx in [-1.0, 1.0] {
            for sy in [-1.0, 1.0] {
                for sz in [-1.0, 1.0] {
                    pts.push(vec![sx, sy, sz]);
                }
            }
        }
        let b = vs(pts).barycenter();
        assert!(b.iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn barycenter_of_regular_triangle() {
        let t = vs(vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![1.0, 3.0_f64.sqrt()]]);
        let b = t.barycenter();
        assert!((b[0] - 1.0).abs() < 1e-12);
        assert!((b[1] - 3.0_f64.sqrt() / 3.0).abs() < 1e-12);
    }

    #[test]
    fn inscribed_cube_radius() {
        let mut pts = Vec::new();
        for sx in [-1.0, 1.0] {
            for sy in [-1.0, 1.0] {
                for sz in [-1.0, 1.0] {
                    pts.push(vec![sx, sy, sz]);
                }
            }
        }
        let ins = vs(pts).inscribed_check().unwrap();
        assert!((ins.radius - 3.0_f64.sqrt()).abs() < 1e-12);
        assert!(ins.center.iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn not_inscribed_is_reported() {
        let t = vs(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![3.0, 0.5]]);
        match t.inscribed_check() {
            Err(GeometryError::NotInscribed { max_deviation }) => assert!(max_deviation > 0.1),
            other => panic!("expected NotInscribed, got {other:?}"),
        }
    }

    #[test]
    fn normalize_scales_triangle_to_unit_circumradius() {
        let t = vs(vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![1.0, 3.0_f64.sqrt()]]);
        let n = t.normalize().unwrap();
        for p in n.points() {
            let r = dist(p, &[0.0, 0.0]);
            assert!((r - 1.0).abs() < 1e-12);
        }
        // side length 2 scaled by 1/(2/sqrt(3))
        let expected = 2.0 / (2.0 / 3.0_f64.sqrt());
        assert!((n.distance(0, 1) - expected).abs() < 1e-12);
    }

    #[test]
    fn normalize_is_idempotent() {
        let t = vs(vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![1.0, 3.0_f64.sqrt()]]);
        let n1 = t.normalize().unwrap();
        let n2 = n1.normalize().unwrap();
        for (p, q) in n1.points().iter().zip(n2.points()) {
            assert!(dist(p, q) < 1e-12);
        }
    }

    #[test]
    fn square_has_two_distance_classes() {
        let s = vs(vec![
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![-1.0, 0.0],
            vec![0.0, -1.0],
        ]);
        let dc = s.distance_classes().unwrap();
        assert_eq!(dc.class_count(), 2);
        assert!((dc.value(1) - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!((dc.value(2) - 2.0).abs() < 1e-12);
        assert_eq!(dc.class_of(0, 2), 2);
        assert_eq!(dc.class_of(0, 0), 0);
    }

    #[test]
    fn duplicate_points_rejected() {
        let r = VertexSet::new(
            2,
            vec![vec![0.0, 0.0], vec![0.0, 0.0]],
            Tolerance::default(),
        );
        assert!(matches!(r, Err(GeometryError::InvalidVertexSet(_))));
    }

    #[test]
    fn affine_dim_of_planar_set_in_3d() {
        let s = vs(vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![-1.0, 0.0, 0.0],
            vec![0.0, -1.0, 0.0],
        ]);
        assert_eq!(s.affine_dim(), 2);
    }

    #[test]
    fn ambiguous_classes_detected() {
        // four collinear points engineered so two clusters nearly touch:
        // distances 1.0, 1.0 + 0.6e-9 merge into one cluster (spread 0.6e-9)
        // while the next value sits 5e-9 away, below 10x the spread.
        let eps = 0.6e-9;
        let s = vs(vec![
            vec![0.0],
            vec![1.0],
            vec![2.0 + eps],
            vec![3.0 + eps + 1.0 + eps + 5e-9],
        ]);
        match s.distance_classes() {
            Err(GeometryError::AmbiguousClasses { .. }) => {}
            other => panic!("expected AmbiguousClasses, got {other:?}"),
        }
    }
}
