//! Coordinate generators for the polytope families under study.
//!
//! Every generator returns explicit vertex coordinates as a [`VertexSet`];
//! nothing here depends on hulls or groups, so the constructions can be fed
//! straight into the analysis pipeline. Layer-structured families (prisms,
//! antiprisms) list the bottom layer first and the top layer second, so the
//! index split `0..q/2` / `q/2..q` recovers the bases.

use thiserror::Error;

use crate::geometry::{GeometryError, Tolerance, VertexSet};

#[derive(Debug, Clone, Error)]
pub enum ConstructionError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("bad angles: {0}")]
    BadAngles(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

/// The five regular polyhedra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlatonicKind {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicKind {
    pub const ALL: [PlatonicKind; 5] = [
        PlatonicKind::Tetrahedron,
        PlatonicKind::Cube,
        PlatonicKind::Octahedron,
        PlatonicKind::Dodecahedron,
        PlatonicKind::Icosahedron,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PlatonicKind::Tetrahedron => "tetrahedron",
            PlatonicKind::Cube => "cube",
            PlatonicKind::Octahedron => "octahedron",
            PlatonicKind::Dodecahedron => "dodecahedron",
            PlatonicKind::Icosahedron => "icosahedron",
        }
    }

    pub fn parse(s: &str) -> Option<PlatonicKind> {
        PlatonicKind::ALL.iter().copied().find(|k| k.name() == s)
    }
}

const PHI: f64 = 1.618033988749894848;

fn sign_patterns(n: usize) -> impl Iterator<Item = Vec<f64>> {
    (0..1usize << n).map(move |bits| {
        (0..n)
            .map(|i| if bits >> i & 1 == 0 { 1.0 } else { -1.0 })
            .collect()
    })
}

fn minus_count(bits: usize, n: usize) -> usize {
    (0..n).filter(|i| bits >> i & 1 == 1).count()
}

/// Standard coordinates for the five regular polyhedra.
pub fn platonic(kind: PlatonicKind, tol: Tolerance) -> VertexSet {
    let pts: Vec<Vec<f64>> = match kind {
        PlatonicKind::Tetrahedron => vec![
            vec![1.0, 1.0, 1.0],
            vec![-1.0, -1.0, 1.0],
            vec![-1.0, 1.0, -1.0],
            vec![1.0, -1.0, -1.0],
        ],
        PlatonicKind::Cube => sign_patterns(3).collect(),
        PlatonicKind::Octahedron => vec![
            vec![1.0, 0.0, 0.0],
            vec![-1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, -1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![0.0, 0.0, -1.0],
        ],
        PlatonicKind::Icosahedron => cyclic_orbit(&[0.0, 1.0, PHI]),
        PlatonicKind::Dodecahedron => {
            let mut pts: Vec<Vec<f64>> = sign_patterns(3).collect();
            pts.extend(cyclic_orbit(&[0.0, 1.0 / PHI, PHI]));
            pts
        }
    };
    VertexSet::new(3, pts, tol).expect("platonic coordinates are valid")
}

/// All cyclic shifts of `base` with all sign choices on its nonzero entries.
fn cyclic_orbit(base: &[f64; 3]) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for rot in 0..3 {
        for s1 in [1.0, -1.0] {
            for s2 in [1.0, -1.0] {
                let v = [base[0], s1 * base[1], s2 * base[2]];
                let mut w = vec![0.0; 3];
                for i in 0..3 {
                    w[(i + rot) % 3] = v[i];
                }
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Tetrahedron with vertices `(k,l,m)`, `(-k,-l,m)`, `(-k,l,-m)`, `(k,-l,-m)`:
/// opposite edges have equal lengths `2√(k²+l²)`, `2√(k²+m²)`, `2√(l²+m²)`,
/// and all four faces are congruent acute triangles.
pub fn homogeneous_tetrahedron(k: f64, l: f64, m: f64, tol: Tolerance) -> Result<VertexSet> {
    if !(k > 0.0 && l > 0.0 && m > 0.0) {
        return Err(ConstructionError::BadParams(format!(
            "homogeneous tetrahedron needs k, l, m > 0, got ({k}, {l}, {m})"
        )));
    }
    let pts = vec![
        vec![k, l, m],
        vec![-k, -l, m],
        vec![-k, l, -m],
        vec![k, -l, -m],
    ];
    let vs = VertexSet::new(3, pts, tol)?
        .with_labels(vec!["A1".into(), "A2".into(), "A3".into(), "A4".into()])?;
    Ok(vs)
}

/// Parameters `(k, l, m)` reproducing a homogeneous tetrahedron whose faces
/// have the given side lengths `a <= b <= c` (which must form an acute
/// triangle).
pub fn tetrahedron_params_from_sides(a: f64, b: f64, c: f64) -> Result<(f64, f64, f64)> {
    let (k2, l2, m2) = (
        (a * a + b * b - c * c) / 8.0,
        (a * a - b * b + c * c) / 8.0,
        (-a * a + b * b + c * c) / 8.0,
    );
    if k2 <= 0.0 || l2 <= 0.0 || m2 <= 0.0 {
        return Err(ConstructionError::BadParams(format!(
            "sides ({a}, {b}, {c}) do not form an acute triangle"
        )));
    }
    Ok((k2.sqrt(), l2.sqrt(), m2.sqrt()))
}

/// `2n` points on the unit circle with consecutive angular steps alternating
/// `alpha`, `beta` starting from `(1, 0)`. Requires `0 < alpha < beta` and
/// `alpha + beta = 2π/n`: the orbit of one point under the dihedral group of
/// order `2n`, a homogeneous but non-regular polygon.
pub fn rn_polygon(n: usize, alpha: f64, beta: f64, tol: Tolerance) -> Result<VertexSet> {
    if n < 2 {
        return Err(ConstructionError::BadParams(format!("rn polygon needs n >= 2, got {n}")));
    }
    if !(alpha > 0.0 && alpha < beta) {
        return Err(ConstructionError::BadAngles(format!(
            "need 0 < alpha < beta, got alpha={alpha}, beta={beta}"
        )));
    }
    let step_sum = 2.0 * std::f64::consts::PI / n as f64;
    if (alpha + beta - step_sum).abs() > tol.dist_abs {
        return Err(ConstructionError::BadAngles(format!(
            "alpha + beta must equal 2*pi/{n} = {step_sum}, got {}",
            alpha + beta
        )));
    }
    let mut pts = Vec::with_capacity(2 * n);
    let mut angle: f64 = 0.0;
    for i in 0..2 * n {
        pts.push(vec![angle.cos(), angle.sin()]);
        angle += if i % 2 == 0 { alpha } else { beta };
    }
    Ok(VertexSet::new(2, pts, tol)?)
}

/// Regular `n`-gon with the given circumradius, first vertex on the x-axis.
pub fn regular_polygon(n: usize, circumradius: f64, tol: Tolerance) -> Result<VertexSet> {
    if n < 3 {
        return Err(ConstructionError::BadParams(format!(
            "regular polygon needs n >= 3, got {n}"
        )));
    }
    if !(circumradius > 0.0) {
        return Err(ConstructionError::BadParams("circumradius must be positive".into()));
    }
    let pts = (0..n)
        .map(|k| {
            let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            vec![circumradius * a.cos(), circumradius * a.sin()]
        })
        .collect();
    Ok(VertexSet::new(2, pts, tol)?)
}

/// Axis-aligned rectangle `[0,a] x [0,b]` (a square when `a == b`).
pub fn rectangle(a: f64, b: f64, tol: Tolerance) -> Result<VertexSet> {
    if !(a > 0.0 && b > 0.0) {
        return Err(ConstructionError::BadParams(format!(
            "rectangle needs positive sides, got ({a}, {b})"
        )));
    }
    let pts = vec![vec![0.0, 0.0], vec![a, 0.0], vec![a, b], vec![0.0, b]];
    Ok(VertexSet::new(2, pts, tol)?)
}

/// Two points at distance `length` on a line.
pub fn segment(length: f64, tol: Tolerance) -> Result<VertexSet> {
    if !(length > 0.0) {
        return Err(ConstructionError::BadParams("segment length must be positive".into()));
    }
    Ok(VertexSet::new(1, vec![vec![0.0], vec![length]], tol)?)
}

/// Right prism `base x [0, c]` in one dimension up: the bottom copy of the
/// base occupies indices `0..q`, the top copy `q..2q`.
pub fn prism(base: &VertexSet, c: f64) -> Result<VertexSet> {
    if !(c > 0.0) {
        return Err(ConstructionError::BadParams(format!("prism height must be positive, got {c}")));
    }
    let dim = base.dim() + 1;
    let mut pts = Vec::with_capacity(2 * base.len());
    for layer in [0.0, c] {
        for p in base.points() {
            let mut v = p.clone();
            v.push(layer);
            pts.push(v);
        }
    }
    let mut vs = VertexSet::new(dim, pts, base.tol())?;
    if let Some(labels) = base.labels() {
        let mut ls: Vec<String> = labels.iter().map(|l| format!("{l}/bottom")).collect();
        ls.extend(labels.iter().map(|l| format!("{l}/top")));
        vs = vs.with_labels(ls)?;
    }
    Ok(vs)
}

/// Rectangular box `[0,a] x [0,b] x [0,c]` built as a prism over a rectangle.
pub fn rectangular_box(a: f64, b: f64, c: f64, tol: Tolerance) -> Result<VertexSet> {
    prism(&rectangle(a, b, tol)?, c)
}

/// Right antiprism: two regular `n`-gons of the given circumradius in the
/// planes `z = ±h/2`, the top twisted by `π/n`. Bottom layer first. For
/// `n = 2` the "bases" degenerate to segments and the solid is a tetrahedron.
pub fn right_antiprism(n: usize, circumradius: f64, height: f64, tol: Tolerance) -> Result<VertexSet> {
    if n < 2 {
        return Err(ConstructionError::BadParams(format!("antiprism needs n >= 2, got {n}")));
    }
    if !(circumradius > 0.0 && height > 0.0) {
        return Err(ConstructionError::BadParams(
            "antiprism needs positive circumradius and height".into(),
        ));
    }
    let mut pts = Vec::with_capacity(2 * n);
    for (z, offset) in [(-height / 2.0, 0.0), (height / 2.0, std::f64::consts::PI / n as f64)] {
        for k in 0..n {
            let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + offset;
            pts.push(vec![circumradius * a.cos(), circumradius * a.sin(), z]);
        }
    }
    Ok(VertexSet::new(3, pts, tol)?)
}

/// Height making the lateral edges of `right_antiprism(n, r, h)` equal to the
/// base edges, i.e. the uniform antiprism (the regular octahedron at `n = 3`,
/// the regular tetrahedron at `n = 2`).
pub fn uniform_antiprism_height(n: usize, circumradius: f64) -> f64 {
    let a = std::f64::consts::PI / n as f64;
    (2.0 * circumradius * circumradius * (a.cos() - (2.0 * a).cos())).sqrt()
}

/// Antiprism over a rectangle: vertices `(±a, ±b, 0)` and `(±b, ±a, c)` with
/// `b > a > 0`. Its lateral faces are isosceles trapezoids and its isotropy
/// groups are trivial.
pub fn rect_antiprism(a: f64, b: f64, c: f64, tol: Tolerance) -> Result<VertexSet> {
    if !(b > a && a > 0.0 && c > 0.0) {
        return Err(ConstructionError::BadParams(format!(
            "rectangle antiprism needs b > a > 0 and c > 0, got ({a}, {b}, {c})"
        )));
    }
    let quad = |u: f64, w: f64, z: f64| -> Vec<Vec<f64>> {
        vec![
            vec![u, w, z],
            vec![-u, w, z],
            vec![-u, -w, z],
            vec![u, -w, z],
        ]
    };
    let mut pts = quad(a, b, 0.0);
    pts.extend(quad(b, a, c));
    Ok(VertexSet::new(3, pts, tol)?)
}

/// Convex hull vertices obtained by marking, on every edge of a unit-edge
/// regular polyhedron, the two points at distance `t` from its endpoints.
/// Requires `0 < t < 1/2`; vertex count is exactly twice the edge count.
pub fn partial_truncation(kind: PlatonicKind, t: f64, tol: Tolerance) -> Result<VertexSet> {
    if !(t > 0.0 && t < 0.5) {
        return Err(ConstructionError::BadParams(format!(
            "truncation parameter must lie in (0, 1/2), got {t}"
        )));
    }
    let source = platonic(kind, tol);
    // rescale to unit edge length; edges are exactly the minimum-distance pairs
    let mut min_d = f64::MAX;
    for i in 0..source.len() {
        for j in (i + 1)..source.len() {
            min_d = min_d.min(source.distance(i, j));
        }
    }
    let scale = 1.0 / min_d;
    let pts: Vec<Vec<f64>> = source
        .points()
        .iter()
        .map(|p| p.iter().map(|x| x * scale).collect())
        .collect();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            if (crate::geometry::dist(&pts[i], &pts[j]) - 1.0).abs() < 1e-9 {
                let mut u = vec![0.0; 3];
                let mut w = vec![0.0; 3];
                for d in 0..3 {
                    u[d] = pts[i][d] + t * (pts[j][d] - pts[i][d]);
                    w[d] = pts[j][d] + t * (pts[i][d] - pts[j][d]);
                }
                out.push(u);
                out.push(w);
            }
        }
    }
    Ok(VertexSet::new(3, out, tol)?)
}

/// Which hypercube-derived family to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypercubeKind {
    /// All `(±1, …, ±1)`.
    Full,
    /// Even number of minus signs.
    Demi,
    /// Exactly one coordinate zero, the rest `±1`.
    Truncated,
    /// Exactly one coordinate `±c`, the rest `±1`, even minus count overall.
    TruncatedNonregular,
}

/// Hypercube `C_n`, demihypercube `DC_n`, fully truncated hypercube `TC_n`,
/// or nonregularly truncated hypercube `TC_n(c)`; `c` is only consulted (and
/// required, in `(0,1)`) for the nonregular variant.
pub fn hypercube_family(
    kind: HypercubeKind,
    n: usize,
    c: Option<f64>,
    tol: Tolerance,
) -> Result<VertexSet> {
    if n < 2 {
        return Err(ConstructionError::BadParams(format!("need n >= 2, got {n}")));
    }
    if n > 10 {
        return Err(ConstructionError::BadParams(format!(
            "n = {n} would generate too many vertices"
        )));
    }
    let pts: Vec<Vec<f64>> = match kind {
        HypercubeKind::Full => sign_patterns(n).collect(),
        HypercubeKind::Demi => (0..1usize << n)
            .filter(|&bits| minus_count(bits, n) % 2 == 0)
            .map(|bits| {
                (0..n)
                    .map(|i| if bits >> i & 1 == 0 { 1.0 } else { -1.0 })
                    .collect()
            })
            .collect(),
        HypercubeKind::Truncated => {
            let mut out = Vec::new();
            for zero_pos in 0..n {
                for bits in 0..1usize << (n - 1) {
                    let mut v = Vec::with_capacity(n);
                    let mut b = 0;
                    for i in 0..n {
                        if i == zero_pos {
                            v.push(0.0);
                        } else {
                            v.push(if bits >> b & 1 == 0 { 1.0 } else { -1.0 });
                            b += 1;
                        }
                    }
                    out.push(v);
                }
            }
            out
        }
        HypercubeKind::TruncatedNonregular => {
            let c = c.ok_or_else(|| {
                ConstructionError::BadParams("nonregular truncation requires c".into())
            })?;
            if !(c > 0.0 && c < 1.0) {
                return Err(ConstructionError::BadParams(format!(
                    "nonregular truncation requires 0 < c < 1, got {c}"
                )));
            }
            let mut out = Vec::new();
            for c_pos in 0..n {
                for bits in 0..1usize << n {
                    if minus_count(bits, n) % 2 != 0 {
                        continue;
                    }
                    let v: Vec<f64> = (0..n)
                        .map(|i| {
                            let s = if bits >> i & 1 == 0 { 1.0 } else { -1.0 };
                            if i == c_pos {
                                s * c
                            } else {
                                s
                            }
                        })
                        .collect();
                    out.push(v);
                }
            }
            out
        }
    };
    Ok(VertexSet::new(n, pts, tol)?)
}

/// The twelve-vertex family spanned by `(±eps, ±alpha, ±beta)` under cyclic
/// shifts and even sign changes, for `0 <= eps < alpha < beta`: homogeneous
/// icosahedra with 8 regular and 12 congruent non-regular triangular faces.
pub fn homogeneous_icosahedron(eps: f64, alpha: f64, beta: f64, tol: Tolerance) -> Result<VertexSet> {
    if !(eps >= 0.0 && eps < alpha && alpha < beta) {
        return Err(ConstructionError::BadParams(format!(
            "need 0 <= eps < alpha < beta, got ({eps}, {alpha}, {beta})"
        )));
    }
    let (e, a, b) = (eps, alpha, beta);
    let pts = vec![
        vec![e, a, b],
        vec![e, -a, -b],
        vec![-e, a, -b],
        vec![-e, -a, b],
        vec![a, b, e],
        vec![-a, -b, e],
        vec![a, -b, -e],
        vec![-a, b, -e],
        vec![b, e, a],
        vec![-b, e, -a],
        vec![-b, -e, a],
        vec![b, -e, -a],
    ];
    let labels = (1..=12).map(|i| format!("A{i}")).collect();
    Ok(VertexSet::new(3, pts, tol)?.with_labels(labels)?)
}

/// The tribonacci constant, the real root of `x^3 = x^2 + x + 1`, computed by
/// Newton iteration.
pub fn tribonacci() -> f64 {
    let mut x: f64 = 2.0;
    for _ in 0..64 {
        let f = x * x * x - x * x - x - 1.0;
        let df = 3.0 * x * x - 2.0 * x - 1.0;
        let next = x - f / df;
        if (next - x).abs() < 1e-16 {
            return next;
        }
        x = next;
    }
    x
}

/// The 24 vertices of the uniform snub cube: even permutations of
/// `(±1, ±1/ξ, ±ξ)` with an even number of minus signs and odd permutations
/// with an odd number, where ξ is the tribonacci constant.
pub fn snub_cube(tol: Tolerance) -> VertexSet {
    let xi = tribonacci();
    let base = [1.0, 1.0 / xi, xi];
    let even = [[0usize, 1, 2], [1, 2, 0], [2, 0, 1]];
    let odd = [[0usize, 2, 1], [2, 1, 0], [1, 0, 2]];
    let mut pts = Vec::with_capacity(24);
    for bits in 0..8usize {
        let signs = [
            if bits & 1 == 0 { 1.0 } else { -1.0 },
            if bits >> 1 & 1 == 0 { 1.0 } else { -1.0 },
            if bits >> 2 & 1 == 0 { 1.0 } else { -1.0 },
        ];
        let perms = if minus_count(bits, 3) % 2 == 0 { &even } else { &odd };
        for p in perms {
            pts.push(vec![
                signs[0] * base[p[0]],
                signs[1] * base[p[1]],
                signs[2] * base[p[2]],
            ]);
        }
    }
    VertexSet::new(3, pts, tol).expect("snub cube coordinates are valid")
}

/// A family of polytopes identified by name and parameters; the serializable
/// counterpart of the generator functions above. Prism bases nest.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Platonic(PlatonicKind),
    HomogeneousTetrahedron { k: f64, l: f64, m: f64 },
    RnPolygon { n: usize, alpha: f64, beta: f64 },
    RegularPolygon { n: usize, circumradius: f64 },
    Rectangle { a: f64, b: f64 },
    Segment { length: f64 },
    Prism { base: Box<FamilySpec>, height: f64 },
    RightAntiprism { n: usize, circumradius: f64, height: f64 },
    RectAntiprism { a: f64, b: f64, c: f64 },
    PartialTruncation { kind: PlatonicKind, t: f64 },
    Hypercube { n: usize },
    Demihypercube { n: usize },
    TruncatedHypercube { n: usize },
    NonregularTruncatedHypercube { n: usize, c: f64 },
    HomogeneousIcosahedron { eps: f64, alpha: f64, beta: f64 },
    SnubCube,
    Cuboctahedron,
}

impl FamilySpec {
    pub fn build(&self, tol: Tolerance) -> Result<VertexSet> {
        match self {
            FamilySpec::Platonic(kind) => Ok(platonic(*kind, tol)),
            FamilySpec::HomogeneousTetrahedron { k, l, m } => {
                homogeneous_tetrahedron(*k, *l, *m, tol)
            }
            FamilySpec::RnPolygon { n, alpha, beta } => rn_polygon(*n, *alpha, *beta, tol),
            FamilySpec::RegularPolygon { n, circumradius } => {
                regular_polygon(*n, *circumradius, tol)
            }
            FamilySpec::Rectangle { a, b } => rectangle(*a, *b, tol),
            FamilySpec::Segment { length } => segment(*length, tol),
            FamilySpec::Prism { base, height } => prism(&base.build(tol)?, *height),
            FamilySpec::RightAntiprism { n, circumradius, height } => {
                right_antiprism(*n, *circumradius, *height, tol)
            }
            FamilySpec::RectAntiprism { a, b, c } => rect_antiprism(*a, *b, *c, tol),
            FamilySpec::PartialTruncation { kind, t } => partial_truncation(*kind, *t, tol),
            FamilySpec::Hypercube { n } => hypercube_family(HypercubeKind::Full, *n, None, tol),
            FamilySpec::Demihypercube { n } => hypercube_family(HypercubeKind::Demi, *n, None, tol),
            FamilySpec::TruncatedHypercube { n } => {
                hypercube_family(HypercubeKind::Truncated, *n, None, tol)
            }
            FamilySpec::NonregularTruncatedHypercube { n, c } => {
                hypercube_family(HypercubeKind::TruncatedNonregular, *n, Some(*c), tol)
            }
            FamilySpec::HomogeneousIcosahedron { eps, alpha, beta } => {
                homogeneous_icosahedron(*eps, *alpha, *beta, tol)
            }
            FamilySpec::SnubCube => Ok(snub_cube(tol)),
            FamilySpec::Cuboctahedron => {
                hypercube_family(HypercubeKind::Truncated, 3, None, tol)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FamilySpec::Platonic(kind) => kind.name().to_string(),
            FamilySpec::HomogeneousTetrahedron { k, l, m } => {
                format!("homogeneous-tetrahedron({k},{l},{m})")
            }
            FamilySpec::RnPolygon { n, alpha, beta } => format!("rn-polygon({n},{alpha},{beta})"),
            FamilySpec::RegularPolygon { n, circumradius } => {
                format!("regular-polygon({n},{circumradius})")
            }
            FamilySpec::Rectangle { a, b } => format!("rectangle({a},{b})"),
            FamilySpec::Segment { length } => format!("segment({length})"),
            FamilySpec::Prism { base, height } => format!("prism({},{height})", base.name()),
            FamilySpec::RightAntiprism { n, circumradius, height } => {
                format!("right-antiprism({n},{circumradius},{height})")
            }
            FamilySpec::RectAntiprism { a, b, c } => format!("rect-antiprism({a},{b},{c})"),
            FamilySpec::PartialTruncation { kind, t } => {
                format!("partial-truncation({},{t})", kind.name())
            }
            FamilySpec::Hypercube { n } => format!("hypercube({n})"),
            FamilySpec::Demihypercube { n } => format!("demihypercube({n})"),
            FamilySpec::TruncatedHypercube { n } => format!("truncated-hypercube({n})"),
            FamilySpec::NonregularTruncatedHypercube { n, c } => {
                format!("truncated-hypercube({n},c={c})")
            }
            FamilySpec::HomogeneousIcosahedron { eps, alpha, beta } => {
                format!("homogeneous-icosahedron({eps},{alpha},{beta})")
            }
            FamilySpec::SnubCube => "snub-cube".into(),
            FamilySpec::Cuboctahedron => "cuboctahedron".into(),
        }
    }
}
