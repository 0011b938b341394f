//! Zonotopes: Minkowski sums of centrally symmetric segments.
//!
//! A zonotope here is `Σ_i [−z_i, z_i]` for generators `z_i ∈ ℚ^d`. The
//! canonical form drops zero generators, flips each generator so its first
//! nonzero coordinate is positive, merges parallel generators by adding the
//! aligned vectors, and sorts lexicographically — so equal segment sets
//! have equal canonical forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{dot, RationalMatrix};
use crate::rat::{format_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zonotope {
    d: usize,
    generators: Vec<Vec<Rat>>,
}

/// Where a point sits relative to a closed convex body.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Interior,
    Boundary,
    Outside,
}

/// One closed halfspace `⟨normal, x⟩ ≤ offset` of an H-representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive integer normal (stored as rationals with denominator 1).
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

/// Full H-representation of a zonotope (dimensions 2 and 3), with exact
/// point classification.
#[derive(Clone, Debug)]
pub struct HRep {
    facets: Vec<Facet>,
    /// Per-coordinate support values h_j = h(e_j): the bounding box.
    box_halfwidths: Vec<Rat>,
}

/// Outcome of classifying a planar zonotope as a symmetric hexagon,
/// parallelogram, or neither.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HexagonClassification {
    Parallelogram { vertices: Vec<Vec<Rat>> },
    HexagonAffinelyRegular { vertices: Vec<Vec<Rat>> },
    HexagonOther { vertices: Vec<Vec<Rat>> },
    NotHexagon,
}

impl Zonotope {
    pub fn new(d: usize, generators: Vec<Vec<Rat>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Precondition("dimension must be at least 1".into()));
        }
        if generators.is_empty() {
            return Err(Error::Precondition(
                "zonotope needs at least one generator".into(),
            ));
        }
        if let Some(bad) = generators.iter().find(|g| g.len() != d) {
            return Err(Error::Shape {
                expected: format!("generators of length {d}"),
                got: format!("generator of length {}", bad.len()),
            });
        }
        Ok(Self { d, generators })
    }

    pub fn from_i64(d: usize, gens: &[&[i64]]) -> Self {
        Self::new(
            d,
            gens.iter()
                .map(|g| g.iter().map(|&n| crate::rat::rat(n)).collect())
                .collect(),
        )
        .expect("integer literal zonotope must be well-formed")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.generators
    }

    /// Matrix whose columns are the generators (d×m).
    pub fn generator_matrix(&self) -> RationalMatrix {
        let rows: Vec<Vec<Rat>> = (0..self.d)
            .map(|r| self.generators.iter().map(|g| g[r].clone()).collect())
            .collect();
        RationalMatrix::from_rows(rows).expect("generator matrix is rectangular")
    }

    /// Canonical form: zero generators dropped, signs normalized so the
    /// first nonzero coordinate is positive, parallel generators merged by
    /// summing the aligned vectors, result sorted lexicographically.
    /// Idempotent; an all-zero generator set canonicalizes to an error.
    pub fn canonical(&self) -> Result<Zonotope> {
        let mut z = self.reduced()?;
        z.generators.sort();
        Ok(z)
    }

    /// Same cleanup as [`Zonotope::canonical`] (zeros dropped, signs
    /// normalized, parallel classes merged into their first occurrence) but
    /// preserving first-occurrence order, so indices stay aligned with the
    /// caller's generator list. Used by class-membership witnesses.
    pub fn reduced(&self) -> Result<Zonotope> {
        let mut normalized: Vec<Vec<Rat>> = Vec::new();
        for g in &self.generators {
            if g.iter().all(Rat::is_zero) {
                continue;
            }
            normalized.push(sign_normalize(g));
        }
        if normalized.is_empty() {
            return Err(Error::Precondition(
                "all generators are zero; the zonotope is a point".into(),
            ));
        }
        // Merge parallel classes: aligned (sign-normalized) parallel vectors
        // simply add.
        let mut merged: Vec<Vec<Rat>> = Vec::new();
        'outer: for g in normalized {
            for rep in merged.iter_mut() {
                if parallel(rep, &g) {
                    for (a, b) in rep.iter_mut().zip(&g) {
                        *a += b;
                    }
                    continue 'outer;
                }
            }
            merged.push(g);
        }
        Zonotope::new(self.d, merged)
    }

    /// Support function `h(x) = Σ_i |⟨x, z_i⟩|`. Exact; any x ∈ ℚ^d.
    pub fn support(&self, x: &[Rat]) -> Result<Rat> {
        if x.len() != self.d {
            return Err(Error::Shape {
                expected: format!("direction of length {}", self.d),
                got: format!("length {}", x.len()),
            });
        }
        Ok(self
            .generators
            .iter()
            .map(|g| dot(x, g).abs())
            .sum())
    }

    /// Exact volume `2^d · Σ_S |det(generators_S)|` over d-subsets of the
    /// canonical generators. Errors with the rank when not full-dimensional.
    pub fn volume(&self) -> Result<Rat> {
        let canon = self.canonical()?;
        let mat = canon.generator_matrix();
        let rank = mat.rank();
        if rank < self.d {
            return Err(Error::RankDeficient {
                rank,
                needed: self.d,
                context: "zonotope volume requires full-dimensional generators".into(),
            });
        }
        let m = canon.generators.len();
        let all_rows: Vec<usize> = (0..self.d).collect();
        let mut sum = Rat::zero();
        for s in crate::plucker::subsets_lex(m, self.d) {
            sum += mat.submatrix(&all_rows, &s.zero_based()).det()?.abs();
        }
        let scale = Rat::from_integer(BigInt::from(1u8) << self.d);
        Ok(scale * sum)
    }

    /// True when the canonical generators number exactly d and are
    /// independent (the zonotope is a parallelepiped).
    pub fn is_parallelepiped(&self) -> Result<bool> {
        let canon = self.canonical()?;
        Ok(canon.generators.len() == self.d && canon.generator_matrix().rank() == self.d)
    }

    /// Vertices of a planar zonotope in counterclockwise order, starting at
    /// the lexicographically smallest vertex. Exactly `2 ×` the number of
    /// canonical generators.
    pub fn vertices2d(&self) -> Result<Vec<Vec<Rat>>> {
        if self.d != 2 {
            return Err(Error::UnsupportedDimension {
                d: self.d,
                context: "vertex walk is planar only".into(),
            });
        }
        let canon = self.canonical()?;
        if canon.generator_matrix().rank() < 2 {
            return Err(Error::RankDeficient {
                rank: canon.generator_matrix().rank(),
                needed: 2,
                context: "vertex walk requires a full-dimensional zonogon".into(),
            });
        }
        // Normalize every generator into the open upper half-plane
        // (y > 0, or y = 0 and x > 0) and sort by angle ascending.
        let mut gens: Vec<Vec<Rat>> = canon
            .generators
            .iter()
            .map(|g| {
                if g[1].is_negative() || (g[1].is_zero() && g[0].is_negative()) {
                    g.iter().map(|e| -e.clone()).collect()
                } else {
                    g.clone()
                }
            })
            .collect();
        gens.sort_by(|a, b| {
            // Both in the upper half-plane: a before b iff cross(a,b) > 0.
            let cross = &a[0] * &b[1] - &a[1] * &b[0];
            if cross.is_positive() {
                std::cmp::Ordering::Less
            } else if cross.is_negative() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        // Walk: bottom vertex −Σ g_k, then +2g_k along the sorted order
        // builds the right chain; −2g_k closes the left chain.
        let mut v = vec![Rat::zero(), Rat::zero()];
        for g in &gens {
            v[0] -= &g[0];
            v[1] -= &g[1];
        }
        let mut vertices = Vec::with_capacity(2 * gens.len());
        vertices.push(v.clone());
        for g in &gens {
            v[0] += &g[0] * &Rat::from_integer(2.into());
            v[1] += &g[1] * &Rat::from_integer(2.into());
            vertices.push(v.clone());
        }
        for g in &gens[..gens.len() - 1] {
            v[0] -= &g[0] * &Rat::from_integer(2.into());
            v[1] -= &g[1] * &Rat::from_integer(2.into());
            vertices.push(v.clone());
        }
        // Rotate so the lexicographically smallest vertex comes first.
        let start = vertices
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.cmp(b))
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(start);
        Ok(vertices)
    }

    /// H-representation for d ∈ {2, 3}: one facet pair per (d−1)-subset
    /// direction class, normals primitive integer vectors, offsets exact
    /// support values. The facet list contains both `n` and `−n`.
    pub fn hrep(&self) -> Result<HRep> {
        if self.d != 2 && self.d != 3 {
            return Err(Error::UnsupportedDimension {
                d: self.d,
                context: "H-representation is implemented for d = 2 and d = 3".into(),
            });
        }
        let canon = self.canonical()?;
        let mat = canon.generator_matrix();
        if mat.rank() < self.d {
            return Err(Error::RankDeficient {
                rank: mat.rank(),
                needed: self.d,
                context: "H-representation requires a full-dimensional zonotope".into(),
            });
        }
        let gens = &canon.generators;
        let mut directions: Vec<Vec<BigInt>> = Vec::new();
        let mut push_dir = |n: Vec<Rat>| {
            if n.iter().all(Rat::is_zero) {
                return;
            }
            let prim = primitive_integer_direction(&n);
            if !directions.contains(&prim) {
                directions.push(prim);
            }
        };
        match self.d {
            2 => {
                for g in gens {
                    // Rotate by 90°: normal to the segment direction.
                    push_dir(vec![-g[1].clone(), g[0].clone()]);
                }
            }
            3 => {
                for i in 0..gens.len() {
                    for j in (i + 1)..gens.len() {
                        push_dir(cross3(&gens[i], &gens[j]));
                    }
                }
            }
            _ => unreachable!(),
        }
        directions.sort();
        let mut facets = Vec::with_capacity(2 * directions.len());
        for dir in directions {
            let n: Vec<Rat> = dir.iter().map(|x| Rat::from_integer(x.clone())).collect();
            let offset = canon.support(&n)?;
            let neg: Vec<Rat> = n.iter().map(|x| -x.clone()).collect();
            facets.push(Facet {
                normal: n,
                offset: offset.clone(),
            });
            facets.push(Facet {
                normal: neg,
                offset,
            });
        }
        let box_halfwidths = (0..self.d)
            .map(|j| {
                let e: Vec<Rat> = (0..self.d)
                    .map(|k| if k == j { Rat::one() } else { Rat::zero() })
                    .collect();
                canon.support(&e)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HRep {
            facets,
            box_halfwidths,
        })
    }

    /// Exact point classification (d ∈ {2, 3}); convenience wrapper that
    /// builds the H-representation. Callers with many queries should build
    /// [`Zonotope::hrep`] once and use [`HRep::classify`].
    pub fn contains(&self, p: &[Rat]) -> Result<Containment> {
        if p.len() != self.d {
            return Err(Error::Shape {
                expected: format!("point of length {}", self.d),
                got: format!("length {}", p.len()),
            });
        }
        Ok(self.hrep()?.classify(p))
    }

    /// Classify a planar zonotope: parallelogram (2 canonical generators),
    /// symmetric hexagon (3 pairwise nonparallel generators) with an
    /// affine-regularity verdict, or neither.
    pub fn classify_hexagon(&self) -> Result<HexagonClassification> {
        if self.d != 2 {
            return Err(Error::UnsupportedDimension {
                d: self.d,
                context: "hexagon classification is planar only".into(),
            });
        }
        let canon = self.canonical()?;
        if canon.generator_matrix().rank() < 2 {
            return Ok(HexagonClassification::NotHexagon);
        }
        match canon.generators.len() {
            2 => Ok(HexagonClassification::Parallelogram {
                vertices: canon.vertices2d()?,
            }),
            3 => {
                let vertices = canon.vertices2d()?;
                Ok(classify_hexagon_vertices(&vertices))
            }
            _ => Ok(HexagonClassification::NotHexagon),
        }
    }
}

impl HRep {
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Exact classification of a point against the facet slabs. A cheap
    /// bounding-box rejection runs first.
    pub fn classify(&self, p: &[Rat]) -> Containment {
        for (j, h) in self.box_halfwidths.iter().enumerate() {
            if p[j].abs() > *h {
                return Containment::Outside;
            }
        }
        let mut on_boundary = false;
        for f in &self.facets {
            let value = dot(&f.normal, p);
            if value > f.offset {
                return Containment::Outside;
            }
            if value == f.offset {
                on_boundary = true;
            }
        }
        if on_boundary {
            Containment::Boundary
        } else {
            Containment::Interior
        }
    }

    /// Largest per-coordinate support value; every point of the body has
    /// |x_j| ≤ the j-th entry.
    pub fn box_halfwidths(&self) -> &[Rat] {
        &self.box_halfwidths
    }
}

/// Flip a nonzero vector so its first nonzero coordinate is positive.
pub fn sign_normalize(g: &[Rat]) -> Vec<Rat> {
    match g.iter().find(|e| !e.is_zero()) {
        Some(first) if first.is_negative() => g.iter().map(|e| -e.clone()).collect(),
        _ => g.to_vec(),
    }
}

/// Exact parallelism test: all 2×2 minors of the pair vanish.
pub fn parallel(a: &[Rat], b: &[Rat]) -> bool {
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if !(&a[i] * &b[j] - &a[j] * &b[i]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Cross product in ℚ³.
pub fn cross3(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Scale a nonzero rational vector to the primitive integer vector on the
/// same ray with positive leading coordinate... positive first nonzero entry.
pub(crate) fn primitive_integer_direction(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for e in v {
        lcm = lcm.lcm(e.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|e| e.numer() * &lcm / e.denom()).collect();
    let mut gcd = BigInt::zero();
    for e in &ints {
        gcd = gcd.gcd(e);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for e in ints.iter_mut() {
            *e = &*e / &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|e| !e.is_zero()) {
        if first.is_negative() {
            for e in ints.iter_mut() {
                *e = -&*e;
            }
        }
    }
    ints
}

/// Classify a centrally symmetric hexagon given its 6 vertices in cyclic
/// order: affinely regular iff some (equivalently every) consecutive triple
/// (a, b, c) satisfies b = a + c.
pub fn classify_hexagon_vertices(vertices: &[Vec<Rat>]) -> HexagonClassification {
    if vertices.len() != 6 {
        return HexagonClassification::NotHexagon;
    }
    let n = vertices.len();
    let mut any = false;
    let mut all = true;
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        let c = &vertices[(i + 2) % n];
        let is_sum = b
            .iter()
            .zip(a.iter().zip(c))
            .all(|(bk, (ak, ck))| *bk == ak + ck);
        any |= is_sum;
        all &= is_sum;
    }
    // For a centrally symmetric hexagon one triple identity forces all six.
    debug_assert_eq!(any, all, "triple identity must be all-or-nothing");
    if any {
        HexagonClassification::HexagonAffinelyRegular {
            vertices: vertices.to_vec(),
        }
    } else {
        HexagonClassification::HexagonOther {
            vertices: vertices.to_vec(),
        }
    }
}

/// Vertices of the planar centrally symmetric polygon
/// `{ x : |⟨n_j, x⟩| ≤ h_j }`, counterclockwise, starting at the
/// lexicographically smallest vertex. Slabs with zero normals are ignored;
/// the intersection must be bounded (at least two independent normals).
pub fn polygon_from_slabs(slabs: &[(Vec<Rat>, Rat)]) -> Result<Vec<Vec<Rat>>> {
    let live: Vec<&(Vec<Rat>, Rat)> = slabs
        .iter()
        .filter(|(n, _)| !n.iter().all(Rat::is_zero))
        .collect();
    if live.iter().any(|(n, h)| n.len() != 2 || h.is_negative()) {
        return Err(Error::Precondition(
            "slabs must have planar normals and nonnegative offsets".into(),
        ));
    }
    // Bounded iff two independent normals exist.
    let independent = live
        .iter()
        .any(|(n1, _)| live.iter().any(|(n2, _)| !parallel(n1, n2)));
    if !independent {
        return Err(Error::Precondition(
            "slab intersection is unbounded (all normals parallel)".into(),
        ));
    }
    // Expand each slab into two halfplanes ⟨±n, x⟩ ≤ h and intersect all
    // boundary-line pairs.
    let mut halfplanes: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (n, h) in live {
        halfplanes.push((n.clone(), h.clone()));
        halfplanes.push((n.iter().map(|e| -e.clone()).collect(), h.clone()));
    }
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    for i in 0..halfplanes.len() {
        for j in (i + 1)..halfplanes.len() {
            let (n1, h1) = &halfplanes[i];
            let (n2, h2) = &halfplanes[j];
            let det = &n1[0] * &n2[1] - &n1[1] * &n2[0];
            if det.is_zero() {
                continue;
            }
            let x = (h1 * &n2[1] - h2 * &n1[1]) / &det;
            let y = (&n1[0] * h2 - &n2[0] * h1) / &det;
            let p = vec![x, y];
            let inside = halfplanes
                .iter()
                .all(|(n, h)| dot(n, &p) <= *h);
            if inside && !vertices.contains(&p) {
                vertices.push(p);
            }
        }
    }
    if vertices.len() < 3 {
        return Err(Error::Precondition(
            "slab intersection has empty interior".into(),
        ));
    }
    // Counterclockwise sort around the origin (the polygon is centrally
    // symmetric, so the origin is interior).
    vertices.sort_by(|a, b| ccw_angle_cmp(a, b));
    let start = vertices
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .unwrap_or(0);
    vertices.rotate_left(start);
    Ok(vertices)
}

/// Exact counterclockwise comparison of two nonzero planar points by angle
/// from the positive x-axis (half-plane split, then cross product).
fn ccw_angle_cmp(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    let half = |p: &[Rat]| -> u8 {
        if p[1].is_positive() || (p[1].is_zero() && p[0].is_positive()) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let cross = &a[0] * &b[1] - &a[1] * &b[0];
    if cross.is_positive() {
        std::cmp::Ordering::Less
    } else if cross.is_negative() {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Equal
    }
}

impl std::fmt::Display for Facet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let coords: Vec<String> = self.normal.iter().map(format_rat).collect();
        write!(f, "<({}), x> <= {}", coords.join(", "), format_rat(&self.offset))
    }
}
