//! Exact alcove geometry for the two affine presets. Coordinates live in
//! `Q(sqrt(d))` with `d = 3` for the hexagonal picture and `d = 2` for the
//! square one; every alcove is the image of the fundamental alcove under the
//! affine action of a group element.

use crate::coxeter::{Element, GroupCtx, Preset};
use crate::Error;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

/// `r + s*sqrt(d)` with rational `r`, `s`; `d` is carried by the model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Coord {
    pub r: Rational64,
    pub s: Rational64,
}

impl Coord {
    pub fn zero() -> Coord {
        Coord {
            r: Rational64::zero(),
            s: Rational64::zero(),
        }
    }

    pub fn rat(n: i64, d: i64) -> Coord {
        Coord {
            r: Rational64::new(n, d),
            s: Rational64::zero(),
        }
    }

    pub fn surd(n: i64, d: i64) -> Coord {
        Coord {
            r: Rational64::zero(),
            s: Rational64::new(n, d),
        }
    }

    fn add(&self, o: &Coord) -> Coord {
        Coord {
            r: self.r + o.r,
            s: self.s + o.s,
        }
    }

    fn sub(&self, o: &Coord) -> Coord {
        Coord {
            r: self.r - o.r,
            s: self.s - o.s,
        }
    }

    fn mul(&self, o: &Coord, d: i64) -> Coord {
        Coord {
            r: self.r * o.r + self.s * o.s * Rational64::from_integer(d),
            s: self.r * o.s + self.s * o.r,
        }
    }

    pub fn to_f64(&self, d: i64) -> f64 {
        let rat = |q: Rational64| *q.numer() as f64 / *q.denom() as f64;
        rat(self.r) + rat(self.s) * (d as f64).sqrt()
    }

    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    /// Exact sign of `r + s*sqrt(d)`.
    fn sign(&self, d: i64) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let r_nonneg = !self.r.is_negative();
        let s_nonneg = !self.s.is_negative();
        if r_nonneg && s_nonneg {
            return 1;
        }
        if !r_nonneg && !s_nonneg {
            return -1;
        }
        // exactly one of r, s negative: compare r^2 against d s^2
        let lhs = self.r * self.r;
        let rhs = self.s * self.s * Rational64::from_integer(d);
        let cmp = match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
        };
        if r_nonneg {
            cmp
        } else {
            -cmp
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

/// Affine map `p -> M p + t` over `Q(sqrt d)`.
#[derive(Clone, Copy, Debug)]
pub struct AffineMap {
    m: [[Coord; 2]; 2],
    t: [Coord; 2],
}

impl AffineMap {
    fn identity() -> AffineMap {
        AffineMap {
            m: [
                [Coord::rat(1, 1), Coord::zero()],
                [Coord::zero(), Coord::rat(1, 1)],
            ],
            t: [Coord::zero(), Coord::zero()],
        }
    }

    fn apply(&self, p: &Point, d: i64) -> Point {
        Point {
            x: self.m[0][0].mul(&p.x, d).add(&self.m[0][1].mul(&p.y, d)).add(&self.t[0]),
            y: self.m[1][0].mul(&p.x, d).add(&self.m[1][1].mul(&p.y, d)).add(&self.t[1]),
        }
    }

    fn compose(&self, o: &AffineMap, d: i64) -> AffineMap {
        // self after o
        let mut m = [[Coord::zero(); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = self.m[i][0].mul(&o.m[0][j], d).add(&self.m[i][1].mul(&o.m[1][j], d));
            }
        }
        let t = [
            self.m[0][0].mul(&o.t[0], d).add(&self.m[0][1].mul(&o.t[1], d)).add(&self.t[0]),
            self.m[1][0].mul(&o.t[0], d).add(&self.m[1][1].mul(&o.t[1], d)).add(&self.t[1]),
        ];
        AffineMap { m, t }
    }
}

/// A closed alcove: triangle with exact vertices, in the orientation the
/// figures use.
#[derive(Clone, Debug)]
pub struct Polygon {
    pub vertices: Vec<Point>,
    pub surd: i64,
}

impl Polygon {
    pub fn to_f64(&self) -> Vec<(f64, f64)> {
        self.vertices
            .iter()
            .map(|p| (p.x.to_f64(self.surd), p.y.to_f64(self.surd)))
            .collect()
    }

    /// SVG path fragment `M x0 y0 L x1 y1 ... Z` with 6-digit coordinates.
    pub fn svg_path(&self) -> String {
        let mut out = String::new();
        for (i, (x, y)) in self.to_f64().iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            out.push_str(&format!("{cmd}{x:.6} {y:.6} "));
        }
        out.push('Z');
        out
    }

    pub fn centroid(&self) -> (f64, f64) {
        let pts = self.to_f64();
        let n = pts.len() as f64;
        (
            pts.iter().map(|p| p.0).sum::<f64>() / n,
            pts.iter().map(|p| p.1).sum::<f64>() / n,
        )
    }

    /// Exact point-in-closed-triangle test for rational-surd query points.
    pub fn contains(&self, q: &Point) -> bool {
        debug_assert_eq!(self.vertices.len(), 3);
        let d = self.surd;
        let sgn = |a: &Point, b: &Point, c: &Point| {
            let abx = b.x.sub(&a.x);
            let aby = b.y.sub(&a.y);
            let acx = c.x.sub(&a.x);
            let acy = c.y.sub(&a.y);
            abx.mul(&acy, d).sub(&aby.mul(&acx, d)).sign(d)
        };
        let s1 = sgn(&self.vertices[0], &self.vertices[1], q);
        let s2 = sgn(&self.vertices[1], &self.vertices[2], q);
        let s3 = sgn(&self.vertices[2], &self.vertices[0], q);
        (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)
    }

    /// Unsigned area (as f64, for bookkeeping tests).
    pub fn area(&self) -> f64 {
        let pts = self.to_f64();
        let mut a = 0.0;
        for i in 0..pts.len() {
            let j = (i + 1) % pts.len();
            a += pts[i].0 * pts[j].1 - pts[j].0 * pts[i].1;
        }
        a.abs() / 2.0
    }
}

/// The alcove picture for one affine preset: fundamental alcove plus the
/// three wall reflections, matching the figures' coordinate system.
pub struct PlaneModel {
    pub surd: i64,
    base: [Point; 3],
    gens: [AffineMap; 3],
}

impl PlaneModel {
    pub fn for_preset(preset: Preset) -> Result<PlaneModel, Error> {
        match preset {
            Preset::G2Affine => Ok(g2_model()),
            Preset::B2Affine => Ok(b2_model()),
            Preset::Custom => Err(Error::NoAffineRealization),
        }
    }

    /// The closed alcove of `g`, i.e. `g^{-1}(A0)`: elements correspond to
    /// alcoves through the right action, which is the convention under
    /// which left multiplication is a local wall-crossing and left cells
    /// are connected regions, matching the figures.
    pub fn alcove(&self, ctx: &GroupCtx, g: &Element) -> Polygon {
        let word = ctx.sl_word(&g.inverse());
        let mut map = AffineMap::identity();
        for s in word {
            map = map.compose(&self.gens[s as usize], self.surd);
        }
        Polygon {
            vertices: self
                .base
                .iter()
                .map(|p| map.apply(p, self.surd))
                .collect(),
            surd: self.surd,
        }
    }

    pub fn fundamental(&self) -> Polygon {
        Polygon {
            vertices: self.base.to_vec(),
            surd: self.surd,
        }
    }

    pub fn point(&self, x: f64, y: f64) -> Point {
        // rational approximation good far beyond figure-label precision
        let approx = |v: f64| Rational64::new((v * 1_000_000.0).round() as i64, 1_000_000);
        Point {
            x: Coord {
                r: approx(x),
                s: Rational64::zero(),
            },
            y: Coord {
                r: approx(y),
                s: Rational64::zero(),
            },
        }
    }
}

fn g2_model() -> PlaneModel {
    // A0 = (0,0), (0,1), (sqrt3/4, 3/4); s1 reflects in the 60-degree line
    // through the origin, s2 in the y-axis, s3 in the line through (0,1)
    // with direction -30 degrees.
    let base = [
        Point { x: Coord::zero(), y: Coord::zero() },
        Point { x: Coord::zero(), y: Coord::rat(1, 1) },
        Point { x: Coord::surd(1, 4), y: Coord::rat(3, 4) },
    ];
    // reflection in line through origin at angle theta:
    // [[cos2t, sin2t], [sin2t, -cos2t]]
    let s1 = AffineMap {
        // theta = 60: cos120 = -1/2, sin120 = sqrt3/2
        m: [
            [Coord::rat(-1, 2), Coord::surd(1, 2)],
            [Coord::surd(1, 2), Coord::rat(1, 2)],
        ],
        t: [Coord::zero(), Coord::zero()],
    };
    let s2 = AffineMap {
        m: [
            [Coord::rat(-1, 1), Coord::zero()],
            [Coord::zero(), Coord::rat(1, 1)],
        ],
        t: [Coord::zero(), Coord::zero()],
    };
    // theta = -30 through (0,1): linear [[1/2, -sqrt3/2], [-sqrt3/2, -1/2]],
    // conjugated by the translation to (0,1): t = (I - A)(0,1)
    let a00 = Coord::rat(1, 2);
    let a01 = Coord::surd(-1, 2);
    let a10 = Coord::surd(-1, 2);
    let a11 = Coord::rat(-1, 2);
    let s3 = AffineMap {
        m: [[a00, a01], [a10, a11]],
        t: [Coord::surd(1, 2), Coord::rat(3, 2)],
    };
    PlaneModel {
        surd: 3,
        base,
        gens: [s1, s2, s3],
    }
}

fn b2_model() -> PlaneModel {
    // A0 = (0,0), (0,1), (1/2,1/2); s1 reflects in the diagonal y = x,
    // s2 in the y-axis, s3 in the line y = 1 - x.
    let base = [
        Point { x: Coord::zero(), y: Coord::zero() },
        Point { x: Coord::zero(), y: Coord::rat(1, 1) },
        Point { x: Coord::rat(1, 2), y: Coord::rat(1, 2) },
    ];
    let s1 = AffineMap {
        m: [
            [Coord::zero(), Coord::rat(1, 1)],
            [Coord::rat(1, 1), Coord::zero()],
        ],
        t: [Coord::zero(), Coord::zero()],
    };
    let s2 = AffineMap {
        m: [
            [Coord::rat(-1, 1), Coord::zero()],
            [Coord::zero(), Coord::rat(1, 1)],
        ],
        t: [Coord::zero(), Coord::zero()],
    };
    // (x,y) -> (1-y, 1-x)
    let s3 = AffineMap {
        m: [
            [Coord::zero(), Coord::rat(-1, 1)],
            [Coord::rat(-1, 1), Coord::zero()],
        ],
        t: [Coord::rat(1, 1), Coord::rat(1, 1)],
    };
    PlaneModel {
        surd: 2,
        base,
        gens: [s1, s2, s3],
    }
}

/// Convenience: alcove of `g` for a preset context.
pub fn alcove_polygon(ctx: &GroupCtx, g: &Element) -> Result<Polygon, Error> {
    let model = PlaneModel::for_preset(ctx.preset())?;
    Ok(model.alcove(ctx, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSpec;

    fn g2ctx() -> GroupCtx {
        GroupCtx::new(CoxeterSpec::g2(9, 2)).unwrap()
    }

    fn b2ctx() -> GroupCtx {
        GroupCtx::new(CoxeterSpec::b2(3, 2, 3)).unwrap()
    }

    #[test]
    fn fundamental_alcoves() {
        let ctx = g2ctx();
        let poly = alcove_polygon(&ctx, &ctx.identity()).unwrap();
        let pts = poly.to_f64();
        assert!((pts[2].0 - 0.4330127).abs() < 1e-6);
        assert!((pts[2].1 - 0.75).abs() < 1e-9);

        let ctx = b2ctx();
        let poly = alcove_polygon(&ctx, &ctx.identity()).unwrap();
        let pts = poly.to_f64();
        assert_eq!(pts[2], (0.5, 0.5));
    }

    #[test]
    fn custom_has_no_alcove_model() {
        let spec = CoxeterSpec {
            matrix: [[1, 4, 2], [4, 1, 6], [2, 6, 1]],
            weights: [1, 1, 1],
            preset: Preset::Custom,
        };
        let ctx = GroupCtx::new(spec).unwrap();
        assert!(alcove_polygon(&ctx, &ctx.identity()).is_err());
    }

    #[test]
    fn neighbors_share_walls() {
        for ctx in [g2ctx(), b2ctx()] {
            let model = PlaneModel::for_preset(ctx.preset()).unwrap();
            let ball = ctx.ball(4).unwrap();
            for id in 0..ball.len() as u32 {
                let g = ball.element(id);
                let pg = model.alcove(&ctx, &g);
                for s in 0..3u8 {
                    let sg = ctx.mul(&ctx.generator(s), &g).unwrap();
                    let ps = model.alcove(&ctx, &sg);
                    // shared wall = exactly two common vertices
                    let mut common = 0;
                    for a in &pg.vertices {
                        if ps.vertices.iter().any(|b| a == b) {
                            common += 1;
                        }
                    }
                    assert_eq!(common, 2, "alcoves of g and sg must share a wall");
                }
            }
        }
    }

    #[test]
    fn tiling_without_overlap() {
        // area bookkeeping: alcoves are congruent and interiors are disjoint,
        // so centroids are pairwise distinct and each alcove contains its own
        // centroid only.
        for ctx in [g2ctx(), b2ctx()] {
            let model = PlaneModel::for_preset(ctx.preset()).unwrap();
            let ball = ctx.ball(5).unwrap();
            let polys: Vec<Polygon> = (0..ball.len() as u32)
                .map(|id| model.alcove(&ctx, &ball.element(id)))
                .collect();
            let base_area = polys[0].area();
            for p in &polys {
                assert!((p.area() - base_area).abs() < 1e-9);
            }
            for (i, p) in polys.iter().enumerate() {
                let c = p.centroid();
                let q = model.point(c.0, c.1);
                for (j, other) in polys.iter().enumerate() {
                    assert_eq!(other.contains(&q), i == j, "alcove {j} vs centroid of {i}");
                }
            }
        }
    }

    #[test]
    fn figure_anchor_alcoves() {
        // the element 121 of the square picture sits in the triangle
        // (0,0),(0,-1),(1/2,-1/2), matching the c1-family label of the figures
        let ctx = b2ctx();
        let model = PlaneModel::for_preset(ctx.preset()).unwrap();
        let g = ctx.element_from_str("121").unwrap();
        let poly = model.alcove(&ctx, &g);
        let q = model.point(0.2, -0.5);
        assert!(poly.contains(&q));
        // s3's alcove is (0,1),(1/2,1/2),(1,1)
        let s3 = ctx.element_from_str("3").unwrap();
        let poly = model.alcove(&ctx, &s3);
        assert!(poly.contains(&model.point(0.5, 0.8)));
    }
}
