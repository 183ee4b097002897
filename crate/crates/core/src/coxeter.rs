//! Exact engine for rank-3 Coxeter groups: canonical elements via the
//! geometric reflection representation over `Z[sqrt2, sqrt3]`, length and
//! descent tests, ShortLex normal words, ball enumeration, suffix sets Y(w)
//! and the translation test for the affine presets.

use crate::quad::{Mat3, Quad};
use crate::Error;
use rustc_hash::FxHashMap;
use std::fmt;

/// Which of the two paper diagrams (or a custom matrix) a context was built
/// from. The presets carry the alcove geometry used for pictures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Preset {
    /// `s1 =6= s2 -3- s3`, weights `(a, b, b)`.
    G2Affine,
    /// `s1 =4= s2 =4= s3`, weights `(a, b, c)`.
    B2Affine,
    Custom,
}

#[derive(Clone, Debug)]
pub struct CoxeterSpec {
    /// Symmetric matrix of bond orders, 1 on the diagonal, entries in
    /// `{2,3,4,6}` off it.
    pub matrix: [[u8; 3]; 3],
    /// Weight `L(s_i)` per generator; odd bonds force equality.
    pub weights: [i64; 3],
    pub preset: Preset,
}

impl CoxeterSpec {
    pub fn g2(a: i64, b: i64) -> Self {
        CoxeterSpec {
            matrix: [[1, 6, 2], [6, 1, 3], [2, 3, 1]],
            weights: [a, b, b],
            preset: Preset::G2Affine,
        }
    }

    pub fn b2(a: i64, b: i64, c: i64) -> Self {
        CoxeterSpec {
            matrix: [[1, 4, 2], [4, 1, 4], [2, 4, 1]],
            weights: [a, b, c],
            preset: Preset::B2Affine,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        for i in 0..3 {
            if self.matrix[i][i] != 1 {
                return Err(Error::InvalidMatrix("diagonal entries must be 1".into()));
            }
            if self.weights[i] < 0 {
                return Err(Error::InvalidMatrix("weights must be nonnegative".into()));
            }
            for j in 0..3 {
                if i != j {
                    let m = self.matrix[i][j];
                    if self.matrix[j][i] != m {
                        return Err(Error::InvalidMatrix("matrix must be symmetric".into()));
                    }
                    if !matches!(m, 2 | 3 | 4 | 6) {
                        return Err(Error::InvalidMatrix(format!(
                            "bond order m({},{}) = {} not in {{2,3,4,6}}",
                            i + 1,
                            j + 1,
                            m
                        )));
                    }
                    if m % 2 == 1 && self.weights[i] != self.weights[j] {
                        return Err(Error::OddBondWeightMismatch(i + 1, j + 1));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A group element: matrices of `w` and `w^{-1}` in the reflection
/// representation plus the cached length. Equality and hashing use the
/// matrix of `w` alone, which is a complete invariant.
#[derive(Clone)]
pub struct Element {
    mat: Mat3,
    inv: Mat3,
    len: u32,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}
impl Eq for Element {}

impl std::hash::Hash for Element {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl Element {
    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn inverse(&self) -> Element {
        Element {
            mat: self.inv,
            inv: self.mat,
            len: self.len,
        }
    }

    pub(crate) fn matrix(&self) -> &Mat3 {
        &self.mat
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element(len {})", self.len)
    }
}

/// Parses a word over the generators from a digit string like `"12123"`.
/// Empty string and `"e"` both denote the identity.
pub fn parse_word(s: &str) -> Result<Vec<u8>, Error> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.chars()
        .enumerate()
        .map(|(pos, ch)| match ch {
            '1' => Ok(0u8),
            '2' => Ok(1u8),
            '3' => Ok(2u8),
            _ => Err(Error::Parse(format!(
                "bad generator {ch:?} at position {pos} in word {s:?}"
            ))),
        })
        .collect()
}

/// Formats an internal word (letters `0..3`) as a digit string; identity is `"e"`.
pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|g| char::from(b'1' + g)).collect()
}

pub struct GroupCtx {
    spec: CoxeterSpec,
    gen_mats: [Mat3; 3],
    /// Coordinates of the null root when the bilinear form is singular
    /// (affine realization); `None` otherwise.
    delta: Option<[Quad; 3]>,
}

impl GroupCtx {
    pub fn new(spec: CoxeterSpec) -> Result<GroupCtx, Error> {
        spec.validate()?;
        let mut gen_mats = [Mat3::identity(); 3];
        for s in 0..3 {
            let mut m = Mat3::identity();
            for t in 0..3 {
                let entry = if s == t {
                    Quad::int(-1)
                } else {
                    Quad::two_cos_pi_over(spec.matrix[s][t])
                        .expect("validated bond order")
                };
                m.0[3 * s + t] = entry;
            }
            gen_mats[s] = m;
        }
        let delta = null_root(&spec);
        Ok(GroupCtx { spec, gen_mats, delta })
    }

    pub fn spec(&self) -> &CoxeterSpec {
        &self.spec
    }

    pub fn weights(&self) -> [i64; 3] {
        self.spec.weights
    }

    pub fn weight(&self, s: u8) -> i64 {
        self.spec.weights[s as usize]
    }

    pub fn preset(&self) -> Preset {
        self.spec.preset
    }

    pub fn identity(&self) -> Element {
        Element {
            mat: Mat3::identity(),
            inv: Mat3::identity(),
            len: 0,
        }
    }

    pub fn generator(&self, s: u8) -> Element {
        Element {
            mat: self.gen_mats[s as usize],
            inv: self.gen_mats[s as usize],
            len: 1,
        }
    }

    /// Product `g * h` with the true Coxeter length recomputed exactly.
    pub fn mul(&self, g: &Element, h: &Element) -> Result<Element, Error> {
        let mat = g.mat.checked_mul(&h.mat).map_err(|_| Error::Overflow)?;
        let inv = h.inv.checked_mul(&g.inv).map_err(|_| Error::Overflow)?;
        let len = self.length_of_matrix(mat, inv)?;
        Ok(Element { mat, inv, len })
    }

    pub fn word_to_element(&self, word: &[u8]) -> Result<Element, Error> {
        let mut g = self.identity();
        for &s in word {
            if s > 2 {
                return Err(Error::Parse(format!("generator index {} out of range", s + 1)));
            }
            g = self.mul(&g, &self.generator(s))?;
        }
        Ok(g)
    }

    pub fn element_from_str(&self, s: &str) -> Result<Element, Error> {
        self.word_to_element(&parse_word(s)?)
    }

    fn length_of_matrix(&self, mat: Mat3, inv: Mat3) -> Result<u32, Error> {
        // greedy reduction by left descents
        let mut mat = mat;
        let mut inv = inv;
        let mut len = 0u32;
        loop {
            let mut found = None;
            for s in 0..3usize {
                if inv.column_nonpositive(s) {
                    found = Some(s);
                    break;
                }
            }
            match found {
                None => {
                    debug_assert_eq!(mat, Mat3::identity());
                    return Ok(len);
                }
                Some(s) => {
                    mat = self.gen_mats[s].checked_mul(&mat).map_err(|_| Error::Overflow)?;
                    inv = inv.checked_mul(&self.gen_mats[s]).map_err(|_| Error::Overflow)?;
                    len += 1;
                    if len > 100_000 {
                        return Err(Error::Overflow);
                    }
                }
            }
        }
    }

    /// Generators `s` with `l(s g) < l(g)`.
    pub fn left_descents(&self, g: &Element) -> Vec<u8> {
        (0..3u8)
            .filter(|&s| g.inv.column_nonpositive(s as usize))
            .collect()
    }

    /// Generators `s` with `l(g s) < l(g)`.
    pub fn right_descents(&self, g: &Element) -> Vec<u8> {
        (0..3u8)
            .filter(|&s| g.mat.column_nonpositive(s as usize))
            .collect()
    }

    /// The ShortLex-least reduced word of `g`, letters in `0..3`, generator
    /// order `s1 < s2 < s3`.
    pub fn sl_word(&self, g: &Element) -> Vec<u8> {
        let mut out = Vec::with_capacity(g.len as usize);
        let mut cur = g.clone();
        while cur.len > 0 {
            let s = self.left_descents(&cur)[0];
            let gen = self.generator(s);
            cur = self
                .mul(&gen, &cur)
                .expect("reduction cannot overflow below the original length");
            out.push(s);
        }
        out
    }

    pub fn display(&self, g: &Element) -> String {
        format_word(&self.sl_word(g))
    }

    /// Breadth-first ball of all elements of length at most `radius`.
    pub fn ball(&self, radius: u32) -> Result<Ball, Error> {
        Ball::new(self, radius, ball_cap())
    }

    /// `Y(w) = { y : l(w y^{-1}) = l(w) - l(y) }`, i.e. the suffixes of
    /// reduced expressions of `w`, in ball enumeration order.
    pub fn y_set(&self, w: &Element) -> Result<Vec<Element>, Error> {
        let ball = self.ball(w.len)?;
        let mut out = Vec::new();
        for id in 0..ball.len() {
            let y = ball.element(id as u32);
            let wy_inv = self.mul(w, &y.inverse())?;
            if wy_inv.len == w.len - y.len {
                out.push(y);
            }
        }
        Ok(out)
    }

    /// True when `g` acts on the alcove model as a lattice translation:
    /// the linear part of its affine action is trivial, i.e. the matrix
    /// fixes every simple root modulo the null root. Always false when the
    /// form has no radical (no affine realization).
    pub fn is_translation(&self, g: &Element) -> bool {
        let Some(delta) = &self.delta else {
            return false;
        };
        for c in 0..3 {
            let col = g.mat.column(c);
            let mut diff = [Quad::ZERO; 3];
            for r in 0..3 {
                let e = if r == c { Quad::ONE } else { Quad::ZERO };
                diff[r] = match col[r].checked_sub(&e) {
                    Ok(v) => v,
                    Err(_) => return false,
                };
            }
            if !parallel(&diff, delta) {
                return false;
            }
        }
        true
    }

    pub fn has_affine_realization(&self) -> bool {
        self.delta.is_some()
    }
}

/// All 2x2 minors of the pair vanish, i.e. `u` lies on the line through `d`.
/// Overflow is treated as "not parallel" (it cannot occur at the lengths the
/// ball cap admits).
fn parallel(u: &[Quad; 3], d: &[Quad; 3]) -> bool {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let minor = u[i]
            .checked_mul(&d[j])
            .and_then(|m1| u[j].checked_mul(&d[i]).and_then(|m2| m1.checked_sub(&m2)));
        match minor {
            Ok(v) if v.is_zero() => {}
            _ => return false,
        }
    }
    true
}

/// Null root of the Gram matrix, when one exists. For the two affine presets
/// these are `(sqrt3, 2, 1)` and `(1, sqrt2, 1)`; for custom matrices a
/// kernel vector is searched among the same shapes and `None` is returned if
/// the form is nonsingular.
fn null_root(spec: &CoxeterSpec) -> Option<[Quad; 3]> {
    let candidates: &[[Quad; 3]] = &[
        [Quad::sqrt3(), Quad::int(2), Quad::ONE],
        [Quad::ONE, Quad::sqrt2(), Quad::ONE],
        [Quad::ONE, Quad::ONE, Quad::ONE],
        [Quad::int(2), Quad::sqrt3(), Quad::ONE],
        [Quad::ONE, Quad::sqrt2(), Quad::int(1)],
    ];
    // Gram matrix doubled: G2[i][j] = 2 B(a_i, a_j) = 2 on diagonal,
    // -2cos(pi/m) off it.
    let mut g2 = [[Quad::ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            g2[i][j] = if i == j {
                Quad::int(2)
            } else {
                Quad::two_cos_pi_over(spec.matrix[i][j]).unwrap().neg()
            };
        }
    }
    'cand: for cand in candidates {
        for perm in [[0usize, 1, 2], [2, 1, 0], [1, 0, 2], [0, 2, 1], [2, 0, 1], [1, 2, 0]] {
            let v = [cand[perm[0]], cand[perm[1]], cand[perm[2]]];
            let mut ok = true;
            for row in &g2 {
                let mut acc = Quad::ZERO;
                for k in 0..3 {
                    acc = match acc.checked_add(&match row[k].checked_mul(&v[k]) {
                        Ok(x) => x,
                        Err(_) => continue 'cand,
                    }) {
                        Ok(x) => x,
                        Err(_) => continue 'cand,
                    };
                }
                if !acc.is_zero() {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Some(v);
            }
        }
    }
    None
}

fn ball_cap() -> usize {
    std::env::var("KLCELLS_BALL_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200_000)
}

pub const OUTSIDE: u32 = u32::MAX;

struct BallElem {
    mat: Mat3,
    inv: Mat3,
    len: u32,
    parent: u32,
    last_gen: u8,
}

/// All elements of length at most `radius`, breadth-first, with O(1)
/// generator multiplication on both sides. Ids are assigned in discovery
/// order, which coincides with ShortLex order on normal words; in
/// particular ids are sorted by length.
pub struct Ball {
    radius: u32,
    elems: Vec<BallElem>,
    index: FxHashMap<Mat3, u32>,
    right: Vec<[u32; 3]>,
    left: Vec<[u32; 3]>,
    inv_id: Vec<u32>,
}

impl Ball {
    pub fn new(ctx: &GroupCtx, radius: u32, cap: usize) -> Result<Ball, Error> {
        let mut elems: Vec<BallElem> = vec![BallElem {
            mat: Mat3::identity(),
            inv: Mat3::identity(),
            len: 0,
            parent: 0,
            last_gen: 0,
        }];
        let mut index = FxHashMap::default();
        index.insert(Mat3::identity(), 0u32);
        let mut head = 0usize;
        while head < elems.len() {
            let id = head as u32;
            head += 1;
            if elems[id as usize].len == radius {
                continue;
            }
            for s in 0..3u8 {
                // right descent test: skip if ws shorter (already present)
                if elems[id as usize].mat.column_nonpositive(s as usize) {
                    continue;
                }
                let mat = elems[id as usize]
                    .mat
                    .checked_mul(&ctx.gen_mats[s as usize])
                    .map_err(|_| Error::Overflow)?;
                if index.contains_key(&mat) {
                    continue;
                }
                if elems.len() >= cap {
                    return Err(Error::BallCap(cap));
                }
                let inv = ctx.gen_mats[s as usize]
                    .checked_mul(&elems[id as usize].inv)
                    .map_err(|_| Error::Overflow)?;
                let len = elems[id as usize].len + 1;
                let new_id = elems.len() as u32;
                index.insert(mat, new_id);
                elems.push(BallElem {
                    mat,
                    inv,
                    len,
                    parent: id,
                    last_gen: s,
                });
            }
        }
        let n = elems.len();
        let mut right = vec![[OUTSIDE; 3]; n];
        let mut left = vec![[OUTSIDE; 3]; n];
        let mut inv_id = vec![OUTSIDE; n];
        for id in 0..n {
            for s in 0..3usize {
                let rm = elems[id]
                    .mat
                    .checked_mul(&ctx.gen_mats[s])
                    .map_err(|_| Error::Overflow)?;
                if let Some(&j) = index.get(&rm) {
                    right[id][s] = j;
                }
                let lm = ctx.gen_mats[s]
                    .checked_mul(&elems[id].mat)
                    .map_err(|_| Error::Overflow)?;
                if let Some(&j) = index.get(&lm) {
                    left[id][s] = j;
                }
            }
            inv_id[id] = *index.get(&elems[id].inv).expect("balls are inverse-closed");
        }
        Ok(Ball {
            radius,
            elems,
            index,
            right,
            left,
            inv_id,
        })
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    #[allow(clippy::len_without_is_empty)] // a ball always contains e
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn length(&self, id: u32) -> u32 {
        self.elems[id as usize].len
    }

    /// Id of `w * s`, or [`OUTSIDE`].
    pub fn right_mul(&self, id: u32, s: u8) -> u32 {
        self.right[id as usize][s as usize]
    }

    /// Id of `s * w`, or [`OUTSIDE`].
    pub fn left_mul(&self, id: u32, s: u8) -> u32 {
        self.left[id as usize][s as usize]
    }

    pub fn inverse_id(&self, id: u32) -> u32 {
        self.inv_id[id as usize]
    }

    pub fn id_of(&self, g: &Element) -> Option<u32> {
        self.index.get(&g.mat).copied()
    }

    pub fn element(&self, id: u32) -> Element {
        let e = &self.elems[id as usize];
        Element {
            mat: e.mat,
            inv: e.inv,
            len: e.len,
        }
    }

    /// ShortLex normal word of the element with this id.
    pub fn word(&self, id: u32) -> Vec<u8> {
        let mut out = Vec::new();
        let mut cur = id;
        while cur != 0 {
            let e = &self.elems[cur as usize];
            out.push(e.last_gen);
            cur = e.parent;
        }
        out.reverse();
        out
    }

    pub fn word_string(&self, id: u32) -> String {
        format_word(&self.word(id))
    }

    /// First letter of the ShortLex word together with the id of the rest,
    /// i.e. `w = s * w'` with `l(w') = l(w) - 1`. Identity returns `None`.
    pub fn first_letter_split(&self, id: u32) -> Option<(u8, u32)> {
        if id == 0 {
            return None;
        }
        let w = self.word(id);
        let s = w[0];
        let rest = self.left[id as usize][s as usize];
        debug_assert_ne!(rest, OUTSIDE);
        Some((s, rest))
    }

    /// Ids of all elements of length at most `r`, i.e. `0..count` since ids
    /// are sorted by length.
    pub fn ids_within(&self, r: u32) -> std::ops::Range<u32> {
        let end = self.elems.partition_point(|e| e.len <= r) as u32;
        0..end
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> GroupCtx {
        GroupCtx::new(CoxeterSpec::g2(9, 2)).unwrap()
    }

    fn b2() -> GroupCtx {
        GroupCtx::new(CoxeterSpec::b2(3, 2, 3)).unwrap()
    }

    #[test]
    fn preset_matrices() {
        assert_eq!(
            CoxeterSpec::g2(9, 2).matrix,
            [[1, 6, 2], [6, 1, 3], [2, 3, 1]]
        );
        assert_eq!(
            CoxeterSpec::b2(3, 2, 3).matrix,
            [[1, 4, 2], [4, 1, 4], [2, 4, 1]]
        );
    }

    #[test]
    fn odd_bond_weight_mismatch_rejected() {
        let spec = CoxeterSpec {
            matrix: [[1, 3, 2], [3, 1, 4], [2, 4, 1]],
            weights: [1, 2, 2],
            preset: Preset::Custom,
        };
        assert!(matches!(
            GroupCtx::new(spec),
            Err(Error::OddBondWeightMismatch(1, 2))
        ));
    }

    #[test]
    fn invalid_matrix_rejected() {
        let spec = CoxeterSpec {
            matrix: [[1, 5, 2], [5, 1, 3], [2, 3, 1]],
            weights: [1, 1, 1],
            preset: Preset::Custom,
        };
        assert!(matches!(GroupCtx::new(spec), Err(Error::InvalidMatrix(_))));
    }

    #[test]
    fn words_normalize() {
        let ctx = g2();
        assert_eq!(ctx.word_to_element(&[]).unwrap().length(), 0);
        assert_eq!(ctx.word_to_element(&[0, 0]).unwrap().length(), 0);
        // braid relation of order 6: 121212 = 212121
        let a = ctx.element_from_str("121212").unwrap();
        let b = ctx.element_from_str("212121").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.length(), 6);
        let u1 = ctx.element_from_str("12121").unwrap();
        assert_eq!(u1.length(), 5);
    }

    #[test]
    fn descents_and_sl_words() {
        let ctx = g2();
        let e = ctx.identity();
        assert!(ctx.left_descents(&e).is_empty());
        let g = ctx.element_from_str("12").unwrap();
        assert_eq!(ctx.left_descents(&g), vec![0]);
        assert_eq!(ctx.right_descents(&g), vec![1]);
        assert_eq!(ctx.display(&g), "12");
        // non-reduced input normalizes
        let h = ctx.element_from_str("2212").unwrap();
        assert_eq!(ctx.display(&h), "12");
    }

    #[test]
    fn ball_small_counts() {
        let ctx = g2();
        let b0 = ctx.ball(0).unwrap();
        assert_eq!(b0.len(), 1);
        let b1 = ctx.ball(1).unwrap();
        assert_eq!(b1.len(), 4);
        // strictly increasing for the affine presets
        let mut prev = 1;
        for r in 1..10 {
            let b = ctx.ball(r).unwrap();
            assert!(b.len() > prev);
            prev = b.len();
        }
    }

    #[test]
    fn ball_ids_shortlex_sorted() {
        let ctx = b2();
        let ball = ctx.ball(5).unwrap();
        let mut words: Vec<Vec<u8>> = (0..ball.len() as u32).map(|i| ball.word(i)).collect();
        for w in &words {
            // each stored word is the ShortLex normal form
            let g = ctx.word_to_element(w).unwrap();
            assert_eq!(ctx.sl_word(&g), *w);
        }
        let sorted = {
            let mut v = words.clone();
            v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
            v
        };
        words.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        assert_eq!(words, sorted);
    }

    #[test]
    fn exchange_property_desk_scale() {
        let ctx = b2();
        let ball = ctx.ball(8).unwrap();
        for id in 0..ball.len() as u32 {
            let g = ball.element(id);
            for s in ctx.left_descents(&g) {
                let sg = ctx.mul(&ctx.generator(s), &g).unwrap();
                assert_eq!(sg.length(), g.length() - 1);
                assert!(ball.id_of(&sg).is_some());
            }
        }
    }

    #[test]
    fn defining_relations() {
        for ctx in [g2(), b2()] {
            for i in 0..3u8 {
                for j in 0..3u8 {
                    let m = ctx.spec().matrix[i as usize][j as usize] as usize;
                    let mut w = Vec::new();
                    for _ in 0..m {
                        w.push(i);
                        w.push(j);
                    }
                    let g = ctx.word_to_element(&w).unwrap();
                    assert!(g.is_identity(), "({},{})^{} != e", i + 1, j + 1, m);
                }
            }
        }
    }

    #[test]
    fn y_set_small() {
        let ctx = g2();
        let e = ctx.identity();
        assert_eq!(ctx.y_set(&e).unwrap().len(), 1);
        let s1 = ctx.generator(0);
        let ys = ctx.y_set(&s1).unwrap();
        assert_eq!(ys.len(), 2);
    }

    #[test]
    fn translation_examples() {
        let ctx = g2();
        assert!(ctx.is_translation(&ctx.identity()));
        assert!(!ctx.is_translation(&ctx.generator(0)));
        let w = ctx.element_from_str("1212312123").unwrap();
        assert_eq!(w.length(), 10);
        assert!(ctx.is_translation(&w));
        // its square is again a translation, longer
        let w2 = ctx.mul(&w, &w).unwrap();
        assert_eq!(w2.length(), 20);
        assert!(ctx.is_translation(&w2));
        for word in ["123212", "232121"] {
            let t = ctx.element_from_str(word).unwrap();
            assert!(ctx.is_translation(&t), "{word} should be a translation");
        }
    }

    #[test]
    fn b2_translations() {
        let ctx = b2();
        for word in ["132132", "1232"] {
            let w = ctx.element_from_str(word).unwrap();
            assert!(ctx.is_translation(&w), "{word} should be a translation");
        }
        assert!(!ctx.is_translation(&ctx.element_from_str("12").unwrap()));
    }

    #[test]
    fn growth_is_quadratic() {
        for ctx in [g2(), b2()] {
            for n in [8u32, 12] {
                let big = ctx.ball(2 * n).unwrap().len() as f64;
                let small = ctx.ball(n).unwrap().len() as f64;
                let ratio = big / small;
                assert!(
                    ratio > 3.4 && ratio < 4.6,
                    "|ball({})|/|ball({})| = {ratio}",
                    2 * n,
                    n
                );
            }
        }
    }

    #[test]
    fn ball_cap_enforced() {
        let ctx = g2();
        assert!(matches!(
            Ball::new(&ctx, 30, 100),
            Err(Error::BallCap(100))
        ));
    }
}
