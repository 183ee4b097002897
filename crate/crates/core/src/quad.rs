//! The ring `Z[sqrt(2), sqrt(3)]`, free of rank 4 over `Z` with basis
//! `1, sqrt(2), sqrt(3), sqrt(6)`. All values `2*cos(pi/m)` for
//! `m in {2,3,4,6}` lie here, so matrices of the geometric reflection
//! representation of any rank-3 Coxeter matrix with those bond orders have
//! entries in this ring. Arithmetic is checked: overflow is reported, never
//! wrapped.

use std::fmt;

/// `a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6)` with integer coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Quad {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overflow;

impl Quad {
    pub const ZERO: Quad = Quad { a: 0, b: 0, c: 0, d: 0 };
    pub const ONE: Quad = Quad { a: 1, b: 0, c: 0, d: 0 };

    pub fn int(a: i64) -> Quad {
        Quad { a, b: 0, c: 0, d: 0 }
    }

    pub fn sqrt2() -> Quad {
        Quad { a: 0, b: 1, c: 0, d: 0 }
    }

    pub fn sqrt3() -> Quad {
        Quad { a: 0, b: 0, c: 1, d: 0 }
    }

    /// `2*cos(pi/m)` for the supported bond orders.
    pub fn two_cos_pi_over(m: u8) -> Option<Quad> {
        match m {
            1 => Some(Quad::int(-2)),
            2 => Some(Quad::ZERO),
            3 => Some(Quad::ONE),
            4 => Some(Quad::sqrt2()),
            6 => Some(Quad::sqrt3()),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Quad::ZERO
    }

    pub fn checked_add(&self, o: &Quad) -> Result<Quad, Overflow> {
        Ok(Quad {
            a: self.a.checked_add(o.a).ok_or(Overflow)?,
            b: self.b.checked_add(o.b).ok_or(Overflow)?,
            c: self.c.checked_add(o.c).ok_or(Overflow)?,
            d: self.d.checked_add(o.d).ok_or(Overflow)?,
        })
    }

    pub fn checked_sub(&self, o: &Quad) -> Result<Quad, Overflow> {
        Ok(Quad {
            a: self.a.checked_sub(o.a).ok_or(Overflow)?,
            b: self.b.checked_sub(o.b).ok_or(Overflow)?,
            c: self.c.checked_sub(o.c).ok_or(Overflow)?,
            d: self.d.checked_sub(o.d).ok_or(Overflow)?,
        })
    }

    pub fn neg(&self) -> Quad {
        Quad { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn checked_mul(&self, o: &Quad) -> Result<Quad, Overflow> {
        // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2
        let m = |x: i64, y: i64| x.checked_mul(y).ok_or(Overflow);
        let s = |acc: i64, v: i64| acc.checked_add(v).ok_or(Overflow);
        let mut a = m(self.a, o.a)?;
        a = s(a, m(self.b, o.b)?.checked_mul(2).ok_or(Overflow)?)?;
        a = s(a, m(self.c, o.c)?.checked_mul(3).ok_or(Overflow)?)?;
        a = s(a, m(self.d, o.d)?.checked_mul(6).ok_or(Overflow)?)?;
        let mut b = m(self.a, o.b)?;
        b = s(b, m(self.b, o.a)?)?;
        b = s(b, m(self.c, o.d)?.checked_mul(3).ok_or(Overflow)?)?;
        b = s(b, m(self.d, o.c)?.checked_mul(3).ok_or(Overflow)?)?;
        let mut c = m(self.a, o.c)?;
        c = s(c, m(self.c, o.a)?)?;
        c = s(c, m(self.b, o.d)?.checked_mul(2).ok_or(Overflow)?)?;
        c = s(c, m(self.d, o.b)?.checked_mul(2).ok_or(Overflow)?)?;
        let mut d = m(self.a, o.d)?;
        d = s(d, m(self.d, o.a)?)?;
        d = s(d, m(self.b, o.c)?)?;
        d = s(d, m(self.c, o.b)?)?;
        Ok(Quad { a, b, c, d })
    }

    pub fn to_f64(&self) -> f64 {
        self.a as f64
            + self.b as f64 * std::f64::consts::SQRT_2
            + self.c as f64 * 3f64.sqrt()
            + self.d as f64 * 6f64.sqrt()
    }

    /// Exact sign of the real number this element represents.
    pub fn sign(&self) -> i32 {
        // x = P + sqrt(3) * Q with P = a + b*sqrt2, Q = c + d*sqrt2.
        let p = (self.a as i128, self.b as i128);
        let q = (self.c as i128, self.d as i128);
        let sp = sign_z_sqrt2(p);
        let sq = sign_z_sqrt2(q);
        match (sp, sq) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (s, t) if s == t => s,
            (s, _) => {
                // sign(P + sqrt3 Q) with P, Q of opposite signs:
                // compare P^2 against 3 Q^2 inside Z[sqrt2].
                let p2 = sq2_mul(p, p);
                let q2 = sq2_mul(q, q);
                let diff = (p2.0 - 3 * q2.0, p2.1 - 3 * q2.1);
                let s_diff = sign_z_sqrt2(diff);
                if s_diff == 0 {
                    0
                } else {
                    s_diff * s
                }
            }
        }
    }

    pub fn is_nonpositive(&self) -> bool {
        self.sign() <= 0
    }
}

fn sq2_mul(x: (i128, i128), y: (i128, i128)) -> (i128, i128) {
    (x.0 * y.0 + 2 * x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

/// Sign of `p + q*sqrt(2)`.
fn sign_z_sqrt2(x: (i128, i128)) -> i32 {
    let (p, q) = x;
    if p == 0 && q == 0 {
        return 0;
    }
    if p >= 0 && q >= 0 {
        return 1;
    }
    if p <= 0 && q <= 0 {
        return -1;
    }
    // opposite signs: compare p^2 with 2 q^2
    let lhs = p * p;
    let rhs = 2 * q * q;
    let s = if lhs == rhs {
        0
    } else if lhs > rhs {
        1
    } else {
        -1
    };
    if p > 0 {
        s
    } else {
        -s
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}r2+{}r3+{}r6)", self.a, self.b, self.c, self.d)
    }
}

/// Row-major 3x3 matrix over [`Quad`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat3(pub [Quad; 9]);

impl Mat3 {
    pub fn identity() -> Mat3 {
        let mut m = [Quad::ZERO; 9];
        m[0] = Quad::ONE;
        m[4] = Quad::ONE;
        m[8] = Quad::ONE;
        Mat3(m)
    }

    pub fn at(&self, r: usize, c: usize) -> &Quad {
        &self.0[3 * r + c]
    }

    pub fn checked_mul(&self, o: &Mat3) -> Result<Mat3, Overflow> {
        let mut out = [Quad::ZERO; 9];
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = Quad::ZERO;
                for k in 0..3 {
                    acc = acc.checked_add(&self.at(r, k).checked_mul(o.at(k, c))?)?;
                }
                out[3 * r + c] = acc;
            }
        }
        Ok(Mat3(out))
    }

    /// Column `c` as an array (the image of the simple root `alpha_c`).
    pub fn column(&self, c: usize) -> [Quad; 3] {
        [*self.at(0, c), *self.at(1, c), *self.at(2, c)]
    }

    /// True when every entry of column `c` is nonpositive, i.e. the image of
    /// `alpha_c` is a negative root.
    pub fn column_nonpositive(&self, c: usize) -> bool {
        (0..3).all(|r| self.at(r, c).is_nonpositive())
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..3 {
            writeln!(
                f,
                "[{:?} {:?} {:?}]",
                self.at(r, 0),
                self.at(r, 1),
                self.at(r, 2)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_table() {
        let r2 = Quad::sqrt2();
        let r3 = Quad::sqrt3();
        assert_eq!(r2.checked_mul(&r2).unwrap(), Quad::int(2));
        assert_eq!(r3.checked_mul(&r3).unwrap(), Quad::int(3));
        let r6 = r2.checked_mul(&r3).unwrap();
        assert_eq!(r6, Quad { a: 0, b: 0, c: 0, d: 1 });
        assert_eq!(r6.checked_mul(&r6).unwrap(), Quad::int(6));
        assert_eq!(
            r2.checked_mul(&r6).unwrap(),
            Quad { a: 0, b: 0, c: 2, d: 0 }
        );
    }

    #[test]
    fn signs() {
        // sqrt6 - 2 > 0, sqrt2 + sqrt3 - sqrt6 > 0, 1 + sqrt2 - sqrt3 + ... mixed cases
        assert_eq!(Quad { a: -2, b: 0, c: 0, d: 1 }.sign(), 1);
        assert_eq!(Quad { a: 0, b: 1, c: 1, d: -1 }.sign(), 1);
        assert_eq!(Quad { a: -3, b: 0, c: 1, d: 0 }.sign(), -1);
        assert_eq!(Quad::ZERO.sign(), 0);
        // 7 - 5 sqrt2 < 0 (49 < 50)
        assert_eq!(Quad { a: 7, b: -5, c: 0, d: 0 }.sign(), -1);
        // brute float cross-check on a grid
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                for c in -3..=3i64 {
                    for d in -3..=3i64 {
                        let q = Quad { a, b, c, d };
                        let v = q.to_f64();
                        if v.abs() > 1e-9 {
                            assert_eq!(q.sign(), v.signum() as i32, "{q:?}");
                        }
                    }
                }
            }
        }
    }
}
