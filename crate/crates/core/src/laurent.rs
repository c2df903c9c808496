//! Laurent polynomials in one variable with exact integer coefficients.
//!
//! `coeffs[i]` holds the coefficient of `x^(min_deg + i)`. The vector is
//! either empty (the zero polynomial) or its first and last entries are
//! nonzero. All arithmetic is checked; coefficient overflow panics rather
//! than wrapping.

use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawLaurent", into = "RawLaurent")]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<i64>,
}

/// Wire form: `{"min_deg": m, "coeffs": [c_m, c_{m+1}, ...]}`.
#[derive(Serialize, Deserialize)]
struct RawLaurent {
    min_deg: i64,
    coeffs: Vec<i64>,
}

impl From<RawLaurent> for LaurentPoly {
    fn from(raw: RawLaurent) -> Self {
        LaurentPoly::from_coeffs(raw.min_deg, raw.coeffs)
    }
}

impl From<LaurentPoly> for RawLaurent {
    fn from(p: LaurentPoly) -> Self {
        RawLaurent {
            min_deg: p.min_deg,
            coeffs: p.coeffs,
        }
    }
}

fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("laurent coefficient overflow")
}

fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("laurent coefficient overflow")
}

// ---- construction ----

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            min_deg: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * x^deg`.
    pub fn monomial(c: i64, deg: i64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LaurentPoly {
                min_deg: deg,
                coeffs: vec![c],
            }
        }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds from raw data, trimming zero ends.
    pub fn from_coeffs(min_deg: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { min_deg, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_deg += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    // ---- queries ----

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg)
        }
    }

    pub fn max_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, deg: i64) -> i64 {
        if self.is_zero() {
            return 0;
        }
        let idx = deg - self.min_deg;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[idx as usize]
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    // ---- arithmetic ----

    /// Multiplies by `x^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_deg: self.min_deg + shift,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; the remainder must vanish.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Work on ordinary polynomials (shift both to minimum degree 0);
        // the exponent offset is restored at the end.
        let mut rem = self.coeffs.clone();
        let div = &divisor.coeffs;
        let dlead = *div.last().unwrap();
        if rem.len() < div.len() {
            return Err(Error::InexactDivision(format!(
                "{} does not divide {}",
                divisor.display("x"),
                self.display("x")
            )));
        }
        let qlen = rem.len() - div.len() + 1;
        let mut quot = vec![0i64; qlen];
        for qi in (0..qlen).rev() {
            let lead = rem[qi + div.len() - 1];
            if lead == 0 {
                continue;
            }
            if lead % dlead != 0 {
                return Err(Error::InexactDivision(format!(
                    "{} does not divide {}",
                    divisor.display("x"),
                    self.display("x")
                )));
            }
            let q = lead / dlead;
            quot[qi] = q;
            for (di, &d) in div.iter().enumerate() {
                rem[qi + di] = cadd(rem[qi + di], -cmul(q, d));
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision(format!(
                "{} does not divide {}",
                divisor.display("x"),
                self.display("x")
            )));
        }
        Ok(Self::from_coeffs(self.min_deg - divisor.min_deg, quot))
    }

    // ---- normal forms ----

    /// Shifts the minimum degree to 0 and makes the lowest coefficient
    /// positive. The zero polynomial is returned unchanged.
    pub fn canonical_unit_form(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut p = self.shifted(-self.min_deg);
        if p.coeffs[0] < 0 {
            p = -&p;
        }
        p
    }

    /// True when `other = ±x^m * self` for some integer m.
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return true,
            (true, false) | (false, true) => return false,
            _ => {}
        }
        let a = self.shifted(-self.min_deg);
        let b = other.shifted(-other.min_deg);
        a == b || a == -&b
    }

    // ---- formatting ----

    /// Renders with the given variable name, e.g. `1 - t + t^2`.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let deg = self.min_deg + i as i64;
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.unsigned_abs();
            let show_coeff = mag != 1 || deg == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if deg != 0 {
                out.push_str(var);
                if deg != 1 {
                    out.push_str(&format!("^{}", deg));
                }
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(rhs.min_deg);
        let hi =
            (self.min_deg + self.coeffs.len() as i64).max(rhs.min_deg + rhs.coeffs.len() as i64);
        let mut coeffs = vec![0i64; (hi - lo) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_deg - lo) as usize + i] = c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            let idx = (rhs.min_deg - lo) as usize + i;
            coeffs[idx] = cadd(coeffs[idx], c);
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &-rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = cadd(coeffs[i + j], cmul(a, b));
            }
        }
        LaurentPoly::from_coeffs(self.min_deg + rhs.min_deg, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min_deg: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(min_deg, coeffs.to_vec())
    }

    #[test]
    fn normalization_trims_zeros() {
        assert_eq!(p(-2, &[0, 1, 0, 3, 0]), p(-1, &[1, 0, 3]));
        assert!(p(5, &[0, 0]).is_zero());
        assert_eq!(p(7, &[]).min_degree(), None);
    }

    #[test]
    fn ring_identities() {
        let a = p(-1, &[2, 0, -1, 4]);
        let b = p(0, &[1, 1]);
        let c = p(-3, &[5, -2]);
        assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&a * &LaurentPoly::one(), a);
        assert_eq!(&a * &LaurentPoly::zero(), LaurentPoly::zero());
    }

    #[test]
    fn geometric_series_product() {
        // (1 - t)(1 + t + t^2) = 1 - t^3
        let lhs = &p(0, &[1, -1]) * &p(0, &[1, 1, 1]);
        assert_eq!(lhs, p(0, &[1, 0, 0, -1]));
    }

    #[test]
    fn division_exact_and_inexact() {
        let num = p(0, &[1, 0, 0, 0, 0, -1]); // 1 - t^5
        let den = p(0, &[1, -1]); // 1 - t
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, p(0, &[1, 1, 1, 1, 1]));

        let bad = p(0, &[1, 1]).div_exact(&p(0, &[1, -1]));
        assert!(matches!(bad, Err(Error::InexactDivision(_))));

        // exponent bookkeeping across negative degrees
        let a = p(-4, &[3, 0, 1]);
        let b = p(-2, &[-1, 2, 7]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);

        assert!(matches!(
            a.div_exact(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        ));
        assert_eq!(
            LaurentPoly::zero().div_exact(&b).unwrap(),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn unit_equivalence() {
        let a = p(0, &[1, -1]); // 1 - t
        assert!(a.equal_up_to_units(&p(0, &[-1, 1]))); // t - 1
        assert!(a.equal_up_to_units(&p(2, &[-1, 1]))); // t^3 - t^2
        assert!(!a.equal_up_to_units(&p(0, &[1, 1])));
        assert!(LaurentPoly::zero().equal_up_to_units(&LaurentPoly::zero()));
        assert!(!LaurentPoly::zero().equal_up_to_units(&a));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(3, &[-1, 0, 2]).canonical_unit_form(), p(0, &[1, 0, -2]));
        assert_eq!(
            LaurentPoly::zero().canonical_unit_form(),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(0, &[1, -1, 1]).display("t"), "1 - t + t^2");
        assert_eq!(p(-16, &[-1, 0, 0, 0, 1]).display("A"), "-A^-16 + A^-12");
        assert_eq!(p(0, &[3]).display("t"), "3");
        assert_eq!(LaurentPoly::zero().display("t"), "0");
        assert_eq!(p(1, &[1]).display("t"), "t");
        assert_eq!(p(1, &[-2]).display("t"), "-2t");
    }

    #[test]
    fn json_round_trip() {
        let a = p(-3, &[2, 0, -1]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"min_deg":-3,"coeffs":[2,0,-1]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        // denormalized input is accepted and normalized
        let b: LaurentPoly = serde_json::from_str(r#"{"min_deg":0,"coeffs":[0,1,0]}"#).unwrap();
        assert_eq!(b, LaurentPoly::var());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = p(-1, &[1, 1]);
        assert_eq!(a.pow(0), LaurentPoly::one());
        assert_eq!(a.pow(3), &(&a * &a) * &a);
    }
}
