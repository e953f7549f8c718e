//! Homogeneous binary forms in s, t with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::P1Error;

/// A homogeneous form of fixed degree in two variables s, t.
///
/// `coefficients[j]` is the coefficient of s^(degree-j) t^j, so the vector
/// always has length `degree + 1`. The zero form keeps its degree tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    degree: u32,
    coefficients: Vec<BigRational>,
}

impl BinaryForm {
    pub fn new(degree: u32, coefficients: Vec<BigRational>) -> Result<Self, P1Error> {
        if coefficients.len() != degree as usize + 1 {
            return Err(P1Error::ExponentArity {
                expected: degree as usize + 1,
                found: coefficients.len(),
            });
        }
        Ok(BinaryForm {
            degree,
            coefficients,
        })
    }

    /// The zero form of the given degree.
    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            degree,
            coefficients: vec![BigRational::zero(); degree as usize + 1],
        }
    }

    /// Builds a form from integer coefficients, s-power first.
    pub fn from_ints(coefficients: &[i64]) -> Self {
        BinaryForm {
            degree: (coefficients.len() - 1) as u32,
            coefficients: coefficients
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Coefficient of s^(degree-j) t^j.
    pub fn coefficient(&self, j: u32) -> &BigRational {
        &self.coefficients[j as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BinaryForm {
            degree: self.degree,
            coefficients: self.coefficients.iter().map(|a| a * c).collect(),
        }
    }

    /// d/ds; the degree drops by one (degree-0 forms differentiate to the
    /// zero form of degree 0).
    pub fn derivative_s(&self) -> Self {
        if self.degree == 0 {
            return BinaryForm::zero(0);
        }
        let d = self.degree as usize;
        let coefficients = (0..d)
            .map(|j| &self.coefficients[j] * BigRational::from_integer(BigInt::from((d - j) as u64)))
            .collect();
        BinaryForm {
            degree: self.degree - 1,
            coefficients,
        }
    }

    /// d/dt; the degree drops by one.
    pub fn derivative_t(&self) -> Self {
        if self.degree == 0 {
            return BinaryForm::zero(0);
        }
        let d = self.degree as usize;
        let coefficients = (0..d)
            .map(|j| &self.coefficients[j + 1] * BigRational::from_integer(BigInt::from((j + 1) as u64)))
            .collect();
        BinaryForm {
            degree: self.degree - 1,
            coefficients,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        let mut coefficients = vec![BigRational::zero(); degree as usize + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                if !b.is_zero() {
                    coefficients[i + j] += a * b;
                }
            }
        }
        BinaryForm {
            degree,
            coefficients,
        }
    }

    /// Largest power of t dividing this form, and the trailing/leading
    /// nonzero indices of the coefficient vector. `None` for the zero form.
    fn support(&self) -> Option<(usize, usize)> {
        let lo = self.coefficients.iter().position(|c| !c.is_zero())?;
        let hi = self.coefficients.iter().rposition(|c| !c.is_zero())?;
        Some((lo, hi))
    }

    /// Greatest common divisor, normalized so the highest t-power coefficient
    /// is 1. `gcd(0, 0)` is the zero form of degree 0.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.support(), other.support()) {
            (None, None) => BinaryForm::zero(0),
            (None, Some(_)) => other.normalized(),
            (Some(_), None) => self.normalized(),
            (Some((lo_a, hi_a)), Some((lo_b, hi_b))) => {
                // f = s^(deg-hi) t^lo * core, with the core free of s and t
                // factors; the core dehomogenizes to a polynomial in y = t/s
                // with nonzero constant and leading coefficients.
                let t_pow = lo_a.min(lo_b);
                let s_pow = (self.degree as usize - hi_a).min(other.degree as usize - hi_b);
                let core_a = &self.coefficients[lo_a..=hi_a];
                let core_b = &other.coefficients[lo_b..=hi_b];
                let core_gcd = univariate_gcd(core_a, core_b);
                let e = core_gcd.len() - 1;
                let mut coefficients = vec![BigRational::zero(); s_pow + t_pow + e + 1];
                coefficients[t_pow..t_pow + e + 1].clone_from_slice(&core_gcd);
                BinaryForm {
                    degree: (s_pow + t_pow + e) as u32,
                    coefficients,
                }
            }
        }
    }

    /// Rescales so the highest nonzero t-power coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.support() {
            None => self.clone(),
            Some((_, hi)) => {
                let lead = self.coefficients[hi].clone();
                self.scale(&lead.recip())
            }
        }
    }

    /// Number of distinct roots on the projective line over the algebraic
    /// closure: degree minus the degree of gcd of the two partials. Exact in
    /// characteristic 0; degree-0 forms have no roots.
    pub fn num_distinct_roots(&self) -> Result<u32, P1Error> {
        if self.is_zero() {
            return Err(P1Error::ZeroForm);
        }
        if self.degree == 0 {
            return Ok(0);
        }
        let repeated = self.derivative_s().gcd(&self.derivative_t());
        Ok(self.degree - repeated.degree())
    }
}

/// Polynomial gcd in one variable over the rationals, monic. Inputs are
/// coefficient slices, constant term first, with nonzero leading terms.
fn univariate_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a: Vec<BigRational> = a.to_vec();
    let mut b: Vec<BigRational> = b.to_vec();
    while !b.is_empty() {
        remainder_in_place(&mut a, &b);
        core::mem::swap(&mut a, &mut b);
    }
    let lead = a.last().expect("gcd of nonzero polynomials").clone();
    for c in &mut a {
        *c /= &lead;
    }
    a
}

/// Replaces `a` by `a mod b`, trimming leading zeros (empty = zero).
fn remainder_in_place(a: &mut Vec<BigRational>, b: &[BigRational]) {
    let db = b.len() - 1;
    while a.len() > db {
        let q = a.last().expect("nonempty") / &b[db];
        let shift = a.len() - 1 - db;
        if !q.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let v = bc * &q;
                a[shift + i] -= v;
            }
        }
        a.pop();
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        if a.len() <= db {
            break;
        }
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s_exp = self.degree as usize - j;
            let t_exp = j;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let bare = s_exp == 0 && t_exp == 0;
            if !mag.is_one() || bare {
                write!(f, "{mag}")?;
                if !bare {
                    write!(f, "*")?;
                }
            }
            match (s_exp, t_exp) {
                (0, 0) => {}
                (1, 0) => write!(f, "s")?,
                (e, 0) => write!(f, "s^{e}")?,
                (0, 1) => write!(f, "t")?,
                (0, e) => write!(f, "t^{e}")?,
                (1, 1) => write!(f, "s*t")?,
                (1, e) => write!(f, "s*t^{e}")?,
                (e, 1) => write!(f, "s^{e}*t")?,
                (e1, e2) => write!(f, "s^{e1}*t^{e2}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn construction_checks_length() {
        assert!(BinaryForm::new(2, vec![BigRational::zero(); 3]).is_ok());
        assert!(BinaryForm::new(2, vec![BigRational::zero(); 2]).is_err());
        assert!(BinaryForm::zero(3).is_zero());
        assert_eq!(BinaryForm::zero(3).degree(), 3);
    }

    #[test]
    fn derivatives_of_st() {
        // p = s*t: coefficient vector (0, 1, 0)
        let p = BinaryForm::from_ints(&[0, 1, 0]);
        assert_eq!(p.derivative_s(), BinaryForm::from_ints(&[0, 1])); // t
        assert_eq!(p.derivative_t(), BinaryForm::from_ints(&[1, 0])); // s
    }

    #[test]
    fn derivatives_of_power() {
        // p = s^3
        let p = BinaryForm::from_ints(&[1, 0, 0, 0]);
        assert_eq!(p.derivative_s(), BinaryForm::from_ints(&[3, 0, 0]));
        assert!(p.derivative_t().is_zero());
        assert!(BinaryForm::from_ints(&[5]).derivative_s().is_zero());
    }

    #[test]
    fn multiplication() {
        let a = BinaryForm::from_ints(&[1, 1]); // s + t
        let b = BinaryForm::from_ints(&[1, -1]); // s - t
        assert_eq!(a.mul(&b), BinaryForm::from_ints(&[1, 0, -1])); // s^2 - t^2
    }

    #[test]
    fn gcd_of_coprime_forms_is_constant() {
        let a = BinaryForm::from_ints(&[0, 1]); // t
        let b = BinaryForm::from_ints(&[1, 0]); // s
        let g = a.gcd(&b);
        assert_eq!(g.degree(), 0);
        assert!(!g.is_zero());
    }

    #[test]
    fn gcd_extracts_common_factor() {
        // (s+t)^2 (s-t) and (s+t)(s-t)^2 share (s+t)(s-t)
        let p = BinaryForm::from_ints(&[1, 1]);
        let m = BinaryForm::from_ints(&[1, -1]);
        let a = p.mul(&p).mul(&m);
        let b = p.mul(&m).mul(&m);
        let g = a.gcd(&b);
        assert_eq!(g.degree(), 2);
        assert_eq!(g, p.mul(&m).normalized());
    }

    #[test]
    fn gcd_handles_coordinate_factors() {
        // s^2(s+t) and t^2(s+t) share only (s+t)
        let a = BinaryForm::from_ints(&[1, 1, 0, 0]); // s^3 + s^2 t
        let b = BinaryForm::from_ints(&[0, 0, 1, 1]); // s t^2 + t^3
        let g = a.gcd(&b);
        assert_eq!(g.degree(), 1);
        assert_eq!(g, BinaryForm::from_ints(&[1, 1]).normalized());
        let a = BinaryForm::from_ints(&[0, 1, 1, 0, 0]); // s^2 t (s+t)
        let b = BinaryForm::from_ints(&[0, 0, 1, 1, 0]); // s t^2 (s+t)
        let g = a.gcd(&b);
        assert_eq!(g.degree(), 3);
        let expected = BinaryForm::from_ints(&[0, 1, 1, 0]); // s t (s+t)
        assert_eq!(g, expected.normalized());
    }

    #[test]
    fn gcd_with_zero() {
        let a = BinaryForm::from_ints(&[2, 0, -2]);
        assert_eq!(a.gcd(&BinaryForm::zero(5)), a.normalized());
        assert_eq!(BinaryForm::zero(1).gcd(&a), a.normalized());
        assert!(BinaryForm::zero(1).gcd(&BinaryForm::zero(2)).is_zero());
    }

    #[test]
    fn gcd_rational_coefficients() {
        // gcd is insensitive to scaling
        let a = BinaryForm::from_ints(&[1, 2, 1]); // (s+t)^2
        let b = a.scale(&rat(3, 7));
        let g = a.gcd(&b);
        assert_eq!(g, a.normalized());
    }

    #[test]
    fn distinct_root_counts() {
        // s^d has a single root for every d >= 1
        for d in 1..6 {
            let mut c = vec![0i64; d + 1];
            c[0] = 1;
            assert_eq!(BinaryForm::from_ints(&c).num_distinct_roots(), Ok(1));
        }
        // st: two roots
        assert_eq!(
            BinaryForm::from_ints(&[0, 1, 0]).num_distinct_roots(),
            Ok(2)
        );
        // s^2 - t^2 = (s-t)(s+t): two roots
        assert_eq!(
            BinaryForm::from_ints(&[1, 0, -1]).num_distinct_roots(),
            Ok(2)
        );
        // s^2 + t^2: two roots, conjugate and invisible over the rationals
        assert_eq!(
            BinaryForm::from_ints(&[1, 0, 1]).num_distinct_roots(),
            Ok(2)
        );
        // s^2 t^3 (s+t): three distinct roots
        let p = BinaryForm::from_ints(&[1, 0, 0])
            .mul(&BinaryForm::from_ints(&[0, 0, 0, 1]))
            .mul(&BinaryForm::from_ints(&[1, 1]));
        assert_eq!(p.num_distinct_roots(), Ok(3));
        // nonzero constants have no roots; the zero form is rejected
        assert_eq!(BinaryForm::from_ints(&[4]).num_distinct_roots(), Ok(0));
        assert_eq!(
            BinaryForm::zero(2).num_distinct_roots(),
            Err(P1Error::ZeroForm)
        );
    }

    #[test]
    fn distinct_roots_count_multiplicity_once() {
        // (s+t)^3 (s-2t)^2: two distinct roots of total degree 5
        let a = BinaryForm::from_ints(&[1, 1]);
        let b = BinaryForm::from_ints(&[1, -2]);
        let p = a.mul(&a).mul(&a).mul(&b).mul(&b);
        assert_eq!(p.num_distinct_roots(), Ok(2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            BinaryForm::from_ints(&[1, 0, -1]).to_string(),
            "s^2 - t^2"
        );
        assert_eq!(BinaryForm::from_ints(&[0, 2, 0]).to_string(), "2*s*t");
        assert_eq!(BinaryForm::zero(4).to_string(), "0");
        assert_eq!(
            BinaryForm::new(1, vec![rat(-1, 2), rat(1, 1)])
                .unwrap()
                .to_string(),
            "-1/2*s + t"
        );
    }
}
