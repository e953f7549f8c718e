//! Homogeneous polynomials in several variables and the construction gluing
//! two hypersurfaces along a shared coordinate line.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::P1Error;

/// A homogeneous polynomial: sparse terms mapping exponent tuples (one entry
/// per variable) to nonzero rational coefficients. The zero polynomial keeps
/// its variable count and degree tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPolynomial {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiPolynomial {
    pub fn new<I>(num_vars: usize, degree: u32, terms: I) -> Result<Self, P1Error>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        let mut map: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != num_vars {
                return Err(P1Error::ExponentArity {
                    expected: num_vars,
                    found: exp.len(),
                });
            }
            if exp.iter().sum::<u32>() != degree {
                return Err(P1Error::NotHomogeneous);
            }
            let entry = map.entry(exp).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(MultiPolynomial {
            num_vars,
            degree,
            terms: map,
        })
    }

    pub fn zero(num_vars: usize, degree: u32) -> Self {
        MultiPolynomial {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultiPolynomial::zero(self.num_vars, self.degree);
        }
        MultiPolynomial {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a * c))
                .collect(),
        }
    }

    /// Sum of two polynomials on the same variables and degree.
    pub fn add(&self, other: &Self) -> Result<Self, P1Error> {
        if self.num_vars != other.num_vars {
            return Err(P1Error::ExponentArity {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        if self.degree != other.degree {
            return Err(P1Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultiPolynomial {
            num_vars: self.num_vars,
            degree: self.degree,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, P1Error> {
        self.add(&other.scale(&-BigRational::one()))
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms.iter().rev() {
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
            let constant = exp.iter().all(|&e| e == 0);
            if !mag.is_one() || constant {
                write!(f, "{mag}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                if e == 1 {
                    write!(f, "x{i}")?;
                } else {
                    write!(f, "x{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A linear inclusion of projective spaces sending the i-th source
/// coordinate to the `images[i]`-th target coordinate (and the missing
/// target coordinates to 0 on pullback).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateMap {
    source_vars: usize,
    target_vars: usize,
    images: Vec<usize>,
}

impl CoordinateMap {
    pub fn new(
        source_vars: usize,
        target_vars: usize,
        images: Vec<usize>,
    ) -> Result<Self, P1Error> {
        let mut seen = alloc::vec![false; target_vars];
        if images.len() != source_vars {
            return Err(P1Error::BadCoordinateMap);
        }
        for &i in &images {
            if i >= target_vars || seen[i] {
                return Err(P1Error::BadCoordinateMap);
            }
            seen[i] = true;
        }
        Ok(CoordinateMap {
            source_vars,
            target_vars,
            images,
        })
    }

    pub fn source_vars(&self) -> usize {
        self.source_vars
    }

    pub fn target_vars(&self) -> usize {
        self.target_vars
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Restriction of a polynomial on the target space to the image of this
    /// inclusion: terms touching a coordinate outside the image vanish.
    pub fn pullback(&self, f: &MultiPolynomial) -> Result<MultiPolynomial, P1Error> {
        if f.num_vars() != self.target_vars {
            return Err(P1Error::ExponentArity {
                expected: self.target_vars,
                found: f.num_vars(),
            });
        }
        let mut position = alloc::vec![None; self.target_vars];
        for (i, &img) in self.images.iter().enumerate() {
            position[img] = Some(i);
        }
        let mut terms = Vec::new();
        'term: for (exp, coeff) in f.terms() {
            let mut pulled = alloc::vec![0u32; self.source_vars];
            for (v, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match position[v] {
                    Some(i) => pulled[i] = e,
                    None => continue 'term,
                }
            }
            terms.push((pulled, coeff.clone()));
        }
        MultiPolynomial::new(self.source_vars, f.degree(), terms)
    }

    /// Relabels a polynomial on the source space along the inclusion.
    pub fn push(&self, f: &MultiPolynomial) -> Result<MultiPolynomial, P1Error> {
        if f.num_vars() != self.source_vars {
            return Err(P1Error::ExponentArity {
                expected: self.source_vars,
                found: f.num_vars(),
            });
        }
        let terms = f.terms().iter().map(|(exp, coeff)| {
            let mut pushed = alloc::vec![0u32; self.target_vars];
            for (i, &e) in exp.iter().enumerate() {
                pushed[self.images[i]] = e;
            }
            (pushed, coeff.clone())
        });
        MultiPolynomial::new(self.target_vars, f.degree(), terms)
    }
}

/// Result of gluing hypersurfaces {f1 = 0} in P^(n₁) and {f2 = 0} in P^(n₂)
/// along the line both contain in their first two coordinates: a hypersurface
/// {f = 0} in P^(n₁+n₂-1) restricting to f1 and (rescaled) f2 on two
/// complementary coordinate subspaces that meet exactly in that line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub f: MultiPolynomial,
    pub line_map: CoordinateMap,
    pub lambda1_map: CoordinateMap,
    pub lambda2_map: CoordinateMap,
}

pub fn glue_along_line(
    f1: &MultiPolynomial,
    f2: &MultiPolynomial,
) -> Result<Gluing, P1Error> {
    let n1 = match f1.num_vars() {
        v if v >= 2 => v - 1,
        v => return Err(P1Error::ExponentArity { expected: 2, found: v }),
    };
    let n2 = match f2.num_vars() {
        v if v >= 2 => v - 1,
        v => return Err(P1Error::ExponentArity { expected: 2, found: v }),
    };
    if f1.degree() != f2.degree() {
        return Err(P1Error::DegreeMismatch {
            expected: f1.degree(),
            found: f2.degree(),
        });
    }
    let total_vars = n1 + n2; // ambient dimension n1 + n2 - 1

    let line_in_1 = CoordinateMap::new(2, n1 + 1, alloc::vec![0, 1])?;
    let line_in_2 = CoordinateMap::new(2, n2 + 1, alloc::vec![0, 1])?;
    let g1 = line_in_1.pullback(f1)?;
    let g2 = line_in_2.pullback(f2)?;
    if g1.is_zero() || g2.is_zero() {
        return Err(P1Error::ZeroLineRestriction);
    }
    // rescale f2 so both hypersurfaces cut the line in the same divisor
    let (lead_exp, lead_coeff) = g2.terms().iter().next().expect("nonzero");
    let scale = g1.coefficient(lead_exp) / lead_coeff;
    if g1 != g2.scale(&scale) {
        return Err(P1Error::NonProportionalRestrictions);
    }
    let f2_scaled = f2.scale(&scale);

    let lambda1_map = CoordinateMap::new(n1 + 1, total_vars, (0..=n1).collect())?;
    let mut images2 = alloc::vec![0, 1];
    images2.extend(n1 + 1..total_vars);
    let lambda2_map = CoordinateMap::new(n2 + 1, total_vars, images2)?;
    let line_map = CoordinateMap::new(2, total_vars, alloc::vec![0, 1])?;

    let f = lambda1_map
        .push(f1)?
        .add(&lambda2_map.push(&f2_scaled)?)?
        .sub(&line_map.push(&g1)?)?;

    // the construction is only correct if the two pieces and the line are
    // recovered exactly
    assert_eq!(lambda1_map.pullback(&f)?, *f1);
    assert_eq!(lambda2_map.pullback(&f)?, f2_scaled);
    assert_eq!(line_map.pullback(&f)?, g1);

    Ok(Gluing {
        f,
        line_map,
        lambda1_map,
        lambda2_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn poly(num_vars: usize, degree: u32, terms: &[(&[u32], i64)]) -> MultiPolynomial {
        MultiPolynomial::new(
            num_vars,
            degree,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), rat(*c)))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(MultiPolynomial::new(3, 2, vec![(vec![1, 1], rat(1))]).is_err());
        assert_eq!(
            MultiPolynomial::new(2, 2, vec![(vec![1, 0], rat(1))]),
            Err(P1Error::NotHomogeneous)
        );
        // like terms merge, cancellations drop out
        let p = MultiPolynomial::new(
            2,
            2,
            vec![
                (vec![1, 1], rat(2)),
                (vec![1, 1], rat(-2)),
                (vec![2, 0], rat(1)),
            ],
        )
        .unwrap();
        assert_eq!(p.terms().len(), 1);
        assert!(!p.is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = poly(2, 2, &[(&[2, 0], 1), (&[1, 1], 3)]);
        let b = poly(2, 2, &[(&[1, 1], -3), (&[0, 2], 5)]);
        let s = a.add(&b).unwrap();
        assert_eq!(s, poly(2, 2, &[(&[2, 0], 1), (&[0, 2], 5)]));
        assert!(a.sub(&a).unwrap().is_zero());
        assert!(a.add(&poly(2, 3, &[(&[3, 0], 1)])).is_err());
        assert!(a.add(&poly(3, 2, &[(&[2, 0, 0], 1)])).is_err());
    }

    #[test]
    fn coordinate_map_validation() {
        assert!(CoordinateMap::new(2, 4, vec![0, 1]).is_ok());
        assert!(CoordinateMap::new(2, 4, vec![0, 4]).is_err());
        assert!(CoordinateMap::new(2, 4, vec![1, 1]).is_err());
        assert!(CoordinateMap::new(3, 4, vec![0, 1]).is_err());
    }

    #[test]
    fn pullback_kills_off_image_terms() {
        let f = poly(3, 2, &[(&[2, 0, 0], 1), (&[0, 1, 1], 4), (&[1, 1, 0], 2)]);
        let m = CoordinateMap::new(2, 3, vec![0, 1]).unwrap();
        let pulled = m.pullback(&f).unwrap();
        assert_eq!(pulled, poly(2, 2, &[(&[2, 0], 1), (&[1, 1], 2)]));
        // push then pull is the identity
        let g = poly(2, 2, &[(&[2, 0], 7), (&[1, 1], -1)]);
        assert_eq!(m.pullback(&m.push(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn glue_cubic_surfaces() {
        // f1 = x0^3 + x1^3 + x2 x0^2, f2 = y0^3 + y1^3 + y2 y1^2
        let f1 = poly(3, 3, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[2, 0, 1], 1)]);
        let f2 = poly(3, 3, &[(&[3, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 2, 1], 1)]);
        let glued = glue_along_line(&f1, &f2).unwrap();
        let expected = poly(
            4,
            3,
            &[
                (&[3, 0, 0, 0], 1),
                (&[0, 3, 0, 0], 1),
                (&[2, 0, 1, 0], 1),
                (&[0, 2, 0, 1], 1),
            ],
        );
        assert_eq!(glued.f, expected);
        assert_eq!(glued.f.num_vars(), 4);
        assert_eq!(glued.lambda1_map.images(), &[0, 1, 2]);
        assert_eq!(glued.lambda2_map.images(), &[0, 1, 3]);
        assert_eq!(glued.line_map.images(), &[0, 1]);
    }

    #[test]
    fn glue_degenerate_binary_pair() {
        // both pieces are the same binary form; the glued ambient is the line
        // P^1 itself
        for d in [2u32, 5] {
            let f = poly(2, d, &[(&[d, 0], 1), (&[0, d], 1)]);
            let glued = glue_along_line(&f, &f).unwrap();
            assert_eq!(glued.f, f);
        }
    }

    #[test]
    fn glue_rescales_second_piece() {
        let f1 = poly(3, 2, &[(&[2, 0, 0], 2), (&[1, 0, 1], 1)]);
        let f2 = poly(3, 2, &[(&[2, 0, 0], 6), (&[0, 1, 1], 3)]);
        let glued = glue_along_line(&f1, &f2).unwrap();
        // the second piece enters scaled by 1/3
        assert_eq!(
            glued.lambda2_map.pullback(&glued.f).unwrap(),
            f2.scale(&BigRational::new(BigInt::from(1), BigInt::from(3)))
        );
        assert_eq!(glued.lambda1_map.pullback(&glued.f).unwrap(), f1);
    }

    #[test]
    fn glue_rejects_bad_inputs() {
        let f1 = poly(3, 3, &[(&[3, 0, 0], 1)]);
        let f2 = poly(3, 3, &[(&[0, 3, 0], 1)]);
        assert_eq!(
            glue_along_line(&f1, &f2),
            Err(P1Error::NonProportionalRestrictions)
        );
        // line restriction zero: every term of f1 touches x2
        let f1 = poly(3, 3, &[(&[2, 0, 1], 1), (&[0, 0, 3], 1)]);
        let f2 = poly(3, 3, &[(&[3, 0, 0], 1)]);
        assert_eq!(glue_along_line(&f1, &f2), Err(P1Error::ZeroLineRestriction));
        // degree mismatch
        let f1 = poly(3, 2, &[(&[2, 0, 0], 1)]);
        let f2 = poly(3, 3, &[(&[3, 0, 0], 1)]);
        assert!(matches!(
            glue_along_line(&f1, &f2),
            Err(P1Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn display_polynomials() {
        let p = poly(3, 2, &[(&[2, 0, 0], 1), (&[1, 1, 0], -3), (&[0, 1, 1], 1)]);
        assert_eq!(p.to_string(), "x0^2 - 3*x0*x1 + x1*x2");
        assert_eq!(MultiPolynomial::zero(2, 4).to_string(), "0");
    }

    #[test]
    fn glue_with_mixed_line_terms() {
        // restrictions share the mixed monomial x0 x1^2
        let f1 = poly(
            3,
            3,
            &[(&[3, 0, 0], 1), (&[1, 2, 0], 2), (&[0, 0, 3], 1)],
        );
        let f2 = poly(
            4,
            3,
            &[(&[3, 0, 0, 0], 5), (&[1, 2, 0, 0], 10), (&[0, 1, 1, 1], 7)],
        );
        let glued = glue_along_line(&f1, &f2).unwrap();
        assert_eq!(glued.f.num_vars(), 5);
        assert_eq!(glued.lambda2_map.images(), &[0, 1, 3, 4]);
        assert_eq!(glued.lambda1_map.pullback(&glued.f).unwrap(), f1);
    }
}
