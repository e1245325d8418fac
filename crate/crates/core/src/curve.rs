//! Castle curve models.
//!
//! Concrete models carry their affine rational points and the monomial basis
//! `x^lambda y^mu` of `L(inf Q)`, where `Q` is the unique point at infinity. The Suzuki
//! curve is only available at the level of its Weierstrass semigroup.
//!
//! Points are listed in lexicographic order of `(code(x), code(y))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{prime_power, Fe, Field};
use crate::semigroup::NumericalSemigroup;

/// Largest number of rational points a concrete model may have.
pub const MAX_POINTS: u64 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveKind {
    /// The affine line over GF(q); its codes are Reed-Solomon codes.
    RationalLine { q: u64 },
    /// `y^q + y = x^(q+1)` over GF(q^2).
    Hermitian { q: u64 },
    /// `x^((q^r-1)/(q-1)) = y^(q^(r-1)) + ... + y^q + y` over GF(q^r).
    NormTrace { q: u64, r: u32 },
    /// Suzuki curve over GF(q), `q = 2 q0^2`; semigroup level only.
    Suzuki { q0: u64 },
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveKind::RationalLine { q } => write!(f, "rational line q={q}"),
            CurveKind::Hermitian { q } => write!(f, "hermitian q={q}"),
            CurveKind::NormTrace { q, r } => write!(f, "norm-trace q={q} r={r}"),
            CurveKind::Suzuki { q0 } => write!(f, "suzuki q0={q0}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Point {
    pub x: Fe,
    pub y: Fe,
}

/// `x^lambda y^mu` with pole order `lambda v(x) + mu v(y)` at `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialFunction {
    pub lambda: u64,
    pub mu: u64,
    pub pole_order: u64,
}

#[derive(Debug, Clone)]
pub struct CurveModel {
    kind: CurveKind,
    field: Field,
    semigroup: NumericalSemigroup,
    n: u64,
    /// `(v(x), v(y))`; `v(y)` is unused on the line.
    poles: (u64, u64),
    points: Option<Vec<Point>>,
}

fn pow_u64(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::InvalidParameter(format!("{base}^{exp} overflows")))
}

fn checked_field(q: u64, degree: u32) -> Result<Field> {
    let order = pow_u64(q, degree)?;
    Field::with_order(order)
}

impl CurveModel {
    pub fn new(kind: CurveKind) -> Result<Self> {
        match kind {
            CurveKind::RationalLine { q } => Self::rational_line(q),
            CurveKind::Hermitian { q } => Self::hermitian(q),
            CurveKind::NormTrace { q, r } => Self::norm_trace(q, r),
            CurveKind::Suzuki { q0 } => Self::suzuki(q0),
        }
    }

    pub fn rational_line(q: u64) -> Result<Self> {
        let field = Field::with_order(q)?;
        if q > MAX_POINTS {
            return Err(Error::InvalidParameter(format!(
                "{q} points exceeds the limit of {MAX_POINTS}"
            )));
        }
        let points = field.elements().map(|x| Point { x, y: Fe::ZERO }).collect();
        Ok(CurveModel {
            kind: CurveKind::RationalLine { q },
            field,
            semigroup: NumericalSemigroup::naturals(),
            n: q,
            poles: (1, 0),
            points: Some(points),
        })
    }

    pub fn hermitian(q: u64) -> Result<Self> {
        let mut model = Self::norm_trace(q, 2)?;
        model.kind = CurveKind::Hermitian { q };
        Ok(model)
    }

    pub fn norm_trace(q: u64, r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "norm-trace needs r >= 2, got {r}"
            )));
        }
        let (_, s) = prime_power(q)?;
        let field = checked_field(q, r)?;
        let n = pow_u64(q, 2 * r - 1)?;
        if n > MAX_POINTS {
            return Err(Error::InvalidParameter(format!(
                "{n} points exceeds the limit of {MAX_POINTS}"
            )));
        }
        let a = pow_u64(q, r - 1)?;
        let b = (pow_u64(q, r)? - 1) / (q - 1);
        let semigroup = NumericalSemigroup::from_generators(&[a, b])?;

        let mut points = Vec::with_capacity(n as usize);
        for x in field.elements() {
            let norm = field.norm_to(x, s)?;
            for y in field.elements() {
                if field.trace_to(y, s)? == norm {
                    points.push(Point { x, y });
                }
            }
        }
        if points.len() as u64 != n {
            return Err(Error::InvalidParameter(format!(
                "found {} points, expected {n}",
                points.len()
            )));
        }
        Ok(CurveModel {
            kind: CurveKind::NormTrace { q, r },
            field,
            semigroup,
            n,
            poles: (a, b),
            points: Some(points),
        })
    }

    /// Semigroup-level Suzuki model: `H = <q, q+q0, q+2q0, q+2q0+1>`, `n = q^2`.
    pub fn suzuki(q0: u64) -> Result<Self> {
        if q0 < 2 || !q0.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "suzuki q0 must be a power of 2 (>= 2), got {q0}"
            )));
        }
        let q = 2 * q0 * q0;
        let field = Field::with_order(q)?;
        let semigroup =
            NumericalSemigroup::from_generators(&[q, q + q0, q + 2 * q0, q + 2 * q0 + 1])?;
        Ok(CurveModel {
            kind: CurveKind::Suzuki { q0 },
            field,
            semigroup,
            n: q * q,
            poles: (q, q + q0),
            points: None,
        })
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    /// Field of definition.
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_order(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn weierstrass_semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn genus(&self) -> u64 {
        self.semigroup.genus()
    }

    /// Number of affine rational points (the code length).
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn is_concrete(&self) -> bool {
        self.points.is_some()
    }

    pub fn points(&self) -> Result<&[Point]> {
        self.points.as_deref().ok_or(Error::SemigroupOnly)
    }

    /// The Castle conditions: symmetric semigroup and `n = q v_2`.
    pub fn check_castle(&self) -> Result<()> {
        if !self.semigroup.is_symmetric() {
            return Err(Error::NotCastle(format!(
                "{} is not symmetric",
                self.semigroup
            )));
        }
        let lewittes = self.field_order() * self.semigroup.multiplicity();
        if self.n != lewittes {
            return Err(Error::NotCastle(format!(
                "n = {} but q v_2 = {lewittes}",
                self.n
            )));
        }
        Ok(())
    }

    /// The monomial with pole order `m`, unique with `0 <= mu < v(x)`.
    pub fn monomial_for_pole(&self, m: u64) -> Result<MonomialFunction> {
        if !self.is_concrete() {
            return Err(Error::SemigroupOnly);
        }
        let (a, b) = self.poles;
        if a == 1 {
            return Ok(MonomialFunction {
                lambda: m,
                mu: 0,
                pole_order: m,
            });
        }
        let mu = (0..a)
            .find(|&mu| mu * b <= m && (m - mu * b).is_multiple_of(a))
            .ok_or(Error::NotInSemigroup(m))?;
        Ok(MonomialFunction {
            lambda: (m - mu * b) / a,
            mu,
            pole_order: m,
        })
    }

    pub fn evaluate(&self, f: &MonomialFunction, p: &Point) -> Fe {
        let fx = self
            .field
            .pow(p.x, f.lambda as i64)
            .expect("nonnegative exponent");
        let fy = self
            .field
            .pow(p.y, f.mu as i64)
            .expect("nonnegative exponent");
        self.field.mul(fx, fy)
    }

    /// `(f(P_1), ..., f(P_n))`.
    pub fn evaluate_all(&self, f: &MonomialFunction) -> Result<Vec<Fe>> {
        Ok(self.points()?.iter().map(|p| self.evaluate(f, p)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_two_points() {
        let c = CurveModel::hermitian(2).unwrap();
        let pts: Vec<(u32, u32)> = c.points().unwrap().iter().map(|p| (p.x.0, p.y.0)).collect();
        assert_eq!(
            pts,
            vec![
                (0, 0),
                (0, 1),
                (1, 2),
                (1, 3),
                (2, 2),
                (2, 3),
                (3, 2),
                (3, 3)
            ]
        );
        assert_eq!(c.weierstrass_semigroup().generators(), &[2, 3]);
        assert_eq!((c.genus(), c.n()), (1, 8));
        c.check_castle().unwrap();
    }

    #[test]
    fn points_satisfy_equations() {
        for (q, r) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 2), (2, 4), (5, 2)] {
            let c = CurveModel::norm_trace(q, r).unwrap();
            let f = c.field();
            let e_norm = ((q.pow(r) - 1) / (q - 1)) as i64;
            for p in c.points().unwrap() {
                let lhs = f.pow(p.x, e_norm).unwrap();
                let rhs = f.sum((0..r).map(|i| f.pow(p.y, q.pow(i) as i64).unwrap()));
                assert_eq!(lhs, rhs);
            }
            assert_eq!(
                c.n(),
                c.field_order() * c.weierstrass_semigroup().multiplicity()
            );
            c.check_castle().unwrap();
            let pts = c.points().unwrap();
            assert!(pts
                .windows(2)
                .all(|w| (w[0].x.0, w[0].y.0) < (w[1].x.0, w[1].y.0)));
        }
    }

    #[test]
    fn norm_trace_two_three() {
        let c = CurveModel::norm_trace(2, 3).unwrap();
        assert_eq!(c.n(), 32);
        assert_eq!(c.weierstrass_semigroup().generators(), &[4, 7]);
        assert_eq!(c.genus(), 9);
        // independent count over all 64 pairs
        let f = c.field();
        let count = f
            .elements()
            .flat_map(|x| f.elements().map(move |y| (x, y)))
            .filter(|&(x, y)| {
                let lhs = f.pow(x, 7).unwrap();
                let rhs = f.add(f.add(f.pow(y, 4).unwrap(), f.pow(y, 2).unwrap()), y);
                lhs == rhs
            })
            .count();
        assert_eq!(count, 32);
    }

    #[test]
    fn hermitian_fibers_have_q_points() {
        for q in [2u64, 3, 4] {
            let c = CurveModel::hermitian(q).unwrap();
            for a in c.field().elements() {
                let fiber = c.points().unwrap().iter().filter(|p| p.x == a).count();
                assert_eq!(fiber as u64, q);
            }
            assert_eq!(c.genus(), q * (q - 1) / 2);
        }
    }

    #[test]
    fn monomials() {
        let c = CurveModel::hermitian(2).unwrap();
        let f = c.monomial_for_pole(9).unwrap();
        assert_eq!((f.lambda, f.mu), (3, 1));
        let f = c.monomial_for_pole(0).unwrap();
        assert_eq!((f.lambda, f.mu), (0, 0));
        assert_eq!(c.monomial_for_pole(1), Err(Error::NotInSemigroup(1)));
        let c4 = CurveModel::hermitian(4).unwrap();
        let f = c4.monomial_for_pole(13).unwrap();
        assert_eq!((f.lambda, f.mu), (2, 1));

        let pts = c.points().unwrap();
        let xy = c.monomial_for_pole(5).unwrap();
        assert_eq!(c.evaluate(&xy, &pts[4]), Fe(3));
        let x3 = c.monomial_for_pole(6).unwrap();
        assert_eq!((x3.lambda, x3.mu), (3, 0));
        assert_eq!(c.evaluate(&x3, &pts[2]), Fe(1));
        let one = c.monomial_for_pole(0).unwrap();
        assert!(pts.iter().all(|p| c.evaluate(&one, p) == Fe::ONE));
    }

    #[test]
    fn monomial_bijection() {
        for kind in [
            CurveKind::Hermitian { q: 3 },
            CurveKind::NormTrace { q: 2, r: 3 },
            CurveKind::RationalLine { q: 8 },
        ] {
            let c = CurveModel::new(kind).unwrap();
            let (a, b) = c.poles;
            let mut seen = std::collections::HashSet::new();
            for m in c.weierstrass_semigroup().elements_up_to(200) {
                let f = c.monomial_for_pole(m).unwrap();
                assert_eq!(f.lambda * a + f.mu * b, m);
                assert!(f.mu < a);
                assert!(seen.insert((f.lambda, f.mu)));
            }
        }
    }

    #[test]
    fn suzuki_is_semigroup_only() {
        let c = CurveModel::suzuki(2).unwrap();
        assert_eq!(c.weierstrass_semigroup().generators(), &[8, 10, 12, 13]);
        assert_eq!((c.genus(), c.n()), (14, 64));
        assert_eq!(c.weierstrass_semigroup().lgm_bound(8).refined, 65);
        c.check_castle().unwrap();
        assert_eq!(c.points().unwrap_err(), Error::SemigroupOnly);
        assert_eq!(c.monomial_for_pole(8).unwrap_err(), Error::SemigroupOnly);
        let c = CurveModel::suzuki(4).unwrap();
        assert_eq!(c.weierstrass_semigroup().generators(), &[32, 36, 40, 41]);
        assert!(CurveModel::suzuki(3).is_err());
    }

    #[test]
    fn rational_line_and_limits() {
        let c = CurveModel::rational_line(4).unwrap();
        assert_eq!((c.n(), c.genus()), (4, 0));
        c.check_castle().unwrap();
        assert!(CurveModel::hermitian(7).is_err());
        assert!(CurveModel::hermitian(6).is_err());
        assert!(CurveModel::norm_trace(2, 1).is_err());
    }
}
