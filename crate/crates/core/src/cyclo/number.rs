use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{cyclotomic_polynomial, euler_phi, lcm};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// An element of `Q(zeta_N)` in the power basis `1, zeta, ..., zeta^(phi(N)-1)`.
///
/// The coefficient vector is always reduced modulo the `N`-th cyclotomic
/// polynomial, so two values of the same conductor are equal exactly when
/// their coefficient vectors are. Values of different conductors are compared
/// after embedding both into the field of the least common multiple.
#[derive(Clone)]
pub struct CycNum {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero(conductor: u32) -> Self {
        let deg = euler_phi(conductor) as usize;
        CycNum {
            conductor,
            coeffs: vec![Rational::zero(); deg],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    pub fn from_int(conductor: u32, value: i64) -> Self {
        Self::from_rational(conductor, Rational::from_integer(BigInt::from(value)))
    }

    pub fn from_rational(conductor: u32, value: Rational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = value;
        z
    }

    /// Builds `sum coeff * zeta_N^k` over the given terms.
    pub fn from_powers(conductor: u32, terms: &[(i64, i64)]) -> Self {
        let n = conductor as i64;
        let mut dense = vec![Rational::zero(); conductor as usize];
        for &(c, k) in terms {
            dense[k.rem_euclid(n) as usize] += Rational::from_integer(BigInt::from(c));
        }
        Self::reduce(conductor, dense)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients in the power basis of `zeta_N`, lowest power first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Reduces a dense polynomial in `zeta_N` modulo `Phi_N`.
    fn reduce(conductor: u32, mut dense: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let deg = phi.len() - 1;
        if dense.len() < deg {
            dense.resize(deg, Rational::zero());
        }
        for i in (deg..dense.len()).rev() {
            if dense[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut dense[i]);
            for (j, &pj) in phi[..deg].iter().enumerate() {
                match pj {
                    0 => {}
                    1 => dense[i - deg + j] -= &c,
                    -1 => dense[i - deg + j] += &c,
                    _ => dense[i - deg + j] -= &c * Rational::from_integer(BigInt::from(pj)),
                }
            }
        }
        dense.truncate(deg);
        CycNum {
            conductor,
            coeffs: dense,
        }
    }

    /// Re-expresses `self` in `Q(zeta_M)`; `M` must be a multiple of the conductor.
    pub fn embed(&self, conductor: u32) -> CycNum {
        if conductor == self.conductor {
            return self.clone();
        }
        assert!(
            conductor.is_multiple_of(self.conductor),
            "cannot embed Q(zeta_{}) into Q(zeta_{})",
            self.conductor,
            conductor
        );
        let step = (conductor / self.conductor) as usize;
        let mut dense = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[i * step] = c.clone();
            }
        }
        Self::reduce(conductor, dense)
    }

    fn lift_pair(a: &CycNum, b: &CycNum) -> Option<(CycNum, CycNum)> {
        if a.conductor == b.conductor {
            None
        } else {
            let n = lcm(a.conductor, b.conductor);
            Some((a.embed(n), b.embed(n)))
        }
    }

    /// Complex conjugation, the automorphism `zeta -> zeta^-1`.
    pub fn conj(&self) -> CycNum {
        let n = self.conductor as usize;
        let mut dense = vec![Rational::zero(); n.max(self.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[(n - i) % n] += c;
            }
        }
        Self::reduce(self.conductor, dense)
    }

    pub fn scale(&self, q: &Rational) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn mul_same(&self, other: &CycNum) -> CycNum {
        if let Some(q) = other.as_rational() {
            return self.scale(&q);
        }
        if let Some(q) = self.as_rational() {
            return other.scale(&q);
        }
        let deg = self.coeffs.len();
        let mut dense = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.conductor, dense)
    }

    /// Multiplicative inverse, or `None` for zero.
    ///
    /// Solves `self * y = 1` as a linear system over `Q` in the power basis.
    pub fn inv(&self) -> Option<CycNum> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(CycNum::from_rational(self.conductor, q.recip()));
        }
        let deg = self.coeffs.len();
        // column j of the multiplication matrix is self * zeta^j
        let mut columns = Vec::with_capacity(deg);
        let mut col = self.clone();
        let zeta = root_of_unity(self.conductor, 1);
        for _ in 0..deg {
            columns.push(col.coeffs.clone());
            col = col.mul_same(&zeta);
        }
        // augmented rows: row i = [M_i0 .. M_i(deg-1) | delta_i0]
        let mut rows: Vec<Vec<Rational>> = (0..deg)
            .map(|i| {
                let mut r: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
                r.push(if i == 0 { Rational::one() } else { Rational::zero() });
                r
            })
            .collect();
        for c in 0..deg {
            let p = (c..deg).find(|&r| !rows[r][c].is_zero())?;
            rows.swap(c, p);
            let pivot = rows[c][c].recip();
            for x in rows[c].iter_mut() {
                *x *= &pivot;
            }
            let prow = rows[c].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&prow) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
        }
        Some(CycNum {
            conductor: self.conductor,
            coeffs: rows.into_iter().map(|mut r| r.pop().unwrap()).collect(),
        })
    }

    /// Floating-point value with `zeta_N = exp(2 pi i / N)`. Display only.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }
}

/// `zeta_N^k`, reduced. Negative `k` is taken modulo `N`.
pub fn root_of_unity(conductor: u32, k: i64) -> CycNum {
    CycNum::from_powers(conductor, &[(1, k)])
}

/// `2 cos(pi * numer / denom) = zeta_{2 denom}^numer + zeta_{2 denom}^-numer`.
pub fn two_cos(numer: i64, denom: u32) -> CycNum {
    let n = 2 * denom;
    CycNum::from_powers(n, &[(1, numer), (1, -numer)])
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        match CycNum::lift_pair(self, other) {
            None => self.coeffs == other.coeffs,
            Some((a, b)) => a.coeffs == b.coeffs,
        }
    }
}

impl Eq for CycNum {}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if let Some((a, b)) = CycNum::lift_pair(self, rhs) {
            return &a + &b;
        }
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        if let Some((a, b)) = CycNum::lift_pair(self, rhs) {
            return &a - &b;
        }
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        match CycNum::lift_pair(self, rhs) {
            None => self.mul_same(rhs),
            Some((a, b)) => a.mul_same(&b),
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        if self.conductor == rhs.conductor {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x += y;
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        let mut acc = CycNum::zero(1);
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[N={}]({})", self.conductor, self)
    }
}
