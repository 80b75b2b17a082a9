//! Exact arithmetic in the k-th cyclotomic field Q(q), q = e^{2πi/k}.
//!
//! Elements are stored as polynomials in q of degree < k (multiplication
//! reduces exponents mod k, since q^k = 1). Equality and the zero test are
//! decided exactly: a polynomial f represents zero iff Φ_k divides f over
//! the rationals, where Φ_k is the k-th cyclotomic polynomial. A floating
//! point evaluation is provided purely as a cross-check oracle.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational scalar, always in lowest terms with positive denominator
/// (guaranteed by the backing implementation).
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for small integers as rationals.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

fn divisors(k: usize) -> Vec<usize> {
    (1..=k).filter(|d| k.is_multiple_of(*d)).collect()
}

/// Exact division of integer polynomials, `a / b`, where `b` is monic.
/// Panics if the division leaves a remainder (cannot happen for products of
/// cyclotomic polynomials).
fn poly_div_exact(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    assert!(a.len() > db);
    let dq = a.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let c = a[i + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                a[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    assert!(a.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    q
}

fn phi_cache() -> &'static Mutex<HashMap<usize, &'static [BigInt]>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static [BigInt]>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The k-th cyclotomic polynomial Φ_k as integer coefficients in ascending
/// degree, computed by dividing x^k − 1 by Φ_d over all proper divisors d
/// of k. Results are cached for the lifetime of the process.
pub fn cyclotomic_poly(k: usize) -> Result<Vec<BigInt>> {
    Ok(cyclotomic_poly_cached(k)?.to_vec())
}

pub(crate) fn cyclotomic_poly_cached(k: usize) -> Result<&'static [BigInt]> {
    if k < 1 {
        return Err(Error::InvalidParameter(
            "cyclotomic polynomial order must be >= 1".into(),
        ));
    }
    if let Some(p) = phi_cache().lock().unwrap().get(&k) {
        return Ok(*p);
    }
    for d in divisors(k) {
        if phi_cache().lock().unwrap().contains_key(&d) {
            continue;
        }
        // x^d - 1
        let mut num = vec![BigInt::zero(); d + 1];
        num[0] = BigInt::from(-1);
        num[d] = BigInt::one();
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let phi_e = *phi_cache().lock().unwrap().get(&e).unwrap();
            num = poly_div_exact(num, phi_e);
        }
        let leaked: &'static [BigInt] = Box::leak(num.into_boxed_slice());
        phi_cache().lock().unwrap().insert(d, leaked);
    }
    Ok(phi_cache().lock().unwrap()[&k])
}

/// An exact element of the k-th cyclotomic field, stored as
/// Σ_{t=0}^{k−1} coeffs[t]·q^t with rational coefficients.
#[derive(Clone, Debug)]
pub struct CycNum {
    order: usize,
    coeffs: Vec<Rational>,
}

impl CycNum {
    /// The zero element of Q(q) for q a k-th root of unity.
    pub fn zero(k: usize) -> Self {
        assert!(k >= 1, "order must be >= 1");
        CycNum {
            order: k,
            coeffs: vec![Rational::zero(); k],
        }
    }

    /// The element 1.
    pub fn one(k: usize) -> Self {
        Self::from_rational(k, Rational::one())
    }

    /// A rational constant embedded in Q(q).
    pub fn from_rational(k: usize, r: Rational) -> Self {
        let mut c = Self::zero(k);
        c.coeffs[0] = r;
        c
    }

    /// The monomial q^t (t reduced mod k).
    pub fn root_power(k: usize, t: i64) -> Self {
        let mut c = Self::zero(k);
        let t = t.rem_euclid(k as i64) as usize;
        c.coeffs[t] = Rational::one();
        c
    }

    /// Builds an element from explicit coefficients (length must equal k).
    pub fn from_coeffs(k: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if k < 1 || coeffs.len() != k {
            return Err(Error::InvalidParameter(format!(
                "coefficient vector length {} does not match order {}",
                coeffs.len(),
                k
            )));
        }
        Ok(CycNum { order: k, coeffs })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check_order(&self, other: &CycNum) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Coefficientwise sum. Errors on order mismatch.
    pub fn add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &CycNum) -> Result<CycNum> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Polynomial product with exponents reduced mod k. Errors on order
    /// mismatch.
    pub fn mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        let k = self.order;
        let mut coeffs = vec![Rational::zero(); k];
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[(s + t) % k] += a * b;
            }
        }
        Ok(CycNum {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, r: &Rational) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugation: q^t ↦ q^{(k−t) mod k}. An involution.
    pub fn conj(&self) -> CycNum {
        let k = self.order;
        let mut coeffs = vec![Rational::zero(); k];
        for (t, c) in self.coeffs.iter().enumerate() {
            coeffs[(k - t) % k] = c.clone();
        }
        CycNum {
            order: self.order,
            coeffs,
        }
    }

    /// Remainder of the coefficient polynomial modulo Φ_k, padded to the
    /// degree of Φ_k. This is the canonical representation: it is all zeros
    /// iff the element is zero.
    pub fn canonical(&self) -> Vec<Rational> {
        let phi = cyclotomic_poly_cached(self.order).expect("order >= 1 by construction");
        let deg = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        // divide by the monic Φ_k, keeping only the remainder
        for i in (deg..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut rem[i], Rational::zero());
            for (j, pj) in phi.iter().enumerate().take(deg) {
                rem[i - deg + j] -= &c * pj;
            }
        }
        rem.truncate(deg);
        rem.resize(deg, Rational::zero());
        rem
    }

    /// True iff the element is exactly zero, i.e. Φ_k divides the
    /// coefficient polynomial over the rationals.
    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(|c| c.is_zero())
    }

    /// Some(r) iff the element equals the rational number r.
    pub fn as_rational(&self) -> Option<Rational> {
        let canon = self.canonical();
        if canon.iter().skip(1).all(|c| c.is_zero()) {
            Some(canon.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Floating-point evaluation Σ coeffs[t]·e^{2πi·t/k}, the numeric
    /// cross-check oracle.
    pub fn evaluate(&self) -> Complex64 {
        let k = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (t as f64) / k;
            acc += c.to_f64().expect("rational representable as f64")
                * Complex64::new(angle.cos(), angle.sin());
        }
        acc
    }
}

impl PartialEq for CycNum {
    /// Exact field equality for elements of the same declared order.
    /// Elements of different orders compare unequal.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }
}

impl Eq for CycNum {}

/// Hermitian inner product Σ_t conj(u_t)·v_t of two 3-vectors over the same
/// cyclotomic field.
pub fn inner_product(u: &[CycNum; 3], v: &[CycNum; 3]) -> Result<CycNum> {
    let k = u[0].order();
    let mut acc = CycNum::zero(k);
    for t in 0..3 {
        acc = acc.add(&u[t].conj().mul(&v[t])?)?;
    }
    Ok(acc)
}
