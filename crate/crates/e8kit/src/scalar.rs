//! Complex scalars in two backends.
//!
//! [`Cq`] is an exact complex rational whose parts use machine integers until
//! they overflow and big integers afterwards. `Complex64` is the approximate
//! backend used for transcendental flows.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arithmetic shared by both backends.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// True for the rational backend.
    const EXACT: bool;
    /// Short backend name used in reports.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit.
    fn i() -> Self;
    fn from_i64(n: i64) -> Self;
    /// `n / d`; panics when `d == 0`.
    fn ratio(n: i64, d: i64) -> Self;
    /// Conversion from an exact value (rounded in the approximate backend).
    fn from_cq(q: &Cq) -> Self;
    /// Exact zero test; in the approximate backend this is `== 0.0`.
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Real part as a double.
    fn re_f64(&self) -> f64;
    /// Imaginary part as a double.
    fn im_f64(&self) -> f64;
    /// Real part as a scalar of the same backend.
    fn real_part(&self) -> Self;
    /// Imaginary part as a (real) scalar of the same backend.
    fn imag_part(&self) -> Self;

    fn abs_f64(&self) -> f64 {
        self.re_f64().hypot(self.im_f64())
    }

    /// Equality up to `tol` in the approximate backend, exact otherwise.
    fn near(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            (self.clone() - other).abs_f64() <= tol
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other
    }

    fn scale_i(&self, n: i64) -> Self {
        self.clone() * Self::from_i64(n)
    }

    fn half(&self) -> Self {
        self.clone() * Self::ratio(1, 2)
    }

    fn is_real(&self) -> bool {
        self.imag_part().is_zero()
    }
}

/// Rational number with a machine-word fast path.
///
/// Invariant: `Small(n, d)` has `d > 0`, `gcd(n, d) = 1` and `n != i64::MIN`;
/// `Big` holds only values that do not fit `Small`. Both forms are therefore
/// canonical and structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Q {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Q {
    pub const ZERO: Q = Q::Small(0, 1);
    pub const ONE: Q = Q::Small(1, 1);

    pub fn new(n: i64, d: i64) -> Q {
        assert!(d != 0, "zero denominator");
        Q::from_i128(n as i128, d as i128)
    }

    pub fn int(n: i64) -> Q {
        if n == i64::MIN {
            Q::Big(Box::new(BigRational::from_integer(BigInt::from(n))))
        } else {
            Q::Small(n, 1)
        }
    }

    fn from_i128(mut n: i128, mut d: i128) -> Q {
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Q::ZERO;
        }
        let g = n.gcd(&d);
        if g != 1 {
            n /= g;
            d /= g;
        }
        if n > i64::MIN as i128 && n <= i64::MAX as i128 && d <= i64::MAX as i128 {
            Q::Small(n as i64, d as i64)
        } else {
            Q::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn from_big(r: BigRational) -> Q {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Q::Small(n, d);
            }
        }
        Q::Big(Box::new(r))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Q::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Q::Small(n, d) => *n as f64 / *d as f64,
            Q::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Q::Small(n, _) => n.signum() as i32,
            Q::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn recip(&self) -> Option<Q> {
        match self {
            Q::Small(0, _) => None,
            Q::Small(n, d) => Some(Q::from_i128(*d as i128, *n as i128)),
            Q::Big(b) => Some(Q::from_big(b.recip())),
        }
    }

    /// Parses `"n"` or `"n/d"`.
    pub fn parse(s: &str) -> Option<Q> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(Q::from_big(BigRational::new(n, d)))
            }
            None => {
                let n: BigInt = s.parse().ok()?;
                Some(Q::from_big(BigRational::from_integer(n)))
            }
        }
    }
}

impl Default for Q {
    fn default() -> Self {
        Q::ZERO
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(n, 1) => write!(f, "{n}"),
            Q::Small(n, d) => write!(f, "{n}/{d}"),
            Q::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128))),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

fn q_add(x: &Q, y: &Q) -> Q {
    match (x, y) {
        (Q::Small(0, _), _) => y.clone(),
        (_, Q::Small(0, _)) => x.clone(),
        (Q::Small(a, b), Q::Small(c, d)) => {
            if b == d {
                if *b == 1 {
                    return match a.checked_add(*c) {
                        Some(s) if s != i64::MIN => Q::Small(s, 1),
                        _ => Q::from_i128(*a as i128 + *c as i128, 1),
                    };
                }
                Q::from_i128(*a as i128 + *c as i128, *b as i128)
            } else {
                let n = (*a as i128) * (*d as i128) + (*c as i128) * (*b as i128);
                Q::from_i128(n, (*b as i128) * (*d as i128))
            }
        }
        _ => Q::from_big(x.to_big() + y.to_big()),
    }
}

fn q_mul(x: &Q, y: &Q) -> Q {
    match (x, y) {
        (Q::Small(0, _), _) | (_, Q::Small(0, _)) => Q::ZERO,
        (Q::Small(1, 1), _) => y.clone(),
        (_, Q::Small(1, 1)) => x.clone(),
        (Q::Small(a, b), Q::Small(c, d)) => {
            let g1 = a.gcd(d);
            let g2 = c.gcd(b);
            let n = (*a / g1) as i128 * (*c / g2) as i128;
            let m = (*b / g2) as i128 * (*d / g1) as i128;
            if n > i64::MIN as i128 && n <= i64::MAX as i128 && m <= i64::MAX as i128 {
                Q::Small(n as i64, m as i64)
            } else {
                Q::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(m))))
            }
        }
        _ => Q::from_big(x.to_big() * y.to_big()),
    }
}

fn q_neg(x: &Q) -> Q {
    match x {
        Q::Small(n, d) => Q::Small(-n, *d),
        Q::Big(b) => Q::from_big(-(**b).clone()),
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, o: Q) -> Q {
        q_add(&self, &o)
    }
}
impl<'a> Add<&'a Q> for Q {
    type Output = Q;
    fn add(self, o: &'a Q) -> Q {
        q_add(&self, o)
    }
}
impl Sub for Q {
    type Output = Q;
    fn sub(self, o: Q) -> Q {
        q_add(&self, &q_neg(&o))
    }
}
impl<'a> Sub<&'a Q> for Q {
    type Output = Q;
    fn sub(self, o: &'a Q) -> Q {
        q_add(&self, &q_neg(o))
    }
}
impl Mul for Q {
    type Output = Q;
    fn mul(self, o: Q) -> Q {
        q_mul(&self, &o)
    }
}
impl<'a> Mul<&'a Q> for Q {
    type Output = Q;
    fn mul(self, o: &'a Q) -> Q {
        q_mul(&self, o)
    }
}
impl Div for Q {
    type Output = Q;
    fn div(self, o: Q) -> Q {
        q_mul(&self, &o.recip().expect("division by zero"))
    }
}
impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        q_neg(&self)
    }
}

/// Exact complex rational `re + i im`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cq {
    pub re: Q,
    pub im: Q,
}

impl Cq {
    pub const ZERO: Cq = Cq { re: Q::ZERO, im: Q::ZERO };

    pub fn new(re: Q, im: Q) -> Cq {
        Cq { re, im }
    }

    pub fn real(re: Q) -> Cq {
        Cq { re, im: Q::ZERO }
    }

    /// Canonical text form, e.g. `"3/2"`, `"-i"`, `"1/2+3i"`.
    pub fn to_text(&self) -> String {
        format!("{self}")
    }

    /// Inverse of [`Cq::to_text`] for the forms `a`, `bi`, `a+bi`, `a-bi`.
    pub fn parse(s: &str) -> Option<Cq> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        if let Some(body) = s.strip_suffix('i') {
            // split at the last sign that is not the leading one
            let split = body
                .char_indices()
                .skip(1)
                .filter(|(_, c)| *c == '+' || *c == '-')
                .map(|(k, _)| k)
                .last();
            let (re, im) = match split {
                Some(k) if !body[..k].ends_with('/') => (&body[..k], &body[k..]),
                _ => ("0", body),
            };
            let im = match im {
                "" | "+" => Q::ONE,
                "-" => Q::int(-1),
                t => Q::parse(t.trim_start_matches('+'))?,
            };
            Some(Cq::new(Q::parse(re)?, im))
        } else {
            Some(Cq::real(Q::parse(&s)?))
        }
    }
}

impl fmt::Display for Cq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_text = |q: &Q| match q {
            Q::Small(1, 1) => String::new(),
            Q::Small(-1, 1) => "-".to_string(),
            q => q.to_string(),
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", im_text(&self.im)),
            (false, false) => {
                let t = im_text(&self.im);
                if self.im.signum() < 0 {
                    write!(f, "{}{}i", self.re, t)
                } else {
                    write!(f, "{}+{}i", self.re, t)
                }
            }
        }
    }
}

impl fmt::Debug for Cq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn c_mul(x: &Cq, y: &Cq) -> Cq {
    if x.im.is_zero() {
        if y.im.is_zero() {
            return Cq::real(q_mul(&x.re, &y.re));
        }
        return Cq::new(q_mul(&x.re, &y.re), q_mul(&x.re, &y.im));
    }
    if y.im.is_zero() {
        return Cq::new(q_mul(&x.re, &y.re), q_mul(&x.im, &y.re));
    }
    if x.re.is_zero() && y.re.is_zero() {
        return Cq::real(q_neg(&q_mul(&x.im, &y.im)));
    }
    let re = q_add(&q_mul(&x.re, &y.re), &q_neg(&q_mul(&x.im, &y.im)));
    let im = q_add(&q_mul(&x.re, &y.im), &q_mul(&x.im, &y.re));
    Cq::new(re, im)
}

impl Add for Cq {
    type Output = Cq;
    fn add(self, o: Cq) -> Cq {
        Cq::new(q_add(&self.re, &o.re), q_add(&self.im, &o.im))
    }
}
impl<'a> Add<&'a Cq> for Cq {
    type Output = Cq;
    fn add(self, o: &'a Cq) -> Cq {
        Cq::new(q_add(&self.re, &o.re), q_add(&self.im, &o.im))
    }
}
impl Sub for Cq {
    type Output = Cq;
    fn sub(self, o: Cq) -> Cq {
        self - &o
    }
}
impl<'a> Sub<&'a Cq> for Cq {
    type Output = Cq;
    fn sub(self, o: &'a Cq) -> Cq {
        Cq::new(q_add(&self.re, &q_neg(&o.re)), q_add(&self.im, &q_neg(&o.im)))
    }
}
impl Mul for Cq {
    type Output = Cq;
    fn mul(self, o: Cq) -> Cq {
        c_mul(&self, &o)
    }
}
impl<'a> Mul<&'a Cq> for Cq {
    type Output = Cq;
    fn mul(self, o: &'a Cq) -> Cq {
        c_mul(&self, o)
    }
}
impl Neg for Cq {
    type Output = Cq;
    fn neg(self) -> Cq {
        Cq::new(q_neg(&self.re), q_neg(&self.im))
    }
}
impl AddAssign for Cq {
    fn add_assign(&mut self, o: Cq) {
        *self = std::mem::take(self) + &o;
    }
}
impl<'a> AddAssign<&'a Cq> for Cq {
    fn add_assign(&mut self, o: &'a Cq) {
        *self = std::mem::take(self) + o;
    }
}
impl SubAssign for Cq {
    fn sub_assign(&mut self, o: Cq) {
        *self = std::mem::take(self) - &o;
    }
}
impl<'a> SubAssign<&'a Cq> for Cq {
    fn sub_assign(&mut self, o: &'a Cq) {
        *self = std::mem::take(self) - o;
    }
}

impl Scalar for Cq {
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn zero() -> Self {
        Cq::ZERO
    }
    fn one() -> Self {
        Cq::real(Q::ONE)
    }
    fn i() -> Self {
        Cq::new(Q::ZERO, Q::ONE)
    }
    fn from_i64(n: i64) -> Self {
        Cq::real(Q::int(n))
    }
    fn ratio(n: i64, d: i64) -> Self {
        Cq::real(Q::new(n, d))
    }
    fn from_cq(q: &Cq) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn conj(&self) -> Self {
        Cq::new(self.re.clone(), q_neg(&self.im))
    }
    fn inv(&self) -> Option<Self> {
        if self.im.is_zero() {
            return self.re.recip().map(Cq::real);
        }
        let n = q_add(&q_mul(&self.re, &self.re), &q_mul(&self.im, &self.im));
        let r = n.recip()?;
        Some(Cq::new(q_mul(&self.re, &r), q_neg(&q_mul(&self.im, &r))))
    }
    fn re_f64(&self) -> f64 {
        self.re.to_f64()
    }
    fn im_f64(&self) -> f64 {
        self.im.to_f64()
    }
    fn real_part(&self) -> Self {
        Cq::real(self.re.clone())
    }
    fn imag_part(&self) -> Self {
        Cq::real(self.im.clone())
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;
    const NAME: &'static str = "approx";

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Complex64::new(n as f64 / d as f64, 0.0)
    }
    fn from_cq(q: &Cq) -> Self {
        Complex64::new(q.re.to_f64(), q.im.to_f64())
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn re_f64(&self) -> f64 {
        self.re
    }
    fn im_f64(&self) -> f64 {
        self.im
    }
    fn real_part(&self) -> Self {
        Complex64::new(self.re, 0.0)
    }
    fn imag_part(&self) -> Self {
        Complex64::new(self.im, 0.0)
    }
}

/// Convenience constructor for exact constants.
pub fn cq(re: i64, im: i64) -> Cq {
    Cq::new(Q::int(re), Q::int(im))
}

/// Exact complex constant `(a + b i) / d`.
pub fn cq_frac(a: i64, b: i64, d: i64) -> Cq {
    Cq::new(Q::new(a, d), Q::new(b, d))
}

/// `a / b` in any backend; panics on a zero divisor.
pub fn div<S: Scalar>(a: &S, b: &S) -> S {
    a.clone() * &b.inv().expect("division by zero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_path_promotes_to_big_on_overflow() {
        let big = Q::int(i64::MAX) * Q::int(4);
        assert!(matches!(big, Q::Big(_)));
        let back = big * Q::new(1, 4);
        assert_eq!(back, Q::int(i64::MAX));
        assert!(matches!(back, Q::Small(..)));
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(Q::new(2, -4), Q::new(-1, 2));
        assert_eq!(Q::new(3, 6) + Q::new(1, 2), Q::ONE);
        assert_eq!(Q::new(0, 5), Q::ZERO);
    }

    #[test]
    fn complex_text_roundtrip() {
        for s in ["0", "3/2", "-i", "i", "1/2+3i", "-1/2-5/3i", "7-i", "2/3i"] {
            let c = Cq::parse(s).unwrap();
            assert_eq!(Cq::parse(&c.to_text()).unwrap(), c, "{s}");
        }
        assert_eq!(Cq::parse("1/2+3i").unwrap(), cq_frac(1, 6, 2));
    }

    #[test]
    fn complex_inverse() {
        let z = cq(3, -4);
        assert_eq!(z.clone() * z.inv().unwrap(), Cq::one());
        assert_eq!(Cq::i() * Cq::i(), Cq::from_i64(-1));
    }
}
