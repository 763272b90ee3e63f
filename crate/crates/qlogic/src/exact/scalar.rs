use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

/// A Gaussian rational: `re + im·i` with both parts exact rationals.
///
/// The field ℚ(i) is closed under addition, multiplication, division and
/// complex conjugation, which is all the lattice constructions need. Working
/// over it instead of floating point makes every subspace equality decidable.
///
/// `BigRational` keeps numerator and denominator coprime with a positive
/// denominator, so equality of scalars is plain structural equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexRational {
    re: BigRational,
    im: BigRational,
}

impl ComplexRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ComplexRational { re, im }
    }

    /// Purely real value from an integer.
    pub fn from_int(n: i64) -> Self {
        ComplexRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// Exact ratio `n/d` as a real scalar. Panics when `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        ComplexRational::new(
            BigRational::new(n.into(), d.into()),
            BigRational::zero(),
        )
    }

    /// `re + im·i` from integer pairs `(re_n, re_d, im_n, im_d)`.
    pub fn from_parts(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        assert!(re_d != 0 && im_d != 0, "zero denominator");
        ComplexRational::new(
            BigRational::new(re_n.into(), re_d.into()),
            BigRational::new(im_n.into(), im_d.into()),
        )
    }

    pub fn zero() -> Self {
        ComplexRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        ComplexRational::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ComplexRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexRational::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = re² + im², an exact non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero");
        ComplexRational::new(&self.re / &n, -&self.im / &n)
    }

    /// Approximate value for the floating-point side of the workbench.
    pub fn to_f64_parts(&self) -> (f64, f64) {
        fn approx(r: &BigRational) -> f64 {
            let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            n / d
        }
        (approx(&self.re), approx(&self.im))
    }
}

impl Add for &ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &ComplexRational {
    type Output = ComplexRational;
    fn div(self, rhs: &ComplexRational) -> ComplexRational {
        self * &rhs.recip()
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ComplexRational {
            type Output = ComplexRational;
            fn $method(self, rhs: ComplexRational) -> ComplexRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        -&self
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// Canonical text form: `re_n/re_d` with `±im_n/im_d i` appended when the
/// imaginary part is nonzero, e.g. `1/2-2/3i`.
impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.re)?;
        if !self.im.is_zero() {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}", sign)?;
            write_ratio(f, &self.im.abs())?;
            write!(f, "i")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parse error for scalar and vector literals.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid literal `{text}`: {reason}")]
pub struct LiteralError {
    pub text: String,
    pub reason: String,
}

fn literal_err(text: &str, reason: &str) -> LiteralError {
    LiteralError {
        text: text.to_string(),
        reason: reason.to_string(),
    }
}

/// Parse a rational like `-3/4` or the integer shorthand `-3`.
fn parse_ratio(s: &str) -> Result<BigRational, LiteralError> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n.trim()).map_err(|_| literal_err(s, "bad numerator"))?;
    let d = BigInt::from_str(d.trim()).map_err(|_| literal_err(s, "bad denominator"))?;
    if d.is_zero() {
        return Err(literal_err(s, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for ComplexRational {
    type Err = LiteralError;

    /// Accepts `re`, `re±im i`, `±im i` with rational or integer parts and
    /// insignificant whitespace, e.g. `1/1+0/1i`, `0/1-2/3i`, `2`, `-i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(literal_err(s, "empty scalar"));
        }
        if let Some(body) = compact.strip_suffix('i') {
            // Split at the last +/- that is not a leading sign: `a±bi`.
            let bytes = body.as_bytes();
            let mut split = None;
            for k in (1..bytes.len()).rev() {
                if bytes[k] == b'+' || bytes[k] == b'-' {
                    split = Some(k);
                    break;
                }
            }
            let (re_txt, im_txt) = match split {
                Some(k) => (&body[..k], &body[k..]),
                None => ("0", body),
            };
            let im_txt = match im_txt {
                "" | "+" => "1",
                "-" => "-1",
                other => other,
            };
            Ok(ComplexRational::new(parse_ratio(re_txt)?, parse_ratio(im_txt)?))
        } else {
            Ok(ComplexRational::new(
                parse_ratio(&compact)?,
                BigRational::zero(),
            ))
        }
    }
}
