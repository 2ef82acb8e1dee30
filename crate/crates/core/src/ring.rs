//! Exact coefficient rings and their scalars.
//!
//! Three commutative rings are supported: the integers ℤ, the rationals ℚ, and the
//! residue rings ℤ/n for n ≥ 2 (n need not be prime). A [`RingDesc`] is a small
//! copyable tag describing which ring is in play; a [`Scalar`] is one element.
//! All arithmetic goes through the ring tag so that residues stay reduced to the
//! range `[0, n)` and fractions stay in lowest terms with positive denominator.
//!
//! Mixing scalars from different rings is a programming error and panics; failure
//! modes that depend on the *values* involved (inverting a non-unit, parsing
//! malformed text) are reported through [`RingError`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors arising from ring arithmetic and scalar/ring parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    /// An inverse was requested for an element that is not a unit.
    #[error("{value} is not a unit in {ring}")]
    NotAUnit {
        /// The offending element, formatted canonically.
        value: String,
        /// The ring in which inversion was attempted.
        ring: RingDesc,
    },
    /// A scalar string could not be parsed as an element of the ring.
    #[error("cannot parse {text:?} as an element of {ring}")]
    BadScalar {
        /// The rejected input text.
        text: String,
        /// The ring the text was parsed against.
        ring: RingDesc,
    },
    /// A ring name could not be parsed.
    #[error("cannot parse {0:?} as a ring (expected \"Z\", \"Q\", or \"Z/<n>\" with n >= 2)")]
    BadRing(String),
    /// A residue ring was requested with modulus 0 or 1.
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
}

/// A tag identifying one of the supported exact coefficient rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingDesc {
    /// The ring of integers ℤ.
    Integers,
    /// The field of rational numbers ℚ.
    Rationals,
    /// The residue ring ℤ/n, n ≥ 2. The modulus may be composite.
    IntegersMod(u64),
}

/// One element of a ring described by a [`RingDesc`].
///
/// The variant must match the ring: `Int` for ℤ, `Rat` for ℚ, `Mod` (reduced to
/// `[0, n)`) for ℤ/n. Use the [`RingDesc`] methods to create and combine scalars;
/// they preserve these representation invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// An integer.
    Int(BigInt),
    /// A rational number in lowest terms with positive denominator.
    Rat(BigRational),
    /// A residue modulo the ring's n, in the range `[0, n)`.
    Mod(u64),
}

impl RingDesc {
    /// Builds a residue-ring tag, rejecting moduli below 2.
    pub fn integers_mod(n: u64) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::BadModulus(n));
        }
        Ok(RingDesc::IntegersMod(n))
    }

    /// The additive identity.
    pub fn zero(self) -> Scalar {
        match self {
            RingDesc::Integers => Scalar::Int(BigInt::zero()),
            RingDesc::Rationals => Scalar::Rat(BigRational::zero()),
            RingDesc::IntegersMod(_) => Scalar::Mod(0),
        }
    }

    /// The multiplicative identity.
    pub fn one(self) -> Scalar {
        match self {
            RingDesc::Integers => Scalar::Int(BigInt::one()),
            RingDesc::Rationals => Scalar::Rat(BigRational::one()),
            RingDesc::IntegersMod(n) => Scalar::Mod(1 % n),
        }
    }

    /// Embeds a machine integer into the ring.
    pub fn from_i64(self, x: i64) -> Scalar {
        match self {
            RingDesc::Integers => Scalar::Int(BigInt::from(x)),
            RingDesc::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(x))),
            RingDesc::IntegersMod(n) => {
                let r = BigInt::from(x).mod_floor(&BigInt::from(n));
                Scalar::Mod(u64::try_from(r).expect("mod_floor lands in [0, n)"))
            }
        }
    }

    /// True if the scalar's representation belongs to this ring.
    pub fn contains(self, x: &Scalar) -> bool {
        match (self, x) {
            (RingDesc::Integers, Scalar::Int(_)) => true,
            (RingDesc::Rationals, Scalar::Rat(_)) => true,
            (RingDesc::IntegersMod(n), Scalar::Mod(v)) => *v < n,
            _ => false,
        }
    }

    fn expect_member(self, x: &Scalar) -> &Scalar {
        assert!(
            self.contains(x),
            "scalar {x:?} does not belong to ring {self}"
        );
        x
    }

    /// Adds two scalars of this ring.
    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.expect_member(a), self.expect_member(b)) {
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                let n = self.modulus();
                Scalar::Mod(((u128::from(*x) + u128::from(*y)) % u128::from(n)) as u64)
            }
            _ => unreachable!("expect_member enforces matching variants"),
        }
    }

    /// Subtracts `b` from `a`.
    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    /// Multiplies two scalars of this ring.
    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.expect_member(a), self.expect_member(b)) {
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                let n = self.modulus();
                Scalar::Mod(((u128::from(*x) * u128::from(*y)) % u128::from(n)) as u64)
            }
            _ => unreachable!("expect_member enforces matching variants"),
        }
    }

    /// Negates a scalar of this ring.
    pub fn neg(self, a: &Scalar) -> Scalar {
        match self.expect_member(a) {
            Scalar::Int(x) => Scalar::Int(-x),
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Mod(x) => {
                let n = self.modulus();
                Scalar::Mod((n - x) % n)
            }
        }
    }

    /// True if the scalar is the additive identity.
    pub fn is_zero(self, a: &Scalar) -> bool {
        match self.expect_member(a) {
            Scalar::Int(x) => x.is_zero(),
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    /// True if the scalar is the multiplicative identity.
    pub fn is_one(self, a: &Scalar) -> bool {
        *a == self.one()
    }

    /// True if the scalar has a multiplicative inverse in this ring.
    pub fn is_unit(self, a: &Scalar) -> bool {
        match self.expect_member(a) {
            Scalar::Int(x) => x.abs().is_one(),
            Scalar::Rat(x) => !x.is_zero(),
            Scalar::Mod(x) => x.gcd(&self.modulus()) == 1,
        }
    }

    /// The multiplicative inverse, or [`RingError::NotAUnit`].
    pub fn inv(self, a: &Scalar) -> Result<Scalar, RingError> {
        if !self.is_unit(a) {
            return Err(RingError::NotAUnit {
                value: self.format_scalar(a),
                ring: self,
            });
        }
        Ok(match self.expect_member(a) {
            // The only units of ℤ are ±1, each its own inverse.
            Scalar::Int(x) => Scalar::Int(x.clone()),
            Scalar::Rat(x) => Scalar::Rat(x.recip()),
            Scalar::Mod(x) => {
                let n = self.modulus();
                let e = i128::from(*x).extended_gcd(&i128::from(n));
                Scalar::Mod(e.x.rem_euclid(i128::from(n)) as u64)
            }
        })
    }

    /// Parses a scalar from its canonical (or any equivalent) text form.
    ///
    /// ℤ accepts an optionally signed decimal integer; ℚ additionally accepts
    /// `numerator/denominator`; ℤ/n accepts any signed decimal integer and reduces
    /// it modulo n.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, RingError> {
        let bad = || RingError::BadScalar {
            text: text.to_owned(),
            ring: self,
        };
        match self {
            RingDesc::Integers => Ok(Scalar::Int(BigInt::from_str(text).map_err(|_| bad())?)),
            RingDesc::Rationals => match text.split_once('/') {
                None => Ok(Scalar::Rat(BigRational::from_integer(
                    BigInt::from_str(text).map_err(|_| bad())?,
                ))),
                Some((num, den)) => {
                    let n = BigInt::from_str(num).map_err(|_| bad())?;
                    let d = BigInt::from_str(den).map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rat(BigRational::new(n, d)))
                }
            },
            RingDesc::IntegersMod(n) => {
                let x = BigInt::from_str(text).map_err(|_| bad())?;
                let r = x.mod_floor(&BigInt::from(n));
                Ok(Scalar::Mod(
                    u64::try_from(r).expect("mod_floor lands in [0, n)"),
                ))
            }
        }
    }

    /// Formats a scalar canonically: integers and residues in decimal, rationals
    /// as `p/q` in lowest terms (or just `p` when the denominator is 1).
    pub fn format_scalar(self, a: &Scalar) -> String {
        match self.expect_member(a) {
            Scalar::Int(x) => x.to_string(),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Mod(x) => x.to_string(),
        }
    }

    fn modulus(self) -> u64 {
        match self {
            RingDesc::IntegersMod(n) => n,
            _ => unreachable!("modulus() is only called on residue rings"),
        }
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDesc::Integers => write!(f, "Z"),
            RingDesc::Rationals => write!(f, "Q"),
            RingDesc::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for RingDesc {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, RingError> {
        match s {
            "Z" => Ok(RingDesc::Integers),
            "Q" => Ok(RingDesc::Rationals),
            _ => {
                let n = s
                    .strip_prefix("Z/")
                    .and_then(|t| {
                        // Reject redundant forms like "Z/007" so that parsing
                        // inverts formatting exactly.
                        if t.len() > 1 && t.starts_with('0') {
                            None
                        } else {
                            t.parse::<u64>().ok()
                        }
                    })
                    .ok_or_else(|| RingError::BadRing(s.to_owned()))?;
                RingDesc::integers_mod(n)
            }
        }
    }
}
