//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator (both invariants are maintained by `num-rational`).

use crate::rng::Rng;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Seeded random rational: numerator uniform in [-10^4, 10^4], denominator
/// uniform in [1, 10^2]. Genericity draws throughout the crate use this range.
pub fn random_rat(rng: &mut Rng) -> Rat {
    let num = rng.int_in(-10_000, 10_000);
    let den = rng.int_in(1, 100);
    rat_frac(num, den)
}

/// Like `random_rat` but never zero.
pub fn random_rat_nonzero(rng: &mut Rng) -> Rat {
    loop {
        let r = random_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Render as `p` when integral, `p/q` otherwise. All CLI/JSON output uses this.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` with an optional sign.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((p, q)) => {
            let num = p.trim().parse::<BigInt>().ok()?;
            let den = q.trim().parse::<BigInt>().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rat::new(num, den))
            }
        }
    }
}

/// Serde adapters: rationals always cross the wire as `p` / `p/q` strings.
pub mod serde_rat {
    use super::{rat_to_string, Rat};
    use serde::ser::Serializer;

    pub fn serialize<S: Serializer>(v: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(v))
    }
}

pub mod serde_rat_vec {
    use super::{rat_to_string, Rat};
    use serde::ser::{SerializeSeq, Serializer};

    pub fn serialize<S: Serializer>(v: &Vec<Rat>, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&rat_to_string(x))?;
        }
        seq.end()
    }
}

pub mod serde_rat_opt_vec {
    use super::{rat_to_string, Rat};
    use serde::ser::Serializer;

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rat>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            None => s.serialize_none(),
            Some(xs) => {
                let strings: Vec<String> = xs.iter().map(|x| rat_to_string(x)).collect();
                s.serialize_some(&strings)
            }
        }
    }
}

/// Scale a rational vector to a primitive integer vector (clears denominators,
/// strips the content, keeps the sign of the leading nonzero entry positive).
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &out {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut out {
            *x /= &g;
        }
    }
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut out {
                *x = -x.clone();
            }
        }
    }
    out
}
