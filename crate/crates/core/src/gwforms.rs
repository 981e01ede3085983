//! Diagonal classes in the Grothendieck–Witt group `GW(k)`.
//!
//! Over `F_p` a diagonal form is determined by its rank and discriminant, so
//! equality is decided exactly. Over `Q` the rank, signature and discriminant are
//! only necessary conditions; comparisons with `n·H` come back three-valued.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalars::{square_class, FieldSpec, Scalar, SquareClass};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GwError {
    #[error("⟨0⟩ is not a nondegenerate form")]
    ZeroGenerator,
    #[error("classes over different fields ({0} and {1})")]
    FieldMismatch(FieldSpec, FieldSpec),
}

/// A formal sum `⟨a_1⟩ + … + ⟨a_r⟩` with nonzero `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwClass {
    field: FieldSpec,
    generators: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwInvariants {
    pub rank: usize,
    pub discriminant: SquareClass,
    /// Only over `Q`.
    pub signature: Option<i64>,
}

/// Outcome of comparing a class with `n·H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HyperbolicVerdict {
    True,
    False,
    /// Over `Q`: rank, signature and discriminant match but the generators could not
    /// be paired off into hyperbolic planes.
    InvariantsConsistent,
}

impl fmt::Display for HyperbolicVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HyperbolicVerdict::True => "True",
            HyperbolicVerdict::False => "False",
            HyperbolicVerdict::InvariantsConsistent => "InvariantsConsistent",
        })
    }
}

impl GwClass {
    pub fn zero(field: FieldSpec) -> Self {
        GwClass { field, generators: Vec::new() }
    }

    pub fn new(field: FieldSpec, generators: Vec<Scalar>) -> Result<Self, GwError> {
        for g in &generators {
            if g.is_zero() {
                return Err(GwError::ZeroGenerator);
            }
            if g.field() != field {
                return Err(GwError::FieldMismatch(field, g.field()));
            }
        }
        Ok(GwClass { field, generators })
    }

    /// `⟨a⟩`.
    pub fn rank_one(a: Scalar) -> Result<Self, GwError> {
        GwClass::new(a.field(), vec![a])
    }

    /// `n·H = n·⟨1, -1⟩`.
    pub fn hyperbolic(field: FieldSpec, n: usize) -> Self {
        let mut generators = Vec::with_capacity(2 * n);
        for _ in 0..n {
            generators.push(field.one());
            generators.push(-field.one());
        }
        GwClass { field, generators }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[Scalar] {
        &self.generators
    }

    pub fn add(&self, other: &GwClass) -> Result<GwClass, GwError> {
        if self.field != other.field {
            return Err(GwError::FieldMismatch(self.field, other.field));
        }
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(GwClass { field: self.field, generators })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Square class of the product of the generators (`+1` for the empty sum).
    pub fn discriminant(&self) -> SquareClass {
        let prod = self.generators.iter().fold(self.field.one(), |acc, g| acc * g);
        square_class(&prod).expect("generators are nonzero")
    }

    pub fn signature(&self) -> Option<i64> {
        match self.field {
            FieldSpec::Prime(_) => None,
            FieldSpec::Rational => Some(
                self.generators
                    .iter()
                    .map(|g| i64::from(g.signum().expect("rational")))
                    .sum(),
            ),
        }
    }

    pub fn invariants(&self) -> GwInvariants {
        GwInvariants { rank: self.rank(), discriminant: self.discriminant(), signature: self.signature() }
    }

    /// Compare with `n·H`.
    pub fn equals_hyperbolic_multiple(&self, n: usize) -> HyperbolicVerdict {
        let target = GwClass::hyperbolic(self.field, n).invariants();
        if self.invariants() != target {
            return HyperbolicVerdict::False;
        }
        match self.field {
            FieldSpec::Prime(_) => HyperbolicVerdict::True,
            FieldSpec::Rational => {
                if self.pairs_off() {
                    HyperbolicVerdict::True
                } else {
                    HyperbolicVerdict::InvariantsConsistent
                }
            }
        }
    }

    /// Greedy cancellation of `⟨a⟩ + ⟨b⟩` whenever `b ∈ -a·(k^×)^2`.
    fn pairs_off(&self) -> bool {
        let mut classes: Vec<SquareClass> = self
            .generators
            .iter()
            .map(|g| square_class(g).expect("nonzero"))
            .collect();
        while let Some(c) = classes.pop() {
            let neg = c.mul(&square_class(&-self.field.one()).expect("nonzero"));
            match classes.iter().position(|d| *d == neg) {
                Some(i) => {
                    classes.swap_remove(i);
                }
                None => return false,
            }
        }
        true
    }

    /// Exact equality over `F_p`, where rank and discriminant classify diagonal forms.
    /// `None` over `Q`.
    pub fn equals_over_finite_field(&self, other: &GwClass) -> Option<bool> {
        match self.field {
            FieldSpec::Prime(_) if self.field == other.field => {
                Some(self.rank() == other.rank() && self.discriminant() == other.discriminant())
            }
            _ => None,
        }
    }

    /// `n·H` when the class is verifiably hyperbolic, `⟨a_1,…,a_r⟩` otherwise.
    pub fn render(&self) -> String {
        if self.rank() % 2 == 0 && self.rank() > 0 && self.equals_hyperbolic_multiple(self.rank() / 2) == HyperbolicVerdict::True {
            format!("{}·H", self.rank() / 2)
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for GwClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(Scalar::to_bare_string).collect();
        write!(f, "⟨{}⟩", parts.join(","))
    }
}

impl Serialize for GwClass {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("GwClass", 5)?;
        st.serialize_field("class", &self.render())?;
        st.serialize_field(
            "generators",
            &self.generators.iter().map(Scalar::to_bare_string).collect::<Vec<_>>(),
        )?;
        st.serialize_field("rank", &self.rank())?;
        st.serialize_field("discriminant", &self.discriminant().to_string())?;
        st.serialize_field("signature", &self.signature())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    fn class(field: FieldSpec, v: &[i64]) -> GwClass {
        GwClass::new(field, v.iter().map(|&a| Scalar::from_int(field, a)).collect()).unwrap()
    }

    #[test]
    fn sums() {
        let h = class(Q, &[1]).add(&class(Q, &[-1])).unwrap();
        assert_eq!(h.equals_hyperbolic_multiple(1), HyperbolicVerdict::True);
        assert_eq!(h.render(), "1·H");
        let u = class(Q, &[2, 3]);
        assert_eq!(u.add(&GwClass::zero(Q)).unwrap(), u);
        assert!(class(Q, &[1]).add(&class(FieldSpec::Prime(7), &[1])).is_err());
        assert_eq!(GwClass::new(Q, vec![Q.zero()]), Err(GwError::ZeroGenerator));
    }

    #[test]
    fn invariants_examples() {
        let inv = GwClass::hyperbolic(Q, 3).invariants();
        assert_eq!(inv.rank, 6);
        assert_eq!(inv.discriminant, square_class(&Scalar::from_int(Q, -1)).unwrap());
        assert_eq!(inv.signature, Some(0));
        let f7 = FieldSpec::Prime(7);
        let inv = class(f7, &[3]).invariants();
        assert_eq!((inv.rank, inv.discriminant.is_trivial(), inv.signature), (1, false, None));
        let inv = class(Q, &[2, 2]).invariants();
        assert_eq!((inv.rank, inv.discriminant.is_trivial(), inv.signature), (2, true, Some(2)));
    }

    #[test]
    fn hyperbolic_verdicts() {
        for field in [Q, FieldSpec::Prime(5), FieldSpec::Prime(7)] {
            assert_eq!(class(field, &[1, -1]).equals_hyperbolic_multiple(1), HyperbolicVerdict::True);
        }
        assert_eq!(class(Q, &[2, -2]).equals_hyperbolic_multiple(1), HyperbolicVerdict::True);
        assert_eq!(class(Q, &[1, 1]).equals_hyperbolic_multiple(1), HyperbolicVerdict::False);
        // ⟨1,1,-3,-3⟩ has the invariants of 2H; pairing ⟨1⟩ with ⟨-1⟩ is impossible here.
        assert_eq!(class(Q, &[1, 1, -3, -3]).equals_hyperbolic_multiple(2), HyperbolicVerdict::InvariantsConsistent);
        // Over F_5, -1 is a square, so ⟨1,1⟩ = H.
        assert_eq!(class(FieldSpec::Prime(5), &[1, 1]).equals_hyperbolic_multiple(1), HyperbolicVerdict::True);
        assert_eq!(class(FieldSpec::Prime(7), &[1, 1]).equals_hyperbolic_multiple(1), HyperbolicVerdict::False);
    }
}
