//! Bounded interval domains.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{rint, Rational};

/// One of the two boundary points of an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Lower,
    Upper,
}

/// A bounded interval Ω = (a,b), optionally taken with its closure.
///
/// The closure flag decides whether measures on the domain may carry atoms at
/// the endpoints. An interval automatically has perimeter 2 and two boundary
/// points, with inward unit normal +1 at `a` and -1 at `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    a: Rational,
    b: Rational,
    closed: bool,
}

impl Domain {
    /// The open interval (a,b). Fails unless a < b.
    pub fn open(a: Rational, b: Rational) -> Result<Self> {
        if a >= b {
            return Err(Error::EmptyInterval { a, b });
        }
        Ok(Domain { a, b, closed: false })
    }

    /// The same interval with endpoint atoms admitted.
    pub fn closure(&self) -> Self {
        Domain { a: self.a.clone(), b: self.b.clone(), closed: true }
    }

    /// The same interval without endpoint atoms.
    pub fn interior(&self) -> Self {
        Domain { a: self.a.clone(), b: self.b.clone(), closed: false }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn length(&self) -> Rational {
        &self.b - &self.a
    }

    /// Same underlying interval, ignoring the closure flag.
    pub fn same_interval(&self, other: &Domain) -> bool {
        self.a == other.a && self.b == other.b
    }

    pub(crate) fn ensure_same_interval(&self, other: &Domain) -> Result<()> {
        if self.same_interval(other) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.to_string(), other.to_string()))
        }
    }

    pub fn contains_interior(&self, x: &Rational) -> bool {
        *x > self.a && *x < self.b
    }

    pub fn contains_closure(&self, x: &Rational) -> bool {
        *x >= self.a && *x <= self.b
    }

    /// Whether an atom may sit at `x` on this domain.
    pub fn admits_atom(&self, x: &Rational) -> bool {
        if self.closed {
            self.contains_closure(x)
        } else {
            self.contains_interior(x)
        }
    }

    /// Inward unit normal: +1 at the lower endpoint, -1 at the upper one.
    pub fn inward_normal(&self, e: Endpoint) -> Rational {
        match e {
            Endpoint::Lower => rint(1),
            Endpoint::Upper => rint(-1),
        }
    }

    pub fn endpoint(&self, e: Endpoint) -> &Rational {
        match e {
            Endpoint::Lower => &self.a,
            Endpoint::Upper => &self.b,
        }
    }

    /// Counting measure of the boundary; always 2 for a bounded interval.
    pub fn boundary_point_count(&self) -> Rational {
        rint(2)
    }

    /// Perimeter of the interval; equals the boundary point count, so the
    /// regularity assumption on the domain holds automatically.
    pub fn perimeter(&self) -> Rational {
        rint(2)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.closed {
            write!(f, "[{},{}]", self.a, self.b)
        } else {
            write!(f, "({},{})", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rejects_empty_interval() {
        assert!(Domain::open(rint(1), rint(1)).is_err());
        assert!(Domain::open(rint(2), rint(1)).is_err());
    }

    #[test]
    fn closure_admits_endpoint_atoms() {
        let d = Domain::open(rint(0), rint(1)).unwrap();
        assert!(!d.admits_atom(&rint(0)));
        assert!(d.closure().admits_atom(&rint(0)));
        assert!(d.closure().admits_atom(&rint(1)));
        assert!(!d.closure().admits_atom(&rat(3, 2)));
    }

    #[test]
    fn normals_and_perimeter() {
        let d = Domain::open(rint(-1), rint(1)).unwrap();
        assert_eq!(d.inward_normal(Endpoint::Lower), rint(1));
        assert_eq!(d.inward_normal(Endpoint::Upper), rint(-1));
        assert_eq!(d.perimeter(), rint(2));
        assert_eq!(d.boundary_point_count(), rint(2));
    }
}
