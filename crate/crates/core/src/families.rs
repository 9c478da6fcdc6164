//! Named triangular matrix families, selectable at runtime.

use std::fmt;

use crate::connect;
use crate::error::{Error, Result};
use crate::polyalg::{basis_matrix, PolyBasis};
use crate::stirling::{stirling1, stirling2, WeightSpec, PRESETS};
use crate::trimat::TriMatrix;

/// A lower triangular matrix defined for every truncation order.
pub trait MatrixFamily: Send + Sync {
    fn name(&self) -> &str;
    fn describe(&self) -> String;
    fn build(&self, order: usize) -> Result<TriMatrix>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    Second,
    First,
}

impl std::str::FromStr for StirlingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "second" | "2" => Ok(StirlingKind::Second),
            "first" | "1" => Ok(StirlingKind::First),
            other => Err(Error::unknown("triangle kind", other, ["second", "first"])),
        }
    }
}

impl fmt::Display for StirlingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StirlingKind::Second => "second",
            StirlingKind::First => "first",
        })
    }
}

/// `S^w` or `s^w` for a weight preset.
pub struct StirlingFamily {
    pub weights: WeightSpec,
    pub formula: &'static str,
    pub kind: StirlingKind,
}

impl MatrixFamily for StirlingFamily {
    fn name(&self) -> &str {
        self.weights.name()
    }

    fn describe(&self) -> String {
        format!("{} kind triangle for w(n) = {}", self.kind, self.formula)
    }

    fn build(&self, order: usize) -> Result<TriMatrix> {
        match self.kind {
            StirlingKind::Second => stirling2(&self.weights, order),
            StirlingKind::First => stirling1(&self.weights, order),
        }
    }
}

/// A matrix given by a constructor function.
pub struct NamedMatrix {
    pub name: &'static str,
    pub description: &'static str,
    pub build: fn(usize) -> Result<TriMatrix>,
}

impl MatrixFamily for NamedMatrix {
    fn name(&self) -> &str {
        self.name
    }

    fn describe(&self) -> String {
        self.description.to_string()
    }

    fn build(&self, order: usize) -> Result<TriMatrix> {
        (self.build)(order)
    }
}

pub const NAMED_MATRICES: &[NamedMatrix] = &[
    NamedMatrix {
        name: "genocchi-matrix",
        description: "A: F_{2n+2} in the basis F_{2k+1}",
        build: connect::genocchi_matrix,
    },
    NamedMatrix { name: "genocchi-matrix-squared", description: "A^2", build: connect::genocchi_matrix_squared },
    NamedMatrix {
        name: "genocchi-matrix-inverse",
        description: "A^-1: F_{2n+1} in the basis F_{2k+2}",
        build: connect::genocchi_matrix_inverse,
    },
    NamedMatrix {
        name: "tangent-matrix",
        description: "B: L_{2n+1} in the basis L_{2k}",
        build: connect::tangent_matrix,
    },
    NamedMatrix { name: "tangent-matrix-inverse", description: "B^-1", build: connect::tangent_matrix_inverse },
    NamedMatrix { name: "a1", description: "partial row sums of A", build: connect::a1_matrix },
    NamedMatrix { name: "a2", description: "a1(n,k) - a1(n+1,k)", build: connect::a2_matrix },
    NamedMatrix { name: "z", description: "inverse of a2", build: connect::z_matrix },
    NamedMatrix { name: "c-matrix", description: "(-1)^{i-j} C(i+1,j)", build: connect::c_matrix },
    NamedMatrix { name: "c-matrix-inverse", description: "C(i,j) b(i-j)/(j+1)", build: connect::c_matrix_inverse },
    NamedMatrix { name: "pascal", description: "C(i,j)", build: |n| connect::pascal(n, 0) },
    NamedMatrix { name: "pascal-shift", description: "C(i+1,j)", build: |n| connect::pascal(n, 1) },
    NamedMatrix {
        name: "half-binomial-even",
        description: "C(i+1,2i-2j)",
        build: |n| connect::half_binomial(n, 0),
    },
    NamedMatrix {
        name: "half-binomial-odd",
        description: "C(i+1,2i-2j+1)",
        build: |n| connect::half_binomial(n, 1),
    },
    NamedMatrix {
        name: "fib-odd",
        description: "coefficients of F_{2i+1}: C(2i-j,j)",
        build: |n| basis_matrix(PolyBasis::FibOdd, n),
    },
    NamedMatrix {
        name: "fib-odd-inverse",
        description: "inverse of the F_{2i+1} coefficient matrix",
        build: |n| Ok(basis_matrix(PolyBasis::FibOdd, n)?.inverse()?),
    },
    NamedMatrix {
        name: "fib-odd-inverse-times-even",
        description: "(C(2i-j,j))^-1 (C(2i+1-j,j))",
        build: |n| {
            let odd = basis_matrix(PolyBasis::FibOdd, n)?.inverse()?;
            Ok(odd.mul(&basis_matrix(PolyBasis::FibEven, n)?)?)
        },
    },
    NamedMatrix {
        name: "fib-even",
        description: "coefficients of F_{2i+2}: C(2i+1-j,j)",
        build: |n| basis_matrix(PolyBasis::FibEven, n),
    },
    NamedMatrix {
        name: "lucas-even",
        description: "coefficients of L_{2i}",
        build: |n| basis_matrix(PolyBasis::LucasEven, n),
    },
    NamedMatrix {
        name: "lucas-odd",
        description: "coefficients of L_{2i+1}",
        build: |n| basis_matrix(PolyBasis::LucasOdd, n),
    },
];

/// Name-indexed collection of matrix families.
pub struct FamilyRegistry {
    entries: Vec<Box<dyn MatrixFamily>>,
}

impl FamilyRegistry {
    /// Weight presets (of the requested kind) followed by the named matrices.
    pub fn standard(kind: StirlingKind) -> Self {
        let mut reg = FamilyRegistry { entries: Vec::new() };
        for p in PRESETS {
            reg.register(Box::new(StirlingFamily {
                weights: WeightSpec::new(p.name, p.weight),
                formula: p.formula,
                kind,
            }));
        }
        for m in NAMED_MATRICES {
            reg.register(Box::new(NamedMatrix { name: m.name, description: m.description, build: m.build }));
        }
        reg
    }

    /// Adds a family, replacing any previous family of the same name.
    pub fn register(&mut self, family: Box<dyn MatrixFamily>) {
        match self.entries.iter().position(|f| f.name() == family.name()) {
            Some(i) => self.entries[i] = family,
            None => self.entries.push(family),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn MatrixFamily> {
        self.entries
            .iter()
            .find(|f| f.name() == name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::unknown("triangle", name, self.names()))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|f| f.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn MatrixFamily> {
        self.entries.iter().map(|f| f.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trimat::int_rows;

    #[test]
    fn lookup() {
        let reg = FamilyRegistry::standard(StirlingKind::Second);
        let t = reg.get("central-factorial").unwrap().build(4).unwrap();
        assert_eq!(t, int_rows(&[&[1], &[0, 1], &[0, 1, 1], &[0, 1, 5, 1]]));
        let a = reg.get("genocchi-matrix").unwrap().build(2).unwrap();
        assert_eq!(a, int_rows(&[&[1], &[-1, 2]]));
        assert!(matches!(reg.get("nope"), Err(Error::Unknown { .. })));
        let first = FamilyRegistry::standard(StirlingKind::First);
        assert_eq!(first.get("stirling").unwrap().build(3).unwrap(), int_rows(&[&[1], &[0, 1], &[0, -1, 1]]));
        assert_eq!("first".parse::<StirlingKind>().unwrap(), StirlingKind::First);
    }

    #[test]
    fn names_are_unique() {
        let reg = FamilyRegistry::standard(StirlingKind::Second);
        let mut names = reg.names();
        let before = names.len();
        names.sort();
        names.dedup();
        assert_eq!(before, names.len());
    }

    #[test]
    fn every_family_builds() {
        for kind in [StirlingKind::Second, StirlingKind::First] {
            for f in FamilyRegistry::standard(kind).iter() {
                assert_eq!(f.build(6).unwrap().order(), 6, "{}", f.name());
                assert!(!f.describe().is_empty());
            }
        }
    }
}
