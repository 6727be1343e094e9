use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
}

/// Endpoint conditions of a 1D problem; the letter order is (left, right),
/// so `DN` is Dirichlet at the left endpoint and Neumann at the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundaryPair {
    pub left: BoundaryCondition,
    pub right: BoundaryCondition,
}

impl BoundaryPair {
    pub const DD: BoundaryPair = BoundaryPair {
        left: BoundaryCondition::Dirichlet,
        right: BoundaryCondition::Dirichlet,
    };
    pub const NN: BoundaryPair = BoundaryPair {
        left: BoundaryCondition::Neumann,
        right: BoundaryCondition::Neumann,
    };
    pub const DN: BoundaryPair = BoundaryPair {
        left: BoundaryCondition::Dirichlet,
        right: BoundaryCondition::Neumann,
    };
    pub const ND: BoundaryPair = BoundaryPair {
        left: BoundaryCondition::Neumann,
        right: BoundaryCondition::Dirichlet,
    };

    pub fn parse(s: &str) -> Option<BoundaryPair> {
        match s.to_ascii_uppercase().as_str() {
            "DD" => Some(Self::DD),
            "NN" => Some(Self::NN),
            "DN" => Some(Self::DN),
            "ND" => Some(Self::ND),
            _ => None,
        }
    }
}

impl fmt::Display for BoundaryPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |bc: BoundaryCondition| match bc {
            BoundaryCondition::Dirichlet => 'D',
            BoundaryCondition::Neumann => 'N',
        };
        write!(f, "{}{}", c(self.left), c(self.right))
    }
}

/// Uniform boundary condition on the whole boundary of a 2D domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind2D {
    Dirichlet,
    Neumann,
}

impl fmt::Display for BoundaryKind2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryKind2D::Dirichlet => write!(f, "Dirichlet"),
            BoundaryKind2D::Neumann => write!(f, "Neumann"),
        }
    }
}
