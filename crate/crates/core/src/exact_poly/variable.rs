use std::fmt;

/// Variable families, declared in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Z,
    Y,
    W,
    BigZ,
}

/// An indeterminate such as `x3`, `z1`, `w` or `Z`.
///
/// Ordering is by family (`X < Z < Y < W < BigZ`) and then by index. The
/// single-symbol families `W` and `BigZ` always carry index 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId {
    family: Family,
    index: u32,
}

impl VariableId {
    pub fn new(family: Family, index: u32) -> Self {
        let index = match family {
            Family::W | Family::BigZ => 0,
            _ => index,
        };
        Self { family, index }
    }

    pub fn x(i: usize) -> Self {
        Self::new(Family::X, i as u32)
    }

    pub fn z(i: usize) -> Self {
        Self::new(Family::Z, i as u32)
    }

    pub fn y(i: usize) -> Self {
        Self::new(Family::Y, i as u32)
    }

    pub fn w() -> Self {
        Self::new(Family::W, 0)
    }

    pub fn big_z() -> Self {
        Self::new(Family::BigZ, 0)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    /// Parses a variable name (`x1`, `z12`, `y3`, `w`, `Z`).
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "w" => return Some(Self::w()),
            "Z" => return Some(Self::big_z()),
            _ => {}
        }
        let mut chars = name.chars();
        let family = match chars.next()? {
            'x' => Family::X,
            'z' => Family::Z,
            'y' => Family::Y,
            _ => return None,
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let index: u32 = digits.parse().ok()?;
        if index == 0 {
            return None;
        }
        Some(Self::new(family, index))
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::X => write!(f, "x{}", self.index),
            Family::Z => write!(f, "z{}", self.index),
            Family::Y => write!(f, "y{}", self.index),
            Family::W => f.write_str("w"),
            Family::BigZ => f.write_str("Z"),
        }
    }
}
