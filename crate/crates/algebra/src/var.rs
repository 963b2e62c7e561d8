//! The fixed global variable sequence shared by every polynomial.
//!
//! Index order is also the lexicographic tie-break order of the monomial
//! order: a lower index is a "larger" variable.

use std::fmt;

pub const NVARS: usize = 40;

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub u8);

const NAMES: [&str; NVARS] = [
    "x", "y", "z", "w", "q", "p", "t", "s", "eps", //
    "a0", "a1", "a2", "a3", "a4", "a5", "a6", //
    "A0", "A1", "A2", "A3", "A4", "A5", //
    "X", "Y", "Z", "W", "Q", "P", "T", //
    "g0", "g1", "g2", "b0", "b1", "al", "be", //
    "tau", "u", "v", "r",
];

impl Var {
    pub const X: Var = Var(0);
    pub const Y: Var = Var(1);
    pub const Z: Var = Var(2);
    pub const W: Var = Var(3);
    pub const Q: Var = Var(4);
    pub const P: Var = Var(5);
    pub const T: Var = Var(6);
    pub const S: Var = Var(7);
    pub const EPS: Var = Var(8);
    pub const BIG_X: Var = Var(22);
    pub const BIG_Y: Var = Var(23);
    pub const BIG_Z: Var = Var(24);
    pub const BIG_W: Var = Var(25);
    pub const BIG_Q: Var = Var(26);
    pub const BIG_P: Var = Var(27);
    pub const BIG_T: Var = Var(28);
    pub const G0: Var = Var(29);
    pub const G1: Var = Var(30);
    pub const G2: Var = Var(31);
    pub const B0: Var = Var(32);
    pub const B1: Var = Var(33);
    pub const AL: Var = Var(34);
    pub const BE: Var = Var(35);
    pub const TAU: Var = Var(36);
    pub const U: Var = Var(37);
    pub const V: Var = Var(38);
    pub const R: Var = Var(39);

    /// The six phase coordinates in their canonical-pair order.
    pub const PHASE: [Var; 6] = [Var::X, Var::Y, Var::Z, Var::W, Var::Q, Var::P];
    /// The six degenerate coordinates, paired with `PHASE`.
    pub const BIG_PHASE: [Var; 6] =
        [Var::BIG_X, Var::BIG_Y, Var::BIG_Z, Var::BIG_W, Var::BIG_Q, Var::BIG_P];

    /// α_i, for i in 0..=6.
    pub fn alpha(i: usize) -> Var {
        assert!(i <= 6, "alpha index {i} out of range");
        Var(9 + i as u8)
    }

    /// A_i, for i in 0..=5.
    pub fn big_a(i: usize) -> Var {
        assert!(i <= 5, "A index {i} out of range");
        Var(16 + i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        let alias = match name {
            "ε" => "eps",
            "τ" => "tau",
            other => other,
        };
        NAMES.iter().position(|n| *n == alias).map(|i| Var(i as u8))
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS as u8).map(Var)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of variables as a bitmask over the global order.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash)]
pub struct VarSet(pub u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn of(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0u64, |m, v| m | (1u64 << v.0)))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1u64 << v.0) != 0
    }

    pub fn insert(&mut self, v: Var) {
        self.0 |= 1u64 << v.0;
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn minus(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        (0..NVARS as u8).filter(move |i| self.0 & (1u64 << i) != 0).map(Var)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for v in Var::all() {
            assert_eq!(Var::from_name(v.name()), Some(v));
        }
        assert_eq!(Var::alpha(6).name(), "a6");
        assert_eq!(Var::big_a(5).name(), "A5");
        assert_eq!(Var::from_name("ε"), Some(Var::EPS));
    }
}
