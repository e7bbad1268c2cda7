use crate::{Policy, SurfaceError, SurfaceType, Weight};
use free_properad::HasArity;
use graph_core::Arity;
use std::fmt;
use std::str::FromStr;

/// The named collections of surface types that form properads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProperadName {
    M,
    DPlusM,
    Mbar,
    Mhat,
    Munst,
    MbarUnst,
    MhatUnst,
    DPlusMunst,
    Mnop,
    DPlusBlackM,
    DPlusBlackMunst,
    MhatBlackUnst,
    ScriptM,
    ScriptMnop,
    DutchM,
    DutchMbar,
    DutchMunst,
    DutchMbarUnst,
}

use ProperadName::*;

const UNSTABLE: [Arity; 5] = [(0, 1), (1, 0), (1, 1), (0, 2), (2, 0)];
const OUTPUT_UNSTABLE: [Arity; 3] = [(0, 1), (1, 1), (0, 2)];
const NOP: [Arity; 4] = [(0, 1), (1, 0), (1, 1), (0, 2)];

impl ProperadName {
    pub const ALL: [ProperadName; 18] = [
        M,
        DPlusM,
        Mbar,
        Mhat,
        Munst,
        MbarUnst,
        MhatUnst,
        DPlusMunst,
        Mnop,
        DPlusBlackM,
        DPlusBlackMunst,
        MhatBlackUnst,
        ScriptM,
        ScriptMnop,
        DutchM,
        DutchMbar,
        DutchMunst,
        DutchMbarUnst,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            M => "M",
            DPlusM => "dPlusM",
            Mbar => "Mbar",
            Mhat => "Mhat",
            Munst => "Munst",
            MbarUnst => "MbarUnst",
            MhatUnst => "MhatUnst",
            DPlusMunst => "dPlusMunst",
            Mnop => "Mnop",
            DPlusBlackM => "dPlusBlackM",
            DPlusBlackMunst => "dPlusBlackMunst",
            MhatBlackUnst => "MhatBlackUnst",
            ScriptM => "ScriptM",
            ScriptMnop => "ScriptMnop",
            DutchM => "DutchM",
            DutchMbar => "DutchMbar",
            DutchMunst => "DutchMunst",
            DutchMbarUnst => "DutchMbarUnst",
        }
    }

    /// Members may carry marked points.
    pub fn spotted(self) -> bool {
        matches!(self, ScriptM | ScriptMnop | DutchM | DutchMbar | DutchMunst | DutchMbarUnst)
    }

    /// Members may have nodes.
    pub fn nodal(self) -> bool {
        matches!(self, Mbar | Mhat | MbarUnst | MhatUnst | MhatBlackUnst | DutchMbar | DutchMbarUnst)
    }

    pub fn policy(self) -> Policy {
        match (self.spotted(), self.nodal()) {
            (false, false) => Policy::Plain,
            (false, true) => Policy::Stabilize,
            (true, false) => Policy::ForgetZeroMarks,
            (true, true) => Policy::ForgetZeroMarksStabilize,
        }
    }

    /// The arities with members, or `None` when every arity but `(0,0)` has some.
    pub fn arities(self) -> Option<&'static [Arity]> {
        match self {
            Munst | MbarUnst | DutchMunst | DutchMbarUnst => Some(&UNSTABLE),
            MhatUnst | DPlusMunst | MhatBlackUnst => Some(&OUTPUT_UNSTABLE),
            Mnop | ScriptMnop => Some(&NOP),
            DPlusBlackMunst => Some(&[(0, 1), (1, 1)]),
            _ => None,
        }
    }

    /// Members have arithmetic genus 0.
    pub fn genus_zero(self) -> bool {
        self.arities().is_some()
    }

    /// Members have at least one output.
    pub fn needs_output(self) -> bool {
        matches!(self, DPlusM | Mhat | MhatUnst | DPlusMunst | DPlusBlackM | DPlusBlackMunst | MhatBlackUnst)
    }
}

impl fmt::Display for ProperadName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProperadName {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| SurfaceError::UnknownName(s.into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// The first failed clause, or "member".
    pub reason: String,
}

impl Membership {
    fn yes() -> Self {
        Membership { member: true, reason: "member".into() }
    }

    fn no(reason: impl Into<String>) -> Self {
        Membership { member: false, reason: reason.into() }
    }
}

/// Decide whether `s` belongs to the collection `name`.
pub fn membership(s: &SurfaceType, name: ProperadName) -> Result<Membership, SurfaceError> {
    s.validate()?;
    let arity = s.arity();
    let genus = s.arithmetic_genus();
    let disk = genus == 0 && matches!(arity, (0, 1) | (1, 0));
    let zero = Weight::from_integer(0);
    let one = Weight::from_integer(1);
    if !name.spotted() && !s.marks.is_empty() {
        return Ok(Membership::no("carries marked points"));
    }
    if s.marks.iter().any(|m| m.1 == zero) {
        return Ok(Membership::no("weight-0 mark not forgotten"));
    }
    if !name.nodal() && !s.is_smooth() {
        return Ok(Membership::no("not smooth"));
    }
    if name.nodal() && !s.is_stable() {
        return Ok(Membership::no("has an unstable closed component"));
    }
    if name.needs_output() && arity.1 == 0 {
        return Ok(Membership::no("no output"));
    }
    if matches!(name, Mhat | MhatUnst | MhatBlackUnst) {
        if let Some(c) = (0..s.component_count()).find(|&c| s.output_count(c) == 0) {
            return Ok(Membership::no(format!("component {c} has no output")));
        }
    }
    if name.genus_zero() && genus != 0 {
        return Ok(Membership::no(format!("arithmetic genus {genus} is not 0")));
    }
    if let Some(allowed) = name.arities() {
        if !allowed.contains(&arity) {
            return Ok(Membership::no(format!("no members of arity {arity:?}")));
        }
    }
    let verdict = match name {
        DPlusBlackM | DPlusBlackMunst | MhatBlackUnst if genus == 0 && arity == (1, 1) && !s.unit => {
            Membership::no("genus-0 (1,1) type other than the modulus-0 annulus")
        }
        DPlusBlackM | DPlusBlackMunst if genus == 0 && arity == (0, 2) => Membership::no("genus-0 (0,2) has no modulus-0 member"),
        ScriptM if arity.1 == 0 && !s.has_weight_one_mark() => Membership::no("no output and no weight-1 mark"),
        ScriptMnop => match arity {
            (1, 0) if s.marks.len() != 1 || s.marks[0].1 != one => Membership::no("cap needs exactly one mark, of weight 1"),
            (0, 1) if s.marks.len() > 1 => Membership::no("cup carries more than one mark"),
            (1, 1) | (0, 2) if !s.marks.is_empty() => Membership::no("annulus carries a positive-weight mark"),
            _ => Membership::yes(),
        },
        DutchM | DutchMbar | DutchMunst | DutchMbarUnst if disk && !s.has_weight_one_mark() => {
            Membership::no("disk without a weight-1 mark")
        }
        _ => Membership::yes(),
    };
    Ok(verdict)
}
