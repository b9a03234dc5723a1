//! Small semigroups used as fixtures by the tests and the acceptance suite.

use crate::semigroup::Semigroup;

const FILES: &[(&str, &str)] = &[
    ("lz2", include_str!("../corpus/lz2.sgp")),
    ("lz3", include_str!("../corpus/lz3.sgp")),
    ("rz2", include_str!("../corpus/rz2.sgp")),
    ("chain2", include_str!("../corpus/chain2.sgp")),
    ("chain3", include_str!("../corpus/chain3.sgp")),
    ("chain4", include_str!("../corpus/chain4.sgp")),
    ("chain5", include_str!("../corpus/chain5.sgp")),
    ("z2", include_str!("../corpus/z2.sgp")),
    ("z3", include_str!("../corpus/z3.sgp")),
    ("z4", include_str!("../corpus/z4.sgp")),
    ("n3", include_str!("../corpus/n3.sgp")),
    ("b2", include_str!("../corpus/b2.sgp")),
    ("sl3", include_str!("../corpus/sl3.sgp")),
    ("sl3nz", include_str!("../corpus/sl3nz.sgp")),
    ("sl3xlz2", include_str!("../corpus/sl3xlz2.sgp")),
    ("sl3xrb22", include_str!("../corpus/sl3xrb22.sgp")),
];

/// Members expected to be unambiguous.
pub const UNAMBIGUOUS: &[&str] = &[
    "lz2", "lz3", "rz2", "chain2", "chain3", "chain4", "chain5", "z2", "z3", "z4", "n3", "b2", "sl3nz",
];

/// Members expected to be ambiguous.
pub const AMBIGUOUS: &[&str] = &["sl3", "sl3xlz2", "sl3xrb22"];

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

pub fn text(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses a fixture; panics on an unknown name.
pub fn load(name: &str) -> Semigroup {
    let text = text(name).unwrap_or_else(|| panic!("no corpus member `{name}`"));
    Semigroup::parse(text).expect("corpus tables are valid")
}
