//! Finite semigroups given by their Cayley table.
//!
//! Elements are dense indices into the table; display names only matter at
//! the text boundary. Zero and identity are detected, never declared.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Default upper bound on the order of a loaded semigroup.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// An element of a finite semigroup, identified by its row in the table.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Element(u16);

impl Element {
    pub fn new(index: usize) -> Self {
        Element(u16::try_from(index).expect("element index out of range"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An element of `S¹`: either the adjoined identity or an element of `S`.
///
/// When `S` already has an identity `e`, `One` and `Elem(e)` act identically
/// but remain distinct values.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnitExt {
    One,
    Elem(Element),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("line {line}: unknown element `{name}`")]
    UnknownName { line: usize, name: String },
    #[error("associativity fails at ({i}, {j}, {k}): ({i}{j}){k} = {left} but {i}({j}{k}) = {right}")]
    Associativity {
        i: String,
        j: String,
        k: String,
        left: String,
        right: String,
    },
    #[error("order {order} exceeds the configured maximum of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("a semigroup needs at least one element")]
    Empty,
}

/// A finite semigroup given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    names: Vec<String>,
    table: Vec<Element>,
    zero: Option<Element>,
    identity: Option<Element>,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Semigroup {
    /// Builds a semigroup from names and a table of row-major product indices.
    ///
    /// Checks associativity on every triple and detects zero and identity.
    pub fn from_table(names: Vec<String>, rows: &[Vec<usize>]) -> Result<Self, SemigroupError> {
        Self::from_table_with_limit(names, rows, DEFAULT_MAX_ORDER)
    }

    pub fn from_table_with_limit(
        names: Vec<String>,
        rows: &[Vec<usize>],
        max_order: usize,
    ) -> Result<Self, SemigroupError> {
        let n = names.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        if n > max_order || n > u16::MAX as usize {
            return Err(SemigroupError::TooLarge { order: n, max: max_order });
        }
        let mut seen = HashMap::new();
        for name in &names {
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(SemigroupError::DuplicateName(name.clone()));
            }
        }
        if rows.len() != n {
            return Err(SemigroupError::Parse {
                line: 0,
                message: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SemigroupError::Parse {
                    line: i + 1,
                    message: format!("row {i} has {} entries, expected {n}", row.len()),
                });
            }
            for &p in row {
                if p >= n {
                    return Err(SemigroupError::Parse {
                        line: i + 1,
                        message: format!("product index {p} out of range"),
                    });
                }
                table.push(Element::new(p));
            }
        }
        let mut sg = Semigroup {
            names,
            table,
            zero: None,
            identity: None,
        };
        sg.check_associativity()?;
        sg.zero = sg.detect_zero();
        sg.identity = sg.detect_identity();
        Ok(sg)
    }

    /// Parses the line-oriented Cayley-table format.
    ///
    /// ```text
    /// # comment
    /// elements: a b
    /// a a
    /// b b
    /// ```
    pub fn parse(text: &str) -> Result<Self, SemigroupError> {
        Self::parse_with_limit(text, DEFAULT_MAX_ORDER)
    }

    pub fn parse_with_limit(text: &str, max_order: usize) -> Result<Self, SemigroupError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(SemigroupError::Parse {
            line: 1,
            message: "missing `elements:` header".into(),
        })?;
        let rest = header.strip_prefix("elements:").ok_or(SemigroupError::Parse {
            line: header_line,
            message: "expected `elements:` header".into(),
        })?;
        let names: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
        for name in &names {
            if !valid_identifier(name) {
                return Err(SemigroupError::Parse {
                    line: header_line,
                    message: format!("invalid element name `{name}`"),
                });
            }
        }
        if names.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if names.len() > max_order {
            return Err(SemigroupError::TooLarge {
                order: names.len(),
                max: max_order,
            });
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(SemigroupError::DuplicateName(name.clone()));
            }
        }

        let n = names.len();
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (line, row) = lines.next().ok_or(SemigroupError::Parse {
                line: header_line,
                message: format!("expected {n} table rows, found {}", rows.len()),
            })?;
            let entries = row
                .split_whitespace()
                .map(|tok| {
                    index.get(tok).copied().ok_or_else(|| SemigroupError::UnknownName {
                        line,
                        name: tok.to_owned(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            if entries.len() != n {
                return Err(SemigroupError::Parse {
                    line,
                    message: format!("row has {} entries, expected {n}", entries.len()),
                });
            }
            rows.push(entries);
        }
        if let Some((line, _)) = lines.next() {
            return Err(SemigroupError::Parse {
                line,
                message: "trailing content after the table".into(),
            });
        }
        Self::from_table_with_limit(names, &rows, max_order)
    }

    /// Writes the table back in the format accepted by [`Semigroup::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("elements: {}\n", self.names.join(" "));
        for s in self.elements() {
            let row: Vec<&str> = self.elements().map(|t| self.name(self.product(s, t))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    fn check_associativity(&self) -> Result<(), SemigroupError> {
        for i in self.elements() {
            for j in self.elements() {
                let ij = self.product(i, j);
                for k in self.elements() {
                    let left = self.product(ij, k);
                    let right = self.product(i, self.product(j, k));
                    if left != right {
                        return Err(SemigroupError::Associativity {
                            i: self.name(i).to_owned(),
                            j: self.name(j).to_owned(),
                            k: self.name(k).to_owned(),
                            left: self.name(left).to_owned(),
                            right: self.name(right).to_owned(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn detect_zero(&self) -> Option<Element> {
        self.elements()
            .find(|&z| self.elements().all(|x| self.product(z, x) == z && self.product(x, z) == z))
    }

    fn detect_identity(&self) -> Option<Element> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.product(e, x) == x && self.product(x, e) == x))
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.order()).map(Element::new)
    }

    /// Elements other than the zero (all of them when there is no zero).
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> + Clone + '_ {
        self.elements().filter(move |&e| Some(e) != self.zero)
    }

    /// `S¹`: the adjoined identity first, then every element in index order.
    pub fn unit_elements(&self) -> impl Iterator<Item = UnitExt> + Clone {
        std::iter::once(UnitExt::One).chain(self.elements().map(UnitExt::Elem))
    }

    #[inline]
    pub fn product(&self, s: Element, t: Element) -> Element {
        self.table[s.index() * self.order() + t.index()]
    }

    pub fn unit_product(&self, x: UnitExt, y: UnitExt) -> UnitExt {
        match (x, y) {
            (UnitExt::One, y) => y,
            (x, UnitExt::One) => x,
            (UnitExt::Elem(s), UnitExt::Elem(t)) => UnitExt::Elem(self.product(s, t)),
        }
    }

    /// `x·s` for `x ∈ S¹`.
    #[inline]
    pub fn act_left(&self, x: UnitExt, s: Element) -> Element {
        match x {
            UnitExt::One => s,
            UnitExt::Elem(x) => self.product(x, s),
        }
    }

    /// `s·x` for `x ∈ S¹`.
    #[inline]
    pub fn act_right(&self, s: Element, x: UnitExt) -> Element {
        match x {
            UnitExt::One => s,
            UnitExt::Elem(x) => self.product(s, x),
        }
    }

    pub fn zero(&self) -> Option<Element> {
        self.zero
    }

    #[inline]
    pub fn is_zero(&self, e: Element) -> bool {
        self.zero == Some(e)
    }

    pub fn identity(&self) -> Option<Element> {
        self.identity
    }

    pub fn name(&self, e: Element) -> &str {
        &self.names[e.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n == name).map(Element::new)
    }

    pub fn is_idempotent(&self, e: Element) -> bool {
        self.product(e, e) == e
    }

    /// The opposite semigroup: same elements, `s ∘ t = t·s`.
    ///
    /// Swaps the roles of left and right throughout (L ↔ R).
    pub fn dual(&self) -> Semigroup {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for s in self.elements() {
            for t in self.elements() {
                table.push(self.product(t, s));
            }
        }
        Semigroup {
            names: self.names.clone(),
            table,
            zero: self.zero,
            identity: self.identity,
        }
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for Semigroup {
    type Err = SemigroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semigroup::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_zero_has_no_zero_or_identity() {
        let s = Semigroup::parse("elements: a b\na a\nb b\n").unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.zero(), None);
        assert_eq!(s.identity(), None);
        let (a, b) = (s.element("a").unwrap(), s.element("b").unwrap());
        assert_eq!(s.product(a, b), a);
    }

    #[test]
    fn non_associative_table_reports_triple() {
        // a·a = b, a·b = a: (a·a)·a = b·a = b but a·(a·a) = a·b = a
        let err = Semigroup::parse("elements: a b\nb a\nb a\n").unwrap_err();
        assert_eq!(
            err,
            SemigroupError::Associativity {
                i: "a".into(),
                j: "a".into(),
                k: "a".into(),
                left: "b".into(),
                right: "a".into(),
            }
        );
    }

    #[test]
    fn brandt_zero_detected() {
        let text = "elements: e11 e12 e21 e22 z
e11 e12 z z z
z z e11 e12 z
e21 e22 z z z
z z e21 e22 z
z z z z z";
        let s = Semigroup::parse(text).unwrap();
        assert_eq!(s.order(), 5);
        let z = s.element("z").unwrap();
        assert_eq!(s.zero(), Some(z));
        // brute-force row/column scan: z is the only absorbing element
        for c in s.elements() {
            let absorbing = s.elements().all(|x| s.product(c, x) == c && s.product(x, c) == c);
            assert_eq!(absorbing, c == z);
        }
        let (e12, e21, e11) = (s.element("e12").unwrap(), s.element("e21").unwrap(), s.element("e11").unwrap());
        assert_eq!(s.product(e12, e21), e11);
    }

    #[test]
    fn group_products() {
        let s = Semigroup::parse("elements: e g\ne g\ng e\n").unwrap();
        let (e, g) = (s.element("e").unwrap(), s.element("g").unwrap());
        assert_eq!(s.product(g, g), e);
        assert_eq!(s.identity(), Some(e));
    }

    #[test]
    fn unit_product_laws() {
        let s = Semigroup::parse("elements: a b\na a\nb b\n").unwrap();
        let (a, b) = (s.element("a").unwrap(), s.element("b").unwrap());
        assert_eq!(s.unit_product(UnitExt::One, UnitExt::Elem(a)), UnitExt::Elem(a));
        assert_eq!(s.unit_product(UnitExt::Elem(a), UnitExt::One), UnitExt::Elem(a));
        assert_eq!(s.unit_product(UnitExt::Elem(a), UnitExt::Elem(b)), UnitExt::Elem(s.product(a, b)));
        assert_eq!(s.unit_product(UnitExt::One, UnitExt::One), UnitExt::One);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Semigroup::parse(""), Err(SemigroupError::Parse { .. })));
        assert!(matches!(
            Semigroup::parse("elements: a a\na a\na a"),
            Err(SemigroupError::DuplicateName(_))
        ));
        assert!(matches!(
            Semigroup::parse("elements: a\nb"),
            Err(SemigroupError::UnknownName { line: 2, .. })
        ));
        assert!(matches!(Semigroup::parse("elements: a b\na a"), Err(SemigroupError::Parse { .. })));
        assert!(matches!(Semigroup::parse("elements: 1x\n1x"), Err(SemigroupError::Parse { .. })));
        assert!(matches!(
            Semigroup::parse_with_limit("elements: a b\na a\nb b", 1),
            Err(SemigroupError::TooLarge { order: 2, max: 1 })
        ));
    }

    #[test]
    fn text_round_trip_and_dual() {
        let text = "elements: a b\na a\nb b\n";
        let s = Semigroup::parse(text).unwrap();
        assert_eq!(s.to_text(), text);
        let d = s.dual();
        let (a, b) = (d.element("a").unwrap(), d.element("b").unwrap());
        assert_eq!(d.product(a, b), b);
        assert_eq!(d.dual(), s);
    }
}
