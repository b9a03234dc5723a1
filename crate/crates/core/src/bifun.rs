//! The partial functions `B`, `B_R` and `B_L`, computed by witness search
//! over `S¹`.
//!
//! For `u ≤_L v ≥_R w`, `B(u, v, w) = u·z` for any `z` with `w = v·z`.
//! For `v ≤_L u`, `B_R(u, v) = x·r_u` for any `x` with `v = x·u`.
//! For `v ≤_R u`, `B_L(v, u) = ℓ_u·y` for any `y` with `v = u·y`.
//! None of them depends on the witness picked.

use thiserror::Error;

use crate::representatives::RepChoice;
use crate::semigroup::{Element, Semigroup, UnitExt};

/// Which equation a witness solves.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WitnessRole {
    /// `w = v·z`
    Right,
    /// `u = y·v`
    Left,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub value: UnitExt,
    pub role: WitnessRole,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("argument {0} is the zero")]
    ZeroArgument(&'static str),
    #[error("precondition {0} does not hold")]
    Relation(&'static str),
}

/// Some `z ∈ S¹` with `w = v·z`, preferring `One`, then the smallest index.
pub fn witness_right(s: &Semigroup, v: Element, w: Element) -> Option<Witness> {
    s.unit_elements()
        .find(|&z| s.act_right(v, z) == w)
        .map(|value| Witness {
            value,
            role: WitnessRole::Right,
        })
}

/// Some `y ∈ S¹` with `u = y·v`, same preference order.
pub fn witness_left(s: &Semigroup, v: Element, u: Element) -> Option<Witness> {
    s.unit_elements()
        .find(|&y| s.act_left(y, v) == u)
        .map(|value| Witness {
            value,
            role: WitnessRole::Left,
        })
}

/// All right witnesses `z` with `w = v·z`.
pub fn right_witnesses(s: &Semigroup, v: Element, w: Element) -> impl Iterator<Item = UnitExt> + '_ {
    s.unit_elements().filter(move |&z| s.act_right(v, z) == w)
}

/// All left witnesses `y` with `u = y·v`.
pub fn left_witnesses(s: &Semigroup, v: Element, u: Element) -> impl Iterator<Item = UnitExt> + '_ {
    s.unit_elements().filter(move |&y| s.act_left(y, v) == u)
}

fn nonzero(s: &Semigroup, e: Element, name: &'static str) -> Result<(), DomainError> {
    if s.is_zero(e) {
        Err(DomainError::ZeroArgument(name))
    } else {
        Ok(())
    }
}

/// `B(u, v, w)`, defined when `u ≤_L v ≥_R w` with all three nonzero.
pub fn b3(s: &Semigroup, u: Element, v: Element, w: Element) -> Result<Element, DomainError> {
    nonzero(s, u, "u")?;
    nonzero(s, v, "v")?;
    nonzero(s, w, "w")?;
    witness_left(s, v, u).ok_or(DomainError::Relation("u ≤_L v"))?;
    let z = witness_right(s, v, w).ok_or(DomainError::Relation("w ≤_R v"))?;
    Ok(s.act_right(u, z.value))
}

/// `B_R(u, v)`, defined when `v ≤_L u` with both nonzero.
pub fn b_r(s: &Semigroup, rc: &RepChoice, u: Element, v: Element) -> Result<Element, DomainError> {
    nonzero(s, u, "u")?;
    nonzero(s, v, "v")?;
    let x = witness_left(s, u, v).ok_or(DomainError::Relation("v ≤_L u"))?;
    Ok(s.act_left(x.value, rc.r(u)))
}

/// `B_L(v, u)`, defined when `v ≤_R u` with both nonzero.
pub fn b_l(s: &Semigroup, rc: &RepChoice, v: Element, u: Element) -> Result<Element, DomainError> {
    nonzero(s, u, "u")?;
    nonzero(s, v, "v")?;
    let y = witness_right(s, u, v).ok_or(DomainError::Relation("v ≤_R u"))?;
    Ok(s.act_right(rc.l(u), y.value))
}

/// Dense lookup tables for `B`, `B_R` and `B_L`, filled once by witness search.
#[derive(Clone, Debug)]
pub struct BTables {
    n: usize,
    b3: Vec<Option<Element>>,
    b_r: Vec<Option<Element>>,
    b_l: Vec<Option<Element>>,
}

impl BTables {
    pub fn build(s: &Semigroup, rc: &RepChoice) -> Self {
        let n = s.order();
        let mut b3_t = vec![None; n * n * n];
        let mut br_t = vec![None; n * n];
        let mut bl_t = vec![None; n * n];
        for u in s.nonzero_elements() {
            for v in s.nonzero_elements() {
                br_t[u.index() * n + v.index()] = b_r(s, rc, u, v).ok();
                bl_t[v.index() * n + u.index()] = b_l(s, rc, v, u).ok();
                for w in s.nonzero_elements() {
                    b3_t[(u.index() * n + v.index()) * n + w.index()] = b3(s, u, v, w).ok();
                }
            }
        }
        BTables {
            n,
            b3: b3_t,
            b_r: br_t,
            b_l: bl_t,
        }
    }

    #[inline]
    pub fn b3(&self, u: Element, v: Element, w: Element) -> Option<Element> {
        self.b3[(u.index() * self.n + v.index()) * self.n + w.index()]
    }

    #[inline]
    pub fn b_r(&self, u: Element, v: Element) -> Option<Element> {
        self.b_r[u.index() * self.n + v.index()]
    }

    #[inline]
    pub fn b_l(&self, v: Element, u: Element) -> Option<Element> {
        self.b_l[v.index() * self.n + u.index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::GreenData;

    fn setup(text: &str) -> (Semigroup, GreenData, RepChoice) {
        let s = Semigroup::parse(text).unwrap();
        let g = GreenData::compute(&s);
        let rc = RepChoice::choose(&s, &g).unwrap();
        (s, g, rc)
    }

    const LZ2: &str = "elements: a b\na a\nb b";
    const C2: &str = "elements: e g\ne g\ng e";

    #[test]
    fn witness_preference() {
        let (s, _, _) = setup(LZ2);
        let b = s.element("b").unwrap();
        assert_eq!(witness_right(&s, b, b).unwrap().value, UnitExt::One);
        let (s, _, _) = setup(C2);
        let (e, g) = (s.element("e").unwrap(), s.element("g").unwrap());
        assert_eq!(witness_right(&s, g, e).unwrap().value, UnitExt::Elem(g));
        assert_eq!(witness_right(&s, g, g).unwrap().value, UnitExt::One);
    }

    #[test]
    fn b3_examples() {
        let (s, _, _) = setup(LZ2);
        let (a, b) = (s.element("a").unwrap(), s.element("b").unwrap());
        assert_eq!(b3(&s, a, a, a), Ok(a));
        assert_eq!(b3(&s, b, a, a), Ok(b));
        // every valid z gives the same answer
        for z in right_witnesses(&s, a, a) {
            assert_eq!(s.act_right(b, z), b);
        }
        assert_eq!(b3(&s, a, a, b), Err(DomainError::Relation("w ≤_R v")));

        let (s, _, _) = setup(C2);
        let (e, g) = (s.element("e").unwrap(), s.element("g").unwrap());
        let inv = |x: Element| if x == e { e } else { g };
        for u in [e, g] {
            for v in [e, g] {
                for w in [e, g] {
                    let expect = s.product(s.product(u, inv(v)), w);
                    assert_eq!(b3(&s, u, v, w), Ok(expect));
                }
            }
        }
        assert_eq!(b3(&s, g, g, g), Ok(g));
    }

    #[test]
    fn b_r_and_b_l_examples() {
        let (s, _, rc) = setup(C2);
        let (e, g) = (s.element("e").unwrap(), s.element("g").unwrap());
        for x in [e, g] {
            assert_eq!(b_r(&s, &rc, g, x), Ok(s.product(x, g)));
            assert_eq!(b_l(&s, &rc, x, g), Ok(s.product(g, x)));
            assert_eq!(b_r(&s, &rc, rc.r(g), x), Ok(x));
            assert_eq!(b_l(&s, &rc, x, rc.l(g)), Ok(x));
        }

        let (s, _, rc) = setup(LZ2);
        let (a, b) = (s.element("a").unwrap(), s.element("b").unwrap());
        assert_eq!(b_r(&s, &rc, b, a), Ok(a));
        assert_eq!(b_l(&s, &rc, b, b), Ok(a));
        assert_eq!(b_l(&s, &rc, a, b), Err(DomainError::Relation("v ≤_R u")));
    }

    #[test]
    fn zero_arguments_rejected() {
        let (s, _, rc) = setup("elements: a a2 z\na2 z z\nz z z\nz z z");
        let (a, a2, z) = (s.element("a").unwrap(), s.element("a2").unwrap(), s.element("z").unwrap());
        assert_eq!(b3(&s, z, a, a), Err(DomainError::ZeroArgument("u")));
        assert_eq!(b_r(&s, &rc, a, z), Err(DomainError::ZeroArgument("v")));
        // a nonzero triple may still produce the zero
        assert_eq!(b3(&s, a2, a, a2), Ok(z));
    }

    #[test]
    fn tables_agree_with_search() {
        let (s, _, rc) = setup("elements: e11 e12 e21 e22 z\ne11 e12 z z z\nz z e11 e12 z\ne21 e22 z z z\nz z e21 e22 z\nz z z z z");
        let t = BTables::build(&s, &rc);
        for u in s.elements() {
            for v in s.elements() {
                assert_eq!(t.b_r(u, v), b_r(&s, &rc, u, v).ok());
                assert_eq!(t.b_l(u, v), b_l(&s, &rc, u, v).ok());
                for w in s.elements() {
                    assert_eq!(t.b3(u, v, w), b3(&s, u, v, w).ok());
                }
            }
        }
    }
}
