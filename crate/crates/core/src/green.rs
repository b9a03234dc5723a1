//! Green's relations on a finite semigroup, by closure of principal ideals.

use serde::Serialize;

use crate::semigroup::{Element, Semigroup};

/// How two elements compare under one of the one-sided Green preorders.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Less,
    Equivalent,
    Greater,
    Incomparable,
}

/// Which one-sided order a statement is about.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn dual(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }
}

/// A partition of the elements into classes, numbered in order of first
/// appearance (so class ids are deterministic).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<Element>>,
}

impl Partition {
    fn from_equivalence(n: usize, related: impl Fn(usize, usize) -> bool) -> Self {
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<Element>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for j in i..n {
                if class_of[j] == usize::MAX && related(i, j) {
                    class_of[j] = id;
                    members.push(Element::new(j));
                }
            }
            classes.push(members);
        }
        Partition { class_of, classes }
    }

    #[inline]
    pub fn class_of(&self, e: Element) -> usize {
        self.class_of[e.index()]
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn members(&self, class: usize) -> &[Element] {
        &self.classes[class]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    #[inline]
    pub fn same(&self, a: Element, b: Element) -> bool {
        self.class_of(a) == self.class_of(b)
    }
}

/// Green's relations of a finite semigroup.
#[derive(Clone, Debug)]
pub struct GreenData {
    n: usize,
    zero: Option<Element>,
    leq_l: Vec<bool>,
    leq_r: Vec<bool>,
    leq_j: Vec<bool>,
    pub l: Partition,
    pub r: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
}

/// `(s, u, t)` with `s > u < t` on `side` and `s`, `t` incomparable.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbiguityViolation {
    pub upper_left: Element,
    pub lower: Element,
    pub upper_right: Element,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnambiguityWitness {
    pub verdict: bool,
    pub violation: Option<AmbiguityViolation>,
}

impl GreenData {
    pub fn compute(s: &Semigroup) -> Self {
        let n = s.order();
        let mut leq_l = vec![false; n * n];
        let mut leq_r = vec![false; n * n];
        let mut leq_j = vec![false; n * n];
        for t in s.elements() {
            let ti = t.index();
            leq_l[ti * n + ti] = true;
            leq_r[ti * n + ti] = true;
            leq_j[ti * n + ti] = true;
            for x in s.elements() {
                // S¹t and tS¹
                leq_l[s.product(x, t).index() * n + ti] = true;
                leq_r[s.product(t, x).index() * n + ti] = true;
                leq_j[s.product(x, t).index() * n + ti] = true;
                leq_j[s.product(t, x).index() * n + ti] = true;
                for y in s.elements() {
                    leq_j[s.product(s.product(x, t), y).index() * n + ti] = true;
                }
            }
        }
        let l = Partition::from_equivalence(n, |a, b| leq_l[a * n + b] && leq_l[b * n + a]);
        let r = Partition::from_equivalence(n, |a, b| leq_r[a * n + b] && leq_r[b * n + a]);
        let h = Partition::from_equivalence(n, |a, b| {
            l.class_of[a] == l.class_of[b] && r.class_of[a] == r.class_of[b]
        });
        // D = L∘R: a D b iff some c has a L c R b
        let d = Partition::from_equivalence(n, |a, b| {
            (0..n).any(|c| l.class_of[a] == l.class_of[c] && r.class_of[c] == r.class_of[b])
        });
        let j = Partition::from_equivalence(n, |a, b| leq_j[a * n + b] && leq_j[b * n + a]);
        GreenData {
            n,
            zero: s.zero(),
            leq_l,
            leq_r,
            leq_j,
            l,
            r,
            h,
            d,
            j,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `s ≤_L t`: `s ∈ S¹t`.
    #[inline]
    pub fn leq_l(&self, s: Element, t: Element) -> bool {
        self.leq_l[s.index() * self.n + t.index()]
    }

    /// `s ≤_R t`: `s ∈ tS¹`.
    #[inline]
    pub fn leq_r(&self, s: Element, t: Element) -> bool {
        self.leq_r[s.index() * self.n + t.index()]
    }

    #[inline]
    pub fn leq_j(&self, s: Element, t: Element) -> bool {
        self.leq_j[s.index() * self.n + t.index()]
    }

    #[inline]
    pub fn leq(&self, side: Side, s: Element, t: Element) -> bool {
        match side {
            Side::L => self.leq_l(s, t),
            Side::R => self.leq_r(s, t),
        }
    }

    #[inline]
    pub fn lt(&self, side: Side, s: Element, t: Element) -> bool {
        self.leq(side, s, t) && !self.leq(side, t, s)
    }

    #[inline]
    pub fn equiv(&self, side: Side, s: Element, t: Element) -> bool {
        self.leq(side, s, t) && self.leq(side, t, s)
    }

    #[inline]
    pub fn incomparable(&self, side: Side, s: Element, t: Element) -> bool {
        !self.leq(side, s, t) && !self.leq(side, t, s)
    }

    pub fn lt_l(&self, s: Element, t: Element) -> bool {
        self.lt(Side::L, s, t)
    }

    pub fn lt_r(&self, s: Element, t: Element) -> bool {
        self.lt(Side::R, s, t)
    }

    pub fn equiv_l(&self, s: Element, t: Element) -> bool {
        self.equiv(Side::L, s, t)
    }

    pub fn equiv_r(&self, s: Element, t: Element) -> bool {
        self.equiv(Side::R, s, t)
    }

    pub fn incomp_l(&self, s: Element, t: Element) -> bool {
        self.incomparable(Side::L, s, t)
    }

    pub fn incomp_r(&self, s: Element, t: Element) -> bool {
        self.incomparable(Side::R, s, t)
    }

    /// Where `s` sits relative to `t` on the given side.
    pub fn compare(&self, side: Side, s: Element, t: Element) -> Comparison {
        match (self.leq(side, s, t), self.leq(side, t, s)) {
            (true, true) => Comparison::Equivalent,
            (true, false) => Comparison::Less,
            (false, true) => Comparison::Greater,
            (false, false) => Comparison::Incomparable,
        }
    }

    pub fn partition(&self, side: Side) -> &Partition {
        match side {
            Side::L => &self.l,
            Side::R => &self.r,
        }
    }

    /// Strict order on classes of one side, read off any class members.
    pub fn class_lt(&self, side: Side, c1: usize, c2: usize) -> bool {
        let p = self.partition(side);
        self.lt(side, p.members(c1)[0], p.members(c2)[0])
    }

    /// Classes of one side that do not contain the zero.
    pub fn nonzero_classes(&self, side: Side) -> Vec<usize> {
        let p = self.partition(side);
        (0..p.len())
            .filter(|&c| self.zero.is_none_or(|z| p.class_of(z) != c))
            .collect()
    }

    /// Covering pairs `(lower, upper)` of the strict class order on `S − {0}`.
    pub fn class_covers(&self, side: Side) -> Vec<(usize, usize)> {
        let classes = self.nonzero_classes(side);
        let mut covers = Vec::new();
        for &a in &classes {
            for &b in &classes {
                if self.class_lt(side, a, b)
                    && !classes
                        .iter()
                        .any(|&c| self.class_lt(side, a, c) && self.class_lt(side, c, b))
                {
                    covers.push((a, b));
                }
            }
        }
        covers
    }

    /// Decides whether the strict L- and R-orders above each nonzero element
    /// are chains; the zero, when present, is left out of every triple.
    pub fn is_unambiguous(&self) -> UnambiguityWitness {
        let nonzero: Vec<Element> = (0..self.n)
            .map(Element::new)
            .filter(|&e| Some(e) != self.zero)
            .collect();
        for side in [Side::L, Side::R] {
            for &u in &nonzero {
                let above: Vec<Element> = nonzero.iter().copied().filter(|&s| self.lt(side, u, s)).collect();
                for (i, &s) in above.iter().enumerate() {
                    for &t in &above[i + 1..] {
                        if self.incomparable(side, s, t) {
                            return UnambiguityWitness {
                                verdict: false,
                                violation: Some(AmbiguityViolation {
                                    upper_left: s,
                                    lower: u,
                                    upper_right: t,
                                    side,
                                }),
                            };
                        }
                    }
                }
            }
        }
        UnambiguityWitness {
            verdict: true,
            violation: None,
        }
    }

    /// Swaps the L and R data; this is the Green structure of the dual semigroup.
    pub fn dual(&self) -> GreenData {
        GreenData {
            n: self.n,
            zero: self.zero,
            leq_l: self.leq_r.clone(),
            leq_r: self.leq_l.clone(),
            leq_j: self.leq_j.clone(),
            l: self.r.clone(),
            r: self.l.clone(),
            h: self.h.clone(),
            d: self.d.clone(),
            j: self.j.clone(),
        }
    }
}

/// `s` is regular iff `s·x·s = s` for some `x ∈ S`.
pub fn is_regular_element(sg: &Semigroup, s: Element) -> bool {
    sg.elements().any(|x| sg.product(sg.product(s, x), s) == s)
}
