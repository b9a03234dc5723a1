//! Representatives of R- and L-classes.
//!
//! A valid choice makes D-related R-class representatives L-related,
//! D-related L-class representatives R-related, and forces an R-class and an
//! L-class representative that share an H-class to coincide.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::green::{GreenData, Side};
use crate::semigroup::{Element, Semigroup};

/// Chosen representatives, stored per element (`r_s`, `ℓ_s`); the zero has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepChoice {
    r_rep: Vec<Option<Element>>,
    l_rep: Vec<Option<Element>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RepViolation {
    /// A nonzero element has no representative.
    Missing { side: Side, element: Element },
    /// The representative is not in the class it stands for.
    OutsideClass { side: Side, element: Element, rep: Element },
    /// Two members of one class were given different representatives.
    Inconsistent { side: Side, first: Element, second: Element },
    /// D-related R-class representatives that are not L-related (or dually).
    NotAligned { side: Side, first: Element, second: Element },
    /// An R-class and an L-class representative share an H-class but differ.
    SplitHClass { r_rep: Element, l_rep: Element },
}

impl RepViolation {
    pub fn describe(&self, s: &Semigroup) -> String {
        let side_name = |side: &Side| match side {
            Side::L => "L",
            Side::R => "R",
        };
        match self {
            RepViolation::Missing { side, element } => {
                format!("{} has no {}-class representative", s.name(*element), side_name(side))
            }
            RepViolation::OutsideClass { side, element, rep } => format!(
                "{}-rep {} of {} lies outside its class",
                side_name(side),
                s.name(*rep),
                s.name(*element)
            ),
            RepViolation::Inconsistent { side, first, second } => format!(
                "{}-class of {} and {} has two representatives",
                side_name(side),
                s.name(*first),
                s.name(*second)
            ),
            RepViolation::NotAligned { side, first, second } => format!(
                "{}-reps {}, {} not {}-related",
                side_name(side),
                s.name(*first),
                s.name(*second),
                side_name(&side.dual())
            ),
            RepViolation::SplitHClass { r_rep, l_rep } => format!(
                "R-rep {} and L-rep {} in the same H-class but unequal",
                s.name(*r_rep),
                s.name(*l_rep)
            ),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("empty intersection of R-class and L-class inside a D-class (inconsistent Green data)")]
    EmptyIntersection,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: `{rep}` is not in the {side:?}-class of `{member}`")]
    NotInClass {
        line: usize,
        side: Side,
        member: String,
        rep: String,
    },
}

/// Per-D-class anchor: the R-class and L-class whose intersection holds the
/// shared representative.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub r_class: usize,
    pub l_class: usize,
}

impl RepChoice {
    /// Raw constructor; no validation. Entries for the zero are ignored.
    pub fn from_maps(r_rep: Vec<Option<Element>>, l_rep: Vec<Option<Element>>) -> Self {
        RepChoice { r_rep, l_rep }
    }

    /// `r_s`.
    #[inline]
    pub fn r(&self, s: Element) -> Element {
        self.r_rep[s.index()].expect("no R-representative for this element")
    }

    /// `ℓ_s`.
    #[inline]
    pub fn l(&self, s: Element) -> Element {
        self.l_rep[s.index()].expect("no L-representative for this element")
    }

    pub fn rep(&self, side: Side, s: Element) -> Element {
        match side {
            Side::R => self.r(s),
            Side::L => self.l(s),
        }
    }

    pub fn is_r_rep(&self, s: Element) -> bool {
        self.r_rep[s.index()] == Some(s)
    }

    pub fn is_l_rep(&self, s: Element) -> bool {
        self.l_rep[s.index()] == Some(s)
    }

    /// Representatives for the dual semigroup: R-representatives become
    /// L-representatives and vice versa.
    pub fn dual(&self) -> RepChoice {
        RepChoice {
            r_rep: self.l_rep.clone(),
            l_rep: self.r_rep.clone(),
        }
    }

    /// The default choice: per D-class the anchor is the R- and L-class of
    /// the smallest member.
    pub fn choose(s: &Semigroup, g: &GreenData) -> Result<RepChoice, RepError> {
        let anchors = default_anchors(s, g);
        RepChoice::anchored(s, g, &anchors)
    }

    /// Builds the choice from one anchor per nonzero D-class (indexed by
    /// D-class id; the zero's D-class entry is ignored).
    ///
    /// Each R-class takes the smallest member of its intersection with the
    /// anchor L-class, each L-class the smallest member of its intersection
    /// with the anchor R-class.
    pub fn anchored(s: &Semigroup, g: &GreenData, anchors: &[Option<Anchor>]) -> Result<RepChoice, RepError> {
        let n = s.order();
        let mut r_rep = vec![None; n];
        let mut l_rep = vec![None; n];
        for x in s.nonzero_elements() {
            let anchor = anchors[g.d.class_of(x)].ok_or(RepError::EmptyIntersection)?;
            let r = g
                .r
                .members(g.r.class_of(x))
                .iter()
                .copied()
                .find(|&y| g.l.class_of(y) == anchor.l_class)
                .ok_or(RepError::EmptyIntersection)?;
            let l = g
                .l
                .members(g.l.class_of(x))
                .iter()
                .copied()
                .find(|&y| g.r.class_of(y) == anchor.r_class)
                .ok_or(RepError::EmptyIntersection)?;
            r_rep[x.index()] = Some(r);
            l_rep[x.index()] = Some(l);
        }
        Ok(RepChoice { r_rep, l_rep })
    }

    /// Every choice obtainable by varying the anchor H-class in each nonzero
    /// D-class. The count is the product of the D-class H-counts, so only use
    /// this on small semigroups.
    pub fn all_anchored(s: &Semigroup, g: &GreenData) -> Result<Vec<RepChoice>, RepError> {
        let mut options: Vec<Vec<Option<Anchor>>> = Vec::new();
        for d in 0..g.d.len() {
            let members = g.d.members(d);
            if members.iter().any(|&m| s.is_zero(m)) {
                options.push(vec![None]);
                continue;
            }
            let mut hs: Vec<Anchor> = Vec::new();
            for &m in members {
                let a = Anchor {
                    r_class: g.r.class_of(m),
                    l_class: g.l.class_of(m),
                };
                if !hs.contains(&a) {
                    hs.push(a);
                }
            }
            options.push(hs.into_iter().map(Some).collect());
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; options.len()];
        loop {
            let anchors: Vec<Option<Anchor>> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
            out.push(RepChoice::anchored(s, g, &anchors)?);
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return Ok(out);
                }
                idx[k] += 1;
                if idx[k] < options[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    /// Applies override lines `R <member> <rep>` / `L <member> <rep>` on top of
    /// `self`. Membership is checked; the coherence constraints are not (use
    /// [`RepChoice::validate`]).
    pub fn with_overrides(&self, s: &Semigroup, g: &GreenData, text: &str) -> Result<RepChoice, RepError> {
        let mut out = self.clone();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let raw = raw.trim();
            if raw.is_empty() || raw.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = raw.split_whitespace().collect();
            let [kind, member, rep] = toks[..] else {
                return Err(RepError::Parse {
                    line,
                    message: "expected `R|L <member> <rep>`".into(),
                });
            };
            let side = match kind {
                "R" => Side::R,
                "L" => Side::L,
                other => {
                    return Err(RepError::Parse {
                        line,
                        message: format!("unknown class kind `{other}`"),
                    })
                }
            };
            let lookup = |name: &str| {
                s.element(name).ok_or_else(|| RepError::Parse {
                    line,
                    message: format!("unknown element `{name}`"),
                })
            };
            let (m, r) = (lookup(member)?, lookup(rep)?);
            if s.is_zero(m) || !g.equiv(side, m, r) {
                return Err(RepError::NotInClass {
                    line,
                    side,
                    member: member.to_owned(),
                    rep: rep.to_owned(),
                });
            }
            let p = g.partition(side);
            let table = match side {
                Side::R => &mut out.r_rep,
                Side::L => &mut out.l_rep,
            };
            for &x in p.members(p.class_of(m)) {
                table[x.index()] = Some(r);
            }
        }
        Ok(out)
    }

    /// Lists every way this choice breaks the coherence constraints.
    pub fn validate(&self, s: &Semigroup, g: &GreenData) -> Vec<RepViolation> {
        let mut out = Vec::new();
        for side in [Side::R, Side::L] {
            let table = match side {
                Side::R => &self.r_rep,
                Side::L => &self.l_rep,
            };
            for x in s.nonzero_elements() {
                match table[x.index()] {
                    None => out.push(RepViolation::Missing { side, element: x }),
                    Some(rep) if s.is_zero(rep) || !g.equiv(side, x, rep) => {
                        out.push(RepViolation::OutsideClass { side, element: x, rep })
                    }
                    Some(_) => {}
                }
            }
            for x in s.nonzero_elements() {
                for y in s.nonzero_elements() {
                    if x < y && g.equiv(side, x, y) && table[x.index()] != table[y.index()] {
                        out.push(RepViolation::Inconsistent { side, first: x, second: y });
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        // alignment inside D-classes
        for side in [Side::R, Side::L] {
            let p = g.partition(side);
            let reps: Vec<Element> = g
                .nonzero_classes(side)
                .into_iter()
                .map(|c| self.rep(side, p.members(c)[0]))
                .collect();
            for (i, &a) in reps.iter().enumerate() {
                for &b in &reps[i + 1..] {
                    if g.d.same(a, b) && !g.equiv(side.dual(), a, b) {
                        out.push(RepViolation::NotAligned { side, first: a, second: b });
                    }
                }
            }
        }
        let r_reps: Vec<Element> = g.nonzero_classes(Side::R).into_iter().map(|c| self.r(g.r.members(c)[0])).collect();
        let l_reps: Vec<Element> = g.nonzero_classes(Side::L).into_iter().map(|c| self.l(g.l.members(c)[0])).collect();
        for &a in &r_reps {
            for &b in &l_reps {
                if a != b && g.h.same(a, b) {
                    out.push(RepViolation::SplitHClass { r_rep: a, l_rep: b });
                }
            }
        }
        out
    }

    /// A deliberately careless choice that ignores the coherence
    /// constraints: R-representatives alternate between the largest and the
    /// smallest member from one R-class to the next, L-representatives are
    /// the largest member. It may happen to be valid.
    pub fn careless(s: &Semigroup, g: &GreenData) -> RepChoice {
        let n = s.order();
        let mut r_rep = vec![None; n];
        let mut l_rep = vec![None; n];
        let nonzero = |members: &[Element]| -> Vec<Element> { members.iter().copied().filter(|&y| !s.is_zero(y)).collect() };
        for x in s.nonzero_elements() {
            let rc = g.r.class_of(x);
            let rm = nonzero(g.r.members(rc));
            r_rep[x.index()] = if rc.is_multiple_of(2) { rm.iter().copied().max() } else { rm.iter().copied().min() };
            l_rep[x.index()] = nonzero(g.l.members(g.l.class_of(x))).into_iter().max();
        }
        RepChoice { r_rep, l_rep }
    }

    /// Lines in the override-file format describing this choice, one per class.
    pub fn to_override_text(&self, s: &Semigroup, g: &GreenData) -> String {
        let mut out = String::new();
        for (side, tag) in [(Side::R, "R"), (Side::L, "L")] {
            let p = g.partition(side);
            for c in g.nonzero_classes(side) {
                let m = p.members(c)[0];
                out.push_str(&format!("{tag} {} {}\n", s.name(m), s.name(self.rep(side, m))));
            }
        }
        out
    }

    pub fn display<'a>(&'a self, s: &'a Semigroup, g: &'a GreenData) -> impl fmt::Display + 'a {
        struct D<'a>(&'a RepChoice, &'a Semigroup, &'a GreenData);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.to_override_text(self.1, self.2))
            }
        }
        D(self, s, g)
    }
}

fn default_anchors(s: &Semigroup, g: &GreenData) -> Vec<Option<Anchor>> {
    (0..g.d.len())
        .map(|d| {
            let first = g.d.members(d)[0];
            (!s.is_zero(first)).then(|| Anchor {
                r_class: g.r.class_of(first),
                l_class: g.l.class_of(first),
            })
        })
        .collect()
}
