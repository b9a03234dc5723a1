//! String rewriting for the regular cover.
//!
//! Words are strings over `S − {0}`, its barred copy, and a zero symbol.
//! Rules 1.1–1.6 shorten a word; rules 2.1–2.4 keep its length and move
//! symbols towards the chosen class representatives.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bifun::BTables;
use crate::green::{AmbiguityViolation, Comparison, GreenData, Side};
use crate::representatives::{RepChoice, RepError, RepViolation};
use crate::semigroup::{Element, Semigroup};

/// A letter of a word. `Plain` and `Bar` never carry the zero of `S`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    Zero,
    Plain(Element),
    Bar(Element),
}

impl Sym {
    /// `s`, or `0` when `s` is the zero of `S`.
    #[inline]
    pub fn plain(sg: &Semigroup, s: Element) -> Sym {
        if sg.is_zero(s) {
            Sym::Zero
        } else {
            Sym::Plain(s)
        }
    }

    /// `s̄`, or `0` when `s` is the zero of `S`.
    #[inline]
    pub fn bar(sg: &Semigroup, s: Element) -> Sym {
        if sg.is_zero(s) {
            Sym::Zero
        } else {
            Sym::Bar(s)
        }
    }

    /// Swaps `s` and `s̄`; `0` is fixed.
    pub fn inverted(self) -> Sym {
        match self {
            Sym::Zero => Sym::Zero,
            Sym::Plain(s) => Sym::Bar(s),
            Sym::Bar(s) => Sym::Plain(s),
        }
    }

    pub fn element(self) -> Option<Element> {
        match self {
            Sym::Zero => None,
            Sym::Plain(s) | Sym::Bar(s) => Some(s),
        }
    }

    /// The full alphabet of `S`: `0`, then every `s`, then every `s̄`.
    pub fn alphabet(sg: &Semigroup) -> Vec<Sym> {
        std::iter::once(Sym::Zero)
            .chain(sg.nonzero_elements().map(Sym::Plain))
            .chain(sg.nonzero_elements().map(Sym::Bar))
            .collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("empty word")]
    Empty,
    #[error("unknown element `{0}` in word")]
    UnknownElement(String),
}

/// A finite string of symbols.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Sym>);

impl Word {
    pub fn new(syms: Vec<Sym>) -> Self {
        Word(syms)
    }

    pub fn single(sym: Sym) -> Self {
        Word(vec![sym])
    }

    pub fn syms(&self) -> &[Sym] {
        &self.0
    }

    pub fn into_syms(self) -> Vec<Sym> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reverses the word and swaps barred and plain symbols.
    pub fn involution(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.inverted()).collect())
    }

    /// Parses whitespace-separated tokens: `0` is the zero, `a` a plain
    /// symbol and `a'` a barred one. Names of the zero of `S` map to `0`.
    pub fn parse(sg: &Semigroup, text: &str) -> Result<Word, WordError> {
        let mut syms = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "0" {
                syms.push(Sym::Zero);
                continue;
            }
            let (name, barred) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let e = sg.element(name).ok_or_else(|| WordError::UnknownElement(name.to_owned()))?;
            syms.push(if barred { Sym::bar(sg, e) } else { Sym::plain(sg, e) });
        }
        if syms.is_empty() {
            return Err(WordError::Empty);
        }
        Ok(Word(syms))
    }

    pub fn display<'a>(&'a self, sg: &'a Semigroup) -> WordDisplay<'a> {
        WordDisplay { word: self, sg }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    sg: &'a Semigroup,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match s {
                Sym::Zero => f.write_str("0")?,
                Sym::Plain(e) => f.write_str(self.sg.name(*e))?,
                Sym::Bar(e) => write!(f, "{}'", self.sg.name(*e))?,
            }
        }
        Ok(())
    }
}

/// The rules, declared in tie-break priority order (highest first).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    R12,
    R13,
    R14,
    R11P,
    R11B,
    R15,
    R16,
    R21,
    R22,
    R23,
    R24,
}

impl RuleId {
    pub const ALL: [RuleId; 11] = [
        RuleId::R12,
        RuleId::R13,
        RuleId::R14,
        RuleId::R11P,
        RuleId::R11B,
        RuleId::R15,
        RuleId::R16,
        RuleId::R21,
        RuleId::R22,
        RuleId::R23,
        RuleId::R24,
    ];

    pub fn width(self) -> usize {
        match self {
            RuleId::R15 | RuleId::R16 => 3,
            _ => 2,
        }
    }

    pub fn is_length_preserving(self) -> bool {
        matches!(self, RuleId::R21 | RuleId::R22 | RuleId::R23 | RuleId::R24)
    }

    pub fn label(self) -> &'static str {
        match self {
            RuleId::R11P => "1.1",
            RuleId::R11B => "1.1'",
            RuleId::R12 => "1.2",
            RuleId::R13 => "1.3",
            RuleId::R14 => "1.4",
            RuleId::R15 => "1.5",
            RuleId::R16 => "1.6",
            RuleId::R21 => "2.1",
            RuleId::R22 => "2.2",
            RuleId::R23 => "2.3",
            RuleId::R24 => "2.4",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A rule instance: `rule` matches the factor starting at `position`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Redex {
    pub position: usize,
    pub rule: RuleId,
    pub width: usize,
}

impl Redex {
    pub fn new(position: usize, rule: RuleId) -> Self {
        Redex {
            position,
            rule,
            width: rule.width(),
        }
    }

    pub fn end(&self) -> usize {
        self.position + self.width
    }

    pub fn overlaps(&self, other: &Redex) -> bool {
        self.position < other.end() && other.position < self.end()
    }
}

/// One rewrite step and the word it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub redex: Redex,
    pub result: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub normal_form: Word,
    /// Empty when the trace was not requested.
    pub trace: Vec<Step>,
    pub steps: usize,
}

/// How `reduce` picks among the redexes of a word.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Strategy {
    /// Smallest position, ties broken by rule priority.
    Leftmost,
    /// Largest position, ties broken by rule priority.
    Rightmost,
    /// Uniformly random redex from a seeded generator.
    Random { seed: u64 },
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Leftmost => f.write_str("leftmost"),
            Strategy::Rightmost => f.write_str("rightmost"),
            Strategy::Random { seed } => write!(f, "random:{seed}"),
        }
    }
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "leftmost" | "deterministic" => Ok(Strategy::Leftmost),
            "rightmost" => Ok(Strategy::Rightmost),
            _ => match s.strip_prefix("random:").or_else(|| s.strip_prefix("random=")) {
                Some(seed) => seed
                    .parse()
                    .map(|seed| Strategy::Random { seed })
                    .map_err(|_| format!("bad seed in `{s}`")),
                None if s == "random" => Ok(Strategy::Random { seed: 0 }),
                None => Err(format!("unknown strategy `{s}` (leftmost, rightmost, random:<seed>)")),
            },
        }
    }
}

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error("semigroup is not unambiguous")]
    Ambiguous(AmbiguityViolation),
    #[error("invalid representative choice ({} violations)", .0.len())]
    InvalidReps(Vec<RepViolation>),
    #[error(transparent)]
    Reps(#[from] RepError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("empty word")]
    EmptyWord,
    #[error("redex {0:?} does not match the word")]
    StaleRedex(Redex),
    #[error("step cap of {cap} exceeded")]
    StepCap { cap: usize, trace: Vec<Step> },
}

/// Knobs for building a [`RewriteSystem`].
#[derive(Clone, Debug, Default)]
pub struct SystemOptions {
    /// Accept semigroups that are not unambiguous.
    pub allow_ambiguous: bool,
    /// Accept representative choices that fail validation.
    pub allow_invalid_reps: bool,
    /// Fixed step cap; `None` uses `4·len²·|S|²`.
    pub step_cap: Option<usize>,
}

/// The rewrite system of one semigroup with one representative choice.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    semigroup: Semigroup,
    green: GreenData,
    reps: RepChoice,
    tables: BTables,
    options: SystemOptions,
    authoritative: bool,
}

/// What connects two adjacent positions, as seen by the length-preserving rules.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Link {
    /// A zero, two symbols of the same kind, or an incomparable pair.
    Break,
    /// `(s, t̄)` compared under L, or `(s̄, t)` compared under R.
    Ordered(Comparison),
}

impl RewriteSystem {
    /// Unambiguous semigroup, default representatives.
    pub fn new(semigroup: Semigroup) -> Result<Self, RewriteError> {
        Self::with_options(semigroup, None, SystemOptions::default())
    }

    pub fn with_options(
        semigroup: Semigroup,
        reps: Option<RepChoice>,
        options: SystemOptions,
    ) -> Result<Self, RewriteError> {
        let green = GreenData::compute(&semigroup);
        let unamb = green.is_unambiguous();
        if !unamb.verdict && !options.allow_ambiguous {
            return Err(RewriteError::Ambiguous(unamb.violation.expect("violation present")));
        }
        let reps = match reps {
            Some(r) => r,
            None => RepChoice::choose(&semigroup, &green)?,
        };
        let violations = reps.validate(&semigroup, &green);
        let incomplete = violations
            .iter()
            .any(|v| matches!(v, RepViolation::Missing { .. } | RepViolation::OutsideClass { .. }));
        if incomplete || (!violations.is_empty() && !options.allow_invalid_reps) {
            return Err(RewriteError::InvalidReps(violations));
        }
        let tables = BTables::build(&semigroup, &reps);
        Ok(RewriteSystem {
            authoritative: unamb.verdict && violations.is_empty(),
            semigroup,
            green,
            reps,
            tables,
            options,
        })
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    pub fn green(&self) -> &GreenData {
        &self.green
    }

    pub fn reps(&self) -> &RepChoice {
        &self.reps
    }

    pub fn tables(&self) -> &BTables {
        &self.tables
    }

    /// Unambiguous input and a valid representative choice.
    pub fn is_authoritative(&self) -> bool {
        self.authoritative
    }

    /// Same semigroup, different representatives.
    pub fn with_reps(&self, reps: RepChoice, allow_invalid: bool) -> Result<RewriteSystem, RewriteError> {
        let options = SystemOptions {
            allow_invalid_reps: allow_invalid,
            ..self.options.clone()
        };
        RewriteSystem::with_options(self.semigroup.clone(), Some(reps), options)
    }

    pub fn step_cap(&self, len: usize) -> usize {
        self.options.step_cap.unwrap_or_else(|| {
            let n = self.semigroup.order();
            (4 * len * len * n * n).max(16)
        })
    }

    pub fn alphabet(&self) -> Vec<Sym> {
        Sym::alphabet(&self.semigroup)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        Word::parse(&self.semigroup, text)
    }

    /// The link between two adjacent symbols.
    pub fn link(&self, a: Sym, b: Sym) -> Link {
        let cmp = match (a, b) {
            (Sym::Plain(s), Sym::Bar(t)) => self.green.compare(Side::L, s, t),
            (Sym::Bar(s), Sym::Plain(t)) => self.green.compare(Side::R, s, t),
            _ => return Link::Break,
        };
        if cmp == Comparison::Incomparable {
            Link::Break
        } else {
            Link::Ordered(cmp)
        }
    }

    /// Rules matching the factor starting at `i`, in priority order.
    fn rules_at(&self, w: &[Sym], i: usize, out: &mut Vec<RuleId>) {
        let g = &self.green;
        let rc = &self.reps;
        if i + 1 < w.len() {
            match (w[i], w[i + 1]) {
                (Sym::Zero, _) | (_, Sym::Zero) => out.push(RuleId::R12),
                (Sym::Plain(_), Sym::Plain(_)) => out.push(RuleId::R11P),
                (Sym::Bar(_), Sym::Bar(_)) => out.push(RuleId::R11B),
                (Sym::Plain(s), Sym::Bar(t)) => {
                    if g.incomp_l(s, t) {
                        out.push(RuleId::R13);
                    }
                }
                (Sym::Bar(s), Sym::Plain(t)) => {
                    if g.incomp_r(s, t) {
                        out.push(RuleId::R14);
                    }
                }
            }
        }
        if i + 2 < w.len() {
            match (w[i], w[i + 1], w[i + 2]) {
                (Sym::Plain(u), Sym::Bar(v), Sym::Plain(w3)) if g.leq_l(u, v) && g.leq_r(w3, v) => {
                    out.push(RuleId::R15)
                }
                (Sym::Bar(u), Sym::Plain(v), Sym::Bar(w3)) if g.leq_r(u, v) && g.leq_l(w3, v) => {
                    out.push(RuleId::R16)
                }
                _ => {}
            }
        }
        if i + 1 < w.len() {
            match (w[i], w[i + 1]) {
                (Sym::Plain(s), Sym::Bar(t)) => {
                    if g.lt_l(t, s) && s != rc.r(s) {
                        out.push(RuleId::R21);
                    }
                    // (t, s̄) with t ≤_L s
                    if g.leq_l(s, t) && t != rc.r(t) {
                        out.push(RuleId::R24);
                    }
                }
                (Sym::Bar(s), Sym::Plain(t)) => {
                    if g.lt_r(t, s) && s != rc.l(s) {
                        out.push(RuleId::R22);
                    }
                    // (t̄, s) with t ≤_R s
                    if g.leq_r(s, t) && t != rc.l(t) {
                        out.push(RuleId::R23);
                    }
                }
                _ => {}
            }
        }
    }

    /// Every redex of `w`, sorted by position then priority.
    pub fn find_redexes(&self, w: &Word) -> Vec<Redex> {
        let mut out = Vec::new();
        let mut rules = Vec::with_capacity(4);
        for i in 0..w.len() {
            rules.clear();
            self.rules_at(&w.0, i, &mut rules);
            out.extend(rules.iter().map(|&r| Redex::new(i, r)));
        }
        out
    }

    fn first_redex(&self, w: &[Sym], rightmost: bool) -> Option<Redex> {
        let mut rules = Vec::with_capacity(4);
        let mut probe = |i: usize| {
            rules.clear();
            self.rules_at(w, i, &mut rules);
            rules.first().map(|&r| Redex::new(i, r))
        };
        if rightmost {
            (0..w.len()).rev().find_map(&mut probe)
        } else {
            (0..w.len()).find_map(&mut probe)
        }
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.first_redex(&w.0, false).is_none()
    }

    /// The right-hand side of `rule` applied at `pos`; assumes it matches.
    fn rhs(&self, w: &[Sym], pos: usize, rule: RuleId) -> Vec<Sym> {
        let sg = &self.semigroup;
        let t = &self.tables;
        let rc = &self.reps;
        let el = |k: usize| w[pos + k].element().expect("nonzero symbol");
        match rule {
            RuleId::R11P => vec![Sym::plain(sg, sg.product(el(0), el(1)))],
            RuleId::R11B => vec![Sym::bar(sg, sg.product(el(1), el(0)))],
            RuleId::R12 | RuleId::R13 | RuleId::R14 => vec![Sym::Zero],
            RuleId::R15 => {
                let b = t.b3(el(0), el(1), el(2)).expect("B defined");
                vec![Sym::plain(sg, b)]
            }
            RuleId::R16 => {
                let b = t.b3(el(2), el(1), el(0)).expect("B defined");
                vec![Sym::bar(sg, b)]
            }
            RuleId::R21 => {
                let (s, tt) = (el(0), el(1));
                vec![Sym::plain(sg, rc.r(s)), Sym::bar(sg, t.b_r(s, tt).expect("B_R defined"))]
            }
            RuleId::R22 => {
                let (s, tt) = (el(0), el(1));
                vec![Sym::bar(sg, rc.l(s)), Sym::plain(sg, t.b_l(tt, s).expect("B_L defined"))]
            }
            RuleId::R23 => {
                let (tt, s) = (el(0), el(1));
                vec![Sym::bar(sg, t.b_l(tt, s).expect("B_L defined")), Sym::plain(sg, rc.l(s))]
            }
            RuleId::R24 => {
                let (tt, s) = (el(0), el(1));
                vec![Sym::plain(sg, t.b_r(s, tt).expect("B_R defined")), Sym::bar(sg, rc.r(s))]
            }
        }
    }

    fn splice(&self, w: &[Sym], rx: Redex) -> Word {
        let rhs = self.rhs(w, rx.position, rx.rule);
        let mut out = Vec::with_capacity(w.len() - rx.width + rhs.len());
        out.extend_from_slice(&w[..rx.position]);
        out.extend(rhs);
        out.extend_from_slice(&w[rx.end()..]);
        Word(out)
    }

    /// Applies one redex; fails when it no longer matches `w`.
    pub fn apply_redex(&self, w: &Word, rx: Redex) -> Result<Word, RewriteError> {
        if rx.width != rx.rule.width() || rx.end() > w.len() {
            return Err(RewriteError::StaleRedex(rx));
        }
        let mut rules = Vec::with_capacity(4);
        self.rules_at(&w.0, rx.position, &mut rules);
        if !rules.contains(&rx.rule) {
            return Err(RewriteError::StaleRedex(rx));
        }
        Ok(self.splice(&w.0, rx))
    }

    /// Reduces with the default (leftmost, priority) strategy, recording every step.
    pub fn reduce(&self, w: &Word) -> Result<Reduction, RewriteError> {
        self.reduce_with(w, Strategy::Leftmost)
    }

    pub fn reduce_with(&self, w: &Word, strategy: Strategy) -> Result<Reduction, RewriteError> {
        self.run(w, strategy, true)
    }

    /// The normal form alone, without keeping a trace.
    pub fn normal_form(&self, w: &Word) -> Result<Word, RewriteError> {
        self.run(w, Strategy::Leftmost, false).map(|r| r.normal_form)
    }

    /// The normal form and the number of steps taken, without a trace.
    pub fn normal_form_counted(&self, w: &Word, strategy: Strategy) -> Result<(Word, usize), RewriteError> {
        self.run(w, strategy, false).map(|r| (r.normal_form, r.steps))
    }

    fn run(&self, w: &Word, strategy: Strategy, keep_trace: bool) -> Result<Reduction, RewriteError> {
        if w.is_empty() {
            return Err(RewriteError::EmptyWord);
        }
        let cap = self.step_cap(w.len());
        let mut rng = match strategy {
            Strategy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut current = w.clone();
        let mut trace = Vec::new();
        let mut steps = 0usize;
        loop {
            let next = match (&mut rng, strategy) {
                (Some(rng), _) => {
                    let all = self.find_redexes(&current);
                    all.choose(rng).copied()
                }
                (None, Strategy::Rightmost) => self.first_redex(&current.0, true),
                (None, _) => self.first_redex(&current.0, false),
            };
            let Some(rx) = next else {
                return Ok(Reduction {
                    normal_form: current,
                    trace,
                    steps,
                });
            };
            if steps == cap {
                return Err(RewriteError::StepCap { cap, trace });
            }
            steps += 1;
            current = self.splice(&current.0, rx);
            if keep_trace {
                trace.push(Step {
                    redex: rx,
                    result: current.clone(),
                });
            }
        }
    }

    /// Whether `w` has the shape of a normal form: `(0)`, a single symbol, or
    /// an alternating zero-free word around a centre position, strictly
    /// descending into it from the left, with one non-strict step out of it
    /// and strictly ascending afterwards, every non-centre symbol being the
    /// appropriate representative.
    pub fn is_normal_shape(&self, w: &Word) -> bool {
        let syms = &w.0;
        match syms.len() {
            0 => return false,
            1 => return true,
            _ => {}
        }
        let mut links = Vec::with_capacity(syms.len() - 1);
        for pair in syms.windows(2) {
            match self.link(pair[0], pair[1]) {
                Link::Ordered(c) => links.push(c),
                Link::Break => return false,
            }
        }
        let centre = links
            .iter()
            .position(|&c| c != Comparison::Greater)
            .unwrap_or(links.len());
        for (i, &c) in links.iter().enumerate().skip(centre) {
            let ok = if i == centre {
                matches!(c, Comparison::Less | Comparison::Equivalent)
            } else {
                c == Comparison::Less
            };
            if !ok {
                return false;
            }
        }
        let rc = &self.reps;
        syms.iter().enumerate().all(|(j, &sym)| {
            if j == centre {
                return true;
            }
            match (sym, j < centre) {
                (Sym::Plain(s), true) | (Sym::Bar(s), false) => rc.is_r_rep(s),
                (Sym::Bar(s), true) | (Sym::Plain(s), false) => rc.is_l_rep(s),
                (Sym::Zero, _) => false,
            }
        })
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        w.display(&self.semigroup)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(text: &str) -> RewriteSystem {
        RewriteSystem::new(Semigroup::parse(text).unwrap()).unwrap()
    }

    const LZ2: &str = "elements: a b\na a\nb b";
    const C2: &str = "elements: e g\ne g\ng e";

    fn w(s: &RewriteSystem, text: &str) -> Word {
        s.parse_word(text).unwrap()
    }

    #[test]
    fn word_syntax() {
        let s = sys(LZ2);
        let word = w(&s, "a b' 0");
        assert_eq!(word.len(), 3);
        assert_eq!(s.display_word(&word).to_string(), "a b' 0");
        assert_eq!(s.parse_word("  "), Err(WordError::Empty));
        assert_eq!(s.parse_word("q"), Err(WordError::UnknownElement("q".into())));
    }

    #[test]
    fn zero_of_s_is_the_zero_symbol() {
        let s = sys("elements: a a2 z\na2 z z\nz z z\nz z z");
        assert_eq!(w(&s, "z"), Word::single(Sym::Zero));
        assert_eq!(w(&s, "z'"), Word::single(Sym::Zero));
        // a·a2 = z
        assert_eq!(s.normal_form(&w(&s, "a a2")).unwrap(), Word::single(Sym::Zero));
    }

    #[test]
    fn left_zero_redexes() {
        let s = sys(LZ2);
        assert_eq!(s.find_redexes(&w(&s, "b' b")), vec![Redex::new(0, RuleId::R23)]);
        assert_eq!(s.find_redexes(&w(&s, "a' b")), vec![Redex::new(0, RuleId::R14)]);
        assert!(s.find_redexes(&w(&s, "a b a'")).contains(&Redex::new(0, RuleId::R11P)));
        for name in ["a", "b"] {
            let word = w(&s, &format!("{name} {name}' {name}"));
            assert!(s.find_redexes(&word).contains(&Redex::new(0, RuleId::R15)));
        }
    }

    #[test]
    fn apply_examples() {
        let s = sys(LZ2);
        assert_eq!(s.apply_redex(&w(&s, "a b"), Redex::new(0, RuleId::R11P)).unwrap(), w(&s, "a"));
        assert_eq!(s.apply_redex(&w(&s, "b' b"), Redex::new(0, RuleId::R23)).unwrap(), w(&s, "a' a"));
        assert_eq!(s.apply_redex(&w(&s, "0 b'"), Redex::new(0, RuleId::R12)).unwrap(), w(&s, "0"));
        assert!(matches!(
            s.apply_redex(&w(&s, "a' a"), Redex::new(0, RuleId::R23)),
            Err(RewriteError::StaleRedex(_))
        ));
    }

    #[test]
    fn plain_then_zero_collapses() {
        let s = sys(LZ2);
        assert_eq!(s.find_redexes(&w(&s, "a 0")), vec![Redex::new(0, RuleId::R12)]);
    }

    #[test]
    fn reduce_examples() {
        let s = sys(LZ2);
        for name in ["a", "b"] {
            let word = w(&s, &format!("{name} {name}' {name}"));
            assert_eq!(s.reduce(&word).unwrap().normal_form, w(&s, name));
        }
        let r = s.reduce(&w(&s, "a b' b")).unwrap();
        assert_eq!(r.normal_form, w(&s, "a"));

        let s = sys(C2);
        let r = s.reduce(&w(&s, "e g'")).unwrap();
        assert_eq!(r.normal_form, w(&s, "g e'"));
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.trace[0].redex.rule, RuleId::R24);
    }

    #[test]
    fn empty_word_rejected() {
        let s = sys(LZ2);
        assert!(matches!(s.reduce(&Word::new(vec![])), Err(RewriteError::EmptyWord)));
    }

    #[test]
    fn involution_examples() {
        let s = sys(LZ2);
        assert_eq!(w(&s, "a b'").involution(), w(&s, "b a'"));
        assert_eq!(w(&s, "0").involution(), w(&s, "0"));
        let x = w(&s, "a b' 0 b a");
        assert_eq!(x.involution().involution(), x);
    }

    #[test]
    fn normal_shape_examples() {
        let s = sys(LZ2);
        assert!(s.is_normal_shape(&w(&s, "a b'")));
        assert!(!s.is_normal_shape(&w(&s, "b' b")));
        assert!(!s.is_normal_shape(&w(&s, "0 a")));
        assert!(s.is_normal_shape(&w(&s, "0")));
    }

    #[test]
    fn strategies_parse() {
        assert_eq!("leftmost".parse::<Strategy>(), Ok(Strategy::Leftmost));
        assert_eq!("rightmost".parse::<Strategy>(), Ok(Strategy::Rightmost));
        assert_eq!("random:7".parse::<Strategy>(), Ok(Strategy::Random { seed: 7 }));
        assert!("sideways".parse::<Strategy>().is_err());
    }

    #[test]
    fn ambiguous_input_refused_unless_allowed() {
        let sg = Semigroup::parse("elements: a b ab z\na ab ab z\nab b ab z\nab ab ab z\nz z z z").unwrap();
        assert!(matches!(RewriteSystem::new(sg.clone()), Err(RewriteError::Ambiguous(_))));
        let opts = SystemOptions {
            allow_ambiguous: true,
            ..Default::default()
        };
        let s = RewriteSystem::with_options(sg, None, opts).unwrap();
        assert!(!s.is_authoritative());
    }

    #[test]
    fn invalid_reps_refused_unless_allowed() {
        let sg = Semigroup::parse(C2).unwrap();
        let g = GreenData::compute(&sg);
        let bad = RepChoice::choose(&sg, &g).unwrap().with_overrides(&sg, &g, "L e g").unwrap();
        assert!(matches!(
            RewriteSystem::with_options(sg.clone(), Some(bad.clone()), SystemOptions::default()),
            Err(RewriteError::InvalidReps(_))
        ));
        let opts = SystemOptions {
            allow_invalid_reps: true,
            ..Default::default()
        };
        assert!(!RewriteSystem::with_options(sg, Some(bad), opts).unwrap().is_authoritative());
    }
}
