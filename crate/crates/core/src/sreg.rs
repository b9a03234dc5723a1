//! `(S)_reg` as a finite table of normal forms.
//!
//! Elements are irreducible words; the product of two elements is the
//! normal form of their concatenation and the involution is the normal form
//! of the reversed, bar-swapped word.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::green::{GreenData, Side};
use crate::rewrite::{RewriteError, RewriteSystem, Strategy, Sym, Word};
use crate::semigroup::{Element, Semigroup, SemigroupError};

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EnumCaps {
    pub elements: usize,
    pub steps: u64,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            elements: DEFAULT_ELEMENT_CAP,
            steps: DEFAULT_STEP_BUDGET,
        }
    }
}

#[derive(Debug, Error)]
pub enum SRegError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("element cap of {cap} exceeded ({found} elements so far)")]
    ElementCap { cap: usize, found: usize },
    #[error("step budget of {budget} exceeded ({found} elements so far)")]
    StepBudget { budget: u64, found: usize },
    #[error("product `{0}` is not among the enumerated elements")]
    NotClosed(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Table(#[from] SemigroupError),
}

/// The single-symbol word of `s`; the zero of `S` gives `(0)`.
pub fn embed(sys: &RewriteSystem, s: Element) -> Word {
    Word::single(Sym::plain(sys.semigroup(), s))
}

/// Normal form of `w1 ++ w2`.
pub fn multiply(sys: &RewriteSystem, w1: &Word, w2: &Word) -> Result<Word, RewriteError> {
    sys.normal_form(&w1.concat(w2))
}

/// Normal form of the involution of `w`.
pub fn invert(sys: &RewriteSystem, w: &Word) -> Result<Word, RewriteError> {
    sys.normal_form(&w.involution())
}

/// The enumerated regular cover.
#[derive(Clone, Debug)]
pub struct SRegTable {
    elements: Vec<Word>,
    labels: Vec<String>,
    index: HashMap<Word, usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    embed: Vec<usize>,
    zero: usize,
    /// Set when the rewrite system was not authoritative.
    pub authoritative: bool,
    /// Reduction steps spent building the table.
    pub steps: u64,
}

/// Breadth-first closure of `{(0)} ∪ {(s)} ∪ {(s̄)}` under right
/// multiplication by the generators, then the full product table.
pub fn enumerate_elements(sys: &RewriteSystem, caps: EnumCaps) -> Result<SRegTable, SRegError> {
    let sg = sys.semigroup();
    let mut gens: Vec<Word> = vec![Word::single(Sym::Zero)];
    gens.extend(sg.nonzero_elements().map(|s| Word::single(Sym::Plain(s))));
    gens.extend(sg.nonzero_elements().map(|s| Word::single(Sym::Bar(s))));

    let mut elements: Vec<Word> = Vec::new();
    let mut index: HashMap<Word, usize> = HashMap::new();
    let mut steps: u64 = 0;
    let push = |w: Word, elements: &mut Vec<Word>, index: &mut HashMap<Word, usize>| -> Result<(), SRegError> {
        if !index.contains_key(&w) {
            if elements.len() == caps.elements {
                return Err(SRegError::ElementCap {
                    cap: caps.elements,
                    found: elements.len(),
                });
            }
            index.insert(w.clone(), elements.len());
            elements.push(w);
        }
        Ok(())
    };
    for g in &gens {
        push(g.clone(), &mut elements, &mut index)?;
    }
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        next += 1;
        let products: Vec<Result<(Word, usize), RewriteError>> = gens
            .par_iter()
            .map(|g| sys.normal_form_counted(&x.concat(g), Strategy::Leftmost))
            .collect();
        for p in products {
            let (w, n) = p?;
            steps += n as u64;
            if steps > caps.steps {
                return Err(SRegError::StepBudget {
                    budget: caps.steps,
                    found: elements.len(),
                });
            }
            push(w, &mut elements, &mut index)?;
        }
    }

    let n = elements.len();
    let rows: Vec<Result<(Vec<usize>, u64), SRegError>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::with_capacity(n);
            let mut spent = 0u64;
            for j in 0..n {
                let (w, k) = sys.normal_form_counted(&elements[i].concat(&elements[j]), Strategy::Leftmost)?;
                spent += k as u64;
                let idx = *index
                    .get(&w)
                    .ok_or_else(|| SRegError::NotClosed(sys.display_word(&w).to_string()))?;
                row.push(idx);
            }
            Ok((row, spent))
        })
        .collect();
    let mut mul = Vec::with_capacity(n * n);
    for r in rows {
        let (row, spent) = r?;
        steps += spent;
        mul.extend(row);
    }
    if steps > caps.steps {
        return Err(SRegError::StepBudget {
            budget: caps.steps,
            found: n,
        });
    }
    let mut inv = Vec::with_capacity(n);
    for w in &elements {
        let iw = invert(sys, w)?;
        inv.push(
            *index
                .get(&iw)
                .ok_or_else(|| SRegError::NotClosed(sys.display_word(&iw).to_string()))?,
        );
    }
    let embed_idx = sg.elements().map(|s| index[&embed(sys, s)]).collect();
    let labels = elements.iter().map(|w| sys.display_word(w).to_string()).collect();
    Ok(SRegTable {
        zero: index[&Word::single(Sym::Zero)],
        elements,
        labels,
        index,
        mul,
        inv,
        embed: embed_idx,
        authoritative: sys.is_authoritative(),
        steps,
    })
}

/// A failed axiom, by element index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// `inv(inv(x)) ≠ x`
    DoubleInverse { x: usize },
    /// `inv(x·y) ≠ inv(y)·inv(x)`
    AntiMultiplicative { x: usize, y: usize },
    /// `x·inv(x)·x ≠ x`
    NotRegular { x: usize },
    /// `(x·y)·z ≠ x·(y·z)`
    NotAssociative { x: usize, y: usize, z: usize },
    /// `x·0 ≠ 0` or `0·x ≠ 0`
    ZeroNotAbsorbing { x: usize },
}

impl SRegTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.elements[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.len() + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// Index of the image of `s`.
    pub fn embed(&self, s: Element) -> usize {
        self.embed[s.index()]
    }

    /// Element names used by the exported Cayley table.
    pub fn table_name(i: usize) -> String {
        format!("x{i}")
    }

    /// Cayley-table text that the semigroup loader reads back. The words,
    /// the zero and the involution ride along as `#!` comment lines.
    pub fn export(&self) -> String {
        let n = self.len();
        let mut out = String::new();
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(out, "#! word {} = {l}", Self::table_name(i)).unwrap();
        }
        writeln!(out, "#! zero {}", Self::table_name(self.zero)).unwrap();
        let inv: Vec<String> = self.inv.iter().map(|&i| Self::table_name(i)).collect();
        writeln!(out, "#! inv {}", inv.join(" ")).unwrap();
        let names: Vec<String> = (0..n).map(Self::table_name).collect();
        writeln!(out, "elements: {}", names.join(" ")).unwrap();
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| Self::table_name(self.mul(i, j))).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        out
    }

    /// Reads an export back, re-parsing the words against `sys`.
    pub fn parse_export(sys: &RewriteSystem, text: &str) -> Result<SRegTable, SRegError> {
        let perr = |line: usize, message: String| SRegError::Parse { line, message };
        let mut words: Vec<(String, Word)> = Vec::new();
        let mut zero_name = None;
        let mut inv_names: Option<Vec<String>> = None;
        for (k, line) in text.lines().enumerate() {
            let Some(rest) = line.strip_prefix("#!") else { continue };
            let rest = rest.trim();
            if let Some(body) = rest.strip_prefix("word ") {
                let (name, w) = body
                    .split_once('=')
                    .ok_or_else(|| perr(k + 1, "expected `word <name> = <word>`".into()))?;
                let w = sys.parse_word(w).map_err(|e| perr(k + 1, e.to_string()))?;
                words.push((name.trim().to_owned(), w));
            } else if let Some(body) = rest.strip_prefix("zero ") {
                zero_name = Some(body.trim().to_owned());
            } else if let Some(body) = rest.strip_prefix("inv ") {
                inv_names = Some(body.split_whitespace().map(str::to_owned).collect());
            }
        }
        let table = Semigroup::parse_with_limit(text, u16::MAX as usize)?;
        let n = table.order();
        if words.len() != n {
            return Err(perr(0, format!("{} words for {n} elements", words.len())));
        }
        let pos = |name: &str| table.element(name).map(|e| e.index()).ok_or_else(|| perr(0, format!("unknown element `{name}`")));
        let mut elements = vec![None; n];
        for (name, w) in words {
            elements[pos(&name)?] = Some(w);
        }
        let elements: Vec<Word> = elements.into_iter().map(|w| w.expect("every name has a word")).collect();
        let index: HashMap<Word, usize> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        if index.len() != n {
            return Err(perr(0, "duplicate words".into()));
        }
        let inv_names = inv_names.ok_or_else(|| perr(0, "missing `#! inv` line".into()))?;
        if inv_names.len() != n {
            return Err(perr(0, "involution has the wrong length".into()));
        }
        let inv = inv_names.iter().map(|s| pos(s)).collect::<Result<Vec<_>, _>>()?;
        let zero = pos(&zero_name.ok_or_else(|| perr(0, "missing `#! zero` line".into()))?)?;
        let mul = table
            .elements()
            .flat_map(|a| table.elements().map(move |b| (a, b)))
            .map(|(a, b)| table.product(a, b).index())
            .collect();
        let embed_idx = sys
            .semigroup()
            .elements()
            .map(|s| {
                index
                    .get(&embed(sys, s))
                    .copied()
                    .ok_or_else(|| perr(0, format!("no element for `{}`", sys.semigroup().name(s))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let labels = elements.iter().map(|w| sys.display_word(w).to_string()).collect();
        Ok(SRegTable {
            elements,
            labels,
            index,
            mul,
            inv,
            embed: embed_idx,
            zero,
            authoritative: sys.is_authoritative(),
            steps: 0,
        })
    }

    /// The table as a semigroup with elements `x0, x1, …`.
    pub fn to_semigroup(&self) -> Result<Semigroup, SemigroupError> {
        let n = self.len();
        let names = (0..n).map(Self::table_name).collect();
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| self.mul(i, j)).collect()).collect();
        Semigroup::from_table_with_limit(names, &rows, u16::MAX as usize)
    }
}

/// Involution laws, regularity, associativity and the absorbing zero.
pub fn check_axioms(t: &SRegTable) -> Vec<AxiomViolation> {
    let n = t.len();
    let mut out = Vec::new();
    for x in 0..n {
        if t.inv(t.inv(x)) != x {
            out.push(AxiomViolation::DoubleInverse { x });
        }
        if t.mul(t.mul(x, t.inv(x)), x) != x {
            out.push(AxiomViolation::NotRegular { x });
        }
        if t.mul(x, t.zero()) != t.zero() || t.mul(t.zero(), x) != t.zero() {
            out.push(AxiomViolation::ZeroNotAbsorbing { x });
        }
        for y in 0..n {
            if t.inv(t.mul(x, y)) != t.mul(t.inv(y), t.inv(x)) {
                out.push(AxiomViolation::AntiMultiplicative { x, y });
            }
        }
    }
    let assoc: Vec<AxiomViolation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut v = Vec::new();
            for y in 0..n {
                let xy = t.mul(x, y);
                for z in 0..n {
                    if t.mul(xy, z) != t.mul(x, t.mul(y, z)) {
                        v.push(AxiomViolation::NotAssociative { x, y, z });
                    }
                }
            }
            v
        })
        .collect();
    out.extend(assoc);
    out
}

/// A failure of the embedding of `S − {0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EmbeddingViolation {
    NotInjective { s: String, t: String },
    NotMultiplicative { s: String, t: String, product: String, got: String },
}

/// `s ↦ (s)` is injective and multiplicative on `S − {0}`.
pub fn check_embedding(sys: &RewriteSystem) -> Result<Vec<EmbeddingViolation>, RewriteError> {
    let sg = sys.semigroup();
    let mut out = Vec::new();
    for s in sg.nonzero_elements() {
        for t in sg.nonzero_elements() {
            let (es, et) = (embed(sys, s), embed(sys, t));
            if s < t && es == et {
                out.push(EmbeddingViolation::NotInjective {
                    s: sg.name(s).into(),
                    t: sg.name(t).into(),
                });
            }
            let got = multiply(sys, &es, &et)?;
            let want = embed(sys, sg.product(s, t));
            if got != want {
                out.push(EmbeddingViolation::NotMultiplicative {
                    s: sg.name(s).into(),
                    t: sg.name(t).into(),
                    product: sys.display_word(&want).to_string(),
                    got: sys.display_word(&got).to_string(),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact25Violation {
    pub side: Side,
    pub s: String,
    pub r: String,
    pub left: String,
    pub right: String,
}

/// `s ≡_R r ⇒ (s s̄) = (r r̄)` and `s ≡_L r ⇒ (s̄ s) = (r̄ r)` in normal form.
pub fn fact_2_5_check(sys: &RewriteSystem) -> Result<Vec<Fact25Violation>, RewriteError> {
    let sg = sys.semigroup();
    let g = sys.green();
    let mut out = Vec::new();
    for side in [Side::R, Side::L] {
        let word = |s: Element| match side {
            Side::R => Word::new(vec![Sym::Plain(s), Sym::Bar(s)]),
            Side::L => Word::new(vec![Sym::Bar(s), Sym::Plain(s)]),
        };
        for s in sg.nonzero_elements() {
            for r in sg.nonzero_elements() {
                if s >= r || !g.equiv(side, s, r) {
                    continue;
                }
                let (a, b) = (sys.normal_form(&word(s))?, sys.normal_form(&word(r))?);
                if a != b {
                    out.push(Fact25Violation {
                        side,
                        s: sg.name(s).into(),
                        r: sg.name(r).into(),
                        left: sys.display_word(&a).to_string(),
                        right: sys.display_word(&b).to_string(),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JClassCensus {
    /// Element labels of the class.
    pub members: Vec<String>,
    pub regular: usize,
    pub is_zero: bool,
    pub meets_image: bool,
}

/// J-structure of `S` against that of the enumerated table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JReport {
    pub s_classes: usize,
    pub table_classes: usize,
    /// Nonzero J-class of `S` ↦ J-class of the table.
    pub class_map: Vec<(usize, usize)>,
    pub injective: bool,
    pub order_preserving: bool,
    pub order_reflecting: bool,
    /// Every nonzero J-class of the table contains an image of `S`.
    pub all_classes_meet_image: bool,
    pub census: Vec<JClassCensus>,
}

pub fn compare_j_structure(sg: &Semigroup, g: &GreenData, table: &SRegTable) -> Result<JReport, SemigroupError> {
    let ts = table.to_semigroup()?;
    let tg = GreenData::compute(&ts);
    let el = Element::new;
    let s_classes: Vec<usize> = (0..g.j.len())
        .filter(|&c| !g.j.members(c).iter().all(|&e| sg.is_zero(e)))
        .collect();
    let class_map: Vec<(usize, usize)> = s_classes
        .iter()
        .map(|&c| {
            let rep = g.j.members(c)[0];
            (c, tg.j.class_of(el(table.embed(rep))))
        })
        .collect();
    let mut injective = true;
    let mut preserving = true;
    let mut reflecting = true;
    for &(c1, d1) in &class_map {
        for &(c2, d2) in &class_map {
            if c1 != c2 && d1 == d2 {
                injective = false;
            }
            let s_le = g.leq_j(g.j.members(c1)[0], g.j.members(c2)[0]);
            let t_le = tg.leq_j(tg.j.members(d1)[0], tg.j.members(d2)[0]);
            if s_le && !t_le {
                preserving = false;
            }
            if t_le && !s_le {
                reflecting = false;
            }
        }
    }
    let census: Vec<JClassCensus> = tg
        .j
        .classes()
        .iter()
        .enumerate()
        .map(|(c, members)| JClassCensus {
            members: members.iter().map(|&e| table.label(e.index()).to_owned()).collect(),
            regular: members.iter().filter(|&&e| crate::green::is_regular_element(&ts, e)).count(),
            is_zero: members.len() == 1 && members[0].index() == table.zero(),
            meets_image: class_map.iter().any(|&(_, d)| d == c),
        })
        .collect();
    Ok(JReport {
        s_classes: s_classes.len(),
        table_classes: tg.j.len(),
        injective,
        order_preserving: preserving,
        order_reflecting: reflecting,
        all_classes_meet_image: census.iter().all(|c| c.is_zero || c.meets_image),
        class_map,
        census,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn sys(name: &str) -> RewriteSystem {
        RewriteSystem::new(corpus::load(name)).unwrap()
    }

    fn words(sys: &RewriteSystem, list: &[&str]) -> Vec<Word> {
        let mut v: Vec<Word> = list.iter().map(|t| sys.parse_word(t).unwrap()).collect();
        v.sort();
        v
    }

    fn sorted(t: &SRegTable) -> Vec<Word> {
        let mut v = t.elements().to_vec();
        v.sort();
        v
    }

    #[test]
    fn left_zero_cover() {
        let s = sys("lz2");
        let t = enumerate_elements(&s, EnumCaps::default()).unwrap();
        let expect = words(&s, &["0", "a", "b", "a'", "b'", "a a'", "a b'", "a' a", "b a'", "b b'"]);
        assert_eq!(sorted(&t), expect);
        assert!(check_axioms(&t).is_empty());
    }

    #[test]
    fn cyclic_group_cover() {
        let s = sys("z2");
        let t = enumerate_elements(&s, EnumCaps::default()).unwrap();
        let expect = words(&s, &["0", "e", "g", "e'", "g'", "e e'", "g e'", "e' e", "g' e"]);
        assert_eq!(sorted(&t), expect);
        assert!(check_axioms(&t).is_empty());
    }

    #[test]
    fn multiply_examples() {
        let s = sys("lz2");
        let w = |t: &str| s.parse_word(t).unwrap();
        let x = multiply(&s, &w("a b'"), &w("b a'")).unwrap();
        assert_eq!(multiply(&s, &x, &w("a b'")).unwrap(), w("a b'"));
        assert_eq!(multiply(&s, &w("b a'"), &w("0")).unwrap(), w("0"));
        let s = sys("z2");
        let w = |t: &str| s.parse_word(t).unwrap();
        assert_eq!(multiply(&s, &w("e e'"), &w("e e'")).unwrap(), w("e e'"));
    }

    #[test]
    fn embedding_and_fact() {
        for name in corpus::UNAMBIGUOUS {
            let s = sys(name);
            assert!(check_embedding(&s).unwrap().is_empty(), "{name}");
            assert!(fact_2_5_check(&s).unwrap().is_empty(), "{name}");
        }
        let s = sys("lz2");
        let w = |t: &str| s.parse_word(t).unwrap();
        assert_eq!(s.normal_form(&w("b' b")).unwrap(), w("a' a"));
        let s = sys("z2");
        let w = |t: &str| s.parse_word(t).unwrap();
        assert_eq!(s.normal_form(&w("g g'")).unwrap(), w("e e'"));
    }

    #[test]
    fn export_round_trip() {
        let s = sys("lz2");
        let t = enumerate_elements(&s, EnumCaps::default()).unwrap();
        let text = t.export();
        let back = SRegTable::parse_export(&s, &text).unwrap();
        assert_eq!(back.elements(), t.elements());
        for i in 0..t.len() {
            assert_eq!(back.inv(i), t.inv(i));
            for j in 0..t.len() {
                assert_eq!(back.mul(i, j), t.mul(i, j));
            }
        }
        let plain = Semigroup::parse_with_limit(&text, 1000).unwrap();
        assert_eq!(plain.order(), 10);
        assert_eq!(plain.zero().map(|z| z.index()), Some(t.zero()));
    }

    #[test]
    fn caps_trip() {
        let s = sys("b2");
        let err = enumerate_elements(&s, EnumCaps { elements: 5, steps: 1_000 }).unwrap_err();
        assert!(matches!(err, SRegError::ElementCap { cap: 5, .. }));
    }

    #[test]
    fn j_structure_examples() {
        for name in ["lz2", "z2", "b2"] {
            let s = sys(name);
            let t = enumerate_elements(&s, EnumCaps::default()).unwrap();
            let r = compare_j_structure(s.semigroup(), s.green(), &t).unwrap();
            assert!(r.injective && r.order_preserving && r.order_reflecting, "{name}");
            assert_eq!(r.s_classes, 1, "{name}");
            assert!(r.census.iter().any(|c| c.is_zero));
        }
    }
}
