//! Desk-scale checks of the rewrite system: rewrite-graph search, critical
//! pairs, the identities satisfied by `B`, `B_R`, `B_L`, and diagnostics for
//! the length-preserving phase of a reduction.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bifun::BTables;
use crate::green::{Comparison, GreenData, Side};
use crate::representatives::RepChoice;
use crate::rewrite::{Link, Redex, RewriteError, RewriteSystem, Step, Strategy, Sym, SystemOptions, Word};
use crate::semigroup::{Element, Semigroup, UnitExt};

pub const DEFAULT_NODE_CAP: usize = 100_000;
/// Failing examples kept per report section.
const EXAMPLES: usize = 10;

// ---------------------------------------------------------------- graphs

/// Every rewrite sequence from one word.
#[derive(Clone, Debug)]
pub struct RewriteGraph {
    pub nodes: Vec<Word>,
    pub edges: Vec<(usize, Redex, usize)>,
    pub sinks: Vec<usize>,
    /// False when the node cap stopped the search.
    pub complete: bool,
}

pub fn rewrite_graph(sys: &RewriteSystem, w: &Word, node_cap: usize) -> RewriteGraph {
    let mut ids: HashMap<Word, usize> = HashMap::new();
    let mut nodes = vec![w.clone()];
    ids.insert(w.clone(), 0);
    let mut edges = Vec::new();
    let mut sinks = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut complete = true;
    while let Some(i) = queue.pop_front() {
        let word = nodes[i].clone();
        let redexes = sys.find_redexes(&word);
        if redexes.is_empty() {
            sinks.push(i);
            continue;
        }
        for rx in redexes {
            let next = sys.apply_redex(&word, rx).expect("found redexes apply");
            let j = match ids.get(&next) {
                Some(&j) => j,
                None => {
                    if nodes.len() == node_cap {
                        complete = false;
                        continue;
                    }
                    let j = nodes.len();
                    ids.insert(next.clone(), j);
                    nodes.push(next);
                    queue.push_back(j);
                    j
                }
            };
            edges.push((i, rx, j));
        }
    }
    sinks.sort_by(|&a, &b| nodes[a].cmp(&nodes[b]));
    RewriteGraph {
        nodes,
        edges,
        sinks,
        complete,
    }
}

impl RewriteGraph {
    /// Kahn's algorithm over the explored part.
    pub fn is_acyclic(&self) -> bool {
        let n = self.nodes.len();
        let mut indeg = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, _, b) in &self.edges {
            indeg[b] += 1;
            out[a].push(b);
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = ready.pop() {
            seen += 1;
            for &j in &out[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.push(j);
                }
            }
        }
        seen == n
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsOutcome {
    pub sinks: Vec<Word>,
    pub nodes: usize,
    pub edges: usize,
    pub acyclic: bool,
    pub complete: bool,
}

impl BfsOutcome {
    /// One sink, no cycle, search finished.
    pub fn is_unique(&self) -> bool {
        self.complete && self.acyclic && self.sinks.len() == 1
    }
}

/// The irreducible words reachable from `w` along any rewrite sequence.
pub fn confluence_bfs(sys: &RewriteSystem, w: &Word, node_cap: usize) -> BfsOutcome {
    let g = rewrite_graph(sys, w, node_cap);
    BfsOutcome {
        sinks: g.sinks.iter().map(|&i| g.nodes[i].clone()).collect(),
        nodes: g.nodes.len(),
        edges: g.edges.len(),
        acyclic: g.is_acyclic(),
        complete: g.complete,
    }
}

/// Number of words of each length `1..=maxlen` over `k` letters.
fn word_count(k: usize, len: usize) -> usize {
    k.pow(len as u32)
}

fn word_at(alphabet: &[Sym], len: usize, mut idx: usize) -> Word {
    let k = alphabet.len();
    let mut v = vec![Sym::Zero; len];
    for slot in v.iter_mut().rev() {
        *slot = alphabet[idx % k];
        idx /= k;
    }
    Word::new(v)
}

/// All words of length `1..=maxlen` over the full alphabet, in parallel.
pub fn all_words(sys: &RewriteSystem, maxlen: usize) -> impl ParallelIterator<Item = Word> + '_ {
    let alphabet = sys.alphabet();
    (1..=maxlen).into_par_iter().flat_map(move |len| {
        let alphabet = alphabet.clone();
        (0..word_count(alphabet.len(), len))
            .into_par_iter()
            .map(move |i| word_at(&alphabet, len, i))
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BfsSweep {
    pub maxlen: usize,
    pub words: usize,
    pub nodes: usize,
    pub max_nodes: usize,
    pub multiple_sinks: usize,
    pub cyclic: usize,
    pub unresolved: usize,
    /// Offending words with their sinks.
    pub examples: Vec<(String, Vec<String>)>,
}

impl BfsSweep {
    pub fn passed(&self) -> bool {
        self.multiple_sinks == 0 && self.cyclic == 0 && self.unresolved == 0
    }
}

/// `confluence_bfs` on every word of length `≤ maxlen`.
pub fn bfs_sweep(sys: &RewriteSystem, maxlen: usize, node_cap: usize) -> BfsSweep {
    let parts: Vec<BfsSweep> = all_words(sys, maxlen)
        .map(|w| {
            let o = confluence_bfs(sys, &w, node_cap);
            let mut s = BfsSweep {
                words: 1,
                nodes: o.nodes,
                max_nodes: o.nodes,
                multiple_sinks: usize::from(o.sinks.len() != 1),
                cyclic: usize::from(!o.acyclic),
                unresolved: usize::from(!o.complete),
                ..Default::default()
            };
            if !o.is_unique() {
                s.examples.push((
                    sys.display_word(&w).to_string(),
                    o.sinks.iter().map(|x| sys.display_word(x).to_string()).collect(),
                ));
            }
            s
        })
        .collect();
    let mut total = BfsSweep {
        maxlen,
        ..Default::default()
    };
    for p in parts {
        total.words += p.words;
        total.nodes += p.nodes;
        total.max_nodes = total.max_nodes.max(p.max_nodes);
        total.multiple_sinks += p.multiple_sinks;
        total.cyclic += p.cyclic;
        total.unresolved += p.unresolved;
        if total.examples.len() < EXAMPLES {
            total.examples.extend(p.examples);
        }
    }
    total.examples.truncate(EXAMPLES);
    total
}

// ---------------------------------------------------------------- critical pairs

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Joinable(Word),
    Divergent(Word, Word),
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub peak: Word,
    pub left: Redex,
    pub left_word: Word,
    pub right: Redex,
    pub right_word: Word,
    pub verdict: Verdict,
}

impl CriticalPair {
    pub fn describe(&self, sys: &RewriteSystem) -> String {
        let d = |w: &Word| sys.display_word(w).to_string();
        let verdict = match &self.verdict {
            Verdict::Joinable(w) => format!("joinable at ({})", d(w)),
            Verdict::Divergent(a, b) => format!("divergent: ({}) vs ({})", d(a), d(b)),
            Verdict::Unresolved => "unresolved".to_owned(),
        };
        format!(
            "({}): {}@{} -> ({}), {}@{} -> ({}); {verdict}",
            d(&self.peak),
            self.left.rule,
            self.left.position,
            d(&self.left_word),
            self.right.rule,
            self.right.position,
            d(&self.right_word),
        )
    }
}

fn nf_or_unresolved(sys: &RewriteSystem, w: &Word) -> Option<Word> {
    match sys.normal_form(w) {
        Ok(nf) => Some(nf),
        Err(RewriteError::StepCap { .. }) => None,
        Err(e) => panic!("unexpected rewrite error: {e}"),
    }
}

fn peaks_of(sys: &RewriteSystem, w: &Word, minimal_only: bool) -> Vec<CriticalPair> {
    let redexes = sys.find_redexes(w);
    let mut out = Vec::new();
    for (i, a) in redexes.iter().enumerate() {
        for b in &redexes[i + 1..] {
            if !a.overlaps(b) {
                continue;
            }
            if minimal_only && (a.position.min(b.position) != 0 || a.end().max(b.end()) != w.len()) {
                continue;
            }
            let lw = sys.apply_redex(w, *a).expect("redex applies");
            let rw = sys.apply_redex(w, *b).expect("redex applies");
            let verdict = match (nf_or_unresolved(sys, &lw), nf_or_unresolved(sys, &rw)) {
                (Some(x), Some(y)) if x == y => Verdict::Joinable(x),
                (Some(x), Some(y)) => Verdict::Divergent(x, y),
                _ => Verdict::Unresolved,
            };
            out.push(CriticalPair {
                peak: w.clone(),
                left: *a,
                left_word: lw,
                right: *b,
                right_word: rw,
                verdict,
            });
        }
    }
    out
}

/// Every minimal peak of length `≤ maxlen`: two distinct overlapping redexes
/// that together cover the whole word.
pub fn critical_pairs(sys: &RewriteSystem, maxlen: usize) -> Vec<CriticalPair> {
    let mut v: Vec<CriticalPair> = all_words(sys, maxlen)
        .flat_map_iter(|w| peaks_of(sys, &w, true))
        .collect();
    v.sort_by(|a, b| (a.peak.len(), &a.peak, a.left, a.right).cmp(&(b.peak.len(), &b.peak, b.left, b.right)));
    v
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PairStats {
    pub maxlen: usize,
    pub peaks: usize,
    pub pairs: usize,
    pub joinable: usize,
    pub divergent: usize,
    pub unresolved: usize,
    pub examples: Vec<String>,
}

impl PairStats {
    pub fn passed(&self) -> bool {
        self.divergent == 0 && self.unresolved == 0 && self.joinable == self.pairs
    }

    pub fn summarize(sys: &RewriteSystem, maxlen: usize, pairs: &[CriticalPair]) -> PairStats {
        let mut s = PairStats {
            maxlen,
            pairs: pairs.len(),
            ..Default::default()
        };
        let mut last: Option<&Word> = None;
        for p in pairs {
            if last != Some(&p.peak) {
                s.peaks += 1;
                last = Some(&p.peak);
            }
            match p.verdict {
                Verdict::Joinable(_) => s.joinable += 1,
                Verdict::Divergent(..) => s.divergent += 1,
                Verdict::Unresolved => s.unresolved += 1,
            }
            if !matches!(p.verdict, Verdict::Joinable(_)) && s.examples.len() < EXAMPLES {
                s.examples.push(p.describe(sys));
            }
        }
        s
    }
}

/// Overlapping redex pairs in every word of length `≤ maxlen`, minimal or not.
pub fn critical_pair_sweep(sys: &RewriteSystem, maxlen: usize) -> PairStats {
    let parts: Vec<PairStats> = all_words(sys, maxlen)
        .map(|w| {
            let pairs = peaks_of(sys, &w, false);
            PairStats::summarize(sys, maxlen, &pairs)
        })
        .collect();
    let mut s = PairStats {
        maxlen,
        ..Default::default()
    };
    for p in parts {
        s.peaks += p.peaks;
        s.pairs += p.pairs;
        s.joinable += p.joinable;
        s.divergent += p.divergent;
        s.unresolved += p.unresolved;
        if s.examples.len() < EXAMPLES {
            s.examples.extend(p.examples);
        }
    }
    s.examples.truncate(EXAMPLES);
    s
}

// ---------------------------------------------------------------- lemmas

pub const ALL_LEMMAS: [u8; 18] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18];

/// `all`, or a comma-separated list such as `3.1,3.9` or `1,9`.
pub fn parse_lemma_ids(text: &str) -> Result<Vec<u8>, String> {
    if text.trim() == "all" {
        return Ok(ALL_LEMMAS.to_vec());
    }
    let mut out = Vec::new();
    for part in text.split(',') {
        let p = part.trim();
        let num = p.strip_prefix("3.").unwrap_or(p);
        match num.parse::<u8>() {
            Ok(k) if (1..=18).contains(&k) => out.push(k),
            _ => return Err(format!("unknown lemma `{p}` (3.1 to 3.18)")),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub lemma: String,
    pub clause: &'static str,
    /// `S` or `dual`.
    pub side: &'static str,
    pub tuple: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LemmaCount {
    pub lemma: String,
    pub tuples: usize,
    pub checks: usize,
    /// Failed order claims with a zero operand, which are not counted as violations.
    pub vacuous: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LemmaReport {
    pub counts: Vec<LemmaCount>,
    pub violations: Vec<LemmaViolation>,
    /// Observations on statements checked in a corrected form.
    pub notes: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Val = Option<Element>;

struct Ctx {
    s: Semigroup,
    g: GreenData,
    rc: RepChoice,
    t: BTables,
    ns: Vec<Element>,
    side: &'static str,
}

impl Ctx {
    fn new(s: Semigroup, g: GreenData, rc: RepChoice, side: &'static str) -> Ctx {
        let t = BTables::build(&s, &rc);
        let ns = s.nonzero_elements().collect();
        Ctx { s, g, rc, t, ns, side }
    }

    fn zero_in(&self, vals: &[Val]) -> bool {
        vals.iter().any(|v| matches!(v, Some(e) if self.s.is_zero(*e)))
    }

    fn zero(&self) -> Val {
        self.s.zero()
    }

    fn absorbed(&self, args: &[Val]) -> Option<Val> {
        if args.iter().any(|a| a.is_none()) {
            return Some(None);
        }
        if self.zero_in(args) {
            return Some(self.zero());
        }
        None
    }

    fn b(&self, u: Val, v: Val, w: Val) -> Val {
        self.absorbed(&[u, v, w]).unwrap_or_else(|| self.t.b3(u?, v?, w?))
    }

    fn br(&self, u: Val, v: Val) -> Val {
        self.absorbed(&[u, v]).unwrap_or_else(|| self.t.b_r(u?, v?))
    }

    fn bl(&self, v: Val, u: Val) -> Val {
        self.absorbed(&[v, u]).unwrap_or_else(|| self.t.b_l(v?, u?))
    }

    fn mul(&self, a: Val, b: Val) -> Val {
        Some(self.s.product(a?, b?))
    }

    fn mul_u(&self, a: Val, x: UnitExt) -> Val {
        Some(self.s.act_right(a?, x))
    }

    fn umul(&self, x: UnitExt, a: Val) -> Val {
        Some(self.s.act_left(x, a?))
    }

    fn r(&self, a: Val) -> Val {
        let a = a?;
        Some(if self.s.is_zero(a) { a } else { self.rc.r(a) })
    }

    fn l(&self, a: Val) -> Val {
        let a = a?;
        Some(if self.s.is_zero(a) { a } else { self.rc.l(a) })
    }

    fn cmp(&self, side: Side, a: Val, b: Val) -> Option<Comparison> {
        Some(self.g.compare(side, a?, b?))
    }

    fn le(&self, side: Side, a: Val, b: Val) -> bool {
        matches!(self.cmp(side, a, b), Some(Comparison::Less | Comparison::Equivalent))
    }

    fn lt(&self, side: Side, a: Val, b: Val) -> bool {
        self.cmp(side, a, b) == Some(Comparison::Less)
    }

    fn eqv(&self, side: Side, a: Val, b: Val) -> bool {
        self.cmp(side, a, b) == Some(Comparison::Equivalent)
    }

    fn inc(&self, side: Side, a: Val, b: Val) -> bool {
        self.cmp(side, a, b) == Some(Comparison::Incomparable)
    }

    fn name(&self, v: Val) -> String {
        v.map_or_else(|| "undefined".to_owned(), |e| self.s.name(e).to_owned())
    }
}

struct Acc<'a> {
    ctx: &'a Ctx,
    lemma: u8,
    count: LemmaCount,
    violations: Vec<LemmaViolation>,
    notes: BTreeMap<String, usize>,
}

impl<'a> Acc<'a> {
    fn new(ctx: &'a Ctx, lemma: u8) -> Self {
        Acc {
            ctx,
            lemma,
            count: LemmaCount {
                lemma: format!("3.{lemma}"),
                ..Default::default()
            },
            violations: Vec::new(),
            notes: BTreeMap::new(),
        }
    }

    fn tuple(&mut self) {
        self.count.tuples += 1;
    }

    fn fail(&mut self, clause: &'static str, tup: &[Element], detail: String) {
        self.count.violations += 1;
        if self.violations.len() < EXAMPLES {
            self.violations.push(LemmaViolation {
                lemma: format!("3.{}", self.lemma),
                clause,
                side: self.ctx.side,
                tuple: tup.iter().map(|&e| self.ctx.s.name(e).to_owned()).collect(),
                detail,
            });
        }
    }

    fn eq(&mut self, clause: &'static str, tup: &[Element], lhs: Val, rhs: Val) {
        self.count.checks += 1;
        if lhs.is_none() || rhs.is_none() || lhs != rhs {
            let d = format!("{} ≠ {}", self.ctx.name(lhs), self.ctx.name(rhs));
            self.fail(clause, tup, d);
        }
    }

    /// An order claim; failures with a zero operand are vacuous.
    fn holds(&mut self, clause: &'static str, tup: &[Element], ok: bool, operands: &[Val]) {
        self.count.checks += 1;
        if ok {
            return;
        }
        if operands.iter().all(|o| o.is_some()) && self.ctx.zero_in(operands) {
            self.count.vacuous += 1;
            return;
        }
        let names: Vec<String> = operands.iter().map(|&o| self.ctx.name(o)).collect();
        self.fail(clause, tup, format!("fails for ({})", names.join(", ")));
    }

    fn iff(&mut self, clause: &'static str, tup: &[Element], a: bool, b: bool, operands: &[Val]) {
        self.holds(clause, tup, a == b, operands);
    }

    fn note(&mut self, text: &str) {
        *self.notes.entry(text.to_owned()).or_default() += 1;
    }
}

fn units(ctx: &Ctx) -> Vec<UnitExt> {
    ctx.s.unit_elements().collect()
}

fn lemma_1(c: &Ctx, a: &mut Acc) {
    use Side::{L, R};
    let un = units(c);
    for &u in &c.ns {
        for &v in &c.ns {
            let (su, sv) = (Some(u), Some(v));
            if c.le(L, sv, su) {
                a.tuple();
                let brv = c.br(su, sv);
                let ru = c.r(su);
                for &al in &un {
                    if c.mul_u(ru, al) == su {
                        a.eq("(a) u = r_u·α ⇒ B_R(u,v)·α = v", &[u, v], c.mul_u(brv, al), sv);
                    }
                    if c.mul_u(su, al) == ru {
                        a.eq("(b) r_u = u·α' ⇒ B_R(u,v) = v·α'", &[u, v], brv, c.mul_u(sv, al));
                    }
                }
            }
            if c.side == "S" && c.le(R, sv, su) {
                let blv = c.bl(sv, su);
                let lu = c.l(su);
                for &be in &un {
                    if c.umul(be, lu) == sv && c.umul(be, blv) != su {
                        a.note("3.1(a) second clause as printed (v = β·ℓ_u ⇒ β·B_L(v,u) = u) fails; its dual form u = β·ℓ_u ⇒ β·B_L(v,u) = v is checked instead");
                    }
                }
            }
        }
    }
    if c.side == "S" {
        a.note("3.1(b) second clause as printed binds β nowhere; its dual form ℓ_u = β'·u ⇒ B_L(v,u) = β'·v is checked instead");
    }
}

fn lemma_2(c: &Ctx, a: &mut Acc) {
    for &u in &c.ns {
        for &v in &c.ns {
            let ru = c.r(Some(u));
            if c.le(Side::L, Some(v), ru) {
                a.tuple();
                a.eq("B_R(r_u, v) = v", &[u, v], c.br(ru, Some(v)), Some(v));
            }
        }
    }
}

fn lemma_3(c: &Ctx, a: &mut Acc) {
    for &u in &c.ns {
        for &v in &c.ns {
            if c.le(Side::L, Some(v), Some(u)) {
                a.tuple();
                let x = c.br(Some(u), Some(v));
                a.holds("B_R(u, v) ≡_R v", &[u, v], c.eqv(Side::R, x, Some(v)), &[x, Some(v)]);
            }
        }
    }
}

fn lemma_4(c: &Ctx, a: &mut Acc) {
    use Side::L;
    for &s in &c.ns {
        for &t in &c.ns {
            let (ss, st) = (Some(s), Some(t));
            if !c.le(L, ss, st) {
                continue;
            }
            a.tuple();
            let x = c.br(st, ss);
            let rt = c.r(st);
            a.holds("s ≤_L t ⇒ B_R(t,s) ≤_L r_t", &[s, t], c.le(L, x, rt), &[x, rt]);
            if c.lt(L, ss, st) {
                a.holds("s <_L t ⇒ B_R(t,s) <_L r_t", &[s, t], c.lt(L, x, rt), &[x, rt]);
            }
            if c.eqv(L, ss, st) {
                a.holds("s ≡_L t ⇒ B_R(t,s) ≡_L r_t", &[s, t], c.eqv(L, x, rt), &[x, rt]);
            }
        }
    }
}

/// Calls `f(u, v, w)` for every nonzero `u ≤_L v ≥_R w`.
fn for_b_triples(c: &Ctx, mut f: impl FnMut(Element, Element, Element)) {
    for &v in &c.ns {
        for &u in &c.ns {
            if !c.le(Side::L, Some(u), Some(v)) {
                continue;
            }
            for &w in &c.ns {
                if c.le(Side::R, Some(w), Some(v)) {
                    f(u, v, w);
                }
            }
        }
    }
}

fn lemma_5(c: &Ctx, a: &mut Acc) {
    let un = units(c);
    for_b_triples(c, |u, v, w| {
        a.tuple();
        let b = c.b(Some(u), Some(v), Some(w));
        for &x in &un {
            if c.mul_u(Some(v), x) == Some(w) {
                a.eq("w = v·x ⇒ B(u,v,w) = u·x", &[u, v, w], b, c.mul_u(Some(u), x));
            }
            if c.umul(x, Some(v)) == Some(u) {
                a.eq("u = y·v ⇒ B(u,v,w) = y·w", &[u, v, w], b, c.umul(x, Some(w)));
            }
        }
    });
}

fn lemma_6(c: &Ctx, a: &mut Acc) {
    for_b_triples(c, |u, v, w| {
        let b = c.b(Some(u), Some(v), Some(w));
        for &t in &c.ns {
            a.tuple();
            let st = Some(t);
            let tu = c.mul(st, Some(u));
            let wt = c.mul(Some(w), st);
            a.eq("B(tu,v,w) = t·B(u,v,w)", &[u, v, w, t], c.b(tu, Some(v), Some(w)), c.mul(st, b));
            a.eq("B(u,v,wt) = B(u,v,w)·t", &[u, v, w, t], c.b(Some(u), Some(v), wt), c.mul(b, st));
        }
    });
}

fn lemma_7(c: &Ctx, a: &mut Acc) {
    use Side::L;
    for &u in &c.ns {
        for &v in &c.ns {
            for &s in &c.ns {
                let (su_, sv_, ss_) = (Some(u), Some(v), Some(s));
                let su = c.mul(ss_, su_);
                let sr = c.mul(ss_, c.r(su_));
                let v_le_u = c.le(L, sv_, su_);
                if !v_le_u {
                    continue;
                }
                a.tuple();
                let x = c.br(su_, sv_);
                let tup = [u, v, s];
                if c.le(L, sv_, su) {
                    a.holds("(1) u ≥_L su ≥_L v ⇒ s·r_u ≥_L B_R(u,v)", &tup, c.le(L, x, sr), &[x, sr]);
                    a.eq("(1) B_R(su,v) = B_R(s·r_u, B_R(u,v))", &tup, c.br(su, sv_), c.br(sr, x));
                }
                if c.le(L, su, sv_) {
                    a.holds("(2) su ≤_L v ≤_L u ⇒ s·r_u ≤_L B_R(u,v)", &tup, c.le(L, sr, x), &[sr, x]);
                    a.eq("(2) B_R(v,su) = B_R(B_R(u,v), s·r_u)", &tup, c.br(sv_, su), c.br(x, sr));
                    if c.lt(L, su, sv_) {
                        a.holds("(2) su <_L v ⇒ s·r_u <_L B_R(u,v)", &tup, c.lt(L, sr, x), &[sr, x]);
                    }
                }
                if c.inc(L, su, sv_) {
                    a.holds("(3) incomparability carries over", &tup, c.inc(L, sr, x), &[sr, x]);
                }
                a.eq("(4) B_R(u, s·v) = s·B_R(u,v)", &tup, c.br(su_, c.mul(ss_, sv_)), c.mul(ss_, x));
            }
        }
    }
}

fn lemma_8(c: &Ctx, a: &mut Acc) {
    use Side::{L, R};
    for_b_triples(c, |u, v, w| {
        let b = c.b(Some(u), Some(v), Some(w));
        for &s in &c.ns {
            a.tuple();
            let ss = Some(s);
            if c.inc(L, Some(w), ss) {
                a.holds("w |_L s ⇒ B(u,v,w) |_L s", &[u, v, w, s], c.inc(L, b, ss), &[b, ss]);
            }
            if c.inc(R, ss, Some(u)) {
                a.holds("s |_R u ⇒ s |_R B(u,v,w)", &[u, v, w, s], c.inc(R, ss, b), &[ss, b]);
            }
        }
    });
}

fn lemma_9(c: &Ctx, a: &mut Acc) {
    use Side::{L, R};
    for_b_triples(c, |u, v, w| {
        let b1 = c.b(Some(u), Some(v), Some(w));
        for &s in &c.ns {
            if !c.le(L, Some(w), Some(s)) {
                continue;
            }
            for &t in &c.ns {
                if !c.le(R, Some(t), Some(s)) {
                    continue;
                }
                a.tuple();
                let tup = [u, v, w, s, t];
                let b2 = c.b(Some(w), Some(s), Some(t));
                a.holds("B(u,v,w) ≤_L s", &tup, c.le(L, b1, Some(s)), &[b1, Some(s)]);
                a.holds("v ≥_R B(w,s,t)", &tup, c.le(R, b2, Some(v)), &[b2, Some(v)]);
                a.eq(
                    "B(B(u,v,w),s,t) = B(u,v,B(w,s,t))",
                    &tup,
                    c.b(b1, Some(s), Some(t)),
                    c.b(Some(u), Some(v), b2),
                );
            }
        }
    });
}

/// Calls `f(u, v, w, s)` for every nonzero `u ≤_L v ≡_R w ≥_L s`.
fn for_exchange(c: &Ctx, mut f: impl FnMut(Element, Element, Element, Element)) {
    for_b_triples(c, |u, v, w| {
        if !c.eqv(Side::R, Some(v), Some(w)) {
            return;
        }
        for &s in &c.ns {
            if c.le(Side::L, Some(s), Some(w)) {
                f(u, v, w, s);
            }
        }
    });
}

fn lemma_10(c: &Ctx, a: &mut Acc) {
    for_exchange(c, |u, v, w, s| {
        let b1 = c.b(Some(u), Some(v), Some(w));
        let b2 = c.b(Some(s), Some(w), Some(v));
        for &k in &c.ns {
            a.tuple();
            let tup = [u, v, w, s, k];
            let k = Some(k);
            a.iff(
                "(a) c·s = B(u,v,w) ⇔ u = c·B(s,w,v)",
                &tup,
                c.mul(k, Some(s)) == b1,
                Some(u) == c.mul(k, b2),
                &[],
            );
            a.iff(
                "(b) c·u = B(s,w,v) ⇔ s = c·B(u,v,w)",
                &tup,
                c.mul(k, Some(u)) == b2,
                Some(s) == c.mul(k, b1),
                &[],
            );
        }
    });
}

fn lemma_11(c: &Ctx, a: &mut Acc) {
    use Side::L;
    for_exchange(c, |u, v, w, s| {
        a.tuple();
        let tup = [u, v, w, s];
        let (su, ss) = (Some(u), Some(s));
        let b1 = c.b(su, Some(v), Some(w));
        let b2 = c.b(ss, Some(w), Some(v));
        let ops = [b1, ss, su, b2];
        a.iff("(1) ≤_L", &tup, c.le(L, b1, ss), c.le(L, su, b2), &ops);
        a.iff("(1) >_L", &tup, c.lt(L, ss, b1), c.lt(L, b2, su), &ops);
        a.iff("(1) |_L", &tup, c.inc(L, b1, ss), c.inc(L, su, b2), &ops);
        if c.le(L, b1, ss) {
            a.holds("(2≤) r_s = r_B(s,w,v)", &tup, c.r(ss) == c.r(b2), &[ss, b2]);
            a.eq("(2≤) B_R(s,B(u,v,w)) = B_R(B(s,w,v),u)", &tup, c.br(ss, b1), c.br(b2, su));
        }
        if c.lt(L, ss, b1) {
            a.holds("(2>) r_u = r_B(u,v,w)", &tup, c.r(su) == c.r(b1), &[su, b1]);
            a.eq("(2>) B_R(B(u,v,w),s) = B_R(u,B(s,w,v))", &tup, c.br(b1, ss), c.br(su, b2));
        }
    });
}

/// Calls `f(u, v, w, s)` for every nonzero `u ≤_L v ≥_R w ≥_L s`.
fn for_absorb(c: &Ctx, mut f: impl FnMut(Element, Element, Element, Element)) {
    for_b_triples(c, |u, v, w| {
        for &s in &c.ns {
            if c.le(Side::L, Some(s), Some(w)) {
                f(u, v, w, s);
            }
        }
    });
}

fn lemma_12(c: &Ctx, a: &mut Acc) {
    let all: Vec<Element> = c.s.elements().collect();
    for_absorb(c, |u, v, w, s| {
        let bw = c.b(Some(u), Some(v), Some(w));
        let brw = c.b(Some(u), Some(v), c.r(Some(w)));
        let brs = c.br(Some(w), Some(s));
        for &k in &all {
            a.tuple();
            let tup = [u, v, w, s, k];
            let k = Some(k);
            a.iff(
                "(1) B(u,v,w) = c·s ⇔ B(u,v,r_w) = c·B_R(w,s)",
                &tup,
                bw == c.mul(k, Some(s)),
                brw == c.mul(k, brs),
                &[],
            );
            a.iff(
                "(2) c·B(u,v,w) = s ⇔ c·B(u,v,r_w) = B_R(w,s)",
                &tup,
                c.mul(k, bw) == Some(s),
                c.mul(k, brw) == brs,
                &[],
            );
        }
    });
}

fn lemma_13(c: &Ctx, a: &mut Acc) {
    use Side::{L, R};
    for_absorb(c, |u, v, w, s| {
        a.tuple();
        let tup = [u, v, w, s];
        let ss = Some(s);
        let bw = c.b(Some(u), Some(v), Some(w));
        let brw = c.b(Some(u), Some(v), c.r(Some(w)));
        let brs = c.br(Some(w), ss);
        let ops = [bw, ss, brw, brs];
        a.iff("(1) ≤_L", &tup, c.le(L, bw, ss), c.le(L, brw, brs), &ops);
        a.iff("(1) >_L", &tup, c.lt(L, ss, bw), c.lt(L, brs, brw), &ops);
        a.iff("(1) |_L", &tup, c.inc(L, bw, ss), c.inc(L, brw, brs), &ops);
        if c.le(L, bw, ss) {
            a.holds("(2≤) s ≡_R B_R(w,s)", &tup, c.eqv(R, ss, brs), &[ss, brs]);
            a.eq("(2≤) B_R(s,B(u,v,w)) = B_R(B_R(w,s),B(u,v,r_w))", &tup, c.br(ss, bw), c.br(brs, brw));
        }
        if c.lt(L, ss, bw) {
            a.holds("(2>) B(u,v,w) ≡_R B(u,v,r_w)", &tup, c.eqv(R, bw, brw), &[bw, brw]);
            a.eq("(2>) B_R(B(u,v,w),s) = B_R(B(u,v,r_w),B_R(w,s))", &tup, c.br(bw, ss), c.br(brw, brs));
        }
    });
}

fn lemma_14(c: &Ctx, a: &mut Acc) {
    use Side::{L, R};
    for_b_triples(c, |u, v, w| {
        a.tuple();
        let tup = [u, v, w];
        let x = c.br(Some(v), Some(u));
        let rv = c.r(Some(v));
        a.holds("B_R(v,u) ≤_L r_v", &tup, c.le(L, x, rv), &[x, rv]);
        a.holds("r_v ≥_R w", &tup, c.le(R, Some(w), rv), &[Some(w), rv]);
        a.eq("B(B_R(v,u), r_v, w) = B(u,v,w)", &tup, c.b(x, rv, Some(w)), c.b(Some(u), Some(v), Some(w)));
    });
}

fn lemma_15(c: &Ctx, a: &mut Acc) {
    for_b_triples(c, |u, v, w| {
        let b = c.b(Some(u), Some(v), Some(w));
        for &s in &c.ns {
            if c.le(Side::L, Some(w), Some(s)) {
                a.tuple();
                a.eq(
                    "B_R(s, B(u,v,w)) = B(u,v,B_R(s,w))",
                    &[u, v, w, s],
                    c.br(Some(s), b),
                    c.b(Some(u), Some(v), c.br(Some(s), Some(w))),
                );
            }
        }
    });
}

fn lemma_16(c: &Ctx, a: &mut Acc) {
    use Side::{L, R};
    for &v in &c.ns {
        for &u in &c.ns {
            if !c.le(L, Some(v), Some(u)) {
                continue;
            }
            for &w in &c.ns {
                if !c.le(R, Some(w), Some(v)) {
                    continue;
                }
                a.tuple();
                let tup = [u, v, w];
                let x = c.br(Some(u), Some(v));
                let y = c.br(Some(u), c.l(Some(v)));
                a.holds("(1) B_R(u,v) ≡_L B_R(u,ℓ_v)", &tup, c.eqv(L, x, y), &[x, y]);
                let lhs = c.bl(Some(w), x);
                a.eq("(2) B_L(w,B_R(u,v)) = B_L(B_L(w,v),B_R(u,ℓ_v))", &tup, lhs, c.bl(c.bl(Some(w), Some(v)), y));
                if c.side == "S" {
                    let printed = c.bl(c.bl(Some(w), Some(u)), y);
                    if printed.is_none() || printed != lhs {
                        a.note("3.16(2) as printed, with B_L(w,u), is undefined or differs; B_L(w,v) from its proof is checked instead");
                    }
                }
            }
        }
    }
}

fn lemma_17(c: &Ctx, a: &mut Acc) {
    use Side::{L, R};
    for &v in &c.ns {
        for &u in &c.ns {
            if !c.le(L, Some(v), Some(u)) {
                continue;
            }
            for &w in &c.ns {
                if !c.le(R, Some(v), Some(w)) {
                    continue;
                }
                a.tuple();
                a.eq(
                    "B_L(B_R(u,v),w) = B_R(u,B_L(v,w))",
                    &[u, v, w],
                    c.bl(c.br(Some(u), Some(v)), Some(w)),
                    c.br(Some(u), c.bl(Some(v), Some(w))),
                );
            }
        }
    }
    if c.side == "S" {
        a.note("3.17 hypothesis names u' but the conclusion uses u; checked with u throughout");
    }
}

fn lemma_18(c: &Ctx, a: &mut Acc) {
    for_b_triples(c, |u, v, w| {
        a.tuple();
        let (su, sv, sw) = (Some(u), Some(v), Some(w));
        a.eq(
            "B(B_R(v,u),r_v,w) = B(u,ℓ_v,B_L(w,v))",
            &[u, v, w],
            c.b(c.br(sv, su), c.r(sv), sw),
            c.b(su, c.l(sv), c.bl(sw, sv)),
        );
    });
}

fn run_lemma(c: &Ctx, id: u8) -> (LemmaCount, Vec<LemmaViolation>, BTreeMap<String, usize>) {
    let mut a = Acc::new(c, id);
    match id {
        1 => lemma_1(c, &mut a),
        2 => lemma_2(c, &mut a),
        3 => lemma_3(c, &mut a),
        4 => lemma_4(c, &mut a),
        5 => lemma_5(c, &mut a),
        6 => lemma_6(c, &mut a),
        7 => lemma_7(c, &mut a),
        8 => lemma_8(c, &mut a),
        9 => lemma_9(c, &mut a),
        10 => lemma_10(c, &mut a),
        11 => lemma_11(c, &mut a),
        12 => lemma_12(c, &mut a),
        13 => lemma_13(c, &mut a),
        14 => lemma_14(c, &mut a),
        15 => lemma_15(c, &mut a),
        16 => lemma_16(c, &mut a),
        17 => lemma_17(c, &mut a),
        18 => lemma_18(c, &mut a),
        _ => panic!("no lemma 3.{id}"),
    }
    (a.count, a.violations, a.notes)
}

/// Checks the selected lemmas over all applicable nonzero tuples, on `S`
/// and on its dual (which covers the `B_L` halves). Values of `B`, `B_R` and
/// `B_L` with a zero argument are taken to be zero.
pub fn lemma_suite(s: &Semigroup, g: &GreenData, rc: &RepChoice, lemmas: &[u8]) -> LemmaReport {
    let direct = Ctx::new(s.clone(), g.clone(), rc.clone(), "S");
    let dual = Ctx::new(s.dual(), g.dual(), rc.dual(), "dual");
    let jobs: Vec<(&Ctx, u8)> = lemmas.iter().flat_map(|&id| [(&direct, id), (&dual, id)]).collect();
    let results: Vec<_> = jobs.par_iter().map(|&(c, id)| run_lemma(c, id)).collect();
    let mut report = LemmaReport::default();
    let mut merged: BTreeMap<u8, LemmaCount> = BTreeMap::new();
    let mut notes: BTreeMap<String, usize> = BTreeMap::new();
    for ((_, id), (count, violations, n)) in jobs.iter().zip(results) {
        let m = merged.entry(*id).or_insert_with(|| LemmaCount {
            lemma: count.lemma.clone(),
            ..Default::default()
        });
        m.tuples += count.tuples;
        m.checks += count.checks;
        m.vacuous += count.vacuous;
        m.violations += count.violations;
        report.violations.extend(violations);
        for (k, v) in n {
            *notes.entry(k).or_default() += v;
        }
    }
    report.counts = merged.into_values().collect();
    report.notes = notes
        .into_iter()
        .map(|(k, v)| if v > 1 { format!("{k} ({v} tuples)") } else { k })
        .collect();
    report
}

// ---------------------------------------------------------------- continuity

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PositionClass {
    Maximal,
    Minimal,
    Ascending,
    Descending,
    /// A segment of length one, including a lone zero.
    Single,
}

/// Links between neighbours and the class of every position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub links: Vec<Link>,
    pub classes: Vec<PositionClass>,
}

impl Shape {
    /// Start offsets of the continuous segments.
    pub fn segment_starts(&self) -> Vec<usize> {
        std::iter::once(0)
            .chain(
                self.links
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| **l == Link::Break)
                    .map(|(i, _)| i + 1),
            )
            .collect()
    }
}

pub fn shape(sys: &RewriteSystem, w: &Word) -> Shape {
    let syms = w.syms();
    let n = syms.len();
    let links: Vec<Link> = syms.windows(2).map(|p| sys.link(p[0], p[1])).collect();
    // `up(i)`: x_i ≤ x_{i+1} inside a segment; `down(i)`: x_i > x_{i+1}.
    let down = |i: usize| links[i] == Link::Ordered(Comparison::Greater);
    let joined = |i: usize| links[i] != Link::Break;
    let classes = (0..n)
        .map(|i| {
            let left = i > 0 && joined(i - 1);
            let right = i + 1 < n && joined(i);
            match (left, right) {
                (false, false) => PositionClass::Single,
                (false, true) => {
                    if down(i) {
                        PositionClass::Maximal
                    } else {
                        PositionClass::Minimal
                    }
                }
                (true, false) => {
                    if down(i - 1) {
                        PositionClass::Minimal
                    } else {
                        PositionClass::Maximal
                    }
                }
                (true, true) => match (down(i - 1), down(i)) {
                    (false, true) => PositionClass::Maximal,
                    (true, false) => PositionClass::Minimal,
                    (false, false) => PositionClass::Ascending,
                    (true, true) => PositionClass::Descending,
                },
            }
        })
        .collect();
    Shape { links, classes }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ContinuityReport {
    /// Maximal runs of consecutive length-preserving steps.
    pub runs: usize,
    pub steps: usize,
    pub max_changes_at_maximal: usize,
    pub factorization_broken: usize,
    pub class_changed: usize,
    pub relation_changed: usize,
    pub maximal_overflow: usize,
    pub examples: Vec<String>,
}

impl ContinuityReport {
    pub fn passed(&self) -> bool {
        self.factorization_broken == 0
            && self.class_changed == 0
            && self.relation_changed == 0
            && self.maximal_overflow == 0
    }

    pub fn merge(&mut self, o: ContinuityReport) {
        self.runs += o.runs;
        self.steps += o.steps;
        self.max_changes_at_maximal = self.max_changes_at_maximal.max(o.max_changes_at_maximal);
        self.factorization_broken += o.factorization_broken;
        self.class_changed += o.class_changed;
        self.relation_changed += o.relation_changed;
        self.maximal_overflow += o.maximal_overflow;
        for e in o.examples {
            if self.examples.len() < EXAMPLES {
                self.examples.push(e);
            }
        }
    }
}

/// Checks every maximal run of steps by rules 2.1–2.4 in a trace of `w`:
/// segment breaks, position classes and neighbour relations stay fixed,
/// and no maximal position changes more than twice.
pub fn continuity_diagnostics(sys: &RewriteSystem, w: &Word, trace: &[Step]) -> ContinuityReport {
    let mut rep = ContinuityReport::default();
    let mut before = w;
    let mut i = 0;
    while i < trace.len() {
        if !trace[i].redex.rule.is_length_preserving() {
            before = &trace[i].result;
            i += 1;
            continue;
        }
        let start = before;
        let s0 = shape(sys, start);
        let mut changes = vec![0usize; start.len()];
        rep.runs += 1;
        let mut cur = start;
        while i < trace.len() && trace[i].redex.rule.is_length_preserving() {
            let step = &trace[i];
            let next = &step.result;
            let sh = shape(sys, next);
            rep.steps += 1;
            let breaks = |s: &Shape| s.links.iter().map(|l| *l == Link::Break).collect::<Vec<_>>();
            let mut bad = Vec::new();
            if breaks(&sh) != breaks(&s0) {
                rep.factorization_broken += 1;
                bad.push("factorization");
            }
            if sh.classes != s0.classes {
                rep.class_changed += 1;
                bad.push("position classes");
            }
            if sh.links != s0.links {
                rep.relation_changed += 1;
                bad.push("neighbour relations");
            }
            for (k, c) in changes.iter_mut().enumerate() {
                if cur.syms()[k] != next.syms()[k] {
                    *c += 1;
                }
            }
            if !bad.is_empty() && rep.examples.len() < EXAMPLES {
                rep.examples.push(format!(
                    "({}) -> ({}) by {}: {}",
                    sys.display_word(cur),
                    sys.display_word(next),
                    step.redex.rule,
                    bad.join(", ")
                ));
            }
            cur = next;
            i += 1;
        }
        for (k, &c) in changes.iter().enumerate() {
            if s0.classes[k] == PositionClass::Maximal {
                rep.max_changes_at_maximal = rep.max_changes_at_maximal.max(c);
                if c > 2 {
                    rep.maximal_overflow += 1;
                    if rep.examples.len() < EXAMPLES {
                        rep.examples.push(format!(
                            "({}): maximal position {k} changed {c} times",
                            sys.display_word(start)
                        ));
                    }
                }
            }
        }
        before = cur;
    }
    rep
}

// ---------------------------------------------------------------- termination

/// Seeded random words of length `1..=maxlen` over the full alphabet.
pub fn random_words(sys: &RewriteSystem, count: usize, maxlen: usize, seed: u64) -> Vec<Word> {
    let alphabet = sys.alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=maxlen);
            Word::new((0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect())
        })
        .collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TerminationStats {
    pub words: usize,
    pub runs: usize,
    pub max_steps: usize,
    pub cap_hits: usize,
    /// Words whose strategies disagreed on the normal form.
    pub disagreements: usize,
    pub continuity: ContinuityReport,
    pub examples: Vec<String>,
}

impl TerminationStats {
    pub fn passed(&self) -> bool {
        self.cap_hits == 0 && self.disagreements == 0
    }
}

/// Reduces every word under every strategy and compares the normal forms.
pub fn termination_probe(sys: &RewriteSystem, words: &[Word], strategies: &[Strategy]) -> TerminationStats {
    let parts: Vec<TerminationStats> = words
        .par_iter()
        .map(|w| {
            let mut st = TerminationStats {
                words: 1,
                ..Default::default()
            };
            let mut nfs: Vec<Word> = Vec::new();
            for &strategy in strategies {
                st.runs += 1;
                match sys.reduce_with(w, strategy) {
                    Ok(r) => {
                        st.max_steps = st.max_steps.max(r.steps);
                        st.continuity.merge(continuity_diagnostics(sys, w, &r.trace));
                        nfs.push(r.normal_form);
                    }
                    Err(RewriteError::StepCap { .. }) => {
                        st.cap_hits += 1;
                        st.examples.push(format!("({}) exceeds the step cap under {strategy}", sys.display_word(w)));
                    }
                    Err(e) => panic!("unexpected rewrite error: {e}"),
                }
            }
            if nfs.windows(2).any(|p| p[0] != p[1]) {
                st.disagreements += 1;
                let list: Vec<String> = nfs.iter().map(|x| format!("({})", sys.display_word(x))).collect();
                st.examples.push(format!("({}) -> {}", sys.display_word(w), list.join(" / ")));
            }
            st
        })
        .collect();
    let mut total = TerminationStats::default();
    for p in parts {
        total.words += p.words;
        total.runs += p.runs;
        total.max_steps = total.max_steps.max(p.max_steps);
        total.cap_hits += p.cap_hits;
        total.disagreements += p.disagreements;
        total.continuity.merge(p.continuity);
        for e in p.examples {
            if total.examples.len() < EXAMPLES {
                total.examples.push(e);
            }
        }
    }
    total
}

/// The leftmost and rightmost strategies followed by `seeds` random ones.
pub fn standard_strategies(seeds: u64) -> Vec<Strategy> {
    let mut v = vec![Strategy::Leftmost, Strategy::Rightmost];
    v.extend((0..seeds).map(|seed| Strategy::Random { seed }));
    v
}

/// Observations with representatives picked without the alignment
/// constraints. Not a pass/fail check.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CarelessProbe {
    pub reps_valid: bool,
    pub violations: Vec<String>,
    pub stats: Option<TerminationStats>,
}

pub fn careless_probe(sys: &RewriteSystem, words: &[Word], strategies: &[Strategy], step_cap: usize) -> CarelessProbe {
    let sg = sys.semigroup();
    let reps = RepChoice::careless(sg, sys.green());
    let violations: Vec<String> = reps.validate(sg, sys.green()).iter().map(|v| v.describe(sg)).collect();
    let opts = SystemOptions {
        allow_ambiguous: true,
        allow_invalid_reps: true,
        step_cap: Some(step_cap),
    };
    let stats = RewriteSystem::with_options(sg.clone(), Some(reps), opts)
        .ok()
        .map(|alt| termination_probe(&alt, words, strategies));
    CarelessProbe {
        reps_valid: violations.is_empty(),
        violations,
        stats,
    }
}

// ---------------------------------------------------------------- report

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub maxlen: usize,
    pub lemmas: Vec<u8>,
    pub seeds: u64,
    pub random_words: usize,
    pub random_maxlen: usize,
    pub node_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            maxlen: 5,
            lemmas: ALL_LEMMAS.to_vec(),
            seeds: 5,
            random_words: 1000,
            random_maxlen: 10,
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub order: usize,
    pub authoritative: bool,
    pub unique_normal_forms: BfsSweep,
    pub critical_pairs: PairStats,
    pub lemmas: LemmaReport,
    /// Diagnostics over the deterministic traces of all words up to `maxlen`.
    pub continuity: ContinuityReport,
    pub strategies: TerminationStats,
    pub careless_reps: CarelessProbe,
    pub passed: bool,
}

/// Deterministic traces of every word of length `≤ maxlen`, diagnosed.
pub fn continuity_sweep(sys: &RewriteSystem, maxlen: usize) -> ContinuityReport {
    let parts: Vec<ContinuityReport> = all_words(sys, maxlen)
        .map(|w| {
            let r = sys.reduce(&w).expect("word reduces");
            continuity_diagnostics(sys, &w, &r.trace)
        })
        .collect();
    let mut total = ContinuityReport::default();
    for p in parts {
        total.merge(p);
    }
    total
}

pub fn verify_all(sys: &RewriteSystem, cfg: &VerifyConfig) -> VerifyReport {
    let unique = bfs_sweep(sys, cfg.maxlen, cfg.node_cap);
    let pairs = critical_pairs(sys, cfg.maxlen);
    let pair_stats = PairStats::summarize(sys, cfg.maxlen, &pairs);
    let lemmas = lemma_suite(sys.semigroup(), sys.green(), sys.reps(), &cfg.lemmas);
    let continuity = continuity_sweep(sys, cfg.maxlen);
    let words = random_words(sys, cfg.random_words, cfg.random_maxlen, 0);
    let strategies = standard_strategies(cfg.seeds);
    let strat = termination_probe(sys, &words, &strategies);
    let careless_words: Vec<Word> = words.iter().take(100).cloned().collect();
    let careless = careless_probe(sys, &careless_words, &[Strategy::Leftmost], 10_000);
    let passed = unique.passed()
        && pair_stats.passed()
        && lemmas.passed()
        && continuity.passed()
        && strat.passed()
        && strat.continuity.passed();
    VerifyReport {
        order: sys.semigroup().order(),
        authoritative: sys.is_authoritative(),
        unique_normal_forms: unique,
        critical_pairs: pair_stats,
        lemmas,
        continuity,
        strategies: strat,
        careless_reps: careless,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn sys(name: &str) -> RewriteSystem {
        RewriteSystem::new(corpus::load(name)).unwrap()
    }

    fn w(s: &RewriteSystem, t: &str) -> Word {
        s.parse_word(t).unwrap()
    }

    #[test]
    fn bfs_examples() {
        let s = sys("lz2");
        let o = confluence_bfs(&s, &w(&s, "a b' b"), DEFAULT_NODE_CAP);
        assert_eq!(o.sinks, vec![w(&s, "a")]);
        assert!(o.is_unique());
        let o = confluence_bfs(&s, &w(&s, "0 a b'"), DEFAULT_NODE_CAP);
        assert_eq!(o.sinks, vec![w(&s, "0")]);
        let s = sys("n3");
        let o = confluence_bfs(&s, &w(&s, "a a a"), DEFAULT_NODE_CAP);
        assert_eq!(o.sinks, vec![w(&s, "0")]);
    }

    #[test]
    fn lemma_ids() {
        assert_eq!(parse_lemma_ids("all").unwrap().len(), 18);
        assert_eq!(parse_lemma_ids("3.9, 1,3.9").unwrap(), vec![1, 9]);
        assert!(parse_lemma_ids("3.19").is_err());
    }

    #[test]
    fn shape_classes() {
        let s = sys("lz2");
        let sh = shape(&s, &w(&s, "b' b"));
        // b ≡_R b, so the pair is ≤ and the right end is maximal
        assert_eq!(sh.classes, vec![PositionClass::Minimal, PositionClass::Maximal]);
        let sh = shape(&s, &w(&s, "a' b"));
        assert_eq!(sh.links, vec![Link::Break]);
        assert_eq!(sh.classes, vec![PositionClass::Single, PositionClass::Single]);
    }

    #[test]
    fn continuity_on_left_zero_trace() {
        let s = sys("lz2");
        let word = w(&s, "b' b");
        let r = s.reduce(&word).unwrap();
        let rep = continuity_diagnostics(&s, &word, &r.trace);
        assert_eq!(rep.runs, 1);
        assert_eq!(rep.max_changes_at_maximal, 1);
        assert!(rep.passed());
        let word = w(&s, "a a'");
        let r = s.reduce(&word).unwrap();
        assert!(r.trace.is_empty());
        assert_eq!(continuity_diagnostics(&s, &word, &r.trace).runs, 0);
    }

    #[test]
    fn lemma_examples() {
        let s = sys("z2");
        let rep = lemma_suite(s.semigroup(), s.green(), s.reps(), &[2]);
        assert!(rep.passed());
        assert!(rep.counts[0].tuples > 0);
        let s = sys("n3");
        assert!(lemma_suite(s.semigroup(), s.green(), s.reps(), &[6]).passed());
        let s = sys("b2");
        let rep = lemma_suite(s.semigroup(), s.green(), s.reps(), &[10]);
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn critical_pair_examples() {
        let s = sys("lz2");
        let pairs = critical_pairs(&s, 3);
        assert!(!pairs.is_empty());
        assert!(pairs.iter().all(|p| matches!(p.verdict, Verdict::Joinable(_))));
        let peak = w(&s, "a b' b");
        assert!(pairs.iter().any(|p| p.peak == peak));
    }

    #[test]
    fn random_words_are_reproducible() {
        let s = sys("b2");
        assert_eq!(random_words(&s, 20, 10, 3), random_words(&s, 20, 10, 3));
    }
}
