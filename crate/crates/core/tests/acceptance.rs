use std::collections::{BTreeSet, HashSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use regsem::corpus;
use regsem::sreg::{self, check_axioms, check_embedding, enumerate_elements, fact_2_5_check, EnumCaps, SRegTable};
use regsem::verify::{
    self, bfs_sweep, confluence_bfs, continuity_diagnostics, continuity_sweep, critical_pairs, lemma_suite,
    random_words, standard_strategies, termination_probe, ContinuityReport, PairStats, ALL_LEMMAS,
    DEFAULT_NODE_CAP,
};
use regsem::{Element, GreenData, RewriteSystem, Semigroup, Side, Strategy, Sym, Word};

struct Outcome {
    ok: bool,
    detail: String,
}

fn systems() -> Vec<(&'static str, RewriteSystem)> {
    corpus::UNAMBIGUOUS
        .iter()
        .map(|&n| (n, RewriteSystem::new(corpus::load(n)).expect("unambiguous member")))
        .collect()
}

fn within(t: Duration, limit: u64) -> bool {
    t <= Duration::from_secs(limit)
}

// s ≤_L t iff s ∈ S¹t, straight from the table.
fn below_l(sg: &Semigroup, s: Element, t: Element) -> bool {
    s == t || sg.elements().any(|x| sg.product(x, t) == s)
}

fn c1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for &n in corpus::UNAMBIGUOUS {
        let sg = corpus::load(n);
        if !GreenData::compute(&sg).is_unambiguous().verdict {
            bad.push(format!("{n} judged ambiguous"));
        }
    }
    for &n in corpus::AMBIGUOUS {
        let sg = corpus::load(n);
        let w = GreenData::compute(&sg).is_unambiguous();
        match (w.verdict, w.violation) {
            (false, Some(v)) => {
                let (s, u, t) = (v.upper_left, v.lower, v.upper_right);
                let below = |a, b| match v.side {
                    Side::L => below_l(&sg, a, b),
                    Side::R => below_l(&sg.dual(), a, b),
                };
                let genuine = !sg.is_zero(u)
                    && below(u, s)
                    && !below(s, u)
                    && below(u, t)
                    && !below(t, u)
                    && !below(s, t)
                    && !below(t, s);
                if !genuine {
                    bad.push(format!("{n} witness does not check out"));
                }
            }
            _ => bad.push(format!("{n} not judged ambiguous")),
        }
    }
    let sg = corpus::load("sl3");
    let w = GreenData::compute(&sg).is_unambiguous().violation.unwrap();
    let triple = [w.upper_left, w.lower, w.upper_right].map(|e| sg.name(e).to_owned());
    if triple != ["a", "ab", "b"] {
        bad.push(format!("sl3 witness {triple:?}"));
    }
    let t = start.elapsed();
    Outcome {
        ok: bad.is_empty() && within(t, 1),
        detail: format!(
            "{} unambiguous, {} ambiguous, sl3 witness (a, ab, b), {t:.2?}{}",
            corpus::UNAMBIGUOUS.len(),
            corpus::AMBIGUOUS.len(),
            issues(&bad)
        ),
    }
}

fn c2(sys: &[(&str, RewriteSystem)]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut words = 0;
    for (n, s) in sys {
        let r = bfs_sweep(s, 5, DEFAULT_NODE_CAP);
        words += r.words;
        if !r.passed() {
            bad.push(format!("{n}: {} multi, {} cyclic, {} unresolved", r.multiple_sinks, r.cyclic, r.unresolved));
        }
    }
    let t = start.elapsed();
    Outcome {
        ok: bad.is_empty() && within(t, 60),
        detail: format!("{words} words of length <= 5, one sink each, acyclic, {t:.2?}{}", issues(&bad)),
    }
}

fn c3(sys: &[(&str, RewriteSystem)]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (n, s) in sys {
        let p = critical_pairs(s, 5);
        let st = PairStats::summarize(s, 5, &p);
        pairs += st.pairs;
        if !st.passed() {
            bad.push(format!("{n}: {}/{} joinable, {} unresolved", st.joinable, st.pairs, st.unresolved));
        }
    }
    let t = start.elapsed();
    Outcome {
        ok: bad.is_empty() && within(t, 120),
        detail: format!("{pairs} critical pairs, all joinable, {t:.2?}{}", issues(&bad)),
    }
}

fn c4(sys: &[(&str, RewriteSystem)]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut checks = 0;
    let mut members = 0;
    for (n, s) in sys {
        let sg = s.semigroup();
        if sg.order() > 6 {
            continue;
        }
        members += 1;
        let r = lemma_suite(sg, s.green(), s.reps(), &ALL_LEMMAS);
        checks += r.counts.iter().map(|c| c.checks).sum::<usize>();
        if !r.passed() {
            bad.push(format!("{n}: {} violations", r.violations.len()));
        }
    }
    let t = start.elapsed();
    Outcome {
        ok: bad.is_empty() && within(t, 60),
        detail: format!("{members} members, {checks} checks, 0 violations, {t:.2?}{}", issues(&bad)),
    }
}

// Closure of the generators under concatenation, each product resolved
// by exhaustive rewrite search rather than by a strategy.
fn closure_oracle(sys: &RewriteSystem) -> BTreeSet<String> {
    let sg = sys.semigroup();
    let gens: Vec<Word> = sys.alphabet().into_iter().map(Word::single).collect();
    let mut seen: HashSet<Word> = gens.iter().cloned().collect();
    let mut queue: VecDeque<Word> = gens.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let out = confluence_bfs(sys, &x.concat(g), DEFAULT_NODE_CAP);
            assert!(out.is_unique());
            let nf = out.sinks[0].clone();
            if seen.insert(nf.clone()) {
                queue.push_back(nf);
            }
        }
    }
    seen.iter().map(|w| w.display(sg).to_string()).collect()
}

fn c5() -> Outcome {
    let mut bad = Vec::new();
    let expected: [(&str, &[&str]); 2] = [
        ("lz2", &["0", "a", "b", "a'", "b'", "a a'", "a b'", "a' a", "b a'", "b b'"]),
        ("z2", &["0", "e", "g", "e'", "g'", "e e'", "g e'", "e' e", "g' e"]),
    ];
    let mut sizes = Vec::new();
    for (n, list) in expected {
        let s = RewriteSystem::new(corpus::load(n)).unwrap();
        let table = enumerate_elements(&s, EnumCaps::default()).unwrap();
        let got: BTreeSet<String> = table.elements().iter().map(|w| s.display_word(w).to_string()).collect();
        let want: BTreeSet<String> = list.iter().map(|x| x.to_string()).collect();
        let oracle = closure_oracle(&s);
        sizes.push(format!("{n} {}", table.len()));
        if table.len() != list.len() || got != want {
            bad.push(format!("{n}: enumerated {got:?}"));
        }
        if oracle != want {
            bad.push(format!("{n}: oracle {oracle:?}"));
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: format!("{}; sets match the hand list and the closure oracle{}", sizes.join(", "), issues(&bad)),
    }
}

fn c6(tables: &[(&str, SRegTable)]) -> Outcome {
    let mut bad = Vec::new();
    for (n, t) in tables {
        let v = check_axioms(t);
        if !v.is_empty() {
            bad.push(format!("{n}: {} violations", v.len()));
        }
    }
    let total: usize = tables.iter().map(|(_, t)| t.len()).sum();
    Outcome {
        ok: bad.is_empty(),
        detail: format!("{} tables, {total} elements, involution, regularity, associativity, zero{}", tables.len(), issues(&bad)),
    }
}

fn c7(sys: &[(&str, RewriteSystem)]) -> Outcome {
    let mut bad = Vec::new();
    for (n, s) in sys {
        let e = check_embedding(s).unwrap();
        let f = fact_2_5_check(s).unwrap();
        if !e.is_empty() || !f.is_empty() {
            bad.push(format!("{n}: {} embedding, {} fact", e.len(), f.len()));
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: format!("{} members, injective and multiplicative, R and L pairs agree{}", sys.len(), issues(&bad)),
    }
}

fn shaped_words(s: &RewriteSystem, maxlen: usize) -> Vec<Word> {
    let alphabet = s.alphabet();
    let mut out = Vec::new();
    let mut frontier: Vec<Word> = alphabet.iter().map(|&a| Word::single(a)).collect();
    while let Some(w) = frontier.pop() {
        if w.len() < maxlen {
            for &a in &alphabet {
                let next = w.concat(&Word::single(a));
                if s.is_normal_shape(&next) {
                    frontier.push(next);
                }
            }
        }
        out.push(w);
    }
    out
}

fn c8(sys: &[(&str, RewriteSystem)], tables: &[(&str, SRegTable)]) -> Outcome {
    let mut bad = Vec::new();
    for ((n, s), (_, t)) in sys.iter().zip(tables) {
        if let Some(w) = t.elements().iter().find(|w| !s.is_normal_shape(w)) {
            bad.push(format!("{n}: element {} not normal-shaped", s.display_word(w)));
        }
    }
    let mut checked = 0;
    for (n, s) in sys {
        for w in shaped_words(s, 7) {
            checked += 1;
            if !s.is_irreducible(&w) {
                bad.push(format!("{n}: shaped {} reducible", s.display_word(&w)));
                break;
            }
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: format!("all enumerated elements shaped; {checked} shaped words up to length 7 irreducible{}", issues(&bad)),
    }
}

fn c9(sys: &[(&str, RewriteSystem)], tables: &[(&str, SRegTable)]) -> Outcome {
    let mut total = ContinuityReport::default();
    for ((_, s), (_, t)) in sys.iter().zip(tables) {
        total.merge(continuity_sweep(s, 5));
        for w in verify::all_words(s, 5).collect::<Vec<_>>() {
            let r = s.reduce_with(&w, Strategy::Rightmost).unwrap();
            total.merge(continuity_diagnostics(s, &w, &r.trace));
        }
        for x in t.elements() {
            for y in t.elements() {
                let w = x.concat(y);
                let r = s.reduce(&w).unwrap();
                total.merge(continuity_diagnostics(s, &w, &r.trace));
            }
        }
        let sg = s.semigroup();
        for a in sg.nonzero_elements() {
            for b in sg.nonzero_elements() {
                let w = Word::new(vec![Sym::plain(sg, a), Sym::plain(sg, b)]);
                let r = s.reduce(&w).unwrap();
                total.merge(continuity_diagnostics(s, &w, &r.trace));
            }
        }
    }
    Outcome {
        ok: total.passed(),
        detail: format!(
            "{} runs, {} steps, at most {} changes at a maximal position, {} factorization, {} class, {} relation breaks{}",
            total.runs,
            total.steps,
            total.max_changes_at_maximal,
            total.factorization_broken,
            total.class_changed,
            total.relation_changed,
            issues(&total.examples)
        ),
    }
}

fn c10(sys: &[(&str, RewriteSystem)]) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut runs = 0;
    let strategies = standard_strategies(5);
    for (i, (n, s)) in sys.iter().enumerate() {
        let words = random_words(s, 1000, 10, 0x5eed + i as u64);
        let st = termination_probe(s, &words, &strategies);
        runs += st.runs;
        if !st.passed() {
            bad.push(format!("{n}: {} disagreements, {} cap hits", st.disagreements, st.cap_hits));
        }
    }
    let t = start.elapsed();
    Outcome {
        ok: bad.is_empty() && within(t, 60),
        detail: format!(
            "{} members x 1000 words x {} strategies, {runs} reductions agree, {t:.2?}{}",
            sys.len(),
            strategies.len(),
            issues(&bad)
        ),
    }
}

fn issues(v: &[String]) -> String {
    if v.is_empty() {
        String::new()
    } else {
        format!(" | {}", v.iter().take(4).cloned().collect::<Vec<_>>().join("; "))
    }
}

fn main() -> ExitCode {
    let sys = systems();
    let tables: Vec<(&str, SRegTable)> = sys
        .iter()
        .map(|(n, s)| (*n, sreg::enumerate_elements(s, EnumCaps::default()).expect("finite closure")))
        .collect();
    let results = [
        ("unambiguity decisions", c1()),
        ("unique normal forms", c2(&sys)),
        ("local confluence", c3(&sys)),
        ("lemma suite", c4(&sys)),
        ("enumeration ground truth", c5()),
        ("algebraic axioms", c6(&tables)),
        ("embedding", c7(&sys)),
        ("normal-form shape", c8(&sys, &tables)),
        ("continuity diagnostics", c9(&sys, &tables)),
        ("strategy independence", c10(&sys)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} {name}: {}", i + 1, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
