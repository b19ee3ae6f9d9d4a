//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use posinv::axioms::{
    lemma1_witness, search_pi_violation, verify_theorem1, Lemma1Variant, SearchConfig,
    TheoremOptions, Witness,
};
use posinv::enumerate::{count_classes, enumerate_leot, table1, Leot};
use posinv::fixtures::{FixtureSet, REALIZES, TRANSITIONS};
use posinv::profile::{letters, linear_orders, weak_orders};
use posinv::rational::Rational;
use posinv::realize::{
    debord_realize, realize_omg, synthesize_transition, synthesize_transition_with,
    verify_transition, MarginTarget, SynthesisOptions, TransitionInstance, TransitionSolution,
};
use posinv::{evaluate, margin_lines, Ballot, MarginMatrix, MethodId, OrdinalMarginGraph, Profile};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 12] = [
        ("irresoluteness table exact", table1_exact),
        (
            "enumeration counts and orbit regularity",
            enumeration_counts,
        ),
        ("fixture margin arithmetic and graphs", fixture_arithmetic),
        ("transition fixtures verify", transition_fixtures),
        ("defensible sets of the proof graphs", defensible_sets),
        ("impossibility check", theorem),
        ("defensible-set containment and witnesses", lemma1_suite),
        ("tripled realizations absorb one ballot", lemma2_suite),
        ("Debord round trip", debord_round_trip),
        ("transition synthesis", synthesis),
        ("positive-involvement search", involvement_search),
        ("ordinal margin invariance", omg_invariance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: posinv::Error) -> String {
    e.to_string()
}

// oracles

fn oracle_margins(p: &Profile) -> MarginMatrix {
    MarginMatrix::from_fn(p.alternatives().to_vec(), |x, y| {
        p.entries()
            .iter()
            .map(|(b, c)| {
                let c = *c as i64;
                if b.prefers(x, y) {
                    c
                } else if b.prefers(y, x) {
                    -c
                } else {
                    0
                }
            })
            .sum()
    })
}

/// Positive-margin edges ranked by distinct margin value.
fn oracle_omg(m: &MarginMatrix) -> BTreeMap<(usize, usize), u32> {
    let n = m.len();
    let mut values: Vec<i64> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| m.get(x, y))
        .filter(|&v| v > 0)
        .collect();
    values.sort_unstable();
    values.dedup();
    let mut out = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            let v = m.get(x, y);
            if v > 0 {
                let r = values.iter().position(|&w| w == v).unwrap() as u32 + 1;
                out.insert((x, y), r);
            }
        }
    }
    out
}

fn realizes(p: &Profile, g: &OrdinalMarginGraph) -> bool {
    p.alternatives() == g.vertices() && oracle_omg(&oracle_margins(p)) == *g.edges()
}

fn random_linear_profile(rng: &mut ChaCha8Rng, n: usize, voters: u64) -> Profile {
    let mut order: Vec<usize> = (0..n).collect();
    let entries = (0..voters)
        .map(|_| {
            order.shuffle(rng);
            (Ballot::linear(&order).unwrap(), 1)
        })
        .collect();
    Profile::new(letters(n), entries).unwrap()
}

// criteria

fn table1_exact() -> Check {
    let expected: [(MethodId, u64, Rational, usize); 7] = [
        (MethodId::SmithSet, 960, Rational::new(2375, 1000), 4),
        (MethodId::UncoveredSet, 960, Rational::from_integer(2), 3),
        (MethodId::Copeland, 960, Rational::new(1625, 1000), 3),
        (
            MethodId::DefensibleSet,
            598,
            Rational::new(1_359_375, 1_000_000),
            3,
        ),
        (
            MethodId::DefensibleCapSmith,
            583,
            Rational::new(134_375, 100_000),
            3,
        ),
        (MethodId::SplitCycle, 104, Rational::new(253, 240), 2),
        (MethodId::Minimax, 0, Rational::from_integer(1), 1),
    ];
    let start = Instant::now();
    let rows = table1(&MethodId::TABLE1).map_err(err)?;
    let elapsed = start.elapsed();
    for (method, multiple, mean, max) in expected {
        let r = rows
            .iter()
            .find(|r| r.method == method)
            .ok_or_else(|| format!("{} missing", method.name()))?;
        ensure(
            r.classes == 1920
                && r.num_multiple == multiple
                && r.mean_size == mean
                && r.max_size == max,
            || {
                format!(
                    "{}: got ({}, {}, {}), expected ({multiple}, {mean}, {max})",
                    method.name(),
                    r.num_multiple,
                    r.mean_size,
                    r.max_size
                )
            },
        )?;
    }
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}, limit 2 minutes")
    })?;
    Ok("21 values exact".into())
}

/// Minimal relabeled signed-rank matrix over all vertex permutations.
fn oracle_canonical(n: usize, r: &[i32]) -> Vec<i32> {
    linear_orders(n)
        .iter()
        .map(|perm| {
            let mut out = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    out[i * n + j] = r[perm[i] * n + perm[j]];
                }
            }
            out
        })
        .min()
        .unwrap()
}

fn labeled_census(n: usize) -> Result<(usize, Vec<usize>, usize), String> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let e = pairs.len();
    let mut oracle_classes: HashMap<Vec<i32>, usize> = HashMap::new();
    let mut lib_by_oracle: HashMap<Vec<i32>, Vec<u8>> = HashMap::new();
    let mut labeled = 0;
    for orient in 0u32..1 << e {
        let bits: Vec<u8> = (0..e).map(|k| (orient >> k & 1) as u8).collect();
        for order in linear_orders(e) {
            let ranks: Vec<u8> = order.iter().map(|&r| r as u8 + 1).collect();
            let mut r = vec![0i32; n * n];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                let (w, l) = if bits[k] == 0 { (i, j) } else { (j, i) };
                r[w * n + l] = ranks[k] as i32;
                r[l * n + w] = -(ranks[k] as i32);
            }
            let key = oracle_canonical(n, &r);
            let lib = Leot::new(n, bits.clone(), ranks)
                .map_err(err)?
                .canonical_form()
                .as_bytes()
                .to_vec();
            match lib_by_oracle.get(&key) {
                Some(k) if *k != lib => return Err("canonical forms split an orbit".into()),
                Some(_) => {}
                None => {
                    lib_by_oracle.insert(key.clone(), lib);
                }
            }
            *oracle_classes.entry(key).or_default() += 1;
            labeled += 1;
        }
    }
    let distinct_lib: std::collections::HashSet<&Vec<u8>> = lib_by_oracle.values().collect();
    if distinct_lib.len() != lib_by_oracle.len() {
        return Err("canonical forms merge distinct orbits".into());
    }
    let mut sizes: Vec<usize> = oracle_classes.values().copied().collect();
    sizes.sort_unstable();
    sizes.dedup();
    Ok((oracle_classes.len(), sizes, labeled))
}

fn enumeration_counts() -> Check {
    let c4 = count_classes(4).map_err(err)?;
    let c3 = count_classes(3).map_err(err)?;
    ensure(c4 == 1920 && c3 == 8, || {
        format!("counts n=3: {c3}, n=4: {c4}")
    })?;
    let mut streamed = 0;
    enumerate_leot(4, |_| streamed += 1).map_err(err)?;
    ensure(streamed == 1920, || {
        format!("enumerate_leot streamed {streamed}")
    })?;
    let (classes3, sizes3, _) = labeled_census(3)?;
    ensure(classes3 == 8 && sizes3 == [6], || {
        format!("n=3 census: {classes3} classes, orbit sizes {sizes3:?}")
    })?;
    let (classes4, sizes4, labeled4) = labeled_census(4)?;
    ensure(
        classes4 == 1920 && sizes4 == [24] && labeled4 == 46_080,
        || format!("n=4 census: {classes4} classes, orbit sizes {sizes4:?}, {labeled4} labeled"),
    )?;
    Ok("1920 classes (n=4), 8 (n=3); every orbit of 46080 labeled objects has size 24".into())
}

fn fixture_arithmetic() -> Check {
    let fx = FixtureSet::builtin();
    let p1_printed = [
        "c beats b by 31 - 14 = 17",
        "a beats c by 30 - 15 = 15",
        "b beats a by 29 - 16 = 13",
        "b beats d by 28 - 17 = 11",
        "d beats c by 24 - 21 = 3",
        "d beats a by 23 - 22 = 1",
    ];
    let p1: Vec<String> = margin_lines(fx.profile("p1").map_err(err)?)
        .iter()
        .map(|l| l.to_string())
        .collect();
    ensure(p1 == p1_printed, || format!("p1 listing {p1:?}"))?;
    let s5_first = margin_lines(fx.profile("s5").map_err(err)?)[0].to_string();
    ensure(s5_first == "b beats a by 35 - 16 = 19", || {
        format!("s5 first line `{s5_first}`")
    })?;
    let mut lines = 0;
    for (name, printed) in &fx.margin_listings {
        let p = fx.profile(name).map_err(err)?;
        let m = oracle_margins(p);
        let ours: Vec<String> = margin_lines(p).iter().map(|l| l.to_string()).collect();
        ensure(ours == *printed, || {
            format!("{name}: {ours:?} vs {printed:?}")
        })?;
        for l in margin_lines(p) {
            let (x, y) = (
                p.index_of(l.winner.as_str()).unwrap(),
                p.index_of(l.loser.as_str()).unwrap(),
            );
            ensure(m.get(x, y) == l.margin(), || {
                format!("{name}: `{l}` disagrees with oracle")
            })?;
        }
        lines += ours.len();
    }
    ensure(fx.margin_listings.len() == 8 && lines == 48, || {
        format!("{} listings, {lines} lines", fx.margin_listings.len())
    })?;
    for (p, g) in REALIZES {
        let prof = fx.profile(p).map_err(err)?;
        let graph = fx.graph(g).map_err(err)?;
        ensure(realizes(prof, graph), || {
            format!("{p} does not realize {g}")
        })?;
        ensure(prof.ordinal_margin_graph() == *graph, || {
            format!("library graph of {p} differs from {g}")
        })?;
    }
    Ok(format!(
        "{lines} margin lines exact; 8 profiles realize their graphs"
    ))
}

fn check_solution(
    sol: &TransitionSolution,
    src: &OrdinalMarginGraph,
    dst: &OrdinalMarginGraph,
    fav: &str,
) -> Result<(), String> {
    let f = sol.base.index_of(fav).map_err(err)?;
    ensure(realizes(&sol.base, src), || {
        "base does not realize the source".into()
    })?;
    ensure(sol.added.num_voters() > 0, || "no voters added".into())?;
    ensure(
        sol.added
            .entries()
            .iter()
            .all(|(b, _)| b.unique_top() == Some(f)),
        || format!("an added ballot does not rank {fav} uniquely first"),
    )?;
    let result = sol.base.add_voters(&sol.added).map_err(err)?;
    ensure(realizes(&result, dst), || {
        "result does not realize the destination".into()
    })
}

fn transition_fixtures() -> Check {
    let fx = FixtureSet::builtin();
    let mut totals = Vec::new();
    for t in TRANSITIONS {
        let (src, dst) = (
            fx.graph(t.source).map_err(err)?,
            fx.graph(t.destination).map_err(err)?,
        );
        let inst =
            TransitionInstance::new(src.clone(), dst.clone(), t.favorite, u64::MAX).map_err(err)?;
        let sol = TransitionSolution {
            base: fx.profile(t.base).map_err(err)?.clone(),
            added: fx.added(t.added).map_err(err)?.clone(),
        };
        let check = verify_transition(&sol, &inst);
        ensure(check.ok(), || format!("{}: {check}", t.name))?;
        check_solution(&sol, src, dst, t.favorite).map_err(|e| format!("{}: {e}", t.name))?;
        let expected_result = fx.profile(t.result).map_err(err)?;
        ensure(sol.result().map_err(err)? == *expected_result, || {
            format!("{}: base + added differs from {}", t.name, t.result)
        })?;
        totals.push(sol.total_voters());
    }
    Ok(format!("all four verify (totals {totals:?})"))
}

fn defensible_sets() -> Check {
    let fx = FixtureSet::builtin();
    let expected: [(&str, &[&str]); 5] = [
        ("m1", &["a", "d"]),
        ("m2", &["b", "d"]),
        ("m3", &["b", "d"]),
        ("m4", &["a", "d"]),
        ("m5", &["d"]),
    ];
    for (name, want) in expected {
        let g = fx.graph(name).map_err(err)?;
        let got = evaluate(MethodId::DefensibleSet, g).map_err(err)?;
        ensure(got.labels() == want, || format!("{name}: {got}"))?;
        let oracle: Vec<&str> = common::defensible(&g.rank_matrix())
            .iter()
            .map(|&i| g.vertices()[i].as_str())
            .collect();
        ensure(oracle == want, || {
            format!("{name}: oracle gives {oracle:?}")
        })?;
    }
    Ok("D(M1)={a,d} D(M2)={b,d} D(M3)={b,d} D(M4)={a,d} D(M5)={d}".into())
}

fn theorem() -> Check {
    let r = verify_theorem1(TheoremOptions::default()).map_err(err)?;
    ensure(r.verified() && r.surviving.is_empty(), || {
        format!("{} surviving assignments", r.surviving.len())
    })?;
    let find = |assumption: &str| {
        r.branches
            .iter()
            .find(|b| b.assumption == assumption)
            .and_then(|b| b.contradiction.clone())
            .ok_or_else(|| format!("no contradiction for {assumption}"))
    };
    let a = find("F(M1)={a}")?;
    let d = find("F(M1)={d}")?;
    ensure(
        a.starts_with("M5 =>_d M4 forces F(M4)={d} but F(M4)={a}"),
        || a.clone(),
    )?;
    ensure(
        d.starts_with("M3 =>_b M2 forces F(M2)={b} but F(M2)={d}"),
        || d.clone(),
    )?;
    ensure(r.branches.len() == 2, || {
        format!("{} branches", r.branches.len())
    })?;
    Ok(format!(
        "{} assignments examined, 0 surviving; branches a (M4) and d (M2) contradict",
        r.assignments_examined
    ))
}

fn lemma1_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e44a1);
    let mut witnesses = 0;
    let profiles = 1000;
    for i in 0..profiles {
        let n = rng.gen_range(3..=5);
        let voters = rng.gen_range(1..=25);
        let p = random_linear_profile(&mut rng, n, voters);
        let m = oracle_margins(&p);
        let d = evaluate(MethodId::DefensibleSet, &p).map_err(err)?;
        let want: Vec<&str> = common::defensible(&m)
            .iter()
            .map(|&x| p.alternatives()[x].as_str())
            .collect();
        ensure(d.labels() == want, || {
            format!("profile {i}: defensible set disagrees with oracle")
        })?;
        for method in [MethodId::Minimax, MethodId::SplitCycle] {
            let w = evaluate(method, &p).map_err(err)?;
            ensure(w.is_subset(&d), || {
                format!("profile {i}: {method} {w} not within {d}\n{p}")
            })?;
        }
        for x in p.alternatives() {
            if d.contains(x.as_str()) {
                continue;
            }
            for variant in [Lemma1Variant::Strict, Lemma1Variant::Weak] {
                let w = lemma1_witness(&p, x.as_str(), variant).map_err(err)?;
                let q = &w.profile;
                let y = q.index_of(w.defeater.as_str()).map_err(err)?;
                let mq = oracle_margins(q);
                let ok = (0..n).filter(|&z| z != y).all(|z| match variant {
                    Lemma1Variant::Strict => mq.get(y, z) > 0,
                    Lemma1Variant::Weak => mq.get(y, z) >= 0,
                });
                ensure(ok, || {
                    format!("profile {i}: {variant:?} witness for {x} fails\n{q}")
                })?;
                ensure(q.num_voters() == p.num_voters() + w.added, || {
                    format!("profile {i}: witness voter count")
                })?;
                ensure(w.ballot.starts_with(&format!("{x}>")), || {
                    format!(
                        "profile {i}: added ballot {} does not rank {x} first",
                        w.ballot
                    )
                })?;
                witnesses += 1;
            }
        }
    }
    Ok(format!(
        "{profiles} profiles: Minimax, Split Cycle within Defensible; {witnesses} witnesses checked"
    ))
}

fn lemma2_suite() -> Check {
    let mut graphs = Vec::new();
    enumerate_leot(4, |t| graphs.push(t.to_graph())).map_err(err)?;
    let ballots = weak_orders(4);
    let mut checked = 0;
    for g in &graphs {
        if evaluate(MethodId::DefensibleSet, g)
            .map_err(err)?
            .is_singleton()
        {
            continue;
        }
        let p = realize_omg(g, None).map_err(err)?;
        ensure(realizes(&p, g), || format!("realization of {g} is wrong"))?;
        let tripled = p.scale(3).map_err(err)?;
        let base = oracle_omg(&oracle_margins(&tripled));
        for b in &ballots {
            let q = tripled.with_ballot(b).map_err(err)?;
            ensure(oracle_omg(&oracle_margins(&q)) == base, || {
                format!(
                    "{g}: adding {} changes the graph",
                    b.display(p.alternatives())
                )
            })?;
        }
        checked += 1;
    }
    ensure(checked >= 100, || {
        format!("only {checked} multi-winner graphs")
    })?;
    Ok(format!(
        "{checked} multi-winner realizations x {} ballots, graph unchanged",
        ballots.len()
    ))
}

fn debord_round_trip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdeb0);
    for n in 3..=5 {
        for k in 0..200 {
            let parity = rng.gen_range(0..2i64);
            let mut m = vec![0i64; n * n];
            for x in 0..n {
                for y in x + 1..n {
                    let v = 2 * rng.gen_range(-6..=6i64) + parity;
                    m[x * n + y] = v;
                    m[y * n + x] = -v;
                }
            }
            let target = MarginMatrix::new(letters(n), m).map_err(err)?;
            let p =
                debord_realize(&MarginTarget::new(target.clone()).map_err(err)?).map_err(err)?;
            ensure(oracle_margins(&p) == target, || {
                format!("n={n} target {k}: round trip differs")
            })?;
        }
    }
    Ok("600 targets (200 per n in 3..=5) round-trip exactly".into())
}

fn synthesis() -> Check {
    let fx = FixtureSet::builtin();
    let limits = [48, 59, 41, 57];
    let mut totals = Vec::new();
    for (t, limit) in TRANSITIONS.iter().zip(limits) {
        let (src, dst) = (
            fx.graph(t.source).map_err(err)?,
            fx.graph(t.destination).map_err(err)?,
        );
        let inst =
            TransitionInstance::new(src.clone(), dst.clone(), t.favorite, 60).map_err(err)?;
        let sol = synthesize_transition(&inst)
            .map_err(err)?
            .ok_or_else(|| format!("{}: nothing within 60 voters", t.name))?;
        ensure(
            verify_transition(&sol, &inst).ok() && sol.total_voters() <= 60,
            || format!("{}: default solution fails", t.name),
        )?;
        check_solution(&sol, src, dst, t.favorite).map_err(|e| format!("{}: {e}", t.name))?;
        let min = synthesize_transition_with(&inst, SynthesisOptions { minimize: true })
            .map_err(err)?
            .ok_or_else(|| format!("{}: minimal search found nothing", t.name))?;
        ensure(verify_transition(&min, &inst).ok(), || {
            format!("{}: minimal solution fails", t.name)
        })?;
        check_solution(&min, src, dst, t.favorite).map_err(|e| format!("{}: {e}", t.name))?;
        ensure(min.total_voters() <= limit, || {
            format!("{}: {} voters exceeds {limit}", t.name, min.total_voters())
        })?;
        totals.push(min.total_voters());
    }
    Ok(format!(
        "all four found within 60; minimal totals {totals:?} <= {limits:?}"
    ))
}

fn involvement_search() -> Check {
    let cfg = SearchConfig {
        seed: 7,
        budget: 1_000_000,
        ..SearchConfig::default()
    };
    let bp = search_pi_violation(MethodId::BeatPath, 4, cfg).map_err(err)?;
    let Some(Witness::Involvement {
        profile,
        ballot,
        favorite,
        ..
    }) = &bp.witness
    else {
        return Err(format!("beat-path: {}", bp.summary()));
    };
    let p = Profile::parse(profile).map_err(err)?;
    let b = Ballot::parse(ballot, p.alternatives()).map_err(err)?;
    let x = p.index_of(favorite).map_err(err)?;
    let before = common::beat_path(&oracle_margins(&p));
    let after = common::beat_path(&oracle_margins(&p.with_ballot(&b).map_err(err)?));
    ensure(
        b.unique_top() == Some(x) && before.contains(&x) && !after.contains(&x),
        || "beat-path witness does not recheck against the oracle".into(),
    )?;
    for method in [MethodId::Minimax, MethodId::SplitCycle, MethodId::Borda] {
        let r = search_pi_violation(method, 4, cfg).map_err(err)?;
        ensure(r.witness.is_none() && r.examined == cfg.budget, || {
            format!("{method}: {}", r.summary())
        })?;
    }
    Ok(format!(
        "beat-path witness after {} samples ({} voters); none for minimax, split-cycle, borda in 10^6 (seed 7)",
        bp.examined,
        p.num_voters()
    ))
}

fn omg_invariance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a61);
    let methods: Vec<MethodId> = MethodId::ALL
        .into_iter()
        .filter(|m| m.is_margin_sufficient())
        .collect();
    for gi in 0..50 {
        let n = rng.gen_range(3..=5);
        let m = MarginMatrix::from_fn(letters(n), |_, _| 2 * rng.gen_range(-4..=4i64));
        let g = OrdinalMarginGraph::from_margins(&m);
        let k = g.max_rank() as i64;
        let mut realizations = Vec::new();
        while realizations.len() < 10 {
            let mut values: Vec<i64> = (1..=4 * k.max(1)).collect();
            values.shuffle(&mut rng);
            let mut a: Vec<i64> = values[..k as usize].iter().map(|v| 2 * v).collect();
            a.sort_unstable();
            let p = realize_omg(&g, Some(&a)).map_err(err)?;
            ensure(realizes(&p, &g), || {
                format!("graph {gi}: realization is wrong")
            })?;
            realizations.push(p);
        }
        for &method in &methods {
            let first = evaluate(method, &realizations[0]).map_err(err)?;
            for p in &realizations[1..] {
                let w = evaluate(method, p).map_err(err)?;
                ensure(w == first, || {
                    format!("graph {gi} ({g}): {method} gives {first} and {w}")
                })?;
            }
            ensure(evaluate(method, &g).map_err(err)? == first, || {
                format!("graph {gi}: {method} on the graph differs")
            })?;
        }
    }
    Ok(format!(
        "{} methods x 50 graphs x 10 realizations agree",
        methods.len()
    ))
}
