//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_fixtures, cycle_lengths, four_regular_fixtures, Fixture};
use subtree_weight::planar::{
    build_dual_tree, dense_square_cycle, find_cycle_near, find_half_cycle_3conn, medial_prism, mohr_cycle,
    mohr_params, split_by_hamilton, square_cycle, subtree_to_cycle, validate_cycle, HalfBranch, Side,
};
use subtree_weight::subset_sum::{
    oracle_subset_sum, partition_dense, subset_sum_dense, subset_sum_via_partition, Dense, Multiset,
};
use subtree_weight::tree::random_tree;
use subtree_weight::{
    build_euler_cycle, check_conditions, find_subtree, find_subtree_traced, oracle_subtree_weights, verify_subtree,
    SearchError, SearchOutcome, TightFamily, WeightedTree,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn in_band(w: u64, k: u64, g: u64) -> bool {
    w <= k && w + g > k
}

fn criterion_1() -> Outcome {
    let t0 = Instant::now();
    let mut trees = 0;
    let mut guaranteed = 0;
    for seed in 0..1200u64 {
        let n = 1 + (seed % 10) as usize;
        let t = random_tree(n, 6, seed).map_err(|e| e.to_string())?;
        trees += 1;
        let achievable = oracle_subtree_weights(&t).map_err(|e| e.to_string())?;
        for k in 1..=t.total_weight() {
            for g in 1..=4 {
                if !check_conditions(&t, k, g).overall {
                    continue;
                }
                guaranteed += 1;
                let r = find_subtree(&t, k, g, None).map_err(|e| format!("seed {seed} k {k} g {g}: {e}"))?;
                let r = r.found().ok_or_else(|| format!("seed {seed} k {k} g {g}: not found"))?;
                ensure(verify_subtree(&t, r, k, g) && achievable.contains(&r.weight), || {
                    format!("seed {seed} k {k} g {g}: bad result {r:?}")
                })?;
            }
        }
    }
    let elapsed = t0.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{trees} trees, {guaranteed} guaranteed (k, g) pairs all found, {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    let mut notes = Vec::new();
    for family in TightFamily::ALL {
        for p in 2..=10u64 {
            let qs: Vec<Option<u64>> = match family {
                TightFamily::PathLower => (1..=10).map(Some).collect(),
                // q = p + 1 is admissible for the family but also breaks the slack
                // inequality, so it cannot isolate the cap condition.
                TightFamily::StarCap => (3..=p.min(10)).map(Some).collect(),
                _ => vec![None],
            };
            for q in qs {
                let inst = family.generate(p, q).map_err(|e| e.to_string())?;
                let label = format!("{family} p={p} q={q:?}");
                let report = check_conditions(&inst.tree, inst.k, inst.g);
                ensure(report.failed() == vec![family.violated()], || format!("{label}: failed flags {:?}", report.failed()))?;
                match find_subtree(&inst.tree, inst.k, inst.g, None) {
                    Ok(SearchOutcome::NotFound { .. }) => {}
                    Err(SearchError::WeightExceedsTarget { .. }) if family == TightFamily::StarCap => {}
                    other => return Err(format!("{label}: expected no subtree, got {other:?}")),
                }
                let achievable = oracle_subtree_weights(&inst.tree).map_err(|e| e.to_string())?;
                ensure(!achievable.iter().any(|&w| in_band(w, inst.k, inst.g)), || {
                    format!("{label}: oracle finds a weight in the band")
                })?;
                checked += 1;
            }
        }
    }
    for p in 2..=9u64 {
        let inst = TightFamily::StarCap.generate(p, Some(p + 1)).map_err(|e| e.to_string())?;
        let failed = check_conditions(&inst.tree, inst.k, inst.g).failed();
        if failed.len() > 1 {
            notes.push(p);
        }
    }
    Ok(format!(
        "{checked} instances, one flag each, oracle-confirmed; star_cap at q = p+1 also fails slack for p in {notes:?} (excluded)"
    ))
}

fn linear_run(n: usize, seed: u64) -> Result<(usize, Duration), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    let t = WeightedTree::path(weights).map_err(|e| e.to_string())?;
    let n1 = n as u64;
    let n2 = t.total_weight();
    // With g = 1 the inequalities pin k to [N2 - N1 + 1, N1]; take the middle.
    let k = (n2 - n1 + 1 + n1) / 2;
    let report = check_conditions(&t, k, 1);
    ensure(report.overall, || format!("N1 = {n}: conditions fail: {report}"))?;
    let t0 = Instant::now();
    let out = find_subtree(&t, k, 1, None).map_err(|e| e.to_string())?;
    let elapsed = t0.elapsed();
    let r = out.found().ok_or_else(|| format!("N1 = {n}: not found"))?;
    ensure(r.weight == k, || format!("N1 = {n}: weight {}", r.weight))?;
    ensure(r.steps <= 3 * 2 * (n - 1), || format!("N1 = {n}: {} steps", r.steps))?;
    Ok((r.steps, elapsed))
}

fn criterion_3() -> Outcome {
    let (big, big_time) = linear_run(1_000_000, 11)?;
    let (small, _) = linear_run(100_000, 11)?;
    ensure(big_time < Duration::from_secs(5), || format!("N1 = 10^6 took {big_time:?}"))?;
    let ratio = big as f64 / small as f64;
    ensure((8.0..=12.0).contains(&ratio), || format!("step ratio {ratio:.2}"))?;
    Ok(format!("steps {big} vs {small} (ratio {ratio:.2}), bound {}, {big_time:.2?}", 6 * (1_000_000 - 1)))
}

fn criterion_4() -> Outcome {
    let mut calls = 0;
    for Fixture { name, graph, ham } in four_regular_fixtures() {
        let n = graph.len() as u64;
        let spectrum: Option<BTreeSet<usize>> = (n <= 14).then(|| cycle_lengths(graph.adjacency()));
        for k in (n / 2).max(3)..=(n.div_ceil(2) + 3).min(n) {
            let out = find_cycle_near(&graph, &ham, k, 1).map_err(|e| format!("{name}: {e}"))?;
            let c = out.found().ok_or_else(|| format!("{name} k={k}: not found"))?;
            ensure(c.len() as u64 == k && validate_cycle(&graph, &c.vertices), || {
                format!("{name} k={k}: got {:?}", c.vertices)
            })?;
            if let Some(s) = &spectrum {
                ensure(s.contains(&(k as usize)), || format!("{name}: enumeration lacks {k}"))?;
            }
            calls += 1;
        }
    }
    Ok(format!("{calls} (instance, k) pairs exact; spectra enumerated for n <= 14"))
}

fn half_ok(f: &Fixture, seen: &mut BTreeSet<&'static str>) -> Result<(), String> {
    let n = f.graph.len();
    let r = find_half_cycle_3conn(&f.graph, &f.ham).map_err(|e| format!("{}: {e}", f.name))?;
    let len = r.cycle.len();
    ensure((len == n / 2 - 1 || len == n / 2 - 2) && validate_cycle(&f.graph, &r.cycle.vertices), || {
        format!("{}: length {len}", f.name)
    })?;
    seen.insert(r.branch.name());
    Ok(())
}

fn criterion_5() -> Outcome {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for n in (8..=40).step_by(2) {
        let (graph, ham) = square_cycle(n).map_err(|e| e.to_string())?;
        half_ok(&Fixture { name: format!("square-cycle {n}"), graph, ham }, &mut seen)?;
        count += 1;
    }
    for n in (8..=40).step_by(2) {
        for seed in 0..3 {
            let (graph, ham) = dense_square_cycle(n, seed).map_err(|e| e.to_string())?;
            half_ok(&Fixture { name: format!("dense-square-cycle {n}/{seed}"), graph, ham }, &mut seen)?;
            count += 1;
        }
    }
    for t in (4..=20).step_by(2) {
        let (graph, ham) = medial_prism(t).map_err(|e| e.to_string())?;
        half_ok(&Fixture { name: format!("medial-prism {t}"), graph, ham }, &mut seen)?;
        count += 1;
    }
    let f = common::icosahedron();
    half_ok(&Fixture { name: "icosahedron".into(), graph: f.0, ham: f.1 }, &mut seen)?;
    count += 1;
    let small = seen.contains(HalfBranch::SmallInteriorFaces.name()) || seen.contains(HalfBranch::SmallExteriorFaces.name());
    ensure(seen.contains(HalfBranch::DenseInterior.name()) && small && seen.contains(HalfBranch::SquareOfCycle.name()), || {
        format!("branches hit: {seen:?}")
    })?;
    Ok(format!("{count} instances, branches hit: {seen:?}"))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    let mut literal_below = 0;
    for f in all_fixtures() {
        let n = f.graph.len();
        if f.graph.edge_count() < 2 * n || n < 5 {
            continue;
        }
        let c = mohr_cycle(&f.graph, &f.ham).map_err(|e| format!("{}: {e}", f.name))?;
        let c = c.found().ok_or_else(|| format!("{}: not found", f.name))?;
        ensure(3 * c.len() >= n && 3 * c.len() <= 2 * n && validate_cycle(&f.graph, &c.vertices), || {
            format!("{}: length {} outside [n/3, 2n/3]", f.name, c.len())
        })?;
        // The wider tolerance ceil(n/3) admits lengths just under n/3 when n = 1 mod 3.
        let k = (2 * n / 3) as u64;
        let wide = find_cycle_near(&f.graph, &f.ham, k, n.div_ceil(3) as u64).map_err(|e| e.to_string())?;
        if let Some(w) = wide.found() {
            if 3 * w.len() < n {
                literal_below += 1;
            }
        }
        count += 1;
    }
    let (k, g) = mohr_params(31);
    Ok(format!(
        "{count} instances with m >= 2n in band (e.g. n = 31: k = {k}, g = {g}); g = ceil(n/3) would drop below n/3 on {literal_below}"
    ))
}

fn all_multisets(max_n: usize, max_v: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(cur: &mut Vec<u64>, min: u64, max_n: usize, max_v: u64, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_n {
            return;
        }
        for v in min..=max_v {
            cur.push(v);
            rec(cur, v, max_n, max_v, out);
            cur.pop();
        }
    }
    rec(&mut cur, 1, max_n, max_v, &mut out);
    out
}

fn criterion_7() -> Outcome {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut sets, mut dense_hits, mut part_hits, mut via_hits) = (0, 0, 0, 0);
    for sorted in all_multisets(8, 5) {
        // The sorted order and one shuffled order, since dense witnesses are contiguous runs.
        let mut shuffled = sorted.clone();
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        for values in [sorted.clone(), shuffled] {
            let a = Multiset::new(values).map_err(|e| e.to_string())?;
            sets += 1;
            let total = a.total();
            for k in 1..=total {
                let oracle = oracle_subset_sum(&a, k).map_err(|e| e.to_string())?;
                if let Some(w) = &oracle {
                    ensure(w.is_valid_for(&a, k), || format!("{a:?} k={k}: bad oracle witness"))?;
                }
                match subset_sum_dense(&a, k) {
                    Dense::True(w) => {
                        ensure(w.is_valid_for(&a, k) && oracle.is_some(), || format!("{a:?} k={k}: dense disagrees"))?;
                        dense_hits += 1;
                    }
                    Dense::False => return Err(format!("{a:?} k={k}: dense answered false")),
                    Dense::NotApplicable => {}
                }
                if 2 * k <= total {
                    let d = subset_sum_via_partition(&a, k).map_err(|e| e.to_string())?;
                    if let Some(dec) = d.decision() {
                        ensure(dec == oracle.is_some(), || format!("{a:?} k={k}: via-partition disagrees"))?;
                        via_hits += 1;
                    }
                    if let Some(w) = d.witness() {
                        ensure(w.is_valid_for(&a, k), || format!("{a:?} k={k}: bad via-partition witness"))?;
                    }
                }
            }
            if total % 2 == 0 {
                let d = partition_dense(&a).map_err(|e| e.to_string())?;
                let oracle = oracle_subset_sum(&a, total / 2).map_err(|e| e.to_string())?;
                if let Some(dec) = d.decision() {
                    ensure(dec == oracle.is_some(), || format!("{a:?}: partition disagrees"))?;
                    part_hits += 1;
                }
                if let Some(w) = d.witness() {
                    ensure(w.is_valid_for(&a, total / 2), || format!("{a:?}: bad partition witness"))?;
                }
            }
        }
    }
    let tight = Multiset::new(vec![2, 2, 2]).map_err(|e| e.to_string())?;
    ensure(subset_sum_dense(&tight, 3) == Dense::NotApplicable, || "{2,2,2}: dense applied".into())?;
    ensure(oracle_subset_sum(&tight, 3).map_err(|e| e.to_string())?.is_none(), || "{2,2,2}: oracle true".into())?;
    let elapsed = t0.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{sets} ordered multisets; decided: dense {dense_hits}, partition {part_hits}, via-partition {via_hits}; {{2,2,2}} not applicable / false; {elapsed:.2?}"
    ))
}

fn criterion_8() -> Outcome {
    let mut trees = 0;
    let mut tree_list: Vec<WeightedTree> = (0..300).map(|s| random_tree(2 + (s % 30) as usize, 6, s).unwrap()).collect();
    for family in TightFamily::ALL {
        for p in 2..=6 {
            let q = if family.uses_q() { Some(3.min(p + 1)) } else { None };
            tree_list.push(family.generate(p, q).map_err(|e| e.to_string())?.tree);
        }
    }
    for t in &tree_list {
        let c = build_euler_cycle(t).map_err(|e| e.to_string())?;
        ensure(c.len() == 2 * (t.len() - 1), || "cycle length".into())?;
        let mut mult = vec![0; t.len()];
        for s in c.stops() {
            mult[s.vertex] += 1;
        }
        ensure((0..t.len()).all(|v| mult[v] == t.degree(v)), || "multiplicity".into())?;
        for k in [t.max_weight(), (t.max_weight() + t.total_weight()) / 2, t.total_weight()] {
            let mut ok = true;
            let mut last_weight: Option<(usize, usize, u64)> = None;
            find_subtree_traced(t, k, 2, None, |w| {
                let verts = c.window_vertices(w.s, w.window_len(), t.len());
                ok &= t.is_connected_subset(&verts) && t.subset_weight(&verts) == w.weight;
                if let Some((s, tt, wt)) = last_weight {
                    // Incremental: the change is the weight of the single stop's vertex or zero.
                    let moved = if w.t == tt + 1 { c.vertex_at(w.t) } else { c.vertex_at(s) };
                    let diff = w.weight.abs_diff(wt);
                    ok &= (w.s == s + 1) != (w.t == tt + 1);
                    ok &= diff == 0 || diff == t.weight(moved);
                }
                last_weight = Some((w.s, w.t, w.weight));
            })
            .map_err(|e| e.to_string())?;
            ensure(ok, || format!("trace replay failed on {t:?}"))?;
        }
        trees += 1;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut fixtures = 0;
    let mut subsets = 0;
    for f in all_fixtures() {
        let split = split_by_hamilton(&f.graph, &f.ham).map_err(|e| format!("{}: {e}", f.name))?;
        for side in [Side::Left, Side::Right] {
            let d = build_dual_tree(&f.graph, &f.ham, &split, side);
            ensure(d.tree.total_weight() as usize == f.graph.len() - 2, || format!("{}: dual weight", f.name))?;
            ensure(d.tree.len() == split.chords(side).len() + 1, || format!("{}: dual size", f.name))?;
            for _ in 0..5 {
                let root = rng.gen_range(0..d.len());
                let size = rng.gen_range(1..=d.len());
                let mut member = vec![false; d.len()];
                member[root] = true;
                let mut s = vec![root];
                while s.len() < size {
                    let frontier: Vec<usize> =
                        s.iter().flat_map(|&v| d.tree.neighbors(v).iter().copied()).filter(|&u| !member[u]).collect();
                    let u = frontier[rng.gen_range(0..frontier.len())];
                    member[u] = true;
                    s.push(u);
                }
                let cyc = subtree_to_cycle(&d, &s);
                ensure(
                    cyc.len() as u64 == d.tree.subset_weight(&s) + 2 && validate_cycle(&f.graph, &cyc),
                    || format!("{}: length law", f.name),
                )?;
                subsets += 1;
            }
        }
        fixtures += 1;
    }
    Ok(format!("{trees} trees replayed; {fixtures} plane fixtures, {subsets} dual subsets obey |K| = c(S) + 2"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 subtree search matches the guarantee on random trees", criterion_1),
        ("2 tightness families", criterion_2),
        ("3 linear step count", criterion_3),
        ("4 degree-4 cycle window", criterion_4),
        ("5 half-length cycles", criterion_5),
        ("6 cycle between n/3 and 2n/3", criterion_6),
        ("7 dense subset-sum agreement", criterion_7),
        ("8 structural invariants", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS criterion {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL criterion {name}: panicked");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
