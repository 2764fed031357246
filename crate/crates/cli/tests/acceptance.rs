//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so the
//! lines are always visible; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use serde_json::Value;
use tssforge_cli::run;
use tssforge_core::braid::{
    classify, cyclicity_criterion, enumerate_homs, BraidHom, EnumOptions, Enumeration, StrategyRegistry,
};
use tssforge_core::constructions::{builtin_catalog, make_sharp_group, parse_group_spec, BuildOptions};
use tssforge_core::group::is_perfect;
use tssforge_core::tss::{
    stabilizer_certificate, thm1_bound, thm2_bound, torsion_certificate, verify_totally_symmetric,
};
use tssforge_core::GroupHandle;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group(spec: &str) -> GroupHandle {
    parse_group_spec(spec, &BuildOptions::default()).expect("built-in spec")
}

fn all_homs<'g>(n: usize, g: &'g GroupHandle) -> Enumeration<'g> {
    enumerate_homs(n, g, &EnumOptions::default()).expect("enumeration")
}

fn cli_json(args: &[&str]) -> Result<(i32, Value), String> {
    let out = run(std::iter::once("tssforge").chain(args.iter().copied()));
    let v = serde_json::from_str(&out.stdout).map_err(|e| format!("{args:?}: {e}; stderr: {}", out.stderr))?;
    Ok((out.code, v))
}

fn criterion_1() -> Outcome {
    let thm1: Vec<u128> = (5..=12).map(|n| thm1_bound(n).unwrap()).collect();
    let thm2: Vec<u128> = (5..=12).map(|n| thm2_bound(n).unwrap()).collect();
    ensure(thm1 == [4, 24, 24, 192, 192, 1920, 1920, 23040], || {
        format!("thm1 {thm1:?}")
    })?;
    ensure(thm2 == [1, 4, 4, 24, 24, 192, 192, 1920], || format!("thm2 {thm2:?}"))?;
    let (code, v) = cli_json(&["bounds", "--n", "5", "--to", "12"])?;
    let from_cli: Vec<u128> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["bound"].to_string().parse().unwrap())
        .collect();
    let expected: Vec<u128> = thm1.iter().chain(&thm2).copied().collect();
    ensure(code == 0 && from_cli == expected, || format!("cli bounds {from_cli:?}"))?;
    Ok("thm1 and thm2 tables for n = 5..12 match".into())
}

fn criterion_2() -> Outcome {
    let mut details = Vec::new();
    for (n, order) in [(3usize, 24usize), (4, 192), (5, 1920), (6, 23040)] {
        let start = Instant::now();
        let sharp = make_sharp_group(n, &BuildOptions::default()).map_err(|e| e.to_string())?;
        let g = &sharp.handle;
        ensure(g.order() == order, || format!("Sharp{n} has order {}", g.order()))?;
        let w = verify_totally_symmetric(g, &sharp.distinguished_tss).map_err(|e| e.to_string())?;
        let t = torsion_certificate(&w).map_err(|e| e.to_string())?;
        ensure(
            t.p == 2 && t.generated_order == 1 << (n - 1) && t.bound == 1 << (n - 1),
            || format!("Sharp{n} torsion {t:?}"),
        )?;
        let ms = start.elapsed().as_millis();
        if n <= 5 {
            ensure(ms < 60_000, || format!("Sharp{n} took {ms} ms"))?;
        }
        details.push(format!("n={n}: {order}"));
    }
    Ok(format!(
        "orders {}; p = 2 and |<S>| = 2^(n-1) with equality",
        details.join(", ")
    ))
}

fn criterion_3() -> Outcome {
    let g = group("S4");
    let set = g.parse_elements("(1 2)(3 4);(1 3)(2 4);(1 4)(2 3)").unwrap();
    let w = verify_totally_symmetric(&g, &set).map_err(|e| e.to_string())?;
    let c = stabilizer_certificate(&w).map_err(|e| e.to_string())?;
    ensure(
        (c.stabilizer_order, c.image_order, c.kernel_order, c.bound) == (24, 6, 4, 24),
        || format!("{c:?}"),
    )?;
    Ok("|Γ| = 24 = 2^2 * 3!, |im φ| = 6, |ker φ| = 4".into())
}

fn image_lemma_exceptions(h: &BraidHom<'_>) -> bool {
    let c = classify(h);
    let k = h.n / 2;
    !([1, k].contains(&c.fx.len()) && [1, k - 1].contains(&c.fx_prime.len()))
}

fn criterion_4() -> Outcome {
    let s5 = group("S5");
    let mut summary = Vec::new();
    for n in [5, 6] {
        let start = Instant::now();
        let e = all_homs(n, &s5);
        let ms = start.elapsed().as_millis();
        ensure(e.complete && e.homs.len() as u64 == e.counts.total, || {
            format!("B{n} incomplete")
        })?;
        let bad = e.homs.iter().filter(|h| image_lemma_exceptions(h)).count();
        ensure(bad == 0, || format!("B{n} -> S5: {bad} exceptions"))?;
        let limit = if n == 5 { 60_000 } else { 600_000 };
        ensure(ms < limit, || format!("B{n} -> S5 took {ms} ms"))?;
        summary.push(format!("B{n} -> S5: {} homs, 0 exceptions", e.homs.len()));
    }
    Ok(summary.join("; "))
}

fn is_conjugate_to(g: &GroupHandle, a: &[tssforge_core::Elem], b: &[tssforge_core::Elem]) -> bool {
    g.elements().any(|h| a.iter().zip(b).all(|(&x, &y)| g.conj(h, x) == y))
}

fn criterion_5() -> Outcome {
    for (k, count) in [(2usize, 2u64), (3, 6), (4, 24)] {
        let g = group(&format!("S{k}"));
        let e = all_homs(5, &g);
        ensure(
            e.counts.total == count && e.counts.non_cyclic == 0 && e.complete,
            || format!("B5 -> S{k}: {:?}", e.counts),
        )?;
    }
    let s5 = group("S5");
    let standard = BraidHom::standard_projection(5, &s5).map_err(|e| e.to_string())?;
    let e = enumerate_homs(
        5,
        &s5,
        &EnumOptions {
            non_cyclic_only: true,
            ..EnumOptions::default()
        },
    )
    .map_err(|e| e.to_string())?;
    for h in &e.homs {
        ensure(is_conjugate_to(&s5, &standard.images, &h.images), || {
            format!("{:?} is not conjugate to the standard projection", h.format_images())
        })?;
        ensure(h.image_order == 120 && classify(h).fx.len() == 2, || {
            format!("{:?}", h.format_images())
        })?;
    }

    // brute force: every pair in S3, checking aba = bab
    let s3 = group("S3");
    let pairs: Vec<_> = s3
        .elements()
        .flat_map(|a| s3.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| s3.mul(s3.mul(a, b), a) == s3.mul(s3.mul(b, a), b))
        .collect();
    let brute_non_cyclic = pairs.iter().filter(|(a, b)| a != b).count();
    let registry = StrategyRegistry::builtin();
    for name in registry.names() {
        let en = registry
            .get(name)
            .unwrap()
            .enumerate(3, &s3, &EnumOptions::default())
            .map_err(|e| e.to_string())?;
        let found: BTreeSet<_> = en.homs.iter().map(|h| (h.images[0], h.images[1])).collect();
        ensure(
            pairs.len() == 12
                && brute_non_cyclic == 6
                && en.counts.total == 12
                && en.counts.non_cyclic == 6
                && found == pairs.iter().copied().collect(),
            || format!("B3 -> S3 ({name}): {:?}, brute force {}", en.counts, pairs.len()),
        )?;
    }
    Ok(format!(
        "B5 -> S2, S3, S4 counts 2, 6, 24, all cyclic; {} non-cyclic B5 -> S5 all conjugate to the standard projection; B3 -> S3 12/6 matches brute force",
        e.homs.len()
    ))
}

fn criterion_6() -> Outcome {
    let mut summary = Vec::new();
    for (n, below) in [("5", "4"), ("6", "24")] {
        let (code, v) = cli_json(&["audit", "--n", n, "--builtin-below", below])?;
        let non_cyclic: u64 = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["counts"]["non_cyclic"].as_u64().unwrap())
            .sum();
        let names: Vec<&str> = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["group"].as_str().unwrap())
            .collect();
        ensure(code == 0 && v["status"] == "consistent" && non_cyclic == 0, || {
            format!("n = {n}: code {code}, status {}, non-cyclic {non_cyclic}", v["status"])
        })?;
        if n == "6" {
            for needed in ["A4", "Dih11", "C2xS3", "C2xC2xC5", "C23"] {
                ensure(names.contains(&needed), || format!("n = 6 catalog lacks {needed}"))?;
            }
        } else {
            ensure(names == ["C1", "C2", "C3"], || format!("n = 5 catalog {names:?}"))?;
        }
        summary.push(format!("n = {n}: {} groups consistent", names.len()));
    }
    Ok(summary.join("; "))
}

fn criterion_7() -> Outcome {
    ensure(is_perfect(&group("A5")), || "A5 not perfect".into())?;
    let catalog = builtin_catalog(60, &BuildOptions::default()).map_err(|e| e.to_string())?;
    let perfect: Vec<&str> = catalog
        .iter()
        .filter(|g| g.order() > 1 && is_perfect(g))
        .map(|g| g.name())
        .collect();
    ensure(perfect.is_empty(), || format!("perfect below 60: {perfect:?}"))?;

    let (_, sampled) = cli_json(&["audit", "--n", "5"])?;
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/catalog");
    let (_, exhaustive) = cli_json(&[
        "audit",
        "--n",
        "5",
        "--catalog",
        fixtures.to_str().unwrap(),
        "--complete-catalog",
    ])?;
    let t2 = &sampled["summary"]["theorem2"];
    ensure(
        t2["mode"] == "sampled" && t2["perfect_below"] == Value::Array(vec![]),
        || format!("{t2}"),
    )?;
    ensure(exhaustive["summary"]["theorem2"]["mode"] == "exhaustive", || {
        format!("{}", exhaustive["summary"]["theorem2"])
    })?;
    Ok(format!(
        "A5 perfect; none of {} built-in groups of order < 60 is nontrivially perfect; modes sampled/exhaustive labelled",
        catalog.len()
    ))
}

fn criterion_8() -> Outcome {
    let mut checked = 0usize;
    let mut targets: Vec<(usize, GroupHandle)> = vec![(5, group("S5")), (6, group("S5"))];
    for k in 2..=4 {
        targets.push((5, group(&format!("S{k}"))));
    }
    for g in builtin_catalog(4, &BuildOptions::default()).unwrap() {
        targets.push((5, g));
    }
    for g in builtin_catalog(24, &BuildOptions::default()).unwrap() {
        targets.push((6, g));
    }
    for (n, g) in &targets {
        for h in &all_homs(*n, g).homs {
            let r = cyclicity_criterion(h).map_err(|e| e.to_string())?;
            ensure(r.equivalent, || {
                format!("B{n} -> {}: {:?}", g.name(), h.format_images())
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "(t1 = t3) <=> cyclic on {checked} homomorphisms over {} targets",
        targets.len()
    ))
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_tssforge");
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/catalog");
    let catalog = fixtures.to_str().unwrap();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["bounds", "--n", "5", "--to", "12"],
        vec!["sharp", "--n", "5"],
        vec![
            "tss-verify",
            "-g",
            "S4",
            "--elements",
            "(1 2)(3 4);(1 3)(2 4);(1 4)(2 3)",
        ],
        vec!["tss-search", "-g", "S5"],
        vec!["homs", "--n", "5", "--target", "S5"],
        vec!["homs", "--n", "6", "--target", "S5", "--output", "csv"],
        vec!["homs", "--n", "6", "--target", "S6", "--budget", "2000"],
        vec!["audit", "--n", "5"],
        vec!["audit", "--n", "6"],
        vec!["audit", "--n", "5", "--catalog", catalog, "--complete-catalog"],
    ];
    for args in &invocations {
        let mut outputs = BTreeSet::new();
        for jobs in ["1", "4", "1", "4", "1"] {
            let out = Command::new(bin)
                .args(args)
                .args(["--jobs", jobs])
                .output()
                .map_err(|e| e.to_string())?;
            outputs.insert(out.stdout);
        }
        ensure(outputs.len() == 1, || {
            format!("{args:?} produced {} distinct outputs", outputs.len())
        })?;
    }
    Ok(format!(
        "{} invocations byte-identical over 5 runs with --jobs 1 and 4",
        invocations.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("bound tables", criterion_1),
        ("sharp example", criterion_2),
        ("Klein triple stabilizer equality", criterion_3),
        ("image lemma", criterion_4),
        ("small-target classification", criterion_5),
        ("theorem 1 catalog audit", criterion_6),
        ("theorem 2 perfect-group scan", criterion_7),
        ("cyclicity criterion equivalence", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why}) [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
