//! Acceptance suite: one line per criterion.
//!
//! Runs without the libtest harness so the report is always printed. The
//! process fails if any criterion fails other than those listed in
//! `KNOWN_RED`, each of which is explained in the README.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use hyperwhitney::charflow::{
    characteristic_polynomial, flow_space, is_flow, is_nowhere_zero, proper_coloring_count, unique_nz_refinement,
    Flow, PrimeField, DEFAULT_ENUMERATION_CAP,
};
use hyperwhitney::corpus::{corpus, random_eulerian_digraph, random_planar, rng, CorpusSpec};
use hyperwhitney::format::{parse_permutation, HypermapDocument};
use hyperwhitney::medial::{circuits_of_state, medial_map, CoherentMatching, SignedPoint};
use hyperwhitney::nc::{catalan, is_refinement, mobius, refinement_count, refinements};
use hyperwhitney::verify::{
    check_char_flow_identities, check_coloring_sum, check_colorings, check_digraph_round_trip, check_flow_space,
    check_medial, check_merge, check_methods_agree, check_mobius_lattice, check_mobius_multiplicative,
    check_nowhere_zero, check_planar_dual, check_product, check_recursion_tree, check_spanning, selftest, Check,
    SelftestConfig,
};
use hyperwhitney::whitney::{dual, top_level_branches, whitney_bruteforce, whitney_phi, whitney_psi, Method};
use hyperwhitney::{Bivariate, Hypermap, Permutation};

/// Criteria expected to stay red, with the reason printed beside them.
const KNOWN_RED: &[(usize, &str)] = &[(
    2,
    "the cited constant terms 5 and 6 count the refinement equal to α itself, whose term is v, not 1",
)];

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn hm(n: usize, s: &[&[usize]], a: &[&[usize]]) -> Hypermap {
    Hypermap::from_cycles(n, s, a).unwrap()
}

fn fig1() -> Hypermap {
    hm(5, &[&[1, 4], &[2, 5], &[3]], &[&[1, 2, 3], &[4, 5]])
}

fn timed(limit: Duration, started: Instant) -> Check {
    let took = started.elapsed();
    ensure!(took <= limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

fn all<T>(items: &[T], check: impl Fn(&T) -> Check) -> Check {
    items.iter().try_for_each(check)
}

fn main_corpus() -> Vec<Hypermap> {
    corpus(2024, CorpusSpec::default())
}

fn c1_golden() -> Result<String, String> {
    let started = Instant::now();
    let h = fig1();
    let want = Bivariate::parse("u^2 + u*v + 4*u + v + 3").unwrap();
    for (name, got) in [("brute", whitney_bruteforce(&h)), ("phi", whitney_phi(&h)), ("psi", whitney_psi(&h))] {
        ensure!(got == want, "{name} gives {got}");
    }
    let u1 = Bivariate::u() + Bivariate::one();
    let v1 = Bivariate::v() + Bivariate::one();
    let expected = [&u1 * &u1, &u1 * &v1, u1.clone()];
    let branches = top_level_branches(&h, Method::PhiRecurrence);
    ensure!(branches.len() == 3, "{} branches", branches.len());
    for (b, e) in branches.iter().zip(&expected) {
        ensure!(b.polynomial == *e, "branch {} gives {}, expected {e}", b.k, b.polynomial);
    }
    let total: Bivariate = branches.iter().map(|b| &b.weight.monomial() * &b.polynomial).sum();
    ensure!(total == want, "weighted branches sum to {total}");
    timed(Duration::from_secs(1), started)?;
    Ok(format!("R = {want}; branches (u+1)^2, (u+1)(v+1), u+1"))
}

fn c2_constant_terms() -> Result<String, String> {
    let started = Instant::now();
    let sigma: &[&[usize]] = &[&[1, 5], &[2, 6]];
    let a = hm(6, sigma, &[&[1, 2, 3, 4], &[5, 6]]);
    let b = hm(6, sigma, &[&[1, 4, 2, 3], &[5, 6]]);
    ensure!(a.canonical_form() != b.canonical_form(), "the two hypermaps share a canonical key");
    let (ra, rb) = (whitney_bruteforce(&a), whitney_bruteforce(&b));
    ensure!(ra != rb, "polynomials coincide");
    // The refinements listed for each hypermap, and which of them have term 1.
    let listed_a = ["(1 2 3 4)(5)(6)", "(1 2 3 4)(5 6)", "(1 3 4)(2)(5 6)", "(1)(2 3 4)(5 6)", "(1 4)(2 3)(5 6)"];
    let listed_b = [
        "(1 4 2 3)(5)(6)",
        "(1 4 2 3)(5 6)",
        "(1 4 3)(2)(5 6)",
        "(1)(2 3 4)(5 6)",
        "(1 4)(2 3)(5 6)",
        "(1 3)(2 4)(5 6)",
    ];
    for (h, listed) in [(&a, &listed_a[..]), (&b, &listed_b[..])] {
        let constant: Vec<Permutation> = refinements(h.alpha())
            .filter(|beta| hyperwhitney::whitney::refinement_exponents(h, beta) == (0, 0))
            .collect();
        let listed: Vec<Permutation> = listed.iter().map(|t| parse_permutation(t, 6).unwrap()).collect();
        ensure!(listed.iter().all(|p| is_refinement(p, h.alpha())), "a listed permutation is not a refinement");
        let extra: Vec<&Permutation> = listed.iter().filter(|p| !constant.contains(p)).collect();
        ensure!(extra == [h.alpha()], "listed but not constant: {extra:?}");
        ensure!(
            hyperwhitney::whitney::refinement_exponents(h, h.alpha()) == (0, 1),
            "α does not contribute v"
        );
        ensure!(constant.iter().all(|p| listed.contains(p)), "a constant-term refinement is not listed");
    }
    timed(Duration::from_secs(1), started)?;
    let (ca, cb) = (ra.coefficient(0, 0), rb.coefficient(0, 0));
    ensure!(
        ca == BigInt::from(5) && cb == BigInt::from(6),
        "constant terms are {ca} and {cb}, not 5 and 6; the pair is still told apart ({ca} ≠ {cb})"
    );
    Ok(format!("constant terms {ca} and {cb}"))
}

fn narayana(n: usize, k: usize) -> BigInt {
    let binom = |a: usize, b: usize| -> BigInt {
        (0..b).fold(BigInt::from(1), |acc, i| acc * BigInt::from(a - i) / BigInt::from(i + 1))
    };
    binom(n, k) * binom(n, k - 1) / BigInt::from(n)
}

fn c3_narayana() -> Result<String, String> {
    for n in 2..=7usize {
        let h = hm(n, &[], &[&(1..=n).collect::<Vec<_>>()]);
        let r = whitney_phi(&h);
        ensure!(r.degree_v() == Some(0), "n={n}: v-degree {:?}", r.degree_v());
        for k in 0..n {
            ensure!(r.coefficient(k as i64, 0) == narayana(n, k + 1), "n={n}: u^{k} has {}", r.coefficient(k as i64, 0));
        }
        ensure!(whitney_bruteforce(&dual(&h)) == r.swap_variables(), "n={n}: dual is not R(v,u)");
    }
    let r3 = whitney_bruteforce(&hm(3, &[], &[&[1, 2, 3]])).to_string();
    ensure!(r3 == "u^2 + 3*u + 1", "n=3 gives {r3}");
    Ok("n = 2..7 match Narayana numbers".into())
}

fn c4_oracle_triangle(hs: &[Hypermap]) -> Result<String, String> {
    let started = Instant::now();
    ensure!(hs.len() >= 500, "corpus has {} members", hs.len());
    ensure!(
        hs.iter().all(|h| h.n() <= 8 && h.max_hyperedge_len() <= 5 && refinement_count(h.alpha()) <= 100_000u32.into()),
        "corpus outside bounds"
    );
    all(hs, |h| check_methods_agree(h, false))?;
    all(hs, check_recursion_tree)?;
    timed(Duration::from_secs(300), started)?;
    let connected = hs.iter().filter(|h| h.is_connected()).count();
    Ok(format!("{} collections ({connected} connected) in {:.1?}", hs.len(), started.elapsed()))
}

fn c5_structure(hs: &[Hypermap]) -> Result<String, String> {
    let pairs: Vec<(&Hypermap, &Hypermap)> = hs.iter().zip(hs.iter().skip(1)).step_by(2).collect();
    pairs.iter().try_for_each(|(a, b)| check_product(a, b))?;
    all(hs, check_merge)?;
    all(hs, check_planar_dual)?;
    all(hs, check_spanning)?;
    let planar = hs.iter().filter(|h| h.genus() == 0).count();
    let split = hs.iter().filter(|h| h.kappa() >= 2).count();
    Ok(format!("{} products, {split} merges, {planar} planar duals, {} spanning counts", pairs.len(), hs.len()))
}

fn c6_medial(hs: &[Hypermap]) -> Result<String, String> {
    let h = hm(6, &[&[1, 5], &[2, 6]], &[&[1, 2, 3, 4], &[5, 6]]);
    let (p, q) = (SignedPoint::plus, SignedPoint::minus);
    let mu = CoherentMatching::from_pairs(12, &[(p(1), q(2)), (p(2), q(3)), (p(3), q(1)), (p(4), q(4)), (p(5), q(5)), (p(6), q(6))])
        .map_err(|e| e.to_string())?;
    let circuits = circuits_of_state(&medial_map(&h), &mu).map_err(|e| e.to_string())?;
    ensure!(circuits.len() == 2, "worked matching has {} circuits", circuits.len());
    all(hs, |h| check_medial(h, 14))?;
    let mut r = rng(66);
    let larger: Vec<Hypermap> = (0..40)
        .map(|i| random_planar(&mut r, 9 + i % 6))
        .filter(|h| refinement_count(h.alpha()) <= 20_000u32.into())
        .collect();
    all(&larger, |h| check_medial(h, 14))?;
    let planar = hs.iter().chain(&larger).filter(|h| h.genus() == 0).count();
    Ok(format!("worked state has 2 circuits; j(M;x) = x^κ R(x,x) on {planar} planar instances"))
}

fn c7_colorings(hs: &[Hypermap]) -> Result<String, String> {
    let planar: Vec<&Hypermap> = hs.iter().filter(|h| h.genus() == 0 && h.n() <= 8).collect();
    for h in &planar {
        for m in 1..=3 {
            if h.n() <= 6 {
                check_coloring_sum(h, m)?;
            } else {
                let lhs = hyperwhitney::medial::eulerian_coloring_sum(h, m).map_err(|e| e.to_string())?;
                let r = whitney_bruteforce(h).evaluate_int(m as i64, m as i64).unwrap();
                let rhs = num_traits::pow(BigInt::from(m), h.kappa()) * r;
                ensure!(lhs == rhs, "{h:?} m={m}: {lhs} vs {rhs}");
                if h.max_hyperedge_len() <= 2 {
                    let map_sum = hyperwhitney::medial::map_eulerian_coloring_sum(h, m).map_err(|e| e.to_string())?;
                    ensure!(lhs == map_sum, "{h:?} m={m}: Σ 2^mono = {map_sum}");
                }
            }
        }
    }
    let maps = planar.iter().filter(|h| h.max_hyperedge_len() <= 2).count();
    Ok(format!("{} planar instances, {maps} of them maps, m = 1, 2, 3", planar.len()))
}

fn c8_char_flow(hs: &[Hypermap]) -> Result<String, String> {
    all(hs, check_char_flow_identities)?;
    let short: Vec<&Hypermap> = hs.iter().filter(|h| h.max_hyperedge_len() <= 3).collect();
    short.iter().try_for_each(|h| check_colorings(h, &[2, 3, 5], DEFAULT_ENUMERATION_CAP))?;
    short.iter().try_for_each(|h| check_nowhere_zero(h, &[2, 3, 5], 3, DEFAULT_ENUMERATION_CAP))?;

    // Four points on one hyperedge, four vertices.
    let four = hm(4, &[], &[&[1, 2, 3, 4]]);
    let proper = proper_coloring_count(&four, 2, DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?;
    let chi = characteristic_polynomial(&four);
    let value = chi.shift(four.kappa() as i64).evaluate_int(2).unwrap();
    ensure!(proper == BigInt::from(0), "four-cycle has {proper} proper 2-colorings");
    ensure!(value == BigInt::from(-2), "m^κ χ(2) = {value}");

    // The eight-point instance; f(i) = (-1)^i sums to zero on (1 5) only when 2 = 0.
    let h = hm(8, &[&[1, 5], &[2, 6], &[3, 7], &[4, 8]], &[&[1, 2, 3, 4], &[5, 6], &[7, 8]]);
    let alt: Vec<i64> = (1..=8).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let f = Flow::new(PrimeField::new(2).unwrap(), &alt);
    ensure!(is_flow(&h, &f) && is_nowhere_zero(&h, &f), "f is not a nowhere-zero flow over GF(2)");
    ensure!(!is_flow(&h, &Flow::new(PrimeField::new(3).unwrap(), &alt)), "f unexpectedly a flow over GF(3)");
    let mut witnesses = Vec::new();
    for beta in refinements(h.alpha()) {
        let sub = h.with_alpha(beta.clone()).unwrap();
        if is_flow(&sub, &f) && is_nowhere_zero(&sub, &f) {
            witnesses.push(beta.to_string());
        }
    }
    for w in ["(1 2)(3 4)(5 6)(7 8)", "(1 4)(2 3)(5 6)(7 8)", "(1 2 3 4)(5 6)(7 8)"] {
        ensure!(witnesses.iter().any(|x| x == w), "f is not nowhere zero on {w}");
    }
    ensure!(unique_nz_refinement(&h, &f).is_err(), "uniqueness accepted a four-point hyperedge");
    Ok(format!(
        "{} short instances; four-cycle: 0 proper colorings vs m^κ χ(2) = -2; (-1)^i over GF(2) nowhere zero on {} refinements",
        short.len(),
        witnesses.len()
    ))
}

fn c9_flow_space(hs: &[Hypermap]) -> Result<String, String> {
    for q in [2, 3, 5] {
        all(hs, |h| check_flow_space(h, q, 50_000))?;
    }
    let h = hm(8, &[&[1, 5], &[2, 6], &[3, 7], &[4, 8]], &[&[1, 2, 3, 4], &[5, 6], &[7, 8]]);
    let dim = flow_space(&h, 3).map_err(|e| e.to_string())?.dimension();
    ensure!(dim == 2, "eight-point example has dimension {dim}");
    Ok(format!("{} instances, q = 2, 3, 5; eight-point example has dimension 2", hs.len()))
}

fn c10_mobius(hs: &[Hypermap]) -> Result<String, String> {
    let mut tops = Vec::new();
    for m in 1..=7 {
        check_mobius_lattice(m)?;
        let gamma = Permutation::from_cycles(m, &[(1..=m).collect::<Vec<_>>()]).unwrap();
        let top = mobius(&Permutation::identity(m), &gamma).map_err(|e| e.to_string())?;
        let sign = if m % 2 == 1 { 1 } else { -1 };
        ensure!(top == BigInt::from(sign) * BigInt::from(catalan(m - 1)), "NC({m}) top is {top}");
        tops.push(top.to_string());
    }
    all(hs, |h| check_mobius_multiplicative(h.alpha(), 40))?;
    let readme = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../README.md");
    let text = std::fs::read_to_string(&readme).map_err(|e| format!("reading README: {e}"))?;
    ensure!(text.contains("Catalan(m-1)"), "README does not state the Catalan indexing");
    Ok(format!("μ(NC(m)) for m = 1..7: {}; equals (-1)^(m-1) Catalan(m-1)", tops.join(", ")))
}

fn c11_digraphs() -> Result<String, String> {
    let mut r = rng(11);
    let ds: Vec<_> = (0..100).map(|_| random_eulerian_digraph(&mut r, 6, 12)).collect();
    all(&ds, check_digraph_round_trip)?;
    Ok(format!("{} digraphs", ds.len()))
}

fn cli_binary() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let dir = exe.parent()?.parent()?;
    let bin = dir.join(format!("hyperwhitney{}", std::env::consts::EXE_SUFFIX));
    bin.exists().then_some(bin)
}

fn c12_cli() -> Result<String, String> {
    let report = selftest(SelftestConfig::default());
    ensure!(report.passed(), "library selftest failed:\n{report}");
    ensure!(report.to_string() == selftest(SelftestConfig::default()).to_string(), "selftest output varies");
    let malformed = ["sigma: (1 2\nalpha: (1)", "sigma: (1 1)\nalpha: ()", "{\"sigma\": [[1, 2]]", "", "n: 2\nsigma: (3)\nalpha: ()"];
    for text in malformed {
        ensure!(HypermapDocument::parse(text).is_err(), "accepted {text:?}");
    }
    let Some(bin) = cli_binary() else {
        return Ok("library-level checks only: CLI binary not built in this run".into());
    };
    let run = |args: &[&str]| Command::new(&bin).args(args).output().map_err(|e| e.to_string());
    let first = run(&["selftest", "--seed=0"])?;
    ensure!(first.status.success(), "selftest --seed=0 failed:\n{}", String::from_utf8_lossy(&first.stdout));
    let second = run(&["selftest", "--seed=0"])?;
    ensure!(first.stdout == second.stdout, "selftest output differs between runs");
    let dir = std::env::temp_dir().join(format!("hyperwhitney-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let good = dir.join("fig1.txt");
    std::fs::write(&good, "sigma: (1 4)(2 5)(3)\nalpha: (1 2 3)(4 5)\n").map_err(|e| e.to_string())?;
    let good = good.to_str().unwrap().to_string();
    for args in [vec!["whitney", "--method=all", &good], vec!["--json", "whitney", &good], vec!["charpoly", &good]] {
        let a = run(&args)?;
        let b = run(&args)?;
        ensure!(a.status.success() && a.stdout == b.stdout, "{args:?} not deterministic");
    }
    let all_methods = String::from_utf8_lossy(&run(&["whitney", "--method=all", &good])?.stdout).to_string();
    ensure!(all_methods == "u^2 + u*v + 4*u + v + 3\n".repeat(3), "whitney --method=all printed {all_methods:?}");
    let mut bad_cases = 0;
    for (k, text) in malformed.iter().enumerate() {
        let path = dir.join(format!("bad{k}.txt"));
        std::fs::write(&path, text).map_err(|e| e.to_string())?;
        let out = run(&["whitney", path.to_str().unwrap()])?;
        let err = String::from_utf8_lossy(&out.stderr);
        ensure!(!out.status.success() && err.contains("error") && !err.contains("panicked"), "{text:?}: {err}");
        bad_cases += 1;
    }
    for args in [
        vec!["flows", "--q=4", &good],
        vec!["genus", "/nonexistent/file"],
        vec!["whitney", "--max-refinements=1", &good],
    ] {
        let out = run(&args)?;
        let err = String::from_utf8_lossy(&out.stderr);
        ensure!(!out.status.success() && !err.contains("panicked"), "{args:?}: {err}");
        bad_cases += 1;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("selftest --seed=0 passes and repeats byte for byte; {bad_cases} malformed invocations rejected"))
}

fn main() {
    let started = Instant::now();
    let hs = main_corpus();
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Result<String, String> + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("golden value", Box::new(c1_golden)),
        ("constant-term discrimination", Box::new(c2_constant_terms)),
        ("Narayana", Box::new(c3_narayana)),
        ("oracle triangle", Box::new(|| c4_oracle_triangle(&hs))),
        ("structural identities", Box::new(|| c5_structure(&hs))),
        ("medial suite", Box::new(|| c6_medial(&hs))),
        ("Eulerian coloring identity", Box::new(|| c7_colorings(&hs))),
        ("characteristic and flow suite", Box::new(|| c8_char_flow(&hs))),
        ("flow-space dimension", Box::new(|| c9_flow_space(&hs))),
        ("Möbius resolution", Box::new(|| c10_mobius(&hs))),
        ("digraph round trip", Box::new(c11_digraphs)),
        ("CLI determinism", Box::new(c12_cli)),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id).map(|(_, why)| *why);
        match (&outcome, known) {
            (Ok(detail), None) => {
                passed += 1;
                println!("PASS {id:>2} {name}: {detail} [{:.2?}]", t.elapsed());
            }
            (Ok(detail), Some(_)) => {
                passed += 1;
                println!("PASS {id:>2} {name}: {detail} [{:.2?}] (listed as known red; update KNOWN_RED)", t.elapsed());
                unexpected.push(id);
            }
            (Err(msg), Some(why)) => {
                println!("FAIL {id:>2} {name}: {msg} [known: {why}]");
            }
            (Err(msg), None) => {
                println!("FAIL {id:>2} {name}: {msg}");
                unexpected.push(id);
            }
        }
    }
    println!("{passed}/{} criteria pass in {:.1?}", criteria.len(), started.elapsed());
    if !unexpected.is_empty() {
        println!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
