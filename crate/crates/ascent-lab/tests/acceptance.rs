//! Acceptance suite: one test per release criterion, each printing a
//! single pass/fail line. Run with `cargo test --test acceptance`.

use ascent_core::cyclic_module::{
    self, CyclicModulePresentation,
};
use ascent_core::group::{Group, GroupSpec, Word};
use ascent_core::growth;
use ascent_core::quotients;
use ascent_core::witness::{verify_free_semigroup, AscentData, WitnessError};
use ascent_core::{IntegerMatrix, LaurentPolynomial};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

fn report(criterion: u32, label: &str, pass: bool) {
    println!(
        "criterion {criterion} ({label}): {}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} ({label}) failed");
}

fn poly(low: i64, coeffs: &[i64]) -> LaurentPolynomial {
    LaurentPolynomial::from_coeff_window(
        low,
        &coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(),
    )
}

/// Run the full witness pipeline and return the freeness verdict.
fn witness_verdict(
    group: &Group,
    budget: u32,
) -> Result<ascent_core::witness::FreenessVerdict, WitnessError> {
    let data = AscentData::new(group)?;
    data.find_coset_representative()?;
    let (s1, s2) = data.witness_pair()?;
    verify_free_semigroup(group, &s1, &s2, budget, 10_000_000)
}

#[test]
fn criterion_1_free_semigroup_certification() {
    let specs = vec![
        GroupSpec::BaumslagSolitar { n: 2 },
        GroupSpec::BaumslagSolitar { n: 3 },
        GroupSpec::WreathZZ,
        GroupSpec::HnnAbelian {
            phi: IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]),
        },
        gamma2_spec(),
    ];
    let mut pass = true;
    for spec in specs {
        let g = Group::build(spec).unwrap();
        let verdict = witness_verdict(&g, 12).unwrap();
        pass &= verdict.is_free() && verdict.distinct == 8190;
    }
    report(1, "free-up-to-12 across five families", pass);
}

/// The free-base example with psi(a1) = [a1, a2], psi(a2) = a1; the
/// CLI spells it `hnn-free:a1 a2 A1 A2;a1`.
fn gamma2_spec() -> GroupSpec {
    use ascent_core::freewords::FreeWord;
    GroupSpec::HnnFree {
        images: [
            FreeWord::from_letters([1, 2, -1, -2]),
            FreeWord::from_letters([1]),
        ],
    }
}

#[test]
fn criterion_2_proper_ascent_dichotomy() {
    let ascending: [&[&[i64]]; 5] = [
        &[&[2]],
        &[&[3]],
        &[&[2, 0], &[0, 3]],
        &[&[1, 1], &[0, 2]],
        &[&[0, 2], &[1, 0]],
    ];
    let unimodular: [&[&[i64]]; 5] = [
        &[&[1]],
        &[&[-1]],
        &[&[1, 1], &[0, 1]],
        &[&[2, 1], &[1, 1]],
        &[&[0, 1], &[1, 0]],
    ];
    let mut pass = true;
    for rows in ascending {
        let g = Group::build(GroupSpec::HnnAbelian {
            phi: IntegerMatrix::from_i64(rows),
        })
        .unwrap();
        pass &= witness_verdict(&g, 6).is_ok_and(|v| v.is_free());
    }
    for rows in unimodular {
        let g = Group::build(GroupSpec::HnnAbelian {
            phi: IntegerMatrix::from_i64(rows),
        })
        .unwrap();
        pass &= matches!(
            witness_verdict(&g, 6),
            Err(WitnessError::NotProperlyAscending)
        );
    }
    report(2, "witness iff |det| >= 2, 10-matrix fixture", pass);
}

#[test]
fn criterion_3_growth_oracle_equivalence() {
    let specs = vec![
        GroupSpec::BaumslagSolitar { n: 2 },
        GroupSpec::BaumslagSolitar { n: 3 },
        GroupSpec::WreathZZ,
        GroupSpec::Heisenberg,
        GroupSpec::FreeAbelian { dim: 1 },
        GroupSpec::FreeAbelian { dim: 2 },
        GroupSpec::HnnAbelian {
            phi: IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]),
        },
        gamma2_spec(),
    ];
    let mut pass = true;
    for spec in specs {
        let g = Group::build(spec).unwrap();
        let bfs = growth::growth_series(&g, 6, 10_000_000);
        let naive = growth::growth_series_by_word_enumeration(&g, 6);
        pass &= !bfs.truncated && bfs.spheres == naive.spheres && bfs.balls == naive.balls;
    }
    report(3, "BFS equals word-enumeration oracle, radius 6", pass);
}

#[test]
fn criterion_4_exponential_lower_bound() {
    let g = Group::build(GroupSpec::BaumslagSolitar { n: 2 }).unwrap();
    let series = growth::growth_series(&g, 12, 10_000_000);
    let verdict = witness_verdict(&g, 12).unwrap();
    let cert = growth::semigroup_lower_bound(&series, &verdict, 2);
    let pass = cert.as_ref().is_ok_and(|c| c.max_m == 6);
    report(4, "BS(2) ball(2m) >= 2^(m+1) - 2 for m <= 6", pass);
}

#[test]
fn criterion_5_polynomial_exponential_separation() {
    let heis = Group::build(GroupSpec::Heisenberg).unwrap();
    let hs = growth::growth_series(&heis, 16, 10_000_000);
    let hr = growth::rate_diagnostics(&hs).unwrap();
    let heis_d8 = hr.doubling.iter().find(|(n, _)| *n == 8).unwrap().1;

    let bs = Group::build(GroupSpec::BaumslagSolitar { n: 2 }).unwrap();
    let bss = growth::growth_series(&bs, 16, 10_000_000);
    let br = growth::rate_diagnostics(&bss).unwrap();
    let bs_d8 = br.doubling.iter().find(|(n, _)| *n == 8).unwrap().1;

    let pass = (3.0..=5.0).contains(&heis_d8)
        && bs_d8 > 5.0
        && growth::bass_guivarch_degree(&[2, 1]) == 4;
    report(5, "doubling ratios and Bass-Guivarc'h degree", pass);
}

#[test]
fn criterion_6_module_engine_agreement() {
    let mut rng = StdRng::seed_from_u64(0xACCE_0006);
    let mut pass = true;
    let mut checked = 0;
    while checked < 50 {
        let deg = rng.gen_range(0..=4usize);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-5..=5)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let p = match CyclicModulePresentation::new(poly(0, &coeffs)) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let stable = cyclic_module::t_stability(&p).t_stable;
        let oracle = cyclic_module::unit_constant_oracle(&p, 8, 40).is_some();
        pass &= stable == oracle;
        checked += 1;
    }

    // f = t - 2 induces hnn-abelian:[[2]]; its equality relation must
    // match BS(2) on all words up to length 8 over (a, t) <-> (e1, t)
    let p = CyclicModulePresentation::new(poly(0, &[-2, 1])).unwrap();
    let spec = cyclic_module::build_metabelian_group(&p).unwrap();
    let hnn = Group::build(spec).unwrap();
    let bs = Group::build(GroupSpec::BaumslagSolitar { n: 2 }).unwrap();
    pass &= equality_relations_match(&bs, &hnn, 8);

    report(6, "t-stability oracle and t - 2 vs BS(2)", pass);
}

/// Both groups have two named generators in matching order; check that
/// two words evaluate equal in one group iff they do in the other, for
/// all words of length <= max_len over the symmetric generators.
fn equality_relations_match(g1: &Group, g2: &Group, max_len: usize) -> bool {
    // letters: (generator index, sign)
    let letters = [(0usize, 1i8), (0, -1), (1, 1), (1, -1)];
    let mut frontier = vec![Word(vec![])];
    let mut fwd: BTreeMap<Vec<u8>, Vec<u8>> = BTreeMap::new();
    let mut bwd: BTreeMap<Vec<u8>, Vec<u8>> = BTreeMap::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                let mut v = w.0.clone();
                v.push(l);
                next.push(Word(v));
            }
        }
        for w in &next {
            let k1 = g1.evaluate_word(w).unwrap().canonical_key();
            let k2 = g2.evaluate_word(w).unwrap().canonical_key();
            // the pairing must be a bijection between value sets
            if fwd.entry(k1.clone()).or_insert_with(|| k2.clone()) != &k2 {
                return false;
            }
            if bwd.entry(k2).or_insert_with(|| k1.clone()) != &k1 {
                return false;
            }
        }
        frontier = next;
    }
    true
}

#[test]
fn criterion_7_separation_failure_evidence() {
    let mut pass = true;

    // enumerate_homs_bs against brute force for small degree
    for m in 1..=4 {
        let fast = quotients::enumerate_homs_bs(2, m).unwrap();
        let all = symmetric_group(m);
        let mut brute = Vec::new();
        for a in &all {
            for t in &all {
                let hom = quotients::FiniteHom {
                    degree: m,
                    a: a.clone(),
                    t: t.clone(),
                };
                if hom.relation_holds(2) {
                    brute.push(hom);
                }
            }
        }
        brute.sort_by_key(|h| (h.a.clone(), h.t.clone()));
        pass &= fast == brute;
        if m == 3 {
            pass &= fast.len() == 12;
        }
    }

    // structural facts for every hom with m <= 6, and the verdict
    let rep = quotients::separation_report(2, 6).unwrap();
    for r in &rep.records {
        pass &= r.order_a % 2 == 1 && r.in_subgroup;
    }
    pass &= !rep.separated;

    let rep3 = quotients::separation_report(3, 6).unwrap();
    for r in &rep3.records {
        pass &= num_integer_gcd(r.order_a, 3) == 1 && r.in_subgroup;
    }
    pass &= !rep3.separated;

    report(7, "finite quotients never separate a from <a^n>", pass);
}

fn num_integer_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All of S_m in lexicographic order of image arrays.
fn symmetric_group(m: usize) -> Vec<quotients::Permutation> {
    let mut out = Vec::new();
    let mut images = vec![0usize; m];
    let mut used = vec![false; m];
    fn rec(
        pos: usize,
        m: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<quotients::Permutation>,
    ) {
        if pos == m {
            out.push(quotients::Permutation::from_images(images.clone()).unwrap());
            return;
        }
        for x in 0..m {
            if !used[x] {
                used[x] = true;
                images[pos] = x;
                rec(pos + 1, m, images, used, out);
                used[x] = false;
            }
        }
    }
    rec(0, m, &mut images, &mut used, &mut out);
    out
}

#[test]
fn criterion_8_determinism_and_golden_files() {
    let bin = env!("CARGO_BIN_EXE_ascent-lab");
    let cases: [(&[&str], &str); 3] = [
        (
            &["growth", "--group", "bs:2", "--radius", "6", "--format", "csv"],
            "growth_bs2_n6.csv",
        ),
        (&["module", "--poly", "t - 2", "--format", "json"], "module_t_minus_2.json"),
        (
            &["separate", "--group", "bs:2", "--max-degree", "4", "--format", "json"],
            "separate_n2_m4.json",
        ),
    ];
    let mut pass = true;
    for (args, golden) in cases {
        let path = format!("{}/tests/golden/{golden}", env!("CARGO_MANIFEST_DIR"));
        let expected = std::fs::read(&path).unwrap();
        // repeated runs
        for _ in 0..2 {
            let out = std::process::Command::new(bin).args(args).output().unwrap();
            pass &= out.status.success() && out.stdout == expected;
        }
        // parallel runs
        let handles: Vec<_> = (0..3)
            .map(|_| {
                let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
                std::thread::spawn(move || {
                    std::process::Command::new(env!("CARGO_BIN_EXE_ascent-lab"))
                        .args(&args)
                        .output()
                        .unwrap()
                        .stdout
                })
            })
            .collect();
        for h in handles {
            pass &= h.join().unwrap() == expected;
        }
    }
    report(8, "golden files byte-identical across runs", pass);
}
