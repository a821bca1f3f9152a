//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqpbraid::annulus::{
    cut_annulus, markov_reduce, random_stabilization, Catalog, BUILTIN_TREFOIL,
};
use sqpbraid::band_words::{parse_band_word, BandWord};
use sqpbraid::corpus::{generate, CorpusSpec};
use sqpbraid::fence::{cycle_basis, framing, seifert_matrix};
use sqpbraid::invariants::{
    alexander_from_burau, alexander_from_seifert, component_alexander, signature,
};
use sqpbraid::laurent::LaurentPoly;
use sqpbraid::transform::{preservation_checks, replace_one, rudolph_transform, TransformRun};

const CORPUS_SEED: u64 = 0x5eed;
const CORPUS_SIZE: usize = 200;
const MARKOV_COPIES: usize = 100;

const LIMIT_GOLDEN: Duration = Duration::from_millis(1);
const LIMIT_SUITE: Duration = Duration::from_secs(60);
const LIMIT_CALIBRATION: Duration = Duration::from_secs(1);
const LIMIT_MARKOV: Duration = Duration::from_secs(30);

fn word(text: &str) -> BandWord {
    parse_band_word(text).unwrap()
}

fn corpus() -> Vec<BandWord> {
    generate(&CorpusSpec {
        seed: CORPUS_SEED,
        count: CORPUS_SIZE,
        max_strands: 6,
        max_letters: 10,
        negative_rate: 0.5,
    })
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            out.passed = false;
            out.detail = format!("{}; over the {limit:?} limit", out.detail);
        }
    }
    (out, elapsed)
}

fn annulus_cut() -> Outcome {
    let w_a = word("strands: 6\na(1,4) a(2,5) a(4,6) a(3,5) a(1,3) a(2,6)");
    let caption = word("strands: 7\na(3,7) a(2,5) a(3,6) a(5,7) a(4,6) a(1,4)");
    let cut = cut_annulus(&markov_reduce(&w_a).unwrap()).unwrap();
    let n = cut.len();
    let rotation = (cut.strands() == caption.strands() && n == caption.len())
        .then(|| {
            (0..n).find(|&k| (0..n).all(|i| cut.letters()[(i + k) % n] == caption.letters()[i]))
        })
        .flatten();
    Outcome {
        passed: rotation.is_some(),
        detail: format!("v_A = {} (rotation {rotation:?})", cut.letters_text()),
    }
}

fn single_replacement(annulus: &sqpbraid::annulus::AnnulusEntry) -> Outcome {
    let w = word("strands: 3\na(1,2)^-1 a(1,3)^-1 a(1,2) a(1,3)");
    let expected = word(
        "strands: 9\na(1,8)^-1 a(3,7) a(2,5) a(3,6) a(5,7) a(4,6) a(1,4) a(2,9) a(1,8) a(1,9)",
    );
    let (out, _) = replace_one(&w, 2, annulus).unwrap();
    Outcome {
        passed: out == expected,
        detail: format!("{} strands: {}", out.strands(), out.letters_text()),
    }
}

fn seifert_form_suite(words: &[BandWord], annulus: &sqpbraid::annulus::AnnulusEntry) -> Outcome {
    let checks = preservation_checks();
    let mut failures = Vec::new();
    for w in words {
        let (_, cert) = match rudolph_transform(w, std::slice::from_ref(annulus)) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: {e}", w.letters_text()));
                continue;
            }
        };
        let run = TransformRun::new(&cert);
        for c in checks.iter() {
            let o = c.run(&run);
            if !o.passed {
                failures.push(format!("{} [{}] {}", w.letters_text(), o.check, o.detail));
            }
        }
    }
    Outcome {
        passed: failures.is_empty() && words.len() >= CORPUS_SIZE,
        detail: format!(
            "{} words x {} checks, {} failure(s){}",
            words.len(),
            checks.names().len(),
            failures.len(),
            failures
                .first()
                .map(|f| format!("; first: {f}"))
                .unwrap_or_default()
        ),
    }
}

fn calibration() -> Outcome {
    let knot = |text: &str| {
        let w = word(text);
        let v = seifert_matrix(&w, &cycle_basis(&w).unwrap()).unwrap();
        (alexander_from_seifert(&v), signature(&v.entries))
    };
    let trefoil_poly = LaurentPoly::from_coeffs(0, &[1, -1, 1]);
    let trefoil = knot("strands: 2\na(1,2) a(1,2) a(1,2)");
    let fig8 = knot("strands: 3\na(1,2) a(2,3)^-1 a(1,2) a(2,3)^-1");
    let annulus = word("strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)");
    let components = annulus.closure_summary().components;
    let cores: Vec<LaurentPoly> = (1..=components)
        .map(|c| component_alexander(&annulus, c).unwrap())
        .collect();
    let f = framing(&annulus).unwrap();
    let passed = trefoil == (trefoil_poly.clone(), -2)
        && fig8 == (LaurentPoly::from_coeffs(0, &[1, -3, 1]), 0)
        && f == 0
        && components == 2
        && cores.iter().all(|p| *p == trefoil_poly);
    Outcome {
        passed,
        detail: format!(
            "trefoil ({}, {}), figure-eight ({}, {}), annulus framing {f}, cores [{}]",
            trefoil.0,
            trefoil.1,
            fig8.0,
            fig8.1,
            cores
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

/// Literal statement: normalize(Δ_seifert) = normalize(Δ_burau · (1−t)^(m−1)).
/// The factor-free comparison is reported alongside.
fn cross_oracle(words: &[BandWord]) -> Outcome {
    let one_minus_t = LaurentPoly::from_coeffs(0, &[1, -1]);
    let mut literal_mismatch = 0;
    let mut plain_mismatch = 0;
    let mut first = None;
    for w in words {
        let m = w.closure_summary().components;
        let seifert = alexander_from_seifert(&seifert_matrix(w, &cycle_basis(w).unwrap()).unwrap());
        let burau = alexander_from_burau(&w.artin_expand()).unwrap();
        let bridged = (&burau * &one_minus_t.pow(m as u32 - 1)).normalized_or_zero();
        if seifert != bridged {
            literal_mismatch += 1;
            first.get_or_insert_with(|| {
                format!(
                    "{} (m = {m}): seifert {seifert}, burau·(1-t)^{} = {bridged}",
                    w.letters_text(),
                    m - 1
                )
            });
        }
        if seifert != burau {
            plain_mismatch += 1;
        }
    }
    Outcome {
        passed: literal_mismatch == 0,
        detail: format!(
            "{literal_mismatch}/{} words differ with the (1-t)^(m-1) factor, {plain_mismatch} without it{}",
            words.len(),
            first.map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    }
}

fn markov_soundness(catalog: &Catalog) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let names = catalog.list().unwrap();
    let mut failures = 0;
    for k in 0..MARKOV_COPIES {
        let entry = catalog.get(&names[k % names.len()]).unwrap();
        let reference = markov_reduce(entry.word()).unwrap();
        let mut w = entry.word().clone();
        for _ in 0..rng.gen_range(1..=6) {
            w = random_stabilization(&mut rng, &w);
        }
        let r = markov_reduce(&w).unwrap();
        let ok = r.word().valences()[1..].iter().all(|&v| v == 2)
            && framing(r.word()).unwrap() == framing(&w).unwrap()
            && r.word().closure_summary().components == w.closure_summary().components
            && component_alexander(r.word(), 1).unwrap() == component_alexander(&w, 1).unwrap()
            && r == reference;
        if !ok {
            failures += 1;
        }
    }
    Outcome {
        passed: failures == 0,
        detail: format!("{MARKOV_COPIES} stabilized copies, {failures} failure(s)"),
    }
}

fn positive_identity(annulus: &sqpbraid::annulus::AnnulusEntry) -> Outcome {
    let mut words = generate(&CorpusSpec {
        seed: CORPUS_SEED,
        count: CORPUS_SIZE,
        max_strands: 6,
        max_letters: 10,
        negative_rate: 0.0,
    });
    words.push(word(
        "strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)",
    ));
    words.push(word("strands: 1\n"));
    let bad = words
        .iter()
        .filter(
            |w| match rudolph_transform(w, std::slice::from_ref(annulus)) {
                Ok((out, cert)) => {
                    out != **w || !cert.steps.is_empty() || !cert.companions.is_empty()
                }
                Err(_) => true,
            },
        )
        .count();
    Outcome {
        passed: bad == 0,
        detail: format!("{} all-positive words, {bad} changed", words.len()),
    }
}

fn main() -> ExitCode {
    let catalog = Catalog::builtin();
    let trefoil = catalog.get(BUILTIN_TREFOIL).unwrap();
    let words = corpus();

    let results = [
        ("1 annulus cut", timed(Some(LIMIT_GOLDEN), annulus_cut)),
        (
            "2 single replacement",
            timed(Some(LIMIT_GOLDEN), || single_replacement(&trefoil)),
        ),
        (
            "3 Seifert form suite",
            timed(Some(LIMIT_SUITE), || seifert_form_suite(&words, &trefoil)),
        ),
        (
            "4 calibration oracles",
            timed(Some(LIMIT_CALIBRATION), calibration),
        ),
        (
            "5 cross-oracle Alexander",
            timed(Some(LIMIT_SUITE), || cross_oracle(&words)),
        ),
        (
            "6 Markov soundness",
            timed(Some(LIMIT_MARKOV), || markov_soundness(&catalog)),
        ),
        (
            "7 positive words unchanged",
            timed(None, || positive_identity(&trefoil)),
        ),
    ];

    let mut failed = 0;
    for (name, (outcome, elapsed)) in &results {
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name} [{elapsed:.2?}]: {}", outcome.detail);
        if !outcome.passed {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
