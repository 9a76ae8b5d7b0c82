use std::time::Instant;

use gwp_core::mingen::{certify, GenSearchOptions};
use gwp_core::verify::{corpus, run_all_checks, CheckBudget, CorpusScope};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
#[ignore]
fn time_full_corpus_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let budget = CheckBudget::default();
    let start = Instant::now();
    for item in corpus(CorpusScope::Full) {
        let t = Instant::now();
        let outcomes = run_all_checks(&item.group, &budget, &mut rng);
        let failed: Vec<_> = outcomes.iter().filter(|o| o.failed()).collect();
        println!(
            "{:<28} {:>8.2?}  failures: {:?}",
            item.name,
            t.elapsed(),
            failed
        );
    }
    println!("TOTAL corpus checks: {:.2?}", start.elapsed());
}

#[test]
#[ignore]
fn time_certify_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let opts = GenSearchOptions::default();
    let start = Instant::now();
    for item in corpus(CorpusScope::Full) {
        if item.group.index_count() < 2
            || !item.group.all_factors_symmetric()
            || item.group.domains().iter().any(|&d| d < 2)
        {
            continue;
        }
        let t = Instant::now();
        match certify(&item.group, &opts, &mut rng) {
            Ok(report) => println!(
                "{:<28} {:>8.2?}  verdict {:?} oracle {:?}",
                item.name,
                t.elapsed(),
                report.verdict,
                report.oracle_d
            ),
            Err(err) => println!("{:<28} {:>8.2?}  ERROR {err}", item.name, t.elapsed()),
        }
    }
    println!("TOTAL certify sweep: {:.2?}", start.elapsed());
}
