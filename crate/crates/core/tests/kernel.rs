mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn mod_n_solver_matches_enumeration() {
    for n in [4i64, 6, 8] {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..150 {
            common::check_mod_n_system(n, &mut rng).unwrap();
        }
    }
}

#[test]
fn integer_solver_matches_substitution_on_unimodular_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        common::check_unimodular_system(&mut rng).unwrap();
    }
}
