//! Sums over subdivisions against a binomial generating function, and the
//! same numbers from the Fock-space pairing.

use nakajima_fock::fock::{exp_vector_pairing, HeisenbergModel};
use nakajima_fock::rational::render;
use nakajima_fock::schubert::{pairing_coefficient, pairing_gf_check};

fn main() -> nakajima_fock::Result<()> {
    for (r, q) in [(1, 2), (2, 1), (3, 2)] {
        let subdiv: Vec<String> = (0..=5).map(|n| pairing_coefficient(r, q, n).to_string()).collect();
        let fock = exp_vector_pairing(&HeisenbergModel::new(r, q as i64), 10)?;
        let from_fock: Vec<String> = (0..=5).map(|n| render(fock.coeff(2 * n))).collect();
        println!("r={r} q={q}: subdivisions {}", subdiv.join(" "));
        println!("          Fock pairing {}", from_fock.join(" "));
        println!("          matches binomial target: {}", pairing_gf_check(r, q, 10)?.pass);
    }
    Ok(())
}
