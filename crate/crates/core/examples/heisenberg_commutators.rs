//! Creation and annihilation operators on the Fock space and their
//! commutators.

use nakajima_fock::fock::{annihilate, commutator_check, create, vacuum, HeisenbergModel};
use nakajima_fock::rational::render;

fn main() -> nakajima_fock::Result<()> {
    let model = HeisenbergModel::new(2, 3);
    let v = create(&create(&vacuum(), 2), 1);
    println!("B_-2 B_-1 |0> = {v:?}");
    println!("B_1 of that   = {:?}", annihilate(&v, 1, &model)?);

    for (i, j) in [(1, -1), (2, -2), (3, -3), (2, -3), (-1, -2)] {
        let rep = commutator_check(i, j, &model, 6)?;
        let scalars: Vec<String> = rep
            .scalars
            .iter()
            .map(|(d, s)| s.as_ref().map_or("?".into(), render) + &format!("@{d}"))
            .collect();
        println!("[B_{i}, B_{j}] = {} ({})  {}", render(&rep.expected), if rep.pass { "ok" } else { "FAIL" }, scalars.join(" "));
    }
    Ok(())
}
