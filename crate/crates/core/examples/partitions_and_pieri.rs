//! Enumerating partitions and multiplying monomial symmetric functions by
//! power sums with the Pieri rule.

use nakajima_fock::partition::{enumerate_compositions, enumerate_partitions, Partition};
use nakajima_fock::symfunc::{multiply_p, pieri_targets, Basis, SymFunc};

fn main() {
    for n in 0..=5 {
        let parts: Vec<String> = enumerate_partitions(n).iter().map(|p| p.to_string()).collect();
        println!("partitions of {n}: {}", parts.join(" "));
    }
    println!("partitions of 10: {}", enumerate_partitions(10).len());
    println!("compositions of 3 into 2 parts: {:?}", enumerate_compositions(3, 2).iter().map(|c| c.entries().to_vec()).collect::<Vec<_>>());

    let mu: Partition = "[2,1]".parse().unwrap();
    println!("\nconjugate of {mu} is {}", mu.conjugate());
    for (nu, a) in pieri_targets(&mu, 1) {
        println!("p_1 m{mu}: {a} m{nu}");
    }

    // p_1^3 in the monomial basis, one Pieri step at a time
    let mut f = SymFunc::one(Basis::Monomial);
    for _ in 0..3 {
        f = multiply_p(&f, 1);
    }
    println!("\np_1^3 = {f}");
}
