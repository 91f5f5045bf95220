//! Chern classes on Grassmannians and the excess-intersection identity.

use nakajima_fock::schubert::{
    chern, chern_tensor, excess_check, intersection_number, total_chern, Bundle, GrassRing, TensorVariant,
};

fn main() -> nakajima_fock::Result<()> {
    let g = GrassRing::new(4, 2)?;
    println!("{g}, dimension {}", g.dim());
    for (name, b) in [("Q", Bundle::Q), ("S", Bundle::S)] {
        for (k, c) in chern(b, g).iter().enumerate().skip(1).take(2) {
            println!("  c_{k}({name}) = {c:?}");
        }
    }
    let tangent = chern_tensor(g, TensorVariant::SDualTensorQ)?;
    println!("  c(T) = {tangent:?}");
    println!("  c(S)c(Q) = {:?}", total_chern(Bundle::S, g).multiply(&total_chern(Bundle::Q, g)));

    println!();
    for r in 1..=5 {
        let row: Vec<String> = (0..=r).map(|n| intersection_number(r, n).unwrap().to_string()).collect();
        println!("r={r}: intersection numbers {}", row.join(" "));
    }
    for (r, n) in [(2, 1), (4, 2), (5, 2)] {
        let rep = excess_check(GrassRing::new(r, n)?)?;
        println!("excess identity on Gr({n} of {r}): {}, ∫c_top(V) = {}", rep.pass, rep.top_integral);
    }
    Ok(())
}
