//! Exact changes of basis between the five classical bases, and products
//! of Schur functions by the Littlewood–Richardson rule.

use nakajima_fock::partition::Partition;
use nakajima_fock::symfunc::{lr_product, Basis, SymContext, SymFunc};

fn main() -> nakajima_fock::Result<()> {
    let ctx = SymContext::default();
    let s21 = SymFunc::basis_element(Basis::Schur, "[2,1]".parse().unwrap());
    for target in Basis::ALL {
        println!("s[2,1] = {}", ctx.convert(&s21, target)?);
    }

    let p2 = SymFunc::single(Basis::Power, 2);
    println!("\np_2 = {}", ctx.convert(&p2, Basis::Elementary)?);

    let prod = ctx.multiply(&s21, &s21)?;
    println!("\ns[2,1]^2 = {prod}");
    let lambda: Partition = "[2,1]".parse().unwrap();
    for (nu, c) in lr_product(&lambda, &lambda, None) {
        println!("  c^{nu}_(21,21) = {c}");
    }

    println!("\nas JSON: {}", ctx.convert(&s21, Basis::Monomial)?.to_json());
    Ok(())
}
