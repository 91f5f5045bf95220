//! The vertex-operator series C_±(z) and the identity
//! [C_-(z), exp C_+(z)] = -Φ(z) exp C_+(z).

use nakajima_fock::fock::{phi_identity_check, vacuum, HeisenbergModel, Side, VertexSeries};
use nakajima_fock::rational::render;
use nakajima_fock::symfunc::{Basis, SymContext};

fn main() -> nakajima_fock::Result<()> {
    let model = HeisenbergModel::new(1, 1);
    let ctx = SymContext::default();
    let e = VertexSeries::new(Side::Minus, &model, 4)?.exp_apply(&vacuum())?;
    for n in 0..=4 {
        println!("[z^{n}] exp(C_-(z))|0> = {}", ctx.from_power(e.coeff(n), Basis::Elementary)?);
    }

    for r in 1..=3 {
        let rep = phi_identity_check(&HeisenbergModel::new(r, 1), 8)?;
        let phi: Vec<String> = rep.phi.coeffs().iter().map(render).collect();
        println!("r={r}: Φ = [{}], identity holds on {} vectors: {}", phi.join(", "), rep.vectors_checked, rep.pass);
    }
    Ok(())
}
