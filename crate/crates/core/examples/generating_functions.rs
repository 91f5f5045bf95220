//! E(z), H(z) and P(z) as truncated series with coefficients in the ring of
//! symmetric functions.

use nakajima_fock::rational::int;
use nakajima_fock::series::{newton_exponent, TruncatedSeries};
use nakajima_fock::symfunc::{Basis, PowerPoly, SymContext};

fn main() -> nakajima_fock::Result<()> {
    let order = 6;
    let h = newton_exponent(order, false).exp()?;
    let e = newton_exponent(order, true).exp()?;
    let ctx = SymContext::default();
    for n in 1..=4 {
        let hn = ctx.from_power(h.coeff(n), Basis::Monomial)?;
        println!("[z^{n}] H(z) = {hn}");
    }

    let product = e.mul(&h.rescale_variable(&int(-1)))?;
    println!("\nE(z) H(-z) = 1: {}", product == TruncatedSeries::one(order));

    let p = h.log()?.derivative();
    let want = TruncatedSeries::from_fn(order - 1, |k| PowerPoly::generator(k as u32 + 1));
    println!("d/dz log H(z) = P(z): {}", p == want);

    // rational series work the same way
    let one_minus = TruncatedSeries::from_coeffs(vec![int(1), int(0), int(-1)], 8);
    println!("\n(1 - z^2)^(-2) = {:?}", one_minus.int_pow(-2)?);
    Ok(())
}
