//! Dimension bookkeeping: moduli dimensions, Quot fibers and degree shifts.

use nakajima_fock::numerology::{
    compare_correspondence_dims, degree_shift_check, moduli_dim, quot_fiber_dim, ModuliParams,
};

fn main() -> nakajima_fock::Result<()> {
    let p = ModuliParams::new(2, -1, 3)?;
    println!("r=2, c^2=-1, n=3: b = {}, dim M = {}", p.b(), moduli_dim(&p));
    println!("Quot fiber over multiplicities (2,1,1), r=3: {}", quot_fiber_dim(3, &[2, 1, 1])?);

    for (i, deg) in [(1, 2), (3, 2), (-2, 2), (2, 0)] {
        let rep = degree_shift_check(2, i, deg)?;
        println!(
            "i={i:+} deg={deg}: {} -> {} (target {}), preserved: {}",
            rep.source_middle, rep.image, rep.target_middle, rep.preserved
        );
    }
    for i in [1, 2, 3, -2] {
        let c = compare_correspondence_dims(&p, i);
        println!("i={i:+}: dimension from shift {}, quoted {}, agree {}", c.from_shift, c.quoted, c.agree);
    }
    Ok(())
}
