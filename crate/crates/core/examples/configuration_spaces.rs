//! Homology of ordered configuration spaces from the Lie model, against the
//! braid-arrangement oracle, and the discrete projection space.

use twistlie::liealg::ce::ce_complex;
use twistlie::liealg::quillen::quillen_complex;
use twistlie::models::{braid_poincare_oracle, conf_lie_model, discrete_conf_coalgebra};
use twistlie::twisted::homology;

fn main() -> twistlie::Result<()> {
    for n in [2, 3] {
        let h = homology(&ce_complex(&conf_lie_model(n, 5, false)?, None)?.seq);
        println!("R^{n}:");
        for k in 1..=5 {
            println!("  k = {k}: {}    oracle {}", h.poincare(k), braid_poincare_oracle(k, n)?);
        }
    }
    let k = discrete_conf_coalgebra(3, 3)?;
    let q = quillen_complex(&k, 3)?;
    let h = homology(&ce_complex(&q.lie, None)?.seq);
    print!("three discrete points:\n{}", h.poincare_lines());
    Ok(())
}
