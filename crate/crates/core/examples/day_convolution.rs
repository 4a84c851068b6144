//! Day convolution over finite sets, symmetric and divided powers, and the
//! norm map between them.

use twistlie::random::{random_quasi_iso_below, stream, SeqShape};
use twistlie::twisted::day::{day_tensor_fb, gamma_power_map, norm, sym_power};
use twistlie::twisted::{basis_table, is_quasi_iso_below, SymSeq};

fn main() -> twistlie::Result<()> {
    let x = SymSeq::generator(4, 1, 0);
    let y = SymSeq::generator(4, 1, 1);
    let xy = day_tensor_fb(&x, &y, 4)?;
    print!("X ⊗ Y:\n{}", basis_table(&xy).to_tsv());

    let sym = sym_power(&y, 2, 4)?;
    print!("Sym^2 of an odd class:\n{}", basis_table(&sym.seq).to_tsv());
    println!("norm Sym^2 → Γ^2 is an isomorphism: {}", norm(&y, 2, 4)?.is_iso());

    let shape = SeqShape { max_weight: 4, ..Default::default() };
    let f = random_quasi_iso_below(&mut stream(7, 0, 0), &shape, 2);
    for k in 1..=3 {
        let g = gamma_power_map(&f, k, 4)?;
        println!("Γ^{k}(f) is a quasi-isomorphism below weight {}: {}", k + 1, is_quasi_iso_below(&g, k + 1));
    }
    Ok(())
}
