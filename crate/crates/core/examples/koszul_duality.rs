//! The duality maps between a Lie algebra and its Chevalley–Eilenberg
//! coalgebra, checked on the torus tensored with a free Lie algebra.

use twistlie::liealg::ce::{ce_coalgebra, ce_complex, ce_map};
use twistlie::liealg::free::free_lie;
use twistlie::liealg::quillen::{epsilon, eta, quillen_complex};
use twistlie::liealg::{tensor_lie, GradedAlgebra};
use twistlie::twisted::{homology, is_quasi_iso, ChainMap, SymSeq};

fn main() -> twistlie::Result<()> {
    let w = 3;
    let l = tensor_lie(&GradedAlgebra::torus(), &free_lie(&SymSeq::generator(w, 1, 0), w)?.lie)?;
    let (ce, k) = ce_coalgebra(&l)?;
    let q = quillen_complex(&k, w)?;
    let e = epsilon(&l, &ce, &q)?;
    let ce_q = ce_complex(&q.lie, None)?;
    let h = eta(&k, &q, &ce_q)?;
    println!("ε: Q(CE(L)) → L quasi-isomorphism: {}", is_quasi_iso(&e));
    println!("η: CE(L) → CE(Q(CE(L))) quasi-isomorphism: {}", is_quasi_iso(&h));
    println!("CE(ε) ∘ η = id: {}", ce_map(&e, &ce_q, &ce)?.compose(&h) == ChainMap::identity(&ce.seq));
    print!("H(L):\n{}", homology(&l.seq).to_tsv());
    Ok(())
}
