//! The free twisted Lie algebra on two classes has Chevalley–Eilenberg
//! homology equal to its generators shifted up, plus the unit.

use twistlie::liealg::ce::ce_complex;
use twistlie::liealg::free::free_lie;
use twistlie::twisted::{basis_table, homology, Piece, SymSeq};

fn main() -> twistlie::Result<()> {
    let mut v = SymSeq::zero(4);
    v.pieces[1] = Piece::trivial(1, vec![0]);
    v.pieces[2] = Piece::trivial(2, vec![1]);
    let l = free_lie(&v, 4)?;
    print!("basis of Lie(V):\n{}", basis_table(&l.lie.seq).to_tsv());
    let ce = ce_complex(&l.lie, None)?;
    print!("H(CE(Lie(V))):\n{}", homology(&ce.seq).to_tsv());
    Ok(())
}
