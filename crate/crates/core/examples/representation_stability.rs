//! The stability conditions on the Lie homology of the planar configuration
//! model, and the vanishing bound they imply.

use twistlie::models::conf_lie_model;
use twistlie::repstab::{check_conditions, e1_page, vanishing_bound_report, LieHomologyData, Variant};

fn main() -> twistlie::Result<()> {
    let h = LieHomologyData::from_lie(&conf_lie_model(2, 8, false)?)?;
    println!("{}", check_conditions(&h, 3, Variant::General));
    let bound = vanishing_bound_report(&h, 3, 8, Variant::General)?;
    for r in &bound.rows {
        println!("degree {}: ℓ = {}, Sym(V) vanishes from weight {}: {}", r.degree, r.ell, r.from_weight, r.first_failure.is_none());
    }
    print!("E1 page through weight 4:\n{}", e1_page(&h, 4)?.poincare_lines());
    Ok(())
}
