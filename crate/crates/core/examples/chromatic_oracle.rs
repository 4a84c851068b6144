//! Chromatic polynomials by deletion and contraction, checked against
//! brute-force colorings.

use twistlie::models::{chromatic_polynomial, count_colorings, GraphSpec};

fn main() -> twistlie::Result<()> {
    let graphs = [
        ("K4", GraphSpec::complete(4)),
        ("4-cycle", GraphSpec::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)])?),
        ("path", GraphSpec::new(4, vec![(0, 1), (1, 2), (2, 3)])?),
    ];
    for (name, g) in graphs {
        let p = chromatic_polynomial(&g)?;
        let checks: Vec<String> = (0..5).map(|c| format!("{}={}", p.eval(c), count_colorings(&g, c as usize))).collect();
        println!("{name}: {p}    [{}]", checks.join(" "));
    }
    Ok(())
}
