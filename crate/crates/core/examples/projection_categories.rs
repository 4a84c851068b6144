//! Projection categories: finite sets, the walking arrow and collision
//! structures.

use twistlie::partitions::{cs_from_graph, CollisionStructure};
use twistlie::projcat::cs::{csi_hom, pr_cs_hom};
use twistlie::projcat::fb::pr_fb_hom;
use twistlie::projcat::{walking_arrow, PrCategory};

fn main() -> twistlie::Result<()> {
    println!("Pr(FB)(m, n):");
    for n in 0..=4 {
        let row: Vec<String> = (0..=n).map(|m| pr_fb_hom(m, n).map(|c| c.len().to_string())).collect::<Result<_, _>>()?;
        println!("  n = {n}: {}", row.join(" "));
    }

    let cat = walking_arrow();
    let pr = PrCategory::build(&cat);
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        println!("Pr(walking arrow)({a}, {b}) has {} class", pr.hom_size(a, b));
    }

    let points = CollisionStructure::trivial(2);
    let edge = cs_from_graph(2, &[(0, 1)])?;
    println!(
        "two points into an edge: {} classes, {} collision maps",
        pr_cs_hom(&points, &edge)?.len(),
        csi_hom(&points, &edge)?.len()
    );
    Ok(())
}
