//! Reading and writing the JSON formats.

use twistlie::io::{coalg_from_json, lie_from_json, lie_to_json};
use twistlie::models::conf_lie_model;

fn main() -> twistlie::Result<()> {
    let l = conf_lie_model(2, 3, false)?;
    let text = serde_json::to_string_pretty(&lie_to_json(&l)).expect("serializable");
    println!("{text}");
    assert_eq!(lie_from_json(&text, "<memory>")?, l);

    let coalg = r#"{"W": 2, "weights": {"1": {"basis": [{"deg": 0}]}}}"#;
    let k = coalg_from_json(coalg, "<memory>")?;
    println!("coalgebra dimensions: {:?}", (0..=2).map(|n| k.seq.dim(n)).collect::<Vec<_>>());

    let broken = "{\"W\": 2,\n \"weights\": {\"1\": {\"basis\": [{\"deg\": \"zero\"}]}}}";
    if let Err(e) = lie_from_json(broken, "broken.json") {
        println!("{e}");
    }
    Ok(())
}
