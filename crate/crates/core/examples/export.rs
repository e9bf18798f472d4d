//! JSON and CSV output for downstream tools.

use lkrep::coxeter::CoxeterGraph;
use lkrep::families::spherical_family;
use lkrep::laurent::make_params;
use lkrep::lkcore::apply_word;

fn main() {
    let g = CoxeterGraph::from_label("A3").unwrap();
    let fam = spherical_family(&g, &make_params(1, 0, 0), &"x*y^2".parse().unwrap()).unwrap();
    let labels: Vec<String> = fam.table().roots().iter().map(|r| r.to_string()).collect();

    println!("{}", serde_json::to_string_pretty(&fam.table().to_json()).unwrap());
    let m = apply_word(&"0121".parse().unwrap(), &fam);
    println!("{}", serde_json::to_string(&m.to_json(&labels)).unwrap());
    print!("{}", m.to_csv(&labels));
}
