//! Diamond-lemma check of the quantum matrix superalgebra and the graded
//! dimensions of its PBW basis.

use qmink::algebra::{check_confluence, pbw_dimension};
use qmink::supergroup::build_slq41;

fn main() -> qmink::Result<()> {
    let alg = build_slq41();
    let pres = alg.presentation();
    println!("{} generators, {} rewriting rules", pres.num_generators(), pres.rules().len());

    let report = check_confluence(pres)?;
    for ((left, right), total, bad) in report.by_class() {
        println!("{left:>12} / {right:<12} {total:>5} overlaps, {bad} unresolved");
    }
    println!("confluent: {}", report.confluent());

    let dims: Vec<u128> = (0..=4).map(|d| pbw_dimension(pres, d)).collect();
    println!("normal words by degree: {dims:?}");
    Ok(())
}
