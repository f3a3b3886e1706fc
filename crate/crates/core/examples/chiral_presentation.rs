//! The chiral coordinates inside the Grassmannian localized at D12: their
//! expressions, the relations they satisfy, and the abstract presentation.

use qmink::minkowski::{
    check_presentation_confluence, verify_presentation, QuantumMinkowski, CHIRAL_NAMES,
};

fn main() -> qmink::Result<()> {
    let qm = QuantumMinkowski::build()?;
    let pres = qm.localized.presentation();
    for (rank, (name, (i, j))) in CHIRAL_NAMES.iter().enumerate() {
        let image = qm.chiral.image(rank as u16);
        println!("{name}[{i},{j}] = {}", pres.display(image));
    }

    let report = verify_presentation(&qm.localized, &qm.chiral, &qm.alg, &qm.minors)?;
    for f in &report.families {
        let mark = if f.holds() { "ok" } else { "FAILS" };
        println!("{mark:>5}  {} ({} instances)", f.statement, f.instances);
    }

    let (confluence, dims) = check_presentation_confluence()?;
    println!(
        "abstract presentation: {} overlaps, confluent {}, dimensions {dims:?}",
        confluence.overlaps.len(),
        confluence.confluent()
    );
    Ok(())
}
