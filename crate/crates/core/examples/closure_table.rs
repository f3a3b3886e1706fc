//! Reordering identities between the quantum 2×2 minors, and the ones that
//! are not pure q-commutations.

use qmink::minkowski::QuantumMinkowski;

fn main() -> qmink::Result<()> {
    let qm = QuantumMinkowski::build()?;
    let labels: Vec<String> = (0..qm.minors.len()).map(|i| qm.minors.label(i)).collect();
    println!("minors: {}", labels.join(" "));

    let entries = &qm.table.entries;
    let vanishing = entries.iter().filter(|e| e.vanishes()).count();
    let pure = entries.iter().filter(|e| e.is_pure()).count();
    println!("{} pairs: {pure} pure, {vanishing} vanishing", entries.len());
    println!("with corrections:");
    for e in entries.iter().filter(|e| e.correction().next().is_some()) {
        println!("  {}", e.display(&qm.minors));
    }
    Ok(())
}
