//! The comultiplication maps every minor into (quantum supergroup) ⊗
//! (Grassmannian).

use qmink::minkowski::{coaction_membership, QuantumMinkowski};

fn main() -> qmink::Result<()> {
    let qm = QuantumMinkowski::build()?;
    for idx in 0..qm.minors.len() {
        let r = coaction_membership(&qm.alg, &qm.minors, idx)?;
        match &r.witness {
            None => println!("{}: {} cofactors", r.minor, r.cofactors.len()),
            Some(w) => println!("{}: leaves the minor span at {w}", r.minor),
        }
    }
    Ok(())
}
