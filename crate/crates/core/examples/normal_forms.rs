//! Normal forms in the four algebras, and the comultiplication of a
//! generator of the quantum supergroup.

use qmink::cli::{normal_form_command, parse, AlgebraName, Evaluator};
use qmink::supergroup::build_slq41;

fn main() -> qmink::Result<()> {
    let samples = [
        ("a[1,2]*a[1,1]", "slq41"),
        ("a[2,5]*a[1,5] + q^-1*a[1,5]*a[2,5]", "slq41"),
        ("D[2,4]*D[1,3]", "grq"),
        ("D12inv*D[3,4]*D[1,2]", "minkq"),
        ("t[4,1]*t[3,2]", "chiral-abstract"),
    ];
    for (expr, algebra) in samples {
        println!("{algebra:>16}: {expr}  ->  {}", normal_form_command(expr, algebra)?);
    }

    let alg = build_slq41();
    let ev = Evaluator::new(AlgebraName::Slq41)?;
    let a12 = ev.eval(&parse("a[1,2]").expect("valid expression"))?;
    let delta = alg.comultiply(&a12)?;
    println!("\nΔ(a[1,2]) = {}", delta.display(alg.presentation()));
    Ok(())
}
