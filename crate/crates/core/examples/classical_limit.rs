//! At q = 1 every rewriting rule becomes a supercommutation, so normal forms
//! specialize to the supercommutative polynomial ring.

use qmink::classical::limit::rules_failing_at_q1;
use qmink::classical::Specializer;
use qmink::cli::{parse, AlgebraName, Evaluator};

fn main() -> qmink::Result<()> {
    for name in [AlgebraName::Slq41, AlgebraName::ChiralAbstract] {
        let ev = Evaluator::new(name)?;
        let failing = rules_failing_at_q1(ev.presentation());
        println!("{name}: {} rules fail at q = 1", failing.len());
    }

    let ev = Evaluator::new(AlgebraName::Slq41)?;
    let spec = Specializer::new(ev.presentation());
    for text in ["a[2,1]*a[1,1]", "a[2,5]*a[1,5]", "a[2,5]*a[1,1]*a[1,5]"] {
        let nf = ev.eval(&parse(text).expect("valid expression"))?;
        println!(
            "{text}: {}  ->  {}",
            ev.presentation().display(&nf),
            spec.vars().display(&spec.specialize(&nf))
        );
    }
    Ok(())
}
