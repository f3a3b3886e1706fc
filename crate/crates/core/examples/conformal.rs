//! The conformal algebra of Minkowski space as polynomial vector fields, and
//! the special conformal transformation as inversion ∘ translation ∘ inversion.

use qmink::classical::conformal::conformal_basis;
use qmink::classical::maps::{conjugated_translation, MapSpace};
use qmink::classical::{bracket_closure_table, conformal_generator, special_conformal_map};
use qmink::classical::conformal::coordinates;

fn main() -> qmink::Result<()> {
    let (vars, _) = coordinates();
    for kind in conformal_basis().into_iter().filter(|k| k.to_string().starts_with('K')) {
        println!("{kind} = {}", conformal_generator(kind)?.display(&vars));
    }

    let table = bracket_closure_table()?;
    let nonzero = table.entries.iter().filter(|e| !e.coefficients.is_empty()).count();
    println!("{} brackets, {nonzero} nonzero; for example", table.entries.len());
    for e in table.entries.iter().filter(|e| e.i == 0 && !e.coefficients.is_empty()) {
        println!("  {}", table.display_entry(e));
    }

    let space = MapSpace::new();
    let sct = special_conformal_map(&space.b, false);
    let literal = special_conformal_map(&space.b, true);
    let conj = conjugated_translation(&space.b);
    println!("x -> (x + b x^2)/(1 + 2 b.x + b^2 x^2) equals I T_b I: {}", sct == conj);
    println!("doubling the b^2 x^2 term breaks it:          {}", literal != conj);
    Ok(())
}
