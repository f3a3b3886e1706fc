//! The antilinear involution on sl(4|1) with fixed points su(2,2|1), and
//! the reality conditions it induces on the super Poincaré group.

use qmink::classical::superpoincare::generic_real_element;
use qmink::grassmann::{Convention, Vars};
use qmink::realforms::{
    check_bracket_compatibility, check_involution, fixed_points, poincare_reality_reduce, rho,
    satisfies_su221,
};

fn main() -> qmink::Result<()> {
    println!("sigma^2 = id: {}", check_involution().is_empty());
    println!("sigma preserves brackets: {}", check_bracket_compatibility().is_empty());
    let fp = fixed_points();
    let (even, odd) = fp.dimensions();
    println!("real fixed points: {even} even + {odd} odd");
    println!(
        "all satisfy the su(2,2|1) conditions: {}",
        fp.even.iter().chain(&fp.odd).all(satisfies_su221)
    );

    let mut vars = Vars::new(Convention::Automorphism);
    let g = generic_real_element(&mut vars, "g")?;
    let red = poincare_reality_reduce(&g, &vars)?;
    println!("rho fixes a real element: {}", red.fixed);
    println!("rho^2 = id: {}", rho(&rho(&g, &vars)?, &vars)? == g);
    Ok(())
}
