//! Chiral superflags: the twistor relation between the two frames, and the
//! super Poincaré action written in chiral coordinates.

use qmink::classical::superflag::generic_superflag;
use qmink::classical::superpoincare::{act_on_flag, generic_element, generic_point};
use qmink::classical::{super_poincare_chiral_action, superflag_reduce};
use qmink::grassmann::{Convention, Vars};

fn main() -> qmink::Result<()> {
    for even_only in [true, false] {
        let mut vars = Vars::new(Convention::Automorphism);
        let (p1, p2) = generic_superflag(&mut vars, even_only);
        let red = superflag_reduce(&p1, &p2)?;
        let kind = if even_only { "even flag" } else { "super flag" };
        println!("{kind}: B = A - beta alpha holds: {}", red.twistor_holds());
    }

    let mut vars = Vars::new(Convention::Automorphism);
    let g = generic_element(&mut vars, "g");
    let p = generic_point(&mut vars, "p");
    let closed = super_poincare_chiral_action(&g, &p)?;
    let through_flag = act_on_flag(&g, &p)?;
    println!("closed form agrees with the action on frames: {}", closed == through_flag);
    println!("theta' = {}", closed.theta.display(&vars));
    Ok(())
}
