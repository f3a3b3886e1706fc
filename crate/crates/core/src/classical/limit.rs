//! Specialization of a q-presentation at `q = 1` into the free
//! supercommutative algebra on the same generators.

use crate::algebra::{AlgebraPresentation, NCPoly};
use crate::grassmann::{Convention, SuperPoly, Vars};

/// Maps words of a presentation into supercommutative polynomials: the
/// generator of rank `k` becomes the variable with id `k`.
pub struct Specializer {
    vars: Vars,
}

impl Specializer {
    pub fn new(alg: &AlgebraPresentation) -> Self {
        let mut vars = Vars::new(Convention::Automorphism);
        for g in alg.generators() {
            vars.var(&g.to_string(), g.parity);
        }
        Specializer { vars }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn specialize(&self, p: &NCPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (w, c) in p.terms() {
            let mut term = SuperPoly::constant(c.at_q_one());
            for &g in w.letters() {
                term = &term
                    * &match self.vars.parity(g) {
                        crate::algebra::Parity::Even => SuperPoly::even_var(g),
                        crate::algebra::Parity::Odd => SuperPoly::odd_var(g),
                    };
            }
            out = &out + &term;
        }
        out
    }
}

/// One-shot specialization.
pub fn specialize_q1(alg: &AlgebraPresentation, p: &NCPoly) -> SuperPoly {
    Specializer::new(alg).specialize(p)
}

/// Rules whose `lhs - rhs` does not vanish at `q = 1`, as printed
/// left-hand sides.
pub fn rules_failing_at_q1(alg: &AlgebraPresentation) -> Vec<String> {
    let s = Specializer::new(alg);
    alg.rules()
        .iter()
        .filter(|r| !s.specialize(&(&NCPoly::word(&r.lhs) - &r.rhs)).is_zero())
        .map(|r| alg.display_word(&r.lhs_word()))
        .collect()
}
