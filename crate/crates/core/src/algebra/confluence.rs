use super::{AlgebraPresentation, NCPoly, Word};
use crate::error::Result;

/// One length-three overlap ambiguity `x y z` where both `x y` and `y z` are
/// rule left-hand sides.
#[derive(Clone, Debug)]
pub struct Overlap {
    pub word: Word,
    /// Families of the two rules involved, left one first.
    pub class: (String, String),
    /// Normal form of (rhs(xy)) z minus normal form of x (rhs(yz)).
    pub difference: NCPoly,
}

impl Overlap {
    pub fn resolved(&self) -> bool {
        self.difference.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub overlaps: Vec<Overlap>,
}

impl ConfluenceReport {
    pub fn confluent(&self) -> bool {
        self.overlaps.iter().all(Overlap::resolved)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &Overlap> {
        self.overlaps.iter().filter(|o| !o.resolved())
    }

    /// Overlap counts grouped by rule-family class, as
    /// `(class, total, unresolved)` in sorted class order.
    pub fn by_class(&self) -> Vec<((String, String), usize, usize)> {
        let mut map: std::collections::BTreeMap<(String, String), (usize, usize)> =
            Default::default();
        for o in &self.overlaps {
            let e = map.entry(o.class.clone()).or_default();
            e.0 += 1;
            if !o.resolved() {
                e.1 += 1;
            }
        }
        map.into_iter().map(|(k, (t, u))| (k, t, u)).collect()
    }
}

/// Reduces every overlap ambiguity of the rule set both ways and records
/// whether the two results agree (diamond lemma).
pub fn check_confluence(alg: &AlgebraPresentation) -> Result<ConfluenceReport> {
    let mut overlaps = Vec::new();
    for left in alg.rules() {
        let [x, y] = left.lhs;
        for right in alg.rules().iter().filter(|r| r.lhs[0] == y) {
            let z = right.lhs[1];
            let path_left = &left.rhs * &NCPoly::generator(z);
            let path_right = &NCPoly::generator(x) * &right.rhs;
            let difference = alg.normal_form(&(&path_left - &path_right))?;
            overlaps.push(Overlap {
                word: Word::from_slice(&[x, y, z]),
                class: (left.family.clone(), right.family.clone()),
                difference,
            });
        }
    }
    overlaps.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(ConfluenceReport { overlaps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cq, Parity, RewriteRule};

    #[test]
    fn single_rule_has_no_overlaps() {
        let mut b = AlgebraPresentation::builder("one");
        let a = b.generator("a", None, Parity::Even);
        let bb = b.generator("b", None, Parity::Even);
        b.generator("c", None, Parity::Even);
        b.rule(RewriteRule::new([bb, a], NCPoly::word(&[a, bb]), "swap"));
        let alg = b.build(false).unwrap();
        let rep = check_confluence(&alg).unwrap();
        assert!(rep.overlaps.is_empty());
        assert!(rep.confluent());
    }

    #[test]
    fn monomial_resolves_but_corrupted_system_fails() {
        // y x = q x y, z y = q y z, z x = x z: the single overlap z y x resolves
        let mut b = AlgebraPresentation::builder("bad");
        let x = b.generator("x", None, Parity::Even);
        let y = b.generator("y", None, Parity::Even);
        let z = b.generator("z", None, Parity::Even);
        b.rule(RewriteRule::new([y, x], NCPoly::term(cq(1, 1), Word::from_slice(&[x, y])), "r"));
        b.rule(RewriteRule::new([z, y], NCPoly::term(cq(1, 1), Word::from_slice(&[y, z])), "r"));
        b.rule(RewriteRule::new([z, x], NCPoly::word(&[x, z]), "r"));
        let alg = b.build(false).unwrap();
        let rep = check_confluence(&alg).unwrap();
        assert_eq!(rep.overlaps.len(), 1);
        assert!(rep.confluent());

        // z y -> x x and y x -> 0 disagree on z y x
        let mut b = AlgebraPresentation::builder("bad2");
        let x = b.generator("x", None, Parity::Even);
        let y = b.generator("y", None, Parity::Even);
        let z = b.generator("z", None, Parity::Even);
        b.rule(RewriteRule::new([z, y], NCPoly::word(&[x, x]), "r"));
        b.rule(RewriteRule::new([y, x], NCPoly::zero(), "r"));
        let alg = b.build(false).unwrap();
        let rep = check_confluence(&alg).unwrap();
        assert!(!rep.confluent());
    }
}
