use super::AlgebraPresentation;

/// Number of normal words of length `d`, i.e. words containing no rule
/// left-hand side as a factor.
pub fn pbw_dimension(alg: &AlgebraPresentation, d: usize) -> u128 {
    let n = alg.num_generators();
    if d == 0 {
        return 1;
    }
    // ending[g] = number of normal words of the current length ending in g
    let mut ending = vec![1u128; n];
    for _ in 1..d {
        let mut next = vec![0u128; n];
        for (b, slot) in next.iter_mut().enumerate() {
            *slot = (0..n)
                .filter(|&a| alg.rule_for(a as u16, b as u16).is_none())
                .map(|a| ending[a])
                .sum();
        }
        ending = next;
    }
    ending.iter().sum()
}

/// Dimension of the degree-`d` part of the free supercommutative algebra on
/// `even` commuting and `odd` anticommuting variables.
pub fn supercommutative_count(even: u64, odd: u64, d: u64) -> u128 {
    (0..=d.min(odd))
        .map(|k| binomial(odd, k) * multichoose(even, d - k))
        .sum()
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn multichoose(n: u64, k: u64) -> u128 {
    if n == 0 {
        return u128::from(k == 0);
    }
    binomial(n + k - 1, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts() {
        assert_eq!(supercommutative_count(17, 8, 1), 25);
        assert_eq!(supercommutative_count(17, 8, 2), 317);
        assert_eq!(supercommutative_count(4, 2, 2), 19);
        assert_eq!(supercommutative_count(4, 2, 0), 1);
        assert_eq!(supercommutative_count(0, 2, 3), 0);
    }
}
