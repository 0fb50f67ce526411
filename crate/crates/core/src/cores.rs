//! Simultaneous `(m, n)`-cores and their bijection with semimodules.

use crate::diagrams::{Frame, Partition};
use crate::error::{Error, Result};
use crate::semimodules::{enumerate_semimodules, Semimodule};

/// Reads `x = 0, 1, ..., max gap`: an element of Delta steps north, a gap
/// steps west. Each west step contributes a row whose length is the number
/// of earlier north steps.
pub fn semimodule_to_core(s: &Semimodule) -> Partition {
    let mut rows: Vec<u32> = s
        .gaps()
        .iter()
        .map(|&x| (0..x as i64).filter(|&y| s.contains(y)).count() as u32)
        .collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(rows).expect("rows are sorted")
}

/// The semimodule whose gap set is the set of first-column hook lengths of
/// `p`, if that set is a semimodule for `f`.
pub fn core_to_semimodule(p: &Partition, f: Frame) -> Result<Semimodule> {
    Semimodule::new(f, p.first_column_hooks())
}

pub fn is_p_core(p: &Partition, q: u32) -> bool {
    !p.hooks().any(|h| h == q)
}

/// All simultaneous cores, ordered by size and then by rows descending.
pub fn enumerate_cores(f: &Frame) -> Vec<Partition> {
    let mut cores: Vec<Partition> = enumerate_semimodules(f).iter().map(semimodule_to_core).collect();
    cores.sort_by(|a, b| a.area().cmp(&b.area()).then_with(|| b.rows().cmp(a.rows())));
    cores
}

pub fn count_self_conjugate_cores(f: &Frame) -> u64 {
    enumerate_cores(f).iter().filter(|p| p.transpose() == **p).count() as u64
}

pub fn count_self_dual_semimodules(f: &Frame) -> u64 {
    enumerate_semimodules(f).iter().filter(|s| s.dual() == **s).count() as u64
}

/// `C(floor(m/2) + floor(n/2), floor(m/2))`.
pub fn self_conjugate_formula(f: &Frame) -> u128 {
    binomial((f.m() / 2 + f.n() / 2) as u64, (f.m() / 2) as u64)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Coefficients (constant term first) of the q-binomial `[n choose k]_q`.
pub fn q_binomial(n: u32, k: u32) -> Vec<i128> {
    if k > n {
        return vec![0];
    }
    // row[j] = [i choose j]_q for the current i
    let mut row: Vec<Vec<i128>> = vec![vec![1]];
    for i in 1..=n {
        let mut next = vec![vec![1i128]; (i as usize + 1).min(k as usize + 1)];
        for j in 1..next.len() {
            let left = &row[j - 1];
            let right = row.get(j).map(Vec::as_slice).unwrap_or(&[]);
            let len = left.len().max(right.len() + j);
            let mut c = vec![0i128; len];
            for (d, &x) in left.iter().enumerate() {
                c[d] += x;
            }
            for (d, &x) in right.iter().enumerate() {
                c[d + j] += x;
            }
            next[j] = c;
        }
        row = next;
    }
    let mut c = row.swap_remove(k as usize);
    while c.len() > 1 && c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// `[(m+n-1)!]_q / ([m!]_q [n!]_q)` evaluated at `q = -1`, computed as the
/// q-binomial `[m+n-1 choose m]_q` divided exactly by `[n]_q`.
pub fn q_catalan_at_minus_one(f: &Frame) -> Result<i128> {
    let (m, n) = (f.m(), f.n());
    let mut num = q_binomial(m + n - 1, m);
    let d = n as usize;
    // Synthetic division by 1 + q + ... + q^(d-1), from the top degree down.
    let mut quot = vec![0i128; num.len().saturating_sub(d - 1).max(1)];
    for top in (d - 1..num.len()).rev() {
        let c = num[top];
        quot[top + 1 - d] = c;
        for j in 0..d {
            num[top - j] -= c;
        }
    }
    if num.iter().any(|&c| c != 0) {
        return Err(Error::MalformedInput("q-analogue is not a polynomial".into()));
    }
    Ok(quot.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c } else { -c }).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(m: u32, n: u32) -> Frame {
        Frame::new(m, n).unwrap()
    }

    fn part(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn three_four_core() {
        let s = Semimodule::new(frame(3, 4), [1, 2, 5]).unwrap();
        let c = semimodule_to_core(&s);
        assert_eq!(c, part(&[3, 1, 1]));
        assert!(is_p_core(&c, 3) && is_p_core(&c, 4));
        assert_eq!(core_to_semimodule(&c, frame(3, 4)).unwrap(), s);
    }

    #[test]
    fn full_semimodule_gives_empty_core() {
        assert!(semimodule_to_core(&Semimodule::full(frame(5, 7))).is_empty());
    }

    #[test]
    fn five_seven_hooks() {
        let s = Semimodule::new(frame(5, 7), [1, 2, 3, 4, 6, 9]).unwrap();
        let mut hooks = semimodule_to_core(&s).first_column_hooks();
        hooks.sort();
        assert_eq!(hooks, [1, 2, 3, 4, 6, 9]);
    }

    #[test]
    fn hook_predicate() {
        assert!(!is_p_core(&part(&[1]), 1));
        assert!(!is_p_core(&part(&[2, 1]), 3));
        assert!(is_p_core(&part(&[2, 1]), 2));
    }

    #[test]
    fn core_counts() {
        assert_eq!(enumerate_cores(&frame(3, 4)).len(), 5);
        assert_eq!(enumerate_cores(&frame(1, 6)), [Partition::empty()]);
        assert_eq!(enumerate_cores(&frame(2, 3)), [Partition::empty(), part(&[1])]);
    }

    #[test]
    fn self_conjugate_counts() {
        assert_eq!(count_self_conjugate_cores(&frame(3, 4)), 3);
        assert_eq!(count_self_conjugate_cores(&frame(1, 4)), 1);
        assert_eq!(count_self_conjugate_cores(&frame(5, 7)), 10);
        assert_eq!(self_conjugate_formula(&frame(5, 7)), 10);
        assert_eq!(count_self_dual_semimodules(&frame(5, 7)), 10);
    }

    #[test]
    fn q_binomials() {
        assert_eq!(q_binomial(4, 2), [1, 1, 2, 1, 1]);
        assert_eq!(q_binomial(3, 0), [1]);
        assert_eq!(q_binomial(3, 3), [1]);
    }

    #[test]
    fn minus_one_evaluation() {
        // [6 choose 3]_q / [4]_q at q = -1 for the pair (3, 4)
        assert_eq!(q_catalan_at_minus_one(&frame(3, 4)).unwrap(), 3);
        assert_eq!(q_catalan_at_minus_one(&frame(5, 7)).unwrap(), 10);
        assert_eq!(q_catalan_at_minus_one(&frame(1, 1)).unwrap(), 1);
    }
}
