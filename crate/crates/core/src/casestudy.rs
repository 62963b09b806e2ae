//! Bell numbers and the named example posets used by the case studies.

use num_bigint::BigUint;

use crate::poset::Poset;

/// Bell numbers `B_0..=B_n` from the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n + 1);
    let mut row = vec![BigUint::from(1u32)];
    out.push(row[0].clone());
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("rows are non-empty").clone());
        for value in &row {
            let sum = next.last().expect("just pushed") + value;
            next.push(sum);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

/// The `n`-th Bell number: the number of set partitions of an `n`-set.
pub fn bell(n: usize) -> BigUint {
    bell_numbers(n).pop().expect("table has n + 1 entries")
}

/// `B(i + 2) - B(i + 1) + 1` for `i = 1..=max_i`: the number of regular
/// partitions of [`m_poset`]`(i)`.
pub fn m_family_formula_table(max_i: usize) -> Vec<BigUint> {
    let b = bell_numbers(max_i + 2);
    (1..=max_i).map(|i| &b[i + 2] - &b[i + 1] + 1u32).collect()
}

/// Bottom `r`, top `t`, and `i` pairwise incomparable elements between them,
/// named `a`, `b`, `c`, ... (`m1`, `m2`, ... beyond 26).
pub fn m_poset(i: usize) -> Poset {
    let middle: Vec<String> = (0..i)
        .map(|k| {
            if i <= 26 {
                char::from(b'a' + k as u8).to_string()
            } else {
                format!("m{}", k + 1)
            }
        })
        .collect();
    let mut pairs: Vec<(String, String)> = middle.iter().map(|m| ("r".into(), m.clone())).collect();
    pairs.extend(middle.iter().rev().map(|m| (m.clone(), "t".into())));
    if i == 0 {
        pairs.push(("r".into(), "t".into()));
    }
    Poset::from_pairs(pairs).expect("m-family posets are valid")
}

/// `x < y`, `x < z`.
pub fn b2() -> Poset {
    Poset::from_pairs([("x", "y"), ("x", "z")]).expect("valid")
}

/// Seven elements: `x` below `a, b, c, d`; `a, b` below `y`; `c, d` below `z`.
pub fn p4() -> Poset {
    Poset::from_pairs([
        ("x", "a"),
        ("x", "b"),
        ("b", "y"),
        ("a", "y"),
        ("x", "c"),
        ("x", "d"),
        ("c", "z"),
        ("d", "z"),
    ])
    .expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bell_numbers() {
        let table: Vec<u64> = bell_numbers(7)
            .iter()
            .map(|b| b.try_into().unwrap())
            .collect();
        assert_eq!(table, vec![1, 1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(bell(0), BigUint::from(1u32));
        assert_eq!(bell(3), BigUint::from(5u32));
    }

    #[test]
    fn bell_is_exact_past_u64() {
        assert_eq!(bell(25).to_string(), "4638590332229999353");
        assert_eq!(bell(26).to_string(), "49631246523618756274");
    }

    #[test]
    fn m_family_shapes() {
        let m1 = m_poset(1);
        assert_eq!(m1.elements(), vec!["r", "a", "t"]);
        assert!(m1.is_chain());
        let m2 = m_poset(2);
        assert_eq!(m2.elements(), vec!["r", "a", "b", "t"]);
        assert_eq!(m2.covering().len(), 4);
        assert!(!m2.is_forest());
        for i in 1..8 {
            assert_eq!(m_poset(i).len(), i + 2);
        }
        assert_eq!(m_poset(30).len(), 32);
    }

    #[test]
    fn formula_first_entry() {
        assert_eq!(m_family_formula_table(1), vec![BigUint::from(4u32)]);
    }

    #[test]
    fn named_posets() {
        assert_eq!(b2().relation_len(), 5);
        assert_eq!(p4().len(), 7);
        assert_eq!(p4().elements(), vec!["x", "a", "b", "y", "c", "d", "z"]);
    }
}
