//! Finite groups given by Cayley tables, identity at index 0.

use crate::error::{NetError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl Group {
    /// Checks closure, identity 0, inverses and associativity.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let k = table.len();
        if k == 0 {
            return Err(NetError::NotAGroup("empty table".into()));
        }
        if table.iter().any(|r| r.len() != k) {
            return Err(NetError::NotAGroup("table is not square".into()));
        }
        if table.iter().flatten().any(|&x| x >= k) {
            return Err(NetError::NotAGroup("entry out of range".into()));
        }
        if (0..k).any(|x| table[0][x] != x || table[x][0] != x) {
            return Err(NetError::NotAGroup("0 is not the identity".into()));
        }
        let mut inverse = vec![usize::MAX; k];
        for (x, inv) in inverse.iter_mut().enumerate() {
            match (0..k).find(|&y| table[x][y] == 0 && table[y][x] == 0) {
                Some(y) => *inv = y,
                None => return Err(NetError::NotAGroup(format!("element {x} has no inverse"))),
            }
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(NetError::NotAGroup(format!(
                            "({a}*{b})*{c} != {a}*({b}*{c})"
                        )));
                    }
                }
            }
        }
        Ok(Self { table, inverse })
    }

    pub fn cyclic(k: usize) -> Result<Self> {
        Self::from_table(
            (0..k)
                .map(|a| (0..k).map(|b| (a + b) % k).collect())
                .collect(),
        )
    }

    /// `{e, a, b, c}` as `0..4` with `x * y = x xor y`.
    pub fn klein4() -> Self {
        Self::from_table((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect())
            .expect("Klein table is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups() {
        let c3 = Group::cyclic(3).unwrap();
        assert_eq!(c3.mul(2, 2), 1);
        assert_eq!(c3.inv(1), 2);
        let v = Group::klein4();
        assert!((0..4).all(|x| v.inv(x) == x));
    }

    #[test]
    fn rejects_non_groups() {
        // identity not at 0
        assert!(Group::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        // latin square that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(Group::from_table(t), Err(NetError::NotAGroup(_))));
        assert!(Group::from_table(vec![vec![0, 1], vec![1, 2]]).is_err());
    }
}
