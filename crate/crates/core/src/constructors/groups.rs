use std::collections::HashMap;

use crate::error::{Error, Result};

/// Largest group accepted; full validation is cubic in the order.
pub const MAX_GROUP_ORDER: usize = 512;

/// A finite group given by its Cayley table, `mul(a, b) = a · b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(rows: &[Vec<usize>]) -> Result<Self> {
        let g = rows.len();
        let bad = |m: String| Error::InvalidGroupTable(m);
        if g == 0 {
            return Err(bad("empty table".into()));
        }
        if g > MAX_GROUP_ORDER {
            return Err(bad(format!("order {g} exceeds {MAX_GROUP_ORDER}")));
        }
        let mut table = Vec::with_capacity(g * g);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != g {
                return Err(bad(format!("row {i} has {} entries, expected {g}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= g) {
                return Err(bad(format!("entry {x} in row {i} out of range")));
            }
            table.extend_from_slice(row);
        }
        let mul = |a: usize, b: usize| table[a * g + b];
        let identity = (0..g)
            .find(|&e| (0..g).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = vec![0; g];
        for a in 0..g {
            inverse[a] = (0..g)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| bad(format!("element {a} has no inverse")))?;
        }
        for a in 0..g {
            for b in 0..g {
                let ab = mul(a, b);
                for c in 0..g {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(bad(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(GroupTable { order: g, table, identity, inverse })
    }

    /// The group generated by permutations of `0..degree`, elements listed
    /// in breadth-first order from the identity.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for g in generators {
            crate::cc::check_permutation(g, degree)
                .map_err(|_| Error::InvalidGroupTable("generator is not a permutation".into()))?;
        }
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elements.len() {
            for gen in generators {
                let next = compose(&elements[head], gen);
                if !index.contains_key(&next) {
                    if elements.len() == MAX_GROUP_ORDER {
                        return Err(Error::InvalidGroupTable(format!(
                            "generated group exceeds order {MAX_GROUP_ORDER}"
                        )));
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }
        let rows: Vec<Vec<usize>> =
            elements.iter().map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect()).collect();
        Self::new(&rows)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(&rows)
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n < 2 {
            return Self::new(&[vec![0]]);
        }
        let transposition: Vec<usize> = (0..n)
            .map(|x| match x {
                0 => 1,
                1 => 0,
                _ => x,
            })
            .collect();
        let cycle: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
        Self::from_permutations(n, &[transposition, cycle])
    }

    /// The symmetry group of the regular `n`-gon, of order `2n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        let rotation: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
        let reflection: Vec<usize> = (0..n).map(|x| (n - x) % n).collect();
        Self::from_permutations(n, &[rotation, reflection])
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`; element `4s + u` is
    /// `(-1)^s` times unit `u` of `(1, i, j, k)`.
    pub fn quaternion() -> Result<Self> {
        // (sign, unit) of unit products.
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let rows: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (s, u) = UNIT[a % 4][b % 4];
                        ((a / 4 + b / 4 + s) % 2) * 4 + u
                    })
                    .collect()
            })
            .collect();
        Self::new(&rows)
    }

    /// `G × H` with element `(a, b)` at index `a·|H| + b`.
    pub fn direct_product(&self, other: &GroupTable) -> Result<Self> {
        let h = other.order;
        let g = self.order * h;
        let rows: Vec<Vec<usize>> =
            (0..g).map(|x| (0..g).map(|y| self.mul(x / h, y / h) * h + other.mul(x % h, y % h)).collect()).collect();
        Self::new(&rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Conjugacy class index of each element; classes numbered by minimal element.
    pub fn class_of(&self) -> Vec<usize> {
        let mut class = vec![usize::MAX; self.order];
        let mut next = 0;
        for x in 0..self.order {
            if class[x] != usize::MAX {
                continue;
            }
            for g in 0..self.order {
                class[self.mul(self.mul(g, x), self.inverse(g))] = next;
            }
            next += 1;
        }
        class
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z))).collect()
    }
}
