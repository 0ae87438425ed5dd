//! Finite groups as dense multiplication tables.
//!
//! Every group is materialized with elements indexed `0..n`, element `0`
//! being the identity. Products are table lookups. Named families use the
//! following canonical presentations (index formulas in parentheses):
//!
//! * `C n`: `<g | g^n>`, element `i` is `g^i`.
//! * `D n`: `<r, s | r^n, s^2, (rs)^2>` of order `2n`, element `i + n*j` is `r^i s^j`.
//! * `Dic n`: `<a, x | a^{2n}, x^2 = a^n, x^-1 a x = a^-1>` of order `4n`,
//!   element `i + 2n*j` is `a^i x^j`.
//! * `Q n`: generalized quaternion of order `n` (a power of two, at least 8),
//!   identical to `Dic (n/4)`.
//! * `S n`, `A n`: permutation groups closed breadth-first from fixed
//!   generators, see [`symmetric_generators`] and [`alternating_generators`].
//! * `product`: direct product, element `(a, b)` has index `a * |B| + b`.
//!
//! Permutations compose left to right: `x * y` applies `x` first, then `y`.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 512;

/// Tables up to this order get an exhaustive associativity check.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;
const SAMPLED_ASSOC_TRIPLES: usize = 10_000;

/// Group input accepted by [`enumerate_group`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupSpec {
    Named(NamedSpec),
    Permutation(PermutationSpec),
    Cayley(CayleySpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSpec {
    pub family: Family,
    pub params: Vec<Param>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    S,
    A,
    C,
    D,
    Q,
    Dic,
    #[serde(rename = "product")]
    Product,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(usize),
    Spec(GroupSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationSpec {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleySpec {
    pub table: Vec<Vec<usize>>,
}

impl GroupSpec {
    pub fn named(family: Family, n: usize) -> Self {
        GroupSpec::Named(NamedSpec { family, params: vec![Param::Int(n)] })
    }

    pub fn product(factors: Vec<GroupSpec>) -> Self {
        GroupSpec::Named(NamedSpec {
            family: Family::Product,
            params: factors.into_iter().map(Param::Spec).collect(),
        })
    }

    pub fn permutation(degree: usize, generators: Vec<Vec<usize>>) -> Self {
        GroupSpec::Permutation(PermutationSpec { degree, generators })
    }
}

/// A finite group with precomputed products, inverses and element orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    elem_order: Vec<usize>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl GroupTable {
    pub const IDENTITY: usize = 0;

    /// Builds a table from rows with the identity already at index 0.
    /// No axioms are checked here.
    fn from_flat(order: usize, mul: Vec<usize>, labels: Option<Vec<String>>) -> Self {
        let mut inv = vec![0; order];
        for x in 0..order {
            for y in 0..order {
                if mul[x * order + y] == Self::IDENTITY {
                    inv[x] = y;
                    break;
                }
            }
        }
        let mut elem_order = vec![0; order];
        for x in 0..order {
            let mut k = 1;
            let mut p = x;
            while p != Self::IDENTITY {
                p = mul[p * order + x];
                k += 1;
            }
            elem_order[x] = k;
        }
        let mut table =
            GroupTable { order, mul, inv, elem_order, generators: Vec::new(), labels };
        table.generators = table.greedy_generators();
        table
    }

    fn from_closure<T, F>(elements: Vec<T>, compose: F, labels: Option<Vec<String>>) -> Self
    where
        T: std::hash::Hash + Eq,
        F: Fn(&T, &T) -> T,
    {
        let n = elements.len();
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut mul = vec![0; n * n];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                mul[a * n + b] = index[&compose(x, y)];
            }
        }
        Self::from_flat(n, mul, labels)
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[Self::IDENTITY] = true;
        for x in 0..self.order {
            if !inside[x] {
                gens.push(x);
                for y in self.closure(&gens) {
                    inside[y] = true;
                }
            }
        }
        gens
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    #[inline]
    pub fn elem_order(&self, a: usize) -> usize {
        self.elem_order[a]
    }

    pub fn elem_orders(&self) -> &[usize] {
        &self.elem_order
    }

    /// A generating set chosen greedily by increasing element index.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// `y^-1 x y`
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let o = self.elem_order(x) as i64;
        let k = k.rem_euclid(o);
        let mut acc = Self::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elem_order.iter().fold(1, |acc, &o| acc.lcm(&o))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted element set of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([Self::IDENTITY]);
        seen[Self::IDENTITY] = true;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// Checks the group axioms. Associativity is exhaustive up to order 256
    /// and sampled on a fixed-seed set of triples above that.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for x in 0..n {
            if self.mul(Self::IDENTITY, x) != x || self.mul(x, Self::IDENTITY) != x {
                return Err(Error::NotAGroup(format!("element 0 is not an identity at {x}")));
            }
            if self.mul(x, self.inv(x)) != Self::IDENTITY || self.mul(self.inv(x), x) != Self::IDENTITY {
                return Err(Error::NotAGroup(format!("element {x} has no inverse")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
        Ok(())
    }
}

/// Materializes a group, refusing anything larger than `cap`.
pub fn enumerate_group(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    match spec {
        GroupSpec::Named(named) => enumerate_named(named, cap),
        GroupSpec::Permutation(p) => enumerate_permutations(p.degree, &p.generators, cap),
        GroupSpec::Cayley(c) => from_cayley(&c.table, cap),
    }
}

fn int_param(spec: &NamedSpec) -> Result<usize> {
    match spec.params.as_slice() {
        [Param::Int(n)] => Ok(*n),
        _ => Err(Error::InvalidSpec(format!("family {:?} takes exactly one integer parameter", spec.family))),
    }
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::OrderCapExceeded { order, cap })
    } else {
        Ok(())
    }
}

fn enumerate_named(spec: &NamedSpec, cap: usize) -> Result<GroupTable> {
    match spec.family {
        Family::C => {
            let n = int_param(spec)?;
            if n == 0 {
                return Err(Error::InvalidSpec("C 0".into()));
            }
            check_cap(n, cap)?;
            Ok(cyclic(n))
        }
        Family::D => {
            let n = int_param(spec)?;
            if n == 0 {
                return Err(Error::InvalidSpec("D 0".into()));
            }
            check_cap(2 * n, cap)?;
            Ok(dihedral(n))
        }
        Family::Dic => {
            let n = int_param(spec)?;
            if n == 0 {
                return Err(Error::InvalidSpec("Dic 0".into()));
            }
            check_cap(4 * n, cap)?;
            Ok(dicyclic(n))
        }
        Family::Q => {
            let n = int_param(spec)?;
            if n < 8 || !n.is_power_of_two() {
                return Err(Error::InvalidSpec(format!("Q {n}: order must be a power of two >= 8")));
            }
            check_cap(n, cap)?;
            Ok(dicyclic(n / 4))
        }
        Family::S => {
            let n = int_param(spec)?;
            if n == 0 || n > 12 {
                return Err(Error::InvalidSpec(format!("S {n}: degree must be in 1..=12")));
            }
            check_cap(factorial(n), cap)?;
            enumerate_permutations(n, &symmetric_generators(n), cap)
        }
        Family::A => {
            let n = int_param(spec)?;
            if n == 0 || n > 12 {
                return Err(Error::InvalidSpec(format!("A {n}: degree must be in 1..=12")));
            }
            check_cap(factorial(n).div_ceil(2), cap)?;
            enumerate_permutations(n, &alternating_generators(n), cap)
        }
        Family::Product => {
            if spec.params.is_empty() {
                return Err(Error::InvalidSpec("empty product".into()));
            }
            let mut acc = cyclic(1);
            for p in &spec.params {
                let factor = match p {
                    Param::Spec(s) => enumerate_group(s, cap)?,
                    Param::Int(_) => {
                        return Err(Error::InvalidSpec("product parameters must be group specs".into()))
                    }
                };
                check_cap(acc.order() * factor.order(), cap)?;
                acc = direct_product(&acc, &factor);
            }
            Ok(acc)
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn cyclic(n: usize) -> GroupTable {
    let mul = (0..n * n).map(|ab| (ab / n + ab % n) % n).collect();
    let labels = (0..n).map(|i| format!("g^{i}")).collect();
    GroupTable::from_flat(n, mul, Some(labels))
}

pub fn dihedral(n: usize) -> GroupTable {
    // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..n).map(move |i| (i, j))).collect();
    let labels = elems.iter().map(|&(i, j)| format!("r^{i}s^{j}")).collect();
    GroupTable::from_closure(
        elems,
        |&(a, b), &(c, d)| {
            let r = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            (r, (b + d) % 2)
        },
        Some(labels),
    )
}

pub fn dicyclic(n: usize) -> GroupTable {
    let m = 2 * n;
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
    let labels = elems.iter().map(|&(i, j)| format!("a^{i}x^{j}")).collect();
    GroupTable::from_closure(
        elems,
        |&(i, j), &(k, l)| match (j, l) {
            (0, _) => ((i + k) % m, l),
            // a^i x a^k = a^(i-k) x
            (_, 0) => ((i + m - k) % m, 1),
            // a^i x a^k x = a^(i-k) x^2 = a^(i-k+n)
            _ => ((i + m - k + n) % m, 0),
        },
        Some(labels),
    )
}

pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            let (ya, yb) = (y / nb, y % nb);
            mul[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
        }
    }
    let labels = (0..n).map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb))).collect();
    GroupTable::from_flat(n, mul, Some(labels))
}

/// `(0 1)` and `(0 1 ... n-1)`.
pub fn symmetric_generators(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return vec![(0..n).collect()];
    }
    let mut t: Vec<usize> = (0..n).collect();
    t.swap(0, 1);
    vec![t, cycle(n, &(0..n).collect::<Vec<_>>())]
}

/// `(0 1 2)` together with `(0 1 ... n-1)` for odd `n` or `(1 2 ... n-1)` for even `n`.
pub fn alternating_generators(n: usize) -> Vec<Vec<usize>> {
    if n < 3 {
        return vec![(0..n).collect()];
    }
    let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
    vec![cycle(n, &[0, 1, 2]), cycle(n, &long)]
}

/// The permutation of `0..degree` mapping `points[i]` to `points[i+1]` cyclically.
pub fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for (i, &x) in points.iter().enumerate() {
        p[x] = points[(i + 1) % points.len()];
    }
    p
}

fn perm_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Breadth-first closure of the generators, taken in input order.
pub fn enumerate_permutations(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<GroupTable> {
    for (index, g) in generators.iter().enumerate() {
        let mut hit = vec![false; degree];
        if g.len() != degree {
            return Err(Error::NotAPermutation { index, degree });
        }
        for &x in g {
            if x >= degree || hit[x] {
                return Err(Error::NotAPermutation { index, degree });
            }
            hit[x] = true;
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let compose = |x: &Vec<usize>, y: &Vec<usize>| -> Vec<usize> { x.iter().map(|&p| y[p]).collect() };

    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        for g in generators {
            let y = compose(&elements[head], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
                check_cap(elements.len(), cap)?;
            }
        }
        head += 1;
    }
    let labels = elements.iter().map(|p| perm_label(p)).collect();
    Ok(GroupTable::from_closure(elements, compose, Some(labels)))
}

/// Accepts a Cayley table whose identity may sit anywhere; the identity is
/// moved to index 0 and the remaining elements keep their relative order.
fn from_cayley(table: &[Vec<usize>], cap: usize) -> Result<GroupTable> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    check_cap(n, cap)?;
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {i} has length {} instead of {n}", row.len())));
        }
        let mut hit = vec![false; n];
        for &x in row {
            if x >= n || hit[x] {
                return Err(Error::NotAGroup(format!("row {i} is not a permutation")));
            }
            hit[x] = true;
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;

    // old index -> new index
    let relabel: Vec<usize> = (0..n)
        .map(|x| match x.cmp(&identity) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => x + 1,
            std::cmp::Ordering::Greater => x,
        })
        .collect();
    let mut old_of = vec![0; n];
    for (old, &new) in relabel.iter().enumerate() {
        old_of[new] = old;
    }
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = relabel[table[old_of[a]][old_of[b]]];
        }
    }
    let labels = (0..n).map(|x| old_of[x].to_string()).collect();
    let g = GroupTable::from_flat(n, mul, Some(labels));
    g.verify_axioms()?;
    Ok(g)
}

/// SL(2,3) acting on the eight nonzero vectors of F_3^2, generated by
/// `[[1,1],[0,1]]` and `[[0,-1],[1,0]]`.
pub fn sl23_spec() -> GroupSpec {
    let vectors: Vec<(i64, i64)> =
        (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[i64; 2]; 2]| -> Vec<usize> {
        vectors
            .iter()
            .map(|&(x, y)| {
                let img = ((m[0][0] * x + m[0][1] * y).rem_euclid(3), (m[1][0] * x + m[1][1] * y).rem_euclid(3));
                vectors.iter().position(|&v| v == img).unwrap()
            })
            .collect()
    };
    GroupSpec::permutation(8, vec![act([[1, 1], [0, 1]]), act([[0, -1], [1, 0]])])
}

/// Extraspecial group of order 27 and exponent 3, as affine maps
/// `(a, b) -> (a + u, b + k*a + v)` of F_3^2, generated by the translation
/// `(a, b) -> (a + 1, b)` and the shear `(a, b) -> (a, b + a)`.
pub fn heisenberg27_spec() -> GroupSpec {
    let point = |a: usize, b: usize| 3 * a + b;
    let translate = (0..9).map(|p| point((p / 3 + 1) % 3, p % 3)).collect();
    let shear = (0..9).map(|p| point(p / 3, (p % 3 + p / 3) % 3)).collect();
    GroupSpec::permutation(9, vec![translate, shear])
}

/// Conjugacy class structure of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjClassData {
    class_of: Vec<usize>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
    centralizer_orders: Vec<usize>,
    inverse_class: Vec<usize>,
    exponent: usize,
    /// `power_class[c][k]` is the class of `rep(c)^k` for `0 <= k < exponent`.
    power_class: Vec<Vec<usize>>,
}

impl ConjClassData {
    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn size(&self, c: usize) -> usize {
        self.sizes[c]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.centralizer_orders[c]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    pub fn power_class(&self, c: usize, k: i64) -> usize {
        self.power_class[c][k.rem_euclid(self.exponent as i64) as usize]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Elements of class `c` in increasing index order.
    pub fn members(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.class_of.iter().enumerate().filter(move |&(_, &k)| k == c).map(|(x, _)| x)
    }
}

/// Partitions the group into conjugacy classes. Classes are numbered by
/// their minimal element, so class 0 is the identity class.
pub fn conjugacy_classes(g: &GroupTable) -> ConjClassData {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        let mut size = 0;
        for y in 0..n {
            let z = g.conj(x, y);
            if class_of[z] == usize::MAX {
                class_of[z] = c;
                size += 1;
            }
        }
        sizes.push(size);
    }
    let centralizer_orders = sizes.iter().map(|s| n / s).collect();
    let inverse_class = reps.iter().map(|&r| class_of[g.inv(r)]).collect();
    let exponent = g.exponent();
    let power_class = reps
        .iter()
        .map(|&r| {
            let mut out = Vec::with_capacity(exponent);
            let mut p = GroupTable::IDENTITY;
            for _ in 0..exponent {
                out.push(class_of[p]);
                p = g.mul(p, r);
            }
            out
        })
        .collect();
    ConjClassData { class_of, reps, sizes, centralizer_orders, inverse_class, exponent, power_class }
}

/// Number of elements commuting with `x`.
pub fn centralizer_order(g: &GroupTable, x: usize) -> usize {
    (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(f: Family, n: usize) -> GroupTable {
        enumerate_group(&GroupSpec::named(f, n), DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn trivial_permutation_group() {
        let g = enumerate_group(&GroupSpec::permutation(3, vec![vec![0, 1, 2]]), 512).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn s3_from_generators() {
        let g = enumerate_group(&GroupSpec::permutation(3, vec![vec![1, 0, 2], vec![1, 2, 0]]), 512).unwrap();
        assert_eq!(g.order(), 6);
        g.verify_axioms().unwrap();
    }

    #[test]
    fn cyclic4_orders() {
        let g = named(Family::C, 4);
        assert_eq!(g.elem_orders(), &[1, 4, 2, 4]);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn named_families_are_groups() {
        for (f, n, order) in [
            (Family::D, 5, 10),
            (Family::D, 1, 2),
            (Family::Dic, 3, 12),
            (Family::Q, 8, 8),
            (Family::Q, 16, 16),
            (Family::S, 4, 24),
            (Family::A, 4, 12),
            (Family::A, 5, 60),
            (Family::A, 2, 1),
        ] {
            let g = named(f, n);
            assert_eq!(g.order(), order, "{f:?} {n}");
            g.verify_axioms().unwrap();
        }
        for spec in [sl23_spec(), heisenberg27_spec()] {
            let g = enumerate_group(&spec, 512).unwrap();
            g.verify_axioms().unwrap();
        }
        assert_eq!(enumerate_group(&sl23_spec(), 512).unwrap().order(), 24);
        let he = enumerate_group(&heisenberg27_spec(), 512).unwrap();
        assert_eq!(he.order(), 27);
        assert_eq!(he.exponent(), 3);
        assert!(!he.is_abelian());
    }

    #[test]
    fn dihedral_presentation() {
        let n = 6;
        let g = named(Family::D, n);
        let (r, s) = (1, n);
        assert_eq!(g.elem_order(r), n);
        assert_eq!(g.elem_order(s), 2);
        let rs = g.mul(r, s);
        assert_eq!(g.elem_order(rs), 2);
    }

    #[test]
    fn quaternion_minus_one_is_central() {
        let g = named(Family::Q, 8);
        // a^2 = -1
        assert_eq!(g.elem_order(2), 2);
        assert_eq!(centralizer_order(&g, 2), 8);
        let cc = conjugacy_classes(&g);
        let mut sizes = cc.sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn product_order() {
        let spec = GroupSpec::product(vec![GroupSpec::named(Family::C, 2), GroupSpec::named(Family::C, 4)]);
        let g = enumerate_group(&spec, 512).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn s3_classes() {
        let g = named(Family::S, 3);
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.num_classes(), 3);
        let mut by_order: Vec<(usize, usize)> =
            (0..3).map(|c| (g.elem_order(cc.rep(c)), cc.size(c))).collect();
        by_order.sort();
        assert_eq!(by_order, vec![(1, 1), (2, 3), (3, 2)]);
        let t = (0..6).find(|&x| g.elem_order(x) == 2).unwrap();
        assert_eq!(centralizer_order(&g, t), 2);
    }

    #[test]
    fn cyclic6_classes_are_singletons() {
        let cc = conjugacy_classes(&named(Family::C, 6));
        assert_eq!(cc.sizes(), &[1; 6]);
    }

    #[test]
    fn class_data_invariants() {
        for g in [named(Family::S, 4), named(Family::Dic, 3), named(Family::A, 5)] {
            let cc = conjugacy_classes(&g);
            assert_eq!(cc.sizes().iter().sum::<usize>(), g.order());
            for c in 0..cc.num_classes() {
                assert_eq!(cc.size(c) * cc.centralizer_order(c), g.order());
                assert_eq!(cc.inverse_class(cc.inverse_class(c)), c);
                assert_eq!(cc.centralizer_order(c), centralizer_order(&g, cc.rep(c)));
                assert_eq!(cc.members(c).next(), Some(cc.rep(c)));
                assert_eq!(cc.power_class(c, 1), c);
                assert_eq!(cc.power_class(c, -1), cc.inverse_class(c));
                assert_eq!(cc.power_class(c, g.elem_order(cc.rep(c)) as i64), 0);
            }
        }
    }

    #[test]
    fn conjugation_preserves_order() {
        let g = named(Family::S, 4);
        for x in 0..g.order() {
            for y in 0..g.order() {
                assert_eq!(g.elem_order(x), g.elem_order(g.conj(x, y)));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_group(&GroupSpec::named(Family::S, 6), 512).unwrap_err();
        assert_eq!(err, Error::OrderCapExceeded { order: 720, cap: 512 });
        let err = enumerate_group(&GroupSpec::permutation(6, symmetric_generators(6)), 100).unwrap_err();
        assert!(matches!(err, Error::OrderCapExceeded { cap: 100, .. }));
    }

    #[test]
    fn bad_generators_rejected() {
        let err = enumerate_group(&GroupSpec::permutation(3, vec![vec![0, 0, 1]]), 512).unwrap_err();
        assert_eq!(err, Error::NotAPermutation { index: 0, degree: 3 });
    }

    #[test]
    fn cayley_tables() {
        // C3 with the identity stored at index 2
        let table = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = enumerate_group(&GroupSpec::Cayley(CayleySpec { table }), 512).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.elem_orders(), &[1, 3, 3]);

        // Latin square without associativity: x*y = (y - x) mod 3 has no identity
        let table = (0..3).map(|x| (0..3).map(|y| (y + 3 - x) % 3).collect()).collect();
        assert!(matches!(
            enumerate_group(&GroupSpec::Cayley(CayleySpec { table }), 512),
            Err(Error::NotAGroup(_))
        ));

        // a loop of order 5 with identity that is not associative
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = enumerate_group(&GroupSpec::Cayley(CayleySpec { table }), 512).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(ref m) if m.contains("associative")), "{err}");
    }

    #[test]
    fn spec_json_schema() {
        let spec: GroupSpec = serde_json::from_str(r#"{"named": {"family": "Dic", "params": [3]}}"#).unwrap();
        assert_eq!(spec, GroupSpec::named(Family::Dic, 3));
        let spec: GroupSpec = serde_json::from_str(
            r#"{"named": {"family": "product", "params": [{"named": {"family": "C", "params": [2]}}, {"named": {"family": "C", "params": [4]}}]}}"#,
        )
        .unwrap();
        assert_eq!(enumerate_group(&spec, 512).unwrap().order(), 8);
        let spec: GroupSpec =
            serde_json::from_str(r#"{"permutation": {"degree": 3, "generators": [[1,0,2],[1,2,0]]}}"#).unwrap();
        assert_eq!(enumerate_group(&spec, 512).unwrap().order(), 6);
        let spec: GroupSpec = serde_json::from_str(r#"{"cayley": {"table": [[0,1],[1,0]]}}"#).unwrap();
        assert_eq!(enumerate_group(&spec, 512).unwrap().order(), 2);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = serde_json::to_string(&named(Family::S, 4)).unwrap();
        let b = serde_json::to_string(&named(Family::S, 4)).unwrap();
        assert_eq!(a, b);
    }
}
