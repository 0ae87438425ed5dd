//! Cyclic subgroups up to conjugacy, normalizers, transversals, the
//! number-theoretic Möbius function and minimal normal subgroups of sections.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ConjClassData, GroupTable};

/// A subgroup stored as its sorted element set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Subgroup {
    elements: Vec<usize>,
    generator: Option<usize>,
}

impl Subgroup {
    /// Validates closure; `generator` is filled in when the subgroup is cyclic.
    pub fn from_elements(g: &GroupTable, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let mut inside = vec![false; g.order()];
        for &x in &elements {
            if x >= g.order() {
                return Err(Error::NotASubgroup);
            }
            inside[x] = true;
        }
        if !inside[GroupTable::IDENTITY] {
            return Err(Error::NotASubgroup);
        }
        for &a in &elements {
            for &b in &elements {
                if !inside[g.mul(a, b)] {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        let generator = elements.iter().copied().find(|&x| g.elem_order(x) == elements.len());
        Ok(Subgroup { elements, generator })
    }

    pub fn generated_by(g: &GroupTable, gens: &[usize]) -> Self {
        Self::from_elements(g, g.closure(gens)).expect("closure is a subgroup")
    }

    pub fn trivial() -> Self {
        Subgroup { elements: vec![GroupTable::IDENTITY], generator: Some(GroupTable::IDENTITY) }
    }

    pub fn whole(g: &GroupTable) -> Self {
        Self::generated_by(g, g.generators())
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.generator.is_some()
    }

    /// Minimal-index generator, when cyclic.
    pub fn generator(&self) -> Option<usize> {
        self.generator
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `x^-1 H x`
    pub fn conjugate(&self, g: &GroupTable, x: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&h| g.conj(h, x)).collect();
        elements.sort_unstable();
        let generator = self.generator.map(|_| {
            elements.iter().copied().find(|&y| g.elem_order(y) == elements.len()).unwrap()
        });
        Subgroup { elements, generator }
    }

    fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    pub fn is_normal_in(&self, g: &GroupTable, h: &Subgroup) -> bool {
        let mask = self.mask(g.order());
        self.is_subset_of(h) && h.elements.iter().all(|&y| self.elements.iter().all(|&k| mask[g.conj(k, y)]))
    }
}

/// Cyclic subgroups of `G` grouped into conjugacy classes.
#[derive(Debug, Clone, Serialize)]
pub struct CyclicClassData {
    pub classes: Vec<CyclicClass>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CyclicClass {
    pub representative: Subgroup,
    /// The distinct conjugates, sorted, including the representative.
    pub conjugates: Vec<Subgroup>,
    pub normalizer_order: usize,
    /// Right transversal `{g_1, ..., g_m}`: the cosets `C g_k` partition `G`.
    pub transversal: Vec<usize>,
    pub overgroups: Vec<Overgroup>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Overgroup {
    pub subgroup: Subgroup,
    /// Minimal-index generator of the overgroup.
    pub generator: usize,
    /// `[C* : C]`
    pub index: usize,
}

impl CyclicClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// All cyclic subgroups, sorted by (order, element set). Each carries its
/// minimal-index generator.
pub fn cyclic_subgroups(g: &GroupTable) -> Vec<Subgroup> {
    let mut found: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    for x in 0..g.order() {
        let mut elements = Vec::with_capacity(g.elem_order(x));
        let mut p = GroupTable::IDENTITY;
        for _ in 0..g.elem_order(x) {
            elements.push(p);
            p = g.mul(p, x);
        }
        elements.sort_unstable();
        found.entry((elements.len(), elements)).or_insert(x);
    }
    found
        .into_iter()
        .map(|((_, elements), generator)| Subgroup { elements, generator: Some(generator) })
        .collect()
}

/// Conjugacy classes of cyclic subgroups. Classes are ordered by the
/// (order, element set) of their representative, which is the
/// lexicographically least member of the class.
pub fn cyclic_subgroup_classes(g: &GroupTable, _cc: &ConjClassData) -> CyclicClassData {
    let all = cyclic_subgroups(g);
    let mut assigned = vec![false; all.len()];
    let position: BTreeMap<&[usize], usize> =
        all.iter().enumerate().map(|(i, s)| (s.elements.as_slice(), i)).collect();

    let mut classes = Vec::new();
    for i in 0..all.len() {
        if assigned[i] {
            continue;
        }
        let rep = all[i].clone();
        let mut conj_idx = Vec::new();
        for x in 0..g.order() {
            let c = rep.conjugate(g, x);
            let j = position[c.elements.as_slice()];
            if !assigned[j] {
                assigned[j] = true;
                conj_idx.push(j);
            }
        }
        conj_idx.sort_unstable();
        let conjugates: Vec<Subgroup> = conj_idx.iter().map(|&j| all[j].clone()).collect();
        let normalizer_order = g.order() / conjugates.len();
        debug_assert_eq!(normalizer_order, normalizer_order_of(g, &rep));
        let transversal = right_transversal(g, &rep);
        let overgroups = all
            .iter()
            .filter(|s| rep.is_subset_of(s))
            .map(|s| Overgroup {
                subgroup: s.clone(),
                generator: s.generator.unwrap(),
                index: s.order() / rep.order(),
            })
            .collect();
        classes.push(CyclicClass { representative: rep, conjugates, normalizer_order, transversal, overgroups });
    }
    CyclicClassData { classes }
}

/// Greedy right transversal: scan indices upward, taking each element not
/// yet covered by a coset `C g`.
pub fn right_transversal(g: &GroupTable, c: &Subgroup) -> Vec<usize> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::with_capacity(g.order() / c.order());
    for x in 0..g.order() {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for &h in c.elements() {
            covered[g.mul(h, x)] = true;
        }
    }
    reps
}

fn normalizer_order_of(g: &GroupTable, h: &Subgroup) -> usize {
    let mask = h.mask(g.order());
    (0..g.order()).filter(|&x| h.elements.iter().all(|&y| mask[g.conj(y, x)])).count()
}

/// Number of `x` with `x^-1 H x = H`.
pub fn normalizer_order(g: &GroupTable, h: &Subgroup) -> Result<usize> {
    Subgroup::from_elements(g, h.elements.clone())?;
    Ok(normalizer_order_of(g, h))
}

pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::MobiusZero);
    }
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Normal subgroups `M` of `H` with `K < M` that are minimal with this
/// property, i.e. the preimages of the minimal normal subgroups of `H/K`.
/// Sorted by element set.
pub fn minimal_normal_subgroups(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Result<Vec<Subgroup>> {
    if !k.is_normal_in(g, h) {
        return Err(Error::NotNormal);
    }
    // Every normal M > K is a union of normal closures of K + {x}, x in M \ K,
    // so the minimal ones are among those closures.
    let mut closures: Vec<Subgroup> = Vec::new();
    for &x in h.elements() {
        if k.contains(x) {
            continue;
        }
        let mut gens: Vec<usize> = k.elements().to_vec();
        gens.extend(h.elements().iter().map(|&y| g.conj(x, y)));
        gens.sort_unstable();
        gens.dedup();
        let m = Subgroup::generated_by(g, &gens);
        if !closures.contains(&m) {
            closures.push(m);
        }
    }
    let mut minimal: Vec<Subgroup> = closures
        .iter()
        .filter(|m| !closures.iter().any(|o| o.order() < m.order() && o.is_subset_of(m)))
        .cloned()
        .collect();
    minimal.sort_by(|a, b| a.elements.cmp(&b.elements));
    Ok(minimal)
}
