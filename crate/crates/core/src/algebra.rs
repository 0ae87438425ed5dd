//! The rational group algebra QG with dense coefficient vectors, and the
//! structural elements built from subgroups: averages, `epsilon(H, K)` and
//! the sum of the distinct conjugates `e(G, H, K)`.
//!
//! Conjugation follows `a^x = x^-1 a x` throughout.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroups::{minimal_normal_subgroups, Subgroup};
use crate::Rational;

#[derive(Clone)]
pub struct AlgebraElement<'g> {
    group: &'g GroupTable,
    coeffs: Vec<Rational>,
}

impl<'g> AlgebraElement<'g> {
    pub fn zero(group: &'g GroupTable) -> Self {
        AlgebraElement { group, coeffs: vec![Rational::zero(); group.order()] }
    }

    pub fn one(group: &'g GroupTable) -> Self {
        Self::basis(group, GroupTable::IDENTITY)
    }

    /// The group element `x` as an algebra element.
    pub fn basis(group: &'g GroupTable, x: usize) -> Self {
        let mut a = Self::zero(group);
        a.coeffs[x] = Rational::one();
        a
    }

    pub fn from_coeffs(group: &'g GroupTable, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), group.order());
        AlgebraElement { group, coeffs }
    }

    pub fn group(&self) -> &'g GroupTable {
        self.group
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, x: usize) -> &Rational {
        &self.coeffs[x]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        AlgebraElement { group: self.group, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.group, other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(AlgebraElement {
            group: self.group,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// `(ab)_z = sum_{xy = z} a_x b_y`. Both operands are cleared to integer
    /// vectors first so the convolution runs on integers.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let (na, da) = integer_form(&self.coeffs);
        let (nb, db) = integer_form(&other.coeffs);
        let lhs: Vec<(usize, &BigInt)> = na.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let rhs: Vec<(usize, &BigInt)> = nb.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut acc = vec![BigInt::zero(); self.group.order()];
        for &(x, a) in &lhs {
            for &(y, b) in &rhs {
                acc[self.group.mul(x, y)] += a * b;
            }
        }
        let den = da * db;
        let coeffs = acc.into_iter().map(|c| Rational::new(c, den.clone())).collect();
        Ok(AlgebraElement { group: self.group, coeffs })
    }

    /// `x^-1 a x`: the coefficient of `z` is the coefficient of `x z x^-1` in `a`.
    pub fn conjugate(&self, x: usize) -> Self {
        let g = self.group;
        let xi = g.inv(x);
        let coeffs = (0..g.order()).map(|z| self.coeffs[g.mul(g.mul(x, z), xi)].clone()).collect();
        AlgebraElement { group: g, coeffs }
    }

    pub fn is_idempotent(&self) -> bool {
        self.multiply(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Invariance under conjugation by a generating set of the group.
    pub fn is_central(&self) -> bool {
        self.group.generators().iter().all(|&x| self.conjugate(x) == *self)
    }

    /// `|G|` times the coefficient of the identity, the Q-dimension of `a QG`
    /// when `a` is a central idempotent.
    pub fn trace_dimension(&self) -> Rational {
        &self.coeffs[GroupTable::IDENTITY] * Rational::from_integer(self.group.order().into())
    }
}

fn integer_form(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

impl PartialEq for AlgebraElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.group.order() == other.group.order() && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement<'_> {}

impl PartialOrd for AlgebraElement<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraElement<'_> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl<'g> Add for &AlgebraElement<'g> {
    type Output = AlgebraElement<'g>;
    fn add(self, rhs: Self) -> AlgebraElement<'g> {
        self.try_add(rhs).expect("group mismatch")
    }
}

impl<'g> Sub for &AlgebraElement<'g> {
    type Output = AlgebraElement<'g>;
    fn sub(self, rhs: Self) -> AlgebraElement<'g> {
        self.same_group(rhs).expect("group mismatch");
        AlgebraElement { group: self.group, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'g> Neg for &AlgebraElement<'g> {
    type Output = AlgebraElement<'g>;
    fn neg(self) -> AlgebraElement<'g> {
        AlgebraElement { group: self.group, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl<'g> Mul for &AlgebraElement<'g> {
    type Output = AlgebraElement<'g>;
    fn mul(self, rhs: Self) -> AlgebraElement<'g> {
        self.multiply(rhs).expect("group mismatch")
    }
}

impl fmt::Debug for AlgebraElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(x, c)| format!("{c}*[{}]", self.group.label(x)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Serialize for AlgebraElement<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            elem: usize,
            coeff: String,
        }
        let nonzero: Vec<(usize, &Rational)> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut seq = serializer.serialize_seq(Some(nonzero.len()))?;
        for (elem, c) in nonzero {
            seq.serialize_element(&Term { elem, coeff: c.to_string() })?;
        }
        seq.end()
    }
}

/// `(1/|H|) sum_{h in H} h`
pub fn subgroup_average<'g>(g: &'g GroupTable, h: &Subgroup) -> AlgebraElement<'g> {
    let mut a = AlgebraElement::zero(g);
    let w = Rational::new(BigInt::one(), h.order().into());
    for &x in h.elements() {
        a.coeffs[x] = w.clone();
    }
    a
}

/// `prod_{M} (K~ - M~)` over the minimal normal subgroups `M/K` of `H/K`
/// in sorted order, or `H~` when `H = K`.
pub fn epsilon<'g>(g: &'g GroupTable, h: &Subgroup, k: &Subgroup) -> Result<AlgebraElement<'g>> {
    if !k.is_normal_in(g, h) {
        return Err(Error::NotNormal);
    }
    if h == k {
        return Ok(subgroup_average(g, h));
    }
    let k_avg = subgroup_average(g, k);
    let mut acc = AlgebraElement::one(g);
    for m in minimal_normal_subgroups(g, h, k)? {
        let factor = &k_avg - &subgroup_average(g, &m);
        acc = acc.multiply(&factor)?;
    }
    Ok(acc)
}

/// Sum of the distinct `G`-conjugates of `epsilon(H, K)`.
pub fn e_sum_of_conjugates<'g>(g: &'g GroupTable, h: &Subgroup, k: &Subgroup) -> Result<AlgebraElement<'g>> {
    let eps = epsilon(g, h, k)?;
    let mut seen: HashSet<Vec<Rational>> = HashSet::new();
    let mut acc = AlgebraElement::zero(g);
    for x in 0..g.order() {
        let c = eps.conjugate(x);
        if seen.insert(c.coeffs.clone()) {
            acc = &acc + &c;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_group, Family, GroupSpec};
    use crate::subgroups::cyclic_subgroups;
    use proptest::prelude::*;

    fn named(f: Family, n: usize) -> GroupTable {
        enumerate_group(&GroupSpec::named(f, n), 512).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn elem<'g>(g: &'g GroupTable, c: &[(usize, Rational)]) -> AlgebraElement<'g> {
        let mut a = AlgebraElement::zero(g);
        for (x, r) in c {
            a.coeffs[*x] = r.clone();
        }
        a
    }

    #[test]
    fn unit_and_averages() {
        let g = named(Family::S, 3);
        let a = elem(&g, &[(1, q(3, 2)), (4, q(-1, 7))]);
        assert_eq!(&a * &AlgebraElement::one(&g), a);
        assert_eq!(&AlgebraElement::one(&g) * &a, a);
        let avg = subgroup_average(&g, &Subgroup::whole(&g));
        assert_eq!(&avg * &avg, avg);
        assert!(avg.is_central());
        assert_eq!(subgroup_average(&g, &Subgroup::trivial()), AlgebraElement::one(&g));
    }

    #[test]
    fn cyclic2_sign_idempotent() {
        let g = named(Family::C, 2);
        let a = elem(&g, &[(0, q(1, 2)), (1, q(-1, 2))]);
        assert_eq!(&a * &a, a);
        assert_eq!(subgroup_average(&g, &Subgroup::whole(&g)), elem(&g, &[(0, q(1, 2)), (1, q(1, 2))]));
        let c4 = named(Family::C, 4);
        let h = Subgroup::generated_by(&c4, &[2]);
        assert_eq!(subgroup_average(&c4, &h), elem(&c4, &[(0, q(1, 2)), (2, q(1, 2))]));
    }

    #[test]
    fn conjugation() {
        let g = named(Family::S, 3);
        let a = elem(&g, &[(2, q(5, 3))]);
        assert_eq!(a.conjugate(0), a);
        let avg = subgroup_average(&g, &Subgroup::whole(&g));
        for x in 0..6 {
            assert_eq!(avg.conjugate(x), avg);
        }
        let t = (0..6).find(|&x| g.elem_order(x) == 2).unwrap();
        let r = (0..6).find(|&x| g.elem_order(x) == 3).unwrap();
        let h = Subgroup::generated_by(&g, &[t]);
        let conj = subgroup_average(&g, &h).conjugate(r);
        let expected = subgroup_average(&g, &Subgroup::generated_by(&g, &[g.conj(t, r)]));
        assert_eq!(conj, expected);
        assert_ne!(conj, subgroup_average(&g, &h));
        // coefficient convention: a^x has coefficient a_{x z x^-1} at z
        let b = AlgebraElement::basis(&g, t);
        assert_eq!(b.conjugate(r), AlgebraElement::basis(&g, g.conj(t, r)));
    }

    #[test]
    fn epsilon_examples() {
        let g = named(Family::S, 3);
        let t = (0..6).find(|&x| g.elem_order(x) == 2).unwrap();
        let h = Subgroup::generated_by(&g, &[t]);
        assert_eq!(epsilon(&g, &h, &h).unwrap(), subgroup_average(&g, &h));

        let c2 = named(Family::C, 2);
        let eps = epsilon(&c2, &Subgroup::whole(&c2), &Subgroup::trivial()).unwrap();
        assert_eq!(eps, elem(&c2, &[(0, q(1, 2)), (1, q(-1, 2))]));

        let c4 = named(Family::C, 4);
        let eps = epsilon(&c4, &Subgroup::whole(&c4), &Subgroup::trivial()).unwrap();
        assert_eq!(eps, elem(&c4, &[(0, q(1, 2)), (2, q(-1, 2))]));

        assert_eq!(epsilon(&g, &Subgroup::whole(&g), &h), Err(Error::NotNormal));
    }

    #[test]
    fn epsilon_annihilates_minimal_averages() {
        for g in [named(Family::C, 12), named(Family::S, 4), named(Family::D, 6)] {
            let whole = Subgroup::whole(&g);
            let eps = epsilon(&g, &whole, &Subgroup::trivial()).unwrap();
            for m in minimal_normal_subgroups(&g, &whole, &Subgroup::trivial()).unwrap() {
                assert!((&eps * &subgroup_average(&g, &m)).is_zero());
            }
        }
    }

    #[test]
    fn conjugate_sums() {
        let g = named(Family::C, 4);
        let h = Subgroup::generated_by(&g, &[2]);
        assert_eq!(e_sum_of_conjugates(&g, &h, &h).unwrap(), subgroup_average(&g, &h));

        let s3 = named(Family::S, 3);
        let order2: Vec<usize> = (0..6).filter(|&x| s3.elem_order(x) == 2).collect();
        let h = Subgroup::generated_by(&s3, &[order2[0]]);
        let mut expected = AlgebraElement::zero(&s3);
        for &t in &order2 {
            expected = &expected + &subgroup_average(&s3, &Subgroup::generated_by(&s3, &[t]));
        }
        let e = e_sum_of_conjugates(&s3, &h, &h).unwrap();
        assert_eq!(e, expected);
        // e(G, C, C) need not be idempotent
        assert!(!e.is_idempotent());

        let c2 = named(Family::C, 2);
        let e = e_sum_of_conjugates(&c2, &Subgroup::whole(&c2), &Subgroup::trivial()).unwrap();
        assert_eq!(e, elem(&c2, &[(0, q(1, 2)), (1, q(-1, 2))]));
    }

    #[test]
    fn predicates() {
        let g = named(Family::S, 3);
        let z = AlgebraElement::zero(&g);
        assert!(z.is_idempotent() && z.is_central());
        let t = (0..6).find(|&x| g.elem_order(x) == 2).unwrap();
        assert!(!AlgebraElement::basis(&g, t).is_central());
    }

    #[test]
    fn group_mismatch() {
        let a = named(Family::C, 4);
        let b = named(Family::C, 2);
        let x = AlgebraElement::one(&a);
        let y = AlgebraElement::one(&b);
        assert_eq!(x.multiply(&y), Err(Error::GroupMismatch));
    }

    #[test]
    fn averages_of_cyclic_subgroups_are_idempotent() {
        let g = named(Family::A, 5);
        for c in cyclic_subgroups(&g) {
            assert!(subgroup_average(&g, &c).is_idempotent());
        }
    }

    #[test]
    fn serialization() {
        let g = named(Family::C, 3);
        let a = elem(&g, &[(0, q(2, 3)), (2, q(-1, 3))]);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"[{"elem":0,"coeff":"2/3"},{"elem":2,"coeff":"-1/3"}]"#
        );
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(
            a in proptest::collection::vec((-4i64..=4, 1i64..=3), 6),
            b in proptest::collection::vec((-4i64..=4, 1i64..=3), 6),
            c in proptest::collection::vec((-4i64..=4, 1i64..=3), 6),
        ) {
            let g = named(Family::S, 3);
            let mk = |v: &[(i64, i64)]| AlgebraElement::from_coeffs(&g, v.iter().map(|&(n, d)| q(n, d)).collect());
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
