//! Irreducible complex characters via Dixon's modular method, induced
//! trivial characters, and rational classes (Galois orbits of characters).
//!
//! Characters are found as common eigenvectors of the class matrices over
//! `F_p` with `p = 1 (mod exp G)`. Each eigenvector gives the central
//! character `omega(K) = |K| chi(g_K) / chi(1)` mod `p`. The degree follows
//! from `chi(1)^2 * sum_K omega(K) omega(K^-1) / |K| = |G|`, and the exact
//! value `chi(g) = sum_k m_k eps^k` (`eps` a primitive `o(g)`-th root) is
//! recovered from the discrete Fourier transform over the powers of `g`,
//! since every multiplicity `m_k` lies in `[0, chi(1)]` and `chi(1) < p`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycloBasis, CyclotomicInt};
use crate::error::{Error, Result};
use crate::group::{ConjClassData, GroupTable};
use crate::subgroups::Subgroup;
use crate::Rational;

/// A function on conjugacy classes with values in Z[zeta_e].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ClassFunction {
    pub values: Vec<CyclotomicInt>,
}

impl ClassFunction {
    pub fn from_integers(basis: &Arc<CycloBasis>, values: &[BigInt]) -> Self {
        ClassFunction { values: values.iter().map(|v| CyclotomicInt::from_int(basis, v.clone())).collect() }
    }

    /// Value at the identity class, when it is an integer.
    pub fn degree(&self) -> Option<BigInt> {
        self.values[0].as_integer()
    }

    /// Integer values, or the first class where the value is not an integer.
    pub fn integer_values(&self) -> std::result::Result<Vec<BigInt>, usize> {
        self.values.iter().enumerate().map(|(c, v)| v.as_integer().ok_or(c)).collect()
    }

    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        Ok(ClassFunction { values: self.values.iter().map(|v| v.galois_apply(k)).collect::<Result<_>>()? })
    }
}

/// `(1/|G|) sum_g a(g) conj(b(g))`, when rational.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction, cc: &ConjClassData) -> Option<Rational> {
    let n: usize = cc.sizes().iter().sum();
    let basis = a.values[0].basis();
    let mut acc = CyclotomicInt::zero(basis);
    for c in 0..cc.num_classes() {
        let term = &a.values[c] * &b.values[c].conj();
        acc = &acc + &(&term * &CyclotomicInt::from_int(basis, cc.size(c)));
    }
    acc.as_rational().map(|r| r / Rational::from_integer(n.into()))
}

/// The irreducible characters of a group.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    /// Rows sorted by degree, then lexicographically by values.
    pub rows: Vec<ClassFunction>,
    #[serde(skip)]
    pub basis: Arc<CycloBasis>,
    /// The prime used by the Dixon engine; `None` for a supplied table.
    pub prime: Option<u64>,
    #[serde(skip)]
    pub classes: ConjClassData,
}

impl CharacterTable {
    pub fn conductor(&self) -> usize {
        self.basis.conductor()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Builds a table from root-of-unity multiplicities: `rows[i][c][j]` is
    /// the multiplicity of `zeta_e^j` in the value of character `i` at class
    /// `c`, where `e` must divide the group exponent. The table is checked
    /// with [`validate`](Self::validate) before it is returned.
    pub fn from_root_multiplicities(
        g: &GroupTable,
        cc: &ConjClassData,
        e: usize,
        rows: &[Vec<Vec<i64>>],
    ) -> Result<Self> {
        let exp = g.exponent();
        if e == 0 || !exp.is_multiple_of(e) {
            return Err(Error::InvalidCharacterTable(format!("conductor {e} does not divide the exponent {exp}")));
        }
        let basis = CycloBasis::new(exp);
        let scale = exp / e;
        let mut out = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cc.num_classes() {
                return Err(Error::InvalidCharacterTable(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    cc.num_classes()
                )));
            }
            let mut values = Vec::with_capacity(row.len());
            for mult in row {
                if mult.len() != e {
                    return Err(Error::InvalidCharacterTable(format!("row {i}: multiplicity vectors need length {e}")));
                }
                let mut full = vec![0i64; exp];
                for (j, &m) in mult.iter().enumerate() {
                    full[j * scale] = m;
                }
                values.push(CyclotomicInt::from_root_powers(&basis, &full));
            }
            out.push(ClassFunction { values });
        }
        out.sort_by(row_order);
        let table = CharacterTable { rows: out, basis, prime: None, classes: cc.clone() };
        table.validate(g)?;
        Ok(table)
    }

    /// Row count, positive degrees, `sum chi(1)^2 = |G|`, exact row and
    /// column orthogonality, and closure of the row set under Galois action.
    pub fn validate(&self, g: &GroupTable) -> Result<()> {
        let cc = &self.classes;
        let h = cc.num_classes();
        let n = g.order();
        let bad = |m: String| Err(Error::InvalidCharacterTable(m));
        if self.rows.len() != h {
            return bad(format!("{} rows for {h} classes", self.rows.len()));
        }
        let mut degree_squares = BigInt::zero();
        for (i, row) in self.rows.iter().enumerate() {
            if row.values.len() != h {
                return bad(format!("row {i} has the wrong length"));
            }
            match row.degree() {
                Some(d) if d > BigInt::zero() => degree_squares += &d * &d,
                _ => return bad(format!("row {i} has no positive integer degree")),
            }
        }
        if degree_squares != BigInt::from(n) {
            return bad(format!("sum of squared degrees is {degree_squares}, expected {n}"));
        }
        for i in 0..h {
            for j in i..h {
                let expected = Rational::from_integer(BigInt::from(u8::from(i == j)));
                if inner_product(&self.rows[i], &self.rows[j], cc) != Some(expected) {
                    return bad(format!("rows {i} and {j} are not orthonormal"));
                }
            }
        }
        for k in 0..h {
            for l in k..h {
                let mut acc = CyclotomicInt::zero(&self.basis);
                for row in &self.rows {
                    acc = &acc + &(&row.values[k] * &row.values[l].conj());
                }
                let expected = if k == l { cc.centralizer_order(k) } else { 0 };
                if acc != CyclotomicInt::from_int(&self.basis, expected) {
                    return bad(format!("columns {k} and {l} are not orthogonal"));
                }
            }
        }
        let index: HashMap<&ClassFunction, usize> = self.rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
        for k in units(self.conductor()) {
            for row in &self.rows {
                if !index.contains_key(&row.galois_apply(k)?) {
                    return bad(format!("row set is not closed under zeta -> zeta^{k}"));
                }
            }
        }
        Ok(())
    }
}

impl std::hash::Hash for ClassFunction {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

fn row_order(a: &ClassFunction, b: &ClassFunction) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.values.cmp(&b.values))
}

fn units(e: usize) -> impl Iterator<Item = i64> {
    (1..=e as i64).filter(move |k| k.gcd(&(e as i64)) == 1)
}

// ---------------------------------------------------------------------------
// arithmetic mod p

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        k >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p = 1 (mod e)` with `p > 2 * ceil(sqrt(n))`.
pub fn dixon_prime(n: usize, e: usize) -> u64 {
    let root = {
        let r = (n as u64).sqrt();
        if r * r == n as u64 {
            r
        } else {
            r + 1
        }
    };
    let bound = 2 * root;
    let e = e as u64;
    let mut p = e + 1;
    while p <= bound || !is_prime(p) {
        p += e;
    }
    p
}

/// Smallest element of multiplicative order exactly `e` in `F_p`.
pub fn primitive_root_of_unity(e: usize, p: u64) -> u64 {
    let e = e as u64;
    assert_eq!((p - 1) % e, 0);
    let qs = prime_factors(e);
    (1..p)
        .find(|&x| pow_mod(x, e, p) == 1 && qs.iter().all(|&q| pow_mod(x, e / q, p) != 1))
        .expect("F_p^* is cyclic")
}

/// Row echelon basis with pivot columns; rows are normalized at the pivot.
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_rows(mut rows: Vec<Vec<u64>>, p: u64) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..width {
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
            rows.swap(r, pr);
            let inv = inv_mod(rows[r][col], p);
            for x in rows[r].iter_mut() {
                *x = mul_mod(*x, inv, p);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for j in 0..width {
                        let sub = mul_mod(f, rows[r][j], p);
                        rows[i][j] = (rows[i][j] + p - sub) % p;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        Subspace { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates of a vector known to lie in the span.
    fn coordinates(&self, v: &[u64]) -> Vec<u64> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }
}

/// Null space of a square matrix over F_p.
fn kernel(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..d {
        let Some(pr) = (r..d).find(|&i| m[i][col] != 0) else { continue };
        m.swap(r, pr);
        let inv = inv_mod(m[r][col], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..d {
            if i != r && m[i][col] != 0 {
                let f = m[i][col];
                for j in 0..d {
                    let sub = mul_mod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; d];
            v[f] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[row][f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial over F_p via reduction to Hessenberg form,
/// coefficients lowest degree first.
fn charpoly(mut a: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = a.len();
    let sub = |x: u64, y: u64| (x + p - y) % p;
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| a[i][m - 1] != 0) else { continue };
        if i != m {
            a.swap(i, m);
            for row in a.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(a[m][m - 1], p);
        for i in (m + 1)..n {
            let f = mul_mod(a[i][m - 1], inv, p);
            if f == 0 {
                continue;
            }
            for j in 0..n {
                let t = mul_mod(f, a[m][j], p);
                a[i][j] = sub(a[i][j], t);
            }
            for row in a.iter_mut() {
                let t = mul_mod(f, row[i], p);
                row[m] = (row[m] + t) % p;
            }
        }
    }
    // recurrence on leading principal minors of the Hessenberg matrix
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1} = (x - a_kk) p_k - sum_{i<k} a_ik * (prod_{j=i+1}^{k} a_{j,j-1}) p_i
        let mut next = vec![0u64; k + 2];
        for (d, &c) in polys[k].iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = sub(next[d], mul_mod(a[k][k], c, p));
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul_mod(prod, a[i + 1][i], p);
            let f = mul_mod(a[i][k], prod, p);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], mul_mod(f, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn roots_mod_p(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (mul_mod(acc, x, p) + c) % p) == 0)
        .collect()
}

/// Class matrix `M_j` with `M_j[k][l] = #{x in K_j : x^-1 z_l in K_k}`, so
/// that the central character vector satisfies `M_j omega = omega_j omega`.
fn class_matrix(g: &GroupTable, cc: &ConjClassData, j: usize, p: u64) -> Vec<Vec<u64>> {
    let h = cc.num_classes();
    let mut m = vec![vec![0u64; h]; h];
    for x in cc.members(j) {
        let xi = g.inv(x);
        for l in 0..h {
            let k = cc.class_of(g.mul(xi, cc.rep(l)));
            m[k][l] += 1;
        }
    }
    for row in m.iter_mut() {
        for v in row.iter_mut() {
            *v %= p;
        }
    }
    m
}

/// Computes the irreducible characters with Dixon's method.
pub fn character_table(g: &GroupTable, cc: &ConjClassData) -> Result<CharacterTable> {
    let n = g.order();
    let h = cc.num_classes();
    let e = g.exponent();
    let p = dixon_prime(n, e);

    // split F_p^h into common eigenspaces of all class matrices
    let identity_rows: Vec<Vec<u64>> = (0..h).map(|i| (0..h).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![Subspace::from_rows(identity_rows, p)];
    for j in 1..h {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let m = class_matrix(g, cc, j, p);
        let mut next = Vec::new();
        for space in spaces {
            if space.dim() == 1 {
                next.push(space);
                continue;
            }
            let d = space.dim();
            let images: Vec<Vec<u64>> = space
                .rows
                .iter()
                .map(|b| {
                    let img: Vec<u64> =
                        (0..h).map(|k| (0..h).fold(0, |acc, l| (acc + mul_mod(m[k][l], b[l], p)) % p)).collect();
                    space.coordinates(&img)
                })
                .collect();
            // restricted[i][k] = coordinate i of M b_k
            let restricted: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|k| images[k][i]).collect()).collect();
            let mut total = 0;
            for lambda in roots_mod_p(&charpoly(restricted.clone(), p), p) {
                let shifted: Vec<Vec<u64>> = restricted
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter().enumerate().map(|(k, &v)| if i == k { (v + p - lambda) % p } else { v }).collect()
                    })
                    .collect();
                let vectors: Vec<Vec<u64>> = kernel(shifted, p)
                    .into_iter()
                    .map(|c| {
                        (0..h)
                            .map(|l| (0..d).fold(0, |acc, i| (acc + mul_mod(c[i], space.rows[i][l], p)) % p))
                            .collect()
                    })
                    .collect();
                total += vectors.len();
                next.push(Subspace::from_rows(vectors, p));
            }
            if total != d {
                return Err(Error::Dixon(format!("class matrix {j} is not diagonalizable over F_{p}")));
            }
        }
        spaces = next;
    }
    if spaces.len() != h || spaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::Dixon(format!("could not split the class algebra into {h} eigenspaces")));
    }

    let basis = CycloBasis::new(e);
    let z = primitive_root_of_unity(e, p);
    let mut rows = Vec::with_capacity(h);
    for space in &spaces {
        let v = &space.rows[0];
        if v[0] == 0 {
            return Err(Error::Dixon("eigenvector vanishes at the identity class".into()));
        }
        let norm = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, norm, p)).collect();

        let mut s = 0u64;
        for l in 0..h {
            let t = mul_mod(omega[l], omega[cc.inverse_class(l)], p);
            s = (s + mul_mod(t, inv_mod(cc.size(l) as u64 % p, p), p)) % p;
        }
        let target = mul_mod(n as u64 % p, inv_mod(s, p), p);
        let degree = (1..=(n as u64).sqrt())
            .find(|&d| (n as u64).is_multiple_of(d) && mul_mod(d, d, p) == target)
            .ok_or_else(|| Error::Dixon("no admissible degree".into()))?;

        let chi_mod: Vec<u64> = (0..h)
            .map(|l| mul_mod(mul_mod(omega[l], degree, p), inv_mod(cc.size(l) as u64 % p, p), p))
            .collect();

        let mut values = Vec::with_capacity(h);
        for l in 0..h {
            let o = g.elem_order(cc.rep(l));
            let eps = pow_mod(z, (e / o) as u64, p);
            let eps_inv = inv_mod(eps, p);
            let o_inv = inv_mod(o as u64 % p, p);
            let mut mult = vec![0i64; e];
            for k in 0..o {
                let step = pow_mod(eps_inv, k as u64, p);
                let mut acc = 0u64;
                let mut w = 1u64;
                for i in 0..o {
                    acc = (acc + mul_mod(chi_mod[cc.power_class(l, i as i64)], w, p)) % p;
                    w = mul_mod(w, step, p);
                }
                let m = mul_mod(acc, o_inv, p);
                if m > degree {
                    return Err(Error::Dixon(format!("multiplicity {m} exceeds degree {degree}")));
                }
                mult[k * (e / o)] = m as i64;
            }
            values.push(CyclotomicInt::from_root_powers(&basis, &mult));
        }
        rows.push(ClassFunction { values });
    }
    rows.sort_by(row_order);
    let table = CharacterTable { rows, basis, prime: Some(p), classes: cc.clone() };
    table.validate(g)?;
    Ok(table)
}

/// `1_C^G` from the closed form `[G:C] |K ∩ C| / |K|`.
pub fn induced_trivial(
    g: &GroupTable,
    cc: &ConjClassData,
    basis: &Arc<CycloBasis>,
    c: &Subgroup,
) -> Result<ClassFunction> {
    let c = Subgroup::from_elements(g, c.elements().to_vec())?;
    let index = g.order() / c.order();
    let mut meet = vec![0usize; cc.num_classes()];
    for &x in c.elements() {
        meet[cc.class_of(x)] += 1;
    }
    let values: Vec<BigInt> = (0..cc.num_classes()).map(|k| BigInt::from(index * meet[k] / cc.size(k))).collect();
    debug_assert_eq!(values, induced_trivial_by_definition(g, cc, &c));
    Ok(ClassFunction::from_integers(basis, &values))
}

/// `1_C^G(g) = (1/|C|) #{y in G : y^-1 g y in C}`, evaluated literally.
pub fn induced_trivial_by_definition(g: &GroupTable, cc: &ConjClassData, c: &Subgroup) -> Vec<BigInt> {
    (0..cc.num_classes())
        .map(|k| {
            let x = cc.rep(k);
            let hits = (0..g.order()).filter(|&y| c.contains(g.conj(x, y))).count();
            BigInt::from(hits / c.order())
        })
        .collect()
}

/// A Galois orbit of irreducible characters with its orbit-sum character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalClass {
    /// Row indices into the character table, increasing.
    pub members: Vec<usize>,
    pub orbit_size: usize,
    /// `psi = sum over the orbit`, an integer per conjugacy class.
    #[serde(with = "bigint_strings")]
    pub psi: Vec<BigInt>,
    pub degree: u64,
}

impl RationalClass {
    pub fn psi_function(&self, basis: &Arc<CycloBasis>) -> ClassFunction {
        ClassFunction::from_integers(basis, &self.psi)
    }
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

/// Partitions the rows into orbits under `zeta -> zeta^k`, `k` a unit mod e.
/// Orbits are ordered by their smallest row index.
pub fn galois_orbits(t: &CharacterTable) -> Result<Vec<RationalClass>> {
    let index: HashMap<&ClassFunction, usize> = t.rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut orbit_of = vec![usize::MAX; t.rows.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..t.rows.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        for k in units(t.conductor()) {
            let image = t.rows[i].galois_apply(k)?;
            let j = *index.get(&image).ok_or_else(|| {
                Error::InvalidCharacterTable(format!("row {i} has no image under zeta -> zeta^{k}"))
            })?;
            if orbit_of[j] == usize::MAX {
                orbit_of[j] = orbits.len();
                members.push(j);
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
        .into_iter()
        .map(|members| {
            let mut sum = ClassFunction { values: vec![CyclotomicInt::zero(&t.basis); t.classes.num_classes()] };
            for &m in &members {
                sum.values = sum.values.iter().zip(&t.rows[m].values).map(|(a, b)| a + b).collect();
            }
            let psi = sum.integer_values().map_err(|class| Error::NotRational { class })?;
            let degree = t.rows[members[0]].degree().and_then(|d| d.to_u64()).expect("validated degree");
            Ok(RationalClass { orbit_size: members.len(), members, psi, degree })
        })
        .collect()
}
