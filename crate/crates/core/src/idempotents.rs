//! Primitive central idempotents of QG.
//!
//! For a rational class with orbit-sum character `psi` and member degree
//! `chi(1)`, the idempotent is computed three ways:
//!
//! * classical: `(chi(1)/|G|) sum_g psi(g^-1) g`, the Galois-descent sum
//!   divided by the orbit size;
//! * orbit sum: `sum_i b_i chi(1) / [G : N_G(C_i)] * e(G, C_i, C_i)`;
//! * transversal: `sum_i b_i chi(1) / [G : C_i] * sum_k C_i~^{g_ik}`.
//!
//! Here `C_1, ..., C_r` represent the conjugacy classes of cyclic subgroups
//! and `b_i` are the Artin coefficients of `psi` with respect to the
//! characters `1_{C_i}^G`. The stabilizer of `C_i~` under conjugation is
//! taken to be the normalizer `N_G(C_i)`.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{e_sum_of_conjugates, subgroup_average, AlgebraElement};
use crate::chartable::{induced_trivial, CharacterTable, ClassFunction, RationalClass};
use crate::cyclotomic::{CycloBasis, CyclotomicInt};
use crate::error::{Error, Result};
use crate::group::{ConjClassData, GroupTable};
use crate::subgroups::{mobius, CyclicClassData};
use crate::Rational;

/// `psi = sum_i d_i 1_{C_i}^G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinDecomposition {
    pub psi: Vec<BigInt>,
    pub d: Vec<Rational>,
}

fn ratio(n: usize, d: usize) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Coefficient in front of the overgroup sum, `[G : N_G(C)] / [G : C] = |C| / |N_G(C)|`.
///
/// The factor counts the conjugates of the subgroup `C`, not the conjugates
/// of its generator: grouping `sum_C a_C 1_C^G` over conjugacy classes of
/// subgroups multiplies each `a_C` by `[G : N_G(C)]`.
fn class_weight(cyc: &CyclicClassData, i: usize) -> Rational {
    let class = &cyc.classes[i];
    ratio(class.representative.order(), class.normalizer_order)
}

/// Artin coefficients `d_i` of a rational-valued character, checked by
/// reconstructing `psi` from the induced trivial characters.
pub fn artin_coefficients(
    g: &GroupTable,
    cc: &ConjClassData,
    cyc: &CyclicClassData,
    psi: &ClassFunction,
) -> Result<ArtinDecomposition> {
    let values = psi.integer_values().map_err(|class| Error::NotRational { class })?;
    for c in 0..cc.num_classes() {
        let o = g.elem_order(cc.rep(c)) as i64;
        for k in (1..o).filter(|k| k.gcd(&o) == 1) {
            if values[cc.power_class(c, k)] != values[c] {
                return Err(Error::NotPowerInvariant { class: c });
            }
        }
    }
    let d: Vec<Rational> = (0..cyc.len())
        .map(|i| {
            let sum: BigInt = cyc.classes[i]
                .overgroups
                .iter()
                .map(|o| BigInt::from(mobius(o.index as u64).unwrap()) * &values[cc.class_of(o.generator)])
                .sum();
            class_weight(cyc, i) * Rational::from_integer(sum)
        })
        .collect();

    let basis = psi.values[0].basis();
    let mut rebuilt = vec![Rational::zero(); cc.num_classes()];
    for (i, di) in d.iter().enumerate() {
        if di.is_zero() {
            continue;
        }
        let ind = induced_trivial(g, cc, basis, &cyc.classes[i].representative)?;
        for (acc, v) in rebuilt.iter_mut().zip(ind.integer_values().expect("induced characters are integral")) {
            *acc += di * Rational::from_integer(v);
        }
    }
    for (class, (r, v)) in rebuilt.iter().zip(&values).enumerate() {
        if *r != Rational::from_integer(v.clone()) {
            return Err(Error::Reconstruction { class });
        }
    }
    Ok(ArtinDecomposition { psi: values, d })
}

/// The coefficients `b_i`, with the orbit sum evaluated directly from the
/// member characters at every generator of each cyclic overgroup. Checked
/// against [`artin_coefficients`] of the orbit-sum character.
pub fn b_coefficients(
    g: &GroupTable,
    cc: &ConjClassData,
    table: &CharacterTable,
    cyc: &CyclicClassData,
    rc: &RationalClass,
) -> Result<Vec<Rational>> {
    let basis = &table.basis;
    let orbit_value = |x: usize| -> Result<BigInt> {
        let class = cc.class_of(x);
        let sum = rc.members.iter().fold(CyclotomicInt::zero(basis), |acc, &m| &acc + &table.rows[m].values[class]);
        sum.as_integer().ok_or(Error::NotRational { class })
    };
    let mut b = Vec::with_capacity(cyc.len());
    for (i, class) in cyc.classes.iter().enumerate() {
        let mut sum = BigInt::zero();
        for o in &class.overgroups {
            let z = o.generator;
            let value = orbit_value(z)?;
            let order = g.elem_order(z) as i64;
            for k in (2..order).filter(|k| k.gcd(&order) == 1) {
                if orbit_value(g.pow(z, k))? != value {
                    return Err(Error::NotPowerInvariant { class: cc.class_of(z) });
                }
            }
            sum += BigInt::from(mobius(o.index as u64)?) * value;
        }
        b.push(class_weight(cyc, i) * Rational::from_integer(sum));
    }
    let artin = artin_coefficients(g, cc, cyc, &rc.psi_function(basis))?;
    if artin.d != b {
        return Err(Error::RouteMismatch { class: rc.members[0], detail: "b differs from the Artin coefficients".into() });
    }
    Ok(b)
}

/// `(chi(1)/|G|) sum_g psi(g^-1) g`.
pub fn eq_classical<'g>(g: &'g GroupTable, cc: &ConjClassData, rc: &RationalClass) -> AlgebraElement<'g> {
    let scale = ratio(rc.degree as usize, g.order());
    let coeffs = (0..g.order())
        .map(|x| &scale * Rational::from_integer(rc.psi[cc.class_of(g.inv(x))].clone()))
        .collect();
    AlgebraElement::from_coeffs(g, coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Scalars `b chi(1) / [G : N_G(C)]` times the distinct-conjugate sums `e(G, C, C)`.
    OrbitSum,
    /// Scalars `b chi(1) / [G : C]` times `sum_k C~^{g_k}` over a right transversal.
    Transversal,
}

pub fn eq_via_cyclic<'g>(
    g: &'g GroupTable,
    cyc: &CyclicClassData,
    rc: &RationalClass,
    b: &[Rational],
    route: Route,
) -> Result<AlgebraElement<'g>> {
    let n = g.order();
    let mut acc = AlgebraElement::zero(g);
    for (class, bi) in cyc.classes.iter().zip(b) {
        if bi.is_zero() {
            continue;
        }
        let c = &class.representative;
        let (scale, term) = match route {
            Route::OrbitSum => (ratio(class.normalizer_order, n), e_sum_of_conjugates(g, c, c)?),
            Route::Transversal => {
                let avg = subgroup_average(g, c);
                let mut sum = AlgebraElement::zero(g);
                for &t in &class.transversal {
                    sum = &sum + &avg.conjugate(t);
                }
                (ratio(c.order(), n), sum)
            }
        };
        let factor = bi * Rational::from_integer(rc.degree.into()) * scale;
        acc = &acc + &term.scale(&factor);
    }
    Ok(acc)
}

/// Class indices `i` for which `e(G, C_i, C_i)` is not idempotent.
pub fn non_idempotent_orbit_sums(g: &GroupTable, cyc: &CyclicClassData) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, class) in cyc.classes.iter().enumerate() {
        let c = &class.representative;
        if !e_sum_of_conjugates(g, c, c)?.is_idempotent() {
            out.push(i);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Idempotency, centrality and the sum to one.
    Fast,
    /// Adds pairwise orthogonality, route equality and Artin reconstruction.
    Full,
}

#[derive(Debug, Clone)]
pub struct IdempotentRecord<'g> {
    pub class: RationalClass,
    pub b: Vec<Rational>,
    pub element: AlgebraElement<'g>,
    pub dimension: BigInt,
    pub idempotent: bool,
    pub central: bool,
    /// `None` at [`Level::Fast`].
    pub routes_agree: Option<bool>,
    pub dimension_matches: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub classical: f64,
    pub orbit_sum: f64,
    pub transversal: f64,
    pub verification: f64,
}

#[derive(Debug, Clone)]
pub struct DecompositionReport<'g> {
    pub records: Vec<IdempotentRecord<'g>>,
    pub sum_to_one: bool,
    pub pairwise_orthogonal: Option<bool>,
    pub routes_agree: Option<bool>,
    /// One line per failed check naming the offending record or pair.
    pub failures: Vec<String>,
    pub timings_ms: Timings,
}

impl DecompositionReport<'_> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// One verified idempotent per rational class, sorted by degree,
/// dimension and element coefficients.
pub fn full_decomposition<'g>(
    g: &'g GroupTable,
    cc: &ConjClassData,
    table: &CharacterTable,
    cyc: &CyclicClassData,
    classes: &[RationalClass],
    level: Level,
) -> Result<DecompositionReport<'g>> {
    let n = BigInt::from(g.order());
    let mut timings = Timings::default();
    let mut failures = Vec::new();
    let mut records = Vec::with_capacity(classes.len());

    for rc in classes {
        let b = b_coefficients(g, cc, table, cyc, rc)?;

        let t = Instant::now();
        let element = eq_via_cyclic(g, cyc, rc, &b, Route::OrbitSum)?;
        timings.orbit_sum += elapsed_ms(t);

        let routes_agree = match level {
            Level::Fast => None,
            Level::Full => {
                let t = Instant::now();
                let classical = eq_classical(g, cc, rc);
                timings.classical += elapsed_ms(t);
                let t = Instant::now();
                let transversal = eq_via_cyclic(g, cyc, rc, &b, Route::Transversal)?;
                timings.transversal += elapsed_ms(t);
                Some(classical == element && transversal == element)
            }
        };

        let t = Instant::now();
        let idempotent = element.is_idempotent();
        let central = element.is_central();
        let dim = element.trace_dimension();
        let expected_dim = BigInt::from(rc.orbit_size) * BigInt::from(rc.degree).pow(2);
        let dimension_matches = dim.is_integer() && *dim.numer() == expected_dim;
        timings.verification += elapsed_ms(t);

        let who = format!("rational class {:?}", rc.members);
        if !idempotent {
            failures.push(format!("{who}: not idempotent"));
        }
        if !central {
            failures.push(format!("{who}: not central"));
        }
        if !dimension_matches {
            failures.push(format!("{who}: dimension {dim} differs from |G_chi| chi(1)^2 = {expected_dim}"));
        }
        if routes_agree == Some(false) {
            failures.push(format!("{who}: routes disagree"));
        }
        records.push(IdempotentRecord {
            class: rc.clone(),
            b,
            element,
            dimension: dim.to_integer(),
            idempotent,
            central,
            routes_agree,
            dimension_matches,
        });
    }
    records.sort_by(|a, b| {
        (a.class.degree, &a.dimension).cmp(&(b.class.degree, &b.dimension)).then_with(|| a.element.cmp(&b.element))
    });

    let t = Instant::now();
    let total = records.iter().fold(AlgebraElement::zero(g), |acc, r| &acc + &r.element);
    let sum_to_one = total == AlgebraElement::one(g);
    if !sum_to_one {
        failures.push("idempotents do not sum to one".into());
    }
    let dim_total: BigInt = records.iter().map(|r| r.dimension.clone()).sum();
    if dim_total != n {
        failures.push(format!("dimensions sum to {dim_total}, expected {n}"));
    }
    let pairwise_orthogonal = match level {
        Level::Fast => None,
        Level::Full => {
            let mut ok = true;
            for i in 0..records.len() {
                for j in (i + 1)..records.len() {
                    let ij = records[i].element.multiply(&records[j].element)?;
                    if !ij.is_zero() {
                        ok = false;
                        failures.push(format!("records {i} and {j} are not orthogonal"));
                    }
                }
            }
            Some(ok)
        }
    };
    timings.verification += elapsed_ms(t);
    let routes_agree = match level {
        Level::Fast => None,
        Level::Full => Some(records.iter().all(|r| r.routes_agree == Some(true))),
    };
    Ok(DecompositionReport { records, sum_to_one, pairwise_orthogonal, routes_agree, failures, timings_ms: timings })
}

/// Integer-valued class function in the given conductor.
pub fn integer_class_function(basis: &std::sync::Arc<CycloBasis>, values: &[i64]) -> ClassFunction {
    let v: Vec<BigInt> = values.iter().map(|&x| x.into()).collect();
    ClassFunction::from_integers(basis, &v)
}
