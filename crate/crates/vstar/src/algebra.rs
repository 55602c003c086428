//! Arithmetic in the group algebra FG.
//!
//! Elements are dense coefficient vectors over the group's element indices.
//! The classical involution `*` sends each basis element to its inverse; the
//! augmentation sums coefficients. Everything here is pure and immutable.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2k::{Fe, FieldSpec};
use crate::group::{GroupTable, QuotientMap, Subgroup};
use crate::linalg;

#[derive(Debug, Clone)]
pub struct AlgebraElem {
    group: Arc<GroupTable>,
    field: FieldSpec,
    coeffs: Vec<Fe>,
}

impl PartialEq for AlgebraElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && Arc::ptr_eq(&self.group, &other.group)
            && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElem {}

impl AlgebraElem {
    pub fn zero(group: &Arc<GroupTable>, field: FieldSpec) -> Self {
        AlgebraElem {
            group: Arc::clone(group),
            field,
            coeffs: vec![Fe(0); group.order()],
        }
    }

    pub fn one(group: &Arc<GroupTable>, field: FieldSpec) -> Self {
        Self::embed(group, field, 0)
    }

    /// The basis element for a single group index.
    pub fn embed(group: &Arc<GroupTable>, field: FieldSpec, g: usize) -> Self {
        let mut x = Self::zero(group, field);
        x.coeffs[g] = Fe(1);
        x
    }

    pub fn from_coeffs(group: &Arc<GroupTable>, field: FieldSpec, coeffs: Vec<Fe>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(AlgebraElem {
            group: Arc::clone(group),
            field,
            coeffs,
        })
    }

    /// Sum over a subgroup (or any set of indices): `H^ = sum_{h in H} h`.
    pub fn set_sum(group: &Arc<GroupTable>, field: FieldSpec, elems: &[usize]) -> Self {
        let mut x = Self::zero(group, field);
        for &g in elems {
            x.coeffs[g] = field.add(x.coeffs[g], Fe(1));
        }
        x
    }

    pub fn subgroup_sum(group: &Arc<GroupTable>, field: FieldSpec, h: &Subgroup) -> Self {
        Self::set_sum(group, field, h.elems())
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> Fe {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == Fe(0))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == Fe(1) && self.coeffs.iter().skip(1).all(|&c| c == Fe(0))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field || !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(AlgebraElem {
            group: Arc::clone(&self.group),
            field: self.field,
            coeffs,
        })
    }

    pub fn scalar_mul(&self, alpha: Fe) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| self.field.mul(alpha, c)).collect();
        AlgebraElem {
            group: Arc::clone(&self.group),
            field: self.field,
            coeffs,
        }
    }

    /// Convolution product through the Cayley table.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = vec![Fe(0); self.coeffs.len()];
        mul_into(
            &self.group,
            &self.field,
            &self.coeffs,
            &other.coeffs,
            &mut out,
        );
        Ok(AlgebraElem {
            group: Arc::clone(&self.group),
            field: self.field,
            coeffs: out,
        })
    }

    /// The classical involution: coefficient of g moves to g^-1.
    pub fn star(&self) -> Self {
        let mut coeffs = vec![Fe(0); self.coeffs.len()];
        for (g, &c) in self.coeffs.iter().enumerate() {
            coeffs[self.group.inv(g)] = c;
        }
        AlgebraElem {
            group: Arc::clone(&self.group),
            field: self.field,
            coeffs,
        }
    }

    /// Augmentation: the coefficient sum, a ring homomorphism onto F.
    pub fn augmentation(&self) -> Fe {
        self.coeffs
            .iter()
            .fold(Fe(0), |acc, &c| self.field.add(acc, c))
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&g| self.coeffs[g] != Fe(0))
            .collect()
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        let mut acc = Self::one(&self.group, self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Inverse of a normalized unit.
    ///
    /// For u = 1 + x with augmentation(x) = 0, x is nilpotent of index at
    /// most |G|, so u^(2^m) = 1 + x^(2^m) = 1 once 2^m >= |G| and the inverse
    /// is u^(2^m - 1). Branch-free: a chain of log |G| squarings.
    pub fn unit_inverse(&self) -> Result<Self> {
        if self.augmentation() != self.field.one() {
            return Err(Error::NotNormalized);
        }
        let m = usize::BITS - (self.group.order() - 1).leading_zeros();
        let mut acc = Self::one(&self.group, self.field);
        let mut sq = self.clone();
        for _ in 0..m {
            acc = acc.mul(&sq)?;
            sq = sq.mul(&sq)?;
        }
        debug_assert!(self.mul(&acc).unwrap().is_one());
        Ok(acc)
    }

    /// Canonical coefficient words in index order; used for hashing and
    /// serialization keys.
    pub fn canonical_key(&self) -> Vec<u16> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    /// Writes the element as a sum of named group elements.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .support()
            .into_iter()
            .map(|g| {
                let c = self.coeffs[g];
                let gname = self.group.elem_name(g);
                if c == Fe(1) {
                    gname.to_string()
                } else if gname == "1" {
                    format!("({})", self.field.format_elem(c))
                } else {
                    format!("({}){}", self.field.format_elem(c), gname)
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Convolution into a caller-owned buffer; the enumeration hot path.
pub(crate) fn mul_into(
    group: &GroupTable,
    field: &FieldSpec,
    lhs: &[Fe],
    rhs: &[Fe],
    out: &mut [Fe],
) {
    out.fill(Fe(0));
    for (i, &ci) in lhs.iter().enumerate() {
        if ci == Fe(0) {
            continue;
        }
        for (j, &cj) in rhs.iter().enumerate() {
            if cj == Fe(0) {
                continue;
            }
            let k = group.mul(i, j);
            out[k] = field.add(out[k], field.mul(ci, cj));
        }
    }
}

/// Basis of the augmentation ideal of a subgroup: `{ u (1+h) }` over a
/// transversal `u` and h in H \ {1}. Linear independence is verified.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    pub subgroup: Subgroup,
    pub basis: Vec<AlgebraElem>,
}

pub fn ideal_basis(
    group: &Arc<GroupTable>,
    field: FieldSpec,
    h: &Subgroup,
) -> Result<IdealBasis> {
    if !h.is_normal(group) {
        return Err(Error::NotNormal);
    }
    let transversal = group.transversal(h);
    let mut basis = Vec::new();
    for &u in &transversal {
        for &x in h.elems() {
            if x == 0 {
                continue;
            }
            // u * (1 + x)
            let mut v = AlgebraElem::zero(group, field);
            v.coeffs[u] = field.add(v.coeffs[u], Fe(1));
            let ux = group.mul(u, x);
            v.coeffs[ux] = field.add(v.coeffs[ux], Fe(1));
            basis.push(v);
        }
    }
    let rows: Vec<Vec<Fe>> = basis.iter().map(|b| b.coeffs.clone()).collect();
    if linalg::rank(&field, &rows) != basis.len() {
        return Err(Error::BadSubgroup(
            "ideal basis is not linearly independent".into(),
        ));
    }
    Ok(IdealBasis {
        subgroup: h.clone(),
        basis,
    })
}

/// Membership in the coset 1 + I(H).
pub fn in_ideal_coset(x: &AlgebraElem, ideal: &IdealBasis) -> bool {
    let one = AlgebraElem::one(x.group(), x.field());
    let Ok(diff) = x.add(&one) else {
        return false;
    };
    let rows: Vec<Vec<Fe>> = ideal.basis.iter().map(|b| b.coeffs.clone()).collect();
    linalg::in_span(&x.field(), &rows, diff.coeffs()).is_some()
}

/// Pushes an element through the natural map FG -> F(G/H): coefficients sum
/// over each coset.
pub fn project(map: &QuotientMap, x: &AlgebraElem) -> Result<AlgebraElem> {
    if !Arc::ptr_eq(x.group(), &map.source) {
        return Err(Error::AlgebraMismatch);
    }
    let field = x.field();
    let mut out = AlgebraElem::zero(&map.target, field);
    for (g, &c) in x.coeffs().iter().enumerate() {
        let t = map.image(g);
        out.coeffs[t] = field.add(out.coeffs[t], c);
    }
    Ok(out)
}

/// A coefficient-level section of [`project`]: each quotient coefficient is
/// placed on the smallest preimage representative. Projecting the lift gives
/// back the argument, and normalized stays normalized.
pub fn lift(map: &QuotientMap, y: &AlgebraElem) -> Result<AlgebraElem> {
    if !Arc::ptr_eq(y.group(), &map.target) {
        return Err(Error::AlgebraMismatch);
    }
    let section = map.section();
    let mut out = AlgebraElem::zero(&map.source, y.field());
    for (t, &c) in y.coeffs().iter().enumerate() {
        out.coeffs[section[t]] = c;
    }
    Ok(out)
}

/// Splits x = x1 + x2*b over an index-2 subgroup M with b outside M; both
/// parts are supported on M and the decomposition is unique.
pub fn decompose_over_index2(
    x: &AlgebraElem,
    m: &Subgroup,
    b: usize,
) -> Result<(AlgebraElem, AlgebraElem)> {
    let group = x.group();
    if m.order() * 2 != group.order() {
        return Err(Error::BadSubgroup(format!(
            "index must be 2, got {}",
            group.order() / m.order()
        )));
    }
    if m.contains(b) {
        return Err(Error::BadSubgroup(
            "coset representative lies in the subgroup".into(),
        ));
    }
    let mut x1 = AlgebraElem::zero(group, x.field());
    let mut x2 = AlgebraElem::zero(group, x.field());
    for &g in m.elems() {
        x1.coeffs[g] = x.coeff(g);
        x2.coeffs[g] = x.coeff(group.mul(g, b));
    }
    Ok((x1, x2))
}

/// Basis of `{ z : z*y = 0 }`, the kernel of right multiplication by y.
pub fn annihilator(y: &AlgebraElem) -> Vec<AlgebraElem> {
    let group = y.group();
    let field = y.field();
    let n = group.order();
    // rows h, columns g: coefficient of h in g*y is y[g^-1 h]
    let mut rows = vec![vec![Fe(0); n]; n];
    for h in 0..n {
        for g in 0..n {
            rows[h][g] = y.coeff(group.mul(group.inv(g), h));
        }
    }
    linalg::kernel_basis(&field, &rows, n)
        .into_iter()
        .map(|v| AlgebraElem::from_coeffs(group, field, v).expect("kernel width matches"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(k: u32) -> FieldSpec {
        FieldSpec::new(k).unwrap()
    }

    fn random_elem(group: &Arc<GroupTable>, field: FieldSpec, rng: &mut impl Rng) -> AlgebraElem {
        let coeffs = (0..group.order())
            .map(|_| Fe(rng.gen_range(0..field.order()) as u16))
            .collect();
        AlgebraElem::from_coeffs(group, field, coeffs).unwrap()
    }

    fn random_normalized(
        group: &Arc<GroupTable>,
        field: FieldSpec,
        rng: &mut impl Rng,
    ) -> AlgebraElem {
        let mut x = random_elem(group, field, rng);
        let adjust = field.add(field.add(x.coeff(0), x.augmentation()), field.one());
        x.coeffs[0] = adjust;
        debug_assert_eq!(x.augmentation(), field.one());
        x
    }

    #[test]
    fn embeds_multiply_like_the_group() {
        let g = build_group("D8").unwrap();
        let f = gf(2);
        for a in 0..g.order() {
            for b in 0..g.order() {
                let lhs = AlgebraElem::embed(&g, f, a)
                    .mul(&AlgebraElem::embed(&g, f, b))
                    .unwrap();
                assert_eq!(lhs, AlgebraElem::embed(&g, f, g.mul(a, b)));
            }
        }
    }

    #[test]
    fn char_two_cancellation() {
        let c2 = build_group("C2").unwrap();
        let f = gf(1);
        let x = AlgebraElem::set_sum(&c2, f, &[0, 1]); // 1 + c
        assert!(x.mul(&x).unwrap().is_zero());
    }

    #[test]
    fn c4_product_and_inverse() {
        let c4 = build_group("C4").unwrap();
        let f = gf(1);
        let u = AlgebraElem::set_sum(&c4, f, &[0, 1, 2]); // 1 + a + a^2
        let v = AlgebraElem::set_sum(&c4, f, &[0, 2, 3]); // 1 + a^2 + a^3
        assert!(u.mul(&v).unwrap().is_one());
        assert_eq!(u.unit_inverse().unwrap(), v);
    }

    #[test]
    fn star_basics() {
        let g = build_group("Q8").unwrap();
        let f = gf(2);
        for e in 0..g.order() {
            assert_eq!(
                AlgebraElem::embed(&g, f, e).star(),
                AlgebraElem::embed(&g, f, g.inv(e))
            );
        }
    }

    #[test]
    fn augmentation_of_subgroup_sum() {
        let g = build_group("C4").unwrap();
        let f = gf(2);
        let h = g.closure(&[2]); // <a^2>, order 2
        let hs = AlgebraElem::subgroup_sum(&g, f, &h);
        assert_eq!(hs.augmentation(), f.zero());
        assert_eq!(AlgebraElem::one(&g, f).augmentation(), f.one());
    }

    #[test]
    fn support_cancels() {
        let g = build_group("C4").unwrap();
        let f = gf(1);
        // 1 + a + a over GF(2)
        let mut x = AlgebraElem::embed(&g, f, 0);
        let a = AlgebraElem::embed(&g, f, 1);
        x = x.add(&a).unwrap().add(&a).unwrap();
        assert_eq!(x.support(), vec![0]);
    }

    #[test]
    fn ideal_basis_and_coset() {
        let g = build_group("D8xC2").unwrap();
        let f = gf(1);
        let center_c = g.generator("c").unwrap();
        let h = g.closure(&[center_c]);
        let ideal = ideal_basis(&g, f, &h).unwrap();
        assert_eq!(ideal.basis.len(), g.order() / 2);
        // 1 is in the coset, 1 + g is not for g outside H
        assert!(in_ideal_coset(&AlgebraElem::one(&g, f), &ideal));
        let a = g.generator("a").unwrap();
        let x = AlgebraElem::set_sum(&g, f, &[0, a]);
        assert!(!in_ideal_coset(&x, &ideal));
        // but 1 + a + ac = 1 + a*H^ is
        let y = AlgebraElem::set_sum(&g, f, &[0, a, g.mul(a, center_c)]);
        assert!(in_ideal_coset(&y, &ideal));
    }

    #[test]
    fn ideal_coset_size_for_order16() {
        // |1 + I(H)| = |F|^(|G|/2) for |H| = 2: dimension check
        let g = build_group("SD16").unwrap();
        let f = gf(1);
        let a = g.generator("a").unwrap();
        let h = g.closure(&[g.pow(a, 4)]);
        let ideal = ideal_basis(&g, f, &h).unwrap();
        assert_eq!(ideal.basis.len(), 8);
    }

    #[test]
    fn projection_kills_kernel_sum() {
        let g = build_group("C4xC2").unwrap();
        let f = gf(2);
        // the C2 factor generator takes the next free letter after C4's "a"
        let c = g.generator("b").unwrap();
        let h = g.closure(&[c]);
        let (_, map) = g.quotient(&h).unwrap();
        let hs = AlgebraElem::subgroup_sum(&g, f, &h);
        assert!(project(&map, &hs).unwrap().is_zero());
        // embed(g) maps to embed(gH)
        let a = g.generator("a").unwrap();
        let img = project(&map, &AlgebraElem::embed(&g, f, a)).unwrap();
        assert_eq!(img.support(), vec![map.image(a)]);
    }

    #[test]
    fn lift_section_round_trip() {
        let g = build_group("Q8").unwrap();
        let f = gf(2);
        let h = g.closure(&[g.mul(g.generator("a").unwrap(), g.generator("a").unwrap())]);
        let (q, map) = g.quotient(&h).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let y = random_normalized(&q, f, &mut rng);
            let x = lift(&map, &y).unwrap();
            assert_eq!(project(&map, &x).unwrap(), y);
            assert_eq!(x.augmentation(), f.one());
        }
    }

    #[test]
    fn decompose_round_trip() {
        let g = build_group("Q8xC2").unwrap();
        let f = gf(2);
        let (a, b, c) = (
            g.generator("a").unwrap(),
            g.generator("b").unwrap(),
            g.generator("c").unwrap(),
        );
        let m = g.closure(&[a, c]);
        assert_eq!(m.order(), 8);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let x = random_elem(&g, f, &mut rng);
            let (x1, x2) = decompose_over_index2(&x, &m, b).unwrap();
            for &g_idx in x1.support().iter().chain(x2.support().iter()) {
                assert!(m.contains(g_idx));
            }
            let recomposed = x1
                .add(&x2.mul(&AlgebraElem::embed(&g, f, b)).unwrap())
                .unwrap();
            assert_eq!(recomposed, x);
        }
        // embed(b) decomposes as (0, 1)
        let (x1, x2) = decompose_over_index2(&AlgebraElem::embed(&g, f, b), &m, b).unwrap();
        assert!(x1.is_zero());
        assert!(x2.is_one());
        // errors: b inside M
        assert!(decompose_over_index2(&AlgebraElem::one(&g, f), &m, a).is_err());
    }

    #[test]
    fn annihilator_extremes() {
        let g = build_group("C4").unwrap();
        let f = gf(2);
        assert_eq!(annihilator(&AlgebraElem::zero(&g, f)).len(), 4);
        assert_eq!(annihilator(&AlgebraElem::one(&g, f)).len(), 0);
    }

    #[test]
    fn annihilator_of_one_plus_a2_in_c4xc2() {
        for k in [1u32, 2] {
            let g = build_group("C4xC2").unwrap();
            let f = gf(k);
            let a = g.generator("a").unwrap();
            let y = AlgebraElem::set_sum(&g, f, &[0, g.mul(a, a)]); // 1 + a^2
            let basis = annihilator(&y);
            assert_eq!(basis.len(), 4, "k={k}");
            for v in &basis {
                assert!(v.mul(&y).unwrap().is_zero());
            }
            // the annihilator is spanned by (1+a^2) g over a transversal of <a^2>
            let h = g.closure(&[g.mul(a, a)]);
            let expected: Vec<Vec<Fe>> = g
                .transversal(&h)
                .into_iter()
                .map(|u| {
                    y.mul(&AlgebraElem::embed(&g, f, u))
                        .unwrap()
                        .coeffs()
                        .to_vec()
                })
                .collect();
            for v in &basis {
                assert!(crate::linalg::in_span(&f, &expected, v.coeffs()).is_some());
            }
        }
    }

    #[test]
    fn mismatched_operands_error() {
        let f = gf(1);
        let a = AlgebraElem::one(&build_group("C4").unwrap(), f);
        let b = AlgebraElem::one(&build_group("C2").unwrap(), f);
        assert!(a.add(&b).is_err());
        let c = AlgebraElem::one(&build_group("C4").unwrap(), gf(2));
        assert!(a.mul(&c).is_err());
    }

    #[test]
    fn unit_inverse_requires_normalization() {
        let g = build_group("C4").unwrap();
        let f = gf(1);
        assert!(AlgebraElem::zero(&g, f).unit_inverse().is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn star_and_augmentation_laws(seed in 0u64..1024, gi in 0usize..4, k in 1u32..3) {
            let names = ["C4", "D8", "Q8", "SD16"];
            let g = build_group(names[gi]).unwrap();
            let f = gf(k);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_elem(&g, f, &mut rng);
            let y = random_elem(&g, f, &mut rng);
            // involution axioms
            prop_assert_eq!(x.star().star(), x.clone());
            prop_assert_eq!(
                x.mul(&y).unwrap().star(),
                y.star().mul(&x.star()).unwrap()
            );
            prop_assert_eq!(
                x.add(&y).unwrap().star(),
                x.star().add(&y.star()).unwrap()
            );
            // augmentation is a ring homomorphism
            prop_assert_eq!(
                x.mul(&y).unwrap().augmentation(),
                f.mul(x.augmentation(), y.augmentation())
            );
            prop_assert_eq!(
                x.add(&y).unwrap().augmentation(),
                f.add(x.augmentation(), y.augmentation())
            );
        }

        #[test]
        fn normalized_units_invert(seed in 0u64..512, gi in 0usize..3, k in 1u32..3) {
            let names = ["C4", "D8", "M16"];
            let g = build_group(names[gi]).unwrap();
            let f = gf(k);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_normalized(&g, f, &mut rng);
            let inv = u.unit_inverse().unwrap();
            prop_assert!(u.mul(&inv).unwrap().is_one());
            prop_assert!(inv.mul(&u).unwrap().is_one());
            prop_assert_eq!(inv.augmentation(), f.one());
        }

        #[test]
        fn projection_is_multiplicative(seed in 0u64..512) {
            let g = build_group("SD16").unwrap();
            let f = gf(2);
            let a = g.generator("a").unwrap();
            let h = g.closure(&[g.pow(a, 4)]);
            let (_, map) = g.quotient(&h).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_elem(&g, f, &mut rng);
            let y = random_elem(&g, f, &mut rng);
            prop_assert_eq!(
                project(&map, &x.mul(&y).unwrap()).unwrap(),
                project(&map, &x).unwrap().mul(&project(&map, &y).unwrap()).unwrap()
            );
        }

        #[test]
        fn coset_multiplication_is_additive(seed in 0u64..512) {
            // (1 + x1 H^)(1 + x2 H^) = 1 + (x1 + x2) H^ for central H of order 2
            let g = build_group("M16").unwrap();
            let f = gf(2);
            let a = g.generator("a").unwrap();
            let h = g.closure(&[g.pow(a, 4)]);
            let hs = AlgebraElem::subgroup_sum(&g, f, &h);
            let one = AlgebraElem::one(&g, f);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x1 = random_elem(&g, f, &mut rng);
            let x2 = random_elem(&g, f, &mut rng);
            let lhs = one
                .add(&x1.mul(&hs).unwrap()).unwrap()
                .mul(&one.add(&x2.mul(&hs).unwrap()).unwrap()).unwrap();
            let rhs = one
                .add(&x1.add(&x2).unwrap().mul(&hs).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
