//! Arithmetic in GF(2^k), 1 <= k <= 16, in a polynomial basis.
//!
//! Every field is described by a [`FieldSpec`] (extension degree plus a fixed
//! irreducible modulus); elements are plain bit patterns ([`Fe`]) and all
//! operations are methods on the spec. Besides the ring operations the module
//! provides the Artin-Schreier map x -> x^2 + x, its image, and a solver for
//! the coefficient system
//!
//! ```text
//! w1 + w2 + w3 + w4 = 1
//! w1*w4 + w2*w3     = A
//! w1*w2 + w3*w4     = 0
//! ```
//!
//! which is solvable exactly when A lies in the Artin-Schreier image.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default irreducible polynomial of degree k over GF(2), as a bitmask with
/// bit k set. Standard low-weight choices, one per degree.
const DEFAULT_POLYS: [u32; 16] = [
    0b11,                // k=1:  x + 1
    0b111,               // k=2:  x^2 + x + 1
    0b1011,              // k=3:  x^3 + x + 1
    0b1_0011,            // k=4:  x^4 + x + 1
    0b10_0101,           // k=5:  x^5 + x^2 + 1
    0b100_0011,          // k=6:  x^6 + x + 1
    0b1000_0011,         // k=7:  x^7 + x + 1
    0b1_0001_1011,       // k=8:  x^8 + x^4 + x^3 + x + 1
    0b10_0001_0001,      // k=9:  x^9 + x^4 + 1
    0b100_0000_1001,     // k=10: x^10 + x^3 + 1
    0b1000_0000_0101,    // k=11: x^11 + x^2 + 1
    0b1_0000_0101_0011,  // k=12: x^12 + x^6 + x^4 + x + 1
    0b10_0000_0001_1011, // k=13: x^13 + x^4 + x^3 + x + 1
    0b100_0100_0100_0011, // k=14: x^14 + x^10 + x^6 + x + 1
    0b1000_0000_0000_0011, // k=15: x^15 + x + 1
    0b1_0001_0000_0000_1011, // k=16: x^16 + x^12 + x^3 + x + 1
];

/// Element of GF(2^k) as coefficients of the polynomial basis, bit i holding
/// the coefficient of x^i. Meaningful only relative to a [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Fe(pub u16);

/// A concrete field GF(2^k): extension degree and irreducible modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    k: u32,
    poly: u32,
}

fn poly_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

/// Remainder of carry-less division of `a` by `m` over GF(2).
fn poly_mod(mut a: u32, m: u32) -> u32 {
    let dm = poly_degree(m);
    while a != 0 {
        let da = poly_degree(a);
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Trial division by every polynomial of degree 1..=k/2.
fn is_irreducible(poly: u32, k: u32) -> bool {
    if poly_degree(poly) != k as i32 {
        return false;
    }
    if k == 1 {
        return true;
    }
    for d in 1..=(k / 2) {
        for q in (1u32 << d)..(1u32 << (d + 1)) {
            if poly_mod(poly, q) == 0 {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// GF(2^k) with the crate's fixed modulus for that degree.
    pub fn new(k: u32) -> Result<Self> {
        if !(1..=16).contains(&k) {
            return Err(Error::InvalidField(format!(
                "extension degree k must be in 1..=16, got {k}"
            )));
        }
        Self::with_poly(k, DEFAULT_POLYS[(k - 1) as usize])
    }

    /// GF(2^k) with an explicit modulus; rejected unless `poly` is irreducible
    /// of exact degree k.
    pub fn with_poly(k: u32, poly: u32) -> Result<Self> {
        if !(1..=16).contains(&k) {
            return Err(Error::InvalidField(format!(
                "extension degree k must be in 1..=16, got {k}"
            )));
        }
        if poly_degree(poly) != k as i32 {
            return Err(Error::InvalidField(format!(
                "modulus {poly:#b} does not have degree {k}"
            )));
        }
        if !is_irreducible(poly, k) {
            return Err(Error::InvalidField(format!("modulus {poly:#b} is reducible")));
        }
        Ok(FieldSpec { k, poly })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u32 {
        self.poly
    }

    /// Number of field elements, 2^k.
    pub fn order(&self) -> u64 {
        1u64 << self.k
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// Wraps a bit pattern, checking it fits in k bits.
    pub fn elem(&self, bits: u32) -> Result<Fe> {
        if u64::from(bits) >= self.order() {
            return Err(Error::FieldElemOutOfRange { bits, k: self.k });
        }
        Ok(Fe(bits as u16))
    }

    /// All field elements in bit-pattern order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order()).map(|b| Fe(b as u16))
    }

    #[inline]
    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        Fe(x.0 ^ y.0)
    }

    /// Subtraction coincides with addition in characteristic two.
    #[inline]
    pub fn sub(&self, x: Fe, y: Fe) -> Fe {
        self.add(x, y)
    }

    /// Shift-and-add product reduced by the modulus.
    #[inline]
    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        let mut a = u32::from(x.0);
        let b = u32::from(y.0);
        let mut acc = 0u32;
        for i in 0..self.k {
            if (b >> i) & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            if (a >> self.k) & 1 == 1 {
                a ^= self.poly;
            }
        }
        Fe(acc as u16)
    }

    #[inline]
    pub fn square(&self, x: Fe) -> Fe {
        self.mul(x, x)
    }

    pub fn pow(&self, x: Fe, mut e: u64) -> Fe {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via x^(2^k - 2); zero is an error.
    pub fn inv(&self, x: Fe) -> Result<Fe> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero { k: self.k });
        }
        Ok(self.pow(x, self.order() - 2))
    }

    /// Inverse of the Frobenius square: sqrt(x) = x^(2^(k-1)).
    pub fn sqrt(&self, x: Fe) -> Fe {
        let mut y = x;
        for _ in 0..self.k.saturating_sub(1) {
            y = self.square(y);
        }
        y
    }

    /// The Artin-Schreier map x^2 + x, an additive homomorphism with kernel
    /// {0, 1}.
    pub fn artin_schreier(&self, x: Fe) -> Fe {
        self.add(self.square(x), x)
    }

    /// Image of the Artin-Schreier map, sorted; always exactly half the field.
    pub fn artin_schreier_image(&self) -> Vec<Fe> {
        let mut img: Vec<Fe> = self.elements().map(|x| self.artin_schreier(x)).collect();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// Solves the coefficient system
    /// `w1+w2+w3+w4 = 1`, `w1*w4+w2*w3 = A`, `w1*w2+w3*w4 = 0`.
    ///
    /// A solution exists iff `a` is in the Artin-Schreier image. The
    /// construction is deterministic: for a = 0 return (0,1,0,0); otherwise
    /// scan for the first w != 0 with w^2 + w = a and set
    /// w1 = 0, w3 = w, w2 = a*w^-1, w4 = w2 + w + 1.
    pub fn solve_unit_system(&self, a: Fe) -> Option<[Fe; 4]> {
        if a.0 == 0 {
            return Some([self.zero(), self.one(), self.zero(), self.zero()]);
        }
        let w = self
            .elements()
            .skip(1)
            .find(|&w| self.artin_schreier(w) == a)?;
        let w2 = self.mul(a, self.inv(w).expect("w is nonzero"));
        let w4 = self.add(self.add(w2, w), self.one());
        Some([self.zero(), w2, w, w4])
    }

    /// Checks a tuple against all three equations of the system.
    pub fn check_unit_system(&self, a: Fe, w: &[Fe; 4]) -> bool {
        let [w1, w2, w3, w4] = *w;
        let sum = self.add(self.add(w1, w2), self.add(w3, w4));
        let cross = self.add(self.mul(w1, w4), self.mul(w2, w3));
        let mixed = self.add(self.mul(w1, w2), self.mul(w3, w4));
        sum == self.one() && cross == a && mixed == self.zero()
    }

    /// Renders an element as a polynomial in `w`, e.g. `w2+w+1`.
    pub fn format_elem(&self, x: Fe) -> String {
        if x.0 == 0 {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for i in (0..self.k).rev() {
            if (x.0 >> i) & 1 == 1 {
                parts.push(match i {
                    0 => "1".to_string(),
                    1 => "w".to_string(),
                    _ => format!("w{i}"),
                });
            }
        }
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn default_polys_are_irreducible() {
        for k in 1..=16 {
            let f = FieldSpec::new(k).unwrap();
            assert_eq!(f.order(), 1 << k);
        }
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x+1)^2
        assert!(FieldSpec::with_poly(2, 0b101).is_err());
        // x^16 + x^12 + x^5 + 1 vanishes at 1
        assert!(FieldSpec::with_poly(16, 0x11021).is_err());
    }

    #[test]
    fn gf2_addition() {
        let f = FieldSpec::new(1).unwrap();
        assert_eq!(f.add(f.one(), f.one()), f.zero());
        assert_eq!(f.add(f.one(), f.zero()), f.one());
    }

    #[test]
    fn gf4_arithmetic() {
        // w is a root of x^2 + x + 1, so w^2 = w + 1.
        let f = FieldSpec::new(2).unwrap();
        let w = f.elem(0b10).unwrap();
        let w_sq = f.elem(0b11).unwrap();
        assert_eq!(f.add(w, f.one()), w_sq);
        assert_eq!(f.mul(w, w), w_sq);
        assert_eq!(f.artin_schreier(w), f.one());
    }

    #[test]
    fn gf8_inverse_of_generator() {
        // g^3 = g + 1, and inv(g) = g^2 + 1.
        let f = FieldSpec::new(3).unwrap();
        let g = f.elem(0b010).unwrap();
        let expected = f.elem(0b101).unwrap();
        assert_eq!(f.inv(g).unwrap(), expected);
        // cross-check with a brute-force scan
        let brute = f
            .elements()
            .find(|&y| f.mul(g, y) == f.one())
            .unwrap();
        assert_eq!(brute, expected);
    }

    #[test]
    fn inv_of_zero_is_error() {
        let f = FieldSpec::new(4).unwrap();
        assert!(f.inv(f.zero()).is_err());
    }

    #[test]
    fn artin_schreier_kernel_is_zero_one() {
        for k in 1..=8 {
            let f = FieldSpec::new(k).unwrap();
            let kernel: Vec<Fe> = f
                .elements()
                .filter(|&x| f.artin_schreier(x) == f.zero())
                .collect();
            assert_eq!(kernel, vec![f.zero(), f.one()]);
        }
    }

    #[test]
    fn artin_schreier_image_has_half_the_field() {
        for k in 1..=8 {
            let f = FieldSpec::new(k).unwrap();
            assert_eq!(f.artin_schreier_image().len() as u64, f.order() / 2);
        }
        let gf2 = FieldSpec::new(1).unwrap();
        assert_eq!(gf2.artin_schreier_image(), vec![Fe(0)]);
        let gf4 = FieldSpec::new(2).unwrap();
        assert_eq!(gf4.artin_schreier_image(), vec![Fe(0), Fe(1)]);
    }

    #[test]
    fn unit_system_base_solution() {
        let f = FieldSpec::new(3).unwrap();
        let sol = f.solve_unit_system(f.zero()).unwrap();
        assert_eq!(sol, [f.zero(), f.one(), f.zero(), f.zero()]);
        assert!(f.check_unit_system(f.zero(), &sol));
    }

    #[test]
    fn unit_system_gf4() {
        let f = FieldSpec::new(2).unwrap();
        // A = 1 is in the image; the constructed solution is (0, w^2, w, 0).
        let sol = f.solve_unit_system(f.one()).unwrap();
        assert!(f.check_unit_system(f.one(), &sol));
        assert_eq!(sol, [Fe(0), Fe(0b11), Fe(0b10), Fe(0)]);
        // A = w is not in the image {0, 1}.
        assert!(f.solve_unit_system(Fe(0b10)).is_none());
    }

    /// Exhaustive F^4 search oracle for the solvable set, k <= 3.
    fn brute_solvable(f: &FieldSpec, a: Fe) -> bool {
        for w1 in f.elements() {
            for w2 in f.elements() {
                for w3 in f.elements() {
                    for w4 in f.elements() {
                        if f.check_unit_system(a, &[w1, w2, w3, w4]) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn unit_system_matches_brute_force_search() {
        for k in 1..=3 {
            let f = FieldSpec::new(k).unwrap();
            let image = f.artin_schreier_image();
            for a in f.elements() {
                let solved = f.solve_unit_system(a);
                assert_eq!(solved.is_some(), brute_solvable(&f, a), "k={k} a={:?}", a);
                assert_eq!(solved.is_some(), image.binary_search(&a).is_ok());
                if let Some(sol) = solved {
                    assert!(f.check_unit_system(a, &sol));
                }
            }
        }
    }

    #[test]
    fn unit_system_solutions_verify_up_to_k8() {
        for k in 4..=8 {
            let f = FieldSpec::new(k).unwrap();
            let image = f.artin_schreier_image();
            let mut solvable = 0u64;
            for a in f.elements() {
                match f.solve_unit_system(a) {
                    Some(sol) => {
                        solvable += 1;
                        assert!(f.check_unit_system(a, &sol));
                        assert!(image.binary_search(&a).is_ok());
                    }
                    None => assert!(image.binary_search(&a).is_err()),
                }
            }
            assert_eq!(solvable, f.order() / 2);
        }
    }

    fn arb_field() -> impl Strategy<Value = FieldSpec> {
        (1u32..=8).prop_map(|k| FieldSpec::new(k).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms((f, a, b, c) in arb_field().prop_flat_map(|f| {
            let n = f.order();
            (Just(f), 0..n, 0..n, 0..n)
        })) {
            let (x, y, z) = (Fe(a as u16), Fe(b as u16), Fe(c as u16));
            prop_assert_eq!(f.add(x, x), f.zero());
            prop_assert_eq!(f.add(x, y), f.add(y, x));
            prop_assert_eq!(f.mul(x, y), f.mul(y, x));
            prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
            prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            prop_assert_eq!(f.mul(x, f.one()), x);
            if x != f.zero() {
                prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
            }
        }

        #[test]
        fn frobenius_and_sqrt((f, a, b) in arb_field().prop_flat_map(|f| {
            let n = f.order();
            (Just(f), 0..n, 0..n)
        })) {
            let (x, y) = (Fe(a as u16), Fe(b as u16));
            // squaring is an automorphism, sqrt its inverse
            prop_assert_eq!(f.square(f.add(x, y)), f.add(f.square(x), f.square(y)));
            prop_assert_eq!(f.sqrt(f.square(x)), x);
            prop_assert_eq!(f.square(f.sqrt(x)), x);
            // Artin-Schreier is additive
            prop_assert_eq!(
                f.artin_schreier(f.add(x, y)),
                f.add(f.artin_schreier(x), f.artin_schreier(y))
            );
        }
    }
}
