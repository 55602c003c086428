//! Constructors for the group families in the registry.
//!
//! Every family is built from an explicit normal form (words `a^i b^j c^k`
//! with collected exponent ranges) rather than generic coset enumeration;
//! index 0 is the identity and indices follow lexicographic normal-form
//! order. Tables are validated by [`GroupTable::from_rows`].
//!
//! Registry names: `C<n>`, `E<n>` (elementary abelian), `D<n>` (dihedral,
//! n >= 8), `Q<n>` (generalized quaternion, n >= 8), `SD16`, `M16`,
//! `H<n>` (central-commutator family, n >= 16), `C4sC4`, `D8YC4`, and
//! products joined with `x`, e.g. `Q8xC2`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::GroupTable;

const MAX_ORDER: usize = 1 << 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Cyclic(usize),
    ElementaryAbelian(usize),
    Dihedral(usize),
    GeneralizedQuaternion(usize),
    Semidihedral16,
    Modular16,
    /// `<a,b,c | a^(n/4) = b^2 = c^2 = 1, (a,b) = c central>` of order n.
    CentralCommutator(usize),
    /// `<a,b | a^4 = b^4 = 1, (a,b) = a^2>`
    C4SemidirectC4,
    /// `<a,b,c | a^4 = b^2 = c^4 = 1, (a,b) = a^2 = c^2, c central>`
    D8CentralC4,
    Product(Box<GroupDescriptor>, Box<GroupDescriptor>),
}

/// The fixed registry of named groups.
pub fn registry_names() -> &'static [&'static str] {
    &[
        "C2", "C4", "C8", "C16", "E4", "E8", "D8", "D16", "Q8", "Q16", "SD16", "M16", "H16",
        "C4sC4", "D8YC4",
    ]
}

/// The nine non-abelian groups of order 16, grouped by their order-16
/// multiplier (1, 1, 1, 2, 2, 2, 4, 4, 4).
pub fn order16_nonabelian_names() -> &'static [&'static str] {
    &[
        "D8YC4", "D16", "D8xC2", "M16", "SD16", "H16", "Q16", "C4sC4", "Q8xC2",
    ]
}

impl GroupDescriptor {
    /// Parses a registry name, with `x` as the direct-product separator.
    pub fn parse(name: &str) -> Result<Self> {
        let mut parts = name.split('x');
        let first = parts
            .next()
            .ok_or_else(|| Error::UnknownDescriptor(name.to_string()))?;
        let mut desc = Self::parse_leaf(first)?;
        for part in parts {
            desc = GroupDescriptor::Product(Box::new(desc), Box::new(Self::parse_leaf(part)?));
        }
        if desc.order() > MAX_ORDER {
            return Err(Error::BadGroupParameter(format!(
                "order {} exceeds the supported maximum {MAX_ORDER}",
                desc.order()
            )));
        }
        Ok(desc)
    }

    fn parse_leaf(tok: &str) -> Result<Self> {
        let fail = || Error::UnknownDescriptor(tok.to_string());
        let numeric = |prefix: &str| -> Result<usize> {
            tok[prefix.len()..].parse::<usize>().map_err(|_| fail())
        };
        match tok {
            "SD16" => return Ok(GroupDescriptor::Semidihedral16),
            "M16" => return Ok(GroupDescriptor::Modular16),
            "C4sC4" => return Ok(GroupDescriptor::C4SemidirectC4),
            "D8YC4" => return Ok(GroupDescriptor::D8CentralC4),
            _ => {}
        }
        let check = |n: usize, min: usize| -> Result<usize> {
            if n.is_power_of_two() && n >= min && n <= MAX_ORDER {
                Ok(n)
            } else {
                Err(Error::BadGroupParameter(format!(
                    "{tok}: order must be a power of two in {min}..={MAX_ORDER}"
                )))
            }
        };
        if let Some(rest) = tok.strip_prefix('C') {
            if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
                return Ok(GroupDescriptor::Cyclic(check(numeric("C")?, 2)?));
            }
        }
        if tok.starts_with('E') {
            return Ok(GroupDescriptor::ElementaryAbelian(check(numeric("E")?, 2)?));
        }
        if tok.starts_with('D') {
            return Ok(GroupDescriptor::Dihedral(check(numeric("D")?, 8)?));
        }
        if tok.starts_with('Q') {
            return Ok(GroupDescriptor::GeneralizedQuaternion(check(
                numeric("Q")?,
                8,
            )?));
        }
        if tok.starts_with('H') {
            return Ok(GroupDescriptor::CentralCommutator(check(numeric("H")?, 16)?));
        }
        Err(fail())
    }

    pub fn order(&self) -> usize {
        match self {
            GroupDescriptor::Cyclic(n)
            | GroupDescriptor::ElementaryAbelian(n)
            | GroupDescriptor::Dihedral(n)
            | GroupDescriptor::GeneralizedQuaternion(n)
            | GroupDescriptor::CentralCommutator(n) => *n,
            GroupDescriptor::Semidihedral16
            | GroupDescriptor::Modular16
            | GroupDescriptor::C4SemidirectC4
            | GroupDescriptor::D8CentralC4 => 16,
            GroupDescriptor::Product(a, b) => a.order() * b.order(),
        }
    }

    pub fn canonical_name(&self) -> String {
        match self {
            GroupDescriptor::Cyclic(n) => format!("C{n}"),
            GroupDescriptor::ElementaryAbelian(n) => format!("E{n}"),
            GroupDescriptor::Dihedral(n) => format!("D{n}"),
            GroupDescriptor::GeneralizedQuaternion(n) => format!("Q{n}"),
            GroupDescriptor::Semidihedral16 => "SD16".to_string(),
            GroupDescriptor::Modular16 => "M16".to_string(),
            GroupDescriptor::CentralCommutator(n) => format!("H{n}"),
            GroupDescriptor::C4SemidirectC4 => "C4sC4".to_string(),
            GroupDescriptor::D8CentralC4 => "D8YC4".to_string(),
            GroupDescriptor::Product(a, b) => {
                format!("{}x{}", a.canonical_name(), b.canonical_name())
            }
        }
    }

    /// Flattened direct-product factors, left to right.
    pub fn factors(&self) -> Vec<&GroupDescriptor> {
        match self {
            GroupDescriptor::Product(a, b) => {
                let mut f = a.factors();
                f.extend(b.factors());
                f
            }
            other => vec![other],
        }
    }

    /// True when every element has order at most two.
    pub fn is_elementary_abelian(&self) -> bool {
        match self {
            GroupDescriptor::Cyclic(n) => *n == 2,
            GroupDescriptor::ElementaryAbelian(_) => true,
            GroupDescriptor::Product(a, b) => a.is_elementary_abelian() && b.is_elementary_abelian(),
            _ => false,
        }
    }

    pub fn build(&self) -> Result<Arc<GroupTable>> {
        let mut letters = LetterPool::new();
        self.build_with(&mut letters)
    }

    fn build_with(&self, letters: &mut LetterPool) -> Result<Arc<GroupTable>> {
        match self {
            GroupDescriptor::Cyclic(n) => build_cyclic(*n, &letters.take(1)),
            GroupDescriptor::ElementaryAbelian(n) => {
                build_elementary_abelian(*n, &letters.take(n.trailing_zeros() as usize))
            }
            GroupDescriptor::Dihedral(n) => build_two_generator(
                *n,
                &letters.take(2),
                TwoGenKind::Dihedral,
                self.canonical_name(),
            ),
            GroupDescriptor::GeneralizedQuaternion(n) => build_two_generator(
                *n,
                &letters.take(2),
                TwoGenKind::Quaternion,
                self.canonical_name(),
            ),
            GroupDescriptor::Semidihedral16 => {
                build_two_generator(16, &letters.take(2), TwoGenKind::Twisted(3), "SD16".into())
            }
            GroupDescriptor::Modular16 => {
                build_two_generator(16, &letters.take(2), TwoGenKind::Twisted(5), "M16".into())
            }
            GroupDescriptor::CentralCommutator(n) => {
                build_central_commutator(*n, &letters.take(3))
            }
            GroupDescriptor::C4SemidirectC4 => build_c4sc4(&letters.take(2)),
            GroupDescriptor::D8CentralC4 => build_d8yc4(&letters.take(3)),
            GroupDescriptor::Product(a, b) => {
                let left = a.build_with(letters)?;
                let right = b.build_with(letters)?;
                build_product(&left, &right, self.canonical_name())
            }
        }
    }
}

/// Hands out unused generator letters; `x` is reserved as the product
/// separator in registry names.
struct LetterPool {
    next: usize,
}

const LETTERS: &[char] = &[
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'k', 'm', 'n', 'p', 'q', 'r', 's', 't', 'u', 'v',
];

impl LetterPool {
    fn new() -> Self {
        LetterPool { next: 0 }
    }

    fn take(&mut self, count: usize) -> Vec<String> {
        let out: Vec<String> = LETTERS[self.next..self.next + count]
            .iter()
            .map(|c| c.to_string())
            .collect();
        self.next += count;
        out
    }
}

fn format_pow(g: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => g.to_string(),
        _ => format!("{g}{e}"),
    }
}

fn assemble_name(parts: &[String]) -> String {
    let joined: String = parts.concat();
    if joined.is_empty() {
        "1".to_string()
    } else {
        joined
    }
}

fn build_cyclic(n: usize, gens: &[String]) -> Result<Arc<GroupTable>> {
    let g = &gens[0];
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let names = (0..n).map(|i| assemble_name(&[format_pow(g, i)])).collect();
    let mut generators = BTreeMap::new();
    generators.insert(g.clone(), 1);
    GroupTable::from_rows(format!("C{n}"), rows, Some(names), generators)
}

fn build_elementary_abelian(n: usize, gens: &[String]) -> Result<Arc<GroupTable>> {
    let m = n.trailing_zeros() as usize;
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| i ^ j).collect()).collect();
    let names = (0..n)
        .map(|mask| {
            let parts: Vec<String> = (0..m)
                .filter(|t| (mask >> t) & 1 == 1)
                .map(|t| gens[t].clone())
                .collect();
            assemble_name(&parts)
        })
        .collect();
    let generators = (0..m).map(|t| (gens[t].clone(), 1usize << t)).collect();
    GroupTable::from_rows(format!("E{n}"), rows, Some(names), generators)
}

enum TwoGenKind {
    Dihedral,
    Quaternion,
    /// b^-1 a b = a^e (semidihedral e=3, modular e=5; order 16 only)
    Twisted(usize),
}

/// Families on the normal form a^i b^j with i < n/2, j < 2.
fn build_two_generator(
    n: usize,
    gens: &[String],
    kind: TwoGenKind,
    name: String,
) -> Result<Arc<GroupTable>> {
    let r = n / 2;
    let idx = |i: usize, j: usize| i * 2 + j;
    let mut rows = vec![vec![0usize; n]; n];
    for i in 0..r {
        for j in 0..2 {
            for p in 0..r {
                for q in 0..2 {
                    // b^j a^p = a^(sigma_j(p)) b^j
                    let moved = match (&kind, j) {
                        (_, 0) => p,
                        (TwoGenKind::Dihedral | TwoGenKind::Quaternion, _) => (r - p) % r,
                        (TwoGenKind::Twisted(e), _) => (p * e) % r,
                    };
                    let mut s = (i + moved) % r;
                    let mut t = j + q;
                    if t >= 2 {
                        t -= 2;
                        if let TwoGenKind::Quaternion = kind {
                            s = (s + n / 4) % r; // b^2 = a^(n/4)
                        }
                    }
                    rows[idx(i, j)][idx(p, q)] = idx(s, t);
                }
            }
        }
    }
    let (a, b) = (&gens[0], &gens[1]);
    let names = (0..r)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .map(|(i, j)| assemble_name(&[format_pow(a, i), format_pow(b, j)]))
        .collect();
    let generators = BTreeMap::from([(a.clone(), idx(1, 0)), (b.clone(), idx(0, 1))]);
    GroupTable::from_rows(name, rows, Some(names), generators)
}

/// `<a,b,c | a^(n/4) = b^2 = c^2 = 1, (a,b) = c, c central>` on the normal
/// form a^i b^j c^k; moving b past a^p picks up c^p.
fn build_central_commutator(n: usize, gens: &[String]) -> Result<Arc<GroupTable>> {
    let qa = n / 4;
    let idx = |i: usize, j: usize, k: usize| i * 4 + j * 2 + k;
    let mut rows = vec![vec![0usize; n]; n];
    for i in 0..qa {
        for j in 0..2 {
            for k in 0..2 {
                for p in 0..qa {
                    for q in 0..2 {
                        for s in 0..2 {
                            let v = idx((i + p) % qa, (j + q) % 2, (k + s + j * p) % 2);
                            rows[idx(i, j, k)][idx(p, q, s)] = v;
                        }
                    }
                }
            }
        }
    }
    let (a, b, c) = (&gens[0], &gens[1], &gens[2]);
    let names = (0..qa)
        .flat_map(|i| (0..2).flat_map(move |j| (0..2).map(move |k| (i, j, k))))
        .map(|(i, j, k)| assemble_name(&[format_pow(a, i), format_pow(b, j), format_pow(c, k)]))
        .collect();
    let generators = BTreeMap::from([
        (a.clone(), idx(1, 0, 0)),
        (b.clone(), idx(0, 1, 0)),
        (c.clone(), idx(0, 0, 1)),
    ]);
    GroupTable::from_rows(format!("H{n}"), rows, Some(names), generators)
}

/// `<a,b | a^4 = b^4 = 1, b^-1 a b = a^-1>` on the normal form a^i b^j.
fn build_c4sc4(gens: &[String]) -> Result<Arc<GroupTable>> {
    let idx = |i: usize, j: usize| i * 4 + j;
    let mut rows = vec![vec![0usize; 16]; 16];
    for i in 0..4 {
        for j in 0..4 {
            for p in 0..4 {
                for q in 0..4 {
                    let moved = if j % 2 == 1 { (4 - p) % 4 } else { p };
                    rows[idx(i, j)][idx(p, q)] = idx((i + moved) % 4, (j + q) % 4);
                }
            }
        }
    }
    let (a, b) = (&gens[0], &gens[1]);
    let names = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| assemble_name(&[format_pow(a, i), format_pow(b, j)]))
        .collect();
    let generators = BTreeMap::from([(a.clone(), idx(1, 0)), (b.clone(), idx(0, 1))]);
    GroupTable::from_rows("C4sC4".to_string(), rows, Some(names), generators)
}

/// Central product of D8 and C4 identifying a^2 with c^2, on the normal form
/// a^i b^j c^k with i < 4, j < 2, k < 2.
fn build_d8yc4(gens: &[String]) -> Result<Arc<GroupTable>> {
    let idx = |i: usize, j: usize, k: usize| i * 4 + j * 2 + k;
    let mut rows = vec![vec![0usize; 16]; 16];
    for i in 0..4 {
        for j in 0..2 {
            for k in 0..2 {
                for p in 0..4 {
                    for q in 0..2 {
                        for s in 0..2 {
                            let moved = if j == 1 { (4 - p) % 4 } else { p };
                            let mut ai = (i + moved) % 4;
                            let mut ck = k + s;
                            if ck >= 2 {
                                ck -= 2;
                                ai = (ai + 2) % 4; // c^2 = a^2
                            }
                            rows[idx(i, j, k)][idx(p, q, s)] = idx(ai, (j + q) % 2, ck);
                        }
                    }
                }
            }
        }
    }
    let (a, b, c) = (&gens[0], &gens[1], &gens[2]);
    let names = (0..4)
        .flat_map(|i| (0..2).flat_map(move |j| (0..2).map(move |k| (i, j, k))))
        .map(|(i, j, k)| assemble_name(&[format_pow(a, i), format_pow(b, j), format_pow(c, k)]))
        .collect();
    let generators = BTreeMap::from([
        (a.clone(), idx(1, 0, 0)),
        (b.clone(), idx(0, 1, 0)),
        (c.clone(), idx(0, 0, 1)),
    ]);
    GroupTable::from_rows("D8YC4".to_string(), rows, Some(names), generators)
}

fn build_product(
    left: &Arc<GroupTable>,
    right: &Arc<GroupTable>,
    name: String,
) -> Result<Arc<GroupTable>> {
    let (nl, nr) = (left.order(), right.order());
    let n = nl * nr;
    let idx = |i: usize, j: usize| i * nr + j;
    let mut rows = vec![vec![0usize; n]; n];
    for i1 in 0..nl {
        for i2 in 0..nr {
            for j1 in 0..nl {
                for j2 in 0..nr {
                    rows[idx(i1, i2)][idx(j1, j2)] = idx(left.mul(i1, j1), right.mul(i2, j2));
                }
            }
        }
    }
    let names = (0..nl)
        .flat_map(|i| (0..nr).map(move |j| (i, j)))
        .map(|(i, j)| match (left.elem_name(i), right.elem_name(j)) {
            ("1", "1") => "1".to_string(),
            (l, "1") => l.to_string(),
            ("1", r) => r.to_string(),
            (l, r) => format!("{l}{r}"),
        })
        .collect();
    let mut generators = BTreeMap::new();
    for (g, &i) in left.generators() {
        generators.insert(g.clone(), idx(i, 0));
    }
    for (g, &j) in right.generators() {
        generators.insert(g.clone(), idx(0, j));
    }
    GroupTable::from_rows(name, rows, Some(names), generators)
}
