//! Finite 2-groups as explicit Cayley tables.
//!
//! Elements are indices into the table; index 0 is always the identity.
//! Tables are fully validated at construction (associativity, identity,
//! two-sided inverses, 2-power order), after which they are immutable and
//! freely shareable.

mod construct;

pub use construct::{registry_names, order16_nonabelian_names, GroupDescriptor};

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite group given by its full multiplication table.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    /// Row-major `order x order` table of element indices.
    mul: Vec<u16>,
    inv: Vec<u16>,
    name: String,
    elem_names: Vec<String>,
    generators: BTreeMap<String, usize>,
}

impl GroupTable {
    /// Builds and validates a table from raw rows.
    pub fn from_rows(
        name: impl Into<String>,
        rows: Vec<Vec<usize>>,
        elem_names: Option<Vec<String>>,
        generators: BTreeMap<String, usize>,
    ) -> Result<Arc<Self>> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if order > u16::MAX as usize {
            return Err(Error::InvalidTable(format!("order {order} too large")));
        }
        let mut mul = Vec::with_capacity(order * order);
        for row in &rows {
            if row.len() != order {
                return Err(Error::InvalidTable("table is not square".into()));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidTable(format!("entry {v} out of range")));
                }
                mul.push(v as u16);
            }
        }
        let elem_names =
            elem_names.unwrap_or_else(|| (0..order).map(|i| format!("g{i}")).collect());
        if elem_names.len() != order {
            return Err(Error::InvalidTable("element name count mismatch".into()));
        }

        let mut table = GroupTable {
            order,
            mul,
            inv: vec![0; order],
            name: name.into(),
            elem_names,
            generators,
        };
        table.validate()?;
        Ok(Arc::new(table))
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.order;
        if !n.is_power_of_two() {
            return Err(Error::InvalidTable(format!("order {n} is not a power of two")));
        }
        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        // two-sided inverses
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                if self.mul(i, j) == 0 && self.mul(j, i) == 0 {
                    found = Some(j);
                    break;
                }
            }
            match found {
                Some(j) => self.inv[i] = j as u16,
                None => return Err(Error::InvalidTable(format!("element {i} has no inverse"))),
            }
        }
        // associativity
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        for g in 0..n {
            if !self.elem_order(g).is_power_of_two() {
                return Err(Error::InvalidTable(format!(
                    "element {g} does not have 2-power order"
                )));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elem_name(&self, g: usize) -> &str {
        &self.elem_names[g]
    }

    pub fn generators(&self) -> &BTreeMap<String, usize> {
        &self.generators
    }

    /// Index of a named generator, if the table was built from a presentation.
    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.get(name).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// h^-1 g h
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// g^-1 h^-1 g h
    #[inline]
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.inv(self.mul(h, g)), self.mul(g, h))
    }

    pub fn pow(&self, g: usize, e: usize) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn elem_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Resolves an element by its display name (`"a2b"`, `"1"`, ...).
    pub fn elem_by_name(&self, name: &str) -> Option<usize> {
        self.elem_names.iter().position(|n| n == name)
    }

    /// Elements with g^2 = 1, identity included.
    pub fn torsion_set(&self) -> Vec<usize> {
        (0..self.order).filter(|&g| self.mul(g, g) == 0).collect()
    }

    /// The set of squares {g^2 : g in G}; not a subgroup in general.
    pub fn squares_image(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.order).map(|g| self.mul(g, g)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Subgroup generated by all (2^i)-th powers.
    pub fn power_subgroup(&self, i: u32) -> Subgroup {
        let e = 1usize << i;
        let gens: Vec<usize> = (0..self.order).map(|g| self.pow(g, e)).collect();
        self.closure(&gens)
    }

    /// Subgroup generated by the elements of order 2^i. `exact` selects
    /// between order exactly 2^i and order dividing 2^i; the two readings
    /// coincide wherever this crate relies on the value.
    pub fn generated_by_order(&self, i: u32, exact: bool) -> Subgroup {
        let target = 1usize << i;
        let gens: Vec<usize> = (0..self.order)
            .filter(|&g| {
                let o = self.elem_order(g);
                if exact {
                    o == target
                } else {
                    target % o == 0
                }
            })
            .collect();
        if gens.is_empty() {
            return Subgroup { elems: vec![0] };
        }
        self.closure(&gens)
    }

    /// The elements of the squares subgroup killed by squaring. For abelian
    /// groups this is a subgroup; elsewhere construction may fail.
    pub fn squares_then_torsion(&self) -> Result<Subgroup> {
        let sq = self.power_subgroup(1);
        let elems: Vec<usize> = sq
            .elems
            .iter()
            .copied()
            .filter(|&g| self.mul(g, g) == 0)
            .collect();
        Subgroup::new(self, elems)
    }

    pub fn center(&self) -> Subgroup {
        let elems: Vec<usize> = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup { elems }
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let mut gens = Vec::new();
        for g in 0..self.order {
            for h in 0..self.order {
                gens.push(self.commutator(g, h));
            }
        }
        self.closure(&gens)
    }

    /// Involutions of the center together with the identity.
    pub fn omega_center(&self) -> Subgroup {
        let elems: Vec<usize> = self
            .center()
            .elems
            .into_iter()
            .filter(|&z| self.mul(z, z) == 0)
            .collect();
        Subgroup { elems }
    }

    /// The set {g : g^2 = c} for a central involution c.
    pub fn m_set(&self, c: usize) -> Result<Vec<usize>> {
        if c == 0 || self.mul(c, c) != 0 || !self.is_central(c) {
            return Err(Error::NotCentralInvolution(self.elem_names[c].clone()));
        }
        Ok((0..self.order).filter(|&g| self.mul(g, g) == c).collect())
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z))
    }

    /// True iff every conjugate of an element outside the torsion set is the
    /// element itself or its inverse.
    pub fn conjugation_inverts_or_fixes(&self) -> bool {
        for g in 0..self.order {
            if self.mul(g, g) == 0 {
                continue;
            }
            let gi = self.inv(g);
            for h in 0..self.order {
                let c = self.conj(g, h);
                if c != g && c != gi {
                    return false;
                }
            }
        }
        true
    }

    /// Subgroup closure of a generating set (BFS).
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let elems: Vec<usize> = (0..self.order).filter(|&i| seen[i]).collect();
        Subgroup { elems }
    }

    /// Quotient by a normal subgroup: the coset table plus the projection.
    pub fn quotient(self: &Arc<Self>, n: &Subgroup) -> Result<(Arc<GroupTable>, QuotientMap)> {
        n.check_subgroup_of(self)?;
        if !n.is_normal(self) {
            return Err(Error::NotNormal);
        }
        let order = self.order;
        // cosets keyed by their sorted element list; representative = minimum
        let mut coset_of = vec![usize::MAX; order];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = n.elems.iter().map(|&h| self.mul(g, h)).collect();
            let rep = *members.iter().min().unwrap();
            let idx = reps.len();
            // identity's coset must come first; reps are discovered in index
            // order so rep 0 lands at slot 0
            reps.push(rep);
            for &m in &members {
                coset_of[m] = idx;
            }
        }
        let q = reps.len();
        let mut rows = vec![vec![0usize; q]; q];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                rows[i][j] = coset_of[self.mul(ri, rj)];
            }
        }
        let elem_names = reps
            .iter()
            .map(|&r| format!("[{}]", self.elem_names[r]))
            .collect();
        let generators = self
            .generators
            .iter()
            .map(|(k, &v)| (k.clone(), coset_of[v]))
            .collect();
        let target = GroupTable::from_rows(
            format!("{}/{}", self.name, n.describe(self)),
            rows,
            Some(elem_names),
            generators,
        )?;
        let map = QuotientMap {
            source: Arc::clone(self),
            target,
            map: coset_of.iter().map(|&c| c as u16).collect(),
            kernel: n.clone(),
        };
        Ok((Arc::clone(&map.target), map))
    }

    /// Left coset representatives of `h`, one per coset, identity first.
    pub fn transversal(&self, h: &Subgroup) -> Vec<usize> {
        let mut covered = vec![false; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &x in &h.elems {
                covered[self.mul(g, x)] = true;
            }
        }
        reps
    }

    /// Deterministic profile; equal profiles are necessary (not sufficient)
    /// for isomorphism.
    pub fn invariants(&self) -> GroupInvariants {
        let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
        let mut exponent = 1;
        for g in 0..self.order {
            let o = self.elem_order(g);
            exponent = exponent.max(o);
            *histogram.entry(o).or_insert(0) += 1;
        }
        GroupInvariants {
            order: self.order,
            exponent,
            abelian: self.is_abelian(),
            center_order: self.center().order(),
            commutator_order: self.commutator_subgroup().order(),
            torsion_count: self.torsion_set().len(),
            order_histogram: histogram,
        }
    }

    /// Greedy generating set: smallest-index elements that enlarge the
    /// closure.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closure = Subgroup { elems: vec![0] };
        for g in 1..self.order {
            if !closure.contains(g) {
                gens.push(g);
                closure = self.closure(&gens);
                if closure.order() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// Searches for an isomorphism onto `other` by mapping a generating set
    /// to order-matched candidates and checking multiplicativity.
    pub fn find_isomorphism(&self, other: &GroupTable) -> Option<Vec<usize>> {
        if self.order != other.order {
            return None;
        }
        if self.invariants() != other.invariants() {
            return None;
        }
        let gens = self.generating_set();
        // decompose every element as parent * generator
        let mut word: Vec<Option<(usize, usize)>> = vec![None; self.order];
        let mut order_in_bfs = Vec::with_capacity(self.order);
        {
            let mut seen = vec![false; self.order];
            seen[0] = true;
            order_in_bfs.push(0);
            let mut queue = VecDeque::from([0usize]);
            while let Some(x) = queue.pop_front() {
                for (gi, &g) in gens.iter().enumerate() {
                    let y = self.mul(x, g);
                    if !seen[y] {
                        seen[y] = true;
                        word[y] = Some((x, gi));
                        order_in_bfs.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.elem_order(g);
                (0..other.order)
                    .filter(|&h| other.elem_order(h) == o)
                    .collect()
            })
            .collect();

        let mut images = vec![0usize; gens.len()];
        self.try_assign(other, &gens, &word, &order_in_bfs, &candidates, &mut images, 0)
    }

    fn try_assign(
        &self,
        other: &GroupTable,
        gens: &[usize],
        word: &[Option<(usize, usize)>],
        bfs: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        depth: usize,
    ) -> Option<Vec<usize>> {
        if depth == gens.len() {
            // extend along words and verify the full table
            let mut phi = vec![usize::MAX; self.order];
            phi[0] = 0;
            for &e in bfs.iter().skip(1) {
                let (parent, gi) = word[e].expect("non-identity element has a word");
                phi[e] = other.mul(phi[parent], images[gi]);
            }
            let mut used = vec![false; self.order];
            for &v in &phi {
                if v == usize::MAX || used[v] {
                    return None;
                }
                used[v] = true;
            }
            for a in 0..self.order {
                for b in 0..self.order {
                    if phi[self.mul(a, b)] != other.mul(phi[a], phi[b]) {
                        return None;
                    }
                }
            }
            return Some(phi);
        }
        for &cand in &candidates[depth] {
            images[depth] = cand;
            if let Some(phi) =
                self.try_assign(other, gens, word, bfs, candidates, images, depth + 1)
            {
                return Some(phi);
            }
        }
        None
    }

    pub fn is_isomorphic(&self, other: &GroupTable) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// Dihedral of order >= 8: a rotation of index 2 inverted by an outside
    /// involution.
    pub fn is_dihedral(&self) -> bool {
        let n = self.order;
        if n < 8 || self.is_abelian() {
            return false;
        }
        for a in 0..n {
            if self.elem_order(a) != n / 2 {
                continue;
            }
            let rot = self.closure(&[a]);
            for b in 0..n {
                if rot.contains(b) {
                    continue;
                }
                if self.mul(b, b) == 0 && self.conj(a, b) == self.inv(a) {
                    return true;
                }
            }
        }
        false
    }

    /// Generalized quaternion of order >= 8: like dihedral but with
    /// b^2 = a^(n/4).
    pub fn is_generalized_quaternion(&self) -> bool {
        let n = self.order;
        if n < 8 || self.is_abelian() {
            return false;
        }
        for a in 0..n {
            if self.elem_order(a) != n / 2 {
                continue;
            }
            let rot = self.closure(&[a]);
            let half = self.pow(a, n / 4);
            for b in 0..n {
                if rot.contains(b) {
                    continue;
                }
                if self.mul(b, b) == half && self.conj(a, b) == self.inv(a) {
                    return true;
                }
            }
        }
        false
    }

    /// Stable byte serialization of the table contents, used for cache keys.
    pub fn content_bytes(&self) -> Vec<u8> {
        let mut bytes = Vec::with_capacity(self.mul.len() * 2 + 8);
        bytes.extend_from_slice(&(self.order as u64).to_le_bytes());
        for &v in &self.mul {
            bytes.extend_from_slice(&v.to_le_bytes());
        }
        bytes
    }

    /// Parses the JSON Cayley-table format
    /// `{ "order": n, "mul": [[...]], "name": "..." }`.
    pub fn from_json(json: &str) -> Result<Arc<Self>> {
        let raw: TableJson = serde_json::from_str(json)?;
        if raw.mul.len() != raw.order {
            return Err(Error::InvalidTable(format!(
                "declared order {} but {} rows",
                raw.order,
                raw.mul.len()
            )));
        }
        GroupTable::from_rows(raw.name, raw.mul, None, BTreeMap::new())
    }

    pub fn to_json(&self) -> String {
        let raw = TableJson {
            order: self.order,
            mul: (0..self.order)
                .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
                .collect(),
            name: self.name.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("table serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    order: usize,
    mul: Vec<Vec<usize>>,
    #[serde(default)]
    name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInvariants {
    pub order: usize,
    pub exponent: usize,
    pub abelian: bool,
    pub center_order: usize,
    pub commutator_order: usize,
    pub torsion_count: usize,
    pub order_histogram: BTreeMap<usize, usize>,
}

/// Sorted element set closed under the parent's multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elems: Vec<usize>,
}

impl Subgroup {
    /// Validates closure, identity and inverses against the parent table.
    pub fn new(parent: &GroupTable, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::BadSubgroup("missing identity".into()));
        }
        let set: HashSet<usize> = elems.iter().copied().collect();
        for &a in &elems {
            if !set.contains(&parent.inv(a)) {
                return Err(Error::BadSubgroup(format!(
                    "not closed under inverse at {}",
                    parent.elem_name(a)
                )));
            }
            for &b in &elems {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(Error::BadSubgroup(format!(
                        "not closed under product at ({}, {})",
                        parent.elem_name(a),
                        parent.elem_name(b)
                    )));
                }
            }
        }
        Ok(Subgroup { elems })
    }

    pub fn generated(parent: &GroupTable, gens: &[usize]) -> Self {
        parent.closure(gens)
    }

    pub fn trivial() -> Self {
        Subgroup { elems: vec![0] }
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elems.binary_search(&g).is_ok()
    }

    pub fn is_normal(&self, parent: &GroupTable) -> bool {
        for &h in &self.elems {
            for g in 0..parent.order() {
                if !self.contains(parent.conj(h, g)) {
                    return false;
                }
            }
        }
        true
    }

    fn check_subgroup_of(&self, parent: &GroupTable) -> Result<()> {
        if self.elems.iter().any(|&e| e >= parent.order()) {
            return Err(Error::BadSubgroup("element outside parent".into()));
        }
        Ok(())
    }

    pub fn describe(&self, parent: &GroupTable) -> String {
        if self.order() == 1 {
            return "<1>".to_string();
        }
        // name a small generating set
        let mut gens: Vec<usize> = Vec::new();
        let mut closure = Subgroup::trivial();
        for &g in &self.elems {
            if g != 0 && !closure.contains(g) {
                gens.push(g);
                closure = parent.closure(&gens);
                if closure.order() == self.order() {
                    break;
                }
            }
        }
        let names: Vec<&str> = gens.iter().map(|&g| parent.elem_name(g)).collect();
        format!("<{}>", names.join(","))
    }
}

/// Natural projection onto a quotient group.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub source: Arc<GroupTable>,
    pub target: Arc<GroupTable>,
    map: Vec<u16>,
    kernel: Subgroup,
}

impl QuotientMap {
    #[inline]
    pub fn image(&self, g: usize) -> usize {
        self.map[g] as usize
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Smallest preimage of each target element.
    pub fn section(&self) -> Vec<usize> {
        let mut sec = vec![usize::MAX; self.target.order()];
        for g in (0..self.source.order()).rev() {
            sec[self.image(g)] = g;
        }
        sec
    }

    /// Validates surjectivity, the homomorphism law and the kernel.
    pub fn verify(&self) -> Result<()> {
        let n = self.source.order();
        let mut hit = vec![false; self.target.order()];
        for g in 0..n {
            hit[self.image(g)] = true;
        }
        if !hit.iter().all(|&b| b) {
            return Err(Error::InvalidTable("quotient map not surjective".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if self.image(self.source.mul(a, b)) != self.target.mul(self.image(a), self.image(b))
                {
                    return Err(Error::InvalidTable("quotient map not a homomorphism".into()));
                }
            }
        }
        for g in 0..n {
            let in_kernel = self.image(g) == 0;
            if in_kernel != self.kernel.contains(g) {
                return Err(Error::InvalidTable("kernel mismatch".into()));
            }
        }
        if self.target.order() * self.kernel.order() != n {
            return Err(Error::InvalidTable("order arithmetic mismatch".into()));
        }
        Ok(())
    }
}

/// Set intersection of sorted element lists.
pub fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let bs: HashSet<usize> = b.iter().copied().collect();
    a.iter().copied().filter(|x| bs.contains(x)).collect()
}

/// Memoized registry lookup used all over the crate: builds the named group.
pub fn build_group(name: &str) -> Result<Arc<GroupTable>> {
    use std::sync::Mutex;
    use std::sync::OnceLock;
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<GroupTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(name) {
        return Ok(Arc::clone(t));
    }
    let desc = GroupDescriptor::parse(name)?;
    let table = desc.build()?;
    cache
        .lock()
        .unwrap()
        .insert(name.to_string(), Arc::clone(&table));
    Ok(table)
}
