//! Cayley-table models of the cyclic, dihedral and dicyclic families and their
//! direct products.
//!
//! Elements of `D_2n` and `Dic_4n` are stored in the normal form `b^j a^i`
//! (`j ∈ {0, 1}`) with index `j·m + i`, where `m` is the order of `a`. The
//! rotation subgroup `⟨a⟩` is therefore exactly the index range `0..m`.

mod subgroup;

use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use subgroup::{
    all_subgroups, all_subgroups_bounded, are_conjugate_subgroups, describe_subgroup, generated_subgroup, Model,
    Subgroup, SubgroupKind, DEFAULT_MAX_ORDER,
};

/// Which construction produced a group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Cyclic(usize),
    /// `D_2n`, the parameter is `n`.
    Dihedral(usize),
    /// `Dic_4n`, the parameter is `n`.
    Dicyclic(usize),
    Product(Box<Family>, Box<Family>),
}

impl Family {
    pub fn group_order(&self) -> usize {
        match self {
            Family::Cyclic(n) => *n,
            Family::Dihedral(n) => 2 * n,
            Family::Dicyclic(n) => 4 * n,
            Family::Product(l, r) => l.group_order() * r.group_order(),
        }
    }

    /// Short name: `C5`, `D10`, `Dic12`, `C2xC2`.
    pub fn name(&self) -> String {
        match self {
            Family::Cyclic(n) => format!("C{n}"),
            Family::Dihedral(n) => format!("D{}", 2 * n),
            Family::Dicyclic(n) => format!("Dic{}", 4 * n),
            Family::Product(l, r) => format!("{}x{}", l.name(), r.name()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The three one-parameter families, as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Cyclic,
    Dihedral,
    Dicyclic,
}

impl FamilyKind {
    pub fn family(self, n: usize) -> Family {
        match self {
            FamilyKind::Cyclic => Family::Cyclic(n),
            FamilyKind::Dihedral => Family::Dihedral(n),
            FamilyKind::Dicyclic => Family::Dicyclic(n),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Cyclic => "cyclic",
            FamilyKind::Dihedral => "dihedral",
            FamilyKind::Dicyclic => "dicyclic",
        }
    }

    /// Order of the `n`-th member, `None` on overflow.
    pub fn group_order(self, n: usize) -> Option<usize> {
        match self {
            FamilyKind::Cyclic => Some(n),
            FamilyKind::Dihedral => n.checked_mul(2),
            FamilyKind::Dicyclic => n.checked_mul(4),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(FamilyKind::Cyclic),
            "dihedral" => Ok(FamilyKind::Dihedral),
            "dicyclic" => Ok(FamilyKind::Dicyclic),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.reps.len()
    }
}

#[derive(Debug)]
pub struct FiniteGroup {
    family: Family,
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    labels: Vec<String>,
    generators: Vec<usize>,
    element_orders: Vec<usize>,
    rotation_order: Option<usize>,
    classes: ConjugacyClasses,
}

/// Groups built by this crate are determined by their construction.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

impl Eq for FiniteGroup {}

/// Builds the group described by `family`.
pub fn construct(family: &Family) -> Result<Arc<FiniteGroup>> {
    match family {
        Family::Cyclic(n) => FiniteGroup::cyclic(*n),
        Family::Dihedral(n) => FiniteGroup::dihedral(*n),
        Family::Dicyclic(n) => FiniteGroup::dicyclic(*n),
        Family::Product(l, r) => FiniteGroup::product(&*construct(l)?, &*construct(r)?),
    }
}

fn power_label(letter: char, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => letter.to_string(),
        _ => format!("{letter}^{e}"),
    }
}

fn or_one(s: String) -> String {
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group needs n >= 1".into()));
        }
        let mul = |x: usize, y: usize| (x + y) % n;
        let labels = (0..n).map(|i| or_one(power_label('a', i))).collect();
        let gens = vec![1 % n];
        Self::build(Family::Cyclic(n), n, mul, labels, gens, None)
    }

    pub fn dihedral(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidParameter("dihedral group needs n >= 1".into()));
        }
        Self::rotation_reflection(Family::Dihedral(n), n, 0)
    }

    pub fn dicyclic(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidParameter("dicyclic group needs n >= 1".into()));
        }
        Self::rotation_reflection(Family::Dicyclic(n), 2 * n, n)
    }

    /// Common model of `⟨a, b | a^m = 1, b² = a^s, a^i b = b a^{-i}⟩` with
    /// elements `b^j a^i` at index `j·m + i`.
    fn rotation_reflection(family: Family, m: usize, b_squared: usize) -> Result<Arc<Self>> {
        let order = 2 * m;
        let split = |x: usize| (x / m, x % m);
        let mul = |x: usize, y: usize| {
            let (j1, i1) = split(x);
            let (j2, i2) = split(y);
            // a^{i1} b^{j2} = b^{j2} a^{±i1}
            let moved = if j2 == 1 { (m - i1) % m } else { i1 };
            let mut i = moved + i2;
            let mut j = j1 + j2;
            if j == 2 {
                j = 0;
                i += b_squared;
            }
            j * m + i % m
        };
        let dicyclic = b_squared != 0;
        let labels = (0..order)
            .map(|x| {
                let (j, i) = split(x);
                if dicyclic && j == 0 && i == b_squared {
                    "b^2".to_string()
                } else {
                    or_one(format!("{}{}", power_label('b', j), power_label('a', i)))
                }
            })
            .collect();
        let gens = vec![1 % m, m];
        Self::build(family, order, mul, labels, gens, Some(m))
    }

    /// Direct product with element `(x, y)` at index `x·|right| + y`. Generators
    /// of the right factor are renamed to follow those of the left.
    pub fn product(left: &FiniteGroup, right: &FiniteGroup) -> Result<Arc<Self>> {
        let (nl, nr) = (left.order, right.order);
        let mul = |x: usize, y: usize| left.mul(x / nr, y / nr) * nr + right.mul(x % nr, y % nr);
        let shift = left.generators.len() as u8;
        let rename = |s: &str| -> String {
            s.chars().map(|c| if c.is_ascii_lowercase() { (c as u8 + shift) as char } else { c }).collect()
        };
        let labels = (0..nl * nr)
            .map(|x| {
                let l = &left.labels[x / nr];
                let r = &right.labels[x % nr];
                let l = if l == "1" { String::new() } else { l.clone() };
                let r = if r == "1" { String::new() } else { rename(r) };
                or_one(l + &r)
            })
            .collect();
        let mut gens: Vec<usize> = left.generators.iter().map(|&g| g * nr + right.identity).collect();
        gens.extend(right.generators.iter().map(|&g| left.identity * nr + g));
        let family = Family::Product(Box::new(left.family.clone()), Box::new(right.family.clone()));
        Self::build(family, nl * nr, mul, labels, gens, None)
    }

    fn build(
        family: Family,
        order: usize,
        mul_fn: impl Fn(usize, usize) -> usize,
        labels: Vec<String>,
        generators: Vec<usize>,
        rotation_order: Option<usize>,
    ) -> Result<Arc<Self>> {
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                mul.push(mul_fn(x, y));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] == x && mul[x * order + e] == x))
            .ok_or_else(|| Error::InternalConsistency(format!("{family}: no identity element")))?;
        let inv = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| mul[x * order + y] == identity)
                    .ok_or_else(|| Error::InternalConsistency(format!("{family}: element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut group = FiniteGroup {
            family,
            order,
            mul,
            identity,
            inv,
            labels,
            generators,
            element_orders: Vec::new(),
            rotation_order,
            classes: ConjugacyClasses { class_of: vec![], reps: vec![], sizes: vec![], members: vec![] },
        };
        group.verify_axioms()?;
        group.element_orders = (0..order).map(|x| group.compute_element_order(x)).collect();
        group.classes = group.compute_classes();
        Ok(Arc::new(group))
    }

    /// Latin-square, identity, inverse and associativity checks. Associativity
    /// is exhaustive up to order 64 and sampled on 10^5 seeded triples above.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        let fail = |msg: String| Err(Error::InternalConsistency(format!("{}: {msg}", self.family)));
        let mut seen = vec![0usize; n];
        for x in 0..n {
            for y in 0..n {
                let row = self.mul(x, y);
                if seen[row] == 2 * x + 1 {
                    return fail(format!("row {x} repeats an entry"));
                }
                seen[row] = 2 * x + 1;
            }
            for y in 0..n {
                let col = self.mul(y, x);
                if seen[col] == 2 * x + 2 {
                    return fail(format!("column {x} repeats an entry"));
                }
                seen[col] = 2 * x + 2;
            }
            if self.mul(x, self.inv[x]) != self.identity || self.mul(self.inv[x], x) != self.identity {
                return fail(format!("inverse law fails at {x}"));
            }
        }
        let assoc = |x: usize, y: usize, z: usize| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z));
        if n <= 64 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !assoc(x, y, z) {
                            return fail(format!("associativity fails at ({x}, {y}, {z})"));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5347_5031);
            for _ in 0..100_000 {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(x, y, z) {
                    return fail(format!("associativity fails at ({x}, {y}, {z})"));
                }
            }
        }
        Ok(())
    }

    fn compute_element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != self.identity {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    /// Orbits of `g ↦ x g x⁻¹`, ordered by their minimal element index.
    fn compute_classes(&self) -> ConjugacyClasses {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut members = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            let mut orbit: Vec<usize> = (0..n).map(|x| self.conjugate(g, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &h in &orbit {
                class_of[h] = c;
            }
            reps.push(g);
            members.push(orbit);
        }
        let sizes = members.iter().map(Vec::len).collect();
        ConjugacyClasses { class_of, reps, sizes, members }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn name(&self) -> String {
        self.family.name()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `x g x⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inv[x])
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders[x]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Named generators: `[a]` for cyclic groups, `[a, b]` for the dihedral and
    /// dicyclic families, concatenated factor generators for products.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Order of `a` for the dihedral and dicyclic families.
    pub fn rotation_order(&self) -> Option<usize> {
        self.rotation_order
    }

    /// Whether `x` lies in the rotation subgroup `⟨a⟩`.
    pub fn is_rotation(&self, x: usize) -> bool {
        match self.rotation_order {
            Some(m) => x < m,
            None => true,
        }
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Parses a normal-form word such as `1`, `a^3`, `ba^2` or `b^2` by
    /// multiplying generator powers left to right.
    pub fn parse_label(&self, s: &str) -> Result<usize> {
        let bad = || Error::Parse(format!("bad element label {s:?} for {}", self.family));
        let s = s.trim();
        if s == "1" {
            return Ok(self.identity);
        }
        if s.is_empty() {
            return Err(bad());
        }
        let chars: Vec<char> = s.chars().collect();
        let mut acc = self.identity;
        let mut i = 0;
        while i < chars.len() {
            let letter = chars[i];
            if !letter.is_ascii_lowercase() {
                return Err(bad());
            }
            let g = *self.generators.get((letter as u8 - b'a') as usize).ok_or_else(bad)?;
            i += 1;
            let mut exp: i64 = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                exp = digits.parse().map_err(|_| bad())?;
            }
            let ord = self.element_order(g) as i64;
            let e = exp.rem_euclid(ord) as usize;
            acc = self.mul(acc, self.pow(g, e));
        }
        Ok(acc)
    }
}
