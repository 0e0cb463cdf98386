//! Finite groups by multiplication table, words in free generators, and
//! homomorphisms between tables.
//!
//! Elements are plain indices into the table; names are only for I/O.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::report::Report;

/// Index of a group element in its table.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    Empty,
    #[error("multiplication table is not {n}x{n}")]
    Shape { n: usize },
    #[error("table entry {value} out of range at ({a}, {b})")]
    EntryOutOfRange { a: usize, b: usize, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(String),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("generator x{index} used but only {available} values assigned")]
    GeneratorOutOfRange { index: usize, available: usize },
    #[error("element index {0} out of range")]
    ElementOutOfRange(usize),
    #[error("{0}")]
    Invalid(String),
}

/// A finite group given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    mul: Vec<Vec<Elem>>,
    identity: Elem,
    inverse: Vec<Elem>,
}

/// Raw table data as stored in group JSON files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGroup {
    pub names: Vec<String>,
    pub mul: Vec<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    Symmetric(usize),
    Table(RawGroup),
}

pub fn build_group(kind: GroupKind) -> Result<GroupTable, GroupError> {
    match kind {
        GroupKind::Cyclic(n) => GroupTable::cyclic(n),
        GroupKind::Symmetric(n) => GroupTable::symmetric(n),
        GroupKind::Table(raw) => GroupTable::from_table(raw.names, raw.mul),
    }
}

impl GroupTable {
    /// Validates a raw table: closure, identity, inverses, associativity.
    pub fn from_table(names: Vec<String>, mul: Vec<Vec<Elem>>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(GroupError::DuplicateName(name.clone()));
            }
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(GroupError::Shape { n });
        }
        for (a, row) in mul.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { a, b, value: v });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| mul[g][h] == identity && mul[h][g] == identity)
                .ok_or_else(|| GroupError::NoInverse(names[g].clone()))?;
            inverse.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a][b];
                for c in 0..n {
                    if mul[ab][c] != mul[a][mul[b][c]] {
                        return Err(GroupError::NotAssociative(
                            names[a].clone(),
                            names[b].clone(),
                            names[c].clone(),
                        ));
                    }
                }
            }
        }
        Ok(GroupTable { names, mul, identity, inverse })
    }

    /// `Z/n` with elements named `0..n-1`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let names = (0..n).map(|k| k.to_string()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(names, mul)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("Z/1 is a group")
    }

    /// `S_n` with elements in lexicographic order of their one-line notation
    /// (so the identity is index 0), named in 1-based cycle notation.
    ///
    /// Products compose right to left: `(1 2)(1 3) = (1 3 2)`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let perms = permutations(n);
        let index: HashMap<&[usize], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mul = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = (0..n).map(|x| s[t[x]]).collect();
                        index[st.as_slice()]
                    })
                    .collect()
            })
            .collect();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(names, mul)
    }

    /// The direct product with elements `(a,b)` in row-major order.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Self {
        let (na, nb) = (a.order(), b.order());
        let names = (0..na * nb)
            .map(|k| format!("({},{})", a.names[k / nb], b.names[k % nb]))
            .collect();
        let mul = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        Self::from_table(names, mul).expect("direct product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a][b]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    /// `b a b⁻¹`.
    pub fn conjugate(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(b, a), self.inv(b))
    }

    pub fn pow(&self, a: Elem, exp: i64) -> Elem {
        let base = if exp < 0 { self.inv(a) } else { a };
        (0..exp.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<Elem, GroupError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn to_raw(&self) -> RawGroup {
        RawGroup { names: self.names.clone(), mul: self.mul.clone() }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

/// An orientation sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be 1 or -1, got {other}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

/// One letter `x_gen^exp` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub exp: Sign,
}

impl Letter {
    pub fn new(gen: usize, exp: Sign) -> Self {
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, exp: self.exp.flip() }
    }
}

/// A word in free generators `x_0, x_1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// `x_gen^k` for a signed integer exponent.
    pub fn power(gen: usize, k: i64) -> Self {
        let exp = if k < 0 { Sign::Minus } else { Sign::Plus };
        Word { letters: vec![Letter::new(gen, exp); k.unsigned_abs() as usize] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Free reduction followed by cancellation across the wrap point.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.free_reduce().letters;
        while w.len() >= 2 && w[0] == w[w.len() - 1].inverse() {
            w.pop();
            w.remove(0);
        }
        Word { letters: w }
    }

    /// Whether the two words are conjugate in the free group.
    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        let a = self.cyclic_reduce().letters;
        let b = other.cyclic_reduce().letters;
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|r| a[r..].iter().chain(&a[..r]).eq(b.iter()))
    }

    /// Replaces every letter by a word: `x_g^± ↦ sub(g)^±`.
    pub fn substitute(&self, sub: impl Fn(usize) -> Word) -> Word {
        let mut letters = Vec::new();
        for l in &self.letters {
            let w = sub(l.gen);
            match l.exp {
                Sign::Plus => letters.extend(w.letters),
                Sign::Minus => letters.extend(w.inverse().letters),
            }
        }
        Word { letters }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        // Runs of equal letters print as powers: x1^3 x2^-1.
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let k = (j - i) as i64 * l.exp.value() as i64;
            if k == 1 {
                parts.push(format!("x{}", l.gen + 1));
            } else {
                parts.push(format!("x{}^{}", l.gen + 1, k));
            }
            i = j;
        }
        f.write_str(&parts.join(" "))
    }
}

/// Evaluates `w` at `assignment[k]` for generator `x_k`.
pub fn evaluate_word(w: &Word, assignment: &[Elem], g: &GroupTable) -> Result<Elem, GroupError> {
    let mut acc = g.identity();
    for l in &w.letters {
        let &a = assignment
            .get(l.gen)
            .ok_or(GroupError::GeneratorOutOfRange { index: l.gen, available: assignment.len() })?;
        if a >= g.order() {
            return Err(GroupError::ElementOutOfRange(a));
        }
        let v = match l.exp {
            Sign::Plus => a,
            Sign::Minus => g.inv(a),
        };
        acc = g.mul(acc, v);
    }
    Ok(acc)
}

/// A map between group tables, checked by [`validate_hom`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub source: GroupTable,
    pub target: GroupTable,
    pub image: Vec<Elem>,
}

impl GroupHom {
    pub fn new(source: GroupTable, target: GroupTable, image: Vec<Elem>) -> Result<Self, GroupError> {
        if image.len() != source.order() {
            return Err(GroupError::Invalid(format!(
                "image has {} entries for a source of order {}",
                image.len(),
                source.order()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&t| t >= target.order()) {
            return Err(GroupError::ElementOutOfRange(bad));
        }
        Ok(GroupHom { source, target, image })
    }

    /// The sign character `S_n → Z/2`.
    pub fn sign(n: usize) -> Result<Self, GroupError> {
        let source = GroupTable::symmetric(n)?;
        let target = GroupTable::cyclic(2)?;
        let image = permutations(n).iter().map(|p| parity(p)).collect();
        Self::new(source, target, image)
    }

    /// Reduction `Z/n → Z/m`; requires `m | n`.
    pub fn reduction(n: usize, m: usize) -> Result<Self, GroupError> {
        if m == 0 || n % m != 0 {
            return Err(GroupError::Invalid(format!("Z/{n} -> Z/{m} needs {m} | {n}")));
        }
        Self::new(GroupTable::cyclic(n)?, GroupTable::cyclic(m)?, (0..n).map(|k| k % m).collect())
    }

    /// The map to the trivial group.
    pub fn to_trivial(source: GroupTable) -> Self {
        let image = vec![0; source.order()];
        GroupHom { source, target: GroupTable::trivial(), image }
    }

    pub fn identity(g: GroupTable) -> Self {
        let image = g.elements().collect();
        GroupHom { source: g.clone(), target: g, image }
    }

    pub fn apply(&self, g: Elem) -> Elem {
        self.image[g]
    }

    /// `φ⁻¹(alpha)` in ascending index order.
    pub fn fiber(&self, alpha: Elem) -> Vec<Elem> {
        self.source.elements().filter(|&g| self.image[g] == alpha).collect()
    }
}

fn parity(p: &[usize]) -> Elem {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

/// Checks `φ(gh) = φ(g)φ(h)` on all pairs and `φ(1) = 1`.
pub fn validate_hom(h: &GroupHom) -> Report {
    let mut r = Report::new("group homomorphism");
    let (s, t) = (&h.source, &h.target);
    r.check(h.image.len() == s.order(), "image length", || {
        format!("{} images for {} elements", h.image.len(), s.order())
    });
    if !r.passed() {
        return r;
    }
    r.check(h.image[s.identity()] == t.identity(), "identity", || {
        format!("φ(1) = {}", t.name(h.image[s.identity()]))
    });
    for a in s.elements() {
        for b in s.elements() {
            let lhs = h.image[s.mul(a, b)];
            let rhs = t.mul(h.image[a], h.image[b]);
            r.check(lhs == rhs, "multiplicative", || {
                format!(
                    "φ({}·{}) = {} but φ({})φ({}) = {}",
                    s.name(a),
                    s.name(b),
                    t.name(lhs),
                    s.name(a),
                    s.name(b),
                    t.name(rhs)
                )
            });
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(gen: usize) -> Letter {
        Letter::new(gen, Sign::Plus)
    }

    #[test]
    fn cyclic_two() {
        let g = GroupTable::cyclic(2).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn symmetric_three_has_three_involutions() {
        let g = GroupTable::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.name(0), "()");
        // Independent count: permutations p of {0,1,2} with p∘p = id, p ≠ id.
        let oracle = permutations(3)
            .iter()
            .filter(|p| (0..3).all(|i| p[p[i]] == i) && (0..3).any(|i| p[i] != i))
            .count();
        let involutions = g.elements().filter(|&a| g.element_order(a) == 2).count();
        assert_eq!(involutions, oracle);
        assert_eq!(involutions, 3);
    }

    #[test]
    fn broken_table_is_rejected() {
        let mut raw = GroupTable::cyclic(3).unwrap().to_raw();
        raw.mul[1][1] = 0;
        raw.mul[1][2] = 2;
        let err = build_group(GroupKind::Table(raw)).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative(..) | GroupError::NoInverse(_)), "{err}");
    }

    #[test]
    fn non_latin_table_reports_first_failing_triple() {
        let names = vec!["e".into(), "a".into(), "b".into(), "c".into()];
        // Klein-like table with one corrupted pair that keeps identity/inverses.
        let mut mul = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
        mul[1][2] = 2;
        mul[2][1] = 2;
        let err = GroupTable::from_table(names, mul).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative(..)), "{err}");
    }

    #[test]
    fn word_evaluation_examples() {
        let z2 = GroupTable::cyclic(2).unwrap();
        assert_eq!(evaluate_word(&Word::power(0, 2), &[1], &z2).unwrap(), 0);

        let z6 = GroupTable::cyclic(6).unwrap();
        let comm = Word::new(vec![x(0), x(1), x(0).inverse(), x(1).inverse()]);
        for a in z6.elements() {
            for b in z6.elements() {
                assert_eq!(evaluate_word(&comm, &[a, b], &z6).unwrap(), 0);
            }
        }

        let s3 = GroupTable::symmetric(3).unwrap();
        let t12 = s3.index_of("(1 2)").unwrap();
        let t13 = s3.index_of("(1 3)").unwrap();
        let w = Word::new(vec![x(0), x(1)]);
        let got = evaluate_word(&w, &[t12, t13], &s3).unwrap();
        // Oracle: compose the permutations by hand, right to left.
        let p12 = [1, 0, 2];
        let p13 = [2, 1, 0];
        let prod: Vec<usize> = (0..3).map(|i| p12[p13[i]]).collect();
        assert_eq!(s3.name(got), cycle_notation(&prod));
        assert_eq!(s3.name(got), "(1 3 2)");
        assert_eq!(s3.element_order(got), 3);
    }

    #[test]
    fn word_generator_out_of_range() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let err = evaluate_word(&Word::power(3, 1), &[0], &z2).unwrap_err();
        assert_eq!(err, GroupError::GeneratorOutOfRange { index: 3, available: 1 });
    }

    #[test]
    fn sign_hom_passes_all_36_pairs() {
        let h = GroupHom::sign(3).unwrap();
        let r = validate_hom(&h);
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks_run, 1 + 1 + 36);
        // Independent oracle: sign = (-1)^(n - #cycles).
        for g in h.source.elements() {
            let name = h.source.name(g);
            let transpositions: usize = if name == "()" {
                0
            } else {
                name.split(')').filter(|c| !c.is_empty()).map(|c| c.split(' ').count() - 1).sum()
            };
            assert_eq!(h.apply(g), transpositions % 2);
        }
    }

    #[test]
    fn constant_map_to_identity_is_a_hom() {
        let h = GroupHom::to_trivial(GroupTable::symmetric(3).unwrap());
        assert!(validate_hom(&h).passed());
        let z4 = GroupTable::cyclic(4).unwrap();
        let z2 = GroupTable::cyclic(2).unwrap();
        let h = GroupHom::new(z4, z2, vec![0; 4]).unwrap();
        assert!(validate_hom(&h).passed());
    }

    #[test]
    fn inconsistent_transposition_images_fail() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let z2 = GroupTable::cyclic(2).unwrap();
        let mut image = GroupHom::sign(3).unwrap().image;
        let t12 = s3.index_of("(1 2)").unwrap();
        image[t12] = 0;
        let h = GroupHom::new(s3.clone(), z2, image).unwrap();
        let r = validate_hom(&h);
        assert!(!r.passed());
        // Witness: (1 2)(1 3) is a 3-cycle, so both sides must agree on parity.
        let t13 = s3.index_of("(1 3)").unwrap();
        let lhs = h.image[s3.mul(t12, t13)];
        let rhs = (h.image[t12] + h.image[t13]) % 2;
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn reduction_and_fibers() {
        let h = GroupHom::reduction(4, 2).unwrap();
        assert!(validate_hom(&h).passed());
        assert_eq!(h.fiber(1), vec![1, 3]);
        assert!(GroupHom::reduction(4, 3).is_err());
    }

    #[test]
    fn direct_product_is_a_group() {
        let g = GroupTable::direct_product(&GroupTable::symmetric(3).unwrap(), &GroupTable::cyclic(2).unwrap());
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        assert_eq!(g.name(g.identity()), "((),0)");
    }

    #[test]
    fn conjugacy_in_free_group() {
        let w = Word::new(vec![x(0), x(1), x(1).inverse(), x(0), x(1)]);
        let rotated = Word::new(vec![x(1), x(0), x(0)]);
        assert!(w.is_conjugate_to(&rotated));
        assert!(!w.is_conjugate_to(&Word::power(0, 2)));
        assert_eq!(Word::new(vec![x(0), x(0).inverse()]).free_reduce(), Word::default());
    }

    fn arb_word(gens: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..gens, any::<bool>()), 0..12).prop_map(|v| {
            Word::new(v.into_iter().map(|(g, p)| Letter::new(g, if p { Sign::Plus } else { Sign::Minus })).collect())
        })
    }

    proptest! {
        #[test]
        fn evaluation_is_a_monoid_map(w1 in arb_word(3), w2 in arb_word(3), a in prop::collection::vec(0usize..6, 3)) {
            let s3 = GroupTable::symmetric(3).unwrap();
            let lhs = evaluate_word(&w1.concat(&w2), &a, &s3).unwrap();
            let rhs = s3.mul(evaluate_word(&w1, &a, &s3).unwrap(), evaluate_word(&w2, &a, &s3).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_of_inverse(w in arb_word(3), a in prop::collection::vec(0usize..6, 3)) {
            let s3 = GroupTable::symmetric(3).unwrap();
            let lhs = evaluate_word(&w.inverse(), &a, &s3).unwrap();
            prop_assert_eq!(lhs, s3.inv(evaluate_word(&w, &a, &s3).unwrap()));
        }

        #[test]
        fn reduction_preserves_value(w in arb_word(2), a in prop::collection::vec(0usize..6, 2)) {
            let s3 = GroupTable::symmetric(3).unwrap();
            let v = evaluate_word(&w, &a, &s3).unwrap();
            prop_assert_eq!(evaluate_word(&w.free_reduce(), &a, &s3).unwrap(), v);
            let c = evaluate_word(&w.cyclic_reduce(), &a, &s3).unwrap();
            // Cyclic reduction changes the value only up to conjugacy.
            prop_assert!(s3.elements().any(|b| s3.conjugate(v, b) == c));
        }
    }
}
