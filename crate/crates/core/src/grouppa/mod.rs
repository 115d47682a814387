//! Dimensions of group planar algebras `P^{G,D}` through alternating words.

use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

/// Largest `|D|^{2k}` accepted by [`dim_pk`].
pub const GROUP_WORD_GUARD: u128 = 10_000_000;

/// Finite group given by its Cayley table: `table[g][h] = gh`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 || identity >= n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Invalid("Cayley table must be square with entries in range".into()));
        }
        if (0..n).any(|g| table[identity][g] != g || table[g][identity] != g) {
            return Err(Error::Invalid(format!("{identity} is not an identity")));
        }
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::Invalid(format!("element {g} has no inverse")))?;
        }
        let assoc = |a: usize, b: usize, c: usize| table[table[a][b]][c] == table[a][table[b][c]];
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::Invalid(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..100_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::Invalid(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
        Ok(FiniteGroup { table, identity, inverse })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with `g h = g + h mod n`.
    pub fn cyclic(n: usize) -> Self {
        let n = n.max(1);
        Self::from_table((0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect(), 0).expect("cyclic group")
    }

    /// `(Z/2)^n` with product given by xor of bit vectors.
    pub fn z2_power(n: u32) -> Self {
        let q = 1usize << n;
        Self::from_table((0..q).map(|g| (0..q).map(|h| g ^ h).collect()).collect(), 0).expect("elementary abelian group")
    }

    /// Direct product; `(g, h)` is `g * |H| + h`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (m, n) = (a.order(), b.order());
        let table = (0..m * n).map(|x| (0..m * n).map(|y| a.mul(x / n, y / n) * n + b.mul(x % n, y % n)).collect()).collect();
        Self::from_table(table, a.identity * n + b.identity).expect("direct product")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn to_json(&self) -> Value {
        json!({"order": self.order(), "table": self.table, "identity": self.identity})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("group: {m}"));
        let table: Vec<Vec<usize>> = serde_json::from_value(v.get("table").cloned().ok_or_else(|| bad("missing table"))?).map_err(|e| bad(&e.to_string()))?;
        if let Some(o) = v.get("order").and_then(Value::as_u64) {
            if o as usize != table.len() {
                return Err(bad(&format!("order {o} but table has {} rows", table.len())));
            }
        }
        let identity = v.get("identity").and_then(Value::as_u64).unwrap_or(0) as usize;
        Self::from_table(table, identity)
    }
}

/// Labels `D` and their images in the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    pub labels: Vec<String>,
    pub image: Vec<usize>,
}

impl LabelMap {
    pub fn new(labels: Vec<String>, image: Vec<usize>, group: &FiniteGroup) -> Result<Self> {
        if labels.is_empty() || labels.len() != image.len() {
            return Err(Error::Invalid("label map needs one image per label and at least one label".into()));
        }
        if let Some(g) = image.iter().find(|&&g| g >= group.order()) {
            return Err(Error::Invalid(format!("image {g} outside the group")));
        }
        Ok(LabelMap { labels, image })
    }

    /// Labels `l0, l1, ...` sent to the given elements.
    pub fn from_images(image: Vec<usize>, group: &FiniteGroup) -> Result<Self> {
        Self::new((0..image.len()).map(|i| format!("l{i}")).collect(), image, group)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Some label maps to the identity.
    pub fn contains_identity(&self, group: &FiniteGroup) -> bool {
        self.image.contains(&group.identity())
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == name).ok_or_else(|| Error::Invalid(format!("unknown label {name}")))
    }

    /// `D -> G`, `d -> image(d) g`.
    pub fn translate(&self, group: &FiniteGroup, g: usize) -> LabelMap {
        LabelMap { labels: self.labels.clone(), image: self.image.iter().map(|&x| group.mul(x, g)).collect() }
    }

    pub fn to_json(&self) -> Value {
        json!({"labels": self.labels, "image": self.image})
    }

    pub fn from_json(v: &Value, group: &FiniteGroup) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("label map: {m}"));
        let image: Vec<usize> = serde_json::from_value(v.get("image").cloned().ok_or_else(|| bad("missing image"))?).map_err(|e| bad(&e.to_string()))?;
        let labels: Vec<String> = match v.get("labels") {
            Some(l) => serde_json::from_value(l.clone()).map_err(|e| bad(&e.to_string()))?,
            None => (0..image.len()).map(|i| format!("l{i}")).collect(),
        };
        Self::new(labels, image, group)
    }
}

/// `alt(g_1 ... g_m) = g_1 g_2^-1 g_3 g_4^-1 ...` on label indices.
pub fn alt(group: &FiniteGroup, labels: &LabelMap, word: &[usize]) -> Result<usize> {
    let mut acc = group.identity();
    for (i, &l) in word.iter().enumerate() {
        let g = *labels.image.get(l).ok_or_else(|| Error::Invalid(format!("unknown label index {l}")))?;
        acc = group.mul(acc, if i % 2 == 0 { g } else { group.inv(g) });
    }
    Ok(acc)
}

pub fn alt_named(group: &FiniteGroup, labels: &LabelMap, word: &[&str]) -> Result<usize> {
    let idx = word.iter().map(|w| labels.index(w)).collect::<Result<Vec<_>>>()?;
    alt(group, labels, &idx)
}

/// Number of words in `D^{2k}` with trivial alternating product.
pub fn dim_pk(group: &FiniteGroup, labels: &LabelMap, k: usize) -> Result<u128> {
    let d = labels.len() as u128;
    match d.checked_pow(2 * k as u32) {
        Some(n) if n <= GROUP_WORD_GUARD => {}
        _ => return Err(Error::SizeGuard(format!("|D|^(2k) = {d}^{}", 2 * k))),
    }
    // Distribution of alt over prefixes, two letters at a time.
    let n = group.order();
    let mut count = vec![0u128; n];
    count[group.identity()] = 1;
    for _ in 0..k {
        let mut next = vec![0u128; n];
        for (g, &c) in count.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &a in &labels.image {
                let ga = group.mul(g, a);
                for &b in &labels.image {
                    next[group.mul(ga, group.inv(b))] += c;
                }
            }
        }
        count = next;
    }
    Ok(count[group.identity()])
}

/// Cyclic shift by two letters.
pub fn rotate_word<T: Clone>(word: &[T]) -> Result<Vec<T>> {
    if word.len() % 2 == 1 {
        return Err(Error::Invalid(format!("word of odd length {}", word.len())));
    }
    if word.is_empty() {
        return Ok(vec![]);
    }
    let mut w = word[2..].to_vec();
    w.extend_from_slice(&word[..2]);
    Ok(w)
}
