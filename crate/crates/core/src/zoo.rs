//! Group constructors, a prime-field 2×2 matrix layer for `PSL₂(p)`, and
//! JSON generator files.
//!
//! Spec grammar (whitespace ignored):
//!
//! ```text
//! spec   := S(n) | A(n) | C(n) | D(n) | PSL2(p) | direct(spec, spec, ...) | file:<path>
//! ```
//!
//! `D(n)` is the dihedral group of order `2n` acting on `n` points. `direct`
//! places its factors on consecutive disjoint blocks of points, so degrees add.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bsgs::{Bsgs, GeneratorSet};
use crate::error::{Error, Result};
use crate::perm::Permutation;

const MAX_DIRECT_DEPTH: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Dihedral(usize),
    Psl2(u32),
    Direct(Vec<GroupSpec>),
    File(PathBuf),
}

impl GroupSpec {
    /// Resolves relative `file:` paths against `base`.
    pub fn with_base_dir(self, base: &Path) -> GroupSpec {
        match self {
            GroupSpec::File(p) if p.is_relative() => GroupSpec::File(base.join(p)),
            GroupSpec::Direct(parts) => {
                GroupSpec::Direct(parts.into_iter().map(|s| s.with_base_dir(base)).collect())
            }
            other => other,
        }
    }

    fn direct_depth(&self) -> usize {
        match self {
            GroupSpec::Direct(parts) => 1 + parts.iter().map(GroupSpec::direct_depth).max().unwrap_or(0),
            _ => 0,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "S({n})"),
            GroupSpec::Alternating(n) => write!(f, "A({n})"),
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Dihedral(n) => write!(f, "D({n})"),
            GroupSpec::Psl2(p) => write!(f, "PSL2({p})"),
            GroupSpec::Direct(parts) => {
                f.write_str("direct(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{part}")?;
                }
                f.write_str(")")
            }
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<GroupSpec> {
        let mut parser = SpecParser { text, pos: 0, depth: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(parser.error("trailing input"));
        }
        if spec.direct_depth() > MAX_DIRECT_DEPTH {
            return Err(parser.error("direct(...) nested deeper than 3"));
        }
        validate(&spec).map_err(|reason| Error::InvalidSpec {
            text: text.to_string(),
            reason,
        })?;
        Ok(spec)
    }
}

fn validate(spec: &GroupSpec) -> std::result::Result<(), String> {
    match *spec {
        GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) | GroupSpec::Cyclic(n) if n == 0 => {
            Err("n must be at least 1".into())
        }
        GroupSpec::Dihedral(n) if n < 3 => Err("D(n) needs n >= 3 to act faithfully on n points".into()),
        GroupSpec::Psl2(p) if !(5..=31).contains(&p) || !is_prime(p as u64) => {
            Err(format!("PSL2(p) needs a prime 5 <= p <= 31, got {p}"))
        }
        GroupSpec::Direct(ref parts) => parts.iter().try_for_each(validate),
        _ => Ok(()),
    }
}

struct SpecParser<'a> {
    text: &'a str,
    pos: usize,
    depth: usize,
}

impl SpecParser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::InvalidSpec {
            text: self.text.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(n)
    }

    fn parameter(&mut self) -> Result<usize> {
        self.expect("(")?;
        let n = self.number()?;
        self.expect(")")?;
        Ok(n)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        if self.eat("file:") {
            // inside direct(...) a path ends at the next ',' or ')'
            let len = if self.depth > 0 {
                self.rest().find([',', ')']).unwrap_or(self.rest().len())
            } else {
                self.rest().len()
            };
            let path = PathBuf::from(self.rest()[..len].trim());
            if path.as_os_str().is_empty() {
                return Err(self.error("empty file path"));
            }
            self.pos += len;
            return Ok(GroupSpec::File(path));
        }
        if self.eat("direct") {
            self.expect("(")?;
            self.depth += 1;
            let mut parts = vec![self.spec()?];
            while self.eat(",") {
                parts.push(self.spec()?);
            }
            self.depth -= 1;
            self.expect(")")?;
            return Ok(GroupSpec::Direct(parts));
        }
        if self.eat("PSL2") {
            let p = self.parameter()?;
            let p = u32::try_from(p).map_err(|_| self.error("prime too large"))?;
            return Ok(GroupSpec::Psl2(p));
        }
        for (name, make) in [
            ("S", GroupSpec::Symmetric as fn(usize) -> GroupSpec),
            ("A", GroupSpec::Alternating),
            ("C", GroupSpec::Cyclic),
            ("D", GroupSpec::Dihedral),
        ] {
            if self.eat(name) {
                return Ok(make(self.parameter()?));
            }
        }
        Err(self.error("unknown group family"))
    }
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let points: Vec<usize> = points.into_iter().collect();
    if points.len() < 2 {
        return Permutation::identity(degree);
    }
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

fn symmetric(n: usize) -> GeneratorSet {
    if n == 1 {
        return GeneratorSet::trivial(1).expect("positive degree");
    }
    GeneratorSet::new(n, vec![cycle(n, [1, 2]), cycle(n, 1..=n)])
        .expect("valid generators")
}

fn alternating(n: usize) -> GeneratorSet {
    if n < 3 {
        return GeneratorSet::trivial(n).expect("positive degree");
    }
    let three = cycle(n, [1, 2, 3]);
    let long = if n % 2 == 1 {
        cycle(n, 3..=n)
    } else {
        Permutation::from_cycles(n, &[vec![1, 2], (3..=n).collect()]).expect("valid cycles")
    };
    GeneratorSet::new(n, vec![three, long]).expect("valid generators")
}

fn cyclic(n: usize) -> GeneratorSet {
    GeneratorSet::new(n, vec![cycle(n, 1..=n)]).expect("valid generators")
}

fn dihedral(n: usize) -> GeneratorSet {
    // reflection through the axis of point 1: k -> 2 - k (mod n)
    let images: Vec<usize> = (1..=n).map(|k| (n + 1 - k) % n + 1).collect();
    let reflection = Permutation::from_images(&images).expect("bijection");
    GeneratorSet::new(n, vec![cycle(n, 1..=n), reflection]).expect("valid generators")
}

/// Juxtaposes generator sets on disjoint consecutive blocks of points.
pub fn direct_product(parts: &[GeneratorSet]) -> Result<GeneratorSet> {
    let degree: usize = parts.iter().map(GeneratorSet::degree).sum();
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut gens = Vec::new();
    let mut offset = 0;
    for part in parts {
        for g in part.generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &img) in g.images().iter().enumerate() {
                images[offset + i] = (offset as u32) + img;
            }
            gens.push(Permutation::from_raw(images));
        }
        offset += part.degree();
    }
    GeneratorSet::new(degree, gens)
}

/// Standard generators for the group described by `spec`.
pub fn construct(spec: &GroupSpec) -> Result<GeneratorSet> {
    validate(spec).map_err(|reason| Error::InvalidSpec {
        text: spec.to_string(),
        reason,
    })?;
    match spec {
        GroupSpec::Symmetric(n) => Ok(symmetric(*n)),
        GroupSpec::Alternating(n) => Ok(alternating(*n)),
        GroupSpec::Cyclic(n) => Ok(cyclic(*n)),
        GroupSpec::Dihedral(n) => Ok(dihedral(*n)),
        GroupSpec::Psl2(p) => psl2_perm(*p),
        GroupSpec::Direct(parts) => {
            let parts = parts.iter().map(construct).collect::<Result<Vec<_>>>()?;
            direct_product(&parts)
        }
        GroupSpec::File(path) => Ok(load_group_file(path)?.generators),
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A 2×2 matrix over the prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    p: u32,
    entries: [[u32; 2]; 2],
}

impl PrimeFieldMatrix {
    /// Entries are reduced mod `p`; negative values are allowed.
    pub fn new(p: u32, entries: [[i64; 2]; 2]) -> PrimeFieldMatrix {
        let reduce = |x: i64| x.rem_euclid(p as i64) as u32;
        PrimeFieldMatrix {
            p,
            entries: entries.map(|row| row.map(reduce)),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn entries(&self) -> [[u32; 2]; 2] {
        self.entries
    }

    pub fn determinant(&self) -> u32 {
        let [[a, b], [c, d]] = self.entries.map(|r| r.map(u64::from));
        let p = u64::from(self.p);
        ((a * d % p + p - b * c % p) % p) as u32
    }

    pub fn mul(&self, other: &PrimeFieldMatrix) -> PrimeFieldMatrix {
        let p = u64::from(self.p);
        let mut out = [[0u32; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let s: u64 = (0..2)
                    .map(|k| u64::from(self.entries[i][k]) * u64::from(other.entries[k][j]))
                    .sum();
                *cell = (s % p) as u32;
            }
        }
        PrimeFieldMatrix {
            p: self.p,
            entries: out,
        }
    }

    /// Action on the projective line: slope `x` (as the column `(x, 1)`) is
    /// point `x + 1`, and `∞` (the column `(1, 0)`) is point `p + 1`.
    pub fn projective_action(&self) -> Result<Permutation> {
        if self.determinant() == 0 {
            return Err(Error::InvalidParameter("singular matrix".into()));
        }
        let p = u64::from(self.p);
        let [[a, b], [c, d]] = self.entries.map(|r| r.map(u64::from));
        let infinity = self.p as usize + 1;
        let point = |num: u64, den: u64| -> usize {
            if den == 0 {
                infinity
            } else {
                (num * mod_inverse(den, p) % p) as usize + 1
            }
        };
        let mut images: Vec<usize> = (0..p).map(|x| point((a * x + b) % p, (c * x + d) % p)).collect();
        images.push(point(a, c));
        Permutation::from_images(&images)
    }
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    // p prime: x^(p-2)
    let mut result = 1;
    let mut base = x % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// `PSL₂(p)` acting on the `p + 1` points of the projective line.
pub fn psl2_perm(p: u32) -> Result<GeneratorSet> {
    if !(5..=31).contains(&p) || !is_prime(u64::from(p)) {
        return Err(Error::InvalidParameter(format!(
            "PSL2(p) needs a prime 5 <= p <= 31, got {p}"
        )));
    }
    let translation = PrimeFieldMatrix::new(p, [[1, 1], [0, 1]]);
    let inversion = PrimeFieldMatrix::new(p, [[0, -1], [1, 0]]);
    GeneratorSet::new(
        p as usize + 1,
        vec![
            translation.projective_action()?,
            inversion.projective_action()?,
        ],
    )
}

/// On-disk generator file (JSON).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub format_version: u32,
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::order_serde::option")]
    pub claimed_order: Option<BigUint>,
    #[serde(default)]
    pub provenance: String,
}

#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub generators: GeneratorSet,
    pub file: GroupFile,
    pub bsgs: Bsgs,
}

impl GroupFile {
    /// Parses the generators and, when an order is claimed, checks it.
    pub fn load(&self) -> Result<(GeneratorSet, Bsgs)> {
        if self.format_version != 1 {
            return Err(Error::InvalidParameter(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        let gens = self
            .generators
            .iter()
            .map(|t| Permutation::parse_cycles(t, self.degree))
            .collect::<Result<Vec<_>>>()?;
        let gens = GeneratorSet::new(self.degree, gens)?;
        let bsgs = Bsgs::build(&gens);
        if let Some(claimed) = &self.claimed_order {
            if claimed != bsgs.order() {
                return Err(Error::OrderMismatch {
                    claimed: claimed.clone(),
                    computed: bsgs.order().clone(),
                });
            }
        }
        Ok((gens, bsgs))
    }
}

pub fn load_group_file(path: &Path) -> Result<LoadedGroup> {
    let wrap = |reason: String| Error::GroupFile {
        path: path.display().to_string(),
        reason,
    };
    let text = std::fs::read_to_string(path).map_err(|e| wrap(e.to_string()))?;
    let file: GroupFile = serde_json::from_str(&text).map_err(|e| wrap(e.to_string()))?;
    let (generators, bsgs) = file.load()?;
    Ok(LoadedGroup {
        generators,
        file,
        bsgs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(spec: &str) -> u64 {
        let spec: GroupSpec = spec.parse().unwrap();
        Bsgs::build(&construct(&spec).unwrap()).order_u64().unwrap()
    }

    #[test]
    fn family_orders() {
        assert_eq!(order("S(5)"), 120);
        assert_eq!(order("S(1)"), 1);
        assert_eq!(order("S(2)"), 2);
        assert_eq!(order("A(3)"), 3);
        assert_eq!(order("A(4)"), 12);
        for n in 5..=8u64 {
            assert_eq!(order(&format!("A({n})")), (1..=n).product::<u64>() / 2);
        }
        assert_eq!(order("C(1)"), 1);
        assert_eq!(order("C(12)"), 12);
        assert_eq!(order("D(6)"), 12);
        assert_eq!(order("D(4)"), 8);
        assert_eq!(order("direct(C(5),A(5))"), 300);
        assert_eq!(order(" direct( C(4) , S(3) ) "), 24);
    }

    #[test]
    fn direct_product_degree_adds() {
        let g = construct(&"direct(C(5),A(5))".parse().unwrap()).unwrap();
        assert_eq!(g.degree(), 10);
        let d6 = construct(&"D(6)".parse().unwrap()).unwrap();
        assert_eq!(d6.degree(), 6);
    }

    #[test]
    fn psl2_orders() {
        for (p, expected) in [(5u32, 60u64), (7, 168), (11, 660), (13, 1092)] {
            let g = psl2_perm(p).unwrap();
            assert_eq!(g.degree(), p as usize + 1);
            assert_eq!(Bsgs::build(&g).order_u64().unwrap(), expected);
            assert_eq!(expected, u64::from(p * (p - 1) * (p + 1) / 2));
        }
        assert!(psl2_perm(9).is_err());
        assert!(psl2_perm(3).is_err());
        assert!(psl2_perm(37).is_err());
    }

    #[test]
    fn matrix_action_is_a_homomorphism() {
        let m = PrimeFieldMatrix::new(7, [[2, 3], [1, 4]]);
        let n = PrimeFieldMatrix::new(7, [[0, -1], [1, 0]]);
        let lhs = m.mul(&n).projective_action().unwrap();
        let rhs = &m.projective_action().unwrap() * &n.projective_action().unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(m.determinant(), 5);
        assert!(PrimeFieldMatrix::new(5, [[1, 2], [2, 4]]).projective_action().is_err());
    }

    #[test]
    fn spec_parse_errors() {
        for bad in [
            "S(0)",
            "D(2)",
            "PSL2(9)",
            "PSL2(37)",
            "Q(3)",
            "S(3",
            "S(3))",
            "direct()",
            "direct(direct(direct(direct(C(2)))))",
            "file:",
        ] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
        assert!("direct(direct(direct(C(2))))".parse::<GroupSpec>().is_ok());
    }

    #[test]
    fn spec_display_round_trips() {
        for text in ["S(4)", "direct(C(5),direct(A(5),D(4)))", "PSL2(11)", "file:fixtures/sz8.json"] {
            let spec: GroupSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn file_paths_resolve_against_base() {
        let spec: GroupSpec = "direct(C(2),file:g.json)".parse().unwrap();
        let spec = spec.with_base_dir(Path::new("/data"));
        assert_eq!(spec.to_string(), "direct(C(2),file:/data/g.json)");
    }
}
