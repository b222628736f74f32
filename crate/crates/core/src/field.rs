//! Exact coefficient fields: the rationals, prime fields F_p and extension
//! fields F_{p^k} given by an explicit irreducible modulus.
//!
//! Finite fields are interned: every call to [`make_field`] with the same
//! parameters hands back the same `&'static` table, so elements stay small
//! (`u32` residue plus a pointer) and field equality is pointer equality.
//!
//! Elements of F_{p^k} are encoded as the integer `Σ c_i p^i`, where
//! `c_0 + c_1 t + … + c_{k-1} t^{k-1}` is the reduced residue polynomial.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest extension field for which we build log/exp tables.
const MAX_EXTENSION_ORDER: u64 = 1 << 20;

/// Arithmetic tables for one finite field.
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, low degree first; empty for prime fields.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}^{} mod {:?}", self.p, self.k, self.modulus)
    }
}

fn registry() -> &'static Mutex<Vec<&'static FiniteField>> {
    static REGISTRY: OnceLock<Mutex<Vec<&'static FiniteField>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(Vec::new()))
}

/// A coefficient field. Cheap to copy.
#[derive(Clone, Copy)]
pub enum Field {
    Rational,
    Finite(&'static FiniteField),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rational, Field::Rational) => true,
            (Field::Finite(a), Field::Finite(b)) => std::ptr::eq(*a, *b),
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Finite(ff) if ff.k == 1 => write!(f, "F{}", ff.p),
            Field::Finite(ff) => {
                write!(f, "F{}^{} mod ", ff.p, ff.k)?;
                write_t_poly(f, &ff.modulus, ff.p)
            }
        }
    }
}

/// Writes `Σ c_i t^i` in descending order, e.g. `t^2 + t + 1`.
fn write_t_poly(f: &mut fmt::Formatter<'_>, coeffs: &[u32], _p: u32) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match (i, c) {
            (0, c) => write!(f, "{c}")?,
            (1, 1) => write!(f, "t")?,
            (1, c) => write!(f, "{c}t")?,
            (i, 1) => write!(f, "t^{i}")?,
            (i, c) => write!(f, "{c}t^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
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

/// Splits `n` as `p^k` with `p` prime.
fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(n);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p, k))
}

// Small dense polynomial helpers over F_p, coefficients low degree first.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db] as u64, p64);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = (r[r.len() - 1] as u64 * lead_inv) % p64;
        for (i, &bc) in b.iter().enumerate() {
            let idx = shift + i;
            let sub = (factor * bc as u64) % p64;
            r[idx] = ((r[idx] as u64 + p64 - sub) % p64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

impl FiniteField {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0u32, |acc, &d| acc * self.p + d)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let p = self.p as u64;
        let mut prod = vec![0u32; da.len() + db.len()];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.k as usize, 0);
        self.encode(&r)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as u32;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.k {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            a /= self.p;
            b /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let digits: Vec<u32> = self
            .digits(a)
            .into_iter()
            .map(|d| if d == 0 { 0 } else { self.p - d })
            .collect();
        self.encode(&digits)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let l = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n as u64;
        self.exp[l as usize]
    }

    fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.k == 1 {
            return Some(mod_inv(a as u64, self.p as u64) as u32);
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    /// Builds log/exp tables from a primitive element (only for k > 1).
    fn build_tables(&mut self) {
        let n = (self.q - 1) as u64;
        let factors = prime_factors(n);
        let pow = |ff: &FiniteField, g: u32, mut e: u64| {
            let mut acc = 1u32;
            let mut base = g;
            while e > 0 {
                if e & 1 == 1 {
                    acc = ff.slow_mul(acc, base);
                }
                base = ff.slow_mul(base, base);
                e >>= 1;
            }
            acc
        };
        let generator = (2..self.q)
            .find(|&g| factors.iter().all(|&r| pow(self, g, n / r) != 1))
            .unwrap_or(1);
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut cur = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur;
            log[cur as usize] = i as u32;
            cur = self.slow_mul(cur, generator);
        }
        self.exp = exp;
        self.log = log;
    }
}

fn intern(p: u32, modulus: Vec<u32>) -> &'static FiniteField {
    let mut reg = registry().lock().expect("field registry poisoned");
    if let Some(ff) = reg.iter().find(|f| f.p == p && f.modulus == modulus) {
        return ff;
    }
    let k = if modulus.is_empty() { 1 } else { (modulus.len() - 1) as u32 };
    let mut ff = FiniteField {
        p,
        k,
        q: p.pow(k),
        modulus,
        exp: Vec::new(),
        log: Vec::new(),
    };
    if k > 1 {
        ff.build_tables();
    }
    let leaked: &'static FiniteField = Box::leak(Box::new(ff));
    reg.push(leaked);
    leaked
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            // monic divisor of degree d with lower coefficients from idx
            let mut divisor = Vec::with_capacity(d + 1);
            let mut m = idx;
            for _ in 0..d {
                divisor.push((m % p as u64) as u32);
                m /= p as u64;
            }
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rational
    }

    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) || p > u32::MAX as u64 / 2 {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        Ok(Field::Finite(intern(p as u32, Vec::new())))
    }

    /// F_{p^k} given a monic modulus over F_p (coefficients low degree first,
    /// already reduced mod p). `k` is the modulus degree.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        let mut m: Vec<u32> = modulus.iter().map(|&c| (c % p) as u32).collect();
        trim(&mut m);
        if m.len() < 2 {
            return Err(Error::ModulusDegreeMismatch { expected: 2, found: 0 });
        }
        if *m.last().unwrap() != 1 {
            return Err(Error::NonMonicModulus);
        }
        let k = (m.len() - 1) as u32;
        if k == 1 {
            return Field::prime(p);
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_EXTENSION_ORDER);
        let Some(_) = q else {
            return Err(Error::FieldTooLarge(p.saturating_pow(k)));
        };
        if !is_irreducible(&m, p as u32) {
            let shown = Field::Finite(intern(p as u32, Vec::new()));
            let text = format!("{}", TPoly(&m, shown));
            return Err(Error::ReducibleModulus(text));
        }
        Ok(Field::Finite(intern(p as u32, m)))
    }

    /// 0 for Q, p otherwise.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Finite(ff) => ff.p as u64,
        }
    }

    pub fn extension_degree(&self) -> u32 {
        match self {
            Field::Rational => 1,
            Field::Finite(ff) => ff.k,
        }
    }

    /// Number of elements, `None` for Q.
    pub fn cardinality(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Finite(ff) => Some(ff.q as u64),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Finite(_))
    }

    /// Modulus coefficients over F_p, low degree first, for extension fields.
    pub fn modulus(&self) -> Option<&'static [u32]> {
        match self {
            Field::Finite(ff) if ff.k > 1 => Some(&ff.modulus),
            _ => None,
        }
    }

    /// The prime subfield.
    pub fn prime_subfield(&self) -> Field {
        match self {
            Field::Rational => Field::Rational,
            Field::Finite(ff) if ff.k == 1 => *self,
            Field::Finite(ff) => Field::Finite(intern(ff.p, Vec::new())),
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rational => FieldElement(Repr::Rational(BigRational::zero())),
            Field::Finite(ff) => FieldElement(Repr::Finite(ff, 0)),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            Field::Rational => FieldElement(Repr::Rational(BigRational::one())),
            Field::Finite(ff) => FieldElement(Repr::Finite(ff, 1)),
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    /// Image of an integer under the canonical map Z → K.
    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rational => FieldElement(Repr::Rational(BigRational::from_integer(n.clone()))),
            Field::Finite(ff) => {
                let r = n.mod_floor(&BigInt::from(ff.p)).to_u32().unwrap_or(0);
                FieldElement(Repr::Finite(ff, r))
            }
        }
    }

    /// Image of a fraction; fails when the denominator vanishes in K.
    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElement> {
        let num = self.from_bigint(r.numer());
        let den = self.from_bigint(r.denom());
        num.checked_div(&den)
    }

    /// The class of `t` in F_p[t]/(modulus), for extension fields.
    pub fn generator(&self) -> Option<FieldElement> {
        match self {
            Field::Finite(ff) if ff.k > 1 => Some(FieldElement(Repr::Finite(ff, ff.p))),
            _ => None,
        }
    }

    /// Element with the given canonical index (finite fields only).
    pub fn element(&self, index: u32) -> Option<FieldElement> {
        match self {
            Field::Finite(ff) if index < ff.q => Some(FieldElement(Repr::Finite(ff, index))),
            _ => None,
        }
    }

    /// All elements in canonical index order (finite fields only).
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldElement> + Clone> {
        match self {
            Field::Finite(ff) => {
                let ff: &'static FiniteField = ff;
                Some((0..ff.q).map(move |i| FieldElement(Repr::Finite(ff, i))))
            }
            Field::Rational => None,
        }
    }

    /// Nonzero elements in canonical index order (finite fields only).
    pub fn units(&self) -> Option<impl Iterator<Item = FieldElement> + Clone> {
        self.elements().map(|it| it.skip(1))
    }
}

struct TPoly<'a>(&'a [u32], Field);

impl fmt::Display for TPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_t_poly(f, self.0, self.1.characteristic() as u32)
    }
}

/// Parses a field description: `Q`, `F<p>`, `F<p>^<k> mod <poly in t>` or
/// `F<q> mod <poly in t>` with `q` a prime power.
pub fn make_field(spec: &str) -> Result<Field> {
    let text = spec.trim();
    if text == "Q" {
        return Ok(Field::Rational);
    }
    let bad = || Error::InvalidFieldSpec(spec.to_string());
    let rest = text.strip_prefix('F').ok_or_else(bad)?;
    let (head, modulus_text) = match rest.find("mod") {
        Some(i) => (rest[..i].trim(), Some(rest[i + 3..].trim())),
        None => (rest.trim(), None),
    };
    let (p, k) = match head.split_once('^') {
        Some((p, k)) => {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let k: u32 = k.trim().parse().map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(Error::NonPrimeCharacteristic(p));
            }
            if k == 0 {
                return Err(bad());
            }
            (p, k)
        }
        None => {
            let q: u64 = head.parse().map_err(|_| bad())?;
            as_prime_power(q).ok_or(Error::NonPrimeCharacteristic(q))?
        }
    };
    match (k, modulus_text) {
        (1, None) => Field::prime(p),
        (1, Some(_)) => Err(Error::InvalidFieldSpec(format!("{spec}: prime fields take no modulus"))),
        (_, None) => Err(Error::MissingModulus(p.pow(k))),
        (_, Some(mtext)) => {
            let base = Field::prime(p)?;
            let poly = crate::expr::parse_polynomial_in(mtext, base, 't')?;
            let found = poly.degree().unwrap_or(0) as u32;
            if found != k {
                return Err(Error::ModulusDegreeMismatch { expected: k, found });
            }
            let coeffs: Vec<u64> = poly
                .coefficients()
                .iter()
                .map(|c| c.residue().expect("prime field element") as u64)
                .collect();
            Field::extension(p, &coeffs)
        }
    }
}

#[derive(Clone)]
enum Repr {
    Rational(BigRational),
    Finite(&'static FiniteField, u32),
}

/// An exact element of one of the supported fields, in canonical form.
#[derive(Clone)]
pub struct FieldElement(Repr);

impl FieldElement {
    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Rational(_) => Field::Rational,
            Repr::Finite(ff, _) => Field::Finite(ff),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Finite(_, v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Finite(_, v) => *v == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r),
            Repr::Finite(..) => None,
        }
    }

    /// Canonical index in a finite field (the residue for F_p).
    pub fn residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Finite(_, v) => Some(*v),
            Repr::Rational(_) => None,
        }
    }

    /// Residue polynomial coefficients (low degree first) in F_{p^k}.
    pub fn residue_digits(&self) -> Option<Vec<u32>> {
        match &self.0 {
            Repr::Finite(ff, v) => Some(ff.digits(*v)),
            Repr::Rational(_) => None,
        }
    }

    /// True when the element lies in the image of Z (prints as a bare integer).
    pub fn is_integer_literal(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_integer(),
            Repr::Finite(ff, v) => *v < ff.p,
        }
    }

    /// Negative rational; finite fields have no sign.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_negative(),
            Repr::Finite(..) => false,
        }
    }

    pub fn checked_inv(&self) -> Result<FieldElement> {
        match &self.0 {
            Repr::Rational(r) if r.is_zero() => Err(Error::DivisionByZero),
            Repr::Rational(r) => Ok(FieldElement(Repr::Rational(r.recip()))),
            Repr::Finite(ff, v) => ff
                .inv(*v)
                .map(|i| FieldElement(Repr::Finite(ff, i)))
                .ok_or(Error::DivisionByZero),
        }
    }

    pub fn inv(&self) -> FieldElement {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.checked_inv()?)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power, negative exponents via the inverse.
    pub fn powi(&self, e: i64) -> Result<FieldElement> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.checked_inv()?.pow(e.unsigned_abs()))
        }
    }

    fn same_field(&self, other: &FieldElement) -> bool {
        self.field() == other.field()
    }

    fn binop(
        &self,
        rhs: &FieldElement,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        fin: impl Fn(&FiniteField, u32, u32) -> u32,
    ) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElement(Repr::Rational(rat(a, b))),
            (Repr::Finite(fa, a), Repr::Finite(fb, b)) if std::ptr::eq(*fa, *fb) => {
                FieldElement(Repr::Finite(fa, fin(fa, *a, *b)))
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a == b,
            (Repr::Finite(fa, a), Repr::Finite(fb, b)) => std::ptr::eq(*fa, *fb) && a == b,
            _ => false,
        }
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Rational(r) => {
                0u8.hash(state);
                r.numer().hash(state);
                r.denom().hash(state);
            }
            Repr::Finite(ff, v) => {
                1u8.hash(state);
                (*ff as *const FiniteField as usize).hash(state);
                v.hash(state);
            }
        }
    }
}

/// Canonical element order: Q numerically, F_p by residue,
/// F_{p^k} by coefficient tuple with the constant coefficient compared first.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Finite(fa, a), Repr::Finite(fb, b)) if std::ptr::eq(*fa, *fb) => {
                if fa.k == 1 {
                    a.cmp(b)
                } else {
                    fa.digits(*a).cmp(&fa.digits(*b))
                }
            }
            (Repr::Rational(_), Repr::Finite(..)) => Ordering::Less,
            (Repr::Finite(..), Repr::Rational(_)) => Ordering::Greater,
            (Repr::Finite(fa, _), Repr::Finite(fb, _)) => (fa.p, &fa.modulus).cmp(&(fb.p, &fb.modulus)),
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) => write!(f, "{r}"),
            Repr::Finite(ff, v) if ff.k == 1 => write!(f, "{v}"),
            Repr::Finite(ff, v) => write_t_poly(f, &ff.digits(*v), ff.p),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'b> Add<&'b FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'b FieldElement) -> FieldElement {
        self.binop(rhs, |a, b| a + b, |ff, a, b| ff.add(a, b))
    }
}

impl<'b> Sub<&'b FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'b FieldElement) -> FieldElement {
        self.binop(rhs, |a, b| a - b, |ff, a, b| ff.add(a, ff.neg(b)))
    }
}

impl<'b> Mul<&'b FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'b FieldElement) -> FieldElement {
        self.binop(rhs, |a, b| a * b, |ff, a, b| ff.mul(a, b))
    }
}

impl<'b> Div<&'b FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &'b FieldElement) -> FieldElement {
        assert!(self.same_field(rhs), "field mismatch");
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match &self.0 {
            Repr::Rational(r) => FieldElement(Repr::Rational(-r)),
            Repr::Finite(ff, v) => FieldElement(Repr::Finite(ff, ff.neg(*v))),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement { (&self).$method(&rhs) }
        }
        impl<'b> $trait<&'b FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'b FieldElement) -> FieldElement { (&self).$method(rhs) }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement { self.$method(&rhs) }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul, Div div);

/// Multiplicative order of a nonzero element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    /// The period `s` with the convention `s = 0` for infinite order.
    pub fn period(self) -> u64 {
        match self {
            Order::Finite(s) => s,
            Order::Infinite => 0,
        }
    }
}

/// Least `s ≥ 1` with `a^s = 1`, or [`Order::Infinite`].
pub fn multiplicative_order(a: &FieldElement) -> Result<Order> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    match a.field() {
        Field::Rational => {
            if a.is_one() {
                Ok(Order::Finite(1))
            } else if (-a).is_one() {
                Ok(Order::Finite(2))
            } else {
                Ok(Order::Infinite)
            }
        }
        Field::Finite(ff) => {
            // the order divides q-1; strip prime factors while a^(ord/r) = 1
            let mut ord = (ff.q - 1) as u64;
            for r in prime_factors(ord) {
                while ord.is_multiple_of(r) && a.pow(ord / r).is_one() {
                    ord /= r;
                }
            }
            Ok(Order::Finite(ord))
        }
    }
}

/// All `e` in `0..=bound` with `alpha^e = gamma`, found by iterated
/// multiplication. For finite order `s` the answer is an arithmetic
/// progression with step `s`.
pub fn discrete_log(alpha: &FieldElement, gamma: &FieldElement, bound: u64) -> Result<Vec<u64>> {
    if alpha.is_zero() {
        return Err(Error::ZeroElement);
    }
    if alpha.field() != gamma.field() {
        return Err(Error::FieldMismatch);
    }
    if gamma.is_zero() {
        return Ok(Vec::new());
    }
    let order = multiplicative_order(alpha)?;
    let scan_limit = match order {
        Order::Finite(s) => bound.min(s - 1),
        Order::Infinite => bound,
    };
    let mut power = alpha.field().one();
    let mut first = None;
    let magnitude = |x: &FieldElement| x.as_rational().map(|r| r.abs());
    let growing = magnitude(alpha).map(|m| m > BigRational::one());
    for e in 0..=scan_limit {
        if power == *gamma {
            first = Some(e);
            break;
        }
        // over Q with |alpha| != 1 the powers are monotone in absolute value
        if let (Some(grow), Some(pm), Some(gm)) = (growing, magnitude(&power), magnitude(gamma)) {
            if order == Order::Infinite && ((grow && pm > gm) || (!grow && pm < gm)) {
                break;
            }
        }
        power = &power * alpha;
    }
    Ok(match (first, order) {
        (None, _) => Vec::new(),
        (Some(e0), Order::Infinite) => vec![e0],
        (Some(e0), Order::Finite(s)) => (e0..=bound).step_by(s as usize).collect(),
    })
}
