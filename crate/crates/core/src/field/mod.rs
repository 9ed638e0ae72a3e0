//! Exact coefficient fields: `Q`, `F_p`, `F_p(t)` and simple algebraic
//! extensions of those. Every element has one canonical representation, so
//! structural equality of [`Elem`] is field equality.

pub(crate) mod fp_poly;
mod text;

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{AlgError, Result};
use crate::poly;

pub(crate) use fp_poly::{invmod, mulmod};


/// JSON-facing description of a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldDescriptor {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u64 },
    #[serde(rename = "FpT")]
    RationalFunctions { p: u64, var: String },
    #[serde(rename = "ext")]
    SimpleExtension {
        base: Box<FieldDescriptor>,
        /// Coefficients of the monic minimal polynomial, constant term first,
        /// written as base-field scalars.
        minpoly: Vec<String>,
        #[serde(default = "default_ext_var")]
        var: String,
    },
}

fn default_ext_var() -> String {
    "a".to_string()
}

/// Element of `F_p(t)`: reduced fraction with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Vec<u64>,
    den: Vec<u64>,
}

impl RatFn {
    pub fn numerator(&self) -> &[u64] {
        &self.num
    }

    pub fn denominator(&self) -> &[u64] {
        &self.den
    }

    fn new(num: Vec<u64>, den: Vec<u64>, p: u64) -> RatFn {
        let mut num = num;
        fp_poly::trim(&mut num);
        if num.is_empty() {
            return RatFn { num, den: vec![1] };
        }
        let g = fp_poly::gcd(&num, &den, p);
        let (mut n, _) = fp_poly::divrem(&num, &g, p);
        let (mut d, _) = fp_poly::divrem(&den, &g, p);
        let lc = *d.last().expect("nonzero denominator");
        let inv = invmod(lc, p);
        n = fp_poly::scale(&n, inv, p);
        d = fp_poly::scale(&d, inv, p);
        RatFn { num: n, den: d }
    }

    pub(crate) fn from_parts(num: Vec<u64>, den: Vec<u64>, p: u64) -> RatFn {
        RatFn::new(num, den, p)
    }
}

/// A field element in canonical form. Which field it belongs to is carried
/// by the surrounding [`Field`]; see [`Scalar`] for a self-describing value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Q(BigRational),
    Fp(u64),
    FpT(RatFn),
    /// Coefficients in the base field, length exactly the extension degree.
    Ext(Vec<Elem>),
}

#[derive(PartialEq, Eq)]
enum Kind {
    Rationals,
    Prime(u64),
    RatFun {
        p: u64,
        var: String,
    },
    Ext {
        base: Field,
        /// monic, constant term first, length degree + 1
        minpoly: Vec<Elem>,
        var: String,
    },
}

/// Handle to an exact field. Cheap to clone; equality is structural.
#[derive(Clone)]
pub struct Field(Arc<Kind>);

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Kind::Rationals => write!(f, "Q"),
            Kind::Prime(p) => write!(f, "F_{p}"),
            Kind::RatFun { p, var } => write!(f, "F_{p}({var})"),
            Kind::Ext { base, minpoly, var } => {
                let terms: Vec<String> = minpoly.iter().map(|c| base.format(c)).collect();
                write!(f, "{base}[{var}]/({})", terms.join(","))
            }
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

const MAX_PRIME: u64 = 1 << 31;

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(Kind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Field> {
        check_prime(p)?;
        Ok(Field(Arc::new(Kind::Prime(p))))
    }

    pub fn rational_functions(p: u64, var: &str) -> Result<Field> {
        check_prime(p)?;
        check_var(var)?;
        Ok(Field(Arc::new(Kind::RatFun {
            p,
            var: var.to_string(),
        })))
    }

    /// `base[var]/(minpoly)`; the polynomial must be monic and irreducible.
    pub fn extension(base: &Field, minpoly: Vec<Elem>, var: &str) -> Result<Field> {
        check_var(var)?;
        if matches!(&*base.0, Kind::Ext { .. }) {
            return Err(AlgError::Unsupported(
                "towers of extensions are not supported".into(),
            ));
        }
        if let Kind::RatFun { var: v, .. } = &*base.0 {
            if v == var {
                return Err(AlgError::Parse(format!(
                    "extension generator `{var}` clashes with the base variable"
                )));
            }
        }
        let mut m = minpoly;
        poly::trim(base, &mut m);
        let deg = poly::degree(&m).unwrap_or(0);
        if deg < 1 {
            return Err(AlgError::ReduciblePolynomial(
                "minimal polynomial must have degree at least 1".into(),
            ));
        }
        if !base.is_one(&m[deg]) {
            return Err(AlgError::ReduciblePolynomial(
                "minimal polynomial must be monic".into(),
            ));
        }
        if deg > 8 {
            return Err(AlgError::Unsupported(format!(
                "irreducibility testing is limited to degree 8 (got {deg})"
            )));
        }
        if !crate::factor::is_irreducible(base, &m)? {
            let shown: Vec<String> = m.iter().map(|c| base.format(c)).collect();
            return Err(AlgError::ReduciblePolynomial(shown.join(",")));
        }
        Ok(Field(Arc::new(Kind::Ext {
            base: base.clone(),
            minpoly: m,
            var: var.to_string(),
        })))
    }

    /// Builds a field from its JSON description, checking every invariant.
    pub fn make(desc: &FieldDescriptor) -> Result<Field> {
        match desc {
            FieldDescriptor::Rationals => Ok(Field::rationals()),
            FieldDescriptor::PrimeField { p } => Field::prime(*p),
            FieldDescriptor::RationalFunctions { p, var } => Field::rational_functions(*p, var),
            FieldDescriptor::SimpleExtension { base, minpoly, var } => {
                let b = Field::make(base)?;
                let m = minpoly
                    .iter()
                    .map(|s| b.parse(s))
                    .collect::<Result<Vec<_>>>()?;
                Field::extension(&b, m, var)
            }
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        match &*self.0 {
            Kind::Rationals => FieldDescriptor::Rationals,
            Kind::Prime(p) => FieldDescriptor::PrimeField { p: *p },
            Kind::RatFun { p, var } => FieldDescriptor::RationalFunctions {
                p: *p,
                var: var.clone(),
            },
            Kind::Ext { base, minpoly, var } => FieldDescriptor::SimpleExtension {
                base: Box::new(base.descriptor()),
                minpoly: minpoly.iter().map(|c| base.format(c)).collect(),
                var: var.clone(),
            },
        }
    }

    /// 0 for characteristic zero.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) | Kind::RatFun { p, .. } => *p,
            Kind::Ext { base, .. } => base.characteristic(),
        }
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<BigUint> {
        match &*self.0 {
            Kind::Prime(p) => Some(BigUint::from(*p)),
            Kind::Ext { base, minpoly, .. } => base
                .order()
                .map(|q| num_traits::pow(q, minpoly.len() - 1)),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Degree over the prime field, for finite fields.
    pub fn prime_degree(&self) -> Option<u64> {
        match &*self.0 {
            Kind::Prime(_) => Some(1),
            Kind::Ext { base, minpoly, .. } => {
                base.prime_degree().map(|d| d * (minpoly.len() as u64 - 1))
            }
            _ => None,
        }
    }

    pub fn is_rational_functions(&self) -> bool {
        matches!(&*self.0, Kind::RatFun { .. })
    }

    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            Kind::Ext { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn ext_degree(&self) -> usize {
        match &*self.0 {
            Kind::Ext { minpoly, .. } => minpoly.len() - 1,
            _ => 1,
        }
    }

    pub fn minimal_polynomial(&self) -> Option<&[Elem]> {
        match &*self.0 {
            Kind::Ext { minpoly, .. } => Some(minpoly),
            _ => None,
        }
    }

    pub fn variable(&self) -> Option<&str> {
        match &*self.0 {
            Kind::RatFun { var, .. } | Kind::Ext { var, .. } => Some(var),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            Kind::Rationals => Elem::Q(BigRational::zero()),
            Kind::Prime(_) => Elem::Fp(0),
            Kind::RatFun { .. } => Elem::FpT(RatFn {
                num: Vec::new(),
                den: vec![1],
            }),
            Kind::Ext { base, minpoly, .. } => Elem::Ext(vec![base.zero(); minpoly.len() - 1]),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.0 {
            Kind::Rationals => Elem::Q(BigRational::from_integer(n.clone())),
            Kind::Prime(p) => Elem::Fp(reduce_bigint(n, *p)),
            Kind::RatFun { p, .. } => {
                let c = reduce_bigint(n, *p);
                Elem::FpT(RatFn::new(vec![c], vec![1], *p))
            }
            Kind::Ext { base, minpoly, .. } => {
                let mut v = vec![base.zero(); minpoly.len() - 1];
                v[0] = base.from_bigint(n);
                Elem::Ext(v)
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Elem> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        self.div(&n, &d)
    }

    /// The variable `t` of `F_p(t)` or the generator of an extension.
    pub fn generator(&self) -> Option<Elem> {
        match &*self.0 {
            Kind::RatFun { p, .. } => Some(Elem::FpT(RatFn::new(vec![0, 1], vec![1], *p))),
            Kind::Ext { base, minpoly, .. } => {
                let d = minpoly.len() - 1;
                let mut v = vec![base.zero(); d];
                if d == 1 {
                    // generator equals -m_0
                    v[0] = base.neg(&minpoly[0]);
                } else {
                    v[1] = base.one();
                }
                Some(Elem::Ext(v))
            }
            _ => None,
        }
    }

    /// Embeds an element of the base field of an extension.
    pub fn embed_base(&self, c: &Elem) -> Elem {
        match &*self.0 {
            Kind::Ext { base, minpoly, .. } => {
                let mut v = vec![base.zero(); minpoly.len() - 1];
                v[0] = c.clone();
                Elem::Ext(v)
            }
            _ => c.clone(),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Q(q) => q.is_zero(),
            Elem::Fp(x) => *x == 0,
            Elem::FpT(r) => r.num.is_empty(),
            Elem::Ext(v) => {
                let base = self.base().expect("extension element");
                v.iter().all(|c| base.is_zero(c))
            }
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    /// Whether `a` is a canonical element of this field.
    pub fn contains(&self, a: &Elem) -> bool {
        match (&*self.0, a) {
            (Kind::Rationals, Elem::Q(_)) => true,
            (Kind::Prime(p), Elem::Fp(x)) => x < p,
            (Kind::RatFun { p, .. }, Elem::FpT(r)) => {
                r.num.iter().chain(r.den.iter()).all(|c| c < p)
                    && r.num.last() != Some(&0)
                    && r.den.last() == Some(&1)
                    && *r == RatFn::new(r.num.clone(), r.den.clone(), *p)
            }
            (Kind::Ext { base, minpoly, .. }, Elem::Ext(v)) => {
                v.len() == minpoly.len() - 1 && v.iter().all(|c| base.contains(c))
            }
            _ => false,
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (Kind::Rationals, Elem::Q(x), Elem::Q(y)) => Elem::Q(x + y),
            (Kind::Prime(p), Elem::Fp(x), Elem::Fp(y)) => Elem::Fp((x + y) % p),
            (Kind::RatFun { p, .. }, Elem::FpT(x), Elem::FpT(y)) => {
                if x.den == y.den {
                    return Elem::FpT(RatFn::new(fp_poly::add(&x.num, &y.num, *p), x.den.clone(), *p));
                }
                let num = fp_poly::add(
                    &fp_poly::mul(&x.num, &y.den, *p),
                    &fp_poly::mul(&y.num, &x.den, *p),
                    *p,
                );
                Elem::FpT(RatFn::new(num, fp_poly::mul(&x.den, &y.den, *p), *p))
            }
            (Kind::Ext { base, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                Elem::Ext(x.iter().zip(y).map(|(s, t)| base.add(s, t)).collect())
            }
            _ => panic!("field mismatch in add"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (Kind::Rationals, Elem::Q(x)) => Elem::Q(-x),
            (Kind::Prime(p), Elem::Fp(x)) => Elem::Fp((p - x) % p),
            (Kind::RatFun { p, .. }, Elem::FpT(x)) => Elem::FpT(RatFn {
                num: fp_poly::neg(&x.num, *p),
                den: x.den.clone(),
            }),
            (Kind::Ext { base, .. }, Elem::Ext(x)) => Elem::Ext(x.iter().map(|c| base.neg(c)).collect()),
            _ => panic!("field mismatch in neg"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (Kind::Rationals, Elem::Q(x), Elem::Q(y)) => Elem::Q(x * y),
            (Kind::Prime(p), Elem::Fp(x), Elem::Fp(y)) => Elem::Fp(mulmod(*x, *y, *p)),
            (Kind::RatFun { p, .. }, Elem::FpT(x), Elem::FpT(y)) => {
                if x.num.is_empty() || y.num.is_empty() {
                    return self.zero();
                }
                Elem::FpT(RatFn::new(
                    fp_poly::mul(&x.num, &y.num, *p),
                    fp_poly::mul(&x.den, &y.den, *p),
                    *p,
                ))
            }
            (Kind::Ext { base, minpoly, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                let d = minpoly.len() - 1;
                let mut prod = vec![base.zero(); 2 * d - 1];
                for (i, s) in x.iter().enumerate() {
                    if base.is_zero(s) {
                        continue;
                    }
                    for (j, t) in y.iter().enumerate() {
                        prod[i + j] = base.add(&prod[i + j], &base.mul(s, t));
                    }
                }
                for k in (d..prod.len()).rev() {
                    let c = prod[k].clone();
                    if base.is_zero(&c) {
                        continue;
                    }
                    for i in 0..d {
                        prod[k - d + i] = base.sub(&prod[k - d + i], &base.mul(&c, &minpoly[i]));
                    }
                }
                prod.truncate(d);
                Elem::Ext(prod)
            }
            _ => panic!("field mismatch in mul"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(AlgError::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (Kind::Rationals, Elem::Q(x)) => Elem::Q(x.recip()),
            (Kind::Prime(p), Elem::Fp(x)) => Elem::Fp(invmod(*x, *p)),
            (Kind::RatFun { p, .. }, Elem::FpT(x)) => {
                Elem::FpT(RatFn::new(x.den.clone(), x.num.clone(), *p))
            }
            (Kind::Ext { base, minpoly, .. }, Elem::Ext(x)) => {
                let mut a_poly = x.clone();
                poly::trim(base, &mut a_poly);
                let (g, s, _) = poly::ext_gcd(base, &a_poly, minpoly);
                if !poly::is_one(base, &g) {
                    return Err(AlgError::Invariant(
                        "extension element shares a factor with the minimal polynomial".into(),
                    ));
                }
                let d = minpoly.len() - 1;
                let mut v = poly::rem(base, &s, minpoly);
                v.resize(d, base.zero());
                Elem::Ext(v)
            }
            _ => panic!("field mismatch in inv"),
        })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, e: &BigUint) -> Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub fn pow_u64(&self, a: &Elem, e: u64) -> Elem {
        self.pow(a, &BigUint::from(e))
    }

    /// The unique `b` with `b^(p^k) = a`, for finite fields.
    pub fn frobenius_root(&self, a: &Elem, k: u64) -> Result<Elem> {
        let e = self
            .prime_degree()
            .ok_or_else(|| AlgError::UnsupportedField(format!("{self} is not finite")))?;
        let p = self.characteristic();
        let j = (e - k % e) % e;
        Ok(self.pow(a, &poly::biguint_pow(p, j)))
    }

    /// Substitutes `t -> t^k` in an element of `F_p(t)`.
    #[cfg(test)]
    pub(crate) fn inflate_ratfn(&self, a: &Elem, k: usize) -> Elem {
        match (&*self.0, a) {
            (Kind::RatFun { p, .. }, Elem::FpT(r)) => Elem::FpT(RatFn::new(
                fp_poly::inflate(&r.num, k),
                fp_poly::inflate(&r.den, k),
                *p,
            )),
            _ => panic!("inflate_ratfn on a non-rational-function field"),
        }
    }

    /// Writes `a = sum_{r<q} t^r * c_r(t^q)` for `a` in `F_p(t)` and returns the
    /// `c_r` as elements of `F_p(s)` (represented in this same field).
    pub(crate) fn split_over_power_subfield(&self, a: &Elem, q: usize) -> Vec<Elem> {
        let (p, r) = match (&*self.0, a) {
            (Kind::RatFun { p, .. }, Elem::FpT(r)) => (*p, r),
            _ => panic!("split_over_power_subfield on a non-rational-function field"),
        };
        // a = num * den^(q-1) / den^q and den(t)^q = den(t^q)
        let lifted = fp_poly::mul(&r.num, &fp_poly::pow(&r.den, q as u64 - 1, p), p);
        let mut comps = vec![Vec::new(); q];
        for (i, &c) in lifted.iter().enumerate() {
            let slot = &mut comps[i % q];
            let idx = i / q;
            if slot.len() <= idx {
                slot.resize(idx + 1, 0);
            }
            slot[idx] = c;
        }
        comps
            .into_iter()
            .map(|num| Elem::FpT(RatFn::new(num, r.den.clone(), p)))
            .collect()
    }

    /// Uniformly random for finite fields; small-height values otherwise.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match &*self.0 {
            Kind::Rationals => {
                let n: i64 = rng.random_range(-4..=4);
                let d: i64 = if rng.random_bool(0.3) { rng.random_range(2..=3) } else { 1 };
                Elem::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
            }
            Kind::Prime(p) => Elem::Fp(rng.random_range(0..*p)),
            Kind::RatFun { p, .. } => {
                let num: Vec<u64> = (0..2).map(|_| rng.random_range(0..*p)).collect();
                let den = if rng.random_bool(0.3) {
                    vec![rng.random_range(0..*p), 1]
                } else {
                    vec![1]
                };
                Elem::FpT(RatFn::new(num, den, *p))
            }
            Kind::Ext { base, minpoly, .. } => {
                Elem::Ext((0..minpoly.len() - 1).map(|_| base.random(rng)).collect())
            }
        }
    }

    /// Element of `Q` as a `BigRational`, if this is `Q`.
    pub fn as_rational<'a>(&self, a: &'a Elem) -> Option<&'a BigRational> {
        match a {
            Elem::Q(q) => Some(q),
            _ => None,
        }
    }

    /// Integer value of a prime-field element.
    pub fn as_u64(&self, a: &Elem) -> Option<u64> {
        match a {
            Elem::Fp(x) => Some(*x),
            Elem::Q(q) if q.is_integer() => q.to_integer().to_u64(),
            _ => None,
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p > MAX_PRIME {
        return Err(AlgError::Unsupported(format!("prime {p} exceeds 2^31")));
    }
    if !is_prime(p) {
        return Err(AlgError::NotPrime(p));
    }
    Ok(())
}

fn check_var(var: &str) -> Result<()> {
    let ok = !var.is_empty()
        && var.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(AlgError::Parse(format!("invalid variable name `{var}`")))
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// A self-describing scalar: a canonical value tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    pub field: Field,
    pub value: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn new(field: &Field, value: Elem) -> Result<Scalar> {
        if !field.contains(&value) {
            return Err(AlgError::FieldMismatch(format!(
                "{value:?} is not a canonical element of {field}"
            )));
        }
        Ok(Scalar {
            field: field.clone(),
            value,
        })
    }

    pub fn parse(field: &Field, s: &str) -> Result<Scalar> {
        Ok(Scalar {
            field: field.clone(),
            value: field.parse(s)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(&self.value))
    }
}

/// Field arithmetic on tagged scalars; operands from different fields are
/// rejected rather than coerced.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    if a.field != b.field {
        return Err(AlgError::FieldMismatch(format!("{} vs {}", a.field, b.field)));
    }
    let f = &a.field;
    let value = match op {
        ArithOp::Add => f.add(&a.value, &b.value),
        ArithOp::Sub => f.sub(&a.value, &b.value),
        ArithOp::Mul => f.mul(&a.value, &b.value),
        ArithOp::Div => f.div(&a.value, &b.value)?,
    };
    Ok(Scalar {
        field: f.clone(),
        value,
    })
}

#[cfg(test)]
mod tests;
