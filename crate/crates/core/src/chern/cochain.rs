use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::group::GroupCocycleData;
use crate::algebra::{labels, Carrier, Derivation, Element, Trace};
use crate::engine::operators::encode;
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::{FieldSpec, Scalar};

pub type CarrierRef = Arc<dyn Carrier>;

/// Where a cochain was verified: the whole (finite) basis or an explicit
/// list of labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Window {
    Full,
    Labels(Vec<String>),
}

impl Window {
    pub fn to_json(&self) -> Value {
        match self {
            Window::Full => json!("full"),
            Window::Labels(l) => json!(l),
        }
    }

    pub fn contains(&self, label: &str) -> bool {
        match self {
            Window::Full => true,
            Window::Labels(l) => l.iter().any(|x| x == label),
        }
    }
}

/// Rule-generated cochains: values are computed from the data on demand.
#[derive(Clone)]
pub enum CochainRule {
    /// `φ(a) = τ(a)`.
    FromTrace(Trace),
    /// `φ(a0,…,an) = Σ_w c_w Σ_σ sgn(σ) τ(a0 X_{w_σ(1)}(a1) ⋯ X_{w_σ(n)}(an))`
    /// with `c` in the basis of `exterior_basis(ds.len(), n)`. `ce_closed`
    /// records whether the Chevalley–Eilenberg boundary of `c` vanished.
    FromLie { tau: Trace, ds: Vec<Derivation>, c: SparseVec, ce_closed: bool },
    /// `φ(g0,…,gn) = c(g1,…,gn)` when `g0⋯gn = e`, else 0.
    FromGroupCocycle(GroupCocycleData),
    /// Values on the listed tuples, zero elsewhere.
    Explicit(BTreeMap<Vec<String>, Scalar>),
    /// `(tr#φ)(E_{i0 j0}a0, …) = φ(a0, …)` when `j_t = i_{t+1}` cyclically,
    /// on `M_k(A)` with labels `E:i,j|a`.
    MatrixTrace { base: Box<Cochain>, k: usize },
    /// `(bφ)(a0,…,a_{n+1})`.
    Coboundary(Box<Cochain>),
}

#[derive(Clone)]
pub enum Representation {
    /// Values on every basis tuple of a finite carrier, lexicographic.
    Dense(Vec<Scalar>),
    Rule(CochainRule),
}

/// A multilinear functional `A^{⊗(n+1)} → F`, determined by its values on
/// basis tuples.
#[derive(Clone)]
pub struct Cochain {
    carrier: CarrierRef,
    degree: usize,
    rep: Representation,
    verified: Option<Window>,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cochain")
            .field("carrier", &self.carrier.name())
            .field("degree", &self.degree)
            .field("kind", &self.kind())
            .field("verified", &self.verified)
            .finish()
    }
}

fn finite_labels(carrier: &dyn Carrier) -> Result<&[String]> {
    carrier
        .finite_labels()
        .ok_or_else(|| Error::Invalid(format!("{} is not finite-dimensional", carrier.name())))
}

/// `(−1)^k` as a scalar.
pub(crate) fn sign(field: &FieldSpec, k: usize) -> Scalar {
    Scalar::from_int(field, if k % 2 == 0 { 1 } else { -1 })
}

/// All permutations of `0..n` with their signs.
pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, if inversions % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

impl Cochain {
    pub fn dense(carrier: CarrierRef, degree: usize, values: Vec<Scalar>) -> Result<Self> {
        let d = finite_labels(carrier.as_ref())?.len();
        let expected = d.checked_pow(degree as u32 + 1).ok_or_else(|| Error::Invalid("cochain too large".into()))?;
        if values.len() != expected {
            return Err(Error::Invalid(format!("dense {degree}-cochain needs {expected} values, got {}", values.len())));
        }
        Ok(Cochain { carrier, degree, rep: Representation::Dense(values), verified: None })
    }

    /// Dense cochain from a function of basis-index tuples.
    pub fn dense_from(carrier: CarrierRef, degree: usize, f: impl Fn(&[usize]) -> Scalar) -> Result<Self> {
        let d = finite_labels(carrier.as_ref())?.len();
        let size = d.pow(degree as u32 + 1);
        let values = (0..size).map(|i| f(&crate::engine::operators::decode(i, d, degree + 1))).collect();
        Self::dense(carrier, degree, values)
    }

    pub fn rule(carrier: CarrierRef, degree: usize, rule: CochainRule) -> Self {
        Cochain { carrier, degree, rep: Representation::Rule(rule), verified: None }
    }

    pub fn from_trace(carrier: CarrierRef, tau: Trace) -> Self {
        Self::rule(carrier, 0, CochainRule::FromTrace(tau))
    }

    /// Table on declared support; every key must have `degree + 1` labels of
    /// the carrier.
    pub fn explicit(carrier: CarrierRef, degree: usize, table: BTreeMap<Vec<String>, Scalar>) -> Result<Self> {
        for key in table.keys() {
            if key.len() != degree + 1 {
                return Err(Error::Invalid(format!("tuple {key:?} does not have {} entries", degree + 1)));
            }
            if let Some(l) = key.iter().find(|l| !carrier.contains(l)) {
                return Err(Error::CarrierMismatch(format!("{l} is not a basis label of {}", carrier.name())));
            }
        }
        let table = table.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(Self::rule(carrier, degree, CochainRule::Explicit(table)))
    }

    /// `tr#φ` on `M_k(A)`; `mk` must be the carrier with labels `E:i,j|a`.
    pub fn matrix_trace(&self, mk: CarrierRef, k: usize) -> Self {
        Self::rule(mk, self.degree, CochainRule::MatrixTrace { base: Box::new(self.clone()), k })
    }

    /// The Hochschild coboundary `bφ`, a cochain of one degree higher.
    pub fn coboundary(&self) -> Self {
        Self::rule(self.carrier.clone(), self.degree + 1, CochainRule::Coboundary(Box::new(self.unverified())))
    }

    pub fn carrier(&self) -> &CarrierRef {
        &self.carrier
    }

    pub fn field(&self) -> FieldSpec {
        self.carrier.field()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn kind(&self) -> &'static str {
        match &self.rep {
            Representation::Dense(_) => "dense",
            Representation::Rule(r) => match r {
                CochainRule::FromTrace(_) => "trace",
                CochainRule::FromLie { .. } => "lie",
                CochainRule::FromGroupCocycle(_) => "group_cocycle",
                CochainRule::Explicit(_) => "explicit",
                CochainRule::MatrixTrace { .. } => "matrix_trace",
                CochainRule::Coboundary(_) => "coboundary",
            },
        }
    }

    /// The window on which `λφ = φ` and `bφ = 0` were verified, if any.
    pub fn verified_window(&self) -> Option<&Window> {
        self.verified.as_ref()
    }

    pub fn is_verified(&self) -> bool {
        self.verified.is_some()
    }

    /// A copy without the verification stamp.
    pub fn unverified(&self) -> Self {
        Cochain { verified: None, ..self.clone() }
    }

    pub(crate) fn stamp(mut self, window: Window) -> Self {
        self.verified = Some(window);
        self
    }

    /// Value on a tuple of basis labels.
    pub fn eval(&self, args: &[&str]) -> Result<Scalar> {
        if args.len() != self.degree + 1 {
            return Err(Error::Invalid(format!("{}-cochain takes {} arguments, got {}", self.degree, self.degree + 1, args.len())));
        }
        let field = self.field();
        match &self.rep {
            Representation::Dense(values) => {
                let labels = finite_labels(self.carrier.as_ref())?;
                let idx: Vec<usize> = args
                    .iter()
                    .map(|l| labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.to_string())))
                    .collect::<Result<_>>()?;
                Ok(values[encode(&idx, labels.len())].clone())
            }
            Representation::Rule(rule) => match rule {
                CochainRule::FromTrace(tau) => Ok(tau.value(args[0])),
                CochainRule::FromLie { tau, ds, c, .. } => self.eval_lie(tau, ds, c, args),
                CochainRule::FromGroupCocycle(g) => g.eval_cyclic(args),
                CochainRule::Explicit(table) => {
                    let key: Vec<String> = args.iter().map(|s| s.to_string()).collect();
                    Ok(table.get(&key).cloned().unwrap_or_else(|| Scalar::zero(&field)))
                }
                CochainRule::MatrixTrace { base, k } => {
                    let mut inner = Vec::with_capacity(args.len());
                    let mut units = Vec::with_capacity(args.len());
                    for l in args {
                        let (unit, a) = l.split_once('|').ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
                        let (i, j) = labels::parse_matrix_unit(unit).ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
                        if i == 0 || j == 0 || i > *k || j > *k {
                            return Err(Error::UnknownLabel(l.to_string()));
                        }
                        units.push((i, j));
                        inner.push(a);
                    }
                    let chained = (0..units.len()).all(|t| units[t].1 == units[(t + 1) % units.len()].0);
                    if chained {
                        base.eval(&inner)
                    } else {
                        Ok(Scalar::zero(&field))
                    }
                }
                CochainRule::Coboundary(base) => coboundary_value(base, self.carrier.as_ref(), args),
            },
        }
    }

    fn eval_lie(&self, tau: &Trace, ds: &[Derivation], c: &SparseVec, args: &[&str]) -> Result<Scalar> {
        let n = self.degree;
        let field = self.field();
        let basis = crate::engine::exterior_basis(ds.len(), n);
        let perms = permutations(n);
        let a0 = Element::basis(field, args[0]);
        let mut acc = Scalar::zero(&field);
        for (w, cw) in c {
            let w = &basis[*w];
            for (p, s) in &perms {
                let mut x = a0.clone();
                for j in 0..n {
                    x = self.carrier.mul(&x, &ds[w[p[j]]].value(args[j + 1]))?;
                    if x.is_zero() {
                        break;
                    }
                }
                if !x.is_zero() {
                    acc = &acc + &(&tau.apply(&x) * &cw.mul_int(*s));
                }
            }
        }
        Ok(acc)
    }

    /// Multilinear extension to arbitrary elements.
    pub fn eval_elements(&self, args: &[Element]) -> Result<Scalar> {
        self.eval_chain(&Chain::tensor(self.field(), args))
    }

    /// `Σ c · φ(labels)` over the terms of a chain of matching degree.
    pub fn eval_chain(&self, chain: &Chain) -> Result<Scalar> {
        if chain.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: chain.degree });
        }
        let mut acc = Scalar::zero(&self.field());
        for (t, c) in &chain.terms {
            let args: Vec<&str> = t.iter().map(String::as_str).collect();
            acc = &acc + &(c * &self.eval(&args)?);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "kind": self.kind(),
            "degree": self.degree,
            "carrier": self.carrier.name(),
            "field": self.field().to_json(),
            "verified": self.verified.is_some(),
        });
        if let Some(w) = &self.verified {
            out["window"] = w.to_json();
        }
        let table = |entries: Vec<(Vec<String>, &Scalar)>| -> Value {
            entries.into_iter().map(|(t, v)| json!({"tensor": t, "value": v.to_string()})).collect()
        };
        match &self.rep {
            Representation::Dense(values) => {
                let labels = self.carrier.finite_labels().unwrap_or(&[]);
                let d = labels.len();
                let entries = values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| {
                        let t = crate::engine::operators::decode(i, d, self.degree + 1).iter().map(|&k| labels[k].clone()).collect();
                        (t, v)
                    })
                    .collect();
                out["values"] = table(entries);
            }
            Representation::Rule(CochainRule::Explicit(t)) => {
                out["values"] = table(t.iter().map(|(k, v)| (k.clone(), v)).collect());
            }
            Representation::Rule(CochainRule::FromLie { c, ce_closed, .. }) => {
                out["c"] = c.iter().map(|(i, v)| json!([i, v.to_string()])).collect();
                out["ce_closed"] = json!(ce_closed);
            }
            Representation::Rule(CochainRule::FromGroupCocycle(g)) => {
                out["cocycle"] = json!(g.name());
            }
            Representation::Rule(CochainRule::MatrixTrace { k, .. }) => {
                out["k"] = json!(k);
            }
            _ => {}
        }
        out
    }
}

fn product_terms(carrier: &dyn Carrier, a: &str, b: &str) -> Result<Element> {
    carrier.basis_product(a, b)
}

/// `(bφ)(a0,…,a_{n+1}) = Σ_{i≤n} (−1)^i φ(…, a_i a_{i+1}, …) + (−1)^{n+1} φ(a_{n+1}a0, a1, …, an)`.
fn coboundary_value(phi: &Cochain, carrier: &dyn Carrier, args: &[&str]) -> Result<Scalar> {
    let field = carrier.field();
    let m = args.len() - 1;
    let mut acc = Scalar::zero(&field);
    for i in 0..=m {
        let (x, y) = if i < m { (args[i], args[i + 1]) } else { (args[m], args[0]) };
        for (l, c) in product_terms(carrier, x, y)?.terms() {
            let mut t: Vec<&str> = Vec::with_capacity(m);
            if i < m {
                t.extend_from_slice(&args[..i]);
                t.push(l);
                t.extend_from_slice(&args[i + 2..]);
            } else {
                t.push(l);
                t.extend_from_slice(&args[1..m]);
            }
            acc = &acc + &(&(c * &sign(&field, i)) * &phi.eval(&t)?);
        }
    }
    Ok(acc)
}

/// A finite linear combination of basis tensors `a0⊗…⊗an`.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain {
    pub degree: usize,
    pub field: FieldSpec,
    pub terms: BTreeMap<Vec<String>, Scalar>,
}

impl Chain {
    pub fn zero(field: FieldSpec, degree: usize) -> Self {
        Chain { degree, field, terms: BTreeMap::new() }
    }

    /// Expansion of `x0⊗…⊗xn`.
    pub fn tensor(field: FieldSpec, factors: &[Element]) -> Self {
        let mut terms: BTreeMap<Vec<String>, Scalar> = BTreeMap::from([(Vec::new(), Scalar::one(&field))]);
        for f in factors {
            let mut next = BTreeMap::new();
            for (t, c) in &terms {
                for (l, x) in f.terms() {
                    let mut k = t.clone();
                    k.push(l.clone());
                    next.insert(k, c * x);
                }
            }
            terms = next;
        }
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Chain { degree: factors.len().saturating_sub(1), field, terms }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Chain) {
        for (t, x) in &other.terms {
            let v = match self.terms.get(t) {
                Some(y) => y + &(c * x),
                None => c * x,
            };
            if v.is_zero() {
                self.terms.remove(t);
            } else {
                self.terms.insert(t.clone(), v);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `λ(a0⊗…⊗an) = (−1)^n an⊗a0⊗…⊗a_{n−1}`.
    pub fn rotate(&self) -> Chain {
        let s = sign(&self.field, self.degree);
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                let mut r = t.clone();
                r.rotate_right(1);
                (r, &s * c)
            })
            .collect();
        Chain { degree: self.degree, field: self.field, terms }
    }

    /// Labels occurring in some term, sorted.
    pub fn support(&self) -> Vec<String> {
        let mut s: Vec<String> = self.terms.keys().flatten().cloned().collect();
        s.sort();
        s.dedup();
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "terms": self.terms.iter().map(|(t, c)| json!({"tensor": t, "coeff": c.to_string()})).collect::<Vec<_>>(),
        })
    }
}

/// Interned labels plus memoized products and cochain values, so window
/// checks evaluate each distinct tuple once.
struct Evaluator<'c> {
    phi: &'c Cochain,
    ids: HashMap<String, u32>,
    names: Vec<String>,
    products: HashMap<(u32, u32), Arc<Vec<(u32, Scalar)>>>,
    values: HashMap<Vec<u32>, Scalar>,
}

impl<'c> Evaluator<'c> {
    fn new(phi: &'c Cochain) -> Self {
        Evaluator { phi, ids: HashMap::new(), names: Vec::new(), products: HashMap::new(), values: HashMap::new() }
    }

    fn intern(&mut self, l: &str) -> u32 {
        if let Some(&i) = self.ids.get(l) {
            return i;
        }
        let i = self.names.len() as u32;
        self.names.push(l.to_string());
        self.ids.insert(l.to_string(), i);
        i
    }

    fn product(&mut self, a: u32, b: u32) -> Result<Arc<Vec<(u32, Scalar)>>> {
        if let Some(p) = self.products.get(&(a, b)) {
            return Ok(p.clone());
        }
        let e = self.phi.carrier.basis_product(&self.names[a as usize], &self.names[b as usize])?;
        let terms: Vec<(u32, Scalar)> = e.terms().map(|(l, c)| (l.clone(), c.clone())).collect::<Vec<_>>().into_iter().map(|(l, c)| (self.intern(&l), c)).collect();
        let terms = Arc::new(terms);
        self.products.insert((a, b), terms.clone());
        Ok(terms)
    }

    fn value(&mut self, t: &[u32]) -> Result<Scalar> {
        if let Some(v) = self.values.get(t) {
            return Ok(v.clone());
        }
        let args: Vec<&str> = t.iter().map(|&i| self.names[i as usize].as_str()).collect();
        let v = self.phi.eval(&args)?;
        self.values.insert(t.to_vec(), v.clone());
        Ok(v)
    }

    fn labels(&self, t: &[u32]) -> Vec<String> {
        t.iter().map(|&i| self.names[i as usize].clone()).collect()
    }
}

/// Calls `f` on every tuple of length `len` over `0..w`.
fn for_each_tuple(w: usize, len: usize, mut f: impl FnMut(&[u32]) -> Result<()>) -> Result<()> {
    if w == 0 {
        return Ok(());
    }
    let mut t = vec![0u32; len];
    loop {
        f(&t)?;
        let mut k = len;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            t[k] += 1;
            if (t[k] as usize) < w {
                break;
            }
            t[k] = 0;
        }
    }
}

fn resolve_window(phi: &Cochain, window: Option<Vec<String>>) -> Result<(Window, Vec<String>)> {
    match window {
        Some(w) => {
            if let Some(l) = w.iter().find(|l| !phi.carrier.contains(l)) {
                return Err(Error::CarrierMismatch(format!("{l} is not a basis label of {}", phi.carrier.name())));
            }
            Ok((Window::Labels(w.clone()), w))
        }
        None => {
            let labels = phi.carrier.finite_labels().ok_or_else(|| {
                Error::Invalid(format!("{} is infinite-dimensional; a verification window is required", phi.carrier.name()))
            })?;
            Ok((Window::Full, labels.to_vec()))
        }
    }
}

/// `φ(a_n, a_0, …, a_{n−1}) = (−1)^n φ(a_0, …, a_n)` on every tuple from
/// the window; fails with the first offending tuple.
pub fn check_cyclic(phi: &Cochain, window: Option<Vec<String>>) -> Result<()> {
    let (_, w) = resolve_window(phi, window)?;
    let mut ev = Evaluator::new(phi);
    let ids: Vec<u32> = w.iter().map(|l| ev.intern(l)).collect();
    let n = phi.degree;
    let s = sign(&phi.field(), n);
    let mut rotated = vec![0u32; n + 1];
    let mut t = vec![0u32; n + 1];
    for_each_tuple(ids.len(), n + 1, |pos| {
        for (k, p) in pos.iter().enumerate() {
            t[k] = ids[*p as usize];
        }
        rotated[0] = t[n];
        rotated[1..].copy_from_slice(&t[..n]);
        if ev.value(&rotated)? != &s * &ev.value(&t)? {
            return Err(Error::NotCyclic(ev.labels(&t)));
        }
        Ok(())
    })
}

/// `bφ = 0` on every `(n+2)`-tuple from the window.
pub fn check_closed(phi: &Cochain, window: Option<Vec<String>>) -> Result<()> {
    let (_, w) = resolve_window(phi, window)?;
    let mut ev = Evaluator::new(phi);
    let ids: Vec<u32> = w.iter().map(|l| ev.intern(l)).collect();
    let m = phi.degree + 1;
    let field = phi.field();
    let signs = [sign(&field, 0), sign(&field, 1)];
    let mut t = vec![0u32; m + 1];
    let mut buf = Vec::with_capacity(m);
    for_each_tuple(ids.len(), m + 1, |pos| {
        for (k, p) in pos.iter().enumerate() {
            t[k] = ids[*p as usize];
        }
        let mut acc = Scalar::zero(&field);
        for i in 0..=m {
            let prod = if i < m { ev.product(t[i], t[i + 1])? } else { ev.product(t[m], t[0])? };
            for (l, c) in prod.iter() {
                buf.clear();
                if i < m {
                    buf.extend_from_slice(&t[..i]);
                    buf.push(*l);
                    buf.extend_from_slice(&t[i + 2..]);
                } else {
                    buf.push(*l);
                    buf.extend_from_slice(&t[1..m]);
                }
                let v = ev.value(&buf)?;
                if !v.is_zero() {
                    acc = &acc + &(&(c * &signs[i % 2]) * &v);
                }
            }
        }
        if !acc.is_zero() {
            return Err(Error::NotClosed(ev.labels(&t)));
        }
        Ok(())
    })
}

/// Checks `(1−λ)φ = 0` and `bφ = 0` exactly on the window (the whole basis
/// of a finite carrier when `window` is `None`) and stamps the window.
pub fn validate_cyclic_cocycle(phi: Cochain, window: Option<Vec<String>>) -> Result<Cochain> {
    let (stamp, _) = resolve_window(&phi, window.clone())?;
    check_cyclic(&phi, window.clone())?;
    check_closed(&phi, window)?;
    Ok(phi.stamp(stamp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{validate_trace, Algebra};
    use crate::constructions::{matrix_algebra, truncated_poly};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn m2() -> Algebra {
        matrix_algebra(Q, 2).unwrap()
    }

    fn matrix_trace(a: &Algebra) -> Trace {
        let vals = a.labels().iter().filter_map(|l| {
            let (i, j) = labels::parse_matrix_unit(l)?;
            (i == j).then(|| (l.clone(), Scalar::one(&Q)))
        });
        validate_trace(a, Trace::table(Q, vals), None).unwrap()
    }

    #[test]
    fn matrix_trace_is_a_cyclic_cocycle() {
        let a = m2();
        let tau = matrix_trace(&a);
        let phi = validate_cyclic_cocycle(Cochain::from_trace(Arc::new(a), tau), None).unwrap();
        assert_eq!(phi.verified_window(), Some(&Window::Full));
    }

    #[test]
    fn non_trace_functional_is_not_closed() {
        let a = m2();
        let psi = Cochain::explicit(Arc::new(a), 0, BTreeMap::from([(vec!["E:1,2".to_string()], Scalar::one(&Q))])).unwrap();
        assert!(matches!(validate_cyclic_cocycle(psi, None), Err(Error::NotClosed(_))));
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert!(p.contains(&(vec![1, 0, 2], -1)));
    }

    #[test]
    fn dense_and_coboundary_agree_with_formula() {
        // ψ(a0, a1) = coefficient product, then bψ by hand on one tuple
        let dual: CarrierRef = Arc::new(truncated_poly(Q, 2).unwrap());
        let psi = Cochain::dense_from(dual.clone(), 1, |t| Scalar::from_int(&Q, (t[0] * 2 + t[1] + 1) as i64)).unwrap();
        let b = psi.coboundary();
        // labels 1, x; (bψ)(x, 1, x) = ψ(x, x) − ψ(x, x) + ψ(x², 1) = 0
        let l = dual.finite_labels().unwrap().to_vec();
        assert_eq!(b.eval(&[&l[1], &l[0], &l[1]]).unwrap(), Scalar::zero(&Q));
        // (bψ)(1, 1, x) = ψ(1, x) − ψ(1, x) + ψ(x, 1) = ψ(x, 1) = 3
        assert_eq!(b.eval(&[&l[0], &l[0], &l[1]]).unwrap(), Scalar::from_int(&Q, 3));
    }

    #[test]
    fn chain_rotation_and_expansion() {
        let x = Element::basis(Q, "a").add(&Element::basis(Q, "b"));
        let c = Chain::tensor(Q, &[x.clone(), Element::basis(Q, "c")]);
        assert_eq!(c.terms.len(), 2);
        let r = c.rotate();
        assert_eq!(r.terms[&vec!["c".to_string(), "a".to_string()]], Scalar::from_int(&Q, -1));
        assert_eq!(r.rotate(), c);
    }
}
