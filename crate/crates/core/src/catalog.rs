//! The identity catalog: every checkable identity behind one trait, keyed by id.

use num_traits::{One, Zero};

use crate::akiyama::{self, SUM_IDENTITY_IDS};
use crate::connect::{self, FunctionalKind, LinearFunctional, CONNECTION_IDS, FACTORIZATION_IDS, PROPERTY_IDS};
use crate::error::{Error, Result};
use crate::numbers::{genocchi, median_genocchi, median_genocchi_relation, odd_fibonacci_inverse_column, tangent};
use crate::polyalg::fib_poly;
use crate::rational::{from_big, int, pow2, sign, Rational};
use crate::report::IdentityReport;
use crate::seidel::{self, SeidelVariant};
use crate::stirling::{self, WeightSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Sequence,
    Stirling,
    Connection,
    Factorization,
    Property,
    Seidel,
    Summation,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::Sequence => "sequence",
            Group::Stirling => "stirling",
            Group::Connection => "connection",
            Group::Factorization => "factorization",
            Group::Property => "property",
            Group::Seidel => "seidel",
            Group::Summation => "summation",
        }
    }
}

/// One checkable identity. `depth` is the truncation order for matrix
/// identities and the largest index `n` otherwise.
pub trait Identity: Send + Sync {
    fn id(&self) -> &str;
    fn group(&self) -> Group;
    fn describe(&self) -> &str;
    fn check(&self, depth: usize) -> Result<IdentityReport>;
}

struct Entry {
    id: &'static str,
    group: Group,
    description: &'static str,
    run: fn(&str, usize) -> Result<IdentityReport>,
}

impl Identity for Entry {
    fn id(&self) -> &str {
        self.id
    }

    fn group(&self) -> Group {
        self.group
    }

    fn describe(&self) -> &str {
        self.description
    }

    fn check(&self, depth: usize) -> Result<IdentityReport> {
        (self.run)(self.id, depth)
    }
}

fn description(id: &str) -> &'static str {
    match id {
        "1.10" => "(2k+2) T_{2k+1} = 2^{2k+1} G_{2k+2}",
        "4.18" => "G_{2n+2} = sum (-1)^{n-j} C(2n+1-j,j) H_{2j+1}",
        "genocchi-routes" => "G_{2n} from Bernoulli numbers, the Seidel triangle, lambda and the first column of A agree",
        "3.28" => "S^w^(n,k) = S^w(n+1,k+1) - S^w(n,k+1), w(n) = (n+1)^2",
        "3.29" => "s^w^(n,k) = -sum_{j<=k} s^w(n+1,j), w(n) = (n+1)^2",
        "3.31" => "S^w^ diag(F(l+1)) s^w^ = summed row differences of S^w diag(F) s^w, F(l) = l+1",
        "2.1" => "F_{2n+2} = sum a(n,k) F_{2k+1}",
        "2.2" => "F_{2n+1} = sum C(2n+1,2k+1) B_{2n-2k}/(k+1) F_{2k+2}",
        "2.3" => "L_{2n+1} = sum b(n,k) L_{2k}, tangent and Genocchi forms",
        "2.4" => "L_{2n} = sum 2 C(2n,2j) B_{2n-2j}/(2j+1) L_{2j+1}",
        "3.14" => "sum C(2n-j,j) LS(j,k) = T(n+1,k+1)",
        "3.15" => "sum C(2n+1-j,j) LS(j,k) = (k+1) T(n+1,k+1)",
        "3.20" => "sum C(n+1,2n-2j) T(j+1,k+1) = LS(n+1,k+1)",
        "3.21" => "sum C(n+1,2n-2j+1) T(j+1,k+1) = (k+1) LS(n+1,k+1)",
        "4.6" => "F_{2n+2} = sum a(n,k) F_{2k+1}, rows of A",
        "4.40" => "F_{2n+1} = sum a1(n,k) (F_{2k} + F_{2k+1})",
        "4.42" => "F_{2n+1} + F_{2n+2} = sum a2(n,k) (F_{2k} + F_{2k+1})",
        "4.46" => "F_{2n+1} = sum w(n,k) F_{2k+2}, rows of A^-1",
        "4.50" => "F_{2n} + F_{2n+1} = sum z(n,k) (F_{2k+1} + F_{2k+2})",
        "5.8" => "sum l(2n,j) V(j,k) = 2 U(n,k)",
        "5.9" => "sum l(2n+1,j) V(j,k) = (2k+1) U(n,k)",
        "2.15/2.16-inverse" => "C^-1 = (C(i,j) b(i-j)/(j+1))",
        "3.9" => "C = S1 diag(j+1) s1 = Bin1 Bin0^-1",
        "3.10" => "C Bin0 = Bin1",
        "3.11" => "Bin0 S = S1",
        "3.12" => "Bin1 S = S1 diag(j+1)",
        "3.13" => "Bin0^-1 Bin1 = S diag(i+1) s",
        "3.16" => "(C(2i-j,j)) LS = T1",
        "3.17" => "(C(2i+1-j,j)) LS = T1 diag(j+1)",
        "3.18" => "(C(2i+1-j,j)) (C(2i-j,j))^-1 = T1 diag(j+1) T1^-1",
        "3.19" => "(C(2i-j,j))^-1 (C(2i+1-j,j)) = LS diag(j+1) LS^-1",
        "3.22" => "(C(i+1,2i-2j)) T1 = LS1",
        "3.23" => "(C(i+1,2i-2j+1)) T1 = LS1 diag(j+1)",
        "3.24" => "(C(i+1,2i-2j))^-1 (C(i+1,2i-2j+1)) = T1 diag(j+1) T1^-1",
        "3.25" => "(C(i+1,2i-2j+1)) (C(i+1,2i-2j))^-1 = LS1 diag(j+1) LS1^-1",
        "3.26" => "(C(2i+1-j,j)) (C(2i-j,j))^-1 = (C(i+1,2i-2j))^-1 (C(i+1,2i-2j+1))",
        "3.27" => "(C(i+1,2i-2j)) (C(2i+1-j,j)) = (C(i+1,2i-2j+1)) (C(2i-j,j)) = LS1 diag(j+1) LS^-1",
        "4.11" | "4.14" => "A = (C(2i+1-j,j)) (C(2i-j,j))^-1",
        "4.12" => "A = T1 diag(j+1) T1^-1",
        "4.13" | "4.15" => "A = (C(i+1,2i-2j))^-1 (C(i+1,2i-2j+1))",
        "4.16" => "A = T1 diag(i+1) t1",
        "4.21" => "shifted minor of (C(2i-j,j))^-1 (C(2i+1-j,j)) = LS1 diag(j+2) LS1^-1",
        "4.43" => "a2 = S^w diag(i+2) s^w, w(n) = (n+2)^2",
        "4.49" => "A^-1 = T1 diag(1/(j+1)) t1",
        "5.7" => "B = (l(2i+1,j)) (l(2i,j))^-1",
        "5.10" => "B = U diag((2j+1)/2) u = (l(2i+1,j)) (l(2i,j))^-1",
        "4.3" => "lambda(F_{2n+1}) = [n=0]",
        "4.5" => "lambda(F_{2n}) = (-1)^{n-1} G_{2n}",
        "4.10" => "rows of A sum to 1",
        "4.22" => "phi_{k+1}(s^n) = LS(n,k)",
        "4.23" => "phi_{k+1}(F_{2n+1}) = T(n+1,k+1)",
        "4.24" => "phi_{k+1}(F_{2n+2}) = (k+1) T(n+1,k+1)",
        "4.28" => "A^2 closed form",
        "4.34" => "aa(n,0) = -a(n+1,0)",
        "4.35" => "aa(n,k) = a(n,k-1) - a(n+1,k)",
        "4.37" => "lambda*(F_{2n} + F_{2n+1}) = [n=0]",
        "4.38" => "lambda*(F_{2n-1} + F_{2n}) = (-1)^{n-1} (G_{2n} + G_{2n+2})",
        "4.44" => "mu(F_{2n+2}) = [n=0]",
        "4.45" => "mu(F_{2n+1}) = (2n+1) B_{2n}",
        "4.47" => "A^-1 = (C(2j+1,2k+1) B_{2j-2k}/(k+1))",
        "5.13" => "B^-1 = (2 C(2i,2j) B_{2i-2j}/(2j+1))",
        "A-eigenvectors" => "A T1[:,k] = (k+1) T1[:,k]",
        "A-at-quarter" => "sum 4^{n-k} (2k+1) a(n,k) = n+1",
        "A-at-minus-one" => "sum_k a(3n+2,3k) = sum_k a(3n+2,3k+2)",
        "lemma-4.3" => "first two columns of (C(2i-j,j))^-1 and of (C(2i-j,j))^-1 (C(2i+1-j,j))",
        "4.17" => "sum C(n,2k) (-1)^k G_{2n-2k} = [n=1]",
        "4.25" => "Seidel arrays: difference rule, row sums and diagonals h(2n,n,k) = h(2n+1,n,k) = LS(n,k)",
        "5.12" => "Seidel array from U: h(2n,n,k) = V(n,k)",
        "seidel-genocchi" => "Genocchi triangle: h(2n+1,0) = (-1)^n G_{2n+2}, h(2n,n) = (-1)^n H_{2n+1}",
        "4.48" => "sum_{i<=n+1} C(n+1,i) (n+i+1) B_{n+i} = 0",
        "4.48-even" => "sum C(n+1,2j+1) (2n-2j+1) B_{2n-2j} = C(n+1,2n)",
        "6.6" => "sum S(n+1,j+1) (-1)^j j!/(j+1) = b(n)",
        "6.7" => "sum s(n+1,j+1) b(j) = (-1)^n n!/(n+1)",
        "6.8" => "(-1)^{n-1} G_{2n} = sum (-1)^{k-1} T(n,k) k ((k-1)!)^2",
        "6.9" => "sum (-1)^{n-k} t(n,k) G_{2k} = n! (n-1)!",
        "6.10" => "(-1)^{n-1} G_{2n+2} = sum (-1)^{k-1} T(n,k) (k!)^2",
        "6.11" => "sum (-1)^{n-k} t(n,k) G_{2k+2} = (n!)^2",
        "6.12" => "sum (-1)^{n-k} LS(n+1,k+1) ((k+1)!)^2 = H_{2n+3}",
        "6.13" => "sum (-1)^{n-k} S^w(n,k) (k+1)! (k+2)! = G_{2n+2} + G_{2n+4}, w(n) = (n+2)^2",
        "6.14" => "sum (-1)^{n-k} s^w(n,k) (G_{2k+2} + G_{2k+4}) = (n+1)! (n+2)!",
        "6.15" => "(2n+1) B_{2n} = sum (-1)^j (j!)^2/(j+1) T(n+1,j+1)",
        "6.16" => "sum (-1)^{n-k} 4^{n-k} U(n,k) (2k+1) ((2k-1)!!)^2 = T_{2n+1}",
        "6.17" => "sum (-1)^k U(n,k) ((2k-1)!!)^2 / ((2k+1) 4^k) = B_{2n}",
        "6.2/6.4" => "Akiyama-Tanigawa first column equals the conjugated first column",
        _ => "",
    }
}

fn sequence_check(id: &str, depth: usize) -> Result<IdentityReport> {
    match id {
        "1.10" => IdentityReport::scan(id, depth, 0..=depth, |k| {
            Ok((
                int(2 * k as i64 + 2) * from_big(tangent(k)?),
                from_big(pow2(2 * k + 1)) * from_big(genocchi(k + 1)?),
            ))
        }),
        "4.18" => IdentityReport::scan(id, depth, 0..=depth, |n| {
            let h = |j: usize| sign_big(j) * odd_fibonacci_inverse_column(j);
            Ok((from_big(median_genocchi_relation(n, h)), from_big(genocchi(n + 1)?)))
        }),
        _ => genocchi_routes(id, depth),
    }
}

fn sign_big(n: usize) -> num_bigint::BigInt {
    if n % 2 == 0 {
        num_bigint::BigInt::one()
    } else {
        -num_bigint::BigInt::one()
    }
}

/// Compares `G_{2n}` for `1 <= n <= depth` computed four ways: the Bernoulli
/// relation, the first column of the Seidel triangle, `λ(F_{2n})`, and the
/// first column of `A`.
pub fn genocchi_routes(id: &str, depth: usize) -> Result<IdentityReport> {
    let rows = 2 * depth.max(1);
    let triangle = seidel::seidel_array(SeidelVariant::Genocchi, 0, rows)?;
    let lambda = LinearFunctional::named(FunctionalKind::Lambda, depth + 1)?;
    let a = connect::genocchi_matrix(depth.max(1))?;
    IdentityReport::scan(id, depth, 1..=depth, |n| {
        let by_bernoulli = from_big(genocchi(n)?);
        let routes = [
            sign(n - 1) * triangle.get(2 * n - 1, 0),
            sign(n - 1) * lambda.apply(&fib_poly(2 * n))?,
            sign(n - 1) * a.get(n - 1, 0),
        ];
        Ok(match routes.into_iter().find(|r| *r != by_bernoulli) {
            Some(bad) => (bad, by_bernoulli),
            None => (by_bernoulli.clone(), by_bernoulli),
        })
    })
}

fn stirling_check(id: &str, depth: usize) -> Result<IdentityReport> {
    let w = WeightSpec::shifted_square(1);
    match id {
        "3.31" => stirling::transfer_check(&w, |l| int(l as i64 + 1), depth.max(1)),
        _ => stirling::shifted_weight_check(id, &w, depth.max(1)),
    }
}

fn factorization_check(id: &str, depth: usize) -> Result<IdentityReport> {
    Ok(connect::verify_factorization(id, depth.max(1))?.report())
}

fn seidel_check(id: &str, depth: usize) -> Result<IdentityReport> {
    match id {
        "4.17" => seidel::seidel_identity_check(depth.max(1)),
        "4.48" => seidel::kaneko_check(depth),
        "4.48-even" => seidel::kaneko_even_form_check(depth),
        "4.25" | "5.12" => {
            let variant = if id == "4.25" { SeidelVariant::LsFromT } else { SeidelVariant::VFromU };
            let weights = if id == "4.25" { WeightSpec::legendre_stirling() } else { WeightSpec::v_product_quarter() };
            let target = stirling::stirling2(&weights, depth + 1)?;
            let arrays = (0..=depth)
                .map(|k| seidel::seidel_array(variant, k, 2 * depth + 2))
                .collect::<Result<Vec<_>>>()?;
            IdentityReport::scan_triangle(id, depth, 0..=depth, |n, k| {
                let arr = &arrays[k];
                if !arr.difference_rule_holds() {
                    return Ok((Rational::one(), Rational::zero()));
                }
                let diag = seidel::seidel_diagonal(arr, n)?;
                if variant == SeidelVariant::LsFromT {
                    let row_sum = arr.rows()[2 * n].iter().fold(Rational::zero(), |acc, x| acc + x);
                    if arr.get(2 * n + 1, 0) != row_sum {
                        return Ok((arr.get(2 * n + 1, 0), row_sum));
                    }
                    if arr.get(2 * n + 1, n) != diag {
                        return Ok((arr.get(2 * n + 1, n), diag));
                    }
                }
                Ok((diag, target.get(n, k)))
            })
        }
        _ => {
            let arr = seidel::seidel_array(SeidelVariant::Genocchi, 0, 2 * depth + 2)?;
            IdentityReport::scan(id, depth, 0..=depth, |n| {
                let g = sign(n) * from_big(genocchi(n + 1)?);
                if arr.get(2 * n + 1, 0) != g {
                    return Ok((arr.get(2 * n + 1, 0), g));
                }
                Ok((seidel::seidel_diagonal(&arr, n)?, sign(n) * from_big(median_genocchi(n)?)))
            })
        }
    }
}

fn summation_check(id: &str, depth: usize) -> Result<IdentityReport> {
    if id != "6.2/6.4" {
        return akiyama::verify_sum_identity(id, depth);
    }
    let specs: Vec<_> = ["6.6", "6.8", "6.10", "6.15"].iter().filter_map(|i| akiyama::identity_spec(i)).collect();
    let mut cases = 0;
    for (w, a) in &specs {
        let m = akiyama::at_matrix(&akiyama::ATSpec::new(w.clone(), a.clone(), depth + 1, 1))?;
        let col = akiyama::conjugation_first_column(w, a, depth + 1)?;
        for (n, (row, x)) in m.iter().zip(&col).enumerate() {
            cases += 1;
            if row[0] != *x {
                let cx = crate::report::Counterexample { n, k: None, lhs: row[0].clone().into(), rhs: x.clone().into() };
                return Ok(IdentityReport::new(id, depth, cases, Some(cx)));
            }
        }
    }
    Ok(IdentityReport::new(id, depth, cases, None))
}

fn property_check(id: &str, depth: usize) -> Result<IdentityReport> {
    connect::verify_property(id, depth)
}

fn connection_check(id: &str, depth: usize) -> Result<IdentityReport> {
    connect::verify_connection(id, depth)
}

/// All identities in catalog order (by equation number, named checks last
/// within their group).
pub struct Registry {
    entries: Vec<Box<dyn Identity>>,
}

fn sort_key(id: &str) -> (u32, u32, String) {
    let mut parts = id.split(|c: char| !c.is_ascii_digit());
    let major = parts.next().and_then(|p| p.parse().ok());
    let minor = parts.next().and_then(|p| p.parse().ok());
    match (major, minor) {
        (Some(a), Some(b)) => (a, b, id.to_string()),
        _ => (u32::MAX, u32::MAX, id.to_string()),
    }
}

impl Registry {
    pub fn empty() -> Self {
        Registry { entries: Vec::new() }
    }

    pub fn standard() -> Self {
        let groups: [(Group, &[&'static str], fn(&str, usize) -> Result<IdentityReport>); 8] = [
            (Group::Sequence, &["1.10", "4.18", "genocchi-routes"], sequence_check),
            (Group::Stirling, &["3.28", "3.29", "3.31"], stirling_check),
            (Group::Connection, CONNECTION_IDS, connection_check),
            (Group::Factorization, FACTORIZATION_IDS, factorization_check),
            (Group::Property, PROPERTY_IDS, property_check),
            (Group::Seidel, &["4.17", "4.25", "4.48", "4.48-even", "5.12", "seidel-genocchi"], seidel_check),
            (Group::Summation, SUM_IDENTITY_IDS, summation_check),
            (Group::Summation, &["6.2/6.4"], summation_check),
        ];
        let mut all: Vec<Entry> = Vec::new();
        for (group, ids, run) in groups {
            for id in ids {
                all.push(Entry { id, group, description: description(id), run });
            }
        }
        all.sort_by_key(|e| sort_key(e.id));
        let mut reg = Registry::empty();
        for e in all {
            reg.register(Box::new(e)).expect("catalog ids are unique");
        }
        reg
    }

    /// Adds an identity; ids must be unique.
    pub fn register(&mut self, identity: Box<dyn Identity>) -> Result<()> {
        if self.entries.iter().any(|e| e.id() == identity.id()) {
            return Err(Error::Format(format!("duplicate identity id `{}`", identity.id())));
        }
        self.entries.push(identity);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Result<&dyn Identity> {
        self.entries
            .iter()
            .find(|e| e.id() == id)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::unknown("identity", id, self.ids()))
    }

    pub fn ids(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.id()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Identity> {
        self.entries.iter().map(|e| e.as_ref())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
