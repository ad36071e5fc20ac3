//! Comparison of a count table against a product, and its renderings.

use std::fmt::Write as _;
use std::time::Duration;

use colpart::lattice::WeightForm;
use colpart::{expand, CountTable, PeriodicProduct, Series, WeightVector};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Number, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Verified,
    /// First `n` with `P(n) != c_n`.
    Mismatch {
        n: usize,
        count: BigUint,
        coefficient: BigInt,
    },
    /// Every value agrees, but `N` does not reach one full period.
    InsufficientN {
        modulus: u64,
    },
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Mismatch { .. } => "mismatch",
            Status::InsufficientN { .. } => "insufficient-N",
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Status::Verified)
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub weight: WeightVector,
    pub n_max: usize,
    pub product: PeriodicProduct,
    pub status: Status,
    pub runtime: Duration,
    pub counts: CountTable,
    pub coefficients: Series,
}

impl VerificationReport {
    pub fn new(
        weight: WeightVector,
        product: PeriodicProduct,
        counts: CountTable,
        runtime: Duration,
    ) -> Self {
        let n_max = counts.max_n();
        let coefficients = expand(&product, n_max);
        let status = compare(&counts, &coefficients, product.net_modulus());
        Self { weight, n_max, product, status, runtime, counts, coefficients }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "highest_weight = {}", weight_label(&self.weight)).unwrap();
        if !matches!(self.weight.form(), WeightForm::Bracket) {
            writeln!(s, "bracket = {}", python_list(self.weight.entries())).unwrap();
        }
        writeln!(s, "k = {}  w = {}  N = {}", self.weight.level(), self.weight.width(), self.n_max).unwrap();
        writeln!(s, "product = {}", self.product).unwrap();
        writeln!(s, "status = {}", self.status_detail()).unwrap();
        s
    }

    pub fn status_detail(&self) -> String {
        match &self.status {
            Status::Verified => "verified".into(),
            Status::Mismatch { n, count, coefficient } => {
                format!("mismatch at n = {n}: P({n}) = {count}, c_{n} = {coefficient}")
            }
            Status::InsufficientN { modulus } => {
                format!("insufficient-N (all values agree, but N = {} < modulus {modulus})", self.n_max)
            }
        }
    }

    pub fn json(&self) -> Value {
        let mismatch = match &self.status {
            Status::Mismatch { n, count, coefficient } => json!({
                "n": n,
                "count": big(count),
                "coefficient": big(coefficient),
            }),
            _ => Value::Null,
        };
        json!({
            "weight": self.weight.to_string(),
            "bracket": self.weight.entries(),
            "N": self.n_max,
            "product": self.product.to_string(),
            "modulus": self.product.net_modulus(),
            "exponents": self.product.net_exponents(),
            "counts": count_values(&self.counts),
            "coefficients": self.coefficients.coeffs()[1..].iter().map(big).collect::<Vec<_>>(),
            "status": self.status.label(),
            "mismatch": mismatch,
        })
    }

    pub fn csv(&self) -> String {
        let mut s = String::from("n,count,coefficient\n");
        for (n, count) in self.counts.iter() {
            writeln!(s, "{n},{count},{}", self.coefficients.coeff(n)).unwrap();
        }
        s
    }
}

fn compare(counts: &CountTable, coefficients: &Series, modulus: u64) -> Status {
    for (n, count) in counts.iter() {
        let coefficient = coefficients.coeff(n);
        if BigInt::from(count.clone()) != *coefficient {
            return Status::Mismatch { n, count: count.clone(), coefficient: coefficient.clone() };
        }
    }
    if (counts.max_n() as u64) < modulus {
        Status::InsufficientN { modulus }
    } else {
        Status::Verified
    }
}

/// Arbitrary-precision integer as a JSON number.
pub fn big(n: impl ToString) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integers are valid JSON numbers"))
}

pub fn count_values(counts: &CountTable) -> Vec<Value> {
    counts.iter().map(|(_, c)| big(c)).collect()
}

/// Sugar forms as written, raw brackets as `[k1, ..., kw]`.
pub fn weight_label(wv: &WeightVector) -> String {
    match wv.form() {
        WeightForm::Bracket => python_list(wv.entries()),
        _ => wv.to_string(),
    }
}

/// `[a, b, c]` as Python prints a list.
pub fn python_list<T: ToString>(xs: &[T]) -> String {
    let items: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// The count table in the shape `[[1, P(1)], [2, P(2)], ...]`.
pub fn pairs(counts: &CountTable) -> String {
    let items: Vec<String> = counts.iter().map(|(n, c)| format!("[{n}, {c}]")).collect();
    format!("[{}]", items.join(", "))
}
