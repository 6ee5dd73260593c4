use serde_json::{json, Value};

use constacyclic::chainquot::{ChainQuotient, DEFAULT_ROOT_SEARCH_CAP};
use constacyclic::codes::{enumerate_all_ideals, unit_nth_root, DEFAULT_ENUM_CAP};
use constacyclic::polyfactor::{factor_xn_minus_lambda_capped, DEFAULT_SPLITTING_CAP};
use constacyclic::verify::{run_suite, SuiteReport};
use constacyclic::{
    ChainRing, Error, Family, FiniteChainRing, PolyRing, QuotientRing, Result, Ring,
};

use crate::spec::{AnyRing, ParseElem, RingSpec};

/// What a command prints: a human form and a JSON form of the same data.
pub struct Output {
    pub human: String,
    pub json: Value,
    /// Exit status when the command itself ran; `verify` fails with 1.
    pub ok: bool,
}

fn unit_lambda<R: ParseElem + FiniteChainRing>(ring: &R, expr: &str) -> Result<R::Elem> {
    let lambda = ring.parse_elem(expr)?;
    if !ring.is_unit(lambda) {
        return Err(Error::InvalidParameter(format!(
            "lambda = {} is not a unit of {}",
            ring.fmt_elem(lambda),
            ring.descriptor()
        )));
    }
    Ok(lambda)
}

fn binomial_text<R: FiniteChainRing>(ring: &R, n: u64, lambda: R::Elem) -> String {
    let pr = PolyRing::new(ring.clone());
    pr.fmt_signed(&pr.binomial(n as usize, lambda))
}

fn factor_in<R: ParseElem + FiniteChainRing>(
    ring: &R,
    n: u64,
    lambda: &str,
    signed: bool,
    cap: Option<u64>,
) -> Result<Output> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let lambda = unit_lambda(ring, lambda)?;
    let split_cap = cap.map_or(DEFAULT_SPLITTING_CAP, u128::from);
    let fac = factor_xn_minus_lambda_capped(ring, n, lambda, split_cap)?;
    let pr = PolyRing::new(ring.clone());
    let text = if signed {
        fac.fmt_signed(&pr)
    } else {
        fac.fmt_compact(&pr)
    };
    let mut json = fac.to_json(&pr);
    json["ring"] = json!(ring.descriptor());
    json["n"] = json!(n);
    json["lambda"] = ring.elem_json(lambda);
    Ok(Output {
        human: format!(
            "{} over {}\n{text}\n",
            binomial_text(ring, n, lambda),
            ring.descriptor()
        ),
        json,
        ok: true,
    })
}

pub fn factor(
    spec: &RingSpec,
    n: u64,
    lambda: &str,
    signed: bool,
    cap: Option<u64>,
) -> Result<Output> {
    match spec.build(cap)? {
        AnyRing::Field(f) => factor_in(&f, n, lambda, signed, cap),
        AnyRing::Chain(c) => factor_in(&c, n, lambda, signed, cap),
    }
}

fn root_in<R: ParseElem + FiniteChainRing>(ring: &R, n: u64, lambda: &str) -> Result<Output> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let lambda = unit_lambda(ring, lambda)?;
    let delta = unit_nth_root(ring, lambda, n)?.ok_or_else(|| {
        Error::Inapplicable(format!(
            "{} has no {n}-th root in {}",
            ring.fmt_elem(lambda),
            ring.descriptor()
        ))
    })?;
    Ok(Output {
        human: format!("{}\n", ring.fmt_elem(delta)),
        json: json!({
            "ring": ring.descriptor(),
            "n": n,
            "lambda": ring.elem_json(lambda),
            "root": ring.elem_json(delta),
        }),
        ok: true,
    })
}

pub fn root(spec: &RingSpec, n: u64, lambda: &str, cap: Option<u64>) -> Result<Output> {
    match spec.build(cap)? {
        AnyRing::Field(f) => root_in(&f, n, lambda),
        AnyRing::Chain(c) => root_in(&c, n, lambda),
    }
}

fn ideals_in<R: ParseElem + FiniteChainRing>(
    ring: &R,
    n: usize,
    lambda: &str,
    cap: u64,
) -> Result<Output> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let lambda = unit_lambda(ring, lambda)?;
    let q = QuotientRing::new(ring.clone(), n, lambda)?;
    let ideals = enumerate_all_ideals(&q, cap)?;
    let pr = q.poly_ring();
    let mut human = format!("{}: {} ideals\n", q.descriptor(), ideals.len());
    for (i, c) in ideals.iter().enumerate() {
        let gens: Vec<String> = c
            .canonical_matrix()
            .rows()
            .iter()
            .map(|row| pr.fmt_compact(&q.to_poly(row)))
            .collect();
        human.push_str(&format!(
            "{i}\t{}\t<{}>\n",
            c.cardinality(),
            gens.join(", ")
        ));
    }
    Ok(Output {
        human,
        json: json!({
            "ring": ring.descriptor(),
            "n": n,
            "lambda": ring.elem_json(lambda),
            "ideals": ideals.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        }),
        ok: true,
    })
}

pub fn ideals(spec: &RingSpec, n: usize, lambda: &str, cap: Option<u64>) -> Result<Output> {
    let enum_cap = cap.unwrap_or(DEFAULT_ENUM_CAP);
    match spec.build(cap)? {
        AnyRing::Field(f) => ideals_in(&f, n, lambda, enum_cap),
        AnyRing::Chain(c) => ideals_in(&c, n, lambda, enum_cap),
    }
}

pub struct ChainArgs<'a> {
    pub p: u64,
    pub e: u32,
    pub r: u32,
    pub s: u32,
    pub alpha: &'a str,
    pub beta: &'a str,
}

pub fn chaincodes(a: &ChainArgs<'_>, cap: Option<u64>) -> Result<Output> {
    let ring = match cap {
        Some(c) => ChainRing::with_caps(Family::Galois, a.p, a.e, a.r, c, c)?,
        None => ChainRing::galois(a.p, a.e, a.r)?,
    };
    let alpha = ring.parse_elem(a.alpha)?;
    let beta = ring.parse_elem(a.beta)?;
    for (name, v) in [("alpha", alpha), ("beta", beta)] {
        if !ring.is_unit(v) {
            return Err(Error::InvalidParameter(format!(
                "{name} = {} is not a unit of {}",
                ring.fmt_elem(v),
                ring.descriptor()
            )));
        }
    }
    let cq = ChainQuotient::build_capped(
        &ring,
        a.s,
        alpha,
        beta,
        cap.unwrap_or(DEFAULT_ROOT_SEARCH_CAP),
    )?;
    let q = cq.quotient();
    let pr = q.poly_ring();
    let p = ring.p();
    let chain = cq.chain_length();
    let mut human = format!(
        "{}  alpha_0 = {}  pi = {}  ideals: {}\n",
        q.descriptor(),
        ring.fmt_elem(cq.alpha0()),
        pr.fmt_compact(&q.to_poly(cq.pi())),
        chain + 1
    );
    human.push_str("i\tcardinality\tgenerator\n");
    let mut rows = Vec::new();
    for i in 0..=chain {
        let code = cq.chain_code(i)?;
        let exponent = code.log_q_cardinality() * a.r as u64;
        let generator = cq.pi_power(i);
        human.push_str(&format!(
            "{i}\t{p}^{exponent}\t{}\n",
            pr.fmt_compact(&q.to_poly(&generator))
        ));
        rows.push(json!({
            "i": i,
            "generator": pr.to_json(&q.to_poly(&generator)),
            "cardinality": code.cardinality().to_string(),
            "log_p_cardinality": exponent,
        }));
    }
    Ok(Output {
        human,
        json: json!({
            "ring": ring.descriptor(),
            "n": q.n(),
            "lambda": ring.elem_json(q.lambda()),
            "alpha": ring.elem_json(alpha),
            "beta": ring.elem_json(beta),
            "alpha0": ring.elem_json(cq.alpha0()),
            "pi": pr.to_json(&q.to_poly(cq.pi())),
            "rho": pr.to_json(&q.to_poly(cq.rho())),
            "nilpotency_index": cq.nilpotency_index(),
            "ideals": rows,
        }),
        ok: true,
    })
}

fn report_text(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    for suite in reports {
        for c in &suite.claims {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            s.push_str(&format!(
                "[{tag}] {}: {} ({} checked, {} failed)\n",
                suite.suite, c.claim, c.checked, c.failures
            ));
            if let Some(ce) = &c.counterexample {
                s.push_str(&format!("       counterexample: {ce}\n"));
            }
        }
    }
    let ok = reports.iter().all(SuiteReport::passed);
    s.push_str(if ok {
        "all claims passed\n"
    } else {
        "some claims failed\n"
    });
    s
}

pub fn verify(suite: &str) -> Result<Output> {
    let reports = run_suite(suite)?;
    let ok = reports.iter().all(SuiteReport::passed);
    Ok(Output {
        human: report_text(&reports),
        json: json!({ "passed": ok, "suites": reports }),
        ok,
    })
}
