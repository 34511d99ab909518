#![allow(dead_code)]

use std::collections::BTreeMap;

use mamdani_flc::format::{ControllerDefinition, Settings};
use mamdani_flc::fuzzy::{Degree, Fuzzification, FuzzifiedInput, MembershipFunction, TNorm, Universe};
use mamdani_flc::inference::{Clause, LinguisticVariable, Rule, RuleBase};
use rand::seq::SliceRandom;
use rand::Rng;

pub const WASHER_FLC: &str = include_str!("../../data/washer.flc");

fn ident<R: Rng>(rng: &mut R, prefix: &str, i: usize) -> String {
    const ALPHABET: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_0123456789";
    let tail: String = (0..rng.gen_range(0..5))
        .map(|_| *ALPHABET.choose(rng).unwrap() as char)
        .collect();
    format!("{prefix}{i}{tail}")
}

fn real<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    let x = rng.gen_range(lo..hi);
    match rng.gen_range(0..3) {
        0 => x.round(),
        1 => (x * 100.0).round() / 100.0,
        _ => x,
    }
}

/// Random strictly increasing breakpoints from `lo` to `hi`.
fn partition<R: Rng>(rng: &mut R, lo: f64, hi: f64, k: usize) -> Vec<f64> {
    let mut inner: Vec<f64> = (0..k.saturating_sub(2))
        .map(|_| rng.gen_range(lo..hi))
        .collect();
    inner.sort_by(|a, b| a.partial_cmp(b).unwrap());
    inner.dedup();
    let mut pts = vec![lo];
    pts.extend(inner.into_iter().filter(|&p| p > lo && p < hi));
    pts.push(hi);
    pts
}

/// A variable whose terms cover its universe (neighbouring ramps overlap).
pub fn covering_variable<R: Rng>(rng: &mut R, name: String) -> LinguisticVariable {
    let lo = real(rng, -100.0, 100.0);
    let hi = lo + real(rng, 1.0, 200.0).max(0.5);
    let universe = Universe::new(lo, hi).unwrap();
    let k = rng.gen_range(2..=4);
    let p = partition(rng, lo, hi, k);
    let mut var = LinguisticVariable::new(name, universe);
    for i in 0..p.len() {
        let left = if i == 0 { p[0] } else { p[i - 1] };
        let right = if i + 1 == p.len() { p[i] } else { p[i + 1] };
        let mf = if rng.gen_bool(0.3) && i > 0 && i + 1 < p.len() {
            // short plateau around the peak, still inside (left, right)
            let eps = 0.25 * (p[i] - left).min(right - p[i]);
            MembershipFunction::trapezoidal(left, p[i] - eps, p[i] + eps, right).unwrap()
        } else {
            MembershipFunction::triangular(left, p[i], right).unwrap()
        };
        var = var.with_term(format!("t{i}"), mf);
    }
    var
}

/// A random definition that passes validation without errors.
pub fn random_definition<R: Rng>(rng: &mut R) -> ControllerDefinition {
    let n_in = rng.gen_range(1..=3);
    let n_out = rng.gen_range(1..=2);
    let inputs: Vec<_> = (0..n_in)
        .map(|i| {
            let name = ident(rng, "in", i);
            covering_variable(rng, name)
        })
        .collect();
    let outputs: Vec<_> = (0..n_out)
        .map(|i| {
            let name = ident(rng, "out", i);
            covering_variable(rng, name)
        })
        .collect();

    let combos: usize = inputs.iter().map(|v| v.terms.len()).product();
    let n_rules = rng.gen_range(1..=combos.min(12));
    let mut all: Vec<usize> = (0..combos).collect();
    all.shuffle(rng);
    let mut rules = Vec::new();
    for &code in all.iter().take(n_rules) {
        let mut c = code;
        let antecedent = inputs
            .iter()
            .map(|v| {
                let t = c % v.terms.len();
                c /= v.terms.len();
                Clause::new(v.name.clone(), v.terms[t].name.clone())
            })
            .collect();
        let mut consequent = Vec::new();
        for v in &outputs {
            if rng.gen_bool(0.7) {
                let t = v.terms.choose(rng).unwrap();
                consequent.push(Clause::new(v.name.clone(), t.name.clone()));
            }
        }
        if consequent.is_empty() {
            let v = &outputs[0];
            consequent.push(Clause::new(v.name.clone(), v.terms[0].name.clone()));
        }
        rules.push(Rule {
            antecedent,
            consequent,
        });
    }

    let fuzzification = if rng.gen_bool(0.5) {
        Fuzzification::Singleton
    } else {
        Fuzzification::Triangular(real(rng, 0.01, 5.0).max(0.01))
    };
    let mut halfwidths = BTreeMap::new();
    if let Fuzzification::Triangular(_) = fuzzification {
        for v in &inputs {
            if rng.gen_bool(0.3) {
                halfwidths.insert(v.name.clone(), real(rng, 0.01, 5.0).max(0.01));
            }
        }
    }
    ControllerDefinition {
        name: ident(rng, "ctl", 0),
        settings: Settings {
            tnorm: if rng.gen_bool(0.5) { TNorm::Min } else { TNorm::Product },
            resolution: rng.gen_range(2..400),
            fuzzification,
        },
        inputs,
        outputs,
        rules,
        halfwidths,
    }
}

/// Random term over `universe`, not necessarily covering it.
pub fn random_term<R: Rng>(rng: &mut R, universe: &Universe) -> MembershipFunction {
    let (lo, hi) = (universe.lo(), universe.hi());
    let mut p: Vec<f64> = (0..4).map(|_| rng.gen_range(lo..=hi)).collect();
    p.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if p[0] == p[3] {
        p[3] = hi;
        p[0] = lo;
    }
    if rng.gen_bool(0.5) {
        MembershipFunction::triangular(p[0], p[1], p[3]).unwrap()
    } else {
        MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3]).unwrap()
    }
}

/// Random 3-input, 1-output rule base on `[0, 10]` universes.
pub fn random_rule_base<R: Rng>(rng: &mut R, n_rules: usize) -> RuleBase {
    let u = Universe::new(0.0, 10.0).unwrap();
    let var = |rng: &mut R, name: &str| {
        let k = rng.gen_range(2..=4);
        (0..k).fold(LinguisticVariable::new(name, u), |v, i| {
            v.with_term(format!("t{i}"), random_term(rng, &u))
        })
    };
    let inputs = vec![var(rng, "x"), var(rng, "y"), var(rng, "z")];
    let outputs = vec![var(rng, "w")];
    let mut seen = std::collections::HashSet::new();
    let mut rules = Vec::new();
    while rules.len() < n_rules {
        let idx: Vec<usize> = inputs.iter().map(|v| rng.gen_range(0..v.terms.len())).collect();
        if !seen.insert(idx.clone()) {
            let total: usize = inputs.iter().map(|v| v.terms.len()).product();
            if seen.len() == total {
                break;
            }
            continue;
        }
        let antecedent = inputs
            .iter()
            .zip(&idx)
            .map(|(v, &t)| Clause::new(v.name.clone(), v.terms[t].name.clone()))
            .collect();
        let w = &outputs[0];
        let t = rng.gen_range(0..w.terms.len());
        rules.push(Rule {
            antecedent,
            consequent: vec![Clause::new("w", w.terms[t].name.clone())],
        });
    }
    RuleBase::new(inputs, outputs, rules).unwrap()
}

pub fn random_triangular_inputs<R: Rng>(rng: &mut R, n: usize) -> Vec<FuzzifiedInput> {
    (0..n)
        .map(|_| FuzzifiedInput::TriangularNumber {
            x0: rng.gen_range(0.0..=10.0),
            halfwidth: rng.gen_range(0.2..4.0),
        })
        .collect()
}

/// Direct sup over the full product grid of `min(joint input, antecedent)`
/// for one rule, with `n` points per axis. Independent of the factored
/// engine path.
pub fn product_grid_firing(rb: &RuleBase, rule: usize, inputs: &[FuzzifiedInput], n: usize) -> f64 {
    let r = &rb.rules()[rule];
    let terms: Vec<&MembershipFunction> = rb
        .inputs()
        .iter()
        .map(|v| {
            let c = r.antecedent.iter().find(|c| c.variable == v.name).unwrap();
            &v.term(&c.term).unwrap().mf
        })
        .collect();
    let grids: Vec<Vec<f64>> = rb.inputs().iter().map(|v| v.universe.grid(n)).collect();
    let mut best = 0.0f64;
    for &x in &grids[0] {
        for &y in &grids[1] {
            for &z in &grids[2] {
                let joint = inputs[0]
                    .membership(x)
                    .min(inputs[1].membership(y))
                    .min(inputs[2].membership(z));
                let ante = terms[0].eval(x).min(terms[1].eval(y)).min(terms[2].eval(z));
                best = best.max(joint.min(ante).value());
            }
        }
    }
    best
}

/// Direct evaluation of the combined control action on the product grid:
/// `W'(w) = max_j sup_(x,y,z) min(joint input, min(antecedent_j, W_j(w)))`.
pub fn product_grid_output(rb: &RuleBase, inputs: &[FuzzifiedInput], n: usize) -> Vec<f64> {
    let w_var = &rb.outputs()[0];
    let ws = w_var.universe.grid(n);
    let grids: Vec<Vec<f64>> = rb.inputs().iter().map(|v| v.universe.grid(n)).collect();
    let mut out = vec![0.0f64; n];
    for r in rb.rules() {
        let terms: Vec<&MembershipFunction> = rb
            .inputs()
            .iter()
            .map(|v| {
                let c = r.antecedent.iter().find(|c| c.variable == v.name).unwrap();
                &v.term(&c.term).unwrap().mf
            })
            .collect();
        let cons = &w_var.term(&r.consequent[0].term).unwrap().mf;
        for (k, &w) in ws.iter().enumerate() {
            let ww = cons.eval(w);
            for &x in &grids[0] {
                for &y in &grids[1] {
                    for &z in &grids[2] {
                        let joint = inputs[0]
                            .membership(x)
                            .min(inputs[1].membership(y))
                            .min(inputs[2].membership(z));
                        let rel = terms[0]
                            .eval(x)
                            .min(terms[1].eval(y))
                            .min(terms[2].eval(z))
                            .min(ww);
                        out[k] = out[k].max(joint.min(rel).value());
                    }
                }
            }
        }
    }
    out
}

/// Washer pipeline written out by hand, sharing no code with the crate:
/// singleton inputs, min firing, min clipping, max aggregation and the
/// trapezoid sub-area centroid at `n` samples.
pub mod washer_oracle {
    fn tri(a: f64, b: f64, c: f64, x: f64) -> f64 {
        if x < a || x > c {
            0.0
        } else if x < b {
            (x - a) / (b - a)
        } else if x <= b {
            1.0
        } else {
            (c - x) / (c - b)
        }
    }

    fn terms(lo: f64, hi: f64) -> [(f64, f64, f64); 3] {
        let m = 0.5 * (lo + hi);
        [(lo, lo, m), (lo, m, hi), (m, hi, hi)]
    }

    const IN: [(f64, f64); 3] = [(0.0, 100.0), (0.0, 10.0), (0.0, 8.0)];
    const OUT: [(f64, f64); 3] = [(0.0, 60.0), (0.0, 60.0), (0.0, 200.0)];
    /// Rule table, indexed [output][dirt][thickness][load].
    const TABLE: [[[[usize; 3]; 3]; 3]; 3] = [
        // wash_time
        [
            [[0, 0, 0], [0, 0, 1], [0, 1, 1]],
            [[0, 1, 1], [1, 1, 1], [1, 1, 2]],
            [[1, 1, 2], [1, 2, 2], [2, 2, 2]],
        ],
        // water_volume
        [
            [[0, 0, 1], [0, 1, 1], [0, 1, 2]],
            [[0, 1, 1], [0, 1, 2], [1, 1, 2]],
            [[0, 1, 2], [1, 1, 2], [1, 2, 2]],
        ],
        // detergent
        [
            [[0, 0, 1], [0, 0, 1], [0, 1, 1]],
            [[0, 1, 1], [0, 1, 2], [1, 1, 2]],
            [[1, 1, 2], [1, 2, 2], [1, 2, 2]],
        ],
    ];

    pub fn plan(x: [f64; 3], n: usize) -> [f64; 3] {
        let mut mu = [[0.0; 3]; 3];
        for k in 0..3 {
            let xk = x[k].clamp(IN[k].0, IN[k].1);
            for (t, &(a, b, c)) in terms(IN[k].0, IN[k].1).iter().enumerate() {
                mu[k][t] = tri(a, b, c, xk);
            }
        }
        let mut res = [0.0; 3];
        for o in 0..3 {
            let (lo, hi) = OUT[o];
            let ts = terms(lo, hi);
            let ws: Vec<f64> = (0..n)
                .map(|k| if k + 1 == n { hi } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 })
                .collect();
            let mut agg = vec![0.0f64; n];
            for d in 0..3 {
                for f in 0..3 {
                    for l in 0..3 {
                        let fire = mu[0][d].min(mu[1][f]).min(mu[2][l]);
                        if fire == 0.0 {
                            continue;
                        }
                        let (a, b, c) = ts[TABLE[o][d][f][l]];
                        for (m, &w) in agg.iter_mut().zip(&ws) {
                            *m = m.max(fire.min(tri(a, b, c, w)));
                        }
                    }
                }
            }
            let (mut num, mut den) = (0.0, 0.0);
            for k in 1..n {
                let h = agg[k - 1] + agg[k];
                if h == 0.0 {
                    continue;
                }
                let area = 0.5 * (ws[k] - ws[k - 1]) * h;
                let center = (ws[k - 1] * (2.0 * agg[k - 1] + agg[k]) + ws[k] * (agg[k - 1] + 2.0 * agg[k])) / (3.0 * h);
                num += area * center;
                den += area;
            }
            res[o] = num / den;
        }
        res
    }

    pub fn spans() -> [f64; 3] {
        [OUT[0].1 - OUT[0].0, OUT[1].1 - OUT[1].0, OUT[2].1 - OUT[2].0]
    }
}

pub fn degree(v: f64) -> Degree {
    Degree::new(v).unwrap()
}

/// A clipped-and-aggregated curve: max over 1–4 random terms, each clipped
/// at a random level. Always positive somewhere.
pub fn random_aggregate<R: Rng>(rng: &mut R, universe: &Universe) -> impl Fn(f64) -> Degree {
    let k = rng.gen_range(1..=4);
    let mut parts: Vec<(MembershipFunction, f64)> = (0..k)
        .map(|_| (random_term(rng, universe), rng.gen_range(0.05..=1.0)))
        .collect();
    if rng.gen_bool(0.5) {
        // a shoulder puts mass on a bound, where sampling schemes differ most
        let (lo, hi) = (universe.lo(), universe.hi());
        let reach = rng.gen_range(0.1..0.6) * universe.span();
        let mf = if rng.gen_bool(0.5) {
            MembershipFunction::triangular(lo, lo, lo + reach).unwrap()
        } else {
            MembershipFunction::triangular(hi - reach, hi, hi).unwrap()
        };
        parts.push((mf, rng.gen_range(0.05..=1.0)));
    }
    move |w| {
        parts
            .iter()
            .map(|(mf, h)| mf.eval(w).min(degree(*h)))
            .fold(Degree::ZERO, Degree::max)
    }
}

/// Continuous centroid of `f` over `universe` by a fine midpoint rule.
pub fn reference_centroid(f: &dyn Fn(f64) -> Degree, universe: &Universe) -> f64 {
    const M: usize = 100_000;
    let h = universe.span() / M as f64;
    let (mut num, mut den) = (0.0, 0.0);
    for k in 0..M {
        let w = universe.lo() + (k as f64 + 0.5) * h;
        let mu = f(w).value();
        num += mu * w;
        den += mu;
    }
    num / den
}
