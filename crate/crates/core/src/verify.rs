//! The full invariant suite for one connected graph: cross-method agreement,
//! metric axioms, eigenvalue bounds, index inequalities, the Matrix-Tree
//! identities and every applicable closed form.

use crate::closed_form::{
    cayley_distance, complement_distance, complete_graph_distance, hypercube_distance,
    hypercube_distance_with, hypercube_vertex_bits, HypercubeFormula,
};
use crate::error::Result;
use crate::graph::{CayleySpec, Family, Graph};
use crate::linalg::{eigendecompose, principal_minor_det};
use crate::numfmt::format_sig;
use crate::spectral::{
    biharmonic_index_pairwise, biharmonic_index_spectral, biharmonic_spectral, bounds_report,
    check_brk, check_edge_monotonicity, check_minimum_index, kirchhoff_index,
    kirchhoff_index_pairwise, spanning_tree_count, spanning_trees_exhaustive, MethodSuite,
    SpectralCache,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Diagnostic output that does not count towards the verdict.
    Note,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Perturb the pseudoinverse-entry route so cross-method agreement fails.
    pub inject_fault: bool,
    /// Also report the unnormalized hypercube formula when it applies.
    pub show_unnormalized: bool,
    /// Maximum number of non-edges tested for index monotonicity.
    pub monotonicity_limit: usize,
    /// Maximum number of edge subsets enumerated for the Matrix-Tree check.
    pub enumeration_limit: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            inject_fault: false,
            show_unnormalized: false,
            monotonicity_limit: 64,
            enumeration_limit: 200_000,
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Runs every check. Errors only when the graph is not a valid input
/// (disconnected) or a numerical kernel fails outright.
pub fn verify_graph(g: &Graph, options: &VerifyOptions) -> Result<Vec<Check>> {
    let suite = MethodSuite::new(g)?;
    let cache = suite.cache();
    let n = g.n();
    let eig = cache.eig();
    let scale = eig.max_value().max(1.0);
    let mut checks = Vec::new();

    let kernel_ok = eig.groups()[0].len() == 1 && eig.value(0).abs() <= 1e-9;
    checks.push(Check::new(
        "connectivity",
        g.is_connected() && kernel_ok,
        format!(
            "traversal reaches all {n} vertices; zero eigenvalue multiplicity {}",
            eig.groups()[0].len()
        ),
    ));

    let mut orth = 0.0f64;
    let mut resid = 0.0f64;
    for i in 0..n {
        let az = cache.laplacian().mul_vec(eig.vector(i));
        for (x, z) in az.iter().zip(eig.vector(i)) {
            resid = resid.max((x - eig.value(i) * z).abs());
        }
        for j in 0..n {
            let dot: f64 = eig.vector(i).iter().zip(eig.vector(j)).map(|(a, b)| a * b).sum();
            orth = orth.max((dot - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    checks.push(Check::new(
        "eigendecomposition",
        orth <= 1e-10 && resid <= 1e-9 * scale,
        format!("orthonormality {}, residual {}", format_sig(orth), format_sig(resid)),
    ));

    checks.push(pseudoinverse_check(cache));

    let mut spread = 0.0f64;
    for (u, v) in pairs(n) {
        let r = suite.report(u, v)?;
        let mut values = r.values();
        if options.inject_fault {
            values[1] *= 1.0 + 1e-6;
        }
        spread = spread.max(crate::spectral::MethodReport::new((u, v), values).max_relative_spread);
    }
    checks.push(Check::new(
        "four-method agreement",
        spread <= 1e-8,
        format!(
            "max relative spread {} over {} pairs{}",
            format_sig(spread),
            n * (n - 1) / 2,
            if options.inject_fault { " (fault injected)" } else { "" }
        ),
    ));

    checks.push(metric_check(cache)?);

    let mut within = true;
    let mut agree = true;
    let (mut lower_hits, mut upper_hits) = (0, 0);
    for (u, v) in pairs(n) {
        let r = bounds_report(cache, u, v)?;
        within &= r.within_bounds();
        agree &= r.determinations_agree();
        lower_hits += r.lower_attained as usize;
        upper_hits += r.upper_attained as usize;
    }
    checks.push(Check::new(
        "eigenvalue bounds",
        within && agree,
        format!(
            "sqrt2/lambda_n <= d_B <= sqrt2/lambda_2 on all pairs: {within}; attainment tests agree: {agree}; lower attained {lower_hits}, upper attained {upper_hits}"
        ),
    ));

    let b = biharmonic_index_spectral(cache);
    let b_pairs = biharmonic_index_pairwise(cache);
    let kf = kirchhoff_index(cache);
    let kf_pairs = kirchhoff_index_pairwise(cache);
    checks.push(Check::new(
        "index consistency",
        rel(b, b_pairs) <= 1e-8 && rel(kf, kf_pairs) <= 1e-8,
        format!(
            "B spectral {} pairwise {}; Kf spectral {} pairwise {}",
            format_sig(b),
            format_sig(b_pairs),
            format_sig(kf),
            format_sig(kf_pairs)
        ),
    ));

    let complete = g.is_complete();
    if n >= 2 {
        let brk = check_brk(cache)?;
        checks.push(Check::new(
            "biharmonic-kirchhoff inequality",
            brk.holds && brk.equality == complete,
            format!(
                "B {} >= Kf^2/(n(n-1)) {}; equality {} (complete graph: {complete})",
                format_sig(brk.b),
                format_sig(brk.rhs),
                brk.equality
            ),
        ));
    }
    let floor = check_minimum_index(cache);
    checks.push(Check::new(
        "minimum index",
        floor.holds && floor.equality == complete,
        format!(
            "B {} >= (n-1)/n {}; equality {} (complete graph: {complete})",
            format_sig(floor.b),
            format_sig(floor.floor),
            floor.equality
        ),
    ));

    checks.push(monotonicity_check(g, options.monotonicity_limit)?);
    checks.push(matrix_tree_check(g, options.enumeration_limit));
    checks.push(determinant_identity_check(g, suite.determinant().laplacian_sq()));
    checks.extend(closed_form_checks(g, cache, options)?);
    Ok(checks)
}

fn pseudoinverse_check(cache: &SpectralCache) -> Check {
    let n = cache.n();
    let l = cache.laplacian();
    let pinv = cache.pinv();
    let pinv2 = cache.pinv2();
    let mut row_sum = 0.0f64;
    for i in 0..n {
        row_sum = row_sum
            .max(pinv.row(i).iter().sum::<f64>().abs())
            .max(pinv2.row(i).iter().sum::<f64>().abs());
    }
    let lpl = l.mul_dense(pinv);
    let mut g_inverse = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let x: f64 = (0..n).map(|k| lpl[i][k] * l.get(k, j)).sum();
            g_inverse = g_inverse.max((x - l.get(i, j)).abs());
        }
    }
    let square = pinv.mul_commuting(pinv).max_abs_diff(pinv2);
    Check::new(
        "pseudoinverse identities",
        row_sum <= 1e-8 && g_inverse <= 1e-8 && square <= 1e-8,
        format!(
            "row sums {}, |L L+ L - L| {}, |L+ L+ - L2+| {}",
            format_sig(row_sum),
            format_sig(g_inverse),
            format_sig(square)
        ),
    )
}

fn metric_check(cache: &SpectralCache) -> Result<Check> {
    let n = cache.n();
    let mut d = vec![vec![0.0; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        for (v, x) in row.iter_mut().enumerate() {
            *x = biharmonic_spectral(cache, u, v)?;
        }
    }
    let mut ok = true;
    let mut worst_triangle = f64::NEG_INFINITY;
    for u in 0..n {
        ok &= d[u][u] == 0.0;
        for v in 0..n {
            ok &= d[u][v] == d[v][u];
            ok &= u == v || d[u][v] > 0.0;
            for w in 0..n {
                worst_triangle = worst_triangle.max(d[u][w] - d[u][v] - d[v][w]);
            }
        }
    }
    let triangle_ok = worst_triangle <= 1e-10;
    Ok(Check::new(
        "metric axioms",
        ok && triangle_ok,
        format!(
            "nullity, positivity, exact symmetry: {ok}; worst triangle excess {}",
            format_sig(worst_triangle.max(0.0))
        ),
    ))
}

fn monotonicity_check(g: &Graph, limit: usize) -> Result<Check> {
    let non_edges = g.non_edges();
    let stride = non_edges.len().div_ceil(limit.max(1)).max(1);
    let mut tested = 0;
    let mut ok = true;
    let mut smallest_drop = f64::INFINITY;
    for &(u, v) in non_edges.iter().step_by(stride) {
        let r = check_edge_monotonicity(g, u, v)?;
        ok &= r.strictly_decreases();
        smallest_drop = smallest_drop.min(r.before - r.after);
        tested += 1;
    }
    let detail = if tested == 0 {
        "no non-edges (complete graph)".to_string()
    } else {
        format!(
            "{tested} of {} non-edges tested; smallest decrease {}",
            non_edges.len(),
            format_sig(smallest_drop)
        )
    };
    Ok(Check::new("edge monotonicity", ok, detail))
}

fn matrix_tree_check(g: &Graph, limit: u64) -> Check {
    let tau = spanning_tree_count(g);
    let l = g.laplacian();
    let worst = (0..g.n())
        .map(|v| rel(principal_minor_det(&l, &[v]), tau.value))
        .fold(0.0, f64::max);
    let mut ok = worst <= 1e-6;
    let mut detail = format!(
        "tau {}; cofactor spread {}",
        format_sig(tau.value),
        format_sig(worst)
    );
    if let Some(count) = spanning_trees_exhaustive(g, limit) {
        ok &= tau.rounded && tau.value == count as f64;
        detail.push_str(&format!("; enumeration {count}"));
    }
    Check::new("matrix-tree", ok, detail)
}

fn determinant_identity_check(g: &Graph, laplacian_sq: &crate::linalg::SymmetricMatrix) -> Check {
    let n = g.n() as f64;
    let tau = spanning_tree_count(g).value;
    let expected = n * tau * tau;
    let worst = (0..g.n())
        .map(|v| {
            let det = principal_minor_det(laplacian_sq, &[v]);
            (det - expected).abs() / expected
        })
        .fold(0.0, f64::max);
    Check::new(
        "squared-laplacian cofactor",
        worst <= 1e-6,
        format!("det L^2(v|v) = n tau^2 = {} within {}", format_sig(expected), format_sig(worst)),
    )
}

fn closed_form_checks(g: &Graph, cache: &SpectralCache, options: &VerifyOptions) -> Result<Vec<Check>> {
    let n = g.n();
    let mut checks = Vec::new();
    let max_diff = |f: &dyn Fn(usize, usize) -> Result<f64>| -> Result<f64> {
        let mut worst = 0.0f64;
        for (u, v) in pairs(n) {
            worst = worst.max((f(u, v)? - biharmonic_spectral(cache, u, v)?).abs());
        }
        Ok(worst)
    };
    let push = |checks: &mut Vec<Check>, name, worst: f64| {
        checks.push(Check::new(
            name,
            worst <= 1e-9,
            format!("max deviation from spectral {}", format_sig(worst)),
        ));
    };

    let complement_eig = eigendecompose(&g.complement().laplacian())?;
    let worst = max_diff(&|u, v| complement_distance(&complement_eig, u, v))?;
    push(&mut checks, "complement closed form", worst);

    if g.is_complete() && n >= 2 {
        let worst = max_diff(&|_, _| complete_graph_distance(n))?;
        push(&mut checks, "complete-graph closed form", worst);
    }

    if n >= 2 && n.is_power_of_two() {
        let d = n.trailing_zeros() as usize;
        if Graph::generate(Family::Hypercube(d)).ok().as_ref() == Some(g) {
            let worst = max_diff(&|u, v| {
                hypercube_distance(d, &hypercube_vertex_bits(d, u), &hypercube_vertex_bits(d, v))
            })?;
            push(&mut checks, "hypercube closed form", worst);
            let spec = CayleySpec::hypercube(d)?;
            let worst = max_diff(&|u, v| cayley_distance(&spec, &spec.decode(u), &spec.decode(v)))?;
            push(&mut checks, "cayley closed form", worst);
            if options.show_unnormalized {
                let worst = max_diff(&|u, v| {
                    hypercube_distance_with(
                        HypercubeFormula::Unnormalized,
                        d,
                        &hypercube_vertex_bits(d, u),
                        &hypercube_vertex_bits(d, v),
                    )
                })?;
                checks.push(Check {
                    name: "unnormalized hypercube formula",
                    status: Status::Note,
                    detail: format!(
                        "max deviation from spectral {} (characters not normalized)",
                        format_sig(worst)
                    ),
                });
            }
        }
    }

    if n >= 3 && Graph::generate(Family::Cycle(n)).ok().as_ref() == Some(g) {
        let spec = CayleySpec::cyclic(n, &[1, n - 1])?;
        let worst = max_diff(&|u, v| cayley_distance(&spec, &[u], &[v]))?;
        push(&mut checks, "cayley closed form", worst);
    } else if n >= 3 && g.is_complete() {
        let all: Vec<usize> = (1..n).collect();
        let spec = CayleySpec::cyclic(n, &all)?;
        let worst = max_diff(&|u, v| cayley_distance(&spec, &[u], &[v]))?;
        push(&mut checks, "cayley closed form", worst);
    }
    Ok(checks)
}
