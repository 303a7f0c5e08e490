use super::equalities::orientations;
use super::ClaimResult;
use crate::entropy::{entropy_i1, probabilities_from_spectrum};
use crate::error::Result;
use crate::graph::{Graph, GraphInput};
use crate::matrix::DenseMatrix;
use crate::spectra::determinant;
use crate::zoo::{build, spectrum, MatrixKind};

/// `I1` through the spectral definition.
fn spectral_i1<G: GraphInput>(kind: MatrixKind, input: &G) -> Result<f64> {
    let p = probabilities_from_spectrum(&spectrum(kind, input)?)?;
    Ok(entropy_i1(&p))
}

/// Pushes every claim in `ids` as not applicable.
fn skip(out: &mut Vec<ClaimResult>, ids: &[String], graph: &str, reason: &str) {
    out.extend(
        ids.iter()
            .map(|id| ClaimResult::not_applicable(id.clone(), graph, reason)),
    );
}

fn ids(prefix: &str, parts: &[&str]) -> Vec<String> {
    parts.iter().map(|p| format!("{prefix}/{p}")).collect()
}

/// Evaluates the bounds that follow from the entropy identities, each
/// under its own hypotheses, together with every stated equality
/// characterization in both directions.
///
/// Strict inequalities are checked as `<=`/`>=`; a value inside the
/// `1e-8` equality band of a bound counts as attaining it.
pub fn check_bounds<G: GraphInput>(input: &G, orientation_seed: u64) -> Vec<ClaimResult> {
    let g = input.graph();
    let desc = g.to_string();
    let mut out = Vec::new();
    signless_laplacian(g, &desc, &mut out);
    for kind in [
        MatrixKind::NormalizedLaplacian,
        MatrixKind::NormalizedSignlessLaplacian,
    ] {
        normalized(g, kind, &desc, &mut out);
    }
    incidence(g, &desc, &mut out);
    distance(g, &desc, &mut out);
    for o in orientations(input, orientation_seed) {
        skew(&o, &o.to_string(), &mut out);
    }
    randic(g, &desc, &mut out);
    randic_incidence(g, &desc, &mut out);
    for o in orientations(input, orientation_seed) {
        skew_randic(&o, &o.to_string(), &mut out);
    }
    out
}

fn push_value_error(out: &mut Vec<ClaimResult>, ids: &[String], graph: &str, e: &crate::Error) {
    out.extend(
        ids.iter()
            .map(|id| ClaimResult::error(id.clone(), graph, e)),
    );
}

/// Degrees take exactly the two values `Δ > δ`, with `δn/(δ+Δ)` vertices
/// of degree `Δ`.
fn is_balanced_bidegree(g: &Graph) -> bool {
    let (big, small) = (g.max_degree(), g.min_degree());
    if big == small || g.degrees().iter().any(|&d| d != big && d != small) {
        return false;
    }
    let count_big = g.degrees().iter().filter(|&&d| d == big).count();
    count_big * (big + small) == small * g.order()
}

fn signless_laplacian(g: &Graph, desc: &str, out: &mut Vec<ClaimResult>) {
    let upper = ids("cor1.i", &["upper"]);
    let lower = ids("cor1.ii", &["lower", "equality"]);
    if g.size() == 0 {
        skip(out, &upper, desc, "m = 0");
        skip(out, &lower, desc, "m = 0");
        return;
    }
    let i = match spectral_i1(MatrixKind::SignlessLaplacian, g) {
        Ok(i) => i,
        Err(e) => {
            push_value_error(out, &upper, desc, &e);
            push_value_error(out, &lower, desc, &e);
            return;
        }
    };
    let n = g.order() as f64;
    let m = g.size() as f64;
    out.push(ClaimResult::at_most(
        &upper[0],
        desc,
        i,
        1.0 - 1.0 / (2.0 * m) - 1.0 / n,
    ));
    if g.min_degree() == 0 {
        skip(out, &lower, desc, "isolated vertex");
        return;
    }
    let (big, small) = (g.max_degree() as f64, g.min_degree() as f64);
    let bound = 1.0
        - 1.0 / (2.0 * m)
        - 1.0 / (2.0 * n)
        - (big * big + small * small) / (4.0 * n * big * small);
    out.push(ClaimResult::at_least(&lower[0], desc, i, bound));
    let structural = g.is_regular() || is_balanced_bidegree(g);
    out.push(ClaimResult::characterization(
        &lower[1], desc, structural, i, bound,
    ));
}

/// Every component is `K2`, except for one `P3` when `n` is odd.
fn is_matching_like(g: &Graph) -> bool {
    let comps = g.components();
    let triples: Vec<&Vec<usize>> = comps.iter().filter(|c| c.len() == 3).collect();
    let pairs = comps.iter().filter(|c| c.len() == 2).count();
    let expected_triples = g.order() % 2;
    pairs + triples.len() == comps.len()
        && triples.len() == expected_triples
        && triples
            .iter()
            .all(|c| c.iter().map(|&v| g.degree(v)).sum::<usize>() == 4)
}

fn normalized(g: &Graph, kind: MatrixKind, desc: &str, out: &mut Vec<ClaimResult>) {
    let part_i = ids(
        &format!("cor2.i/{kind}"),
        &["lower", "upper", "lower-equality", "upper-equality"],
    );
    let part_ii = ids(
        &format!("cor2.ii/{kind}"),
        &["lower", "upper", "lower-equality", "upper-equality"],
    );
    if g.order() < 2 || g.non_isolated() != g.order() {
        let reason = "needs n >= 2 and no isolated vertices";
        skip(out, &part_i, desc, reason);
        skip(out, &part_ii, desc, reason);
        return;
    }
    let i = match spectral_i1(kind, g) {
        Ok(i) => i,
        Err(e) => {
            push_value_error(out, &part_i, desc, &e);
            push_value_error(out, &part_ii, desc, &e);
            return;
        }
    };
    let n = g.order() as f64;
    let lower = if g.order() % 2 == 1 {
        1.0 - 2.0 / n + 1.0 / (n * n)
    } else {
        1.0 - 2.0 / n
    };
    let upper = 1.0 - 1.0 / (n - 1.0);
    out.push(ClaimResult::at_least(&part_i[0], desc, i, lower));
    out.push(ClaimResult::at_most(&part_i[1], desc, i, upper));
    out.push(ClaimResult::characterization(
        &part_i[2],
        desc,
        is_matching_like(g),
        i,
        lower,
    ));
    out.push(ClaimResult::characterization(
        &part_i[3],
        desc,
        g.is_complete(),
        i,
        upper,
    ));

    let (big, small) = (g.max_degree() as f64, g.min_degree() as f64);
    let lower = 1.0 - 1.0 / n - 1.0 / (n * small);
    let upper = 1.0 - 1.0 / n - 1.0 / (n * big);
    out.push(ClaimResult::at_least(&part_ii[0], desc, i, lower));
    out.push(ClaimResult::at_most(&part_ii[1], desc, i, upper));
    out.push(ClaimResult::characterization(
        &part_ii[2],
        desc,
        g.is_regular(),
        i,
        lower,
    ));
    out.push(ClaimResult::characterization(
        &part_ii[3],
        desc,
        g.is_regular(),
        i,
        upper,
    ));
}

fn incidence(g: &Graph, desc: &str, out: &mut Vec<ClaimResult>) {
    let c = ids(
        "cor3.i",
        &["lower", "upper", "lower-equality", "upper-equality"],
    );
    if g.size() == 0 {
        skip(out, &c, desc, "m = 0");
        return;
    }
    let i = match spectral_i1(MatrixKind::Incidence, g) {
        Ok(i) => i,
        Err(e) => return push_value_error(out, &c, desc, &e),
    };
    let upper = 1.0 - 1.0 / g.order() as f64;
    out.push(ClaimResult::at_least(&c[0], desc, i, 0.0));
    out.push(ClaimResult::at_most(&c[1], desc, i, upper));
    out.push(ClaimResult::characterization(
        &c[2],
        desc,
        g.size() <= 1,
        i,
        0.0,
    ));
    // The right bound is attained only by the edgeless graph, excluded here.
    out.push(ClaimResult::characterization(
        &c[3],
        desc,
        g.size() == 0,
        i,
        upper,
    ));
}

fn distance(g: &Graph, desc: &str, out: &mut Vec<ClaimResult>) {
    let c = ids("cor4", &["lower", "upper"]);
    if g.order() < 2 || !g.is_connected() {
        skip(out, &c, desc, "needs a connected graph with n >= 2");
        return;
    }
    let i = match spectral_i1(MatrixKind::Distance, g) {
        Ok(i) => i,
        Err(e) => return push_value_error(out, &c, desc, &e),
    };
    out.push(ClaimResult::at_least(&c[0], desc, i, 0.0));
    out.push(ClaimResult::at_most(
        &c[1],
        desc,
        i,
        1.0 - 1.0 / g.order() as f64,
    ));
}

fn skew_determinant(o: &crate::OrientedGraph) -> Result<f64> {
    let s: DenseMatrix = build(MatrixKind::SkewAdjacency, o)?;
    determinant(&s)
}

fn skew(o: &crate::OrientedGraph, desc: &str, out: &mut Vec<ClaimResult>) {
    let g = o.underlying();
    let c = ids("cor5.i", &["lower", "upper", "upper-chain"]);
    if g.size() == 0 {
        skip(out, &c, desc, "m = 0");
        return;
    }
    let values =
        spectral_i1(MatrixKind::SkewAdjacency, o).and_then(|i| Ok((i, skew_determinant(o)?)));
    let (i, det) = match values {
        Ok(v) => v,
        Err(e) => return push_value_error(out, &c, desc, &e),
    };
    let n = g.order() as f64;
    let m = g.size() as f64;
    let lower = 1.0 - 2.0 * m / (2.0 * m + n * (n - 1.0) * det.abs().powf(2.0 / n));
    let upper = 1.0 - 1.0 / n;
    out.push(ClaimResult::at_least(&c[0], desc, i, lower));
    out.push(ClaimResult::at_most(&c[1], desc, i, upper));
    let chain = 1.0 - 2.0 * m / (n * n * g.max_degree() as f64);
    out.push(ClaimResult::at_most(&c[2], desc, upper, chain));
}

fn randic(g: &Graph, desc: &str, out: &mut Vec<ClaimResult>) {
    let c = ids("cor6", &["upper", "equality"]);
    if g.size() == 0 {
        skip(out, &c, desc, "m = 0: the Randić spectrum vanishes");
        return;
    }
    let i = match spectral_i1(MatrixKind::RandicAdjacency, g) {
        Ok(i) => i,
        Err(e) => return push_value_error(out, &c, desc, &e),
    };
    let upper = 1.0 - 1.0 / g.order() as f64;
    let all_pendant = g.degrees().iter().all(|&d| d == 1);
    out.push(ClaimResult::at_most(&c[0], desc, i, upper));
    out.push(ClaimResult::characterization(
        &c[1],
        desc,
        all_pendant,
        i,
        upper,
    ));
}

fn randic_incidence(g: &Graph, desc: &str, out: &mut Vec<ClaimResult>) {
    let part_i = ids("cor7.i", &["lower", "equality"]);
    let part_ii = ids("cor7.ii", &["upper", "equality"]);
    if g.size() == 0 {
        skip(out, &part_i, desc, "m = 0");
        skip(out, &part_ii, desc, "m = 0");
        return;
    }
    let i = match spectral_i1(MatrixKind::RandicIncidence, g) {
        Ok(i) => i,
        Err(e) => {
            push_value_error(out, &part_i, desc, &e);
            push_value_error(out, &part_ii, desc, &e);
            return;
        }
    };
    let n = g.order() as f64;
    let r = g.non_isolated() as f64;
    if g.non_isolated() == g.order() {
        let lower = 1.0 - r / n;
        out.push(ClaimResult::at_least(&part_i[0], desc, i, lower));
        let is_k2 = g.order() == 2 && g.size() == 1;
        out.push(ClaimResult::characterization(
            &part_i[1], desc, is_k2, i, lower,
        ));
    } else {
        skip(out, &part_i, desc, "isolated vertex");
    }
    let denom = n * n - 3.0 * n + 4.0 + 2.0 * (2.0 * (n - 1.0) * (n - 2.0)).sqrt();
    let upper = 1.0 - r / denom;
    out.push(ClaimResult::at_most(&part_ii[0], desc, i, upper));
    out.push(ClaimResult::characterization(
        &part_ii[1],
        desc,
        g.is_complete(),
        i,
        upper,
    ));
}

fn skew_randic(o: &crate::OrientedGraph, desc: &str, out: &mut Vec<ClaimResult>) {
    let c = ids("cor9", &["upper"]);
    if o.underlying().size() == 0 {
        skip(out, &c, desc, "m = 0");
        return;
    }
    match spectral_i1(MatrixKind::SkewRandic, o) {
        Ok(i) => out.push(ClaimResult::at_most(
            &c[0],
            desc,
            i,
            1.0 - 1.0 / o.underlying().order() as f64,
        )),
        Err(e) => push_value_error(out, &c, desc, &e),
    }
}
