#include "becurv/curvature.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "becurv/graph_io.hpp"

namespace becurv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DimensionParameter DimensionParameter::infinite() { return {0.0, true}; }

DimensionParameter DimensionParameter::finite(double n) {
    if (!(n > 0.0)) throw std::invalid_argument("DimensionParameter: N must be positive");
    if (std::isinf(n)) return infinite();
    return {n, false};
}

std::optional<DimensionParameter> DimensionParameter::parse(const std::string& s) {
    if (s == "inf" || s == "infinity") return infinite();
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !(v > 0.0)) return std::nullopt;
    return finite(v);
}

std::string DimensionParameter::to_string() const {
    return infinite_ ? "inf" : format_double(value_);
}

bool CurvatureResult::is_infinite() const { return std::isinf(k); }

std::optional<LocalForms> assemble_local_forms(const WeightedGraph& g, VertexId x) {
    if (g.degree(x) == 0) return std::nullopt;

    BallDecomposition ball = ball_decomposition(g, x);
    const std::size_t p = ball.s1.size();
    const std::size_t total = ball.size();
    const double mx = g.measure(x);
    const double dx = g.weighted_degree(x);

    SymMatrix q2(total);
    std::vector<double> gamma1(p);
    std::vector<double> delta_vec(p);

    for (std::size_t i = 0; i < p; ++i) {
        const VertexId y = ball.s1[i];
        const double mu_xy = g.edge_weight(x, y);
        gamma1[i] = mu_xy / (2.0 * mx);
        delta_vec[i] = mu_xy / mx;

        const double my = g.measure(y);
        for (VertexId z : g.neighbors(y)) {
            // One squared term (f(x) - 2 f(y) + f(z))^2 per ordered pair
            // (y, z); with f(x) = 0 it touches at most the coordinates of
            // y and z.
            const double alpha = mu_xy * g.edge_weight(y, z) / (4.0 * mx * my);
            q2.add(i, i, 4.0 * alpha);
            if (z != x) {
                const std::size_t pz = *ball.position(z);
                q2.add(pz, pz, alpha);
                q2.add(i, pz, -2.0 * alpha);
            }
        }
        q2.add(i, i, -0.25 * mu_xy / mx * (dx + g.weighted_degree(y)));
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) q2.add(i, j, 0.5 * delta_vec[i] * delta_vec[j]);

    return LocalForms{std::move(ball), std::move(q2), std::move(gamma1), std::move(delta_vec)};
}

CurvatureResult curvature(const WeightedGraph& g, VertexId x, DimensionParameter n) {
    CurvatureResult res;
    res.vertex = g.name_of(x);
    res.n = n;
    res.preset = g.preset();

    auto forms = assemble_local_forms(g, x);
    if (!forms) {
        res.k = kInf;
        return res;
    }
    const std::size_t p = forms->ball.s1.size();
    const std::size_t q = forms->ball.s2.size();

    SymMatrix a(p);
    const double inv_n = n.inverse();
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j)
            a.set(i, j, forms->q2(i, j) - inv_n * forms->delta_vec[i] * forms->delta_vec[j]);

    std::vector<std::vector<double>> b(p, std::vector<double>(q));
    std::vector<double> d(q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < q; ++k) b[i][k] = forms->q2(i, p + k);
    for (std::size_t k = 0; k < q; ++k) d[k] = forms->q2(p + k, p + k);

    SymMatrix reduced = q > 0 ? schur_reduce(a, b, d) : a;
    EigenDecomposition eig = eigen_sym(congruence_diag(reduced, forms->gamma1));
    res.k = eig.eigenvalues.front();

    // Witness: pull the minimizing eigenvector back through the Gamma
    // congruence, lift to S2 by the Schur relation, rescale to Gamma = 1.
    const std::vector<double>& u = eig.eigenvectors.front();
    std::vector<double> f1(p);
    for (std::size_t i = 0; i < p; ++i) f1[i] = u[i] / std::sqrt(forms->gamma1[i]);

    double gamma_val = 0.0;
    for (std::size_t i = 0; i < p; ++i) gamma_val += forms->gamma1[i] * f1[i] * f1[i];
    const double scale = 1.0 / std::sqrt(gamma_val);

    VertexFunction w;
    for (std::size_t i = 0; i < p; ++i) w.set(g.name_of(forms->ball.s1[i]), scale * f1[i]);
    for (std::size_t k = 0; k < q; ++k) {
        double num = 0.0;
        for (std::size_t i = 0; i < p; ++i) num += b[i][k] * f1[i];
        w.set(g.name_of(forms->ball.s2[k]), scale * (-num / d[k]));
    }
    res.witness = std::move(w);
    return res;
}

CurvatureResult curvature(const WeightedGraph& g, const std::string& x, DimensionParameter n) {
    return curvature(g, g.index_of(x), n);
}

std::vector<CurvatureResult> curvature_profile(const WeightedGraph& g, VertexId x,
                                               std::span<const DimensionParameter> ns) {
    std::vector<CurvatureResult> out;
    out.reserve(ns.size());
    for (const auto& n : ns) out.push_back(curvature(g, x, n));
    return out;
}

CdReport check_cd(const WeightedGraph& g, double k, DimensionParameter n, double tol) {
    CdReport rep;
    rep.min_curvature = kInf;
    std::optional<CurvatureResult> min_res;
    for (VertexId x = 0; x < g.order(); ++x) {
        CurvatureResult r = curvature(g, x, n);
        if (r.k < rep.min_curvature) {
            rep.min_curvature = r.k;
            min_res = std::move(r);
        }
    }
    if (min_res) rep.min_vertex = min_res->vertex;
    rep.holds = rep.min_curvature >= k - tol;
    if (!rep.holds && min_res) {
        rep.violating_vertex = min_res->vertex;
        rep.witness = min_res->witness;
    }
    return rep;
}

ReducedCheckResult reduced_c4free_check(const WeightedGraph& g, VertexId x) {
    if (!g.unweighted() || g.preset() != WeightedGraph::Preset::normalized)
        throw std::invalid_argument("reduced_c4free_check: requires an unweighted normalized graph");
    if (!is_c4_free(g))
        throw std::invalid_argument("reduced_c4free_check: graph contains a C4");

    const auto& s1 = g.neighbors(x);
    const std::size_t p = s1.size();
    if (p == 0) return {true, kInf};

    const double dx = g.degree(x);
    SymMatrix r(p);
    for (std::size_t i = 0; i < p; ++i) {
        const double dy = g.degree(s1[i]);
        for (std::size_t j = 0; j < p; ++j) {
            if (j == i || !g.adjacent(s1[i], s1[j])) continue;
            // (d_x/d_y)(2 f(y) - f(z))^2, both orientations of the edge.
            const double c = dx / dy;
            r.add(i, i, 4.0 * c);
            r.add(j, j, c);
            r.add(i, j, -2.0 * c);
        }
        r.add(i, i, 4.0 * dx / dy - 2.0 * dx);
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) r.add(i, j, 2.0);

    double lam = min_eigenvalue(r);
    return {lam >= -1e-9, lam};
}

namespace {

struct SampleContext {
    const WeightedGraph& g;
    VertexId x;
    double inv_n;
    std::vector<std::string> coord_names;  // S1 then S2

    // numerator Gamma_2 - (1/N)(Delta f)^2 and denominator Gamma, both
    // through the operators module.
    std::pair<double, double> eval(const std::vector<double>& coords) const {
        VertexFunction f;
        for (std::size_t i = 0; i < coords.size(); ++i) f.set(coord_names[i], coords[i]);
        double df = laplacian(g, f, x);
        double num = gamma2_direct(g, f, x) - inv_n * df * df;
        return {num, gamma(g, f, x)};
    }
};

// Exact minimization of the ratio along one coordinate. Both numerator and
// denominator are quadratic in the coordinate, so three evaluations pin
// them down and the stationary condition is a quadratic equation.
void refine_coordinate(const SampleContext& ctx, std::vector<double>& coords, std::size_t c,
                       double& best_ratio) {
    const double saved = coords[c];
    auto eval_at = [&](double t) {
        coords[c] = t;
        return ctx.eval(coords);
    };
    auto [n0, d0] = eval_at(0.0);
    auto [n1, d1] = eval_at(1.0);
    auto [nm, dm] = eval_at(-1.0);
    coords[c] = saved;

    const double na = 0.5 * (n1 + nm) - n0, nb = 0.5 * (n1 - nm), nc = n0;
    const double da = 0.5 * (d1 + dm) - d0, db = 0.5 * (d1 - dm), dc = d0;

    // (na*db - nb*da) t^2 + 2 (na*dc - nc*da) t + (nb*dc - nc*db) = 0
    const double qa = na * db - nb * da;
    const double qb = 2.0 * (na * dc - nc * da);
    const double qc = nb * dc - nc * db;

    std::vector<double> candidates{saved};
    if (std::fabs(qa) > 1e-300) {
        double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            double root = std::sqrt(disc);
            candidates.push_back((-qb + root) / (2.0 * qa));
            candidates.push_back((-qb - root) / (2.0 * qa));
        }
    } else if (std::fabs(qb) > 1e-300) {
        candidates.push_back(-qc / qb);
    }

    double best_t = saved;
    for (double t : candidates) {
        if (!std::isfinite(t)) continue;
        double den = da * t * t + db * t + dc;
        if (den < 1e-12) continue;
        double num = na * t * t + nb * t + nc;
        double ratio = num / den;
        if (ratio < best_ratio) {
            best_ratio = ratio;
            best_t = t;
        }
    }
    coords[c] = best_t;
}

}  // namespace

double curvature_upper_bound_by_sampling(const WeightedGraph& g, VertexId x, DimensionParameter n,
                                         unsigned trials, std::uint64_t seed,
                                         std::span<const VertexFunction> extra_candidates) {
    BallDecomposition ball = ball_decomposition(g, x);
    if (ball.size() == 0) return kInf;

    SampleContext ctx{g, x, n.inverse(), {}};
    for (VertexId v : ball.s1) ctx.coord_names.push_back(g.name_of(v));
    for (VertexId v : ball.s2) ctx.coord_names.push_back(g.name_of(v));
    const std::size_t dim = ctx.coord_names.size();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    double best_ratio = kInf;
    std::vector<double> best(dim, 0.0);
    auto consider = [&](const std::vector<double>& coords) {
        auto [num, den] = ctx.eval(coords);
        if (den < 1e-12) return;
        double ratio = num / den;
        if (ratio < best_ratio) {
            best_ratio = ratio;
            best = coords;
        }
    };

    std::vector<double> coords(dim);
    for (unsigned t = 0; t < trials; ++t) {
        for (double& v : coords) v = unif(rng);
        consider(coords);
    }
    for (const VertexFunction& f : extra_candidates) {
        for (std::size_t i = 0; i < dim; ++i) coords[i] = f(ctx.coord_names[i]);
        consider(coords);
    }
    if (!std::isfinite(best_ratio)) return best_ratio;

    for (int pass = 0; pass < 20; ++pass)
        for (std::size_t c = 0; c < dim; ++c) refine_coordinate(ctx, best, c, best_ratio);
    return best_ratio;
}

}  // namespace becurv
