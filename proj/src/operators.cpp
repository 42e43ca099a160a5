#include "becurv/operators.hpp"

namespace becurv {

double laplacian(const WeightedGraph& g, const VertexFunction& f, VertexId x) {
    const double fx = f(g.name_of(x));
    double s = 0.0;
    const auto& nb = g.neighbors(x);
    for (std::size_t k = 0; k < nb.size(); ++k)
        s += g.edge_weight(x, nb[k]) * (f(g.name_of(nb[k])) - fx);
    return s / g.measure(x);
}

double gamma(const WeightedGraph& g, const VertexFunction& f, const VertexFunction& h, VertexId x) {
    const double fx = f(g.name_of(x));
    const double hx = h(g.name_of(x));
    double s = 0.0;
    for (VertexId y : g.neighbors(x))
        s += g.edge_weight(x, y) * (f(g.name_of(y)) - fx) * (h(g.name_of(y)) - hx);
    return s / (2.0 * g.measure(x));
}

double gamma(const WeightedGraph& g, const VertexFunction& f, VertexId x) {
    return gamma(g, f, f, x);
}

double gamma2_direct(const WeightedGraph& g, const VertexFunction& f, VertexId x) {
    // Materialize Gamma(f) and Delta f on B1(x); both are needed at x and
    // at every neighbor of x.
    VertexFunction gamma_f;
    VertexFunction delta_f;
    gamma_f.set(g.name_of(x), gamma(g, f, x));
    delta_f.set(g.name_of(x), laplacian(g, f, x));
    for (VertexId y : g.neighbors(x)) {
        gamma_f.set(g.name_of(y), gamma(g, f, y));
        delta_f.set(g.name_of(y), laplacian(g, f, y));
    }
    return 0.5 * (laplacian(g, gamma_f, x) - 2.0 * gamma(g, f, delta_f, x));
}

double gamma2_bochner(const WeightedGraph& g, const VertexFunction& f, VertexId x) {
    const double mx = g.measure(x);
    const double fx = f(g.name_of(x));
    const double dx = g.weighted_degree(x);

    double hess = 0.0;  // |D^2 f|^2(x)
    double degree_term = 0.0;
    for (VertexId y : g.neighbors(x)) {
        const double mu_xy = g.edge_weight(x, y);
        const double my = g.measure(y);
        const double fy = f(g.name_of(y));
        for (VertexId z : g.neighbors(y)) {
            const double mu_yz = g.edge_weight(y, z);
            const double t = fx - 2.0 * fy + f(g.name_of(z));
            hess += mu_xy * mu_yz / (mx * my) * t * t;
        }
        const double diff = fy - fx;
        degree_term += mu_xy / mx * (dx + g.weighted_degree(y)) * diff * diff;
    }
    const double df = laplacian(g, f, x);
    return 0.25 * hess + 0.5 * df * df - 0.25 * degree_term;
}

double laplacian(const WeightedGraph& g, const VertexFunction& f, const std::string& x) {
    return laplacian(g, f, g.index_of(x));
}
double gamma(const WeightedGraph& g, const VertexFunction& f, const std::string& x) {
    return gamma(g, f, g.index_of(x));
}
double gamma2_direct(const WeightedGraph& g, const VertexFunction& f, const std::string& x) {
    return gamma2_direct(g, f, g.index_of(x));
}
double gamma2_bochner(const WeightedGraph& g, const VertexFunction& f, const std::string& x) {
    return gamma2_bochner(g, f, g.index_of(x));
}

}  // namespace becurv
