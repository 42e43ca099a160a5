#pragma once

#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>

#include "becurv/graph.hpp"

namespace becurv {

// Real-valued function on vertices; evaluation is total, unlisted vertices
// read as 0.
class VertexFunction {
public:
    VertexFunction() = default;
    VertexFunction(std::initializer_list<std::pair<const std::string, double>> init)
        : values_(init) {}

    double operator()(const std::string& name) const {
        auto it = values_.find(name);
        return it == values_.end() ? 0.0 : it->second;
    }
    void set(const std::string& name, double v) { values_[name] = v; }
    const std::unordered_map<std::string, double>& values() const { return values_; }

private:
    std::unordered_map<std::string, double> values_;
};

// Delta f(x) = (1/m_x) sum_{y~x} mu_xy (f(y) - f(x))
double laplacian(const WeightedGraph& g, const VertexFunction& f, VertexId x);

// Gamma(f,g)(x) = (1/(2 m_x)) sum_{y~x} mu_xy (f(y)-f(x))(g(y)-g(x)).
// This expanded difference form is the implementation; the product-rule
// definition 2*Gamma(f,g) = Delta(fg) - f*Delta(g) - g*Delta(f) is kept as
// a test oracle only.
double gamma(const WeightedGraph& g, const VertexFunction& f, const VertexFunction& h, VertexId x);
double gamma(const WeightedGraph& g, const VertexFunction& f, VertexId x);

// Gamma_2 via its definition: (1/2)[ Delta Gamma(f)(x) - 2 Gamma(f, Delta f)(x) ].
double gamma2_direct(const WeightedGraph& g, const VertexFunction& f, VertexId x);

// Gamma_2 via the pointwise expansion
//   (1/4)|D^2 f|^2(x) + (1/2)(Delta f(x))^2
//     - (1/4) sum_{y~x} (mu_xy/m_x)(D_x + D_y)|f(y)-f(x)|^2
// where |D^2 f|^2(x) sums (mu_xy mu_yz/(m_x m_y))|f(x)-2f(y)+f(z)|^2 over
// y~x, z~y. The inner sum includes z == x; dropping that term breaks the
// identity already on P2.
double gamma2_bochner(const WeightedGraph& g, const VertexFunction& f, VertexId x);

// Name-based conveniences.
double laplacian(const WeightedGraph& g, const VertexFunction& f, const std::string& x);
double gamma(const WeightedGraph& g, const VertexFunction& f, const std::string& x);
double gamma2_direct(const WeightedGraph& g, const VertexFunction& f, const std::string& x);
double gamma2_bochner(const WeightedGraph& g, const VertexFunction& f, const std::string& x);

}  // namespace becurv
