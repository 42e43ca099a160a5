#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "becurv/graph.hpp"
#include "becurv/linalg.hpp"
#include "becurv/operators.hpp"

namespace becurv {

// Dimension parameter N in (0, inf].
class DimensionParameter {
public:
    static DimensionParameter infinite();
    static DimensionParameter finite(double n);  // throws unless n > 0
    static std::optional<DimensionParameter> parse(const std::string& s);

    bool is_infinite() const { return infinite_; }
    double value() const { return value_; }
    double inverse() const { return infinite_ ? 0.0 : 1.0 / value_; }
    std::string to_string() const;

    bool operator==(const DimensionParameter&) const = default;

private:
    DimensionParameter(double v, bool inf) : value_(v), infinite_(inf) {}
    double value_ = 0.0;
    bool infinite_ = true;
};

// Local quadratic and linear forms at a vertex, in coordinates over
// S1 ++ S2 with f(x) = 0 substituted:
//   q2:        f^T q2 f     == Gamma_2(f)(x)
//   gamma1:    sum g1_i f_i^2 == Gamma(f)(x)   (diagonal over S1)
//   delta_vec: delta . f|S1 == Delta f(x)
// The S2 x S2 block of q2 is positive diagonal, which makes the Schur
// elimination of S2 exact.
struct LocalForms {
    BallDecomposition ball;
    SymMatrix q2;
    std::vector<double> gamma1;
    std::vector<double> delta_vec;
};

// nullopt for an isolated vertex (curvature is +infinity there).
std::optional<LocalForms> assemble_local_forms(const WeightedGraph& g, VertexId x);

struct CurvatureResult {
    std::string vertex;
    DimensionParameter n = DimensionParameter::infinite();
    WeightedGraph::Preset preset = WeightedGraph::Preset::non_normalized;
    double k = 0.0;  // +infinity at isolated vertices
    // Minimizer normalized to Gamma(witness)(x) = 1; absent when k is infinite.
    std::optional<VertexFunction> witness;

    bool is_infinite() const;
};

// Largest K with Gamma_2(f)(x) >= (1/N)(Delta f(x))^2 + K Gamma(f)(x) for
// all f. Computed by eliminating the S2 coordinates with a Schur
// complement and solving the symmetric eigenproblem against the Gamma
// form.
CurvatureResult curvature(const WeightedGraph& g, VertexId x, DimensionParameter n);
CurvatureResult curvature(const WeightedGraph& g, const std::string& x, DimensionParameter n);

std::vector<CurvatureResult> curvature_profile(const WeightedGraph& g, VertexId x,
                                               std::span<const DimensionParameter> ns);

struct CdReport {
    bool holds = true;
    double min_curvature = 0.0;  // +infinity on graphs of isolated vertices
    std::string min_vertex;
    std::optional<std::string> violating_vertex;
    std::optional<VertexFunction> witness;
};

// CD(K, N) across all vertices; on failure reports the vertex of minimal
// curvature together with its witness function.
CdReport check_cd(const WeightedGraph& g, double k, DimensionParameter n, double tol);

struct ReducedCheckResult {
    bool holds = true;
    double min_eigenvalue = 0.0;
};

// CD(0, inf) decision at x through the S1-only quadratic form obtained by
// substituting f(z) = 2 f(y) for every second-sphere vertex z with its
// unique first-sphere neighbor y. Requires an unweighted normalized
// C4-free graph; throws std::invalid_argument otherwise.
ReducedCheckResult reduced_c4free_check(const WeightedGraph& g, VertexId x);

// Brute-force upper bound on the curvature: minimum of
// (Gamma_2(f)(x) - (1/N)(Delta f(x))^2) / Gamma(f)(x) over random f on
// the punctured 2-ball, refined by exact per-coordinate minimization.
// Evaluates everything through the operators module; deterministic for a
// fixed seed. extra_candidates are injected as additional starting points.
double curvature_upper_bound_by_sampling(const WeightedGraph& g, VertexId x, DimensionParameter n,
                                         unsigned trials, std::uint64_t seed,
                                         std::span<const VertexFunction> extra_candidates = {});

}  // namespace becurv
