#pragma once

#include <string>
#include <vector>

namespace sfrcov::quadrature {

enum class Kind { Hermite, Legendre };

/// Node/weight pairs for a Gauss rule. Nodes are strictly increasing and
/// symmetric about 0; weights are positive and sum to sqrt(pi) (Hermite,
/// weight function exp(-x^2) on the real line) or 2 (Legendre, on (-1, 1)).
struct QuadratureRule {
    Kind kind = Kind::Hermite;
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Hermite rule of the given order (2..64). Nodes are computed by
/// Newton iteration on the orthonormal three-term recurrence, seeded with
/// the standard asymptotic root estimates, so no tables are involved and
/// equal orders produce bit-identical rules.
QuadratureRule gauss_hermite(int order);

/// Gauss-Legendre rule of the given order (2..128). Same construction,
/// Newton on the Legendre recurrence from Chebyshev-angle initial guesses.
QuadratureRule gauss_legendre(int order);

/// Reports every violated rule invariant (empty means valid). Never throws.
std::vector<std::string> validate_rule(const QuadratureRule& rule);

} // namespace sfrcov::quadrature
