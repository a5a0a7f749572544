#include "sfrcov/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sfrcov/errors.hpp"

namespace sfrcov::quadrature {

namespace {

constexpr double kNodeTol = 1e-14; // absolute tolerance on the Newton update
constexpr int kMaxIter = 100;

struct PolyEval {
    double value;
    double deriv;
};

// Orthonormal Hermite polynomial (weight exp(-x^2)) of degree n at x.
// H~_0 = pi^{-1/4}; H~_{j+1} = x*sqrt(2/(j+1))*H~_j - sqrt(j/(j+1))*H~_{j-1}.
// The derivative of H~_n is sqrt(2n)*H~_{n-1}.
PolyEval hermite_eval(int n, double x) {
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25);
    for (int j = 0; j < n; ++j) {
        const double next =
            x * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return {cur, std::sqrt(2.0 * n) * prev};
}

// Legendre polynomial P_n at x with derivative from the standard relation
// P'_n(x) = n*(x*P_n - P_{n-1})/(x^2 - 1); at x = 0 this reduces cleanly.
PolyEval legendre_eval(int n, double x) {
    double prev = 1.0;
    double cur = x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2 * k - 1) * x * cur - (k - 1) * prev) / k;
        prev = cur;
        cur = next;
    }
    const double deriv = n * (x * cur - prev) / (x * x - 1.0);
    return {cur, deriv};
}

double newton_root(int n, double guess, PolyEval (*eval)(int, double)) {
    double x = guess;
    for (int it = 0; it < kMaxIter; ++it) {
        const PolyEval p = eval(n, x);
        const double step = p.value / p.deriv;
        x -= step;
        if (std::fabs(step) < kNodeTol) return x;
    }
    throw NumericalError("quadrature: Newton iteration did not converge");
}

} // namespace

QuadratureRule gauss_hermite(int order) {
    if (order < 2 || order > 64)
        throw std::invalid_argument("gauss_hermite: order must be in [2, 64]");

    QuadratureRule rule{Kind::Hermite, order, std::vector<double>(order), std::vector<double>(order)};

    // Roots found from largest to smallest over the positive half; initial
    // guesses follow the classical QUADRULE estimates.
    const int half = (order + 1) / 2;
    double r = 0.0;
    std::vector<double> roots(half);
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            r = std::sqrt(2.0 * order + 1) - 1.85575 * std::pow(2.0 * order + 1, -1.0 / 6.0);
        } else if (i == 1) {
            r -= 1.14 * std::pow(static_cast<double>(order), 0.426) / r;
        } else if (i == 2) {
            r = 1.86 * r - 0.86 * roots[0];
        } else if (i == 3) {
            r = 1.91 * r - 0.91 * roots[1];
        } else {
            r = 2.0 * r - roots[i - 2];
        }
        const bool center = (order % 2 == 1) && (i == half - 1);
        roots[i] = center ? 0.0 : newton_root(order, r, hermite_eval);
        r = roots[i];
    }

    for (int i = 0; i < half; ++i) {
        const double x = roots[i];
        const double dp = hermite_eval(order, x).deriv;
        const double w = 2.0 / (dp * dp);
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    return rule;
}

QuadratureRule gauss_legendre(int order) {
    if (order < 2 || order > 128)
        throw std::invalid_argument("gauss_legendre: order must be in [2, 128]");

    QuadratureRule rule{Kind::Legendre, order, std::vector<double>(order), std::vector<double>(order)};

    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        const bool center = (order % 2 == 1) && (i == half - 1);
        // i-th largest root of P_n sits near cos of the Chebyshev angle
        const double guess = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        const double x = center ? 0.0 : newton_root(order, guess, legendre_eval);
        const double dp = legendre_eval(order, x).deriv;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    return rule;
}

std::vector<std::string> validate_rule(const QuadratureRule& rule) {
    std::vector<std::string> violations;
    const std::size_t n = rule.nodes.size();

    if (rule.order <= 0 || n != static_cast<std::size_t>(rule.order) || rule.weights.size() != n) {
        violations.push_back("length: nodes and weights must both have `order` entries");
        return violations;
    }

    bool ordered = true;
    for (std::size_t i = 1; i < n; ++i) {
        if (!(rule.nodes[i] > rule.nodes[i - 1])) {
            ordered = false;
            break;
        }
    }
    if (!ordered) {
        violations.push_back("ordering: nodes must be strictly increasing");
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::fabs(rule.nodes[i] + rule.nodes[n - 1 - i]) > 1e-12) {
                violations.push_back("symmetry: nodes must mirror about 0 to 1e-12");
                break;
            }
        }
    }

    bool positive = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(rule.weights[i] > 0.0)) {
            positive = false;
            violations.push_back("positivity: all weights must be positive");
            break;
        }
    }
    if (positive) {
        double sum = 0.0;
        for (double w : rule.weights) sum += w;
        const double expected = rule.kind == Kind::Hermite ? std::sqrt(std::numbers::pi) : 2.0;
        if (std::fabs(sum - expected) > 1e-10)
            violations.push_back("weight-sum: weights must sum to the measure total to 1e-10");
    }

    return violations;
}

} // namespace sfrcov::quadrature
