#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamelab/polynomial.hpp"
#include "lamelab/types.hpp"

namespace lamelab {

// Validated instance of A y'' + B y' - n(n+alpha-1) V y = 0 with
// A = prod (z - a_k) monic of degree p+1 and deg B <= p.
struct LameOperator {
    Polynomial A;             // monic, degree p + 1
    Polynomial B;             // degree <= p
    std::vector<cplx> poles;  // the set of zeros of A, as given
    cplx alpha;               // coefficient of z^p in B (0 if deg B < p)
    int n = 0;
    cplx lambda_n;            // n + (alpha - 1)/2
    std::vector<cplx> rho;    // rho_k = B(a_k)/A'(a_k)
    cplx rho_half;            // (alpha - 1)/2

    int p() const { return static_cast<int>(poles.size()) - 1; }
    cplx kappa() const {  // n(n + alpha - 1)
        return static_cast<double>(n) * (static_cast<double>(n) + alpha - 1.0);
    }
    double scale() const { return 1.0 + diameter(poles); }
};

struct LiouvilleData {
    cplx F_value;   // (lambda^2 - rho^2) V/A + (B/2A)^2 + (B/2A)'
    cplx G_value;   // (A/V)((B/2A)^2 + (B/2A)' - T^2 - T') - rho^2
    cplx T_value;   // (1/4)(A'/A - V'/V)
    cplx u_factor;  // exp(int B/2A) along a straight path from the gauge base
};

// Pole-distinctness validation tolerance is 1e-9 * diameter of the pole set.
LameOperator make_operator(const std::vector<cplx>& poles, const Polynomial& B, int n);

std::vector<cplx> residues(const LameOperator& op);

// Heine's count binom(n+p-1, n).
std::int64_t sigma(int n, int p);

// Relative residual of A Q'' + B Q' - n(n+alpha-1) V Q, normalized by the
// largest coefficient magnitude among the three summands. Zero for exact pairs.
double ode_residual(const LameOperator& op, const Polynomial& V, const Polynomial& Q);

// Pointwise Liouville transformation diagnostics at z. The gauge integral runs
// along the straight segment from gauge_base (default: a real point to the
// right of all singularities); the caller must pick a base with a clear path.
LiouvilleData liouville_terms(const LameOperator& op, const Polynomial& V, cplx z,
                              std::optional<cplx> gauge_base = std::nullopt);

}  // namespace lamelab
