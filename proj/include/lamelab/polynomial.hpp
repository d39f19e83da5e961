#pragma once

#include <vector>

#include "lamelab/types.hpp"

namespace lamelab {

// Dense complex polynomial, coefficients in ascending degree order.
// The zero polynomial is represented by an empty coefficient vector.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<cplx> coeffs);
    static Polynomial constant(cplx c);
    static Polynomial monomial(int degree, cplx c = 1.0);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    cplx leading() const { return c_.empty() ? cplx(0.0) : c_.back(); }
    cplx coeff(int k) const {
        return (k < 0 || k >= static_cast<int>(c_.size())) ? cplx(0.0) : c_[static_cast<std::size_t>(k)];
    }
    const std::vector<cplx>& coeffs() const { return c_; }
    double max_abs_coeff() const;

    cplx eval(cplx z) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(cplx s) const;

  private:
    std::vector<cplx> c_;
    void trim();
};

Polynomial from_roots(const std::vector<cplx>& roots);

struct RootOptions {
    double tol = 1e-12;   // backward-error tolerance, relative to the evaluation scale
    int max_iter = 400;
    double cluster_radius = 0.0;  // 0 disables multiplicity clustering
};

// All complex roots with multiplicity, by simultaneous Aberth-Ehrlich iteration
// from guesses on a scaled circle. Sorted by (Re, Im). Throws NonConvergence.
std::vector<cplx> roots(const Polynomial& p, const RootOptions& opts = {});
std::vector<cplx> roots(const Polynomial& p, double tol);

// Averages groups of returned roots lying within `radius` of each other;
// each cluster member is replaced by the cluster mean (multiplicity kept).
std::vector<cplx> cluster_roots(std::vector<cplx> rs, double radius);

// Deterministic ordering used throughout reports.
void sort_complex(std::vector<cplx>& zs);

}  // namespace lamelab
