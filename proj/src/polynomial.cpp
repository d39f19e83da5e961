#include "lamelab/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "lamelab/errors.hpp"

namespace lamelab {

namespace {
constexpr double kTrimEps = 0.0;  // only exact zeros are trimmed
}

Polynomial::Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(cplx c) {
    if (c == cplx(0.0)) return Polynomial();
    return Polynomial(std::vector<cplx>{c});
}

Polynomial Polynomial::monomial(int degree, cplx c) {
    std::vector<cplx> v(static_cast<std::size_t>(degree) + 1, cplx(0.0));
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && std::abs(c_.back()) <= kTrimEps) c_.pop_back();
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const cplx& c : c_) m = std::max(m, std::abs(c));
    return m;
}

cplx Polynomial::eval(cplx z) const {
    cplx acc(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<cplx> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (1.0 / leading());
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<cplx> v(std::max(c_.size(), rhs.c_.size()), cplx(0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) v[k] += rhs.c_[k];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + rhs * cplx(-1.0);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<cplx> v(c_.size() + rhs.c_.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) v[i + j] += c_[i] * rhs.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(cplx s) const {
    std::vector<cplx> v(c_);
    for (cplx& c : v) c *= s;
    return Polynomial(std::move(v));
}

Polynomial from_roots(const std::vector<cplx>& rs) {
    Polynomial p = Polynomial::constant(1.0);
    for (cplx r : rs) p = p * Polynomial({-r, 1.0});
    return p;
}

void sort_complex(std::vector<cplx>& zs) {
    std::sort(zs.begin(), zs.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

std::vector<cplx> cluster_roots(std::vector<cplx> rs, double radius) {
    if (radius <= 0.0) return rs;
    const std::size_t n = rs.size();
    std::vector<int> group(n, -1);
    int ngroups = 0;
    // union by proximity chains; n is small, quadratic pass is fine
    for (std::size_t i = 0; i < n; ++i) {
        if (group[i] < 0) group[i] = ngroups++;
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(rs[i] - rs[j]) <= radius) {
                if (group[j] < 0) group[j] = group[i];
                else if (group[j] != group[i]) {
                    int from = group[j], to = group[i];
                    for (std::size_t k = 0; k < n; ++k)
                        if (group[k] == from) group[k] = to;
                }
            }
    }
    for (int g = 0; g < ngroups; ++g) {
        cplx mean(0.0);
        int count = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (group[k] == g) { mean += rs[k]; ++count; }
        if (count <= 1) continue;
        mean /= static_cast<double>(count);
        for (std::size_t k = 0; k < n; ++k)
            if (group[k] == g) rs[k] = mean;
    }
    sort_complex(rs);
    return rs;
}

namespace {

// evaluation scale sum |a_k| |z|^k, the natural backward-error yardstick
double eval_scale(const std::vector<cplx>& c, double az) {
    double s = 0.0, zp = 1.0;
    for (const cplx& ck : c) {
        s += std::abs(ck) * zp;
        zp *= az;
    }
    return s;
}

}  // namespace

std::vector<cplx> roots(const Polynomial& p, const RootOptions& opts) {
    if (p.degree() < 1) throw DegreeError("roots: degree must be >= 1");
    if (!(opts.tol > 0.0)) throw Error("roots: tol must be positive");

    std::vector<cplx> c = p.coeffs();
    std::vector<cplx> out;

    // peel off exact zero roots at the origin
    std::size_t shift = 0;
    while (shift + 1 < c.size() && c[shift] == cplx(0.0)) ++shift;
    for (std::size_t k = 0; k < shift; ++k) out.push_back(cplx(0.0));
    c.erase(c.begin(), c.begin() + static_cast<long>(shift));

    const int n = static_cast<int>(c.size()) - 1;
    if (n >= 1) {
        const cplx lead = c.back();
        if (n == 1) {
            out.push_back(-c[0] / c[1]);
        } else {
            // Cauchy bound radius for the initial circle
            double r = 0.0;
            for (int k = 0; k < n; ++k) r = std::max(r, std::abs(c[static_cast<std::size_t>(k)] / lead));
            r = 1.0 + r;

            std::vector<cplx> z(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                double ang = 2.0 * M_PI * (j + 0.25) / n + 0.4;
                z[static_cast<std::size_t>(j)] = (0.8 * r) * cplx(std::cos(ang), std::sin(ang));
            }

            std::vector<cplx> dcoeffs(static_cast<std::size_t>(n));
            for (int k = 1; k <= n; ++k)
                dcoeffs[static_cast<std::size_t>(k - 1)] = c[static_cast<std::size_t>(k)] * static_cast<double>(k);

            auto horner = [](const std::vector<cplx>& a, cplx x) {
                cplx acc(0.0);
                for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
                return acc;
            };

            std::vector<bool> done(static_cast<std::size_t>(n), false);
            bool converged = false;
            for (int iter = 0; iter < opts.max_iter && !converged; ++iter) {
                converged = true;
                std::vector<cplx> znext = z;
                for (int j = 0; j < n; ++j) {
                    const std::size_t js = static_cast<std::size_t>(j);
                    if (done[js]) continue;
                    const cplx zj = z[js];
                    const cplx pv = horner(c, zj);
                    const double scale = eval_scale(c, std::abs(zj));
                    if (std::abs(pv) <= opts.tol * scale) {
                        done[js] = true;
                        continue;
                    }
                    converged = false;
                    const cplx dv = horner(dcoeffs, zj);
                    cplx newton = (dv != cplx(0.0)) ? pv / dv : cplx(0.0);
                    if (dv == cplx(0.0)) {
                        // flat spot: nudge off it
                        znext[js] = zj + 1e-3 * (1.0 + std::abs(zj)) * cplx(0.7, 0.3);
                        continue;
                    }
                    cplx sum(0.0);
                    for (int k = 0; k < n; ++k)
                        if (k != j) sum += 1.0 / (zj - z[static_cast<std::size_t>(k)]);
                    const cplx denom = 1.0 - newton * sum;
                    cplx w = (std::abs(denom) > 1e-300) ? newton / denom : newton;
                    znext[js] = zj - w;
                }
                z = znext;
            }

            // final residual check
            for (int j = 0; j < n; ++j) {
                const cplx zj = z[static_cast<std::size_t>(j)];
                const double scale = eval_scale(c, std::abs(zj));
                if (std::abs(horner(c, zj)) > 100.0 * opts.tol * scale)
                    throw NonConvergence("roots: Aberth iteration did not reach tolerance");
                out.push_back(zj);
            }
        }
    }

    if (opts.cluster_radius > 0.0) out = cluster_roots(std::move(out), opts.cluster_radius);
    sort_complex(out);
    return out;
}

std::vector<cplx> roots(const Polynomial& p, double tol) {
    RootOptions o;
    o.tol = tol;
    return roots(p, o);
}

}  // namespace lamelab
