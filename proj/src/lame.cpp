#include "lamelab/lame.hpp"

#include <cmath>

#include "lamelab/errors.hpp"
#include "lamelab/quadrature.hpp"

namespace lamelab {

LameOperator make_operator(const std::vector<cplx>& poles, const Polynomial& B, int n) {
    if (poles.size() < 2) throw DegreeError("make_operator: need at least two poles");
    if (n < 1) throw DegreeError("make_operator: n must be >= 1");
    const int p = static_cast<int>(poles.size()) - 1;
    if (B.degree() > p) throw DegreeError("make_operator: deg B exceeds p");

    const double diam = diameter(poles);
    const double tol = 1e-9 * (diam > 0.0 ? diam : 1.0);
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i + 1; j < poles.size(); ++j)
            if (std::abs(poles[i] - poles[j]) <= tol)
                throw DegeneratePoles("make_operator: poles coincide within tolerance");

    LameOperator op;
    op.poles = poles;
    op.A = from_roots(poles);
    op.B = B;
    op.alpha = B.coeff(p);
    op.n = n;
    op.rho_half = (op.alpha - 1.0) / 2.0;
    op.lambda_n = static_cast<double>(n) + op.rho_half;
    op.rho = residues(op);
    return op;
}

std::vector<cplx> residues(const LameOperator& op) {
    const Polynomial Ad = op.A.derivative();
    std::vector<cplx> r;
    r.reserve(op.poles.size());
    for (cplx a : op.poles) r.push_back(op.B.eval(a) / Ad.eval(a));
    return r;
}

std::int64_t sigma(int n, int p) {
    if (n < 0 || p < 1) throw DegreeError("sigma: need n >= 0 and p >= 1");
    // binom(n+p-1, p-1), multiplicative form
    std::int64_t num = 1;
    for (int k = 1; k <= p - 1; ++k) num = num * (n + k) / k;
    return num;
}

double ode_residual(const LameOperator& op, const Polynomial& V, const Polynomial& Q) {
    const int p = op.p();
    const int expected_degV = p - 1;
    if (V.degree() != expected_degV)
        throw DegreeError("ode_residual: deg V must equal p-1");
    if (Q.degree() != op.n) throw DegreeError("ode_residual: deg Q must equal n");

    const Polynomial t1 = op.A * Q.derivative().derivative();
    const Polynomial t2 = op.B * Q.derivative();
    const Polynomial t3 = (V * Q) * op.kappa();
    const Polynomial R = t1 + t2 - t3;
    const double denom = std::max({t1.max_abs_coeff(), t2.max_abs_coeff(), t3.max_abs_coeff()});
    if (denom == 0.0) return 0.0;
    return R.max_abs_coeff() / denom;
}

LiouvilleData liouville_terms(const LameOperator& op, const Polynomial& V, cplx z,
                              std::optional<cplx> gauge_base) {
    std::vector<cplx> sing = op.poles;
    for (cplx v : roots(V, 1e-12)) sing.push_back(v);
    const double tol = 1e-9 * op.scale();
    for (cplx s : sing)
        if (std::abs(z - s) <= tol)
            throw SingularPoint("liouville_terms: z is at a singular point");

    const Polynomial Ad = op.A.derivative();
    const Polynomial Add = Ad.derivative();
    const Polynomial Bd = op.B.derivative();
    const Polynomial Vd = V.derivative();
    const Polynomial Vdd = Vd.derivative();

    const cplx Av = op.A.eval(z), Bv = op.B.eval(z), Vv = V.eval(z);
    const cplx Adv = Ad.eval(z), Addv = Add.eval(z), Bdv = Bd.eval(z);
    const cplx Vdv = Vd.eval(z), Vddv = Vdd.eval(z);

    const cplx half_BA = Bv / (2.0 * Av);
    // (B/2A)' = (B'A - BA') / (2A^2)
    const cplx half_BA_d = (Bdv * Av - Bv * Adv) / (2.0 * Av * Av);
    const cplx lam = op.lambda_n, rho = op.rho_half;

    LiouvilleData out;
    out.F_value = (lam * lam - rho * rho) * (Vv / Av) + half_BA * half_BA + half_BA_d;
    out.T_value = 0.25 * (Adv / Av - Vdv / Vv);
    // T' = (1/4)((A''A - A'^2)/A^2 - (V''V - V'^2)/V^2)
    const cplx T_d = 0.25 * ((Addv * Av - Adv * Adv) / (Av * Av) - (Vddv * Vv - Vdv * Vdv) / (Vv * Vv));
    out.G_value = (Av / Vv) * (half_BA * half_BA + half_BA_d - out.T_value * out.T_value - T_d) - rho * rho;

    // gauge factor exp(int B/2A) along a straight segment
    cplx base;
    if (gauge_base) {
        base = *gauge_base;
    } else {
        double mx = 0.0;
        for (cplx s : sing) mx = std::max(mx, std::abs(s));
        base = cplx(1.0 + 2.0 * mx, 0.0);
    }
    const cplx gauge = integrate_rational_segment(op.B, op.A, base, z, sing, 1e-12);
    out.u_factor = std::exp(0.5 * gauge);
    return out;
}

}  // namespace lamelab
