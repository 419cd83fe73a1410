#include "oracle.hpp"

#include <cmath>

#include "rdshock/solution.hpp"

namespace rdshock::oracle {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double lo, double hi, double flo,
             double fmid, double fhi, double whole, double tol, int depth) {
    if (depth > 60)
        throw NoConvergenceError("adaptive quadrature exceeded depth 60", whole, tol);
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double rm = 0.5 * (mid + hi);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(flo, flm, fmid, mid - lo);
    const double right = simpson(fmid, frm, fhi, hi - mid);
    const double err = (left + right - whole) / 15.0;
    if (std::fabs(err) <= tol) return left + right + err;
    return adapt(f, lo, mid, flo, flm, fmid, left, tol * 0.5, depth + 1) +
           adapt(f, mid, hi, fmid, frm, fhi, right, tol * 0.5, depth + 1);
}

}  // namespace

double quadrature(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (lo == hi) return 0.0;
    const double flo = f(lo);
    const double fhi = f(hi);
    const double fmid = f(0.5 * (lo + hi));
    const double whole = simpson(flo, fmid, fhi, hi - lo);
    return adapt(f, lo, hi, flo, fmid, fhi, whole, tol, 0);
}

double quadrature(const std::function<double(double)>& f, double lo, double hi,
                  const OracleConfig& cfg) {
    if (!cfg.valid()) throw std::invalid_argument("oracle tolerances must be positive");
    return quadrature(f, lo, hi, cfg.quadrature_tol);
}

std::vector<double> bisection_root_grid(const std::function<double(double)>& f, double lo,
                                        double hi, int n) {
    if (n < 2) throw std::invalid_argument("bisection grid needs n >= 2");
    std::vector<double> roots;
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / static_cast<double>(n);
        const double fx = f(x);
        if (f_prev == 0.0) {
            roots.push_back(x_prev);
        } else if (f_prev * fx < 0.0) {
            double a = x_prev, b = x, fa = f_prev;
            for (int it = 0; it < 200 && (b - a) > 1e-15; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fa * fm <= 0.0)
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = fx;
    }
    if (f_prev == 0.0) roots.push_back(x_prev);
    return roots;
}

std::vector<double> bisection_root_grid(const std::function<double(double)>& f, double lo,
                                        double hi, const OracleConfig& cfg) {
    if (!cfg.valid()) throw std::invalid_argument("oracle tolerances must be positive");
    return bisection_root_grid(f, lo, hi, cfg.bisection_grid);
}

double pde_residual_at(const DiffusivityModel& model, const SolutionParams& params,
                       const ShockPair& pair, double x, double t, double h) {
    for (double xs : level_crossings(params, t, pair.phi_level)) {
        if (std::fabs(x - xs) < 3.0 * h)
            throw StencilTooCloseError("stencil within 3h of the shock at x=" +
                                       std::to_string(xs));
    }

    auto value = [&](double xq, double tq) {
        const auto u = evaluate_shocked(model, params, pair, xq, tq);
        if (!u) throw StencilTooCloseError("stencil left the solution support");
        if (std::fabs(*u - model.root_a()) < 0.02 || std::fabs(*u - model.root_b()) < 0.02)
            throw StencilTooCloseError("stencil u-value within 0.02 of a diffusivity root");
        return *u;
    };

    const double u0 = value(x, t);
    const double up = value(x + h, t);
    const double um = value(x - h, t);
    const double ut = (value(x, t + h) - value(x, t - h)) / (2.0 * h);
    const double ux = (up - um) / (2.0 * h);
    const double uxx = (up - 2.0 * u0 + um) / (h * h);

    const double diff = model.diffusivity(u0) * uxx + model.diffusivity(u0, 1) * ux * ux;
    return std::fabs(ut - diff - reaction(model, params, u0));
}

std::vector<double> pde_residual(const DiffusivityModel& model, const SolutionParams& params,
                                 const ShockPair& pair, const std::vector<double>& xs, double t,
                                 double h) {
    std::vector<double> res;
    res.reserve(xs.size());
    for (double x : xs) res.push_back(pde_residual_at(model, params, pair, x, t, h));
    return res;
}

}  // namespace rdshock::oracle
