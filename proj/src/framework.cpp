#include "genlap/framework.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <queue>

#include "genlap/rng.hpp"

namespace genlap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// F(y) is pushed off the exact endpoints before the generator density sees
// it, only to avoid 0^negative overflow; values already inside (0,1) pass
// through unchanged.
double clamp_unit(double u) {
    if (u < 1e-300) return 1e-300;
    const double top = 1.0 - 0x1.0p-53;
    if (u > top) return top;
    return u;
}

// --- Gauss-Kronrod 15(7) pair ---
constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
// Gauss weights for the embedded 7-point rule (nodes 1, 3, 5, 7 above).
constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct GkResult {
    double value;
    double err;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kKronrodX[i];
        double fsum;
        if (i == 7) {
            fsum = f(c);
        } else {
            fsum = f(c - dx) + f(c + dx);
        }
        kron += kKronrodW[i] * fsum;
        if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum; // odd indices carry the G7 nodes
    }
    kron *= h;
    gauss *= h;
    return {kron, std::fabs(kron - gauss)};
}

struct Piece {
    double value;
    double err;
    double a, b;
    std::uint64_t id; // deterministic tie-break
    bool operator<(const Piece& o) const {
        if (err != o.err) return err < o.err;
        return id > o.id;
    }
};

// Worst-interval-first adaptive refinement on a finite interval.
double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    std::priority_queue<Piece> queue;
    std::uint64_t next_id = 0;
    GkResult first = gk15(f, a, b);
    queue.push({first.value, first.err, a, b, next_id++});
    double total_err = first.err;
    // NaN error estimates (integrand produced inf or NaN) must enter the loop
    // so the finiteness check can reject them instead of returning NaN.
    while (!(total_err <= tol)) {
        if (queue.size() > 2000 || !(total_err < kInf)) {
            throw numerical_error("integrate: failed to reach requested accuracy");
        }
        Piece worst = queue.top();
        queue.pop();
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            throw numerical_error("integrate: interval collapsed before converging");
        }
        GkResult left = gk15(f, worst.a, mid);
        GkResult right = gk15(f, mid, worst.b);
        queue.push({left.value, left.err, worst.a, mid, next_id++});
        queue.push({right.value, right.err, mid, worst.b, next_id++});
        total_err += left.err + right.err;
    }
    double sum = 0.0;
    while (!queue.empty()) {
        sum += queue.top().value;
        queue.pop();
    }
    return sum;
}

// Maps the right tail [a, inf) onto t in [0,1) via x = a + t/(1-t).
double integrate_right_tail(const std::function<double(double)>& f, double a, double tol) {
    auto g = [&f, a](double t) {
        const double om = 1.0 - t;
        const double x = a + t / om;
        const double fx = f(x);
        if (fx == 0.0) return 0.0;
        return fx / (om * om);
    };
    return integrate_finite(g, 0.0, 1.0, tol);
}

double integrate_left_tail(const std::function<double(double)>& f, double b, double tol) {
    auto g = [&f, b](double t) {
        const double om = 1.0 - t;
        const double x = b - t / om;
        const double fx = f(x);
        if (fx == 0.0) return 0.0;
        return fx / (om * om);
    };
    return integrate_finite(g, 0.0, 1.0, tol);
}

} // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::domain_error("integrate: requires lo < hi");
    const bool lo_inf = std::isinf(lo);
    const bool hi_inf = std::isinf(hi);
    if (!lo_inf && !hi_inf) return integrate_finite(f, lo, hi, tol);
    if (lo_inf && hi_inf) {
        return integrate_left_tail(f, 0.0, 0.5 * tol) +
               integrate_right_tail(f, 0.0, 0.5 * tol);
    }
    if (hi_inf) return integrate_right_tail(f, lo, tol);
    return integrate_left_tail(f, hi, tol);
}

double invert_monotone_cdf(const std::function<double(double)>& cdf, double q,
                           RealInterval support, double init_lo, double init_hi,
                           double tol_q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("invert_monotone_cdf: requires q in (0,1)");
    }
    double lo = std::max(init_lo, support.lo);
    double hi = std::min(init_hi, support.hi);
    if (!(lo < hi)) {
        lo = support.lo;
        hi = support.hi;
    }

    // Expand toward an infinite endpoint until the bracket straddles q. A
    // finite support endpoint is itself a valid bracket bound (cdf there is
    // 0 or 1).
    double width = std::max(hi - lo, 1.0);
    for (int k = 0; k < 200 && std::isfinite(lo) && cdf(lo) > q; ++k) {
        if (support.lo > -kInf) {
            lo = support.lo;
            break;
        }
        lo -= width;
        width *= 2.0;
    }
    width = std::max(hi - lo, 1.0);
    for (int k = 0; k < 200 && std::isfinite(hi) && cdf(hi) < q; ++k) {
        if (support.hi < kInf) {
            hi = support.hi;
            break;
        }
        hi += width;
        width *= 2.0;
    }
    if (std::isinf(lo) || std::isinf(hi)) {
        // support endpoint at infinity not reached by expansion
        throw numerical_error("invert_monotone_cdf: bracket expansion failed");
    }

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 400; ++it) {
        x = 0.5 * (lo + hi);
        const double fx = cdf(x);
        if (std::fabs(fx - q) <= tol_q) return x;
        if (fx < q) lo = x; else hi = x;
        if (hi - lo <= std::fabs(x) * 4e-16 + 5e-324) break;
    }
    if (std::fabs(cdf(x) - q) <= tol_q) return x;
    throw numerical_error("invert_monotone_cdf: no point met the cdf tolerance");
}

GeneratedDistribution::GeneratedDistribution(UnivariateDistribution base,
                                             GeneratorDistribution gen)
    : base_(std::move(base)), gen_(std::move(gen)),
      name_(gen_.name + "-" + base_.name) {}

double GeneratedDistribution::pdf(double x) const {
    const double f = base_.pdf(x);
    if (f <= 0.0) return 0.0;
    return gen_.pdf(clamp_unit(base_.cdf(x))) * f;
}

double GeneratedDistribution::cdf(double x) const {
    return gen_.cdf(base_.cdf(x));
}

GeneratedDistribution compose(UnivariateDistribution base, GeneratorDistribution gen) {
    return GeneratedDistribution(std::move(base), std::move(gen));
}

GeneratorDistribution
mix_generators(std::vector<std::pair<double, GeneratorDistribution>> parts) {
    if (parts.empty()) throw std::domain_error("mix_generators: no components");
    double sum = 0.0;
    for (const auto& [w, gen] : parts) {
        if (!(w > 0.0)) throw std::domain_error("mix_generators: weights must be positive");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw std::domain_error("mix_generators: weights must sum to 1");
    }
    if (parts.size() == 1) return std::move(parts.front().second);

    auto shared = std::make_shared<std::vector<std::pair<double, GeneratorDistribution>>>(
        std::move(parts));
    std::string name = "mix(";
    for (std::size_t i = 0; i < shared->size(); ++i) {
        if (i) name += ",";
        name += (*shared)[i].second.name;
    }
    name += ")";

    GeneratorDistribution out;
    out.name = std::move(name);
    out.pdf = [shared](double t) {
        double acc = 0.0;
        for (const auto& [w, gen] : *shared) acc += w * gen.pdf(t);
        return acc;
    };
    out.cdf = [shared](double t) {
        double acc = 0.0;
        for (const auto& [w, gen] : *shared) acc += w * gen.cdf(t);
        return acc;
    };
    auto cdf_copy = out.cdf;
    out.quantile = [cdf_copy](double u) {
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        return invert_monotone_cdf(cdf_copy, u, {0.0, 1.0}, 0.0, 1.0, 1e-12);
    };
    return out;
}

std::vector<double> sample_inverse(const GeneratedDistribution& dist, std::size_t n,
                                   std::uint64_t seed) {
    if (n < 1) throw std::domain_error("sample_inverse: requires n >= 1");
    SplitMix64 rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = dist.generator().quantile(rng.next_unit());
        out.push_back(dist.base().quantile(t));
    }
    return out;
}

double numeric_quantile(const GeneratedDistribution& dist, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("numeric_quantile: requires q in (0,1)");
    auto cdf = [&dist](double x) { return dist.cdf(x); };
    return invert_monotone_cdf(cdf, q, dist.support(), -50.0, 50.0, 1e-10);
}

double numeric_moment(const GeneratedDistribution& dist, int k) {
    if (k < 1) throw std::domain_error("numeric_moment: requires k >= 1");
    const RealInterval sup = dist.support();

    // Tail probe: |y|^k g(y) must die out toward any infinite endpoint.
    auto probe = [&](double direction) {
        double y = direction;
        for (int j = 0; j < 10; ++j) {
            const double v = std::fabs(std::pow(y, k)) * dist.pdf(y);
            if (v < 1e-10) return;
            y *= 4.0;
        }
        throw numerical_error("numeric_moment: integrand does not decay in the tail");
    };
    if (std::isinf(sup.hi)) probe(std::max(1.0, 2.0 * std::fabs(sup.lo < -1e300 ? 1.0 : sup.lo)));
    if (std::isinf(sup.lo)) probe(-1.0);

    auto f = [&dist, k](double y) { return std::pow(y, k) * dist.pdf(y); };

    // Split at the base median: symmetric-about-a-kink densities (Laplace
    // family) keep the kink out of every Kronrod panel's interior.
    const double anchor = dist.base().quantile(0.5);
    if (anchor > sup.lo && anchor < sup.hi) {
        return integrate(f, sup.lo, anchor, 5e-9) + integrate(f, anchor, sup.hi, 5e-9);
    }
    return integrate(f, sup.lo, sup.hi, 1e-8);
}

} // namespace genlap
