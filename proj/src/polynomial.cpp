#include "kst/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "kst/error.hpp"

namespace kst {

Polynomial::Polynomial(std::vector<double> ascending) : c_(std::move(ascending))
{
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::coefficient(int k) const noexcept
{
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : 0.0;
}

double Polynomial::operator()(double x) const noexcept
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<double> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(static_cast<double>(k) * c_[k]);
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.c_.empty() || b.c_.empty()) return Polynomial();
    std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

namespace {

// Real roots of a polynomial of degree <= 2, ascending.
std::vector<double> small_roots(const Polynomial& p)
{
    if (p.degree() == 1) return {-p.coefficient(0) / p.coefficient(1)};
    if (p.degree() != 2) return {};
    const double a = p.coefficient(2), b = p.coefficient(1), c = p.coefficient(0);
    const double disc = b * b - 4 * a * c;
    if (disc < 0) return {};
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    std::vector<double> r;
    if (q != 0.0) {
        r = {q / a, c / q};
    } else {
        r = {0.0, 0.0};
    }
    std::sort(r.begin(), r.end());
    return r;
}

double magnitude(const Polynomial& p, double x)
{
    double scale = 0.0, power = 1.0;
    for (double c : p.coefficients()) {
        scale += std::abs(c) * power;
        power *= std::abs(x);
    }
    return scale;
}

double bisect(const Polynomial& p, double lo, double hi)
{
    double flo = p(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    // Newton polish, kept inside the bracket.
    const Polynomial dp = p.derivative();
    for (int i = 0; i < 3; ++i) {
        const double d = dp(x);
        if (d == 0.0) break;
        const double next = x - p(x) / d;
        if (next < lo || next > hi) break;
        x = next;
    }
    return x;
}

}  // namespace

double largest_real_root(const Polynomial& p)
{
    const int deg = p.degree();
    if (deg < 1 || deg > 3) throw ContractError("largest_real_root: degree must be 1, 2 or 3");
    if (deg == 1) return -p.coefficient(0) / p.coefficient(1);

    const double lead = p.coefficient(deg);
    double bound = 0.0;
    for (int k = 0; k < deg; ++k) bound = std::max(bound, std::abs(p.coefficient(k) / lead));
    bound += 1.0;

    std::vector<double> points{-bound};
    for (double c : small_roots(p.derivative()))
        if (c > -bound && c < bound) points.push_back(c);
    points.push_back(bound);

    for (std::size_t i = points.size() - 1; i > 0; --i) {
        const double lo = points[i - 1], hi = points[i];
        const double flo = p(lo), fhi = p(hi);
        if (fhi == 0.0) return hi;
        // A tangent root at a critical point.
        if (i - 1 > 0 && std::abs(flo) <= 1e-14 * magnitude(p, lo)) {
            if ((flo < 0) != (fhi < 0) && flo != 0.0) return bisect(p, lo, hi);
            return lo;
        }
        if ((flo < 0) != (fhi < 0)) return bisect(p, lo, hi);
    }
    throw ContractError("largest_real_root: polynomial has no real root");
}

}  // namespace kst
