#pragma once

#include <initializer_list>
#include <vector>

namespace kst {

/// Real polynomial, coefficients in ascending order of degree.
class Polynomial {
public:
    Polynomial() = default;
    /// Trailing zero coefficients are dropped.
    explicit Polynomial(std::vector<double> ascending);
    Polynomial(std::initializer_list<double> ascending) : Polynomial(std::vector<double>(ascending)) {}

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    double coefficient(int k) const noexcept;
    const std::vector<double>& coefficients() const noexcept { return c_; }

    double operator()(double x) const noexcept;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
    std::vector<double> c_;
};

/// Largest real root of a polynomial of degree 1 to 3, to about 1e-12.
/// Throws ContractError when there is no real root or the degree is unsupported.
double largest_real_root(const Polynomial& p);

}  // namespace kst
