#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace rdshock {

/// Dense univariate polynomial, coefficients stored lowest degree first.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }
    Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }

    /// Horner evaluation.
    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial{0.0};
        std::vector<double> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = coeffs_[i] * static_cast<double>(i);
        return Polynomial(std::move(d));
    }

    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const {
        std::vector<double> a(coeffs_.size() + 1, 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            a[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
        return Polynomial(std::move(a));
    }

    Polynomial operator*(const Polynomial& rhs) const {
        std::vector<double> p(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                p[i + j] += coeffs_[i] * rhs.coeffs_[j];
        return Polynomial(std::move(p));
    }

    Polynomial operator+(const Polynomial& rhs) const {
        std::vector<double> s(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = coeff(i) + rhs.coeff(i);
        return Polynomial(std::move(s));
    }

    Polynomial scaled(double s) const {
        std::vector<double> p(coeffs_);
        for (double& c : p) c *= s;
        return Polynomial(std::move(p));
    }

    /// Same polynomial with the constant term replaced.
    Polynomial with_constant(double c0) const {
        std::vector<double> p(coeffs_);
        p[0] = c0;
        return Polynomial(std::move(p));
    }

    /// Synthetic division by (x - r). Returns the quotient and stores the
    /// remainder (= p(r)) in `remainder`.
    Polynomial deflate(double r, double& remainder) const;

private:
    std::vector<double> coeffs_;
};

inline Polynomial Polynomial::deflate(double r, double& remainder) const {
    if (coeffs_.size() <= 1) {
        remainder = coeffs_[0];
        return Polynomial{0.0};
    }
    std::vector<double> q(coeffs_.size() - 1, 0.0);
    double carry = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs_[i] + carry * r;
    }
    remainder = carry;
    return Polynomial(std::move(q));
}

}  // namespace rdshock
