// Exact scalar arithmetic: arbitrary-precision rationals and the field Q(i).
//
// Every coefficient in the workbench lives in Q(i) = { a + b*i : a, b in Q }.
// Rationals are boost::multiprecision cpp_rational (always stored reduced,
// positive denominator), so the reduced-form invariant holds by construction.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>
#include <ostream>
#include <string>

namespace bcwb {

using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}                       // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)) {}       // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // (a+bi)(a-bi) = a^2 + b^2, exact and nonnegative.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

std::string to_string(const Rational& r);

// Renders "a/b", "c/d*i" or "a/b+c/d*i" (also "-...", "i", "-i").
std::string to_string(const GaussianRational& z);

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

}  // namespace bcwb

namespace Eigen {

// Q(i) is registered as an opaque exact field: storage, sums and products only.
// None of Eigen's norm- or sqrt-based machinery is used on these matrices.
template <>
struct NumTraits<bcwb::GaussianRational> {
    using Self = bcwb::GaussianRational;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64
    };
    static inline Self epsilon() { return Self(0); }
    static inline Self dummy_precision() { return Self(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
