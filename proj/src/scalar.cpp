#include "bcwb/scalar.hpp"

namespace bcwb {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string to_string(const GaussianRational& z) {
    auto imag_part = [](const Rational& im) -> std::string {
        if (im == 1) return "i";
        if (im == -1) return "-i";
        return to_string(im) + "*i";
    };
    if (z.im == 0) return to_string(z.re);
    if (z.re == 0) return imag_part(z.im);
    std::string s = to_string(z.re);
    s += (z.im > 0) ? "+" : "-";
    Rational a = abs(z.im);
    s += (a == 1) ? "i" : to_string(a) + "*i";
    return s;
}

}  // namespace bcwb
