#include "bcwb/exterior.hpp"

#include <bit>

namespace bcwb {

namespace {

// Position of a factor in the canonical total order on generators.
int factor_rank(const Generator& g, int n) { return g.barred ? n + g.index - 1 : g.index - 1; }

}  // namespace

int Monomial::s() const { return std::popcount(holo); }
int Monomial::t() const { return std::popcount(anti); }

std::vector<Generator> Monomial::factors() const {
    std::vector<Generator> fs;
    for (int k = 0; k < 32; ++k)
        if (holo & (1u << k)) fs.push_back({k + 1, false});
    for (int k = 0; k < 32; ++k)
        if (anti & (1u << k)) fs.push_back({k + 1, true});
    return fs;
}

std::string to_dsl_string(const Monomial& m) {
    std::vector<Generator> fs = m.factors();
    if (fs.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) s += "^";
        s += (fs[i].barred ? "cw" : "w") + std::to_string(fs[i].index);
    }
    return s;
}

std::pair<int, Monomial> canonicalize_monomial(const std::vector<Generator>& factors, int n) {
    Monomial m;
    int sign = 1;
    for (const Generator& g : factors) {
        if (g.index < 1 || g.index > n)
            throw Error(ErrorKind::IndexOutOfRange,
                        "generator index " + std::to_string(g.index) + " outside 1.." + std::to_string(n));
        std::uint32_t bit = 1u << (g.index - 1);
        std::uint32_t& mask = g.barred ? m.anti : m.holo;
        if (mask & bit) return {0, Monomial{}};
        // Transpositions needed: already-placed factors of strictly larger
        // rank all jump over the new one.
        int above = g.barred ? std::popcount(m.anti >> g.index)
                             : std::popcount(m.holo >> g.index) + std::popcount(m.anti);
        if (above % 2) sign = -sign;
        mask |= bit;
    }
    return {sign, m};
}

std::pair<int, Monomial> monomial_wedge(const Monomial& a, const Monomial& b, int n) {
    if ((a.holo & b.holo) || (a.anti & b.anti)) return {0, Monomial{}};
    // Inversions between the concatenated factor sequences: every factor of b
    // crosses each factor of a of larger rank.
    auto count_above = [n](const Monomial& m, int r) {
        int c = 0;
        for (int k = 0; k < n; ++k) {
            if ((m.holo & (1u << k)) && k > r) ++c;
            if ((m.anti & (1u << k)) && n + k > r) ++c;
        }
        return c;
    };
    int inversions = 0;
    for (const Generator& g : b.factors()) inversions += count_above(a, factor_rank(g, n));
    Monomial m{a.holo | b.holo, a.anti | b.anti};
    return {(inversions % 2) ? -1 : 1, m};
}

std::vector<Monomial> bidegree_basis(int n, int s, int t) {
    std::vector<Monomial> basis;
    if (s < 0 || t < 0 || s > n || t > n) return basis;
    std::vector<std::uint32_t> holos, antis;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        if (std::popcount(m) == s) holos.push_back(m);
        if (std::popcount(m) == t) antis.push_back(m);
    }
    for (std::uint32_t I : holos)
        for (std::uint32_t J : antis) basis.push_back(Monomial{I, J});
    return basis;
}

void Form::add_term(const Monomial& m, GaussianRational c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Form Form::component(int s, int t) const {
    Form out(n_);
    for (const auto& [m, c] : terms_)
        if (m.s() == s && m.t() == t) out.add_term(m, c);
    return out;
}

bool Form::is_homogeneous(int s, int t) const {
    for (const auto& [m, c] : terms_)
        if (m.s() != s || m.t() != t) return false;
    return true;
}

Form Form::operator-() const {
    Form out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Form& Form::operator+=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Form& Form::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Form wedge(const Form& f, const Form& g) {
    if (f.n() != g.n()) throw Error(ErrorKind::DimensionMismatch, "wedge: mixed ambient dimensions");
    Form out(f.n());
    for (const auto& [ma, ca] : f.terms()) {
        for (const auto& [mb, cb] : g.terms()) {
            auto [sign, m] = monomial_wedge(ma, mb, f.n());
            if (sign == 0) continue;
            out.add_term(m, GaussianRational(sign) * ca * cb);
        }
    }
    return out;
}

Form conjugate(const Form& f) {
    Form out(f.n());
    for (const auto& [m, c] : f.terms()) {
        int sign = (m.s() * m.t()) % 2 ? -1 : 1;
        out.add_term(Monomial{m.anti, m.holo}, GaussianRational(sign) * c.conj());
    }
    return out;
}

std::string to_dsl_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        GaussianRational coeff = c;
        std::string sign_str;
        if (first) {
            // Pull a real negative sign out front; general coefficients keep
            // their sign inside the parentheses.
            if (coeff.is_real() && coeff.re < 0) {
                sign_str = "-";
                coeff = -coeff;
            }
        } else {
            if (coeff.is_real() && coeff.re < 0) {
                sign_str = " - ";
                coeff = -coeff;
            } else {
                sign_str = " + ";
            }
        }
        out += sign_str;
        bool scalar_one = (coeff == GaussianRational(1));
        bool bare_i = (coeff == GaussianRational::i());
        if (m.degree() == 0) {
            out += bare_i ? "i" : to_string(coeff);
        } else if (scalar_one) {
            out += to_dsl_string(m);
        } else if (bare_i) {
            out += "i*" + to_dsl_string(m);
        } else {
            std::string cs = to_string(coeff);
            bool needs_parens = !coeff.is_real() || cs.find('/') != std::string::npos;
            out += (needs_parens ? "(" + cs + ")" : cs) + "*" + to_dsl_string(m);
        }
        first = false;
    }
    return out;
}

}  // namespace bcwb
