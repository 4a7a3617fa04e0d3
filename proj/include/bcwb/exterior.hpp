// Bigraded exterior algebra on the complexified Lie coalgebra.
//
// A monomial w^{I Jbar} keeps its unbarred factors before the barred ones,
// each block ascending; index sets are bitmasks (bit k-1 <=> generator k).
// Bases of A^{s,t} are ordered colexicographically (mask value order), the
// unbarred set being the major key, which reproduces the w^{1 1bar},
// w^{1 2bar}, w^{2 1bar}, ... ordering used for printed generators.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bcwb/errors.hpp"
#include "bcwb/scalar.hpp"

namespace bcwb {

struct Generator {
    int index = 0;  // 1-based
    bool barred = false;

    friend bool operator==(const Generator&, const Generator&) = default;
};

struct Monomial {
    std::uint32_t holo = 0;  // I
    std::uint32_t anti = 0;  // J

    int s() const;
    int t() const;
    int degree() const { return s() + t(); }

    // Factors in canonical order: unbarred ascending, then barred ascending.
    std::vector<Generator> factors() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.s() != b.s()) return a.s() > b.s();
        if (a.holo != b.holo) return a.holo < b.holo;
        return a.anti < b.anti;
    }
};

// DSL rendering, e.g. "w1^w2^cw3"; the empty monomial renders as "1".
std::string to_dsl_string(const Monomial& m);

// Sign of sorting the factor list into canonical order; sign 0 on a repeated
// factor.  Throws IndexOutOfRange when an index is outside 1..n.
std::pair<int, Monomial> canonicalize_monomial(const std::vector<Generator>& factors, int n);

// Product of canonical monomials with the Koszul sign (0 on overlap).
std::pair<int, Monomial> monomial_wedge(const Monomial& a, const Monomial& b, int n);

// All monomials of bidegree (s,t) on n generators, in basis order.
std::vector<Monomial> bidegree_basis(int n, int s, int t);

class Form {
  public:
    Form() = default;
    explicit Form(int n) : n_(n) {}
    Form(int n, const Monomial& m, GaussianRational c = GaussianRational(1)) : n_(n) {
        add_term(m, std::move(c));
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    void add_term(const Monomial& m, GaussianRational c);

    // Restriction to one bidegree.
    Form component(int s, int t) const;
    // True when every term has bidegree (s,t) (vacuously for 0).
    bool is_homogeneous(int s, int t) const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const GaussianRational& c);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const GaussianRational& c, Form f) { return f *= c; }
    friend bool operator==(const Form&, const Form&) = default;

  private:
    int n_ = 0;
    std::map<Monomial, GaussianRational> terms_;
};

// Bilinear graded product; throws DimensionMismatch when the underlying n
// differ.
Form wedge(const Form& f, const Form& g);

// Complex conjugation: coefficients conjugate, I and J swap with the
// block-reordering sign (-1)^{|I||J|}.  Involutive, and intertwines the
// differentials: conj(del f) = delbar(conj f).
Form conjugate(const Form& f);

std::string to_dsl_string(const Form& f);

}  // namespace bcwb
