#pragma once
// Sparse multivariate polynomials over exact rationals, graded by the
// weighted degrees of a fixed generator set.

#include "smw/error.hpp"
#include "smw/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smw {

struct Generator {
    std::string name;
    unsigned degree = 1;  // complex codimension of the class
};

/// An immutable, ordered list of named graded generators.
/// Names are unique; declaration order doubles as the default priority
/// for monomial orders.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;  // throws if absent
    bool equals(const GeneratorSet& o) const;

private:
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using GenSetPtr = std::shared_ptr<const GeneratorSet>;

GenSetPtr make_genset(std::vector<Generator> gens);

/// Exponent vector with one slot per generator. The comparison operators
/// give the canonical storage order (plain lexicographic on exponents),
/// which is unrelated to any monomial order used for computation.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    static Monomial one(std::size_t ngens) { return Monomial(std::vector<unsigned>(ngens, 0)); }
    static Monomial var(std::size_t ngens, std::size_t i, unsigned e = 1);

    std::size_t size() const { return e_.size(); }
    unsigned exp(std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }
    bool is_one() const;

    unsigned weighted_degree(const GeneratorSet& gs) const;
    bool divides(const Monomial& m) const;
    bool coprime(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    /// Componentwise difference; requires m.divides(*this).
    Monomial divide_by(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<unsigned> e_;
};

/// term map: monomial -> nonzero coefficient
using TermMap = std::map<Monomial, Rational>;

class Polynomial {
public:
    explicit Polynomial(GenSetPtr gs);

    static Polynomial zero(GenSetPtr gs) { return Polynomial(std::move(gs)); }
    static Polynomial constant(GenSetPtr gs, const Rational& c);
    static Polynomial generator(GenSetPtr gs, std::size_t index, unsigned power = 1);
    static Polynomial generator(GenSetPtr gs, std::string_view name, unsigned power = 1);
    static Polynomial term(GenSetPtr gs, Monomial m, const Rational& c);

    const GenSetPtr& genset() const { return gs_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    Rational coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned k) const;
    bool operator==(const Polynomial& q) const;
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    /// Weighted degree of the highest term; 0 for the zero polynomial.
    unsigned max_degree() const;
    /// Degree shared by all terms, or nullopt if inhomogeneous or zero.
    std::optional<unsigned> homogeneous_degree() const;
    bool is_homogeneous() const;

    /// Adds c * m, dropping the entry if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

    /// Throws on generator-set mismatch (pointer or content equality passes).
    void require_same_genset(const Polynomial& q) const;

private:
    GenSetPtr gs_;
    TermMap t_;
};

// Free-function names for the arithmetic entry points.
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Exact division in the polynomial ring. Throws Error (including the
/// remainder's text form) when q does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

/// Sum of the terms of exactly the given weighted degree.
Polynomial homogeneous_component(const Polynomial& p, unsigned degree);

/// Ring-homomorphism evaluation. Every generator appearing in p must have
/// an image; images live in a common generator set and must be homogeneous
/// of the substituted generator's degree (zero images are always allowed).
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images);

}  // namespace smw
