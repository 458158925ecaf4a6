#pragma once
// Monomial orders: weighted graded reverse-lexicographic (the default for
// every presentation) and a two-block elimination order for kernel
// computations. Both refine the weighted degree blockwise and are total,
// multiplication-compatible well-orders.

#include "smw/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace smw {

class MonomialOrder {
public:
    enum class Kind { GrevLex, Elimination };

    /// Graded reverse-lexicographic with generator priority = declaration order.
    static MonomialOrder grevlex(GenSetPtr gs);
    /// Same, with an explicit priority permutation (priority[0] is strongest).
    static MonomialOrder grevlex(GenSetPtr gs, std::vector<std::size_t> priority);
    /// Block order eliminating the first `eliminated` generators: the
    /// eliminated-block submonomials are compared grevlex first, then the
    /// remaining block. Any monomial touching the eliminated block sorts
    /// above every monomial that does not.
    static MonomialOrder elimination(GenSetPtr gs, std::size_t eliminated);

    Kind kind() const { return kind_; }
    const GenSetPtr& genset() const { return gs_; }
    std::size_t eliminated_block() const { return eliminated_; }
    const std::vector<std::size_t>& priority() const { return priority_; }

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Stable identity string, e.g. "grevlex" or "elimination(3)".
    std::string describe() const;

private:
    MonomialOrder(Kind k, GenSetPtr gs, std::vector<std::size_t> priority,
                  std::size_t eliminated);

    int compare_block(const Monomial& a, const Monomial& b,
                      std::size_t lo, std::size_t hi) const;

    Kind kind_;
    GenSetPtr gs_;
    std::vector<std::size_t> priority_;  // generator indices, strongest first
    std::size_t eliminated_ = 0;         // size of the leading block (Elimination)
};

/// Leading monomial of p under the order; throws for the zero polynomial.
const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& order);
/// Leading coefficient under the order.
const Rational& leading_coefficient(const Polynomial& p, const MonomialOrder& order);

}  // namespace smw
