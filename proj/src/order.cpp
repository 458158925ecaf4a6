#include "smw/order.hpp"

#include <algorithm>
#include <numeric>

namespace smw {

MonomialOrder::MonomialOrder(Kind k, GenSetPtr gs, std::vector<std::size_t> priority,
                             std::size_t eliminated)
    : kind_(k), gs_(std::move(gs)), priority_(std::move(priority)), eliminated_(eliminated) {}

MonomialOrder MonomialOrder::grevlex(GenSetPtr gs) {
    std::vector<std::size_t> prio(gs->size());
    std::iota(prio.begin(), prio.end(), 0);
    return MonomialOrder(Kind::GrevLex, std::move(gs), std::move(prio), 0);
}

MonomialOrder MonomialOrder::grevlex(GenSetPtr gs, std::vector<std::size_t> priority) {
    if (priority.size() != gs->size()) throw Error("priority permutation has wrong size");
    std::vector<char> seen(gs->size(), 0);
    for (std::size_t i : priority) {
        if (i >= gs->size() || seen[i]) throw Error("priority is not a permutation");
        seen[i] = 1;
    }
    return MonomialOrder(Kind::GrevLex, std::move(gs), std::move(priority), 0);
}

MonomialOrder MonomialOrder::elimination(GenSetPtr gs, std::size_t eliminated) {
    if (eliminated > gs->size()) throw Error("eliminated block larger than generator set");
    std::vector<std::size_t> prio(gs->size());
    std::iota(prio.begin(), prio.end(), 0);
    return MonomialOrder(Kind::Elimination, std::move(gs), std::move(prio), eliminated);
}

// Weighted grevlex on the priority slice [lo, hi): higher weighted degree
// wins; on ties, scanning from the weakest generator upward, the monomial
// with the smaller exponent at the first difference is the larger one.
int MonomialOrder::compare_block(const Monomial& a, const Monomial& b,
                                 std::size_t lo, std::size_t hi) const {
    const GeneratorSet& gs = *gs_;
    long da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
        std::size_t i = priority_[k];
        da += static_cast<long>(a.exp(i)) * gs[i].degree;
        db += static_cast<long>(b.exp(i)) * gs[i].degree;
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = hi; k > lo; --k) {
        std::size_t i = priority_[k - 1];
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != gs_->size() || b.size() != gs_->size())
        throw Error("monomial width does not match the order's generator set");
    if (kind_ == Kind::GrevLex) return compare_block(a, b, 0, gs_->size());
    int c = compare_block(a, b, 0, eliminated_);
    if (c != 0) return c;
    return compare_block(a, b, eliminated_, gs_->size());
}

std::string MonomialOrder::describe() const {
    if (kind_ == Kind::GrevLex) {
        bool natural = true;
        for (std::size_t i = 0; i < priority_.size(); ++i)
            if (priority_[i] != i) natural = false;
        if (natural) return "grevlex";
        std::string s = "grevlex(";
        for (std::size_t i = 0; i < priority_.size(); ++i) {
            if (i) s += ",";
            s += (*gs_)[priority_[i]].name;
        }
        return s + ")";
    }
    return "elimination(" + std::to_string(eliminated_) + ")";
}

const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw Error("leading monomial of the zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        if (!best || order.greater(m, *best)) best = &m;
    }
    return *best;
}

const Rational& leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
    return p.terms().at(leading_monomial(p, order));
}

}  // namespace smw
