#include "smw/invariants.hpp"

#include "smw/error.hpp"
#include "smw/presentations.hpp"
#include "smw/text.hpp"

#include <array>
#include <chrono>
#include <set>
#include <utility>

namespace smw {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
        .count();
}

/// Do two elements act identically on the quotient?
bool same_element(const QuotientRing& q, const ActionElement& a, const ActionElement& b) {
    for (const auto& [name, image] : a.images) {
        if (!q.is_zero(image - b.images.at(name))) return false;
    }
    return true;
}

/// Composition "g after h": every generator goes through h, then g.
ActionElement compose(const ActionElement& g, const ActionElement& h) {
    ActionElement gh;
    gh.name = g.name + "*" + h.name;
    for (const auto& [name, image] : h.images) gh.images.emplace(name, substitute(image, g.images));
    return gh;
}

}  // namespace

Polynomial apply_action(const ActionElement& g, const Polynomial& p) {
    return substitute(p, g.images);
}

RingAction::RingAction(QuotientRing ring, std::vector<ActionElement> elements)
    : ring_(std::move(ring)), group_(std::move(elements)) {
    if (group_.empty()) throw Error("RingAction: the group list is empty");

    const GenSetPtr& gs = ring_.genset();
    for (const auto& g : group_) {
        if (g.images.size() != gs->size())
            throw Error("RingAction: element " + g.name + " must give exactly one image per generator");
        for (std::size_t i = 0; i < gs->size(); ++i) {
            const auto& gen = (*gs)[i];
            auto it = g.images.find(gen.name);
            if (it == g.images.end())
                throw Error("RingAction: element " + g.name + " misses an image for " + gen.name);
            auto deg = it->second.homogeneous_degree();
            if (!deg || *deg != gen.degree)
                throw Error("RingAction: element " + g.name + " does not preserve the degree of " +
                            gen.name);
        }
        for (const auto& rel : ring_.presentation().relations) {
            if (!ring_.is_zero(apply_action(g, rel)))
                throw Error("RingAction: element " + g.name +
                            " does not fix the ideal (a relation's image has nonzero normal form)");
        }
    }

    // Composition table: every product must be a listed element, and both
    // rows and columns must be permutations (closure + cancellation give a
    // finite group, so inverses and the identity are present implicitly).
    std::size_t m = group_.size();
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m, m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            ActionElement prod = compose(group_[i], group_[j]);
            for (std::size_t k = 0; k < m; ++k) {
                if (same_element(ring_, prod, group_[k])) {
                    table[i][j] = k;
                    break;
                }
            }
            if (table[i][j] == m)
                throw Error("RingAction: composition " + group_[i].name + "*" + group_[j].name +
                            " is not a listed element (closure fails)");
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::set<std::size_t> row(table[i].begin(), table[i].end());
        std::set<std::size_t> col;
        for (std::size_t j = 0; j < m; ++j) col.insert(table[j][i]);
        if (row.size() != m || col.size() != m)
            throw Error("RingAction: the composition table does not cancel (not a group)");
    }
}

Polynomial RingAction::apply(std::size_t element, const Polynomial& p) const {
    return ring_.normal_form(apply_action(group_.at(element), p));
}

Polynomial RingAction::reynolds(const Polynomial& p) const {
    Polynomial sum = Polynomial::zero(ring_.genset());
    for (const auto& g : group_) sum += apply_action(g, p);
    return ring_.normal_form(sum * rational(1, static_cast<long long>(group_.size())));
}

RingAction label_swap_action(const QuotientRing& q, const std::string& a,
                             const std::string& b) {
    const GenSetPtr& gs = q.genset();
    ActionElement e{"identity", {}};
    ActionElement s{"swap", {}};
    for (std::size_t i = 0; i < gs->size(); ++i) {
        const std::string& name = (*gs)[i].name;
        e.images.emplace(name, Polynomial::generator(gs, name));
        std::string target = name == a ? b : (name == b ? a : name);
        s.images.emplace(name, Polynomial::generator(gs, target));
    }
    return RingAction(q, {e, s});
}

std::vector<unsigned long> invariant_hilbert(const QuotientRing& q, const RingAction& a,
                                             unsigned maxDegree) {
    // The action must have been built on the same presented ring.
    const GenSetPtr& gs = q.genset();
    const GenSetPtr& ags = a.ring().genset();
    if (gs->size() != ags->size())
        throw Error("invariant_hilbert: quotient and action disagree on generators");
    for (std::size_t i = 0; i < gs->size(); ++i)
        if ((*gs)[i].name != (*ags)[i].name || (*gs)[i].degree != (*ags)[i].degree)
            throw Error("invariant_hilbert: quotient and action disagree on generators");

    std::vector<unsigned long> dims;
    Rational order(static_cast<long>(a.group().size()));
    for (unsigned d = 0; d <= maxDegree; ++d) {
        std::vector<Monomial> basis = q.standard_monomials(d);
        Rational total(0);
        for (const auto& g : a.group()) {
            for (const auto& m : basis) {
                Polynomial image =
                    q.normal_form(apply_action(g, Polynomial::term(gs, m, Rational(1))));
                total += image.coefficient(m);
            }
        }
        Rational average = total / order;
        if (denominator(average) != 1 || average < 0)
            throw Error("invariant_hilbert: trace average is not a non-negative integer");
        dims.push_back(numerator(average).convert_to<unsigned long>());
    }
    return dims;
}

bool inclusion_exclusion_check(const Polynomial& P, const std::string& var,
                               const std::vector<Polynomial>& vars,
                               const QuotientRing& q) {
    if (vars.empty()) throw Error("inclusion_exclusion_check: no variables given");
    Polynomial product = vars.front();
    for (std::size_t i = 1; i < vars.size(); ++i) product = product * vars[i];
    if (!q.is_zero(product))
        throw Error("inclusion_exclusion_check: the product of the variables is nonzero: " +
                    to_text(q.normal_form(product)));

    const GenSetPtr& pgs = P.genset();
    const GenSetPtr& qgs = q.genset();
    std::map<std::string, Polynomial> base;
    bool sawVar = false;
    for (std::size_t i = 0; i < pgs->size(); ++i) {
        const std::string& name = (*pgs)[i].name;
        if (name == var) {
            sawVar = true;
            continue;
        }
        base.emplace(name, Polynomial::generator(qgs, name));  // throws if q lacks it
    }
    if (!sawVar)
        throw Error("inclusion_exclusion_check: " + var + " is not a generator of the polynomial");

    std::size_t m = vars.size();
    Polynomial total = Polynomial::zero(qgs);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        Polynomial arg = Polynomial::zero(qgs);
        unsigned picked = 0;  // |S|, the left-out indices
        for (std::size_t j = 0; j < m; ++j) {
            if (mask & (std::size_t{1} << j))
                ++picked;
            else
                arg += vars[j];
        }
        std::map<std::string, Polynomial> images = base;
        images.emplace(var, arg);
        Polynomial term = substitute(P, images);
        total += (picked % 2 == 0) ? term : -term;
    }
    return q.is_zero(total);
}

VerificationReport example36_pipeline(unsigned n) {
    VerificationReport report;
    report.title = "example36(n=" + std::to_string(n) + ")";

    RingPresentation pres = m01_pn_d2(n);  // ConventionError propagates
    QuotientRing q = QuotientRing::build(pres);
    const GenSetPtr& gs = pres.gens;

    Polynomial D1 = Polynomial::generator(gs, "D1");
    Polynomial D2 = Polynomial::generator(gs, "D2");
    Polynomial psi = Polynomial::generator(gs, "psi");
    Polynomial D = pres.derived_class("D");
    Polynomial kH2 = pres.derived_class("kH2");
    Polynomial kH3 = pres.derived_class("kH3");
    Polynomial f = pres.derived_class("f");
    Polynomial b = pres.derived_class("b");
    Polynomial t = pres.derived_class("t");

    auto check = [&](const std::string& name, const std::string& statement, const Polynomial& p) {
        auto t0 = std::chrono::steady_clock::now();
        Polynomial residue = q.normal_form(p);
        std::optional<std::string> witness;
        if (!residue.is_zero()) witness = to_text(residue);
        report.add(make_check(name, statement, std::move(witness), elapsed_ms(t0)));
    };

    check("side-square:1", "(psi-D1)^2 + f - (3/16)D^2 + (3/16)kH2^2 - (1/2)kH3",
          (psi - D1).pow(2) + f - D.pow(2) * rational(3, 16) + kH2.pow(2) * rational(3, 16) -
              kH3 * rational(1, 2));
    check("side-square:2", "(psi-D2)^2 - f - (3/16)D^2 + (3/16)kH2^2 - (1/2)kH3",
          (psi - D2).pow(2) - f - D.pow(2) * rational(3, 16) + kH2.pow(2) * rational(3, 16) -
              kH3 * rational(1, 2));
    check("quartic", "f^2 + (1/16)D^4 + (3/16)kH2^2 D^2 - (1/2)kH3 D^2",
          f * f + D.pow(4) * rational(1, 16) + kH2.pow(2) * D.pow(2) * rational(3, 16) -
              kH3 * D.pow(2) * rational(1, 2));

    Polynomial kPoly = b * b - b * D + D1 * D2 - (psi - D) * psi;
    Polynomial kKappa = kH2.pow(2) * rational(1, 4) - kH2 * D * rational(1, 8) +
                        D.pow(2) * rational(1, 8) - kH3 * rational(1, 2);
    check("k-forms-agree", "b^2 - bD + D1 D2 - (psi-D)psi == (1/4)kH2^2 - (1/8)kH2 D + (1/8)D^2 - (1/2)kH3",
          kPoly - kKappa);
    check("product-hypothesis", "psi D1 D2", psi * D1 * D2);

    auto aAlt = [&](unsigned l) {
        return (b + psi - D1).pow(l) + (b + psi - D2).pow(l) - (b + psi).pow(l) + (b - psi).pow(l);
    };
    auto aInv = [&](unsigned l) {
        return (b - D1).pow(l) + (b - D2).pow(l) + (b + psi - D).pow(l) + (b - psi).pow(l) -
               b.pow(l) - (b - D).pow(l);
    };
    auto S = [&](unsigned N) {
        Polynomial s = Polynomial::zero(gs);
        for (unsigned l = 0; l <= N; ++l) s += aAlt(l) * b.pow(N - l);
        return s;
    };

    check("a-top-vanishes", "a_{n+1}", aAlt(n + 1));
    check("s-n-vanishes", "S_n", S(n));
    check("s-top-vanishes", "S_{n+1}", S(n + 1));
    check("boundary-b-top-vanishes", "D b^{n+1}", D * b.pow(n + 1));

    for (unsigned l = 0; l <= n + 1; ++l) {
        std::string suffix = ":l=" + std::to_string(l);
        check("a-forms-agree" + suffix, "invariant form of a_l minus its direct form",
              aInv(l) - aAlt(l));
        check("a-recurrence" + suffix, "a_{l+2} - t a_{l+1} + k a_l",
              aAlt(l + 2) - t * aAlt(l + 1) + kPoly * aAlt(l));
        check("s-recurrence" + suffix, "S_{l+2} - t S_{l+1} + k S_l - b^{l+1}(2b - t)",
              S(l + 2) - t * S(l + 1) + kPoly * S(l) - b.pow(l + 1) * (b * 2 - t));
    }

    // Transfer matrix: the printed seed is the l = 0 instance of the closed
    // form, exactly as polynomials (no reduction needed).
    Polynomial seed0 = b * (b * 2 - t);
    Polynomial seed1 = b * 2 - t;
    Polynomial seed2 = Polynomial::constant(gs, 2);
    {
        auto t0 = std::chrono::steady_clock::now();
        Polynomial d0 = b.pow(1) * (b * 2 - t) - seed0;
        Polynomial d1 = (S(1) - t * S(0)) - seed1;
        Polynomial d2 = S(0) - seed2;
        std::optional<std::string> witness;
        if (!d0.is_zero() || !d1.is_zero() || !d2.is_zero())
            witness = "(" + to_text(d0) + ", " + to_text(d1) + ", " + to_text(d2) + ")";
        report.add(make_check("y-seed-matches-closed-form",
                              "(b(2b-t), S_1 - t S_0, S_0) equals the seed vector exactly",
                              std::move(witness), elapsed_ms(t0)));
    }

    // Y_{n+1} = M^n * seed with M = [[b,0,0],[1,0,-k],[0,1,t]]; all three
    // components must die in the quotient.
    std::array<std::array<Polynomial, 3>, 3> M = {{
        {b, Polynomial::zero(gs), Polynomial::zero(gs)},
        {Polynomial::constant(gs, 1), Polynomial::zero(gs), -kPoly},
        {Polynomial::zero(gs), Polynomial::constant(gs, 1), t},
    }};
    std::array<Polynomial, 3> Y = {seed0, seed1, seed2};
    for (unsigned step = 0; step < n; ++step) {
        std::array<Polynomial, 3> next = {Polynomial::zero(gs), Polynomial::zero(gs),
                                          Polynomial::zero(gs)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) next[i] += M[i][j] * Y[j];
        Y = next;
    }
    check("y-top:1", "first component of the telescoped terminal vector", Y[0]);
    check("y-top:2", "second component of the telescoped terminal vector", Y[1]);
    check("y-top:3", "third component of the telescoped terminal vector", Y[2]);

    return report;
}

}  // namespace smw
