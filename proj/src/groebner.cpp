#include "smw/groebner.hpp"
#include "smw/text.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace smw {

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    const Rational& lc = leading_coefficient(p, order);
    if (lc == 1) return p;
    return p * Rational(Rational(1) / lc);
}

/// Full reduction of p against basis (vector of monic polynomials with
/// cached leading monomials). Deterministic: the first divisor in the
/// basis's stored order is always chosen.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lms, const MonomialOrder& order) {
    Polynomial remainder(p.genset());
    while (!p.is_zero()) {
        const Monomial& lm = leading_monomial(p, order);
        const Rational lc = p.terms().at(lm);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (lms[i].divides(lm)) {
                Monomial q = lm.divide_by(lms[i]);
                Polynomial t = Polynomial::term(p.genset(), q, lc);
                p -= t * basis[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            p.add_term(lm, Rational(-lc));
        }
    }
    return remainder;
}

struct BuchbergerState {
    const MonomialOrder& order;
    std::vector<Polynomial> g;   // monic
    std::vector<Monomial> lm;    // cached leading monomials
    // pending pairs keyed by (weighted lcm degree, i, j) for deterministic
    // normal-strategy selection
    std::set<std::tuple<unsigned, std::size_t, std::size_t>> pairs;
    std::set<std::pair<std::size_t, std::size_t>> treated;

    explicit BuchbergerState(const MonomialOrder& o) : order(o) {}

    unsigned lcm_degree(std::size_t i, std::size_t j) const {
        return Monomial::lcm(lm[i], lm[j]).weighted_degree(*order.genset());
    }

    void add_element(Polynomial p) {
        std::size_t idx = g.size();
        lm.push_back(leading_monomial(p, order));
        g.push_back(std::move(p));
        for (std::size_t i = 0; i < idx; ++i)
            pairs.emplace(lcm_degree(i, idx), i, idx);
    }

    bool chain_criterion(std::size_t i, std::size_t j) const {
        const Monomial l = Monomial::lcm(lm[i], lm[j]);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k == i || k == j) continue;
            if (!lm[k].divides(l)) continue;
            auto pik = std::minmax(i, k);
            auto pjk = std::minmax(j, k);
            if (treated.count({pik.first, pik.second}) &&
                treated.count({pjk.first, pjk.second}))
                return true;
        }
        return false;
    }
};

GroebnerBasis run_buchberger(const std::vector<Polynomial>& generators,
                             const MonomialOrder& order,
                             std::optional<unsigned> maxDegree, bool* complete) {
    if (complete) *complete = true;
    GenSetPtr gs = order.genset();
    for (const auto& p : generators) {
        p.require_same_genset(Polynomial::zero(gs));
        if (!p.is_homogeneous())
            throw Error("buchberger: inhomogeneous generator " + to_text(p));
    }

    BuchbergerState st(order);
    for (const auto& p : generators)
        if (!p.is_zero()) st.add_element(make_monic(p, order));

    // Main loop plus a verification sweep: after the pair queue drains, all
    // S-polynomials are re-checked directly, so a too-aggressive criterion
    // can never produce an unsound basis.
    for (int sweep = 0; sweep < 64; ++sweep) {
        while (!st.pairs.empty()) {
            auto it = st.pairs.begin();
            auto [deg, i, j] = *it;
            st.pairs.erase(it);
            if (maxDegree && deg > *maxDegree) {
                if (complete) *complete = false;
                continue;
            }
            st.treated.insert({i, j});
            if (st.lm[i].coprime(st.lm[j])) continue;
            if (st.chain_criterion(i, j)) continue;
            Polynomial s = s_polynomial(st.g[i], st.g[j], order);
            Polynomial r = reduce_full(std::move(s), st.g, st.lm, order);
            if (!r.is_zero()) st.add_element(make_monic(r, order));
        }
        bool clean = true;
        for (std::size_t i = 0; i < st.g.size() && clean; ++i) {
            for (std::size_t j = i + 1; j < st.g.size() && clean; ++j) {
                if (st.lm[i].coprime(st.lm[j])) continue;
                unsigned deg = st.lcm_degree(i, j);
                if (maxDegree && deg > *maxDegree) continue;
                Polynomial s = s_polynomial(st.g[i], st.g[j], order);
                Polynomial r = reduce_full(std::move(s), st.g, st.lm, order);
                if (!r.is_zero()) {
                    st.add_element(make_monic(r, order));
                    clean = false;
                }
            }
        }
        if (clean) break;
    }

    // Inter-reduce to the unique reduced basis.
    std::vector<Polynomial> basis = st.g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<Monomial> olms;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (j == i) continue;
                others.push_back(basis[j]);
                olms.push_back(leading_monomial(basis[j], order));
            }
            Polynomial r = reduce_full(basis[i], others, olms, order);
            if (r.is_zero()) {
                basis.erase(basis.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            r = make_monic(r, order);
            if (!(r == basis[i])) {
                basis[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(leading_monomial(a, order), leading_monomial(b, order));
    });
    return GroebnerBasis{order, std::move(basis)};
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
    const Monomial& lf = leading_monomial(f, order);
    const Monomial& lg = leading_monomial(g, order);
    const Monomial l = Monomial::lcm(lf, lg);
    Polynomial a = Polynomial::term(f.genset(), l.divide_by(lf),
                                    Rational(Rational(1) / f.terms().at(lf)));
    Polynomial b = Polynomial::term(g.genset(), l.divide_by(lg),
                                    Rational(Rational(1) / g.terms().at(lg)));
    return a * f - b * g;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order) {
    return run_buchberger(generators, order, std::nullopt, nullptr);
}

GroebnerBasis buchberger_bounded(const std::vector<Polynomial>& generators,
                                 const MonomialOrder& order,
                                 unsigned maxDegree, bool* complete) {
    return run_buchberger(generators, order, maxDegree, complete);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    std::vector<Monomial> lms;
    lms.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lms.push_back(leading_monomial(g, gb.order));
    return reduce_full(p, gb.elements, lms, gb.order);
}

bool spoly_criterion_holds(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
            Polynomial s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
            if (!normal_form(s, gb).is_zero()) return false;
        }
    return true;
}

QuotientRing::QuotientRing(RingPresentation pres, MonomialOrder order)
    : pres_(std::move(pres)), gb_(buchberger(pres_.relations, order)) {
    validate(pres_);
}

QuotientRing QuotientRing::build(RingPresentation pres) {
    MonomialOrder order = MonomialOrder::grevlex(pres.gens);
    return QuotientRing(std::move(pres), std::move(order));
}

Polynomial QuotientRing::normal_form(const Polynomial& p) const {
    return smw::normal_form(p, gb_);
}

bool QuotientRing::is_zero(const Polynomial& p) const {
    return normal_form(p).is_zero();
}

namespace {

void enumerate_standard(const GeneratorSet& gs, const std::vector<Monomial>& lms,
                        std::vector<unsigned>& exps, std::size_t next, unsigned remaining,
                        std::vector<Monomial>& out) {
    if (remaining == 0) {
        Monomial m{std::vector<unsigned>(exps)};
        for (const auto& lm : lms)
            if (lm.divides(m)) return;
        out.push_back(std::move(m));
        return;
    }
    if (next >= gs.size()) return;
    unsigned w = gs[next].degree;
    unsigned maxe = (w == 0) ? 0 : remaining / w;
    for (unsigned e = 0; e <= maxe; ++e) {
        exps[next] = e;
        enumerate_standard(gs, lms, exps, next + 1, remaining - e * w, out);
    }
    exps[next] = 0;
}

}  // namespace

std::vector<Monomial> QuotientRing::standard_monomials(unsigned degree) const {
    std::vector<Monomial> lms;
    for (const auto& g : gb_.elements) lms.push_back(leading_monomial(g, gb_.order));
    std::vector<Monomial> out;
    std::vector<unsigned> exps(pres_.gens->size(), 0);
    enumerate_standard(*pres_.gens, lms, exps, 0, degree, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return gb_.order.greater(a, b); });
    return out;
}

std::vector<unsigned long> QuotientRing::hilbert(unsigned maxDegree) const {
    std::vector<unsigned long> dims(maxDegree + 1, 0);
    for (unsigned d = 0; d <= maxDegree; ++d)
        dims[d] = standard_monomials(d).size();
    return dims;
}

std::vector<unsigned long> hilbert_function(const QuotientRing& q, unsigned maxDegree) {
    return q.hilbert(maxDegree);
}

ZeroWitness is_zero_in_quotient(const Polynomial& p, const QuotientRing& q) {
    Polynomial nf = q.normal_form(p);
    bool zero = nf.is_zero();
    return ZeroWitness{zero, std::move(nf)};
}

KernelResult ring_map_kernel(const RingPresentation& source,
                             const QuotientRing& target,
                             const std::map<std::string, Polynomial>& images,
                             std::optional<unsigned> degreeBound) {
    const GeneratorSet& sgs = *source.gens;
    const GeneratorSet& tgs = *target.genset();

    // Combined ring: target generators first (the eliminated block), then
    // the source generators.
    std::vector<Generator> combined;
    for (std::size_t i = 0; i < tgs.size(); ++i) combined.push_back(tgs[i]);
    for (std::size_t i = 0; i < sgs.size(); ++i) {
        if (tgs.index_of(sgs[i].name))
            throw Error("ring_map_kernel: generator name collision: " + sgs[i].name);
        combined.push_back(sgs[i]);
    }
    GenSetPtr cgs = make_genset(std::move(combined));
    const std::size_t toff = 0, soff = tgs.size();

    auto lift_target = [&](const Polynomial& p) {
        Polynomial r(cgs);
        for (const auto& [m, c] : p.terms()) {
            std::vector<unsigned> e(cgs->size(), 0);
            for (std::size_t i = 0; i < tgs.size(); ++i) e[toff + i] = m.exp(i);
            r.add_term(Monomial(std::move(e)), c);
        }
        return r;
    };

    std::vector<Polynomial> ideal;
    for (const auto& r : target.presentation().relations) ideal.push_back(lift_target(r));

    for (std::size_t j = 0; j < sgs.size(); ++j) {
        auto it = images.find(sgs[j].name);
        if (it == images.end())
            throw Error("ring_map_kernel: no image for generator " + sgs[j].name);
        const Polynomial& img = it->second;
        img.require_same_genset(Polynomial::zero(target.genset()));
        if (!img.is_zero()) {
            auto d = img.homogeneous_degree();
            if (!d || *d != sgs[j].degree)
                throw Error("ring_map_kernel: image of " + sgs[j].name +
                            " is not homogeneous of the generator's degree");
        }
        Polynomial graph = Polynomial::generator(cgs, soff + j) - lift_target(img);
        ideal.push_back(std::move(graph));
    }

    MonomialOrder order = MonomialOrder::elimination(cgs, tgs.size());
    bool complete = true;
    GroebnerBasis gb = degreeBound
                           ? buchberger_bounded(ideal, order, *degreeBound, &complete)
                           : buchberger(ideal, order);

    KernelResult out;
    out.complete = complete;
    out.degree_bound = degreeBound;
    for (const auto& g : gb.elements) {
        bool source_only = true;
        for (const auto& [m, c] : g.terms()) {
            (void)c;
            for (std::size_t i = 0; i < tgs.size() && source_only; ++i)
                if (m.exp(toff + i) > 0) source_only = false;
            if (!source_only) break;
        }
        if (!source_only) continue;
        Polynomial p(source.gens);
        for (const auto& [m, c] : g.terms()) {
            std::vector<unsigned> e(sgs.size(), 0);
            for (std::size_t i = 0; i < sgs.size(); ++i) e[i] = m.exp(soff + i);
            p.add_term(Monomial(std::move(e)), c);
        }
        out.generators.push_back(std::move(p));
    }
    return out;
}

}  // namespace smw
