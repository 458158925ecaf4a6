#include "smw/presentations.hpp"

#include "smw/error.hpp"
#include "smw/groebner.hpp"
#include "smw/text.hpp"

#include <algorithm>
#include <sstream>

namespace smw {

namespace {

std::string joined(const std::set<int>& xs) {
    std::string s;
    for (int x : xs) {
        if (!s.empty()) s += ",";
        s += std::to_string(x);
    }
    return s;
}

bool subset_of(const std::set<int>& a, const std::set<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint_sets(const std::set<int>& a, const std::set<int>& b) {
    for (int x : a)
        if (b.count(x)) return false;
    return true;
}

/// (size, elements) ordering used for all atom-set generator lists.
bool atom_set_less(const AtomSet& a, const AtomSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace

std::string atom_set_text(const AtomSet& h) { return "{" + joined(h) + "}"; }

std::vector<AtomSet> proper_subsets(unsigned d) {
    std::vector<AtomSet> out;
    for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
        AtomSet h;
        for (unsigned i = 0; i < d; ++i)
            if (mask & (1u << i)) h.insert(static_cast<int>(i + 1));
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), atom_set_less);
    return out;
}

AtomSet atom_complement(const AtomSet& h, unsigned d) {
    AtomSet out;
    for (unsigned i = 1; i <= d; ++i)
        if (!h.count(static_cast<int>(i))) out.insert(static_cast<int>(i));
    return out;
}

void validate(const RelationBundle& b) {
    require(b.gens != nullptr, "relation bundle has no generator set");
    require(b.relationNames.size() == b.relations.size(),
            "relation bundle name/polynomial arrays differ in length");
    for (std::size_t i = 0; i < b.relations.size(); ++i) {
        require(b.relations[i].genset() == b.gens,
                "relation '" + b.relationNames[i] + "' is over a foreign generator set");
        require(b.relations[i].is_homogeneous(),
                "relation '" + b.relationNames[i] + "' is not homogeneous");
    }
    for (const auto& [name, p] : b.extras) {
        require(p.genset() == b.gens, "extra '" + name + "' is over a foreign generator set");
        require(p.is_homogeneous(), "extra '" + name + "' is not homogeneous");
    }
}

RingPresentation projective_space(unsigned n) {
    require(n >= 1, "projective_space: n must be >= 1");
    auto gs = make_genset({{"H", 1}});
    Polynomial H = Polynomial::generator(gs, "H");
    RingPresentation p;
    p.gens = gs;
    p.relations = {H.pow(n + 1)};
    p.provenance = "projective_space(n=" + std::to_string(n) + ")";
    validate(p);
    return p;
}

namespace {

/// Components of the formal inverse of 1 + c1 + c2: I0 = 1, I1 = -c1,
/// Ik = -c1*I(k-1) - c2*I(k-2).
std::vector<Polynomial> inverse_chern_components(GenSetPtr gs, const std::string& c1name,
                                                 const std::string& c2name, unsigned top) {
    Polynomial c1 = Polynomial::generator(gs, c1name);
    Polynomial c2 = Polynomial::generator(gs, c2name);
    std::vector<Polynomial> I;
    I.push_back(Polynomial::constant(gs, 1));
    if (top >= 1) I.push_back(-c1);
    for (unsigned k = 2; k <= top; ++k) I.push_back(-(c1 * I[k - 1]) - c2 * I[k - 2]);
    return I;
}

}  // namespace

RingPresentation grassmannian_lines(unsigned n) {
    require(n >= 1, "grassmannian_lines: n must be >= 1");
    auto gs = make_genset({{"c1", 1}, {"c2", 2}});
    auto I = inverse_chern_components(gs, "c1", "c2", n + 1);
    RingPresentation p;
    p.gens = gs;
    p.relations = {I[n], I[n + 1]};
    p.provenance = "grassmannian_lines(n=" + std::to_string(n) + ")";
    validate(p);
    return p;
}

RingPresentation flag_d1(unsigned n) {
    require(n >= 1, "flag_d1: n must be >= 1");
    auto gs = make_genset({{"c1", 1}, {"c2", 2}, {"h", 1}});
    auto I = inverse_chern_components(gs, "c1", "c2", n + 1);
    Polynomial c1 = Polynomial::generator(gs, "c1");
    Polynomial c2 = Polynomial::generator(gs, "c2");
    Polynomial h = Polynomial::generator(gs, "h");
    RingPresentation p;
    p.gens = gs;
    p.relations = {I[n], I[n + 1], h * h - c1 * h + c2};
    p.derived = {{"H", h},
                 {"psi", c1 - h * 2},
                 {"kH2", c1},
                 {"kH3", c1 * c1 - c2}};
    p.provenance = "flag_d1(n=" + std::to_string(n) + ")";
    validate(p);
    return p;
}

Polynomial pushforward_quadratic_bundle(const Polynomial& p, const std::string& fiber,
                                        const std::string& c1, const std::string& c2) {
    auto gs = p.genset();
    auto fx = gs->index_of(fiber);
    auto ax = gs->index_of(c1);
    auto bx = gs->index_of(c2);
    require(fx && ax && bx, "pushforward_quadratic_bundle: generator set lacks " + fiber + "/" +
                                c1 + "/" + c2);
    require((*gs)[*fx].degree == 1 && (*gs)[*ax].degree == 1 && (*gs)[*bx].degree == 2,
            "pushforward_quadratic_bundle: expected degrees 1, 1, 2 for fiber, " + c1 + ", " + c2);

    // Slice p by fiber exponent, with the fiber factor removed.
    std::map<unsigned, Polynomial> slices;
    for (const auto& [m, coef] : p.terms()) {
        unsigned e = m.exp(*fx);
        Monomial base = m;
        base = base.divide_by(Monomial::var(gs->size(), *fx, e));
        auto [it, inserted] = slices.try_emplace(e, Polynomial::zero(gs));
        it->second.add_term(base, coef);
    }
    if (slices.empty()) return Polynomial::zero(gs);

    // fiber^e reduced to fiber-degree <= 1: r0 = 1, r1 = fiber,
    // r_e = c1*r_{e-1} - c2*r_{e-2}.
    unsigned top = slices.rbegin()->first;
    Polynomial A = Polynomial::generator(gs, *ax);
    Polynomial B = Polynomial::generator(gs, *bx);
    std::vector<Polynomial> r;
    r.push_back(Polynomial::constant(gs, 1));
    if (top >= 1) r.push_back(Polynomial::generator(gs, *fx));
    for (unsigned e = 2; e <= top; ++e) r.push_back(A * r[e - 1] - B * r[e - 2]);

    Polynomial reduced = Polynomial::zero(gs);
    for (const auto& [e, q] : slices) reduced += q * r[e];

    // Integrate: keep the fiber^1 part, drop the fiber factor.
    Polynomial out = Polynomial::zero(gs);
    for (const auto& [m, coef] : reduced.terms()) {
        if (m.exp(*fx) != 1) continue;
        Monomial base = m.divide_by(Monomial::var(gs->size(), *fx, 1));
        out.add_term(base, coef);
    }
    return out;
}

Polynomial m01_Q(unsigned n, const Polynomial& s) {
    auto gs = s.genset();
    require(gs->index_of("H").has_value() && gs->index_of("psi").has_value(),
            "m01_Q: generator set must contain H and psi");
    require(!s.is_zero() && s.is_homogeneous() && s.homogeneous_degree() == 1,
            "m01_Q: argument must be nonzero homogeneous of degree 1");
    Polynomial b = Polynomial::generator(gs, "H") + Polynomial::generator(gs, "psi");
    return exact_divide((b + s).pow(n + 1) - b.pow(n + 1), s);
}

namespace {

struct M01Candidate {
    std::string label;
    Polynomial f;
};

}  // namespace

RingPresentation m01_pn_d2(unsigned n) {
    require(n >= 1, "m01_pn_d2: n must be >= 1");
    auto gs = make_genset({{"D2", 1}, {"D1", 1}, {"H", 1}, {"psi", 1}});
    Polynomial D1 = Polynomial::generator(gs, "D1");
    Polynomial D2 = Polynomial::generator(gs, "D2");
    Polynomial H = Polynomial::generator(gs, "H");
    Polynomial psi = Polynomial::generator(gs, "psi");
    Polynomial b = H + psi;
    Polynomial D = D1 + D2;

    auto Q = [&](const Polynomial& s) { return m01_Q(n, s); };

    RingPresentation p;
    p.gens = gs;
    p.relations = {
        H.pow(n + 1),
        D1 * D2 * psi,
        D1 * b.pow(n + 1),
        D2 * b.pow(n + 1),
        D1 * Q(psi - D1),
        D2 * Q(psi - D2),
        (Q(psi - D1) - Q(psi)) + (Q(psi - D2) - Q(psi)) +
            exact_divide((H + psi * 2).pow(n + 1) - H.pow(n + 1), psi),
    };
    p.provenance = "m01_pn_d2(n=" + std::to_string(n) + ")";

    Polynomial kH2 = psi * 4 + H * 4 - D;
    p.derived = {{"D", D}, {"kH2", kH2}, {"b", b}, {"t", (kH2 - D) * rational(1, 2)}};

    // Pin the degree-2 classes f and kH3 by a finite validation search.
    // Each candidate f defines kH3 through the first quadratic identity;
    // it passes iff the partner identity, the quartic identity, and the
    // instantiated two-sided square relation all reduce to zero.
    QuotientRing quo(p, MonomialOrder::grevlex(gs));
    Polynomial F = (D1 - D2) * (psi * 2 - D) * rational(1, 2);
    std::vector<M01Candidate> candidates = {
        {"+(1/2)(D1-D2)(2psi-2D1-D)", (D1 - D2) * (psi * 2 - D1 * 2 - D) * rational(1, 2)},
        {"-(1/2)(D1-D2)(2psi-2D1-D)", (D1 - D2) * (psi * 2 - D1 * 2 - D) * rational(-1, 2)},
        {"+(1/2)(D1-D2)(2psi-2D2-D)", (D1 - D2) * (psi * 2 - D2 * 2 - D) * rational(1, 2)},
        {"-(1/2)(D1-D2)(2psi-2D2-D)", (D1 - D2) * (psi * 2 - D2 * 2 - D) * rational(-1, 2)},
        {"+(1/2)(D1-D2)(2psi-D)", F},
        {"-(1/2)(D1-D2)(2psi-D)", -F},
    };

    auto kH3_for = [&](const Polynomial& f) {
        return ((psi - D1).pow(2) + f - D.pow(2) * rational(3, 16) + kH2.pow(2) * rational(3, 16)) * 2;
    };
    auto passes = [&](const Polynomial& f) {
        Polynomial kH3 = kH3_for(f);
        Polynomial partner = (psi - D2).pow(2) - D.pow(2) * rational(3, 16) +
                             kH2.pow(2) * rational(3, 16) - kH3 * rational(1, 2) - f;
        if (!quo.is_zero(partner)) return false;
        Polynomial quartic = f * f + D.pow(4) * rational(1, 16) + kH2.pow(2) * D.pow(2) * rational(3, 16) -
                             kH3 * D.pow(2) * rational(1, 2);
        if (!quo.is_zero(quartic)) return false;
        // Two-sided square relation instantiated at the singleton side {1}:
        // F{1} stands for -(1/2)D^2 + f after the self-intersection rewrite.
        Polynomial F1 = D.pow(2) * rational(-1, 2) + f;
        Polynomial rel2 = D1 * D1 - D1 * (D - (psi - D1)) -
                          (D * (psi - D1) + F1) * rational(1, 2);
        return quo.is_zero(rel2);
    };

    std::vector<std::size_t> passing;
    std::vector<Polynomial> passingNF;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!passes(candidates[i].f)) continue;
        passing.push_back(i);
        passingNF.push_back(quo.normal_form(candidates[i].f));
    }
    if (passing.empty())
        throw ConventionError("m01_pn_d2(n=" + std::to_string(n) +
                              "): no candidate for f passes the validation identities");
    for (std::size_t j = 1; j < passingNF.size(); ++j) {
        if (!(passingNF[j] == passingNF[0]))
            throw ConventionError("m01_pn_d2(n=" + std::to_string(n) +
                                  "): candidates " + candidates[passing[0]].label + " and " +
                                  candidates[passing[j]].label +
                                  " both pass but differ in the quotient");
    }
    const Polynomial& f = candidates[passing[0]].f;
    p.derived.emplace("f", f);
    p.derived.emplace("kH3", kH3_for(f));
    validate(p);
    return p;
}

namespace {

std::vector<AtomSet> checked_label_set(unsigned d, const std::vector<AtomSet>& labelSet,
                                       const std::string& op) {
    auto expected = proper_subsets(d);
    auto sorted = labelSet;
    std::sort(sorted.begin(), sorted.end(), atom_set_less);
    require(sorted == expected,
            op + ": label set must be exactly the proper nonempty subsets of {1.." +
                std::to_string(d) + "}");
    return expected;
}

Rational n_psi(unsigned size, unsigned d) {
    // (s^2/d^2) * (6 - 4 s/d)
    Rational s(size), dd(d);
    return (s * s) / (dd * dd) * (Rational(6) - Rational(4) * s / dd);
}

Rational n_nested(unsigned inner, unsigned outer, unsigned d) {
    // (s^2/d^2) * (6 o/d - 2 s/d - 3 o^2/d^2) for the pair s = |h| <= o = |h'|
    Rational s(inner), o(outer), dd(d);
    return (s * s) / (dd * dd) *
           (Rational(6) * o / dd - Rational(2) * s / dd - Rational(3) * o * o / (dd * dd));
}

Rational n_disjoint(unsigned s1, unsigned s2, unsigned d) {
    Rational a(s1), b(s2), dd(d);
    return Rational(-3) * a * a * b * b / (dd * dd * dd * dd);
}

}  // namespace

Polynomial lemma31_R(unsigned d) { return lemma31_R(d, proper_subsets(d)); }

Polynomial lemma31_R(unsigned d, const std::vector<AtomSet>& labelSet) {
    require(d >= 1, "lemma31_R: d must be >= 1");
    auto labels = checked_label_set(d, labelSet, "lemma31_R");

    std::vector<Generator> gens;
    gens.push_back({"psi", 1});
    for (const auto& h : labels) gens.push_back({"D" + atom_set_text(h), 1});
    gens.push_back({"kH2", 1});
    gens.push_back({"kH3", 2});
    auto gs = make_genset(gens);

    Polynomial psi = Polynomial::generator(gs, "psi");
    Polynomial kH2 = Polynomial::generator(gs, "kH2");
    Polynomial kH3 = Polynomial::generator(gs, "kH3");
    auto Dh = [&](const AtomSet& h) { return Polynomial::generator(gs, "D" + atom_set_text(h)); };

    long long d4 = 1;
    for (int i = 0; i < 4; ++i) d4 *= d;
    Polynomial R = psi * psi + kH2.pow(2) * rational(3, d4) - kH3 * rational(4, d4 / d);
    for (const auto& h : labels)
        R -= psi * Dh(h) * n_psi(static_cast<unsigned>(h.size()), d);
    // Ordered pairs (h, h') with h' containing h (each nested pair once,
    // including the diagonal) or h' disjoint from h (each disjoint pair in
    // both orders).
    for (const auto& h : labels) {
        for (const auto& hp : labels) {
            if (subset_of(h, hp))
                R += Dh(h) * Dh(hp) *
                     n_nested(static_cast<unsigned>(h.size()), static_cast<unsigned>(hp.size()), d);
            else if (disjoint_sets(h, hp))
                R += Dh(h) * Dh(hp) *
                     n_disjoint(static_cast<unsigned>(h.size()), static_cast<unsigned>(hp.size()),
                                d);
        }
    }
    return R;
}

Polynomial kappa_divisor_relation(unsigned d) {
    return kappa_divisor_relation(d, proper_subsets(d));
}

Polynomial kappa_divisor_relation(unsigned d, const std::vector<AtomSet>& labelSet) {
    require(d >= 1, "kappa_divisor_relation: d must be >= 1");
    auto labels = checked_label_set(d, labelSet, "kappa_divisor_relation");

    std::vector<Generator> gens = {{"psi", 1}, {"H", 1}, {"kH2", 1}};
    for (const auto& h : labels) gens.push_back({"D" + atom_set_text(h), 1});
    auto gs = make_genset(gens);

    Polynomial rel = Polynomial::generator(gs, "psi") +
                     Polynomial::generator(gs, "H") * rational(2, d) -
                     Polynomial::generator(gs, "kH2") * rational(1, static_cast<long long>(d) * d);
    for (const auto& h : labels) {
        long long s = static_cast<long long>(h.size());
        rel -= Polynomial::generator(gs, "D" + atom_set_text(h)) *
               rational(s * s, static_cast<long long>(d) * d);
    }
    return rel;
}

RewriteRule node_square_rule(unsigned d, const AtomSet& h) {
    require(d >= 2, "node_square_rule: d must be >= 2");
    require(!h.empty(), "node_square_rule: label must be nonempty");
    for (int x : h)
        require(x >= 1 && static_cast<unsigned>(x) <= d, "node_square_rule: atom out of range");
    require(h.size() < d, "node_square_rule: label must be a proper subset");

    AtomSet canon = h.count(1) ? h : atom_complement(h, d);
    AtomSet other = atom_complement(canon, d);
    auto gs = make_genset({{"D" + atom_set_text(canon), 1},
                           {"psi" + atom_set_text(canon), 2},
                           {"psi" + atom_set_text(other), 2}});
    return RewriteRule{Polynomial::generator(gs, 0).pow(2),
                       -(Polynomial::generator(gs, 1) + Polynomial::generator(gs, 2))};
}

std::vector<AtomSet> default_I(unsigned d) {
    std::vector<AtomSet> I;
    for (const auto& h : proper_subsets(d)) {
        if (2 * h.size() > d || (2 * h.size() == d && h.count(1))) I.push_back(h);
    }
    return I;
}

RingPresentation flag_fiber_square(unsigned n) {
    require(n >= 1, "flag_fiber_square: n must be >= 1");
    auto gs = make_genset({{"c1", 1}, {"c2", 2}, {"c1p", 1}, {"c2p", 2}, {"h", 1}});
    auto I = inverse_chern_components(gs, "c1", "c2", n + 1);
    auto Ip = inverse_chern_components(gs, "c1p", "c2p", n + 1);
    Polynomial c1 = Polynomial::generator(gs, "c1");
    Polynomial c2 = Polynomial::generator(gs, "c2");
    Polynomial c1p = Polynomial::generator(gs, "c1p");
    Polynomial c2p = Polynomial::generator(gs, "c2p");
    Polynomial h = Polynomial::generator(gs, "h");
    RingPresentation p;
    p.gens = gs;
    p.relations = {I[n],  I[n + 1],      Ip[n],
                   Ip[n + 1], h * h - c1 * h + c2, h * h - c1p * h + c2p};
    p.provenance = "flag_fiber_square(n=" + std::to_string(n) + ")";
    validate(p);
    return p;
}

namespace {

void check_side_choice(unsigned d, const std::vector<AtomSet>& I) {
    std::set<AtomSet> seen;
    for (const auto& h : I) {
        require(!h.empty() && h.size() < d, "thm33_relations: side choice contains a non-proper label");
        for (int x : h)
            require(x >= 1 && static_cast<unsigned>(x) <= d,
                    "thm33_relations: side choice atom out of range");
        require(seen.insert(h).second, "thm33_relations: duplicate label in side choice");
    }
    for (const auto& h : proper_subsets(d)) {
        bool inI = seen.count(h) != 0;
        bool inIbar = seen.count(atom_complement(h, d)) != 0;
        if (2 * h.size() > d) {
            require(inI, "thm33_relations: side choice must contain every label with |h| > d/2");
        } else if (2 * h.size() == d) {
            require(inI != inIbar,
                    "thm33_relations: side choice must contain exactly one side of each "
                    "half-degree partition");
        } else {
            require(!inI, "thm33_relations: side choice may not contain labels with |h| < d/2");
        }
    }
}

/// Rebuilds a polynomial over another generator set via a name-indexed
/// image table (every source generator must have an image).
Polynomial remap(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                 GenSetPtr targetGens) {
    Polynomial out = Polynomial::zero(targetGens);
    const auto& gs = *p.genset();
    for (const auto& [m, coef] : p.terms()) {
        Polynomial term = Polynomial::constant(targetGens, coef);
        for (std::size_t i = 0; i < gs.size(); ++i) {
            unsigned e = m.exp(i);
            if (e == 0) continue;
            auto it = images.find(gs[i].name);
            require(it != images.end(), "remap: no image for generator " + gs[i].name);
            term = term * it->second.pow(e);
        }
        out += term;
    }
    return out;
}

}  // namespace

RelationBundle thm33_relations(unsigned d, unsigned n, const std::vector<AtomSet>& I) {
    require(d >= 2, "thm33_relations: d must be >= 2");
    require(n >= 1, "thm33_relations: n must be >= 1");
    check_side_choice(d, I);
    auto Isorted = I;
    std::sort(Isorted.begin(), Isorted.end(), atom_set_less);
    auto labels = proper_subsets(d);
    std::set<AtomSet> inI(Isorted.begin(), Isorted.end());

    std::vector<Generator> genList;
    genList.push_back({"psiI", 1});
    for (const auto& h : labels) genList.push_back({"D" + atom_set_text(h), 1});
    for (const auto& h : labels) genList.push_back({"F" + atom_set_text(h), 2});
    genList.push_back({"kH2", 1});
    genList.push_back({"kH3", 2});
    auto gs = make_genset(genList);

    Polynomial psiI = Polynomial::generator(gs, "psiI");
    Polynomial kH2 = Polynomial::generator(gs, "kH2");
    Polynomial kH3 = Polynomial::generator(gs, "kH3");
    auto Dh = [&](const AtomSet& h) { return Polynomial::generator(gs, "D" + atom_set_text(h)); };
    auto Fh = [&](const AtomSet& h) { return Polynomial::generator(gs, "F" + atom_set_text(h)); };
    auto DP = [&](const AtomSet& h) { return Dh(h) + Dh(atom_complement(h, d)); };

    RelationBundle b;
    b.name = "thm33_relations";
    b.gens = gs;

    long long d4 = 1;
    for (int i = 0; i < 4; ++i) d4 *= d;

    // Relation "one".
    Polynomial one = psiI * psiI + kH2.pow(2) * rational(3, d4) - kH3 * rational(4, d4 / d);
    for (const auto& h : labels) {
        if (inI.count(h)) continue;
        one -= (Fh(h) - Fh(atom_complement(h, d))) *
               (n_psi(static_cast<unsigned>(h.size()), d) * rational(1, 2));
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (!disjoint_sets(labels[i], labels[j])) continue;
            one += DP(labels[i]) * DP(labels[j]) *
                   n_disjoint(static_cast<unsigned>(labels[i].size()),
                              static_cast<unsigned>(labels[j].size()), d);
        }
    }
    b.relationNames.push_back("one");
    b.relations.push_back(one);

    // Relations "two:{h}" for h in the side choice.
    for (const auto& h : Isorted) {
        Polynomial psiIh = psiI;
        Polynomial DIbar = Polynomial::zero(gs);
        for (const auto& hp : Isorted) {
            if (hp != h && subset_of(hp, h)) {
                psiIh += Dh(hp);
                DIbar += Dh(atom_complement(hp, d));
            }
        }
        Polynomial two = Dh(h) * Dh(h) - Dh(h) * (DP(h) - psiIh) -
                         (DP(h) * (psiIh - DIbar) + Fh(h)) * rational(1, 2);
        b.relationNames.push_back("two:" + atom_set_text(h));
        b.relations.push_back(two);
    }

    // Relations "three:{h}:j": computed at d=2 via the kernel of the
    // restriction to the two-sided boundary ring; placeholders otherwise.
    if (d == 2) {
        RingPresentation source;
        source.gens = make_genset({{"kH2", 1}, {"kH3", 2}, {"DP", 1}, {"psiI", 1}});
        source.provenance = "thm33_relations: restriction source";
        QuotientRing target = QuotientRing::build(flag_fiber_square(n));
        auto tg = target.genset();
        Polynomial c1 = Polynomial::generator(tg, "c1");
        Polynomial c2 = Polynomial::generator(tg, "c2");
        Polynomial c1p = Polynomial::generator(tg, "c1p");
        Polynomial c2p = Polynomial::generator(tg, "c2p");
        Polynomial hcl = Polynomial::generator(tg, "h");
        std::map<std::string, Polynomial> images = {
            {"kH2", c1 + c1p},
            {"kH3", c1 * c1 - c2 + c1p * c1p - c2p},
            {"DP", hcl * 4 - c1 - c1p},
            {"psiI", c1 - hcl * 2},
        };
        const unsigned kernelBound = 3;
        KernelResult ker = ring_map_kernel(source, target, images, kernelBound);
        for (const auto& h : Isorted) {
            std::map<std::string, Polynomial> intoBundle = {
                {"kH2", kH2},
                {"kH3", kH3},
                {"DP", DP(h)},
                {"psiI", psiI},
            };
            unsigned idx = 1;
            for (const auto& k : ker.generators) {
                b.relationNames.push_back("three:" + atom_set_text(h) + ":" +
                                          std::to_string(idx++));
                b.relations.push_back(Dh(h) * remap(k, intoBundle, gs));
            }
            if (!ker.complete)
                b.placeholders.push_back("three:" + atom_set_text(h) +
                                         ": kernel generators above degree " +
                                         std::to_string(kernelBound) + " not computed");
        }
        b.notes["restriction_images"] =
            "psiI -> c1 - 2h, DP -> 4h - c1 - c1p, kH2 -> c1 + c1p, "
            "kH3 -> (c1^2 - c2) + (c1p^2 - c2p) into the two-factor flag ring";
    } else {
        for (const auto& h : Isorted)
            b.placeholders.push_back("three:" + atom_set_text(h) + ": D" + atom_set_text(h) +
                                     " * ker(restriction to the two-sided boundary ring) — "
                                     "not computed for d > 2");
    }

    // Side-change witnesses and conventions.
    Polynomial psiPrime = psiI;
    for (const auto& h : Isorted)
        if (2 * h.size() == d) psiPrime += Dh(h);
    for (const auto& h : labels) {
        AtomSet hb = atom_complement(h, d);
        b.extras.emplace("fdiff:" + atom_set_text(h),
                         Fh(h) - Fh(hb) - (Dh(h) - Dh(hb)) * (psiPrime * 2 - DP(h)));
    }

    b.notes["partition_classes"] =
        "two-sided classes are written inline as D{h} + D{hbar}; no separate generator";
    b.notes["disjoint_pairs"] =
        "relation one sums each unordered disjoint pair once; complementary pairs "
        "contribute the square of the two-sided class";
    b.notes["side_change"] =
        "swapping one half-degree label h0 for its complement changes relation one by "
        "exactly the fdiff:{h0} witness, modulo products of crossing divisor classes";
    std::string itext;
    for (const auto& h : Isorted) itext += (itext.empty() ? "" : ",") + atom_set_text(h);
    b.provenance = "thm33_relations(d=" + std::to_string(d) + ",n=" + std::to_string(n) +
                   ",I={" + itext + "})";
    validate(b);
    return b;
}

bool label_less(const MixedLabel& a, const MixedLabel& b) {
    std::size_t sa = a.degreeAtoms.size() + a.marks.size();
    std::size_t sb = b.degreeAtoms.size() + b.marks.size();
    if (sa != sb) return sa < sb;
    if (a.degreeAtoms != b.degreeAtoms) return a.degreeAtoms < b.degreeAtoms;
    return a.marks < b.marks;
}

std::string divisor_name(const std::string& prefix, const MixedLabel& h) {
    std::string inner = joined(h.degreeAtoms);
    if (!h.marks.empty()) inner += ";" + joined(h.marks);
    return prefix + "{" + inner + "}";
}

MixedLabel divisor_label(const std::string& name, const std::string& prefix) {
    require(name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
                name[prefix.size()] == '{' && name.back() == '}',
            "divisor_label: '" + name + "' does not match " + prefix + "{...}");
    std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    auto semi = inner.find(';');
    auto parse_ints = [](const std::string& s) {
        std::set<int> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) out.insert(std::stoi(tok));
        }
        return out;
    };
    MixedLabel h;
    if (semi == std::string::npos) {
        h.degreeAtoms = parse_ints(inner);
    } else {
        h.degreeAtoms = parse_ints(inner.substr(0, semi));
        h.marks = parse_ints(inner.substr(semi + 1));
    }
    return h;
}

namespace {

bool mixed_subset(const MixedLabel& a, const MixedLabel& b) {
    return subset_of(a.degreeAtoms, b.degreeAtoms) && subset_of(a.marks, b.marks);
}

/// Valid bubble labels of the m-pointed degree-d space under the convention
/// that the distinguished point 1 stays on the base side: degree atoms from
/// {1..d}, marks from {2..m}; the bubble needs a nontrivial decoration and
/// the base side must stay stable.
std::vector<MixedLabel> base_divisor_labels(unsigned d, unsigned m) {
    std::vector<MixedLabel> out;
    std::vector<int> markPool;
    for (unsigned i = 2; i <= m; ++i) markPool.push_back(static_cast<int>(i));
    for (unsigned dm = 0; dm < (1u << d); ++dm) {
        AtomSet deg;
        for (unsigned i = 0; i < d; ++i)
            if (dm & (1u << i)) deg.insert(static_cast<int>(i + 1));
        for (unsigned mm = 0; mm < (1u << markPool.size()); ++mm) {
            std::set<int> marks;
            for (std::size_t i = 0; i < markPool.size(); ++i)
                if (mm & (1u << i)) marks.insert(markPool[i]);
            bool decorated = !deg.empty() || marks.size() >= 2;
            bool baseStable = (d > deg.size()) || (m >= marks.size() + 2);
            if (decorated && baseStable) out.push_back({deg, marks});
        }
    }
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

}  // namespace

RelationBundle thm_m_relations(unsigned d, unsigned m) {
    require(d >= 1, "thm_m_relations: d must be >= 1");
    require(m >= 1, "thm_m_relations: m must be >= 1");

    // Admissible bubble labels carry the extra point m+1 on top of a valid
    // base divisor label of the m-pointed space.
    auto baseLabels = base_divisor_labels(d, m);
    std::vector<MixedLabel> hs;
    for (const auto& x : baseLabels) {
        MixedLabel h = x;
        h.marks.insert(static_cast<int>(m + 1));
        hs.push_back(h);
    }

    std::vector<Generator> genList = {{"D_1m1", 1}, {"fpsi1", 1}};
    for (const auto& h : hs) genList.push_back({divisor_name("D", h), 1});
    for (const auto& x : baseLabels) genList.push_back({divisor_name("fD", x), 1});
    auto gs = make_genset(genList);

    Polynomial D1m1 = Polynomial::generator(gs, "D_1m1");
    Polynomial fpsi1 = Polynomial::generator(gs, "fpsi1");
    auto Dh = [&](const MixedLabel& h) { return Polynomial::generator(gs, divisor_name("D", h)); };
    auto fD = [&](const MixedLabel& x) {
        return Polynomial::generator(gs, divisor_name("fD", x));
    };

    RelationBundle b;
    b.name = "thm_m_relations";
    b.gens = gs;

    b.relationNames.push_back("one");
    b.relations.push_back(D1m1 * D1m1 + fpsi1 * D1m1);

    for (std::size_t i = 0; i < hs.size(); ++i) {
        Polynomial above = Polynomial::zero(gs);
        for (const auto& hp : hs)
            if (!(hp == hs[i]) && mixed_subset(hs[i], hp)) above += Dh(hp);
        Polynomial two = (Dh(hs[i]) - fD(baseLabels[i])) *
                         (Dh(hs[i]) + fpsi1 + D1m1 - above);
        b.relationNames.push_back("two:" + divisor_name("D", hs[i]));
        b.relations.push_back(two);
    }

    for (const auto& h : hs) {
        b.relationNames.push_back("three:" + divisor_name("D", h) + ":D_1m1");
        b.relations.push_back(Dh(h) * D1m1);
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            if (mixed_subset(hs[i], hs[j]) || mixed_subset(hs[j], hs[i])) continue;
            b.relationNames.push_back("three:" + divisor_name("D", hs[i]) + ":" +
                                      divisor_name("D", hs[j]));
            b.relations.push_back(Dh(hs[i]) * Dh(hs[j]));
        }
    }
    for (const auto& h : hs)
        b.placeholders.push_back("three:" + divisor_name("D", h) +
                                 ": D * ker(restriction to the contracted-bubble base ring) — "
                                 "not computed");

    b.extras.emplace("psi1", fpsi1 + D1m1);
    b.notes["section_squares"] =
        "the square of D_1m1 pushes forward to minus the base cotangent class at the "
        "distinguished point; equivalently the section pulls D_1m1 back to -psi1";
    b.provenance = "thm_m_relations(d=" + std::to_string(d) + ",m=" + std::to_string(m) + ")";
    validate(b);
    return b;
}

RelationBundle psi_sum_relations(unsigned d, unsigned m, unsigned k) {
    require(d >= 1, "psi_sum_relations: d must be >= 1");
    require(m >= 2, "psi_sum_relations: m must be >= 2");
    require(k + 1 < d + m, "psi_sum_relations: stage index k must satisfy k < d + m - 1");

    auto labels = base_divisor_labels(d, m);

    std::vector<Generator> genList;
    for (unsigned i = 1; i <= m; ++i) genList.push_back({"psi" + std::to_string(i), 1});
    for (unsigned i = 1; i <= m; ++i) genList.push_back({"psi" + std::to_string(i) + "p", 1});
    for (const auto& h : labels) genList.push_back({divisor_name("D", h), 1});
    auto gs = make_genset(genList);

    auto psi = [&](unsigned i) {
        return Polynomial::generator(gs, "psi" + std::to_string(i));
    };
    auto psip = [&](unsigned i) {
        return Polynomial::generator(gs, "psi" + std::to_string(i) + "p");
    };
    auto Dh = [&](const MixedLabel& h) { return Polynomial::generator(gs, divisor_name("D", h)); };

    RelationBundle b;
    b.name = "psi_sum_relations";
    b.gens = gs;

    // The distinguished point 1 is always on the base side, so a label
    // separates (i, j) iff it carries exactly one of the two (for i = 1:
    // iff it carries j).
    auto separates = [](const MixedLabel& h, unsigned i, unsigned j) {
        bool hasJ = h.marks.count(static_cast<int>(j)) != 0;
        if (i == 1) return hasJ;
        bool hasI = h.marks.count(static_cast<int>(i)) != 0;
        return hasI != hasJ;
    };

    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = i + 1; j <= m; ++j) {
            Polynomial rel = psi(i) + psi(j);
            for (const auto& h : labels)
                if (separates(h, i, j)) rel -= Dh(h);
            b.relationNames.push_back("pair:" + std::to_string(i) + "," + std::to_string(j));
            b.relations.push_back(rel);
        }
    }

    // Stage-k descent: only labels whose bubble stays unstable at cap k
    // survive in the sum, i.e. |degree atoms| + |marks| > k.
    for (unsigned j = 2; j <= m; ++j) {
        Polynomial rel = psip(1) + psip(j);
        for (const auto& h : labels) {
            if (!h.marks.count(static_cast<int>(j))) continue;
            if (h.degreeAtoms.size() + h.marks.size() > k) rel -= Dh(h);
        }
        b.relationNames.push_back("descent:" + std::to_string(j));
        b.relations.push_back(rel);
    }

    b.notes["weights"] =
        "stage-k caps give every degree atom and every marked point weight 1/(k+eps); "
        "a bubble with |degree atoms| + |marks| <= k is contracted and drops out";
    b.provenance = "psi_sum_relations(d=" + std::to_string(d) + ",m=" + std::to_string(m) +
                   ",k=" + std::to_string(k) + ")";
    validate(b);
    return b;
}

}  // namespace smw
