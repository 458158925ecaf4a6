#include "doctest.h"

#include "smw/groebner.hpp"
#include "smw/presentations.hpp"
#include "smw/text.hpp"

#include <algorithm>
#include <map>
#include <vector>

using namespace smw;

namespace {

std::vector<std::size_t> hseries(const RingPresentation& p, unsigned maxDegree) {
    QuotientRing q = QuotientRing::build(p);
    return hilbert_function(q, maxDegree);
}

/// Coefficientwise product of two truncated series.
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                               unsigned maxDegree) {
    std::vector<std::size_t> out(maxDegree + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (i + j <= maxDegree) out[i + j] += a[i] * b[j];
    return out;
}

Polynomial gen(const RingPresentation& p, const std::string& name) {
    return Polynomial::generator(p.gens, name);
}

}  // namespace

TEST_CASE("projective space has the all-ones dimension table") {
    for (unsigned n = 1; n <= 5; ++n) {
        RingPresentation p = projective_space(n);
        std::vector<std::size_t> expected(n + 1, 1);
        expected.push_back(0);  // one past the top degree
        CHECK(hseries(p, n + 1) == expected);
    }
    CHECK_THROWS_AS(projective_space(0), Error);
}

TEST_CASE("lines in projective space have the expected dimension tables") {
    CHECK(hseries(grassmannian_lines(3), 5) == std::vector<std::size_t>{1, 1, 2, 1, 1, 0});
    // n = 1: a single line, so the parameter space is a point.
    CHECK(hseries(grassmannian_lines(1), 2) == std::vector<std::size_t>{1, 0, 0});
    CHECK(hseries(grassmannian_lines(2), 3) == std::vector<std::size_t>{1, 1, 1, 0});
}

TEST_CASE("pointed lines fiber over lines with projective-line fibers") {
    CHECK(hseries(flag_d1(2), 4) == std::vector<std::size_t>{1, 2, 2, 1, 0});
    for (unsigned n = 1; n <= 4; ++n) {
        auto flag = hseries(flag_d1(n), 2 * n);
        auto base = hseries(grassmannian_lines(n), 2 * n);
        CHECK(flag == convolve(base, {1, 1}, 2 * n));
    }
}

TEST_CASE("pointed lines carry the derived point and map classes") {
    RingPresentation p = flag_d1(3);
    QuotientRing q = QuotientRing::build(p);
    Polynomial H = p.derived_class("H");
    // The point class lies on a line: H^2 = c1 H - c2 in the quotient.
    CHECK(q.is_zero(H * H - gen(p, "c1") * H + gen(p, "c2")));
    // H restricted from the ambient space: H^(n+1) dies.
    CHECK(q.is_zero(H.pow(4)));
    CHECK_FALSE(q.is_zero(H.pow(3)));
}

TEST_CASE("quadratic bundle pushforward matches the small examples") {
    RingPresentation p = flag_d1(3);
    Polynomial h = gen(p, "h");
    Polynomial c1 = gen(p, "c1");
    Polynomial c2 = gen(p, "c2");
    CHECK(pushforward_quadratic_bundle(h * h, "h", "c1", "c2") == c1);
    CHECK(pushforward_quadratic_bundle(h.pow(3), "h", "c1", "c2") == c1 * c1 - c2);
    CHECK(pushforward_quadratic_bundle(c2, "h", "c1", "c2") == Polynomial::zero(p.gens));
    CHECK(pushforward_quadratic_bundle(h, "h", "c1", "c2") ==
          Polynomial::constant(p.gens, 1));
    CHECK(pushforward_quadratic_bundle(Polynomial::zero(p.gens), "h", "c1", "c2") ==
          Polynomial::zero(p.gens));
    // Degree bookkeeping is enforced.
    CHECK_THROWS_AS(pushforward_quadratic_bundle(h, "h", "c2", "c1"), Error);
    CHECK_THROWS_AS(pushforward_quadratic_bundle(h, "nope", "c1", "c2"), Error);
}

TEST_CASE("derived cubic kappa class is the fiberwise cube pushforward") {
    RingPresentation p = flag_d1(4);
    Polynomial h = gen(p, "h");
    CHECK(p.derived_class("kH3") == pushforward_quadratic_bundle(h.pow(3), "h", "c1", "c2"));
    CHECK(p.derived_class("kH2") == pushforward_quadratic_bundle(h.pow(2), "h", "c1", "c2"));
}

TEST_CASE("degree-one kappa divisor relation vanishes in the pointed-line model") {
    Polynomial rel = kappa_divisor_relation(1);
    RingPresentation p = flag_d1(3);
    std::map<std::string, Polynomial> images = {
        {"psi", p.derived_class("psi")},
        {"H", p.derived_class("H")},
        {"kH2", p.derived_class("kH2")},
    };
    // psi + 2H - kH2 cancels identically, before any relation is used.
    CHECK(substitute(rel, images).is_zero());
}

TEST_CASE("degree-one universal quadratic relation dies in every pointed-line model") {
    Polynomial R = lemma31_R(1);
    for (unsigned n = 1; n <= 5; ++n) {
        RingPresentation p = flag_d1(n);
        QuotientRing q = QuotientRing::build(p);
        std::map<std::string, Polynomial> images = {
            {"psi", p.derived_class("psi")},
            {"kH2", p.derived_class("kH2")},
            {"kH3", p.derived_class("kH3")},
        };
        Polynomial image = substitute(R, images);
        CHECK_FALSE(image.is_zero());  // nonzero as a polynomial ...
        CHECK(q.is_zero(image));       // ... zero in the quotient
    }
}

TEST_CASE("degree-two conic model: generator and relation layout") {
    RingPresentation p = m01_pn_d2(1);
    REQUIRE(p.gens->size() == 4);
    // Declaration order fixes the monomial-order priority.
    CHECK((*p.gens)[0].name == "D2");
    CHECK((*p.gens)[1].name == "D1");
    CHECK((*p.gens)[2].name == "H");
    CHECK((*p.gens)[3].name == "psi");
    CHECK(p.relations.size() == 7);
    for (const auto& r : p.relations) CHECK(r.is_homogeneous());
    CHECK_THROWS_AS(m01_pn_d2(0), Error);
}

TEST_CASE("degree-two conic model: difference quotient of the evaluation class") {
    auto gs = make_genset({{"H", 1}, {"psi", 1}, {"s", 1}});
    Polynomial H = Polynomial::generator(gs, "H");
    Polynomial psi = Polynomial::generator(gs, "psi");
    Polynomial s = Polynomial::generator(gs, "s");
    CHECK(m01_Q(1, s) == H * 2 + psi * 2 + s);
    // (b+s)^3 - b^3 = s(3b^2 + 3bs + s^2)
    Polynomial b = H + psi;
    CHECK(m01_Q(2, s) == b * b * 3 + b * s * 3 + s * s);
    CHECK_THROWS_AS(m01_Q(2, s * s), Error);
    CHECK_THROWS_AS(m01_Q(2, Polynomial::zero(gs)), Error);
}

TEST_CASE("degree-two conic model: derived divisor and kappa identities") {
    for (unsigned n = 1; n <= 2; ++n) {
        RingPresentation p = m01_pn_d2(n);
        Polynomial H = gen(p, "H");
        Polynomial psi = gen(p, "psi");
        Polynomial D = p.derived_class("D");
        Polynomial kH2 = p.derived_class("kH2");
        CHECK(D == gen(p, "D1") + gen(p, "D2"));
        // b = (kH2 + D)/4 and t = 2b - D hold identically, not just modulo
        // the ideal.
        CHECK(p.derived_class("b") == (kH2 + D) * rational(1, 4));
        CHECK(p.derived_class("b") == H + psi);
        CHECK(p.derived_class("t") == p.derived_class("b") * 2 - D);
    }
}

TEST_CASE("degree-two conic model: normal forms at n = 1") {
    RingPresentation p = m01_pn_d2(1);
    QuotientRing q = QuotientRing::build(p);
    Polynomial D1 = gen(p, "D1");
    Polynomial D2 = gen(p, "D2");
    Polynomial H = gen(p, "H");
    Polynomial psi = gen(p, "psi");

    CHECK(hilbert_function(q, 4) == std::vector<std::size_t>{1, 3, 3, 1, 0});

    CHECK(q.normal_form(H * H).is_zero());
    CHECK(q.normal_form(H * D1) == H * psi * 3 + psi * psi - psi * D1 * rational(1, 2));
    CHECK(q.normal_form(D1 * D1) == H * psi * 6 + psi * psi * 2 + psi * D1 * 2);
    CHECK(q.normal_form(D1 * D2) == H * psi * 6 + psi * psi * 2);
    CHECK(q.normal_form(D2 * D2) == H * psi * 14 + psi * psi * 10 - psi * D1 * 2);

    // The curve maps to a line, so both derived kappa classes vanish.
    CHECK(q.is_zero(p.derived_class("kH2")));
    CHECK(q.is_zero(p.derived_class("kH3")));
    CHECK(q.is_zero(p.derived_class("f")));
}

TEST_CASE("degree-two conic model: ideal is invariant under the label swap") {
    for (unsigned n = 1; n <= 2; ++n) {
        RingPresentation p = m01_pn_d2(n);
        QuotientRing q = QuotientRing::build(p);
        std::map<std::string, Polynomial> swap = {
            {"D1", gen(p, "D2")},
            {"D2", gen(p, "D1")},
            {"H", gen(p, "H")},
            {"psi", gen(p, "psi")},
        };
        for (const auto& r : p.relations) CHECK(q.is_zero(substitute(r, swap)));
        // The pinned odd class changes sign under the swap.
        Polynomial f = p.derived_class("f");
        CHECK(substitute(f, swap) == -f);
    }
}

TEST_CASE("degree-two conic model: the validation search pins the odd class") {
    for (unsigned n = 1; n <= 3; ++n) {
        RingPresentation p = m01_pn_d2(n);
        Polynomial D1 = gen(p, "D1");
        Polynomial D2 = gen(p, "D2");
        Polynomial psi = gen(p, "psi");
        Polynomial D = D1 + D2;
        // The surviving convention, as a polynomial identity.
        CHECK(p.derived_class("f") == (D1 - D2) * (psi * 2 - D) * rational(1, 2));
        Polynomial kH2 = p.derived_class("kH2");
        CHECK(p.derived_class("kH3") ==
              ((psi - D1).pow(2) + p.derived_class("f") - D.pow(2) * rational(3, 16) +
               kH2.pow(2) * rational(3, 16)) *
                  2);
    }
}

TEST_CASE("degree-two conic model: quadratic and quartic checks hold in the quotient") {
    for (unsigned n = 1; n <= 2; ++n) {
        RingPresentation p = m01_pn_d2(n);
        QuotientRing q = QuotientRing::build(p);
        Polynomial D1 = gen(p, "D1");
        Polynomial D2 = gen(p, "D2");
        Polynomial psi = gen(p, "psi");
        Polynomial D = p.derived_class("D");
        Polynomial kH2 = p.derived_class("kH2");
        Polynomial kH3 = p.derived_class("kH3");
        Polynomial f = p.derived_class("f");

        Polynomial side1 = (psi - D1).pow(2) + f - D.pow(2) * rational(3, 16) +
                           kH2.pow(2) * rational(3, 16) - kH3 * rational(1, 2);
        Polynomial side2 = (psi - D2).pow(2) - f - D.pow(2) * rational(3, 16) +
                           kH2.pow(2) * rational(3, 16) - kH3 * rational(1, 2);
        CHECK(q.is_zero(side1));
        CHECK(q.is_zero(side2));
        Polynomial quartic = f * f + D.pow(4) * rational(1, 16) +
                             kH2.pow(2) * D.pow(2) * rational(3, 16) - kH3 * D.pow(2) * rational(1, 2);
        CHECK(q.is_zero(quartic));
    }
}

TEST_CASE("presentation bundles reject malformed data") {
    RelationBundle b;
    b.gens = make_genset({{"x", 1}});
    b.relationNames = {"only-name"};
    CHECK_THROWS_AS(validate(b), Error);  // name without polynomial
    b.relations.push_back(Polynomial::generator(b.gens, "x") +
                          Polynomial::generator(b.gens, "x", 2));
    CHECK_THROWS_AS(validate(b), Error);  // inhomogeneous relation
    b.relations[0] = Polynomial::generator(b.gens, "x");
    CHECK_NOTHROW(validate(b));
}

TEST_CASE("atom subset helpers enumerate and complement correctly") {
    auto subs = proper_subsets(3);
    REQUIRE(subs.size() == 6);
    CHECK(subs.front() == AtomSet{1});
    CHECK(subs.back() == AtomSet{2, 3});
    // Size-major ordering, lexicographic within one size.
    CHECK(subs[1] == AtomSet{2});
    CHECK(subs[2] == AtomSet{3});
    CHECK(subs[3] == AtomSet{1, 2});
    CHECK(atom_complement({1, 3}, 4) == AtomSet{2, 4});
    CHECK(atom_set_text({1, 3}) == "{1,3}");
}
