#include "smw/verify.hpp"

#include "smw/error.hpp"
#include "smw/groebner.hpp"
#include "smw/invariants.hpp"
#include "smw/order.hpp"
#include "smw/presentations.hpp"
#include "smw/strata.hpp"
#include "smw/text.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace smw {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Polynomial gen(const GenSetPtr& gs, const std::string& name) {
    return Polynomial::generator(gs, name);
}

/// Runs one check body and appends its row. The body returns an empty
/// string on success and a witness text on failure.
template <typename Body>
void add_row(VerificationReport& rep, const std::string& name, const std::string& statement,
             Body&& body) {
    Clock::time_point start = Clock::now();
    std::string witness = body();
    std::optional<std::string> w;
    if (!witness.empty()) w = witness;
    rep.add(make_check(name, statement, w, elapsed_ms(start)));
}

/// The default grid [lo, hi], overridden by a pinned value. A pin below
/// `lo` is infeasible for the family and yields the empty grid; pins above
/// `hi` extend the family to the requested size.
std::vector<unsigned> grid(const std::optional<unsigned>& pin, unsigned lo, unsigned hi) {
    if (pin) {
        if (*pin < lo) return {};
        return {*pin};
    }
    std::vector<unsigned> out;
    for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

/// True when the family's intrinsic value is compatible with the pin.
bool pin_allows(const std::optional<unsigned>& pin, unsigned intrinsic) {
    return !pin || *pin == intrinsic;
}

// ---------------------------------------------------------------------------
// Shared models (memoized per process; all suites are single-threaded).

const QuotientRing& conic_model(unsigned n) {
    static std::map<unsigned, QuotientRing> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, QuotientRing::build(m01_pn_d2(n))).first;
    return it->second;
}

const QuotientRing& pointed_line_model(unsigned n) {
    static std::map<unsigned, QuotientRing> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, QuotientRing::build(flag_d1(n))).first;
    return it->second;
}

/// Images of the abstract one-pointed degree-2 symbols in the conic model.
std::map<std::string, Polynomial> conic_images(const RingPresentation& m01) {
    Polynomial D1 = gen(m01.gens, "D1");
    Polynomial D2 = gen(m01.gens, "D2");
    Polynomial psi = gen(m01.gens, "psi");
    Polynomial D = D1 + D2;
    Polynomial f = m01.derived_class("f");
    return {
        {"psi", psi},
        {"psiI", psi - D1},
        {"D{1}", D1},
        {"D{2}", D2},
        {"F{1}", D.pow(2) * rational(-1, 2) + f},
        {"F{2}", D.pow(2) * rational(-1, 2) - f},
        {"kH2", m01.derived_class("kH2")},
        {"kH3", m01.derived_class("kH3")},
    };
}

/// Relabeling of the degree atoms by sigma, extended to divisor generators.
std::map<std::string, Polynomial> atom_permutation_images(const GenSetPtr& gs,
                                                          const std::map<int, int>& sigma) {
    std::map<std::string, Polynomial> images;
    for (std::size_t i = 0; i < gs->size(); ++i) {
        const std::string& name = (*gs)[i].name;
        if (name.rfind("D{", 0) != 0) {
            images.emplace(name, Polynomial::generator(gs, i));
            continue;
        }
        AtomSet moved;
        for (int a : divisor_label(name, "D").degreeAtoms) moved.insert(sigma.at(a));
        images.emplace(name, gen(gs, "D" + atom_set_text(moved)));
    }
    return images;
}

long long binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    long long out = 1;
    for (unsigned i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

// ---------------------------------------------------------------------------
// Independent rank-based Hilbert recomputation (dense linear algebra).

void enumerate_exponents(const GeneratorSet& gs, std::vector<unsigned>& exps, std::size_t pos,
                         unsigned remaining, std::vector<Monomial>& out) {
    if (pos + 1 == gs.size()) {
        unsigned w = gs[pos].degree;
        if (remaining % w == 0) {
            exps[pos] = remaining / w;
            out.emplace_back(exps);
        }
        return;
    }
    unsigned w = gs[pos].degree;
    for (unsigned e = 0; e * w <= remaining; ++e) {
        exps[pos] = e;
        enumerate_exponents(gs, exps, pos + 1, remaining - e * w, out);
    }
    exps[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(const GeneratorSet& gs, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(gs.size(), 0);
    enumerate_exponents(gs, exps, 0, degree, out);
    return out;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<unsigned long> rank_hilbert(const std::vector<Polynomial>& ideal,
                                        const GenSetPtr& gs, unsigned maxDegree) {
    std::vector<unsigned long> dims;
    for (unsigned degree = 0; degree <= maxDegree; ++degree) {
        std::vector<Monomial> monos = monomials_of_degree(*gs, degree);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
        std::vector<std::vector<Rational>> rows;
        for (const Polynomial& g : ideal) {
            auto gdeg = g.homogeneous_degree();
            if (!gdeg || *gdeg > degree) continue;
            for (const Monomial& m : monomials_of_degree(*gs, degree - *gdeg)) {
                Polynomial prod = Polynomial::term(gs, m, Rational(1)) * g;
                std::vector<Rational> row(monos.size(), Rational(0));
                for (const auto& [mono, c] : prod.terms()) row[index.at(mono)] = c;
                rows.push_back(std::move(row));
            }
        }
        dims.push_back(static_cast<unsigned long>(monos.size() - matrix_rank(std::move(rows))));
    }
    return dims;
}

std::string dims_text(const std::vector<unsigned long>& dims) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
    out << "]";
    return out.str();
}

// ---------------------------------------------------------------------------
// lemma31: the universal quadratic relation.

void suite_lemma31(const SuiteRequest& req, VerificationReport& rep) {
    if (pin_allows(req.d, 1)) {
        for (unsigned n : grid(req.n, 1, 5)) {
            add_row(rep, "lemma31:flag-reduction:n=" + std::to_string(n),
                    "degree-one universal quadratic relation reduces to zero in the "
                    "pointed-line ring over " +
                        std::to_string(n) + "-space",
                    [&]() -> std::string {
                        const QuotientRing& q = pointed_line_model(n);
                        const RingPresentation& p = q.presentation();
                        Polynomial image = substitute(lemma31_R(1), {
                                                                        {"psi", p.derived_class("psi")},
                                                                        {"kH2", p.derived_class("kH2")},
                                                                        {"kH3", p.derived_class("kH3")},
                                                                    });
                        if (image.is_zero()) return "image is identically zero; reduction vacuous";
                        Polynomial nf = q.normal_form(image);
                        if (!nf.is_zero()) return "residue: " + to_text(nf);
                        return {};
                    });
        }
    }
    if (pin_allows(req.d, 2) && !req.n) {
        add_row(rep, "lemma31:coefficients:d=2",
                "degree-two instantiation has side weight 1, self-meeting 5/16, "
                "disjoint meeting -3/16",
                [&]() -> std::string {
                    Polynomial R = lemma31_R(2);
                    auto gs = R.genset();
                    auto coeff = [&](std::initializer_list<std::pair<const char*, unsigned>> f) {
                        std::vector<unsigned> exps(gs->size(), 0);
                        for (const auto& [name, e] : f) exps[gs->require(name)] = e;
                        return R.coefficient(Monomial(std::move(exps)));
                    };
                    auto expect = [&](const Rational& got, const Rational& want,
                                      const char* what) -> std::string {
                        if (got == want) return {};
                        return std::string(what) + " is " + to_text(Polynomial::constant(gs, got)) +
                               ", expected " + to_text(Polynomial::constant(gs, want));
                    };
                    std::string w;
                    if (w = expect(coeff({{"psi", 2}}), 1, "coefficient of psi^2"); !w.empty()) return w;
                    if (w = expect(coeff({{"psi", 1}, {"D{1}", 1}}), -1, "coefficient of psi*D{1}");
                        !w.empty())
                        return w;
                    if (w = expect(coeff({{"psi", 1}, {"D{2}", 1}}), -1, "coefficient of psi*D{2}");
                        !w.empty())
                        return w;
                    if (w = expect(coeff({{"D{1}", 2}}), rational(5, 16), "coefficient of D{1}^2");
                        !w.empty())
                        return w;
                    if (w = expect(coeff({{"D{2}", 2}}), rational(5, 16), "coefficient of D{2}^2");
                        !w.empty())
                        return w;
                    if (w = expect(coeff({{"D{1}", 1}, {"D{2}", 1}}), rational(-3, 8),
                                   "coefficient of D{1}*D{2}");
                        !w.empty())
                        return w;
                    if (w = expect(coeff({{"kH2", 2}}), rational(3, 16), "coefficient of kH2^2");
                        !w.empty())
                        return w;
                    return expect(coeff({{"kH3", 1}}), rational(-1, 2), "coefficient of kH3");
                });
        add_row(rep, "lemma31:side-average:d=2",
                "twice the relation equals the sum of the two per-side square forms",
                [&]() -> std::string {
                    Polynomial R = lemma31_R(2);
                    auto gs = R.genset();
                    Polynomial psi = gen(gs, "psi");
                    Polynomial D1 = gen(gs, "D{1}");
                    Polynomial D2 = gen(gs, "D{2}");
                    Polynomial sides = (psi - D1).pow(2) + (psi - D2).pow(2) -
                                       (D1 + D2).pow(2) * rational(3, 8) +
                                       gen(gs, "kH2").pow(2) * rational(3, 8) - gen(gs, "kH3");
                    if (R * 2 == sides) return {};
                    return "difference: " + to_text(R * 2 - sides);
                });
    }
    if (!req.n) {
        for (unsigned d : grid(req.d, 2, 4)) {
            add_row(rep, "lemma31:relabel-invariance:d=" + std::to_string(d),
                    "the relation is fixed by every relabeling of the " + std::to_string(d) +
                        " degree atoms",
                    [&]() -> std::string {
                        Polynomial R = lemma31_R(d);
                        for (const GroupElement& g : full_group({d})) {
                            std::map<int, int> sigma;
                            for (unsigned a = 1; a <= d; ++a)
                                sigma[static_cast<int>(a)] = static_cast<int>(g.apply(0, a));
                            if (substitute(R, atom_permutation_images(R.genset(), sigma)) != R) {
                                std::ostringstream w;
                                w << "changed by relabeling";
                                for (unsigned a = 1; a <= d; ++a)
                                    w << " " << a << "->" << sigma[static_cast<int>(a)];
                                return w.str();
                            }
                        }
                        return {};
                    });
        }
    }
    if (pin_allows(req.d, 2)) {
        for (unsigned n : grid(req.n, 1, 2)) {
            add_row(rep, "lemma31:conic-reduction:n=" + std::to_string(n),
                    "degree-two instantiation cancels identically under the conic-model images",
                    [&]() -> std::string {
                        const RingPresentation& m01 = conic_model(n).presentation();
                        Polynomial image = substitute(lemma31_R(2), conic_images(m01));
                        if (image.is_zero()) return {};
                        return "leftover polynomial: " + to_text(image);
                    });
        }
    }
}

// ---------------------------------------------------------------------------
// kappa: the divisorial kappa relation.

void suite_kappa(const SuiteRequest& req, VerificationReport& rep) {
    if (pin_allows(req.d, 1) && !req.n) {
        add_row(rep, "kappa:pointed-line-identity:d=1",
                "the degree-one divisorial kappa relation cancels identically in the "
                "pointed-line ring",
                [&]() -> std::string {
                    const RingPresentation& p = pointed_line_model(3).presentation();
                    Polynomial image = substitute(kappa_divisor_relation(1),
                                                  {
                                                      {"psi", p.derived_class("psi")},
                                                      {"H", p.derived_class("H")},
                                                      {"kH2", p.derived_class("kH2")},
                                                  });
                    if (image.is_zero()) return {};
                    return "leftover polynomial: " + to_text(image);
                });
    }
    if (pin_allows(req.d, 2) && !req.n) {
        add_row(rep, "kappa:coefficients:d=2",
                "degree-two divisorial kappa relation has the closed coefficient form",
                [&]() -> std::string {
                    Polynomial k2 = kappa_divisor_relation(2);
                    auto gs = k2.genset();
                    Polynomial want = gen(gs, "psi") + gen(gs, "H") -
                                      gen(gs, "kH2") * rational(1, 4) -
                                      (gen(gs, "D{1}") + gen(gs, "D{2}")) * rational(1, 4);
                    if (k2 == want) return {};
                    return "difference: " + to_text(k2 - want);
                });
    }
    if (pin_allows(req.d, 3) && !req.n) {
        add_row(rep, "kappa:coefficients:d=3",
                "degree-three divisorial kappa relation weights sides by squared size",
                [&]() -> std::string {
                    Polynomial k3 = kappa_divisor_relation(3);
                    auto gs = k3.genset();
                    auto coeff = [&](const std::string& name) {
                        std::vector<unsigned> exps(gs->size(), 0);
                        exps[gs->require(name)] = 1;
                        return k3.coefficient(Monomial(std::move(exps)));
                    };
                    auto check = [&](const std::string& name, const Rational& want) {
                        return coeff(name) == want;
                    };
                    if (!check("psi", 1)) return std::string("psi coefficient wrong");
                    if (!check("H", rational(2, 3))) return std::string("H coefficient wrong");
                    if (!check("kH2", rational(-1, 9))) return std::string("kH2 coefficient wrong");
                    if (!check("D{1}", rational(-1, 9)))
                        return std::string("D{1} coefficient wrong");
                    if (!check("D{1,2}", rational(-4, 9)))
                        return std::string("D{1,2} coefficient wrong");
                    if (!check("D{2,3}", rational(-4, 9)))
                        return std::string("D{2,3} coefficient wrong");
                    return std::string();
                });
    }
    if (pin_allows(req.d, 2)) {
        for (unsigned n : grid(req.n, 1, 1)) {
            add_row(rep, "kappa:conic-identity:n=" + std::to_string(n),
                    "the degree-two divisorial kappa relation cancels identically in the "
                    "conic model",
                    [&]() -> std::string {
                        const RingPresentation& m01 = conic_model(n).presentation();
                        Polynomial image =
                            substitute(kappa_divisor_relation(2),
                                       {
                                           {"psi", gen(m01.gens, "psi")},
                                           {"H", gen(m01.gens, "H")},
                                           {"kH2", m01.derived_class("kH2")},
                                           {"D{1}", gen(m01.gens, "D1")},
                                           {"D{2}", gen(m01.gens, "D2")},
                                       });
                        if (image.is_zero()) return {};
                        return "leftover polynomial: " + to_text(image);
                    });
        }
    }
}

// ---------------------------------------------------------------------------
// groebner: engine soundness.

void suite_groebner(const SuiteRequest& req, VerificationReport& rep) {
    (void)req;
    std::vector<std::pair<std::string, const QuotientRing*>> models;
    static const QuotientRing proj3 = QuotientRing::build(projective_space(3));
    static const QuotientRing grass3 = QuotientRing::build(grassmannian_lines(3));
    static const QuotientRing grass4 = QuotientRing::build(grassmannian_lines(4));
    models.emplace_back("projective_space(3)", &proj3);
    models.emplace_back("grassmannian_lines(3)", &grass3);
    models.emplace_back("grassmannian_lines(4)", &grass4);
    models.emplace_back("flag_d1(2)", &pointed_line_model(2));
    models.emplace_back("flag_d1(3)", &pointed_line_model(3));
    models.emplace_back("m01_pn_d2(1)", &conic_model(1));
    models.emplace_back("m01_pn_d2(2)", &conic_model(2));
    for (const auto& [name, model] : models) {
        add_row(rep, "groebner:spoly-reduction:" + name,
                "every S-polynomial of the emitted basis reduces to zero",
                [&, model = model]() -> std::string {
                    if (spoly_criterion_holds(model->basis())) return {};
                    return "an S-polynomial has a nonzero remainder";
                });
    }

    std::mt19937 rng(871225u);
    std::uniform_int_distribution<int> ngens(1, 4);
    std::uniform_int_distribution<int> degree(1, 5);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto gs = make_genset({{"x", 1}, {"y", 1}, {"z", 1}});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> ideal;
        int k = ngens(rng);
        for (int i = 0; i < k; ++i) {
            unsigned dd = static_cast<unsigned>(degree(rng));
            auto monos = monomials_of_degree(*gs, dd);
            std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
            Polynomial p(gs);
            int t = nterms(rng);
            for (int j = 0; j < t; ++j) p.add_term(monos[pick(rng)], Rational(coeff(rng)));
            if (!p.is_zero()) ideal.push_back(std::move(p));
        }
        if (ideal.empty()) continue;
        std::string tag = trial < 10 ? "0" + std::to_string(trial) : std::to_string(trial);
        add_row(rep, "groebner:hilbert-cross:i=" + tag,
                "graded dimensions from the basis match dense rank computation",
                [&]() -> std::string {
                    QuotientRing q = QuotientRing::build({gs, ideal, {}, "random ideal"});
                    if (!spoly_criterion_holds(q.basis()))
                        return "an S-polynomial has a nonzero remainder";
                    auto engine = hilbert_function(q, 6);
                    auto oracle = rank_hilbert(ideal, gs, 6);
                    if (engine == oracle) return {};
                    return "engine " + dims_text(engine) + " vs rank " + dims_text(oracle);
                });
    }

    add_row(rep, "groebner:kernel:difference-line",
            "projection onto equal images has kernel generated by the difference",
            [&]() -> std::string {
                auto src = make_genset({{"a", 1}, {"b", 1}});
                auto dst = make_genset({{"t", 1}});
                QuotientRing target = QuotientRing::build({dst, {}, {}, "line"});
                Polynomial t = gen(dst, "t");
                KernelResult k = ring_map_kernel({src, {}, {}, "plane"}, target,
                                                 {{"a", t}, {"b", t}});
                if (!k.complete) return "kernel computation reported truncation";
                if (k.generators.size() != 1) return "expected exactly one generator";
                if (k.generators[0] != gen(src, "a") - gen(src, "b"))
                    return "generator is " + to_text(k.generators[0]);
                return {};
            });
    add_row(rep, "groebner:kernel:cuspidal-cubic",
            "the weighted parameterization x->t^2, y->t^3 has kernel x^3 - y^2",
            [&]() -> std::string {
                auto src = make_genset({{"x", 2}, {"y", 3}});
                auto dst = make_genset({{"t", 1}});
                QuotientRing target = QuotientRing::build({dst, {}, {}, "line"});
                Polynomial t = gen(dst, "t");
                KernelResult k = ring_map_kernel({src, {}, {}, "cusp source"}, target,
                                                 {{"x", t.pow(2)}, {"y", t.pow(3)}});
                if (!k.complete) return "kernel computation reported truncation";
                if (k.generators.size() != 1) return "expected exactly one generator";
                if (k.generators[0] != gen(src, "x").pow(3) - gen(src, "y").pow(2))
                    return "generator is " + to_text(k.generators[0]);
                return {};
            });
}

// ---------------------------------------------------------------------------
// schedule: blow-down tower combinatorics.

void suite_schedule(const SuiteRequest& req, VerificationReport& rep) {
    if (!req.m || *req.m == 0) {
        for (unsigned d : grid(req.d, 1, 7)) {
            add_row(rep, "schedule:unmarked:d=" + std::to_string(d),
                    "the unmarked tower has floor((d-1)/2) blow-downs of binomial sizes and "
                    "the right terminal tag",
                    [&]() -> std::string {
                        BlowupSchedule s = schedule_m0(d);
                        unsigned blowDowns = 0;
                        std::set<std::string> seen;
                        for (const auto& st : s.stages) {
                            if (st.kind != "blow-down") continue;
                            ++blowDowns;
                            if (st.contracted.empty()) return "empty blow-down stage";
                            if (static_cast<long long>(st.contracted.size()) != binom(d, st.k))
                                return "stage " + std::to_string(st.k) + " contracts " +
                                       std::to_string(st.contracted.size()) + " labels";
                            for (const auto& label : st.contracted) {
                                if (seen.count(label)) return "label repeated: " + label;
                                seen.insert(label);
                                BoundaryLabel parsed =
                                    BoundaryLabel::parse(label, LabelContext{{d}, 0});
                                if (parsed.degree_size() != st.k)
                                    return "label " + label + " has wrong size";
                            }
                        }
                        if (blowDowns != (d - 1) / 2)
                            return "found " + std::to_string(blowDowns) + " blow-down stages";
                        std::string terminal =
                            (d % 2 == 1) ? "projective-bundle" : "even-d-terminal";
                        if (s.stages.empty() || s.stages.back().kind != terminal)
                            return "terminal stage is not " + terminal;
                        return {};
                    });
        }
    }
    for (unsigned d : grid(req.d, 1, 5)) {
        for (unsigned m : grid(req.m, 1, 3)) {
            if (d + m < 3 || m == 0) continue;
            add_row(rep, "schedule:marked:d=" + std::to_string(d) + ":m=" + std::to_string(m),
                    "the marked tower has d+m-2 blow-downs, a projective-bundle terminal, and "
                    "the universal-section first stage",
                    [&, d, m]() -> std::string {
                        BlowupSchedule s = schedule_m(d, m);
                        unsigned blowDowns = 0;
                        for (const auto& st : s.stages)
                            if (st.kind == "blow-down") ++blowDowns;
                        if (blowDowns != d + m - 2)
                            return "found " + std::to_string(blowDowns) + " blow-down stages";
                        if (s.stages.back().kind != "projective-bundle")
                            return "terminal stage is " + s.stages.back().kind;
                        std::string expect = "D({" + std::to_string(m + 1) + "},1|{1";
                        for (unsigned p = 2; p <= m; ++p) expect += "," + std::to_string(p);
                        expect += "}," + std::to_string(d - 1) + ")";
                        if (s.stages[0].contracted.size() != 1)
                            return "first stage contracts " +
                                   std::to_string(s.stages[0].contracted.size()) + " divisors";
                        if (s.stages[0].contracted[0] != expect)
                            return "first stage contracts " + s.stages[0].contracted[0] +
                                   ", expected " + expect;
                        return {};
                    });
        }
    }
    for (unsigned d : grid(req.d, 1, 4)) {
        for (unsigned m : grid(req.m, 1, 3)) {
            if (d + m < 3 || m == 0) continue;
            add_row(rep,
                    "schedule:newly-unstable:d=" + std::to_string(d) + ":m=" + std::to_string(m),
                    "each contracted divisor is unstable at its stage and stable one stage "
                    "earlier",
                    [&, d, m]() -> std::string {
                        BlowupSchedule s = schedule_m(d, m);
                        for (const auto& st : s.stages) {
                            if (st.kind != "blow-down") continue;
                            for (const auto& text : st.contracted) {
                                std::size_t bar = text.find('|');
                                std::size_t comma = text.rfind(',', bar);
                                int i = std::stoi(text.substr(comma + 1, bar - comma - 1));
                                std::string aset = text.substr(3, comma - 4);
                                unsigned extras = aset.empty() ? 0 : 1;
                                for (char ch : aset)
                                    if (ch == ',') ++extras;
                                --extras;  // drop the universal point itself
                                std::vector<Weight> marks(extras, Weight::stage(st.k));
                                marks.push_back(Weight::exact(0));
                                WeightSystem w{{}, {st.k}};
                                if (!is_unstable_component({i}, marks, w))
                                    return text + " is not unstable at stage " +
                                           std::to_string(st.k);
                                if (st.k > 1) {
                                    std::vector<Weight> prev(extras, Weight::stage(st.k - 1));
                                    prev.push_back(Weight::exact(0));
                                    WeightSystem wp{{}, {st.k - 1}};
                                    if (is_unstable_component({i}, prev, wp))
                                        return text + " is already unstable at stage " +
                                               std::to_string(st.k - 1);
                                }
                            }
                        }
                        return {};
                    });
        }
    }
    if (!req.d && !req.m) {
        add_row(rep, "schedule:epsilon-numeric",
                "the symbolic stability predicate agrees with evaluation at eps = 1/1000000 "
                "and with the integer collapse",
                [&]() -> std::string {
                    const Rational eps(1, 1000000);
                    for (int l = 0; l <= 4; ++l) {
                        for (unsigned qq = 0; qq <= 3; ++qq) {
                            for (unsigned k = 1; k <= 6; ++k) {
                                if (l + static_cast<int>(qq) == 0) continue;
                                std::vector<Weight> marks(qq, Weight::stage(k));
                                WeightSystem w{{}, {k}};
                                bool symbolic = is_unstable_component({l}, marks, w);
                                Rational lhs = Rational(l) * Weight::stage(k).at(eps);
                                for (const Weight& mk : marks) lhs += mk.at(eps);
                                bool numeric = lhs <= 1;
                                bool integer = l + static_cast<int>(qq) <= static_cast<int>(k);
                                if (symbolic != numeric || symbolic != integer)
                                    return "disagreement at degree " + std::to_string(l) +
                                           ", passengers " + std::to_string(qq) + ", stage " +
                                           std::to_string(k);
                            }
                        }
                    }
                    return {};
                });
    }
}

// ---------------------------------------------------------------------------
// example36: the full conic pipeline.

void suite_example36(const SuiteRequest& req, VerificationReport& rep) {
    if (!pin_allows(req.d, 2)) return;
    for (unsigned n : grid(req.n, 1, 3)) {
        VerificationReport sub = example36_pipeline(n);
        for (CheckResult row : sub.checks) {
            row.name = "example36:n=" + std::to_string(n) + ":" + row.name;
            rep.add(std::move(row));
        }
    }
}

// ---------------------------------------------------------------------------
// thm33: the one-sided boundary relation bundles.

void suite_thm33(const SuiteRequest& req, VerificationReport& rep) {
    if (pin_allows(req.d, 2) && !req.n) {
        add_row(rep, "thm33:shape:d=2",
                "the degree-two bundle lists the square, side, and kernel families with one "
                "truncation placeholder",
                [&]() -> std::string {
                    RelationBundle b = thm33_relations(2, 3, default_I(2));
                    if (b.relationNames.size() < 3) return "fewer than three relations";
                    if (b.relationNames[0] != "one" || b.relationNames[1] != "two:{1}" ||
                        b.relationNames[2] != "three:{1}:1")
                        return "unexpected family names";
                    if (b.placeholders.size() != 1 ||
                        b.placeholders[0].find("degree 3") == std::string::npos)
                        return "expected exactly one degree-3 truncation placeholder";
                    auto gs = b.gens;
                    Polynomial psiI = gen(gs, "psiI");
                    Polynomial D1 = gen(gs, "D{1}");
                    Polynomial D2 = gen(gs, "D{2}");
                    Polynomial F1 = gen(gs, "F{1}");
                    Polynomial F2 = gen(gs, "F{2}");
                    Polynomial DP = D1 + D2;
                    Polynomial one = psiI.pow(2) + (F1 - F2) * rational(1, 2) -
                                     DP.pow(2) * rational(3, 16) +
                                     gen(gs, "kH2").pow(2) * rational(3, 16) -
                                     gen(gs, "kH3") * rational(1, 2);
                    if (b.relations[0] != one) return "square relation differs";
                    Polynomial two =
                        D1 * D1 - D1 * (DP - psiI) - (DP * psiI + F1) * rational(1, 2);
                    if (b.relations[1] != two) return "side relation differs";
                    Polynomial psiPrime = psiI + D1;
                    if (b.extras.at("fdiff:{1}") != F1 - F2 - (D1 - D2) * (psiPrime * 2 - DP))
                        return "side-change witness differs";
                    return {};
                });
    }
    if (pin_allows(req.d, 2)) {
        for (unsigned n : grid(req.n, 1, 2)) {
            add_row(rep, "thm33:conic-instantiation:n=" + std::to_string(n),
                    "every bundle relation reduces to zero under the conic-model images",
                    [&, n]() -> std::string {
                        const QuotientRing& q = conic_model(n);
                        const RingPresentation& m01 = q.presentation();
                        RelationBundle b = thm33_relations(2, n, default_I(2));
                        auto images = conic_images(m01);
                        for (std::size_t i = 0; i < b.relations.size(); ++i) {
                            Polynomial nf = q.normal_form(substitute(b.relations[i], images));
                            if (!nf.is_zero())
                                return b.relationNames[i] + " leaves residue " + to_text(nf);
                        }
                        if (!substitute(b.relations[1], images).is_zero())
                            return "side relation should cancel before reduction";
                        return {};
                    });
        }
        for (unsigned n : grid(req.n, 2, 3)) {
            add_row(rep, "thm33:kernel-quadratic:n=" + std::to_string(n),
                    "the two-sided restriction kernel contains the solved quadratic, and the "
                    "cubic kappa class exactly when n = 2",
                    [&, n]() -> std::string {
                        RingPresentation source;
                        source.gens = make_genset({{"kH2", 1}, {"kH3", 2}, {"DP", 1}, {"psiI", 1}});
                        QuotientRing target = QuotientRing::build(flag_fiber_square(n));
                        auto tg = target.genset();
                        Polynomial c1 = gen(tg, "c1"), c2 = gen(tg, "c2");
                        Polynomial c1p = gen(tg, "c1p"), c2p = gen(tg, "c2p");
                        Polynomial h = gen(tg, "h");
                        std::map<std::string, Polynomial> images = {
                            {"kH2", c1 + c1p},
                            {"kH3", c1 * c1 - c2 + c1p * c1p - c2p},
                            {"DP", h * 4 - c1 - c1p},
                            {"psiI", c1 - h * 2},
                        };
                        KernelResult ker = ring_map_kernel(source, target, images, 3);
                        if (ker.generators.empty()) return "kernel came back empty";
                        for (const auto& g : ker.generators) {
                            if (!target.is_zero(substitute(g, images)))
                                return "a kernel generator does not map to zero";
                            if (!g.is_homogeneous()) return "a kernel generator is inhomogeneous";
                        }
                        GroebnerBasis kergb =
                            buchberger(ker.generators, MonomialOrder::grevlex(source.gens));
                        Polynomial kH2 = gen(source.gens, "kH2");
                        Polynomial kH3 = gen(source.gens, "kH3");
                        Polynomial DP = gen(source.gens, "DP");
                        Polynomial psiI = gen(source.gens, "psiI");
                        Polynomial quad = kH2.pow(2) * 3 + DP.pow(2) * 5 + DP * psiI * 16 +
                                          psiI.pow(2) * 16 - kH3 * 8;
                        if (!normal_form(quad, kergb).is_zero())
                            return "solved quadratic is not in the kernel";
                        bool kH3inside = normal_form(kH3, kergb).is_zero();
                        if (kH3inside != (n == 2))
                            return "cubic kappa class membership is wrong at n = " +
                                   std::to_string(n);
                        return {};
                    });
        }
    }
    if (pin_allows(req.d, 2) && !req.n) {
        add_row(rep, "thm33:side-change:d=2",
                "swapping the anchored side shifts the square relation by the recorded witness",
                [&]() -> std::string {
                    RelationBundle b1 = thm33_relations(2, 1, {{1}});
                    RelationBundle b2 = thm33_relations(2, 1, {{2}});
                    auto gs = b1.gens;
                    std::map<std::string, Polynomial> shift;
                    for (std::size_t i = 0; i < gs->size(); ++i)
                        shift.emplace((*gs)[i].name, Polynomial::generator(gs, i));
                    shift.at("psiI") = gen(gs, "psiI") + gen(gs, "D{1}") - gen(gs, "D{2}");
                    Polynomial diff = b1.relations[0] - substitute(b2.relations[0], shift);
                    if (diff != b1.extras.at("fdiff:{1}"))
                        return "difference is not the witness: " + to_text(diff);
                    return {};
                });
    }
    if (pin_allows(req.d, 4) && !req.n) {
        add_row(rep, "thm33:side-change:d=4",
                "at degree four the side change adds the crossing products of the swapped "
                "half-sides",
                [&]() -> std::string {
                    RelationBundle c1 = thm33_relations(4, 1, default_I(4));
                    std::vector<AtomSet> otherI = {{1, 3},    {1, 4},    {3, 4},    {1, 2, 3},
                                                   {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
                    RelationBundle c2 = thm33_relations(4, 1, otherI);
                    auto gs4 = c1.gens;
                    std::map<std::string, Polynomial> shift4;
                    for (std::size_t i = 0; i < gs4->size(); ++i)
                        shift4.emplace((*gs4)[i].name, Polynomial::generator(gs4, i));
                    shift4.at("psiI") =
                        gen(gs4, "psiI") + gen(gs4, "D{1,2}") - gen(gs4, "D{3,4}");
                    Polynomial diff4 = c1.relations[0] - substitute(c2.relations[0], shift4);
                    Polynomial crossing = (gen(gs4, "D{1,2}") - gen(gs4, "D{3,4}")) *
                                          (gen(gs4, "D{1,3}") + gen(gs4, "D{1,4}")) * 2;
                    if (diff4 != c1.extras.at("fdiff:{1,2}") + crossing)
                        return "difference is not witness plus crossing terms";
                    return {};
                });
    }
    if (!req.n) {
        for (unsigned d : grid(req.d, 3, 4)) {
            add_row(rep, "thm33:structure:d=" + std::to_string(d),
                    "the bundle validates, stays homogeneous, and flags its uncomputed kernel "
                    "parts",
                    [&, d]() -> std::string {
                        RelationBundle b = thm33_relations(d, 1, default_I(d));
                        validate(b);
                        for (const auto& r : b.relations)
                            if (!r.is_homogeneous()) return "inhomogeneous relation";
                        if (b.placeholders.empty()) return "no kernel placeholders recorded";
                        bool hasOne = false, hasTwo = false;
                        for (const auto& nm : b.relationNames) {
                            if (nm == "one") hasOne = true;
                            if (nm.rfind("two:", 0) == 0) hasTwo = true;
                        }
                        if (!hasOne || !hasTwo) return "missing relation families";
                        return {};
                    });
        }
    }
}

// ---------------------------------------------------------------------------
// thm_m: the marked-tower relation bundles.

void suite_thm_m(const SuiteRequest& req, VerificationReport& rep) {
    if (pin_allows(req.d, 1) && pin_allows(req.m, 2)) {
        add_row(rep, "thm_m:shape:d=1:m=2",
                "the smallest marked bundle has the section square, one side family, and one "
                "crossing product",
                [&]() -> std::string {
                    RelationBundle b = thm_m_relations(1, 2);
                    auto gs = b.gens;
                    if (gs->size() != 4) return "unexpected generator count";
                    for (const char* nm : {"D_1m1", "fpsi1", "D{1;3}", "fD{1}"})
                        if (!gs->index_of(nm)) return std::string("missing generator ") + nm;
                    if (b.relationNames !=
                        std::vector<std::string>{"one", "two:D{1;3}", "three:D{1;3}:D_1m1"})
                        return "unexpected relation names";
                    Polynomial D1m1 = gen(gs, "D_1m1");
                    Polynomial fpsi1 = gen(gs, "fpsi1");
                    if (b.relations[0] != D1m1 * D1m1 + fpsi1 * D1m1)
                        return "section square relation differs";
                    if (b.relations[1] != (gen(gs, "D{1;3}") - gen(gs, "fD{1}")) *
                                              (gen(gs, "D{1;3}") + fpsi1 + D1m1))
                        return "side relation differs";
                    if (b.relations[2] != gen(gs, "D{1;3}") * D1m1)
                        return "crossing product differs";
                    if (b.extras.at("psi1") != fpsi1 + D1m1) return "descended class differs";
                    return {};
                });
    }
    std::vector<std::pair<unsigned, unsigned>> dm = {{1, 2}, {2, 2}, {3, 2}, {2, 3}};
    for (auto [d, m] : dm) {
        if (!pin_allows(req.d, d) || !pin_allows(req.m, m)) continue;
        add_row(rep, "thm_m:schedule-consistency:d=" + std::to_string(d) +
                         ":m=" + std::to_string(m),
                "every admissible side is scheduled at stage |degree part| + |extra marks|, "
                "with binomial multiplicity",
                [&, d, m]() -> std::string {
                    RelationBundle b = thm_m_relations(d, m);
                    BlowupSchedule sched = schedule_m(d, m);
                    std::map<std::string, unsigned> scheduleStage;
                    for (const auto& st : sched.stages)
                        for (const auto& s : st.contracted) scheduleStage.emplace(s, st.k);
                    long long bundleSides = 0;
                    std::map<std::string, long long> bundleCount;
                    for (std::size_t i = 0; i < b.gens->size(); ++i) {
                        const std::string& name = (*b.gens)[i].name;
                        if (name.rfind("D{", 0) != 0) continue;
                        ++bundleSides;
                        MixedLabel h = divisor_label(name, "D");
                        std::set<unsigned> bubble;
                        for (int x : h.marks) bubble.insert(static_cast<unsigned>(x));
                        std::set<unsigned> base;
                        for (unsigned j = 1; j <= m; ++j)
                            if (!bubble.count(j)) base.insert(j);
                        ForgetfulDivisor fd{bubble, static_cast<unsigned>(h.degreeAtoms.size()),
                                            base, d - static_cast<unsigned>(h.degreeAtoms.size())};
                        auto it = scheduleStage.find(fd.to_string());
                        if (it == scheduleStage.end())
                            return name + " has no scheduled contraction";
                        if (it->second != h.degreeAtoms.size() + h.marks.size() - 1)
                            return name + " is scheduled at the wrong stage";
                        ++bundleCount[fd.to_string()];
                    }
                    long long expected = 0;
                    for (const auto& [s, k] : scheduleStage) {
                        (void)k;
                        auto open = s.find("},");
                        auto close = s.find('|');
                        unsigned i =
                            static_cast<unsigned>(std::stoul(s.substr(open + 2, close - open - 2)));
                        expected += binom(d, i);
                        if (bundleCount[s] != binom(d, i))
                            return s + " has multiplicity " + std::to_string(bundleCount[s]);
                    }
                    if (bundleSides != expected) return "side count differs from schedule";
                    return {};
                });
    }
    if (pin_allows(req.d, 2) && pin_allows(req.m, 1)) {
        add_row(rep, "thm_m:products:d=2:m=1",
                "exactly the incompatible label pairs appear as monomial relations",
                [&]() -> std::string {
                    RelationBundle b = thm_m_relations(2, 1);
                    std::vector<std::string> names(b.relationNames.begin(),
                                                   b.relationNames.end());
                    for (const char* want : {"three:D{1;2}:D_1m1", "three:D{2;2}:D_1m1",
                                             "three:D{1;2}:D{2;2}"})
                        if (std::count(names.begin(), names.end(), want) != 1)
                            return std::string("missing product ") + want;
                    Polynomial rel = b.relations[names.size() - 1];
                    if (rel != gen(b.gens, "D{1;2}") * gen(b.gens, "D{2;2}"))
                        return "last product differs";
                    return {};
                });
    }
    if (pin_allows(req.d, 2) && pin_allows(req.m, 2)) {
        add_row(rep, "thm_m:nested-compatible:d=2:m=2",
                "nested sides never appear as crossing products",
                [&]() -> std::string {
                    RelationBundle c = thm_m_relations(2, 2);
                    for (const auto& nm : c.relationNames)
                        if (nm == "three:D{1;3}:D{1,2;3}") return "nested pair listed as product";
                    return {};
                });
    }
}

// ---------------------------------------------------------------------------
// psi_sum: pointwise cotangent sums on the marked towers.

void suite_psi_sum(const SuiteRequest& req, VerificationReport& rep) {
    if (pin_allows(req.d, 2) && pin_allows(req.m, 2) && pin_allows(req.k, 2)) {
        add_row(rep, "psi_sum:labels:d=2:m=2:k=2",
                "the divisor generators enumerate canonically and the pair relation lists the "
                "separating labels",
                [&]() -> std::string {
                    RelationBundle b = psi_sum_relations(2, 2, 2);
                    std::vector<std::string> divisors;
                    for (std::size_t i = 0; i < b.gens->size(); ++i) {
                        const std::string& name = (*b.gens)[i].name;
                        if (name.rfind("D{", 0) == 0) divisors.push_back(name);
                    }
                    if (divisors != std::vector<std::string>{"D{1}", "D{2}", "D{1;2}", "D{1,2}",
                                                             "D{2;2}"})
                        return "divisor enumeration differs";
                    auto rel = [&](const std::string& name) -> const Polynomial* {
                        for (std::size_t i = 0; i < b.relationNames.size(); ++i)
                            if (b.relationNames[i] == name) return &b.relations[i];
                        return nullptr;
                    };
                    const Polynomial* pair12 = rel("pair:1,2");
                    if (!pair12) return "missing pair relation";
                    if (*pair12 != gen(b.gens, "psi1") + gen(b.gens, "psi2") -
                                       gen(b.gens, "D{1;2}") - gen(b.gens, "D{2;2}"))
                        return "pair relation differs";
                    const Polynomial* descent = rel("descent:2");
                    if (!descent) return "missing descent relation";
                    if (*descent != gen(b.gens, "psi1p") + gen(b.gens, "psi2p"))
                        return "final descent should drop every divisor";
                    return {};
                });
    }
    if (pin_allows(req.d, 2) && pin_allows(req.m, 2) && pin_allows(req.k, 1)) {
        add_row(rep, "psi_sum:mid-descent:d=2:m=2:k=1",
                "one stage before the end, the surviving separating labels remain",
                [&]() -> std::string {
                    RelationBundle b1 = psi_sum_relations(2, 2, 1);
                    for (std::size_t i = 0; i < b1.relationNames.size(); ++i) {
                        if (b1.relationNames[i] != "descent:2") continue;
                        Polynomial want = gen(b1.gens, "psi1p") + gen(b1.gens, "psi2p") -
                                          gen(b1.gens, "D{1;2}") - gen(b1.gens, "D{2;2}");
                        if (b1.relations[i] != want) return "descent relation differs";
                        return {};
                    }
                    return "missing descent relation";
                });
    }
    for (unsigned d : grid(req.d, 1, 3)) {
        for (unsigned m : grid(req.m, 2, 3)) {
            add_row(rep, "psi_sum:stage-cutoff:d=" + std::to_string(d) +
                             ":m=" + std::to_string(m),
                    "a label is dropped from the descent exactly when its component has gone "
                    "unstable",
                    [&, d, m]() -> std::string {
                        for (unsigned k = 0; k + 2 <= d + m; ++k) {
                            if (req.k && *req.k != k) continue;
                            RelationBundle b = psi_sum_relations(d, m, k);
                            for (std::size_t i = 0; i < b.gens->size(); ++i) {
                                const std::string& name = (*b.gens)[i].name;
                                if (name.rfind("D{", 0) != 0) continue;
                                MixedLabel h = divisor_label(name, "D");
                                bool dropped = h.degreeAtoms.size() + h.marks.size() <= k;
                                WeightSystem w;
                                w.mapCaps = {k};
                                std::vector<Weight> marks(h.marks.size(), Weight::stage(k));
                                bool unstable = is_unstable_component(
                                    {static_cast<int>(h.degreeAtoms.size())}, marks, w);
                                if (dropped != unstable)
                                    return name + " at cap " + std::to_string(k) +
                                           " disagrees with the stability rule";
                            }
                        }
                        return {};
                    });
        }
    }
}

// ---------------------------------------------------------------------------
// invariants: the label-swap invariant subring of the conic model.

void suite_invariants(const SuiteRequest& req, VerificationReport& rep) {
    if (!pin_allows(req.d, 2)) return;
    for (unsigned n : grid(req.n, 1, 2)) {
        add_row(rep, "invariants:swap-palindromic:n=" + std::to_string(n),
                "the label-swap invariant dimensions are palindromic through degree 3n",
                [&, n]() -> std::string {
                    const QuotientRing& q = conic_model(n);
                    RingAction swap = label_swap_action(q, "D1", "D2");
                    std::vector<unsigned long> dims = invariant_hilbert(q, swap, 3 * n);
                    for (std::size_t i = 0, j = dims.size() - 1; i < j; ++i, --j)
                        if (dims[i] != dims[j])
                            return "not palindromic: " + dims_text(dims);
                    if (n == 1 && dims != std::vector<unsigned long>{1, 2, 2, 1})
                        return "expected [1,2,2,1], got " + dims_text(dims);
                    return {};
                });
    }
    if (!req.n || *req.n == 1) {
        add_row(rep, "invariants:reynolds-projector:n=1",
                "averaging over the swap is idempotent, lands in the invariants, and kills "
                "the odd class",
                [&]() -> std::string {
                    const QuotientRing& q = conic_model(1);
                    const GenSetPtr& gs = q.genset();
                    RingAction swap = label_swap_action(q, "D1", "D2");
                    Polynomial D1 = gen(gs, "D1"), D2 = gen(gs, "D2");
                    Polynomial H = gen(gs, "H"), psi = gen(gs, "psi");
                    std::vector<Polynomial> sample = {psi * psi, H * psi, D1 * D2,
                                                      (H + psi).pow(2), D1 * D1 - D2 * D2};
                    for (const Polynomial& p : sample) {
                        Polynomial once = swap.reynolds(p);
                        if (swap.reynolds(once) != once) return "averaging is not idempotent";
                        if (q.normal_form(apply_action(swap.group()[1], once)) != once)
                            return "average is not swap-invariant";
                    }
                    if (!swap.reynolds(D1 - D2).is_zero())
                        return "odd class survives averaging";
                    if (swap.reynolds(D1) != q.normal_form((D1 + D2) * rational(1, 2)))
                        return "average of a side class is not the symmetric mean";
                    return {};
                });
    }
}

using SuiteFn = void (*)(const SuiteRequest&, VerificationReport&);

struct SuiteEntry {
    std::string name;
    std::string description;
    SuiteFn fn;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries = {
        {"lemma31", "universal quadratic relation: reductions, coefficients, relabeling",
         suite_lemma31},
        {"kappa", "divisorial kappa relation: identities and coefficients", suite_kappa},
        {"groebner", "engine soundness: S-polynomials, rank cross-checks, kernels",
         suite_groebner},
        {"schedule", "blow-down towers: stage counts, first stages, stability predicate",
         suite_schedule},
        {"example36", "conic pipeline: squares, recurrences, transfer matrix", suite_example36},
        {"thm33", "one-sided boundary bundles: shape, instantiation, kernels", suite_thm33},
        {"thm_m", "marked-tower bundles: shape and schedule consistency", suite_thm_m},
        {"psi_sum", "cotangent-sum relations: labels and stage cutoffs", suite_psi_sum},
        {"invariants", "label-swap invariants: palindromic dimensions, averaging",
         suite_invariants},
    };
    return entries;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& suite_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const SuiteEntry& e : registry()) out.emplace_back(e.name, e.description);
        out.emplace_back("all", "every suite above, in order");
        return out;
    }();
    return catalog;
}

bool is_suite(const std::string& name) {
    for (const auto& [nm, desc] : suite_catalog())
        if (nm == name) return true;
    return false;
}

VerificationReport run_suite(const std::string& name, const SuiteRequest& req) {
    VerificationReport rep;
    rep.title = "verify:" + name;
    if (name == "all") {
        for (const SuiteEntry& e : registry()) e.fn(req, rep);
        return rep;
    }
    for (const SuiteEntry& e : registry()) {
        if (e.name != name) continue;
        e.fn(req, rep);
        return rep;
    }
    throw Error("unknown suite: " + name + " (see `verify --list`)");
}

}  // namespace smw
