#pragma once
// Builders for the graded rings and universal relation families of the
// genus-zero stable-map workbench: classical cohomology rings (projective
// space, Grassmannian of lines, the point-line flag), the one-pointed
// degree-2 presentation with its validated sign conventions, and the
// symbolic relation bundles over boundary-divisor generator sets.

#include "smw/polynomial.hpp"
#include "smw/presentation.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace smw {

/// A subset of the degree atoms {1..d}, used to label boundary divisors.
using AtomSet = std::set<int>;

/// "{1,3}" — canonical text for an atom subset.
std::string atom_set_text(const AtomSet& h);

/// All proper nonempty subsets of {1..d}, sorted by (size, elements).
std::vector<AtomSet> proper_subsets(unsigned d);

/// {1..d} minus h.
AtomSet atom_complement(const AtomSet& h, unsigned d);

/// A directed rewriting rule lhs -> rhs between homogeneous polynomials of
/// equal degree over a shared generator set.
struct RewriteRule {
    Polynomial lhs;
    Polynomial rhs;
};

/// A named family of relation polynomials over one generator set, together
/// with named side polynomials (witnesses, derived combinations), textual
/// placeholders for parts that are deliberately not computed, and free-form
/// notes documenting the conventions baked into the emission.
struct RelationBundle {
    std::string name;
    GenSetPtr gens;
    std::vector<std::string> relationNames;  // parallel to relations
    std::vector<Polynomial> relations;
    std::map<std::string, Polynomial> extras;
    std::vector<std::string> placeholders;
    std::map<std::string, std::string> notes;
    std::string provenance;  // builder call that produced this bundle
};

/// Checks bundle invariants: parallel name/relation arrays, homogeneous
/// relations and extras over the bundle's generator set. Throws Error.
void validate(const RelationBundle& b);

/// Q[H]/(H^{n+1}) with H in degree 1.
RingPresentation projective_space(unsigned n);

/// The ring of the space of lines in P^n: Q[c1,c2] (degrees 1,2) modulo the
/// degree-n and degree-(n+1) components of the formal inverse of 1+c1+c2.
RingPresentation grassmannian_lines(unsigned n);

/// The point-on-a-line flag ring over grassmannian_lines(n): one extra
/// degree-1 generator h with relation h^2 - c1*h + c2. Derived classes:
/// H := h, psi := c1 - 2h, kH2 := c1, kH3 := c1^2 - c2.
RingPresentation flag_d1(unsigned n);

/// Fiberwise integration for a quadratic bundle relation: reduces p to
/// degree <= 1 in the named fiber generator via fiber^2 = c1*fiber - c2 and
/// returns the coefficient of fiber^1 (so 1 integrates to 0 and fiber to 1,
/// extended base-linearly). The result lives over the same generator set
/// with the fiber exponent zeroed out.
Polynomial pushforward_quadratic_bundle(const Polynomial& p, const std::string& fiber,
                                        const std::string& c1, const std::string& c2);

/// The divided-power tail ((H+psi+s)^{n+1} - (H+psi)^{n+1}) / s, expanded by
/// exact division. s must be homogeneous of degree 1 over a generator set
/// that contains degree-1 generators named "H" and "psi".
Polynomial m01_Q(unsigned n, const Polynomial& s);

/// The one-pointed degree-2 ring over P^n: generators D2, D1, H, psi (all
/// degree 1) with the seven-relation ideal, plus the derived classes
/// D, kH2, b, t, f, kH3. The degree-2 classes f and kH3 are pinned by a
/// finite validation search (see ConventionError); the accepted candidate is
/// recorded in the derived-class table itself.
RingPresentation m01_pn_d2(unsigned n);

/// The universal codimension-two class over the one-pointed degree-d
/// generator set [psi, D{h} for all proper nonempty h, kH2, kH3]:
///   psi^2 - sum_h Npsi(|h|) psi*D{h} + sum_(h,h') N(|h|,|h'|) D{h}D{h'}
///        + (3/d^4) kH2^2 - (4/d^3) kH3.
/// The quadratic sum ranges over ordered pairs (h,h') with h' containing h
/// or disjoint from h; hence each nested pair contributes once and each
/// disjoint pair twice. That reading is pinned by the d=2 reduction checks.
Polynomial lemma31_R(unsigned d);
Polynomial lemma31_R(unsigned d, const std::vector<AtomSet>& labelSet);

/// The divisorial kappa relation over [psi, H, kH2, D{h}...]:
///   psi + (2/d) H - (1/d^2) kH2 - sum_h (|h|^2/d^2) D{h}.
Polynomial kappa_divisor_relation(unsigned d);
Polynomial kappa_divisor_relation(unsigned d, const std::vector<AtomSet>& labelSet);

/// Self-intersection rewriting rule for the two-sided divisor class of the
/// partition {h, complement}: lhs = D{canon}^2, rhs = -(psi{h} + psi{hbar})
/// where canon is the side containing atom 1 and the degree-2 symbols
/// psi{...} name the node cotangent classes carried by the two sides.
/// The rule is the same for h and its complement.
RewriteRule node_square_rule(unsigned d, const AtomSet& h);

/// The canonical valid side choice: all h with |h| > d/2, plus (for even d)
/// the side of each half-degree partition that contains atom 1.
std::vector<AtomSet> default_I(unsigned d);

/// The two-factor point-line flag ring sharing one projective space:
/// generators c1, c2, c1p, c2p, h with both Grassmannian relation pairs and
/// both quadratic flag relations h^2 - c1*h + c2, h^2 - c1p*h + c2p.
RingPresentation flag_fiber_square(unsigned n);

/// Relation bundle over [psiI, D{h} all proper nonempty, F{h} all, kH2, kH3]
/// for a valid side choice I:
///   - "one": psiI^2 - sum_{h not in I} (1/2) Npsi(|h|)(F{h} - F{hbar})
///            + sum_{unordered disjoint {h,h'}} N(|h|,|h'|) DP_h DP_{h'}
///            + (3/d^4) kH2^2 - (4/d^3) kH3,
///     where DP_x = D{x} + D{xbar} is the two-sided class, written inline.
///   - "two:{h}" for each h in I:
///     D{h}^2 - D{h}(DP_h - psiI(h)) - (1/2)[DP_h(psiI(h) - DIbar(h)) + F{h}],
///     with psiI(h) = psiI + sum_{h' in I, h' strictly inside h} D{h'} and
///     DIbar(h) the matching sum of the complement classes D{h'bar}.
///   - "three:{h}:j" at d=2: D{h} times the computed kernel generators of
///     the restriction to the two-sided boundary ring (flag_fiber_square);
///     for d >= 3 the kernel parts are emitted as placeholders only.
/// extras: "fdiff:{h}" witnesses F{h}-F{hbar}-(D{h}-D{hbar})(2*psi'-DP_h).
RelationBundle thm33_relations(unsigned d, unsigned n, const std::vector<AtomSet>& I);

/// A boundary label for spaces with one distinguished base point: a set of
/// degree atoms from {1..d} and a set of marked-point indices (the base
/// point never appears in the marked set).
struct MixedLabel {
    AtomSet degreeAtoms;
    std::set<int> marks;

    bool operator==(const MixedLabel&) const = default;
};

/// Canonical ordering: by total size, then degree atoms, then marks.
bool label_less(const MixedLabel& a, const MixedLabel& b);

/// "D{1,2;3}" — flat generator name for a mixed label ("D{1,2}" when there
/// are no marks, "D{;3,4}" when there are no degree atoms).
std::string divisor_name(const std::string& prefix, const MixedLabel& h);

/// Inverse of divisor_name: parses prefix + "{deg;marks}".
MixedLabel divisor_label(const std::string& name, const std::string& prefix);

/// Relation bundle for the section divisor D_1m1 and the admissible bubble
/// classes D{h} (every h carries the extra point m+1 plus a valid base
/// divisor label of the m-pointed space):
///   - "one": D_1m1^2 + fpsi1*D_1m1.
///   - "two:{h}": (D{h} - fD{x}) (D{h} + fpsi1 + D_1m1 - sum_{h' strictly
///     above h} D{h'}), where x = h minus the extra point.
///   - "three:..." monomials: D{h}*D_1m1 for every admissible h and
///     D{h}D{h'} for pairs where neither label contains the other; the
///     kernel parts of the third family are placeholders (not computed).
/// extras: "psi1" = fpsi1 + D_1m1.
RelationBundle thm_m_relations(unsigned d, unsigned m);

/// Cotangent-sum relations on the m-pointed degree-d space:
///   - "pair:i,j" for 1 <= i < j <= m: psi_i + psi_j minus the sum of all
///     divisor classes whose label separates i from j.
///   - "descent:j" for 2 <= j <= m: the stage-k image psi1p + psi<j>p minus
///     the sum over separating labels that stay unstable at cap k, i.e.
///     labels with |degree atoms| + |marks| > k.
RelationBundle psi_sum_relations(unsigned d, unsigned m, unsigned k);

}  // namespace smw
