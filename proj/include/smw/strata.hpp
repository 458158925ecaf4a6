#pragma once
// Combinatorics of decorated boundary labels: nested families, weighted
// stability with an infinitesimal regulator, relabeling group actions, and
// the blow-down schedules of the forgetful tower.

#include "smw/error.hpp"
#include "smw/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace smw {

/// Ambient data for a boundary label: the degree of each factor block and
/// the number of ordinary marked points.
struct LabelContext {
    std::vector<unsigned> blockDegrees;  // d_1 .. d_s
    unsigned marked = 0;                 // m

    bool operator==(const LabelContext&) const = default;
};

/// A boundary decoration h = h_1 ⊔ … ⊔ h_s ⊔ M: one subset of degree atoms
/// {1..d_b} per block, plus a set of marked-point indices. Point 1 is the
/// anchored point and never appears in M; the extra index m+1 (the
/// universal-family point) is allowed. A decoration must be nontrivial:
/// some degree part nonempty, or at least two marked indices.
class BoundaryLabel {
public:
    BoundaryLabel(LabelContext ctx, std::vector<std::set<unsigned>> degreeParts,
                  std::set<unsigned> markedPart);

    /// Single-block, unmarked label: h ⊆ {1..d}.
    static BoundaryLabel simple(unsigned d, std::set<unsigned> part);

    const LabelContext& context() const { return ctx_; }
    const std::vector<std::set<unsigned>>& degree_parts() const { return parts_; }
    const std::set<unsigned>& marked_part() const { return marked_; }
    /// Total number of degree atoms in the decoration, Σ |h_b|.
    unsigned degree_size() const;

    /// Canonical text: degree parts joined by '|', then the marked set when
    /// the context has marked points, e.g. "{1,3}" or "{2}|{}|{2,4}".
    std::string to_string() const;
    static BoundaryLabel parse(const std::string& text, LabelContext ctx);

    bool operator==(const BoundaryLabel& o) const;
    bool operator<(const BoundaryLabel& o) const;  // canonical set order

private:
    LabelContext ctx_;
    std::vector<std::set<unsigned>> parts_;
    std::set<unsigned> marked_;
};

/// Blockwise complement h̄ of an unmarked label. Defined only for m = 0
/// contexts; throws if the complement would be the trivial decoration.
BoundaryLabel complement(const BoundaryLabel& h);

/// True iff the labels are pairwise nested or disjoint (as decorations in
/// the disjoint union of all atoms). All labels must share one context.
bool is_compatible(const std::vector<BoundaryLabel>& labels);

/// A marked-point or map weight: either an exact rational in [0,1] or the
/// regularized value 1/(k+ε), where ε is an unevaluated positive
/// infinitesimal shared by every symbolic weight.
class Weight {
public:
    static Weight exact(const Rational& r);
    /// 1/(k+ε) — the weight used at stage k of the forgetful tower.
    static Weight stage(unsigned k);

    bool symbolic() const { return symbolic_; }
    const Rational& value() const { return value_; }  // exact weights only
    unsigned cap() const { return cap_; }             // symbolic weights only

    /// Exact evaluation at a concrete positive ε (for cross-checks).
    Rational at(const Rational& eps) const;

private:
    Weight() = default;
    bool symbolic_ = false;
    Rational value_ = 0;
    unsigned cap_ = 0;
};

/// The weight data of one tower level: weights of the ordinary marked
/// points and the map weight 1/(k_b+ε) of each degree factor.
struct WeightSystem {
    std::vector<Weight> pointWeights;
    std::vector<unsigned> mapCaps;  // k_b per degree block
};

/// Decides Σ_b l_b/(k_b+ε) + Σ_j w_j ≤ 1 symbolically: a component with
/// these block degrees and on-component marked weights is contracted at
/// this level. Any 1/ε term makes the left side infinite (never unstable);
/// otherwise every ε-dependence strictly lowers the left side, so the
/// ε→0 limit decides, with ties counting as unstable.
bool is_unstable_component(const std::vector<int>& blockDegrees,
                           const std::vector<Weight>& markedWeights,
                           const WeightSystem& w);

/// An element of S_{d_1} × … × S_{d_s} acting on labels by relabeling the
/// degree atoms blockwise. perm(b, i) is the image of atom i in block b.
class GroupElement {
public:
    static GroupElement identity(const std::vector<unsigned>& blockDegrees);
    /// Identity except atoms a and b of the given block are exchanged.
    static GroupElement transposition(const std::vector<unsigned>& blockDegrees,
                                      std::size_t block, unsigned a, unsigned b);
    explicit GroupElement(std::vector<std::vector<unsigned>> images);

    const std::vector<unsigned>& block(std::size_t b) const { return images_[b]; }
    std::size_t blocks() const { return images_.size(); }
    unsigned apply(std::size_t block, unsigned atom) const;
    GroupElement compose(const GroupElement& inner) const;  // this ∘ inner

    bool operator==(const GroupElement&) const = default;

private:
    std::vector<std::vector<unsigned>> images_;  // 1-based images per block
};

/// The relabeled decoration g·h (marked part is untouched).
BoundaryLabel orbit(const GroupElement& g, const BoundaryLabel& h);

/// The full orbit of h under the whole product of symmetric groups.
std::set<BoundaryLabel> orbit_set(const BoundaryLabel& h);

/// Enumerates all of S_{d_1} × … × S_{d_s}.
std::vector<GroupElement> full_group(const std::vector<unsigned>& blockDegrees);

/// One level of a blow-down tower. kind is "blow-down" for an interior
/// stage, "projective-bundle" or "even-d-terminal" for the final object.
struct ScheduleStage {
    unsigned k = 0;
    std::string kind;
    std::vector<std::string> contracted;  // canonical label strings
};

struct BlowupSchedule {
    unsigned d = 0;
    unsigned m = 0;
    std::vector<ScheduleStage> stages;
};

/// Unmarked tower: stages k = 1..⌊(d−1)/2⌋, stage k contracting all labels
/// h ⊆ {1..d} with |h| = k, followed by a terminal stage tagged
/// projective-bundle (d odd) or even-d-terminal (d even).
BlowupSchedule schedule_m0(unsigned d);

/// A boundary divisor of the (m+1)-pointed space split along one node:
/// the side carrying the universal point m+1 (contracted by the tower) and
/// the side carrying the anchored point 1.
struct ForgetfulDivisor {
    std::set<unsigned> bubbleMarks;  // contains m+1
    unsigned bubbleDegree = 0;
    std::set<unsigned> baseMarks;    // contains 1
    unsigned baseDegree = 0;

    std::string to_string() const;  // D({..},i|{..},j)
    bool operator<(const ForgetfulDivisor& o) const;
};

/// Marked tower for m ≥ 1, d ≥ 1, d+m ≥ 3: stage k contracts every
/// divisor whose universal-point side has degree i and extra marked set A′
/// with i + |A′| = k, provided that side has moduli to collapse
/// (i ≥ 1 or |A′| ≥ 2) and the anchored side remains stable. Ends with a
/// projective-bundle stage after k = d+m−2.
BlowupSchedule schedule_m(unsigned d, unsigned m);

}  // namespace smw
