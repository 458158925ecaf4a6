#include "smw/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace smw {

namespace {

std::string set_to_string(const std::set<unsigned>& s) {
    std::string out = "{";
    bool first = true;
    for (unsigned v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::set<unsigned> parse_set(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '{')
        throw Error("label: expected '{' at position " + std::to_string(pos));
    ++pos;
    std::set<unsigned> out;
    while (pos < text.size() && text[pos] != '}') {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw Error("label: expected number in " + text);
        out.insert(static_cast<unsigned>(std::stoul(text.substr(start, pos - start))));
        if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos >= text.size()) throw Error("label: unterminated set in " + text);
    ++pos;  // consume '}'
    return out;
}

}  // namespace

BoundaryLabel::BoundaryLabel(LabelContext ctx, std::vector<std::set<unsigned>> degreeParts,
                             std::set<unsigned> markedPart)
    : ctx_(std::move(ctx)), parts_(std::move(degreeParts)), marked_(std::move(markedPart)) {
    if (parts_.size() != ctx_.blockDegrees.size())
        throw Error("label: expected one degree part per block");
    for (std::size_t b = 0; b < parts_.size(); ++b)
        for (unsigned atom : parts_[b])
            if (atom < 1 || atom > ctx_.blockDegrees[b])
                throw Error("label: atom " + std::to_string(atom) + " outside block range");
    for (unsigned p : marked_) {
        if (p == 1) throw Error("label: the anchored point 1 cannot be decorated");
        if (ctx_.marked == 0 || p > ctx_.marked + 1)
            throw Error("label: marked index " + std::to_string(p) + " outside context");
    }
    if (degree_size() == 0 && marked_.size() < 2)
        throw Error("label: trivial decoration (no atoms and fewer than two marked points)");
}

BoundaryLabel BoundaryLabel::simple(unsigned d, std::set<unsigned> part) {
    return BoundaryLabel(LabelContext{{d}, 0}, {std::move(part)}, {});
}

unsigned BoundaryLabel::degree_size() const {
    unsigned n = 0;
    for (const auto& p : parts_) n += static_cast<unsigned>(p.size());
    return n;
}

std::string BoundaryLabel::to_string() const {
    std::string out;
    for (std::size_t b = 0; b < parts_.size(); ++b) {
        if (b) out += "|";
        out += set_to_string(parts_[b]);
    }
    if (ctx_.marked > 0) out += "|" + set_to_string(marked_);
    return out;
}

BoundaryLabel BoundaryLabel::parse(const std::string& text, LabelContext ctx) {
    std::size_t pos = 0;
    std::vector<std::set<unsigned>> parts;
    for (std::size_t b = 0; b < ctx.blockDegrees.size(); ++b) {
        if (b) {
            if (pos >= text.size() || text[pos] != '|')
                throw Error("label: expected '|' in " + text);
            ++pos;
        }
        parts.push_back(parse_set(text, pos));
    }
    std::set<unsigned> marked;
    if (ctx.marked > 0) {
        if (pos >= text.size() || text[pos] != '|')
            throw Error("label: expected marked part in " + text);
        ++pos;
        marked = parse_set(text, pos);
    }
    if (pos != text.size()) throw Error("label: trailing characters in " + text);
    return BoundaryLabel(std::move(ctx), std::move(parts), std::move(marked));
}

bool BoundaryLabel::operator==(const BoundaryLabel& o) const {
    return ctx_ == o.ctx_ && parts_ == o.parts_ && marked_ == o.marked_;
}

bool BoundaryLabel::operator<(const BoundaryLabel& o) const {
    if (parts_ != o.parts_) return parts_ < o.parts_;
    return marked_ < o.marked_;
}

BoundaryLabel complement(const BoundaryLabel& h) {
    if (h.context().marked != 0)
        throw Error("complement: defined only for unmarked contexts");
    std::vector<std::set<unsigned>> parts;
    for (std::size_t b = 0; b < h.degree_parts().size(); ++b) {
        std::set<unsigned> c;
        for (unsigned atom = 1; atom <= h.context().blockDegrees[b]; ++atom)
            if (!h.degree_parts()[b].count(atom)) c.insert(atom);
        parts.push_back(std::move(c));
    }
    return BoundaryLabel(h.context(), std::move(parts), {});
}

namespace {

bool subset(const std::set<unsigned>& a, const std::set<unsigned>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::set<unsigned>& a, const std::set<unsigned>& b) {
    std::vector<unsigned> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    return common.empty();
}

/// Nested-or-disjoint for two decorations seen as subsets of the disjoint
/// union of all atoms: x∩y must equal x, y, or ∅ componentwise.
bool pair_compatible(const BoundaryLabel& x, const BoundaryLabel& y) {
    bool xInY = true, yInX = true, apart = true;
    auto fold = [&](const std::set<unsigned>& a, const std::set<unsigned>& b) {
        xInY = xInY && subset(a, b);
        yInX = yInX && subset(b, a);
        apart = apart && disjoint(a, b);
    };
    for (std::size_t b = 0; b < x.degree_parts().size(); ++b)
        fold(x.degree_parts()[b], y.degree_parts()[b]);
    fold(x.marked_part(), y.marked_part());
    return xInY || yInX || apart;
}

}  // namespace

bool is_compatible(const std::vector<BoundaryLabel>& labels) {
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (!(labels[i].context() == labels[0].context()))
            throw Error("is_compatible: labels from different contexts");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (!pair_compatible(labels[i], labels[j])) return false;
    return true;
}

Weight Weight::exact(const Rational& r) {
    if (r < 0 || r > 1) throw Error("weight must lie in [0,1]");
    Weight w;
    w.symbolic_ = false;
    w.value_ = r;
    return w;
}

Weight Weight::stage(unsigned k) {
    Weight w;
    w.symbolic_ = true;
    w.cap_ = k;
    return w;
}

Rational Weight::at(const Rational& eps) const {
    if (!symbolic_) return value_;
    return Rational(1) / (Rational(cap_) + eps);
}

bool is_unstable_component(const std::vector<int>& blockDegrees,
                           const std::vector<Weight>& markedWeights,
                           const WeightSystem& w) {
    if (blockDegrees.size() != w.mapCaps.size())
        throw Error("is_unstable_component: one degree per map-weight block required");
    Rational limit = 0;
    for (std::size_t b = 0; b < blockDegrees.size(); ++b) {
        int l = blockDegrees[b];
        if (l < 0) throw Error("is_unstable_component: negative degree");
        if (l == 0) continue;
        if (w.mapCaps[b] == 0) return false;  // l/ε: infinite left side
        limit += Rational(l) / Rational(w.mapCaps[b]);
    }
    for (const auto& mw : markedWeights) {
        if (!mw.symbolic()) {
            limit += mw.value();
        } else {
            if (mw.cap() == 0) return false;  // 1/ε
            limit += Rational(1) / Rational(mw.cap());
        }
    }
    // Every ε-dependence strictly lowers the left side, so the limit value
    // decides and exact equality still counts as unstable.
    return limit <= 1;
}

GroupElement::GroupElement(std::vector<std::vector<unsigned>> images)
    : images_(std::move(images)) {
    for (const auto& p : images_) {
        std::vector<bool> seen(p.size(), false);
        for (unsigned v : p) {
            if (v < 1 || v > p.size() || seen[v - 1])
                throw Error("group element: not a permutation");
            seen[v - 1] = true;
        }
    }
}

GroupElement GroupElement::identity(const std::vector<unsigned>& blockDegrees) {
    std::vector<std::vector<unsigned>> images;
    for (unsigned d : blockDegrees) {
        std::vector<unsigned> p(d);
        std::iota(p.begin(), p.end(), 1);
        images.push_back(std::move(p));
    }
    return GroupElement(std::move(images));
}

GroupElement GroupElement::transposition(const std::vector<unsigned>& blockDegrees,
                                         std::size_t block, unsigned a, unsigned b) {
    GroupElement g = identity(blockDegrees);
    if (block >= g.images_.size() || a < 1 || b < 1 ||
        a > blockDegrees[block] || b > blockDegrees[block])
        throw Error("transposition outside block range");
    std::swap(g.images_[block][a - 1], g.images_[block][b - 1]);
    return g;
}

unsigned GroupElement::apply(std::size_t block, unsigned atom) const {
    if (block >= images_.size() || atom < 1 || atom > images_[block].size())
        throw Error("group element applied outside its blocks");
    return images_[block][atom - 1];
}

GroupElement GroupElement::compose(const GroupElement& inner) const {
    if (images_.size() != inner.images_.size())
        throw Error("composing group elements of different shapes");
    std::vector<std::vector<unsigned>> images = images_;
    for (std::size_t b = 0; b < images.size(); ++b) {
        if (images_[b].size() != inner.images_[b].size())
            throw Error("composing group elements of different shapes");
        for (std::size_t i = 0; i < images[b].size(); ++i)
            images[b][i] = images_[b][inner.images_[b][i] - 1];
    }
    return GroupElement(std::move(images));
}

BoundaryLabel orbit(const GroupElement& g, const BoundaryLabel& h) {
    if (g.blocks() != h.degree_parts().size())
        throw Error("orbit: group element and label have different shapes");
    std::vector<std::set<unsigned>> parts;
    for (std::size_t b = 0; b < g.blocks(); ++b) {
        std::set<unsigned> img;
        for (unsigned atom : h.degree_parts()[b]) img.insert(g.apply(b, atom));
        parts.push_back(std::move(img));
    }
    return BoundaryLabel(h.context(), std::move(parts), h.marked_part());
}

std::vector<GroupElement> full_group(const std::vector<unsigned>& blockDegrees) {
    std::vector<std::vector<std::vector<unsigned>>> perBlock;
    for (unsigned d : blockDegrees) {
        std::vector<unsigned> p(d);
        std::iota(p.begin(), p.end(), 1);
        std::vector<std::vector<unsigned>> all;
        do {
            all.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        perBlock.push_back(std::move(all));
    }
    std::vector<GroupElement> out;
    std::vector<std::size_t> pick(blockDegrees.size(), 0);
    while (true) {
        std::vector<std::vector<unsigned>> images;
        for (std::size_t b = 0; b < pick.size(); ++b) images.push_back(perBlock[b][pick[b]]);
        out.push_back(GroupElement(std::move(images)));
        std::size_t b = 0;
        while (b < pick.size() && ++pick[b] == perBlock[b].size()) pick[b++] = 0;
        if (b == pick.size()) break;
    }
    return out;
}

std::set<BoundaryLabel> orbit_set(const BoundaryLabel& h) {
    std::set<BoundaryLabel> out;
    for (const auto& g : full_group(h.context().blockDegrees)) out.insert(orbit(g, h));
    return out;
}

BlowupSchedule schedule_m0(unsigned d) {
    if (d < 1) throw Error("schedule_m0: degree must be positive");
    BlowupSchedule sched;
    sched.d = d;
    sched.m = 0;
    unsigned last = (d - 1) / 2;
    for (unsigned k = 1; k <= last; ++k) {
        ScheduleStage stage;
        stage.k = k;
        stage.kind = "blow-down";
        // all subsets of {1..d} of size k, in increasing lexicographic order
        std::vector<unsigned> idx(k);
        std::iota(idx.begin(), idx.end(), 1);
        while (true) {
            stage.contracted.push_back(
                BoundaryLabel::simple(d, std::set<unsigned>(idx.begin(), idx.end()))
                    .to_string());
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                                 d - k + 1 + static_cast<unsigned>(i))
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        sched.stages.push_back(std::move(stage));
    }
    ScheduleStage terminal;
    terminal.k = last;
    terminal.kind = (d % 2 == 1) ? "projective-bundle" : "even-d-terminal";
    sched.stages.push_back(std::move(terminal));
    return sched;
}

std::string ForgetfulDivisor::to_string() const {
    return "D(" + set_to_string(bubbleMarks) + "," + std::to_string(bubbleDegree) +
           "|" + set_to_string(baseMarks) + "," + std::to_string(baseDegree) + ")";
}

bool ForgetfulDivisor::operator<(const ForgetfulDivisor& o) const {
    if (bubbleDegree != o.bubbleDegree) return bubbleDegree < o.bubbleDegree;
    return bubbleMarks < o.bubbleMarks;
}

BlowupSchedule schedule_m(unsigned d, unsigned m) {
    if (m < 1 || d < 1 || d + m < 3)
        throw Error("schedule_m: requires m ≥ 1, d ≥ 1, d+m ≥ 3");
    BlowupSchedule sched;
    sched.d = d;
    sched.m = m;
    // Extra marked points available for the universal-point side: 2..m.
    std::vector<unsigned> extras;
    for (unsigned p = 2; p <= m; ++p) extras.push_back(p);
    unsigned last = d + m - 2;
    for (unsigned k = 1; k <= last; ++k) {
        ScheduleStage stage;
        stage.k = k;
        stage.kind = "blow-down";
        std::set<ForgetfulDivisor> found;
        for (std::size_t mask = 0; mask < (1u << extras.size()); ++mask) {
            std::set<unsigned> aprime;
            for (std::size_t j = 0; j < extras.size(); ++j)
                if (mask & (1u << j)) aprime.insert(extras[j]);
            if (aprime.size() > k) continue;
            unsigned i = k - static_cast<unsigned>(aprime.size());
            if (i > d) continue;
            // the collapsed side must have moduli: positive degree or a
            // degree-zero component with at least four special points
            if (!(i >= 1 || aprime.size() >= 2)) continue;
            // the anchored side must stay stable
            unsigned baseMarks = 1 + (m - 1 - static_cast<unsigned>(aprime.size()));
            if (!(d - i >= 1 || baseMarks >= 2)) continue;
            ForgetfulDivisor divisor;
            divisor.bubbleMarks = aprime;
            divisor.bubbleMarks.insert(m + 1);
            divisor.bubbleDegree = i;
            for (unsigned p = 1; p <= m; ++p)
                if (!aprime.count(p)) divisor.baseMarks.insert(p);
            divisor.baseDegree = d - i;
            found.insert(std::move(divisor));
        }
        for (const auto& divisor : found) stage.contracted.push_back(divisor.to_string());
        sched.stages.push_back(std::move(stage));
    }
    ScheduleStage terminal;
    terminal.k = last;
    terminal.kind = "projective-bundle";
    sched.stages.push_back(std::move(terminal));
    return sched;
}

}  // namespace smw
