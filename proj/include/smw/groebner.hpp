#pragma once
// Buchberger's algorithm with the coprime and chain criteria, reduced
// bases, normal forms, quotient-ring Hilbert functions, and ring-map
// kernels via block elimination. Everything is exact and deterministic:
// the same input and order always yield the same reduced basis.

#include "smw/order.hpp"
#include "smw/polynomial.hpp"
#include "smw/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace smw {

struct GroebnerBasis {
    MonomialOrder order;
    /// Monic, inter-reduced, sorted descending by leading monomial.
    std::vector<Polynomial> elements;

    const GenSetPtr& genset() const { return order.genset(); }
};

/// Reduced Groebner basis of the ideal generated by `generators`.
/// Generators must be homogeneous (all ideals in scope are graded).
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const MonomialOrder& order);

/// Degree-truncated variant: S-pairs whose lcm exceeds maxDegree are
/// skipped. For homogeneous input the result is exact through maxDegree.
/// *complete is set to false iff any pair was skipped.
GroebnerBasis buchberger_bounded(const std::vector<Polynomial>& generators,
                                 const MonomialOrder& order,
                                 unsigned maxDegree, bool* complete);

/// The unique fully reduced remainder of p modulo the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// S-polynomial of two nonzero polynomials under the order.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

/// True iff every S-polynomial of basis elements reduces to zero —
/// the defining property, re-checked directly.
bool spoly_criterion_holds(const GroebnerBasis& gb);

class QuotientRing {
public:
    QuotientRing(RingPresentation pres, MonomialOrder order);
    /// Default grevlex order with declaration-order priority.
    static QuotientRing build(RingPresentation pres);

    const RingPresentation& presentation() const { return pres_; }
    const GroebnerBasis& basis() const { return gb_; }
    const GenSetPtr& genset() const { return pres_.gens; }

    Polynomial normal_form(const Polynomial& p) const;
    bool is_zero(const Polynomial& p) const;

    /// Monomials of the given weighted degree not divisible by any leading
    /// monomial of the basis; a vector-space basis of the graded slice.
    std::vector<Monomial> standard_monomials(unsigned degree) const;

    /// dims[D] for D = 0..maxDegree.
    std::vector<unsigned long> hilbert(unsigned maxDegree) const;

private:
    RingPresentation pres_;
    GroebnerBasis gb_;
};

/// Graded dimension table: dims[D] = number of standard monomials of degree D.
std::vector<unsigned long> hilbert_function(const QuotientRing& q, unsigned maxDegree);

struct ZeroWitness {
    bool zero;
    Polynomial witness;  // the nonzero normal form when !zero, else 0
};

/// true iff normal_form(p) vanishes; the witness is the normal form.
ZeroWitness is_zero_in_quotient(const Polynomial& p, const QuotientRing& q);

struct KernelResult {
    std::vector<Polynomial> generators;   // over the source generator set
    bool complete;                        // false iff the degree bound truncated
    std::optional<unsigned> degree_bound; // bound used, if any
};

/// Kernel of the graded ring map source -> target determined by `images`
/// (one homogeneous, degree-preserving image per source generator),
/// computed by elimination: a Groebner basis of (graph ideal + target
/// relations) is intersected with the source block. Without a degree bound
/// the result generates the full kernel; with one, it is exact through the
/// bound and `complete` reports whether anything was cut off.
KernelResult ring_map_kernel(const RingPresentation& source,
                             const QuotientRing& target,
                             const std::map<std::string, Polynomial>& images,
                             std::optional<unsigned> degreeBound = std::nullopt);

}  // namespace smw
