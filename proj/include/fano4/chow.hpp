#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fano4/lattice.hpp"
#include "fano4/rational.hpp"

namespace fano4 {

/// Divisor lattice of P^4 blown up at n general points, together with its
/// quartic intersection form:
///
///   H^4 = 1,   D_i^4 = -1,   every monomial mixing distinct basis elements = 0.
///
/// The lattice may carry one extra formal symbol E (the exceptional divisor of
/// a later surface blow-up).  E supports linear arithmetic only; the quartic
/// form has no data for it, so quartic evaluation rejects classes touching E.
class RingModel {
public:
    [[nodiscard]] const BasisPtr& basis() const { return basis_; }
    [[nodiscard]] int n_points() const { return n_points_; }
    [[nodiscard]] bool has_exceptional() const { return has_exceptional_; }

    [[nodiscard]] DivisorClass cls_H() const;
    [[nodiscard]] DivisorClass cls_D(int i) const;
    /// The formal symbol E; throws lattice_error when the model has none.
    [[nodiscard]] DivisorClass cls_E() const;

private:
    RingModel(BasisPtr basis, int n_points, bool has_exceptional);
    friend RingModel blowup_points_ring(int);
    friend RingModel extend_with_exceptional(const RingModel&);

    BasisPtr basis_;
    int n_points_;
    bool has_exceptional_;
};

/// Lattice with basis H, D0..D_{n-1} and the quartic rule above.
[[nodiscard]] RingModel blowup_points_ring(int n_points);

/// Same lattice with a formal symbol E appended (linear arithmetic only).
[[nodiscard]] RingModel extend_with_exceptional(const RingModel& model);

/// Symmetric multilinear evaluation of the quartic form.  Because all mixed
/// monomials vanish, this reduces to a diagonal sum over the basis.
/// Throws lattice_error if any argument has a nonzero E coefficient.
[[nodiscard]] Rat quartic_degree(const RingModel& model, const DivisorClass& c1,
                                 const DivisorClass& c2, const DivisorClass& c3,
                                 const DivisorClass& c4);

/// -K = 5H - 3*(D0 + ... + D_{n-1}).  The E coefficient (if present) is 0;
/// surface blow-ups subtract E separately where they are modeled.
[[nodiscard]] DivisorClass anticanonical(const RingModel& model);

/// Anticanonical degree of the transform of a degree-d curve with the given
/// multiplicities at the blown-up points: 5d - 3*sum(mults).
[[nodiscard]] Int curve_anticanonical_degree(Int d, const std::vector<Int>& mults);

enum class CurveClass { Positive, ExceptionalLine, Violation };

[[nodiscard]] const char* to_string(CurveClass c);

/// (degree, multiplicity profile) pairs naming the curves that are allowed to
/// have anticanonical degree -1.  Profiles are stored sorted descending with
/// zeros dropped.
using ExceptionalProfile = std::pair<Int, std::vector<Int>>;

/// Default allowed set: lines through two points and rational normal quartics
/// through seven points.
[[nodiscard]] const std::set<ExceptionalProfile>& default_exceptional_profiles();

/// degree >= 1            -> Positive
/// degree == -1 & allowed -> ExceptionalLine
/// anything else          -> Violation
[[nodiscard]] CurveClass classify_curve(
    Int d, const std::vector<Int>& mults,
    const std::set<ExceptionalProfile>& allowed = default_exceptional_profiles());

/// Anticanonical degrees of the two distinguished sections of a P^1-bundle
/// over a rational curve C with Hirzebruch invariant e, given c = -K.C on the
/// base: the negative section meets -K in c - e, a positive one in c + e.
/// det_parity is e mod 2 — the parity that det of any realizing rank-2 bundle
/// restricted to C must have (a+b and b-a always agree mod 2).
struct SectionDegrees {
    Int negative_section;
    Int positive_section;
    int det_parity;
};

[[nodiscard]] SectionDegrees section_degrees(Int c, Int e);

}  // namespace fano4
