#pragma once

#include "fano4/rational.hpp"
#include "fano4/surfaces.hpp"

namespace fano4 {

/// The invariant vector of a smooth 4-fold tracked by this library.
///
/// rho and the Hodge/Betti counts are plain integers (no transform divides
/// them); the characteristic numbers are exact rationals because the chi
/// transforms divide by 2, and integrality of every produced record is a
/// checked property rather than a typing accident.
///
/// chi_mk stores chi(-K).  The tables report it as h^0(-K): the two agree on
/// the Fano / weak-Fano records produced here, and the table emitters label
/// the column accordingly.
struct FourfoldRecord {
    int rho = 0;
    Rat k4 = 0;
    Rat k2c2 = 0;
    Rat chi_mk = 0;
    int h11 = 0;
    int h22 = 0;
    int h13 = 0;
    int b3 = 0;
    Rat chi_t = 0;

    friend bool operator==(const FourfoldRecord&, const FourfoldRecord&) = default;

    /// b4 with Hodge symmetry h^{3,1} = h^{1,3}.
    [[nodiscard]] int b4() const { return h13 + h22 + h13; }

    /// True iff every rational field has denominator 1.
    [[nodiscard]] bool is_integral() const;
};

/// Base of every tower: P^4 itself.
/// (rho, K^4, K^2.c2, chi(-K), h11, h22, h13, b3, chi(T)) =
/// (1, 625, 250, 126, 1, 1, 0, 0, 24).
[[nodiscard]] FourfoldRecord p4_record();

/// Blow up one general point:
/// (rho+1, K4-81, K2c2-18, chi_mk-15, h11+1, h22+1, h13, b3, chiT-4).
[[nodiscard]] FourfoldRecord blow_up_point(const FourfoldRecord& rec);

/// Flip n exceptional lines (direction: toward the Fano/SQM model).
/// Per flip: K4+1, K2c2-2, h22+1; everything else — in particular rho and
/// chi(-K) — is unchanged, as befits a small modification.
[[nodiscard]] FourfoldRecord flip_lines(const FourfoldRecord& rec, Int n);

/// Blow up a smooth surface with the given data:
///
///   K4'     = K4 - 3*KW2 - 2*KS.KW + c2N - KS2
///   K2c2'   = K2c2 - 12*chiO + 2*KS2 - 2*KS.KW - 2*c2N
///   chi_mk' = chi_mk - chiO - (KW2 + KS.KW)/2
///   chi_t'  = chi_t - 2*chiO - (KW2 - KS.KW)/2 + c2N
///   rho+1, h11+1, h22+h11S, h13+h20S, b3+b1S
///
/// Requires KW2 + KS.KW even (else the chi transforms go fractional); throws
/// precondition_error on parity violation.
[[nodiscard]] FourfoldRecord blow_up_surface(const FourfoldRecord& rec, const SurfaceData& s);

/// Exact inverse of blow_up_surface.  Requires rho >= 2, the same parity,
/// and that the resulting Hodge/Betti fields stay nonnegative.
[[nodiscard]] FourfoldRecord blow_down_surface(const FourfoldRecord& rec, const SurfaceData& s);

}  // namespace fano4
