#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano4/lattice.hpp"
#include "fano4/rational.hpp"

namespace fano4 {

/// A surface's divisor lattice: Gram matrix of the intersection form, the
/// canonical class, and the classical invariants chi(O), h^{1,1}, h^{2,0},
/// b_1.  The Hodge data is stored, not computed — every surface used here is
/// either rational or a K3, where the values are textbook facts.
class SurfaceModel {
public:
    SurfaceModel(std::string id, std::vector<std::string> basis_names,
                 std::vector<std::vector<Rat>> gram, std::vector<Rat> canonical_coeffs,
                 Int chi_o, int h11, int h20, int b1);

    [[nodiscard]] const BasisPtr& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::vector<Rat>>& gram() const { return gram_; }
    [[nodiscard]] const DivisorClass& canonical() const { return canonical_; }
    [[nodiscard]] Int chi_o() const { return chi_o_; }
    [[nodiscard]] int h11() const { return h11_; }
    [[nodiscard]] int h20() const { return h20_; }
    [[nodiscard]] int b1() const { return b1_; }

    /// Basis element as a class, by name.
    [[nodiscard]] DivisorClass cls(std::string_view name) const;
    [[nodiscard]] DivisorClass zero() const;

private:
    BasisPtr basis_;
    std::vector<std::vector<Rat>> gram_;
    DivisorClass canonical_;
    Int chi_o_;
    int h11_;
    int h20_;
    int b1_;
};

/// P^2 blown up at k general points: basis (h, e1..ek), h^2 = 1, e_i^2 = -1,
/// K = -3h + sum(e); chi(O) = 1, h11 = k+1, h20 = 0, b1 = 0.
[[nodiscard]] SurfaceModel del_pezzo(int k);

/// Degree-6 K3 lattice slice used by the sextic-with-double-points surfaces:
/// basis (h, C0..Cr) with h^2 = 6, C_i^2 = -2, all mixed products 0, K = 0;
/// chi(O) = 2, h11 = 20, h20 = 1, b1 = 0.
[[nodiscard]] SurfaceModel k3_sextic(int r);

/// Quadric surface blown up at k points: basis (h, e1..ek), h^2 = 2,
/// e_i^2 = -1, K = -2h + sum(e); chi(O) = 1, h11 = k+2, h20 = 0, b1 = 0.
[[nodiscard]] SurfaceModel blown_up_quadric(int k);

/// Gram-form evaluation a^T * G * b.  Symmetric and bilinear.
[[nodiscard]] Rat intersect(const SurfaceModel& s, const DivisorClass& a,
                            const DivisorClass& b);

/// The numbers the 4-fold blow-up formulas consume, for a surface S sitting
/// inside a 4-fold W:  K_S^2, K_S.K_{W|S}, (K_{W|S})^2, c2 of the normal
/// bundle, chi(O_S), and the surface Hodge data.
struct SurfaceData {
    Int ks2 = 0;
    Int ks_dot_kw = 0;
    Int kw2 = 0;
    Int c2n = 0;
    Int chios = 0;
    int h11s = 0;
    int h20s = 0;
    int b1s = 0;

    friend bool operator==(const SurfaceData&, const SurfaceData&) = default;
};

/// Assemble SurfaceData from a lattice model and the restriction of K_W.
///
/// When the normal bundle splits as n1 + n2, the pieces must satisfy the
/// adjunction identity n1 + n2 = K_S - K_{W|S}; violations throw
/// precondition_error carrying the nonzero residual class.  c2N is then
/// n1.n2; otherwise the caller supplies it directly.
[[nodiscard]] SurfaceData surface_data(
    const SurfaceModel& s, const DivisorClass& kw_restr,
    const std::optional<std::pair<DivisorClass, DivisorClass>>& normal_pieces,
    std::optional<Int> c2n_override = std::nullopt);

}  // namespace fano4
