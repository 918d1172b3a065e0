#pragma once

#include <string>
#include <vector>

#include "fano4/rational.hpp"

namespace fano4 {

enum class ThreefoldKind { Fano, WeakFano };

[[nodiscard]] const char* to_string(ThreefoldKind k);

/// A 3-fold base for the Picard-bound scan: name, anticanonical degree
/// -K^3 (always > 0 here), Picard number, and Fano vs weak-Fano tag.
struct ThreefoldRecord {
    std::string name;
    Int minus_k3 = 0;
    int rho = 0;
    ThreefoldKind kind = ThreefoldKind::Fano;

    friend bool operator==(const ThreefoldRecord&, const ThreefoldRecord&) = default;
};

/// Degree cap for any base in the scan's setting: -K^3 <= 64 (attained by P^3).
inline constexpr Int kDegreeCap = 64;
/// Sharper cap once the base is not P^3: -K^3 <= 54.
inline constexpr Int kDegreeCapBeyondP3 = 54;

/// The six base 3-folds, in their canonical order.
[[nodiscard]] std::vector<ThreefoldRecord> base_table();

/// Blow up r general points: -K^3 drops by 8 per point, rho grows by 1 per
/// point.  The result must stay weak Fano in degree, i.e. -K^3 - 8r > 0
/// STRICTLY; throws precondition_error otherwise.
[[nodiscard]] ThreefoldRecord blow_up_point3(const ThreefoldRecord& rec, Int r);

/// Riemann-Roch on a weak Fano 3-fold: h^0(-K) = -K^3/2 + 3.
/// Throws precondition_error when -K^3 is odd.
[[nodiscard]] Int h0_minus_k(const ThreefoldRecord& rec);

/// One scan row: a base, the largest admissible point count r_max, and the
/// Picard number rho_X = rho_base + r_max + 1 of a 4-fold fibred over the
/// blown-up base.
struct ScanRow {
    ThreefoldRecord base;
    Int r_max = 0;
    int rho_x = 0;
};

struct ScanResult {
    std::vector<ScanRow> rows;  ///< bases with rho_x >= the requested minimum
    int global_max_rho = 0;     ///< max over ALL bases (filtered or not)
};

/// For each base, the largest r with -K^3 - 8r > 0 and the resulting rho_X;
/// rows with rho_X < min_rho_x are filtered out of `rows` but still count
/// toward global_max_rho.  With min_rho_x = 6 all six rows survive and the
/// global maximum is 9 (from P^3 with r = 7).
[[nodiscard]] ScanResult elementary_bound_scan(int min_rho_x);

}  // namespace fano4
