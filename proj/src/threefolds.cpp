#include "fano4/threefolds.hpp"

#include <string>

#include "fano4/errors.hpp"

namespace fano4 {

const char* to_string(ThreefoldKind k) {
    return k == ThreefoldKind::Fano ? "Fano" : "weak Fano";
}

std::vector<ThreefoldRecord> base_table() {
    return {
        {"P3", 64, 1, ThreefoldKind::Fano},
        {"P(T_P2)", 48, 2, ThreefoldKind::Fano},
        {"Gr(2,5) linear section", 40, 1, ThreefoldKind::Fano},
        {"quadric bundle in |2eta-F| on P(O+O(1)^3)", 40, 2, ThreefoldKind::WeakFano},
        {"quadric bundle in |2eta| on P(O^2+O(1)^2)", 32, 2, ThreefoldKind::WeakFano},
        {"(1,2) divisor in P2xP2", 30, 2, ThreefoldKind::Fano},
    };
}

ThreefoldRecord blow_up_point3(const ThreefoldRecord& rec, Int r) {
    if (r < 0) throw precondition_error("point count must be >= 0");
    const Int degree = rec.minus_k3 - 8 * r;
    if (degree <= 0)
        throw precondition_error("blowing up " + std::to_string(r) + " points on '" +
                                 rec.name + "' leaves -K^3 = " + std::to_string(degree) +
                                 " <= 0");
    ThreefoldRecord out = rec;
    out.minus_k3 = degree;
    out.rho += static_cast<int>(r);
    return out;
}

Int h0_minus_k(const ThreefoldRecord& rec) {
    if (((rec.minus_k3 % 2) + 2) % 2 != 0)
        throw precondition_error("-K^3 = " + std::to_string(rec.minus_k3) +
                                 " is odd; h0(-K) = -K^3/2 + 3 needs it even");
    return rec.minus_k3 / 2 + 3;
}

ScanResult elementary_bound_scan(int min_rho_x) {
    ScanResult out;
    for (const ThreefoldRecord& base : base_table()) {
        const Int r_max = (base.minus_k3 - 1) / 8;  // largest r with -K^3 - 8r > 0
        const int rho_x = base.rho + static_cast<int>(r_max) + 1;
        if (rho_x > out.global_max_rho) out.global_max_rho = rho_x;
        if (rho_x >= min_rho_x) out.rows.push_back(ScanRow{base, r_max, rho_x});
    }
    return out;
}

}  // namespace fano4
