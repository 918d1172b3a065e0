#include "fano4/invariants.hpp"

#include <string>

#include "fano4/errors.hpp"

namespace fano4 {

namespace {

bool even(Int v) { return ((v % 2) + 2) % 2 == 0; }

void require_parity(const SurfaceData& s) {
    if (!even(s.kw2 + s.ks_dot_kw))
        throw precondition_error("parity violation: (K_W|S)^2 + K_S.K_W = " +
                                 std::to_string(s.kw2 + s.ks_dot_kw) +
                                 " must be even for the chi transforms");
}

}  // namespace

bool FourfoldRecord::is_integral() const {
    return fano4::is_integral(k4) && fano4::is_integral(k2c2) && fano4::is_integral(chi_mk) &&
           fano4::is_integral(chi_t);
}

FourfoldRecord p4_record() { return FourfoldRecord{1, 625, 250, 126, 1, 1, 0, 0, 24}; }

FourfoldRecord blow_up_point(const FourfoldRecord& rec) {
    FourfoldRecord out = rec;
    out.rho += 1;
    out.k4 -= 81;
    out.k2c2 -= 18;
    out.chi_mk -= 15;
    out.h11 += 1;
    out.h22 += 1;
    out.chi_t -= 4;
    return out;
}

FourfoldRecord flip_lines(const FourfoldRecord& rec, Int n) {
    if (n < 0) throw precondition_error("flip count must be >= 0");
    FourfoldRecord out = rec;
    out.k4 += n;
    out.k2c2 -= 2 * n;
    out.h22 += static_cast<int>(n);
    return out;
}

FourfoldRecord blow_up_surface(const FourfoldRecord& rec, const SurfaceData& s) {
    require_parity(s);
    FourfoldRecord out = rec;
    out.rho += 1;
    out.k4 += -3 * s.kw2 - 2 * s.ks_dot_kw + s.c2n - s.ks2;
    out.k2c2 += -12 * s.chios + 2 * s.ks2 - 2 * s.ks_dot_kw - 2 * s.c2n;
    out.chi_mk += -s.chios - Rat(s.kw2 + s.ks_dot_kw, 2);
    out.chi_t += -2 * s.chios - Rat(s.kw2 - s.ks_dot_kw, 2) + s.c2n;
    out.h11 += 1;
    out.h22 += s.h11s;
    out.h13 += s.h20s;
    out.b3 += s.b1s;
    return out;
}

FourfoldRecord blow_down_surface(const FourfoldRecord& rec, const SurfaceData& s) {
    if (rec.rho < 2)
        throw precondition_error("cannot blow down: rho = " + std::to_string(rec.rho));
    require_parity(s);
    FourfoldRecord out = rec;
    out.rho -= 1;
    out.k4 -= -3 * s.kw2 - 2 * s.ks_dot_kw + s.c2n - s.ks2;
    out.k2c2 -= -12 * s.chios + 2 * s.ks2 - 2 * s.ks_dot_kw - 2 * s.c2n;
    out.chi_mk -= -s.chios - Rat(s.kw2 + s.ks_dot_kw, 2);
    out.chi_t -= -2 * s.chios - Rat(s.kw2 - s.ks_dot_kw, 2) + s.c2n;
    out.h11 -= 1;
    out.h22 -= s.h11s;
    out.h13 -= s.h20s;
    out.b3 -= s.b1s;
    if (out.h22 < 0 || out.h13 < 0 || out.b3 < 0 || out.h11 < 1)
        throw precondition_error("blow-down would need negative Hodge numbers "
                                 "(h11 " + std::to_string(out.h11) + ", h22 " +
                                 std::to_string(out.h22) + ", h13 " + std::to_string(out.h13) +
                                 ", b3 " + std::to_string(out.b3) + ")");
    return out;
}

}  // namespace fano4
