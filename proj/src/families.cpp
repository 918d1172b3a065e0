#include "fano4/families.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "fano4/errors.hpp"

namespace fano4 {

const char* to_string(Family f) {
    switch (f) {
        case Family::W: return "W";
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::E: return "E";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    if (name.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(name[0]))) {
            case 'W': return Family::W;
            case 'A': return Family::A;
            case 'B': return Family::B;
            case 'C': return Family::C;
            case 'E': return Family::E;
            default: break;
        }
    }
    throw precondition_error("no family named '" + name + "' (expected W, A, B, C or E)");
}

Int fano_model_flip_count(int n_points) {
    if (n_points < 1 || n_points > 8)
        throw precondition_error("the Fano model needs 1..8 points, got " +
                                 std::to_string(n_points));
    Int flips = static_cast<Int>(n_points) * (n_points - 1) / 2;  // lines through pairs
    if (n_points == 7) flips += 1;   // quartics through 7 of the points
    if (n_points == 8) flips += 8;
    return flips;
}

FourfoldRecord fano_model_W(int n_points) {
    const Int flips = fano_model_flip_count(n_points);  // validates the range
    FourfoldRecord rec = p4_record();
    for (int i = 0; i < n_points; ++i) rec = blow_up_point(rec);
    return flip_lines(rec, flips);
}

namespace {

void require_r(Family f, int r, int max_r) {
    if (r < 0 || r > max_r)
        throw precondition_error("family " + std::string(to_string(f)) + " wants r in 0.." +
                                 std::to_string(max_r) + ", got " + std::to_string(r));
}

SurfaceData scroll_data(int r) {
    // Cubic scroll through all r+1 points; the normal bundle does not split,
    // so c2N is the pinned value 8 - r instead of a Gram product.
    return SurfaceData{7 - Int(r), 22 - 3 * Int(r), 66 - 9 * Int(r), 8 - Int(r),
                       1,          r + 3,           0,               0};
}

SurfaceData k3_data(int r) {
    // Sextic K3 with double points at all r+1 points; assembled from its
    // lattice with the split normal pieces (2h - sum C, 3h - 2 sum C).
    const SurfaceModel s = k3_sextic(r);
    DivisorClass sum_c = s.zero();
    for (int i = 0; i <= r; ++i) sum_c += s.cls("C" + std::to_string(i));
    const DivisorClass kw = Rat(-5) * s.cls("h") + Rat(3) * sum_c;
    return surface_data(s, kw,
                        std::make_pair(Rat(2) * s.cls("h") - sum_c,
                                       Rat(3) * s.cls("h") - Rat(2) * sum_c));
}

SurfaceData quadric_data(int r) {
    // Quadric through r of the points, pieces (h - sum e, 2h - sum e).
    const SurfaceModel s = blown_up_quadric(r);
    DivisorClass sum_e = s.zero();
    for (int i = 1; i <= r; ++i) sum_e += s.cls("e" + std::to_string(i));
    const DivisorClass kw = Rat(-5) * s.cls("h") + Rat(3) * sum_e;
    return surface_data(s, kw,
                        std::make_pair(s.cls("h") - sum_e, Rat(2) * s.cls("h") - sum_e));
}

SurfaceData blowdown_data(int r) {
    // Del Pezzo surface of degree 8 - r contracted out of the scroll blow-up.
    return SurfaceData{8 - Int(r), 16 - 2 * Int(r), 30 - 4 * Int(r), 1, 1, r + 2, 0, 0};
}

}  // namespace

FamilySpec family_A(int r) {
    if (r == 5 || r == 6)
        throw unsupported_error("whether the scroll blow-up is Fano for r = " +
                                std::to_string(r) + " is an open question");
    require_r(Family::A, r, 4);
    const FourfoldRecord base = fano_model_W(r + 1);
    const SurfaceData surface = scroll_data(r);
    return FamilySpec{Family::A, r, blow_up_surface(base, surface), surface, base};
}

FamilySpec family_B(int r) {
    require_r(Family::B, r, 4);
    const FourfoldRecord base = fano_model_W(r + 1);
    const SurfaceData surface = k3_data(r);
    return FamilySpec{Family::B, r, blow_up_surface(base, surface), surface, base};
}

FamilySpec family_C(int r) {
    require_r(Family::C, r, 2);
    const FourfoldRecord base = fano_model_W(r + 1);
    const SurfaceData surface = quadric_data(r);
    return FamilySpec{Family::C, r, blow_up_surface(base, surface), surface, base};
}

FamilySpec family_E(int r) {
    require_r(Family::E, r, 4);
    const FourfoldRecord base = family_A(r).record;
    const SurfaceData surface = blowdown_data(r);
    return FamilySpec{Family::E, r, blow_down_surface(base, surface), surface, base};
}

void cone_family() {
    throw unsupported_error(
        "whether the blow-up along the cone over a twisted cubic is Fano "
        "is an open question");
}

DecompositionIdentity decomposition_identity(Family f, int r) {
    if (f == Family::A || f == Family::B)
        require_r(f, r, 4);
    else if (f == Family::C)
        require_r(f, r, 2);
    else
        throw precondition_error("no decomposition identity is modeled for family " +
                                 std::string(to_string(f)));

    const RingModel ring = extend_with_exceptional(blowup_points_ring(r + 1));
    const DivisorClass e = ring.cls_E();
    const DivisorClass mk_x = anticanonical(ring) - e;
    DivisorClass sum_d = DivisorClass::zero(ring.basis());
    for (int i = 0; i <= r; ++i) sum_d += ring.cls_D(i);

    DecompositionIdentity out{Rat(1), mk_x, {}, {}};
    const auto push = [&out](std::string name, const Rat& coefficient,
                             const DivisorClass& cls) {
        out.coefficients.emplace_back(std::move(name), coefficient);
        out.terms.emplace_back(coefficient, cls);
    };

    switch (f) {
        case Family::A: {
            out.lhs_multiplier = Rat(r + 2);
            push("H", Rat(4 - r), ring.cls_H());
            for (int i = 0; i <= r; ++i)
                push("T~" + std::to_string(i), Rat(3),
                     Rat(2) * ring.cls_H() - sum_d - ring.cls_D(i) - e);
            push("E", Rat(2 * r + 1), e);
            break;
        }
        case Family::B: {
            out.lhs_multiplier = Rat(2 * (r + 2));
            push("H", Rat(2 * (4 - r)), ring.cls_H());
            for (int i = 0; i <= r; ++i)
                push("T~" + std::to_string(i), Rat(3),
                     Rat(4) * ring.cls_H() - Rat(2) * sum_d - Rat(2) * ring.cls_D(i) - e);
            push("E", Rat(r - 1), e);
            break;
        }
        case Family::C: {
            DivisorClass sum_tail = DivisorClass::zero(ring.basis());
            for (int i = 1; i <= r; ++i) sum_tail += ring.cls_D(i);
            push("J~'", Rat(1), ring.cls_H() - sum_tail - e);
            push("D'0", Rat(1), ring.cls_D(0));
            push("T~", Rat(2),
                 Rat(2) * ring.cls_H() - Rat(2) * ring.cls_D(0) - sum_tail - e);
            push("E", Rat(2), e);
            break;
        }
        default: break;  // unreachable
    }
    out.lhs = out.lhs_multiplier * mk_x;
    return out;
}

CertificateReport decomposition_certificate(Family f, int r) {
    const DecompositionIdentity id = decomposition_identity(f, r);

    CertificateReport report;
    report.family = f;
    report.r = r;
    report.identity_ok = verify_linear_identity(id.lhs, id.terms);
    report.coefficients = id.coefficients;
    report.coefficients_nonneg = true;
    for (const auto& [name, value] : id.coefficients)
        if (value < Rat(0)) report.coefficients_nonneg = false;

    switch (f) {
        case Family::A: report.k4 = family_A(r).record.k4; break;
        case Family::B: report.k4 = family_B(r).record.k4; break;
        case Family::C: report.k4 = family_C(r).record.k4; break;
        default: break;  // unreachable: decomposition_identity rejected it
    }
    report.k4_positive = report.k4 > Rat(0);
    return report;
}

std::vector<AuditEntry> general_position_audit(int n_points) {
    if (n_points < 1 || n_points > 8)
        throw precondition_error("the audit covers 1..8 points, got " +
                                 std::to_string(n_points));
    struct Config {
        int needs;
        const char* curve;
        Int d;
        int mult_count;
    };
    static constexpr Config kConfigs[] = {
        {2, "line through 2 points", 1, 2},
        {3, "line through 3 points", 1, 3},
        {4, "conic through 4 points", 2, 4},
        {5, "twisted cubic through 5 points in a hyperplane", 3, 5},
        {7, "rational normal quartic through 7 points", 4, 7},
    };
    std::vector<AuditEntry> out;
    for (const Config& cfg : kConfigs) {
        if (cfg.needs > n_points) continue;
        const std::vector<Int> mults(static_cast<std::size_t>(cfg.mult_count), 1);
        out.push_back(AuditEntry{cfg.curve, curve_anticanonical_degree(cfg.d, mults),
                                 classify_curve(cfg.d, mults)});
    }
    return out;
}

}  // namespace fano4
