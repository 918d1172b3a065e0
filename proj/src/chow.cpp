#include "fano4/chow.hpp"

#include <algorithm>
#include <string>

#include "fano4/errors.hpp"

namespace fano4 {

RingModel::RingModel(BasisPtr basis, int n_points, bool has_exceptional)
    : basis_(std::move(basis)), n_points_(n_points), has_exceptional_(has_exceptional) {}

DivisorClass RingModel::cls_H() const { return DivisorClass::unit(basis_, 0); }

DivisorClass RingModel::cls_D(int i) const {
    if (i < 0 || i >= n_points_)
        throw lattice_error("no point class D" + std::to_string(i) + " (n = " +
                            std::to_string(n_points_) + ")");
    return DivisorClass::unit(basis_, static_cast<std::size_t>(i) + 1);
}

DivisorClass RingModel::cls_E() const {
    if (!has_exceptional_) throw lattice_error("this lattice has no exceptional symbol");
    return DivisorClass::unit(basis_, basis_->size() - 1);
}

RingModel blowup_points_ring(int n_points) {
    if (n_points < 0) throw precondition_error("point count must be >= 0");
    std::vector<std::string> names{"H"};
    for (int i = 0; i < n_points; ++i) names.push_back("D" + std::to_string(i));
    return RingModel(make_basis("blp4:" + std::to_string(n_points), std::move(names)),
                     n_points, false);
}

RingModel extend_with_exceptional(const RingModel& model) {
    if (model.has_exceptional())
        throw lattice_error("lattice already carries an exceptional symbol");
    std::vector<std::string> names = model.basis()->names();
    names.push_back("E");
    return RingModel(make_basis(model.basis()->id() + "+E", std::move(names)),
                     model.n_points(), true);
}

Rat quartic_degree(const RingModel& model, const DivisorClass& c1, const DivisorClass& c2,
                   const DivisorClass& c3, const DivisorClass& c4) {
    const DivisorClass* classes[4] = {&c1, &c2, &c3, &c4};
    const DivisorClass probe = DivisorClass::zero(model.basis());
    for (const DivisorClass* c : classes) {
        ensure_same_lattice(probe, *c);
        if (model.has_exceptional() && c->coeff(c->size() - 1) != Rat(0))
            throw lattice_error(
                "the quartic form has no data for the exceptional symbol E "
                "(class " + c->to_string() + ")");
    }
    // All monomials mixing distinct basis elements vanish, so the symmetric
    // multilinear extension collapses to the diagonal: H^4 = 1, D_i^4 = -1.
    Rat out(0);
    const std::size_t top = static_cast<std::size_t>(model.n_points()) + 1;
    for (std::size_t i = 0; i < top; ++i) {
        const Rat sign = (i == 0) ? Rat(1) : Rat(-1);
        out += sign * c1.coeff(i) * c2.coeff(i) * c3.coeff(i) * c4.coeff(i);
    }
    return out;
}

DivisorClass anticanonical(const RingModel& model) {
    DivisorClass out = Rat(5) * model.cls_H();
    for (int i = 0; i < model.n_points(); ++i) out -= Rat(3) * model.cls_D(i);
    return out;
}

Int curve_anticanonical_degree(Int d, const std::vector<Int>& mults) {
    Int total = 0;
    for (Int m : mults) total += m;
    return 5 * d - 3 * total;
}

const char* to_string(CurveClass c) {
    switch (c) {
        case CurveClass::Positive: return "positive";
        case CurveClass::ExceptionalLine: return "exceptional-line";
        case CurveClass::Violation: return "violation";
    }
    return "?";
}

const std::set<ExceptionalProfile>& default_exceptional_profiles() {
    static const std::set<ExceptionalProfile> profiles{
        {1, {1, 1}},                    // line through two of the points
        {4, {1, 1, 1, 1, 1, 1, 1}},     // rational normal quartic through seven
    };
    return profiles;
}

CurveClass classify_curve(Int d, const std::vector<Int>& mults,
                          const std::set<ExceptionalProfile>& allowed) {
    if (d < 1) throw precondition_error("curve degree must be >= 1");
    std::vector<Int> profile;
    for (Int m : mults) {
        if (m < 0) throw precondition_error("multiplicities must be >= 0");
        if (m > 0) profile.push_back(m);
    }
    std::sort(profile.begin(), profile.end(), std::greater<Int>());

    const Int degree = curve_anticanonical_degree(d, profile);
    if (degree >= 1) return CurveClass::Positive;
    if (degree == -1 && allowed.count({d, profile}) != 0) return CurveClass::ExceptionalLine;
    return CurveClass::Violation;
}

SectionDegrees section_degrees(Int c, Int e) {
    return SectionDegrees{c - e, c + e, static_cast<int>(((e % 2) + 2) % 2)};
}

}  // namespace fano4
