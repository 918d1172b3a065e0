#include "fano4/surfaces.hpp"

#include <string>
#include <utility>

#include "fano4/errors.hpp"

namespace fano4 {

SurfaceModel::SurfaceModel(std::string id, std::vector<std::string> basis_names,
                           std::vector<std::vector<Rat>> gram,
                           std::vector<Rat> canonical_coeffs, Int chi_o, int h11, int h20,
                           int b1)
    : basis_(make_basis(std::move(id), std::move(basis_names))),
      gram_(std::move(gram)),
      canonical_(basis_, std::move(canonical_coeffs)),
      chi_o_(chi_o),
      h11_(h11),
      h20_(h20),
      b1_(b1) {
    const std::size_t n = basis_->size();
    if (gram_.size() != n)
        throw lattice_error("surface '" + basis_->id() + "': Gram matrix is not " +
                            std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n)
            throw lattice_error("surface '" + basis_->id() + "': ragged Gram matrix");
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw lattice_error("surface '" + basis_->id() + "': Gram matrix not symmetric");
    }
}

DivisorClass SurfaceModel::cls(std::string_view name) const {
    return DivisorClass::unit(basis_, basis_->index_of(name));
}

DivisorClass SurfaceModel::zero() const { return DivisorClass::zero(basis_); }

SurfaceModel del_pezzo(int k) {
    if (k < 0 || k > 8) throw precondition_error("del Pezzo point count must be 0..8");
    std::vector<std::string> names{"h"};
    for (int i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
    const std::size_t n = names.size();
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, Rat(0)));
    gram[0][0] = Rat(1);
    for (std::size_t i = 1; i < n; ++i) gram[i][i] = Rat(-1);
    std::vector<Rat> canonical{Rat(-3)};
    canonical.insert(canonical.end(), n - 1, Rat(1));
    return SurfaceModel("dP:" + std::to_string(k), std::move(names), std::move(gram),
                        std::move(canonical), 1, k + 1, 0, 0);
}

SurfaceModel k3_sextic(int r) {
    if (r < 0) throw precondition_error("double point count must be >= 0");
    std::vector<std::string> names{"h"};
    for (int i = 0; i <= r; ++i) names.push_back("C" + std::to_string(i));
    const std::size_t n = names.size();
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, Rat(0)));
    gram[0][0] = Rat(6);
    for (std::size_t i = 1; i < n; ++i) gram[i][i] = Rat(-2);
    return SurfaceModel("k3sextic:" + std::to_string(r), std::move(names), std::move(gram),
                        std::vector<Rat>(n, Rat(0)), 2, 20, 1, 0);
}

SurfaceModel blown_up_quadric(int k) {
    if (k < 0) throw precondition_error("point count must be >= 0");
    std::vector<std::string> names{"h"};
    for (int i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
    const std::size_t n = names.size();
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, Rat(0)));
    gram[0][0] = Rat(2);
    for (std::size_t i = 1; i < n; ++i) gram[i][i] = Rat(-1);
    std::vector<Rat> canonical{Rat(-2)};
    canonical.insert(canonical.end(), n - 1, Rat(1));
    return SurfaceModel("quadric:" + std::to_string(k), std::move(names), std::move(gram),
                        std::move(canonical), 1, k + 2, 0, 0);
}

Rat intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b) {
    ensure_same_lattice(s.zero(), a);
    ensure_same_lattice(s.zero(), b);
    Rat out(0);
    const auto& gram = s.gram();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeff(i) == Rat(0)) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out += a.coeff(i) * gram[i][j] * b.coeff(j);
    }
    return out;
}

namespace {

Int integral_or_throw(const Rat& value, const char* what) {
    if (!is_integral(value))
        throw precondition_error(std::string(what) + " is not an integer: " +
                                 to_string(value));
    return value.numerator();
}

}  // namespace

SurfaceData surface_data(const SurfaceModel& s, const DivisorClass& kw_restr,
                         const std::optional<std::pair<DivisorClass, DivisorClass>>& normal_pieces,
                         std::optional<Int> c2n_override) {
    SurfaceData out;
    out.ks2 = integral_or_throw(intersect(s, s.canonical(), s.canonical()), "K_S^2");
    out.ks_dot_kw = integral_or_throw(intersect(s, s.canonical(), kw_restr), "K_S.K_W");
    out.kw2 = integral_or_throw(intersect(s, kw_restr, kw_restr), "(K_W|S)^2");
    out.chios = s.chi_o();
    out.h11s = s.h11();
    out.h20s = s.h20();
    out.b1s = s.b1();

    if (normal_pieces) {
        // det N = K_S - K_W|S is adjunction; a wrong split is a modeling bug.
        const DivisorClass residual =
            normal_pieces->first + normal_pieces->second - (s.canonical() - kw_restr);
        if (!residual.is_zero())
            throw precondition_error("adjunction violated: n1 + n2 - (K_S - K_W|S) = " +
                                     residual.to_string());
        out.c2n = integral_or_throw(intersect(s, normal_pieces->first, normal_pieces->second),
                                    "c2 of the normal bundle");
        if (c2n_override && *c2n_override != out.c2n)
            throw precondition_error("supplied c2N = " + std::to_string(*c2n_override) +
                                     " contradicts the split pieces (" +
                                     std::to_string(out.c2n) + ")");
    } else if (c2n_override) {
        out.c2n = *c2n_override;
    } else {
        throw precondition_error("c2 of the normal bundle is undetermined: "
                                 "supply split pieces or an explicit value");
    }
    return out;
}

}  // namespace fano4
