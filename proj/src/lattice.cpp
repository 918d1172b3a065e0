#include "fano4/lattice.hpp"

#include <utility>

#include "fano4/errors.hpp"

namespace fano4 {

Basis::Basis(std::string id, std::vector<std::string> names)
    : id_(std::move(id)), names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw lattice_error("basis '" + id_ + "': duplicate name '" + names_[i] + "'");
}

std::size_t Basis::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw lattice_error("basis '" + id_ + "' has no element named '" + std::string(name) + "'");
}

BasisPtr make_basis(std::string id, std::vector<std::string> names) {
    return std::make_shared<const Basis>(std::move(id), std::move(names));
}

DivisorClass::DivisorClass(BasisPtr basis, std::vector<Rat> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (!basis_) throw lattice_error("class without a basis");
    if (coeffs_.size() != basis_->size())
        throw lattice_error("basis '" + basis_->id() + "' has " +
                            std::to_string(basis_->size()) + " elements, got " +
                            std::to_string(coeffs_.size()) + " coefficients");
}

DivisorClass DivisorClass::zero(BasisPtr basis) {
    const std::size_t n = basis ? basis->size() : 0;
    return DivisorClass(std::move(basis), std::vector<Rat>(n, Rat(0)));
}

DivisorClass DivisorClass::unit(BasisPtr basis, std::size_t index) {
    DivisorClass out = zero(std::move(basis));
    out.coeffs_.at(index) = Rat(1);
    return out;
}

bool DivisorClass::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != Rat(0)) return false;
    return true;
}

bool DivisorClass::same_lattice(const DivisorClass& other) const {
    return basis_ == other.basis_ || *basis_ == *other.basis_;
}

void ensure_same_lattice(const DivisorClass& a, const DivisorClass& b) {
    if (!a.same_lattice(b))
        throw lattice_error("classes live in different lattices ('" + a.basis()->id() +
                            "' vs '" + b.basis()->id() + "')");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    ensure_same_lattice(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
    ensure_same_lattice(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& scalar) {
    for (Rat& c : coeffs_) c *= scalar;
    return *this;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass out = *this;
    for (Rat& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.same_lattice(b) && a.coeffs_ == b.coeffs_;
}

std::string DivisorClass::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == Rat(0)) continue;
        const Rat mag = c < Rat(0) ? -c : c;
        if (out.empty()) {
            if (c < Rat(0)) out += "-";
        } else {
            out += c < Rat(0) ? " - " : " + ";
        }
        if (mag != Rat(1)) out += fano4::to_string(mag);
        out += basis_->name(i);
    }
    return out.empty() ? "0" : out;
}

bool verify_linear_identity(const DivisorClass& lhs,
                            const std::vector<std::pair<Rat, DivisorClass>>& terms) {
    DivisorClass sum = DivisorClass::zero(lhs.basis());
    for (const auto& [coefficient, cls] : terms) sum += coefficient * cls;
    return sum == lhs;
}

}  // namespace fano4
