#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fano4/rational.hpp"

namespace fano4 {

/// An ordered, named basis of a divisor lattice.  The id distinguishes
/// lattices; classes may only be combined within one lattice.
class Basis {
public:
    Basis(std::string id, std::vector<std::string> names);

    [[nodiscard]] const std::string& id() const { return id_; }
    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    /// Index of a named element; throws lattice_error when absent.
    [[nodiscard]] std::size_t index_of(std::string_view name) const;

    friend bool operator==(const Basis& a, const Basis& b) {
        return a.id_ == b.id_ && a.names_ == b.names_;
    }

private:
    std::string id_;
    std::vector<std::string> names_;
};

using BasisPtr = std::shared_ptr<const Basis>;

[[nodiscard]] BasisPtr make_basis(std::string id, std::vector<std::string> names);

/// Exact rational coefficient vector over a named lattice basis.
/// Immutable value semantics; all arithmetic is componentwise and exact.
class DivisorClass {
public:
    DivisorClass(BasisPtr basis, std::vector<Rat> coeffs);

    [[nodiscard]] static DivisorClass zero(BasisPtr basis);
    /// The basis element with the given index as a class.
    [[nodiscard]] static DivisorClass unit(BasisPtr basis, std::size_t index);

    [[nodiscard]] const BasisPtr& basis() const { return basis_; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return coeffs_; }
    [[nodiscard]] const Rat& coeff(std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] bool same_lattice(const DivisorClass& other) const;

    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator-=(const DivisorClass& other);
    DivisorClass& operator*=(const Rat& scalar);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rat& s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator*(DivisorClass a, const Rat& s) { return a *= s; }
    [[nodiscard]] DivisorClass operator-() const;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b);
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

    /// Human-readable form, e.g. "5H - 3D0 - E" or "0".
    [[nodiscard]] std::string to_string() const;

private:
    BasisPtr basis_;
    std::vector<Rat> coeffs_;
};

/// Throws lattice_error (with both basis ids) unless a and b share a lattice.
void ensure_same_lattice(const DivisorClass& a, const DivisorClass& b);

/// True iff lhs equals the exact linear combination of the terms.
/// Purely linear: formal symbols without intersection data are fine here.
[[nodiscard]] bool verify_linear_identity(
    const DivisorClass& lhs, const std::vector<std::pair<Rat, DivisorClass>>& terms);

}  // namespace fano4
