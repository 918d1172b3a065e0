#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace fano4 {

/// Every quantity in this library is an exact rational; there is no floating
/// point anywhere.  Magnitudes stay tiny (a few thousand at most), so int64
/// components are ample.
using Int = long long;
using Rat = boost::rational<Int>;

/// True iff the value is an integer (denominator 1 after normalization).
[[nodiscard]] inline bool is_integral(const Rat& q) { return q.denominator() == 1; }

/// Narrow to an integer; throws std::domain_error when the value is fractional.
[[nodiscard]] Int as_integer(const Rat& q);

/// Render "p" when the denominator is 1, otherwise "p/q".
[[nodiscard]] std::string to_string(const Rat& q);

}  // namespace fano4
