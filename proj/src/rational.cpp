#include "fano4/rational.hpp"

#include <stdexcept>

namespace fano4 {

Int as_integer(const Rat& q) {
    if (!is_integral(q)) throw std::domain_error("not an integer: " + to_string(q));
    return q.numerator();
}

std::string to_string(const Rat& q) {
    if (is_integral(q)) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace fano4
