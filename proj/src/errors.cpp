#include "fano4/errors.hpp"

namespace fano4 {

parse_error::parse_error(int line_no, int column_no, const std::string& message)
    : error("line " + std::to_string(line_no) + ", column " + std::to_string(column_no) +
            ": " + message),
      line(line_no),
      column(column_no) {}

tower_error::tower_error(int step_no, const std::string& message)
    : precondition_error("step " + std::to_string(step_no) + ": " + message),
      step(step_no) {}

}  // namespace fano4
