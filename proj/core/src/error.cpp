#include "presclass/error.hpp"

namespace presclass {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)),
      position_(position) {}

EnumerationExceeded::EnumerationExceeded(std::size_t max_cosets)
    : Error("coset enumeration exceeded " + std::to_string(max_cosets) +
            " cosets"),
      max_cosets_(max_cosets) {}

}  // namespace presclass
