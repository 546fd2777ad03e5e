#include "hypercyclic/errors.hpp"

namespace hypercyclic {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace hypercyclic
