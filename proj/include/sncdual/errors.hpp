#pragma once

#include <stdexcept>
#include <string>

namespace sncdual {

/// Input data failed structural validation.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A named cell, stratum or component does not exist.
class not_found_error : public std::runtime_error {
public:
    explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

/// The combinatorial data does not determine the requested transformation.
/// Raised instead of guessing when incidence information is missing.
class insufficient_incidence_error : public std::runtime_error {
public:
    explicit insufficient_incidence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sncdual
