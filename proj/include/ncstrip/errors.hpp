#pragma once

#include <stdexcept>

namespace ncstrip {

// An argument violates the precondition of an operation: an object that is
// not a member of the family it claims to be in, a parameter out of range.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A textual literal (shape, path, partition, sequence) could not be parsed.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ncstrip
