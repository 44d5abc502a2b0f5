#ifndef ECCX_ERRORS_HPP
#define ECCX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eccx {

// Input-side failures: bad bytes, bad parameters, operands that do not
// have the structure an operation requires.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

class parameter_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class structure_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class connectivity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The operands violate a theorem's hypotheses (non-regular, complete where
// a non-complete graph is required, t below the smallest admissible value).
class hypothesis_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller handed a matrix that breaks an operation's contract
// (asymmetric where symmetry is required, complex spectrum where a real
// one is guaranteed, non-equitable partition).
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class partition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eccx

#endif
