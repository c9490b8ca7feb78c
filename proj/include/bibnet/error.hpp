#ifndef BIBNET_ERROR_HPP
#define BIBNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bibnet {

/// Raised for any defect in input data: malformed rows, broken invariants,
/// unreadable files. The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bibnet

#endif
