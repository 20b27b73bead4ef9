#ifndef SQG_ERRORS_HPP
#define SQG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqg {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument values (bad (n,k), label not in the required family, ...).
struct parameter_error : error {
    explicit parameter_error(const std::string& msg) : error(msg) {}
};

/// Structurally inconsistent data (dangling vertex ids, bad identification maps, ...).
struct structural_error : error {
    explicit structural_error(const std::string& msg) : error(msg) {}
};

/// A recursive build step failed a runtime assertion. The message names the
/// step and the offending vertex or face.
struct construction_error : error {
    explicit construction_error(const std::string& msg) : error(msg) {}
};

} // namespace sqg

#endif
