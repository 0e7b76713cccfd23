#ifndef NCVX_ERROR_HPP
#define NCVX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ncvx {

/// Contract violation on an input (malformed polygon, feature outside S, ...).
/// The code is a stable machine-readable tag, e.g. "FeatureOutsideS".
class InputError : public std::runtime_error {
public:
    InputError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Internal invariant broke. Always a bug, never an input problem.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const char* code, const std::string& what) {
    if (!cond) throw InputError(code, what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

} // namespace ncvx

#endif
