#pragma once

#include <stdexcept>
#include <string>

namespace lamplight {

enum class Errc {
    invalid_parameter,
    not_connected,
    unknown_vertex,
    not_a_tree,
    instance_too_large,
    too_large,
    precondition_violation,
    degenerate_domain,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_parameter:      return "invalid-parameter";
        case Errc::not_connected:          return "not-connected";
        case Errc::unknown_vertex:         return "unknown-vertex";
        case Errc::not_a_tree:             return "not-a-tree";
        case Errc::instance_too_large:     return "instance-too-large";
        case Errc::too_large:              return "too-large";
        case Errc::precondition_violation: return "precondition-violation";
        case Errc::degenerate_domain:      return "degenerate-domain";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace lamplight
