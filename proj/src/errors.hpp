#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace pipeflow {

enum class ErrorKind {
    Config,        // bad configuration or parameters outside contracts
    Domain,        // argument outside the supported mathematical domain
    Input,         // inconsistent or incompatible input data
    Regime,        // operation invoked outside its (flux, slip, n) regime
    Numeric,       // linear algebra failure, singular operator, overflow
    NonConverged,  // iteration exceeded its budget or diverged
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <typename T, typename... Rest>
void format_into(std::ostringstream& os, const T& head, const Rest&... rest) {
    os << head;
    format_into(os, rest...);
}
}  // namespace detail

template <typename... Args>
[[noreturn]] void fail(ErrorKind kind, const Args&... args) {
    std::ostringstream os;
    os.precision(16);
    detail::format_into(os, args...);
    throw Error(kind, os.str());
}

template <typename... Args>
void require(bool ok, ErrorKind kind, const Args&... args) {
    if (!ok) fail(kind, args...);
}

}  // namespace pipeflow
