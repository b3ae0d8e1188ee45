#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sasaki {

// Domain error with a stable machine-readable name.  The CLI maps these to
// {"error": {"module": ..., "name": ..., "message": ...}} and exit code 1.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string module, std::string name, const std::string& what)
        : std::runtime_error(what), module_(std::move(module)), name_(std::move(name)) {}

    const std::string& module_name() const { return module_; }
    const std::string& error_name() const { return name_; }

private:
    std::string module_;
    std::string name_;
};

[[noreturn]] inline void fail(const char* module, const char* name, const std::string& msg) {
    throw DomainError(module, name, msg);
}

} // namespace sasaki
