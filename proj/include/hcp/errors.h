#pragma once

#include <stdexcept>
#include <string>

namespace hcp {

enum class Errc {
    CollinearOverlap,
    SharedEndpoint,
    DegenerateInput,
    ConfigMismatch,
    ConstructionFailed,
    InvalidN,
    NonHamiltonian,
    NotSeparable,
    MarchFailed,
    StillCrossing,
    NoJoinFound,
    TooLarge,
    MalformedInput,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace hcp
