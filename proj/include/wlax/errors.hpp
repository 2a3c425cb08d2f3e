#pragma once

#include <stdexcept>
#include <string>

namespace wlax {

enum class Errc {
    InvalidFamily,
    InvalidPartition,
    ConstructionFailed,
    DegenerateForm,
    PositiveWeight,
    ShapeMismatch,
    NonScalarLeading,
    SingularLeading,
    CompressionNotInvertible,
    PivotNotInvertible,
    FormMissing,
    OrthogonalityViolation,
    UnsupportedFamily,
    InvalidRectangle,
    InvalidInput,
};

const char* errc_name(Errc c);

// Errors caused by bad user input rather than by a failed computation.
bool is_config_error(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace wlax
