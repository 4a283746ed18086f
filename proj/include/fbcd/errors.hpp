#pragma once

#include <stdexcept>
#include <string>

namespace fbcd {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// semiwave
struct NoBracket : Error { using Error::Error; };
struct Nonconvergence : Error { using Error::Error; };
struct UndefinedRegion : Error { using Error::Error; };

// fbsolver
struct BadInitialData : Error { using Error::Error; };
struct NumericalBlowup : Error { using Error::Error; };
struct NegativityBreach : Error { using Error::Error; };
struct FrontCollapse : Error { using Error::Error; };

// analysis
struct DegenerateCompetition : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct GapTooSmall : Error { using Error::Error; };
struct ImaginaryRoot : Error { using Error::Error; };
struct InfeasibleBarrier : Error { using Error::Error; };

// config
struct SchemaError : Error { using Error::Error; };
struct ValueError : Error { using Error::Error; };

} // namespace fbcd
