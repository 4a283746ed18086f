#pragma once

#include <cmath>

#include "fbcd/errors.hpp"

namespace fbcd {

// Model constants of the two-species system.
struct Params {
    double d1 = 1.0, d2 = 1.0;  // diffusivities
    double r1 = 1.0, r2 = 1.0;  // growth rates
    double k = 0.0, h = 0.0;    // competition coefficients (u suffers k*v, v suffers h*u)
    double mu1 = 1.0, mu2 = 1.0;  // front coefficients in the Stefan conditions

    void validate() const {
        auto pos = [](double x, const char* name) {
            if (!(x > 0) || !std::isfinite(x)) throw ValueError(std::string(name) + " must be positive and finite");
        };
        pos(d1, "d1"); pos(d2, "d2");
        pos(r1, "r1"); pos(r2, "r2");
        pos(mu1, "mu1"); pos(mu2, "mu2");
        if (!(k >= 0) || !std::isfinite(k)) throw ValueError("k must be nonnegative and finite");
        if (!(h >= 0) || !std::isfinite(h)) throw ValueError("h must be nonnegative and finite");
    }
};

} // namespace fbcd
