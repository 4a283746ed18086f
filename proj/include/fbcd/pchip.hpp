#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace fbcd {

// Monotone cubic (Fritsch-Carlson) interpolant on uniformly spaced samples
// over [0, length]. Reproduces node values exactly and never overshoots the
// data, which keeps resampled profiles nonnegative.
class PchipUniform {
public:
    PchipUniform(std::vector<double> values, double length)
        : y_(std::move(values)), len_(length) {
        const std::size_t n = y_.size();
        dx_ = len_ / double(n - 1);
        m_.resize(n);
        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / dx_;
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0)
                m_[i] = 0;
            else
                m_[i] = 2 * d[i - 1] * d[i] / (d[i - 1] + d[i]);  // harmonic mean
        }
        // Fritsch-Carlson limiter
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0) {
                m_[i] = m_[i + 1] = 0;
            } else {
                const double al = m_[i] / d[i], be = m_[i + 1] / d[i];
                const double s = al * al + be * be;
                if (s > 9) {
                    const double t = 3 / std::sqrt(s);
                    m_[i] = t * al * d[i];
                    m_[i + 1] = t * be * d[i];
                }
            }
        }
    }

    double operator()(double x) const {
        if (x <= 0) return y_.front();
        if (x >= len_) return y_.back();
        const std::size_t i = std::min<std::size_t>(std::size_t(x / dx_), y_.size() - 2);
        const double t = (x - double(i) * dx_) / dx_;
        const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        const double h10 = t * (1 - t) * (1 - t);
        const double h01 = t * t * (3 - 2 * t);
        const double h11 = t * t * (t - 1);
        return h00 * y_[i] + h10 * dx_ * m_[i] + h01 * y_[i + 1] + h11 * dx_ * m_[i + 1];
    }

private:
    std::vector<double> y_, m_;
    double len_, dx_;
};

} // namespace fbcd
