#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "noonsi/errors.hpp"
#include "noonsi/units.hpp"

namespace noonsi {

/// A uniform, strictly increasing sample axis (node values are cell
/// centers of the rectangle quadrature rule).
class Axis {
public:
    Axis() = default;

    static Axis linspace(double first, double last, std::size_t n) {
        if (n < 2) throw ConfigError("axis needs at least 2 points");
        if (!(first < last)) throw ConfigError("axis bounds must be increasing");
        Axis a;
        a.values_.resize(n);
        const double step = (last - first) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            a.values_[i] = first + step * static_cast<double>(i);
        a.values_.back() = last;
        a.spacing_ = step;
        return a;
    }

    static Axis from_values(std::vector<double> v) {
        Axis a;
        a.values_ = std::move(v);
        a.validate();
        a.spacing_ = a.values_.size() > 1 ? a.values_[1] - a.values_[0] : 0.0;
        return a;
    }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double front() const { return values_.front(); }
    double back() const { return values_.back(); }
    double spacing() const { return spacing_; }
    const std::vector<double>& values() const { return values_; }

    void validate() const {
        if (values_.size() < 2) throw ConfigError("axis needs at least 2 points");
        const double step = values_[1] - values_[0];
        if (!(step > 0.0)) throw ConfigError("axis must be strictly increasing");
        for (std::size_t i = 1; i < values_.size(); ++i) {
            const double d = values_[i] - values_[i - 1];
            if (!(d > 0.0)) throw ConfigError("axis must be strictly increasing");
            if (std::abs(d - step) > 1e-12 * std::abs(step))
                throw ConfigError("axis spacing not uniform within 1e-12 relative");
        }
    }

    bool identical(const Axis& other, double rel_tol = 1e-12) const {
        if (size() != other.size()) return false;
        for (std::size_t i = 0; i < size(); ++i) {
            const double scale = std::max(std::abs(values_[i]), std::abs(other.values_[i]));
            if (std::abs(values_[i] - other.values_[i]) > rel_tol * scale) return false;
        }
        return true;
    }

private:
    std::vector<double> values_;
    double spacing_ = 0.0;
};

/// Rectangular angular-frequency grid for (signal, idler) amplitudes,
/// in rad/ps.
struct FrequencyGrid {
    Axis signal;
    Axis idler;

    /// Axes covering [lambda_min, lambda_max] nm, uniform in angular
    /// frequency, identical for signal and idler.
    static FrequencyGrid from_wavelength_window(double lambda_min_nm,
                                                double lambda_max_nm,
                                                std::size_t points_per_axis) {
        if (!(lambda_min_nm > 0.0) || !(lambda_max_nm > lambda_min_nm))
            throw ConfigError("wavelength window must satisfy 0 < min < max");
        const double w_lo = angular_frequency_from_wavelength(lambda_max_nm);
        const double w_hi = angular_frequency_from_wavelength(lambda_min_nm);
        FrequencyGrid g;
        g.signal = Axis::linspace(w_lo, w_hi, points_per_axis);
        g.idler = g.signal;
        return g;
    }

    void validate() const {
        signal.validate();
        idler.validate();
    }

    bool square_symmetric() const { return signal.identical(idler); }

    /// Quadrature weight of one grid cell (rectangle rule on the uniform grid).
    double cell_area() const { return signal.spacing() * idler.spacing(); }

    /// True when the two axes share one spacing, so sums omega_s + omega_i
    /// collapse onto 2N-1 distinct values.
    bool equal_spacing(double rel_tol = 1e-12) const {
        const double a = signal.spacing(), b = idler.spacing();
        return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
    }
};

} // namespace noonsi
