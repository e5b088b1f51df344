#pragma once

namespace noonsi {

/// Kahan compensated accumulator. Used where contracts pin sums to 1e-9
/// or tighter; summation order is always the row-major grid order, so
/// results do not depend on evaluation strategy.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace noonsi
