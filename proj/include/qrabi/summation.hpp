#pragma once

#include <cmath>

namespace qrabi {

// Neumaier-compensated accumulator. Observable sums must not depend on
// evaluation order at the 1e-10 tolerances the oracle comparisons use.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace qrabi
