#include "gridcast/core/split.hpp"

#include <cmath>
#include <stdexcept>

namespace gridcast::core {

SplitSpec chronological_split(int T, const std::array<double, 3>& fractions) {
    double sum = 0.0;
    for (double f : fractions) {
        if (f <= 0.0) throw std::invalid_argument("split fractions must be positive");
        sum += f;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("split fractions must sum to 1");
    }
    if (T < 3) throw std::invalid_argument("need T >= 3 for a three-way split");

    // Floor allocation; the epsilon guards against 0.999... rounding artifacts.
    int sizes[3];
    int total = 0;
    for (int i = 0; i < 3; ++i) {
        sizes[i] = static_cast<int>(std::floor(T * fractions[static_cast<size_t>(i)] + 1e-9));
        total += sizes[i];
    }
    sizes[0] += T - total;  // remainder to train

    SplitSpec s;
    s.train_begin = 0;
    s.train_end = sizes[0];
    s.val_begin = s.train_end;
    s.val_end = s.val_begin + sizes[1];
    s.test_begin = s.val_end;
    s.test_end = s.test_begin + sizes[2];
    return s;
}

}  // namespace gridcast::core
