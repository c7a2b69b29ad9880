#include "mht/example_instances.hpp"

namespace mht {

RandomizedKernel ternary_likelihood() {
    return RandomizedKernel(3, 3,
                            {0.40, 0.27, 0.33,
                             0.27, 0.40, 0.33,
                             0.33, 0.27, 0.40});
}

JointDistribution ternary_example() {
    RandomizedKernel w = ternary_likelihood();
    std::vector<double> mass(9);
    for (int v = 0; v < 3; ++v)
        for (int y = 0; y < 3; ++y)
            mass[static_cast<std::size_t>(v) * 3 + y] = w(v, y) / 3.0;
    return JointDistribution(3, 3, std::move(mass), true);
}

JointDistribution ternary_two_observation() {
    RandomizedKernel w = ternary_likelihood();
    std::vector<double> mass(27);
    for (int v = 0; v < 3; ++v)
        for (int y1 = 0; y1 < 3; ++y1)
            for (int y2 = 0; y2 < 3; ++y2)
                mass[static_cast<std::size_t>(v) * 9 + y1 * 3 + y2] =
                    w(v, y1) * w(v, y2) / 3.0;
    return JointDistribution(3, 9, std::move(mass), true);
}

MetricMatrix first_observation_metric() {
    RandomizedKernel w = ternary_likelihood();
    std::vector<double> values(27);
    for (int v = 0; v < 3; ++v)
        for (int y1 = 0; y1 < 3; ++y1)
            for (int y2 = 0; y2 < 3; ++y2)
                values[static_cast<std::size_t>(v) * 9 + y1 * 3 + y2] =
                    w(v, y1);
    return MetricMatrix{3, 9, std::move(values)};
}

} // namespace mht
