#pragma once

#include <cstddef>
#include <vector>

namespace macir {

/// Coefficients theta_1..theta_q of an MA(q) polynomial
/// theta(B) = 1 - theta_1 B - ... - theta_q B^q, q >= 1.
struct MaCoefficients {
    std::vector<double> coeffs;

    MaCoefficients() = default;
    explicit MaCoefficients(std::vector<double> c) : coeffs(std::move(c)) {}
    MaCoefficients(std::initializer_list<double> c) : coeffs(c) {}

    std::size_t order() const { return coeffs.size(); }
};

/// Transformed parameters zeta_1..zeta_q, each confined to [-1, 1].
/// The open cube maps one-to-one onto the invertible region; the closed
/// cube covers its boundary as well.
struct PartialParams {
    std::vector<double> zetas;

    PartialParams() = default;
    explicit PartialParams(std::vector<double> z) : zetas(std::move(z)) {}
    PartialParams(std::initializer_list<double> z) : zetas(z) {}

    std::size_t order() const { return zetas.size(); }
};

/// Outcome of the boundary test |1 - |zeta_i|| < epsilon.
struct BoundaryReport {
    bool on_boundary = false;
    std::vector<bool> flags;
    double epsilon = 0.0;
};

/// Observed series z_1..z_n.
struct TimeSeries {
    std::vector<double> values;

    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> v) : values(std::move(v)) {}
    TimeSeries(std::initializer_list<double> v) : values(v) {}

    std::size_t size() const { return values.size(); }
};

}  // namespace macir
