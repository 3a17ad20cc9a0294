#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gi0/model.hpp"

namespace gi0 {

/// Contamination mixture description. `none` is the pure model; the other
/// cases replace each observation independently with probability epsilon by
/// (1) a draw from a different-roughness model, (2) a fixed constant, or
/// (3) a draw with the scale inflated by 10^k.
struct ContaminationSpec {
    enum class Case { none, case1, case2, case3 };

    Case kind = Case::none;
    double epsilon = 0.0;
    double alpha2 = -15.0;  // case1
    double c_value = 100.0; // case2
    int k_exponent = 2;     // case3

    static ContaminationSpec pure();
    static ContaminationSpec make_case1(double epsilon, double alpha2);
    static ContaminationSpec make_case2(double epsilon, double c_value);
    static ContaminationSpec make_case3(double epsilon, int k_exponent);

    void validate() const;
    bool operator==(const ContaminationSpec&) const = default;
};

const char* to_string(ContaminationSpec::Case c);

/// Everything needed to regenerate a synthetic sample bit-for-bit.
struct Provenance {
    std::uint64_t seed = 0;
    Gi0Params params;
    ContaminationSpec contamination;
};

/// Ordered positive intensity draws.
class Sample {
  public:
    explicit Sample(std::vector<double> values,
                    std::optional<Provenance> provenance = std::nullopt);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const std::optional<Provenance>& provenance() const { return provenance_; }

  private:
    std::vector<double> values_;
    std::optional<Provenance> provenance_;
};

/// n independent draws of Z = X * Y with X the reciprocal-Gamma backscatter
/// (X = gamma/G, G ~ Gamma(-alpha, rate 1)) and Y ~ Gamma(L, rate L) speckle.
/// Deterministic in (p, n, seed).
Sample gi0_sample(const Gi0Params& p, std::size_t n, std::uint64_t seed);

}  // namespace gi0
