#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "errors.hpp"
#include "multgroup.hpp"
#include "pencil.hpp"

namespace mcc {

struct RunConfig {
  std::uint64_t seed = 42;
  long enum_cap = default_enum_cap;
  long digit_cap = default_digit_cap;
  std::size_t dim_cap = ExactLimits{}.max_dim;
  long precision = 20;
  std::string output;

  void validate() const {
    if (enum_cap <= 0 || digit_cap <= 0 || dim_cap == 0 || precision <= 0) throw domain_error("caps and precision must be positive");
  }

  StructuralRankOptions rank_options() const {
    StructuralRankOptions o;
    o.seed = seed;
    o.limits.max_dim = dim_cap;
    return o;
  }

  /// Applies MCC_ENUM_CAP, MCC_DIGIT_CAP, MCC_DIM_CAP and MCC_PRECISION when set.
  void apply_env() {
    auto read = [](const char* name, auto& slot) {
      const char* v = std::getenv(name);
      if (v == nullptr || *v == '\0') return;
      char* end = nullptr;
      const long long x = std::strtoll(v, &end, 10);
      if (*end != '\0' || x <= 0) throw domain_error(std::string(name) + " must be a positive integer");
      slot = static_cast<std::remove_reference_t<decltype(slot)>>(x);
    };
    read("MCC_ENUM_CAP", enum_cap);
    read("MCC_DIGIT_CAP", digit_cap);
    read("MCC_DIM_CAP", dim_cap);
    read("MCC_PRECISION", precision);
  }
};

}  // namespace mcc
