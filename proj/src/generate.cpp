#include "wil/generate.hpp"

#include <cmath>
#include <random>

namespace wil {

namespace {

void check_range(const Range& r, const char* what) {
  if (!(r.lo > 0.0) || !(r.lo <= r.hi) || !std::isfinite(r.hi))
    throw Error(std::string("invalid ") + what + " range: need 0 < min <= max");
}

}  // namespace

InstanceFile generate_instance(const GenerateSpec& spec) {
  if (spec.n < 1) throw Error("item count must be >= 1");
  check_range(spec.size, "size");
  check_range(spec.mass, "mass");

  std::mt19937_64 engine(spec.seed);
  // Fixed mapping from raw bits so files match across standard libraries.
  auto draw = [&engine](const Range& r) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return r.lo + (r.hi - r.lo) * u;
  };

  InstanceFile inst;
  inst.kind = spec.kind;
  inst.seed = spec.seed;
  inst.name = spec.name.empty() ? std::string(to_string(spec.kind)) + "-" + std::to_string(spec.n) +
                                      "-s" + std::to_string(spec.seed)
                                : spec.name;
  for (int i = 1; i <= spec.n; ++i) {
    if (spec.kind == ItemKind::Circles) {
      const double r = draw(spec.size);
      inst.circles.items.push_back({i, r, draw(spec.mass)});
    } else {
      const double a = draw(spec.size);
      const double b = draw(spec.size);
      inst.rects.items.push_back({i, a, b, draw(spec.mass)});
    }
  }
  return inst;
}

}  // namespace wil
