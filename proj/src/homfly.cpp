#include "tangle/homfly.hpp"

#include <mutex>
#include <unordered_map>

#include "tangle/canonical.hpp"
#include "tangle/skein.hpp"

namespace tangle {

namespace {

ColoredDiagram monochrome(const Diagram& d) { return ColoredDiagram(d, Coloration(d.components().size(), 0)); }

class HomflyRecursion {
 public:
  HomflyValue value(const ColoredDiagram& d) {
    const Diagram& g = d.diagram;
    const int circles = static_cast<int>(g.components().size());
    const HomflyValue l = vars::l(), m = vars::m();
    if (g.node_count() == 0) return (-(l + l.inverse()) / m).pow(circles - 1);
    const std::string key = canonical_form(d);
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    HomflyValue out;
    const int n = first_bad_crossing(g);
    if (n < 0) {
      out = (-(l + l.inverse()) / m).pow(circles - 1);
    } else {
      const HomflyValue switched = value(switch_crossing(d, n));
      const HomflyValue smoothed = value(oriented_smoothing(d, n));
      if (g.node(n).kind == NodeKind::Positive)
        out = -(l * l).inverse() * switched - (m / l) * smoothed;  // P+ = -l^-2 P- - l^-1 m P0
      else
        out = -(l * l) * switched - (l * m) * smoothed;  // P- = -l^2 P+ - l m P0
    }
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(key, out).first->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, HomflyValue> memo_;
};

}  // namespace

HomflyValue homfly_polynomial(const Diagram& d) {
  if (d.singular_count() > 0) throw DiagramError("homfly_polynomial: singular vertices are not supported");
  static HomflyRecursion rec;
  return rec.value(monochrome(d));
}

Rational homfly_specialize(const HomflyValue& p) {
  const Rational i = vars::i(), s = vars::s(), w = vars::w();
  std::array<Rational, HomflyVars::count> image{};
  image[HomflyVars::l] = i / (w * s);
  image[HomflyVars::m] = i * (Rational(1) - s * s) / s;
  return substitute<HomflyVars, SwxVars>(p, image);
}

bool substitution_check(const Diagram& d, const Coloration& c) {
  for (int x : c)
    if (x != c.front()) throw DiagramError("substitution_check: needs a single-colored link");
  return rf_equals(homfly_specialize(homfly_polynomial(d)), invariant(monochrome(d)));
}

bool is_laurent_in_l(const HomflyValue& p) { return p.den().terms().size() == 1; }

}  // namespace tangle
