#include "doctest.h"

#include "infcc/arc.hpp"
#include "infcc/generators.hpp"

using namespace infcc;

namespace {

Arc random_arc(Rng& rng, int lo, int hi) {
  const int m = uniform_int(rng, lo, hi - 2);
  return Arc{m, uniform_int(rng, m + 2, hi)};
}

}  // namespace

TEST_CASE("arc rejects short arcs") {
  CHECK_THROWS(Arc(0, 1));
  CHECK_NOTHROW(Arc(0, 2));
}

TEST_CASE("crossing") {
  CHECK(crosses(Arc{0, 2}, Arc{1, 3}));
  CHECK(crosses(Arc{1, 3}, Arc{0, 2}));
  CHECK_FALSE(crosses(Arc{0, 2}, Arc{0, 3}));  // shared endpoint
  CHECK_FALSE(crosses(Arc{0, 2}, Arc{2, 4}));
  CHECK_FALSE(crosses(Arc{0, 5}, Arc{1, 3}));  // nested
}

TEST_CASE("spanning") {
  CHECK(spans(Arc{0, 5}, Arc{1, 3}));
  CHECK(spans(Arc{0, 5}, Arc{0, 3}));
  CHECK_FALSE(spans(Arc{0, 3}, Arc{1, 5}));
}

TEST_CASE("hom rule uses the shift by minus one") {
  // Hom(a, b) != 0 iff a crosses Sigma^{-1} b
  CHECK(hom_nonzero(Arc{0, 2}, Arc{0, 2}));
  CHECK(hom_nonzero(Arc{0, 3}, Arc{1, 3}));
  CHECK_FALSE(hom_nonzero(Arc{1, 3}, Arc{0, 3}));
}

TEST_CASE("arc properties on random arcs") {
  Rng rng(7);
  for (int k = 0; k < 2000; ++k) {
    const Arc a = random_arc(rng, -20, 20), b = random_arc(rng, -20, 20);
    const int s = uniform_int(rng, -5, 5);
    CHECK(crosses(a, b) == crosses(b, a));
    CHECK_FALSE(crosses(a, a));
    CHECK(crosses(shift(a, s), shift(b, s)) == crosses(a, b));
    CHECK(shift(shift(a, s), -s) == a);
    CHECK(hom_nonzero(a, b) == crosses(a, shift(b, -1)));
    // Serre duality in a 2-CY category: Ext^1 is symmetric
    CHECK(ext1_dim(a, b) == ext1_dim(b, a));
    if (crosses(a, b)) CHECK_FALSE((spans(a, b) || spans(b, a)));
  }
}

TEST_CASE("crossers sorted along the arc") {
  std::vector<Arc> v{Arc{1, 5}, Arc{1, 6}, Arc{-1, 1}, Arc{3, 5}};
  order_along(Arc{0, 4}, v);
  CHECK(v == std::vector<Arc>{Arc{-1, 1}, Arc{1, 6}, Arc{1, 5}, Arc{3, 5}});
}
