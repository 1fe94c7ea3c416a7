#include "hecke/specht.hpp"

namespace hecke {

long count_standard_tableaux(const Partition& lambda) {
  // place 1, 2, ... n in turn at the end of any row that stays a partition shape
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  long count = 0;
  auto place = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (std::size_t r = 0; r < filled.size(); ++r) {
      if (filled[r] == lambda[static_cast<int>(r)]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      ++filled[r];
      self(self, remaining - 1);
      --filled[r];
    }
  };
  place(place, lambda.size());
  return count;
}

}  // namespace hecke
