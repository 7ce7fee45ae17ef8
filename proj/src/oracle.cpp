#include "qsing/oracle.hpp"

namespace qsing::oracle {

std::vector<int> representative_permutation(const CycleType &t) {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(t.degree()));
  int start = 0;
  for (int len : t.parts()) {
    for (int j = 0; j < len; ++j)
      images.push_back(start + (j + 1) % len);
    start += len;
  }
  return images;
}

} // namespace qsing::oracle
