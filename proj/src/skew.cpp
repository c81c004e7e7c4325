#include "affgebra/skew.hpp"

namespace affgebra {

std::string tuple_string(const IndexTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

std::vector<IndexTuple> increasing_tuples(int dim, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > dim) return out;
  IndexTuple t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  for (;;) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == dim - k + i) --i;
    if (i < 0) return out;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

}  // namespace affgebra
