#pragma once

#include <algorithm>
#include <vector>

#include "ybhecke/symgroup/permutation.hpp"

namespace ybhecke {

// Box (i, mu(j)) of the diagram for an inversion i < j, mu(i) > mu(j).
struct RotheBox {
  int column;     // i
  int height;     // mu(j)
  int large;      // mu(i), first entry of the label (mu(i) mu(j))
  int small;      // mu(j)
  int generator;  // k = i + number of boxes below in the same column

  friend bool operator==(const RotheBox&, const RotheBox&) = default;
};

struct RotheDiagram {
  Permutation mu;
  std::vector<RotheBox> boxes;  // in reading order
};

// Boxes listed in reading order: rows from the top (largest height) down,
// left to right within a row.
inline RotheDiagram rothe_diagram(const Permutation& mu) {
  int n = mu.rank();
  RotheDiagram d{mu, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (mu(i) > mu(j)) d.boxes.push_back({i, mu(j), mu(i), mu(j), 0});
  for (auto& b : d.boxes) {
    int below = 0;
    for (const auto& c : d.boxes) below += c.column == b.column && c.height < b.height;
    b.generator = b.column + below;
  }
  std::sort(d.boxes.begin(), d.boxes.end(), [](const RotheBox& a, const RotheBox& b) {
    return a.height != b.height ? a.height > b.height : a.column < b.column;
  });
  return d;
}

}  // namespace ybhecke
