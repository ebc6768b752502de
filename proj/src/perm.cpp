#include "kradical/perm.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kradical {

bool valid_perm(const std::vector<int>& images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(n);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      int b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("cycle point out of range");
      p.im[a] = b;
    }
  }
  if (!valid_perm(p.im)) throw std::invalid_argument("cycles overlap");
  return p;
}

std::vector<int> Perm::cycle_lengths() const {
  std::vector<char> seen(im.size(), 0);
  std::vector<int> lens;
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = im[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::string Perm::cycle_type() const {
  auto lens = cycle_lengths();
  std::map<int, int, std::greater<int>> mult;
  for (int l : lens) mult[l]++;
  std::ostringstream os;
  bool first = true;
  for (auto [base, count] : mult) {
    if (!first) os << ' ';
    os << base << '^' << count;
    first = false;
  }
  return os.str();
}

std::string Perm::one_line() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n(); ++i) {
    if (i) os << ' ';
    os << im[i];
  }
  os << ']';
  return os.str();
}

}  // namespace kradical
