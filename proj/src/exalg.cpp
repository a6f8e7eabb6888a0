#include "mackey/exalg.hpp"

namespace mackey {

namespace {

bool extend(const IntMatrix& a, const IntMatrix& b, std::vector<int>& perm, std::vector<bool>& used, int i) {
  int n = static_cast<int>(b.size());
  if (i == n) return true;
  for (int c = 0; c < n; ++c) {
    if (used[c] || a[c][c] != b[i][i]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = a[c][perm[j]] == b[i][j] && a[perm[j]][c] == b[j][i];
    if (!ok) continue;
    perm[i] = c;
    used[c] = true;
    if (extend(a, b, perm, used, i + 1)) return true;
    used[c] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> match_up_to_permutation(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) return std::nullopt;
  int n = static_cast<int>(a.size());
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  if (extend(a, b, perm, used, 0)) return perm;
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "undecided";
  }
}

}  // namespace mackey
