#include "zzm/permutation.hpp"

#include "zzm/error.hpp"

namespace zzm {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw Error(ErrorKind::Precondition, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k] - 1, b = c[(k + 1) % c.size()] - 1;
      if (a < 0 || a >= n || b < 0 || b >= n) throw Error(ErrorKind::Precondition, "cycle entry out of range");
      img[a] = b;
    }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw Error(ErrorKind::Precondition, "permutation sizes differ");
  std::vector<int> img(f.size());
  for (int i = 0; i < f.size(); ++i) img[i] = f(g(i));
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int e = i; !seen[e]; e = image_[e]) {
      seen[e] = true;
      c.push_back(e);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_index() const {
  std::vector<int> idx(image_.size(), -1);
  auto cs = cycles();
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (int e : cs[k]) idx[e] = static_cast<int>(k);
  return idx;
}

std::string Permutation::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(c[k] + 1);
    }
    s += ")";
  }
  return s;
}

MatXi Permutation::matrix() const {
  MatXi m = MatXi::Zero(size(), size());
  for (int e = 0; e < size(); ++e) m(image_[e], e) = 1;
  return m;
}

}  // namespace zzm
