#include "zzm/zebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "zzm/error.hpp"

namespace zzm {

const std::array<Vec2i, 6>& base_directions() {
  static const std::array<Vec2i, 6> dirs = {Vec2i(-3, 1), Vec2i(-1, 1), Vec2i(0, 2),
                                            Vec2i(1, 1),  Vec2i(3, 1),  Vec2i(2, 0)};
  return dirs;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  // Each monomial is a sorted set of frequency indices into `freqs`.
  std::vector<std::vector<int>> parse(std::vector<Frequency>& freqs) {
    std::vector<std::vector<int>> terms;
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    terms.push_back(term(freqs));
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
      terms.push_back(term(freqs));
      skip_ws();
    }
    return terms;
  }

 private:
  std::vector<int> term(std::vector<Frequency>& freqs) {
    std::set<int> factors;
    factors.insert(factor(freqs));
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      factors.insert(factor(freqs));
      skip_ws();
    }
    return {factors.begin(), factors.end()};
  }

  int factor(std::vector<Frequency>& freqs) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'z') fail("expected zebra factor 'z<j><k>'");
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected direction digit after 'z'");
    int j = text_[pos_] - '0';
    if (j < 1 || j > 6) throw Error(ErrorKind::Domain, "direction index must be in 1..6", static_cast<long>(pos_));
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected multiplier digits");
    std::size_t kpos = pos_;
    std::int64_t k = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      k = checked::add(checked::mul(k, 10), text_[pos_] - '0');
      ++pos_;
    }
    if (k == 0) throw Error(ErrorKind::Domain, "multiplier must be positive", static_cast<long>(kpos));
    Frequency f{j, k};
    auto it = std::find(freqs.begin(), freqs.end(), f);
    if (it != freqs.end()) return static_cast<int>(it - freqs.begin());
    freqs.push_back(f);
    return static_cast<int>(freqs.size()) - 1;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::Syntax, msg + " at position " + std::to_string(pos_), static_cast<long>(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ZebraPolynomial parse_polynomial(std::string_view text) {
  std::vector<Frequency> freqs;
  auto terms = Parser(text).parse(freqs);

  // Cancel pairs of equal monomials over F2, keeping first-appearance order.
  std::map<std::vector<int>, int> parity;
  std::vector<std::vector<int>> order;
  for (auto& t : terms) {
    if (parity[t]++ == 0) order.push_back(t);
  }
  std::vector<std::vector<int>> kept;
  for (auto& t : order)
    if (parity[t] % 2 == 1) kept.push_back(t);
  if (kept.empty()) throw Error(ErrorKind::Domain, "polynomial cancels to zero");

  // Drop unused frequencies, keep the order in which they were first read.
  std::vector<bool> used(freqs.size(), false);
  for (auto& t : kept)
    for (int i : t) used[i] = true;
  std::vector<int> remap(freqs.size(), -1);
  ZebraPolynomial p;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = static_cast<int>(p.frequencies.size());
    p.frequencies.push_back(freqs[i]);
  }
  const Index n = static_cast<Index>(p.frequencies.size());
  p.V.resize(2, n);
  for (Index i = 0; i < n; ++i) p.V.col(i) = p.frequencies[i].rescaled();
  p.M = MatXi::Zero(n, static_cast<Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (int i : kept[j]) p.M(remap[i], static_cast<Index>(j)) = 1;
  p.source_text = std::string(text);
  return p;
}

std::string ZebraPolynomial::str() const {
  std::string out;
  for (Index j = 0; j < M.cols(); ++j) {
    if (j > 0) out += "+";
    bool first = true;
    for (Index i = 0; i < M.rows(); ++i) {
      if (M(i, j) == 0) continue;
      if (!first) out += "*";
      first = false;
      out += "z" + std::to_string(frequencies[i].direction) + std::to_string(frequencies[i].multiplier);
    }
  }
  return out;
}

int combine_zebras(const ZebraPolynomial& poly, const VecXi& bits) {
  // ((not((not b) M)) 1) mod 2: a monomial is 1 iff none of its factors is 0.
  VecXi zeros = poly.M.transpose() * (VecXi::Ones(bits.size()) - bits);
  std::int64_t ones = (zeros.array() == 0).count();
  return static_cast<int>(ones % 2);
}

VecXi evaluate(const ZebraPolynomial& poly, const MatXi& X, std::int64_t scale) {
  if (X.cols() != 2) throw Error(ErrorKind::Precondition, "points must be a k x 2 matrix");
  if (scale <= 0) throw Error(ErrorKind::Precondition, "scale must be positive");
  MatXi P = 2 * X * poly.V;  // k x n, to be floor-divided by scale
  MatXi bits = P.unaryExpr([scale](std::int64_t v) { return checked::floor_mod(checked::floor_div(v, scale), 2); });
  MatXi zeros = (MatXi::Ones(bits.rows(), bits.cols()) - bits) * poly.M;
  VecXi out(X.rows());
  for (Index r = 0; r < X.rows(); ++r) out(r) = (zeros.row(r).array() == 0).count() % 2;
  return out;
}

int evaluate(const ZebraPolynomial& poly, const Vec2q& x) {
  VecXi bits(poly.frequency_count());
  for (Index i = 0; i < bits.size(); ++i) {
    Rational t = Rational(2) * (x.x() * poly.V(0, i) + x.y() * poly.V(1, i));
    bits(i) = checked::floor_mod(t.floor(), 2);
  }
  return combine_zebras(poly, bits);
}

}  // namespace zzm
