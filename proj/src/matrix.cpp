#include "mgs/matrix.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace mgs {

namespace {

struct Frac {
  Int num = 0;
  Int den = 0;  // den == 0 means unset

  bool set() const { return den != 0; }
  bool operator==(const Frac&) const = default;
};

Frac reduced(Int num, Int den) {
  if (num < 0) {
    num = -num;
    den = -den;
  }
  Int g = std::gcd(num, den < 0 ? -den : den);
  return Frac{num / g, den / g};
}

// d_k = d_j * b_jk / (-b_kj); b_jk and -b_kj always share a sign here.
Frac propagate(const Frac& dj, Int b_jk, Int b_kj) {
  return reduced(dj.num * b_jk, dj.den * (-b_kj));
}

std::vector<Int> compute_symmetrizer(int n, const std::vector<Int>& b,
                                     const std::vector<VertexLabel>& labels) {
  std::vector<Frac> val(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> components;
  for (int root = 0; root < n; ++root) {
    if (val[root].set()) continue;
    std::vector<int> comp;
    std::queue<int> work;
    val[root] = Frac{1, 1};
    work.push(root);
    while (!work.empty()) {
      int j = work.front();
      work.pop();
      comp.push_back(j);
      for (int k = 0; k < n; ++k) {
        Int fwd = b[static_cast<std::size_t>(j) * n + k];
        if (fwd == 0) continue;
        Int bwd = b[static_cast<std::size_t>(k) * n + j];
        if (bwd == 0 || (fwd > 0) == (bwd > 0)) {
          throw NoSymmetrizer("entries between '" + labels[j].name() + "' and '" +
                              labels[k].name() + "' cannot be sign-balanced");
        }
        Frac cand = propagate(val[j], fwd, bwd);
        if (val[k].set()) {
          if (!(val[k] == cand)) {
            throw NoSymmetrizer("inconsistent weight ratios around '" +
                                labels[k].name() + "'");
          }
        } else {
          val[k] = cand;
          work.push(k);
        }
      }
    }
    components.push_back(std::move(comp));
  }
  std::vector<Int> d(static_cast<std::size_t>(n), 1);
  for (const auto& comp : components) {
    Int common_den = 1;
    for (int j : comp) common_den = std::lcm(common_den, val[j].den);
    Int common_num = 0;
    for (int j : comp) common_num = std::gcd(common_num, val[j].num * (common_den / val[j].den));
    for (int j : comp) d[j] = val[j].num * (common_den / val[j].den) / common_num;
  }
  return d;
}

}  // namespace

std::optional<int> ExchangeMatrix::index_of(const VertexLabel& v) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == v) return i;
  }
  return std::nullopt;
}

int ExchangeMatrix::require_index(const VertexLabel& v) const {
  if (auto i = index_of(v)) return *i;
  throw UnknownVertex("unknown vertex '" + v.name() + "'");
}

ExchangeMatrix ExchangeMatrix::from_parts(std::vector<VertexLabel> labels,
                                          std::vector<Int> symmetrizer,
                                          std::vector<Int> b) {
  ExchangeMatrix m;
  m.n_ = static_cast<int>(labels.size());
  if (symmetrizer.size() != labels.size() ||
      b.size() != labels.size() * labels.size()) {
    throw std::invalid_argument("inconsistent matrix part sizes");
  }
  m.labels_ = std::move(labels);
  m.d_ = std::move(symmetrizer);
  m.b_ = std::move(b);
  return m;
}

ExchangeMatrix matrix_from_arrows(std::vector<VertexLabel> labels,
                                  const std::vector<ArrowSpec>& pairs) {
  const int n = static_cast<int>(labels.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(labels[i].name(), i).second) {
      throw DuplicateLabel("label '" + labels[i].name() + "' appears twice");
    }
  }
  auto resolve = [&](const VertexLabel& v) {
    auto it = index.find(v.name());
    if (it == index.end()) throw UnknownVertex("unknown vertex '" + v.name() + "'");
    return it->second;
  };
  std::vector<Int> b(static_cast<std::size_t>(n) * n, 0);
  for (const auto& p : pairs) {
    int i = resolve(p.from);
    int j = resolve(p.to);
    if (i == j) throw SelfLoop("self loop at '" + p.from.name() + "'");
    if (p.b_forward <= 0 || p.b_backward >= 0) {
      throw std::invalid_argument("pair '" + p.from.name() + "' -> '" + p.to.name() +
                                  "' requires b_forward > 0 and b_backward < 0");
    }
    std::size_t ij = static_cast<std::size_t>(i) * n + j;
    std::size_t ji = static_cast<std::size_t>(j) * n + i;
    if (b[ij] != 0 || b[ji] != 0) {
      throw DuplicatePair("pair '" + p.from.name() + "' - '" + p.to.name() +
                          "' given twice");
    }
    b[ij] = p.b_forward;
    b[ji] = p.b_backward;
  }
  std::vector<Int> d = compute_symmetrizer(n, b, labels);
  return ExchangeMatrix::from_parts(std::move(labels), std::move(d), std::move(b));
}

Int isqrt(Int v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  if (v == 0) return 0;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace mgs
