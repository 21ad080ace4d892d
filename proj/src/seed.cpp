#include "mgs/seed.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgs {

std::optional<int> FramedSeed::index_of(const VertexLabel& v) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == v) return i;
  }
  return std::nullopt;
}

int FramedSeed::require_index(const VertexLabel& v) const {
  if (auto i = index_of(v)) return *i;
  throw UnknownVertex("unknown vertex '" + v.name() + "'");
}

ExchangeMatrix FramedSeed::base_matrix() const {
  std::vector<Int> b(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) b[static_cast<std::size_t>(i) * n_ + j] = this->b(i, j);
  }
  return ExchangeMatrix::from_parts(labels_, d_, std::move(b));
}

std::vector<Int> FramedSeed::c_row(int i) const {
  std::vector<Int> row(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) row[j] = c(i, j);
  return row;
}

std::vector<Int> FramedSeed::c_block() const {
  std::vector<Int> out(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i) * n_ + j] = c(i, j);
  }
  return out;
}

FramedSeed frame(const ExchangeMatrix& m) {
  FramedSeed s;
  s.n_ = m.size();
  s.labels_ = m.labels();
  s.d_ = m.symmetrizer();
  const int w = 2 * s.n_;
  s.ext_.assign(static_cast<std::size_t>(s.n_) * w, 0);
  for (int i = 0; i < s.n_; ++i) {
    for (int j = 0; j < s.n_; ++j) s.ext_[s.cell(i, j)] = m.b(i, j);
    s.ext_[s.cell(i, s.n_ + i)] = 1;
  }
  return s;
}

FramedSeed seed_with_c_block(const ExchangeMatrix& m, const std::vector<Int>& c_block) {
  FramedSeed s = frame(m);
  const int n = s.n_;
  if (c_block.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("c block must be n x n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s.ext_[s.cell(i, n + j)] = c_block[static_cast<std::size_t>(i) * n + j];
    }
  }
  return s;
}

void mutate_in_place(FramedSeed& s, int k) {
  const int n = s.n_;
  const int w = 2 * n;
  auto& m = s.ext_;
  const std::size_t row_k = static_cast<std::size_t>(k) * w;
  for (int j = 0; j < n; ++j) {
    if (j == k) continue;
    const std::size_t row_j = static_cast<std::size_t>(j) * w;
    const Int bjk = m[row_j + k];
    const Int pos_jk = std::max<Int>(0, -bjk);
    for (int col = 0; col < w; ++col) {
      if (col == k) continue;
      const Int mkc = m[row_k + col];
      m[row_j + col] += pos_jk * mkc + std::max<Int>(0, mkc) * bjk;
    }
  }
  for (int col = 0; col < w; ++col) m[row_k + col] = -m[row_k + col];
  for (int j = 0; j < n; ++j) {
    if (j != k) {
      const std::size_t jk = static_cast<std::size_t>(j) * w + k;
      m[jk] = -m[jk];
    }
  }
}

FramedSeed mutate_at(const FramedSeed& s, int k) {
  if (k < 0 || k >= s.size()) throw UnknownVertex("vertex index out of range");
  FramedSeed out = s;
  mutate_in_place(out, k);
  return out;
}

FramedSeed mutate_at(const FramedSeed& s, const VertexLabel& k) {
  return mutate_at(s, s.require_index(k));
}

VertexColor color_of(const FramedSeed& s, int i) {
  bool pos = false;
  bool neg = false;
  for (int j = 0; j < s.size(); ++j) {
    Int v = s.c(i, j);
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  if (pos && neg) throw MixedSign("mixed signs in c-row of '" + s.label(i).name() + "'");
  if (!pos && !neg) throw ZeroRow("zero c-row at '" + s.label(i).name() + "'");
  return pos ? VertexColor::Green : VertexColor::Red;
}

VertexColor color_of(const FramedSeed& s, const VertexLabel& v) {
  return color_of(s, s.require_index(v));
}

bool is_final(const FramedSeed& s) {
  for (int i = 0; i < s.size(); ++i) {
    bool neg = false;
    for (int j = 0; j < s.size(); ++j) {
      Int v = s.c(i, j);
      if (v > 0) return false;
      neg = neg || v < 0;
    }
    if (!neg) return false;
  }
  return true;
}

bool is_neg_permutation(const FramedSeed& s) {
  const int n = s.size();
  std::vector<int> column_hits(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int row_hits = 0;
    for (int j = 0; j < n; ++j) {
      Int v = s.c(i, j);
      if (v == 0) continue;
      if (v != -1) return false;
      ++row_hits;
      ++column_hits[j];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(column_hits.begin(), column_hits.end(),
                     [](int hits) { return hits == 1; });
}

}  // namespace mgs
