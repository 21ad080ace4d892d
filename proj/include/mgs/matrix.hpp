#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mgs/errors.hpp"
#include "mgs/label.hpp"

namespace mgs {

using Int = std::int64_t;

// One exchange pair between distinct vertices: b_forward > 0 in the
// from->to slot, b_backward < 0 in the to->from slot.
struct ArrowSpec {
  VertexLabel from;
  VertexLabel to;
  Int b_forward = 1;
  Int b_backward = -1;
};

// Skew-symmetrisable integer matrix with labels and the minimal positive
// symmetrizer: diag(d) * B is skew-symmetric.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;

  int size() const { return n_; }
  Int b(int i, int j) const { return b_[static_cast<std::size_t>(i) * n_ + j]; }
  Int d(int i) const { return d_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& b_cells() const { return b_; }
  const std::vector<Int>& symmetrizer() const { return d_; }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  std::optional<int> index_of(const VertexLabel& v) const;
  int require_index(const VertexLabel& v) const;  // throws UnknownVertex

  bool operator==(const ExchangeMatrix&) const = default;

  // Internal assembly; validated construction goes through matrix_from_arrows.
  static ExchangeMatrix from_parts(std::vector<VertexLabel> labels,
                                   std::vector<Int> symmetrizer,
                                   std::vector<Int> b);

 private:
  int n_ = 0;
  std::vector<VertexLabel> labels_;
  std::vector<Int> d_;
  std::vector<Int> b_;  // row-major n x n
};

// Builds the matrix and computes the minimal positive symmetrizer by ratio
// propagation per connected component. Throws DuplicateLabel, UnknownVertex,
// SelfLoop, DuplicatePair, NoSymmetrizer.
ExchangeMatrix matrix_from_arrows(std::vector<VertexLabel> labels,
                                  const std::vector<ArrowSpec>& pairs);

// Largest r >= 0 with r * r <= v. Exact.
Int isqrt(Int v);

}  // namespace mgs
