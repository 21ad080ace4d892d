#pragma once

#include <optional>
#include <vector>

#include "mgs/matrix.hpp"

namespace mgs {

enum class VertexColor { Green, Red };

// Framed seed [B | C] over the mutable vertices. Row i of C is the c-vector
// of vertex i; frozen companion rows are implied and never stored.
class FramedSeed {
 public:
  FramedSeed() = default;

  int size() const { return n_; }
  Int b(int i, int j) const { return ext_[cell(i, j)]; }
  Int c(int i, int j) const { return ext_[cell(i, n_ + j)]; }
  Int d(int i) const { return d_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& symmetrizer() const { return d_; }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  const VertexLabel& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& cells() const { return ext_; }

  std::optional<int> index_of(const VertexLabel& v) const;
  int require_index(const VertexLabel& v) const;  // throws UnknownVertex

  ExchangeMatrix base_matrix() const;
  std::vector<Int> c_row(int i) const;
  std::vector<Int> c_block() const;  // row-major n x n

  bool operator==(const FramedSeed&) const = default;

 private:
  friend FramedSeed frame(const ExchangeMatrix& m);
  friend FramedSeed seed_with_c_block(const ExchangeMatrix& m,
                                      const std::vector<Int>& c_block);
  friend void mutate_in_place(FramedSeed& s, int k);

  std::size_t cell(int i, int j) const {
    return static_cast<std::size_t>(i) * (2 * n_) + j;
  }

  int n_ = 0;
  std::vector<VertexLabel> labels_;
  std::vector<Int> d_;
  std::vector<Int> ext_;  // row-major n x 2n: columns [0,n) B, [n,2n) C
};

// Fresh framing: C = identity, every vertex green.
FramedSeed frame(const ExchangeMatrix& m);

// Framing with a stored C block (row-major n x n), e.g. from a saved document.
FramedSeed seed_with_c_block(const ExchangeMatrix& m, const std::vector<Int>& c_block);

// Mutation at vertex k over the full n x 2n block. Involution.
void mutate_in_place(FramedSeed& s, int k);
FramedSeed mutate_at(const FramedSeed& s, int k);
FramedSeed mutate_at(const FramedSeed& s, const VertexLabel& k);

// Sign of the c-row. Throws MixedSign, ZeroRow.
VertexColor color_of(const FramedSeed& s, int i);
VertexColor color_of(const FramedSeed& s, const VertexLabel& v);

// True when every c-row is red. Vacuously true for the empty seed.
bool is_final(const FramedSeed& s);

// True when C equals minus a permutation matrix.
bool is_neg_permutation(const FramedSeed& s);

}  // namespace mgs
