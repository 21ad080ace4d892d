#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mgs {

// Vertex families in canonical display order. Other covers ad-hoc names.
enum class Family : int { G, H, M, L, R, F, S, E, A, B, C, D, Other };

// A vertex name such as "g_1", "h_12", "s" or "a". Index 0 is a bare
// letter. Known families order before Other; Other orders by name.
class VertexLabel {
 public:
  VertexLabel() = default;
  VertexLabel(Family family, int index);

  // Strict parse: "<letter>" or "<letter>_<index>" with index >= 1 and no
  // leading zeros maps onto a known family; anything else becomes Other.
  static VertexLabel parse(std::string_view text);

  const std::string& name() const { return name_; }
  Family family() const { return family_; }
  int index() const { return index_; }

  bool operator==(const VertexLabel& o) const { return name_ == o.name_; }
  std::strong_ordering operator<=>(const VertexLabel& o) const;

 private:
  Family family_ = Family::Other;
  int index_ = 0;
  std::string name_;
};

std::ostream& operator<<(std::ostream& out, const VertexLabel& label);

// Terse constructors for the standard families.
namespace vl {
VertexLabel g(int i);
VertexLabel h(int i);
VertexLabel m(int i);
VertexLabel l(int i);
VertexLabel r(int i);
VertexLabel f(int i);
VertexLabel e(int i);
VertexLabel a(int i);
VertexLabel b(int i);
VertexLabel c(int i);
VertexLabel d(int i);
VertexLabel s();
}  // namespace vl

}  // namespace mgs
