#include "mgs/label.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mgs {

namespace {

constexpr std::array<char, 12> kLetters = {'g', 'h', 'm', 'l', 'r', 'f',
                                           's', 'e', 'a', 'b', 'c', 'd'};

Family family_of_letter(char ch) {
  for (std::size_t i = 0; i < kLetters.size(); ++i) {
    if (kLetters[i] == ch) return static_cast<Family>(i);
  }
  return Family::Other;
}

char letter_of_family(Family f) { return kLetters[static_cast<int>(f)]; }

}  // namespace

VertexLabel::VertexLabel(Family family, int index)
    : family_(family), index_(index) {
  if (family == Family::Other) {
    throw std::invalid_argument("Other labels carry a free-form name; use parse");
  }
  if (index < 0) throw std::invalid_argument("label index must be >= 0");
  name_ = letter_of_family(family);
  if (index > 0) name_ += "_" + std::to_string(index);
}

VertexLabel VertexLabel::parse(std::string_view text) {
  if (!text.empty()) {
    Family fam = family_of_letter(text[0]);
    if (fam != Family::Other) {
      if (text.size() == 1) return VertexLabel(fam, 0);
      if (text.size() >= 3 && text[1] == '_' && text[2] != '0') {
        bool digits = true;
        long idx = 0;
        for (std::size_t i = 2; i < text.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(text[i])) || idx > 1'000'000) {
            digits = false;
            break;
          }
          idx = idx * 10 + (text[i] - '0');
        }
        if (digits) return VertexLabel(fam, static_cast<int>(idx));
      }
    }
  }
  VertexLabel out;
  out.family_ = Family::Other;
  out.index_ = 0;
  out.name_.assign(text);
  return out;
}

std::strong_ordering VertexLabel::operator<=>(const VertexLabel& o) const {
  if (auto c = static_cast<int>(family_) <=> static_cast<int>(o.family_); c != 0) return c;
  if (auto c = index_ <=> o.index_; c != 0) return c;
  return name_ <=> o.name_;
}

std::ostream& operator<<(std::ostream& out, const VertexLabel& label) {
  return out << label.name();
}

namespace vl {
VertexLabel g(int i) { return VertexLabel(Family::G, i); }
VertexLabel h(int i) { return VertexLabel(Family::H, i); }
VertexLabel m(int i) { return VertexLabel(Family::M, i); }
VertexLabel l(int i) { return VertexLabel(Family::L, i); }
VertexLabel r(int i) { return VertexLabel(Family::R, i); }
VertexLabel f(int i) { return VertexLabel(Family::F, i); }
VertexLabel e(int i) { return VertexLabel(Family::E, i); }
VertexLabel a(int i) { return VertexLabel(Family::A, i); }
VertexLabel b(int i) { return VertexLabel(Family::B, i); }
VertexLabel c(int i) { return VertexLabel(Family::C, i); }
VertexLabel d(int i) { return VertexLabel(Family::D, i); }
VertexLabel s() { return VertexLabel(Family::S, 0); }
}  // namespace vl

}  // namespace mgs
