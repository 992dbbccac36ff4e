#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alexkit/laurent.hpp"

namespace alexkit {

/// Artin braid word on `strands` strands. Letter +i is the generator e_i
/// (strand crossing (+,+) -> (+,+) with the positive twist), -i its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Grammar: <n> ':' token*, token in { s<i>, S<i>, signed integer }.
/// '#' starts a comment running to end of line.
BraidWord parse_braid(std::string_view text);
std::string render_braid(const BraidWord& b);

/// Permutation of strand positions induced by the braid, applied to the
/// bottom positions (0-based).
std::vector<int> braid_permutation(const BraidWord& b);
/// Number of components of the closure (cycles of the permutation).
int closure_component_count(const BraidWord& b);

/// One Wirtinger crossing: the under-strand arrives on `under_in`, leaves on
/// `under_out` and passes below `over`. Arcs are 1-based.
struct Crossing {
  int under_in;
  int over;
  int under_out;
  int sign;  // +1 positive (type I), -1 negative (type II)

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Validated diagram: arcs 1..n with derived component labels.
class CrossingList {
 public:
  /// Validates and computes components. Throws ValidationError.
  static CrossingList make(int arc_count, std::vector<Crossing> crossings);

  int arc_count() const noexcept { return arc_count_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  /// Component (1-based) of arc (1-based).
  int component_of(int arc) const { return components_.at(static_cast<std::size_t>(arc - 1)); }
  int component_count() const noexcept { return component_count_; }

  friend bool operator==(const CrossingList& a, const CrossingList& b) {
    return a.arc_count_ == b.arc_count_ && a.crossings_ == b.crossings_;
  }

 private:
  int arc_count_ = 1;
  std::vector<Crossing> crossings_;
  std::vector<int> components_;
  int component_count_ = 1;
};

/// Header "arcs <n>" then lines "x <i> <j> <k> <+|->". Lines are separated by
/// newlines or '/'; '#' comments are ignored.
CrossingList parse_crossing_list(std::string_view text);
std::string render_crossing_list(const CrossingList& d);

/// Planar-diagram code: X[a,b,c,d] with a the incoming under-edge and labels
/// counterclockwise. Positive when d = b+1 (mod 2m), negative when b = d+1.
CrossingList parse_pd(std::string_view text);

/// Closure of a braid as a crossing list. The rightmost letter sits at the
/// bottom, so the diagram matches the tangle read as a composite of morphisms.
CrossingList braid_closure(const BraidWord& b);

struct CatalogEntry {
  std::string name;
  BraidWord braid;
  CrossingList crossings;
  LaurentPoly expected_delta;
};

/// unknot, trefoil, figure8, hopf, solomon.
const std::vector<CatalogEntry>& catalog();
/// Throws NotFound for unknown names.
const CatalogEntry& catalog_lookup(std::string_view name);

}  // namespace alexkit
