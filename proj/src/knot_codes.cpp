#include "alexkit/knot_codes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "alexkit/errors.hpp"

namespace alexkit {

namespace {

// Character cursor over the input that reports byte offsets in errors.
class Scanner {
 public:
  explicit Scanner(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t position() const { return base_ + pos_; }
  void advance() { ++pos_; }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long integer(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    if (allow_sign && (peek() == '+' || peek() == '-')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '#') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(position(), message); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Labels classes 1..k in order of their smallest member.
std::vector<int> class_labels(UnionFind& uf, std::size_t n) {
  std::vector<int> label(n, 0);
  std::map<std::size_t, int> seen;
  for (std::size_t x = 0; x < n; ++x) {
    auto root = uf.find(x);
    auto [it, inserted] = seen.try_emplace(root, static_cast<int>(seen.size()) + 1);
    label[x] = it->second;
  }
  return label;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  Scanner in(text);
  BraidWord b;
  b.strands = static_cast<int>(in.integer(false));
  if (b.strands < 1) in.fail("a braid needs at least one strand");
  in.expect(':');
  while (!in.at_end()) {
    const std::size_t start = in.position();
    int letter = 0;
    if (in.peek() == 's' || in.peek() == 'S') {
      const bool inverse = in.peek() == 'S';
      in.advance();
      if (!std::isdigit(static_cast<unsigned char>(in.peek()))) in.fail("expected generator index");
      letter = static_cast<int>(in.integer(false));
      if (inverse) letter = -letter;
    } else if (in.peek() == '+' || in.peek() == '-' || std::isdigit(static_cast<unsigned char>(in.peek()))) {
      letter = static_cast<int>(in.integer(true));
    } else {
      in.fail("unexpected character in braid word");
    }
    if (letter == 0 || std::abs(letter) >= b.strands)
      throw ParseError(start, "generator index out of range for " + std::to_string(b.strands) + " strands");
    b.letters.push_back(letter);
  }
  return b;
}

std::string render_braid(const BraidWord& b) {
  std::string out = std::to_string(b.strands) + ":";
  for (int l : b.letters) out += (l > 0 ? " s" : " S") + std::to_string(std::abs(l));
  return out;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  // perm[p] = final position of the strand starting at bottom position p.
  std::vector<int> at(static_cast<std::size_t>(b.strands));
  std::iota(at.begin(), at.end(), 0);  // at[position] = starting strand
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    const auto p = static_cast<std::size_t>(std::abs(*it) - 1);
    std::swap(at[p], at[p + 1]);
  }
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

int closure_component_count(const BraidWord& b) {
  auto perm = braid_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (auto x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

CrossingList CrossingList::make(int arc_count, std::vector<Crossing> crossings) {
  if (arc_count < 1) throw ValidationError("a diagram needs at least one arc");
  const auto n = static_cast<std::size_t>(arc_count);
  std::vector<int> as_in(n, 0), as_out(n, 0);
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto& x = crossings[c];
    for (int arc : {x.under_in, x.over, x.under_out})
      if (arc < 1 || arc > arc_count)
        throw ValidationError("crossing " + std::to_string(c + 1) + ": arc " + std::to_string(arc) +
                              " out of range 1.." + std::to_string(arc_count));
    if (x.sign != 1 && x.sign != -1) throw ValidationError("crossing sign must be + or -");
    if (++as_out[static_cast<std::size_t>(x.under_out - 1)] > 1)
      throw ValidationError("arc " + std::to_string(x.under_out) + " is the outgoing under-arc of two crossings");
    if (++as_in[static_cast<std::size_t>(x.under_in - 1)] > 1)
      throw ValidationError("arc " + std::to_string(x.under_in) + " is the incoming under-arc of two crossings");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (as_in[a] != as_out[a])
      throw ValidationError("arc " + std::to_string(a + 1) + " has an unmatched under-crossing end");

  UnionFind uf(n);
  for (const auto& x : crossings)
    uf.unite(static_cast<std::size_t>(x.under_in - 1), static_cast<std::size_t>(x.under_out - 1));

  CrossingList d;
  d.arc_count_ = arc_count;
  d.crossings_ = std::move(crossings);
  d.components_ = class_labels(uf, n);
  d.component_count_ = *std::max_element(d.components_.begin(), d.components_.end());
  return d;
}

CrossingList parse_crossing_list(std::string_view text) {
  int arcs = -1;
  std::vector<Crossing> crossings;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find_first_of("\n/", line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    Scanner in(text.substr(line_start, line_end - line_start), line_start);
    if (!in.at_end()) {
      const std::size_t keyword_at = in.position();
      const std::string keyword = in.word();
      if (arcs < 0) {
        if (keyword != "arcs") throw ParseError(keyword_at, "expected header 'arcs <n>'");
        arcs = static_cast<int>(in.integer(false));
      } else {
        if (keyword != "x") throw ParseError(keyword_at, "expected crossing line 'x <i> <j> <k> <+|->'");
        Crossing c{};
        c.under_in = static_cast<int>(in.integer(false));
        c.over = static_cast<int>(in.integer(false));
        c.under_out = static_cast<int>(in.integer(false));
        in.skip_space();
        if (in.peek() == '+')
          c.sign = 1;
        else if (in.peek() == '-')
          c.sign = -1;
        else
          in.fail("expected crossing sign '+' or '-'");
        in.advance();
        crossings.push_back(c);
      }
      if (!in.at_end()) in.fail("unexpected trailing text");
    }
    line_start = line_end + 1;
  }
  if (arcs < 0) throw ParseError(text.size(), "missing header 'arcs <n>'");
  return CrossingList::make(arcs, std::move(crossings));
}

std::string render_crossing_list(const CrossingList& d) {
  std::ostringstream out;
  out << "arcs " << d.arc_count();
  for (const auto& x : d.crossings())
    out << "\nx " << x.under_in << " " << x.over << " " << x.under_out << " " << (x.sign > 0 ? "+" : "-");
  return out.str();
}

CrossingList parse_pd(std::string_view text) {
  struct Tuple {
    long label[4];
  };
  std::vector<Tuple> tuples;
  Scanner in(text);
  while (!in.at_end()) {
    if (in.peek() != 'X') in.fail("expected X[a,b,c,d]");
    in.advance();
    in.expect('[');
    Tuple t{};
    for (int k = 0; k < 4; ++k) {
      if (k) in.expect(',');
      t.label[k] = in.integer(false);
    }
    in.expect(']');
    tuples.push_back(t);
    in.skip_space();
    if (in.peek() == ',') in.advance();
  }
  if (tuples.empty()) return CrossingList::make(1, {});

  const long edges = 2 * static_cast<long>(tuples.size());
  std::vector<int> count(static_cast<std::size_t>(edges), 0);
  for (const auto& t : tuples)
    for (long l : t.label) {
      if (l < 1 || l > edges)
        throw ValidationError("PD label " + std::to_string(l) + " out of range 1.." + std::to_string(edges));
      ++count[static_cast<std::size_t>(l - 1)];
    }
  for (long l = 1; l <= edges; ++l)
    if (count[static_cast<std::size_t>(l - 1)] != 2)
      throw ValidationError("PD label " + std::to_string(l) + " must appear exactly twice");

  auto next = [edges](long l) { return l % edges + 1; };
  std::vector<int> signs;
  UnionFind uf(static_cast<std::size_t>(edges));
  for (std::size_t c = 0; c < tuples.size(); ++c) {
    const auto& t = tuples[c];
    const bool positive = t.label[3] == next(t.label[1]);
    const bool negative = t.label[1] == next(t.label[3]);
    if (positive == negative)
      throw AmbiguousOrientation("cannot orient the over-strand of PD crossing " + std::to_string(c + 1));
    signs.push_back(positive ? 1 : -1);
    uf.unite(static_cast<std::size_t>(t.label[1] - 1), static_cast<std::size_t>(t.label[3] - 1));
  }
  // Every edge must end at exactly one crossing and start at exactly one.
  std::vector<int> ends(static_cast<std::size_t>(edges), 0);
  for (std::size_t c = 0; c < tuples.size(); ++c) {
    const auto& t = tuples[c];
    ++ends[static_cast<std::size_t>(t.label[0] - 1)];
    ++ends[static_cast<std::size_t>((signs[c] > 0 ? t.label[1] : t.label[3]) - 1)];
  }
  for (long l = 1; l <= edges; ++l)
    if (ends[static_cast<std::size_t>(l - 1)] != 1)
      throw ValidationError("PD edge " + std::to_string(l) + " is not traversed consistently");
  const auto label = class_labels(uf, static_cast<std::size_t>(edges));
  auto arc = [&](long l) { return label[static_cast<std::size_t>(l - 1)]; };
  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < tuples.size(); ++c) {
    const auto& t = tuples[c];
    crossings.push_back({arc(t.label[0]), arc(t.label[1]), arc(t.label[2]), signs[c]});
  }
  const int arcs = *std::max_element(label.begin(), label.end());
  return CrossingList::make(arcs, std::move(crossings));
}

CrossingList braid_closure(const BraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands);
  std::vector<std::size_t> at(n);  // raw arc currently at each position
  std::iota(at.begin(), at.end(), 0);
  std::size_t raw_arcs = n;
  struct RawCrossing {
    std::size_t under_in, over, under_out;
    int sign;
  };
  std::vector<RawCrossing> raw;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    const auto p = static_cast<std::size_t>(std::abs(*it) - 1);
    const std::size_t fresh = raw_arcs++;
    if (*it > 0) {
      // X+: strand from p+1 passes under to p; strand from p passes over to p+1.
      raw.push_back({at[p + 1], at[p], fresh, 1});
      at[p + 1] = at[p];
      at[p] = fresh;
    } else {
      // X-: strand from p passes under to p+1; strand from p+1 passes over to p.
      raw.push_back({at[p], at[p + 1], fresh, -1});
      at[p] = at[p + 1];
      at[p + 1] = fresh;
    }
  }
  UnionFind uf(raw_arcs);
  for (std::size_t p = 0; p < n; ++p) uf.unite(p, at[p]);
  const auto label = class_labels(uf, raw_arcs);
  std::vector<Crossing> crossings;
  for (const auto& c : raw) crossings.push_back({label[c.under_in], label[c.over], label[c.under_out], c.sign});
  const int arcs = *std::max_element(label.begin(), label.end());
  return CrossingList::make(arcs, std::move(crossings));
}

namespace {

CatalogEntry entry(std::string name, std::string_view braid, std::string_view code, LaurentPoly delta) {
  return CatalogEntry{std::move(name), parse_braid(braid), parse_crossing_list(code), std::move(delta)};
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back(entry("unknot", "1:", "arcs 1", LaurentPoly(1)));
    v.push_back(entry("trefoil", "2: s1 s1 s1", "arcs 3 / x 3 2 1 + / x 1 3 2 + / x 2 1 3 +",
                      LaurentPoly{{0, 1}, {1, -1}, {2, 1}}));
    v.push_back(entry("figure8", "3: s1 S2 s1 S2", "arcs 4 / x 1 3 2 + / x 3 1 4 + / x 2 4 3 - / x 4 2 1 -",
                      LaurentPoly{{0, 1}, {1, -3}, {2, 1}}));
    v.push_back(entry("hopf", "2: s1 s1", "arcs 2 / x 2 1 2 + / x 1 2 1 +", LaurentPoly{{0, 1}, {1, -1}}));
    v.push_back(entry("solomon", "2: s1 s1 s1 s1", "arcs 4 / x 1 2 3 + / x 2 3 4 + / x 3 4 1 + / x 4 1 2 +",
                      LaurentPoly{{0, 1}, {1, -1}, {2, 1}, {3, -1}}));
    return v;
  }();
  return entries;
}

const CatalogEntry& catalog_lookup(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw NotFound("no catalog entry named '" + std::string(name) + "'");
}

}  // namespace alexkit
