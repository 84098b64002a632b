#include "circode/zmod.hpp"

#include <algorithm>
#include <charconv>

#include "circode/errors.hpp"

namespace circode {

namespace {

Elem reduce(Elem x, Elem n) {
  Elem r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

ResidueSet::ResidueSet(Elem modulus, std::vector<Elem> raw) : modulus_(modulus) {
  if (modulus < 1) fail("invalid-modulus", "modulus must be >= 1");
  elems_ = std::move(raw);
  for (Elem& e : elems_) e = reduce(e, modulus);
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool ResidueSet::contains(Elem x) const {
  return std::binary_search(elems_.begin(), elems_.end(), reduce(x, modulus_));
}

bool Subgroup::contains(Elem x) const { return reduce(x, modulus) % generator == 0; }

Subgroup make_subgroup(Elem modulus, Elem generator) {
  if (modulus < 1 || generator < 1 || modulus % generator != 0)
    fail("invalid-input", "subgroup generator must be a positive divisor of the modulus");
  return Subgroup{modulus, generator};
}

ResidueSet normalize(Elem modulus, std::span<const Elem> raw) {
  return ResidueSet(modulus, std::vector<Elem>(raw.begin(), raw.end()));
}

ResidueSet full_set(Elem n) {
  std::vector<Elem> v(static_cast<std::size_t>(n));
  for (Elem i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return ResidueSet(n, std::move(v));
}

ResidueSet subgroup_set(const Subgroup& h) {
  std::vector<Elem> v;
  v.reserve(static_cast<std::size_t>(h.order()));
  for (Elem x = 0; x < h.modulus; x += h.generator) v.push_back(x);
  return ResidueSet(h.modulus, std::move(v));
}

bool is_inverse_closed(const ResidueSet& x) {
  for (Elem e : x.elements())
    if (!x.contains(x.modulus() - e)) return false;
  return true;
}

ResidueSet difference_set(const ResidueSet& x) {
  if (x.empty()) fail("empty-set", "difference set of the empty set");
  std::vector<Elem> out;
  out.reserve(x.size() * x.size());
  for (Elem a : x.elements())
    for (Elem b : x.elements()) out.push_back(a - b);
  return ResidueSet(x.modulus(), std::move(out));
}

ResidueSet sumset(const ResidueSet& x, const ResidueSet& y) {
  if (x.modulus() != y.modulus()) fail("incompatible-operands", "sumset across different moduli");
  std::vector<Elem> out;
  out.reserve(x.size() * y.size());
  for (Elem a : x.elements())
    for (Elem b : y.elements()) out.push_back(a + b);
  return ResidueSet(x.modulus(), std::move(out));
}

ResidueSet intersect(const ResidueSet& x, const ResidueSet& y) {
  if (x.modulus() != y.modulus()) fail("incompatible-operands", "intersection across different moduli");
  std::vector<Elem> out;
  std::set_intersection(x.elements().begin(), x.elements().end(), y.elements().begin(),
                        y.elements().end(), std::back_inserter(out));
  return ResidueSet(x.modulus(), std::move(out));
}

ResidueSet translate(const ResidueSet& x, Elem g) {
  std::vector<Elem> out(x.elements());
  for (Elem& e : out) e += g;
  return ResidueSet(x.modulus(), std::move(out));
}

ResidueSet multiply(const ResidueSet& x, Elem u) {
  std::vector<Elem> out(x.elements());
  u %= x.modulus();  // keeps e*u within 64 bits for moduli up to 2^31
  for (Elem& e : out) e *= u;
  return ResidueSet(x.modulus(), std::move(out));
}

bool periodic_under(const ResidueSet& x, Elem d) {
  for (Elem e : x.elements())
    if (!x.contains(e + d)) return false;
  return true;
}

Subgroup subgroup_of_periods(const ResidueSet& x) {
  if (x.empty()) fail("empty-set", "periods of the empty set");
  // The periods form a subgroup <d> with d | n, so divisors in increasing
  // order find the generator first.
  for (Elem d : divisors(x.modulus())) {
    if (periodic_under(x, d)) return Subgroup{x.modulus(), d};
  }
  return Subgroup{x.modulus(), x.modulus()};  // unreachable: d = n always holds
}

bool distinct_mod(const ResidueSet& x, Elem d) {
  std::vector<Elem> seen;
  seen.reserve(x.size());
  for (Elem e : x.elements()) seen.push_back(e % d);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

ResidueSet project(const ResidueSet& x, const Subgroup& h) {
  if (x.modulus() != h.modulus) fail("incompatible-operands", "projection subgroup has a different modulus");
  std::vector<Elem> out(x.elements());
  return ResidueSet(h.generator, std::move(out));
}

bool generates(const ResidueSet& x) {
  Elem g = x.modulus();
  for (Elem e : x.elements()) g = gcd(g, e);
  return g == 1;
}

std::string to_text(const ResidueSet& x) {
  std::string s = std::to_string(x.modulus());
  s += ':';
  bool first = true;
  for (Elem e : x.elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s;
}

std::string to_text(const Subgroup& h) {
  return std::to_string(h.modulus) + ":<" + std::to_string(h.generator) + ">";
}

namespace {

Elem parse_number(const std::string& text, std::size_t& pos) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  Elem value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin)
    fail("parse-error", "expected an integer at position " + std::to_string(pos) + " in \"" + text + "\"");
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

void expect(const std::string& text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c)
    fail("parse-error", std::string("expected '") + c + "' at position " + std::to_string(pos) +
                            " in \"" + text + "\"");
  ++pos;
}

}  // namespace

ResidueSet parse_residue_set(const std::string& text) {
  std::size_t pos = 0;
  Elem modulus = parse_number(text, pos);
  expect(text, pos, ':');
  std::vector<Elem> elems;
  if (pos < text.size()) {
    elems.push_back(parse_number(text, pos));
    while (pos < text.size()) {
      expect(text, pos, ',');
      elems.push_back(parse_number(text, pos));
    }
  }
  return ResidueSet(modulus, std::move(elems));
}

Subgroup parse_subgroup(const std::string& text) {
  std::size_t pos = 0;
  Elem modulus = parse_number(text, pos);
  expect(text, pos, ':');
  expect(text, pos, '<');
  Elem generator = parse_number(text, pos);
  expect(text, pos, '>');
  if (pos != text.size()) fail("parse-error", "trailing characters at position " + std::to_string(pos));
  return make_subgroup(modulus, generator);
}

}  // namespace circode
