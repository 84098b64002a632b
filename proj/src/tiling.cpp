#include "circode/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "circode/errors.hpp"

namespace circode {

namespace {

void require_connection_set(const ResidueSet& s) {
  if (s.contains(0)) fail("invalid-connection-set", "connection set contains 0");
  if (!is_inverse_closed(s)) fail("invalid-connection-set", "connection set is not inverse-closed");
}

// Backtracking exact cover by translates of A over Z_n, with coverage kept
// in a word-packed bit vector. Branches on the smallest uncovered element;
// the translate covering it is determined by which member of A lands there.
class CoverSearch {
 public:
  explicit CoverSearch(const ResidueSet& a)
      : n_(a.modulus()), words_(static_cast<std::size_t>((n_ + 63) / 64)), elems_(a.elements()) {
    masks_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (Elem d = 0; d < n_; ++d) {
      std::uint64_t* row = mask_row(d);
      for (Elem e : elems_) {
        Elem pos = e + d < n_ ? e + d : e + d - n_;
        row[pos >> 6] |= std::uint64_t{1} << (pos & 63);
      }
    }
    covered_.assign(words_, 0);
  }

  // Emits every complement containing 0 (A must contain 0). The visitor
  // returns false to stop the search.
  void run(const std::function<bool(const std::vector<Elem>&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    chosen_.clear();
    place(0);
    dfs();
    unplace(0);
  }

 private:
  std::uint64_t* mask_row(Elem d) { return masks_.data() + static_cast<std::size_t>(d) * words_; }

  bool fits(Elem d) {
    const std::uint64_t* row = mask_row(d);
    for (std::size_t w = 0; w < words_; ++w)
      if (row[w] & covered_[w]) return false;
    return true;
  }

  void place(Elem d) {
    const std::uint64_t* row = mask_row(d);
    for (std::size_t w = 0; w < words_; ++w) covered_[w] ^= row[w];
    chosen_.push_back(d);
  }

  void unplace(Elem d) {
    const std::uint64_t* row = mask_row(d);
    for (std::size_t w = 0; w < words_; ++w) covered_[w] ^= row[w];
    chosen_.pop_back();
  }

  Elem first_uncovered() const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t free = ~covered_[w];
      if (w == words_ - 1 && (n_ & 63) != 0) free &= (std::uint64_t{1} << (n_ & 63)) - 1;
      if (free) return static_cast<Elem>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(free)));
    }
    return -1;
  }

  void dfs() {
    Elem x = first_uncovered();
    if (x < 0) {
      std::vector<Elem> sol(chosen_);
      std::sort(sol.begin(), sol.end());
      if (!(*visit_)(sol)) stop_ = true;
      return;
    }
    std::vector<Elem> cands;
    cands.reserve(elems_.size());
    for (Elem e : elems_) {
      Elem d = x - e;
      cands.push_back(d < 0 ? d + n_ : d);
    }
    std::sort(cands.begin(), cands.end());
    for (Elem d : cands) {
      if (!fits(d)) continue;
      place(d);
      dfs();
      unplace(d);
      if (stop_) return;
    }
  }

  Elem n_;
  std::size_t words_;
  std::vector<Elem> elems_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> covered_;
  std::vector<Elem> chosen_;
  const std::function<bool(const std::vector<Elem>&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

Tiling make_tiling(ResidueSet left, ResidueSet right) {
  if (!left.contains(0) || !right.contains(0))
    fail("invalid-input", "a tiling is normalised to contain 0 in both parts");
  if (!is_direct_sum(left, right)) fail("invalid-input", "the parts do not tile the group");
  Elem n = left.modulus();
  return Tiling{n, std::move(left), std::move(right)};
}

bool is_direct_sum(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) fail("incompatible-operands", "direct sum across different moduli");
  Elem n = a.modulus();
  if (static_cast<Elem>(a.size()) * static_cast<Elem>(b.size()) != n) return false;
  ResidueSet common = intersect(difference_set(a), difference_set(b));
  return common.size() == 1;  // both difference sets contain 0
}

bool is_perfect_code(const ResidueSet& s, const ResidueSet& d) {
  require_connection_set(s);
  std::vector<Elem> ext(s.elements());
  ext.push_back(0);
  return is_direct_sum(ResidueSet(s.modulus(), std::move(ext)), d);
}

std::optional<ResidueSet> find_tiling_complement(const ResidueSet& a) {
  if (!a.contains(0)) fail("invalid-input", "tiling search requires 0 in the base set");
  if (a.modulus() % static_cast<Elem>(a.size()) != 0) return std::nullopt;
  std::optional<ResidueSet> result;
  CoverSearch search(a);
  search.run([&](const std::vector<Elem>& sol) {
    result = ResidueSet(a.modulus(), sol);
    return false;
  });
  return result;
}

std::vector<ResidueSet> enumerate_tiling_complements(const ResidueSet& a, std::size_t max_solutions) {
  if (!a.contains(0)) fail("invalid-input", "tiling search requires 0 in the base set");
  std::vector<ResidueSet> out;
  if (a.modulus() % static_cast<Elem>(a.size()) != 0) return out;
  CoverSearch search(a);
  search.run([&](const std::vector<Elem>& sol) {
    out.emplace_back(a.modulus(), sol);
    return max_solutions == 0 || out.size() < max_solutions;
  });
  std::sort(out.begin(), out.end(), [](const ResidueSet& x, const ResidueSet& y) {
    return x.elements() < y.elements();
  });
  return out;
}

namespace {

ResidueSet extended(const ResidueSet& s) {
  std::vector<Elem> ext(s.elements());
  ext.push_back(0);
  return ResidueSet(s.modulus(), std::move(ext));
}

}  // namespace

std::optional<ResidueSet> find_perfect_code(const ResidueSet& s) {
  require_connection_set(s);
  return find_tiling_complement(extended(s));
}

std::vector<ResidueSet> enumerate_perfect_codes(const ResidueSet& s, std::size_t max_solutions) {
  require_connection_set(s);
  return enumerate_tiling_complements(extended(s), max_solutions);
}

}  // namespace circode
