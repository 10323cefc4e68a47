#include "curvespace/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "context.hpp"
#include "curvespace/error.hpp"

namespace curvespace::oracle {

// ---------------------------------------------------------------------------
// Abelianization

namespace {

long floor_mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

Abelianization::Abelianization(const Presentation& p) : generators_(p.generators.size()) {
  const std::size_t n = generators_;
  std::vector<std::vector<long>> m;
  for (const LetterString& r : p.relators) m.push_back(exponent_sums(r, n));
  cols_.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) cols_[i][i] = 1;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : cols_) std::swap(row[a], row[b]);
  };
  // col[b] -= q * col[a]
  auto sub_col = [&](std::size_t b, std::size_t a, long q) {
    for (auto& row : m) row[b] -= q * row[a];
    for (auto& row : cols_) row[b] -= q * row[a];
  };
  auto sub_row = [&](std::size_t b, std::size_t a, long q) {
    for (std::size_t j = 0; j < n; ++j) m[b][j] -= q * m[a][j];
  };

  const std::size_t rows = m.size();
  std::size_t t = 0;
  for (; t < std::min(rows, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the remaining block.
      std::size_t pr = rows, pc = n;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (m[i][j] != 0 && (pr == rows || std::abs(m[i][j]) < std::abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long q = m[i][t] / m[t][t];
        sub_row(i, t, q);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const long q = m[t][j] / m[t][t];
        sub_col(j, t, q);
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any row whose entries the pivot does not divide.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = 0; k < n; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t >= rows || m[t][t] == 0) break;
    if (m[t][t] < 0) {
      for (auto& row : m) row[t] = -row[t];
      for (auto& row : cols_) row[t] = -row[t];
    }
    diagonal_.push_back(m[t][t]);
  }
  free_rank_ = static_cast<int>(n - diagonal_.size());
  for (long d : diagonal_)
    if (d > 1) torsion_.push_back(d);
}

std::vector<long> Abelianization::image(const std::vector<long>& e) const {
  std::vector<long> y(generators_, 0);
  for (std::size_t j = 0; j < generators_; ++j)
    for (std::size_t i = 0; i < generators_; ++i) y[j] += e[i] * cols_[i][j];
  for (std::size_t j = 0; j < diagonal_.size(); ++j) y[j] = floor_mod(y[j], diagonal_[j]);
  return y;
}

std::vector<long> Abelianization::image(const LetterString& w) const {
  return image(exponent_sums(w, generators_));
}

std::string Abelianization::describe() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << "Z";
    if (free_rank_ > 1) out << "^" << free_rank_;
    first = false;
  }
  for (long d : torsion_) {
    out << (first ? "" : " ⊕ ") << "Z/" << d;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// Identity search

Verdict bounded_is_trivial(const Presentation& p, const LetterString& input, const SearchBound& b) {
  LetterString w = input;
  free_reduce(w);
  if (w.empty()) return Verdict::Yes;

  const Abelianization ab(p);
  for (long y : ab.image(w))
    if (y != 0) return Verdict::No;

  std::vector<LetterString> conjugates;
  for (const LetterString& r : p.relators) {
    for (const LetterString& base : {r, inverse(r)}) {
      for (std::size_t i = 0; i < base.size(); ++i) {
        LetterString c(base.begin() + static_cast<long>(i), base.end());
        c.insert(c.end(), base.begin(), base.begin() + static_cast<long>(i));
        conjugates.push_back(std::move(c));
      }
    }
  }

  const std::size_t cap = std::max<std::size_t>(w.size(), static_cast<std::size_t>(b.max_word_length));
  std::set<LetterString> seen{w};
  std::vector<LetterString> frontier{w};
  for (int depth = 0; depth < b.max_depth && !frontier.empty(); ++depth) {
    std::vector<LetterString> next;
    for (const LetterString& cur : frontier) {
      for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
        for (const LetterString& c : conjugates) {
          LetterString cand(cur.begin(), cur.begin() + static_cast<long>(pos));
          cand.insert(cand.end(), c.begin(), c.end());
          cand.insert(cand.end(), cur.begin() + static_cast<long>(pos), cur.end());
          free_reduce(cand);
          if (cand.empty()) return Verdict::Yes;
          if (cand.size() > cap) continue;
          if (seen.insert(cand).second) next.push_back(std::move(cand));
        }
      }
    }
    frontier = std::move(next);
  }
  return Verdict::Undecided;
}

Verdict bounded_is_trivial(const SurfaceSpec& s, const LetterString& w, const SearchBound& b) {
  return bounded_is_trivial(presentation(s), w, b);
}

// ---------------------------------------------------------------------------
// Todd-Coxeter

namespace {

class CosetTable {
 public:
  explicit CosetTable(std::size_t generators) : columns_(2 * generators) { add_row(); }

  static std::size_t column(const Letter& x) {
    return 2 * static_cast<std::size_t>(x.generator) + (x.sign < 0 ? 1 : 0);
  }

  std::size_t size() const { return table_.size(); }
  bool live(std::size_t c) const { return parent_[c] == c; }
  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < size(); ++c) n += live(c) ? 1 : 0;
    return n;
  }
  long entry(std::size_t c, std::size_t col) const { return table_[c][col]; }

  std::size_t define(std::size_t c, std::size_t col) {
    const std::size_t d = add_row();
    table_[c][col] = static_cast<long>(d);
    table_[d][col ^ 1] = static_cast<long>(c);
    return d;
  }

  void scan_and_fill(std::size_t c, const LetterString& rel) {
    std::size_t f = c, b = c;
    long i = 0, j = static_cast<long>(rel.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][column(rel[static_cast<std::size_t>(i)])] >= 0) {
        f = static_cast<std::size_t>(table_[f][column(rel[static_cast<std::size_t>(i)])]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][column(rel[static_cast<std::size_t>(j)]) ^ 1] >= 0) {
        b = static_cast<std::size_t>(table_[b][column(rel[static_cast<std::size_t>(j)]) ^ 1]);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const std::size_t col = column(rel[static_cast<std::size_t>(i)]);
        table_[f][col] = static_cast<long>(b);
        table_[b][col ^ 1] = static_cast<long>(f);
        return;
      }
      define(f, column(rel[static_cast<std::size_t>(i)]));
    }
  }

 private:
  std::size_t add_row() {
    table_.emplace_back(columns_, -1);
    parent_.push_back(parent_.size());
    return table_.size() - 1;
  }

  std::size_t find(std::size_t c) {
    while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
    return c;
  }

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t col = 0; col < columns_; ++col) {
        if (table_[c][col] < 0) continue;
        const auto d = static_cast<std::size_t>(table_[c][col]);
        table_[d][col ^ 1] = -1;
        const std::size_t e1 = find(c);
        const std::size_t e2 = find(d);
        if (table_[e1][col] >= 0)
          merge(e2, static_cast<std::size_t>(table_[e1][col]), queue);
        else
          table_[e1][col] = static_cast<long>(e2);
        if (table_[e2][col ^ 1] >= 0)
          merge(e1, static_cast<std::size_t>(table_[e2][col ^ 1]), queue);
        else
          table_[e2][col ^ 1] = static_cast<long>(e1);
      }
    }
  }

  std::size_t columns_;
  std::vector<std::vector<long>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<std::size_t> group_order(const Presentation& p, std::size_t max_cosets) {
  if (p.generators.empty()) return 1;
  CosetTable t(p.generators.size());
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (t.size() > max_cosets) return std::nullopt;
    for (const LetterString& r : p.relators) {
      if (!t.live(c)) break;
      t.scan_and_fill(c, r);
    }
    if (!t.live(c)) continue;
    for (std::size_t col = 0; col < 2 * p.generators.size(); ++col) {
      if (!t.live(c)) break;
      if (t.entry(c, col) < 0) t.define(c, col);
    }
  }
  return t.live_count();
}

// ---------------------------------------------------------------------------
// Centralizer enumeration

namespace {

std::vector<long> st_exponents(const STWord& w, std::size_t base_generators) {
  std::vector<long> e = exponent_sums(w.base().letters(), base_generators);
  e.push_back(w.fiber());
  return e;
}

bool box_less(const STWord& a, const STWord& b) {
  if (detail::word_less(a.base().letters(), b.base().letters())) return true;
  if (detail::word_less(b.base().letters(), a.base().letters())) return false;
  return a.fiber() < b.fiber();
}

// Set of elements keyed by normal form. A miss in a closed hyperbolic regime
// falls back to the word problem against the elements with the same image in
// first homology, so a non-canonical normal form can only cost time.
class ElementIndex {
 public:
  explicit ElementIndex(const SurfaceSpec& s)
      : surface_(s),
        base_generators_(presentation(s).generators.size()),
        abelian_(st_presentation(s)),
        exact_(!is_closed_hyperbolic(regime(s))) {}

  void insert(const STWord& w) {
    if (forms_.insert({w.base().letters(), w.fiber()}).second && !exact_)
      buckets_[key(w)].push_back(w);
  }

  bool contains(const STWord& w) const {
    if (forms_.count({w.base().letters(), w.fiber()})) return true;
    if (exact_) return false;
    auto it = buckets_.find(key(w));
    if (it == buckets_.end()) return false;
    for (const STWord& x : it->second)
      if (st_equal(x, w)) return true;
    return false;
  }

 private:
  std::vector<long> key(const STWord& w) const {
    return abelian_.image(st_exponents(w, base_generators_));
  }

  SurfaceSpec surface_;
  std::size_t base_generators_;
  Abelianization abelian_;
  bool exact_;
  std::set<std::pair<LetterString, long>> forms_;
  std::map<std::vector<long>, std::vector<STWord>> buckets_;
};

}  // namespace

std::vector<STWord> bounded_box(const SurfaceSpec& s, const SearchBound& b) {
  const std::size_t gens = presentation(s).generators.size();
  std::vector<STWord> candidates;
  std::set<std::pair<LetterString, long>> seen_forms;
  for (const LetterString& w : detail::reduced_words(gens, b.max_word_length)) {
    const Word base(s, w);
    if (base.length() > static_cast<std::size_t>(b.max_word_length)) continue;
    for (long m = -b.max_fiber; m <= b.max_fiber; ++m) {
      STWord x(base, m);
      if (x.base().length() > static_cast<std::size_t>(b.max_word_length) ||
          std::abs(x.fiber()) > b.max_fiber)
        continue;
      if (seen_forms.insert({x.base().letters(), x.fiber()}).second)
        candidates.push_back(std::move(x));
    }
  }
  std::sort(candidates.begin(), candidates.end(), box_less);
  return candidates;
}

std::vector<STWord> bounded_centralizer(const SurfaceSpec& s, const STWord& xi,
                                        const SearchBound& b) {
  if (xi.surface() != s) throw AmbientMismatch("the loop does not live on the requested surface");
  std::vector<STWord> out;
  for (STWord& x : bounded_box(s, b))
    if (st_commute(x, xi)) out.push_back(std::move(x));
  return out;
}

VerificationResult verify_classification(const SurfaceSpec& s, const STWord& xi,
                                         const SearchBound& b) {
  VerificationResult res;
  const ClassificationReport rep = classify_pi1(s, xi);
  const GroupDescription& g = rep.group;
  auto fail = [&](std::string why, std::optional<STWord> w) {
    res.passed = false;
    res.detail = std::move(why);
    res.counterexample = std::move(w);
    return res;
  };

  const std::size_t rank = g.expected_witness_count();
  if (rank > 0 && g.witnesses.size() != rank)
    return fail("witness count does not match the group kind", std::nullopt);
  for (const STWord& w : g.witnesses)
    if (!st_commute(w, xi)) return fail("witness does not commute with the loop", w);

  const std::vector<STWord> box = bounded_box(s, b);
  std::vector<STWord> centralizer;
  for (const STWord& x : box)
    if (st_commute(x, xi)) centralizer.push_back(x);
  res.centralizer_size = centralizer.size();

  switch (g.kind) {
    case GroupKind::FullSTGroup:
      if (centralizer.size() != box.size()) {
        for (const STWord& x : box)
          if (!st_commute(x, xi)) return fail("element outside the centralizer", x);
      }
      res.passed = true;
      return res;
    case GroupKind::OrientationPreservingSubgroup:
      for (const STWord& w : g.witnesses)
        if (!preserves_orientation(w)) return fail("witness reverses orientation", w);
      for (const STWord& x : box) {
        if (st_commute(x, xi) != preserves_orientation(x))
          return fail("centralizer differs from the orientation-preserving subgroup", x);
      }
      res.passed = true;
      return res;
    case GroupKind::SymbolicSphereSum:
    case GroupKind::TrivialGroup:
      return fail("not a fundamental-group answer", std::nullopt);
    default:
      break;
  }

  // Bounded products w1^e1 ... wr^er of the witnesses.
  const long e_max = static_cast<long>(b.max_word_length + b.max_fiber);
  std::vector<std::vector<STWord>> powers;
  for (const STWord& w : g.witnesses) {
    std::vector<STWord> ps;
    for (long e = -e_max; e <= e_max; ++e) ps.push_back(st_power(w, e));
    powers.push_back(std::move(ps));
  }
  ElementIndex products(s);
  std::vector<std::size_t> idx(powers.size(), 0);
  for (;;) {
    STWord p = STWord::identity(s);
    for (std::size_t i = 0; i < powers.size(); ++i) p = st_multiply(p, powers[i][idx[i]]);
    ++res.products_checked;
    if (!st_commute(p, xi)) return fail("product of witnesses does not commute with the loop", p);
    products.insert(p);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == powers[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  for (const STWord& x : centralizer)
    if (!products.contains(x)) return fail("centralizer element is not a witness product", x);
  res.passed = true;
  return res;
}

}  // namespace curvespace::oracle
