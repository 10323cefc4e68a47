#include "curvespace/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "context.hpp"
#include "curvespace/error.hpp"

namespace curvespace {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::No: return "no";
    case Verdict::Yes: return "yes";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace detail {

const SurfaceContext& context(const SurfaceSpec& spec) {
  static std::mutex mutex;
  static std::map<SurfaceSpec, std::unique_ptr<SurfaceContext>> cache;

  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(spec);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<SurfaceContext>();
  ctx->spec = spec;
  ctx->regime = regime(spec);
  ctx->pres = presentation(spec);
  ctx->chi = euler_characteristic(spec);
  if (is_closed_hyperbolic(ctx->regime)) {
    const LetterString& r = ctx->pres.relators.front();
    ctx->relator_length = r.size();
    for (int s : {1, -1}) {
      const LetterString base = s > 0 ? r : inverse(r);
      const long base_value = s * ctx->chi;
      for (std::size_t i = 0; i < base.size(); ++i) {
        CyclicRelator c;
        c.word.assign(base.begin() + static_cast<long>(i), base.end());
        c.word.insert(c.word.end(), base.begin(), base.begin() + static_cast<long>(i));
        // x^-1 f^value x = f^(eps(x) value) with x the rotated-away prefix.
        const LetterString prefix(base.begin(), base.begin() + static_cast<long>(i));
        c.value = ctx->pres.character(prefix) * base_value;
        ctx->cyclic.push_back(std::move(c));
      }
    }
    ctx->by_first_letter.resize(2 * ctx->generator_count());
    for (std::size_t i = 0; i < ctx->cyclic.size(); ++i)
      ctx->by_first_letter[letter_slot(ctx->cyclic[i].word.front())].push_back(i);
  }
  const SurfaceContext& ref = *ctx;
  cache.emplace(spec, std::move(ctx));
  return ref;
}

// ---------------------------------------------------------------------------
// Klein bottle coordinates

KleinTriple klein_multiply(const KleinTriple& a, const KleinTriple& b) {
  const long twist_k = (a.l % 2 == 0) ? 1 : -1;
  const long twist_m = (b.l % 2 == 0) ? 1 : -1;
  return {a.k + twist_k * b.k, a.l + b.l, twist_m * a.m + b.m};
}

KleinTriple klein_invert(const KleinTriple& a) {
  const long twist = (a.l % 2 == 0) ? 1 : -1;
  return {-twist * a.k, -a.l, -twist * a.m};
}

KleinTriple klein_letters_to_triple(const LetterString& w) {
  KleinTriple t;
  for (const Letter& x : w) {
    KleinTriple step;
    if (x.generator == 0) {
      step = x.sign > 0 ? KleinTriple{1, 1, 0} : KleinTriple{1, -1, 0};
    } else {
      step = {0, -x.sign, 0};
    }
    t = klein_multiply(t, step);
  }
  return t;
}

LetterString klein_word(long k, long l) {
  LetterString w;
  const Letter c1{0, 1};
  const Letter c2{1, 1};
  for (long i = 0; i < std::abs(k); ++i) {
    if (k > 0) {
      w.push_back(c1);
      w.push_back(c2);
    } else {
      w.push_back(c2.inverse());
      w.push_back(c1.inverse());
    }
  }
  for (long i = 0; i < std::abs(l); ++i) w.push_back(l > 0 ? c2.inverse() : c2);
  free_reduce(w);
  return w;
}

// ---------------------------------------------------------------------------
// Dehn rewriting with fiber bookkeeping

namespace {

struct Match {
  std::size_t start = 0;
  std::size_t length = 0;
  std::size_t relator = 0;
};

// Leftmost start carrying a piece of a cyclic relator longer than half of
// it; longest piece at that start, first relator on ties.
std::optional<Match> find_long_piece(const SurfaceContext& ctx, const LetterString& w) {
  const std::size_t half = ctx.relator_length / 2;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::optional<Match> best;
    for (std::size_t idx : ctx.by_first_letter[letter_slot(w[i])]) {
      const LetterString& r = ctx.cyclic[idx].word;
      std::size_t m = 0;
      while (m < r.size() && i + m < w.size() && w[i + m] == r[m]) ++m;
      if (m > half && (!best || m > best->length)) best = Match{i, m, idx};
    }
    if (best) return best;
  }
  return std::nullopt;
}

// Replaces w[start, start+len) = s by t^-1 where s t is the cyclic relator.
// Returns the fiber exponent that must be appended on the right.
long replace_piece(const SurfaceContext& ctx, LetterString& w, const Match& m) {
  const CyclicRelator& rel = ctx.cyclic[m.relator];
  const LetterString t(rel.word.begin() + static_cast<long>(m.length), rel.word.end());
  const LetterString suffix(w.begin() + static_cast<long>(m.start + m.length), w.end());
  const long shift = ctx.character(t) * ctx.character(suffix) * rel.value;
  LetterString out(w.begin(), w.begin() + static_cast<long>(m.start));
  const LetterString t_inv = inverse(t);
  out.insert(out.end(), t_inv.begin(), t_inv.end());
  out.insert(out.end(), suffix.begin(), suffix.end());
  free_reduce(out);
  w = std::move(out);
  return shift;
}

long dehn_reduce(const SurfaceContext& ctx, LetterString& w) {
  free_reduce(w);
  long shift = 0;
  while (auto m = find_long_piece(ctx, w)) shift += replace_piece(ctx, w, *m);
  return shift;
}

// Every half-relator swap available in w: a subword that is exactly the first
// half of a cyclic relator.
std::vector<Match> half_swaps(const SurfaceContext& ctx, const LetterString& w) {
  std::vector<Match> out;
  const std::size_t half = ctx.relator_length / 2;
  for (std::size_t i = 0; i + half <= w.size(); ++i) {
    for (std::size_t idx : ctx.by_first_letter[letter_slot(w[i])]) {
      const LetterString& r = ctx.cyclic[idx].word;
      if (std::equal(r.begin(), r.begin() + static_cast<long>(half), w.begin() + static_cast<long>(i)))
        out.push_back(Match{i, half, idx});
    }
  }
  return out;
}

// Dehn reduction, then a search of every word reachable by half swaps (with
// Dehn reduction after each). A shorter word restarts the search from it; the
// result is the shortlex least word of the final component. Equal elements
// share that component when the Dehn-reduced words are joined by ladders of
// half-relator regions, which is what the tests exercise.
constexpr std::size_t kSwapSearchLimit = 1 << 12;

long hyperbolic_normal_form(const SurfaceContext& ctx, LetterString& w) {
  long shift = dehn_reduce(ctx, w);
restart:
  struct ShortLex {
    bool operator()(const LetterString& a, const LetterString& b) const { return word_less(a, b); }
  };
  std::map<LetterString, long, ShortLex> seen{{w, shift}};
  std::deque<const std::pair<const LetterString, long>*> queue{&*seen.begin()};
  while (!queue.empty() && seen.size() < kSwapSearchLimit) {
    const auto* cur = queue.front();
    queue.pop_front();
    for (const Match& m : half_swaps(ctx, cur->first)) {
      LetterString next = cur->first;
      long s = cur->second + replace_piece(ctx, next, m);
      s += dehn_reduce(ctx, next);
      if (next.size() < w.size()) {
        w = std::move(next);
        shift = s;
        goto restart;
      }
      auto [it, inserted] = seen.emplace(std::move(next), s);
      if (inserted) queue.push_back(&*it);
    }
  }
  w = seen.begin()->first;
  return seen.begin()->second;
}

}  // namespace

LiftedNormalForm normalize_lifted(const SurfaceSpec& surface, LetterString w) {
  const SurfaceContext& ctx = context(surface);
  const auto n = static_cast<int>(ctx.generator_count());
  for (const Letter& x : w) {
    if (x.generator < 0 || x.generator >= n || (x.sign != 1 && x.sign != -1))
      throw InvalidInput("letter does not belong to the surface presentation");
  }
  LiftedNormalForm out;
  switch (ctx.regime) {
    case Regime::Sphere:
      break;
    case Regime::RP2: {
      long e = 0;
      for (const Letter& x : w) e += x.sign;
      const long r = ((e % 2) + 2) % 2;
      if (r == 1) out.letters.push_back({0, 1});
      out.fiber_shift = (e - r) / 2;  // c1^2 = f
      break;
    }
    case Regime::Torus: {
      long p = 0, q = 0;
      for (const Letter& x : w) (x.generator == 0 ? p : q) += x.sign;
      for (long i = 0; i < std::abs(p); ++i) out.letters.push_back({0, p > 0 ? 1 : -1});
      for (long i = 0; i < std::abs(q); ++i) out.letters.push_back({1, q > 0 ? 1 : -1});
      break;
    }
    case Regime::Klein: {
      const KleinTriple t = klein_letters_to_triple(w);
      out.letters = klein_word(t.k, t.l);
      out.fiber_shift = t.m;
      break;
    }
    case Regime::Punctured:
      free_reduce(w);
      out.letters = std::move(w);
      break;
    case Regime::ClosedOrientableHyperbolic:
    case Regime::ClosedNonorientableHyperbolic:
      out.fiber_shift = hyperbolic_normal_form(ctx, w);
      out.letters = std::move(w);
      break;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Word

Word make_normalized_word(const SurfaceSpec& s, LetterString letters) {
  return Word(s, std::move(letters), Word::Normalized{});
}

Word::Word(SurfaceSpec surface, LetterString letters)
    : surface_(surface),
      letters_(detail::normalize_lifted(surface, std::move(letters)).letters) {}

Word Word::generator(const SurfaceSpec& surface, int index, int sign) {
  return Word(surface, {{index, sign}});
}

namespace {

void require_same_ambient(const Word& u, const Word& v) {
  if (u.surface() != v.surface())
    throw AmbientMismatch("words live on different surfaces");
}

LetterString concat(std::initializer_list<const LetterString*> parts) {
  LetterString out;
  for (const LetterString* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

}  // namespace

Word multiply(const Word& u, const Word& v) {
  require_same_ambient(u, v);
  return Word(u.surface(), concat({&u.letters(), &v.letters()}));
}

Word invert(const Word& u) { return Word(u.surface(), inverse(u.letters())); }

Word power(const Word& u, long n) {
  Word base = n < 0 ? invert(u) : u;
  Word result = Word::identity(u.surface());
  for (long e = std::abs(n); e > 0; e >>= 1) {
    if (e & 1) result = multiply(result, base);
    if (e > 1) base = multiply(base, base);
  }
  return result;
}

bool is_trivial(const Word& u) { return u.empty(); }

bool equal(const Word& u, const Word& v) {
  require_same_ambient(u, v);
  return is_trivial(multiply(u, invert(v)));
}

int orientation_character(const Word& u) {
  return detail::context(u.surface()).character(u.letters());
}

std::vector<long> exponent_sums(const LetterString& w, std::size_t generator_count) {
  std::vector<long> e(generator_count, 0);
  for (const Letter& x : w) e.at(static_cast<std::size_t>(x.generator)) += x.sign;
  return e;
}

// ---------------------------------------------------------------------------
// Cyclic machinery (free and hyperbolic regimes)

namespace {

using detail::SurfaceContext;

// w = conj * core * conj^-1 with core cyclically reduced (and, for closed
// hyperbolic surfaces, free of cyclic pieces longer than half a relator).
struct CyclicForm {
  LetterString core;
  LetterString conj;
};

void rotate_left(LetterString& w, std::size_t i, LetterString& conj) {
  conj.insert(conj.end(), w.begin(), w.begin() + static_cast<long>(i));
  std::rotate(w.begin(), w.begin() + static_cast<long>(i), w.end());
}

CyclicForm cyclic_reduce(const SurfaceContext& ctx, LetterString w, LetterString conj = {}) {
  free_reduce(w);
  const bool dehn = is_closed_hyperbolic(ctx.regime);
  const std::size_t half = ctx.relator_length / 2;
  for (;;) {
    std::size_t strip = 0;
    while (2 * strip + 1 < w.size() && w[strip] == w[w.size() - 1 - strip].inverse()) ++strip;
    if (strip > 0) {
      conj.insert(conj.end(), w.begin(), w.begin() + static_cast<long>(strip));
      w = LetterString(w.begin() + static_cast<long>(strip),
                       w.end() - static_cast<long>(strip));
    }
    if (!dehn || w.empty()) break;

    std::optional<std::pair<std::size_t, std::size_t>> hit;  // (start, relator)
    std::size_t hit_len = 0;
    for (std::size_t i = 0; i < w.size() && !hit; ++i) {
      for (std::size_t idx : ctx.by_first_letter[detail::letter_slot(w[i])]) {
        const LetterString& r = ctx.cyclic[idx].word;
        std::size_t m = 0;
        while (m < r.size() && m < w.size() && w[(i + m) % w.size()] == r[m]) ++m;
        if (m > half && m > hit_len) {
          hit = {i, idx};
          hit_len = m;
        }
      }
    }
    if (!hit) break;
    rotate_left(w, hit->first, conj);
    const LetterString& r = ctx.cyclic[hit->second].word;
    LetterString next = inverse(LetterString(r.begin() + static_cast<long>(hit_len), r.end()));
    next.insert(next.end(), w.begin() + static_cast<long>(hit_len), w.end());
    free_reduce(next);
    w = std::move(next);
  }
  return {std::move(w), std::move(conj)};
}

LetterString least_rotation(const LetterString& w) {
  LetterString best = w;
  LetterString cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (detail::word_less(cur, best)) best = cur;
  }
  return best;
}

// An equal-length cyclic conjugate y = z^-1 * core * z of the starting core.
struct ClosureState {
  LetterString word;
  LetterString z;
};

constexpr std::size_t kClosureLimit = 4096;

// Cyclic words reachable from `start.core` by rotations and half-relator
// swaps. If a swap exposes a shorter conjugate, `start` is replaced by the
// shorter cyclic form and the search restarts.
std::vector<ClosureState> cyclic_closure(const SurfaceContext& ctx, CyclicForm& start) {
  const std::size_t half = ctx.relator_length / 2;
restart:
  std::vector<ClosureState> states{{start.core, {}}};
  std::set<LetterString, decltype(&detail::word_less)> seen(&detail::word_less);
  seen.insert(least_rotation(start.core));
  if (!is_closed_hyperbolic(ctx.regime)) return states;

  for (std::size_t next = 0; next < states.size() && states.size() < kClosureLimit; ++next) {
    const ClosureState state = states[next];
    const std::size_t n = state.word.size();
    if (n < half) continue;
    for (std::size_t j = 0; j < n; ++j) {
      LetterString rotated = state.word;
      LetterString z = state.z;
      rotate_left(rotated, j, z);
      for (std::size_t idx : ctx.by_first_letter[detail::letter_slot(rotated.front())]) {
        const LetterString& r = ctx.cyclic[idx].word;
        if (!std::equal(r.begin(), r.begin() + static_cast<long>(half), rotated.begin()))
          continue;
        LetterString y = inverse(LetterString(r.begin() + static_cast<long>(half), r.end()));
        y.insert(y.end(), rotated.begin() + static_cast<long>(half), rotated.end());
        free_reduce(y);
        const bool cyclically_reduced = y.size() < 2 || y.front() != y.back().inverse();
        if (y.size() < n || !cyclically_reduced) {
          // start.core = (z) y (z)^-1 with the new, shorter y.
          LetterString conj = start.conj;
          conj.insert(conj.end(), z.begin(), z.end());
          start = cyclic_reduce(ctx, y, conj);
          goto restart;
        }
        if (seen.insert(least_rotation(y)).second) states.push_back({std::move(y), z});
      }
    }
  }
  return states;
}

bool has_period(const LetterString& w, std::size_t d) {
  for (std::size_t i = d; i < w.size(); ++i)
    if (w[i] != w[i - d]) return false;
  return true;
}

// First-homology certificate: returns true when u and v certainly have
// different images in H_1 of the surface (hence are not conjugate).
bool homology_separates(const SurfaceContext& ctx, const LetterString& u,
                        const LetterString& v) {
  const auto eu = exponent_sums(u, ctx.generator_count());
  const auto ev = exponent_sums(v, ctx.generator_count());
  if (ctx.regime == Regime::ClosedNonorientableHyperbolic) {
    // H_1 = Z^k / (2, ..., 2).
    const long d0 = eu[0] - ev[0];
    if (d0 % 2 != 0) return true;
    for (std::size_t i = 1; i < eu.size(); ++i)
      if (eu[i] - ev[i] != d0) return true;
    return false;
  }
  return eu != ev;
}

}  // namespace

ConjugacyResult conjugacy(const Word& u, const Word& v, int max_conjugator_length) {
  require_same_ambient(u, v);
  const SurfaceSpec& s = u.surface();
  const SurfaceContext& ctx = detail::context(s);
  auto yes = [&](const LetterString& c) {
    Word cw(s, c);
    return ConjugacyResult{Verdict::Yes, cw};
  };

  switch (ctx.regime) {
    case Regime::Sphere:
    case Regime::RP2:
    case Regime::Torus:
      if (u == v) return yes({});
      return {Verdict::No, std::nullopt};
    case Regime::Klein: {
      const auto a = detail::klein_letters_to_triple(u.letters());
      const auto b = detail::klein_letters_to_triple(v.letters());
      if (a.l != b.l) return {Verdict::No, std::nullopt};
      if (a.l % 2 == 0) {
        // g commutes with g^k h^even; h inverts the g-exponent.
        if (a.k == b.k) return yes({});
        if (a.k == -b.k) return yes(detail::klein_word(0, 1));
        return {Verdict::No, std::nullopt};
      }
      // g maps g^k h^odd to g^(k+2) h^odd.
      if ((a.k - b.k) % 2 != 0) return {Verdict::No, std::nullopt};
      return yes(detail::klein_word((b.k - a.k) / 2, 0));
    }
    default:
      break;
  }

  CyclicForm cu = cyclic_reduce(ctx, u.letters());
  const CyclicForm cv = cyclic_reduce(ctx, v.letters());
  const auto states = cyclic_closure(ctx, cu);
  for (const ClosureState& st : states) {
    if (st.word.size() != cv.core.size()) continue;
    for (std::size_t j = 0; j < std::max<std::size_t>(1, st.word.size()); ++j) {
      LetterString rotated = st.word;
      LetterString a;
      if (!rotated.empty()) rotate_left(rotated, j, a);
      if (rotated != cv.core) continue;
      // c = conjV a^-1 z^-1 conjU^-1
      LetterString c = cv.conj;
      const LetterString a_inv = inverse(a), z_inv = inverse(st.z), cu_inv = inverse(cu.conj);
      c.insert(c.end(), a_inv.begin(), a_inv.end());
      c.insert(c.end(), z_inv.begin(), z_inv.end());
      c.insert(c.end(), cu_inv.begin(), cu_inv.end());
      return yes(c);
    }
  }
  if (!is_closed_hyperbolic(ctx.regime)) return {Verdict::No, std::nullopt};
  if (homology_separates(ctx, u.letters(), v.letters())) return {Verdict::No, std::nullopt};

  const Word core_u(s, cu.core);
  const Word core_v(s, cv.core);
  for (const LetterString& c : detail::reduced_words(ctx.generator_count(), max_conjugator_length)) {
    const Word cw(s, c);
    if (equal(multiply(multiply(cw, core_u), invert(cw)), core_v)) {
      LetterString full = cv.conj;
      full.insert(full.end(), c.begin(), c.end());
      const LetterString cu_inv = inverse(cu.conj);
      full.insert(full.end(), cu_inv.begin(), cu_inv.end());
      return yes(full);
    }
  }
  return {Verdict::Undecided, std::nullopt};
}

Verdict is_conjugate(const Word& u, const Word& v, int max_conjugator_length) {
  return conjugacy(u, v, max_conjugator_length).verdict;
}

namespace {

long gcd_abs(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

PrimitiveRoot klein_root(const Word& u) {
  const auto t = detail::klein_letters_to_triple(u.letters());
  const SurfaceSpec& s = u.surface();
  auto make = [&](long k, long l, long e) {
    return PrimitiveRoot{make_normalized_word(s, detail::klein_word(k, l)), e};
  };
  if (t.l % 2 != 0) return make(t.k, t.l > 0 ? 1 : -1, std::abs(t.l));
  if (t.l == 0) return make(t.k > 0 ? 1 : -1, 0, std::abs(t.k));
  if (t.k == 0) return make(0, t.l > 0 ? 1 : -1, std::abs(t.l));
  for (long n = gcd_abs(t.k, t.l); n > 1; --n) {
    if (t.k % n == 0 && t.l % n == 0 && (t.l / n) % 2 == 0) return make(t.k / n, t.l / n, n);
  }
  return make(t.k, t.l, 1);
}

}  // namespace

PrimitiveRoot primitive_root(const Word& u) {
  const SurfaceSpec& s = u.surface();
  const SurfaceContext& ctx = detail::context(s);
  if (is_finite_regime(ctx.regime))
    throw InvalidInput("primitive roots are undefined for the sphere and projective plane");
  if (is_trivial(u)) throw InvalidInput("the trivial element has no primitive root");

  if (ctx.regime == Regime::Torus) {
    const auto e = exponent_sums(u.letters(), 2);
    const long d = gcd_abs(e[0], e[1]);
    LetterString r;
    for (long i = 0; i < std::abs(e[0] / d); ++i) r.push_back({0, e[0] > 0 ? 1 : -1});
    for (long i = 0; i < std::abs(e[1] / d); ++i) r.push_back({1, e[1] > 0 ? 1 : -1});
    return {Word(s, r), d};
  }
  if (ctx.regime == Regime::Klein) return klein_root(u);

  CyclicForm cf = cyclic_reduce(ctx, u.letters());
  const auto states = cyclic_closure(ctx, cf);
  PrimitiveRoot best{u, 1};
  for (const ClosureState& st : states) {
    const std::size_t n = st.word.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0 || static_cast<long>(n / d) <= best.exponent || !has_period(st.word, d))
        continue;
      // u = P t^(n/d) P^-1 with P = conj z.
      LetterString p = cf.conj;
      p.insert(p.end(), st.z.begin(), st.z.end());
      LetterString root = p;
      root.insert(root.end(), st.word.begin(), st.word.begin() + static_cast<long>(d));
      const LetterString p_inv = inverse(p);
      root.insert(root.end(), p_inv.begin(), p_inv.end());
      Word candidate(s, root);
      const auto e = static_cast<long>(n / d);
      if (equal(power(candidate, e), u)) best = {candidate, e};
      break;  // smallest period of this state found
    }
  }
  return best;
}

namespace detail {

std::vector<LetterString> reduced_words(std::size_t generator_count, int max_length) {
  std::vector<LetterString> out{{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t slot = 0; slot < 2 * generator_count; ++slot) {
        const Letter x{static_cast<int>(slot / 2), slot % 2 == 0 ? 1 : -1};
        const LetterString& w = out[i];
        if (!w.empty() && w.back() == x.inverse()) continue;
        LetterString next = w;
        next.push_back(x);
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace detail

}  // namespace curvespace
