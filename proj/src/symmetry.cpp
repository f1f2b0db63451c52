#include "quandlekit/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "quandlekit/error.hpp"
#include "quandlekit/parallel.hpp"

namespace quandlekit {

namespace {

struct ImageHash {
  std::size_t operator()(const ImageArray &a) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (int v : a) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void check_range(const ImageArray &images)
{
  int n = static_cast<int>(images.size());
  for (int v : images)
    if (v < 0 || v >= n)
      throw Error(ErrorCode::malformed_input, "map image out of range");
}

ImageArray compose(const ImageArray &f, const ImageArray &g)
{
  ImageArray h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    h[x] = f[static_cast<std::size_t>(g[x])];
  return h;
}

// Breadth-first closure of `generators` under composition on the right by
// generators. `seed` holds the starting elements (generators, plus the
// identity for groups).
std::vector<ImageArray> close_under_composition(const std::vector<ImageArray> &generators,
                                                std::vector<ImageArray> seed,
                                                std::size_t cap)
{
  std::unordered_set<ImageArray, ImageHash> seen;
  std::deque<ImageArray> queue;
  for (auto &s : seed)
    if (seen.insert(s).second)
      queue.push_back(std::move(s));

  while (!queue.empty()) {
    ImageArray cur = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : generators) {
      ImageArray next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapacityError("closure exceeded the element cap of " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }

  std::vector<ImageArray> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

template<typename Map>
std::vector<Map> restrict_maps(const std::vector<Map> &maps, const std::vector<int> &subset)
{
  int m = static_cast<int>(subset.size());
  std::size_t degree = maps.empty() ? 0 : maps.front().degree();
  std::vector<int> position(degree, -1);
  for (int k = 0; k < m; ++k) {
    if (subset[k] < 0 || static_cast<std::size_t>(subset[k]) >= degree)
      throw Error(ErrorCode::index_out_of_range, "subset point out of range");
    position[subset[k]] = k;
  }

  std::vector<Map> out;
  out.reserve(maps.size());
  for (const auto &f : maps) {
    ImageArray img(subset.size());
    for (int k = 0; k < m; ++k) {
      int p = position[f(subset[k])];
      if (p < 0)
        throw Error(ErrorCode::not_invariant, "subset is not invariant under the action");
      img[k] = p;
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

std::vector<Permutation> right_translations(const Quandle &x)
{
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < x.size(); ++i)
    gens.emplace_back(right_translation(x, static_cast<int>(i)));
  return gens;
}

std::vector<Transformation> left_translations(const Quandle &x)
{
  std::vector<Transformation> gens;
  for (std::size_t i = 0; i < x.size(); ++i)
    gens.emplace_back(left_translation(x, static_cast<int>(i)));
  return gens;
}

// True when the map fixes `x` and permutes the remaining points as one cycle.
bool is_cycle_off_fixed_point(const ImageArray &f, int x)
{
  int n = static_cast<int>(f.size());
  if (f[x] != x)
    return false;
  if (n <= 2)
    return true;
  int start = x == 0 ? 1 : 0;
  int len = 0;
  int cur = start;
  do {
    cur = f[cur];
    ++len;
    if (cur == x || len > n)
      return false;
  } while (cur != start);
  return len == n - 1;
}

} // namespace

Transformation::Transformation(ImageArray images)
: images_(std::move(images))
{
  check_range(images_);
}

Transformation Transformation::identity(std::size_t n)
{
  ImageArray id(n);
  std::iota(id.begin(), id.end(), 0);
  return Transformation(std::move(id));
}

bool Transformation::is_bijection() const
{
  std::vector<char> hit(images_.size(), 0);
  for (int v : images_) {
    if (hit[v])
      return false;
    hit[v] = 1;
  }
  return true;
}

bool Transformation::is_idempotent() const
{
  for (int v : images_)
    if (images_[v] != v)
      return false;
  return true;
}

Transformation operator*(const Transformation &f, const Transformation &g)
{
  if (f.degree() != g.degree())
    throw Error(ErrorCode::size_mismatch, "composing maps of different degree");
  Transformation h;
  h.images_ = compose(f.images_, g.images_);
  return h;
}

Permutation::Permutation(ImageArray images)
: images_(std::move(images))
{
  check_range(images_);
  if (!Transformation(images_).is_bijection())
    throw Error(ErrorCode::malformed_input, "permutation images must be distinct");
}

Permutation Permutation::identity(std::size_t n)
{
  ImageArray id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id), Unchecked{});
}

Permutation Permutation::inverse() const
{
  ImageArray inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[images_[x]] = static_cast<int>(x);
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x))
      return false;
  return true;
}

Permutation operator*(const Permutation &f, const Permutation &g)
{
  if (f.degree() != g.degree())
    throw Error(ErrorCode::size_mismatch, "composing permutations of different degree");
  return Permutation(compose(f.images_, g.images_), Permutation::Unchecked{});
}

bool GeneratedGroup::contains(const Permutation &p) const
{
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool GeneratedSemigroup::contains(const Transformation &t) const
{
  return std::binary_search(elements.begin(), elements.end(), t);
}

GeneratedGroup generate_group(std::vector<Permutation> generators, std::size_t degree,
                              const ClosureOptions &options)
{
  std::vector<ImageArray> gens;
  for (const auto &g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorCode::size_mismatch, "generator of wrong degree");
    gens.push_back(g.images());
  }
  std::vector<ImageArray> seed = gens;
  seed.push_back(Permutation::identity(degree).images());

  GeneratedGroup group;
  group.degree = degree;
  group.generators = std::move(generators);
  for (auto &img : close_under_composition(gens, std::move(seed), options.max_elements))
    group.elements.emplace_back(std::move(img));
  return group;
}

GeneratedSemigroup generate_semigroup(std::vector<Transformation> generators,
                                      std::size_t degree, const ClosureOptions &options)
{
  std::vector<ImageArray> gens;
  for (const auto &g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorCode::size_mismatch, "generator of wrong degree");
    gens.push_back(g.images());
  }

  GeneratedSemigroup s;
  s.degree = degree;
  s.generators = std::move(generators);
  for (auto &img : close_under_composition(gens, gens, options.max_elements))
    s.elements.emplace_back(std::move(img));
  return s;
}

GeneratedGroup inner_group(const Quandle &x, const ClosureOptions &options)
{
  return generate_group(right_translations(x), x.size(), options);
}

GeneratedSemigroup left_semigroup(const Quandle &x, const ClosureOptions &options)
{
  return generate_semigroup(left_translations(x), x.size(), options);
}

std::vector<Transformation> restricted_action(const std::vector<Transformation> &maps,
                                              const std::vector<int> &subset)
{
  return restrict_maps(maps, subset);
}

std::vector<Permutation> restricted_action(const std::vector<Permutation> &maps,
                                           const std::vector<int> &subset)
{
  return restrict_maps(maps, subset);
}

int permutation_rank(const GeneratedGroup &group, std::size_t m)
{
  if (m == 0)
    return 0;
  const auto &acting = group.generators.empty() ? group.elements : group.generators;

  // Union-find on ordered pairs (a, b), index a*m + b.
  std::vector<std::size_t> parent(m * m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };

  for (const auto &g : acting) {
    if (g.degree() != m)
      throw Error(ErrorCode::size_mismatch, "group degree differs from domain size");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b)
          continue;
        std::size_t u = find(a * m + b);
        std::size_t v = find(static_cast<std::size_t>(g(static_cast<int>(a))) * m +
                             static_cast<std::size_t>(g(static_cast<int>(b))));
        if (u != v)
          parent[std::max(u, v)] = std::min(u, v);
      }
  }

  int classes = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && find(a * m + b) == a * m + b)
        ++classes;
  return classes + 1;
}

bool is_2transitive(const GeneratedGroup &group, std::size_t m)
{
  if (m <= 1)
    return true;
  return permutation_rank(group, m) == 2;
}

bool is_2transitive(const GeneratedSemigroup &semigroup, std::size_t m)
{
  if (m <= 1)
    return true;
  std::size_t needed = m * (m - 1);
  std::vector<char> covered(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b)
        continue;
      std::fill(covered.begin(), covered.end(), 0);
      std::size_t hits = 0;
      for (const auto &g : semigroup.elements) {
        int ga = g(static_cast<int>(a)), gb = g(static_cast<int>(b));
        if (ga == gb)
          continue;
        auto &c = covered[static_cast<std::size_t>(ga) * m + static_cast<std::size_t>(gb)];
        if (!c) {
          c = 1;
          ++hits;
        }
      }
      if (hits != needed)
        return false;
    }
  return true;
}

bool is_right_2transitive(const Quandle &x)
{
  return is_2transitive(inner_group(x), x.size());
}

bool is_right_orbit_2transitive(const Quandle &x)
{
  auto gens = right_translations(x);
  for (const auto &orbit : orbits(x)) {
    if (orbit.size() <= 1)
      continue;
    auto restricted = restricted_action(gens, orbit);
    auto group = generate_group(std::move(restricted), orbit.size());
    if (!is_2transitive(group, orbit.size()))
      return false;
  }
  return true;
}

bool is_left_2transitive(const Quandle &x)
{
  return is_2transitive(left_semigroup(x), x.size());
}

bool is_left_orbit_2transitive(const Quandle &x)
{
  for (const auto &orbit : orbits(x)) {
    if (orbit.size() <= 1)
      continue;
    std::vector<Transformation> own;
    for (int e : orbit)
      own.emplace_back(left_translation(x, e));
    auto restricted = restricted_action(own, orbit);
    auto s = generate_semigroup(std::move(restricted), orbit.size());
    if (!is_2transitive(s, orbit.size()))
      return false;
  }
  return true;
}

bool is_right_cyclic_type(const Quandle &x)
{
  for (std::size_t e = 0; e < x.size(); ++e)
    if (!is_cycle_off_fixed_point(right_translation(x, static_cast<int>(e)), static_cast<int>(e)))
      return false;
  return true;
}

bool is_left_cyclic_type(const Quandle &x)
{
  for (std::size_t e = 0; e < x.size(); ++e) {
    auto l = left_translation(x, static_cast<int>(e));
    if (!Transformation(l).is_bijection())
      return false;
    if (!is_cycle_off_fixed_point(l, static_cast<int>(e)))
      return false;
  }
  return true;
}

std::vector<MaximalSubgroup> maximal_subgroups_at_idempotents(const GeneratedSemigroup &s)
{
  std::vector<MaximalSubgroup> out;
  for (const auto &e : s.elements) {
    if (!e.is_idempotent())
      continue;

    std::set<Transformation> ese_set;
    for (const auto &t : s.elements)
      ese_set.insert(e * t * e);
    std::vector<Transformation> ese(ese_set.begin(), ese_set.end());

    std::vector<Transformation> units;
    for (const auto &u : ese)
      for (const auto &v : ese)
        if (u * v == e && v * u == e) {
          units.push_back(u);
          break;
        }

    std::vector<int> image(e.images());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());

    std::vector<Permutation> restricted;
    for (auto &t : restricted_action(units, image))
      restricted.emplace_back(t.images());
    MaximalSubgroup m{e, image, generate_group(std::move(restricted), image.size())};
    out.push_back(std::move(m));
  }
  return out;
}

std::string QuandlePolynomial::to_string() const
{
  auto power = [](char var, int e) -> std::string {
    if (e == 0)
      return "";
    if (e == 1)
      return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
  };

  std::vector<Term> ordered(terms.rbegin(), terms.rend());
  std::ostringstream os;
  bool first = true;
  for (const auto &t : ordered) {
    if (!first)
      os << " + ";
    first = false;
    std::string mono = power('s', t.r) + power('t', t.c);
    if (t.mult != 1 || mono.empty())
      os << t.mult;
    os << mono;
  }
  if (first)
    os << "0";
  return os.str();
}

QuandlePolynomial quandle_polynomial(const Quandle &x)
{
  int n = static_cast<int>(x.size());
  std::vector<QuandlePolynomial::Term> raw;
  for (int e = 0; e < n; ++e) {
    int r = 0, c = 0;
    for (int y = 0; y < n; ++y) {
      r += x.op(e, y) == e;
      c += x.op(y, e) == y;
    }
    raw.push_back({r, c, 1});
  }
  std::sort(raw.begin(), raw.end());

  QuandlePolynomial qp;
  for (const auto &t : raw) {
    if (!qp.terms.empty() && qp.terms.back().r == t.r && qp.terms.back().c == t.c)
      ++qp.terms.back().mult;
    else
      qp.terms.push_back(t);
  }
  return qp;
}

namespace {

struct ElementSignature {
  int r, c, orbit_size;
  friend bool operator==(const ElementSignature &, const ElementSignature &) = default;
};

std::vector<ElementSignature> signatures(const Quandle &x)
{
  int n = static_cast<int>(x.size());
  std::vector<ElementSignature> sig(x.size());
  for (const auto &orbit : orbits(x))
    for (int e : orbit)
      sig[e].orbit_size = static_cast<int>(orbit.size());
  for (int e = 0; e < n; ++e) {
    sig[e].r = sig[e].c = 0;
    for (int y = 0; y < n; ++y) {
      sig[e].r += x.op(e, y) == e;
      sig[e].c += x.op(y, e) == y;
    }
  }
  return sig;
}

class IsomorphismSearch {
public:
  IsomorphismSearch(const Quandle &x, const Quandle &y)
  : x_(x), y_(y), n_(static_cast<int>(x.size())), sx_(signatures(x)), sy_(signatures(y)),
    image_(x.size(), -1), preimage_(x.size(), -1)
  {}

  bool run() { return extend(0); }

  Permutation result() const { return Permutation(image_); }

private:
  // Products among the assigned points 0..k either map correctly or land on
  // an unassigned point whose prospective image is still free.
  bool consistent(int k) const
  {
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) {
        int a = x_.op(i, j);
        int b = y_.op(image_[i], image_[j]);
        if (image_[a] >= 0 ? image_[a] != b : preimage_[b] >= 0)
          return false;
      }
    return true;
  }

  bool extend(int k)
  {
    if (k == n_)
      return true;
    for (int v = 0; v < n_; ++v) {
      if (preimage_[v] >= 0 || !(sx_[k] == sy_[v]))
        continue;
      image_[k] = v;
      preimage_[v] = k;
      if (consistent(k) && extend(k + 1))
        return true;
      image_[k] = -1;
      preimage_[v] = -1;
    }
    return false;
  }

  const Quandle &x_;
  const Quandle &y_;
  int n_;
  std::vector<ElementSignature> sx_, sy_;
  std::vector<int> image_, preimage_;
};

} // namespace

std::optional<Permutation> quandles_isomorphic(const Quandle &x, const Quandle &y)
{
  if (x.size() != y.size())
    throw Error(ErrorCode::size_mismatch, "quandles have different orders");
  if (partition_type(x) != partition_type(y) || quandle_polynomial(x) != quandle_polynomial(y))
    return std::nullopt;
  IsomorphismSearch search(x, y);
  if (!search.run())
    return std::nullopt;
  return search.result();
}

Quandle relabel(const Quandle &x, const Permutation &sigma)
{
  std::size_t n = x.size();
  if (sigma.degree() != n)
    throw Error(ErrorCode::size_mismatch, "relabeling of wrong degree");
  std::vector<int> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      flat[static_cast<std::size_t>(sigma(static_cast<int>(i))) * n +
           static_cast<std::size_t>(sigma(static_cast<int>(j)))] =
          sigma(x.op(static_cast<int>(i), static_cast<int>(j)));
  return Quandle::trusted(n, std::move(flat));
}

namespace {

std::vector<int> canonical_flat(const Quandle &x)
{
  int n = static_cast<int>(x.size());
  std::size_t nn = x.size() * x.size();
  // tau maps new label -> old element; inv is its inverse.
  std::vector<int> tau(x.size()), inv(x.size());
  std::iota(tau.begin(), tau.end(), 0);
  std::vector<int> best = x.flat();
  std::vector<int> cand(nn);

  do {
    for (int a = 0; a < n; ++a)
      inv[tau[a]] = a;
    bool smaller = false;
    bool abort = false;
    for (int a = 0; a < n && !abort; ++a)
      for (int b = 0; b < n; ++b) {
        int v = inv[x.op(tau[a], tau[b])];
        std::size_t idx = static_cast<std::size_t>(a * n + b);
        cand[idx] = v;
        if (!smaller) {
          if (v > best[idx]) {
            abort = true;
            break;
          }
          if (v < best[idx])
            smaller = true;
        }
      }
    if (smaller && !abort)
      best = cand;
  } while (std::next_permutation(tau.begin(), tau.end()));
  return best;
}

class QuandleEnumerator {
public:
  explicit QuandleEnumerator(std::size_t n)
  : n_(static_cast<int>(n))
  {
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i)
        if (i != j)
          cells_.push_back({i, j});
  }

  struct State {
    std::vector<int> table;             // -1 for unassigned
    std::vector<unsigned> column_used;  // bitmask of images used per column
  };

  State initial() const
  {
    State s;
    s.table.assign(static_cast<std::size_t>(n_ * n_), -1);
    s.column_used.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      s.table[static_cast<std::size_t>(i * n_ + i)] = i;
      s.column_used[static_cast<std::size_t>(i)] |= 1u << i;
    }
    return s;
  }

  /// All partial states with the first column complete and consistent.
  std::vector<State> first_column_states() const
  {
    std::vector<State> out;
    State s = initial();
    std::size_t depth = static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0);
    collect(s, 0, depth, out);
    return out;
  }

  void complete(State &s, std::size_t from, std::set<std::vector<int>> &found) const
  {
    if (from == cells_.size()) {
      found.insert(canonical_flat(Quandle::trusted(static_cast<std::size_t>(n_), s.table)));
      return;
    }
    auto [i, j] = cells_[from];
    for (int v = 0; v < n_; ++v) {
      if (s.column_used[j] & (1u << v))
        continue;
      assign(s, i, j, v);
      if (consistent(s))
        complete(s, from + 1, found);
      unassign(s, i, j, v);
    }
  }

private:
  void collect(State &s, std::size_t from, std::size_t stop, std::vector<State> &out) const
  {
    if (from == stop) {
      out.push_back(s);
      return;
    }
    auto [i, j] = cells_[from];
    for (int v = 0; v < n_; ++v) {
      if (s.column_used[j] & (1u << v))
        continue;
      assign(s, i, j, v);
      if (consistent(s))
        collect(s, from + 1, stop, out);
      unassign(s, i, j, v);
    }
  }

  void assign(State &s, int i, int j, int v) const
  {
    s.table[static_cast<std::size_t>(i * n_ + j)] = v;
    s.column_used[j] |= 1u << v;
  }

  void unassign(State &s, int i, int j, int v) const
  {
    s.table[static_cast<std::size_t>(i * n_ + j)] = -1;
    s.column_used[j] &= ~(1u << v);
  }

  // (i ▷ j) ▷ k = (i ▷ k) ▷ (j ▷ k) wherever both sides are determined.
  bool consistent(const State &s) const
  {
    const int *t = s.table.data();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int a = t[i * n_ + j];
        if (a < 0)
          continue;
        for (int k = 0; k < n_; ++k) {
          int b = t[i * n_ + k], c = t[j * n_ + k];
          if (b < 0 || c < 0)
            continue;
          int lhs = t[a * n_ + k], rhs = t[b * n_ + c];
          if (lhs >= 0 && rhs >= 0 && lhs != rhs)
            return false;
        }
      }
    return true;
  }

  int n_;
  std::vector<std::pair<int, int>> cells_;
};

} // namespace

Table canonical_form(const Quandle &x, std::size_t max_n)
{
  if (x.size() > max_n)
    throw CapacityError("canonical form limited to order " + std::to_string(max_n));
  return Quandle::trusted(x.size(), canonical_flat(x)).table();
}

std::vector<Quandle> enumerate_quandles(std::size_t n, const EnumerationOptions &options)
{
  if (n == 0)
    throw Error(ErrorCode::empty_quandle, "enumeration order must be positive");
  if (n > options.max_n)
    throw CapacityError("enumeration limited to order " + std::to_string(options.max_n));
  if (n > 8)
    throw CapacityError("enumeration supports order at most 8");

  QuandleEnumerator en(n);
  auto starts = en.first_column_states();

  std::vector<std::set<std::vector<int>>> found(starts.size());
  detail::parallel_for(starts.size(), options.threads, [&](std::size_t t) {
    auto state = starts[t];
    en.complete(state, n - 1, found[t]);
  });

  std::set<std::vector<int>> all;
  for (auto &f : found)
    all.merge(f);

  std::vector<Quandle> out;
  out.reserve(all.size());
  for (const auto &flat : all)
    out.push_back(Quandle::trusted(n, flat));
  return out;
}

} // namespace quandlekit
