#include "crg/orbit.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "crg/errors.hpp"
#include "crg/reflection.hpp"
#include "tuple_arith.hpp"

namespace crg {

namespace detail {

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

/// Open-addressing set of m-tuples stored contiguously in insertion order.
/// find() never writes, so concurrent finds are safe between inserts.
class FlatTupleSet {
 public:
  explicit FlatTupleSet(std::size_t m) : m_(m), slots_(1024, kEmpty) {}

  std::size_t size() const { return count_; }
  std::size_t width() const { return m_; }
  const std::uint64_t* tuple(std::uint32_t index) const { return arena_.data() + std::size_t{index} * m_; }
  std::span<const std::uint64_t> all() const { return arena_; }

  std::optional<std::uint32_t> find(const std::uint64_t* t) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(t) & mask;; s = (s + 1) & mask) {
      const auto index = slots_[s];
      if (index == kEmpty) return std::nullopt;
      if (std::equal(t, t + m_, tuple(index))) return index;
    }
  }

  /// Index of t and whether it was new.
  std::pair<std::uint32_t, bool> insert(const std::uint64_t* t) {
    if (auto found = find(t)) return {*found, false};
    if (count_ + 1 >= kEmpty) throw BudgetExceeded("tuple set index space exhausted");
    if (2 * (count_ + 1) > slots_.size()) grow();
    const auto index = static_cast<std::uint32_t>(count_++);
    arena_.insert(arena_.end(), t, t + m_);
    place(index);
    return {index, true};
  }

 private:
  std::uint64_t hash(const std::uint64_t* t) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t k = 0; k < m_; ++k) h = mix(h ^ t[k]) + k;
    return h;
  }
  void place(std::uint32_t index) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = hash(tuple(index)) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = index;
  }
  void grow() {
    slots_.assign(slots_.size() * 2, kEmpty);
    for (std::uint32_t i = 0; i < count_; ++i) place(i);
  }

  std::size_t m_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint32_t> slots_;
};

struct OrbitData {
  Factorization start;
  std::shared_ptr<TupleArith> arith;
  FlatTupleSet set;
  std::vector<std::uint32_t> parent;
  std::vector<std::int32_t> letter;

  OrbitData(Factorization f, std::shared_ptr<TupleArith> a)
      : start(std::move(f)), arith(std::move(a)), set(start.size()) {}

  std::vector<std::uint64_t> encode(const Factorization& f) const {
    std::vector<std::uint64_t> keys;
    for (const auto& r : f.factors()) keys.push_back(arith->encode(r.element()));
    return keys;
  }
  Factorization decode(const std::uint64_t* t) const {
    std::vector<WreathElement> elements;
    for (std::size_t k = 0; k < set.width(); ++k) elements.push_back(arith->decode(t[k]));
    return Factorization::from_elements(start.params(), elements);
  }
  BraidWord certificate(std::uint32_t index) const {
    std::vector<int> letters;
    for (; index != 0; index = parent[index]) letters.push_back(letter[index]);
    std::reverse(letters.begin(), letters.end());
    return BraidWord(std::move(letters));
  }
  /// Each member arises from its parent by its stored letter, so every
  /// certificate replays.
  bool validate() const {
    const std::size_t m = set.width();
    std::vector<std::uint64_t> t(m);
    for (std::uint32_t i = 1; i < set.size(); ++i) {
      const auto* p = set.tuple(parent[i]);
      std::copy(p, p + m, t.begin());
      arith->apply(t, letter[i]);
      if (!std::equal(t.begin(), t.end(), set.tuple(i))) return false;
    }
    return true;
  }
};

namespace {

enum class BfsStatus { Closed, Hit, OutOfBudget };

constexpr std::size_t kChunk = 2048;

// Level-synchronous breadth-first closure. Each chunk of the frontier is
// expanded (in parallel when allowed), filtered against the set read-only,
// then merged sequentially in frontier order, so the discovery order does not
// depend on the thread count.
BfsStatus run_bfs(OrbitData& data, std::size_t budget, unsigned threads, const std::uint64_t* stop_at,
                  std::uint32_t* hit) {
  auto& set = data.set;
  const std::size_t m = set.width();
  const auto first = data.encode(data.start);
  set.insert(first.data());
  data.parent.assign(1, 0);
  data.letter.assign(1, 0);
  if (stop_at && std::equal(first.begin(), first.end(), stop_at)) {
    *hit = 0;
    return BfsStatus::Hit;
  }
  if (m < 2) return BfsStatus::Closed;
  const std::size_t moves = 2 * (m - 1);
  if (!data.arith->thread_safe()) threads = 1;
  threads = std::max(1U, threads);

  std::vector<std::uint64_t> states;
  std::vector<std::uint64_t> neighbours;
  std::vector<char> fresh;
  std::size_t lo = 0;
  while (lo < set.size()) {
    const std::size_t hi = set.size();
    for (std::size_t c = lo; c < hi; c += kChunk) {
      const std::size_t count = std::min(kChunk, hi - c);
      states.assign(set.tuple(static_cast<std::uint32_t>(c)), set.tuple(static_cast<std::uint32_t>(c)) + count * m);
      neighbours.resize(count * moves * m);
      fresh.assign(count * moves, 0);

      auto work = [&](std::size_t s_lo, std::size_t s_hi) {
        if (s_lo >= s_hi) return;
        data.arith->expand(std::span<const std::uint64_t>(states).subspan(s_lo * m, (s_hi - s_lo) * m), m,
                           neighbours.data() + s_lo * moves * m);
        for (std::size_t j = s_lo * moves; j < s_hi * moves; ++j) {
          fresh[j] = !set.find(neighbours.data() + j * m).has_value();
        }
      };
      if (threads == 1 || count < 2 * threads) {
        work(0, count);
      } else {
        std::vector<std::thread> pool;
        const std::size_t per = (count + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t * per, std::min(count, (t + 1) * per));
        for (auto& th : pool) th.join();
      }

      for (std::size_t j = 0; j < count * moves; ++j) {
        if (!fresh[j]) continue;
        const auto* t = neighbours.data() + j * m;
        auto [index, inserted] = set.insert(t);
        if (!inserted) continue;
        data.parent.push_back(static_cast<std::uint32_t>(c + j / moves));
        data.letter.push_back(detail::letter_of_neighbour(j % moves));
        if (stop_at && std::equal(t, t + m, stop_at)) {
          *hit = index;
          return BfsStatus::Hit;
        }
        if (set.size() > budget) return BfsStatus::OutOfBudget;
      }
    }
    lo = hi;
  }
  return BfsStatus::Closed;
}

// Residual pruning table: reach[k] marks group elements that are products of
// exactly k reflections. Only built for groups small enough to index densely.
struct ReachTable {
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::vector<char>> reach;

  bool contains(std::size_t k, std::uint64_t key) const {
    auto it = index.find(key);
    return it != index.end() && reach[k][it->second];
  }
};

constexpr std::uint64_t kReachOrderCap = 2'000'000;

std::optional<ReachTable> build_reach(TupleArith& arith, const GroupParams& params,
                                      std::span<const std::uint64_t> refl, std::size_t m) {
  if (params.order() > kReachOrderCap || params.order() * refl.size() * (m + 1) > 400'000'000ULL) return std::nullopt;
  ReachTable table;
  std::vector<std::uint64_t> elements{arith.encode(WreathElement::identity(params))};
  table.index.emplace(elements[0], 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (auto t : refl) {
      const auto y = arith.multiply(elements[i], t);
      if (table.index.emplace(y, static_cast<std::uint32_t>(elements.size())).second) elements.push_back(y);
    }
  }
  table.reach.assign(m + 1, std::vector<char>(elements.size(), 0));
  table.reach[0][0] = 1;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!table.reach[k][i]) continue;
      for (auto t : refl) table.reach[k + 1][table.index.at(arith.multiply(elements[i], t))] = 1;
    }
  }
  return table;
}

// Flat row-major list of m-tuples of keys, in lexicographic order.
std::vector<std::uint64_t> enumerate_keys(TupleArith& arith, const GroupParams& params, const WreathElement& target,
                                          std::size_t m, std::size_t budget) {
  if (params.is_cover()) throw std::invalid_argument("enumeration needs a finite group");
  if (target.params() != params) throw IncompatibleGroups("target is not in " + params.to_string());
  const auto goal = arith.encode(target);
  const auto id = arith.encode(WreathElement::identity(params));
  if (m == 0) return {};

  std::vector<std::uint64_t> refl;
  for (const auto& r : enumerate_reflections(params)) refl.push_back(arith.encode(r.element()));
  std::sort(refl.begin(), refl.end(), [&](auto a, auto b) { return arith.less(a, b); });
  const auto reach = build_reach(arith, params, refl, m);

  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> prefix(m + 1, id);  // prefix[j] = t_1 ... t_j
  std::vector<std::size_t> choice(m, 0);
  std::vector<std::uint64_t> current(m, 0);
  std::size_t visits = 0;
  std::size_t depth = 0;
  while (true) {
    if (choice[depth] == refl.size()) {
      if (depth == 0) break;
      choice[depth] = 0;
      ++choice[--depth];
      continue;
    }
    if (++visits > budget) throw BudgetExceeded("enumeration exceeded " + std::to_string(budget) + " nodes");
    const auto t = refl[choice[depth]];
    const auto p = arith.multiply(prefix[depth], t);
    const std::size_t left = m - depth - 1;
    bool viable;
    if (left == 0) {
      viable = p == goal;
    } else if (reach) {
      viable = reach->contains(left, arith.multiply(arith.inverse(p), goal));
    } else {
      viable = true;
    }
    if (!viable) {
      ++choice[depth];
      continue;
    }
    current[depth] = t;
    prefix[depth + 1] = p;
    if (left == 0) {
      out.insert(out.end(), current.begin(), current.end());
      ++choice[depth];
    } else {
      ++depth;
    }
  }
  return out;
}

}  // namespace

}  // namespace detail

std::vector<Factorization> enumerate_factorizations(const GroupParams& params, const WreathElement& target,
                                                    std::size_t m, std::size_t budget) {
  auto arith = detail::TupleArith::make(params);
  if (m == 0) {
    if (params.is_cover()) throw std::invalid_argument("enumeration needs a finite group");
    if (target.is_identity()) return {Factorization(params, {})};
    return {};
  }
  const auto keys = detail::enumerate_keys(*arith, params, target, m, budget);
  std::vector<Factorization> out;
  std::vector<WreathElement> elements;
  for (std::size_t i = 0; i < keys.size(); i += m) {
    elements.clear();
    for (std::size_t k = 0; k < m; ++k) elements.push_back(arith->decode(keys[i + k]));
    out.push_back(Factorization::from_elements(params, elements));
  }
  return out;
}

std::size_t Orbit::size() const { return data_->set.size(); }
const Factorization& Orbit::start() const { return data_->start; }

Factorization Orbit::member(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("orbit member index");
  return data_->decode(data_->set.tuple(static_cast<std::uint32_t>(index)));
}

BraidWord Orbit::certificate(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("orbit member index");
  return data_->certificate(static_cast<std::uint32_t>(index));
}

std::optional<std::size_t> Orbit::find(const Factorization& f) const {
  if (f.params() != data_->start.params() || f.size() != data_->start.size()) return std::nullopt;
  const auto keys = data_->encode(f);
  return data_->set.find(keys.data());
}

bool Orbit::validate_certificates() const { return data_->validate(); }

Orbit orbit_bfs(const Factorization& start, const OrbitOptions& options) {
  auto data = std::make_shared<detail::OrbitData>(start, detail::TupleArith::make(start.params()));
  std::uint32_t unused = 0;
  if (detail::run_bfs(*data, options.budget, options.threads, nullptr, &unused) == detail::BfsStatus::OutOfBudget) {
    throw BudgetExceeded("orbit exceeds " + std::to_string(options.budget) + " tuples");
  }
  return Orbit(std::move(data));
}

SameOrbitResult same_orbit(const Factorization& from, const Factorization& to, const OrbitOptions& options) {
  if (from.params() != to.params()) throw IncompatibleGroups("factorizations live in different groups");
  if (from.size() != to.size()) throw std::invalid_argument("factorizations have different lengths");
  if (!(from.product() == to.product())) throw std::invalid_argument("factorizations have different products");
  if (from == to) return {Connectivity::Connected, BraidWord{}, 1};

  detail::OrbitData data(from, detail::TupleArith::make(from.params()));
  const auto goal = data.encode(to);
  std::uint32_t hit = 0;
  const auto status = detail::run_bfs(data, options.budget, options.threads, goal.data(), &hit);
  const std::size_t explored = data.set.size();
  switch (status) {
    case detail::BfsStatus::Hit: {
      auto word = data.certificate(hit);
      if (!(apply_braid(from, word) == to)) throw InternalError("orbit certificate failed to replay");
      return {Connectivity::Connected, std::move(word), explored};
    }
    case detail::BfsStatus::Closed:
      return {Connectivity::NotConnected, std::nullopt, explored};
    case detail::BfsStatus::OutOfBudget:
      break;
  }
  return {Connectivity::Indeterminate, std::nullopt, explored};
}

OrbitReport verify_main_theorem(const GroupParams& params, std::size_t m, const VerifyOptions& options) {
  OrbitReport report{params, coxeter_element(params), m, 0, 0, 0, false, false, false, false, {}};
  auto arith = std::shared_ptr<detail::TupleArith>(detail::TupleArith::make(params));

  std::vector<std::uint64_t> keys;
  try {
    keys = detail::enumerate_keys(*arith, params, report.target, m, options.enumeration_budget);
  } catch (const BudgetExceeded&) {
    return report;
  }
  if (m == 0) {
    report.complete = report.sound = report.match = report.certificates_ok = true;
    return report;
  }

  detail::FlatTupleSet all(m);
  for (std::size_t i = 0; i < keys.size(); i += m) all.insert(keys.data() + i);
  const std::size_t count = all.size();
  report.factorization_count = count;

  std::unordered_map<std::uint64_t, ClassLabel> labels;
  auto multiset_of = [&](const std::uint64_t* t) {
    std::vector<ClassLabel> ms;
    for (std::size_t k = 0; k < m; ++k) {
      auto it = labels.find(t[k]);
      if (it == labels.end()) {
        auto r = classify(arith->decode(t[k]));
        if (!r) throw InternalError("enumerated factor is not a reflection");
        it = labels.emplace(t[k], class_label(*r)).first;
      }
      ms.push_back(it->second);
    }
    std::sort(ms.begin(), ms.end());
    return ms;
  };

  std::set<std::vector<ClassLabel>> blocks;
  for (std::uint32_t i = 0; i < count; ++i) blocks.insert(multiset_of(all.tuple(i)));
  report.class_multiset_count = blocks.size();

  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> orbit_of(count, kUnassigned);
  report.sound = true;
  report.certificates_ok = true;
  bool complete = true;
  std::vector<WreathElement> elements;
  for (std::uint32_t i = 0; i < count && complete; ++i) {
    if (orbit_of[i] != kUnassigned) continue;
    elements.clear();
    for (std::size_t k = 0; k < m; ++k) elements.push_back(arith->decode(all.tuple(i)[k]));
    detail::OrbitData data(Factorization::from_elements(params, elements), arith);
    std::uint32_t unused = 0;
    if (detail::run_bfs(data, options.orbit.budget, options.orbit.threads, nullptr, &unused) !=
        detail::BfsStatus::Closed) {
      complete = false;
      break;
    }
    const auto id = static_cast<std::uint32_t>(report.orbits.size());
    const auto ms = multiset_of(all.tuple(i));
    for (std::uint32_t k = 0; k < data.set.size(); ++k) {
      const auto found = all.find(data.set.tuple(k));
      if (!found || orbit_of[*found] != kUnassigned) throw InternalError("orbit leaves the enumerated factorizations");
      orbit_of[*found] = id;
      if (multiset_of(data.set.tuple(k)) != ms) report.sound = false;
    }
    report.certificates_ok = report.certificates_ok && data.validate();
    report.orbits.push_back({data.start, data.set.size(), ms});
  }
  report.orbit_count = report.orbits.size();
  report.complete = complete;
  report.match = report.complete && report.sound && report.orbit_count == report.class_multiset_count;
  return report;
}

}  // namespace crg
