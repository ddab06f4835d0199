#include "crg/detail/symmetric_search.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "crg/errors.hpp"

namespace crg::detail {

namespace {

std::uint8_t apply_transposition(Transposition t, std::uint8_t k) {
  if (k == t.i) return t.j;
  if (k == t.j) return t.i;
  return k;
}

// t s t for transpositions s, t.
Transposition conjugate_by(Transposition s, Transposition t) {
  auto a = apply_transposition(t, s.i);
  auto b = apply_transposition(t, s.j);
  return a < b ? Transposition{a, b} : Transposition{b, a};
}

void move(TranspositionTuple& tuple, std::size_t i, int sign) {
  auto& left = tuple[i - 1];
  auto& right = tuple[i];
  if (sign > 0) {
    auto moved = conjugate_by(left, right);
    left = right;
    right = moved;
  } else {
    auto moved = conjugate_by(right, left);
    right = left;
    left = moved;
  }
}

std::string key_of(const TranspositionTuple& tuple) {
  std::string key;
  key.reserve(tuple.size() * 2);
  for (auto t : tuple) {
    key.push_back(static_cast<char>(t.i));
    key.push_back(static_cast<char>(t.j));
  }
  return key;
}

BraidWord search(const TranspositionTuple& start, const std::function<bool(const TranspositionTuple&)>& goal,
                 std::size_t budget) {
  if (goal(start)) return {};
  struct Node {
    TranspositionTuple tuple;
    std::size_t parent;
    int letter;
  };
  std::vector<Node> nodes{{start, 0, 0}};
  std::unordered_map<std::string, std::size_t> seen{{key_of(start), 0}};
  const auto m = start.size();
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (std::size_t i = 1; i < m; ++i) {
      for (int sign : {1, -1}) {
        auto next = nodes[head].tuple;
        move(next, i, sign);
        if (!seen.emplace(key_of(next), nodes.size()).second) continue;
        nodes.push_back({next, head, sign * static_cast<int>(i)});
        if (goal(next)) {
          std::vector<int> letters;
          for (std::size_t at = nodes.size() - 1; at != 0; at = nodes[at].parent) letters.push_back(nodes[at].letter);
          return BraidWord(std::vector<int>(letters.rbegin(), letters.rend()));
        }
        if (nodes.size() > budget) throw BudgetExceeded("symmetric-group braid search exceeded its state budget");
      }
    }
  }
  throw std::invalid_argument("target is not in the Hurwitz orbit of the projected tuple");
}

}  // namespace

TranspositionTuple project_transpositions(std::span<const Reflection> factors) {
  TranspositionTuple out;
  out.reserve(factors.size());
  for (const auto& r : factors) {
    if (!r.is_transposition()) throw std::invalid_argument("expected transposition-like factors only");
    const auto& t = r.as_transposition();
    out.push_back({static_cast<std::uint8_t>(t.i), static_cast<std::uint8_t>(t.j)});
  }
  return out;
}

void apply_symmetric_braid(TranspositionTuple& tuple, const BraidWord& w) {
  check_braid(w, tuple.size());
  for (int l : w.letters()) move(tuple, static_cast<std::size_t>(l < 0 ? -l : l), l < 0 ? -1 : 1);
}

BraidWord braid_to_front(const TranspositionTuple& tuple, Transposition wanted, std::size_t budget) {
  if (tuple.empty()) throw std::invalid_argument("empty transposition tuple");
  return search(tuple, [wanted](const TranspositionTuple& t) { return t.front() == wanted; }, budget);
}

TranspositionTuple staircase(int n, std::size_t len) {
  const auto minimal = static_cast<std::size_t>(n - 1);
  if (len < minimal) throw std::invalid_argument("tuple shorter than n - 1");
  TranspositionTuple out(len - minimal, Transposition{0, 1});
  for (int k = 0; k + 1 < n; ++k) out.push_back({static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(k + 1)});
  return out;
}

BraidWord braid_to_staircase(const TranspositionTuple& tuple, int n, std::size_t budget) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::string>, BraidWord> memo;
  const auto key = std::make_pair(n, key_of(tuple));
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const auto target = staircase(n, tuple.size());
  auto word = search(tuple, [&target](const TranspositionTuple& t) { return t == target; }, budget);
  std::lock_guard lock(mutex);
  memo.emplace(key, word);
  return word;
}

}  // namespace crg::detail
