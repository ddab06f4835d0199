#include "crg/group_params.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <vector>

namespace crg {

namespace {

constexpr int kMaxRank = 64;

void check_rank(int n) {
  if (n < 2 || n > kMaxRank) {
    throw std::invalid_argument("rank n must lie in [2, " + std::to_string(kMaxRank) + "], got " + std::to_string(n));
  }
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

GroupParams GroupParams::finite(int d, Family family, int n) {
  if (d < 1) throw std::invalid_argument("modulus d must be positive, got " + std::to_string(d));
  check_rank(n);
  return GroupParams(d, d == 1 ? Family::One : family, n);
}

GroupParams GroupParams::cover(Family family, int n) {
  check_rank(n);
  return GroupParams(std::nullopt, family, n);
}

GroupParams GroupParams::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("group must be 'd,e,n', got '" + std::string(text) + "'");
  }
  int n = parse_int(parts[2]);
  if (parts[0] == "inf") {
    if (parts[1] == "1") return cover(Family::One, n);
    if (parts[1] == "inf") return cover(Family::Full, n);
    throw std::invalid_argument("generic cover needs e in {1, inf}, got '" + std::string(parts[1]) + "'");
  }
  int d = parse_int(parts[0]);
  if (parts[1] == "inf") throw std::invalid_argument("e = inf requires d = inf");
  int e = parse_int(parts[1]);
  if (e == 1) return finite(d, Family::One, n);
  if (e == d) return finite(d, Family::Full, n);
  throw std::invalid_argument("only e = 1 or e = d are supported, got '" + std::string(text) + "'");
}

int GroupParams::modulus() const {
  if (!modulus_) throw std::logic_error("generic cover has no finite modulus");
  return *modulus_;
}

std::uint64_t GroupParams::order() const {
  if (!modulus_) return std::numeric_limits<std::uint64_t>::max();
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  auto mul = [&](std::uint64_t f) {
    if (result > kMax / f) {
      result = kMax;
    } else {
      result *= f;
    }
  };
  for (int k = 2; k <= n_; ++k) mul(static_cast<std::uint64_t>(k));
  int powers = family_ == Family::Full ? n_ - 1 : n_;
  for (int k = 0; k < powers; ++k) mul(static_cast<std::uint64_t>(*modulus_));
  return result;
}

std::string GroupParams::to_string() const {
  if (!modulus_) return std::string("inf,") + (family_ == Family::One ? "1" : "inf") + "," + std::to_string(n_);
  std::string d = std::to_string(*modulus_);
  return d + "," + (family_ == Family::One ? "1" : d) + "," + std::to_string(n_);
}

}  // namespace crg
