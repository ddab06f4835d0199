#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "crg/hurwitz.hpp"

namespace testing {

inline crg::GroupParams G(const char* text) { return crg::GroupParams::parse(text); }

/// Element from 1-based permutation images and weights.
inline crg::WreathElement elem(const crg::GroupParams& params, std::vector<int> images, std::vector<crg::Weight> weights) {
  std::vector<std::uint8_t> p;
  for (int v : images) p.push_back(static_cast<std::uint8_t>(v - 1));
  return crg::WreathElement(params, crg::Permutation(p), std::move(weights));
}

/// [(i j); k] with 1-based i, j.
inline crg::Reflection trans(const crg::GroupParams& params, int i, int j, crg::Weight k) {
  return crg::Reflection::transposition(params, i - 1, j - 1, k);
}

/// [eps; w e_position] with 1-based position.
inline crg::Reflection diag(const crg::GroupParams& params, int position, crg::Weight w) {
  return crg::Reflection::diagonal(params, position - 1, w);
}

inline crg::Factorization fact(const crg::GroupParams& params, std::vector<crg::Reflection> factors) {
  return crg::Factorization(params, std::move(factors));
}

inline crg::BraidWord word(std::vector<int> letters) { return crg::BraidWord(std::move(letters)); }

/// Uniform element; cover weights drawn from [-span, span].
inline crg::WreathElement random_element(const crg::GroupParams& params, std::mt19937_64& rng, int span = 3) {
  const int n = params.rank();
  std::vector<std::uint8_t> p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
  std::shuffle(p.begin(), p.end(), rng);
  const bool cover = params.is_cover();
  const int hi = cover ? span : params.modulus() - 1;
  const int lo = cover ? -span : 0;
  std::uniform_int_distribution<int> pick(lo, hi);
  std::vector<crg::Weight> w(static_cast<std::size_t>(n));
  crg::Weight total = 0;
  for (auto& x : w) total += (x = pick(rng));
  if (params.family() == crg::Family::Full) w.back() -= total;
  return crg::WreathElement(params, crg::Permutation(p), w);
}

inline crg::BraidWord random_word(std::size_t m, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, static_cast<int>(m) - 1);
  std::bernoulli_distribution sign;
  std::vector<int> letters;
  for (std::size_t k = 0; k < length; ++k) letters.push_back(sign(rng) ? pick(rng) : -pick(rng));
  return crg::BraidWord(letters);
}

}  // namespace testing
