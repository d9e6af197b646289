#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semidyn/complex.hpp"
#include "semidyn/map_catalog.hpp"
#include "semidyn/random.hpp"

namespace semidyn {

/// Finitely generated semigroup <f_0, ..., f_{n-1}>.
class SemigroupSpec {
 public:
  SemigroupSpec(std::vector<MapDescriptor> generators, std::string label);

  const std::vector<MapDescriptor>& generators() const noexcept { return generators_; }
  const MapDescriptor& generator(std::size_t i) const { return generators_.at(i); }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::string& label() const noexcept { return label_; }
  bool is_cyclic() const noexcept { return generators_.size() == 1; }

  bool operator==(const SemigroupSpec&) const = default;

 private:
  std::vector<MapDescriptor> generators_;
  std::string label_;
};

/// A word [i1, ..., ik] denotes f_{ik} o ... o f_{i1}: letters are applied
/// first to last, the order in which an orbit visits them.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint32_t> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<std::uint32_t> letters) : letters_(letters) {}

  const std::vector<std::uint32_t>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  /// Throws InvalidParameter if empty or any letter is out of range for spec.
  void validate(const SemigroupSpec& spec) const;

  friend Word concat(const Word& first, const Word& then);

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::uint32_t> letters_;
};

std::string to_string(const Word& w);

inline constexpr std::size_t kDefaultWordBudget = 100000;

/// Number of words of length 1..max_length over n letters.
std::uint64_t word_count(std::size_t n, int max_length);

/// All words of length <= max_length, shortest first and lexicographic
/// (first letter most significant) within a length. Throws BudgetExceeded
/// when the count would exceed `budget`.
std::vector<Word> words_up_to(const SemigroupSpec& spec, int max_length,
                              std::size_t budget = kDefaultWordBudget);

/// Applies the word's generators in letter order. Overflow is absorbing.
Complex eval_word(const SemigroupSpec& spec, const Word& w, Complex z) noexcept;

/// Stream of uniformly distributed generator indices determined by
/// (n, seed, stream). Distinct streams are independent.
class RandomWordStream {
 public:
  RandomWordStream(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0)
      : n_(static_cast<std::uint32_t>(n)), rng_(seed, stream) {}

  std::uint32_t next() noexcept { return n_ == 1 ? 0u : rng_.below(n_); }

 private:
  std::uint32_t n_;
  CounterRng rng_;
};

RandomWordStream random_word_stream(const SemigroupSpec& spec, std::uint64_t seed,
                                    std::uint64_t stream = 0);

}  // namespace semidyn
