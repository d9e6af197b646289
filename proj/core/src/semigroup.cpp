#include "semidyn/semigroup.hpp"

#include "semidyn/error.hpp"

namespace semidyn {

SemigroupSpec::SemigroupSpec(std::vector<MapDescriptor> generators, std::string label)
    : generators_(std::move(generators)), label_(std::move(label)) {
  if (generators_.empty()) {
    throw Error(ErrorCode::InvalidParameter, "a semigroup needs at least one generator");
  }
}

void Word::validate(const SemigroupSpec& spec) const {
  if (letters_.empty()) throw Error(ErrorCode::InvalidParameter, "empty word");
  for (auto letter : letters_) {
    if (letter >= spec.size()) {
      throw Error(ErrorCode::InvalidParameter,
                  "letter " + std::to_string(letter) + " out of range for " +
                      std::to_string(spec.size()) + " generators");
    }
  }
}

Word concat(const Word& first, const Word& then) {
  std::vector<std::uint32_t> letters = first.letters_;
  letters.insert(letters.end(), then.letters_.begin(), then.letters_.end());
  return Word(std::move(letters));
}

std::string to_string(const Word& w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.length(); ++k) {
    if (k) out += ',';
    out += std::to_string(w.letters()[k]);
  }
  return out + "]";
}

std::uint64_t word_count(std::size_t n, int max_length) {
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (int len = 1; len <= max_length; ++len) {
    level *= n;
    total += level;
  }
  return total;
}

std::vector<Word> words_up_to(const SemigroupSpec& spec, int max_length, std::size_t budget) {
  if (max_length < 1) throw Error(ErrorCode::InvalidParameter, "word length must be >= 1");
  const std::size_t n = spec.size();
  // Overflow-safe count check before enumerating.
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (int len = 1; len <= max_length; ++len) {
    if (level > budget / n + 1) {
      total = budget + 1ULL;
      break;
    }
    level *= n;
    total += level;
    if (total > budget) break;
  }
  if (total > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(n) + " generators at depth " + std::to_string(max_length) +
                    " exceed the word budget of " + std::to_string(budget));
  }

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(total));
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::uint32_t> letters(static_cast<std::size_t>(len), 0);
    while (true) {
      words.emplace_back(letters);
      int pos = len - 1;
      while (pos >= 0 && letters[static_cast<std::size_t>(pos)] + 1 == n) {
        letters[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++letters[static_cast<std::size_t>(pos)];
    }
  }
  return words;
}

Complex eval_word(const SemigroupSpec& spec, const Word& w, Complex z) noexcept {
  for (auto letter : w.letters()) {
    z = eval_map(spec.generators()[letter], z);
    if (is_overflow(z)) return overflow_value();
  }
  return z;
}

RandomWordStream random_word_stream(const SemigroupSpec& spec, std::uint64_t seed,
                                    std::uint64_t stream) {
  return RandomWordStream(spec.size(), seed, stream);
}

}  // namespace semidyn
