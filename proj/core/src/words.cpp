#include "schottky/words.hpp"

#include <charconv>

namespace schottky {

bool is_reduced(std::span<const Letter> letters) {
  for (std::size_t k = 1; k < letters.size(); ++k) {
    if (letters[k] == letters[k - 1]) return false;
  }
  return true;
}

ReducedWord::ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("reduced words are nonempty");
  if (std::find(letters_.begin(), letters_.end(), Letter{0}) != letters_.end()) {
    throw std::invalid_argument("generator indices start at 1");
  }
  if (!is_reduced(letters_)) throw std::invalid_argument("word has equal adjacent letters");
}

ReducedWord ReducedWord::suffix() const {
  if (letters_.size() < 2) throw std::invalid_argument("suffix of a one-letter word is the identity");
  return ReducedWord(std::vector<Letter>(letters_.begin() + 1, letters_.end()));
}

ReducedWord ReducedWord::prefix() const {
  if (letters_.size() < 2) throw std::invalid_argument("prefix of a one-letter word is the identity");
  return ReducedWord(std::vector<Letter>(letters_.begin(), letters_.end() - 1));
}

ReducedWord ReducedWord::append(Letter letter) const {
  std::vector<Letter> out = letters_;
  out.push_back(letter);
  return ReducedWord(std::move(out));
}

ReducedWord ReducedWord::prepend(Letter letter) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + 1);
  out.push_back(letter);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return ReducedWord(std::move(out));
}

std::string ReducedWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters_[k]);
  }
  return out;
}

ReducedWord parse_word(std::string_view text) {
  std::vector<Letter> letters;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Letter value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("malformed word letter '" + std::string(token) + "'");
    }
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ReducedWord(std::move(letters));
}

std::uint64_t reduced_word_count(std::uint64_t m, std::size_t n) {
  if (n == 0) return 1;
  std::uint64_t count = m;
  for (std::size_t k = 1; k < n; ++k) count *= (m - 1);
  return count;
}

namespace {

void extend(WordWindow window, std::size_t n, std::vector<Letter>& buffer,
            const std::function<void(const ReducedWord&)>& visit) {
  if (buffer.size() == n) {
    visit(ReducedWord(buffer));
    return;
  }
  for (Letter i = window.first(); i <= window.last(); ++i) {
    if (!buffer.empty() && buffer.back() == i) continue;
    buffer.push_back(i);
    extend(window, n, buffer, visit);
    buffer.pop_back();
  }
}

}  // namespace

void for_each_word(WordWindow window, std::size_t n, std::optional<Letter> first_letter,
                   const std::function<void(const ReducedWord&)>& visit) {
  if (n == 0 || window.m == 0) return;
  std::vector<Letter> buffer;
  buffer.reserve(n);
  if (first_letter) {
    if (!window.contains(*first_letter)) return;
    buffer.push_back(*first_letter);
    extend(window, n, buffer, visit);
    return;
  }
  extend(window, n, buffer, visit);
}

std::vector<ReducedWord> enumerate_words(WordWindow window, std::size_t n) {
  std::vector<ReducedWord> out;
  out.reserve(static_cast<std::size_t>(reduced_word_count(window.m, n)));
  for_each_word(window, n, std::nullopt, [&](const ReducedWord& w) { out.push_back(w); });
  return out;
}

BeardonMargin beardon_check(const GeneratorSchedule& schedule, const ReducedWord& word, const Rational& mu) {
  if (word.length() < 2) throw HypothesisError("Beardon's bound relates words of length >= 2 to their suffix");
  const Rational gap = abs(schedule.entry(word[0]).center - schedule.entry(word[1]).center) - 1;
  if (gap <= 0) {
    throw HypothesisError("centres of " + std::to_string(word[0]) + " and " + std::to_string(word[1]) +
                          " are within distance 1");
  }
  BeardonMargin m;
  m.lhs = word_disk<Rational>(schedule, word).radius;
  const Rational suffix_radius = word_disk<Rational>(schedule, word.suffix()).radius;
  m.rhs = suffix_radius / (gap * gap);
  m.holds = m.lhs <= m.rhs;
  m.ratio = m.lhs / m.rhs;
  m.mu_rhs = mu * mu * suffix_radius;
  m.holds_mu = m.lhs <= m.mu_rhs;
  return m;
}

BeardonMargin beardon_check(const GeneratorSchedule& schedule, const ReducedWord& word) {
  return beardon_check(schedule, word, mu_constant(schedule));
}

Rational mu_constant(const GeneratorSchedule& schedule, std::span<const Letter> indices) {
  if (indices.size() < 2) throw HypothesisError("mu needs at least two generators");
  Rational best = 0;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[a] == indices[b]) continue;
      const Rational gap = abs(schedule.entry(indices[a]).center - schedule.entry(indices[b]).center) - 1;
      if (gap <= 0) {
        throw HypothesisError("centres of " + std::to_string(indices[a]) + " and " + std::to_string(indices[b]) +
                              " are within distance 1");
      }
      const Rational v = 1 / gap;
      if (v > best) best = v;
    }
  }
  return best;
}

Rational mu_constant(const GeneratorSchedule& schedule) {
  std::vector<Letter> all;
  for (const auto& e : schedule.entries()) all.push_back(e.index);
  return mu_constant(schedule, all);
}

}  // namespace schottky
