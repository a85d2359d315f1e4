#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "moldkit/mat2.hpp"

namespace moldkit {

enum class Mode { Monoid, Group };

inline std::string to_string(Mode m) { return m == Mode::Monoid ? "monoid" : "group"; }

/// A word in the generators: 1-based indices, negative for inverses (group
/// mode only). The empty word is the identity.
struct Word {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  /// Parses "1,2,-1"; the empty string is the empty word.
  static Word parse(const std::string& text);
  std::string to_string() const;

  Word concat(const Word& o) const {
    Word w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
  }
  static Word letter(int i) { return Word{{i}}; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Images of the generators of a free monoid or group.
template <ExactField F>
class RepTuple {
 public:
  RepTuple(std::vector<Mat2<F>> gens, Mode mode) : gens_(std::move(gens)), mode_(mode) {
    if (gens_.empty()) throw Error(ErrorCode::ValidationError, "a representation needs at least one generator");
    const FieldSpec s = gens_.front().spec();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].spec() != s) throw Error(ErrorCode::FieldMismatch, "generators live in different fields");
      if (mode_ == Mode::Group && det(gens_[i]).is_zero()) {
        throw Error(ErrorCode::NonInvertibleGenerator, "generator " + std::to_string(i + 1) + " is singular");
      }
    }
  }

  const std::vector<Mat2<F>>& gens() const { return gens_; }
  const Mat2<F>& gen(std::size_t i) const { return gens_[i]; }
  std::size_t size() const { return gens_.size(); }
  Mode mode() const { return mode_; }
  FieldSpec spec() const { return gens_.front().spec(); }

  /// Validates a letter against the rank and mode.
  void check_word(const Word& w) const {
    for (int l : w.letters) {
      const auto idx = static_cast<std::size_t>(l < 0 ? -l : l);
      if (l == 0 || idx > gens_.size()) {
        throw Error(ErrorCode::InvalidWord, "letter " + std::to_string(l) + " out of range");
      }
      if (l < 0 && mode_ != Mode::Group) {
        throw Error(ErrorCode::InvalidWord, "inverse letter in a monoid word");
      }
    }
  }

  /// The image of a single letter.
  Mat2<F> letter_image(int l) const {
    check_word(Word::letter(l));
    if (l > 0) return gens_[static_cast<std::size_t>(l - 1)];
    const auto& g = gens_[static_cast<std::size_t>(-l - 1)];
    if (det(g).is_zero()) throw Error(ErrorCode::NonInvertibleGenerator, "inverse of a singular generator");
    return inverse(g);
  }

  Mat2<F> image(const Word& w) const {
    check_word(w);
    Mat2<F> acc = Mat2<F>::identity(spec());
    for (int l : w.letters) acc = acc * letter_image(l);
    return acc;
  }

  /// P^{-1} t P, generator by generator.
  RepTuple conjugated(const Mat2<F>& p) const {
    const Mat2<F> pinv = inverse(p);
    std::vector<Mat2<F>> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(pinv * g * p);
    return RepTuple(std::move(out), mode_);
  }

  friend bool operator==(const RepTuple&, const RepTuple&) = default;

 private:
  std::vector<Mat2<F>> gens_;
  Mode mode_;
};

/// All words of length <= max_len over the positive generators (and their
/// inverses in group mode), shortlex order.
std::vector<Word> words_up_to(std::size_t rank, Mode mode, std::size_t max_len);

}  // namespace moldkit
