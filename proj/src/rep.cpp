#include "moldkit/rep.hpp"

#include <charconv>

namespace moldkit {

Word Word::parse(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    int value = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value == 0) {
      throw Error(ErrorCode::ParseError, "bad letter '" + tok + "' at offset " + std::to_string(pos) +
                                             " in word '" + text + "'");
    }
    w.letters.push_back(value);
    pos = comma + 1;
  }
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t rank, Mode mode, std::size_t max_len) {
  std::vector<int> alphabet;
  for (std::size_t i = 1; i <= rank; ++i) alphabet.push_back(static_cast<int>(i));
  if (mode == Mode::Group) {
    for (std::size_t i = 1; i <= rank; ++i) alphabet.push_back(-static_cast<int>(i));
  }
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (int l : alphabet) next.push_back(w.concat(Word::letter(l)));
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace moldkit
