#include "moldkit/document.hpp"

#include <json.hpp>

namespace moldkit {

namespace {

using json = nlohmann::json;

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ValidationError, where + ": " + what);
}

Fp fp_entry(const json& v, const FieldSpec& spec, const std::string& where) {
  const std::uint32_t p = spec.modulus();
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Fp(static_cast<std::int64_t>(v.get<std::uint64_t>() % p), p);
    return Fp(v.get<std::int64_t>(), p);
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find('/') != std::string::npos) invalid(where, "fractions are not F_p elements: '" + s + "'");
    Rational r = [&] {
      try {
        return Rational::parse(s);
      } catch (const Error&) {
        invalid(where, "not an integer: '" + s + "'");
      }
    }();
    mpz_class rem;
    mpz_class mod = static_cast<unsigned long>(p);
    mpz_fdiv_r(rem.get_mpz_t(), r.value().get_num_mpz_t(), mod.get_mpz_t());
    return Fp(static_cast<std::int64_t>(rem.get_ui()), p);
  }
  invalid(where, "expected an integer or a decimal string");
}

Rational q_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(mpq_class(std::to_string(v.get<std::uint64_t>())));
    return Rational(v.get<std::int64_t>(), 1);
  }
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      invalid(where, e.what());
    }
  }
  invalid(where, "expected an integer or a string \"a/b\" (floats are not accepted)");
}

template <class F, class Entry>
std::vector<Mat2<F>> read_generators(const json& gens, Entry entry) {
  std::vector<Mat2<F>> out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "/generators/" + std::to_string(g);
    const json& m = gens[g];
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
        m[1].size() != 2) {
      invalid(where, "expected [[a, b], [c, d]]");
    }
    auto at = [&](int i, int j) { return entry(m[i][j], where + "/" + std::to_string(i) + "/" + std::to_string(j)); };
    out.push_back({at(0, 0), at(0, 1), at(1, 0), at(1, 1)});
  }
  return out;
}

}  // namespace

RepDocument parse_rep_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) invalid("/", "document must be a JSON object");
  for (const auto& [k, v] : doc.items()) {
    if (k != "field" && k != "mode" && k != "generators" && k != "words") invalid("/" + k, "unknown key");
  }

  if (!doc.contains("field")) invalid("/field", "missing");
  const json& f = doc["field"];
  FieldSpec spec = FieldSpec::rationals();
  if (f.is_string()) {
    if (f.get<std::string>() != "Q") invalid("/field", "expected \"Q\" or {\"p\": prime}");
  } else if (f.is_object() && f.size() == 1 && f.contains("p") && f["p"].is_number_integer()) {
    try {
      spec = FieldSpec::prime(f["p"].get<std::int64_t>());
    } catch (const Error& e) {
      invalid("/field/p", e.what());
    }
  } else {
    invalid("/field", "expected \"Q\" or {\"p\": prime}");
  }

  Mode mode = Mode::Monoid;
  if (doc.contains("mode")) {
    const json& m = doc["mode"];
    if (m == "monoid") {
      mode = Mode::Monoid;
    } else if (m == "group") {
      mode = Mode::Group;
    } else {
      invalid("/mode", "expected \"monoid\" or \"group\"");
    }
  }

  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty()) {
    invalid("/generators", "expected a non-empty array of matrices");
  }
  const json& gens = doc["generators"];

  auto build = [&](auto mats) -> AnyRep {
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (mode == Mode::Group && det(mats[i]).is_zero()) {
        invalid("/generators/" + std::to_string(i), "singular generator in group mode");
      }
    }
    using T = typename decltype(mats)::value_type;
    using Scalar = std::decay_t<decltype(std::declval<T>().a11)>;
    return RepTuple<Scalar>(std::move(mats), mode);
  };
  AnyRep rep = spec.is_prime()
                   ? build(read_generators<Fp>(gens, [&](const json& v, const std::string& w) { return fp_entry(v, spec, w); }))
                   : build(read_generators<Rational>(gens, q_entry));

  std::vector<Word> words;
  if (doc.contains("words")) {
    const json& ws = doc["words"];
    if (!ws.is_array()) invalid("/words", "expected an array");
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::string where = "/words/" + std::to_string(i);
      Word w;
      if (ws[i].is_string()) {
        try {
          w = Word::parse(ws[i].get<std::string>());
        } catch (const Error& e) {
          throw Error(ErrorCode::ParseError, where + ": " + e.what());
        }
      } else if (ws[i].is_array()) {
        for (const auto& l : ws[i]) {
          if (!l.is_number_integer() || l.get<std::int64_t>() == 0) invalid(where, "letters are nonzero integers");
          w.letters.push_back(l.get<int>());
        }
      } else {
        invalid(where, "expected \"1,2,-1\" or [1, 2, -1]");
      }
      try {
        std::visit([&](const auto& t) { t.check_word(w); }, rep);
      } catch (const Error& e) {
        invalid(where, e.what());
      }
      words.push_back(std::move(w));
    }
  }
  return RepDocument{spec, mode, std::move(rep), std::move(words)};
}

}  // namespace moldkit
