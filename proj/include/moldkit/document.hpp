#pragma once

#include <string>
#include <variant>
#include <vector>

#include "moldkit/rep.hpp"

namespace moldkit {

using AnyRep = std::variant<RepTuple<Fp>, RepTuple<Rational>>;

/// A representation document:
///   {"field": {"p": 5} | "Q", "mode": "monoid" | "group",
///    "generators": [[[a, b], [c, d]], ...], "words": ["1,2,-1", ...]}
/// Entries are JSON integers or strings; rationals are written "a/b".
struct RepDocument {
  FieldSpec field;
  Mode mode;
  AnyRep rep;
  std::vector<Word> words;
};

/// Throws ParseError on malformed JSON or words, ValidationError on schema
/// violations (wrong field element, singular group generator, ...). Messages
/// carry the byte offset or JSON pointer of the problem.
RepDocument parse_rep_document(const std::string& text);

}  // namespace moldkit
