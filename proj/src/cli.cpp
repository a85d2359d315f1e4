#include "moldkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "moldkit/canon.hpp"
#include "moldkit/census.hpp"
#include "moldkit/document.hpp"

namespace moldkit::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchema = "moldkit.report/1";

ojson encode(const Fp& x) { return x.value(); }
ojson encode(const Rational& x) { return x.to_string(); }

template <class F>
ojson encode(const Mat2<F>& m) {
  return ojson::array({ojson::array({encode(m.a11), encode(m.a12)}), ojson::array({encode(m.a21), encode(m.a22)})});
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string input_hash(const std::vector<std::string>& inputs) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& in : inputs) {
    feed(std::to_string(in.size()) + ":");
    feed(in);
  }
  return "fnv1a64:" + hex64(h);
}

ojson header(const std::string& command, const std::vector<std::string>& inputs) {
  ojson j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["input_hash"] = input_hash(inputs);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ojson witness_json(const std::optional<AirWitness>& w) {
  if (!w) return nullptr;
  return ojson{{"kind", to_string(w->kind)}, {"indices", w->indices}};
}

template <class F>
ojson classify_json(const RepTuple<F>& t) {
  const auto c = classify_with_witness(t);
  if ((c.label == Mold::Air) != air_by_discriminants(t)) {
    throw Error(ErrorCode::Inconsistent, "discriminant criterion disagrees with span dimension");
  }
  ojson j;
  j["label"] = to_string(c.label);
  j["dim"] = c.dim;
  j["witness"] = witness_json(c.witness);
  return j;
}

template <class F>
ojson invariants_json(const RepTuple<F>& t) {
  const auto iv = invariant_vector(t);
  ojson dets = ojson::array();
  for (const auto& d : iv.dets) dets.push_back(encode(d));
  ojson traces = ojson::array();
  for (const auto& [w, v] : iv.traces) traces.push_back({{"word", w.to_string()}, {"value", encode(v)}});
  return {{"dets", dets}, {"traces", traces}};
}

template <class F>
ojson companion_json(const RepTuple<F>& t) {
  ojson certs = ojson::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (is_scalar(t.gen(i))) continue;
    const auto c = companion_normalize(t.gen(i));
    if (c.P * c.companion != t.gen(i) * c.P) throw Error(ErrorCode::Inconsistent, "companion certificate failed");
    certs.push_back({{"generator", i + 1},
                     {"branch", to_string(c.branch)},
                     {"P", encode(c.P)},
                     {"companion", encode(c.companion)}});
  }
  return {{"kind", "companion"}, {"certificates", certs}};
}

template <class F>
ojson normalize_json(const RepTuple<F>& t, const std::vector<Word>& words) {
  const Mold label = classify(t);
  ojson form;
  switch (label) {
    case Mold::Scalar: {
      ojson values = ojson::array();
      for (const auto& c : scalar_decompose(t)) values.push_back(encode(c));
      form = {{"kind", "scalar"}, {"values", values}};
      break;
    }
    case Mold::Unipotent: {
      const auto cd = unipotent_decompose(t);
      ojson gens = ojson::array();
      for (std::size_t i = 1; i <= t.size(); ++i) {
        const Word w = Word::letter(static_cast<int>(i));
        if (unipotent_reconstruct(cd, w) != t.gen(i - 1)) throw Error(ErrorCode::Inconsistent, "round trip failed");
        gens.push_back({{"index", i}, {"r", encode(cd.r(w))}, {"d", encode(cd.d(w))}});
      }
      ojson ws = ojson::array();
      for (const auto& w : words) {
        ws.push_back({{"word", w.to_string()},
                      {"r", encode(cd.r(w))},
                      {"d", encode(cd.d(w))},
                      {"matrix", encode(unipotent_reconstruct(cd, w))}});
      }
      form = {{"kind", "character_derivation"},
              {"alpha", cd.alpha_index()},
              {"eta", encode(cd.eta_mat())},
              {"generators", gens},
              {"words", ws}};
      break;
    }
    case Mold::UnipotentF2: {
      const auto ch = uf2_decompose(t);
      ojson gens = ojson::array();
      for (std::size_t i = 1; i <= t.size(); ++i) {
        const Word w = Word::letter(static_cast<int>(i));
        if (uf2_reconstruct(ch, w) != t.gen(i - 1)) throw Error(ErrorCode::Inconsistent, "round trip failed");
        const auto v = ch.eval(w);
        gens.push_back({{"index", i}, {"a", encode(v.a)}, {"b", encode(v.b)}, {"d", encode(v.d)}});
      }
      ojson ws = ojson::array();
      for (const auto& w : words) {
        const auto v = ch.eval(w);
        ws.push_back({{"word", w.to_string()},
                      {"a", encode(v.a)},
                      {"b", encode(v.b)},
                      {"d", encode(v.d)},
                      {"matrix", encode(uf2_reconstruct(ch, w))}});
      }
      form = {{"kind", "ab_chart"},
              {"alpha", ch.base().to_string()},
              {"Z", encode(ch.z())},
              {"generators", gens},
              {"words", ws}};
      break;
    }
    case Mold::SemiSimple: {
      form = companion_json(t);
      const auto w = split_witness(t);
      form["split_word"] = w ? ojson(w->to_string()) : ojson(nullptr);
      break;
    }
    case Mold::Air:
    case Mold::Borel:
      form = companion_json(t);
      break;
  }
  return {{"label", to_string(label)}, {"normal_form", form}};
}

template <class F>
ojson equiv_json(const RepTuple<F>& t1, const RepTuple<F>& t2) {
  const bool both_ss = classify(t1) == Mold::SemiSimple && classify(t2) == Mold::SemiSimple &&
                       t1.size() == t2.size() && t1.mode() == t2.mode();
  std::optional<Mat2<F>> p;
  bool equivalent = false;
  if (both_ss) {
    equivalent = ss_equivalent(t1, t2);
    p = ss_conjugator(t1, t2);
    if (equivalent != general_conjugator(t1, t2).has_value() || equivalent != p.has_value()) {
      throw Error(ErrorCode::Inconsistent, "trace criterion disagrees with the intertwiner solver");
    }
  } else {
    p = general_conjugator(t1, t2);
    equivalent = p.has_value();
  }
  if (p && !is_conjugator(*p, t1, t2)) throw Error(ErrorCode::Inconsistent, "conjugator failed verification");
  ojson j;
  j["equivalent"] = equivalent;
  j["conjugator"] = p ? encode(*p) : ojson(nullptr);
  j["method"] = both_ss ? "trace" : "solver";
  return j;
}

ojson counts_json(const std::map<Mold, std::uint64_t>& m) {
  ojson j = ojson::object();
  for (Mold l : kAllMolds) j[to_string(l)] = m.count(l) ? m.at(l) : 0;
  return j;
}

std::filesystem::path cache_dir() {
  const char* env = std::getenv("MOLDKIT_CACHE");
  return (env && *env) ? std::filesystem::path(env) : std::filesystem::path("./.moldkit-cache");
}

ojson census_json(const CensusKey& key, bool orbits, bool report) {
  const CensusCache cache(cache_dir());
  auto cached = cache.load(key);
  const bool need_orbits = orbits || report;
  const bool usable = cached && (!need_orbits || cached->counts.has_orbits) && (!report || !cached->checks.empty());
  Report r;
  if (usable) {
    r = *cached;
  } else {
    if (report) {
      r = consistency_report(key);
    } else {
      r = Report{key, need_orbits ? orbit_census(key) : stratum_census(key), {}};
    }
    cache.store(r);
  }

  ojson j;
  j["key"] = {{"q", key.q}, {"m", key.m}, {"mode", to_string(key.mode)}};
  j["total"] = r.counts.total;
  j["points"] = counts_json(r.counts.points);
  if (need_orbits) j["orbits"] = counts_json(r.counts.orbits);
  if (report) {
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"source", c.source}});
    }
    j["checks"] = checks;
    j["passed"] = r.passed();
  }
  return j;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"moldkit: classify and compare 2-dimensional matrix representations"};
  app.name("moldkit");
  app.require_subcommand(1);

  std::string doc_path, doc_path2;
  auto* classify_cmd = app.add_subcommand("classify", "mold label, span dimension and air witness");
  classify_cmd->add_option("document", doc_path, "representation document (JSON)")->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "decide conjugacy of two representations");
  equiv_cmd->add_option("first", doc_path, "first document")->required();
  equiv_cmd->add_option("second", doc_path2, "second document")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "determinants and increasing-product traces");
  inv_cmd->add_option("document", doc_path, "representation document (JSON)")->required();

  auto* norm_cmd = app.add_subcommand("normalize", "canonical decomposition for the mold type");
  norm_cmd->add_option("document", doc_path, "representation document (JSON)")->required();

  std::uint32_t q = 2, m = 1;
  std::string mode = "monoid";
  bool orbits = false, report = false;
  auto* census_cmd = app.add_subcommand("census", "exhaustive stratum and orbit counts over F_q");
  census_cmd->add_option("--q", q, "prime field size")->required();
  census_cmd->add_option("--m", m, "number of generators")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--mode", mode, "monoid or group")->check(CLI::IsMember({"monoid", "group"}));
  census_cmd->add_flag("--orbits", orbits, "also count PGL2 orbits per stratum");
  census_cmd->add_flag("--report", report, "run the consistency checks");

  CommandResult res;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.err = std::string("usage error: ") + e.what() + "\n";
    return res;
  }

  try {
    ojson out;
    if (*classify_cmd || *inv_cmd || *norm_cmd) {
      const std::string text = read_file(doc_path);
      const auto doc = parse_rep_document(text);
      const std::string name = *classify_cmd ? "classify" : (*inv_cmd ? "invariants" : "normalize");
      out = header(name, {text});
      out["field"] = doc.field.to_string();
      out["mode"] = to_string(doc.mode);
      ojson body = std::visit(
          [&](const auto& t) -> ojson {
            if (*classify_cmd) return classify_json(t);
            if (*inv_cmd) return invariants_json(t);
            return normalize_json(t, doc.words);
          },
          doc.rep);
      out.update(body);
    } else if (*equiv_cmd) {
      const std::string a = read_file(doc_path), b = read_file(doc_path2);
      const auto d1 = parse_rep_document(a);
      const auto d2 = parse_rep_document(b);
      if (d1.field != d2.field) throw Error(ErrorCode::FieldMismatch, "documents declare different fields");
      out = header("equiv", {a, b});
      out["field"] = d1.field.to_string();
      ojson body = std::visit(
          [&](const auto& t1) -> ojson {
            using T = std::decay_t<decltype(t1)>;
            return equiv_json(t1, std::get<T>(d2.rep));
          },
          d1.rep);
      out.update(body);
    } else if (*census_cmd) {
      const CensusKey key{q, m, mode == "group" ? Mode::Group : Mode::Monoid};
      out = header("census", {key.to_string() + (orbits ? " orbits" : "") + (report ? " report" : "")});
      out.update(census_json(key, orbits, report));
    }
    res.out = out.dump(2) + "\n";
  } catch (const Error& e) {
    res.exit_code = 1;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace moldkit::cli
