#include "moldkit/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "moldkit/canon.hpp"

namespace moldkit {

namespace {

constexpr std::uint64_t kConjTableLimit = std::uint64_t{1} << 24;

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorCode::BudgetExceeded, "tuple count overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

void validate_key(const CensusKey& key) {
  if (!is_prime(key.q)) throw Error(ErrorCode::InvalidPrime, std::to_string(key.q) + " is not prime");
  if (key.m < 1) throw Error(ErrorCode::ValidationError, "rank must be at least 1");
}

/// One enumeration pass. Workers take shards (first matrix position) from an
/// atomic counter and keep private accumulators merged at the end.
struct Accumulator {
  std::map<Mold, std::uint64_t> points;
  std::map<Mold, std::uint64_t> orbits;
  std::uint64_t nonfree_air = 0;
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> semisimple;

  void merge(Accumulator&& o) {
    for (auto [k, v] : o.points) points[k] += v;
    for (auto [k, v] : o.orbits) orbits[k] += v;
    nonfree_air += o.nonfree_air;
    semisimple.insert(semisimple.end(), std::make_move_iterator(o.semisimple.begin()),
                      std::make_move_iterator(o.semisimple.end()));
  }
};

struct PassConfig {
  bool orbits = false;
  bool semisimple_pairs = false;
};

Accumulator run_pass(const CensusKey& key, const CensusOptions& opts, PassConfig cfg) {
  validate_key(key);
  const std::uint64_t count = tuple_count(key);
  if (count > opts.budget) {
    throw Error(ErrorCode::BudgetExceeded, key.to_string() + " needs " + std::to_string(count) +
                                               " tuples, budget is " + std::to_string(opts.budget));
  }
  const FiniteGeometry geo(key.q);
  std::vector<std::uint32_t> admissible;
  if (key.mode == Mode::Group) {
    admissible = geo.invertible();
  } else {
    admissible.resize(geo.matrix_count());
    for (std::uint32_t i = 0; i < geo.matrix_count(); ++i) admissible[i] = i;
  }
  const std::uint64_t radix = geo.matrix_count();
  const std::size_t n_adm = admissible.size();
  const std::uint32_t m = key.m;
  const std::size_t group_size = geo.pgl().size();

  auto work_shard = [&](std::size_t first, Accumulator& acc) {
    std::vector<std::size_t> pos(m, 0);
    pos[0] = first;
    std::vector<std::uint32_t> idx(m);
    std::vector<std::uint32_t> img(m);
    std::vector<Mat2<Fp>> gens;
    gens.reserve(m);
    while (true) {
      std::uint64_t code = 0;
      gens.clear();
      for (std::uint32_t k = 0; k < m; ++k) {
        idx[k] = admissible[pos[k]];
        code = code * radix + idx[k];
        gens.push_back(geo.matrix(idx[k]));
      }
      const RepTuple<Fp> t(gens, key.mode);
      const Mold label = classify(t);
      ++acc.points[label];

      if (cfg.orbits) {
        std::uint64_t least = code;
        std::size_t stabilizer = 0;
        for (std::size_t g = 0; g < group_size; ++g) {
          std::uint64_t c = 0;
          for (std::uint32_t k = 0; k < m; ++k) c = c * radix + geo.conj(g, idx[k]);
          if (c < least) least = c;
          if (c == code) ++stabilizer;
        }
        if (least == code) {
          ++acc.orbits[label];
          if (label == Mold::Air && stabilizer != 1) ++acc.nonfree_air;
        }
        if (cfg.semisimple_pairs && label == Mold::SemiSimple) {
          const auto iv = invariant_vector(t);
          std::vector<std::uint32_t> flat;
          for (const auto& d : iv.dets) flat.push_back(d.value());
          for (const auto& [w, v] : iv.traces) flat.push_back(v.value());
          acc.semisimple.emplace_back(std::move(flat), least);
        }
      }

      // Odometer over positions 1..m-1; position 0 is fixed by the shard.
      bool exhausted = true;
      for (std::uint32_t k = m; k > 1;) {
        --k;
        if (++pos[k] < n_adm) {
          exhausted = false;
          break;
        }
        pos[k] = 0;
      }
      if (exhausted) break;
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_adm));
  std::vector<Accumulator> partial(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    for (std::size_t s = next++; s < n_adm; s = next++) work_shard(s, partial[id]);
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }
  Accumulator total;
  for (auto& p : partial) total.merge(std::move(p));
  std::sort(total.semisimple.begin(), total.semisimple.end());
  for (Mold l : kAllMolds) {
    total.points.try_emplace(l, 0);
    if (cfg.orbits) total.orbits.try_emplace(l, 0);
  }
  return total;
}

StratumCounts to_counts(const CensusKey& key, Accumulator& acc, bool orbits) {
  StratumCounts c;
  c.points = acc.points;
  c.total = tuple_count(key);
  c.has_orbits = orbits;
  if (orbits) {
    c.orbits = acc.orbits;
    c.nonfree_air_orbits = acc.nonfree_air;
  }
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<Mold> mold_from_string(const std::string& s) {
  for (Mold l : kAllMolds) {
    if (to_string(l) == s) return l;
  }
  return std::nullopt;
}

std::optional<CheckStatus> status_from_string(const std::string& s) {
  for (auto st : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped, CheckStatus::Flagged}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

}  // namespace

std::string CensusKey::to_string() const {
  return "q=" + std::to_string(q) + " m=" + std::to_string(m) + " mode=" + moldkit::to_string(mode);
}

std::uint64_t gl2_order(std::uint32_t q) {
  const std::uint64_t qq = q;
  return (qq * qq - 1) * (qq * qq - qq);
}

std::uint64_t pgl2_order(std::uint32_t q) {
  const std::uint64_t qq = q;
  return qq * qq * qq - qq;
}

std::uint64_t tuple_count(const CensusKey& key) {
  const std::uint64_t base = key.mode == Mode::Monoid ? checked_pow(key.q, 4) : gl2_order(key.q);
  return checked_pow(base, key.m);
}

FiniteGeometry::FiniteGeometry(std::uint32_t q) : q_(q), spec_(FieldSpec::prime(q)) {
  const std::uint32_t n = q * q * q * q;
  mats_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t a = i / (q * q * q), b = (i / (q * q)) % q, c = (i / q) % q, d = i % q;
    mats_.push_back(Mat2<Fp>::from_ints(spec_, a, b, c, d));
    if (!det(mats_.back()).is_zero()) {
      invertible_.push_back(i);
      const auto& g = mats_.back();
      const Fp& lead = !g.a11.is_zero() ? g.a11 : g.a12;
      if (lead.value() == 1) {
        pgl_.push_back(g);
        pgl_inv_.push_back(inverse(g));
      }
    }
  }
  if (static_cast<std::uint64_t>(pgl_.size()) * n <= kConjTableLimit) {
    conj_table_.resize(pgl_.size() * n);
    for (std::size_t g = 0; g < pgl_.size(); ++g) {
      for (std::uint32_t i = 0; i < n; ++i) conj_table_[g * n + i] = index_of(pgl_inv_[g] * mats_[i] * pgl_[g]);
    }
  }
}

std::uint32_t FiniteGeometry::index_of(const Mat2<Fp>& a) const {
  return ((a.a11.value() * q_ + a.a12.value()) * q_ + a.a21.value()) * q_ + a.a22.value();
}

std::uint32_t FiniteGeometry::conj(std::size_t g_idx, std::uint32_t a_idx) const {
  if (!conj_table_.empty()) return conj_table_[g_idx * mats_.size() + a_idx];
  return index_of(pgl_inv_[g_idx] * mats_[a_idx] * pgl_[g_idx]);
}

StratumCounts stratum_census(const CensusKey& key, const CensusOptions& opts) {
  auto acc = run_pass(key, opts, {});
  return to_counts(key, acc, false);
}

StratumCounts orbit_census(const CensusKey& key, const CensusOptions& opts) {
  auto acc = run_pass(key, opts, {.orbits = true});
  return to_counts(key, acc, true);
}

OrbitDetail orbit_detail(const CensusKey& key, const CensusOptions& opts) {
  auto acc = run_pass(key, opts, {.orbits = true, .semisimple_pairs = true});
  OrbitDetail d;
  d.counts = to_counts(key, acc, true);
  d.semisimple = std::move(acc.semisimple);
  return d;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Flagged: return "flagged";
  }
  return "?";
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

Report consistency_report(const CensusKey& key, const CensusOptions& opts) {
  const OrbitDetail detail = orbit_detail(key, opts);
  const StratumCounts& c = detail.counts;
  Report r{key, c, {}};
  auto pass_if = [](bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; };

  std::uint64_t sum = 0;
  for (auto [l, v] : c.points) sum += v;
  r.checks.push_back({"partition", pass_if(sum == c.total),
                      "sum of strata " + std::to_string(sum) + ", expected " + std::to_string(c.total),
                      "the F_q-points of Rep_2 are the disjoint union of the six mold strata"});

  const std::uint64_t pgl = pgl2_order(key.q);
  const std::uint64_t air_pts = c.points.at(Mold::Air), air_orb = c.orbits.at(Mold::Air);
  const bool free_ok = air_pts % pgl == 0 && air_orb * pgl == air_pts && c.nonfree_air_orbits == 0;
  r.checks.push_back({"air_free_action", pass_if(free_ok),
                      std::to_string(air_pts) + " air points in " + std::to_string(air_orb) +
                          " orbits of size q^3-q=" + std::to_string(pgl) + ", " +
                          std::to_string(c.nonfree_air_orbits) + " with nontrivial stabilizer",
                      "PGL2 acts freely on the absolutely irreducible locus (principal bundle)"});

  std::map<std::vector<std::uint32_t>, std::set<std::uint64_t>> reps_per_iv;
  std::map<std::uint64_t, std::set<std::vector<std::uint32_t>>> ivs_per_rep;
  for (const auto& [iv, rep] : detail.semisimple) {
    reps_per_iv[iv].insert(rep);
    ivs_per_rep[rep].insert(iv);
  }
  std::uint64_t mismatches = 0;
  for (const auto& [iv, reps] : reps_per_iv) mismatches += reps.size() - 1;
  for (const auto& [rep, ivs] : ivs_per_rep) mismatches += ivs.size() - 1;
  const bool ss_ok = mismatches == 0 && reps_per_iv.size() == c.orbits.at(Mold::SemiSimple);
  r.checks.push_back({"semisimple_trace_classification", pass_if(ss_ok),
                      std::to_string(c.orbits.at(Mold::SemiSimple)) + " orbits, " +
                          std::to_string(reps_per_iv.size()) + " distinct invariant vectors, " +
                          std::to_string(mismatches) + " mismatches",
                      "semi-simple representations are equivalent iff their traces agree"});

  if (key.q % 2 == 1 && key.mode == Mode::Monoid) {
    const std::uint64_t qm = checked_pow(key.q, key.m);
    const std::uint64_t expected = qm * (qm - 1) / (key.q - 1);
    const std::uint64_t got = c.orbits.at(Mold::Unipotent);
    r.checks.push_back({"unipotent_orbit_count", pass_if(got == expected),
                        std::to_string(got) + " orbits, q^m(q^m-1)/(q-1)=" + std::to_string(expected),
                        "unipotent moduli of the free monoid: character times Proj of a free rank-m module"});
  } else {
    r.checks.push_back({"unipotent_orbit_count", CheckStatus::Skipped,
                        key.q % 2 == 0 ? "no unipotent stratum in characteristic 2" : "closed form stated for free monoids",
                        "unipotent moduli of the free monoid: character times Proj of a free rank-m module"});
  }

  if (key.q == 2) {
    r.checks.push_back({"unipotent_f2_points", CheckStatus::Flagged,
                        std::to_string(c.orbits.at(Mold::UnipotentF2)) +
                            " orbits reported; agreement with scheme points is not asserted",
                        "(a,b)-chart moduli glued along b(beta) != 0"});
  }
  return r;
}

std::filesystem::path CensusCache::path_for(const CensusKey& key) const {
  return dir_ / ("census-q" + std::to_string(key.q) + "-m" + std::to_string(key.m) + "-" + to_string(key.mode) +
                 ".txt");
}

std::string CensusCache::serialize(const Report& r) {
  std::ostringstream body;
  body << "version\t" << kCensusVersion << "\n";
  body << "q\t" << r.key.q << "\n";
  body << "m\t" << r.key.m << "\n";
  body << "mode\t" << to_string(r.key.mode) << "\n";
  body << "total\t" << r.counts.total << "\n";
  for (auto [l, v] : r.counts.points) body << "points\t" << to_string(l) << "\t" << v << "\n";
  if (r.counts.has_orbits) {
    for (auto [l, v] : r.counts.orbits) body << "orbits\t" << to_string(l) << "\t" << v << "\n";
    body << "nonfree_air_orbits\t" << r.counts.nonfree_air_orbits << "\n";
  }
  for (const auto& ch : r.checks) {
    body << "check\t" << ch.name << "\t" << to_string(ch.status) << "\t" << ch.detail << "\t" << ch.source << "\n";
  }
  const std::string text = body.str();
  std::ostringstream out;
  out << "# moldkit census cache record\n" << text << "checksum\t" << std::hex << fnv1a(text) << "\n";
  return out.str();
}

std::optional<Report> CensusCache::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string body;
  std::string checksum;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("checksum\t", 0) == 0) {
      checksum = line.substr(9);
      break;
    }
    body += line + "\n";
  }
  std::ostringstream expect;
  expect << std::hex << fnv1a(body);
  if (checksum != expect.str()) return std::nullopt;

  Report r{};
  std::istringstream lines(body);
  bool version_ok = false;
  while (std::getline(lines, line)) {
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1) {
      f.push_back(line.substr(start, tab - start));
    }
    f.push_back(line.substr(start));
    try {
      if (f[0] == "version") {
        version_ok = f.size() == 2 && f[1] == kCensusVersion;
      } else if (f[0] == "q") {
        r.key.q = static_cast<std::uint32_t>(std::stoul(f.at(1)));
      } else if (f[0] == "m") {
        r.key.m = static_cast<std::uint32_t>(std::stoul(f.at(1)));
      } else if (f[0] == "mode") {
        r.key.mode = f.at(1) == "group" ? Mode::Group : Mode::Monoid;
      } else if (f[0] == "total") {
        r.counts.total = std::stoull(f.at(1));
      } else if (f[0] == "points" || f[0] == "orbits") {
        auto l = mold_from_string(f.at(1));
        if (!l) return std::nullopt;
        auto& target = f[0] == "points" ? r.counts.points : r.counts.orbits;
        target[*l] = std::stoull(f.at(2));
        if (f[0] == "orbits") r.counts.has_orbits = true;
      } else if (f[0] == "nonfree_air_orbits") {
        r.counts.nonfree_air_orbits = std::stoull(f.at(1));
      } else if (f[0] == "check") {
        auto st = status_from_string(f.at(2));
        if (!st || f.size() != 5) return std::nullopt;
        r.checks.push_back({f[1], *st, f[3], f[4]});
      } else {
        return std::nullopt;
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (!version_ok) return std::nullopt;
  return r;
}

std::optional<Report> CensusCache::load(const CensusKey& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  auto r = deserialize(ss.str());
  if (!r || !(r->key == key)) return std::nullopt;
  return r;
}

void CensusCache::store(const Report& r) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  const auto target = path_for(r.key);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << serialize(r);
  }
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace moldkit
