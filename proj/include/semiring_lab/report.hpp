#pragma once

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "enumerator.hpp"
#include "registry.hpp"

namespace semiring_lab {

struct CorpusEntry {
  std::string name;
  FiniteSemiring semiring;
};

struct Corpus {
  std::string descriptor;
  std::vector<CorpusEntry> entries;
};

/// Every semiring of order 2..max_order, one per isomorphism class.
inline Corpus corpus_up_to(std::size_t max_order, bool allow_large = false) {
  Corpus c{"all semirings of order <= " + std::to_string(max_order), {}};
  for (std::size_t n = 2; n <= max_order; ++n) {
    const auto found = enumerate_semirings(n, allow_large);
    for (std::size_t k = 0; k < found.size(); ++k)
      c.entries.push_back({"n" + std::to_string(n) + "." + std::to_string(k), found[k]});
  }
  return c;
}

inline Corpus fixture_corpus(const std::vector<std::string>& names) {
  Corpus c{"fixtures", {}};
  for (const auto& n : names) c.entries.push_back({n, fixture(n)});
  return c;
}

inline json to_jsonl_line(const CorpusEntry& e) {
  json j = {{"name", e.name}};
  j.update(to_json(e.semiring));
  return j;
}

/// One semiring per line: a table object (optional "name") or a fixture
/// name as a JSON string.
inline Corpus read_corpus(std::istream& in, std::string descriptor) {
  Corpus c{std::move(descriptor), {}};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw MalformedTables("corpus line " + std::to_string(lineno) + ": " + e.what());
    }
    if (j.is_string()) {
      c.entries.push_back({j.get<std::string>(), fixture(j.get<std::string>())});
    } else {
      auto name = j.is_object() && j.contains("name") ? j.at("name").get<std::string>() : "line" + std::to_string(lineno);
      c.entries.push_back({std::move(name), semiring_from_json(j)});
    }
  }
  return c;
}

inline Corpus read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot open corpus '" + path + "'");
  return read_corpus(in, path);
}

struct PropositionResult {
  const Proposition* prop;
  Verdict verdict;
};

struct SemiringResult {
  std::string name;
  FiniteSemiring semiring;
  TableEncoding encoding;
  std::vector<PropositionResult> results;
};

struct AuditReport {
  std::string corpus;
  std::vector<const Proposition*> propositions;
  std::vector<SemiringResult> semirings;
  double elapsed_seconds = 0;
  std::string generated_at;

  /// (semiring name, proposition id) for every failed PROVEN entry.
  std::vector<std::pair<std::string, std::string>> proven_failures() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : semirings)
      for (const auto& r : s.results)
        if (r.prop->tag == Tag::proven && r.verdict.status == Status::fail) out.emplace_back(s.name, r.prop->id);
    return out;
  }
};

inline std::vector<PropositionResult> evaluate_all(const FiniteSemiring& s, const std::vector<const Proposition*>& props,
                                                   const AuditOptions& opt) {
  const Analysis an(s);
  const EvalContext ctx(an, opt);
  std::vector<PropositionResult> out;
  out.reserve(props.size());
  for (const auto* p : props) out.push_back({p, p->evaluate(ctx)});
  return out;
}

/// Evaluates the selected propositions on every corpus member, one task per
/// semiring. Rows come back ordered by (canonical encoding, name) and, within a
/// row, by proposition id.
inline AuditReport run_audit(const Corpus& corpus, const PropositionRegistry& registry,
                             const std::vector<std::string>& filters = {}, const AuditOptions& opt = {},
                             unsigned threads = std::thread::hardware_concurrency()) {
  if (corpus.entries.empty()) throw CorpusEmpty();
  const auto start = std::chrono::steady_clock::now();
  AuditReport report;
  report.corpus = corpus.descriptor;
  report.propositions = registry.select(filters);
  std::sort(report.propositions.begin(), report.propositions.end(),
            [](const Proposition* a, const Proposition* b) { return a->id < b->id; });

  const auto n = corpus.entries.size();
  report.semirings.resize(n, SemiringResult{{}, corpus.entries[0].semiring, {}, {}});
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const auto& e = corpus.entries[i];
        report.semirings[i] = {e.name, e.semiring, canonical_encoding(e.semiring),
                               evaluate_all(e.semiring, report.propositions, opt)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(report.semirings.begin(), report.semirings.end(), [](const SemiringResult& a, const SemiringResult& b) {
    return std::tie(a.encoding, a.name) < std::tie(b.encoding, b.name);
  });
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  report.generated_at = ts.str();
  return report;
}

/// A self-contained, replayable record of one FAIL verdict.
inline json make_certificate(const Proposition& p, const FiniteSemiring& s, const Verdict& v) {
  return json{{"proposition", p.id},
              {"semiring", to_json(s)},
              {"witness", v.witness ? to_json(*v.witness) : json::object()},
              {"verdict", to_string(v.status)},
              {"detail", v.detail},
              {"replay", "semiring-lab replay <this file>"}};
}

inline const std::vector<std::string>& report_notes() {
  static const std::vector<std::string> notes = {
      "radical(a) is the intersection of the proper prime ideals above a; with none above a (a = S) it is S",
      "slocal.loc reads its hypothesis as X ∩ m = ∅ for the unique maximal semisubtractive ideal m",
      "bijection is reported on all of Id_s; bijection.restricted on the ideals inside V(S), with Ψ(Φ(a)) = a ∩ V(S) checked on every semisubtractive ideal",
  };
  return notes;
}

/// Report JSON. Everything outside "timestamp" depends only on the corpus,
/// the selection and the options.
inline json to_json(const AuditReport& r, bool with_timestamp = true) {
  json props = json::array();
  for (const auto* p : r.propositions) {
    std::size_t pass = 0, fail = 0, vacuous = 0;
    for (const auto& s : r.semirings)
      for (const auto& x : s.results)
        if (x.prop == p) (x.verdict.status == Status::pass ? pass : x.verdict.status == Status::fail ? fail : vacuous)++;
    props.push_back({{"id", p->id},
                     {"title", p->title},
                     {"module", p->module},
                     {"tag", to_string(p->tag)},
                     {"counts", {{"PASS", pass}, {"FAIL", fail}, {"VACUOUS", vacuous}}}});
  }
  json rows = json::array();
  for (const auto& s : r.semirings) {
    json verdicts = json::array();
    for (const auto& x : s.results) {
      json v = {{"id", x.prop->id}, {"status", to_string(x.verdict.status)}, {"detail", x.verdict.detail}};
      if (!x.verdict.data.empty()) v["data"] = x.verdict.data;
      if (x.verdict.status == Status::fail) v["certificate"] = make_certificate(*x.prop, s.semiring, x.verdict);
      verdicts.push_back(std::move(v));
    }
    rows.push_back({{"name", s.name}, {"semiring", to_json(s.semiring)}, {"verdicts", std::move(verdicts)}});
  }
  json failures = json::array();
  for (const auto& [name, id] : r.proven_failures()) failures.push_back({{"semiring", name}, {"proposition", id}});
  json out = {{"corpus", {{"descriptor", r.corpus}, {"size", r.semirings.size()}}},
              {"notes", report_notes()},
              {"propositions", std::move(props)},
              {"proven_failures", std::move(failures)},
              {"results", std::move(rows)}};
  if (with_timestamp) out["timestamp"] = {{"generated_at", r.generated_at}, {"elapsed_seconds", r.elapsed_seconds}};
  return out;
}

inline std::string to_markdown(const AuditReport& r) {
  const auto j = to_json(r, false);
  std::ostringstream os;
  os << "# Audit summary\n\nCorpus: " << r.corpus << " (" << r.semirings.size() << " semirings)\n\n";
  os << "| id | tag | PASS | FAIL | VACUOUS | title |\n|---|---|---:|---:|---:|---|\n";
  for (const auto& p : j.at("propositions"))
    os << "| " << p.at("id").get<std::string>() << " | " << p.at("tag").get<std::string>() << " | "
       << p.at("counts").at("PASS") << " | " << p.at("counts").at("FAIL") << " | " << p.at("counts").at("VACUOUS")
       << " | " << p.at("title").get<std::string>() << " |\n";
  const auto failures = r.proven_failures();
  os << "\n## PROVEN failures\n\n";
  if (failures.empty()) os << "None.\n";
  for (const auto& [name, id] : failures) os << "- " << id << " on " << name << "\n";
  os << "\n## First counterexample per proposition\n\n";
  bool any = false;
  for (const auto* p : r.propositions)
    for (const auto& s : r.semirings) {
      auto it = std::find_if(s.results.begin(), s.results.end(), [&](const PropositionResult& x) { return x.prop == p; });
      if (it == s.results.end() || it->verdict.status != Status::fail) continue;
      any = true;
      os << "- **" << p->id << "** on " << s.name << ": " << it->verdict.detail << "; witness `"
         << to_json(*it->verdict.witness).dump() << "`\n";
      break;
    }
  if (!any) os << "None.\n";
  os << "\n## Notes\n\n";
  for (const auto& n : report_notes()) os << "- " << n << "\n";
  return os.str();
}

struct ReplayOutcome {
  std::string proposition;
  Status recorded;
  Status replayed;
  bool matches() const { return recorded == replayed; }
};

/// Re-evaluates the cited proposition on the embedded semiring and witness.
inline ReplayOutcome replay(const json& cert, const PropositionRegistry& registry = default_registry()) {
  if (!cert.is_object()) throw MalformedCertificate("certificate must be an object");
  for (const char* k : {"proposition", "semiring", "witness", "verdict"})
    if (!cert.contains(k)) throw MalformedCertificate(std::string("certificate lacks '") + k + "'");
  if (!cert.at("proposition").is_string() || !cert.at("verdict").is_string())
    throw MalformedCertificate("proposition and verdict must be strings");
  const auto id = cert.at("proposition").get<std::string>();
  const auto* p = registry.find(id);
  if (!p) throw MalformedCertificate("unknown proposition '" + id + "'");
  const auto recorded = status_from_string(cert.at("verdict").get<std::string>());
  try {
    const Analysis an(semiring_from_json(cert.at("semiring")));
    const auto w = witness_from_json(an.semiring(), cert.at("witness"));
    return {id, recorded, p->refutes(an, w) ? Status::fail : Status::pass};
  } catch (const MalformedCertificate&) {
    throw;
  } catch (const json::exception& e) {
    throw MalformedCertificate(e.what());
  } catch (const Error& e) {
    throw MalformedCertificate(e.what());
  }
}

/// The same certificate after renaming the semiring's elements by perm
/// (perm[old] = new, fixing 0 and 1). Target-side data is untouched.
inline json relabel_certificate(const json& cert, const std::vector<Element>& perm) {
  const auto s = semiring_from_json(cert.at("semiring"));
  auto w = witness_from_json(s, cert.at("witness"));
  const auto t = relabel(s, perm);
  auto map_set = [&](std::vector<Element>& xs) {
    for (auto& x : xs) x = perm.at(x);
    std::sort(xs.begin(), xs.end());
  };
  for (auto& [k, xs] : w.sets) map_set(xs);
  for (auto& [k, x] : w.elements) x = perm.at(x);
  for (auto& [k, f] : w.families) {
    for (auto& xs : f) map_set(xs);
    std::sort(f.begin(), f.end());
  }
  if (w.hom) {
    std::vector<Element> map(w.hom->map.size());
    for (std::size_t x = 0; x < map.size(); ++x) map[perm[x]] = w.hom->map[x];
    w.hom = SemiringHom{t, w.hom->target, std::move(map)};
  }
  json out = cert;
  out["semiring"] = to_json(t);
  out["witness"] = to_json(w);
  return out;
}

}  // namespace semiring_lab
