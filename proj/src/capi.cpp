#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "springer/springer.hpp"
#include "springer_c.h"

using namespace springer;

struct spr_engine {
  std::unique_ptr<Engine> engine;
};

struct spr_report {
  ClassificationReport report;
};

namespace {

thread_local std::string last_error;

spr_status fail(spr_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

spr_status emit(const std::string& s, char** out) {
  if (!out) return fail(SPR_E_INVALID, "null output pointer");
  *out = dup_string(s);
  if (!*out) return fail(SPR_E_INTERNAL, "out of memory");
  return SPR_OK;
}

template <class F>
spr_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const InsufficientTruncation& e) {
    return fail(SPR_E_TRUNCATION, e.what());
  } catch (const NoClosedForm& e) {
    return fail(SPR_E_NO_CLOSED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SPR_E_INVALID, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SPR_E_RANGE, e.what());
  } catch (const std::exception& e) {
    return fail(SPR_E_INTERNAL, e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct ModuleSpec {
  char kind = 'P';
  IrrLabel label;
  LabelSet D;
  std::string text;
};

ModuleSpec parse_module(const GroupParams& g, const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty module spec");
  ModuleSpec m;
  m.text = spec;
  m.kind = spec[0];
  std::string rest = spec.substr(1);
  if (!rest.empty() && (rest[0] == ':' || rest[0] == '_')) rest = rest.substr(1);
  auto parts = split(rest, ':');
  if (parts.empty()) throw std::invalid_argument("module spec '" + spec + "' has no label");
  m.label = IrrLabel::parse(g, parts[0]);
  switch (m.kind) {
    case 'P':
      break;
    case 'L':
      for (const auto& l : all_labels(g)) m.D.insert(l);
      break;
    case 'J':
      m.D = {m.label, IrrLabel::sgn()};
      break;
    case 'F':
      if (parts.size() != 2) throw std::invalid_argument("expected F:<label>:<D>, got '" + spec + "'");
      for (const auto& s : split(parts[1], ',')) m.D.insert(IrrLabel::parse(g, s));
      break;
    default:
      throw std::invalid_argument("unknown module kind in '" + spec + "'");
  }
  if (m.kind != 'F' && parts.size() != 1) throw std::invalid_argument("trailing fields in '" + spec + "'");
  return m;
}

std::string set_json_name(const GroupParams& g, const LabelSet& D) {
  (void)g;
  std::string s;
  for (const auto& l : D) s += (s.empty() ? "" : ",") + l.name();
  return s;
}

}  // namespace

extern "C" {

const char* spr_version(void) { return "1.0.0"; }

const char* spr_last_error(void) { return last_error.c_str(); }

void spr_string_free(char* s) { std::free(s); }

spr_status spr_engine_new(int n, int trunc, const char* cache_dir, spr_engine** out) {
  return guarded([&] {
    if (!out) return fail(SPR_E_INVALID, "null output pointer");
    if (n < 3 || n % 2 == 0) return fail(SPR_E_INVALID, "n must be odd and at least 3");
    if (n > 15) return fail(SPR_E_RANGE, "n above 15 is not supported");
    int N = trunc > 0 ? trunc : default_trunc(n);
    auto* e = new spr_engine{std::make_unique<Engine>(n, N, cache_dir ? cache_dir : "")};
    *out = e;
    return SPR_OK;
  });
}

void spr_engine_free(spr_engine* e) { delete e; }

spr_status spr_engine_info(const spr_engine* e, int* n, int* trunc) {
  if (!e) return fail(SPR_E_INVALID, "null engine");
  if (n) *n = e->engine->params().n;
  if (trunc) *trunc = e->engine->trunc();
  return SPR_OK;
}

spr_status spr_classify(spr_engine* e, int jobs, int properties, spr_report** out) {
  return guarded([&] {
    if (!e || !out) return fail(SPR_E_INVALID, "null argument");
    if (e->engine->params().num_irr() > 8) return fail(SPR_E_RANGE, "too many irreducibles to enumerate preorders");
    ClassifyOptions opt;
    opt.jobs = jobs > 0 ? jobs : 1;
    opt.properties = properties != 0;
    *out = new spr_report{classify(*e->engine, opt)};
    return SPR_OK;
  });
}

void spr_report_free(spr_report* r) { delete r; }

spr_status spr_report_summary(const spr_report* r, long* scanned, long* passed, long* expected, long* inconclusive,
                              int* match) {
  if (!r) return fail(SPR_E_INVALID, "null report");
  const auto& rep = r->report;
  if (scanned) *scanned = rep.scanned;
  if (passed) *passed = static_cast<long>(rep.passed.size());
  if (expected) *expected = static_cast<long>(rep.expected.size());
  if (inconclusive) *inconclusive = static_cast<long>(rep.inconclusive.size());
  if (match) *match = rep.match ? 1 : 0;
  return SPR_OK;
}

spr_status spr_report_json(const spr_report* r, char** out) {
  return guarded([&] {
    if (!r) return fail(SPR_E_INVALID, "null report");
    return emit(to_json(r->report).dump(2), out);
  });
}

spr_status spr_report_table(const spr_report* r, char** out) {
  return guarded([&] {
    if (!r) return fail(SPR_E_INVALID, "null report");
    return emit(to_table(r->report), out);
  });
}

spr_status spr_gch(spr_engine* e, const char* module, char** out_json) {
  return guarded([&] {
    if (!e || !module) return fail(SPR_E_INVALID, "null argument");
    Engine& E = *e->engine;
    const GroupParams& g = E.params();
    ModuleSpec m = parse_module(g, module);
    nlohmann::json j;
    j["module"] = m.text;
    j["n"] = g.n;
    j["trunc"] = E.trunc();
    j["label"] = m.label.name();
    j["D"] = set_json_name(g, m.D);
    TruncatedCharacter chr = E.cache().character(m.label, m.D);
    j["character"] = to_json(g, chr);
    std::optional<GradedCharacter> cf;
    try {
      cf = m.kind == 'P' ? gch_projective(g, m.label) : gch_F_closed(g, m.label, m.D);
      j["closed_form"] = to_json(g, *cf);
    } catch (const NoClosedForm&) {
      j["closed_form"] = nullptr;
    }
    nlohmann::json table = nlohmann::json::array();
    for (const auto& l : all_labels(g)) {
      nlohmann::json row{{"label", l.name()}, {"expansion", chr.at(l).to_string()}};
      row["closed_form"] = cf ? nlohmann::json(cf->at(l).to_string()) : nlohmann::json(nullptr);
      if (cf) row["agrees"] = series_equal(expand(cf->at(l), E.trunc()), chr.at(l));
      table.push_back(row);
    }
    j["table"] = table;
    try {
      j["betti"] = to_json(g, E.cache().betti(m.label, m.D));
    } catch (const std::exception& ex) {
      j["betti"] = nullptr;
      j["betti_error"] = ex.what();
    }
    return emit(j.dump(2), out_json);
  });
}

spr_status spr_family(spr_engine* e, const char* preorder, char** out_json) {
  return guarded([&] {
    if (!e || !preorder) return fail(SPR_E_INVALID, "null argument");
    Engine& E = *e->engine;
    const GroupParams& g = E.params();
    std::vector<std::pair<int, int>> edges;
    for (const auto& s : split(preorder, ';')) {
      auto pos = s.find("<=");
      if (pos == std::string::npos) throw std::invalid_argument("expected 'a<=b', got '" + s + "'");
      edges.push_back({IrrLabel::parse(g, s.substr(0, pos)).index(g), IrrLabel::parse(g, s.substr(pos + 2)).index(g)});
    }
    Preorder p = Preorder::closure(g.num_irr(), edges);
    CandidateFamily fam = build_family(E, p);
    nlohmann::json j;
    j["n"] = g.n;
    j["trunc"] = E.trunc();
    j["preorder"] = describe(g, p);
    nlohmann::json K = nlohmann::json::object(), Kt = nlohmann::json::object(), D = nlohmann::json::object();
    for (int i = 0; i < p.size(); ++i) {
      std::string name = IrrLabel::from_index(g, i).name();
      nlohmann::json kr = nlohmann::json::object(), ktr = nlohmann::json::object();
      for (const auto& l : all_labels(g)) {
        kr[l.name()] = fam.K[i].at(l).to_string();
        ktr[l.name()] = fam.Kt[i].at(l).to_string();
      }
      K[name] = kr;
      Kt[name] = ktr;
      D[name] = set_json_name(g, fam.D[i]);
    }
    j["K"] = K;
    j["Kt"] = Kt;
    j["D"] = D;
    Verdict v = evaluate(E, p);
    j["status"] = v.status == Verdict::Status::Pass ? "pass" : v.status == Verdict::Status::Fail ? "fail" : "inconclusive";
    j["failed"] = v.failed;
    j["detail"] = v.detail;
    return emit(j.dump(2), out_json);
  });
}

spr_status spr_ext(spr_engine* e, const char* from, const char* to, char** out_json) {
  return guarded([&] {
    if (!e || !from || !to) return fail(SPR_E_INVALID, "null argument");
    Engine& E = *e->engine;
    const GroupParams& g = E.params();
    ModuleSpec a = parse_module(g, from), b = parse_module(g, to);
    nlohmann::json j;
    j["from"] = a.text;
    j["to"] = b.text;
    j["n"] = g.n;
    j["trunc"] = E.trunc();
    nlohmann::json rows = nlohmann::json::array();
    if (b.kind == 'L') {
      BettiTable bt = E.cache().betti(a.label, a.D);
      j["valid_to"] = bt.valid_to;
      j["grading"] = "generator degree";
      for (const auto& [k, v] : ext_to_simple(bt, b.label)) rows.push_back({{"i", k.first}, {"degree", k.second}, {"dim", v}});
    } else {
      auto res = E.cache().resolution(a.label, a.D);
      auto dual = E.cache().dual(b.label, b.D);
      ExtTable t = ext_to_dual(g, *res, *dual);
      j["grading"] = "Hom degree";
      j["window_lo"] = t.window_lo;
      for (const auto& [k, v] : t.dims) rows.push_back({{"i", k.first}, {"degree", k.second}, {"dim", v}});
    }
    j["ext"] = rows;
    return emit(j.dump(2), out_json);
  });
}

spr_status spr_omega(int n, int trunc, char** out_json) {
  return guarded([&] {
    if (n < 3 || n % 2 == 0) return fail(SPR_E_INVALID, "n must be odd and at least 3");
    GroupParams g(n);
    int N = trunc > 0 ? trunc : default_trunc(n);
    OmegaMatrix om = omega(g);
    nlohmann::json j;
    j["n"] = n;
    j["trunc"] = N;
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : all_labels(g)) labels.push_back(l.name());
    j["labels"] = labels;
    nlohmann::json rat = nlohmann::json::array(), ser = nlohmann::json::array();
    for (const auto& row : om) {
      nlohmann::json r1 = nlohmann::json::array(), r2 = nlohmann::json::array();
      for (const auto& x : row) {
        r1.push_back(x.to_string());
        r2.push_back(expand(x, N).to_string());
      }
      rat.push_back(r1);
      ser.push_back(r2);
    }
    j["rational"] = rat;
    j["series"] = ser;
    return emit(j.dump(2), out_json);
  });
}

spr_status spr_verify(const int* ns, int count, int jobs, const char* cache_dir, unsigned only_mask, char** out_json,
                      int* all_ok) {
  return guarded([&] {
    VerifyOptions opt;
    if (ns && count > 0) opt.ns.assign(ns, ns + count);
    for (int n : opt.ns)
      if (n < 3 || n % 2 == 0 || n > 7) return fail(SPR_E_INVALID, "verify supports odd n in 3..7");
    opt.jobs = jobs > 0 ? jobs : 1;
    if (cache_dir) opt.cache_dir = cache_dir;
    for (int k = 1; k <= 9; ++k)
      if ((only_mask >> k) & 1u) opt.only.push_back(k);
    auto res = verify_suite(opt);
    bool ok = !res.empty();
    for (const auto& r : res) ok = ok && r.ok;
    if (all_ok) *all_ok = ok ? 1 : 0;
    return emit(to_json(res).dump(2), out_json);
  });
}

}  // extern "C"
