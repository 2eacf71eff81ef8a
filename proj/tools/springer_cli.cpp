#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "springer_c.h"

namespace {

int report_error(spr_status s) {
  std::cerr << "error (" << static_cast<int>(s) << "): " << spr_last_error() << "\n";
  return 2;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  spr_string_free(s);
  return out;
}

struct EngineHandle {
  spr_engine* e = nullptr;
  ~EngineHandle() { spr_engine_free(e); }
};

std::vector<int> parse_ns(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

void print_table(const nlohmann::json& rows) {
  size_t w = 5;
  for (const auto& r : rows) w = std::max(w, r["label"].get<std::string>().size());
  for (const auto& r : rows) {
    std::cout << r["label"].get<std::string>() << std::string(w + 2 - r["label"].get<std::string>().size(), ' ');
    std::cout << "closed form: " << (r["closed_form"].is_null() ? std::string("-") : r["closed_form"].get<std::string>());
    if (r.contains("agrees")) std::cout << (r["agrees"].get<bool>() ? "  [agrees]" : "  [DIFFERS]");
    std::cout << "\n" << std::string(w + 2, ' ') << "expansion:   " << r["expansion"].get<std::string>() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Springer correspondences for dihedral groups D_n, n odd"};
  app.require_subcommand(1);

  int n = 5, trunc = 0, jobs = 1;
  std::string format = "table", cache, what, from, to, suite = "paper", ns_text = "3,5,7", preorder;
  bool allow_big = false;
  std::vector<int> only;

  auto* classify = app.add_subcommand("classify", "scan every preorder on Irr(D_n)");
  classify->add_option("--n", n, "odd n >= 3")->required();
  classify->add_option("--trunc", trunc, "truncation degree (default 3n+6)");
  classify->add_option("--jobs", jobs, "worker threads");
  classify->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  classify->add_option("--cache", cache, "directory for persisted trace quotients");
  classify->add_flag("--allow-big", allow_big, "permit n = 9");

  auto* gch = app.add_subcommand("gch", "graded character of a module");
  gch->add_option("--what", what, "P_triv, L:chi1, F:sgn:sgn, J:chi2 or K")->required();
  gch->add_option("--n", n, "odd n >= 3")->required();
  gch->add_option("--trunc", trunc, "truncation degree (default 3n+6)");
  gch->add_option("--preorder", preorder, "relations a<=b;c<=d for --what K (default: strict chain)");
  gch->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* ext = app.add_subcommand("ext", "Ext groups between modules");
  ext->add_option("--from", from, "source module, e.g. Ltriv or F:chi1:sgn")->required();
  ext->add_option("--to", to, "target: L<label> or a module whose dual is taken")->required();
  ext->add_option("--n", n, "odd n >= 3")->required();
  ext->add_option("--trunc", trunc, "truncation degree (default 3n+6)");

  auto* omega = app.add_subcommand("omega", "the matrix Omega of graded multiplicities");
  omega->add_option("--n", n, "odd n >= 3")->required();
  omega->add_option("--trunc", trunc, "expansion degree (default 3n+6)");

  auto* verify = app.add_subcommand("verify", "run the acceptance battery");
  verify->add_option("--suite", suite, "battery name")->check(CLI::IsMember({"paper", "all"}));
  verify->add_option("--n", ns_text, "comma list of n, e.g. 3,5,7");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--only", only, "criterion ids to run");
  verify->add_option("--cache", cache, "directory for persisted trace quotients");
  verify->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (*omega) {
    char* out = nullptr;
    if (auto s = spr_omega(n, trunc, &out)) return report_error(s);
    auto j = nlohmann::json::parse(take(out));
    const auto& labels = j["labels"];
    for (size_t a = 0; a < labels.size(); ++a)
      for (size_t b = 0; b < labels.size(); ++b)
        std::cout << "Omega[" << labels[a].get<std::string>() << "][" << labels[b].get<std::string>()
                  << "] = " << j["rational"][a][b].get<std::string>() << "\n    = "
                  << j["series"][a][b].get<std::string>() << "\n";
    return 0;
  }

  if (*verify) {
    std::vector<int> ns = parse_ns(ns_text);
    unsigned mask = 0;
    for (int k : only) mask |= 1u << k;
    char* out = nullptr;
    int ok = 0;
    if (auto s = spr_verify(ns.data(), static_cast<int>(ns.size()), jobs, cache.empty() ? nullptr : cache.c_str(),
                            mask, &out, &ok))
      return report_error(s);
    auto j = nlohmann::json::parse(take(out));
    if (format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& c : j)
        std::printf("criterion %d %-28s %s  (%.2fs)  %s\n", c["id"].get<int>(), c["name"].get<std::string>().c_str(),
                    c["ok"].get<bool>() ? "PASS" : "FAIL", c["seconds"].get<double>(),
                    c["detail"].get<std::string>().c_str());
    }
    return ok ? 0 : 1;
  }

  if (*classify && (n >= 9 && !allow_big)) {
    std::cerr << "n >= 9 needs --allow-big\n";
    return 2;
  }

  EngineHandle h;
  if (auto s = spr_engine_new(n, trunc, cache.empty() ? nullptr : cache.c_str(), &h.e)) return report_error(s);

  if (*classify) {
    spr_report* r = nullptr;
    if (auto s = spr_classify(h.e, jobs, 1, &r)) return report_error(s);
    char* out = nullptr;
    spr_status s = format == "json" ? spr_report_json(r, &out) : spr_report_table(r, &out);
    long scanned = 0, passed = 0, expected = 0, inconclusive = 0;
    int match = 0;
    spr_report_summary(r, &scanned, &passed, &expected, &inconclusive, &match);
    spr_report_free(r);
    if (s) return report_error(s);
    std::cout << take(out) << (format == "json" ? "\n" : "");
    return match && inconclusive == 0 ? 0 : 1;
  }

  if (*gch) {
    char* out = nullptr;
    if (what == "K") {
      std::string p = preorder;
      if (p.empty()) {
        int C = (n - 1) / 2;
        p = "triv<=chi1";
        for (int i = 1; i < C; ++i) p += ";chi" + std::to_string(i) + "<=chi" + std::to_string(i + 1);
        p += ";chi" + std::to_string(C) + "<=sgn";
      }
      if (auto s = spr_family(h.e, p.c_str(), &out)) return report_error(s);
      auto j = nlohmann::json::parse(take(out));
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      std::cout << "preorder " << j["preorder"].get<std::string>() << "  verdict " << j["status"].get<std::string>()
                << (j["failed"].get<std::string>().empty() ? "" : " (" + j["failed"].get<std::string>() + ")") << "\n";
      for (const char* fam : {"K", "Kt"})
        for (auto it = j[fam].begin(); it != j[fam].end(); ++it) {
          std::cout << fam << "_" << it.key() << ":\n";
          for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
            if (const std::string v = jt.value().get<std::string>(); v != "0" && v.rfind("0 + ", 0) != 0 && v.rfind("O(", 0) != 0)
              std::cout << "  [" << jt.key() << "] " << jt.value().get<std::string>() << "\n";
        }
      return 0;
    }
    if (auto s = spr_gch(h.e, what.c_str(), &out)) return report_error(s);
    auto j = nlohmann::json::parse(take(out));
    if (format == "json") {
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << j["module"].get<std::string>() << "  n=" << j["n"] << " trunc=" << j["trunc"] << "\n";
    print_table(j["table"]);
    return 0;
  }

  if (*ext) {
    char* out = nullptr;
    if (auto s = spr_ext(h.e, from.c_str(), to.c_str(), &out)) return report_error(s);
    auto j = nlohmann::json::parse(take(out));
    std::cout << "Ext^i(" << from << ", " << to << ")  graded by " << j["grading"].get<std::string>() << "\n";
    if (j["ext"].empty()) std::cout << "  all zero\n";
    for (const auto& r : j["ext"])
      std::cout << "  i=" << r["i"] << " d=" << r["degree"] << " dim=" << r["dim"] << "\n";
    return 0;
  }
  return 0;
}
