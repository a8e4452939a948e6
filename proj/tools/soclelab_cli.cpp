// Command-line front end.  Builds a JSON request from the flags, sends it
// through the C interface, and renders the response either verbatim (json)
// or as human-readable text (ascii).
//
// Exit codes: 0 success, 1 invalid input, 2 ambiguous socle diagram,
// 3 verification mismatch.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "soclelab.h"

using json = nlohmann::json;

namespace {

std::vector<long> split_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
  return out;
}

std::vector<std::string> split_strings(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

// "g4" -> "4", "g0p" -> "0p"; floors print top-down, one line per floor.
std::string floor_line(const json& floor) {
  std::string line;
  for (const auto& id : floor) {
    std::string s = id.get<std::string>();
    if (!s.empty() && s[0] == 'g') s = s.substr(1);
    line += (line.empty() ? "" : "⊕") + s;
  }
  return line;
}

void print_floors(const json& floors) {
  for (auto it = floors.rbegin(); it != floors.rend(); ++it)
    std::printf("%s\n", floor_line(*it).c_str());
}

void render_ascii(const json& resp) {
  std::string cmd = resp.value("command", "");
  if (resp.value("status", "") == "error") {
    std::fprintf(stderr, "error: %s\n", resp.value("error", "").c_str());
    return;
  }
  if (cmd == "spectra") {
    for (const auto& entry : resp["table"]) {
      std::printf("module %s\n", entry["module"].get<std::string>().c_str());
      std::printf("  %-10s %9s %12s\n", "ktype", "standard", "irreducible");
      for (const auto& row : entry["rows"])
        std::printf("  %-10s %9ld %12ld\n",
                    row["ktype"].get<std::string>().c_str(),
                    row["standard"].get<long>(),
                    row["irreducible"].get<long>());
    }
  } else if (cmd == "socle") {
    std::printf("series %s pattern %s  sigma %s  nu (%s)\n",
                resp["family"].get<std::string>().c_str(),
                resp["pattern"].get<std::string>().c_str(),
                resp["sigma"].get<std::string>().c_str(),
                [&] {
                  std::string s;
                  for (const auto& v : resp["nu"])
                    s += (s.empty() ? "" : ",") + v.get<std::string>();
                  return s;
                }()
                    .c_str());
    if (resp["status"] == "ambiguous") {
      std::printf("ambiguous: %zu consistent diagrams\n",
                  resp["survivors"].size());
      int n = 0;
      for (const auto& surv : resp["survivors"]) {
        std::printf("-- survivor %d --\n", ++n);
        print_floors(surv);
      }
    } else {
      print_floors(resp["floors"]);
    }
  } else if (cmd == "verify") {
    for (const auto& c : resp["cases"]) {
      bool pass = c["pass"].get<bool>();
      std::printf("%s %s\n", pass ? "PASS" : "FAIL",
                  c["name"].get<std::string>().c_str());
      if (!pass && c.contains("expected"))
        std::printf("     expected %s\n     inferred %s\n",
                    c["expected"].get<std::string>().c_str(),
                    c["inferred"].get<std::string>().c_str());
    }
    std::printf("%d/%d passed\n", resp["passed"].get<int>(),
                resp["total"].get<int>());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift operators, K-spectra, and socle filtrations of the "
               "minimal principal series of SL(3,R) and Sp(2,R)"};
  app.require_subcommand(1);

  std::string group, format = "ascii", data_dir;
  app.add_option("--data-dir", data_dir,
                 "override the catalog/golden data directory");

  auto add_common = [&](CLI::App* sub, bool need_group) {
    auto* g = sub->add_option("--group", group, "sl3 or sp2");
    if (need_group) g->required();
    sub->add_option("--format", format, "ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}));
  };

  std::string lambda, modules, sigma, nu, nu_word, suite;
  long bound = -1;

  CLI::App* sp = app.add_subcommand(
      "spectra", "K-type multiplicity tables of the catalog modules");
  add_common(sp, true);
  sp->add_option("--lambda", lambda, "infinitesimal character, e.g. 2,1")
      ->required();
  sp->add_option("--module", modules,
                 "comma-separated factor ids (default: all)");
  sp->add_option("--bound", bound, "K-type scan bound");

  CLI::App* so = app.add_subcommand(
      "socle", "socle filtration of one principal series");
  add_common(so, true);
  so->add_option("--sigma", sigma, "M-type, s00..s11")->required();
  so->add_option("--nu", nu, "continuous parameter, e.g. 1,0,-1");
  so->add_option("--lambda", lambda,
                 "dominant parameter, used with --nu-word");
  so->add_option("--nu-word", nu_word,
                 "Weyl word applied to --lambda, e.g. r12,e1");

  CLI::App* ve = app.add_subcommand(
      "verify", "regression checks against the golden data");
  add_common(ve, false);
  ve->add_option("--lambda", lambda, "parameters to evaluate at");
  ve->add_option("--suite", suite, "extra suite: oracle");

  CLI11_PARSE(app, argc, argv);

  json req;
  try {
    if (sp->parsed()) {
      req["command"] = "spectra";
      req["group"] = group;
      req["lambda"] = split_longs(lambda);
      if (!modules.empty()) req["modules"] = split_strings(modules);
      if (bound >= 0) req["bound"] = bound;
    } else if (so->parsed()) {
      req["command"] = "socle";
      req["group"] = group;
      req["sigma"] = sigma;
      if (!nu_word.empty()) {
        req["lambda"] = split_longs(lambda);
        req["nu_word"] = split_strings(nu_word);
      } else {
        req["nu"] = split_strings(nu);
      }
    } else {
      req["command"] = "verify";
      if (!suite.empty()) {
        req["suite"] = suite;
      } else {
        if (group.empty()) {
          std::fprintf(stderr, "verify needs --group or --suite\n");
          return SOCLELAB_INVALID_INPUT;
        }
        req["group"] = group;
        if (!lambda.empty()) req["lambda"] = split_longs(lambda);
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return SOCLELAB_INVALID_INPUT;
  }

  soclelab_ctx* ctx = soclelab_create(data_dir.empty() ? nullptr
                                                       : data_dir.c_str());
  if (!ctx) return SOCLELAB_INTERNAL;
  char* response = nullptr;
  int code = soclelab_request(ctx, req.dump().c_str(), &response);
  if (response) {
    if (format == "json") {
      std::printf("%s\n", response);
    } else {
      render_ascii(json::parse(response));
    }
    soclelab_free_string(response);
  } else {
    std::fprintf(stderr, "error: %s\n", soclelab_last_error(ctx));
  }
  soclelab_destroy(ctx);
  if (code == SOCLELAB_INTERNAL) code = SOCLELAB_INVALID_INPUT;
  return code;
}
