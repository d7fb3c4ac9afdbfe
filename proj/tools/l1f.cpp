// l1f: exact decision of L(1,f) = 0 for periodic functions with cyclotomic
// values, plus high-precision numeric evaluation.
//
// Exit codes: 0 decided/ok, 1 parse or validation error, 2 divergent input
// (nonzero period sum), 3 invalid parameters, 4 internal invariant failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "l1f/decision.hpp"
#include "l1f/errors.hpp"
#include "l1f/io.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDivergent = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitInternal = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw l1f::ParseError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const l1f::ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const l1f::DivergentSeries*>(&e)) return kExitDivergent;
  if (dynamic_cast<const l1f::DomainError*>(&e)) return kExitInvalid;
  return kExitInternal;
}

struct CheckFlags {
  long bits = 256;
  std::string route = "log";
  bool no_numeric = false;
  long periods = 1 << 12;
};

l1f::Verdict run_check(const std::string& text, const CheckFlags& flags) {
  l1f::PeriodicFunction f = l1f::parse_function_document(text);
  l1f::DecideOptions opt;
  opt.precision_bits = flags.bits;
  opt.with_numeric = !flags.no_numeric;
  opt.route = l1f::route_from_name(flags.route);
  opt.partial_periods = flags.periods;
  return l1f::decide(f, opt);
}

// Batch mode: one verdict per *.json file in the directory, processed
// concurrently, reported in sorted order with a summary. The exit code is
// the most severe per-file status (error > divergent > decided).
int run_batch(const fs::path& dir, const CheckFlags& flags) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Item {
    int code;
    Json payload;
  };
  std::vector<std::future<Item>> jobs;
  jobs.reserve(files.size());
  for (const fs::path& p : files) {
    jobs.push_back(std::async(std::launch::async, [p, &flags]() -> Item {
      try {
        const l1f::Verdict v = run_check(read_input(p.string()), flags);
        Json j;
        j["file"] = p.filename().string();
        j["status"] = "decided";
        j["verdict"] = Json::parse(l1f::serialize_verdict(v));
        return {kExitOk, std::move(j)};
      } catch (const std::exception& e) {
        Json j;
        j["file"] = p.filename().string();
        j["status"] =
            exit_code_for(e) == kExitDivergent ? "divergent" : "error";
        j["message"] = e.what();
        return {exit_code_for(e), std::move(j)};
      }
    }));
  }

  Json out;
  out["v"] = 1;
  Json arr = Json::array();
  long decided = 0, vanishing = 0, divergent = 0, errors = 0;
  int worst = kExitOk;
  const auto severity = [](int code) {
    if (code == kExitOk) return 0;
    if (code == kExitDivergent) return 1;
    return 2;  // parse/validation and internal errors dominate
  };
  for (auto& job : jobs) {
    Item item = job.get();
    if (item.code == kExitOk) {
      ++decided;
      if (item.payload["verdict"]["vanishes"].get<bool>()) ++vanishing;
    } else if (item.code == kExitDivergent) {
      ++divergent;
    } else {
      ++errors;
      item.code = kExitParse;
    }
    if (severity(item.code) > severity(worst)) worst = item.code;
    arr.push_back(std::move(item.payload));
  }
  out["files"] = std::move(arr);
  out["summary"] = Json{{"total", files.size()},
                        {"decided", decided},
                        {"vanishing", vanishing},
                        {"divergent", divergent},
                        {"errors", errors}};
  std::cout << out.dump(2) << "\n";
  return worst;
}

int run_generate(const std::string& kind, long q, std::uint64_t p,
                 std::uint64_t seed, bool self_check) {
  l1f::PeriodicFunction f = l1f::PeriodicFunction::zero(1);
  bool expect_vanishing = true;
  if (kind == "paper-example") {
    f = l1f::example_paper(p);
  } else if (kind == "even-vanishing") {
    f = l1f::gen_even_vanishing(q, seed);
  } else if (kind == "odd-vanishing") {
    f = l1f::gen_odd_vanishing(q, seed);
  } else if (kind == "character") {
    f = l1f::gen_character(q);
    expect_vanishing = false;
  } else {
    throw l1f::DomainError("unknown generator kind \"" + kind + "\"");
  }

  if (self_check) {
    const l1f::Verdict v = l1f::decide(f);
    if (v.vanishes != expect_vanishing) {
      throw l1f::InternalError("self-check failed: expected vanishes = " +
                               std::string(expect_vanishing ? "true" : "false"));
    }
  }
  std::cout << l1f::serialize_function(f);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact vanishing decisions and high-precision values of "
               "L(1,f) for periodic arithmetic functions"};
  app.require_subcommand(1);

  CheckFlags flags;
  std::string path;
  std::string kind;
  long q = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  bool self_check = false;
  std::vector<std::string> routes;

  auto add_numeric_flags = [&](CLI::App* cmd) {
    cmd->add_option("--bits", flags.bits,
                    "working precision in bits (default 256)")
        ->envname("L1F_BITS");
    cmd->add_option("--periods", flags.periods,
                    "periods summed by the partial-sum route");
  };

  CLI::App* check = app.add_subcommand(
      "check", "decide L(1,f) = 0 for a function document (file or directory)");
  check->add_option("path", path, "JSON document, '-' for stdin, or directory")
      ->required();
  check->add_option("--route", flags.route,
                    "numeric route: log, split, partial");
  check->add_flag("--no-numeric", flags.no_numeric,
                  "skip the numeric cross-check");
  add_numeric_flags(check);

  CLI::App* generate =
      app.add_subcommand("generate", "emit a function document");
  generate->add_option("kind", kind,
                       "paper-example | even-vanishing | odd-vanishing | character")
      ->required();
  generate->add_option("-q,--modulus", q, "period");
  generate->add_option("-p,--prime", prime, "prime for paper-example");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_flag("--self-check", self_check,
                     "decide the output and assert the expected verdict");

  long listing_q = 0;
  CLI::App* blocks =
      app.add_subcommand("blocks", "list building blocks F_{d,c} for q");
  blocks->add_option("q", listing_q, "period")->required();
  CLI::App* relations =
      app.add_subcommand("relations", "list R1/R2 relation vectors for q");
  relations->add_option("q", listing_q, "period")->required();

  CLI::App* fourier =
      app.add_subcommand("fourier", "emit the exact Fourier transform");
  fourier->add_option("path", path, "JSON document or '-'")->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "emit the odd and even parts");
  decompose->add_option("path", path, "JSON document or '-'")->required();

  CLI::App* eval =
      app.add_subcommand("eval", "numerically evaluate L(1,f)");
  eval->add_option("path", path, "JSON document or '-'")->required();
  eval->add_option("--route", routes,
                   "route(s): log, split, partial (repeatable)");
  add_numeric_flags(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (check->parsed()) {
      if (path != "-" && fs::is_directory(path)) return run_batch(path, flags);
      const l1f::Verdict v = run_check(read_input(path), flags);
      std::cout << l1f::serialize_verdict(v);
      return kExitOk;
    }
    if (generate->parsed())
      return run_generate(kind, q, prime, seed, self_check);
    if (blocks->parsed()) {
      std::cout << l1f::serialize_blocks(listing_q);
      return kExitOk;
    }
    if (relations->parsed()) {
      std::cout << l1f::serialize_relations(listing_q);
      return kExitOk;
    }
    if (fourier->parsed()) {
      const auto f = l1f::parse_function_document(read_input(path));
      std::cout << l1f::serialize_spectral(l1f::dft(f));
      return kExitOk;
    }
    if (decompose->parsed()) {
      const auto f = l1f::parse_function_document(read_input(path));
      std::cout << l1f::serialize_decomposition(f);
      return kExitOk;
    }
    if (eval->parsed()) {
      const auto f = l1f::parse_function_document(read_input(path));
      if (routes.empty()) routes.push_back("log");
      Json out;
      out["v"] = 1;
      Json results = Json::array();
      for (const std::string& r : routes) {
        l1f::NumericResult res = [&] {
          switch (l1f::route_from_name(r)) {
            case l1f::Route::SplitForm:
              return l1f::eval_L1_split(f, flags.bits);
            case l1f::Route::PartialSum:
              return l1f::eval_L1_partial(f, flags.periods, flags.bits);
            case l1f::Route::LogForm:
            default:
              return l1f::eval_L1_fourier(f, flags.bits);
          }
        }();
        results.push_back(Json::parse(l1f::serialize_numeric(res)));
      }
      out["results"] = std::move(results);
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "l1f: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitOk;
}
